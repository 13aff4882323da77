//! Spectral radius with certified error, classical bound checks and the edge
//! rotation lemma.
//!
//! The spectral radius is computed per connected component by power iteration
//! on `A + I`, which is primitive on a connected component and so converges
//! even on bipartite components. For a positive vector `x` the
//! Collatz–Wielandt quotients `(Ax)_i / x_i` bracket the spectral radius from
//! both sides, which gives the certified interval.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::canon::refine;
use crate::constructions::turan;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::contains_clique;
use crate::poly::{char_poly, compare_largest_roots, LargestRoot, Poly, EXACT_CAP};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Perron entries closer than this are compared on the exact path.
const PERRON_MARGIN: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// The true spectral radius lies in `[rho - err, rho + err]`.
    pub err: f64,
    /// Unit Perron vector supported on one component attaining the radius.
    pub perron: Vec<f64>,
    pub iterations: usize,
}

impl SpectralResult {
    pub fn lower(&self) -> f64 {
        self.rho - self.err
    }

    pub fn upper(&self) -> f64 {
        self.rho + self.err
    }

    /// `|A x - rho x|_inf` for the stored vector.
    pub fn residual(&self, g: &Graph) -> f64 {
        (0..g.n())
            .map(|i| {
                let ax: f64 = Bits(g.neighbors(i)).map(|j| self.perron[j]).sum();
                (ax - self.rho * self.perron[i]).abs()
            })
            .fold(0.0, f64::max)
    }
}

struct ComponentRadius {
    lo: f64,
    hi: f64,
    vector: Vec<f64>,
    iterations: usize,
}

fn component_radius(g: &Graph, comp: u64, tol: f64) -> Result<ComponentRadius> {
    let n = g.n();
    if comp & (comp - 1) == 0 {
        let mut vector = vec![0.0; n];
        vector[comp.trailing_zeros() as usize] = 1.0;
        return Ok(ComponentRadius {
            lo: 0.0,
            hi: 0.0,
            vector,
            iterations: 0,
        });
    }
    let verts: Vec<usize> = Bits(comp).collect();
    let mut x = vec![0.0f64; n];
    let init = 1.0 / (verts.len() as f64).sqrt();
    for &v in &verts {
        x[v] = init;
    }
    let mut y = vec![0.0f64; n];
    let mut best_width = f64::INFINITY;
    let mut stalled = 0usize;
    for it in 1..=MAX_ITERATIONS {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for &v in &verts {
            let s: f64 = Bits(g.neighbors(v)).map(|u| x[u]).sum();
            y[v] = s;
            let r = s / x[v];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        // Rounding in the quotients is a few ulps of the degree-scale sums.
        let slack = 8.0 * f64::EPSILON * (hi.abs() + 1.0) * (verts.len() as f64);
        let (lo, hi) = (lo - slack, hi + slack);
        if (hi - lo) / 2.0 <= tol {
            return Ok(ComponentRadius {
                lo,
                hi,
                vector: x,
                iterations: it,
            });
        }
        if hi - lo < best_width * 0.999_999 {
            best_width = hi - lo;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled > 10_000 || it == MAX_ITERATIONS {
                return Err(Error::Precision {
                    achieved: best_width / 2.0,
                    requested: tol,
                });
            }
        }
        let mut norm = 0.0;
        for &v in &verts {
            y[v] += x[v];
            norm += y[v] * y[v];
        }
        let norm = norm.sqrt();
        for &v in &verts {
            x[v] = y[v] / norm;
        }
    }
    Err(Error::Precision {
        achieved: best_width / 2.0,
        requested: tol,
    })
}

/// Spectral radius of the adjacency matrix with certified error at most `tol`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    if g.n() == 0 {
        return Err(Error::domain("spectral radius needs at least one vertex"));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain(format!("tolerance must be positive and finite (got {tol})")));
    }
    let mut best: Option<ComponentRadius> = None;
    let mut hi_all = f64::NEG_INFINITY;
    let mut iterations = 0;
    for comp in g.components() {
        let c = component_radius(g, comp, tol)?;
        iterations += c.iterations;
        hi_all = hi_all.max(c.hi);
        if best.as_ref().is_none_or(|b| c.lo > b.lo) {
            best = Some(c);
        }
    }
    let best = best.expect("at least one component");
    let lo = best.lo;
    Ok(SpectralResult {
        rho: (lo + hi_all) / 2.0,
        err: (hi_all - lo) / 2.0,
        perron: best.vector,
        iterations,
    })
}

/// Exact isolating interval for the spectral radius (largest adjacency eigenvalue).
pub fn exact_radius(g: &Graph) -> Result<LargestRoot> {
    let c = char_poly(g)?;
    Ok(LargestRoot::from_ints(&c).expect("a symmetric matrix has real eigenvalues"))
}

/// Orders two graphs by spectral radius. Floating-point intervals decide
/// only when they separate; equality is only ever declared by the exact
/// characteristic-polynomial path.
pub fn compare_rho(a: &Graph, b: &Graph) -> Result<Ordering> {
    compare_rho_traced(a, b).map(|(o, _)| o)
}

/// As [`compare_rho`], also reporting whether the exact path was needed.
pub fn compare_rho_traced(a: &Graph, b: &Graph) -> Result<(Ordering, bool)> {
    if a.n() == 0 || b.n() == 0 {
        return Err(Error::domain("compare_rho needs nonempty graphs"));
    }
    for tol in [1e-10, 1e-13] {
        let (Ok(ra), Ok(rb)) = (spectral_radius(a, tol), spectral_radius(b, tol)) else {
            continue;
        };
        if let Some(o) = separated(&ra, &rb) {
            return Ok((o, false));
        }
    }
    Ok((compare_rho_exact(a, b)?, true))
}

/// Ordering implied by two certified intervals, if they are disjoint.
pub fn separated(a: &SpectralResult, b: &SpectralResult) -> Option<Ordering> {
    if a.upper() < b.lower() {
        Some(Ordering::Less)
    } else if b.upper() < a.lower() {
        Some(Ordering::Greater)
    } else {
        None
    }
}

pub fn compare_rho_exact(a: &Graph, b: &Graph) -> Result<Ordering> {
    if a.n() > EXACT_CAP || b.n() > EXACT_CAP {
        return Err(Error::Undecidable(format!(
            "certified intervals overlap and exact path is limited to {EXACT_CAP} vertices (got {} and {})",
            a.n(),
            b.n()
        )));
    }
    let mut ra = exact_radius(a)?;
    let mut rb = exact_radius(b)?;
    Ok(compare_largest_roots(&mut ra, &mut rb))
}

/// Outcome of a classical spectral bound check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub rho: f64,
    pub err: f64,
    pub bound: f64,
    /// `bound - rho`.
    pub slack: f64,
    pub holds: bool,
    /// The certified interval touches the bound.
    pub equality_candidate: bool,
    /// Exact ordering of `rho` against the extremal graph, where one was computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

fn report(res: &SpectralResult, bound: f64, bound_err: f64) -> BoundReport {
    let fuzz = 4.0 * f64::EPSILON * (bound.abs() + 1.0);
    BoundReport {
        rho: res.rho,
        err: res.err,
        bound,
        slack: bound - res.rho,
        holds: res.lower() <= bound + bound_err + fuzz,
        equality_candidate: (bound - res.rho).abs() <= res.err + bound_err + fuzz,
        exact: None,
    }
}

fn require_clique_free(g: &Graph, k: usize) -> Result<()> {
    if contains_clique(g, k)?.is_some() {
        return Err(Error::domain(format!("graph contains K_{k}")));
    }
    Ok(())
}

/// `ρ(G) <= sqrt(m)` for triangle-free `G`.
pub fn check_nosal(g: &Graph) -> Result<BoundReport> {
    require_clique_free(g, 3)?;
    let res = spectral_radius(g, DEFAULT_TOL)?;
    Ok(report(&res, (g.edge_count() as f64).sqrt(), 0.0))
}

/// `ρ(G) <= (1 - 1/r) n` for `K_{r+1}`-free `G`.
pub fn check_wilf(g: &Graph, r: usize) -> Result<BoundReport> {
    if r == 0 {
        return Err(Error::domain("r must be at least 1"));
    }
    require_clique_free(g, r + 1)?;
    let res = spectral_radius(g, DEFAULT_TOL)?;
    Ok(report(&res, (1.0 - 1.0 / r as f64) * g.n() as f64, 0.0))
}

/// `ρ(G) <= ρ(T_{n,r})` for `K_{r+1}`-free `G`. Equality candidates are
/// settled exactly, and `exact` records the ordering against `T_{n,r}`.
pub fn check_spectral_turan(g: &Graph, r: usize) -> Result<BoundReport> {
    if r == 0 {
        return Err(Error::domain("r must be at least 1"));
    }
    require_clique_free(g, r + 1)?;
    let res = spectral_radius(g, DEFAULT_TOL)?;
    let (t, _) = turan(g.n(), r.min(g.n()))?;
    let rt = spectral_radius(&t, DEFAULT_TOL)?;
    let mut rep = report(&res, rt.rho, rt.err);
    if rep.equality_candidate {
        let o = compare_rho(g, &t)?;
        rep.holds = o != Ordering::Greater;
        rep.exact = Some(format!("{o:?}").to_lowercase());
    }
    Ok(rep)
}

/// Moves the edges `v w` (for each listed private neighbour `w` of `v`) to `u w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSpec {
    pub u: usize,
    pub v: usize,
    pub private_neighbors: Vec<usize>,
}

impl RotationSpec {
    pub fn validate(&self, g: &Graph) -> Result<u64> {
        let n = g.n();
        if self.u >= n || self.v >= n || self.u == self.v {
            return Err(Error::domain(format!("invalid rotation pair u={}, v={}", self.u, self.v)));
        }
        if self.private_neighbors.is_empty() {
            return Err(Error::domain("rotation needs at least one private neighbour"));
        }
        let allowed = g.neighbors(self.v) & !g.neighbors(self.u) & !bit(self.u);
        let mut set = 0u64;
        for &w in &self.private_neighbors {
            if w >= n || allowed & bit(w) == 0 {
                return Err(Error::domain(format!("vertex {w} is not a private neighbour of v={} with respect to u={}", self.v, self.u)));
            }
            set |= bit(w);
        }
        Ok(set)
    }
}

/// `G' = G - {v w} + {u w}` over the listed private neighbours.
pub fn rotate_edges(g: &Graph, spec: &RotationSpec) -> Result<Graph> {
    let moved = spec.validate(g)?;
    let mut adj = g.rows().to_vec();
    for w in Bits(moved) {
        adj[spec.v] &= !bit(w);
        adj[w] &= !bit(spec.v);
        adj[spec.u] |= bit(w);
        adj[w] |= bit(spec.u);
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Result of checking the rotation lemma on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationVerdict {
    /// `ρ(G') > ρ(G)`.
    pub increased: bool,
    /// The Perron comparison `x_u >= x_v` needed the exact path. Pairs in a
    /// common cell of the coarsest equitable partition have equal entries and
    /// never need it.
    pub exact_precondition: bool,
    /// The radius comparison needed the exact path.
    pub exact_comparison: bool,
}

/// Whether `u` and `v` share a cell of the coarsest equitable partition.
/// On a connected graph the Perron vector is constant on such cells: the
/// quotient's Perron vector lifts to a positive eigenvector for `ρ`.
pub fn same_equitable_cell(g: &Graph, u: usize, v: usize) -> bool {
    let mut cells = vec![g.vertices()];
    refine(g, &mut cells);
    cells.iter().any(|&c| c & bit(u) != 0 && c & bit(v) != 0)
}

/// Exact sign of `x_u - x_v` for the Perron vector of a connected graph.
///
/// The diagonal of `adj(ρI - A)` is `p'(ρ) x x^T`, and its `(u,u)` entry is the
/// characteristic polynomial of `G - u` at `ρ`. With `p'(ρ) > 0`, the sign of
/// `x_u - x_v` is the sign of `φ(G-u, ρ) - φ(G-v, ρ)`.
pub fn perron_sign_exact(g: &Graph, u: usize, v: usize) -> Result<Ordering> {
    let pu = Poly::from_ints(&char_poly(&g.remove_vertex(u)?)?);
    let pv = Poly::from_ints(&char_poly(&g.remove_vertex(v)?)?);
    let mut root = exact_radius(g)?;
    Ok(root.sign_of(&pu.sub(&pv)))
}

/// Checks `ρ(G') > ρ(G)` for a rotation from `v` to `u` with `x_u >= x_v`.
///
/// Fails with a domain error when `G` is disconnected or `x_u < x_v`, and with
/// [`Error::Indeterminate`] when the Perron comparison cannot be settled.
pub fn verify_rotation_lemma(g: &Graph, spec: &RotationSpec) -> Result<bool> {
    verify_rotation_lemma_detailed(g, spec).map(|v| v.increased)
}

pub fn verify_rotation_lemma_detailed(g: &Graph, spec: &RotationSpec) -> Result<RotationVerdict> {
    if !g.is_connected() {
        return Err(Error::domain("rotation lemma requires a connected graph"));
    }
    let rotated = rotate_edges(g, spec)?;
    let res = spectral_radius(g, DEFAULT_TOL)?;
    let diff = res.perron[spec.u] - res.perron[spec.v];
    let (sign, exact_precondition) = if diff.abs() > PERRON_MARGIN {
        (if diff > 0.0 { Ordering::Greater } else { Ordering::Less }, false)
    } else if same_equitable_cell(g, spec.u, spec.v) {
        (Ordering::Equal, false)
    } else if g.n() <= EXACT_CAP {
        (perron_sign_exact(g, spec.u, spec.v)?, true)
    } else {
        return Err(Error::Indeterminate(format!(
            "x_u - x_v = {diff:e} is within the float margin and n={} exceeds the exact path",
            g.n()
        )));
    };
    if sign == Ordering::Less {
        return Err(Error::domain(format!("precondition x_u >= x_v fails (x_u - x_v = {diff:e})")));
    }
    let (o, exact_comparison) = compare_rho_traced(&rotated, g)?;
    Ok(RotationVerdict {
        increased: o == Ordering::Greater,
        exact_precondition,
        exact_comparison,
    })
}
