//! Builders for the named graph families.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};

/// Parameters of the complete split graph `B_{p,q} = K_p ∇ qK_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitParams {
    pub p: usize,
    pub q: usize,
}

impl SplitParams {
    pub fn new(p: usize, q: usize) -> Result<SplitParams> {
        if p < 2 || q < 1 {
            return Err(Error::domain(format!("complete split graph needs p >= 2, q >= 1 (got p={p}, q={q})")));
        }
        Ok(SplitParams { p, q })
    }
}

/// Layout of a `Y_p(n)` instance: the balanced classes of `T_{n-1,p}` and the
/// three distinguished vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YGraphSpec {
    pub n: usize,
    pub p: usize,
    /// Nondecreasing sizes of the classes of `T_{n-1,p}`.
    pub part_sizes: Vec<usize>,
    /// Classes of `T_{n-1,p}`; `u0` is the only uncovered vertex.
    pub parts: VertexPartition,
    pub u0: usize,
    pub u1: usize,
    pub u2: usize,
}

/// Balanced part sizes of `n` into `r` parts, smallest first.
pub fn balanced_sizes(n: usize, r: usize) -> Vec<usize> {
    let (base, extra) = (n / r, n % r);
    (0..r).map(|i| if i >= r - extra { base + 1 } else { base }).collect()
}

fn consecutive_parts(n: usize, sizes: &[usize]) -> Result<VertexPartition> {
    let mut start = 0;
    let mut classes = Vec::with_capacity(sizes.len());
    for &s in sizes {
        classes.push(low_mask(s) << start);
        start += s;
    }
    VertexPartition::new(n, classes)
}

/// Number of edges of `T_{n,r}`.
pub fn turan_edge_count(n: usize, r: usize) -> usize {
    let sizes = balanced_sizes(n, r);
    n * n.saturating_sub(1) / 2 - sizes.iter().map(|s| s * s.saturating_sub(1) / 2).sum::<usize>()
}

/// The Turán graph `T_{n,r}` with its classes as consecutive vertex ranges.
pub fn turan(n: usize, r: usize) -> Result<(Graph, VertexPartition)> {
    if r < 1 || r > n {
        return Err(Error::domain(format!("turan graph needs 1 <= r <= n (got n={n}, r={r})")));
    }
    let sizes = balanced_sizes(n, r);
    let g = Graph::complete_multipartite(&sizes)?;
    let parts = consecutive_parts(n, &sizes)?;
    Ok((g, parts))
}

/// `B_{p,q}`: vertices `0..p` form the clique, `p..p+q` the independent side.
pub fn complete_split(p: usize, q: usize) -> Result<Graph> {
    let params = SplitParams::new(p, q)?;
    Graph::complete(params.p)?.join(&Graph::empty(params.q)?)
}

/// The book `B_t = B_{2,t}`.
pub fn book(t: usize) -> Result<Graph> {
    complete_split(2, t)
}

/// Closed-form `e(Y_p(n)) = e(T_{n,p}) - floor(n/p) + 1`.
pub fn y_graph_edge_formula(n: usize, p: usize) -> usize {
    turan_edge_count(n, p) + 1 - n / p
}

/// `Y_p(n)`: `T_{n-1,p}` minus the edge `u1u2` between its two smallest
/// classes, plus a vertex `u0` joined to the other classes and to `u1`, `u2`.
///
/// Requires `p >= 2` and `n >= 2p + 1`, so every class has at least two vertices.
pub fn y_graph(n: usize, p: usize) -> Result<(Graph, YGraphSpec)> {
    if p < 2 {
        return Err(Error::domain(format!("y_graph needs p >= 2 (got {p})")));
    }
    if n < 2 * p + 1 {
        return Err(Error::domain(format!("y_graph needs n >= 2p+1 = {} (got n={n})", 2 * p + 1)));
    }
    let sizes = balanced_sizes(n - 1, p);
    let parts = consecutive_parts(n, &sizes)?;
    let u0 = n - 1;
    let u1 = parts.class(0).trailing_zeros() as usize;
    let u2 = parts.class(1).trailing_zeros() as usize;
    let g = g_ij(&parts, u0, 0, 1, u1, u2)?;
    Ok((
        g,
        YGraphSpec {
            n,
            p,
            part_sizes: sizes,
            parts,
            u0,
            u1,
            u2,
        },
    ))
}

/// `G_{i,j}` over arbitrary classes: the complete multipartite graph on
/// `parts`, minus the edge `ui uj`, plus `u0` joined to every class other than
/// `i` and `j` and to `ui`, `uj`. The classes must cover every vertex except `u0`.
pub fn g_ij(parts: &VertexPartition, u0: usize, i: usize, j: usize, ui: usize, uj: usize) -> Result<Graph> {
    let n = parts.n();
    let p = parts.len();
    if p < 2 {
        return Err(Error::domain(format!("g_ij needs at least 2 classes (got {p})")));
    }
    if u0 >= n {
        return Err(Error::domain(format!("u0={u0} out of range for n={n}")));
    }
    if parts.union() != low_mask(n) & !bit(u0) {
        return Err(Error::domain("classes must cover exactly the vertices other than u0"));
    }
    if let Some(k) = parts.classes().iter().position(|&c| c == 0) {
        return Err(Error::domain(format!("class {k} is empty")));
    }
    if i >= p || j >= p || i == j {
        return Err(Error::domain(format!("class indices must be distinct and < {p} (got {i}, {j})")));
    }
    if parts.class(i) & bit(ui) == 0 || parts.class(j) & bit(uj) == 0 {
        return Err(Error::domain("ui and uj must lie in classes i and j respectively"));
    }
    let mut adj = vec![0u64; n];
    let covered = parts.union();
    for &c in parts.classes() {
        for v in Bits(c) {
            adj[v] = covered & !c;
        }
    }
    adj[ui] &= !bit(uj);
    adj[uj] &= !bit(ui);
    let mut hub = bit(ui) | bit(uj);
    for (k, &c) in parts.classes().iter().enumerate() {
        if k != i && k != j {
            hub |= c;
        }
    }
    for v in Bits(hub) {
        adj[v] |= bit(u0);
    }
    adj[u0] = hub;
    Ok(Graph::from_rows_unchecked(adj))
}
