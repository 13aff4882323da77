//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! Each graph on `m + 1` vertices is produced from a representative on `m`
//! vertices by adding a vertex with every admissible neighbourhood. A child is
//! kept only if the added vertex lies in the automorphism orbit of the child's
//! canonical deletion vertex, so each isomorphism class has exactly one
//! parent class. Children of one parent that are isomorphic (through parent
//! automorphisms) are merged by canonical code.
//!
//! Pruning predicates must be hereditary: closed under taking induced subgraphs.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bits::{bit, Bits};
use crate::canon::{canonical_form, Canonical};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{contains_complete_split_through, has_clique_through};

/// Default largest vertex count for full enumeration.
pub const DEFAULT_CAP: usize = 10;
/// Largest vertex count accepted on explicit opt-in.
pub const MAX_CAP: usize = 11;

/// A predicate closed under induced subgraphs.
pub trait Hereditary: Sync {
    fn accepts(&self, g: &Graph) -> bool;

    /// Called when `g` was obtained from an accepted graph by adding vertex `v`;
    /// implementations may restrict their check to structures through `v`.
    fn accepts_extension(&self, g: &Graph, v: usize) -> bool {
        let _ = v;
        self.accepts(g)
    }
}

/// Accepts everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoPrune;

impl Hereditary for NoPrune {
    fn accepts(&self, _: &Graph) -> bool {
        true
    }
}

/// `K_k`-freeness.
#[derive(Clone, Copy, Debug)]
pub struct CliqueFree(pub usize);

impl Hereditary for CliqueFree {
    fn accepts(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| !has_clique_through(g, self.0, v))
    }

    fn accepts_extension(&self, g: &Graph, v: usize) -> bool {
        !has_clique_through(g, self.0, v)
    }
}

/// `B_{p,q}`-freeness.
#[derive(Clone, Copy, Debug)]
pub struct SplitFree {
    pub p: usize,
    pub q: usize,
}

impl Hereditary for SplitFree {
    fn accepts(&self, g: &Graph) -> bool {
        crate::oracles::contains_complete_split(g, self.p, self.q)
            .map(|w| w.is_none())
            .unwrap_or(false)
    }

    fn accepts_extension(&self, g: &Graph, v: usize) -> bool {
        contains_complete_split_through(g, self.p, self.q, v)
            .map(|w| w.is_none())
            .unwrap_or(false)
    }
}

/// Conjunction of hereditary predicates.
pub struct All(pub Vec<Box<dyn Hereditary>>);

impl Hereditary for All {
    fn accepts(&self, g: &Graph) -> bool {
        self.0.iter().all(|p| p.accepts(g))
    }

    fn accepts_extension(&self, g: &Graph, v: usize) -> bool {
        self.0.iter().all(|p| p.accepts_extension(g, v))
    }
}

/// Wraps a closure as a predicate. The caller vouches that it is hereditary.
pub struct FnPrune<F>(pub F);

impl<F: Fn(&Graph) -> bool + Sync> Hereditary for FnPrune<F> {
    fn accepts(&self, g: &Graph) -> bool {
        (self.0)(g)
    }
}

fn deletion_invariant(g: &Graph, v: usize) -> (usize, usize) {
    let nd: usize = Bits(g.neighbors(v)).map(|u| g.degree(u)).sum();
    (g.degree(v), nd)
}

/// Decides whether the last vertex of `child` is a canonical deletion
/// vertex, returning the child's canonical form when it is.
fn canonical_extension(child: &Graph) -> Option<Canonical> {
    let v = child.n() - 1;
    let inv: Vec<(usize, usize)> = (0..child.n()).map(|u| deletion_invariant(child, u)).collect();
    let top = *inv.iter().max().unwrap();
    if inv[v] != top {
        return None;
    }
    let canon = canonical_form(child);
    let candidates = (0..child.n()).filter(|&u| inv[u] == top);
    let chosen = candidates.max_by_key(|&u| canon.position[u]).unwrap();
    canon.same_orbit(v, chosen).then_some(canon)
}

/// Canonical children of `parent` (itself a canonical representative).
fn children(parent: &Graph, prune: &dyn Hereditary) -> Vec<Graph> {
    let m = parent.n();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0..(1u64 << m) {
        let child = parent.add_vertex(nbrs).expect("capacity checked by caller");
        if !prune.accepts_extension(&child, m) {
            continue;
        }
        if let Some(canon) = canonical_extension(&child) {
            if seen.insert(canon.code.clone()) {
                out.push(canon.graph());
            }
        }
    }
    out
}

fn dfs<A, F>(g: Graph, n: usize, prune: &dyn Hereditary, acc: A, fold: &F) -> (A, u64)
where
    F: Fn(A, &Graph) -> A,
{
    if g.n() == n {
        return (fold(acc, &g), 1);
    }
    let mut acc = acc;
    let mut count = 0;
    for c in children(&g, prune) {
        let (a, k) = dfs(c, n, prune, acc, fold);
        acc = a;
        count += k;
    }
    (acc, count)
}

/// Minimum number of independent subtrees before switching to parallel DFS.
const SHARD_TARGET: usize = 64;

/// Folds over one representative of every isomorphism class of `n`-vertex
/// graphs accepted by `prune`, in parallel. Returns the reduced accumulator
/// and the number of representatives visited.
pub fn enumerate_reduce<A, I, F, R>(n: usize, cap: usize, prune: &dyn Hereditary, identity: I, fold: F, reduce: R) -> Result<(A, u64)>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &Graph) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    if cap > MAX_CAP {
        return Err(Error::Capacity {
            what: "enumeration cap",
            requested: cap,
            limit: MAX_CAP,
        });
    }
    if n > cap {
        return Err(Error::Capacity {
            what: "enumeration vertex count",
            requested: n,
            limit: cap,
        });
    }
    if n == 0 {
        return Err(Error::domain("enumeration needs n >= 1"));
    }
    let root = Graph::empty(1)?;
    if !prune.accepts(&root) {
        return Ok((identity(), 0));
    }
    // Breadth-first until there are enough shards, then parallel depth-first.
    let mut frontier = vec![root];
    while frontier[0].n() < n && frontier.len() < SHARD_TARGET {
        frontier = frontier.iter().flat_map(|g| children(g, prune)).collect();
        if frontier.is_empty() {
            return Ok((identity(), 0));
        }
    }
    Ok(frontier
        .into_par_iter()
        .map(|g| dfs(g, n, prune, identity(), &fold))
        .reduce(|| (identity(), 0), |(a, x), (b, y)| (reduce(a, b), x + y)))
}

/// Visits one canonical representative per isomorphism class of `n`-vertex
/// graphs accepted by `prune`. Visit order is unspecified.
pub fn enumerate<V>(n: usize, prune: &dyn Hereditary, visit: V) -> Result<u64>
where
    V: Fn(&Graph) + Sync + Send,
{
    enumerate_with_cap(n, DEFAULT_CAP, prune, visit)
}

pub fn enumerate_with_cap<V>(n: usize, cap: usize, prune: &dyn Hereditary, visit: V) -> Result<u64>
where
    V: Fn(&Graph) + Sync + Send,
{
    let ((), count) = enumerate_reduce(
        n,
        cap,
        prune,
        || (),
        |(), g| {
            visit(g);
        },
        |(), ()| (),
    )?;
    Ok(count)
}

/// All representatives, sorted by canonical code for a deterministic order.
pub fn collect(n: usize, prune: &dyn Hereditary) -> Result<Vec<Graph>> {
    let (mut gs, _) = enumerate_reduce(
        n,
        DEFAULT_CAP,
        prune,
        Vec::new,
        |mut v: Vec<Graph>, g| {
            v.push(g.clone());
            v
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    gs.sort_unstable_by(|a, b| a.rows().cmp(b.rows()));
    Ok(gs)
}

/// Independent count by labelling every graph on `n` vertices and
/// deduplicating canonical codes. Exponential in `n^2`; meant for `n <= 6`.
pub fn brute_force_count(n: usize, accept: impl Fn(&Graph) -> bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut adj = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & bit(k) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
        let g = Graph::from_rows_unchecked(adj);
        if accept(&g) {
            seen.insert(canonical_form(&g).code);
        }
    }
    seen.len()
}
