//! Exact decision procedures: clique and complete-split containment,
//! chromatic number, k-partiteness, edge-colour-criticality, and the
//! finite-set intersection bound.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::constructions::SplitParams;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An embedded copy of `B_{p,q}`. The apex vertices need not be independent in the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentWitness {
    pub clique_vertices: Vec<usize>,
    pub apex_vertices: Vec<usize>,
}

impl ContainmentWitness {
    pub fn is_valid_in(&self, g: &Graph, p: usize, q: usize) -> bool {
        let c: u64 = self.clique_vertices.iter().fold(0, |a, &v| a | bit(v));
        let a: u64 = self.apex_vertices.iter().fold(0, |a, &v| a | bit(v));
        self.clique_vertices.len() == p
            && self.apex_vertices.len() == q
            && c.count_ones() as usize == p
            && a.count_ones() as usize == q
            && c & a == 0
            && self.clique_vertices.iter().all(|&v| (c & !bit(v)) & !g.neighbors(v) == 0)
            && self.apex_vertices.iter().all(|&v| c & !g.neighbors(v) == 0)
    }
}

/// A chromatic number together with a proper colouring using exactly `chi` colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringResult {
    pub chi: usize,
    pub coloring: Vec<usize>,
}

/// Calls `f` on every `k`-clique contained in `within`, as a bitset. Stops
/// early when `f` returns `true`; the return value reports whether it did.
pub fn for_each_clique<F: FnMut(u64) -> bool>(g: &Graph, k: usize, within: u64, mut f: F) -> bool {
    fn rec<F: FnMut(u64) -> bool>(g: &Graph, clique: u64, size: usize, cand: u64, k: usize, f: &mut F) -> bool {
        if size == k {
            return f(clique);
        }
        let mut rest = cand;
        while rest != 0 {
            if size + (rest.count_ones() as usize) < k {
                break;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rec(g, clique | bit(v), size + 1, rest & g.neighbors(v), k, f) {
                return true;
            }
        }
        false
    }
    if k == 0 {
        return f(0);
    }
    rec(g, 0, 0, within & g.vertices(), k, &mut f)
}

fn witness_from(g: &Graph, clique: u64, q: usize) -> ContainmentWitness {
    let common = Bits(clique).fold(g.vertices(), |acc, v| acc & g.neighbors(v));
    ContainmentWitness {
        clique_vertices: Bits(clique).collect(),
        apex_vertices: Bits(common).take(q).collect(),
    }
}

fn split_in(g: &Graph, params: SplitParams, within: u64) -> Option<ContainmentWitness> {
    let SplitParams { p, q } = params;
    let mut found = None;
    for_each_clique(g, p, within, |c| {
        let common = Bits(c).fold(g.vertices(), |acc, v| acc & g.neighbors(v));
        if common.count_ones() as usize >= q {
            found = Some(c);
            true
        } else {
            false
        }
    });
    found.map(|c| witness_from(g, c, q))
}

/// Finds a copy of `B_{p,q}`: a `p`-clique with at least `q` common neighbours.
pub fn contains_complete_split(g: &Graph, p: usize, q: usize) -> Result<Option<ContainmentWitness>> {
    let params = SplitParams::new(p, q)?;
    Ok(split_in(g, params, g.vertices()))
}

/// Finds a copy of `B_{p,q}` that uses vertex `v`. Every such copy has its
/// clique inside the closed neighbourhood of `v`.
pub fn contains_complete_split_through(g: &Graph, p: usize, q: usize, v: usize) -> Result<Option<ContainmentWitness>> {
    let params = SplitParams::new(p, q)?;
    if v >= g.n() {
        return Err(Error::domain(format!("vertex {v} out of range")));
    }
    Ok(split_in(g, params, g.neighbors(v) | bit(v)))
}

/// Finds a `k`-clique, as a sorted vertex list.
pub fn contains_clique(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    match k {
        0 => Err(Error::domain("clique size must be at least 1")),
        1 => Ok((g.n() > 0).then(|| vec![0])),
        2 => Ok(g.edges().next().map(|(u, v)| vec![u, v])),
        _ => Ok(contains_complete_split(g, k - 1, 1)?.map(|w| {
            let mut vs = w.clique_vertices;
            vs.extend(w.apex_vertices);
            vs.sort_unstable();
            vs
        })),
    }
}

/// Whether some `k`-clique contains `v`.
pub fn has_clique_through(g: &Graph, k: usize, v: usize) -> bool {
    if k <= 1 {
        return k == 1;
    }
    for_each_clique(g, k - 1, g.neighbors(v), |_| true)
}

pub fn clique_number(g: &Graph) -> usize {
    fn rec(g: &Graph, size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(g, size + 1, rest & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    rec(g, 0, g.vertices(), &mut best);
    best
}

/// Deterministic DSATUR order: highest saturation, then highest degree, then lowest index.
fn pick_vertex(g: &Graph, colors: &[Option<usize>], class_sets: &[u64]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..g.n() {
        if colors[v].is_some() {
            continue;
        }
        let sat = class_sets.iter().filter(|&&c| c & g.neighbors(v) != 0).count();
        let key = (sat, g.degree(v), v);
        best = match best {
            Some((s, d, _)) if (s, d) >= (sat, key.1) => best,
            _ => Some(key),
        };
    }
    best.map(|(_, _, v)| v)
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    fn rec(g: &Graph, k: usize, colors: &mut Vec<Option<usize>>, classes: &mut Vec<u64>, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let v = pick_vertex(g, colors, classes).expect("uncoloured vertex remains");
        let used = classes.len();
        // A fresh colour is only tried once: colours are interchangeable.
        for c in 0..(used + 1).min(k) {
            if c < used && classes[c] & g.neighbors(v) != 0 {
                continue;
            }
            if c == used {
                classes.push(0);
            }
            classes[c] |= bit(v);
            colors[v] = Some(c);
            if rec(g, k, colors, classes, left - 1) {
                return true;
            }
            colors[v] = None;
            classes[c] &= !bit(v);
            if c == used {
                classes.pop();
            }
        }
        false
    }
    let mut colors = vec![None; n];
    let mut classes = Vec::with_capacity(k);
    if rec(g, k, &mut colors, &mut classes, n) {
        Some(colors.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for u in Bits(g.neighbors(v)) {
                match side[u] {
                    None => {
                        side[u] = Some(!sv);
                        stack.push(u);
                    }
                    Some(su) if su == sv => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Whether `χ(G) <= k`.
pub fn is_k_partite(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    Ok(match k {
        _ if k >= g.n() => true,
        1 => g.edge_count() == 0,
        2 => is_bipartite(g),
        _ => k_coloring(g, k).is_some(),
    })
}

pub fn chromatic_number(g: &Graph) -> Result<ColoringResult> {
    if g.n() == 0 {
        return Err(Error::domain("chromatic number needs at least one vertex"));
    }
    let lower = clique_number(g).max(1);
    let mut best = k_coloring(g, g.n()).expect("n colours always suffice");
    let mut chi = best.iter().max().map_or(0, |c| c + 1);
    // chi is the greedy DSATUR upper bound; search downward.
    while chi > lower {
        match k_coloring(g, chi - 1) {
            Some(c) => {
                chi = c.iter().max().unwrap() + 1;
                best = c;
            }
            None => break,
        }
    }
    Ok(ColoringResult { chi, coloring: best })
}

/// Whether deleting some single edge lowers the chromatic number.
pub fn is_edge_color_critical(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::domain("edge-colour-criticality needs at least one edge"));
    }
    let chi = chromatic_number(g)?.chi;
    for (u, v) in g.edges() {
        if is_k_partite(&g.without_edge(u, v)?, chi - 1)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Lower bound `Σ|S_i| - (k-1)|∪S_i|` on the size of `∩S_i`. May be negative.
pub fn intersection_lower_bound(sizes: &[usize], union_size: usize) -> Result<i64> {
    if sizes.is_empty() {
        return Err(Error::domain("at least one set is required"));
    }
    if sizes.iter().any(|&s| s > union_size) {
        return Err(Error::domain("union size must be at least every set size"));
    }
    let total: i64 = sizes.iter().map(|&s| s as i64).sum();
    Ok(total - (sizes.len() as i64 - 1) * union_size as i64)
}

/// Plain backtracking subgraph search, independent of the clique-based
/// specialisation. Returns an injective map `pattern vertex -> host vertex`.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for h in 0..host.n() {
            if used & bit(h) != 0 {
                continue;
            }
            let ok = (0..i).all(|j| !pattern.has_edge(i, j) || host.has_edge(h, map[j]));
            if ok {
                map.push(h);
                if rec(host, pattern, map, used | bit(h)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    if pattern.n() > host.n() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.n());
    rec(host, pattern, &mut map, 0).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_split, turan, y_graph};

    #[test]
    fn split_containment_examples() {
        for p in 2..6 {
            let k = Graph::complete(p + 1).unwrap();
            let w = contains_complete_split(&k, p, 1).unwrap().unwrap();
            assert!(w.is_valid_in(&k, p, 1));
        }
        for n in 2..=12 {
            for p in 2..=n.min(5) {
                let (t, _) = turan(n, p).unwrap();
                for q in 1..4 {
                    assert!(contains_complete_split(&t, p, q).unwrap().is_none());
                }
            }
        }
        let c5 = Graph::cycle(5).unwrap();
        assert!(contains_complete_split(&c5, 2, 1).unwrap().is_none());
        assert!(contains_complete_split(&c5, 1, 1).is_err());
    }

    #[test]
    fn apex_need_not_be_independent() {
        // K_4 contains B_{2,2} as a subgraph even though its apexes are adjacent.
        let k4 = Graph::complete(4).unwrap();
        let w = contains_complete_split(&k4, 2, 2).unwrap().unwrap();
        assert!(w.is_valid_in(&k4, 2, 2));
        assert!(contains_complete_split(&k4, 2, 3).unwrap().is_none());
    }

    #[test]
    fn clique_examples() {
        for n in 2..10 {
            for r in 1..n {
                assert!(contains_clique(&turan(n, r).unwrap().0, r + 1).unwrap().is_none());
            }
        }
        assert!(contains_clique(&y_graph(9, 3).unwrap().0, 4).unwrap().is_none());
        let s = complete_split(3, 2).unwrap();
        let c = contains_clique(&s, 4).unwrap().unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|&a| c.iter().all(|&b| a == b || s.has_edge(a, b))));
        assert_eq!(contains_clique(&Graph::empty(3).unwrap(), 1).unwrap(), Some(vec![0]));
        assert_eq!(contains_clique(&Graph::empty(3).unwrap(), 2).unwrap(), None);
        assert!(contains_clique(&s, 0).is_err());
        assert_eq!(clique_number(&s), 4);
    }

    #[test]
    fn chromatic_examples() {
        for p in 2..6 {
            assert_eq!(chromatic_number(&Graph::complete(p + 1).unwrap()).unwrap().chi, p + 1);
            for q in 1..4 {
                assert_eq!(chromatic_number(&complete_split(p, q).unwrap()).unwrap().chi, p + 1);
            }
        }
        let c5 = Graph::cycle(5).unwrap();
        let r = chromatic_number(&c5).unwrap();
        assert_eq!(r.chi, 3);
        for (u, v) in c5.edges() {
            assert_ne!(r.coloring[u], r.coloring[v]);
        }
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).unwrap().chi, 1);
    }

    #[test]
    fn chromatic_is_deterministic() {
        let (g, _) = y_graph(11, 3).unwrap();
        let a = chromatic_number(&g).unwrap();
        let b = chromatic_number(&g).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.chi, 4);
    }

    #[test]
    fn partiteness_examples() {
        for p in 2..=4 {
            for n in 2 * p + 1..=14 {
                let (y, _) = y_graph(n, p).unwrap();
                assert!(!is_k_partite(&y, p).unwrap(), "Y_{p}({n})");
                assert!(is_k_partite(&y, p + 1).unwrap());
                assert!(contains_clique(&y, p + 1).unwrap().is_none());
            }
        }
        assert!(is_k_partite(&turan(7, 3).unwrap().0, 3).unwrap());
        assert!(!is_k_partite(&Graph::cycle(5).unwrap(), 2).unwrap());
        assert!(is_k_partite(&Graph::cycle(6).unwrap(), 2).unwrap());
        assert!(is_k_partite(&Graph::cycle(6).unwrap(), 0).is_err());
    }

    #[test]
    fn criticality_examples() {
        for p in 2..=4 {
            for q in 1..=3 {
                assert!(is_edge_color_critical(&complete_split(p, q).unwrap()).unwrap());
            }
        }
        assert!(is_edge_color_critical(&Graph::complete(3).unwrap()).unwrap());
        assert!(!is_edge_color_critical(&Graph::cycle(4).unwrap()).unwrap());
        assert!(is_edge_color_critical(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn intersection_bound_examples() {
        assert_eq!(intersection_lower_bound(&[5, 5], 8).unwrap(), 2);
        assert_eq!(intersection_lower_bound(&[7], 7).unwrap(), 7);
        assert_eq!(intersection_lower_bound(&[3, 3, 3], 9).unwrap(), -9);
        assert!(intersection_lower_bound(&[5, 9], 8).is_err());
    }

    #[test]
    fn two_five_sets_in_eight_share_two() {
        // Enumerate every pair of 5-subsets of an 8-set with union of size exactly 8.
        let subsets: Vec<u32> = (0u32..256).filter(|s| s.count_ones() == 5).collect();
        let mut min = usize::MAX;
        for &a in &subsets {
            for &b in &subsets {
                if (a | b).count_ones() == 8 {
                    min = min.min((a & b).count_ones() as usize);
                }
            }
        }
        assert_eq!(min, 2);
    }

    #[test]
    fn generic_subgraph_search() {
        let k4 = Graph::complete(4).unwrap();
        assert!(find_subgraph(&k4, &complete_split(2, 2).unwrap()).is_some());
        assert!(find_subgraph(&Graph::cycle(5).unwrap(), &Graph::complete(3).unwrap()).is_none());
        assert!(find_subgraph(&Graph::cycle(6).unwrap(), &Graph::path(6).unwrap()).is_some());
    }
}
