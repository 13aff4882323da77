//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree follows the usual scheme: refine the ordered partition to
//! an equitable one, individualise each vertex of the first non-singleton cell
//! and recurse. Leaves are compared by their relabelled adjacency rows and the
//! greatest one is canonical. Leaves that reproduce the first or best leaf
//! yield automorphisms, which prune siblings lying in a common orbit of the
//! pointwise stabiliser of the current prefix. A leaf equivalent to the first
//! leaf also lets the search jump straight back to the first-path node where
//! its branch diverged.

use crate::bits::{bit, Bits};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct Canonical {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// `position[v]` is the canonical position of vertex `v`.
    pub position: Vec<usize>,
    /// Relabelled adjacency rows; equal for isomorphic inputs.
    pub code: Vec<u64>,
    /// Smallest vertex in each vertex's automorphism orbit.
    pub orbit: Vec<usize>,
    /// Generators of the automorphism group found during the search.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.code.clone())
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit[u] == self.orbit[v]
    }
}

fn leaf_code(g: &Graph, order: &[usize], pos: &mut [usize]) -> Vec<u64> {
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| Bits(g.neighbors(v)).fold(0u64, |acc, u| acc | bit(pos[u])))
        .collect()
}

/// Refines an ordered partition (cells as bitsets) until it is equitable.
/// Split fragments are ordered by ascending neighbour count, so the result
/// depends only on the structure, never on vertex names.
pub fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut buckets: Vec<(u32, u64)> = Vec::new();
    'again: loop {
        for wi in 0..cells.len() {
            let w = cells[wi];
            for ci in 0..cells.len() {
                let c = cells[ci];
                if c & (c - 1) == 0 {
                    continue;
                }
                buckets.clear();
                for v in Bits(c) {
                    let k = (g.neighbors(v) & w).count_ones();
                    match buckets.iter_mut().find(|b| b.0 == k) {
                        Some(b) => b.1 |= bit(v),
                        None => buckets.push((k, bit(v))),
                    }
                }
                if buckets.len() > 1 {
                    buckets.sort_unstable_by_key(|b| b.0);
                    cells.splice(ci..=ci, buckets.iter().map(|b| b.1));
                    continue 'again;
                }
            }
        }
        return;
    }
}

struct Leaf {
    code: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    pos: Vec<usize>,
}

enum Outcome {
    Continue,
    /// Unwind to the first-path node at this depth.
    JumpTo(usize),
}

fn perm_between(from: &[usize], to: &[usize], n: usize) -> Vec<usize> {
    let mut p = vec![0; n];
    for (&a, &b) in from.iter().zip(to) {
        p[a] = b;
    }
    p
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn orbits_of(gens: &[&Vec<usize>], n: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64], diverged: Option<usize>) -> Outcome {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(self.g, &order, &mut self.pos);
        let n = self.g.n();
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                code: code.clone(),
                order: order.clone(),
            });
            self.best = Some(Leaf { code, order });
            return Outcome::Continue;
        };
        if code == first.code {
            self.generators.push(perm_between(&first.order, &order, n));
            return match diverged {
                Some(d) => Outcome::JumpTo(d),
                None => Outcome::Continue,
            };
        }
        let best = self.best.as_ref().unwrap();
        match code.cmp(&best.code) {
            std::cmp::Ordering::Greater => self.best = Some(Leaf { code, order }),
            std::cmp::Ordering::Equal => {
                let p = perm_between(&best.order, &order, n);
                self.generators.push(p);
            }
            std::cmp::Ordering::Less => {}
        }
        Outcome::Continue
    }

    fn node(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>, diverged: Option<usize>) -> Outcome {
        refine(self.g, &mut cells);
        let Some(ti) = cells.iter().position(|c| c & (c - 1) != 0) else {
            return self.leaf(&cells, diverged);
        };
        let level = prefix.len();
        let target = cells[ti];
        let mut explored = 0u64;
        let mut first_child = true;
        for v in Bits(target) {
            if !first_child {
                // Orbits of the known automorphisms fixing the prefix pointwise.
                let fixing: Vec<&Vec<usize>> = self
                    .generators
                    .iter()
                    .filter(|g| prefix.iter().all(|&x| g[x] == x))
                    .collect();
                if !fixing.is_empty() {
                    let orb = orbits_of(&fixing, self.g.n());
                    if Bits(explored).any(|w| orb[w] == orb[v]) {
                        continue;
                    }
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[ti + 1..]);
            let child_div = match diverged {
                Some(d) => Some(d),
                None if first_child => None,
                None => Some(level),
            };
            prefix.push(v);
            let out = self.node(child, prefix, child_div);
            prefix.pop();
            explored |= bit(v);
            first_child = false;
            if let Outcome::JumpTo(d) = out {
                if d < level {
                    return out;
                }
            }
        }
        Outcome::Continue
    }
}

/// Canonical labelling with automorphism orbits, starting from the unit partition.
pub fn canonical_form(g: &Graph) -> Canonical {
    canonical_form_colored(g, &[g.vertices()])
}

/// Canonical labelling respecting an ordered vertex colouring (cells must
/// partition the vertex set). Isomorphisms must map cell `i` to cell `i`.
pub fn canonical_form_colored(g: &Graph, cells: &[u64]) -> Canonical {
    let n = g.n();
    if n == 0 {
        return Canonical {
            order: vec![],
            position: vec![],
            code: vec![],
            orbit: vec![],
            generators: vec![],
        };
    }
    let mut s = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
        pos: vec![0; n],
    };
    let init: Vec<u64> = cells.iter().copied().filter(|&c| c != 0).collect();
    s.node(init, &mut Vec::new(), None);
    let best = s.best.take().unwrap();
    let mut position = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        position[v] = i;
    }
    let refs: Vec<&Vec<usize>> = s.generators.iter().collect();
    let orbit = orbits_of(&refs, n);
    Canonical {
        order: best.order,
        position,
        code: best.code,
        orbit,
        generators: s.generators,
    }
}

/// Canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).graph()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a).code == canonical_form(b).code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{turan, y_graph};

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.relabel(&perm).unwrap()
    }

    fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
        g.relabel(p).unwrap() == *g
    }

    #[test]
    fn invariant_under_relabelling() {
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let graphs = vec![
            petersen,
            Graph::complete(9).unwrap(),
            Graph::empty(8).unwrap(),
            Graph::cycle(11).unwrap(),
            turan(10, 3).unwrap().0,
            y_graph(11, 3).unwrap().0,
            Graph::complete(3).unwrap().disjoint_union(&Graph::cycle(5).unwrap()).unwrap(),
        ];
        for g in graphs {
            let c = canonical_form(&g);
            assert_eq!(c.graph(), g.relabel(&c.position).unwrap());
            for gen in &c.generators {
                assert!(is_automorphism(&g, gen));
            }
            for seed in 0..6 {
                let h = shuffled(&g, seed);
                assert_eq!(canonical_form(&h).code, c.code);
            }
        }
    }

    #[test]
    fn orbits_of_known_graphs() {
        let c = canonical_form(&Graph::cycle(7).unwrap());
        assert!(c.orbit.iter().all(|&o| o == 0));
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c = canonical_form(&star);
        assert_eq!(c.orbit, vec![0, 1, 1, 1, 1]);
        let p4 = Graph::path(4).unwrap();
        let c = canonical_form(&p4);
        assert_eq!(c.orbit, vec![0, 1, 1, 0]);
        let (y, spec) = y_graph(5, 2).unwrap();
        let c = canonical_form(&y);
        assert!(c.same_orbit(spec.u0, spec.u1));
    }

    #[test]
    fn non_isomorphic_graphs_differ() {
        let p = Graph::path(4).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p, &star));
        // Two 3-regular graphs on 6 vertices: K_{3,3} and the prism.
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!is_isomorphic(&k33, &prism));
        assert!(is_isomorphic(&prism, &shuffled(&prism, 3)));
    }
}
