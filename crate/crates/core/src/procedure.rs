//! Class-typed rewiring around a distinguished vertex `u0`.
//!
//! `G - u0` carries a proper colouring `U_1, ..., U_p`. The neighbours of `u0`
//! in class `s` form the active set `U_{s,i}`, which is typed as
//!
//! - **A**: every active vertex is adjacent to all of the other classes,
//! - **B**: exactly one active vertex, missing some vertex of the other classes,
//! - **C**: anything else.
//!
//! Each step takes a deficient active vertex `u_i` from a type C class, drops
//! the edge `u0 u_i` and joins `u_i` to everything it misses in the other
//! classes. The run stops once no class is of type C.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::constructions::g_ij;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};
use crate::oracles::{chromatic_number, contains_complete_split};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Type {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProcedureState {
    #[serde(with = "graph6_serde")]
    pub graph: Graph,
    pub u0: usize,
    pub classes: VertexPartition,
    /// `N(u0) ∩ U_s` for each class.
    pub active: Vec<u64>,
    pub labels: Vec<Type>,
    pub step: usize,
}

/// One rewiring step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub class: usize,
    pub vertex: usize,
    pub removed: (usize, usize),
    pub added: Vec<(usize, usize)>,
    pub edges_before: usize,
    pub edges_after: usize,
    /// Whether the graph after this step is still `B_{p,q}`-free, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_free: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProcedureTrace {
    pub states: Vec<ProcedureState>,
    pub moves: Vec<Move>,
}

mod graph6_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::graph6::encode(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let s = String::deserialize(d)?;
        crate::graph6::decode(&s).map_err(serde::de::Error::custom)
    }
}

impl ProcedureState {
    /// Validates that `classes` properly colour `G - u0` and computes the labels.
    pub fn new(graph: Graph, u0: usize, classes: VertexPartition) -> Result<ProcedureState> {
        let n = graph.n();
        if u0 >= n {
            return Err(Error::domain(format!("u0={u0} out of range for n={n}")));
        }
        if classes.n() != n {
            return Err(Error::domain("partition and graph disagree on the vertex count"));
        }
        if classes.is_empty() {
            return Err(Error::domain("at least one class is required"));
        }
        if classes.union() != graph.vertices() & !bit(u0) {
            return Err(Error::domain("classes must cover exactly the vertices other than u0"));
        }
        if !classes.is_independent_in(&graph) {
            return Err(Error::domain("classes are not a proper colouring of G - u0"));
        }
        let mut state = ProcedureState {
            graph,
            u0,
            classes,
            active: Vec::new(),
            labels: Vec::new(),
            step: 0,
        };
        state.relabel();
        Ok(state)
    }

    fn relabel(&mut self) {
        let nu0 = self.graph.neighbors(self.u0);
        self.active = self.classes.classes().iter().map(|&c| c & nu0).collect();
        self.labels = (0..self.classes.len()).map(|s| self.type_of(s)).collect();
    }

    pub fn p(&self) -> usize {
        self.classes.len()
    }

    /// Union of every class except `s`.
    pub fn others(&self, s: usize) -> u64 {
        self.classes.union() & !self.classes.class(s)
    }

    fn deficient(&self, s: usize) -> u64 {
        let others = self.others(s);
        Bits(self.active[s])
            .filter(|&u| self.graph.neighbors(u) & !bit(self.u0) != others)
            .fold(0, |acc, u| acc | bit(u))
    }

    fn type_of(&self, s: usize) -> Type {
        let deficient = self.deficient(s);
        if deficient == 0 {
            Type::A
        } else if self.active[s].count_ones() == 1 {
            Type::B
        } else {
            Type::C
        }
    }

    pub fn is_terminal(&self) -> bool {
        !self.labels.contains(&Type::C)
    }

    /// Classes labelled B, in index order.
    pub fn b_classes(&self) -> Vec<usize> {
        (0..self.p()).filter(|&s| self.labels[s] == Type::B).collect()
    }
}

/// Type of class `s` in `state`. Empty active sets are type A.
pub fn classify(state: &ProcedureState, s: usize) -> Result<Type> {
    if s >= state.p() {
        return Err(Error::domain(format!("class index {s} out of range for p={}", state.p())));
    }
    Ok(state.type_of(s))
}

/// Applies one step to the lowest-index type C class, rewiring its
/// lowest-index deficient active vertex. Returns `None` on a terminal state.
pub fn procedure_step(state: &ProcedureState) -> Option<(ProcedureState, Move)> {
    let s = state.labels.iter().position(|&t| t == Type::C)?;
    let u = state.deficient(s).trailing_zeros() as usize;
    let missing = state.others(s) & !state.graph.neighbors(u);
    let mut adj = state.graph.rows().to_vec();
    adj[u] &= !bit(state.u0);
    adj[state.u0] &= !bit(u);
    adj[u] |= missing;
    for w in Bits(missing) {
        adj[w] |= bit(u);
    }
    let graph = Graph::from_rows_unchecked(adj);
    let mv = Move {
        class: s,
        vertex: u,
        removed: (state.u0.min(u), state.u0.max(u)),
        added: Bits(missing).map(|w| (u.min(w), u.max(w))).collect(),
        edges_before: state.graph.edge_count(),
        edges_after: graph.edge_count(),
        split_free: None,
    };
    let mut next = ProcedureState {
        graph,
        u0: state.u0,
        classes: state.classes.clone(),
        active: Vec::new(),
        labels: Vec::new(),
        step: state.step + 1,
    };
    next.relabel();
    debug_assert!(next.classes.is_independent_in(&next.graph));
    Some((next, mv))
}

/// Runs the procedure to completion.
pub fn run_procedure(g: &Graph, u0: usize, classes: VertexPartition) -> Result<ProcedureTrace> {
    run_procedure_with(g, u0, classes, None)
}

/// As [`run_procedure`], recording after every step whether the graph is
/// still `B_{p,q}`-free when `split` is given.
pub fn run_procedure_with(g: &Graph, u0: usize, classes: VertexPartition, split: Option<(usize, usize)>) -> Result<ProcedureTrace> {
    let first = ProcedureState::new(g.clone(), u0, classes)?;
    let budget = g.degree(u0);
    let mut states = vec![first];
    let mut moves = Vec::new();
    while let Some((next, mut mv)) = procedure_step(states.last().unwrap()) {
        if let Some((p, q)) = split {
            mv.split_free = Some(contains_complete_split(&next.graph, p, q)?.is_none());
        }
        moves.push(mv);
        states.push(next);
        assert!(moves.len() <= budget, "each step removes an edge at u0");
    }
    Ok(ProcedureTrace { states, moves })
}

impl ProcedureTrace {
    pub fn initial(&self) -> &ProcedureState {
        &self.states[0]
    }

    pub fn terminal(&self) -> &ProcedureState {
        self.states.last().expect("a trace has at least one state")
    }

    pub fn steps(&self) -> usize {
        self.moves.len()
    }

    pub fn edges_nondecreasing(&self) -> bool {
        self.states.windows(2).all(|w| w[1].graph.edge_count() >= w[0].graph.edge_count())
    }

    /// When the terminal state has exactly two type B classes `i < j` with
    /// active vertices `ui`, `uj`, the matching `G_{i,j}` on the same classes.
    pub fn terminal_g_ij(&self) -> Result<Option<Graph>> {
        let t = self.terminal();
        let b = t.b_classes();
        if b.len() != 2 {
            return Ok(None);
        }
        let (i, j) = (b[0], b[1]);
        let ui = t.active[i].trailing_zeros() as usize;
        let uj = t.active[j].trailing_zeros() as usize;
        g_ij(&t.classes, t.u0, i, j, ui, uj).map(Some)
    }
}

/// Classes of `G - u0` from an optimal colouring, expressed in the vertex labels of `G`.
pub fn classes_without(g: &Graph, u0: usize) -> Result<VertexPartition> {
    let h = g.remove_vertex(u0)?;
    let col = chromatic_number(&h)?;
    let mut colors = vec![None; g.n()];
    for (v, &c) in col.coloring.iter().enumerate() {
        let orig = if v < u0 { v } else { v + 1 };
        colors[orig] = Some(c);
    }
    VertexPartition::from_coloring(&colors, col.chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::y_graph;

    fn parts(n: usize, lists: &[&[usize]]) -> VertexPartition {
        let v: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        VertexPartition::from_lists(n, &v).unwrap()
    }

    #[test]
    fn y_graph_is_terminal_with_two_b_classes() {
        for (n, p) in [(5, 2), (9, 3), (11, 4)] {
            let (g, spec) = y_graph(n, p).unwrap();
            let trace = run_procedure(&g, spec.u0, spec.parts.clone()).unwrap();
            assert_eq!(trace.states.len(), 1);
            let s = trace.terminal();
            assert_eq!(s.labels[0], Type::B);
            assert_eq!(s.labels[1], Type::B);
            assert!(s.labels[2..].iter().all(|&t| t == Type::A));
            assert_eq!(trace.terminal_g_ij().unwrap().unwrap(), g);
        }
    }

    #[test]
    fn empty_and_mixed_classes() {
        // K_{2,2} on {0,1} | {2,3} with u0 = 4 adjacent to 0 and 1; vertex 1 misses 3.
        let g = Graph::from_edges(5, [(0, 2), (0, 3), (1, 2), (4, 0), (4, 1)]).unwrap();
        let st = ProcedureState::new(g.clone(), 4, parts(5, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(classify(&st, 0).unwrap(), Type::C);
        assert_eq!(classify(&st, 1).unwrap(), Type::A);
        assert!(classify(&st, 2).is_err());

        let trace = run_procedure(&g, 4, parts(5, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(trace.steps(), 1);
        let mv = &trace.moves[0];
        assert_eq!((mv.class, mv.vertex, mv.removed), (0, 1, (1, 4)));
        assert_eq!(mv.added, vec![(1, 3)]);
        assert_eq!((mv.edges_before, mv.edges_after), (5, 5));
        assert!(trace.terminal().is_terminal());
        assert!(trace.edges_nondecreasing());
    }

    #[test]
    fn rejects_improper_colouring() {
        let g = Graph::cycle(5).unwrap();
        assert!(run_procedure(&g, 4, parts(5, &[&[0, 1], &[2, 3]])).is_err());
        assert!(run_procedure(&g, 4, parts(5, &[&[0, 2], &[1]])).is_err());
        assert!(run_procedure(&g, 4, parts(5, &[&[0, 2], &[1, 3]])).is_ok());
    }

    #[test]
    fn classes_relabelled_around_u0() {
        let (g, _) = y_graph(9, 3).unwrap();
        for u0 in [0, 4, 8] {
            let c = classes_without(&g, u0).unwrap();
            assert_eq!(c.union(), g.vertices() & !bit(u0));
            assert!(c.is_independent_in(&g));
        }
    }

    #[test]
    fn split_freeness_diagnostics() {
        let g = Graph::from_edges(5, [(0, 2), (0, 3), (1, 2), (4, 0), (4, 1)]).unwrap();
        let trace = run_procedure_with(&g, 4, parts(5, &[&[0, 1], &[2, 3]]), Some((2, 1))).unwrap();
        assert_eq!(trace.moves[0].split_free, Some(true));
    }
}
