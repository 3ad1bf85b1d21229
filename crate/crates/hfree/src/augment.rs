//! The augmented pattern H⁺: two wedges attached to the endpoints of every
//! non-edge of H.
//!
//! For each non-edge `{u,v}` of H, two fresh vertices `x` and `y` are added
//! together with the four edges `ux, vx, uy, vy`. If an edge ever shows up
//! between `u` and `v` in a host, it closes the two triangles `uvx` and
//! `uvy`; that is what makes H⁺ useful for detection in induced H-free
//! hosts. Augmentation preserves 3-colorability and the exact triangle
//! count: the wedge vertices have exactly two neighbors, so they never form
//! a triangle and can always pick a third color.

use std::collections::BTreeMap;

use crate::coloring::is_three_colorable;
use crate::graph::{Graph, Vertex};
use crate::pattern::Pattern;

/// H together with H⁺ and the map from each non-edge to its wedge pair.
#[derive(Clone, Debug)]
pub struct AugmentedPattern {
    base: Pattern,
    graph: Graph,
    wedges: BTreeMap<(Vertex, Vertex), (Vertex, Vertex)>,
}

impl AugmentedPattern {
    pub fn base(&self) -> &Pattern {
        &self.base
    }

    /// The augmented graph H⁺. Base vertices keep their ids; wedge vertices
    /// are appended in canonical non-edge order.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Wedge pair `(x, y)` for a non-edge `{u,v}` of the base (any order).
    pub fn wedge(&self, u: Vertex, v: Vertex) -> Option<(Vertex, Vertex)> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.wedges.get(&key).copied()
    }

    pub fn wedges(&self) -> &BTreeMap<(Vertex, Vertex), (Vertex, Vertex)> {
        &self.wedges
    }
}

/// Builds H⁺ from H. Wedge vertices are numbered after the base vertices,
/// two per non-edge, in lexicographic non-edge order.
pub fn augment(h: &Pattern) -> AugmentedPattern {
    let base_graph = h.graph();
    let mut graph = base_graph.clone();
    let mut wedges = BTreeMap::new();
    for (u, v) in base_graph.non_edges() {
        let x = graph.add_vertices(2);
        let y = x + 1;
        graph.add_edge(u, x);
        graph.add_edge(v, x);
        graph.add_edge(u, y);
        graph.add_edge(v, y);
        wedges.insert((u, v), (x, y));
    }
    AugmentedPattern { base: h.clone(), graph, wedges }
}

/// Outcome of checking that augmentation preserved what it must preserve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    /// If H is 3-colorable then H⁺ is too (vacuously true otherwise).
    pub chromatic_ok: bool,
    /// H⁺ has exactly as many triangles as H.
    pub triangle_ok: bool,
}

impl PreservationReport {
    pub fn all_ok(&self) -> bool {
        self.chromatic_ok && self.triangle_ok
    }
}

/// Brute-force check that `augment` preserved 3-colorability and triangle
/// count for this pattern. The colorability side runs a full backtracking
/// search on H⁺, so keep the pattern at desk scale.
pub fn verify_augment_preserves(h: &Pattern) -> PreservationReport {
    let aug = augment(h);
    let chromatic_ok = !is_three_colorable(h.graph()) || is_three_colorable(aug.graph());
    let triangle_ok = aug.graph().count_triangles() == h.graph().count_triangles();
    PreservationReport { chromatic_ok, triangle_ok }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn p6_augments_to_26_vertices() {
        let aug = augment(&Pattern::plain(fixtures::path(6)));
        assert_eq!(aug.graph().n(), 26);
    }

    #[test]
    fn c7_augments_to_35_vertices() {
        let aug = augment(&Pattern::plain(fixtures::cycle(7)));
        assert_eq!(aug.graph().n(), 35);
    }

    #[test]
    fn complete_graph_is_unchanged() {
        let k4 = fixtures::clique(4);
        let aug = augment(&Pattern::plain(k4.clone()));
        assert_eq!(*aug.graph(), k4);
        assert!(aug.wedges().is_empty());
    }

    #[test]
    fn p5_wedges_close_triangles_once_the_non_edge_appears() {
        let aug = augment(&Pattern::plain(fixtures::path(5)));
        assert_eq!(aug.graph().n(), 17);
        assert_eq!(aug.graph().count_triangles(), 0);
        let (x, y) = aug.wedge(0, 3).unwrap();
        let mut host = aug.graph().clone();
        host.add_edge(0, 3);
        assert!(host.is_triangle([0, 3, x]));
        assert!(host.is_triangle([0, 3, y]));
        assert!(host.count_triangles() >= 2);
    }

    #[test]
    fn wedge_vertices_have_degree_two_over_a_non_edge() {
        let h = fixtures::gnp(8, 0.4, 11);
        let aug = augment(&Pattern::plain(h.clone()));
        for (&(u, v), &(x, y)) in aug.wedges() {
            assert!(!h.has_edge(u, v));
            for w in [x, y] {
                assert_eq!(aug.graph().degree(w), 2);
                assert_eq!(aug.graph().neighbors(w), &[u, v]);
            }
        }
        assert_eq!(aug.graph().n(), h.n() + 2 * h.non_edges().len());
    }

    #[test]
    fn preservation_on_small_patterns() {
        let p5 = verify_augment_preserves(&Pattern::plain(fixtures::path(5)));
        assert!(p5.all_ok());

        // triangle with a pendant vertex
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert_eq!(g.count_triangles(), 1);
        let rep = verify_augment_preserves(&Pattern::plain(g.clone()));
        assert!(rep.all_ok());
        assert_eq!(augment(&Pattern::plain(g)).graph().count_triangles(), 1);

        assert!(verify_augment_preserves(&Pattern::plain(fixtures::clique(4))).triangle_ok);
    }
}
