//! Degenerate 3-colorings: checker (greedy peeling) and backtracking search.
//!
//! A proper 3-coloring of a graph with at most one triangle is degenerate
//! when every induced subgraph that is not a triangle has a vertex whose
//! neighborhood within the subgraph is monochromatic (an empty neighborhood
//! counts as monochromatic). The checker peels greedily instead of walking
//! all subsets: repeatedly delete any vertex whose current neighborhood is
//! monochromatic or empty, and accept iff the process ends at the empty
//! graph or at exactly a triangle. Any tie-break is sound because the first
//! vertex removed from a stalled subset would also have been removable in
//! every supergraph of it; the lowest eligible id is removed for
//! determinism.

use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DegenerateError {
    #[error("coloring is not a proper 3-coloring: {0}")]
    BadColoring(String),
    #[error("graph has {0} triangles; degenerate colorings are defined for at most one")]
    TooManyTriangles(u64),
}

fn require_at_most_one_triangle(g: &Graph) -> Result<(), DegenerateError> {
    let t = g.count_triangles();
    if t > 1 {
        return Err(DegenerateError::TooManyTriangles(t));
    }
    Ok(())
}

/// Greedy peel on the vertices marked alive. Returns true iff peeling
/// reaches the empty set or exactly a triangle.
fn peels_out(g: &Graph, colors: &[Color], alive: &mut [bool], mut alive_count: usize) -> bool {
    loop {
        let mut removed = false;
        'scan: for v in 0..g.n() {
            if !alive[v] {
                continue;
            }
            let mut seen: Option<Color> = None;
            for &w in g.neighbors(v as Vertex) {
                if !alive[w as usize] {
                    continue;
                }
                match seen {
                    None => seen = Some(colors[w as usize]),
                    Some(c) if c == colors[w as usize] => {}
                    Some(_) => continue 'scan,
                }
            }
            alive[v] = false;
            alive_count -= 1;
            removed = true;
            break;
        }
        if alive_count == 0 {
            return true;
        }
        if !removed {
            break;
        }
    }
    if alive_count != 3 {
        return false;
    }
    let survivors: Vec<Vertex> =
        (0..g.n()).filter(|&v| alive[v]).map(|v| v as Vertex).collect();
    g.is_triangle([survivors[0], survivors[1], survivors[2]])
}

/// Is this proper 3-coloring degenerate? Implemented by greedy peeling;
/// rejects improper colorings and graphs with more than one triangle.
pub fn check_degenerate_coloring(g: &Graph, c: &Coloring) -> Result<bool, DegenerateError> {
    if c.palette() != 3 {
        return Err(DegenerateError::BadColoring(format!("palette {} instead of 3", c.palette())));
    }
    c.check_proper(g).map_err(|e| DegenerateError::BadColoring(e.to_string()))?;
    require_at_most_one_triangle(g)?;
    let mut alive = vec![true; g.n()];
    Ok(peels_out(g, c.colors(), &mut alive, g.n()))
}

/// Result of the degenerate-coloring search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegenerateSearch {
    Found(Coloring),
    Exhausted,
    /// The node budget ran out before the search space did.
    Inconclusive { nodes: u64 },
}

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Searches for a proper 3-coloring of `g` that passes
/// [`check_degenerate_coloring`], with the default node budget.
pub fn find_degenerate_coloring(g: &Graph) -> Result<DegenerateSearch, DegenerateError> {
    find_degenerate_coloring_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Backtracking over proper colorings in vertex-id order. Color symmetry is
/// broken canonically (a vertex may only use colors up to one above the
/// maximum used so far), and a partial coloring is pruned as soon as its
/// fully-colored induced prefix fails to peel: every induced subgraph of
/// the prefix is an induced subgraph of the whole graph, so a degenerate
/// completion cannot exist past a non-peelable prefix.
pub fn find_degenerate_coloring_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<DegenerateSearch, DegenerateError> {
    require_at_most_one_triangle(g)?;
    if g.n() == 0 {
        return Ok(DegenerateSearch::Found(Coloring::new(3, Vec::new()).unwrap()));
    }
    let mut state = Search { g, colors: vec![0; g.n()], nodes: 0, budget };
    match state.recurse(0, 0) {
        Step::Found => {
            let coloring = Coloring::new(3, state.colors).unwrap();
            debug_assert!(check_degenerate_coloring(g, &coloring) == Ok(true));
            Ok(DegenerateSearch::Found(coloring))
        }
        Step::Exhausted => Ok(DegenerateSearch::Exhausted),
        Step::OutOfBudget => Ok(DegenerateSearch::Inconclusive { nodes: state.nodes }),
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<Color>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn recurse(&mut self, v: usize, max_used: Color) -> Step {
        if v == self.g.n() {
            return Step::Found;
        }
        let cap = (max_used + 1).min(2);
        for c in 0..=cap {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            if self
                .g
                .neighbors(v as Vertex)
                .iter()
                .any(|&w| (w as usize) < v && self.colors[w as usize] == c)
            {
                continue;
            }
            self.colors[v] = c;
            let mut alive = vec![false; self.g.n()];
            alive[..=v].fill(true);
            if !peels_out(self.g, &self.colors, &mut alive, v + 1) {
                continue;
            }
            match self.recurse(v + 1, max_used.max(c)) {
                Step::Found => return Step::Found,
                Step::OutOfBudget => return Step::OutOfBudget,
                Step::Exhausted => {}
            }
        }
        Step::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::augment;
    use crate::fixtures;
    use crate::pattern::Pattern;

    #[test]
    fn single_edge_is_degenerate() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let c = Coloring::new(3, vec![0, 1]).unwrap();
        assert_eq!(check_degenerate_coloring(&g, &c), Ok(true));
    }

    #[test]
    fn rainbow_triangle_is_the_exceptional_case() {
        let g = fixtures::clique(3);
        let c = Coloring::new(3, vec![0, 1, 2]).unwrap();
        assert_eq!(check_degenerate_coloring(&g, &c), Ok(true));
    }

    #[test]
    fn improper_coloring_rejected() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let c = Coloring::new(3, vec![0, 0]).unwrap();
        assert!(check_degenerate_coloring(&g, &c).is_err());
    }

    #[test]
    fn two_triangles_rejected() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(g.count_triangles(), 2);
        assert!(matches!(find_degenerate_coloring(&g), Err(DegenerateError::TooManyTriangles(2))));
    }

    #[test]
    fn search_finds_colorings_for_small_patterns() {
        match find_degenerate_coloring(&fixtures::path(3)).unwrap() {
            DegenerateSearch::Found(c) => {
                assert_eq!(check_degenerate_coloring(&fixtures::path(3), &c), Ok(true));
            }
            other => panic!("expected a coloring, got {other:?}"),
        }
        assert!(matches!(
            find_degenerate_coloring(&fixtures::clique(3)).unwrap(),
            DegenerateSearch::Found(_)
        ));
    }

    #[test]
    fn search_succeeds_on_augmented_p5() {
        let aug = augment(&Pattern::plain(fixtures::path(5)));
        match find_degenerate_coloring(aug.graph()).unwrap() {
            DegenerateSearch::Found(c) => {
                assert_eq!(check_degenerate_coloring(aug.graph(), &c), Ok(true));
            }
            other => panic!("expected a coloring for the 17-vertex graph, got {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_reports_inconclusive() {
        let (g, _) = fixtures::odd_cycle_blowup(5, 2);
        match find_degenerate_coloring_with_budget(&g, 3).unwrap() {
            DegenerateSearch::Inconclusive { nodes } => assert!(nodes > 3),
            other => panic!("tiny budget should be inconclusive, got {other:?}"),
        }
    }
}
