//! Vertex colorings and a propagation-assisted backtracking solver for
//! proper 3-colorings.
//!
//! The solver decides whether a partial assignment on a terminal set
//! extends to a full proper 3-coloring. The gadget constructions are rigid,
//! so forced-vertex propagation (a vertex whose neighbors already carry two
//! distinct colors has only one color left) collapses most of the search;
//! plain enumeration of all `3^n` colorings would be hopeless for the
//! larger patterns.

use crate::graph::{Graph, Vertex};
use thiserror::Error;

/// Color id within a palette.
pub type Color = u8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring assigns color {color} to vertex {vertex}, outside palette of size {palette}")]
    ColorOutOfPalette { vertex: Vertex, color: usize, palette: usize },
    #[error("coloring covers {len} vertices but the graph has {n}")]
    LengthMismatch { len: usize, n: usize },
    #[error("coloring is not proper: edge ({u},{v}) is monochromatic")]
    NotProper { u: Vertex, v: Vertex },
    #[error("expected palette {expected}, got {got}")]
    PaletteMismatch { expected: usize, got: usize },
}

/// A total map vertex → color over a palette of `k ≥ 1` colors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    palette: usize,
    assign: Vec<Color>,
}

impl Coloring {
    pub fn new(palette: usize, assign: Vec<Color>) -> Result<Self, ColoringError> {
        assert!(palette >= 1 && palette <= Color::MAX as usize);
        for (v, &c) in assign.iter().enumerate() {
            if c as usize >= palette {
                return Err(ColoringError::ColorOutOfPalette {
                    vertex: v as Vertex,
                    color: c as usize,
                    palette,
                });
            }
        }
        Ok(Coloring { palette, assign })
    }

    /// Constant coloring, color 0 everywhere.
    pub fn uniform(n: usize) -> Self {
        Coloring { palette: 1, assign: vec![0; n] }
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.assign[v as usize]
    }

    pub fn colors(&self) -> &[Color] {
        &self.assign
    }

    /// Widens the palette without changing any assignment. Used when a
    /// pattern file happens to use fewer than 3 colors but is meant as a
    /// 3-colored pattern.
    pub fn promote(&self, palette: usize) -> Result<Self, ColoringError> {
        if palette < self.palette {
            return Err(ColoringError::PaletteMismatch { expected: self.palette, got: palette });
        }
        Ok(Coloring { palette, assign: self.assign.clone() })
    }

    /// True iff no edge of `g` is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check_proper(g).is_ok()
    }

    pub fn check_proper(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.assign.len() != g.n() {
            return Err(ColoringError::LengthMismatch { len: self.assign.len(), n: g.n() });
        }
        for (u, v) in g.edges() {
            if self.color(u) == self.color(v) {
                return Err(ColoringError::NotProper { u, v });
            }
        }
        Ok(())
    }

    /// Color classes, indexed by color. Each class lists its vertices in
    /// increasing id order.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.palette];
        for (v, &c) in self.assign.iter().enumerate() {
            out[c as usize].push(v as Vertex);
        }
        out
    }

    /// Restriction to an induced subgraph given by a back-map.
    pub fn restrict(&self, back_map: &[Vertex]) -> Coloring {
        Coloring {
            palette: self.palette,
            assign: back_map.iter().map(|&v| self.assign[v as usize]).collect(),
        }
    }
}

const UNSET: Color = Color::MAX;
const ALL3: u8 = 0b111;

enum Trail {
    Avail(Vertex, u8),
    Colored(Vertex),
}

/// Backtracking 3-coloring solver with forced-vertex propagation.
struct Solver<'a> {
    g: &'a Graph,
    avail: Vec<u8>,
    color: Vec<Color>,
    uncolored: usize,
    trail: Vec<Trail>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph) -> Self {
        Solver {
            g,
            avail: vec![ALL3; g.n()],
            color: vec![UNSET; g.n()],
            uncolored: g.n(),
            trail: Vec::new(),
        }
    }

    fn reset(&mut self) {
        self.avail.fill(ALL3);
        self.color.fill(UNSET);
        self.uncolored = self.g.n();
        self.trail.clear();
    }

    /// Assigns `v := c` and propagates every forced consequence.
    /// Returns false on a wipe-out (some vertex has no color left).
    fn assign(&mut self, v: Vertex, c: Color) -> bool {
        if self.color[v as usize] != UNSET {
            return self.color[v as usize] == c;
        }
        if self.avail[v as usize] & (1 << c) == 0 {
            return false;
        }
        let mut queue = vec![(v, c)];
        while let Some((v, c)) = queue.pop() {
            if self.color[v as usize] != UNSET {
                if self.color[v as usize] != c {
                    return false;
                }
                continue;
            }
            self.trail.push(Trail::Colored(v));
            self.color[v as usize] = c;
            self.uncolored -= 1;
            for &w in self.g.neighbors(v) {
                let wi = w as usize;
                if self.color[wi] != UNSET {
                    if self.color[wi] == c {
                        return false;
                    }
                    continue;
                }
                let prev = self.avail[wi];
                if prev & (1 << c) == 0 {
                    continue;
                }
                let next = prev & !(1 << c);
                self.trail.push(Trail::Avail(w, prev));
                self.avail[wi] = next;
                match next.count_ones() {
                    0 => return false,
                    1 => queue.push((w, next.trailing_zeros() as Color)),
                    _ => {}
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Trail::Avail(v, prev) => self.avail[v as usize] = prev,
                Trail::Colored(v) => {
                    self.color[v as usize] = UNSET;
                    self.uncolored += 1;
                }
            }
        }
    }

    /// Branching vertex within a component: fewest available colors,
    /// lowest id breaking ties.
    fn pick(&self, component: &[Vertex]) -> Option<Vertex> {
        let mut best: Option<(u32, Vertex)> = None;
        for &v in component {
            if self.color[v as usize] == UNSET {
                let k = self.avail[v as usize].count_ones();
                if best.map_or(true, |(bk, _)| k < bk) {
                    if k == 2 {
                        return Some(v);
                    }
                    best = Some((k, v));
                }
            }
        }
        best.map(|(_, v)| v)
    }

    fn search(&mut self, component: &[Vertex]) -> bool {
        let Some(v) = self.pick(component) else {
            return true;
        };
        let avail = self.avail[v as usize];
        for c in 0..3 {
            if avail & (1 << c) == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(v, c) && self.search(component) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }

    /// Connected components of the still-uncolored subgraph. Colored
    /// vertices separate components, and propagation never crosses them,
    /// so each component can be solved on its own; this keeps independent
    /// gadgets from multiplying each other's backtracking.
    fn uncolored_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.color[start] != UNSET {
                continue;
            }
            let mut comp = vec![start as Vertex];
            let mut stack = vec![start as Vertex];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &w in self.g.neighbors(v) {
                    let wi = w as usize;
                    if !seen[wi] && self.color[wi] == UNSET {
                        seen[wi] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn solve_with(&mut self, fixed: &[(Vertex, Color)]) -> bool {
        self.reset();
        for &(v, c) in fixed {
            if !self.assign(v, c) {
                return false;
            }
        }
        if self.uncolored == 0 {
            return true;
        }
        self.uncolored_components().iter().all(|comp| self.search(comp))
    }
}

/// Does the partial assignment `fixed` extend to a full proper 3-coloring?
pub fn extends_to_three_coloring(g: &Graph, fixed: &[(Vertex, Color)]) -> bool {
    Solver::new(g).solve_with(fixed)
}

pub fn is_three_colorable(g: &Graph) -> bool {
    extends_to_three_coloring(g, &[])
}

/// Some proper 3-coloring, or `None` iff the graph is not 3-colorable.
/// Deterministic: lowest-id, lowest-color branching.
pub fn find_three_coloring(g: &Graph) -> Option<Coloring> {
    let mut solver = Solver::new(g);
    if solver.solve_with(&[]) {
        Some(Coloring { palette: 3, assign: solver.color })
    } else {
        None
    }
}

/// Exactly those assignments on `terminals` that extend to a full proper
/// 3-coloring of `g`, in lexicographic order over assignments.
///
/// The caller is responsible for keeping `3^|terminals|` enumerable.
pub fn enumerate_extendable_colorings(g: &Graph, terminals: &[Vertex]) -> Vec<Vec<Color>> {
    let t = terminals.len();
    let mut solver = Solver::new(g);
    let mut out = Vec::new();
    let mut assignment = vec![0 as Color; t];
    loop {
        let fixed: Vec<(Vertex, Color)> =
            terminals.iter().copied().zip(assignment.iter().copied()).collect();
        if solver.solve_with(&fixed) {
            out.push(assignment.clone());
        }
        // odometer increment, last position fastest
        let mut i = t;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if assignment[i] < 2 {
                assignment[i] += 1;
                break;
            }
            assignment[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_edge_terminal_projection() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let ext = enumerate_extendable_colorings(&g, &[0, 1]);
        assert_eq!(ext.len(), 6);
        assert!(ext.iter().all(|a| a[0] != a[1]));
    }

    #[test]
    fn odd_cycle_needs_three_colors() {
        assert!(is_three_colorable(&fixtures::cycle(5)));
        let c = find_three_coloring(&fixtures::cycle(5)).unwrap();
        assert!(c.is_proper(&fixtures::cycle(5)));
    }

    #[test]
    fn k4_is_not_three_colorable() {
        assert!(!is_three_colorable(&fixtures::clique(4)));
    }

    #[test]
    fn fixed_conflict_is_rejected() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        assert!(!extends_to_three_coloring(&g, &[(0, 1), (1, 1)]));
        assert!(extends_to_three_coloring(&g, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn promote_widens_palette() {
        let c = Coloring::new(2, vec![0, 1]).unwrap();
        let p = c.promote(3).unwrap();
        assert_eq!(p.palette(), 3);
        assert!(c.promote(1).is_err());
    }

    #[test]
    fn classes_are_sorted() {
        let c = Coloring::new(3, vec![2, 0, 2, 1]).unwrap();
        assert_eq!(c.classes(), vec![vec![1], vec![3], vec![0, 2]]);
    }

    /// Exhaustive cross-check of the solver against direct enumeration of
    /// all 3^n colorings, over every graph on 4 vertices.
    #[test]
    fn solver_agrees_with_exhaustive_enumeration_small() {
        let pairs: Vec<(Vertex, Vertex)> =
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges);
            let brute: Vec<Vec<Color>> = (0..81u32)
                .map(|code| (0..4).map(|i| (code / 3u32.pow(i) % 3) as Color).collect())
                .filter(|a: &Vec<Color>| {
                    g.edges().all(|(u, v)| a[u as usize] != a[v as usize])
                })
                .collect();
            let terminals: Vec<Vertex> = (0..4).collect();
            let mut solved = enumerate_extendable_colorings(&g, &terminals);
            let mut brute: Vec<Vec<Color>> = brute
                .into_iter()
                .map(|a| {
                    // brute enumeration above is little-endian; re-order to match
                    terminals.iter().map(|&v| a[v as usize]).collect()
                })
                .collect();
            solved.sort();
            brute.sort();
            assert_eq!(solved, brute, "mismatch on edge mask {mask:b}");
        }
    }
}
