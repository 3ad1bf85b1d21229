//! Patterns, embeddings, and the backtracking copy-search oracles.
//!
//! A copy of `H` in `G` is an injective homomorphism; an induced copy
//! additionally reflects non-edges. A colored copy preserves a fixed
//! 3-coloring on both sides.

use std::collections::BTreeMap;

use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PatternError {
    #[error("pattern coloring must use palette 3, got {0}")]
    BadPalette(usize),
    #[error("pattern coloring is not proper")]
    ImproperColoring,
    #[error("terminal {name:?} maps to vertex {vertex}, but the pattern has {n} vertices")]
    BadTerminal { name: String, vertex: Vertex, n: usize },
    #[error("host coloring must use palette 3, got {0}")]
    HostPalette(usize),
    #[error("pattern has no fixed coloring; colored search needs one")]
    MissingColoring,
}

/// A graph tagged as a forbidden pattern, optionally carrying the fixed
/// 3-coloring of the colored setting and named terminal vertices.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    fixed_coloring: Option<Coloring>,
    terminals: BTreeMap<String, Vertex>,
}

impl Pattern {
    /// Uncolored pattern.
    pub fn plain(graph: Graph) -> Self {
        Pattern { graph, fixed_coloring: None, terminals: BTreeMap::new() }
    }

    /// Pattern with a fixed proper 3-coloring.
    pub fn colored(graph: Graph, coloring: Coloring) -> Result<Self, PatternError> {
        if coloring.palette() != 3 {
            return Err(PatternError::BadPalette(coloring.palette()));
        }
        if !coloring.is_proper(&graph) {
            return Err(PatternError::ImproperColoring);
        }
        Ok(Pattern { graph, fixed_coloring: Some(coloring), terminals: BTreeMap::new() })
    }

    pub fn with_terminals(mut self, terminals: BTreeMap<String, Vertex>) -> Result<Self, PatternError> {
        for (name, &v) in &terminals {
            if v as usize >= self.graph.n() {
                return Err(PatternError::BadTerminal {
                    name: name.clone(),
                    vertex: v,
                    n: self.graph.n(),
                });
            }
        }
        self.terminals = terminals;
        Ok(self)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn fixed_coloring(&self) -> Option<&Coloring> {
        self.fixed_coloring.as_ref()
    }

    pub fn terminals(&self) -> &BTreeMap<String, Vertex> {
        &self.terminals
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CopyMode {
    /// Injective homomorphism: edges of the pattern map to edges.
    Subgraph,
    /// Additionally edge-reflecting: non-edges map to non-edges.
    Induced,
}

/// An injective map pattern-vertex → host-vertex, with the mode it was
/// found under recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<Vertex>,
    mode: CopyMode,
}

impl Embedding {
    pub fn map(&self) -> &[Vertex] {
        &self.map
    }

    pub fn image(&self, pattern_vertex: Vertex) -> Vertex {
        self.map[pattern_vertex as usize]
    }

    pub fn mode(&self) -> CopyMode {
        self.mode
    }

    /// Re-checks injectivity and the (mode-dependent) homomorphism
    /// condition against the given pattern and host.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &v in &self.map {
            if v as usize >= host.n() || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        for u in pattern.vertices() {
            for v in (u + 1)..pattern.n() as Vertex {
                let pe = pattern.has_edge(u, v);
                let he = host.has_edge(self.image(u), self.image(v));
                match self.mode {
                    CopyMode::Subgraph => {
                        if pe && !he {
                            return false;
                        }
                    }
                    CopyMode::Induced => {
                        if pe != he {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Backtracking search for a copy of `pattern` in `host`.
///
/// Pattern vertices are embedded in id order and host candidates are tried
/// in increasing order, so the returned embedding is the lexicographically
/// smallest valid map. Degree-based pruning only skips host vertices that
/// cannot be the image of the current pattern vertex in any embedding.
pub fn find_copy(pattern: &Graph, host: &Graph, mode: CopyMode) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut map: Vec<Vertex> = Vec::with_capacity(pattern.n());
    let mut used = vec![false; host.n()];
    if embed(pattern, host, mode, &mut map, &mut used) {
        Some(Embedding { map, mode })
    } else {
        None
    }
}

fn embed(pattern: &Graph, host: &Graph, mode: CopyMode, map: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
    let u = map.len() as Vertex;
    if u as usize == pattern.n() {
        return true;
    }
    // Candidates: neighbors of an already-mapped pattern neighbor if one
    // exists (sorted, so order stays ascending), otherwise all vertices.
    let anchor = pattern.neighbors(u).iter().find(|&&w| w < u).copied();
    let candidates: Box<dyn Iterator<Item = Vertex>> = match anchor {
        Some(w) => Box::new(host.neighbors(map[w as usize]).iter().copied()),
        None => Box::new(host.vertices()),
    };
    for cand in candidates {
        if used[cand as usize] || host.degree(cand) < pattern.degree(u) {
            continue;
        }
        if !consistent(pattern, host, map, u, cand, mode) {
            continue;
        }
        map.push(cand);
        used[cand as usize] = true;
        if embed(pattern, host, mode, map, used) {
            return true;
        }
        used[cand as usize] = false;
        map.pop();
    }
    false
}

fn consistent(pattern: &Graph, host: &Graph, map: &[Vertex], u: Vertex, cand: Vertex, mode: CopyMode) -> bool {
    for w in 0..u {
        let pe = pattern.has_edge(u, w);
        let he = host.has_edge(cand, map[w as usize]);
        match mode {
            CopyMode::Subgraph => {
                if pe && !he {
                    return false;
                }
            }
            CopyMode::Induced => {
                if pe != he {
                    return false;
                }
            }
        }
    }
    true
}

/// Color-preserving copy search: an injective homomorphism φ with
/// `host_coloring(φ(v)) = pattern.fixed_coloring(v)` for every v.
///
/// Both colorings must use palette 3.
pub fn find_colored_copy(
    pattern: &Pattern,
    host: &Graph,
    host_coloring: &Coloring,
) -> Result<Option<Embedding>, PatternError> {
    let pc = pattern.fixed_coloring().ok_or(PatternError::MissingColoring)?;
    if pc.palette() != 3 {
        return Err(PatternError::BadPalette(pc.palette()));
    }
    if host_coloring.palette() != 3 {
        return Err(PatternError::HostPalette(host_coloring.palette()));
    }
    if pattern.n() > host.n() {
        return Ok(None);
    }
    let mut map: Vec<Vertex> = Vec::with_capacity(pattern.n());
    let mut used = vec![false; host.n()];
    let found = embed_colored(
        pattern.graph(),
        host,
        pc.colors(),
        host_coloring.colors(),
        &mut map,
        &mut used,
    );
    Ok(found.then(|| Embedding { map, mode: CopyMode::Subgraph }))
}

fn embed_colored(
    pattern: &Graph,
    host: &Graph,
    pc: &[Color],
    hc: &[Color],
    map: &mut Vec<Vertex>,
    used: &mut [bool],
) -> bool {
    let u = map.len() as Vertex;
    if u as usize == pattern.n() {
        return true;
    }
    let anchor = pattern.neighbors(u).iter().find(|&&w| w < u).copied();
    let candidates: Box<dyn Iterator<Item = Vertex>> = match anchor {
        Some(w) => Box::new(host.neighbors(map[w as usize]).iter().copied()),
        None => Box::new(host.vertices()),
    };
    for cand in candidates {
        if used[cand as usize]
            || hc[cand as usize] != pc[u as usize]
            || host.degree(cand) < pattern.degree(u)
        {
            continue;
        }
        if !consistent(pattern, host, map, u, cand, CopyMode::Subgraph) {
            continue;
        }
        map.push(cand);
        used[cand as usize] = true;
        if embed_colored(pattern, host, pc, hc, map, used) {
            return true;
        }
        used[cand as usize] = false;
        map.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn path_inside_triangle() {
        let p3 = fixtures::path(3);
        let k3 = fixtures::clique(3);
        let found = find_copy(&p3, &k3, CopyMode::Subgraph).unwrap();
        assert!(found.is_valid(&p3, &k3));
        // K3 has no non-edge, so no induced P3.
        assert!(find_copy(&p3, &k3, CopyMode::Induced).is_none());
    }

    #[test]
    fn pattern_larger_than_host() {
        assert!(find_copy(&fixtures::path(4), &fixtures::path(3), CopyMode::Subgraph).is_none());
    }

    #[test]
    fn c4_in_blowup() {
        let (host, _) = fixtures::odd_cycle_blowup(9, 2);
        let c4 = fixtures::cycle(4);
        let e = find_copy(&c4, &host, CopyMode::Subgraph).expect("C4 embeds in the blowup");
        assert!(e.is_valid(&c4, &host));
    }

    #[test]
    fn single_colored_vertex() {
        let mut one = Graph::new(1);
        let _ = &mut one;
        let pattern =
            Pattern::colored(one, Coloring::new(3, vec![1]).unwrap()).unwrap();
        let host = fixtures::path(3);
        let hc = Coloring::new(3, vec![0, 1, 0]).unwrap();
        let found = find_colored_copy(&pattern, &host, &hc).unwrap().unwrap();
        assert_eq!(hc.color(found.image(0)), 1);
    }

    #[test]
    fn palette_mismatch_rejected() {
        let pattern = Pattern::colored(fixtures::path(2), Coloring::new(3, vec![0, 1]).unwrap()).unwrap();
        let host = fixtures::path(2);
        let hc = Coloring::new(2, vec![0, 1]).unwrap();
        assert!(find_colored_copy(&pattern, &host, &hc).is_err());
    }

    #[test]
    fn subgraph_but_not_induced_uses_a_non_edge() {
        // P3 in K3: the embedding must map the non-edge of P3 onto an edge.
        let p3 = fixtures::path(3);
        let k3 = fixtures::clique(3);
        let e = find_copy(&p3, &k3, CopyMode::Subgraph).unwrap();
        assert!(find_copy(&p3, &k3, CopyMode::Induced).is_none());
        let hits_non_edge = p3.non_edges().iter().any(|&(u, v)| k3.has_edge(e.image(u), e.image(v)));
        assert!(hits_non_edge);
    }

    #[test]
    fn terminals_validated() {
        let mut t = BTreeMap::new();
        t.insert("u".to_string(), 5);
        assert!(Pattern::plain(fixtures::path(3)).with_terminals(t).is_err());
    }
}
