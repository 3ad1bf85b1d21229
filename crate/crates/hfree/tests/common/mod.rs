//! Independent brute-force oracles for the verification suites. These stay
//! deliberately naive and separate from the library implementations they
//! cross-check.

#![allow(dead_code)]

use hfree::coloring::Color;
use hfree::graph::{Graph, Vertex};
use hfree::pattern::CopyMode;

/// All proper 3-colorings by direct enumeration of the `3^n` assignments.
pub fn exhaustive_proper_3colorings(g: &Graph) -> Vec<Vec<Color>> {
    let n = g.n();
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut assign = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            assign.push((rest % 3) as Color);
            rest /= 3;
        }
        if g.edges().all(|(u, v)| assign[u as usize] != assign[v as usize]) {
            out.push(assign);
        }
    }
    out
}

/// Copy existence by enumeration of all injective tuples.
pub fn copy_exists_by_permutations(pattern: &Graph, host: &Graph, mode: CopyMode) -> bool {
    let k = pattern.n();
    if k > host.n() {
        return false;
    }
    let mut map: Vec<Vertex> = Vec::with_capacity(k);
    let mut used = vec![false; host.n()];
    fn rec(pattern: &Graph, host: &Graph, mode: CopyMode, map: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        if map.len() == pattern.n() {
            for u in 0..pattern.n() as Vertex {
                for v in (u + 1)..pattern.n() as Vertex {
                    let pe = pattern.has_edge(u, v);
                    let he = host.has_edge(map[u as usize], map[v as usize]);
                    let ok = match mode {
                        CopyMode::Subgraph => !pe || he,
                        CopyMode::Induced => pe == he,
                    };
                    if !ok {
                        return false;
                    }
                }
            }
            return true;
        }
        for cand in host.vertices() {
            if used[cand as usize] {
                continue;
            }
            map.push(cand);
            used[cand as usize] = true;
            if rec(pattern, host, mode, map, used) {
                return true;
            }
            used[cand as usize] = false;
            map.pop();
        }
        false
    }
    rec(pattern, host, mode, &mut map, &mut used)
}

/// The subset definition of a degenerate coloring: every induced subgraph
/// that is not a triangle has a vertex whose neighborhood inside the
/// subgraph is monochromatic or empty.
pub fn degenerate_by_subsets(g: &Graph, colors: &[Color]) -> bool {
    let n = g.n();
    assert!(n <= 20, "subset oracle is exponential");
    'subsets: for mask in 1u32..(1 << n) {
        let members: Vec<Vertex> =
            (0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() == 3 {
            let t = [members[0], members[1], members[2]];
            if g.is_triangle(t) {
                continue; // the exceptional subgraph
            }
        }
        for &v in &members {
            let mut seen: Option<Color> = None;
            let mut mono = true;
            for &w in g.neighbors(v) {
                if mask >> w & 1 == 0 {
                    continue;
                }
                match seen {
                    None => seen = Some(colors[w as usize]),
                    Some(c) => {
                        if c != colors[w as usize] {
                            mono = false;
                            break;
                        }
                    }
                }
            }
            if mono {
                continue 'subsets;
            }
        }
        return false;
    }
    true
}

/// All graphs on exactly `n` vertices, one per edge subset.
pub fn all_graphs_on(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
        .flat_map(|u| ((u + 1)..n as Vertex).map(move |v| (u, v)))
        .collect();
    (0u64..(1 << pairs.len())).map(move |mask| {
        let edges: Vec<(Vertex, Vertex)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges)
    })
}
