//! Deterministic graph families used as test fixtures and CLI generators.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use crate::pattern::Pattern;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("parameter {name} = {value} out of range: {reason}")]
    BadParameter { name: &'static str, value: String, reason: &'static str },
}

fn bad(name: &'static str, value: impl ToString, reason: &'static str) -> FixtureError {
    FixtureError::BadParameter { name, value: value.to_string(), reason }
}

/// Fixture families surfaced by the `gen` subcommand.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    RandomGnp { n: usize, p: f64 },
    OddCycleBlowup { cycle: usize, block: usize },
    CompleteTripartite { part: usize },
    PlantedTriangle { left: usize, right: usize },
    Path { n: usize },
    Cycle { n: usize },
    Clique { n: usize },
}

#[derive(Clone, Debug)]
pub struct FixtureSpec {
    pub family: Family,
    pub seed: u64,
}

impl FixtureSpec {
    /// Generates the graph and, for the colored families, its coloring.
    /// Deterministic given the seed.
    pub fn generate(&self) -> Result<(Graph, Option<Coloring>), FixtureError> {
        match self.family {
            Family::RandomGnp { n, p } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad("p", p, "edge probability must lie in [0, 1]"));
                }
                Ok((gnp(n, p, self.seed), None))
            }
            Family::OddCycleBlowup { cycle, block } => {
                if cycle < 5 || cycle % 2 == 0 {
                    return Err(bad("cycle", cycle, "blowup base must be an odd cycle of length >= 5"));
                }
                if block == 0 {
                    return Err(bad("block", block, "block size must be >= 1"));
                }
                let (g, c) = odd_cycle_blowup(cycle, block);
                Ok((g, Some(c)))
            }
            Family::CompleteTripartite { part } => {
                if part == 0 {
                    return Err(bad("part", part, "part size must be >= 1"));
                }
                let (g, c) = complete_tripartite(part);
                Ok((g, Some(c)))
            }
            Family::PlantedTriangle { left, right } => {
                if left == 0 || right == 0 {
                    return Err(bad("left/right", format!("{left}/{right}"), "both sides must be >= 1"));
                }
                let (g, _) = planted_triangle(left, right);
                Ok((g, None))
            }
            Family::Path { n } => Ok((path(n), None)),
            Family::Cycle { n } => {
                if n < 3 {
                    return Err(bad("n", n, "a cycle needs at least 3 vertices"));
                }
                Ok((cycle(n), None))
            }
            Family::Clique { n } => Ok((clique(n), None)),
        }
    }
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v as Vertex - 1, v as Vertex);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(0, n as Vertex - 1);
    g
}

pub fn clique(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u as Vertex, v as Vertex);
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u as Vertex, v as Vertex);
        }
    }
    g
}

/// Erdős–Rényi graph, each of the `C(n,2)` edges present independently
/// with probability `p`. Deterministic given the seed.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, p, &mut rng)
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u as Vertex, v as Vertex);
            }
        }
    }
    g
}

/// Blowup of an odd cycle: every cycle vertex becomes an independent block
/// of `block` vertices and every cycle edge a complete bipartite graph.
///
/// Block `i` holds ids `i*block .. (i+1)*block`. The returned coloring
/// assigns color `i mod 3` to block `i` when the cycle length is divisible
/// by 3 (the pattern that leaves the blowup free of the cyclically colored
/// C6); otherwise blocks alternate colors 0/1 with the last block colored 2.
pub fn odd_cycle_blowup(cycle_len: usize, block: usize) -> (Graph, Coloring) {
    assert!(cycle_len >= 5 && cycle_len % 2 == 1);
    assert!(block >= 1);
    let n = cycle_len * block;
    let mut g = Graph::new(n);
    for i in 0..cycle_len {
        let j = (i + 1) % cycle_len;
        for a in 0..block {
            for b in 0..block {
                g.add_edge((i * block + a) as Vertex, (j * block + b) as Vertex);
            }
        }
    }
    let block_color = |i: usize| -> Color {
        if cycle_len % 3 == 0 {
            (i % 3) as Color
        } else if i == cycle_len - 1 {
            2
        } else {
            (i % 2) as Color
        }
    };
    let assign: Vec<Color> = (0..n).map(|v| block_color(v / block)).collect();
    let c = Coloring::new(3, assign).unwrap();
    debug_assert!(c.is_proper(&g));
    (g, c)
}

/// `K_{s,s,s}` with its natural 3-coloring; contains exactly `s^3` triangles.
pub fn complete_tripartite(s: usize) -> (Graph, Coloring) {
    let n = 3 * s;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if u / s != v / s {
                g.add_edge(u as Vertex, v as Vertex);
            }
        }
    }
    let assign: Vec<Color> = (0..n).map(|v| (v / s) as Color).collect();
    (g, Coloring::new(3, assign).unwrap())
}

/// A host with exactly one triangle: a complete bipartite graph `K_{left,right}`,
/// an apex `a` joined to the whole left side, and two extra vertices `b`, `c`
/// forming the triangle `abc` with the apex.
///
/// The result contains no induced 5-vertex path, which makes it a valid
/// promise host for induced-P5-free detection runs. Returns the planted
/// triangle's vertex ids.
pub fn planted_triangle(left: usize, right: usize) -> (Graph, [Vertex; 3]) {
    assert!(left >= 1 && right >= 1);
    let mut g = complete_bipartite(left, right);
    let a = g.add_vertices(3);
    let (b, c) = (a + 1, a + 2);
    for l in 0..left {
        g.add_edge(a, l as Vertex);
    }
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(b, c);
    (g, [a, b, c])
}

/// The 3-colored patterns exercised by `verify --all` and the acceptance
/// suite: a cyclically colored C6, a two-colored edge, a P4 using all three
/// colors, a rainbow K3, and K3 with a pendant sharing a triangle color.
pub fn colored_pattern_corpus() -> Vec<(&'static str, Pattern)> {
    let colored = |g: Graph, colors: Vec<Color>| {
        Pattern::colored(g, Coloring::new(3, colors).unwrap()).expect("proper fixture coloring")
    };
    let mut k3_pendant = clique(3);
    let p = k3_pendant.add_vertices(1);
    k3_pendant.add_edge(0, p);
    vec![
        ("colored-c6", colored(cycle(6), vec![0, 1, 2, 0, 1, 2])),
        ("colored-edge", colored(path(2), vec![0, 1])),
        ("colored-p4", colored(path(4), vec![0, 1, 2, 0])),
        ("colored-k3", colored(clique(3), vec![0, 1, 2])),
        ("k3-pendant", colored(k3_pendant, vec![0, 1, 2, 1])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{find_copy, CopyMode};

    #[test]
    fn blowup_size_and_triangle_freeness() {
        let (g, c) = odd_cycle_blowup(9, 3);
        assert_eq!(g.n(), 27);
        assert_eq!(g.m(), 81); // 9 cycle edges, each a K_{3,3}
        assert!(g.is_triangle_free());
        assert!(c.is_proper(&g));
    }

    #[test]
    fn blowup_block_pair_is_complete_bipartite() {
        let (g, _) = odd_cycle_blowup(9, 3);
        let verts: Vec<Vertex> = (0..6).collect(); // blocks 0 and 1
        let (sub, _) = g.induced_subgraph(&verts);
        assert_eq!(sub.n(), 6);
        assert_eq!(sub.m(), 9);
        assert!(sub.is_triangle_free());
    }

    #[test]
    fn blowup_coloring_for_non_multiple_of_three() {
        let (g, c) = odd_cycle_blowup(7, 2);
        assert!(c.is_proper(&g));
    }

    #[test]
    fn tripartite_triangle_count() {
        let (g, c) = complete_tripartite(4);
        assert_eq!(g.count_triangles(), 64);
        assert!(c.is_proper(&g));
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(100, 0.0, 7).m(), 0);
        assert_eq!(gnp(20, 1.0, 7).m(), 190);
        // determinism
        assert_eq!(gnp(50, 0.3, 42), gnp(50, 0.3, 42));
    }

    #[test]
    fn planted_triangle_is_unique_and_p5_safe() {
        let (g, t) = planted_triangle(6, 5);
        assert_eq!(g.count_triangles(), 1);
        assert!(g.is_triangle(t));
        assert!(find_copy(&path(5), &g, CopyMode::Induced).is_none());
    }

    #[test]
    fn c5_blowup_has_no_induced_p5() {
        let (g, _) = odd_cycle_blowup(5, 3);
        assert!(find_copy(&path(5), &g, CopyMode::Induced).is_none());
        // but C9 blowups do contain induced P5s
        let (g9, _) = odd_cycle_blowup(9, 2);
        assert!(find_copy(&path(5), &g9, CopyMode::Induced).is_some());
    }

    #[test]
    fn family_parameter_validation() {
        assert!(FixtureSpec { family: Family::OddCycleBlowup { cycle: 6, block: 2 }, seed: 0 }
            .generate()
            .is_err());
        assert!(FixtureSpec { family: Family::RandomGnp { n: 5, p: 1.5 }, seed: 0 }
            .generate()
            .is_err());
        assert!(FixtureSpec { family: Family::Cycle { n: 2 }, seed: 0 }.generate().is_err());
    }
}
