//! Sieving toward unique-triangle instances by vertex subsampling.
//!
//! For each color class the true number of its vertices touching a
//! triangle is unknown, so it is guessed on a geometric grid
//! `t ∈ {1, 2, 4, ...}`; keeping each class vertex with probability `1/t`
//! leaves, at the right guess, a single triangle vertex in that class with
//! constant probability. Guesses are nested over the three classes and each
//! combination is repeated independently. Outputs are induced subgraphs of
//! the input instance (vertex deletions only, never edge deletions), so
//! induced freeness survives sieving.

use rand::Rng;

use crate::graph::Vertex;

use super::colorcode::Instance;

/// The guess grid for a class of the given size: powers of two from 1 up to
/// the first one at or above the class size. Every true count in
/// `1..=size` is then within a factor √2·√2 of some guess.
pub fn subsample_guesses(class_size: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    while (*out.last().unwrap() as usize) < class_size {
        let next = out.last().unwrap() * 2;
        out.push(next);
    }
    out
}

/// Sieves one 3-colored instance into `O(reps · log^3)` induced subgraphs.
/// With full retention (`t = 1` everywhere) the instance itself is among
/// the outputs, so an already-unique triangle is never lost.
pub fn sieve<R: Rng>(inst: &Instance, reps: usize, rng: &mut R) -> Vec<Instance> {
    assert!(reps >= 1);
    assert_eq!(inst.coloring.palette(), 3, "sieve needs a 3-colored instance");
    let classes = inst.coloring.classes();
    let guesses: Vec<Vec<u64>> = classes.iter().map(|c| subsample_guesses(c.len())).collect();

    let mut out = Vec::new();
    for &t0 in &guesses[0] {
        for &t1 in &guesses[1] {
            for &t2 in &guesses[2] {
                for _ in 0..reps {
                    let ts = [t0, t1, t2];
                    let mut keep: Vec<Vertex> = Vec::new();
                    for (class, &t) in classes.iter().zip(&ts) {
                        if t == 1 {
                            keep.extend(class);
                        } else {
                            let p = 1.0 / t as f64;
                            keep.extend(class.iter().filter(|_| rng.gen_bool(p)));
                        }
                    }
                    keep.sort_unstable();
                    let (graph, local_back) = inst.graph.induced_subgraph(&keep);
                    let coloring = inst.coloring.restrict(&local_back);
                    let back_map: Vec<Vertex> =
                        local_back.iter().map(|&v| inst.to_host(v)).collect();
                    out.push(Instance { graph, coloring, back_map });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Coloring;
    use crate::fixtures;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn as_instance(graph: crate::graph::Graph, coloring: Coloring) -> Instance {
        let back_map = (0..graph.n() as Vertex).collect();
        Instance { graph, coloring, back_map }
    }

    #[test]
    fn guess_grid_covers_the_class() {
        assert_eq!(subsample_guesses(0), vec![1]);
        assert_eq!(subsample_guesses(1), vec![1]);
        assert_eq!(subsample_guesses(6), vec![1, 2, 4, 8]);
        assert_eq!(subsample_guesses(8), vec![1, 2, 4, 8]);
    }

    #[test]
    fn outputs_of_triangle_free_instances_stay_triangle_free() {
        let (g, c) = fixtures::odd_cycle_blowup(5, 3);
        let inst = as_instance(g, c);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for out in sieve(&inst, 2, &mut rng) {
            assert!(out.graph.is_triangle_free());
            assert!(out.coloring.is_proper(&out.graph));
        }
    }

    #[test]
    fn full_retention_preserves_a_unique_triangle() {
        // triangle with one vertex per class
        let g = crate::graph::Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let inst = as_instance(g, Coloring::new(3, vec![0, 1, 2]).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let outputs = sieve(&inst, 1, &mut rng);
        assert!(outputs.iter().any(|o| o.graph.count_triangles() == 1));
    }

    #[test]
    fn back_maps_compose_to_host_ids() {
        let (g, c) = fixtures::complete_tripartite(3);
        let (sub, back) = g.induced_subgraph(&[0, 1, 3, 4, 6, 7]);
        let inst = Instance { graph: sub, coloring: c.restrict(&back), back_map: back };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for out in sieve(&inst, 1, &mut rng) {
            for v in out.graph.vertices() {
                let host = out.to_host(v);
                assert!((host as usize) < g.n());
            }
            for (u, v) in out.graph.edges() {
                assert!(g.has_edge(out.to_host(u), out.to_host(v)));
            }
        }
    }

    #[test]
    fn isolation_rate_on_complete_tripartite() {
        // quick version of the acceptance check: 40 trials, K_{4,4,4}
        let (g, c) = fixtures::complete_tripartite(4);
        let inst = as_instance(g, c);
        let mut successes = 0;
        for seed in 0..40 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let outputs = sieve(&inst, 8, &mut rng);
            if outputs.iter().any(|o| o.graph.count_triangles() == 1) {
                successes += 1;
            }
        }
        assert!(successes >= 34, "isolation succeeded only {successes}/40 times");
    }
}
