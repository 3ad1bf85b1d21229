//! Color-coded instance generation that preserves induced freeness.
//!
//! The generator either finds a triangle outright or partitions the host
//! into `O(√n)` independent color classes and emits one instance per class
//! triplet, each the *induced* subgraph on the triplet's union. No edges
//! are deleted, so every induced-pattern-freeness property of the host
//! carries over to every instance, and every triangle of the host lands in
//! exactly one instance (its corners sit in three distinct classes).

use rand::Rng;

use crate::coloring::{Color, Coloring};
use crate::graph::{ceil_sqrt, Graph, Vertex};

/// Outcome of the triangle-or-coloring subroutine.
#[derive(Clone, Debug)]
pub enum TriangleOrColoring {
    Triangle([Vertex; 3]),
    Coloring(Coloring),
}

/// Either finds a triangle or produces a proper coloring with at most
/// `2⌈√n⌉` colors.
///
/// Phase I: while some remaining vertex has degree at least `⌈√n⌉`, take
/// its first `⌈√n⌉` remaining neighbors `U` and scan the adjacency of `U`'s
/// members for an internal edge. An internal edge closes a triangle with
/// the center; otherwise `U` is independent, becomes a fresh color class,
/// and is deleted. Phase II greedily colors the rest (max degree is now
/// below `⌈√n⌉`) with a fresh palette of at most `⌈√n⌉` colors.
pub fn triangle_or_sqrt_coloring(g: &Graph) -> TriangleOrColoring {
    let n = g.n();
    if n == 0 {
        return TriangleOrColoring::Coloring(Coloring::uniform(0));
    }
    let s = ceil_sqrt(n).max(1);
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut color: Vec<Color> = vec![Color::MAX; n];
    let mut next_color: usize = 0;

    // Phase I
    loop {
        let Some(center) = (0..n).find(|&v| alive[v] && deg[v] >= s) else {
            break;
        };
        let u_set: Vec<Vertex> = g
            .neighbors(center as Vertex)
            .iter()
            .copied()
            .filter(|&w| alive[w as usize])
            .take(s)
            .collect();
        debug_assert_eq!(u_set.len(), s);
        let mut in_u = vec![false; n];
        for &u in &u_set {
            in_u[u as usize] = true;
        }
        // O(sum of degrees over U) independence scan
        let mut internal_edge = None;
        'scan: for &u in &u_set {
            for &w in g.neighbors(u) {
                if w > u && in_u[w as usize] {
                    internal_edge = Some((u, w));
                    break 'scan;
                }
            }
        }
        if let Some((u, w)) = internal_edge {
            let mut tri = [center as Vertex, u, w];
            tri.sort_unstable();
            debug_assert!(g.is_triangle(tri));
            return TriangleOrColoring::Triangle(tri);
        }
        assert!(next_color < Color::MAX as usize, "palette overflow");
        for &u in &u_set {
            color[u as usize] = next_color as Color;
            alive[u as usize] = false;
            for &w in g.neighbors(u) {
                if alive[w as usize] {
                    deg[w as usize] -= 1;
                }
            }
        }
        next_color += 1;
    }

    // Phase II: greedy with a fresh palette. Colors stay contiguous because
    // the smallest free color is always picked.
    let base = next_color;
    let mut used = vec![usize::MAX; s + 1];
    for v in 0..n {
        if !alive[v] {
            continue;
        }
        for &w in g.neighbors(v as Vertex) {
            let c = color[w as usize];
            if alive[w as usize] && c != Color::MAX {
                let offset = c as usize - base;
                if offset <= s {
                    used[offset] = v;
                }
            }
        }
        let offset = (0..=s).find(|&k| used[k] != v).expect("degree below s leaves a free color");
        assert!(base + offset < Color::MAX as usize, "palette overflow");
        color[v] = (base + offset) as Color;
        next_color = next_color.max(base + offset + 1);
    }

    let palette = next_color.max(1);
    let coloring = Coloring::new(palette, color).expect("all colors in palette");
    debug_assert!(coloring.is_proper(g));
    TriangleOrColoring::Coloring(coloring)
}

/// Splits every class larger than `cap_factor·⌈√n⌉` into blocks of `⌈√n⌉`
/// fresh colors (plus a remainder of at most twice that). Blocks are
/// subsets of the original classes, so they stay independent.
pub fn refine_classes(c: &Coloring, cap_factor: usize) -> Coloring {
    assert!(cap_factor >= 1);
    let n = c.len();
    let s = ceil_sqrt(n).max(1);
    let cap = cap_factor * s;
    let mut new_classes: Vec<Vec<Vertex>> = Vec::new();
    for class in c.classes() {
        if class.is_empty() {
            continue;
        }
        let mut rest = class;
        while rest.len() > cap {
            let tail = rest.split_off(s);
            new_classes.push(rest);
            rest = tail;
        }
        new_classes.push(rest);
    }
    let mut assign = vec![0 as Color; n];
    for (color, class) in new_classes.iter().enumerate() {
        assert!(color < Color::MAX as usize, "palette overflow");
        for &v in class {
            assign[v as usize] = color as Color;
        }
    }
    Coloring::new(new_classes.len().max(1), assign).unwrap()
}

/// A 3-colored induced subgraph of a host, with the back-map to host ids.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub coloring: Coloring,
    pub back_map: Vec<Vertex>,
}

impl Instance {
    pub fn to_host(&self, local: Vertex) -> Vertex {
        self.back_map[local as usize]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

#[derive(Clone, Debug)]
pub enum ColorCodeResult {
    Triangle([Vertex; 3]),
    Instances(Vec<Instance>),
}

/// Color-coded generation with the default class cap `2⌈√n⌉`.
pub fn color_code(g: &Graph) -> ColorCodeResult {
    color_code_with(g, 2)
}

/// Either a triangle found during coloring, or one instance per triplet of
/// (nonempty) color classes. Triplets containing an empty class cannot hold
/// a triangle and are skipped, which keeps the triangle partition exact.
pub fn color_code_with(g: &Graph, cap_factor: usize) -> ColorCodeResult {
    let coloring = match triangle_or_sqrt_coloring(g) {
        TriangleOrColoring::Triangle(t) => return ColorCodeResult::Triangle(t),
        TriangleOrColoring::Coloring(c) => c,
    };
    let refined = refine_classes(&coloring, cap_factor);
    let classes: Vec<Vec<Vertex>> =
        refined.classes().into_iter().filter(|c| !c.is_empty()).collect();
    let k = classes.len();

    // Adjacency bucketed by class, so instance extraction touches only the
    // edges it emits.
    let class_of: Vec<usize> = {
        let mut c = vec![0usize; g.n()];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                c[v as usize] = i;
            }
        }
        c
    };
    let mut buckets: Vec<Vec<(usize, Vec<Vertex>)>> = vec![Vec::new(); g.n()];
    for v in g.vertices() {
        let mut per_class: Vec<(usize, Vec<Vertex>)> = Vec::new();
        for &w in g.neighbors(v) {
            let c = class_of[w as usize];
            match per_class.iter_mut().find(|(pc, _)| *pc == c) {
                Some((_, list)) => list.push(w),
                None => per_class.push((c, vec![w])),
            }
        }
        per_class.sort_by_key(|(c, _)| *c);
        buckets[v as usize] = per_class;
    }
    let neighbors_in = |v: Vertex, class: usize| -> &[Vertex] {
        buckets[v as usize]
            .binary_search_by_key(&class, |(c, _)| *c)
            .map(|i| buckets[v as usize][i].1.as_slice())
            .unwrap_or(&[])
    };

    let mut instances = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            for c in (b + 1)..k {
                let triplet = [a, b, c];
                let mut verts: Vec<Vertex> = Vec::with_capacity(
                    classes[a].len() + classes[b].len() + classes[c].len(),
                );
                verts.extend(&classes[a]);
                verts.extend(&classes[b]);
                verts.extend(&classes[c]);
                verts.sort_unstable();
                let mut local = Graph::new(verts.len());
                let local_id = |v: Vertex| verts.binary_search(&v).unwrap() as Vertex;
                for (i, &v) in verts.iter().enumerate() {
                    for &cls in &triplet {
                        for &w in neighbors_in(v, cls) {
                            if w > v {
                                local.add_edge(i as Vertex, local_id(w));
                            }
                        }
                    }
                }
                let assign: Vec<Color> = verts
                    .iter()
                    .map(|&v| triplet.iter().position(|&t| t == class_of[v as usize]).unwrap() as Color)
                    .collect();
                let coloring = Coloring::new(3, assign).unwrap();
                instances.push(Instance { graph: local, coloring, back_map: verts });
            }
        }
    }
    // size bounds with explicit constants, checked on every run: at most
    // 2⌈√n⌉ colors out of the two phases plus ⌈√n⌉ refinement blocks
    let s = ceil_sqrt(g.n()).max(1);
    assert!(k <= 3 * s, "class count {k} exceeds 3⌈√n⌉ = {}", 3 * s);
    for inst in &instances {
        assert!(
            inst.n() <= 3 * cap_factor * s,
            "instance of {} vertices exceeds {}⌈√n⌉",
            inst.n(),
            3 * cap_factor
        );
    }
    ColorCodeResult::Instances(instances)
}

/// A host-sized 3-colored subgraph produced for the colored setting.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub coloring: Coloring,
}

/// One random 3-partition of the vertex set with the within-part edges
/// deleted. Any fixed triangle survives with probability 6/27 = 2/9.
pub fn random_three_partition<R: Rng>(g: &Graph, rng: &mut R) -> ColoredGraph {
    let assign: Vec<Color> = (0..g.n()).map(|_| rng.gen_range(0..3) as Color).collect();
    let mut out = Graph::new(g.n());
    for (u, v) in g.edges() {
        if assign[u as usize] != assign[v as usize] {
            out.add_edge(u, v);
        }
    }
    ColoredGraph { graph: out, coloring: Coloring::new(3, assign).unwrap() }
}

/// Enough independent random 3-partitions that a fixed triangle survives in
/// some output with probability at least `1 - 1/n`: per partition the
/// survival probability is 2/9, so `⌈ln n / ln(9/7)⌉` rounds suffice.
pub fn color_code_for_colored_setting<R: Rng>(g: &Graph, rng: &mut R) -> Vec<ColoredGraph> {
    let n = g.n().max(2) as f64;
    let rounds = (n.ln() / (9f64 / 7f64).ln()).ceil() as usize;
    (0..rounds.max(1)).map(|_| random_three_partition(g, rng)).collect()
}
