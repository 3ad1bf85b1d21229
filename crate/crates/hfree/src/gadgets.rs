//! Coloring gadgets derived from the Grötzsch graph, and the pattern H*
//! that turns colored-pattern-freeness into plain subgraph-freeness.
//!
//! The Grötzsch graph is triangle-free and 4-critical: it is not
//! 3-colorable, but deleting any single edge makes it so. Removing an edge
//! `pq` therefore leaves a triangle-free, 3-colorable graph in which every
//! proper 3-coloring gives `p` and `q` the same color; that is the equality
//! gadget. A pendant vertex on `q` flips it into an inequality gadget.
//! Three inequality gadgets pin a core `{u,v,w}` to three distinct colors,
//! and six extra vertices wired to pairs of core vertices form the gadget
//! `X`, whose three terminal pairs always carry the three distinct
//! unordered pairs of colors.
//!
//! H* embeds six copies of a 3-colored pattern H into X (or into a core
//! triangle joined through equality gadgets when H has a triangle), one per
//! bijection between the pair slots and the color classes, so that every
//! proper 3-coloring of H* forces the forbidden coloring on one copy.

use std::collections::BTreeMap;

use crate::coloring::{
    enumerate_extendable_colorings, extends_to_three_coloring, is_three_colorable, Color,
};
use crate::fixtures;
use crate::graph::{Graph, Vertex};
use crate::pattern::Pattern;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("pattern must carry a fixed proper 3-coloring")]
    MissingColoring,
    #[error("pattern has {found} triangles, construction needs {needed}")]
    WrongTriangleCount { needed: &'static str, found: u64 },
    #[error("gadget invariant violated: {0}")]
    InvariantViolated(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    Grotzsch,
    Eq,
    EqSet,
    Neq,
    X,
    HStarTriangleFree,
    HStarTriangle,
}

/// A constructed gadget: graph, named terminals, and the kind whose
/// invariants it must satisfy.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    pub terminals: BTreeMap<String, Vertex>,
    pub kind: GadgetKind,
}

impl Gadget {
    pub fn terminal(&self, name: &str) -> Vertex {
        self.terminals[name]
    }

    /// Brute-force check of this kind's type invariants: triangle count and
    /// 3-colorability (non-3-colorability plus 4-criticality for the
    /// Grötzsch graph itself).
    pub fn verify_invariants(&self) -> Result<(), GadgetError> {
        let fail = |msg: String| Err(GadgetError::InvariantViolated(msg));
        match self.kind {
            GadgetKind::Grotzsch => {
                if !self.graph.is_triangle_free() {
                    return fail("Grötzsch graph must be triangle-free".into());
                }
                if is_three_colorable(&self.graph) {
                    return fail("Grötzsch graph must not be 3-colorable".into());
                }
                for (u, v) in self.graph.edges().collect::<Vec<_>>() {
                    let mut reduced = self.graph.clone();
                    reduced.remove_edge(u, v);
                    if !is_three_colorable(&reduced) {
                        return fail(format!("deleting edge ({u},{v}) must leave a 3-colorable graph"));
                    }
                }
            }
            GadgetKind::HStarTriangle => {
                let count = self.graph.count_triangles();
                if count != 1 {
                    return fail(format!("H* for a one-triangle pattern must have exactly 1 triangle, found {count}"));
                }
                let core = [self.terminal("u"), self.terminal("v"), self.terminal("w")];
                let mut found = self.graph.find_triangle().unwrap();
                let mut core_sorted = core;
                found.sort_unstable();
                core_sorted.sort_unstable();
                if found != core_sorted {
                    return fail(format!("the unique triangle must be the core, found {found:?}"));
                }
                if !is_three_colorable(&self.graph) {
                    return fail("H* must be 3-colorable".into());
                }
            }
            _ => {
                if !self.graph.is_triangle_free() {
                    return fail(format!("{:?} gadget must be triangle-free", self.kind));
                }
                if !is_three_colorable(&self.graph) {
                    return fail(format!("{:?} gadget must be 3-colorable", self.kind));
                }
            }
        }
        Ok(())
    }
}

/// Mycielskian of `g`: vertices `0..n` keep their edges, shadow vertex
/// `n + i` is adjacent to the neighbors of `i`, and an apex `2n` is
/// adjacent to all shadows.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::new(2 * n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
        out.add_edge(n as Vertex + u, v);
        out.add_edge(u, n as Vertex + v);
    }
    let apex = 2 * n as Vertex;
    for i in 0..n {
        out.add_edge(n as Vertex + i as Vertex, apex);
    }
    out
}

/// The Grötzsch graph: Mycielskian of C5 with fixed numbering
/// (outer cycle 0..4, shadows 5..9, apex 10). 11 vertices, 20 edges.
pub fn grotzsch() -> Gadget {
    Gadget {
        graph: mycielskian(&fixtures::cycle(5)),
        terminals: BTreeMap::new(),
        kind: GadgetKind::Grotzsch,
    }
}

/// Grötzsch edges minus the canonical removed edge (0,1), as a reusable
/// template. Template ids 0 and 1 are the terminals `p` and `q`.
fn eq_template() -> Vec<(Vertex, Vertex)> {
    let g = grotzsch().graph;
    g.edges().filter(|&e| e != (0, 1)).collect()
}

/// Splices an equality gadget between existing vertices `a` and `b`,
/// appending 9 fresh internal vertices. Every proper 3-coloring of the
/// grown graph satisfies `c(a) = c(b)`.
fn graft_eq(g: &mut Graph, a: Vertex, b: Vertex) {
    let base = g.add_vertices(9);
    let map = |t: Vertex| -> Vertex {
        match t {
            0 => a,
            1 => b,
            k => base + k - 2,
        }
    };
    for (s, t) in eq_template() {
        g.add_edge(map(s), map(t));
    }
}

/// Splices an inequality gadget between `a` and `b` (10 fresh vertices):
/// an equality gadget whose `q` side ends in a pendant, forcing
/// `c(a) != c(b)`.
fn graft_neq(g: &mut Graph, a: Vertex, b: Vertex) {
    // Template: Grötzsch minus (0,1), a pendant 11 on q = 1; terminals are
    // the pendant (= a) and p = 0 (= b). Fresh ids cover 1..=10.
    let base = g.add_vertices(10);
    let map = |t: Vertex| -> Vertex {
        match t {
            11 => a,
            0 => b,
            k => base + k - 1,
        }
    };
    for (s, t) in eq_template() {
        g.add_edge(map(s), map(t));
    }
    g.add_edge(map(1), a);
}

fn named(pairs: &[(&str, Vertex)]) -> BTreeMap<String, Vertex> {
    pairs.iter().map(|&(n, v)| (n.to_string(), v)).collect()
}

/// Equality gadget: Grötzsch minus the edge (0,1), terminals `u = 0`,
/// `v = 1`. Triangle-free, 3-colorable, and every proper 3-coloring has
/// `c(u) = c(v)`.
pub fn eq_gadget() -> Gadget {
    let mut graph = Graph::new(2);
    graft_eq(&mut graph, 0, 1);
    Gadget { graph, terminals: named(&[("u", 0), ("v", 1)]), kind: GadgetKind::Eq }
}

/// Equality gadget against an independent set of size `s`: independent
/// copies of the basic gadget sharing the terminal `u`. Terminals are `u`
/// and `v0 .. v{s-1}`.
pub fn eq_set_gadget(s: usize) -> Gadget {
    assert!(s >= 1, "eq_set_gadget needs at least one set member");
    let mut graph = Graph::new(1);
    let mut terminals = named(&[("u", 0)]);
    for i in 0..s {
        let v = graph.add_vertices(1);
        graft_eq(&mut graph, 0, v);
        terminals.insert(format!("v{i}"), v);
    }
    Gadget { graph, terminals, kind: GadgetKind::EqSet }
}

/// Inequality gadget: terminals `u` (the pendant) and `v = p`. Every proper
/// 3-coloring has `c(u) != c(v)`.
pub fn neq_gadget() -> Gadget {
    let mut graph = Graph::new(2);
    graft_neq(&mut graph, 0, 1);
    Gadget { graph, terminals: named(&[("u", 0), ("v", 1)]), kind: GadgetKind::Neq }
}

/// Pair slots of the gadget X, in order: the x-pair, y-pair, z-pair.
pub const X_PAIRS: [[&str; 2]; 3] = [["x1", "x2"], ["y1", "y2"], ["z1", "z2"]];

/// The six-terminal gadget X: a core `u,v,w` forced rainbow by three
/// inequality gadgets, plus an independent set `x1,x2,y1,y2,z1,z2` wired so
/// that each pair picks up a distinct unordered pair of distinct colors.
pub fn gadget_x() -> Gadget {
    let mut g = Graph::new(9);
    let (u, v, w) = (0, 1, 2);
    let (x1, x2, y1, y2, z1, z2) = (3, 4, 5, 6, 7, 8);
    graft_neq(&mut g, u, v);
    graft_neq(&mut g, v, w);
    graft_neq(&mut g, w, u);
    // x-pair targets {c(u), c(v)}, y-pair {c(v), c(w)}, z-pair {c(u), c(w)}
    for (s, t) in [
        (x1, v), (x1, w), (x2, u), (x2, w),
        (y1, u), (y1, w), (y2, u), (y2, v),
        (z1, w), (z1, v), (z2, u), (z2, v),
    ] {
        g.add_edge(s, t);
    }
    let terminals = named(&[
        ("u", u), ("v", v), ("w", w),
        ("x1", x1), ("x2", x2), ("y1", y1), ("y2", y2), ("z1", z1), ("z2", z2),
    ]);
    Gadget { graph: g, terminals, kind: GadgetKind::X }
}

/// The six bijections as permutations of (0,1,2), lexicographic.
const PERMS3: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Layout metadata for one embedded copy of H in the triangle-free H*.
#[derive(Clone, Debug)]
struct TfCopy {
    offset: Vertex,
    /// `pair_for_class[c]` = index (0,1,2 for x,y,z) of the X pair joined
    /// completely to color class `c` of this copy.
    pair_for_class: [usize; 3],
}

/// Layout metadata for one embedded copy in the one-triangle H*.
#[derive(Clone, Debug)]
struct TriCopy {
    offset: Vertex,
    /// `role[i]` = the pattern triangle vertex that core vertex `i` plays.
    role: [Vertex; 3],
}

#[derive(Clone, Debug)]
enum HStarLayout {
    TriangleFree { copies: Vec<TfCopy> },
    Triangle { copies: Vec<TriCopy>, hprime: Vec<Vertex> },
}

/// The pattern H* built from a 3-colored pattern H, together with the copy
/// layout its soundness verifier needs.
#[derive(Clone, Debug)]
pub struct HStar {
    pub gadget: Gadget,
    layout: HStarLayout,
}

impl HStar {
    pub fn graph(&self) -> &Graph {
        &self.gadget.graph
    }
}

fn color_classes_of(h: &Pattern) -> Result<[Vec<Vertex>; 3], GadgetError> {
    let coloring = h.fixed_coloring().ok_or(GadgetError::MissingColoring)?;
    let classes = coloring.classes();
    Ok([classes[0].clone(), classes[1].clone(), classes[2].clone()])
}

/// Builds H* for a triangle-free 3-colored pattern: the gadget X plus six
/// disjoint copies of H, one per bijection from the X pairs to the color
/// classes, with all edges added between each pair and its assigned class.
pub fn hstar_trianglefree(h: &Pattern) -> Result<HStar, GadgetError> {
    let triangles = h.graph().count_triangles();
    if triangles != 0 {
        return Err(GadgetError::WrongTriangleCount { needed: "0", found: triangles });
    }
    let classes = color_classes_of(h)?;
    let x = gadget_x();
    let mut g = x.graph.clone();
    let pair_ids: Vec<[Vertex; 2]> =
        X_PAIRS.iter().map(|p| [x.terminal(p[0]), x.terminal(p[1])]).collect();

    let mut copies = Vec::with_capacity(6);
    for perm in PERMS3 {
        let offset = g.add_vertices(h.n());
        for (a, b) in h.graph().edges() {
            g.add_edge(offset + a, offset + b);
        }
        let mut pair_for_class = [0usize; 3];
        for (pair_idx, &class) in perm.iter().enumerate() {
            pair_for_class[class] = pair_idx;
            for &member in &classes[class] {
                for &s in &pair_ids[pair_idx] {
                    g.add_edge(s, offset + member);
                }
            }
        }
        copies.push(TfCopy { offset, pair_for_class });
    }

    let gadget = Gadget { graph: g, terminals: x.terminals, kind: GadgetKind::HStarTriangleFree };
    Ok(HStar { gadget, layout: HStarLayout::TriangleFree { copies } })
}

/// Builds H* for a 3-colored pattern with exactly one triangle `xyz`:
/// a core triangle `u,v,w`, six disjoint copies of `H' = H - {x,y,z}` (one
/// per bijection between core and triangle), equality gadgets tying each
/// core vertex to the color class of the triangle vertex it plays, and
/// core-to-copy edges replicating H's adjacency.
pub fn hstar_triangle(h: &Pattern) -> Result<HStar, GadgetError> {
    let triangles = h.graph().count_triangles();
    if triangles != 1 {
        return Err(GadgetError::WrongTriangleCount { needed: "1", found: triangles });
    }
    let coloring = h.fixed_coloring().ok_or(GadgetError::MissingColoring)?.clone();
    let tri = h.graph().find_triangle().unwrap();
    let hprime: Vec<Vertex> = h.graph().vertices().filter(|v| !tri.contains(v)).collect();
    let rank = |p: Vertex| hprime.iter().position(|&q| q == p).unwrap() as Vertex;

    let mut g = Graph::new(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);

    let mut copies = Vec::with_capacity(6);
    for perm in PERMS3 {
        let offset = g.add_vertices(hprime.len());
        let role = [tri[perm[0]], tri[perm[1]], tri[perm[2]]];
        for (i, &p) in hprime.iter().enumerate() {
            for &q in h.graph().neighbors(p) {
                if let Some(j) = hprime.iter().position(|&r| r == q) {
                    if j > i {
                        g.add_edge(offset + i as Vertex, offset + j as Vertex);
                    }
                } // triangle neighbors handled below
            }
            for (core, &played) in role.iter().enumerate() {
                if h.graph().has_edge(p, played) {
                    g.add_edge(offset + i as Vertex, core as Vertex);
                }
            }
        }
        copies.push(TriCopy { offset, role });
    }

    // Equality gadget internals go after all copies, in copy order.
    for copy in &copies {
        for (core, &played) in copy.role.iter().enumerate() {
            let class_color = coloring.color(played);
            for &p in &hprime {
                if coloring.color(p) == class_color {
                    graft_eq(&mut g, core as Vertex, copy.offset + rank(p));
                }
            }
        }
    }

    let gadget = Gadget {
        graph: g,
        terminals: named(&[("u", 0), ("v", 1), ("w", 2)]),
        kind: GadgetKind::HStarTriangle,
    };
    Ok(HStar { gadget, layout: HStarLayout::Triangle { copies, hprime } })
}

/// Builds H* picking the construction that matches the pattern's triangle
/// count.
pub fn hstar(h: &Pattern) -> Result<HStar, GadgetError> {
    match h.graph().count_triangles() {
        0 => hstar_trianglefree(h),
        1 => hstar_triangle(h),
        found => Err(GadgetError::WrongTriangleCount { needed: "0 or 1", found }),
    }
}

/// Outcome of the H* soundness check.
#[derive(Clone, Debug)]
pub struct SoundnessReport {
    pub sound: bool,
    /// Interface vertices enumerated over (terminal set of the construction).
    pub interface_size: usize,
    /// Assignments that extended to a proper 3-coloring of H*.
    pub extendable_assignments: usize,
    /// Color classes of H (or H') that are empty: the construction attaches
    /// nothing for them, so their part of the claim is vacuous.
    pub empty_classes: usize,
    /// An extendable interface assignment that failed to force a forbidden
    /// copy, if any.
    pub first_failure: Option<Vec<Color>>,
}

impl std::fmt::Display for SoundnessReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} ({} extendable interface assignments over {} terminals{}{})",
            if self.sound { "sound" } else { "NOT SOUND" },
            self.extendable_assignments,
            self.interface_size,
            if self.empty_classes > 0 { ", empty color classes: " } else { "" },
            if self.empty_classes > 0 { self.empty_classes.to_string() } else { String::new() },
        )
    }
}

/// Verifies the core claim behind H*: every proper 3-coloring of H*
/// (examined through its interface) forces, on some embedded copy of H,
/// exactly the fixed coloring of H.
///
/// The triangle-free case enumerates all `3^9` assignments on the X
/// terminals. For each extendable one the copy colors are forced purely by
/// edges (each class is completely joined to a pair carrying two distinct
/// colors), so the check audits those joins and compares the implied colors
/// against the pattern coloring. The one-triangle case enumerates the core
/// assignments and then all completions of the matching copy, requiring
/// each to realize the pattern coloring exactly.
pub fn verify_hstar_soundness(h: &Pattern, hs: &HStar) -> SoundnessReport {
    match &hs.layout {
        HStarLayout::TriangleFree { copies } => verify_tf(h, hs, copies),
        HStarLayout::Triangle { copies, hprime } => verify_tri(h, hs, copies, hprime),
    }
}

fn verify_tf(h: &Pattern, hs: &HStar, copies: &[TfCopy]) -> SoundnessReport {
    let classes = color_classes_of(h).expect("H* was built from this pattern");
    let g = hs.graph();
    let x = gadget_x();
    let terminals: Vec<Vertex> = ["u", "v", "w", "x1", "x2", "y1", "y2", "z1", "z2"]
        .iter()
        .map(|t| hs.gadget.terminal(t))
        .collect();
    let pair_ids: Vec<[Vertex; 2]> =
        X_PAIRS.iter().map(|p| [x.terminal(p[0]), x.terminal(p[1])]).collect();

    // Audit the complete joins the forcing argument relies on.
    for copy in copies {
        for c in 0..3 {
            for &member in &classes[c] {
                for &s in &pair_ids[copy.pair_for_class[c]] {
                    assert!(
                        g.has_edge(s, copy.offset + member),
                        "missing pair-to-class join edge"
                    );
                }
            }
        }
    }

    let empty_classes = classes.iter().filter(|cl| cl.is_empty()).count();
    let mut extendable = 0;
    let mut first_failure = None;

    for assignment in enumerate_extendable_colorings(g, &terminals) {
        extendable += 1;
        // pair colors; terminals[3..] are x1,x2,y1,y2,z1,z2
        let pair_colors: Vec<[Color; 2]> =
            (0..3).map(|j| [assignment[3 + 2 * j], assignment[4 + 2 * j]]).collect();
        let rigid = pair_colors.iter().all(|p| p[0] != p[1]) && {
            let mut sets: Vec<u8> =
                pair_colors.iter().map(|p| (1 << p[0]) | (1 << p[1])).collect();
            sets.sort_unstable();
            sets.dedup();
            sets.len() == 3
        };
        let forces_forbidden_copy = rigid
            && copies.iter().any(|copy| {
                (0..3).all(|c| {
                    if classes[c].is_empty() {
                        return true;
                    }
                    let pair = pair_colors[copy.pair_for_class[c]];
                    let implied = (3 - pair[0] - pair[1]) as usize;
                    implied == c
                })
            });
        if !forces_forbidden_copy && first_failure.is_none() {
            first_failure = Some(assignment.clone());
        }
    }

    SoundnessReport {
        sound: first_failure.is_none() && extendable > 0,
        interface_size: terminals.len(),
        extendable_assignments: extendable,
        empty_classes,
        first_failure,
    }
}

fn verify_tri(h: &Pattern, hs: &HStar, copies: &[TriCopy], hprime: &[Vertex]) -> SoundnessReport {
    let coloring = h.fixed_coloring().expect("H* was built from this pattern");
    let g = hs.graph();
    let core: Vec<Vertex> = vec![0, 1, 2];

    // Audit: each copy plus the core is a copy of H by construction.
    for copy in copies {
        for (i, &p) in hprime.iter().enumerate() {
            for (j, &q) in hprime.iter().enumerate().skip(i + 1) {
                assert_eq!(
                    h.graph().has_edge(p, q),
                    g.has_edge(copy.offset + i as Vertex, copy.offset + j as Vertex),
                    "copy must replicate H' adjacency"
                );
            }
            for (c, &played) in copy.role.iter().enumerate() {
                if h.graph().has_edge(p, played) {
                    assert!(
                        g.has_edge(copy.offset + i as Vertex, c as Vertex),
                        "missing core-to-copy edge"
                    );
                }
            }
        }
    }

    let mut class_sizes = [0usize; 3];
    for &p in hprime {
        class_sizes[coloring.color(p) as usize] += 1;
    }
    let empty_classes = class_sizes.iter().filter(|&&s| s == 0).count();

    let mut extendable = 0;
    let mut first_failure = None;

    for assignment in enumerate_extendable_colorings(g, &core) {
        extendable += 1;
        let ok = forces_pattern_on_matching_copy(h, g, copies, hprime, &assignment);
        if !ok && first_failure.is_none() {
            first_failure = Some(assignment.clone());
        }
    }

    SoundnessReport {
        sound: first_failure.is_none() && extendable > 0,
        interface_size: core.len(),
        extendable_assignments: extendable,
        empty_classes,
        first_failure,
    }
}

fn forces_pattern_on_matching_copy(
    h: &Pattern,
    g: &Graph,
    copies: &[TriCopy],
    hprime: &[Vertex],
    core_assignment: &[Color],
) -> bool {
    let coloring = h.fixed_coloring().unwrap();
    // The core is a triangle, so an extendable assignment is rainbow.
    let mut seen = [false; 3];
    for &c in core_assignment {
        seen[c as usize] = true;
    }
    if !seen.iter().all(|&s| s) {
        return false;
    }
    // The copy whose roles carry exactly the observed core colors.
    let matching = copies
        .iter()
        .find(|copy| (0..3).all(|i| coloring.color(copy.role[i]) == core_assignment[i]));
    let Some(copy) = matching else {
        return false;
    };
    let target: Vec<Color> = hprime.iter().map(|&p| coloring.color(p)).collect();

    // Every completion of the copy under this core assignment must carry
    // exactly the pattern coloring; at least one completion must exist.
    let mut any = false;
    let k = hprime.len();
    let mut beta = vec![0 as Color; k];
    loop {
        let mut fixed: Vec<(Vertex, Color)> = core_assignment
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as Vertex, c))
            .collect();
        fixed.extend((0..k).map(|i| (copy.offset + i as Vertex, beta[i])));
        if extends_to_three_coloring(g, &fixed) {
            any = true;
            if beta != target {
                return false;
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return any;
            }
            i -= 1;
            if beta[i] < 2 {
                beta[i] += 1;
                break;
            }
            beta[i] = 0;
        }
    }
}

/// Terminal projection of the eq gadget: exactly the three equal pairs.
pub fn verify_eq_rigidity(gadget: &Gadget) -> bool {
    let ext =
        enumerate_extendable_colorings(&gadget.graph, &[gadget.terminal("u"), gadget.terminal("v")]);
    ext == vec![vec![0, 0], vec![1, 1], vec![2, 2]]
}

/// Terminal projection of the neq gadget: exactly the six unequal pairs.
pub fn verify_neq_rigidity(gadget: &Gadget) -> bool {
    let ext =
        enumerate_extendable_colorings(&gadget.graph, &[gadget.terminal("u"), gadget.terminal("v")]);
    ext.len() == 6 && ext.iter().all(|a| a[0] != a[1])
}

/// Terminal projection of an eq-set gadget: only the all-equal assignments.
pub fn verify_eq_set_rigidity(gadget: &Gadget, s: usize) -> bool {
    let mut terminals = vec![gadget.terminal("u")];
    terminals.extend((0..s).map(|i| gadget.terminal(&format!("v{i}"))));
    let ext = enumerate_extendable_colorings(&gadget.graph, &terminals);
    ext.len() == 3 && ext.iter().all(|a| a.iter().all(|&c| c == a[0]))
}

/// Every extendable assignment over the 9 terminals of X gives the core
/// three distinct colors and the three pairs the three distinct unordered
/// pairs of distinct colors. Returns the verdict and the number of
/// extendable assignments examined.
pub fn verify_pair_rigidity(gadget: &Gadget) -> (bool, usize) {
    let terminals: Vec<Vertex> = ["u", "v", "w", "x1", "x2", "y1", "y2", "z1", "z2"]
        .iter()
        .map(|t| gadget.terminal(t))
        .collect();
    let ext = enumerate_extendable_colorings(&gadget.graph, &terminals);
    let ok = !ext.is_empty()
        && ext.iter().all(|a| {
            let core_rainbow = a[0] != a[1] && a[1] != a[2] && a[0] != a[2];
            let mut sets: Vec<u8> = (0..3)
                .map(|j| (1u8 << a[3 + 2 * j]) | (1u8 << a[4 + 2 * j]))
                .collect();
            let pairs_distinct_colors = (0..3).all(|j| a[3 + 2 * j] != a[4 + 2 * j]);
            sets.sort_unstable();
            sets.dedup();
            core_rainbow && pairs_distinct_colors && sets.len() == 3
        });
    (ok, ext.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grotzsch_shape() {
        let g = grotzsch();
        assert_eq!(g.graph.n(), 11);
        assert_eq!(g.graph.m(), 20);
        assert_eq!(g.graph.find_triangle(), None);
        assert!(!is_three_colorable(&g.graph));
    }

    #[test]
    fn grotzsch_is_four_critical() {
        grotzsch().verify_invariants().unwrap();
    }

    #[test]
    fn eq_gadget_forces_equality() {
        let eq = eq_gadget();
        assert_eq!(eq.graph.n(), 11);
        assert_eq!(eq.graph.count_triangles(), 0);
        eq.verify_invariants().unwrap();
        assert!(verify_eq_rigidity(&eq));
    }

    #[test]
    fn neq_gadget_forces_inequality() {
        let neq = neq_gadget();
        assert_eq!(neq.graph.n(), 12);
        assert_eq!(neq.graph.count_triangles(), 0);
        neq.verify_invariants().unwrap();
        assert!(verify_neq_rigidity(&neq));
    }

    #[test]
    fn eq_set_shares_u() {
        let g1 = eq_set_gadget(1);
        assert_eq!(g1.graph.n(), 11);
        assert_eq!(g1.graph.m(), eq_gadget().graph.m());
        let g3 = eq_set_gadget(3);
        assert_eq!(g3.graph.n(), 31);
        g3.verify_invariants().unwrap();
        assert!(verify_eq_set_rigidity(&g3, 3));
    }

    #[test]
    fn gadget_x_is_triangle_free_and_has_39_vertices() {
        let x = gadget_x();
        assert_eq!(x.graph.n(), 39);
        assert_eq!(x.graph.count_triangles(), 0);
        x.verify_invariants().unwrap();
        // S is independent and disjoint from the core
        for s in 3..9 {
            for t in (s + 1)..9 {
                assert!(!x.graph.has_edge(s, t), "S ∪ core must stay independent inside S");
            }
        }
    }
}
