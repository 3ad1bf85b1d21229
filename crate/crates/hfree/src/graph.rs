//! Undirected simple graphs with sorted adjacency lists, plus the
//! brute-force triangle oracles used throughout the crate.
//!
//! Vertices are dense 0-based ids. Adjacency lists are kept sorted so that
//! membership tests are `O(log d)` and every iteration order is
//! deterministic. Triangle counts are held in `u64`; dense graphs at the
//! sizes this crate works with already overflow 32 bits.

use std::fmt;

/// Vertex id. Graphs are capped at `2^31 - 1` vertices.
pub type Vertex = u32;

pub const MAX_VERTICES: usize = i32::MAX as usize;

/// An undirected simple graph: no self-loops, no parallel edges,
/// `u ∈ adj(v) ⟺ v ∈ adj(u)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds 2^31 - 1");
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are ignored.
    ///
    /// Panics on self-loops or out-of-range endpoints; file input goes
    /// through [`crate::io`], which reports errors instead.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Appends `count` isolated vertices, returning the id of the first one.
    pub fn add_vertices(&mut self, count: usize) -> Vertex {
        let first = self.adj.len();
        assert!(first + count <= MAX_VERTICES);
        self.adj.resize(first + count, Vec::new());
        first as Vertex
    }

    /// Inserts the edge `uv`. Returns false if it was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        assert!((u as usize) < self.n() && (v as usize) < self.n(), "edge ({u},{v}) out of range");
        match self.adj[u as usize].binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.adj[u as usize].insert(i, v);
                let j = self.adj[v as usize].binary_search(&u).unwrap_err();
                self.adj[v as usize].insert(j, u);
                self.m += 1;
                true
            }
        }
    }

    /// Removes the edge `uv`. Returns false if it was absent.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        match self.adj[u as usize].binary_search(&v) {
            Err(_) => false,
            Ok(i) => {
                self.adj[u as usize].remove(i);
                let j = self.adj[v as usize].binary_search(&u).unwrap();
                self.adj[v as usize].remove(j);
                self.m -= 1;
                true
            }
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n() as Vertex
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u as usize].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in (u + 1)..self.n() as Vertex {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `verts` (sorted and deduplicated internally),
    /// together with the back-map from new ids to the original ids.
    ///
    /// The edge set is exactly inherited; no edges are deleted or added.
    pub fn induced_subgraph(&self, verts: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut back: Vec<Vertex> = verts.to_vec();
        back.sort_unstable();
        back.dedup();
        let mut new_id = vec![Vertex::MAX; self.n()];
        for (i, &v) in back.iter().enumerate() {
            assert!((v as usize) < self.n(), "vertex {v} out of range");
            new_id[v as usize] = i as Vertex;
        }
        let mut g = Graph::new(back.len());
        for (i, &v) in back.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = new_id[w as usize];
                if j != Vertex::MAX && j > i as Vertex {
                    g.add_edge(i as Vertex, j);
                }
            }
        }
        (g, back)
    }

    /// Lexicographically smallest triangle `(x, y, z)` with `x < y < z`,
    /// or `None` iff the graph is triangle-free.
    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for x in self.vertices() {
            for &y in self.neighbors(x) {
                if y <= x {
                    continue;
                }
                // smallest common neighbor above y
                if let Some(z) = intersect_above(self.neighbors(x), self.neighbors(y), y) {
                    return Some([x, y, z]);
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Exact number of unordered vertex triples forming triangles.
    pub fn count_triangles(&self) -> u64 {
        let mut count = 0u64;
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if v <= u {
                    continue;
                }
                count += count_common_above(self.neighbors(u), self.neighbors(v), v);
            }
        }
        count
    }

    /// Checks that the triple is a triangle of this graph.
    pub fn is_triangle(&self, t: [Vertex; 3]) -> bool {
        let [x, y, z] = t;
        x != y && y != z && x != z && self.has_edge(x, y) && self.has_edge(y, z) && self.has_edge(x, z)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m())
    }
}

/// Smallest element > `floor` common to both sorted slices.
fn intersect_above(a: &[Vertex], b: &[Vertex], floor: Vertex) -> Option<Vertex> {
    let mut i = a.partition_point(|&x| x <= floor);
    let mut j = b.partition_point(|&x| x <= floor);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => return Some(a[i]),
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    None
}

fn count_common_above(a: &[Vertex], b: &[Vertex], floor: Vertex) -> u64 {
    let mut i = a.partition_point(|&x| x <= floor);
    let mut j = b.partition_point(|&x| x <= floor);
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    count
}

/// `⌈√n⌉`.
pub fn ceil_sqrt(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut s = (n as f64).sqrt() as usize;
    while s * s < n {
        s += 1;
    }
    while s > 1 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}
