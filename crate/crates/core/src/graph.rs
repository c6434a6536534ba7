//! Simple undirected graphs on dense vertex indices, plus the standard
//! families (complete graphs, cycles, paths) and the Cartesian product.

use std::fmt;

use crate::error::{Error, Result};

/// Vertices are dense indices `0..order`.
pub type Vertex = usize;

/// An immutable simple graph. Adjacency lists are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    size: usize,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated pairs and out-of-range
    /// endpoints.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); order];
        let mut size = 0;
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::VertexOutOfRange(u, v, order));
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            size += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, size })
    }

    /// Builds a graph from symmetric neighbour lists (order is irrelevant).
    pub(crate) fn from_adjacency(mut adjacency: Vec<Vec<Vertex>>) -> Result<Self> {
        if adjacency.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let order = adjacency.len();
        let mut degree_sum = 0;
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateEdge(u, w[0]));
                }
            }
            for &v in list.iter() {
                if v >= order {
                    return Err(Error::VertexOutOfRange(u, v, order));
                }
                if v == u {
                    return Err(Error::Loop(u));
                }
            }
            degree_sum += list.len();
        }
        for u in 0..order {
            for &v in &adjacency[u] {
                if adjacency[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric adjacency: {u} lists {v} but not conversely"
                    )));
                }
            }
        }
        Ok(Graph {
            adjacency,
            size: degree_sum / 2,
        })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::NoSuchVertex(v, self.order()))
        }
    }

    /// A new graph with the edge `uv` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        Graph::new(self.order(), self.edges().chain(std::iter::once((u, v))))
    }

    /// A new graph with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        Graph::new(self.order(), self.edges().filter(|&e| e != (a, b)))
            .expect("subgraph of a simple graph is simple")
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        check_permutation(perm, self.order())?;
        Graph::new(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

pub(crate) fn check_permutation(perm: &[Vertex], order: usize) -> Result<()> {
    if perm.len() != order {
        return Err(Error::InvalidParameter(format!(
            "permutation has length {} but graph has order {order}",
            perm.len()
        )));
    }
    let mut seen = vec![false; order];
    for &p in perm {
        if p >= order || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidParameter("relabelling is not a permutation".into()));
        }
    }
    Ok(())
}

pub fn make_graph(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
    Graph::new(order, edges.iter().copied())
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path on `n` vertices.
pub fn path_graph(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Cartesian product `g1 × g2`. Vertex `(a, b)` is numbered `a * |g2| + b`;
/// `(a, b) ~ (c, d)` iff `a = c` and `b ~ d` in `g2`, or `b = d` and `a ~ c`
/// in `g1`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    let id = |a: Vertex, b: Vertex| a * n2 + b;
    let mut edges = Vec::with_capacity(n1 * g2.size() + n2 * g1.size());
    for a in 0..n1 {
        for (b, d) in g2.edges() {
            edges.push((id(a, b), id(a, d)));
        }
    }
    for (a, c) in g1.edges() {
        for b in 0..n2 {
            edges.push((id(a, b), id(c, b)));
        }
    }
    Graph::new(n1 * n2, edges)
}
