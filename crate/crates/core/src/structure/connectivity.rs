//! Vertex connectivity and internally disjoint paths via unit-capacity
//! max-flow on the vertex-split network.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::LayerDecomposition;

/// Residual network where vertex `v` becomes `in(v) = 2v -> out(v) = 2v + 1`.
///
/// Vertex arcs have capacity 1 and edge arcs are uncapacitated, so minimum
/// cuts consist of vertices (plus a direct source-sink edge, if enabled).
struct SplitNetwork {
    head: Vec<usize>,
    capacity: Vec<u32>,
    residual: Vec<u32>,
    arcs: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn vin(v: Vertex) -> usize {
        2 * v
    }

    fn vout(v: Vertex) -> usize {
        2 * v + 1
    }

    /// `rank` orders neighbours for exploration (lower rank first).
    fn build(g: &Graph, rank: &[usize]) -> Self {
        let unbounded = g.order() as u32;
        let mut net = SplitNetwork {
            head: Vec::new(),
            capacity: Vec::new(),
            residual: Vec::new(),
            arcs: vec![Vec::new(); 2 * g.order()],
        };
        let mut vertices: Vec<Vertex> = g.vertices().collect();
        vertices.sort_by_key(|&v| rank[v]);
        for &v in &vertices {
            net.add_arc(Self::vin(v), Self::vout(v), 1);
        }
        for &v in &vertices {
            let mut nbrs = g.neighbors(v).to_vec();
            nbrs.sort_by_key(|&w| rank[w]);
            for w in nbrs {
                net.add_arc(Self::vout(v), Self::vin(w), unbounded);
            }
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, capacity: u32) {
        let id = self.head.len();
        self.head.push(to);
        self.capacity.push(capacity);
        self.residual.push(capacity);
        self.arcs[from].push(id);
        self.head.push(from);
        self.capacity.push(0);
        self.residual.push(0);
        self.arcs[to].push(id + 1);
    }

    /// Limits the arc `from -> to` to a single unit.
    fn restrict_arc(&mut self, from: usize, to: usize) {
        if let Some(&a) = self.arcs[from].iter().find(|&&a| a % 2 == 0 && self.head[a] == to) {
            self.capacity[a] = 1;
            self.residual[a] = 1;
        }
    }

    fn reachable(&self, source: usize) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.arcs.len()];
        let mut via = vec![usize::MAX; self.arcs.len()];
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(x) = queue.pop_front() {
            for &a in &self.arcs[x] {
                let y = self.head[a];
                if self.residual[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        (seen, via)
    }

    /// Pushes up to `limit` units from `source` to `sink`; returns the value.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let (seen, via) = self.reachable(source);
            if !seen[sink] {
                break;
            }
            let mut x = sink;
            while x != source {
                let a = via[x];
                self.residual[a] -= 1;
                self.residual[a ^ 1] += 1;
                x = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn carries_flow(&self, arc: usize) -> bool {
        arc.is_multiple_of(2) && self.residual[arc] < self.capacity[arc]
    }
}

/// Local vertex connectivity between `s` and `t`, capped at `limit`.
fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    let rank: Vec<usize> = g.vertices().collect();
    let mut net = SplitNetwork::build(g, &rank);
    net.max_flow(SplitNetwork::vout(s), SplitNetwork::vin(t), limit)
}

/// True iff no set of fewer than `k` vertices disconnects `g`.
///
/// Any separator of size `< k` misses one of the vertices `0..k`; that vertex
/// then has a non-neighbour across the cut, so it suffices to test those `k`
/// vertices against all their non-neighbours.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> Result<bool> {
    let n = g.order();
    if n <= k {
        return Err(Error::OrderTooSmall(n, k));
    }
    if k == 0 {
        return Ok(true);
    }
    if g.min_degree() < k {
        return Ok(false);
    }
    for s in 0..k {
        for t in 0..n {
            if t != s && !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Path roles used in the extremal argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    X,
    Y,
    Z,
}

/// Internally vertex-disjoint paths from `source` to `sink`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    source: Vertex,
    sink: Vertex,
    paths: Vec<Vec<Vertex>>,
}

impl PathSystem {
    /// Validates and wraps a set of paths.
    pub fn new(g: &Graph, source: Vertex, sink: Vertex, paths: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut used = vec![false; g.order()];
        for (i, p) in paths.iter().enumerate() {
            if p.first() != Some(&source) || p.last() != Some(&sink) || p.len() < 2 {
                return Err(Error::MalformedPaths(format!("path {i} does not run source to sink")));
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(Error::MalformedPaths(format!(
                        "path {i}: {} and {} are not adjacent",
                        w[0], w[1]
                    )));
                }
            }
            for &v in &p[1..p.len() - 1] {
                if v == source || v == sink || std::mem::replace(&mut used[v], true) {
                    return Err(Error::MalformedPaths(format!(
                        "vertex {v} is shared or repeated (path {i})"
                    )));
                }
            }
        }
        if paths.iter().filter(|p| p.len() == 2).count() > 1 {
            return Err(Error::MalformedPaths("edge used by two paths".into()));
        }
        Ok(PathSystem {
            source,
            sink,
            paths,
        })
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn sink(&self) -> Vertex {
        self.sink
    }

    pub fn paths(&self) -> &[Vec<Vertex>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Path lengths in edges.
    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.len() - 1).collect()
    }

    /// The path playing `role` (first three paths are x, y, z).
    pub fn role(&self, role: Role) -> &[Vertex] {
        let i = match role {
            Role::X => 0,
            Role::Y => 1,
            Role::Z => 2,
        };
        &self.paths[i]
    }

    /// True when every path has length `ecc(root)` and its `i`-th vertex lies
    /// in layer `i`.
    pub fn is_layer_aligned(&self, layers: &LayerDecomposition) -> bool {
        let r = layers.ecc();
        layers.root() == self.source
            && self.paths.iter().all(|p| {
                p.len() == r + 1 && p.iter().enumerate().all(|(i, &v)| layers.layer_of(v) == i)
            })
    }
}

/// A vertex set of fewer than `k` vertices separating source and sink (after
/// removing any direct edge between them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    pub vertices: Vec<Vertex>,
    /// Number of disjoint paths that do exist.
    pub paths_found: usize,
    pub direct_edge: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathSearch {
    Found(PathSystem),
    Blocked(Separator),
}

impl PathSearch {
    pub fn found(self) -> Option<PathSystem> {
        match self {
            PathSearch::Found(p) => Some(p),
            PathSearch::Blocked(_) => None,
        }
    }
}

/// `k` internally disjoint paths between `source` and `sink`, with
/// augmenting paths explored in increasing vertex order.
pub fn disjoint_paths(g: &Graph, source: Vertex, sink: Vertex, k: usize) -> Result<PathSearch> {
    let rank: Vec<usize> = g.vertices().collect();
    disjoint_paths_ranked(g, source, sink, k, &rank)
}

/// As [`disjoint_paths`], but neighbours are explored by increasing
/// `rank[v]`. Different rankings can yield different path systems.
pub fn disjoint_paths_ranked(
    g: &Graph,
    source: Vertex,
    sink: Vertex,
    k: usize,
    rank: &[usize],
) -> Result<PathSearch> {
    g.check_vertex(source)?;
    g.check_vertex(sink)?;
    if source == sink {
        return Err(Error::InvalidParameter("source and sink coincide".into()));
    }
    if rank.len() != g.order() {
        return Err(Error::InvalidParameter("rank must cover every vertex".into()));
    }
    let mut net = SplitNetwork::build(g, rank);
    let (s, t) = (SplitNetwork::vout(source), SplitNetwork::vin(sink));
    net.restrict_arc(s, t);
    let flow = net.max_flow(s, t, k);
    if flow < k {
        let (seen, _) = net.reachable(s);
        let vertices = g
            .vertices()
            .filter(|&v| v != source && v != sink)
            .filter(|&v| seen[SplitNetwork::vin(v)] && !seen[SplitNetwork::vout(v)])
            .collect();
        return Ok(PathSearch::Blocked(Separator {
            vertices,
            paths_found: flow,
            direct_edge: g.has_edge(source, sink),
        }));
    }

    let mut paths = Vec::with_capacity(k);
    for &first in &net.arcs[s] {
        if !net.carries_flow(first) {
            continue;
        }
        let mut path = vec![source];
        let mut arc = first;
        loop {
            // `arc` enters in(v); follow in(v) -> out(v) -> in(next).
            let v = net.head[arc] / 2;
            path.push(v);
            if v == sink {
                break;
            }
            arc = net.arcs[SplitNetwork::vout(v)]
                .iter()
                .copied()
                .find(|&a| net.carries_flow(a))
                .expect("flow is conserved at internal vertices");
        }
        paths.push(path);
    }
    Ok(PathSearch::Found(PathSystem::new(g, source, sink, paths)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{prism, pyramid};
    use crate::graph::{complete_graph, cycle_graph};

    #[test]
    fn connectivity_examples() {
        assert!(vertex_connectivity_at_least(&complete_graph(4).unwrap(), 3).unwrap());
        assert!(!vertex_connectivity_at_least(&cycle_graph(6).unwrap(), 3).unwrap());
        assert!(vertex_connectivity_at_least(&cycle_graph(6).unwrap(), 2).unwrap());
        assert!(vertex_connectivity_at_least(&prism(5).unwrap().into_graph(), 3).unwrap());
        assert!(!vertex_connectivity_at_least(&prism(5).unwrap().into_graph(), 4).unwrap());
        assert!(vertex_connectivity_at_least(&pyramid(6).unwrap().into_graph(), 3).unwrap());
        assert_eq!(
            vertex_connectivity_at_least(&complete_graph(3).unwrap(), 3),
            Err(Error::OrderTooSmall(3, 3))
        );
    }

    #[test]
    fn prism_antipodal_paths() {
        let g = prism(4).unwrap().into_graph();
        // Vertex 0 on the outer hexagon; its antipode is inner vertex 6 + 3.
        let paths = disjoint_paths(&g, 0, 9, 3).unwrap().found().unwrap();
        assert_eq!(paths.lengths(), vec![4, 4, 4]);
    }

    #[test]
    fn cycle_is_blocked_by_two_vertices() {
        let g = cycle_graph(6).unwrap();
        match disjoint_paths(&g, 0, 3, 3).unwrap() {
            PathSearch::Blocked(sep) => {
                assert_eq!(sep.paths_found, 2);
                assert_eq!(sep.vertices.len(), 2);
                assert!(!sep.direct_edge);
            }
            PathSearch::Found(_) => panic!("C6 is not 3-connected"),
        }
    }

    #[test]
    fn k4_paths() {
        let g = complete_graph(4).unwrap();
        let paths = disjoint_paths(&g, 1, 2, 3).unwrap().found().unwrap();
        let mut lengths = paths.lengths();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![1, 2, 2]);
    }

    #[test]
    fn rejects_equal_endpoints() {
        let g = complete_graph(4).unwrap();
        assert!(disjoint_paths(&g, 1, 1, 3).is_err());
    }

    #[test]
    fn path_system_validation() {
        let g = cycle_graph(4).unwrap();
        assert!(PathSystem::new(&g, 0, 2, vec![vec![0, 1, 2], vec![0, 3, 2]]).is_ok());
        assert!(PathSystem::new(&g, 0, 2, vec![vec![0, 1, 2], vec![0, 1, 2]]).is_err());
        assert!(PathSystem::new(&g, 0, 2, vec![vec![0, 2]]).is_err());
    }
}
