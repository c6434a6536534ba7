//! Combinatorial embeddings on the sphere.
//!
//! A rotation system lists, for every vertex, its neighbours in clockwise
//! order. Faces are traced by walking along a directed edge `u -> v` and
//! continuing with the neighbour that follows `u` in the rotation of `v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph, Vertex};

/// A graph together with a rotation system.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedGraph {
    graph: Graph,
    rotation: Vec<Vec<Vertex>>,
}

/// A facial walk: directed edges `walk[i] -> walk[i + 1]`, wrapping around.
pub type Face = Vec<Vertex>;

impl EmbeddedGraph {
    /// Pairs a graph with a rotation system, checking that every rotation is
    /// a permutation of the corresponding neighbour set.
    pub fn new(graph: Graph, rotation: Vec<Vec<Vertex>>) -> Result<Self> {
        if rotation.len() != graph.order() {
            return Err(Error::InvalidParameter(format!(
                "rotation covers {} vertices, graph has {}",
                rotation.len(),
                graph.order()
            )));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::InvalidRotation(v));
            }
        }
        Ok(EmbeddedGraph { graph, rotation })
    }

    /// Builds the underlying graph from the rotation lists themselves.
    pub fn from_rotation(rotation: Vec<Vec<Vertex>>) -> Result<Self> {
        let graph = Graph::from_adjacency(rotation.clone())?;
        Ok(EmbeddedGraph { graph, rotation })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    fn position(&self, v: Vertex, neighbor: Vertex) -> usize {
        self.rotation[v]
            .iter()
            .position(|&w| w == neighbor)
            .expect("neighbor present in rotation")
    }

    /// The neighbour following `neighbor` in the rotation at `v`.
    pub fn successor(&self, v: Vertex, neighbor: Vertex) -> Vertex {
        let rot = &self.rotation[v];
        rot[(self.position(v, neighbor) + 1) % rot.len()]
    }

    /// All facial walks. Every directed edge lies on exactly one of them.
    /// Faces are ordered by their first directed edge in rotation order.
    pub fn faces(&self) -> Vec<Face> {
        self.faces_with_index().0
    }

    /// Faces plus, for every vertex `v` and rotation slot `i`, the index of
    /// the face containing the directed edge `v -> rotation[v][i]`.
    pub fn faces_with_index(&self) -> (Vec<Face>, Vec<Vec<usize>>) {
        const UNSEEN: usize = usize::MAX;
        let mut face_of: Vec<Vec<usize>> =
            self.rotation.iter().map(|r| vec![UNSEEN; r.len()]).collect();
        let mut faces = Vec::new();
        for start in 0..self.order() {
            for slot in 0..self.rotation[start].len() {
                if face_of[start][slot] != UNSEEN {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut u, mut i) = (start, slot);
                while face_of[u][i] == UNSEEN {
                    face_of[u][i] = id;
                    walk.push(u);
                    let v = self.rotation[u][i];
                    let back = self.position(v, u);
                    i = (back + 1) % self.rotation[v].len();
                    u = v;
                }
                faces.push(walk);
            }
        }
        (faces, face_of)
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// `order - size + faces`.
    pub fn euler_characteristic(&self) -> isize {
        self.order() as isize - self.size() as isize + self.face_count() as isize
    }

    /// True when the embedding is a connected graph drawn on the sphere.
    pub fn is_spherical(&self) -> bool {
        self.euler_characteristic() == 2
    }

    /// The geometric dual. Fails if the dual has a loop or a repeated edge,
    /// which happens exactly when the input is not 3-connected (for
    /// connected spherical embeddings).
    pub fn dual(&self) -> Result<EmbeddedGraph> {
        let (faces, face_of) = self.faces_with_index();
        let mut rotation = Vec::with_capacity(faces.len());
        for (f, walk) in faces.iter().enumerate() {
            let mut rot = Vec::with_capacity(walk.len());
            for (k, &a) in walk.iter().enumerate() {
                let b = walk[(k + 1) % walk.len()];
                let g = face_of[b][self.position(b, a)];
                if g == f {
                    return Err(Error::NonSimpleDual(format!(
                        "edge {a}-{b} borders face {f} on both sides"
                    )));
                }
                if rot.contains(&g) {
                    return Err(Error::NonSimpleDual(format!(
                        "faces {f} and {g} share more than one edge"
                    )));
                }
                rot.push(g);
            }
            rotation.push(rot);
        }
        EmbeddedGraph::from_rotation(rotation)
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> EmbeddedGraph {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        EmbeddedGraph {
            graph: self.graph.clone(),
            rotation,
        }
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<EmbeddedGraph> {
        check_permutation(perm, self.order())?;
        let mut rotation = vec![Vec::new(); self.order()];
        for (v, rot) in self.rotation.iter().enumerate() {
            rotation[perm[v]] = rot.iter().map(|&w| perm[w]).collect();
        }
        EmbeddedGraph::from_rotation(rotation)
    }

    /// Inserts the edge `a-b` across a face: `b` is placed right after
    /// `a_before` in the rotation of `a`, and `a` right after `b_before` in
    /// the rotation of `b`.
    pub(crate) fn with_chord(
        &self,
        a: Vertex,
        a_before: Vertex,
        b: Vertex,
        b_before: Vertex,
    ) -> EmbeddedGraph {
        let mut rotation = self.rotation.clone();
        let pa = self.position(a, a_before);
        rotation[a].insert(pa + 1, b);
        let pb = self.position(b, b_before);
        rotation[b].insert(pb + 1, a);
        EmbeddedGraph::from_rotation(rotation).expect("chord between non-adjacent face vertices")
    }
}

impl fmt::Debug for EmbeddedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EmbeddedGraph(order={}, rotation={:?})", self.order(), self.rotation)
    }
}
