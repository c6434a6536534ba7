//! Planarity testing with embedding or Kuratowski witness.
//!
//! Each biconnected block is embedded with the path-addition method of
//! Demoucron, Malgrange and Pertuiset; block rotations are then merged at
//! cut vertices. Quadratic per block, which is plenty for graphs of a few
//! dozen vertices.

use std::collections::{HashSet, VecDeque};

use crate::embedding::{EmbeddedGraph, Face};
use crate::graph::{Graph, Vertex};

/// Outcome of a planarity test.
#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(EmbeddedGraph),
    NonPlanar(KuratowskiWitness),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph homeomorphic to `K5` or `K3,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: Vec<(Vertex, Vertex)>,
    pub branch_vertices: Vec<Vertex>,
}

impl KuratowskiWitness {
    /// Checks that the edge set really is a subdivision of `kind` inside `g`:
    /// suppressing degree-2 vertices leaves `K5` or `K3,3` on the branch
    /// vertices.
    pub fn verify(&self, g: &Graph) -> bool {
        if !self.edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return false;
        }
        let mut adj: std::collections::HashMap<Vertex, Vec<Vertex>> = Default::default();
        for &(u, v) in &self.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        let branch: HashSet<Vertex> = self.branch_vertices.iter().copied().collect();
        let (count, degree) = match self.kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        if branch.len() != count {
            return false;
        }
        for (v, nbrs) in &adj {
            let expected = if branch.contains(v) { degree } else { 2 };
            if nbrs.len() != expected {
                return false;
            }
        }
        // Follow each thread from a branch vertex to the next branch vertex.
        let mut links = HashSet::new();
        for &b in &branch {
            for &first in &adj[&b] {
                let (mut prev, mut cur) = (b, first);
                while !branch.contains(&cur) {
                    let next = adj[&cur].iter().copied().find(|&w| w != prev).unwrap();
                    prev = cur;
                    cur = next;
                }
                if cur == b {
                    return false;
                }
                links.insert((b.min(cur), b.max(cur)));
            }
        }
        let expected_links = count * degree / 2;
        if links.len() != expected_links {
            return false;
        }
        match self.kind {
            KuratowskiKind::K5 => true,
            KuratowskiKind::K33 => {
                // Must be bipartite 3+3: two-colour the branch graph.
                let nodes: Vec<Vertex> = self.branch_vertices.clone();
                let mut side = std::collections::HashMap::new();
                side.insert(nodes[0], false);
                let mut queue = VecDeque::from([nodes[0]]);
                while let Some(x) = queue.pop_front() {
                    for &(a, b) in &links {
                        let other = if a == x {
                            b
                        } else if b == x {
                            a
                        } else {
                            continue;
                        };
                        match side.get(&other) {
                            Some(&s) if s == side[&x] => return false,
                            Some(_) => {}
                            None => {
                                side.insert(other, !side[&x]);
                                queue.push_back(other);
                            }
                        }
                    }
                }
                side.len() == 6 && side.values().filter(|&&s| s).count() == 3
            }
        }
    }
}

/// Tests planarity; on success returns a rotation system (one spherical
/// embedding per connected component).
pub fn is_planar(g: &Graph) -> Planarity {
    match embed(g) {
        Some(eg) => Planarity::Planar(eg),
        None => Planarity::NonPlanar(kuratowski_witness(g)),
    }
}

/// A planar embedding of `g`, or `None` if `g` is not planar.
pub fn embed(g: &Graph) -> Option<EmbeddedGraph> {
    let mut rotation = vec![Vec::new(); g.order()];
    for block in biconnected_blocks(g) {
        let block_rotation = if block.len() == 1 {
            let (u, v) = block[0];
            vec![(u, vec![v]), (v, vec![u])]
        } else {
            embed_block(g.order(), &block)?
        };
        for (v, rot) in block_rotation {
            rotation[v].extend(rot);
        }
    }
    Some(EmbeddedGraph::new(g.clone(), rotation).expect("block rotations cover all edges"))
}

/// Edge sets of the biconnected components (Hopcroft-Tarjan).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block (at least a cycle). Returns the rotation at
/// each block vertex.
fn embed_block(n: usize, edges: &[(Vertex, Vertex)]) -> Option<Vec<(Vertex, Vec<Vertex>)>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let key = |u: Vertex, v: Vertex| (u.min(v), u.max(v));

    // Initial cycle through the first edge.
    let (a, b) = key(edges[0].0, edges[0].1);
    let cycle = {
        let mut prev = vec![usize::MAX; n];
        let mut queue = VecDeque::from([b]);
        prev[b] = b;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if prev[y] == usize::MAX && !(x == b && y == a) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![a];
        let mut x = a;
        while x != b {
            x = prev[x];
            path.push(x);
        }
        path
    };

    let mut embedded_vertex = vec![false; n];
    let mut embedded_edges: HashSet<(Vertex, Vertex)> = HashSet::new();
    for k in 0..cycle.len() {
        embedded_vertex[cycle[k]] = true;
        embedded_edges.insert(key(cycle[k], cycle[(k + 1) % cycle.len()]));
    }
    let mut faces: Vec<Face> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_edges.len() < edges.len() {
        let fragments = fragments(&adj, &embedded_vertex, &embedded_edges);
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|v| f.contains(v)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("an unembedded edge yields a fragment");
        let path = fragment_path(&adj, &embedded_vertex, &fragments[fi]);
        for k in 0..path.len() {
            embedded_vertex[path[k]] = true;
            if k + 1 < path.len() {
                embedded_edges.insert(key(path[k], path[k + 1]));
            }
        }
        let face = faces.swap_remove(face_index);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }

    // succ[v]: map from incoming neighbour to the next face vertex.
    let mut succ: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for f in &faces {
        let len = f.len();
        for k in 0..len {
            let (prev, cur, next) = (f[(k + len - 1) % len], f[k], f[(k + 1) % len]);
            succ[cur].push((prev, next));
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        if adj[v].is_empty() {
            continue;
        }
        let step = |x: Vertex| succ[v].iter().find(|&&(p, _)| p == x).map(|&(_, nx)| nx);
        let mut rot = vec![adj[v][0]];
        let mut x = step(adj[v][0])?;
        while x != adj[v][0] {
            rot.push(x);
            x = step(x)?;
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((v, rot));
    }
    Some(out)
}

struct Fragment {
    attachments: Vec<Vertex>,
    /// Unembedded vertices; empty for a single chord.
    interior: Vec<Vertex>,
}

fn fragments(
    adj: &[Vec<Vertex>],
    embedded_vertex: &[bool],
    embedded_edges: &HashSet<(Vertex, Vertex)>,
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !embedded_vertex[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && embedded_vertex[v] && !embedded_edges.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if embedded_vertex[s] || seen[s] || adj[s].is_empty() {
            continue;
        }
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        seen[s] = true;
        let mut k = 0;
        while k < interior.len() {
            let x = interior[k];
            k += 1;
            for &y in &adj[x] {
                if embedded_vertex[y] {
                    if !attachments.contains(&y) {
                        attachments.push(y);
                    }
                } else if !seen[y] {
                    seen[y] = true;
                    interior.push(y);
                }
            }
        }
        attachments.sort_unstable();
        out.push(Fragment {
            attachments,
            interior,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<Vertex>], embedded_vertex: &[bool], frag: &Fragment) -> Vec<Vertex> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let start = frag.attachments[0];
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &c in &adj[start] {
        if !embedded_vertex[c] && frag.interior.contains(&c) {
            prev[c] = start;
            queue.push_back(c);
        }
    }
    while let Some(x) = queue.pop_front() {
        if let Some(&end) = adj[x].iter().find(|&&y| embedded_vertex[y] && y != start) {
            let mut path = vec![end, x];
            let mut cur = x;
            while prev[cur] != start {
                cur = prev[cur];
                path.push(cur);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if !embedded_vertex[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragments of a biconnected block have two attachments")
}

/// Splits a face along a path between two of its vertices, keeping the
/// orientation: every directed edge remains on exactly one face.
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Face, Face) {
    let len = face.len();
    let i = face.iter().position(|&v| v == path[0]).unwrap();
    let j = face.iter().position(|&v| v == *path.last().unwrap()).unwrap();
    let interior = &path[1..path.len() - 1];

    let mut f1 = Vec::new();
    let mut k = i;
    while k != j {
        f1.push(face[k]);
        k = (k + 1) % len;
    }
    f1.push(face[j]);
    f1.extend(interior.iter().rev());

    let mut f2 = Vec::new();
    let mut k = j;
    while k != i {
        f2.push(face[k]);
        k = (k + 1) % len;
    }
    f2.push(face[i]);
    f2.extend(interior.iter());
    (f1, f2)
}

/// Minimal non-planar subgraph by greedy edge deletion, classified by its
/// branch vertices.
fn kuratowski_witness(g: &Graph) -> KuratowskiWitness {
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut k = 0;
    while k < edges.len() {
        let mut trial = edges.clone();
        trial.remove(k);
        let sub = Graph::new(g.order(), trial.iter().copied()).expect("subgraph is simple");
        if embed(&sub).is_none() {
            edges = trial;
        } else {
            k += 1;
        }
    }
    let sub = Graph::new(g.order(), edges.iter().copied()).expect("subgraph is simple");
    let branch_vertices: Vec<Vertex> = sub.vertices().filter(|&v| sub.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        edges,
        branch_vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::prism;
    use crate::graph::{complete_graph, cycle_graph, make_graph, path_graph};

    fn k33() -> Graph {
        let e: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        make_graph(6, &e).unwrap()
    }

    #[test]
    fn k5_is_not_planar() {
        let g = complete_graph(5).unwrap();
        match is_planar(&g) {
            Planarity::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert!(w.verify(&g));
            }
            Planarity::Planar(_) => panic!("K5 embedded"),
        }
    }

    #[test]
    fn k33_is_not_planar() {
        let g = k33();
        match is_planar(&g) {
            Planarity::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K33);
                assert!(w.verify(&g));
            }
            Planarity::Planar(_) => panic!("K3,3 embedded"),
        }
    }

    #[test]
    fn petersen_has_k33_subdivision() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = make_graph(10, &e).unwrap();
        match is_planar(&g) {
            Planarity::NonPlanar(w) => assert!(w.verify(&g)),
            Planarity::Planar(_) => panic!("Petersen embedded"),
        }
    }

    #[test]
    fn k4_embeds_with_four_faces() {
        let eg = embed(&complete_graph(4).unwrap()).unwrap();
        assert_eq!(eg.face_count(), 4);
        assert!(eg.is_spherical());
    }

    #[test]
    fn dodecagonal_prism_embeds() {
        let g = prism(6).unwrap().into_graph();
        let eg = embed(&g).unwrap();
        assert_eq!(eg.face_count(), 12);
        assert_eq!(eg.euler_characteristic(), 20 - 30 + 12);
    }

    #[test]
    fn non_biconnected_graphs_embed() {
        // Two triangles sharing a vertex, plus a pendant path.
        let g = make_graph(7, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5), (5, 6)])
            .unwrap();
        let eg = embed(&g).unwrap();
        assert!(eg.is_spherical());
        assert!(embed(&path_graph(4).unwrap()).unwrap().is_spherical());
        assert!(embed(&cycle_graph(5).unwrap()).unwrap().is_spherical());
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let g = complete_graph(5).unwrap().without_edge(0, 1);
        assert!(embed(&g).unwrap().is_spherical());
    }
}
