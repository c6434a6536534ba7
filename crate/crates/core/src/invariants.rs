//! Distance invariants computed by breadth-first search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Breadth-first layers around a root: `layers[i]` holds the vertices at
/// distance exactly `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    root: Vertex,
    layers: Vec<Vec<Vertex>>,
    distance: Vec<usize>,
}

impl LayerDecomposition {
    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Eccentricity of the root (index of the last layer).
    pub fn ecc(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &[Vertex] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Distance from the root to `v`.
    pub fn layer_of(&self, v: Vertex) -> usize {
        self.distance[v]
    }

    pub fn distances(&self) -> &[usize] {
        &self.distance
    }
}

/// Distances from `root`, `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, root: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    let mut queue = VecDeque::new();
    dist[root] = Some(0);
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap() + 1;
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn connected_distances(g: &Graph, root: Vertex) -> Result<Vec<usize>> {
    g.check_vertex(root)?;
    bfs_distances(g, root)
        .into_iter()
        .enumerate()
        .map(|(v, d)| d.ok_or(Error::Disconnected { root, unreached: v }))
        .collect()
}

pub fn bfs_layers(g: &Graph, root: Vertex) -> Result<LayerDecomposition> {
    let distance = connected_distances(g, root)?;
    let ecc = distance.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); ecc + 1];
    for (v, &d) in distance.iter().enumerate() {
        layers[d].push(v);
    }
    Ok(LayerDecomposition {
        root,
        layers,
        distance,
    })
}

pub fn eccentricity(g: &Graph, v: Vertex) -> Result<usize> {
    Ok(connected_distances(g, v)?.into_iter().max().unwrap_or(0))
}

pub fn eccentricities(g: &Graph) -> Result<Vec<usize>> {
    g.vertices().map(|v| eccentricity(g, v)).collect()
}

/// Radius and the vertices attaining it (the center), in increasing order.
pub fn radius_and_center(g: &Graph) -> Result<(usize, Vec<Vertex>)> {
    let ecc = eccentricities(g)?;
    let radius = *ecc.iter().min().expect("graphs are nonempty");
    let center = (0..g.order()).filter(|&v| ecc[v] == radius).collect();
    Ok((radius, center))
}

pub fn radius(g: &Graph) -> Result<usize> {
    Ok(radius_and_center(g)?.0)
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(eccentricities(g)?.into_iter().max().unwrap_or(0))
}

pub fn is_k_regular(g: &Graph, k: usize) -> bool {
    g.vertices().all(|v| g.degree(v) == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cube, prism, pyramid};
    use crate::graph::{complete_graph, make_graph, path_graph};

    #[test]
    fn cube_layers() {
        let g = cube().into_graph();
        for v in g.vertices() {
            assert_eq!(bfs_layers(&g, v).unwrap().layer_sizes(), vec![1, 3, 3, 1]);
        }
    }

    #[test]
    fn hexagonal_prism_layers() {
        let g = prism(4).unwrap().into_graph();
        for v in g.vertices() {
            assert_eq!(bfs_layers(&g, v).unwrap().layer_sizes(), vec![1, 3, 4, 3, 1]);
        }
    }

    #[test]
    fn k4_layers() {
        let g = complete_graph(4).unwrap();
        assert_eq!(bfs_layers(&g, 2).unwrap().layer_sizes(), vec![1, 3]);
    }

    #[test]
    fn eccentricities_of_small_graphs() {
        assert!(eccentricities(&cube().into_graph()).unwrap().iter().all(|&e| e == 3));
        let p5 = prism(5).unwrap().into_graph();
        assert!(eccentricities(&p5).unwrap().iter().all(|&e| e == 5));
        assert_eq!(eccentricity(&path_graph(3).unwrap(), 1).unwrap(), 1);
    }

    #[test]
    fn radius_and_center_examples() {
        assert_eq!(radius_and_center(&prism(3).unwrap().into_graph()).unwrap(), (3, (0..8).collect()));
        assert_eq!(radius_and_center(&complete_graph(4).unwrap()).unwrap(), (1, (0..4).collect()));
        assert_eq!(radius_and_center(&prism(4).unwrap().into_graph()).unwrap(), (4, (0..12).collect()));
        assert_eq!(radius_and_center(&path_graph(5).unwrap()).unwrap(), (2, vec![2]));
        assert_eq!(diameter(&path_graph(5).unwrap()).unwrap(), 4);
    }

    #[test]
    fn regularity() {
        assert!(is_k_regular(&prism(6).unwrap().into_graph(), 3));
        assert!(is_k_regular(&complete_graph(4).unwrap(), 3));
        assert!(!is_k_regular(&pyramid(4).unwrap().into_graph(), 3));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = make_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_layers(&g, 0), Err(Error::Disconnected { root: 0, unreached: 2 }));
        assert!(radius(&g).is_err());
        assert!(bfs_layers(&g, 9).is_err());
    }

    #[test]
    fn layer_edges_span_at_most_one() {
        let g = pyramid(6).unwrap().into_graph();
        for root in g.vertices() {
            let l = bfs_layers(&g, root).unwrap();
            for (u, v) in g.edges() {
                assert!(l.layer_of(u).abs_diff(l.layer_of(v)) <= 1);
            }
            for i in 1..=l.ecc() {
                for &v in l.layer(i) {
                    assert!(g.neighbors(v).iter().any(|&w| l.layer_of(w) == i - 1));
                }
            }
        }
    }
}
