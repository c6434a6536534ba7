//! Brute-force reference implementations used to cross-check the fast paths.
//!
//! Nothing here shares code with the generator, the canonical codes or the
//! flow-based connectivity test: distances use Floyd-Warshall, isomorphism
//! uses backtracking over vertex maps, connectivity removes every small
//! vertex subset, and polytopes are found by filtering all labelled graphs.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};
use crate::structure::planarity::embed;

/// All-pairs distances; `None` for unreachable pairs.
#[allow(clippy::needless_range_loop)]
pub fn distance_matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
        for &w in g.neighbors(v) {
            d[v][w] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    if d[i][j].is_none_or(|ij| ik + kj < ij) {
                        d[i][j] = Some(ik + kj);
                    }
                }
            }
        }
    }
    d
}

/// Radius from the distance matrix, `None` if disconnected.
pub fn radius(g: &Graph) -> Option<usize> {
    let d = distance_matrix(g);
    d.iter()
        .map(|row| row.iter().copied().collect::<Option<Vec<_>>>().map(|r| r.into_iter().max().unwrap()))
        .collect::<Option<Vec<_>>>()
        .map(|ecc| ecc.into_iter().min().unwrap())
}

pub fn diameter(g: &Graph) -> Option<usize> {
    let d = distance_matrix(g);
    d.iter().flatten().copied().collect::<Option<Vec<_>>>().map(|v| v.into_iter().max().unwrap())
}

fn connected_without(g: &Graph, removed: &[bool]) -> bool {
    let Some(start) = g.vertices().find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// True iff removing any set of fewer than `k` vertices leaves `g`
/// connected (and `g` has more than `k` vertices).
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n <= k {
        return false;
    }
    (0u64..1 << n)
        .filter(|mask| (mask.count_ones() as usize) < k)
        .all(|mask| {
            let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            connected_without(g, &removed)
        })
}

/// Isomorphism by backtracking over degree-respecting vertex maps.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_map(g, h, 0, &mut map, &mut used)
}

fn extend_map(g: &Graph, h: &Graph, v: Vertex, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.order() {
        return true;
    }
    for cand in h.vertices() {
        if used[cand] || g.degree(v) != h.degree(cand) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], cand));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend_map(g, h, v + 1, map, used) {
            return true;
        }
        used[cand] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Degree sequence plus sorted neighbour-degree multisets; equal for
/// isomorphic graphs.
fn invariant(g: &Graph) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| {
            let mut row: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            row.sort_unstable();
            row.insert(0, g.degree(v));
            row
        })
        .collect();
    rows.sort();
    rows
}

/// Isomorphism classes of 3-polytopes with `min_size..=max_size` edges and at
/// most `max_order` vertices, found by filtering every labelled simple graph
/// through the planarity test and exhaustive separator search.
pub fn polytopes_by_size(max_order: usize, min_size: usize, max_size: usize) -> BTreeMap<usize, Vec<Graph>> {
    type Bucket = Vec<(Vec<Vec<usize>>, Graph)>;
    let mut classes: BTreeMap<usize, Bucket> = BTreeMap::new();
    for n in 4..=max_order {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            let q = mask.count_ones() as usize;
            if q < min_size || q > max_size || 2 * q < 3 * n {
                continue;
            }
            let mut degree = vec![0; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
            if degree.iter().any(|&d| d < 3) {
                continue;
            }
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).expect("distinct pairs");
            if !vertex_connectivity_at_least(&g, 3) || embed(&g).is_none() {
                continue;
            }
            let key = invariant(&g);
            let bucket = classes.entry(q).or_default();
            if !bucket.iter().any(|(k, rep)| *k == key && isomorphic(rep, &g)) {
                bucket.push((key, g));
            }
        }
    }
    (min_size..=max_size)
        .map(|q| (q, classes.remove(&q).unwrap_or_default().into_iter().map(|(_, g)| g).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cube, octahedron, prism};
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn floyd_warshall_radius() {
        assert_eq!(radius(&prism(4).unwrap().into_graph()), Some(4));
        assert_eq!(radius(&path_graph(5).unwrap()), Some(2));
        assert_eq!(diameter(&path_graph(5).unwrap()), Some(4));
        let disconnected = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(radius(&disconnected), None);
    }

    #[test]
    fn separator_search() {
        assert!(vertex_connectivity_at_least(&complete_graph(4).unwrap(), 3));
        assert!(!vertex_connectivity_at_least(&cycle_graph(6).unwrap(), 3));
        assert!(vertex_connectivity_at_least(cube().graph(), 3));
    }

    #[test]
    fn backtracking_isomorphism() {
        let c = cube().into_graph();
        let relabelled = c.relabel(&[3, 1, 4, 0, 5, 7, 2, 6]).unwrap();
        assert!(isomorphic(&c, &relabelled));
        assert!(!isomorphic(&c, octahedron().graph()));
    }

    #[test]
    fn smallest_polytopes() {
        let classes = polytopes_by_size(5, 6, 9);
        let counts: Vec<_> = classes.values().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 0, 1, 1]);
    }
}
