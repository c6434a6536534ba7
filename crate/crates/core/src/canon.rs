//! Canonical codes for embedded polyhedral graphs.
//!
//! A 3-connected planar graph has a unique embedding on the sphere up to
//! reflection, so the minimum breadth-first rotation code over every starting
//! directed edge and both orientations is a complete isomorphism invariant.
//!
//! The code of a traversal is laid out exactly like a `planar_code` record:
//! the vertex count, then for each vertex in discovery order its neighbours'
//! discovery numbers (1-based) in traversal orientation, each list closed by
//! a zero byte. Decoding a code therefore yields the canonical relabelling.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::embedding::EmbeddedGraph;
use crate::error::Result;
use crate::graph::Vertex;

/// Canonical form of an embedded polyhedral graph. Serialized as hex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeBytes(Vec<u8>);

impl Serialize for CodeBytes {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CodeBytes {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        hex::decode(text).map(CodeBytes).map_err(serde::de::Error::custom)
    }
}

impl CodeBytes {
    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CodeBytes(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn size(&self) -> usize {
        // 1 + 2q + n bytes in total.
        (self.0.len() - 1 - self.order()) / 2
    }

    /// The embedded graph this code describes, in canonical labelling.
    pub fn decode(&self) -> Result<EmbeddedGraph> {
        crate::io::planar_code::decode_record(&self.0, 0).map(|(eg, _)| eg)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Debug for CodeBytes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeBytes({})", self.to_hex())
    }
}

/// Incremental comparison of a traversal code against the best so far.
struct Candidate<'a> {
    best: Option<&'a [u8]>,
    out: Vec<u8>,
    state: Ordering,
}

impl Candidate<'_> {
    /// Appends a byte; returns false once the candidate is known to be larger.
    fn push(&mut self, byte: u8) -> bool {
        if self.state == Ordering::Equal {
            if let Some(best) = self.best {
                self.state = byte.cmp(&best[self.out.len()]);
                if self.state == Ordering::Greater {
                    return false;
                }
            }
        }
        self.out.push(byte);
        true
    }
}

/// Runs one breadth-first traversal from `start -> rotation[start][slot]`
/// in the given orientation. Returns the code only if it is strictly smaller
/// than `best` (or `best` is absent), along with the discovery numbering.
fn traversal_code(
    eg: &EmbeddedGraph,
    start: Vertex,
    slot: usize,
    forward: bool,
    best: Option<&[u8]>,
) -> Option<(Vec<u8>, Vec<usize>)> {
    let n = eg.order();
    let mut number = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    number[start] = 1;
    queue.push(start);
    let mut cand = Candidate {
        best,
        out: Vec::with_capacity(1 + 2 * n + 2 * eg.size()),
        state: Ordering::Equal,
    };
    cand.push(n as u8);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let rot = eg.rotation(x);
        let d = rot.len();
        let first = if x == start {
            slot
        } else {
            rot.iter().position(|&w| w == parent[x]).expect("parent is a neighbour")
        };
        for j in 0..d {
            let idx = if forward { (first + j) % d } else { (first + d - j) % d };
            let y = rot[idx];
            if number[y] == 0 {
                number[y] = queue.len() + 1;
                parent[y] = x;
                queue.push(y);
            }
            if !cand.push(number[y] as u8) {
                return None;
            }
        }
        if !cand.push(0) {
            return None;
        }
    }
    debug_assert_eq!(queue.len(), n, "canonical codes need a connected graph");
    match (cand.state, best) {
        (Ordering::Less, _) | (_, None) => Some((cand.out, number)),
        _ => None,
    }
}

fn minimum_traversal(eg: &EmbeddedGraph) -> (Vec<u8>, Vec<usize>) {
    assert!(eg.order() <= 255, "canonical codes support at most 255 vertices");
    let min_degree = eg.graph().min_degree();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for start in eg.graph().vertices() {
        // Minimum-degree starts produce an earlier terminator and always win.
        if eg.graph().degree(start) != min_degree {
            continue;
        }
        for slot in 0..eg.rotation(start).len() {
            for forward in [true, false] {
                let current = best.as_ref().map(|(c, _)| c.as_slice());
                if let Some(found) = traversal_code(eg, start, slot, forward, current) {
                    best = Some(found);
                }
            }
        }
    }
    best.expect("graph has at least one edge")
}

/// Deterministic code, independent of vertex labels, rotation starting
/// points and orientation.
pub fn canonical_code(eg: &EmbeddedGraph) -> CodeBytes {
    CodeBytes(minimum_traversal(eg).0)
}

/// The canonical code plus the relabelling `old -> new` that realises it.
pub fn canonical_labelling(eg: &EmbeddedGraph) -> (CodeBytes, Vec<Vertex>) {
    let (code, number) = minimum_traversal(eg);
    (CodeBytes(code), number.into_iter().map(|k| k - 1).collect())
}

/// Isomorphism test for polyhedral embedded graphs via canonical codes.
pub fn is_isomorphic(g: &EmbeddedGraph, h: &EmbeddedGraph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_code(g) == canonical_code(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cube, octahedron, prism, pyramid};
    use crate::graph::{complete_graph, cartesian_product, cycle_graph};

    fn reversed(n: usize) -> Vec<usize> {
        (0..n).rev().collect()
    }

    #[test]
    fn code_is_label_invariant() {
        let c = cube();
        let shuffled = c.relabel(&[5, 2, 7, 0, 3, 6, 1, 4]).unwrap();
        assert_eq!(canonical_code(&c), canonical_code(&shuffled));
        assert_eq!(canonical_code(&c), canonical_code(&c.relabel(&reversed(8)).unwrap()));
    }

    #[test]
    fn code_is_mirror_invariant() {
        let p = pyramid(6).unwrap();
        assert_eq!(canonical_code(&p), canonical_code(&p.mirror()));
    }

    #[test]
    fn cube_and_octahedron_differ() {
        assert_ne!(canonical_code(&cube()), canonical_code(&octahedron()));
        assert!(!is_isomorphic(&cube(), &octahedron()));
    }

    #[test]
    fn prism_three_matches_product() {
        let k2 = complete_graph(2).unwrap();
        let product = cartesian_product(&k2, &cycle_graph(4).unwrap()).unwrap();
        let embedded = crate::structure::planarity::embed(&product).expect("planar");
        assert_eq!(canonical_code(&prism(3).unwrap()), canonical_code(&embedded));
        assert!(is_isomorphic(&cube(), &prism(3).unwrap()));
    }

    #[test]
    fn relabelled_prism_is_isomorphic() {
        let p = prism(4).unwrap();
        let perm: Vec<usize> = (0..12).map(|v| (v * 5 + 3) % 12).collect();
        assert!(is_isomorphic(&p, &p.relabel(&perm).unwrap()));
    }

    #[test]
    fn code_decodes_to_canonical_relabelling() {
        let p = prism(4).unwrap();
        let (code, perm) = canonical_labelling(&p);
        let decoded = code.decode().unwrap();
        assert_eq!(code.order(), 12);
        assert_eq!(code.size(), 18);
        let relabelled = p.relabel(&perm).unwrap();
        assert_eq!(decoded.graph(), relabelled.graph());
        assert_eq!(canonical_code(&decoded), code);
    }

    #[test]
    fn dual_of_dual_has_same_code() {
        for eg in [cube(), prism(5).unwrap(), pyramid(7).unwrap()] {
            let dd = eg.dual().unwrap().dual().unwrap();
            assert!(is_isomorphic(&eg, &dd));
        }
    }
}
