//! Embedded builders for prisms and pyramids.

use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};

/// The `m`-gonal prism `K2 × C_m` (`m >= 3`), embedded with its two
/// `m`-gonal faces and `m` quadrilaterals.
///
/// Outer ring `0..m`, inner ring `m..2m`, rung `i -- m + i`.
pub fn polygonal_prism(m: usize) -> Result<EmbeddedGraph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("prism needs m >= 3, got {m}")));
    }
    let prev = |i: usize| (i + m - 1) % m;
    let next = |i: usize| (i + 1) % m;
    let mut rotation = Vec::with_capacity(2 * m);
    for i in 0..m {
        rotation.push(vec![prev(i), m + i, next(i)]);
    }
    for i in 0..m {
        rotation.push(vec![m + next(i), i, m + prev(i)]);
    }
    EmbeddedGraph::from_rotation(rotation)
}

/// The `2(r-1)`-gonal prism, the conjectured unique smallest 3-polytope of
/// radius `r`. Order `4(r-1)`, size `6(r-1)`.
pub fn prism(r: usize) -> Result<EmbeddedGraph> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("prism(r) needs r >= 3, got {r}")));
    }
    polygonal_prism(2 * (r - 1))
}

/// The pyramid over an `n`-gon (the wheel with `n` spokes), `n >= 3`.
/// Rim `0..n`, apex `n`.
pub fn pyramid(n: usize) -> Result<EmbeddedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("pyramid needs n >= 3, got {n}")));
    }
    let mut rotation: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![(i + n - 1) % n, n, (i + 1) % n])
        .collect();
    rotation.push((0..n).rev().collect());
    EmbeddedGraph::from_rotation(rotation)
}

pub fn tetrahedron() -> EmbeddedGraph {
    pyramid(3).expect("n = 3 is valid")
}

pub fn cube() -> EmbeddedGraph {
    prism(3).expect("r = 3 is valid")
}

pub fn octahedron() -> EmbeddedGraph {
    cube().dual().expect("cube is polyhedral")
}
