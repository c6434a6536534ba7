//! Minimum-size 3-polytopes of a given radius, and the layer conditions under
//! which the `2(r-1)`-gonal prism is forced.
//!
//! For a central root `u` of eccentricity `r`, with `V_i` the vertices at
//! distance `i` from `u`, the three layer conditions are
//!
//! 1. `|V_r| = 1`,
//! 2. `|V_1| = |V_{r-1}| = 3`,
//! 3. `|V_i| >= 4` for `2 <= i <= r - 2` (vacuous when `r = 3`).
//!
//! When they hold, three internally disjoint `u`-`w` paths (where
//! `V_r = {w}`) all have length exactly `r`, and the distances between their
//! layer-1 and layer-`(r-1)` vertices follow one of two patterns. The first
//! leads to the prism; the second is impossible.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, CodeBytes};
use crate::error::{Error, Result};
use crate::families::prism;
use crate::generator::{Enumerator, Filter, FilterSet};
use crate::graph::{Graph, Vertex};
use crate::invariants::{bfs_distances, bfs_layers, radius_and_center, LayerDecomposition};
use crate::structure::connectivity::{disjoint_paths_ranked, PathSearch, PathSystem};
use crate::structure::planarity::embed;

/// Layer sizes around one root and the three layer conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub root: Vertex,
    /// Eccentricity of the root.
    pub r: usize,
    /// Radius of the graph.
    pub radius: usize,
    /// False when the root is not central or `r < 3`; the conditions are
    /// then reported as false.
    pub applicable: bool,
    pub h1: bool,
    pub h2: bool,
    pub h3: bool,
    pub layer_sizes: Vec<usize>,
}

impl HypothesisReport {
    pub fn from_layer_sizes(root: Vertex, radius: usize, layer_sizes: Vec<usize>) -> Self {
        let r = layer_sizes.len() - 1;
        let applicable = r == radius && r >= 3;
        let (h1, h2, h3) = if applicable {
            (
                layer_sizes[r] == 1,
                layer_sizes[1] == 3 && layer_sizes[r - 1] == 3,
                (2..=r - 2).all(|i| layer_sizes[i] >= 4),
            )
        } else {
            (false, false, false)
        };
        HypothesisReport {
            root,
            r,
            radius,
            applicable,
            h1,
            h2,
            h3,
            layer_sizes,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.applicable && self.h1 && self.h2 && self.h3
    }
}

pub fn check_hypotheses(g: &Graph, root: Vertex) -> Result<HypothesisReport> {
    let layers = bfs_layers(g, root)?;
    let (radius, _) = radius_and_center(g)?;
    Ok(HypothesisReport::from_layer_sizes(root, radius, layers.layer_sizes()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// `d(x1, z_{r-1}) = d(y1, x_{r-1}) = d(z1, y_{r-1}) = r`.
    First,
    /// `d(x1, z_{r-1}) = d(y1, x_{r-1}) = d(z1, x_{r-1}) = r`.
    Second,
    Neither,
}

/// Distance pattern between the layer-1 and layer-`(r-1)` path vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioPattern {
    pub pattern: Pattern,
    /// Indices of the paths playing x, y and z.
    pub assignment: [usize; 3],
    /// `distances[a][b]`: from the layer-1 vertex of role `a` to the
    /// layer-`(r-1)` vertex of role `b` (roles x, y, z).
    pub distances: [[usize; 3]; 3],
    /// Whether any assignment realises the second pattern.
    pub second_possible: bool,
}

const ASSIGNMENTS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Classifies a layer-aligned triple of disjoint paths over all six role
/// assignments.
pub fn classify_scenario(
    g: &Graph,
    layers: &LayerDecomposition,
    paths: &PathSystem,
) -> Result<ScenarioPattern> {
    let r = layers.ecc();
    if paths.len() != 3 {
        return Err(Error::MalformedPaths(format!("need 3 paths, got {}", paths.len())));
    }
    if r < 3 {
        return Err(Error::MalformedPaths(format!("layer count {r} is below 3")));
    }
    if !paths.is_layer_aligned(layers) {
        return Err(Error::MalformedPaths("paths are not aligned with the layers".into()));
    }
    // raw[a][b] = d(first vertex of path a, layer-(r-1) vertex of path b)
    let mut raw = [[0usize; 3]; 3];
    for (a, pa) in paths.paths().iter().enumerate() {
        let dist = bfs_distances(g, pa[1]);
        for (b, pb) in paths.paths().iter().enumerate() {
            raw[a][b] = dist[pb[r - 1]].ok_or(Error::Disconnected {
                root: pa[1],
                unreached: pb[r - 1],
            })?;
        }
    }
    let first = |[x, y, z]: [usize; 3]| raw[x][z] == r && raw[y][x] == r && raw[z][y] == r;
    let second = |[x, y, z]: [usize; 3]| raw[x][z] == r && raw[y][x] == r && raw[z][x] == r;
    let second_possible = ASSIGNMENTS.iter().any(|&a| second(a));
    let (pattern, assignment) = if let Some(&a) = ASSIGNMENTS.iter().find(|&&a| first(a)) {
        (Pattern::First, a)
    } else if let Some(&a) = ASSIGNMENTS.iter().find(|&&a| second(a)) {
        (Pattern::Second, a)
    } else {
        (Pattern::Neither, ASSIGNMENTS[0])
    };
    let mut distances = [[0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            distances[a][b] = raw[assignment[a]][assignment[b]];
        }
    }
    Ok(ScenarioPattern {
        pattern,
        assignment,
        distances,
        second_possible,
    })
}

/// `Some(r)` iff `g` is isomorphic to the `2(r-1)`-gonal prism.
pub fn recognize_prism(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 8 || !n.is_multiple_of(4) {
        return None;
    }
    let r = n / 4 + 1;
    if g.size() != 6 * (r - 1) || g.vertices().any(|v| g.degree(v) != 3) {
        return None;
    }
    // The prism is 3-connected, so a non-3-connected graph cannot match and
    // for a 3-connected one the embedding is unique up to mirroring.
    if !crate::structure::connectivity::vertex_connectivity_at_least(g, 3).ok()? {
        return None;
    }
    let eg = embed(g)?;
    let target = prism(r).ok()?;
    (canonical_code(&eg) == canonical_code(&target)).then_some(r)
}

/// Deterministic family of neighbour rankings used to extract alternative
/// path triples: identity, reversed, and two rotations.
fn rankings(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<_>>(), (0..n).rev().collect()];
    for shift in [n / 3, 2 * n / 3] {
        out.push((0..n).map(|v| (v + shift) % n).collect());
    }
    out
}

/// Every distinct disjoint-path triple found from the rankings above.
pub fn path_triples(g: &Graph, source: Vertex, sink: Vertex) -> Result<Vec<PathSystem>> {
    let mut out: Vec<PathSystem> = Vec::new();
    for rank in rankings(g.order()) {
        if let PathSearch::Found(ps) = disjoint_paths_ranked(g, source, sink, 3, &rank)? {
            let mut key = ps.paths().to_vec();
            key.sort();
            if !out.iter().any(|o| {
                let mut k = o.paths().to_vec();
                k.sort();
                k == key
            }) {
                out.push(ps);
            }
        }
    }
    Ok(out)
}

/// Result of checking one central root of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCheck {
    pub hypotheses: HypothesisReport,
    /// Only filled when all three conditions hold.
    pub prism: Option<usize>,
    pub order_identity: bool,
    pub path_triples: usize,
    pub path_lengths_exact: bool,
    pub patterns: Vec<Pattern>,
    pub second_possible: bool,
}

impl RootCheck {
    /// The conditions hold but a consequence fails.
    pub fn is_violation(&self) -> bool {
        self.hypotheses.all_hold()
            && (self.prism.is_none()
                || !self.order_identity
                || !self.path_lengths_exact
                || self.path_triples == 0
                || self.second_possible
                || self.patterns.iter().any(|&p| p != Pattern::First))
    }
}

/// Checks the layer conditions at `root` and, when they hold, every
/// consequence: prism recognition, the order identity, path lengths, and the
/// scenario pattern for each extracted path triple.
pub fn check_root(g: &Graph, root: Vertex) -> Result<RootCheck> {
    let layers = bfs_layers(g, root)?;
    let (radius, _) = radius_and_center(g)?;
    let hypotheses = HypothesisReport::from_layer_sizes(root, radius, layers.layer_sizes());
    let mut check = RootCheck {
        hypotheses,
        prism: None,
        order_identity: true,
        path_triples: 0,
        path_lengths_exact: true,
        patterns: Vec::new(),
        second_possible: false,
    };
    if !check.hypotheses.all_hold() {
        return Ok(check);
    }
    let r = layers.ecc();
    check.prism = recognize_prism(g);
    check.order_identity = g.order() == 4 * (r - 1);
    let sink = layers.layer(r)[0];
    for triple in path_triples(g, root, sink)? {
        check.path_triples += 1;
        if !triple.lengths().iter().all(|&l| l == r) || !triple.is_layer_aligned(&layers) {
            check.path_lengths_exact = false;
            continue;
        }
        let scenario = classify_scenario(g, &layers, &triple)?;
        check.second_possible |= scenario.second_possible;
        check.patterns.push(scenario.pattern);
    }
    Ok(check)
}

/// All central roots of a graph.
pub fn check_graph(g: &Graph) -> Result<Vec<RootCheck>> {
    let (_, center) = radius_and_center(g)?;
    center.into_iter().map(|u| check_root(g, u)).collect()
}

/// Minimum size and all minimal graphs for a radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub r: usize,
    pub min_size: usize,
    /// Canonical codes, sorted.
    pub witnesses: Vec<CodeBytes>,
    pub unique: bool,
    pub prism_match: bool,
    pub search_cap: usize,
    /// False if expansion-safe pruning restricted the universe.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Found(ExtremalRecord),
    /// No graph of the radius exists up to `cap` edges.
    Exhausted { r: usize, cap: usize },
}

impl SearchOutcome {
    pub fn record(&self) -> Option<&ExtremalRecord> {
        match self {
            SearchOutcome::Found(rec) => Some(rec),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

/// Per-level statistics gathered during a search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub size: usize,
    pub count: usize,
    pub max_radius: usize,
    pub with_radius: usize,
    /// Graphs violating `radius <= order / 4 + 3`.
    pub bound_violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusSearch {
    pub outcome: SearchOutcome,
    pub levels: Vec<LevelSummary>,
}

/// Expansion-safe pruning for a radius search up to `cap` edges.
///
/// All layers strictly between a root and its farthest vertex separate the
/// two, so in a 3-connected graph they have at least 3 vertices each and a
/// graph of radius `r` has order at least `3r - 1`. A graph of size at most
/// `cap` then has at most `cap + 2 - (3r - 1)` faces, and since faces never
/// decrease along either generation move, larger-faced graphs can be dropped.
pub fn radius_pruning(r: usize, cap: usize) -> FilterSet {
    FilterSet::new(vec![Filter::MaxFaces((cap + 3).saturating_sub(3 * r))])
}

/// Scans levels in increasing size for the first one containing a graph of
/// radius `r`.
pub fn min_size_for_radius(enumerator: &Enumerator, r: usize, cap: usize) -> Result<RadiusSearch> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("radius must be at least 3, got {r}")));
    }
    let mut levels = Vec::new();
    for level in enumerator.levels(cap)? {
        let level = level?;
        let radii: Vec<(usize, usize)> = level
            .codes()
            .par_iter()
            .map(|code| {
                let g = code.decode().expect("level codes are valid").into_graph();
                let (rad, _) = radius_and_center(&g).expect("polytopes are connected");
                (rad, g.order())
            })
            .collect();
        let witnesses: Vec<CodeBytes> = level
            .codes()
            .iter()
            .zip(&radii)
            .filter(|(_, &(rad, _))| rad == r)
            .map(|(c, _)| c.clone())
            .collect();
        levels.push(LevelSummary {
            size: level.size(),
            count: level.len(),
            max_radius: radii.iter().map(|&(rad, _)| rad).max().unwrap_or(0),
            with_radius: witnesses.len(),
            bound_violations: radii.iter().filter(|&&(rad, n)| 4 * rad > n + 12).count(),
        });
        log::info!(
            "size {}: {} polytopes, {} of radius {r}",
            level.size(),
            level.len(),
            witnesses.len()
        );
        if !witnesses.is_empty() {
            let prism_match = witnesses.iter().all(|c| {
                let g = c.decode().expect("level codes are valid").into_graph();
                recognize_prism(&g) == Some(r)
            });
            let record = ExtremalRecord {
                r,
                min_size: level.size(),
                unique: witnesses.len() == 1,
                prism_match,
                witnesses,
                search_cap: cap,
                complete: level.is_complete(),
            };
            return Ok(RadiusSearch {
                outcome: SearchOutcome::Found(record),
                levels,
            });
        }
    }
    Ok(RadiusSearch {
        outcome: SearchOutcome::Exhausted { r, cap },
        levels,
    })
}

/// Aggregate over every witness and every central root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub r: usize,
    pub witnesses: usize,
    pub roots_checked: usize,
    pub roots_with_hypotheses: usize,
    pub path_triples: usize,
    pub first: usize,
    pub second: usize,
    pub neither: usize,
    pub second_possible: usize,
    pub prism_failures: usize,
    pub path_length_failures: usize,
    pub order_identity_failures: usize,
    /// Hex canonical codes of witnesses with a violating root.
    pub counterexamples: Vec<String>,
}

impl Theorem1Report {
    pub fn passes(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn absorb(&mut self, code: &CodeBytes, checks: &[RootCheck]) {
        self.witnesses += 1;
        for c in checks {
            self.roots_checked += 1;
            if !c.hypotheses.all_hold() {
                continue;
            }
            self.roots_with_hypotheses += 1;
            self.path_triples += c.path_triples;
            for p in &c.patterns {
                match p {
                    Pattern::First => self.first += 1,
                    Pattern::Second => self.second += 1,
                    Pattern::Neither => self.neither += 1,
                }
            }
            self.second_possible += c.second_possible as usize;
            self.prism_failures += c.prism.is_none() as usize;
            self.path_length_failures += !c.path_lengths_exact as usize;
            self.order_identity_failures += !c.order_identity as usize;
        }
        if checks.iter().any(RootCheck::is_violation) {
            self.counterexamples.push(code.to_hex());
        }
    }
}

/// Runs [`check_graph`] on every minimal witness of a completed search.
pub fn verify_theorem1(record: &ExtremalRecord) -> Result<Theorem1Report> {
    let mut report = Theorem1Report {
        r: record.r,
        ..Default::default()
    };
    for code in &record.witnesses {
        let g = code.decode()?.into_graph();
        let checks = check_graph(&g)?;
        report.absorb(code, &checks);
        if checks.iter().any(RootCheck::is_violation) {
            log::error!("radius {}: witness {} violates the prism conclusion", record.r, code.to_hex());
        }
    }
    Ok(report)
}

/// A polytope of radius `r >= 3` with at most `6(r-1)` edges that is not the
/// prism would refute uniqueness (or minimality) of the prism.
pub fn is_question1_counterexample(g: &Graph) -> Result<bool> {
    let (r, _) = radius_and_center(g)?;
    Ok(r >= 3 && g.size() <= 6 * (r - 1) && recognize_prism(g) != Some(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cube, octahedron, pyramid};
    use crate::structure::connectivity::disjoint_paths;

    #[test]
    fn hypotheses_on_hexagonal_prism() {
        let g = prism(4).unwrap().into_graph();
        for root in g.vertices() {
            let h = check_hypotheses(&g, root).unwrap();
            assert!(h.all_hold());
            assert_eq!(h.layer_sizes, vec![1, 3, 4, 3, 1]);
        }
    }

    #[test]
    fn hypotheses_on_cube_with_vacuous_third() {
        let g = cube().into_graph();
        let h = check_hypotheses(&g, 0).unwrap();
        assert_eq!(h.layer_sizes, vec![1, 3, 3, 1]);
        assert!(h.h1 && h.h2 && h.h3);
    }

    #[test]
    fn hypotheses_not_applicable_on_square_pyramid() {
        let g = pyramid(4).unwrap().into_graph();
        let h = check_hypotheses(&g, 4).unwrap();
        assert_eq!((h.r, h.radius), (1, 1));
        assert!(!h.applicable && !h.all_hold());
        // A rim vertex is not central.
        assert!(!check_hypotheses(&g, 0).unwrap().applicable);
    }

    #[test]
    fn hypotheses_recomputable_from_layers() {
        let h = HypothesisReport::from_layer_sizes(0, 5, vec![1, 3, 4, 5, 3, 1]);
        assert!(h.all_hold());
        let h = HypothesisReport::from_layer_sizes(0, 5, vec![1, 3, 4, 3, 4, 1]);
        assert!(h.h1 && !h.h2 && !h.h3);
        let h = HypothesisReport::from_layer_sizes(0, 4, vec![1, 3, 4, 3, 2]);
        assert!(!h.h1 && h.h2 && h.h3);
    }

    #[test]
    fn prism_scenarios_are_first() {
        for r in [3, 4, 5] {
            let g = prism(r).unwrap().into_graph();
            let layers = bfs_layers(&g, 0).unwrap();
            let w = layers.layer(r)[0];
            let paths = disjoint_paths(&g, 0, w, 3).unwrap().found().unwrap();
            let s = classify_scenario(&g, &layers, &paths).unwrap();
            assert_eq!(s.pattern, Pattern::First, "r = {r}");
            assert!(!s.second_possible);
            let [x, y, z] = [0, 1, 2];
            assert_eq!(s.distances[x][z], r);
            assert_eq!(s.distances[y][x], r);
            assert_eq!(s.distances[z][y], r);
        }
    }

    #[test]
    fn classify_rejects_malformed_systems() {
        let g = prism(4).unwrap().into_graph();
        let layers = bfs_layers(&g, 0).unwrap();
        // Paths to a non-antipodal vertex are not layer-aligned.
        let paths = disjoint_paths(&g, 0, 7, 3).unwrap().found().unwrap();
        assert!(classify_scenario(&g, &layers, &paths).is_err());
    }

    #[test]
    fn prism_recognition() {
        assert_eq!(recognize_prism(cube().graph()), Some(3));
        assert_eq!(recognize_prism(octahedron().graph()), None);
        assert_eq!(recognize_prism(prism(7).unwrap().graph()), Some(7));
        assert_eq!(recognize_prism(pyramid(7).unwrap().graph()), None);
        // The Wagner graph: cubic, 8 vertices, 12 edges, not planar.
        let wagner = crate::graph::Graph::new(
            8,
            (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4))),
        )
        .unwrap();
        assert_eq!(recognize_prism(&wagner), None);
    }

    #[test]
    fn prism_roots_pass() {
        for r in 3..=6 {
            let g = prism(r).unwrap().into_graph();
            for c in check_graph(&g).unwrap() {
                assert!(c.hypotheses.all_hold());
                assert!(!c.is_violation(), "r = {r}: {c:?}");
                assert!(c.path_triples >= 1);
            }
        }
    }

    #[test]
    fn rewired_prism_breaks_an_invariant() {
        let p = prism(4).unwrap().into_graph();
        // Drop rung 0-6 and join 0 to inner vertex 9 instead.
        let mutated = p.without_edge(0, 6).with_edge(0, 9).unwrap();
        for c in check_graph(&mutated).unwrap() {
            assert!(!c.hypotheses.all_hold() || c.prism.is_none());
        }
        assert_eq!(recognize_prism(&mutated), None);
    }

    #[test]
    fn small_searches() {
        let e = Enumerator::new(FilterSet::none());
        let s = min_size_for_radius(&e, 3, 12).unwrap();
        let rec = s.outcome.record().unwrap();
        assert_eq!(rec.min_size, 12);
        assert!(rec.unique && rec.prism_match);
        assert_eq!(rec.witnesses, vec![canonical_code(&cube())]);

        let s = min_size_for_radius(&e, 3, 11).unwrap();
        assert_eq!(s.outcome, SearchOutcome::Exhausted { r: 3, cap: 11 });
        assert!(min_size_for_radius(&e, 2, 11).is_err());
    }

    #[test]
    fn counterexample_predicate() {
        assert!(!is_question1_counterexample(cube().graph()).unwrap());
        assert!(!is_question1_counterexample(octahedron().graph()).unwrap());
    }
}
