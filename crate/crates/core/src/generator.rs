//! Exhaustive generation of 3-polytopes by number of edges.
//!
//! Every 3-polytope of size `q` that is not a pyramid arises from one of size
//! `q - 1` either by inserting a diagonal into a face or, dually, by
//! splitting a vertex. Level `q` is therefore the deduplicated union of the
//! pyramid with `q` edges (if `q` is even) and all children of level `q - 1`.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::LevelCache;
use crate::canon::{canonical_code, CodeBytes};
use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};

pub use crate::families::pyramid;

/// Smallest size of a 3-polytope (the tetrahedron).
pub const MIN_SIZE: usize = 6;

/// Sizes beyond this need an explicit opt-in from callers.
pub const DEFAULT_SIZE_CAP: usize = 24;

/// Every graph obtained by inserting one diagonal into one face, in face
/// order and then by diagonal endpoints. Empty if all faces are triangles.
pub fn face_edge_additions(eg: &EmbeddedGraph) -> Vec<EmbeddedGraph> {
    let mut children = Vec::new();
    for face in eg.faces() {
        let len = face.len();
        if len < 4 {
            continue;
        }
        for i in 0..len {
            for j in i + 2..len {
                if i == 0 && j == len - 1 {
                    continue;
                }
                let (a, b) = (face[i], face[j]);
                if eg.graph().has_edge(a, b) {
                    continue;
                }
                let a_before = face[(i + len - 1) % len];
                let b_before = face[j - 1];
                children.push(eg.with_chord(a, a_before, b, b_before));
            }
        }
    }
    children
}

/// Vertex splittings, computed as `dual ∘ face_edge_additions ∘ dual`.
pub fn vertex_splits(eg: &EmbeddedGraph) -> Result<Vec<EmbeddedGraph>> {
    face_edge_additions(&eg.dual()?)
        .iter()
        .map(EmbeddedGraph::dual)
        .collect()
}

/// Restrictions on the enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Filter {
    /// At most this many vertices.
    MaxOrder(usize),
    /// At most this many faces.
    MaxFaces(usize),
    /// Emit only 3-regular graphs.
    CubicOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterSafety {
    /// Neither move decreases the quantity, and every polytope within the
    /// bound has a parent within the bound, so pruning keeps exhaustiveness
    /// for the graphs that pass.
    ExpansionSafe,
    /// Only restricts what is reported; pruning on it would lose graphs.
    OutputOnly,
}

impl Filter {
    pub fn safety(&self) -> FilterSafety {
        match self {
            // Edge additions add a face, splits add a vertex; neither removes one.
            Filter::MaxOrder(_) | Filter::MaxFaces(_) => FilterSafety::ExpansionSafe,
            // Cubic graphs have non-cubic ancestors (e.g. the cube's parents).
            Filter::CubicOnly => FilterSafety::OutputOnly,
        }
    }

    pub fn admits(&self, eg: &EmbeddedGraph) -> bool {
        match *self {
            Filter::MaxOrder(n) => eg.order() <= n,
            Filter::MaxFaces(f) => eg.size() + 2 - eg.order() <= f,
            Filter::CubicOnly => eg.graph().vertices().all(|v| eg.graph().degree(v) == 3),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::MaxOrder(n) => write!(f, "max-order-{n}"),
            Filter::MaxFaces(n) => write!(f, "max-faces-{n}"),
            Filter::CubicOnly => write!(f, "cubic-only"),
        }
    }
}

/// A set of filters, split by safety class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterSet {
    filters: Vec<Filter>,
}

impl FilterSet {
    pub fn new(mut filters: Vec<Filter>) -> Self {
        filters.sort_by_key(|f| f.to_string());
        filters.dedup();
        FilterSet { filters }
    }

    pub fn none() -> Self {
        FilterSet::default()
    }

    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    pub fn prunes(&self) -> bool {
        self.filters.iter().any(|f| f.safety() == FilterSafety::ExpansionSafe)
    }

    /// Whether a graph is kept for further expansion.
    pub fn expands(&self, eg: &EmbeddedGraph) -> bool {
        self.filters
            .iter()
            .filter(|f| f.safety() == FilterSafety::ExpansionSafe)
            .all(|f| f.admits(eg))
    }

    /// Whether a graph is reported.
    pub fn emits(&self, eg: &EmbeddedGraph) -> bool {
        self.filters.iter().all(|f| f.admits(eg))
    }

    /// The expansion-relevant part, which determines level contents.
    pub fn expansion_part(&self) -> FilterSet {
        FilterSet::new(
            self.filters
                .iter()
                .copied()
                .filter(|f| f.safety() == FilterSafety::ExpansionSafe)
                .collect(),
        )
    }

    /// Stable name for cache directories.
    pub fn key(&self) -> String {
        let part = self.expansion_part();
        if part.filters.is_empty() {
            "all".into()
        } else {
            part.filters.iter().map(ToString::to_string).collect::<Vec<_>>().join("_")
        }
    }
}

/// All (filter-admitted) 3-polytopes with a given number of edges, stored as
/// sorted canonical codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeLevel {
    size: usize,
    codes: Vec<CodeBytes>,
    complete: bool,
}

impl SizeLevel {
    pub(crate) fn from_codes(size: usize, mut codes: Vec<CodeBytes>, complete: bool) -> Self {
        codes.sort_unstable();
        codes.dedup();
        SizeLevel {
            size,
            codes,
            complete,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// False when an expansion-safe filter pruned the level.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn codes(&self) -> &[CodeBytes] {
        &self.codes
    }

    pub fn contains(&self, code: &CodeBytes) -> bool {
        self.codes.binary_search(code).is_ok()
    }

    /// Members in canonical labelling, in code order.
    pub fn graphs(&self) -> impl Iterator<Item = EmbeddedGraph> + '_ {
        self.codes.iter().map(|c| c.decode().expect("level codes are valid"))
    }

    /// Members passing every filter, including output-only ones.
    pub fn emitted<'a>(&'a self, filters: &'a FilterSet) -> impl Iterator<Item = EmbeddedGraph> + 'a {
        self.graphs().filter(move |g| filters.emits(g))
    }
}

fn children_codes(eg: &EmbeddedGraph, filters: &FilterSet) -> Vec<CodeBytes> {
    let splits = vertex_splits(eg).expect("level members are polyhedral");
    face_edge_additions(eg)
        .into_iter()
        .chain(splits)
        .filter(|c| filters.expands(c))
        .map(|c| canonical_code(&c))
        .collect()
}

/// Expands `parent` (level `q - 1`) into level `q`. Parallel over parents;
/// the sorted merge makes the result independent of scheduling.
pub fn expand_level(parent: &SizeLevel, filters: &FilterSet) -> SizeLevel {
    let size = parent.size + 1;
    let filters = filters.expansion_part();
    let mut codes: HashSet<CodeBytes> = parent
        .codes
        .par_iter()
        .fold(HashSet::new, |mut acc, code| {
            let eg = code.decode().expect("level codes are valid");
            acc.extend(children_codes(&eg, &filters));
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    if size.is_multiple_of(2) {
        let apex = pyramid(size / 2).expect("size >= 6");
        if filters.expands(&apex) {
            codes.insert(canonical_code(&apex));
        }
    }
    SizeLevel::from_codes(size, codes.into_iter().collect(), parent.complete && !filters.prunes())
}

/// The (empty) level below the tetrahedron, from which expansion starts.
pub fn base_level(filters: &FilterSet) -> SizeLevel {
    SizeLevel::from_codes(MIN_SIZE - 1, Vec::new(), !filters.prunes())
}

/// Level-by-level enumeration with optional on-disk checkpoints.
pub struct Enumerator {
    filters: FilterSet,
    cache: Option<LevelCache>,
}

impl Enumerator {
    pub fn new(filters: FilterSet) -> Self {
        Enumerator {
            filters,
            cache: None,
        }
    }

    pub fn with_cache(mut self, cache: LevelCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn filters(&self) -> &FilterSet {
        &self.filters
    }

    /// Levels `6..=q_max`, each built from the previous one (or loaded from
    /// the cache when a verified copy exists).
    pub fn levels(&self, q_max: usize) -> Result<LevelStream<'_>> {
        if q_max < MIN_SIZE {
            return Err(Error::InvalidParameter(format!(
                "q_max must be at least {MIN_SIZE}, got {q_max}"
            )));
        }
        Ok(LevelStream {
            enumerator: self,
            previous: None,
            next_size: MIN_SIZE,
            q_max,
        })
    }

    fn produce(&self, size: usize, previous: Option<&SizeLevel>) -> Result<SizeLevel> {
        if let Some(cache) = &self.cache {
            if let Some(level) = cache.load(size, &self.filters)? {
                return Ok(level);
            }
        }
        let level = match previous {
            Some(p) => expand_level(p, &self.filters),
            None => {
                let below = if size == MIN_SIZE {
                    base_level(&self.filters)
                } else {
                    self.produce(size - 1, None)?
                };
                expand_level(&below, &self.filters)
            }
        };
        if let Some(cache) = &self.cache {
            cache.store(&level, &self.filters)?;
        }
        log::info!("level {size}: {} graphs", level.len());
        Ok(level)
    }

    /// A single level.
    pub fn level(&self, size: usize) -> Result<SizeLevel> {
        if size < MIN_SIZE {
            return Err(Error::InvalidParameter(format!("no 3-polytope has {size} edges")));
        }
        self.produce(size, None)
    }
}

/// Iterator over successive levels. Holds at most one level in memory
/// besides the one being built.
pub struct LevelStream<'a> {
    enumerator: &'a Enumerator,
    previous: Option<SizeLevel>,
    next_size: usize,
    q_max: usize,
}

impl Iterator for LevelStream<'_> {
    type Item = Result<SizeLevel>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_size > self.q_max {
            return None;
        }
        let size = self.next_size;
        self.next_size += 1;
        let previous = match self.previous.take() {
            Some(p) => Some(p),
            None if size == MIN_SIZE => Some(base_level(&self.enumerator.filters)),
            None => None,
        };
        match self.enumerator.produce(size, previous.as_ref()) {
            Ok(level) => {
                self.previous = Some(level.clone());
                Some(Ok(level))
            }
            Err(e) => {
                self.next_size = self.q_max + 1;
                Some(Err(e))
            }
        }
    }
}

/// Convenience wrapper: all levels up to `q_max` without caching.
pub fn enumerate_by_size(q_max: usize, filters: FilterSet) -> Result<Vec<SizeLevel>> {
    Enumerator::new(filters).levels(q_max)?.collect()
}
