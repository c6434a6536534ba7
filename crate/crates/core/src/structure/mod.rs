//! Connectivity and planarity certificates.

pub mod connectivity;
pub mod planarity;

pub use connectivity::{
    disjoint_paths, disjoint_paths_ranked, vertex_connectivity_at_least, PathSearch, PathSystem,
    Role, Separator,
};
pub use planarity::{embed, is_planar, KuratowskiKind, KuratowskiWitness, Planarity};
