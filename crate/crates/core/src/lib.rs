//! Shellability of nonpure simplicial complexes, obstructions to
//! shellability and purity, integral simplicial homology, and shellings of
//! order complexes of interval orders.

pub mod canonical;
pub mod complex;
pub mod error;
pub mod families;
pub mod format;
pub mod homology;
pub mod interval_shell;
pub mod obstructions;
pub mod poset;
pub mod shelling;

pub use canonical::{canonical_form, canonical_key, CanonicalKey};
pub use complex::{join_vertex, Face, SimplicialComplex, Vertex};
pub use error::{Error, Result};
pub use families::Seed;
pub use homology::{reduced_homology, HomologyProfile};
pub use poset::{order_complex, BoundedPoset, FinitePoset};
pub use shelling::{
    find_shelling, is_shellable, is_shelling, SearchBudget, SearchOutcome, Shellability,
    ShellingCertificate, ShellingCheck, ShellingOrder,
};
