//! Majorana fermion codes and qubit stabilizer codes over GF(2).
//!
//! This crate builds, transforms, and analyzes two families of quantum
//! error-correcting codes at desk scale:
//!
//! * **Majorana fermion codes** — stabilizer groups of even-weight Majorana
//!   operators on `m` modes, represented as GF(2) support vectors
//!   ([`MajoranaCode`]). Analyses cover logical counting (including
//!   half-integer qubit counts), code distance, the minimum diameter of a
//!   region supporting an even logical operator (`l_even`), odd-logical
//!   detection (`k_odd`), canonical logical bases, and region cleanability.
//! * **Qubit stabilizer codes** — symplectic `(x|z)` generator matrices
//!   ([`StabilizerCode`]), with distance search and weakly self-dual CSS
//!   detection.
//!
//! The [`maps`] module converts between the two families: every stabilizer
//! code maps onto a Majorana code on 4n modes with doubled distance, every
//! Majorana code on 2n modes doubles into a `[[2n,2k,d]]` weakly self-dual
//! CSS code, and composing the two sends `[[n,k,d]]` to `[[4n,2k,2d]]`.
//! The [`color`] module constructs trivalent cylinder lattices with odd
//! boundaries whose face codes encode one qubit protected both by code
//! distance and by fermion-parity superselection.
//!
//! Run `cargo run --bin mfc -- --help` for the command-line surface, or see
//! the `examples/` directory for one runnable walkthrough per capability.

pub mod cli;
pub mod color;
pub mod geometry;
pub mod gf2;
pub mod majorana;
pub mod maps;
pub mod pauli;
pub mod random;

pub use color::SurfaceGraph;
pub use geometry::{Layout, Region, StripPartition};
pub use gf2::{BitMatrix, BitVector, ParityFilter, Search};
pub use majorana::{AnalysisReport, MajoranaCode, MajoranaOperator};
pub use maps::CatalogCode;
pub use pauli::{PauliOperator, StabilizerCode};
