//! Combinatorics of cyclotomic KLR algebras in types A-infinity and
//! C-infinity: residues and weights, multipartitions and blocks, standard
//! tableaux and their degrees, crystal operators, graded dimensions, and the
//! bridge between level-one type C blocks and level-two type A blocks.

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod graded;
pub mod morita;
pub mod partitions;
pub mod perm;
pub mod semistandard;
pub mod tableaux;

pub use cartan::{CartanType, DominantWeight, Residue, RootVector};
pub use error::{Error, Result};
pub use graded::LaurentPoly;
pub use morita::{bridge, verify_bridge, BlockBridge, BridgeReport, Check};
pub use partitions::{MultiPartition, Node, Partition};
pub use semistandard::SemistandardTableauPlus;
pub use tableaux::StandardTableau;
