//! Words, Young tableaux, quasi-ribbon tableaux and the crystal graphs of the
//! plactic and hypoplactic monoids.

pub mod enumeration;
pub mod error;
pub mod exec;
pub mod graph;
pub mod operators;
pub mod ribbon;
pub mod verify;
pub mod words;
pub mod young;

pub use error::{Error, Result};
pub use exec::Execution;
pub use num_bigint::BigUint;

pub use ribbon::{
    highest_weight_qrw, hypo_congruent, hypo_rsk, hypo_rsk_inverse, kt_insert, QuasiRibbonTableau,
    QuasiRibbonTabloid, RecordingRibbon,
};
pub use words::{Composition, Partition, Symbol, WeakComposition, Word};
pub use young::{rsk, StandardYoungTableau, YoungTableau};
