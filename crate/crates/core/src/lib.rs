//! Garside monoids and groups, their parabolic submonoids and the ribbon
//! groupoid of conjugations between them.
//!
//! The entry point is [`GarsideSystem`], built from a Coxeter matrix or an
//! explicit table of simple elements. Positive elements are kept in
//! left-greedy normal form ([`Positive`]); group elements as `Δⁿ·p`
//! ([`GroupEl`]).

pub mod atoms;
pub mod bundled;
pub mod cli;
pub mod coxeter;
pub mod elements;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod nu;
pub mod parabolic;
pub mod quasicenter;
pub mod rewrite;
pub mod ribbon;
pub mod spec;
pub mod system;
pub mod words;

pub use atoms::{AtomId, AtomSet};
pub use elements::{GroupEl, GroupLetter, LatticeOp, Positive};
pub use error::{Error, Result};
pub use nu::{NuAtom, NuKind, NuReport, NuVariant, NuViolation};
pub use quasicenter::QZBasis;
pub use ribbon::{
    Check, ConjDecomposition, Generator, JoinPaths, Presentation, Quiver, Relation, RelationKind,
    RibbonMorphism, ShakerReport, Shakers,
};
pub use spec::SystemSpec;
pub use system::{GarsideSystem, Provenance, Side, Simple};
