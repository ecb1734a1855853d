//! Exact algebraic combinatorics of ribbon Schur functions.
//!
//! * [`composition`]: compositions, partitions, descent sets, coarsenings.
//! * [`type_profile`]: position types and the signed `g`/`h` functions.
//! * [`ops`]: the monoid `(C, ∘)`, irreducible factorization, equivalence classes.
//! * [`qsym`]: quasisymmetric functions in the `M` and `F` bases.
//! * [`sym`]: `h`-basis arithmetic, ribbons, skew Schur functions via tableaux.
//! * [`perm`]: permutations, descent sets, tensor products.
//! * [`cone`]: the cone of `F`-positive symmetric functions.
//! * [`verify`]: exhaustive theorem-as-property suites.
//!
//! All arithmetic is exact.

pub mod composition;
pub mod cone;
pub mod error;
pub mod json;
pub mod ops;
pub mod perm;
pub mod qsym;
pub mod rational;
pub mod sym;
pub mod type_profile;
pub mod verify;

pub use composition::{compositions, partitions, Composition, DescentSet, Partition, PartitionMultiset};
pub use error::{Error, Result};
pub use rational::Rational;
