//! Exact computations with party monoids, their twisted monoid algebras and
//! the two-parameter Party-Hecke algebra.

pub mod combinatorics;
pub mod diagram;
pub mod error;
pub mod field;
pub mod hecke;
pub mod linalg;
pub mod party;
pub mod quotient;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod twisted;

pub use combinatorics::{IntegerPartition, Permutation, SetPartition};
pub use diagram::Diagram;
pub use error::{AlgebraError, Result};
pub use field::{Field, PrimeField, RationalFunctions, Rationals, Specialization};
pub use hecke::{AlgebraElement, Element, GeneratorWord, Letter, PartyHecke, Suite};
pub use party::{PartyElement, TiedSymElement};
pub use report::{RelationCheck, RelationReport};
pub use scalar::Scalar;
