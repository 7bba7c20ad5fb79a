//! Exact model checking for sequential effect algebras.
//!
//! The crate has three layers:
//!
//! * [`algebra`] defines the carrier traits ([`EffectAlgebra`],
//!   [`SequentialEffectAlgebra`]) and the derived notions every model shares:
//!   orthosupplement, order, orthogonality, doubling, squares, sharpness and
//!   sequential independence.
//! * Concrete models: the countable symbolic algebra in [`e0`], generic over
//!   the integer type used for its subscripts, and table-backed finite models
//!   in [`finite`].
//! * Analyses over any carrier: bounded axiom checking ([`checker`]), the
//!   average value inequality ([`inequality`]) and exhaustive enumeration of
//!   small finite models ([`search`]).

pub mod algebra;
pub mod checker;
pub mod e0;
pub mod expr;
pub mod finite;
pub mod index;
pub mod inequality;
pub mod partial;
pub mod search;

pub use algebra::{AlgebraError, EffectAlgebra, SequentialEffectAlgebra};
pub use e0::{E0Carrier, E0Element, Window};
pub use finite::{FiniteModel, LoadError};
pub use index::Index;
pub use partial::PartialResult;

/// Elements of the symbolic model with 64-bit subscripts.
///
/// Every window with bounds up to 10⁶ keeps all intermediate subscripts well
/// inside `i64` (the largest term is a sum of a handful of products of two
/// subscripts, each below 10⁸).
pub type E0 = E0Element<i64>;

/// Elements of the symbolic model with arbitrary-precision subscripts.
pub type E0Big = E0Element<num_bigint::BigInt>;

/// Windowed carrier over [`E0`].
pub type E0Window = E0Carrier<i64>;

/// Windowed carrier over [`E0Big`].
pub type E0BigWindow = E0Carrier<num_bigint::BigInt>;
