//! Exhaustive enumeration of small finite effect algebras and their
//! sequential products, and a census of the average value inequality over
//! them.

mod census;
mod effect;
pub mod iso;
mod sequential;

pub use census::{
    inequality_census, model_hash, Census, CensusWitness, OrderCensus, SearchConfig, SearchError,
    DEFAULT_ORDER_CAP,
};
pub use effect::{enumerate_effect_algebras, for_each_effect_algebra};
pub use sequential::{extend_with_sequential_product, for_each_sequential_product};
