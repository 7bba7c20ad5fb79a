use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer type used for the subscripts of symbolic elements.
///
/// Implemented for the primitive signed integers and for
/// [`num_bigint::BigInt`]. All subscript arithmetic is exact: with a
/// primitive type the caller is responsible for staying inside its range.
pub trait Index:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn of(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("subscript out of range for index type")
    }
}

impl<T> Index for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
