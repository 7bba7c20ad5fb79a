//! Carrier traits and the notions derived from `⊕` and `∘`.
//!
//! Every universally quantified statement in this crate ranges over
//! [`EffectAlgebra::sample`]. Infinite models expose a finite slice there and
//! may widen the search space for witnesses through
//! [`EffectAlgebra::witness_space`].

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::partial::{Defined, PartialResult, Undefined};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("no complement of {element} found within the sample")]
    NoComplement { element: String },
}

/// An effect algebra `(E, 0, 1, ⊕)`.
pub trait EffectAlgebra: Sync {
    type Element: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Element;

    fn one(&self) -> Self::Element;

    fn oplus(&self, a: &Self::Element, b: &Self::Element) -> PartialResult<Self::Element>;

    /// The finite set universally quantified statements range over.
    fn sample(&self) -> Vec<Self::Element>;

    fn render(&self, a: &Self::Element) -> String;

    /// Elements searched when looking for existential witnesses (order
    /// witnesses, complements). Defaults to the sample.
    fn witness_space(&self) -> Vec<Self::Element> {
        self.sample()
    }

    /// `a′`, the element with `a ⊕ a′ = 1`.
    fn orthosupplement(&self, a: &Self::Element) -> Result<Self::Element, AlgebraError> {
        let one = self.one();
        self.witness_space()
            .into_iter()
            .find(|b| self.oplus(a, b) == Defined(one.clone()))
            .ok_or_else(|| AlgebraError::NoComplement {
                element: self.render(a),
            })
    }

    /// `a ≤ b` iff some `c` has `a ⊕ c = b`.
    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool {
        if a == b || *a == self.zero() {
            return true;
        }
        self.witness_space()
            .iter()
            .any(|c| self.oplus(a, c).as_ref() == Defined(b))
    }

    fn orthogonal(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.oplus(a, b).is_defined()
    }

    /// `2a = a ⊕ a`, when `a ⊥ a`.
    fn double(&self, a: &Self::Element) -> PartialResult<Self::Element> {
        self.oplus(a, a)
    }
}

/// A sequential effect algebra `(E, 0, 1, ⊕, ∘)`.
pub trait SequentialEffectAlgebra: EffectAlgebra {
    fn sprod(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn square(&self, a: &Self::Element) -> Self::Element {
        self.sprod(a, a)
    }

    /// Sharp elements are exactly the idempotents of `∘`.
    fn is_sharp(&self, a: &Self::Element) -> bool {
        self.square(a) == *a
    }

    /// `a | b`: `a ∘ b = b ∘ a`.
    fn seq_independent(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.sprod(a, b) == self.sprod(b, a)
    }
}

/// `a ⊕ b` where either side may already be undefined.
pub fn oplus_partial<A: EffectAlgebra + ?Sized>(
    alg: &A,
    a: &PartialResult<A::Element>,
    b: &PartialResult<A::Element>,
) -> PartialResult<A::Element> {
    match (a, b) {
        (Defined(a), Defined(b)) => alg.oplus(a, b),
        _ => Undefined,
    }
}

/// `a ∘ b` where either side may be undefined.
pub fn sprod_partial<A: SequentialEffectAlgebra + ?Sized>(
    alg: &A,
    a: &PartialResult<A::Element>,
    b: &PartialResult<A::Element>,
) -> PartialResult<A::Element> {
    match (a, b) {
        (Defined(a), Defined(b)) => Defined(alg.sprod(a, b)),
        _ => Undefined,
    }
}
