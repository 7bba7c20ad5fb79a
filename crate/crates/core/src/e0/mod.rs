//! The countable sequential effect algebra with elements `0, 1, aₙ, bₙ,
//! c_{i,k,m}, d_{i,k,m}`, in which the average value inequality fails.
//!
//! Elements are symbolic and already in normal form, so element equality is
//! structural equality. [`E0Carrier`] exposes the algebra through the carrier
//! traits with a [`Window`] as its quantification sample.

mod element;
pub mod ops;
mod window;

use std::marker::PhantomData;
use std::sync::OnceLock;

pub use element::{E0Element, ElementError, Kind, ParseElementError};
pub use ops::{complement, leq, oplus, sprod, OplusBranch, SprodBranch};
pub use window::{BranchCoverage, Window};

use crate::algebra::{AlgebraError, EffectAlgebra, SequentialEffectAlgebra};
use crate::index::Index;
use crate::partial::PartialResult;

/// The symbolic model, sampled over a window.
///
/// Complements and the order are closed-form; the witness space (used for
/// the sample-relative uniqueness of complements) is the enlarged window.
pub struct E0Carrier<I> {
    window: Window,
    sample: OnceLock<Vec<E0Element<I>>>,
    witnesses: OnceLock<Vec<E0Element<I>>>,
    _index: PhantomData<I>,
}

impl<I: Index> E0Carrier<I> {
    pub fn new(window: Window) -> Self {
        E0Carrier {
            window,
            sample: OnceLock::new(),
            witnesses: OnceLock::new(),
            _index: PhantomData,
        }
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn elements(&self) -> &[E0Element<I>] {
        self.sample.get_or_init(|| self.window.enumerate())
    }

    pub fn witness_elements(&self) -> &[E0Element<I>] {
        self.witnesses
            .get_or_init(|| self.window.enlarged().enumerate())
    }
}

impl<I: Index> EffectAlgebra for E0Carrier<I> {
    type Element = E0Element<I>;

    fn zero(&self) -> E0Element<I> {
        E0Element::Zero
    }

    fn one(&self) -> E0Element<I> {
        E0Element::One
    }

    fn oplus(&self, a: &E0Element<I>, b: &E0Element<I>) -> PartialResult<E0Element<I>> {
        ops::oplus(a, b)
    }

    fn sample(&self) -> Vec<E0Element<I>> {
        self.elements().to_vec()
    }

    fn render(&self, a: &E0Element<I>) -> String {
        a.to_string()
    }

    fn witness_space(&self) -> Vec<E0Element<I>> {
        self.witness_elements().to_vec()
    }

    fn orthosupplement(&self, a: &E0Element<I>) -> Result<E0Element<I>, AlgebraError> {
        Ok(ops::complement(a))
    }

    fn leq(&self, a: &E0Element<I>, b: &E0Element<I>) -> bool {
        ops::leq(a, b)
    }
}

impl<I: Index> SequentialEffectAlgebra for E0Carrier<I> {
    fn sprod(&self, a: &E0Element<I>, b: &E0Element<I>) -> E0Element<I> {
        ops::sprod(a, b)
    }

    // ∘ is symmetric on this model.
    fn seq_independent(&self, _a: &E0Element<I>, _b: &E0Element<I>) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial::{Defined, Undefined};
    use crate::{E0Window, E0};

    fn el(s: &str) -> E0 {
        s.parse().unwrap()
    }

    #[test]
    fn derived_notions() {
        let c = E0Window::new(Window::DEFAULT);
        assert_eq!(c.orthosupplement(&el("a3")).unwrap(), el("b3"));
        assert_eq!(c.orthosupplement(&el("0")).unwrap(), el("1"));
        assert_eq!(
            c.orthosupplement(&el("c[2,1,-5]")).unwrap(),
            el("d[2,1,-5]")
        );
        assert!(c.orthogonal(&el("c[1,0,0]"), &el("c[0,1,0]")));
        assert!(!c.orthogonal(&el("a3"), &el("b2")));
        assert_eq!(c.double(&el("a1")), Defined(el("a2")));
        assert_eq!(c.double(&el("b1")), Undefined);
        assert_eq!(c.double(&el("0")), Defined(el("0")));
        assert_eq!(c.square(&el("c[1,0,0]")), el("0"));
        assert_eq!(c.square(&el("b2")), el("b4"));
        assert_eq!(c.square(&el("1")), el("1"));
        assert!(c.is_sharp(&el("0")) && c.is_sharp(&el("1")));
        assert!(!c.is_sharp(&el("a1")));
    }

    #[test]
    fn only_trivial_sharp_elements() {
        for w in [Window::DEFAULT, Window::new(4, 3, 3).unwrap()] {
            let c = E0Window::new(w);
            let sharp: Vec<_> = c
                .elements()
                .iter()
                .filter(|x| c.is_sharp(x))
                .cloned()
                .collect();
            assert_eq!(sharp, vec![el("0"), el("1")]);
        }
    }

    #[test]
    fn double_undefined_exactly_off_a_and_c() {
        // 2x is defined only for 0, aₙ and c_{i,k,m}.
        let c = E0Window::new(Window::new(3, 2, 2).unwrap());
        for x in c.elements() {
            let expect = matches!(x.kind(), Kind::Zero | Kind::A | Kind::C);
            assert_eq!(c.double(x).is_defined(), expect, "{x}");
        }
    }

    #[test]
    fn generic_orthosupplement_search_matches_closed_form() {
        struct Searched(E0Window);
        impl EffectAlgebra for Searched {
            type Element = E0;
            fn zero(&self) -> E0 {
                E0::Zero
            }
            fn one(&self) -> E0 {
                E0::One
            }
            fn oplus(&self, a: &E0, b: &E0) -> PartialResult<E0> {
                self.0.oplus(a, b)
            }
            fn sample(&self) -> Vec<E0> {
                self.0.sample()
            }
            fn render(&self, a: &E0) -> String {
                a.to_string()
            }
        }
        let s = Searched(E0Window::new(Window::new(2, 2, 1).unwrap()));
        for x in s.0.elements() {
            assert_eq!(s.orthosupplement(x).unwrap(), complement(x));
        }
    }
}
