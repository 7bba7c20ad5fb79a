//! The average value inequality `2(a∘b) ≤ a² ⊕ b²` for `a ⊥ b`,
//! `(a∘b) ⊥ (a∘b)`, together with the two sufficient conditions under which
//! it holds and the replay of the counterexample in the symbolic model.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::SequentialEffectAlgebra;
use crate::e0::E0Element;
use crate::index::Index;
use crate::partial::{Defined, PartialResult, Undefined};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    HypothesesNotMet,
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityVerdict<E> {
    pub status: Status,
    pub a: E,
    pub b: E,
    /// `a ∘ b`
    pub product: E,
    /// `2(a ∘ b)`
    pub doubled: PartialResult<E>,
    /// `(a², b²)`
    pub squares: (E, E),
    /// `a² ⊕ b²`
    pub squares_sum: PartialResult<E>,
    /// The hypotheses held but `a² ⊕ b²` is undefined.
    pub sum_undefined: bool,
}

impl<E> InequalityVerdict<E> {
    /// `FAIL a=<a> b=<b> prod=<p> 2prod=<2p> squares=<a²>,<b²> sum=<s|undef>`
    pub fn line(&self, render: impl Fn(&E) -> String) -> String {
        let tag = match self.status {
            Status::Fails => "FAIL",
            Status::Holds => "HOLDS",
            Status::HypothesesNotMet => "NA",
        };
        format!(
            "{tag} a={} b={} prod={} 2prod={} squares={},{} sum={}",
            render(&self.a),
            render(&self.b),
            render(&self.product),
            self.doubled.render_with(&render),
            render(&self.squares.0),
            render(&self.squares.1),
            self.squares_sum.render_with(&render),
        )
    }
}

/// Evaluates the inequality on `(a, b)`.
///
/// With the hypotheses met and `a² ⊕ b²` undefined, the verdict is `Fails`
/// unless `2(a∘b) = 0`; either way `sum_undefined` is set.
pub fn avg_inequality<A: SequentialEffectAlgebra>(
    alg: &A,
    a: &A::Element,
    b: &A::Element,
) -> InequalityVerdict<A::Element> {
    let product = alg.sprod(a, b);
    let doubled = alg.double(&product);
    let squares = (alg.square(a), alg.square(b));
    let squares_sum = alg.oplus(&squares.0, &squares.1);
    let mut sum_undefined = false;
    let status = match &doubled {
        Defined(d) if alg.orthogonal(a, b) => match &squares_sum {
            Defined(s) => {
                if alg.leq(d, s) {
                    Status::Holds
                } else {
                    Status::Fails
                }
            }
            Undefined => {
                sum_undefined = true;
                if *d == alg.zero() {
                    Status::Holds
                } else {
                    Status::Fails
                }
            }
        },
        _ => Status::HypothesesNotMet,
    };
    InequalityVerdict {
        status,
        a: a.clone(),
        b: b.clone(),
        product,
        doubled,
        squares,
        squares_sum,
        sum_undefined,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyOutcome {
    HypothesesNotMet,
    Confirmed,
    /// A conclusion failed although the hypotheses held.
    Refuted(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck<E> {
    pub outcome: PropertyOutcome,
    pub verdict: InequalityVerdict<E>,
}

/// Under `a² ⊥ b²`, `a ≤ b` or `b ≤ a`, and `a | b`: `(a∘b) ⊥ (a∘b)` and
/// `2(a∘b) ≤ a² ⊕ b²`.
pub fn check_prop1<A: SequentialEffectAlgebra>(
    alg: &A,
    a: &A::Element,
    b: &A::Element,
) -> PropertyCheck<A::Element> {
    let verdict = avg_inequality(alg, a, b);
    let hypotheses = verdict.squares_sum.is_defined()
        && (alg.leq(a, b) || alg.leq(b, a))
        && alg.seq_independent(a, b);
    let outcome = if !hypotheses {
        PropertyOutcome::HypothesesNotMet
    } else {
        match (&verdict.doubled, &verdict.squares_sum) {
            (Undefined, _) => PropertyOutcome::Refuted("a*b is not orthogonal to itself".into()),
            (Defined(d), Defined(s)) if !alg.leq(d, s) => {
                PropertyOutcome::Refuted("2(a*b) is not below a^2+b^2".into())
            }
            _ => PropertyOutcome::Confirmed,
        }
    };
    PropertyCheck { outcome, verdict }
}

/// Under `a ⊥ b` with `a` or `b` sharp: `a∘b = 0` and the inequality holds.
pub fn check_prop2<A: SequentialEffectAlgebra>(
    alg: &A,
    a: &A::Element,
    b: &A::Element,
) -> PropertyCheck<A::Element> {
    let verdict = avg_inequality(alg, a, b);
    let hypotheses = alg.orthogonal(a, b) && (alg.is_sharp(a) || alg.is_sharp(b));
    let outcome = if !hypotheses {
        PropertyOutcome::HypothesesNotMet
    } else if verdict.product != alg.zero() {
        PropertyOutcome::Refuted("a*b is not 0".into())
    } else if verdict.status != Status::Holds {
        PropertyOutcome::Refuted("inequality does not hold".into())
    } else {
        PropertyOutcome::Confirmed
    };
    PropertyCheck { outcome, verdict }
}

/// Failing verdicts over all ordered pairs of `sample`, in row-major order.
pub fn scan_window<A: SequentialEffectAlgebra>(
    alg: &A,
    sample: &[A::Element],
) -> Vec<InequalityVerdict<A::Element>> {
    sample
        .par_iter()
        .flat_map_iter(|a| {
            sample
                .iter()
                .map(move |b| avg_inequality(alg, a, b))
                .filter(|v| v.status == Status::Fails)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub claim: String,
    pub ok: bool,
}

impl fmt::Display for ProofStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.claim)?;
        if !self.ok {
            f.write_str(" [MISMATCH]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReplay {
    pub steps: Vec<ProofStep>,
}

impl CounterexampleReplay {
    pub fn verified(&self) -> bool {
        self.steps.iter().all(|s| s.ok)
    }
}

/// Replays the counterexample pair `c_{1,0,0}`, `c_{0,1,0}` step by step:
/// orthogonality, sum, product, self-orthogonality of the product, its
/// double, both squares, and the failing comparison.
pub fn replay_counterexample<I, A>(alg: &A) -> CounterexampleReplay
where
    I: Index,
    A: SequentialEffectAlgebra<Element = E0Element<I>>,
{
    let (zero, one) = (I::zero(), I::one());
    let x = E0Element::C(one.clone(), zero.clone(), zero.clone());
    let y = E0Element::C(zero.clone(), one.clone(), zero.clone());
    let sum_expect = E0Element::C(one.clone(), one.clone(), zero.clone());
    let a1 = E0Element::A(one.clone());
    let a2 = E0Element::A(I::of(2));
    let show = |p: &PartialResult<E0Element<I>>| p.render_with(|e| e.to_string());

    let mut steps = Vec::with_capacity(7);
    let orth = alg.orthogonal(&x, &y);
    steps.push(ProofStep {
        claim: format!("{x} ⊥ {y} : {orth}"),
        ok: orth,
    });
    let sum = alg.oplus(&x, &y);
    steps.push(ProofStep {
        claim: format!("{x} ⊕ {y} = {}", show(&sum)),
        ok: sum == Defined(sum_expect),
    });
    let product = alg.sprod(&x, &y);
    steps.push(ProofStep {
        claim: format!("{x} ∘ {y} : product={product}"),
        ok: product == a1,
    });
    let self_orth = alg.orthogonal(&product, &product);
    steps.push(ProofStep {
        claim: format!("{product} ⊥ {product} : {self_orth}"),
        ok: self_orth,
    });
    let doubled = alg.double(&product);
    steps.push(ProofStep {
        claim: format!("2({x} ∘ {y}) = {product} ⊕ {product} = {}", show(&doubled)),
        ok: doubled == Defined(a2),
    });
    let (sx, sy) = (alg.square(&x), alg.square(&y));
    let squares_sum = alg.oplus(&sx, &sy);
    steps.push(ProofStep {
        claim: format!("{x}² = {sx}, {y}² = {sy}, sum={}", show(&squares_sum)),
        ok: sx == E0Element::Zero && sy == E0Element::Zero,
    });
    let below = match (&doubled, &squares_sum) {
        (Defined(d), Defined(s)) => Some(alg.leq(d, s)),
        _ => None,
    };
    let claim = match below {
        Some(false) => format!(
            "{} ≤ {} : false → inequality FAILS",
            show(&doubled),
            show(&squares_sum)
        ),
        Some(true) => format!(
            "{} ≤ {} : true → inequality holds",
            show(&doubled),
            show(&squares_sum)
        ),
        None => format!("{} ≤ {} : undefined", show(&doubled), show(&squares_sum)),
    };
    steps.push(ProofStep {
        claim,
        ok: below == Some(false) && squares_sum == Defined(E0Element::Zero),
    });
    CounterexampleReplay { steps }
}

/// The replay against the unmodified symbolic model.
pub fn verify_theorem1() -> bool {
    replay_counterexample(&crate::E0Window::new(crate::Window::DEFAULT)).verified()
}
