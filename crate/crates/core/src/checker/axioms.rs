use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::{AxiomId, CheckSummary, ViolationReport};
use crate::algebra::{oplus_partial, EffectAlgebra, SequentialEffectAlgebra};
use crate::partial::{Defined, PartialResult};

struct Local<E> {
    counts: BTreeMap<AxiomId, u64>,
    reports: Vec<ViolationReport<E>>,
}

impl<E: Clone> Local<E> {
    fn new() -> Self {
        Local {
            counts: BTreeMap::new(),
            reports: Vec::new(),
        }
    }

    fn count(&mut self, axiom: AxiomId) {
        *self.counts.entry(axiom).or_insert(0) += 1;
    }

    fn report<A: EffectAlgebra<Element = E> + ?Sized>(
        &mut self,
        alg: &A,
        axiom: AxiomId,
        clause: &str,
        witnesses: &[&E],
        expected: String,
        actual: String,
    ) {
        self.reports.push(ViolationReport {
            axiom,
            clause: clause.to_string(),
            witnesses: witnesses.iter().map(|w| (*w).clone()).collect(),
            rendered: witnesses.iter().map(|w| alg.render(w)).collect(),
            expected,
            actual,
        });
    }
}

fn collect<E>(summary: &mut CheckSummary<E>, locals: Vec<Local<E>>) {
    for local in locals {
        for (axiom, n) in local.counts {
            summary.absorb(axiom, n, Vec::new());
        }
        summary.violations.extend(local.reports);
    }
}

fn show<A: EffectAlgebra + ?Sized>(alg: &A, x: &PartialResult<A::Element>) -> String {
    x.render_with(|e| alg.render(e))
}

/// Checks EA1–EA4 over the sample.
///
/// EA1 runs over all ordered pairs, EA2 over all ordered triples in both
/// directions (`a⊕(b⊕c)` defined implies `(a⊕b)⊕c` defined and equal, and
/// the converse that follows with EA1), EA3 asks for exactly one complement
/// of each sampled element within the witness space, EA4 runs over the
/// sample.
pub fn check_effect_axioms<A: EffectAlgebra>(alg: &A) -> CheckSummary<A::Element> {
    let start = Instant::now();
    let sample = alg.sample();
    let zero = alg.zero();
    let one = alg.one();
    let mut summary = CheckSummary::new();

    if zero == one {
        let mut l = Local::new();
        l.report(
            alg,
            AxiomId::EA4,
            "0 and 1 distinct",
            &[&zero],
            "0 != 1".into(),
            "0 = 1".into(),
        );
        collect(&mut summary, vec![l]);
    }

    let locals: Vec<Local<A::Element>> = sample
        .par_iter()
        .map(|a| {
            let mut l = Local::new();
            for b in &sample {
                let ab = alg.oplus(a, b);
                let ba = alg.oplus(b, a);
                l.count(AxiomId::EA1);
                if ab != ba {
                    l.report(
                        alg,
                        AxiomId::EA1,
                        "commutativity",
                        &[a, b],
                        show(alg, &ab),
                        show(alg, &ba),
                    );
                }
                for c in &sample {
                    l.count(AxiomId::EA2);
                    let left = oplus_partial(alg, &Defined(a.clone()), &alg.oplus(b, c));
                    let right = oplus_partial(alg, &ab, &Defined(c.clone()));
                    if left == right {
                        continue;
                    }
                    let (clause, expected, actual) = if left.is_defined() {
                        ("a+(b+c) defined implies (a+b)+c equal", &left, &right)
                    } else {
                        ("(a+b)+c defined implies a+(b+c) equal", &right, &left)
                    };
                    l.report(
                        alg,
                        AxiomId::EA2,
                        clause,
                        &[a, b, c],
                        show(alg, expected),
                        show(alg, actual),
                    );
                }
            }
            l.count(AxiomId::EA4);
            if alg.oplus(a, &one).is_defined() && *a != zero {
                l.report(
                    alg,
                    AxiomId::EA4,
                    "a+1 defined implies a=0",
                    &[a],
                    alg.render(&zero),
                    alg.render(a),
                );
            }
            l
        })
        .collect();
    collect(&mut summary, locals);

    let space = alg.witness_space();
    let locals: Vec<Local<A::Element>> = sample
        .par_iter()
        .map(|a| {
            let mut l = Local::new();
            l.count(AxiomId::EA3);
            let complements: Vec<&A::Element> = space
                .iter()
                .filter(|b| alg.oplus(a, b) == Defined(one.clone()))
                .collect();
            if complements.len() != 1 {
                let clause = if complements.is_empty() {
                    "complement exists"
                } else {
                    "complement unique"
                };
                let found: Vec<String> = complements.iter().map(|c| alg.render(c)).collect();
                l.report(
                    alg,
                    AxiomId::EA3,
                    clause,
                    &[a],
                    "exactly one b with a+b=1".into(),
                    format!("[{}]", found.join(",")),
                );
            }
            l
        })
        .collect();
    collect(&mut summary, locals);
    if space.len() != sample.len() {
        summary.notes.push(format!(
            "EA3 uniqueness checked within a witness space of {} elements",
            space.len()
        ));
    }
    summary.finish();
    summary.elapsed = start.elapsed();
    summary
}

/// Checks SEA1–SEA5 over the sample.
///
/// SEA1 runs over all triples `(a; b, c)` with `b ⊥ c`, SEA2 over all
/// elements, SEA3 over pairs with `a∘b = 0`, SEA4 over commuting pairs
/// (with `c` in the associativity law ranging over the sample) and SEA5 over
/// triples satisfying its commutation hypotheses.
pub fn check_sequential_axioms<A: SequentialEffectAlgebra>(alg: &A) -> CheckSummary<A::Element> {
    let start = Instant::now();
    let sample = alg.sample();
    let n = sample.len();
    let zero = alg.zero();
    let one = alg.one();
    let mut summary = CheckSummary::new();

    let prod: Vec<A::Element> = (0..n * n)
        .into_par_iter()
        .map(|ij| alg.sprod(&sample[ij / n], &sample[ij % n]))
        .collect();
    let commute = |i: usize, j: usize| prod[i * n + j] == prod[j * n + i];
    let complements: Vec<_> = sample.par_iter().map(|b| alg.orthosupplement(b)).collect();

    let locals: Vec<Local<A::Element>> = (0..n)
        .into_par_iter()
        .map(|ia| {
            let a = &sample[ia];
            let mut l = Local::new();
            l.count(AxiomId::SEA2);
            let oa = alg.sprod(&one, a);
            if oa != *a {
                l.report(
                    alg,
                    AxiomId::SEA2,
                    "1*a=a",
                    &[a],
                    alg.render(a),
                    alg.render(&oa),
                );
            }
            for ib in 0..n {
                let b = &sample[ib];
                let ab = &prod[ia * n + ib];
                let ba = &prod[ib * n + ia];
                if *ab == zero {
                    l.count(AxiomId::SEA3);
                    if ab != ba {
                        l.report(
                            alg,
                            AxiomId::SEA3,
                            "a*b=0 implies b*a=a*b",
                            &[a, b],
                            alg.render(ab),
                            alg.render(ba),
                        );
                    }
                }
                let commuting = ab == ba;
                if commuting {
                    l.count(AxiomId::SEA4);
                    match &complements[ib] {
                        Ok(bc) => {
                            let x = alg.sprod(a, bc);
                            let y = alg.sprod(bc, a);
                            if x != y {
                                l.report(
                                    alg,
                                    AxiomId::SEA4,
                                    "a|b implies a*b'=b'*a",
                                    &[a, b],
                                    alg.render(&x),
                                    alg.render(&y),
                                );
                            }
                        }
                        Err(e) => l.report(
                            alg,
                            AxiomId::SEA4,
                            "a|b implies a*b'=b'*a",
                            &[a, b],
                            "a complement b'".into(),
                            e.to_string(),
                        ),
                    }
                }
                for ic in 0..n {
                    let c = &sample[ic];
                    if commuting {
                        l.count(AxiomId::SEA4);
                        let left = alg.sprod(a, &prod[ib * n + ic]);
                        let right = alg.sprod(ab, c);
                        if left != right {
                            l.report(
                                alg,
                                AxiomId::SEA4,
                                "a|b implies a*(b*c)=(a*b)*c",
                                &[a, b, c],
                                alg.render(&left),
                                alg.render(&right),
                            );
                        }
                    }
                    if let Defined(bc) = alg.oplus(b, c) {
                        l.count(AxiomId::SEA1);
                        let ac = &prod[ia * n + ic];
                        let sum = alg.oplus(ab, ac);
                        let left = alg.sprod(a, &bc);
                        match sum {
                            Defined(s) if s == left => {}
                            Defined(s) => l.report(
                                alg,
                                AxiomId::SEA1,
                                "a*(b+c)=a*b+a*c",
                                &[a, b, c],
                                alg.render(&left),
                                alg.render(&s),
                            ),
                            _ => l.report(
                                alg,
                                AxiomId::SEA1,
                                "b⊥c implies a*b⊥a*c",
                                &[a, b, c],
                                alg.render(&left),
                                "undef".into(),
                            ),
                        }
                    }
                    if commute(ic, ia) && commute(ic, ib) {
                        l.count(AxiomId::SEA5);
                        let x = alg.sprod(c, ab);
                        let y = alg.sprod(ab, c);
                        if x != y {
                            l.report(
                                alg,
                                AxiomId::SEA5,
                                "c|a, c|b implies c|(a*b)",
                                &[a, b, c],
                                alg.render(&x),
                                alg.render(&y),
                            );
                        }
                        if let Defined(s) = alg.oplus(a, b) {
                            let x = alg.sprod(c, &s);
                            let y = alg.sprod(&s, c);
                            if x != y {
                                l.report(
                                    alg,
                                    AxiomId::SEA5,
                                    "c|a, c|b implies c|(a+b)",
                                    &[a, b, c],
                                    alg.render(&x),
                                    alg.render(&y),
                                );
                            }
                        }
                    }
                }
            }
            l
        })
        .collect();
    collect(&mut summary, locals);
    summary
        .notes
        .push("SEA4 associativity quantifies c over the sample".to_string());
    summary.finish();
    summary.elapsed = start.elapsed();
    summary
}
