//! Closed-form identities of the symbolic model, checked on every parameter
//! tuple of a window.
//!
//! Each [`Identity`] pairs a few composite expressions (evaluated through
//! the operation tables) with a closed-form value computed directly from the
//! subscripts. The suite covers the associativity cases of `⊕` including
//! their definedness conditions, the complement pairs, the additivity cases
//! of `∘` and its associativity cases, plus the trivial `0`/`1` laws.

use std::time::Instant;

use rayon::prelude::*;

use super::{AxiomId, CheckSummary, ViolationReport};
use crate::e0::{self, Kind, Window};
use crate::partial::{Defined, PartialResult, Undefined};
use crate::E0;

/// A composite expression over the parameters of an identity.
#[derive(Clone, Debug)]
pub enum Term {
    Var(usize),
    /// The parameter with its letter swapped (`a ↔ b`, `c ↔ d`), same subscripts.
    Partner(usize),
    Const(E0),
    Oplus(Box<Term>, Box<Term>),
    Sprod(Box<Term>, Box<Term>),
}

impl Term {
    pub fn eval(&self, vars: &[E0]) -> PartialResult<E0> {
        match self {
            Term::Var(i) => Defined(vars[*i].clone()),
            Term::Partner(i) => Defined(e0::complement(&vars[*i])),
            Term::Const(e) => Defined(e.clone()),
            Term::Oplus(x, y) => match (x.eval(vars), y.eval(vars)) {
                (Defined(x), Defined(y)) => e0::oplus(&x, &y),
                _ => Undefined,
            },
            Term::Sprod(x, y) => match (x.eval(vars), y.eval(vars)) {
                (Defined(x), Defined(y)) => Defined(e0::sprod(&x, &y)),
                _ => Undefined,
            },
        }
    }
}

type ClosedForm = Box<dyn Fn(&[E0]) -> PartialResult<E0> + Send + Sync>;
type Guard = Box<dyn Fn(&[E0]) -> bool + Send + Sync>;

/// One identity: every side must evaluate to the closed form on every
/// parameter tuple that passes the guard.
pub struct Identity {
    pub axiom: &'static str,
    pub name: &'static str,
    /// Parameter kinds; `None` ranges over the whole window.
    pub params: Vec<Option<Kind>>,
    pub sides: Vec<Term>,
    guard: Option<Guard>,
    closed: ClosedForm,
}

impl Identity {
    fn new(
        axiom: &'static str,
        name: &'static str,
        params: &[Kind],
        sides: Vec<Term>,
        closed: impl Fn(&[E0]) -> PartialResult<E0> + Send + Sync + 'static,
    ) -> Self {
        Identity {
            axiom,
            name,
            params: params.iter().copied().map(Some).collect(),
            sides,
            guard: None,
            closed: Box::new(closed),
        }
    }

    fn when(mut self, guard: impl Fn(&[E0]) -> bool + Send + Sync + 'static) -> Self {
        self.guard = Some(Box::new(guard));
        self
    }

    fn any(mut self) -> Self {
        self.params = vec![None; self.params.len()];
        self
    }

    pub fn applies(&self, vars: &[E0]) -> bool {
        self.guard.as_ref().is_none_or(|g| g(vars))
    }

    pub fn closed_form(&self, vars: &[E0]) -> PartialResult<E0> {
        (self.closed)(vars)
    }

    /// The first side that disagrees with the closed form, if any.
    pub fn first_mismatch(&self, vars: &[E0]) -> Option<(usize, PartialResult<E0>)> {
        let expected = self.closed_form(vars);
        self.sides
            .iter()
            .enumerate()
            .map(|(i, t)| (i, t.eval(vars)))
            .find(|(_, v)| *v != expected)
    }
}

fn v(i: usize) -> Term {
    Term::Var(i)
}

fn p(x: Term, y: Term) -> Term {
    Term::Oplus(Box::new(x), Box::new(y))
}

fn s(x: Term, y: Term) -> Term {
    Term::Sprod(Box::new(x), Box::new(y))
}

fn sub(e: &E0) -> i64 {
    match e {
        E0::A(n) | E0::B(n) => *n,
        _ => unreachable!("parameter kinds are fixed by the identity"),
    }
}

fn ikm(e: &E0) -> (i64, i64, i64) {
    match e {
        E0::C(i, k, m) | E0::D(i, k, m) => (*i, *k, *m),
        _ => unreachable!("parameter kinds are fixed by the identity"),
    }
}

fn a_or_zero(w: i64) -> PartialResult<E0> {
    Defined(if w == 0 { E0::Zero } else { E0::A(w) })
}

/// `b_w` for `w > 0`, `1` for `w = 0`.
fn b_or_one(w: i64) -> PartialResult<E0> {
    match w {
        0 => Defined(E0::One),
        w if w > 0 => Defined(E0::B(w)),
        _ => Undefined,
    }
}

fn def(e: E0) -> PartialResult<E0> {
    Defined(e)
}

const ZERO: PartialResult<E0> = Defined(E0::Zero);

fn assoc_sides() -> Vec<Term> {
    vec![p(v(0), p(v(1), v(2))), p(p(v(0), v(1)), v(2))]
}

fn additivity_sides() -> Vec<Term> {
    vec![s(v(0), p(v(1), v(2))), p(s(v(0), v(1)), s(v(0), v(2)))]
}

/// `x∘(y∘z) = z∘(x∘y) = y∘(x∘z)`
fn sprod_sides3() -> Vec<Term> {
    vec![
        s(v(0), s(v(1), v(2))),
        s(v(2), s(v(0), v(1))),
        s(v(1), s(v(0), v(2))),
    ]
}

/// `x∘(y∘z) = z∘(x∘y)`
fn sprod_sides2() -> Vec<Term> {
    vec![s(v(0), s(v(1), v(2))), s(v(2), s(v(0), v(1)))]
}

/// The full identity suite.
pub fn e0_identities() -> Vec<Identity> {
    use Kind::{A, B, C, D};
    let mut out = vec![
        // Trivial laws for 0 and 1.
        Identity::new("EA2", "0+x=x", &[A], vec![p(Term::Const(E0::Zero), v(0))], |x| {
            def(x[0].clone())
        })
        .any(),
        Identity::new("SEA1", "0*x=0", &[A], vec![s(Term::Const(E0::Zero), v(0))], |_| ZERO)
            .any(),
        Identity::new("SEA1", "1*x=x", &[A], vec![s(Term::Const(E0::One), v(0))], |x| {
            def(x[0].clone())
        })
        .any(),
        // ⊕ associativity.
        Identity::new("EA2", "a_n+(a_m+a_k)=a_{k+m+n}", &[A, A, A], assoc_sides(), |x| {
            def(E0::A(sub(&x[0]) + sub(&x[1]) + sub(&x[2])))
        }),
        Identity::new("EA2", "a_n+(a_m+c_{i,j,k})=c_{i,j,k+m+n}", &[A, A, C], assoc_sides(), |x| {
            let (i, j, k) = ikm(&x[2]);
            def(E0::C(i, j, k + sub(&x[1]) + sub(&x[0])))
        }),
        Identity::new("EA2", "a_n+(a_m+d_{i,j,k})=d_{i,j,k-m-n}", &[A, A, D], assoc_sides(), |x| {
            let (i, j, k) = ikm(&x[2]);
            def(E0::D(i, j, k - sub(&x[1]) - sub(&x[0])))
        }),
        Identity::new(
            "EA2",
            "a_n+(c_{r,s,t}+c_{i,j,k})=c_{i+r,s+j,k+t+n}",
            &[A, C, C],
            assoc_sides(),
            |x| {
                let n = sub(&x[0]);
                let (r, s, t) = ikm(&x[1]);
                let (i, j, k) = ikm(&x[2]);
                def(E0::C(i + r, s + j, k + t + n))
            },
        ),
        Identity::new(
            "EA2",
            "c_{l,m,n}+(c_{r,s,t}+c_{i,j,k})=(c_{l,m,n}+c_{i,j,k})+c_{r,s,t}=c_{i+l+r,j+m+s,k+n+t}",
            &[C, C, C],
            vec![p(v(0), p(v(1), v(2))), p(p(v(0), v(2)), v(1))],
            |x| {
                let (l, m, n) = ikm(&x[0]);
                let (r, s, t) = ikm(&x[1]);
                let (i, j, k) = ikm(&x[2]);
                def(E0::C(i + l + r, j + m + s, k + n + t))
            },
        ),
        Identity::new(
            "EA2",
            "a_n+(a_m+b_k) defined iff n+m<=k, then b_{k-m-n} or 1",
            &[A, A, B],
            assoc_sides(),
            |x| {
                let (n, m, k) = (sub(&x[0]), sub(&x[1]), sub(&x[2]));
                if n + m <= k {
                    b_or_one(k - m - n)
                } else {
                    Undefined
                }
            },
        ),
        Identity::new(
            "EA2",
            "a_n+(c_{r,s,t}+d_{i,j,k}) defined iff (r,s)<(i,j) or (r,s)=(i,j), n+t<=k",
            &[A, C, D],
            vec![
                p(v(0), p(v(1), v(2))),
                p(p(v(0), v(1)), v(2)),
                p(p(v(0), v(2)), v(1)),
            ],
            |x| {
                let n = sub(&x[0]);
                let (r, s, t) = ikm(&x[1]);
                let (i, j, k) = ikm(&x[2]);
                if r <= i && s <= j && (i - r, j - s) != (0, 0) {
                    def(E0::D(i - r, j - s, k - t - n))
                } else if r == i && s == j && n + t <= k {
                    b_or_one(k - t - n)
                } else {
                    Undefined
                }
            },
        ),
        Identity::new(
            "EA2",
            "c_{l,m,n}+(c_{r,s,t}+d_{i,j,k}) defined iff (l+r,m+s)<(i,j) or (l+r,m+s)=(i,j), n+t<=k",
            &[C, C, D],
            assoc_sides(),
            |x| {
                let (l, m, n) = ikm(&x[0]);
                let (r, s, t) = ikm(&x[1]);
                let (i, j, k) = ikm(&x[2]);
                if l + r <= i && m + s <= j && (i - l - r, j - m - s) != (0, 0) {
                    def(E0::D(i - l - r, j - m - s, k - t - n))
                } else if l + r == i && m + s == j && n + t <= k {
                    b_or_one(k - t - n)
                } else {
                    Undefined
                }
            },
        ),
        // Complements.
        Identity::new("EA3", "a_n+b_n=1", &[A], vec![p(v(0), Term::Partner(0))], |_| {
            def(E0::One)
        }),
        Identity::new("EA3", "c_{i,k,m}+d_{i,k,m}=1", &[C], vec![p(v(0), Term::Partner(0))], |_| {
            def(E0::One)
        }),
    ];

    // ∘ additivity: x∘(y⊕z) = x∘y ⊕ x∘z.
    let add = |name, params: &[Kind], closed: fn(&[E0]) -> PartialResult<E0>| {
        Identity::new("SEA1", name, params, additivity_sides(), closed)
    };
    out.extend([
        add("a_n*(a_m+a_k)=0", &[A, A, A], |_| ZERO),
        add("b_n*(a_m+a_k)=a_{m+k}", &[B, A, A], |x| {
            def(E0::A(sub(&x[1]) + sub(&x[2])))
        }),
        add("c_{r,s,t}*(a_m+a_k)=0", &[C, A, A], |_| ZERO),
        add("d_{r,s,t}*(a_m+a_k)=a_{m+k}", &[D, A, A], |x| {
            def(E0::A(sub(&x[1]) + sub(&x[2])))
        }),
        add("a_n*(a_m+c_{r,s,t})=0", &[A, A, C], |_| ZERO),
        add("b_n*(a_m+c_{r,s,t})=c_{r,s,m+t}", &[B, A, C], |x| {
            let (r, s, t) = ikm(&x[2]);
            def(E0::C(r, s, sub(&x[1]) + t))
        }),
        add(
            "c_{x,y,z}*(a_m+c_{r,s,t})=a_{xs+yr} or 0",
            &[C, A, C],
            |v| {
                let (x, y, _) = ikm(&v[0]);
                let (r, s, _) = ikm(&v[2]);
                a_or_zero(x * s + y * r)
            },
        ),
        add(
            "d_{x,y,z}*(a_m+c_{r,s,t})=c_{r,s,m+t-xs-yr}",
            &[D, A, C],
            |v| {
                let (x, y, _) = ikm(&v[0]);
                let m = sub(&v[1]);
                let (r, s, t) = ikm(&v[2]);
                def(E0::C(r, s, m + t - x * s - y * r))
            },
        ),
        add("a_n*(a_m+d_{r,s,t})=a_n", &[A, A, D], |x| def(x[0].clone())),
        add("b_n*(a_m+d_{r,s,t})=d_{r,s,n+t-m}", &[B, A, D], |x| {
            let (r, s, t) = ikm(&x[2]);
            def(E0::D(r, s, sub(&x[0]) + t - sub(&x[1])))
        }),
        add(
            "c_{x,y,z}*(a_m+d_{r,s,t})=c_{x,y,z-xs-yr}",
            &[C, A, D],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                let (r, s, _) = ikm(&v[2]);
                def(E0::C(x, y, z - x * s - y * r))
            },
        ),
        add(
            "d_{x,y,z}*(a_m+d_{r,s,t})=d_{x+r,y+s,z+t-m-xs-yr}",
            &[D, A, D],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                let m = sub(&v[1]);
                let (r, s, t) = ikm(&v[2]);
                def(E0::D(x + r, y + s, z + t - m - x * s - y * r))
            },
        ),
        add("a_n*(c_{x,y,z}+c_{r,s,t})=0", &[A, C, C], |_| ZERO),
        add(
            "b_n*(c_{x,y,z}+c_{r,s,t})=c_{x+r,y+s,z+t}",
            &[B, C, C],
            |v| {
                let (x, y, z) = ikm(&v[1]);
                let (r, s, t) = ikm(&v[2]);
                def(E0::C(x + r, y + s, z + t))
            },
        ),
        add(
            "c_{i,k,m}*(c_{x,y,z}+c_{r,s,t})=a_{i(y+s)+k(x+r)} or 0",
            &[C, C, C],
            |v| {
                let (i, k, _) = ikm(&v[0]);
                let (x, y, _) = ikm(&v[1]);
                let (r, s, _) = ikm(&v[2]);
                a_or_zero(i * (y + s) + k * (x + r))
            },
        ),
        add(
            "d_{i,k,m}*(c_{x,y,z}+c_{r,s,t})=c_{x+r,y+s,z+t-i(y+s)-k(x+r)}",
            &[D, C, C],
            |v| {
                let (i, k, _) = ikm(&v[0]);
                let (x, y, z) = ikm(&v[1]);
                let (r, s, t) = ikm(&v[2]);
                def(E0::C(x + r, y + s, z + t - i * (y + s) - k * (x + r)))
            },
        ),
    ]);

    let m_le_k = |x: &[E0]| sub(&x[1]) <= sub(&x[2]);
    out.extend([
        add("a_n*(a_m+b_k)=a_n for m<=k", &[A, A, B], |x| {
            def(x[0].clone())
        })
        .when(m_le_k),
        add("b_n*(a_m+b_k)=b_{n+k-m} for m<=k", &[B, A, B], |x| {
            def(E0::B(sub(&x[0]) + sub(&x[2]) - sub(&x[1])))
        })
        .when(m_le_k),
        add("c_{x,y,z}*(a_m+b_k)=c_{x,y,z} for m<=k", &[C, A, B], |x| {
            def(x[0].clone())
        })
        .when(m_le_k),
        add(
            "d_{x,y,z}*(a_m+b_k)=d_{x,y,z+k-m} for m<=k",
            &[D, A, B],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                def(E0::D(x, y, z + sub(&v[2]) - sub(&v[1])))
            },
        )
        .when(m_le_k),
    ]);

    // c_{i,k,m} ⊕ d_{r,s,t} with (i,k) strictly below (r,s).
    let strictly_below = |x: &[E0]| {
        let (i, k, _) = ikm(&x[1]);
        let (r, s, _) = ikm(&x[2]);
        i <= r && k <= s && (r - i, s - k) != (0, 0)
    };
    out.extend([
        add(
            "a_n*(c_{i,k,m}+d_{r,s,t})=a_n for (i,k)<(r,s)",
            &[A, C, D],
            |x| def(x[0].clone()),
        )
        .when(strictly_below),
        add(
            "b_n*(c_{i,k,m}+d_{r,s,t})=d_{r-i,s-k,n+t-m} for (i,k)<(r,s)",
            &[B, C, D],
            |x| {
                let n = sub(&x[0]);
                let (i, k, m) = ikm(&x[1]);
                let (r, s, t) = ikm(&x[2]);
                def(E0::D(r - i, s - k, n + t - m))
            },
        )
        .when(strictly_below),
        add(
            "c_{x,y,z}*(c_{i,k,m}+d_{r,s,t})=c_{x,y,z-x(s-k)-y(r-i)} for (i,k)<(r,s)",
            &[C, C, D],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                let (i, k, _) = ikm(&v[1]);
                let (r, s, _) = ikm(&v[2]);
                def(E0::C(x, y, z - x * (s - k) - y * (r - i)))
            },
        )
        .when(strictly_below),
        add(
            "d_{x,y,z}*(c_{i,k,m}+d_{r,s,t})=d_{x+r-i,y+s-k,z+t-m-x(s-k)-y(r-i)} for (i,k)<(r,s)",
            &[D, C, D],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                let (i, k, m) = ikm(&v[1]);
                let (r, s, t) = ikm(&v[2]);
                def(E0::D(
                    x + r - i,
                    y + s - k,
                    z + t - m - x * (s - k) - y * (r - i),
                ))
            },
        )
        .when(strictly_below),
    ]);

    let same_ik = |x: &[E0]| {
        let (i, k, m) = ikm(&x[1]);
        let (r, s, t) = ikm(&x[2]);
        i == r && k == s && m <= t
    };
    out.extend([
        add("a_n*(c_{i,k,m}+d_{i,k,t})=a_n for m<=t", &[A, C, D], |x| {
            def(x[0].clone())
        })
        .when(same_ik),
        add(
            "b_n*(c_{i,k,m}+d_{i,k,t})=b_{n+t-m} for m<=t",
            &[B, C, D],
            |x| {
                let (_, _, m) = ikm(&x[1]);
                let (_, _, t) = ikm(&x[2]);
                def(E0::B(sub(&x[0]) + t - m))
            },
        )
        .when(same_ik),
        add(
            "c_{x,y,z}*(c_{i,k,m}+d_{i,k,t})=c_{x,y,z} for m<=t",
            &[C, C, D],
            |x| def(x[0].clone()),
        )
        .when(same_ik),
        add(
            "d_{x,y,z}*(c_{i,k,m}+d_{i,k,t})=d_{x,y,z+t-m} for m<=t",
            &[D, C, D],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                let (_, _, m) = ikm(&v[1]);
                let (_, _, t) = ikm(&v[2]);
                def(E0::D(x, y, z + t - m))
            },
        )
        .when(same_ik),
    ]);

    // ∘ associativity.
    let assoc3 = |name, params: &[Kind], closed: fn(&[E0]) -> PartialResult<E0>| {
        Identity::new("SEA4", name, params, sprod_sides3(), closed)
    };
    let assoc2 = |name, params: &[Kind], closed: fn(&[E0]) -> PartialResult<E0>| {
        Identity::new("SEA4", name, params, sprod_sides2(), closed)
    };
    out.extend([
        Identity::new(
            "SEA4",
            "a_n*(a_m*a_k)=(a_n*a_m)*a_k=0",
            &[A, A, A],
            vec![s(v(0), s(v(1), v(2))), s(s(v(0), v(1)), v(2))],
            |_| ZERO,
        ),
        assoc3("a_n*(a_m*b_k)=0", &[A, A, B], |_| ZERO),
        assoc3("a_n*(a_m*c_{r,s,t})=0", &[A, A, C], |_| ZERO),
        assoc3("a_n*(a_m*d_{r,s,t})=0", &[A, A, D], |_| ZERO),
        assoc3("a_n*(b_m*b_k)=a_n", &[A, B, B], |x| def(x[0].clone())),
        assoc3("a_n*(b_m*c_{r,s,t})=0", &[A, B, C], |_| ZERO),
        assoc3("a_n*(b_m*d_{r,s,t})=a_n", &[A, B, D], |x| def(x[0].clone())),
        assoc3("a_n*(c_{i,k,m}*c_{r,s,t})=0", &[A, C, C], |_| ZERO),
        assoc3("a_n*(c_{i,k,m}*d_{r,s,t})=0", &[A, C, D], |_| ZERO),
        assoc3("a_n*(d_{i,k,m}*d_{r,s,t})=a_n", &[A, D, D], |x| {
            def(x[0].clone())
        }),
        assoc2("b_n*(b_m*b_k)=b_{m+n+k}", &[B, B, B], |x| {
            def(E0::B(sub(&x[0]) + sub(&x[1]) + sub(&x[2])))
        }),
        assoc3("b_n*(b_m*c_{r,s,t})=c_{r,s,t}", &[B, B, C], |x| {
            def(x[2].clone())
        }),
        assoc3("b_n*(b_m*d_{r,s,t})=d_{r,s,n+m+t}", &[B, B, D], |x| {
            let (r, s, t) = ikm(&x[2]);
            def(E0::D(r, s, sub(&x[0]) + sub(&x[1]) + t))
        }),
        assoc3(
            "b_n*(c_{i,k,m}*c_{r,s,t})=a_{is+kr} or 0",
            &[B, C, C],
            |x| {
                let (i, k, _) = ikm(&x[1]);
                let (r, s, _) = ikm(&x[2]);
                a_or_zero(i * s + k * r)
            },
        ),
        assoc3(
            "b_n*(c_{i,k,m}*d_{r,s,t})=c_{i,k,m-is-kr}",
            &[B, C, D],
            |x| {
                let (i, k, m) = ikm(&x[1]);
                let (r, s, _) = ikm(&x[2]);
                def(E0::C(i, k, m - i * s - k * r))
            },
        ),
        assoc3(
            "b_n*(d_{i,k,m}*d_{r,s,t})=d_{i+r,k+s,n+m+t-is-kr}",
            &[B, D, D],
            |x| {
                let n = sub(&x[0]);
                let (i, k, m) = ikm(&x[1]);
                let (r, s, t) = ikm(&x[2]);
                def(E0::D(i + r, k + s, n + m + t - i * s - k * r))
            },
        ),
        assoc2("c_{x,y,z}*(c_{i,k,m}*c_{r,s,t})=0", &[C, C, C], |_| ZERO),
        assoc3(
            "c_{x,y,z}*(c_{i,k,m}*d_{r,s,t})=a_{xk+yi} or 0",
            &[C, C, D],
            |v| {
                let (x, y, _) = ikm(&v[0]);
                let (i, k, _) = ikm(&v[1]);
                a_or_zero(x * k + y * i)
            },
        ),
        assoc3(
            "c_{x,y,z}*(d_{i,k,m}*d_{r,s,t})=c_{x,y,z-x(k+s)-y(i+r)}",
            &[C, D, D],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                let (i, k, _) = ikm(&v[1]);
                let (r, s, _) = ikm(&v[2]);
                def(E0::C(x, y, z - x * (k + s) - y * (i + r)))
            },
        ),
        assoc2(
            "d_{x,y,z}*(d_{i,k,m}*d_{r,s,t})=d_{x+i+r,y+k+s,z+m+t-(is+kr+xk+xs+yi+yr)}",
            &[D, D, D],
            |v| {
                let (x, y, z) = ikm(&v[0]);
                let (i, k, m) = ikm(&v[1]);
                let (r, s, t) = ikm(&v[2]);
                def(E0::D(
                    x + i + r,
                    y + k + s,
                    z + m + t - (i * s + k * r + x * k + x * s + y * i + y * r),
                ))
            },
        ),
    ]);
    out
}

/// Instantiates every identity on all parameter tuples drawn from the
/// window. Violations are reported under [`AxiomId::Identity`] with the
/// identity as the clause; `checked` counts tuples that passed the guard.
pub fn verify_prop3_identities(window: &Window) -> CheckSummary<E0> {
    let start = Instant::now();
    let elems: Vec<E0> = window.enumerate();
    let pools: Vec<(Option<Kind>, Vec<E0>)> = [
        None,
        Some(Kind::A),
        Some(Kind::B),
        Some(Kind::C),
        Some(Kind::D),
    ]
    .into_iter()
    .map(|k| {
        let pool = elems
            .iter()
            .filter(|e| k.is_none_or(|k| e.kind() == k))
            .cloned()
            .collect();
        (k, pool)
    })
    .collect();
    let pool = |k: Option<Kind>| &pools.iter().find(|(kk, _)| *kk == k).unwrap().1;

    let mut summary = CheckSummary::new();
    for id in e0_identities() {
        let lists: Vec<&Vec<E0>> = id.params.iter().map(|k| pool(*k)).collect();
        let (first, rest) = lists.split_first().unwrap();
        let results: Vec<(u64, Vec<ViolationReport<E0>>)> = first
            .par_iter()
            .map(|x0| {
                let mut count = 0;
                let mut reports = Vec::new();
                let mut tuple = vec![x0.clone()];
                visit(rest, &mut tuple, &mut |vars| {
                    if !id.applies(vars) {
                        return;
                    }
                    count += 1;
                    if let Some((side, got)) = id.first_mismatch(vars) {
                        reports.push(ViolationReport {
                            axiom: AxiomId::Identity,
                            clause: format!("{} {}", id.axiom, id.name),
                            witnesses: vars.to_vec(),
                            rendered: vars.iter().map(|e| e.to_string()).collect(),
                            expected: id.closed_form(vars).render_with(|e| e.to_string()),
                            actual: format!("side{}:{}", side, got.render_with(|e| e.to_string())),
                        });
                    }
                });
                (count, reports)
            })
            .collect();
        for (count, reports) in results {
            summary.absorb(AxiomId::Identity, count, reports);
        }
    }
    summary.finish();
    summary.elapsed = start.elapsed();
    summary
}

fn visit(rest: &[&Vec<E0>], tuple: &mut Vec<E0>, f: &mut impl FnMut(&[E0])) {
    match rest.split_first() {
        None => f(tuple),
        Some((list, tail)) => {
            for x in list.iter() {
                tuple.push(x.clone());
                visit(tail, tuple, f);
                tuple.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> E0 {
        s.parse().unwrap()
    }

    #[test]
    fn nested_d_product_identity() {
        let ids = e0_identities();
        let id = ids
            .iter()
            .find(|i| i.name.starts_with("d_{x,y,z}*(d_{i,k,m}*d_{r,s,t})"))
            .unwrap();
        let vars = [el("d[1,2,3]"), el("d[2,0,-1]"), el("d[0,1,4]")];
        // is+kr+xk+xs+yi+yr = 2+0+0+1+4+0, and d[2,0,-1]*d[0,1,4] = d[2,1,1],
        // d[1,2,3]*d[2,1,1] = d[3,3,3+1-(1+4)].
        assert_eq!(id.closed_form(&vars), Defined(el("d[3,3,-1]")));
        assert_eq!(id.first_mismatch(&vars), None);
    }

    #[test]
    fn definedness_conditions_are_checked() {
        let ids = e0_identities();
        let id = ids
            .iter()
            .find(|i| i.name.starts_with("a_n+(a_m+b_k)"))
            .unwrap();
        let vars = [el("a2"), el("a2"), el("b3")];
        assert_eq!(id.closed_form(&vars), Undefined);
        assert_eq!(id.first_mismatch(&vars), None);
        let vars = [el("a1"), el("a2"), el("b3")];
        assert_eq!(id.closed_form(&vars), Defined(E0::One));
    }

    #[test]
    fn wrong_closed_form_is_reported() {
        let bad = Identity::new("SEA4", "bogus", &[Kind::A], vec![s(v(0), v(0))], |x| {
            def(x[0].clone())
        });
        assert_eq!(bad.first_mismatch(&[el("a1")]), Some((0, ZERO)));
    }

    #[test]
    fn suite_holds_on_default_window() {
        let summary = verify_prop3_identities(&Window::DEFAULT);
        assert!(summary.passed(), "{:#?}", summary.lines());
        assert!(summary.total_checked() > 0);
    }
}
