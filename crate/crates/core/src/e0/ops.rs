//! Closed-form `⊕`, `∘`, complement and order on the symbolic model.
//!
//! Both operations are symmetric. Each table case is written once for the
//! argument order `kind(x) ≤ kind(y)`, and [`oplus`] / [`sprod`] swap their
//! arguments into that order first.

use super::element::E0Element::{self, One, Zero, A, B, C, D};
use crate::index::Index;
use crate::partial::{Defined, PartialResult, Undefined};

/// Which line of the `⊕` table produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OplusBranch {
    /// `0 ⊕ x = x`
    ZeroIdentity,
    /// `aₙ ⊕ aₘ = a_{n+m}`
    AA,
    /// `aₙ ⊕ c_{i,k,m} = c_{i,k,n+m}`
    AC,
    /// `aₙ ⊕ d_{i,k,m} = d_{i,k,m−n}`
    AD,
    /// `c_{i,k,m} ⊕ c_{r,s,t} = c_{i+r,k+s,m+t}`
    CC,
    /// `aₙ ⊕ bₘ = b_{m−n}` for `n < m`
    ABLess,
    /// `aₙ ⊕ bₙ = 1`
    ABEqual,
    /// `c_{i,k,m} ⊕ d_{r,s,t} = d_{r−i,s−k,t−m}` for `(i,k) < (r,s)`
    CDToD,
    /// `c_{i,k,m} ⊕ d_{i,k,t} = b_{t−m}` for `m < t`
    CDToB,
    /// `c_{i,k,m} ⊕ d_{i,k,m} = 1`
    CDToOne,
    /// every other pair
    Undefined,
}

impl OplusBranch {
    pub const ALL: [OplusBranch; 11] = [
        Self::ZeroIdentity,
        Self::AA,
        Self::AC,
        Self::AD,
        Self::CC,
        Self::ABLess,
        Self::ABEqual,
        Self::CDToD,
        Self::CDToB,
        Self::CDToOne,
        Self::Undefined,
    ];
}

/// Which line of the `∘` table produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SprodBranch {
    /// `0 ∘ x = 0`
    Zero,
    /// `1 ∘ x = x`
    One,
    /// `aₙ ∘ aₘ = 0`
    AA,
    /// `aₙ ∘ bₘ = aₙ`
    AB,
    /// `bₙ ∘ bₘ = b_{n+m}`
    BB,
    /// `aₙ ∘ c_{i,k,m} = 0`
    AC,
    /// `c_{i,k,m} ∘ bₙ = c_{i,k,m}`
    BC,
    /// `aₙ ∘ d_{i,k,m} = aₙ`
    AD,
    /// `bₙ ∘ d_{i,k,m} = d_{i,k,m+n}`
    BD,
    /// `d_{i,k,m} ∘ d_{r,s,t} = d_{i+r,k+s,m+t−is−kr}`
    DD,
    /// `c_{i,k,m} ∘ d_{r,s,t} = c_{i,k,m−is−kr}`
    CD,
    /// `c_{i,k,m} ∘ c_{r,s,t} = a_{is+kr}` for `is+kr ≠ 0`
    CCToA,
    /// `c_{i,k,m} ∘ c_{r,s,t} = 0` for `is+kr = 0`
    CCToZero,
}

impl SprodBranch {
    pub const ALL: [SprodBranch; 13] = [
        Self::Zero,
        Self::One,
        Self::AA,
        Self::AB,
        Self::BB,
        Self::AC,
        Self::BC,
        Self::AD,
        Self::BD,
        Self::DD,
        Self::CD,
        Self::CCToA,
        Self::CCToZero,
    ];
}

fn ordered<'a, I: Index>(
    x: &'a E0Element<I>,
    y: &'a E0Element<I>,
) -> (&'a E0Element<I>, &'a E0Element<I>) {
    if x.kind() <= y.kind() {
        (x, y)
    } else {
        (y, x)
    }
}

/// `x ⊕ y` together with the table line that decided it.
pub fn oplus_traced<I: Index>(
    x: &E0Element<I>,
    y: &E0Element<I>,
) -> (OplusBranch, PartialResult<E0Element<I>>) {
    use OplusBranch as Br;
    let (x, y) = ordered(x, y);
    match (x, y) {
        (Zero, y) => (Br::ZeroIdentity, Defined(y.clone())),
        (A(n), A(m)) => (Br::AA, Defined(A(n.clone() + m.clone()))),
        (A(n), B(m)) if n < m => (Br::ABLess, Defined(B(m.clone() - n.clone()))),
        (A(n), B(m)) if n == m => (Br::ABEqual, Defined(One)),
        (A(n), C(i, k, m)) => (
            Br::AC,
            Defined(C(i.clone(), k.clone(), n.clone() + m.clone())),
        ),
        (A(n), D(i, k, m)) => (
            Br::AD,
            Defined(D(i.clone(), k.clone(), m.clone() - n.clone())),
        ),
        (C(i, k, m), C(r, s, t)) => (
            Br::CC,
            Defined(C(
                i.clone() + r.clone(),
                k.clone() + s.clone(),
                m.clone() + t.clone(),
            )),
        ),
        (C(i, k, m), D(r, s, t)) if i == r && k == s => {
            if m < t {
                (Br::CDToB, Defined(B(t.clone() - m.clone())))
            } else if m == t {
                (Br::CDToOne, Defined(One))
            } else {
                (Br::Undefined, Undefined)
            }
        }
        // (r−i)² + (s−k)² ≠ 0 holds here since (i,k) ≠ (r,s).
        (C(i, k, m), D(r, s, t)) if i <= r && k <= s => (
            Br::CDToD,
            Defined(D(
                r.clone() - i.clone(),
                s.clone() - k.clone(),
                t.clone() - m.clone(),
            )),
        ),
        _ => (Br::Undefined, Undefined),
    }
}

/// `x ∘ y` together with the table line that decided it.
pub fn sprod_traced<I: Index>(x: &E0Element<I>, y: &E0Element<I>) -> (SprodBranch, E0Element<I>) {
    use SprodBranch as Br;
    let (x, y) = ordered(x, y);
    match (x, y) {
        (Zero, _) => (Br::Zero, Zero),
        (One, y) => (Br::One, y.clone()),
        (A(_), A(_)) => (Br::AA, Zero),
        (A(n), B(_)) => (Br::AB, A(n.clone())),
        (A(_), C(..)) => (Br::AC, Zero),
        (A(n), D(..)) => (Br::AD, A(n.clone())),
        (B(n), B(m)) => (Br::BB, B(n.clone() + m.clone())),
        (B(_), c @ C(..)) => (Br::BC, c.clone()),
        (B(n), D(i, k, m)) => (Br::BD, D(i.clone(), k.clone(), m.clone() + n.clone())),
        (C(i, k, _), C(r, s, _)) => {
            let w = i.clone() * s.clone() + k.clone() * r.clone();
            if w.is_zero() {
                (Br::CCToZero, Zero)
            } else {
                (Br::CCToA, A(w))
            }
        }
        (C(i, k, m), D(r, s, _)) => {
            let w = i.clone() * s.clone() + k.clone() * r.clone();
            (Br::CD, C(i.clone(), k.clone(), m.clone() - w))
        }
        (D(i, k, m), D(r, s, t)) => {
            let w = i.clone() * s.clone() + k.clone() * r.clone();
            (
                Br::DD,
                D(
                    i.clone() + r.clone(),
                    k.clone() + s.clone(),
                    m.clone() + t.clone() - w,
                ),
            )
        }
        _ => unreachable!("arguments are ordered by kind"),
    }
}

pub fn oplus<I: Index>(x: &E0Element<I>, y: &E0Element<I>) -> PartialResult<E0Element<I>> {
    oplus_traced(x, y).1
}

pub fn sprod<I: Index>(x: &E0Element<I>, y: &E0Element<I>) -> E0Element<I> {
    sprod_traced(x, y).1
}

/// Closed-form orthosupplement: `0 ↔ 1`, `aₙ ↔ bₙ`, `c ↔ d` on equal subscripts.
pub fn complement<I: Index>(x: &E0Element<I>) -> E0Element<I> {
    match x {
        Zero => One,
        One => Zero,
        A(n) => B(n.clone()),
        B(n) => A(n.clone()),
        C(i, k, m) => D(i.clone(), k.clone(), m.clone()),
        D(i, k, m) => C(i.clone(), k.clone(), m.clone()),
    }
}

/// Decides `x ≤ y` by inverting each `⊕` case.
///
/// Witnesses, where they exist:
///
/// * `aₙ ≤ aₘ` via `a_{m−n}`; `aₙ ≤ bₘ` via `b_{n+m}`; `aₙ ≤ c_{i,k,m}` via
///   `c_{i,k,m−n}`; `aₙ ≤ d_{i,k,m}` via `d_{i,k,m+n}`;
/// * `bₙ ≤ bₘ` (`m ≤ n`) via `a_{n−m}`;
/// * `c_{i,k,m} ≤ bₜ` via `d_{i,k,m+t}`; `c ≤ c` via an `a` or a `c`
///   with the subscript differences; `c_{i,k,m} ≤ d_{r,s,t}` via
///   `d_{r+i,s+k,t+m}`;
/// * `d_{i,k,m} ≤ bₜ` via `c_{i,k,m−t}`; `d ≤ d` via an `a` or a `c`.
pub fn leq<I: Index>(x: &E0Element<I>, y: &E0Element<I>) -> bool {
    match (x, y) {
        _ if x == y => true,
        (Zero, _) | (_, One) => true,
        (One, _) | (_, Zero) => false,
        (A(n), A(m)) => n <= m,
        (A(_), B(_) | C(..) | D(..)) => true,
        (B(n), B(m)) => m <= n,
        (B(_), _) => false,
        (C(..), B(_) | D(..)) => true,
        (C(i, k, m), C(r, s, t)) => i <= r && k <= s && ((i, k) != (r, s) || m <= t),
        (D(..), B(_)) => true,
        (D(i, k, m), D(r, s, t)) => r <= i && s <= k && ((i, k) != (r, s) || t <= m),
        (C(..) | D(..), _) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::E0;

    fn el(s: &str) -> E0 {
        s.parse().unwrap()
    }

    #[test]
    fn oplus_table_examples() {
        assert_eq!(oplus(&el("a1"), &el("a2")), Defined(el("a3")));
        assert_eq!(
            oplus(&el("c[1,0,0]"), &el("c[0,1,0]")),
            Defined(el("c[1,1,0]"))
        );
        assert_eq!(
            oplus(&el("c[1,2,5]"), &el("d[1,3,2]")),
            Defined(el("d[0,1,-3]"))
        );
        assert_eq!(oplus(&el("b1"), &el("b2")), Undefined);
        assert_eq!(oplus(&el("a3"), &el("b2")), Undefined);
        assert_eq!(oplus(&el("a2"), &el("b5")), Defined(el("b3")));
        assert_eq!(oplus(&el("b5"), &el("a2")), Defined(el("b3")));
        assert_eq!(oplus(&el("a4"), &el("b4")), Defined(One));
        assert_eq!(oplus(&el("c[2,1,3]"), &el("d[2,1,7]")), Defined(el("b4")));
        assert_eq!(oplus(&el("d[2,1,7]"), &el("c[2,1,7]")), Defined(One));
        assert_eq!(oplus(&el("c[2,1,8]"), &el("d[2,1,7]")), Undefined);
        assert_eq!(oplus(&el("c[2,1,8]"), &el("d[1,3,7]")), Undefined);
        assert_eq!(oplus(&el("1"), &el("a1")), Undefined);
        assert_eq!(oplus(&el("1"), &el("0")), Defined(One));
        assert_eq!(oplus(&el("a2"), &el("d[1,0,0]")), Defined(el("d[1,0,-2]")));
        assert_eq!(oplus(&el("a2"), &el("c[1,0,0]")), Defined(el("c[1,0,2]")));
    }

    #[test]
    fn sprod_table_examples() {
        assert_eq!(sprod(&el("c[1,0,0]"), &el("c[0,1,0]")), el("a1"));
        assert_eq!(sprod(&el("c[2,0,7]"), &el("c[3,0,-1]")), Zero);
        assert_eq!(sprod(&el("d[1,2,3]"), &el("d[2,1,-1]")), el("d[3,3,-3]"));
        assert_eq!(sprod(&el("1"), &el("d[5,5,0]")), el("d[5,5,0]"));
        assert_eq!(sprod(&el("d[5,5,0]"), &el("1")), el("d[5,5,0]"));
        assert_eq!(sprod(&el("b2"), &el("b2")), el("b4"));
        assert_eq!(sprod(&el("b2"), &el("a7")), el("a7"));
        assert_eq!(sprod(&el("c[1,2,3]"), &el("d[4,5,6]")), el("c[1,2,-10]"));
        assert_eq!(sprod(&el("d[4,5,6]"), &el("c[1,2,3]")), el("c[1,2,-10]"));
        assert_eq!(sprod(&el("b3"), &el("d[1,1,1]")), el("d[1,1,4]"));
        assert_eq!(sprod(&el("b3"), &el("c[1,1,1]")), el("c[1,1,1]"));
        assert_eq!(sprod(&el("a3"), &el("d[1,1,1]")), el("a3"));
        assert_eq!(sprod(&el("a3"), &el("c[1,1,1]")), Zero);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&el("a7")), el("b7"));
        assert_eq!(complement(&el("0")), One);
        assert_eq!(complement(&el("d[3,4,-2]")), el("c[3,4,-2]"));
        assert_eq!(complement(&el("c[2,1,-5]")), el("d[2,1,-5]"));
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&el("a1"), &el("b5")));
        assert!(!leq(&el("b1"), &el("a1")));
        assert!(leq(&el("c[1,1,0]"), &el("c[1,1,0]")));
        assert!(!leq(&el("a2"), &el("0")));
        assert!(!leq(&el("c[1,0,0]"), &el("c[0,1,0]")));
        assert!(!leq(&el("c[0,1,0]"), &el("c[1,0,0]")));
        assert!(leq(&el("d[2,1,0]"), &el("b9")));
        for n in 1..6 {
            for m in 1..6 {
                assert!(leq(&E0::A(n), &E0::B(m)));
            }
        }
    }

    #[test]
    fn branch_tags() {
        assert_eq!(oplus_traced(&el("b3"), &el("a3")).0, OplusBranch::ABEqual);
        assert_eq!(
            oplus_traced(&el("d[1,1,0]"), &el("c[1,0,0]")).0,
            OplusBranch::CDToD
        );
        assert_eq!(
            sprod_traced(&el("c[1,0,0]"), &el("c[2,0,0]")).0,
            SprodBranch::CCToZero
        );
        assert_eq!(sprod_traced(&el("b1"), &el("0")).0, SprodBranch::Zero);
    }
}
