use std::collections::BTreeMap;

use super::element::E0Element;
use super::ops::{oplus_traced, sprod_traced, OplusBranch, SprodBranch};
use crate::index::Index;

/// Finite slice of the symbolic carrier: `aₙ, bₙ` with `n ≤ n_max`, and
/// `c_{i,k,m}, d_{i,k,m}` with `i, k ≤ ik_max` and `|m| ≤ m_abs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub n_max: u32,
    pub ik_max: u32,
    pub m_abs: u32,
}

impl Window {
    /// Smallest window whose pairs reach every line of both operation tables.
    pub const DEFAULT: Window = Window {
        n_max: 2,
        ik_max: 1,
        m_abs: 1,
    };

    pub fn new(n_max: u32, ik_max: u32, m_abs: u32) -> Result<Self, String> {
        if n_max < 1 {
            return Err("window bound for a/b subscripts must be at least 1".into());
        }
        if ik_max < 1 {
            return Err("window bound for i, k must be at least 1".into());
        }
        Ok(Window {
            n_max,
            ik_max,
            m_abs,
        })
    }

    /// `2 + 2·n_max + 2·((ik_max+1)² − 1)·(2·m_abs + 1)`.
    pub fn size(&self) -> u64 {
        let ik = self.ik_max as u64 + 1;
        2 + 2 * self.n_max as u64 + 2 * (ik * ik - 1) * (2 * self.m_abs as u64 + 1)
    }

    /// Largest subscript magnitude (see [`E0Element::magnitude`]) in the window.
    pub fn max_magnitude(&self) -> u32 {
        self.n_max.max(2 * self.ik_max + self.m_abs)
    }

    /// The window grown by twice its largest magnitude in every bound.
    ///
    /// Witnesses for order relations and complements between two window
    /// elements have subscripts bounded by the sum of the operands'
    /// magnitudes, so they all lie in the enlarged window.
    pub fn enlarged(&self) -> Window {
        let grow = 2 * self.max_magnitude();
        Window {
            n_max: self.n_max + grow,
            ik_max: self.ik_max + grow,
            m_abs: self.m_abs + grow,
        }
    }

    pub fn contains<I: Index>(&self, x: &E0Element<I>) -> bool {
        let le = |v: &I, bound: u32| v.abs() <= I::of(bound as i64);
        match x {
            E0Element::Zero | E0Element::One => true,
            E0Element::A(n) | E0Element::B(n) => le(n, self.n_max),
            E0Element::C(i, k, m) | E0Element::D(i, k, m) => {
                le(i, self.ik_max) && le(k, self.ik_max) && le(m, self.m_abs)
            }
        }
    }

    /// `0, 1, a₁.., b₁.., c` in lexicographic `(i,k,m)` order, then `d` likewise.
    pub fn enumerate<I: Index>(&self) -> Vec<E0Element<I>> {
        let mut out = Vec::with_capacity(self.size() as usize);
        out.push(E0Element::Zero);
        out.push(E0Element::One);
        for n in 1..=self.n_max as i64 {
            out.push(E0Element::A(I::of(n)));
        }
        for n in 1..=self.n_max as i64 {
            out.push(E0Element::B(I::of(n)));
        }
        let ik = self.ik_max as i64;
        let m_abs = self.m_abs as i64;
        for d in [false, true] {
            for i in 0..=ik {
                for k in 0..=ik {
                    if i == 0 && k == 0 {
                        continue;
                    }
                    for m in -m_abs..=m_abs {
                        let (i, k, m) = (I::of(i), I::of(k), I::of(m));
                        out.push(if d {
                            E0Element::D(i, k, m)
                        } else {
                            E0Element::C(i, k, m)
                        });
                    }
                }
            }
        }
        out
    }
}

/// Hit counts of each table line over all ordered pairs of a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchCoverage {
    pub oplus: BTreeMap<OplusBranch, u64>,
    pub sprod: BTreeMap<SprodBranch, u64>,
}

impl BranchCoverage {
    pub fn over_window(window: &Window) -> Self {
        let elems = window.enumerate::<i64>();
        let mut oplus: BTreeMap<_, u64> = OplusBranch::ALL.iter().map(|b| (*b, 0)).collect();
        let mut sprod: BTreeMap<_, u64> = SprodBranch::ALL.iter().map(|b| (*b, 0)).collect();
        for x in &elems {
            for y in &elems {
                *oplus.get_mut(&oplus_traced(x, y).0).unwrap() += 1;
                *sprod.get_mut(&sprod_traced(x, y).0).unwrap() += 1;
            }
        }
        BranchCoverage { oplus, sprod }
    }

    /// Names of the table lines never reached.
    pub fn uncovered(&self) -> Vec<String> {
        let o = self
            .oplus
            .iter()
            .filter(|(_, n)| **n == 0)
            .map(|(b, _)| format!("oplus::{b:?}"));
        let s = self
            .sprod
            .iter()
            .filter(|(_, n)| **n == 0)
            .map(|(b, _)| format!("sprod::{b:?}"));
        o.chain(s).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.uncovered().is_empty()
    }
}
