//! Brute-force oracles for the symbolic model, built from `⊕` and `∘` alone.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use sealab_core::e0::{oplus, sprod};
use sealab_core::partial::{Defined, Undefined};
use sealab_core::{Window, E0};

/// Pairs `(x, y)` of window elements with `x ⊕ c = y` for some `c` in the
/// enlarged window.
pub fn witnessed_pairs(w: &Window) -> HashSet<(E0, E0)> {
    let inside: Vec<E0> = w.enumerate();
    let members: HashSet<E0> = inside.iter().cloned().collect();
    let witnesses: Vec<E0> = w.enlarged().enumerate();
    let mut pairs = HashSet::new();
    for x in &inside {
        for c in &witnesses {
            if let Defined(y) = oplus(x, c) {
                if members.contains(&y) {
                    pairs.insert((x.clone(), y));
                }
            }
        }
    }
    pairs
}

/// Failing pairs of the average value inequality, computed straight from
/// the tables. `x ≤ y` is decided by searching for a witness among all
/// elements whose subscripts are bounded by twice the operands' combined
/// magnitude.
pub fn inequality_failures(w: &Window) -> BTreeSet<(E0, E0)> {
    let elems: Vec<E0> = w.enumerate();
    let mut spaces: HashMap<u32, Vec<E0>> = HashMap::new();
    let mut below = |x: &E0, y: &E0| {
        let k = (2 * (x.magnitude() + y.magnitude()) + 1) as u32;
        let space = spaces
            .entry(k)
            .or_insert_with(|| Window::new(k, k, k).unwrap().enumerate());
        x == y || space.iter().any(|c| oplus(x, c) == Defined(y.clone()))
    };
    let mut out = BTreeSet::new();
    for a in &elems {
        for b in &elems {
            if oplus(a, b) == Undefined {
                continue;
            }
            let p = sprod(a, b);
            let Defined(d) = oplus(&p, &p) else { continue };
            let fails = match oplus(&sprod(a, a), &sprod(b, b)) {
                Defined(s) => !below(&d, &s),
                Undefined => d != E0::Zero,
            };
            if fails {
                out.insert((a.clone(), b.clone()));
            }
        }
    }
    out
}
