//! Backtracking enumeration of sequential products on a finite effect
//! algebra.
//!
//! Row and column `0` are forced to `0` and row and column `1` to the
//! identity; each of these follows from the axioms (`a∘0 = 0` from
//! additivity and cancellation, `0∘a = 0` from SEA3, `a∘1 = 1∘a` from SEA4
//! with `b = 0`). The remaining cells `x∘y` over the non-trivial elements are
//! filled in row-major order with values tried in ascending order. Every
//! axiom instance whose terms are all known is checked after each
//! assignment.

use super::iso::{image_is_smaller, inverse, middle_permutations};
use crate::finite::FiniteModel;
use crate::partial::Defined;

struct SeaSearch<'m> {
    model: &'m FiniteModel,
    n: usize,
    comp: Vec<usize>,
    cells: Vec<(usize, usize)>,
    table: Vec<Option<usize>>,
    autos: Vec<(Vec<usize>, Vec<usize>)>,
}

impl<'m> SeaSearch<'m> {
    fn new(model: &'m FiniteModel, mod_iso: bool) -> Self {
        let n = model.order();
        let one = n - 1;
        let mut table = vec![None; n * n];
        for x in 0..n {
            table[x] = Some(0);
            table[x * n] = Some(0);
        }
        for x in 1..n {
            table[one * n + x] = Some(x);
            table[x * n + one] = Some(x);
        }
        let comp = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| model.oplus_at(x, y) == Defined(one))
                    .expect("effect algebra elements have complements")
            })
            .collect();
        let mut cells = Vec::new();
        for x in 1..one {
            for y in 1..one {
                cells.push((x, y));
            }
        }
        let autos = if mod_iso {
            middle_permutations(n)
                .into_iter()
                .skip(1)
                .filter(|p| model.permuted(p).oplus_table() == model.oplus_table())
                .map(|p| {
                    let inv = inverse(&p);
                    (p, inv)
                })
                .collect()
        } else {
            Vec::new()
        };
        SeaSearch {
            model,
            n,
            comp,
            cells,
            table,
            autos,
        }
    }

    fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.table[x * self.n + y]
    }

    fn oplus(&self, x: usize, y: usize) -> Option<usize> {
        self.model.oplus_at(x, y).defined()
    }

    /// `false` if some axiom instance with all terms known fails.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                let ba = self.get(b, a);
                // SEA3
                if let (Some(0), Some(ba)) = (ab, ba) {
                    if ba != 0 {
                        return false;
                    }
                }
                let commuting = matches!((ab, ba), (Some(x), Some(y)) if x == y);
                // SEA4, complement part
                if commuting {
                    let bc = self.comp[b];
                    if let (Some(x), Some(y)) = (self.get(a, bc), self.get(bc, a)) {
                        if x != y {
                            return false;
                        }
                    }
                }
                for c in 0..n {
                    // SEA1
                    if let Some(s) = self.oplus(b, c) {
                        if let (Some(x), Some(y)) = (ab, self.get(a, c)) {
                            match self.oplus(x, y) {
                                None => return false,
                                Some(sum) => {
                                    if self.get(a, s).is_some_and(|v| v != sum) {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                    // SEA4, associativity
                    if commuting {
                        let left = self.get(b, c).and_then(|bc| self.get(a, bc));
                        let right = ab.and_then(|ab| self.get(ab, c));
                        if let (Some(l), Some(r)) = (left, right) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                    // SEA5
                    let commutes = |x: usize, y: usize| matches!((self.get(x, y), self.get(y, x)), (Some(p), Some(q)) if p == q);
                    if commutes(c, a) && commutes(c, b) {
                        if let Some(ab) = ab {
                            if let (Some(x), Some(y)) = (self.get(c, ab), self.get(ab, c)) {
                                if x != y {
                                    return false;
                                }
                            }
                        }
                        if let Some(s) = self.oplus(a, b) {
                            if let (Some(x), Some(y)) = (self.get(c, s), self.get(s, c)) {
                                if x != y {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn minimal(&self) -> bool {
        let value = |x: usize, y: usize| self.get(x, y);
        let relabel = |v: usize, p: &[usize]| p[v];
        !self
            .autos
            .iter()
            .any(|(p, inv)| image_is_smaller(&self.cells, value, p, inv, relabel))
    }

    fn run(&mut self, k: usize, emit: &mut impl FnMut(FiniteModel)) {
        if k == self.cells.len() {
            let sprod = self
                .table
                .iter()
                .map(|c| c.expect("complete table"))
                .collect();
            let model = self
                .model
                .with_sprod(sprod)
                .expect("search only builds valid tables");
            emit(model);
            return;
        }
        let (x, y) = self.cells[k];
        for v in 0..self.n {
            self.table[x * self.n + y] = Some(v);
            if self.consistent() && self.minimal() {
                self.run(k + 1, emit);
            }
        }
        self.table[x * self.n + y] = None;
    }
}

/// Calls `emit` for every sequential product on `model`, in search order.
/// With `mod_iso`, products related by an automorphism of the effect algebra
/// are emitted once (the lexicographically minimal table).
pub fn for_each_sequential_product(
    model: &FiniteModel,
    mod_iso: bool,
    mut emit: impl FnMut(FiniteModel),
) {
    let mut search = SeaSearch::new(model, mod_iso);
    if search.consistent() {
        search.run(0, &mut emit);
    }
}

pub fn extend_with_sequential_product(model: &FiniteModel, mod_iso: bool) -> Vec<FiniteModel> {
    let mut out = Vec::new();
    for_each_sequential_product(model, mod_iso, |m| out.push(m));
    out
}
