//! Backtracking enumeration of effect algebras on `{0, …, n−1}`.
//!
//! The zero row (`0 ⊕ x = x`) and the unit row (`1 ⊕ x` undefined for
//! `x ≠ 0`) are forced. The remaining cells, `x ⊕ y` with
//! `1 ≤ x ≤ y ≤ n−2`, are filled in row-major order trying "undefined" first
//! and then the values `1, …, n−1` in ascending order. After each
//! assignment the partial table is rejected if it breaks cancellation, has a
//! complete row without exactly one complement, or contradicts associativity
//! on a triple whose cells are all known. With isomorphism rejection on, a
//! partial table is also rejected once some relabelling of the non-trivial
//! elements gives a lexicographically smaller determined prefix, so only the
//! minimal table of each isomorphism class is emitted.

use super::iso::{image_is_smaller, inverse, middle_permutations};
use crate::finite::FiniteModel;

/// Cell state: `None` unknown, `Some(None)` undefined, `Some(Some(v))` value.
type Cell = Option<Option<usize>>;

struct EaSearch {
    n: usize,
    cells: Vec<(usize, usize)>,
    table: Vec<Cell>,
    perms: Vec<(Vec<usize>, Vec<usize>)>,
}

impl EaSearch {
    fn new(n: usize, mod_iso: bool) -> Self {
        let one = n - 1;
        let mut table = vec![None; n * n];
        for x in 0..n {
            table[x] = Some(Some(x));
            table[x * n] = Some(Some(x));
            if x != 0 {
                table[one * n + x] = Some(None);
                table[x * n + one] = Some(None);
            }
        }
        let mut cells = Vec::new();
        for x in 1..one {
            for y in x..one {
                cells.push((x, y));
            }
        }
        let perms = if mod_iso {
            middle_permutations(n)
                .into_iter()
                .skip(1)
                .map(|p| {
                    let inv = inverse(&p);
                    (p, inv)
                })
                .collect()
        } else {
            Vec::new()
        };
        EaSearch {
            n,
            cells,
            table,
            perms,
        }
    }

    fn get(&self, x: usize, y: usize) -> Cell {
        self.table[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: Cell) {
        self.table[x * self.n + y] = v;
        self.table[y * self.n + x] = v;
    }

    fn row_ok(&self, x: usize) -> bool {
        let one = self.n - 1;
        let mut seen = vec![false; self.n];
        let mut complete = true;
        for y in 0..self.n {
            match self.get(x, y) {
                None => complete = false,
                Some(None) => {}
                Some(Some(v)) => {
                    if seen[v] {
                        return false;
                    }
                    seen[v] = true;
                }
            }
        }
        !complete || seen[one]
    }

    fn associative(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.get(a, b) else { continue };
                for c in 0..n {
                    let left = match self.get(b, c) {
                        None => continue,
                        Some(None) => Some(None),
                        Some(Some(bc)) => self.get(a, bc),
                    };
                    let right = match ab {
                        None => Some(None),
                        Some(ab) => self.get(ab, c),
                    };
                    if let (Some(l), Some(r)) = (left, right) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn minimal(&self) -> bool {
        let encode = |x: usize, y: usize| self.get(x, y).map(|c| c.map_or(0, |v| v + 1));
        let relabel = |e: usize, p: &[usize]| if e == 0 { 0 } else { p[e - 1] + 1 };
        !self
            .perms
            .iter()
            .any(|(p, inv)| image_is_smaller(&self.cells, encode, p, inv, relabel))
    }

    fn consistent(&self, x: usize, y: usize) -> bool {
        self.row_ok(x) && self.row_ok(y) && self.associative() && self.minimal()
    }

    fn run(&mut self, k: usize, emit: &mut impl FnMut(FiniteModel)) {
        if k == self.cells.len() {
            let oplus = self
                .table
                .iter()
                .map(|c| c.expect("complete table"))
                .collect();
            let model = FiniteModel::from_tables(self.n, None, oplus, None)
                .expect("search only builds valid tables");
            emit(model);
            return;
        }
        let (x, y) = self.cells[k];
        let candidates = std::iter::once(None).chain((1..self.n).map(Some));
        for v in candidates {
            self.set(x, y, Some(v));
            if self.consistent(x, y) {
                self.run(k + 1, emit);
            }
        }
        self.set(x, y, None);
    }
}

/// Calls `emit` for every effect algebra of the given order, in search
/// order. With `mod_iso`, only the lexicographically minimal table of each
/// isomorphism class is emitted.
pub fn for_each_effect_algebra(order: usize, mod_iso: bool, mut emit: impl FnMut(FiniteModel)) {
    assert!(order >= 2, "order must be at least 2");
    let mut search = EaSearch::new(order, mod_iso);
    if order == 2 || search.consistent(0, 0) {
        search.run(0, &mut emit);
    }
}

pub fn enumerate_effect_algebras(order: usize, mod_iso: bool) -> Vec<FiniteModel> {
    let mut out = Vec::new();
    for_each_effect_algebra(order, mod_iso, |m| out.push(m));
    out
}
