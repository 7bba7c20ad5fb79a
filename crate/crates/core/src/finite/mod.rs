//! Table-backed finite (sequential) effect algebras.
//!
//! Elements are indices `0..order`; index `0` is the zero and index
//! `order − 1` is the unit. The `⊕` table is partial and symmetric, the `∘`
//! table (when present) is total.
//!
//! The text format is described in [`format`].

pub mod format;

use std::fmt;

use thiserror::Error;

use crate::algebra::{EffectAlgebra, SequentialEffectAlgebra};
use crate::partial::{Defined, PartialResult, Undefined};

pub use format::{load_model, save_model, LoadError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("order must be at least 2, got {0}")]
    Order(usize),
    #[error("table has {got} cells, expected {expected}")]
    Shape { expected: usize, got: usize },
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("{0}")]
    Names(String),
    #[error("oplus is not symmetric at ({x}, {y})")]
    Asymmetric { x: String, y: String },
    #[error("0 ⊕ {x} must be {x}, found {found}")]
    ZeroIdentity { x: String, found: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteModel {
    names: Vec<String>,
    oplus: Vec<Option<usize>>,
    sprod: Option<Vec<usize>>,
}

pub(crate) fn default_name(index: usize, order: usize) -> String {
    if index == 0 {
        "0".to_string()
    } else if index + 1 == order {
        "1".to_string()
    } else {
        format!("e{index}")
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "0"
        && name != "1"
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '+' | '*' | '=' | '#' | ':'))
}

impl FiniteModel {
    /// Builds a model from row-major tables, validating every invariant.
    ///
    /// `names`, when given, labels the elements `1..order−1`; otherwise
    /// they are called `e1, e2, ...`.
    pub fn from_tables(
        order: usize,
        names: Option<Vec<String>>,
        oplus: Vec<Option<usize>>,
        sprod: Option<Vec<usize>>,
    ) -> Result<Self, ModelError> {
        if order < 2 {
            return Err(ModelError::Order(order));
        }
        let names = match names {
            None => (0..order).map(|i| default_name(i, order)).collect(),
            Some(mid) => {
                if mid.len() != order - 2 {
                    return Err(ModelError::Names(format!(
                        "expected {} element names, got {}",
                        order - 2,
                        mid.len()
                    )));
                }
                for (i, n) in mid.iter().enumerate() {
                    if !valid_name(n) {
                        return Err(ModelError::Names(format!("invalid element name {n:?}")));
                    }
                    if mid[..i].contains(n) {
                        return Err(ModelError::Names(format!("duplicate element name {n:?}")));
                    }
                }
                let mut all = vec!["0".to_string()];
                all.extend(mid);
                all.push("1".to_string());
                all
            }
        };
        let cells = order * order;
        if oplus.len() != cells {
            return Err(ModelError::Shape {
                expected: cells,
                got: oplus.len(),
            });
        }
        if let Some(v) = oplus.iter().flatten().find(|v| **v >= order) {
            return Err(ModelError::OutOfRange(*v));
        }
        if let Some(t) = &sprod {
            if t.len() != cells {
                return Err(ModelError::Shape {
                    expected: cells,
                    got: t.len(),
                });
            }
            if let Some(v) = t.iter().find(|v| **v >= order) {
                return Err(ModelError::OutOfRange(*v));
            }
        }
        let model = FiniteModel {
            names,
            oplus,
            sprod,
        };
        for x in 0..order {
            for y in x + 1..order {
                if model.oplus_at(x, y) != model.oplus_at(y, x) {
                    return Err(ModelError::Asymmetric {
                        x: model.names[x].clone(),
                        y: model.names[y].clone(),
                    });
                }
            }
            if model.oplus_at(0, x) != Defined(x) {
                return Err(ModelError::ZeroIdentity {
                    x: model.names[x].clone(),
                    found: model
                        .oplus_at(0, x)
                        .render_with(|v| model.names[*v].clone()),
                });
            }
        }
        Ok(model)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn one_index(&self) -> usize {
        self.order() - 1
    }

    pub fn oplus_at(&self, x: usize, y: usize) -> PartialResult<usize> {
        self.oplus[x * self.order() + y].into()
    }

    pub fn sprod_at(&self, x: usize, y: usize) -> Option<usize> {
        self.sprod.as_ref().map(|t| t[x * self.order() + y])
    }

    pub fn oplus_table(&self) -> &[Option<usize>] {
        &self.oplus
    }

    pub fn sprod_table(&self) -> Option<&[usize]> {
        self.sprod.as_deref()
    }

    pub fn has_sprod(&self) -> bool {
        self.sprod.is_some()
    }

    pub fn sprod_is_symmetric(&self) -> bool {
        let n = self.order();
        match &self.sprod {
            None => true,
            Some(t) => (0..n).all(|x| (0..n).all(|y| t[x * n + y] == t[y * n + x])),
        }
    }

    /// The same effect algebra with the given `∘` table.
    pub fn with_sprod(&self, sprod: Vec<usize>) -> Result<Self, ModelError> {
        let mid = self.names[1..self.order() - 1].to_vec();
        Self::from_tables(self.order(), Some(mid), self.oplus.clone(), Some(sprod))
    }

    /// The isomorphic copy in which element `x` is relabelled `perm[x]`.
    /// Names stay attached to positions.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.order();
        let mut oplus = vec![None; n * n];
        let mut sprod = self.sprod.as_ref().map(|_| vec![0; n * n]);
        for x in 0..n {
            for y in 0..n {
                oplus[perm[x] * n + perm[y]] = self.oplus[x * n + y].map(|v| perm[v]);
                if let (Some(out), Some(t)) = (sprod.as_mut(), self.sprod.as_ref()) {
                    out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
                }
            }
        }
        FiniteModel {
            names: self.names.clone(),
            oplus,
            sprod,
        }
    }

    pub fn as_carrier(&self) -> FiniteEffect<'_> {
        FiniteEffect(self)
    }

    /// `None` for a plain effect algebra.
    pub fn as_sequential(&self) -> Option<FiniteSequential<'_>> {
        self.sprod.as_ref().map(|t| FiniteSequential {
            model: self,
            sprod: t,
        })
    }
}

impl fmt::Debug for FiniteModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&save_model(self))
    }
}

/// A finite model viewed as an effect algebra; the sample is the whole carrier.
#[derive(Clone, Copy)]
pub struct FiniteEffect<'a>(pub &'a FiniteModel);

/// A finite model with a `∘` table viewed as a sequential effect algebra.
#[derive(Clone, Copy)]
pub struct FiniteSequential<'a> {
    model: &'a FiniteModel,
    sprod: &'a [usize],
}

impl FiniteSequential<'_> {
    pub fn model(&self) -> &FiniteModel {
        self.model
    }
}

fn finite_oplus(m: &FiniteModel, a: usize, b: usize) -> PartialResult<usize> {
    if a < m.order() && b < m.order() {
        m.oplus_at(a, b)
    } else {
        Undefined
    }
}

impl EffectAlgebra for FiniteEffect<'_> {
    type Element = usize;

    fn zero(&self) -> usize {
        0
    }

    fn one(&self) -> usize {
        self.0.one_index()
    }

    fn oplus(&self, a: &usize, b: &usize) -> PartialResult<usize> {
        finite_oplus(self.0, *a, *b)
    }

    fn sample(&self) -> Vec<usize> {
        (0..self.0.order()).collect()
    }

    fn render(&self, a: &usize) -> String {
        self.0.names[*a].clone()
    }
}

impl EffectAlgebra for FiniteSequential<'_> {
    type Element = usize;

    fn zero(&self) -> usize {
        0
    }

    fn one(&self) -> usize {
        self.model.one_index()
    }

    fn oplus(&self, a: &usize, b: &usize) -> PartialResult<usize> {
        finite_oplus(self.model, *a, *b)
    }

    fn sample(&self) -> Vec<usize> {
        (0..self.model.order()).collect()
    }

    fn render(&self, a: &usize) -> String {
        self.model.names[*a].clone()
    }
}

impl SequentialEffectAlgebra for FiniteSequential<'_> {
    fn sprod(&self, a: &usize, b: &usize) -> usize {
        self.sprod[a * self.model.order() + b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean4() -> FiniteModel {
        load_model(include_str!("../../../../fixtures/boolean4.sea")).unwrap()
    }

    #[test]
    fn order_matches_table_scan() {
        let m = boolean4();
        let c = m.as_carrier();
        let (p, q) = (m.index_of("p").unwrap(), m.index_of("q").unwrap());
        assert_eq!(c.orthosupplement(&p).unwrap(), q);
        for x in 0..4 {
            for y in 0..4 {
                let scan = (0..4).any(|w| m.oplus_at(x, w) == Defined(y));
                assert_eq!(c.leq(&x, &y), scan);
            }
        }
        assert!(c.leq(&p, &3) && !c.leq(&p, &q));
    }

    #[test]
    fn rejects_bad_tables() {
        let mut oplus = vec![Some(0), Some(1), Some(1), None];
        assert!(FiniteModel::from_tables(2, None, oplus.clone(), None).is_ok());
        oplus[1] = None;
        assert!(matches!(
            FiniteModel::from_tables(2, None, oplus, None),
            Err(ModelError::Asymmetric { .. })
        ));
        assert!(matches!(
            FiniteModel::from_tables(1, None, vec![Some(0)], None),
            Err(ModelError::Order(1))
        ));
        assert!(matches!(
            FiniteModel::from_tables(
                2,
                None,
                vec![Some(0), Some(1), Some(1), None],
                Some(vec![0, 0, 0])
            ),
            Err(ModelError::Shape { .. })
        ));
    }

    #[test]
    fn permuted_copy_is_a_model() {
        let m = boolean4();
        let p = m.permuted(&[0, 2, 1, 3]);
        let rebuilt = FiniteModel::from_tables(
            4,
            Some(vec!["p".into(), "q".into()]),
            p.oplus_table().to_vec(),
            p.sprod_table().map(|t| t.to_vec()),
        )
        .unwrap();
        assert_eq!(rebuilt, p);
        assert_eq!(m.permuted(&[0, 1, 2, 3]), m);
    }
}
