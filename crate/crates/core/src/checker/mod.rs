//! Bounded verification of the effect-algebra and sequential-product axioms.
//!
//! Every check quantifies over the carrier's sample; existential parts
//! (complements) search the carrier's witness space. For an infinite model
//! the results are therefore relative to the chosen window, and the summary
//! notes say so.

mod axioms;
pub mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

pub use axioms::{check_effect_axioms, check_sequential_axioms};
pub use identities::{e0_identities, verify_prop3_identities, Identity, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    EA1,
    EA2,
    EA3,
    EA4,
    SEA1,
    SEA2,
    SEA3,
    SEA4,
    SEA5,
    Identity,
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomId::EA1 => "EA1",
            AxiomId::EA2 => "EA2",
            AxiomId::EA3 => "EA3",
            AxiomId::EA4 => "EA4",
            AxiomId::SEA1 => "SEA1",
            AxiomId::SEA2 => "SEA2",
            AxiomId::SEA3 => "SEA3",
            AxiomId::SEA4 => "SEA4",
            AxiomId::SEA5 => "SEA5",
            AxiomId::Identity => "IDENTITY",
        };
        f.write_str(s)
    }
}

/// One failed axiom instance.
///
/// `witnesses` are listed in the order the axiom's variables appear in its
/// statement (`a, b, c`); `rendered` holds their textual form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationReport<E> {
    pub axiom: AxiomId,
    pub clause: String,
    pub witnesses: Vec<E>,
    pub rendered: Vec<String>,
    pub expected: String,
    pub actual: String,
}

impl<E> ViolationReport<E> {
    /// `AXIOM <id> VIOLATION witnesses=<w;...> expected=<e> actual=<a> clause=<c>`
    pub fn line(&self) -> String {
        format!(
            "AXIOM {} VIOLATION witnesses={} expected={} actual={} clause={}",
            self.axiom,
            self.rendered.join(";"),
            self.expected,
            self.actual,
            self.clause
        )
    }
}

#[derive(Clone, Debug)]
pub struct CheckSummary<E> {
    /// Axiom instances examined, per axiom.
    pub checked: BTreeMap<AxiomId, u64>,
    /// Sorted by [`ViolationReport::line`].
    pub violations: Vec<ViolationReport<E>>,
    pub elapsed: Duration,
    /// Scope remarks, e.g. which quantifiers were bounded by the sample.
    pub notes: Vec<String>,
}

impl<E> CheckSummary<E> {
    pub(crate) fn new() -> Self {
        CheckSummary {
            checked: BTreeMap::new(),
            violations: Vec::new(),
            elapsed: Duration::ZERO,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total_checked(&self) -> u64 {
        self.checked.values().sum()
    }

    pub fn lines(&self) -> Vec<String> {
        self.violations.iter().map(ViolationReport::line).collect()
    }

    pub(crate) fn absorb(&mut self, axiom: AxiomId, count: u64, reports: Vec<ViolationReport<E>>) {
        *self.checked.entry(axiom).or_insert(0) += count;
        self.violations.extend(reports);
    }

    pub(crate) fn finish(&mut self) {
        self.violations.sort_by_cached_key(|v| v.line());
    }

    /// Combines two summaries, keeping the violation order sorted.
    pub fn merge(mut self, other: CheckSummary<E>) -> Self {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_insert(0) += v;
        }
        self.violations.extend(other.violations);
        self.elapsed += other.elapsed;
        self.notes.extend(other.notes);
        self.finish();
        self
    }
}
