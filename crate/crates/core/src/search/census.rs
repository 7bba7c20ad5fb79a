use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::effect::enumerate_effect_algebras;
use super::sequential::extend_with_sequential_product;
use crate::finite::{save_model, FiniteModel};
use crate::inequality::{avg_inequality, Status};

/// Largest order searched without [`SearchConfig::allow_large`].
pub const DEFAULT_ORDER_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_order: usize,
    /// Also enumerate sequential products and run the inequality over them.
    /// When off only effect algebras are counted.
    pub require_sequential: bool,
    pub mod_isomorphism: bool,
    pub emit_dir: Option<PathBuf>,
    /// Permit `max_order` above [`DEFAULT_ORDER_CAP`].
    pub allow_large: bool,
}

impl SearchConfig {
    pub fn new(max_order: usize) -> Self {
        SearchConfig {
            max_order,
            require_sequential: true,
            mod_isomorphism: true,
            emit_dir: None,
            allow_large: false,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.max_order < 2 {
            return Err(SearchError::Config(format!(
                "max order must be at least 2, got {}",
                self.max_order
            )));
        }
        if self.max_order > DEFAULT_ORDER_CAP && !self.allow_large {
            return Err(SearchError::Config(format!(
                "max order {} exceeds {DEFAULT_ORDER_CAP}; pass the override to search anyway",
                self.max_order
            )));
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    Config(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// A sequential effect algebra together with the ordered pairs on which
/// the average value inequality fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusWitness {
    pub model: FiniteModel,
    pub pairs: Vec<(usize, usize)>,
}

impl CensusWitness {
    /// Hash-based name of the model, also used as its emitted file stem.
    pub fn hash(&self) -> String {
        model_hash(&self.model)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderCensus {
    pub ea_count: u64,
    pub sea_count: u64,
    /// Failing ordered pairs summed over all sequential effect algebras.
    pub inequality_violations: u64,
    pub witnesses: Vec<CensusWitness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub per_order: BTreeMap<usize, OrderCensus>,
}

impl Census {
    /// Witness pairs as `order=<n> model=<hash> a=<x> b=<y>` lines, sorted.
    pub fn witness_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self
            .per_order
            .iter()
            .flat_map(|(order, oc)| {
                oc.witnesses.iter().flat_map(move |w| {
                    let hash = w.hash();
                    w.pairs.iter().map(move |&(a, b)| {
                        format!(
                            "order={order} model={hash} a={} b={}",
                            w.model.name(a),
                            w.model.name(b)
                        )
                    })
                })
            })
            .collect();
        lines.sort();
        lines
    }
}

impl fmt::Display for Census {
    /// Fixed-width table, one row per order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order  eas  seas  violations")?;
        for (order, oc) in &self.per_order {
            writeln!(
                f,
                "{order:>5}  {:>3}  {:>4}  {:>10}",
                oc.ea_count, oc.sea_count, oc.inequality_violations
            )?;
        }
        Ok(())
    }
}

/// First 16 hex digits of the SHA-256 of the model's saved form.
pub fn model_hash(model: &FiniteModel) -> String {
    let digest = Sha256::digest(save_model(model).as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn failing_pairs(model: &FiniteModel) -> Vec<(usize, usize)> {
    let alg = model.as_sequential().expect("model has a product");
    let n = model.order();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if avg_inequality(&alg, &a, &b).status == Status::Fails {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

struct EaResult {
    seas: Vec<FiniteModel>,
    violations: u64,
    witnesses: Vec<CensusWitness>,
}

fn survey(ea: &FiniteModel, cfg: &SearchConfig) -> EaResult {
    let mut out = EaResult {
        seas: Vec::new(),
        violations: 0,
        witnesses: Vec::new(),
    };
    if !cfg.require_sequential {
        return out;
    }
    for sea in extend_with_sequential_product(ea, cfg.mod_isomorphism) {
        let pairs = failing_pairs(&sea);
        if !pairs.is_empty() {
            out.violations += pairs.len() as u64;
            out.witnesses.push(CensusWitness {
                model: sea.clone(),
                pairs,
            });
        }
        out.seas.push(sea);
    }
    out
}

fn write_file(path: &Path, contents: &str) -> Result<(), SearchError> {
    fs::write(path, contents).map_err(|source| SearchError::Io {
        path: path.to_owned(),
        source,
    })
}

fn create_dir(path: &Path) -> Result<(), SearchError> {
    fs::create_dir_all(path).map_err(|source| SearchError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Enumerates every order from 2 to `cfg.max_order` and counts effect
/// algebras, sequential products and failing pairs of the average value
/// inequality.
///
/// With `emit_dir` set, each sequential effect algebra (or each effect
/// algebra when products are not requested) is written to
/// `order<N>/<hash>.sea` and the failing pairs to `witnesses.txt`. File
/// names depend only on content, so output is the same for any thread
/// count.
pub fn inequality_census(cfg: &SearchConfig) -> Result<Census, SearchError> {
    cfg.validate()?;
    let mut census = Census::default();
    if let Some(dir) = &cfg.emit_dir {
        create_dir(dir)?;
    }
    for order in 2..=cfg.max_order {
        let eas = enumerate_effect_algebras(order, cfg.mod_isomorphism);
        let results: Vec<EaResult> = eas.par_iter().map(|ea| survey(ea, cfg)).collect();
        let mut oc = OrderCensus {
            ea_count: eas.len() as u64,
            ..OrderCensus::default()
        };
        for r in &results {
            oc.sea_count += r.seas.len() as u64;
            oc.inequality_violations += r.violations;
        }
        if let Some(dir) = &cfg.emit_dir {
            let sub = dir.join(format!("order{order}"));
            create_dir(&sub)?;
            let emitted: Box<dyn Iterator<Item = &FiniteModel>> = if cfg.require_sequential {
                Box::new(results.iter().flat_map(|r| r.seas.iter()))
            } else {
                Box::new(eas.iter())
            };
            for model in emitted {
                write_file(
                    &sub.join(format!("{}.sea", model_hash(model))),
                    &save_model(model),
                )?;
            }
        }
        oc.witnesses = results.into_iter().flat_map(|r| r.witnesses).collect();
        census.per_order.insert(order, oc);
    }
    if let Some(dir) = &cfg.emit_dir {
        let mut text = census.witness_lines().join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        write_file(&dir.join("witnesses.txt"), &text)?;
    }
    Ok(census)
}
