//! Line-oriented text format for finite models.
//!
//! ```text
//! # comments run to the end of the line
//! order 4
//! elements p q          # names of the elements 1..order-2
//! oplus:
//! p+q=1                 # unlisted pairs are undefined, 0+x=x is implied
//! sprod:
//! symmetric             # optional: x*y=z also sets y*x=z
//! 0*0=0
//! ...
//! ```
//!
//! `0` and `1` always name the zero and the unit. `oplus` entries are
//! symmetrized; writing both orientations is allowed when they agree. The
//! `sprod` section, when present, must cover every ordered pair (after
//! symmetrization, if `symmetric` is given).
//!
//! [`save_model`] writes the canonical form: the header, an `elements` line
//! for orders above 2, the `oplus` entries with row ≤ column outside the zero
//! row, and the `sprod` entries, all in (row, column) order over the element
//! indices. Symmetric `∘` tables are written with the `symmetric` directive
//! and only their upper triangle.

use std::collections::HashMap;
use std::fmt::Write;

use thiserror::Error;

use super::{FiniteModel, ModelError};
use crate::partial::Defined;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid model: {0}")]
    Invariant(#[from] ModelError),
}

#[derive(PartialEq)]
enum Section {
    Header,
    Oplus,
    Sprod,
}

fn parse_entry(line: &str, op: char) -> Option<(&str, &str, &str)> {
    let (lhs, z) = line.split_once('=')?;
    let (x, y) = lhs.split_once(op)?;
    let (x, y, z) = (x.trim(), y.trim(), z.trim());
    if x.is_empty() || y.is_empty() || z.is_empty() || z.contains('=') {
        return None;
    }
    Some((x, y, z))
}

/// Parses and validates a model.
pub fn load_model(text: &str) -> Result<FiniteModel, LoadError> {
    let mut order: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut section = Section::Header;
    let mut seen_oplus = false;
    let mut seen_sprod = false;
    let mut symmetric = false;
    let mut oplus: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut sprod: HashMap<(usize, usize), (usize, usize)> = HashMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let err = |message: String| LoadError::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("order") {
            if order.is_some() {
                return Err(err("duplicate order header".into()));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad order {:?}", rest.trim())))?;
            if n < 2 {
                return Err(err(format!("order must be at least 2, got {n}")));
            }
            order = Some(n);
            continue;
        }
        let n = order.ok_or_else(|| err("expected `order N` first".into()))?;
        if let Some(rest) = line.strip_prefix("elements") {
            if section != Section::Header || names.is_some() {
                return Err(err("`elements` must precede the table sections".into()));
            }
            names = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        match line {
            "oplus:" | "sprod:" => {
                let (seen, next) = if line == "oplus:" {
                    (&mut seen_oplus, Section::Oplus)
                } else {
                    (&mut seen_sprod, Section::Sprod)
                };
                if *seen {
                    return Err(err(format!("duplicate section {line}")));
                }
                *seen = true;
                if index.is_empty() {
                    let all = match &names {
                        Some(mid) => {
                            if mid.len() != n - 2 {
                                return Err(err(format!(
                                    "expected {} element names, got {}",
                                    n - 2,
                                    mid.len()
                                )));
                            }
                            let mut all = vec!["0".to_string()];
                            all.extend(mid.iter().cloned());
                            all.push("1".to_string());
                            all
                        }
                        None => (0..n).map(|i| super::default_name(i, n)).collect(),
                    };
                    for (i, name) in all.into_iter().enumerate() {
                        if index.insert(name.clone(), i).is_some() {
                            return Err(err(format!("duplicate element name {name:?}")));
                        }
                    }
                }
                section = next;
                continue;
            }
            "symmetric" if section == Section::Sprod => {
                if symmetric || !sprod.is_empty() {
                    return Err(err("`symmetric` must open the sprod section".into()));
                }
                symmetric = true;
                continue;
            }
            _ => {}
        }
        let (op, table) = match section {
            Section::Header => return Err(err(format!("unexpected line {line:?}"))),
            Section::Oplus => ('+', &mut oplus),
            Section::Sprod => ('*', &mut sprod),
        };
        let (x, y, z) =
            parse_entry(line, op).ok_or_else(|| err(format!("expected x{op}y=z, got {line:?}")))?;
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| err(format!("unknown element {s:?}")))
        };
        let (x, y, z) = (lookup(x)?, lookup(y)?, lookup(z)?);
        if table.contains_key(&(x, y)) {
            return Err(err(format!("duplicate entry for {line:?}")));
        }
        let mirrored = op == '+' || symmetric;
        if let Some(&(other, _)) = table.get(&(y, x)) {
            if mirrored && other != z {
                return Err(err(format!(
                    "conflicting entry {line:?} (mirror defined on line {})",
                    table[&(y, x)].1
                )));
            }
        }
        table.insert((x, y), (z, line_no));
    }

    let n = order.ok_or_else(|| LoadError::Parse {
        line: 0,
        message: "missing `order N` header".into(),
    })?;
    let mut oplus_table = vec![None; n * n];
    for x in 0..n {
        oplus_table[x] = Some(x);
        oplus_table[x * n] = Some(x);
    }
    // Listed zero-row entries override the implied identity; a disagreeing
    // one is then reported by the model invariants.
    for (&(x, y), &(z, _)) in &oplus {
        oplus_table[x * n + y] = Some(z);
        oplus_table[y * n + x] = Some(z);
    }
    let sprod_table = if seen_sprod {
        let mut t = vec![None; n * n];
        for (&(x, y), &(z, _)) in &sprod {
            t[x * n + y] = Some(z);
            if symmetric {
                t[y * n + x] = Some(z);
            }
        }
        let names: Vec<String> = {
            let mut v = vec![String::new(); n];
            for (name, &i) in &index {
                v[i] = name.clone();
            }
            v
        };
        if let Some(missing) = t.iter().position(Option::is_none) {
            return Err(LoadError::Parse {
                line: 0,
                message: format!(
                    "sprod table misses {}*{}",
                    names[missing / n],
                    names[missing % n]
                ),
            });
        }
        Some(t.into_iter().map(Option::unwrap).collect())
    } else {
        None
    };
    Ok(FiniteModel::from_tables(
        n,
        names,
        oplus_table,
        sprod_table,
    )?)
}

/// Canonical serialization; `load_model(&save_model(m)) == m`.
pub fn save_model(m: &FiniteModel) -> String {
    let n = m.order();
    let name = |i: usize| m.name(i);
    let mut out = String::new();
    writeln!(out, "order {n}").unwrap();
    if n > 2 {
        writeln!(out, "elements {}", m.names()[1..n - 1].join(" ")).unwrap();
    }
    out.push_str("oplus:\n");
    for x in 1..n {
        for y in x..n {
            if let Defined(z) = m.oplus_at(x, y) {
                writeln!(out, "{}+{}={}", name(x), name(y), name(z)).unwrap();
            }
        }
    }
    if m.has_sprod() {
        out.push_str("sprod:\n");
        let symmetric = m.sprod_is_symmetric();
        if symmetric {
            out.push_str("symmetric\n");
        }
        for x in 0..n {
            for y in if symmetric { x } else { 0 }..n {
                let z = m.sprod_at(x, y).unwrap();
                writeln!(out, "{}*{}={}", name(x), name(y), name(z)).unwrap();
            }
        }
    }
    out
}
