use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use sealab_core::checker::{
    check_effect_axioms, check_sequential_axioms, verify_prop3_identities, CheckSummary,
};
use sealab_core::e0::BranchCoverage;
use sealab_core::expr::parse_expr;
use sealab_core::finite::{load_model, save_model};
use sealab_core::inequality::{replay_counterexample, scan_window, InequalityVerdict};
use sealab_core::search::{inequality_census, SearchConfig};
use sealab_core::{E0Window, FiniteModel, PartialResult, Window};

use crate::WindowArgs;

/// What a subcommand prints, in both formats, and its exit code.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn err(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

fn lines_to_text(lines: &[String]) -> String {
    let mut text = lines.join("\n");
    text.push('\n');
    text
}

fn partial_json(p: &PartialResult<String>) -> Value {
    match p {
        PartialResult::Defined(s) => json!(s),
        PartialResult::Undefined => Value::Null,
    }
}

fn window_of(args: &WindowArgs) -> Result<Window, CliError> {
    let d = Window::DEFAULT;
    Window::new(
        args.n.unwrap_or(d.n_max),
        args.ik.unwrap_or(d.ik_max),
        args.m.unwrap_or(d.m_abs),
    )
    .map_err(err)
}

fn window_json(w: &Window) -> Value {
    json!({ "n": w.n_max, "ik": w.ik_max, "m": w.m_abs, "elements": w.size() })
}

enum Target {
    E0(Window),
    File(String, FiniteModel),
}

fn read_model(path: &Path) -> Result<FiniteModel, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
    load_model(&text).map_err(|e| err(format!("{}: {e}", path.display())))
}

fn target_of(target: &str, window: &WindowArgs) -> Result<Target, CliError> {
    if target == "e0" {
        return Ok(Target::E0(window_of(window)?));
    }
    if window.n.is_some() || window.ik.is_some() || window.m.is_some() {
        return Err(err("window bounds apply only to the e0 target"));
    }
    Ok(Target::File(
        target.to_string(),
        read_model(Path::new(target))?,
    ))
}

pub fn eval(expr: &str) -> Result<Outcome, CliError> {
    let parsed = parse_expr::<i64>(expr).map_err(|e| {
        let caret = format!("{}^", " ".repeat(e.column - 1));
        err(format!("{e}\n  {expr}\n  {caret}"))
    })?;
    let value = parsed.eval().map(|e| e.to_string());
    let shown = value
        .render_with(|s| s.clone())
        .replace("undef", "undefined");
    Ok(Outcome {
        text: format!("{shown}\n"),
        json: json!({ "expr": expr, "defined": value.is_defined(), "value": partial_json(&value) }),
        code: 0,
    })
}

fn hit<K>(counts: &BTreeMap<K, u64>) -> usize {
    counts.values().filter(|&&n| n > 0).count()
}

fn summary_report<E>(
    header: Vec<String>,
    mut summary: CheckSummary<E>,
    coverage: Option<&BranchCoverage>,
    mut target_json: serde_json::Map<String, Value>,
) -> Outcome {
    summary.notes.sort();
    summary.notes.dedup();
    let mut lines = header;
    for (axiom, count) in &summary.checked {
        lines.push(format!("checked {axiom} {count}"));
    }
    if let Some(cov) = coverage {
        lines.push(format!(
            "coverage oplus {}/{} sprod {}/{}",
            hit(&cov.oplus),
            cov.oplus.len(),
            hit(&cov.sprod),
            cov.sprod.len()
        ));
        for branch in cov.uncovered() {
            lines.push(format!("uncovered {branch}"));
        }
    }
    for note in &summary.notes {
        lines.push(format!("note {note}"));
    }
    let violations = summary.lines();
    lines.extend(violations.iter().cloned());
    let total = summary.total_checked();
    if summary.passed() {
        lines.push(format!("OK checks={total}"));
    } else {
        lines.push(format!(
            "FAIL violations={} checks={total}",
            violations.len()
        ));
    }

    let checked: serde_json::Map<String, Value> = summary
        .checked
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let violation_json: Vec<Value> = summary
        .violations
        .iter()
        .map(|v| {
            json!({
                "axiom": v.axiom.to_string(),
                "clause": v.clause,
                "witnesses": v.rendered,
                "expected": v.expected,
                "actual": v.actual,
            })
        })
        .collect();
    target_json.insert("checked".into(), Value::Object(checked));
    target_json.insert("total_checked".into(), json!(total));
    target_json.insert("violations".into(), Value::Array(violation_json));
    target_json.insert("notes".into(), json!(summary.notes));
    target_json.insert("ok".into(), json!(summary.passed()));
    if let Some(cov) = coverage {
        let names = |m: Vec<(String, u64)>| -> serde_json::Map<String, Value> {
            m.into_iter().map(|(k, v)| (k, json!(v))).collect()
        };
        target_json.insert(
            "coverage".into(),
            json!({
                "oplus": names(cov.oplus.iter().map(|(b, n)| (format!("{b:?}"), *n)).collect()),
                "sprod": names(cov.sprod.iter().map(|(b, n)| (format!("{b:?}"), *n)).collect()),
                "complete": cov.is_complete(),
            }),
        );
    }
    Outcome {
        text: lines_to_text(&lines),
        json: Value::Object(target_json),
        code: if summary.passed() { 0 } else { 1 },
    }
}

pub fn check(target: &str, window: &WindowArgs) -> Result<Outcome, CliError> {
    match target_of(target, window)? {
        Target::E0(w) => {
            let alg = E0Window::new(w);
            let summary = check_effect_axioms(&alg)
                .merge(check_sequential_axioms(&alg))
                .merge(verify_prop3_identities(&w));
            let coverage = BranchCoverage::over_window(&w);
            let header = vec![
                "target e0".to_string(),
                format!(
                    "window n={} ik={} m={} elements={}",
                    w.n_max,
                    w.ik_max,
                    w.m_abs,
                    w.size()
                ),
            ];
            let mut obj = serde_json::Map::new();
            obj.insert("target".into(), json!("e0"));
            obj.insert("window".into(), window_json(&w));
            Ok(summary_report(header, summary, Some(&coverage), obj))
        }
        Target::File(path, model) => {
            let summary = match model.as_sequential() {
                Some(alg) => check_effect_axioms(&alg).merge(check_sequential_axioms(&alg)),
                None => check_effect_axioms(&model.as_carrier()),
            };
            let header = vec![
                format!("target {path}"),
                format!(
                    "order {} sequential product {}",
                    model.order(),
                    if model.has_sprod() {
                        "present"
                    } else {
                        "absent"
                    }
                ),
            ];
            let mut obj = serde_json::Map::new();
            obj.insert("target".into(), json!(path));
            obj.insert("order".into(), json!(model.order()));
            obj.insert("sequential".into(), json!(model.has_sprod()));
            Ok(summary_report(header, summary, None, obj))
        }
    }
}

pub fn counterexample() -> Outcome {
    let replay = replay_counterexample(&E0Window::new(Window::DEFAULT));
    let lines: Vec<String> = replay
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| format!("{}. {s}", i + 1))
        .collect();
    let steps: Vec<Value> = replay
        .steps
        .iter()
        .map(|s| json!({ "claim": s.claim, "ok": s.ok }))
        .collect();
    Outcome {
        text: lines_to_text(&lines),
        json: json!({ "steps": steps, "verified": replay.verified() }),
        code: if replay.verified() { 0 } else { 1 },
    }
}

fn verdict_json<E>(v: &InequalityVerdict<E>, render: impl Fn(&E) -> String) -> Value {
    json!({
        "a": render(&v.a),
        "b": render(&v.b),
        "product": render(&v.product),
        "doubled": partial_json(&v.doubled.as_ref().map(&render)),
        "squares": [render(&v.squares.0), render(&v.squares.1)],
        "squares_sum": partial_json(&v.squares_sum.as_ref().map(&render)),
        "sum_undefined": v.sum_undefined,
    })
}

fn scan_report<A: sealab_core::SequentialEffectAlgebra>(
    alg: &A,
    target: Value,
    header: String,
) -> Outcome {
    let sample = alg.sample();
    let render = |e: &A::Element| alg.render(e);
    let mut failures: Vec<(String, Value)> = scan_window(alg, &sample)
        .iter()
        .map(|v| (v.line(render), verdict_json(v, render)))
        .collect();
    failures.sort_by(|x, y| x.0.cmp(&y.0));
    let pairs = sample.len() * sample.len();
    let code = if failures.is_empty() { 0 } else { 1 };
    let mut lines = vec![header];
    lines.extend(failures.iter().map(|(l, _)| l.clone()));
    lines.push(format!("pairs={pairs} failures={}", failures.len()));
    Outcome {
        text: lines_to_text(&lines),
        json: json!({
            "target": target,
            "pairs": pairs,
            "failures": failures.into_iter().map(|(_, j)| j).collect::<Vec<_>>(),
        }),
        code,
    }
}

pub fn scan(target: &str, window: &WindowArgs) -> Result<Outcome, CliError> {
    match target_of(target, window)? {
        Target::E0(w) => {
            let header = format!(
                "target e0 window n={} ik={} m={}",
                w.n_max, w.ik_max, w.m_abs
            );
            let t = json!({ "model": "e0", "window": window_json(&w) });
            Ok(scan_report(&E0Window::new(w), t, header))
        }
        Target::File(path, model) => {
            let alg = model
                .as_sequential()
                .ok_or_else(|| err(format!("{path}: model has no sprod section")))?;
            Ok(scan_report(
                &alg,
                json!({ "model": path }),
                format!("target {path}"),
            ))
        }
    }
}

pub fn search(cfg: SearchConfig) -> Result<Outcome, CliError> {
    let census = inequality_census(&cfg).map_err(|e| err(e.to_string()))?;
    let witnesses = census.witness_lines();
    let mut text = census.to_string();
    for w in &witnesses {
        text.push_str(w);
        text.push('\n');
    }
    let violations: u64 = census
        .per_order
        .values()
        .map(|c| c.inequality_violations)
        .sum();
    let per_order: serde_json::Map<String, Value> = census
        .per_order
        .iter()
        .map(|(order, c)| {
            (
                order.to_string(),
                json!({
                    "ea_count": c.ea_count,
                    "sea_count": c.sea_count,
                    "inequality_violations": c.inequality_violations,
                }),
            )
        })
        .collect();
    Ok(Outcome {
        text,
        json: json!({
            "max_order": cfg.max_order,
            "mod_isomorphism": cfg.mod_isomorphism,
            "sequential": cfg.require_sequential,
            "per_order": per_order,
            "witnesses": witnesses,
        }),
        code: if violations > 0 { 1 } else { 0 },
    })
}

pub fn fmt(file: &Path, in_place: bool) -> Result<Outcome, CliError> {
    let original = fs::read_to_string(file)
        .map_err(|e| err(format!("cannot read {}: {e}", file.display())))?;
    let model = load_model(&original).map_err(|e| err(format!("{}: {e}", file.display())))?;
    let canonical = save_model(&model);
    let changed = canonical != original;
    let text = if in_place {
        if changed {
            fs::write(file, &canonical)
                .map_err(|e| err(format!("cannot write {}: {e}", file.display())))?;
        }
        String::new()
    } else {
        canonical.clone()
    };
    Ok(Outcome {
        text,
        json: json!({ "file": file.display().to_string(), "canonical": canonical, "changed": changed }),
        code: 0,
    })
}
