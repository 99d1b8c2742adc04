//! Text and JSON renderings of reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use wexc::classify::ClassificationReport;
use wexc::paperlab::{Status, SuiteReport};
use wexc::semiinv::SemiInvariantSpace;

/// Pretty JSON with sorted keys and `elapsed_ms` added at the top level.
pub fn json_with_timing<T: Serialize>(report: &T, elapsed_ms: u128) -> String {
    let mut value = serde_json::to_value(report).expect("reports serialize");
    if let Value::Object(map) = &mut value {
        map.insert("elapsed_ms".into(), json!(elapsed_ms));
    }
    serde_json::to_string_pretty(&value).expect("values serialize")
}

pub fn space_text(space: &SemiInvariantSpace, out: &mut String) {
    let chars: Vec<String> = space.character.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "  degree {}, character ({}), dimension {}",
        space.degree,
        chars.join(", "),
        space.dimension()
    );
    for f in &space.basis {
        let _ = writeln!(out, "    {f}");
    }
}

pub fn spaces_text(by_degree: &BTreeMap<u32, Vec<SemiInvariantSpace>>) -> String {
    let mut out = String::new();
    for (d, spaces) in by_degree {
        if spaces.is_empty() {
            let _ = writeln!(out, "degree {d}: none");
            continue;
        }
        let _ = writeln!(out, "degree {d}: {} space(s)", spaces.len());
        for s in spaces {
            space_text(s, &mut out);
        }
    }
    out
}

pub fn classify_text(r: &ClassificationReport, elapsed_ms: u128) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dimension:          {}", r.dim);
    let _ = writeln!(out, "order:              {}", r.order);
    let _ = writeln!(out, "diagonal order:     {}", r.diag_order);
    let _ = writeln!(out, "permutation image:  {}", r.t_label);
    let _ = writeln!(out, "irreducible:        {}", r.irreducible);
    let _ = writeln!(out, "quasi-reflections:  {}", r.quasi_reflections.len());
    out.push_str(&spaces_text(&r.semi_invariants_by_degree));
    let _ = writeln!(out, "verdict:            {} ({})", r.verdict, r.reason);
    let _ = writeln!(out, "elapsed:            {elapsed_ms} ms");
    out
}

pub fn suite_json(report: &SuiteReport, elapsed_ms: u128) -> String {
    let value = json!({
        "items": report.items,
        "passed": report.passed(),
        "summary": {
            "pass": report.count(Status::Pass),
            "fail": report.count(Status::Fail),
            "flag": report.count(Status::Flag),
        },
    });
    json_with_timing(&value, elapsed_ms)
}

pub fn suite_text(report: &SuiteReport, elapsed_ms: u128) -> String {
    let width = report.items.iter().map(|i| i.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for item in &report.items {
        let _ = writeln!(out, "{:<4}  {:<width$}  {}", item.status, item.id, item.detail);
    }
    let _ = writeln!(
        out,
        "\n{} passed, {} failed, {} flagged in {elapsed_ms} ms",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Flag)
    );
    out
}
