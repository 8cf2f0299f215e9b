//! Plain-text layouts for the subcommands.

use std::fmt::Write;

use surfent::analysis::{AnalysisReport, BigonInfo, Geometry, OracleInfo};
use surfent::{Orientation, Presentation};

fn field(out: &mut String, name: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{name:<14}{value}");
}

fn reversing_letters(g: &Geometry) -> String {
    let o = &g.order;
    let rev: Vec<String> = (0..o.len())
        .filter(|&i| g.orientation.at(i) == Orientation::Reversing)
        .map(|i| o.letter(i).to_string())
        .collect();
    if rev.is_empty() {
        "none".into()
    } else {
        rev.join(" ")
    }
}

pub fn check(p: &Presentation, g: &Geometry) -> String {
    let mut out = String::new();
    field(&mut out, "presentation", p);
    field(&mut out, "geometric", "yes");
    field(&mut out, "cyclic order", &g.order);
    field(&mut out, "reversing", reversing_letters(g));
    out
}

pub fn check_json(g: &Geometry) -> serde_json::Value {
    let o = &g.order;
    let letters: Vec<serde_json::Value> = (0..o.len())
        .map(|i| {
            serde_json::json!({
                "letter": o.letter(i).to_string(),
                "value": o.letter(i).value(),
                "orientation": g.orientation.at(i),
                "cell": o.cell_word(i).to_string(),
            })
        })
        .collect();
    serde_json::json!({
        "geometric": true,
        "relators": g.presentation.to_int_relators(),
        "cyclic_order": o.to_ints(),
        "letters": letters,
    })
}

pub fn bigons(table: &[BigonInfo]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<10}{:>3}  {:<16}right", "pair", "k", "left");
    for b in table {
        let pair = format!("{}, {}", b.pair.0, b.pair.1);
        let _ = writeln!(out, "{pair:<10}{:>3}  {:<16}{}", b.length, b.left, b.right);
    }
    out
}

pub fn sigma(oracle: &OracleInfo, lambda: f64, precision: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>3}  {:>14}  ratio", "m", "sigma");
    for (m, s) in oracle.sigma.iter().enumerate() {
        let ratio = if m == 0 { String::new() } else { format!("{:.precision$}", oracle.ratios[m - 1]) };
        let _ = writeln!(out, "{m:>3}  {s:>14}  {ratio}");
    }
    let verdict = if oracle.agrees { "agrees" } else { "DISAGREES" };
    let _ = writeln!(
        out,
        "kneading growth rate {lambda:.precision$}; last ratio off by {:.2e} relative, {verdict}",
        oracle.relative_error
    );
    let _ = writeln!(out, "{} vertices built", oracle.vertices_built);
    out
}

pub fn analysis(p: &Presentation, r: &AnalysisReport, dump_bigons: bool, precision: usize) -> String {
    let mut out = String::new();
    field(&mut out, "presentation", p);
    field(&mut out, "generators", r.n_generators);
    let order: Vec<&str> = r.letters.iter().map(|l| l.letter.as_str()).collect();
    field(&mut out, "cyclic order", format!("({})", order.join(", ")));
    let reversing: Vec<&str> = r
        .letters
        .iter()
        .filter(|l| l.orientation == Orientation::Reversing)
        .map(|l| l.letter.as_str())
        .collect();
    field(&mut out, "reversing", if reversing.is_empty() { "none".into() } else { reversing.join(" ") });
    field(&mut out, "splits", r.splits.join(" "));
    field(&mut out, "matrix", format!("{} x {}", r.matrix_shape.0, r.matrix_shape.1));
    field(&mut out, "determinant", &r.determinant);
    field(&mut out, "polynomial", &r.root_factor);
    field(&mut out, "root", format!("{:.precision$}", r.root));
    field(&mut out, "growth rate", format!("{:.precision$}", r.lambda));
    field(&mut out, "entropy", format!("{:.precision$} = log({:.precision$})", r.entropy, r.lambda));

    if dump_bigons {
        out.push('\n');
        out.push_str(&bigons(&r.bigons));
    }
    if let Some(m) = &r.matrix {
        out.push('\n');
        let _ = writeln!(out, "columns: {}", m.cols.join(" "));
        for (label, row) in m.rows.iter().zip(&m.entries) {
            let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{label:<10}{}", entries.join(" | "));
        }
    }
    if let Some(its) = &r.itineraries {
        out.push('\n');
        for it in its {
            let jump: Vec<String> = it.jump.iter().map(|(lap, c)| format!("({c}) {lap}")).collect();
            let _ = writeln!(out, "{}: {}", it.turning_point, jump.join(" + "));
            if !it.minus.is_empty() {
                let _ = writeln!(out, "  minus {}", it.minus.join(" "));
                let _ = writeln!(out, "  plus  {}", it.plus.join(" "));
            }
        }
    }
    if let Some(oracle) = &r.oracle {
        out.push('\n');
        out.push_str(&sigma(oracle, r.lambda, precision));
    }
    out
}
