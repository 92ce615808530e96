//! Deterministic text, JSON and CSV rendering of reports.

use std::fmt::Write as _;

use circmem_core::lab::{CapacityReport, FigureRow, SearchReport, SuiteReport, SuiteStatus};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Capacity(&'a CapacityReport),
    Suite(&'a SuiteReport),
    Search(&'a SearchReport),
}

pub const CAPACITY_CSV_HEADER: [&str; 12] = [
    "label",
    "n",
    "row_sum",
    "class",
    "total_states",
    "fixed_count",
    "unique_count",
    "rotation_orbits",
    "expected_fixed",
    "fixed_match",
    "expected_unique",
    "unique_match",
];

pub fn emit_report(report: Report<'_>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = match report {
                Report::Capacity(r) => serde_json::to_string_pretty(r),
                Report::Suite(r) => serde_json::to_string_pretty(r),
                Report::Search(r) => serde_json::to_string_pretty(r),
            }
            .expect("reports always serialize");
            out.push('\n');
            out
        }
        Format::Csv => match report {
            Report::Capacity(r) => capacity_csv(std::iter::once(r)),
            Report::Suite(r) => capacity_csv(r.entries.iter().map(|e| &e.report)),
            Report::Search(r) => capacity_csv(r.trials.iter()),
        },
        Format::Text => match report {
            Report::Capacity(r) => capacity_text(r),
            Report::Suite(r) => suite_text(r),
            Report::Search(r) => search_text(r),
        },
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn capacity_csv<'a>(rows: impl Iterator<Item = &'a CapacityReport>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CAPACITY_CSV_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record([
            r.label.clone(),
            r.n.to_string(),
            r.row_sum.to_string(),
            r.class_tag.name().to_string(),
            r.total_states.to_string(),
            r.fixed_count.to_string(),
            r.unique_count.to_string(),
            r.rotation_orbit_count.to_string(),
            opt(r.expected_fixed),
            opt(r.fixed_match),
            opt(r.expected_unique),
            opt(r.unique_match),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn stated(expected: Option<u64>, matched: Option<bool>) -> String {
    match (expected, matched) {
        (Some(e), Some(true)) => format!("  (stated {e}: match)"),
        (Some(e), _) => format!("  (stated {e}: differs)"),
        _ => String::new(),
    }
}

fn capacity_text(r: &CapacityReport) -> String {
    let mut s = String::new();
    let row: Vec<String> = r.row.weights().iter().map(|w| w.to_string()).collect();
    let _ = writeln!(s, "{}", r.label);
    let _ = writeln!(s, "  first row        [{}]", row.join(", "));
    let _ = writeln!(s, "  row sum          {} ({})", r.row_sum, r.class_tag.name());
    let _ = writeln!(s, "  total states     2^{} = {}", r.n, r.total_states);
    let _ = writeln!(
        s,
        "  memories         {}{}",
        r.fixed_count,
        stated(r.expected_fixed, r.fixed_match)
    );
    let _ = writeln!(
        s,
        "  unique           {}{}",
        r.unique_count,
        stated(r.expected_unique, r.unique_match)
    );
    let _ = writeln!(s, "  rotation orbits  {}", r.rotation_orbit_count);
    if let Some(states) = &r.fixed_points {
        let _ = writeln!(s);
        for st in states {
            let spaced: Vec<String> = st.pattern.chars().map(String::from).collect();
            let _ = writeln!(s, "[{}]", spaced.join(" "));
        }
    }
    s
}

fn suite_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<14} {:>3} {:>6} {:>6}  {:<12} {:>6} {:>6}  {:<12} {:<10} status",
        "label", "n", "fixed", "stated", "", "unique", "stated", "", "enumerators"
    );
    for e in &r.entries {
        let rep = &e.report;
        let _ = writeln!(
            s,
            "{:<14} {:>3} {:>6} {:>6}  {:<12} {:>6} {:>6}  {:<12} {:<10} {}",
            e.label,
            rep.n,
            rep.fixed_count,
            opt(rep.expected_fixed),
            e.fixed_status.name(),
            rep.unique_count,
            opt(rep.expected_unique),
            e.unique_status.name(),
            if e.enumerators_agree { "agree" } else { "DISAGREE" },
            e.status.name(),
        );
    }
    let flagged = |st: SuiteStatus| r.entries.iter().filter(|e| e.status == st).count();
    let _ = match r.status {
        SuiteStatus::Pass => writeln!(s, "PASS: {} entries", r.entries.len()),
        SuiteStatus::Discrepancy => writeln!(
            s,
            "DISCREPANCY: {} of {} entries differ from stated values on untrusted counts; enumerators agree on all",
            flagged(SuiteStatus::Discrepancy),
            r.entries.len()
        ),
        SuiteStatus::Fail => writeln!(
            s,
            "FAIL: {} of {} entries failed",
            flagged(SuiteStatus::Fail),
            r.entries.len()
        ),
    };
    s
}

fn search_text(r: &SearchReport) -> String {
    let c = &r.config;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "search n={} trials={} weights=[{}, {}] row_sum={} seed={}",
        c.n,
        c.trials,
        c.weight_min,
        c.weight_max,
        c.row_sum_target.map_or("any".to_string(), |t| t.to_string()),
        c.seed
    );
    let _ = writeln!(s, "accepted {}  rejected {}", r.accepted, r.rejected);
    let _ = writeln!(s, "memories  matrices");
    for bin in &r.histogram {
        let _ = writeln!(s, "{:>8}  {:>8}", bin.fixed_count, bin.matrices);
    }
    if let (Some(mean), Some(max), Some(best)) = (r.mean_fixed, r.max_fixed, &r.best) {
        let _ = writeln!(s, "mean {mean:.4}  max {max}  best {} [{}]", best.label, best.row);
    }
    s
}

/// `n,fixed_count,label` rows.
pub fn figure_csv(rows: &[FigureRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "fixed_count", "label"]).expect("in-memory write");
    for r in rows {
        w.write_record([r.n.to_string(), r.fixed_count.to_string(), r.label.clone()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use circmem_core::lab::{analyze, catalog_entry, AnalyzeOptions};
    use circmem_core::GeneratorRow;

    fn class1_report() -> CapacityReport {
        let e = catalog_entry("4x4-class1-a").unwrap();
        let opts = AnalyzeOptions {
            label: Some(e.label.into()),
            expected_fixed: e.expected_fixed,
            expected_unique: e.expected_unique,
            ..Default::default()
        };
        analyze(&e.row, &opts).unwrap()
    }

    #[test]
    fn capacity_csv_row() {
        let out = emit_report(Report::Capacity(&class1_report()), Format::Csv);
        assert_eq!(
            out,
            "label,n,row_sum,class,total_states,fixed_count,unique_count,rotation_orbits,expected_fixed,fixed_match,expected_unique,unique_match\n\
             4x4-class1-a,4,0,ZeroSum,16,5,3,2,5,true,3,true\n"
        );
    }

    #[test]
    fn json_has_both_state_forms() {
        let out = emit_report(Report::Capacity(&class1_report()), Format::Json);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["fixed_points"][0]["index"], 0);
        assert_eq!(v["fixed_points"][0]["pattern"], "++++");
        assert_eq!(v["fixed_points"][1]["pattern"], "++--");
        assert_eq!(v["fixed_points"][1]["index"], 3);
        assert_eq!(v["row"], serde_json::json!([0, 2, -5, 3]));
        assert!(v["stats"].get("wall_time").is_none());
    }

    #[test]
    fn empty_fixed_set_json() {
        // all fields negative on every state: no memories
        let row = GeneratorRow::new(vec![0, 1, 0, 2, 2, -4, -4]).unwrap();
        let r = analyze(&row, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.fixed_count, 0);
        let out = emit_report(Report::Capacity(&r), Format::Json);
        assert!(out.contains("\"fixed_points\": []"), "{out}");
    }

    #[test]
    fn text_lists_memories_in_row_layout() {
        let out = emit_report(Report::Capacity(&class1_report()), Format::Text);
        assert!(out.contains("\n[+ + - -]\n"));
        assert!(out.contains("memories         5  (stated 5: match)"));
    }

    #[test]
    fn figure_csv_layout() {
        let rows = vec![FigureRow {
            n: 5,
            fixed_count: 7,
            label: "5x5-a".into(),
        }];
        assert_eq!(figure_csv(&rows), "n,fixed_count,label\n5,7,5x5-a\n");
    }
}
