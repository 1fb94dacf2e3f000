use std::fmt::Write;

use super::json::ConicInfo;
use crate::config::CevianConfig;
use crate::theorems::{FuzzSummary, TheoremReport};
use crate::triangle::point_to_bary;

fn opt(p: Option<&crate::kernel::HPoint>) -> String {
    p.map_or_else(|| "undefined".to_string(), ToString::to_string)
}

pub fn catalog(cfg: &CevianConfig, info: &ConicInfo) -> String {
    let mut s = String::new();
    let [a, b, c] = cfg.tri.vertices();
    let _ = writeln!(s, "triangle  A {a}  B {b}  C {c}");
    let _ = writeln!(s, "point     P {} = ({})", cfg.p, point_to_bary(&cfg.tri, &cfg.p));
    let f = &cfg.flags;
    let _ = writeln!(
        s,
        "flags     P' ordinary: {}, on median: {}, on Steiner circumellipse: {}",
        f.pprime_ordinary, f.on_median, f.on_steiner
    );
    let _ = writeln!(s);
    for (name, p) in cfg.named_points() {
        let _ = writeln!(s, "  {name:<9} {}", opt(p.as_ref()));
    }
    let _ = writeln!(s);
    match &info.conic {
        Some(conic) => {
            let _ = writeln!(s, "conic     {conic}");
            let coeffs: Vec<String> = conic.coeffs().iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "coeffs    [{}]", coeffs.join(" "));
        }
        None => {
            let _ = writeln!(s, "conic     not unique");
        }
    }
    if let Some(class) = info.class {
        let _ = writeln!(s, "class     {class}");
    }
    let _ = writeln!(s, "center Z  {}", opt(info.center.as_ref()));
    if let Some(iso) = info.isometry {
        let _ = writeln!(s, "lambda    {}", iso.as_str());
    }
    s
}

pub fn reports(reports: &[TheoremReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "{:<14} {}", r.id, r.status.as_str());
        if let Some(w) = r.witness() {
            let _ = writeln!(s, "    witness: {w}");
        }
        let unmet: Vec<&str> =
            r.hypotheses.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        if !unmet.is_empty() && !r.status.is_failed() {
            let _ = writeln!(s, "    not met: {}", unmet.join(", "));
        }
    }
    let failed = reports.iter().filter(|r| r.status.is_failed()).count();
    let _ = writeln!(s, "FAILED: {failed}");
    s
}

pub fn fuzz(summary: &FuzzSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "seed {}  count {}  bound {}  (generic {}, steiner {}, median {})",
        summary.seed, summary.count, summary.bound, summary.generic, summary.steiner, summary.median
    );
    let _ = writeln!(s, "{:<14} {:>7} {:>19} {:>7}", "id", "holds", "hypothesis_not_met", "FAILED");
    for c in &summary.counts {
        let _ = writeln!(s, "{:<14} {:>7} {:>19} {:>7}", c.id, c.holds, c.hypothesis_not_met, c.failed);
    }
    let _ = writeln!(s, "FAILED: {}", summary.failed);
    if let Some(f) = &summary.first_failure {
        let _ = writeln!(s, "first failure: config {} ({:?}) {}", f.index, f.kind, f.id);
        let _ = writeln!(s, "    witness: {}", f.witness);
        let _ = writeln!(s, "    replay: verify --triangle \"{}\" --point \"{}\"", f.triangle, f.point);
    }
    s
}
