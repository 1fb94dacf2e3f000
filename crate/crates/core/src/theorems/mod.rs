//! Exact predicates for every result about the cevian conic, a run-all
//! driver, and a seeded fuzz harness.
//!
//! Each registry id yields one [`TheoremReport`]. A report is `holds` when
//! every clause evaluates to an exact equality, `hypothesis_not_met` when a
//! precondition flag is false (or an auxiliary construction degenerates),
//! and `FAILED` with the first violated clause otherwise.

mod checks;
mod fuzz;

use std::fmt;

use serde::Serialize;

use crate::config::{build_config, CevianConfig};
use crate::conic::{conic_through_5, Conic, ConicClass, LineSection};
use crate::error::{GeometryError, Result};
use crate::kernel::{join, HLine, HPoint, Mat3};
use crate::triangle::TriangleRef;

pub use checks::{
    check_center, check_commutator, check_conic_seven_points, check_conjugacy,
    check_lambda_invariance, check_self_polar_structure, check_steiner,
};
pub use fuzz::{
    fuzz, fuzz_with, sample_config, ConfigKind, FirstFailure, FuzzMix, FuzzSummary, StatusCounts,
};

/// Stable ids in report order.
pub const REGISTRY: [&str; 19] = [
    "thm2.1",
    "cor2.2",
    "prop2.3",
    "prop3.1",
    "thm2.4",
    "lem2.5",
    "cor2.6",
    "rem_Keta",
    "rem_etalambda",
    "thm2.7",
    "cor2.8",
    "thm3.2",
    "thm3.3",
    "thm3.4",
    "cor3.5",
    "thm3.6",
    "thm4.1",
    "cor4.2",
    "thm4.3",
];

fn registry_index(id: &str) -> usize {
    REGISTRY.iter().position(|r| *r == id).unwrap_or(usize::MAX)
}

/// The first violated clause, with both sides in canonical text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.clause, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    HypothesisNotMet,
    Failed(Witness),
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::HypothesisNotMet => "hypothesis_not_met",
            CheckStatus::Failed(_) => "FAILED",
        }
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, CheckStatus::Failed(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: &'static str,
    pub status: CheckStatus,
    /// Every flag consulted, in evaluation order.
    pub hypotheses: Vec<(String, bool)>,
}

impl TheoremReport {
    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            CheckStatus::Failed(w) => Some(w),
            _ => None,
        }
    }
}

/// Why a clause body stopped early.
pub(crate) enum Stop {
    Fail(Witness),
    Degenerate(String),
}

pub(crate) type Step<T = ()> = std::result::Result<T, Stop>;

pub(crate) struct Check {
    id: &'static str,
    hypotheses: Vec<(String, bool)>,
    gate: bool,
}

impl Check {
    pub(crate) fn new(id: &'static str) -> Self {
        Check { id, hypotheses: Vec::new(), gate: true }
    }

    /// A precondition: when false the body is skipped.
    pub(crate) fn hyp(mut self, name: &str, ok: bool) -> Self {
        self.gate &= ok;
        self.hypotheses.push((name.to_string(), ok));
        self
    }

    /// A recorded flag that only selects which clauses run.
    pub(crate) fn note(mut self, name: &str, ok: bool) -> Self {
        self.hypotheses.push((name.to_string(), ok));
        self
    }

    pub(crate) fn run(mut self, body: impl FnOnce() -> Step) -> TheoremReport {
        let status = if !self.gate {
            CheckStatus::HypothesisNotMet
        } else {
            match body() {
                Ok(()) => CheckStatus::Holds,
                Err(Stop::Fail(w)) => CheckStatus::Failed(w),
                Err(Stop::Degenerate(what)) => {
                    self.hypotheses.push((format!("nondegenerate: {what}"), false));
                    CheckStatus::HypothesisNotMet
                }
            }
        };
        TheoremReport { id: self.id, status, hypotheses: self.hypotheses }
    }
}

pub(crate) fn nd<T, E>(what: &str, r: std::result::Result<T, E>) -> Step<T> {
    r.map_err(|_| Stop::Degenerate(what.to_string()))
}

pub(crate) fn some<T>(what: &str, r: Option<T>) -> Step<T> {
    r.ok_or_else(|| Stop::Degenerate(what.to_string()))
}

pub(crate) fn fail(clause: &str, lhs: impl ToString, rhs: impl ToString) -> Stop {
    Stop::Fail(Witness { clause: clause.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() })
}

pub(crate) fn ensure(clause: &str, ok: bool, lhs: impl FnOnce() -> String, rhs: &str) -> Step {
    if ok {
        Ok(())
    } else {
        Err(fail(clause, lhs(), rhs))
    }
}

pub(crate) fn same<T: PartialEq + fmt::Display>(clause: &str, lhs: &T, rhs: &T) -> Step {
    if lhs == rhs {
        Ok(())
    } else {
        Err(fail(clause, lhs, rhs))
    }
}

pub(crate) fn same_map(clause: &str, lhs: &Mat3, rhs: &Mat3) -> Step {
    if lhs.maps_equal(rhs) {
        Ok(())
    } else {
        Err(fail(clause, fmt_ints(&lhs.canonical_integers()), fmt_ints(&rhs.canonical_integers())))
    }
}

pub(crate) fn on_line(clause: &str, p: &HPoint, l: &HLine) -> Step {
    if crate::kernel::incident(p, l) {
        Ok(())
    } else {
        Err(fail(clause, p, l))
    }
}

pub(crate) fn on_conic(clause: &str, c: &Conic, p: &HPoint) -> Step {
    if c.contains(p) {
        Ok(())
    } else {
        Err(fail(clause, format!("{p} gives {}", c.bilinear(p, p)), "0"))
    }
}

/// All `lines` pass through one point, which is returned.
pub(crate) fn concurrent(clause: &str, lines: &[HLine]) -> Step<HPoint> {
    let x = nd(clause, crate::kernel::meet(&lines[0], &lines[1]))?;
    for l in &lines[2..] {
        on_line(clause, &x, l)?;
    }
    Ok(x)
}

pub(crate) fn line(what: &str, a: &HPoint, b: &HPoint) -> Step<HLine> {
    nd(what, join(a, b))
}

fn fmt_ints(v: &[num_bigint::BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

/// Shared state for the checks on one configuration.
pub struct Env<'a> {
    pub cfg: &'a CevianConfig,
    /// Conic through A, B, C, P, Q when the fit is unique.
    pub conic: Option<Conic>,
}

impl<'a> Env<'a> {
    pub fn new(cfg: &'a CevianConfig) -> Self {
        let [a, b, c] = cfg.tri.vertices();
        let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).ok();
        Env { cfg, conic }
    }

    pub(crate) fn conic(&self) -> Step<&Conic> {
        some("conic through A, B, C, P, Q", self.conic.as_ref())
    }
}

/// Every registry id for one configuration, in registry order.
pub fn run_config(cfg: &CevianConfig) -> Vec<TheoremReport> {
    let env = Env::new(cfg);
    let mut out = Vec::with_capacity(REGISTRY.len());
    out.extend(check_conic_seven_points(&env));
    out.extend(check_self_polar_structure(&env));
    out.extend(check_conjugacy(&env));
    out.extend(check_commutator(&env));
    out.extend(check_lambda_invariance(&env));
    out.extend(check_center(&env));
    out.push(check_steiner(&env));
    out.sort_by_key(|r| registry_index(r.id));
    out
}

pub fn run_all(tri: &TriangleRef, p: &HPoint) -> Result<Vec<TheoremReport>> {
    let cfg = build_config(tri, p)?;
    Ok(run_config(&cfg))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaIsometry {
    Rotation,
    ParallelDisplacement,
    Translation,
    Glide,
}

impl LambdaIsometry {
    pub fn as_str(&self) -> &'static str {
        match self {
            LambdaIsometry::Rotation => "rotation",
            LambdaIsometry::ParallelDisplacement => "parallel_displacement",
            LambdaIsometry::Translation => "translation",
            LambdaIsometry::Glide => "glide",
        }
    }
}

/// The kind of motion `λ` induces in the projective model whose absolute
/// is the cevian conic.
pub fn classify_lambda_isometry(cfg: &CevianConfig) -> Result<LambdaIsometry> {
    let [a, b, c] = cfg.tri.vertices();
    let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q])?;
    if conic.is_degenerate() {
        return Err(GeometryError::DegenerateConic);
    }
    let gv = cfg.gv().ok_or(GeometryError::DegenerateConic)?;
    isometry_kind(&conic, &gv, &cfg.maps.t_p.apply_line(&gv))
}

/// `λ` as the product of the harmonic homologies with axes `axis` and
/// `image`, which both pass through the center of `conic`.
pub fn isometry_kind(conic: &Conic, axis: &HLine, image: &HLine) -> Result<LambdaIsometry> {
    Ok(match conic.classify() {
        ConicClass::Degenerate => return Err(GeometryError::DegenerateConic),
        ConicClass::Ellipse => LambdaIsometry::Rotation,
        ConicClass::Parabola => LambdaIsometry::ParallelDisplacement,
        ConicClass::Hyperbola => {
            let secant = |l: &HLine| conic.section(l) == LineSection::Secant;
            if secant(axis) == secant(image) {
                LambdaIsometry::Translation
            } else {
                LambdaIsometry::Glide
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{fixed_points, AffineMap, FixedPoints};
    use crate::kernel::{int, rat};
    use crate::triangle::{bary_to_point, Bary};

    fn t2() -> TriangleRef {
        TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap()
    }

    fn statuses(reports: &[TheoremReport]) -> Vec<(&'static str, &'static str)> {
        reports.iter().map(|r| (r.id, r.status.as_str())).collect()
    }

    #[test]
    fn gergonne_point_satisfies_everything_applicable() {
        let reports = run_all(&t2(), &HPoint::xy(rat(8, 11), rat(9, 11))).unwrap();
        assert_eq!(reports.len(), REGISTRY.len());
        for (r, id) in reports.iter().zip(REGISTRY) {
            assert_eq!(r.id, id);
            let want = if id == "thm4.3" { "hypothesis_not_met" } else { "holds" };
            assert_eq!(r.status.as_str(), want, "{id}");
        }
    }

    #[test]
    fn median_point_keeps_the_unconditional_results() {
        let tri = t2();
        let p = bary_to_point(&tri, &Bary::from_i64(2, 1, 1).unwrap());
        let reports = run_all(&tri, &p).unwrap();
        for (id, status) in statuses(&reports) {
            let want = match id {
                "cor2.2" | "thm2.7" | "cor2.8" => "holds",
                _ => "hypothesis_not_met",
            };
            assert_eq!(status, want, "{id}");
        }
    }

    #[test]
    fn steiner_point_reaches_the_asymptote_result() {
        let tri = t2();
        let p = bary_to_point(&tri, &Bary::from_i64(-3, -6, 2).unwrap());
        let reports = run_all(&tri, &p).unwrap();
        let thm43 = reports.iter().find(|r| r.id == "thm4.3").unwrap();
        assert_eq!(thm43.status, CheckStatus::Holds);
        assert!(reports.iter().all(|r| !r.status.is_failed()));
    }

    #[test]
    fn steiner_branch_on_the_median_is_gated() {
        let tri = t2();
        let p = bary_to_point(&tri, &Bary::from_i64(-2, -2, 1).unwrap());
        let reports = run_all(&tri, &p).unwrap();
        let thm43 = reports.iter().find(|r| r.id == "thm4.3").unwrap();
        assert_eq!(thm43.status, CheckStatus::HypothesisNotMet);
    }

    #[test]
    fn inadmissible_points_are_rejected() {
        assert_eq!(run_all(&t2(), &HPoint::xy(int(2), int(0))).unwrap_err(), GeometryError::Inadmissible);
        assert_eq!(run_all(&t2(), &t2().centroid()).unwrap_err(), GeometryError::IsCentroid);
    }

    #[test]
    fn degenerate_construction_is_not_a_failure() {
        let report = Check::new("thm2.1").run(|| Err(Stop::Degenerate("V".into())));
        assert_eq!(report.status, CheckStatus::HypothesisNotMet);
        assert_eq!(report.hypotheses, vec![("nondegenerate: V".to_string(), false)]);
        let report = Check::new("thm2.1").run(|| same("P = Q", &int(1), &int(2)));
        assert_eq!(report.witness().unwrap().clause, "P = Q");
    }

    #[test]
    fn gergonne_lambda_is_a_translation() {
        let tri = t2();
        let cfg = build_config(&tri, &HPoint::xy(rat(8, 11), rat(9, 11))).unwrap();
        assert_eq!(classify_lambda_isometry(&cfg).unwrap(), LambdaIsometry::Translation);
    }

    #[test]
    fn isometry_kind_covers_every_branch() {
        let hyperbola = Conic::from_i64([1, 0, -1, 0, 0, -1]).unwrap(); // x² − y² = 1
        let x_axis = HLine::from_i64(0, 1, 0).unwrap();
        let y_axis = HLine::from_i64(1, 0, 0).unwrap();
        let steep = HLine::from_i64(2, -1, 0).unwrap();
        assert_eq!(isometry_kind(&hyperbola, &x_axis, &x_axis).unwrap(), LambdaIsometry::Translation);
        assert_eq!(isometry_kind(&hyperbola, &y_axis, &steep).unwrap(), LambdaIsometry::Translation);
        assert_eq!(isometry_kind(&hyperbola, &y_axis, &x_axis).unwrap(), LambdaIsometry::Glide);
        assert_eq!(isometry_kind(&hyperbola, &x_axis, &y_axis).unwrap(), LambdaIsometry::Glide);
        let circle = Conic::from_i64([1, 0, 1, 0, 0, -1]).unwrap();
        assert_eq!(isometry_kind(&circle, &x_axis, &y_axis).unwrap(), LambdaIsometry::Rotation);
        let parabola = Conic::from_i64([2, 0, 0, 0, -1, 0]).unwrap(); // 2x² = 2y
        assert_eq!(
            isometry_kind(&parabola, &y_axis, &y_axis).unwrap(),
            LambdaIsometry::ParallelDisplacement
        );
        let pair = Conic::from_i64([1, 0, -1, 0, 0, 0]).unwrap();
        assert!(isometry_kind(&pair, &x_axis, &y_axis).is_err());
    }

    #[test]
    fn parabola_motion_has_only_the_infinite_center_fixed() {
        // (x, y) ↦ (x + 1, y + 2x + 1) preserves y = x²
        let m = AffineMap::new(Mat3::from_i64([[1, 0, 1], [2, 1, 1], [0, 0, 1]])).unwrap();
        let parabola = Conic::from_i64([2, 0, 0, 0, -1, 0]).unwrap();
        assert_eq!(parabola.map(m.matrix()).unwrap(), parabola);
        assert_eq!(fixed_points(&m), FixedPoints::None);
        let z = parabola.center().unwrap();
        assert!(z.is_infinite());
        assert_eq!(m.apply(&z), z);
    }
}
