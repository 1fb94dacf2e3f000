//! Seeded random configurations and the aggregated per-id summary.
//!
//! Config `i` draws from its own ChaCha stream (`seed`, stream `i`), so the
//! summary does not depend on how indices are split across workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{run_config, Witness, REGISTRY};
use crate::config::build_config;
use crate::kernel::{fmt_rat, rat, HPoint, Rat};
use crate::triangle::{
    admissible, bary_to_point, on_median, on_steiner_circumellipse, steiner_point_from_direction,
    Bary, TriangleRef,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigKind {
    Generic,
    Steiner,
    Median,
}

/// Which generators feed the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzMix {
    /// 23 of every 25 indices generic, one Steiner, one median.
    Mixed,
    Steiner,
    Median,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub id: String,
    pub holds: usize,
    pub hypothesis_not_met: usize,
    #[serde(rename = "FAILED")]
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstFailure {
    pub index: usize,
    pub kind: ConfigKind,
    /// Enough to replay with `verify --triangle .. --point ..`.
    pub triangle: String,
    pub point: String,
    pub id: String,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub count: usize,
    pub bound: u32,
    pub generic: usize,
    pub steiner: usize,
    pub median: usize,
    pub counts: Vec<StatusCounts>,
    pub failed: usize,
    pub first_failure: Option<FirstFailure>,
}

fn random_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let d = rng.random_range(1..=bound);
    let n = rng.random_range(-bound * d..=bound * d);
    rat(n, d)
}

fn random_triangle(rng: &mut ChaCha8Rng, bound: i64) -> TriangleRef {
    loop {
        let mut c = [(0, 0); 3];
        for v in &mut c {
            *v = (rng.random_range(-bound..=bound), rng.random_range(-bound..=bound));
        }
        if let Ok(t) = TriangleRef::from_i64(c) {
            return t;
        }
    }
}

fn usable(tri: &TriangleRef, p: &HPoint) -> bool {
    p.is_ordinary() && admissible(tri, p) && *p != tri.centroid() && build_config(tri, p).is_ok()
}

fn generic_point(rng: &mut ChaCha8Rng, tri: &TriangleRef, bound: i64) -> Option<HPoint> {
    (0..64).find_map(|_| {
        let p = HPoint::xy(random_rat(rng, bound), random_rat(rng, bound));
        let ok = !on_median(tri, &p) && !on_steiner_circumellipse(tri, &p) && usable(tri, &p);
        ok.then_some(p)
    })
}

fn steiner_point(rng: &mut ChaCha8Rng, tri: &TriangleRef, bound: i64) -> Option<HPoint> {
    (0..64).find_map(|_| {
        let dx = rng.random_range(-bound..=bound);
        let dy = rng.random_range(-bound..=bound);
        let d = HPoint::from_i64(dx, dy, 0).ok()?;
        let p = steiner_point_from_direction(tri, &d).ok()?;
        (!on_median(tri, &p) && usable(tri, &p)).then_some(p)
    })
}

fn median_point(rng: &mut ChaCha8Rng, tri: &TriangleRef, bound: i64) -> Option<HPoint> {
    let excluded = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(-2, 1), rat(-1, 2)];
    (0..64).find_map(|_| {
        let t = random_rat(rng, bound);
        if excluded.contains(&t) {
            return None;
        }
        let k = rng.random_range(0..3);
        let mut coords = [rat(1, 1), rat(1, 1), rat(1, 1)];
        coords[k] = t;
        let p = bary_to_point(tri, &Bary::from_rats(&coords).ok()?);
        usable(tri, &p).then_some(p)
    })
}

fn kind_for(mix: FuzzMix, index: usize) -> ConfigKind {
    match mix {
        FuzzMix::Steiner => ConfigKind::Steiner,
        FuzzMix::Median => ConfigKind::Median,
        FuzzMix::Mixed => match index % 25 {
            23 => ConfigKind::Steiner,
            24 => ConfigKind::Median,
            _ => ConfigKind::Generic,
        },
    }
}

/// The configuration fuzzed at `index`.
pub fn sample_config(
    seed: u64,
    index: usize,
    bound: u32,
    mix: FuzzMix,
) -> (ConfigKind, TriangleRef, HPoint) {
    let bound = i64::from(bound.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let kind = kind_for(mix, index);
    loop {
        let tri = random_triangle(&mut rng, bound);
        let p = match kind {
            ConfigKind::Generic => generic_point(&mut rng, &tri, bound),
            ConfigKind::Steiner => steiner_point(&mut rng, &tri, bound),
            ConfigKind::Median => median_point(&mut rng, &tri, bound),
        };
        if let Some(p) = p {
            return (kind, tri, p);
        }
    }
}

struct Outcome {
    kind: ConfigKind,
    tri: TriangleRef,
    p: HPoint,
    reports: Vec<super::TheoremReport>,
}

fn run_index(seed: u64, index: usize, bound: u32, mix: FuzzMix) -> Outcome {
    let (kind, tri, p) = sample_config(seed, index, bound, mix);
    let cfg = build_config(&tri, &p).expect("sampled configs are admissible");
    Outcome { kind, reports: run_config(&cfg), tri, p }
}

fn fmt_point(p: &HPoint) -> String {
    match p.cartesian() {
        Ok((x, y)) => format!("{},{}", fmt_rat(&x), fmt_rat(&y)),
        Err(_) => p.to_string(),
    }
}

pub fn fuzz(seed: u64, count: usize, bound: u32) -> FuzzSummary {
    fuzz_with(seed, count, bound, FuzzMix::Mixed, 1)
}

/// Run `count` configurations on `jobs` workers and aggregate in index order.
pub fn fuzz_with(seed: u64, count: usize, bound: u32, mix: FuzzMix, jobs: usize) -> FuzzSummary {
    let outcomes: Vec<Outcome> = if jobs <= 1 {
        (0..count).map(|i| run_index(seed, i, bound, mix)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| (0..count).into_par_iter().map(|i| run_index(seed, i, bound, mix)).collect())
    };

    let mut counts: Vec<StatusCounts> = REGISTRY
        .iter()
        .map(|id| StatusCounts { id: id.to_string(), ..Default::default() })
        .collect();
    let mut summary = FuzzSummary {
        seed,
        count,
        bound,
        generic: 0,
        steiner: 0,
        median: 0,
        counts: Vec::new(),
        failed: 0,
        first_failure: None,
    };
    for (index, o) in outcomes.iter().enumerate() {
        match o.kind {
            ConfigKind::Generic => summary.generic += 1,
            ConfigKind::Steiner => summary.steiner += 1,
            ConfigKind::Median => summary.median += 1,
        }
        for (slot, r) in counts.iter_mut().zip(&o.reports) {
            match r.witness() {
                None if r.status == super::CheckStatus::Holds => slot.holds += 1,
                None => slot.hypothesis_not_met += 1,
                Some(w) => {
                    slot.failed += 1;
                    summary.failed += 1;
                    if summary.first_failure.is_none() {
                        let [a, b, c] = o.tri.vertices();
                        summary.first_failure = Some(FirstFailure {
                            index,
                            kind: o.kind,
                            triangle: format!("{};{};{}", fmt_point(a), fmt_point(b), fmt_point(c)),
                            point: fmt_point(&o.p),
                            id: r.id.to_string(),
                            witness: w.clone(),
                        });
                    }
                }
            }
        }
    }
    summary.counts = counts;
    summary
}
