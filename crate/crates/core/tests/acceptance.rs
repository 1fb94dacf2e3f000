//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails. All comparisons are exact; there is no tolerance.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use cevconic::affine::{classify_map, harmonic_homology, MapClass};
use cevconic::config::{build_config, CevianConfig};
use cevconic::conic::{conic_through_5, ConicClass};
use cevconic::error::GeometryError;
use cevconic::kernel::{collinear, int, join, meet, midpoint, rat, sq_dist, HLine, HPoint, Mat3, Rat};
use cevconic::theorems::{fuzz_with, sample_config, FuzzMix, REGISTRY};
use cevconic::triangle::{isotomic, TriangleRef};

type Outcome = Result<String, String>;

fn t1() -> TriangleRef {
    TriangleRef::from_i64([(0, 0), (4, 0), (1, 3)]).unwrap()
}

fn t2() -> TriangleRef {
    TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap()
}

fn gergonne() -> CevianConfig {
    build_config(&t2(), &HPoint::xy(rat(8, 11), rat(9, 11))).unwrap()
}

fn pt(x: Rat, y: Rat) -> HPoint {
    HPoint::xy(x, y)
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

/// Exact square root of a rational square.
fn rat_sqrt(r: &Rat) -> Rat {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    let s = Rat::new(n, d);
    assert_eq!(&(&s * &s), r, "not a rational square");
    s
}

fn circumcenter(tri: &TriangleRef) -> (HPoint, Rat) {
    let [a, b, c] = tri.vertices();
    let ((ax, ay), (bx, by), (cx, cy)) = (a.cartesian().unwrap(), b.cartesian().unwrap(), c.cartesian().unwrap());
    let n2 = |x: &Rat, y: &Rat| x * x + y * y;
    let d = int(2) * ((&ax * (&by - &cy)) + (&bx * (&cy - &ay)) + (&cx * (&ay - &by)));
    let ox = (n2(&ax, &ay) * (&by - &cy) + n2(&bx, &by) * (&cy - &ay) + n2(&cx, &cy) * (&ay - &by)) / &d;
    let oy = (n2(&ax, &ay) * (&cx - &bx) + n2(&bx, &by) * (&ax - &cx) + n2(&cx, &cy) * (&bx - &ax)) / &d;
    let r2 = n2(&(&ax - &ox), &(&ay - &oy));
    (pt(ox, oy), r2)
}

/// Incenter, inradius, nine-point center and nine-point radius of a
/// triangle with rational side lengths.
fn feuerbach_oracle(tri: &TriangleRef) -> (HPoint, Rat, HPoint, Rat) {
    let [a, b, c] = tri.vertices();
    let xy = |p: &HPoint| p.cartesian().unwrap();
    let side = |p: &HPoint, q: &HPoint| rat_sqrt(&sq_dist(p, q).unwrap());
    let (la, lb, lc) = (side(b, c), side(c, a), side(a, b));
    let per = &la + &lb + &lc;
    let ((ax, ay), (bx, by), (cx, cy)) = (xy(a), xy(b), xy(c));
    let incenter = pt(
        (&la * &ax + &lb * &bx + &lc * &cx) / &per,
        (&la * &ay + &lb * &by + &lc * &cy) / &per,
    );
    // area = r·s
    let area2 = ((&bx - &ax) * (&cy - &ay) - (&cx - &ax) * (&by - &ay)).abs();
    let r = &area2 / &per;
    let (o, r2) = circumcenter(tri);
    let (ox, oy) = xy(&o);
    // H = A + B + C − 2O
    let hx = &ax + &bx + &cx - int(2) * &ox;
    let hy = &ay + &by + &cy - int(2) * &oy;
    let nine = pt((&ox + &hx) / int(2), (&oy + &hy) / int(2));
    (incenter, r, nine, rat_sqrt(&r2) / int(2))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (i, r, n, half_r) = feuerbach_oracle(&t2());
    expect("incenter", &i, &pt(int(1), int(1)))?;
    expect("inradius", &r, &int(1))?;
    expect("nine-point center", &n, &pt(int(1), rat(3, 4)))?;
    expect("nine-point radius", &half_r, &rat(5, 4))?;
    let (ix, iy) = i.cartesian().unwrap();
    let (nx, ny) = n.cartesian().unwrap();
    let dist = rat_sqrt(&sq_dist(&i, &n).unwrap());
    expect("internal tangency |IN| = R/2 - r", &dist, &(&half_r - &r))?;
    let feuerbach = pt(&nx + &half_r * (&ix - &nx) / &dist, &ny + &half_r * (&iy - &ny) / &dist);

    let cfg = gergonne();
    let [a, b, c] = cfg.tri.vertices();
    let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).map_err(|e| e.to_string())?;
    let z = conic.center().map_err(|e| e.to_string())?;
    expect("center", &z, &pt(int(1), int(2)))?;
    expect("center = Feuerbach point", &z, &feuerbach)?;
    expect("class", conic.classify(), ConicClass::Hyperbola)?;
    expect("lambda(1,2)", cfg.maps.lambda.apply(&z), z.clone())?;
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("Z = {z} = Feuerbach point, hyperbola, fixed by lambda, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let cfg = gergonne();
    let gv = cfg.gv().ok_or("GV undefined")?;
    expect("GV", &gv, &HLine::from_i64(3, 1, -5).unwrap())?;
    expect("G1", &cfg.g1, &pt(rat(13, 15), rat(14, 15)))?;
    expect("G2", &cfg.g2, &pt(rat(9, 5), rat(16, 15)))?;
    let j = cfg.j.clone().ok_or("J undefined")?;
    let jp = cfg.j_prime.clone().ok_or("J' undefined")?;
    expect("J", &j, &pt(rat(19, 22), rat(10, 11)))?;
    expect("J'", &jp, &pt(rat(20, 11), rat(23, 22)))?;
    let z = pt(int(1), int(2));
    expect("GV . G1J", meet(&gv, &join(&cfg.g1, &j).unwrap()).unwrap(), z.clone())?;
    expect("GV . G2J'", meet(&gv, &join(&cfg.g2, &jp).unwrap()).unwrap(), z.clone())?;
    Ok("GV: 3x + y - 5 = 0 meets G1J and G2J' at (1, 2)".into())
}

fn criterion_3() -> Outcome {
    let cfg = gergonne();
    let eta = cfg.maps.eta.as_ref().ok_or("eta undefined")?;
    expect("eta(G1)", eta.apply(&pt(rat(13, 15), rat(14, 15))), pt(rat(9, 5), rat(16, 15)))?;
    let mid = midpoint(&cfg.g1, &cfg.g2).unwrap();
    expect("midpoint(G1, G2)", &mid, &pt(rat(4, 3), int(1)))?;
    expect("midpoint = G", &mid, &cfg.g)?;
    let lhs = eta.matrix().compose(cfg.maps.t_p.matrix());
    let rhs = cfg.maps.t_pp.matrix().compose(eta.matrix());
    if !lhs.maps_equal(&rhs) {
        return Err(format!("eta T_P = {lhs:?} but T_P' eta = {rhs:?}"));
    }
    Ok("eta(G1) = G2, midpoint (4/3, 1) = G, eta T_P = T_P' eta".into())
}

fn criterion_4() -> Outcome {
    let tri = t1();
    let cfg = build_config(&tri, &pt(int(1), int(1))).map_err(|e| e.to_string())?;
    let (o, _) = circumcenter(&tri);
    expect("circumcenter", &o, &pt(int(2), int(1)))?;
    expect("Q' = K(P)", &cfg.q_prime, &o)?;
    let [a, b, c] = tri.vertices();
    let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).map_err(|e| e.to_string())?;
    let pulled = conic.map(cfg.maps.t_p.inverse().matrix()).map_err(|e| e.to_string())?;
    for v in &cfg.anticevian_q {
        if !pulled.contains(v) {
            return Err(format!("anticevian vertex {v} is off {pulled}"));
        }
    }
    Ok(format!("Q' = (2, 1) = circumcenter; anticevian triangle of Q on {pulled}"))
}

struct CliRun {
    json: String,
    elapsed: Duration,
    code: Option<i32>,
}

fn cli_fuzz(jobs: usize) -> CliRun {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cevconic"))
        .args(["fuzz", "--seed", "42", "--count", "1000", "--bound", "10", "--format", "json"])
        .args(["--jobs", &jobs.to_string()])
        .env_remove("CEVCONIC_SEED")
        .output()
        .expect("run cevconic");
    CliRun {
        json: String::from_utf8(out.stdout).expect("utf-8"),
        elapsed: start.elapsed(),
        code: out.status.code(),
    }
}

fn criterion_5(run: &CliRun) -> Outcome {
    let v: Value = serde_json::from_str(&run.json).map_err(|e| e.to_string())?;
    let ids: Vec<&str> = v["counts"]
        .as_array()
        .ok_or("no counts")?
        .iter()
        .filter_map(|c| c["id"].as_str())
        .collect();
    expect("registry", ids, REGISTRY.to_vec())?;
    expect("FAILED", v["failed"].as_u64(), Some(0))?;
    expect("exit code", run.code, Some(0))?;
    let generic = v["generic"].as_u64().unwrap_or(0);
    let thm41 = v["counts"].as_array().unwrap().iter().find(|c| c["id"] == "thm4.1").unwrap();
    let exercised = thm41["holds"].as_u64().unwrap_or(0);
    if generic < 900 || exercised < 900 {
        return Err(format!("generic configs {generic}, thm4.1 holds {exercised}"));
    }
    if run.elapsed >= Duration::from_secs(60) {
        return Err(format!("took {:?}", run.elapsed));
    }
    Ok(format!("FAILED: 0; {generic} generic configs, thm4.1 holds on {exercised}; {:?}", run.elapsed))
}

fn criterion_6() -> Outcome {
    for index in 0..100 {
        let (_, tri, p) = sample_config(42, index, 10, FuzzMix::Steiner);
        let cfg = build_config(&tri, &p).map_err(|e| e.to_string())?;
        let [a, b, c] = tri.vertices();
        let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).map_err(|e| e.to_string())?;
        let (gx, gy) = cfg.g.cartesian().unwrap();
        let (hx, hy) = cfg.g1.cartesian().unwrap();
        let want = pt(&gx + (&hx - &gx) / int(3), &gy + (&hy - &gy) / int(3));
        let at = |what: &str| format!("config {index} (P = {p}): {what}");
        expect(&at("Z"), conic.center().map_err(|e| e.to_string())?, want)?;
        expect(&at("class"), conic.classify(), ConicClass::Hyperbola)?;
        expect(&at("q_inf(G1 - G)"), conic.eval_infinity_form(&(&hx - &gx), &(&hy - &gy)), Rat::zero())?;
    }
    let summary = fuzz_with(42, 100, 10, FuzzMix::Steiner, 1);
    expect("FAILED", summary.failed, 0)?;
    let thm43 = summary.counts.iter().find(|c| c.id == "thm4.3").unwrap();
    expect("thm4.3 holds", thm43.holds, 100)?;
    Ok("100 Steiner configs: Z = G + (G1 - G)/3, hyperbola, q_inf(G1 - G) = 0, FAILED: 0".into())
}

fn criterion_7() -> Outcome {
    let mut unique_fits = Vec::new();
    for index in 0..100 {
        let (_, tri, p) = sample_config(42, index, 10, FuzzMix::Median);
        let cfg = build_config(&tri, &p).map_err(|e| e.to_string())?;
        let at = |what: &str| format!("config {index} (P = {p}): {what}");
        let pp = join(&cfg.p, &cfg.p_prime).map_err(|e| e.to_string())?;
        let tp = cfg.maps.t_p.apply(&cfg.p_prime);
        let tpp = cfg.maps.t_pp.apply(&cfg.p);
        expect(&at("P, P', T_P(P') collinear"), collinear(&cfg.p, &cfg.p_prime, &tp), true)?;
        expect(&at("T_P'(P) on PP'"), cevconic::kernel::incident(&tpp, &pp), true)?;
        if !matches!(classify_map(&cfg.maps.commutator), MapClass::Translation { .. }) {
            return Err(at("S' is not a translation"));
        }
        let [a, b, c] = tri.vertices();
        match conic_through_5([a, b, c, &cfg.p, &cfg.q]) {
            Err(GeometryError::NoUniqueConic) => {}
            Ok(conic) => unique_fits.push((index, conic)),
            Err(e) => return Err(at(&e.to_string())),
        }
    }
    if let Some((index, conic)) = unique_fits.first() {
        return Err(format!(
            "collinearity and translation hold on all 100, but conic_through_5 returned a unique \
             conic instead of NoUniqueConic in {}/100 configs (first: config {index}, {conic}, {})",
            unique_fits.len(),
            conic.classify()
        ));
    }
    Ok("100 median configs: NoUniqueConic, P P' T_P(P') T_P'(P) collinear, S' a translation".into())
}

fn criterion_8() -> Outcome {
    let id = Mat3::identity();
    let mut counts = [0usize; 6];
    for index in 0..1000 {
        let (_, tri, p) = sample_config(42, index, 10, FuzzMix::Mixed);
        let cfg = build_config(&tri, &p).map_err(|e| e.to_string())?;
        let at = |what: &str| format!("config {index} (P = {p}): {what}");
        let m = &cfg.maps;
        if let Some(eta) = &m.eta {
            let e = eta.matrix();
            expect(&at("eta^2 = id"), e.compose(e).maps_equal(&id), true)?;
            let lam = m.lambda.matrix();
            let lhs = e.compose(lam).compose(e);
            expect(&at("eta lambda eta = lambda^-1"), lhs.maps_equal(m.lambda.inverse().matrix()), true)?;
            let k = m.k.matrix();
            expect(&at("K eta = eta K"), k.compose(e).maps_equal(&e.compose(k)), true)?;
            counts[0] += 1;
            counts[1] += 1;
            counts[2] += 1;
        }
        // on the Steiner circumellipse V is V_inf and mu_G has no axis
        let axis = match (&cfg.v, &cfg.v_inf) {
            (Some(v), Some(v_inf)) => join(v, v_inf).ok(),
            _ => None,
        };
        if let Some(axis) = axis {
            let mu = harmonic_homology(&cfg.g, &axis).map_err(|e| at(&e.to_string()))?;
            expect(&at("mu_G^2 = id"), mu.compose(&mu).maps_equal(&id), true)?;
            counts[3] += 1;
        }
        let back = isotomic(&tri, &isotomic(&tri, &p).unwrap()).unwrap();
        expect(&at("iota^2 = id"), back, p.clone())?;
        counts[4] += 1;
        let l = m.commutator.linear();
        let unit = l[0][0].is_one() && l[1][1].is_one() && l[0][1].is_zero() && l[1][0].is_zero();
        expect(&at("S' linear part = id"), unit, true)?;
        counts[5] += 1;
    }
    if counts[0] < 900 || counts[3] < 900 {
        return Err(format!("too few configs with eta / mu_G defined: {counts:?}"));
    }
    Ok(format!(
        "eta^2, eta lambda eta, K eta on {}; mu_G^2 on {}; iota^2 and S' linear part on {}",
        counts[0], counts[3], counts[4]
    ))
}

fn criterion_9(single: &CliRun, eight: &CliRun) -> Outcome {
    if single.json.is_empty() {
        return Err("empty output".into());
    }
    if single.json != eight.json {
        return Err("JSON differs between --jobs 1 and --jobs 8".into());
    }
    Ok(format!("--jobs 1 and --jobs 8 JSON identical ({} bytes)", single.json.len()))
}

fn main() {
    let single = cli_fuzz(1);
    let eight = cli_fuzz(8);
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "Feuerbach instance", criterion_1()),
        (2, "center as line intersection", criterion_2()),
        (3, "conjugacy fixture", criterion_3()),
        (4, "orthocenter instance", criterion_4()),
        (5, "fuzz seed 42, 1000 configs", criterion_5(&single)),
        (6, "Steiner circumellipse branch", criterion_6()),
        (7, "median branch", criterion_7()),
        (8, "involution and commutation identities", criterion_8()),
        (9, "determinism across workers", criterion_9(&single, &eight)),
    ];
    let mut failed = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {n} ({name}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
