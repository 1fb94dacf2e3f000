use num_traits::{One, Zero};

use super::{
    concurrent, ensure, fail, line, nd, on_conic, on_line, same, same_map, some, Check, Env,
    Step, TheoremReport,
};
use crate::affine::{classify_map, fixed_points, harmonic_homology, FixedPoints, MapClass};
use crate::conic::{conic_through_5, second_intersection, Conic, ConicClass, SecondPoint};
use crate::kernel::{
    collinear, cross_ratio, int, meet, midpoint, sq_dist, CrossRatio, HPoint, Mat3, Rat,
};
use crate::triangle::{anticevian_triangle, anticomplement, isotomic};

/// Rational points of `c` cut out by lines through `base`, which must lie
/// on `c`. Only ordinary points distinct from `base` are kept.
pub(crate) fn conic_points(c: &Conic, base: &HPoint, n: usize) -> Vec<HPoint> {
    let mut out: Vec<HPoint> = Vec::new();
    for k in 0..80i64 {
        if out.len() == n {
            break;
        }
        let t = if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 };
        let anchor = HPoint::xy(int(t), int(t * t + 7));
        let Ok(l) = crate::kernel::join(base, &anchor) else { continue };
        let Ok(SecondPoint::Other(p)) = second_intersection(c, base, &l) else { continue };
        if p.is_ordinary() && &p != base && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn harmonic(clause: &str, a: &HPoint, b: &HPoint, c: &HPoint, d: &HPoint) -> Step {
    let cr = nd(clause, cross_ratio(a, b, c, d))?;
    if cr.is_harmonic() {
        Ok(())
    } else {
        let shown = match cr {
            CrossRatio::Finite(r) => crate::kernel::fmt_rat(&r),
            CrossRatio::Infinity => "infinity".into(),
        };
        Err(fail(clause, shown, "-1"))
    }
}

/// Coefficients of a binary quadratic form `αx² + βxy + γy²`.
type Form = [Rat; 3];

fn infinity_form(c: &Conic) -> Form {
    let [a, b, cc] = c.infinity_form().map(Rat::from_integer);
    [a, b * int(2), cc]
}

fn proportional(f: &Form, g: &Form) -> bool {
    let nonzero = |h: &Form| h.iter().any(|x| !x.is_zero());
    nonzero(f)
        && nonzero(g)
        && (0..3).all(|i| (0..3).all(|j| &f[i] * &g[j] == &f[j] * &g[i]))
}

fn fmt_form(f: &Form) -> String {
    let s: Vec<String> = f.iter().map(crate::kernel::fmt_rat).collect();
    format!("({})", s.join(", "))
}

/// `q(L·d)` as a form in `d`.
fn pullback(q: &Form, l: &[[Rat; 2]; 2]) -> Form {
    let [a, b, c] = q;
    let [[p, r], [s, t]] = l;
    // q(px + ry, sx + ty)
    [
        a * p * p + b * p * s + c * s * s,
        a * int(2) * p * r + b * (p * t + r * s) + c * int(2) * s * t,
        a * r * r + b * r * t + c * t * t,
    ]
}

/// `det[d, L·d]`: vanishes exactly on the fixed directions of `L`.
fn fixed_direction_form(l: &[[Rat; 2]; 2]) -> Form {
    [l[1][0].clone(), &l[1][1] - &l[0][0], -l[0][1].clone()]
}

fn conic_eq(clause: &str, lhs: &Conic, rhs: &Conic) -> Step {
    same(clause, lhs, rhs)
}

/// thm2.1, cor2.2, thm3.4, cor3.5
pub fn check_conic_seven_points(env: &Env) -> Vec<TheoremReport> {
    let cfg = env.cfg;
    let f = &cfg.flags;
    let [a, b, c] = cfg.tri.vertices();
    let verts = [a, b, c];

    let thm21 = Check::new("thm2.1").hyp("off_median", !f.on_median).run(|| {
        let conic = env.conic()?;
        on_conic("P' on conic", conic, &cfg.p_prime)?;
        on_conic("Q' on conic", conic, &cfg.q_prime)?;
        for i in 0..3 {
            let x = nd(
                "A0P.D0Q'",
                meet(
                    &line("A0P", &cfg.mid_cevian[i], &cfg.p)?,
                    &line("D0Q'", &cfg.medial[i], &cfg.q_prime)?,
                ),
            )?;
            on_conic("A0P.D0Q' on conic", conic, &x)?;
            let y = nd(
                "A0'P'.D0Q",
                meet(
                    &line("A0'P'", &cfg.mid_cevian_prime[i], &cfg.p_prime)?,
                    &line("D0Q", &cfg.medial[i], &cfg.q)?,
                ),
            )?;
            on_conic("A0'P'.D0Q on conic", conic, &y)?;
        }
        for x in [&cfg.p, &cfg.q_prime] {
            let back = nd("isotomic", isotomic(&cfg.tri, x).and_then(|y| isotomic(&cfg.tri, &y)))?;
            same("isotomic conjugation is an involution", &back, x)?;
        }
        Ok(())
    });

    let cor22 = Check::new("cor2.2").note("off_median", !f.on_median).run(|| {
        let t_p = &cfg.maps.t_p;
        let t_pp = &cfg.maps.t_pp;
        let pp = line("PP'", &cfg.p, &cfg.p_prime)?;
        on_line("T_P(P') on PP'", &t_p.apply(&cfg.p_prime), &pp)?;
        on_line("T_P'(P) on PP'", &t_pp.apply(&cfg.p), &pp)?;
        if f.on_median {
            return Ok(());
        }
        let conic = env.conic()?;
        let mut ys = vec![cfg.p_prime.clone()];
        ys.extend(conic_points(conic, a, 4));
        for y in &ys {
            let ty = t_p.apply(y);
            ensure("P, Y, T_P(Y) collinear for Y on conic", collinear(&cfg.p, y, &ty), || {
                format!("Y = {y}, T_P(Y) = {ty}")
            }, "collinear")?;
        }
        let candidates = [cfg.g.clone(), cfg.medial[0].clone(), cfg.mid_cevian[0].clone()];
        let off = some("point off the conic", candidates.into_iter().find(|y| !conic.contains(y)))?;
        let ty = t_p.apply(&off);
        ensure("P, Y, T_P(Y) not collinear for Y off conic", !collinear(&cfg.p, &off, &ty), || {
            format!("Y = {off}, T_P(Y) = {ty}")
        }, "not collinear")
    });

    let lam = &cfg.maps.lambda;
    let lam_inv = lam.inverse();

    let thm34 = Check::new("thm3.4")
        .hyp("off_median", !f.on_median)
        .hyp("off_steiner_circumellipse", !f.on_steiner)
        .run(|| {
            for i in 0..3 {
                let back = lam_inv.apply(verts[i]);
                let fwd = lam.apply(verts[i]);
                let a0p = line("A0P", &cfg.mid_cevian[i], &cfg.p)?;
                let d0q_ = line("D0Q'", &cfg.medial[i], &cfg.q_prime)?;
                let a0p_ = line("A0'P'", &cfg.mid_cevian_prime[i], &cfg.p_prime)?;
                let d0q = line("D0Q", &cfg.medial[i], &cfg.q)?;
                let x = nd("A0P.D0Q'", meet(&a0p, &d0q_))?;
                same("A0P.D0Q' = lambda^-1(A)", &x, &back)?;
                let y = nd("A0'P'.D0Q", meet(&a0p_, &d0q))?;
                same("A0'P'.D0Q = lambda(A)", &y, &fwd)?;
                on_line("DQ through lambda^-1(A)", &back, &line("DQ", &cfg.cevian[i], &cfg.q)?)?;
                on_line(
                    "A3'P' through lambda^-1(A)",
                    &back,
                    &line("A3'P'", &cfg.a3_prime[i], &cfg.p_prime)?,
                )?;
                on_line(
                    "D3Q' through lambda(A)",
                    &fwd,
                    &line("D3Q'", &cfg.cevian_prime[i], &cfg.q_prime)?,
                )?;
                on_line("A3P through lambda(A)", &fwd, &line("A3P", &cfg.a3[i], &cfg.p)?)?;
            }
            Ok(())
        });

    let cor35 = Check::new("cor3.5")
        .hyp("off_median", !f.on_median)
        .hyp("off_steiner_circumellipse", !f.on_steiner)
        .run(|| {
        for i in 0..3 {
            concurrent(
                "PA0, QD, Q'D0, P'A3' concurrent",
                &[
                    line("PA0", &cfg.p, &cfg.mid_cevian[i])?,
                    line("QD", &cfg.q, &cfg.cevian[i])?,
                    line("Q'D0", &cfg.q_prime, &cfg.medial[i])?,
                    line("P'A3'", &cfg.p_prime, &cfg.a3_prime[i])?,
                ],
            )?;
            concurrent(
                "PA3, QD0, Q'D3, P'A0' concurrent",
                &[
                    line("PA3", &cfg.p, &cfg.a3[i])?,
                    line("QD0", &cfg.q, &cfg.medial[i])?,
                    line("Q'D3", &cfg.q_prime, &cfg.cevian_prime[i])?,
                    line("P'A0'", &cfg.p_prime, &cfg.mid_cevian_prime[i])?,
                ],
            )?;
        }
        Ok(())
    });

    vec![thm21, cor22, thm34, cor35]
}

/// prop2.3, prop3.1
pub fn check_self_polar_structure(env: &Env) -> Vec<TheoremReport> {
    let cfg = env.cfg;
    let f = &cfg.flags;

    let prop23 = Check::new("prop2.3")
        .hyp("off_median", !f.on_median)
        .hyp("off_steiner_circumellipse", !f.on_steiner)
        .run(|| {
            let conic = env.conic()?;
            let v = some("V", cfg.v.as_ref())?;
            let v_inf = some("V_inf", cfg.v_inf.as_ref())?;
            let g = &cfg.g;
            let self_polar = nd("self-polar test", conic.is_self_polar(g, v, v_inf))?;
            ensure("G, V, V_inf self-polar", self_polar, || format!("{g}, {v}, {v_inf}"), "self-polar")?;

            let gv = line("GV", g, v)?;
            let z = nd("center", conic.center())?;
            on_line("center on GV", &z, &gv)?;
            same("GV = polar(V_inf)", &gv, &nd("polar", conic.polar(v_inf))?)?;
            on_line("midpoint of PP' on GV", &nd("midpoint PP'", midpoint(&cfg.p, &cfg.p_prime))?, &gv)?;
            on_line("midpoint of QQ' on GV", &nd("midpoint QQ'", midpoint(&cfg.q, &cfg.q_prime))?, &gv)?;

            let axis = line("VV_inf", v, v_inf)?;
            let mu = nd("mu_G", harmonic_homology(g, &axis))?;
            same_map("mu_G squared = id", &mu.compose(&mu), &Mat3::identity())?;
            conic_eq("mu_G fixes the conic", &nd("mu_G(conic)", conic.map(&mu))?, conic)?;
            let mut chords = 0;
            for x1 in conic_points(conic, cfg.tri.a(), 8) {
                if chords == 3 {
                    break;
                }
                let chord = line("chord through G", g, &x1)?;
                let Ok(SecondPoint::Other(x2)) = second_intersection(conic, &x1, &chord) else {
                    continue;
                };
                let x3 = nd("chord . axis", meet(&chord, &axis))?;
                harmonic("(X1, X2; G, X3) = -1", &x1, &x2, g, &x3)?;
                chords += 1;
            }
            if chords < 3 {
                return Err(super::Stop::Degenerate("three chords through G".into()));
            }

            let kp = anticomplement(&cfg.tri, &cfg.p);
            let kpp = anticomplement(&cfg.tri, &cfg.p_prime);
            same("VV_inf = K^-1(PP')", &axis, &line("K^-1(P)K^-1(P')", &kp, &kpp)?)?;
            same("V = midpoint of K^-1(P), K^-1(P')", v, &nd("midpoint", midpoint(&kp, &kpp))?)
        });

    let prop31 = Check::new("prop3.1").hyp("off_median", !f.on_median).run(|| {
        let [a, b, c] = cfg.tri.vertices();
        for (i, vtx) in [a, b, c].into_iter().enumerate() {
            harmonic("(A, P; D, A4) = -1", vtx, &cfg.p, &cfg.cevian[i], &cfg.a4[i])?;
        }
        let conic = env.conic()?;
        let [d, e, ff] = &cfg.cevian;
        let ok = nd("self-polar test", conic.is_self_polar(d, e, ff))?;
        ensure("DEF self-polar", ok, || format!("{d}, {e}, {ff}"), "self-polar")
    });

    vec![prop23, prop31]
}

/// thm2.4, lem2.5, cor2.6, rem_Keta, rem_etalambda
pub fn check_conjugacy(env: &Env) -> Vec<TheoremReport> {
    let cfg = env.cfg;
    let f = &cfg.flags;
    let m = &cfg.maps;
    let eta = || some("eta", m.eta.as_ref()).map(|e| e.matrix().clone());
    let gate = |id| {
        Check::new(id).hyp("P' ordinary", f.pprime_ordinary).hyp("off_median", !f.on_median)
    };

    let thm24 = gate("thm2.4").run(|| {
        let eta = eta()?;
        same_map(
            "eta T_P = T_P' eta",
            &eta.compose(m.t_p.matrix()),
            &m.t_pp.matrix().compose(&eta),
        )?;
        same_map("eta squared = id", &eta.compose(&eta), &Mat3::identity())
    });

    let lem25 = Check::new("lem2.5").hyp("off_median", !f.on_median).run(|| {
        same("G = midpoint of G1G2", &cfg.g, &nd("midpoint", midpoint(&cfg.g1, &cfg.g2))?)?;
        let g1g2 = line("G1G2", &cfg.g1, &cfg.g2)?;
        let pp = line("PP'", &cfg.p, &cfg.p_prime)?;
        same("G1G2 parallel to PP'", &g1g2.point_at_infinity(), &pp.point_at_infinity())
    });

    let cor26 = gate("cor2.6").run(|| {
        let eta = eta()?;
        let x = some("X", cfg.x.as_ref())?;
        let xp = some("X'", cfg.x_prime.as_ref())?;
        let ex = nd("eta(X)", eta.apply_map(x))?;
        same("eta(X) = X'", &ex, xp)?;
        if x.is_ordinary() && x != xp {
            let xx = line("XX'", x, xp)?;
            let pp = line("PP'", &cfg.p, &cfg.p_prime)?;
            same("XX' parallel to PP'", &xx.point_at_infinity(), &pp.point_at_infinity())?;
        }
        Ok(())
    });

    let keta = gate("rem_Keta").run(|| {
        let eta = eta()?;
        let k = m.k.matrix();
        same_map("K eta = eta K", &k.compose(&eta), &eta.compose(k))
    });

    let etalambda = gate("rem_etalambda").run(|| {
        let eta = eta()?;
        same_map(
            "eta lambda eta = lambda^-1",
            &eta.compose(m.lambda.matrix()).compose(&eta),
            m.lambda.inverse().matrix(),
        )
    });

    vec![thm24, lem25, cor26, keta, etalambda]
}

/// thm2.7, cor2.8, thm3.6
pub fn check_commutator(env: &Env) -> Vec<TheoremReport> {
    let cfg = env.cfg;
    let f = &cfg.flags;
    let m = &cfg.maps;
    let s = &m.commutator;

    let thm27 = Check::new("thm2.7").run(|| {
        let (dx, dy) = match classify_map(s) {
            MapClass::Translation { dx, dy } => (dx, dy),
            other => return Err(fail("S' is a translation", other.kind(), "translation")),
        };
        let l = s.linear();
        let unit = l[0][0].is_one() && l[1][1].is_one() && l[0][1].is_zero() && l[1][0].is_zero();
        ensure("S' linear part = id", unit, || format!("{l:?}"), "identity")?;
        let t2 = &dx * &dx + &dy * &dy;
        let t_dir = nd("translation direction", HPoint::direction(dx, dy))?;
        if f.pprime_ordinary {
            let a = nd("|T_P(P') - P'|", sq_dist(&m.t_p.apply(&cfg.p_prime), &cfg.p_prime))?;
            let b = nd("|P - T_P'(P)|", sq_dist(&cfg.p, &m.t_pp.apply(&cfg.p)))?;
            same_rat("|t|^2 = |T_P(P') P'|^2", &t2, &a)?;
            same_rat("|t|^2 = |P T_P'(P)|^2", &t2, &b)?;
            let pp = line("PP'", &cfg.p, &cfg.p_prime)?;
            same("t parallel to PP'", &t_dir, &pp.point_at_infinity())
        } else {
            let d = nd("|G1 - G|", sq_dist(&cfg.g1, &cfg.g))?;
            same_rat("|t|^2 = 9 |G1 G|^2", &t2, &(d * int(9)))
        }
    });

    let cor28 = Check::new("cor2.8").note("P' ordinary", f.pprime_ordinary).run(|| {
        for i in 0..3 {
            same("S'(A3) = A3'", &s.apply(&cfg.a3[i]), &cfg.a3_prime[i])?;
        }
        let side = |t: &[HPoint; 3], i: usize| nd("side", sq_dist(&t[(i + 1) % 3], &t[(i + 2) % 3]));
        for i in 0..3 {
            same_rat("A3B3C3 congruent to A3'B3'C3'", &side(&cfg.a3, i)?, &side(&cfg.a3_prime, i)?)?;
        }
        if !f.pprime_ordinary {
            return Ok(());
        }
        let x = match classify_map(&m.s1) {
            MapClass::Homothety { center, .. } => center,
            other => return Err(fail("S1 is a homothety", other.kind(), "homothety")),
        };
        if let Some(cx) = &cfg.x {
            same("S1 centered at X", &x, cx)?;
        }
        let d = |a: &HPoint, b: &HPoint| nd("distance", sq_dist(a, b));
        let lhs = d(&m.t_p.apply(&cfg.p_prime), &cfg.p)? * d(&x, &cfg.q_prime)?;
        let rhs = d(&cfg.q, &cfg.q_prime)? * d(&x, &cfg.p)?;
        same_rat("|T_P(P')P|^2 |XQ'|^2 = |QQ'|^2 |XP|^2", &lhs, &rhs)
    });

    let thm36 = Check::new("thm3.6").hyp("off_median", !f.on_median).run(|| {
        let [d, e, ff] = &cfg.cevian;
        let [d3, e3, f3] = &cfg.cevian_prime;
        let c1 = nd("conic DEFPQ", conic_through_5([d, e, ff, &cfg.p, &cfg.q]))?;
        let c2 = nd("conic D3E3F3P'Q'", conic_through_5([d3, e3, f3, &cfg.p_prime, &cfg.q_prime]))?;
        conic_eq("S'(DEFPQ) = D3E3F3P'Q'", &nd("S'(conic)", c1.map(s.matrix()))?, &c2)
    });

    vec![thm27, cor28, thm36]
}

fn same_rat(clause: &str, lhs: &Rat, rhs: &Rat) -> Step {
    if lhs == rhs {
        Ok(())
    } else {
        Err(fail(clause, crate::kernel::fmt_rat(lhs), crate::kernel::fmt_rat(rhs)))
    }
}

/// thm3.2, thm3.3
pub fn check_lambda_invariance(env: &Env) -> Vec<TheoremReport> {
    let cfg = env.cfg;
    let f = &cfg.flags;
    let m = &cfg.maps;
    let [a, b, c] = cfg.tri.vertices();

    let thm32 = Check::new("thm3.2").hyp("off_median", !f.on_median).run(|| {
        let conic = env.conic()?;
        conic_eq("lambda(conic) = conic", &nd("lambda(conic)", conic.map(m.lambda.matrix()))?, conic)?;
        let inv = m.lambda.inverse();
        for v in [a, b, c] {
            on_conic("lambda(A) on conic", conic, &m.lambda.apply(v))?;
            on_conic("lambda^-1(A) on conic", conic, &inv.apply(v))?;
        }
        Ok(())
    });

    let thm33 = Check::new("thm3.3").hyp("off_median", !f.on_median).run(|| {
        let conic = env.conic()?;
        let c1 = nd("T_P^-1(conic)", conic.map(m.t_p.inverse().matrix()))?;
        let c2 = nd("T_P'^-1(conic)", conic.map(m.t_pp.inverse().matrix()))?;
        conic_eq("T_P^-1(conic) = T_P'^-1(conic)", &c1, &c2)?;
        for p in cfg.anticevian_q.iter().chain(&cfg.anticevian_q_prime) {
            on_conic("anticevian vertices of Q, Q' on T_P^-1(conic)", &c1, p)?;
        }
        on_conic("Q on T_P^-1(conic)", &c1, &cfg.q)?;
        on_conic("Q' on T_P^-1(conic)", &c1, &cfg.q_prime)?;
        let mut used = 0;
        for r in conic_points(&c1, &cfg.q_prime, 12) {
            if used == 5 {
                break;
            }
            let Ok(tri) = anticevian_triangle(&cfg.tri, &r) else { continue };
            for x in &tri {
                on_conic("anticevian vertices of R on T_P^-1(conic)", &c1, x)?;
            }
            used += 1;
        }
        if used < 5 {
            return Err(super::Stop::Degenerate("five sample points R".into()));
        }
        let ok = nd("self-polar test", c1.is_self_polar(a, b, c))?;
        ensure("ABC self-polar for T_P^-1(conic)", ok, || c1.to_string(), "self-polar")
    });

    vec![thm32, thm33]
}

/// thm4.1, cor4.2
pub fn check_center(env: &Env) -> Vec<TheoremReport> {
    let cfg = env.cfg;
    let f = &cfg.flags;
    let m = &cfg.maps;
    let gate = |id| {
        Check::new(id).hyp("off_median", !f.on_median).hyp("off_steiner_circumellipse", !f.on_steiner)
    };

    let thm41 = gate("thm4.1").run(|| {
        let conic = env.conic()?;
        let class = conic.classify();
        if class == ConicClass::Degenerate {
            return Err(super::Stop::Degenerate("conic".into()));
        }
        let gv = some("GV", cfg.gv())?;
        let tgv = m.t_p.apply_line(&gv);
        let z = nd("center", conic.center())?;
        same("center = GV . T_P(GV)", &z, &nd("GV . T_P(GV)", meet(&gv, &tgv))?)?;
        same("lambda(Z) = Z", &m.lambda.apply(&z), &z)?;
        let fixed = fixed_points(&m.lambda);
        match class {
            ConicClass::Parabola => {
                ensure("no ordinary fixed point", fixed == FixedPoints::None, || format!("{fixed:?}"), "none")?;
            }
            _ => {
                let want = FixedPoints::Point(z.clone());
                if fixed != want {
                    return Err(fail("Z unique ordinary fixed point", format!("{fixed:?}"), format!("{want:?}")));
                }
            }
        }
        let q = infinity_form(conic);
        let lin = m.lambda.linear();
        let dirs = fixed_direction_form(&lin);
        match class {
            ConicClass::Hyperbola => {
                let pulled = pullback(&q, &lin);
                ensure("q_inf invariant under lambda up to scale", proportional(&pulled, &q), || {
                    fmt_form(&pulled)
                }, &fmt_form(&q))?;
                ensure("fixed directions are the asymptotes", proportional(&dirs, &q), || {
                    fmt_form(&dirs)
                }, &fmt_form(&q))?;
            }
            ConicClass::Ellipse => {
                let disc = &dirs[1] * &dirs[1] - int(4) * &dirs[0] * &dirs[2];
                ensure("no fixed infinite point", disc < Rat::zero(), || fmt_form(&dirs), "negative discriminant")?;
            }
            _ => {}
        }
        Ok(())
    });

    let cor42 = gate("cor4.2").run(|| {
        let conic = env.conic()?;
        let z = nd("center", conic.center())?;
        let gv = some("GV", cfg.gv())?;
        let j = some("J", cfg.j.as_ref())?;
        let jp = some("J'", cfg.j_prime.as_ref())?;
        let g1j = line("G1J", &cfg.g1, j)?;
        let g2j = line("G2J'", &cfg.g2, jp)?;
        same("T_P(GV) = G1J", &m.t_p.apply_line(&gv), &g1j)?;
        same("T_P'(GV) = G2J'", &m.t_pp.apply_line(&gv), &g2j)?;
        let x = concurrent("GV, G1J, G2J' concurrent", &[gv, g1j, g2j])?;
        same("GV . G1J = Z", &x, &z)
    });

    vec![thm41, cor42]
}

/// thm4.3
pub fn check_steiner(env: &Env) -> TheoremReport {
    let cfg = env.cfg;
    let f = &cfg.flags;
    Check::new("thm4.3")
        .hyp("off_median", !f.on_median)
        .hyp("on_steiner_circumellipse", f.on_steiner)
        .run(|| {
            let conic = env.conic()?;
            let z = nd("center", conic.center())?;
            let (gx, gy) = nd("G", cfg.g.cartesian())?;
            let (hx, hy) = nd("G1", cfg.g1.cartesian())?;
            let third = int(3);
            let expect = HPoint::xy(&gx + (&hx - &gx) / &third, &gy + (&hy - &gy) / &third);
            same("Z = G + (G1 - G)/3", &z, &expect)?;
            let class = conic.classify();
            ensure("conic is a hyperbola", class == ConicClass::Hyperbola, || class.to_string(), "hyperbola")?;
            let q = conic.eval_infinity_form(&(&hx - &gx), &(&hy - &gy));
            same_rat("q_inf(G1 - G) = 0", &q, &Rat::zero())?;
            let l = line("GG1", &cfg.g, &cfg.g1)?;
            let tangent = nd("tangent at infinity", conic.tangent_at(&l.point_at_infinity()))?;
            same("GG1 is an asymptote", &tangent, &l)?;
            let fixed = fixed_points(&cfg.maps.lambda);
            let want = FixedPoints::Point(z);
            if fixed != want {
                return Err(fail("Z unique ordinary fixed point", format!("{fixed:?}"), format!("{want:?}")));
            }
            Ok(())
        })
}
