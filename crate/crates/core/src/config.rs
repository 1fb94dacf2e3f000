//! The full catalog of named points, lines and maps attached to a point
//! `P` of a reference triangle.

use crate::affine::{build_t, commutator, harmonic_homology, lambda, AffineMap};
use crate::error::{GeometryError, Result};
use crate::kernel::{join, meet, midpoint, HLine, HPoint, KernelError};
use crate::triangle::{
    admissible, anticevian_triangle, cevian_triangle, complement, isotomcomplement, isotomic,
    on_median, on_steiner_circumellipse, synthetic, TriangleRef,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigFlags {
    pub p_ordinary: bool,
    pub pprime_ordinary: bool,
    pub on_median: bool,
    pub on_steiner: bool,
}

impl ConfigFlags {
    /// P, P′ ordinary and P off the medians: the hypothesis shared by most
    /// results about `𝒞_P`.
    pub fn generic(&self) -> bool {
        self.p_ordinary && self.pprime_ordinary && !self.on_median && !self.on_steiner
    }
}

#[derive(Debug, Clone)]
pub struct ConfigMaps {
    /// `T_P`: ABC → DEF.
    pub t_p: AffineMap,
    /// `T_P′`: ABC → D₃E₃F₃.
    pub t_pp: AffineMap,
    /// `λ = T_P′ ∘ T_P⁻¹`.
    pub lambda: AffineMap,
    /// `S₁ = T_P ∘ T_P′`.
    pub s1: AffineMap,
    /// `S₂ = T_P′ ∘ T_P`.
    pub s2: AffineMap,
    /// `S′ = T_P′ T_P T_P′⁻¹ T_P⁻¹`.
    pub commutator: AffineMap,
    /// Complement map.
    pub k: AffineMap,
    /// Harmonic homology with center `V∞` and axis `GV`; needs both.
    pub eta: Option<AffineMap>,
}

/// Triples are indexed by vertex: `[A-slot, B-slot, C-slot]`.
#[derive(Debug, Clone)]
pub struct CevianConfig {
    pub tri: TriangleRef,
    pub p: HPoint,
    pub p_prime: HPoint,
    pub q: HPoint,
    pub q_prime: HPoint,
    pub g: HPoint,
    /// `PQ · P′Q′`; undefined when the four points are collinear.
    pub v: Option<HPoint>,
    /// `PP′ · QQ′`.
    pub v_inf: Option<HPoint>,
    pub g1: HPoint,
    pub g2: HPoint,
    /// Midpoint of `PQ`.
    pub j: Option<HPoint>,
    /// Midpoint of `P′Q′`.
    pub j_prime: Option<HPoint>,
    /// `AA₃ · BB₃`.
    pub x: Option<HPoint>,
    /// `AA₃′ · BB₃′`.
    pub x_prime: Option<HPoint>,
    /// D, E, F.
    pub cevian: [HPoint; 3],
    /// D₃, E₃, F₃.
    pub cevian_prime: [HPoint; 3],
    /// D₀, E₀, F₀.
    pub medial: [HPoint; 3],
    /// A₀, B₀, C₀: midpoints of EF, FD, DE.
    pub mid_cevian: [HPoint; 3],
    /// A₀′, B₀′, C₀′: midpoints of E₃F₃, F₃D₃, D₃E₃.
    pub mid_cevian_prime: [HPoint; 3],
    /// D₂, E₂, F₂: traces of Q.
    pub traces_q: [HPoint; 3],
    /// A₂, B₂, C₂ = T_P(D₂E₂F₂).
    pub a2: [HPoint; 3],
    /// A₃, B₃, C₃ = T_P(D₃E₃F₃).
    pub a3: [HPoint; 3],
    /// A₃′, B₃′, C₃′ = T_P′(DEF).
    pub a3_prime: [HPoint; 3],
    /// A₄, B₄, C₄: AP·EF, BP·FD, CP·DE.
    pub a4: [HPoint; 3],
    /// A′, B′, C′: anticevian triangle of Q.
    pub anticevian_q: [HPoint; 3],
    /// A″, B″, C″: anticevian triangle of Q′.
    pub anticevian_q_prime: [HPoint; 3],
    pub maps: ConfigMaps,
    pub flags: ConfigFlags,
}

fn mids(t: &[HPoint; 3]) -> Result<[HPoint; 3]> {
    Ok([midpoint(&t[1], &t[2])?, midpoint(&t[2], &t[0])?, midpoint(&t[0], &t[1])?])
}

fn meet_of(a: &HPoint, b: &HPoint, c: &HPoint, d: &HPoint) -> Option<HPoint> {
    let l = join(a, b).ok()?;
    let m = join(c, d).ok()?;
    meet(&l, &m).ok()
}

/// Build the catalog for an ordinary admissible `p ≠ G`.
pub fn build_config(tri: &TriangleRef, p: &HPoint) -> Result<CevianConfig> {
    if !p.is_ordinary() {
        return Err(KernelError::InfinitePoint.into());
    }
    if !admissible(tri, p) {
        return Err(GeometryError::Inadmissible);
    }
    let g = tri.centroid();
    if *p == g {
        return Err(GeometryError::IsCentroid);
    }
    let [a, b, _] = tri.vertices();

    let p_prime = isotomic(tri, p)?;
    let q = isotomcomplement(tri, p)?;
    let q_prime = complement(tri, p);

    let t_p = build_t(tri, p)?;
    let t_pp = build_t(tri, &p_prime)?;
    let lam = lambda(&t_p, &t_pp);
    let s1 = t_p.after(&t_pp);
    let s2 = t_pp.after(&t_p);
    let comm = commutator(&t_p, &t_pp);
    let k = AffineMap::new(synthetic::complement_matrix(tri))?;

    let v = meet_of(p, &q, &p_prime, &q_prime);
    let v_inf = meet_of(p, &p_prime, &q, &q_prime);
    let eta = match (&v, &v_inf) {
        (Some(v), Some(v_inf)) => join(&g, v)
            .ok()
            .and_then(|axis| harmonic_homology(v_inf, &axis).ok())
            .and_then(|m| AffineMap::new(m).ok()),
        _ => None,
    };

    let cevian = cevian_triangle(tri, p)?;
    let cevian_prime = cevian_triangle(tri, &p_prime)?;
    let medial = tri.medial();
    let mid_cevian = mids(&cevian)?;
    let mid_cevian_prime = mids(&cevian_prime)?;
    let traces_q = cevian_triangle(tri, &q)?;
    let a2 = traces_q.clone().map(|x| t_p.apply(&x));
    let a3 = cevian_prime.clone().map(|x| t_p.apply(&x));
    let a3_prime = cevian.clone().map(|x| t_pp.apply(&x));
    let a4 = {
        let [d, e, f] = &cevian;
        let [va, vb, vc] = tri.vertices();
        [
            meet_of(va, p, e, f),
            meet_of(vb, p, f, d),
            meet_of(vc, p, d, e),
        ]
    };
    let a4 = match a4 {
        [Some(x), Some(y), Some(z)] => [x, y, z],
        _ => return Err(KernelError::EqualLines.into()),
    };

    let x = meet_of(a, &a3[0], b, &a3[1]);
    let x_prime = meet_of(a, &a3_prime[0], b, &a3_prime[1]);

    let flags = ConfigFlags {
        p_ordinary: true,
        pprime_ordinary: p_prime.is_ordinary(),
        on_median: on_median(tri, p),
        on_steiner: on_steiner_circumellipse(tri, p),
    };

    Ok(CevianConfig {
        tri: tri.clone(),
        g1: t_p.apply(&g),
        g2: t_pp.apply(&g),
        j: midpoint(p, &q).ok(),
        j_prime: midpoint(&p_prime, &q_prime).ok(),
        anticevian_q: anticevian_triangle(tri, &q)?,
        anticevian_q_prime: anticevian_triangle(tri, &q_prime)?,
        p: p.clone(),
        p_prime,
        q,
        q_prime,
        g,
        v,
        v_inf,
        x,
        x_prime,
        cevian,
        cevian_prime,
        medial,
        mid_cevian,
        mid_cevian_prime,
        traces_q,
        a2,
        a3,
        a3_prime,
        a4,
        maps: ConfigMaps { t_p, t_pp, lambda: lam, s1, s2, commutator: comm, k, eta },
        flags,
    })
}

impl CevianConfig {
    /// Every named point with a stable output key, in catalog order.
    pub fn named_points(&self) -> Vec<(String, Option<HPoint>)> {
        let mut out: Vec<(String, Option<HPoint>)> = vec![
            ("A".into(), Some(self.tri.a().clone())),
            ("B".into(), Some(self.tri.b().clone())),
            ("C".into(), Some(self.tri.c().clone())),
            ("P".into(), Some(self.p.clone())),
            ("Pprime".into(), Some(self.p_prime.clone())),
            ("Q".into(), Some(self.q.clone())),
            ("Qprime".into(), Some(self.q_prime.clone())),
            ("G".into(), Some(self.g.clone())),
            ("V".into(), self.v.clone()),
            ("Vinf".into(), self.v_inf.clone()),
            ("G1".into(), Some(self.g1.clone())),
            ("G2".into(), Some(self.g2.clone())),
            ("J".into(), self.j.clone()),
            ("Jprime".into(), self.j_prime.clone()),
            ("X".into(), self.x.clone()),
            ("Xprime".into(), self.x_prime.clone()),
        ];
        let triples: [(&[HPoint; 3], [&str; 3]); 12] = [
            (&self.cevian, ["D", "E", "F"]),
            (&self.cevian_prime, ["D3", "E3", "F3"]),
            (&self.medial, ["D0", "E0", "F0"]),
            (&self.mid_cevian, ["A0", "B0", "C0"]),
            (&self.mid_cevian_prime, ["A0prime", "B0prime", "C0prime"]),
            (&self.traces_q, ["D2", "E2", "F2"]),
            (&self.a2, ["A2", "B2", "C2"]),
            (&self.a3, ["A3", "B3", "C3"]),
            (&self.a3_prime, ["A3prime", "B3prime", "C3prime"]),
            (&self.a4, ["A4", "B4", "C4"]),
            (&self.anticevian_q, ["Aprime", "Bprime", "Cprime"]),
            (&self.anticevian_q_prime, ["Adprime", "Bdprime", "Cdprime"]),
        ];
        for (pts, names) in triples {
            for (p, n) in pts.iter().zip(names) {
                out.push((n.to_string(), Some(p.clone())));
            }
        }
        out
    }

    /// The line `GV`, when `V` is defined and distinct from `G`.
    pub fn gv(&self) -> Option<HLine> {
        self.v.as_ref().and_then(|v| join(&self.g, v).ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{incident, int, rat};
    use crate::triangle::{bary_to_point, Bary};

    fn t2() -> TriangleRef {
        TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap()
    }

    fn pt(x: crate::kernel::Rat, y: crate::kernel::Rat) -> HPoint {
        HPoint::xy(x, y)
    }

    #[test]
    fn gergonne_fixture_values() {
        let tri = t2();
        let cfg = build_config(&tri, &pt(rat(8, 11), rat(9, 11))).unwrap();
        assert_eq!(cfg.q, pt(int(1), int(1)));
        assert_eq!(cfg.q_prime, pt(rat(18, 11), rat(12, 11)));
        assert_eq!(cfg.p_prime, pt(int(2), int(1)));
        assert_eq!(cfg.v, Some(pt(rat(14, 11), rat(13, 11))));
        assert_eq!(cfg.g1, pt(rat(13, 15), rat(14, 15)));
        assert_eq!(cfg.g2, pt(rat(9, 5), rat(16, 15)));
        assert_eq!(cfg.j, Some(pt(rat(19, 22), rat(10, 11))));
        assert_eq!(cfg.j_prime, Some(pt(rat(20, 11), rat(23, 22))));
        assert_eq!(midpoint(&cfg.g1, &cfg.g2).unwrap(), pt(rat(4, 3), int(1)));
        assert_eq!(cfg.v_inf, Some(HPoint::from_i64(7, 1, 0).unwrap()));
        assert!(cfg.flags.generic());
    }

    #[test]
    fn defining_incidences() {
        let tri = t2();
        let cfg = build_config(&tri, &pt(rat(8, 11), rat(9, 11))).unwrap();
        let [a, b, c] = tri.vertices();
        let d = &cfg.cevian[0];
        assert!(incident(d, &join(b, c).unwrap()) && incident(d, &join(a, &cfg.p).unwrap()));
        let a4 = &cfg.a4[0];
        assert!(incident(a4, &join(&cfg.cevian[1], &cfg.cevian[2]).unwrap()));
        assert!(incident(a4, &join(a, &cfg.p).unwrap()));
        let v = cfg.v.as_ref().unwrap();
        assert!(incident(v, &join(&cfg.p, &cfg.q).unwrap()));
        assert!(incident(v, &join(&cfg.p_prime, &cfg.q_prime).unwrap()));
        let x = cfg.x.as_ref().unwrap();
        assert!(incident(x, &join(a, &cfg.a3[0]).unwrap()));
        assert!(incident(x, &join(b, &cfg.a3[1]).unwrap()));
    }

    #[test]
    fn rejects_bad_points() {
        let tri = t2();
        assert_eq!(
            build_config(&tri, &tri.centroid()).unwrap_err(),
            GeometryError::IsCentroid
        );
        assert_eq!(
            build_config(&tri, &pt(int(2), int(0))).unwrap_err(),
            GeometryError::Inadmissible
        );
    }

    #[test]
    fn steiner_point_has_infinite_isotomic() {
        let tri = t2();
        let p = bary_to_point(&tri, &Bary::from_i64(-3, -6, 2).unwrap());
        let cfg = build_config(&tri, &p).unwrap();
        assert!(!cfg.flags.pprime_ordinary);
        assert!(cfg.flags.on_steiner);
        assert_eq!(cfg.q, cfg.p_prime);
        assert!(cfg.j.is_none());
    }

    #[test]
    fn median_point_leaves_v_undefined() {
        let tri = t2();
        let p = bary_to_point(&tri, &Bary::from_i64(2, 1, 1).unwrap());
        let cfg = build_config(&tri, &p).unwrap();
        assert!(cfg.flags.on_median);
        assert!(cfg.v.is_none() && cfg.maps.eta.is_none());
    }
}
