//! JSON documents. Every rational is a string, never a float.

use serde_json::{json, Map, Value};

use crate::config::CevianConfig;
use crate::conic::{conic_through_5, Conic, ConicClass};
use crate::kernel::{fmt_rat, HPoint, Mat3};
use crate::theorems::{classify_lambda_isometry, LambdaIsometry, TheoremReport};
use crate::triangle::point_to_bary;

pub fn point_value(p: &HPoint) -> Value {
    match p.cartesian() {
        Ok((x, y)) => json!([fmt_rat(&x), fmt_rat(&y)]),
        Err(_) => {
            let [dx, dy, _] = p.coords();
            json!({"infinite": [dx.to_string(), dy.to_string()]})
        }
    }
}

pub fn opt_point(p: Option<&HPoint>) -> Value {
    p.map_or(Value::Null, point_value)
}

pub fn conic_value(c: &Conic) -> Value {
    Value::Array(c.coeffs().iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn mat3_value(m: &Mat3) -> Value {
    Value::Array(m.canonical_integers().iter().map(|x| Value::String(x.to_string())).collect())
}

/// The fitted conic through A, B, C, P, Q and what is derived from it.
#[derive(Debug, Clone)]
pub struct ConicInfo {
    pub conic: Option<Conic>,
    pub class: Option<ConicClass>,
    pub center: Option<HPoint>,
    pub isometry: Option<LambdaIsometry>,
}

impl ConicInfo {
    pub fn of(cfg: &CevianConfig) -> Self {
        let [a, b, c] = cfg.tri.vertices();
        let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).ok();
        let class = conic.as_ref().map(Conic::classify);
        let center = conic
            .as_ref()
            .filter(|c| !c.is_degenerate())
            .and_then(|c| c.center().ok());
        let isometry = classify_lambda_isometry(cfg).ok();
        ConicInfo { conic, class, center, isometry }
    }
}

pub fn report_value(r: &TheoremReport) -> Value {
    let witness = r.witness().map_or(Value::Null, |w| {
        json!({"clause": w.clause, "lhs": w.lhs, "rhs": w.rhs})
    });
    let hyps: Vec<Value> = r.hypotheses.iter().map(|(n, ok)| json!([n, ok])).collect();
    json!({"id": r.id, "status": r.status.as_str(), "hypotheses": hyps, "witness": witness})
}

/// The full document: triangle, point, catalog, conic, maps, reports.
pub fn document(cfg: &CevianConfig, info: &ConicInfo, reports: &[TheoremReport]) -> Value {
    let triangle: Vec<Value> = cfg.tri.vertices().iter().map(point_value).collect();
    let bary = point_to_bary(&cfg.tri, &cfg.p);
    let bary: Vec<String> = bary.coords().iter().map(|x| x.to_string()).collect();

    let mut catalog = Map::new();
    for (name, p) in cfg.named_points() {
        catalog.insert(name, opt_point(p.as_ref()));
    }
    catalog.insert("Z".into(), opt_point(info.center.as_ref()));

    let m = &cfg.maps;
    let maps = json!({
        "T_P": mat3_value(m.t_p.matrix()),
        "T_Pprime": mat3_value(m.t_pp.matrix()),
        "lambda": mat3_value(m.lambda.matrix()),
        "S1": mat3_value(m.s1.matrix()),
        "S2": mat3_value(m.s2.matrix()),
        "Sprime": mat3_value(m.commutator.matrix()),
        "K": mat3_value(m.k.matrix()),
        "eta": m.eta.as_ref().map_or(Value::Null, |e| mat3_value(e.matrix())),
    });
    let f = &cfg.flags;
    json!({
        "triangle": triangle,
        "point": {"cartesian": point_value(&cfg.p), "barycentric": bary},
        "flags": {
            "p_ordinary": f.p_ordinary,
            "pprime_ordinary": f.pprime_ordinary,
            "on_median": f.on_median,
            "on_steiner": f.on_steiner,
        },
        "catalog": catalog,
        "conic": {
            "coeffs": info.conic.as_ref().map_or(Value::Null, conic_value),
            "class": info.class.map_or(Value::Null, |c| Value::String(c.as_str().into())),
            "center": opt_point(info.center.as_ref()),
            "lambda_isometry": info.isometry.map_or(Value::Null, |i| Value::String(i.as_str().into())),
        },
        "maps": maps,
        "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
    })
}
