//! Fit the conic through A, B, C, P, Q and look at its pole/polar
//! structure.

use cevconic::config::build_config;
use cevconic::conic::conic_through_5;
use cevconic::kernel::{int, HPoint};
use cevconic::triangle::TriangleRef;

fn main() {
    let tri = TriangleRef::from_i64([(0, 0), (4, 0), (1, 3)]).unwrap();
    let cfg = build_config(&tri, &HPoint::xy(int(1), int(1))).unwrap();
    let [a, b, c] = tri.vertices();
    let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).unwrap();

    println!("conic   {conic}");
    println!("class   {}", conic.classify());
    println!("center  {}", conic.center().unwrap());
    for (name, p) in [("P'", &cfg.p_prime), ("Q'", &cfg.q_prime)] {
        println!("{name} = {p} on the conic: {}", conic.contains(p));
    }
    let [d, e, f] = &cfg.cevian;
    println!("DEF self-polar: {}", conic.is_self_polar(d, e, f).unwrap());
    if let (Some(v), Some(v_inf)) = (&cfg.v, &cfg.v_inf) {
        println!("polar of V_inf {} is the line through G and V {}: {}", v_inf, v, conic.polar(v_inf).unwrap());
    }
}
