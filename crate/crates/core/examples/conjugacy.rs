//! The involution eta conjugates T_P into T_P' and swaps G1 with G2.

use cevconic::config::build_config;
use cevconic::kernel::{midpoint, rat, HPoint, Mat3};
use cevconic::triangle::TriangleRef;

fn main() {
    let tri = TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
    let cfg = build_config(&tri, &HPoint::xy(rat(8, 11), rat(9, 11))).unwrap();
    let maps = &cfg.maps;
    let eta = maps.eta.as_ref().expect("P' is ordinary and P is off the medians");
    let e = eta.matrix();

    println!("eta       {e:?}");
    println!("eta^2 = id: {}", e.compose(e).maps_equal(&Mat3::identity()));
    let conj = e.compose(maps.t_p.matrix()).maps_equal(&maps.t_pp.matrix().compose(e));
    println!("eta T_P = T_P' eta: {conj}");
    println!("eta(G1) = {} and G2 = {}", eta.apply(&cfg.g1), cfg.g2);
    println!("midpoint(G1, G2) = {} and G = {}", midpoint(&cfg.g1, &cfg.g2).unwrap(), cfg.g);
    let k = maps.k.matrix();
    println!("K eta = eta K: {}", k.compose(e).maps_equal(&e.compose(k)));
}
