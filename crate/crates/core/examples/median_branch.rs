//! P on a median: the conic through A, B, C, P, Q splits into the median
//! and a side, and only the commutator results survive.

use cevconic::affine::classify_map;
use cevconic::config::build_config;
use cevconic::conic::conic_through_5;
use cevconic::kernel::{rat, HPoint};
use cevconic::theorems::run_config;
use cevconic::triangle::TriangleRef;

fn main() {
    let tri = TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
    let p = HPoint::xy(rat(1, 1), rat(3, 4));
    let cfg = build_config(&tri, &p).unwrap();
    let [a, b, c] = tri.vertices();
    match conic_through_5([a, b, c, &cfg.p, &cfg.q]) {
        Ok(conic) => println!("conic {conic} ({})", conic.classify()),
        Err(e) => println!("no conic: {e}"),
    }
    println!("S' is a {}", classify_map(&cfg.maps.commutator).kind());
    for r in run_config(&cfg) {
        println!("{:<14} {}", r.id, r.status.as_str());
    }
}
