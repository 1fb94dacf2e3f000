//! P on the Steiner circumellipse: P' is at infinity and the center sits a
//! third of the way from G to G1.

use cevconic::config::build_config;
use cevconic::conic::conic_through_5;
use cevconic::kernel::{int, HPoint};
use cevconic::theorems::run_config;
use cevconic::triangle::{steiner_point_from_direction, TriangleRef};

fn main() {
    let tri = TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
    for (dx, dy) in [(1, 2), (3, -1), (-2, 5)] {
        let dir = HPoint::direction(int(dx), int(dy)).unwrap();
        let p = steiner_point_from_direction(&tri, &dir).unwrap();
        let cfg = build_config(&tri, &p).unwrap();
        let [a, b, c] = tri.vertices();
        let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).unwrap();
        let thm = run_config(&cfg).into_iter().find(|r| r.id == "thm4.3").unwrap();
        println!(
            "direction ({dx}, {dy}): P = {p}, P' = {}, {} centered at {}; thm4.3 {}",
            cfg.p_prime,
            conic.classify(),
            conic.center().unwrap(),
            thm.status.as_str()
        );
    }
}
