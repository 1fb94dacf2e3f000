//! lambda = T_P' T_P^-1 fixes the conic and its center, and the center is
//! where GV meets its images under T_P and T_P'.

use cevconic::affine::{classify_map, fixed_points};
use cevconic::config::build_config;
use cevconic::conic::conic_through_5;
use cevconic::kernel::{meet, rat, HPoint};
use cevconic::theorems::classify_lambda_isometry;
use cevconic::triangle::TriangleRef;

fn main() {
    let tri = TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
    let cfg = build_config(&tri, &HPoint::xy(rat(8, 11), rat(9, 11))).unwrap();
    let [a, b, c] = tri.vertices();
    let conic = conic_through_5([a, b, c, &cfg.p, &cfg.q]).unwrap();
    let lambda = &cfg.maps.lambda;

    println!("lambda            {:?} ({})", lambda.matrix(), classify_map(lambda).kind());
    println!("lambda(conic) = conic: {}", conic.map(lambda.matrix()).unwrap() == conic);
    println!("fixed points      {:?}", fixed_points(lambda));

    let gv = cfg.gv().unwrap();
    let first = cfg.maps.t_p.apply_line(&gv);
    let second = cfg.maps.t_pp.apply_line(&gv);
    println!("GV                {gv}");
    println!("GV . T_P(GV)      {}", meet(&gv, &first).unwrap());
    println!("GV . T_P'(GV)     {}", meet(&gv, &second).unwrap());
    println!("center            {}", conic.center().unwrap());
    println!("lambda restricted to the conic is a {}", classify_lambda_isometry(&cfg).unwrap().as_str());
}
