//! Named points, conic and center for the Gergonne point of the 3-4-5
//! triangle. The center lands on the Feuerbach point (1, 2).

use cevconic::config::build_config;
use cevconic::kernel::{rat, HPoint};
use cevconic::report::json::ConicInfo;
use cevconic::report::text;
use cevconic::triangle::TriangleRef;

fn main() {
    let tri = TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
    let gergonne = HPoint::xy(rat(8, 11), rat(9, 11));
    let cfg = build_config(&tri, &gergonne).unwrap();
    print!("{}", text::catalog(&cfg, &ConicInfo::of(&cfg)));
}
