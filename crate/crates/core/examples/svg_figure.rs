//! Write the Gergonne figure to gergonne.svg.

use cevconic::config::build_config;
use cevconic::kernel::{rat, HPoint};
use cevconic::report::json::ConicInfo;
use cevconic::report::svg;
use cevconic::triangle::TriangleRef;

fn main() -> std::io::Result<()> {
    let tri = TriangleRef::from_i64([(0, 0), (4, 0), (0, 3)]).unwrap();
    let cfg = build_config(&tri, &HPoint::xy(rat(8, 11), rat(9, 11))).unwrap();
    let (figure, warnings) = svg::render(&cfg, &ConicInfo::of(&cfg));
    for w in warnings {
        eprintln!("warning: {w}");
    }
    std::fs::write("gergonne.svg", figure)?;
    println!("wrote gergonne.svg");
    Ok(())
}
