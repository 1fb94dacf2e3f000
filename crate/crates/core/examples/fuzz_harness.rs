//! Seeded fuzzing over random triangles and points, on all cores.

use cevconic::report::text;
use cevconic::theorems::{fuzz_with, FuzzMix};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let jobs = std::thread::available_parallelism().map_or(1, usize::from);
    let summary = fuzz_with(seed, 200, 10, FuzzMix::Mixed, jobs);
    print!("{}", text::fuzz(&summary));
}
