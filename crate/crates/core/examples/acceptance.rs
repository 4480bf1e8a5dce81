//! Runs the acceptance checks on a reduced plan.
//!
//!     cargo run --release --example acceptance -- 4

use isg::verify::{run, VerifyConfig};

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    for c in run(&VerifyConfig::up_to(n_max)) {
        println!("{c}");
    }
}
