//! Prints the classification sweep for small orders.
//!
//! Usage: cargo run --release -p ricci-core --example sweep [n_max]

use ricci_core::classify::Classification;
use ricci_core::enumerate::{verify_classification, EnumerationConfig};

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let t = std::time::Instant::now();
    let report = verify_classification(n_max, &EnumerationConfig::default()).unwrap();
    for l in &report.levels {
        println!("n={} generated={} survivors={} {:?}", l.n, l.generated, l.after_filter, l.by_kind);
    }
    for (g, c) in &report.survivors {
        if let Classification::Family(d) = c {
            println!("{:?}  edges {:?}", d, g.edges());
        }
    }
    for g in &report.unrecognized {
        println!("UNRECOGNIZED n={} edges {:?}", g.n(), g.edges());
    }
    println!("elapsed {:?}", t.elapsed());
}
