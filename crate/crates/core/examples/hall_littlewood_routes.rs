//! P_lambda(t) by the tableau sum, the Hecke symmetrizer and the Psi lift.
use std::env;

use hlp::hall_littlewood::expand;
use hlp::{Partition, Route};

fn main() {
    let spec = env::args().nth(1).unwrap_or_else(|| "2,1".to_string());
    let n: usize = env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let lam = Partition::parse(&spec, n).expect("lambda must be a partition with at most n parts");

    let expansions: Vec<_> = Route::ALL
        .iter()
        .map(|&r| expand(&lam, r).unwrap())
        .collect();
    println!("P_{lam}(t) = {}", expansions[0].poly);
    for e in &expansions {
        println!(
            "  {:<10} monic {} symmetric {}",
            e.route.to_string(),
            e.is_monic(),
            e.poly.is_symmetric()
        );
    }
    let agree = expansions.windows(2).all(|w| w[0].poly == w[1].poly);
    println!("routes agree: {agree}");
}
