//! The column crystal B(omega_l) as a DOT graph; pipe into `dot -Tsvg`.
use std::env;

use hlp::tableau::hasse_dot;

fn main() {
    let ell = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let n = env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    print!("{}", hasse_dot(ell, n).unwrap());
}
