//! P_lambda at t = 0 (Schur) and t = 1 (monomial symmetric).
use hlp::hall_littlewood::{kostka_number, p_tableau_sum, specialization_check};
use hlp::{Partition, SymPoly};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let lam = Partition::parse("2,1", 3).unwrap();
    let p = p_tableau_sum(&lam).unwrap();

    let zero = BigRational::from_integer(BigInt::from(0));
    for (mu, c) in p.poly.eval(&zero).unwrap() {
        println!("t=0  X{mu}: {c}  (Kostka {})", kostka_number(&lam, &mu));
    }
    let m = SymPoly::monomial_symmetric(&lam.to_weight());
    println!("m_lambda = {m}");
    for check in specialization_check(&p).unwrap() {
        println!(
            "{}: {}",
            check.name,
            if check.pass { "pass" } else { "FAIL" }
        );
    }
}
