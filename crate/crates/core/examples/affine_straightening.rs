//! Moving T_i past X^mu in the affine Hecke algebra, and the element 1_0 X^lambda.
use hlp::{AffineElement, HeckeElement, Partition, Weight};

fn main() {
    for mu in [vec![1, 0], vec![2, 0], vec![0, 1], vec![-1, 1]] {
        let mu = Weight(mu);
        println!("T1 X{mu} = {}", AffineElement::commute_ti_xmu(1, &mu));
    }

    let t1 = AffineElement::from_hecke(HeckeElement::generator(3, 1));
    let x = AffineElement::x(Weight(vec![1, 1, 1]));
    println!("det commutes with T1: {}", &t1 * &x == &x * &t1);

    let lam = Partition::parse("2,1", 3).unwrap();
    let e = AffineElement::one0_xlambda(&lam).unwrap();
    println!(
        "1_0 X^{lam} has {} terms over {} exponents",
        e.len(),
        e.components().count()
    );
    println!(
        "projected to symmetric polynomials:\n  {}",
        e.satake_project()
    );
}
