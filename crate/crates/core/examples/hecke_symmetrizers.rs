//! The finite Hecke algebra: generators, inverses, symmetrizers and parabolic decomposition.
use hlp::{HeckeElement, LaurentPoly, Permutation, Subgroup, Weight};

fn main() {
    let n = 3;
    let t1 = HeckeElement::generator(n, 1);
    let q = &(&t1 * &t1) - &t1.scale(&(LaurentPoly::t() - LaurentPoly::one()));
    println!("T1^2 - (t - 1) T1 = {q}");

    let w0 = Permutation::from_images(vec![3, 2, 1]).unwrap();
    let inv = HeckeElement::inv_tw_inverse(&w0);
    println!("(T_w0^-1)^-1 = {inv}");
    println!("check: {}", &inv * &HeckeElement::basis(w0.inverse()));

    let one0 = HeckeElement::symmetrizer(n, &Subgroup::Full).unwrap();
    println!(
        "1_0 has {} terms, 1_0 * 1_0 = ({}) 1_0",
        one0.len(),
        one0.project_one0()
    );

    let one_lambda = HeckeElement::one_lambda(&Weight(vec![1, 1, 0]));
    println!(
        "1_(1,1,0) = {one_lambda}, acting on 1_0 by {}",
        one_lambda.project_one0()
    );

    let h = &HeckeElement::basis(w0.clone()) + &t1;
    for (col, part) in h.parabolic_decompose(1) {
        println!("  T_u{col} * ({part})");
    }
}
