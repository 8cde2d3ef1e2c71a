//! Psi_T in the finite Hecke algebra, from the definition and from the column recursion.
use hlp::psi::{bigpsi_def, bigpsi_rec, BigPsiRecursion, StepChoice};
use hlp::{Filling, HeckeElement, Partition};

fn main() {
    let lam = Partition::parse("2,1", 3).unwrap();
    let mut smallest = BigPsiRecursion::new(StepChoice::Smallest);
    let mut largest = BigPsiRecursion::new(StepChoice::Largest);
    for t in Filling::enumerate_ssyt(&lam) {
        let def = bigpsi_def(&t);
        let agree = def == smallest.eval(&t) && def == largest.eval(&t);
        println!("{:<6} {def}   (recursion agrees: {agree})", t.ytableau());
    }

    // columns out of order vanish
    let bad = Filling::parse_rows("2,1/3", 3).unwrap();
    println!(
        "{} is semistandard: {}, Psi = {}",
        bad.ytableau(),
        bad.is_semistandard(),
        bigpsi_def(&bad)
    );

    // a head tensored with a highest-weight tail
    let head = Filling::parse_rows("1/3", 3).unwrap();
    let tail = Partition::parse("1", 3).unwrap();
    println!(
        "Psi of (1,3) tensor T0(1): {}",
        bigpsi_rec(&head, &tail).unwrap()
    );

    let p320 = bigpsi_def(&Filling::highest_weight(
        &Partition::parse("3,2", 3).unwrap(),
    ));
    let p220 = bigpsi_def(&Filling::highest_weight(
        &Partition::parse("2,2", 3).unwrap(),
    ));
    let p210 = bigpsi_def(&Filling::highest_weight(&lam));
    println!(
        "Psi(T0(3,2,0)) = {p320}, Psi(T0(2,2,0)) Psi(T0(2,1,0)) = {}",
        &p220 * &p210
    );
    println!("1_(2,1,0) = {}", HeckeElement::one_lambda(&lam.to_weight()));
}
