//! The coefficients psi_T of P_lambda by every available formula.
use hlp::psi::{psi_box, psi_strip, psi_two_column, tilde_psi, tilde_psi_rec};
use hlp::{Filling, Partition};

fn main() {
    let lam = Partition::parse("3,2", 3).unwrap();
    println!(
        "{:<8} {:<14} {:<14} {:<14} {:<14} scalar rec",
        "T", "strip", "box", "two-column", "hecke lift"
    );
    for t in Filling::enumerate_ssyt(&lam) {
        println!(
            "{:<8} {:<14} {:<14} {:<14} {:<14} {}",
            t.ytableau(),
            psi_strip(&t).unwrap().to_string(),
            psi_box(&t).unwrap().to_string(),
            psi_two_column(&t).to_string(),
            tilde_psi(&t).unwrap().to_string(),
            tilde_psi_rec(&t),
        );
    }
}
