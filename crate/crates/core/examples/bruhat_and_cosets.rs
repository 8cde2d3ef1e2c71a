//! Permutations, reduced words, Bruhat order and minimal coset representatives.
use hlp::{Column, Permutation, Weight};

fn main() {
    let n = 4;
    let w = Permutation::from_images(vec![3, 1, 4, 2]).unwrap();
    println!(
        "w = {w}, length {}, reduced word {}",
        w.length(),
        w.word_string()
    );
    println!("inversions: {:?}", w.inversions());

    let lambda = Weight(vec![2, 1, 1, 0]);
    let (u, v) = w.parabolic_factorize(&lambda);
    println!("w = u v with u = {u} (minimal in w S_lambda), v = {v}");

    let all = Permutation::all(n).unwrap();
    let below = all.iter().filter(|x| x.bruhat_leq(&w)).count();
    println!(
        "{below} of {} permutations lie below w in Bruhat order",
        all.len()
    );

    println!("columns of length 2 in n = {n} and their coset representatives:");
    for c in Column::enumerate(2, n).unwrap() {
        let u = c.coset_rep();
        println!("  {c}  u = {u}  [{}]", u.word_string());
    }
}
