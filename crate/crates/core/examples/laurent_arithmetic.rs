//! Exact arithmetic in Z[t, t^-1].
use hlp::LaurentPoly;

fn main() {
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let p = &(&one - &t) * &(&one + &t);
    println!("(1 - t)(1 + t) = {p}");

    // [3]_t! = (1 + t)(1 + t + t^2)
    let w = LaurentPoly::t_factorial(3);
    println!("W_0 for n = 3: {w}");
    println!("{} / (1 + t) = {}", w, w.exact_div(&(&one + &t)).unwrap());

    match p.exact_div(&LaurentPoly::from_terms([(0, 2), (1, 1)])) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("inexact division reports: {e}"),
    }

    let tinv = LaurentPoly::monomial(-1, 1);
    println!("t^-1 * (t + t^2) = {}", &tinv * &(&t + &t.pow(2)));
    println!(
        "(1 - t)^3 at t = 2: {}",
        LaurentPoly::one_minus_t_pow(1).pow(3).eval_int(2).unwrap()
    );
}
