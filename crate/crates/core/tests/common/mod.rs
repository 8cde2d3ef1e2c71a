//! Oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hlp::{Filling, HeckeElement, LaurentPoly, Partition, Permutation};
use rand::rngs::StdRng;
use rand::Rng;

pub fn t() -> LaurentPoly {
    LaurentPoly::t()
}

pub fn omt() -> LaurentPoly {
    LaurentPoly::one_minus_t_pow(1)
}

pub fn rows(s: &str, n: usize) -> Filling {
    Filling::parse_rows(s, n).unwrap()
}

pub fn shape(v: &[usize], n: usize) -> Partition {
    Partition::new(v.to_vec(), n).unwrap()
}

/// `t T_j^{-1}` written out as `T_j + 1 - t`, independent of the library's helper.
pub fn tt(n: usize, j: usize) -> HeckeElement {
    HeckeElement::from_terms(
        n,
        [
            (Permutation::simple(n, j), LaurentPoly::one()),
            (Permutation::identity(n), omt()),
        ],
    )
    .unwrap()
}

pub fn gen(n: usize, j: usize) -> HeckeElement {
    HeckeElement::generator(n, j)
}

pub fn scalar(n: usize, c: LaurentPoly) -> HeckeElement {
    HeckeElement::one(n).scale(&c)
}

pub fn prod(factors: &[HeckeElement]) -> HeckeElement {
    let n = factors[0].n();
    factors.iter().fold(HeckeElement::one(n), |acc, f| &acc * f)
}

/// Row strings (ytableau style) paired with `psi_T` for `B((3,2,0))`, `n = 3`.
pub fn golden_psi_320() -> Vec<(&'static str, LaurentPoly)> {
    let one = LaurentPoly::one;
    vec![
        ("111,22", one()),
        ("111,23", omt()),
        ("111,33", one()),
        ("112,22", one()),
        ("112,23", omt() * omt()),
        ("112,33", omt()),
        ("113,22", LaurentPoly::one_minus_t_pow(2)),
        ("113,23", omt()),
        ("113,33", one()),
        ("122,23", omt()),
        ("122,33", omt()),
        ("123,23", omt()),
        ("123,33", omt()),
        ("222,33", one()),
        ("223,33", one()),
    ]
}

/// `Psi_T` for `B((2,1,0))`, `n = 3`.
pub fn golden_bigpsi_210() -> Vec<(&'static str, HeckeElement)> {
    let n = 3;
    let one = HeckeElement::one(n);
    vec![
        ("11,2", one.clone()),
        ("11,3", tt(n, 2)),
        ("12,2", tt(n, 1)),
        ("12,3", tt(n, 2).scale(&omt())),
        ("22,3", prod(&[tt(n, 1), tt(n, 2)])),
        ("13,2", (&one + &gen(n, 1)).scale(&omt())),
        ("13,3", prod(&[tt(n, 2), tt(n, 1)])),
        ("23,3", prod(&[tt(n, 2), tt(n, 1), tt(n, 2)])),
    ]
}

/// `Psi_T` for `B((3,2,0))`, `n = 3`.
pub fn golden_bigpsi_320() -> Vec<(&'static str, HeckeElement)> {
    let n = 3;
    let one = HeckeElement::one(n);
    let s = |c: LaurentPoly| scalar(n, c);
    vec![
        ("111,22", one.clone()),
        ("111,23", s(omt())),
        ("111,33", tt(n, 2)),
        ("112,22", tt(n, 1)),
        ("112,23", s(omt() * omt())),
        ("112,33", tt(n, 2).scale(&omt())),
        ("113,22", &s(t() * omt()) + &tt(n, 1).scale(&omt())),
        ("113,23", tt(n, 1).scale(&omt())),
        ("113,33", prod(&[tt(n, 2), tt(n, 1)])),
        ("122,23", tt(n, 1).scale(&omt())),
        ("122,33", tt(n, 2).scale(&omt())),
        (
            "123,23",
            &s(omt() * t()) + &tt(n, 1).scale(&(omt() * omt())),
        ),
        ("123,33", prod(&[tt(n, 2), tt(n, 1)]).scale(&omt())),
        ("222,33", prod(&[tt(n, 1), tt(n, 2)])),
        ("223,33", prod(&[tt(n, 2), tt(n, 1), tt(n, 2)])),
    ]
}

/// Converts `11,2` into the row syntax `1,1/2`.
pub fn ytableau_rows(s: &str, n: usize) -> Filling {
    let spec: Vec<String> = s
        .split(',')
        .map(|r| {
            r.chars()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    rows(&spec.join("/"), n)
}

/// Bruhat order through the subword property: `u <= w` iff `u` is the
/// product of some subword of a fixed reduced word of `w`.
pub struct SubwordBruhat {
    below: HashMap<Permutation, BTreeSet<Permutation>>,
}

impl SubwordBruhat {
    pub fn new(n: usize) -> Self {
        let mut below = HashMap::new();
        for w in all_perms(n) {
            let word = w.reduced_word();
            let mut set = BTreeSet::new();
            for mask in 0u32..(1 << word.len()) {
                let sub: Vec<usize> = (0..word.len())
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| word[k])
                    .collect();
                set.insert(Permutation::from_word(n, &sub));
            }
            below.insert(w, set);
        }
        SubwordBruhat { below }
    }

    pub fn leq(&self, u: &Permutation, w: &Permutation) -> bool {
        self.below[w].contains(u)
    }
}

/// `S_n` by Heap's algorithm, independent of the library's enumeration.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    fn heap(k: usize, a: &mut Vec<u8>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation::from_images(a.clone()).unwrap());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut a: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Number of Gelfand-Tsetlin patterns with top row `lambda`, counted by
/// choosing interlacing rows downward. Equals the number of SSYT of shape
/// `lambda` with entries in `[n]`.
pub fn gt_pattern_count(lambda: &[usize]) -> u64 {
    if lambda.len() <= 1 {
        return 1;
    }
    let mut total = 0;
    let mut row = vec![0; lambda.len() - 1];
    fn choose(top: &[usize], row: &mut Vec<usize>, k: usize, total: &mut u64) {
        if k == row.len() {
            *total += gt_pattern_count(row);
            return;
        }
        for v in top[k + 1]..=top[k] {
            row[k] = v;
            choose(top, row, k + 1, total);
        }
    }
    choose(lambda, &mut row, 0, &mut total);
    total
}

pub fn random_laurent(rng: &mut StdRng) -> LaurentPoly {
    let terms = rng.gen_range(1..=2);
    LaurentPoly::from_terms((0..terms).map(|_| (rng.gen_range(-2..=2), rng.gen_range(-3i64..=3))))
}

pub fn random_hecke(rng: &mut StdRng, n: usize) -> HeckeElement {
    let perms = all_perms(n);
    let terms = rng.gen_range(1..=3);
    HeckeElement::from_terms(
        n,
        (0..terms).map(|_| {
            (
                perms[rng.gen_range(0..perms.len())].clone(),
                random_laurent(rng),
            )
        }),
    )
    .unwrap()
}
