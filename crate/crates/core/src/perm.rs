//! The symmetric group `S_n` as a Coxeter group.
//!
//! Permutations are stored in one-line notation, `w(i) = images[i-1]`, with
//! all indices 1-based to match the usual conventions for simple
//! reflections `s_i = (i, i+1)`. Composition is `(uv)(i) = u(v(i))`, so
//! `s_i w` swaps the *values* `i, i+1` of `w` and `w s_i` swaps *positions*.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on `n` for helpers that enumerate all of `S_n`.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 9;

/// The enumeration cap, overridable through the `HLP_MAX_N` environment variable.
pub fn enumeration_limit() -> usize {
    std::env::var("HLP_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_LIMIT)
}

/// An integer vector in `Z^n`: exponents `X^mu`, weights, roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// The basis vector `e_k` (1-based).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k - 1] = 1;
        Weight(v)
    }

    /// The simple root `alpha_i = e_i - e_{i+1}`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        v[i] = -1;
        Weight(v)
    }

    /// The fundamental weight `e_1 + ... + e_k`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        Weight((0..n).map(|i| i32::from(i < k)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    /// The standard pairing `(a, b) = sum a_i b_i`.
    pub fn pairing(&self, other: &Weight) -> i32 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `(self, alpha_i) = self_i - self_{i+1}`.
    pub fn pairing_simple(&self, i: usize) -> i32 {
        self.0[i - 1] - self.0[i]
    }

    /// Swap of coordinates `i, i+1`, i.e. the action of `s_i`.
    pub fn reflect(&self, i: usize) -> Weight {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Weight(v)
    }

    pub fn scaled(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weakly decreasing rearrangement.
    pub fn sorted_dominant(&self) -> Weight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }

    /// Indices `i` with `s_i` in the stabilizer, i.e. `self_i = self_{i+1}`.
    pub fn stabilizer_generators(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.0[i - 1] == self.0[i])
            .collect()
    }

    /// Maximal runs `[a, b]` (1-based, inclusive) of equal consecutive entries.
    pub fn equal_blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks = Vec::new();
        let mut start = 1;
        for i in 1..=self.n() {
            if i == self.n() || self.0[i - 1] != self.0[i] {
                blocks.push((start, i));
                start = i + 1;
            }
        }
        blocks
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("[")?;
    for (k, x) in items.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<u8>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Vec<u8> {
        p.images
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        Self::identity(n).right_mul_simple(i)
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The product `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(n), |w, &i| w.right_mul_simple(i))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// `w^{-1}(value)`, 1-based.
    pub fn position_of(&self, value: usize) -> usize {
        self.images
            .iter()
            .position(|&x| x as usize == value)
            .unwrap()
            + 1
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    /// `w s_i`: swaps positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// True iff `l(s_i w) < l(w)`, i.e. `i+1` appears before `i` in one-line notation.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position_of(i) > self.position_of(i + 1)
    }

    /// True iff `l(w s_i) < l(w)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `Inv(w)`: positive roots `e_i - e_j` (reported as `(i, j)`, `i < j`)
    /// sent to negative roots, i.e. `w(i) > w(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(i) > self.apply(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A reduced word `[i_1, ..., i_l]` with `w = s_{i_1} ... s_{i_l}`.
    ///
    /// Peels off the smallest right descent repeatedly, which makes the word
    /// deterministic.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            rev.push(i);
            w = w.right_mul_simple(i);
        }
        rev.reverse();
        rev
    }

    /// Action on `Z^n` by permuting coordinates: `(w mu)_{w(i)} = mu_i`.
    pub fn act(&self, mu: &Weight) -> Weight {
        let mut out = vec![0; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            out[x as usize - 1] = mu.0[k];
        }
        Weight(out)
    }

    /// The unique factorization `w = u v` with `u` the minimal-length
    /// representative of `w S_{n,lambda}` and `v` in the stabilizer of the
    /// dominant weight `lambda`.
    pub fn parabolic_factorize(&self, lambda: &Weight) -> (Permutation, Permutation) {
        let mut images = self.images.clone();
        for (a, b) in lambda.equal_blocks() {
            images[a - 1..b].sort_unstable();
        }
        let u = Permutation { images };
        let v = &u.inverse() * self;
        (u, v)
    }

    /// True iff `w` is the minimal-length element of its coset `w S_{n,lambda}`.
    pub fn is_min_coset_rep(&self, lambda: &Weight) -> bool {
        lambda
            .equal_blocks()
            .iter()
            .all(|&(a, b)| self.images[a - 1..b].windows(2).all(|p| p[0] < p[1]))
    }

    /// Bruhat order via the tableau criterion: `u <= v` iff for every `k`
    /// the sorted prefix `u[k]` is entrywise below the sorted prefix `v[k]`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n(), "bruhat_leq across different n");
        let mut a = Vec::with_capacity(self.n());
        let mut b = Vec::with_capacity(self.n());
        for k in 0..self.n() {
            a.push(self.images[k]);
            b.push(other.images[k]);
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// All of `S_n` in lexicographic order of one-line notation, refusing
    /// `n` above [`enumeration_limit`].
    pub fn all(n: usize) -> Result<Vec<Permutation>> {
        Self::all_with_limit(n, enumeration_limit())
    }

    pub fn all_with_limit(n: usize, limit: usize) -> Result<Vec<Permutation>> {
        if n > limit {
            return Err(Error::TooLarge { n, limit });
        }
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        Ok(out)
    }

    /// The stabilizer `S_{n,lambda}` of a dominant weight, as the product of
    /// the symmetric groups on its blocks of equal entries.
    pub fn stabilizer(lambda: &Weight) -> Vec<Permutation> {
        let n = lambda.n();
        let mut out = vec![Permutation::identity(n)];
        for (a, b) in lambda.equal_blocks() {
            let block: Vec<Vec<u8>> = {
                let mut cur: Vec<u8> = (a as u8..=b as u8).collect();
                let mut all = Vec::new();
                loop {
                    all.push(cur.clone());
                    if !next_permutation(&mut cur) {
                        break;
                    }
                }
                all
            };
            out = out
                .iter()
                .flat_map(|w| {
                    block.iter().map(move |vals| {
                        let mut images = w.images.clone();
                        images[a - 1..b].copy_from_slice(vals);
                        Permutation { images }
                    })
                })
                .collect();
        }
        out.sort();
        out
    }

    /// Renders a reduced word as `s1 s2`, or `e` for the identity.
    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n(), "composing permutations of different n");
        Permutation {
            images: rhs
                .images
                .iter()
                .map(|&x| self.images[x as usize - 1])
                .collect(),
        }
    }
}

/// Renders as `[2,1,3]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.images.iter())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
