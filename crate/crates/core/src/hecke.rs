//! The finite Hecke algebra `H_n` over `Z[t, t^-1]` in the basis `{T_w}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{format_combination, LaurentPoly};
use crate::perm::{enumeration_limit, Permutation, Weight};
use crate::tableau::Column;

/// A finite sum `sum_w c_w T_w` with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

/// Which parabolic subgroup a symmetrizer sums over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// All of `S_n`.
    Full,
    /// The stabilizer of a dominant weight.
    Stabilizer(Weight),
    /// Permutations of the interval `[a, b]`, fixing everything else.
    Interval(usize, usize),
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// `T_w`.
    pub fn basis(w: Permutation) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    /// `c * T_w`.
    pub fn term(w: Permutation, c: LaurentPoly) -> Self {
        let mut h = Self::zero(w.n());
        h.add_term(w, c);
        h
    }

    /// `T_i`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(Permutation::simple(n, i))
    }

    /// `T_i^{-1} = t^{-1} (T_i + 1 - t)`.
    pub fn generator_inverse(n: usize, i: usize) -> Self {
        Self::scaled_generator_inverse(n, i).scale(&LaurentPoly::monomial(-1, 1))
    }

    /// `t T_i^{-1} = T_i + 1 - t`.
    pub fn scaled_generator_inverse(n: usize, i: usize) -> Self {
        let mut h = Self::generator(n, i);
        h.add_term(Permutation::identity(n), LaurentPoly::one_minus_t_pow(1));
        h
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, LaurentPoly)>,
    ) -> Result<Self> {
        let mut h = Self::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::RankMismatch(w.n(), n));
            }
            h.add_term(w, c);
        }
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    pub(crate) fn add_term(&mut self, w: Permutation, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &HeckeElement, c: &LaurentPoly) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut h = Self::zero(self.n);
        self.terms
            .iter()
            .for_each(|(w, d)| h.add_term(w.clone(), d * c));
        h
    }

    /// `T_i * self`.
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let mut h = Self::zero(self.n);
        for (w, c) in &self.terms {
            let sw = w.left_mul_simple(i);
            if w.has_left_descent(i) {
                h.add_term(w.clone(), c.shift(1) - c);
                h.add_term(sw, c.shift(1));
            } else {
                h.add_term(sw, c.clone());
            }
        }
        h
    }

    /// `self * T_j`.
    pub fn right_mul_generator(&self, j: usize) -> Self {
        let mut h = Self::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.right_mul_simple(j);
            if w.has_right_descent(j) {
                h.add_term(w.clone(), c.shift(1) - c);
                h.add_term(ws, c.shift(1));
            } else {
                h.add_term(ws, c.clone());
            }
        }
        h
    }

    /// `self * (t T_j^{-1}) = self * T_j + (1 - t) self`.
    pub fn right_mul_scaled_inverse(&self, j: usize) -> Self {
        let mut h = self.right_mul_generator(j);
        h.add_scaled(self, &LaurentPoly::one_minus_t_pow(1));
        h
    }

    /// `(t T_j^{-1}) * self = T_j self + (1 - t) self`.
    pub fn left_mul_scaled_inverse(&self, j: usize) -> Self {
        let mut h = self.left_mul_generator(j);
        h.add_scaled(self, &LaurentPoly::one_minus_t_pow(1));
        h
    }

    /// `T_w * self`, one generator at a time along a reduced word of `w`.
    pub fn left_mul_basis(&self, w: &Permutation) -> Self {
        w.reduced_word()
            .iter()
            .rev()
            .fold(self.clone(), |h, &i| h.left_mul_generator(i))
    }

    pub fn try_mul(&self, other: &HeckeElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_scaled(&other.left_mul_basis(w), c);
        }
        Ok(out)
    }

    /// `(T_{w^{-1}})^{-1}`, the product of `T_i^{-1}` along a reduced word of `w`.
    pub fn inv_tw_inverse(w: &Permutation) -> Self {
        let scaled = Self::scaled_inv_tw_inverse(w);
        scaled.scale(&LaurentPoly::monomial(-(w.length() as i32), 1))
    }

    /// `t^{l(w)} (T_{w^{-1}})^{-1}`, the product of `t T_i^{-1}` along a
    /// reduced word of `w`. All coefficients are polynomials.
    pub fn scaled_inv_tw_inverse(w: &Permutation) -> Self {
        w.reduced_word()
            .iter()
            .fold(Self::one(w.n()), |h, &i| h.right_mul_scaled_inverse(i))
    }

    /// `sum T_w` over the given subgroup.
    pub fn symmetrizer(n: usize, group: &Subgroup) -> Result<Self> {
        let elements = match group {
            Subgroup::Full => Permutation::all(n)?,
            Subgroup::Stabilizer(lambda) => {
                if lambda.n() != n {
                    return Err(Error::RankMismatch(lambda.n(), n));
                }
                let limit = enumeration_limit();
                if let Some(&(a, b)) = lambda
                    .equal_blocks()
                    .iter()
                    .find(|(a, b)| b - a + 1 > limit)
                {
                    return Err(Error::TooLarge {
                        n: b - a + 1,
                        limit,
                    });
                }
                Permutation::stabilizer(lambda)
            }
            Subgroup::Interval(a, b) => {
                if *a < 1 || b > &n || a > b {
                    return Err(Error::IndexOutOfRange { index: *b, n });
                }
                let mut blocks = vec![0; n];
                for (k, x) in blocks.iter_mut().enumerate() {
                    if k + 1 < *a || k + 1 > *b {
                        *x = -(k as i32) - 1;
                    }
                }
                let limit = enumeration_limit();
                if b - a + 1 > limit {
                    return Err(Error::TooLarge {
                        n: b - a + 1,
                        limit,
                    });
                }
                Permutation::stabilizer(&Weight(blocks))
            }
        };
        Self::from_terms(n, elements.into_iter().map(|w| (w, LaurentPoly::one())))
    }

    /// `1_lambda`, the symmetrizer over the stabilizer of `lambda`.
    pub fn one_lambda(lambda: &Weight) -> Self {
        Self::symmetrizer(lambda.n(), &Subgroup::Stabilizer(lambda.clone()))
            .expect("stabilizer symmetrizer within the enumeration limit")
    }

    /// The unique family `h_F` in `H_{n, varpi_l}` with `self = sum_F T_{u_F} h_F`.
    pub fn parabolic_decompose(&self, len: usize) -> BTreeMap<Column, HeckeElement> {
        let varpi = Weight::fundamental(self.n, len);
        let mut out: BTreeMap<Column, HeckeElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            let (_, v) = w.parabolic_factorize(&varpi);
            let f = Column::from_prefix(w, len);
            out.entry(f)
                .or_insert_with(|| Self::zero(self.n))
                .add_term(v, c.clone());
        }
        out.retain(|_, h| !h.is_zero());
        out
    }

    /// `sum_F T_{u_F} h_F`, inverse to [`parabolic_decompose`](Self::parabolic_decompose).
    pub fn parabolic_reassemble(n: usize, parts: &BTreeMap<Column, HeckeElement>) -> Self {
        let mut out = Self::zero(n);
        for (f, h) in parts {
            out.add_scaled(&h.left_mul_basis(&f.coset_rep()), &LaurentPoly::one());
        }
        out
    }

    /// The scalar `c(t)` with `self * 1_0 = c(t) 1_0`.
    pub fn project_one0(&self) -> LaurentPoly {
        self.terms
            .iter()
            .map(|(w, c)| c.shift(w.length() as i32))
            .sum()
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, rhs.n, "adding Hecke elements of different n");
        let mut h = self.clone();
        h.add_scaled(rhs, &LaurentPoly::one());
        h
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.n, rhs.n, "subtracting Hecke elements of different n");
        let mut h = self.clone();
        h.add_scaled(rhs, &LaurentPoly::constant(-1));
        h
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        self.scale(&LaurentPoly::constant(-1))
    }
}

/// Panics on mismatched `n`; use [`HeckeElement::try_mul`] to get an error instead.
impl Mul for &HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        self.try_mul(rhs)
            .expect("multiplying Hecke elements of different n")
    }
}

/// Renders as `(1 - t)*T[s2 s1] + t*T[e]`, longest basis elements first.
impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(&Permutation, &LaurentPoly)> = self.terms.iter().collect();
        items.sort_by_key(|(w, _)| std::cmp::Reverse(w.length()));
        let s = format_combination(
            items
                .into_iter()
                .map(|(w, c)| (format!("T[{}]", w.word_string()), c)),
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    permutation: &'a Permutation,
    coefficient: &'a LaurentPoly,
}

/// JSON form: a list of `{permutation, coefficient}` records.
impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                permutation: w,
                coefficient: c,
            })?;
        }
        seq.end()
    }
}
