//! The affine Hecke algebra of `GL_n` in the normal form `sum X^mu T_w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, Subgroup};
use crate::laurent::{format_combination, LaurentPoly};
use crate::perm::{Permutation, Weight};
use crate::sympoly::SymPoly;
use crate::tableau::Partition;

/// `sum_mu X^mu h_mu` with each `h_mu` a nonzero element of `H_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    n: usize,
    terms: BTreeMap<Weight, HeckeElement>,
}

impl AffineElement {
    pub fn zero(n: usize) -> Self {
        AffineElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_hecke(HeckeElement::one(n))
    }

    /// `X^mu`.
    pub fn x(mu: Weight) -> Self {
        let n = mu.n();
        Self::from_parts(mu, HeckeElement::one(n))
    }

    /// `X^mu T_w` scaled by `c`.
    pub fn monomial(mu: Weight, w: Permutation, c: LaurentPoly) -> Self {
        Self::from_parts(mu, HeckeElement::term(w, c))
    }

    /// `X^mu h`.
    pub fn from_parts(mu: Weight, h: HeckeElement) -> Self {
        let mut a = Self::zero(h.n());
        a.add_component(mu, &h, &LaurentPoly::one());
        a
    }

    /// `X^0 h`.
    pub fn from_hecke(h: HeckeElement) -> Self {
        Self::from_parts(Weight::zero(h.n()), h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `X^mu T_w` basis terms.
    pub fn len(&self) -> usize {
        self.terms.values().map(HeckeElement::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The Hecke component `h_mu`.
    pub fn component(&self, mu: &Weight) -> HeckeElement {
        self.terms
            .get(mu)
            .cloned()
            .unwrap_or_else(|| HeckeElement::zero(self.n))
    }

    pub fn components(&self) -> impl Iterator<Item = (&Weight, &HeckeElement)> {
        self.terms.iter()
    }

    /// Basis triples `(mu, w, c)` for the terms `c X^mu T_w`.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Permutation, &LaurentPoly)> {
        self.terms
            .iter()
            .flat_map(|(mu, h)| h.terms().map(move |(w, c)| (mu, w, c)))
    }

    pub fn coeff(&self, mu: &Weight, w: &Permutation) -> LaurentPoly {
        self.terms.get(mu).map(|h| h.coeff(w)).unwrap_or_default()
    }

    fn add_component(&mut self, mu: Weight, h: &HeckeElement, c: &LaurentPoly) {
        if h.is_zero() || c.is_zero() {
            return;
        }
        let n = self.n;
        let entry = self
            .terms
            .entry(mu.clone())
            .or_insert_with(|| HeckeElement::zero(n));
        entry.add_scaled(h, c);
        if entry.is_zero() {
            self.terms.remove(&mu);
        }
    }

    fn add_scaled(&mut self, other: &AffineElement, c: &LaurentPoly) {
        for (mu, h) in &other.terms {
            self.add_component(mu.clone(), h, c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut a = Self::zero(self.n);
        a.add_scaled(self, c);
        a
    }

    /// `T_i X^mu` in normal form.
    pub fn commute_ti_xmu(i: usize, mu: &Weight) -> Self {
        let n = mu.n();
        let smu = mu.reflect(i);
        let alpha = Weight::simple_root(n, i);
        let mut a = Self::monomial(smu, Permutation::simple(n, i), LaurentPoly::one());
        let m = mu.pairing_simple(i);
        let one = HeckeElement::one(n);
        if m >= 0 {
            let c = LaurentPoly::one_minus_t_pow(1);
            for j in 1..=m {
                a.add_component(mu - &alpha.scaled(j), &one, &c);
            }
        } else {
            let c = -LaurentPoly::one_minus_t_pow(1);
            for j in 0..-m {
                a.add_component(mu + &alpha.scaled(j), &one, &c);
            }
        }
        a
    }

    /// `T_i * self`.
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (mu, h) in &self.terms {
            for (nu, g) in &Self::commute_ti_xmu(i, mu).terms {
                let gh = g * h;
                out.add_component(nu.clone(), &gh, &LaurentPoly::one());
            }
        }
        out
    }

    /// `T_w * self`, one generator at a time along a reduced word of `w`.
    pub fn left_mul_basis(&self, w: &Permutation) -> Self {
        w.reduced_word()
            .iter()
            .rev()
            .fold(self.clone(), |a, &i| a.left_mul_generator(i))
    }

    /// `h * self` for `h` in the finite Hecke algebra.
    pub fn left_mul_hecke(&self, h: &HeckeElement) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in h.terms() {
            out.add_scaled(&self.left_mul_basis(w), c);
        }
        out
    }

    /// `self * h` for `h` in the finite Hecke algebra.
    pub fn right_mul_hecke(&self, h: &HeckeElement) -> Self {
        let mut out = Self::zero(self.n);
        for (mu, g) in &self.terms {
            out.add_component(mu.clone(), &(g * h), &LaurentPoly::one());
        }
        out
    }

    /// `self * X^nu`. Each `T_w X^nu` is straightened once and reused.
    pub fn right_mul_x(&self, nu: &Weight) -> Self {
        let mut cache: HashMap<Permutation, AffineElement> = HashMap::new();
        let mut out = Self::zero(self.n);
        for (mu, h) in &self.terms {
            for (w, c) in h.terms() {
                let moved = cache
                    .entry(w.clone())
                    .or_insert_with(|| Self::x(nu.clone()).left_mul_basis(w));
                for (rho, g) in &moved.terms {
                    out.add_component(mu + rho, g, c);
                }
            }
        }
        out
    }

    /// `X^nu * self`.
    pub fn left_mul_x(&self, nu: &Weight) -> Self {
        AffineElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(mu, h)| (nu + mu, h.clone()))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &AffineElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (nu, g) in &other.terms {
            let moved = self.right_mul_x(nu).right_mul_hecke(g);
            out.add_scaled(&moved, &LaurentPoly::one());
        }
        Ok(out)
    }

    /// `1_0 X^lambda`, built by right multiplication with `X^{varpi_l}`
    /// one column at a time, shortest columns first.
    pub fn one0_xlambda(lambda: &Partition) -> Result<Self> {
        let n = lambda.n();
        let one0 = HeckeElement::symmetrizer(n, &Subgroup::Full)?;
        let mut a = Self::from_hecke(one0);
        let mut lengths = lambda.column_lengths();
        lengths.sort_unstable();
        for len in lengths {
            a = a.right_mul_x(&Weight::fundamental(n, len));
        }
        Ok(a)
    }

    /// The polynomial `f` with `self * 1_0 = f(X) 1_0`.
    pub fn satake_project(&self) -> SymPoly {
        let mut p = SymPoly::zero(self.n);
        for (mu, h) in &self.terms {
            p.add_term(mu.clone(), h.project_one0());
        }
        p
    }
}

impl Add for &AffineElement {
    type Output = AffineElement;
    fn add(self, rhs: &AffineElement) -> AffineElement {
        assert_eq!(self.n, rhs.n, "adding affine Hecke elements of different n");
        let mut a = self.clone();
        a.add_scaled(rhs, &LaurentPoly::one());
        a
    }
}

impl Sub for &AffineElement {
    type Output = AffineElement;
    fn sub(self, rhs: &AffineElement) -> AffineElement {
        assert_eq!(
            self.n, rhs.n,
            "subtracting affine Hecke elements of different n"
        );
        let mut a = self.clone();
        a.add_scaled(rhs, &LaurentPoly::constant(-1));
        a
    }
}

/// Panics on mismatched `n`; use [`AffineElement::try_mul`] to get an error instead.
impl Mul for &AffineElement {
    type Output = AffineElement;
    fn mul(self, rhs: &AffineElement) -> AffineElement {
        self.try_mul(rhs)
            .expect("multiplying affine Hecke elements of different n")
    }
}

/// Renders as `(1 - t)*X[1,0,0]*T[e] + X[0,1,0]*T[s1]`.
impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self
            .terms()
            .map(|(mu, w, c)| (format!("X{mu}*T[{}]", w.word_string()), c));
        f.write_str(&format_combination(items))
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineElement({self})")
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    exponent: &'a Weight,
    permutation: &'a Permutation,
    coefficient: &'a LaurentPoly,
}

/// JSON form: a list of `{exponent, permutation, coefficient}` records.
impl Serialize for AffineElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (mu, w, c) in self.terms() {
            seq.serialize_element(&TermRecord {
                exponent: mu,
                permutation: w,
                coefficient: c,
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(v: &[i32]) -> Weight {
        Weight(v.to_vec())
    }

    fn x(v: &[i32]) -> AffineElement {
        AffineElement::x(wt(v))
    }

    fn t_gen(n: usize, i: usize) -> AffineElement {
        AffineElement::from_hecke(HeckeElement::generator(n, i))
    }

    #[test]
    fn commutation_when_orthogonal() {
        let mu = wt(&[1, 1, 0]);
        let expect =
            AffineElement::monomial(mu.clone(), Permutation::simple(3, 1), LaurentPoly::one());
        assert_eq!(AffineElement::commute_ti_xmu(1, &mu), expect);
    }

    #[test]
    fn commutation_single_step() {
        // T_1 X_1 = X_2 (T_1 + 1 - t)
        let got = AffineElement::commute_ti_xmu(1, &wt(&[1, 0]));
        let expect =
            AffineElement::from_parts(wt(&[0, 1]), HeckeElement::scaled_generator_inverse(2, 1));
        assert_eq!(got, expect);
        // T_1 X_2 = X_1 T_1 + (t - 1) X_2
        let got = AffineElement::commute_ti_xmu(1, &wt(&[0, 1]));
        let expect = &t_gen(2, 1).left_mul_x(&wt(&[1, 0]))
            + &x(&[0, 1]).scale(&-LaurentPoly::one_minus_t_pow(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn commutation_double_step() {
        let got = AffineElement::commute_ti_xmu(1, &wt(&[2, 0]));
        let c = LaurentPoly::one_minus_t_pow(1);
        let expect =
            &(&AffineElement::monomial(wt(&[0, 2]), Permutation::simple(2, 1), LaurentPoly::one())
                + &x(&[1, 1]).scale(&c))
                + &x(&[0, 2]).scale(&c);
        assert_eq!(got, expect);
    }

    #[test]
    fn defining_relations() {
        for n in 2..=4 {
            for i in 1..n {
                let ti = t_gen(n, i);
                let xi = x(&Weight::unit(n, i).0);
                let xi1 = x(&Weight::unit(n, i + 1).0);
                assert_eq!(&(&ti * &xi) * &ti, xi1.scale(&LaurentPoly::t()));
                for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                    let xj = x(&Weight::unit(n, j).0);
                    assert_eq!(&ti * &xj, &xj * &ti);
                }
            }
        }
    }

    #[test]
    fn x_monomials_multiply() {
        assert_eq!(&x(&[1, 0, 2]) * &x(&[0, -1, 1]), x(&[1, -1, 3]));
    }

    #[test]
    fn stabilizer_commutes_past_x() {
        let mu = wt(&[2, 2, 1]);
        let tw = t_gen(3, 1);
        assert_eq!(
            &tw * &AffineElement::x(mu.clone()),
            &AffineElement::x(mu) * &tw
        );
    }

    #[test]
    fn one0_x_varpi1() {
        let lam = Partition::new(vec![1], 3).unwrap();
        let got = AffineElement::one0_xlambda(&lam).unwrap();
        let w1 = HeckeElement::one_lambda(&wt(&[1, 0, 0]));
        let tt1 = HeckeElement::scaled_generator_inverse(3, 1);
        let tt2 = HeckeElement::scaled_generator_inverse(3, 2);
        let mut expect = AffineElement::from_parts(wt(&[1, 0, 0]), w1.clone());
        expect = &expect + &AffineElement::from_parts(wt(&[0, 1, 0]), &tt1 * &w1);
        expect = &expect + &AffineElement::from_parts(wt(&[0, 0, 1]), &(&tt2 * &tt1) * &w1);
        assert_eq!(got, expect);
    }

    #[test]
    fn determinant_is_central_on_one0() {
        let lam = Partition::new(vec![1, 1], 2).unwrap();
        let got = AffineElement::one0_xlambda(&lam).unwrap();
        let one0 = HeckeElement::symmetrizer(2, &Subgroup::Full).unwrap();
        assert_eq!(got, AffineElement::from_parts(wt(&[1, 1]), one0));
        assert_eq!(
            AffineElement::one0_xlambda(&Partition::empty(2)).unwrap(),
            AffineElement::from_hecke(HeckeElement::symmetrizer(2, &Subgroup::Full).unwrap())
        );
    }

    #[test]
    fn satake_of_211_example() {
        let lam = Partition::new(vec![2, 1], 3).unwrap();
        let p = AffineElement::one0_xlambda(&lam).unwrap().satake_project();
        // the stabilizer of (2,1,0) is trivial, so no division is needed
        let c = p.coeff(&wt(&[1, 1, 1]));
        assert_eq!(c, LaurentPoly::from_terms([(0, 2), (1, -1), (2, -1)]));
        assert!(p.is_symmetric());
    }

    #[test]
    fn satake_of_basis_term() {
        let w = Permutation::from_word(3, &[1, 2]);
        let p = AffineElement::monomial(wt(&[1, 0, 0]), w, LaurentPoly::one()).satake_project();
        assert_eq!(
            p,
            SymPoly::monomial(wt(&[1, 0, 0]), LaurentPoly::t().pow(2))
        );
    }

    #[test]
    fn rendering() {
        let a = AffineElement::commute_ti_xmu(1, &wt(&[1, 0]));
        assert_eq!(a.to_string(), "(1 - t)*X[0,1]*T[e] + X[0,1]*T[s1]");
        let json = serde_json::to_string(&x(&[1, 0])).unwrap();
        assert_eq!(
            json,
            r#"[{"exponent":[1,0],"permutation":[1,2],"coefficient":[[0,1]]}]"#
        );
    }
}
