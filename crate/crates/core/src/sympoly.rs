//! Laurent polynomials in `X_1, ..., X_n` with coefficients in `Z[t, t^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_rational::BigRational;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{format_combination, LaurentPoly};
use crate::perm::{Permutation, Weight};

/// `sum_mu c_mu X^mu`. Symmetry under `S_n` is checked, not assumed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymPoly {
    n: usize,
    terms: BTreeMap<Weight, LaurentPoly>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: LaurentPoly) -> Self {
        Self::monomial(Weight::zero(n), c)
    }

    /// `c X^mu`.
    pub fn monomial(mu: Weight, c: LaurentPoly) -> Self {
        let mut p = Self::zero(mu.n());
        p.add_term(mu, c);
        p
    }

    /// The monomial symmetric function `m_lambda`.
    pub fn monomial_symmetric(lambda: &Weight) -> Self {
        let mut p = Self::zero(lambda.n());
        for w in Permutation::stabilizer(&Weight::zero(lambda.n())) {
            let mu = w.act(lambda);
            p.terms.insert(mu, LaurentPoly::one());
        }
        p
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

    pub fn coeff(&self, mu: &Weight) -> LaurentPoly {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    /// Terms with exponents in descending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &LaurentPoly)> {
        self.terms.iter().rev()
    }

    pub(crate) fn add_term(&mut self, mu: Weight, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&mu);
        }
    }

    /// True iff the coefficient map is constant on every `S_n`-orbit.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(mu, c)| (1..self.n).all(|i| &self.coeff(&mu.reflect(i)) == c))
    }

    /// Divides every coefficient by `d`, failing unless each quotient is exact.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<Self> {
        let mut p = Self::zero(self.n);
        for (mu, c) in &self.terms {
            p.terms.insert(mu.clone(), c.exact_div(d)?);
        }
        Ok(p)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut p = Self::zero(self.n);
        for (mu, d) in &self.terms {
            p.add_term(mu.clone(), d * c);
        }
        p
    }

    /// Multiplication by the monomial `X^nu`.
    pub fn shift(&self, nu: &Weight) -> Result<Self> {
        if nu.n() != self.n {
            return Err(Error::RankMismatch(nu.n(), self.n));
        }
        Ok(SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu + nu, c.clone()))
                .collect(),
        })
    }

    /// Specializes `t` to a rational number, dropping vanishing coefficients.
    pub fn eval(&self, t0: &BigRational) -> Result<BTreeMap<Weight, BigRational>> {
        let mut out = BTreeMap::new();
        for (mu, c) in &self.terms {
            let v = c.eval(t0)?;
            if v != BigRational::from_integer(0.into()) {
                out.insert(mu.clone(), v);
            }
        }
        Ok(out)
    }

    /// True iff every coefficient lies in `Z[t]`.
    pub fn is_polynomial_in_t(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_polynomial)
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(
            self.n, rhs.n,
            "adding polynomials in different numbers of variables"
        );
        let mut p = self.clone();
        for (mu, c) in &rhs.terms {
            p.add_term(mu.clone(), c.clone());
        }
        p
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &rhs.scale(&LaurentPoly::constant(-1))
    }
}

/// Renders as `X[2,1,0] + (1 - t)*X[1,1,1]`.
impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(
            self.terms().map(|(mu, c)| (format!("X{mu}"), c)),
        ))
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly({self})")
    }
}

#[derive(Serialize)]
pub(crate) struct CoefficientRecord<'a> {
    pub exponent: &'a Weight,
    pub poly: &'a LaurentPoly,
}

/// JSON form: a list of `{exponent, poly}` records.
impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (mu, c) in self.terms() {
            seq.serialize_element(&CoefficientRecord {
                exponent: mu,
                poly: c,
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_symmetric_functions() {
        let m = SymPoly::monomial_symmetric(&Weight(vec![2, 1, 0]));
        assert_eq!(m.len(), 6);
        assert!(m.is_symmetric());
        assert_eq!(SymPoly::monomial_symmetric(&Weight(vec![1, 1, 0])).len(), 3);
    }

    #[test]
    fn symmetry_detection() {
        let p = SymPoly::monomial(Weight(vec![1, 0]), LaurentPoly::one());
        assert!(!p.is_symmetric());
        let q = &p + &SymPoly::monomial(Weight(vec![0, 1]), LaurentPoly::one());
        assert!(q.is_symmetric());
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn termwise_division() {
        let w = LaurentPoly::one() + LaurentPoly::t();
        let p = SymPoly::constant(2, w.clone());
        assert_eq!(
            p.exact_div(&w).unwrap(),
            SymPoly::constant(2, LaurentPoly::one())
        );
        assert!(matches!(
            SymPoly::constant(2, LaurentPoly::one()).exact_div(&w),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn rendering() {
        let p = &SymPoly::monomial(Weight(vec![2, 0]), LaurentPoly::one())
            + &SymPoly::monomial(Weight(vec![1, 1]), LaurentPoly::one_minus_t_pow(1));
        assert_eq!(p.to_string(), "X[2,0] + (1 - t)*X[1,1]");
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"exponent":[2,0],"poly":[[0,1]]},{"exponent":[1,1],"poly":[[0,1],[1,-1]]}]"#
        );
    }
}
