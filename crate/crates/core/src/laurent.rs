//! Exact arithmetic in the Laurent ring `Z[t, t^-1]`.
//!
//! A [`LaurentPoly`] is a sparse map from exponents to nonzero
//! arbitrary-precision integer coefficients. Zero coefficients are never
//! stored, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i32, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: i32) -> Self {
        Self::from_terms([(0, 1), (k, -1)])
    }

    /// The t-integer `[m]_t = 1 + t + ... + t^{m-1}`.
    pub fn t_integer(m: u32) -> Self {
        Self::from_terms((0..m as i32).map(|e| (e, 1)))
    }

    /// The t-factorial `[1]_t [2]_t ... [m]_t`, the Poincare polynomial of `S_m`.
    pub fn t_factorial(m: u32) -> Self {
        (1..=m).fold(Self::one(), |acc, k| acc * Self::t_integer(k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when no exponent is negative, i.e. the element lies in `Z[t]`.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, exp: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self)
    }

    /// Exact quotient `self / den` in `Z[t, t^-1]`.
    ///
    /// Long division runs from the highest exponent down. Any nonzero
    /// remainder, or a leading coefficient that does not divide exactly,
    /// is reported as [`Error::NotDivisible`].
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(den_lo), Some(den_hi)) = (den.min_exp(), den.max_exp()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(num_lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let not_divisible = || Error::NotDivisible {
            num: self.to_string(),
            den: den.to_string(),
        };
        // t is a unit, and den / t^den_lo has a nonzero constant term, so the
        // quotient's lowest exponent is exactly num_lo - den_lo.
        let q_lo = num_lo - den_lo;
        let lead = &den.terms[&den_hi];
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.max_exp() {
            let q_exp = r_hi - den_hi;
            if q_exp < q_lo {
                return Err(not_divisible());
            }
            let (q_coeff, r) = rem.terms[&r_hi].div_rem(lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (e, c) in den.terms() {
                rem.add_term(e + q_exp, -(c * &q_coeff));
            }
            quot.add_term(q_exp, q_coeff);
        }
        Ok(quot)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, t0: &BigRational) -> Result<BigRational> {
        if t0.is_zero() {
            if !self.is_polynomial() {
                return Err(Error::PoleAtZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                num_traits::pow(t0.clone(), e as usize)
            } else {
                num_traits::pow(t0.recip(), e.unsigned_abs() as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Evaluation at an integer point `t0 != 0`, or at 0 when polynomial.
    pub fn eval_int(&self, t0: i64) -> Result<BigRational> {
        self.eval(&BigRational::from_integer(BigInt::from(t0)))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($Tr:ident, $method:ident, $assign:ident) => {
        impl $Tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $Tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $Tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl Mul<LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

/// Renders as `1 - t + 2*t^3`, exponents ascending.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Renders `sum c_b * b` over basis labels, e.g. `(1 - t)*T[s1] + T[e]`.
/// Monomial coefficients are written bare and their sign is pulled out.
pub(crate) fn format_combination<'a>(
    items: impl Iterator<Item = (String, &'a LaurentPoly)>,
) -> String {
    let mut out = String::new();
    for (label, c) in items {
        let (negative, mag) = if c.len() == 1 && c.terms.values().next().unwrap().is_negative() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if mag.is_one() {
            out.push_str(&label);
        } else if mag.len() == 1 {
            out.push_str(&format!("{mag}*{label}"));
        } else {
            out.push_str(&format!("({mag})*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Coeff<'a>(&'a BigInt);

impl Serialize for Coeff<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct OwnedCoeff(BigInt);

impl<'de> Deserialize<'de> for OwnedCoeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = OwnedCoeff;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<OwnedCoeff, E> {
                Ok(OwnedCoeff(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<OwnedCoeff, E> {
                Ok(OwnedCoeff(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<OwnedCoeff, E> {
                v.parse().map(OwnedCoeff).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// JSON form: a list of `[exponent, coefficient]` pairs sorted by exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, Coeff(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut a: A,
            ) -> std::result::Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((e, OwnedCoeff(c))) = a.next_element::<(i32, OwnedCoeff)>()? {
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        d.deserialize_seq(V)
    }
}
