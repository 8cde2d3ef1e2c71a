//! Hall-Littlewood polynomials `P_lambda(t)` by three independent routes,
//! with specialization checks at `t = 0` and `t = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::affine::AffineElement;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::psi::{psi_strip, tilde_psi};
use crate::sympoly::SymPoly;
use crate::tableau::{Filling, Partition};

/// How a Hall-Littlewood polynomial was assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `sum_T psi_T X^T` with the strip formula.
    Macdonald,
    /// `1_0 X^lambda 1_0 / W_lambda` in the affine Hecke algebra.
    Hecke,
    /// `sum_T psi~_T X^T` with `psi~` read off the Hecke lift.
    PsiLift,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Macdonald, Route::Hecke, Route::PsiLift];

    pub fn name(self) -> &'static str {
        match self {
            Route::Macdonald => "macdonald",
            Route::Hecke => "hecke",
            Route::PsiLift => "psi_lift",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `P_lambda(t)` in `n` variables, tagged with the route that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLExpansion {
    pub shape: Partition,
    pub n: usize,
    pub route: Route,
    pub poly: SymPoly,
}

impl HLExpansion {
    /// Coefficient of `X^lambda`.
    pub fn leading_coefficient(&self) -> LaurentPoly {
        self.poly.coeff(&self.shape.to_weight())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_one()
    }

    pub fn report(&self, checks: Vec<Check>) -> Report<'_> {
        Report {
            shape: &self.shape,
            n: self.n,
            route: self.route,
            coefficients: &self.poly,
            checks,
        }
    }
}

/// A named pass/fail outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
        }
    }
}

/// The JSON report `{shape, n, route, coefficients, checks}`.
#[derive(Serialize)]
pub struct Report<'a> {
    pub shape: &'a Partition,
    pub n: usize,
    pub route: Route,
    pub coefficients: &'a SymPoly,
    pub checks: Vec<Check>,
}

/// `W_lambda(t)`, the Poincare polynomial of the stabilizer of `lambda`.
pub fn w_lambda(lambda: &Partition) -> LaurentPoly {
    lambda
        .to_weight()
        .equal_blocks()
        .into_iter()
        .map(|(a, b)| LaurentPoly::t_factorial((b - a + 1) as u32))
        .product()
}

/// `P_lambda = sum_T psi_T X^T` over semistandard tableaux of shape `lambda`.
pub fn p_tableau_sum(lambda: &Partition) -> Result<HLExpansion> {
    let mut poly = SymPoly::zero(lambda.n());
    for t in Filling::enumerate_ssyt(lambda) {
        poly.add_term(t.weight(), psi_strip(&t)?);
    }
    Ok(expansion(lambda, Route::Macdonald, poly))
}

/// `P_lambda 1_0 = (1 / W_lambda) 1_0 X^lambda 1_0`.
pub fn p_hecke(lambda: &Partition) -> Result<HLExpansion> {
    let projected = AffineElement::one0_xlambda(lambda)?.satake_project();
    let poly = projected.exact_div(&w_lambda(lambda))?;
    Ok(expansion(lambda, Route::Hecke, poly))
}

/// `P_lambda = sum_T psi~_T X^T` with `psi~_T = (Psi_T 1_0) / W_lambda`.
pub fn p_psi_lift(lambda: &Partition) -> Result<HLExpansion> {
    let mut poly = SymPoly::zero(lambda.n());
    for t in Filling::enumerate_ssyt(lambda) {
        poly.add_term(t.weight(), tilde_psi(&t)?);
    }
    Ok(expansion(lambda, Route::PsiLift, poly))
}

pub fn expand(lambda: &Partition, route: Route) -> Result<HLExpansion> {
    match route {
        Route::Macdonald => p_tableau_sum(lambda),
        Route::Hecke => p_hecke(lambda),
        Route::PsiLift => p_psi_lift(lambda),
    }
}

fn expansion(lambda: &Partition, route: Route, poly: SymPoly) -> HLExpansion {
    HLExpansion {
        shape: lambda.clone(),
        n: lambda.n(),
        route,
        poly,
    }
}

/// Number of semistandard tableaux of shape `lambda` with content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &crate::perm::Weight) -> usize {
    Filling::enumerate_ssyt(lambda)
        .iter()
        .filter(|t| &t.weight() == mu)
        .count()
}

/// Checks `P_lambda(0) = s_lambda` coefficientwise against Kostka numbers
/// and `P_lambda(1) = m_lambda`.
pub fn specialization_check(p: &HLExpansion) -> Result<Vec<Check>> {
    let lambda = &p.shape;
    let at_zero = p.poly.eval(&BigRational::from_integer(BigInt::from(0)))?;
    let mut kostka = std::collections::BTreeMap::new();
    for t in Filling::enumerate_ssyt(lambda) {
        *kostka.entry(t.weight()).or_insert(0usize) += 1;
    }
    let zero_ok = at_zero.len() == kostka.len()
        && kostka
            .iter()
            .all(|(mu, &k)| at_zero.get(mu) == Some(&BigRational::from_integer(BigInt::from(k))));

    let at_one = p.poly.eval(&BigRational::from_integer(BigInt::from(1)))?;
    let m = SymPoly::monomial_symmetric(&lambda.to_weight());
    let one = BigRational::from_integer(BigInt::from(1));
    let one_ok = at_one.len() == m.len() && m.terms().all(|(mu, _)| at_one.get(mu) == Some(&one));

    Ok(vec![
        Check::new("t=0 gives Kostka numbers", zero_ok),
        Check::new("t=1 gives m_lambda", one_ok),
    ])
}
