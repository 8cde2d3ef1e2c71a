//! Tableau weights: `psi_T` by three formulas, the Hecke lift
//! `Psi_T` by its definition and by recursion, and the scalar `psi~_T`.

use std::collections::HashMap;

use crate::affine::AffineElement;
use crate::error::{Error, Result};
use crate::hall_littlewood::w_lambda;
use crate::hecke::HeckeElement;
use crate::laurent::LaurentPoly;
use crate::tableau::{horizontal_strip, Column, Filling, Partition};

/// `psi_{lambda/mu}` for a horizontal strip `lambda - mu`.
pub fn strip(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if !horizontal_strip(lambda, mu)? {
        return Err(Error::NotAStrip(lambda.to_string(), mu.to_string()));
    }
    let lc = lambda.column_lengths();
    let mc = mu.column_lengths();
    let theta =
        |j: usize| lc.get(j - 1).copied().unwrap_or(0) - mc.get(j - 1).copied().unwrap_or(0);
    Ok((1..=lc.len())
        .filter(|&j| theta(j) == 0 && theta(j + 1) == 1)
        .map(|j| LaurentPoly::one_minus_t_pow(mu.multiplicity(j) as i32))
        .product())
}

fn require_semistandard(t: &Filling) -> Result<()> {
    if t.is_semistandard() {
        Ok(())
    } else {
        Err(Error::NotSemistandard(t.to_string()))
    }
}

/// `psi_T` as a product of strip factors along the Gelfand-Tsetlin flag.
pub fn psi_strip(t: &Filling) -> Result<LaurentPoly> {
    require_semistandard(t)?;
    let mut out = LaurentPoly::one();
    for i in 1..t.n() {
        out *= &strip(&t.shape_below(i + 1), &t.shape_below(i))?;
    }
    Ok(out)
}

/// `psi_T` as a product of box factors.
pub fn psi_box(t: &Filling) -> Result<LaurentPoly> {
    require_semistandard(t)?;
    let cols = t.columns();
    let mut out = LaurentPoly::one();
    for c in 0..cols.len().saturating_sub(1) {
        let (here, right) = (cols[c].entries(), cols[c + 1].entries());
        for (r, &i) in right.iter().enumerate() {
            let leg = &here[r + 1..];
            if here[r] == i || leg.contains(&i) {
                continue;
            }
            let below = leg.iter().filter(|&&x| x < i).count() as i32;
            out *= &LaurentPoly::one_minus_t_pow(below + 1);
        }
    }
    Ok(out)
}

/// `psi_T` through the two-column recursion, multiplied over adjacent
/// column pairs. Non-semistandard fillings give 0.
pub fn psi_two_column(t: &Filling) -> LaurentPoly {
    if !t.is_semistandard() {
        return LaurentPoly::zero();
    }
    t.columns()
        .windows(2)
        .map(|w| psi_two_columns(&w[0], &w[1]))
        .product()
}

fn psi_two_columns(f: &Column, e: &Column) -> LaurentPoly {
    let pair =
        Filling::new(vec![f.clone(), e.clone()], f.n()).expect("left column is at least as long");
    if !pair.is_semistandard() {
        return LaurentPoly::zero();
    }
    let Some(j) = (1..f.n()).find(|&j| !e.contains(j) && e.contains(j + 1)) else {
        return LaurentPoly::one();
    };
    let se = e.reflected(j);
    let sf = f.reflected(j);
    if f.contains(j) && !f.contains(j + 1) {
        psi_two_columns(&sf, &se) * LaurentPoly::t()
            + psi_two_columns(f, &se) * LaurentPoly::one_minus_t_pow(1)
    } else {
        psi_two_columns(&sf, &se)
    }
}

/// `Psi_T` by its defining construction: start from `1_0` and, moving
/// right to left, extract the parabolic component of each column.
pub fn bigpsi_def(t: &Filling) -> HeckeElement {
    let n = t.n();
    let mut psi = HeckeElement::symmetrizer(n, &crate::hecke::Subgroup::Full)
        .expect("n within the enumeration limit");
    for c in t.columns().iter().rev() {
        let parts = psi.parabolic_decompose(c.len());
        let Some(h) = parts.get(c) else {
            return HeckeElement::zero(n);
        };
        psi = &HeckeElement::scaled_inv_tw_inverse(&c.coset_rep()) * h;
    }
    psi
}

/// Which admissible `j` the recursion descends along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StepChoice {
    #[default]
    Smallest,
    Largest,
}

fn pick_step(first: &Column, choice: StepChoice) -> Option<usize> {
    let mut admissible = (1..first.n()).filter(|&j| !first.contains(j) && first.contains(j + 1));
    match choice {
        StepChoice::Smallest => admissible.next(),
        StepChoice::Largest => admissible.next_back(),
    }
}

/// One step of the column recursion on `T ⊗ T^0_mu`: the leading filling,
/// whether the leading factor is `T_j` (otherwise `t T_j^{-1}`), and the
/// signed side terms.
struct Step {
    j: usize,
    lead: Filling,
    lead_is_generator: bool,
    side: Vec<(i8, Filling)>,
}

fn recursion_step(t: &Filling, choice: StepChoice) -> Option<Step> {
    let (head, _) = t.split_highest_tail();
    let r = head.num_columns();
    if r == 0 {
        return None;
    }
    let j = pick_step(head.column(1), choice)?;
    // Omega applied to the head only, then the tail reattached
    let omega = |k: usize| {
        let moved = head.omega(j, k);
        let mut cols = moved.columns().to_vec();
        cols.extend_from_slice(&t.columns()[r..]);
        Filling::new(cols, t.n()).expect("reflections preserve column lengths")
    };
    let top = head.column(r);
    let lead_is_generator = top.contains(j) && !top.contains(j + 1);
    let side = (1..r)
        .filter(|&k| head.column(k).sign(j) * head.column(k + 1).sign(j) == -1)
        .map(|k| (head.column(k).sign(j), omega(k)))
        .collect();
    Some(Step {
        j,
        lead: omega(r),
        lead_is_generator,
        side,
    })
}

/// Memoized evaluation of `Psi_T` through the column recursion.
#[derive(Default)]
pub struct BigPsiRecursion {
    choice: StepChoice,
    memo: HashMap<Filling, HeckeElement>,
}

impl BigPsiRecursion {
    pub fn new(choice: StepChoice) -> Self {
        BigPsiRecursion {
            choice,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, t: &Filling) -> HeckeElement {
        if let Some(h) = self.memo.get(t) {
            return h.clone();
        }
        let n = t.n();
        let value = if !t.is_semistandard() {
            HeckeElement::zero(n)
        } else if t.is_highest_weight() {
            HeckeElement::one_lambda(&t.shape().to_weight())
        } else {
            let step = recursion_step(t, self.choice)
                .expect("a non-highest-weight head has an admissible step");
            let lead = self.eval(&step.lead);
            let mut value = if step.lead_is_generator {
                lead.left_mul_generator(step.j)
            } else {
                lead.left_mul_scaled_inverse(step.j)
            };
            for (sign, s) in &step.side {
                let c = LaurentPoly::one_minus_t_pow(1).scale(&(*sign).into());
                value.add_scaled(&self.eval(s), &c);
            }
            value
        };
        self.memo.insert(t.clone(), value.clone());
        value
    }
}

/// `Psi_{T ⊗ T^0_mu}` through the column recursion.
pub fn bigpsi_rec(t: &Filling, mu: &Partition) -> Result<HeckeElement> {
    let full = t.tensor(&Filling::highest_weight(mu))?;
    Ok(BigPsiRecursion::default().eval(&full))
}

/// `psi~_T = (Psi_T 1_0) / W_lambda(t)`, failing if the division is inexact.
pub fn tilde_psi(t: &Filling) -> Result<LaurentPoly> {
    bigpsi_def(t)
        .project_one0()
        .exact_div(&w_lambda(&t.shape()))
}

/// Memoized evaluation of `psi~_T` through the scalar form of the column recursion.
#[derive(Default)]
pub struct TildePsiRecursion {
    choice: StepChoice,
    memo: HashMap<Filling, LaurentPoly>,
}

impl TildePsiRecursion {
    pub fn new(choice: StepChoice) -> Self {
        TildePsiRecursion {
            choice,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, t: &Filling) -> LaurentPoly {
        if let Some(v) = self.memo.get(t) {
            return v.clone();
        }
        let value = if !t.is_semistandard() {
            LaurentPoly::zero()
        } else if t.is_highest_weight() {
            LaurentPoly::one()
        } else {
            let step = recursion_step(t, self.choice)
                .expect("a non-highest-weight head has an admissible step");
            let lead = self.eval(&step.lead);
            let mut value = if step.lead_is_generator {
                lead.shift(1)
            } else {
                lead
            };
            for (sign, s) in &step.side {
                let c = LaurentPoly::one_minus_t_pow(1).scale(&(*sign).into());
                value += &(self.eval(s) * c);
            }
            value
        };
        self.memo.insert(t.clone(), value.clone());
        value
    }
}

/// `psi~_T` through the scalar recursion.
pub fn tilde_psi_rec(t: &Filling) -> LaurentPoly {
    TildePsiRecursion::default().eval(t)
}

/// `sum_{C in B(varpi_len)} X^C Psi_{C ⊗ K}`.
pub fn column_sum(k: &Filling, len: usize) -> Result<AffineElement> {
    let n = k.n();
    let mut out = AffineElement::zero(n);
    for c in Column::enumerate(len, n)? {
        let ck = Filling::single(c.clone()).tensor(k)?;
        out = &out + &AffineElement::from_parts(c.vector(), bigpsi_def(&ck));
    }
    Ok(out)
}

/// Checks both identities describing `t T_j^{-1}` and `T_j`
/// acting on `sum_C X^C Psi_{C ⊗ K}` against their case formulas.
pub fn column_sum_check(k: &Filling, len: usize, j: usize) -> Result<bool> {
    let n = k.n();
    if j == 0 || j >= n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    let sum = column_sum(k, len)?;
    let tj = HeckeElement::generator(n, j);
    let g_lhs = sum.left_mul_hecke(&tj);
    let f_lhs = &g_lhs + &sum.scale(&LaurentPoly::one_minus_t_pow(1));

    let one_minus_t = LaurentPoly::one_minus_t_pow(1);
    let mut f_rhs = AffineElement::zero(n);
    let mut g_rhs = AffineElement::zero(n);
    for d in Column::enumerate(len, n)? {
        let dk = bigpsi_def(&Filling::single(d.clone()).tensor(k)?);
        let sdk = bigpsi_def(&Filling::single(d.reflected(j)).tensor(k)?);
        let (f, g) = if d.pairing_simple(j) <= 0 {
            let lead = sdk.left_mul_scaled_inverse(j);
            let g = &lead - &dk.scale(&one_minus_t);
            (lead, g)
        } else {
            let lead = sdk.left_mul_generator(j);
            let f = &lead + &dk.scale(&one_minus_t);
            (f, lead)
        };
        f_rhs = &f_rhs + &AffineElement::from_parts(d.vector(), f);
        g_rhs = &g_rhs + &AffineElement::from_parts(d.vector(), g);
    }
    Ok(f_lhs == f_rhs && g_lhs == g_rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn rows(s: &str, n: usize) -> Filling {
        Filling::parse_rows(s, n).unwrap()
    }

    fn p(v: &[usize], n: usize) -> Partition {
        Partition::new(v.to_vec(), n).unwrap()
    }

    fn omt(k: i32) -> LaurentPoly {
        LaurentPoly::one_minus_t_pow(k)
    }

    fn tt(n: usize, j: usize) -> HeckeElement {
        HeckeElement::scaled_generator_inverse(n, j)
    }

    #[test]
    fn strip_examples() {
        assert_eq!(
            strip(&p(&[2, 1], 3), &p(&[2, 1], 3)).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(strip(&p(&[2], 3), &p(&[1], 3)).unwrap(), omt(1));
        assert_eq!(strip(&p(&[2, 1], 3), &p(&[1, 1], 3)).unwrap(), omt(2));
        assert!(matches!(
            strip(&p(&[2, 2], 3), &p(&[1], 3)),
            Err(Error::NotAStrip(..))
        ));
    }

    #[test]
    fn strip_product_examples() {
        assert_eq!(psi_strip(&rows("1,2/3", 3)).unwrap(), omt(1));
        assert_eq!(psi_strip(&rows("1,3/2", 3)).unwrap(), omt(2));
        assert_eq!(psi_strip(&rows("1,1,3/2,2", 3)).unwrap(), omt(2));
        assert_eq!(
            psi_strip(&Filling::highest_weight(&p(&[3, 2], 3))).unwrap(),
            LaurentPoly::one()
        );
        assert!(psi_strip(&rows("2,1", 3)).is_err());
    }

    #[test]
    fn box_examples() {
        assert_eq!(psi_box(&rows("1,2/3", 3)).unwrap(), omt(1));
        assert_eq!(psi_box(&rows("1,3/2", 3)).unwrap(), omt(2));
        assert_eq!(psi_box(&rows("2/3", 3)).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn two_column_examples() {
        assert_eq!(psi_two_column(&rows("1,3/2", 3)), omt(2));
        assert_eq!(psi_two_column(&rows("1,1/2", 3)), LaurentPoly::one());
        assert_eq!(psi_two_column(&rows("2,1", 3)), LaurentPoly::zero());
    }

    #[test]
    fn definition_examples() {
        assert_eq!(bigpsi_def(&rows("1,1/3", 3)), tt(3, 2));
        let base = &HeckeElement::one(3) + &HeckeElement::generator(3, 1);
        assert_eq!(bigpsi_def(&rows("1,3/2", 3)), base.scale(&omt(1)));
        let hw = Filling::highest_weight(&p(&[1, 1], 3));
        assert_eq!(
            bigpsi_def(&hw),
            HeckeElement::one_lambda(&p(&[1, 1], 3).to_weight())
        );
        assert!(bigpsi_def(&rows("2,1", 3)).is_zero());
    }

    #[test]
    fn recursion_examples() {
        let t = rows("1,1,2/2,3", 3);
        assert_eq!(
            bigpsi_rec(&t, &Partition::empty(3)).unwrap(),
            HeckeElement::one(3).scale(&(omt(1) * omt(1)))
        );
        let t = rows("1,1,3/2,2", 3);
        let expect =
            &HeckeElement::one(3).scale(&(LaurentPoly::t() * omt(1))) + &tt(3, 1).scale(&omt(1));
        assert_eq!(bigpsi_rec(&t, &Partition::empty(3)).unwrap(), expect);
        assert!(bigpsi_rec(&rows("2,1", 3), &Partition::empty(3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn recursion_with_a_tail() {
        let t = rows("1,3/2", 3);
        let got = bigpsi_rec(&t, &p(&[1], 3)).unwrap();
        assert_eq!(got, bigpsi_def(&rows("1,3,1/2", 3)));
        assert!(matches!(
            bigpsi_rec(&t, &p(&[1, 1, 1], 3)),
            Err(Error::ColumnOrder(_))
        ));
    }

    #[test]
    fn definition_matches_recursion_on_small_shapes() {
        for n in 2..=3 {
            for lam in Partition::all_up_to(4, n) {
                let mut rec = BigPsiRecursion::default();
                for t in Filling::enumerate_column_strict(&lam) {
                    assert_eq!(bigpsi_def(&t), rec.eval(&t), "{t}");
                }
            }
        }
    }

    #[test]
    fn scalar_lift_examples() {
        assert_eq!(
            tilde_psi(&Filling::highest_weight(&p(&[2, 2], 3))).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(tilde_psi(&rows("1,3/2", 3)).unwrap(), omt(2));
        assert_eq!(tilde_psi(&rows("1,2,3/2,3", 3)).unwrap(), omt(1));
        assert_eq!(tilde_psi_rec(&rows("1,2,3/2,3", 3)), omt(1));
    }

    #[test]
    fn column_sum_small_cases() {
        assert!(column_sum_check(&Filling::empty(2), 1, 1).unwrap());
        let k = Filling::single(Column::new(vec![2], 3).unwrap());
        assert!(column_sum_check(&k, 2, 1).unwrap());
    }

    #[test]
    fn scaled_inverse_is_unit_on_one0() {
        let w = Permutation::from_word(3, &[1, 2, 1]);
        assert_eq!(
            HeckeElement::scaled_inv_tw_inverse(&w).project_one0(),
            LaurentPoly::one()
        );
    }
}
