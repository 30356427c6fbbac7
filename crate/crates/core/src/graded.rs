//! Laurent polynomials in `q` and graded dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, DominantWeight, Residue, RootVector};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_block, MultiPartition, Node};
use crate::tableaux::{degree, for_each_factorizable, for_each_standard, ResidueFilter, StandardTableau};

/// Integer Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub struct LaurentPoly(BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `q + q^{-1}`.
    pub fn quantum_two() -> Self {
        Self::monomial(1, 1) + Self::monomial(-1, 1)
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let c = self.0.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn eval_at_1(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplies by `q^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e + shift, c)).collect())
    }

    /// The `c` with `self = q^c * other`, if one exists.
    pub fn shift_from(&self, other: &LaurentPoly) -> Option<i64> {
        match (self.min_degree(), other.min_degree()) {
            (None, None) => Some(0),
            (Some(a), Some(b)) => (other.shifted(a - b) == *self).then_some(a - b),
            _ => None,
        }
    }
}

impl From<Vec<(i64, i64)>> for LaurentPoly {
    fn from(terms: Vec<(i64, i64)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }
}

impl From<LaurentPoly> for Vec<(i64, i64)> {
    fn from(p: LaurentPoly) -> Self {
        p.0.into_iter().collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &-rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&e, &c)) in self.0.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Generating function of degrees over a set of tableaux of `shape`.
fn degree_sum(shape: &MultiPartition, weight: &DominantWeight, each: impl FnOnce(&mut dyn FnMut(&[Node]))) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    each(&mut |nodes| {
        let t = StandardTableau::from_nodes(shape.clone(), nodes.to_vec()).expect("enumeration yields standard tableaux");
        p.add_term(degree(&t, weight), 1);
    });
    p
}

/// `dim_q e(i) S(shape)`.
pub fn gdim_specht_weight(shape: &MultiPartition, weight: &DominantWeight, residues: &[Residue]) -> LaurentPoly {
    let filter = ResidueFilter { weight, residues };
    degree_sum(shape, weight, |visit| for_each_standard(shape, Some(filter), visit))
}

/// `dim_q S(shape)`.
pub fn gdim_specht(shape: &MultiPartition, weight: &DominantWeight) -> LaurentPoly {
    degree_sum(shape, weight, |visit| for_each_standard(shape, None, visit))
}

/// Degree generating function over the tableaux of `shape` whose first
/// `ht(omega)` entries have content `omega`.
pub fn gdim_factorizable(shape: &MultiPartition, weight: &DominantWeight, omega: &RootVector) -> LaurentPoly {
    degree_sum(shape, weight, |visit| for_each_factorizable(shape, weight, omega, visit))
}

/// Graded dimension of the block `R^Lambda_beta`, or of its truncation by
/// `1_{omega, beta - omega}` when `omega` is given (type C only).
pub fn gdim_block(weight: &DominantWeight, beta: &RootVector, omega: Option<&RootVector>) -> Result<LaurentPoly> {
    if omega.is_some() && weight.cartan() != CartanType::CInfinity {
        return Err(Error::RestrictionNeedsTypeC(weight.cartan()));
    }
    Ok(enumerate_block(weight, beta)
        .iter()
        .map(|shape| {
            let p = match omega {
                Some(omega) => gdim_factorizable(shape, weight, omega),
                None => gdim_specht(shape, weight),
            };
            &p * &p
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::tableaux::{initial_tableau, residue_sequence};

    fn c(kappa: Residue) -> DominantWeight {
        DominantWeight::type_c(kappa).unwrap()
    }

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let v = LaurentPoly::quantum_two();
        assert_eq!(v.pow(2), LaurentPoly::from(vec![(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(LaurentPoly::monomial(3, 1).bar(), LaurentPoly::monomial(-3, 1));
        assert_eq!(v.pow(3).eval_at_1(), 8);
        assert!((&v - &v).is_zero());
        assert_eq!(LaurentPoly::from(vec![(1, 2), (1, -2)]), LaurentPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::quantum_two().pow(2).to_string(), "q^2 + 2 + q^-2");
        assert_eq!(LaurentPoly::from(vec![(1, -3), (0, 1)]).to_string(), "-3q + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json() {
        let v = LaurentPoly::quantum_two();
        assert_eq!(serde_json::to_string(&v).unwrap(), "[[-1,1],[1,1]]");
        assert_eq!(serde_json::from_str::<LaurentPoly>("[[-1,1],[1,1]]").unwrap(), v);
    }

    #[test]
    fn shifts() {
        let v = LaurentPoly::quantum_two();
        assert_eq!(v.shifted(2).shift_from(&v), Some(2));
        assert_eq!(v.shift_from(&LaurentPoly::one()), None);
        assert_eq!(LaurentPoly::zero().shift_from(&LaurentPoly::zero()), Some(0));
    }

    #[test]
    fn specht_weight_examples() {
        let sq = mp("2,2");
        let i = residue_sequence(&initial_tableau(&sq), &c(0));
        assert_eq!(gdim_specht_weight(&sq, &c(0), &i), LaurentPoly::quantum_two());
        let six = MultiPartition::single(Partition::rectangle(6, 6));
        let i = residue_sequence(&initial_tableau(&six), &c(0));
        assert_eq!(gdim_specht_weight(&six, &c(0), &i), LaurentPoly::quantum_two().pow(3));
        assert!(gdim_specht_weight(&mp("1"), &c(0), &[1]).is_zero());
    }

    #[test]
    fn specht_examples() {
        let a11 = DominantWeight::type_a(vec![1, 1]);
        assert_eq!(gdim_specht(&mp("1/1"), &a11), LaurentPoly::quantum_two());
        assert_eq!(gdim_specht(&mp("2,1"), &c(0)), LaurentPoly::quantum_two());
        assert_eq!(gdim_specht(&mp("-"), &c(0)), LaurentPoly::one());
    }

    #[test]
    fn block_examples() {
        let beta = RootVector::from_iter([0, 1, 1]);
        let omega = RootVector::simple(0);
        assert_eq!(gdim_block(&c(0), &beta, Some(&omega)).unwrap(), LaurentPoly::quantum_two().pow(2));
        let a11 = DominantWeight::type_a(vec![1, 1]);
        let beta = RootVector::from_iter([1, 1]);
        assert_eq!(gdim_block(&a11, &beta, None).unwrap(), LaurentPoly::quantum_two().pow(2));
        assert!(gdim_block(&c(0), &RootVector::from_iter([1]), None).unwrap().is_zero());
        assert!(matches!(
            gdim_block(&a11, &beta, Some(&omega)),
            Err(Error::RestrictionNeedsTypeC(CartanType::AInfinity))
        ));
    }
}
