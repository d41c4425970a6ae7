//! Spin character degrees, exactly.
//!
//! The bar formula `ρ_λ(1) = 2^{⌊(n-m)/2⌋} n! / πB(λ)` and its relative
//! version in terms of the d̄-core and the modified bar lengths of the
//! quotient partition. Every routine is generic over [`ExactInt`]; a
//! fixed-width type reports [`Error::Overflow`] instead of wrapping, and
//! every division is checked to be exact.

use std::fmt;

use num_integer::Integer;
use num_traits::CheckedMul;
use serde::Serialize;

use crate::abacus::Modulus;
use crate::bars::{bar_lengths_direct, decompose_bars, BarDecomposition};
use crate::error::{Error, Result};
use crate::multiset::IntMultiset;
use crate::partitions::{enumerate_bar_partitions, BarPartition};

/// Integer types the degree routines can evaluate in.
pub trait ExactInt: Integer + Clone + CheckedMul + From<u32> + fmt::Display {}

impl<T> ExactInt for T where T: Integer + Clone + CheckedMul + From<u32> + fmt::Display {}

fn mul<T: ExactInt>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn from_usize<T: ExactInt>(v: usize) -> Result<T> {
    u32::try_from(v).map(T::from).map_err(|_| Error::Overflow)
}

fn exact_div<T: ExactInt>(numerator: &T, denominator: &T) -> Result<T> {
    let inexact = || Error::InexactDivision {
        numerator: numerator.to_string(),
        denominator: denominator.to_string(),
    };
    if denominator.is_zero() {
        return Err(inexact());
    }
    let (q, r) = numerator.div_rem(denominator);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(inexact())
    }
}

/// `2^k`.
pub fn pow2<T: ExactInt>(k: usize) -> Result<T> {
    let two = T::from(2);
    (0..k).try_fold(T::one(), |acc, _| mul(&acc, &two))
}

/// `(from + 1)(from + 2)…(to)`, i.e. `to! / from!`; 1 when `to ≤ from`.
pub fn rising_product<T: ExactInt>(from: usize, to: usize) -> Result<T> {
    (from + 1..=to).try_fold(T::one(), |acc, k| mul(&acc, &from_usize(k)?))
}

pub fn factorial<T: ExactInt>(n: usize) -> Result<T> {
    rising_product(0, n)
}

/// Product of the elements of a multiset of positive lengths.
pub fn length_product<T: ExactInt>(lengths: &IntMultiset) -> Result<T> {
    lengths.iter().try_fold(T::one(), |acc, v| {
        let v = usize::try_from(v)
            .ok()
            .filter(|&v| v > 0)
            .ok_or(Error::NonPositiveLength(v))?;
        mul(&acc, &from_usize(v)?)
    })
}

/// `σ(λ) = |λ| - m(λ)`.
pub fn sigma(lambda: &BarPartition) -> usize {
    lambda.size() - lambda.len()
}

/// Degree of the spin character labelled by `λ`; 1 for the empty partition.
pub fn spin_degree<T: ExactInt>(lambda: &BarPartition) -> Result<T> {
    let n = lambda.size();
    let numerator = mul(&pow2::<T>(sigma(lambda) / 2)?, &factorial(n)?)?;
    exact_div(&numerator, &length_product(&bar_lengths_direct(lambda))?)
}

/// `ε = 0` if `σ(λ)` is odd, or if `σ(λ)` and `σ(core)` are both even; `1` otherwise.
pub fn epsilon_rule(sigma_lambda: usize, sigma_core: usize) -> usize {
    if sigma_lambda % 2 == 1 || sigma_core.is_multiple_of(2) {
        0
    } else {
        1
    }
}

pub fn epsilon(lambda: &BarPartition, d: Modulus) -> Result<usize> {
    let core = crate::bars::dbar_core(lambda, d)?;
    Ok(epsilon_rule(sigma(lambda), sigma(&core)))
}

/// The quantities relating `δ(λ) = ⌊σ(λ)/2⌋` to the core and quotient partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeContext {
    pub n: usize,
    pub m: usize,
    pub sigma: usize,
    pub delta_floor: usize,
    pub core_sigma: usize,
    pub quotient_sigma: usize,
    /// `|P(c̄_d(λ)) ∩ P̄(q̄_d(λ))|`.
    pub overlap_delta: usize,
    pub epsilon: usize,
}

impl DegreeContext {
    pub fn new(lambda: &BarPartition, d: Modulus) -> Result<Self> {
        Ok(Self::from_decomposition(&decompose_bars(lambda, d)?))
    }

    pub fn from_decomposition(dec: &BarDecomposition) -> Self {
        let s = sigma(&dec.lambda);
        let core_sigma = sigma(&dec.core);
        Self {
            n: dec.lambda.size(),
            m: dec.lambda.len(),
            sigma: s,
            delta_floor: s / 2,
            core_sigma,
            quotient_sigma: sigma(&dec.quotient_partition),
            overlap_delta: dec.overlap.len(),
            epsilon: epsilon_rule(s, core_sigma),
        }
    }

    /// `σ(λ) = σ(c̄) + σ(q̄) + 2δ`.
    pub fn sigma_identity_holds(&self) -> bool {
        self.sigma == self.core_sigma + self.quotient_sigma + 2 * self.overlap_delta
    }

    /// `δ(λ) = δ(q̄) + δ(c̄) + δ + ε`.
    pub fn delta_identity_holds(&self) -> bool {
        self.delta_floor
            == self.quotient_sigma / 2 + self.core_sigma / 2 + self.overlap_delta + self.epsilon
    }
}

/// Both degree evaluations and the product identity behind the relative one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeDegree<T> {
    pub direct: T,
    pub relative: T,
    pub context: DegreeContext,
    /// `πB(λ) = 2^δ πB̄(q̄) πB(c̄)`.
    pub product_identity: bool,
}

impl<T: PartialEq> RelativeDegree<T> {
    pub fn agrees(&self) -> bool {
        self.direct == self.relative && self.product_identity
    }
}

/// Evaluates the relative formula
/// `(|λ|! / |c̄|!) · 2^{δ(q̄) + ε} / πB̄(q̄) · ρ_{c̄}(1)` next to the bar formula.
pub fn relative_degree_report<T: ExactInt>(
    lambda: &BarPartition,
    d: Modulus,
) -> Result<RelativeDegree<T>> {
    let dec = decompose_bars(lambda, d)?;
    let context = DegreeContext::from_decomposition(&dec);

    let core_degree = spin_degree::<T>(&dec.core)?;
    let ratio = rising_product::<T>(dec.core.size(), lambda.size())?;
    let power = pow2::<T>(context.quotient_sigma / 2 + context.epsilon)?;
    let numerator = mul(&mul(&ratio, &power)?, &core_degree)?;
    let relative = exact_div(&numerator, &length_product::<T>(&dec.modified_bars)?)?;

    let direct = spin_degree::<T>(lambda)?;
    let product_identity = length_product::<T>(&dec.bars)?
        == mul(
            &mul(
                &pow2::<T>(context.overlap_delta)?,
                &length_product::<T>(&dec.modified_bars)?,
            )?,
            &length_product::<T>(&dec.core_bars)?,
        )?;
    Ok(RelativeDegree {
        direct,
        relative,
        context,
        product_identity,
    })
}

/// The relative formula's value, checked against the bar formula.
pub fn relative_spin_degree<T: ExactInt>(lambda: &BarPartition, d: Modulus) -> Result<T> {
    let report = relative_degree_report::<T>(lambda, d)?;
    if !report.agrees() {
        return Err(Error::MismatchWithBarFormula {
            direct: report.direct.to_string(),
            relative: report.relative.to_string(),
        });
    }
    Ok(report.relative)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSum<T> {
    pub n: usize,
    /// `Σ a_λ ρ_λ(1)²` with `a_λ = 2` when `n - m(λ)` is odd and 1 otherwise.
    pub sum: T,
    pub factorial: T,
}

impl<T: PartialEq> SquareSum<T> {
    pub fn holds(&self) -> bool {
        self.sum == self.factorial
    }
}

/// Sums the squared degrees of all spin characters of the double cover of
/// the symmetric group of degree `n`, one or two per bar partition.
pub fn spin_degree_sum_check<T: ExactInt>(n: usize) -> Result<SquareSum<T>> {
    let mut sum = T::zero();
    for lambda in enumerate_bar_partitions(n) {
        let deg = spin_degree::<T>(&lambda)?;
        let sq = mul(&deg, &deg)?;
        let copies = if sigma(&lambda).is_multiple_of(2) { 1 } else { 2 };
        sum = sum + mul(&sq, &T::from(copies))?;
    }
    Ok(SquareSum {
        n,
        sum,
        factorial: factorial(n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Degree;

    fn bar(v: &[usize]) -> BarPartition {
        BarPartition::new(v.to_vec()).unwrap()
    }

    fn m(d: usize) -> Modulus {
        Modulus::new(d).unwrap()
    }

    #[test]
    fn bar_formula_examples() {
        assert_eq!(spin_degree::<u64>(&bar(&[2])).unwrap(), 1);
        assert_eq!(spin_degree::<u64>(&bar(&[3, 1])).unwrap(), 4);
        assert_eq!(spin_degree::<u64>(&BarPartition::empty()).unwrap(), 1);
        // 2^6 · 17! / 9144576000
        assert_eq!(
            length_product::<u64>(&bar_lengths_direct(&bar(&[7, 5, 3, 2]))).unwrap(),
            9_144_576_000
        );
        assert_eq!(spin_degree::<u64>(&bar(&[7, 5, 3, 2])).unwrap(), 2_489_344);
        assert_eq!(
            spin_degree::<Degree>(&bar(&[7, 5, 3, 2])).unwrap(),
            Degree::from(2_489_344u32)
        );
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        assert_eq!(spin_degree::<u32>(&bar(&[7, 5, 3, 2])), Err(Error::Overflow));
        assert!(factorial::<u64>(21).is_err());
        assert!(factorial::<u128>(25).is_ok());
    }

    #[test]
    fn inexact_division_is_reported() {
        assert!(matches!(
            exact_div(&7u64, &2u64),
            Err(Error::InexactDivision { .. })
        ));
        assert!(exact_div(&7u64, &0u64).is_err());
        assert_eq!(
            length_product::<u64>(&[3, 0].into_iter().collect()),
            Err(Error::NonPositiveLength(0))
        );
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&bar(&[7, 5, 3, 2]), m(3)).unwrap(), 0);
        assert_eq!(epsilon_rule(13, 1), 0);
        assert_eq!(epsilon_rule(12, 4), 0);
        assert_eq!(epsilon_rule(12, 3), 1);
    }

    #[test]
    fn relative_formula_examples() {
        assert_eq!(
            relative_spin_degree::<Degree>(&bar(&[7, 5, 3, 2]), m(3)).unwrap(),
            Degree::from(2_489_344u32)
        );
        let core = bar(&[7, 4, 1]);
        assert_eq!(
            relative_spin_degree::<Degree>(&core, m(3)).unwrap(),
            spin_degree::<Degree>(&core).unwrap()
        );
        let l = bar(&[13, 10, 4]);
        let r = relative_degree_report::<Degree>(&l, m(3)).unwrap();
        assert!(r.agrees());
        assert_eq!(r.context.overlap_delta, 2);
        assert!(r.context.sigma_identity_holds());
        assert!(r.context.delta_identity_holds());
    }

    #[test]
    fn square_sum_examples() {
        // (3): ρ = 2, a = 1; (2,1): ρ = 1, a = 2
        assert_eq!(spin_degree::<u64>(&bar(&[3])).unwrap(), 2);
        assert_eq!(spin_degree::<u64>(&bar(&[2, 1])).unwrap(), 1);
        let s = spin_degree_sum_check::<u64>(3).unwrap();
        assert_eq!((s.sum, s.factorial), (6, 6));
        assert_eq!(spin_degree_sum_check::<u64>(2).unwrap().sum, 2);
        // (4): ρ = 2, a = 2; (3,1): ρ = 4, a = 1
        assert_eq!(spin_degree::<u64>(&bar(&[4])).unwrap(), 2);
        assert_eq!(spin_degree_sum_check::<u64>(4).unwrap().sum, 24);
        for n in 1..=12 {
            assert!(spin_degree_sum_check::<Degree>(n).unwrap().holds());
        }
    }

    #[test]
    fn relative_formula_agrees_exhaustively_small() {
        for n in 0..=14 {
            for l in enumerate_bar_partitions(n) {
                for d in [3, 5, 7] {
                    let r = relative_degree_report::<u128>(&l, m(d)).unwrap();
                    assert!(r.agrees(), "{l:?} d={d}");
                    assert!(r.context.delta_identity_holds());
                }
            }
        }
    }
}
