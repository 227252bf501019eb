//! Real Puiseux series with rational coefficients.
//!
//! A series is a finite sum of terms `c X^e` with `c` and `e` rational,
//! optionally followed by an unknown tail `O(X^ε)`. Series without a
//! precision bound are exact field elements; the bound only appears after
//! inversion or square roots, which expand an infinite series up to a
//! relative window.
//!
//! The ordering makes `X` larger than every rational, so the sign of a series
//! is the sign of its leading coefficient and `log|a|` is its leading
//! exponent.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;
pub type Exponent = BigRational;

/// Default relative window used by inversion and square roots.
pub const DEFAULT_WINDOW: i64 = 32;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("value is indeterminate at the available precision")]
    Indeterminate,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative series")]
    NegativeInput,
    #[error("leading coefficient {0} is not the square of a rational")]
    NonRationalSqrt(Rational),
    #[error("window must be positive, got {0}")]
    InvalidWindow(Rational),
}

/// Value of `log|a|`: the leading exponent, or `-inf` for zero.
///
/// The derived ordering puts `NegInfinity` below every finite value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    NegInfinity,
    Finite(Exponent),
}

impl Valuation {
    pub fn finite(&self) -> Option<&Exponent> {
        match self {
            Valuation::Finite(e) => Some(e),
            Valuation::NegInfinity => None,
        }
    }

    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, Valuation::NegInfinity)
    }

    /// `self <= bound`, with `-inf` below everything.
    pub fn at_most(&self, bound: &Exponent) -> bool {
        match self {
            Valuation::NegInfinity => true,
            Valuation::Finite(e) => e <= bound,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::NegInfinity => f.write_str("-inf"),
            Valuation::Finite(e) => write!(f, "{e}"),
        }
    }
}

/// A real Puiseux series `sum c_k X^(e_k)`, exact or known up to `O(X^ε)`.
///
/// Terms are kept in a map keyed by exponent; zero coefficients are never
/// stored and every stored exponent lies strictly above the precision bound.
/// Structural equality is therefore equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PuiseuxSeries {
    terms: BTreeMap<Exponent, Rational>,
    precision: Option<Exponent>,
}

impl PuiseuxSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Exponent::zero())
    }

    /// `c X^e`.
    pub fn monomial(c: Rational, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms, precision: None }
    }

    /// `X^e`.
    pub fn x_pow(e: Exponent) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Builds an exact series from `(exponent, coefficient)` pairs, summing
    /// duplicate exponents and dropping zero coefficients.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut terms: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in pairs {
            *terms.entry(e).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms, precision: None }
    }

    fn from_parts(mut terms: BTreeMap<Exponent, Rational>, precision: Option<Exponent>) -> Self {
        terms.retain(|e, c| !c.is_zero() && precision.as_ref().is_none_or(|p| e > p));
        Self { terms, precision }
    }

    /// Marks everything at or below `X^eps` as unknown. An existing coarser
    /// bound is kept.
    pub fn with_precision(self, eps: Exponent) -> Self {
        let precision = match self.precision {
            Some(p) if p >= eps => p,
            _ => eps,
        };
        Self::from_parts(self.terms, Some(precision))
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn precision(&self) -> Option<&Exponent> {
        self.precision.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// True only for the exact zero series.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.precision.is_none()
    }

    pub fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Least common multiple of the exponent denominators (1 for zero).
    pub fn exponent_denominator_lcm(&self) -> BigInt {
        self.terms
            .keys()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    /// `log|a|`, the leading exponent.
    pub fn log_abs(&self) -> Result<Valuation, SeriesError> {
        match (self.leading(), &self.precision) {
            (Some((e, _)), _) => Ok(Valuation::Finite(e.clone())),
            (None, None) => Ok(Valuation::NegInfinity),
            (None, Some(_)) => Err(SeriesError::Indeterminate),
        }
    }

    /// Sign of the series as an ordering against zero.
    pub fn signum(&self) -> Result<Ordering, SeriesError> {
        match (self.leading(), &self.precision) {
            (Some((_, c)), _) => Ok(if c.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            }),
            (None, None) => Ok(Ordering::Equal),
            (None, Some(_)) => Err(SeriesError::Indeterminate),
        }
    }

    /// Order comparison: decided by the sign of `other - self`.
    pub fn compare(&self, other: &Self) -> Result<Ordering, SeriesError> {
        (self - other).signum()
    }

    pub fn is_positive(&self) -> Result<bool, SeriesError> {
        Ok(self.signum()? == Ordering::Greater)
    }

    /// Keeps the terms with exponent strictly above `e`.
    ///
    /// The result is exact unless the input's own precision bound lies above
    /// `e`, in which case the unknown tail still matters and is kept.
    pub fn truncate_above(&self, e: &Exponent) -> Self {
        let terms = self
            .terms
            .range((std::ops::Bound::Excluded(e), std::ops::Bound::Unbounded))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        let precision = self.precision.as_ref().filter(|p| *p > e).cloned();
        Self::from_parts(terms, precision)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        Self { terms, precision: self.precision.clone() }
    }

    /// Multiplication by `X^e`.
    pub fn shift(&self, e: &Exponent) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect();
        Self { terms, precision: self.precision.as_ref().map(|p| p + e) }
    }

    /// Splits a nonzero series as `c X^e (1 + r)`, returning `(e, c, r)`.
    fn factor_leading(&self) -> Result<(Exponent, Rational, PuiseuxSeries), SeriesError> {
        let (e, c) = match self.leading() {
            Some((e, c)) => (e.clone(), c.clone()),
            None if self.precision.is_none() => return Err(SeriesError::DivisionByZero),
            None => return Err(SeriesError::Indeterminate),
        };
        let inv_c = c.recip();
        let rest = self
            .terms
            .iter()
            .filter(|(k, _)| **k != e)
            .map(|(k, v)| (k - &e, v * &inv_c))
            .collect();
        let precision = self.precision.as_ref().map(|p| p - &e);
        Ok((e, c, Self { terms: rest, precision }))
    }

    /// Multiplicative inverse, expanded until the relative exponent drop
    /// exceeds `window`.
    ///
    /// For `a = c X^e (1 + r)` this sums the geometric series in `-r`. The
    /// result carries the bound `O(X^(-e - window))` (or coarser, if `a` is
    /// itself truncated); an exact monomial inverts exactly.
    pub fn invert(&self, window: &Exponent) -> Result<Self, SeriesError> {
        check_window(window)?;
        let (e, c, r) = self.factor_leading()?;
        if r.is_zero() {
            return Ok(Self::monomial(c.recip(), -e));
        }
        let floor = relative_floor(window, r.precision.as_ref());
        let neg_r = -&r;
        let mut sum = BTreeMap::from([(Exponent::zero(), Rational::one())]);
        let mut power = sum.clone();
        loop {
            power = product_terms(&power, &neg_r.terms, Some(&floor));
            if power.is_empty() {
                break;
            }
            for (k, v) in &power {
                *sum.entry(k.clone()).or_insert_with(Rational::zero) += v;
            }
        }
        let inv_c = c.recip();
        let expanded = Self::from_parts(sum, Some(floor));
        Ok(expanded.shift(&-&e).scale(&inv_c))
    }

    /// Positive square root, expanded with the binomial series to a relative
    /// `window` below the leading exponent of the root.
    ///
    /// Requires a positive series whose leading coefficient is a rational
    /// square; the result squares back to `self` up to `O(X^(e - window))`
    /// where `e` is the leading exponent of `self`.
    pub fn sqrt(&self, window: &Exponent) -> Result<Self, SeriesError> {
        check_window(window)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (e, c, r) = self.factor_leading()?;
        if c.is_negative() {
            return Err(SeriesError::NegativeInput);
        }
        let root_c = rational_sqrt(&c).ok_or_else(|| SeriesError::NonRationalSqrt(c.clone()))?;
        let half_e = &e / int(2);
        if r.is_zero() {
            return Ok(Self::monomial(root_c, half_e));
        }
        let floor = relative_floor(window, r.precision.as_ref());
        let half = rat(1, 2);
        let mut binom = Rational::one();
        let mut sum = BTreeMap::from([(Exponent::zero(), Rational::one())]);
        let mut power = sum.clone();
        let mut k = 0i64;
        loop {
            // binom(1/2, k+1) = binom(1/2, k) * (1/2 - k) / (k + 1)
            binom = binom * (&half - int(k)) / int(k + 1);
            k += 1;
            power = product_terms(&power, &r.terms, Some(&floor));
            if power.is_empty() {
                break;
            }
            for (exp, v) in &power {
                *sum.entry(exp.clone()).or_insert_with(Rational::zero) += v * &binom;
            }
        }
        let expanded = Self::from_parts(sum, Some(floor));
        Ok(expanded.shift(&half_e).scale(&root_c))
    }
}

fn check_window(window: &Exponent) -> Result<(), SeriesError> {
    if window.is_positive() {
        Ok(())
    } else {
        Err(SeriesError::InvalidWindow(window.clone()))
    }
}

fn relative_floor(window: &Exponent, own: Option<&Exponent>) -> Exponent {
    let w = -window;
    match own {
        Some(p) if *p > w => p.clone(),
        _ => w,
    }
}

/// Square root of a nonnegative rational, if it is itself rational.
pub fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Cauchy product of two term maps, dropping exponents at or below `floor`.
fn product_terms(
    a: &BTreeMap<Exponent, Rational>,
    b: &BTreeMap<Exponent, Rational>,
    floor: Option<&Exponent>,
) -> BTreeMap<Exponent, Rational> {
    let mut out: BTreeMap<Exponent, Rational> = BTreeMap::new();
    for (ea, ca) in a.iter().rev() {
        for (eb, cb) in b.iter().rev() {
            let e = ea + eb;
            if floor.is_some_and(|f| e <= *f) {
                // b is walked in descending order
                break;
            }
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Largest exponent where the series may be nonzero: the leading exponent or
/// the precision bound, whichever is higher. `None` for exact zero.
fn magnitude_bound(s: &PuiseuxSeries) -> Option<Exponent> {
    match (s.leading().map(|(e, _)| e), s.precision.as_ref()) {
        (Some(e), Some(p)) => Some(if e > p { e.clone() } else { p.clone() }),
        (Some(e), None) => Some(e.clone()),
        (None, p) => p.cloned(),
    }
}

fn coarser(a: Option<&Exponent>, b: Option<&Exponent>) -> Option<Exponent> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x > y { x.clone() } else { y.clone() }),
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

impl Add<&PuiseuxSeries> for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn add(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let precision = coarser(self.precision.as_ref(), rhs.precision.as_ref());
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(e.clone()).or_insert_with(Rational::zero) += c;
        }
        PuiseuxSeries::from_parts(terms, precision)
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn neg(self) -> PuiseuxSeries {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        PuiseuxSeries { terms, precision: self.precision.clone() }
    }
}

impl Sub<&PuiseuxSeries> for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn sub(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self + &(-rhs)
    }
}

impl Mul<&PuiseuxSeries> for &PuiseuxSeries {
    type Output = PuiseuxSeries;

    /// Cauchy product. With truncated inputs `a = A + O(X^p)` and
    /// `b = B + O(X^q)` the error is bounded by
    /// `max(bound(a) + q, bound(b) + p)`.
    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let mut precision: Option<Exponent> = None;
        if let (Some(p), Some(mb)) = (self.precision.as_ref(), magnitude_bound(rhs)) {
            precision = coarser(precision.as_ref(), Some(&(p + mb)));
        }
        if let (Some(q), Some(ma)) = (rhs.precision.as_ref(), magnitude_bound(self)) {
            precision = coarser(precision.as_ref(), Some(&(q + ma)));
        }
        let terms = product_terms(&self.terms, &rhs.terms, precision.as_ref());
        PuiseuxSeries::from_parts(terms, precision)
    }
}

impl Neg for PuiseuxSeries {
    type Output = PuiseuxSeries;

    fn neg(self) -> PuiseuxSeries {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<PuiseuxSeries> for PuiseuxSeries {
            type Output = PuiseuxSeries;
            fn $method(self, rhs: PuiseuxSeries) -> PuiseuxSeries {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&PuiseuxSeries> for PuiseuxSeries {
            type Output = PuiseuxSeries;
            fn $method(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
                (&self).$method(rhs)
            }
        }
        impl $trait<PuiseuxSeries> for &PuiseuxSeries {
            type Output = PuiseuxSeries;
            fn $method(self, rhs: PuiseuxSeries) -> PuiseuxSeries {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl From<Rational> for PuiseuxSeries {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PuiseuxSeries({self})")
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::format_series(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(e: Exponent) -> PuiseuxSeries {
        PuiseuxSeries::x_pow(e)
    }

    fn s(pairs: &[((i64, i64), (i64, i64))]) -> PuiseuxSeries {
        PuiseuxSeries::from_terms(
            pairs
                .iter()
                .map(|&((en, ed), (cn, cd))| (rat(en, ed), rat(cn, cd))),
        )
    }

    #[test]
    fn make_series_merges_and_cancels() {
        let merged = s(&[((-1, 2), (1, 1)), ((-1, 2), (2, 1))]);
        assert_eq!(merged, PuiseuxSeries::monomial(int(3), rat(-1, 2)));
        assert!(PuiseuxSeries::from_terms(Vec::new()).is_zero());
        let cancelled = s(&[((0, 1), (1, 1)), ((1, 1), (1, 1)), ((0, 1), (-1, 1))]);
        assert_eq!(cancelled, x(int(1)));
    }

    #[test]
    fn additive_examples() {
        let xx = x(int(1));
        assert!((&xx - &xx).is_zero());
        let a1 = x(rat(-1, 2));
        let a2 = &a1 + &x(rat(-3, 4));
        assert_eq!(a2, s(&[((-1, 2), (1, 1)), ((-3, 4), (1, 1))]));
        let trunc = PuiseuxSeries::one().with_precision(int(-2));
        let sum = &trunc + &x(int(-3));
        assert_eq!(sum, PuiseuxSeries::one().with_precision(int(-2)));
        assert_eq!(sum.num_terms(), 1);
    }

    #[test]
    fn product_examples() {
        let r = x(rat(1, 2));
        let p = (&r + &PuiseuxSeries::one()) * (&r - &PuiseuxSeries::one());
        // (X^(1/2) + 1)(X^(1/2) - 1) = X - 1
        assert_eq!(p, s(&[((1, 1), (1, 1)), ((0, 1), (-1, 1))]));
        assert_eq!(x(rat(1, 3)) * x(rat(1, 2)), x(rat(5, 6)));
        assert!((PuiseuxSeries::zero() * &p).is_zero());
    }

    #[test]
    fn product_precision_uses_both_pairings() {
        // (X + O(1)) * (X^2 + O(X^-1)) = X^3 + O(X^2)
        let a = x(int(1)).with_precision(int(0));
        let b = x(int(2)).with_precision(int(-1));
        let p = &a * &b;
        assert_eq!(p.precision(), Some(&int(2)));
        assert_eq!(p.leading(), Some((&int(3), &int(1))));
    }

    #[test]
    fn log_abs_examples() {
        let v = s(&[((2, 1), (3, 1)), ((1, 1), (1, 1))]).log_abs().unwrap();
        assert_eq!(v, Valuation::Finite(int(2)));
        assert_eq!(PuiseuxSeries::zero().log_abs().unwrap(), Valuation::NegInfinity);
        let lost = PuiseuxSeries::zero().with_precision(int(0));
        assert_eq!(lost.log_abs(), Err(SeriesError::Indeterminate));
        // a3 - a4 = -X^(t4)
        let a3 = s(&[((-1, 2), (1, 1)), ((-3, 4), (1, 1)), ((-7, 8), (1, 1))]);
        let a4 = &a3 + &x(rat(-15, 16));
        assert_eq!((&a3 - &a4).log_abs().unwrap(), Valuation::Finite(rat(-15, 16)));
    }

    #[test]
    fn comparison_examples() {
        let big = PuiseuxSeries::constant(Rational::from_integer(BigInt::from(10).pow(100u32)));
        assert_eq!(x(int(1)).compare(&big).unwrap(), Ordering::Greater);
        assert_eq!(x(rat(-1, 2)).compare(&PuiseuxSeries::one()).unwrap(), Ordering::Less);
        let a = s(&[((1, 3), (2, 1)), ((-1, 1), (-1, 5))]);
        assert_eq!(a.compare(&a).unwrap(), Ordering::Equal);
        let fuzzy = PuiseuxSeries::one().with_precision(int(-1));
        assert_eq!(fuzzy.compare(&PuiseuxSeries::one()), Err(SeriesError::Indeterminate));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(x(int(1)).invert(&int(4)).unwrap(), x(int(-1)));
        let a = &PuiseuxSeries::one() - &x(int(-1));
        let inv = a.invert(&int(3)).unwrap();
        let expected = s(&[((0, 1), (1, 1)), ((-1, 1), (1, 1)), ((-2, 1), (1, 1))]).with_precision(int(-3));
        assert_eq!(inv, expected);
        // multiply back: remainder sits at or below X^-3
        let back = &a * &inv;
        let rem = &back - &PuiseuxSeries::one();
        assert!(rem.leading().is_none());
        assert!(rem.precision().unwrap() <= &int(-3));
        assert_eq!(PuiseuxSeries::zero().invert(&int(3)), Err(SeriesError::DivisionByZero));
        assert_eq!(
            PuiseuxSeries::zero().with_precision(int(1)).invert(&int(3)),
            Err(SeriesError::Indeterminate)
        );
        assert!(matches!(a.invert(&int(0)), Err(SeriesError::InvalidWindow(_))));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(x(rat(1, 2)).sqrt(&int(5)).unwrap(), x(rat(1, 4)));
        let a = s(&[((2, 1), (1, 1)), ((1, 1), (1, 1))]);
        let root = a.sqrt(&int(2)).unwrap();
        assert_eq!(root, s(&[((1, 1), (1, 1)), ((0, 1), (1, 2))]).with_precision(int(-1)));
        let root3 = a.sqrt(&int(3)).unwrap();
        assert_eq!(
            root3,
            s(&[((1, 1), (1, 1)), ((0, 1), (1, 2)), ((-1, 1), (-1, 8))]).with_precision(int(-2))
        );
        let diff = &(&root3 * &root3) - &a;
        assert!(diff.leading().is_none());
        assert!(diff.precision().unwrap() < &int(0));
        assert_eq!(x(int(1)).neg().sqrt(&int(2)), Err(SeriesError::NegativeInput));
        assert_eq!(
            PuiseuxSeries::constant(int(2)).sqrt(&int(2)),
            Err(SeriesError::NonRationalSqrt(int(2)))
        );
        assert_eq!(
            PuiseuxSeries::monomial(rat(9, 4), int(2)).sqrt(&int(1)).unwrap(),
            PuiseuxSeries::monomial(rat(3, 2), int(1))
        );
    }

    #[test]
    fn truncate_above_examples() {
        let a1 = x(rat(-1, 2));
        let a2 = &a1 + &x(rat(-3, 4));
        assert_eq!(a2.truncate_above(&rat(-3, 4)), a1);
        assert!(a1.truncate_above(&rat(-1, 2)).is_zero());
        assert!(PuiseuxSeries::zero().truncate_above(&int(7)).is_zero());
        let fuzzy = x(int(2)).with_precision(int(0));
        assert!(fuzzy.truncate_above(&int(1)).is_exact());
        assert_eq!(fuzzy.truncate_above(&int(-1)).precision(), Some(&int(0)));
    }

    #[test]
    fn denominator_lcm() {
        let a = s(&[((-1, 2), (1, 1)), ((-3, 4), (1, 1)), ((1, 3), (1, 1))]);
        assert_eq!(a.exponent_denominator_lcm(), BigInt::from(12));
        assert_eq!(PuiseuxSeries::zero().exponent_denominator_lcm(), BigInt::from(1));
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(49, 16)), Some(rat(7, 4)));
        assert_eq!(rational_sqrt(&rat(1, 2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }
}
