//! The hyperbolic upper half plane over real Puiseux series.
//!
//! Distances use the closed max-formula
//! `d(z, z') = max(2 log|x - x'| - log y - log y', |log y - log y'|)`,
//! which only needs leading exponents and is therefore exact. The cross-ratio
//! route (`cross_ratio_log`) computes the same quantity through the F-line
//! endpoints and complex arithmetic; it is slower and works on truncated
//! expansions, and serves as an independent check of the formula.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::series::{int, Exponent, PuiseuxSeries, Rational, SeriesError, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HPlaneError {
    #[error("point coordinates must be exact series")]
    NotExact,
    #[error("imaginary part must be positive")]
    NonPositiveHeight,
    #[error("the two points coincide")]
    SamePoint,
    #[error("cross-ratio is not real: imaginary part {im} against real part {re}")]
    NonRealCrossRatio { re: String, im: String },
    #[error("cross-ratio {0} is below 1; the endpoint convention is inconsistent")]
    CrossRatioBelowOne(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A point `x + iy` with `y > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPoint {
    x: PuiseuxSeries,
    y: PuiseuxSeries,
}

impl HPoint {
    pub fn new(x: PuiseuxSeries, y: PuiseuxSeries) -> Result<Self, HPlaneError> {
        if !x.is_exact() || !y.is_exact() {
            return Err(HPlaneError::NotExact);
        }
        if y.signum()? != Ordering::Greater {
            return Err(HPlaneError::NonPositiveHeight);
        }
        Ok(Self { x, y })
    }

    /// The point `foot + i X^height` on the vertical line over `foot`.
    pub fn on_vertical(foot: &PuiseuxSeries, height: &Exponent) -> Self {
        assert!(foot.is_exact(), "vertical line foot must be exact");
        Self { x: foot.clone(), y: PuiseuxSeries::x_pow(height.clone()) }
    }

    pub fn x(&self) -> &PuiseuxSeries {
        &self.x
    }

    pub fn y(&self) -> &PuiseuxSeries {
        &self.y
    }

    /// `log y`; finite because `y > 0`.
    pub fn log_height(&self) -> Exponent {
        finite_log(&self.y)
    }

    pub fn to_complex(&self) -> FComplex {
        FComplex::new(self.x.clone(), self.y.clone())
    }
}

fn finite_log(s: &PuiseuxSeries) -> Exponent {
    match s.leading() {
        Some((e, _)) => e.clone(),
        None => unreachable!("positive series has a leading term"),
    }
}

fn exact_log(s: &PuiseuxSeries) -> Valuation {
    s.log_abs().expect("exact series has a determinate valuation")
}

/// Pseudo-distance between two points, as an exact rational.
///
/// `max(2 log|x - x'| - log y - log y', |log y - log y'|)` with
/// `log 0 = -inf`. Distinct points may be at distance zero.
pub fn hp_distance(z: &HPoint, w: &HPoint) -> Rational {
    let ly = z.log_height();
    let lw = w.log_height();
    let vertical = (&ly - &lw).abs();
    match exact_log(&(z.x() - w.x())) {
        Valuation::NegInfinity => vertical,
        Valuation::Finite(lx) => {
            let horizontal = int(2) * lx - ly - lw;
            horizontal.max(vertical)
        }
    }
}

/// An element `re + i im` of `F[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FComplex {
    pub re: PuiseuxSeries,
    pub im: PuiseuxSeries,
}

impl FComplex {
    pub fn new(re: PuiseuxSeries, im: PuiseuxSeries) -> Self {
        Self { re, im }
    }

    pub fn real(re: PuiseuxSeries) -> Self {
        Self::new(re, PuiseuxSeries::zero())
    }

    pub fn i() -> Self {
        Self::new(PuiseuxSeries::zero(), PuiseuxSeries::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = &(&self.re * &other.re) - &(&self.im * &other.im);
        let im = &(&self.re * &other.im) + &(&self.im * &other.re);
        Self::new(re, im)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`.
    pub fn norm_sq(&self) -> PuiseuxSeries {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn scale(&self, s: &PuiseuxSeries) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }

    /// `self / other` via `self * conj(other) / |other|^2`.
    pub fn div(&self, other: &Self, window: &Exponent) -> Result<Self, SeriesError> {
        if other.re.is_zero() && other.im.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        let inv = other.norm_sq().invert(window)?;
        Ok(self.mul(&other.conj()).scale(&inv))
    }
}

pub fn cmul(a: &FComplex, b: &FComplex) -> FComplex {
    a.mul(b)
}

pub fn csub(a: &FComplex, b: &FComplex) -> FComplex {
    a.sub(b)
}

pub fn cdiv(a: &FComplex, b: &FComplex, window: &Exponent) -> Result<FComplex, SeriesError> {
    a.div(b, window)
}

/// The F-line through two points: a vertical ray or a half circle centred on
/// the real axis with endpoints `w < w'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FLine {
    Vertical {
        foot: PuiseuxSeries,
    },
    Circle {
        center: PuiseuxSeries,
        radius: PuiseuxSeries,
        w: PuiseuxSeries,
        w_prime: PuiseuxSeries,
    },
}

/// F-line through `z` and `z2`. The circle radius is a window-truncated
/// square root, so it only exists when its leading coefficient is a rational
/// square.
pub fn fline_through(z: &HPoint, z2: &HPoint, window: &Exponent) -> Result<FLine, HPlaneError> {
    if z == z2 {
        return Err(HPlaneError::SamePoint);
    }
    let dx = z.x() - z2.x();
    if dx.is_zero() {
        return Ok(FLine::Vertical { foot: z.x().clone() });
    }
    let numer = &(&(z.x() * z.x()) + &(z.y() * z.y())) - &(&(z2.x() * z2.x()) + &(z2.y() * z2.y()));
    let center = &numer * &dx.scale(&int(2)).invert(window)?;
    let offset = z.x() - &center;
    let radius_sq = &(&offset * &offset) + &(z.y() * z.y());
    let radius = radius_sq.sqrt(window)?;
    let w = &center - &radius;
    let w_prime = &center + &radius;
    Ok(FLine::Circle { center, radius, w, w_prime })
}

/// The cross-ratio `CR(w, z, z', w') = ((z'-w)(z-w')) / ((z-w)(z'-w'))` with
/// the two points ordered along their F-line so that `CR >= 1`. On a vertical
/// line `w'` is the point at infinity and its factors cancel, leaving
/// `(z'-w)/(z-w)`.
pub fn cross_ratio(z: &HPoint, z2: &HPoint, window: &Exponent) -> Result<FComplex, HPlaneError> {
    let line = fline_through(z, z2, window)?;
    let (near, far) = match &line {
        FLine::Vertical { .. } => {
            if z.y().compare(z2.y())? == Ordering::Greater {
                (z2, z)
            } else {
                (z, z2)
            }
        }
        FLine::Circle { .. } => {
            if z.x().compare(z2.x())? == Ordering::Greater {
                (z2, z)
            } else {
                (z, z2)
            }
        }
    };
    let (zc, zc2) = (near.to_complex(), far.to_complex());
    let cr = match line {
        FLine::Vertical { foot } => {
            let w = FComplex::real(foot);
            zc2.sub(&w).div(&zc.sub(&w), window)?
        }
        FLine::Circle { w, w_prime, .. } => {
            let w = FComplex::real(w);
            let w_prime = FComplex::real(w_prime);
            let numer = zc2.sub(&w).mul(&zc.sub(&w_prime));
            let denom = zc.sub(&w).mul(&zc2.sub(&w_prime));
            numer.div(&denom, window)?
        }
    };
    Ok(cr)
}

/// `log CR(w, z, z', w')`: the pseudo-distance computed through the cross
/// ratio.
///
/// The imaginary part of the truncated cross-ratio must be negligible: its
/// valuation (or, if no term survived, its precision bound) has to lie more
/// than `window / 2` below the valuation of the real part.
pub fn cross_ratio_log(z: &HPoint, z2: &HPoint, window: &Exponent) -> Result<Rational, HPlaneError> {
    let cr = cross_ratio(z, z2, window)?;
    let re_log = match cr.re.log_abs()? {
        Valuation::Finite(e) => e,
        Valuation::NegInfinity => return Err(HPlaneError::CrossRatioBelowOne(cr.re.to_string())),
    };
    if cr.re.signum()? != Ordering::Greater || re_log < Rational::zero() {
        return Err(HPlaneError::CrossRatioBelowOne(cr.re.to_string()));
    }
    let im_bound = match (cr.im.leading(), cr.im.precision()) {
        (Some((e, _)), _) => Some(e.clone()),
        (None, p) => p.cloned(),
    };
    let limit = &re_log - window / int(2);
    if let Some(b) = im_bound {
        if b >= limit {
            return Err(HPlaneError::NonRealCrossRatio {
                re: cr.re.to_string(),
                im: cr.im.to_string(),
            });
        }
    }
    Ok(re_log)
}

/// `cross_ratio_log` with the working window doubled from 4 up to
/// `max_window` while the truncation is too coarse to decide the result.
///
/// Returns the distance and the window that settled it.
pub fn cross_ratio_log_escalating(
    z: &HPoint,
    z2: &HPoint,
    max_window: &Exponent,
) -> Result<(Rational, Exponent), HPlaneError> {
    let mut window = int(4).min(max_window.clone());
    loop {
        match cross_ratio_log(z, z2, &window) {
            Err(HPlaneError::Series(SeriesError::Indeterminate))
            | Err(HPlaneError::NonRealCrossRatio { .. })
                if &window < max_window =>
            {
                window = (&window * int(2)).min(max_window.clone());
            }
            other => return other.map(|d| (d, window)),
        }
    }
}
