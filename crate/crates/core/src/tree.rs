//! The quotient Q-tree of the half plane by the zero-distance relation.
//!
//! Two points `x + iy` and `x' + iy'` are at distance zero exactly when
//! `log y = log y'` and `log|x - x'| <= log y`. A class is therefore
//! determined by the height `t = log y` together with the terms of `x` whose
//! exponents lie strictly above `t`; that pair `(u, t)` is the canonical
//! representative stored in [`TreePoint`].
//!
//! Geodesics between tree points go up the vertical ray of one endpoint to
//! the merge height and back down the ray of the other.

use num_traits::Signed;
use thiserror::Error;

use crate::hplane::HPoint;
use crate::series::{int, PuiseuxSeries, Rational, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("segment parameter {s} outside [0, {length}]")]
    OutOfRange { s: Rational, length: Rational },
}

/// Canonical representative `(u, t)` of a point of the tree: the class of
/// `u + i X^t`, with every exponent of `u` strictly above `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreePoint {
    foot: PuiseuxSeries,
    height: Rational,
}

impl TreePoint {
    /// Class of `u + i X^t`; `u` is truncated to its canonical form.
    ///
    /// Panics if `u` is not known exactly above `t`.
    pub fn new(u: &PuiseuxSeries, t: Rational) -> Self {
        let u = u.truncate_above(&t);
        assert!(u.is_exact(), "tree point needs the series known above its height");
        Self { foot: u, height: t }
    }

    pub fn foot(&self) -> &PuiseuxSeries {
        &self.foot
    }

    pub fn height(&self) -> &Rational {
        &self.height
    }

    /// The point `u + i X^t` of the half plane representing this class.
    pub fn representative(&self) -> HPoint {
        HPoint::on_vertical(&self.foot, &self.height)
    }

    /// Moves along the vertical ray of `u` to height `t`.
    fn at_height(u: &PuiseuxSeries, t: Rational) -> Self {
        Self::new(u, t)
    }
}

/// Canonical tree point of `z`.
pub fn project(z: &HPoint) -> TreePoint {
    TreePoint::new(z.x(), z.log_height())
}

fn log_diff(a: &TreePoint, b: &TreePoint) -> Valuation {
    (&a.foot - &b.foot)
        .log_abs()
        .expect("canonical tree points are exact")
}

/// Tree distance `max(2 log|u - u'| - t - t', |t - t'|)`.
pub fn tree_distance(p: &TreePoint, q: &TreePoint) -> Rational {
    let vertical = (&p.height - &q.height).abs();
    match log_diff(p, q) {
        Valuation::NegInfinity => vertical,
        Valuation::Finite(lx) => (int(2) * lx - &p.height - &q.height).max(vertical),
    }
}

/// Height of the apex of the geodesic between `p` and `q`:
/// `max(log|u - u'|, t, t')`.
pub fn merge_height(p: &TreePoint, q: &TreePoint) -> Rational {
    let h = if p.height >= q.height { p.height.clone() } else { q.height.clone() };
    match log_diff(p, q) {
        Valuation::Finite(lx) if lx > h => lx,
        _ => h,
    }
}

/// The geodesic `[a, b]` through its apex height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub a: TreePoint,
    pub b: TreePoint,
    pub merge: Rational,
}

impl Segment {
    pub fn new(a: &TreePoint, b: &TreePoint) -> Self {
        Self { a: a.clone(), b: b.clone(), merge: merge_height(a, b) }
    }

    /// `(merge - a.height) + (merge - b.height)`, equal to the tree distance.
    pub fn length(&self) -> Rational {
        (&self.merge - &self.a.height) + (&self.merge - &self.b.height)
    }

    /// The point at distance `s` from `a` along the segment.
    pub fn point_at(&self, s: &Rational) -> Result<TreePoint, TreeError> {
        let length = self.length();
        if s.is_negative() || *s > length {
            return Err(TreeError::OutOfRange { s: s.clone(), length });
        }
        let climb = &self.merge - &self.a.height;
        if *s <= climb {
            Ok(TreePoint::at_height(&self.a.foot, &self.a.height + s))
        } else {
            Ok(TreePoint::at_height(&self.b.foot, &self.merge - (s - climb)))
        }
    }
}

pub fn param_point(a: &TreePoint, b: &TreePoint, s: &Rational) -> Result<TreePoint, TreeError> {
    Segment::new(a, b).point_at(s)
}

/// `(d(base, p) + d(base, q) - d(p, q)) / 2`.
pub fn gromov_product(p: &TreePoint, q: &TreePoint, base: &TreePoint) -> Rational {
    (tree_distance(base, p) + tree_distance(base, q) - tree_distance(p, q)) / int(2)
}

/// The median of three tree points: the common point of the three geodesics
/// between them.
pub fn median(p1: &TreePoint, p2: &TreePoint, p3: &TreePoint) -> TreePoint {
    let along = gromov_product(p2, p3, p1);
    let m = param_point(p1, p2, &along).expect("Gromov product lies within the segment");
    debug_assert_eq!(tree_distance(p2, &m), gromov_product(p1, p3, p2));
    debug_assert_eq!(tree_distance(p3, &m), gromov_product(p1, p2, p3));
    m
}

/// `d(a, p) + d(p, b) == d(a, b)`.
pub fn is_on_segment(p: &TreePoint, a: &TreePoint, b: &TreePoint) -> bool {
    tree_distance(a, p) + tree_distance(p, b) == tree_distance(a, b)
}

/// Four-point condition: the two largest of the three pairing sums agree.
pub fn four_point_ok(p1: &TreePoint, p2: &TreePoint, p3: &TreePoint, p4: &TreePoint) -> bool {
    let mut sums = [
        tree_distance(p1, p2) + tree_distance(p3, p4),
        tree_distance(p1, p3) + tree_distance(p2, p4),
        tree_distance(p1, p4) + tree_distance(p2, p3),
    ];
    sums.sort();
    sums[1] == sums[2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hplane::hp_distance;
    use crate::series::rat;

    fn xp(e: Rational) -> PuiseuxSeries {
        PuiseuxSeries::x_pow(e)
    }

    fn tp(u: PuiseuxSeries, t: Rational) -> TreePoint {
        TreePoint::new(&u, t)
    }

    fn zero() -> PuiseuxSeries {
        PuiseuxSeries::zero()
    }

    fn a2() -> PuiseuxSeries {
        &xp(rat(-1, 2)) + &xp(rat(-3, 4))
    }

    fn p0() -> TreePoint {
        tp(zero(), int(0))
    }

    fn p2() -> TreePoint {
        project(&HPoint::new(a2(), xp(rat(-3, 4))).unwrap())
    }

    fn deep0() -> TreePoint {
        tp(zero(), int(-2))
    }

    #[test]
    fn projection_examples() {
        let z = HPoint::new(a2(), xp(rat(-3, 4))).unwrap();
        let p = project(&z);
        assert_eq!(p, tp(xp(rat(-1, 2)), rat(-3, 4)));
        assert_eq!(p.foot(), &xp(rat(-1, 2)));
        assert_eq!(hp_distance(&z, &p.representative()), int(0));
        assert_eq!(project(&HPoint::new(zero(), PuiseuxSeries::one()).unwrap()), p0());
        let q = project(&HPoint::new(xp(rat(-1, 2)), xp(rat(-3, 4))).unwrap());
        assert_eq!(q, p);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(tree_distance(&p0(), &deep0()), int(2));
        assert_eq!(tree_distance(&p0(), &p2()), rat(3, 4));
        assert_eq!(tree_distance(&tp(xp(rat(-1, 2)), rat(-3, 4)), &deep0()), rat(7, 4));
    }

    #[test]
    fn merge_height_examples() {
        assert_eq!(merge_height(&tp(zero(), int(-1)), &tp(zero(), int(-1))), int(-1));
        let l0 = project(&HPoint::new(zero(), xp(int(-2))).unwrap());
        let l2 = project(&HPoint::new(a2(), xp(int(-2))).unwrap());
        assert_eq!(merge_height(&l0, &l2), rat(-1, 2));
        assert_eq!(merge_height(&p0(), &tp(zero(), int(-3))), int(0));
    }

    #[test]
    fn param_point_examples() {
        let (a, b) = (p2(), deep0());
        assert_eq!(param_point(&a, &b, &int(0)).unwrap(), a);
        assert_eq!(param_point(&a, &b, &tree_distance(&a, &b)).unwrap(), b);
        assert_eq!(param_point(&p0(), &deep0(), &rat(1, 2)).unwrap(), tp(zero(), rat(-1, 2)));
        assert!(matches!(
            param_point(&a, &b, &int(3)),
            Err(TreeError::OutOfRange { .. })
        ));
        assert!(param_point(&a, &b, &rat(-1, 8)).is_err());
    }

    #[test]
    fn median_and_gromov_examples() {
        let (p, q) = (p2(), deep0());
        assert_eq!(median(&p, &p, &q), p);
        let p1 = tp(zero(), rat(-1, 2));
        assert_eq!(median(&p0(), &p2(), &deep0()), p1);
        let top = tp(zero(), int(3));
        let mid = tp(zero(), int(1));
        assert_eq!(median(&top, &deep0(), &mid), mid);
        assert_eq!(gromov_product(&p, &p, &q), tree_distance(&q, &p));
        assert_eq!(gromov_product(&p2(), &deep0(), &p0()), rat(1, 2));
        assert_eq!(gromov_product(&p, &q, &p), int(0));
    }

    #[test]
    fn segment_membership_examples() {
        let (a, b) = (p2(), deep0());
        assert!(is_on_segment(&a, &a, &b));
        assert!(is_on_segment(&tp(zero(), rat(-1, 2)), &p0(), &deep0()));
        assert!(!is_on_segment(&tp(xp(rat(-1, 2)), rat(-3, 4)), &p0(), &deep0()));
        let seg = Segment::new(&a, &b);
        assert_eq!(seg.length(), tree_distance(&a, &b));
    }

    #[test]
    fn four_point_examples() {
        let p = p2();
        assert!(four_point_ok(&p, &p, &p, &p));
        let pts: Vec<_> = [(zero(), int(0)), (zero(), rat(-1, 2)), (xp(rat(-1, 2)), rat(-3, 4))]
            .into_iter()
            .map(|(u, t)| tp(u, t))
            .collect();
        let a3 = &a2() + &xp(rat(-7, 8));
        let p3 = project(&HPoint::new(a3, xp(rat(-7, 8))).unwrap());
        assert!(four_point_ok(&pts[0], &pts[1], &pts[2], &p3));
        let line: Vec<_> = [5, -1, 2, -7].iter().map(|&h| tp(zero(), int(h))).collect();
        assert!(four_point_ok(&line[0], &line[1], &line[2], &line[3]));
    }
}
