//! Deterministic random generators for series, points and tree points.
//!
//! Samplers are seeded ChaCha streams so that every check is reproducible
//! from its seed. Half-plane points are drawn around a fixed "trunk" series:
//! each sampled `x` keeps a random prefix of the trunk and then diverges,
//! which produces the shared prefixes needed to exercise branching in the
//! tree.

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hplane::HPoint;
use crate::series::{int, rat, Exponent, PuiseuxSeries, Rational};
use crate::tree::{project, TreePoint};

/// Derives an independent stream seed from a base seed and two indices.
pub fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed
        .wrapping_add(a.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(b.wrapping_mul(0xD1B5_4A32_D192_ED03));
    // splitmix64 finalizer
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

const EXPONENT_DENOMS: [i64; 6] = [1, 2, 3, 4, 6, 8];

fn trunk() -> Vec<(Exponent, Rational)> {
    [
        ((2, 1), (1, 1)),
        ((3, 2), (-2, 1)),
        ((1, 1), (1, 2)),
        ((2, 3), (3, 1)),
        ((1, 2), (-1, 1)),
        ((0, 1), (1, 1)),
        ((-1, 4), (2, 1)),
        ((-1, 2), (-1, 3)),
        ((-1, 1), (1, 1)),
        ((-3, 2), (1, 1)),
        ((-2, 1), (-1, 1)),
        ((-5, 2), (5, 1)),
    ]
    .into_iter()
    .map(|((en, ed), (cn, cd))| (rat(en, ed), rat(cn, cd)))
    .collect()
}

pub struct Sampler {
    rng: ChaCha8Rng,
    trunk: Vec<(Exponent, Rational)>,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed), trunk: trunk() }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn chance(&mut self, numer: u32, denom: u32) -> bool {
        self.rng.gen_ratio(numer, denom)
    }

    /// Uniform `p/q` in `[lo, hi]` with `q` drawn from `denoms`.
    pub fn rational_in(&mut self, lo: i64, hi: i64, denoms: &[i64]) -> Rational {
        let q = *denoms.choose(&mut self.rng).expect("nonempty denominators");
        let p = self.rng.gen_range(lo * q..=hi * q);
        rat(p, q)
    }

    /// Exponent on a grid in `[-3, 3]`.
    pub fn exponent(&mut self) -> Exponent {
        self.rational_in(-3, 3, &EXPONENT_DENOMS)
    }

    /// Nonzero coefficient `p/q` with `|p| <= 9`, `q <= 4`.
    pub fn coefficient(&mut self) -> Rational {
        let q = self.rng.gen_range(1..=4i64);
        let mut p = self.rng.gen_range(1..=9i64);
        if self.rng.gen_bool(0.5) {
            p = -p;
        }
        rat(p, q)
    }

    /// Up to four random terms; may be zero.
    pub fn series(&mut self) -> PuiseuxSeries {
        let n = self.rng.gen_range(0..=4);
        let terms: Vec<_> = (0..n).map(|_| (self.exponent(), self.coefficient())).collect();
        PuiseuxSeries::from_terms(terms)
    }

    pub fn nonzero_series(&mut self) -> PuiseuxSeries {
        loop {
            let s = self.series();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Random series with positive leading coefficient.
    pub fn positive_series(&mut self) -> PuiseuxSeries {
        let s = self.nonzero_series();
        if s.is_positive().expect("exact series") {
            s
        } else {
            -s
        }
    }

    /// A prefix of the trunk, optionally followed by a divergent coefficient
    /// and a random tail.
    pub fn branching_series(&mut self) -> PuiseuxSeries {
        let k = self.rng.gen_range(0..=self.trunk.len());
        let mut terms: Vec<_> = self.trunk[..k].to_vec();
        if k < self.trunk.len() && self.chance(1, 2) {
            let (e, c) = self.trunk[k].clone();
            let mut delta = self.coefficient();
            if delta == -c.clone() {
                delta += Rational::one();
            }
            terms.push((e, c + delta));
        }
        if self.chance(1, 3) {
            let floor = terms.last().map_or(int(3), |(e, _)| e.clone());
            let drop = self.rational_in(0, 2, &EXPONENT_DENOMS) + rat(1, 8);
            terms.push((floor - drop, self.coefficient()));
        }
        PuiseuxSeries::from_terms(terms)
    }

    /// Height on a grid in `[-3, 3]`.
    pub fn height(&mut self) -> Rational {
        self.exponent()
    }

    /// `x + iy` with `x` from the trunk family and `y > 0` with a random
    /// leading exponent.
    pub fn hpoint(&mut self) -> HPoint {
        let x = self.branching_series();
        let h = self.height();
        let mut y = PuiseuxSeries::monomial(self.rational_in(1, 5, &[1, 2, 3]), h.clone());
        if self.chance(1, 3) {
            let below = &h - self.rational_in(0, 2, &EXPONENT_DENOMS) - rat(1, 6);
            y = &y + &PuiseuxSeries::monomial(self.coefficient(), below);
        }
        HPoint::new(x, y).expect("sampled point is valid")
    }

    /// A pair of distinct points for the cross-ratio oracle, with few terms
    /// and dyadic exponents so that the circle expansions stay small. One
    /// pair in eight shares a vertical line, one in four shares a prefix.
    pub fn oracle_pair(&mut self) -> (HPoint, HPoint) {
        const DENOMS: [i64; 3] = [1, 2, 4];
        let small = |s: &mut Self, max_terms: usize| {
            let n = s.rng.gen_range(1..=max_terms);
            PuiseuxSeries::from_terms(
                (0..n)
                    .map(|_| (s.rational_in(-1, 1, &DENOMS), s.coefficient()))
                    .collect::<Vec<_>>(),
            )
        };
        let point = |s: &mut Self, x: PuiseuxSeries| {
            let y = PuiseuxSeries::monomial(s.rational_in(1, 4, &[1, 2]), s.rational_in(-1, 1, &DENOMS));
            HPoint::new(x, y).expect("sampled point is valid")
        };
        loop {
            let x = small(self, 3);
            let x2 = match self.rng.gen_range(0..8) {
                0 => x.clone(),
                1 | 2 => &x + &PuiseuxSeries::monomial(self.coefficient(), self.rational_in(-1, 0, &DENOMS)),
                _ => small(self, 3),
            };
            let (z, z2) = (point(self, x), point(self, x2));
            if z != z2 {
                return (z, z2);
            }
        }
    }

    /// A different point of the same zero-distance class as `z`: the height
    /// is rescaled by a positive constant and `x` is perturbed at or below
    /// `log y`.
    pub fn same_class(&mut self, z: &HPoint) -> HPoint {
        let t = z.log_height();
        let scale = self.rational_in(1, 4, &[1, 2, 3]);
        let y = z.y().scale(&scale);
        let e = &t - self.rational_in(0, 2, &EXPONENT_DENOMS);
        let x = z.x() + &PuiseuxSeries::monomial(self.coefficient(), e);
        HPoint::new(x, y).expect("perturbed point is valid")
    }

    pub fn tree_point(&mut self) -> TreePoint {
        project(&self.hpoint())
    }

    /// `length * k / d` for random `0 <= k <= d`.
    pub fn fraction_of(&mut self, length: &Rational) -> Rational {
        let d = self.rng.gen_range(1..=12i64);
        let k = self.rng.gen_range(0..=d);
        length * rat(k, d)
    }

    pub fn small_seed(&mut self) -> u64 {
        self.rng.gen()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samplers_are_reproducible() {
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        for _ in 0..20 {
            assert_eq!(a.hpoint(), b.hpoint());
        }
        assert_ne!(mix_seed(1, 2, 3), mix_seed(1, 3, 2));
    }

    #[test]
    fn same_class_has_zero_distance() {
        let mut s = Sampler::new(9);
        for _ in 0..50 {
            let z = s.hpoint();
            let w = s.same_class(&z);
            assert_eq!(crate::hplane::hp_distance(&z, &w), int(0));
        }
    }
}
