//! The Cauchy sequence `p_n = a_n + i b_n` whose image in the tree has no
//! limit in the completion of any segment.
//!
//! `t_n = -1 + 1/2^n`, `a_n = X^(t_1) + ... + X^(t_n)`, `b_n = X^(t_n)`.
//! Consecutive vertical lines `a_n + iF` and `a_(n+1) + iF` branch off at the
//! tree point of `p_(n+1)`, so the sequence keeps leaving every vertical
//! geodesic. A limit lying over the vertical line of some `a` would force
//! `log|a - a_n| <= t_n` for every `n`, i.e. `a` would contain every term
//! `X^(t_j)`, which no series with a finite exponent denominator does.

mod checks;
mod obstruction;

pub use checks::{
    verify_branching, verify_cauchy, verify_monotone, verify_vertical_identification, CheckError,
};
pub use obstruction::{
    find_witness, obstruction_corpus, obstruction_witness, predicted_bound, two_adic_valuation,
    verify_limit_routes, verify_obstruction, Witness,
};

use num_bigint::BigInt;
use num_traits::One;

use crate::hplane::{hp_distance, HPoint};
use crate::properties;
use crate::report::VerificationReport;
use crate::series::{int, Exponent, PuiseuxSeries, Rational};

/// `t_n = -1 + 1/2^n`.
pub fn sequence_height(n: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << n) - int(1)
}

/// `a_n = sum_{k=1..n} X^(t_k)`.
pub fn partial_sum(n: u32) -> PuiseuxSeries {
    PuiseuxSeries::from_terms((1..=n).map(|k| (sequence_height(k), int(1))))
}

/// One element of the sequence together with its defining data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceItem {
    pub index: u32,
    pub height: Rational,
    pub foot: PuiseuxSeries,
    pub imag: PuiseuxSeries,
    pub point: HPoint,
}

impl SequenceItem {
    /// The point `a_n + i X^h` on the vertical line `l_n`.
    pub fn on_line(&self, h: &Exponent) -> HPoint {
        HPoint::on_vertical(&self.foot, h)
    }

    /// `q_n = a + i X^(t_n)` on the vertical line over `a`.
    pub fn at_same_height_over(&self, a: &PuiseuxSeries) -> HPoint {
        HPoint::on_vertical(a, &self.height)
    }
}

pub fn sequence(n: u32) -> SequenceItem {
    let t = sequence_height(n);
    let a = partial_sum(n);
    let b = PuiseuxSeries::x_pow(t.clone());
    let p = HPoint::on_vertical(&a, &t);
    SequenceItem { index: n, height: t, foot: a, imag: b, point: p }
}

/// Items `0..=max_n`.
pub fn sequence_up_to(max_n: u32) -> Vec<SequenceItem> {
    (0..=max_n).map(sequence).collect()
}

/// Whether a limit over the vertical line of `a` is compatible with index
/// `n`: `log|a - a_n| <= t_n`, with `log 0 = -inf`.
pub fn limit_constraint(a: &PuiseuxSeries, n: u32) -> bool {
    let (by_valuation, by_distance) = limit_constraint_routes(a, n);
    debug_assert_eq!(by_valuation, by_distance);
    by_valuation
}

/// The constraint computed twice: from the valuation of `a - a_n`, and as
/// `d(p_n, a + i X^(t_n)) == 0`.
pub fn limit_constraint_routes(a: &PuiseuxSeries, n: u32) -> (bool, bool) {
    assert!(a.is_exact(), "limit candidate must be exact");
    let item = sequence(n);
    let by_valuation = (a - &item.foot)
        .log_abs()
        .expect("exact difference")
        .at_most(&item.height);
    let by_distance = hp_distance(&item.point, &item.at_same_height_over(a)) == int(0);
    (by_valuation, by_distance)
}

/// Parameters shared by the full verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: u32,
    pub seed: u64,
    pub samples: usize,
    pub probes_below: usize,
    pub window: Exponent,
}

impl VerifyConfig {
    pub fn new(max_n: u32, seed: u64) -> Self {
        Self {
            max_n,
            seed,
            samples: properties::DEFAULT_SAMPLES,
            probes_below: 10,
            window: int(crate::series::DEFAULT_WINDOW),
        }
    }
}

/// Runs every verifier and returns the reports in a fixed order.
///
/// Independent checks run on separate threads; the output order does not
/// depend on scheduling.
pub fn verify_all(config: &VerifyConfig) -> Vec<VerificationReport> {
    let c = config;
    let jobs: Vec<Box<dyn Fn() -> Vec<VerificationReport> + Send + Sync + '_>> = vec![
        Box::new(|| vec![verify_monotone(c.max_n), verify_cauchy(c.max_n)]),
        Box::new(|| {
            let half = crate::series::rat(1, 2);
            let a1 = PuiseuxSeries::x_pow(-half);
            let extras = [int(0), crate::series::rat(1, 4), int(1), int(3)];
            vec![
                verify_vertical_identification(&PuiseuxSeries::zero(), &a1, &extras)
                    .expect("distinct series"),
                verify_vertical_identification(
                    &PuiseuxSeries::zero(),
                    &partial_sum(2),
                    &[crate::series::rat(1, 4)],
                )
                .expect("distinct series"),
            ]
        }),
        Box::new(|| vec![verify_branching(c.max_n, c.probes_below, c.seed)]),
        Box::new(|| {
            let corpus = obstruction_corpus(c.seed);
            vec![verify_limit_routes(&corpus, c.max_n), verify_obstruction(&corpus, c.max_n)]
        }),
        Box::new(|| properties::verify_axioms(c.samples, c.seed)),
        Box::new(|| vec![properties::check_cross_ratio(c.samples / 4, c.seed, &c.window)]),
    ];
    std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.iter().map(|job| scope.spawn(job)).collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verifier thread panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn sequence_examples() {
        let s0 = sequence(0);
        assert_eq!(s0.height, int(0));
        assert!(s0.foot.is_zero());
        assert_eq!(s0.imag, PuiseuxSeries::one());
        assert_eq!(s0.point, HPoint::new(PuiseuxSeries::zero(), PuiseuxSeries::one()).unwrap());
        let s2 = sequence(2);
        assert_eq!(s2.height, rat(-3, 4));
        assert_eq!(
            s2.foot,
            PuiseuxSeries::from_terms([(rat(-1, 2), int(1)), (rat(-3, 4), int(1))])
        );
        assert_eq!(s2.imag, PuiseuxSeries::x_pow(rat(-3, 4)));
        assert_eq!(sequence(3).height, rat(-7, 8));
        assert_eq!(sequence_up_to(4).len(), 5);
    }

    #[test]
    fn limit_constraint_examples() {
        let a3 = partial_sum(3);
        assert!(limit_constraint(&a3, 4));
        assert!(!limit_constraint(&a3, 5));
        assert!(limit_constraint(&PuiseuxSeries::zero(), 1));
        assert!(!limit_constraint(&PuiseuxSeries::zero(), 2));
    }
}
