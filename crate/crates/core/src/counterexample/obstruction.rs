use num_bigint::BigInt;

use super::{limit_constraint, limit_constraint_routes, partial_sum, sequence_height};
use crate::report::VerificationReport;
use crate::sample::{mix_seed, Sampler};
use crate::series::{int, rat, PuiseuxSeries};

/// Exponent of 2 in `m` (0 for `m = 0`).
pub fn two_adic_valuation(m: &BigInt) -> u64 {
    m.trailing_zeros().unwrap_or(0)
}

/// Upper bound on the first index violating the limit constraint.
///
/// If the constraint holds at `n >= 2`, then `a` carries the term `X^(t_j)`
/// for every `j < n`, so `2^(n-1)` divides the exponent denominator lcm `m`.
/// Hence the first violation happens at some `n <= v2(m) + 2`.
pub fn predicted_bound(a: &PuiseuxSeries) -> u64 {
    two_adic_valuation(&a.exponent_denominator_lcm()) + 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Least `n <= max_n` with `log|a - a_n| > t_n`, if any.
    pub first_violation: Option<u32>,
    pub bound: u64,
    pub lcm: BigInt,
}

pub fn find_witness(a: &PuiseuxSeries, max_n: u32) -> Witness {
    Witness {
        first_violation: (0..=max_n).find(|&n| !limit_constraint(a, n)),
        bound: predicted_bound(a),
        lcm: a.exponent_denominator_lcm(),
    }
}

fn record(report: &mut VerificationReport, a: &PuiseuxSeries, max_n: u32) {
    let w = find_witness(a, max_n);
    match w.first_violation {
        Some(n) => {
            report.check("within_bound", u64::from(n) <= w.bound, || {
                format!("a = {a}: n* = {n} exceeds v2({}) + 2 = {}", w.lcm, w.bound)
            });
            report.note(format!("a = {a}: m = {}, n* = {n}, bound = {}", w.lcm, w.bound));
        }
        None if u64::from(max_n) >= w.bound => {
            report.bump("within_bound");
            report.fail(format!(
                "a = {a}: constraint holds for all n <= {max_n} despite bound {}",
                w.bound
            ));
        }
        None => {
            report.bump("max_n_too_small");
            report.skip(format!("a = {a}: max_n = {max_n} below predicted bound {}", w.bound));
        }
    }
}

/// Searches the least index at which `a` fails the limit constraint and
/// compares it with the divisibility bound `v2(m) + 2`.
///
/// `Skip` when `max_n` is below the bound and no violation was found yet.
pub fn obstruction_witness(a: &PuiseuxSeries, max_n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("obstruction")
        .with_param("a", a)
        .with_param("max_n", max_n);
    record(&mut report, a, max_n);
    report
}

const SCOPE_NOTE: &str = "checked: a limit over the vertical line of a forces \
log|a - a_n| <= t_n for all n; not finitely checkable: the reduction of an arbitrary \
segment to a vertical line and the density argument placing the limit on it";

/// The obstruction over a whole corpus of candidate limits.
pub fn verify_obstruction(corpus: &[PuiseuxSeries], max_n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("obstruction")
        .with_param("corpus_size", corpus.len())
        .with_param("max_n", max_n);
    report.note(SCOPE_NOTE);
    for a in corpus {
        record(&mut report, a, max_n);
    }
    report
}

/// The constraint via valuations agrees with the constraint via
/// `d(p_n, q_n) = 0` for every corpus series and `n <= max_n`.
pub fn verify_limit_routes(corpus: &[PuiseuxSeries], max_n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("limit-constraint-routes")
        .with_param("corpus_size", corpus.len())
        .with_param("max_n", max_n);
    for a in corpus {
        for n in 0..=max_n {
            let (v, d) = limit_constraint_routes(a, n);
            report.check("pairs", v == d, || {
                format!("a = {a}, n = {n}: valuation says {v}, distance says {d}")
            });
        }
    }
    report
}

/// Candidate limits: every subset of `{X^(t_1), ..., X^(t_4)}`, the partial
/// sums up to `a_16`, a few hand-picked series, and seeded random series with
/// exponent denominators in `{1, 2, 3, 4, 8, 16}` (some grafted onto a
/// partial sum).
pub fn obstruction_corpus(seed: u64) -> Vec<PuiseuxSeries> {
    let mut corpus = Vec::new();
    for mask in 0u32..16 {
        corpus.push(PuiseuxSeries::from_terms(
            (1..=4).filter(|k| mask & (1 << (k - 1)) != 0).map(|k| (sequence_height(k), int(1))),
        ));
    }
    for k in 5..=16 {
        corpus.push(partial_sum(k));
    }
    corpus.push(PuiseuxSeries::x_pow(int(-1)));
    corpus.push(PuiseuxSeries::x_pow(int(1)));
    corpus.push(PuiseuxSeries::one());
    corpus.push(-partial_sum(3));
    corpus.push(&partial_sum(3) + &PuiseuxSeries::x_pow(sequence_height(3)));
    corpus.push(&partial_sum(6) + &PuiseuxSeries::x_pow(sequence_height(8)));

    let mut rng = Sampler::new(mix_seed(seed, 0x0b57, 0));
    let denoms = [1, 2, 3, 4, 8, 16];
    for i in 0..24 {
        let n_terms = 1 + (i % 4);
        let mut terms: Vec<_> = (0..n_terms)
            .map(|_| (rng.rational_in(-2, 1, &denoms), rng.coefficient()))
            .collect();
        if i % 3 == 0 {
            let k = 1 + (i as u32 % 6);
            terms.extend((1..=k).map(|j| (sequence_height(j), int(1))));
            terms.push((sequence_height(k + 1) - rat(1, 16), rng.coefficient()));
        }
        corpus.push(PuiseuxSeries::from_terms(terms));
    }
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn witness_examples() {
        let w = find_witness(&PuiseuxSeries::zero(), 8);
        assert_eq!((w.first_violation, w.bound), (Some(2), 2));
        let w = find_witness(&partial_sum(3), 8);
        assert_eq!((w.first_violation, w.bound), (Some(5), 5));
        let w = find_witness(&PuiseuxSeries::x_pow(int(-1)), 8);
        assert_eq!((w.first_violation, w.bound), (Some(2), 2));
    }

    #[test]
    fn witness_brute_force_for_a3() {
        // log|a_3 - a_n| for n = 0..5: -1/2, -3/4, -7/8, -inf, -15/16, -15/16
        // against t_n:              0, -1/2, -3/4, -7/8, -15/16, -31/32
        let a3 = partial_sum(3);
        let expect = [true, true, true, true, true, false];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(limit_constraint(&a3, n as u32), *e, "n = {n}");
        }
    }

    #[test]
    fn report_statuses() {
        assert_eq!(obstruction_witness(&PuiseuxSeries::zero(), 8).status, Status::Pass);
        let r = obstruction_witness(&partial_sum(10), 4);
        assert_eq!(r.status, Status::Skip);
        assert_eq!(r.count("max_n_too_small"), 1);
        // found early even though max_n is below the bound
        assert_eq!(obstruction_witness(&PuiseuxSeries::zero(), 2).status, Status::Pass);
    }

    #[test]
    fn two_adic() {
        assert_eq!(two_adic_valuation(&BigInt::from(1)), 0);
        assert_eq!(two_adic_valuation(&BigInt::from(48)), 4);
        assert_eq!(two_adic_valuation(&(BigInt::from(3) << 16)), 16);
    }

    #[test]
    fn corpus_is_large_and_in_range() {
        let corpus = obstruction_corpus(1);
        assert!(corpus.len() >= 50);
        let cap = BigInt::from(1) << 16;
        assert!(corpus.iter().all(|a| a.exponent_denominator_lcm() <= cap));
        assert_eq!(corpus, obstruction_corpus(1));
    }
}
