use num_traits::{Signed, Zero};
use rand::Rng;
use thiserror::Error;

use super::{sequence, sequence_up_to};
use crate::hplane::{hp_distance, HPoint};
use crate::report::VerificationReport;
use crate::sample::{mix_seed, Sampler};
use crate::series::{int, rat, PuiseuxSeries, Rational, Valuation};
use crate::tree::{median, project};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("the two series coincide")]
    SameSeries,
    #[error("height offsets must be nonnegative, got {0}")]
    NegativeOffset(Rational),
}

/// Height far below every `t_n` (all of which exceed -1).
fn deep_height() -> Rational {
    int(-2)
}

/// `t_n` strictly decreasing, `a_n` strictly increasing, `b_n` strictly
/// decreasing.
pub fn verify_monotone(max_n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("sequence-monotone").with_param("max_n", max_n);
    let items = sequence_up_to(max_n);
    for w in items.windows(2) {
        let (prev, next) = (&w[0], &w[1]);
        report.check("t_decreasing", next.height < prev.height, || format!("t at n={}", next.index));
        let a_up = prev.foot.compare(&next.foot).ok() == Some(std::cmp::Ordering::Less);
        report.check("a_increasing", a_up, || format!("a at n={}", next.index));
        let b_down = prev.imag.compare(&next.imag).ok() == Some(std::cmp::Ordering::Greater);
        report.check("b_decreasing", b_down, || format!("b at n={}", next.index));
    }
    report
}

/// Every pair `n < m <= max_n` satisfies `d(p_n, p_m) = t_n - t_m` exactly.
pub fn verify_cauchy(max_n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("cauchy").with_param("max_n", max_n);
    let items = sequence_up_to(max_n);
    for (i, pn) in items.iter().enumerate() {
        for pm in &items[i + 1..] {
            let d = hp_distance(&pn.point, &pm.point);
            let expected = &pn.height - &pm.height;
            report.check("pairs", d == expected, || {
                format!("d(p_{}, p_{}) = {d}, expected {expected}", pn.index, pm.index)
            });
        }
    }
    report
}

/// Two vertical lines over `x` and `x2` are identified from the height
/// `log|x - x2|` upward.
///
/// Checks `d(x + iy, x2 + iy) = 0` for `y = X^(log|x - x2|)`, and for every
/// offset `s >= 0` both at `y = X^(log|x - x2| + s)` and at `y + s`.
pub fn verify_vertical_identification(
    x: &PuiseuxSeries,
    x2: &PuiseuxSeries,
    offsets: &[Rational],
) -> Result<VerificationReport, CheckError> {
    if let Some(neg) = offsets.iter().find(|s| s.is_negative()) {
        return Err(CheckError::NegativeOffset(neg.clone()));
    }
    let e = match (x - x2).log_abs().expect("exact difference") {
        Valuation::NegInfinity => return Err(CheckError::SameSeries),
        Valuation::Finite(e) => e,
    };
    let mut report = VerificationReport::new("vertical-identification")
        .with_param("x", x)
        .with_param("x2", x2);
    report.note(format!("merge height log|x - x2| = {e}"));

    let at = |y: PuiseuxSeries| {
        let z = HPoint::new(x.clone(), y.clone()).expect("positive height");
        let w = HPoint::new(x2.clone(), y).expect("positive height");
        hp_distance(&z, &w)
    };
    let base = PuiseuxSeries::x_pow(e.clone());
    let d = at(base.clone());
    report.check("merge_point", d.is_zero(), || format!("d at X^({e}) = {d}"));
    for s in offsets {
        let h = &e + s;
        let d = at(PuiseuxSeries::x_pow(h.clone()));
        report.check("raised_heights", d.is_zero(), || format!("d at X^({h}) = {d}"));
        let shifted = &base + &PuiseuxSeries::constant(s.clone());
        let d = at(shifted.clone());
        report.check("shifted_heights", d.is_zero(), || format!("d at {shifted} = {d}"));
    }
    Ok(report)
}

/// Sample of `count` heights strictly below `bound`.
fn heights_below(rng: &mut Sampler, bound: &Rational, n: u32, count: usize) -> Vec<Rational> {
    (0..count)
        .map(|i| {
            if i == 0 {
                // hug the bound with a denominator finer than any t_k used so far
                bound - Rational::new(1.into(), num_bigint::BigInt::from(1u8) << (n + 3))
            } else {
                let gap = rng.rational_in(0, 2, &[1, 2, 3, 4, 5, 7, 8]) + rat(1, 16);
                bound - gap
            }
        })
        .collect()
}

/// Consecutive vertical lines `l_n`, `l_(n+1)` meet exactly at and above
/// height `t_(n+1)`, and branch at the tree point of `p_(n+1)`.
///
/// For each `n < max_n`:
/// * `a_n + i X^h` and `a_(n+1) + i X^h` project to the same tree point for
///   `h = t_(n+1)` (where that point is the projection of `p_(n+1)`) and for
///   sampled `h > t_(n+1)`;
/// * for `probes_below` sampled `h < t_(n+1)`, the point `a_n + i X^h` is at
///   positive distance from sampled points of `l_(n+1)`, and its class is
///   off the image of `l_(n+1)` altogether;
/// * the median of deep points of `l_n`, `l_(n+1)` and `p_0` is `pi(p_(n+1))`.
pub fn verify_branching(max_n: u32, probes_below: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("branching")
        .with_param("max_n", max_n)
        .with_param("probes_below", probes_below)
        .with_param("seed", seed);
    let origin = project(&sequence(0).point);
    for n in 0..max_n {
        let cur = sequence(n);
        let next = sequence(n + 1);
        let branch = project(&next.point);

        let meet = project(&cur.on_line(&next.height));
        report.check("branch_point", meet == branch, || {
            format!("n={n}: pi(a_n + iX^t_(n+1)) != pi(p_(n+1))")
        });
        let d = hp_distance(&cur.on_line(&next.height), &next.point);
        report.check("branch_distance_zero", d.is_zero(), || format!("n={n}: distance {d}"));

        let mut rng = Sampler::new(mix_seed(seed, u64::from(n), 0));
        for k in 0..probes_below {
            let h = &next.height + rng.rational_in(0, 3, &[1, 2, 3, 4, 8]);
            let same = project(&cur.on_line(&h)) == project(&next.on_line(&h));
            report.check("identified_above", same, || format!("n={n}, probe {k}: h={h}"));
        }

        let below = heights_below(&mut rng, &next.height, n, probes_below);
        for (k, h) in below.iter().enumerate() {
            let probe = cur.on_line(h);
            let mut prng = Sampler::new(mix_seed(seed, u64::from(n), k as u64 + 1));
            let h2 = if prng.rng().gen_bool(0.5) {
                &next.height - prng.rational_in(0, 2, &[1, 2, 3, 4, 8])
            } else {
                &next.height + prng.rational_in(0, 2, &[1, 2, 3, 4, 8])
            };
            let d = hp_distance(&probe, &next.on_line(&h2));
            report.check("separated_below", d.is_positive(), || {
                format!("n={n}: d(a_n + iX^({h}), a_(n+1) + iX^({h2})) = {d}")
            });
            // the only candidate on l_(n+1) sits at the same height
            let off_line = project(&probe) != project(&next.on_line(h));
            report.check("off_next_line", off_line, || format!("n={n}: h={h} lies on l_(n+1)"));
        }

        let deep = deep_height();
        let m = median(
            &project(&cur.on_line(&deep)),
            &project(&next.on_line(&deep)),
            &origin,
        );
        report.check("median", m == branch, || format!("n={n}: median at height {}", m.height()));
    }
    report
}
