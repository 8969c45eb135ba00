//! Alpha-chain classification of `4m + 3` integers, the weighted drift
//! series, and exhaustive empirical scans.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{alpha_of, syracuse_step, Kind, OddInt};
use crate::error::{Error, Result};
use crate::scan;
use crate::trajectory::{trajectory_direct, TrajectoryRecord, DEFAULT_MAX_STEPS};

fn require_three_mod_four(x: &OddInt) -> Result<()> {
    if x.low_bits() & 3 == 3 {
        Ok(())
    } else {
        Err(Error::NotThreeModFour(x.value().clone()))
    }
}

/// Number of consecutive `alpha = 1` steps starting at `x`: one less than
/// the number of trailing one bits of `x`.
pub fn alpha_chain_length(x: &OddInt) -> Result<u64> {
    require_three_mod_four(x)?;
    let above = x.value() + 1u32;
    Ok(above.trailing_zeros().expect("non-zero") - 1)
}

/// `2^(h+1)·(2n - 1) - 1`, the `n`-th integer (from 1) with chain length `h`.
pub fn alpha_table_entry(h: u64, n: &BigUint) -> Result<OddInt> {
    if h == 0 {
        return Err(Error::param("h", "chain length starts at 1"));
    }
    if n.is_zero() {
        return Err(Error::param("n", "rows start at 1"));
    }
    let odd_factor: BigUint = (n << 1u32) - 1u32;
    Ok(OddInt::new_unchecked((odd_factor << (h + 1)) - 1u32))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaChain {
    pub start: OddInt,
    pub length_h: u64,
    /// The `h` iterates produced by the `alpha = 1` steps; the last one is
    /// `≡ 1 (mod 4)`.
    pub chain: Vec<OddInt>,
    /// Iterate of the last chain element, produced with `alpha ≥ 2`.
    pub exit_iterate: OddInt,
}

pub fn alpha_chain(x: &OddInt) -> Result<AlphaChain> {
    let h = alpha_chain_length(x)?;
    let mut chain = Vec::with_capacity(h as usize);
    let mut current = x.value().clone();
    for _ in 0..h {
        current = (current * 3u32 + 1u32) >> 1u32;
        chain.push(OddInt::new_unchecked(current.clone()));
    }
    let last = chain.last().expect("h >= 1");
    let exit_iterate = syracuse_step(last).iterate;
    Ok(AlphaChain {
        start: x.clone(),
        length_h: h,
        chain,
        exit_iterate,
    })
}

/// Additive constant of the `h`-step composite `(3^h·x + c_h) / 2^h`.
pub fn chain_composite_constant(h: u64) -> BigUint {
    BigUint::from(3u32).pow(h as u32) - (BigUint::one() << h)
}

fn geometric_partial_sum(ratio: &BigRational, n_terms: u64) -> BigRational {
    let mut term = ratio.clone();
    let mut sum = BigRational::zero();
    for _ in 0..n_terms {
        sum += &term;
        term *= ratio;
    }
    sum
}

fn rational(num: u64, den: u64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn require_terms(n_terms: u64) -> Result<()> {
    if n_terms == 0 {
        Err(Error::param("n_terms", "must be at least 1"))
    } else {
        Ok(())
    }
}

/// `Σ_{i=1..n} (3/4)^i`, exact.
pub fn drift_series_increase_exact(n_terms: u64) -> Result<BigRational> {
    require_terms(n_terms)?;
    Ok(geometric_partial_sum(&rational(3, 4), n_terms))
}

pub fn drift_series_increase(n_terms: u64) -> Result<f64> {
    Ok(to_f64(&drift_series_increase_exact(n_terms)?))
}

/// Limit of the increase series.
pub fn drift_increase_limit() -> BigRational {
    rational(3, 1)
}

/// Partial sums of the decrease series and its two components: the
/// odd-alpha part `(3/4)·Σ(1/16)^i` and the even-alpha part `3·Σ(1/16)^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecreaseSeries {
    pub n_terms: u64,
    pub odd_alpha_part: BigRational,
    pub even_alpha_part: BigRational,
    pub total: BigRational,
}

impl DecreaseSeries {
    /// Closed-form limits of `(odd, even, total)`: 1/20, 1/5, 1/4.
    pub fn limits() -> (BigRational, BigRational, BigRational) {
        (rational(1, 20), rational(1, 5), rational(1, 4))
    }
}

pub fn drift_series_decrease_exact(n_terms: u64) -> Result<DecreaseSeries> {
    require_terms(n_terms)?;
    let base = geometric_partial_sum(&rational(1, 16), n_terms);
    let odd_alpha_part = &base * rational(3, 4);
    let even_alpha_part = &base * rational(3, 1);
    let total = &base * rational(15, 4);
    Ok(DecreaseSeries {
        n_terms,
        odd_alpha_part,
        even_alpha_part,
        total,
    })
}

pub fn drift_series_decrease(n_terms: u64) -> Result<f64> {
    Ok(to_f64(&drift_series_decrease_exact(n_terms)?.total))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Series values side by side with their limits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesReport {
    pub n_terms: u64,
    pub increase: f64,
    pub increase_limit: f64,
    pub decrease: f64,
    pub decrease_odd_alpha: f64,
    pub decrease_even_alpha: f64,
    pub decrease_limit: f64,
}

pub fn series_report(n_terms: u64) -> Result<SeriesReport> {
    let dec = drift_series_decrease_exact(n_terms)?;
    Ok(SeriesReport {
        n_terms,
        increase: drift_series_increase(n_terms)?,
        increase_limit: to_f64(&drift_increase_limit()),
        decrease: to_f64(&dec.total),
        decrease_odd_alpha: to_f64(&dec.odd_alpha_part),
        decrease_even_alpha: to_f64(&dec.even_alpha_part),
        decrease_limit: to_f64(&DecreaseSeries::limits().2),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaBin {
    pub alpha: u32,
    pub count: u64,
    pub ratio: f64,
    /// Count predicted by the single residue class mod `2^(alpha+1)`.
    pub predicted: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaDensity {
    pub bound: u64,
    pub odd_count: u64,
    pub bins: Vec<AlphaBin>,
}

/// The odd residue `r` mod `2^(a+1)` whose members have `alpha = a` exactly.
pub fn alpha_residue(a: u32) -> u64 {
    let modulus = 1u64 << (a + 1);
    // 3r + 1 = 2^a + j·2^(a+1) for the j that makes it divisible by 3
    (0..3u64)
        .map(|j| (1u64 << a) + j * modulus - 1)
        .find(|v| v % 3 == 0)
        .map(|v| (v / 3) % modulus)
        .expect("2 is invertible mod 3")
}

fn count_in_class(bound: u64, residue: u64, modulus: u64) -> u64 {
    if residue == 0 || residue > bound {
        0
    } else {
        (bound - residue) / modulus + 1
    }
}

pub fn empirical_alpha_density(bound: u64, max_alpha: u32, workers: usize) -> Result<AlphaDensity> {
    if max_alpha == 0 || max_alpha > 62 {
        return Err(Error::param("max_alpha", "must be in 1..=62"));
    }
    if bound < 1u64 << (max_alpha + 1) {
        return Err(Error::param(
            "bound",
            format!("must be at least 2^{}", max_alpha + 1),
        ));
    }
    let slots = max_alpha as usize;
    let counts = scan::map_fold(
        1,
        bound,
        workers,
        |a, b| {
            let mut local = vec![0u64; slots];
            for x in (a..=b).step_by(2) {
                let alpha = alpha_of(&OddInt::new_unchecked(x.into()));
                if alpha as usize <= slots {
                    local[alpha as usize - 1] += 1;
                }
            }
            Ok(local)
        },
        vec![0u64; slots],
        |mut acc, part| {
            acc.iter_mut().zip(part).for_each(|(a, p)| *a += p);
            acc
        },
    )?;
    let odd_count = bound.div_ceil(2);
    let bins = counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| {
            let alpha = i as u32 + 1;
            AlphaBin {
                alpha,
                count,
                ratio: count as f64 / odd_count as f64,
                predicted: count_in_class(bound, alpha_residue(alpha), 1u64 << (alpha + 1)),
            }
        })
        .collect();
    Ok(AlphaDensity {
        bound,
        odd_count,
        bins,
    })
}

/// Geometric mean of `iterate / x` over odd `x` in `[3, scan_bound]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DriftReport {
    pub scan_bound: u64,
    pub samples: u64,
    pub empirical_value: f64,
    pub mean_alpha: f64,
    pub target: f64,
    pub tolerance: f64,
}

impl DriftReport {
    pub fn within_tolerance(&self) -> bool {
        (self.empirical_value - self.target).abs() <= self.tolerance
    }
}

/// Target per-step factor and accepted deviation for [`empirical_drift`].
pub const DRIFT_TARGET: f64 = 0.75;
pub const DRIFT_TOLERANCE: f64 = 0.02;

pub fn empirical_drift(bound: u64, workers: usize) -> Result<DriftReport> {
    if bound < 3 {
        return Err(Error::param("bound", "must be at least 3"));
    }
    let (samples, log_sum, alpha_sum) = scan::map_fold(
        3,
        bound,
        workers,
        |a, b| {
            let mut local = (0u64, 0f64, 0u64);
            for x in (a..=b).step_by(2) {
                let x = OddInt::new_unchecked(x.into());
                let step = syracuse_step(&x);
                local.0 += 1;
                local.1 += step.iterate.ln() - x.ln();
                local.2 += step.alpha;
            }
            Ok(local)
        },
        (0u64, 0f64, 0u64),
        |acc, p| (acc.0 + p.0, acc.1 + p.1, acc.2 + p.2),
    )?;
    Ok(DriftReport {
        scan_bound: bound,
        samples,
        empirical_value: (log_sum / samples as f64).exp(),
        mean_alpha: alpha_sum as f64 / samples as f64,
        target: DRIFT_TARGET,
        tolerance: DRIFT_TOLERANCE,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterateClassRatio {
    pub bound: u64,
    pub scanned: u64,
    pub count_6m1: u64,
    pub count_6m5: u64,
    pub ratio_6m1: f64,
    pub ratio_6m5: f64,
}

/// How the iterates of odd `x ≤ bound` split between `6m + 1` and `6m + 5`.
pub fn empirical_iterate_class_ratio(bound: u64, workers: usize) -> Result<IterateClassRatio> {
    if bound == 0 {
        return Err(Error::param("bound", "must be at least 1"));
    }
    let (c1, c5) = scan::map_fold(
        1,
        bound,
        workers,
        |a, b| {
            let mut local = (0u64, 0u64);
            for x in (a..=b).step_by(2) {
                match Kind::of(&syracuse_step(&OddInt::new_unchecked(x.into())).iterate) {
                    Kind::Intermediary6m1 => local.0 += 1,
                    Kind::Intermediary6m5 => local.1 += 1,
                    Kind::Starter => unreachable!("a Syracuse iterate is never a multiple of 3"),
                }
            }
            Ok(local)
        },
        (0, 0),
        |acc, p| (acc.0 + p.0, acc.1 + p.1),
    )?;
    let scanned = c1 + c5;
    Ok(IterateClassRatio {
        bound,
        scanned,
        count_6m1: c1,
        count_6m5: c5,
        ratio_6m1: c1 as f64 / scanned as f64,
        ratio_6m5: c5 as f64 / scanned as f64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub start: OddInt,
    pub value: OddInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub bound: u64,
    pub trajectories: u64,
    pub iterates_checked: u64,
    pub starter_iterate_violations: u64,
    pub duplicate_violations: u64,
    /// Up to [`MAX_WITNESSES`] examples of each kind, smallest start first.
    pub starter_iterate_witnesses: Vec<Witness>,
    pub duplicate_witnesses: Vec<Witness>,
}

pub const MAX_WITNESSES: usize = 16;

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.starter_iterate_violations == 0 && self.duplicate_violations == 0
    }

    fn empty(bound: u64) -> Self {
        TheoremReport {
            bound,
            trajectories: 0,
            iterates_checked: 0,
            starter_iterate_violations: 0,
            duplicate_violations: 0,
            starter_iterate_witnesses: Vec::new(),
            duplicate_witnesses: Vec::new(),
        }
    }

    fn absorb(&mut self, record: &TrajectoryRecord) {
        self.trajectories += 1;
        self.iterates_checked += record.iterates.len() as u64;
        for v in &record.iterates {
            if v.rem_u32(3) == 0 {
                self.starter_iterate_violations += 1;
                push_witness(&mut self.starter_iterate_witnesses, &record.start, v);
            }
        }
        let mut seen = std::collections::HashSet::new();
        for v in record.path() {
            if !seen.insert(v) {
                self.duplicate_violations += 1;
                push_witness(&mut self.duplicate_witnesses, &record.start, v);
            }
        }
    }

    fn merge(mut self, other: TheoremReport) -> TheoremReport {
        self.trajectories += other.trajectories;
        self.iterates_checked += other.iterates_checked;
        self.starter_iterate_violations += other.starter_iterate_violations;
        self.duplicate_violations += other.duplicate_violations;
        for w in other.starter_iterate_witnesses {
            push_witness(&mut self.starter_iterate_witnesses, &w.start, &w.value);
        }
        for w in other.duplicate_witnesses {
            push_witness(&mut self.duplicate_witnesses, &w.start, &w.value);
        }
        self
    }
}

fn push_witness(list: &mut Vec<Witness>, start: &OddInt, value: &OddInt) {
    if list.len() < MAX_WITNESSES {
        list.push(Witness {
            start: start.clone(),
            value: value.clone(),
        });
    }
}

/// Checks one trajectory for a multiple of 3 among its iterates and for a
/// repeated value.
pub fn verify_single(x: &OddInt, max_steps: u64) -> Result<TheoremReport> {
    let mut report = TheoremReport::empty(0);
    report.absorb(&trajectory_direct(x, max_steps)?);
    Ok(report)
}

/// Scans every odd `x ≤ bound`. Violations are counted, not raised.
pub fn verify_theorems(bound: u64, workers: usize) -> Result<TheoremReport> {
    verify_theorems_with_budget(bound, workers, DEFAULT_MAX_STEPS)
}

pub fn verify_theorems_with_budget(
    bound: u64,
    workers: usize,
    max_steps: u64,
) -> Result<TheoremReport> {
    if bound < 3 {
        return Err(Error::param("bound", "must be at least 3"));
    }
    scan::map_fold(
        1,
        bound,
        workers,
        |a, b| {
            let mut local = TheoremReport::empty(bound);
            for x in (a..=b).step_by(2) {
                local.absorb(&trajectory_direct(
                    &OddInt::new_unchecked(x.into()),
                    max_steps,
                )?);
            }
            Ok(local)
        },
        TheoremReport::empty(bound),
        TheoremReport::merge,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd(v: u64) -> OddInt {
        OddInt::from_u64(v).unwrap()
    }

    fn odds(vs: &[u64]) -> Vec<OddInt> {
        vs.iter().map(|&v| odd(v)).collect()
    }

    // consecutive alpha = 1 steps, counted by iteration
    fn brute_chain_length(x: u64) -> u64 {
        let mut h = 0;
        let mut v = x;
        while v % 4 == 3 {
            v = (3 * v).div_ceil(2);
            h += 1;
        }
        h
    }

    #[test]
    fn chain_length_examples() {
        assert_eq!(alpha_chain_length(&odd(63)).unwrap(), 5);
        assert_eq!(alpha_chain_length(&odd(7)).unwrap(), 2);
        assert_eq!(alpha_chain_length(&odd(27)).unwrap(), 1);
        assert_eq!(alpha_chain_length(&odd(2047)).unwrap(), 10);
        assert!(matches!(
            alpha_chain_length(&odd(5)),
            Err(Error::NotThreeModFour(_))
        ));
        for x in (3..20_000u64).step_by(4) {
            assert_eq!(
                alpha_chain_length(&odd(x)).unwrap(),
                brute_chain_length(x),
                "x = {x}"
            );
        }
    }

    #[test]
    fn table_entry_examples() {
        let e = |h, n: u64| alpha_table_entry(h, &BigUint::from(n)).unwrap();
        assert_eq!(e(1, 2), odd(11));
        assert_eq!(e(4, 2), odd(95));
        assert_eq!(e(10, 36), odd(145_407));
        assert!(alpha_table_entry(0, &BigUint::from(1u32)).is_err());
        assert!(alpha_table_entry(1, &BigUint::zero()).is_err());
    }

    #[test]
    fn table_entry_bijection_below_two_pow_sixteen() {
        let mut hits = std::collections::HashMap::new();
        for h in 1..=15u64 {
            for n in 1u64.. {
                let v = alpha_table_entry(h, &BigUint::from(n)).unwrap();
                if v.value() >= &BigUint::from(1u64 << 16) {
                    break;
                }
                assert_eq!(alpha_chain_length(&v).unwrap(), h);
                *hits.entry(v).or_insert(0) += 1;
            }
        }
        for x in (3..(1u64 << 16)).step_by(4) {
            assert_eq!(hits.get(&odd(x)), Some(&1), "x = {x}");
        }
        assert_eq!(hits.len(), 1 << 14);
    }

    #[test]
    fn chain_examples() {
        let c = alpha_chain(&odd(63)).unwrap();
        assert_eq!(c.chain, odds(&[95, 143, 215, 323, 485]));
        assert_eq!(c.exit_iterate, odd(91));
        let c = alpha_chain(&odd(3)).unwrap();
        assert_eq!((c.chain, c.exit_iterate), (odds(&[5]), odd(1)));
        let c = alpha_chain(&odd(15)).unwrap();
        assert_eq!((c.chain, c.exit_iterate), (odds(&[23, 35, 53]), odd(5)));
    }

    #[test]
    fn chain_composite_formula() {
        assert_eq!(chain_composite_constant(2), BigUint::from(5u32));
        assert_eq!(chain_composite_constant(3), BigUint::from(19u32));
        assert_eq!(chain_composite_constant(4), BigUint::from(65u32));
        assert_eq!(chain_composite_constant(5), BigUint::from(211u32));
        for x in (3..10_000u64).step_by(4) {
            let c = alpha_chain(&odd(x)).unwrap();
            let h = c.length_h;
            let composite =
                (BigUint::from(3u32).pow(h as u32) * x + chain_composite_constant(h)) >> h;
            assert_eq!(c.chain.last().unwrap().value(), &composite);
            for (i, v) in c.chain.iter().enumerate() {
                let expect_mod = if i + 1 == c.chain.len() { 1 } else { 3 };
                assert_eq!(v.rem_u32(4), expect_mod);
            }
            // growth (3/2)^h up to the additive constant
            let ratio = c.chain.last().unwrap().to_f64() / x as f64;
            let g = 1.5f64.powi(h as i32);
            assert!(
                ratio >= g * (1.0 - 1.0 / x as f64) && ratio <= g * (1.0 + 1.0 / x as f64) * 2.0
            );
        }
    }

    #[test]
    fn series_values() {
        assert_eq!(drift_series_increase(1).unwrap(), 0.75);
        let closed = 3.0 - 3.0 * 0.75f64.powi(30);
        assert!((drift_series_increase(30).unwrap() - closed).abs() < 1e-12);
        assert!((drift_series_increase(30).unwrap() - 2.99946).abs() < 1e-5);
        assert_eq!(drift_series_decrease(1).unwrap(), 0.234375);
        let d = drift_series_decrease_exact(200).unwrap();
        let (odd_lim, even_lim, total_lim) = DecreaseSeries::limits();
        assert!((to_f64(&d.odd_alpha_part) - 0.05).abs() < 1e-15);
        assert!((to_f64(&d.even_alpha_part) - 0.2).abs() < 1e-15);
        assert_eq!(&odd_lim + &even_lim, total_lim);
        assert!(drift_series_increase(0).is_err());
        assert!(drift_series_decrease(0).is_err());
    }

    #[test]
    fn series_monotone_with_geometric_error() {
        let mut prev_inc = BigRational::zero();
        let mut prev_dec = BigRational::zero();
        for n in 1..=40u64 {
            let inc = drift_series_increase_exact(n).unwrap();
            let dec = drift_series_decrease_exact(n).unwrap().total;
            assert!(inc > prev_inc && inc < drift_increase_limit());
            assert!(dec > prev_dec && dec < DecreaseSeries::limits().2);
            // exact tails: 3·(3/4)^n and (1/4)·(1/16)^n
            let inc_tail = drift_increase_limit() - &inc;
            assert_eq!(
                inc_tail,
                rational(3, 1) * num_traits::pow(rational(3, 4), n as usize)
            );
            let dec_tail = DecreaseSeries::limits().2 - &dec;
            assert_eq!(
                dec_tail,
                rational(1, 4) * num_traits::pow(rational(1, 16), n as usize)
            );
            prev_inc = inc;
            prev_dec = dec;
        }
    }

    #[test]
    fn residues_match_brute_force() {
        for a in 1..=12u32 {
            let m = 1u64 << (a + 1);
            let brute: Vec<u64> = (1..m)
                .step_by(2)
                .filter(|&x| (3 * x + 1).trailing_zeros() == a)
                .collect();
            assert_eq!(brute, vec![alpha_residue(a)], "a = {a}");
        }
        assert_eq!(alpha_residue(2), 1);
        assert_eq!(alpha_residue(3), 13);
    }

    #[test]
    fn density_small() {
        let d = empirical_alpha_density(1 << 12, 5, 1).unwrap();
        for bin in &d.bins {
            assert_eq!(bin.count, bin.predicted);
            let expect = 0.5f64.powi(bin.alpha as i32);
            assert!((bin.ratio - expect).abs() < 4.0 / d.bound as f64);
        }
        assert!(empirical_alpha_density(8, 3, 1).is_err());
        assert!(empirical_alpha_density(100, 0, 1).is_err());
    }

    #[test]
    fn drift_single_point_and_small_scan() {
        let r = empirical_drift(3, 1).unwrap();
        assert_eq!(r.samples, 1);
        assert!((r.empirical_value - 5.0 / 3.0).abs() < 1e-12);
        let r = empirical_drift(1000, 1).unwrap();
        assert!(
            (0.65..=0.85).contains(&r.empirical_value),
            "{}",
            r.empirical_value
        );
        assert!(empirical_drift(2, 1).is_err());
    }

    #[test]
    fn class_ratio_single_points() {
        assert_eq!(
            Kind::of(&syracuse_step(&odd(27)).iterate),
            Kind::Intermediary6m5
        );
        assert_eq!(
            Kind::of(&syracuse_step(&odd(9)).iterate),
            Kind::Intermediary6m1
        );
        let r = empirical_iterate_class_ratio(1, 1).unwrap();
        assert_eq!((r.count_6m1, r.count_6m5), (1, 0));
    }

    #[test]
    fn verify_small() {
        let r = verify_single(&odd(9), 100).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.iterates_checked, 6);
        assert!(verify_single(&odd(1), 100).unwrap().is_clean());
        let r = verify_theorems(2001, 2).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.trajectories, 1001);
    }

    #[test]
    fn witnesses_recorded_for_violations() {
        // a record that deliberately repeats and includes a multiple of 3
        let record = TrajectoryRecord {
            start: odd(7),
            iterates: odds(&[9, 7, 1]),
            alphas: vec![1, 1, 1],
            odd_length: 3,
            total_divisions: 3,
            peak: odd(9),
            terminal_reached: odd(7),
        };
        let mut r = TheoremReport::empty(7);
        r.absorb(&record);
        assert_eq!(r.starter_iterate_violations, 1);
        assert_eq!(r.duplicate_violations, 1);
        assert_eq!(r.duplicate_witnesses[0].value, odd(7));
        assert!(!r.is_clean());
    }
}
