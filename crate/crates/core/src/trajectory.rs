//! Odd-only trajectories, built either by iterating the Syracuse step or by
//! reading successive iterates off the predecessor tables.

use std::io::Write;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{syracuse_step, OddInt};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrajectoryRecord {
    pub start: OddInt,
    /// Odd iterates after `start`, ending with 1.
    pub iterates: Vec<OddInt>,
    pub alphas: Vec<u64>,
    pub odd_length: u64,
    pub total_divisions: u64,
    pub peak: OddInt,
    /// Last value before 1 (the start itself for 1 and for terminal starts).
    pub terminal_reached: OddInt,
}

impl TrajectoryRecord {
    fn from_steps(start: OddInt, iterates: Vec<OddInt>, alphas: Vec<u64>) -> Self {
        let peak = iterates.iter().max().expect("at least one iterate").clone();
        let terminal_reached = if iterates.len() >= 2 {
            iterates[iterates.len() - 2].clone()
        } else {
            start.clone()
        };
        TrajectoryRecord {
            odd_length: iterates.len() as u64,
            total_divisions: alphas.iter().sum(),
            peak,
            terminal_reached,
            start,
            iterates,
            alphas,
        }
    }

    /// `[start] + iterates`, with the 1 -> 1 fixed point collapsed for start 1.
    pub fn path(&self) -> impl Iterator<Item = &OddInt> {
        let skip = usize::from(self.start.is_one());
        std::iter::once(&self.start).chain(self.iterates.iter().skip(skip))
    }
}

fn budget_error(start: &OddInt, max_steps: u64) -> Error {
    Error::MaxStepsExceeded {
        start: start.value().clone(),
        max_steps,
    }
}

fn check_budget(max_steps: u64) -> Result<()> {
    if max_steps == 0 {
        Err(Error::param("max_steps", "must be at least 1"))
    } else {
        Ok(())
    }
}

pub fn trajectory_direct(x: &OddInt, max_steps: u64) -> Result<TrajectoryRecord> {
    check_budget(max_steps)?;
    let mut iterates = Vec::new();
    let mut alphas = Vec::new();
    let mut current = x.clone();
    loop {
        if iterates.len() as u64 == max_steps {
            return Err(budget_error(x, max_steps));
        }
        let step = syracuse_step(&current);
        alphas.push(step.alpha);
        let done = step.iterate.is_one();
        iterates.push(step.iterate.clone());
        if done {
            break;
        }
        current = step.iterate;
    }
    Ok(TrajectoryRecord::from_steps(x.clone(), iterates, alphas))
}

/// Table-lookup route. `x ≡ 3 (mod 4)` sits in the first column of table B
/// and maps to `6⌊x/4⌋ + 5`; `x ≡ 1 (mod 8)` sits in the first column of
/// table A and maps to `6⌊x/8⌋ + 1`; anything else is moved one column left
/// by `x -> (x-1)/4` without emitting. The `3x + 1` formula is never used.
pub fn trajectory_lookup(x: &OddInt, max_steps: u64) -> Result<TrajectoryRecord> {
    check_budget(max_steps)?;
    let mut iterates = Vec::new();
    let mut alphas = Vec::new();
    let mut current = x.value().clone();
    let mut strips = 0u64;
    loop {
        if iterates.len() as u64 == max_steps {
            return Err(budget_error(x, max_steps));
        }
        let low = current.iter_u64_digits().next().unwrap_or(0);
        let (next, alpha) = if low & 3 == 3 {
            ((&current >> 2u32) * 6u32 + 5u32, 2 * strips + 1)
        } else if low & 7 == 1 {
            ((&current >> 3u32) * 6u32 + 1u32, 2 * strips + 2)
        } else {
            current >>= 2u32;
            strips += 1;
            continue;
        };
        let next = OddInt::new_unchecked(next);
        let done = next.is_one();
        iterates.push(next.clone());
        alphas.push(alpha);
        if done {
            break;
        }
        current = next.into_inner();
        strips = 0;
    }
    Ok(TrajectoryRecord::from_steps(x.clone(), iterates, alphas))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub min: u64,
    pub max: u64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeakSummary {
    pub min: OddInt,
    pub max: OddInt,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryStats {
    pub count: u64,
    pub odd_length: Summary,
    pub total_divisions: Summary,
    pub peak: PeakSummary,
}

/// Exact running totals; merging is commutative and associative.
#[derive(Debug, Clone, Default)]
pub struct StatsAccumulator {
    count: u64,
    length: Option<(u64, u64)>,
    length_sum: u128,
    divisions: Option<(u64, u64)>,
    divisions_sum: u128,
    peak: Option<(OddInt, OddInt)>,
    peak_sum: BigUint,
}

fn widen(range: Option<(u64, u64)>, lo: u64, hi: u64) -> Option<(u64, u64)> {
    Some(match range {
        None => (lo, hi),
        Some((a, b)) => (a.min(lo), b.max(hi)),
    })
}

impl StatsAccumulator {
    pub fn push(&mut self, record: &TrajectoryRecord) {
        self.count += 1;
        self.length = widen(self.length, record.odd_length, record.odd_length);
        self.length_sum += u128::from(record.odd_length);
        self.divisions = widen(
            self.divisions,
            record.total_divisions,
            record.total_divisions,
        );
        self.divisions_sum += u128::from(record.total_divisions);
        self.merge_peak(&record.peak, &record.peak);
        self.peak_sum += record.peak.value();
    }

    fn merge_peak(&mut self, lo: &OddInt, hi: &OddInt) {
        self.peak = Some(match self.peak.take() {
            None => (lo.clone(), hi.clone()),
            Some((a, b)) => (a.min(lo.clone()), b.max(hi.clone())),
        });
    }

    pub fn merge(mut self, other: StatsAccumulator) -> StatsAccumulator {
        self.count += other.count;
        if let Some((lo, hi)) = other.length {
            self.length = widen(self.length, lo, hi);
        }
        self.length_sum += other.length_sum;
        if let Some((lo, hi)) = other.divisions {
            self.divisions = widen(self.divisions, lo, hi);
        }
        self.divisions_sum += other.divisions_sum;
        if let Some((lo, hi)) = &other.peak {
            self.merge_peak(lo, hi);
        }
        self.peak_sum += other.peak_sum;
        self
    }

    pub fn finish(self) -> Result<TrajectoryStats> {
        let (Some(length), Some(divisions), Some(peak)) = (self.length, self.divisions, self.peak)
        else {
            return Err(Error::param(
                "records",
                "at least one trajectory is required",
            ));
        };
        let n = self.count as f64;
        let peak_mean = if self.peak_sum.is_zero() {
            0.0
        } else {
            self.peak_sum.to_f64().unwrap_or(f64::INFINITY) / n
        };
        Ok(TrajectoryStats {
            count: self.count,
            odd_length: Summary {
                min: length.0,
                max: length.1,
                mean: self.length_sum as f64 / n,
            },
            total_divisions: Summary {
                min: divisions.0,
                max: divisions.1,
                mean: self.divisions_sum as f64 / n,
            },
            peak: PeakSummary {
                min: peak.0,
                max: peak.1,
                mean: peak_mean,
            },
        })
    }
}

pub fn trajectory_stats(records: &[TrajectoryRecord]) -> Result<TrajectoryStats> {
    let mut acc = StatsAccumulator::default();
    for record in records {
        acc.push(record);
    }
    acc.finish()
}

impl TrajectoryStats {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["metric", "count", "min", "max", "mean"])
            .map_err(io)?;
        let count = self.count.to_string();
        for (name, s) in [
            ("odd_length", &self.odd_length),
            ("total_divisions", &self.total_divisions),
        ] {
            w.write_record([
                name,
                &count,
                &s.min.to_string(),
                &s.max.to_string(),
                &s.mean.to_string(),
            ])
            .map_err(io)?;
        }
        w.write_record([
            "peak",
            &count,
            &self.peak.min.to_string(),
            &self.peak.max.to_string(),
            &self.peak.mean.to_string(),
        ])
        .map_err(io)?;
        w.flush()?;
        Ok(())
    }
}
