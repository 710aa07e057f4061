//! Multiplicity estimates, remainder analysis and prime sweeps built on
//! computed tables of `gHK(M, q)`.


use std::sync::Arc;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{abs_diff, rat_int, serde_rat, serde_rat_opt, PrimeField, Rat};
use crate::error::{Error, Result};
use crate::frobmod::{ghk_table_with, presentation_of_quotient, GhkTable, Presentation};
use crate::groebner::Budget;
use crate::idealops::RingSpec;

/// Two-point multiplicity estimate with its error bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Estimate {
    #[serde(with = "serde_rat")]
    pub estimate: Rat,
    #[serde(with = "serde_rat")]
    pub error_bound: Rat,
    /// The bound `G` on `|γ|` the error bound was computed from.
    #[serde(with = "serde_rat")]
    pub gamma_bound: Rat,
}

fn q_squared(q: u64) -> Rat {
    let q = rat_int(q as i64);
    &q * &q
}

/// `(L_2 - L_1)/(q_2^2 - q_1^2)` from the two largest exponents.
pub fn estimate_multiplicity(t: &GhkTable) -> Result<Estimate> {
    estimate_multiplicity_with(t, None)
}

/// As [`estimate_multiplicity`] with a caller-supplied bound on `|γ|`.
pub fn estimate_multiplicity_with(t: &GhkTable, gamma_bound: Option<&Rat>) -> Result<Estimate> {
    let n = t.rows.len();
    if n < 2 {
        return Err(Error::Invalid(format!("need at least 2 table rows, got {n}")));
    }
    let (r1, r2) = (&t.rows[n - 2], &t.rows[n - 1]);
    let span = q_squared(r2.q) - q_squared(r1.q);
    let estimate = (rat_int(r2.length as i64) - rat_int(r1.length as i64)) / &span;
    let g = match gamma_bound {
        Some(g) => g.clone(),
        None => t
            .rows
            .iter()
            .map(|r| abs_diff(&rat_int(r.length as i64), &(&estimate * q_squared(r.q))))
            .max()
            .unwrap(),
    };
    Ok(Estimate {
        error_bound: rat_int(2) * &g / &span,
        estimate,
        gamma_bound: g,
    })
}

/// Whether `γ` repeats over the exponents computed so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Periodicity {
    Periodic { period: usize },
    AperiodicSoFar,
    InsufficientData,
}

/// Fewest contiguous exponents needed before a periodicity verdict is given.
pub const MIN_PERIODICITY_ROWS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaEntry {
    pub q: u64,
    #[serde(with = "serde_rat")]
    pub gamma: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FitReport {
    #[serde(with = "serde_rat")]
    pub e_exact: Rat,
    #[serde(with = "serde_rat_opt")]
    pub estimate: Option<Rat>,
    #[serde(with = "serde_rat_opt")]
    pub error_bound: Option<Rat>,
    pub gamma: Vec<GammaEntry>,
    #[serde(with = "serde_rat")]
    pub max_abs_gamma: Rat,
    pub periodicity: Periodicity,
}

/// `γ(q) = L - e q²` for every row, exactly.
pub fn gamma_analysis(t: &GhkTable, e_exact: &Rat) -> FitReport {
    let gamma: Vec<GammaEntry> = t
        .rows
        .iter()
        .map(|r| GammaEntry {
            q: r.q,
            gamma: rat_int(r.length as i64) - e_exact * q_squared(r.q),
        })
        .collect();
    let max_abs_gamma = gamma.iter().map(|g| g.gamma.abs()).max().unwrap_or_else(|| rat_int(0));
    let contiguous = t.rows.windows(2).all(|w| w[1].e == w[0].e + 1);
    let periodicity = if !contiguous || gamma.len() < MIN_PERIODICITY_ROWS {
        Periodicity::InsufficientData
    } else {
        let n = gamma.len();
        (1..n)
            .filter(|k| n % k == 0 && *k < n)
            .find(|&k| (0..n - k).all(|i| gamma[i].gamma == gamma[i + k].gamma))
            .map_or(Periodicity::AperiodicSoFar, |period| Periodicity::Periodic { period })
    };
    let est = estimate_multiplicity(t).ok();
    FitReport {
        e_exact: e_exact.clone(),
        estimate: est.as_ref().map(|e| e.estimate.clone()),
        error_bound: est.map(|e| e.error_bound),
        gamma,
        max_abs_gamma,
        periodicity,
    }
}

/// Module of a sweep, written with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyModule {
    Quotient(Vec<String>),
    Presentation {
        row_twists: Vec<i64>,
        col_twists: Vec<i64>,
        rows: Vec<Vec<String>>,
    },
}

/// A ring and module defined over the integers, reduced modulo each prime of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub variables: Vec<String>,
    pub relations: Vec<String>,
    pub module: FamilyModule,
    /// Primes excluded up front, e.g. those dividing a denominator.
    pub bad_primes: Vec<u64>,
}

impl Family {
    pub fn reduce(&self, p: u64) -> Result<(Arc<RingSpec>, Presentation)> {
        let ring = Arc::new(RingSpec::new(p, &self.variables, &self.relations)?);
        let pres = match &self.module {
            FamilyModule::Quotient(gens) => presentation_of_quotient(&ring, &ring.ideal_from_strs(gens)?)?,
            FamilyModule::Presentation {
                row_twists,
                col_twists,
                rows,
            } => Presentation::from_rows(&ring, row_twists.clone(), col_twists.clone(), rows)?,
        };
        Ok((ring, pres))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub p: u64,
    pub validated: bool,
    /// Why the prime was skipped, if it was.
    pub note: Option<String>,
    #[serde(with = "serde_rat_opt")]
    pub estimate: Option<Rat>,
    #[serde(with = "serde_rat_opt")]
    pub error_bound: Option<Rat>,
    pub table: Option<GhkTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Largest distance between estimates over the larger half of the validated primes.
    #[serde(with = "serde_rat_opt")]
    pub top_half_spread: Option<Rat>,
}

fn skipped(p: u64, note: String) -> SweepRow {
    SweepRow {
        p,
        validated: false,
        note: Some(note),
        estimate: None,
        error_bound: None,
        table: None,
    }
}

fn sweep_one(family: &Family, p: u64, e_max: u32, budget: &Budget) -> Result<SweepRow> {
    if family.bad_primes.contains(&p) {
        return Ok(skipped(p, "declared bad prime".into()));
    }
    let (ring, pres) = family.reduce(p)?;
    let info = ring.info()?;
    if info.dimension != 2 {
        return Ok(skipped(p, format!("ring has dimension {}", info.dimension)));
    }
    let smooth = ring.smoothness()?;
    if !smooth.smooth {
        return Ok(skipped(p, "Proj of the reduction is not smooth".into()));
    }
    let table = ghk_table_with(&pres, 1..=e_max, budget)?;
    let est = estimate_multiplicity(&table).ok();
    Ok(SweepRow {
        p,
        validated: true,
        note: smooth.warning,
        estimate: est.as_ref().map(|e| e.estimate.clone()),
        error_bound: est.map(|e| e.error_bound),
        table: Some(table),
    })
}

/// Computes `gHK` tables of the reductions of `family` modulo each prime.
pub fn prime_sweep(family: &Family, primes: &[u64], e_max: u32, budget: &Budget) -> Result<SweepReport> {
    if primes.is_empty() {
        return Err(Error::Invalid("empty prime list".into()));
    }
    if e_max == 0 {
        return Err(Error::Invalid("e_max must be at least 1".into()));
    }
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    for &p in &primes {
        PrimeField::new(p)?;
    }
    let rows = primes
        .par_iter()
        .map(|&p| sweep_one(family, p, e_max, budget))
        .collect::<Result<Vec<_>>>()?;
    let estimates: Vec<&Rat> = rows.iter().filter_map(|r| r.estimate.as_ref()).collect();
    let top = &estimates[estimates.len() / 2..];
    let top_half_spread = match (top.iter().min(), top.iter().max()) {
        (Some(lo), Some(hi)) => Some(*hi - *lo),
        _ => None,
    };
    Ok(SweepReport { rows, top_half_spread })
}
