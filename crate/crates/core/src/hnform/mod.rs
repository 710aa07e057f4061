//! Hilbert-Kunz slopes and closed-form (generalized) Hilbert-Kunz
//! multiplicities from Harder-Narasimhan data of vector bundles on a curve.
//!
//! The filtrations themselves are never computed; they are inputs, either
//! given explicitly or built from the bookkeeping constructors here.


use serde::{Deserialize, Serialize};

use crate::arith::{rat, rat_int, serde_rat, Rat};
use crate::error::{Error, Result};

/// One quotient `S_k/S_{k-1}` of a strong Harder-Narasimhan filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnQuotient {
    pub rank: u32,
    /// Normalized slope `μ̄_k`.
    #[serde(with = "serde_rat")]
    pub slope: Rat,
}

/// Ranks and normalized slopes of a strong HN filtration, slopes strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HnData {
    quotients: Vec<HnQuotient>,
    deg_y: u64,
}

impl HnData {
    pub fn new(quotients: Vec<HnQuotient>, deg_y: u64) -> Result<Self> {
        if deg_y == 0 {
            return Err(Error::Invalid("degY must be positive".into()));
        }
        for (k, q) in quotients.iter().enumerate() {
            if q.rank == 0 {
                return Err(Error::Invalid(format!("quotient {k} has rank 0")));
            }
            if k > 0 && quotients[k - 1].slope <= q.slope {
                return Err(Error::Invalid(format!(
                    "slopes must strictly decrease, got {} then {}",
                    quotients[k - 1].slope,
                    q.slope
                )));
            }
        }
        Ok(HnData { quotients, deg_y })
    }

    /// As [`HnData::new`], also checking `Σ r_k μ̄_k = total_degree`.
    pub fn with_total_degree(quotients: Vec<HnQuotient>, deg_y: u64, total_degree: &Rat) -> Result<Self> {
        let h = Self::new(quotients, deg_y)?;
        let sum = h.weighted_slope_sum();
        if &sum != total_degree {
            return Err(Error::Invalid(format!("ranks times slopes sum to {sum}, expected {total_degree}")));
        }
        Ok(h)
    }

    /// Convenience constructor from `(rank, slope)` pairs.
    pub fn from_pairs(pairs: &[(u32, Rat)], deg_y: u64) -> Result<Self> {
        let qs = pairs
            .iter()
            .map(|(rank, slope)| HnQuotient { rank: *rank, slope: slope.clone() })
            .collect();
        Self::new(qs, deg_y)
    }

    /// The zero sheaf.
    pub fn empty(deg_y: u64) -> Result<Self> {
        Self::new(Vec::new(), deg_y)
    }

    pub fn quotients(&self) -> &[HnQuotient] {
        &self.quotients
    }

    pub fn deg_y(&self) -> u64 {
        self.deg_y
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// `ν_k = -μ̄_k / deg Y`.
    pub fn nu(&self, k: usize) -> Rat {
        -self.quotients[k].slope.clone() / rat_int(self.deg_y as i64)
    }

    /// `Σ r_k μ̄_k`, the degree of the sheaf.
    pub fn weighted_slope_sum(&self) -> Rat {
        self.quotients
            .iter()
            .map(|q| rat_int(q.rank as i64) * &q.slope)
            .sum()
    }
}

/// `μ_HK = Σ r_k μ̄_k²`.
pub fn hk_slope(h: &HnData) -> Rat {
    h.quotients
        .iter()
        .map(|q| rat_int(q.rank as i64) * &q.slope * &q.slope)
        .sum()
}

/// HN data of `⊕ O_Y(-d_i)^{r_i}` from `(d_i, r_i)` pairs.
pub fn hn_sum_line_bundles(pairs: &[(i64, u32)], deg_y: u64) -> Result<HnData> {
    let mut sorted = pairs.to_vec();
    sorted.sort_by_key(|&(d, _)| d);
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Invalid(format!("twist {} listed twice", w[0].0)));
    }
    let qs = sorted
        .into_iter()
        .map(|(d, r)| HnQuotient {
            rank: r,
            slope: rat_int(-d * deg_y as i64),
        })
        .collect();
    HnData::new(qs, deg_y)
}

/// Rank-one syzygy bundle of two generators of degrees `a, b` whose ideal sheaf has degree `d`.
pub fn hn_rank1_syzygy(a: i64, b: i64, d: i64, deg_y: u64) -> Result<HnData> {
    if a < 1 || b < 1 || d > 0 {
        return Err(Error::Invalid(format!("need a, b >= 1 and d <= 0, got a={a} b={b} d={d}")));
    }
    HnData::new(
        vec![HnQuotient {
            rank: 1,
            slope: rat_int(deg_y as i64 * (-a - b) - d),
        }],
        deg_y,
    )
}

/// A closed-form value together with the sanity check it must satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    #[serde(with = "serde_rat")]
    pub value: Rat,
    /// `false` when the value violates the bound every valid input satisfies.
    pub valid: bool,
}

impl FormulaValue {
    /// The value, or an error naming the violated bound.
    pub fn checked(self) -> Result<Rat> {
        if self.valid {
            Ok(self.value)
        } else {
            Err(Error::Invalid(format!(
                "input HN data inconsistent with hypotheses (value {})",
                crate::arith::format_rat(&self.value)
            )))
        }
    }
}

fn twist_square_sum(twists: &[i64], deg_y: u64) -> Rat {
    let s: i64 = twists.iter().map(|d| d * d).sum();
    rat_int(s) * rat_int((deg_y * deg_y) as i64)
}

fn check_deg(deg_y: u64, others: &[&HnData]) -> Result<Rat> {
    if deg_y == 0 {
        return Err(Error::Invalid("degY must be positive".into()));
    }
    if let Some(h) = others.iter().find(|h| h.deg_y != deg_y) {
        return Err(Error::Invalid(format!("HN data for degY {} used with degY {deg_y}", h.deg_y)));
    }
    Ok(rat_int(2 * deg_y as i64))
}

/// `e_gHK(M) = (μ_HK(S) - (deg Y)² Σ d_i² + μ_HK(Q)) / (2 deg Y)`.
pub fn e_ghk_closed_form(syz: &HnData, source_twists: &[i64], q: &HnData, deg_y: u64) -> Result<FormulaValue> {
    let two_deg = check_deg(deg_y, &[syz, q])?;
    let value = (hk_slope(syz) - twist_square_sum(source_twists, deg_y) + hk_slope(q)) / two_deg;
    let valid = value >= rat_int(0);
    Ok(FormulaValue { value, valid })
}

/// `e_HK(I) = (μ_HK(Syz) - (deg Y)² Σ d_i²) / (2 deg Y)` for an `R_+`-primary ideal.
pub fn e_hk_closed_form(syz: &HnData, degrees: &[i64], deg_y: u64) -> Result<FormulaValue> {
    let two_deg = check_deg(deg_y, &[syz])?;
    let value = (hk_slope(syz) - twist_square_sum(degrees, deg_y)) / two_deg;
    let valid = value >= rat_int(1);
    Ok(FormulaValue { value, valid })
}

/// `e_gHK(R/I)` for an ideal whose sheaf has degree `d`: the general formula with `μ_HK(Q) = d²`.
pub fn e_ghk_quotient(syz: &HnData, degrees: &[i64], d: i64, deg_y: u64) -> Result<FormulaValue> {
    let two_deg = check_deg(deg_y, &[syz])?;
    let value = (hk_slope(syz) - twist_square_sum(degrees, deg_y) + rat_int(d * d)) / two_deg;
    let valid = value >= rat_int(0);
    Ok(FormulaValue { value, valid })
}

/// `d²/deg Y + ab deg Y + d(a+b)` for `R/(f, g)` with a rank-one syzygy bundle.
pub fn e_ghk_two_generated(a: i64, b: i64, d: i64, deg_y: u64) -> Result<Rat> {
    if a < 1 || b < 1 || d > 0 || deg_y == 0 {
        return Err(Error::Invalid(format!(
            "need a, b >= 1, d <= 0 and degY >= 1, got a={a} b={b} d={d} degY={deg_y}"
        )));
    }
    let dy = deg_y as i64;
    Ok(rat(d * d, dy) + rat_int(a * b * dy) + rat_int(d * (a + b)))
}

/// `(deg Y - 1)² / deg Y`, the value for the ideal of a rational point.
pub fn e_ghk_point(deg_y: u64) -> Result<Rat> {
    if deg_y == 0 {
        return Err(Error::Invalid("degY must be positive".into()));
    }
    let dy = deg_y as i64;
    Ok(rat((dy - 1) * (dy - 1), dy))
}
