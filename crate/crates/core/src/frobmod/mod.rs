//! Graded presentations, their Frobenius pullbacks, and the finite-support
//! length `gHK(M, q) = l(H^0_{R_+}(F^{e*} M))`.

mod table;

#[cfg(test)]
mod tests;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

pub use table::{AbsentRow, GhkRow, GhkTable};

use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::groebner::{Budget, ModVector, Submodule};
use crate::idealops::{
    bracket_power, colength_difference, length_by_colon, length_by_last_variable, saturate_irrelevant,
    CoordinateChange, RingSpec,
};

/// `⊕_i R(-d_i) --ψ--> ⊕_j R(-e_j) --> M --> 0`.
#[derive(Debug, Clone)]
pub struct Presentation {
    ring: Arc<RingSpec>,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
    /// `columns[i][j] = ψ_{ji}`.
    columns: Vec<Vec<Poly>>,
}

impl Presentation {
    pub fn new(ring: &Arc<RingSpec>, row_twists: Vec<i64>, col_twists: Vec<i64>, columns: Vec<Vec<Poly>>) -> Result<Self> {
        if row_twists.is_empty() {
            return Err(Error::Invalid("presentation with no rows".into()));
        }
        if columns.len() != col_twists.len() {
            return Err(Error::Invalid(format!(
                "{} column twists for {} columns",
                col_twists.len(),
                columns.len()
            )));
        }
        for (i, col) in columns.iter().enumerate() {
            if col.len() != row_twists.len() {
                return Err(Error::Invalid(format!("column {i} has {} entries, expected {}", col.len(), row_twists.len())));
            }
            for (j, f) in col.iter().enumerate() {
                if f.ring().as_ref() != ring.ring().as_ref() {
                    return Err(Error::RingMismatch);
                }
                if f.is_zero() {
                    continue;
                }
                let want = col_twists[i] - row_twists[j];
                if !f.is_homogeneous() || f.degree().map(i64::from) != Some(want) {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({j},{i}) = {f} must be homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(Presentation {
            ring: ring.clone(),
            row_twists,
            col_twists,
            columns,
        })
    }

    /// Builds a presentation from a row-major matrix of polynomial strings.
    pub fn from_rows<S: AsRef<str>>(
        ring: &Arc<RingSpec>,
        row_twists: Vec<i64>,
        col_twists: Vec<i64>,
        rows: &[Vec<S>],
    ) -> Result<Self> {
        if rows.len() != row_twists.len() {
            return Err(Error::Invalid(format!("{} rows for {} row twists", rows.len(), row_twists.len())));
        }
        let ncols = col_twists.len();
        let mut columns = vec![Vec::with_capacity(rows.len()); ncols];
        for (j, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Invalid(format!("row {j} has {} entries, expected {ncols}", row.len())));
            }
            for (i, s) in row.iter().enumerate() {
                columns[i].push(ring.parse(s.as_ref())?);
            }
        }
        Self::new(ring, row_twists, col_twists, columns)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn entry(&self, j: usize, i: usize) -> &Poly {
        &self.columns[i][j]
    }

    pub fn columns(&self) -> &[Vec<Poly>] {
        &self.columns
    }

    /// Block diagonal presentation of `M ⊕ N`.
    pub fn direct_sum(&self, other: &Presentation) -> Result<Presentation> {
        if self.ring.ring().as_ref() != other.ring.ring().as_ref() || self.ring.relations() != other.ring.relations() {
            return Err(Error::RingMismatch);
        }
        let zero = self.ring.ring().zero();
        let (m, n) = (self.row_twists.len(), other.row_twists.len());
        let mut columns = Vec::new();
        for c in &self.columns {
            let mut col = c.clone();
            col.extend(std::iter::repeat(zero.clone()).take(n));
            columns.push(col);
        }
        for c in &other.columns {
            let mut col = vec![zero.clone(); m];
            col.extend(c.iter().cloned());
            columns.push(col);
        }
        let rows = self.row_twists.iter().chain(&other.row_twists).copied().collect();
        let cols = self.col_twists.iter().chain(&other.col_twists).copied().collect();
        Presentation::new(&self.ring, rows, cols, columns)
    }

    /// Column submodule of `⊕ R(-e_j)`, relations adjoined.
    pub fn image(&self) -> Result<Submodule> {
        let gens = self
            .columns
            .iter()
            .map(|c| ModVector::new(c.clone(), self.row_twists.clone()))
            .collect::<Result<Vec<_>>>()?;
        self.ring.submodule(self.row_twists.clone(), gens)
    }

    /// The image of the pulled-back presentation after a change of coordinates.
    fn pulled_back_image(&self, change: &CoordinateChange, q: u64) -> Result<Submodule> {
        let ring = self.ring.ring();
        let twists: Vec<i64> = self.row_twists.iter().map(|e| e * q as i64).collect();
        let mut gens = Vec::with_capacity(self.columns.len());
        for col in &self.columns {
            let comps = col
                .iter()
                .map(|f| change.apply(f)?.frobenius_power(q))
                .collect::<Result<Vec<_>>>()?;
            gens.push(ModVector::new(comps, twists.clone())?);
        }
        let rels = self.ring.relations().iter().map(|f| change.apply(f)).collect::<Result<Vec<_>>>()?;
        Submodule::over_quotient(ring, twists, gens, Arc::new(rels))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 0..self.row_twists.len() {
            if j > 0 {
                write!(f, "; ")?;
            }
            for i in 0..self.columns.len() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.columns[i][j])?;
            }
        }
        write!(f, "]")
    }
}

/// `0 -> I -> R -> R/I -> 0` read as a one-row presentation.
pub fn presentation_of_quotient(ring: &Arc<RingSpec>, i: &Submodule) -> Result<Presentation> {
    if i.rank() != 1 || i.twists() != [0] {
        return Err(Error::Invalid("quotient presentation needs an ideal".into()));
    }
    let gens = i.ideal_generators();
    let cols = gens.iter().map(|g| g.degree().unwrap() as i64).collect();
    Presentation::new(ring, vec![0], cols, gens.into_iter().map(|g| vec![g]).collect())
}

/// Entrywise `q`-th powers, all twists scaled by `q = p^e`.
pub fn frobenius_pullback(p: &Presentation, e: u32) -> Result<Presentation> {
    let q = p.ring.characteristic().checked_pow(e).ok_or(Error::ExponentOverflow(e as u64))?;
    let columns = p
        .columns
        .iter()
        .map(|c| c.iter().map(|f| f.frobenius_power(q)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(
        &p.ring,
        p.row_twists.iter().map(|t| t * q as i64).collect(),
        p.col_twists.iter().map(|t| t * q as i64).collect(),
        columns,
    )
}

pub(crate) fn power(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::ExponentOverflow(e as u64))
}

/// `gHK(M, p^e)`.
pub fn ghk_value(p: &Presentation, e: u32) -> Result<u64> {
    ghk_value_with(p, e, &Budget::unlimited())
}

/// Coordinate changes in the order they should be tried: the first one that
/// detects `H^0` of `M` itself goes first.
fn ordered_candidates(p: &Presentation, budget: &Budget) -> Result<Vec<CoordinateChange>> {
    let mut cands = CoordinateChange::candidates(p.ring.ring());
    for (k, c) in cands.iter().enumerate() {
        if length_by_last_variable(&p.pulled_back_image(c, 1)?, budget)?.is_some() {
            cands[..=k].rotate_right(1);
            break;
        }
    }
    Ok(cands)
}

pub fn ghk_value_with(p: &Presentation, e: u32, budget: &Budget) -> Result<u64> {
    p.ring.require_dimension_two()?;
    let q = power(p.ring.characteristic(), e)?;
    let cands = ordered_candidates(p, budget)?;
    ghk_value_ordered(p, q, &cands, budget)
}

fn ghk_value_ordered(p: &Presentation, q: u64, cands: &[CoordinateChange], budget: &Budget) -> Result<u64> {
    let n = p.ring.nvars();
    for c in cands {
        if let Some(len) = length_by_last_variable(&p.pulled_back_image(c, q)?, budget)? {
            return Ok(len);
        }
    }
    let identity = cands.iter().find(|c| c.is_identity(n)).expect("identity is a candidate");
    length_by_colon(&p.pulled_back_image(identity, q)?, budget)
}

/// `gHK(M, p^e)` for `e = 1..=e_max`; rows that exceed `budget` are reported absent.
pub fn ghk_table(p: &Presentation, e_max: u32) -> Result<GhkTable> {
    ghk_table_with(p, 1..=e_max, &Budget::unlimited())
}

pub fn ghk_table_with(p: &Presentation, exponents: std::ops::RangeInclusive<u32>, budget: &Budget) -> Result<GhkTable> {
    p.ring.require_dimension_two()?;
    if exponents.is_empty() {
        return Err(Error::Invalid("empty exponent range".into()));
    }
    let cands = ordered_candidates(p, budget)?;
    let char_p = p.ring.characteristic();
    let results: Vec<(u32, u64, Result<u64>)> = exponents
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|e| match power(char_p, e) {
            Ok(q) => (e, q, ghk_value_ordered(p, q, &cands, budget)),
            Err(err) => (e, 0, Err(err)),
        })
        .collect();
    let mut table = GhkTable::new(char_p);
    table.ring = p.ring.to_string();
    table.module = format!("coker {p}");
    for (e, q, r) in results {
        match r {
            Ok(length) => table.rows.push(GhkRow { e, q, length }),
            Err(Error::BudgetExceeded(reason)) => table.absent.push(AbsentRow { e, q, reason }),
            Err(err) => return Err(err),
        }
    }
    Ok(table)
}

/// Classical `l(R/I^[q])` for an `R_+`-primary ideal `I`.
pub fn hk_value(i: &Submodule, e: u32) -> Result<u64> {
    if i.rank() != 1 {
        return Err(Error::Invalid("Hilbert-Kunz function of a submodule of rank > 1".into()));
    }
    if !saturate_irrelevant(i)?.groebner_basis()?.contains_unit() {
        return Err(Error::NotPrimary);
    }
    let q = power(i.ring().characteristic() as u64, e)?;
    let iq = bracket_power(i, q)?;
    let unit = iq.with_generators(vec![ModVector::from_poly(i.ring().one())])?;
    colength_difference(&iq, &unit)
}
