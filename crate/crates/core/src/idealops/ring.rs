use std::fmt;
use std::sync::{Arc, OnceLock};

use super::hilbert_series;
use crate::arith::{parse_poly, Poly, PolyMatrix, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::{ModVector, Submodule};

/// Dimension and degree of a standard graded ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingInfo {
    /// Krull dimension of `R`.
    pub dimension: usize,
    /// Multiplicity of `R`; the degree of `Proj R` when `dimension = 2`.
    pub degree: i128,
}

/// Outcome of the Jacobian criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessVerdict {
    pub smooth: bool,
    /// Krull dimension of `S/J`, `J` the Jacobian ideal plus the relations.
    pub singular_locus_dimension: usize,
    pub hypersurface: bool,
    pub warning: Option<String>,
}

/// A standard graded ring `F_p[x_1..x_n]/(relations)`.
#[derive(Debug)]
pub struct RingSpec {
    ring: Arc<PolyRing>,
    relations: Arc<Vec<Poly>>,
    info: OnceLock<RingInfo>,
    smooth: OnceLock<SmoothnessVerdict>,
}

impl Clone for RingSpec {
    fn clone(&self) -> Self {
        RingSpec {
            ring: self.ring.clone(),
            relations: self.relations.clone(),
            info: self.info.clone(),
            smooth: self.smooth.clone(),
        }
    }
}

impl RingSpec {
    pub fn new<S: AsRef<str>, T: AsRef<str>>(p: u64, vars: &[S], relations: &[T]) -> Result<Self> {
        let ring = PolyRing::new(p, vars)?;
        let rels = relations
            .iter()
            .map(|r| parse_poly(r.as_ref(), &ring))
            .collect::<Result<Vec<_>>>()?;
        Self::from_polys(&ring, rels)
    }

    pub fn polynomial_ring<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Self> {
        Self::new::<S, &str>(p, vars, &[])
    }

    pub fn from_polys(ring: &Arc<PolyRing>, relations: Vec<Poly>) -> Result<Self> {
        for f in &relations {
            if f.ring().as_ref() != ring.as_ref() {
                return Err(Error::RingMismatch);
            }
            if !f.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!("relation {f}")));
            }
        }
        Ok(RingSpec {
            ring: ring.clone(),
            relations: Arc::new(relations.into_iter().filter(|f| !f.is_zero()).collect()),
            info: OnceLock::new(),
            smooth: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &Arc<Vec<Poly>> {
        &self.relations
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic() as u64
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        parse_poly(text, &self.ring)
    }

    pub fn ideal(&self, gens: Vec<Poly>) -> Result<Submodule> {
        Submodule::ideal_over_quotient(&self.ring, gens, self.relations.clone())
    }

    pub fn ideal_from_strs<S: AsRef<str>>(&self, gens: &[S]) -> Result<Submodule> {
        let polys = gens.iter().map(|g| self.parse(g.as_ref())).collect::<Result<Vec<_>>>()?;
        self.ideal(polys)
    }

    pub fn submodule(&self, twists: Vec<i64>, gens: Vec<ModVector>) -> Result<Submodule> {
        Submodule::over_quotient(&self.ring, twists, gens, self.relations.clone())
    }

    pub fn unit_ideal(&self) -> Submodule {
        self.ideal(vec![self.ring.one()]).expect("unit ideal")
    }

    /// The homogeneous maximal ideal `R_+`.
    pub fn irrelevant_ideal(&self) -> Submodule {
        let vars = (0..self.nvars()).map(|i| self.ring.var(i)).collect();
        self.ideal(vars).expect("irrelevant ideal")
    }

    /// Dimension and degree, computed once from the Hilbert series of `R`.
    pub fn info(&self) -> Result<RingInfo> {
        if let Some(i) = self.info.get() {
            return Ok(*i);
        }
        let zero = self.ideal(Vec::new())?;
        let hs = hilbert_series(&zero)?;
        let info = RingInfo {
            dimension: hs.dimension(),
            degree: hs.multiplicity(),
        };
        let _ = self.info.set(info);
        Ok(info)
    }

    /// Fails unless `R` is two-dimensional.
    pub fn require_dimension_two(&self) -> Result<()> {
        match self.info()?.dimension {
            2 => Ok(()),
            d => Err(Error::WrongDimension(d)),
        }
    }

    /// Jacobian criterion for `Proj R`: smooth iff the singular locus is supported at `R_+`.
    pub fn smoothness(&self) -> Result<SmoothnessVerdict> {
        if let Some(v) = self.smooth.get() {
            return Ok(v.clone());
        }
        let n = self.nvars();
        let dim = self.info()?.dimension;
        let codim = n - dim;
        let hypersurface = self.relations.len() == 1;
        let mut gens: Vec<Poly> = self.relations.to_vec();
        if codim > 0 {
            let jac = PolyMatrix::jacobian(&self.ring, &self.relations);
            gens.extend(jac.minors(codim).into_iter().filter(|m| !m.is_zero()));
        }
        let verdict = if codim == 0 {
            SmoothnessVerdict {
                smooth: true,
                singular_locus_dimension: 0,
                hypersurface: false,
                warning: None,
            }
        } else {
            let jideal = Submodule::ideal(&self.ring, gens)?;
            let d = hilbert_series(&jideal)?.dimension();
            SmoothnessVerdict {
                smooth: d == 0,
                singular_locus_dimension: d,
                hypersurface,
                warning: (!hypersurface).then(|| {
                    "Jacobian criterion applied to a ring that is not a hypersurface; \
                     the verdict assumes a complete intersection"
                        .to_string()
                }),
            }
        };
        let _ = self.smooth.set(verdict.clone());
        Ok(verdict)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.characteristic(), self.ring.var_names().join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}
