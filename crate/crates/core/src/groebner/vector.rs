use std::cmp::Ordering;
use std::sync::Arc;

use crate::arith::{ModuleOrder, Monomial, MonomialOrder, Poly, PolyRing, PositionRule, PrimeField};
use crate::error::{Error, Result};

/// Element of a twisted free module `⊕_j S(-e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModVector {
    components: Vec<Poly>,
    twists: Vec<i64>,
}

impl ModVector {
    pub fn new(components: Vec<Poly>, twists: Vec<i64>) -> Result<Self> {
        if components.is_empty() || components.len() != twists.len() {
            return Err(Error::AmbientMismatch);
        }
        let ring = components[0].ring().clone();
        if components.iter().any(|c| !c.ring().as_ref().eq(ring.as_ref())) {
            return Err(Error::RingMismatch);
        }
        Ok(ModVector { components, twists })
    }

    /// A polynomial as a vector of the rank-one free module `S`.
    pub fn from_poly(p: Poly) -> Self {
        ModVector {
            components: vec![p],
            twists: vec![0],
        }
    }

    pub fn zero(ring: &Arc<PolyRing>, twists: &[i64]) -> Self {
        ModVector {
            components: twists.iter().map(|_| ring.zero()).collect(),
            twists: twists.to_vec(),
        }
    }

    /// `f * e_j`.
    pub fn basis_multiple(f: Poly, j: usize, twists: &[i64]) -> Self {
        let ring = f.ring().clone();
        let mut components: Vec<Poly> = twists.iter().map(|_| ring.zero()).collect();
        components[j] = f;
        ModVector {
            components,
            twists: twists.to_vec(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.components[0].ring()
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &Poly {
        &self.components[j]
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn into_components(self) -> Vec<Poly> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut deg = None;
        for (c, e) in self.components.iter().zip(&self.twists) {
            if c.is_zero() {
                continue;
            }
            let Some(d) = c.degree() else { return false };
            let w = d as i64 + e;
            match deg {
                None => deg = Some(w),
                Some(w0) if w0 != w => return false,
                _ => {}
            }
        }
        true
    }

    /// Twisted degree `deg(v_j) + e_j` of a nonzero homogeneous vector.
    pub fn degree(&self) -> Option<i64> {
        if !self.is_homogeneous() {
            return None;
        }
        self.components
            .iter()
            .zip(&self.twists)
            .find(|(c, _)| !c.is_zero())
            .map(|(c, e)| c.degree().unwrap() as i64 + e)
    }

    pub fn same_ambient(&self, other: &ModVector) -> bool {
        self.twists == other.twists && self.ring().as_ref() == other.ring().as_ref()
    }

    pub fn try_add(&self, other: &ModVector) -> Result<ModVector> {
        if !self.same_ambient(other) {
            return Err(Error::AmbientMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(ModVector {
            components,
            twists: self.twists.clone(),
        })
    }

    pub fn try_sub(&self, other: &ModVector) -> Result<ModVector> {
        self.try_add(&other.scale_poly(&other.ring().constant(-1))?)
    }

    pub fn scale_poly(&self, f: &Poly) -> Result<ModVector> {
        let components = self
            .components
            .iter()
            .map(|c| c.try_mul(f))
            .collect::<Result<_>>()?;
        Ok(ModVector {
            components,
            twists: self.twists.clone(),
        })
    }

    /// Same components, different twists (used for shifted copies in block modules).
    pub fn with_twists(&self, twists: Vec<i64>) -> ModVector {
        assert_eq!(twists.len(), self.components.len());
        ModVector {
            components: self.components.clone(),
            twists,
        }
    }

    pub fn map_components(&self, mut f: impl FnMut(&Poly) -> Result<Poly>) -> Result<ModVector> {
        let components = self.components.iter().map(&mut f).collect::<Result<_>>()?;
        Ok(ModVector {
            components,
            twists: self.twists.clone(),
        })
    }
}

impl std::fmt::Display for ModVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.components.len() == 1 {
            return write!(f, "{}", self.components[0]);
        }
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A module term with its coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coeff: u32,
}

/// Arithmetic context shared by all vectors of one free module.
#[derive(Debug, Clone)]
pub(crate) struct Ctx {
    pub field: PrimeField,
    pub order: ModuleOrder,
    pub twists: Vec<i64>,
}

impl Ctx {
    #[inline]
    pub fn weight(&self, mon: Monomial, comp: u32) -> i64 {
        mon.degree() as i64 + self.twists[comp as usize]
    }

    /// Comparison of terms of equal twisted degree.
    #[inline]
    pub fn cmp_hom(&self, a: Monomial, ca: u32, b: Monomial, cb: u32) -> Ordering {
        match (self.order.monomial, self.order.position) {
            (MonomialOrder::Grevlex, PositionRule::TermOverPosition) => {
                (b.bits(), cb).cmp(&(a.bits(), ca))
            }
            (MonomialOrder::Grevlex, PositionRule::PositionOverTerm) => {
                (cb, b.bits()).cmp(&(ca, a.bits()))
            }
            _ => self.order.cmp(a, ca, b, cb, &self.twists),
        }
    }

    #[inline]
    pub fn cmp(&self, a: Monomial, ca: u32, b: Monomial, cb: u32) -> Ordering {
        self.order.cmp(a, ca, b, cb, &self.twists)
    }

    pub fn terms_of(&self, v: &ModVector) -> Vec<Term> {
        let mut out: Vec<Term> = v
            .components()
            .iter()
            .enumerate()
            .flat_map(|(j, p)| {
                p.terms().iter().map(move |&(mon, coeff)| Term {
                    mon,
                    comp: j as u32,
                    coeff,
                })
            })
            .collect();
        out.sort_unstable_by(|a, b| self.cmp(b.mon, b.comp, a.mon, a.comp));
        out
    }

    pub fn vector_of(&self, ring: &Arc<PolyRing>, terms: &[Term]) -> ModVector {
        let mut comps: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); self.twists.len()];
        for t in terms {
            comps[t.comp as usize].push((t.mon, t.coeff));
        }
        let components = comps
            .into_iter()
            .map(|c| Poly::from_terms(ring, c))
            .collect();
        ModVector {
            components,
            twists: self.twists.clone(),
        }
    }

    /// `out = h - c * m * g`, all three homogeneous of the same twisted degree.
    pub fn sub_mul(&self, h: &[Term], c: u32, m: Monomial, g: &[Term], out: &mut Vec<Term>) {
        out.clear();
        out.reserve(h.len() + g.len());
        let f = self.field;
        let nc = f.neg(c);
        let (mut i, mut j) = (0, 0);
        while j < g.len() {
            let gm = g[j].mon.mul(m);
            let gc = g[j].comp;
            while i < h.len() && self.cmp_hom(h[i].mon, h[i].comp, gm, gc) == Ordering::Greater {
                out.push(h[i]);
                i += 1;
            }
            if i < h.len() && h[i].mon == gm && h[i].comp == gc {
                let v = f.add(h[i].coeff, f.mul(nc, g[j].coeff));
                if v != 0 {
                    out.push(Term { mon: gm, comp: gc, coeff: v });
                }
                i += 1;
            } else {
                out.push(Term {
                    mon: gm,
                    comp: gc,
                    coeff: f.mul(nc, g[j].coeff),
                });
            }
            j += 1;
        }
        out.extend_from_slice(&h[i..]);
    }

    pub fn make_monic(&self, v: &mut [Term]) {
        if let Some(first) = v.first() {
            if first.coeff != 1 {
                let inv = self.field.inv(first.coeff);
                for t in v.iter_mut() {
                    t.coeff = self.field.mul(t.coeff, inv);
                }
            }
        }
    }
}
