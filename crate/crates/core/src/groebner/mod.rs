//! Gröbner bases and normal forms for homogeneous submodules of twisted free
//! modules over `F_p[x_1..x_n]`. Ideals are the rank-one case.
//!
//! Quotient rings are never represented directly: a submodule over
//! `R = S/(relations)` is a submodule over `S` with `f * e_j` adjoined for
//! every relation `f` and basis vector `e_j`.

mod buchberger;
mod vector;

use std::sync::{Arc, OnceLock};

pub use buchberger::Budget;
pub use vector::ModVector;

pub(crate) use buchberger::Engine;
pub(crate) use vector::{Ctx, Term};

use crate::arith::{ModuleOrder, Monomial, Poly, PolyRing};
use crate::error::{Error, Result};

/// Finitely generated homogeneous submodule of `⊕_j S(-e_j)`, optionally over a
/// quotient ring given by `relations`.
#[derive(Debug)]
pub struct Submodule {
    ring: Arc<PolyRing>,
    twists: Vec<i64>,
    gens: Vec<ModVector>,
    relations: Arc<Vec<Poly>>,
    order: ModuleOrder,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Submodule {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Submodule {
            ring: self.ring.clone(),
            twists: self.twists.clone(),
            gens: self.gens.clone(),
            relations: self.relations.clone(),
            order: self.order,
            gb,
        }
    }
}

fn check_relations(ring: &Arc<PolyRing>, relations: &[Poly]) -> Result<()> {
    for f in relations {
        if !f.ring().as_ref().eq(ring.as_ref()) {
            return Err(Error::RingMismatch);
        }
        if !f.is_homogeneous() {
            return Err(Error::Inhomogeneous(format!("relation {f}")));
        }
    }
    Ok(())
}

impl Submodule {
    /// Submodule of `⊕ S(-e_j)` over the polynomial ring itself.
    pub fn new(ring: &Arc<PolyRing>, twists: Vec<i64>, gens: Vec<ModVector>) -> Result<Self> {
        Self::over_quotient(ring, twists, gens, Arc::new(Vec::new()))
    }

    /// Submodule over `S/(relations)`; relations are adjoined implicitly.
    pub fn over_quotient(
        ring: &Arc<PolyRing>,
        twists: Vec<i64>,
        gens: Vec<ModVector>,
        relations: Arc<Vec<Poly>>,
    ) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::Invalid("free module of rank zero".into()));
        }
        check_relations(ring, &relations)?;
        for g in &gens {
            if g.twists() != twists.as_slice() || g.ring().as_ref() != ring.as_ref() {
                return Err(Error::AmbientMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!("generator {g}")));
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            twists,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            relations,
            order: ModuleOrder::default(),
            gb: OnceLock::new(),
        })
    }

    /// The ideal generated by `gens` (rank one, twist zero).
    pub fn ideal(ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Result<Self> {
        Self::ideal_over_quotient(ring, gens, Arc::new(Vec::new()))
    }

    pub fn ideal_over_quotient(ring: &Arc<PolyRing>, gens: Vec<Poly>, relations: Arc<Vec<Poly>>) -> Result<Self> {
        let gens = gens.into_iter().map(ModVector::from_poly).collect();
        Self::over_quotient(ring, vec![0], gens, relations)
    }

    pub fn with_order(mut self, order: ModuleOrder) -> Self {
        if order != self.order {
            self.order = order;
            self.gb = OnceLock::new();
        }
        self
    }

    /// The same submodule with different generators in the same ambient.
    pub fn with_generators(&self, gens: Vec<ModVector>) -> Result<Self> {
        Ok(Submodule::over_quotient(&self.ring, self.twists.clone(), gens, self.relations.clone())?
            .with_order(self.order))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn generators(&self) -> &[ModVector] {
        &self.gens
    }

    pub fn relations(&self) -> &Arc<Vec<Poly>> {
        &self.relations
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    /// Generators as polynomials; only meaningful in rank one.
    pub fn ideal_generators(&self) -> Vec<Poly> {
        self.gens.iter().map(|g| g.component(0).clone()).collect()
    }

    /// User generators followed by `f * e_j` for every relation `f`.
    pub fn all_generators(&self) -> Vec<ModVector> {
        let mut out = self.gens.clone();
        for f in self.relations.iter() {
            if f.is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                out.push(ModVector::basis_multiple(f.clone(), j, &self.twists));
            }
        }
        out
    }

    pub fn same_ambient(&self, other: &Submodule) -> bool {
        self.twists == other.twists && self.ring.as_ref() == other.ring.as_ref()
    }

    pub(crate) fn ctx(&self) -> Ctx {
        Ctx {
            field: self.ring.field(),
            order: self.order,
            twists: self.twists.clone(),
        }
    }

    /// Cached reduced Gröbner basis (no budget).
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger_with(self, &Budget::unlimited())?;
        // a concurrent writer installs the identical reduced basis
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap())
    }

    pub fn contains(&self, v: &ModVector) -> Result<bool> {
        is_member(v, self)
    }

    /// `self ⊆ other`, checked on generators.
    pub fn is_contained_in(&self, other: &Submodule) -> Result<bool> {
        if !self.same_ambient(other) {
            return Err(Error::AmbientMismatch);
        }
        for g in self.all_generators() {
            if !other.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as submodules (compares reduced Gröbner bases in a common order).
    pub fn same_submodule(&self, other: &Submodule) -> Result<bool> {
        if !self.same_ambient(other) {
            return Err(Error::AmbientMismatch);
        }
        if self.order == other.order {
            return Ok(self.groebner_basis()?.elements_internal() == other.groebner_basis()?.elements_internal());
        }
        Ok(self.is_contained_in(other)? && other.is_contained_in(self)?)
    }
}

/// A reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    ctx: Ctx,
    elems: Vec<Vec<Term>>,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn order(&self) -> ModuleOrder {
        self.ctx.order
    }

    pub fn twists(&self) -> &[i64] {
        &self.ctx.twists
    }

    pub fn elements(&self) -> Vec<ModVector> {
        self.elems.iter().map(|e| self.ctx.vector_of(&self.ring, e)).collect()
    }

    pub(crate) fn elements_internal(&self) -> &[Vec<Term>] {
        &self.elems
    }

    /// Leading terms `(monomial, component)`; together they span the leading module.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems.iter().map(|e| (e[0].mon, e[0].comp as usize)).collect()
    }

    /// Monomial generators of the leading module, split by component.
    pub fn leading_module(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.ctx.twists.len()];
        for e in &self.elems {
            out[e[0].comp as usize].push(e[0].mon);
        }
        out
    }

    pub fn contains_unit(&self) -> bool {
        self.elems.iter().any(|e| e[0].mon.is_one())
    }

    fn engine(&self) -> Engine<'_> {
        let mut eng = Engine::new(&self.ctx);
        eng.load(self.elems.clone());
        eng
    }
}

/// Reduced Gröbner basis of `gens` (relations included) in its order.
pub fn buchberger(gens: &Submodule) -> Result<GroebnerBasis> {
    buchberger_with(gens, &Budget::unlimited())
}

pub fn buchberger_with(gens: &Submodule, budget: &Budget) -> Result<GroebnerBasis> {
    let ctx = gens.ctx();
    let input: Vec<Vec<Term>> = gens.all_generators().iter().map(|g| ctx.terms_of(g)).collect();
    let elems = {
        let mut eng = Engine::new(&ctx);
        eng.run(input, budget)?;
        eng.into_reduced()
    };
    Ok(GroebnerBasis {
        ring: gens.ring.clone(),
        ctx,
        elems,
    })
}

/// Leading terms of some (not necessarily reduced) Gröbner basis of `gens`.
pub(crate) fn leading_terms_with(gens: &Submodule, budget: &Budget) -> Result<Vec<(Monomial, u32)>> {
    let ctx = gens.ctx();
    let input: Vec<Vec<Term>> = gens.all_generators().iter().map(|g| ctx.terms_of(g)).collect();
    let mut eng = Engine::new(&ctx);
    eng.run(input, budget)?;
    Ok(eng.leading_terms().to_vec())
}

/// Remainder of `v` modulo the basis; `v - nf(v)` lies in the submodule.
pub fn normal_form(v: &ModVector, gb: &GroebnerBasis) -> Result<ModVector> {
    if v.twists() != gb.twists() || v.ring().as_ref() != gb.ring.as_ref() {
        return Err(Error::AmbientMismatch);
    }
    let mut eng = gb.engine();
    // reduce each homogeneous part separately
    let mut parts: std::collections::BTreeMap<i64, Vec<Term>> = Default::default();
    for t in gb.ctx.terms_of(v) {
        parts.entry(gb.ctx.weight(t.mon, t.comp)).or_default().push(t);
    }
    let mut out = Vec::new();
    for (_, part) in parts {
        out.extend(eng.full_reduce(part, None));
    }
    Ok(gb.ctx.vector_of(&gb.ring, &out))
}

pub fn is_member(v: &ModVector, u: &Submodule) -> Result<bool> {
    if v.twists() != u.twists() || v.ring().as_ref() != u.ring().as_ref() {
        return Err(Error::AmbientMismatch);
    }
    Ok(normal_form(v, u.groebner_basis()?)?.is_zero())
}

#[cfg(test)]
mod tests;
