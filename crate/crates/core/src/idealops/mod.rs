//! Ideal and submodule calculus over `R = F_p[x_1..x_n]/(relations)`: colon,
//! saturation, intersection, reflexive hulls, Hilbert series and colengths.

mod hilbert;
mod ring;
mod saturation;


pub use hilbert::{monomial_ideal_numerator, HilbertSeries};
pub use ring::{RingInfo, RingSpec, SmoothnessVerdict};
pub use saturation::saturate_irrelevant;

pub(crate) use saturation::{length_by_colon, length_by_last_variable, CoordinateChange};

use crate::arith::{ModuleOrder, MonomialOrder, Poly};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, Budget, ModVector, Submodule};

/// `HS(F/U)` for `F = ⊕ S(-e_j)` and `U` with the relations adjoined.
pub fn hilbert_series(u: &Submodule) -> Result<HilbertSeries> {
    let gb = u.groebner_basis()?;
    Ok(HilbertSeries::from_leading_module(
        u.ring().nvars(),
        u.twists(),
        &gb.leading_module(),
    ))
}

/// `I^[q]`: every generator raised to the `q`-th power, twists scaled by `q`.
pub fn bracket_power(u: &Submodule, q: u64) -> Result<Submodule> {
    let p = u.ring().characteristic() as u64;
    u.ring().field().log_p(q)?;
    let twists: Vec<i64> = u.twists().iter().map(|e| e * q as i64).collect();
    let gens = u
        .generators()
        .iter()
        .map(|g| {
            let comps = g
                .components()
                .iter()
                .map(|c| c.frobenius_power(q))
                .collect::<Result<Vec<_>>>()?;
            ModVector::new(comps, twists.clone())
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e| match e {
            Error::NotPPower { .. } => Error::NotPPower { q, p },
            other => other,
        })?;
    Submodule::over_quotient(u.ring(), twists, gens, u.relations().clone())
}

fn check_same_ring(u: &Submodule, j: &Submodule) -> Result<()> {
    if u.ring().as_ref() != j.ring().as_ref() || u.relations() != j.relations() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Submodule of the last block of a block module, read off an elimination basis.
fn last_block(
    u: &Submodule,
    block_twists: Vec<i64>,
    gens: Vec<ModVector>,
    offset: usize,
    budget: &Budget,
) -> Result<Vec<ModVector>> {
    let big = Submodule::new(u.ring(), block_twists, gens)?
        .with_order(ModuleOrder::position_over_term(MonomialOrder::Grevlex));
    let gb = buchberger_with(&big, budget)?;
    let rank = u.rank();
    let mut out = Vec::new();
    for (e, (_, comp)) in gb.elements().into_iter().zip(gb.leading_terms()) {
        if comp >= offset {
            let comps = e.into_components()[offset..offset + rank].to_vec();
            out.push(ModVector::new(comps, u.twists().to_vec())?);
        }
    }
    Ok(out)
}

fn embed(v: &ModVector, block: usize, rank: usize, twists: &[i64]) -> ModVector {
    let ring = v.ring();
    let mut comps: Vec<Poly> = vec![ring.zero(); twists.len()];
    for (j, c) in v.components().iter().enumerate() {
        comps[block * rank + j] = c.clone();
    }
    ModVector::new(comps, twists.to_vec()).expect("block embedding is well formed")
}

/// `U :_F J = { v in F : J v ⊆ U }`.
pub fn colon(u: &Submodule, j: &Submodule) -> Result<Submodule> {
    colon_with(u, j, &Budget::unlimited())
}

pub fn colon_with(u: &Submodule, j: &Submodule, budget: &Budget) -> Result<Submodule> {
    check_same_ring(u, j)?;
    if j.rank() != 1 {
        return Err(Error::Invalid("colon by a submodule of rank > 1".into()));
    }
    let g: Vec<Poly> = j.ideal_generators();
    if g.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let r = u.rank();
    let s = g.len();
    let top = g.iter().map(|f| f.degree().unwrap() as i64).max().unwrap();
    let mut twists = Vec::with_capacity((s + 1) * r);
    for f in &g {
        let d = f.degree().unwrap() as i64;
        twists.extend(u.twists().iter().map(|e| e + top - d));
    }
    twists.extend(u.twists().iter().map(|e| e + top));

    let ring = u.ring();
    let mut gens = Vec::new();
    for jj in 0..r {
        let mut comps = vec![ring.zero(); (s + 1) * r];
        for (k, f) in g.iter().enumerate() {
            comps[k * r + jj] = f.clone();
        }
        comps[s * r + jj] = ring.one();
        gens.push(ModVector::new(comps, twists.clone())?);
    }
    let base = u.all_generators();
    for k in 0..s {
        for v in &base {
            gens.push(embed(&v.with_twists(twists[k * r..(k + 1) * r].to_vec()), k, r, &twists));
        }
    }
    let out = last_block(u, twists, gens, s * r, budget)?;
    u.with_generators(out)
}

/// `U ∩ V` inside a common free module.
pub fn intersect(u: &Submodule, v: &Submodule) -> Result<Submodule> {
    if !u.same_ambient(v) {
        return Err(Error::AmbientMismatch);
    }
    check_same_ring(u, v)?;
    let r = u.rank();
    let twists: Vec<i64> = u.twists().iter().chain(u.twists()).copied().collect();
    let mut gens = Vec::new();
    for a in u.all_generators() {
        let mut comps = a.components().to_vec();
        comps.extend(a.components().iter().cloned());
        gens.push(ModVector::new(comps, twists.clone())?);
    }
    for b in v.all_generators() {
        gens.push(embed(&b, 0, r, &twists));
    }
    let out = last_block(u, twists, gens, r, &Budget::unlimited())?;
    u.with_generators(out)
}

/// `U :_F J^∞` by iterated colon until the chain stabilizes.
pub fn saturate(u: &Submodule, j: &Submodule) -> Result<Submodule> {
    saturate_with(u, j, &Budget::unlimited())
}

pub fn saturate_with(u: &Submodule, j: &Submodule, budget: &Budget) -> Result<Submodule> {
    let mut cur = u.clone();
    loop {
        let next = colon_with(&cur, j, budget)?;
        if next.is_contained_in(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Generators of `u` whose image in the quotient ring is nonzero.
fn prune_relations(u: &Submodule) -> Result<Vec<Poly>> {
    let rel = Submodule::ideal(u.ring(), u.relations().to_vec())?;
    let mut out = Vec::new();
    for g in u.ideal_generators() {
        if !rel.contains(&ModVector::from_poly(g.clone()))? {
            out.push(g);
        }
    }
    Ok(out)
}

/// `(a) : ((a) : I)`, the reflexive hull of a height-one ideal `I` containing `a`.
pub fn reflexive_hull(i: &Submodule, a: Option<&Poly>) -> Result<Submodule> {
    if i.rank() != 1 {
        return Err(Error::Invalid("reflexive hull of a submodule of rank > 1".into()));
    }
    let gens = prune_relations(i)?;
    let a = match a {
        Some(a) => {
            if !i.contains(&ModVector::from_poly(a.clone()))? {
                return Err(Error::NotContained);
            }
            a.clone()
        }
        None => gens.first().cloned().ok_or(Error::ZeroIdeal)?,
    };
    let principal = i.with_generators(vec![ModVector::from_poly(a.clone())])?;
    if prune_relations(&principal)?.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let trimmed = i.with_generators(gens.into_iter().map(ModVector::from_poly).collect())?;
    let inner = colon(&principal, &trimmed)?;
    let inner = inner.with_generators(prune_relations(&inner)?.into_iter().map(ModVector::from_poly).collect())?;
    colon(&principal, &inner)
}

/// `l(V/U)` for `U ⊆ V`; fails with `InfiniteLength` when the quotient is not Artinian.
pub fn colength_difference(u: &Submodule, v: &Submodule) -> Result<u64> {
    if !u.same_ambient(v) {
        return Err(Error::AmbientMismatch);
    }
    if !u.is_contained_in(v)? {
        return Err(Error::NotContained);
    }
    let len = hilbert_series(u)?.sub(&hilbert_series(v)?).finite_length()?;
    Ok(len as u64)
}

/// Degree of the line bundle of `I` on `Proj R`: `-e(R/I^sat)`, and `0` when `I^sat = R`.
pub fn sheaf_degree(i: &Submodule) -> Result<i128> {
    if i.rank() != 1 || i.twists() != [0] {
        return Err(Error::Invalid("sheaf degree needs an ideal".into()));
    }
    let sat = saturate_irrelevant(i)?;
    if sat.groebner_basis()?.contains_unit() {
        return Ok(0);
    }
    let hs = hilbert_series(&sat)?;
    match hs.dimension() {
        1 => Ok(-hs.multiplicity()),
        d => Err(Error::Invalid(format!("quotient by the ideal has dimension {d}, expected 1"))),
    }
}
