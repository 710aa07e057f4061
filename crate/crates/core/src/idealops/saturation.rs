//! Saturation with respect to the irrelevant ideal.
//!
//! For a linear form `l`, `U : l^∞ ⊆ U : m^∞`, with equality exactly when
//! `(U : l^∞)/U` has finite length. After a linear change of coordinates
//! sending `l` to the last variable, `U : l^∞` is read off a degree reverse
//! lexicographic basis by dividing out the last variable. The last variable,
//! then every other variable, then a few random linear forms are tried; if
//! none passes the finite-length test the iterated colon by `m` is used.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hilbert_series, saturate_with, HilbertSeries};
use crate::arith::{ModuleOrder, Monomial, Poly, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, leading_terms_with, Budget, Submodule};

const RANDOM_TRIES: usize = 6;
const SEED: u64 = 0x5eed_6b4b;

#[derive(Debug, Clone)]
pub(crate) enum CoordinateChange {
    /// Exchange variable `i` with the last variable.
    Swap(usize),
    /// `forward` sends a random linear form to the last variable, `backward` is its inverse.
    Linear { forward: Vec<Poly>, backward: Vec<Poly> },
}

impl CoordinateChange {
    pub fn candidates(ring: &Arc<PolyRing>) -> Vec<CoordinateChange> {
        let n = ring.nvars();
        let mut out: Vec<_> = (0..n).rev().map(CoordinateChange::Swap).collect();
        if n < 2 {
            return out;
        }
        let field = ring.field();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..RANDOM_TRIES {
            let c: Vec<u32> = (0..n)
                .map(|i| {
                    let lo = if i + 1 == n { 1 } else { 0 };
                    rng.gen_range(lo..field.characteristic())
                })
                .collect();
            let last = n - 1;
            let inv = field.inv(c[last]);
            let mut forward: Vec<Poly> = (0..n).map(|i| ring.var(i)).collect();
            let mut backward = forward.clone();
            // forward(x_last) = (x_last - sum_{i<last} c_i x_i) / c_last, backward(x_last) = l
            let mut fwd = ring.var(last);
            let mut l = ring.var(last).scale(c[last]);
            for i in 0..last {
                fwd = &fwd - &ring.var(i).scale(c[i]);
                l = &l + &ring.var(i).scale(c[i]);
            }
            forward[last] = fwd.scale(inv);
            backward[last] = l;
            out.push(CoordinateChange::Linear { forward, backward });
        }
        out
    }

    fn swap_perm(n: usize, i: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, n - 1);
        perm
    }

    pub fn is_identity(&self, n: usize) -> bool {
        matches!(self, CoordinateChange::Swap(i) if *i + 1 == n)
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        match self {
            CoordinateChange::Swap(i) => Ok(f.permute_vars(&Self::swap_perm(f.ring().nvars(), *i))),
            CoordinateChange::Linear { forward, .. } => f.substitute(forward),
        }
    }

    pub fn undo(&self, f: &Poly) -> Result<Poly> {
        match self {
            CoordinateChange::Swap(_) => self.apply(f),
            CoordinateChange::Linear { backward, .. } => f.substitute(backward),
        }
    }

    fn map_submodule(&self, u: &Submodule, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Submodule> {
        if self.is_identity(u.ring().nvars()) {
            return Ok(u.clone());
        }
        let gens = u
            .generators()
            .iter()
            .map(|g| g.map_components(&f))
            .collect::<Result<Vec<_>>>()?;
        let rels = u.relations().iter().map(&f).collect::<Result<Vec<_>>>()?;
        Ok(Submodule::over_quotient(u.ring(), u.twists().to_vec(), gens, Arc::new(rels))?.with_order(u.order()))
    }

    pub fn apply_submodule(&self, u: &Submodule) -> Result<Submodule> {
        self.map_submodule(u, |p| self.apply(p))
    }

    pub fn undo_submodule(&self, u: &Submodule) -> Result<Submodule> {
        self.map_submodule(u, |p| self.undo(p))
    }
}

fn split_leading(lts: &[(Monomial, u32)], rank: usize, strip: Option<usize>) -> Vec<Vec<Monomial>> {
    let mut out = vec![Vec::new(); rank];
    for &(m, c) in lts {
        out[c as usize].push(match strip {
            Some(i) => m.strip_var(i),
            None => m,
        });
    }
    out
}

/// `U : x_last^∞` by the division trick, with the Hilbert series of `F/U` and `F/(U : x_last^∞)`.
fn saturate_by_last(u: &Submodule, budget: &Budget) -> Result<(Submodule, HilbertSeries, HilbertSeries)> {
    let n = u.ring().nvars();
    let last = n - 1;
    let uu = u.clone().with_order(ModuleOrder::default());
    let gb = buchberger_with(&uu, budget)?;
    let lts: Vec<(Monomial, u32)> = gb.leading_terms().into_iter().map(|(m, c)| (m, c as u32)).collect();
    let mut gens = Vec::with_capacity(lts.len());
    for (e, &(m, _)) in gb.elements().into_iter().zip(&lts) {
        let k = m.exponent(last);
        let mut ex = vec![0u32; n];
        ex[last] = k;
        let d = Monomial::from_exponents(&ex)?;
        gens.push(e.map_components(|c| Ok(c.div_monomial(d).expect("last variable divides the whole vector")))?);
    }
    let hs_u = HilbertSeries::from_leading_module(n, u.twists(), &split_leading(&lts, u.rank(), None));
    let hs_s = HilbertSeries::from_leading_module(n, u.twists(), &split_leading(&lts, u.rank(), Some(last)));
    Ok((u.with_generators(gens)?, hs_u, hs_s))
}

/// `U : R_+^∞`.
pub fn saturate_irrelevant(u: &Submodule) -> Result<Submodule> {
    saturate_irrelevant_with(u, &Budget::unlimited())
}

pub(crate) fn saturate_irrelevant_with(u: &Submodule, budget: &Budget) -> Result<Submodule> {
    for change in CoordinateChange::candidates(u.ring()) {
        let moved = change.apply_submodule(u)?;
        let (sat, hs_u, hs_s) = saturate_by_last(&moved, budget)?;
        match hs_u.sub(&hs_s).finite_length() {
            Ok(_) => return change.undo_submodule(&sat).map(|s| s.with_order(u.order())),
            Err(Error::InfiniteLength) => continue,
            Err(e) => return Err(e),
        }
    }
    saturate_with(u, &irrelevant_of(u)?, budget)
}

fn irrelevant_of(u: &Submodule) -> Result<Submodule> {
    let ring = u.ring();
    let vars = (0..ring.nvars()).map(|i| ring.var(i)).collect();
    Submodule::ideal_over_quotient(ring, vars, u.relations().clone())
}

/// `l((U : x_last^∞)/U)` when that equals `l(H^0_m(F/U))`, `None` when the last
/// variable does not detect the irrelevant ideal.
pub(crate) fn length_by_last_variable(u: &Submodule, budget: &Budget) -> Result<Option<u64>> {
    let n = u.ring().nvars();
    let u = u.clone().with_order(ModuleOrder::default());
    let lts = leading_terms_with(&u, budget)?;
    let hs_u = HilbertSeries::from_leading_module(n, u.twists(), &split_leading(&lts, u.rank(), None));
    let hs_s = HilbertSeries::from_leading_module(n, u.twists(), &split_leading(&lts, u.rank(), Some(n - 1)));
    match hs_u.sub(&hs_s).finite_length() {
        Ok(len) => Ok(Some(len as u64)),
        Err(Error::InfiniteLength) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `l(H^0_m(F/U))` by iterated colon.
pub(crate) fn length_by_colon(u: &Submodule, budget: &Budget) -> Result<u64> {
    let sat = saturate_with(u, &irrelevant_of(u)?, budget)?;
    let len = hilbert_series(u)?.sub(&hilbert_series(&sat)?).finite_length()?;
    Ok(len as u64)
}
