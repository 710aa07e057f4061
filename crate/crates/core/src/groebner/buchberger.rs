//! Buchberger's algorithm for homogeneous submodules.
//!
//! Pairs are processed by increasing twisted degree (for homogeneous input this
//! is the sugar degree), ties broken by basis index. Useless pairs are dropped
//! with the Gebauer-Möller criteria; the product criterion is only applied in
//! rank one, where it is valid.

use super::vector::{Ctx, Term};
use crate::arith::Monomial;
use crate::error::{Error, Result};

/// Resource limits for one Gröbner basis computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    /// Largest twisted degree of a pair or generator that may be processed.
    pub max_degree: Option<i64>,
    /// Largest number of S-vectors that may be reduced.
    pub max_pairs: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    deg: i64,
}

pub(crate) struct Engine<'a> {
    ctx: &'a Ctx,
    pub basis: Vec<Vec<Term>>,
    lead: Vec<(Monomial, u32)>,
    by_comp: Vec<Vec<usize>>,
    rank_one: bool,
    buf: Vec<Term>,
}

impl<'a> Engine<'a> {
    pub fn new(ctx: &'a Ctx) -> Self {
        Engine {
            ctx,
            basis: Vec::new(),
            lead: Vec::new(),
            by_comp: vec![Vec::new(); ctx.twists.len()],
            rank_one: ctx.twists.len() == 1,
            buf: Vec::new(),
        }
    }

    /// Installs an existing Gröbner basis for reductions.
    pub fn load(&mut self, basis: Vec<Vec<Term>>) {
        for v in basis {
            let k = self.basis.len();
            self.lead.push((v[0].mon, v[0].comp));
            self.by_comp[v[0].comp as usize].push(k);
            self.basis.push(v);
        }
    }

    #[inline]
    fn find_reducer(&self, mon: Monomial, comp: u32) -> Option<usize> {
        self.by_comp[comp as usize]
            .iter()
            .copied()
            .find(|&k| self.lead[k].0.divides(mon))
    }

    /// Reduces the leading term until it is not divisible by any leading term.
    pub fn top_reduce(&mut self, mut h: Vec<Term>) -> Vec<Term> {
        while let Some(t) = h.first().copied() {
            let Some(k) = self.find_reducer(t.mon, t.comp) else { break };
            let m = self.lead[k].0.quotient_of(t.mon);
            self.ctx.sub_mul(&h, t.coeff, m, &self.basis[k], &mut self.buf);
            std::mem::swap(&mut h, &mut self.buf);
        }
        h
    }

    /// Full reduction: no term of the result is divisible by a leading term.
    /// `skip` excludes one basis element (used for inter-reduction).
    pub fn full_reduce(&mut self, mut h: Vec<Term>, skip: Option<usize>) -> Vec<Term> {
        let mut done: Vec<Term> = Vec::new();
        let mut start = 0;
        while start < h.len() {
            let t = h[start];
            let reducer = self.by_comp[t.comp as usize]
                .iter()
                .copied()
                .find(|&k| Some(k) != skip && self.lead[k].0.divides(t.mon));
            match reducer {
                None => {
                    done.push(t);
                    start += 1;
                }
                Some(k) => {
                    let m = self.lead[k].0.quotient_of(t.mon);
                    self.ctx.sub_mul(&h[start..], t.coeff, m, &self.basis[k], &mut self.buf);
                    std::mem::swap(&mut h, &mut self.buf);
                    start = 0;
                }
            }
        }
        done
    }

    fn push(&mut self, mut v: Vec<Term>) -> usize {
        self.ctx.make_monic(&mut v);
        let k = self.basis.len();
        self.lead.push((v[0].mon, v[0].comp));
        self.by_comp[v[0].comp as usize].push(k);
        self.basis.push(v);
        k
    }

    /// Gebauer-Möller update after inserting element `k`.
    fn update(&mut self, k: usize, pairs: &mut Vec<Pair>) {
        let (lk, ck) = self.lead[k];
        let tw = self.ctx.twists[ck as usize];

        // old pairs made redundant by the new leading term
        pairs.retain(|p| {
            if p.comp != ck || !lk.divides(p.lcm) {
                return true;
            }
            let li = self.lead[p.i].0.lcm(lk);
            let lj = self.lead[p.j].0.lcm(lk);
            li == p.lcm || lj == p.lcm
        });

        let mut cand: Vec<(usize, Monomial, bool)> = self.by_comp[ck as usize]
            .iter()
            .copied()
            .filter(|&i| i != k)
            .map(|i| {
                let li = self.lead[i].0;
                (i, li.lcm(lk), self.rank_one && li.is_coprime(lk))
            })
            .collect();

        // drop a candidate whose lcm is properly divisible by another candidate's lcm
        let lcms: Vec<Monomial> = cand.iter().map(|c| c.1).collect();
        cand.retain(|c| !lcms.iter().any(|&l| l != c.1 && l.divides(c.1)));

        // one pair per lcm; if any pair with that lcm is coprime, none is needed
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for c in cand {
            match kept.iter_mut().find(|x| x.1 == c.1) {
                Some(x) => x.2 |= c.2,
                None => kept.push(c),
            }
        }
        for (i, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            pairs.push(Pair {
                i,
                j: k,
                lcm,
                comp: ck,
                deg: lcm.degree() as i64 + tw,
            });
        }
    }

    fn s_vector(&mut self, p: &Pair) -> Vec<Term> {
        let mi = self.lead[p.i].0.quotient_of(p.lcm);
        let mj = self.lead[p.j].0.quotient_of(p.lcm);
        let hi: Vec<Term> = self.basis[p.i]
            .iter()
            .map(|t| Term {
                mon: t.mon.mul(mi),
                ..*t
            })
            .collect();
        let mut out = Vec::new();
        self.ctx.sub_mul(&hi, 1, mj, &self.basis[p.j], &mut out);
        out
    }

    /// Runs Buchberger on homogeneous generators. Returns a (not yet reduced) basis.
    pub fn run(&mut self, gens: Vec<Vec<Term>>, budget: &Budget) -> Result<()> {
        let mut gens: Vec<(i64, usize, Vec<Term>)> = gens
            .into_iter()
            .filter(|g| !g.is_empty())
            .enumerate()
            .map(|(idx, g)| (self.ctx.weight(g[0].mon, g[0].comp), idx, g))
            .collect();
        gens.sort_by_key(|g| (g.0, g.1));
        let mut gens = gens.into_iter().peekable();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut reduced_pairs: u64 = 0;

        loop {
            let next_gen = gens.peek().map(|g| g.0);
            let next_pair = pairs.iter().map(|p| p.deg).min();
            let deg = match (next_gen, next_pair) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if let Some(maxd) = budget.max_degree {
                if deg > maxd {
                    return Err(Error::BudgetExceeded(format!(
                        "Gröbner basis needs degree {deg} > limit {maxd}"
                    )));
                }
            }
            let mut todo: Vec<Pair> = Vec::new();
            pairs.retain(|p| {
                if p.deg == deg {
                    todo.push(*p);
                    false
                } else {
                    true
                }
            });
            todo.sort_by(|a, b| (a.j, a.i).cmp(&(b.j, b.i)));
            for p in todo {
                reduced_pairs += 1;
                if let Some(maxp) = budget.max_pairs {
                    if reduced_pairs > maxp {
                        return Err(Error::BudgetExceeded(format!(
                            "more than {maxp} S-vectors needed"
                        )));
                    }
                }
                let s = self.s_vector(&p);
                let h = self.top_reduce(s);
                if !h.is_empty() {
                    let k = self.push(h);
                    self.update(k, &mut pairs);
                }
            }
            while let Some(g) = gens.next_if(|g| g.0 == deg) {
                let h = self.top_reduce(g.2);
                if !h.is_empty() {
                    let k = self.push(h);
                    self.update(k, &mut pairs);
                }
            }
        }
        Ok(())
    }

    /// Leading terms of the current basis.
    pub fn leading_terms(&self) -> &[(Monomial, u32)] {
        &self.lead
    }

    /// Turns the basis into the reduced Gröbner basis, sorted by increasing leading term.
    pub fn into_reduced(mut self) -> Vec<Vec<Term>> {
        let n = self.basis.len();
        let mut keep = vec![true; n];
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && keep[b]
                    && self.lead[a].1 == self.lead[b].1
                    && self.lead[b].0.divides(self.lead[a].0)
                    && (self.lead[a].0 != self.lead[b].0 || b < a)
                {
                    keep[a] = false;
                    break;
                }
            }
        }
        let old_basis = std::mem::take(&mut self.basis);
        let old_lead = std::mem::take(&mut self.lead);
        self.by_comp.iter_mut().for_each(Vec::clear);
        for (k, v) in old_basis.into_iter().enumerate() {
            if keep[k] {
                let idx = self.basis.len();
                self.by_comp[old_lead[k].1 as usize].push(idx);
                self.lead.push(old_lead[k]);
                self.basis.push(v);
            }
        }
        for k in 0..self.basis.len() {
            let v = std::mem::take(&mut self.basis[k]);
            let lead = v[0];
            let tail = self.full_reduce(v[1..].to_vec(), Some(k));
            let mut out = Vec::with_capacity(tail.len() + 1);
            out.push(lead);
            out.extend(tail);
            self.basis[k] = out;
        }
        let ctx = self.ctx;
        let mut out = self.basis;
        out.sort_by(|a, b| ctx.cmp(a[0].mon, a[0].comp, b[0].mon, b[0].comp));
        out
    }
}
