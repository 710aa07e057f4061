//! Degreewise linear algebra over `F_p`, written without the Gröbner machinery.
#![allow(dead_code)]

use std::collections::HashMap;

use ghk_core::arith::Poly;
use rand::Rng;

/// Exponent vectors of all monomials of degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

fn dense_terms(f: &Poly, n: usize) -> Vec<(Vec<u32>, u32)> {
    f.terms().iter().map(|(m, c)| (m.exponents(n), *c)).collect()
}

/// Row-reduces `rows` in place modulo `p` and returns the rank.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let prow = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Coefficient rows of `m * g` for every generator and every monomial `m` of the right degree.
fn degree_rows(gens: &[Poly], n: usize, d: u32) -> (Vec<Vec<u64>>, HashMap<Vec<u32>, usize>) {
    let basis = monomials(n, d);
    let index: HashMap<Vec<u32>, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        let terms = dense_terms(g, n);
        for m in monomials(n, d - dg) {
            let mut row = vec![0u64; basis.len()];
            for (e, c) in &terms {
                let key: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                row[index[&key]] = *c as u64;
            }
            rows.push(row);
        }
    }
    (rows, index)
}

/// `dim_F (gens)_d`.
pub fn ideal_dim(gens: &[Poly], p: u64, n: usize, d: u32) -> usize {
    let (rows, _) = degree_rows(gens, n, d);
    rank_mod_p(rows, p)
}

/// `dim_F (S/(gens))_d`.
pub fn quotient_dim(gens: &[Poly], p: u64, n: usize, d: u32) -> usize {
    monomials(n, d).len() - ideal_dim(gens, p, n, d)
}

/// Whether the homogeneous `f` lies in the ideal generated by `gens`.
pub fn in_ideal(f: &Poly, gens: &[Poly], p: u64, n: usize) -> bool {
    let Some(d) = f.degree() else { return true };
    let (mut rows, index) = degree_rows(gens, n, d);
    let before = rank_mod_p(rows.clone(), p);
    let mut row = vec![0u64; index.len()];
    for (e, c) in dense_terms(f, n) {
        row[index[&e]] = c as u64;
    }
    rows.push(row);
    rank_mod_p(rows, p) == before
}

/// Random homogeneous polynomial of degree `d` with about `terms` terms.
pub fn random_form(ring: &std::sync::Arc<ghk_core::arith::PolyRing>, d: u32, terms: usize, rng: &mut impl Rng) -> Poly {
    let n = ring.nvars();
    let p = ring.characteristic() as i64;
    let basis = monomials(n, d);
    let mut f = ring.zero();
    for _ in 0..terms {
        let e = &basis[rng.gen_range(0..basis.len())];
        let c = rng.gen_range(1..p);
        f = &f + &ring.monomial(e, c).unwrap();
    }
    f
}
