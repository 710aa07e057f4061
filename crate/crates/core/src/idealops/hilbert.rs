//! Hilbert series of quotients of twisted free modules, from leading modules.

use std::fmt;

use crate::arith::Monomial;
use crate::error::{Error, Result};

/// Integer polynomial in `t`, `coeffs[k]` is the coefficient of `t^k`.
type IntPoly = Vec<i128>;

fn trim(p: &mut IntPoly) {
    while matches!(p.last(), Some(0)) {
        p.pop();
    }
}

fn add_shifted(acc: &mut IntPoly, p: &[i128], shift: usize, sign: i128) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += sign * c;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), *m));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` with `HS(S/I) = N(t)/(1-t)^n` for a monomial ideal `I`.
pub fn monomial_ideal_numerator(gens: &[Monomial]) -> Vec<i128> {
    let mut out = numerator_rec(minimalize(gens.to_vec()));
    trim(&mut out);
    out
}

fn numerator_rec(gens: Vec<Monomial>) -> IntPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    if gens.len() <= 2 {
        let mut out = vec![1];
        add_shifted(&mut out, &[1], gens[0].degree() as usize, -1);
        if gens.len() == 2 {
            add_shifted(&mut out, &[1], gens[1].degree() as usize, -1);
            add_shifted(&mut out, &[1], gens[0].lcm(gens[1]).degree() as usize, 1);
        }
        return out;
    }

    let mut counts = [0usize; crate::arith::MAX_VARS];
    for m in &gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if m.exponent(i) > 0 {
                *c += 1;
            }
        }
    }
    let (var, &best) = counts.iter().enumerate().max_by_key(|&(i, c)| (*c, usize::MAX - i)).unwrap();
    if best <= 1 {
        // pairwise coprime generators: product of (1 - t^deg)
        let mut out = vec![1];
        for m in &gens {
            let mut next = out.clone();
            add_shifted(&mut next, &out, m.degree() as usize, -1);
            out = next;
        }
        return out;
    }
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|m| m.exponent(var) > 0 && m.exponent(var) != m.degree())
        .map(|m| m.exponent(var))
        .collect();
    if exps.is_empty() {
        // only pure powers of `var` contain it; cannot happen for a minimal set with count >= 2
        unreachable!("minimal monomial ideal with a repeated pure power");
    }
    exps.sort_unstable();
    let k = exps[exps.len() / 2];
    let mut e = [0u32; crate::arith::MAX_VARS];
    e[var] = k;
    let pivot = Monomial::from_exponents(&e).unwrap();

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let left = numerator_rec(minimalize(with_pivot));
    let quotient: Vec<Monomial> = gens.iter().map(|&m| m.gcd(pivot).quotient_of(m)).collect();
    let right = numerator_rec(minimalize(quotient));
    let mut out = left;
    add_shifted(&mut out, &right, k as usize, 1);
    out
}

/// `HS(t) = t^shift * N(t) / (1-t)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    shift: i64,
    numerator: Vec<i128>,
}

impl HilbertSeries {
    pub(crate) fn new(nvars: usize, shift: i64, mut numerator: Vec<i128>) -> Self {
        trim(&mut numerator);
        let lead = numerator.iter().take_while(|&&c| c == 0).count();
        if lead == numerator.len() {
            return HilbertSeries { nvars, shift: 0, numerator: Vec::new() };
        }
        numerator.drain(..lead);
        HilbertSeries {
            nvars,
            shift: shift + lead as i64,
            numerator,
        }
    }

    /// Series of `⊕_j S(-e_j) / L` where `L_j` are the monomial ideals of the leading module.
    pub fn from_leading_module(nvars: usize, twists: &[i64], leading: &[Vec<Monomial>]) -> Self {
        let shift = twists.iter().copied().min().unwrap_or(0);
        let mut acc: IntPoly = Vec::new();
        for (e, lm) in twists.iter().zip(leading) {
            let n = monomial_ideal_numerator(lm);
            add_shifted(&mut acc, &n, (e - shift) as usize, 1);
        }
        HilbertSeries::new(nvars, shift, acc)
    }

    /// Number of ring variables, the exponent of `(1-t)` in the denominator.
    pub fn denominator_exponent(&self) -> usize {
        self.nvars
    }

    /// `(shift, coefficients)` of the unreduced numerator.
    pub fn numerator(&self) -> (i64, &[i128]) {
        (self.shift, &self.numerator)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Cancels `(1-t)` as often as possible: returns `(shift, numerator, pole order)`.
    pub fn reduced(&self) -> (i64, Vec<i128>, usize) {
        let mut num = self.numerator.clone();
        let mut pole = self.nvars;
        while pole > 0 && !num.is_empty() && num.iter().sum::<i128>() == 0 {
            num = divide_one_minus_t(&num).expect("value at 1 is zero");
            pole -= 1;
        }
        (self.shift, num, pole)
    }

    /// Krull dimension of the quotient (pole order at `t = 1`).
    pub fn dimension(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.reduced().2
    }

    /// Value of the reduced numerator at `t = 1` (the multiplicity).
    pub fn multiplicity(&self) -> i128 {
        self.reduced().1.iter().sum()
    }

    /// Dimension of the degree-`d` component.
    pub fn coefficient(&self, d: i64) -> i128 {
        let mut acc = 0i128;
        for (k, &c) in self.numerator.iter().enumerate() {
            let m = d - self.shift - k as i64;
            if m < 0 {
                continue;
            }
            acc += c * binomial(m as u64 + self.nvars as u64 - 1, self.nvars as u64 - 1);
        }
        if self.nvars == 0 {
            let idx = d - self.shift;
            return if idx >= 0 { self.numerator.get(idx as usize).copied().unwrap_or(0) } else { 0 };
        }
        acc
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() {
            let neg: Vec<i128> = other.numerator.iter().map(|c| -c).collect();
            return HilbertSeries::new(self.nvars, other.shift, neg);
        }
        if other.is_zero() {
            return self.clone();
        }
        let shift = self.shift.min(other.shift);
        let mut acc = Vec::new();
        add_shifted(&mut acc, &self.numerator, (self.shift - shift) as usize, 1);
        add_shifted(&mut acc, &other.numerator, (other.shift - shift) as usize, -1);
        HilbertSeries::new(self.nvars, shift, acc)
    }

    /// Total length when the series is a polynomial (finite-length quotient).
    pub fn finite_length(&self) -> Result<i128> {
        let mut num = self.numerator.clone();
        for _ in 0..self.nvars {
            if num.is_empty() {
                return Ok(0);
            }
            num = divide_one_minus_t(&num).ok_or(Error::InfiniteLength)?;
        }
        Ok(num.iter().sum())
    }
}

fn binomial(n: u64, k: u64) -> i128 {
    let k = k.min(n - k.min(n));
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Exact division by `1 - t`, `None` if there is a remainder.
fn divide_one_minus_t(p: &[i128]) -> Option<IntPoly> {
    if p.iter().sum::<i128>() != 0 {
        return None;
    }
    // p = (1-t) q  =>  q_k = sum_{i<=k} p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut run = 0i128;
    for &c in &p[..p.len() - 1] {
        run += c;
        q.push(run);
    }
    trim(&mut q);
    Some(q)
}

/// Unreduced form `t^s N(t)/(1-t)^n`, expanded.
impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (shift, num, pole) = (self.shift, &self.numerator, self.nvars);
        let mut first = true;
        write!(f, "(")?;
        for (k, &c) in num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = shift + k as i64;
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            match e {
                0 => write!(f, "{sign}{mag}")?,
                1 if mag == 1 => write!(f, "{sign}t")?,
                1 => write!(f, "{sign}{mag}*t")?,
                _ if mag == 1 => write!(f, "{sign}t^{e}")?,
                _ => write!(f, "{sign}{mag}*t^{e}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")/(1-t)^{pole}")
    }
}
