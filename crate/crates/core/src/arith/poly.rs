use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// A standard-graded polynomial ring `F_p[x_1, ..., x_n]` with a monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Arc<Self>> {
        Self::with_order(p, vars, MonomialOrder::Grevlex)
    }

    pub fn with_order<S: AsRef<str>>(p: u64, vars: &[S], order: MonomialOrder) -> Result<Arc<Self>> {
        let field = PrimeField::new(p)?;
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::Invalid(format!(
                "between 1 and {MAX_VARS} variables are supported, got {}",
                vars.len()
            )));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::Invalid(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Invalid(format!("variable `{v}` declared twice")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// The same variables and characteristic under a different order.
    pub fn reordered(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            order,
            ..self.clone()
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn zero(self: &Arc<Self>) -> Poly {
        Poly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> Poly {
        let c = self.field.reduce_i64(c);
        Poly::from_terms(self, vec![(Monomial::one(), c)])
    }

    pub fn one(self: &Arc<Self>) -> Poly {
        self.constant(1)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Poly {
        assert!(i < self.nvars());
        Poly {
            ring: self.clone(),
            terms: vec![(Monomial::var(i), 1)],
        }
    }

    pub fn monomial(self: &Arc<Self>, exps: &[u32], c: i64) -> Result<Poly> {
        if exps.len() != self.nvars() {
            return Err(Error::Invalid("exponent vector length differs from variable count".into()));
        }
        let m = Monomial::from_exponents(exps)?;
        Ok(Poly::from_terms(self, vec![(m, self.field.reduce_i64(c))]))
    }

    pub(crate) fn same(&self, other: &PolyRing) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

/// Sparse polynomial; terms sorted decreasingly in the ring's order, no zero coefficients.
#[derive(Debug, Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Poly {}

/// Arithmetic operation selector for [`poly_ring_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_ring_ops(a: &Poly, b: &Poly, op: RingOp) -> Result<Poly> {
    match op {
        RingOp::Add => a.try_add(b),
        RingOp::Sub => a.try_sub(b),
        RingOp::Mul => a.try_mul(b),
    }
}

impl Poly {
    /// Builds a normalized polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, u32)>) -> Poly {
        let order = ring.order;
        let field = ring.field;
        terms.sort_unstable_by(|a, b| order.cmp(b.0, a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1 == 0 {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some(l) if l.1 == 0) {
            out.pop();
        }
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    /// The coefficient of `m` (zero if absent).
    pub fn coefficient(&self, m: Monomial) -> u32 {
        self.terms
            .iter()
            .find(|t| t.0 == m)
            .map(|t| t.1)
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(self.terms[0].0.degree())
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let f = self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let conv = |c: u32| if negate { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match order.cmp(a[i].0, b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, conv(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].1, conv(b[j].1));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| (t.0, conv(t.1))));
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let f = self.ring.field;
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let m = ma
                    .checked_mul(mb)
                    .ok_or(Error::ExponentOverflow((ma.degree() + mb.degree()) as u64))?;
                prods.push((m, f.mul(ca, cb)));
            }
        }
        Ok(Poly::from_terms(&self.ring, prods))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = self.ring.field;
        let c = c % f.characteristic();
        if c == 0 {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(t, c)| (t.mul(m), c)).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.ring.field.characteristic() - 1)
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Result<Poly> {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^q` for a power `q` of the characteristic, computed termwise:
    /// `(Σ c m)^q = Σ c m^q` since `c^q = c` in `F_p`.
    pub fn frobenius_power(&self, q: u64) -> Result<Poly> {
        self.ring.field.log_p(q)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            let mq = m
                .checked_pow(q)
                .ok_or(Error::ExponentOverflow(m.degree() as u64 * q))?;
            terms.push((mq, c));
        }
        // m1 > m2 implies m1^q > m2^q in any monomial order
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        assert_eq!(images.len(), self.ring.nvars());
        let n = self.ring.nvars();
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|g| vec![g.ring.one(), g.clone()]).collect();
        let mut acc = self.ring.zero();
        for &(m, c) in &self.terms {
            let mut t = self.ring.constant(c as i64);
            for (i, pw) in powers.iter_mut().enumerate().take(n) {
                let e = m.exponent(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().try_mul(&pw[1])?;
                    pw.push(next);
                }
                if e > 0 {
                    t = t.try_mul(&pw[e])?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Renames variable `i` to variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        let terms = self.terms.iter().map(|&(m, c)| (m.permute(perm), c)).collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// The same polynomial viewed in a ring that differs only in its order.
    pub fn in_ring(&self, ring: &Arc<PolyRing>) -> Result<Poly> {
        if ring.field != self.ring.field || ring.vars != self.ring.vars {
            return Err(Error::RingMismatch);
        }
        Ok(Poly::from_terms(ring, self.terms.clone()))
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let f = self.ring.field;
        let v = Monomial::var(i);
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0.exponent(i) > 0)
            .map(|&(m, c)| {
                let e = m.exponent(i) as i64;
                (v.quotient_of(m), f.mul(c, f.reduce_i64(e)))
            })
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: Monomial) -> Option<Poly> {
        if !self.terms.iter().all(|t| m.divides(t.0)) {
            return None;
        }
        Some(Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(t, c)| (m.quotient_of(t), c)).collect(),
        })
    }

    pub fn make_monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field.inv(c)),
        }
    }
}

macro_rules! poly_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                self.$f(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}
poly_op!(Add, add, try_add);
poly_op!(Sub, sub, try_sub);
poly_op!(Mul, mul, try_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial, vars: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, v) in vars.iter().enumerate() {
        let e = m.exponent(i);
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ring.field.characteristic();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            // symmetric representative
            let (neg, mag) = if c > p / 2 { (true, p - c) } else { (false, c) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m, &self.ring.vars)?;
            }
        }
        Ok(())
    }
}
