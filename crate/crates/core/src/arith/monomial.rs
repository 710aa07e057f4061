//! Packed monomials: up to eight variables, sixteen bits per exponent.
//!
//! Variable `i` occupies bits `16*i .. 16*i+16`. The top bit of each field is a
//! guard bit, so exponents stay below `2^15` and divisibility, products, gcd and
//! lcm are computed on the whole word at once.

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 8;
pub const MAX_EXPONENT: u32 = (1 << 15) - 1;

const FIELD: u32 = 16;
const GUARD: u128 = 0x8000_8000_8000_8000_8000_8000_8000_8000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    bits: u128,
    deg: u32,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { bits: 0, deg: 0 }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Invalid(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        let mut bits = 0u128;
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow(e as u64));
            }
            bits |= (e as u128) << (FIELD * i as u32);
            deg += e;
        }
        Ok(Monomial { bits, deg })
    }

    pub fn var(i: usize) -> Self {
        debug_assert!(i < MAX_VARS);
        Monomial {
            bits: 1u128 << (FIELD * i as u32),
            deg: 1,
        }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub(crate) fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.bits >> (FIELD * i as u32)) & 0xFFFF) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn is_one(&self) -> bool {
        self.bits == 0
    }

    /// Product; `None` if some exponent would leave the supported range.
    #[inline]
    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let bits = self.bits + other.bits;
        if bits & GUARD != 0 {
            return None;
        }
        Some(Monomial {
            bits,
            deg: self.deg + other.deg,
        })
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        self.checked_mul(other)
            .expect("monomial exponent exceeds 2^15 - 1")
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        self.deg <= other.deg && ((other.bits | GUARD) - self.bits) & GUARD == GUARD
    }

    /// `other / self`; caller guarantees `self | other`.
    #[inline]
    pub fn quotient_of(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            bits: other.bits - self.bits,
            deg: other.deg - self.deg,
        }
    }

    #[inline]
    fn ge_mask(a: u128, b: u128) -> u128 {
        let t = ((a | GUARD) - b) & GUARD;
        (t >> 15) * 0xFFFF
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        let m = Self::ge_mask(self.bits, other.bits);
        let bits = (self.bits & m) | (other.bits & !m);
        Monomial {
            bits,
            deg: field_sum(bits),
        }
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let m = Self::ge_mask(self.bits, other.bits);
        let bits = (other.bits & m) | (self.bits & !m);
        Monomial {
            bits,
            deg: field_sum(bits),
        }
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        self.gcd(other).is_one()
    }

    pub fn checked_pow(self, q: u64) -> Option<Monomial> {
        let mut out = [0u32; MAX_VARS];
        for (i, o) in out.iter_mut().enumerate() {
            let e = self.exponent(i) as u64 * q;
            if e > MAX_EXPONENT as u64 {
                return None;
            }
            *o = e as u32;
        }
        Monomial::from_exponents(&out).ok()
    }

    /// Moves the exponent of variable `i` to position `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Monomial {
        let mut bits = 0u128;
        for (i, &j) in perm.iter().enumerate() {
            bits |= (self.exponent(i) as u128) << (FIELD * j as u32);
        }
        Monomial { bits, deg: self.deg }
    }

    /// Removes all factors of variable `i`.
    pub fn strip_var(self, i: usize) -> Monomial {
        let e = self.exponent(i);
        Monomial {
            bits: self.bits & !(0xFFFFu128 << (FIELD * i as u32)),
            deg: self.deg - e,
        }
    }
}

#[inline]
fn field_sum(bits: u128) -> u32 {
    // every field is below 2^15 and there are eight of them, so 32-bit lanes cannot overflow
    let pairs = (bits & 0x0000_FFFF_0000_FFFF_0000_FFFF_0000_FFFF)
        + ((bits >> 16) & 0x0000_FFFF_0000_FFFF_0000_FFFF_0000_FFFF);
    let mut s = 0u128;
    let mut x = pairs;
    while x != 0 {
        s += x & 0xFFFF_FFFF;
        x >>= 32;
    }
    s as u32
}
