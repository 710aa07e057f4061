use std::fmt;

use crate::error::{Error, Result};

/// The prime field `F_p` for a machine-word prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn elem(&self, v: i64) -> PrimeFieldElem {
        PrimeFieldElem {
            value: self.reduce_i64(v),
            field: *self,
        }
    }

    /// Returns `e` with `q = p^e`, or an error when `q` is not a power of `p`.
    pub fn log_p(&self, q: u64) -> Result<u32> {
        let p = self.p as u64;
        let mut e = 0;
        let mut r = q;
        if r == 0 {
            return Err(Error::NotPPower { q, p });
        }
        while r % p == 0 {
            r /= p;
            e += 1;
        }
        if r != 1 {
            return Err(Error::NotPPower { q, p });
        }
        Ok(e)
    }
}

/// An element of a prime field, always stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    value: u32,
    field: PrimeField,
}

impl PrimeFieldElem {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Option<Self> {
        (self.value != 0).then(|| PrimeFieldElem {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        PrimeFieldElem {
            value: self.field.pow(self.value, e),
            field: self.field,
        }
    }
}

macro_rules! elem_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr for PrimeFieldElem {
            type Output = PrimeFieldElem;
            fn $m(self, rhs: PrimeFieldElem) -> PrimeFieldElem {
                assert_eq!(self.field, rhs.field, "field mismatch");
                PrimeFieldElem {
                    value: self.field.$f(self.value, rhs.value),
                    field: self.field,
                }
            }
        }
    };
}
elem_binop!(Add, add, add);
elem_binop!(Sub, sub, sub);
elem_binop!(Mul, mul, mul);

impl std::ops::Neg for PrimeFieldElem {
    type Output = PrimeFieldElem;
    fn neg(self) -> PrimeFieldElem {
        PrimeFieldElem {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
