//! Arithmetic in GF(p) and GF(p²), just enough for quadratic-residue host
//! graphs and their subfield clique structure.
//!
//! GF(p²) is realized as GF(p)[x]/(x² − d) with `d` the smallest quadratic
//! non-residue mod p, so the modulus is determined by `p` alone and runs are
//! reproducible without recording extra state. Elements are coordinate pairs
//! `a + b·x` and are indexed by `a + p·b`.

use crate::error::{Error, Result};

/// Trial-division primality, adequate for the small moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Euler's criterion: is `a` a nonzero square mod the odd prime `p`?
pub fn is_nonzero_square_mod(a: u64, p: u64) -> bool {
    let a = a % p;
    a != 0 && pow_mod(a, (p - 1) / 2, p) == 1
}

/// Smallest quadratic non-residue mod the odd prime `p`.
pub fn smallest_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&d| !is_nonzero_square_mod(d, p))
        .expect("no non-residue below an odd prime")
}

/// An element of GF(p²), coordinates of `a + b·x` with `x² = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct F2 {
    pub a: u64,
    pub b: u64,
}

/// The field GF(p²) for an odd prime `p`, modulus `x² − d` with `d` the
/// smallest non-residue mod `p`.
#[derive(Clone, Debug)]
pub struct Gfp2 {
    p: u64,
    d: u64,
}

impl Gfp2 {
    pub fn new(p: u64) -> Result<Gfp2> {
        if !is_prime(p) {
            return Err(Error::param("p", "base field order must be prime"));
        }
        if p == 2 {
            return Err(Error::param("p", "base field must have odd order"));
        }
        if p >= 1 << 20 {
            return Err(Error::param("p", "base field order too large"));
        }
        Ok(Gfp2 {
            p,
            d: smallest_nonresidue(p),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The `d` in the modulus `x² − d`.
    pub fn modulus_d(&self) -> u64 {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.p * self.p
    }

    pub fn zero(&self) -> F2 {
        F2 { a: 0, b: 0 }
    }

    pub fn one(&self) -> F2 {
        F2 { a: 1, b: 0 }
    }

    /// Element with index `i = a + p·b`, `0 ≤ i < p²`.
    pub fn element(&self, i: u64) -> F2 {
        debug_assert!(i < self.order());
        F2 {
            a: i % self.p,
            b: i / self.p,
        }
    }

    /// Index of an element, inverse of [`element`](Self::element).
    pub fn index(&self, z: F2) -> u64 {
        debug_assert!(z.a < self.p && z.b < self.p);
        z.a + self.p * z.b
    }

    /// Embeds a base-field element, i.e. the subfield copy of GF(p).
    pub fn from_base(&self, a: u64) -> F2 {
        F2 { a: a % self.p, b: 0 }
    }

    pub fn add(&self, x: F2, y: F2) -> F2 {
        F2 {
            a: (x.a + y.a) % self.p,
            b: (x.b + y.b) % self.p,
        }
    }

    pub fn sub(&self, x: F2, y: F2) -> F2 {
        F2 {
            a: (x.a + self.p - y.a) % self.p,
            b: (x.b + self.p - y.b) % self.p,
        }
    }

    pub fn mul(&self, x: F2, y: F2) -> F2 {
        // (a1 + b1 x)(a2 + b2 x) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) x.
        let p = self.p;
        F2 {
            a: (x.a * y.a + self.d % p * (x.b * y.b % p)) % p,
            b: (x.a * y.b + x.b * y.a) % p,
        }
    }

    pub fn pow(&self, x: F2, mut exp: u64) -> F2 {
        let mut acc = self.one();
        let mut base = x;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Is `z` a nonzero square in GF(p²)? Euler's criterion with exponent
    /// (p² − 1)/2.
    pub fn is_nonzero_square(&self, z: F2) -> bool {
        if z == self.zero() {
            return false;
        }
        self.pow(z, (self.order() - 1) / 2) == self.one()
    }
}
