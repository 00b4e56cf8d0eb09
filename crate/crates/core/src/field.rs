//! Prime fields and their small extensions `GF(p^k)`, `k <= 4`.
//!
//! An element is its coefficient vector over `GF(p)`, lowest degree first,
//! padded with zeros to length 4. Elements also have a dense index
//! `c_0 + c_1 p + c_2 p^2 + …`, used for enumeration.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const MAX_PRIME: u32 = 97;
pub const MAX_DEGREE: usize = 4;

pub type Elem = [u32; MAX_DEGREE];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: usize,
    /// Monic, low-to-high, length `k + 1`.
    modulus: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `GF(p^k)` with the lexicographically smallest monic irreducible modulus,
/// coefficients compared from the constant term upward.
pub fn field_make(p: u32, k: usize) -> Result<FiniteField> {
    if !is_prime(p) || p > MAX_PRIME {
        return Err(Error::invalid(format!("p must be a prime <= {MAX_PRIME}, got {p}")));
    }
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::invalid(format!("extension degree must be in 1..={MAX_DEGREE}, got {k}")));
    }
    let total = (p as u64).pow(k as u32);
    for code in 0..total {
        // Most significant digit is c_0, so increasing `code` walks the
        // low-to-high lexicographic order.
        let mut modulus = alloc::vec![0u32; k + 1];
        let mut rest = code;
        for i in (0..k).rev() {
            modulus[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        modulus[k] = 1;
        if is_irreducible(&modulus, p) {
            return Ok(FiniteField { p, k, modulus });
        }
    }
    unreachable!("every degree has an irreducible polynomial")
}

/// Irreducibility of a monic polynomial of degree <= 4 by trial division
/// with every monic polynomial of degree up to half its degree.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut div = alloc::vec![0u32; d + 1];
            let mut rest = code;
            for c in div.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            div[d] = 1;
            if poly_rem(poly, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    let p = p as u64;
    for top in (dm..r.len()).rev() {
        let c = r[top] % p;
        if c == 0 {
            continue;
        }
        for i in 0..=dm {
            let j = top - dm + i;
            r[j] = (r[j] + (p - c) * m[i] as u64) % p;
        }
    }
    r.truncate(dm);
    r.into_iter().map(|x| (x % p) as u32).collect()
}

impl FiniteField {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `p^k`.
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.k as u32)
    }

    pub fn zero(&self) -> Elem {
        [0; MAX_DEGREE]
    }

    pub fn one(&self) -> Elem {
        [1, 0, 0, 0]
    }

    /// The base-field constant `c mod p`.
    pub fn constant(&self, c: u32) -> Elem {
        [c % self.p, 0, 0, 0]
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// Whether `a` lies in the prime subfield.
    pub fn in_base(&self, a: &Elem) -> bool {
        a[1..].iter().all(|&c| c == 0)
    }

    pub fn index(&self, a: &Elem) -> u64 {
        a[..self.k].iter().rev().fold(0, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn element(&self, mut index: u64) -> Elem {
        let mut a = self.zero();
        for c in a.iter_mut().take(self.k) {
            *c = (index % self.p as u64) as u32;
            index /= self.p as u64;
        }
        a
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.zero();
        for i in 0..self.k {
            out[i] = (a[i] + b[i]) % self.p;
        }
        out
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        let mut out = self.zero();
        for i in 0..self.k {
            out[i] = (self.p - a[i]) % self.p;
        }
        out
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let p = self.p as u64;
        let mut prod = [0u64; 2 * MAX_DEGREE - 1];
        for i in 0..self.k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.k {
                prod[i + j] = (prod[i + j] + a[i] as u64 * b[j] as u64) % p;
            }
        }
        // x^k = −(m_0 + … + m_{k−1} x^{k−1})
        for top in (self.k..2 * self.k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for i in 0..self.k {
                let j = top - self.k + i;
                prod[j] = (prod[j] + (p - c) * self.modulus[i] as u64) % p;
            }
        }
        let mut out = self.zero();
        for i in 0..self.k {
            out[i] = prod[i] as u32;
        }
        out
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        (!self.is_zero(a)).then(|| self.pow(a, self.order() - 2))
    }

    /// The field norm to `GF(p)`, `a^{(p^k−1)/(p−1)}`, as a base-field value.
    pub fn norm_to_base(&self, a: &Elem) -> u32 {
        let e = (self.order() - 1) / (self.p as u64 - 1);
        let n = self.pow(a, e);
        debug_assert!(self.in_base(&n));
        n[0]
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }
}
