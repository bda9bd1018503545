//! Binary polynomials and the extension fields GF(2^m) used to build minimal
//! polynomials of roots of unity.

use std::fmt;

use num_bigint::BigUint;

/// Polynomial over GF(2), bit `i` of the packed words is the coefficient of
/// `x^i`. No trailing zero words are kept.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Self { words: vec![0; k / 64 + 1] };
        p.words[k / 64] = 1 << (k % 64);
        p
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        for (i, b) in bits.into_iter().enumerate() {
            if i % 64 == 0 {
                words.push(0);
            }
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    /// Builds from a `u64` bit pattern (bit `i` = coefficient of `x^i`).
    pub fn from_u64(bits: u64) -> Self {
        let mut p = Self { words: vec![bits] };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = Gf2Poly { words };
        p.trim();
        p
    }

    fn xor_shifted(&mut self, other: &Gf2Poly, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let needed = other.words.len() + ws + 1;
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut out = Gf2Poly::zero();
        if let Some(d) = other.degree() {
            for i in 0..=d {
                if other.coeff(i) {
                    out.xor_shifted(self, i);
                }
            }
        }
        out.trim();
        out
    }

    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Gf2Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            rem.xor_shifted(divisor, shift);
            rem.trim();
            quot.xor_shifted(&Gf2Poly::one(), shift);
        }
        quot.trim();
        (quot, rem)
    }

    pub fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }

    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn mulmod(&self, other: &Gf2Poly, modulus: &Gf2Poly) -> Gf2Poly {
        self.mul(other).rem(modulus)
    }

    /// Rabin's test: `f` of degree `m` is irreducible iff `x^(2^m) = x mod f`
    /// and `gcd(x^(2^(m/p)) - x, f) = 1` for every prime `p | m`.
    pub fn is_irreducible(&self) -> bool {
        let m = match self.degree() {
            None | Some(0) => return false,
            Some(m) => m,
        };
        let x = Gf2Poly::monomial(1).rem(self);
        let frobenius = |k: usize| {
            let mut t = x.clone();
            for _ in 0..k {
                t = t.mulmod(&t, self);
            }
            t
        };
        if frobenius(m) != x {
            return false;
        }
        prime_factors(m as u64).into_iter().all(|p| {
            let t = frobenius(m / p as usize).add(&x);
            t.gcd(self).degree() == Some(0)
        })
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly(")?;
        match self.degree() {
            None => write!(f, "0")?,
            Some(d) => {
                for i in 0..=d {
                    write!(f, "{}", self.coeff(i) as u8)?;
                }
            }
        }
        write!(f, ")")
    }
}

/// Distinct prime divisors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The field GF(2^m) realised as GF(2)[y]/(modulus).
#[derive(Clone, Debug)]
pub struct Gf2Ext {
    modulus: Gf2Poly,
    degree: usize,
}

impl Gf2Ext {
    /// Uses the first irreducible polynomial of degree `m` in increasing
    /// bit-pattern order, so the construction is deterministic.
    pub fn new(m: usize) -> Self {
        assert!(m >= 1);
        let mut tail = 1u64;
        loop {
            let mut candidate = Gf2Poly::monomial(m);
            candidate = candidate.add(&Gf2Poly::from_u64(tail));
            if candidate.is_irreducible() {
                return Self { modulus: candidate, degree: m };
            }
            tail += 2;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.modulus
    }

    pub fn mul(&self, a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        a.mulmod(b, &self.modulus)
    }

    pub fn pow(&self, base: &Gf2Poly, exp: &BigUint) -> Gf2Poly {
        let mut acc = Gf2Poly::one();
        for i in (0..exp.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if exp.bit(i) {
                acc = self.mul(&acc, base);
            }
        }
        acc
    }

    /// An element of multiplicative order exactly `n`; requires
    /// `n | 2^m - 1`.
    pub fn element_of_order(&self, n: u64) -> Gf2Poly {
        let group = (BigUint::from(1u8) << self.degree) - 1u8;
        assert!(
            (&group % n) == BigUint::from(0u8),
            "{n} does not divide 2^{} - 1",
            self.degree
        );
        if n == 1 {
            return Gf2Poly::one();
        }
        let cofactor = &group / n;
        let primes = prime_factors(n);
        let mut bits = 2u64;
        loop {
            let beta = Gf2Poly::from_u64(bits).rem(&self.modulus);
            bits += 1;
            if beta.is_zero() {
                continue;
            }
            let gamma = self.pow(&beta, &cofactor);
            let exact = primes
                .iter()
                .all(|&p| !self.pow(&gamma, &BigUint::from(n / p)).is_one());
            if exact {
                return gamma;
            }
        }
    }
}
