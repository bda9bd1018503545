//! Polynomials over the integers modulo 4.
//!
//! Coefficients are stored in ascending degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector. The compact
//! string form writes the same coefficients as digits in the same order, so
//! `1 + x + 2x^2 + 3x^3 + x^4` is `"11231"`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::Gf2Poly;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

impl Z4Poly {
    /// Builds a polynomial from ascending coefficients, reducing each one
    /// mod 4 and stripping high-degree zeros.
    pub fn new(coeffs: Vec<u8>) -> Self {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(|c| c & 3).collect(),
        };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `x^n - 1`, i.e. `3 + x^n`.
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0u8; n + 1];
        coeffs[0] = 3;
        coeffs[n] = 1;
        Self::new(coeffs)
    }

    /// Reads a compact digit string (`'0'..='3'`, ascending degree).
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut coeffs = Vec::with_capacity(text.len());
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '0'..='3' => coeffs.push(ch as u8 - b'0'),
                _ => return Err(Error::InvalidDigit { ch, pos }),
            }
        }
        Ok(Self::new(coeffs))
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn scale(&self, c: u8) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * (c & 3)).collect())
    }

    /// Long division by a monic polynomial, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
        if !divisor.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return Ok((Z4Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; rem.len() - d];
        for i in (0..quot.len()).rev() {
            let c = rem[i + d];
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (k, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + k] = (rem[i + k] + 4 - (c * b) % 4) & 3;
            }
        }
        rem.truncate(d);
        Ok((Z4Poly::new(quot), Z4Poly::new(rem)))
    }

    /// Exact quotient `self / divisor`; the divisor must be monic and divide
    /// `self` with zero remainder.
    pub fn div_exact(&self, divisor: &Z4Poly) -> Result<Z4Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem(&self, divisor: &Z4Poly) -> Result<Z4Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `h*(x) = a0^{-1} x^{deg h} h(1/x)`; requires a unit constant term.
    pub fn reciprocal(&self) -> Result<Z4Poly> {
        let a0 = self.coeff(0);
        if a0 & 1 == 0 {
            return Err(Error::NonUnitConstantTerm(a0));
        }
        // 1 and 3 are their own inverses mod 4
        Ok(Z4Poly::new(self.coeffs.iter().rev().map(|&c| c * a0).collect()))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().map(|r| &r == self).unwrap_or(false)
    }

    pub fn mod2(&self) -> Gf2Poly {
        Gf2Poly::from_bits(self.coeffs.iter().map(|&c| c & 1 == 1))
    }

    /// Lifts a binary polynomial to Z4 with coefficients in {0, 1}.
    pub fn from_gf2(p: &Gf2Poly) -> Self {
        Self::new(
            (0..p.degree().map_or(0, |d| d + 1))
                .map(|i| p.coeff(i) as u8)
                .collect(),
        )
    }

    /// Coefficient vector of `self mod (x^n - 1)`, length exactly `n`.
    pub fn fold_cyclic(&self, n: usize) -> Vec<u8> {
        let mut out = vec![0u8; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = (out[i % n] + c) & 3;
        }
        out
    }
}

impl fmt::Display for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for &c in &self.coeffs {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Poly({self})")
    }
}

impl serde::Serialize for Z4Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Z4Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Add for &Z4Poly {
    type Output = Z4Poly;

    fn add(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Neg for &Z4Poly {
    type Output = Z4Poly;

    fn neg(self) -> Z4Poly {
        Z4Poly::new(self.coeffs.iter().map(|&c| 4 - c).collect())
    }
}

impl Sub for &Z4Poly {
    type Output = Z4Poly;

    fn sub(self, rhs: &Z4Poly) -> Z4Poly {
        self + &(-rhs)
    }
}

impl Mul for &Z4Poly {
    type Output = Z4Poly;

    fn mul(self, rhs: &Z4Poly) -> Z4Poly {
        if self.is_zero() || rhs.is_zero() {
            return Z4Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) & 3;
            }
        }
        Z4Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Z4Poly {
            type Output = Z4Poly;
            fn $m(self, rhs: Z4Poly) -> Z4Poly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
