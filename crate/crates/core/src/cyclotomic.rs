//! Factorization of `x^n - 1` over Z4 for odd `n`.
//!
//! The binary factors come from cyclotomic cosets of 2 modulo `n`: each coset
//! gives the minimal polynomial of a power of a primitive `n`-th root of unity
//! in GF(2^m), `m = ord_n(2)`. Each binary factor is lifted to the unique
//! monic basic irreducible factor of `x^n - 1` over Z4 by root squaring.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Ext, Gf2Poly};
use crate::z4poly::Z4Poly;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn euler_phi(j: u64) -> u64 {
    assert!(j >= 1, "totient of 0");
    let mut result = j;
    for p in crate::gf2::prime_factors(j) {
        result = result / p * (p - 1);
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Least `e >= 1` with `base^e = 1 (mod j)`; `mult_order(b, 1) = 1`.
pub fn mult_order(base: u64, j: u64) -> Result<u64> {
    if j == 1 {
        return Ok(1);
    }
    if gcd(base % j, j) != 1 {
        return Err(Error::NotCoprime { base, modulus: j });
    }
    let b = base % j;
    let mut acc = b;
    let mut e = 1;
    while acc != 1 {
        acc = acc * b % j;
        e += 1;
    }
    Ok(e)
}

/// Whether `l` divides `2^i + 1` for some `i >= 1`.
pub fn in_n2(l: u64) -> Result<bool> {
    if l % 2 == 0 {
        return Err(Error::EvenModulus(l));
    }
    if l == 1 {
        return Ok(true);
    }
    let ord = mult_order(2, l)?;
    let mut acc = 1u64;
    for _ in 0..ord {
        acc = acc * 2 % l;
        if acc == l - 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_length(n: u64) -> Result<()> {
    match n {
        0 => Err(Error::ZeroLength),
        n if n % 2 == 0 => Err(Error::EvenLength(n)),
        _ => Ok(()),
    }
}

/// `B_n`: the sum of `phi(j)` over divisors `j | n` lying in `N_2`.
pub fn compute_b(n: u64) -> Result<u64> {
    check_length(n)?;
    let mut total = 0;
    for j in divisors(n) {
        if in_n2(j)? {
            total += euler_phi(j);
        }
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "partner")]
pub enum FactorClass {
    SelfReciprocal,
    PairedWith(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub poly: Z4Poly,
    /// Multiplicative order of the factor's roots.
    pub j: u64,
    pub class: FactorClass,
}

impl Factor {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorStats {
    pub j: u64,
    pub ord: u64,
    pub phi: u64,
    pub in_n2: bool,
    /// Number of self-reciprocal factors of order `j` (set when `j` is in N2).
    pub gamma: Option<u64>,
    /// Number of reciprocal pairs of order `j` (set otherwise).
    pub beta: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorTable {
    pub n: u64,
    pub factors: Vec<Factor>,
    pub divisor_stats: Vec<DivisorStats>,
    pub b_n: u64,
}

/// Lifts a monic binary factor `f` of `x^n - 1` (n odd) to Z4. With
/// `f = e + o` split into even and odd degree parts, the lift `F` satisfies
/// `F(x^2) = ±(e(x)^2 - o(x)^2)`, the sign making `F` monic.
pub fn graeffe_lift(f: &Gf2Poly) -> Z4Poly {
    let deg = f.degree().expect("lifting zero polynomial");
    let part = |parity: usize| {
        Z4Poly::new((0..=deg).map(|i| (i % 2 == parity && f.coeff(i)) as u8).collect())
    };
    let (even, odd) = (part(0), part(1));
    let mut t = &(&even * &even) - &(&odd * &odd);
    if deg % 2 == 1 {
        t = -&t;
    }
    Z4Poly::new(t.coeffs().iter().step_by(2).copied().collect())
}

/// Minimal polynomials over GF(2) of the roots of `x^n - 1`, one per
/// cyclotomic coset, each tagged with its coset representative.
fn binary_factors(n: u64) -> Vec<(u64, Gf2Poly)> {
    let m = mult_order(2, n).expect("n odd") as usize;
    let field = Gf2Ext::new(m);
    let alpha = field.element_of_order(n);
    let mut powers = Vec::with_capacity(n as usize);
    let mut acc = Gf2Poly::one();
    for _ in 0..n {
        powers.push(acc.clone());
        acc = field.mul(&acc, &alpha);
    }

    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        // coefficients (ascending) of prod (x + alpha^k) over the coset
        let mut poly: Vec<Gf2Poly> = vec![Gf2Poly::one()];
        let mut k = s;
        loop {
            seen[k as usize] = true;
            let root = &powers[k as usize];
            let mut next = vec![Gf2Poly::zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c);
                next[i] = next[i].add(&field.mul(c, root));
            }
            poly = next;
            k = k * 2 % n;
            if k == s {
                break;
            }
        }
        let bits = poly.iter().map(|c| {
            assert!(c.is_zero() || c.is_one(), "minimal polynomial not binary");
            c.is_one()
        });
        out.push((s, Gf2Poly::from_bits(bits.collect::<Vec<_>>())));
    }
    out
}

/// Canonical factorization of `x^n - 1` over Z4: factors sorted by `j`, then
/// self-reciprocal factors by string and reciprocal pairs by the smaller
/// member's string, each pair listed smaller member first.
pub fn factor_xn_minus_1(n: u64) -> Result<FactorTable> {
    check_length(n)?;
    let mut lifted: Vec<(u64, Z4Poly)> = binary_factors(n)
        .into_iter()
        .map(|(s, f)| (n / gcd(s, n), graeffe_lift(&f)))
        .collect();
    lifted.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.to_string().cmp(&b.1.to_string())));

    let mut factors: Vec<Factor> = Vec::with_capacity(lifted.len());
    let mut placed = vec![false; lifted.len()];
    for i in 0..lifted.len() {
        if placed[i] {
            continue;
        }
        let (j, ref poly) = lifted[i];
        let recip = poly.reciprocal().expect("factor of x^n-1 has unit constant term");
        placed[i] = true;
        if &recip == poly {
            factors.push(Factor { poly: poly.clone(), j, class: FactorClass::SelfReciprocal });
        } else {
            let k = (i + 1..lifted.len())
                .find(|&k| !placed[k] && lifted[k].1 == recip)
                .expect("reciprocal partner present among the factors");
            placed[k] = true;
            let at = factors.len();
            factors.push(Factor { poly: poly.clone(), j, class: FactorClass::PairedWith(at + 1) });
            factors.push(Factor { poly: recip, j, class: FactorClass::PairedWith(at) });
        }
    }

    let mut divisor_stats = Vec::new();
    for j in divisors(n) {
        let ord = mult_order(2, j)?;
        let phi = euler_phi(j);
        let member = in_n2(j)?;
        divisor_stats.push(DivisorStats {
            j,
            ord,
            phi,
            in_n2: member,
            gamma: member.then(|| phi / ord),
            beta: (!member).then(|| phi / (2 * ord)),
        });
    }
    let b_n = divisor_stats.iter().filter(|s| s.in_n2).map(|s| s.phi).sum();
    if factors.len() > DivisorMask::MAX_FACTORS {
        return Err(Error::TooManyFactors(n));
    }
    Ok(FactorTable { n, factors, divisor_stats, b_n })
}

impl FactorTable {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn length(&self) -> usize {
        self.n as usize
    }

    pub fn partner(&self, i: usize) -> usize {
        match self.factors[i].class {
            FactorClass::SelfReciprocal => i,
            FactorClass::PairedWith(k) => k,
        }
    }

    pub fn full(&self) -> DivisorMask {
        DivisorMask::new(self.n, self.len(), full_bits(self.len()))
    }

    pub fn empty(&self) -> DivisorMask {
        DivisorMask::new(self.n, self.len(), 0)
    }

    pub fn mask(&self, bits: u64) -> DivisorMask {
        DivisorMask::new(self.n, self.len(), bits & self.full().bits)
    }

    fn check(&self, m: &DivisorMask) -> Result<()> {
        if m.n != self.n || m.nfactors != self.len() {
            return Err(Error::TableMismatch);
        }
        Ok(())
    }

    /// The monic divisor of `x^n - 1` that a mask represents.
    pub fn polynomial(&self, m: &DivisorMask) -> Result<Z4Poly> {
        self.check(m)?;
        Ok(m.indices().fold(Z4Poly::one(), |acc, i| &acc * &self.factors[i].poly))
    }

    pub fn degree(&self, m: &DivisorMask) -> usize {
        m.indices().map(|i| self.factors[i].degree()).sum()
    }

    /// Image of the mask under the pairing involution (the star on divisors).
    pub fn reciprocal(&self, m: &DivisorMask) -> Result<DivisorMask> {
        self.check(m)?;
        let bits = m.indices().fold(0u64, |acc, i| acc | 1 << self.partner(i));
        Ok(self.mask(bits))
    }

    /// Locates a monic divisor of `x^n - 1` as a factor subset.
    pub fn mask_of(&self, poly: &Z4Poly) -> Result<DivisorMask> {
        let mut rest = poly.clone();
        let mut bits = 0u64;
        if !rest.is_monic() {
            return Err(Error::NotADivisor(poly.to_string()));
        }
        for (i, f) in self.factors.iter().enumerate() {
            let (q, r) = rest.div_rem(&f.poly)?;
            if r.is_zero() {
                bits |= 1 << i;
                rest = q;
            }
        }
        if rest != Z4Poly::one() {
            return Err(Error::NotADivisor(poly.to_string()));
        }
        Ok(self.mask(bits))
    }

    /// Position of the factor whose polynomial renders as `s`.
    pub fn index_of(&self, s: &str) -> Option<usize> {
        self.factors.iter().position(|f| f.poly.to_string() == s)
    }

    /// Checks every structural invariant of the table, returning a
    /// description of the first violation.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let n = self.n as usize;
        let product = self.polynomial(&self.full()).map_err(|e| e.to_string())?;
        if product != Z4Poly::x_n_minus_one(n) {
            return Err(format!("product of factors is {product}, not x^{n}-1"));
        }
        let mut seen = std::collections::HashSet::new();
        let mut total = 0;
        for (i, f) in self.factors.iter().enumerate() {
            let binary = f.poly.mod2();
            if !binary.is_irreducible() {
                return Err(format!("{} is not basic irreducible", f.poly));
            }
            if !seen.insert(binary) {
                return Err(format!("{} repeats a mod-2 reduction", f.poly));
            }
            let stats = self.stats(f.j).ok_or("factor with non-divisor j")?;
            if f.degree() as u64 != stats.ord {
                return Err(format!("{} has degree != ord_{}(2)", f.poly, f.j));
            }
            let k = self.partner(i);
            if self.partner(k) != i {
                return Err(format!("pairing of {} is not an involution", f.poly));
            }
            let recip = f.poly.reciprocal().map_err(|e| e.to_string())?;
            if recip != self.factors[k].poly {
                return Err(format!("partner of {} is not its reciprocal", f.poly));
            }
            if (k == i) != stats.in_n2 {
                return Err(format!("class of {} disagrees with N2 membership", f.poly));
            }
            total += f.degree();
        }
        if total != n {
            return Err(format!("factor degrees sum to {total}"));
        }
        for s in &self.divisor_stats {
            let count = self.factors.iter().filter(|f| f.j == s.j).count() as u64;
            let expected = if s.in_n2 { s.gamma } else { s.beta.map(|b| 2 * b) };
            if Some(count) != expected {
                return Err(format!("wrong number of factors of order {}", s.j));
            }
        }
        let self_recip: usize = self
            .factors
            .iter()
            .filter(|f| f.class == FactorClass::SelfReciprocal)
            .map(Factor::degree)
            .sum();
        if self_recip as u64 != self.b_n {
            return Err("B_n differs from the self-reciprocal degree".into());
        }
        Ok(())
    }

    pub fn stats(&self, j: u64) -> Option<&DivisorStats> {
        self.divisor_stats.iter().find(|s| s.j == j)
    }
}

impl fmt::Display for FactorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "factors:")?;
        for (i, fac) in self.factors.iter().enumerate() {
            let class = match fac.class {
                FactorClass::SelfReciprocal => "self-reciprocal".to_string(),
                FactorClass::PairedWith(k) => format!("paired with {}", self.factors[k].poly),
            };
            writeln!(f, "  [{i}] {} j={} deg={} {class}", fac.poly, fac.j, fac.degree())?;
        }
        writeln!(f, "divisors:")?;
        for s in &self.divisor_stats {
            let count = match (s.gamma, s.beta) {
                (Some(g), _) => format!("gamma={g}"),
                (_, Some(b)) => format!("beta={b}"),
                _ => String::new(),
            };
            let tag = if s.in_n2 { "in N2" } else { "not in N2" };
            writeln!(f, "  j={} ord={} phi={} {tag} {count}", s.j, s.ord, s.phi)?;
        }
        write!(f, "B_n = {}", self.b_n)
    }
}

fn full_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// A monic divisor of `x^n - 1`, stored as the subset of factor indices
/// whose product it is. Exponents are 0/1 because `x^n - 1` is squarefree
/// for odd `n`, so gcd and lcm are intersection and union.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorMask {
    n: u64,
    nfactors: usize,
    bits: u64,
}

impl DivisorMask {
    pub const MAX_FACTORS: usize = 64;

    fn new(n: u64, nfactors: usize, bits: u64) -> Self {
        Self { n, nfactors, bits }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nfactors).filter(move |&i| self.contains(i))
    }

    fn same_table(&self, other: &DivisorMask) -> Result<()> {
        if self.n != other.n || self.nfactors != other.nfactors {
            return Err(Error::TableMismatch);
        }
        Ok(())
    }

    pub fn gcd(&self, other: &DivisorMask) -> Result<DivisorMask> {
        self.same_table(other)?;
        Ok(Self { bits: self.bits & other.bits, ..*self })
    }

    pub fn lcm(&self, other: &DivisorMask) -> Result<DivisorMask> {
        self.same_table(other)?;
        Ok(Self { bits: self.bits | other.bits, ..*self })
    }

    /// `(x^n - 1) / self`.
    pub fn complement(&self) -> DivisorMask {
        Self { bits: !self.bits & full_bits(self.nfactors), ..*self }
    }

    pub fn is_disjoint(&self, other: &DivisorMask) -> bool {
        self.bits & other.bits == 0
    }
}
