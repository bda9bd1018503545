//! Cyclic codes over R = Z4[v]/(v^2 - v).
//!
//! R splits through the orthogonal idempotents `v` and `1 - v = 1 + 3v`, so a
//! cyclic code over R is `v C1 + (1 - v) C2` for cyclic Z4 codes `C1`, `C2`.
//! An element `a + b v` has components `a + b` (at v = 1) and `a` (at v = 0).
//!
//! The Gray map sends `a + b v` to `(a, a + 2b)`. It is Z4-linear but not
//! injective: its kernel is `{2 b v}`. Parameters of a Gray image are those of
//! the image set, so kernel elements never count as nonzero codewords.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::codes_z4::{check_cap, code_of_generator, span_of_generator, CyclicCodeZ4, GeneratorSpan};
use crate::cyclotomic::FactorTable;
use crate::error::{Error, Result};
use crate::packed::{BinaryBasis, PackedZ4};
use crate::z4poly::Z4Poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RElement {
    pub a: u8,
    pub b: u8,
}

impl RElement {
    pub const ZERO: RElement = RElement { a: 0, b: 0 };
    pub const ONE: RElement = RElement { a: 1, b: 0 };
    pub const V: RElement = RElement { a: 0, b: 1 };
    /// `1 - v`, stored as `1 + 3v`.
    pub const ONE_MINUS_V: RElement = RElement { a: 1, b: 3 };

    pub fn new(a: u8, b: u8) -> Self {
        Self { a: a & 3, b: b & 3 }
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }

    pub fn neg(self) -> Self {
        Self::new(4 - self.a, 4 - self.b)
    }

    /// `(a + bv)(c + dv) = ac + (ad + bc + bd) v`.
    pub fn mul(self, o: Self) -> Self {
        Self::new(self.a * o.a, self.a * o.b + self.b * o.a + self.b * o.b)
    }

    pub fn gray(self) -> (u8, u8) {
        (self.a, (self.a + 2 * self.b) & 3)
    }

    pub fn lee_weight(self) -> u32 {
        let (x, y) = self.gray();
        lee_z4(x) + lee_z4(y)
    }
}

pub fn lee_z4(t: u8) -> u32 {
    let t = t & 3;
    t.min(4 - t) as u32
}

pub fn lee_weight_r(x: RElement) -> u32 {
    x.lee_weight()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GrayLayout {
    /// `(a_0..a_{n-1}, a_0 + 2 b_0 .. a_{n-1} + 2 b_{n-1})`
    #[default]
    Block,
    /// `(a_0, a_0 + 2 b_0, a_1, ...)`
    Interleaved,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RWord {
    pub symbols: Vec<RElement>,
}

impl RWord {
    pub fn zero(n: usize) -> Self {
        Self { symbols: vec![RElement::ZERO; n] }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|s| *s == RElement::ZERO)
    }

    pub fn from_parts(a: &[u8], b: &[u8]) -> Self {
        assert_eq!(a.len(), b.len());
        Self { symbols: a.iter().zip(b).map(|(&a, &b)| RElement::new(a, b)).collect() }
    }

    /// `v w1 + (1 - v) w2`.
    pub fn from_components(w1: &[u8], w2: &[u8]) -> Self {
        assert_eq!(w1.len(), w2.len());
        Self {
            symbols: w1
                .iter()
                .zip(w2)
                .map(|(&x, &y)| RElement::new(y, x + 4 - (y & 3)))
                .collect(),
        }
    }

    pub fn a_part(&self) -> Vec<u8> {
        self.symbols.iter().map(|s| s.a).collect()
    }

    pub fn b_part(&self) -> Vec<u8> {
        self.symbols.iter().map(|s| s.b).collect()
    }

    /// The v-component `a + b`.
    pub fn eps1(&self) -> Vec<u8> {
        self.symbols.iter().map(|s| (s.a + s.b) & 3).collect()
    }

    /// The (1 - v)-component `a`.
    pub fn eps2(&self) -> Vec<u8> {
        self.a_part()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { symbols: self.symbols.iter().zip(&o.symbols).map(|(x, y)| x.add(*y)).collect() }
    }

    pub fn scale(&self, c: RElement) -> Self {
        Self { symbols: self.symbols.iter().map(|s| c.mul(*s)).collect() }
    }

    pub fn inner(&self, o: &Self) -> RElement {
        self.symbols
            .iter()
            .zip(&o.symbols)
            .fold(RElement::ZERO, |acc, (x, y)| acc.add(x.mul(*y)))
    }

    pub fn lee_weight(&self) -> u32 {
        self.symbols.iter().map(|s| s.lee_weight()).sum()
    }

    pub fn gray_map(&self, layout: GrayLayout) -> Vec<u8> {
        let n = self.len();
        let mut out = vec![0u8; 2 * n];
        for (i, s) in self.symbols.iter().enumerate() {
            let (x, y) = s.gray();
            match layout {
                GrayLayout::Block => {
                    out[i] = x;
                    out[i + n] = y;
                }
                GrayLayout::Interleaved => {
                    out[2 * i] = x;
                    out[2 * i + 1] = y;
                }
            }
        }
        out
    }

    pub fn packed(&self) -> PackedR {
        PackedR { a: PackedZ4::from_symbols(&self.a_part()), b: PackedZ4::from_symbols(&self.b_part()) }
    }
}

pub fn gray_map(w: &RWord) -> Vec<u8> {
    w.gray_map(GrayLayout::Block)
}

/// One right cyclic shift.
pub fn cyclic_shift_r(w: &RWord) -> RWord {
    let mut symbols = w.symbols.clone();
    symbols.rotate_right(1);
    RWord { symbols }
}

/// One right cyclic shift of a plain Z4 word.
pub fn cyclic_shift_z4(g: &[u8]) -> Vec<u8> {
    let mut out = g.to_vec();
    out.rotate_right(1);
    out
}

/// The shift that moves each block of a block-layout Gray word one step,
/// which is two steps of the interleaved order.
pub fn double_shift(g: &[u8], layout: GrayLayout) -> Vec<u8> {
    match layout {
        GrayLayout::Interleaved => cyclic_shift_z4(&cyclic_shift_z4(g)),
        GrayLayout::Block => {
            let n = g.len() / 2;
            let mut out = cyclic_shift_z4(&g[..n]);
            out.extend(cyclic_shift_z4(&g[n..]));
            out
        }
    }
}

impl fmt::Display for RWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = |v: Vec<u8>| v.iter().map(|d| char::from(b'0' + d)).collect::<String>();
        write!(f, "({})+v({})", digits(self.a_part()), digits(self.b_part()))
    }
}

/// Parses `(digits)+v(digits)`; whitespace anywhere is ignored.
pub fn parse_r_generator(text: &str) -> Result<RWord> {
    let bad = || Error::MalformedGenerator(text.to_string());
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = s.strip_prefix('(').ok_or_else(bad)?;
    let (a, rest) = rest.split_once(")+v(").ok_or_else(bad)?;
    let b = rest.strip_suffix(')').ok_or_else(bad)?;
    let digits = |t: &str| -> Result<Vec<u8>> {
        t.chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(bad()),
            })
            .collect()
    };
    let (a, b) = (digits(a)?, digits(b)?);
    if a.is_empty() || a.len() != b.len() {
        return Err(bad());
    }
    Ok(RWord::from_parts(&a, &b))
}

impl FromStr for RWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_r_generator(s)
    }
}

/// An R word as two bit-sliced planes, `a + b v`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedR {
    pub a: PackedZ4,
    pub b: PackedZ4,
}

impl PackedR {
    pub fn from_components(w1: PackedZ4, w2: PackedZ4) -> Self {
        Self { a: w2, b: w1.sub(w2) }
    }

    pub fn add(self, o: Self) -> Self {
        Self { a: self.a.add(o.a), b: self.b.add(o.b) }
    }

    pub fn rotate(self, n: usize) -> Self {
        Self { a: self.a.rotate(n), b: self.b.rotate(n) }
    }

    /// The R-valued standard inner product, straight from `v^2 = v`.
    pub fn inner(self, o: Self) -> RElement {
        let ac = self.a.dot(o.a);
        let cross = self.a.dot(o.b) + self.b.dot(o.a) + self.b.dot(o.b);
        RElement::new(ac, cross)
    }

    pub fn unpack(self, n: usize) -> RWord {
        RWord::from_parts(&self.a.to_symbols(n), &self.b.to_symbols(n))
    }

    /// Block-layout Gray image of length `2n`.
    pub fn gray(self, n: usize) -> PackedZ4 {
        let second = self.a.add(self.b.double());
        PackedZ4 { lo: self.a.lo | second.lo << n, hi: self.a.hi | second.hi << n }
    }
}

/// `(k1, k2)`: type `4^k1 2^k2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HullTypeR {
    pub k1: usize,
    pub k2: usize,
}

impl HullTypeR {
    pub fn new(k1: usize, k2: usize) -> Self {
        Self { k1, k2 }
    }

    pub fn dim2(&self) -> usize {
        2 * self.k1 + self.k2
    }
}

impl fmt::Display for HullTypeR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "4^{} 2^{}", self.k1, self.k2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Length, type and minimum Lee distance of a Gray image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GrayParams {
    pub length: usize,
    pub k1: usize,
    pub k2: usize,
    pub distance: Distance,
}

impl fmt::Display for GrayParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, 4^{} 2^{}, {})", self.length, self.k1, self.k2, self.distance)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicCodeR {
    pub c1: CyclicCodeZ4,
    pub c2: CyclicCodeZ4,
}

pub fn make_code_r(c1: CyclicCodeZ4, c2: CyclicCodeZ4) -> Result<CyclicCodeR> {
    CyclicCodeR::new(c1, c2)
}

impl CyclicCodeR {
    pub fn new(c1: CyclicCodeZ4, c2: CyclicCodeZ4) -> Result<Self> {
        if c1.table().n != c2.table().n {
            return Err(Error::TableMismatch);
        }
        Ok(Self { c1, c2 })
    }

    /// Every code over R of the table's length: all pairs, `c1` varying fastest.
    pub fn all(table: &Arc<FactorTable>) -> Vec<Self> {
        let codes = CyclicCodeZ4::all(table);
        codes
            .iter()
            .flat_map(|c2| codes.iter().map(move |c1| Self { c1: c1.clone(), c2: c2.clone() }))
            .collect()
    }

    pub fn table(&self) -> &Arc<FactorTable> {
        self.c1.table()
    }

    pub fn length(&self) -> usize {
        self.c1.length()
    }

    pub fn dim2(&self) -> usize {
        self.c1.dim2() + self.c2.dim2()
    }

    /// Type as a module: units of order 4 come from either component.
    pub fn code_type(&self) -> HullTypeR {
        let (a1, b1) = self.c1.code_type();
        let (a2, b2) = self.c2.code_type();
        HullTypeR::new(a1 + a2, b1 + b2)
    }

    pub fn dual(&self) -> Self {
        Self { c1: self.c1.dual(), c2: self.c2.dual() }
    }

    pub fn hull(&self) -> (Self, HullTypeR) {
        let h = Self { c1: self.c1.hull(), c2: self.c2.hull() };
        let t = h.code_type();
        (h, t)
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// `(v p1 q1, 2 v p1, (1 - v) p2 q2, 2 (1 - v) p2)` as length-n words.
    pub fn generators(&self) -> [RWord; 4] {
        let n = self.length();
        let word = |p: &Z4Poly| p.fold_cyclic(n);
        let zero = vec![0u8; n];
        let (g1, t1) = self.c1.generators();
        let (g2, t2) = self.c2.generators();
        [
            RWord::from_components(&word(&g1), &zero),
            RWord::from_components(&word(&t1), &zero),
            RWord::from_components(&zero, &word(&g2)),
            RWord::from_components(&zero, &word(&t2)),
        ]
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.generators().iter().map(|g| g.to_string()).collect()
    }

    fn check_length(&self) -> Result<()> {
        let n = self.length();
        if 2 * n > crate::packed::MAX_LEN {
            return Err(Error::LengthTooLong(n));
        }
        Ok(())
    }

    /// Basis of the code itself as packed R words: component-1 basis words
    /// `w` become `v w`, component-2 words become `(1 - v) w`.
    pub fn binary_basis_r(&self) -> Result<Vec<PackedR>> {
        let b1 = self.c1.binary_basis()?;
        let b2 = self.c2.binary_basis()?;
        Ok(b1
            .gens()
            .iter()
            .map(|&w| PackedR::from_components(w, PackedZ4::ZERO))
            .chain(b2.gens().iter().map(|&w| PackedR::from_components(PackedZ4::ZERO, w)))
            .collect())
    }

    pub fn enumerate_codewords_r(&self, cap: u64) -> Result<Vec<RWord>> {
        let n = self.length();
        Ok(self.enumerate_packed_r(cap)?.into_iter().map(|w| w.unpack(n)).collect())
    }

    pub fn enumerate_packed_r(&self, cap: u64) -> Result<Vec<PackedR>> {
        check_cap(self.dim2() as u32, cap)?;
        let w1 = self.c1.enumerate_codewords(cap)?;
        let w2 = self.c2.enumerate_codewords(cap)?;
        let mut out = Vec::with_capacity(w1.len() * w2.len());
        for &y in &w2 {
            for &x in &w1 {
                out.push(PackedR::from_components(x, y));
            }
        }
        Ok(out)
    }

    /// Binary basis of the Gray image in block layout. With
    /// `c = v w1 + (1 - v) w2` the image is `(w2, 2 w1 - w2)`, so component 1
    /// contributes `(0, 2 x^i p1 q1)` for `i < deg r1` and component 2
    /// contributes `(w, -w)` for each of its basis words.
    pub fn gray_basis(&self) -> Result<BinaryBasis> {
        self.check_length()?;
        let n = self.length();
        let (k4, _) = self.c1.code_type();
        let (g1, _) = self.c1.generators();
        let mut gens = Vec::new();
        for i in 0..k4 {
            let mut c = vec![0u8; i];
            c.extend_from_slice(g1.coeffs());
            let w = PackedZ4::from_symbols(&Z4Poly::new(c).fold_cyclic(n));
            gens.push(PackedR::from_components(w, PackedZ4::ZERO).gray(n));
        }
        for &w in self.c2.binary_basis()?.gens() {
            gens.push(PackedR::from_components(PackedZ4::ZERO, w).gray(n));
        }
        Ok(BinaryBasis::new(gens))
    }

    /// Type of the Gray image: `4^deg r2 2^(deg r1 + deg q2)`.
    pub fn gray_type(&self) -> HullTypeR {
        let (a1, _) = self.c1.code_type();
        let (a2, b2) = self.c2.code_type();
        HullTypeR::new(a2, a1 + b2)
    }

    /// Minimum Lee weight over the nonzero words of the Gray image.
    pub fn min_lee_distance(&self, cap: u64, workers: usize) -> Result<Distance> {
        let basis = self.gray_basis()?;
        check_cap(basis.log2_size(), cap)?;
        Ok(match basis.min_nonzero(workers, PackedZ4::lee_weight) {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        })
    }

    pub fn gray_params(&self, cap: u64, workers: usize) -> Result<GrayParams> {
        let t = self.gray_type();
        Ok(GrayParams {
            length: 2 * self.length(),
            k1: t.k1,
            k2: t.k2,
            distance: self.min_lee_distance(cap, workers)?,
        })
    }

    /// All R words `x^i g` for the four generators `g`.
    pub fn generator_shifts_r(&self) -> Vec<PackedR> {
        let n = self.length();
        let mut out = Vec::new();
        for g in self.generators() {
            let mut w = g.packed();
            for _ in 0..n {
                out.push(w);
                w = w.rotate(n);
            }
        }
        out
    }
}

/// `C ∩ C^perp` by enumeration. Whichever of `C`, `C^perp` is smaller is
/// enumerated and filtered by R-orthogonality to its own generators, which
/// leaves exactly the words of `D ∩ D^perp` for `D` the enumerated code.
pub fn brute_hull_r(c: &CyclicCodeR, cap: u64) -> Result<HashSet<PackedR>> {
    let dual = c.dual();
    let d = if c.dim2() <= dual.dim2() { c } else { &dual };
    let gens = d.generator_shifts_r();
    Ok(d
        .enumerate_packed_r(cap)?
        .into_iter()
        .filter(|x| gens.iter().all(|y| x.inner(*y) == RElement::ZERO))
        .collect())
}

/// Component spans of the cyclic R-module generated by one word, with
/// `span(w) = v span(eps1) + (1 - v) span(eps2)`.
#[derive(Clone, Debug)]
pub struct RGeneratorSpan {
    pub code: CyclicCodeR,
    pub span1: GeneratorSpan,
    pub span2: GeneratorSpan,
}

pub fn span_of_r_generator(table: &Arc<FactorTable>, w: &RWord) -> Result<RGeneratorSpan> {
    let (e1, e2) = (w.eps1(), w.eps2());
    let code = CyclicCodeR::new(code_of_generator(table, &e1)?, code_of_generator(table, &e2)?)?;
    Ok(RGeneratorSpan {
        code,
        span1: span_of_generator(table, &e1)?,
        span2: span_of_generator(table, &e2)?,
    })
}
