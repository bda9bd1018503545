//! Cyclic codes of odd length over Z4.
//!
//! A cyclic code is the ideal `<f g, 2 f>` of `Z4[x]/(x^n - 1)` where
//! `f g h = x^n - 1`; it is stored as the ordered partition `(f, g, h)` of
//! the factor set. It has `4^deg h * 2^deg g` codewords.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{DivisorMask, FactorTable};
use crate::error::{Error, Result};
use crate::howell::HowellForm;
use crate::packed::{BinaryBasis, PackedZ4, MAX_LEN};
use crate::z4poly::Z4Poly;

/// Default enumeration cap, `2^24` codewords.
pub const DEFAULT_MAX_CODEWORDS: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Factor of `f`: the code vanishes there.
    F,
    /// Factor of `g`: the code is `2 * (residue ring)` there.
    G,
    /// Factor of `h`: the code is the whole residue ring there.
    H,
}

#[derive(Clone)]
pub struct CyclicCodeZ4 {
    table: Arc<FactorTable>,
    f: DivisorMask,
    g: DivisorMask,
    h: DivisorMask,
}

impl PartialEq for CyclicCodeZ4 {
    fn eq(&self, other: &Self) -> bool {
        self.table.n == other.table.n && self.f == other.f && self.g == other.g
    }
}

impl Eq for CyclicCodeZ4 {}

impl std::hash::Hash for CyclicCodeZ4 {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.table.n, self.f.bits(), self.g.bits()).hash(state);
    }
}

impl fmt::Debug for CyclicCodeZ4 {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            fm,
            "CyclicCodeZ4(n={}, f={}, g={}, h={})",
            self.table.n,
            self.f_poly(),
            self.g_poly(),
            self.h_poly()
        )
    }
}

impl CyclicCodeZ4 {
    /// Builds the code from one role per factor, in table order.
    pub fn make_code(table: &Arc<FactorTable>, assignment: &[Role]) -> Result<Self> {
        if assignment.len() < table.len() {
            return Err(Error::IncompleteAssignment(assignment.len()));
        }
        let bits_of = |role: Role| {
            assignment[..table.len()]
                .iter()
                .enumerate()
                .filter(|(_, &r)| r == role)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        };
        Ok(Self {
            table: Arc::clone(table),
            f: table.mask(bits_of(Role::F)),
            g: table.mask(bits_of(Role::G)),
            h: table.mask(bits_of(Role::H)),
        })
    }

    /// Builds the code from `f` and `g`; `h` is the complement.
    pub fn from_masks(table: &Arc<FactorTable>, f: DivisorMask, g: DivisorMask) -> Result<Self> {
        let h = f.lcm(&g)?.complement();
        if !f.is_disjoint(&g) {
            let (fp, gp) = (table.polynomial(&f)?, table.polynomial(&g)?);
            return Err(Error::OverlappingDivisors(fp.to_string(), gp.to_string()));
        }
        table.polynomial(&h)?;
        Ok(Self { table: Arc::clone(table), f, g, h })
    }

    /// Builds the code from the polynomials `f` and `g`.
    pub fn from_polys(table: &Arc<FactorTable>, f: &Z4Poly, g: &Z4Poly) -> Result<Self> {
        Self::from_masks(table, table.mask_of(f)?, table.mask_of(g)?)
    }

    /// Every cyclic code of the table's length, in a fixed order.
    pub fn all(table: &Arc<FactorTable>) -> Vec<Self> {
        let m = table.len();
        let total = 3usize.pow(m as u32);
        (0..total)
            .map(|mut idx| {
                let roles: Vec<Role> = (0..m)
                    .map(|_| {
                        let r = [Role::F, Role::G, Role::H][idx % 3];
                        idx /= 3;
                        r
                    })
                    .collect();
                Self::make_code(table, &roles).expect("complete assignment")
            })
            .collect()
    }

    pub fn whole_space(table: &Arc<FactorTable>) -> Self {
        Self::make_code(table, &vec![Role::H; table.len()]).unwrap()
    }

    pub fn zero_code(table: &Arc<FactorTable>) -> Self {
        Self::make_code(table, &vec![Role::F; table.len()]).unwrap()
    }

    pub fn twice_space(table: &Arc<FactorTable>) -> Self {
        Self::make_code(table, &vec![Role::G; table.len()]).unwrap()
    }

    pub fn table(&self) -> &Arc<FactorTable> {
        &self.table
    }

    pub fn length(&self) -> usize {
        self.table.length()
    }

    pub fn f(&self) -> DivisorMask {
        self.f
    }

    pub fn g(&self) -> DivisorMask {
        self.g
    }

    pub fn h(&self) -> DivisorMask {
        self.h
    }

    pub fn role(&self, i: usize) -> Role {
        if self.f.contains(i) {
            Role::F
        } else if self.g.contains(i) {
            Role::G
        } else {
            Role::H
        }
    }

    pub fn f_poly(&self) -> Z4Poly {
        self.table.polynomial(&self.f).unwrap()
    }

    pub fn g_poly(&self) -> Z4Poly {
        self.table.polynomial(&self.g).unwrap()
    }

    pub fn h_poly(&self) -> Z4Poly {
        self.table.polynomial(&self.h).unwrap()
    }

    /// The generator pair `(f g, 2 f)`.
    pub fn generators(&self) -> (Z4Poly, Z4Poly) {
        let f = self.f_poly();
        (&f * &self.g_poly(), f.scale(2))
    }

    /// `(deg h, deg g)`: the code has type `4^deg h 2^deg g`.
    pub fn code_type(&self) -> (usize, usize) {
        (self.table.degree(&self.h), self.table.degree(&self.g))
    }

    /// `log2 |C| = 2 deg h + deg g`.
    pub fn dim2(&self) -> usize {
        let (k4, k2) = self.code_type();
        2 * k4 + k2
    }

    /// `C^perp = <h* g*, 2 h*>`.
    pub fn dual(&self) -> Self {
        let star = |m: &DivisorMask| self.table.reciprocal(m).unwrap();
        Self { table: Arc::clone(&self.table), f: star(&self.h), g: star(&self.g), h: star(&self.f) }
    }

    /// `Hull(C) = <lcm(f g, h* g*), 2 lcm(f, h*)>`, of type
    /// `4^deg H 2^deg G` with `H = gcd(h, f*)`.
    pub fn hull(&self) -> Self {
        let star = |m: &DivisorMask| self.table.reciprocal(m).unwrap();
        let f = self.f.lcm(&star(&self.h)).unwrap();
        let h = self.h.gcd(&star(&self.f)).unwrap();
        let g = f.lcm(&h).unwrap().complement();
        Self { table: Arc::clone(&self.table), f, g, h }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.hull() == *self
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// Binary basis of the codeword set: `x^i f g` and `2 x^i f g` for
    /// `i < deg h`, and `2 x^i f` for `i < deg g`.
    pub fn binary_basis(&self) -> Result<BinaryBasis> {
        let n = self.length();
        if n > MAX_LEN {
            return Err(Error::LengthTooLong(n));
        }
        let (k4, k2) = self.code_type();
        let (fg, two_f) = self.generators();
        let mut gens = Vec::with_capacity(2 * k4 + k2);
        let shifted = |p: &Z4Poly, i: usize| {
            let mut c = vec![0u8; i];
            c.extend_from_slice(p.coeffs());
            PackedZ4::from_symbols(&Z4Poly::new(c).fold_cyclic(n))
        };
        for i in 0..k4 {
            let w = shifted(&fg, i);
            gens.push(w);
            gens.push(w.double());
        }
        for i in 0..k2 {
            gens.push(shifted(&two_f, i));
        }
        Ok(BinaryBasis::new(gens))
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        check_cap(self.dim2() as u32, cap)
    }

    /// All codewords, each once: `u f g + 2 w f mod (x^n - 1)` with
    /// `deg u < deg h` over Z4 and `deg w < deg g` over {0, 1}.
    pub fn enumerate_codewords(&self, cap: u64) -> Result<Vec<PackedZ4>> {
        self.check_cap(cap)?;
        Ok(self.binary_basis()?.elements())
    }

    /// Shards the enumeration over `workers` contiguous index ranges.
    pub fn enumerate_codewords_sharded(&self, cap: u64, workers: usize) -> Result<Vec<Vec<PackedZ4>>> {
        self.check_cap(cap)?;
        let basis = self.binary_basis()?;
        let total = basis.size();
        let workers = (workers.max(1) as u64).min(total);
        let chunk = total.div_ceil(workers);
        Ok((0..workers)
            .map(|i| {
                let mut out = Vec::new();
                basis.for_each_in_range(i * chunk, ((i + 1) * chunk).min(total), |w| out.push(w));
                out
            })
            .collect())
    }

    /// The codewords of all the code's generators and their cyclic shifts.
    pub fn generator_shifts(&self) -> Vec<PackedZ4> {
        let n = self.length();
        let (fg, two_f) = self.generators();
        let mut out = Vec::with_capacity(2 * n);
        for p in [fg, two_f] {
            let mut w = PackedZ4::from_symbols(&p.fold_cyclic(n));
            for _ in 0..n {
                out.push(w);
                w = w.rotate(n);
            }
        }
        out
    }
}

pub(crate) fn check_cap(log2_size: u32, cap: u64) -> Result<()> {
    if log2_size >= 64 || (1u64 << log2_size) > cap {
        return Err(Error::CodeTooLarge { log2_size, cap });
    }
    Ok(())
}

/// `C ∩ C^perp` computed by enumerating both codes and intersecting.
pub fn brute_hull(c: &CyclicCodeZ4, cap: u64) -> Result<HashSet<PackedZ4>> {
    let code: HashSet<PackedZ4> = c.enumerate_codewords(cap)?.into_iter().collect();
    let dual = c.dual().enumerate_codewords(cap)?;
    Ok(dual.into_iter().filter(|w| code.contains(w)).collect())
}

/// The cyclic submodule generated by one word, from the Howell form of its
/// `n` cyclic shifts.
#[derive(Clone, Debug)]
pub struct GeneratorSpan {
    pub length: usize,
    pub howell: HowellForm,
}

impl GeneratorSpan {
    pub fn dim2(&self) -> u32 {
        self.howell.log2_size()
    }

    pub fn codewords(&self, cap: u64) -> Result<Vec<PackedZ4>> {
        check_cap(self.dim2(), cap)?;
        Ok(self.howell.binary_basis().elements())
    }
}

fn shift_rows(word: &[u8]) -> Vec<Vec<u8>> {
    let n = word.len();
    (0..n)
        .map(|s| (0..n).map(|i| word[(i + n - s) % n] & 3).collect())
        .collect()
}

pub fn span_of_generator(table: &FactorTable, word: &[u8]) -> Result<GeneratorSpan> {
    let n = table.length();
    if word.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: word.len() });
    }
    Ok(GeneratorSpan { length: n, howell: HowellForm::new(shift_rows(word), n) })
}

/// The cyclic code `(a(x))` as a factor partition: modulo each factor `F`,
/// the residue of `a` is zero (role F), nonzero but even (role G) or a unit
/// of the Galois ring `Z4[x]/(F)` (role H).
pub fn code_of_generator(table: &Arc<FactorTable>, word: &[u8]) -> Result<CyclicCodeZ4> {
    let n = table.length();
    if word.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: word.len() });
    }
    let a = Z4Poly::new(word.to_vec());
    let roles: Vec<Role> = table
        .factors
        .iter()
        .map(|fac| {
            let r = a.rem(&fac.poly).expect("factors are monic");
            if r.is_zero() {
                Role::F
            } else if r.coeffs().iter().all(|c| c % 2 == 0) {
                Role::G
            } else {
                Role::H
            }
        })
        .collect();
    CyclicCodeZ4::make_code(table, &roles)
}
