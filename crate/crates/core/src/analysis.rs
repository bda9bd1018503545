//! Hull types of cyclic codes over R and the average 2-dimension of hulls.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::codes_ring::{CyclicCodeR, HullTypeR};
use crate::codes_z4::{CyclicCodeZ4, Role};
use crate::cyclotomic::{compute_b, factor_xn_minus_1, in_n2, FactorClass, FactorTable};
use crate::error::{Error, Result};

/// Exact rational, always reduced with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(v: i64) -> Self {
        Rat(BigRational::from_integer(v.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// `"490/9"` or `"102"`; the value is reduced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedRow(s.to_string());
        let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let d = int(d)?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(int(n)?, d)
            }
            None => BigRational::from_integer(int(s)?),
        };
        Ok(Rat(r))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_odd(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    Ok(())
}

/// The hull types sharing one value of `k1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeGroup {
    pub k1: usize,
    /// Achievable `k2`, ascending.
    pub k2: Vec<usize>,
    /// Number of coefficient choices `(a_1j, a_2j)` that give this `k1`.
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeEnumeration {
    pub n: u64,
    pub groups: Vec<TypeGroup>,
}

impl TypeEnumeration {
    pub fn contains(&self, t: HullTypeR) -> bool {
        self.groups
            .iter()
            .any(|g| g.k1 == t.k1 && g.k2.binary_search(&t.k2).is_ok())
    }

    pub fn types(&self) -> impl Iterator<Item = HullTypeR> + '_ {
        self.groups
            .iter()
            .flat_map(|g| g.k2.iter().map(move |&k2| HullTypeR::new(g.k1, k2)))
    }
}

impl fmt::Display for TypeEnumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            write!(f, "k1={}: {}", g.k1, format_ranges(&g.k2))?;
            if g.multiplicity > 1 {
                write!(f, " (x{})", g.multiplicity)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `[0,1,2,5]` as `0..2, 5`.
pub fn format_ranges(values: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let start = values[i];
        while i + 1 < values.len() && values[i + 1] == values[i] + 1 {
            i += 1;
        }
        parts.push(if values[i] == start {
            start.to_string()
        } else {
            format!("{}..{}", start, values[i])
        });
        i += 1;
    }
    parts.join(", ")
}

// k2 sets as bitsets over 0..=2n
type K2Set = Vec<bool>;

fn sumset(a: &K2Set, step: usize, max_mult: usize) -> K2Set {
    let mut out = vec![false; a.len()];
    for (x, _) in a.iter().enumerate().filter(|(_, &v)| v) {
        for m in 0..=max_mult {
            if x + m * step < out.len() {
                out[x + m * step] = true;
            }
        }
    }
    out
}

/// All achievable hull types at length `n`: with `o = ord_j(2)`,
/// `k1 = sum o (a_1j + a_2j)` over `j` outside N2 and
/// `k2 = sum o (b_1j + b_2j) + sum o (c_1j + c_2j)`, where
/// `a_kj <= beta(j)`, `b_kj <= gamma(j)` and `c_kj <= 2 (beta(j) - a_kj)`.
pub fn enumerate_hull_types(n: u64) -> Result<TypeEnumeration> {
    check_odd(n)?;
    let table = factor_xn_minus_1(n)?;
    let width = 2 * n as usize + 1;
    let mut base = vec![false; width];
    base[0] = true;
    for s in table.divisor_stats.iter().filter(|s| s.in_n2) {
        let gamma = s.gamma.expect("gamma is set on N2 divisors") as usize;
        base = sumset(&base, s.ord as usize, 2 * gamma);
    }
    // k1 -> (k2 set, multiplicity)
    let mut state: BTreeMap<usize, (K2Set, u64)> = BTreeMap::from([(0, (base, 1))]);
    for s in table.divisor_stats.iter().filter(|s| !s.in_n2) {
        let beta = s.beta.expect("beta is set outside N2") as usize;
        let o = s.ord as usize;
        let mut next: BTreeMap<usize, (K2Set, u64)> = BTreeMap::new();
        for (k1, (set, mult)) in &state {
            for a1 in 0..=beta {
                for a2 in 0..=beta {
                    let c_max = 2 * (beta - a1) + 2 * (beta - a2);
                    let grown = sumset(set, o, c_max);
                    let entry = next
                        .entry(k1 + o * (a1 + a2))
                        .or_insert_with(|| (vec![false; width], 0));
                    entry.0.iter_mut().zip(&grown).for_each(|(x, &y)| *x |= y);
                    entry.1 += mult;
                }
            }
        }
        state = next;
    }
    let groups = state
        .into_iter()
        .map(|(k1, (set, multiplicity))| TypeGroup {
            k1,
            k2: set.iter().enumerate().filter(|(_, &v)| v).map(|(i, _)| i).collect(),
            multiplicity,
        })
        .collect();
    Ok(TypeEnumeration { n, groups })
}

// One reciprocal pair or self-reciprocal factor, within one component.
struct Unit {
    factors: (usize, Option<usize>),
    degree: usize,
}

// (role of the factor, role of its partner, k1 gain, k2 gain in degrees)
fn unit_options(paired: bool) -> &'static [(Role, Role, usize, usize)] {
    if paired {
        &[
            (Role::F, Role::F, 0, 0),
            (Role::G, Role::F, 0, 1),
            (Role::G, Role::G, 0, 2),
            (Role::H, Role::F, 1, 0),
        ]
    } else {
        &[(Role::F, Role::F, 0, 0), (Role::G, Role::G, 0, 1)]
    }
}

/// Whether `t` is an achievable hull type at length `n`, and if so a code
/// whose hull has that type.
///
/// The witness is built greedily: units (self-reciprocal factors, then
/// reciprocal pairs, component 1 before component 2, lowest index first)
/// take the first role choice from which the remaining type is still
/// reachable.
pub fn achievable_check(n: u64, t: HullTypeR) -> Result<Option<CyclicCodeR>> {
    check_odd(n)?;
    let table = Arc::new(factor_xn_minus_1(n)?);
    let m = table.len();
    let mut units = Vec::new();
    for _component in 0..2 {
        for (i, fac) in table.factors.iter().enumerate() {
            match fac.class {
                FactorClass::SelfReciprocal => units.push(Unit { factors: (i, None), degree: fac.degree() }),
                FactorClass::PairedWith(p) if p > i => {
                    units.push(Unit { factors: (i, Some(p)), degree: fac.degree() })
                }
                FactorClass::PairedWith(_) => {}
            }
        }
    }
    let per_component = units.len() / 2;
    // reach[u] = (k1, k2) totals achievable by units u..
    let (w1, w2) = (n as usize + 1, 2 * n as usize + 1);
    let mut reach = vec![vec![false; w1 * w2]; units.len() + 1];
    reach[units.len()][0] = true;
    for u in (0..units.len()).rev() {
        let unit = &units[u];
        for idx in 0..w1 * w2 {
            if !reach[u + 1][idx] {
                continue;
            }
            let (k1, k2) = (idx / w2, idx % w2);
            for &(_, _, g1, g2) in unit_options(unit.factors.1.is_some()) {
                let (a, b) = (k1 + g1 * unit.degree, k2 + g2 * unit.degree);
                if a < w1 && b < w2 {
                    reach[u][a * w2 + b] = true;
                }
            }
        }
    }
    if t.k1 >= w1 || t.k2 >= w2 || !reach[0][t.k1 * w2 + t.k2] {
        return Ok(None);
    }
    let mut roles = [vec![Role::F; m], vec![Role::F; m]];
    let (mut k1, mut k2) = (t.k1, t.k2);
    for (u, unit) in units.iter().enumerate() {
        let component = usize::from(u >= per_component);
        let choice = unit_options(unit.factors.1.is_some()).iter().find(|&&(_, _, g1, g2)| {
            let (d1, d2) = (g1 * unit.degree, g2 * unit.degree);
            d1 <= k1 && d2 <= k2 && reach[u + 1][(k1 - d1) * w2 + (k2 - d2)]
        });
        let &(r, rp, g1, g2) = choice.expect("reachability table is consistent");
        roles[component][unit.factors.0] = r;
        if let Some(p) = unit.factors.1 {
            roles[component][p] = rp;
        }
        k1 -= g1 * unit.degree;
        k2 -= g2 * unit.degree;
    }
    let [r1, r2] = roles;
    let code = CyclicCodeR::new(
        CyclicCodeZ4::make_code(&table, &r1)?,
        CyclicCodeZ4::make_code(&table, &r2)?,
    )?;
    debug_assert_eq!(code.hull().1, t);
    Ok(Some(code))
}

/// `E(n) = (10n - 4 B_n) / 9`, the mean 2-dimension of the hull of a cyclic
/// code of length `n` over R.
pub fn average_dim2_formula(n: u64) -> Result<Rat> {
    check_odd(n)?;
    let b = compute_b(n)? as i64;
    Ok(Rat::new(10 * n as i64 - 4 * b, 9))
}

/// `(5n - 2 B_n) / 9`, the same mean over cyclic codes over Z4.
pub fn average_dim2_formula_z4(n: u64) -> Result<Rat> {
    check_odd(n)?;
    let b = compute_b(n)? as i64;
    Ok(Rat::new(5 * n as i64 - 2 * b, 9))
}

/// Default cap on the number of codes averaged by brute force.
pub const DEFAULT_MAX_CODES: u128 = 1 << 24;

fn code_count(table: &FactorTable, per_code: u32, cap: u128) -> Result<u128> {
    let count = 3u128
        .checked_pow(per_code * table.len() as u32)
        .unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::TooManyCodes { count, cap });
    }
    Ok(count)
}

/// Mean of `dim2(hull(C))` over every code over R of length `n`, by sweeping
/// all component pairs. Pairs are split among `workers` by `c2`, and partial
/// sums are exact integers.
pub fn average_dim2_bruteforce(n: u64, cap: u128, workers: usize) -> Result<Rat> {
    check_odd(n)?;
    let table = Arc::new(factor_xn_minus_1(n)?);
    let count = code_count(&table, 2, cap)?;
    let codes = CyclicCodeZ4::all(&table);
    let workers = workers.clamp(1, codes.len());
    let chunk = codes.len().div_ceil(workers);
    let total: u128 = std::thread::scope(|s| {
        let handles: Vec<_> = codes
            .chunks(chunk)
            .map(|part| {
                let codes = &codes;
                s.spawn(move || {
                    let mut sum = 0u128;
                    for c2 in part {
                        for c1 in codes {
                            let c = CyclicCodeR { c1: c1.clone(), c2: c2.clone() };
                            sum += c.hull().1.dim2() as u128;
                        }
                    }
                    sum
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).sum()
    });
    Ok(Rat(BigRational::new(BigInt::from(total), BigInt::from(count))))
}

/// The Z4-level mean, for comparison with the R-level one.
pub fn average_dim2_bruteforce_z4(n: u64, cap: u128) -> Result<Rat> {
    check_odd(n)?;
    let table = Arc::new(factor_xn_minus_1(n)?);
    let count = code_count(&table, 1, cap)?;
    let total: usize = CyclicCodeZ4::all(&table).iter().map(|c| c.hull().dim2()).sum();
    Ok(Rat(BigRational::new(BigInt::from(total), BigInt::from(count))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub n: u64,
    pub dagger: bool,
    pub b: u64,
    pub e: Rat,
}

impl Serialize for Table1Row {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[allow(non_snake_case)]
        struct Row<'a> {
            n: u64,
            B: u64,
            E_num: String,
            E_den: String,
            E: &'a Rat,
            in_N2: bool,
        }
        Row {
            n: self.n,
            B: self.b,
            E_num: self.e.numer().to_string(),
            E_den: self.e.denom().to_string(),
            in_N2: self.dagger,
            E: &self.e,
        }
        .serialize(s)
    }
}

impl fmt::Display for Table1Row {
    /// `"55 15 490/9"`, with a trailing dagger when `n` is in N2.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.n, self.b, self.e)?;
        if self.dagger {
            write!(f, " †")?;
        }
        Ok(())
    }
}

pub fn table1_row(n: u64) -> Result<Table1Row> {
    Ok(Table1Row { n, dagger: in_n2(n)?, b: compute_b(n)?, e: average_dim2_formula(n)? })
}

pub fn table1(ns: impl IntoIterator<Item = u64>) -> Result<Vec<Table1Row>> {
    ns.into_iter().map(table1_row).collect()
}
