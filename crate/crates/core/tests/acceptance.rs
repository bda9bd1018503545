// Acceptance run. Each criterion prints one PASS/FAIL line with its detail.
// Built with `harness = false` so the lines always reach the output.
//
// Two criteria cannot pass against the published data; see KNOWN_UNATTAINABLE.
// They are still computed in full and reported as FAIL. The process exits
// nonzero if any other criterion fails, or if a known failure changes shape.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringhull::analysis::{
    achievable_check, average_dim2_bruteforce, average_dim2_formula, enumerate_hull_types,
    table1_row, Rat, DEFAULT_MAX_CODES,
};
use ringhull::codes_ring::{
    cyclic_shift_r, CyclicCodeR, GrayLayout, HullTypeR, PackedR, RWord,
};
use ringhull::codes_z4::CyclicCodeZ4;
use ringhull::cyclotomic::{factor_xn_minus_1, FactorTable};
use ringhull::packed::PackedZ4;
use ringhull::tables::{
    code_table, verify_code_table, verify_table1, RowReport, RowStatus,
};

const CAP: u64 = 1 << 24;

const BUDGET_FACTOR: Duration = Duration::from_secs(5);
const BUDGET_TABLE1: Duration = Duration::from_secs(1);
const BUDGET_Z4_HULLS: Duration = Duration::from_secs(30);
const BUDGET_R_HULLS: Duration = Duration::from_secs(120);

const GRAY_TRIALS: usize = 10_000;
const GRAY_MAX_N: usize = 15;
const GRAY_SEED: u64 = 0x5eed_2024;

const TABLE2_REQUIRED: usize = 8;
const TABLE3_REQUIRED: usize = 5;

/// Criteria that fail against the published data, with the observed outcome
/// that the run pins so a regression is still caught.
const KNOWN_UNATTAINABLE: [(usize, &str); 2] = [
    (3, "18 of 50 printed rows carry wrong B_n, dagger flags or E values"),
    (9, "only 7 Table 2 rows reproduce; 3 print factors that do not divide x^15 - 1"),
];
const TABLE1_OBSERVED_PASS: usize = 32;
const TABLE2_OBSERVED_PASS: usize = 7;
const TABLE3_OBSERVED_PASS: usize = 6;

struct Outcome {
    pass: bool,
    detail: String,
    /// For known failures: whether the observed numbers are the pinned ones.
    as_known: bool,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Outcome { pass, detail, as_known: true }
    }
}

fn within(t: Duration, budget: Duration) -> String {
    format!("{:.2}s of {}s", t.as_secs_f64(), budget.as_secs())
}

fn workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).max(4)
}

fn table(n: u64) -> Arc<FactorTable> {
    Arc::new(factor_xn_minus_1(n).unwrap())
}

// --- 1 ---------------------------------------------------------------------

fn mul_z4(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % 4;
        }
    }
    out
}

/// Binary polynomials of degree below 128 as bit masks.
fn deg2(p: u128) -> u32 {
    127 - p.leading_zeros()
}

fn rem2(mut a: u128, m: u128) -> u128 {
    while a != 0 && deg2(a) >= deg2(m) {
        a ^= m << (deg2(a) - deg2(m));
    }
    a
}

fn mulmod2(a: u128, b: u128, m: u128) -> u128 {
    let (mut a, mut b, mut out) = (rem2(a, m), b, 0u128);
    while b != 0 {
        if b & 1 == 1 {
            out ^= a;
        }
        b >>= 1;
        a = rem2(a << 1, m);
    }
    out
}

fn gcd2(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = rem2(a, b);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: `p` of degree d is irreducible iff `x^(2^d) = x mod p` and
/// `gcd(x^(2^(d/q)) - x, p) = 1` for every prime q dividing d.
fn irreducible_mod2(p: u128) -> bool {
    if p < 2 {
        return false;
    }
    let d = deg2(p);
    let frobenius = |k: u32| (0..k).fold(2u128, |y, _| mulmod2(y, y, p));
    let primes = (2..=d).filter(|q| d % q == 0 && (2..*q).all(|r| q % r != 0));
    rem2(frobenius(d) ^ 2, p) == 0 && primes.into_iter().all(|q| gcd2(p, frobenius(d / q) ^ 2) == 1)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in (1..=99u64).step_by(2) {
        let t = factor_xn_minus_1(n).unwrap();
        let product = t.factors.iter().fold(vec![1u8], |acc, f| mul_z4(&acc, f.poly.coeffs()));
        let mut expected = vec![0u8; n as usize + 1];
        expected[0] = 3;
        expected[n as usize] = 1;
        let degrees: usize = t.factors.iter().map(|f| f.poly.coeffs().len() - 1).sum();
        let irreducible = t.factors.iter().all(|f| {
            let bits = f.poly.coeffs().iter().rev().fold(0u128, |acc, c| (acc << 1) | u128::from(c & 1));
            irreducible_mod2(bits)
        });
        // control: x^n - 1 itself must be rejected
        let control = n == 1 || !irreducible_mod2((1u128 << n) | 1);
        if product != expected || degrees != n as usize || !irreducible || !control {
            bad.push(n);
        }
    }
    let t = start.elapsed();
    Outcome::new(
        bad.is_empty() && t < BUDGET_FACTOR,
        format!("50 odd n <= 99, bad lengths {bad:?}, {}", within(t, BUDGET_FACTOR)),
    )
}

// --- 2 ---------------------------------------------------------------------

/// Parses a descending sum such as `x^4 + 3x^3 + 2x^2 + 1` into ascending
/// coefficients, with `x - 1` read as `3 + x`.
fn parse_descending(s: &str) -> Vec<u8> {
    let s = s.replace(' ', "").replace('*', "").replace('-', "+-");
    let mut coeffs = vec![0i64; 8];
    for term in s.split('+').filter(|t| !t.is_empty()) {
        let (sign, term) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term),
        };
        let (c, e) = match term.split_once('x') {
            None => (term.parse::<i64>().unwrap(), 0),
            Some((c, e)) => {
                let c = if c.is_empty() { 1 } else { c.parse().unwrap() };
                let e = match e.strip_prefix('^') {
                    Some(e) => e.parse().unwrap(),
                    None => 1,
                };
                (c, e)
            }
        };
        coeffs[e] += sign * c;
    }
    let mut out: Vec<u8> = coeffs.iter().map(|c| c.rem_euclid(4) as u8).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn criterion_2() -> Outcome {
    let printed: [(u64, &[&str]); 2] = [
        (15, &["x - 1", "x^2 + x + 1", "x^4 + x^3 + x^2 + x + 1", "x^4 + 3x^3 + 2x^2 + 1", "x^4 + 2x^2 + 3x + 1"]),
        (
            21,
            &[
                "x - 1",
                "x^2 + x + 1",
                "x^6 + 2x^5 + 3x^4 + 3x^2 + x + 1",
                "x^6 + x^5 + 3x^4 + 3x^2 + 2x + 1",
                "x^3 + 2*x^2 + x + 3",
                "x^3 + 3x^2 + 2x + 3",
            ],
        ),
    ];
    let mut details = Vec::new();
    let mut pass = true;
    for (n, polys) in printed {
        let expected: BTreeSet<Vec<u8>> = polys.iter().map(|p| parse_descending(p)).collect();
        let t = factor_xn_minus_1(n).unwrap();
        let got: Vec<Vec<u8>> = t.factors.iter().map(|f| f.poly.coeffs().to_vec()).collect();
        let got_set: BTreeSet<Vec<u8>> = got.iter().cloned().collect();
        // canonical order: by root order j, then degree, then ascending digits
        let ordered = t.factors.windows(2).all(|w| {
            (w[0].j, w[0].poly.coeffs().len(), w[0].poly.to_string())
                <= (w[1].j, w[1].poly.coeffs().len(), w[1].poly.to_string())
        });
        let ok = got_set == expected && got.len() == polys.len() && ordered;
        pass &= ok;
        let names: Vec<String> = t.factors.iter().map(|f| f.poly.to_string()).collect();
        details.push(format!("n={n} [{}]{}", names.join(" "), if ok { "" } else { " mismatch" }));
    }
    Outcome::new(pass, details.join(", "))
}

// --- 3 ---------------------------------------------------------------------

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let reports = verify_table1(None).unwrap();
    let t = start.elapsed();

    // B_n is also the total degree of the self-reciprocal factors, and the
    // dagger marks exactly the lengths with B_n = n.
    let mut inconsistent = Vec::new();
    for r in &reports {
        let n = r.computed.n;
        let ft = factor_xn_minus_1(n).unwrap();
        let b: u64 = ft
            .factors
            .iter()
            .filter(|f| f.poly.is_self_reciprocal())
            .map(|f| f.poly.coeffs().len() as u64 - 1)
            .sum();
        let e = Rat::new(10 * n as i64 - 4 * b as i64, 9);
        if b != r.computed.b || e != r.computed.e || r.computed.dagger != (b == n) {
            inconsistent.push(n);
        }
    }

    let failing: Vec<u64> =
        reports.iter().filter(|r| r.status != RowStatus::Pass).map(|r| r.printed.n).collect();
    let passed = reports.len() - failing.len();
    let pass = reports.len() == 50 && failing.is_empty() && inconsistent.is_empty() && t < BUDGET_TABLE1;
    let mut detail = format!(
        "{passed}/{} rows reproduce, {}, self-check mismatches {inconsistent:?}",
        reports.len(),
        within(t, BUDGET_TABLE1)
    );
    if !failing.is_empty() {
        detail.push_str(&format!("; printed rows not reproduced: {failing:?}"));
        for r in reports.iter().filter(|r| r.status != RowStatus::Pass) {
            detail.push_str(&format!(
                "\n      n={} printed \"{}\" computed \"{}\"{}",
                r.printed.n,
                r.printed,
                r.computed,
                r.notes.iter().map(|s| format!("; {s}")).collect::<String>()
            ));
        }
    }
    Outcome {
        pass,
        detail,
        as_known: passed == TABLE1_OBSERVED_PASS && inconsistent.is_empty(),
    }
}

// --- 4 ---------------------------------------------------------------------

/// Words of `c` orthogonal to every generator shift of `c`: `C ∩ C^perp`
/// without any use of the dual construction.
fn hull_by_filter_z4(c: &CyclicCodeZ4) -> HashSet<PackedZ4> {
    let gens = c.generator_shifts();
    let n = c.length();
    let dot = |x: &PackedZ4, y: &PackedZ4| {
        let (x, y) = (x.to_symbols(n), y.to_symbols(n));
        x.iter().zip(&y).map(|(a, b)| u32::from(a * b)).sum::<u32>() % 4
    };
    c.enumerate_codewords(CAP)
        .unwrap()
        .into_iter()
        .filter(|x| gens.iter().all(|y| dot(x, y) == 0))
        .collect()
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut checked = Vec::new();
    let mut bad = 0;
    for n in [7u64, 9] {
        let t = table(n);
        let codes = CyclicCodeZ4::all(&t);
        for c in &codes {
            let h: HashSet<PackedZ4> = c.hull().enumerate_codewords(CAP).unwrap().into_iter().collect();
            if h != hull_by_filter_z4(c) {
                bad += 1;
            }
        }
        checked.push(format!("{} codes at n={n}", codes.len()));
    }
    let t = start.elapsed();
    Outcome::new(
        bad == 0 && t < BUDGET_Z4_HULLS,
        format!("{}, {bad} mismatches, {}", checked.join(" and "), within(t, BUDGET_Z4_HULLS)),
    )
}

// --- 5 ---------------------------------------------------------------------

fn r_mul(x: (u8, u8), y: (u8, u8)) -> (u8, u8) {
    // (a + bv)(c + dv) = ac + (ad + bc + bd) v, using v^2 = v
    let (a, b) = x;
    let (c, d) = y;
    ((a * c) % 4, (a * d + b * c + b * d) % 4)
}

fn r_inner(x: &RWord, y: &RWord) -> (u8, u8) {
    let (xa, xb, ya, yb) = (x.a_part(), x.b_part(), y.a_part(), y.b_part());
    (0..xa.len()).fold((0, 0), |acc, i| {
        let p = r_mul((xa[i], xb[i]), (ya[i], yb[i]));
        ((acc.0 + p.0) % 4, (acc.1 + p.1) % 4)
    })
}

/// `C ∩ C^perp` from enumeration. The smaller of `C` and its claimed dual `D`
/// is enumerated; `D` is first confirmed to be `C^perp` by checking that it
/// is orthogonal to `C` and that `|C| |D| = 16^n`.
fn hull_by_filter_r(c: &CyclicCodeR) -> Option<HashSet<PackedR>> {
    let n = c.length();
    let d = c.dual();
    let unpack = |ws: Vec<PackedR>| -> Vec<RWord> { ws.into_iter().map(|w| w.unpack(n)).collect() };
    let (gc, gd) = (unpack(c.generator_shifts_r()), unpack(d.generator_shifts_r()));
    let orthogonal = gc.iter().all(|x| gd.iter().all(|y| r_inner(x, y) == (0, 0)));
    let sizes = c.binary_basis_r().unwrap().len() + d.binary_basis_r().unwrap().len();
    if !orthogonal || sizes != 4 * n {
        return None;
    }
    let (small, gens) = if c.dim2() <= d.dim2() { (c, &gc) } else { (&d, &gd) };
    Some(
        small
            .enumerate_packed_r(CAP)
            .unwrap()
            .into_iter()
            .filter(|x| {
                let w = x.unpack(n);
                gens.iter().all(|y| r_inner(&w, y) == (0, 0))
            })
            .collect(),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let t = table(7);
    let codes = CyclicCodeR::all(&t);
    let (mut bad_set, mut bad_type, mut bad_dual) = (0, 0, 0);
    for c in &codes {
        let (h, ty) = c.hull();
        let got: HashSet<PackedR> = h.enumerate_packed_r(CAP).unwrap().into_iter().collect();
        match hull_by_filter_r(c) {
            None => bad_dual += 1,
            Some(oracle) => {
                if oracle != got {
                    bad_set += 1;
                }
                if 1usize << (2 * ty.k1 + ty.k2) != oracle.len() {
                    bad_type += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    Outcome::new(
        codes.len() == 729 && bad_set + bad_type + bad_dual == 0 && t < BUDGET_R_HULLS,
        format!(
            "{} pairs at n=7, {bad_set} set mismatches, {bad_type} type/size mismatches, \
             {bad_dual} bad duals, {}",
            codes.len(),
            within(t, BUDGET_R_HULLS)
        ),
    )
}

// --- 6 ---------------------------------------------------------------------

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for (n, k1s, maxes) in [(7u64, [0usize, 3, 6], [14usize, 8, 2]), (15, [0, 4, 8], [30, 22, 14])] {
        let e = enumerate_hull_types(n).unwrap();
        let got_k1: Vec<usize> = e.groups.iter().map(|g| g.k1).collect();
        let got_max: Vec<usize> = e.groups.iter().map(|g| *g.k2.iter().max().unwrap()).collect();
        let ok = got_k1 == k1s && got_max == maxes;
        pass &= ok;
        details.push(format!("n={n} k1 {got_k1:?} max k2 {got_max:?}"));
    }

    let e = enumerate_hull_types(7).unwrap();
    let enumerated: BTreeSet<HullTypeR> = e.types().collect();
    let mut no_witness = Vec::new();
    for ty in &enumerated {
        match achievable_check(7, *ty).unwrap() {
            Some(c) if c.hull().1 == *ty => {}
            _ => no_witness.push(ty.to_string()),
        }
    }
    let swept: BTreeSet<HullTypeR> = CyclicCodeR::all(&table(7)).iter().map(|c| c.hull().1).collect();
    let outside: Vec<String> = swept.difference(&enumerated).map(|t| t.to_string()).collect();
    pass &= no_witness.is_empty() && outside.is_empty() && swept == enumerated;
    details.push(format!(
        "n=7 {} types, without witness {no_witness:?}, sweep types outside {outside:?}",
        enumerated.len()
    ));
    Outcome::new(pass, details.join(", "))
}

// --- 7 ---------------------------------------------------------------------

fn criterion_7() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for n in [1u64, 3, 5, 7, 9] {
        let brute = average_dim2_bruteforce(n, DEFAULT_MAX_CODES, workers()).unwrap();
        let formula = average_dim2_formula(n).unwrap();
        pass &= brute == formula;
        details.push(format!("E({n})={brute}{}", if brute == formula { "" } else { " (formula differs)" }));
    }
    let mut violations = Vec::new();
    for n in (55..=153u64).step_by(2) {
        let row = table1_row(n).unwrap();
        if row.e >= Rat::new(10 * n as i64, 9) {
            violations.push(n);
        }
    }
    pass &= violations.is_empty();
    details.push(format!("E(n) < 10n/9 fails for {violations:?} among n=55..153"));
    Outcome::new(pass, details.join(", "))
}

// --- 8 ---------------------------------------------------------------------

fn lee(t: u8) -> u32 {
    match t % 4 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

/// Reference Gray image: `a + bv` goes to the pair `(a, a + 2b)`.
fn gray_ref(w: &RWord, layout: GrayLayout) -> Vec<u8> {
    let (a, b) = (w.a_part(), w.b_part());
    let second: Vec<u8> = a.iter().zip(&b).map(|(x, y)| (x + 2 * y) % 4).collect();
    match layout {
        GrayLayout::Block => [a, second].concat(),
        GrayLayout::Interleaved => a.iter().zip(&second).flat_map(|(x, y)| [*x, *y]).collect(),
    }
}

/// `rho^2` read in the given layout.
fn rho2(g: &[u8], layout: GrayLayout) -> Vec<u8> {
    let mut out = g.to_vec();
    match layout {
        GrayLayout::Interleaved => out.rotate_right(2),
        GrayLayout::Block => {
            let n = g.len() / 2;
            out[..n].rotate_right(1);
            out[n..].rotate_right(1);
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(GRAY_SEED);
    let (mut not_additive, mut not_isometric, mut not_shift, mut not_ref) = (0, 0, 0, 0);
    for _ in 0..GRAY_TRIALS {
        let n = rng.gen_range(1..=GRAY_MAX_N);
        let mut word = || {
            let a: Vec<u8> = (0..n).map(|_| rng.gen_range(0..4)).collect();
            let b: Vec<u8> = (0..n).map(|_| rng.gen_range(0..4)).collect();
            RWord::from_parts(&a, &b)
        };
        let (x, y) = (word(), word());
        for layout in [GrayLayout::Block, GrayLayout::Interleaved] {
            let (gx, gy, gs) = (x.gray_map(layout), y.gray_map(layout), x.add(&y).gray_map(layout));
            if gx != gray_ref(&x, layout) {
                not_ref += 1;
            }
            let summed: Vec<u8> = gx.iter().zip(&gy).map(|(p, q)| (p + q) % 4).collect();
            if gs != summed {
                not_additive += 1;
            }
            if cyclic_shift_r(&x).gray_map(layout) != rho2(&gx, layout) {
                not_shift += 1;
            }
        }
        // Lee distance of x, y against the Hamming-style Lee distance of images
        let diff = x.add(&y.scale(ringhull::codes_ring::RElement::new(3, 0)));
        let image_dist: u32 = x
            .gray_map(GrayLayout::Block)
            .iter()
            .zip(&y.gray_map(GrayLayout::Block))
            .map(|(p, q)| lee((4 + p - q) % 4))
            .sum();
        let ref_weight: u32 = gray_ref(&x, GrayLayout::Block).iter().map(|&t| lee(t)).sum();
        if diff.lee_weight() != image_dist || x.lee_weight() != ref_weight {
            not_isometric += 1;
        }
    }
    Outcome::new(
        not_additive + not_isometric + not_shift + not_ref == 0,
        format!(
            "{GRAY_TRIALS} pairs, n <= {GRAY_MAX_N}, seed {GRAY_SEED:#x}: {not_ref} off reference, \
             {not_additive} non-additive, {not_isometric} non-isometric, {not_shift} shift failures \
             (both layouts)"
        ),
    )
}

// --- 9 ---------------------------------------------------------------------

/// Rows excused from hard matching, identified by their first polynomial.
fn exempt(table: u8, row: &RowReport, p1: &str) -> bool {
    match table {
        2 => row.row == 3,
        3 => p1.starts_with("1212231") || p1.starts_with("1001001001001001001"),
        _ => false,
    }
}

fn criterion_9(reports: &BTreeMap<u8, Vec<RowReport>>) -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    let mut lines = Vec::new();
    let mut counts = BTreeMap::new();
    for (&id, rows) in reports {
        let t = code_table(id).unwrap();
        let required = if id == 2 { TABLE2_REQUIRED } else { TABLE3_REQUIRED };
        let mut matched = 0;
        for r in rows {
            let p1 = t.rows.iter().find(|c| c.index == r.row).unwrap().polys[0].to_string();
            let small = r.computed.is_some();
            if small && r.matches() {
                matched += 1;
            }
            let is_exempt = exempt(id, r, &p1);
            if is_exempt && !r.matches() && r.notes.is_empty() {
                pass = false;
                lines.push(format!("      table {id} row {}: exempt row without a report", r.row));
            }
            if !r.matches() {
                let computed = r.computed.as_ref().map_or("-".to_string(), |c| c.to_string());
                lines.push(format!(
                    "      table {id} row {} {}{}: printed {} computed {}{}",
                    r.row,
                    r.status,
                    if is_exempt { " (exempt)" } else { "" },
                    r.printed,
                    computed,
                    r.notes.iter().map(|s| format!("; {s}")).collect::<String>()
                ));
            }
        }
        pass &= matched >= required;
        counts.insert(id, matched);
        details.push(format!("Table {id}: {matched}/{} rows match (need {required})", rows.len()));
    }
    let mut detail = details.join(", ");
    for l in lines {
        detail.push('\n');
        detail.push_str(&l);
    }
    Outcome {
        pass,
        detail,
        as_known: counts.get(&2) == Some(&TABLE2_OBSERVED_PASS)
            && counts.get(&3) == Some(&TABLE3_OBSERVED_PASS),
    }
}

// --- 10 --------------------------------------------------------------------

fn criterion_10(reports: &BTreeMap<u8, Vec<RowReport>>) -> Outcome {
    let many = workers();
    let mut differ = Vec::new();

    let t = table(7);
    let mut compared = 0;
    for c in CyclicCodeR::all(&t).into_iter().filter(|c| c.dim2() <= 16) {
        let a = c.min_lee_distance(CAP, 1).unwrap();
        let b = c.min_lee_distance(CAP, many).unwrap();
        compared += 1;
        if a != b {
            differ.push(format!("min distance n=7 {}", c.format_generators().join(" ")));
        }
    }
    for n in [7u64, 9] {
        let a = average_dim2_bruteforce(n, DEFAULT_MAX_CODES, 1).unwrap();
        let b = average_dim2_bruteforce(n, DEFAULT_MAX_CODES, many).unwrap();
        if a != b {
            differ.push(format!("average n={n}"));
        }
    }
    let t2 = code_table(2).unwrap();
    let single = verify_code_table(&t2, None, CAP, 1).unwrap();
    let params = |rs: &[RowReport]| -> Vec<String> {
        rs.iter().map(|r| format!("{:?} {:?}", r.computed, r.printed_generator)).collect()
    };
    if params(&single) != params(&reports[&2]) {
        differ.push("Table 2 recomputation".into());
    }
    Outcome::new(
        differ.is_empty(),
        format!(
            "1 vs {many} workers: {compared} minimum distances at n=7, averages at n=7 and 9, \
             all Table 2 rows; differences {differ:?}"
        ),
    )
}

fn main() -> ExitCode {
    // the Table 2 and 3 recomputation is shared by criteria 9 and 10
    let mut shared = BTreeMap::new();
    for id in [2u8, 3] {
        let t = code_table(id).unwrap();
        shared.insert(id, verify_code_table(&t, None, CAP, workers()).unwrap());
    }

    let criteria: Vec<(usize, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "factorization soundness", Box::new(criterion_1)),
        (2, "n=15 and n=21 factor lists", Box::new(criterion_2)),
        (3, "Table 1 rows", Box::new(criterion_3)),
        (4, "Z4 hull vs enumeration", Box::new(criterion_4)),
        (5, "R hull vs enumeration", Box::new(criterion_5)),
        (6, "hull type enumeration", Box::new(criterion_6)),
        (7, "average 2-dimension", Box::new(criterion_7)),
        (8, "Gray map properties", Box::new(criterion_8)),
        (9, "Tables 2 and 3 parameters", Box::new(|| criterion_9(&shared))),
        (10, "determinism under parallelism", Box::new(|| criterion_10(&shared))),
    ];

    let mut unexpected = Vec::new();
    for (id, name, run) in &criteria {
        let o = run();
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| k == id);
        println!("[{}] {id:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        match (o.pass, known) {
            (true, None) => {}
            (false, Some((_, why))) if o.as_known => println!("      known unattainable: {why}"),
            (false, Some(_)) => unexpected.push(format!("{id} failed differently than recorded")),
            (false, None) => unexpected.push(format!("{id} failed")),
            (true, Some(_)) => unexpected.push(format!("{id} passed; update KNOWN_UNATTAINABLE")),
        }
    }
    let passed = criteria.len() - KNOWN_UNATTAINABLE.len();
    if unexpected.is_empty() {
        println!("acceptance: {passed}/{} PASS, the rest fail as recorded", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcomes: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}
