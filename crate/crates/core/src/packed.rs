//! Bit-sliced Z4 vectors and exhaustive enumeration of Z4-linear spans.
//!
//! A vector of length at most 64 is stored as two bit planes: `lo` holds the
//! low bit of every symbol and `hi` the high bit. Addition mod 4 is then a
//! half adder across the planes, and the Lee weight is
//! `popcount(lo) + 2 * popcount(hi & !lo)`.

use std::thread;

pub const MAX_LEN: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedZ4 {
    pub lo: u64,
    pub hi: u64,
}

impl PackedZ4 {
    pub const ZERO: PackedZ4 = PackedZ4 { lo: 0, hi: 0 };

    pub fn from_symbols(symbols: &[u8]) -> Self {
        assert!(symbols.len() <= MAX_LEN);
        let mut v = Self::ZERO;
        for (i, &s) in symbols.iter().enumerate() {
            v.lo |= ((s & 1) as u64) << i;
            v.hi |= (((s >> 1) & 1) as u64) << i;
        }
        v
    }

    pub fn to_symbols(self, len: usize) -> Vec<u8> {
        (0..len).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn get(self, i: usize) -> u8 {
        (((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        (self.lo | self.hi) == 0
    }

    #[inline]
    pub fn add(self, other: Self) -> Self {
        Self {
            lo: self.lo ^ other.lo,
            hi: self.hi ^ other.hi ^ (self.lo & other.lo),
        }
    }

    #[inline]
    pub fn neg(self) -> Self {
        // -(l + 2h) = l + 2(h ^ l) mod 4
        Self { lo: self.lo, hi: self.hi ^ self.lo }
    }

    #[inline]
    pub fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    #[inline]
    pub fn double(self) -> Self {
        Self { lo: 0, hi: self.lo }
    }

    /// Multiplies every symbol by the scalar `c` mod 4.
    pub fn scale(self, c: u8) -> Self {
        match c & 3 {
            0 => Self::ZERO,
            1 => self,
            2 => self.double(),
            _ => self.neg(),
        }
    }

    #[inline]
    pub fn lee_weight(self) -> u32 {
        self.lo.count_ones() + 2 * (self.hi & !self.lo).count_ones()
    }

    pub fn hamming_weight(self) -> u32 {
        (self.lo | self.hi).count_ones()
    }

    /// Cyclic shift by one position to the right within a word of length `len`.
    pub fn rotate(self, len: usize) -> Self {
        let rot = |w: u64| {
            let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
            ((w << 1) | (w >> (len - 1) & 1)) & mask
        };
        Self { lo: rot(self.lo), hi: rot(self.hi) }
    }

    /// Standard inner product over Z4.
    pub fn dot(self, other: Self) -> u8 {
        // (l1 + 2h1)(l2 + 2h2) = l1 l2 + 2(l1 h2 + h1 l2) mod 4
        let ll = (self.lo & other.lo).count_ones();
        let cross = (self.lo & other.hi).count_ones() + (self.hi & other.lo).count_ones();
        ((ll + 2 * cross) & 3) as u8
    }
}

/// A Z4-linear set presented by generators `g_0..g_{k-1}` such that every
/// element is `sum b_i g_i` for a unique `b in {0,1}^k`.
#[derive(Clone, Debug)]
pub struct BinaryBasis {
    gens: Vec<PackedZ4>,
}

impl BinaryBasis {
    pub fn new(gens: Vec<PackedZ4>) -> Self {
        assert!(gens.len() < 64, "span too large to index");
        Self { gens }
    }

    pub fn gens(&self) -> &[PackedZ4] {
        &self.gens
    }

    /// Number of elements as a power of two.
    pub fn log2_size(&self) -> u32 {
        self.gens.len() as u32
    }

    pub fn size(&self) -> u64 {
        1u64 << self.gens.len()
    }

    /// Element with coefficient bits `bits`.
    pub fn combination(&self, bits: u64) -> PackedZ4 {
        self.gens
            .iter()
            .enumerate()
            .filter(|(i, _)| (bits >> i) & 1 == 1)
            .fold(PackedZ4::ZERO, |acc, (_, &g)| acc.add(g))
    }

    /// Visits the elements whose reflected Gray-code index lies in
    /// `start..end`, each exactly once, stepping by one generator at a time.
    pub fn for_each_in_range<F: FnMut(PackedZ4)>(&self, start: u64, end: u64, mut f: F) {
        if start >= end {
            return;
        }
        let gray = |t: u64| t ^ (t >> 1);
        let mut bits = gray(start);
        let mut word = self.combination(bits);
        f(word);
        for t in start + 1..end {
            let k = t.trailing_zeros() as usize;
            bits ^= 1 << k;
            word = if (bits >> k) & 1 == 1 {
                word.add(self.gens[k])
            } else {
                word.sub(self.gens[k])
            };
            f(word);
        }
    }

    pub fn for_each<F: FnMut(PackedZ4)>(&self, f: F) {
        self.for_each_in_range(0, self.size(), f)
    }

    pub fn elements(&self) -> Vec<PackedZ4> {
        let mut out = Vec::with_capacity(self.size() as usize);
        self.for_each(|w| out.push(w));
        out
    }

    /// Minimum of `weight` over nonzero elements, `None` for the zero span.
    /// The index space is split into `workers` contiguous shards; the result
    /// does not depend on the split.
    pub fn min_nonzero<W>(&self, workers: usize, weight: W) -> Option<u32>
    where
        W: Fn(PackedZ4) -> u32 + Sync,
    {
        let total = self.size();
        let workers = workers.clamp(1, total.max(1) as usize) as u64;
        let shard = |start: u64, end: u64| {
            let mut best = u32::MAX;
            self.for_each_in_range(start, end, |w| {
                if !w.is_zero() {
                    best = best.min(weight(w));
                }
            });
            best
        };
        let best = if workers == 1 {
            shard(0, total)
        } else {
            let chunk = total.div_ceil(workers);
            thread::scope(|s| {
                let handles: Vec<_> = (0..workers)
                    .map(|i| {
                        let (a, b) = (i * chunk, ((i + 1) * chunk).min(total));
                        let shard = &shard;
                        s.spawn(move || shard(a, b))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("worker panicked")).min().unwrap()
            })
        };
        (best != u32::MAX).then_some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn lee(s: u8) -> u32 {
        s.min(4 - s) as u32
    }

    proptest! {
        #[test]
        fn planes_match_symbolwise_arithmetic(
            a in prop::collection::vec(0u8..4, 0..40),
            b in prop::collection::vec(0u8..4, 0..40),
            c in 0u8..4,
        ) {
            let len = a.len().min(b.len());
            let (a, b) = (&a[..len], &b[..len]);
            let (pa, pb) = (PackedZ4::from_symbols(a), PackedZ4::from_symbols(b));
            let sum: Vec<u8> = a.iter().zip(b).map(|(x, y)| (x + y) % 4).collect();
            let diff: Vec<u8> = a.iter().zip(b).map(|(x, y)| (x + 4 - y) % 4).collect();
            let scaled: Vec<u8> = a.iter().map(|x| x * c % 4).collect();
            prop_assert_eq!(pa.add(pb).to_symbols(len), sum);
            prop_assert_eq!(pa.sub(pb).to_symbols(len), diff);
            prop_assert_eq!(pa.scale(c).to_symbols(len), scaled);
            prop_assert_eq!(pa.lee_weight(), a.iter().map(|&s| lee(s)).sum::<u32>());
            let dot = a.iter().zip(b).map(|(x, y)| (x * y) as u32).sum::<u32>() % 4;
            prop_assert_eq!(pa.dot(pb) as u32, dot);
            if len > 0 {
                let mut rotated = vec![a[len - 1]];
                rotated.extend_from_slice(&a[..len - 1]);
                prop_assert_eq!(pa.rotate(len).to_symbols(len), rotated);
            }
        }
    }

    #[test]
    fn gray_traversal_visits_every_combination_once() {
        let gens: Vec<PackedZ4> = [[1, 2, 0, 3], [0, 1, 1, 0], [2, 0, 0, 2], [0, 0, 2, 0]]
            .iter()
            .map(|s| PackedZ4::from_symbols(s))
            .collect();
        let basis = BinaryBasis::new(gens);
        let direct: HashSet<_> = (0..16).map(|b| basis.combination(b)).collect();
        let mut seen = Vec::new();
        basis.for_each(|w| seen.push(w));
        assert_eq!(seen.len(), 16);
        assert_eq!(seen.iter().copied().collect::<HashSet<_>>(), direct);
        let mut pieces = Vec::new();
        for (a, b) in [(0, 5), (5, 6), (6, 16)] {
            basis.for_each_in_range(a, b, |w| pieces.push(w));
        }
        assert_eq!(pieces, seen);
    }

    #[test]
    fn min_weight_is_shard_independent() {
        let gens: Vec<PackedZ4> = (0..12u64)
            .map(|i| PackedZ4 { lo: (0x9E37_79B9u64.wrapping_mul(i + 1)) & 0xFFFF, hi: (i * 77) & 0xFFFF })
            .collect();
        let basis = BinaryBasis::new(gens);
        let one = basis.min_nonzero(1, PackedZ4::lee_weight);
        for workers in [2, 3, 7, 16, 5000] {
            assert_eq!(basis.min_nonzero(workers, PackedZ4::lee_weight), one);
        }
        assert_eq!(BinaryBasis::new(vec![]).min_nonzero(4, PackedZ4::lee_weight), None);
    }
}
