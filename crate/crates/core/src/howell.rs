//! Howell normal form of matrices over Z4.
//!
//! Z4 is a chain ring with the single non-unit ideal `(2)`, so the reduction
//! is Gaussian elimination that prefers unit pivots and, whenever the pivot
//! is 2, appends the row times 2 (which vanishes in the pivot column) to be
//! reduced in later columns. The resulting rows give every element of the
//! row span uniquely as `sum c_i r_i` with `c_i < 4 / pivot_i`.

use crate::packed::{BinaryBasis, PackedZ4};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HowellForm {
    ncols: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl HowellForm {
    pub fn new(rows: Vec<Vec<u8>>, ncols: usize) -> Self {
        let mut work: Vec<Vec<u8>> = rows
            .into_iter()
            .map(|mut r| {
                r.resize(ncols, 0);
                r.iter_mut().for_each(|c| *c &= 3);
                r
            })
            .filter(|r| r.iter().any(|&c| c != 0))
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ncols {
            // unit pivot first, otherwise a 2
            let pick = (rank..work.len())
                .filter(|&i| work[i][col] != 0)
                .min_by_key(|&i| work[i][col] % 2 == 0);
            let Some(p) = pick else { continue };
            work.swap(rank, p);
            let lead = work[rank][col];
            if lead % 2 == 1 {
                // 1 and 3 are self-inverse
                scale_row(&mut work[rank], lead);
            }
            let lead = work[rank][col];
            let pivot_row = work[rank].clone();
            for (i, row) in work.iter_mut().enumerate() {
                if i == rank {
                    continue;
                }
                let e = row[col];
                if e == 0 {
                    continue;
                }
                // entries below a 2-pivot are 2; above it they reduce into {0, 1}
                let factor = if lead == 1 { e } else { e / 2 };
                if factor != 0 {
                    axpy(row, &pivot_row, 4 - factor);
                }
            }
            if lead == 2 {
                let annihilated: Vec<u8> = pivot_row.iter().map(|&c| c * 2 % 4).collect();
                if annihilated.iter().any(|&c| c != 0) {
                    work.push(annihilated);
                }
            }
            pivots.push(col);
            rank += 1;
            work.retain(|r| r.iter().any(|&c| c != 0));
        }
        work.truncate(rank);
        Self { ncols, rows: work, pivots }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// `log2` of the number of vectors in the row span.
    pub fn log2_size(&self) -> u32 {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(r, &c)| if r[c] == 1 { 2 } else { 1 })
            .sum()
    }

    /// The span as a binary basis: unit-pivot rows contribute `r` and `2r`,
    /// 2-pivot rows contribute `r`.
    pub fn binary_basis(&self) -> BinaryBasis {
        assert!(self.ncols <= crate::packed::MAX_LEN);
        let mut gens = Vec::new();
        for (r, &c) in self.rows.iter().zip(&self.pivots) {
            let p = PackedZ4::from_symbols(r);
            gens.push(p);
            if r[c] == 1 {
                gens.push(p.double());
            }
        }
        BinaryBasis::new(gens)
    }
}

fn scale_row(row: &mut [u8], c: u8) {
    for x in row.iter_mut() {
        *x = *x * c % 4;
    }
}

// row += k * other
fn axpy(row: &mut [u8], other: &[u8], k: u8) {
    for (x, &y) in row.iter_mut().zip(other) {
        *x = (*x + k * y) % 4;
    }
}
