//! Gaussian elimination kernels on dense row-major buffers.
//!
//! Pivot choice is always the first nonzero entry scanning columns left to
//! right and rows top to bottom, so the reduced form is deterministic.

use crate::field::{Field, Scalar};

/// Reduced row echelon form of a `rows x cols` buffer.
pub(crate) struct Rref {
    pub data: Vec<Scalar>,
    pub cols: usize,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

/// Gauss-Jordan elimination. Only columns `< pivot_limit` are eligible as
/// pivot columns; the rest are carried along (augmented part).
pub(crate) fn rref(
    field: Field,
    mut data: Vec<Scalar>,
    rows: usize,
    cols: usize,
    pivot_limit: usize,
) -> Rref {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_limit.min(cols) {
        if next == rows {
            break;
        }
        let Some(found) = (next..rows).find(|&r| !field.is_zero(&data[r * cols + col])) else {
            continue;
        };
        swap_rows(&mut data, cols, found, next);
        let inv = field
            .inv(&data[next * cols + col])
            .expect("pivot entry is nonzero");
        for c in col..cols {
            let v = &mut data[next * cols + c];
            *v = field.mul(v, &inv);
        }
        for r in 0..rows {
            if r == next || field.is_zero(&data[r * cols + col]) {
                continue;
            }
            let factor = data[r * cols + col].clone();
            for c in col..cols {
                let updated = field.sub_mul(&data[r * cols + c], &factor, &data[next * cols + c]);
                data[r * cols + c] = updated;
            }
        }
        pivots.push(col);
        next += 1;
    }
    Rref { data, cols, pivots }
}

fn swap_rows(data: &mut [Scalar], cols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let (head, tail) = data.split_at_mut(hi * cols);
    head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
}

/// Rank of a buffer, without back substitution. Consumes the buffer.
pub(crate) fn rank(field: Field, mut data: Vec<Scalar>, rows: usize, cols: usize) -> usize {
    if field.is_gf2() && cols <= 64 {
        return gf2_rank(data.chunks(cols.max(1)).take(rows).map(pack_row));
    }
    let mut next = 0;
    for col in 0..cols {
        if next == rows {
            break;
        }
        let Some(found) = (next..rows).find(|&r| !field.is_zero(&data[r * cols + col])) else {
            continue;
        };
        swap_rows(&mut data, cols, found, next);
        let inv = field
            .inv(&data[next * cols + col])
            .expect("pivot entry is nonzero");
        for r in next + 1..rows {
            if field.is_zero(&data[r * cols + col]) {
                continue;
            }
            let factor = field.mul(&data[r * cols + col], &inv);
            for c in col..cols {
                let updated = field.sub_mul(&data[r * cols + c], &factor, &data[next * cols + c]);
                data[r * cols + c] = updated;
            }
        }
        next += 1;
    }
    next
}

fn pack_row(row: &[Scalar]) -> u64 {
    row.iter().enumerate().fold(0, |acc, (i, s)| match s {
        Scalar::Residue(1) => acc | 1 << i,
        _ => acc,
    })
}

/// Rank over GF(2) of rows packed as bit masks.
pub(crate) fn gf2_rank(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut len = 0;
    for mut row in rows {
        for &b in &basis[..len] {
            // each basis row is keyed by its lowest set bit
            if row >> b.trailing_zeros() & 1 == 1 {
                row ^= b;
            }
        }
        if row != 0 {
            basis[len] = row;
            len += 1;
        }
    }
    len
}
