//! Principal pivot transform and its companions.
//!
//! For a square matrix `A` on `V` and a pivot set `Z` with `A[Z,Z]`
//! nonsingular, `ppt(A, Z)` has the blocks
//!
//! ```text
//!              Z                      V\Z
//! Z     [ A[Z,Z]^-1               -A[Z,Z]^-1 A[Z,V\Z]                   ]
//! V\Z   [ A[V\Z,Z] A[Z,Z]^-1       A[V\Z,V\Z] - A[V\Z,Z] A[Z,Z]^-1 A[Z,V\Z] ]
//! ```
//!
//! Blocks are placed label-wise; `Z` need not come first in any ordering.

use crate::elim;
use crate::error::{Error, Result};
use crate::labels::{difference, require_subset, LabelSet};
use crate::matrix::{positions, LabeledMatrix, LabeledVector};

fn pivot_inverse(a: &LabeledMatrix, z: &LabelSet) -> Result<LabeledMatrix> {
    a.require_square()?;
    require_subset(z, &a.row_set())?;
    a.submatrix(z, z)?.inverse().map_err(|e| match e {
        Error::Singular { rank, .. } => Error::PivotSingular {
            pivot: z.clone(),
            rank,
        },
        other => other,
    })
}

/// The principal pivot transform `A * Z`.
pub fn ppt(a: &LabeledMatrix, z: &LabelSet) -> Result<LabeledMatrix> {
    a.require_square()?;
    let f = a.field();
    let n = a.nrows();
    let zi = positions(a.row_labels(), z)?;
    let ri: Vec<usize> = (0..n).filter(|i| zi.binary_search(i).is_err()).collect();
    let k = zi.len();

    // [A[Z,Z] | I] reduced to [I | A[Z,Z]^-1]
    let mut aug = Vec::with_capacity(2 * k * k);
    for (r, &i) in zi.iter().enumerate() {
        aug.extend(zi.iter().map(|&j| a.scalar_at(i, j).clone()));
        aug.extend((0..k).map(|c| {
            if c == r {
                f.one_scalar()
            } else {
                f.zero_scalar()
            }
        }));
    }
    let red = elim::rref(f, aug, k, 2 * k, k);
    if red.pivots.len() < k {
        return Err(Error::PivotSingular {
            pivot: z.clone(),
            rank: red.pivots.len(),
        });
    }
    let inv = |r: usize, c: usize| red.at(r, k + c);

    let mut out = vec![f.zero_scalar(); n * n];
    for (r, &i) in zi.iter().enumerate() {
        for (c, &j) in zi.iter().enumerate() {
            out[i * n + j] = inv(r, c).clone();
        }
        for &j in &ri {
            let sum = (0..k).fold(f.zero_scalar(), |acc, t| {
                f.add(&acc, &f.mul(inv(r, t), a.scalar_at(zi[t], j)))
            });
            out[i * n + j] = f.neg(&sum);
        }
    }
    for &i in &ri {
        for c in 0..k {
            let sum = (0..k).fold(f.zero_scalar(), |acc, t| {
                f.add(&acc, &f.mul(a.scalar_at(i, zi[t]), inv(t, c)))
            });
            out[i * n + zi[c]] = sum;
        }
        for &j in &ri {
            out[i * n + j] = (0..k).fold(a.scalar_at(i, j).clone(), |acc, t| {
                f.sub_mul(&acc, &out[i * n + zi[t]], a.scalar_at(zi[t], j))
            });
        }
    }
    Ok(LabeledMatrix::from_scalars(
        f,
        a.row_labels().to_vec(),
        a.col_labels().to_vec(),
        out,
    ))
}

/// Schur complement of `A[Z,Z]` in `A`, indexed by `V \ Z`.
pub fn schur_complement(a: &LabeledMatrix, z: &LabelSet) -> Result<LabeledMatrix> {
    let inv = pivot_inverse(a, z)?;
    let rest = difference(&a.row_set(), z);
    let correction = a
        .submatrix(&rest, z)?
        .matmul(&inv)?
        .matmul(&a.submatrix(z, &rest)?)?;
    a.submatrix(&rest, &rest)?.sub(&correction)
}

/// `A # Z`: the rows of `A` indexed by `Z`, every other row `x` replaced by
/// the unit row at `x`.
pub fn sharp(a: &LabeledMatrix, z: &LabelSet) -> Result<LabeledMatrix> {
    a.require_square()?;
    let v = a.row_set();
    require_subset(z, &v)?;
    Ok(LabeledMatrix::identity(a.field(), &v).with_rows_from(z, a))
}

/// Checks the partial-inverse relation for a given `x`: with `y = A x`,
/// `ppt(A, Z)` must map `(y on Z, x off Z)` to `(x on Z, y off Z)`.
pub fn check_partial_inverse(a: &LabeledMatrix, z: &LabelSet, x: &LabeledVector) -> Result<bool> {
    let pivoted = ppt(a, z)?;
    partial_inverse_holds(a, z, &pivoted, x)
}

/// As [`check_partial_inverse`], against a caller-supplied candidate for
/// `ppt(A, Z)`.
pub fn partial_inverse_holds(
    a: &LabeledMatrix,
    z: &LabelSet,
    pivoted: &LabeledMatrix,
    x: &LabeledVector,
) -> Result<bool> {
    let y = a.apply(x)?;
    let v = a.row_set();
    let swapped_in = LabeledVector::from_fn(a.field(), &v, |l| {
        if z.contains(l) { y.get(l) } else { x.get(l) }.expect("label in V")
    })?;
    let swapped_out = LabeledVector::from_fn(a.field(), &v, |l| {
        if z.contains(l) { x.get(l) } else { y.get(l) }.expect("label in V")
    })?;
    Ok(pivoted.apply(&swapped_in)? == swapped_out)
}
