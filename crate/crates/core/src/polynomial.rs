//! Nullity-counting polynomials of square matrices.
//!
//! `p(A) = sum over X, Y of y^n(A[X,Y])` and
//! `q(A) = sum over X of y^n(A[X,X])`, computed by full enumeration.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::matrix::LabeledMatrix;
use crate::nullity::f_z_mask;
use crate::pivot::ppt;

/// Largest `|V|` accepted for `p` (4^16 submatrix nullities).
pub const P_HARD_CAP: usize = 16;
/// Largest `|V|` accepted for `q`.
pub const Q_HARD_CAP: usize = 24;

/// Integer polynomial in `y`; `coefficients()[d]` counts submatrices of
/// nullity `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NullityPolynomial {
    coeffs: Vec<u64>,
}

impl NullityPolynomial {
    pub fn from_coefficients(coeffs: Vec<u64>) -> Self {
        NullityPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Sum of all coefficients, i.e. the number of submatrices counted.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// `coeffs: c0 c1 ... cn`.
    pub fn coefficient_line(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        format!("coeffs: {}", parts.join(" "))
            .trim_end()
            .to_string()
    }
}

impl fmt::Display for NullityPolynomial {
    /// `c0 + c1*y + c2*y^2 + ...` with zero terms omitted and unit
    /// coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "y".to_string(),
                (1, c) => format!("{c}*y"),
                (d, 1) => format!("y^{d}"),
                (d, c) => format!("{c}*y^{d}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

fn check_size(a: &LabeledMatrix, cap: usize, hard: usize) -> Result<usize> {
    a.require_square()?;
    let n = a.nrows();
    let cap = cap.min(hard);
    if n > cap {
        return Err(Error::SizeCapExceeded { size: n, cap });
    }
    Ok(n)
}

fn accumulate<I>(n: usize, nullities: I) -> NullityPolynomial
where
    I: ParallelIterator<Item = usize>,
{
    let coeffs = nullities
        .fold(
            || vec![0u64; n + 1],
            |mut acc, d| {
                acc[d] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    NullityPolynomial { coeffs }
}

/// `p(A)` with the hard cap.
pub fn nullity_polynomial(a: &LabeledMatrix) -> Result<NullityPolynomial> {
    nullity_polynomial_capped(a, P_HARD_CAP)
}

/// `p(A)`, failing with `SizeCapExceeded` when `|V| > cap`.
pub fn nullity_polynomial_capped(a: &LabeledMatrix, cap: usize) -> Result<NullityPolynomial> {
    let n = check_size(a, cap, P_HARD_CAP)?;
    let subsets = 1u64 << n;
    let pairs = (0..subsets)
        .into_par_iter()
        .flat_map_iter(move |x| (0..subsets).map(move |y| (x, y)));
    Ok(accumulate(n, pairs.map(|(x, y)| a.block_nullity(x, y))))
}

/// `q(A)` with the hard cap.
pub fn q_polynomial(a: &LabeledMatrix) -> Result<NullityPolynomial> {
    q_polynomial_capped(a, Q_HARD_CAP)
}

pub fn q_polynomial_capped(a: &LabeledMatrix, cap: usize) -> Result<NullityPolynomial> {
    let n = check_size(a, cap, Q_HARD_CAP)?;
    let subsets = (0..1u64 << n).into_par_iter();
    Ok(accumulate(n, subsets.map(|x| a.block_nullity(x, x))))
}

/// `p(A) = p(ppt(A, Z))`.
pub fn check_p_invariance(a: &LabeledMatrix, z: &LabelSet) -> Result<bool> {
    let pivoted = ppt(a, z)?;
    Ok(nullity_polynomial(a)? == nullity_polynomial(&pivoted)?)
}

/// `q(A) = q(ppt(A, Z))`.
pub fn check_q_invariance(a: &LabeledMatrix, z: &LabelSet) -> Result<bool> {
    let pivoted = ppt(a, z)?;
    Ok(q_polynomial(a)? == q_polynomial(&pivoted)?)
}

/// Term-by-term form of the `p` invariance: for every `(X, Y)`, the pair
/// `f_Z(X, Y)` has the same nullity in `ppt(A, Z)` as `(X, Y)` has in `A`.
pub fn check_p_witnesses(a: &LabeledMatrix, z: &LabelSet) -> Result<bool> {
    let pivoted = ppt(a, z)?;
    let n = check_size(a, P_HARD_CAP, P_HARD_CAP)?;
    let zm = crate::labels::mask_from_subset(a.row_labels(), z);
    let subsets = 1u64 << n;
    Ok((0..subsets).into_par_iter().all(|x| {
        (0..subsets).all(|y| {
            let (xr, yr) = f_z_mask(x, y, zm);
            a.block_nullity(x, y) == pivoted.block_nullity(xr, yr)
        })
    }))
}
