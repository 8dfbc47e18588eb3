//! Nullity and kernel correspondence between submatrices of `A` and of
//! `ppt(A, Z)`.
//!
//! For `X, Y` subsets of `V` let `R = Z \ (X ^ Y)` (`^` is symmetric
//! difference). Then `ppt(A,Z)[X,Y]` and `A[X ^ R, Y ^ R]` have the same
//! nullity, and `inverse(sharp(A,Z))[Y ^ R, Y]` carries the kernel of the
//! former onto the kernel of the latter.
//!
//! [`PivotPair::kernel_equality`] tests the stronger subspace identity
//! `ker(ppt(A,Z)[X,Y]) = ker(A[X ^ R, Y ^ R] * inverse(sharp(A,Z))[Y ^ R, Y])`.
//! Only the inclusion `⊆` holds in general; see
//! [`PivotPair::kernel_correspondence`].

use crate::error::Result;
use crate::labels::{
    difference, mask_from_subset, require_subset, symmetric_difference, Label, LabelSet,
};
use crate::matrix::{rank_of_vectors, KernelBasis, LabeledMatrix};
use crate::pivot::{ppt, sharp};

/// `R = Z \ (X ^ Y)`.
pub fn correspondence_set(x: &LabelSet, y: &LabelSet, z: &LabelSet) -> LabelSet {
    difference(z, &symmetric_difference(x, y))
}

/// The pair map `(X, Y) -> (X ^ R, Y ^ R)`. It is a bijection on pairs of
/// subsets and its own inverse.
pub fn f_z(x: &LabelSet, y: &LabelSet, z: &LabelSet) -> (LabelSet, LabelSet) {
    let r = correspondence_set(x, y, z);
    (symmetric_difference(x, &r), symmetric_difference(y, &r))
}

/// Mask form of [`correspondence_set`] / [`f_z`] over a fixed universe.
pub fn f_z_mask(x: u64, y: u64, z: u64) -> (u64, u64) {
    let r = z & !(x ^ y);
    (x ^ r, y ^ r)
}

/// A triple `(X, Y, Z)` over a known index set together with its `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub x: LabelSet,
    pub y: LabelSet,
    pub z: LabelSet,
    pub r: LabelSet,
}

impl Correspondence {
    pub fn new(v: &LabelSet, x: &LabelSet, y: &LabelSet, z: &LabelSet) -> Result<Self> {
        require_subset(x, v)?;
        require_subset(y, v)?;
        require_subset(z, v)?;
        Ok(Correspondence {
            x: x.clone(),
            y: y.clone(),
            z: z.clone(),
            r: correspondence_set(x, y, z),
        })
    }

    /// `(X ^ R, Y ^ R)`.
    pub fn image(&self) -> (LabelSet, LabelSet) {
        (
            symmetric_difference(&self.x, &self.r),
            symmetric_difference(&self.y, &self.r),
        )
    }
}

/// Both sides of the nullity equality for one `(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullityReport {
    pub r: LabelSet,
    /// `n(ppt(A,Z)[X,Y])`
    pub pivoted_nullity: usize,
    /// `n(A[X ^ R, Y ^ R])`
    pub original_nullity: usize,
}

impl NullityReport {
    pub fn holds(&self) -> bool {
        self.pivoted_nullity == self.original_nullity
    }
}

/// Both kernels compared by the kernel equality for one `(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub r: LabelSet,
    /// Kernel of `ppt(A,Z)[X,Y]`.
    pub pivoted_kernel: KernelBasis,
    /// Kernel of `A[X ^ R, Y ^ R] * inverse(sharp(A,Z))[Y ^ R, Y]`.
    pub transported_kernel: KernelBasis,
    pub equal: bool,
}

/// `A`, a valid pivot set `Z`, and everything derived from them that the
/// per-`(X, Y)` checks share.
#[derive(Debug, Clone)]
pub struct PivotPair {
    original: LabeledMatrix,
    z: LabelSet,
    pivoted: LabeledMatrix,
    sharp: LabeledMatrix,
    sharp_inverse: LabeledMatrix,
}

impl PivotPair {
    /// Fails with `PivotSingular` when `A[Z,Z]` is singular.
    pub fn new(a: &LabeledMatrix, z: &LabelSet) -> Result<Self> {
        Self::with_pivoted(a, z, ppt(a, z)?)
    }

    /// Uses a caller-supplied `ppt(A, Z)`; lets a harness check an
    /// alternative implementation.
    pub fn with_pivoted(a: &LabeledMatrix, z: &LabelSet, pivoted: LabeledMatrix) -> Result<Self> {
        let sharp = sharp(a, z)?;
        let sharp_inverse = sharp.inverse()?;
        Ok(PivotPair {
            original: a.clone(),
            z: z.clone(),
            pivoted,
            sharp,
            sharp_inverse,
        })
    }

    pub fn original(&self) -> &LabeledMatrix {
        &self.original
    }

    pub fn pivot_set(&self) -> &LabelSet {
        &self.z
    }

    pub fn pivoted(&self) -> &LabeledMatrix {
        &self.pivoted
    }

    pub fn sharp(&self) -> &LabeledMatrix {
        &self.sharp
    }

    pub fn sharp_inverse(&self) -> &LabeledMatrix {
        &self.sharp_inverse
    }

    fn correspondence(&self, x: &LabelSet, y: &LabelSet) -> Result<Correspondence> {
        Correspondence::new(&self.original.row_set(), x, y, &self.z)
    }

    pub fn nullity_report(&self, x: &LabelSet, y: &LabelSet) -> Result<NullityReport> {
        let c = self.correspondence(x, y)?;
        let (xr, yr) = c.image();
        Ok(NullityReport {
            pivoted_nullity: self.pivoted.submatrix(x, y)?.nullity(),
            original_nullity: self.original.submatrix(&xr, &yr)?.nullity(),
            r: c.r,
        })
    }

    pub fn nullity_equality(&self, x: &LabelSet, y: &LabelSet) -> Result<bool> {
        Ok(self.nullity_report(x, y)?.holds())
    }

    /// Mask form of [`Self::nullity_equality`]; bit `i` is the `i`-th label
    /// of `V` in canonical order.
    pub fn nullity_equality_masks(&self, x: u64, y: u64) -> bool {
        let (xr, yr) = f_z_mask(x, y, self.z_mask());
        self.pivoted.block_nullity(x, y) == self.original.block_nullity(xr, yr)
    }

    pub fn z_mask(&self) -> u64 {
        mask_from_subset(self.original.row_labels(), &self.z)
    }

    pub fn labels(&self) -> &[Label] {
        self.original.row_labels()
    }

    /// `inverse(sharp(A,Z))[Y ^ R, Y]`.
    pub fn kernel_transport_map(&self, x: &LabelSet, y: &LabelSet) -> Result<LabeledMatrix> {
        let c = self.correspondence(x, y)?;
        let (_, yr) = c.image();
        self.sharp_inverse.submatrix(&yr, y)
    }

    pub fn kernel_report(&self, x: &LabelSet, y: &LabelSet) -> Result<KernelReport> {
        let c = self.correspondence(x, y)?;
        let (xr, yr) = c.image();
        let map = self.sharp_inverse.submatrix(&yr, y)?;
        let composite = self.original.submatrix(&xr, &yr)?.matmul(&map)?;
        let pivoted_kernel = self.pivoted.submatrix(x, y)?.kernel_basis();
        let transported_kernel = composite.kernel_basis();
        let equal = pivoted_kernel.same_subspace(&transported_kernel)?;
        Ok(KernelReport {
            r: c.r,
            pivoted_kernel,
            transported_kernel,
            equal,
        })
    }

    pub fn kernel_equality(&self, x: &LabelSet, y: &LabelSet) -> Result<bool> {
        Ok(self.kernel_report(x, y)?.equal)
    }

    /// Whether `M = inverse(sharp(A,Z))[Y ^ R, Y]` maps `ker(ppt(A,Z)[X,Y])`
    /// one-to-one onto `ker(A[X ^ R, Y ^ R])`.
    ///
    /// The composite `A[X ^ R, Y ^ R] * M` always annihilates
    /// `ker(ppt(A,Z)[X,Y])`, but its kernel can be strictly larger because
    /// `M` need not be injective on all of `F^Y` (e.g. `Z = X = Y = V`, where
    /// the composite has no rows). Restricted to the kernel, `M` is a linear
    /// isomorphism.
    pub fn kernel_correspondence(&self, x: &LabelSet, y: &LabelSet) -> Result<bool> {
        let c = self.correspondence(x, y)?;
        let (xr, yr) = c.image();
        let map = self.sharp_inverse.submatrix(&yr, y)?;
        let target = self.original.submatrix(&xr, &yr)?;
        let source = self.pivoted.submatrix(x, y)?.kernel_basis();
        let images = source
            .vectors()
            .iter()
            .map(|v| map.apply(v))
            .collect::<Result<Vec<_>>>()?;
        for w in &images {
            if !target.apply(w)?.is_zero() {
                return Ok(false);
            }
        }
        let independent = rank_of_vectors(&images) == images.len();
        Ok(independent && images.len() == target.nullity())
    }

    /// `ker(A[X,Y])` is contained in
    /// `ker(ppt(A,Z)[X ^ R, Y ^ R] * sharp(A,Z)[Y ^ R, Y])`.
    pub fn first_inclusion(&self, x: &LabelSet, y: &LabelSet) -> Result<bool> {
        let c = self.correspondence(x, y)?;
        let (xr, yr) = c.image();
        let composite = self
            .pivoted
            .submatrix(&xr, &yr)?
            .matmul(&self.sharp.submatrix(&yr, y)?)?;
        annihilates(&composite, &self.original.submatrix(x, y)?.kernel_basis())
    }

    /// `ker(ppt(A,Z)[X ^ R, Y ^ R])` is contained in
    /// `ker(A[X,Y] * inverse(sharp(A,Z))[Y, Y ^ R])`.
    pub fn second_inclusion(&self, x: &LabelSet, y: &LabelSet) -> Result<bool> {
        let c = self.correspondence(x, y)?;
        let (xr, yr) = c.image();
        let composite = self
            .original
            .submatrix(x, y)?
            .matmul(&self.sharp_inverse.submatrix(y, &yr)?)?;
        annihilates(
            &composite,
            &self.pivoted.submatrix(&xr, &yr)?.kernel_basis(),
        )
    }
}

fn annihilates(m: &LabeledMatrix, kernel: &KernelBasis) -> Result<bool> {
    for v in kernel.vectors() {
        if !m.apply(v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `R = Z \ (X ^ Y)`, with every set checked against `V`.
pub fn compute_r(v: &LabelSet, x: &LabelSet, y: &LabelSet, z: &LabelSet) -> Result<LabelSet> {
    Ok(Correspondence::new(v, x, y, z)?.r)
}

pub fn check_nullity_equality(
    a: &LabeledMatrix,
    z: &LabelSet,
    x: &LabelSet,
    y: &LabelSet,
) -> Result<bool> {
    PivotPair::new(a, z)?.nullity_equality(x, y)
}

pub fn kernel_transport_map(
    a: &LabeledMatrix,
    z: &LabelSet,
    x: &LabelSet,
    y: &LabelSet,
) -> Result<LabeledMatrix> {
    PivotPair::new(a, z)?.kernel_transport_map(x, y)
}

pub fn check_kernel_equality(
    a: &LabeledMatrix,
    z: &LabelSet,
    x: &LabelSet,
    y: &LabelSet,
) -> Result<bool> {
    PivotPair::new(a, z)?.kernel_equality(x, y)
}

pub fn check_kernel_correspondence(
    a: &LabeledMatrix,
    z: &LabelSet,
    x: &LabelSet,
    y: &LabelSet,
) -> Result<bool> {
    PivotPair::new(a, z)?.kernel_correspondence(x, y)
}
