//! Matrices and vectors indexed by unordered label sets.
//!
//! Storage is row-major in canonical label order, which makes derived
//! equality label-wise: two matrices compare equal exactly when they agree
//! on every `(row, col)` label pair.

use std::fmt;

use crate::elim;
use crate::error::{Error, Result};
use crate::field::{Field, FieldValue, Scalar};
use crate::labels::{require_subset, Label, LabelSet};

fn position(labels: &[Label], label: &Label) -> Option<usize> {
    labels.binary_search(label).ok()
}

pub(crate) fn positions(labels: &[Label], subset: &LabelSet) -> Result<Vec<usize>> {
    subset
        .iter()
        .map(|l| position(labels, l).ok_or_else(|| Error::LabelNotFound(l.clone())))
        .collect()
}

/// Sorts labels and returns the permutation mapping canonical position to
/// input position.
fn canonical_order(labels: &[Label]) -> Result<(Vec<Label>, Vec<usize>)> {
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
    for w in order.windows(2) {
        if labels[w[0]] == labels[w[1]] {
            return Err(Error::DuplicateLabel(labels[w[0]].clone()));
        }
    }
    Ok((order.iter().map(|&i| labels[i].clone()).collect(), order))
}

fn check_field(field: Field, value: &FieldValue) -> Result<()> {
    if value.field() != field {
        return Err(Error::DescriptorMismatch(field, value.field()));
    }
    Ok(())
}

/// A `U x V` matrix over a [`Field`], i.e. a function `U x V -> F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledMatrix {
    field: Field,
    rows: Vec<Label>,
    cols: Vec<Label>,
    data: Vec<Scalar>,
}

impl LabeledMatrix {
    pub(crate) fn from_scalars(
        field: Field,
        rows: Vec<Label>,
        cols: Vec<Label>,
        data: Vec<Scalar>,
    ) -> Self {
        debug_assert_eq!(data.len(), rows.len() * cols.len());
        LabeledMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn<F>(field: Field, rows: &LabelSet, cols: &LabelSet, mut entry: F) -> Result<Self>
    where
        F: FnMut(&Label, &Label) -> FieldValue,
    {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows {
            for c in cols {
                let v = entry(r, c);
                check_field(field, &v)?;
                data.push(v.into_scalar());
            }
        }
        Ok(Self::from_scalars(
            field,
            rows.iter().cloned().collect(),
            cols.iter().cloned().collect(),
            data,
        ))
    }

    /// Builds a matrix from rows listed in any label order. `values[i][j]` is
    /// the entry at `(rows[i], cols[j])`.
    pub fn from_rows(
        field: Field,
        rows: &[Label],
        cols: &[Label],
        values: Vec<Vec<FieldValue>>,
    ) -> Result<Self> {
        if values.len() != rows.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} row labels but {} rows of entries",
                rows.len(),
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|r| r.len() != cols.len()) {
            return Err(Error::ShapeMismatch(format!(
                "{} column labels but a row with {} entries",
                cols.len(),
                bad.len()
            )));
        }
        for v in values.iter().flatten() {
            check_field(field, v)?;
        }
        let (row_labels, row_order) = canonical_order(rows)?;
        let (col_labels, col_order) = canonical_order(cols)?;
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in &row_order {
            for &j in &col_order {
                data.push(values[i][j].scalar().clone());
            }
        }
        Ok(Self::from_scalars(field, row_labels, col_labels, data))
    }

    /// Square matrix on labels `1..=n` from integer rows, row `i` being label
    /// `i + 1`. Convenient for small fixed examples.
    pub fn from_ints<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let labels: Vec<Label> = (1..=n).map(Label::from).collect();
        let values = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| field.int(v)).collect())
            .collect();
        Self::from_rows(field, &labels, &labels, values)
    }

    pub fn zero(field: Field, rows: &LabelSet, cols: &LabelSet) -> Self {
        Self::from_scalars(
            field,
            rows.iter().cloned().collect(),
            cols.iter().cloned().collect(),
            vec![field.zero_scalar(); rows.len() * cols.len()],
        )
    }

    pub fn identity(field: Field, labels: &LabelSet) -> Self {
        let n = labels.len();
        let mut m = Self::zero(field, labels, labels);
        for i in 0..n {
            m.data[i * n + i] = field.one_scalar();
        }
        m
    }

    /// The `V x V` matrix `I_X`: ones on the diagonal at labels in `X`,
    /// zeros elsewhere.
    pub fn identity_on(field: Field, x: &LabelSet, v: &LabelSet) -> Result<Self> {
        require_subset(x, v)?;
        let mut m = Self::zero(field, v, v);
        let n = v.len();
        for (i, l) in v.iter().enumerate() {
            if x.contains(l) {
                m.data[i * n + i] = field.one_scalar();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Row labels in canonical order.
    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    /// Column labels in canonical order.
    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn row_set(&self) -> LabelSet {
        self.rows.iter().cloned().collect()
    }

    pub fn col_set(&self) -> LabelSet {
        self.cols.iter().cloned().collect()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// True when row and column label sets coincide.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare)
        }
    }

    pub(crate) fn scalar_at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols.len() + j]
    }

    /// Entry by canonical positions.
    pub fn entry(&self, i: usize, j: usize) -> FieldValue {
        self.field.wrap(self.scalar_at(i, j).clone())
    }

    pub fn get(&self, row: &Label, col: &Label) -> Result<FieldValue> {
        let i = position(&self.rows, row).ok_or_else(|| Error::LabelNotFound(row.clone()))?;
        let j = position(&self.cols, col).ok_or_else(|| Error::LabelNotFound(col.clone()))?;
        Ok(self.entry(i, j))
    }

    /// Rows as lists of values, in canonical order.
    pub fn to_rows(&self) -> Vec<Vec<FieldValue>> {
        (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.scalar_at(i, j).clone());
            }
        }
        Self::from_scalars(
            self.field,
            rows.iter().map(|&i| self.rows[i].clone()).collect(),
            cols.iter().map(|&j| self.cols[j].clone()).collect(),
            data,
        )
    }

    /// The restriction `A[X,Y]`.
    pub fn submatrix(&self, x: &LabelSet, y: &LabelSet) -> Result<Self> {
        let rows = positions(&self.rows, x)?;
        let cols = positions(&self.cols, y)?;
        Ok(self.select(&rows, &cols))
    }

    pub fn rank(&self) -> usize {
        elim::rank(self.field, self.data.clone(), self.nrows(), self.ncols())
    }

    /// `|cols| - rank`. A `0 x k` matrix has nullity `k`.
    pub fn nullity(&self) -> usize {
        self.ncols() - self.rank()
    }

    /// Rank of the block selected by bit masks over the canonical row and
    /// column positions (bit `i` = `i`-th label). Skips building a labeled
    /// submatrix; used by the exhaustive enumerations.
    pub fn block_rank(&self, row_mask: u64, col_mask: u64) -> usize {
        let (row_mask, col_mask) = (
            row_mask & mask_below(self.nrows()),
            col_mask & mask_below(self.ncols()),
        );
        if self.field.is_gf2() && self.ncols() <= 64 {
            // masking columns in place leaves the rank unchanged
            let packed = bits(row_mask).map(|i| {
                bits(col_mask).fold(0u64, |acc, j| match self.scalar_at(i, j) {
                    Scalar::Residue(1) => acc | 1 << j,
                    _ => acc,
                })
            });
            return elim::gf2_rank(packed);
        }
        let rows: Vec<usize> = bits(row_mask).collect();
        let cols: Vec<usize> = bits(col_mask).collect();
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in &rows {
            for &j in &cols {
                data.push(self.scalar_at(i, j).clone());
            }
        }
        elim::rank(self.field, data, rows.len(), cols.len())
    }

    pub fn block_nullity(&self, row_mask: u64, col_mask: u64) -> usize {
        (col_mask & mask_below(self.ncols())).count_ones() as usize
            - self.block_rank(row_mask, col_mask)
    }

    /// Canonical basis of `{v : A v = 0}`: one vector per non-pivot column of
    /// the reduced row echelon form, carrying a 1 at that column, ordered by
    /// label.
    pub fn kernel_basis(&self) -> KernelBasis {
        let (m, n) = (self.nrows(), self.ncols());
        let red = elim::rref(self.field, self.data.clone(), m, n, n);
        let mut pivot_row = vec![None; n];
        for (r, &c) in red.pivots.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        let vectors = (0..n)
            .filter(|&c| pivot_row[c].is_none())
            .map(|free| {
                let data = (0..n)
                    .map(|c| match pivot_row[c] {
                        _ if c == free => self.field.one_scalar(),
                        Some(r) => self.field.neg(red.at(r, free)),
                        None => self.field.zero_scalar(),
                    })
                    .collect();
                LabeledVector::from_scalars(self.field, self.cols.clone(), data)
            })
            .collect();
        KernelBasis {
            field: self.field,
            column_labels: self.cols.clone(),
            vectors,
        }
    }

    /// Exact inverse. The `0 x 0` matrix is its own inverse.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.nrows();
        let w = 2 * n;
        let mut data = Vec::with_capacity(n * w);
        for i in 0..n {
            data.extend_from_slice(&self.data[i * n..(i + 1) * n]);
            data.extend((0..n).map(|j| {
                if i == j {
                    self.field.one_scalar()
                } else {
                    self.field.zero_scalar()
                }
            }));
        }
        let red = elim::rref(self.field, data, n, w, n);
        if red.pivots.len() < n {
            return Err(Error::Singular {
                rank: red.pivots.len(),
                size: n,
            });
        }
        let inv = (0..n)
            .flat_map(|i| (n..w).map(move |j| (i, j)))
            .map(|(i, j)| red.at(i, j).clone())
            .collect();
        Ok(Self::from_scalars(
            self.field,
            self.rows.clone(),
            self.cols.clone(),
            inv,
        ))
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && self.rank() == self.nrows()
    }

    fn require_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DescriptorMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Matrix product; requires `cols(self) = rows(other)`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.require_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(
                "column labels of the left factor differ from row labels of the right factor"
                    .into(),
            ));
        }
        let (m, k, n) = (self.nrows(), self.ncols(), other.ncols());
        let f = self.field;
        let mut data = vec![f.zero_scalar(); m * n];
        for i in 0..m {
            for t in 0..k {
                let a = self.scalar_at(i, t);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let prod = f.mul(a, other.scalar_at(t, j));
                    data[i * n + j] = f.add(&data[i * n + j], &prod);
                }
            }
        }
        Ok(Self::from_scalars(
            f,
            self.rows.clone(),
            other.cols.clone(),
            data,
        ))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        self.require_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(
                "operands have different label sets".into(),
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(Self::from_scalars(
            self.field,
            self.rows.clone(),
            self.cols.clone(),
            data,
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Self::from_scalars(self.field, self.rows.clone(), self.cols.clone(), data)
    }

    pub fn transpose(&self) -> Self {
        let (m, n) = (self.nrows(), self.ncols());
        let data = (0..n)
            .flat_map(|j| (0..m).map(move |i| (i, j)))
            .map(|(i, j)| self.scalar_at(i, j).clone())
            .collect();
        Self::from_scalars(self.field, self.cols.clone(), self.rows.clone(), data)
    }

    /// Matrix-vector product; `v` must be indexed by the column labels.
    pub fn apply(&self, v: &LabeledVector) -> Result<LabeledVector> {
        if self.field != v.field {
            return Err(Error::DescriptorMismatch(self.field, v.field));
        }
        if self.cols != v.labels {
            return Err(Error::ShapeMismatch(
                "vector labels differ from column labels".into(),
            ));
        }
        let f = self.field;
        let data = (0..self.nrows())
            .map(|i| {
                (0..self.ncols()).fold(f.zero_scalar(), |acc, j| {
                    f.add(&acc, &f.mul(self.scalar_at(i, j), &v.data[j]))
                })
            })
            .collect();
        Ok(LabeledVector::from_scalars(f, self.rows.clone(), data))
    }

    /// Replaces the rows labelled by `rows` with the corresponding rows of
    /// `source`, which must share the column labels.
    pub(crate) fn with_rows_from(&self, rows: &LabelSet, source: &LabeledMatrix) -> Self {
        let mut out = self.clone();
        let n = self.ncols();
        for l in rows {
            let i = position(&self.rows, l).expect("row label present");
            let s = position(&source.rows, l).expect("row label present in source");
            out.data[i * n..(i + 1) * n].clone_from_slice(&source.data[s * n..(s + 1) * n]);
        }
        out
    }
}

/// Rank of a list of vectors sharing one index set.
pub(crate) fn rank_of_vectors(vectors: &[LabeledVector]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let data = vectors
        .iter()
        .flat_map(|v| v.data.iter().cloned())
        .collect();
    elim::rank(first.field, data, vectors.len(), first.len())
}

/// Positions of the set bits, ascending.
fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        let i = mask.trailing_zeros() as usize;
        mask &= mask.wrapping_sub(1);
        (i < 64).then_some(i)
    })
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Display for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_matrix(self))
    }
}

/// A vector indexed by a label set, i.e. a function `V -> F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledVector {
    field: Field,
    labels: Vec<Label>,
    data: Vec<Scalar>,
}

impl LabeledVector {
    pub(crate) fn from_scalars(field: Field, labels: Vec<Label>, data: Vec<Scalar>) -> Self {
        LabeledVector {
            field,
            labels,
            data,
        }
    }

    pub fn from_fn<F>(field: Field, labels: &LabelSet, mut entry: F) -> Result<Self>
    where
        F: FnMut(&Label) -> FieldValue,
    {
        let mut data = Vec::with_capacity(labels.len());
        for l in labels {
            let v = entry(l);
            check_field(field, &v)?;
            data.push(v.into_scalar());
        }
        Ok(Self::from_scalars(
            field,
            labels.iter().cloned().collect(),
            data,
        ))
    }

    /// Vector from `(label, value)` pairs in any order.
    pub fn from_pairs(field: Field, pairs: Vec<(Label, FieldValue)>) -> Result<Self> {
        let labels: Vec<Label> = pairs.iter().map(|(l, _)| l.clone()).collect();
        let (sorted, order) = canonical_order(&labels)?;
        let mut data = Vec::with_capacity(labels.len());
        for i in order {
            check_field(field, &pairs[i].1)?;
            data.push(pairs[i].1.scalar().clone());
        }
        Ok(Self::from_scalars(field, sorted, data))
    }

    pub fn zero(field: Field, labels: &LabelSet) -> Self {
        Self::from_scalars(
            field,
            labels.iter().cloned().collect(),
            vec![field.zero_scalar(); labels.len()],
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label_set(&self) -> LabelSet {
        self.labels.iter().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, label: &Label) -> Result<FieldValue> {
        let i = position(&self.labels, label).ok_or_else(|| Error::LabelNotFound(label.clone()))?;
        Ok(self.field.wrap(self.data[i].clone()))
    }

    /// Values in canonical label order.
    pub fn values(&self) -> Vec<FieldValue> {
        self.data
            .iter()
            .map(|s| self.field.wrap(s.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| self.field.is_zero(s))
    }

    /// Pads with zeros to the larger index set `v`, which must contain this
    /// vector's labels.
    pub fn pad(&self, v: &LabelSet) -> Result<Self> {
        require_subset(&self.label_set(), v)?;
        let data = v
            .iter()
            .map(|l| match position(&self.labels, l) {
                Some(i) => self.data[i].clone(),
                None => self.field.zero_scalar(),
            })
            .collect();
        Ok(Self::from_scalars(
            self.field,
            v.iter().cloned().collect(),
            data,
        ))
    }

    /// Restricts to the labels in `y`, which must be a subset of this
    /// vector's labels.
    pub fn project(&self, y: &LabelSet) -> Result<Self> {
        let idx = positions(&self.labels, y)?;
        let data = idx.iter().map(|&i| self.data[i].clone()).collect();
        Ok(Self::from_scalars(
            self.field,
            y.iter().cloned().collect(),
            data,
        ))
    }

    pub(crate) fn scalars(&self) -> &[Scalar] {
        &self.data
    }
}

/// A basis of the null space of a matrix, as vectors over its column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    field: Field,
    column_labels: Vec<Label>,
    vectors: Vec<LabeledVector>,
}

impl KernelBasis {
    pub fn column_labels(&self) -> &[Label] {
        &self.column_labels
    }

    pub fn vectors(&self) -> &[LabeledVector] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    fn rank_with(&self, extra: Option<&LabeledVector>) -> usize {
        let n = self.column_labels.len();
        let rows: Vec<&LabeledVector> = self.vectors.iter().chain(extra).collect();
        let data = rows
            .iter()
            .flat_map(|v| v.scalars().iter().cloned())
            .collect();
        elim::rank(self.field, data, rows.len(), n)
    }

    /// Whether `v` lies in the span of this basis.
    pub fn contains(&self, v: &LabeledVector) -> Result<bool> {
        if v.field() != self.field {
            return Err(Error::DescriptorMismatch(self.field, v.field()));
        }
        if v.labels() != self.column_labels.as_slice() {
            return Err(Error::ShapeMismatch(
                "vector labels differ from the kernel's index set".into(),
            ));
        }
        Ok(self.rank_with(Some(v)) == self.rank_with(None))
    }

    /// Subspace equality by mutual membership of basis vectors.
    pub fn same_subspace(&self, other: &KernelBasis) -> Result<bool> {
        if self.dim() != other.dim() {
            return Ok(false);
        }
        for v in &other.vectors {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        for v in &self.vectors {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
