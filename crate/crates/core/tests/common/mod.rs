#![allow(dead_code)]

pub mod golden;
pub mod oracles;

use ppt_core::labels::{numbered, subset_from_mask};
use ppt_core::{Field, FieldValue, Label, LabelSet, LabeledMatrix};
use proptest::prelude::*;

pub fn gf(p: u32) -> Field {
    Field::prime(p).unwrap()
}

pub fn any_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::gf2()),
        Just(gf(3)),
        Just(gf(5)),
        Just(Field::rationals()),
    ]
}

/// Entries skewed towards zero so that singular blocks are common.
pub fn entry(field: Field) -> BoxedStrategy<FieldValue> {
    match field.modulus() {
        Some(p) => (0..i64::from(p)).prop_map(move |v| field.int(v)).boxed(),
        None => prop_oneof![
            2 => Just(field.zero()),
            3 => (-3i64..=3, 1i64..=3).prop_map(move |(n, d)| field.ratio(n, d).unwrap()),
        ]
        .boxed(),
    }
}

pub fn matrix_from(field: Field, n: usize, entries: Vec<FieldValue>) -> LabeledMatrix {
    let v = numbered(n);
    let mut it = entries.into_iter();
    LabeledMatrix::from_fn(field, &v, &v, |_, _| it.next().unwrap()).unwrap()
}

pub fn square_over(field: Field, max_n: usize) -> impl Strategy<Value = LabeledMatrix> {
    (0..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(entry(field), n * n).prop_map(move |e| matrix_from(field, n, e))
    })
}

pub fn square(max_n: usize) -> impl Strategy<Value = LabeledMatrix> {
    any_field().prop_flat_map(move |f| square_over(f, max_n))
}

pub fn rect(max_rows: usize, max_cols: usize) -> impl Strategy<Value = LabeledMatrix> {
    (any_field(), 0..=max_rows, 0..=max_cols).prop_flat_map(|(f, r, c)| {
        proptest::collection::vec(entry(f), r * c).prop_map(move |e| {
            let mut it = e.into_iter();
            LabeledMatrix::from_fn(f, &numbered(r), &numbered(c), |_, _| it.next().unwrap())
                .unwrap()
        })
    })
}

pub fn universe(a: &LabeledMatrix) -> Vec<Label> {
    a.row_labels().to_vec()
}

pub fn subset(a: &LabeledMatrix, mask: u64) -> LabelSet {
    subset_from_mask(a.row_labels(), mask)
}

pub fn all_subsets(labels: &[Label]) -> Vec<LabelSet> {
    (0..1u64 << labels.len())
        .map(|m| subset_from_mask(labels, m))
        .collect()
}

/// Every square matrix over GF(2) on `n` labels.
pub fn all_gf2(n: usize) -> impl Iterator<Item = LabeledMatrix> {
    let f = Field::gf2();
    (0u64..1 << (n * n)).map(move |bits| {
        let entries = (0..n * n).map(|k| f.int((bits >> k & 1) as i64)).collect();
        matrix_from(f, n, entries)
    })
}

pub fn set(names: &[&str]) -> LabelSet {
    ppt_core::labels::labels(names.iter().copied()).unwrap()
}
