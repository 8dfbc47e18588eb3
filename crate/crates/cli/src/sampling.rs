//! Seeded random instances for the harness.
//!
//! Every sample family draws from its own ChaCha8 stream: the generator is
//! seeded with `ChaCha8Rng::seed_from_u64(seed)` and then switched to the
//! family's stream number, so adding or removing one suite never shifts the
//! samples of another.

use ppt_core::labels::{numbered, subset_from_mask};
use ppt_core::{Field, FieldValue, Label, LabelSet, LabeledMatrix, LabeledVector, SimpleGraph};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn stream(seed: u64, family: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(family);
    rng
}

/// Uniform residues over GF(p); over Q, zero with probability 1/3 and
/// otherwise `n/d` with `n` in `-3..=3`, `d` in `1..=3`. The skew towards zero
/// keeps singular blocks common over Q.
pub fn value(rng: &mut impl Rng, field: Field) -> FieldValue {
    match field.modulus() {
        Some(p) => field.int(rng.random_range(0..p as i64)),
        None => {
            if rng.random_ratio(1, 3) {
                field.zero()
            } else {
                let n = rng.random_range(-3..=3);
                let d = rng.random_range(1..=3);
                field.ratio(n, d).expect("nonzero denominator")
            }
        }
    }
}

pub fn square(rng: &mut impl Rng, field: Field, n: usize) -> LabeledMatrix {
    let v = numbered(n);
    LabeledMatrix::from_fn(field, &v, &v, |_, _| value(rng, field)).expect("values in field")
}

pub fn vector(rng: &mut impl Rng, field: Field, v: &LabelSet) -> LabeledVector {
    LabeledVector::from_fn(field, v, |_| value(rng, field)).expect("values in field")
}

pub fn subset(rng: &mut impl Rng, universe: &[Label]) -> LabelSet {
    subset_from_mask(universe, rng.random::<u64>())
}

/// Size in `1..=max`, or 0 when `max` is 0.
pub fn size(rng: &mut impl Rng, max: usize) -> usize {
    if max == 0 {
        0
    } else {
        rng.random_range(1..=max)
    }
}

/// Random simple graph on `1..=n`, each edge present with probability 1/2.
pub fn graph(rng: &mut impl Rng, n: usize) -> SimpleGraph {
    let vs: Vec<Label> = numbered(n).into_iter().collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<bool>() {
                edges.push((vs[i].clone(), vs[j].clone()));
            }
        }
    }
    SimpleGraph::new(numbered(n), edges).expect("valid edges")
}

/// Every GF(2) matrix on `1..=n`.
pub fn all_gf2(n: usize) -> impl Iterator<Item = LabeledMatrix> {
    let f = Field::gf2();
    let v = numbered(n);
    (0u64..1 << (n * n)).map(move |bits| {
        let mut k = 0;
        LabeledMatrix::from_fn(f, &v, &v, |_, _| {
            let e = f.int((bits >> k & 1) as i64);
            k += 1;
            e
        })
        .expect("GF(2) values")
    })
}

/// Every simple graph on `1..=n`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let vs: Vec<Label> = numbered(n).into_iter().collect();
    let pairs: Vec<(Label, Label)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (vs[i].clone(), vs[j].clone()))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e.clone());
        SimpleGraph::new(numbered(n), edges).expect("valid edges")
    })
}

/// Every vector over GF(2) on `v`.
pub fn all_gf2_vectors(v: &LabelSet) -> impl Iterator<Item = LabeledVector> + '_ {
    let f = Field::gf2();
    (0u64..1 << v.len()).map(move |bits| {
        let mut k = 0;
        LabeledVector::from_fn(f, v, |_| {
            let e = f.int((bits >> k & 1) as i64);
            k += 1;
            e
        })
        .expect("GF(2) values")
    })
}
