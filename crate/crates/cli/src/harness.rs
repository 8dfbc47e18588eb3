//! Reproducible property harness behind `pptkit verify`.
//!
//! Each suite first draws all of its instances sequentially from seeded
//! streams (see [`crate::sampling`]), then checks them in parallel and
//! aggregates in instance order, so a report depends only on the config.

use std::fmt::{self, Write as _};

use ppt_core::format::{write_graph, write_matrix};
use ppt_core::labels::{format_set, numbered, subset_from_mask, symmetric_difference};
use ppt_core::nullity::{f_z_mask, PivotPair};
use ppt_core::pivot::{partial_inverse_holds, sharp};
use ppt_core::polynomial::{nullity_polynomial, q_polynomial};
use ppt_core::{Field, Label, LabelSet, LabeledMatrix, LabeledVector, Result, SimpleGraph};
use rand::Rng;
use rayon::prelude::*;

use crate::sampling;

/// Signature of the transform under test.
pub type PptFn = fn(&LabeledMatrix, &LabelSet) -> Result<LabeledMatrix>;

/// Property suites in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    PartialInverse,
    PptInvolution,
    PptComposition,
    SharpInverse,
    PptInverse,
    NullityEquality,
    KernelInclusion,
    KernelCorrespondence,
    KernelEquality,
    PrincipalNullity,
    ComplementRank,
    InverseNullity,
    PairCorrespondence,
    PInvariance,
    QInvariance,
    LcIdentity,
    CutRankInvariance,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::PartialInverse,
        Suite::PptInvolution,
        Suite::PptComposition,
        Suite::SharpInverse,
        Suite::PptInverse,
        Suite::NullityEquality,
        Suite::KernelInclusion,
        Suite::KernelCorrespondence,
        Suite::KernelEquality,
        Suite::PrincipalNullity,
        Suite::ComplementRank,
        Suite::InverseNullity,
        Suite::PairCorrespondence,
        Suite::PInvariance,
        Suite::QInvariance,
        Suite::LcIdentity,
        Suite::CutRankInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PartialInverse => "partial-inverse",
            Suite::PptInvolution => "ppt-involution",
            Suite::PptComposition => "ppt-composition",
            Suite::SharpInverse => "sharp-inverse",
            Suite::PptInverse => "ppt-inverse",
            Suite::NullityEquality => "nullity-equality",
            Suite::KernelInclusion => "kernel-inclusion",
            Suite::KernelCorrespondence => "kernel-correspondence",
            Suite::KernelEquality => "kernel-equality",
            Suite::PrincipalNullity => "principal-nullity",
            Suite::ComplementRank => "complement-rank",
            Suite::InverseNullity => "inverse-nullity",
            Suite::PairCorrespondence => "pair-correspondence",
            Suite::PInvariance => "p-invariance",
            Suite::QInvariance => "q-invariance",
            Suite::LcIdentity => "lc-identity",
            Suite::CutRankInvariance => "cut-rank-invariance",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Suites run when none are selected explicitly. `kernel-equality`
    /// checks equality of kernels of the transported composite, which only
    /// holds up to the isomorphism checked by `kernel-correspondence`; it
    /// is available on request.
    pub fn defaults() -> Vec<Suite> {
        Suite::ALL
            .into_iter()
            .filter(|s| *s != Suite::KernelEquality)
            .collect()
    }

    /// `(exhaustive GF(2) bound, random samples per field, random size bound)`.
    fn plan(self) -> (usize, usize, usize) {
        match self {
            Suite::PartialInverse => (3, 500, 6),
            Suite::PptInvolution
            | Suite::PptComposition
            | Suite::SharpInverse
            | Suite::PptInverse => (3, 200, 6),
            Suite::NullityEquality => (0, 50, 5),
            Suite::KernelInclusion | Suite::KernelCorrespondence | Suite::KernelEquality => {
                (0, 50, 4)
            }
            Suite::PrincipalNullity | Suite::ComplementRank | Suite::InverseNullity => (4, 50, 5),
            Suite::PairCorrespondence => (4, 0, 0),
            Suite::PInvariance | Suite::QInvariance => (0, 25, 6),
            Suite::LcIdentity => (4, 200, 8),
            Suite::CutRankInvariance => (0, 200, 8),
        }
    }

    /// Stream family; the kernel suites reuse the nullity samples.
    fn family(self) -> u64 {
        match self {
            Suite::KernelInclusion | Suite::KernelCorrespondence | Suite::KernelEquality => {
                Suite::NullityEquality as u64
            }
            Suite::QInvariance => Suite::PInvariance as u64,
            other => other as u64,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    /// Fields for the random matrix samples; exhaustive GF(2) enumeration
    /// runs only when GF(2) is listed. Graph suites always work over GF(2).
    pub fields: Vec<Field>,
    /// Caps every size bound, exhaustive and random.
    pub max_size: Option<usize>,
    /// Replaces every suite's random sample count.
    pub samples: Option<usize>,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub ppt: PptFn,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            fields: vec![
                Field::gf2(),
                Field::prime(3).expect("3 is prime"),
                Field::rationals(),
            ],
            max_size: None,
            samples: None,
            seed: 0,
            suites: Suite::defaults(),
            ppt: ppt_core::pivot::ppt,
        }
    }
}

impl HarnessConfig {
    fn bounds(&self, suite: Suite) -> (usize, usize, usize) {
        let (exhaustive, samples, size) = suite.plan();
        let cap = self.max_size.unwrap_or(usize::MAX);
        (
            exhaustive.min(cap),
            self.samples.unwrap_or(samples),
            size.min(cap),
        )
    }

    fn exhaustive_gf2(&self) -> bool {
        self.fields.iter().any(|f| f.is_gf2())
    }

    fn stream(&self, suite: Suite, field: Option<Field>) -> rand_chacha::ChaCha8Rng {
        let code = field.map_or(0, |f| f.modulus().map_or(1, u64::from));
        sampling::stream(self.seed, suite.family() << 32 | code)
    }

    /// Random square matrices: `samples` per field with sizes up to the bound.
    fn random_matrices(&self, suite: Suite) -> Vec<LabeledMatrix> {
        let (_, samples, size) = self.bounds(suite);
        let mut out = Vec::new();
        for &field in &self.fields {
            let mut rng = self.stream(suite, Some(field));
            for _ in 0..samples {
                let n = sampling::size(&mut rng, size);
                out.push(sampling::square(&mut rng, field, n));
            }
        }
        out
    }

    /// All GF(2) matrices up to the exhaustive bound, when enabled.
    fn exhaustive_matrices(&self, suite: Suite) -> Vec<(usize, u64)> {
        let (bound, _, _) = self.bounds(suite);
        if !self.exhaustive_gf2() {
            return Vec::new();
        }
        (0..=bound)
            .flat_map(|n| (0u64..1 << (n * n)).map(move |bits| (n, bits)))
            .collect()
    }
}

fn gf2_from_bits(n: usize, bits: u64) -> LabeledMatrix {
    let f = Field::gf2();
    let v = numbered(n);
    let mut k = 0;
    LabeledMatrix::from_fn(f, &v, &v, |_, _| {
        let e = f.int((bits >> k & 1) as i64);
        k += 1;
        e
    })
    .expect("GF(2) values")
}

/// Random `Z` with `A[Z,Z]` nonsingular; falls back to the empty set.
fn random_pivot(rng: &mut impl Rng, a: &LabeledMatrix) -> LabelSet {
    for _ in 0..32 {
        let z = sampling::subset(rng, a.row_labels());
        if pivot_defined(a, &z) {
            return z;
        }
    }
    LabelSet::new()
}

fn pivot_defined(a: &LabeledMatrix, z: &LabelSet) -> bool {
    a.submatrix(z, z)
        .map(|b| b.is_nonsingular())
        .unwrap_or(false)
}

fn all_subsets(universe: &[Label]) -> Vec<LabelSet> {
    (0u64..1 << universe.len())
        .map(|m| subset_from_mask(universe, m))
        .collect()
}

enum Verdict {
    Pass,
    Fail(String),
    Skip,
}

impl From<Result<Verdict>> for Verdict {
    fn from(r: Result<Verdict>) -> Self {
        r.unwrap_or_else(|e| Verdict::Fail(format!("    error: {e}\n")))
    }
}

/// Indented counterexample block.
#[derive(Default)]
struct Witness(String);

impl Witness {
    fn matrix(mut self, name: &str, m: &LabeledMatrix) -> Self {
        let _ = writeln!(self.0, "    {name}:");
        for line in write_matrix(m).lines() {
            let _ = writeln!(self.0, "      {line}");
        }
        self
    }

    fn graph(mut self, name: &str, g: &SimpleGraph) -> Self {
        let _ = writeln!(self.0, "    {name}:");
        for line in write_graph(g).lines() {
            let _ = writeln!(self.0, "      {line}");
        }
        self
    }

    fn set(mut self, name: &str, s: &LabelSet) -> Self {
        let _ = writeln!(self.0, "    {name} = {}", format_set(s));
        self
    }

    fn line(mut self, text: impl fmt::Display) -> Self {
        let _ = writeln!(self.0, "    {text}");
        self
    }

    fn fail(self) -> Verdict {
        Verdict::Fail(self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub passed: usize,
    pub total: usize,
    /// First failing instance, rendered as an indented block.
    pub counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub outcomes: Vec<SuiteOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(SuiteOutcome::ok)
    }

    pub fn outcome(&self, suite: Suite) -> Option<&SuiteOutcome> {
        self.outcomes.iter().find(|o| o.suite == suite)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = if o.ok() { "ok" } else { "FAIL" };
            writeln!(f, "{}: {}/{} {status}", o.suite, o.passed, o.total)?;
            if let Some(block) = &o.counterexample {
                f.write_str(block)?;
            }
        }
        Ok(())
    }
}

fn evaluate<T, F>(suite: Suite, items: Vec<T>, check: F) -> SuiteOutcome
where
    T: Sync,
    F: Fn(&T) -> Verdict + Sync + Send,
{
    evaluate_groups(suite, items, |item| vec![check(item)])
}

/// As [`evaluate`], for items that expand into several instances.
fn evaluate_groups<T, F>(suite: Suite, items: Vec<T>, check: F) -> SuiteOutcome
where
    T: Sync,
    F: Fn(&T) -> Vec<Verdict> + Sync + Send,
{
    let verdicts: Vec<Verdict> = items
        .par_iter()
        .map(check)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut outcome = SuiteOutcome {
        suite,
        passed: 0,
        total: 0,
        counterexample: None,
    };
    for v in verdicts {
        match v {
            Verdict::Pass => {
                outcome.passed += 1;
                outcome.total += 1;
            }
            Verdict::Fail(block) => {
                outcome.total += 1;
                outcome.counterexample.get_or_insert(block);
            }
            Verdict::Skip => {}
        }
    }
    outcome
}

/// Runs the selected suites in declaration order.
pub fn run(config: &HarnessConfig) -> Report {
    let mut selected = config.suites.clone();
    selected.sort();
    selected.dedup();
    Report {
        outcomes: selected.into_iter().map(|s| run_suite(config, s)).collect(),
    }
}

pub fn run_suite(config: &HarnessConfig, suite: Suite) -> SuiteOutcome {
    match suite {
        Suite::PartialInverse => partial_inverse(config),
        Suite::PptInvolution | Suite::PptComposition | Suite::SharpInverse | Suite::PptInverse => {
            laws(config, suite)
        }
        Suite::NullityEquality => nullity_equality(config),
        Suite::KernelInclusion | Suite::KernelCorrespondence | Suite::KernelEquality => {
            kernels(config, suite)
        }
        Suite::PrincipalNullity | Suite::ComplementRank | Suite::InverseNullity => {
            specializations(config, suite)
        }
        Suite::PairCorrespondence => pair_correspondence(config),
        Suite::PInvariance | Suite::QInvariance => invariance(config, suite),
        Suite::LcIdentity => lc_identity(config),
        Suite::CutRankInvariance => cut_rank_invariance(config),
    }
}

fn partial_inverse(config: &HarnessConfig) -> SuiteOutcome {
    let suite = Suite::PartialInverse;
    // (A, Z, vectors); exhaustive entries carry no vectors and use all of them.
    let mut items: Vec<(LabeledMatrix, LabelSet, Option<LabeledVector>)> = Vec::new();
    for (n, bits) in config.exhaustive_matrices(suite) {
        let a = gf2_from_bits(n, bits);
        for z in all_subsets(a.row_labels()) {
            items.push((a.clone(), z, None));
        }
    }
    let (_, samples, size) = config.bounds(suite);
    for &field in &config.fields {
        let mut rng = config.stream(suite, Some(field));
        for _ in 0..samples {
            let n = sampling::size(&mut rng, size);
            let a = sampling::square(&mut rng, field, n);
            let z = random_pivot(&mut rng, &a);
            let x = sampling::vector(&mut rng, field, &a.row_set());
            items.push((a, z, Some(x)));
        }
    }
    evaluate(suite, items, |(a, z, x)| {
        Verdict::from((|| {
            if !pivot_defined(a, z) {
                return Ok(Verdict::Skip);
            }
            let pivoted = (config.ppt)(a, z)?;
            let v = a.row_set();
            let vectors: Vec<LabeledVector> = match x {
                Some(x) => vec![x.clone()],
                None => sampling::all_gf2_vectors(&v).collect(),
            };
            for x in &vectors {
                if !partial_inverse_holds(a, z, &pivoted, x)? {
                    let values: Vec<String> = x.values().iter().map(|e| e.to_string()).collect();
                    return Ok(Witness::default()
                        .matrix("A", a)
                        .set("Z", z)
                        .line(format_args!("x = ({})", values.join(", ")))
                        .matrix("ppt(A,Z)", &pivoted)
                        .line("ppt(A,Z) does not swap (Ax on Z, x off Z) with (x on Z, Ax off Z)")
                        .fail());
                }
            }
            Ok(Verdict::Pass)
        })())
    })
}

fn laws(config: &HarnessConfig, suite: Suite) -> SuiteOutcome {
    let ppt = config.ppt;
    // (A, Z, Y); Y only matters for composition.
    let mut items: Vec<(LabeledMatrix, LabelSet, LabelSet)> = Vec::new();
    for (n, bits) in config.exhaustive_matrices(suite) {
        let a = gf2_from_bits(n, bits);
        let subsets = all_subsets(a.row_labels());
        match suite {
            Suite::PptInverse => items.push((a.clone(), a.row_set(), LabelSet::new())),
            Suite::PptComposition => {
                for z in &subsets {
                    for y in &subsets {
                        items.push((a.clone(), z.clone(), y.clone()));
                    }
                }
            }
            _ => items.extend(subsets.into_iter().map(|z| (a.clone(), z, LabelSet::new()))),
        }
    }
    let (_, samples, size) = config.bounds(suite);
    for &field in &config.fields {
        let mut rng = config.stream(suite, Some(field));
        for _ in 0..samples {
            let n = sampling::size(&mut rng, size);
            let a = sampling::square(&mut rng, field, n);
            let z = if suite == Suite::PptInverse {
                a.row_set()
            } else {
                random_pivot(&mut rng, &a)
            };
            let y = sampling::subset(&mut rng, a.row_labels());
            items.push((a, z, y));
        }
    }
    evaluate(suite, items, |(a, z, y)| {
        Verdict::from((|| {
            if !pivot_defined(a, z) {
                return Ok(Verdict::Skip);
            }
            let once = ppt(a, z)?;
            let witness = Witness::default().matrix("A", a).set("Z", z);
            Ok(match suite {
                Suite::PptInvolution => {
                    let twice = ppt(&once, z)?;
                    if twice == *a {
                        Verdict::Pass
                    } else {
                        witness.matrix("ppt(ppt(A,Z),Z)", &twice).fail()
                    }
                }
                Suite::PptComposition => {
                    if !pivot_defined(&once, y) {
                        return Ok(Verdict::Skip);
                    }
                    let lhs = ppt(&once, y)?;
                    let zy = symmetric_difference(z, y);
                    match ppt(a, &zy) {
                        Ok(rhs) if rhs == lhs => Verdict::Pass,
                        Ok(rhs) => witness
                            .set("Y", y)
                            .matrix("ppt(ppt(A,Z),Y)", &lhs)
                            .matrix("ppt(A,Z^Y)", &rhs)
                            .fail(),
                        Err(e) => witness
                            .set("Y", y)
                            .matrix("ppt(ppt(A,Z),Y)", &lhs)
                            .line(format_args!("ppt(A,Z^Y) undefined: {e}"))
                            .fail(),
                    }
                }
                Suite::SharpInverse => {
                    let lhs = sharp(a, z)?.inverse()?;
                    let rhs = sharp(&once, z)?;
                    if lhs == rhs {
                        Verdict::Pass
                    } else {
                        witness
                            .matrix("inverse(sharp(A,Z))", &lhs)
                            .matrix("sharp(ppt(A,Z),Z)", &rhs)
                            .fail()
                    }
                }
                _ => {
                    let inverse = a.inverse()?;
                    if once == inverse {
                        Verdict::Pass
                    } else {
                        witness
                            .matrix("ppt(A,V)", &once)
                            .matrix("inverse(A)", &inverse)
                            .fail()
                    }
                }
            })
        })())
    })
}

/// `(A, Z)` for every sampled `A` and every `Z`; singular pivots are skipped
/// at check time.
fn matrix_pivot_items(config: &HarnessConfig, suite: Suite) -> Vec<(LabeledMatrix, LabelSet)> {
    config
        .random_matrices(suite)
        .into_iter()
        .flat_map(|a| {
            let subsets = all_subsets(a.row_labels());
            subsets.into_iter().map(move |z| (a.clone(), z))
        })
        .collect()
}

fn pair(config: &HarnessConfig, a: &LabeledMatrix, z: &LabelSet) -> Result<PivotPair> {
    PivotPair::with_pivoted(a, z, (config.ppt)(a, z)?)
}

fn nullity_equality(config: &HarnessConfig) -> SuiteOutcome {
    let suite = Suite::NullityEquality;
    evaluate(suite, matrix_pivot_items(config, suite), |(a, z)| {
        Verdict::from((|| {
            if !pivot_defined(a, z) {
                return Ok(Verdict::Skip);
            }
            let pair = pair(config, a, z)?;
            let n = a.nrows();
            for x in 0u64..1 << n {
                for y in 0u64..1 << n {
                    if pair.nullity_equality_masks(x, y) {
                        continue;
                    }
                    let (x, y) = (
                        subset_from_mask(a.row_labels(), x),
                        subset_from_mask(a.row_labels(), y),
                    );
                    let report = pair.nullity_report(&x, &y)?;
                    return Ok(Witness::default()
                        .matrix("A", a)
                        .set("Z", z)
                        .set("X", &x)
                        .set("Y", &y)
                        .set("R", &report.r)
                        .line(format_args!(
                            "n(ppt(A,Z)[X,Y]) = {}",
                            report.pivoted_nullity
                        ))
                        .line(format_args!("n(A[X^R,Y^R]) = {}", report.original_nullity))
                        .fail());
                }
            }
            Ok(Verdict::Pass)
        })())
    })
}

fn kernels(config: &HarnessConfig, suite: Suite) -> SuiteOutcome {
    evaluate(suite, matrix_pivot_items(config, suite), |(a, z)| {
        Verdict::from((|| {
            if !pivot_defined(a, z) {
                return Ok(Verdict::Skip);
            }
            let pair = pair(config, a, z)?;
            let subsets = all_subsets(a.row_labels());
            for x in &subsets {
                for y in &subsets {
                    let holds = match suite {
                        Suite::KernelInclusion => {
                            pair.first_inclusion(x, y)? && pair.second_inclusion(x, y)?
                        }
                        Suite::KernelCorrespondence => pair.kernel_correspondence(x, y)?,
                        _ => pair.kernel_equality(x, y)?,
                    };
                    if holds {
                        continue;
                    }
                    let report = pair.kernel_report(x, y)?;
                    return Ok(Witness::default()
                        .matrix("A", a)
                        .set("Z", z)
                        .set("X", x)
                        .set("Y", y)
                        .set("R", &report.r)
                        .line(format_args!(
                            "dim ker(ppt(A,Z)[X,Y]) = {}",
                            report.pivoted_kernel.dim()
                        ))
                        .line(format_args!(
                            "dim ker(A[X^R,Y^R] * inverse(sharp(A,Z))[Y^R,Y]) = {}",
                            report.transported_kernel.dim()
                        ))
                        .fail());
                }
            }
            Ok(Verdict::Pass)
        })())
    })
}

fn specializations(config: &HarnessConfig, suite: Suite) -> SuiteOutcome {
    enum Source {
        Bits(usize, u64),
        Sample(LabeledMatrix),
    }
    // Each matrix with the pivot masks to try on it.
    let pivots = |n: usize| -> Vec<u64> {
        if suite == Suite::InverseNullity {
            vec![(1 << n) - 1]
        } else {
            (0u64..1 << n).collect()
        }
    };
    let mut items: Vec<(Source, Vec<u64>)> = Vec::new();
    for (n, bits) in config.exhaustive_matrices(suite) {
        items.push((Source::Bits(n, bits), pivots(n)));
    }
    for a in config.random_matrices(suite) {
        let zs = pivots(a.nrows());
        items.push((Source::Sample(a), zs));
    }
    evaluate_groups(suite, items, |(source, zs)| {
        let a = match source {
            Source::Bits(n, bits) => gf2_from_bits(*n, *bits),
            Source::Sample(a) => a.clone(),
        };
        zs.iter()
            .map(|&zm| specialization_at(config, suite, &a, zm))
            .collect()
    })
}

fn specialization_at(config: &HarnessConfig, suite: Suite, a: &LabeledMatrix, zm: u64) -> Verdict {
    Verdict::from((|| {
        if a.block_rank(zm, zm) != zm.count_ones() as usize {
            return Ok(Verdict::Skip);
        }
        let z = subset_from_mask(a.row_labels(), zm);
        let pivoted = (config.ppt)(a, &z)?;
        let labels = a.row_labels();
        let all = (1u64 << labels.len()) - 1;
        let set = |m: u64| subset_from_mask(labels, m);
        let witness = || Witness::default().matrix("A", a).set("Z", &z);
        for x in 0..=all {
            match suite {
                Suite::PrincipalNullity => {
                    let lhs = pivoted.block_nullity(x, x);
                    let rhs = a.block_nullity(x ^ zm, x ^ zm);
                    if lhs != rhs {
                        return Ok(witness()
                            .set("X", &set(x))
                            .line(format_args!("n(ppt(A,Z)[X,X]) = {lhs}"))
                            .line(format_args!("n(A[X^Z,X^Z]) = {rhs}"))
                            .fail());
                    }
                }
                Suite::ComplementRank => {
                    let lhs = pivoted.block_rank(x, all & !x);
                    let rhs = a.block_rank(x, all & !x);
                    if lhs != rhs {
                        return Ok(witness()
                            .set("X", &set(x))
                            .line(format_args!("r(ppt(A,Z)[X,V-X]) = {lhs}"))
                            .line(format_args!("r(A[X,V-X]) = {rhs}"))
                            .fail());
                    }
                }
                _ => {
                    for y in 0..=all {
                        let lhs = pivoted.block_nullity(x, y);
                        let rhs = a.block_nullity(all & !y, all & !x);
                        if lhs != rhs {
                            return Ok(witness()
                                .set("X", &set(x))
                                .set("Y", &set(y))
                                .line(format_args!("n(inverse(A)[X,Y]) = {lhs}"))
                                .line(format_args!("n(A[V-Y,V-X]) = {rhs}"))
                                .fail());
                        }
                    }
                }
            }
        }
        Ok(Verdict::Pass)
    })())
}

fn pair_correspondence(config: &HarnessConfig) -> SuiteOutcome {
    let suite = Suite::PairCorrespondence;
    let (bound, _, _) = config.bounds(suite);
    let items: Vec<(usize, u64)> = (0..=bound)
        .flat_map(|n| (0u64..1 << n).map(move |z| (n, z)))
        .collect();
    evaluate(suite, items, |&(n, z)| {
        let full = 1u64 << n;
        let mut seen = vec![false; (full * full) as usize];
        let universe: Vec<Label> = numbered(n).into_iter().collect();
        for x in 0..full {
            for y in 0..full {
                let (a, b) = f_z_mask(x, y, z);
                let slot = &mut seen[(a * full + b) as usize];
                let involutive = f_z_mask(a, b, z) == (x, y);
                if *slot || !involutive {
                    return Witness::default()
                        .set("Z", &subset_from_mask(&universe, z))
                        .set("X", &subset_from_mask(&universe, x))
                        .set("Y", &subset_from_mask(&universe, y))
                        .line(if *slot {
                            "image already hit"
                        } else {
                            "f_Z(f_Z(X,Y)) != (X,Y)"
                        })
                        .fail();
                }
                *slot = true;
            }
        }
        Verdict::Pass
    })
}

fn invariance(config: &HarnessConfig, suite: Suite) -> SuiteOutcome {
    evaluate(suite, config.random_matrices(suite), |a| {
        Verdict::from((|| {
            let poly = |m: &LabeledMatrix| {
                if suite == Suite::PInvariance {
                    nullity_polynomial(m)
                } else {
                    q_polynomial(m)
                }
            };
            let before = poly(a)?;
            for z in all_subsets(a.row_labels()) {
                if !pivot_defined(a, &z) {
                    continue;
                }
                let pivoted = (config.ppt)(a, &z)?;
                let after = poly(&pivoted)?;
                if after != before {
                    return Ok(Witness::default()
                        .matrix("A", a)
                        .set("Z", &z)
                        .line(format_args!(
                            "{suite}: A gives {before}, ppt(A,Z) gives {after}"
                        ))
                        .fail());
                }
            }
            Ok(Verdict::Pass)
        })())
    })
}

fn lc_identity(config: &HarnessConfig) -> SuiteOutcome {
    let suite = Suite::LcIdentity;
    let (bound, samples, size) = config.bounds(suite);
    let mut items: Vec<SimpleGraph> = (0..=bound).flat_map(sampling::all_graphs).collect();
    let mut rng = config.stream(suite, None);
    for _ in 0..samples {
        let n = sampling::size(&mut rng, size);
        items.push(sampling::graph(&mut rng, n));
    }
    let f = Field::gf2();
    evaluate(suite, items, |g| {
        Verdict::from((|| {
            let a = g.adjacency_matrix();
            let v_all = g.vertices();
            for v in v_all {
                let single: LabelSet = [v.clone()].into();
                let mut closed = g.neighborhood(v)?;
                closed.insert(v.clone());
                let looped = a.add(&LabeledMatrix::identity_on(f, &single, v_all)?)?;
                let via_pivot = (config.ppt)(&looped, &single)?
                    .add(&LabeledMatrix::identity_on(f, &closed, v_all)?)?;
                let expected = g.local_complement(v)?.adjacency_matrix();
                if via_pivot != expected {
                    return Ok(Witness::default()
                        .graph("G", g)
                        .line(format_args!("v = {v}"))
                        .matrix("((A+I_v)*{v}) + I_N[v]", &via_pivot)
                        .matrix("A(G^v)", &expected)
                        .fail());
                }
            }
            Ok(Verdict::Pass)
        })())
    })
}

fn cut_rank_invariance(config: &HarnessConfig) -> SuiteOutcome {
    let suite = Suite::CutRankInvariance;
    let (_, samples, size) = config.bounds(suite);
    let mut rng = config.stream(suite, None);
    let mut items = Vec::new();
    for _ in 0..samples {
        let n = sampling::size(&mut rng, size);
        let g = sampling::graph(&mut rng, n);
        let vs: Vec<Label> = g.vertices().iter().cloned().collect();
        let len = if vs.is_empty() {
            0
        } else {
            rng.random_range(0..=8)
        };
        let seq: Vec<Label> = (0..len)
            .map(|_| vs[rng.random_range(0..vs.len())].clone())
            .collect();
        items.push((g, seq));
    }
    evaluate(suite, items, |(g, seq)| {
        Verdict::from((|| {
            let h = g.apply_lc_sequence(seq)?;
            let before = g.cut_rank_spectrum()?;
            let after = h.cut_rank_spectrum()?;
            let vs: Vec<Label> = g.vertices().iter().cloned().collect();
            Ok(match (0..before.len()).find(|&m| before[m] != after[m]) {
                None => Verdict::Pass,
                Some(m) => {
                    let names: Vec<&str> = seq.iter().map(Label::as_str).collect();
                    Witness::default()
                        .graph("G", g)
                        .line(format_args!("sequence = {}", names.join(",")))
                        .set("X", &subset_from_mask(&vs, m as u64))
                        .line(format_args!(
                            "cut-rank before = {}, after = {}",
                            before[m], after[m]
                        ))
                        .fail()
                }
            })
        })())
    })
}
