//! Row/column labels and finite label sets.
//!
//! Index sets are unordered. They are stored as [`BTreeSet`]s so that every
//! container iterates labels in one canonical (lexicographic) order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Characters reserved by the text formats and the comma-separated CLI lists.
const RESERVED: &[char] = &[',', ':', '#'];

/// A row or column index: a nonempty token without whitespace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(String);

impl Label {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty()
            || name
                .chars()
                .any(|c| c.is_whitespace() || RESERVED.contains(&c))
        {
            return Err(Error::InvalidLabel(name));
        }
        Ok(Label(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::new(s)
    }
}

impl From<usize> for Label {
    fn from(i: usize) -> Self {
        Label(i.to_string())
    }
}

pub type LabelSet = BTreeSet<Label>;

/// Builds a label set from anything string-like, e.g. `labels(["a", "b"])`.
pub fn labels<I, S>(names: I) -> Result<LabelSet>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    names.into_iter().map(Label::new).collect()
}

/// The labels `1..=n`, the default index set for numbered matrices.
pub fn numbered(n: usize) -> LabelSet {
    (1..=n).map(Label::from).collect()
}

/// Parses a comma-separated list such as `a,c`. The empty string is the
/// empty set.
pub fn parse_label_list(s: &str) -> Result<LabelSet> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(LabelSet::new());
    }
    let mut set = LabelSet::new();
    for part in s.split(',') {
        let label = Label::new(part.trim())?;
        if !set.insert(label.clone()) {
            return Err(Error::DuplicateLabel(label));
        }
    }
    Ok(set)
}

/// Renders a set as `{a,b,c}`.
pub fn format_set(set: &LabelSet) -> String {
    let inner: Vec<&str> = set.iter().map(Label::as_str).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn symmetric_difference(a: &LabelSet, b: &LabelSet) -> LabelSet {
    a.symmetric_difference(b).cloned().collect()
}

pub fn difference(a: &LabelSet, b: &LabelSet) -> LabelSet {
    a.difference(b).cloned().collect()
}

/// Fails with `LabelNotFound` on the first element of `sub` missing from `universe`.
pub fn require_subset(sub: &LabelSet, universe: &LabelSet) -> Result<()> {
    match sub.iter().find(|l| !universe.contains(*l)) {
        Some(l) => Err(Error::LabelNotFound(l.clone())),
        None => Ok(()),
    }
}

/// The subset of `universe` selected by the bits of `mask`, where bit `i`
/// stands for the `i`-th label in canonical order.
pub fn subset_from_mask(universe: &[Label], mask: u64) -> LabelSet {
    universe
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, l)| l.clone())
        .collect()
}

/// Inverse of [`subset_from_mask`]. Labels outside `universe` are ignored.
pub fn mask_from_subset(universe: &[Label], set: &LabelSet) -> u64 {
    universe
        .iter()
        .enumerate()
        .filter(|(_, l)| set.contains(*l))
        .fold(0, |m, (i, _)| m | 1 << i)
}
