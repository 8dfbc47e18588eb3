//! Simple graphs, local complementation and cut-rank.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::labels::{difference, mask_from_subset, require_subset, Label, LabelSet};
use crate::matrix::{mask_below, LabeledMatrix};
use crate::nullity::PivotPair;
use crate::pivot::ppt;

/// Default largest vertex count for full cut-rank spectra.
pub const SPECTRUM_CAP: usize = 12;

/// An undirected graph without loops or parallel edges. Edges are stored as
/// `(min, max)` label pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: LabelSet,
    edges: BTreeSet<(Label, Label)>,
}

fn ordered(u: &Label, w: &Label) -> (Label, Label) {
    if u <= w {
        (u.clone(), w.clone())
    } else {
        (w.clone(), u.clone())
    }
}

impl SimpleGraph {
    pub fn new<I>(vertices: LabelSet, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let mut graph = SimpleGraph {
            vertices,
            edges: BTreeSet::new(),
        };
        for (u, w) in edges {
            graph.insert_edge(&u, &w)?;
        }
        Ok(graph)
    }

    pub fn edgeless(vertices: LabelSet) -> Self {
        SimpleGraph {
            vertices,
            edges: BTreeSet::new(),
        }
    }

    /// Adds `{u, w}`; re-adding an existing edge is a no-op.
    pub fn insert_edge(&mut self, u: &Label, w: &Label) -> Result<()> {
        self.require_vertex(u)?;
        self.require_vertex(w)?;
        if u == w {
            return Err(Error::InvalidGraph(format!("loop at {u}")));
        }
        self.edges.insert(ordered(u, w));
        Ok(())
    }

    fn require_vertex(&self, v: &Label) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::LabelNotFound(v.clone()))
        }
    }

    pub fn vertices(&self) -> &LabelSet {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Label, &Label)> {
        self.edges.iter().map(|(u, w)| (u, w))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: &Label, w: &Label) -> bool {
        self.edges.contains(&ordered(u, w))
    }

    /// `N_G(v)`; never contains `v`.
    pub fn neighborhood(&self, v: &Label) -> Result<LabelSet> {
        self.require_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter_map(|(a, b)| match () {
                _ if a == v => Some(b.clone()),
                _ if b == v => Some(a.clone()),
                _ => None,
            })
            .collect())
    }

    /// `G^v`: toggles every edge between distinct neighbours of `v`.
    pub fn local_complement(&self, v: &Label) -> Result<Self> {
        let nbrs: Vec<Label> = self.neighborhood(v)?.into_iter().collect();
        let mut edges = self.edges.clone();
        for (i, u) in nbrs.iter().enumerate() {
            for w in &nbrs[i + 1..] {
                let e = ordered(u, w);
                if !edges.remove(&e) {
                    edges.insert(e);
                }
            }
        }
        Ok(SimpleGraph {
            vertices: self.vertices.clone(),
            edges,
        })
    }

    /// Applies local complementations left to right.
    pub fn apply_lc_sequence(&self, seq: &[Label]) -> Result<Self> {
        seq.iter()
            .try_fold(self.clone(), |g, v| g.local_complement(v))
    }

    /// Symmetric GF(2) matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> LabeledMatrix {
        let f = Field::gf2();
        LabeledMatrix::from_fn(f, &self.vertices, &self.vertices, |u, w| {
            if self.has_edge(u, w) {
                f.one()
            } else {
                f.zero()
            }
        })
        .expect("entries are GF(2) values")
    }

    /// `A(G^v)` computed as `((A(G) + I_{v}) * {v}) + I_{N(v) + v}`.
    pub fn lc_via_ppt(&self, v: &Label) -> Result<LabeledMatrix> {
        let f = Field::gf2();
        let single: LabelSet = [v.clone()].into();
        let looped = self.adjacency_matrix().add(&LabeledMatrix::identity_on(
            f,
            &single,
            &self.vertices,
        )?)?;
        let mut closed = self.neighborhood(v)?;
        closed.insert(v.clone());
        ppt(&looped, &single)?.add(&LabeledMatrix::identity_on(f, &closed, &self.vertices)?)
    }

    /// GF(2) rank of `A(G)[X, V \ X]`.
    pub fn cut_rank(&self, x: &LabelSet) -> Result<usize> {
        require_subset(x, &self.vertices)?;
        let a = self.adjacency_matrix();
        let xm = mask_from_subset(a.row_labels(), x);
        Ok(a.block_rank(xm, !xm & mask_below(a.nrows())))
    }

    /// Cut-rank of every subset, indexed by the subset's bit mask over the
    /// vertices in canonical order.
    pub fn cut_rank_spectrum(&self) -> Result<Vec<usize>> {
        self.cut_rank_spectrum_capped(SPECTRUM_CAP)
    }

    pub fn cut_rank_spectrum_capped(&self, cap: usize) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        if n > cap.min(63) {
            return Err(Error::SizeCapExceeded {
                size: n,
                cap: cap.min(63),
            });
        }
        let a = self.adjacency_matrix();
        let all = mask_below(n);
        Ok((0..1u64 << n)
            .into_par_iter()
            .map(|x| a.block_rank(x, !x & all))
            .collect())
    }

    /// Whether every cut-rank is unchanged by applying `seq`.
    pub fn check_cut_rank_invariance(&self, seq: &[Label]) -> Result<bool> {
        let other = self.apply_lc_sequence(seq)?;
        Ok(self.cut_rank_spectrum()? == other.cut_rank_spectrum()?)
    }

    /// Cut-rank invariance for a single local complementation, routed through
    /// the pivot: the diagonal correction does not touch the off-diagonal
    /// block, and the pivot preserves the nullity of `[X, V \ X]` blocks.
    pub fn check_cut_rank_via_pivot(&self, v: &Label) -> Result<bool> {
        let f = Field::gf2();
        let single: LabelSet = [v.clone()].into();
        let looped = self.adjacency_matrix().add(&LabeledMatrix::identity_on(
            f,
            &single,
            &self.vertices,
        )?)?;
        let pair = PivotPair::new(&looped, &single)?;
        let after = self.local_complement(v)?.adjacency_matrix();
        let n = self.vertices.len();
        if n > SPECTRUM_CAP {
            return Err(Error::SizeCapExceeded {
                size: n,
                cap: SPECTRUM_CAP,
            });
        }
        let all = mask_below(n);
        for xm in 0..1u64 << n {
            let x = crate::labels::subset_from_mask(pair.labels(), xm);
            let rest = difference(&self.vertices, &x);
            if after.submatrix(&x, &rest)? != pair.pivoted().submatrix(&x, &rest)? {
                return Ok(false);
            }
            // equal nullity of the complementary blocks is equal rank
            if !pair.nullity_equality_masks(xm, !xm & all) {
                return Ok(false);
            }
            if looped.block_rank(xm, !xm & all) != self.cut_rank(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::labels;

    fn l(s: &str) -> Label {
        Label::new(s).unwrap()
    }

    fn graph(vs: &[&str], es: &[(&str, &str)]) -> SimpleGraph {
        SimpleGraph::new(
            labels(vs.iter().copied()).unwrap(),
            es.iter().map(|(u, w)| (l(u), l(w))),
        )
        .unwrap()
    }

    fn path() -> SimpleGraph {
        graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
    }

    fn triangle() -> SimpleGraph {
        graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
    }

    #[test]
    fn construction_rules() {
        let vs = labels(["a", "b"]).unwrap();
        assert!(matches!(
            SimpleGraph::new(vs.clone(), [(l("a"), l("a"))]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            SimpleGraph::new(vs.clone(), [(l("a"), l("z"))]),
            Err(Error::LabelNotFound(_))
        ));
        let g = SimpleGraph::new(vs, [(l("a"), l("b")), (l("b"), l("a"))]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn neighborhoods() {
        let g = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]);
        assert!(g.neighborhood(&l("d")).unwrap().is_empty());
        assert_eq!(
            triangle().neighborhood(&l("a")).unwrap(),
            labels(["b", "c"]).unwrap()
        );
        assert_eq!(
            path().neighborhood(&l("b")).unwrap(),
            labels(["a", "c"]).unwrap()
        );
        assert!(g.neighborhood(&l("z")).is_err());
    }

    #[test]
    fn local_complement_examples() {
        let g = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]);
        assert_eq!(g.local_complement(&l("d")).unwrap(), g);
        assert_eq!(path().local_complement(&l("b")).unwrap(), triangle());
        assert_eq!(triangle().local_complement(&l("b")).unwrap(), path());
        let twice = path().apply_lc_sequence(&[l("b"), l("b")]).unwrap();
        assert_eq!(twice, path());
        assert_eq!(path().apply_lc_sequence(&[]).unwrap(), path());
        assert!(path().apply_lc_sequence(&[l("q")]).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let f = Field::gf2();
        let empty = graph(&["a", "b"], &[]);
        let vs = empty.vertices().clone();
        assert_eq!(empty.adjacency_matrix(), LabeledMatrix::zero(f, &vs, &vs));
        let edge = graph(&["a", "b"], &[("a", "b")]).adjacency_matrix();
        assert_eq!(
            edge.to_rows(),
            vec![vec![f.zero(), f.one()], vec![f.one(), f.zero()]]
        );
        let tri = triangle().adjacency_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(tri.entry(i, j).is_one(), i != j);
            }
        }
    }

    #[test]
    fn lc_via_ppt_examples() {
        let g = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]);
        assert_eq!(g.lc_via_ppt(&l("d")).unwrap(), g.adjacency_matrix());
        assert_eq!(
            path().lc_via_ppt(&l("b")).unwrap(),
            triangle().adjacency_matrix()
        );
        for v in ["a", "b", "c"] {
            assert_eq!(
                triangle().lc_via_ppt(&l(v)).unwrap(),
                triangle()
                    .local_complement(&l(v))
                    .unwrap()
                    .adjacency_matrix()
            );
        }
    }

    #[test]
    fn cut_rank_examples() {
        let t = triangle();
        assert_eq!(t.cut_rank(&LabelSet::new()).unwrap(), 0);
        assert_eq!(t.cut_rank(t.vertices()).unwrap(), 0);
        assert_eq!(t.cut_rank(&labels(["a"]).unwrap()).unwrap(), 1);
        let edge = graph(&["a", "b"], &[("a", "b")]);
        assert_eq!(edge.cut_rank(&labels(["a"]).unwrap()).unwrap(), 1);
        assert!(t.cut_rank(&labels(["x"]).unwrap()).is_err());
    }

    #[test]
    fn spectra_of_path_and_triangle() {
        let expected = vec![0, 1, 1, 1, 1, 1, 1, 0];
        assert_eq!(path().cut_rank_spectrum().unwrap(), expected);
        assert_eq!(triangle().cut_rank_spectrum().unwrap(), expected);
        assert!(path().check_cut_rank_invariance(&[]).unwrap());
        assert!(path().check_cut_rank_invariance(&[l("b")]).unwrap());
        assert!(path().check_cut_rank_via_pivot(&l("b")).unwrap());
    }
}
