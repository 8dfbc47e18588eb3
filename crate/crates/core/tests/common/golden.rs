//! Frozen example values, each cross-checked against a brute-force or
//! hand-derivable oracle where one applies.

#![allow(dead_code)]

use ppt_core::format::{parse_graph, write_matrix};
use ppt_core::labels::{labels, numbered};
use ppt_core::nullity::{compute_r, f_z, kernel_transport_map, PivotPair};
use ppt_core::pivot::{check_partial_inverse, ppt, schur_complement, sharp};
use ppt_core::polynomial::{nullity_polynomial, q_polynomial};
use ppt_core::{Field, Label, LabelSet, LabeledMatrix, LabeledVector, NullityPolynomial};

use super::oracles::{ppt_by_characterization, rank_by_column_subsets, residues};

fn set(names: &[&str]) -> LabelSet {
    labels(names.iter().copied()).unwrap()
}

fn gf2(rows: &[[i64; 2]]) -> LabeledMatrix {
    LabeledMatrix::from_ints(Field::gf2(), rows).unwrap()
}

fn q(n: i64, d: i64) -> ppt_core::FieldValue {
    Field::rationals().ratio(n, d).unwrap()
}

/// `p` by enumerating pairs and taking nullities from the column-subset
/// rank oracle (finite fields only).
fn p_by_oracle(a: &LabeledMatrix) -> NullityPolynomial {
    let p = a.field().modulus().unwrap();
    let n = a.nrows();
    let full = residues(a);
    let mut coeffs = vec![0u64; n + 1];
    for x in 0..1u32 << n {
        for y in 0..1u32 << n {
            let rows: Vec<usize> = (0..n).filter(|i| x >> i & 1 == 1).collect();
            let cols: Vec<usize> = (0..n).filter(|j| y >> j & 1 == 1).collect();
            let block: Vec<Vec<u32>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| full[i][j]).collect())
                .collect();
            coeffs[cols.len() - rank_by_column_subsets(&block, cols.len(), p)] += 1;
        }
    }
    NullityPolynomial::from_coefficients(coeffs)
}

fn q_by_oracle(a: &LabeledMatrix) -> NullityPolynomial {
    let p = a.field().modulus().unwrap();
    let n = a.nrows();
    let full = residues(a);
    let mut coeffs = vec![0u64; n + 1];
    for x in 0..1u32 << n {
        let idx: Vec<usize> = (0..n).filter(|i| x >> i & 1 == 1).collect();
        let block: Vec<Vec<u32>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| full[i][j]).collect())
            .collect();
        coeffs[idx.len() - rank_by_column_subsets(&block, idx.len(), p)] += 1;
    }
    NullityPolynomial::from_coefficients(coeffs)
}

fn l(s: &str) -> Label {
    Label::new(s).unwrap()
}

/// Every golden check as `(name, passed)`.
pub fn golden_cases() -> Vec<(&'static str, bool)> {
    let f2 = Field::gf2();
    let f5 = Field::prime(5).unwrap();
    let rq = Field::rationals();
    let one = set(&["1"]);
    let two = set(&["2"]);
    let v2 = numbered(2);
    let a = gf2(&[[1, 1], [1, 0]]);
    let b = LabeledMatrix::from_ints(rq, &[[2, 1], [1, 1]]).unwrap();
    let path = parse_graph("vertices a b c\nedge a b\nedge b c\n").unwrap();
    let triangle = parse_graph("vertices a b c\nedge a b\nedge b c\nedge a c\n").unwrap();
    let mut cases = Vec::new();
    let mut check = |name, ok: bool| cases.push((name, ok));

    // fields: 7 mod 5, 6 mod 5, 2 * 3 = 6 = 1 mod 5
    check(
        "GF(5) 3+4=2",
        f5.int(3).add(&f5.int(4)).unwrap() == f5.int(2),
    );
    check(
        "GF(5) 2*3=1",
        f5.int(2).mul(&f5.int(3)).unwrap() == f5.one(),
    );
    check("GF(5) inv(2)=3", f5.int(2).inv().unwrap() == f5.int(3));
    check("Q 1/2+1/3=5/6", q(1, 2).add(&q(1, 3)).unwrap() == q(5, 6));

    // labeled matrices
    let s = a.submatrix(&one, &two).unwrap();
    check(
        "submatrix A[{1},{2}] = [1]",
        s.nrows() == 1 && s.ncols() == 1 && s.entry(0, 0).is_one(),
    );
    let ones = gf2(&[[1, 1], [1, 1]]);
    check(
        "rank [[1,1],[1,1]] = 1",
        ones.rank() == 1
            && ones.nullity() == 1
            && rank_by_column_subsets(&residues(&ones), 2, 2) == 1,
    );
    let kernel = ones.kernel_basis();
    let brute_kernel: Vec<(u32, u32)> = (0..4u32)
        .map(|c| (c & 1, c >> 1))
        .filter(|&(x, y)| (x + y) % 2 == 0 && (x, y) != (0, 0))
        .collect();
    check(
        "kernel [[1,1],[1,1]] = span(1,1)",
        kernel.dim() == 1
            && kernel.vectors()[0].values() == vec![f2.one(), f2.one()]
            && brute_kernel == [(1, 1)],
    );
    check(
        "inverse [[1,1],[0,1]] over Q",
        LabeledMatrix::from_ints(rq, &[[1, 1], [0, 1]])
            .unwrap()
            .inverse()
            .unwrap()
            == LabeledMatrix::from_ints(rq, &[[1, -1], [0, 1]]).unwrap(),
    );

    // pivot
    let pa = ppt(&a, &one).unwrap();
    check(
        "ppt GF(2) [[1,1],[1,0]] on {1} = [[1,1],[1,1]]",
        pa == ones
            && ppt_by_characterization(&residues(&a), 1, 2) == Some(vec![vec![1, 1], vec![1, 1]]),
    );
    let pb = ppt(&b, &one).unwrap();
    let expected_pb = LabeledMatrix::from_fn(rq, &v2, &v2, |r, c| match (r.as_str(), c.as_str()) {
        ("1", "1") | ("2", "1") | ("2", "2") => q(1, 2),
        _ => q(-1, 2),
    })
    .unwrap();
    check("ppt Q [[2,1],[1,1]] on {1}", pb == expected_pb);
    let sb = schur_complement(&b, &one).unwrap();
    check(
        "schur Q = [1/2]",
        sb.nrows() == 1 && sb.entry(0, 0) == q(1, 2),
    );
    let sa = schur_complement(&a, &one).unwrap();
    check(
        "schur GF(2) = [1]",
        sa.nrows() == 1 && sa.entry(0, 0).is_one(),
    );
    check(
        "sharp [[2,1],[1,1]] on {1} = [[2,1],[0,1]]",
        sharp(&b, &one).unwrap() == LabeledMatrix::from_ints(rq, &[[2, 1], [0, 1]]).unwrap(),
    );
    let x11 = LabeledVector::from_fn(f2, &v2, |_| f2.one()).unwrap();
    check(
        "partial inverse GF(2) x=(1,1)",
        check_partial_inverse(&a, &one, &x11).unwrap()
            && a.apply(&x11).unwrap().values() == vec![f2.zero(), f2.one()],
    );

    // nullity correspondence
    check(
        "R = {} for Z={1}, X={1}, Y={2}",
        compute_r(&v2, &one, &two, &one).unwrap().is_empty(),
    );
    check(
        "f_Z({1},{1}) = ({2},{2}) for Z=V",
        f_z(&one, &one, &v2) == (two.clone(), two.clone()),
    );
    let report = PivotPair::new(&a, &one)
        .unwrap()
        .nullity_report(&two, &two)
        .unwrap();
    check(
        "nullity equality GF(2) X=Y={2}",
        report.r == one && report.pivoted_nullity == 0 && report.original_nullity == 0,
    );
    let map = kernel_transport_map(&b, &one, &two, &two).unwrap();
    check(
        "transport map column = (-1/2, 1)",
        map.ncols() == 1 && map.entry(0, 0) == q(-1, 2) && map.entry(1, 0) == rq.one(),
    );
    // The composite A[{2},{2}] * M is zero (1x2); all four GF(2) vectors lie
    // in its kernel, while ker(ppt(A,{1})) = {(0,0),(1,1)}.
    let kreport = PivotPair::new(&a, &one)
        .unwrap()
        .kernel_report(&v2, &v2)
        .unwrap();
    check(
        "kernel comparison GF(2) Z={1}, X=Y=V (brute force: dims 1 vs 2)",
        kreport.pivoted_kernel.dim() == 1
            && kreport.transported_kernel.dim() == 2
            && !kreport.equal,
    );

    // polynomials
    let zero1 = LabeledMatrix::from_ints(f2, &[[0]]).unwrap();
    let id1 = LabeledMatrix::from_ints(f2, &[[1]]).unwrap();
    let p_zero = nullity_polynomial(&zero1).unwrap();
    check(
        "p([0]) = 2 + 2y",
        p_zero.to_string() == "2 + 2*y" && p_zero == p_by_oracle(&zero1),
    );
    let p_id = nullity_polynomial(&id1).unwrap();
    check(
        "p([1]) = 3 + y",
        p_id.to_string() == "3 + y" && p_id == p_by_oracle(&id1),
    );
    check(
        "q([0]) = 1 + y",
        q_polynomial(&zero1).unwrap().to_string() == "1 + y"
            && q_by_oracle(&zero1).to_string() == "1 + y",
    );
    check(
        "q([[1,1],[1,1]]) = 3 + y",
        q_polynomial(&ones).unwrap().to_string() == "3 + y"
            && q_by_oracle(&ones) == q_polynomial(&ones).unwrap(),
    );
    check(
        "p(A) = p(ppt(A,{1})) GF(2)",
        p_by_oracle(&a) == p_by_oracle(&pa) && nullity_polynomial(&a).unwrap() == p_by_oracle(&a),
    );
    check(
        "q(A) = q(ppt(A,{1})) = 3 + y",
        q_polynomial(&a).unwrap().to_string() == "3 + y"
            && q_polynomial(&pa).unwrap().to_string() == "3 + y",
    );

    // graphs
    check(
        "path at b -> triangle",
        path.local_complement(&l("b")).unwrap() == triangle,
    );
    check(
        "lc via ppt path at b",
        path.lc_via_ppt(&l("b")).unwrap() == triangle.adjacency_matrix(),
    );
    check(
        "cut-rank triangle {a} = 1",
        triangle.cut_rank(&set(&["a"])).unwrap() == 1,
    );
    let spectrum = vec![0, 1, 1, 1, 1, 1, 1, 0];
    check(
        "cut-rank spectra path = triangle",
        path.cut_rank_spectrum().unwrap() == spectrum
            && triangle.cut_rank_spectrum().unwrap() == spectrum,
    );
    check(
        "ppt text rendering",
        write_matrix(&pa) == "field GF(2)\nlabels 1 2\n1: 1 1\n2: 1 1\n",
    );
    cases
}
