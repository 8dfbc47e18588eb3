//! Brute-force reference computations, independent of the elimination code
//! they are used to check. Only practical for tiny matrices.

#![allow(dead_code)]

use ppt_core::{Field, FieldValue, LabeledMatrix};

/// Entries of a finite-field matrix as residues, in canonical label order.
pub fn residues(m: &LabeledMatrix) -> Vec<Vec<u32>> {
    m.to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| v.residue().expect("finite field"))
                .collect()
        })
        .collect()
}

fn combination_is_zero(rows: &[Vec<u32>], cols: &[usize], coeffs: &[u32], p: u32) -> bool {
    rows.iter().all(|row| {
        let s: u64 = cols
            .iter()
            .zip(coeffs)
            .map(|(&c, &k)| u64::from(row[c]) * u64::from(k))
            .sum();
        s.is_multiple_of(u64::from(p))
    })
}

/// Columns `cols` are independent iff no nonzero coefficient vector in
/// `F_p^|cols|` combines them to zero. Enumerates all `p^|cols|` vectors.
fn independent(rows: &[Vec<u32>], cols: &[usize], p: u32) -> bool {
    let k = cols.len();
    let total = (p as usize).pow(k as u32);
    (1..total).all(|mut code| {
        let coeffs: Vec<u32> = (0..k)
            .map(|_| {
                let d = (code % p as usize) as u32;
                code /= p as usize;
                d
            })
            .collect();
        !combination_is_zero(rows, cols, &coeffs, p)
    })
}

/// Rank as the largest independent column subset, by exhaustive search.
pub fn rank_by_column_subsets(rows: &[Vec<u32>], ncols: usize, p: u32) -> usize {
    (0u32..1 << ncols)
        .filter_map(|mask| {
            let cols: Vec<usize> = (0..ncols).filter(|c| mask >> c & 1 == 1).collect();
            independent(rows, &cols, p).then_some(cols.len())
        })
        .max()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Leibniz expansion of a square determinant.
pub fn leibniz_det(field: Field, m: &[Vec<FieldValue>]) -> FieldValue {
    let n = m.len();
    permutations(n).iter().fold(field.zero(), |acc, perm| {
        let term = (0..n).fold(field.one(), |t, i| t.mul(&m[i][perm[i]]).unwrap());
        if sign(perm) {
            acc.add(&term).unwrap()
        } else {
            acc.sub(&term).unwrap()
        }
    })
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Rank as the order of the largest nonvanishing minor.
pub fn rank_by_minors(m: &LabeledMatrix) -> usize {
    let rows = m.to_rows();
    let (r, c) = (m.nrows(), m.ncols());
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            subsets_of_size(r, k).iter().any(|ri| {
                subsets_of_size(c, k).iter().any(|ci| {
                    let minor: Vec<Vec<FieldValue>> = ri
                        .iter()
                        .map(|&i| ci.iter().map(|&j| rows[i][j].clone()).collect())
                        .collect();
                    !leibniz_det(m.field(), &minor).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

fn mat_vec(a: &[Vec<u32>], x: &[u32], p: u32) -> Vec<u32> {
    a.iter()
        .map(|row| {
            (row.iter()
                .zip(x)
                .map(|(&a, &b)| u64::from(a) * u64::from(b))
                .sum::<u64>()
                % u64::from(p)) as u32
        })
        .collect()
}

/// The pivot transform rebuilt from its defining relation alone: over all
/// `x` with `y = A x`, the transform sends `(y on Z, x off Z)` to
/// `(x on Z, y off Z)`. Returns `None` if that relation is not a function
/// (singular pivot block).
pub fn ppt_by_characterization(a: &[Vec<u32>], z_mask: u32, p: u32) -> Option<Vec<Vec<u32>>> {
    let n = a.len();
    let total = (p as usize).pow(n as u32);
    let mut table: Vec<Option<Vec<u32>>> = vec![None; total];
    let encode = |v: &[u32]| {
        v.iter()
            .rev()
            .fold(0usize, |acc, &d| acc * p as usize + d as usize)
    };
    for mut code in 0..total {
        let x: Vec<u32> = (0..n)
            .map(|_| {
                let d = (code % p as usize) as u32;
                code /= p as usize;
                d
            })
            .collect();
        let y = mat_vec(a, &x, p);
        let input: Vec<u32> = (0..n)
            .map(|i| if z_mask >> i & 1 == 1 { y[i] } else { x[i] })
            .collect();
        let output: Vec<u32> = (0..n)
            .map(|i| if z_mask >> i & 1 == 1 { x[i] } else { y[i] })
            .collect();
        let slot = &mut table[encode(&input)];
        if slot.is_some() {
            return None;
        }
        *slot = Some(output);
    }
    let mut result = vec![vec![0u32; n]; n];
    for j in 0..n {
        let mut unit = vec![0u32; n];
        unit[j] = 1;
        let column = table[encode(&unit)].clone()?;
        for i in 0..n {
            result[i][j] = column[i];
        }
    }
    Some(result)
}
