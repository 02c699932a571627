//! Smith normal form over the integers.
//!
//! `smith_normal_form` diagonalizes a dense matrix with tracked unimodular
//! row and column transforms, picking the smallest-magnitude entry as pivot
//! and descending by remainders until row and column are clear, then fixing
//! up the divisibility chain. `invariant_factors` serves large sparse
//! matrices: entries of absolute value one are eliminated first without any
//! transform bookkeeping, and only the small residual core goes through the
//! dense routine.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::intmat::SparseMat;

/// A dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMat {
    n_rows: usize,
    n_cols: usize,
    a: Vec<BigInt>,
}

impl DenseMat {
    pub fn zeros(n_rows: usize, n_cols: usize) -> DenseMat {
        DenseMat { n_rows, n_cols, a: vec![BigInt::zero(); n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> DenseMat {
        let mut m = DenseMat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> DenseMat {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        let mut m = DenseMat::zeros(n_rows, n_cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols);
            for (j, v) in row.iter().enumerate() {
                *m.at_mut(i, j) = BigInt::from(*v);
            }
        }
        m
    }

    pub fn from_sparse(m: &SparseMat) -> DenseMat {
        let mut d = DenseMat::zeros(m.n_rows(), m.n_cols());
        for j in 0..m.n_cols() {
            for (r, v) in m.column(j) {
                *d.at_mut(*r, j) = v.clone();
            }
        }
        d
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.n_cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.a[i * self.n_cols + j]
    }

    pub fn mul(&self, other: &DenseMat) -> DenseMat {
        assert_eq!(self.n_cols, other.n_rows);
        let mut out = DenseMat::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let v = self.at(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..other.n_cols {
                    let t = v * other.at(k, j);
                    *out.at_mut(i, j) += t;
                }
            }
        }
        out
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.n_rows.min(self.n_cols)).map(|i| self.at(i, i).clone()).collect()
    }

    /// Fraction-free determinant of a square matrix.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.n_rows, self.n_cols);
        let n = self.n_rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(s) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    let tmp = m.at(k, j).clone();
                    *m.at_mut(k, j) = m.at(s, j).clone();
                    *m.at_mut(s, j) = tmp;
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    *m.at_mut(i, j) = &num / &prev;
                }
                *m.at_mut(i, k) = BigInt::zero();
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.n_cols {
            self.a.swap(i * self.n_cols + c, j * self.n_cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.n_rows {
            self.a.swap(r * self.n_cols + i, r * self.n_cols + j);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, c: &BigInt) {
        for j in 0..self.n_cols {
            let t = self.at(source, j) * c;
            *self.at_mut(target, j) += t;
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, c: &BigInt) {
        for i in 0..self.n_rows {
            let t = self.at(i, source) * c;
            *self.at_mut(i, target) += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.n_cols {
            let v = -self.at(i, j).clone();
            *self.at_mut(i, j) = v;
        }
    }
}

/// A decomposition `u · a · v = d` with `d` diagonal, each diagonal entry
/// non-negative and dividing the next, and `u`, `v` unimodular.
#[derive(Debug, Clone)]
pub struct Snf {
    pub d: DenseMat,
    pub u: DenseMat,
    pub v: DenseMat,
}

impl Snf {
    /// Diagonal entries that are neither zero nor one.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|v| !v.is_zero() && !v.is_one())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|v| !v.is_zero()).count()
    }
}

fn smallest_entry(d: &DenseMat, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..d.n_rows() {
        for j in from..d.n_cols() {
            let v = d.at(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d.at(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn clear_cross(d: &mut DenseMat, u: &mut DenseMat, v: &mut DenseMat, t: usize) {
    loop {
        let mut clean = true;
        for i in t + 1..d.n_rows() {
            if d.at(i, t).is_zero() {
                continue;
            }
            let q = d.at(i, t).div_rem(d.at(t, t)).0;
            d.add_row_multiple(i, t, &-&q);
            u.add_row_multiple(i, t, &-&q);
            if !d.at(i, t).is_zero() {
                d.swap_rows(i, t);
                u.swap_rows(i, t);
                clean = false;
            }
        }
        for j in t + 1..d.n_cols() {
            if d.at(t, j).is_zero() {
                continue;
            }
            let q = d.at(t, j).div_rem(d.at(t, t)).0;
            d.add_col_multiple(j, t, &-&q);
            v.add_col_multiple(j, t, &-&q);
            if !d.at(t, j).is_zero() {
                d.swap_cols(j, t);
                v.swap_cols(j, t);
                clean = false;
            }
        }
        if clean {
            break;
        }
    }
}

pub fn smith_normal_form(a: &DenseMat) -> Snf {
    let mut d = a.clone();
    let mut u = DenseMat::identity(a.n_rows());
    let mut v = DenseMat::identity(a.n_cols());
    let limit = a.n_rows().min(a.n_cols());
    let mut t = 0;
    while t < limit {
        let Some((i, j)) = smallest_entry(&d, t) else { break };
        d.swap_rows(t, i);
        u.swap_rows(t, i);
        d.swap_cols(t, j);
        v.swap_cols(t, j);
        clear_cross(&mut d, &mut u, &mut v, t);
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    loop {
        let mut changed = false;
        for i in 0..t.saturating_sub(1) {
            let lo = d.at(i, i).clone();
            let hi = d.at(i + 1, i + 1).clone();
            if hi.mod_floor(&lo).is_zero() {
                continue;
            }
            d.add_col_multiple(i, i + 1, &BigInt::one());
            v.add_col_multiple(i, i + 1, &BigInt::one());
            clear_cross(&mut d, &mut u, &mut v, i);
            for k in [i, i + 1] {
                if d.at(k, k).is_negative() {
                    d.negate_row(k);
                    u.negate_row(k);
                }
            }
            changed = true;
        }
        if !changed {
            break;
        }
    }
    Snf { d, u, v }
}

/// The full list of nonzero invariant factors of a sparse matrix, in
/// divisibility order. Unit entries are struck out by direct elimination
/// before the dense decomposition sees the residue.
pub fn invariant_factors(m: &SparseMat) -> Vec<BigInt> {
    let mut cols: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    let mut cols_of_row: HashMap<usize, HashSet<usize>> = HashMap::new();
    for j in 0..m.n_cols() {
        let col: BTreeMap<usize, BigInt> = m.column(j).iter().cloned().collect();
        if col.is_empty() {
            continue;
        }
        for r in col.keys() {
            cols_of_row.entry(*r).or_default().insert(j);
        }
        cols.insert(j, col);
    }
    let mut units = 0usize;
    loop {
        let mut found: Option<(usize, usize)> = None;
        'scan: for (j, col) in &cols {
            for (r, v) in col {
                if v.abs().is_one() {
                    found = Some((*r, *j));
                    break 'scan;
                }
            }
        }
        let Some((r, j)) = found else { break };
        units += 1;
        let pivot = cols.remove(&j).unwrap();
        let pv = pivot[&r].clone();
        for pr in pivot.keys() {
            cols_of_row.get_mut(pr).unwrap().remove(&j);
        }
        let touched: Vec<usize> = cols_of_row.remove(&r).map_or_else(Vec::new, |s| {
            let mut v: Vec<usize> = s.into_iter().collect();
            v.sort_unstable();
            v
        });
        for j2 in touched {
            let col = cols.get_mut(&j2).unwrap();
            let factor = -(&col[&r] * &pv);
            for (pr, pvv) in &pivot {
                let e = col.entry(*pr).or_insert_with(BigInt::zero);
                *e += &factor * pvv;
                if e.is_zero() {
                    col.remove(pr);
                    if let Some(s) = cols_of_row.get_mut(pr) {
                        s.remove(&j2);
                    }
                } else if *pr != r {
                    cols_of_row.entry(*pr).or_default().insert(j2);
                }
            }
            debug_assert!(!col.contains_key(&r));
            if col.is_empty() {
                cols.remove(&j2);
            }
        }
    }
    let mut factors = vec![BigInt::one(); units];
    if !cols.is_empty() {
        let live_rows: Vec<usize> = {
            let mut s: HashSet<usize> = HashSet::new();
            for col in cols.values() {
                s.extend(col.keys().copied());
            }
            let mut v: Vec<usize> = s.into_iter().collect();
            v.sort_unstable();
            v
        };
        let row_pos: HashMap<usize, usize> =
            live_rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let mut core = DenseMat::zeros(live_rows.len(), cols.len());
        for (jj, col) in cols.values().enumerate() {
            for (r, v) in col {
                *core.at_mut(row_pos[r], jj) = v.clone();
            }
        }
        let snf = smith_normal_form(&core);
        factors.extend(snf.d.diagonal().into_iter().filter(|v| !v.is_zero()));
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_decomposition(a: &DenseMat, snf: &Snf) {
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d);
        assert_eq!(snf.u.det().abs(), BigInt::one());
        assert_eq!(snf.v.det().abs(), BigInt::one());
        let diag = snf.d.diagonal();
        for i in 0..snf.d.n_rows() {
            for j in 0..snf.d.n_cols() {
                if i != j {
                    assert!(snf.d.at(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].mod_floor(&w[0]).is_zero());
            }
        }
    }

    #[test]
    fn identity_is_already_normal() {
        let a = DenseMat::identity(3);
        let snf = smith_normal_form(&a);
        check_decomposition(&a, &snf);
        assert_eq!(snf.d, DenseMat::identity(3));
    }

    #[test]
    fn two_by_two_with_torsion() {
        let a = DenseMat::from_rows(&[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&a);
        check_decomposition(&a, &snf);
        assert_eq!(snf.d.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(snf.torsion_factors(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(snf.rank(), 2);
    }

    #[test]
    fn zero_matrix_stays_zero() {
        let a = DenseMat::zeros(2, 3);
        let snf = smith_normal_form(&a);
        check_decomposition(&a, &snf);
        assert!(snf.d.diagonal().iter().all(|v| v.is_zero()));
        assert_eq!(snf.rank(), 0);
    }

    #[test]
    fn divisibility_chain_needs_fixup() {
        let a = DenseMat::from_rows(&[&[2, 0], &[0, 3]]);
        let snf = smith_normal_form(&a);
        check_decomposition(&a, &snf);
        assert_eq!(snf.d.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn sparse_factors_match_dense_diagonal() {
        let cols = vec![
            vec![(0, BigInt::from(2)), (1, BigInt::from(6))],
            vec![(0, BigInt::from(4)), (1, BigInt::from(8))],
        ];
        let m = SparseMat::from_columns(2, cols);
        assert_eq!(invariant_factors(&m), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(invariant_factors(&SparseMat::zero(3, 3)), Vec::<BigInt>::new());

        let unit_rich = SparseMat::from_columns(
            3,
            vec![
                vec![(0, BigInt::from(1)), (2, BigInt::from(5))],
                vec![(1, BigInt::from(-1))],
                vec![(0, BigInt::from(3)), (2, BigInt::from(15))],
            ],
        );
        let dense = smith_normal_form(&DenseMat::from_sparse(&unit_rich));
        let expected: Vec<BigInt> =
            dense.d.diagonal().into_iter().filter(|v| !v.is_zero()).collect();
        assert_eq!(invariant_factors(&unit_rich), expected);
    }

    proptest! {
        #[test]
        fn random_matrices_decompose_exactly(entries in proptest::collection::vec(-9i64..=9, 12)) {
            let rows: Vec<&[i64]> = entries.chunks(4).collect();
            let a = DenseMat::from_rows(&rows);
            let snf = smith_normal_form(&a);
            check_decomposition(&a, &snf);

            let mut cols = vec![Vec::new(); 4];
            for (i, row) in rows.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if *v != 0 {
                        cols[j].push((i, BigInt::from(*v)));
                    }
                }
            }
            let sparse = SparseMat::from_columns(3, cols);
            prop_assert_eq!(sparse.rank(), snf.rank());
            let expected: Vec<BigInt> =
                snf.d.diagonal().into_iter().filter(|v| !v.is_zero()).collect();
            prop_assert_eq!(invariant_factors(&sparse), expected);
        }
    }
}
