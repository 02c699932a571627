//! Sparse matrices over the integers with exact arithmetic.
//!
//! Matrices are stored column-wise with `BigInt` entries. Rank and integer
//! linear solving go through a shared column echelon form: columns are
//! inserted one at a time and reduced top-down against a pivot per row,
//! combining columns by extended gcd so every operation stays over ℤ. The
//! solver can track how each pivot was formed from the original columns,
//! which turns membership answers into explicit preimage witnesses.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix; each column holds sorted `(row, value)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat {
    n_rows: usize,
    cols: Vec<Vec<(usize, BigInt)>>,
}

fn normalize_column(n_rows: usize, col: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let mut map: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (r, v) in col {
        assert!(r < n_rows, "row {r} out of range");
        let e = map.entry(r).or_insert_with(BigInt::zero);
        *e += v;
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl SparseMat {
    pub fn zero(n_rows: usize, n_cols: usize) -> SparseMat {
        SparseMat { n_rows, cols: vec![Vec::new(); n_cols] }
    }

    pub fn from_columns(n_rows: usize, cols: Vec<Vec<(usize, BigInt)>>) -> SparseMat {
        let cols = cols.into_iter().map(|c| normalize_column(n_rows, c)).collect();
        SparseMat { n_rows, cols }
    }

    pub fn push_column(&mut self, col: Vec<(usize, BigInt)>) {
        self.cols.push(normalize_column(self.n_rows, col));
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, BigInt)] {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        self.cols[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// The matrix with the given extra columns appended.
    pub fn augmented(&self, extra: &[Vec<(usize, BigInt)>]) -> SparseMat {
        let mut out = self.clone();
        for col in extra {
            out.push_column(col.clone());
        }
        out
    }

    pub fn transpose(&self) -> SparseMat {
        let mut cols = vec![Vec::new(); self.n_rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((j, v.clone()));
            }
        }
        SparseMat { n_rows: self.cols.len(), cols }
    }

    /// The image `A·x` of a sparse vector given as column-index map.
    pub fn apply(&self, x: &BTreeMap<usize, BigInt>) -> BTreeMap<usize, BigInt> {
        let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (j, c) in x {
            for (r, v) in &self.cols[*j] {
                let e = out.entry(*r).or_insert_with(BigInt::zero);
                *e += v * c;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// The matrix product `self · other`.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.n_cols(), other.n_rows());
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let x: BTreeMap<usize, BigInt> = col.iter().cloned().collect();
                self.apply(&x).into_iter().collect()
            })
            .collect();
        SparseMat { n_rows: self.n_rows, cols }
    }

    /// The rank over the rationals (equivalently over ℤ).
    pub fn rank(&self) -> usize {
        let mut ech = ColumnEchelon::new(self.n_rows, false);
        for (j, col) in self.cols.iter().enumerate() {
            ech.insert_column(j, col.iter().cloned().collect());
        }
        ech.rank()
    }
}

fn axpy(dst: &mut BTreeMap<usize, BigInt>, coeff: &BigInt, src: &BTreeMap<usize, BigInt>) {
    if coeff.is_zero() {
        return;
    }
    for (r, v) in src {
        let e = dst.entry(*r).or_insert_with(BigInt::zero);
        *e += coeff * v;
        if e.is_zero() {
            dst.remove(r);
        }
    }
}

fn scale(m: &BTreeMap<usize, BigInt>, c: &BigInt) -> BTreeMap<usize, BigInt> {
    m.iter().map(|(r, v)| (*r, v * c)).collect()
}

struct Pivot {
    col: BTreeMap<usize, BigInt>,
    expr: BTreeMap<usize, BigInt>,
}

/// Incremental integer column echelon form. Each pivot owns the topmost row
/// of its column; inserting a column reduces it top-down, merging with an
/// existing pivot by extended gcd when exact division fails.
pub struct ColumnEchelon {
    n_rows: usize,
    track: bool,
    pivot_of_row: HashMap<usize, usize>,
    pivots: Vec<Pivot>,
}

impl ColumnEchelon {
    pub fn new(n_rows: usize, track_expressions: bool) -> ColumnEchelon {
        ColumnEchelon { n_rows, track: track_expressions, pivot_of_row: HashMap::new(), pivots: Vec::new() }
    }

    pub fn from_matrix(m: &SparseMat, track_expressions: bool) -> ColumnEchelon {
        let mut ech = ColumnEchelon::new(m.n_rows(), track_expressions);
        for (j, col) in m.cols.iter().enumerate() {
            ech.insert_column(j, col.iter().cloned().collect());
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a column; `label` names it in tracked expressions.
    pub fn insert_column(&mut self, label: usize, col: BTreeMap<usize, BigInt>) {
        let mut c = col;
        c.retain(|r, v| {
            assert!(*r < self.n_rows);
            !v.is_zero()
        });
        let mut expr: BTreeMap<usize, BigInt> = BTreeMap::new();
        if self.track {
            expr.insert(label, BigInt::one());
        }
        while let Some((&r, _)) = c.first_key_value() {
            match self.pivot_of_row.get(&r) {
                None => {
                    if c[&r].is_negative() {
                        c = scale(&c, &BigInt::from(-1));
                        expr = scale(&expr, &BigInt::from(-1));
                    }
                    self.pivot_of_row.insert(r, self.pivots.len());
                    self.pivots.push(Pivot { col: c, expr });
                    return;
                }
                Some(&k) => {
                    let a = self.pivots[k].col[&r].clone();
                    let b = c[&r].clone();
                    let (q, rem) = b.div_rem(&a);
                    if rem.is_zero() {
                        let minus_q = -q;
                        axpy(&mut c, &minus_q, &self.pivots[k].col.clone());
                        if self.track {
                            axpy(&mut expr, &minus_q, &self.pivots[k].expr.clone());
                        }
                    } else {
                        let e = a.extended_gcd(&b);
                        let (g, x, y) = (e.gcd, e.x, e.y);
                        debug_assert!(g.is_positive());
                        let mut merged = scale(&self.pivots[k].col, &x);
                        axpy(&mut merged, &y, &c);
                        let mut merged_expr = scale(&self.pivots[k].expr, &x);
                        if self.track {
                            axpy(&mut merged_expr, &y, &expr);
                        }
                        let ca = &a / &g;
                        let cb = &b / &g;
                        let mut reduced = scale(&c, &ca);
                        axpy(&mut reduced, &-&cb, &self.pivots[k].col.clone());
                        if self.track {
                            let mut re = scale(&expr, &ca);
                            axpy(&mut re, &-&cb, &self.pivots[k].expr.clone());
                            expr = re;
                        }
                        debug_assert_eq!(merged.first_key_value().map(|(r, _)| *r), Some(r));
                        self.pivots[k].col = merged;
                        self.pivots[k].expr = merged_expr;
                        c = reduced;
                    }
                    debug_assert!(!c.contains_key(&r));
                }
            }
        }
    }

    /// Solves `A·x = b` over ℤ for the inserted columns; `None` when `b` is
    /// not an integer combination. Requires expression tracking.
    pub fn solve(&self, b: &BTreeMap<usize, BigInt>) -> Option<BTreeMap<usize, BigInt>> {
        assert!(self.track, "solver built without expression tracking");
        let mut rest: BTreeMap<usize, BigInt> = b.clone();
        rest.retain(|_, v| !v.is_zero());
        let mut x: BTreeMap<usize, BigInt> = BTreeMap::new();
        while let Some((&r, v)) = rest.first_key_value() {
            let &k = self.pivot_of_row.get(&r)?;
            let a = &self.pivots[k].col[&r];
            let (q, rem) = v.div_rem(a);
            if !rem.is_zero() {
                return None;
            }
            let minus_q = -&q;
            axpy(&mut rest, &minus_q, &self.pivots[k].col);
            axpy(&mut x, &q, &self.pivots[k].expr);
        }
        Some(x)
    }
}
