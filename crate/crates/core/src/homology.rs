//! Integral homology of truncated complexes.
//!
//! Boundary matrices are assembled over the cell bases of a
//! [`TruncatedComplex`] and all linear algebra is exact: Betti numbers come
//! from sparse ranks, torsion from invariant factors. `is_boundary` answers
//! membership in the image of the 2-cell boundary with an explicit witness,
//! and the relative routines compute homology of a subcomplex pair together
//! with the two rank invariants tied by the long exact sequence.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cells::{boundary2, find_loop, LoopId, TwoCell};
use crate::chains::FormalSum;
use crate::graph::{boundary1, Edge};
use crate::intmat::{ColumnEchelon, SparseMat};
use crate::snf::invariant_factors;
use crate::truncation::TruncatedComplex;
use crate::words::Word;

/// Words whose supporting cells sit at least this far from the length bound
/// are treated as safely inside the truncation by default.
pub const DEFAULT_INNER_MARGIN: usize = 2;

/// A finitely generated abelian group in invariant-factor form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> HomologyGroup {
        HomologyGroup { betti: 0, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("homology is computed for dimensions 0 through 3, got {0}")]
    UnsupportedDimension(usize),
}

/// The boundary matrix from `k`-cells to `(k-1)`-cells, `k` in `1..=3`.
pub fn boundary_matrix(cx: &TruncatedComplex, k: usize) -> SparseMat {
    let sys = cx.system();
    match k {
        1 => {
            let mut m = SparseMat::zero(cx.words().len(), 0);
            for e in cx.edges() {
                let s = cx.word_index(&e.start(sys)).expect("edge source in complex");
                let t = cx.word_index(&e.end(sys)).expect("edge target in complex");
                m.push_column(vec![(s, BigInt::one()), (t, -BigInt::one())]);
            }
            m
        }
        2 => {
            let mut m = SparseMat::zero(cx.edges().len(), 0);
            for c in cx.two_cells() {
                let b = boundary2(sys, cx.loops(), c).expect("2-cell boundary");
                let col = b
                    .iter()
                    .map(|(e, v)| (cx.edge_index(e).expect("face edge in complex"), v.clone()))
                    .collect();
                m.push_column(col);
            }
            m
        }
        3 => {
            let mut m = SparseMat::zero(cx.two_cells().len(), 0);
            for t in cx.three_cells() {
                let b = crate::cells::boundary3(sys, cx.loops(), t).expect("3-cell boundary");
                let col = b
                    .iter()
                    .map(|(c, v)| (cx.two_cell_index(c).expect("face 2-cell in complex"), v.clone()))
                    .collect();
                m.push_column(col);
            }
            m
        }
        _ => panic!("boundary matrix defined for k in 1..=3, got {k}"),
    }
}

fn differential(cx: &TruncatedComplex, k: usize) -> SparseMat {
    match k {
        0 => SparseMat::zero(0, cx.words().len()),
        1..=3 => boundary_matrix(cx, k),
        4 => SparseMat::zero(cx.three_cells().len(), 0),
        _ => unreachable!(),
    }
}

/// Homology of the chain complex `C_{k+1} → C_k → C_{k-1}` given the two
/// boundary matrices.
pub fn homology_of_matrices(d_k: &SparseMat, d_k1: &SparseMat) -> HomologyGroup {
    assert_eq!(d_k.n_cols(), d_k1.n_rows());
    let betti = d_k.n_cols() - d_k.rank() - d_k1.rank();
    let torsion = invariant_factors(d_k1).into_iter().filter(|f| !f.is_one()).collect();
    HomologyGroup { betti, torsion }
}

/// The `k`-th integral homology group of the truncated complex, `k <= 3`.
pub fn homology(cx: &TruncatedComplex, k: usize) -> Result<HomologyGroup, HomologyError> {
    if k > 3 {
        return Err(HomologyError::UnsupportedDimension(k));
    }
    Ok(homology_of_matrices(&differential(cx, k), &differential(cx, k + 1)))
}

struct Forest {
    components: usize,
    parent: Vec<Option<(usize, i64)>>,
    tree_edge: Vec<bool>,
}

fn spanning_forest(cx: &TruncatedComplex) -> Forest {
    let sys = cx.system();
    let n = cx.words().len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (j, e) in cx.edges().iter().enumerate() {
        let s = cx.word_index(&e.start(sys)).expect("edge source in complex");
        let t = cx.word_index(&e.end(sys)).expect("edge target in complex");
        adj[s].push((j, t));
        adj[t].push((j, s));
    }
    let mut parent: Vec<Option<(usize, i64)>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut tree_edge = vec![false; cx.edges().len()];
    let mut components = 0;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        components += 1;
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(w) = queue.pop_front() {
            for &(j, other) in &adj[w] {
                if visited[other] {
                    continue;
                }
                visited[other] = true;
                tree_edge[j] = true;
                let e = &cx.edges()[j];
                let dir = if cx.word_index(&e.start(sys)) == Some(other) { 1 } else { -1 };
                parent[other] = Some((j, dir));
                queue.push_back(other);
            }
        }
    }
    Forest { components, parent, tree_edge }
}

fn chain_to_root(cx: &TruncatedComplex, forest: &Forest, mut w: usize) -> BTreeMap<usize, BigInt> {
    let sys = cx.system();
    let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
    while let Some((j, dir)) = forest.parent[w] {
        let edge = &cx.edges()[j];
        let s = cx.word_index(&edge.start(sys)).expect("edge source in complex");
        let t = cx.word_index(&edge.end(sys)).expect("edge target in complex");
        let c = out.entry(j).or_insert_with(BigInt::zero);
        *c += dir;
        if c.is_zero() {
            out.remove(&j);
        }
        w = if dir == 1 { t } else { s };
    }
    out
}

/// The number of connected components of the 1-skeleton.
pub fn components(cx: &TruncatedComplex) -> usize {
    spanning_forest(cx).components
}

/// A basis of the 1-cycle space: one fundamental cycle per non-tree edge of
/// a spanning forest.
pub fn fundamental_cycles(cx: &TruncatedComplex) -> Vec<FormalSum<Edge>> {
    let sys = cx.system();
    let forest = spanning_forest(cx);
    let mut out = Vec::new();
    for (j, e) in cx.edges().iter().enumerate() {
        if forest.tree_edge[j] {
            continue;
        }
        let s = cx.word_index(&e.start(sys)).expect("edge source in complex");
        let t = cx.word_index(&e.end(sys)).expect("edge target in complex");
        let mut cycle: BTreeMap<usize, BigInt> = BTreeMap::new();
        cycle.insert(j, BigInt::one());
        for (k, v) in chain_to_root(cx, &forest, s) {
            let c = cycle.entry(k).or_insert_with(BigInt::zero);
            *c -= v;
            if c.is_zero() {
                cycle.remove(&k);
            }
        }
        for (k, v) in chain_to_root(cx, &forest, t) {
            let c = cycle.entry(k).or_insert_with(BigInt::zero);
            *c += v;
            if c.is_zero() {
                cycle.remove(&k);
            }
        }
        out.push(
            cycle
                .into_iter()
                .map(|(k, v)| (cx.edges()[k].clone(), v))
                .collect(),
        );
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("the chain is not a cycle")]
    NotACycle,
    #[error("the chain uses edge {0} outside the truncation")]
    UnknownEdge(Edge),
}

/// Answer of a boundary membership query on a 1-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryOutcome {
    /// A 2-chain whose boundary is the queried cycle.
    Boundary { witness: FormalSum<TwoCell> },
    /// Not a boundary among the truncated 2-cells. Definitive only for the
    /// truncation; the flag is set when the cycle sits too close to the
    /// length bound for the answer to carry over to the infinite complex.
    NotBoundaryInTruncation { inconclusive_for_infinite: bool },
}

/// Decides whether the 1-cycle `z` bounds inside the truncation, producing a
/// preimage witness when it does. `margin` sets how far below the length
/// bound the support must stay for a negative answer to be conclusive.
pub fn is_boundary(
    cx: &TruncatedComplex,
    z: &FormalSum<Edge>,
    margin: usize,
) -> Result<BoundaryOutcome, CycleError> {
    let sys = cx.system();
    let folded: FormalSum<Edge> = z.flat_map(|e| {
        let (p, s) = e.positive_part();
        FormalSum::singleton(p, s)
    });
    if !boundary1(sys, &folded).is_zero() {
        return Err(CycleError::NotACycle);
    }
    let mut b: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (e, c) in folded.iter() {
        match cx.edge_index(e) {
            Some(i) => {
                b.insert(i, c.clone());
            }
            None => return Err(CycleError::UnknownEdge(e.clone())),
        }
    }
    let d2 = boundary_matrix(cx, 2);
    let ech = ColumnEchelon::from_matrix(&d2, true);
    match ech.solve(&b) {
        Some(x) => {
            let witness: FormalSum<TwoCell> = x
                .into_iter()
                .map(|(j, v)| (cx.two_cells()[j].clone(), v))
                .collect();
            debug_assert_eq!(
                witness.flat_map(|c| boundary2(sys, cx.loops(), c).expect("2-cell boundary")),
                folded
            );
            Ok(BoundaryOutcome::Boundary { witness })
        }
        None => {
            let limit = cx.max_len().saturating_sub(margin);
            let within = folded
                .support()
                .all(|e| e.start(sys).len() <= limit && e.end(sys).len() <= limit);
            Ok(BoundaryOutcome::NotBoundaryInTruncation { inconclusive_for_infinite: !within })
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(&'static str),
    #[error("homology is computed for dimensions 0 through 3, got {0}")]
    UnsupportedDimension(usize),
}

pub(crate) struct PairMasks {
    words: Vec<bool>,
    edges: Vec<bool>,
    two: Vec<bool>,
    three: Vec<bool>,
}

fn check_pair(total: &TruncatedComplex, sub: &TruncatedComplex) -> Result<PairMasks, PairError> {
    if sub.system().alphabet() != total.system().alphabet() {
        return Err(PairError::NotSubcomplex("alphabets differ"));
    }
    for rule in sub.system().rules() {
        if !total.system().contains_rule(rule.id) || total.system().rule(rule.id) != rule {
            return Err(PairError::NotSubcomplex("rule missing from the ambient system"));
        }
    }
    for l in sub.loops() {
        if find_loop(total.loops(), l.id) != Some(l) {
            return Err(PairError::NotSubcomplex("loop missing from the ambient catalog"));
        }
    }
    let mut masks = PairMasks {
        words: vec![false; total.words().len()],
        edges: vec![false; total.edges().len()],
        two: vec![false; total.two_cells().len()],
        three: vec![false; total.three_cells().len()],
    };
    for w in sub.words() {
        let i = total
            .word_index(w)
            .ok_or(PairError::NotSubcomplex("word missing from the ambient complex"))?;
        masks.words[i] = true;
    }
    for e in sub.edges() {
        let i = total
            .edge_index(e)
            .ok_or(PairError::NotSubcomplex("edge missing from the ambient complex"))?;
        masks.edges[i] = true;
    }
    for c in sub.two_cells() {
        let i = total
            .two_cell_index(c)
            .ok_or(PairError::NotSubcomplex("2-cell missing from the ambient complex"))?;
        masks.two[i] = true;
    }
    if !sub.three_cells().is_empty() {
        let index: HashMap<&crate::cells::ThreeCell, usize> =
            total.three_cells().iter().enumerate().map(|(i, t)| (t, i)).collect();
        for t in sub.three_cells() {
            let i = *index
                .get(t)
                .ok_or(PairError::NotSubcomplex("3-cell missing from the ambient complex"))?;
            masks.three[i] = true;
        }
    }
    Ok(masks)
}

fn quotient_matrix(full: &SparseMat, keep_rows: &[bool], keep_cols: &[bool]) -> SparseMat {
    let mut row_map = vec![usize::MAX; keep_rows.len()];
    let mut next = 0;
    for (i, keep) in keep_rows.iter().enumerate() {
        if *keep {
            row_map[i] = next;
            next += 1;
        }
    }
    let mut m = SparseMat::zero(next, 0);
    for j in 0..full.n_cols() {
        if !keep_cols[j] {
            continue;
        }
        let col = full
            .column(j)
            .iter()
            .filter(|(r, _)| keep_rows[*r])
            .map(|(r, v)| (row_map[*r], v.clone()))
            .collect();
        m.push_column(col);
    }
    m
}

fn complement(mask: &[bool]) -> Vec<bool> {
    mask.iter().map(|b| !b).collect()
}

pub(crate) fn relative_homology_with_masks(
    total: &TruncatedComplex,
    masks: &PairMasks,
    k: usize,
) -> HomologyGroup {
    let keep = [
        complement(&masks.words),
        complement(&masks.edges),
        complement(&masks.two),
        complement(&masks.three),
    ];
    let count = |i: usize| keep[i].iter().filter(|b| **b).count();
    let all = |n: usize| vec![true; n];
    let d = |kk: usize| -> SparseMat {
        match kk {
            0 => SparseMat::zero(0, count(0)),
            1..=3 => quotient_matrix(&differential(total, kk), &keep[kk - 1], &keep[kk]),
            4 => {
                let full = differential(total, 4);
                quotient_matrix(&full, &keep[3], &all(full.n_cols()))
            }
            _ => unreachable!(),
        }
    };
    homology_of_matrices(&d(k), &d(k + 1))
}

/// Homology of the pair: the quotient of the total complex by the cells of
/// the subcomplex, `k <= 3`.
pub fn relative_homology(
    total: &TruncatedComplex,
    sub: &TruncatedComplex,
    k: usize,
) -> Result<HomologyGroup, PairError> {
    if k > 3 {
        return Err(PairError::UnsupportedDimension(k));
    }
    let masks = check_pair(total, sub)?;
    Ok(relative_homology_with_masks(total, &masks, k))
}

fn sub_cycle_columns(total: &TruncatedComplex, sub: &TruncatedComplex) -> Vec<Vec<(usize, BigInt)>> {
    fundamental_cycles(sub)
        .into_iter()
        .map(|cycle| {
            cycle
                .iter()
                .map(|(e, v)| (total.edge_index(e).expect("sub edge in total"), v.clone()))
                .collect()
        })
        .collect()
}

/// Rank over the rationals of the kernel of `H₁(sub) → H₁(total)` induced by
/// inclusion.
pub fn h1_inclusion_kernel_rank(
    total: &TruncatedComplex,
    sub: &TruncatedComplex,
) -> Result<usize, PairError> {
    check_pair(total, sub)?;
    let d2_total = boundary_matrix(total, 2);
    let d2_sub = boundary_matrix(sub, 2);
    let cycles = sub_cycle_columns(total, sub);
    let h1_sub = cycles.len() - d2_sub.rank();
    let image = d2_total.augmented(&cycles).rank() - d2_total.rank();
    Ok(h1_sub - image)
}

/// Rank over the rationals of the image of the connecting map
/// `H₂(total, sub) → H₁(sub)`.
pub fn connecting_image_rank(
    total: &TruncatedComplex,
    sub: &TruncatedComplex,
) -> Result<usize, PairError> {
    check_pair(total, sub)?;
    let d2_total = boundary_matrix(total, 2);
    let d2_sub = boundary_matrix(sub, 2);
    let unit_cols: Vec<Vec<(usize, BigInt)>> = sub
        .edges()
        .iter()
        .map(|e| vec![(total.edge_index(e).expect("sub edge in total"), BigInt::one())])
        .collect();
    let r_total = d2_total.rank();
    let meet = r_total + unit_cols.len() - d2_total.augmented(&unit_cols).rank();
    Ok(meet - d2_sub.rank())
}

/// Answer of a kernel membership test against the free bimodule on the loop
/// cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelOutcome {
    InKernel,
    NotInKernel,
    Unknown,
}

/// Tests whether a 2-chain maps to zero in the free bimodule on the loop
/// cells: coefficients are grouped by loop id and the normal forms of the
/// two contexts, and every group must cancel. Squares map to zero. Returns
/// `Unknown` as soon as a context has no available normal form.
pub fn phi_kernel_membership(
    xi: &FormalSum<TwoCell>,
    mut normal_form: impl FnMut(&Word) -> Option<Word>,
) -> KernelOutcome {
    let mut groups: BTreeMap<(LoopId, Word, Word), BigInt> = BTreeMap::new();
    for (cell, c) in xi.iter() {
        match cell {
            TwoCell::Square { .. } => {}
            TwoCell::Loop { left, loop_id, right } => {
                let (Some(u), Some(v)) = (normal_form(left), normal_form(right)) else {
                    return KernelOutcome::Unknown;
                };
                let e = groups.entry((*loop_id, u, v)).or_default();
                *e += c;
            }
        }
    }
    if groups.values().all(Zero::is_zero) {
        KernelOutcome::InKernel
    } else {
        KernelOutcome::NotInKernel
    }
}
