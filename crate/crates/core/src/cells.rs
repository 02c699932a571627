//! Two- and three-dimensional cells over the derivation graph.
//!
//! Square 2-cells `[e, f]` commute two disjoint rule applications. Loop
//! 2-cells `[u, p, v]` are two-sided translates of closed paths from a fixed
//! catalog, typically resolutions of critical pairs. 3-cells pair a positive
//! edge with a 2-cell on either side. All boundary maps are exact integer
//! chains, and `∂∘∂ = 0` holds on the nose.
//!
//! When the system is shortlex-oriented and complete, every 2-cell has a
//! unique maximal vertex and is named `[w; (e, f)]` by the ordered pair of
//! positive edges leaving that vertex; the edge order compares right
//! contexts by proper suffix, then side lengths, then replacement words, and
//! the induced cell order is total.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::chains::FormalSum;
use crate::graph::{Edge, Path};
use crate::rewriting::{Resolution, RewritingSystem, RuleId};
use crate::words::Word;

/// Stable identifier of a catalog loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopId(pub u32);

/// A closed path with a stable id; its translates bound the loop 2-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSpec {
    pub id: LoopId,
    pub path: Path,
}

/// Finds a loop by id in a catalog.
pub fn find_loop(loops: &[LoopSpec], id: LoopId) -> Option<&LoopSpec> {
    loops.iter().find(|l| l.id == id)
}

/// A 2-cell: either a square of two disjoint positive edges or a translated
/// catalog loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoCell {
    Square { e: Edge, f: Edge },
    Loop { left: Word, loop_id: LoopId, right: Word },
}

impl TwoCell {
    pub fn square(e: Edge, f: Edge) -> TwoCell {
        debug_assert!(e.is_positive() && f.is_positive());
        TwoCell::Square { e, f }
    }

    pub fn loop_cell(left: Word, loop_id: LoopId, right: Word) -> TwoCell {
        TwoCell::Loop { left, loop_id, right }
    }

    /// The two-sided action `u.c.v`.
    pub fn translate(&self, u: &Word, v: &Word) -> TwoCell {
        match self {
            TwoCell::Square { e, f } => TwoCell::Square {
                e: e.translate(u, &Word::empty()),
                f: f.translate(&Word::empty(), v),
            },
            TwoCell::Loop { left, loop_id, right } => TwoCell::Loop {
                left: u.concat(left),
                loop_id: *loop_id,
                right: right.concat(v),
            },
        }
    }

    /// The canonical representative: a square `[e, f]` keeps the word
    /// between the two redexes on the left context of `f`, so that
    /// geometrically equal squares compare equal as basis elements.
    pub fn canonical(&self) -> TwoCell {
        match self {
            TwoCell::Square { e, f } if !e.right.is_empty() => TwoCell::Square {
                e: Edge { left: e.left.clone(), rule: e.rule, sign: e.sign, right: Word::empty() },
                f: f.translate(&e.right, &Word::empty()),
            },
            other => other.clone(),
        }
    }
}

/// A 3-cell: a positive edge attached to a 2-cell on the left or right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreeCell {
    EdgeFirst { f: Edge, cell: TwoCell },
    CellFirst { cell: TwoCell, f: Edge },
}

impl ThreeCell {
    /// The two-sided action `u.t.v`.
    pub fn translate(&self, u: &Word, v: &Word) -> ThreeCell {
        match self {
            ThreeCell::EdgeFirst { f, cell } => ThreeCell::EdgeFirst {
                f: f.translate(u, &Word::empty()),
                cell: cell.translate(&Word::empty(), v),
            },
            ThreeCell::CellFirst { cell, f } => ThreeCell::CellFirst {
                cell: cell.translate(u, &Word::empty()),
                f: f.translate(&Word::empty(), v),
            },
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CellError {
    #[error("loop id {0:?} is not in the catalog")]
    UnknownLoop(LoopId),
    #[error("cell involves a non-positive edge")]
    NonPositiveEdge,
    #[error("system is not oriented by the shortlex order")]
    NotLlexOriented,
    #[error("the attaching loop visits its maximal vertex more than once")]
    AmbiguousMaxVertex,
    #[error("the attaching loop is empty")]
    EmptyLoop,
}

/// The closed boundary path of a square cell:
/// `(e.ιf) (τe.f) (e.τf)⁻¹ (ιe.f)⁻¹`.
pub fn square_path(sys: &RewritingSystem, e: &Edge, f: &Edge) -> Path {
    let empty = Word::empty();
    let edges = vec![
        e.translate(&empty, &f.start(sys)),
        f.translate(&e.end(sys), &empty),
        e.translate(&empty, &f.end(sys)).inverse(),
        f.translate(&e.start(sys), &empty).inverse(),
    ];
    Path::from_edges(sys, edges).expect("square corners compose")
}

/// The boundary of a 2-cell as a 1-chain over positive edges.
pub fn boundary2(
    sys: &RewritingSystem,
    loops: &[LoopSpec],
    cell: &TwoCell,
) -> Result<FormalSum<Edge>, CellError> {
    match cell {
        TwoCell::Square { e, f } => {
            if !e.is_positive() || !f.is_positive() {
                return Err(CellError::NonPositiveEdge);
            }
            let empty = Word::empty();
            let mut out = FormalSum::zero();
            out.add_term(e.translate(&empty, &f.start(sys)), 1);
            out.add_term(e.translate(&empty, &f.end(sys)), -1);
            out.add_term(f.translate(&e.start(sys), &empty), -1);
            out.add_term(f.translate(&e.end(sys), &empty), 1);
            Ok(out)
        }
        TwoCell::Loop { left, loop_id, right } => {
            let spec = find_loop(loops, *loop_id).ok_or(CellError::UnknownLoop(*loop_id))?;
            Ok(spec.path.translate(left, right).chain())
        }
    }
}

/// The boundary of a 3-cell as a 2-chain. With `σ` the 2-cell, `f` the
/// edge, and `∂₂σ = Σ εᵢ eᵢ`:
/// `∂₃[f, σ] = ιf.σ − τf.σ + Σ εᵢ [f, eᵢ]` and
/// `∂₃[σ, f] = σ.ιf − σ.τf − Σ εᵢ [eᵢ, f]`.
pub fn boundary3(
    sys: &RewritingSystem,
    loops: &[LoopSpec],
    t: &ThreeCell,
) -> Result<FormalSum<TwoCell>, CellError> {
    let empty = Word::empty();
    let mut out = FormalSum::zero();
    match t {
        ThreeCell::EdgeFirst { f, cell } => {
            if !f.is_positive() {
                return Err(CellError::NonPositiveEdge);
            }
            out.add_term(cell.translate(&f.start(sys), &empty), 1);
            out.add_term(cell.translate(&f.end(sys), &empty), -1);
            for (e, c) in boundary2(sys, loops, cell)?.iter() {
                out.add_term(TwoCell::square(f.clone(), e.clone()), c.clone());
            }
        }
        ThreeCell::CellFirst { cell, f } => {
            if !f.is_positive() {
                return Err(CellError::NonPositiveEdge);
            }
            out.add_term(cell.translate(&empty, &f.start(sys)), 1);
            out.add_term(cell.translate(&empty, &f.end(sys)), -1);
            for (e, c) in boundary2(sys, loops, cell)?.iter() {
                out.add_term(TwoCell::square(e.clone(), f.clone()), -c);
            }
        }
    }
    Ok(out)
}

/// Compares two positive edges with a common source. Returns `None` when the
/// sources differ or an edge is not positive. With `e = (u, r, +1, v)` and
/// `f = (u′, r′, +1, v′)`, `e` precedes `f` when `v′` is a proper suffix of
/// `v`, or `v = v′` and `|lhs|` is smaller, or additionally `rhs` is
/// shortlex-smaller.
pub fn compare_edges(sys: &RewritingSystem, e: &Edge, f: &Edge) -> Option<Ordering> {
    if !e.is_positive() || !f.is_positive() || e.start(sys) != f.start(sys) {
        return None;
    }
    match e.right.len().cmp(&f.right.len()) {
        Ordering::Greater => return Some(Ordering::Less),
        Ordering::Less => return Some(Ordering::Greater),
        Ordering::Equal => {}
    }
    debug_assert_eq!(e.right, f.right);
    let (re, rf) = (sys.rule(e.rule), sys.rule(f.rule));
    match re.lhs.len().cmp(&rf.lhs.len()) {
        Ordering::Less => return Some(Ordering::Less),
        Ordering::Greater => return Some(Ordering::Greater),
        Ordering::Equal => {}
    }
    debug_assert_eq!(re.lhs, rf.lhs);
    Some(re.rhs.cmp(&rf.rhs))
}

/// The canonical name `[w; (first, second)]` of a 2-cell: `w` its maximal
/// vertex, `first ≺ second` the positive edges of the cell leaving `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellName {
    pub vertex: Word,
    pub first: Edge,
    pub second: Edge,
}

/// The canonical name `[w; (e₁, e₂, e₃)]` of a 3-cell, edges in increasing
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeCellName {
    pub vertex: Word,
    pub edges: [Edge; 3],
}

/// Names a 2-cell by its maximal vertex and the ordered edge pair there.
/// Requires a shortlex-oriented system; unique maximal vertices are
/// guaranteed when the system is also complete.
pub fn name_cell(
    sys: &RewritingSystem,
    loops: &[LoopSpec],
    cell: &TwoCell,
) -> Result<CellName, CellError> {
    if !sys.is_llex_oriented() {
        return Err(CellError::NotLlexOriented);
    }
    match cell {
        TwoCell::Square { e, f } => {
            if !e.is_positive() || !f.is_positive() {
                return Err(CellError::NonPositiveEdge);
            }
            let empty = Word::empty();
            let first = e.translate(&empty, &f.start(sys));
            let second = f.translate(&e.start(sys), &empty);
            Ok(CellName { vertex: first.start(sys), first, second })
        }
        TwoCell::Loop { left, loop_id, right } => {
            let spec = find_loop(loops, *loop_id).ok_or(CellError::UnknownLoop(*loop_id))?;
            let p = spec.path.translate(left, right);
            if p.is_empty() {
                return Err(CellError::EmptyLoop);
            }
            let verts = p.vertices(sys);
            let cycle = &verts[..verts.len() - 1];
            let max = cycle.iter().max().expect("nonempty cycle").clone();
            if cycle.iter().filter(|w| **w == max).count() != 1 {
                return Err(CellError::AmbiguousMaxVertex);
            }
            let i = cycle.iter().position(|w| *w == max).expect("max present");
            let n = p.len();
            let outgoing = p.edges()[i].clone();
            let incoming = p.edges()[(i + n - 1) % n].inverse();
            match compare_edges(sys, &outgoing, &incoming) {
                Some(Ordering::Less) => {
                    Ok(CellName { vertex: max, first: outgoing, second: incoming })
                }
                Some(Ordering::Greater) => {
                    Ok(CellName { vertex: max, first: incoming, second: outgoing })
                }
                _ => Err(CellError::AmbiguousMaxVertex),
            }
        }
    }
}

/// Names a 3-cell by its maximal vertex and increasing edge triple.
pub fn name_three_cell(
    sys: &RewritingSystem,
    loops: &[LoopSpec],
    t: &ThreeCell,
) -> Result<ThreeCellName, CellError> {
    let empty = Word::empty();
    let (vertex, edges) = match t {
        ThreeCell::EdgeFirst { f, cell } => {
            if !f.is_positive() {
                return Err(CellError::NonPositiveEdge);
            }
            let n = name_cell(sys, loops, cell)?;
            let e1 = f.translate(&empty, &n.vertex);
            let e2 = n.first.translate(&f.start(sys), &empty);
            let e3 = n.second.translate(&f.start(sys), &empty);
            (e1.start(sys), [e1, e2, e3])
        }
        ThreeCell::CellFirst { cell, f } => {
            if !f.is_positive() {
                return Err(CellError::NonPositiveEdge);
            }
            let n = name_cell(sys, loops, cell)?;
            let e1 = n.first.translate(&empty, &f.start(sys));
            let e2 = n.second.translate(&empty, &f.start(sys));
            let e3 = f.translate(&n.vertex, &empty);
            (e1.start(sys), [e1, e2, e3])
        }
    };
    debug_assert_eq!(compare_edges(sys, &edges[0], &edges[1]), Some(Ordering::Less));
    debug_assert_eq!(compare_edges(sys, &edges[1], &edges[2]), Some(Ordering::Less));
    Ok(ThreeCellName { vertex, edges })
}

/// Compares two 2-cells through their names: first by maximal vertex, then
/// by second edge, then by first edge.
pub fn compare_cells(
    sys: &RewritingSystem,
    loops: &[LoopSpec],
    a: &TwoCell,
    b: &TwoCell,
) -> Result<Ordering, CellError> {
    let na = name_cell(sys, loops, a)?;
    let nb = name_cell(sys, loops, b)?;
    match na.vertex.cmp(&nb.vertex) {
        Ordering::Equal => {}
        ord => return Ok(ord),
    }
    match compare_edges(sys, &na.second, &nb.second) {
        Some(Ordering::Equal) => {}
        Some(ord) => return Ok(ord),
        None => unreachable!("edges at a shared maximal vertex are comparable"),
    }
    match compare_edges(sys, &na.first, &nb.first) {
        Some(ord) => Ok(ord),
        None => unreachable!("edges at a shared maximal vertex are comparable"),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LoopBuildError {
    #[error("critical pair at {0} does not resolve")]
    Unresolved(Word),
    #[error("resolution search exceeded its state cap at {0}")]
    SearchCapped(Word),
}

/// Builds the resolution loop catalog of a complete system: one closed path
/// `e ∘ p_e ∘ p_f⁻¹ ∘ f⁻¹` per critical pair `(e, f)`, ids in pair order.
pub fn resolution_loops(
    sys: &RewritingSystem,
    max_states: usize,
) -> Result<Vec<LoopSpec>, LoopBuildError> {
    let mut out = Vec::new();
    for (k, pair) in sys.critical_pairs().iter().enumerate() {
        match sys.resolve(pair, max_states) {
            Resolution::Resolvable { first, second } => {
                let p = Path::single(sys, pair.first.clone())
                    .compose(sys, &first)
                    .and_then(|p| p.compose(sys, &second.inverse(sys)))
                    .and_then(|p| p.compose(sys, &Path::single(sys, pair.second.clone()).inverse(sys)))
                    .expect("resolution legs compose");
                out.push(LoopSpec { id: LoopId(k as u32), path: p });
            }
            Resolution::Unresolved { .. } => {
                return Err(LoopBuildError::Unresolved(pair.word.clone()));
            }
            Resolution::Unknown => {
                return Err(LoopBuildError::SearchCapped(pair.word.clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("replacement path does not connect the endpoints of the edge")]
pub struct EndpointMismatch;

/// Replaces an edge by the chain of a path with the same endpoints.
pub fn retract_edge_chain(
    sys: &RewritingSystem,
    e: &Edge,
    replacement: &Path,
) -> Result<FormalSum<Edge>, EndpointMismatch> {
    if *replacement.start() != e.start(sys) || replacement.end(sys) != e.end(sys) {
        return Err(EndpointMismatch);
    }
    Ok(replacement.chain())
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no path found between the sides of rule {0}")]
pub struct NoReplacementPath(pub RuleId);

/// A retraction of 1-chains onto a base system: edges of extra rules are
/// replaced by the translated chain of a chosen base path, base edges map to
/// themselves.
#[derive(Debug, Clone)]
pub struct Retraction {
    replacements: BTreeMap<u32, Path>,
}

impl Retraction {
    /// The identity retraction.
    pub fn identity() -> Retraction {
        Retraction { replacements: BTreeMap::new() }
    }

    /// For every rule of `extended` missing from `base`, searches the base
    /// graph for a path between the rule's sides and records it.
    pub fn onto_base(
        base: &RewritingSystem,
        extended: &RewritingSystem,
        max_len: usize,
        max_visited: usize,
    ) -> Result<Retraction, NoReplacementPath> {
        let mut replacements = BTreeMap::new();
        for r in extended.rules() {
            if base.contains_rule(r.id) {
                continue;
            }
            let p = base
                .connect(&r.lhs, &r.rhs, max_len, max_visited)
                .ok_or(NoReplacementPath(r.id))?;
            replacements.insert(r.id.0, p);
        }
        Ok(Retraction { replacements })
    }

    pub fn replacement(&self, id: RuleId) -> Option<&Path> {
        self.replacements.get(&id.0)
    }

    /// The image of a single edge.
    pub fn edge_chain(&self, e: &Edge) -> FormalSum<Edge> {
        match self.replacements.get(&e.rule.0) {
            None => FormalSum::from_terms([e.positive_part()]),
            Some(p) => {
                let c = p.translate(&e.left, &e.right).chain();
                if e.is_positive() {
                    c
                } else {
                    c.negated()
                }
            }
        }
    }

    /// The linear extension to 1-chains over positive edges.
    pub fn chain(&self, c: &FormalSum<Edge>) -> FormalSum<Edge> {
        c.flat_map(|e| self.edge_chain(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::boundary1;
    use crate::rewriting::tests::{c3_complete, system};

    fn fmt_chain(sys: &RewritingSystem, c: &FormalSum<Edge>) -> Vec<(String, i64)> {
        c.iter()
            .map(|(e, z)| (e.display(sys), i64::try_from(z).unwrap()))
            .collect()
    }

    #[test]
    fn square_boundary_is_the_four_term_sum() {
        let sys = system(&["x", "x^-1"], &[("x", "1"), ("x x^-1", "1")]);
        let e = Edge::positive(Word::empty(), RuleId(0), Word::empty());
        let f = Edge::positive(Word::empty(), RuleId(1), Word::empty());
        let b = boundary2(&sys, &[], &TwoCell::square(e.clone(), f.clone())).unwrap();
        assert_eq!(
            fmt_chain(&sys, &b),
            vec![
                ("(1, r0, +1, 1)".to_string(), -1),
                ("(1, r0, +1, x x^-1)".to_string(), 1),
                ("(1, r1, +1, 1)".to_string(), 1),
                ("(x, r1, +1, 1)".to_string(), -1),
            ]
        );
        assert!(boundary1(&sys, &b).is_zero());
        let p = square_path(&sys, &e, &f);
        assert!(p.is_closed(&sys));
        assert_eq!(p.chain(), b);
    }

    #[test]
    fn translation_commutes_with_square_boundary() {
        let sys = c3_complete();
        let al = sys.alphabet();
        let e = Edge::positive(Word::empty(), RuleId(2), Word::empty());
        let f = Edge::positive(Word::empty(), RuleId(3), Word::empty());
        let cell = TwoCell::square(e, f);
        let u = al.parse_word("a A").unwrap();
        let v = al.parse_word("A").unwrap();
        let lhs = boundary2(&sys, &[], &cell.translate(&u, &v)).unwrap();
        let rhs: FormalSum<Edge> = boundary2(&sys, &[], &cell)
            .unwrap()
            .map_keys(|edge| edge.translate(&u, &v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_square_keeps_boundary_and_name() {
        let sys = c3_complete();
        let al = sys.alphabet();
        let mid = al.parse_word("A a").unwrap();
        let split = TwoCell::square(
            Edge::positive(Word::empty(), RuleId(2), al.parse_word("A").unwrap()),
            Edge::positive(al.parse_word("a").unwrap(), RuleId(3), Word::empty()),
        );
        let merged = TwoCell::square(
            Edge::positive(Word::empty(), RuleId(2), Word::empty()),
            Edge::positive(mid, RuleId(3), Word::empty()),
        );
        assert_ne!(split, merged);
        assert_eq!(split.canonical(), merged);
        assert_eq!(merged.canonical(), merged);
        assert_eq!(
            boundary2(&sys, &[], &split).unwrap(),
            boundary2(&sys, &[], &merged).unwrap()
        );
        assert_eq!(name_cell(&sys, &[], &split).unwrap(), name_cell(&sys, &[], &merged).unwrap());
    }

    #[test]
    fn edge_order_prefers_longer_right_context() {
        let sys = system(&["x", "x^-1"], &[("x", "1"), ("x x^-1", "1")]);
        let al = sys.alphabet();
        let f = Edge::positive(Word::empty(), RuleId(0), al.parse_word("x^-1").unwrap());
        let e = Edge::positive(Word::empty(), RuleId(1), Word::empty());
        assert_eq!(f.start(&sys), e.start(&sys));
        assert_eq!(compare_edges(&sys, &f, &e), Some(Ordering::Less));
        assert_eq!(compare_edges(&sys, &e, &f), Some(Ordering::Greater));
        assert_eq!(compare_edges(&sys, &e, &e), Some(Ordering::Equal));
        let elsewhere = Edge::positive(al.parse_word("x").unwrap(), RuleId(0), Word::empty());
        assert_eq!(compare_edges(&sys, &e, &elsewhere), None);
        assert_eq!(compare_edges(&sys, &e, &f.inverse()), None);
    }

    #[test]
    fn edge_order_breaks_ties_by_side_length_then_replacement() {
        let sys = system(&["a", "b"], &[("a b", "b"), ("b", "a"), ("a b", "a")]);
        let al = sys.alphabet();
        let ab = al.parse_word("a b").unwrap();
        let small = Edge::positive(al.parse_word("a").unwrap(), RuleId(1), Word::empty());
        let big = Edge::positive(Word::empty(), RuleId(0), Word::empty());
        let other = Edge::positive(Word::empty(), RuleId(2), Word::empty());
        assert_eq!(small.start(&sys), ab);
        assert_eq!(compare_edges(&sys, &small, &big), Some(Ordering::Less));
        assert_eq!(compare_edges(&sys, &other, &big), Some(Ordering::Less));
        assert_eq!(compare_edges(&sys, &big, &other), Some(Ordering::Greater));
    }

    #[test]
    fn same_source_edges_are_totally_ordered() {
        let sys = c3_complete();
        for w in crate::words::words_up_to(2, 4) {
            let edges = sys.edges_from(&w);
            for a in &edges {
                for b in &edges {
                    let ab = compare_edges(&sys, a, b).unwrap();
                    let ba = compare_edges(&sys, b, a).unwrap();
                    assert_eq!(ab, ba.reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for c in &edges {
                        let bc = compare_edges(&sys, b, c).unwrap();
                        if ab != Ordering::Greater && bc != Ordering::Greater {
                            assert_ne!(compare_edges(&sys, a, c).unwrap(), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn square_names_start_at_the_joint_source() {
        let sys = c3_complete();
        let al = sys.alphabet();
        let e = Edge::positive(Word::empty(), RuleId(2), Word::empty());
        let f = Edge::positive(Word::empty(), RuleId(0), Word::empty());
        let name = name_cell(&sys, &[], &TwoCell::square(e, f)).unwrap();
        assert_eq!(al.format_word(&name.vertex), "a a a A");
        assert_eq!(name.first.display(&sys), "(1, r2, +1, a A)");
        assert_eq!(name.second.display(&sys), "(a a, r0, +1, 1)");
        assert_eq!(compare_edges(&sys, &name.first, &name.second), Some(Ordering::Less));
    }

    #[test]
    fn resolution_loops_close_and_bound() {
        let sys = c3_complete();
        let loops = resolution_loops(&sys, 1000).unwrap();
        assert_eq!(loops.len(), sys.critical_pairs().len());
        let al = sys.alphabet();
        let u = al.parse_word("a").unwrap();
        let v = al.parse_word("A A").unwrap();
        for spec in &loops {
            assert!(spec.path.is_closed(&sys));
            let cell = TwoCell::loop_cell(u.clone(), spec.id, v.clone());
            let b = boundary2(&sys, &loops, &cell).unwrap();
            assert!(boundary1(&sys, &b).is_zero());
            let name = name_cell(&sys, &loops, &cell).unwrap();
            assert_eq!(name.vertex, u.concat(spec.path.start()).concat(&v));
            assert_eq!(compare_edges(&sys, &name.first, &name.second), Some(Ordering::Less));
        }
    }

    #[test]
    fn incomplete_system_loops_fail() {
        let sys = system(&["a", "A"], &[("a a a", "1"), ("a A", "1")]);
        let err = resolution_loops(&sys, 1000).unwrap_err();
        assert!(matches!(err, LoopBuildError::Unresolved(_)));
    }

    #[test]
    fn three_cell_boundary_squares_to_zero() {
        let sys = c3_complete();
        let loops = resolution_loops(&sys, 1000).unwrap();
        let al = sys.alphabet();
        let f = Edge::positive(al.parse_word("a").unwrap(), RuleId(1), Word::empty());
        for spec in &loops {
            let sigma = TwoCell::loop_cell(Word::empty(), spec.id, al.parse_word("A").unwrap());
            for t in [
                ThreeCell::EdgeFirst { f: f.clone(), cell: sigma.clone() },
                ThreeCell::CellFirst { cell: sigma.clone(), f: f.clone() },
            ] {
                let b3 = boundary3(&sys, &loops, &t).unwrap();
                let b2b3 = b3.flat_map(|cell| boundary2(&sys, &loops, cell).unwrap());
                assert!(b2b3.is_zero(), "nonzero double boundary for {t:?}");
            }
        }
    }

    #[test]
    fn three_cell_translation_matches_side_actions() {
        let sys = c3_complete();
        let al = sys.alphabet();
        let f = Edge::positive(Word::empty(), RuleId(0), Word::empty());
        let sigma = TwoCell::square(
            Edge::positive(Word::empty(), RuleId(2), Word::empty()),
            Edge::positive(Word::empty(), RuleId(3), Word::empty()),
        );
        let t = ThreeCell::EdgeFirst { f: f.clone(), cell: sigma.clone() };
        let u = al.parse_word("A").unwrap();
        let v = al.parse_word("a").unwrap();
        let moved = t.translate(&u, &v);
        match &moved {
            ThreeCell::EdgeFirst { f: mf, cell } => {
                assert_eq!(*mf, f.translate(&u, &Word::empty()));
                assert_eq!(*cell, sigma.translate(&Word::empty(), &v));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn maximal_face_of_a_three_cell_drops_the_least_edge() {
        let sys = c3_complete();
        let loops = resolution_loops(&sys, 1000).unwrap();
        let al = sys.alphabet();
        let f = Edge::positive(al.parse_word("a").unwrap(), RuleId(0), Word::empty());
        let sigma = TwoCell::loop_cell(Word::empty(), loops[0].id, Word::empty());
        for t in [
            ThreeCell::EdgeFirst { f: f.clone(), cell: sigma.clone() },
            ThreeCell::CellFirst { cell: sigma.clone(), f: f.clone() },
        ] {
            let tname = name_three_cell(&sys, &loops, &t).unwrap();
            let b3 = boundary3(&sys, &loops, &t).unwrap();
            let max = b3
                .support()
                .max_by(|a, b| compare_cells(&sys, &loops, a, b).unwrap())
                .unwrap();
            let mname = name_cell(&sys, &loops, max).unwrap();
            assert_eq!(mname.vertex, tname.vertex);
            assert_eq!(mname.first, tname.edges[1]);
            assert_eq!(mname.second, tname.edges[2]);
        }
    }

    #[test]
    fn retraction_replaces_extra_edges() {
        let base = system(&["a", "A"], &[("a a a", "1"), ("a A", "1"), ("A a", "1")]);
        let opts =
            crate::rewriting::CompletionOptions { interreduce: false, ..Default::default() };
        let done = base.knuth_bendix(&opts);
        assert_eq!(done.status, crate::rewriting::CompletionStatus::Complete);
        let extended = done.system;
        assert!(base.rules().iter().all(|r| extended.contains_rule(r.id)));
        let keep: Vec<RuleId> = base.rules().iter().map(|r| r.id).collect();
        let rho = Retraction::onto_base(&base, &extended, 8, 10_000).unwrap();
        for r in extended.rules() {
            let e = Edge::positive(Word::empty(), r.id, Word::empty());
            let img = rho.edge_chain(&e);
            if keep.contains(&r.id) {
                assert_eq!(img, FormalSum::singleton(e.clone(), 1));
            } else {
                for edge in img.support() {
                    assert!(keep.contains(&edge.rule));
                }
            }
            assert_eq!(
                boundary1(&extended, &img),
                boundary1(&extended, &FormalSum::singleton(e, 1)),
                "boundary not preserved for rule {}",
                r.id
            );
            let inv_img = rho.edge_chain(&Edge {
                sign: crate::graph::Sign::Minus,
                ..Edge::positive(Word::empty(), r.id, Word::empty())
            });
            assert_eq!(inv_img, img.negated());
        }
    }

    #[test]
    fn retract_edge_chain_checks_endpoints() {
        let sys = c3_complete();
        let al = sys.alphabet();
        let e = Edge::positive(Word::empty(), RuleId(2), Word::empty());
        let good = sys.normalize_path(&al.parse_word("a a").unwrap(), 10).unwrap();
        assert_eq!(retract_edge_chain(&sys, &e, &good).unwrap(), good.chain());
        let bad = Path::identity(al.parse_word("a").unwrap());
        assert_eq!(retract_edge_chain(&sys, &e, &bad), Err(EndpointMismatch));
    }
}
