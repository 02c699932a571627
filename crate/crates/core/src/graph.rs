//! The derivation graph of a rewriting system.
//!
//! Vertices are free-monoid words. For every rule `r = (lhs, rhs)` and every
//! pair of context words `w, w′` there is a positive edge `(w, r, +1, w′)`
//! from `w·lhs·w′` to `w·rhs·w′`, together with its formal inverse
//! `(w, r, −1, w′)`. Words act on edges on both sides by extending the
//! contexts, and paths are composable edge sequences. The chain of a path
//! folds inverse edges into negative coefficients on positive edges, which
//! makes `∂₁(chain) = start − end` hold for every path.

use std::fmt;

use thiserror::Error;

use crate::chains::FormalSum;
use crate::rewriting::{RewritingSystem, RuleId};
use crate::words::Word;

/// Orientation of an edge: `Plus` applies the rule left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A single rule application in context: `(left, rule, sign, right)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub left: Word,
    pub rule: RuleId,
    pub sign: Sign,
    pub right: Word,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("edge {0} starts at a word different from where edge {1} ends")]
    NotComposable(usize, usize),
    #[error("paths are not composable at the junction")]
    JunctionMismatch,
}

impl Edge {
    /// A positive edge.
    pub fn positive(left: Word, rule: RuleId, right: Word) -> Edge {
        Edge { left, rule, sign: Sign::Plus, right }
    }

    /// The source word `ι e`.
    pub fn start(&self, sys: &RewritingSystem) -> Word {
        let r = sys.rule(self.rule);
        let mid = match self.sign {
            Sign::Plus => &r.lhs,
            Sign::Minus => &r.rhs,
        };
        self.left.concat(mid).concat(&self.right)
    }

    /// The target word `τ e`.
    pub fn end(&self, sys: &RewritingSystem) -> Word {
        self.inverse().start(sys)
    }

    /// The formal inverse: same context and rule, flipped sign.
    pub fn inverse(&self) -> Edge {
        Edge { left: self.left.clone(), rule: self.rule, sign: self.sign.flipped(), right: self.right.clone() }
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Plus
    }

    /// The two-sided action `z.e.z′ = (z·left, rule, sign, right·z′)`.
    pub fn translate(&self, z: &Word, z2: &Word) -> Edge {
        Edge {
            left: z.concat(&self.left),
            rule: self.rule,
            sign: self.sign,
            right: self.right.concat(z2),
        }
    }

    /// The positive edge under this one, with the sign as a coefficient.
    pub fn positive_part(&self) -> (Edge, i64) {
        let mut e = self.clone();
        let s = e.sign.as_int();
        e.sign = Sign::Plus;
        (e, s)
    }

    /// Renders the edge with alphabet tokens, for reports and diagnostics.
    pub fn display(&self, sys: &RewritingSystem) -> String {
        let al = sys.alphabet();
        format!(
            "({}, r{}, {}, {})",
            al.format_word(&self.left),
            self.rule.0,
            if self.sign == Sign::Plus { "+1" } else { "-1" },
            al.format_word(&self.right)
        )
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, r{}, {}, {})",
            self.left,
            self.rule.0,
            if self.sign == Sign::Plus { "+1" } else { "-1" },
            self.right
        )
    }
}

/// A composable sequence of edges; an empty path sits at its base word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    base: Word,
    edges: Vec<Edge>,
}

impl Path {
    /// The empty path at `w`.
    pub fn identity(w: Word) -> Path {
        Path { base: w, edges: Vec::new() }
    }

    /// Builds a path from edges, verifying every junction.
    pub fn from_edges(sys: &RewritingSystem, edges: Vec<Edge>) -> Result<Path, PathError> {
        match edges.first() {
            None => Ok(Path { base: Word::empty(), edges }),
            Some(first) => {
                let base = first.start(sys);
                for i in 0..edges.len() - 1 {
                    if edges[i].end(sys) != edges[i + 1].start(sys) {
                        return Err(PathError::NotComposable(i + 1, i));
                    }
                }
                Ok(Path { base, edges })
            }
        }
    }

    /// A single-edge path.
    pub fn single(sys: &RewritingSystem, e: Edge) -> Path {
        let base = e.start(sys);
        Path { base, edges: vec![e] }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The source word `ι`.
    pub fn start(&self) -> &Word {
        &self.base
    }

    /// The target word `τ`.
    pub fn end(&self, sys: &RewritingSystem) -> Word {
        match self.edges.last() {
            None => self.base.clone(),
            Some(e) => e.end(sys),
        }
    }

    pub fn is_closed(&self, sys: &RewritingSystem) -> bool {
        self.end(sys) == self.base
    }

    pub fn is_positive(&self) -> bool {
        self.edges.iter().all(Edge::is_positive)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, sys: &RewritingSystem, other: &Path) -> Result<Path, PathError> {
        if self.end(sys) != *other.start() {
            return Err(PathError::JunctionMismatch);
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().cloned());
        Ok(Path { base: self.base.clone(), edges })
    }

    /// The reverse path with every edge inverted.
    pub fn inverse(&self, sys: &RewritingSystem) -> Path {
        let base = self.end(sys);
        let edges = self.edges.iter().rev().map(Edge::inverse).collect();
        Path { base, edges }
    }

    /// The two-sided action `z.p.z′` applied edgewise.
    pub fn translate(&self, z: &Word, z2: &Word) -> Path {
        Path {
            base: z.concat(&self.base).concat(z2),
            edges: self.edges.iter().map(|e| e.translate(z, z2)).collect(),
        }
    }

    /// The 1-chain of the path: inverse edges contribute −1 on their
    /// positive counterparts, and repeated edges accumulate.
    pub fn chain(&self) -> FormalSum<Edge> {
        FormalSum::from_terms(self.edges.iter().map(|e| e.positive_part()))
    }

    /// The words visited, from start to end inclusive (`len() + 1` entries).
    pub fn vertices(&self, sys: &RewritingSystem) -> Vec<Word> {
        let mut out = vec![self.base.clone()];
        for e in &self.edges {
            out.push(e.end(sys));
        }
        out
    }

    /// Renders the path with alphabet tokens.
    pub fn display(&self, sys: &RewritingSystem) -> String {
        if self.edges.is_empty() {
            return format!("id({})", sys.alphabet().format_word(&self.base));
        }
        self.edges.iter().map(|e| e.display(sys)).collect::<Vec<_>>().join(" ∘ ")
    }
}

/// The boundary of a 1-chain: each positive edge `e` maps to `ιe − τe`.
pub fn boundary1(sys: &RewritingSystem, chain: &FormalSum<Edge>) -> FormalSum<Word> {
    let mut out = FormalSum::zero();
    for (e, c) in chain.iter() {
        debug_assert!(e.is_positive());
        out.add_term(e.start(sys), c.clone());
        out.add_term(e.end(sys), -c);
    }
    out
}
