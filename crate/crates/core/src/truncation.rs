//! Finite length-truncated slices of the cell complex of a rewriting system.
//!
//! Given a length bound `L`, the truncation keeps every word of length at
//! most `L` as a 0-cell, every positive edge with both endpoints inside as a
//! 1-cell, every square and translated catalog loop whose entire boundary is
//! inside as a 2-cell, and optionally every 3-cell all of whose boundary
//! 2-cells are inside. Cell enumeration is deterministic: words in shortlex
//! order, edges per word in step order, squares per word by redex pairs,
//! loop cells by catalog id and contexts, 3-cells by orientation.

use std::collections::HashMap;

use thiserror::Error;

use crate::cells::{boundary2, boundary3, LoopSpec, ThreeCell, TwoCell};
use crate::graph::Edge;
use crate::rewriting::RewritingSystem;
use crate::words::{words_up_to, Word};

/// Default ceiling on the total number of cells across all dimensions.
pub const DEFAULT_CELL_CAP: usize = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("truncation needs more than {cap} cells")]
    CellCapExceeded { cap: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosureError {
    #[error("edge {0} has an endpoint outside the 0-cells")]
    EdgeEndpointMissing(usize),
    #[error("2-cell {0} has a boundary edge outside the 1-cells")]
    TwoCellFaceMissing(usize),
    #[error("3-cell {0} has a boundary 2-cell outside the 2-cells")]
    ThreeCellFaceMissing(usize),
}

/// Cell counts of a truncated complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellCensus {
    pub n0: usize,
    pub n1: usize,
    pub n2_square: usize,
    pub n2_loop: usize,
    pub n3: usize,
}

/// A finite slice of the complex with indexed cell bases.
#[derive(Debug, Clone)]
pub struct TruncatedComplex {
    sys: RewritingSystem,
    loops: Vec<LoopSpec>,
    max_len: usize,
    words: Vec<Word>,
    word_index: HashMap<Word, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    two_cells: Vec<TwoCell>,
    two_index: HashMap<TwoCell, usize>,
    n_squares: usize,
    three_cells: Vec<ThreeCell>,
}

impl TruncatedComplex {
    /// Builds the truncation at length `max_len`, with loop 2-cells from the
    /// catalog and, when requested, the 3-cells over them.
    pub fn build(
        sys: RewritingSystem,
        max_len: usize,
        loops: Vec<LoopSpec>,
        with_three_cells: bool,
        max_cells: usize,
    ) -> Result<TruncatedComplex, BuildError> {
        let n_letters = sys.alphabet().len() as u128;
        let mut expected: u128 = 0;
        let mut pow: u128 = 1;
        for _ in 0..=max_len {
            expected += pow;
            if expected > max_cells as u128 {
                return Err(BuildError::CellCapExceeded { cap: max_cells });
            }
            pow = pow.saturating_mul(n_letters);
        }

        let words = words_up_to(sys.alphabet().len(), max_len);
        let word_index: HashMap<Word, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut total = words.len();
        let over = |total: usize| total > max_cells;

        let mut edges = Vec::new();
        for w in &words {
            for e in sys.edges_from(w) {
                if e.end(&sys).len() <= max_len {
                    edges.push(e);
                }
            }
        }
        total += edges.len();
        if over(total) {
            return Err(BuildError::CellCapExceeded { cap: max_cells });
        }
        let edge_index: HashMap<Edge, usize> =
            edges.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();

        let mut two_cells = Vec::new();
        for w in &words {
            let steps = sys.single_steps(w);
            for a in &steps {
                let end_a = a.position + sys.rule(a.rule).lhs.len();
                for b in &steps {
                    if std::ptr::eq(a, b) || end_a > b.position {
                        continue;
                    }
                    let len_b = sys.rule(b.rule).lhs.len();
                    let cell = TwoCell::square(
                        Edge::positive(w.slice(0, a.position), a.rule, Word::empty()),
                        Edge::positive(
                            w.slice(end_a, b.position),
                            b.rule,
                            w.slice(b.position + len_b, w.len()),
                        ),
                    );
                    let fits = boundary2(&sys, &loops, &cell)
                        .expect("square boundary")
                        .support()
                        .all(|e| edge_index.contains_key(e));
                    if fits {
                        total += 1;
                        if over(total) {
                            return Err(BuildError::CellCapExceeded { cap: max_cells });
                        }
                        two_cells.push(cell);
                    }
                }
            }
        }
        let n_squares = two_cells.len();

        for spec in &loops {
            let span = spec
                .path
                .vertices(&sys)
                .iter()
                .map(Word::len)
                .max()
                .expect("loop has vertices");
            if span > max_len {
                continue;
            }
            let context_budget = max_len - span;
            let us = &words[..words.partition_point(|w| w.len() <= context_budget)];
            for u in us {
                let vs = &words[..words.partition_point(|w| w.len() <= context_budget - u.len())];
                for v in vs {
                    total += 1;
                    if over(total) {
                        return Err(BuildError::CellCapExceeded { cap: max_cells });
                    }
                    two_cells.push(TwoCell::loop_cell(u.clone(), spec.id, v.clone()));
                }
            }
        }
        let two_index: HashMap<TwoCell, usize> =
            two_cells.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();

        let mut three_cells = Vec::new();
        if with_three_cells {
            let loop_cells = &two_cells[n_squares..];
            let push = |cell: ThreeCell, three_cells: &mut Vec<ThreeCell>, total: &mut usize| {
                let fits = boundary3(&sys, &loops, &cell)
                    .expect("3-cell boundary")
                    .support()
                    .all(|c| two_index.contains_key(&c.canonical()));
                if fits {
                    *total += 1;
                    three_cells.push(cell);
                }
                *total <= max_cells
            };
            'outer: for orientation in 0..2 {
                for f in &edges {
                    for sigma in loop_cells {
                        let cell = if orientation == 0 {
                            ThreeCell::EdgeFirst { f: f.clone(), cell: sigma.clone() }
                        } else {
                            ThreeCell::CellFirst { cell: sigma.clone(), f: f.clone() }
                        };
                        if !push(cell, &mut three_cells, &mut total) {
                            break 'outer;
                        }
                    }
                }
            }
            if over(total) {
                return Err(BuildError::CellCapExceeded { cap: max_cells });
            }
        }

        Ok(TruncatedComplex {
            sys,
            loops,
            max_len,
            words,
            word_index,
            edges,
            edge_index,
            two_cells,
            two_index,
            n_squares,
            three_cells,
        })
    }

    pub fn system(&self) -> &RewritingSystem {
        &self.sys
    }

    pub fn loops(&self) -> &[LoopSpec] {
        &self.loops
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// All 2-cells, squares first, then loop cells.
    pub fn two_cells(&self) -> &[TwoCell] {
        &self.two_cells
    }

    pub fn squares(&self) -> &[TwoCell] {
        &self.two_cells[..self.n_squares]
    }

    pub fn loop_cells(&self) -> &[TwoCell] {
        &self.two_cells[self.n_squares..]
    }

    pub fn three_cells(&self) -> &[ThreeCell] {
        &self.three_cells
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edge_index.get(e).copied()
    }

    /// The index of a 2-cell, after canonicalization.
    pub fn two_cell_index(&self, c: &TwoCell) -> Option<usize> {
        self.two_index.get(&c.canonical()).copied()
    }

    pub fn census(&self) -> CellCensus {
        CellCensus {
            n0: self.words.len(),
            n1: self.edges.len(),
            n2_square: self.n_squares,
            n2_loop: self.two_cells.len() - self.n_squares,
            n3: self.three_cells.len(),
        }
    }

    /// Verifies that every face of every cell is itself a cell.
    pub fn audit_closure(&self) -> Result<(), ClosureError> {
        for (i, e) in self.edges.iter().enumerate() {
            if self.word_index(&e.start(&self.sys)).is_none()
                || self.word_index(&e.end(&self.sys)).is_none()
            {
                return Err(ClosureError::EdgeEndpointMissing(i));
            }
        }
        for (i, c) in self.two_cells.iter().enumerate() {
            let b = boundary2(&self.sys, &self.loops, c).expect("2-cell boundary");
            if b.support().any(|e| self.edge_index(e).is_none()) {
                return Err(ClosureError::TwoCellFaceMissing(i));
            }
        }
        for (i, t) in self.three_cells.iter().enumerate() {
            let b = boundary3(&self.sys, &self.loops, t).expect("3-cell boundary");
            if b.support().any(|c| self.two_cell_index(c).is_none()) {
                return Err(ClosureError::ThreeCellFaceMissing(i));
            }
        }
        Ok(())
    }
}
