//! Sequences of conjugated relators over a group presentation.
//!
//! A symbol `(^u r)^ε` stands for the conjugate `u r^ε u⁻¹` in the free
//! group. The module evaluates sequences of such symbols, applies the three
//! elementary operations (exchange across a neighbour, deletion and
//! insertion of an inverse pair), searches for bounded operation traces
//! between sequences, reduces sequences that admit a pairing of matching
//! symbols, and maps sequence words into the relation module.
//!
//! Equality questions behind these operations are word problems, so every
//! search here is bounded and returns evidence or an inconclusive answer,
//! never a negative decision.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::chains::FormalSum;
use crate::graph::Sign;
use crate::words::{Alphabet, Word};

/// Index of a relator in a presentation's relator list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelatorId(pub u32);

impl fmt::Display for RelatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

/// A conjugated relator `(^u r)^ε`; the conjugator is kept freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YSymbol {
    pub u: Word,
    pub r: RelatorId,
    pub sign: Sign,
}

fn red(al: &Alphabet, w: &Word) -> Word {
    al.free_reduce(w).expect("alphabet with inverse pairing")
}

fn inv(al: &Alphabet, w: &Word) -> Word {
    al.formal_inverse(w).expect("alphabet with inverse pairing")
}

impl YSymbol {
    /// Builds a symbol, freely reducing the conjugator.
    pub fn new(al: &Alphabet, u: &Word, r: RelatorId, sign: Sign) -> YSymbol {
        YSymbol { u: red(al, u), r, sign }
    }

    pub fn inverse(&self) -> YSymbol {
        YSymbol { u: self.u.clone(), r: self.r, sign: self.sign.flipped() }
    }

    /// True when the two symbols form a deletable inverse pair.
    pub fn cancels(&self, other: &YSymbol) -> bool {
        self.u == other.u && self.r == other.r && self.sign == other.sign.flipped()
    }

    pub fn display(&self, al: &Alphabet) -> String {
        format!(
            "(^{} {}){}",
            al.format_word(&self.u),
            self.r,
            if self.sign == Sign::Plus { "^+1" } else { "^-1" }
        )
    }
}

/// A finite sequence of symbols.
pub type YSequence = Vec<YSymbol>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OpError {
    #[error("index {at} out of range for a sequence of length {len}")]
    IndexOutOfRange { at: usize, len: usize },
    #[error("symbols at {at} and {next} are not an inverse pair", next = at + 1)]
    NotAnInversePair { at: usize },
    #[error("unknown relator {0}")]
    UnknownRelator(RelatorId),
}

fn relator<'a>(relators: &'a [Word], id: RelatorId) -> Result<&'a Word, OpError> {
    relators.get(id.0 as usize).ok_or(OpError::UnknownRelator(id))
}

/// The free-group value `u r^ε u⁻¹` of a single symbol.
pub fn theta_symbol(al: &Alphabet, relators: &[Word], a: &YSymbol) -> Result<Word, OpError> {
    let r = relator(relators, a.r)?;
    let body = if a.sign == Sign::Plus { r.clone() } else { inv(al, r) };
    Ok(red(al, &a.u.concat(&body).concat(&inv(al, &a.u))))
}

/// The freely reduced product of the symbol values of a sequence.
pub fn theta_eval(al: &Alphabet, relators: &[Word], s: &[YSymbol]) -> Result<Word, OpError> {
    let mut acc = Word::empty();
    for a in s {
        acc = acc.concat(&theta_symbol(al, relators, a)?);
    }
    Ok(red(al, &acc))
}

/// True when the sequence multiplies to the identity of the free group.
pub fn is_identity_sequence(
    al: &Alphabet,
    relators: &[Word],
    s: &[YSymbol],
) -> Result<bool, OpError> {
    Ok(theta_eval(al, relators, s)?.is_empty())
}

/// Which neighbour jumps over the other in an exchange at position `at`:
/// `Left` moves the right symbol leftwards, conjugating it by the value of
/// the left symbol; `Right` moves the left symbol rightwards, conjugating
/// it by the inverse value of the right symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shift {
    Left,
    Right,
}

/// An elementary operation on a sequence, replayable with `apply_op`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SequenceOp {
    Exchange { at: usize, dir: Shift },
    Delete { at: usize },
    Insert { at: usize, symbol: YSymbol },
}

/// Exchanges the adjacent pair at `(at, at+1)`. The sequence value in the
/// free group is unchanged.
pub fn peiffer_exchange(
    al: &Alphabet,
    relators: &[Word],
    s: &[YSymbol],
    at: usize,
    dir: Shift,
) -> Result<YSequence, OpError> {
    if at + 1 >= s.len() {
        return Err(OpError::IndexOutOfRange { at, len: s.len() });
    }
    let a = &s[at];
    let b = &s[at + 1];
    let mut out = s.to_vec();
    match dir {
        Shift::Left => {
            let ta = theta_symbol(al, relators, a)?;
            let moved = YSymbol::new(al, &ta.concat(&b.u), b.r, b.sign);
            out[at] = moved;
            out[at + 1] = a.clone();
        }
        Shift::Right => {
            let tb_inv = inv(al, &theta_symbol(al, relators, b)?);
            let moved = YSymbol::new(al, &tb_inv.concat(&a.u), a.r, a.sign);
            out[at] = b.clone();
            out[at + 1] = moved;
        }
    }
    Ok(out)
}

/// Deletes the inverse pair at `(at, at+1)`.
pub fn peiffer_delete(s: &[YSymbol], at: usize) -> Result<YSequence, OpError> {
    if at + 1 >= s.len() {
        return Err(OpError::IndexOutOfRange { at, len: s.len() });
    }
    if !s[at].cancels(&s[at + 1]) {
        return Err(OpError::NotAnInversePair { at });
    }
    let mut out = s.to_vec();
    out.drain(at..at + 2);
    Ok(out)
}

/// Inserts the pair `(symbol, symbol⁻¹)` at position `at`.
pub fn peiffer_insert(s: &[YSymbol], at: usize, symbol: &YSymbol) -> Result<YSequence, OpError> {
    if at > s.len() {
        return Err(OpError::IndexOutOfRange { at, len: s.len() });
    }
    let mut out = s.to_vec();
    out.insert(at, symbol.inverse());
    out.insert(at, symbol.clone());
    Ok(out)
}

/// Applies one operation to a sequence.
pub fn apply_op(
    al: &Alphabet,
    relators: &[Word],
    s: &[YSymbol],
    op: &SequenceOp,
) -> Result<YSequence, OpError> {
    match op {
        SequenceOp::Exchange { at, dir } => peiffer_exchange(al, relators, s, *at, *dir),
        SequenceOp::Delete { at } => peiffer_delete(s, *at),
        SequenceOp::Insert { at, symbol } => peiffer_insert(s, *at, symbol),
    }
}

/// The operation undoing `op` when `op` was applied to `before`.
fn invert_op(before: &[YSymbol], op: &SequenceOp) -> SequenceOp {
    match op {
        SequenceOp::Exchange { at, dir: Shift::Left } => {
            SequenceOp::Exchange { at: *at, dir: Shift::Right }
        }
        SequenceOp::Exchange { at, dir: Shift::Right } => {
            SequenceOp::Exchange { at: *at, dir: Shift::Left }
        }
        SequenceOp::Delete { at } => SequenceOp::Insert { at: *at, symbol: before[*at].clone() },
        SequenceOp::Insert { at, .. } => SequenceOp::Delete { at: *at },
    }
}

/// Outcome of the bounded equivalence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceOutcome {
    Equivalent { trace: Vec<SequenceOp> },
    NotFoundWithinBounds,
}

fn insertion_universe(seqs: &[&[YSymbol]]) -> Vec<YSymbol> {
    let mut set = BTreeSet::new();
    for s in seqs {
        for a in *s {
            set.insert(a.clone());
            set.insert(a.inverse());
        }
    }
    set.into_iter().collect()
}

fn neighbours(
    al: &Alphabet,
    relators: &[Word],
    s: &[YSymbol],
    universe: &[YSymbol],
    max_len: usize,
) -> Vec<(SequenceOp, YSequence)> {
    let mut out = Vec::new();
    for at in 0..s.len().saturating_sub(1) {
        for dir in [Shift::Left, Shift::Right] {
            let op = SequenceOp::Exchange { at, dir };
            if let Ok(next) = apply_op(al, relators, s, &op) {
                out.push((op, next));
            }
        }
        if s[at].cancels(&s[at + 1]) {
            let op = SequenceOp::Delete { at };
            out.push((op.clone(), peiffer_delete(s, at).expect("checked pair")));
        }
    }
    if s.len() + 2 <= max_len {
        for at in 0..=s.len() {
            for symbol in universe {
                let op = SequenceOp::Insert { at, symbol: symbol.clone() };
                out.push((op.clone(), peiffer_insert(s, at, symbol).expect("checked index")));
            }
        }
    }
    out
}

type SearchLog = HashMap<YSequence, Option<(YSequence, SequenceOp)>>;

fn trace_from<'a>(log: &'a SearchLog, mut state: &'a YSequence) -> Vec<(YSequence, SequenceOp)> {
    let mut steps = Vec::new();
    while let Some(Some((parent, op))) = log.get(state) {
        steps.push((parent.clone(), op.clone()));
        state = parent;
    }
    steps.reverse();
    steps
}

/// Bidirectional bounded search for an operation trace from `s` to `t`.
/// Inserted pairs draw their symbols from `s` and `t`. `max_steps` caps the
/// number of explored sequences and `max_len` the sequence length.
pub fn equivalent_bounded(
    al: &Alphabet,
    relators: &[Word],
    s: &[YSymbol],
    t: &[YSymbol],
    max_steps: usize,
    max_len: usize,
) -> EquivalenceOutcome {
    let universe = insertion_universe(&[s, t]);
    let mut from_s: SearchLog = HashMap::from([(s.to_vec(), None)]);
    let mut from_t: SearchLog = HashMap::from([(t.to_vec(), None)]);
    let mut queue_s = VecDeque::from([s.to_vec()]);
    let mut queue_t = VecDeque::from([t.to_vec()]);
    let mut explored = 0usize;
    let mut meet: Option<YSequence> = None;

    if s == t {
        return EquivalenceOutcome::Equivalent { trace: Vec::new() };
    }
    'search: while !queue_s.is_empty() || !queue_t.is_empty() {
        let expand_s = match (queue_s.is_empty(), queue_t.is_empty()) {
            (false, true) => true,
            (true, false) => false,
            _ => queue_s.len() <= queue_t.len(),
        };
        let (queue, own, other) = if expand_s {
            (&mut queue_s, &mut from_s, &from_t)
        } else {
            (&mut queue_t, &mut from_t, &from_s)
        };
        let Some(state) = queue.pop_front() else { continue };
        explored += 1;
        if explored > max_steps {
            return EquivalenceOutcome::NotFoundWithinBounds;
        }
        for (op, next) in neighbours(al, relators, &state, &universe, max_len) {
            if own.contains_key(&next) {
                continue;
            }
            own.insert(next.clone(), Some((state.clone(), op)));
            if other.contains_key(&next) {
                meet = Some(next);
                break 'search;
            }
            queue.push_back(next);
        }
    }
    let Some(meet) = meet else { return EquivalenceOutcome::NotFoundWithinBounds };
    let mut trace: Vec<SequenceOp> =
        trace_from(&from_s, &meet).into_iter().map(|(_, op)| op).collect();
    for (parent, op) in trace_from(&from_t, &meet).into_iter().rev() {
        trace.push(invert_op(&parent, &op));
    }
    EquivalenceOutcome::Equivalent { trace }
}

/// Answer of the pairing oracle on two conjugators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Congruence {
    Equal,
    Distinct,
    Unknown,
}

/// Outcome of `reduce_primary`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceOutcome {
    Reduced { trace: Vec<SequenceOp> },
    /// No pairing of the symbols exists with matching relators, opposite
    /// signs and congruent conjugators.
    NoPairing,
    /// Either the oracle could not settle a needed pairing or the bounded
    /// search was exhausted.
    Unknown,
}

fn kuhn_match(adj: &[Vec<bool>], n_right: usize) -> usize {
    let mut match_right = vec![usize::MAX; n_right];
    let mut size = 0;
    for left in 0..adj.len() {
        let mut seen = vec![false; n_right];
        if augment(adj, left, &mut seen, &mut match_right) {
            size += 1;
        }
    }
    size
}

fn augment(adj: &[Vec<bool>], left: usize, seen: &mut [bool], match_right: &mut [usize]) -> bool {
    for right in 0..seen.len() {
        if !adj[left][right] || seen[right] {
            continue;
        }
        seen[right] = true;
        if match_right[right] == usize::MAX || augment(adj, match_right[right], seen, match_right) {
            match_right[right] = left;
            return true;
        }
    }
    false
}

/// Reduces a sequence whose symbols pair up: each pair shares a relator,
/// has opposite signs, and conjugators equal in the presented group as
/// decided by `congruent`. When a pairing exists, a bounded exchange and
/// deletion search produces a replayable trace to the empty sequence.
pub fn reduce_primary(
    al: &Alphabet,
    relators: &[Word],
    s: &[YSymbol],
    mut congruent: impl FnMut(&Word, &Word) -> Congruence,
    max_steps: usize,
) -> ReduceOutcome {
    if s.is_empty() {
        return ReduceOutcome::Reduced { trace: Vec::new() };
    }
    let mut by_relator: BTreeMap<RelatorId, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (i, a) in s.iter().enumerate() {
        let e = by_relator.entry(a.r).or_default();
        if a.sign == Sign::Plus {
            e.0.push(i);
        } else {
            e.1.push(i);
        }
    }
    let mut all_settled = true;
    for (pos, neg) in by_relator.values() {
        if pos.len() != neg.len() {
            return ReduceOutcome::NoPairing;
        }
        let mut sure = vec![vec![false; neg.len()]; pos.len()];
        let mut possible = vec![vec![false; neg.len()]; pos.len()];
        for (a, &i) in pos.iter().enumerate() {
            for (b, &j) in neg.iter().enumerate() {
                let c = if s[i].u == s[j].u { Congruence::Equal } else { congruent(&s[i].u, &s[j].u) };
                sure[a][b] = c == Congruence::Equal;
                possible[a][b] = c != Congruence::Distinct;
            }
        }
        if kuhn_match(&sure, neg.len()) < pos.len() {
            if kuhn_match(&possible, neg.len()) < pos.len() {
                return ReduceOutcome::NoPairing;
            }
            all_settled = false;
        }
    }
    if !all_settled {
        return ReduceOutcome::Unknown;
    }
    match equivalent_bounded(al, relators, s, &[], max_steps, s.len() + 2) {
        EquivalenceOutcome::Equivalent { trace } => ReduceOutcome::Reduced { trace },
        EquivalenceOutcome::NotFoundWithinBounds => ReduceOutcome::Unknown,
    }
}

/// A word over the symbols and their formal group inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsilonWord {
    pub letters: Vec<(YSymbol, bool)>,
}

impl UpsilonWord {
    /// The word spelling a sequence with no formal inversions.
    pub fn from_sequence(s: &[YSymbol]) -> UpsilonWord {
        UpsilonWord { letters: s.iter().map(|a| (a.clone(), false)).collect() }
    }

    /// The underlying sequence if no letter is formally inverted.
    pub fn sequence(&self) -> Option<YSequence> {
        if self.letters.iter().any(|(_, inverted)| *inverted) {
            return None;
        }
        Some(self.letters.iter().map(|(a, _)| a.clone()).collect())
    }
}

/// An element of the free module on the relators over the group ring:
/// for each relator, an integer combination of group elements given by
/// their normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationModuleElement {
    terms: BTreeMap<RelatorId, FormalSum<Word>>,
}

impl RelationModuleElement {
    pub fn zero() -> RelationModuleElement {
        RelationModuleElement::default()
    }

    pub fn add_term(&mut self, r: RelatorId, g: Word, c: impl Into<BigInt>) {
        let sum = self.terms.entry(r).or_default();
        sum.add_term(g, c);
        if sum.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn coeff(&self, r: RelatorId, g: &Word) -> BigInt {
        self.terms.get(&r).map_or_else(|| BigInt::from(0), |s| s.coeff(g))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RelatorId, &FormalSum<Word>)> {
        self.terms.iter()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no normal form available for {0}")]
pub struct UnknownNormalForm(pub Word);

/// Maps a word over the symbols into the relation module: each letter
/// `(^u r)^ε` contributes the group element of `u` at the relator `r`,
/// regardless of `ε`; formally inverted letters contribute negatively.
pub fn relation_module_image(
    w: &UpsilonWord,
    mut normal_form: impl FnMut(&Word) -> Option<Word>,
) -> Result<RelationModuleElement, UnknownNormalForm> {
    let mut out = RelationModuleElement::zero();
    for (a, inverted) in &w.letters {
        let g = normal_form(&a.u).ok_or_else(|| UnknownNormalForm(a.u.clone()))?;
        out.add_term(a.r, g, if *inverted { -1 } else { 1 });
    }
    Ok(out)
}

/// True when the sequence is spelled as consecutive inverse pairs.
pub fn is_generator_product(s: &[YSymbol]) -> bool {
    s.len() % 2 == 0 && s.chunks(2).all(|c| c[0].cancels(&c[1]))
}

/// Outcome of the bounded search for insertion-pair normality evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InsertionEvidence {
    /// A trace carrying the word to a product of inverse pairs.
    Evidence { trace: Vec<SequenceOp> },
    Unknown,
}

/// Searches for a bounded trace from `w` to a product of inverse pairs.
/// Success shows the word lies in the submonoid coset of such products;
/// exhaustion proves nothing.
pub fn insertion_normal_probe(
    al: &Alphabet,
    relators: &[Word],
    w: &UpsilonWord,
    max_steps: usize,
) -> InsertionEvidence {
    let Some(seq) = w.sequence() else { return InsertionEvidence::Unknown };
    match is_identity_sequence(al, relators, &seq) {
        Ok(true) => {}
        _ => return InsertionEvidence::Unknown,
    }
    if is_generator_product(&seq) {
        return InsertionEvidence::Evidence { trace: Vec::new() };
    }
    let universe = insertion_universe(&[&seq]);
    let max_len = seq.len() + 2;
    let mut log: SearchLog = HashMap::from([(seq.clone(), None)]);
    let mut queue = VecDeque::from([seq]);
    let mut explored = 0usize;
    while let Some(state) = queue.pop_front() {
        explored += 1;
        if explored > max_steps {
            return InsertionEvidence::Unknown;
        }
        for (op, next) in neighbours(al, relators, &state, &universe, max_len) {
            if log.contains_key(&next) {
                continue;
            }
            log.insert(next.clone(), Some((state.clone(), op)));
            if is_generator_product(&next) {
                let trace = trace_from(&log, &next).into_iter().map(|(_, op)| op).collect();
                return InsertionEvidence::Evidence { trace };
            }
            queue.push_back(next.clone());
        }
    }
    InsertionEvidence::Unknown
}

/// Reinterprets a sequence over a sublist of the relators inside a larger
/// relator list; `id_map[i]` is the position of sub relator `i`.
pub fn include_subpresentation(
    s: &[YSymbol],
    id_map: &[u32],
) -> Result<YSequence, OpError> {
    s.iter()
        .map(|a| {
            let mapped = id_map
                .get(a.r.0 as usize)
                .ok_or(OpError::UnknownRelator(a.r))?;
            Ok(YSymbol { u: a.u.clone(), r: RelatorId(*mapped), sign: a.sign })
        })
        .collect()
}
