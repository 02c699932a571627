//! String rewriting systems over a fixed alphabet.
//!
//! A system is a finite list of rules `lhs → rhs` with distinct sides. It
//! rewrites words by replacing factors, decides bounded Thue equivalence by
//! bidirectional search, enumerates critical pairs (inclusions and overlaps
//! of left-hand sides), resolves them by descendant search, checks local
//! confluence on all words up to a length, and runs round-based Knuth-Bendix
//! completion oriented by the length-lexicographic order.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, Path};
use crate::words::{Alphabet, Word};

/// Stable identifier of a rule; ids survive completion and sub-system extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleId(pub u32);

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

/// A rewriting rule `lhs → rhs` with `lhs ≠ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub id: RuleId,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("rule {0} has equal sides")]
    EqualSides(RuleId),
    #[error("rule {0} repeats the sides of an earlier rule")]
    DuplicateRule(RuleId),
    #[error("rule id {0} is used twice")]
    DuplicateId(RuleId),
    #[error("rule {0} uses a letter outside the alphabet")]
    LetterOutOfRange(RuleId),
}

/// A single rule application at a position, with the rewritten word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SingleStep {
    pub position: usize,
    pub rule: RuleId,
    pub result: Word,
}

/// Which redex `normalize_with` picks at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("rewriting exceeded {limit} steps")]
pub struct StepLimitExceeded {
    pub limit: usize,
    pub reached: Word,
}

/// Outcome of the bounded Thue-equivalence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThueOutcome {
    Equivalent,
    NotFoundWithinBounds,
}

/// How the left-hand sides of a critical pair meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairKind {
    Inclusion,
    Overlap,
}

/// Two positive edges with the same source word and distinct redexes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CriticalPair {
    pub word: Word,
    pub kind: PairKind,
    pub first: Edge,
    pub second: Edge,
}

/// Outcome of resolving a critical pair by descendant search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    /// Positive paths from the two targets to a common word.
    Resolvable { first: Path, second: Path },
    /// The descendant sets are disjoint; one irreducible witness from each.
    Unresolved { first_nf: Word, second_nf: Word },
    /// The search hit its state cap before deciding.
    Unknown,
}

/// Outcome of the exhaustive local-confluence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalConfluence {
    Confluent,
    Counterexample { word: Word, first_nf: Word, second_nf: Word },
    Inconclusive { word: Word },
}

/// Caps for Knuth-Bendix completion.
#[derive(Debug, Clone)]
pub struct CompletionOptions {
    pub max_rules: usize,
    pub max_lhs_len: usize,
    pub max_states: usize,
    pub interreduce: bool,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions { max_rules: 200, max_lhs_len: 12, max_states: 10_000, interreduce: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    RuleLimit,
    LengthLimit,
    StateLimit,
}

/// Result of completion: the final system plus how the run ended.
#[derive(Debug, Clone)]
pub struct Completion {
    pub system: RewritingSystem,
    pub status: CompletionStatus,
    pub rounds: usize,
    pub added: Vec<Rule>,
}

/// A finite string rewriting system; rules are kept sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewritingSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    index_of: HashMap<u32, usize>,
}

impl RewritingSystem {
    /// Builds a system from `(lhs, rhs)` pairs, assigning ids `0, 1, …`.
    pub fn new(alphabet: Alphabet, pairs: &[(Word, Word)]) -> Result<RewritingSystem, SystemError> {
        let rules = pairs
            .iter()
            .enumerate()
            .map(|(i, (l, r))| Rule { id: RuleId(i as u32), lhs: l.clone(), rhs: r.clone() })
            .collect();
        Self::from_rules(alphabet, rules)
    }

    /// Builds a system from rules with explicit ids.
    pub fn from_rules(alphabet: Alphabet, mut rules: Vec<Rule>) -> Result<RewritingSystem, SystemError> {
        rules.sort_by_key(|r| r.id);
        let mut index_of = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            if r.lhs == r.rhs {
                return Err(SystemError::EqualSides(r.id));
            }
            if !alphabet.contains_word(&r.lhs) || !alphabet.contains_word(&r.rhs) {
                return Err(SystemError::LetterOutOfRange(r.id));
            }
            if index_of.insert(r.id.0, i).is_some() {
                return Err(SystemError::DuplicateId(r.id));
            }
            if rules[..i].iter().any(|o| o.lhs == r.lhs && o.rhs == r.rhs) {
                return Err(SystemError::DuplicateRule(r.id));
            }
        }
        Ok(RewritingSystem { alphabet, rules, index_of })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn n_rules(&self) -> usize {
        self.rules.len()
    }

    /// Looks up a rule by id; panics if the id is not in the system.
    pub fn rule(&self, id: RuleId) -> &Rule {
        &self.rules[self.index_of[&id.0]]
    }

    pub fn contains_rule(&self, id: RuleId) -> bool {
        self.index_of.contains_key(&id.0)
    }

    /// True when every rule has `lhs` greater than `rhs` in shortlex order.
    pub fn is_llex_oriented(&self) -> bool {
        self.rules.iter().all(|r| r.lhs > r.rhs)
    }

    /// All single rewriting steps on `w`, ordered by position then rule id.
    pub fn single_steps(&self, w: &Word) -> Vec<SingleStep> {
        let mut steps = Vec::new();
        for r in &self.rules {
            for pos in w.occurrences(&r.lhs) {
                steps.push(SingleStep {
                    position: pos,
                    rule: r.id,
                    result: w.splice(pos, r.lhs.len(), &r.rhs),
                });
            }
        }
        steps.sort();
        steps
    }

    /// The positive edge realizing a step on `w`.
    pub fn step_edge(&self, w: &Word, step: &SingleStep) -> Edge {
        let lhs_len = self.rule(step.rule).lhs.len();
        Edge::positive(
            w.slice(0, step.position),
            step.rule,
            w.slice(step.position + lhs_len, w.len()),
        )
    }

    /// All positive edges out of `w`, in step order.
    pub fn edges_from(&self, w: &Word) -> Vec<Edge> {
        self.single_steps(w).iter().map(|s| self.step_edge(w, s)).collect()
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| w.occurrences(&r.lhs).is_empty())
    }

    fn pick_step(&self, w: &Word, strategy: Strategy) -> Option<SingleStep> {
        let steps = self.single_steps(w);
        match strategy {
            Strategy::Leftmost => steps.into_iter().next(),
            Strategy::Rightmost => {
                let last_pos = steps.last()?.position;
                steps.into_iter().find(|s| s.position == last_pos)
            }
        }
    }

    /// Rewrites `w` to an irreducible word with the leftmost strategy.
    pub fn normalize(&self, w: &Word, step_limit: usize) -> Result<Word, StepLimitExceeded> {
        self.normalize_with(w, Strategy::Leftmost, step_limit)
    }

    /// Rewrites `w` to an irreducible word with the given strategy.
    pub fn normalize_with(
        &self,
        w: &Word,
        strategy: Strategy,
        step_limit: usize,
    ) -> Result<Word, StepLimitExceeded> {
        let mut cur = w.clone();
        for _ in 0..=step_limit {
            match self.pick_step(&cur, strategy) {
                None => return Ok(cur),
                Some(s) => cur = s.result,
            }
        }
        Err(StepLimitExceeded { limit: step_limit, reached: cur })
    }

    /// The leftmost rewriting path from `w` to its normal form.
    pub fn normalize_path(&self, w: &Word, step_limit: usize) -> Result<Path, StepLimitExceeded> {
        let mut cur = w.clone();
        let mut edges = Vec::new();
        for _ in 0..=step_limit {
            match self.pick_step(&cur, Strategy::Leftmost) {
                None => {
                    return Ok(Path::from_edges(self, edges).expect("consecutive steps compose"));
                }
                Some(s) => {
                    edges.push(self.step_edge(&cur, &s));
                    cur = s.result;
                }
            }
        }
        Err(StepLimitExceeded { limit: step_limit, reached: cur })
    }

    fn thue_neighbors(&self, w: &Word, max_len: usize) -> Vec<Word> {
        let mut out: Vec<Word> = self.single_steps(w).into_iter().map(|s| s.result).collect();
        for r in &self.rules {
            for pos in w.occurrences(&r.rhs) {
                out.push(w.splice(pos, r.rhs.len(), &r.lhs));
            }
        }
        out.retain(|u| u.len() <= max_len);
        out
    }

    /// Searches for a path from `u` to `v` in the derivation graph, using
    /// rules in both directions, restricted to words of length at most
    /// `max_len` and at most `max_visited` visited words.
    pub fn connect(&self, u: &Word, v: &Word, max_len: usize, max_visited: usize) -> Option<Path> {
        if u == v {
            return Some(Path::identity(u.clone()));
        }
        let mut parent: HashMap<Word, (Word, Edge)> = HashMap::new();
        let mut queue = VecDeque::from([u.clone()]);
        let mut visited: HashSet<Word> = HashSet::from([u.clone()]);
        while let Some(cur) = queue.pop_front() {
            let mut out: Vec<(Edge, Word)> = self
                .single_steps(&cur)
                .into_iter()
                .map(|s| (self.step_edge(&cur, &s), s.result))
                .collect();
            for r in &self.rules {
                for pos in cur.occurrences(&r.rhs) {
                    let e = Edge {
                        left: cur.slice(0, pos),
                        rule: r.id,
                        sign: crate::graph::Sign::Minus,
                        right: cur.slice(pos + r.rhs.len(), cur.len()),
                    };
                    let next = cur.splice(pos, r.rhs.len(), &r.lhs);
                    out.push((e, next));
                }
            }
            for (e, next) in out {
                if next.len() > max_len || !visited.insert(next.clone()) {
                    continue;
                }
                parent.insert(next.clone(), (cur.clone(), e));
                if &next == v {
                    let mut edges = Vec::new();
                    let mut back = next;
                    while let Some((prev, edge)) = parent.get(&back) {
                        edges.push(edge.clone());
                        back = prev.clone();
                    }
                    edges.reverse();
                    return Some(Path::from_edges(self, edges).expect("search edges compose"));
                }
                if visited.len() > max_visited {
                    return None;
                }
                queue.push_back(next);
            }
        }
        None
    }

    /// Bidirectional search for a chain of rule applications joining `u` and
    /// `v`, restricted to intermediate words of length at most `max_len` and
    /// at most `max_visited` distinct words per side.
    pub fn thue_equivalent(
        &self,
        u: &Word,
        v: &Word,
        max_len: usize,
        max_visited: usize,
    ) -> ThueOutcome {
        if u == v {
            return ThueOutcome::Equivalent;
        }
        let mut seen: [HashSet<Word>; 2] =
            [HashSet::from([u.clone()]), HashSet::from([v.clone()])];
        let mut frontier: [Vec<Word>; 2] = [vec![u.clone()], vec![v.clone()]];
        while !frontier[0].is_empty() && !frontier[1].is_empty() {
            if seen[0].len() + seen[1].len() > max_visited {
                return ThueOutcome::NotFoundWithinBounds;
            }
            let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
            let mut next = Vec::new();
            for w in std::mem::take(&mut frontier[side]) {
                for n in self.thue_neighbors(&w, max_len) {
                    if seen[1 - side].contains(&n) {
                        return ThueOutcome::Equivalent;
                    }
                    if seen[side].insert(n.clone()) {
                        next.push(n);
                    }
                }
            }
            frontier[side] = next;
        }
        ThueOutcome::NotFoundWithinBounds
    }

    /// All critical pairs: inclusions (one left-hand side inside another) and
    /// overlaps (a proper suffix of one equal to a proper prefix of another),
    /// sorted by source word.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let mut pairs = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                for pos in ri.lhs.occurrences(&rj.lhs) {
                    let whole = pos == 0 && rj.lhs.len() == ri.lhs.len();
                    if whole && i >= j {
                        continue;
                    }
                    pairs.push(CriticalPair {
                        word: ri.lhs.clone(),
                        kind: PairKind::Inclusion,
                        first: Edge::positive(Word::empty(), ri.id, Word::empty()),
                        second: Edge::positive(
                            ri.lhs.slice(0, pos),
                            rj.id,
                            ri.lhs.slice(pos + rj.lhs.len(), ri.lhs.len()),
                        ),
                    });
                }
                for s in 1..ri.lhs.len().min(rj.lhs.len()) {
                    let head = ri.lhs.slice(0, ri.lhs.len() - s);
                    let tail = rj.lhs.slice(s, rj.lhs.len());
                    if ri.lhs.slice(ri.lhs.len() - s, ri.lhs.len()) != rj.lhs.slice(0, s) {
                        continue;
                    }
                    pairs.push(CriticalPair {
                        word: ri.lhs.concat(&tail),
                        kind: PairKind::Overlap,
                        first: Edge::positive(Word::empty(), ri.id, tail.clone()),
                        second: Edge::positive(head, rj.id, Word::empty()),
                    });
                }
            }
        }
        pairs.sort();
        pairs
    }

    /// Breadth-first descendant closure of `w` with parent pointers, or
    /// `None` if it exceeds `max_states` words.
    pub(crate) fn descendant_tree(
        &self,
        w: &Word,
        max_states: usize,
    ) -> Option<BTreeMap<Word, Option<(Word, SingleStep)>>> {
        let mut tree: BTreeMap<Word, Option<(Word, SingleStep)>> = BTreeMap::new();
        tree.insert(w.clone(), None);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(cur) = queue.pop_front() {
            for s in self.single_steps(&cur) {
                if !tree.contains_key(&s.result) {
                    if tree.len() >= max_states {
                        return None;
                    }
                    tree.insert(s.result.clone(), Some((cur.clone(), s.clone())));
                    queue.push_back(s.result);
                }
            }
        }
        Some(tree)
    }

    fn tree_path(
        &self,
        tree: &BTreeMap<Word, Option<(Word, SingleStep)>>,
        target: &Word,
    ) -> Path {
        let mut edges = Vec::new();
        let mut cur = target.clone();
        while let Some((parent, step)) = &tree[&cur] {
            edges.push(self.step_edge(parent, step));
            cur = parent.clone();
        }
        edges.reverse();
        if edges.is_empty() {
            Path::identity(target.clone())
        } else {
            Path::from_edges(self, edges).expect("tree edges compose")
        }
    }

    /// Resolves a critical pair: searches the descendant closures of the two
    /// targets for a common word and returns positive paths to the least one.
    pub fn resolve(&self, pair: &CriticalPair, max_states: usize) -> Resolution {
        let t1 = pair.first.end(self);
        let t2 = pair.second.end(self);
        let (Some(d1), Some(d2)) = (
            self.descendant_tree(&t1, max_states),
            self.descendant_tree(&t2, max_states),
        ) else {
            return Resolution::Unknown;
        };
        if let Some(common) = d1.keys().find(|w| d2.contains_key(*w)) {
            return Resolution::Resolvable {
                first: self.tree_path(&d1, common),
                second: self.tree_path(&d2, common),
            };
        }
        let nf1 = d1.keys().find(|w| self.is_irreducible(w));
        let nf2 = d2.keys().find(|w| self.is_irreducible(w));
        match (nf1, nf2) {
            (Some(a), Some(b)) => {
                Resolution::Unresolved { first_nf: a.clone(), second_nf: b.clone() }
            }
            _ => Resolution::Unknown,
        }
    }

    /// Checks that every word of length at most `max_len` has a unique
    /// irreducible descendant.
    pub fn newman_check(&self, max_len: usize, max_states: usize) -> LocalConfluence {
        for w in crate::words::words_up_to(self.alphabet.len(), max_len) {
            let Some(tree) = self.descendant_tree(&w, max_states) else {
                return LocalConfluence::Inconclusive { word: w };
            };
            let mut nfs = tree.keys().filter(|u| self.is_irreducible(u));
            let Some(first) = nfs.next() else {
                return LocalConfluence::Inconclusive { word: w };
            };
            if let Some(second) = nfs.next() {
                return LocalConfluence::Counterexample {
                    word: w.clone(),
                    first_nf: first.clone(),
                    second_nf: second.clone(),
                };
            }
        }
        LocalConfluence::Confluent
    }

    /// Flips every rule whose right side is shortlex-greater than its left,
    /// dropping rules that become duplicates.
    pub fn llex_oriented(&self) -> RewritingSystem {
        let mut rules: Vec<Rule> = Vec::new();
        for r in &self.rules {
            let (lhs, rhs) = if r.lhs > r.rhs {
                (r.lhs.clone(), r.rhs.clone())
            } else {
                (r.rhs.clone(), r.lhs.clone())
            };
            if !rules.iter().any(|o| o.lhs == lhs && o.rhs == rhs) {
                rules.push(Rule { id: r.id, lhs, rhs });
            }
        }
        RewritingSystem::from_rules(self.alphabet.clone(), rules).expect("orientation keeps rules valid")
    }

    /// Round-based Knuth-Bendix completion. Each round resolves all critical
    /// pairs of a frozen snapshot, orients the unresolved normal-form pairs
    /// by shortlex, adds them with fresh ids, then prunes subsumed rules.
    pub fn knuth_bendix(&self, opts: &CompletionOptions) -> Completion {
        let mut sys = self.llex_oriented();
        let mut added = Vec::new();
        let mut rounds = 0;
        let status = loop {
            rounds += 1;
            let mut fresh: Vec<(Word, Word)> = Vec::new();
            let mut capped = false;
            for pair in sys.critical_pairs() {
                match sys.resolve(&pair, opts.max_states) {
                    Resolution::Resolvable { .. } => {}
                    Resolution::Unresolved { first_nf, second_nf } => {
                        let (lhs, rhs) = if first_nf > second_nf {
                            (first_nf, second_nf)
                        } else {
                            (second_nf, first_nf)
                        };
                        fresh.push((lhs, rhs));
                    }
                    Resolution::Unknown => {
                        capped = true;
                        break;
                    }
                }
            }
            if capped {
                break CompletionStatus::StateLimit;
            }
            fresh.sort();
            fresh.dedup();
            fresh.retain(|(l, r)| !sys.rules.iter().any(|o| &o.lhs == l && &o.rhs == r));
            if fresh.is_empty() {
                break CompletionStatus::Complete;
            }
            if fresh.iter().any(|(l, _)| l.len() > opts.max_lhs_len) {
                break CompletionStatus::LengthLimit;
            }
            let mut next_id = sys.rules.iter().map(|r| r.id.0 + 1).max().unwrap_or(0);
            let mut rules = sys.rules.clone();
            for (lhs, rhs) in fresh {
                let rule = Rule { id: RuleId(next_id), lhs, rhs };
                next_id += 1;
                added.push(rule.clone());
                rules.push(rule);
            }
            let over_cap = rules.len() > opts.max_rules;
            sys = RewritingSystem::from_rules(self.alphabet.clone(), rules)
                .expect("oriented rules stay valid");
            if over_cap {
                break CompletionStatus::RuleLimit;
            }
            if opts.interreduce {
                sys = sys.interreduced(opts.max_states);
            }
        };
        Completion { system: sys, status, rounds, added }
    }

    /// Removes rules whose left side is reducible by another rule, keeping a
    /// rule whenever its two sides would stop being joinable without it.
    pub fn interreduced(&self, max_states: usize) -> RewritingSystem {
        let mut rules = self.rules.clone();
        loop {
            let mut candidates: Vec<usize> = (0..rules.len())
                .filter(|&k| {
                    rules.iter().any(|o| {
                        o.id != rules[k].id && !rules[k].lhs.occurrences(&o.lhs).is_empty()
                    })
                })
                .collect();
            candidates.sort_by(|&a, &b| {
                (&rules[b].lhs, rules[b].id).cmp(&(&rules[a].lhs, rules[a].id))
            });
            let mut deleted = false;
            for k in candidates {
                let victim = rules[k].clone();
                let rest: Vec<Rule> =
                    rules.iter().filter(|r| r.id != victim.id).cloned().collect();
                let rest_sys = RewritingSystem::from_rules(self.alphabet.clone(), rest)
                    .expect("subset of valid rules");
                let joined = match (
                    rest_sys.normalize(&victim.lhs, max_states),
                    rest_sys.normalize(&victim.rhs, max_states),
                ) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                };
                if joined {
                    rules.retain(|r| r.id != victim.id);
                    deleted = true;
                    break;
                }
            }
            if !deleted {
                break;
            }
        }
        RewritingSystem::from_rules(self.alphabet.clone(), rules).expect("subset of valid rules")
    }
}
