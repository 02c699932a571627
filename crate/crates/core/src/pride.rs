//! Group presentations and the rewriting complex derived from them.
//!
//! A presentation `⟨x | r⟩` over a paired alphabet yields a monoid rewriting
//! system whose rules erase each relator, each inverted relator and each
//! adjacent inverse pair of letters. On the rewriting graph of that system
//! the module builds trivial paths and chains over inverse pairs, the closed
//! relator loops `Q(r, u)` and `P(r, u)` with their cycles `q(r, u)`, the
//! evaluation of paths into conjugated-relator symbol sequences, and the
//! catalog of generating loops whose attached 2-cells drive a bounded
//! asphericity probe.
//!
//! The probe reports how many short 1-cycles of a truncated complex bound.
//! A cycle that fails to bound within the truncation is inconclusive for the
//! infinite complex, so the probe never reports a negative verdict.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use thiserror::Error;

use crate::cells::{LoopId, LoopSpec};
use crate::chains::FormalSum;
use crate::graph::{Edge, Path, Sign};
use crate::homology::{boundary_matrix, fundamental_cycles};
use crate::intmat::ColumnEchelon;
use crate::peiffer::{RelatorId, YSequence, YSymbol};
use crate::rewriting::{CriticalPair, RewritingSystem, Rule, RuleId};
use crate::truncation::{BuildError, TruncatedComplex, DEFAULT_CELL_CAP};
use crate::words::{Alphabet, Letter, Word};

fn inv(al: &Alphabet, w: &Word) -> Word {
    al.formal_inverse(w).expect("alphabet with inverse pairing")
}

/// A group presentation: a paired alphabet and a list of relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
    distinguished: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("the alphabet has no inverse pairing")]
    NoPairing,
    #[error("relator {0} is empty")]
    EmptyRelator(usize),
    #[error("relator {0} uses a letter outside the alphabet")]
    LetterOutOfRange(usize),
    #[error("relator {0} is not freely reduced")]
    UnreducedRelator(usize),
    #[error("distinguished index {0} is out of range")]
    BadDistinguished(usize),
}

impl GroupPresentation {
    /// Validates that every relator is a nonempty freely reduced word and
    /// that the distinguished index, when given, names a relator.
    pub fn new(
        alphabet: Alphabet,
        relators: Vec<Word>,
        distinguished: Option<usize>,
    ) -> Result<GroupPresentation, PresentationError> {
        if !alphabet.has_pairing() {
            return Err(PresentationError::NoPairing);
        }
        for (i, r) in relators.iter().enumerate() {
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator(i));
            }
            if !alphabet.contains_word(r) {
                return Err(PresentationError::LetterOutOfRange(i));
            }
            if !alphabet.is_reduced(r).expect("pairing checked above") {
                return Err(PresentationError::UnreducedRelator(i));
            }
        }
        if let Some(d) = distinguished {
            if d >= relators.len() {
                return Err(PresentationError::BadDistinguished(d));
            }
        }
        Ok(GroupPresentation { alphabet, relators, distinguished })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn distinguished(&self) -> Option<usize> {
        self.distinguished
    }
}

/// How a rule of the derived system arises from the presentation. A rule
/// carries several tags when distinct sources share one left side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleTag {
    /// Erases the relator power `r^ε`.
    Relator { relator: RelatorId, sign: Sign },
    /// Erases the inverse pair opened by `first`.
    Trivial { first: Letter },
}

/// The rewriting system of a presentation: one erasing rule per relator
/// power and one per adjacent inverse pair, deduplicated, with tags.
#[derive(Debug, Clone)]
pub struct PrideSystem {
    presentation: GroupPresentation,
    system: RewritingSystem,
    tags: Vec<Vec<RuleTag>>,
    by_relator: BTreeMap<(u32, Sign), RuleId>,
    by_first_letter: BTreeMap<Letter, RuleId>,
}

/// Derives the rewriting system of a presentation. Rule ids number the
/// relator rules first (each relator, then its inverse), then the inverse
/// pair rules in letter order; a repeated left side keeps the first id and
/// accumulates tags.
pub fn to_pride_system(g: &GroupPresentation) -> PrideSystem {
    let al = g.alphabet.clone();
    let mut pending: Vec<(Word, RuleTag)> = Vec::new();
    for (i, r) in g.relators.iter().enumerate() {
        let id = RelatorId(i as u32);
        pending.push((r.clone(), RuleTag::Relator { relator: id, sign: Sign::Plus }));
        pending.push((inv(&al, r), RuleTag::Relator { relator: id, sign: Sign::Minus }));
    }
    for l in 0..al.len() as Letter {
        let pair = Word::from_letters(vec![l, al.inverse_letter(l).expect("paired")]);
        pending.push((pair, RuleTag::Trivial { first: l }));
    }

    let mut rules: Vec<Rule> = Vec::new();
    let mut tags: Vec<Vec<RuleTag>> = Vec::new();
    let mut position: HashMap<Word, usize> = HashMap::new();
    for (lhs, tag) in pending {
        match position.get(&lhs) {
            Some(&i) => tags[i].push(tag),
            None => {
                position.insert(lhs.clone(), rules.len());
                rules.push(Rule { id: RuleId(rules.len() as u32), lhs, rhs: Word::empty() });
                tags.push(vec![tag]);
            }
        }
    }

    let mut by_relator = BTreeMap::new();
    let mut by_first_letter = BTreeMap::new();
    for (i, rule_tags) in tags.iter().enumerate() {
        for tag in rule_tags {
            match *tag {
                RuleTag::Relator { relator, sign } => {
                    by_relator.insert((relator.0, sign), RuleId(i as u32));
                }
                RuleTag::Trivial { first } => {
                    by_first_letter.insert(first, RuleId(i as u32));
                }
            }
        }
    }

    let system = RewritingSystem::from_rules(al, rules).expect("deduplicated erasing rules");
    PrideSystem { presentation: g.clone(), system, tags, by_relator, by_first_letter }
}

impl PrideSystem {
    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn system(&self) -> &RewritingSystem {
        &self.system
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.system.alphabet()
    }

    pub fn rule_tags(&self, id: RuleId) -> &[RuleTag] {
        &self.tags[id.0 as usize]
    }

    /// The word of a relator.
    pub fn relator_word(&self, r: RelatorId) -> &Word {
        &self.presentation.relators[r.0 as usize]
    }

    /// The rule erasing `r^ε`.
    pub fn relator_rule(&self, r: RelatorId, sign: Sign) -> RuleId {
        self.by_relator[&(r.0, sign)]
    }

    /// The rule erasing the inverse pair opened by `first`.
    pub fn trivial_rule(&self, first: Letter) -> RuleId {
        self.by_first_letter[&first]
    }
}

fn trivial_steps(ps: &PrideSystem, w: &Word) -> Vec<Edge> {
    let al = ps.alphabet();
    (0..w.len())
        .map(|i| {
            let prefix = w.slice(0, i);
            let right = inv(al, &prefix);
            Edge::positive(prefix, ps.trivial_rule(w.letters()[i]), right)
        })
        .collect()
}

/// The chain `τ_{ww⁻¹}`: for each position `i` of `w`, the positive edge
/// erasing the inverse pair of the `i`-th letter between the length-`i`
/// prefix and the inverse of that prefix.
pub fn trivial_tau_chain(ps: &PrideSystem, w: &Word) -> FormalSum<Edge> {
    FormalSum::from_terms(trivial_steps(ps, w).into_iter().map(|e| (e, 1)))
}

/// The trivial path `T_{ww⁻¹}` from the empty word up to `w·w⁻¹`, composed
/// of the inverted erasing edges of `τ_{ww⁻¹}` from the innermost pair out.
pub fn trivial_path(ps: &PrideSystem, w: &Word) -> Path {
    let edges = trivial_steps(ps, w).iter().map(Edge::inverse).collect();
    Path::from_edges(ps.system(), edges).expect("telescoping junctions")
}

/// The closed path `Q(r, u)`: climb to `u r r⁻¹ u⁻¹` along the trivial path
/// of `u r`, erase `r` and then `r⁻¹`, and descend the trivial path of `u`.
pub fn q_path(ps: &PrideSystem, r: RelatorId, u: &Word) -> Path {
    let al = ps.alphabet();
    let sys = ps.system();
    let rel = ps.relator_word(r).clone();
    let up = trivial_path(ps, &u.concat(&rel));
    let e1 = Edge::positive(u.clone(), ps.relator_rule(r, Sign::Plus), inv(al, &rel).concat(&inv(al, u)));
    let e2 = Edge::positive(u.clone(), ps.relator_rule(r, Sign::Minus), inv(al, u));
    let down = trivial_path(ps, u).inverse(sys);
    up.compose(sys, &Path::single(sys, e1))
        .and_then(|p| p.compose(sys, &Path::single(sys, e2)))
        .and_then(|p| p.compose(sys, &down))
        .expect("legs share endpoints")
}

/// The closed path `P(r, u)`: climb the trivial path of `u r u⁻¹`, erase `r`
/// inside it, descend a translated trivial path of `u`, erase `r⁻¹`, and
/// descend the trivial path of `u`.
pub fn p_path(ps: &PrideSystem, r: RelatorId, u: &Word) -> Path {
    let al = ps.alphabet();
    let sys = ps.system();
    let rel = ps.relator_word(r).clone();
    let u_inv = inv(al, u);
    let rel_inv = inv(al, &rel);
    let up = trivial_path(ps, &u.concat(&rel).concat(&u_inv));
    let e1_right = u_inv.concat(u).concat(&rel_inv).concat(&u_inv);
    let e1 = Edge::positive(u.clone(), ps.relator_rule(r, Sign::Plus), e1_right);
    let mid_right = u.concat(&rel_inv).concat(&u_inv);
    let mid = trivial_path(ps, u).inverse(sys).translate(&Word::empty(), &mid_right);
    let e2 = Edge::positive(u.clone(), ps.relator_rule(r, Sign::Minus), u_inv);
    let down = trivial_path(ps, u).inverse(sys);
    up.compose(sys, &Path::single(sys, e1))
        .and_then(|p| p.compose(sys, &mid))
        .and_then(|p| p.compose(sys, &Path::single(sys, e2)))
        .and_then(|p| p.compose(sys, &down))
        .expect("legs share endpoints")
}

/// The 1-cycle `q(r, u)`: the two erasing edges of `Q(r, u)` plus
/// `τ_{uu⁻¹} − τ_{(ur)(ur)⁻¹}`. Its boundary vanishes exactly.
pub fn q_cycle(ps: &PrideSystem, r: RelatorId, u: &Word) -> FormalSum<Edge> {
    let al = ps.alphabet();
    let rel = ps.relator_word(r).clone();
    let e1 = Edge::positive(u.clone(), ps.relator_rule(r, Sign::Plus), inv(al, &rel).concat(&inv(al, u)));
    let e2 = Edge::positive(u.clone(), ps.relator_rule(r, Sign::Minus), inv(al, u));
    let mut out = FormalSum::zero();
    out.add_term(e1, 1);
    out.add_term(e2, 1);
    out.add(&trivial_tau_chain(ps, u));
    out.sub(&trivial_tau_chain(ps, &u.concat(&rel)));
    out
}

/// The single-edge path erasing `r` with empty contexts.
pub fn eta_rep(ps: &PrideSystem, r: RelatorId) -> Path {
    let sys = ps.system();
    Path::single(sys, Edge::positive(Word::empty(), ps.relator_rule(r, Sign::Plus), Word::empty()))
}

fn combine(a: Sign, b: Sign) -> Sign {
    if a == b {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// The symbol readings of one edge, one per relator tag of its rule, with
/// the left context freely reduced as conjugator. An edge whose rule only
/// erases inverse pairs has no reading.
pub fn edge_symbols(ps: &PrideSystem, e: &Edge) -> Vec<YSymbol> {
    ps.rule_tags(e.rule)
        .iter()
        .filter_map(|tag| match *tag {
            RuleTag::Relator { relator, sign } => {
                Some(YSymbol::new(ps.alphabet(), &e.left, relator, combine(sign, e.sign)))
            }
            RuleTag::Trivial { .. } => None,
        })
        .collect()
}

/// Maps a path to the sequence of conjugated-relator symbols of its relator
/// edges, skipping edges that erase inverse pairs. A rule with several
/// relator tags reads as its first; all readings share one conjugate.
pub fn psi0_eval(ps: &PrideSystem, p: &Path) -> YSequence {
    p.edges().iter().filter_map(|e| edge_symbols(ps, e).into_iter().next()).collect()
}

/// A generating loop of the complex: the relator loop `Q(r, 1)` or the
/// two-step loop resolving `x^ε x^{−ε} x^ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LoopDef {
    QCell(RelatorId),
    TCell(Letter),
}

/// Loop ids number the `q` loops by relator, then the `t` loops by letter.
pub fn loop_id(ps: &PrideSystem, def: LoopDef) -> LoopId {
    let n = ps.presentation().relators().len() as u32;
    match def {
        LoopDef::QCell(r) => LoopId(r.0),
        LoopDef::TCell(l) => LoopId(n + l),
    }
}

/// The defining loop for an id from `loop_id`, if in range.
pub fn loop_def(ps: &PrideSystem, id: LoopId) -> Option<LoopDef> {
    let n = ps.presentation().relators().len() as u32;
    if id.0 < n {
        Some(LoopDef::QCell(RelatorId(id.0)))
    } else if ((id.0 - n) as usize) < ps.alphabet().len() {
        Some(LoopDef::TCell(id.0 - n))
    } else {
        None
    }
}

/// The closed boundary path of a generating loop. The `t` loop for `x^ε`
/// erases the two overlapping pairs of `x^ε x^{−ε} x^ε` one way and back.
pub fn loop_path(ps: &PrideSystem, def: LoopDef) -> Path {
    match def {
        LoopDef::QCell(r) => q_path(ps, r, &Word::empty()),
        LoopDef::TCell(l) => {
            let li = ps.alphabet().inverse_letter(l).expect("paired");
            let a = Edge::positive(Word::empty(), ps.trivial_rule(l), Word::single(l));
            let b = Edge::positive(Word::single(l), ps.trivial_rule(li), Word::empty());
            Path::from_edges(ps.system(), vec![a, b.inverse()]).expect("shared endpoints")
        }
    }
}

fn loop_spec(ps: &PrideSystem, def: LoopDef) -> LoopSpec {
    LoopSpec { id: loop_id(ps, def), path: loop_path(ps, def) }
}

/// The `t` loops alone, one per letter, with their catalog ids.
pub fn t_loop_specs(ps: &PrideSystem) -> Vec<LoopSpec> {
    (0..ps.alphabet().len() as Letter).map(|l| loop_spec(ps, LoopDef::TCell(l))).collect()
}

/// The full catalog: `q` loops for every relator, then `t` loops.
pub fn loop_specs(ps: &PrideSystem) -> Vec<LoopSpec> {
    let mut out: Vec<LoopSpec> = (0..ps.presentation().relators().len())
        .map(|i| loop_spec(ps, LoopDef::QCell(RelatorId(i as u32))))
        .collect();
    out.extend(t_loop_specs(ps));
    out
}

/// A rewriting system together with the loop catalog for its complex.
#[derive(Debug, Clone)]
pub struct ComplexParts {
    pub system: RewritingSystem,
    pub loops: Vec<LoopSpec>,
}

/// The system and full loop catalog of a presentation.
pub fn complex_parts(ps: &PrideSystem) -> ComplexParts {
    ComplexParts { system: ps.system.clone(), loops: loop_specs(ps) }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SelectError {
    #[error("relator index {0} is out of range")]
    RelatorOutOfRange(u32),
}

/// Parts for the presentation and for the subpresentation keeping only the
/// listed relators. The sub system reuses the rule ids and loop ids of the
/// full one, so its complex embeds in the full complex at every length.
pub fn pride_pair(
    ps: &PrideSystem,
    keep: &[u32],
) -> Result<(ComplexParts, ComplexParts), SelectError> {
    let n = ps.presentation().relators().len() as u32;
    for &i in keep {
        if i >= n {
            return Err(SelectError::RelatorOutOfRange(i));
        }
    }
    let kept: BTreeSet<u32> = keep.iter().copied().collect();
    let total = complex_parts(ps);
    let keep_rule = |id: RuleId| {
        ps.rule_tags(id).iter().any(|tag| match *tag {
            RuleTag::Relator { relator, .. } => kept.contains(&relator.0),
            RuleTag::Trivial { .. } => true,
        })
    };
    let sub_rules: Vec<Rule> =
        ps.system.rules().iter().filter(|rule| keep_rule(rule.id)).cloned().collect();
    let sub_system = RewritingSystem::from_rules(ps.alphabet().clone(), sub_rules)
        .expect("subset of valid rules");
    let sub_loops: Vec<LoopSpec> = total
        .loops
        .iter()
        .filter(|spec| spec.id.0 >= n || kept.contains(&spec.id.0))
        .cloned()
        .collect();
    let sub = ComplexParts { system: sub_system, loops: sub_loops };
    Ok((total, sub))
}

/// Outcome of the probe: `Consistent` when every examined cycle bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Consistent => write!(f, "consistent"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Counts from the bounded asphericity probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub max_len: usize,
    pub margin: usize,
    pub bounded: usize,
    pub unbounded_in_truncation: usize,
    pub verdict: Verdict,
    pub caveat: &'static str,
}

const PROBE_CAVEAT: &str = "a cycle that fails to bound within the truncation \
     may still bound in the full complex; only the bounded count is evidence";

/// Builds the truncated complex of the presentation at `max_len` with every
/// generating 2-cell attached, enumerates a basis of the 1-cycles supported
/// within `max_len − margin`, and checks each for membership in the span of
/// the 2-cell boundaries. All cycles bounding is consistent with the
/// vanishing of the first homology; any other outcome is inconclusive.
pub fn aspherical_probe(
    g: &GroupPresentation,
    max_len: usize,
    margin: usize,
) -> Result<ProbeReport, BuildError> {
    let ps = to_pride_system(g);
    let parts = complex_parts(&ps);
    let cx =
        TruncatedComplex::build(parts.system.clone(), max_len, parts.loops, false, DEFAULT_CELL_CAP)?;
    let inner = TruncatedComplex::build(
        parts.system,
        max_len.saturating_sub(margin),
        Vec::new(),
        false,
        DEFAULT_CELL_CAP,
    )?;
    let solver = ColumnEchelon::from_matrix(&boundary_matrix(&cx, 2), true);
    let mut bounded = 0;
    let mut unbounded = 0;
    for z in fundamental_cycles(&inner) {
        let mut b: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (e, c) in z.iter() {
            let i = cx.edge_index(e).expect("inner edge in outer complex");
            b.insert(i, c.clone());
        }
        if solver.solve(&b).is_some() {
            bounded += 1;
        } else {
            unbounded += 1;
        }
    }
    let verdict = if unbounded == 0 { Verdict::Consistent } else { Verdict::Inconclusive };
    Ok(ProbeReport {
        max_len,
        margin,
        bounded,
        unbounded_in_truncation: unbounded,
        verdict,
        caveat: PROBE_CAVEAT,
    })
}

/// A critical pair of the derived system witnessing one generating loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrEvidence {
    pub loop_id: LoopId,
    pub word: Word,
    pub pair: CriticalPair,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AuditError {
    #[error("no critical pair on `{0}` joins the expected rules")]
    MissingPair(String),
}

fn find_pair(
    ps: &PrideSystem,
    pairs: &[CriticalPair],
    word: &Word,
    rules: (RuleId, RuleId),
) -> Result<CriticalPair, AuditError> {
    let wanted = BTreeSet::from([rules.0, rules.1]);
    pairs
        .iter()
        .find(|p| {
            p.word == *word && BTreeSet::from([p.first.rule, p.second.rule]) == wanted
        })
        .cloned()
        .ok_or_else(|| AuditError::MissingPair(ps.alphabet().format_word(word)))
}

/// Confirms that every generating loop resolves a critical pair of the
/// derived system: the `q` loop of a relator overlaps the erasing rule of
/// the relator with the inverse pair rule of its last letter, and the `t`
/// loop of a letter overlaps its two pair rules inside `x^ε x^{−ε} x^ε`.
pub fn remark_ir_audit(ps: &PrideSystem) -> Result<Vec<IrEvidence>, AuditError> {
    let al = ps.alphabet();
    let pairs = ps.system().critical_pairs();
    let mut out = Vec::new();
    for (i, rel) in ps.presentation().relators().iter().enumerate() {
        let r = RelatorId(i as u32);
        let last = rel.letters()[rel.len() - 1];
        let last_inv = al.inverse_letter(last).expect("paired");
        let word = rel.concat(&Word::single(last_inv));
        let rules = (ps.relator_rule(r, Sign::Plus), ps.trivial_rule(last));
        let pair = find_pair(ps, &pairs, &word, rules)?;
        out.push(IrEvidence { loop_id: loop_id(ps, LoopDef::QCell(r)), word, pair });
    }
    for l in 0..al.len() as Letter {
        let li = al.inverse_letter(l).expect("paired");
        let word = Word::from_letters(vec![l, li, l]);
        let rules = (ps.trivial_rule(l), ps.trivial_rule(li));
        let pair = find_pair(ps, &pairs, &word, rules)?;
        out.push(IrEvidence { loop_id: loop_id(ps, LoopDef::TCell(l)), word, pair });
    }
    Ok(out)
}
