//! Finite monoids, tensor products over a submonoid, and dominions.
//!
//! A finite monoid is ingested as a full multiplication table and checked
//! for associativity outright. The tensor product `S ⊗_U S` is the quotient
//! of the pair set by the equivalence generated by `(au, b) ~ (a, ub)` for
//! `u` in the submonoid, computed by union-find; the dominion of `U` in `S`
//! is then read off as the elements `d` with `d ⊗ 1 = 1 ⊗ d`, which is
//! exact for finite monoids.
//!
//! For presented monoids the module builds the universal enveloping group
//! presentation, one relator `u·v⁻¹` per rule, and probes the weak dominion
//! of a finitely generated submonoid through bounded completion and a
//! bounded subgroup enumeration. The probe answers no only when the
//! subgroup was provably enumerated in full.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::graph::Sign;
use crate::pride::{to_pride_system, GroupPresentation};
use crate::rewriting::{CompletionOptions, CompletionStatus, RewritingSystem};
use crate::words::{Alphabet, Letter, Word};

/// A finite monoid given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonoidError {
    #[error("the table is empty")]
    EmptyTable,
    #[error("{names} names for {rows} rows")]
    NameCountMismatch { names: usize, rows: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, expected: usize, found: usize },
    #[error("entry at ({row}, {col}) is {value}, out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("element name `{0}` repeats")]
    DuplicateName(String),
    #[error("no element acts as a two-sided identity")]
    NoIdentity,
    #[error("({a}·{b})·{c} differs from {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

impl FiniteMonoid {
    /// Validates the table shape, locates the identity and checks every
    /// associativity triple.
    pub fn new(names: Vec<String>, rows: Vec<Vec<usize>>) -> Result<FiniteMonoid, MonoidError> {
        let n = rows.len();
        if n == 0 {
            return Err(MonoidError::EmptyTable);
        }
        if names.len() != n {
            return Err(MonoidError::NameCountMismatch { names: names.len(), rows: n });
        }
        let mut seen = HashMap::new();
        for name in &names {
            if seen.insert(name.clone(), ()).is_some() {
                return Err(MonoidError::DuplicateName(name.clone()));
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MonoidError::NotSquare { row: i, expected: n, found: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(MonoidError::EntryOutOfRange { row: i, col: j, value: v });
                }
                table.push(v);
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or(MonoidError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(MonoidError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteMonoid { names, table, identity })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b]
    }

    /// The element with the given name.
    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The product of a sequence of elements, identity when empty.
    pub fn product(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }
}

/// A submonoid as a sorted set of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submonoid {
    elements: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubmonoidError {
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("the subset misses the identity")]
    MissingIdentity,
    #[error("the subset is not closed: {a}·{b} falls outside")]
    NotClosed { a: usize, b: usize },
}

impl Submonoid {
    /// Validates that the subset contains the identity and is closed.
    pub fn new(m: &FiniteMonoid, elements: &[usize]) -> Result<Submonoid, SubmonoidError> {
        let mut sorted: Vec<usize> = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &e in &sorted {
            if e >= m.len() {
                return Err(SubmonoidError::ElementOutOfRange(e));
            }
        }
        if !sorted.contains(&m.identity()) {
            return Err(SubmonoidError::MissingIdentity);
        }
        for &a in &sorted {
            for &b in &sorted {
                if sorted.binary_search(&m.mul(a, b)).is_err() {
                    return Err(SubmonoidError::NotClosed { a, b });
                }
            }
        }
        Ok(Submonoid { elements: sorted })
    }

    /// The smallest submonoid containing the generators.
    pub fn generated(m: &FiniteMonoid, generators: &[usize]) -> Result<Submonoid, SubmonoidError> {
        for &g in generators {
            if g >= m.len() {
                return Err(SubmonoidError::ElementOutOfRange(g));
            }
        }
        let mut member = vec![false; m.len()];
        member[m.identity()] = true;
        let mut queue: Vec<usize> = vec![m.identity()];
        for &g in generators {
            if !member[g] {
                member[g] = true;
                queue.push(g);
            }
        }
        while let Some(a) = queue.pop() {
            for b in 0..m.len() {
                if member[b] {
                    for p in [m.mul(a, b), m.mul(b, a)] {
                        if !member[p] {
                            member[p] = true;
                            queue.push(p);
                        }
                    }
                }
            }
        }
        let elements = (0..m.len()).filter(|&e| member[e]).collect();
        Ok(Submonoid { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (small, large) = if self.size[ra] < self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = large;
        self.size[large] += self.size[small];
    }
}

/// The partition of `S × S` underlying `S ⊗_U S`, with the translation
/// action of `S` on classes from either side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorQuotient {
    n: usize,
    class_of: Vec<usize>,
    reps: Vec<(usize, usize)>,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl TensorQuotient {
    pub fn n_classes(&self) -> usize {
        self.reps.len()
    }

    /// The class of `a ⊗ b`.
    pub fn class(&self, a: usize, b: usize) -> usize {
        self.class_of[a * self.n + b]
    }

    /// The first pair of a class in row-major order.
    pub fn representative(&self, c: usize) -> (usize, usize) {
        self.reps[c]
    }

    /// The class of `g·(a ⊗ b) = ga ⊗ b`.
    pub fn left_translate(&self, g: usize, c: usize) -> usize {
        self.left[g * self.n_classes() + c]
    }

    /// The class of `(a ⊗ b)·g = a ⊗ bg`.
    pub fn right_translate(&self, c: usize, g: usize) -> usize {
        self.right[g * self.n_classes() + c]
    }
}

/// Quotients `S × S` by the equivalence generated by `(au, b) ~ (a, ub)`
/// over `u ∈ U` and installs the two translation actions on classes.
pub fn tensor_product(m: &FiniteMonoid, u: &Submonoid) -> Result<TensorQuotient, SubmonoidError> {
    let u = Submonoid::new(m, u.elements())?;
    let n = m.len();
    let mut uf = UnionFind::new(n * n);
    for a in 0..n {
        for b in 0..n {
            for &x in u.elements() {
                uf.union(m.mul(a, x) * n + b, a * n + m.mul(x, b));
            }
        }
    }
    let mut class_of = vec![usize::MAX; n * n];
    let mut reps = Vec::new();
    for p in 0..n * n {
        let root = uf.find(p);
        if class_of[root] == usize::MAX {
            class_of[root] = reps.len();
            reps.push((p / n, p % n));
        }
        class_of[p] = class_of[root];
    }
    let k = reps.len();
    let mut left = vec![0; n * k];
    let mut right = vec![0; n * k];
    for g in 0..n {
        for (c, &(a, b)) in reps.iter().enumerate() {
            left[g * k + c] = class_of[m.mul(g, a) * n + b];
            right[g * k + c] = class_of[a * n + m.mul(b, g)];
        }
    }
    for g in 0..n {
        for a in 0..n {
            for b in 0..n {
                let c = class_of[a * n + b];
                assert_eq!(left[g * k + c], class_of[m.mul(g, a) * n + b], "left action ill-defined");
                assert_eq!(right[g * k + c], class_of[a * n + m.mul(b, g)], "right action ill-defined");
            }
        }
    }
    Ok(TensorQuotient { n, class_of, reps, left, right })
}

/// The dominion of `U` in `S`: all `d` with `d ⊗ 1 = 1 ⊗ d` in `S ⊗_U S`.
/// The answer is exact for finite monoids.
pub fn dominion(m: &FiniteMonoid, u: &Submonoid) -> Result<Vec<usize>, SubmonoidError> {
    let t = tensor_product(m, u)?;
    let e = m.identity();
    Ok((0..m.len()).filter(|&d| t.class(d, e) == t.class(e, d)).collect())
}

/// The universal enveloping group of a presented monoid, with the letter
/// embedding from monoid words into group words.
#[derive(Debug, Clone)]
pub struct UniversalGroup {
    pub presentation: GroupPresentation,
    letter_map: Vec<Letter>,
}

impl UniversalGroup {
    /// Rewrites a monoid word over the group alphabet.
    pub fn embed(&self, w: &Word) -> Word {
        Word::from_letters(w.letters().iter().map(|&l| self.letter_map[l as usize]).collect())
    }
}

/// Builds the group presentation with one relator `u·v⁻¹` per rule `u → v`,
/// freely reduced, dropping relators that reduce to the empty word. A
/// paired alphabet keeps its own letters as mutual inverses; an unpaired
/// one gets a fresh formal inverse per letter, so its tokens must not
/// collide with the derived `⋅^-1` names.
pub fn universal_group(m: &RewritingSystem) -> UniversalGroup {
    let source = m.alphabet();
    let (al, letter_map): (Alphabet, Vec<Letter>) = if source.has_pairing() {
        (source.clone(), (0..source.len() as Letter).collect())
    } else {
        let al = Alphabet::free_group(source.tokens()).expect("tokens distinct from inverse names");
        (al, (0..source.len()).map(|i| 2 * i as Letter).collect())
    };
    let map = |w: &Word| {
        Word::from_letters(w.letters().iter().map(|&l| letter_map[l as usize]).collect())
    };
    let mut relators = Vec::new();
    for rule in m.rules() {
        let inv_rhs = al.formal_inverse(&map(&rule.rhs)).expect("paired");
        let relator = al.free_reduce(&map(&rule.lhs).concat(&inv_rhs)).expect("paired");
        if !relator.is_empty() {
            relators.push(relator);
        }
    }
    let presentation =
        GroupPresentation::new(al, relators, None).expect("reduced nonempty relators");
    UniversalGroup { presentation, letter_map }
}

/// The presentation of the universal enveloping group alone.
pub fn universal_group_presentation(m: &RewritingSystem) -> GroupPresentation {
    universal_group(m).presentation
}

/// Caps for the weak dominion probe.
#[derive(Debug, Clone)]
pub struct WDomBounds {
    pub completion: CompletionOptions,
    pub max_elements: usize,
    pub max_product_len: usize,
    pub step_limit: usize,
}

impl Default for WDomBounds {
    fn default() -> Self {
        WDomBounds {
            completion: CompletionOptions::default(),
            max_elements: 5_000,
            max_product_len: 16,
            step_limit: 10_000,
        }
    }
}

/// Outcome of the weak dominion probe. `NotInWDom` is only reported after
/// the generated subgroup was enumerated in full under a complete system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WDomOutcome {
    /// `d` equals this product of submonoid generator images, read as
    /// (generator index, orientation) factors.
    InWDom { witness: Vec<(usize, Sign)> },
    NotInWDom,
    Unknown,
}

/// Decides membership of the image of `d` in the subgroup of the universal
/// group generated by the images of `u_generators`, within bounds: the
/// derived group system is completed, then products of generator images are
/// enumerated breadth-first by normal form. Any exhausted cap yields
/// `Unknown`.
pub fn weak_dominion_probe(
    m: &RewritingSystem,
    u_generators: &[Word],
    d: &Word,
    bounds: &WDomBounds,
) -> WDomOutcome {
    let ug = universal_group(m);
    let ps = to_pride_system(&ug.presentation);
    let completion = ps.system().knuth_bendix(&bounds.completion);
    if completion.status != CompletionStatus::Complete {
        return WDomOutcome::Unknown;
    }
    let sys = completion.system;
    let al = ug.presentation.alphabet().clone();
    let nf = |w: &Word| sys.normalize(w, bounds.step_limit).ok();
    let Some(target) = nf(&ug.embed(d)) else {
        return WDomOutcome::Unknown;
    };

    let mut factors: Vec<(usize, Sign, Word)> = Vec::new();
    for (i, u) in u_generators.iter().enumerate() {
        let image = ug.embed(u);
        let inverse = al.formal_inverse(&image).expect("paired");
        factors.push((i, Sign::Plus, image));
        factors.push((i, Sign::Minus, inverse));
    }

    let start = Word::empty();
    if target == start {
        return WDomOutcome::InWDom { witness: Vec::new() };
    }
    let mut parent: HashMap<Word, (Word, (usize, Sign))> = HashMap::new();
    let mut queue: VecDeque<(Word, usize)> = VecDeque::from([(start.clone(), 0)]);
    let mut seen = 1usize;
    let mut capped = false;
    let mut found = false;
    'search: while let Some((w, depth)) = queue.pop_front() {
        if depth == bounds.max_product_len {
            capped = true;
            continue;
        }
        for (i, sign, image) in &factors {
            let Some(next) = nf(&w.concat(image)) else {
                return WDomOutcome::Unknown;
            };
            if next == start || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), (w.clone(), (*i, *sign)));
            seen += 1;
            if next == target {
                found = true;
                break 'search;
            }
            if seen > bounds.max_elements {
                capped = true;
                break 'search;
            }
            queue.push_back((next, depth + 1));
        }
    }
    if found {
        let mut witness = Vec::new();
        let mut cur = target;
        while cur != start {
            let (prev, step) = parent[&cur].clone();
            witness.push(step);
            cur = prev;
        }
        witness.reverse();
        return WDomOutcome::InWDom { witness };
    }
    if capped {
        WDomOutcome::Unknown
    } else {
        WDomOutcome::NotInWDom
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monoid(names: &[&str], rows: &[&[usize]]) -> FiniteMonoid {
        FiniteMonoid::new(
            names.iter().map(|s| s.to_string()).collect(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    fn cyclic(n: usize) -> FiniteMonoid {
        let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteMonoid::new(names, rows).unwrap()
    }

    fn s3() -> FiniteMonoid {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let names: Vec<String> =
            perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        FiniteMonoid::new(names, rows).unwrap()
    }

    /// Independent closure of the pair relation by label propagation.
    fn brute_partition(m: &FiniteMonoid, u: &[usize]) -> Vec<usize> {
        let n = m.len();
        let mut label: Vec<usize> = (0..n * n).collect();
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in 0..n {
                    for &x in u {
                        let p = m.mul(a, x) * n + b;
                        let q = a * n + m.mul(x, b);
                        let small = label[p].min(label[q]);
                        if label[p] != small || label[q] != small {
                            label[p] = small;
                            label[q] = small;
                            changed = true;
                        }
                    }
                }
            }
            for i in 0..n * n {
                if label[label[i]] != label[i] {
                    label[i] = label[label[i]];
                    changed = true;
                }
            }
            if !changed {
                return label;
            }
        }
    }

    fn same_partition(t: &TensorQuotient, label: &[usize], n: usize) -> bool {
        (0..n * n).all(|p| {
            (0..n * n).all(|q| {
                (t.class_of[p] == t.class_of[q]) == (label[p] == label[q])
            })
        })
    }

    #[test]
    fn tables_are_validated_at_ingest() {
        let bad_assoc = FiniteMonoid::new(
            vec!["e".into(), "a".into(), "b".into()],
            vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]],
        );
        assert!(matches!(bad_assoc, Err(MonoidError::NotAssociative { .. })));

        let no_identity = FiniteMonoid::new(
            vec!["a".into(), "b".into()],
            vec![vec![0, 0], vec![0, 0]],
        );
        assert_eq!(no_identity.unwrap_err(), MonoidError::NoIdentity);

        let ragged = FiniteMonoid::new(vec!["e".into(), "a".into()], vec![vec![0, 1], vec![1]]);
        assert_eq!(ragged.unwrap_err(), MonoidError::NotSquare { row: 1, expected: 2, found: 1 });

        let out = FiniteMonoid::new(vec!["e".into()], vec![vec![3]]);
        assert_eq!(out.unwrap_err(), MonoidError::EntryOutOfRange { row: 0, col: 0, value: 3 });

        let dup = FiniteMonoid::new(
            vec!["e".into(), "e".into()],
            vec![vec![0, 1], vec![1, 0]],
        );
        assert_eq!(dup.unwrap_err(), MonoidError::DuplicateName("e".into()));

        let c2 = cyclic(2);
        assert_eq!(c2.identity(), 0);
        assert_eq!(c2.mul(1, 1), 0);
        assert_eq!(c2.product([1, 1, 1]), 1);
        assert_eq!(c2.element("g1"), Some(1));
    }

    #[test]
    fn submonoids_are_validated_and_generated() {
        let s = s3();
        assert_eq!(
            Submonoid::new(&s, &[0, 9]).unwrap_err(),
            SubmonoidError::ElementOutOfRange(9)
        );
        assert_eq!(Submonoid::new(&s, &[2]).unwrap_err(), SubmonoidError::MissingIdentity);
        assert!(matches!(
            Submonoid::new(&s, &[0, 3]).unwrap_err(),
            SubmonoidError::NotClosed { .. }
        ));
        assert_eq!(Submonoid::new(&s, &[0, 2]).unwrap().elements(), [0, 2]);
        assert_eq!(Submonoid::generated(&s, &[3]).unwrap().elements(), [0, 3, 4]);
        assert_eq!(Submonoid::generated(&s, &[2, 3]).unwrap().elements(), [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn tensor_over_the_full_monoid_collapses_to_left_factors() {
        for m in [cyclic(4), s3()] {
            let all = Submonoid::new(&m, &(0..m.len()).collect::<Vec<_>>()).unwrap();
            let t = tensor_product(&m, &all).unwrap();
            assert_eq!(t.n_classes(), m.len());
            for a in 0..m.len() {
                for b in 0..m.len() {
                    assert_eq!(t.class(a, b), t.class(m.mul(a, b), m.identity()));
                }
            }
        }
    }

    #[test]
    fn tensor_over_the_trivial_submonoid_is_discrete() {
        let m = s3();
        let one = Submonoid::new(&m, &[m.identity()]).unwrap();
        let t = tensor_product(&m, &one).unwrap();
        assert_eq!(t.n_classes(), m.len() * m.len());
    }

    #[test]
    fn tensor_partition_matches_a_brute_force_closure() {
        let m = s3();
        let u = Submonoid::new(&m, &[0, 2]).unwrap();
        let t = tensor_product(&m, &u).unwrap();
        assert_eq!(t.n_classes(), 18);
        let label = brute_partition(&m, u.elements());
        assert!(same_partition(&t, &label, m.len()));
        assert_eq!(t, tensor_product(&m, &u).unwrap());

        let c6 = cyclic(6);
        let u2 = Submonoid::generated(&c6, &[2]).unwrap();
        let t = tensor_product(&c6, &u2).unwrap();
        let label = brute_partition(&c6, u2.elements());
        assert!(same_partition(&t, &label, c6.len()));
    }

    #[test]
    fn class_translations_act_like_multiplication() {
        let m = s3();
        let u = Submonoid::new(&m, &[0, 2]).unwrap();
        let t = tensor_product(&m, &u).unwrap();
        for g in 0..m.len() {
            for a in 0..m.len() {
                for b in 0..m.len() {
                    assert_eq!(t.left_translate(g, t.class(a, b)), t.class(m.mul(g, a), b));
                    assert_eq!(t.right_translate(t.class(a, b), g), t.class(a, m.mul(b, g)));
                }
            }
        }
        let (a, b) = t.representative(t.class(3, 5));
        assert_eq!(t.class(a, b), t.class(3, 5));
    }

    #[test]
    fn dominions_of_groups_are_the_subgroups_themselves() {
        let s = s3();
        let subgroups: [&[usize]; 6] =
            [&[0], &[0, 1], &[0, 2], &[0, 5], &[0, 3, 4], &[0, 1, 2, 3, 4, 5]];
        for elements in subgroups {
            let u = Submonoid::new(&s, elements).unwrap();
            assert_eq!(dominion(&s, &u).unwrap(), elements);
        }
        let c6 = cyclic(6);
        for generators in [&[][..], &[3], &[2], &[1]] {
            let u = Submonoid::generated(&c6, generators).unwrap();
            assert_eq!(dominion(&c6, &u).unwrap(), u.elements());
        }
    }

    #[test]
    fn dominions_contain_the_submonoid_and_are_idempotent() {
        let null = monoid(
            &["1", "a", "0"],
            &[&[0, 1, 2], &[1, 2, 2], &[2, 2, 2]],
        );
        let semilattice = monoid(&["1", "e"], &[&[0, 1], &[1, 1]]);
        let cases: Vec<(FiniteMonoid, Vec<usize>)> = vec![
            (s3(), vec![0, 2]),
            (s3(), vec![0]),
            (cyclic(6), vec![0, 2, 4]),
            (null.clone(), vec![0, 2]),
            (null, vec![0]),
            (semilattice.clone(), vec![0]),
            (semilattice, vec![0, 1]),
        ];
        for (m, elements) in cases {
            let u = Submonoid::new(&m, &elements).unwrap();
            let dom = dominion(&m, &u).unwrap();
            assert!(u.elements().iter().all(|e| dom.contains(e)));
            let dom_monoid = Submonoid::new(&m, &dom).unwrap();
            assert_eq!(dominion(&m, &dom_monoid).unwrap(), dom);
        }
    }

    #[test]
    fn dominion_of_the_null_submonoid_is_frozen() {
        let null = monoid(
            &["1", "a", "0"],
            &[&[0, 1, 2], &[1, 2, 2], &[2, 2, 2]],
        );
        let u = Submonoid::new(&null, &[0, 2]).unwrap();
        assert_eq!(dominion(&null, &u).unwrap(), [0, 2]);
        let one = Submonoid::new(&null, &[0]).unwrap();
        assert_eq!(dominion(&null, &one).unwrap(), [0]);
    }

    fn presented(tokens: &[&str], rules: &[(&str, &str)]) -> RewritingSystem {
        let al = Alphabet::new(tokens).unwrap();
        let pairs: Vec<(Word, Word)> = rules
            .iter()
            .map(|(l, r)| (al.parse_word(l).unwrap(), al.parse_word(r).unwrap()))
            .collect();
        RewritingSystem::new(al, &pairs).unwrap()
    }

    #[test]
    fn universal_groups_reduce_rule_pairs_to_relators() {
        let idem = universal_group(&presented(&["a"], &[("a a", "a")]));
        let al = idem.presentation.alphabet();
        assert_eq!(al.tokens(), ["a", "a^-1"]);
        let rendered: Vec<String> =
            idem.presentation.relators().iter().map(|r| al.format_word(r)).collect();
        assert_eq!(rendered, ["a"]);
        assert_eq!(al.format_word(&idem.embed(&Word::from_letters(vec![0, 0]))), "a a");

        let free = universal_group_presentation(&presented(&["a"], &[]));
        assert!(free.relators().is_empty());

        let bicyclic = universal_group_presentation(&presented(&["p", "q"], &[("p q", "1")]));
        let rendered: Vec<String> =
            bicyclic.relators().iter().map(|r| bicyclic.alphabet().format_word(r)).collect();
        assert_eq!(rendered, ["p q"]);
    }

    #[test]
    fn universal_groups_of_paired_systems_drop_trivial_relators() {
        let g = GroupPresentation::new(
            Alphabet::free_group(&["x"]).unwrap(),
            vec![Word::single(0)],
            None,
        )
        .unwrap();
        let ps = to_pride_system(&g);
        let ug = universal_group(ps.system());
        let al = ug.presentation.alphabet();
        assert_eq!(al.tokens(), ["x", "x^-1"]);
        let rendered: Vec<String> =
            ug.presentation.relators().iter().map(|r| al.format_word(r)).collect();
        assert_eq!(rendered, ["x", "x^-1"]);
        assert_eq!(ug.embed(&Word::single(1)), Word::single(1));
    }

    #[test]
    fn weak_dominion_finds_generator_products() {
        let m = presented(&["a"], &[("a a a", "1")]);
        let gen = Word::single(0);
        let bounds = WDomBounds::default();

        let outcome = weak_dominion_probe(&m, &[gen.clone()], &gen, &bounds);
        assert_eq!(outcome, WDomOutcome::InWDom { witness: vec![(0, Sign::Plus)] });

        let d = Word::from_letters(vec![0, 0]);
        match weak_dominion_probe(&m, &[gen.clone()], &d, &bounds) {
            WDomOutcome::InWDom { witness } => {
                let ug = universal_group(&m);
                let ps = to_pride_system(&ug.presentation);
                let sys = ps.system().knuth_bendix(&bounds.completion).system;
                let al = ug.presentation.alphabet();
                let mut product = Word::empty();
                for (i, sign) in witness {
                    assert_eq!(i, 0);
                    let image = ug.embed(&gen);
                    product = match sign {
                        Sign::Plus => product.concat(&image),
                        Sign::Minus => product.concat(&al.formal_inverse(&image).unwrap()),
                    };
                }
                assert_eq!(
                    sys.normalize(&product, 10_000).unwrap(),
                    sys.normalize(&ug.embed(&d), 10_000).unwrap()
                );
            }
            other => panic!("expected membership evidence, got {other:?}"),
        }

        let identity = Word::from_letters(vec![0, 0, 0]);
        assert_eq!(
            weak_dominion_probe(&m, &[gen], &identity, &bounds),
            WDomOutcome::InWDom { witness: vec![] }
        );
    }

    #[test]
    fn weak_dominion_refutes_after_full_enumeration() {
        let m = presented(&["a"], &[("a a a a a a", "1")]);
        let square = Word::from_letters(vec![0, 0]);
        let outcome =
            weak_dominion_probe(&m, &[square], &Word::single(0), &WDomBounds::default());
        assert_eq!(outcome, WDomOutcome::NotInWDom);
    }

    #[test]
    fn weak_dominion_reports_unknown_on_exhausted_caps() {
        let m = presented(&["a"], &[("a a a a a a", "1")]);
        let gen = Word::single(0);

        let mut starved = WDomBounds::default();
        starved.completion.max_rules = 1;
        assert_eq!(
            weak_dominion_probe(&m, &[gen.clone()], &Word::single(0), &starved),
            WDomOutcome::Unknown
        );

        let mut short = WDomBounds::default();
        short.max_product_len = 0;
        assert_eq!(
            weak_dominion_probe(&m, &[gen.clone()], &Word::single(0), &short),
            WDomOutcome::Unknown
        );

        let mut tiny = WDomBounds::default();
        tiny.max_elements = 1;
        assert_eq!(
            weak_dominion_probe(&m, &[gen], &Word::from_letters(vec![0, 0, 0, 0]), &tiny),
            WDomOutcome::Unknown
        );
    }
}
