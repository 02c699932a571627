//! Acceptance gate. Each test locks one shipped guarantee; expected values
//! are recomputed inside the test body by independent means before the
//! checked API is exercised.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use squier_core::actions::{dominion, FiniteMonoid, Submonoid};
use squier_core::cells::{boundary2, boundary3, TwoCell};
use squier_core::chains::FormalSum;
use squier_core::graph::{boundary1, Edge, Path, Sign};
use squier_core::homology::{boundary_matrix, connecting_image_rank, h1_inclusion_kernel_rank};
use squier_core::intmat::ColumnEchelon;
use squier_core::peiffer::{
    apply_op, is_identity_sequence, peiffer_delete, peiffer_exchange, peiffer_insert,
    reduce_primary, theta_eval, Congruence, ReduceOutcome, RelatorId, Shift, YSequence, YSymbol,
};
use squier_core::pride::{
    aspherical_probe, complex_parts, pride_pair, q_cycle, remark_ir_audit, to_pride_system,
    GroupPresentation, PrideSystem, Verdict,
};
use squier_core::rewriting::{
    CompletionOptions, CompletionStatus, LocalConfluence, RewritingSystem,
};
use squier_core::truncation::{TruncatedComplex, DEFAULT_CELL_CAP};
use squier_core::words::{Alphabet, Letter, Word};

fn group(gens: &[&str], relators: &[&str]) -> GroupPresentation {
    let al = Alphabet::free_group(gens).expect("generator names are valid");
    let rels = relators.iter().map(|r| al.parse_word(r).expect("relator parses")).collect();
    GroupPresentation::new(al, rels, None).expect("presentation is valid")
}

fn test_systems() -> Vec<PrideSystem> {
    vec![
        to_pride_system(&group(&["x"], &["x"])),
        to_pride_system(&group(&["x", "y"], &["x", "y"])),
        to_pride_system(&group(&["x"], &["x x x"])),
    ]
}

fn monoid_system(letters: &[&str], rules: &[(&str, &str)]) -> RewritingSystem {
    let al = Alphabet::new(letters).expect("letter names are valid");
    let rules: Vec<(Word, Word)> = rules
        .iter()
        .map(|(l, r)| (al.parse_word(l).expect("lhs parses"), al.parse_word(r).expect("rhs parses")))
        .collect();
    RewritingSystem::new(al, &rules).expect("rules are valid")
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len()).map(|i| self.find(i)).collect::<BTreeSet<_>>().len()
    }
}

fn ball(al: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..al.len() as Letter {
                let v = w.concat(&Word::single(l));
                next.push(v.clone());
                out.push(v);
            }
        }
        layer = next;
    }
    out
}

fn reduced_words_up_to(al: &Alphabet, max_len: usize) -> Vec<Word> {
    ball(al, max_len).into_iter().filter(|w| al.is_reduced(w).expect("paired alphabet")).collect()
}

fn rewrite_targets(w: &Word, lhs: &Word, rhs: &Word) -> Vec<Word> {
    let wl = w.letters();
    let pl = lhs.letters();
    let mut out = Vec::new();
    if pl.is_empty() || pl.len() > wl.len() {
        return out;
    }
    for p in 0..=wl.len() - pl.len() {
        if &wl[p..p + pl.len()] == pl {
            let mut v = wl[..p].to_vec();
            v.extend_from_slice(rhs.letters());
            v.extend_from_slice(&wl[p + pl.len()..]);
            out.push(Word::from_letters(v));
        }
    }
    out
}

fn chain_vector(cx: &TruncatedComplex, z: &FormalSum<Edge>) -> BTreeMap<usize, BigInt> {
    z.iter()
        .map(|(e, c)| (cx.edge_index(e).expect("chain lies in the truncation"), c.clone()))
        .collect()
}

fn assert_exact_witness(
    cx: &TruncatedComplex,
    witness: &BTreeMap<usize, BigInt>,
    target: &FormalSum<Edge>,
) {
    let mut total = FormalSum::zero();
    for (&col, coeff) in witness {
        let cell = &cx.two_cells()[col];
        let d = boundary2(cx.system(), cx.loops(), cell).expect("cell from this complex");
        total.add(&d.scaled(coeff.clone()));
    }
    assert!(total.minus(target).is_zero(), "witness boundary must equal the target chain");
}

fn ambient_len(sys: &RewritingSystem, e: &Edge) -> usize {
    e.start(sys).len().max(e.end(sys).len())
}

fn random_reduced_word(al: &Alphabet, len: usize, rng: &mut ChaCha8Rng) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    while out.len() < len {
        let l = rng.gen_range(0..al.len() as Letter);
        if let (Some(&last), Some(inv)) = (out.last(), al.inverse_letter(l)) {
            if last == inv {
                continue;
            }
        }
        out.push(l);
    }
    Word::from_letters(out)
}

fn random_word(al: &Alphabet, max_len: usize, rng: &mut ChaCha8Rng) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::from_letters((0..len).map(|_| rng.gen_range(0..al.len() as Letter)).collect())
}

fn random_positive_path(
    sys: &RewritingSystem,
    from: Word,
    max_steps: usize,
    rng: &mut ChaCha8Rng,
) -> Path {
    let mut cur = from.clone();
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(1..=max_steps) {
        let out = sys.edges_from(&cur);
        if out.is_empty() {
            break;
        }
        let e = out[rng.gen_range(0..out.len())].clone();
        cur = e.end(sys);
        edges.push(e);
    }
    if edges.is_empty() {
        Path::identity(from)
    } else {
        Path::from_edges(sys, edges).expect("consecutive edges form a path")
    }
}

fn random_symbol(al: &Alphabet, n_relators: u32, rng: &mut ChaCha8Rng) -> YSymbol {
    YSymbol::new(
        al,
        &random_reduced_word(al, rng.gen_range(0..=2), rng),
        RelatorId(rng.gen_range(0..n_relators)),
        if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus },
    )
}

#[test]
fn criterion_1_boundaries_compose_to_zero_on_every_cell() {
    for ps in test_systems() {
        let parts = complex_parts(&ps);
        let cx =
            TruncatedComplex::build(parts.system, 5, parts.loops, true, DEFAULT_CELL_CAP)
                .expect("complex fits the cap");
        let census = cx.census();
        assert!(census.n2_square > 0 && census.n2_loop > 0 && census.n3 > 0);
        for cell in cx.two_cells() {
            let d2 = boundary2(cx.system(), cx.loops(), cell).expect("cell from this complex");
            assert!(boundary1(cx.system(), &d2).is_zero());
        }
        for three in cx.three_cells() {
            let d3 = boundary3(cx.system(), cx.loops(), three).expect("cell from this complex");
            let dd = d3.flat_map(|c| {
                boundary2(cx.system(), cx.loops(), c).expect("boundary cell from this complex")
            });
            assert!(dd.is_zero());
        }
    }
}

#[test]
fn criterion_2_completion_matches_brute_congruence_and_corpus_stays_confluent() {
    let c3 = monoid_system(&["a", "A"], &[("a a a", "1"), ("a A", "1"), ("A a", "1")]);
    // Equivalence steps may pass through words longer than the counted ball,
    // so the closure runs over radius 9 while classes are counted among the
    // words of length at most 6.
    let closure = ball(c3.alphabet(), 9);
    let index: BTreeMap<Word, usize> =
        closure.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::new(closure.len());
    for (i, w) in closure.iter().enumerate() {
        for rule in c3.rules() {
            for target in rewrite_targets(w, &rule.lhs, &rule.rhs) {
                uf.union(i, index[&target]);
            }
        }
    }
    let counted: Vec<usize> =
        closure.iter().enumerate().filter(|(_, w)| w.len() <= 6).map(|(i, _)| i).collect();
    let brute = counted.iter().map(|&i| uf.find(i)).collect::<BTreeSet<_>>().len();

    let done = c3.knuth_bendix(&CompletionOptions::default());
    assert_eq!(done.status, CompletionStatus::Complete);
    let normal_forms: BTreeSet<Word> = counted
        .iter()
        .map(|&i| done.system.normalize(&closure[i], 10_000).expect("completed system terminates"))
        .collect();
    assert_eq!(normal_forms.len(), brute);
    assert_eq!(brute, 3);

    let corpus: Vec<(&str, RewritingSystem)> = vec![
        ("a2", monoid_system(&["a"], &[("a a", "1")])),
        ("a3", monoid_system(&["a"], &[("a a a", "1")])),
        ("a4", monoid_system(&["a"], &[("a a a a", "1")])),
        ("a5", monoid_system(&["a"], &[("a a a a a", "1")])),
        ("a6", monoid_system(&["a"], &[("a a a a a a", "1")])),
        ("c3", c3),
        ("bicyclic", monoid_system(&["p", "q"], &[("p q", "1")])),
        ("commuting", monoid_system(&["a", "b"], &[("b a", "a b")])),
        ("free-x", to_pride_system(&group(&["x"], &[])).system().clone()),
        ("trivial-x", to_pride_system(&group(&["x"], &["x"])).system().clone()),
    ];
    assert!(corpus.len() >= 10);
    for (name, sys) in &corpus {
        let done = sys.knuth_bendix(&CompletionOptions::default());
        assert_eq!(done.status, CompletionStatus::Complete, "completion of {name}");
        match done.system.newman_check(6, 50_000) {
            LocalConfluence::Confluent => {}
            other => panic!("{name} is not confluent after completion: {other:?}"),
        }
    }
}

#[test]
fn criterion_3_relator_cycles_close_and_their_translates_bound() {
    for ps in test_systems() {
        let sys = ps.system();
        let al = ps.alphabet();
        let n_relators = ps.presentation().relators().len() as u32;

        for r in 0..n_relators {
            for u in reduced_words_up_to(al, 3) {
                let z = q_cycle(&ps, RelatorId(r), &u);
                assert!(boundary1(sys, &z).is_zero());
            }
        }

        let parts = complex_parts(&ps);
        let mut solvers: BTreeMap<usize, (TruncatedComplex, ColumnEchelon)> = BTreeMap::new();
        for r in 0..n_relators {
            let r_len = ps.relator_word(RelatorId(r)).len();
            let base = q_cycle(&ps, RelatorId(r), &Word::empty());
            for u in reduced_words_up_to(al, 2) {
                let u_inv = al.formal_inverse(&u).expect("paired alphabet");
                let translated = base.map_keys(|e| e.translate(&u, &u_inv));
                let diff = translated.minus(&q_cycle(&ps, RelatorId(r), &u));
                if diff.is_zero() {
                    continue;
                }
                let needed = diff.support().map(|e| ambient_len(sys, e)).max().unwrap();
                let target = needed.max(u.len() + r_len + 4);
                let mut bounded = false;
                for len in needed..=target {
                    let entry = solvers.entry(len).or_insert_with(|| {
                        let cx = TruncatedComplex::build(
                            parts.system.clone(),
                            len,
                            parts.loops.clone(),
                            false,
                            DEFAULT_CELL_CAP,
                        )
                        .expect("complex fits the cap");
                        let solver =
                            ColumnEchelon::from_matrix(&boundary_matrix(&cx, 2), true);
                        (cx, solver)
                    });
                    let (cx, solver) = (&entry.0, &entry.1);
                    if let Some(witness) = solver.solve(&chain_vector(cx, &diff)) {
                        assert_exact_witness(cx, &witness, &diff);
                        bounded = true;
                        break;
                    }
                }
                assert!(bounded, "translate difference must bound within length {target}");
            }
        }
    }
}

#[test]
fn criterion_4_translated_path_rectangles_bound_with_squares_only() {
    let ps = to_pride_system(&group(&["x"], &["x"]));
    let sys = ps.system().clone();
    let cx = TruncatedComplex::build(sys.clone(), 6, Vec::new(), false, DEFAULT_CELL_CAP)
        .expect("complex fits the cap");
    assert!(cx.loop_cells().is_empty());
    let solver = ColumnEchelon::from_matrix(&boundary_matrix(&cx, 2), true);

    let mut rng = ChaCha8Rng::seed_from_u64(0x5153);
    let mut checked = 0;
    while checked < 50 {
        let a = random_positive_path(&sys, random_word(sys.alphabet(), 3, &mut rng), 3, &mut rng);
        let b = random_positive_path(&sys, random_word(sys.alphabet(), 3, &mut rng), 3, &mut rng);
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let empty = Word::empty();
        let a_end = a.end(&sys);
        let b_end = b.end(&sys);
        let first = a
            .translate(&empty, b.start())
            .compose(&sys, &b.translate(&a_end, &empty))
            .expect("translates compose");
        let second = b
            .translate(a.start(), &empty)
            .compose(&sys, &a.translate(&empty, &b_end))
            .expect("translates compose");
        let diff = first.chain().minus(&second.chain());
        checked += 1;
        if diff.is_zero() {
            continue;
        }
        let witness = solver.solve(&chain_vector(&cx, &diff)).expect("square witness exists");
        for &col in witness.keys() {
            assert!(matches!(cx.two_cells()[col], TwoCell::Square { .. }));
        }
        assert_exact_witness(&cx, &witness, &diff);
    }
}

#[test]
fn criterion_5_identity_sequences_reduce_and_theta_is_invariant() {
    let ps = to_pride_system(&group(&["x", "y"], &["x", "y"]));
    let al = ps.alphabet().clone();
    let relators: Vec<Word> = ps.presentation().relators().to_vec();
    let n_relators = relators.len() as u32;
    let done = ps.system().knuth_bendix(&CompletionOptions::default());
    assert_eq!(done.status, CompletionStatus::Complete);
    let oracle = done.system;

    for seed in 0..25u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF + seed);
        let mut s: YSequence = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let sym = random_symbol(&al, n_relators, &mut rng);
            let at = rng.gen_range(0..=s.len());
            s = peiffer_insert(&s, at, &sym).expect("insert position in range");
        }
        if rng.gen_bool(0.5) {
            let at = rng.gen_range(0..s.len() - 1);
            let dir = if rng.gen_bool(0.5) { Shift::Left } else { Shift::Right };
            s = peiffer_exchange(&al, &relators, &s, at, dir).expect("exchange applies");
        }
        assert!(s.len() <= 6);
        assert!(is_identity_sequence(&al, &relators, &s).expect("symbols are valid"));

        let congruent = |u: &Word, v: &Word| match (
            oracle.normalize(u, 10_000),
            oracle.normalize(v, 10_000),
        ) {
            (Ok(a), Ok(b)) => {
                if a == b {
                    Congruence::Equal
                } else {
                    Congruence::Distinct
                }
            }
            _ => Congruence::Unknown,
        };
        match reduce_primary(&al, &relators, &s, congruent, 20_000) {
            ReduceOutcome::Reduced { trace } => {
                let mut state = s.clone();
                for op in &trace {
                    state = apply_op(&al, &relators, &state, op).expect("trace replays");
                }
                assert!(state.is_empty());
            }
            other => panic!("sequence for seed {seed} did not reduce: {other:?}"),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x7E7A);
    let mut s: YSequence = Vec::new();
    for _ in 0..3 {
        let sym = random_symbol(&al, n_relators, &mut rng);
        s = peiffer_insert(&s, rng.gen_range(0..=s.len()), &sym).expect("insert position in range");
    }
    let theta = theta_eval(&al, &relators, &s).expect("symbols are valid");
    assert!(theta.is_empty());
    // Exchange twists can double a conjugator, so unrestricted fuzzing grows
    // words exponentially; oversized results are skipped instead.
    let mut performed = 0;
    let mut attempts = 0;
    while performed < 1_000 {
        attempts += 1;
        assert!(attempts < 50_000, "fuzz must keep finding applicable operations");
        let deletable: Vec<usize> =
            (0..s.len().saturating_sub(1)).filter(|&i| s[i].cancels(&s[i + 1])).collect();
        let kind = rng.gen_range(0..4u8);
        let next = if kind == 3 && !deletable.is_empty() {
            peiffer_delete(&s, deletable[rng.gen_range(0..deletable.len())])
                .expect("pair cancels")
        } else if kind == 2 && s.len() < 12 {
            let sym = random_symbol(&al, n_relators, &mut rng);
            peiffer_insert(&s, rng.gen_range(0..=s.len()), &sym).expect("insert position in range")
        } else if s.len() >= 2 {
            let at = rng.gen_range(0..s.len() - 1);
            let dir = if rng.gen_bool(0.5) { Shift::Left } else { Shift::Right };
            let swapped = peiffer_exchange(&al, &relators, &s, at, dir).expect("exchange applies");
            if swapped.iter().any(|sym| sym.u.len() > 24) {
                continue;
            }
            swapped
        } else {
            continue;
        };
        assert_eq!(theta_eval(&al, &relators, &next).expect("symbols stay valid"), theta);
        s = next;
        performed += 1;
    }
}

fn perm_compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    (0..q.len()).map(|i| p[q[i]]).collect()
}

fn perm_monoid(n: usize, gens: &[Vec<usize>]) -> FiniteMonoid {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for g in gens {
                let q = perm_compose(p, g);
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    let elems: Vec<Vec<usize>> = seen.into_iter().collect();
    let names =
        elems.iter().map(|p| p.iter().map(|d| d.to_string()).collect::<String>()).collect();
    let rows = elems
        .iter()
        .map(|p| {
            elems
                .iter()
                .map(|q| {
                    elems.binary_search(&perm_compose(p, q)).expect("closed under composition")
                })
                .collect()
        })
        .collect();
    FiniteMonoid::new(names, rows).expect("composition table is a monoid")
}

fn cyclic_monoid(n: usize) -> FiniteMonoid {
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteMonoid::new(names, rows).expect("addition table is a monoid")
}

#[test]
fn criterion_6_dominions_of_subgroups_are_exact() {
    let cyclic_subgroup_counts = [1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6];
    let mut corpus: Vec<(String, FiniteMonoid, usize)> = Vec::new();
    for (n, &count) in (1..=12).zip(cyclic_subgroup_counts.iter()) {
        corpus.push((format!("c{n}"), cyclic_monoid(n), count));
    }
    let s3 = perm_monoid(3, &[vec![1, 0, 2], vec![0, 2, 1]]);
    assert_eq!(s3.len(), 6);
    corpus.push(("s3".into(), s3, 6));
    let d4 = perm_monoid(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]);
    assert_eq!(d4.len(), 8);
    corpus.push(("d4".into(), d4, 10));
    let a4 = perm_monoid(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]);
    assert_eq!(a4.len(), 12);
    corpus.push(("a4".into(), a4, 10));

    for (name, m, expected_subgroups) in &corpus {
        let mut subgroups: BTreeSet<Vec<usize>> = BTreeSet::new();
        for a in 0..m.len() {
            for b in a..m.len() {
                let gens = if a == b { vec![a] } else { vec![a, b] };
                let u = Submonoid::generated(m, &gens).expect("generators in range");
                subgroups.insert(u.elements().to_vec());
            }
        }
        assert_eq!(subgroups.len(), *expected_subgroups, "subgroup count of {name}");
        for elements in &subgroups {
            let u = Submonoid::new(m, elements).expect("closures are submonoids");
            assert_eq!(&dominion(m, &u).expect("corpus pair"), elements, "dominion in {name}");
        }
    }

    let null3 = FiniteMonoid::new(
        vec!["e".into(), "a".into(), "z".into()],
        vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
    )
    .expect("table is a monoid");
    let band = FiniteMonoid::new(vec!["e".into(), "f".into()], vec![vec![0, 1], vec![1, 1]])
        .expect("table is a monoid");
    let mut monoids: Vec<&FiniteMonoid> = corpus.iter().map(|(_, m, _)| m).collect();
    monoids.push(&null3);
    monoids.push(&band);
    for m in monoids {
        let everything: Vec<usize> = (0..m.len()).collect();
        let full = Submonoid::new(m, &everything).expect("full set is a submonoid");
        assert_eq!(dominion(m, &full).expect("corpus pair"), everything);
        let trivial = Submonoid::new(m, &[m.identity()]).expect("identity is a submonoid");
        assert_eq!(dominion(m, &trivial).expect("corpus pair"), vec![m.identity()]);
    }
}

#[test]
fn criterion_7_long_exact_sequence_ranks_agree() {
    let ps = to_pride_system(&group(&["x", "y"], &["x", "y"]));
    let (total_parts, sub_parts) = pride_pair(&ps, &[0]).expect("relator 0 exists");
    let total =
        TruncatedComplex::build(total_parts.system, 5, total_parts.loops, false, DEFAULT_CELL_CAP)
            .expect("complex fits the cap");
    let sub = TruncatedComplex::build(sub_parts.system, 5, sub_parts.loops, false, DEFAULT_CELL_CAP)
        .expect("complex fits the cap");
    let kernel = h1_inclusion_kernel_rank(&total, &sub).expect("sub embeds");
    let connecting = connecting_image_rank(&total, &sub).expect("sub embeds");
    assert_eq!(kernel, connecting);
    assert!(kernel > 0, "the dropped relator must be visible at this truncation");
}

#[test]
fn criterion_8_probe_counts_match_an_independent_cycle_census() {
    let g = group(&["x"], &["x"]);
    let ps = to_pride_system(&g);
    let sys = ps.system();
    let inner = ball(ps.alphabet(), 4);
    let index: BTreeMap<Word, usize> =
        inner.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::new(inner.len());
    let mut edge_count = 0usize;
    for (i, w) in inner.iter().enumerate() {
        for rule in sys.rules() {
            for target in rewrite_targets(w, &rule.lhs, &rule.rhs) {
                edge_count += 1;
                uf.union(i, index[&target]);
            }
        }
    }
    let independent = edge_count + uf.classes() - inner.len();
    assert_eq!(independent, 102);

    let report = aspherical_probe(&g, 6, 2).expect("complex fits the cap");
    assert_eq!(report.bounded + report.unbounded_in_truncation, independent);
    assert_eq!(report.unbounded_in_truncation, 0);
    assert_eq!(report.verdict, Verdict::Consistent);
    assert_eq!(report.verdict.to_string(), "consistent");
    let again = aspherical_probe(&g, 6, 2).expect("complex fits the cap");
    assert_eq!(report, again);
    assert_eq!(format!("{report:?}"), format!("{again:?}"));
}

#[test]
fn criterion_9_audit_pairs_appear_among_critical_pairs() {
    for ps in test_systems() {
        let evidence = remark_ir_audit(&ps).expect("audit succeeds");
        let n_relators = ps.presentation().relators().len() as u32;
        let n_letters = ps.alphabet().len() as u32;
        let expected: BTreeSet<u32> = (0..n_relators + n_letters).collect();
        let got: BTreeSet<u32> = evidence.iter().map(|ev| ev.loop_id.0).collect();
        assert_eq!(got, expected);
        let pairs = ps.system().critical_pairs();
        for ev in &evidence {
            assert!(pairs.contains(&ev.pair), "audit pair must occur among the critical pairs");
            assert_eq!(ev.word, ev.pair.word);
        }
    }
}
