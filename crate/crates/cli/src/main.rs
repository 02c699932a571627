//! Command-line front end: parses presentation, table, sequence and cycle
//! files, drives the core algorithms, and prints one deterministic JSON
//! report per invocation.
//!
//! Every report embeds the tool version and an echo of the effective
//! configuration. Exit codes: 0 for a definite answer, 2 when a bounded
//! search or truncation was inconclusive, 1 on errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use squier_core::actions::{dominion, weak_dominion_probe, Submonoid, WDomBounds, WDomOutcome};
use squier_core::cells::{LoopSpec, TwoCell};
use squier_core::files::{
    parse_cycle, parse_monoid_table, parse_presentation, parse_y_sequence, Presentation,
};
use squier_core::homology::{homology, is_boundary, BoundaryOutcome};
use squier_core::peiffer::{
    reduce_primary, Congruence, ReduceOutcome, SequenceOp, Shift,
};
use squier_core::pride::{
    aspherical_probe, complex_parts, to_pride_system, GroupPresentation,
};
use squier_core::rewriting::{
    CompletionOptions, CompletionStatus, LocalConfluence, PairKind, Strategy, ThueOutcome,
};
use squier_core::truncation::DEFAULT_CELL_CAP;
use squier_core::{Edge, RewritingSystem, TruncatedComplex, Word};

#[derive(Parser)]
#[command(name = "squier", version, about = "rewriting complexes, homology and dominions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Rightmost,
}

#[derive(Subcommand)]
enum Command {
    /// Run Knuth-Bendix completion on a presentation.
    Complete {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        max_rules: usize,
        #[arg(long, default_value_t = 12)]
        max_lhs_len: usize,
        #[arg(long)]
        no_interreduce: bool,
    },
    /// Rewrite a word to normal form.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "leftmost")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
    /// List the critical pairs of a presentation.
    Pairs { file: PathBuf },
    /// Check local confluence on all words up to a length bound.
    Confluent {
        file: PathBuf,
        #[arg(long)]
        bound: usize,
        #[arg(long, default_value_t = 10_000)]
        max_states: usize,
    },
    /// Build a truncated complex and report its cell census.
    Build {
        file: PathBuf,
        #[arg(long)]
        truncate: usize,
        #[arg(long)]
        p_cells: Option<String>,
        #[arg(long)]
        three_cells: bool,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
        #[arg(long)]
        list: bool,
    },
    /// Compute one homology group of a truncated complex.
    Homology {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        truncate: usize,
        #[arg(long)]
        p_cells: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
    },
    /// Decide whether a 1-cycle bounds inside a truncated complex.
    BoundaryCheck {
        file: PathBuf,
        #[arg(long)]
        cycle: PathBuf,
        #[arg(long)]
        truncate: usize,
        #[arg(long, default_value_t = 2)]
        margin: usize,
        #[arg(long)]
        p_cells: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
    },
    /// Probe whether all short cycles of a group presentation bound.
    Aspherical {
        file: PathBuf,
        #[arg(long)]
        truncate: usize,
        #[arg(long, default_value_t = 2)]
        margin: usize,
        #[arg(long)]
        report: Option<String>,
    },
    /// Operations on Y-sequences.
    Peiffer {
        #[command(subcommand)]
        action: PeifferCommand,
    },
    /// Compute the dominion of a submonoid in a finite monoid.
    Dominion {
        table: PathBuf,
        #[arg(long)]
        sub: String,
    },
    /// Probe membership in the weak dominion of a finitely generated
    /// submonoid of a presented monoid.
    WdomProbe {
        file: PathBuf,
        #[arg(long)]
        sub_gens: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 200)]
        max_rules: usize,
        #[arg(long, default_value_t = 5_000)]
        max_elements: usize,
        #[arg(long, default_value_t = 16)]
        max_product_len: usize,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
}

#[derive(Subcommand)]
enum PeifferCommand {
    /// Reduce a primary Y-sequence to the empty sequence, with a trace.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        sequence: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

type Outcome = Result<(Value, Value, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli.command) {
        Ok((config, report, code)) => {
            let envelope = json!({
                "command": name,
                "config": config,
                "report": report,
                "version": env!("CARGO_PKG_VERSION"),
            });
            println!("{}", serde_json::to_string_pretty(&envelope).expect("plain data"));
            ExitCode::from(code)
        }
        Err(Failure(message)) => {
            let envelope = json!({
                "command": name,
                "error": { "message": message },
                "version": env!("CARGO_PKG_VERSION"),
            });
            println!("{}", serde_json::to_string_pretty(&envelope).expect("plain data"));
            ExitCode::from(1)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Complete { .. } => "complete",
        Command::Normalize { .. } => "normalize",
        Command::Pairs { .. } => "pairs",
        Command::Confluent { .. } => "confluent",
        Command::Build { .. } => "build",
        Command::Homology { .. } => "homology",
        Command::BoundaryCheck { .. } => "boundary-check",
        Command::Aspherical { .. } => "aspherical",
        Command::Peiffer { .. } => "peiffer-reduce",
        Command::Dominion { .. } => "dominion",
        Command::WdomProbe { .. } => "wdom-probe",
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    parse_presentation(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// The rewriting system of a presentation of either kind: a group file is
/// turned into its derived monoid system on generators and inverses.
fn load_system(path: &Path) -> Result<RewritingSystem, Failure> {
    Ok(match load_presentation(path)? {
        Presentation::Group(g) => to_pride_system(&g).system().clone(),
        Presentation::Monoid(m) => m,
    })
}

fn load_group(path: &Path) -> Result<GroupPresentation, Failure> {
    match load_presentation(path)? {
        Presentation::Group(g) => Ok(g),
        Presentation::Monoid(_) => {
            Err(Failure(format!("{}: expected a group presentation", path.display())))
        }
    }
}

/// The system and attached loop cells for complex-building commands. For
/// group files `p_cells` selects the `q` and `t` loop families; monoid
/// files carry no loop cells.
fn complex_input(
    path: &Path,
    p_cells: Option<&str>,
) -> Result<(RewritingSystem, Vec<LoopSpec>), Failure> {
    match load_presentation(path)? {
        Presentation::Group(g) => {
            let ps = to_pride_system(&g);
            let parts = complex_parts(&ps);
            let n_relators = g.relators().len();
            let (mut keep_q, mut keep_t) = (true, true);
            if let Some(spec) = p_cells {
                keep_q = false;
                keep_t = false;
                for family in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    match family {
                        "q" => keep_q = true,
                        "t" => keep_t = true,
                        other => {
                            return Err(Failure(format!(
                                "unknown loop family `{other}`, expected `q` or `t`"
                            )))
                        }
                    }
                }
            }
            let loops = parts
                .loops
                .into_iter()
                .enumerate()
                .filter(|(i, _)| if *i < n_relators { keep_q } else { keep_t })
                .map(|(_, spec)| spec)
                .collect();
            Ok((parts.system, loops))
        }
        Presentation::Monoid(m) => {
            if p_cells.is_some() {
                return Err(Failure(
                    "--p-cells only applies to group presentations".to_string(),
                ));
            }
            Ok((m, Vec::new()))
        }
    }
}

fn parse_cli_word(sys: &RewritingSystem, literal: &str) -> Result<Word, Failure> {
    sys.alphabet()
        .parse_word(literal)
        .map_err(|e| Failure(format!("word `{literal}`: {e}")))
}

fn edge_json(sys: &RewritingSystem, e: &Edge) -> Value {
    let al = sys.alphabet();
    json!({
        "left": al.format_word(&e.left),
        "rule": e.rule.0,
        "sign": e.sign.as_int(),
        "right": al.format_word(&e.right),
    })
}

fn two_cell_json(sys: &RewritingSystem, cell: &TwoCell) -> Value {
    let al = sys.alphabet();
    match cell {
        TwoCell::Square { e, f } => json!({
            "square": { "e": edge_json(sys, e), "f": edge_json(sys, f) }
        }),
        TwoCell::Loop { left, loop_id, right } => json!({
            "loop": {
                "left": al.format_word(left),
                "id": loop_id.0,
                "right": al.format_word(right),
            }
        }),
    }
}

fn census_json(cx: &TruncatedComplex) -> Value {
    let c = cx.census();
    json!({
        "n0": c.n0,
        "n1": c.n1,
        "n2_square": c.n2_square,
        "n2_p": c.n2_loop,
        "n3": c.n3,
    })
}

fn completion_status(status: CompletionStatus) -> &'static str {
    match status {
        CompletionStatus::Complete => "complete",
        CompletionStatus::RuleLimit => "rule-limit",
        CompletionStatus::LengthLimit => "length-limit",
        CompletionStatus::StateLimit => "state-limit",
    }
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Complete { file, max_rules, max_lhs_len, no_interreduce } => {
            let sys = load_system(file)?;
            let opts = CompletionOptions {
                max_rules: *max_rules,
                max_lhs_len: *max_lhs_len,
                interreduce: !no_interreduce,
                ..CompletionOptions::default()
            };
            let completion = sys.knuth_bendix(&opts);
            let al = completion.system.alphabet();
            let rules: Vec<Value> = completion
                .system
                .rules()
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id.0,
                        "lhs": al.format_word(&r.lhs),
                        "rhs": al.format_word(&r.rhs),
                    })
                })
                .collect();
            let config = json!({
                "file": file.display().to_string(),
                "max_rules": max_rules,
                "max_lhs_len": max_lhs_len,
                "interreduce": !no_interreduce,
            });
            let done = completion.status == CompletionStatus::Complete;
            let report = json!({
                "status": completion_status(completion.status),
                "rounds": completion.rounds,
                "rules": rules,
            });
            Ok((config, report, if done { 0 } else { 2 }))
        }
        Command::Normalize { file, word, strategy, max_steps } => {
            let sys = load_system(file)?;
            let w = parse_cli_word(&sys, word)?;
            let strat = match strategy {
                StrategyArg::Leftmost => Strategy::Leftmost,
                StrategyArg::Rightmost => Strategy::Rightmost,
            };
            let config = json!({
                "file": file.display().to_string(),
                "word": word,
                "strategy": match strategy { StrategyArg::Leftmost => "leftmost", StrategyArg::Rightmost => "rightmost" },
                "max_steps": max_steps,
            });
            match sys.normalize_with(&w, strat, *max_steps) {
                Ok(nf) => {
                    let report = json!({ "normal_form": sys.alphabet().format_word(&nf) });
                    Ok((config, report, 0))
                }
                Err(_) => {
                    let report = json!({ "normal_form": null, "steps_exceeded": true });
                    Ok((config, report, 2))
                }
            }
        }
        Command::Pairs { file } => {
            let sys = load_system(file)?;
            let al = sys.alphabet();
            let pairs: Vec<Value> = sys
                .critical_pairs()
                .iter()
                .map(|p| {
                    json!({
                        "word": al.format_word(&p.word),
                        "kind": match p.kind { PairKind::Inclusion => "inclusion", PairKind::Overlap => "overlap" },
                        "first": edge_json(&sys, &p.first),
                        "second": edge_json(&sys, &p.second),
                    })
                })
                .collect();
            let config = json!({ "file": file.display().to_string() });
            Ok((config, json!({ "pairs": pairs }), 0))
        }
        Command::Confluent { file, bound, max_states } => {
            let sys = load_system(file)?;
            let al = sys.alphabet();
            let config = json!({
                "file": file.display().to_string(),
                "bound": bound,
                "max_states": max_states,
            });
            match sys.newman_check(*bound, *max_states) {
                LocalConfluence::Confluent => {
                    Ok((config, json!({ "outcome": "confluent" }), 0))
                }
                LocalConfluence::Counterexample { word, first_nf, second_nf } => {
                    let report = json!({
                        "outcome": "counterexample",
                        "word": al.format_word(&word),
                        "first_nf": al.format_word(&first_nf),
                        "second_nf": al.format_word(&second_nf),
                    });
                    Ok((config, report, 0))
                }
                LocalConfluence::Inconclusive { word } => {
                    let report = json!({
                        "outcome": "inconclusive",
                        "word": al.format_word(&word),
                    });
                    Ok((config, report, 2))
                }
            }
        }
        Command::Build { file, truncate, p_cells, three_cells, max_cells, list } => {
            let (sys, loops) = complex_input(file, p_cells.as_deref())?;
            let cx = TruncatedComplex::build(
                sys,
                *truncate,
                loops,
                *three_cells,
                *max_cells,
            )?;
            let config = json!({
                "file": file.display().to_string(),
                "truncate": truncate,
                "p_cells": p_cells,
                "three_cells": three_cells,
                "max_cells": max_cells,
                "list": list,
            });
            let mut report = json!({ "census": census_json(&cx) });
            if *list {
                let sys = cx.system();
                let al = sys.alphabet();
                let words: Vec<String> =
                    cx.words().iter().map(|w| al.format_word(w)).collect();
                let edges: Vec<Value> =
                    cx.edges().iter().map(|e| edge_json(sys, e)).collect();
                let two_cells: Vec<Value> =
                    cx.two_cells().iter().map(|c| two_cell_json(sys, c)).collect();
                report["cells"] = json!({
                    "words": words,
                    "edges": edges,
                    "two_cells": two_cells,
                });
            }
            Ok((config, report, 0))
        }
        Command::Homology { file, dim, truncate, p_cells, max_cells } => {
            if !(1..=3).contains(dim) {
                return Err(Failure("--dim must be 1, 2 or 3".to_string()));
            }
            let (sys, loops) = complex_input(file, p_cells.as_deref())?;
            let cx = TruncatedComplex::build(sys, *truncate, loops, *dim == 3, *max_cells)?;
            let h = homology(&cx, *dim)?;
            let config = json!({
                "file": file.display().to_string(),
                "dim": dim,
                "truncate": truncate,
                "p_cells": p_cells,
                "max_cells": max_cells,
            });
            let torsion: Vec<String> = h.torsion.iter().map(|t| t.to_string()).collect();
            Ok((config, json!({ "betti": h.betti, "torsion": torsion }), 0))
        }
        Command::BoundaryCheck { file, cycle, truncate, margin, p_cells, max_cells } => {
            let (sys, loops) = complex_input(file, p_cells.as_deref())?;
            let z = parse_cycle(&sys, &read(cycle)?)
                .map_err(|e| Failure(format!("{}: {e}", cycle.display())))?;
            let cx = TruncatedComplex::build(sys, *truncate, loops, false, *max_cells)?;
            let config = json!({
                "file": file.display().to_string(),
                "cycle": cycle.display().to_string(),
                "truncate": truncate,
                "margin": margin,
                "p_cells": p_cells,
                "max_cells": max_cells,
            });
            let caveat = "a negative answer is definitive only for the truncation; \
                          it extends to the full complex only when the cycle keeps \
                          the stated margin below the length bound";
            match is_boundary(&cx, &z, *margin)? {
                BoundaryOutcome::Boundary { witness } => {
                    let terms: Vec<Value> = witness
                        .iter()
                        .map(|(cell, c)| {
                            json!({
                                "cell": two_cell_json(cx.system(), cell),
                                "coeff": c.to_string(),
                            })
                        })
                        .collect();
                    let report = json!({
                        "outcome": "boundary",
                        "witness": terms,
                        "caveat": caveat,
                    });
                    Ok((config, report, 0))
                }
                BoundaryOutcome::NotBoundaryInTruncation { inconclusive_for_infinite } => {
                    let report = json!({
                        "outcome": "not-a-boundary-in-truncation",
                        "inconclusive_for_infinite": inconclusive_for_infinite,
                        "caveat": caveat,
                    });
                    Ok((config, report, if inconclusive_for_infinite { 2 } else { 0 }))
                }
            }
        }
        Command::Aspherical { file, truncate, margin, report } => {
            if let Some(r) = report {
                if r != "cycles" {
                    return Err(Failure(format!("--report only supports `cycles`, got `{r}`")));
                }
            }
            let g = load_group(file)?;
            let probe = aspherical_probe(&g, *truncate, *margin)?;
            let config = json!({
                "file": file.display().to_string(),
                "truncate": truncate,
                "margin": margin,
                "report": report,
            });
            let mut out = json!({
                "bounded": probe.bounded,
                "unbounded_in_truncation": probe.unbounded_in_truncation,
                "verdict": probe.verdict.to_string(),
                "caveat": probe.caveat,
            });
            if report.is_some() {
                out["cycles"] = cycle_listing(&g, *truncate, *margin)?;
            }
            let code = if probe.unbounded_in_truncation == 0 { 0 } else { 2 };
            Ok((config, out, code))
        }
        Command::Peiffer { action } => {
            let PeifferCommand::Reduce { file, sequence, max_steps } = action;
            let g = load_group(file)?;
            let al = g.alphabet().clone();
            let seq = parse_y_sequence(&al, g.relators().len() as u32, &read(sequence)?)
                .map_err(|e| Failure(format!("{}: {e}", sequence.display())))?;
            let ps = to_pride_system(&g);
            let completion = ps.system().knuth_bendix(&CompletionOptions::default());
            let complete = completion.status == CompletionStatus::Complete;
            let nf_sys = completion.system;
            let congruent = |u: &Word, v: &Word| -> Congruence {
                if complete {
                    match (nf_sys.normalize(u, 100_000), nf_sys.normalize(v, 100_000)) {
                        (Ok(a), Ok(b)) if a == b => Congruence::Equal,
                        (Ok(_), Ok(_)) => Congruence::Distinct,
                        _ => Congruence::Unknown,
                    }
                } else {
                    match ps.system().thue_equivalent(u, v, 24, 50_000) {
                        ThueOutcome::Equivalent => Congruence::Equal,
                        ThueOutcome::NotFoundWithinBounds => Congruence::Unknown,
                    }
                }
            };
            let outcome =
                reduce_primary(&al, g.relators(), &seq, congruent, *max_steps);
            let config = json!({
                "file": file.display().to_string(),
                "sequence": sequence.display().to_string(),
                "max_steps": max_steps,
            });
            match outcome {
                ReduceOutcome::Reduced { trace } => {
                    let steps: Vec<Value> = trace
                        .iter()
                        .map(|op| match op {
                            SequenceOp::Exchange { at, dir } => json!({
                                "op": "exchange",
                                "at": at,
                                "dir": match dir { Shift::Left => "left", Shift::Right => "right" },
                            }),
                            SequenceOp::Delete { at } => json!({ "op": "delete", "at": at }),
                            SequenceOp::Insert { at, symbol } => json!({
                                "op": "insert",
                                "at": at,
                                "symbol": {
                                    "u": al.format_word(&symbol.u),
                                    "r": symbol.r.0,
                                    "sign": symbol.sign.as_int(),
                                },
                            }),
                        })
                        .collect();
                    Ok((config, json!({ "outcome": "reduced", "trace": steps }), 0))
                }
                ReduceOutcome::NoPairing => {
                    Ok((config, json!({ "outcome": "no-pairing" }), 0))
                }
                ReduceOutcome::Unknown => {
                    Ok((config, json!({ "outcome": "unknown" }), 2))
                }
            }
        }
        Command::Dominion { table, sub } => {
            let m = parse_monoid_table(&read(table)?)
                .map_err(|e| Failure(format!("{}: {e}", table.display())))?;
            let mut generators = Vec::new();
            for entry in sub.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let index = match entry.parse::<usize>() {
                    Ok(i) => i,
                    Err(_) => m
                        .element(entry)
                        .ok_or_else(|| Failure(format!("no element named `{entry}`")))?,
                };
                generators.push(index);
            }
            let u = Submonoid::generated(&m, &generators)?;
            let dom = dominion(&m, &u)?;
            let element = |&i: &usize| json!({ "index": i, "name": m.name(i) });
            let config = json!({
                "table": table.display().to_string(),
                "sub": sub,
            });
            let report = json!({
                "sub": u.elements().iter().map(element).collect::<Vec<_>>(),
                "dominion": dom.iter().map(element).collect::<Vec<_>>(),
            });
            Ok((config, report, 0))
        }
        Command::WdomProbe {
            file,
            sub_gens,
            word,
            max_rules,
            max_elements,
            max_product_len,
            max_steps,
        } => {
            let sys = load_system(file)?;
            let gens: Vec<Word> = sub_gens
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| parse_cli_word(&sys, s))
                .collect::<Result<_, _>>()?;
            let d = parse_cli_word(&sys, word)?;
            let bounds = WDomBounds {
                completion: CompletionOptions {
                    max_rules: *max_rules,
                    ..CompletionOptions::default()
                },
                max_elements: *max_elements,
                max_product_len: *max_product_len,
                step_limit: *max_steps,
            };
            let config = json!({
                "file": file.display().to_string(),
                "sub_gens": sub_gens,
                "word": word,
                "max_rules": max_rules,
                "max_elements": max_elements,
                "max_product_len": max_product_len,
                "max_steps": max_steps,
            });
            let report = match weak_dominion_probe(&sys, &gens, &d, &bounds) {
                WDomOutcome::InWDom { witness } => {
                    let factors: Vec<Value> = witness
                        .iter()
                        .map(|(i, s)| json!({ "generator": i, "sign": s.as_int() }))
                        .collect();
                    (json!({ "outcome": "in-wdom", "witness": factors }), 0)
                }
                WDomOutcome::NotInWDom => (json!({ "outcome": "not-in-wdom" }), 0),
                WDomOutcome::Unknown => (json!({ "outcome": "unknown" }), 2),
            };
            Ok((config, report.0, report.1))
        }
    }
}

/// Re-derives the probe's inner cycles, listing each with its boundedness
/// in the full complex.
fn cycle_listing(g: &GroupPresentation, truncate: usize, margin: usize) -> Result<Value, Failure> {
    use squier_core::homology::fundamental_cycles;

    let ps = to_pride_system(g);
    let parts = complex_parts(&ps);
    let cx = TruncatedComplex::build(
        parts.system.clone(),
        truncate,
        parts.loops,
        false,
        DEFAULT_CELL_CAP,
    )?;
    let inner = TruncatedComplex::build(
        parts.system,
        truncate.saturating_sub(margin),
        Vec::new(),
        false,
        DEFAULT_CELL_CAP,
    )?;
    let mut cycles = Vec::new();
    for z in fundamental_cycles(&inner) {
        let bounded = matches!(
            is_boundary(&cx, &z, 0).map_err(Failure::from)?,
            BoundaryOutcome::Boundary { .. }
        );
        let terms: Vec<Value> = z
            .iter()
            .map(|(e, c)| {
                json!({ "edge": edge_json(cx.system(), e), "coeff": c.to_string() })
            })
            .collect();
        cycles.push(json!({ "edges": terms, "bounded": bounded }));
    }
    Ok(Value::Array(cycles))
}
