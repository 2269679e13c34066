//! `poirev`: revise, check, enumerate and search from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when a witness or failing
//! fixture is found, 2 on usage or input errors and inconclusive runs.

use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use poirev_core::exec::Execution;
use poirev_core::harness::{
    builtin_fixtures, campaign, run_fixture, search_countermodel, Family, Fixture, SearchOutcome, Verdict,
};
use poirev_core::limits::Limits;
use poirev_core::logic::{WorldSet, WorldSpace};
use poirev_core::operators::RevisionOperator;
use poirev_core::orders::{enumerate_pois, enumerate_tpos, State};
use poirev_core::postulates::{overrules, strictly_overrules, Checker, PostulateId};
use poirev_core::text::{
    format_poi, format_state, format_tpo, poi_names, space_for, tpo_names, OperatorFile, StateRepr, WitnessJson,
};

#[derive(Parser)]
#[command(name = "poirev", version, about = "Iterated belief revision over finite world spaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for exhaustive checks; 1 runs sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Abstract,
    Propositional,
}

#[derive(clap::Args, Clone, Default)]
struct StateArgs {
    /// World space; propositional needs --atoms.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Comma-separated atoms; worlds become valuation bitstrings.
    #[arg(long, value_delimiter = ',')]
    atoms: Option<Vec<String>>,
    /// Prior TPO, e.g. "x y | z".
    #[arg(long, conflicts_with = "poi")]
    tpo: Option<String>,
    /// Prior POI assignment, e.g. "x:+0,-1 y:+1,-3".
    #[arg(long)]
    poi: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Revise a state by a sequence of sentences.
    Revise {
        #[command(flatten)]
        state: StateArgs,
        /// natural, lex, restrained, revlex, poi-circ, poi, or fixture:<file>.
        #[arg(long)]
        op: String,
        #[arg(required = true)]
        sentences: Vec<String>,
    },
    /// Check postulates on one state or on every state of a family.
    Check {
        #[command(flatten)]
        state: StateArgs,
        /// Operator for a single state.
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        op: Option<String>,
        /// Check every state of this family.
        #[arg(long)]
        family: Vec<String>,
        /// World count for --family.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(required = true)]
        postulates: Vec<String>,
    },
    /// Run the bundled countermodel fixtures.
    Fixtures {
        /// Run only fixtures whose name contains this text.
        filter: Option<String>,
        /// Additional fixture files.
        #[arg(long)]
        file: Vec<PathBuf>,
    },
    /// Count (and optionally list) TPOs or POI assignments.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Search a family for the first countermodel to a postulate.
    Search {
        postulate: String,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Maximum number of instances to evaluate.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Whether B overrules A after revising by A.
    Overrules {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long)]
        op: String,
        a: String,
        b: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Tpo,
    Poi,
}

type Res<T> = Result<T, Box<dyn Error>>;

fn usage(msg: impl Into<String>) -> Box<dyn Error> {
    msg.into().into()
}

/// A state together with the operator to apply to it.
struct Setup {
    space: WorldSpace,
    state: State,
    op: RevisionOperator,
}

fn setup(args: &StateArgs, op: &str) -> Res<Setup> {
    if args.mode == Some(Mode::Propositional) && args.atoms.is_none() {
        return Err(usage("--mode propositional needs --atoms"));
    }
    if args.mode == Some(Mode::Abstract) && args.atoms.is_some() {
        return Err(usage("--atoms selects propositional mode; drop --mode abstract"));
    }
    if let Some(path) = op.strip_prefix("fixture:") {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
        let (space, op) = OperatorFile::load(&text)?;
        let RevisionOperator::Fixture(f) = &op else { unreachable!() };
        let state = match state_from(args, Some(&space))? {
            Some((_, s)) => s,
            None => f.prior.clone().into(),
        };
        return Ok(Setup { space, state, op });
    }
    let op = RevisionOperator::from_name(op).ok_or_else(|| usage(format!("unknown operator `{op}`")))?;
    let (space, state) = state_from(args, None)?.ok_or_else(|| usage("give a prior with --tpo or --poi"))?;
    if op.needs_poi() && state.poi().is_none() {
        return Err(usage(format!("operator `{op}` needs a POI prior (--poi)")));
    }
    Ok(Setup { space, state, op })
}

fn state_from(args: &StateArgs, space: Option<&WorldSpace>) -> Res<Option<(WorldSpace, State)>> {
    let (text, names) = match (&args.tpo, &args.poi) {
        (Some(t), _) => (t, tpo_names(t)),
        (None, Some(p)) => (p, poi_names(p)?),
        (None, None) => return Ok(None),
    };
    let space = match space {
        Some(s) => s.clone(),
        None => space_for(args.atoms.as_deref(), &names)?,
    };
    let repr = StateRepr::Text(text.clone());
    let state = if args.poi.is_some() && !text.contains(':') {
        return Err(usage("--poi expects name:+p,-q entries"));
    } else {
        repr.resolve(&space)?
    };
    Ok(Some((space, state)))
}

fn execution(jobs: Option<usize>) -> Res<Execution> {
    match jobs {
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(1) => Ok(Execution::Sequential),
        Some(_k) => {
            #[cfg(feature = "parallel")]
            rayon::ThreadPoolBuilder::new().num_threads(_k).build_global().map_err(|e| usage(e.to_string()))?;
            Ok(Execution::Parallel)
        }
        None => Ok(Execution::Parallel),
    }
}

fn postulates(ids: &[String]) -> Res<Vec<PostulateId>> {
    ids.iter().map(|s| s.parse::<PostulateId>().map_err(Into::into)).collect()
}

fn print_json<T: Serialize>(v: &T) -> Res<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

#[derive(Serialize)]
struct Step {
    input: String,
    models: Vec<String>,
    posterior: String,
    levels: StateRepr,
    beliefs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    success: Option<bool>,
}

fn cmd_revise(f: Format, args: &StateArgs, op: &str, sentences: &[String]) -> Res<u8> {
    let Setup { space, state, op } = setup(args, op)?;
    let mut current = state;
    let mut steps = Vec::new();
    for (i, text) in sentences.iter().enumerate() {
        let a = space.parse_models(text)?;
        if a.is_empty() {
            return Err(usage(format!("`{text}` is inconsistent; revision inputs must have a model")));
        }
        if i > 0 && op.needs_poi() {
            return Err(usage(format!(
                "step {}: `{op}` needs an interval assignment, but revision only yields a posterior TPO; \
                 the posterior assignment is left undetermined",
                i + 1
            )));
        }
        let post = op.revise(&current, a)?;
        let beliefs = post.bottom();
        steps.push(Step {
            input: text.clone(),
            models: space.set_names(a),
            posterior: format_tpo(&space, &post),
            levels: StateRepr::tpo(&space, &post),
            beliefs: space.set_names(beliefs),
            success: (!op.has_success()).then(|| beliefs.is_subset(a)),
        });
        current = post.into();
    }
    match f {
        Format::Json => print_json(&serde_json::json!({ "operator": op.to_string(), "steps": steps }))?,
        Format::Text => {
            for (i, s) in steps.iter().enumerate() {
                println!("step {}: revise by {}", i + 1, s.input);
                println!("  posterior: {}", s.posterior);
                println!("  beliefs:   {{{}}}", s.beliefs.join(", "));
                if let Some(ok) = s.success {
                    println!("  success:   {}", if ok { "yes" } else { "no" });
                }
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct StateCheck {
    postulate: PostulateId,
    label: &'static str,
    verdict: Verdict,
    instances: u64,
    skipped_instances: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
}

fn print_witness(w: &WitnessJson) {
    println!("  state:    {}", state_line(&w.state));
    println!("  bindings: {}", w.bindings_text());
    for t in &w.trace {
        println!("    {} {}", if t.value { "true " } else { "false" }, t.condition);
    }
}

fn state_line(s: &StateRepr) -> String {
    match s {
        StateRepr::Text(t) => t.clone(),
        StateRepr::Levels { levels } => levels.iter().map(|l| l.join(" ")).collect::<Vec<_>>().join(" | "),
        StateRepr::Poi { poi } => poi.iter().map(|(k, [p, m])| format!("{k}:+{p},-{m}")).collect::<Vec<_>>().join(" "),
    }
}

fn cmd_check(
    f: Format,
    exec: Execution,
    args: &StateArgs,
    op: Option<&str>,
    families: &[String],
    n: usize,
    ids: &[String],
) -> Res<u8> {
    let ids = postulates(ids)?;
    let limits = Limits::from_env();
    if let Some(op) = op {
        let Setup { space, state, op } = setup(args, op)?;
        let cx = Checker::new(&op, &state)?;
        let mut rows = Vec::new();
        for &p in &ids {
            let row = match cx.verify(p, exec, &limits) {
                Ok(v) => StateCheck {
                    postulate: p,
                    label: p.label(),
                    verdict: if v.witness.is_some() { Verdict::Witness } else { Verdict::Holds },
                    instances: v.checked,
                    skipped_instances: v.skipped,
                    witness: v.witness.as_ref().map(|w| WitnessJson::new(&space, w)),
                },
                Err(poirev_core::postulates::CheckError::NotApplicable(_)) => StateCheck {
                    postulate: p,
                    label: p.label(),
                    verdict: Verdict::Skipped,
                    instances: 0,
                    skipped_instances: 0,
                    witness: None,
                },
                Err(e) => return Err(e.into()),
            };
            rows.push(row);
        }
        match f {
            Format::Json => print_json(&serde_json::json!({
                "operator": op.to_string(),
                "state": StateRepr::state(&space, &state),
                "results": rows,
            }))?,
            Format::Text => {
                println!("{op} on {}", format_state(&space, &state));
                for r in &rows {
                    let v = match r.verdict {
                        Verdict::Holds => "holds",
                        Verdict::Witness => "WITNESS",
                        Verdict::Skipped => "skipped",
                    };
                    println!(
                        "{v:8} {} ({}): {} instances, {} skipped",
                        r.label, r.postulate, r.instances, r.skipped_instances
                    );
                    if let Some(w) = &r.witness {
                        print_witness(w);
                    }
                }
            }
        }
        return Ok(exit_for(rows.iter().map(|r| r.verdict)));
    }
    let families = families.iter().map(|s| s.parse::<Family>()).collect::<Result<Vec<_>, _>>()?;
    let report = campaign(&families, n, &ids, exec, &limits)?;
    match f {
        Format::Json => print_json(&report)?,
        Format::Text => {
            for r in &report.rows {
                let v = match r.verdict {
                    Verdict::Holds => "holds",
                    Verdict::Witness => "WITNESS",
                    Verdict::Skipped => "skipped",
                };
                println!(
                    "{v:8} {} n={} {} ({}): {}/{} states fail, {} instances",
                    r.family, r.n, r.label, r.postulate, r.failing_states, r.states, r.instances
                );
                if let Some(w) = &r.witness {
                    print_witness(w);
                }
                if let Some(reason) = &r.reason {
                    println!("  {reason}");
                }
            }
            println!("wall time: {:.1} ms", report.wall_ms);
        }
    }
    Ok(exit_for(report.rows.iter().map(|r| r.verdict)))
}

fn exit_for(verdicts: impl Iterator<Item = Verdict>) -> u8 {
    let mut code = 0;
    for v in verdicts {
        code = code.max(match v {
            Verdict::Holds => 0,
            Verdict::Witness => 1,
            Verdict::Skipped => 2,
        });
    }
    code
}

fn cmd_fixtures(f: Format, filter: Option<&str>, files: &[PathBuf]) -> Res<u8> {
    let mut fixtures = builtin_fixtures();
    for path in files {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        fixtures.push(serde_json::from_str::<Fixture>(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?);
    }
    if let Some(needle) = filter {
        let needle = needle.to_lowercase();
        fixtures.retain(|fx| fx.name.to_lowercase().contains(&needle));
        if fixtures.is_empty() {
            return Err(usage(format!("no fixture matches `{needle}`")));
        }
    }
    let limits = Limits::from_env();
    let reports: Vec<_> = fixtures.iter().map(|fx| run_fixture(fx, &limits)).collect();
    match f {
        Format::Json => print_json(&reports)?,
        Format::Text => {
            for r in &reports {
                println!("{} {} ({:.1} ms)", if r.passed { "PASS" } else { "FAIL" }, r.name, r.millis);
                for e in &r.results {
                    println!("  {} {}: {}", if e.passed { "ok  " } else { "FAIL" }, e.expectation, e.detail);
                }
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            println!("{passed}/{} fixtures pass", reports.len());
        }
    }
    Ok(if reports.iter().all(|r| r.passed) { 0 } else { 1 })
}

fn cmd_enumerate(f: Format, kind: Kind, n: usize, list: bool) -> Res<u8> {
    let space = WorldSpace::abstract_default(n.max(1));
    let items: Vec<String> = match kind {
        Kind::Tpo => enumerate_tpos(n)?.map(|t| format_tpo(&space, &t)).collect(),
        Kind::Poi => enumerate_pois(n)?.map(|p| format_poi(&space, &p)).collect(),
    };
    match f {
        Format::Json => {
            let mut v = serde_json::json!({ "kind": match kind { Kind::Tpo => "tpo", Kind::Poi => "poi" }, "n": n, "count": items.len() });
            if list {
                v["items"] = serde_json::json!(items);
            }
            print_json(&v)?
        }
        Format::Text => {
            println!("{}", items.len());
            if list {
                for i in &items {
                    println!("{i}");
                }
            }
        }
    }
    Ok(0)
}

fn cmd_search(f: Format, exec: Execution, postulate: &str, family: &str, n: usize, budget: Option<u64>) -> Res<u8> {
    let p: PostulateId = postulate.parse()?;
    let family: Family = family.parse()?;
    let outcome = search_countermodel(p, family, n, budget, exec, &Limits::from_env())?;
    let space = WorldSpace::abstract_default(n);
    let (status, code, instances, witness) = match &outcome {
        SearchOutcome::Found(w) => ("witness", 1, None, Some(WitnessJson::new(&space, w))),
        SearchOutcome::Holds { instances } => ("holds", 0, Some(*instances), None),
        SearchOutcome::BudgetExhausted { instances } => ("budget-exhausted", 2, Some(*instances), None),
    };
    match f {
        Format::Json => print_json(&serde_json::json!({
            "postulate": p, "family": family, "n": n, "status": status,
            "instances": instances, "witness": witness,
        }))?,
        Format::Text => match (&witness, instances) {
            (Some(w), _) => {
                println!("witness for {} ({p}) in {family} at n={n}", p.label());
                print_witness(w);
            }
            (None, Some(k)) if code == 0 => println!("{} ({p}) holds for {family} at n={n}: {k} instances", p.label()),
            (None, k) => println!("budget exhausted after {} instances; no witness yet", k.unwrap_or(0)),
        },
    }
    Ok(code)
}

fn cmd_overrules(f: Format, args: &StateArgs, op: &str, a: &str, b: &str) -> Res<u8> {
    let Setup { space, state, op } = setup(args, op)?;
    let parse = |t: &str| -> Res<WorldSet> {
        let s = space.parse_models(t)?;
        if s.is_empty() {
            return Err(usage(format!("`{t}` is inconsistent")));
        }
        Ok(s)
    };
    let (sa, sb) = (parse(a)?, parse(b)?);
    let weak = overrules(&op, &state, sa, sb)?;
    let strict = strictly_overrules(&op, &state, sa, sb)?;
    match f {
        Format::Json => {
            print_json(&serde_json::json!({ "a": a, "b": b, "overrules": weak, "strictly_overrules": strict }))?
        }
        Format::Text => {
            let yn = |v: bool| if v { "yes" } else { "no" };
            println!("overrules: {}", yn(weak));
            println!("strictly overrules: {}", yn(strict));
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Res<u8> {
    let f = cli.format;
    let exec = execution(cli.jobs)?;
    match &cli.command {
        Command::Revise { state, op, sentences } => cmd_revise(f, state, op, sentences),
        Command::Check { state, op, family, n, postulates } => {
            cmd_check(f, exec, state, op.as_deref(), family, *n, postulates)
        }
        Command::Fixtures { filter, file } => cmd_fixtures(f, filter.as_deref(), file),
        Command::Enumerate { kind, n, list } => cmd_enumerate(f, *kind, *n, *list),
        Command::Search { postulate, family, n, budget } => cmd_search(f, exec, postulate, family, *n, *budget),
        Command::Overrules { state, op, a, b } => cmd_overrules(f, state, op, a, b),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
