//! Fixtures, family-level campaigns and bounded countermodel search.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::limits::Limits;
use crate::logic::{World, WorldSet, WorldSpace};
use crate::operators::{ReviseError, RevisionOperator};
use crate::orders::{enumerate_pois, enumerate_tpos, OrderError, State};
use crate::postulates::{Binding, CheckError, Checker, PostulateId, Witness};
use crate::text::{format_tpo, space_for, FixtureEntry, FormatError, OperatorFile, SetRepr, StateRepr, WitnessJson};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Revise(#[from] ReviseError),
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("operator `fixture` needs recorded entries")]
    MissingEntries,
    #[error("no binding for variable `{0}`")]
    MissingVariable(&'static str),
    #[error("unexpected variable `{0}`")]
    ExtraVariable(String),
    #[error("world variable `{0}` must name a single world")]
    WorldVariable(String),
}

/// Operator families whose states can be enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "natural")]
    Natural,
    #[serde(rename = "lex")]
    Lex,
    #[serde(rename = "restrained")]
    Restrained,
    #[serde(rename = "revlex")]
    RevLex,
    #[serde(rename = "poi-circ")]
    PoiCirc,
    #[serde(rename = "poi")]
    Poi,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Natural, Family::Lex, Family::Restrained, Family::RevLex, Family::PoiCirc, Family::Poi];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Natural => "natural",
            Family::Lex => "lex",
            Family::Restrained => "restrained",
            Family::RevLex => "revlex",
            Family::PoiCirc => "poi-circ",
            Family::Poi => "poi",
        }
    }

    pub fn operator(self) -> RevisionOperator {
        RevisionOperator::from_name(self.as_str()).expect("family names are operator names")
    }

    /// Whether states are POI assignments rather than TPOs.
    pub fn uses_poi(self) -> bool {
        matches!(self, Family::PoiCirc | Family::Poi)
    }

    /// Every state of this family over `n` worlds, in enumeration order.
    pub fn states(self, n: usize) -> Result<Vec<State>, OrderError> {
        Ok(if self.uses_poi() {
            enumerate_pois(n)?.map(State::from).collect()
        } else {
            enumerate_tpos(n)?.map(State::from).collect()
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.as_str() == s).ok_or_else(|| HarnessError::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Expectation {
    /// The posterior after one revision, compared level by level.
    Posterior {
        input: SetRepr,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        op: Option<String>,
        posterior: StateRepr,
    },
    /// A postulate verdict, on one binding or over all of them.
    Postulate {
        postulate: PostulateId,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        op: Option<String>,
        holds: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bindings: Option<BTreeMap<String, SetRepr>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atoms: Option<Vec<String>>,
    pub state: StateRepr,
    /// A built-in operator name, or `fixture` for the recorded `entries`.
    pub operator: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<FixtureEntry>>,
    pub expect: Vec<Expectation>,
}

const BUILTIN: [&str; 6] = [
    include_str!("../fixtures/fx-fig.json"),
    include_str!("../fixtures/fx-s6.json"),
    include_str!("../fixtures/fx-p5a.json"),
    include_str!("../fixtures/fx-p5b.json"),
    include_str!("../fixtures/fx-p15.json"),
    include_str!("../fixtures/fx-nf.json"),
];

/// The bundled countermodel fixtures.
pub fn builtin_fixtures() -> Vec<Fixture> {
    BUILTIN.iter().map(|t| serde_json::from_str(t).expect("bundled fixtures parse")).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpectationResult {
    pub expectation: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureReport {
    pub name: String,
    pub passed: bool,
    pub results: Vec<ExpectationResult>,
    pub millis: f64,
}

struct Loaded {
    space: WorldSpace,
    state: State,
    op: RevisionOperator,
}

impl Fixture {
    fn load(&self) -> Result<Loaded, HarnessError> {
        let space = space_for(self.atoms.as_deref(), &self.state.names()?)?;
        let state = self.state.resolve(&space)?;
        let op = if self.operator == "fixture" {
            let file = OperatorFile {
                atoms: self.atoms.clone(),
                prior: self.state.clone(),
                entries: self.entries.clone().ok_or(HarnessError::MissingEntries)?,
            };
            RevisionOperator::Fixture(file.resolve(&space)?)
        } else {
            operator(&self.operator)?
        };
        Ok(Loaded { space, state, op })
    }
}

fn operator(name: &str) -> Result<RevisionOperator, HarnessError> {
    RevisionOperator::from_name(name).ok_or_else(|| HarnessError::UnknownOperator(name.to_string()))
}

/// Resolves named values into a binding for `p`.
pub fn resolve_binding(
    space: &WorldSpace,
    p: PostulateId,
    values: &BTreeMap<String, SetRepr>,
) -> Result<Binding, HarnessError> {
    let spec = p.spec();
    if let Some(extra) = values.keys().find(|k| !p.variables().any(|v| v == k.as_str())) {
        return Err(HarnessError::ExtraVariable(extra.clone()));
    }
    let get = |v: &'static str| values.get(v).ok_or(HarnessError::MissingVariable(v));
    let sets =
        spec.sets.iter().map(|v| Ok(get(v)?.resolve(space)?)).collect::<Result<Vec<WorldSet>, HarnessError>>()?;
    let worlds = spec
        .worlds
        .iter()
        .map(|v| match get(v)? {
            SetRepr::Sentence(name) => {
                space.world_by_name(name).map_err(|_| HarnessError::WorldVariable(v.to_string()))
            }
            SetRepr::Worlds(_) => Err(HarnessError::WorldVariable(v.to_string())),
        })
        .collect::<Result<Vec<World>, HarnessError>>()?;
    Ok(Binding::new(&sets, &worlds))
}

fn describe(e: &Expectation) -> String {
    let via = |op: &Option<String>| op.as_ref().map(|o| format!(" [{o}]")).unwrap_or_default();
    match e {
        Expectation::Posterior { input, op, .. } => {
            let input = match input {
                SetRepr::Sentence(s) => s.clone(),
                SetRepr::Worlds(w) => format!("{{{}}}", w.join(", ")),
            };
            format!("posterior after {input}{}", via(op))
        }
        Expectation::Postulate { postulate, op, holds, bindings } => {
            let verdict = if *holds { "holds" } else { "fails" };
            let scope = match bindings {
                Some(b) => {
                    let parts: Vec<String> = b
                        .iter()
                        .map(|(k, v)| match v {
                            SetRepr::Sentence(s) => format!("{k}={s}"),
                            SetRepr::Worlds(w) => format!("{k}={{{}}}", w.join(",")),
                        })
                        .collect();
                    format!(" at {}", parts.join(" "))
                }
                None => " exhaustively".to_string(),
            };
            format!("{postulate} {verdict}{scope}{}", via(op))
        }
    }
}

fn evaluate(fx: &Loaded, e: &Expectation, limits: &Limits) -> Result<ExpectationResult, HarnessError> {
    let pick = |o: &Option<String>| o.as_deref().map_or_else(|| Ok(fx.op.clone()), operator);
    let expectation = describe(e);
    match e {
        Expectation::Posterior { input, op, posterior } => {
            let op = pick(op)?;
            let want = posterior.resolve(&fx.space)?.tpo();
            let got = op.revise(&fx.state, input.resolve(&fx.space)?)?;
            Ok(ExpectationResult {
                expectation,
                passed: got == want,
                detail: format!("got {}, expected {}", format_tpo(&fx.space, &got), format_tpo(&fx.space, &want)),
                witness: None,
            })
        }
        Expectation::Postulate { postulate, op, holds, bindings } => {
            let op = pick(op)?;
            let cx = Checker::new(&op, &fx.state)?;
            match bindings {
                Some(values) => {
                    let b = resolve_binding(&fx.space, *postulate, values)?;
                    let (value, trace) = cx.trace(*postulate, &b)?;
                    let failed = trace.iter().filter(|t| !t.value).map(|t| t.condition.clone()).collect::<Vec<_>>();
                    Ok(ExpectationResult {
                        expectation,
                        passed: value == *holds,
                        detail: if value { "instance holds".into() } else { format!("false: {}", failed.join("; ")) },
                        witness: None,
                    })
                }
                None => {
                    let v = cx.verify(*postulate, Execution::Sequential, limits)?;
                    let witness = v.witness.as_ref().map(|w| WitnessJson::new(&fx.space, w));
                    let detail = match &witness {
                        Some(w) => format!("witness {}", w.bindings_text()),
                        None => format!("{} instances, {} skipped", v.checked, v.skipped),
                    };
                    Ok(ExpectationResult { expectation, passed: v.holds() == *holds, detail, witness })
                }
            }
        }
    }
}

/// Evaluates every expectation; load errors surface as failed expectations.
pub fn run_fixture(f: &Fixture, limits: &Limits) -> FixtureReport {
    let start = Instant::now();
    let results = match f.load() {
        Ok(fx) => f
            .expect
            .iter()
            .map(|e| {
                evaluate(&fx, e, limits).unwrap_or_else(|err| ExpectationResult {
                    expectation: describe(e),
                    passed: false,
                    detail: format!("error: {err}"),
                    witness: None,
                })
            })
            .collect(),
        Err(err) => vec![ExpectationResult {
            expectation: "load".into(),
            passed: false,
            detail: format!("error: {err}"),
            witness: None,
        }],
    };
    FixtureReport {
        name: f.name.clone(),
        passed: results.iter().all(|r| r.passed),
        results,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Witness,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignRow {
    pub family: Family,
    pub n: usize,
    pub postulate: PostulateId,
    pub label: String,
    pub verdict: Verdict,
    pub states: usize,
    pub failing_states: usize,
    pub instances: u64,
    pub skipped_instances: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignReport {
    pub n: usize,
    pub execution: Execution,
    pub rows: Vec<CampaignRow>,
    pub wall_ms: f64,
}

impl CampaignReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Holds)
    }

    pub fn row(&self, family: Family, p: PostulateId) -> Option<&CampaignRow> {
        self.rows.iter().find(|r| r.family == family && r.postulate == p)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| family | n | postulate | verdict | failing states | instances | skipped | witness |\n\
             |---|---|---|---|---|---|---|---|\n",
        );
        for r in &self.rows {
            let verdict = match r.verdict {
                Verdict::Holds => "holds".to_string(),
                Verdict::Witness => "witness".to_string(),
                Verdict::Skipped => format!("skipped ({})", r.reason.as_deref().unwrap_or("")),
            };
            let witness = r
                .witness
                .as_ref()
                .map(|w| format!("`{}` with {}", state_text(&w.state), w.bindings_text()))
                .unwrap_or_default();
            out += &format!(
                "| {} | {} | {} ({}) | {} | {}/{} | {} | {} | {} |\n",
                r.family,
                r.n,
                r.label,
                r.postulate,
                verdict,
                r.failing_states,
                r.states,
                r.instances,
                r.skipped_instances,
                witness
            );
        }
        out
    }
}

fn state_text(s: &StateRepr) -> String {
    match s {
        StateRepr::Text(t) => t.clone(),
        StateRepr::Levels { levels } => levels.iter().map(|l| l.join(" ")).collect::<Vec<_>>().join(" | "),
        StateRepr::Poi { poi } => poi.iter().map(|(k, [p, m])| format!("{k}:+{p},-{m}")).collect::<Vec<_>>().join(" "),
    }
}

fn check_bound(n: usize, limits: &Limits) -> Result<(), HarnessError> {
    if n > limits.max_worlds {
        return Err(CheckError::DomainTooLarge { n, max: limits.max_worlds }.into());
    }
    Ok(())
}

enum StateOutcome {
    Holds { checked: u64, skipped: u64 },
    Fails { witness: Witness, checked: u64, skipped: u64 },
    NotApplicable(String),
}

/// Runs every postulate over every state of every family at `n` worlds.
///
/// Work fans out over (state, postulate) pairs; the reported witness is the
/// one from the first failing state in enumeration order.
pub fn campaign(
    families: &[Family],
    n: usize,
    postulates: &[PostulateId],
    exec: Execution,
    limits: &Limits,
) -> Result<CampaignReport, HarnessError> {
    check_bound(n, limits)?;
    let start = Instant::now();
    let space = WorldSpace::abstract_default(n);
    let mut rows = Vec::new();
    for &family in families {
        let op = family.operator();
        let states = family.states(n)?;
        let checkers = states.iter().map(|s| Checker::new(&op, s)).collect::<Result<Vec<_>, _>>()?;
        let jobs: Vec<(usize, usize)> =
            (0..postulates.len()).flat_map(|p| (0..states.len()).map(move |s| (p, s))).collect();
        let t0 = Instant::now();
        let outcomes =
            exec::map(&jobs, exec, |&(p, s)| match checkers[s].verify(postulates[p], Execution::Sequential, limits) {
                Ok(v) => Ok(match v.witness {
                    Some(witness) => StateOutcome::Fails { witness, checked: v.checked, skipped: v.skipped },
                    None => StateOutcome::Holds { checked: v.checked, skipped: v.skipped },
                }),
                Err(CheckError::NotApplicable(_)) => {
                    Ok(StateOutcome::NotApplicable(format!("{} does not apply to {family} states", postulates[p])))
                }
                Err(e) => Err(e),
            });
        let per_postulate = t0.elapsed().as_secs_f64() * 1e3 / postulates.len().max(1) as f64;
        let mut outcomes = outcomes.into_iter();
        for &p in postulates {
            let mut row = CampaignRow {
                family,
                n,
                postulate: p,
                label: p.label().to_string(),
                verdict: Verdict::Holds,
                states: states.len(),
                failing_states: 0,
                instances: 0,
                skipped_instances: 0,
                witness: None,
                reason: None,
                millis: per_postulate,
            };
            for _ in 0..states.len() {
                match outcomes.next().expect("one outcome per job")? {
                    StateOutcome::Holds { checked, skipped } => {
                        row.instances += checked;
                        row.skipped_instances += skipped;
                    }
                    StateOutcome::Fails { witness, checked, skipped } => {
                        row.instances += checked + 1;
                        row.skipped_instances += skipped;
                        row.failing_states += 1;
                        if row.witness.is_none() {
                            row.witness = Some(WitnessJson::new(&space, &witness));
                        }
                        row.verdict = Verdict::Witness;
                    }
                    StateOutcome::NotApplicable(reason) => {
                        row.verdict = Verdict::Skipped;
                        row.reason = Some(reason);
                    }
                }
            }
            rows.push(row);
        }
    }
    Ok(CampaignReport { n, execution: exec, rows, wall_ms: start.elapsed().as_secs_f64() * 1e3 })
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(Witness),
    /// Every instance of every state was checked.
    Holds {
        instances: u64,
    },
    /// The instance budget ran out first.
    BudgetExhausted {
        instances: u64,
    },
}

/// Searches the family's states in enumeration order for the first witness,
/// checking at most `budget` instances in total.
pub fn search_countermodel(
    p: PostulateId,
    family: Family,
    n: usize,
    budget: Option<u64>,
    exec: Execution,
    limits: &Limits,
) -> Result<SearchOutcome, HarnessError> {
    check_bound(n, limits)?;
    let op = family.operator();
    let mut used = 0u64;
    for s in family.states(n)? {
        let left = budget.map(|b| b.saturating_sub(used));
        if left == Some(0) {
            return Ok(SearchOutcome::BudgetExhausted { instances: used });
        }
        let cx = Checker::new(&op, &s)?;
        let v = cx.verify_bounded(p, exec, limits, left)?;
        used += v.checked + v.skipped;
        if let Some(w) = v.witness {
            debug_assert_eq!(w.revalidate(&op), Ok(false));
            return Ok(SearchOutcome::Found(w));
        }
        if v.exhausted {
            return Ok(SearchOutcome::BudgetExhausted { instances: used });
        }
    }
    Ok(SearchOutcome::Holds { instances: used })
}

/// Outcome of reconstructing the non-prioritised operator from POI revision.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RepresentationReport {
    pub n: usize,
    pub states: usize,
    /// States on which POI revision violates one of the listed postulates.
    pub star_failures: Vec<String>,
    /// States on which the reconstruction is not a TPO for some input.
    pub derived_errors: usize,
    /// States on which the reconstruction differs from the interval operator.
    pub mismatched_states: usize,
    pub mismatched_inputs: usize,
    pub inputs: usize,
    /// States on which the reconstruction violates one of the listed postulates.
    pub circ_failures: Vec<String>,
    /// States on which naturalising the reconstruction does not give back POI revision.
    pub recomposition_failures: usize,
}

/// Postulates POI revision must satisfy for the reconstruction to apply.
pub const STAR_POSTULATES: [PostulateId; 7] = [
    PostulateId::Eq,
    PostulateId::C1,
    PostulateId::C2,
    PostulateId::Ps,
    PostulateId::Alpha1,
    PostulateId::Alpha2,
    PostulateId::Alpha3,
];

/// Postulates the reconstructed operator should satisfy.
pub const CIRC_POSTULATES: [PostulateId; 6] =
    [PostulateId::C1, PostulateId::C2, PostulateId::P, PostulateId::Beta1p, PostulateId::Beta2p, PostulateId::Iia];

/// For each POI assignment over `n` worlds, rebuilds a non-prioritised
/// operator from POI revision via `x ⪯ y iff x ⪯ y after revising by A ∪ ¬{x, y}`
/// and compares it with the interval operator.
pub fn representation(n: usize, exec: Execution, limits: &Limits) -> Result<RepresentationReport, HarnessError> {
    check_bound(n, limits)?;
    let states = Family::Poi.states(n)?;
    let star = RevisionOperator::PoiComposed;
    let circ = RevisionOperator::NonPrioritisedPoi;
    let derived = RevisionOperator::Derived(Box::new(RevisionOperator::PoiComposed));

    struct One {
        star_fail: Vec<PostulateId>,
        derived_error: bool,
        mismatches: usize,
        circ_fail: Vec<PostulateId>,
        recomposition: bool,
    }

    let results = exec::map(&states, exec, |s| -> Result<One, HarnessError> {
        let cx = Checker::new(&star, s)?;
        let mut star_fail = Vec::new();
        for p in STAR_POSTULATES {
            if cx.verify(p, Execution::Sequential, limits)?.witness.is_some() {
                star_fail.push(p);
            }
        }
        let mut one =
            One { star_fail, derived_error: false, mismatches: 0, circ_fail: Vec::new(), recomposition: true };
        let table = match derived.table(s) {
            Ok(t) => t,
            Err(ReviseError::NotTotal(..) | ReviseError::NotTransitive(..)) => {
                one.derived_error = true;
                return Ok(one);
            }
            Err(e) => return Err(e.into()),
        };
        for a in WorldSet::nonempty_subsets(n) {
            let d = table[a.bits() as usize].as_ref().expect("built-in operators are total");
            if *d != circ.revise(s, a)? {
                one.mismatches += 1;
            }
            if crate::operators::naturalise(d, a)? != star.revise(s, a)? {
                one.recomposition = false;
            }
        }
        let dcx = Checker::new(&derived, s)?;
        for p in CIRC_POSTULATES {
            if dcx.verify(p, Execution::Sequential, limits)?.witness.is_some() {
                one.circ_fail.push(p);
            }
        }
        Ok(one)
    });

    let space = WorldSpace::abstract_default(n);
    let mut report = RepresentationReport { n, states: states.len(), ..Default::default() };
    let per_state = (1usize << n) - 1;
    for (s, r) in states.iter().zip(results) {
        let r = r?;
        let name = crate::text::format_state(&space, s);
        let list = |ps: &[PostulateId]| ps.iter().map(|p| p.as_str()).collect::<Vec<_>>().join(",");
        if !r.star_fail.is_empty() {
            report.star_failures.push(format!("{name}: {}", list(&r.star_fail)));
        }
        if r.derived_error {
            report.derived_errors += 1;
            continue;
        }
        report.inputs += per_state;
        report.mismatched_inputs += r.mismatches;
        report.mismatched_states += usize::from(r.mismatches > 0);
        if !r.circ_fail.is_empty() {
            report.circ_failures.push(format!("{name}: {}", list(&r.circ_fail)));
        }
        report.recomposition_failures += usize::from(!r.recomposition);
    }
    Ok(report)
}
