//! Text and JSON formats for states, operators and witnesses.
//!
//! TPO text: levels separated by `|`, ties by spaces, most plausible first
//! (`x y | z`). POI text: `name:+p,-q` entries (`x:+0,-1 y:+1,-3`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::logic::{LogicError, World, WorldSet, WorldSpace};
use crate::operators::{FixtureOperator, ReviseError, RevisionOperator};
use crate::orders::{poi_from_ranks, OrderError, PoiAssignment, State, Tpo};
use crate::postulates::{Bound, TraceStep, Witness};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("malformed POI entry `{0}`; expected name:+p,-q")]
    PoiEntry(String),
    #[error("world `{0}` listed twice")]
    Repeated(String),
    #[error("fixture input `{0}` is inconsistent")]
    EmptyInput(String),
    #[error("fixture lists input {0} twice")]
    DuplicateInput(String),
    #[error(transparent)]
    Revise(#[from] ReviseError),
}

fn tpo_words(text: &str) -> Vec<Vec<&str>> {
    text.split('|').map(|lvl| lvl.split_whitespace().collect()).collect()
}

/// World names mentioned by a TPO text, sorted.
pub fn tpo_names(text: &str) -> Vec<String> {
    let mut names: Vec<String> = tpo_words(text).into_iter().flatten().map(str::to_string).collect();
    names.sort();
    names
}

/// Builds a TPO from named levels.
pub fn tpo_from_names<S: AsRef<str>>(space: &WorldSpace, levels: &[Vec<S>]) -> Result<Tpo, FormatError> {
    let mut seen = std::collections::BTreeSet::new();
    for n in levels.iter().flatten() {
        if !seen.insert(n.as_ref()) {
            return Err(FormatError::Repeated(n.as_ref().to_string()));
        }
    }
    let sets = levels.iter().map(|l| space.world_set(l)).collect::<Result<Vec<_>, _>>()?;
    Ok(Tpo::from_levels(&sets)?)
}

pub fn parse_tpo(space: &WorldSpace, text: &str) -> Result<Tpo, FormatError> {
    tpo_from_names(space, &tpo_words(text))
}

pub fn format_tpo(space: &WorldSpace, t: &Tpo) -> String {
    t.levels().iter().map(|l| space.set_names(*l).join(" ")).collect::<Vec<_>>().join(" | ")
}

fn poi_entries(text: &str) -> Result<Vec<(&str, u32, u32)>, FormatError> {
    text.split_whitespace()
        .map(|e| {
            let bad = || FormatError::PoiEntry(e.to_string());
            let (name, rest) = e.split_once(':').ok_or_else(bad)?;
            let (p, m) = rest.split_once(',').ok_or_else(bad)?;
            let p = p.strip_prefix('+').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let m = m.strip_prefix('-').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            Ok((name, p, m))
        })
        .collect()
}

/// World names mentioned by a POI text, sorted.
pub fn poi_names(text: &str) -> Result<Vec<String>, FormatError> {
    let mut names: Vec<String> = poi_entries(text)?.into_iter().map(|(n, ..)| n.to_string()).collect();
    names.sort();
    Ok(names)
}

/// Builds a POI assignment from per-world `(plus, minus)` ranks.
pub fn poi_from_names<S: AsRef<str>>(
    space: &WorldSpace,
    entries: &[(S, u32, u32)],
) -> Result<PoiAssignment, FormatError> {
    let n = space.size();
    let mut plus = vec![None; n];
    let mut minus = vec![0; n];
    for (name, p, m) in entries {
        let w = space.world_by_name(name.as_ref())?.index();
        if plus[w].is_some() {
            return Err(FormatError::Repeated(name.as_ref().to_string()));
        }
        plus[w] = Some(*p);
        minus[w] = *m;
    }
    let plus = plus
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(OrderError::SizeMismatch { expected: n, got: entries.len() })?;
    Ok(poi_from_ranks(&plus, &minus)?)
}

pub fn parse_poi(space: &WorldSpace, text: &str) -> Result<PoiAssignment, FormatError> {
    poi_from_names(space, &poi_entries(text)?)
}

pub fn format_poi(space: &WorldSpace, p: &PoiAssignment) -> String {
    (0..p.len())
        .map(|i| {
            let w = World::new(i);
            format!("{}:+{},-{}", space.world_name(w), p.plus(w), p.minus(w))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_state(space: &WorldSpace, s: &State) -> String {
    match s {
        State::Tpo(t) => format_tpo(space, t),
        State::Poi(p) => format_poi(space, p),
    }
}

/// A state as written in files: TPO text, `{"levels": ...}` or `{"poi": ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateRepr {
    Text(String),
    Levels { levels: Vec<Vec<String>> },
    Poi { poi: BTreeMap<String, [u32; 2]> },
}

impl StateRepr {
    pub fn tpo(space: &WorldSpace, t: &Tpo) -> StateRepr {
        StateRepr::Levels { levels: t.levels().iter().map(|l| space.set_names(*l)).collect() }
    }

    pub fn poi(space: &WorldSpace, p: &PoiAssignment) -> StateRepr {
        let poi = (0..p.len())
            .map(|i| {
                let w = World::new(i);
                (space.world_name(w), [p.plus(w) as u32, p.minus(w) as u32])
            })
            .collect();
        StateRepr::Poi { poi }
    }

    pub fn state(space: &WorldSpace, s: &State) -> StateRepr {
        match s {
            State::Tpo(t) => StateRepr::tpo(space, t),
            State::Poi(p) => StateRepr::poi(space, p),
        }
    }

    /// World names mentioned, sorted.
    pub fn names(&self) -> Result<Vec<String>, FormatError> {
        let mut names: Vec<String> = match self {
            StateRepr::Text(t) if t.contains(':') => return poi_names(t),
            StateRepr::Text(t) => return Ok(tpo_names(t)),
            StateRepr::Levels { levels } => levels.iter().flatten().cloned().collect(),
            StateRepr::Poi { poi } => poi.keys().cloned().collect(),
        };
        names.sort();
        Ok(names)
    }

    pub fn resolve(&self, space: &WorldSpace) -> Result<State, FormatError> {
        Ok(match self {
            StateRepr::Text(t) if t.contains(':') => parse_poi(space, t)?.into(),
            StateRepr::Text(t) => parse_tpo(space, t)?.into(),
            StateRepr::Levels { levels } => tpo_from_names(space, levels)?.into(),
            StateRepr::Poi { poi } => {
                let entries: Vec<_> = poi.iter().map(|(k, [p, m])| (k.as_str(), *p, *m)).collect();
                poi_from_names(space, &entries)?.into()
            }
        })
    }
}

/// Propositional space over `atoms`, or an abstract space named by `names`.
pub fn space_for(atoms: Option<&[String]>, names: &[String]) -> Result<WorldSpace, FormatError> {
    Ok(match atoms {
        Some(a) => WorldSpace::propositional(a)?,
        None => WorldSpace::abstract_named(names)?,
    })
}

/// A sentence or an explicit list of worlds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetRepr {
    Sentence(String),
    Worlds(Vec<String>),
}

impl SetRepr {
    pub fn resolve(&self, space: &WorldSpace) -> Result<WorldSet, FormatError> {
        Ok(match self {
            SetRepr::Sentence(s) => space.parse_models(s)?,
            SetRepr::Worlds(w) => space.world_set(w)?,
        })
    }

    fn describe(&self) -> String {
        match self {
            SetRepr::Sentence(s) => s.clone(),
            SetRepr::Worlds(w) => format!("[{}]", w.join(", ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub input: SetRepr,
    pub posterior: StateRepr,
}

/// A recorded partial operator: `{prior, entries, atoms?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atoms: Option<Vec<String>>,
    pub prior: StateRepr,
    pub entries: Vec<FixtureEntry>,
}

impl OperatorFile {
    pub fn space(&self) -> Result<WorldSpace, FormatError> {
        space_for(self.atoms.as_deref(), &self.prior.names()?)
    }

    pub fn resolve(&self, space: &WorldSpace) -> Result<FixtureOperator, FormatError> {
        let prior = self.prior.resolve(space)?.tpo();
        let mut table = BTreeMap::new();
        for e in &self.entries {
            let input = e.input.resolve(space)?;
            if input.is_empty() {
                return Err(FormatError::EmptyInput(e.input.describe()));
            }
            if table.insert(input, e.posterior.resolve(space)?.tpo()).is_some() {
                return Err(FormatError::DuplicateInput(e.input.describe()));
            }
        }
        Ok(FixtureOperator { prior, table })
    }

    pub fn load(text: &str) -> Result<(WorldSpace, RevisionOperator), FormatError> {
        let file: OperatorFile = serde_json::from_str(text)?;
        let space = file.space()?;
        let op = RevisionOperator::Fixture(file.resolve(&space)?);
        Ok((space, op))
    }
}

/// A bound variable with rendered value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BindingJson {
    pub var: String,
    pub value: SetRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub postulate: String,
    pub label: String,
    pub state: StateRepr,
    pub bindings: Vec<BindingJson>,
    pub trace: Vec<TraceStep>,
    pub index: u64,
}

impl WitnessJson {
    pub fn new(space: &WorldSpace, w: &Witness) -> WitnessJson {
        let bindings = w
            .named_bindings()
            .into_iter()
            .map(|(var, b)| BindingJson {
                var: var.to_string(),
                value: match b {
                    Bound::Set(s) => SetRepr::Worlds(space.set_names(s)),
                    Bound::World(x) => SetRepr::Sentence(space.world_name(x)),
                },
            })
            .collect();
        WitnessJson {
            postulate: w.postulate.to_string(),
            label: w.postulate.label().to_string(),
            state: StateRepr::state(space, &w.state),
            bindings,
            trace: w.trace.clone(),
            index: w.index,
        }
    }

    /// `A = {x, z}, C = {x}, x = x, y = y`
    pub fn bindings_text(&self) -> String {
        self.bindings
            .iter()
            .map(|b| match &b.value {
                SetRepr::Worlds(ws) => format!("{} = {{{}}}", b.var, ws.join(", ")),
                SetRepr::Sentence(s) => format!("{} = {}", b.var, s),
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> WorldSpace {
        WorldSpace::abstract_default(3)
    }

    #[test]
    fn tpo_text_round_trip() {
        let s = xyz();
        let t = parse_tpo(&s, "x y | z").unwrap();
        assert_eq!(t.ranks(), &[0, 0, 1]);
        assert_eq!(format_tpo(&s, &t), "x y | z");
        assert!(matches!(parse_tpo(&s, "x | x | z"), Err(FormatError::Repeated(_))));
        assert!(parse_tpo(&s, "x | y").is_err());
        assert!(parse_tpo(&s, "x | q | y z").is_err());
    }

    #[test]
    fn poi_text_round_trip() {
        let s = xyz();
        let p = parse_poi(&s, "x:+0,-1 y:+1,-3 z:+2,-4").unwrap();
        assert_eq!(format_poi(&s, &p), "x:+0,-1 y:+1,-3 z:+2,-4");
        assert!(matches!(parse_poi(&s, "x:0,1"), Err(FormatError::PoiEntry(_))));
        assert!(matches!(parse_poi(&s, "x:+0,-2 y:+1,-3 z:+1,-4"), Err(FormatError::Order(_))));
    }

    #[test]
    fn state_json_forms() {
        let s = xyz();
        let a: StateRepr = serde_json::from_str(r#"{"levels":[["x","y"],["z"]]}"#).unwrap();
        let b: StateRepr = serde_json::from_str(r#""x y | z""#).unwrap();
        assert_eq!(a.resolve(&s).unwrap(), b.resolve(&s).unwrap());
        let p: StateRepr = serde_json::from_str(r#"{"poi":{"x":[0,1],"y":[1,3],"z":[2,4]}}"#).unwrap();
        let st = p.resolve(&s).unwrap();
        assert_eq!(StateRepr::state(&s, &st), p);
        assert_eq!(p.names().unwrap(), ["x", "y", "z"]);
    }

    #[test]
    fn names_are_sorted() {
        assert_eq!(tpo_names("z | y x"), ["x", "y", "z"]);
        assert_eq!(poi_names("z:+0,-2 y:+1,-3 x:+4,-5").unwrap(), ["x", "y", "z"]);
    }

    #[test]
    fn operator_file_loads() {
        let text = r#"{"atoms":["A","C"],"prior":"11 | 00 | 10 | 01",
            "entries":[{"input":"A","posterior":"11 | 00 | 10 | 01"},
                       {"input":["11","10","01"],"posterior":"11 | 10 | 01 | 00"}]}"#;
        let (space, op) = OperatorFile::load(text).unwrap();
        let s: State = parse_tpo(&space, "11 | 00 | 10 | 01").unwrap().into();
        let a_or_c = space.parse_models("A | C").unwrap();
        assert_eq!(format_tpo(&space, &op.revise(&s, a_or_c).unwrap()), "11 | 10 | 01 | 00");
        assert!(matches!(op.revise(&s, space.parse_models("C").unwrap()), Err(ReviseError::UndefinedInput(_))));
        let dup =
            r#"{"prior":"x | y","entries":[{"input":"x","posterior":"x | y"},{"input":["x"],"posterior":"x | y"}]}"#;
        assert!(matches!(OperatorFile::load(dup), Err(FormatError::DuplicateInput(_))));
    }
}
