//! Executable postulates, exhaustive verification and witnesses.
//!
//! Sentence variables range over nonempty model sets and world variables
//! over worlds. Bindings are enumerated in lexicographic order of the
//! declared variables: sets by ascending bitmask, then worlds by ascending
//! id, with the first declared variable most significant. The first failing
//! binding in that order is the witness, whatever the execution mode.
//!
//! Belief-set statements are translated to model sets: `φ ∈ [Ψ∗A]` holds iff
//! the bottom level of the posterior lies inside `mods(φ)`, and the models of
//! `[(Ψ∗A)∗B]` are `min(⪯_{Ψ∗A}, B)`. A binding that would require revising
//! by an inconsistent sentence makes the instance hold vacuously.

mod defs;

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::limits::Limits;
use crate::logic::{World, WorldSet};
use crate::operators::{ReviseError, RevisionOperator};
use crate::orders::{PoiAssignment, State, Tpo};

pub use defs::PostulateId;

/// Largest world count for which posteriors are precomputed for every input.
const TABLE_MAX_WORLDS: usize = 12;

/// Bindings scanned per work item in parallel verification.
const CHUNK: u64 = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error(transparent)]
    Revise(#[from] ReviseError),
    #[error("unknown postulate id `{0}`")]
    UnknownPostulate(String),
    #[error("postulate `{id}` expects {sets} sentence and {worlds} world variables")]
    Arity { id: PostulateId, sets: usize, worlds: usize },
    /// A sentence variable was bound to an inconsistent sentence.
    #[error("sentence variable `{0}` bound to an inconsistent sentence")]
    EmptyBinding(&'static str),
    #[error("binding over {got} worlds, state over {expected}")]
    SizeMismatch { expected: usize, got: usize },
    /// Exhaustive checking would exceed the configured world bound.
    #[error("{n} worlds exceeds the verification bound of {max}; raise it with POIREV_MAX_N")]
    DomainTooLarge { n: usize, max: usize },
    /// The postulate concerns structure this state does not have.
    #[error("postulate `{0}` does not apply to this state")]
    NotApplicable(PostulateId),
}

impl CheckError {
    fn is_undefined(&self) -> bool {
        matches!(self, CheckError::Revise(ReviseError::UndefinedInput(_)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Stated over worlds and posterior orders.
    Semantic,
    /// Stated over belief sets.
    Syntactic,
}

/// Records the sub-conditions a predicate evaluates.
pub trait Trace {
    fn note(&mut self, condition: &'static str, value: bool) -> bool;
}

/// Discards the trace.
pub struct NoTrace;

impl Trace for NoTrace {
    #[inline(always)]
    fn note(&mut self, _: &'static str, value: bool) -> bool {
        value
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub condition: String,
    pub value: bool,
}

#[derive(Default)]
pub struct TraceLog(pub Vec<TraceStep>);

impl Trace for TraceLog {
    fn note(&mut self, condition: &'static str, value: bool) -> bool {
        self.0.push(TraceStep { condition: condition.to_string(), value });
        value
    }
}

/// Values for a postulate's sentence and world variables, in declared order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Binding {
    sets: [WorldSet; 4],
    worlds: [World; 3],
    n_sets: u8,
    n_worlds: u8,
}

impl Binding {
    pub fn new(sets: &[WorldSet], worlds: &[World]) -> Binding {
        assert!(sets.len() <= 4 && worlds.len() <= 3);
        let size = sets.first().map_or(1, |s| s.size());
        let mut b = Binding {
            sets: [WorldSet::empty(size); 4],
            worlds: [World::default(); 3],
            n_sets: sets.len() as u8,
            n_worlds: worlds.len() as u8,
        };
        b.sets[..sets.len()].copy_from_slice(sets);
        b.worlds[..worlds.len()].copy_from_slice(worlds);
        b
    }

    pub fn sets(&self) -> &[WorldSet] {
        &self.sets[..self.n_sets as usize]
    }

    pub fn worlds(&self) -> &[World] {
        &self.worlds[..self.n_worlds as usize]
    }

    #[inline]
    pub(crate) fn s(&self, i: usize) -> WorldSet {
        self.sets[i]
    }

    #[inline]
    pub(crate) fn w(&self, i: usize) -> World {
        self.worlds[i]
    }
}

/// A bound value, as reported in witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Set(WorldSet),
    World(World),
}

pub(crate) type Pred<T> = fn(&Checker<'_>, &Binding, &mut T) -> Result<bool, CheckError>;

/// Static description of one postulate.
pub struct PostulateSpec {
    pub id: PostulateId,
    /// Human-readable name, e.g. `β1⁺⪯`.
    pub label: &'static str,
    pub sets: &'static [&'static str],
    pub worlds: &'static [&'static str],
    pub flavor: Flavor,
    pub(crate) fast: Pred<NoTrace>,
    pub(crate) traced: Pred<TraceLog>,
}

impl PostulateId {
    pub fn spec(self) -> &'static PostulateSpec {
        defs::REGISTRY.iter().find(|s| s.id == self).expect("every id is registered")
    }

    pub fn all() -> impl Iterator<Item = PostulateId> {
        defs::REGISTRY.iter().map(|s| s.id)
    }

    pub fn label(self) -> &'static str {
        self.spec().label
    }

    pub fn flavor(self) -> Flavor {
        self.spec().flavor
    }

    /// Variable names, sentence variables first.
    pub fn variables(self) -> impl Iterator<Item = &'static str> {
        let s = self.spec();
        s.sets.iter().chain(s.worlds.iter()).copied()
    }
}

impl fmt::Display for PostulateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PostulateId {
    type Err = CheckError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PostulateId::all().find(|p| p.as_str() == s).ok_or_else(|| CheckError::UnknownPostulate(s.to_string()))
    }
}

impl Serialize for PostulateId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for PostulateId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

enum Posts<'a> {
    Table(Vec<Option<Tpo>>),
    Direct(&'a RevisionOperator, &'a State),
}

/// An operator applied to one state, ready for postulate evaluation.
pub struct Checker<'a> {
    state: &'a State,
    prior: Tpo,
    posts: Posts<'a>,
    n: usize,
}

impl<'a> Checker<'a> {
    pub fn new(op: &'a RevisionOperator, state: &'a State) -> Result<Checker<'a>, CheckError> {
        let n = state.len();
        let posts = if n <= TABLE_MAX_WORLDS { Posts::Table(op.table(state)?) } else { Posts::Direct(op, state) };
        Ok(Checker { state, prior: state.tpo(), posts, n })
    }

    pub fn state(&self) -> &State {
        self.state
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub(crate) fn prior(&self) -> &Tpo {
        &self.prior
    }

    pub(crate) fn poi(&self) -> Option<&PoiAssignment> {
        self.state.poi()
    }

    /// Posterior after revising by `a`.
    #[inline]
    pub(crate) fn post(&self, a: WorldSet) -> Result<Cow<'_, Tpo>, CheckError> {
        if a.is_empty() {
            return Err(ReviseError::EmptyInput.into());
        }
        match &self.posts {
            Posts::Table(t) => match &t[a.bits() as usize] {
                Some(p) => Ok(Cow::Borrowed(p)),
                None => Err(ReviseError::UndefinedInput(a).into()),
            },
            Posts::Direct(op, s) => Ok(Cow::Owned(op.revise(s, a)?)),
        }
    }

    /// Models of `[Ψ∗A]`.
    #[inline]
    pub(crate) fn bel(&self, a: WorldSet) -> Result<WorldSet, CheckError> {
        Ok(self.post(a)?.bottom())
    }

    /// Models of `[(Ψ∗A)∗B]`.
    #[inline]
    pub(crate) fn then(&self, a: WorldSet, b: WorldSet) -> Result<WorldSet, CheckError> {
        Ok(self.post(a)?.min_unchecked(b))
    }

    /// `min(⪯_Ψ, C)` over the prior.
    #[inline]
    pub(crate) fn prior_min(&self, c: WorldSet) -> WorldSet {
        self.prior.min_unchecked(c)
    }

    fn validate(&self, id: PostulateId, b: &Binding) -> Result<(), CheckError> {
        let spec = id.spec();
        if b.sets().len() != spec.sets.len() || b.worlds().len() != spec.worlds.len() {
            return Err(CheckError::Arity { id, sets: spec.sets.len(), worlds: spec.worlds.len() });
        }
        for (s, name) in b.sets().iter().zip(spec.sets) {
            if s.size() != self.n {
                return Err(CheckError::SizeMismatch { expected: self.n, got: s.size() });
            }
            if s.is_empty() {
                return Err(CheckError::EmptyBinding(name));
            }
        }
        for w in b.worlds() {
            if w.index() >= self.n {
                return Err(CheckError::SizeMismatch { expected: self.n, got: w.index() + 1 });
            }
        }
        Ok(())
    }

    /// Evaluates one instance.
    pub fn check(&self, id: PostulateId, b: &Binding) -> Result<bool, CheckError> {
        self.validate(id, b)?;
        (id.spec().fast)(self, b, &mut NoTrace)
    }

    /// Evaluates one instance, recording each sub-condition.
    pub fn trace(&self, id: PostulateId, b: &Binding) -> Result<(bool, Vec<TraceStep>), CheckError> {
        self.validate(id, b)?;
        let mut log = TraceLog::default();
        let v = (id.spec().traced)(self, b, &mut log)?;
        Ok((v, log.0))
    }

    fn domain(&self, id: PostulateId) -> Domain {
        let spec = id.spec();
        Domain { n: self.n, sets: spec.sets.len(), worlds: spec.worlds.len() }
    }

    /// Checks every binding; see [`Checker::verify_bounded`].
    pub fn verify(&self, id: PostulateId, exec: Execution, limits: &Limits) -> Result<Verification, CheckError> {
        self.verify_bounded(id, exec, limits, None)
    }

    /// Checks bindings in iteration order, stopping at the first failure or
    /// after `budget` bindings.
    pub fn verify_bounded(
        &self,
        id: PostulateId,
        exec: Execution,
        limits: &Limits,
        budget: Option<u64>,
    ) -> Result<Verification, CheckError> {
        if self.n > limits.max_worlds {
            return Err(CheckError::DomainTooLarge { n: self.n, max: limits.max_worlds });
        }
        if id == PostulateId::Nonflush && self.poi().is_none() {
            return Err(CheckError::NotApplicable(id));
        }
        let dom = self.domain(id);
        let total = dom.total();
        let scanned = budget.map_or(total, |b| b.min(total));
        let fast = id.spec().fast;
        let chunks = exec::scan_chunks(
            scanned,
            CHUNK,
            exec,
            |range| {
                let mut part = Partial::default();
                for i in range {
                    let b = dom.decode(i);
                    match fast(self, &b, &mut NoTrace) {
                        Ok(true) => part.checked += 1,
                        Ok(false) => {
                            part.failure = Some(i);
                            return part;
                        }
                        Err(e) if e.is_undefined() => part.skipped += 1,
                        Err(e) => {
                            part.error = Some(e);
                            return part;
                        }
                    }
                }
                part
            },
            |p| p.failure.is_some() || p.error.is_some(),
        );
        let mut out = Verification { witness: None, checked: 0, skipped: 0, total, exhausted: false };
        for p in chunks {
            out.checked += p.checked;
            out.skipped += p.skipped;
            if let Some(e) = p.error {
                return Err(e);
            }
            if let Some(i) = p.failure {
                let binding = dom.decode(i);
                let (value, trace) = self.trace(id, &binding)?;
                debug_assert!(!value);
                out.witness = Some(Witness { postulate: id, state: self.state.clone(), binding, trace, index: i });
                return Ok(out);
            }
        }
        out.exhausted = scanned < total;
        Ok(out)
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    skipped: u64,
    failure: Option<u64>,
    error: Option<CheckError>,
}

/// Mixed-radix indexing of the binding space.
#[derive(Clone, Copy)]
struct Domain {
    n: usize,
    sets: usize,
    worlds: usize,
}

impl Domain {
    fn set_radix(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn total(&self) -> u64 {
        self.set_radix().pow(self.sets as u32) * (self.n as u64).pow(self.worlds as u32)
    }

    fn decode(&self, mut i: u64) -> Binding {
        let mut worlds = [World::default(); 3];
        for k in (0..self.worlds).rev() {
            worlds[k] = World::new((i % self.n as u64) as usize);
            i /= self.n as u64;
        }
        let mut sets = [WorldSet::empty(self.n); 4];
        for k in (0..self.sets).rev() {
            sets[k] = WorldSet::from_bits(self.n, i % self.set_radix() + 1).expect("in range");
            i /= self.set_radix();
        }
        Binding::new(&sets[..self.sets], &worlds[..self.worlds])
    }
}

/// Outcome of an exhaustive (or budgeted) check.
#[derive(Clone, Debug)]
pub struct Verification {
    pub witness: Option<Witness>,
    /// Bindings evaluated to true, including vacuous ones.
    pub checked: u64,
    /// Bindings skipped because a fixture does not record a needed input.
    pub skipped: u64,
    /// Size of the binding space.
    pub total: u64,
    /// True when a budget stopped the scan before the end.
    pub exhausted: bool,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.witness.is_none() && !self.exhausted
    }
}

/// A binding on which a postulate fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub postulate: PostulateId,
    pub state: State,
    pub binding: Binding,
    pub trace: Vec<TraceStep>,
    /// Position in the iteration order.
    pub index: u64,
}

impl Witness {
    pub fn named_bindings(&self) -> Vec<(&'static str, Bound)> {
        let spec = self.postulate.spec();
        spec.sets
            .iter()
            .zip(self.binding.sets())
            .map(|(n, s)| (*n, Bound::Set(*s)))
            .chain(spec.worlds.iter().zip(self.binding.worlds()).map(|(n, w)| (*n, Bound::World(*w))))
            .collect()
    }

    /// Re-evaluates the predicate; a genuine witness yields `Ok(false)`.
    pub fn revalidate(&self, op: &RevisionOperator) -> Result<bool, CheckError> {
        check_instance(self.postulate, op, &self.state, &self.binding)
    }
}

pub fn check_instance(
    p: PostulateId,
    op: &RevisionOperator,
    s: &State,
    bindings: &Binding,
) -> Result<bool, CheckError> {
    Checker::new(op, s)?.check(p, bindings)
}

/// Returns the first witness against `p`, or `None` if it holds everywhere.
pub fn verify_all(
    p: PostulateId,
    op: &RevisionOperator,
    s: &State,
    exec: Execution,
    limits: &Limits,
) -> Result<Option<Witness>, CheckError> {
    Ok(Checker::new(op, s)?.verify(p, exec, limits)?.witness)
}

/// `B` overrules `A`: `A ∉ [(Ψ∗A)∗B]`.
pub fn overrules(op: &RevisionOperator, s: &State, a: WorldSet, b: WorldSet) -> Result<bool, CheckError> {
    if a.is_empty() || b.is_empty() {
        return Err(ReviseError::EmptyInput.into());
    }
    let post = op.revise(s, a)?;
    Ok(!post.min_unchecked(b).is_subset(a))
}

/// `B` strictly overrules `A`: `¬A ∈ [(Ψ∗A)∗B]`.
pub fn strictly_overrules(op: &RevisionOperator, s: &State, a: WorldSet, b: WorldSet) -> Result<bool, CheckError> {
    if a.is_empty() || b.is_empty() {
        return Err(ReviseError::EmptyInput.into());
    }
    let post = op.revise(s, a)?;
    Ok(!post.min_unchecked(b).intersects(a))
}
