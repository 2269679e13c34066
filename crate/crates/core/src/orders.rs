//! Total preorders over worlds and proper ordinal interval (POI) assignments.

use thiserror::Error;

use crate::logic::{World, WorldSet};

/// Largest world count accepted by [`enumerate_tpos`].
pub const MAX_TPO_ENUM: usize = 6;
/// Largest world count accepted by [`enumerate_pois`].
pub const MAX_POI_ENUM: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("level {0} is empty")]
    EmptyLevel(usize),
    #[error("world {0} appears in more than one level")]
    Overlap(usize),
    #[error("world {0} is missing from the levels")]
    MissingWorld(usize),
    #[error("minimum of an empty set (inconsistent input)")]
    EmptySet,
    #[error("expected {expected} worlds, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    /// `plus(x) < minus(x)` fails.
    #[error("interval of world {world} is not proper: plus {plus} >= minus {minus}")]
    Flush2Violation { world: usize, plus: u32, minus: u32 },
    /// `plus(x) <= plus(y) iff minus(x) <= minus(y)` fails.
    #[error("plus and minus orders disagree on worlds {0} and {1}")]
    Order3Violation(usize, usize),
    #[error("world count {n} outside enumeration bounds 1..={max}")]
    OutOfBounds { n: usize, max: usize },
}

/// Maps arbitrary ranks onto `0..k` preserving order and ties.
pub fn canonicalize(ranks: &[u32]) -> Vec<u8> {
    let mut distinct: Vec<u32> = ranks.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    ranks.iter().map(|r| distinct.binary_search(r).expect("present") as u8).collect()
}

/// A total preorder over `0..n`, stored as contiguous ranks starting at 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tpo {
    rank: Vec<u8>,
}

impl Tpo {
    /// Builds a TPO from any rank vector; lower rank means more plausible.
    pub fn from_ranks(ranks: &[u32]) -> Tpo {
        assert!(!ranks.is_empty() && ranks.len() <= crate::logic::MAX_WORLDS);
        Tpo { rank: canonicalize(ranks) }
    }

    pub fn from_levels(levels: &[WorldSet]) -> Result<Tpo, OrderError> {
        tpo_from_levels(levels)
    }

    /// The flat preorder where all worlds tie.
    pub fn flat(n: usize) -> Tpo {
        Tpo::from_ranks(&vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn ranks(&self) -> &[u8] {
        &self.rank
    }

    pub fn rank(&self, w: World) -> u8 {
        self.rank[w.index()]
    }

    /// Number of levels.
    pub fn height(&self) -> usize {
        self.rank.iter().max().map_or(0, |m| *m as usize + 1)
    }

    #[inline]
    pub fn leq(&self, x: World, y: World) -> bool {
        self.rank[x.index()] <= self.rank[y.index()]
    }

    #[inline]
    pub fn lt(&self, x: World, y: World) -> bool {
        self.rank[x.index()] < self.rank[y.index()]
    }

    #[inline]
    pub fn equiv(&self, x: World, y: World) -> bool {
        self.rank[x.index()] == self.rank[y.index()]
    }

    pub fn universe(&self) -> WorldSet {
        WorldSet::full(self.len())
    }

    pub fn levels(&self) -> Vec<WorldSet> {
        (0..self.height())
            .map(|r| {
                WorldSet::from_worlds(
                    self.len(),
                    (0..self.len()).filter(|&w| self.rank[w] as usize == r).map(World::new),
                )
            })
            .collect()
    }

    /// Most plausible members of `s`.
    pub fn min_worlds(&self, s: WorldSet) -> Result<WorldSet, OrderError> {
        if s.size() != self.len() {
            return Err(OrderError::SizeMismatch { expected: self.len(), got: s.size() });
        }
        if s.is_empty() {
            return Err(OrderError::EmptySet);
        }
        Ok(self.min_unchecked(s))
    }

    /// `min_worlds` without validation; an empty `s` yields the empty set.
    #[inline]
    pub(crate) fn min_unchecked(&self, s: WorldSet) -> WorldSet {
        let mut best = u8::MAX;
        let mut bits = 0u64;
        let mut rest = s.bits();
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let r = self.rank[w];
            if r < best {
                best = r;
                bits = 1 << w;
            } else if r == best {
                bits |= 1 << w;
            }
        }
        WorldSet::from_bits(self.len(), bits).expect("subset of universe")
    }

    /// The belief set's models: the bottom level.
    pub fn bottom(&self) -> WorldSet {
        self.min_unchecked(self.universe())
    }
}

pub fn tpo_from_levels(levels: &[WorldSet]) -> Result<Tpo, OrderError> {
    let n = levels.first().map_or(0, |l| l.size());
    let mut rank = vec![u32::MAX; n];
    for (i, level) in levels.iter().enumerate() {
        if level.size() != n {
            return Err(OrderError::SizeMismatch { expected: n, got: level.size() });
        }
        if level.is_empty() {
            return Err(OrderError::EmptyLevel(i));
        }
        for w in level.iter() {
            if rank[w.index()] != u32::MAX {
                return Err(OrderError::Overlap(w.index()));
            }
            rank[w.index()] = i as u32;
        }
    }
    if n == 0 {
        return Err(OrderError::EmptyLevel(0));
    }
    if let Some(w) = rank.iter().position(|&r| r == u32::MAX) {
        return Err(OrderError::MissingWorld(w));
    }
    Ok(Tpo::from_ranks(&rank))
}

/// Ranks of the points `x⁺` and `x⁻` of each world on one shared scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PoiAssignment {
    plus: Vec<u8>,
    minus: Vec<u8>,
}

impl PoiAssignment {
    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }

    #[inline]
    pub fn plus(&self, w: World) -> u8 {
        self.plus[w.index()]
    }

    #[inline]
    pub fn minus(&self, w: World) -> u8 {
        self.minus[w.index()]
    }

    pub fn plus_ranks(&self) -> &[u8] {
        &self.plus
    }

    pub fn minus_ranks(&self) -> &[u8] {
        &self.minus
    }

    /// True when no `plus(x)` ties any `minus(y)`.
    pub fn is_non_flush(&self) -> bool {
        self.plus.iter().all(|p| !self.minus.contains(p))
    }

    /// The POI with every plus point below every minus point, faithful to `t`.
    pub fn lexicographic(t: &Tpo) -> PoiAssignment {
        let k = t.height() as u32;
        let plus: Vec<u32> = t.ranks().iter().map(|&r| r as u32).collect();
        let minus: Vec<u32> = plus.iter().map(|r| r + k).collect();
        poi_from_ranks(&plus, &minus).expect("lexicographic POI is valid")
    }
}

/// Validates and canonicalizes a POI assignment.
pub fn poi_from_ranks(plus: &[u32], minus: &[u32]) -> Result<PoiAssignment, OrderError> {
    let n = plus.len();
    if minus.len() != n {
        return Err(OrderError::SizeMismatch { expected: n, got: minus.len() });
    }
    if n == 0 || n > crate::logic::MAX_WORLDS {
        return Err(OrderError::SizeMismatch { expected: 1, got: n });
    }
    for x in 0..n {
        if plus[x] >= minus[x] {
            return Err(OrderError::Flush2Violation { world: x, plus: plus[x], minus: minus[x] });
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if (plus[x] <= plus[y]) != (minus[x] <= minus[y]) || (plus[y] <= plus[x]) != (minus[y] <= minus[x]) {
                return Err(OrderError::Order3Violation(x, y));
            }
        }
    }
    let all: Vec<u32> = plus.iter().chain(minus).copied().collect();
    let c = canonicalize(&all);
    Ok(PoiAssignment { plus: c[..n].to_vec(), minus: c[n..].to_vec() })
}

/// The unique TPO to which `p` is faithful: worlds ranked by their plus points.
pub fn derived_tpo(p: &PoiAssignment) -> Tpo {
    Tpo::from_ranks(&p.plus.iter().map(|&r| r as u32).collect::<Vec<_>>())
}

/// An epistemic state: a bare TPO or a POI assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum State {
    Tpo(Tpo),
    Poi(PoiAssignment),
}

impl State {
    pub fn len(&self) -> usize {
        match self {
            State::Tpo(t) => t.len(),
            State::Poi(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The state's TPO; derived for POI states.
    pub fn tpo(&self) -> Tpo {
        match self {
            State::Tpo(t) => t.clone(),
            State::Poi(p) => derived_tpo(p),
        }
    }

    pub fn poi(&self) -> Option<&PoiAssignment> {
        match self {
            State::Poi(p) => Some(p),
            State::Tpo(_) => None,
        }
    }
}

impl From<Tpo> for State {
    fn from(t: Tpo) -> Self {
        State::Tpo(t)
    }
}

impl From<PoiAssignment> for State {
    fn from(p: PoiAssignment) -> Self {
        State::Poi(p)
    }
}

/// Every TPO over `n` worlds, as ordered set partitions.
///
/// Order: the bottom level is chosen first, by ascending bitmask, then the
/// remaining levels recursively.
pub fn enumerate_tpos(n: usize) -> Result<impl Iterator<Item = Tpo>, OrderError> {
    if n == 0 || n > MAX_TPO_ENUM {
        return Err(OrderError::OutOfBounds { n, max: MAX_TPO_ENUM });
    }
    let mut out = Vec::new();
    let mut ranks = vec![0u32; n];
    ordered_partitions((1u64 << n) - 1, 0, &mut ranks, &mut out);
    Ok(out.into_iter())
}

fn ordered_partitions(rest: u64, level: u32, ranks: &mut [u32], out: &mut Vec<Tpo>) {
    if rest == 0 {
        out.push(Tpo::from_ranks(ranks));
        return;
    }
    // nonempty submasks of `rest` in ascending order
    let mut sub = 0u64;
    loop {
        sub = sub.wrapping_sub(rest) & rest;
        if sub == 0 {
            break;
        }
        for (w, r) in ranks.iter_mut().enumerate() {
            if sub >> w & 1 == 1 {
                *r = level;
            }
        }
        ordered_partitions(rest & !sub, level + 1, ranks, out);
    }
}

/// Every canonical POI assignment over `n` worlds.
///
/// Each TPO over the plus points fixes the minus order too; what remains is
/// how the two chains of levels interleave, with level `i` of the plus chain
/// strictly below level `i` of the minus chain and at most one plus level
/// sharing a rank with one minus level.
pub fn enumerate_pois(n: usize) -> Result<impl Iterator<Item = PoiAssignment>, OrderError> {
    if n == 0 || n > MAX_POI_ENUM {
        return Err(OrderError::OutOfBounds { n, max: MAX_POI_ENUM });
    }
    let mut out = Vec::new();
    for t in enumerate_tpos(n)? {
        let k = t.height();
        let mut plus_at = vec![0u32; k];
        let mut minus_at = vec![0u32; k];
        interleave(&t, 0, 0, 0, &mut plus_at, &mut minus_at, &mut out);
    }
    Ok(out.into_iter())
}

fn interleave(
    t: &Tpo,
    i: usize,
    j: usize,
    next: u32,
    plus_at: &mut [u32],
    minus_at: &mut [u32],
    out: &mut Vec<PoiAssignment>,
) {
    let k = plus_at.len();
    if j == k {
        let plus: Vec<u32> = t.ranks().iter().map(|&r| plus_at[r as usize]).collect();
        let minus: Vec<u32> = t.ranks().iter().map(|&r| minus_at[r as usize]).collect();
        out.push(poi_from_ranks(&plus, &minus).expect("interleaving is valid"));
        return;
    }
    if i < k {
        plus_at[i] = next;
        interleave(t, i + 1, j, next + 1, plus_at, minus_at, out);
    }
    if j < i {
        minus_at[j] = next;
        interleave(t, i, j + 1, next + 1, plus_at, minus_at, out);
        if i < k {
            plus_at[i] = next;
            interleave(t, i + 1, j + 1, next + 1, plus_at, minus_at, out);
        }
    }
}
