//! Propositional sentences, worlds and model sets.
//!
//! A world space is either *propositional* (all valuations of an atom table)
//! or *abstract* (named points). In abstract mode the world names double as
//! atoms: the atom `x` denotes the singleton `{x}`.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use thiserror::Error;

/// Largest world space representable by a [`WorldSet`].
pub const MAX_WORLDS: usize = 64;

/// Default cap on the number of atoms in propositional mode.
pub const MAX_ATOMS: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    /// Parser rejected the input.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    /// Identifier not present in the symbol table.
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    /// Atom or world name does not match `[A-Za-z][A-Za-z0-9_]*`.
    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("too many atoms: {0} (at most {MAX_ATOMS})")]
    TooManyAtoms(usize),
    #[error("world space must contain between 1 and {MAX_WORLDS} worlds, got {0}")]
    BadWorldCount(usize),
    /// Two sets over different world spaces were combined.
    #[error("world-space size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("world index {index} out of range for {size} worlds")]
    WorldOutOfRange { index: usize, size: usize },
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
}

/// A point of the finite outcome space, identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct World(u8);

impl World {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_WORLDS, "world index {index} out of range");
        World(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset of a world space of known size, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet {
    size: u8,
    bits: u64,
}

fn full_mask(size: usize) -> u64 {
    if size == 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

impl WorldSet {
    pub fn empty(size: usize) -> Self {
        assert!(size <= MAX_WORLDS);
        WorldSet { size: size as u8, bits: 0 }
    }

    pub fn full(size: usize) -> Self {
        assert!(size <= MAX_WORLDS);
        WorldSet { size: size as u8, bits: full_mask(size) }
    }

    pub fn from_bits(size: usize, bits: u64) -> Result<Self, LogicError> {
        if size == 0 || size > MAX_WORLDS {
            return Err(LogicError::BadWorldCount(size));
        }
        if bits & !full_mask(size) != 0 {
            let index = 63 - (bits & !full_mask(size)).leading_zeros() as usize;
            return Err(LogicError::WorldOutOfRange { index, size });
        }
        Ok(WorldSet { size: size as u8, bits })
    }

    pub fn singleton(size: usize, w: World) -> Self {
        assert!(w.index() < size);
        WorldSet { size: size as u8, bits: 1 << w.index() }
    }

    pub fn from_worlds<I: IntoIterator<Item = World>>(size: usize, worlds: I) -> Self {
        let mut s = WorldSet::empty(size);
        for w in worlds {
            assert!(w.index() < size);
            s.bits |= 1 << w.index();
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Number of worlds in the underlying space.
    pub fn size(self) -> usize {
        self.size as usize
    }

    /// Number of members.
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, w: World) -> bool {
        w.index() < self.size() && self.bits >> w.index() & 1 == 1
    }

    pub fn is_subset(self, other: WorldSet) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    pub fn intersects(self, other: WorldSet) -> bool {
        self.check(other);
        self.bits & other.bits != 0
    }

    pub fn iter(self) -> impl Iterator<Item = World> {
        let bits = self.bits;
        (0..self.size()).filter(move |i| bits >> i & 1 == 1).map(World::new)
    }

    pub fn complement(self) -> WorldSet {
        WorldSet { size: self.size, bits: !self.bits & full_mask(self.size()) }
    }

    pub fn union(self, other: WorldSet) -> Result<WorldSet, LogicError> {
        self.same_size(other)?;
        Ok(self | other)
    }

    pub fn intersection(self, other: WorldSet) -> Result<WorldSet, LogicError> {
        self.same_size(other)?;
        Ok(self & other)
    }

    pub fn difference(self, other: WorldSet) -> Result<WorldSet, LogicError> {
        self.same_size(other)?;
        Ok(self - other)
    }

    pub fn symmetric_difference(self, other: WorldSet) -> Result<WorldSet, LogicError> {
        self.same_size(other)?;
        Ok(self ^ other)
    }

    fn same_size(self, other: WorldSet) -> Result<(), LogicError> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(LogicError::SizeMismatch(self.size(), other.size()))
        }
    }

    #[inline]
    fn check(self, other: WorldSet) {
        assert_eq!(self.size, other.size, "world-space size mismatch");
    }

    /// All nonempty subsets of a space of `size` worlds, by ascending bitmask.
    pub fn nonempty_subsets(size: usize) -> impl Iterator<Item = WorldSet> {
        assert!(size < 64, "cannot enumerate subsets of {size} worlds");
        (1..=full_mask(size)).map(move |bits| WorldSet { size: size as u8, bits })
    }
}

macro_rules! set_op {
    ($trait:ident, $method:ident, $expr:expr) => {
        impl $trait for WorldSet {
            type Output = WorldSet;
            #[inline]
            fn $method(self, rhs: WorldSet) -> WorldSet {
                self.check(rhs);
                let f: fn(u64, u64) -> u64 = $expr;
                WorldSet { size: self.size, bits: f(self.bits, rhs.bits) }
            }
        }
    };
}

set_op!(BitOr, bitor, |a, b| a | b);
set_op!(BitAnd, bitand, |a, b| a & b);
set_op!(BitXor, bitxor, |a, b| a ^ b);
set_op!(Sub, sub, |a, b| a & !b);

impl Not for WorldSet {
    type Output = WorldSet;
    fn not(self) -> WorldSet {
        self.complement()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Ordered, duplicate-free list of symbol names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtomTable {
    names: Vec<String>,
}

impl AtomTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, LogicError> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) || n == "T" || n == "F" {
                return Err(LogicError::InvalidIdentifier(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(LogicError::DuplicateName(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(AtomTable { names: out })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Abstract syntax of a sentence; atoms index into a symbol table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sentence {
    Top,
    Bot,
    Atom(usize),
    Not(Box<Sentence>),
    And(Box<Sentence>, Box<Sentence>),
    Xor(Box<Sentence>, Box<Sentence>),
    Or(Box<Sentence>, Box<Sentence>),
    Implies(Box<Sentence>, Box<Sentence>),
    Iff(Box<Sentence>, Box<Sentence>),
}

impl Sentence {
    /// Truth value under a valuation of the atoms.
    pub fn eval(&self, v: &dyn Fn(usize) -> bool) -> bool {
        match self {
            Sentence::Top => true,
            Sentence::Bot => false,
            Sentence::Atom(i) => v(*i),
            Sentence::Not(s) => !s.eval(v),
            Sentence::And(a, b) => a.eval(v) && b.eval(v),
            Sentence::Xor(a, b) => a.eval(v) != b.eval(v),
            Sentence::Or(a, b) => a.eval(v) || b.eval(v),
            Sentence::Implies(a, b) => !a.eval(v) || b.eval(v),
            Sentence::Iff(a, b) => a.eval(v) == b.eval(v),
        }
    }

    fn max_atom(&self) -> Option<usize> {
        match self {
            Sentence::Top | Sentence::Bot => None,
            Sentence::Atom(i) => Some(*i),
            Sentence::Not(s) => s.max_atom(),
            Sentence::And(a, b)
            | Sentence::Xor(a, b)
            | Sentence::Or(a, b)
            | Sentence::Implies(a, b)
            | Sentence::Iff(a, b) => a.max_atom().max(b.max_atom()),
        }
    }

    /// Binding strength; higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Sentence::Iff(..) => 1,
            Sentence::Implies(..) => 2,
            Sentence::Or(..) => 3,
            Sentence::Xor(..) => 4,
            Sentence::And(..) => 5,
            Sentence::Not(_) => 6,
            _ => 7,
        }
    }

    /// Renders the sentence with the minimal parentheses needed to re-parse it.
    pub fn display<'a>(&'a self, atoms: &'a AtomTable) -> SentenceDisplay<'a> {
        SentenceDisplay { s: self, atoms }
    }
}

pub struct SentenceDisplay<'a> {
    s: &'a Sentence,
    atoms: &'a AtomTable,
}

impl fmt::Display for SentenceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sentence(f, self.s, self.atoms)
    }
}

fn write_sentence(f: &mut fmt::Formatter<'_>, s: &Sentence, atoms: &AtomTable) -> fmt::Result {
    let child = |f: &mut fmt::Formatter<'_>, c: &Sentence, paren: bool| {
        if paren {
            write!(f, "(")?;
            write_sentence(f, c, atoms)?;
            write!(f, ")")
        } else {
            write_sentence(f, c, atoms)
        }
    };
    let p = s.precedence();
    match s {
        Sentence::Top => write!(f, "T"),
        Sentence::Bot => write!(f, "F"),
        Sentence::Atom(i) => write!(f, "{}", atoms.names[*i]),
        Sentence::Not(c) => {
            write!(f, "~")?;
            child(f, c, c.precedence() < p)
        }
        Sentence::Implies(a, b) => {
            child(f, a, a.precedence() <= p)?;
            write!(f, " -> ")?;
            child(f, b, b.precedence() < p)
        }
        Sentence::And(a, b) | Sentence::Xor(a, b) | Sentence::Or(a, b) | Sentence::Iff(a, b) => {
            let op = match s {
                Sentence::And(..) => "&",
                Sentence::Xor(..) => "^",
                Sentence::Or(..) => "|",
                _ => "<->",
            };
            child(f, a, a.precedence() < p)?;
            write!(f, " {op} ")?;
            child(f, b, b.precedence() <= p)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Xor,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, LogicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Token::Not,
            b'&' => Token::And,
            b'^' => Token::Xor,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Implies
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Token::Iff
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                Token::Ident(text[start..=i].to_string())
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(LogicError::Syntax { position: start, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    atoms: &'a AtomTable,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: &str) -> Result<T, LogicError> {
        Err(LogicError::Syntax { position: self.offset(), message: message.to_string() })
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Sentence, LogicError> {
        let mut lhs = self.implies()?;
        while self.eat(&Token::Iff) {
            lhs = Sentence::Iff(Box::new(lhs), Box::new(self.implies()?));
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Sentence, LogicError> {
        let lhs = self.or()?;
        if self.eat(&Token::Implies) {
            Ok(Sentence::Implies(Box::new(lhs), Box::new(self.implies()?)))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Sentence, LogicError> {
        let mut lhs = self.xor()?;
        while self.eat(&Token::Or) {
            lhs = Sentence::Or(Box::new(lhs), Box::new(self.xor()?));
        }
        Ok(lhs)
    }

    fn xor(&mut self) -> Result<Sentence, LogicError> {
        let mut lhs = self.and()?;
        while self.eat(&Token::Xor) {
            lhs = Sentence::Xor(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Sentence, LogicError> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::And) {
            lhs = Sentence::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Sentence, LogicError> {
        if self.eat(&Token::Not) {
            return Ok(Sentence::Not(Box::new(self.unary()?)));
        }
        match self.peek().cloned() {
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.iff()?;
                if !self.eat(&Token::RParen) {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "T" => Ok(Sentence::Top),
                    "F" => Ok(Sentence::Bot),
                    _ => self.atoms.index_of(&name).map(Sentence::Atom).ok_or(LogicError::UnknownAtom(name)),
                }
            }
            Some(_) => self.error("expected an atom, constant, `~` or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses `text` against the symbols of `atoms`.
pub fn parse_sentence(text: &str, atoms: &AtomTable) -> Result<Sentence, LogicError> {
    let mut p = Parser { tokens: tokenize(text)?, pos: 0, end: text.len(), atoms };
    let s = p.iff()?;
    if p.pos != p.tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(s)
}

/// Models of `s` when worlds are the valuations of `atoms`.
///
/// World ids read the valuation as a binary number with the first atom as
/// the most significant bit, so over `[A, C]` the world `10` has id 2.
pub fn models(s: &Sentence, atoms: &AtomTable) -> WorldSet {
    let n = atoms.len();
    assert!(n <= MAX_ATOMS, "too many atoms");
    if let Some(m) = s.max_atom() {
        assert!(m < n, "sentence refers to atom {m} outside the table");
    }
    let size = 1usize << n;
    WorldSet::from_worlds(size, (0..size).filter(|&id| s.eval(&|i| id >> (n - 1 - i) & 1 == 1)).map(World::new))
}

/// The space of worlds over which sentences are interpreted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WorldSpace {
    Propositional(AtomTable),
    /// Named points; each name is also an atom denoting its own singleton.
    Abstract(AtomTable),
}

impl WorldSpace {
    pub fn propositional<S: AsRef<str>>(atoms: &[S]) -> Result<Self, LogicError> {
        if atoms.len() > MAX_ATOMS {
            return Err(LogicError::TooManyAtoms(atoms.len()));
        }
        if atoms.is_empty() {
            return Err(LogicError::BadWorldCount(1));
        }
        Ok(WorldSpace::Propositional(AtomTable::new(atoms)?))
    }

    pub fn abstract_named<S: AsRef<str>>(names: &[S]) -> Result<Self, LogicError> {
        if names.is_empty() || names.len() > MAX_WORLDS {
            return Err(LogicError::BadWorldCount(names.len()));
        }
        Ok(WorldSpace::Abstract(AtomTable::new(names)?))
    }

    /// Default abstract space of `n` worlds: `x, y, z, w, v, u`, then `w6, w7, ...`.
    pub fn abstract_default(n: usize) -> Self {
        const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
        let names: Vec<String> =
            (0..n).map(|i| NAMES.get(i).map_or_else(|| format!("w{i}"), |s| s.to_string())).collect();
        WorldSpace::abstract_named(&names).expect("default names are valid")
    }

    pub fn symbols(&self) -> &AtomTable {
        match self {
            WorldSpace::Propositional(t) | WorldSpace::Abstract(t) => t,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            WorldSpace::Propositional(t) => 1 << t.len(),
            WorldSpace::Abstract(t) => t.len(),
        }
    }

    pub fn universe(&self) -> WorldSet {
        WorldSet::full(self.size())
    }

    pub fn world_name(&self, w: World) -> String {
        match self {
            WorldSpace::Propositional(t) => {
                let n = t.len();
                (0..n).map(|i| if w.index() >> (n - 1 - i) & 1 == 1 { '1' } else { '0' }).collect()
            }
            WorldSpace::Abstract(t) => t.names()[w.index()].clone(),
        }
    }

    pub fn world_by_name(&self, name: &str) -> Result<World, LogicError> {
        match self {
            WorldSpace::Propositional(t) => {
                if name.len() == t.len() && name.bytes().all(|b| b == b'0' || b == b'1') {
                    Ok(World::new(usize::from_str_radix(name, 2).expect("bitstring")))
                } else {
                    Err(LogicError::UnknownWorld(name.to_string()))
                }
            }
            WorldSpace::Abstract(t) => {
                t.index_of(name).map(World::new).ok_or_else(|| LogicError::UnknownWorld(name.to_string()))
            }
        }
    }

    pub fn parse(&self, text: &str) -> Result<Sentence, LogicError> {
        parse_sentence(text, self.symbols())
    }

    pub fn models(&self, s: &Sentence) -> WorldSet {
        match self {
            WorldSpace::Propositional(t) => models(s, t),
            WorldSpace::Abstract(t) => {
                let n = t.len();
                WorldSet::from_worlds(n, (0..n).filter(|&w| s.eval(&|i| i == w)).map(World::new))
            }
        }
    }

    /// Parses a sentence and returns its model set.
    pub fn parse_models(&self, text: &str) -> Result<WorldSet, LogicError> {
        Ok(self.models(&self.parse(text)?))
    }

    pub fn world_set<S: AsRef<str>>(&self, names: &[S]) -> Result<WorldSet, LogicError> {
        let worlds = names.iter().map(|n| self.world_by_name(n.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Ok(WorldSet::from_worlds(self.size(), worlds))
    }

    pub fn set_names(&self, s: WorldSet) -> Vec<String> {
        s.iter().map(|w| self.world_name(w)).collect()
    }

    /// Renders a set as `{x, y}`.
    pub fn format_set(&self, s: WorldSet) -> String {
        format!("{{{}}}", self.set_names(s).join(", "))
    }
}
