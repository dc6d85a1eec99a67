//! LTL formulas over a finite atom set, and their evaluation on ultimately
//! periodic words.
//!
//! Everything downstream (automata, games, synthesis) is validated against
//! [`eval_lasso`], which resolves `until` by a backward fixpoint on the
//! positions of the lasso instead of unrolling.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// An interned atomic proposition, an index into an [`AtomSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(pub u16);

/// Ordered finite set of atomic propositions.
///
/// Atom names are sorted, so ids and printing are deterministic for a given
/// collection of names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSet {
    names: Vec<String>,
}

const MAX_ATOMS: usize = 64;

impl AtomSet {
    pub fn new<I, S>(names: I) -> Result<AtomSet, LtlError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        names.dedup();
        if names.len() > MAX_ATOMS {
            return Err(LtlError::TooManyAtoms(names.len()));
        }
        for name in &names {
            if !is_valid_atom_name(name) {
                return Err(LtlError::BadAtomName(name.clone()));
            }
        }
        Ok(AtomSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<AtomId> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(|i| AtomId(i as u16))
    }

    pub fn name(&self, id: AtomId) -> &str {
        &self.names[id.0 as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = AtomId> {
        (0..self.names.len()).map(|i| AtomId(i as u16))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    /// True if every atom of `other` is declared here.
    pub fn contains_all(&self, other: &AtomSet) -> bool {
        other.names().all(|n| self.id(n).is_some())
    }

    /// Union of two atom sets.
    pub fn union(&self, other: &AtomSet) -> AtomSet {
        AtomSet::new(self.names().chain(other.names())).expect("union of valid atom sets")
    }
}

fn is_valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    head_ok
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(name, "true" | "false" | "X" | "F" | "G" | "U")
}

/// One position of a word: the set of atoms holding there, as a bitmask
/// relative to some [`AtomSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Letter(pub u64);

impl Letter {
    pub const EMPTY: Letter = Letter(0);

    pub fn from_atoms<I: IntoIterator<Item = AtomId>>(atoms: I) -> Letter {
        let mut bits = 0u64;
        for a in atoms {
            bits |= 1 << a.0;
        }
        Letter(bits)
    }

    pub fn has(&self, atom: AtomId) -> bool {
        self.0 & (1 << atom.0) != 0
    }

    pub fn with(&self, atom: AtomId) -> Letter {
        Letter(self.0 | (1 << atom.0))
    }

    /// Keeps only the atoms of `kept`, re-indexed relative to `kept`.
    ///
    /// `kept` must be a subset of `full`.
    pub fn project(&self, full: &AtomSet, kept: &AtomSet) -> Letter {
        let mut bits = 0u64;
        for id in kept.ids() {
            let orig = full.id(kept.name(id)).expect("projection atom declared");
            if self.has(orig) {
                bits |= 1 << id.0;
            }
        }
        Letter(bits)
    }

    pub fn display<'a>(&'a self, atoms: &'a AtomSet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Letter, &'a AtomSet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                for id in self.1.ids() {
                    if self.0.has(id) {
                        if !first {
                            write!(f, " ")?;
                        }
                        write!(f, "{}", self.1.name(id))?;
                        first = false;
                    }
                }
                Ok(())
            }
        }
        D(self, atoms)
    }
}

/// An ultimately periodic infinite word `stem · cycle^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoWord {
    pub stem: Vec<Letter>,
    pub cycle: Vec<Letter>,
}

impl LassoWord {
    pub fn new(stem: Vec<Letter>, cycle: Vec<Letter>) -> Result<LassoWord, LtlError> {
        if cycle.is_empty() {
            return Err(LtlError::EmptyLoop);
        }
        Ok(LassoWord { stem, cycle })
    }

    pub fn len(&self) -> usize {
        self.stem.len() + self.cycle.len()
    }

    /// The letter at an arbitrary position of the infinite word.
    pub fn at(&self, i: usize) -> Letter {
        if i < self.stem.len() {
            self.stem[i]
        } else {
            self.cycle[(i - self.stem.len()) % self.cycle.len()]
        }
    }

    /// Re-expresses the word over a different atom set.
    pub fn project(&self, full: &AtomSet, kept: &AtomSet) -> LassoWord {
        LassoWord {
            stem: self.stem.iter().map(|l| l.project(full, kept)).collect(),
            cycle: self.cycle.iter().map(|l| l.project(full, kept)).collect(),
        }
    }
}

/// LTL abstract syntax. Implication and disjunction are first-class so
/// formulas print the way they were written; `F`/`G` expand per their
/// until definitions only where the semantics requires it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(AtomId),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    Eventually(Box<Formula>),
    Always(Box<Formula>),
}

impl Formula {
    pub fn atom(a: AtomId) -> Formula {
        Formula::Atom(a)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn next(f: Formula) -> Formula {
        Formula::Next(Box::new(f))
    }

    pub fn until(a: Formula, b: Formula) -> Formula {
        Formula::Until(Box::new(a), Box::new(b))
    }

    pub fn eventually(f: Formula) -> Formula {
        Formula::Eventually(Box::new(f))
    }

    pub fn always(f: Formula) -> Formula {
        Formula::Always(Box::new(f))
    }

    /// Negation with double negations collapsed.
    pub fn negated(&self) -> Formula {
        match self {
            Formula::Not(f) => (**f).clone(),
            Formula::True => Formula::False,
            Formula::False => Formula::True,
            f => Formula::not(f.clone()),
        }
    }

    /// Number of temporal operators (`X`, `U`, `F`, `G`).
    pub fn temporal_size(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => 0,
            Formula::Not(f) | Formula::Next(f) | Formula::Eventually(f) | Formula::Always(f) => {
                let inner = f.temporal_size();
                if matches!(self, Formula::Not(_)) {
                    inner
                } else {
                    inner + 1
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.temporal_size() + b.temporal_size()
            }
            Formula::Until(a, b) => a.temporal_size() + b.temporal_size() + 1,
        }
    }

    /// Atoms occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<AtomId> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<AtomId>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(a) => {
                out.insert(*a);
            }
            Formula::Not(f) | Formula::Next(f) | Formula::Eventually(f) | Formula::Always(f) => {
                f.collect_atoms(out)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b)
            | Formula::Until(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Rewrites atoms into a different atom set by name.
    pub fn reindex(&self, from: &AtomSet, to: &AtomSet) -> Formula {
        match self {
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Atom(a) => Formula::Atom(
                to.id(from.name(*a))
                    .expect("reindex target declares all atoms"),
            ),
            Formula::Not(f) => Formula::not(f.reindex(from, to)),
            Formula::And(a, b) => Formula::and(a.reindex(from, to), b.reindex(from, to)),
            Formula::Or(a, b) => Formula::or(a.reindex(from, to), b.reindex(from, to)),
            Formula::Implies(a, b) => Formula::implies(a.reindex(from, to), b.reindex(from, to)),
            Formula::Next(f) => Formula::next(f.reindex(from, to)),
            Formula::Until(a, b) => Formula::until(a.reindex(from, to), b.reindex(from, to)),
            Formula::Eventually(f) => Formula::eventually(f.reindex(from, to)),
            Formula::Always(f) => Formula::always(f.reindex(from, to)),
        }
    }

    pub fn display<'a>(&'a self, atoms: &'a AtomSet) -> FormulaDisplay<'a> {
        FormulaDisplay { f: self, atoms }
    }
}

/// Deterministic printer; output re-parses to an identical tree.
pub struct FormulaDisplay<'a> {
    f: &'a Formula,
    atoms: &'a AtomSet,
}

// Binding strengths used for parenthesization: unary 4, U 3, & 2, | 1, -> 0.
fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => 0,
        Formula::Or(..) => 1,
        Formula::And(..) => 2,
        Formula::Until(..) => 3,
        _ => 4,
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self.f, self.atoms, f)
    }
}

fn write_formula(f: &Formula, atoms: &AtomSet, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    // Children print parenthesized when their operator binds no tighter than
    // the parent requires; right operands of the right-associative binary
    // operators get the relaxed bound.
    fn child(
        f: &Formula,
        atoms: &AtomSet,
        out: &mut fmt::Formatter<'_>,
        min: u8,
    ) -> fmt::Result {
        if precedence(f) < min {
            write!(out, "(")?;
            write_formula(f, atoms, out)?;
            write!(out, ")")
        } else {
            write_formula(f, atoms, out)
        }
    }
    match f {
        Formula::True => write!(out, "true"),
        Formula::False => write!(out, "false"),
        Formula::Atom(a) => write!(out, "{}", atoms.name(*a)),
        Formula::Not(g) => {
            write!(out, "!")?;
            child(g, atoms, out, 4)
        }
        Formula::Next(g) => {
            write!(out, "X ")?;
            child(g, atoms, out, 4)
        }
        Formula::Eventually(g) => {
            write!(out, "F ")?;
            child(g, atoms, out, 4)
        }
        Formula::Always(g) => {
            write!(out, "G ")?;
            child(g, atoms, out, 4)
        }
        Formula::Until(a, b) => {
            child(a, atoms, out, 4)?;
            write!(out, " U ")?;
            child(b, atoms, out, 3)
        }
        Formula::And(a, b) => {
            child(a, atoms, out, 3)?;
            write!(out, " & ")?;
            child(b, atoms, out, 3)
        }
        Formula::Or(a, b) => {
            child(a, atoms, out, 2)?;
            write!(out, " | ")?;
            child(b, atoms, out, 2)
        }
        Formula::Implies(a, b) => {
            child(a, atoms, out, 1)?;
            write!(out, " -> ")?;
            child(b, atoms, out, 0)
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LtlError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("undeclared atom `{0}`")]
    UndeclaredAtom(String),
    #[error("atom set too large ({0} atoms, maximum 64)")]
    TooManyAtoms(usize),
    #[error("invalid atom name `{0}`")]
    BadAtomName(String),
    #[error("lasso loop must be nonempty")]
    EmptyLoop,
}

/// Parses the ASCII goal-formula grammar: atoms, `true`/`false`, unary
/// `!`/`X`/`F`/`G`, binary `&`/`|`/`->`/`U` with precedence
/// unary > `U` > `&` > `|` > `->`.
pub fn parse_ltl(text: &str, atoms: &AtomSet) -> Result<Formula, LtlError> {
    let mut p = Parser {
        text,
        pos: 0,
        atoms,
    };
    p.skip_ws();
    let f = p.parse_implies()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    atoms: &'a AtomSet,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> LtlError {
        LtlError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn parse_implies(&mut self) -> Result<Formula, LtlError> {
        let lhs = self.parse_or()?;
        self.skip_ws();
        if self.eat("->") {
            self.skip_ws();
            let rhs = self.parse_implies()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_or(&mut self) -> Result<Formula, LtlError> {
        let mut lhs = self.parse_and()?;
        loop {
            self.skip_ws();
            // `|` but not `->`-lookalikes; single char, unambiguous.
            if self.peek() == Some('|') {
                self.pos += 1;
                self.skip_ws();
                let rhs = self.parse_and()?;
                lhs = Formula::or(lhs, rhs);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_and(&mut self) -> Result<Formula, LtlError> {
        let mut lhs = self.parse_until()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('&') {
                self.pos += 1;
                self.skip_ws();
                let rhs = self.parse_until()?;
                lhs = Formula::and(lhs, rhs);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_until(&mut self) -> Result<Formula, LtlError> {
        let lhs = self.parse_unary()?;
        self.skip_ws();
        if self.peek_word() == Some("U") {
            self.take_word();
            self.skip_ws();
            let rhs = self.parse_until()?;
            Ok(Formula::until(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_unary(&mut self) -> Result<Formula, LtlError> {
        self.skip_ws();
        if self.peek() == Some('!') {
            self.pos += 1;
            return Ok(Formula::not(self.parse_unary()?));
        }
        match self.peek_word() {
            Some("X") => {
                self.take_word();
                return Ok(Formula::next(self.parse_unary()?));
            }
            Some("F") => {
                self.take_word();
                return Ok(Formula::eventually(self.parse_unary()?));
            }
            Some("G") => {
                self.take_word();
                return Ok(Formula::always(self.parse_unary()?));
            }
            _ => {}
        }
        self.parse_atomic()
    }

    fn parse_atomic(&mut self) -> Result<Formula, LtlError> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.parse_implies()?;
            self.skip_ws();
            if !self.eat(")") {
                return Err(self.err("expected `)`"));
            }
            return Ok(inner);
        }
        match self.peek_word() {
            Some("true") => {
                self.take_word();
                Ok(Formula::True)
            }
            Some("false") => {
                self.take_word();
                Ok(Formula::False)
            }
            Some(w) if is_valid_atom_name(w) => {
                let name = w.to_string();
                match self.atoms.id(&name) {
                    Some(id) => {
                        self.take_word();
                        Ok(Formula::Atom(id))
                    }
                    None => Err(LtlError::UndeclaredAtom(name)),
                }
            }
            _ => Err(self.err("expected a formula")),
        }
    }

    fn peek_word(&self) -> Option<&'a str> {
        let rest = &self.text[self.pos..];
        let end = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_alphanumeric() && *c != '_')
            .map_or(rest.len(), |(i, _)| i);
        if end == 0 {
            None
        } else {
            Some(&rest[..end])
        }
    }

    fn take_word(&mut self) {
        if let Some(w) = self.peek_word() {
            self.pos += w.len();
        }
    }
}

/// Evaluates `w, i ⊨ f`. Positions at or beyond the lasso length wrap into
/// the loop. `until`/`eventually` are least fixpoints and `always` a greatest
/// fixpoint over the lasso's position graph, computed by backward sweeps.
pub fn eval_lasso(f: &Formula, w: &LassoWord, i: usize) -> bool {
    let n = w.len();
    let i = if i < n {
        i
    } else {
        w.stem.len() + (i - w.stem.len()) % w.cycle.len()
    };
    eval_all(f, w)[i]
}

fn next_pos(w: &LassoWord, i: usize) -> usize {
    if i + 1 < w.len() {
        i + 1
    } else {
        w.stem.len()
    }
}

fn eval_all(f: &Formula, w: &LassoWord) -> Vec<bool> {
    let n = w.len();
    match f {
        Formula::True => vec![true; n],
        Formula::False => vec![false; n],
        Formula::Atom(a) => (0..n).map(|i| w.at(i).has(*a)).collect(),
        Formula::Not(g) => eval_all(g, w).into_iter().map(|b| !b).collect(),
        Formula::And(a, b) => zip_with(eval_all(a, w), eval_all(b, w), |x, y| x && y),
        Formula::Or(a, b) => zip_with(eval_all(a, w), eval_all(b, w), |x, y| x || y),
        Formula::Implies(a, b) => zip_with(eval_all(a, w), eval_all(b, w), |x, y| !x || y),
        Formula::Next(g) => {
            let vg = eval_all(g, w);
            (0..n).map(|i| vg[next_pos(w, i)]).collect()
        }
        Formula::Until(a, b) => {
            let va = eval_all(a, w);
            let vb = eval_all(b, w);
            least_fixpoint(w, |v, i| vb[i] || (va[i] && v[next_pos(w, i)]))
        }
        Formula::Eventually(g) => {
            let vg = eval_all(g, w);
            least_fixpoint(w, |v, i| vg[i] || v[next_pos(w, i)])
        }
        Formula::Always(g) => {
            let vg = eval_all(g, w);
            let not_g: Vec<bool> = vg.iter().map(|b| !b).collect();
            let ev_not = least_fixpoint(w, |v, i| not_g[i] || v[next_pos(w, i)]);
            ev_not.into_iter().map(|b| !b).collect()
        }
    }
}

fn zip_with(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

fn least_fixpoint(w: &LassoWord, step: impl Fn(&[bool], usize) -> bool) -> Vec<bool> {
    let n = w.len();
    let mut v = vec![false; n];
    loop {
        let mut changed = false;
        for i in (0..n).rev() {
            let nv = step(&v, i);
            if nv != v[i] {
                v[i] = nv;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}

/// All subformulas of `f` plus their normalized negations.
pub fn closure(f: &Formula) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    collect_closure(f, &mut out);
    out
}

fn collect_closure(f: &Formula, out: &mut BTreeSet<Formula>) {
    let norm = match f {
        Formula::Not(g) => (**g).clone(),
        _ => f.clone(),
    };
    let inserted = out.insert(norm.clone());
    out.insert(norm.negated());
    if !inserted {
        return;
    }
    match &norm {
        Formula::True | Formula::False | Formula::Atom(_) => {}
        Formula::Not(g) | Formula::Next(g) | Formula::Eventually(g) | Formula::Always(g) => {
            collect_closure(g, out)
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Until(a, b) => {
            collect_closure(a, out);
            collect_closure(b, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn atoms() -> AtomSet {
        AtomSet::new(["p", "q"]).unwrap()
    }

    fn p() -> Formula {
        Formula::Atom(atoms().id("p").unwrap())
    }

    fn q() -> Formula {
        Formula::Atom(atoms().id("q").unwrap())
    }

    fn letter(names: &[&str]) -> Letter {
        let at = atoms();
        Letter::from_atoms(names.iter().map(|n| at.id(n).unwrap()))
    }

    #[test]
    fn parse_examples() {
        let at = atoms();
        let f = parse_ltl("F (p & G q)", &at).unwrap();
        assert_eq!(
            f,
            Formula::eventually(Formula::and(p(), Formula::always(q())))
        );
        assert_eq!(parse_ltl("p U q", &at).unwrap(), Formula::until(p(), q()));
    }

    #[test]
    fn parse_error_position() {
        let at = atoms();
        match parse_ltl("F !", &at) {
            Err(LtlError::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_undeclared_atom() {
        let at = atoms();
        assert_eq!(
            parse_ltl("p U r", &at),
            Err(LtlError::UndeclaredAtom("r".into()))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let at = atoms();
        // U binds tighter than &, which binds tighter than |, then ->.
        assert_eq!(
            parse_ltl("p & q U p", &at).unwrap(),
            Formula::and(p(), Formula::until(q(), p()))
        );
        assert_eq!(
            parse_ltl("p U q U p", &at).unwrap(),
            Formula::until(p(), Formula::until(q(), p()))
        );
        assert_eq!(
            parse_ltl("p | q & p -> q", &at).unwrap(),
            Formula::implies(Formula::or(p(), Formula::and(q(), p())), q())
        );
    }

    #[test]
    fn eval_examples() {
        // F p on stem=[∅], loop=[{p}]
        let w = LassoWord::new(vec![Letter::EMPTY], vec![letter(&["p"])]).unwrap();
        assert!(eval_lasso(&Formula::eventually(p()), &w, 0));

        // FG p vs GF p on loop=[{p},∅]
        let w = LassoWord::new(vec![], vec![letter(&["p"]), Letter::EMPTY]).unwrap();
        assert!(!eval_lasso(
            &Formula::eventually(Formula::always(p())),
            &w,
            0
        ));
        assert!(eval_lasso(&Formula::always(Formula::eventually(p())), &w, 0));

        // X p on stem=[{p}], loop=[∅]
        let w = LassoWord::new(vec![letter(&["p"])], vec![Letter::EMPTY]).unwrap();
        assert!(!eval_lasso(&Formula::next(p()), &w, 0));

        // p U q on stem=[{p},{p}], loop=[{q}]: positions 0..3 unrolled by
        // hand give p,p,q,q..., so the until fires at position 2.
        let w = LassoWord::new(
            vec![letter(&["p"]), letter(&["p"])],
            vec![letter(&["q"])],
        )
        .unwrap();
        assert!(eval_lasso(&Formula::until(p(), q()), &w, 0));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&p()), BTreeSet::from([p(), p().negated()]));
        let xp = Formula::next(p());
        assert_eq!(
            closure(&xp),
            BTreeSet::from([xp.clone(), xp.negated(), p(), p().negated()])
        );
        assert_eq!(closure(&Formula::until(p(), q())).len(), 6);
    }

    #[test]
    fn print_reparse_roundtrip_on_random_formulas() {
        let at = atoms();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let f = sample::random_formula(&at, 4, &mut rng);
            let printed = f.display(&at).to_string();
            let reparsed = parse_ltl(&printed, &at).unwrap_or_else(|e| {
                panic!("failed to reparse `{printed}`: {e}");
            });
            assert_eq!(f, reparsed, "round-trip mismatch for `{printed}`");
        }
    }

    proptest! {
        #[test]
        fn negation_duality(seed in 0u64..500) {
            let at = atoms();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = sample::random_formula(&at, 3, &mut rng);
            let w = sample::random_lasso(&at, 5, &mut rng);
            prop_assert_eq!(
                eval_lasso(&f.negated(), &w, 0),
                !eval_lasso(&f, &w, 0)
            );
        }

        #[test]
        fn loop_shift_invariance(seed in 0u64..500) {
            let at = atoms();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = sample::random_formula(&at, 3, &mut rng);
            let w = sample::random_lasso(&at, 5, &mut rng);
            let i = w.stem.len();
            prop_assert_eq!(
                eval_lasso(&f, &w, i),
                eval_lasso(&f, &w, i + w.cycle.len())
            );
        }

        #[test]
        fn derived_operator_expansions(seed in 0u64..500) {
            let at = atoms();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = sample::random_formula(&at, 3, &mut rng);
            let w = sample::random_lasso(&at, 5, &mut rng);
            prop_assert_eq!(
                eval_lasso(&Formula::eventually(f.clone()), &w, 0),
                eval_lasso(&Formula::until(Formula::True, f.clone()), &w, 0)
            );
            prop_assert_eq!(
                eval_lasso(&Formula::always(f.clone()), &w, 0),
                !eval_lasso(&Formula::eventually(f.negated()), &w, 0)
            );
        }
    }
}
