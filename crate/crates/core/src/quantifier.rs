//! Path-quantifier words over {A, E}, their normalization to the eight
//! canonical forms, and the implication order between those forms.

use std::fmt;

use thiserror::Error;

/// One quantifier letter: `A` hands control of path extension to the
/// adversary, `E` to the friendly player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Q {
    A,
    E,
}

impl Q {
    pub fn symbol(self) -> char {
        match self {
            Q::A => 'A',
            Q::E => 'E',
        }
    }
}

/// An ultimately periodic quantifier word `prefix · period^ω`; an empty
/// period denotes a finite quantifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathQuantifier {
    pub prefix: Vec<Q>,
    pub period: Vec<Q>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuantifierError {
    #[error("quantifier syntax error at offset {0}")]
    Syntax(usize),
    #[error("empty quantifier")]
    Empty,
}

impl PathQuantifier {
    pub fn finite(prefix: Vec<Q>) -> Result<PathQuantifier, QuantifierError> {
        if prefix.is_empty() {
            return Err(QuantifierError::Empty);
        }
        Ok(PathQuantifier {
            prefix,
            period: Vec::new(),
        })
    }

    pub fn periodic(prefix: Vec<Q>, period: Vec<Q>) -> Result<PathQuantifier, QuantifierError> {
        if period.is_empty() && prefix.is_empty() {
            return Err(QuantifierError::Empty);
        }
        Ok(PathQuantifier { prefix, period })
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }
}

impl fmt::Display for PathQuantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in &self.prefix {
            write!(f, "{}", q.symbol())?;
        }
        if !self.period.is_empty() {
            write!(f, "(")?;
            for q in &self.period {
                write!(f, "{}", q.symbol())?;
            }
            write!(f, ")^w")?;
        }
        Ok(())
    }
}

/// Grammar: `[AE]* ( '(' [AE]+ ')^w' )?`, total word nonempty.
pub fn parse_quantifier(text: &str) -> Result<PathQuantifier, QuantifierError> {
    let bytes = text.trim();
    let mut prefix = Vec::new();
    let mut chars = bytes.char_indices().peekable();
    while let Some(&(_, c)) = chars.peek() {
        match c {
            'A' => prefix.push(Q::A),
            'E' => prefix.push(Q::E),
            _ => break,
        }
        chars.next();
    }
    match chars.next() {
        None => PathQuantifier::finite(prefix),
        Some((i, '(')) => {
            let mut period = Vec::new();
            loop {
                match chars.next() {
                    Some((_, 'A')) => period.push(Q::A),
                    Some((_, 'E')) => period.push(Q::E),
                    Some((j, ')')) => {
                        if period.is_empty() {
                            return Err(QuantifierError::Syntax(j));
                        }
                        break;
                    }
                    Some((j, _)) => return Err(QuantifierError::Syntax(j)),
                    None => return Err(QuantifierError::Syntax(bytes.len())),
                }
            }
            match (chars.next(), chars.next(), chars.next()) {
                (Some((_, '^')), Some((_, 'w')), None) => {
                    PathQuantifier::periodic(prefix, period)
                }
                (Some((j, _)), _, _) => Err(QuantifierError::Syntax(j)),
                (None, _, _) => Err(QuantifierError::Syntax(bytes.len())),
            }
            .map_err(|e| {
                let _ = i;
                e
            })
        }
        Some((i, _)) => Err(QuantifierError::Syntax(i)),
    }
}

/// The eight canonical path quantifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalQuantifier {
    A,
    E,
    AE,
    EA,
    AEA,
    EAE,
    /// `(AE)^ω`
    AEw,
    /// `(EA)^ω`
    EAw,
}

pub const ALL_CANONICAL: [CanonicalQuantifier; 8] = [
    CanonicalQuantifier::A,
    CanonicalQuantifier::E,
    CanonicalQuantifier::AE,
    CanonicalQuantifier::EA,
    CanonicalQuantifier::AEA,
    CanonicalQuantifier::EAE,
    CanonicalQuantifier::AEw,
    CanonicalQuantifier::EAw,
];

impl CanonicalQuantifier {
    pub fn as_word(self) -> PathQuantifier {
        use CanonicalQuantifier::*;
        use Q::{A, E};
        let (prefix, period) = match self {
            CanonicalQuantifier::A => (vec![Q::A], vec![]),
            CanonicalQuantifier::E => (vec![Q::E], vec![]),
            AE => (vec![A, E], vec![]),
            EA => (vec![E, A], vec![]),
            AEA => (vec![A, E, A], vec![]),
            EAE => (vec![E, A, E], vec![]),
            AEw => (vec![], vec![A, E]),
            EAw => (vec![], vec![E, A]),
        };
        PathQuantifier { prefix, period }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, CanonicalQuantifier::AEw | CanonicalQuantifier::EAw)
    }
}

impl fmt::Display for CanonicalQuantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CanonicalQuantifier::A => "A",
            CanonicalQuantifier::E => "E",
            CanonicalQuantifier::AE => "AE",
            CanonicalQuantifier::EA => "EA",
            CanonicalQuantifier::AEA => "AEA",
            CanonicalQuantifier::EAE => "EAE",
            CanonicalQuantifier::AEw => "(AE)^w",
            CanonicalQuantifier::EAw => "(EA)^w",
        };
        write!(f, "{s}")
    }
}

fn collapse_adjacent(word: &[Q]) -> Vec<Q> {
    let mut out: Vec<Q> = Vec::with_capacity(word.len());
    for &q in word {
        if out.last() != Some(&q) {
            out.push(q);
        }
    }
    out
}

/// Normalizes a quantifier word to its canonical form.
///
/// Adjacent equal letters collapse; a period mixing both letters makes the
/// word equivalent to an infinite strict alternation, decided by the first
/// letter of the collapsed word; an all-A or all-E period folds into a final
/// letter; finite alternating words shorten two letters at a time until
/// length three or less.
pub fn normalize(q: &PathQuantifier) -> CanonicalQuantifier {
    let period = collapse_adjacent(&q.period);
    if period.contains(&Q::A) && period.contains(&Q::E) {
        let mut word = q.prefix.clone();
        word.extend(&q.period);
        let collapsed = collapse_adjacent(&word);
        return match collapsed.first() {
            Some(Q::A) => CanonicalQuantifier::AEw,
            _ => CanonicalQuantifier::EAw,
        };
    }
    // Finite word: either there was no period, or the period repeats a single
    // letter and folds into one trailing occurrence of it.
    let mut word = q.prefix.clone();
    if let Some(&letter) = period.first() {
        word.push(letter);
    }
    let mut word = collapse_adjacent(&word);
    while word.len() > 3 {
        // After duplicate collapsing the word strictly alternates, so it
        // starts with AEAE or EAEA; both rewrite by dropping two letters.
        word.drain(1..3);
    }
    match word.as_slice() {
        [Q::A] => CanonicalQuantifier::A,
        [Q::E] => CanonicalQuantifier::E,
        [Q::A, Q::E] => CanonicalQuantifier::AE,
        [Q::E, Q::A] => CanonicalQuantifier::EA,
        [Q::A, Q::E, Q::A] => CanonicalQuantifier::AEA,
        [Q::E, Q::A, Q::E] => CanonicalQuantifier::EAE,
        _ => unreachable!("collapsed nonempty alternating word of length <= 3"),
    }
}

/// Direct edges of the canonical implication diagram.
const IMPLICATION_EDGES: [(CanonicalQuantifier, CanonicalQuantifier); 9] = {
    use CanonicalQuantifier::*;
    [
        (A, AEA),
        (AEA, AEw),
        (AEw, AE),
        (AEA, EA),
        (AEw, EAw),
        (EA, EAw),
        (EAw, EAE),
        (AE, EAE),
        (EAE, E),
    ]
};

fn canonical_index(c: CanonicalQuantifier) -> usize {
    ALL_CANONICAL.iter().position(|&x| x == c).unwrap()
}

/// Whether a goal under `a` implies the same goal under `b` on every tree:
/// reflexive-transitive reachability in the implication diagram.
pub fn implies(a: CanonicalQuantifier, b: CanonicalQuantifier) -> bool {
    if a == b {
        return true;
    }
    let mut reach = [false; 8];
    reach[canonical_index(a)] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &(x, y) in &IMPLICATION_EDGES {
            if reach[canonical_index(x)] && !reach[canonical_index(y)] {
                reach[canonical_index(y)] = true;
                changed = true;
            }
        }
    }
    reach[canonical_index(b)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use CanonicalQuantifier::*;

    fn norm(text: &str) -> CanonicalQuantifier {
        normalize(&parse_quantifier(text).unwrap())
    }

    #[test]
    fn parse_examples() {
        let q = parse_quantifier("AEA").unwrap();
        assert_eq!(q.prefix, vec![Q::A, Q::E, Q::A]);
        assert!(q.period.is_empty());
        let q = parse_quantifier("(AE)^w").unwrap();
        assert!(q.prefix.is_empty());
        assert_eq!(q.period, vec![Q::A, Q::E]);
        let q = parse_quantifier("E(A)^w").unwrap();
        assert_eq!(q.prefix, vec![Q::E]);
        assert_eq!(q.period, vec![Q::A]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(parse_quantifier(""), Err(QuantifierError::Empty));
        assert!(parse_quantifier("AXE").is_err());
        assert!(parse_quantifier("(AE)").is_err());
        assert!(parse_quantifier("()^w").is_err());
        assert!(parse_quantifier("A(E)^w extra").is_err());
    }

    #[test]
    fn normalize_fixture_words() {
        // Hand-normalized fixtures covering all the rewrite steps.
        for (word, expected) in [
            ("AA", A),
            ("AEAE", AE),
            ("EAEAE", EAE),
            ("E(A)^w", EA),
            ("(EAAE)^w", EAw),
            ("A(EA)^w", AEw),
            ("A", A),
            ("E", E),
            ("AE", AE),
            ("EA", EA),
            ("AEA", AEA),
            ("EAE", EAE),
            ("(AE)^w", AEw),
            ("(EA)^w", EAw),
            ("EE", E),
            ("AAEE", AE),
            ("EAEA", EA),
            ("AEAEA", AEA),
            ("AAAEEEAAA", AEA),
            ("EEAAEE", EAE),
            ("(A)^w", A),
            ("(E)^w", E),
            ("AE(E)^w", AE),
            ("AE(A)^w", AEA),
            ("EA(EEAA)^w", EAw),
            ("(AAE)^w", AEw),
        ] {
            assert_eq!(norm(word), expected, "normalize({word})");
        }
    }

    #[test]
    fn implication_diagram_examples() {
        assert!(implies(A, E));
        assert!(!implies(AE, EA));
        assert!(!implies(EA, AE));
        assert!(implies(AEw, EAw));
        assert!(!implies(EAw, AEw));
        for c in ALL_CANONICAL {
            assert!(implies(c, c));
        }
    }

    #[test]
    fn implication_closure_pairs() {
        // Reflexive-transitive closure of the nine diagram edges.
        let expected: Vec<(CanonicalQuantifier, Vec<CanonicalQuantifier>)> = vec![
            (A, vec![A, AEA, AEw, AE, EA, EAw, EAE, E]),
            (AEA, vec![AEA, AEw, AE, EA, EAw, EAE, E]),
            (AEw, vec![AEw, AE, EAw, EAE, E]),
            (AE, vec![AE, EAE, E]),
            (EA, vec![EA, EAw, EAE, E]),
            (EAw, vec![EAw, EAE, E]),
            (EAE, vec![EAE, E]),
            (E, vec![E]),
        ];
        for (src, reachable) in expected {
            for dst in ALL_CANONICAL {
                assert_eq!(
                    implies(src, dst),
                    reachable.contains(&dst),
                    "implies({src}, {dst})"
                );
            }
        }
    }

    #[test]
    fn partial_order_properties() {
        // antisymmetry and transitivity over the eight values
        for a in ALL_CANONICAL {
            for b in ALL_CANONICAL {
                if a != b {
                    assert!(!(implies(a, b) && implies(b, a)), "{a} ~ {b}");
                }
                for c in ALL_CANONICAL {
                    if implies(a, b) && implies(b, c) {
                        assert!(implies(a, c));
                    }
                }
            }
        }
        // A is the unique source, E the unique sink.
        for c in ALL_CANONICAL {
            assert!(implies(A, c));
            assert!(implies(c, E));
        }
    }

    fn arbitrary_word() -> impl Strategy<Value = PathQuantifier> {
        let letter = prop_oneof![Just(Q::A), Just(Q::E)];
        let prefix = proptest::collection::vec(letter.clone(), 0..12);
        let period = proptest::collection::vec(letter, 0..6);
        (prefix, period).prop_filter_map("nonempty", |(prefix, period)| {
            PathQuantifier::periodic(prefix, period).ok()
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(q in arbitrary_word()) {
            let c = normalize(&q);
            prop_assert_eq!(normalize(&c.as_word()), c);
        }

        #[test]
        fn normalize_ignores_duplicate_insertion(
            q in arbitrary_word(),
            pos_seed in 0usize..64,
        ) {
            let c = normalize(&q);
            let mut dup = q.clone();
            if !dup.prefix.is_empty() {
                let pos = pos_seed % dup.prefix.len();
                let letter = dup.prefix[pos];
                dup.prefix.insert(pos, letter);
            } else if !dup.period.is_empty() {
                // duplicating inside the period changes the denoted word, so
                // duplicate by extending the prefix with the period head
                let letter = dup.period[0];
                dup.prefix.push(letter);
            }
            prop_assert_eq!(normalize(&dup), c);
        }

        #[test]
        fn normalize_yields_canonical(q in arbitrary_word()) {
            let c = normalize(&q);
            prop_assert!(ALL_CANONICAL.contains(&c));
        }
    }
}
