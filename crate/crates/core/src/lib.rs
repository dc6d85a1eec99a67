//! Planning toolkit for nondeterministic domains with temporally extended
//! goals of the form `α.φ`: a path quantifier `α` over {A, E} applied to an
//! LTL formula `φ`.
//!
//! The crate provides:
//! - [`ltl`]: formulas, parsing, and ground-truth evaluation on lasso words;
//! - [`quantifier`]: quantifier words, the eight canonical forms, and their
//!   implication order;
//! - [`domain`]: nondeterministic planning domains, finite-memory plans, and
//!   execution graphs;
//! - [`automata`]: LTL → nondeterministic Büchi → deterministic parity word
//!   automata;
//! - [`games`]: parity-game solving and acceptance-combination gadgets;
//! - [`checker`]: deciding whether a plan satisfies a goal, per canonical
//!   quantifier;
//! - [`synth`]: plan synthesis via parity games, plus specialized
//!   reachability/maintainability planners;
//! - [`oracle`]: brute-force decision procedures used as test-time ground
//!   truth;
//! - [`batch`]: data-parallel drivers for the randomized suites.

pub mod automata;
pub mod batch;
pub mod checker;
pub mod domain;
pub mod games;
pub mod ltl;
pub mod oracle;
pub mod quantifier;
pub mod sample;
pub mod synth;
