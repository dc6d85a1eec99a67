//! Nondeterministic planning domains, finite-memory plans, and their product
//! execution graph, plus the example-domain generators and the line-based
//! file formats for both.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::ltl::{AtomSet, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionId(pub u32);

/// A nondeterministic planning domain: ordered states, an initial state,
/// actions, a partial transition map to ordered successor tuples, and an
/// atom labeling per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanningDomain {
    atoms: AtomSet,
    state_names: Vec<String>,
    action_names: Vec<String>,
    init: StateId,
    labels: Vec<Letter>,
    transitions: BTreeMap<(StateId, ActionId), Vec<StateId>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("domain has no states")]
    NoStates,
    #[error("no initial state declared")]
    NoInit,
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("alphabet letters `e` and `init` are reserved")]
    Reserved,
    #[error(transparent)]
    Atoms(#[from] crate::ltl::LtlError),
}

/// An invariant violation reported by [`PlanningDomain::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// State has no applicable action with a successor.
    Seriality(String),
    /// Successor tuple not sorted by the state order.
    UnorderedSuccessors { state: String, action: String },
    /// Successor tuple contains a duplicate.
    DuplicateSuccessors { state: String, action: String },
    /// Transition entry present but empty.
    EmptySuccessors { state: String, action: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Seriality(s) => write!(f, "seriality: state `{s}` has no applicable action"),
            Violation::UnorderedSuccessors { state, action } => {
                write!(f, "unordered successors for `{state}` under `{action}`")
            }
            Violation::DuplicateSuccessors { state, action } => {
                write!(f, "duplicate successors for `{state}` under `{action}`")
            }
            Violation::EmptySuccessors { state, action } => {
                write!(f, "empty successor tuple for `{state}` under `{action}`")
            }
        }
    }
}

impl PlanningDomain {
    pub fn builder(atoms: AtomSet) -> DomainBuilder {
        DomainBuilder {
            atoms,
            state_names: Vec::new(),
            action_names: Vec::new(),
            init: None,
            labels: Vec::new(),
            transitions: BTreeMap::new(),
        }
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.atoms
    }

    pub fn init(&self) -> StateId {
        self.init
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.state_names.len()).map(|i| StateId(i as u32))
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.state_names[s.0 as usize]
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.state_names
            .iter()
            .position(|n| n == name)
            .map(|i| StateId(i as u32))
    }

    pub fn action_count(&self) -> usize {
        self.action_names.len()
    }

    pub fn actions(&self) -> impl Iterator<Item = ActionId> {
        (0..self.action_names.len()).map(|i| ActionId(i as u32))
    }

    pub fn action_name(&self, a: ActionId) -> &str {
        &self.action_names[a.0 as usize]
    }

    pub fn action_by_name(&self, name: &str) -> Option<ActionId> {
        self.action_names
            .iter()
            .position(|n| n == name)
            .map(|i| ActionId(i as u32))
    }

    pub fn label(&self, s: StateId) -> Letter {
        self.labels[s.0 as usize]
    }

    /// Successor tuple of `(s, a)`; empty when the action is inapplicable.
    pub fn successors(&self, s: StateId, a: ActionId) -> &[StateId] {
        self.transitions
            .get(&(s, a))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn applicable_actions(&self, s: StateId) -> Vec<ActionId> {
        self.actions()
            .filter(|&a| !self.successors(s, a).is_empty())
            .collect()
    }

    /// Successor-tuple lengths occurring anywhere in the domain (the arity
    /// set of execution trees, kept as derived metadata).
    pub fn arities(&self) -> BTreeSet<usize> {
        self.transitions
            .values()
            .filter(|t| !t.is_empty())
            .map(Vec::len)
            .collect()
    }

    /// Checks the domain invariants; an empty list means the domain is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for ((s, a), tuple) in &self.transitions {
            let state = self.state_name(*s).to_string();
            let action = self.action_name(*a).to_string();
            if tuple.is_empty() {
                out.push(Violation::EmptySuccessors { state, action });
                continue;
            }
            if tuple.windows(2).any(|w| w[0] > w[1]) {
                out.push(Violation::UnorderedSuccessors { state, action });
            } else if tuple.windows(2).any(|w| w[0] == w[1]) {
                out.push(Violation::DuplicateSuccessors { state, action });
            }
        }
        for s in self.states() {
            if self.applicable_actions(s).is_empty() {
                out.push(Violation::Seriality(self.state_name(s).to_string()));
            }
        }
        out
    }

    /// Serializes to the line-based domain file format.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "states: {}", self.state_names.join(" "));
        let _ = writeln!(out, "init: {}", self.state_name(self.init));
        for s in self.states() {
            let _ = writeln!(
                out,
                "label {}: {}",
                self.state_name(s),
                self.label(s).display(&self.atoms)
            );
        }
        for a in self.actions() {
            let mut entries = Vec::new();
            for s in self.states() {
                let succs = self.successors(s, a);
                if succs.is_empty() {
                    continue;
                }
                let names: Vec<&str> = succs.iter().map(|&t| self.state_name(t)).collect();
                entries.push(format!("{} -> {}", self.state_name(s), names.join(" ")));
            }
            if !entries.is_empty() {
                let _ = writeln!(out, "action {}: {}", self.action_name(a), entries.join(" ; "));
            }
        }
        out
    }
}

pub struct DomainBuilder {
    atoms: AtomSet,
    state_names: Vec<String>,
    action_names: Vec<String>,
    init: Option<String>,
    labels: Vec<Letter>,
    transitions: BTreeMap<(String, String), Vec<String>>,
}

impl DomainBuilder {
    pub fn state(&mut self, name: &str, label: Letter) -> &mut Self {
        self.state_names.push(name.to_string());
        self.labels.push(label);
        self
    }

    pub fn init(&mut self, name: &str) -> &mut Self {
        self.init = Some(name.to_string());
        self
    }

    /// Records a successor tuple exactly as given (no sorting), so invalid
    /// tuples can be constructed and then surfaced by `validate`.
    pub fn transition(&mut self, action: &str, from: &str, to: &[&str]) -> &mut Self {
        if !self.action_names.iter().any(|a| a == action) {
            self.action_names.push(action.to_string());
        }
        self.transitions.insert(
            (from.to_string(), action.to_string()),
            to.iter().map(|s| s.to_string()).collect(),
        );
        self
    }

    pub fn build(&self) -> Result<PlanningDomain, DomainError> {
        if self.state_names.is_empty() {
            return Err(DomainError::NoStates);
        }
        let init_name = self.init.as_ref().ok_or(DomainError::NoInit)?;
        let state_id = |name: &str| -> Result<StateId, DomainError> {
            self.state_names
                .iter()
                .position(|n| n == name)
                .map(|i| StateId(i as u32))
                .ok_or_else(|| DomainError::UnknownState(name.to_string()))
        };
        let init = state_id(init_name)?;
        let mut transitions = BTreeMap::new();
        for ((from, action), to) in &self.transitions {
            let s = state_id(from)?;
            let a = self
                .action_names
                .iter()
                .position(|n| n == action)
                .map(|i| ActionId(i as u32))
                .expect("action recorded on insert");
            let tuple = to
                .iter()
                .map(|n| state_id(n))
                .collect::<Result<Vec<_>, _>>()?;
            transitions.insert((s, a), tuple);
        }
        Ok(PlanningDomain {
            atoms: self.atoms.clone(),
            state_names: self.state_names.clone(),
            action_names: self.action_names.clone(),
            init,
            labels: self.labels.clone(),
            transitions,
        })
    }
}

/// Parses the domain file format. Unsorted successor tuples are sorted on
/// load; each such repair is reported as a warning string.
pub fn parse_domain(text: &str) -> Result<(PlanningDomain, Vec<String>), DomainError> {
    let mut states: Vec<String> = Vec::new();
    let mut init: Option<String> = None;
    let mut labels: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut actions: Vec<(String, Vec<(String, Vec<String>)>)> = Vec::new();
    let mut declared_atoms: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| DomainError::Parse {
            line: line_no,
            message,
        };
        if let Some(rest) = line.strip_prefix("states:") {
            states.extend(rest.split_whitespace().map(str::to_string));
        } else if let Some(rest) = line.strip_prefix("init:") {
            init = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("atoms:") {
            declared_atoms.extend(rest.split_whitespace().map(str::to_string));
        } else if let Some(rest) = line.strip_prefix("label") {
            let (state, atom_part) = rest
                .split_once(':')
                .ok_or_else(|| parse_err("expected `label <state>: <atoms>`".into()))?;
            labels.insert(
                state.trim().to_string(),
                atom_part.split_whitespace().map(str::to_string).collect(),
            );
        } else if let Some(rest) = line.strip_prefix("action") {
            let (name, entries) = rest
                .split_once(':')
                .ok_or_else(|| parse_err("expected `action <name>: <entries>`".into()))?;
            let mut parsed = Vec::new();
            for entry in entries.split(';') {
                let entry = entry.trim();
                if entry.is_empty() {
                    continue;
                }
                let (from, to) = entry
                    .split_once("->")
                    .ok_or_else(|| parse_err(format!("expected `<state> -> <succs>` in `{entry}`")))?;
                parsed.push((
                    from.trim().to_string(),
                    to.split_whitespace().map(str::to_string).collect(),
                ));
            }
            actions.push((name.trim().to_string(), parsed));
        } else {
            return Err(parse_err(format!("unrecognized line `{line}`")));
        }
    }

    let mut atom_names: BTreeSet<String> = declared_atoms.into_iter().collect();
    for atoms in labels.values() {
        atom_names.extend(atoms.iter().cloned());
    }
    let atoms = AtomSet::new(atom_names)?;

    let mut builder = PlanningDomain::builder(atoms.clone());
    for state in &states {
        let label = match labels.get(state) {
            Some(names) => {
                let mut ids = Vec::new();
                for n in names {
                    ids.push(atoms.id(n).expect("label atom was declared"));
                }
                Letter::from_atoms(ids)
            }
            None => Letter::EMPTY,
        };
        builder.state(state, label);
    }
    if let Some(init) = &init {
        builder.init(init);
    }
    for (action, entries) in &actions {
        for (from, to) in entries {
            let names: Vec<&str> = to.iter().map(String::as_str).collect();
            builder.transition(action, from, &names);
        }
    }
    let raw = builder.build()?;

    // Sort successor tuples by the state order, keeping a warning per repair.
    let mut warnings = Vec::new();
    let mut transitions = BTreeMap::new();
    for ((s, a), tuple) in &raw.transitions {
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != *tuple {
            warnings.push(format!(
                "successors of `{}` under `{}` sorted on load",
                raw.state_name(*s),
                raw.action_name(*a)
            ));
        }
        transitions.insert((*s, *a), sorted);
    }
    let domain = PlanningDomain {
        transitions,
        ..raw
    };
    Ok((domain, warnings))
}

/// A memory-machine controller: `output` picks the action for a
/// (memory, state) pair and `update` advances the memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMemoryPlan {
    pub memory_count: usize,
    pub init_memory: usize,
    pub output: BTreeMap<(usize, StateId), ActionId>,
    pub update: BTreeMap<(usize, StateId), usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlanError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("plan output at (m{memory}, `{state}`) names inapplicable action `{action}`")]
    InapplicableAction {
        memory: usize,
        state: String,
        action: String,
    },
    #[error("reachable pair (m{memory}, `{state}`) has no output/update")]
    UndefinedPair { memory: usize, state: String },
    #[error("plan atoms do not match the domain")]
    AtomMismatch,
}

impl FiniteMemoryPlan {
    pub fn new(
        memory_count: usize,
        init_memory: usize,
        output: BTreeMap<(usize, StateId), ActionId>,
        update: BTreeMap<(usize, StateId), usize>,
    ) -> FiniteMemoryPlan {
        FiniteMemoryPlan {
            memory_count,
            init_memory,
            output,
            update,
        }
    }

    /// Memoryless plan from a per-state action choice.
    pub fn memoryless(choices: BTreeMap<StateId, ActionId>) -> FiniteMemoryPlan {
        let output = choices.iter().map(|(&s, &a)| ((0, s), a)).collect();
        let update = choices.keys().map(|&s| ((0, s), 0)).collect();
        FiniteMemoryPlan::new(1, 0, output, update)
    }

    /// Checks applicability of every output entry and closure of the
    /// reachable (memory, state) pairs.
    pub fn validate_for(&self, domain: &PlanningDomain) -> Result<(), PlanError> {
        for (&(m, s), &a) in &self.output {
            if domain.successors(s, a).is_empty() {
                return Err(PlanError::InapplicableAction {
                    memory: m,
                    state: domain.state_name(s).to_string(),
                    action: domain.action_name(a).to_string(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![(self.init_memory, domain.init())];
        seen.insert((self.init_memory, domain.init()));
        while let Some((m, s)) = stack.pop() {
            let (a, m2) = match (self.output.get(&(m, s)), self.update.get(&(m, s))) {
                (Some(&a), Some(&m2)) => (a, m2),
                _ => {
                    return Err(PlanError::UndefinedPair {
                        memory: m,
                        state: domain.state_name(s).to_string(),
                    })
                }
            };
            for &s2 in domain.successors(s, a) {
                if seen.insert((m2, s2)) {
                    stack.push((m2, s2));
                }
            }
        }
        Ok(())
    }

    /// The induced history function: the action the plan takes after
    /// observing `history` (which must start at the domain's initial state).
    pub fn action_for_history(
        &self,
        domain: &PlanningDomain,
        history: &[StateId],
    ) -> Option<ActionId> {
        let mut m = self.init_memory;
        let (last, prefix) = history.split_last()?;
        for s in prefix {
            m = *self.update.get(&(m, *s))?;
        }
        self.output.get(&(m, *last)).copied()
    }

    pub fn to_file_string(&self, domain: &PlanningDomain) -> String {
        let mut out = String::new();
        let names: Vec<String> = (0..self.memory_count).map(|i| format!("m{i}")).collect();
        let _ = writeln!(out, "memory: {}", names.join(" "));
        let _ = writeln!(out, "initial: m{}", self.init_memory);
        for (&(m, s), &a) in &self.output {
            let next = self.update.get(&(m, s)).copied().unwrap_or(m);
            let _ = writeln!(
                out,
                "at m{} {}: do {} goto m{}",
                m,
                domain.state_name(s),
                domain.action_name(a),
                next
            );
        }
        out
    }
}

/// Parses the plan file format against a domain.
pub fn parse_plan(text: &str, domain: &PlanningDomain) -> Result<FiniteMemoryPlan, PlanError> {
    let mut memory_names: Vec<String> = Vec::new();
    let mut init_memory: Option<String> = None;
    let mut entries: Vec<(String, String, String, String, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| PlanError::Parse {
            line: line_no,
            message,
        };
        if let Some(rest) = line.strip_prefix("memory:") {
            memory_names.extend(rest.split_whitespace().map(str::to_string));
        } else if let Some(rest) = line.strip_prefix("initial:") {
            init_memory = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("at") {
            let (head, body) = rest
                .split_once(':')
                .ok_or_else(|| parse_err("expected `at <mem> <state>: do <action> goto <mem>`".into()))?;
            let head_parts: Vec<&str> = head.split_whitespace().collect();
            let body_parts: Vec<&str> = body.split_whitespace().collect();
            if head_parts.len() != 2
                || body_parts.len() != 4
                || body_parts[0] != "do"
                || body_parts[2] != "goto"
            {
                return Err(parse_err(
                    "expected `at <mem> <state>: do <action> goto <mem>`".into(),
                ));
            }
            entries.push((
                head_parts[0].to_string(),
                head_parts[1].to_string(),
                body_parts[1].to_string(),
                body_parts[3].to_string(),
                line_no,
            ));
        } else {
            return Err(parse_err(format!("unrecognized line `{line}`")));
        }
    }

    let mem_id = |name: &str, line: usize| -> Result<usize, PlanError> {
        memory_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PlanError::Parse {
                line,
                message: format!("unknown memory state `{name}`"),
            })
    };
    let init_name = init_memory.ok_or(PlanError::Parse {
        line: 0,
        message: "no initial memory declared".into(),
    })?;
    let init = mem_id(&init_name, 0)?;

    let mut output = BTreeMap::new();
    let mut update = BTreeMap::new();
    for (mem, state, action, next, line) in entries {
        let m = mem_id(&mem, line)?;
        let m2 = mem_id(&next, line)?;
        let s = domain.state_by_name(&state).ok_or(PlanError::Parse {
            line,
            message: format!("unknown state `{state}`"),
        })?;
        let a = domain.action_by_name(&action).ok_or(PlanError::Parse {
            line,
            message: format!("unknown action `{action}`"),
        })?;
        output.insert((m, s), a);
        update.insert((m, s), m2);
    }
    Ok(FiniteMemoryPlan::new(memory_names.len(), init, output, update))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

/// The reachable product of a domain and a plan: each node is a
/// (state, memory) pair carrying the chosen action, the state's label, and
/// the ordered successor tuple.
#[derive(Debug, Clone)]
pub struct ExecutionGraph {
    atoms: AtomSet,
    nodes: Vec<ExecNode>,
}

#[derive(Debug, Clone)]
struct ExecNode {
    state: StateId,
    memory: usize,
    label: Letter,
    action: ActionId,
    successors: Vec<NodeId>,
}

impl ExecutionGraph {
    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(|i| NodeId(i as u32))
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.atoms
    }

    pub fn state(&self, n: NodeId) -> StateId {
        self.nodes[n.0 as usize].state
    }

    pub fn memory(&self, n: NodeId) -> usize {
        self.nodes[n.0 as usize].memory
    }

    pub fn label(&self, n: NodeId) -> Letter {
        self.nodes[n.0 as usize].label
    }

    pub fn action(&self, n: NodeId) -> ActionId {
        self.nodes[n.0 as usize].action
    }

    pub fn successors(&self, n: NodeId) -> &[NodeId] {
        &self.nodes[n.0 as usize].successors
    }

    /// Nodes reachable from `from` (inclusive).
    pub fn reachable_from(&self, from: NodeId) -> BTreeSet<NodeId> {
        let mut seen = BTreeSet::from([from]);
        let mut stack = vec![from];
        while let Some(n) = stack.pop() {
            for &m in self.successors(n) {
                if seen.insert(m) {
                    stack.push(m);
                }
            }
        }
        seen
    }

    /// The action at the end of a state history, read off the graph.
    pub fn action_for_history(&self, history: &[StateId]) -> Option<ActionId> {
        let (first, rest) = history.split_first()?;
        if *first != self.state(self.root()) {
            return None;
        }
        let mut node = self.root();
        for s in rest {
            node = *self
                .successors(node)
                .iter()
                .find(|&&m| self.state(m) == *s)?;
        }
        Some(self.action(node))
    }
}

/// Builds the reachable product of `domain` and `plan`. Nodes are numbered
/// in breadth-first discovery order, so the result is deterministic.
pub fn product(
    domain: &PlanningDomain,
    plan: &FiniteMemoryPlan,
) -> Result<ExecutionGraph, PlanError> {
    plan.validate_for(domain)?;
    let mut index: BTreeMap<(StateId, usize), NodeId> = BTreeMap::new();
    let mut pairs = vec![(domain.init(), plan.init_memory)];
    index.insert((domain.init(), plan.init_memory), NodeId(0));
    let mut nodes: Vec<ExecNode> = Vec::new();
    let mut cursor = 0;
    while cursor < pairs.len() {
        let (s, m) = pairs[cursor];
        cursor += 1;
        let a = plan.output[&(m, s)];
        let m2 = plan.update[&(m, s)];
        let mut successors = Vec::new();
        for &s2 in domain.successors(s, a) {
            let next = *index.entry((s2, m2)).or_insert_with(|| {
                pairs.push((s2, m2));
                NodeId((pairs.len() - 1) as u32)
            });
            successors.push(next);
        }
        nodes.push(ExecNode {
            state: s,
            memory: m,
            label: domain.label(s),
            action: a,
            successors,
        });
    }
    Ok(ExecutionGraph {
        atoms: domain.atoms().clone(),
        nodes,
    })
}

// --- example-domain generators ---

const BLOCKS: [&str; 3] = ["A", "B", "C"];

/// Support of each block: index into BLOCKS, or None for the table.
type BlocksState = [Option<usize>; 3];

fn blocks_state_name(st: &BlocksState) -> String {
    // Towers written bottom-up and joined by `_`, e.g. `AB_C` = B on A.
    let mut towers: Vec<String> = Vec::new();
    for base in 0..3 {
        if st[base].is_some() {
            continue;
        }
        let mut tower = String::from(BLOCKS[base]);
        let mut top = base;
        while let Some(above) = (0..3).find(|&b| st[b] == Some(top)) {
            tower.push_str(BLOCKS[above]);
            top = above;
        }
        towers.push(tower);
    }
    towers.sort();
    towers.join("_")
}

fn blocks_clear(st: &BlocksState, b: usize) -> bool {
    (0..3).all(|other| st[other] != Some(b))
}

fn blocks_tower_of(st: &BlocksState, b: usize) -> Vec<usize> {
    let mut base = b;
    while let Some(below) = st[base] {
        base = below;
    }
    let mut tower = vec![base];
    let mut top = base;
    while let Some(above) = (0..3).find(|&x| st[x] == Some(top)) {
        tower.push(above);
        top = above;
    }
    tower
}

fn blocks_label(st: &BlocksState, atoms: &AtomSet) -> Letter {
    let mut ids = Vec::new();
    for b in 0..3 {
        match st[b] {
            None => ids.push(
                atoms
                    .id(&format!("{}_on_table", BLOCKS[b]))
                    .expect("declared atom"),
            ),
            Some(under) => ids.push(
                atoms
                    .id(&format!("{}_on_{}", BLOCKS[b], BLOCKS[under]))
                    .expect("declared atom"),
            ),
        }
    }
    Letter::from_atoms(ids)
}

/// The three-block blocks-world domain: 13 states, `put_X_on_Y`,
/// `put_X_on_table`, and `wait` actions.
///
/// A failed `put_X_on_Y` scatters the destination tower and the held block
/// onto the table; a bumped `wait` scatters every block. In the all-on-table
/// state the bump outcome coincides with the unchanged one, so `wait` there
/// has a single successor.
pub fn gen_blocks_world() -> PlanningDomain {
    let mut atom_names = Vec::new();
    for x in 0..3 {
        atom_names.push(format!("{}_on_table", BLOCKS[x]));
        for y in 0..3 {
            if x != y {
                atom_names.push(format!("{}_on_{}", BLOCKS[x], BLOCKS[y]));
            }
        }
    }
    let atoms = AtomSet::new(atom_names).unwrap();

    // Enumerate the 13 valid configurations.
    let mut states: Vec<BlocksState> = Vec::new();
    let options = [None, Some(0), Some(1), Some(2)];
    for &a in &options {
        for &b in &options {
            for &c in &options {
                let st: BlocksState = [a, b, c];
                let no_self = (0..3).all(|i| st[i] != Some(i));
                let no_shared = (0..3).all(|under| {
                    (0..3).filter(|&above| st[above] == Some(under)).count() <= 1
                });
                let no_cycle = (0..3).all(|start| {
                    let mut seen = 0;
                    let mut cur = start;
                    while let Some(next) = st[cur] {
                        cur = next;
                        seen += 1;
                        if seen > 3 {
                            return false;
                        }
                    }
                    true
                });
                if no_self && no_shared && no_cycle {
                    states.push(st);
                }
            }
        }
    }
    states.sort_by_key(blocks_state_name);
    debug_assert_eq!(states.len(), 13);

    let name_of = |st: &BlocksState| blocks_state_name(st);
    let index_of = |st: &BlocksState| {
        states
            .iter()
            .position(|s| s == st)
            .expect("successor is a valid configuration")
    };

    let mut builder = PlanningDomain::builder(atoms.clone());
    for st in &states {
        builder.state(&name_of(st), blocks_label(st, &atoms));
    }
    let all_table: BlocksState = [None, None, None];
    builder.init(&name_of(&all_table));

    let mut add = |action: &str, from: &BlocksState, outcomes: Vec<BlocksState>| {
        let mut ids: Vec<usize> = outcomes.iter().map(index_of).collect();
        ids.sort_unstable();
        ids.dedup();
        let names: Vec<String> = ids.iter().map(|&i| name_of(&states[i])).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        builder.transition(action, &name_of(from), &refs);
    };

    for st in &states {
        for x in 0..3 {
            if !blocks_clear(st, x) {
                continue;
            }
            // put_X_on_table: deterministic.
            let mut moved = *st;
            moved[x] = None;
            add(&format!("put_{}_on_table", BLOCKS[x]), st, vec![moved]);
            // put_X_on_Y: success or scatter of Y's tower plus X.
            for y in 0..3 {
                if x == y || !blocks_clear(st, y) || st[x] == Some(y) {
                    continue;
                }
                let mut success = *st;
                success[x] = Some(y);
                let mut failure = *st;
                failure[x] = None;
                for b in blocks_tower_of(st, y) {
                    failure[b] = None;
                }
                add(
                    &format!("put_{}_on_{}", BLOCKS[x], BLOCKS[y]),
                    st,
                    vec![success, failure],
                );
            }
        }
        add("wait", st, vec![*st, all_table]);
    }
    builder.build().expect("blocks world assembles")
}

/// The three-state domain whose unwinding is the binary tree with an
/// `i`-labelled root and `p`/`q`-labelled children everywhere.
pub fn gen_binary_tree() -> PlanningDomain {
    let atoms = AtomSet::new(["i", "p", "q"]).unwrap();
    let mut builder = PlanningDomain::builder(atoms.clone());
    for name in ["i", "p", "q"] {
        builder.state(name, Letter::from_atoms([atoms.id(name).unwrap()]));
    }
    builder.init("i");
    for name in ["i", "p", "q"] {
        builder.transition("step", name, &["p", "q"]);
    }
    builder.build().expect("binary tree assembles")
}

/// The program/environment alternation domain used by the planning-hardness
/// reduction: program states pick the next letter, environment states move
/// to an arbitrary letter.
pub fn gen_realizability(sigma: &[String]) -> Result<PlanningDomain, DomainError> {
    if sigma.is_empty() {
        return Err(DomainError::EmptyAlphabet);
    }
    if sigma.iter().any(|l| l == "e" || l == "init") {
        return Err(DomainError::Reserved);
    }
    let atoms = AtomSet::new(sigma.iter().cloned())?;
    let mut builder = PlanningDomain::builder(atoms.clone());
    builder.state("init", Letter::EMPTY);
    for letter in sigma {
        let label = Letter::from_atoms([atoms.id(letter).expect("declared")]);
        builder.state(&format!("{letter}_p"), label);
        builder.state(&format!("{letter}_e"), label);
    }
    builder.init("init");
    let env_targets: Vec<String> = sigma.iter().map(|l| format!("{l}_p")).collect();
    let env_refs: Vec<&str> = env_targets.iter().map(String::as_str).collect();
    for letter in sigma {
        builder.transition(letter, "init", &[&format!("{letter}_e")]);
        for from in sigma {
            builder.transition(letter, &format!("{from}_p"), &[&format!("{letter}_e")]);
        }
    }
    for from in sigma {
        builder.transition("e", &format!("{from}_e"), &env_refs);
    }
    builder.build()
}
