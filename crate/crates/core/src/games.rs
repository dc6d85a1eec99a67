//! Parity games under the min-priority-even convention: a play is won by
//! Even when the minimal priority occurring infinitely often is even.
//!
//! Provides a Zielonka solver with positional strategy extraction, the
//! one-player good-set computations, and the two gadgets that combine a
//! parity objective with a recurring-event objective.

use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Owner {
    Even,
    Odd,
}

impl Owner {
    pub fn opponent(self) -> Owner {
        match self {
            Owner::Even => Owner::Odd,
            Owner::Odd => Owner::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GameNodeId(pub u32);

#[derive(Debug, Clone)]
struct GameNode {
    owner: Owner,
    priority: u32,
    edges: Vec<GameNodeId>,
    terminal: Option<Owner>,
}

/// A two-player arena. Non-terminal nodes must keep at least one edge;
/// terminals carry a declared winner and no edges.
#[derive(Debug, Clone, Default)]
pub struct ParityGame {
    nodes: Vec<GameNode>,
}

impl ParityGame {
    pub fn new() -> ParityGame {
        ParityGame::default()
    }

    pub fn add_node(&mut self, owner: Owner, priority: u32) -> GameNodeId {
        self.nodes.push(GameNode {
            owner,
            priority,
            edges: Vec::new(),
            terminal: None,
        });
        GameNodeId((self.nodes.len() - 1) as u32)
    }

    pub fn add_terminal(&mut self, winner: Owner) -> GameNodeId {
        self.nodes.push(GameNode {
            owner: winner,
            priority: 0,
            edges: Vec::new(),
            terminal: Some(winner),
        });
        GameNodeId((self.nodes.len() - 1) as u32)
    }

    pub fn add_edge(&mut self, from: GameNodeId, to: GameNodeId) {
        debug_assert!(self.nodes[from.0 as usize].terminal.is_none());
        self.nodes[from.0 as usize].edges.push(to);
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = GameNodeId> {
        (0..self.nodes.len()).map(|i| GameNodeId(i as u32))
    }

    pub fn owner(&self, n: GameNodeId) -> Owner {
        self.nodes[n.0 as usize].owner
    }

    pub fn priority(&self, n: GameNodeId) -> u32 {
        self.nodes[n.0 as usize].priority
    }

    pub fn edges(&self, n: GameNodeId) -> &[GameNodeId] {
        &self.nodes[n.0 as usize].edges
    }

    pub fn terminal_winner(&self, n: GameNodeId) -> Option<Owner> {
        self.nodes[n.0 as usize].terminal
    }

    pub fn max_priority(&self) -> u32 {
        self.nodes.iter().map(|n| n.priority).max().unwrap_or(0)
    }

    /// Stable text dump for debugging and golden tests.
    pub fn dump(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        for id in self.node_ids() {
            let n = &self.nodes[id.0 as usize];
            match n.terminal {
                Some(w) => {
                    let _ = writeln!(out, "{} terminal won-by {:?}", id.0, w);
                }
                None => {
                    let targets: Vec<String> =
                        n.edges.iter().map(|e| e.0.to_string()).collect();
                    let _ = writeln!(
                        out,
                        "{} {:?} pri {} -> {}",
                        id.0,
                        n.owner,
                        n.priority,
                        targets.join(" ")
                    );
                }
            }
        }
        out
    }
}

/// Winning regions and positional strategies for both players. Each
/// strategy is defined exactly on its owner's non-terminal winning nodes.
#[derive(Debug, Clone)]
pub struct Solution {
    pub win_even: BTreeSet<GameNodeId>,
    pub win_odd: BTreeSet<GameNodeId>,
    pub strategy_even: BTreeMap<GameNodeId, GameNodeId>,
    pub strategy_odd: BTreeMap<GameNodeId, GameNodeId>,
}

impl Solution {
    pub fn winner(&self, n: GameNodeId) -> Owner {
        if self.win_even.contains(&n) {
            Owner::Even
        } else {
            Owner::Odd
        }
    }

    pub fn strategy(&self, player: Owner) -> &BTreeMap<GameNodeId, GameNodeId> {
        match player {
            Owner::Even => &self.strategy_even,
            Owner::Odd => &self.strategy_odd,
        }
    }
}

/// Zielonka's recursive algorithm, on the min-priority convention: the
/// recursion peels the *smallest* priority class, which is the significant
/// one for min-parity acceptance.
pub fn solve(game: &ParityGame) -> Solution {
    // Terminals become self-loops whose priority encodes the declared
    // winner; their fake strategy entries are stripped afterwards.
    let mut work = game.clone();
    let max = game.max_priority();
    let even_sink = max + 2 - (max % 2);
    let odd_sink = even_sink + 1;
    for id in game.node_ids() {
        if let Some(winner) = game.terminal_winner(id) {
            work.nodes[id.0 as usize].priority = match winner {
                Owner::Even => even_sink,
                Owner::Odd => odd_sink,
            };
            work.nodes[id.0 as usize].edges.push(id);
        }
    }

    let alive: BTreeSet<GameNodeId> = work.node_ids().collect();
    let mut strategy_even = BTreeMap::new();
    let mut strategy_odd = BTreeMap::new();
    let (win_even, win_odd) =
        zielonka(&work, alive, &mut strategy_even, &mut strategy_odd);
    // Inner recursions may leave entries for nodes that ended up in the
    // opponent's region; keep each strategy on its own winning region only.
    strategy_even
        .retain(|n, _| win_even.contains(n) && game.terminal_winner(*n).is_none());
    strategy_odd.retain(|n, _| win_odd.contains(n) && game.terminal_winner(*n).is_none());
    Solution {
        win_even,
        win_odd,
        strategy_even,
        strategy_odd,
    }
}

fn zielonka(
    game: &ParityGame,
    alive: BTreeSet<GameNodeId>,
    strategy_even: &mut BTreeMap<GameNodeId, GameNodeId>,
    strategy_odd: &mut BTreeMap<GameNodeId, GameNodeId>,
) -> (BTreeSet<GameNodeId>, BTreeSet<GameNodeId>) {
    if alive.is_empty() {
        return (BTreeSet::new(), BTreeSet::new());
    }
    let d = alive
        .iter()
        .map(|&n| game.priority(n))
        .min()
        .expect("alive nonempty");
    let player = if d % 2 == 0 { Owner::Even } else { Owner::Odd };
    let target: BTreeSet<GameNodeId> = alive
        .iter()
        .copied()
        .filter(|&n| game.priority(n) == d)
        .collect();

    let mut attr_strategy = BTreeMap::new();
    let attracted = attractor(game, &alive, player, &target, &mut attr_strategy);
    let remainder: BTreeSet<GameNodeId> =
        alive.difference(&attracted).copied().collect();
    let (sub_even, sub_odd) =
        zielonka(game, remainder, strategy_even, strategy_odd);
    let (sub_mine, sub_theirs) = match player {
        Owner::Even => (sub_even, sub_odd),
        Owner::Odd => (sub_odd, sub_even),
    };

    if sub_theirs.is_empty() {
        // `player` wins everywhere: attractor strategy toward the minimal
        // class, any staying edge on the class itself.
        let my_strategy = match player {
            Owner::Even => strategy_even,
            Owner::Odd => strategy_odd,
        };
        for (n, e) in attr_strategy {
            my_strategy.insert(n, e);
        }
        for &n in &target {
            if game.owner(n) == player {
                let stay = game
                    .edges(n)
                    .iter()
                    .copied()
                    .find(|t| alive.contains(t))
                    .expect("serial within alive");
                my_strategy.insert(n, stay);
            }
        }
        let _ = sub_mine;
        match player {
            Owner::Even => (alive, BTreeSet::new()),
            Owner::Odd => (BTreeSet::new(), alive),
        }
    } else {
        let opponent = player.opponent();
        let mut opp_attr_strategy = BTreeMap::new();
        let opp_attracted =
            attractor(game, &alive, opponent, &sub_theirs, &mut opp_attr_strategy);
        {
            let opp_strategy = match opponent {
                Owner::Even => &mut *strategy_even,
                Owner::Odd => &mut *strategy_odd,
            };
            for (n, e) in opp_attr_strategy {
                // Keep subgame decisions on the already-won region.
                opp_strategy.entry(n).or_insert(e);
            }
        }
        let remainder: BTreeSet<GameNodeId> =
            alive.difference(&opp_attracted).copied().collect();
        let (rec_even, rec_odd) =
            zielonka(game, remainder, strategy_even, strategy_odd);
        match opponent {
            Owner::Even => (
                rec_even.union(&opp_attracted).copied().collect(),
                rec_odd,
            ),
            Owner::Odd => (
                rec_even,
                rec_odd.union(&opp_attracted).copied().collect(),
            ),
        }
    }
}

/// Backward attractor of `target` for `player` within `alive`; records the
/// pulling edge for player-owned nodes outside the target.
fn attractor(
    game: &ParityGame,
    alive: &BTreeSet<GameNodeId>,
    player: Owner,
    target: &BTreeSet<GameNodeId>,
    strategy: &mut BTreeMap<GameNodeId, GameNodeId>,
) -> BTreeSet<GameNodeId> {
    let mut attracted = target.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for &n in alive.iter() {
            if attracted.contains(&n) {
                continue;
            }
            let alive_edges: Vec<GameNodeId> = game
                .edges(n)
                .iter()
                .copied()
                .filter(|t| alive.contains(t))
                .collect();
            let pulled = if game.owner(n) == player {
                alive_edges.iter().copied().find(|t| attracted.contains(t))
            } else if !alive_edges.is_empty()
                && alive_edges.iter().all(|t| attracted.contains(t))
            {
                Some(alive_edges[0])
            } else {
                None
            };
            if let Some(edge) = pulled {
                if game.owner(n) == player {
                    strategy.insert(n, edge);
                }
                attracted.insert(n);
                changed = true;
            }
        }
    }
    attracted
}

/// A one-player priority graph: node priorities plus successor lists.
#[derive(Debug, Clone)]
pub struct PriorityGraph {
    pub priorities: Vec<u32>,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathMode {
    /// Some infinite path from the node has even min-parity.
    Exists,
    /// Every infinite path from the node has even min-parity.
    Forall,
}

/// Nodes of `g` whose infinite paths meet the parity condition in the given
/// mode, computed by handing the whole graph to one player.
pub fn one_player_good(g: &PriorityGraph, mode: PathMode) -> BTreeSet<usize> {
    let owner = match mode {
        PathMode::Exists => Owner::Even,
        PathMode::Forall => Owner::Odd,
    };
    let mut game = ParityGame::new();
    for &p in &g.priorities {
        game.add_node(owner, p);
    }
    for (from, targets) in g.edges.iter().enumerate() {
        for &to in targets {
            game.add_edge(GameNodeId(from as u32), GameNodeId(to as u32));
        }
    }
    let solution = solve(&game);
    solution.win_even.iter().map(|n| n.0 as usize).collect()
}

// --- gadgets combining parity with a recurring event ---

/// Classes of arena steps, as seen by the gadget constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepClass {
    /// The recurring event fires on this step.
    Good,
    /// Ordinary step.
    Neutral,
    /// Ordinary step that, when eventually taken forever, hands the play to
    /// Even (used for plays that correspond to no real interaction).
    IdleEven,
}

#[derive(Debug, Clone)]
pub struct ArenaEdge {
    pub target: usize,
    pub class: StepClass,
    /// Parity contribution of traversing this step, if any.
    pub lambda: Option<u32>,
}

#[derive(Debug, Clone)]
pub enum ArenaNode {
    Play(Owner),
    Terminal(Owner),
}

/// Input arena for the gadgets: a game graph whose parity objective lives on
/// the edges, together with a per-edge event class.
#[derive(Debug, Clone, Default)]
pub struct Arena {
    pub nodes: Vec<ArenaNode>,
    pub edges: Vec<Vec<ArenaEdge>>,
}

impl Arena {
    pub fn new() -> Arena {
        Arena::default()
    }

    pub fn add_node(&mut self, owner: Owner) -> usize {
        self.nodes.push(ArenaNode::Play(owner));
        self.edges.push(Vec::new());
        self.nodes.len() - 1
    }

    pub fn add_terminal(&mut self, winner: Owner) -> usize {
        self.nodes.push(ArenaNode::Terminal(winner));
        self.edges.push(Vec::new());
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, edge: ArenaEdge) {
        self.edges[from].push(edge);
    }
}

/// The product game built by a gadget: reachable (arena node, memory) pairs
/// with rewritten priorities. Edge order per node matches the arena's, so
/// strategies map back by index.
#[derive(Debug, Clone)]
pub struct GadgetGame {
    pub game: ParityGame,
    pub start: GameNodeId,
    /// Arena node behind each game node.
    pub origin: Vec<usize>,
}

const NO_MIN: u32 = u32::MAX;

/// Conjunction gadget: Even wins a play iff the good event fires infinitely
/// often *and* the minimal λ seen infinitely often is even. Plays that
/// eventually take only `IdleEven` steps are won by Even.
///
/// Tracks the minimal λ since the last good event; a good step emits that
/// minimum shifted by two and resets the memory, neutral steps emit `2k+3`,
/// idle steps `2k+4`.
pub fn parity_and_buchi(arena: &Arena, start: usize) -> GadgetGame {
    let k = max_lambda(arena);
    let neutral = 2 * k + 3;
    let idle = 2 * k + 4;
    build_gadget(arena, start, neutral, move |m, edge| {
        let seen = merge_min(m, edge.lambda);
        match edge.class {
            StepClass::Good => {
                let window_min = if seen == NO_MIN { 0 } else { seen };
                (NO_MIN, window_min + 2)
            }
            StepClass::Neutral => (seen, neutral),
            StepClass::IdleEven => (seen, idle),
        }
    })
}

/// Disjunction gadget: Even wins a play iff the good event fires infinitely
/// often *or* the minimal λ seen infinitely often is even. Good steps emit
/// priority 0, other steps λ+2; no memory is needed.
pub fn parity_or_buchi(arena: &Arena, start: usize) -> GadgetGame {
    let k = max_lambda(arena);
    let fallback = 2 * k + 3;
    build_gadget(arena, start, fallback, move |_m, edge| match edge.class {
        StepClass::Good => (NO_MIN, 0),
        StepClass::Neutral | StepClass::IdleEven => {
            (NO_MIN, edge.lambda.map_or(fallback, |l| l + 2))
        }
    })
}

fn max_lambda(arena: &Arena) -> u32 {
    arena
        .edges
        .iter()
        .flatten()
        .filter_map(|e| e.lambda)
        .max()
        .unwrap_or(0)
}

fn merge_min(m: u32, lambda: Option<u32>) -> u32 {
    match lambda {
        Some(l) => m.min(l),
        None => m,
    }
}

fn build_gadget(
    arena: &Arena,
    start: usize,
    start_priority: u32,
    step: impl Fn(u32, &ArenaEdge) -> (u32, u32),
) -> GadgetGame {
    // Game node = (arena node, memory, incoming priority).
    type Key = (usize, u32, u32);
    fn intern(
        arena: &Arena,
        key: Key,
        index: &mut BTreeMap<Key, GameNodeId>,
        game: &mut ParityGame,
        origin: &mut Vec<usize>,
        queue: &mut Vec<Key>,
    ) -> GameNodeId {
        *index.entry(key).or_insert_with(|| {
            let id = match arena.nodes[key.0] {
                ArenaNode::Play(owner) => {
                    let id = game.add_node(owner, key.2);
                    queue.push(key);
                    id
                }
                ArenaNode::Terminal(winner) => game.add_terminal(winner),
            };
            origin.push(key.0);
            id
        })
    }

    let mut index: BTreeMap<Key, GameNodeId> = BTreeMap::new();
    let mut game = ParityGame::new();
    let mut origin = Vec::new();
    let mut queue = Vec::new();
    let start_key = (start, NO_MIN, start_priority);
    let start_id = intern(arena, start_key, &mut index, &mut game, &mut origin, &mut queue);
    let mut cursor = 0;
    while cursor < queue.len() {
        let key = queue[cursor];
        cursor += 1;
        let from = index[&key];
        for edge in &arena.edges[key.0] {
            let (m2, pr) = step(key.1, edge);
            let to = intern(
                arena,
                (edge.target, m2, pr),
                &mut index,
                &mut game,
                &mut origin,
                &mut queue,
            );
            game.add_edge(from, to);
        }
    }
    GadgetGame {
        game,
        start: start_id,
        origin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_game(owner: Owner, priority: u32) -> ParityGame {
        let mut g = ParityGame::new();
        let n = g.add_node(owner, priority);
        g.add_edge(n, n);
        g
    }

    #[test]
    fn even_self_loop_priority_zero() {
        let g = loop_game(Owner::Even, 0);
        let s = solve(&g);
        assert_eq!(s.win_even.len(), 1);
        assert!(s.win_odd.is_empty());
    }

    #[test]
    fn self_loop_priority_one_lost_regardless_of_owner() {
        for owner in [Owner::Even, Owner::Odd] {
            let g = loop_game(owner, 1);
            let s = solve(&g);
            assert!(s.win_even.is_empty(), "owner {owner:?}");
            assert_eq!(s.win_odd.len(), 1);
        }
    }

    #[test]
    fn two_cycle_min_priority_odd() {
        let mut g = ParityGame::new();
        let a = g.add_node(Owner::Odd, 1);
        let b = g.add_node(Owner::Odd, 2);
        g.add_edge(a, b);
        g.add_edge(b, a);
        let s = solve(&g);
        assert_eq!(s.win_odd, BTreeSet::from([a, b]));
    }

    #[test]
    fn choice_between_cycles() {
        // Even chooses between an even cycle and an odd cycle.
        let mut g = ParityGame::new();
        let choice = g.add_node(Owner::Even, 5);
        let even_cycle = g.add_node(Owner::Even, 2);
        let odd_cycle = g.add_node(Owner::Even, 1);
        g.add_edge(choice, even_cycle);
        g.add_edge(choice, odd_cycle);
        g.add_edge(even_cycle, even_cycle);
        g.add_edge(odd_cycle, odd_cycle);
        let s = solve(&g);
        assert!(s.win_even.contains(&choice));
        assert_eq!(s.strategy_even[&choice], even_cycle);
        // Odd making the same choice loses only the even cycle.
        let mut g2 = ParityGame::new();
        let choice = g2.add_node(Owner::Odd, 5);
        let even_cycle = g2.add_node(Owner::Odd, 2);
        let odd_cycle = g2.add_node(Owner::Odd, 1);
        g2.add_edge(choice, even_cycle);
        g2.add_edge(choice, odd_cycle);
        g2.add_edge(even_cycle, even_cycle);
        g2.add_edge(odd_cycle, odd_cycle);
        let s2 = solve(&g2);
        assert!(s2.win_odd.contains(&choice));
        assert!(s2.win_even.contains(&even_cycle));
    }

    #[test]
    fn terminals_decide_their_winner() {
        let mut g = ParityGame::new();
        let n = g.add_node(Owner::Odd, 1);
        let t_even = g.add_terminal(Owner::Even);
        let t_odd = g.add_terminal(Owner::Odd);
        g.add_edge(n, t_even);
        g.add_edge(n, t_odd);
        let s = solve(&g);
        // Odd moves to the Odd-won terminal.
        assert!(s.win_odd.contains(&n));
        assert_eq!(s.strategy_odd[&n], t_odd);
        assert!(s.win_even.contains(&t_even));
        assert!(!s.strategy_even.contains_key(&t_even));
    }

    #[test]
    fn regions_partition() {
        let g = random_game(40, 4, 0xfeed);
        let s = solve(&g);
        assert_eq!(s.win_even.len() + s.win_odd.len(), g.len());
        assert!(s.win_even.is_disjoint(&s.win_odd));
    }

    /// With Even's winning strategy fixed, every cycle reachable from the
    /// Even region must have even minimal priority; this is an exact check.
    fn assert_even_strategy_winning(g: &ParityGame, s: &Solution) {
        let restricted_edges = |n: GameNodeId| -> Vec<GameNodeId> {
            if g.terminal_winner(n).is_some() {
                return Vec::new();
            }
            if g.owner(n) == Owner::Even {
                match s.strategy_even.get(&n) {
                    Some(&e) => vec![e],
                    None => Vec::new(),
                }
            } else {
                g.edges(n).to_vec()
            }
        };
        // reachable set from win_even under the restriction
        let mut reach: BTreeSet<GameNodeId> = s.win_even.clone();
        let mut stack: Vec<GameNodeId> = reach.iter().copied().collect();
        while let Some(n) = stack.pop() {
            for t in restricted_edges(n) {
                assert!(
                    s.win_even.contains(&t) || g.terminal_winner(t) == Some(Owner::Even),
                    "strategy leaves the winning region at {n:?} -> {t:?}"
                );
                if reach.insert(t) {
                    stack.push(t);
                }
            }
        }
        // for each odd priority p, no cycle with min exactly p
        let max = g.max_priority();
        for p in (0..=max).filter(|p| p % 2 == 1) {
            let allowed: BTreeSet<GameNodeId> = reach
                .iter()
                .copied()
                .filter(|&n| g.priority(n) >= p && g.terminal_winner(n).is_none())
                .collect();
            // cycle containing a p-node within `allowed`?
            for &start in allowed.iter().filter(|&&n| g.priority(n) == p) {
                let mut seen = BTreeSet::new();
                let mut stack = vec![start];
                while let Some(n) = stack.pop() {
                    for t in restricted_edges(n) {
                        if t == start {
                            panic!("odd cycle with min priority {p} through {start:?}");
                        }
                        if allowed.contains(&t) && seen.insert(t) {
                            stack.push(t);
                        }
                    }
                }
            }
        }
    }

    fn random_game(n: usize, max_priority: u32, seed: u64) -> ParityGame {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = ParityGame::new();
        for _ in 0..n {
            let owner = if rng.gen() { Owner::Even } else { Owner::Odd };
            g.add_node(owner, rng.gen_range(0..=max_priority));
        }
        for i in 0..n {
            let degree = rng.gen_range(1..=3);
            for _ in 0..degree {
                let t = rng.gen_range(0..n);
                g.add_edge(GameNodeId(i as u32), GameNodeId(t as u32));
            }
        }
        g
    }

    #[test]
    fn strategies_win_on_random_games() {
        for seed in 0..30 {
            let g = random_game(25, 5, seed);
            let s = solve(&g);
            assert_even_strategy_winning(&g, &s);
            // the same check for Odd, on the flipped game
            let mut flipped = ParityGame::new();
            for id in g.node_ids() {
                flipped.add_node(g.owner(id).opponent(), g.priority(id) + 1);
            }
            for id in g.node_ids() {
                for &t in g.edges(id) {
                    flipped.add_edge(id, t);
                }
            }
            let fs = solve(&flipped);
            assert_eq!(fs.win_even, s.win_odd, "seed {seed}: duality broken");
            assert_even_strategy_winning(&flipped, &fs);
        }
    }

    #[test]
    fn one_player_good_examples() {
        // single even-priority self-loop → in both sets
        let g = PriorityGraph {
            priorities: vec![0],
            edges: vec![vec![0]],
        };
        assert_eq!(one_player_good(&g, PathMode::Exists), BTreeSet::from([0]));
        assert_eq!(one_player_good(&g, PathMode::Forall), BTreeSet::from([0]));

        // node choosing between an even cycle and an odd cycle
        let g = PriorityGraph {
            priorities: vec![3, 2, 1],
            edges: vec![vec![1, 2], vec![1], vec![2]],
        };
        let exists = one_player_good(&g, PathMode::Exists);
        let forall = one_player_good(&g, PathMode::Forall);
        assert!(exists.contains(&0));
        assert!(!forall.contains(&0));
        assert!(exists.contains(&1) && forall.contains(&1));
        assert!(!exists.contains(&2) && !forall.contains(&2));
    }

    fn single_play_arena(steps: Vec<(StepClass, u32)>) -> Arena {
        // cycle through `steps` forever
        let mut arena = Arena::new();
        let nodes: Vec<usize> = steps.iter().map(|_| arena.add_node(Owner::Even)).collect();
        let n = nodes.len();
        for (i, (class, lambda)) in steps.into_iter().enumerate() {
            arena.add_edge(
                nodes[i],
                ArenaEdge {
                    target: nodes[(i + 1) % n],
                    class,
                    lambda: Some(lambda),
                },
            );
        }
        arena
    }

    fn even_wins_and(steps: Vec<(StepClass, u32)>) -> bool {
        let gg = parity_and_buchi(&single_play_arena(steps), 0);
        solve(&gg.game).win_even.contains(&gg.start)
    }

    fn even_wins_or(steps: Vec<(StepClass, u32)>) -> bool {
        let gg = parity_or_buchi(&single_play_arena(steps), 0);
        solve(&gg.game).win_even.contains(&gg.start)
    }

    #[test]
    fn and_gadget_examples() {
        use StepClass::*;
        // good on every step, λ ≡ 0 → Even wins
        assert!(even_wins_and(vec![(Good, 0)]));
        // good never → Odd wins regardless of λ
        assert!(!even_wins_and(vec![(Neutral, 0)]));
        // emission every second step, λ alternating 1,2 → emitted 3, Odd wins
        assert!(!even_wins_and(vec![(Neutral, 1), (Good, 2)]));
        // same shape but λ alternating 2,3 → emitted 4, Even wins
        assert!(even_wins_and(vec![(Neutral, 2), (Good, 3)]));
    }

    #[test]
    fn and_gadget_brute_force_agreement() {
        // On every cyclic play over small step vocabularies, the gadget's
        // verdict must match the stated compound condition evaluated
        // directly on the lasso play.
        use StepClass::*;
        let vocab = [
            (Good, 0),
            (Good, 1),
            (Good, 2),
            (Neutral, 0),
            (Neutral, 1),
            (Neutral, 2),
        ];
        for len in 1..=3usize {
            let mut idx = vec![0usize; len];
            loop {
                let steps: Vec<(StepClass, u32)> = idx.iter().map(|&i| vocab[i]).collect();
                let has_good = steps.iter().any(|(c, _)| *c == Good);
                let min_lambda = steps.iter().map(|&(_, l)| l).min().unwrap();
                let expected = has_good && min_lambda % 2 == 0;
                assert_eq!(
                    even_wins_and(steps.clone()),
                    expected,
                    "steps {steps:?}"
                );
                // next tuple
                let mut k = 0;
                loop {
                    if k == len {
                        break;
                    }
                    idx[k] += 1;
                    if idx[k] < vocab.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == len {
                    break;
                }
            }
        }
    }

    #[test]
    fn or_gadget_examples() {
        use StepClass::*;
        assert!(even_wins_or(vec![(Good, 1)]));
        assert!(even_wins_or(vec![(Neutral, 0)]));
        assert!(!even_wins_or(vec![(Neutral, 1)]));
        assert!(even_wins_or(vec![(Neutral, 1), (Good, 1)]));
    }

    #[test]
    fn idle_steps_favor_even_in_and_gadget() {
        use StepClass::*;
        // eventually only idle steps → Even wins even with odd λ
        assert!(even_wins_and(vec![(IdleEven, 1)]));
    }
}
