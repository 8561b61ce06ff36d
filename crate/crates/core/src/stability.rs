//! Core and strict-core verification.
//!
//! The central primitive is the blocking-coalition search. Two engines back
//! it:
//!
//! * an all-subsets scan, complete for any game at desk scale;
//! * a branch-and-bound over *connected* vertex sets, valid for simple
//!   symmetric games (with or without singleton subsidies). Soundness of the
//!   restriction: utilities are never negative in such games, so every
//!   member of a blocking coalition has a neighbour inside it, and each
//!   connected component of a blocking coalition blocks on its own (degrees
//!   are unchanged while the divisor shrinks).
//!
//! The connected engine additionally prunes by a per-member size bound: a
//! member with current utility `u > 0` and degree `Δ` only fits in a
//! blocking coalition of size `s` with `s·u < Δ` (strictly blocking), since
//! its utility in any coalition of size `s` is at most `Δ/s`.
//!
//! A search that was cut short by a node or size budget never claims
//! stability: the outcome is `BudgetExhausted`, a first-class verdict.

use crate::model::{HedonicGame, Partition};
use crate::rational::Rat;
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::HashSet;

/// Strong blocking: every member strictly improves. Weak blocking: every
/// member weakly improves and at least one strictly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Strong,
    Weak,
}

/// Per-member utility change backing a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberDelta {
    pub player: usize,
    pub current: Rat,
    pub proposed: Rat,
}

/// A coalition together with the utility evidence that it blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockingCertificate {
    pub coalition: Vec<usize>,
    pub kind: BlockKind,
    pub member_deltas: Vec<MemberDelta>,
}

impl BlockingCertificate {
    /// Smallest utility improvement across members.
    pub fn min_delta(&self) -> Rat {
        self.member_deltas
            .iter()
            .map(|d| d.proposed.clone() - d.current.clone())
            .min()
            .expect("certificates are nonempty")
    }
}

/// Limits on the blocking-coalition search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest coalition size to consider; `None` for unlimited.
    pub max_coalition_size: Option<usize>,
    /// Search-node allowance; `None` for unlimited.
    pub max_nodes: Option<u64>,
    /// Restrict to connected coalitions (simple symmetric games only).
    pub connected_only: bool,
}

impl SearchBudget {
    /// Complete all-subsets search.
    pub fn exhaustive() -> SearchBudget {
        SearchBudget {
            max_coalition_size: None,
            max_nodes: None,
            connected_only: false,
        }
    }

    /// Complete connected search (simple symmetric games).
    pub fn connected_unlimited() -> SearchBudget {
        SearchBudget {
            max_coalition_size: None,
            max_nodes: None,
            connected_only: true,
        }
    }

    /// Connected search with explicit limits.
    pub fn connected(max_coalition_size: Option<usize>, max_nodes: Option<u64>) -> SearchBudget {
        SearchBudget {
            max_coalition_size,
            max_nodes,
            connected_only: true,
        }
    }
}

/// Result of a blocking search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A blocking coalition, re-verifiable via [`verify_certificate`].
    Found(BlockingCertificate),
    /// The search was complete and found nothing: a stability proof.
    NoneFound,
    /// The budget ran out before the search space was exhausted.
    BudgetExhausted,
}

/// Stability verdict for a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Unstable(BlockingCertificate),
    /// The budgeted search proved nothing either way.
    Unknown,
}

impl Verdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, Verdict::Stable)
    }
}

/// Searches for a blocking coalition of the given kind.
///
/// Returns the first certificate in the fixed deterministic order (seeds
/// ascending, depth-first growth), `NoneFound` if the search was complete,
/// or `BudgetExhausted`.
pub fn find_blocking<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
    budget: &SearchBudget,
) -> Result<SearchOutcome> {
    let (mut found, complete) = run_search(game, partition, kind, budget, false, None)?;
    Ok(match (found.pop(), complete) {
        (Some(cert), _) => SearchOutcome::Found(cert),
        (None, true) => SearchOutcome::NoneFound,
        (None, false) => SearchOutcome::BudgetExhausted,
    })
}

/// Like [`find_blocking`] with seed vertices split across worker threads.
/// The merged answer is independent of the worker count: every worker runs
/// its seeds to their first certificate and the smallest seed wins.
///
/// Node budgets interleave nondeterministically across workers, so a finite
/// `max_nodes` forces the sequential path.
pub fn find_blocking_threaded<G: HedonicGame + Sync>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
    budget: &SearchBudget,
    threads: usize,
) -> Result<SearchOutcome> {
    if threads <= 1 || budget.max_nodes.is_some() || !budget.connected_only {
        return find_blocking(game, partition, kind, budget);
    }
    validate_inputs(game, partition, budget)?;
    let n = game.player_count();
    let results: Vec<Result<(Option<(usize, BlockingCertificate)>, bool)>> =
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for worker in 0..threads.min(n) {
                let budget = budget.clone();
                handles.push(scope.spawn(move || {
                    let mut first: Option<(usize, BlockingCertificate)> = None;
                    let mut complete = true;
                    for seed in (worker..n).step_by(threads.min(n)) {
                        let (mut certs, seed_complete) =
                            run_search(game, partition, kind, &budget, false, Some(seed))?;
                        complete &= seed_complete;
                        if let Some(cert) = certs.pop() {
                            first = Some((seed, cert));
                            break;
                        }
                    }
                    Ok((first, complete))
                }));
            }
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
    let mut best: Option<(usize, BlockingCertificate)> = None;
    let mut complete = true;
    for r in results {
        let (first, worker_complete) = r?;
        if let Some((seed, cert)) = first {
            if best.as_ref().map_or(true, |(s, _)| seed < *s) {
                best = Some((seed, cert));
            }
        } else {
            complete &= worker_complete;
        }
    }
    Ok(match (best, complete) {
        (Some((_, cert)), _) => SearchOutcome::Found(cert),
        (None, true) => SearchOutcome::NoneFound,
        (None, false) => SearchOutcome::BudgetExhausted,
    })
}

/// Collects every blocking coalition the budget allows, in search order.
/// The boolean reports whether the enumeration was complete.
pub fn collect_blocking<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
    budget: &SearchBudget,
) -> Result<(Vec<BlockingCertificate>, bool)> {
    run_search(game, partition, kind, budget, true, None)
}

/// Budgeted collection for the connected search with the node allowance
/// split evenly across seed vertices, so one seed's deep subtree cannot
/// starve the others. Falls back to [`collect_blocking`] when the budget is
/// unlimited or the search is not connected-only.
pub fn collect_blocking_spread<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
    budget: &SearchBudget,
) -> Result<(Vec<BlockingCertificate>, bool)> {
    let Some(total_nodes) = budget.max_nodes else {
        return collect_blocking(game, partition, kind, budget);
    };
    if !budget.connected_only {
        return collect_blocking(game, partition, kind, budget);
    }
    validate_inputs(game, partition, budget)?;
    let n = game.player_count();
    let per_seed = SearchBudget {
        max_nodes: Some((total_nodes / n as u64).max(16)),
        ..budget.clone()
    };
    let mut found = Vec::new();
    let mut complete = true;
    for seed in 0..n {
        let (coalitions, seed_complete) =
            run_search(game, partition, kind, &per_seed, true, Some(seed))?;
        complete &= seed_complete;
        found.extend(coalitions);
    }
    Ok((found, complete))
}

/// Recomputes a certificate's utilities from scratch and checks the
/// definition of its kind.
pub fn verify_certificate<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    cert: &BlockingCertificate,
) -> Result<()> {
    if cert.coalition.is_empty() {
        return Err(Error::Contract("certificate coalition is empty".into()));
    }
    let mut sorted = cert.coalition.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cert.coalition.len() {
        return Err(Error::Contract("certificate repeats a player".into()));
    }
    let mut strict_somewhere = false;
    for delta in &cert.member_deltas {
        let i = delta.player;
        if !cert.coalition.contains(&i) {
            return Err(Error::Contract(format!(
                "delta for player {i} who is not in the coalition"
            )));
        }
        let current = game.coalition_utility(i, partition.coalition_of(i));
        let proposed = game.coalition_utility(i, &sorted);
        if current != delta.current || proposed != delta.proposed {
            return Err(Error::Contract(format!(
                "certificate utilities for player {i} do not re-verify"
            )));
        }
    }
    if cert.member_deltas.len() != cert.coalition.len() {
        return Err(Error::Contract("certificate must cover every member".into()));
    }
    for delta in &cert.member_deltas {
        match cert.kind {
            BlockKind::Strong => {
                if delta.proposed <= delta.current {
                    return Err(Error::Contract(format!(
                        "player {} does not strictly improve",
                        delta.player
                    )));
                }
            }
            BlockKind::Weak => {
                if delta.proposed < delta.current {
                    return Err(Error::Contract(format!(
                        "player {} gets strictly worse",
                        delta.player
                    )));
                }
                if delta.proposed > delta.current {
                    strict_somewhere = true;
                }
            }
        }
    }
    if cert.kind == BlockKind::Weak && !strict_somewhere {
        return Err(Error::Contract(
            "weak certificate has no strictly improving member".into(),
        ));
    }
    Ok(())
}

/// Core stability: no strongly blocking coalition.
pub fn is_core_stable<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    budget: &SearchBudget,
) -> Result<Verdict> {
    Ok(match find_blocking(game, partition, BlockKind::Strong, budget)? {
        SearchOutcome::Found(c) => Verdict::Unstable(c),
        SearchOutcome::NoneFound => Verdict::Stable,
        SearchOutcome::BudgetExhausted => Verdict::Unknown,
    })
}

/// Strict-core stability: no weakly blocking coalition.
pub fn is_strict_core_stable<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    budget: &SearchBudget,
) -> Result<Verdict> {
    Ok(match find_blocking(game, partition, BlockKind::Weak, budget)? {
        SearchOutcome::Found(c) => Verdict::Unstable(c),
        SearchOutcome::NoneFound => Verdict::Stable,
        SearchOutcome::BudgetExhausted => Verdict::Unknown,
    })
}

/// A complete budget fitting the game: connected search where that is valid,
/// the all-subsets scan otherwise.
pub fn complete_budget<G: HedonicGame>(game: &G) -> SearchBudget {
    if game.is_simple() && game.is_symmetric() {
        SearchBudget::connected_unlimited()
    } else {
        SearchBudget::exhaustive()
    }
}

/// Exhaustive enumeration refuses player counts above this by default
/// (Bell(13) ≈ 2.8×10⁷ partitions).
pub const ENUMERATION_BOUND: usize = 13;

/// Iterator over all partitions of `{0..n}` in restricted-growth order.
pub struct Partitions {
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

/// All set partitions of `{0..n}`, at most [`ENUMERATION_BOUND`] players.
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    enumerate_partitions_with_bound(n, ENUMERATION_BOUND)
}

/// All set partitions of `{0..n}` with an explicit refusal bound.
pub fn enumerate_partitions_with_bound(n: usize, bound: usize) -> Result<Partitions> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    if n == 0 {
        return Err(Error::Contract("cannot partition zero players".into()));
    }
    Ok(Partitions {
        rgs: vec![0; n],
        maxes: vec![0; n],
        state: IterState::Fresh,
    })
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let n = self.rgs.len();
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                return Some(partition_from_rgs(&self.rgs));
            }
            IterState::Running => {}
        }
        // Restricted-growth successor: bump the rightmost digit that can
        // grow, reset the suffix to zero.
        let mut i = n;
        loop {
            if i <= 1 {
                self.state = IterState::Done;
                return None;
            }
            i -= 1;
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                return Some(partition_from_rgs(&self.rgs));
            }
        }
    }
}

fn partition_from_rgs(rgs: &[usize]) -> Partition {
    let blocks = rgs.iter().max().map_or(1, |m| m + 1);
    let mut coalitions = vec![Vec::new(); blocks];
    for (player, &b) in rgs.iter().enumerate() {
        coalitions[b].push(player);
    }
    Partition::new(rgs.len(), coalitions).expect("growth strings are valid partitions")
}

/// Whether the core is nonempty, decided by complete enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreContents {
    Nonempty(Partition),
    Empty,
}

/// Scans all partitions in restricted-growth order and returns the first
/// core-stable one, or a proof of emptiness by exhaustion.
pub fn core_nonempty_exhaustive<G: HedonicGame>(game: &G, n_bound: usize) -> Result<CoreContents> {
    let budget = complete_budget(game);
    for p in enumerate_partitions_with_bound(game.player_count(), n_bound)? {
        if is_core_stable(game, &p, &budget)?.is_stable() {
            return Ok(CoreContents::Nonempty(p));
        }
    }
    Ok(CoreContents::Empty)
}

/// All stable partitions of the given kind, by complete enumeration.
pub fn enumerate_stable_partitions<G: HedonicGame>(
    game: &G,
    kind: BlockKind,
    n_bound: usize,
) -> Result<Vec<Partition>> {
    let budget = complete_budget(game);
    let mut out = Vec::new();
    for p in enumerate_partitions_with_bound(game.player_count(), n_bound)? {
        if matches!(
            find_blocking(game, &p, kind, &budget)?,
            SearchOutcome::NoneFound
        ) {
            out.push(p);
        }
    }
    Ok(out)
}

/// One deviation of a walk: the coalition that formed and its worst member's
/// improvement.
#[derive(Debug, Clone)]
pub struct WalkStep {
    pub coalition: Vec<usize>,
    pub min_delta: Rat,
}

/// Why a deviation walk stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkEnd {
    /// No strongly blocking coalition exists: the partition is core stable.
    Converged,
    /// The walk revisited a partition; it can never converge.
    Cycled,
    /// The step limit ran out.
    StepLimit,
    /// The per-step search budget ran out with nothing found.
    SearchBudget,
}

/// Trace of a deviation walk.
#[derive(Debug, Clone)]
pub struct WalkOutcome {
    pub end: WalkEnd,
    pub partition: Partition,
    pub steps: Vec<WalkStep>,
}

impl WalkOutcome {
    pub fn converged(&self) -> bool {
        self.end == WalkEnd::Converged
    }
}

/// Repeatedly finds a strongly blocking coalition and myopically forms it.
///
/// Among the certificates the budgeted search produces, the walk picks the
/// one maximising the minimum utility improvement, breaking ties towards
/// smaller coalitions and then lexicographically smaller member lists.
/// Remnants of broken coalitions stay together. Convergence is only claimed
/// when a complete search found no blocking coalition.
pub fn deviation_walk<G: HedonicGame>(
    game: &G,
    start: &Partition,
    max_steps: usize,
    budget: &SearchBudget,
) -> Result<WalkOutcome> {
    let mut current = start.clone();
    let mut steps = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(current.growth_string());
    for _ in 0..max_steps {
        let (certs, complete) = collect_blocking_spread(game, &current, BlockKind::Strong, budget)?;
        let chosen = certs.into_iter().max_by(|a, b| {
            a.min_delta()
                .cmp(&b.min_delta())
                .then(b.coalition.len().cmp(&a.coalition.len()))
                .then_with(|| b.coalition.cmp(&a.coalition))
        });
        let Some(cert) = chosen else {
            return Ok(WalkOutcome {
                end: if complete {
                    WalkEnd::Converged
                } else {
                    WalkEnd::SearchBudget
                },
                partition: current,
                steps,
            });
        };
        current = current.deviate(&cert.coalition);
        debug_assert!(Partition::new(
            current.player_count(),
            current.coalitions().to_vec()
        )
        .is_ok());
        steps.push(WalkStep {
            coalition: cert.coalition.clone(),
            min_delta: cert.min_delta(),
        });
        if !seen.insert(current.growth_string()) {
            return Ok(WalkOutcome {
                end: WalkEnd::Cycled,
                partition: current,
                steps,
            });
        }
    }
    // One more complete check so an exactly-on-the-limit convergence counts.
    let (certs, complete) = collect_blocking_spread(game, &current, BlockKind::Strong, budget)?;
    let end = if certs.is_empty() && complete {
        WalkEnd::Converged
    } else {
        WalkEnd::StepLimit
    };
    Ok(WalkOutcome {
        end,
        partition: current,
        steps,
    })
}

// ---------------------------------------------------------------------------
// Search engines
// ---------------------------------------------------------------------------

fn validate_inputs<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    budget: &SearchBudget,
) -> Result<()> {
    if partition.player_count() != game.player_count() {
        return Err(Error::Contract(format!(
            "partition covers {} players but the game has {}",
            partition.player_count(),
            game.player_count()
        )));
    }
    if budget.connected_only && !(game.is_simple() && game.is_symmetric()) {
        return Err(Error::Unsupported(
            "connected-only search requires a simple symmetric game".into(),
        ));
    }
    Ok(())
}

fn run_search<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
    budget: &SearchBudget,
    collect_all: bool,
    only_seed: Option<usize>,
) -> Result<(Vec<BlockingCertificate>, bool)> {
    validate_inputs(game, partition, budget)?;
    if budget.connected_only {
        let mut search = ConnectedSearch::new(game, partition, kind, budget, collect_all);
        search.run(only_seed);
        Ok((
            search
                .found
                .into_iter()
                .map(|c| build_certificate(game, partition, kind, c))
                .collect(),
            !search.truncated,
        ))
    } else {
        subsets_search(game, partition, kind, budget, collect_all)
    }
}

fn build_certificate<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
    coalition: Vec<usize>,
) -> BlockingCertificate {
    let member_deltas = coalition
        .iter()
        .map(|&i| MemberDelta {
            player: i,
            current: game.coalition_utility(i, partition.coalition_of(i)),
            proposed: game.coalition_utility(i, &coalition),
        })
        .collect();
    let cert = BlockingCertificate {
        coalition,
        kind,
        member_deltas,
    };
    debug_assert!(verify_certificate(game, partition, &cert).is_ok());
    cert
}

/// Checks whether `coalition` blocks, straight from the definitions.
fn blocks<G: HedonicGame>(
    game: &G,
    current: &[Rat],
    kind: BlockKind,
    coalition: &[usize],
) -> bool {
    let mut strict = false;
    for &i in coalition {
        let proposed = game.coalition_utility(i, coalition);
        match proposed.cmp(&current[i]) {
            std::cmp::Ordering::Greater => strict = true,
            std::cmp::Ordering::Equal => {
                if kind == BlockKind::Strong {
                    return false;
                }
            }
            std::cmp::Ordering::Less => return false,
        }
    }
    strict
}

fn subsets_search<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
    budget: &SearchBudget,
    collect_all: bool,
) -> Result<(Vec<BlockingCertificate>, bool)> {
    let n = game.player_count();
    if n > 62 {
        return Err(Error::Unsupported(format!(
            "all-subsets search on {n} players is not feasible; use a connected or budgeted search"
        )));
    }
    let current: Vec<Rat> = (0..n)
        .map(|i| game.coalition_utility(i, partition.coalition_of(i)))
        .collect();
    let max_size = budget.max_coalition_size.unwrap_or(n);
    let mut found = Vec::new();
    let mut nodes: u64 = 0;
    let mut members = Vec::with_capacity(n);
    for mask in 1u64..(1u64 << n) {
        if let Some(limit) = budget.max_nodes {
            if nodes >= limit {
                return Ok((found, false));
            }
        }
        nodes += 1;
        if mask.count_ones() as usize > max_size {
            continue;
        }
        members.clear();
        members.extend((0..n).filter(|&i| mask & (1 << i) != 0));
        if blocks(game, &current, kind, &members) {
            found.push(build_certificate(game, partition, kind, members.clone()));
            if !collect_all {
                return Ok((found, true));
            }
        }
    }
    let complete = max_size >= n;
    Ok((found, complete))
}

/// Branch-and-bound enumeration of connected coalitions.
///
/// Connected vertex sets are enumerated once each: for every seed (the
/// minimum vertex of the set), sets grow through an extension frontier of
/// larger-id neighbours. Growth stops at the per-member size bounds, at the
/// utility feasibility bound, or at the budget.
struct ConnectedSearch<'a, G: HedonicGame> {
    game: &'a G,
    adj: Vec<Vec<usize>>,
    deg: Vec<usize>,
    /// Current utilities as exact fractions, denominators positive.
    cur_num: Vec<i128>,
    cur_den: Vec<i128>,
    kind: BlockKind,
    /// Caller-imposed size cap. Cutting here is *not* soundness-preserving,
    /// so hitting it while growth was still feasible marks the search
    /// incomplete. The per-member bounds, by contrast, are proofs.
    size_cap: usize,
    max_nodes: Option<u64>,
    collect_all: bool,
    nodes: u64,
    truncated: bool,
    stop: bool,
    found: Vec<Vec<usize>>,
    seed: usize,
    members: Vec<usize>,
    in_set: Vec<bool>,
    /// Vertex is in the set or has already entered some extension frontier
    /// on the current path.
    closed: Vec<bool>,
    /// Degree inside the current set, by vertex.
    set_deg: Vec<usize>,
    /// Per-member blocking size bound, intersected incrementally.
    bound_stack: Vec<usize>,
}

impl<'a, G: HedonicGame> ConnectedSearch<'a, G> {
    fn new(
        game: &'a G,
        partition: &Partition,
        kind: BlockKind,
        budget: &SearchBudget,
        collect_all: bool,
    ) -> Self {
        let n = game.player_count();
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && !game.valuation(i, j).is_zero() {
                    adj[i].push(j);
                }
            }
        }
        let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
        let mut cur_num = Vec::with_capacity(n);
        let mut cur_den = Vec::with_capacity(n);
        for i in 0..n {
            let u = game.coalition_utility(i, partition.coalition_of(i));
            cur_num.push(*u.numer());
            cur_den.push(*u.denom());
        }
        ConnectedSearch {
            game,
            adj,
            deg,
            cur_num,
            cur_den,
            kind,
            size_cap: budget.max_coalition_size.unwrap_or(n).min(n),
            max_nodes: budget.max_nodes,
            collect_all,
            nodes: 0,
            truncated: false,
            stop: false,
            found: Vec::new(),
            seed: 0,
            members: Vec::new(),
            in_set: vec![false; n],
            closed: vec![false; n],
            set_deg: vec![0; n],
            bound_stack: Vec::new(),
        }
    }

    /// Largest coalition size this member's current utility permits. This
    /// bound is exact, so respecting it never loses a blocking coalition.
    fn member_bound(&self, i: usize) -> usize {
        let n = self.game.player_count();
        let p = self.cur_num[i];
        let q = self.cur_den[i];
        if p <= 0 {
            return n;
        }
        let dq = self.deg[i] as i128 * q;
        let raw = match self.kind {
            // s·p < Δ·q  ⇔  s ≤ (Δ·q − 1) / p
            BlockKind::Strong => (dq - 1).div_euclid(p),
            // s·p ≤ Δ·q  ⇔  s ≤ Δ·q / p
            BlockKind::Weak => dq.div_euclid(p),
        };
        raw.clamp(1, n as i128) as usize
    }

    fn run(&mut self, only_seed: Option<usize>) {
        let n = self.game.player_count();
        let seeds: Vec<usize> = match only_seed {
            Some(s) => vec![s],
            None => (0..n).collect(),
        };
        for seed in seeds {
            if self.stop {
                break;
            }
            self.seed = seed;
            self.members.push(seed);
            self.in_set[seed] = true;
            self.closed[seed] = true;
            self.set_deg[seed] = 0;
            self.bound_stack.push(self.member_bound(seed));
            let ext: Vec<usize> = self.adj[seed].iter().copied().filter(|&w| w > seed).collect();
            for &w in &ext {
                self.closed[w] = true;
            }
            let opened = ext.clone();
            self.recurse(&ext);
            for &w in &opened {
                self.closed[w] = false;
            }
            self.bound_stack.pop();
            self.in_set[seed] = false;
            self.closed[seed] = false;
            self.members.pop();
        }
    }

    fn recurse(&mut self, ext: &[usize]) {
        if self.stop {
            return;
        }
        if let Some(limit) = self.max_nodes {
            if self.nodes >= limit {
                self.truncated = true;
                self.stop = true;
                return;
            }
        }
        self.nodes += 1;

        if self.check_current() {
            self.found.push(self.members.clone());
            if !self.collect_all {
                self.stop = true;
                return;
            }
        }

        let sound_bound = *self.bound_stack.last().expect("nonempty");
        let size = self.members.len();
        let limit = sound_bound.min(self.size_cap);
        if size >= limit || !self.growth_feasible(size + 1, limit) {
            // The caller's cap, unlike the utility bounds, is not a proof:
            // if growth past it could still block, the search is incomplete.
            if self.size_cap < sound_bound
                && self.growth_feasible(limit.max(size) + 1, sound_bound)
            {
                self.truncated = true;
            }
            return;
        }

        for pos in 0..ext.len() {
            if self.stop {
                break;
            }
            let u = ext[pos];
            // Frontier additions: u's neighbours not yet seen on this path.
            let added: Vec<usize> = self.adj[u]
                .iter()
                .copied()
                .filter(|&w| w > self.seed && !self.closed[w])
                .collect();
            for &w in &added {
                self.closed[w] = true;
            }
            let mut child_ext = Vec::with_capacity(ext.len() - pos - 1 + added.len());
            merge_sorted(&ext[pos + 1..], &added, &mut child_ext);

            self.members.push(u);
            self.in_set[u] = true;
            let mut u_deg = 0;
            for k in 0..self.adj[u].len() {
                let w = self.adj[u][k];
                if self.in_set[w] {
                    self.set_deg[w] += 1;
                    u_deg += 1;
                }
            }
            self.set_deg[u] = u_deg;
            self.bound_stack.push(sound_bound.min(self.member_bound(u)));

            self.recurse(&child_ext);

            self.bound_stack.pop();
            for k in 0..self.adj[u].len() {
                let w = self.adj[u][k];
                if self.in_set[w] {
                    self.set_deg[w] -= 1;
                }
            }
            self.in_set[u] = false;
            self.members.pop();
            for &w in &added {
                self.closed[w] = false;
            }
        }
    }

    /// Does the current set block?
    fn check_current(&self) -> bool {
        let s = self.members.len() as i128;
        if s == 1 {
            let i = self.members[0];
            let u = self.game.singleton_utility(i);
            return match self.kind {
                BlockKind::Strong | BlockKind::Weak => {
                    u.numer() * self.cur_den[i] > self.cur_num[i] * u.denom()
                }
            };
        }
        let mut strict = false;
        for &i in &self.members {
            let lhs = self.set_deg[i] as i128 * self.cur_den[i];
            let rhs = self.cur_num[i] * s;
            match self.kind {
                BlockKind::Strong => {
                    if lhs <= rhs {
                        return false;
                    }
                    strict = true;
                }
                BlockKind::Weak => {
                    if lhs < rhs {
                        return false;
                    }
                    if lhs > rhs {
                        strict = true;
                    }
                }
            }
        }
        strict
    }

    /// Can a superset of some size in `from..=to` still block? For each
    /// target size, every current member must be able to reach the required
    /// utility with its remaining outside neighbours.
    fn growth_feasible(&self, from: usize, to: usize) -> bool {
        let s = self.members.len();
        't: for t in from.max(s + 1)..=to {
            for &i in &self.members {
                let reach = self.set_deg[i] + (self.deg[i] - self.set_deg[i]).min(t - s);
                let lhs = reach as i128 * self.cur_den[i];
                let rhs = self.cur_num[i] * t as i128;
                let ok = match self.kind {
                    BlockKind::Strong => lhs > rhs,
                    BlockKind::Weak => lhs >= rhs,
                };
                if !ok {
                    continue 't;
                }
            }
            return true;
        }
        false
    }
}

fn merge_sorted(a: &[usize], b: &[usize], out: &mut Vec<usize>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}
