//! Shared oracles and instance generators for the integration suites.
//!
//! The blocking oracle here deliberately bypasses the search engines: it
//! scans every subset and computes utilities through the public `utility`
//! operation only, so it can referee them.

// Each integration binary uses its own subset of these helpers.
#![allow(dead_code)]

use fhg_core::instances::SupportedGame;
use fhg_core::model::{utility, Game, HedonicGame, Partition, TypeSpace};
use fhg_core::stability::BlockKind;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Subset-scan blocking oracle, independent of the search engines.
pub fn oracle_blocking<G: HedonicGame>(
    game: &G,
    partition: &Partition,
    kind: BlockKind,
) -> Option<Vec<usize>> {
    let n = game.player_count();
    assert!(n <= 20, "oracle is for desk-scale games");
    let current: Vec<_> = (0..n)
        .map(|i| utility(game, i, partition.coalition_of(i)).unwrap())
        .collect();
    for mask in 1u64..(1u64 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let mut strict = false;
        let mut ok = true;
        for &i in &members {
            let proposed = utility(game, i, &members).unwrap();
            match proposed.cmp(&current[i]) {
                std::cmp::Ordering::Greater => strict = true,
                std::cmp::Ordering::Equal => {
                    if kind == BlockKind::Strong {
                        ok = false;
                        break;
                    }
                }
                std::cmp::Ordering::Less => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && strict {
            return Some(members);
        }
    }
    None
}

pub fn oracle_core_stable<G: HedonicGame>(game: &G, p: &Partition) -> bool {
    oracle_blocking(game, p, BlockKind::Strong).is_none()
}

pub fn oracle_strict_core_stable<G: HedonicGame>(game: &G, p: &Partition) -> bool {
    oracle_blocking(game, p, BlockKind::Weak).is_none()
}

/// Exhaustive core-emptiness decision through the oracle.
pub fn oracle_core_nonempty<G: HedonicGame>(game: &G, partitions: impl Iterator<Item = Partition>) -> Option<Partition> {
    for p in partitions {
        if oracle_core_stable(game, &p) {
            return Some(p);
        }
    }
    None
}

pub fn random_partition(n: usize, rng: &mut ChaCha8Rng) -> Partition {
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for player in 0..n {
        buckets[rng.random_range(0..n)].push(player);
    }
    buckets.retain(|b| !b.is_empty());
    Partition::new(n, buckets).unwrap()
}

pub fn random_simple_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Game {
    let density = [0.15f64, 0.3, 0.5, 0.8][rng.random_range(0..4)];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Game::simple_symmetric(n, &edges).unwrap()
}

/// Disjoint paths and cycles over a shuffled vertex set.
pub fn random_degree2(n: usize, rng: &mut ChaCha8Rng) -> Game {
    let mut vertices: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        vertices.swap(i, rng.random_range(0..=i));
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    while pos < n {
        let remaining = n - pos;
        let len = rng.random_range(1..=remaining.min(6));
        let segment = &vertices[pos..pos + len];
        for w in segment.windows(2) {
            edges.push((w[0], w[1]));
        }
        if len >= 3 && rng.random_bool(0.5) {
            edges.push((segment[0], segment[len - 1]));
        }
        pos += len;
    }
    Game::simple_symmetric(n, &edges).unwrap()
}

/// Random labelled forest: each non-root attaches to a smaller-id parent.
pub fn random_forest(n: usize, rng: &mut ChaCha8Rng) -> Game {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.random_bool(0.85) {
            edges.push((rng.random_range(0..v), v));
        }
    }
    Game::simple_symmetric(n, &edges).unwrap()
}

/// Bipartite graph with a planted perfect matching; `n` must be even.
pub fn random_bipartite_with_matching(n: usize, rng: &mut ChaCha8Rng) -> Game {
    assert!(n % 2 == 0);
    let half = n / 2;
    let mut partner: Vec<usize> = (0..half).collect();
    for i in (1..half).rev() {
        partner.swap(i, rng.random_range(0..=i));
    }
    let mut edges = Vec::new();
    for i in 0..half {
        edges.push((i, half + partner[i]));
    }
    for i in 0..half {
        for j in half..n {
            if partner[i] != j - half && rng.random_bool(0.3) {
                edges.push((i, j));
            }
        }
    }
    Game::simple_symmetric(n, &edges).unwrap()
}

/// Incremental random edges, rejecting any that would close a cycle of
/// length under five.
pub fn random_girth5(n: usize, rng: &mut ChaCha8Rng) -> Game {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.random_range(0..=i));
    }
    let budget = n + rng.random_range(0..=n);
    let mut edges = Vec::new();
    for &(u, v) in &pairs {
        if edges.len() >= budget {
            break;
        }
        if bfs_distance(&adj, u, v, 3) >= 4 {
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u, v));
        }
    }
    Game::simple_symmetric(n, &edges).unwrap()
}

/// Distance capped at `limit + 1`: returns `limit + 1` when `target` is
/// farther than `limit` hops.
fn bfs_distance(adj: &[Vec<usize>], from: usize, target: usize, limit: usize) -> usize {
    if from == target {
        return 0;
    }
    let mut dist = vec![usize::MAX; adj.len()];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if dist[v] == limit {
            continue;
        }
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if w == target {
                    return dist[w];
                }
                queue.push_back(w);
            }
        }
    }
    limit + 1
}

/// Random type sizes summing to a player count in `2..=max_n`.
pub fn random_type_space(max_n: usize, rng: &mut ChaCha8Rng) -> TypeSpace {
    let n = rng.random_range(2..=max_n);
    let k = rng.random_range(1..=n.min(4));
    let mut sizes = vec![1usize; k];
    for _ in k..n {
        sizes[rng.random_range(0..k)] += 1;
    }
    TypeSpace::from_sizes(&sizes).unwrap()
}

/// All labelled graphs on `n` vertices, by edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Game> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..(1u64 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        Game::simple_symmetric(n, &edges).unwrap()
    })
}

pub fn supported(game: Game, player: usize, level: u64) -> SupportedGame {
    SupportedGame::new(game, BTreeMap::from([(player, level)])).unwrap()
}
