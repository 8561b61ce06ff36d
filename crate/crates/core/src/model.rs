//! Game and partition model.
//!
//! A game stores the full n×n valuation matrix with exact rational entries
//! and a zero diagonal. Simple symmetric games double as undirected graphs:
//! `v_i(j) = 1` exactly when `{i, j}` is an edge. Players are dense
//! 0-indexed integers internally; external formats are 1-indexed and
//! translated at the I/O boundary.

use crate::rational::{is_positive, Rat};
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::Zero;
use std::collections::VecDeque;

/// How player `i` ranks coalition `S` against coalition `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preference {
    /// `u_i(S) > u_i(T)`.
    Strict,
    /// `u_i(S) = u_i(T)`.
    Indifferent,
    /// `u_i(S) < u_i(T)`.
    Worse,
}

impl Preference {
    /// Weak preference: strictly better or indifferent.
    pub fn is_weak(self) -> bool {
        matches!(self, Preference::Strict | Preference::Indifferent)
    }
}

/// Common interface of plain games and games with singleton subsidies.
///
/// `coalition_utility` is the one entry point used by the stability search;
/// only singleton coalitions may deviate from the plain average-valuation
/// rule (subsidised players).
pub trait HedonicGame {
    fn player_count(&self) -> usize;
    fn valuation(&self, i: usize, j: usize) -> Rat;
    /// Utility of player `i` when alone. Zero unless subsidised.
    fn singleton_utility(&self, i: usize) -> Rat;
    fn is_simple(&self) -> bool;
    fn is_symmetric(&self) -> bool;

    /// Average valuation of `coalition` from `i`'s point of view.
    /// Assumes `i ∈ coalition`; use [`utility`] for the checked variant.
    fn coalition_utility(&self, i: usize, coalition: &[usize]) -> Rat {
        if coalition.len() == 1 {
            return self.singleton_utility(i);
        }
        let sum: Rat = coalition.iter().map(|&j| self.valuation(i, j)).sum();
        sum / Rat::from_integer(coalition.len() as i128)
    }
}

/// A fractional hedonic game on `n` players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    n: usize,
    vals: Vec<Rat>,
    simple: bool,
    symmetric: bool,
}

impl Game {
    /// Builds a game from a full valuation matrix. The diagonal must be zero.
    pub fn from_matrix(vals: Vec<Vec<Rat>>) -> Result<Game> {
        let n = vals.len();
        if n == 0 {
            return Err(Error::Contract("a game needs at least one player".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in vals.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Contract(format!(
                    "valuation matrix is not square: row {i} has {} entries",
                    row.len()
                )));
            }
            if !row[i].is_zero() {
                return Err(Error::Contract(format!(
                    "self-valuation of player {i} must be zero"
                )));
            }
            flat.extend(row.iter().cloned());
        }
        Ok(Game::from_flat(n, flat))
    }

    /// Builds a game from arbitrary valuations, normalising each row by
    /// subtracting the player's self-valuation. Normalisation shifts every
    /// utility of that player by a constant, so all preference verdicts are
    /// unchanged.
    pub fn from_raw_valuations(vals: Vec<Vec<Rat>>) -> Result<Game> {
        let n = vals.len();
        if n == 0 {
            return Err(Error::Contract("a game needs at least one player".into()));
        }
        let mut shifted = Vec::with_capacity(n);
        for (i, row) in vals.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Contract(format!(
                    "valuation matrix is not square: row {i} has {} entries",
                    row.len()
                )));
            }
            let shift = row[i].clone();
            shifted.push(row.into_iter().map(|v| v - shift.clone()).collect());
        }
        Game::from_matrix(shifted)
    }

    fn from_flat(n: usize, vals: Vec<Rat>) -> Game {
        let one = Rat::from_integer(1);
        let simple = (0..n)
            .all(|i| (0..n).all(|j| i == j || vals[i * n + j].is_zero() || vals[i * n + j] == one));
        let symmetric = (0..n).all(|i| (i + 1..n).all(|j| vals[i * n + j] == vals[j * n + i]));
        Game {
            n,
            vals,
            simple,
            symmetric,
        }
    }

    /// Simple symmetric game from an undirected edge list.
    pub fn simple_symmetric(n: usize, edges: &[(usize, usize)]) -> Result<Game> {
        let mut vals = vec![Rat::zero(); n * n];
        if n == 0 {
            return Err(Error::Contract("a game needs at least one player".into()));
        }
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Contract(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::Contract(format!("self-loop at {u}")));
            }
            vals[u * n + v] = Rat::from_integer(1);
            vals[v * n + u] = Rat::from_integer(1);
        }
        Ok(Game::from_flat(n, vals))
    }

    /// Weighted symmetric game: listed edges get their weight, all other
    /// off-diagonal pairs get `default`.
    pub fn weighted_symmetric(n: usize, edges: &[(usize, usize, Rat)], default: Rat) -> Result<Game> {
        let mut vals = vec![default; n * n];
        if n == 0 {
            return Err(Error::Contract("a game needs at least one player".into()));
        }
        for i in 0..n {
            vals[i * n + i] = Rat::zero();
        }
        for (u, v, w) in edges {
            if *u >= n || *v >= n {
                return Err(Error::Contract(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::Contract(format!("self-loop at {u}")));
            }
            vals[u * n + v] = w.clone();
            vals[v * n + u] = w.clone();
        }
        Ok(Game::from_flat(n, vals))
    }

    /// Weighted directed game: listed arcs get their weight, all other
    /// off-diagonal arcs get `default`.
    pub fn weighted_directed(n: usize, arcs: &[(usize, usize, Rat)], default: Rat) -> Result<Game> {
        let mut vals = vec![default; n * n];
        if n == 0 {
            return Err(Error::Contract("a game needs at least one player".into()));
        }
        for i in 0..n {
            vals[i * n + i] = Rat::zero();
        }
        for (u, v, w) in arcs {
            if *u >= n || *v >= n {
                return Err(Error::Contract(format!("arc ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::Contract(format!("self-loop at {u}")));
            }
            vals[u * n + v] = w.clone();
        }
        Ok(Game::from_flat(n, vals))
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    pub fn valuation(&self, i: usize, j: usize) -> &Rat {
        &self.vals[i * self.n + j]
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Adjacency lists of the graph of strictly positive symmetric pairs,
    /// derived on demand from the matrix. For simple symmetric games this is
    /// the underlying undirected graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j
                    && is_positive(self.valuation(i, j))
                    && is_positive(self.valuation(j, i))
                {
                    adj[i].push(j);
                }
            }
        }
        adj
    }

    /// Degree of `i` in the positive-edge graph.
    pub fn degree(&self, i: usize) -> usize {
        (0..self.n)
            .filter(|&j| {
                j != i && is_positive(self.valuation(i, j)) && is_positive(self.valuation(j, i))
            })
            .count()
    }

    /// Undirected positive edges as sorted pairs, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if is_positive(self.valuation(i, j)) && is_positive(self.valuation(j, i)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl HedonicGame for Game {
    fn player_count(&self) -> usize {
        self.n
    }

    fn valuation(&self, i: usize, j: usize) -> Rat {
        self.vals[i * self.n + j].clone()
    }

    fn singleton_utility(&self, _i: usize) -> Rat {
        Rat::zero()
    }

    fn is_simple(&self) -> bool {
        self.simple
    }

    fn is_symmetric(&self) -> bool {
        self.symmetric
    }
}

/// Average valuation of `coalition` for member `i`, exactly.
pub fn utility<G: HedonicGame>(game: &G, i: usize, coalition: &[usize]) -> Result<Rat> {
    check_membership(game, i, coalition)?;
    Ok(game.coalition_utility(i, coalition))
}

/// Compares coalitions `s` and `t` from `i`'s point of view.
pub fn prefers<G: HedonicGame>(game: &G, i: usize, s: &[usize], t: &[usize]) -> Result<Preference> {
    check_membership(game, i, s)?;
    check_membership(game, i, t)?;
    let us = game.coalition_utility(i, s);
    let ut = game.coalition_utility(i, t);
    Ok(match us.cmp(&ut) {
        std::cmp::Ordering::Greater => Preference::Strict,
        std::cmp::Ordering::Equal => Preference::Indifferent,
        std::cmp::Ordering::Less => Preference::Worse,
    })
}

fn check_membership<G: HedonicGame>(game: &G, i: usize, coalition: &[usize]) -> Result<()> {
    if coalition.is_empty() {
        return Err(Error::Contract("coalition is empty".into()));
    }
    if i >= game.player_count() {
        return Err(Error::Contract(format!("player {i} out of range")));
    }
    if let Some(&j) = coalition.iter().find(|&&j| j >= game.player_count()) {
        return Err(Error::Contract(format!("player {j} out of range")));
    }
    if !coalition.contains(&i) {
        return Err(Error::Contract(format!("player {i} is not in the coalition")));
    }
    Ok(())
}

/// True iff every player weakly prefers their coalition to being alone.
pub fn is_individually_rational<G: HedonicGame>(game: &G, partition: &Partition) -> bool {
    (0..game.player_count()).all(|i| {
        game.coalition_utility(i, partition.coalition_of(i)) >= game.singleton_utility(i)
    })
}

/// Connected components of the positive symmetric-edge graph.
/// Errors on non-symmetric games, where the undirected reading is ambiguous.
pub fn connected_components(game: &Game) -> Result<Vec<Vec<usize>>> {
    if !game.is_symmetric() {
        return Err(Error::Unsupported(
            "connected components need a symmetric game".into(),
        ));
    }
    let adj = game.adjacency();
    let n = game.player_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    Ok(comps)
}

/// Length of the shortest cycle; `None` for forests.
///
/// BFS from every vertex; the first cross or back edge met at distance
/// levels `d(u)`, `d(w)` closes a cycle of length `d(u) + d(w) + 1`.
pub fn girth(game: &Game) -> Result<Option<usize>> {
    if !game.is_simple() || !game.is_symmetric() {
        return Err(Error::Unsupported(
            "girth is defined for simple symmetric games".into(),
        ));
    }
    let adj = game.adjacency();
    let n = game.player_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    Ok(best)
}

/// A disjoint cover of the players by nonempty coalitions.
///
/// Canonical form: members ascending within a coalition, coalitions ordered
/// by their smallest member. Construction always canonicalises, so equality
/// is structural equality of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    coalitions: Vec<Vec<usize>>,
    index: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, coalitions: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(coalitions.len());
        for mut c in coalitions {
            if c.is_empty() {
                return Err(Error::Contract("empty coalition in partition".into()));
            }
            c.sort_unstable();
            for &i in &c {
                if i >= n {
                    return Err(Error::Contract(format!("player {i} out of range")));
                }
                if seen[i] {
                    return Err(Error::Contract(format!(
                        "player {i} appears in more than one coalition"
                    )));
                }
                seen[i] = true;
            }
            canon.push(c);
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Contract(format!(
                "player {missing} is not covered by the partition"
            )));
        }
        canon.sort_by_key(|c| c[0]);
        let mut index = vec![0; n];
        for (ci, c) in canon.iter().enumerate() {
            for &i in c {
                index[i] = ci;
            }
        }
        Ok(Partition {
            n,
            coalitions: canon,
            index,
        })
    }

    /// Everyone alone.
    pub fn singletons(n: usize) -> Partition {
        Partition::new(n, (0..n).map(|i| vec![i]).collect()).expect("valid")
    }

    /// Everyone together.
    pub fn grand(n: usize) -> Partition {
        Partition::new(n, vec![(0..n).collect()]).expect("valid")
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    pub fn coalitions(&self) -> &[Vec<usize>] {
        &self.coalitions
    }

    /// The coalition containing `i`.
    pub fn coalition_of(&self, i: usize) -> &[usize] {
        &self.coalitions[self.index[i]]
    }

    pub fn coalition_index_of(&self, i: usize) -> usize {
        self.index[i]
    }

    /// The partition after coalition `s` deviates: `s` becomes one coalition
    /// and the nonempty remnants of broken coalitions each stay together.
    pub fn deviate(&self, s: &[usize]) -> Partition {
        let mut in_s = vec![false; self.n];
        for &i in s {
            in_s[i] = true;
        }
        let mut next = vec![s.to_vec()];
        for c in &self.coalitions {
            let rest: Vec<usize> = c.iter().copied().filter(|&i| !in_s[i]).collect();
            if !rest.is_empty() {
                next.push(rest);
            }
        }
        Partition::new(self.n, next).expect("deviation preserves the cover")
    }

    /// Restricted-growth encoding; canonical key for hashing and comparison.
    pub fn growth_string(&self) -> Vec<usize> {
        let mut key = vec![0; self.n];
        for (ci, c) in self.coalitions.iter().enumerate() {
            for &i in c {
                key[i] = ci;
            }
        }
        key
    }
}

/// Players partitioned into types; the shape data for complete multipartite
/// (Bakers–Millers style) games.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpace {
    assignment: Vec<usize>,
    sizes: Vec<usize>,
    divisor: usize,
}

impl TypeSpace {
    /// Types as consecutive blocks: `sizes = [2, 4]` puts players 0–1 in
    /// type 0 and players 2–5 in type 1.
    pub fn from_sizes(sizes: &[usize]) -> Result<TypeSpace> {
        if sizes.is_empty() {
            return Err(Error::Contract("a type space needs at least one type".into()));
        }
        let mut assignment = Vec::new();
        for (t, &s) in sizes.iter().enumerate() {
            if s == 0 {
                return Err(Error::Contract(format!("type {t} is empty")));
            }
            assignment.extend(std::iter::repeat(t).take(s));
        }
        Ok(TypeSpace {
            assignment,
            sizes: sizes.to_vec(),
            divisor: gcd_all(sizes),
        })
    }

    /// Types from an explicit player→type map. Type indices must be dense.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<TypeSpace> {
        if assignment.is_empty() {
            return Err(Error::Contract("a type space needs at least one player".into()));
        }
        let t = assignment.iter().max().unwrap() + 1;
        let mut sizes = vec![0usize; t];
        for &a in &assignment {
            sizes[a] += 1;
        }
        if let Some(empty) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::Contract(format!("type {empty} is empty")));
        }
        let divisor = gcd_all(&sizes);
        Ok(TypeSpace {
            assignment,
            sizes,
            divisor,
        })
    }

    pub fn player_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn type_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn type_of(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Greatest common divisor of the type sizes.
    pub fn divisor(&self) -> usize {
        self.divisor
    }

    /// Players of type `t`, ascending.
    pub fn members_of(&self, t: usize) -> Vec<usize> {
        (0..self.assignment.len())
            .filter(|&i| self.assignment[i] == t)
            .collect()
    }
}

fn gcd_all(sizes: &[usize]) -> usize {
    sizes.iter().fold(0usize, |acc, &s| acc.gcd(&s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::rational::rat;

    fn two_triangles() -> Game {
        instances::gadget("two-triangles-6").unwrap().game
    }

    #[test]
    fn utility_on_the_six_player_example() {
        let g = two_triangles();
        // Players 1,2,3 are 0,1,2 internally.
        assert_eq!(utility(&g, 0, &[0, 1, 2]).unwrap(), rat(2, 3));
        assert_eq!(utility(&g, 0, &(0..6).collect::<Vec<_>>()).unwrap(), rat(1, 2));
    }

    #[test]
    fn singleton_utility_is_zero() {
        let g = two_triangles();
        for i in 0..6 {
            assert_eq!(utility(&g, i, &[i]).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn utility_on_the_five_player_digraph() {
        let g = instances::gadget("digraph-5").unwrap().game;
        // Arc (1,2) has weight 1, so {1,2} averages to 1/2 for player 1.
        assert_eq!(utility(&g, 0, &[0, 1]).unwrap(), rat(1, 2));
        assert_eq!(utility(&g, 1, &[0, 1]).unwrap(), rat(2, 2));
    }

    #[test]
    fn membership_is_enforced() {
        let g = two_triangles();
        assert!(matches!(utility(&g, 0, &[1, 2]), Err(Error::Contract(_))));
        assert!(matches!(utility(&g, 0, &[]), Err(Error::Contract(_))));
        assert!(prefers(&g, 0, &[0, 1], &[1, 2]).is_err());
    }

    #[test]
    fn prefers_on_the_six_player_example() {
        let g = two_triangles();
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(prefers(&g, 0, &[0, 1, 2], &all).unwrap(), Preference::Strict);
        assert_eq!(prefers(&g, 0, &[0, 1, 2], &[0, 1, 2]).unwrap(), Preference::Indifferent);
        assert_eq!(prefers(&g, 0, &all, &[0, 1, 2]).unwrap(), Preference::Worse);
    }

    #[test]
    fn prefers_on_the_five_cycle() {
        let g = instances::gadget("c5").unwrap().game;
        // 0 is adjacent to 1 and 4: {0,1} gives 1/2, {0,1,2} gives 1/3.
        assert_eq!(prefers(&g, 0, &[0, 1], &[0, 1, 2]).unwrap(), Preference::Strict);
    }

    #[test]
    fn individual_rationality_examples() {
        let g = two_triangles();
        assert!(is_individually_rational(&g, &Partition::grand(6)));
        assert!(is_individually_rational(&g, &Partition::singletons(6)));

        let digraph = instances::gadget("digraph-5").unwrap().game;
        // {1,2,3} makes player 3 average a -10 arc.
        let p = Partition::new(5, vec![vec![0, 1, 2], vec![3], vec![4]]).unwrap();
        assert!(!is_individually_rational(&digraph, &p));
        assert!(is_individually_rational(&digraph, &Partition::singletons(5)));
    }

    #[test]
    fn components_examples() {
        let g = two_triangles();
        assert_eq!(connected_components(&g).unwrap().len(), 1);

        let edgeless = Game::simple_symmetric(3, &[]).unwrap();
        assert_eq!(connected_components(&edgeless).unwrap().len(), 3);

        let two = Game::simple_symmetric(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        let comps = connected_components(&two).unwrap();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        let directed = instances::gadget("digraph-5").unwrap().game;
        assert!(connected_components(&directed).is_err());
    }

    #[test]
    fn girth_examples() {
        let c5 = instances::gadget("c5").unwrap().game;
        assert_eq!(girth(&c5).unwrap(), Some(5));

        let k4 = Game::simple_symmetric(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(girth(&k4).unwrap(), Some(3));

        for n in [4usize, 6, 7, 9] {
            assert_eq!(girth(&instances::cycle(n)).unwrap(), Some(n));
        }

        let path = Game::simple_symmetric(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&path).unwrap(), None);

        let weighted = instances::gadget("weighted-6").unwrap().game;
        assert!(girth(&weighted).is_err());
    }

    #[test]
    fn empty_games_are_rejected_and_one_player_games_are_legal() {
        assert!(Game::simple_symmetric(0, &[]).is_err());
        let g = Game::simple_symmetric(1, &[]).unwrap();
        assert_eq!(g.player_count(), 1);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![], vec![2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![2, 3]]).is_err());
    }

    #[test]
    fn partition_canonical_form_and_lookup() {
        let p = Partition::new(4, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(p.coalitions(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(p.coalition_of(3), &[1, 3]);
        assert_eq!(p.coalition_index_of(2), 0);
        assert_eq!(p.growth_string(), vec![0, 1, 0, 1]);
    }

    #[test]
    fn deviation_keeps_remnants_together() {
        let p = Partition::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let q = p.deviate(&[2, 3]);
        assert_eq!(q.coalitions(), &[vec![0, 1], vec![2, 3], vec![4, 5]]);
    }

    #[test]
    fn diagonal_normalisation_preserves_preferences() {
        // Shifting every valuation of a player by a constant (here: the
        // normalisation that zeroes the diagonal) must not change any
        // preference verdict. Checked on random raw matrices.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let n = rng.random_range(2..=6);
            let raw: Vec<Vec<Rat>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| rat(rng.random_range(-12i128..=12), rng.random_range(1i128..=4)))
                        .collect()
                })
                .collect();
            let g = Game::from_raw_valuations(raw.clone()).unwrap();
            let raw_avg = |i: usize, s: &[usize]| -> Rat {
                let sum: Rat = s.iter().map(|&j| raw[i][j].clone()).sum();
                sum / Rat::from_integer(s.len() as i128)
            };
            for _ in 0..20 {
                let player = rng.random_range(0..n);
                let coalition = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<usize> {
                    let mut c: Vec<usize> =
                        (0..n).filter(|_| rng.random_bool(0.5)).collect();
                    if !c.contains(&player) {
                        c.push(player);
                        c.sort_unstable();
                    }
                    c
                };
                let s = coalition(&mut rng);
                let t = coalition(&mut rng);
                let got = prefers(&g, player, &s, &t).unwrap();
                let want = match raw_avg(player, &s).cmp(&raw_avg(player, &t)) {
                    std::cmp::Ordering::Greater => Preference::Strict,
                    std::cmp::Ordering::Equal => Preference::Indifferent,
                    std::cmp::Ordering::Less => Preference::Worse,
                };
                assert_eq!(got, want, "coalitions {s:?} vs {t:?}");
            }
        }
    }

    #[test]
    fn type_space_construction() {
        let t = TypeSpace::from_sizes(&[2, 4]).unwrap();
        assert_eq!(t.player_count(), 6);
        assert_eq!(t.divisor(), 2);
        assert_eq!(t.members_of(0), vec![0, 1]);
        assert!(TypeSpace::from_sizes(&[2, 0]).is_err());

        let a = TypeSpace::from_assignment(vec![0, 1, 1, 0]).unwrap();
        assert_eq!(a.sizes(), &[2, 2]);
        assert_eq!(a.divisor(), 2);
    }
}
