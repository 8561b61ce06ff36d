//! Constructive partition builders for the tractable graph classes.
//!
//! Each solver is a deterministic polynomial-time procedure whose output is
//! core stable (strict-core stable for the multipartite builder) on its
//! input class. Greedy and scan orders are fixed to ascending vertex/edge
//! ids so runs are reproducible.

use crate::model::{girth, Game, HedonicGame, Partition, TypeSpace};
use crate::rational::Rat;
use crate::stability::{is_core_stable, SearchBudget, Verdict};
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::VecDeque;

fn require_simple_symmetric(game: &Game, what: &str) -> Result<()> {
    if !game.is_simple() || !game.is_symmetric() {
        return Err(Error::Unsupported(format!(
            "{what} needs a simple symmetric game"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Degree ≤ 2: triangles, then edges, then singletons
// ---------------------------------------------------------------------------

/// Partitions a graph of maximum degree 2 into triangles, pairs and
/// singletons by greedy extraction; the result is core stable.
pub fn solve_degree2(game: &Game) -> Result<Partition> {
    require_simple_symmetric(game, "the degree-2 solver")?;
    let n = game.player_count();
    let adj = game.adjacency();
    if let Some(v) = (0..n).find(|&v| adj[v].len() > 2) {
        return Err(Error::Unsupported(format!(
            "vertex {v} has degree {} > 2",
            adj[v].len()
        )));
    }
    let mut alive = vec![true; n];
    let mut coalitions: Vec<Vec<usize>> = Vec::new();
    // Triangles first. With degree ≤ 2 a triangle is a whole component.
    for i in 0..n {
        if !alive[i] || adj[i].len() != 2 {
            continue;
        }
        let (j, k) = (adj[i][0], adj[i][1]);
        if alive[j] && alive[k] && adj[j].contains(&k) {
            coalitions.push(vec![i, j, k]);
            alive[i] = false;
            alive[j] = false;
            alive[k] = false;
        }
    }
    // Then pairs, edges ascending.
    for (u, v) in game.edges() {
        if alive[u] && alive[v] {
            coalitions.push(vec![u, v]);
            alive[u] = false;
            alive[v] = false;
        }
    }
    for v in 0..n {
        if alive[v] {
            coalitions.push(vec![v]);
        }
    }
    Partition::new(n, coalitions)
}

// ---------------------------------------------------------------------------
// Forests: layer grouping from the bottom
// ---------------------------------------------------------------------------

struct BfsTree {
    roots: Vec<usize>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
    component: Vec<usize>,
}

/// Breadth-first spanning forest; roots are component minima, neighbours
/// explored in ascending order.
fn bfs_forest(n: usize, adj: &[Vec<usize>]) -> BfsTree {
    let mut depth = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut component = vec![usize::MAX; n];
    let mut roots = Vec::new();
    for start in 0..n {
        if depth[start] != usize::MAX {
            continue;
        }
        let comp_id = roots.len();
        roots.push(start);
        depth[start] = 0;
        component[start] = comp_id;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    component[w] = comp_id;
                    children[v].push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    BfsTree {
        roots,
        depth,
        children,
        component,
    }
}

/// Bottom-up grouping of one spanning-tree component: repeatedly pair each
/// deepest-layer parent with its deepest-layer children. Returns the
/// (center, children) groups and the root when it ends up alone.
fn layer_grouping(
    members: &[usize],
    tree: &BfsTree,
) -> (Vec<(usize, Vec<usize>)>, Option<usize>) {
    let mut alive: Vec<usize> = members.to_vec();
    let mut groups = Vec::new();
    loop {
        let Some(&maxd) = alive.iter().map(|v| &tree.depth[*v]).max() else {
            return (groups, None);
        };
        if maxd == 0 {
            // Only the root is left.
            return (groups, alive.first().copied());
        }
        let is_alive = |v: usize, alive: &[usize]| alive.contains(&v);
        let mut removed: Vec<usize> = Vec::new();
        let parents: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&v| tree.depth[v] + 1 == maxd)
            .collect();
        for v in parents {
            let kids: Vec<usize> = tree.children[v]
                .iter()
                .copied()
                .filter(|&w| is_alive(w, &alive))
                .collect();
            if !kids.is_empty() {
                removed.push(v);
                removed.extend(kids.iter().copied());
                groups.push((v, kids));
            }
        }
        alive.retain(|v| !removed.contains(v));
    }
}

/// Partitions a forest into bottom-up stars; the result is core stable.
pub fn solve_forest(game: &Game) -> Result<Partition> {
    require_simple_symmetric(game, "the forest solver")?;
    if girth(game)?.is_some() {
        return Err(Error::Unsupported("the graph contains a cycle".into()));
    }
    let n = game.player_count();
    let adj = game.adjacency();
    let tree = bfs_forest(n, &adj);
    let mut coalitions: Vec<Vec<usize>> = Vec::new();
    for comp_id in 0..tree.roots.len() {
        let members: Vec<usize> = (0..n).filter(|&v| tree.component[v] == comp_id).collect();
        if members.len() == 1 {
            coalitions.push(members);
            continue;
        }
        let start = coalitions.len();
        let (groups, lone) = layer_grouping(&members, &tree);
        for (center, kids) in groups {
            let mut c = vec![center];
            c.extend(kids);
            coalitions.push(c);
        }
        if let Some(root) = lone {
            // Send the root to the smallest coalition of one of its
            // neighbours, lowest neighbour id breaking ties.
            let target = adj[root]
                .iter()
                .map(|&nb| {
                    let idx = (start..coalitions.len())
                        .find(|&ci| coalitions[ci].contains(&nb))
                        .expect("tree neighbours were grouped");
                    (coalitions[idx].len(), nb, idx)
                })
                .min()
                .expect("root of a nontrivial component has neighbours");
            coalitions[target.2].push(root);
        }
    }
    Partition::new(n, coalitions)
}

// ---------------------------------------------------------------------------
// Complete multipartite games
// ---------------------------------------------------------------------------

/// The finest strict-core-stable partition of a complete multipartite game:
/// `d = gcd` of the type sizes many coalitions, each holding exactly
/// `|θ|/d` players of every type `θ`.
pub fn solve_bakers_millers_finest(types: &TypeSpace) -> Partition {
    let d = types.divisor();
    let mut coalitions: Vec<Vec<usize>> = vec![Vec::new(); d];
    for t in 0..types.type_count() {
        let members = types.members_of(t);
        let per = members.len() / d;
        for (c, chunk) in members.chunks(per).enumerate() {
            coalitions[c].extend_from_slice(chunk);
        }
    }
    Partition::new(types.player_count(), coalitions).expect("chunks cover all players")
}

/// Strict-core test for complete multipartite games: for every type, the
/// in-coalition fraction must be the same across all coalitions.
pub fn check_bakers_millers_strict_core(types: &TypeSpace, partition: &Partition) -> bool {
    let coalitions = partition.coalitions();
    let first = &coalitions[0];
    for t in 0..types.type_count() {
        let count = |c: &[usize]| c.iter().filter(|&&i| types.type_of(i) == t).count();
        let first_count = count(first);
        for other in &coalitions[1..] {
            // |S∩θ|/|S| = |S'∩θ|/|S'|, cross-multiplied.
            if count(other) * first.len() != first_count * other.len() {
                return false;
            }
        }
    }
    true
}

/// Recovers the type structure of a complete multipartite game: same type
/// means not connected. Errors when the graph is not complete multipartite.
pub fn type_space_from_game(game: &Game) -> Result<TypeSpace> {
    require_simple_symmetric(game, "type recognition")?;
    let n = game.player_count();
    let mut assignment = vec![usize::MAX; n];
    let mut next_type = 0;
    for i in 0..n {
        if assignment[i] != usize::MAX {
            continue;
        }
        assignment[i] = next_type;
        for j in i + 1..n {
            if assignment[j] == usize::MAX && !crate::rational::is_positive(&game.valuation(i, j)) {
                assignment[j] = next_type;
            }
        }
        next_type += 1;
    }
    for i in 0..n {
        for j in i + 1..n {
            let connected = crate::rational::is_positive(&game.valuation(i, j));
            if connected == (assignment[i] == assignment[j]) {
                return Err(Error::Unsupported(
                    "the graph is not complete multipartite".into(),
                ));
            }
        }
    }
    TypeSpace::from_assignment(assignment)
}

// ---------------------------------------------------------------------------
// Bipartite graphs with a perfect matching
// ---------------------------------------------------------------------------

/// Two-colours the graph; errors on odd cycles.
fn bipartition(game: &Game) -> Result<Vec<u8>> {
    let n = game.player_count();
    let adj = game.adjacency();
    let mut colour = vec![u8::MAX; n];
    for start in 0..n {
        if colour[start] != u8::MAX {
            continue;
        }
        colour[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if colour[w] == colour[v] {
                    return Err(Error::Unsupported("the graph is not bipartite".into()));
                }
            }
        }
    }
    Ok(colour)
}

/// The common degree when the positive-edge graph is regular.
///
/// Regular bipartite graphs of degree ≥ 1 always admit a perfect matching,
/// so on them [`solve_bipartite_matching`] cannot fail.
pub fn regularity(game: &Game) -> Option<usize> {
    let n = game.player_count();
    let d = game.degree(0);
    (1..n).all(|v| game.degree(v) == d).then_some(d)
}

/// Computes a maximum matching by augmenting paths and, when it is perfect,
/// returns it as a partition of pairs; every player then has utility 1/2
/// and the partition is core stable.
pub fn solve_bipartite_matching(game: &Game) -> Result<Partition> {
    require_simple_symmetric(game, "the matching solver")?;
    let colour = bipartition(game)?;
    let n = game.player_count();
    let left: Vec<usize> = (0..n).filter(|&v| colour[v] == 0).collect();
    if left.len() * 2 != n {
        return Err(Error::NoPerfectMatching);
    }
    let adj = game.adjacency();
    let mut matched: Vec<Option<usize>> = vec![None; n];

    fn try_augment(
        v: usize,
        adj: &[Vec<usize>],
        matched: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &to in &adj[v] {
            if visited[to] {
                continue;
            }
            visited[to] = true;
            let free = matched[to].is_none();
            if free || try_augment(matched[to].unwrap(), adj, matched, visited) {
                matched[to] = Some(v);
                matched[v] = Some(to);
                return true;
            }
        }
        false
    }

    let mut size = 0;
    for &u in &left {
        let mut visited = vec![false; n];
        if try_augment(u, &adj, &mut matched, &mut visited) {
            size += 1;
        }
    }
    if size * 2 != n {
        return Err(Error::NoPerfectMatching);
    }
    let mut coalitions = Vec::with_capacity(size);
    for &u in &left {
        coalitions.push(vec![u, matched[u].expect("perfect")]);
    }
    Partition::new(n, coalitions)
}

// ---------------------------------------------------------------------------
// Girth ≥ 5: star packings and leximin local search
// ---------------------------------------------------------------------------

/// One star of a packing: a single center with adjacent leaves, or a
/// two-vertex star where both endpoints count as centers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub centers: Vec<usize>,
    pub leaves: Vec<usize>,
}

impl Star {
    fn pair(a: usize, b: usize) -> Star {
        Star {
            centers: vec![a.min(b), a.max(b)],
            leaves: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.centers.len() + self.leaves.len()
    }

    pub fn members(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.centers.iter().chain(&self.leaves).copied().collect();
        m.sort_unstable();
        m
    }

    fn min_vertex(&self) -> usize {
        *self.members().first().expect("stars are nonempty")
    }
}

/// A vertex-disjoint collection of stars covering every non-isolated
/// vertex; isolated vertices stay unpacked as singletons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPacking {
    n: usize,
    stars: Vec<Star>,
    unpacked: Vec<usize>,
}

impl StarPacking {
    pub fn new(n: usize, stars: Vec<Star>, unpacked: Vec<usize>) -> Result<StarPacking> {
        let mut seen = vec![false; n];
        let mut mark = |v: usize| -> Result<()> {
            if v >= n {
                return Err(Error::Contract(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::Contract(format!("vertex {v} packed twice")));
            }
            seen[v] = true;
            Ok(())
        };
        for star in &stars {
            match (star.centers.len(), star.leaves.len()) {
                (1, l) if l >= 2 => {}
                (2, 0) => {}
                _ => {
                    return Err(Error::Contract(
                        "stars have one center and ≥2 leaves, or are a two-center pair".into(),
                    ))
                }
            }
            for &v in star.centers.iter().chain(&star.leaves) {
                mark(v)?;
            }
        }
        for &v in &unpacked {
            mark(v)?;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Contract(format!("vertex {missing} is not covered")));
        }
        let mut stars = stars;
        for star in &mut stars {
            star.centers.sort_unstable();
            star.leaves.sort_unstable();
        }
        stars.sort_by_key(|s| s.min_vertex());
        let mut unpacked = unpacked;
        unpacked.sort_unstable();
        Ok(StarPacking { n, stars, unpacked })
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    pub fn unpacked(&self) -> &[usize] {
        &self.unpacked
    }

    /// Checks the graph-dependent invariants: every leaf is adjacent to its
    /// center, two-center stars are edges, and every vertex with a
    /// neighbour is in a star.
    pub fn validate(&self, game: &Game) -> Result<()> {
        if game.player_count() != self.n {
            return Err(Error::Contract("packing and game sizes differ".into()));
        }
        let positive =
            |u: usize, v: usize| crate::rational::is_positive(&game.valuation(u, v));
        for star in &self.stars {
            match star.centers.as_slice() {
                [a, b] => {
                    if !positive(*a, *b) {
                        return Err(Error::Contract(format!(
                            "pair star {{{a}, {b}}} is not an edge"
                        )));
                    }
                }
                [c] => {
                    for &l in &star.leaves {
                        if !positive(*c, l) {
                            return Err(Error::Contract(format!(
                                "leaf {l} is not adjacent to its center {c}"
                            )));
                        }
                    }
                }
                _ => unreachable!("validated at construction"),
            }
        }
        for &v in &self.unpacked {
            if game.degree(v) > 0 {
                return Err(Error::Contract(format!(
                    "vertex {v} has neighbours but is unpacked"
                )));
            }
        }
        Ok(())
    }

    /// The coalition structure the packing induces.
    pub fn to_partition(&self) -> Partition {
        let mut coalitions: Vec<Vec<usize>> = self.stars.iter().map(|s| s.members()).collect();
        coalitions.extend(self.unpacked.iter().map(|&v| vec![v]));
        Partition::new(self.n, coalitions).expect("packings cover all vertices")
    }

    /// Player utilities of the induced partition, ascending.
    pub fn objective_vector(&self, game: &Game) -> ObjectiveVector {
        let partition = self.to_partition();
        let mut values: Vec<Rat> = (0..self.n)
            .map(|i| game.coalition_utility(i, partition.coalition_of(i)))
            .collect();
        values.sort_unstable();
        ObjectiveVector(values)
    }
}

/// Utilities sorted ascending; compared lexicographically, greater is
/// better.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectiveVector(pub Vec<Rat>);

/// Lexicographic comparison of two ascending utility vectors.
pub fn leximin_compare(a: &ObjectiveVector, b: &ObjectiveVector) -> Result<Ordering> {
    if a.0.len() != b.0.len() {
        return Err(Error::Contract(format!(
            "objective vectors have different lengths: {} vs {}",
            a.0.len(),
            b.0.len()
        )));
    }
    Ok(a.0.cmp(&b.0))
}

/// The termination potential of the local search: every center contributes
/// `n`, every leaf `n − |its star|`. Integral, nonnegative, at most `n²`,
/// and strictly increasing along improvement moves that keep center roles.
pub fn phi_potential(packing: &StarPacking, n: usize) -> Result<u64> {
    if packing.player_count() != n {
        return Err(Error::Contract(format!(
            "packing is over {} vertices, not {n}",
            packing.player_count()
        )));
    }
    let mut phi = 0u64;
    for star in packing.stars() {
        phi += (star.centers.len() * n) as u64;
        phi += (star.leaves.len() * (n - star.size())) as u64;
    }
    Ok(phi)
}

/// An applied improvement move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveKind {
    /// Two adjacent leaves of different stars leave them and pair up.
    PairOff { leaf_a: usize, leaf_b: usize },
    /// A leaf moves to an adjacent center's star.
    Relocate { leaf: usize, to_center: usize },
}

/// Log entry for one applied move.
#[derive(Debug, Clone)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub phi_before: u64,
    pub phi_after: u64,
}

/// Result of the girth-≥5 solver.
#[derive(Debug, Clone)]
pub struct StarPackingRun {
    pub partition: Partition,
    pub packing: StarPacking,
    pub moves: Vec<MoveRecord>,
    /// True when the search stopped at a verified-stable packing while a
    /// potential-neutral improvement was still available (see
    /// `improve_star_packing`).
    pub stopped_at_verified_stable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    None,
    Center(usize),
    Leaf(usize),
}

fn roles_of(packing: &StarPacking) -> Vec<Role> {
    let mut roles = vec![Role::None; packing.player_count()];
    for (si, star) in packing.stars().iter().enumerate() {
        for &c in &star.centers {
            roles[c] = Role::Center(si);
        }
        for &l in &star.leaves {
            roles[l] = Role::Leaf(si);
        }
    }
    roles
}

/// Removes `leaf` from its star, demoting a 3-star remnant to a pair.
fn shrink_star(star: &mut Star, leaf: usize) {
    star.leaves.retain(|&l| l != leaf);
    if star.centers.len() == 1 && star.leaves.len() == 1 {
        let c = star.centers[0];
        let l = star.leaves.pop().expect("just checked");
        *star = Star::pair(c, l);
    }
}

/// Adds `leaf` under `center`; a pair star is rebuilt around that center.
fn grow_star(star: &mut Star, center: usize, leaf: usize) {
    if star.centers.len() == 2 {
        let other = star
            .centers
            .iter()
            .copied()
            .find(|&c| c != center)
            .expect("pair stars have two centers");
        star.centers = vec![center];
        star.leaves = vec![other, leaf];
    } else {
        star.leaves.push(leaf);
    }
    star.leaves.sort_unstable();
}

fn apply_move(packing: &StarPacking, roles: &[Role], mv: &MoveKind) -> StarPacking {
    let mut stars = packing.stars().to_vec();
    match *mv {
        MoveKind::PairOff { leaf_a, leaf_b } => {
            let (Role::Leaf(sa), Role::Leaf(sb)) = (roles[leaf_a], roles[leaf_b]) else {
                panic!("pair-off on non-leaves");
            };
            shrink_star(&mut stars[sa], leaf_a);
            shrink_star(&mut stars[sb], leaf_b);
            stars.push(Star::pair(leaf_a, leaf_b));
        }
        MoveKind::Relocate { leaf, to_center } => {
            let Role::Leaf(from) = roles[leaf] else {
                panic!("relocate on a non-leaf");
            };
            let to = match roles[to_center] {
                Role::Center(si) => si,
                _ => panic!("relocate target is not a center"),
            };
            shrink_star(&mut stars[from], leaf);
            grow_star(&mut stars[to], to_center, leaf);
        }
    }
    StarPacking::new(packing.player_count(), stars, packing.unpacked().to_vec())
        .expect("moves preserve packing validity")
}

/// Replays a recorded move on a packing, for auditing move logs.
pub fn apply_star_move(packing: &StarPacking, mv: &MoveKind) -> StarPacking {
    let roles = roles_of(packing);
    apply_move(packing, &roles, mv)
}

/// Candidate moves in the fixed scan order: pair-offs over ascending leaf
/// pairs, then relocations over ascending leaves and ascending target stars.
fn candidate_moves(packing: &StarPacking, roles: &[Role], adj: &[Vec<usize>]) -> Vec<MoveKind> {
    let mut leaves: Vec<usize> = Vec::new();
    for star in packing.stars() {
        leaves.extend(star.leaves.iter().copied());
    }
    leaves.sort_unstable();
    let mut moves = Vec::new();
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            if roles[a] != roles[b] && adj[a].contains(&b) {
                moves.push(MoveKind::PairOff {
                    leaf_a: a,
                    leaf_b: b,
                });
            }
        }
    }
    for &leaf in &leaves {
        let Role::Leaf(own) = roles[leaf] else {
            unreachable!()
        };
        for (si, star) in packing.stars().iter().enumerate() {
            if si == own {
                continue;
            }
            // The leaf must attach to a center it is adjacent to.
            if let Some(&center) = star
                .centers
                .iter()
                .find(|&&c| adj[leaf].contains(&c))
            {
                moves.push(MoveKind::Relocate {
                    leaf,
                    to_center: center,
                });
            }
        }
    }
    moves
}

/// Runs the improvement loop on a packing: apply a leximin-improving
/// pair-off or relocation until none is left.
///
/// Moves that strictly raise the potential are preferred in scan order.
/// A leximin improvement that leaves the potential flat (a relocation onto
/// a pair star out of a 4-star, the one shape where the two measures
/// disagree) is only taken after a full stability check confirms the
/// current packing is still blocked; when the check proves it stable the
/// search stops there, since the stable outcome is the point of the
/// exercise and the leftover move cannot raise the potential.
pub fn improve_star_packing(
    game: &Game,
    start: StarPacking,
) -> Result<(StarPacking, Vec<MoveRecord>, bool)> {
    let n = game.player_count();
    let adj = game.adjacency();
    let mut packing = start;
    let mut moves: Vec<MoveRecord> = Vec::new();
    let mut stopped_at_verified_stable = false;
    let cap = 10 * n * n + 100;
    for _ in 0..cap {
        let roles = roles_of(&packing);
        let current_obj = packing.objective_vector(game);
        let phi_before = phi_potential(&packing, n)?;
        let mut improving: Option<(StarPacking, u64, MoveKind)> = None;
        let mut chosen: Option<(StarPacking, u64, MoveKind)> = None;
        for mv in candidate_moves(&packing, &roles, &adj) {
            let next = apply_move(&packing, &roles, &mv);
            let next_obj = next.objective_vector(game);
            if leximin_compare(&next_obj, &current_obj)? != Ordering::Greater {
                continue;
            }
            let phi_after = phi_potential(&next, n)?;
            if phi_after > phi_before {
                chosen = Some((next, phi_after, mv));
                break;
            }
            if improving.is_none() {
                improving = Some((next, phi_after, mv));
            }
        }
        let step = match (chosen, improving) {
            (Some(step), _) => step,
            (None, Some(step)) => {
                let verdict = is_core_stable(
                    game,
                    &packing.to_partition(),
                    &SearchBudget::connected_unlimited(),
                )?;
                if verdict == Verdict::Stable {
                    stopped_at_verified_stable = true;
                    break;
                }
                step
            }
            (None, None) => break,
        };
        let (next, phi_after, mv) = step;
        moves.push(MoveRecord {
            kind: mv,
            phi_before,
            phi_after,
        });
        packing = next;
    }
    Ok((packing, moves, stopped_at_verified_stable))
}

/// Initial packing: bottom-up grouping of a breadth-first spanning forest,
/// with a leftover root attached as a leaf of an adjacent center (or, as a
/// fallback, paired with an adjacent detached leaf). Every non-isolated
/// vertex ends up in a star.
pub fn initial_star_packing(game: &Game) -> Result<StarPacking> {
    require_simple_symmetric(game, "star packing")?;
    let n = game.player_count();
    let adj = game.adjacency();
    let tree = bfs_forest(n, &adj);
    let mut stars: Vec<Star> = Vec::new();
    let mut unpacked: Vec<usize> = Vec::new();
    let mut role = vec![Role::None; n];
    for comp_id in 0..tree.roots.len() {
        let members: Vec<usize> = (0..n).filter(|&v| tree.component[v] == comp_id).collect();
        if members.len() == 1 {
            unpacked.push(members[0]);
            continue;
        }
        let (groups, lone) = layer_grouping(&members, &tree);
        for (center, kids) in groups {
            let si = stars.len();
            if kids.len() == 1 {
                stars.push(Star::pair(center, kids[0]));
                role[center] = Role::Center(si);
                role[kids[0]] = Role::Center(si);
            } else {
                for &k in &kids {
                    role[k] = Role::Leaf(si);
                }
                role[center] = Role::Center(si);
                stars.push(Star {
                    centers: vec![center],
                    leaves: kids,
                });
            }
        }
        if let Some(root) = lone {
            let center_nb = adj[root]
                .iter()
                .copied()
                .find(|&w| matches!(role[w], Role::Center(_)));
            if let Some(c) = center_nb {
                let Role::Center(si) = role[c] else { unreachable!() };
                grow_star(&mut stars[si], c, root);
                role[root] = Role::Leaf(si);
                // A pair-star partner may have been demoted to a leaf.
                for &v in stars[si].leaves.clone().iter() {
                    role[v] = Role::Leaf(si);
                }
            } else {
                // All neighbours are leaves: detach the smallest and pair up.
                let l = adj[root][0];
                let Role::Leaf(si) = role[l] else {
                    unreachable!("a non-center neighbour of the root is a leaf")
                };
                shrink_star(&mut stars[si], l);
                for &c in stars[si].centers.clone().iter() {
                    role[c] = Role::Center(si);
                }
                let si_new = stars.len();
                stars.push(Star::pair(root, l));
                role[root] = Role::Center(si_new);
                role[l] = Role::Center(si_new);
            }
        }
    }
    StarPacking::new(n, stars, unpacked)
}

/// Builds a core-stable partition of a girth-≥5 game by star-packing local
/// search: start from a spanning-forest packing, improve while a move
/// raises the leximin objective.
pub fn solve_star_packing(game: &Game) -> Result<StarPackingRun> {
    require_simple_symmetric(game, "the star-packing solver")?;
    if let Some(g) = girth(game)? {
        if g < 5 {
            return Err(Error::Unsupported(format!(
                "girth {g} < 5: the star-packing guarantee does not apply (use the forced variant to run anyway)"
            )));
        }
    }
    run_star_packing(game)
}

/// Runs the star-packing local search without the girth precondition.
/// No stability guarantee attaches to the result.
pub fn solve_star_packing_forced(game: &Game) -> Result<StarPackingRun> {
    require_simple_symmetric(game, "the star-packing solver")?;
    run_star_packing(game)
}

fn run_star_packing(game: &Game) -> Result<StarPackingRun> {
    let initial = initial_star_packing(game)?;
    let (packing, moves, stopped_at_verified_stable) = improve_star_packing(game, initial)?;
    Ok(StarPackingRun {
        partition: packing.to_partition(),
        packing,
        moves,
        stopped_at_verified_stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::model::utility;
    use crate::rational::rat;
    use crate::stability::{find_blocking, BlockKind, SearchOutcome};

    fn exhaustively_core_stable(game: &Game, p: &Partition) -> bool {
        matches!(
            find_blocking(game, p, BlockKind::Strong, &SearchBudget::exhaustive()).unwrap(),
            SearchOutcome::NoneFound
        )
    }

    fn exhaustively_strict_core_stable(game: &Game, p: &Partition) -> bool {
        matches!(
            find_blocking(game, p, BlockKind::Weak, &SearchBudget::exhaustive()).unwrap(),
            SearchOutcome::NoneFound
        )
    }

    #[test]
    fn degree2_on_small_shapes() {
        let c3 = instances::cycle(3);
        assert_eq!(
            solve_degree2(&c3).unwrap(),
            Partition::new(3, vec![vec![0, 1, 2]]).unwrap()
        );

        let path3 = Game::simple_symmetric(3, &[(0, 1), (1, 2)]).unwrap();
        let p = solve_degree2(&path3).unwrap();
        assert_eq!(p, Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap());
        assert!(exhaustively_core_stable(&path3, &p));

        let c6 = instances::cycle(6);
        let p = solve_degree2(&c6).unwrap();
        assert_eq!(
            p,
            Partition::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap()
        );
        assert!(exhaustively_core_stable(&c6, &p));

        let c5 = instances::cycle(5);
        let p = solve_degree2(&c5).unwrap();
        assert_eq!(
            p,
            Partition::new(5, vec![vec![0, 1], vec![2, 3], vec![4]]).unwrap()
        );
        assert!(exhaustively_core_stable(&c5, &p));

        let star = Game::simple_symmetric(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(solve_degree2(&star), Err(Error::Unsupported(_))));
    }

    #[test]
    fn forest_solver_examples() {
        // Star with three leaves, rooted at the center.
        let star = Game::simple_symmetric(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = solve_forest(&star).unwrap();
        assert_eq!(p, Partition::grand(4));
        assert!(exhaustively_core_stable(&star, &p));

        // Path on four vertices: the bottom pair forms first.
        let path4 = Game::simple_symmetric(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = solve_forest(&path4).unwrap();
        assert_eq!(p, Partition::new(4, vec![vec![2, 3], vec![0, 1]]).unwrap());
        assert!(exhaustively_core_stable(&path4, &p));

        let single = Game::simple_symmetric(1, &[]).unwrap();
        assert_eq!(solve_forest(&single).unwrap(), Partition::singletons(1));

        let c4 = instances::cycle(4);
        assert!(matches!(solve_forest(&c4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn forest_lone_root_joins_smallest_neighbouring_coalition() {
        // Root 0 with a pair-child subtree and a triple-child subtree.
        //      0
        //     / \
        //    1   2
        //    |   | \
        //    3   4  5
        //            \
        //             6  (grandchild to make sizes differ)
        let g = Game::simple_symmetric(
            7,
            &[(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (5, 6)],
        )
        .unwrap();
        let p = solve_forest(&g).unwrap();
        // Grouping: {5,6} at the bottom, then {2,4}, then {1,3}; root 0 is
        // lone, its neighbours 1 and 2 sit in 2-coalitions, tie broken to 1.
        assert_eq!(p.coalition_of(0), &[0, 1, 3]);
        assert!(exhaustively_core_stable(&g, &p));
    }

    #[test]
    fn finest_multipartite_partition() {
        let t24 = TypeSpace::from_sizes(&[2, 4]).unwrap();
        let p = solve_bakers_millers_finest(&t24);
        assert_eq!(p.coalitions().len(), 2);
        for c in p.coalitions() {
            assert_eq!(c.len(), 3);
            assert_eq!(c.iter().filter(|&&i| t24.type_of(i) == 0).count(), 1);
            assert_eq!(c.iter().filter(|&&i| t24.type_of(i) == 1).count(), 2);
        }
        assert!(check_bakers_millers_strict_core(&t24, &p));
        let game = instances::bakers_millers_graph(&t24);
        assert!(exhaustively_strict_core_stable(&game, &p));

        let t11 = TypeSpace::from_sizes(&[1, 1]).unwrap();
        assert_eq!(solve_bakers_millers_finest(&t11), Partition::grand(2));

        let t12 = TypeSpace::from_sizes(&[1, 2]).unwrap();
        assert_eq!(solve_bakers_millers_finest(&t12), Partition::grand(3));
        let game = instances::bakers_millers_graph(&t12);
        assert!(exhaustively_strict_core_stable(&game, &Partition::grand(3)));
    }

    #[test]
    fn ratio_test_examples() {
        let t12 = TypeSpace::from_sizes(&[1, 2]).unwrap();
        let split = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(!check_bakers_millers_strict_core(&t12, &split));
        assert!(check_bakers_millers_strict_core(&t12, &Partition::grand(3)));
        // The split is nevertheless core stable (only the strict core
        // rejects it).
        let game = instances::bakers_millers_graph(&t12);
        assert!(exhaustively_core_stable(&game, &split));
        assert!(!exhaustively_strict_core_stable(&game, &split));
    }

    #[test]
    fn type_recognition() {
        let t = TypeSpace::from_sizes(&[4, 10]).unwrap();
        let game = instances::bakers_millers_graph(&t);
        let back = type_space_from_game(&game).unwrap();
        assert_eq!(back.sizes(), &[4, 10]);

        // A 2-path is complete bipartite with sides {0,2} and {1}.
        let path3 = Game::simple_symmetric(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(type_space_from_game(&path3).unwrap().sizes(), &[2, 1]);

        let path4 = Game::simple_symmetric(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(type_space_from_game(&path4).is_err());
    }

    #[test]
    fn matching_solver_examples() {
        let k22 = instances::bakers_millers_graph(&TypeSpace::from_sizes(&[2, 2]).unwrap());
        let p = solve_bipartite_matching(&k22).unwrap();
        // Augmenting from 1 rematches 0 onto 3.
        assert_eq!(p, Partition::new(4, vec![vec![0, 3], vec![1, 2]]).unwrap());
        for i in 0..4 {
            assert_eq!(utility(&k22, i, p.coalition_of(i)).unwrap(), rat(1, 2));
        }
        assert!(exhaustively_core_stable(&k22, &p));

        let edge = Game::simple_symmetric(2, &[(0, 1)]).unwrap();
        assert_eq!(solve_bipartite_matching(&edge).unwrap(), Partition::grand(2));

        let c6 = instances::cycle(6);
        let p = solve_bipartite_matching(&c6).unwrap();
        // Augmenting from 0, 2, 4 in order settles on this matching.
        assert_eq!(
            p,
            Partition::new(6, vec![vec![0, 5], vec![1, 2], vec![3, 4]]).unwrap()
        );
        assert!(exhaustively_core_stable(&c6, &p));

        let path3 = Game::simple_symmetric(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            solve_bipartite_matching(&path3),
            Err(Error::NoPerfectMatching)
        ));
        let c5 = instances::cycle(5);
        assert!(matches!(
            solve_bipartite_matching(&c5),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn leximin_examples() {
        let a = ObjectiveVector(vec![rat(1, 2); 4]);
        let b = ObjectiveVector(vec![rat(0, 1), rat(1, 3), rat(1, 3), rat(2, 3)]);
        assert_eq!(leximin_compare(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(leximin_compare(&a, &a).unwrap(), Ordering::Equal);

        let c = ObjectiveVector(vec![rat(0, 1), rat(1, 2)]);
        let d = ObjectiveVector(vec![rat(0, 1), rat(1, 3)]);
        assert_eq!(leximin_compare(&c, &d).unwrap(), Ordering::Greater);
        assert!(leximin_compare(&a, &c).is_err());
    }

    #[test]
    fn phi_examples() {
        let edgeless = StarPacking::new(3, vec![], vec![0, 1, 2]).unwrap();
        assert_eq!(phi_potential(&edgeless, 3).unwrap(), 0);

        let pair = StarPacking::new(2, vec![Star::pair(0, 1)], vec![]).unwrap();
        assert_eq!(phi_potential(&pair, 2).unwrap(), 4);

        let star4 = StarPacking::new(
            4,
            vec![Star {
                centers: vec![0],
                leaves: vec![1, 2, 3],
            }],
            vec![],
        )
        .unwrap();
        assert_eq!(phi_potential(&star4, 4).unwrap(), 4);
        assert!(phi_potential(&star4, 5).is_err());
    }

    /// Three stars with four cross edges; the packing drawn with solid
    /// edges admits the pair-off of leaves 4 and 10 as its first
    /// improvement.
    #[test]
    fn first_improvement_is_the_cross_pair() {
        // c1=0 (leaves 1, 2), c2=3 (leaves 4, 5, 6), c3=7 (leaves 8, 9, 10);
        // extra edges 2–3, 5–7, 7–0, 4–10.
        let g = Game::simple_symmetric(
            11,
            &[
                (0, 1),
                (0, 2),
                (3, 4),
                (3, 5),
                (3, 6),
                (7, 8),
                (7, 9),
                (7, 10),
                (2, 3),
                (5, 7),
                (7, 0),
                (4, 10),
            ],
        )
        .unwrap();
        assert_eq!(girth(&g).unwrap(), Some(5));
        let start = StarPacking::new(
            11,
            vec![
                Star {
                    centers: vec![0],
                    leaves: vec![1, 2],
                },
                Star {
                    centers: vec![3],
                    leaves: vec![4, 5, 6],
                },
                Star {
                    centers: vec![7],
                    leaves: vec![8, 9, 10],
                },
            ],
            vec![],
        )
        .unwrap();
        start.validate(&g).unwrap();
        let (_packed, moves, _) = improve_star_packing(&g, start).unwrap();
        assert_eq!(
            moves.first().map(|m| m.kind.clone()),
            Some(MoveKind::PairOff {
                leaf_a: 4,
                leaf_b: 10
            })
        );
        for m in &moves {
            assert!(m.phi_after > m.phi_before);
        }
    }

    #[test]
    fn full_star_is_already_optimal() {
        let star = Game::simple_symmetric(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let run = solve_star_packing(&star).unwrap();
        assert!(run.moves.is_empty());
        assert_eq!(run.partition, Partition::grand(4));
        assert!(exhaustively_core_stable(&star, &run.partition));
    }

    #[test]
    fn petersen_graph_packing_is_core_stable() {
        let mut edges = Vec::new();
        for i in 0..5usize {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Game::simple_symmetric(10, &edges).unwrap();
        assert_eq!(girth(&g).unwrap(), Some(5));
        let run = solve_star_packing(&g).unwrap();
        run.packing.validate(&g).unwrap();
        assert!(exhaustively_core_stable(&g, &run.partition));
        assert!(run.moves.len() <= 100);
    }

    #[test]
    fn low_girth_inputs_are_refused_unless_forced() {
        let c4 = instances::cycle(4);
        assert!(matches!(solve_star_packing(&c4), Err(Error::Unsupported(_))));
        let run = solve_star_packing_forced(&c4).unwrap();
        run.packing.validate(&c4).unwrap();
    }

    /// The shape where a leximin improvement leaves the potential flat: a
    /// full 4-star with a pendant pair hanging off one leaf. The packing is
    /// already core stable, so the search must stop without applying the
    /// neutral move.
    #[test]
    fn neutral_move_is_skipped_when_the_packing_is_stable() {
        let g = Game::simple_symmetric(
            6,
            &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)],
        )
        .unwrap();
        let run = solve_star_packing(&g).unwrap();
        assert!(run.stopped_at_verified_stable);
        assert_eq!(run.partition, Partition::new(6, vec![vec![0, 1, 2, 3], vec![4, 5]]).unwrap());
        for m in &run.moves {
            assert!(m.phi_after > m.phi_before);
        }
        assert!(exhaustively_core_stable(&g, &run.partition));
    }
}
