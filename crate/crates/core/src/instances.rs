//! Benchmark instances and instance transformations.
//!
//! The gadget catalogue reproduces, with fixed deterministic labellings,
//! the small games that witness emptiness or uniqueness phenomena, plus the
//! building blocks used by the hardness transformations:
//!
//! * `two-triangles-6`: two triangles joined by a perfect matching; its
//!   core holds exactly one partition.
//! * `digraph-5`: 5-player weighted digraph with empty core. Arc weights:
//!   each player values its successor on the cycle at 1 and its predecessor
//!   at 2; all other arcs weigh −10.
//! * `weighted-6`: 6-player symmetric weighted game with empty core
//!   (edge weights 7/6/5 around two glued triangles, −24 elsewhere).
//! * `c5`: the undirected 5-cycle; its strict core is empty.
//! * `social-15`: 15-player nonnegative symmetric weighted game with empty
//!   core; the cliqued-up blueprint of `empty-core-40`.
//! * `empty-core-40`: simple symmetric, 40 players, empty core. Five
//!   3-cliques `A_l`, five 2-cliques `B_l`, five 3-cliques `C_l`; `A_l` is
//!   completely joined to `B_l`, `B_{l-1}` and `C_l`, and `B_l` to
//!   `C_{l+2}` (indices mod 5).
//! * `remark1-39`: `empty-core-40` with one `B_2` player removed; ships a
//!   certified core-stable partition.
//! * `k-4-10`: complete bipartite graph on 4 + 10 players.
//!
//! Transformations: subsidy elimination (`reduce_supported`), the
//! grid-clique encoding (`reduce_maxmin_clique`), and the clique
//! verification gadget.

use crate::model::{Game, HedonicGame, Partition, TypeSpace};
use crate::rational::{rat, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A game plus per-player singleton subsidies: a subsidised player `i` with
/// level `l_i` gets utility `(l_i − 1)/l_i` when alone instead of 0.
///
/// Levels of at least 2 are accepted (subsidies in `[1/2, 1)`); the
/// subsidy-elimination transformation additionally requires `l_i ≥ 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportedGame {
    game: Game,
    subsidies: BTreeMap<usize, u64>,
}

impl SupportedGame {
    pub fn new(game: Game, subsidies: BTreeMap<usize, u64>) -> Result<SupportedGame> {
        for (&i, &l) in &subsidies {
            if i >= game.player_count() {
                return Err(Error::Contract(format!("subsidised player {i} out of range")));
            }
            if l < 2 {
                return Err(Error::Contract(format!(
                    "subsidy level for player {i} must be at least 2, got {l}"
                )));
            }
        }
        Ok(SupportedGame { game, subsidies })
    }

    pub fn base(&self) -> &Game {
        &self.game
    }

    pub fn subsidies(&self) -> &BTreeMap<usize, u64> {
        &self.subsidies
    }

    pub fn subsidy_level(&self, i: usize) -> Option<u64> {
        self.subsidies.get(&i).copied()
    }
}

impl HedonicGame for SupportedGame {
    fn player_count(&self) -> usize {
        self.game.player_count()
    }

    fn valuation(&self, i: usize, j: usize) -> Rat {
        HedonicGame::valuation(&self.game, i, j)
    }

    fn singleton_utility(&self, i: usize) -> Rat {
        match self.subsidies.get(&i) {
            Some(&l) => rat(l as i128 - 1, l as i128),
            None => Rat::zero(),
        }
    }

    // Subsidies only override singleton utilities; the connected-search
    // soundness argument for simple symmetric games is unaffected.
    fn is_simple(&self) -> bool {
        self.game.is_simple()
    }

    fn is_symmetric(&self) -> bool {
        self.game.is_symmetric()
    }
}

/// A named benchmark game, with a certified partition where one is known.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub name: &'static str,
    pub game: Game,
    /// A partition known to be core stable, when the catalogue records one.
    pub certified_partition: Option<Partition>,
}

pub const GADGET_NAMES: [&str; 8] = [
    "two-triangles-6",
    "digraph-5",
    "weighted-6",
    "c5",
    "social-15",
    "empty-core-40",
    "remark1-39",
    "k-4-10",
];

/// Builds a gadget by name. Unknown names list the catalogue.
pub fn gadget(name: &str) -> Result<Gadget> {
    match name {
        "two-triangles-6" => Ok(Gadget {
            name: "two-triangles-6",
            game: two_triangles_six(),
            certified_partition: Some(
                Partition::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).expect("valid"),
            ),
        }),
        "digraph-5" => Ok(Gadget {
            name: "digraph-5",
            game: digraph_five(),
            certified_partition: None,
        }),
        "weighted-6" => Ok(Gadget {
            name: "weighted-6",
            game: weighted_six(),
            certified_partition: None,
        }),
        "c5" => Ok(Gadget {
            name: "c5",
            game: cycle(5),
            certified_partition: None,
        }),
        "social-15" => Ok(Gadget {
            name: "social-15",
            game: social_fifteen(),
            certified_partition: None,
        }),
        "empty-core-40" => Ok(Gadget {
            name: "empty-core-40",
            game: empty_core_forty(),
            certified_partition: None,
        }),
        "remark1-39" => {
            let (game, partition) = remark_thirty_nine();
            Ok(Gadget {
                name: "remark1-39",
                game,
                certified_partition: Some(partition),
            })
        }
        "k-4-10" => {
            let types = TypeSpace::from_sizes(&[4, 10]).expect("valid");
            Ok(Gadget {
                name: "k-4-10",
                game: bakers_millers_graph(&types),
                certified_partition: Some(Partition::grand(14)),
            })
        }
        _ => Err(Error::UnknownGadget {
            name: name.to_string(),
            available: GADGET_NAMES.join(", "),
        }),
    }
}

/// Undirected cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Game {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Game::simple_symmetric(n, &edges).expect("valid")
}

fn two_triangles_six() -> Game {
    // Triangles {0,1,2} and {3,4,5} plus the matching 0–3, 1–4, 2–5.
    Game::simple_symmetric(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("valid")
}

fn digraph_five() -> Game {
    let mut arcs = Vec::new();
    for i in 0..5usize {
        arcs.push((i, (i + 1) % 5, rat(1, 1)));
        arcs.push((i, (i + 4) % 5, rat(2, 1)));
    }
    Game::weighted_directed(5, &arcs, rat(-10, 1)).expect("valid")
}

fn weighted_six() -> Game {
    let w = |u: usize, v: usize, x: i128| (u - 1, v - 1, rat(x, 1));
    let edges = [
        w(1, 2, 7),
        w(1, 3, 5),
        w(2, 3, 6),
        w(3, 4, 7),
        w(3, 5, 5),
        w(4, 5, 6),
        w(5, 6, 7),
        w(5, 1, 5),
        w(6, 1, 6),
    ];
    Game::weighted_symmetric(6, &edges, rat(-24, 1)).expect("valid")
}

fn social_fifteen() -> Game {
    // Players: a_1..a_5 = 0..4, b_1..b_5 = 5..9, c_1..c_5 = 10..14.
    let a = |l: usize| l - 1;
    let b = |l: usize| 4 + l;
    let c = |l: usize| 9 + l;
    let mut edges = Vec::new();
    for l in 1..=5usize {
        let prev = if l == 1 { 5 } else { l - 1 };
        let two_after = (l + 1) % 5 + 1;
        edges.push((a(l), b(l), rat(4, 1)));
        edges.push((a(l), b(prev), rat(4, 1)));
        edges.push((a(l), c(l), rat(5, 1)));
        edges.push((b(l), c(two_after), rat(4, 1)));
    }
    Game::weighted_symmetric(15, &edges, rat(0, 1)).expect("valid")
}

/// Player blocks of the 40-player empty-core game, 1-indexed by `l`.
/// `A_l` = 3 players, `B_l` = 2 players, `C_l` = 3 players, laid out as
/// A_1..A_5 | B_1..B_5 | C_1..C_5.
pub fn forty_gadget_blocks() -> (Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let a: Vec<Vec<usize>> = (0..5).map(|l| vec![3 * l, 3 * l + 1, 3 * l + 2]).collect();
    let b: Vec<Vec<usize>> = (0..5).map(|l| vec![15 + 2 * l, 15 + 2 * l + 1]).collect();
    let c: Vec<Vec<usize>> = (0..5).map(|l| vec![25 + 3 * l, 25 + 3 * l + 1, 25 + 3 * l + 2]).collect();
    (a, b, c)
}

/// Edge list of the 40-player empty-core game (see module docs for the
/// block structure).
pub fn empty_core_forty_edges() -> Vec<(usize, usize)> {
    let (a, b, c) = forty_gadget_blocks();
    let mut edges = Vec::new();
    let clique = |block: &[usize], edges: &mut Vec<(usize, usize)>| {
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                edges.push((block[i], block[j]));
            }
        }
    };
    let join = |x: &[usize], y: &[usize], edges: &mut Vec<(usize, usize)>| {
        for &u in x {
            for &v in y {
                edges.push((u.min(v), u.max(v)));
            }
        }
    };
    for l in 0..5 {
        clique(&a[l], &mut edges);
        clique(&b[l], &mut edges);
        clique(&c[l], &mut edges);
    }
    for l in 0..5usize {
        let prev = (l + 4) % 5;
        let two_after = (l + 2) % 5;
        join(&a[l], &b[l], &mut edges);
        join(&a[l], &b[prev], &mut edges);
        join(&a[l], &c[l], &mut edges);
        join(&b[l], &c[two_after], &mut edges);
    }
    edges.sort_unstable();
    edges
}

fn empty_core_forty() -> Game {
    Game::simple_symmetric(40, &empty_core_forty_edges()).expect("valid")
}

/// The 39-player variant: the second `B_2` player (id 18) is removed and
/// the remaining ids close ranks. Returns the game together with its
/// certified core-stable partition.
fn remark_thirty_nine() -> (Game, Partition) {
    const REMOVED: usize = 18;
    let relabel = |v: usize| if v > REMOVED { v - 1 } else { v };
    let edges: Vec<(usize, usize)> = empty_core_forty_edges()
        .into_iter()
        .filter(|&(u, v)| u != REMOVED && v != REMOVED)
        .map(|(u, v)| (relabel(u), relabel(v)))
        .collect();
    let game = Game::simple_symmetric(39, &edges).expect("valid");

    let (a, b, c) = forty_gadget_blocks();
    let map = |block: &[usize]| -> Vec<usize> {
        block
            .iter()
            .copied()
            .filter(|&v| v != REMOVED)
            .map(relabel)
            .collect()
    };
    let mut coalitions = Vec::new();
    // A_1 ∪ B_1 ∪ B_5, then A_l ∪ C_l for l = 2..5, then B_4 ∪ C_1, and the
    // leftovers B_2 (now a single player) and B_3.
    let mut first = map(&a[0]);
    first.extend(map(&b[0]));
    first.extend(map(&b[4]));
    coalitions.push(first);
    for l in 1..5 {
        let mut s = map(&a[l]);
        s.extend(map(&c[l]));
        coalitions.push(s);
    }
    let mut bc = map(&b[3]);
    bc.extend(map(&c[0]));
    coalitions.push(bc);
    coalitions.push(map(&b[1]));
    coalitions.push(map(&b[2]));
    let partition = Partition::new(39, coalitions).expect("valid");
    (game, partition)
}

/// Complete multipartite game for a type space: players of different types
/// are connected, players of the same type are not.
pub fn bakers_millers_graph(types: &TypeSpace) -> Game {
    let n = types.player_count();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if types.type_of(i) != types.type_of(j) {
                edges.push((i, j));
            }
        }
    }
    Game::simple_symmetric(n, &edges).expect("valid")
}

/// Translates partitions between a subsidised game and its plain image
/// under [`reduce_supported`].
#[derive(Debug, Clone)]
pub struct SupportReduction {
    pub game: Game,
    original_players: usize,
    /// For each subsidised player, the ids of its attached clique.
    pub cliques: BTreeMap<usize, Vec<usize>>,
}

impl SupportReduction {
    /// Maps a partition of the subsidised game to one of the plain game:
    /// subsidised singletons absorb their clique, all other cliques stand
    /// alone.
    pub fn forward(&self, partition: &Partition) -> Result<Partition> {
        if partition.player_count() != self.original_players {
            return Err(Error::Contract(
                "partition does not match the subsidised game".into(),
            ));
        }
        let mut coalitions: Vec<Vec<usize>> = Vec::new();
        for coalition in partition.coalitions() {
            let mut c = coalition.clone();
            if c.len() == 1 {
                if let Some(clique) = self.cliques.get(&c[0]) {
                    c.extend(clique.iter().copied());
                }
            }
            coalitions.push(c);
        }
        for (&i, clique) in &self.cliques {
            if partition.coalition_of(i).len() != 1 {
                coalitions.push(clique.clone());
            }
        }
        Partition::new(self.game.player_count(), coalitions)
    }

    /// Inverse of [`SupportReduction::forward`]; defined for partitions in
    /// which every attached clique appears either alone or together with
    /// exactly its subsidised player.
    pub fn backward(&self, partition: &Partition) -> Result<Partition> {
        if partition.player_count() != self.game.player_count() {
            return Err(Error::Contract("partition does not match the plain game".into()));
        }
        let mut coalitions: Vec<Vec<usize>> = Vec::new();
        for coalition in partition.coalitions() {
            let original: Vec<usize> = coalition
                .iter()
                .copied()
                .filter(|&v| v < self.original_players)
                .collect();
            if original.len() == coalition.len() {
                coalitions.push(original);
                continue;
            }
            // The coalition contains clique players; it must be C_i or
            // C_i ∪ {i} for a single subsidised i.
            let clique_members: Vec<usize> = coalition
                .iter()
                .copied()
                .filter(|&v| v >= self.original_players)
                .collect();
            let owner = self
                .cliques
                .iter()
                .find(|(_, clique)| clique.iter().any(|v| clique_members.contains(v)));
            let Some((&i, clique)) = owner else {
                return Err(Error::Contract("unrecognised clique players".into()));
            };
            if clique_members != *clique {
                return Err(Error::Contract(format!(
                    "attached clique of player {i} is split across coalitions"
                )));
            }
            match original.as_slice() {
                [] => {}
                [only] if *only == i => coalitions.push(vec![i]),
                _ => {
                    return Err(Error::Contract(format!(
                        "attached clique of player {i} sits with foreign players"
                    )));
                }
            }
        }
        Partition::new(self.original_players, coalitions)
    }
}

/// Eliminates singleton subsidies: each subsidised player `i` with level
/// `l_i ≥ 4` gains a fresh clique of `l_i − 1` players, fully connected to
/// each other and to `i`. The subsidised game has a nonempty core exactly
/// when the plain image does.
pub fn reduce_supported(sg: &SupportedGame) -> Result<SupportReduction> {
    if !sg.base().is_simple() || !sg.base().is_symmetric() {
        return Err(Error::Unsupported(
            "subsidy elimination needs a simple symmetric base game".into(),
        ));
    }
    let n = sg.player_count();
    let mut edges = sg.base().edges();
    let mut next = n;
    let mut cliques = BTreeMap::new();
    for (&i, &l) in sg.subsidies() {
        if l < 4 {
            return Err(Error::Unsupported(format!(
                "subsidy elimination requires levels of at least 4, player {i} has {l}"
            )));
        }
        let fresh: Vec<usize> = (next..next + (l as usize - 1)).collect();
        next += l as usize - 1;
        for (k, &u) in fresh.iter().enumerate() {
            edges.push((i, u));
            for &v in &fresh[k + 1..] {
                edges.push((u, v));
            }
        }
        cliques.insert(i, fresh);
    }
    Ok(SupportReduction {
        game: Game::simple_symmetric(next, &edges)?,
        original_players: n,
        cliques,
    })
}

/// A grid-clique decision instance: a graph over `n` rows × 2 columns of
/// equal-size cells, asking for a row-wise choice of cells whose union has
/// no clique of size `k = n + nm/2`.
#[derive(Debug, Clone)]
pub struct GridCliqueInstance {
    rows: usize,
    cell_size: usize,
    /// Edges over the `2·rows·cell_size` grid vertices, cell-major order.
    edges: Vec<(usize, usize)>,
}

impl GridCliqueInstance {
    pub fn new(rows: usize, cell_size: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if rows == 0 || cell_size == 0 {
            return Err(Error::Contract("grid must have rows and nonempty cells".into()));
        }
        if (rows * cell_size) % 2 != 0 {
            return Err(Error::Contract(
                "rows × cell size must be even so the clique target is integral".into(),
            ));
        }
        let n = 2 * rows * cell_size;
        for &(u, v) in &edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Contract(format!("bad grid edge ({u}, {v})")));
            }
        }
        Ok(GridCliqueInstance {
            rows,
            cell_size,
            edges,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cell_size(&self) -> usize {
        self.cell_size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Clique size target `k = rows + rows·cell_size/2`.
    pub fn target(&self) -> usize {
        self.rows + self.rows * self.cell_size / 2
    }

    /// Vertices of cell (`row`, `col`), 0-indexed, cell-major.
    pub fn cell(&self, row: usize, col: usize) -> Vec<usize> {
        let start = (row * 2 + col) * self.cell_size;
        (start..start + self.cell_size).collect()
    }
}

/// Player-group offsets of a grid-clique encoding, for structure checks and
/// report output.
#[derive(Debug, Clone)]
pub struct GridCliqueLayout {
    pub total_players: usize,
    /// `z_i`, one per row.
    pub row_choosers: Vec<usize>,
    /// Cell guard sets, indexed `[row][col]`, each of size `M`.
    pub cell_guards: Vec<Vec<Vec<usize>>>,
    /// The original grid vertices (identity-mapped block).
    pub vertices: Vec<usize>,
    /// Mate of each vertex.
    pub mates: Vec<usize>,
    /// Anchor clique `C_v` of each vertex, size `k − 3`.
    pub anchors: Vec<Vec<usize>>,
    /// For each row chooser and each mate, the 39 fresh players completing
    /// an empty-core copy around it.
    pub chooser_copies: Vec<Vec<usize>>,
    pub mate_copies: Vec<Vec<usize>>,
    pub guard_count: usize,
}

/// Encodes a grid-clique instance as a subsidised game whose core is
/// nonempty exactly when the instance has a clique-free row choice.
///
/// Groups: one chooser `z_i` per row; `M = 20·m²·n` subsidised guards per
/// cell (subsidy `(M+2m)/(M+2m+1)`); the grid vertices and a mate `v'` per
/// vertex; a subsidised anchor clique `C_v` of `k−3` players per vertex
/// (subsidy `(k−2)/(k−1)`); and a 40-player empty-core copy glued to every
/// chooser and every mate, the distinguished player sitting in a `B_2` slot.
pub fn reduce_maxmin_clique(
    instance: &GridCliqueInstance,
) -> Result<(SupportedGame, GridCliqueLayout)> {
    let n = instance.rows();
    let m = instance.cell_size();
    let k = instance.target();
    if k < 4 {
        return Err(Error::Unsupported(format!(
            "clique target {k} is below 4; the anchor cliques would be empty"
        )));
    }
    let big_m = 20 * m * m * n;
    let vertices_n = 2 * n * m;

    let mut next = 0usize;
    let mut alloc = |count: usize| -> Vec<usize> {
        let block: Vec<usize> = (next..next + count).collect();
        next += count;
        block
    };

    let row_choosers = alloc(n);
    let mut cell_guards = Vec::with_capacity(n);
    for _ in 0..n {
        cell_guards.push(vec![alloc(big_m), alloc(big_m)]);
    }
    let vertices = alloc(vertices_n);
    let mates = alloc(vertices_n);
    let mut anchors = Vec::with_capacity(vertices_n);
    for _ in 0..vertices_n {
        anchors.push(alloc(k - 3));
    }
    let chooser_copies: Vec<Vec<usize>> = (0..n).map(|_| alloc(39)).collect();
    let mate_copies: Vec<Vec<usize>> = (0..vertices_n).map(|_| alloc(39)).collect();
    let total = next;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Original grid edges, identity-mapped onto the vertex block.
    for &(u, v) in instance.edges() {
        edges.push((vertices[u], vertices[v]));
    }
    let clique = |block: &[usize], edges: &mut Vec<(usize, usize)>| {
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                edges.push((block[i], block[j]));
            }
        }
    };
    for v in 0..vertices_n {
        // C_v ∪ {v, v'} is a clique of size k − 1.
        let mut anchor_clique = anchors[v].clone();
        anchor_clique.push(vertices[v]);
        anchor_clique.push(mates[v]);
        clique(&anchor_clique, &mut edges);
    }
    for row in 0..n {
        for col in 0..2 {
            // X_{i,j} ∪ {z_i} is a clique of size M + 1.
            let mut guard_clique = cell_guards[row][col].clone();
            guard_clique.push(row_choosers[row]);
            clique(&guard_clique, &mut edges);
            // Every vertex of the cell and its mate see the whole cell guard.
            for &v in &instance.cell(row, col) {
                for &x in &cell_guards[row][col] {
                    edges.push((vertices[v], x));
                    edges.push((mates[v], x));
                }
            }
        }
    }
    // Empty-core copies: the distinguished outside player takes the id of
    // the first B_2 slot (id 17 in the 40-player labelling).
    let forty = empty_core_forty_edges();
    let glue_copy = |distinguished: usize, fresh: &[usize], edges: &mut Vec<(usize, usize)>| {
        const B2_SLOT: usize = 17;
        let map = |v: usize| -> usize {
            match v.cmp(&B2_SLOT) {
                std::cmp::Ordering::Equal => distinguished,
                std::cmp::Ordering::Less => fresh[v],
                std::cmp::Ordering::Greater => fresh[v - 1],
            }
        };
        for &(u, v) in &forty {
            edges.push((map(u), map(v)));
        }
    };
    for row in 0..n {
        glue_copy(row_choosers[row], &chooser_copies[row], &mut edges);
    }
    for v in 0..vertices_n {
        glue_copy(mates[v], &mate_copies[v], &mut edges);
    }

    let mut subsidies = BTreeMap::new();
    let guard_level = (big_m + 2 * m + 1) as u64;
    for row in 0..n {
        for col in 0..2 {
            for &x in &cell_guards[row][col] {
                subsidies.insert(x, guard_level);
            }
        }
    }
    let anchor_level = (k - 1) as u64;
    for block in &anchors {
        for &c in block {
            subsidies.insert(c, anchor_level);
        }
    }

    let game = Game::simple_symmetric(total, &edges)?;
    let supported = SupportedGame::new(game, subsidies)?;
    let layout = GridCliqueLayout {
        total_players: total,
        row_choosers,
        cell_guards,
        vertices,
        mates,
        anchors,
        chooser_copies,
        mate_copies,
        guard_count: big_m,
    };
    Ok((supported, layout))
}

/// The verification gadget for clique lower bounds: every vertex of the
/// input graph becomes a subsidised player with subsidy `(k−2)/(k−1)`.
/// The all-singletons partition is core stable exactly when the graph has
/// no clique of size `k`.
pub fn clique_verification_gadget(
    graph: &Game,
    k: usize,
) -> Result<(SupportedGame, Partition)> {
    if !graph.is_simple() || !graph.is_symmetric() {
        return Err(Error::Unsupported(
            "the clique gadget needs a simple symmetric graph".into(),
        ));
    }
    if k < 3 {
        return Err(Error::Unsupported(format!(
            "clique target {k} is below 3; the subsidy level k−1 would be degenerate"
        )));
    }
    let n = graph.player_count();
    let subsidies: BTreeMap<usize, u64> = (0..n).map(|i| (i, (k - 1) as u64)).collect();
    let sg = SupportedGame::new(graph.clone(), subsidies)?;
    Ok((sg, Partition::singletons(n)))
}
