//! Text formats for games, partitions and grid-clique instances.
//!
//! Game files are line-oriented UTF-8 with `#` comments:
//!
//! ```text
//! fhg <n> <directed|undirected> <simple|weighted>
//! default -10          # weighted only: weight of every unlisted pair/arc
//! 1 2                  # simple: an edge (or arc when directed)
//! 1 2 7                # weighted: edge with weight 7
//! 1 2 -2.5             # weights may be exact decimals or p/q rationals
//! subsidy 3 4          # player 3 is subsidised at level 4 (utility 3/4 alone)
//! ```
//!
//! Players are 1-indexed in files. Undirected files list each edge once;
//! duplicates are an error. Partition files hold one coalition per line as
//! space-separated player labels.
//!
//! Serialisers emit weights as `p/q` so round-trips are lossless, and emit
//! records in a fixed sorted order so identical inputs produce identical
//! bytes.

use crate::instances::{GridCliqueInstance, SupportedGame};
use crate::model::{Game, Partition};
use crate::rational::{format_rat, parse_rat, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A parsed game file: plain, or wrapped with singleton subsidies.
#[derive(Debug, Clone)]
pub enum ParsedGame {
    Plain(Game),
    Supported(SupportedGame),
}

impl ParsedGame {
    pub fn base(&self) -> &Game {
        match self {
            ParsedGame::Plain(g) => g,
            ParsedGame::Supported(sg) => sg.base(),
        }
    }

    pub fn player_count(&self) -> usize {
        self.base().player_count()
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct Header {
    n: usize,
    directed: bool,
    weighted: bool,
}

/// Parses a game file.
pub fn parse_game(text: &str) -> Result<ParsedGame> {
    let mut header: Option<Header> = None;
    let mut default: Option<Rat> = None;
    let mut edges: Vec<(usize, usize, Rat)> = Vec::new();
    let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    let mut subsidies: BTreeMap<usize, u64> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(h) = header.as_ref() else {
            if fields.len() != 4 || fields[0] != "fhg" {
                return Err(parse_err(
                    lineno,
                    "expected header 'fhg <n> <directed|undirected> <simple|weighted>'",
                ));
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad player count '{}'", fields[1])))?;
            if n == 0 {
                return Err(parse_err(lineno, "a game needs at least one player"));
            }
            let directed = match fields[2] {
                "directed" => true,
                "undirected" => false,
                other => return Err(parse_err(lineno, format!("expected directedness, got '{other}'"))),
            };
            let weighted = match fields[3] {
                "weighted" => true,
                "simple" => false,
                other => return Err(parse_err(lineno, format!("expected 'simple' or 'weighted', got '{other}'"))),
            };
            header = Some(Header {
                n,
                directed,
                weighted,
            });
            continue;
        };

        match fields[0] {
            "default" => {
                if !h.weighted {
                    return Err(parse_err(lineno, "'default' only applies to weighted games"));
                }
                if fields.len() != 2 {
                    return Err(parse_err(lineno, "expected 'default <weight>'"));
                }
                if default.is_some() {
                    return Err(parse_err(lineno, "duplicate 'default' directive"));
                }
                default = Some(parse_rat(fields[1]).map_err(|e| parse_err(lineno, e))?);
            }
            "subsidy" => {
                if fields.len() != 3 {
                    return Err(parse_err(lineno, "expected 'subsidy <player> <level>'"));
                }
                let player = parse_label(fields[1], h.n, lineno)?;
                let level: u64 = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad subsidy level '{}'", fields[2])))?;
                if level < 2 {
                    return Err(parse_err(lineno, "subsidy levels start at 2"));
                }
                if subsidies.insert(player, level).is_some() {
                    return Err(parse_err(lineno, format!("duplicate subsidy for player {}", player + 1)));
                }
            }
            _ => {
                let expected = if h.weighted { 3 } else { 2 };
                if fields.len() != expected {
                    return Err(parse_err(
                        lineno,
                        format!(
                            "expected '{}' on edge lines",
                            if h.weighted { "u v weight" } else { "u v" }
                        ),
                    ));
                }
                let u = parse_label(fields[0], h.n, lineno)?;
                let v = parse_label(fields[1], h.n, lineno)?;
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop at player {}", u + 1)));
                }
                let w = if h.weighted {
                    parse_rat(fields[2]).map_err(|e| parse_err(lineno, e))?
                } else {
                    Rat::from_integer(1)
                };
                let key = if h.directed {
                    (u, v)
                } else {
                    (u.min(v), u.max(v))
                };
                if seen.insert(key, ()).is_some() {
                    return Err(parse_err(
                        lineno,
                        format!("duplicate edge between players {} and {}", u + 1, v + 1),
                    ));
                }
                edges.push((u, v, w));
            }
        }
    }

    let Some(h) = header else {
        return Err(parse_err(1, "missing 'fhg' header"));
    };
    let default = default.unwrap_or_else(Rat::zero);
    let game = if h.directed {
        Game::weighted_directed(h.n, &edges, default)?
    } else {
        Game::weighted_symmetric(h.n, &edges, default)?
    };
    if !h.weighted && !game.is_simple() {
        unreachable!("simple files only carry unit edges");
    }
    if subsidies.is_empty() {
        Ok(ParsedGame::Plain(game))
    } else {
        Ok(ParsedGame::Supported(SupportedGame::new(game, subsidies)?))
    }
}

fn parse_label(field: &str, n: usize, lineno: usize) -> Result<usize> {
    let label: usize = field
        .parse()
        .map_err(|_| parse_err(lineno, format!("bad player label '{field}'")))?;
    if label == 0 || label > n {
        return Err(parse_err(
            lineno,
            format!("player label {label} outside 1..={n}"),
        ));
    }
    Ok(label - 1)
}

/// Serialises a game losslessly in canonical order.
pub fn serialize_game(game: &Game) -> String {
    serialize(game, &BTreeMap::new())
}

/// Serialises a subsidised game, appending its subsidy records.
pub fn serialize_supported_game(sg: &SupportedGame) -> String {
    serialize(sg.base(), sg.subsidies())
}

fn serialize(game: &Game, subsidies: &BTreeMap<usize, u64>) -> String {
    let n = game.player_count();
    let directed = !game.is_symmetric();
    let weighted = !game.is_simple();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "fhg {n} {} {}",
        if directed { "directed" } else { "undirected" },
        if weighted { "weighted" } else { "simple" },
    );
    // Most frequent off-diagonal value becomes the default directive.
    let mut counts: BTreeMap<Rat, usize> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && (directed || i < j) {
                *counts.entry(game.valuation(i, j).clone()).or_insert(0) += 1;
            }
        }
    }
    let default = if weighted {
        counts
            .iter()
            .max_by_key(|(_, &c)| c)
            .map(|(w, _)| w.clone())
            .unwrap_or_else(Rat::zero)
    } else {
        Rat::zero()
    };
    if weighted && !default.is_zero() {
        let _ = writeln!(out, "default {}", format_rat(&default));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || (!directed && j < i) {
                continue;
            }
            let w = game.valuation(i, j);
            if *w == default {
                continue;
            }
            if !weighted && w.is_zero() {
                continue;
            }
            if weighted {
                let _ = writeln!(out, "{} {} {}", i + 1, j + 1, format_rat(w));
            } else {
                let _ = writeln!(out, "{} {}", i + 1, j + 1);
            }
        }
    }
    for (&player, &level) in subsidies {
        let _ = writeln!(out, "subsidy {} {}", player + 1, level);
    }
    out
}

/// Parses a partition file against a known player count.
pub fn parse_partition(text: &str, players: usize) -> Result<Partition> {
    let mut coalitions: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut coalition = Vec::new();
        for field in line.split_whitespace() {
            coalition.push(parse_label(field, players, lineno)?);
        }
        coalitions.push(coalition);
    }
    Partition::new(players, coalitions).map_err(|e| parse_err(0, e.to_string()))
}

/// One coalition per line, members ascending, 1-indexed.
pub fn serialize_partition(partition: &Partition) -> String {
    let mut out = String::new();
    for c in partition.coalitions() {
        let labels: Vec<String> = c.iter().map(|&i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "{}", labels.join(" "));
    }
    out
}

/// Parses a grid-clique instance:
///
/// ```text
/// maxmin <rows> <cell-size>
/// 1 3                  # edges over the 2·rows·cell-size grid vertices
/// ```
///
/// Grid vertices are numbered cell-major: cell (row, column) owns labels
/// `((row−1)·2 + column−1)·m + 1 ..` for `m` = cell size.
pub fn parse_grid_clique(text: &str) -> Result<GridCliqueInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "maxmin" {
                    return Err(parse_err(lineno, "expected header 'maxmin <rows> <cell-size>'"));
                }
                let rows: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad row count"))?;
                let cell: usize = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad cell size"))?;
                header = Some((rows, cell));
            }
            Some((rows, cell)) => {
                if fields.len() != 2 {
                    return Err(parse_err(lineno, "expected 'u v' edge lines"));
                }
                let total = 2 * rows * cell;
                let u = parse_label(fields[0], total, lineno)?;
                let v = parse_label(fields[1], total, lineno)?;
                edges.push((u, v));
            }
        }
    }
    let Some((rows, cell)) = header else {
        return Err(parse_err(1, "missing 'maxmin' header"));
    };
    GridCliqueInstance::new(rows, cell, edges)
}
