//! Replaying games into move events and accumulating the weighted directed
//! move network.
//!
//! Two stone moves `a` and `b` of one game are linked `class(a) -> class(b)`
//! when `b` is played immediately after `a` and the two points are within
//! Chebyshev distance `d`. A pass between them breaks the link, and setup
//! stones shape the board without producing events.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::board::{Board, CellState};
use crate::coord::{chebyshev, Color, Coord};
use crate::error::{Error, Result};
use crate::plaquette::{relativize, ClassTable};
use crate::sgf::GameRecord;

/// One stone move, classified by the window around the point before the
/// stone was placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveEvent {
    /// Position among the game's stone moves (passes not counted).
    pub index: u32,
    /// Position in the full move list, passes included. Two events are
    /// consecutive iff their plies differ by one.
    pub ply: u32,
    pub mover: Color,
    pub at: Coord,
    pub class_id: u16,
}

impl MoveEvent {
    /// Whether `next` directly follows `self` within distance `d`.
    pub fn links_to(&self, next: &MoveEvent, d: u32) -> bool {
        next.ply == self.ply + 1 && chebyshev(self.at, next.at) <= d
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameEvents {
    pub game_id: String,
    pub events: Vec<MoveEvent>,
}

impl GameEvents {
    /// Consecutive event pairs, regardless of distance.
    pub fn consecutive_pairs(&self) -> impl Iterator<Item = (&MoveEvent, &MoveEvent)> {
        self.events
            .windows(2)
            .filter(|w| w[1].ply == w[0].ply + 1)
            .map(|w| (&w[0], &w[1]))
    }
}

/// Replay a game and classify every stone move.
pub fn extract_events(game: &GameRecord, table: &ClassTable) -> Result<GameEvents> {
    let mut board = Board::new();
    for &c in &game.setup_black {
        board.set(c, CellState::Black);
    }
    for &c in &game.setup_white {
        board.set(c, CellState::White);
    }

    let replay_error = |ply: usize, reason: String| Error::Replay {
        game: game.id.clone(),
        move_number: ply + 1,
        reason,
    };

    let mut events = Vec::with_capacity(game.moves.len());
    for (ply, mv) in game.moves.iter().enumerate() {
        let Some(at) = mv.at else { continue };
        let raw = board.neighborhood(at);
        if raw[4] != CellState::Empty {
            return Err(replay_error(ply, format!("{at} is occupied")));
        }
        let class_id = table
            .class_index(&relativize(&raw, mv.color)?)
            .map_err(|e| replay_error(ply, e.to_string()))?;
        board
            .place_stone(mv.color, at)
            .map_err(|e| replay_error(ply, e.to_string()))?;
        events.push(MoveEvent {
            index: events.len() as u32,
            ply: ply as u32,
            mover: mv.color,
            at,
            class_id,
        });
    }
    Ok(GameEvents {
        game_id: game.id.clone(),
        events,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkConfig {
    /// Chebyshev link radius.
    pub d: u32,
}

impl NetworkConfig {
    pub fn new(d: u32) -> Result<NetworkConfig> {
        if d == 0 {
            return Err(Error::InvalidArgument("link radius d must be at least 1".into()));
        }
        Ok(NetworkConfig { d })
    }
}

impl Default for NetworkConfig {
    fn default() -> Self {
        NetworkConfig { d: 4 }
    }
}

/// Weighted directed graph over plaquette classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "NetworkData", try_from = "NetworkData")]
pub struct GoNetwork {
    pub config: NetworkConfig,
    pub n_games: u64,
    /// Occurrences of each class, indexed by class id.
    pub vertex_counts: Vec<u64>,
    /// `(from, to) -> weight`, weights always positive.
    pub edges: BTreeMap<(u16, u16), u64>,
}

impl GoNetwork {
    pub fn empty(n_vertices: usize, config: NetworkConfig) -> GoNetwork {
        GoNetwork {
            config,
            n_games: 0,
            vertex_counts: vec![0; n_vertices],
            edges: BTreeMap::new(),
        }
    }

    /// Build directly from explicit weighted edges; used for toy graphs.
    pub fn from_edges(n_vertices: usize, edges: &[(u16, u16, u64)]) -> GoNetwork {
        let mut net = GoNetwork::empty(n_vertices, NetworkConfig::default());
        for &(a, b, w) in edges {
            assert!((a as usize) < n_vertices && (b as usize) < n_vertices);
            if w > 0 {
                *net.edges.entry((a, b)).or_default() += w;
            }
        }
        net
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_counts.len()
    }

    pub fn add_game(&mut self, game: &GameEvents) {
        self.n_games += 1;
        for e in &game.events {
            self.vertex_counts[e.class_id as usize] += 1;
        }
        for w in game.events.windows(2) {
            if w[0].links_to(&w[1], self.config.d) {
                *self.edges.entry((w[0].class_id, w[1].class_id)).or_default() += 1;
            }
        }
    }

    /// Sum `other` into `self`.
    pub fn merge(&mut self, other: &GoNetwork) -> Result<()> {
        if self.config != other.config || self.n_vertices() != other.n_vertices() {
            return Err(Error::ConfigMismatch(format!(
                "d={} over {} vertices vs d={} over {} vertices",
                self.config.d,
                self.n_vertices(),
                other.config.d,
                other.n_vertices()
            )));
        }
        self.n_games += other.n_games;
        for (a, b) in self.vertex_counts.iter_mut().zip(&other.vertex_counts) {
            *a += b;
        }
        for (&k, &w) in &other.edges {
            *self.edges.entry(k).or_default() += w;
        }
        Ok(())
    }

    /// Every edge reversed, weights kept.
    pub fn transpose(&self) -> GoNetwork {
        GoNetwork {
            edges: self.edges.iter().map(|(&(a, b), &w)| ((b, a), w)).collect(),
            ..self.clone()
        }
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn total_moves(&self) -> u64 {
        self.vertex_counts.iter().sum()
    }

    /// Vertex ids by descending occurrence count, ties by ascending id.
    pub fn frequency_order(&self) -> Vec<u16> {
        let mut order: Vec<u16> = (0..self.n_vertices() as u16).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.vertex_counts[v as usize]), v));
        order
    }
}

pub fn build_network(games: &[GameEvents], n_vertices: usize, config: NetworkConfig) -> GoNetwork {
    let mut net = GoNetwork::empty(n_vertices, config);
    for g in games {
        net.add_game(g);
    }
    net
}

/// Same result as [`build_network`], accumulated in parallel.
pub fn build_network_par(
    games: &[GameEvents],
    n_vertices: usize,
    config: NetworkConfig,
) -> GoNetwork {
    games
        .par_chunks(64)
        .map(|chunk| build_network(chunk, n_vertices, config))
        .reduce(
            || GoNetwork::empty(n_vertices, config),
            |mut a, b| {
                a.merge(&b).expect("identical configuration");
                a
            },
        )
}

/// Sum networks sharing one configuration. An empty list is an error since
/// there is no configuration to report.
pub fn merge_networks(nets: &[GoNetwork]) -> Result<GoNetwork> {
    let (first, rest) = nets
        .split_first()
        .ok_or_else(|| Error::Empty("no networks to merge".into()))?;
    let mut out = first.clone();
    for n in rest {
        out.merge(n)?;
    }
    Ok(out)
}

/// Null model: permute the events of each game uniformly at random. Classes
/// and points travel together, and the events are renumbered `0..n` with
/// no passes, so every adjacent pair is consecutive.
pub fn shuffle_baseline(games: &[GameEvents], seed: u64) -> Vec<GameEvents> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    games
        .iter()
        .map(|g| {
            let mut events = g.events.clone();
            events.shuffle(&mut rng);
            for (i, e) in events.iter_mut().enumerate() {
                e.index = i as u32;
                e.ply = i as u32;
            }
            GameEvents {
                game_id: g.game_id.clone(),
                events,
            }
        })
        .collect()
}

/// On-disk layout: `{config: {d}, n_games, vertex_counts, edges: [[from, to, weight], ...]}`
/// with edges sorted by `(from, to)`.
#[derive(Serialize, Deserialize)]
struct NetworkData {
    config: NetworkConfig,
    n_games: u64,
    vertex_counts: Vec<u64>,
    edges: Vec<[u64; 3]>,
}

impl From<GoNetwork> for NetworkData {
    fn from(n: GoNetwork) -> Self {
        NetworkData {
            config: n.config,
            n_games: n.n_games,
            edges: n
                .edges
                .iter()
                .map(|(&(a, b), &w)| [a as u64, b as u64, w])
                .collect(),
            vertex_counts: n.vertex_counts,
        }
    }
}

impl TryFrom<NetworkData> for GoNetwork {
    type Error = String;

    fn try_from(d: NetworkData) -> std::result::Result<Self, String> {
        let n = d.vertex_counts.len();
        let mut edges = BTreeMap::new();
        for [a, b, w] in d.edges {
            if a as usize >= n || b as usize >= n {
                return Err(format!("edge {a}->{b} outside {n} vertices"));
            }
            if w == 0 {
                return Err(format!("edge {a}->{b} has zero weight"));
            }
            if edges.insert((a as u16, b as u16), w).is_some() {
                return Err(format!("edge {a}->{b} listed twice"));
            }
        }
        NetworkConfig::new(d.config.d).map_err(|e| e.to_string())?;
        Ok(GoNetwork {
            config: d.config,
            n_games: d.n_games,
            vertex_counts: d.vertex_counts,
            edges,
        })
    }
}
