//! Seeded random legal games, for benchmarks, tests and demos when no
//! corpus of real records is at hand.
//!
//! Moves alternate colors; most are played near the previous move so the
//! games have the local structure that makes the network interesting.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::board::{Board, CellState};
use crate::coord::{Color, Coord, BOARD_POINTS, BOARD_SIZE};
use crate::sgf::{GameRecord, MoveAction};

/// Probability that a move is drawn from the window around the previous one.
const LOCAL_BIAS: f64 = 0.75;
const LOCAL_RADIUS: i32 = 3;

/// A legal game of at most `n_moves` stone moves (fewer if the board runs
/// out of legal points), without passes or setup stones.
pub fn random_game(seed: u64, n_moves: usize, id: impl Into<String>) -> GameRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut board = Board::new();
    let mut moves = Vec::with_capacity(n_moves);
    let mut color = Color::Black;
    let mut last: Option<Coord> = None;

    while moves.len() < n_moves {
        let mut candidates: Vec<Coord> = match last {
            Some(p) if rng.gen_bool(LOCAL_BIAS) => {
                let mut near = Vec::new();
                for dv in -LOCAL_RADIUS..=LOCAL_RADIUS {
                    for dh in -LOCAL_RADIUS..=LOCAL_RADIUS {
                        if let Some(c) = Coord::checked(p.h() as i32 + dh, p.v() as i32 + dv) {
                            near.push(c);
                        }
                    }
                }
                near
            }
            _ => (0..BOARD_POINTS).map(Coord::from_index).collect(),
        };
        candidates.retain(|&c| board.get(c) == CellState::Empty);
        candidates.shuffle(&mut rng);
        let played = candidates
            .into_iter()
            .find(|&c| board.clone().place_stone(color, c).is_ok());
        let at = match played {
            Some(at) => at,
            None => {
                let any = (0..BOARD_POINTS)
                    .map(Coord::from_index)
                    .find(|&c| board.get(c) == CellState::Empty && board.clone().place_stone(color, c).is_ok());
                match any {
                    Some(at) => at,
                    None => break,
                }
            }
        };
        board
            .place_stone(color, at)
            .expect("move was checked on a copy");
        moves.push(MoveAction::play(color, at));
        last = Some(at);
        color = color.opposite();
    }

    GameRecord {
        id: id.into(),
        board_size: BOARD_SIZE,
        setup_black: Vec::new(),
        setup_white: Vec::new(),
        moves,
        metadata: Default::default(),
    }
}

/// `n_games` games seeded `seed, seed + 1, ...`.
pub fn random_corpus(seed: u64, n_games: usize, n_moves: usize) -> Vec<GameRecord> {
    (0..n_games as u64)
        .map(|i| random_game(seed.wrapping_add(i), n_moves, format!("synthetic#{i}")))
        .collect()
}
