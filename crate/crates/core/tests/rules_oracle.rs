mod common;

use std::collections::BTreeSet;

use common::{component, to_grid, N};
use gonet::synthetic::random_game;
use gonet::{Board, CellState, Color, Coord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn chain_liberties_match_component_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let density = rng.gen_range(0.2..0.8);
        let mut board = Board::new();
        for i in 0..N * N {
            if rng.gen_bool(density) {
                let s = if rng.gen_bool(0.5) { CellState::Black } else { CellState::White };
                board.set(Coord::from_index(i), s);
            }
        }
        let grid = to_grid(&board);
        for (row, line) in grid.iter().enumerate() {
            for (col, &cell) in line.iter().enumerate() {
                let at = Coord::new(col as u8 + 1, row as u8 + 1).unwrap();
                if cell == CellState::Empty {
                    assert!(board.chain_liberties(at).is_err());
                    continue;
                }
                let info = board.chain_liberties(at).unwrap();
                let (stones, libs) = component(&grid, (row, col));
                let got: BTreeSet<(usize, usize)> = info
                    .stones
                    .iter()
                    .map(|c| (c.v() as usize - 1, c.h() as usize - 1))
                    .collect();
                assert_eq!(got.len(), info.stones.len(), "duplicate stones in chain");
                assert_eq!(got, stones);
                assert_eq!(info.liberties, libs);
            }
        }
    }
}

#[test]
fn no_chain_without_liberties_after_any_move() {
    for seed in 0..20 {
        let game = random_game(seed, 300, "g");
        let mut board = Board::new();
        for m in &game.moves {
            board.place_stone(m.color, m.at.unwrap()).unwrap();
            let grid = to_grid(&board);
            for (at, _) in board.stones() {
                let (_, libs) = component(&grid, (at.v() as usize - 1, at.h() as usize - 1));
                assert!(libs > 0, "dead chain left at {at}");
            }
        }
    }
}

fn c(h: u8, v: u8) -> Coord {
    Coord::new(h, v).unwrap()
}

#[test]
fn single_stone_corner_capture() {
    let mut b = Board::new();
    b.set(c(1, 1), CellState::White);
    b.set(c(2, 1), CellState::Black);
    assert_eq!(b.place_stone(Color::Black, c(1, 2)).unwrap(), [c(1, 1)]);
    assert_eq!(b.get(c(1, 1)), CellState::Empty);
}

#[test]
fn multi_chain_capture_removes_both_chains() {
    // Two white chains, {(1,1)} and {(3,1),(3,2)}, both reduced to the
    // single shared liberty (2,1), which black then fills.
    let mut b = Board::new();
    for p in [c(1, 1), c(3, 1), c(3, 2)] {
        b.set(p, CellState::White);
    }
    for p in [c(1, 2), c(2, 2), c(4, 1), c(4, 2), c(3, 3)] {
        b.set(p, CellState::Black);
    }
    let captured = b.place_stone(Color::Black, c(2, 1)).unwrap();
    assert_eq!(captured, [c(1, 1), c(3, 1), c(3, 2)]);
    assert_eq!(b.stones().filter(|(_, col)| *col == Color::White).count(), 0);
    assert_eq!(b.chain_liberties(c(2, 1)).unwrap().liberties, 5);
}
