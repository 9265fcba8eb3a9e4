//! Board state during replay: placement, chain liberties, capture removal,
//! and raw 3x3 neighborhoods.
//!
//! Ko is not checked. Records are assumed legal, and repetition never
//! matters for the move network.

use std::fmt;

use crate::coord::{Color, Coord, BOARD_POINTS, BOARD_SIZE};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellState {
    Empty,
    Black,
    White,
    /// Only produced for coordinates outside the board.
    OffBoard,
}

impl From<Color> for CellState {
    fn from(c: Color) -> Self {
        match c {
            Color::Black => CellState::Black,
            Color::White => CellState::White,
        }
    }
}

/// Nine cells, row-major over rows `v-1, v, v+1` and columns `h-1, h, h+1`.
/// Index 4 is the center.
pub type RawPattern = [CellState; 9];

/// A chain and its liberty count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainInfo {
    pub stones: Vec<Coord>,
    pub liberties: usize,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Board {
    cells: [CellState; BOARD_POINTS],
}

impl Default for Board {
    fn default() -> Self {
        Board {
            cells: [CellState::Empty; BOARD_POINTS],
        }
    }
}

impl Board {
    pub fn new() -> Board {
        Board::default()
    }

    pub fn get(&self, at: Coord) -> CellState {
        self.cells[at.index()]
    }

    /// Like [`Board::get`] but total over signed coordinates.
    pub fn get_signed(&self, h: i32, v: i32) -> CellState {
        Coord::checked(h, v).map_or(CellState::OffBoard, |c| self.get(c))
    }

    /// Set a cell without any rules processing (setup stones).
    pub fn set(&mut self, at: Coord, state: CellState) {
        debug_assert_ne!(state, CellState::OffBoard);
        self.cells[at.index()] = state;
    }

    pub fn stones(&self) -> impl Iterator<Item = (Coord, Color)> + '_ {
        self.cells.iter().enumerate().filter_map(|(i, s)| {
            let color = match s {
                CellState::Black => Color::Black,
                CellState::White => Color::White,
                _ => return None,
            };
            Some((Coord::from_index(i), color))
        })
    }

    /// The maximal 4-connected same-color group containing `at`, and the
    /// number of distinct empty points adjacent to it.
    pub fn chain_liberties(&self, at: Coord) -> Result<ChainInfo> {
        let color = self.get(at);
        if !matches!(color, CellState::Black | CellState::White) {
            return Err(Error::Contract(format!("chain_liberties at empty point {at}")));
        }
        let mut seen = [false; BOARD_POINTS];
        let mut liberty_seen = [false; BOARD_POINTS];
        let mut stones = vec![at];
        let mut stack = vec![at];
        let mut liberties = 0;
        seen[at.index()] = true;
        while let Some(c) = stack.pop() {
            for n in c.adjacent() {
                let i = n.index();
                match self.cells[i] {
                    s if s == color && !seen[i] => {
                        seen[i] = true;
                        stones.push(n);
                        stack.push(n);
                    }
                    CellState::Empty if !liberty_seen[i] => {
                        liberty_seen[i] = true;
                        liberties += 1;
                    }
                    _ => {}
                }
            }
        }
        Ok(ChainInfo { stones, liberties })
    }

    /// Place a stone and resolve captures. Opposing chains left without
    /// liberties are removed first, then the placed stone's own chain is
    /// checked; a stone that would have no liberties is suicide and an error.
    /// On error the board is unchanged.
    pub fn place_stone(&mut self, color: Color, at: Coord) -> Result<Vec<Coord>> {
        if self.get(at) != CellState::Empty {
            return Err(Error::IllegalMove(format!("{at} is occupied")));
        }
        self.cells[at.index()] = color.into();

        let enemy: CellState = color.opposite().into();
        let mut captured = Vec::new();
        for n in at.adjacent() {
            if self.get(n) != enemy {
                continue;
            }
            let chain = self.chain_liberties(n)?;
            if chain.liberties == 0 {
                for &s in &chain.stones {
                    self.cells[s.index()] = CellState::Empty;
                }
                captured.extend(chain.stones);
            }
        }

        if captured.is_empty() && self.chain_liberties(at)?.liberties == 0 {
            self.cells[at.index()] = CellState::Empty;
            return Err(Error::IllegalMove(format!("suicide at {at}")));
        }
        captured.sort();
        Ok(captured)
    }

    /// The 3x3 window centered on `at`; off-board cells are `OffBoard`.
    pub fn neighborhood(&self, at: Coord) -> RawPattern {
        let (h, v) = (at.h() as i32, at.v() as i32);
        let mut out = [CellState::Empty; 9];
        for (i, cell) in out.iter_mut().enumerate() {
            let dv = i as i32 / 3 - 1;
            let dh = i as i32 % 3 - 1;
            *cell = self.get_signed(h + dh, v + dv);
        }
        out
    }
}

impl fmt::Debug for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 1..=BOARD_SIZE {
            for h in 1..=BOARD_SIZE {
                let ch = match self.get(Coord::new(h, v).unwrap()) {
                    CellState::Empty => '.',
                    CellState::Black => 'X',
                    CellState::White => 'O',
                    CellState::OffBoard => '#',
                };
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
