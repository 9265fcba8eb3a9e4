use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Side length of the only supported board.
pub const BOARD_SIZE: u8 = 19;

/// Number of intersections on the board.
pub const BOARD_POINTS: usize = BOARD_SIZE as usize * BOARD_SIZE as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// An intersection, 1-based: `h` is the column, `v` the row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coord {
    h: u8,
    v: u8,
}

impl Coord {
    pub fn new(h: u8, v: u8) -> Result<Coord> {
        if (1..=BOARD_SIZE).contains(&h) && (1..=BOARD_SIZE).contains(&v) {
            Ok(Coord { h, v })
        } else {
            Err(Error::InvalidCoordinate {
                value: format!("({h},{v})"),
                game: None,
            })
        }
    }

    /// Signed variant used when walking neighbors; `None` off the board.
    pub fn checked(h: i32, v: i32) -> Option<Coord> {
        let range = 1..=BOARD_SIZE as i32;
        (range.contains(&h) && range.contains(&v)).then(|| Coord {
            h: h as u8,
            v: v as u8,
        })
    }

    pub fn h(self) -> u8 {
        self.h
    }

    pub fn v(self) -> u8 {
        self.v
    }

    /// Row-major index into a 19x19 grid.
    pub fn index(self) -> usize {
        (self.v as usize - 1) * BOARD_SIZE as usize + (self.h as usize - 1)
    }

    pub fn from_index(index: usize) -> Coord {
        debug_assert!(index < BOARD_POINTS);
        Coord {
            h: (index % BOARD_SIZE as usize) as u8 + 1,
            v: (index / BOARD_SIZE as usize) as u8 + 1,
        }
    }

    /// The up-to-four orthogonal neighbors that lie on the board.
    pub fn adjacent(self) -> impl Iterator<Item = Coord> {
        let (h, v) = (self.h as i32, self.v as i32);
        [(h - 1, v), (h + 1, v), (h, v - 1), (h, v + 1)]
            .into_iter()
            .filter_map(|(h, v)| Coord::checked(h, v))
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.h, self.v)
    }
}

/// Proximity metric linking moves: the larger of the two coordinate gaps.
pub fn chebyshev(a: Coord, b: Coord) -> u32 {
    let dh = (a.h as i32 - b.h as i32).unsigned_abs();
    let dv = (a.v as i32 - b.v as i32).unsigned_abs();
    dh.max(dv)
}
