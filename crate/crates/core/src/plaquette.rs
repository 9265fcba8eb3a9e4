//! Mover-relative 3x3 patterns ("plaquettes") and their equivalence classes.
//!
//! A pattern records, for the eight points around an empty intersection,
//! whether each holds a friendly stone, an enemy stone, nothing, or lies off
//! the board. Encoding colors relative to the player about to move folds the
//! black/white swap into the representation, so the only remaining
//! identification is the dihedral group of the square. Each class is
//! represented by the lexicographically smallest member of its orbit
//! (state order `Empty < Friend < Foe < OffBoard`, cells row-major), and
//! class ids follow the sorted order of those representatives.
//!
//! On a 19x19 board there are 954 interior, 135 edge and 18 corner classes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::board::{CellState, RawPattern};
use crate::coord::Color;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum RelativeCell {
    Empty = 0,
    Friend = 1,
    Foe = 2,
    OffBoard = 3,
}

impl RelativeCell {
    const ALL_STONE_STATES: [RelativeCell; 3] =
        [RelativeCell::Empty, RelativeCell::Friend, RelativeCell::Foe];

    fn letter(self) -> char {
        match self {
            RelativeCell::Empty => 'E',
            RelativeCell::Friend => 'F',
            RelativeCell::Foe => 'O',
            RelativeCell::OffBoard => '#',
        }
    }

    fn glyph(self) -> char {
        match self {
            RelativeCell::Empty => '.',
            RelativeCell::Friend => 'X',
            RelativeCell::Foe => 'O',
            RelativeCell::OffBoard => '#',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Interior,
    Edge,
    Corner,
}

/// Nine relative cells, row-major, center at index 4.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelativePattern {
    pub cells: [RelativeCell; 9],
}

/// Valid off-board footprints as bitmasks over cell indices.
const FOOTPRINTS: [(u16, Geometry); 9] = {
    const fn mask(cells: &[usize]) -> u16 {
        let mut m = 0;
        let mut i = 0;
        while i < cells.len() {
            m |= 1 << cells[i];
            i += 1;
        }
        m
    }
    [
        (0, Geometry::Interior),
        (mask(&[0, 1, 2]), Geometry::Edge),
        (mask(&[6, 7, 8]), Geometry::Edge),
        (mask(&[0, 3, 6]), Geometry::Edge),
        (mask(&[2, 5, 8]), Geometry::Edge),
        (mask(&[0, 1, 2, 3, 6]), Geometry::Corner),
        (mask(&[0, 1, 2, 5, 8]), Geometry::Corner),
        (mask(&[0, 3, 6, 7, 8]), Geometry::Corner),
        (mask(&[2, 5, 6, 7, 8]), Geometry::Corner),
    ]
};

/// The eight symmetries of the square as cell permutations: image cell `i`
/// takes its value from source cell `SYMMETRIES[g][i]`.
pub const SYMMETRIES: [[usize; 9]; 8] = {
    // (row, col) of the source cell for destination (r, c)
    const fn source(g: usize, r: usize, c: usize) -> usize {
        let (sr, sc) = match g {
            0 => (r, c),
            1 => (c, 2 - r),
            2 => (2 - r, 2 - c),
            3 => (2 - c, r),
            4 => (r, 2 - c),
            5 => (2 - r, c),
            6 => (c, r),
            _ => (2 - c, 2 - r),
        };
        sr * 3 + sc
    }
    let mut out = [[0; 9]; 8];
    let mut g = 0;
    while g < 8 {
        let mut i = 0;
        while i < 9 {
            out[g][i] = source(g, i / 3, i % 3);
            i += 1;
        }
        g += 1;
    }
    out
};

impl RelativePattern {
    pub const EMPTY_INTERIOR: RelativePattern = RelativePattern {
        cells: [RelativeCell::Empty; 9],
    };

    /// Base-4 code with cell 0 most significant, so numeric order equals
    /// lexicographic order of the cells.
    pub fn encode(&self) -> u32 {
        self.cells.iter().fold(0, |acc, &c| acc * 4 + c as u32)
    }

    pub fn decode(mut code: u32) -> RelativePattern {
        let mut cells = [RelativeCell::Empty; 9];
        for cell in cells.iter_mut().rev() {
            *cell = match code % 4 {
                0 => RelativeCell::Empty,
                1 => RelativeCell::Friend,
                2 => RelativeCell::Foe,
                _ => RelativeCell::OffBoard,
            };
            code /= 4;
        }
        RelativePattern { cells }
    }

    fn offboard_mask(&self) -> u16 {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == RelativeCell::OffBoard)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// `None` if the pattern cannot arise on a 19x19 board.
    pub fn geometry(&self) -> Option<Geometry> {
        if self.cells[4] != RelativeCell::Empty {
            return None;
        }
        let mask = self.offboard_mask();
        FOOTPRINTS
            .iter()
            .find(|(m, _)| *m == mask)
            .map(|&(_, g)| g)
    }

    pub fn is_valid(&self) -> bool {
        self.geometry().is_some()
    }

    /// Image under symmetry `g` (an index into [`SYMMETRIES`]).
    pub fn transform(&self, g: usize) -> RelativePattern {
        let perm = &SYMMETRIES[g];
        RelativePattern {
            cells: std::array::from_fn(|i| self.cells[perm[i]]),
        }
    }

    pub fn orbit(&self) -> impl Iterator<Item = RelativePattern> + '_ {
        (0..8).map(move |g| self.transform(g))
    }

    /// Smallest image under the eight symmetries.
    pub fn canonicalize(&self) -> RelativePattern {
        self.orbit().min_by_key(RelativePattern::encode).unwrap()
    }

    /// `E`/`F`/`O`/`#` per cell, row-major.
    pub fn letters(&self) -> String {
        self.cells.iter().map(|c| c.letter()).collect()
    }

    /// Three-line diagram: `+` marks the point being played, `X` a friendly
    /// stone, `O` an enemy stone, `.` an empty point, `#` off the board.
    pub fn render_ascii(&self) -> String {
        let mut out = String::with_capacity(11);
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 && i % 3 == 0 {
                out.push('\n');
            }
            out.push(if i == 4 { '+' } else { c.glyph() });
        }
        out
    }
}

impl fmt::Debug for RelativePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativePattern({})", self.letters())
    }
}

/// Accepts nine cells in either alphabet (`E F O #` or `. X O #`, with `+`
/// for the center); whitespace is ignored.
impl FromStr for RelativePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cells: Vec<RelativeCell> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'E' | '.' | '+' => Ok(RelativeCell::Empty),
                'F' | 'X' => Ok(RelativeCell::Friend),
                'O' => Ok(RelativeCell::Foe),
                '#' => Ok(RelativeCell::OffBoard),
                other => Err(Error::InvalidArgument(format!("bad pattern cell `{other}`"))),
            })
            .collect::<Result<_>>()?;
        let cells: [RelativeCell; 9] = cells
            .try_into()
            .map_err(|_| Error::InvalidArgument(format!("pattern `{s}` must have 9 cells")))?;
        Ok(RelativePattern { cells })
    }
}

/// Exchange black and white in a raw window.
pub fn swap_colors(raw: &RawPattern) -> RawPattern {
    raw.map(|c| match c {
        CellState::Black => CellState::White,
        CellState::White => CellState::Black,
        other => other,
    })
}

/// Re-express a raw window from the point of view of `mover`.
pub fn relativize(raw: &RawPattern, mover: Color) -> Result<RelativePattern> {
    if raw[4] != CellState::Empty {
        return Err(Error::Contract(format!(
            "relativize: center is {:?}, expected empty",
            raw[4]
        )));
    }
    let friend: CellState = mover.into();
    Ok(RelativePattern {
        cells: raw.map(|c| match c {
            CellState::Empty => RelativeCell::Empty,
            CellState::OffBoard => RelativeCell::OffBoard,
            c if c == friend => RelativeCell::Friend,
            _ => RelativeCell::Foe,
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaquetteClass {
    pub id: u16,
    #[serde(skip)]
    pub pattern: RelativePattern,
    pub geometry: Geometry,
    /// Number of distinct patterns (all board orientations) in the class.
    pub orbit_size: u8,
}

impl PlaquetteClass {
    pub fn render_ascii(&self) -> String {
        self.pattern.render_ascii()
    }
}

const NO_CLASS: u16 = u16::MAX;

/// The complete census of classes plus a direct lookup from any valid
/// pattern code to its class id.
pub struct ClassTable {
    classes: Vec<PlaquetteClass>,
    lookup: Vec<u16>,
}

impl fmt::Debug for ClassTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassTable")
            .field("classes", &self.classes.len())
            .finish()
    }
}

/// Every assignment of the stone states to the cells not fixed by `fixed`.
fn assignments(fixed: &[(usize, RelativeCell)]) -> Vec<RelativePattern> {
    let mut base = RelativePattern::EMPTY_INTERIOR;
    for &(i, c) in fixed {
        base.cells[i] = c;
    }
    let free: Vec<usize> = (0..9)
        .filter(|i| *i != 4 && !fixed.iter().any(|(f, _)| f == i))
        .collect();
    let mut out = Vec::with_capacity(3usize.pow(free.len() as u32));
    for mut code in 0..3usize.pow(free.len() as u32) {
        let mut p = base;
        for &i in &free {
            p.cells[i] = RelativeCell::ALL_STONE_STATES[code % 3];
            code /= 3;
        }
        out.push(p);
    }
    out
}

impl ClassTable {
    /// Exhaustive enumeration: interior windows, windows with the bottom row
    /// off the board, and windows with the bottom row and left column off
    /// the board; every other orientation collapses under canonicalization.
    pub fn enumerate() -> ClassTable {
        use RelativeCell::OffBoard as X;
        let mut patterns = assignments(&[]);
        patterns.extend(assignments(&[(6, X), (7, X), (8, X)]));
        patterns.extend(assignments(&[(0, X), (3, X), (6, X), (7, X), (8, X)]));

        let canonical: BTreeSet<u32> = patterns.iter().map(|p| p.canonicalize().encode()).collect();

        let mut lookup = vec![NO_CLASS; 1 << 18];
        let classes = canonical
            .into_iter()
            .enumerate()
            .map(|(id, code)| {
                let pattern = RelativePattern::decode(code);
                let images: BTreeSet<u32> = pattern.orbit().map(|p| p.encode()).collect();
                for &img in &images {
                    lookup[img as usize] = id as u16;
                }
                PlaquetteClass {
                    id: id as u16,
                    pattern,
                    geometry: pattern.geometry().expect("enumerated patterns are valid"),
                    orbit_size: images.len() as u8,
                }
            })
            .collect();
        ClassTable { classes, lookup }
    }

    /// Shared process-wide table.
    pub fn global() -> &'static ClassTable {
        static TABLE: OnceLock<ClassTable> = OnceLock::new();
        TABLE.get_or_init(ClassTable::enumerate)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[PlaquetteClass] {
        &self.classes
    }

    pub fn get(&self, id: u16) -> Option<&PlaquetteClass> {
        self.classes.get(id as usize)
    }

    pub fn count(&self, geometry: Geometry) -> usize {
        self.classes.iter().filter(|c| c.geometry == geometry).count()
    }

    pub fn class_index(&self, p: &RelativePattern) -> Result<u16> {
        match self.lookup[p.encode() as usize] {
            NO_CLASS => Err(Error::CorruptState(p.letters())),
            id => Ok(id),
        }
    }

    /// Census as JSON rows `{id, geometry, cells, orbit_size}`.
    pub fn census_json(&self, geometry: Option<Geometry>) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .classes
            .iter()
            .filter(|c| geometry.is_none_or(|g| c.geometry == g))
            .map(|c| {
                serde_json::json!({
                    "id": c.id,
                    "geometry": c.geometry,
                    "cells": c.pattern.letters(),
                    "orbit_size": c.orbit_size,
                })
            })
            .collect();
        serde_json::Value::Array(rows)
    }

    /// `"1107 classes (954 interior / 135 edge / 18 corner)"`.
    pub fn summary(&self) -> String {
        format!(
            "{} classes ({} interior / {} edge / {} corner)",
            self.len(),
            self.count(Geometry::Interior),
            self.count(Geometry::Edge),
            self.count(Geometry::Corner)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pat(s: &str) -> RelativePattern {
        s.parse().unwrap()
    }

    #[test]
    fn census() {
        let t = ClassTable::enumerate();
        assert_eq!(t.len(), 1107);
        assert_eq!(t.count(Geometry::Interior), 954);
        assert_eq!(t.count(Geometry::Edge), 135);
        assert_eq!(t.count(Geometry::Corner), 18);
        assert_eq!(t.summary(), "1107 classes (954 interior / 135 edge / 18 corner)");
    }

    #[test]
    fn orbit_sizes_cover_every_orientation() {
        let t = ClassTable::global();
        let total = |g| -> usize {
            t.classes().iter().filter(|c| c.geometry == g).map(|c| c.orbit_size as usize).sum()
        };
        assert_eq!(total(Geometry::Interior), 6561);
        assert_eq!(total(Geometry::Edge), 4 * 243);
        assert_eq!(total(Geometry::Corner), 4 * 27);
    }

    #[test]
    fn ids_sorted_by_canonical_code() {
        let t = ClassTable::global();
        for w in t.classes().windows(2) {
            assert!(w[0].pattern.encode() < w[1].pattern.encode());
        }
        for c in t.classes() {
            assert_eq!(c.pattern.canonicalize(), c.pattern);
        }
    }

    #[test]
    fn enumeration_is_reproducible() {
        let a = ClassTable::enumerate().census_json(None).to_string();
        let b = ClassTable::enumerate().census_json(None).to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_classes_differ_by_geometry() {
        let t = ClassTable::global();
        let interior = t.class_index(&RelativePattern::EMPTY_INTERIOR).unwrap();
        assert_eq!(interior, 0);
        let edge = t.class_index(&pat("... .+. ###")).unwrap();
        let corner = t.class_index(&pat("### #+. #..")).unwrap();
        assert_ne!(interior, edge);
        assert_ne!(edge, corner);
        assert_ne!(interior, corner);
        assert_eq!(t.get(edge).unwrap().geometry, Geometry::Edge);
        assert_eq!(t.get(corner).unwrap().geometry, Geometry::Corner);
    }

    #[test]
    fn corner_reflection() {
        // Friend right of the center; its diagonal mirror sits below the center.
        let p = pat("### #+X #..");
        let mirrored = pat("### #+. #X.");
        assert_eq!(p.transform(6), mirrored);
        assert_eq!(p.canonicalize(), mirrored.canonicalize());
    }

    #[test]
    fn rendering() {
        assert_eq!(RelativePattern::EMPTY_INTERIOR.render_ascii(), "...\n.+.\n...");
        let t = ClassTable::global();
        let corner = t.get(t.class_index(&pat("### #+. #..")).unwrap()).unwrap();
        let diagram = corner.render_ascii();
        assert_eq!(diagram.matches('#').count(), 5);
        assert_eq!(diagram.lines().nth(1).unwrap().chars().nth(1), Some('+'));
        let one_friend = pat("X.. .+. ...").canonicalize();
        assert_eq!(one_friend.render_ascii().matches('X').count(), 1);
    }

    #[test]
    fn relativize_examples() {
        use CellState::{Black as B, Empty as E, White as W};
        assert_eq!(
            relativize(&[E; 9], Color::Black).unwrap(),
            RelativePattern::EMPTY_INTERIOR
        );
        let raw = [B, E, E, E, E, E, E, E, W];
        let rel = relativize(&raw, Color::Black).unwrap();
        assert_eq!(rel.cells[0], RelativeCell::Friend);
        assert_eq!(rel.cells[8], RelativeCell::Foe);
        assert_eq!(relativize(&swap_colors(&raw), Color::White).unwrap(), rel);
        assert!(relativize(&[B; 9], Color::Black).is_err());
    }

    #[test]
    fn invalid_patterns_rejected() {
        let t = ClassTable::global();
        assert!(t.class_index(&pat("... .X. ...")).is_err());
        assert!(t.class_index(&pat("#.. .+. ...")).is_err());
        assert!(t.class_index(&pat("### .+. ###")).is_err());
    }

    fn valid_pattern() -> impl Strategy<Value = RelativePattern> {
        (0usize..FOOTPRINTS.len(), proptest::collection::vec(0usize..3, 9)).prop_map(|(fp, states)| {
            let mask = FOOTPRINTS[fp].0;
            RelativePattern {
                cells: std::array::from_fn(|i| {
                    if mask & (1 << i) != 0 {
                        RelativeCell::OffBoard
                    } else if i == 4 {
                        RelativeCell::Empty
                    } else {
                        RelativeCell::ALL_STONE_STATES[states[i]]
                    }
                }),
            }
        })
    }

    proptest! {
        #[test]
        fn canonical_is_idempotent_and_orbit_invariant(p in valid_pattern(), g in 0usize..8) {
            let c = p.canonicalize();
            prop_assert_eq!(c.canonicalize(), c);
            prop_assert_eq!(p.transform(g).canonicalize(), c);
            prop_assert!(c.encode() <= p.encode());
        }

        #[test]
        fn lookup_total_on_valid_patterns(p in valid_pattern()) {
            let t = ClassTable::global();
            let id = t.class_index(&p).unwrap();
            prop_assert!((id as usize) < 1107);
            prop_assert_eq!(t.class_index(&p.transform(2)).unwrap(), id);
            prop_assert_eq!(t.get(id).unwrap().pattern, p.canonicalize());
        }
    }
}
