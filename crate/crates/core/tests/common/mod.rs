#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::PathBuf;

use gonet::{chebyshev, extract_events, Board, CellState, ClassTable, Coord, GameEvents, GameRecord, RelativePattern};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

pub fn fixture_games() -> Vec<GameRecord> {
    let text = std::fs::read_to_string(data_path("data/fixture.sgf")).unwrap();
    gonet::parse_sgf(&text).unwrap()
}

pub fn events_of(games: &[GameRecord]) -> Vec<GameEvents> {
    games
        .iter()
        .map(|g| extract_events(g, ClassTable::global()).unwrap())
        .collect()
}

/// Class id of a diagram written row by row, e.g. `".XO .+. .X."`.
pub fn class_of(diagram: &str) -> u16 {
    let p: RelativePattern = diagram.parse().unwrap();
    ClassTable::global().class_index(&p.canonicalize()).unwrap()
}

/// Sum hand-listed `(from, to)` diagrams into an edge table.
pub fn edge_table(rows: &[(&str, &str)]) -> BTreeMap<(u16, u16), u64> {
    let mut out = BTreeMap::new();
    for (a, b) in rows {
        *out.entry((class_of(a), class_of(b))).or_insert(0) += 1;
    }
    out
}

pub const EMPTY: &str = "... .+. ...";

/// Hand-computed links of the three fixture games at d = 4.
pub fn fixture_edges_d4() -> BTreeMap<(u16, u16), u64> {
    edge_table(&[
        (EMPTY, "... O+. ..."),
        ("... O+. ...", EMPTY),
        (".XO .+. .X.", EMPTY),
        ("X.. .+X ...", "... O+. .OO"),
        ("... O+. .OO", "OXO O+X O.."),
        ("### #+. #..", "### O+. ..."),
        ("### O+. ...", EMPTY),
        (EMPTY, "#OX #+. #.."),
        ("#OX #+. #..", EMPTY),
        (EMPTY, ".X. X+. ..O"),
        (".X. X+. ..O", "OO. .+X ..."),
        ("..# .+# ..#", "... .+O ..."),
        (EMPTY, EMPTY),
        (EMPTY, ".O. .+. ..."),
        ("... X+. ...", "OO. .+. ..."),
        ("OO. .+. ...", ".XX .+O ..."),
        ("X.. O+. ...", "... O+. XO."),
    ])
}

/// Hand-computed links of the three fixture games at d = 2.
pub fn fixture_edges_d2() -> BTreeMap<(u16, u16), u64> {
    edge_table(&[
        (EMPTY, "... O+. ..."),
        ("... O+. ...", EMPTY),
        ("X.. .+X ...", "... O+. .OO"),
        ("... O+. .OO", "OXO O+X O.."),
        ("### #+. #..", "### O+. ..."),
        ("#OX #+. #..", EMPTY),
        (EMPTY, ".X. X+. ..O"),
        (".X. X+. ..O", "OO. .+X ..."),
        ("..# .+# ..#", "... .+O ..."),
        (EMPTY, ".O. .+. ..."),
        ("... X+. ...", "OO. .+. ..."),
        ("OO. .+. ...", ".XX .+O ..."),
        ("X.. O+. ...", "... O+. XO."),
    ])
}

/// Links counted straight from the records: consecutive entries of the move
/// list, both stone moves, within distance `d`. Class ids come from the
/// events, matched to moves by position among the stone moves.
pub fn brute_force_links(games: &[GameRecord], events: &[GameEvents], d: u32) -> BTreeMap<(u16, u16), u64> {
    let mut out = BTreeMap::new();
    for (g, ev) in games.iter().zip(events) {
        let mut class_at_ply = vec![None; g.moves.len()];
        let mut k = 0;
        for (ply, m) in g.moves.iter().enumerate() {
            if m.at.is_some() {
                class_at_ply[ply] = Some(ev.events[k].class_id);
                k += 1;
            }
        }
        for ply in 1..g.moves.len() {
            let (Some(a), Some(b)) = (g.moves[ply - 1].at, g.moves[ply].at) else {
                continue;
            };
            if chebyshev(a, b) <= d {
                let key = (class_at_ply[ply - 1].unwrap(), class_at_ply[ply].unwrap());
                *out.entry(key).or_insert(0) += 1;
            }
        }
    }
    out
}

pub const N: usize = 19;

/// Plain 2D grid, 0-based, for the oracle.
pub type Grid = [[CellState; N]; N];

pub fn to_grid(board: &Board) -> Grid {
    let mut g = [[CellState::Empty; N]; N];
    for (row, line) in g.iter_mut().enumerate() {
        for (col, cell) in line.iter_mut().enumerate() {
            *cell = board.get(Coord::new(col as u8 + 1, row as u8 + 1).unwrap());
        }
    }
    g
}

/// Breadth-first component labelling over the grid.
pub fn component(g: &Grid, start: (usize, usize)) -> (BTreeSet<(usize, usize)>, usize) {
    let color = g[start.0][start.1];
    let mut stones = BTreeSet::from([start]);
    let mut libs = BTreeSet::new();
    let mut queue = VecDeque::from([start]);
    while let Some((r, c)) = queue.pop_front() {
        let mut nbrs = Vec::new();
        if r > 0 {
            nbrs.push((r - 1, c));
        }
        if r + 1 < N {
            nbrs.push((r + 1, c));
        }
        if c > 0 {
            nbrs.push((r, c - 1));
        }
        if c + 1 < N {
            nbrs.push((r, c + 1));
        }
        for n in nbrs {
            let s = g[n.0][n.1];
            if s == color && stones.insert(n) {
                queue.push_back(n);
            } else if s == CellState::Empty {
                libs.insert(n);
            }
        }
    }
    (stones, libs.len())
}

/// A window as three strings over `. X O #`, transformed by explicit
/// rotations and reflections of a character grid.
pub type Window = [[char; 3]; 3];

fn rotate(g: &Window) -> Window {
    let mut out = [[' '; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            out[c][2 - r] = g[r][c];
        }
    }
    out
}

fn mirror(g: &Window) -> Window {
    let mut out = *g;
    for row in &mut out {
        row.reverse();
    }
    out
}

pub fn grid_key(g: &Window) -> String {
    g.iter().flatten().collect()
}

pub fn canonical_key(g: &Window) -> String {
    let mut best = grid_key(g);
    let mut cur = *g;
    for _ in 0..4 {
        cur = rotate(&cur);
        best = best.min(grid_key(&cur)).min(grid_key(&mirror(&cur)));
    }
    best
}

/// Every window that occurs somewhere on a 19x19 board, read off the board
/// positions themselves.
pub fn oracle_classes() -> BTreeMap<String, (usize, Vec<Window>)> {
    let mut offsets = BTreeSet::new();
    for v in 1..=19i32 {
        for h in 1..=19i32 {
            let off: Vec<bool> = (0..9)
                .map(|i| {
                    let (dv, dh) = (i / 3 - 1, i % 3 - 1);
                    !(1..=19).contains(&(h + dh)) || !(1..=19).contains(&(v + dv))
                })
                .collect();
            offsets.insert(off);
        }
    }
    assert_eq!(offsets.len(), 9);
    let mut classes: BTreeMap<String, (usize, Vec<Window>)> = BTreeMap::new();
    for off in offsets {
        let free: Vec<usize> = (0..9).filter(|&i| i != 4 && !off[i]).collect();
        for mut code in 0..3usize.pow(free.len() as u32) {
            let mut g = [['.'; 3]; 3];
            for i in 0..9 {
                if off[i] {
                    g[i / 3][i % 3] = '#';
                }
            }
            for &i in &free {
                g[i / 3][i % 3] = ['.', 'X', 'O'][code % 3];
                code /= 3;
            }
            let n_off = off.iter().filter(|&&o| o).count();
            classes.entry(canonical_key(&g)).or_insert((n_off, Vec::new())).1.push(g);
        }
    }
    classes
}
