//! Reading go game records in the Smart Game Format.
//!
//! Only the subset needed to replay a game is interpreted: board size, setup
//! stones (`AB`/`AW`) and moves (`B`/`W`). Every other root property is kept
//! verbatim in [`GameRecord::metadata`]. Variations are parsed for
//! well-formedness and then dropped; the main line is the first child at
//! every branch.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coord::{Color, Coord, BOARD_SIZE};
use crate::error::{Error, Result};

/// One played move. `at == None` is a pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveAction {
    pub color: Color,
    pub at: Option<Coord>,
}

impl MoveAction {
    pub fn play(color: Color, at: Coord) -> MoveAction {
        MoveAction { color, at: Some(at) }
    }

    pub fn pass(color: Color) -> MoveAction {
        MoveAction { color, at: None }
    }

    pub fn is_pass(&self) -> bool {
        self.at.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameRecord {
    /// `<source>#<index in collection>`.
    pub id: String,
    pub board_size: u8,
    pub setup_black: Vec<Coord>,
    pub setup_white: Vec<Coord>,
    pub moves: Vec<MoveAction>,
    /// Root-node properties other than `SZ`, `AB`, `AW`, `B`, `W`, unescaped.
    pub metadata: BTreeMap<String, Vec<String>>,
}

impl GameRecord {
    /// First value of a metadata property, e.g. `meta("PB")`.
    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata.get(key).and_then(|v| v.first()).map(String::as_str)
    }

    /// Minimal SGF for the main line of this record. Parsing the output
    /// yields an equal record (given the same source name and index).
    pub fn to_sgf(&self) -> String {
        let mut out = String::from("(;");
        out.push_str(&format!("SZ[{}]", self.board_size));
        for (key, values) in &self.metadata {
            out.push_str(key);
            for value in values {
                out.push('[');
                out.push_str(&escape(value));
                out.push(']');
            }
        }
        for (key, stones) in [("AB", &self.setup_black), ("AW", &self.setup_white)] {
            if stones.is_empty() {
                continue;
            }
            out.push_str(key);
            for &c in stones {
                out.push('[');
                out.push_str(&encode_point(c));
                out.push(']');
            }
        }
        for m in &self.moves {
            out.push(';');
            out.push(match m.color {
                Color::Black => 'B',
                Color::White => 'W',
            });
            out.push('[');
            if let Some(c) = m.at {
                out.push_str(&encode_point(c));
            }
            out.push(']');
        }
        out.push(')');
        out
    }
}

fn escape(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for ch in value.chars() {
        if ch == '\\' || ch == ']' {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

fn encode_point(c: Coord) -> String {
    let letter = |x: u8| (b'a' + x - 1) as char;
    [letter(c.h()), letter(c.v())].iter().collect()
}

/// Parse a collection held in memory; game ids are `<memory>#i`.
pub fn parse_sgf(text: &str) -> Result<Vec<GameRecord>> {
    parse_sgf_named(text, "<memory>")
}

/// Parse a collection, naming each game `<source>#<index>`.
pub fn parse_sgf_named(text: &str, source: &str) -> Result<Vec<GameRecord>> {
    let trees = Parser::new(text).collection()?;
    trees
        .into_iter()
        .enumerate()
        .map(|(i, nodes)| build_record(format!("{source}#{i}"), nodes))
        .collect()
}

type Property = (String, Vec<RawValue>);
type Node = Vec<Property>;

/// A property value as it appears between the brackets, escapes intact.
#[derive(Debug)]
struct RawValue {
    text: String,
}

impl RawValue {
    fn unescaped(&self) -> String {
        let mut out = String::with_capacity(self.text.len());
        let mut chars = self.text.chars().peekable();
        while let Some(ch) = chars.next() {
            if ch != '\\' {
                out.push(ch);
                continue;
            }
            match chars.next() {
                // soft line break
                Some('\n') => {
                    if chars.peek() == Some(&'\r') {
                        chars.next();
                    }
                }
                Some('\r') => {
                    if chars.peek() == Some(&'\n') {
                        chars.next();
                    }
                }
                Some(other) => out.push(other),
                None => {}
            }
        }
        out
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let text = text.strip_prefix('\u{feff}').unwrap_or(text);
        Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => self.error(format!("expected `{}`, found `{}`", byte as char, b as char)),
            None => self.error(format!("expected `{}`, found end of input", byte as char)),
        }
    }

    fn collection(&mut self) -> Result<Vec<Vec<Node>>> {
        let mut trees = Vec::new();
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            trees.push(self.game_tree()?);
        }
        if trees.is_empty() {
            return self.error("no game tree in input");
        }
        Ok(trees)
    }

    /// Returns the main line of the tree.
    fn game_tree(&mut self) -> Result<Vec<Node>> {
        self.expect(b'(')?;
        let mut main_line = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b';') {
            return self.error("game tree must start with a node");
        }
        while {
            self.skip_ws();
            self.peek() == Some(b';')
        } {
            self.pos += 1;
            main_line.push(self.node()?);
        }
        let mut first_child = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'(') => {
                    let child = self.game_tree()?;
                    if first_child {
                        main_line.extend(child);
                        first_child = false;
                    }
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(main_line);
                }
                Some(b) => return self.error(format!("unexpected `{}` in game tree", b as char)),
                None => return self.error("unterminated game tree"),
            }
        }
    }

    fn node(&mut self) -> Result<Node> {
        let mut props = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_alphabetic() => props.push(self.property()?),
                _ => return Ok(props),
            }
        }
    }

    fn property(&mut self) -> Result<Property> {
        // Old FF[3] files mix lowercase letters into identifiers ("AddBlack");
        // only the uppercase letters are significant.
        let mut ident = String::new();
        while let Some(b) = self.peek().filter(u8::is_ascii_alphabetic) {
            if b.is_ascii_uppercase() {
                ident.push(b as char);
            }
            self.pos += 1;
        }
        if ident.is_empty() {
            return self.error("property identifier without uppercase letters");
        }
        let mut values = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() != Some(b'[') {
                break;
            }
            values.push(self.value()?);
        }
        if values.is_empty() {
            return self.error(format!("property {ident} has no value"));
        }
        Ok((ident, values))
    }

    fn value(&mut self) -> Result<RawValue> {
        let open = self.pos;
        self.pos += 1;
        let start = self.pos;
        while let Some(b) = self.peek() {
            match b {
                b'\\' => self.pos += 2,
                b']' => {
                    let text = self.text[start..self.pos].to_string();
                    self.pos += 1;
                    return Ok(RawValue { text });
                }
                _ => self.pos += 1,
            }
        }
        self.pos = open;
        self.error("unterminated property value")
    }
}

fn decode_point(raw: &str, game: &str) -> Result<Coord> {
    let invalid = || Error::InvalidCoordinate {
        value: raw.to_string(),
        game: Some(game.to_string()),
    };
    let bytes = raw.trim().as_bytes();
    if bytes.len() != 2 {
        return Err(invalid());
    }
    let axis = |b: u8| -> Option<u8> {
        let x = b.checked_sub(b'a')? + 1;
        (x <= BOARD_SIZE).then_some(x)
    };
    match (axis(bytes[0]), axis(bytes[1])) {
        (Some(h), Some(v)) => Coord::new(h, v).map_err(|_| invalid()),
        _ => Err(invalid()),
    }
}

/// Move value: empty or `tt` is a pass on 19x19.
fn decode_move(raw: &str, game: &str) -> Result<Option<Coord>> {
    let trimmed = raw.trim();
    if trimmed.is_empty() || trimmed == "tt" {
        Ok(None)
    } else {
        decode_point(trimmed, game).map(Some)
    }
}

/// Setup values may be single points or `aa:cc` rectangles.
fn decode_point_list(raw: &str, game: &str, out: &mut Vec<Coord>) -> Result<()> {
    match raw.split_once(':') {
        None => out.push(decode_point(raw, game)?),
        Some((a, b)) => {
            let (a, b) = (decode_point(a, game)?, decode_point(b, game)?);
            for v in a.v().min(b.v())..=a.v().max(b.v()) {
                for h in a.h().min(b.h())..=a.h().max(b.h()) {
                    out.push(Coord::new(h, v)?);
                }
            }
        }
    }
    Ok(())
}

fn build_record(id: String, nodes: Vec<Node>) -> Result<GameRecord> {
    let mut board_size = BOARD_SIZE;
    let mut setup_black = Vec::new();
    let mut setup_white = Vec::new();
    let mut moves = Vec::new();
    let mut metadata: BTreeMap<String, Vec<String>> = BTreeMap::new();

    for (node_index, node) in nodes.into_iter().enumerate() {
        for (ident, values) in node {
            match ident.as_str() {
                "SZ" => {
                    let raw = values[0].unescaped();
                    let size = raw.trim();
                    let ok = size == "19" || size.split_once(':').is_some_and(|(a, b)| a.trim() == "19" && b.trim() == "19");
                    if !ok {
                        return Err(Error::UnsupportedBoardSize {
                            game: id,
                            size: size.to_string(),
                        });
                    }
                    board_size = BOARD_SIZE;
                }
                "B" | "W" => {
                    let color = if ident == "B" { Color::Black } else { Color::White };
                    for value in &values {
                        moves.push(MoveAction {
                            color,
                            at: decode_move(&value.text, &id)?,
                        });
                    }
                }
                "AB" | "AW" | "AE" => {
                    if !moves.is_empty() {
                        return Err(Error::Unsupported {
                            game: id,
                            what: format!("setup property {ident} after the first move"),
                        });
                    }
                    let target = match ident.as_str() {
                        "AB" => &mut setup_black,
                        "AW" => &mut setup_white,
                        _ => {
                            if values.iter().any(|v| !v.text.trim().is_empty()) {
                                return Err(Error::Unsupported {
                                    game: id,
                                    what: "AE (remove stones) in setup".to_string(),
                                });
                            }
                            continue;
                        }
                    };
                    for value in &values {
                        decode_point_list(&value.text, &id, target)?;
                    }
                }
                _ if node_index == 0 => {
                    metadata
                        .entry(ident)
                        .or_default()
                        .extend(values.iter().map(RawValue::unescaped));
                }
                _ => {}
            }
        }
    }

    let mut seen = std::collections::HashSet::new();
    for c in setup_black.iter().chain(&setup_white) {
        if !seen.insert(*c) {
            return Err(Error::Unsupported {
                game: id,
                what: format!("setup point {c} listed twice"),
            });
        }
    }

    Ok(GameRecord {
        id,
        board_size,
        setup_black,
        setup_white,
        moves,
        metadata,
    })
}

/// Games loaded from one file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSummary {
    pub path: PathBuf,
    pub games: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub games: Vec<GameRecord>,
    pub sources: Vec<SourceSummary>,
    /// Files skipped in non-strict mode, with the reason.
    pub warnings: Vec<String>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.games.len()
    }

    pub fn is_empty(&self) -> bool {
        self.games.is_empty()
    }
}

/// Read a file as UTF-8, falling back to Latin-1 so that legacy metadata
/// never blocks parsing.
pub fn read_text(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(match String::from_utf8(bytes) {
        Ok(s) => s,
        Err(e) => e.into_bytes().into_iter().map(char::from).collect(),
    })
}

fn collect_sgf_files(path: &Path, out: &mut Vec<PathBuf>) -> Result<()> {
    if path.is_dir() {
        let entries = fs::read_dir(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        for entry in entries {
            let entry = entry.map_err(|source| Error::Io {
                path: path.to_path_buf(),
                source,
            })?;
            let p = entry.path();
            if p.is_dir() {
                collect_sgf_files(&p, out)?;
            } else if p
                .extension()
                .is_some_and(|e| e.eq_ignore_ascii_case("sgf"))
            {
                out.push(p);
            }
        }
    } else {
        out.push(path.to_path_buf());
    }
    Ok(())
}

/// Load every game from the given files and directories (directories are
/// searched recursively for `*.sgf`). Games come out in sorted-path order,
/// then in-file order.
///
/// In non-strict mode a file that cannot be read or parsed is skipped and a
/// warning recorded; in strict mode the first such file aborts the load.
pub fn load_corpus<P: AsRef<Path>>(paths: &[P], strict: bool) -> Result<Corpus> {
    let mut files = Vec::new();
    for p in paths {
        collect_sgf_files(p.as_ref(), &mut files)?;
    }
    files.sort();
    files.dedup();

    let parsed: Vec<(PathBuf, Result<Vec<GameRecord>>)> = files
        .into_par_iter()
        .map(|path| {
            let games = read_text(&path)
                .and_then(|text| parse_sgf_named(&text, &path.display().to_string()));
            (path, games)
        })
        .collect();

    let mut corpus = Corpus::default();
    for (path, games) in parsed {
        match games {
            Ok(games) => {
                corpus.sources.push(SourceSummary {
                    path,
                    games: games.len(),
                });
                corpus.games.extend(games);
            }
            Err(e) if strict => {
                return Err(Error::File {
                    path,
                    source: Box::new(e),
                })
            }
            Err(e) => corpus.warnings.push(format!("skipping {}: {e}", path.display())),
        }
    }
    Ok(corpus)
}
