//! Go game records as a complex network.
//!
//! Each stone move is classified by the 3x3 window around the point where it
//! is played (1107 classes up to symmetry and color swap), consecutive
//! nearby moves are linked into a weighted directed network, and the network
//! is analysed with frequency statistics and Google matrix spectra.
//!
//! The pipeline, module by module:
//!
//! - [`sgf`]: read game records;
//! - [`board`]: replay them with captures;
//! - [`plaquette`]: classify the window around each move;
//! - [`network`]: link consecutive moves into a [`GoNetwork`];
//! - [`stats`]: Zipf curves, degree distributions, clustering;
//! - [`spectral`]: PageRank, CheiRank, HITS, the full complex spectrum;
//! - [`report`]: the command-line tool's file formats and subcommands;
//! - [`synthetic`]: seeded random legal games for demos and benchmarks.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod board;
pub mod coord;
pub mod error;
pub mod network;
pub mod plaquette;
pub mod report;
pub mod sgf;
pub mod spectral;
pub mod stats;
pub mod synthetic;

pub use board::{Board, CellState};
pub use coord::{chebyshev, Color, Coord};
pub use error::{Error, Result};
pub use network::{build_network, extract_events, shuffle_baseline, GameEvents, GoNetwork, MoveEvent, NetworkConfig};
pub use plaquette::{ClassTable, Geometry, PlaquetteClass, RelativePattern};
pub use sgf::{load_corpus, parse_sgf, Corpus, GameRecord, MoveAction};
