//! Enumerate the 3x3 move classes and classify a move on a live board.

use gonet::plaquette::relativize;
use gonet::{Board, ClassTable, Color, Coord, Geometry};

fn main() -> gonet::Result<()> {
    let table = ClassTable::global();
    println!("{}", table.summary());
    for geometry in [Geometry::Interior, Geometry::Edge, Geometry::Corner] {
        let biggest = table
            .classes()
            .iter()
            .filter(|c| c.geometry == geometry)
            .map(|c| c.orbit_size)
            .max()
            .unwrap_or(0);
        println!("{geometry:?}: {} classes, largest orbit {biggest}", table.count(geometry));
    }

    let mut board = Board::new();
    board.place_stone(Color::Black, Coord::new(4, 4)?)?;
    board.place_stone(Color::White, Coord::new(3, 3)?)?;
    let at = Coord::new(3, 4)?;
    let pattern = relativize(&board.neighborhood(at), Color::Black)?;
    let id = table.class_index(&pattern)?;
    println!("black at {at} is class {id}:");
    println!("{}", table.get(id).unwrap().render_ascii());
    Ok(())
}
