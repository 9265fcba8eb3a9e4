//! Replay moves on a board, including a capture, and inspect chains.

use gonet::{Board, Color, Coord};

fn main() -> gonet::Result<()> {
    let mut board = Board::new();
    // A white stone in the corner, then black surrounds it.
    let moves = [
        (Color::Black, 2, 1),
        (Color::White, 1, 1),
        (Color::Black, 1, 2),
    ];
    for (color, h, v) in moves {
        let captured: Vec<String> = board
            .place_stone(color, Coord::new(h, v)?)?
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("{color:?} plays {h}:{v}, captures [{}]", captured.join(", "));
    }

    board.place_stone(Color::White, Coord::new(10, 10)?)?;
    board.place_stone(Color::White, Coord::new(10, 11)?)?;
    let chain = board.chain_liberties(Coord::new(10, 10)?)?;
    println!("white chain of {} stones has {} liberties", chain.stones.len(), chain.liberties);

    // Suicide is rejected and leaves the board untouched.
    let mut cornered = Board::new();
    cornered.place_stone(Color::Black, Coord::new(2, 1)?)?;
    cornered.place_stone(Color::Black, Coord::new(1, 2)?)?;
    match cornered.place_stone(Color::White, Coord::new(1, 1)?) {
        Ok(_) => println!("unexpected: suicide accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
