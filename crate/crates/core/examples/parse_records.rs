//! Parse a small SGF collection and print what each record holds.

use gonet::parse_sgf;

const GAMES: &str = "
(;GM[1]FF[4]SZ[19]PB[Honinbo Shusaku]PW[Gennan Inseki]RE[B+2]
 ;B[qd];W[dc];B[pq];W[oc];B[cp];W[qo];B[pe])
(;GM[1]SZ[19]HA[2]AB[pd][dp]PB[Black]PW[White]
 ;W[qp];B[oq];W[dd];B[];W[tt])
";

fn main() -> gonet::Result<()> {
    for game in parse_sgf(GAMES)? {
        let passes = game.moves.iter().filter(|m| m.is_pass()).count();
        println!(
            "{}: {} vs {}, {} setup stones, {} moves ({} passes)",
            game.id,
            game.meta("PB").unwrap_or("?"),
            game.meta("PW").unwrap_or("?"),
            game.setup_black.len() + game.setup_white.len(),
            game.moves.len(),
            passes,
        );
        println!("  re-serialized: {}", game.to_sgf());
    }
    Ok(())
}
