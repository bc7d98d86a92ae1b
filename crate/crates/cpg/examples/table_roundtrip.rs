// Materialize a product game as an explicit table, write it out in the
// text format, and read it back. Rendering is canonical: masks ascend, so
// render(parse(render(x))) is byte-stable.

use cpg::{parse_game, parse_table, render_game, render_table, to_table, CpGame, Limits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let game = CpGame::new([2u32, 3])?;
    let table = to_table(&game, &Limits::default())?;

    let text = render_table(&table);
    println!("table of (2,3) in `tug 1` text:\n{text}");
    assert_eq!(parse_table(&text)?, table);

    let game_text = render_game(&game);
    println!("the game itself in `cpg 1` text:\n{game_text}");
    assert_eq!(parse_game(&game_text)?, game);

    // parsing accepts entries in any order and comment lines anywhere
    let shuffled = "# same table, scrambled\ntug 1\n2\n3 6\n0 0\n2 3\n1 2\n";
    assert_eq!(parse_table(shuffled)?, table);
    println!("scrambled text parses to the same table");
    Ok(())
}
