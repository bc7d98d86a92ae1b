// Build a product game and query its characteristic function.

use cpg::{Coalition, CpGame, PlayerId};

fn main() -> cpg::Result<()> {
    let game = CpGame::new([2u32, 3, 5])?;
    println!("players: {}", game.player_count());
    for player in game.players() {
        println!("  weight of {player}: {}", game.weight_of(player)?);
    }

    // the value of a coalition is the product of its members' weights
    for members in [vec![], vec![1], vec![2, 3], vec![1, 2, 3]] {
        let c = Coalition::new(members)?;
        println!("v({c}) = {}", game.coalition_value(&c)?);
    }

    // appending a player multiplies the value; the gap is its marginal
    // contribution
    let duo = Coalition::new([1, 2])?;
    let third = PlayerId::new(3)?;
    println!(
        "adding {third} to {duo} is worth {}",
        game.marginal_contribution(&duo, third)?
    );
    println!(
        "adding {third} to ∅ is worth {}",
        game.marginal_contribution(&Coalition::empty(), third)?
    );

    // weights below 2 are rejected outright
    match CpGame::new([2, 1]) {
        Err(e) => println!("weight 1 rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
