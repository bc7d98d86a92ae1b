// Brute-force oracles confirm the structural properties of product games
// and pinpoint violations in games that lack them. Every failed check
// returns a witness that can be replayed against the game.

use cpg::{
    check_convex, check_monotone, check_superadditive, find_dummies, parse_table, CheckResult,
    CpGame, GameView, Limits,
};

fn report<V: GameView>(name: &str, view: &V, limits: &Limits) -> cpg::Result<()> {
    println!("{name}:");
    for (label, result) in [
        ("monotone", check_monotone(view, limits)?),
        ("superadditive", check_superadditive(view, limits)?),
        ("convex", check_convex(view, limits)?),
    ] {
        match result {
            CheckResult::Pass => println!("  {label}: pass"),
            CheckResult::Violated(w) => {
                assert!(w.reproduces(view));
                println!("  {label}: violated by {w}");
            }
        }
    }
    let dummies = find_dummies(view, limits)?;
    println!("  dummies: {dummies}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();

    // every product game passes all four checks
    report("product game (2,3,5)", &CpGame::new([2u32, 3, 5])?, &limits)?;

    // two players worth 1 alone and 1 together: fails convexity, since
    // joining forces adds nothing but splitting apart doubles the total
    let unit = parse_table("tug 1\n2\n0 0\n1 1\n2 1\n3 1\n")?;
    report("unit table", &unit, &limits)?;

    // a table whose value drops when a player joins
    let dropping = parse_table("tug 1\n2\n0 0\n1 2\n2 1\n3 1\n")?;
    report("dropping table", &dropping, &limits)?;

    // a player that never adds anything is a dummy
    let null_player = parse_table("tug 1\n2\n0 0\n1 3\n2 0\n3 3\n")?;
    report("null-player table", &null_player, &limits)?;
    Ok(())
}
