// The raw Banzhaf value averages a player's marginal contribution over the
// 2^(n-1) coalitions that exclude it. Unlike the Shapley value it weighs
// every coalition equally rather than every ordering, and the entries need
// not sum to the grand value.

use cpg::{banzhaf, shapley, CpGame, Limits};
use num_rational::BigRational;
use num_traits::Zero;

fn main() -> cpg::Result<()> {
    let game = CpGame::new([2u32, 3, 5])?;
    let limits = Limits::default();

    let raw = banzhaf(&game, &limits)?;
    let sum: BigRational = raw.iter().fold(BigRational::zero(), |acc, v| acc + v);
    println!("banzhaf of (2,3,5): {}", join(&raw));
    println!("entries sum to {sum}, grand value is {}", game.grand_value());

    let shap = shapley(&game, &limits)?;
    println!("shapley for comparison: {}", join(shap.payoffs()));

    // both values agree on symmetric games
    let twins = CpGame::new([2u32, 2])?;
    println!("banzhaf of (2,2): {}", join(&banzhaf(&twins, &limits)?));

    // with a single player the average is just the player's weight
    let solo = CpGame::new([2u32])?;
    println!("banzhaf of (2): {}", join(&banzhaf(&solo, &limits)?));
    Ok(())
}

fn join(values: &[BigRational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
