// The Shapley value averages the marginal vectors of all n! player
// orderings. The averaging keeps it efficient and, because the game is
// convex, it stays inside the core.

use cpg::{core_check, marginal_vector, shapley, CpGame, Limits, Permutation};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn main() -> cpg::Result<()> {
    let game = CpGame::new([2u32, 3, 5])?;
    let limits = Limits::default();

    let value = shapley(&game, &limits)?;
    println!("shapley of (2,3,5): {}", join(value.payoffs()));
    println!("core check: {:?}", core_check(&game, &value, &limits)?);

    // the same numbers fall out of averaging the six marginal vectors
    let n = game.player_count();
    let mut sums = vec![BigRational::zero(); n];
    let mut count = 0u32;
    for order in (1..=n).permutations(n) {
        let vector = marginal_vector(&game, &Permutation::new(order)?)?;
        for (acc, p) in sums.iter_mut().zip(vector.payoffs()) {
            *acc += p;
        }
        count += 1;
    }
    let factor = BigRational::from_integer(BigInt::from(count));
    let averaged: Vec<BigRational> = sums.into_iter().map(|s| s / &factor).collect();
    println!("average of {count} marginal vectors: {}", join(&averaged));
    assert_eq!(value.payoffs(), &averaged[..]);

    // equal weights mean equal treatment
    let twins = CpGame::new([2u32, 2])?;
    println!(
        "shapley of (2,2): {}",
        join(shapley(&twins, &limits)?.payoffs())
    );

    // fractions appear as soon as n! stops dividing the sums
    let pair = CpGame::new([2u32, 3])?;
    println!(
        "shapley of (2,3): {}",
        join(shapley(&pair, &limits)?.payoffs())
    );
    Ok(())
}

fn join(values: &[BigRational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
