// Convex combinations of marginal vectors sweep out the Weber set. For a
// convex game that set coincides with the core, so any mixture with
// nonnegative coefficients summing to 1 is a stable payoff.

use cpg::{
    core_check, parse_rational, weber_mix, CpGame, Error, Limits, Permutation,
};
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let game = CpGame::new([2u32, 3, 5])?;
    let limits = Limits::default();
    let forward = Permutation::new([1, 2, 3])?;
    let backward = Permutation::new([3, 2, 1])?;

    for (a, b) in [("1/2", "1/2"), ("1/3", "2/3"), ("1", "0")] {
        let mix = vec![
            (forward.clone(), parse_rational(a)?),
            (backward.clone(), parse_rational(b)?),
        ];
        let imp = weber_mix(&game, &mix)?;
        println!(
            "{a}*{forward} + {b}*{backward} = ({}) -> {:?}",
            join(imp.payoffs()),
            core_check(&game, &imp, &limits)?
        );
    }

    // coefficients must be nonnegative and sum to exactly 1
    let short = vec![(forward.clone(), parse_rational("1/2")?)];
    match weber_mix(&game, &short) {
        Err(Error::BadMixture) => println!("coefficients summing to 1/2: rejected"),
        other => panic!("expected BadMixture, got {other:?}"),
    }
    Ok(())
}

fn join(values: &[BigRational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
