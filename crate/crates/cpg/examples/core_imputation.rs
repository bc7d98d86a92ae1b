// Construct core imputations in one pass: walk the players in any order and
// pay each the amount by which it grows the running product. Convexity
// guarantees that no coalition can block any of these payoff vectors.

use cpg::{core_check, marginal_vector, CoreVerdict, CpGame, Limits, Permutation};
use itertools::Itertools;

fn main() -> cpg::Result<()> {
    let game = CpGame::new([2u32, 3, 5])?;
    let limits = Limits::default();

    for order in (1..=3usize).permutations(3) {
        let pi = Permutation::new(order)?;
        let vector = marginal_vector(&game, &pi)?;
        let verdict = core_check(&game, &vector, &limits)?;
        let payoffs = vector
            .payoffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        println!("{pi} pays ({payoffs}): {verdict:?}");
    }

    // a lopsided split is efficient but not stable: some coalition is paid
    // less than it could earn on its own
    let lopsided = cpg::parse_imputation("28 1 1", &game).expect("sums to 30");
    match core_check(&game, &lopsided, &limits)? {
        CoreVerdict::Blocked { witness, excess } => {
            println!("(28 1 1) is blocked by {witness}, which is short {excess}");
        }
        CoreVerdict::InCore => unreachable!(),
    }
    Ok(())
}
