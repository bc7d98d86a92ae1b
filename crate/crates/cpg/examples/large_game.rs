// The one-pass construction stays fast when the numbers get astronomical.
// Ten thousand players with weight 2 give a grand value of 2^10000, about
// three thousand decimal digits, and the whole payoff vector still falls
// out of a single sweep.

use cpg::{marginal_vector, CpGame, Permutation};
use num_bigint::BigUint;
use num_traits::Zero;
use std::time::Instant;

fn main() -> cpg::Result<()> {
    let n = 10_000usize;
    let game = CpGame::new(vec![2u64; n])?;
    let pi = Permutation::identity(n);

    let started = Instant::now();
    let vector = marginal_vector(&game, &pi)?;
    println!("marginal vector for n={n} in {:?}", started.elapsed());

    let grand = game.grand_value();
    println!("grand value has {} decimal digits", grand.to_string().len());
    println!("first payoff: {}", vector.payoffs()[0]);
    println!(
        "last payoff: 2^{} ({} digits)",
        n - 1,
        vector.payoffs()[n - 1].numer().to_string().len()
    );

    // efficiency is exact: the integer payoffs sum to the grand value
    let mut sum = BigUint::zero();
    for payoff in vector.payoffs() {
        sum += payoff.numer().to_biguint().expect("payoffs are positive");
    }
    assert_eq!(sum, grand);
    println!("payoffs sum exactly to the grand value");
    Ok(())
}
