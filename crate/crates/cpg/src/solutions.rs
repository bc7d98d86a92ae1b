//! Imputations, excesses, core membership, and the permutation-based core
//! construction, all in exact rational arithmetic.
//!
//! The central operation is [`marginal_vector`]: for any ordering of the
//! players it produces a payoff vector in a single multiplication pass, and
//! because product games are convex that vector is always a core imputation.
//! [`core_check`] verifies membership exhaustively, [`shapley`] and
//! [`banzhaf`] enumerate the classic values at desk scale, and [`weber_mix`]
//! forms convex combinations of marginal vectors.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::model::{mask_value_table, Coalition, CpGame, PlayerId};
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An ordering of all players: a bijection over 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    order: Vec<PlayerId>,
}

impl Permutation {
    /// Each index 1..=n must appear exactly once, where n is the sequence
    /// length.
    pub fn new<I>(order: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let raw: Vec<usize> = order.into_iter().collect();
        let n = raw.len();
        let mut seen = vec![false; n];
        for &index in &raw {
            if index == 0 || index > n || seen[index - 1] {
                return Err(Error::InvalidPermutation { expected: n });
            }
            seen[index - 1] = true;
        }
        Ok(Permutation {
            order: raw.into_iter().map(|i| PlayerId::new(i).unwrap()).collect(),
        })
    }

    /// The identity ordering (1, …, n).
    pub fn identity(n: usize) -> Self {
        Permutation {
            order: (1..=n).map(|i| PlayerId::new(i).unwrap()).collect(),
        }
    }

    pub fn order(&self) -> &[PlayerId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.order.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A payoff vector that distributes the grand-coalition value exactly.
///
/// Entry `i` is the payoff of player `i+1`. Payoffs are reduced rationals;
/// the efficiency condition (payoffs sum to `v(P)`) is validated on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Imputation {
    payoffs: Vec<BigRational>,
}

impl Imputation {
    /// Validates length and the efficiency condition against `game`.
    pub fn new(game: &CpGame, payoffs: Vec<BigRational>) -> Result<Self> {
        if payoffs.len() != game.player_count() {
            return Err(Error::LengthMismatch {
                got: payoffs.len(),
                expected: game.player_count(),
            });
        }
        let expected = BigInt::from(game.grand_value());
        let sum = rational_sum(payoffs.iter());
        if sum != BigRational::from_integer(expected.clone()) {
            return Err(Error::NotAnImputation { sum, expected });
        }
        Ok(Imputation { payoffs })
    }

    /// For payoff vectors whose efficiency holds by construction
    /// (telescoping marginal sums, convex mixtures of such sums).
    pub(crate) fn from_verified(payoffs: Vec<BigRational>) -> Self {
        Imputation { payoffs }
    }

    pub fn payoffs(&self) -> &[BigRational] {
        &self.payoffs
    }

    pub fn len(&self) -> usize {
        self.payoffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payoffs.is_empty()
    }

    /// `p(c)`: the exact sum of the members' payoffs, 0 for the empty
    /// coalition.
    pub fn coalition_payoff(&self, c: &Coalition) -> Result<BigRational> {
        c.validate_for(self.payoffs.len())?;
        Ok(rational_sum(
            c.members().iter().map(|p| &self.payoffs[p.index() - 1]),
        ))
    }
}

/// Verdict of an exhaustive core-membership check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreVerdict {
    /// No coalition has strictly positive excess.
    InCore,
    /// The first blocking coalition in mask order and its excess.
    Blocked {
        witness: Coalition,
        excess: BigRational,
    },
}

/// The marginal-contribution vector of `pi`.
///
/// One running product over the permutation: after multiplying in the next
/// weight, the player's contribution is the difference between the new and
/// the previous prefix value. That is n-1 big-integer multiplications and n
/// subtractions; bit cost still grows with the product's digit count.
///
/// Entry `i` of the result belongs to player `i+1`, not to permutation
/// position `i`. Every entry is a strictly positive integer and the entries
/// sum exactly to the grand-coalition value, so the result is an imputation,
/// and by convexity a core imputation.
pub fn marginal_vector(game: &CpGame, pi: &Permutation) -> Result<Imputation> {
    let n = game.player_count();
    if pi.len() != n {
        return Err(Error::InvalidPermutation { expected: n });
    }
    let mut payoffs = vec![BigRational::zero(); n];
    let mut prefix = BigUint::one();
    for (k, player) in pi.order().iter().enumerate() {
        let weight = game.weight_of(*player)?.value();
        let contribution = if k == 0 {
            // v(∅) = 0: the opener takes the full singleton value
            prefix = weight.clone();
            prefix.clone()
        } else {
            let grown = &prefix * weight;
            let before = std::mem::replace(&mut prefix, grown);
            &prefix - &before
        };
        payoffs[player.index() - 1] = BigRational::from_integer(contribution.into());
    }
    Ok(Imputation::from_verified(payoffs))
}

/// `e(c) = v(c) - p(c)`. Negative when the coalition is paid more than it is
/// worth; zero for the empty and (by efficiency) the grand coalition.
pub fn excess(game: &CpGame, imp: &Imputation, c: &Coalition) -> Result<BigRational> {
    if imp.len() != game.player_count() {
        return Err(Error::LengthMismatch {
            got: imp.len(),
            expected: game.player_count(),
        });
    }
    let value = game.coalition_value(c)?;
    let payoff = imp.coalition_payoff(c)?;
    Ok(BigRational::from_integer(value.into()) - payoff)
}

/// Whether `c` blocks the imputation: strictly positive excess.
pub fn blocks(game: &CpGame, imp: &Imputation, c: &Coalition) -> Result<bool> {
    Ok(excess(game, imp, c)?.is_positive())
}

/// Exhaustive core-membership check over all 2^n coalitions.
///
/// Coalitions are scanned in mask order (player 1 is the lowest bit) and the
/// first blocker wins, so the witness is deterministic. The efficiency sum is
/// re-validated because the imputation may have been built for another game.
pub fn core_check(game: &CpGame, imp: &Imputation, limits: &Limits) -> Result<CoreVerdict> {
    let n = game.player_count();
    limits.check_subsets(n)?;
    if imp.len() != n {
        return Err(Error::LengthMismatch {
            got: imp.len(),
            expected: n,
        });
    }
    let expected = BigInt::from(game.grand_value());
    let sum = granular_sum(imp);
    if sum != BigRational::from_integer(expected.clone()) {
        return Err(Error::NotAnImputation { sum, expected });
    }

    let values = mask_value_table(game);
    let size = 1u64 << n;
    let mut payoff_by_mask = vec![BigRational::zero(); size as usize];
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let player = low.trailing_zeros() as usize;
        payoff_by_mask[mask as usize] =
            &payoff_by_mask[(mask ^ low) as usize] + &imp.payoffs()[player];
    }
    for mask in 1..size {
        let value = BigRational::from_integer(values[mask as usize].clone().into());
        let excess = value - &payoff_by_mask[mask as usize];
        if excess.is_positive() {
            return Ok(CoreVerdict::Blocked {
                witness: Coalition::from_mask(mask),
                excess,
            });
        }
    }
    Ok(CoreVerdict::InCore)
}

/// The Shapley value: the exact average of all n! marginal vectors.
///
/// Players with equal weights receive equal payoffs, and the result is itself
/// a core imputation (it is a convex combination of marginal vectors).
pub fn shapley(game: &CpGame, limits: &Limits) -> Result<Imputation> {
    let n = game.player_count();
    limits.check_permutations(n)?;
    let weights = game.weights();
    let mut sums = vec![BigUint::zero(); n];
    for perm in (0..n).permutations(n) {
        let mut prefix = BigUint::one();
        for (k, &player) in perm.iter().enumerate() {
            if k == 0 {
                prefix = weights[player].value().clone();
                sums[player] += &prefix;
            } else {
                let grown = &prefix * weights[player].value();
                let before = std::mem::replace(&mut prefix, grown);
                sums[player] += &prefix - &before;
            }
        }
    }
    let count = BigInt::from(factorial(n));
    let payoffs = sums
        .into_iter()
        .map(|s| BigRational::new(s.into(), count.clone()))
        .collect();
    Ok(Imputation::from_verified(payoffs))
}

/// The raw Banzhaf vector: player `i`'s average marginal contribution over
/// the 2^(n-1) coalitions that exclude `i`.
///
/// Not efficient in general, so this returns a plain payoff vector rather
/// than an [`Imputation`].
pub fn banzhaf(game: &CpGame, limits: &Limits) -> Result<Vec<BigRational>> {
    let n = game.player_count();
    limits.check_subsets(n)?;
    let values = mask_value_table(game);
    let full = (1u64 << n) - 1;
    let denominator = BigInt::one() << (n - 1);
    let mut out = Vec::with_capacity(n);
    for player in 0..n {
        let bit = 1u64 << player;
        let others = full & !bit;
        let mut total = BigUint::zero();
        // ascending submask walk over the complement
        let mut mask = 0u64;
        loop {
            total += &values[(mask | bit) as usize] - &values[mask as usize];
            mask = mask.wrapping_sub(others) & others;
            if mask == 0 {
                break;
            }
        }
        out.push(BigRational::new(total.into(), denominator.clone()));
    }
    Ok(out)
}

/// Exact convex combination of marginal vectors.
///
/// Coefficients must be nonnegative and sum to exactly 1. The result lies in
/// the Weber set, which for convex games is exactly the core.
pub fn weber_mix(game: &CpGame, mix: &[(Permutation, BigRational)]) -> Result<Imputation> {
    let one = BigRational::one();
    let coefficient_sum = rational_sum(mix.iter().map(|(_, c)| c));
    if coefficient_sum != one || mix.iter().any(|(_, c)| c.is_negative()) {
        return Err(Error::BadMixture);
    }
    let n = game.player_count();
    let mut payoffs = vec![BigRational::zero(); n];
    for (pi, coefficient) in mix {
        let vector = marginal_vector(game, pi)?;
        for (acc, entry) in payoffs.iter_mut().zip(vector.payoffs()) {
            *acc += coefficient * entry;
        }
    }
    Ok(Imputation::from_verified(payoffs))
}

fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
}

fn rational_sum<'a, I>(values: I) -> BigRational
where
    I: Iterator<Item = &'a BigRational>,
{
    values.fold(BigRational::zero(), |acc, v| acc + v)
}

fn granular_sum(imp: &Imputation) -> BigRational {
    rational_sum(imp.payoffs().iter())
}
