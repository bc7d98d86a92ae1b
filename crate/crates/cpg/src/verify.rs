//! Brute-force property oracles over explicitly tabulated games.
//!
//! The checks here quantify over every coalition (or every pair of
//! coalitions), so they certify a property outright at desk scale instead of
//! sampling it. They run on anything implementing [`GameView`], which lets
//! the same oracles confirm the structural properties of product games and
//! exercise hand-built counterexample tables that violate them.
//!
//! Every failing check returns a [`Witness`] that can be re-evaluated
//! against the game to reproduce the violation exactly.

use crate::error::{Error, Result};
use crate::limits::{Limits, MASK_LIMIT};
use crate::model::{mask_value_table, Coalition, CpGame};
use num_rational::BigRational;
use std::fmt;

/// Read access to a characteristic function: a player count and an exact
/// value for every coalition over 1..=n.
///
/// Evaluation must be deterministic: the same coalition always yields the
/// same value. Implementations may panic when the coalition references a
/// player outside 1..=n.
pub trait GameView {
    fn player_count(&self) -> usize;

    /// The exact value of one coalition.
    fn value(&self, c: &Coalition) -> BigRational;
}

impl GameView for CpGame {
    fn player_count(&self) -> usize {
        CpGame::player_count(self)
    }

    fn value(&self, c: &Coalition) -> BigRational {
        let v = self
            .coalition_value(c)
            .expect("coalition must draw its players from 1..=n");
        BigRational::from_integer(v.into())
    }
}

/// A total tabulation of a characteristic function: one exact rational per
/// coalition, indexed by mask (player 1 is the lowest bit).
///
/// Unlike a product game, a table may hold any rational values, including
/// zeros, negatives, and a nonzero value for the empty coalition. That makes
/// it the vehicle for negative-control fixtures that violate monotonicity,
/// superadditivity, or convexity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGame {
    n: usize,
    values: Vec<BigRational>,
}

impl TableGame {
    /// `values[mask]` is the value of the coalition encoded by `mask`; the
    /// vector must hold exactly 2^n entries.
    pub fn new(n: usize, values: Vec<BigRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGame);
        }
        if n > MASK_LIMIT {
            return Err(Error::LimitExceeded { n, limit: MASK_LIMIT });
        }
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                got: values.len(),
                expected,
            });
        }
        Ok(TableGame { n, values })
    }

    pub fn player_count(&self) -> usize {
        self.n
    }

    /// All 2^n values in mask order.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

impl GameView for TableGame {
    fn player_count(&self) -> usize {
        self.n
    }

    fn value(&self, c: &Coalition) -> BigRational {
        c.validate_for(self.n)
            .expect("coalition must draw its players from 1..=n");
        let mask = c.mask().expect("masks cover all valid coalitions");
        self.values[mask as usize].clone()
    }
}

/// A counterexample to one of the checked properties.
///
/// Re-evaluating a witness against the game it came from reproduces the
/// violation exactly; see [`Witness::reproduces`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `smaller` ⊂ `larger`, yet v(smaller) > v(larger).
    Monotonicity { smaller: Coalition, larger: Coalition },
    /// Disjoint nonempty coalitions with v(a) + v(b) > v(a ∪ b).
    Superadditivity { a: Coalition, b: Coalition },
    /// A pair with v(a ∪ b) + v(a ∩ b) < v(a) + v(b).
    Convexity { a: Coalition, b: Coalition },
}

impl Witness {
    /// Re-evaluates the recorded inequality against `view`.
    ///
    /// Returns false when the inequality no longer holds, and also when the
    /// witness does not fit the game (players out of range, coalitions not
    /// in the required relation).
    pub fn reproduces<V: GameView + ?Sized>(&self, view: &V) -> bool {
        let n = view.player_count();
        match self {
            Witness::Monotonicity { smaller, larger } => {
                if smaller.validate_for(n).is_err() || larger.validate_for(n).is_err() {
                    return false;
                }
                smaller.is_subset_of(larger)
                    && smaller != larger
                    && view.value(smaller) > view.value(larger)
            }
            Witness::Superadditivity { a, b } => {
                if a.validate_for(n).is_err() || b.validate_for(n).is_err() {
                    return false;
                }
                a.is_disjoint_from(b)
                    && view.value(a) + view.value(b) > view.value(&a.union(b))
            }
            Witness::Convexity { a, b } => {
                if a.validate_for(n).is_err() || b.validate_for(n).is_err() {
                    return false;
                }
                view.value(&a.union(b)) + view.value(&a.intersection(b))
                    < view.value(a) + view.value(b)
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Monotonicity { smaller, larger } => write!(f, "{smaller} {larger}"),
            Witness::Superadditivity { a, b } => write!(f, "{a} {b}"),
            Witness::Convexity { a, b } => write!(f, "{a} {b}"),
        }
    }
}

/// Outcome of an exhaustive property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckResult {
    Pass,
    Violated(Witness),
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        matches!(self, CheckResult::Pass)
    }
}

/// Materializes a product game's characteristic function as a table.
///
/// Every entry equals `coalition_value` of the coalition with that mask; the
/// entry for the empty coalition is 0.
pub fn to_table(game: &CpGame, limits: &Limits) -> Result<TableGame> {
    let n = game.player_count();
    limits.check_subsets(n)?;
    let values = mask_value_table(game)
        .into_iter()
        .map(|v| BigRational::from_integer(v.into()))
        .collect();
    Ok(TableGame { n, values })
}

/// Checks monotonicity: v(C′) ≤ v(C) for every C′ ⊂ C.
///
/// Only immediate subsets C∖{i} are compared; transitivity of ≤ along chains
/// of single-player removals makes this equivalent to the fully quantified
/// property at cost n·2^(n-1) instead of 4^n. Coalitions are scanned in
/// ascending mask order, removed players in ascending index order, and the
/// first violating pair is the witness.
pub fn check_monotone<V: GameView + ?Sized>(view: &V, limits: &Limits) -> Result<CheckResult> {
    let n = view.player_count();
    limits.check_subsets(n)?;
    let values = tabulate(view);
    let size = 1u64 << n;
    for mask in 1..size {
        for player in 0..n {
            let bit = 1u64 << player;
            if mask & bit == 0 {
                continue;
            }
            let sub = mask ^ bit;
            if values[sub as usize] > values[mask as usize] {
                return Ok(CheckResult::Violated(Witness::Monotonicity {
                    smaller: Coalition::from_mask(sub),
                    larger: Coalition::from_mask(mask),
                }));
            }
        }
    }
    Ok(CheckResult::Pass)
}

/// Checks superadditivity: v(A) + v(B) ≤ v(A ∪ B) for disjoint nonempty A, B.
///
/// A runs over nonempty coalitions in ascending mask order; B runs over the
/// nonempty subsets of A's complement, also ascending. The first violating
/// pair is the witness.
pub fn check_superadditive<V: GameView + ?Sized>(
    view: &V,
    limits: &Limits,
) -> Result<CheckResult> {
    let n = view.player_count();
    limits.check_pairs(n)?;
    let values = tabulate(view);
    let size = 1u64 << n;
    let full = size - 1;
    for a in 1..size {
        let complement = full & !a;
        let mut b = 0u64;
        loop {
            b = b.wrapping_sub(complement) & complement;
            if b == 0 {
                break;
            }
            let joint = &values[(a | b) as usize];
            if &values[a as usize] + &values[b as usize] > *joint {
                return Ok(CheckResult::Violated(Witness::Superadditivity {
                    a: Coalition::from_mask(a),
                    b: Coalition::from_mask(b),
                }));
            }
        }
    }
    Ok(CheckResult::Pass)
}

/// Checks convexity: v(A ∪ B) + v(A ∩ B) ≥ v(A) + v(B) for ALL pairs.
///
/// All 4^n ordered pairs are tested, including overlapping, nested, and
/// empty ones, in double ascending mask order (A outer, B inner); the first
/// violating pair is the witness. The equivalent marginal-contribution
/// formulation would be cheaper but is deliberately not used.
pub fn check_convex<V: GameView + ?Sized>(view: &V, limits: &Limits) -> Result<CheckResult> {
    let n = view.player_count();
    limits.check_pairs(n)?;
    let values = tabulate(view);
    let size = 1u64 << n;
    for a in 0..size {
        for b in 0..size {
            let lhs = &values[(a | b) as usize] + &values[(a & b) as usize];
            let rhs = &values[a as usize] + &values[b as usize];
            if lhs < rhs {
                return Ok(CheckResult::Violated(Witness::Convexity {
                    a: Coalition::from_mask(a),
                    b: Coalition::from_mask(b),
                }));
            }
        }
    }
    Ok(CheckResult::Pass)
}

/// The set of dummy players: those whose marginal contribution is never
/// strictly positive, over every coalition not containing them.
///
/// Product games have none, since appending a player multiplies any nonempty
/// coalition's value by at least 2 and lifts the empty coalition from 0 to
/// the player's weight.
pub fn find_dummies<V: GameView + ?Sized>(view: &V, limits: &Limits) -> Result<Coalition> {
    let n = view.player_count();
    limits.check_subsets(n)?;
    let values = tabulate(view);
    let size = 1u64 << n;
    let mut dummies = Vec::new();
    for player in 0..n {
        let bit = 1u64 << player;
        let helps = (0..size)
            .filter(|mask| mask & bit == 0)
            .any(|mask| values[(mask | bit) as usize] > values[mask as usize]);
        if !helps {
            dummies.push(player + 1);
        }
    }
    Coalition::new(dummies)
}

fn tabulate<V: GameView + ?Sized>(view: &V) -> Vec<BigRational> {
    let n = view.player_count();
    (0..1u64 << n)
        .map(|mask| view.value(&Coalition::from_mask(mask)))
        .collect()
}
