//! The game model: weighted players and the product-form characteristic
//! function.
//!
//! A cooperative product game ([`CpGame`]) assigns every player an integer
//! weight of at least 2. A nonempty coalition is worth the product of its
//! members' weights; the empty coalition is worth 0. All values are exact
//! unbounded integers, so games with thousands of players evaluate without
//! overflow or rounding.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::fmt;

/// Exact coalition value: an unbounded non-negative integer.
pub type Value = BigUint;

/// A 1-based player index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(usize);

impl PlayerId {
    /// Player indices start at 1.
    pub fn new(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidPlayer(0));
        }
        Ok(PlayerId(index))
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl TryFrom<usize> for PlayerId {
    type Error = Error;

    fn try_from(index: usize) -> Result<Self> {
        PlayerId::new(index)
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A single player's multiplier. Always at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(BigUint);

impl Weight {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A duplicate-free set of players, kept as a strictly increasing index list.
///
/// The canonical ordering makes equal member sets compare equal and renders
/// deterministically. `{1,2}` and `∅` in display form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition {
    members: Vec<PlayerId>,
}

impl Coalition {
    pub fn empty() -> Self {
        Coalition::default()
    }

    /// Builds a coalition from 1-based indices given in any order.
    /// Index 0 and repeated indices are rejected.
    pub fn new<I>(members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut ids = members
            .into_iter()
            .map(PlayerId::new)
            .collect::<Result<Vec<_>>>()?;
        ids.sort_unstable();
        for pair in ids.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicatePlayer(pair[0].index()));
            }
        }
        Ok(Coalition { members: ids })
    }

    /// The grand coalition `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        Coalition {
            members: (1..=n).map(PlayerId).collect(),
        }
    }

    /// Decodes a bit mask where bit 0 is player 1.
    pub fn from_mask(mask: u64) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            members.push(PlayerId(bit + 1));
            rest &= rest - 1;
        }
        Coalition { members }
    }

    /// The bit-mask encoding, or `None` if a member is beyond bit 63.
    pub fn mask(&self) -> Option<u64> {
        let mut mask = 0u64;
        for p in &self.members {
            if p.index() > 64 {
                return None;
            }
            mask |= 1 << (p.index() - 1);
        }
        Some(mask)
    }

    pub fn members(&self) -> &[PlayerId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, player: PlayerId) -> bool {
        self.members.binary_search(&player).is_ok()
    }

    /// A copy with `player` added; a no-op when already present.
    pub fn with(&self, player: PlayerId) -> Self {
        match self.members.binary_search(&player) {
            Ok(_) => self.clone(),
            Err(at) => {
                let mut members = self.members.clone();
                members.insert(at, player);
                Coalition { members }
            }
        }
    }

    pub fn union(&self, other: &Coalition) -> Self {
        let mut members = self.members.clone();
        for p in &other.members {
            if let Err(at) = members.binary_search(p) {
                members.insert(at, *p);
            }
        }
        Coalition { members }
    }

    pub fn intersection(&self, other: &Coalition) -> Self {
        Coalition {
            members: self
                .members
                .iter()
                .copied()
                .filter(|p| other.contains(*p))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Coalition) -> bool {
        self.members.iter().all(|p| other.contains(*p))
    }

    pub fn is_disjoint_from(&self, other: &Coalition) -> bool {
        self.members.iter().all(|p| !other.contains(*p))
    }

    /// Errors with the first member beyond `n`.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        // members are sorted, so only the last one can stick out
        match self.members.last() {
            Some(p) if p.index() > n => Err(Error::InvalidPlayer(p.index())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (k, p) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A cooperative product game: one weight per player, every weight at least 2.
///
/// Immutable after construction. The characteristic function is
/// `v(C) = product of member weights` for nonempty `C` and `v(∅) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CpGame {
    weights: Vec<Weight>,
}

impl CpGame {
    /// Validates and stores the weight sequence in order.
    ///
    /// Rejects an empty sequence and any weight below 2; below 2 the game's
    /// monotonicity and core guarantees break down, so such games are not
    /// representable at all.
    pub fn new<I>(weights: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let two = BigInt::from(2);
        let mut out = Vec::new();
        for (k, raw) in weights.into_iter().enumerate() {
            let raw: BigInt = raw.into();
            if raw < two {
                return Err(Error::InvalidWeight {
                    position: k + 1,
                    value: raw,
                });
            }
            let magnitude = raw.to_biguint().expect("validated at least 2");
            out.push(Weight(magnitude));
        }
        if out.is_empty() {
            return Err(Error::EmptyGame);
        }
        Ok(CpGame { weights: out })
    }

    pub fn player_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight_of(&self, player: PlayerId) -> Result<&Weight> {
        self.weights
            .get(player.index() - 1)
            .ok_or(Error::InvalidPlayer(player.index()))
    }

    pub fn players(&self) -> impl Iterator<Item = PlayerId> + '_ {
        (1..=self.player_count()).map(PlayerId)
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.player_count())
    }

    /// `v(c)`: 0 for the empty coalition, otherwise the exact product of the
    /// members' weights.
    pub fn coalition_value(&self, c: &Coalition) -> Result<Value> {
        c.validate_for(self.player_count())?;
        if c.is_empty() {
            return Ok(BigUint::zero());
        }
        let mut product = BigUint::one();
        for p in c.members() {
            product *= &self.weights[p.index() - 1].0;
        }
        Ok(product)
    }

    /// `v(P)`: the value of the grand coalition, the total there is to divide.
    pub fn grand_value(&self) -> Value {
        let mut product = BigUint::one();
        for w in &self.weights {
            product *= &w.0;
        }
        product
    }

    /// `v(c ∪ {player}) - v(c)` for a player outside `c`. Strictly positive
    /// in every product game.
    pub fn marginal_contribution(&self, c: &Coalition, player: PlayerId) -> Result<Value> {
        let w = self.weight_of(player)?.value();
        if c.contains(player) {
            return Err(Error::PlayerInCoalition(player.index()));
        }
        let base = self.coalition_value(c)?;
        if c.is_empty() {
            // v(∅) = 0, so the first player contributes the full singleton value
            Ok(w.clone())
        } else {
            Ok(base * (w - 1u32))
        }
    }
}

/// Value of every coalition mask in `0..2^n`, built with one multiplication
/// per mask. Callers must have checked `n <= MASK_LIMIT`.
pub(crate) fn mask_value_table(game: &CpGame) -> Vec<Value> {
    let n = game.player_count();
    let size = 1usize << n;
    let mut table = Vec::with_capacity(size);
    table.push(BigUint::zero()); // empty coalition
    for mask in 1..size as u64 {
        let low = mask & mask.wrapping_neg();
        let weight = &game.weights()[low.trailing_zeros() as usize].0;
        let value = if mask == low {
            weight.clone()
        } else {
            &table[(mask ^ low) as usize] * weight
        };
        table.push(value);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn game(ws: &[u32]) -> CpGame {
        CpGame::new(ws.iter().copied()).unwrap()
    }

    fn coalition(members: &[usize]) -> Coalition {
        Coalition::new(members.iter().copied()).unwrap()
    }

    #[test]
    fn builds_from_valid_weights() {
        let g = game(&[2, 3, 5]);
        assert_eq!(g.player_count(), 3);
        assert_eq!(g.weights()[1].value(), &BigUint::from(3u32));
    }

    #[test]
    fn rejects_weight_one() {
        assert_eq!(
            CpGame::new([1, 1]),
            Err(Error::InvalidWeight {
                position: 1,
                value: BigInt::from(1),
            })
        );
    }

    #[test]
    fn rejects_weight_zero_at_position() {
        assert_eq!(
            CpGame::new([2, 0, 5]),
            Err(Error::InvalidWeight {
                position: 2,
                value: BigInt::from(0),
            })
        );
    }

    #[test]
    fn rejects_negative_weight() {
        assert_eq!(
            CpGame::new([2, -7]),
            Err(Error::InvalidWeight {
                position: 2,
                value: BigInt::from(-7),
            })
        );
    }

    #[test]
    fn rejects_empty_game() {
        assert_eq!(CpGame::new(Vec::<i32>::new()), Err(Error::EmptyGame));
    }

    #[test]
    fn accepts_huge_weights() {
        let big: BigInt = BigInt::from(10).pow(40) + 7;
        let g = CpGame::new([big.clone()]).unwrap();
        assert_eq!(g.grand_value(), big.to_biguint().unwrap());
    }

    #[test]
    fn grand_coalition_value() {
        assert_eq!(game(&[2, 3, 5]).grand_value(), BigUint::from(30u32));
        assert_eq!(game(&[2]).grand_value(), BigUint::from(2u32));
        assert_eq!(game(&[2, 2, 2, 2]).grand_value(), BigUint::from(16u32));
    }

    #[test]
    fn coalition_values() {
        let g = game(&[2, 3, 5]);
        assert_eq!(
            g.coalition_value(&coalition(&[1, 2, 3])).unwrap(),
            BigUint::from(30u32)
        );
        assert_eq!(
            g.coalition_value(&Coalition::empty()).unwrap(),
            BigUint::zero()
        );
        assert_eq!(
            g.coalition_value(&coalition(&[2])).unwrap(),
            BigUint::from(3u32)
        );
    }

    #[test]
    fn coalition_value_rejects_unknown_player() {
        let g = game(&[2, 3, 5]);
        assert_eq!(
            g.coalition_value(&coalition(&[2, 4])),
            Err(Error::InvalidPlayer(4))
        );
    }

    #[test]
    fn marginal_contributions() {
        let g = game(&[2, 3, 5]);
        let p = |i| PlayerId::new(i).unwrap();
        assert_eq!(
            g.marginal_contribution(&Coalition::empty(), p(1)).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            g.marginal_contribution(&coalition(&[1]), p(2)).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            g.marginal_contribution(&coalition(&[1, 2]), p(3)).unwrap(),
            BigUint::from(24u32)
        );
    }

    #[test]
    fn marginal_contribution_rejects_member() {
        let g = game(&[2, 3, 5]);
        assert_eq!(
            g.marginal_contribution(&coalition(&[1, 2]), PlayerId::new(2).unwrap()),
            Err(Error::PlayerInCoalition(2))
        );
    }

    #[test]
    fn coalition_is_canonical() {
        let c = Coalition::new([3, 1, 2]).unwrap();
        assert_eq!(c, coalition(&[1, 2, 3]));
        assert_eq!(c.to_string(), "{1,2,3}");
        assert_eq!(Coalition::empty().to_string(), "∅");
    }

    #[test]
    fn coalition_rejects_duplicates_and_zero() {
        assert_eq!(Coalition::new([1, 2, 1]), Err(Error::DuplicatePlayer(1)));
        assert_eq!(Coalition::new([0]), Err(Error::InvalidPlayer(0)));
    }

    #[test]
    fn mask_round_trip() {
        let c = coalition(&[1, 3, 4]);
        assert_eq!(c.mask(), Some(0b1101));
        assert_eq!(Coalition::from_mask(0b1101), c);
        assert_eq!(Coalition::from_mask(0), Coalition::empty());
    }

    #[test]
    fn set_operations() {
        let a = coalition(&[1, 2]);
        let b = coalition(&[2, 3]);
        assert_eq!(a.union(&b), coalition(&[1, 2, 3]));
        assert_eq!(a.intersection(&b), coalition(&[2]));
        assert!(coalition(&[2]).is_subset_of(&b));
        assert!(a.is_disjoint_from(&coalition(&[3])));
        assert!(!a.is_disjoint_from(&b));
    }

    #[test]
    fn repeated_evaluation_is_identical() {
        let g = game(&[7, 11, 13]);
        let c = coalition(&[1, 3]);
        assert_eq!(g.coalition_value(&c), g.coalition_value(&c));
    }

    #[test]
    fn mask_table_matches_direct_evaluation() {
        let g = game(&[2, 3, 5, 7]);
        let table = mask_value_table(&g);
        assert_eq!(table.len(), 16);
        for (mask, value) in table.iter().enumerate() {
            let direct = g.coalition_value(&Coalition::from_mask(mask as u64)).unwrap();
            assert_eq!(*value, direct);
        }
    }
}
