use crate::error::{Error, Result};

/// Coalitions are addressed by `u64` bit masks during enumeration, so no
/// exhaustive search accepts more than 63 players regardless of the
/// configured limit.
pub const MASK_LIMIT: usize = 63;

/// Caps on the exhaustive search spaces.
///
/// Every brute-force operation refuses instances beyond its cap with
/// [`Error::LimitExceeded`] instead of silently truncating the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest player count for 2^n subset sweeps (core checks, tables,
    /// Banzhaf, dummy scans).
    pub subsets: usize,
    /// Largest player count for n! permutation sweeps (Shapley).
    pub permutations: usize,
    /// Largest player count for coalition-pair sweeps (convexity at 4^n,
    /// superadditivity at 3^n).
    pub pairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subsets: 20,
            permutations: 9,
            pairs: 10,
        }
    }
}

impl Limits {
    /// The same cap for every search space.
    pub fn uniform(n: usize) -> Self {
        Limits {
            subsets: n,
            permutations: n,
            pairs: n,
        }
    }

    pub(crate) fn check_subsets(&self, n: usize) -> Result<()> {
        check(n, self.subsets.min(MASK_LIMIT))
    }

    pub(crate) fn check_permutations(&self, n: usize) -> Result<()> {
        check(n, self.permutations.min(MASK_LIMIT))
    }

    pub(crate) fn check_pairs(&self, n: usize) -> Result<()> {
        check(n, self.pairs.min(MASK_LIMIT))
    }
}

fn check(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let l = Limits::default();
        assert_eq!((l.subsets, l.permutations, l.pairs), (20, 9, 10));
    }

    #[test]
    fn uniform_is_capped_by_mask_width() {
        let l = Limits::uniform(200);
        assert!(l.check_subsets(63).is_ok());
        assert_eq!(
            l.check_subsets(64),
            Err(Error::LimitExceeded { n: 64, limit: 63 })
        );
    }

    #[test]
    fn exceeding_reports_both_sides() {
        let l = Limits::default();
        assert_eq!(
            l.check_pairs(11),
            Err(Error::LimitExceeded { n: 11, limit: 10 })
        );
    }
}
