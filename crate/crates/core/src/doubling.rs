//! Catalan and Motzkin numbers, and perfect matchings of double
//! constructions from free-point profiles of the single structure.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k` is negative or exceeds `n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(k: usize) -> BigUint {
    binomial(2 * k as i64, k as i64) / (k as u64 + 1)
}

pub fn motzkin(n: usize) -> BigUint {
    // M_n = sum_k C(n, 2k) Catalan(k)
    (0..=n / 2).map(|k| binomial(n as i64, 2 * k as i64) * catalan(k)).sum()
}

/// Entry `j` counts down-free matchings with exactly `j` free points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePointProfile {
    pub counts: Vec<BigUint>,
}

impl FreePointProfile {
    pub fn new(counts: Vec<BigUint>) -> Self {
        FreePointProfile { counts }
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Profile of a downward chain of `m` points: any `j` points stay free
    /// and the rest form a perfect matching in convex position.
    pub fn single_chain(m: usize) -> Self {
        let counts = (0..=m)
            .map(|j| {
                if (m - j) % 2 == 0 {
                    binomial(m as i64, j as i64) * catalan((m - j) / 2)
                } else {
                    BigUint::zero()
                }
            })
            .collect();
        FreePointProfile { counts }
    }
}

/// Perfect matchings of the double construction: sum of squared profile
/// entries.
pub fn pm_of_double(profile: &FreePointProfile) -> BigUint {
    profile.counts.iter().map(|c| c * c).sum()
}

/// Summands of the double chain count, indexed by the number `j` of edges
/// between the two chains; zero where the parity does not match.
pub fn dc_pm_terms(n: usize) -> Result<Vec<BigUint>> {
    if n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("double chain needs even n, got {n}")));
    }
    Ok(FreePointProfile::single_chain(n / 2)
        .counts
        .into_iter()
        .map(|c| &c * &c)
        .collect())
}

/// Perfect matchings of the double chain with `n` points.
pub fn dc_pm(n: usize) -> Result<BigUint> {
    Ok(dc_pm_terms(n)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_values() {
        assert_eq!(catalan(0), u(1));
        assert_eq!(motzkin(0), u(1));
        assert_eq!(catalan(3), u(5));
        let m: Vec<BigUint> = (0..10).map(motzkin).collect();
        let want = [1u64, 1, 2, 4, 9, 21, 51, 127, 323, 835];
        assert_eq!(m, want.iter().map(|&v| u(v)).collect::<Vec<_>>());
        assert_eq!(binomial(5, -1), u(0));
        assert_eq!(binomial(5, 6), u(0));
        assert_eq!(binomial(40, 20), u(137846528820));
    }

    #[test]
    fn trivial_profile() {
        assert_eq!(pm_of_double(&FreePointProfile::new(vec![u(1), u(0), u(0)])), u(1));
    }

    #[test]
    fn double_chain_counts() {
        assert_eq!(dc_pm(2).unwrap(), u(1));
        assert!(dc_pm(3).is_err());
        // single chain profile totals are Motzkin numbers
        for m in 0..12 {
            assert_eq!(FreePointProfile::single_chain(m).total(), motzkin(m));
        }
        assert_eq!(dc_pm(2 * 5).unwrap(), pm_of_double(&FreePointProfile::single_chain(5)));
    }

    #[test]
    fn dominant_term_near_a_sixth() {
        let n = 60;
        let terms = dc_pm_terms(n).unwrap();
        let (jmax, _) = terms.iter().enumerate().max_by(|a, b| a.1.cmp(b.1)).unwrap();
        assert!((jmax as i64 - (n / 6) as i64).abs() <= 2, "argmax at {jmax}");
    }
}
