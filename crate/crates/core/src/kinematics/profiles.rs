//! Cardinality profiles of the action formula and the Bethe-vector
//! recurrences.
//!
//! Each table returns the required sizes of blocks I and III per color.
//! When the requested sizes cannot fit inside the sets, the corresponding
//! term of a sum is discarded; `profile_action` reports that explicitly,
//! the recurrence drivers skip such terms silently.

use super::partition::Profile;
use crate::error::{Error, Result};

/// Outcome of the action-formula profile: either a concrete profile for
/// the extended sets, or a discard of the whole term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileOutcome {
    Profile(Profile),
    Discard,
}

fn check_index(n: usize, idx: i64, what: &str) -> Result<()> {
    let n = n as i64;
    if idx < -n || idx > n {
        return Err(Error::IndexOutOfRange(format!("{what} = {idx} outside -{n}..={n}")));
    }
    Ok(())
}

/// Block sizes for the action of `T_{i,j}(z)` on a Bethe vector, over the
/// extended sets `w^(s) = u^(s) + {z, z_s}` whose cardinalities are given
/// in `extended_sizes`. The fixed color-n boundary partition is handled by
/// the weight evaluator, not here.
///
/// Sizes per color `s`: |I| = 2 for `s < i`, 1 for `-s <= i <= s`, 0 for
/// `i < -s`; |III| = 0 for `s < j`, 1 for `-s <= j <= s`, 2 for `j < -s`.
pub fn profile_action(i: i64, j: i64, n: usize, extended_sizes: &[usize]) -> Result<ProfileOutcome> {
    check_index(n, i, "i")?;
    check_index(n, j, "j")?;
    let mut size_i = Vec::with_capacity(n);
    let mut size_iii = Vec::with_capacity(n);
    for s in 0..n as i64 {
        let ni = if s < i {
            2
        } else if -s <= i && i <= s {
            1
        } else {
            0
        };
        let niii = if s < j {
            0
        } else if -s <= j && j <= s {
            1
        } else {
            2
        };
        size_i.push(ni);
        size_iii.push(niii);
    }
    let profile = Profile { size_i, size_iii };
    if !profile.feasible_for(extended_sizes) {
        return Ok(ProfileOutcome::Discard);
    }
    Ok(ProfileOutcome::Profile(profile))
}

/// Block sizes for the Bethe-vector recurrence that adds a parameter at
/// color `ell`, summed over `-n <= i <= ell < j <= n`. Applies to the
/// original (unextended) sets.
pub fn profile_rec_b(i: i64, j: i64, ell: usize, n: usize) -> Result<Profile> {
    check_index(n, i, "i")?;
    check_index(n, j, "j")?;
    if !(i <= ell as i64 && (ell as i64) < j) {
        return Err(Error::IndexOutOfRange(format!(
            "recurrence indices need i <= ell < j, got i={i}, ell={ell}, j={j}"
        )));
    }
    let mut size_i = Vec::with_capacity(n);
    let mut size_iii = Vec::with_capacity(n);
    for s in 0..n as i64 {
        let (ni, niii) = if s < ell as i64 {
            let ni = if i < -s {
                2
            } else if -s <= i && i <= s {
                1
            } else {
                0
            };
            (ni, 0)
        } else if s == ell as i64 {
            (usize::from(i < -s), 0)
        } else {
            (usize::from(i < -s), usize::from(s < j))
        };
        size_i.push(ni);
        size_iii.push(niii);
    }
    Ok(Profile { size_i, size_iii })
}

/// Dual-recurrence block sizes: the mirror of [`profile_rec_b`] with the
/// roles of the two monodromy indices swapped. The first argument is the
/// lower index `j` of `T_{i,j}`, the second the upper index `i`.
pub fn profile_rec_c(j: i64, i: i64, ell: usize, n: usize) -> Result<Profile> {
    profile_rec_b(j, i, ell, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_profile_examples() {
        // n=2, i=2, j=0, one original parameter per color => |w| = 3
        let p = profile_action(2, 0, 2, &[3, 3]).unwrap();
        match p {
            ProfileOutcome::Profile(p) => {
                assert_eq!(p.size_i, vec![2, 2]);
                assert_eq!(p.size_iii, vec![1, 1]);
            }
            ProfileOutcome::Discard => panic!("feasible profile discarded"),
        }

        // n=1, i=j=1, empty original set => |w| = 2, needs |I|=2, |III|=0
        let p = profile_action(1, 1, 1, &[2]).unwrap();
        assert_eq!(
            p,
            ProfileOutcome::Profile(Profile { size_i: vec![2], size_iii: vec![0] })
        );

        // n=1, i=1, j=-1 on an empty set: |I|+|III| = 2+2 > 2 => discard
        let p = profile_action(1, -1, 1, &[2]).unwrap();
        assert_eq!(p, ProfileOutcome::Discard);

        assert!(profile_action(3, 0, 2, &[3, 3]).is_err());
    }

    #[test]
    fn rec_b_examples() {
        // ell = n-1 = 1, i=0, j=2, n=2
        let p = profile_rec_b(0, 2, 1, 2).unwrap();
        assert_eq!(p.size_i, vec![1, 0]);
        assert_eq!(p.size_iii, vec![0, 0]);

        // ell = 0, i=-1, j=1, n=1
        let p = profile_rec_b(-1, 1, 0, 1).unwrap();
        assert_eq!(p.size_i, vec![1]);
        assert_eq!(p.size_iii, vec![0]);

        // ell = 0, i=0, j=2, n=2
        let p = profile_rec_b(0, 2, 0, 2).unwrap();
        assert_eq!(p.size_i, vec![0, 0]);
        assert_eq!(p.size_iii, vec![0, 1]);

        assert!(profile_rec_b(1, 1, 0, 1).is_err());
    }

    #[test]
    fn rec_c_examples() {
        // ell = n-1 = 1, j=0, i=2, n=2
        let p = profile_rec_c(0, 2, 1, 2).unwrap();
        assert_eq!(p.size_i, vec![1, 0]);
        assert_eq!(p.size_iii, vec![0, 0]);

        // ell = 1, j=-2, i=2, n=2
        let p = profile_rec_c(-2, 2, 1, 2).unwrap();
        assert_eq!(p.size_i, vec![2, 1]);
        assert_eq!(p.size_iii, vec![0, 0]);

        // ell = 0, j=0, i=1, n=1: nothing moves
        let p = profile_rec_c(0, 1, 0, 1).unwrap();
        assert_eq!(p.size_i, vec![0]);
        assert_eq!(p.size_iii, vec![0]);
    }
}
