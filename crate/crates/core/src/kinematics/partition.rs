//! Set-partition enumeration with per-color cardinality profiles.
//!
//! Partitions split each color set into blocks I / II / III; a profile
//! pins the sizes of I and III (II takes the rest). Enumeration is
//! deterministic: lexicographic in the index combinations, color by color.

use crate::error::{Error, Result};

/// Required block sizes per color. `size_i[s] + size_iii[s]` may not exceed
/// the set size; such profiles are infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub size_i: Vec<usize>,
    pub size_iii: Vec<usize>,
}

impl Profile {
    pub fn two_block(size_i: Vec<usize>) -> Self {
        let n = size_i.len();
        Profile { size_i, size_iii: vec![0; n] }
    }

    pub fn feasible_for(&self, card: &[usize]) -> bool {
        card.len() == self.size_i.len()
            && card
                .iter()
                .zip(self.size_i.iter().zip(&self.size_iii))
                .all(|(&r, (&a, &b))| a + b <= r)
    }
}

/// One partition assignment: per color, the three blocks in order
/// (I, II, III). Blocks hold cloned elements in the original relative
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split<K> {
    pub block_i: Vec<Vec<K>>,
    pub block_ii: Vec<Vec<K>>,
    pub block_iii: Vec<Vec<K>>,
}

impl<K> Split<K> {
    /// Union of blocks I and II per color (in that order).
    pub fn i_and_ii(&self) -> Vec<Vec<K>>
    where
        K: Clone,
    {
        self.block_i
            .iter()
            .zip(&self.block_ii)
            .map(|(a, b)| a.iter().chain(b.iter()).cloned().collect())
            .collect()
    }
}

/// Lexicographic combinations iterator over `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let state = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, k, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        // advance
        let mut next = current.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if next[i] + (self.k - i) < self.n {
                next[i] += 1;
                for j in i + 1..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}

/// All (I, II, III) splits of one set with |I| = `ki`, |III| = `kiii`.
fn color_splits<K: Clone>(set: &[K], ki: usize, kiii: usize) -> Vec<(Vec<K>, Vec<K>, Vec<K>)> {
    let mut out = Vec::new();
    for idx_i in Combinations::new(set.len(), ki) {
        let in_i = |t: usize| idx_i.binary_search(&t).is_ok();
        let rest: Vec<usize> = (0..set.len()).filter(|&t| !in_i(t)).collect();
        for idx_iii_rel in Combinations::new(rest.len(), kiii) {
            let iii: Vec<usize> = idx_iii_rel.iter().map(|&t| rest[t]).collect();
            let in_iii = |t: usize| iii.binary_search(&t).is_ok();
            let bi: Vec<K> = idx_i.iter().map(|&t| set[t].clone()).collect();
            let biii: Vec<K> = iii.iter().map(|&t| set[t].clone()).collect();
            let bii: Vec<K> = (0..set.len())
                .filter(|&t| !in_i(t) && !in_iii(t))
                .map(|t| set[t].clone())
                .collect();
            out.push((bi, bii, biii));
        }
    }
    out
}

/// Enumerates every admissible assignment exactly once, lexicographically.
/// Errors with `InfeasibleProfile` when the profile cannot be realized.
pub fn enum_partitions<K: Clone>(sets: &[Vec<K>], profile: &Profile) -> Result<Vec<Split<K>>> {
    let card: Vec<usize> = sets.iter().map(Vec::len).collect();
    if !profile.feasible_for(&card) {
        return Err(Error::InfeasibleProfile(format!(
            "profile I={:?} III={:?} against cardinalities {:?}",
            profile.size_i, profile.size_iii, card
        )));
    }
    type ColorSplits<K> = Vec<(Vec<K>, Vec<K>, Vec<K>)>;
    let per_color: Vec<ColorSplits<K>> = sets
        .iter()
        .enumerate()
        .map(|(s, set)| color_splits(set, profile.size_i[s], profile.size_iii[s]))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; sets.len()];
    'outer: loop {
        let mut split = Split {
            block_i: Vec::with_capacity(sets.len()),
            block_ii: Vec::with_capacity(sets.len()),
            block_iii: Vec::with_capacity(sets.len()),
        };
        for (s, choices) in per_color.iter().enumerate() {
            let (a, b, c) = choices[idx[s]].clone();
            split.block_i.push(a);
            split.block_ii.push(b);
            split.block_iii.push(c);
        }
        out.push(split);
        // odometer
        for s in (0..sets.len()).rev() {
            idx[s] += 1;
            if idx[s] < per_color[s].len() {
                continue 'outer;
            }
            idx[s] = 0;
        }
        break;
    }
    Ok(out)
}

/// Silently-empty variant used by recurrence sums, where an infeasible
/// profile just means the term is discarded.
pub fn partitions_or_empty<K: Clone>(sets: &[Vec<K>], profile: &Profile) -> Vec<Split<K>> {
    enum_partitions(sets, profile).unwrap_or_default()
}

/// Binomial coefficient (usize; desk-scale arguments).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ri, Rat};

    fn set(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| ri(v)).collect()
    }

    #[test]
    fn counts_match_binomials() {
        let sets = vec![set(&[1, 2])];
        let parts = enum_partitions(&sets, &Profile::two_block(vec![1])).unwrap();
        assert_eq!(parts.len(), 2);

        let sets = vec![set(&[1, 2, 3, 4])];
        for k in 0..=4usize {
            let parts = enum_partitions(&sets, &Profile::two_block(vec![k])).unwrap();
            assert_eq!(parts.len() as u64, binomial(4, k));
        }
    }

    #[test]
    fn three_block_counts() {
        let sets = vec![set(&[1, 2, 3])];
        let profile = Profile { size_i: vec![1], size_iii: vec![1] };
        let parts = enum_partitions(&sets, &profile).unwrap();
        assert_eq!(parts.len(), 6);
        for p in &parts {
            assert_eq!(p.block_i[0].len(), 1);
            assert_eq!(p.block_ii[0].len(), 1);
            assert_eq!(p.block_iii[0].len(), 1);
        }
    }

    #[test]
    fn infeasible_profile_rejected() {
        let sets = vec![set(&[1])];
        let err = enum_partitions(&sets, &Profile::two_block(vec![2]));
        assert!(matches!(err, Err(Error::InfeasibleProfile(_))));
        assert!(partitions_or_empty(&sets, &Profile::two_block(vec![2])).is_empty());
    }

    #[test]
    fn deterministic_lexicographic_order() {
        let sets = vec![set(&[1, 2, 3])];
        let parts = enum_partitions(&sets, &Profile::two_block(vec![1])).unwrap();
        let firsts: Vec<i64> = parts.iter().map(|p| p.block_i[0][0].to_string().parse().unwrap()).collect();
        assert_eq!(firsts, vec![1, 2, 3]);
    }

    #[test]
    fn joint_sum_formula_count() {
        // one color, r = 2 on both sides, |v_I| = |u_I|:
        // sum_k C(2,k)^2 = C(4,2) = 6
        let v = vec![set(&[1, 2])];
        let u = vec![set(&[5, 6])];
        let mut count = 0;
        for k in 0..=2usize {
            let pv = enum_partitions(&v, &Profile::two_block(vec![k])).unwrap();
            let pu = enum_partitions(&u, &Profile::two_block(vec![k])).unwrap();
            count += pv.len() * pu.len();
        }
        assert_eq!(count, 6);
    }
}
