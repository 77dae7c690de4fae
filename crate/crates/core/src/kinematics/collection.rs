//! Colored families of Bethe parameters.

use crate::error::{Error, Result};
use crate::field::{Rat, Scalar};

/// A colored family of parameter sets: one ordered list per color
/// `0..rank`, together with the coupling constant of the model.
///
/// Sets are ordered lists; set semantics come from the distinctness
/// invariant, and permutation invariance of every formula is tested rather
/// than assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Collection<K: Scalar> {
    rank: usize,
    coupling: Rat,
    sets: Vec<Vec<K>>,
}

impl<K: Scalar> Collection<K> {
    pub fn new(coupling: Rat, sets: Vec<Vec<K>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::IndexOutOfRange("rank must be at least 1".into()));
        }
        if coupling.is_zero() {
            return Err(Error::Parse("coupling must be nonzero".into()));
        }
        let coll = Collection { rank: sets.len(), coupling, sets };
        coll.check_distinct()?;
        Ok(coll)
    }

    pub fn empty(rank: usize, coupling: Rat) -> Self {
        Collection { rank, coupling, sets: vec![Vec::new(); rank] }
    }

    fn check_distinct(&self) -> Result<()> {
        for (s, set) in self.sets.iter().enumerate() {
            for i in 0..set.len() {
                for j in i + 1..set.len() {
                    if set[i] == set[j] {
                        return Err(Error::InfeasibleProfile(format!(
                            "repeated parameter {} in color {s}",
                            set[i]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coupling(&self) -> &Rat {
        &self.coupling
    }

    pub fn coupling_as<T: Scalar>(&self) -> T {
        T::from_rat(&self.coupling)
    }

    pub fn sets(&self) -> &[Vec<K>] {
        &self.sets
    }

    pub fn set(&self, color: usize) -> &[K] {
        &self.sets[color]
    }

    pub fn cardinality(&self, color: usize) -> usize {
        self.sets[color].len()
    }

    pub fn cardinalities(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    /// Highest color with a nonempty set.
    pub fn highest_nonempty(&self) -> Option<usize> {
        (0..self.rank).rev().find(|&s| !self.sets[s].is_empty())
    }

    /// Lowest color with a nonempty set.
    pub fn lowest_nonempty(&self) -> Option<usize> {
        (0..self.rank).find(|&s| !self.sets[s].is_empty())
    }

    /// Returns the collection with one extra element at `color`.
    pub fn with_inserted(&self, color: usize, value: K) -> Result<Self> {
        let mut sets = self.sets.clone();
        sets[color].push(value);
        Collection::new(self.coupling.clone(), sets)
    }

    /// Removes the element at `(color, index)` and returns it with the rest.
    pub fn with_removed(&self, color: usize, index: usize) -> (K, Self) {
        let mut sets = self.sets.clone();
        let v = sets[color].remove(index);
        (v, Collection { rank: self.rank, coupling: self.coupling.clone(), sets })
    }

    /// Replaces the set of one color.
    pub fn with_set(&self, color: usize, set: Vec<K>) -> Self {
        let mut sets = self.sets.clone();
        sets[color] = set;
        Collection { rank: self.rank, coupling: self.coupling.clone(), sets }
    }

    /// A collection holding a single element at `color`, empty elsewhere.
    pub fn singleton(rank: usize, coupling: Rat, color: usize, value: K) -> Self {
        let mut sets = vec![Vec::new(); rank];
        sets[color] = vec![value];
        Collection { rank, coupling, sets }
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.rank == other.rank && self.cardinalities() == other.cardinalities()
    }

    /// Maps every parameter into another scalar field.
    pub fn map<T: Scalar>(&self, f: impl Fn(&K) -> T) -> Collection<T> {
        Collection {
            rank: self.rank,
            coupling: self.coupling.clone(),
            sets: self.sets.iter().map(|s| s.iter().map(&f).collect()).collect(),
        }
    }
}

impl Collection<Rat> {
    /// Genericity predicate: no pair across the collection with difference
    /// in `{0, +-c, +-c/2}`. Evaluators surface poles as errors anyway;
    /// this is the up-front sanity probe for generated instances.
    pub fn is_generic(&self) -> bool {
        let c = &self.coupling;
        let half = c / &Rat::from_int(2);
        let all: Vec<&Rat> = self.sets.iter().flatten().collect();
        for i in 0..all.len() {
            for j in 0..all.len() {
                if i == j {
                    continue;
                }
                let d = all[i] - all[j];
                if d.is_zero() || d == *c || d == half {
                    return false;
                }
            }
        }
        true
    }
}

/// Parses a collection literal like `[[0, 1/2], [3]]` of `Rat` strings or
/// numbers.
pub fn parse_collection(rank_hint: Option<usize>, coupling: Rat, text: &str) -> Result<Collection<Rat>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("collection literal: {e}")))?;
    let arr = value
        .as_array()
        .ok_or_else(|| Error::Parse("collection literal must be an array of arrays".into()))?;
    let mut sets = Vec::new();
    for color in arr {
        let inner = color
            .as_array()
            .ok_or_else(|| Error::Parse("each color must be an array".into()))?;
        let mut set = Vec::new();
        for v in inner {
            let r = match v {
                serde_json::Value::String(s) => Rat::parse(s)?,
                serde_json::Value::Number(n) => {
                    let i = n
                        .as_i64()
                        .ok_or_else(|| Error::Parse(format!("non-integer number {n}; use \"p/q\" strings")))?;
                    Rat::from_int(i)
                }
                other => return Err(Error::Parse(format!("invalid parameter {other}"))),
            };
            set.push(r);
        }
        sets.push(set);
    }
    if let Some(rank) = rank_hint {
        while sets.len() < rank {
            sets.push(Vec::new());
        }
        if sets.len() != rank {
            return Err(Error::Parse(format!(
                "collection has {} colors but rank is {rank}",
                sets.len()
            )));
        }
    }
    Collection::new(coupling, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri};

    #[test]
    fn distinctness_enforced() {
        assert!(Collection::new(ri(1), vec![vec![ri(1), ri(1)]]).is_err());
        assert!(Collection::new(ri(1), vec![vec![ri(1)], vec![ri(1)]]).is_ok());
    }

    #[test]
    fn genericity() {
        let good = Collection::new(ri(1), vec![vec![ri(0), rat(7, 3)]]).unwrap();
        assert!(good.is_generic());
        let bad = Collection::new(ri(1), vec![vec![ri(0), ri(1)]]).unwrap();
        assert!(!bad.is_generic());
        let bad_half = Collection::new(ri(1), vec![vec![ri(0), rat(1, 2)]]).unwrap();
        assert!(!bad_half.is_generic());
    }

    #[test]
    fn parse_literals() {
        let c = parse_collection(Some(2), ri(1), r#"[["1/2", 3], []]"#).unwrap();
        assert_eq!(c.set(0), &[rat(1, 2), ri(3)]);
        assert_eq!(c.cardinality(1), 0);
        assert!(parse_collection(None, ri(1), "[[0.5]]").is_err());
    }
}
