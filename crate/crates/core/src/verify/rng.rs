//! Seeded generation of generic exact instances.
//!
//! All randomized checks draw from a ChaCha stream so that suite reports
//! are reproducible bit for bit from the seed.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Rat;
use crate::kinematics::Collection;

pub struct InstanceGen {
    rng: ChaCha8Rng,
}

impl InstanceGen {
    pub fn new(seed: u64) -> Self {
        InstanceGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A random exact rational with small numerator and denominator.
    pub fn rat(&mut self) -> Rat {
        let num = self.rng.gen_range(-24i64..=24);
        let den = self.rng.gen_range(1i64..=7);
        Rat::new(num, den)
    }

    /// Uniform integer in an inclusive range.
    pub fn index_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn nonzero_rat(&mut self) -> Rat {
        loop {
            let r = self.rat();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Generic parameter pool: pairwise differences stay away from the
    /// half-integer multiples of the coupling that the shifted extended
    /// sets can produce.
    pub fn generic_points(&mut self, count: usize, c: &Rat) -> Vec<Rat> {
        let half = c / &Rat::from_int(2);
        let mut banned = vec![Rat::zero()];
        for k in 1..=8i64 {
            let step = &half * &Rat::from_int(k);
            banned.push(step.clone());
            banned.push(-step);
        }
        let mut points: Vec<Rat> = Vec::with_capacity(count);
        'fill: while points.len() < count {
            let cand = self.rat();
            for p in &points {
                let d = &cand - p;
                if banned.contains(&d) {
                    continue 'fill;
                }
            }
            points.push(cand);
        }
        points
    }

    /// A generic collection with the given per-color cardinalities.
    pub fn collection(&mut self, cards: &[usize], c: &Rat) -> Collection<Rat> {
        let total: usize = cards.iter().sum();
        let pool = self.generic_points(total, c);
        let mut sets = Vec::with_capacity(cards.len());
        let mut it = pool.into_iter();
        for &r in cards {
            sets.push((&mut it).take(r).collect());
        }
        Collection::new(c.clone(), sets).expect("generic points are distinct")
    }

    /// Two collections plus extra generic points, all mutually generic.
    pub fn paired_collections(
        &mut self,
        cards: &[usize],
        extra: usize,
        c: &Rat,
    ) -> (Collection<Rat>, Collection<Rat>, Vec<Rat>) {
        let total: usize = cards.iter().sum();
        let pool = self.generic_points(2 * total + extra, c);
        let mut it = pool.into_iter();
        let mut first = Vec::with_capacity(cards.len());
        let mut second = Vec::with_capacity(cards.len());
        for &r in cards {
            first.push((&mut it).take(r).collect::<Vec<_>>());
        }
        for &r in cards {
            second.push((&mut it).take(r).collect::<Vec<_>>());
        }
        let rest: Vec<Rat> = it.collect();
        (
            Collection::new(c.clone(), first).expect("distinct"),
            Collection::new(c.clone(), second).expect("distinct"),
            rest,
        )
    }
}
