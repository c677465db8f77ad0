//! Seeded random cores for property checks.
//!
//! `s`-cores are drawn through their charge tuples: `s−1` entries uniform on
//! `[−B, B]`, the last one fixed by the zero-sum condition, rejecting draws
//! that leave the box. This is uniform on the box conditioned on zero sum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betaset::{ATuple, CTuple};
use crate::coords::UTuple;
use crate::error::Result;

pub const DEFAULT_BOUND: i64 = 5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_charge<R: Rng>(rng: &mut R, s: u64, bound: i64) -> CTuple {
    assert!(s >= 1 && bound >= 0);
    loop {
        let mut c: Vec<i64> = (1..s).map(|_| rng.random_range(-bound..=bound)).collect();
        let last = -c.iter().sum::<i64>();
        if last.abs() <= bound {
            c.push(last);
            return CTuple { c };
        }
    }
}

/// `a`-coordinates of a random `s`-core.
pub fn random_core<R: Rng>(rng: &mut R, s: u64, bound: i64) -> ATuple {
    random_charge(rng, s, bound).to_a().expect("zero-sum charges give an s-core")
}

/// Random `u`-coordinates (entries of either sign) for the given `t` and `s`.
pub fn random_u<R: Rng>(rng: &mut R, t: u64, s: u64, bound: i64) -> Result<UTuple> {
    let target = (s / 2) as i64;
    loop {
        let mut u: Vec<i64> = (0..t / 2).map(|_| rng.random_range(-bound..=bound)).collect();
        let last = target - u.iter().sum::<i64>();
        if last.abs() <= bound + target {
            u.push(last);
            return UTuple::new(t, s, u);
        }
    }
}
