//! Brute-force references that share no code with the coordinate machinery.
//!
//! Everything here works on [`Partition`] diagrams and plain integer sets:
//! partitions are listed directly, cores are found by inspecting hook
//! lengths, and stabilizers are counted by walking all permutations.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{CoreError, Result};
use crate::modular::rem;
use crate::partition::Partition;

pub use crate::verify::{run_verify_suite, run_verify_suite_with, VerifyConfig, VerifyReport};

/// Largest partition size the oracle will list by default.
pub const DEFAULT_PARTITION_CAP: u64 = 40;

/// Largest set whose permutations are walked explicitly.
pub const PERMUTATION_LIMIT: usize = 8;

/// All partitions of `0..=n_max`, by size and then in decreasing
/// lexicographic order within each size.
pub fn enum_partitions_up_to(n_max: u64) -> Result<Vec<Partition>> {
    enum_partitions_up_to_with_cap(n_max, DEFAULT_PARTITION_CAP)
}

pub fn enum_partitions_up_to_with_cap(n_max: u64, cap: u64) -> Result<Vec<Partition>> {
    if n_max > cap {
        return Err(CoreError::CapExceeded { requested: n_max, cap });
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    for n in 0..=n_max {
        partitions_of(n, n, &mut parts, &mut out);
    }
    Ok(out)
}

fn partitions_of(n: u64, largest: u64, parts: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_parts(parts).expect("generated parts are decreasing"));
        return;
    }
    for p in (1..=largest.min(n)).rev() {
        parts.push(p);
        partitions_of(n - p, p, parts, out);
        parts.pop();
    }
}

/// Partitions of size at most `n_max` having no hook length divisible by any
/// of `moduli`.
pub fn brute_st_cores(moduli: &[u64], n_max: u64) -> Result<Vec<Partition>> {
    Ok(enum_partitions_up_to(n_max)?
        .into_iter()
        .filter(|p| p.avoids_hook_multiples(moduli))
        .collect())
}

/// Counts permutations `π` of `sset` with `π(m) ≡ m (mod t)` and, when
/// `self_conjugate` is set, `π(s−1−m) = s−1−π(m)`.
pub fn brute_stab_count(sset: &[i64], t: u64, self_conjugate: bool, s: u64) -> Result<BigUint> {
    if sset.len() > PERMUTATION_LIMIT {
        return Err(CoreError::TooLarge {
            size: sset.len(),
            limit: PERMUTATION_LIMIT,
        });
    }
    if t == 0 || s == 0 {
        return Err(CoreError::ZeroModulus);
    }
    validate_sset(sset, s)?;
    let mirror = s as i64 - 1;
    if self_conjugate && sset.iter().any(|&m| !sset.contains(&(mirror - m))) {
        return Err(CoreError::InvalidSSet("set is not closed under m -> s-1-m".into()));
    }
    let index_of = |m: i64| sset.iter().position(|&x| x == m);
    let n = sset.len();
    let mut count = BigUint::zero();
    for perm in (0..n).permutations(n) {
        let image = |i: usize| sset[perm[i]];
        let keeps_residues = (0..n).all(|i| rem(image(i) - sset[i], t) == 0);
        let commutes = !self_conjugate
            || (0..n).all(|i| {
                let j = index_of(mirror - sset[i]).expect("closed under mirror");
                image(j) == mirror - image(i)
            });
        if keeps_residues && commutes {
            count += BigUint::one();
        }
    }
    Ok(count)
}

fn validate_sset(sset: &[i64], s: u64) -> Result<()> {
    if sset.len() as u64 != s {
        return Err(CoreError::InvalidSSet(format!("expected {s} elements, got {}", sset.len())));
    }
    let mut seen = vec![false; s as usize];
    for &m in sset {
        let r = rem(m, s) as usize;
        if seen[r] {
            return Err(CoreError::InvalidSSet(format!("residue {r} mod {s} appears twice")));
        }
        seen[r] = true;
    }
    let sum: i64 = sset.iter().sum();
    let expected = (s * (s - 1) / 2) as i64;
    if sum != expected {
        return Err(CoreError::InvalidSSet(format!("elements sum to {sum}, expected {expected}")));
    }
    Ok(())
}

/// The `s`-set `(B+s)∖B` read straight off the parts, where
/// `B = {λ_i − i}`. Returns `None` unless `λ` is an `s`-core.
pub fn sset_from_parts(p: &Partition, s: u64) -> Option<Vec<i64>> {
    if s == 0 || !p.avoids_hook_multiples(&[s]) {
        return None;
    }
    let s = s as i64;
    let len = p.len() as i64;
    let beta = |x: i64| -> bool {
        if x < -len {
            return true;
        }
        (1..=len).any(|i| p.part(i as usize) as i64 - i == x)
    };
    let mut out: Vec<i64> = (-len - s..=p.part(1) as i64 + s)
        .filter(|&x| !beta(x) && beta(x - s))
        .collect();
    out.sort_unstable();
    Some(out)
}

/// Motzkin numbers by `M_n = M_{n−1} + Σ_{k=0}^{n−2} M_k M_{n−2−k}`.
pub fn motzkin(n: usize) -> BigUint {
    let mut m: Vec<BigUint> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let next = if i < 2 {
            BigUint::one()
        } else {
            let mut v = m[i - 1].clone();
            for k in 0..=i - 2 {
                v += &m[k] * &m[i - 2 - k];
            }
            v
        };
        m.push(next);
    }
    m.swap_remove(n)
}

/// Every partition reachable by removing rim `t`-hooks in every possible
/// order until none is left.
pub fn all_removal_results(p: &Partition, t: u64) -> Vec<Partition> {
    use std::collections::{BTreeSet, HashMap};

    fn go(p: &Partition, t: u64, memo: &mut HashMap<Partition, BTreeSet<Partition>>) -> BTreeSet<Partition> {
        if let Some(done) = memo.get(p) {
            return done.clone();
        }
        let hooks: Vec<(usize, usize)> = p
            .cells()
            .filter(|&(r, c)| p.hook_length(r, c).expect("cell in diagram") == t)
            .collect();
        let mut out = BTreeSet::new();
        if hooks.is_empty() {
            out.insert(p.clone());
        }
        for (r, c) in hooks {
            let next = p.remove_rim_hook(r, c).expect("cell in diagram");
            out.extend(go(&next, t, memo));
        }
        memo.insert(p.clone(), out.clone());
        out
    }

    go(p, t, &mut HashMap::new()).into_iter().collect()
}
