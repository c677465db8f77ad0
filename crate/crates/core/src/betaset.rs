//! Beta-sets, charge, abacus pushes, and `s`-sets of `s`-cores.
//!
//! The beta-set of `λ` is `B = {λ_i − i : i ≥ 1}`. It is infinite but differs
//! from `Z<0` in finitely many places, so it is stored as the pair
//! `(B ∩ Z≥0, Z<0 ∖ B)`. Partitions correspond exactly to the encodings where
//! both finite sets have the same size.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::modular::{mod_index, rem};
use crate::partition::Partition;

/// Canonical finite encoding of a charge-zero beta-set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBeta")]
pub struct BetaSet {
    /// `B ∩ Z≥0`, ascending.
    members: Vec<i64>,
    /// `Z<0 ∖ B`, ascending.
    gaps: Vec<i64>,
}

#[derive(Deserialize)]
struct RawBeta {
    members: Vec<i64>,
    gaps: Vec<i64>,
}

impl TryFrom<RawBeta> for BetaSet {
    type Error = CoreError;

    fn try_from(raw: RawBeta) -> Result<Self> {
        BetaSet::new(raw.members, raw.gaps)
    }
}

impl BetaSet {
    /// Builds an encoding, sorting and deduplicating the input and checking
    /// the sign ranges. Charge is not checked here; see [`BetaSet::to_partition`].
    pub fn new(members: impl IntoIterator<Item = i64>, gaps: impl IntoIterator<Item = i64>) -> Result<Self> {
        let members: BTreeSet<i64> = members.into_iter().collect();
        let gaps: BTreeSet<i64> = gaps.into_iter().collect();
        if let Some(&x) = members.iter().find(|&&x| x < 0) {
            return Err(CoreError::InvalidBeta(format!("member {x} is negative")));
        }
        if let Some(&x) = gaps.iter().find(|&&x| x >= 0) {
            return Err(CoreError::InvalidBeta(format!("gap {x} is nonnegative")));
        }
        Ok(Self {
            members: members.into_iter().collect(),
            gaps: gaps.into_iter().collect(),
        })
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn contains(&self, x: i64) -> bool {
        if x >= 0 {
            self.members.binary_search(&x).is_ok()
        } else {
            self.gaps.binary_search(&x).is_err()
        }
    }

    /// `|B ∩ Z≥0| − |Z<0 ∖ B|`.
    pub fn total_charge(&self) -> i64 {
        self.members.len() as i64 - self.gaps.len() as i64
    }

    /// Every integer below `floor()` lies in `B`.
    fn floor(&self) -> i64 {
        self.gaps.first().copied().unwrap_or(0).min(0)
    }

    /// Every integer above `ceiling()` lies outside `B`.
    fn ceiling(&self) -> i64 {
        self.members.last().copied().unwrap_or(-1)
    }

    pub fn from_partition(p: &Partition) -> Self {
        let len = p.len() as i64;
        let values: Vec<i64> = p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| part as i64 - (i as i64 + 1))
            .collect();
        let mut members: Vec<i64> = values.iter().copied().filter(|&x| x >= 0).collect();
        members.sort_unstable();
        // values below -len all come from the zero tail
        let negatives: BTreeSet<i64> = values.iter().copied().filter(|&x| x < 0).collect();
        let gaps = (-len..0).filter(|x| !negatives.contains(x)).collect();
        Self { members, gaps }
    }

    /// Reads off `λ_i = b_i + i` from the elements `b_1 > b_2 > …` of `B`.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.total_charge() != 0 {
            return Err(CoreError::ChargeNonzero {
                members: self.members.len(),
                gaps: self.gaps.len(),
            });
        }
        let mut parts = Vec::new();
        let descending = self
            .members
            .iter()
            .rev()
            .copied()
            .chain((i64::MIN..0).rev().filter(|x| self.gaps.binary_search(x).is_err()));
        for (i, b) in descending.enumerate() {
            let part = b + i as i64 + 1;
            debug_assert!(part >= 0);
            if part == 0 {
                break;
            }
            parts.push(part as u64);
        }
        Ok(Partition::from_sorted_unchecked(parts))
    }

    /// Johnson's signed charge `c_{s,i}` for `i = 0..s`.
    pub fn charge(&self, s: u64) -> Result<CTuple> {
        if s == 0 {
            return Err(CoreError::ZeroModulus);
        }
        let mut c = vec![0i64; s as usize];
        for &g in &self.gaps {
            c[mod_index(-1 - g, s)] += 1;
        }
        for &m in &self.members {
            c[mod_index(-1 - m, s)] -= 1;
        }
        Ok(CTuple { c })
    }

    /// Robinson's criterion `B − s ⊆ B`.
    pub fn is_s_core(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let s = s as i64;
        (self.floor()..=self.ceiling()).all(|x| !self.contains(x) || self.contains(x - s))
    }

    /// `|B ∖ (B + s)|`, the number of rim `s`-hooks.
    pub fn count_removable(&self, s: u64) -> usize {
        let s = s as i64;
        (self.floor()..=self.ceiling())
            .filter(|&x| self.contains(x) && !self.contains(x - s))
            .count()
    }

    /// Slides every bead down its runner mod `s` until no gaps remain below it.
    pub fn s_push(&self, s: u64) -> Result<BetaSet> {
        if s == 0 {
            return Err(CoreError::ZeroModulus);
        }
        let step = s as i64;
        let lo = self.floor() - step;
        let hi = self.ceiling();
        let mut members = Vec::new();
        let mut gaps = Vec::new();
        for r in 0..step {
            // positions of runner r inside [lo, hi], ascending
            let start = lo + rem(r - lo, s);
            let positions: Vec<i64> = (0..).map(|k| start + k * step).take_while(|&x| x <= hi).collect();
            let beads = positions.iter().filter(|&&x| self.contains(x)).count();
            for (k, &x) in positions.iter().enumerate() {
                let filled = k < beads;
                if filled && x >= 0 {
                    members.push(x);
                } else if !filled && x < 0 {
                    gaps.push(x);
                }
            }
        }
        members.sort_unstable();
        gaps.sort_unstable();
        Ok(BetaSet { members, gaps })
    }

    /// `x ∈ B'` iff `−1 − x ∉ B`.
    pub fn conjugate(&self) -> BetaSet {
        let mut members: Vec<i64> = self.gaps.iter().map(|g| -1 - g).collect();
        let mut gaps: Vec<i64> = self.members.iter().map(|m| -1 - m).collect();
        members.sort_unstable();
        gaps.sort_unstable();
        BetaSet { members, gaps }
    }

    /// `a_{s,i} = s + max(B ∩ (i + sZ))`, defined for `s`-cores.
    pub fn a_coords(&self, s: u64) -> Result<ATuple> {
        if s == 0 {
            return Err(CoreError::ZeroModulus);
        }
        if !self.is_s_core(s) {
            return Err(CoreError::NotACore { modulus: s });
        }
        let step = s as i64;
        let hi = self.ceiling();
        let a = (0..step)
            .map(|i| {
                let mut x = hi - rem(hi - i, s);
                while !self.contains(x) {
                    x -= step;
                }
                x + step
            })
            .collect();
        Ok(ATuple { a })
    }

    /// `S_s = (B + s) ∖ B` for an `s`-core, ascending.
    pub fn s_set(&self, s: u64) -> Result<Vec<i64>> {
        let mut set = self.a_coords(s)?.a;
        set.sort_unstable();
        Ok(set)
    }

    /// Rebuilds the beta-set of the `s`-core with the given `a`-coordinates:
    /// runner `i` is filled exactly below `a_i`.
    pub fn from_a_coords(a: &ATuple) -> BetaSet {
        let s = a.modulus() as i64;
        let mut members = Vec::new();
        let mut gaps = Vec::new();
        for (i, &ai) in a.a.iter().enumerate() {
            let i = i as i64;
            if ai > i {
                // filled nonnegative positions i, i+s, …, ai−s
                members.extend((0..).map(|k| i + k * s).take_while(|&x| x < ai));
            } else {
                // empty negative positions ai, ai+s, …, i−s
                gaps.extend((0..).map(|k| ai + k * s).take_while(|&x| x < i));
            }
        }
        members.sort_unstable();
        gaps.sort_unstable();
        BetaSet { members, gaps }
    }
}

/// Charge tuple `(c_{s,i})_{i ∈ Z/sZ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CTuple {
    pub c: Vec<i64>,
}

impl CTuple {
    pub fn modulus(&self) -> u64 {
        self.c.len() as u64
    }

    /// `c_i` with `i` read mod `s`.
    pub fn get(&self, i: i64) -> i64 {
        self.c[mod_index(i, self.modulus())]
    }

    pub fn sum(&self) -> i64 {
        self.c.iter().sum()
    }

    /// `a_{s,i} = i − s·c_{s,−1−i}`.
    pub fn to_a(&self) -> Result<ATuple> {
        if self.sum() != 0 {
            return Err(CoreError::InvalidA(format!("charges sum to {}", self.sum())));
        }
        let s = self.modulus() as i64;
        Ok(ATuple {
            a: (0..s).map(|i| i - s * self.get(-1 - i)).collect(),
        })
    }
}

/// Fayers' `a`-coordinates `(a_{t,i})_{i ∈ Z/tZ}` of a `t`-core.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ATuple {
    pub(crate) a: Vec<i64>,
}

impl ATuple {
    /// Checks `a_i ≡ i (mod t)` and `Σ a_i = t(t−1)/2`.
    pub fn new(a: Vec<i64>) -> Result<Self> {
        let t = a.len() as i64;
        if t == 0 {
            return Err(CoreError::ZeroModulus);
        }
        if let Some(i) = (0..a.len()).find(|&i| rem(a[i] - i as i64, t as u64) != 0) {
            return Err(CoreError::InvalidA(format!("a[{i}] = {} is not congruent to {i} mod {t}", a[i])));
        }
        let sum: i64 = a.iter().sum();
        if sum != t * (t - 1) / 2 {
            return Err(CoreError::InvalidA(format!("entries sum to {sum}, expected {}", t * (t - 1) / 2)));
        }
        Ok(Self { a })
    }

    /// The empty partition, `a_i = i`.
    pub fn trivial(t: u64) -> Self {
        Self {
            a: (0..t as i64).collect(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.a.len() as u64
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.a
    }

    /// `a_i` with `i` read mod `t`.
    pub fn get(&self, i: i64) -> i64 {
        self.a[mod_index(i, self.modulus())]
    }

    /// Inverse of [`CTuple::to_a`]: `c_{t,i} = (−1−i − a_{t,−1−i}) / t`.
    pub fn to_c(&self) -> CTuple {
        let t = self.modulus() as i64;
        let c = (0..t)
            .map(|i| {
                let j = -1 - i;
                let diff = rem(j, t as u64) - self.get(j);
                debug_assert_eq!(diff % t, 0);
                diff / t
            })
            .collect();
        CTuple { c }
    }

    pub fn to_beta(&self) -> BetaSet {
        BetaSet::from_a_coords(self)
    }

    pub fn to_partition(&self) -> Partition {
        self.to_beta()
            .to_partition()
            .expect("a-coordinates always describe a charge-zero beta-set")
    }

    /// `a_{t,i}(λ') = t − 1 − a_{t,−1−i}(λ)`.
    pub fn conjugate(&self) -> ATuple {
        let t = self.modulus() as i64;
        ATuple {
            a: (0..t).map(|i| t - 1 - self.get(-1 - i)).collect(),
        }
    }
}

pub fn beta_from_partition(p: &Partition) -> BetaSet {
    BetaSet::from_partition(p)
}

pub fn partition_from_beta(b: &BetaSet) -> Result<Partition> {
    b.to_partition()
}

/// The `t`-core of `p`, computed as the `t`-push of its beta-set.
pub fn t_core(p: &Partition, t: u64) -> Result<Partition> {
    BetaSet::from_partition(p).s_push(t)?.to_partition()
}

pub fn is_s_core(p: &Partition, s: u64) -> bool {
    BetaSet::from_partition(p).is_s_core(s)
}

pub fn a_coords(p: &Partition, s: u64) -> Result<ATuple> {
    BetaSet::from_partition(p).a_coords(s)
}

pub fn s_set(p: &Partition, s: u64) -> Result<Vec<i64>> {
    BetaSet::from_partition(p).s_set(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    fn beta(members: &[i64], gaps: &[i64]) -> BetaSet {
        BetaSet::new(members.iter().copied(), gaps.iter().copied()).unwrap()
    }

    #[test]
    fn beta_sets_of_small_partitions() {
        assert_eq!(BetaSet::from_partition(&p(&[])), beta(&[], &[]));
        assert_eq!(BetaSet::from_partition(&p(&[3, 2, 2])), beta(&[0, 2], &[-3, -2]));
        assert_eq!(BetaSet::from_partition(&p(&[5, 5])), beta(&[3, 4], &[-2, -1]));
    }

    #[test]
    fn partitions_from_beta_sets() {
        assert_eq!(beta(&[], &[]).to_partition().unwrap(), p(&[]));
        assert_eq!(beta(&[0, 2], &[-2, -3]).to_partition().unwrap(), p(&[3, 2, 2]));
        assert_eq!(beta(&[3, 4], &[-1, -2]).to_partition().unwrap(), p(&[5, 5]));
        assert_eq!(
            beta(&[0], &[]).to_partition(),
            Err(CoreError::ChargeNonzero { members: 1, gaps: 0 })
        );
    }

    #[test]
    fn beta_json_shape() {
        let b = BetaSet::from_partition(&p(&[3, 2, 2]));
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"members":[0,2],"gaps":[-3,-2]}"#);
    }

    #[test]
    fn charges() {
        assert_eq!(BetaSet::from_partition(&p(&[])).charge(4).unwrap().c, vec![0, 0, 0, 0]);
        assert_eq!(BetaSet::from_partition(&p(&[5, 5])).charge(4).unwrap().c, vec![0, 1, 0, -1]);
        assert_eq!(BetaSet::from_partition(&p(&[1, 1])).charge(4).unwrap().c, vec![0, 1, 0, -1]);
    }

    #[test]
    fn robinson_criterion() {
        assert!(is_s_core(&p(&[]), 3));
        assert!(!is_s_core(&p(&[5, 5]), 4));
        assert!(is_s_core(&p(&[1, 1]), 4));
        assert!(!is_s_core(&p(&[2, 1]), 3));
        assert!(is_s_core(&p(&[2, 1]), 2));
    }

    #[test]
    fn pushes_and_t_cores() {
        let b = BetaSet::from_partition(&p(&[5, 5]));
        assert_eq!(b.s_push(4).unwrap(), BetaSet::from_partition(&p(&[1, 1])));
        let core = BetaSet::from_partition(&p(&[1, 1]));
        assert_eq!(core.s_push(4).unwrap(), core);
        assert_eq!(BetaSet::from_partition(&p(&[3, 2, 2])).s_push(1).unwrap(), beta(&[], &[]));
        assert_eq!(t_core(&p(&[5, 5]), 4).unwrap(), p(&[1, 1]));
        assert_eq!(t_core(&p(&[5, 5]), 3).unwrap(), p(&[5, 5]).t_core_by_diagram(3).unwrap());
        assert_eq!(t_core(&p(&[1, 1]), 4).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn a_coordinates() {
        assert_eq!(a_coords(&p(&[]), 3).unwrap().a, vec![0, 1, 2]);
        assert_eq!(a_coords(&p(&[1]), 3).unwrap().a, vec![3, 1, -1]);
        assert_eq!(a_coords(&p(&[5, 5]), 4), Err(CoreError::NotACore { modulus: 4 }));
        assert_eq!(s_set(&p(&[1]), 2).unwrap(), vec![-1, 2]);
    }

    #[test]
    fn a_tuple_validation() {
        assert!(ATuple::new(vec![3, 1, -1]).is_ok());
        assert!(ATuple::new(vec![1, 0, 2]).is_err());
        assert!(ATuple::new(vec![3, 1, 2]).is_err());
        assert!(ATuple::new(vec![]).is_err());
    }

    #[test]
    fn a_to_partition_round_trip() {
        for parts in [&[][..], &[1], &[2], &[1, 1], &[3, 1, 1], &[4, 2]] {
            let lam = p(parts);
            for t in 2..6 {
                if let Ok(a) = a_coords(&lam, t) {
                    assert_eq!(a.to_partition(), lam);
                    assert_eq!(a.to_c(), BetaSet::from_partition(&lam).charge(t).unwrap());
                    assert_eq!(a.to_c().to_a().unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn conjugate_beta_sets() {
        assert_eq!(beta(&[], &[]).conjugate(), beta(&[], &[]));
        assert_eq!(
            BetaSet::from_partition(&p(&[3, 2, 2])).conjugate(),
            BetaSet::from_partition(&p(&[3, 3, 1]))
        );
        assert_eq!(
            BetaSet::from_partition(&p(&[1, 1])).conjugate(),
            BetaSet::from_partition(&p(&[2]))
        );
    }

    #[test]
    fn zero_modulus_is_rejected() {
        let b = BetaSet::from_partition(&p(&[2]));
        assert_eq!(b.charge(0), Err(CoreError::ZeroModulus));
        assert_eq!(b.s_push(0), Err(CoreError::ZeroModulus));
        assert!(!b.is_s_core(0));
    }
}
