//! Changes of variables between `a`-, `z`- and `u`-coordinates of `t`-cores.
//!
//! For `s` coprime to `t` and `k = (s+1)(t−1)/2`, the `z`-coordinates of a
//! `t`-core are
//!
//! ```text
//! z_j = (a_{sj+k} − a_{s(j+1)+k} + s) / t,    j ∈ Z/tZ.
//! ```
//!
//! They parameterize all `t`-cores (entries of any sign, summing to `s`, with
//! `Σ j·z_j ≡ 0 mod t`); the `(s,t)`-cores are exactly the nonnegative ones.
//! Self-conjugate cores have `z_i = z_{−i}` and are further compressed into
//! `u`-coordinates.

use serde::{Deserialize, Serialize};

use crate::betaset::ATuple;
use crate::error::{CoreError, Result};
use crate::modular::{coprime, mod_index, rem};

/// The constant `k = (s+1)(t−1)/2`; integral whenever `gcd(s,t) = 1`.
pub fn shift_constant(s: u64, t: u64) -> i64 {
    let twice = (s as i64 + 1) * (t as i64 - 1);
    assert!(twice % 2 == 0, "k is integral for coprime s, t (s = {s}, t = {t})");
    twice / 2
}

pub(crate) fn require_coprime(s: u64, t: u64) -> Result<()> {
    if s == 0 || t == 0 || !coprime(s, t) {
        return Err(CoreError::NotCoprime { s, t });
    }
    Ok(())
}

/// `z`-coordinates of a `t`-core relative to a parameter `s` coprime to `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawZ")]
pub struct ZTuple {
    t: u64,
    s: u64,
    z: Vec<i64>,
}

#[derive(Deserialize)]
struct RawZ {
    t: u64,
    s: u64,
    z: Vec<i64>,
}

impl TryFrom<RawZ> for ZTuple {
    type Error = CoreError;

    fn try_from(raw: RawZ) -> Result<Self> {
        if raw.z.len() as u64 != raw.t {
            return Err(CoreError::InvalidZ(format!("expected {} entries, got {}", raw.t, raw.z.len())));
        }
        ZTuple::new(raw.s, raw.z)
    }
}

impl ZTuple {
    /// Validates `Σ z_j = s` and `Σ j·z_j ≡ 0 (mod t)` where `t = z.len()`.
    pub fn new(s: u64, z: Vec<i64>) -> Result<Self> {
        let t = z.len() as u64;
        require_coprime(s, t)?;
        let sum: i64 = z.iter().sum();
        if sum != s as i64 {
            return Err(CoreError::InvalidZ(format!("entries sum to {sum}, expected {s}")));
        }
        let moment = weighted_index_sum(&z);
        if moment != 0 {
            return Err(CoreError::InvalidZ(format!("sum of j*z_j is {moment} mod {t}, expected 0")));
        }
        Ok(Self { t, s, z })
    }

    pub(crate) fn from_valid(s: u64, z: Vec<i64>) -> Self {
        debug_assert!(ZTuple::new(s, z.clone()).is_ok());
        Self {
            t: z.len() as u64,
            s,
            z,
        }
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.z
    }

    pub fn get(&self, j: i64) -> i64 {
        self.z[mod_index(j, self.t)]
    }

    /// All entries nonnegative, i.e. the core is also an `s`-core.
    pub fn is_nonnegative(&self) -> bool {
        self.z.iter().all(|&x| x >= 0)
    }

    pub fn is_symmetric(&self) -> bool {
        let t = self.t as i64;
        (0..t).all(|i| self.get(i) == self.get(-i))
    }

    pub fn to_a(&self) -> ATuple {
        z_to_a_unchecked(self)
    }
}

/// `Σ j·x_j mod t` for `j = 0..t`.
pub(crate) fn weighted_index_sum(x: &[i64]) -> i64 {
    let t = x.len() as u64;
    let total = x
        .iter()
        .enumerate()
        .fold(0i64, |acc, (j, &v)| rem(acc + rem(j as i64 * v, t), t));
    rem(total, t)
}

pub fn a_to_z(a: &ATuple, s: u64) -> Result<ZTuple> {
    let t = a.modulus();
    require_coprime(s, t)?;
    let (si, ti) = (s as i64, t as i64);
    let k = shift_constant(s, t);
    let z = (0..ti)
        .map(|j| {
            let diff = a.get(si * j + k) - a.get(si * (j + 1) + k) + si;
            assert!(diff % ti == 0, "a-to-z change of variables must divide exactly");
            diff / ti
        })
        .collect();
    Ok(ZTuple::from_valid(s, z))
}

/// Inverse of [`a_to_z`]:
/// `a_{k+ℓs} = (t−1)/2 + Σ_j ((t−1)/2 − j)·z_{j+ℓ}`, evaluated in doubled
/// integers so the half-integers cancel exactly.
pub fn z_to_a(z: &ZTuple) -> Result<ATuple> {
    let validated = ZTuple::new(z.s, z.z.clone())?;
    Ok(z_to_a_unchecked(&validated))
}

fn z_to_a_unchecked(z: &ZTuple) -> ATuple {
    let (s, t) = (z.s as i64, z.t as i64);
    let k = shift_constant(z.s, z.t);
    let mut a = vec![0i64; t as usize];
    for l in 0..t {
        let twice: i64 = (t - 1) + (0..t).map(|j| (t - 1 - 2 * j) * z.get(j + l)).sum::<i64>();
        assert!(twice % 2 == 0, "z-to-a must land on integers");
        a[mod_index(k + l * s, z.t)] = twice / 2;
    }
    ATuple::new(a).expect("z-to-a image satisfies the a-tuple invariants")
}

/// `a_i ≥ a_{i+s} − s` for every `i`, i.e. the `t`-core is also an `s`-core.
pub fn is_st_core_a(a: &ATuple, s: u64) -> bool {
    let t = a.modulus() as i64;
    let s = s as i64;
    (0..t).all(|i| a.get(i) >= a.get(i + s) - s)
}

/// `a_i + a_{−1−i} = t − 1` for every `i`.
pub fn is_self_conjugate_a(a: &ATuple) -> bool {
    let t = a.modulus() as i64;
    (0..t).all(|i| a.get(i) + a.get(-1 - i) == t - 1)
}

/// `u`-coordinates `(u_0, …, u_{t'})` of a self-conjugate `t`-core, `t' = ⌊t/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawU")]
pub struct UTuple {
    t: u64,
    s: u64,
    u: Vec<i64>,
}

#[derive(Deserialize)]
struct RawU {
    t: u64,
    s: u64,
    u: Vec<i64>,
}

impl TryFrom<RawU> for UTuple {
    type Error = CoreError;

    fn try_from(raw: RawU) -> Result<Self> {
        UTuple::new(raw.t, raw.s, raw.u)
    }
}

impl UTuple {
    /// Validates the length `⌊t/2⌋ + 1` and `Σ u_i = ⌊s/2⌋`.
    pub fn new(t: u64, s: u64, u: Vec<i64>) -> Result<Self> {
        require_coprime(s, t)?;
        if u.len() as u64 != t / 2 + 1 {
            return Err(CoreError::InvalidU(format!("expected {} entries, got {}", t / 2 + 1, u.len())));
        }
        let sum: i64 = u.iter().sum();
        if sum != (s / 2) as i64 {
            return Err(CoreError::InvalidU(format!("entries sum to {sum}, expected {}", s / 2)));
        }
        Ok(Self { t, s, u })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.u
    }

    pub fn is_nonnegative(&self) -> bool {
        self.u.iter().all(|&x| x >= 0)
    }
}

pub fn z_to_u(z: &ZTuple) -> Result<UTuple> {
    let t = z.t as i64;
    let half = t / 2;
    if let Some(i) = (1..t).find(|&i| z.get(i) != z.get(-i)) {
        return Err(CoreError::NotSymmetric { index: i as usize });
    }
    let parity = (z.s % 2) as i64;
    if rem(z.get(0) - parity, 2) != 0 {
        return Err(CoreError::ParityViolation(format!(
            "z_0 = {} has the wrong parity for s = {}",
            z.get(0),
            z.s
        )));
    }
    let mut u = vec![z.get(0).div_euclid(2)];
    if t % 2 == 1 {
        u.extend((1..=half).map(|i| z.get(i)));
    } else {
        let middle = z.get(half);
        if rem(middle, 2) != 0 {
            return Err(CoreError::ParityViolation(format!("z_{half} = {middle} must be even")));
        }
        u.extend((1..half).map(|i| z.get(i)));
        u.push(middle / 2);
    }
    UTuple::new(z.t, z.s, u)
}

pub fn u_to_z(u: &[i64], t: u64, s: u64) -> Result<ZTuple> {
    let u = UTuple::new(t, s, u.to_vec())?;
    let t = u.t as usize;
    let half = t / 2;
    let mut z = vec![0i64; t];
    z[0] = 2 * u.u[0] + (u.s % 2) as i64;
    for i in 1..=half {
        let value = if t.is_multiple_of(2) && i == half { 2 * u.u[i] } else { u.u[i] };
        z[i] = value;
        z[t - i] = value;
    }
    ZTuple::new(u.s, z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: &[i64]) -> ATuple {
        ATuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shift_constant_values() {
        assert_eq!(shift_constant(2, 3), 3);
        assert_eq!(shift_constant(3, 2), 2);
        assert_eq!(shift_constant(3, 4), 6);
    }

    #[test]
    fn a_to_z_examples() {
        assert_eq!(a_to_z(&a(&[0, 1, 2]), 2).unwrap().as_slice(), &[0, 1, 1]);
        assert_eq!(a_to_z(&a(&[3, 1, -1]), 2).unwrap().as_slice(), &[2, 0, 0]);
        assert_eq!(a_to_z(&a(&[0, 1, 2]), 3), Err(CoreError::NotCoprime { s: 3, t: 3 }));
    }

    #[test]
    fn z_to_a_examples() {
        let z = ZTuple::new(2, vec![0, 1, 1]).unwrap();
        assert_eq!(z_to_a(&z).unwrap(), a(&[0, 1, 2]));
        let z = ZTuple::new(2, vec![2, 0, 0]).unwrap();
        assert_eq!(z_to_a(&z).unwrap(), a(&[3, 1, -1]));
        assert!(matches!(ZTuple::new(2, vec![1, 1, 0]), Err(CoreError::InvalidZ(_))));
        assert!(matches!(ZTuple::new(2, vec![0, 0, 1]), Err(CoreError::InvalidZ(_))));
    }

    #[test]
    fn st_core_criterion() {
        assert!(is_st_core_a(&a(&[0, 1, 2]), 2));
        assert!(is_st_core_a(&a(&[3, 1, -1]), 2));
        // (2) is a 3-core with a hook of length 2
        let two = crate::betaset::a_coords(&crate::Partition::from_parts(&[2]).unwrap(), 3).unwrap();
        assert_eq!(two, a(&[0, 4, -1]));
        assert!(!is_st_core_a(&two, 2));
        assert!(is_st_core_a(&two, 4));
    }

    #[test]
    fn self_conjugacy_in_a() {
        assert!(is_self_conjugate_a(&a(&[0, 1, 2])));
        assert!(is_self_conjugate_a(&a(&[3, 1, -1])));
        assert!(!is_self_conjugate_a(&a(&[0, 4, -1])));
    }

    #[test]
    fn u_coordinate_examples() {
        let z = ZTuple::new(2, vec![0, 1, 1]).unwrap();
        assert_eq!(z_to_u(&z).unwrap().as_slice(), &[0, 1]);
        let z = ZTuple::new(3, vec![1, 2]).unwrap();
        assert_eq!(z_to_u(&z).unwrap().as_slice(), &[0, 1]);
        let z = ZTuple::new(3, vec![3, 0]).unwrap();
        let u = z_to_u(&z).unwrap();
        assert_eq!(u.as_slice(), &[1, 0]);
        assert_eq!(u_to_z(u.as_slice(), 2, 3).unwrap(), z);
    }

    #[test]
    fn u_coordinate_errors() {
        let z = ZTuple::new(3, vec![2, 1, 0, 0]).unwrap_err();
        assert!(matches!(z, CoreError::InvalidZ(_)));
        // symmetric but with odd middle entry at t = 4, s = 3
        let z = ZTuple {
            t: 4,
            s: 3,
            z: vec![0, 1, 1, 1],
        };
        assert!(matches!(z_to_u(&z), Err(CoreError::ParityViolation(_))));
        let z = ZTuple::new(3, vec![0, 0, 1, 2]).unwrap();
        assert_eq!(z_to_u(&z), Err(CoreError::NotSymmetric { index: 1 }));
        assert!(matches!(UTuple::new(3, 2, vec![0, 0]), Err(CoreError::InvalidU(_))));
        assert!(matches!(UTuple::new(3, 2, vec![0]), Err(CoreError::InvalidU(_))));
    }

    #[test]
    fn json_shapes() {
        let z = ZTuple::new(2, vec![0, 1, 1]).unwrap();
        assert_eq!(serde_json::to_string(&z).unwrap(), r#"{"t":3,"s":2,"z":[0,1,1]}"#);
        let u = z_to_u(&z).unwrap();
        assert_eq!(serde_json::to_string(&u).unwrap(), r#"{"t":3,"s":2,"u":[0,1]}"#);
        assert!(serde_json::from_str::<ZTuple>(r#"{"t":3,"s":2,"z":[1,1,0]}"#).is_err());
        let back: UTuple = serde_json::from_str(r#"{"t":2,"s":3,"u":[1,0]}"#).unwrap();
        assert_eq!(u_to_z(back.as_slice(), back.t(), back.s()).unwrap().as_slice(), &[3, 0]);
    }
}
