//! Exact sizes, stabilizer orders, averages and cyclic sums over `(s,t)`-cores.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, multinomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::betaset::{ATuple, CTuple};
use crate::coords::{require_coprime, z_to_u, UTuple, ZTuple};
use crate::enumerate::{enum_sc_st_cores, enum_st_cores, td_points, CoreRecord};
use crate::error::{CoreError, Result};

/// An arbitrary-precision rational in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(pub BigRational);

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<BigInt>().map_err(|e| format!("bad rational {text:?}: {e}"));
        match text.split_once('/') {
            None => Ok(Self::integer(parse(text)?)),
            Some((p, q)) => {
                let q = parse(q)?;
                if q.is_zero() {
                    return Err(format!("bad rational {text:?}: zero denominator"));
                }
                Ok(Self::new(parse(p)?, q))
            }
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn to_size(r: BigRational) -> u64 {
    assert!(r.is_integer() && !r.is_negative(), "core size must be a nonnegative integer, got {r}");
    r.to_integer().to_u64().expect("core size fits in u64")
}

/// `|λ| = −(t²−1)/24 + (1/2t) Σ (a_i − (t−1)/2)²`.
pub fn size_from_a(a: &ATuple) -> u64 {
    let t = a.modulus() as i64;
    let centre = rat(t - 1, 2);
    let squares: BigRational = a
        .as_slice()
        .iter()
        .map(|&x| {
            let d = BigRational::from_integer(BigInt::from(x)) - &centre;
            &d * &d
        })
        .sum();
    to_size(squares / rat(2 * t, 1) - rat(t * t - 1, 24))
}

/// `|λ| = Σ ((t/2) c_i² − ((t−1)/2 − i) c_i)`.
pub fn size_from_c(c: &CTuple) -> u64 {
    let t = c.modulus() as i64;
    let total: BigRational = c
        .c
        .iter()
        .enumerate()
        .map(|(i, &ci)| {
            let ci = BigRational::from_integer(BigInt::from(ci));
            rat(t, 2) * &ci * &ci - rat(t - 1 - 2 * i as i64, 2) * ci
        })
        .sum();
    to_size(total)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn nonnegative(values: &[i64]) -> Result<()> {
    match values.iter().position(|&v| v < 0) {
        Some(index) => Err(CoreError::NegativeEntry {
            index,
            value: values[index],
        }),
        None => Ok(()),
    }
}

/// `Π z_j!`.
pub fn stab_size(z: &ZTuple) -> Result<BigUint> {
    nonnegative(z.as_slice())?;
    Ok(z.as_slice().iter().map(|&v| factorial(v as u64)).product())
}

/// `2^{u_0} Π u_i!` for odd `t`, `2^{u_0 + u_{t'}} Π u_i!` for even `t`.
pub fn stab_size_sc(u: &UTuple) -> Result<BigUint> {
    let values = u.as_slice();
    nonnegative(values)?;
    let mut twos = values[0] as u32;
    if u.t().is_multiple_of(2) {
        twos += values[values.len() - 1] as u32;
    }
    let product: BigUint = values.iter().map(|&v| factorial(v as u64)).product();
    Ok(product << twos)
}

/// Stabilizer order of an enumerated record; `self_conjugate` selects the
/// formula for the self-conjugate action.
pub fn record_stab(record: &CoreRecord, self_conjugate: bool) -> Result<BigUint> {
    if self_conjugate {
        stab_size_sc(&z_to_u(&record.z)?)
    } else {
        stab_size(&record.z)
    }
}

pub fn attach_stab(records: &mut [CoreRecord], self_conjugate: bool) -> Result<()> {
    for r in records.iter_mut() {
        r.stab = Some(record_stab(r, self_conjugate)?);
    }
    Ok(())
}

fn family(s: u64, t: u64, self_conjugate: bool) -> Result<Vec<CoreRecord>> {
    if self_conjugate {
        enum_sc_st_cores(s, t)
    } else {
        enum_st_cores(s, t)
    }
}

/// `s!` for the general action, `2^{s'} s'!` for the self-conjugate one;
/// every stabilizer order divides it.
fn weight_scale(s: u64, self_conjugate: bool) -> BigUint {
    if self_conjugate {
        factorial(s / 2) << (s / 2) as u32
    } else {
        factorial(s)
    }
}

fn scaled_weights(records: &[CoreRecord], s: u64, weighted: bool, self_conjugate: bool) -> Result<Vec<BigUint>> {
    if !weighted {
        return Ok(vec![BigUint::one(); records.len()]);
    }
    let scale = weight_scale(s, self_conjugate);
    records
        .iter()
        .map(|r| {
            let stab = record_stab(r, self_conjugate)?;
            let (q, rem) = scale.div_rem(&stab);
            assert!(rem.is_zero(), "stabilizer order divides the group order");
            Ok(q)
        })
        .collect()
}

/// `Σ w(λ)|λ| / Σ w(λ)` with `w ≡ 1` or `w = 1/|stab|`.
pub fn average_size(s: u64, t: u64, weighted: bool, self_conjugate: bool) -> Result<ExactRational> {
    let records = family(s, t, self_conjugate)?;
    let weights = scaled_weights(&records, s, weighted, self_conjugate)?;
    let mut numer = BigUint::zero();
    let mut denom = BigUint::zero();
    for (r, w) in records.iter().zip(&weights) {
        numer += w * r.size;
        denom += w;
    }
    Ok(ExactRational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// The closed forms the averages are known to take.
pub fn average_size_closed_form(s: u64, t: u64, weighted: bool, self_conjugate: bool) -> ExactRational {
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    let one = BigInt::one();
    let numer = match (weighted, self_conjugate) {
        (false, _) => (&s - &one) * (&t - &one) * (&s + &t + &one),
        (true, false) => (&s - &one) * (&t * &t - &one),
        (true, true) if t.is_odd() => (&s - &one) * (&t * &t - &one),
        (true, true) => (&s - &one) * (&t * &t + BigInt::from(2)),
    };
    ExactRational::new(numer, 24)
}

/// `Σ w(λ) |λ|^e` over the `(s,t)`-cores (or the self-conjugate ones).
pub fn moment_sum(s: u64, t: u64, e: u32, weighted: bool, self_conjugate: bool) -> Result<ExactRational> {
    let records = family(s, t, self_conjugate)?;
    let mut total = BigRational::zero();
    for r in &records {
        let power = BigInt::from(r.size).pow(e);
        total += if weighted {
            BigRational::new(power, BigInt::from(record_stab(r, self_conjugate)?))
        } else {
            BigRational::from_integer(power)
        };
    }
    Ok(ExactRational(total))
}

/// One evaluated cyclic-sum identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicSumReport {
    pub s: u64,
    pub t: u64,
    pub checks: Vec<IdentityCheck>,
}

impl CyclicSumReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

fn int(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

fn big_pow(base: u64, exp: u64) -> BigRational {
    int(&BigUint::from(base).pow(exp as u32))
}

/// Sums each of the seven exponential and ordinary identities over
/// `TD_t(s)` and compares with its closed form. The quadratic identities are
/// checked for the square term and for every shift `r ≢ 0`; the mixed ones
/// are vacuous when `t = 1`.
pub fn verify_cyclic_sum_identities(s: u64, t: u64) -> Result<CyclicSumReport> {
    require_coprime(s, t)?;
    let points = td_points(s, t)?;
    let tt = BigRational::from_integer(BigInt::from(t));
    let n = t as usize;
    let coeff = |z: &ZTuple| {
        let parts: Vec<BigUint> = z.as_slice().iter().map(|&v| BigUint::from(v as u64)).collect();
        int(&multinomial(&parts))
    };
    let avg = |z: &ZTuple, f: &dyn Fn(i64, i64) -> i64, r: usize| -> BigRational {
        let x = z.as_slice();
        let total: i64 = (0..n).map(|i| f(x[i], x[(i + r) % n])).sum();
        BigRational::new(BigInt::from(total), BigInt::from(t))
    };
    let linear = |a: i64, _: i64| a;
    let falling = |a: i64, _: i64| a * (a - 1);
    let product = |a: i64, b: i64| a * b;

    type Term<'a> = Option<(&'a dyn Fn(i64, i64) -> i64, usize)>;
    let exp_sum = |f: Term| -> BigRational {
        points
            .iter()
            .map(|z| match f {
                None => coeff(z),
                Some((g, r)) => coeff(z) * avg(z, g, r),
            })
            .sum()
    };
    let ord_sum = |f: Term| -> BigRational {
        points
            .iter()
            .map(|z| match f {
                None => BigRational::one(),
                Some((g, r)) => avg(z, g, r),
            })
            .sum()
    };
    let binom = |n: u64, k: u64| -> BigRational {
        if k > n {
            BigRational::zero()
        } else {
            int(&binomial(BigUint::from(n), BigUint::from(k)))
        }
    };

    let exp_quadratic = if s >= 2 {
        BigRational::from_integer(BigInt::from(s * (s - 1))) * big_pow(t, s - 2) / &tt
    } else {
        BigRational::zero()
    };
    let mut checks = Vec::new();
    let mut push = |name: String, lhs: BigRational, rhs: BigRational| {
        checks.push(IdentityCheck {
            pass: lhs == rhs,
            name,
            lhs: ExactRational(lhs),
            rhs: ExactRational(rhs),
        });
    };
    push("exponential constant".into(), exp_sum(None), big_pow(t, s) / &tt);
    push(
        "exponential linear".into(),
        exp_sum(Some((&linear, 0))),
        BigRational::from_integer(BigInt::from(s)) * big_pow(t, s - 1) / &tt,
    );
    push("exponential quadratic (square)".into(), exp_sum(Some((&falling, 0))), exp_quadratic.clone());
    for r in 1..n {
        push(
            format!("exponential quadratic (mixed, r = {r})"),
            exp_sum(Some((&product, r))),
            exp_quadratic.clone(),
        );
    }
    push("ordinary constant".into(), ord_sum(None), binom(s + t - 1, t - 1) / &tt);
    push("ordinary linear".into(), ord_sum(Some((&linear, 0))), binom(s + t - 1, t) / &tt);
    push(
        "ordinary square quadratic".into(),
        ord_sum(Some((&falling, 0))),
        BigRational::from_integer(BigInt::from(2)) * binom(s + t - 1, t + 1) / &tt,
    );
    for r in 1..n {
        push(
            format!("ordinary mixed quadratic (r = {r})"),
            ord_sum(Some((&product, r))),
            binom(s + t - 1, t + 1) / &tt,
        );
    }
    Ok(CyclicSumReport { s, t, checks })
}
