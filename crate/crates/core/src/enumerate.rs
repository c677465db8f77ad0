//! Exhaustive generation and closed-form counts of simultaneous cores.
//!
//! Every family is enumerated in coordinates: `(s,t)`-cores are the points of
//! `TD_t(s)`, self-conjugate ones come from `u`-coordinates, and the
//! `(m, m+d, m+2d)`-cores come from two different `z`-coordinate boxes.
//! Collected output is always sorted lexicographically by `z`.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_integer::{binomial, multinomial, Integer};
use num_traits::{ToPrimitive, Zero};

use crate::betaset::ATuple;
use crate::coords::{require_coprime, u_to_z, weighted_index_sum, ZTuple};
use crate::error::{CoreError, Result};
use crate::modular::coprime;
use crate::par::{self, Execution};
use crate::partition::Partition;

/// One core seen through all of its coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreRecord {
    pub z: ZTuple,
    pub a: ATuple,
    pub partition: Partition,
    pub size: u64,
    pub stab: Option<BigUint>,
}

impl CoreRecord {
    /// Builds the record of the `t`-core with the given `z`-coordinates.
    pub fn from_z(z: ZTuple) -> Self {
        let a = z.to_a();
        let partition = a.to_partition();
        let size = partition.size();
        Self {
            z,
            a,
            partition,
            size,
            stab: None,
        }
    }

    /// The record as a JSON object with keys `z`, `a`, `parts`, `size` and,
    /// when present, `stab` (a number, or a string past `u64`).
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("z".into(), self.z.as_slice().into());
        obj.insert("a".into(), self.a.as_slice().into());
        obj.insert("parts".into(), self.partition.parts().into());
        obj.insert("size".into(), self.size.into());
        if let Some(stab) = &self.stab {
            let value = match stab.to_u64() {
                Some(v) => v.into(),
                None => stab.to_string().into(),
            };
            obj.insert("stab".into(), value);
        }
        serde_json::Value::Object(obj)
    }

    /// One JSON object, e.g. `{"z":[0,1,1],"a":[0,1,2],"parts":[],"size":0}`.
    pub fn to_json_line(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn csv_header(with_stab: bool) -> &'static str {
        if with_stab {
            "z;a;parts;size;stab"
        } else {
            "z;a;parts;size"
        }
    }

    pub fn to_csv_row(&self) -> String {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let mut row = format!(
            "{};{};{};{}",
            join(self.z.as_slice()),
            join(self.a.as_slice()),
            self.partition.to_csv_cell(),
            self.size
        );
        if let Some(stab) = &self.stab {
            row.push(';');
            row.push_str(&stab.to_string());
        }
        row
    }
}

/// How the coordinate space is searched.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Every tuple in the box, kept when it satisfies the congruence.
    #[default]
    Filter,
    /// One Lyndon word per rotation class, rotated into the congruence.
    Necklace,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    pub strategy: Strategy,
    pub execution: Execution,
}

impl EnumOptions {
    pub fn new(strategy: Strategy, execution: Execution) -> Self {
        Self { strategy, execution }
    }
}

/// Which of the two triple-core parameterizations to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TripleMethod {
    #[default]
    Symmetric,
    Asymmetric,
}

/// A box of integer tuples searched by the generators.
#[derive(Clone, Copy, Debug)]
struct Space {
    len: usize,
    total: i64,
    lo: i64,
    hi: i64,
    /// keep only `Σ j·x_j ≡ 0 (mod len)`
    congruence: bool,
    /// require `x_j + x_{j+1} ≥ 1` cyclically
    no_adjacent_zeros: bool,
}

impl Space {
    fn feasible(&self, remaining_sum: i64, remaining_len: usize) -> bool {
        let r = remaining_len as i64;
        remaining_sum >= r * self.lo && remaining_sum <= r * self.hi
    }

    fn cyclic_ok(&self, x: &[i64]) -> bool {
        !self.no_adjacent_zeros || (0..x.len()).all(|j| x[j] + x[(j + 1) % x.len()] >= 1)
    }

    /// Feasible prefixes of length at most two; each is one unit of work.
    /// Refining the first coordinate by the second evens out the split, since
    /// most tuples start with the smallest letter.
    fn prefixes(&self) -> Vec<Vec<i64>> {
        let depth = self.len.min(2);
        let mut out = vec![Vec::new()];
        for level in 0..depth {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    let used: i64 = prefix.iter().sum();
                    (self.lo..=self.hi)
                        .filter(move |&v| self.feasible(self.total - used - v, self.len - level - 1))
                        .filter({
                            let last = prefix.last().copied();
                            move |&v| !(self.no_adjacent_zeros && v == 0 && last == Some(0))
                        })
                        .map(move |v| {
                            let mut next = prefix.clone();
                            next.push(v);
                            next
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out
    }

    /// Lexicographic walk over all tuples starting with `prefix`.
    fn walk_from(&self, prefix: &[i64], visit: &mut dyn FnMut(&[i64])) {
        let mut x = Vec::with_capacity(self.len);
        x.extend_from_slice(prefix);
        let used: i64 = prefix.iter().sum();
        self.walk(&mut x, self.total - used, visit);
    }

    fn walk(&self, x: &mut Vec<i64>, remaining: i64, visit: &mut dyn FnMut(&[i64])) {
        if x.len() == self.len {
            if remaining == 0
                && self.cyclic_ok(x)
                && (!self.congruence || weighted_index_sum(x) == 0)
            {
                visit(x);
            }
            return;
        }
        let left = self.len - x.len() - 1;
        for v in self.lo..=self.hi {
            if !self.feasible(remaining - v, left) {
                continue;
            }
            if self.no_adjacent_zeros && v == 0 && x.last() == Some(&0) {
                continue;
            }
            x.push(v);
            self.walk(x, remaining - v, visit);
            x.pop();
        }
    }

    /// FKM generation of Lyndon words starting with `prefix`, each rotated
    /// to its unique representative satisfying the congruence.
    fn necklaces_from(&self, prefix: &[i64], visit: &mut dyn FnMut(&[i64])) {
        let n = self.len;
        let mut a = vec![self.lo; n + 1];
        let mut p = 1;
        for (i, &v) in prefix.iter().enumerate() {
            let pos = i + 1;
            let start = a[pos - p];
            if v < start {
                return;
            }
            if v > start {
                p = pos;
            }
            a[pos] = v;
        }
        let used: i64 = prefix.iter().sum();
        let mut rotated = vec![0; n];
        self.fkm(&mut a, prefix.len() + 1, p, used, &mut |word: &[i64]| {
            let r = rotation_index(word, weighted_index_sum(word), word.iter().sum());
            for (j, slot) in rotated.iter_mut().enumerate() {
                *slot = word[(r + j) % n];
            }
            visit(&rotated);
        });
    }

    fn fkm(&self, a: &mut Vec<i64>, pos: usize, p: usize, sum: i64, out: &mut dyn FnMut(&[i64])) {
        let n = self.len;
        if pos > n {
            if p == n && sum == self.total && self.cyclic_ok(&a[1..]) {
                out(&a[1..]);
            }
            return;
        }
        let left = n - pos;
        let start = a[pos - p];
        for v in start..=self.hi {
            if !self.feasible(self.total - sum - v, left) {
                continue;
            }
            if self.no_adjacent_zeros && v == 0 && a[pos - 1] == 0 {
                continue;
            }
            a[pos] = v;
            let next_p = if v == start { p } else { pos };
            self.fkm(a, pos + 1, next_p, sum + v, out);
        }
    }

    fn for_each_point<F>(&self, opts: &EnumOptions, sink: F)
    where
        F: Fn(&[i64]) + Sync + Send,
    {
        let strategy = if self.congruence { opts.strategy } else { Strategy::Filter };
        par::for_each(opts.execution, self.prefixes(), |prefix| match strategy {
            Strategy::Filter => self.walk_from(&prefix, &mut |x| sink(x)),
            Strategy::Necklace => self.necklaces_from(&prefix, &mut |x| sink(x)),
        });
    }
}

/// Given `Σ j·x_j mod t` of `x` and its sum `s`, the rotation `r` with
/// `Σ j·x_{r+j} ≡ 0`. Rotating by one subtracts `s` from the weighted sum.
fn rotation_index(x: &[i64], weighted: i64, s: i64) -> usize {
    let t = x.len() as i64;
    let mut w = weighted;
    for r in 0..t {
        if w.rem_euclid(t) == 0 {
            return r as usize;
        }
        w -= s;
    }
    unreachable!("coprime sum and length always admit a rotation")
}

/// The unique `r ∈ 0..t` such that `(x_r, …, x_{r+t−1})` satisfies
/// `Σ j·x_{r+j} ≡ 0 (mod t)`.
pub fn canonical_cyclic_rep(x: &[i64], s: u64) -> Result<usize> {
    let t = x.len() as u64;
    require_coprime(s, t)?;
    let sum: i64 = x.iter().sum();
    if sum != s as i64 {
        return Err(CoreError::InvalidZ(format!("entries sum to {sum}, expected {s}")));
    }
    Ok(rotation_index(x, weighted_index_sum(x), sum))
}

fn st_space(s: u64, t: u64) -> Space {
    Space {
        len: t as usize,
        total: s as i64,
        lo: 0,
        hi: s as i64,
        congruence: true,
        no_adjacent_zeros: false,
    }
}

fn collect_sorted<F>(space: Space, opts: &EnumOptions, to_record: F) -> Vec<CoreRecord>
where
    F: Fn(&[i64]) -> CoreRecord + Sync + Send,
{
    let out = Mutex::new(Vec::new());
    space.for_each_point(opts, |x| {
        let record = to_record(x);
        out.lock().expect("sink lock").push(record);
    });
    let mut records = out.into_inner().expect("sink lock");
    records.sort_by(|p, q| p.z.cmp(&q.z));
    records
}

/// The points of `TD_t(s)`: nonnegative `z` summing to `s` with
/// `Σ j·z_j ≡ 0 (mod t)`, sorted lexicographically.
pub fn td_points(s: u64, t: u64) -> Result<Vec<ZTuple>> {
    td_points_with(s, t, &EnumOptions::default())
}

pub fn td_points_with(s: u64, t: u64, opts: &EnumOptions) -> Result<Vec<ZTuple>> {
    require_coprime(s, t)?;
    let out = Mutex::new(Vec::new());
    st_space(s, t).for_each_point(opts, |x| {
        out.lock().expect("sink lock").push(ZTuple::from_valid(s, x.to_vec()));
    });
    let mut points = out.into_inner().expect("sink lock");
    points.sort();
    Ok(points)
}

/// All `(s,t)`-cores, sorted by `z`.
pub fn enum_st_cores(s: u64, t: u64) -> Result<Vec<CoreRecord>> {
    enum_st_cores_with(s, t, &EnumOptions::default())
}

pub fn enum_st_cores_with(s: u64, t: u64, opts: &EnumOptions) -> Result<Vec<CoreRecord>> {
    require_coprime(s, t)?;
    Ok(collect_sorted(st_space(s, t), opts, |x| {
        CoreRecord::from_z(ZTuple::from_valid(s, x.to_vec()))
    }))
}

/// Streams every `(s,t)`-core into `sink`. Under [`Strategy::Filter`] with
/// sequential execution records arrive in lexicographic `z` order; otherwise
/// the order is unspecified.
pub fn stream_st_cores<F>(s: u64, t: u64, opts: &EnumOptions, sink: F) -> Result<()>
where
    F: Fn(CoreRecord) + Sync + Send,
{
    require_coprime(s, t)?;
    st_space(s, t).for_each_point(opts, |x| sink(CoreRecord::from_z(ZTuple::from_valid(s, x.to_vec()))));
    Ok(())
}

fn sc_space(s: u64, t: u64) -> Space {
    Space {
        len: (t / 2 + 1) as usize,
        total: (s / 2) as i64,
        lo: 0,
        hi: (s / 2) as i64,
        congruence: false,
        no_adjacent_zeros: false,
    }
}

fn sc_record(u: &[i64], s: u64, t: u64) -> CoreRecord {
    let z = u_to_z(u, t, s).expect("lattice points of the u-simplex are valid");
    CoreRecord::from_z(z)
}

/// All self-conjugate `(s,t)`-cores, generated from `u`-coordinates.
pub fn enum_sc_st_cores(s: u64, t: u64) -> Result<Vec<CoreRecord>> {
    enum_sc_st_cores_with(s, t, &EnumOptions::default())
}

/// The strategy is ignored: the `u`-simplex carries no congruence to filter.
pub fn enum_sc_st_cores_with(s: u64, t: u64, opts: &EnumOptions) -> Result<Vec<CoreRecord>> {
    require_coprime(s, t)?;
    Ok(collect_sorted(sc_space(s, t), opts, |u| sc_record(u, s, t)))
}

pub fn stream_sc_st_cores<F>(s: u64, t: u64, opts: &EnumOptions, sink: F) -> Result<()>
where
    F: Fn(CoreRecord) + Sync + Send,
{
    require_coprime(s, t)?;
    sc_space(s, t).for_each_point(opts, |u| sink(sc_record(u, s, t)));
    Ok(())
}

fn triple_space(m: u64, d: u64, method: TripleMethod) -> (Space, u64) {
    match method {
        TripleMethod::Symmetric => (
            Space {
                len: (m + d) as usize,
                total: d as i64,
                lo: -1,
                hi: 1,
                congruence: true,
                no_adjacent_zeros: false,
            },
            d,
        ),
        TripleMethod::Asymmetric => (
            Space {
                len: m as usize,
                total: (m + d) as i64,
                lo: 0,
                hi: (m + d) as i64,
                congruence: true,
                no_adjacent_zeros: true,
            },
            m + d,
        ),
    }
}

fn require_triple(m: u64, d: u64) -> Result<()> {
    if m == 0 || d == 0 || !coprime(m, d) {
        return Err(CoreError::NotCoprime { s: m, t: d });
    }
    Ok(())
}

/// `(m, m+d, m+2d)`-cores as `(m+d)`-cores with `z ∈ {−1,0,1}^{m+d}`, `s = d`.
pub fn enum_triple_sym(m: u64, d: u64) -> Result<Vec<CoreRecord>> {
    enum_triple_with(m, d, TripleMethod::Symmetric, &EnumOptions::default())
}

/// `(m, m+d, m+2d)`-cores as `(m+d, m)`-cores with no two cyclically
/// adjacent zero `z`-coordinates.
pub fn enum_triple_asym(m: u64, d: u64) -> Result<Vec<CoreRecord>> {
    enum_triple_with(m, d, TripleMethod::Asymmetric, &EnumOptions::default())
}

pub fn enum_triple_with(m: u64, d: u64, method: TripleMethod, opts: &EnumOptions) -> Result<Vec<CoreRecord>> {
    require_triple(m, d)?;
    let (space, s) = triple_space(m, d, method);
    Ok(collect_sorted(space, opts, |x| CoreRecord::from_z(ZTuple::from_valid(s, x.to_vec()))))
}

pub fn stream_triple<F>(m: u64, d: u64, method: TripleMethod, opts: &EnumOptions, sink: F) -> Result<()>
where
    F: Fn(CoreRecord) + Sync + Send,
{
    require_triple(m, d)?;
    let (space, s) = triple_space(m, d, method);
    space.for_each_point(opts, |x| sink(CoreRecord::from_z(ZTuple::from_valid(s, x.to_vec()))));
    Ok(())
}

fn exact_div(num: BigUint, den: u64) -> BigUint {
    let (q, r) = num.div_rem(&BigUint::from(den));
    assert!(r.is_zero(), "closed-form count must divide exactly");
    q
}

/// `C(s+t, t) / (s+t)`.
pub fn count_st(s: u64, t: u64) -> Result<BigUint> {
    require_coprime(s, t)?;
    Ok(exact_div(binomial(BigUint::from(s + t), BigUint::from(t)), s + t))
}

/// `C(⌊s/2⌋ + ⌊t/2⌋, ⌊t/2⌋)`.
pub fn count_sc(s: u64, t: u64) -> Result<BigUint> {
    require_coprime(s, t)?;
    Ok(binomial(BigUint::from(s / 2 + t / 2), BigUint::from(t / 2)))
}

/// `(1/(m+d)) Σ_{i=0}^{⌊m/2⌋} multinom(m+d; i, i+d, m−2i)`.
pub fn count_triple(m: u64, d: u64) -> Result<BigUint> {
    require_triple(m, d)?;
    let total: BigUint = (0..=m / 2)
        .map(|i| multinomial(&[BigUint::from(i), BigUint::from(i + d), BigUint::from(m - 2 * i)]))
        .sum();
    Ok(exact_div(total, m + d))
}
