//! The verification suite: every structural property of the library checked
//! against exhaustive scans, seeded random samples and the brute-force
//! references in [`crate::oracle`].

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::betaset::{a_coords, is_s_core, s_set, t_core, BetaSet};
use crate::coords::{a_to_z, is_self_conjugate_a, is_st_core_a, shift_constant, u_to_z, z_to_a, z_to_u, ZTuple};
use crate::enumerate::{
    count_sc, count_st, count_triple, enum_sc_st_cores, enum_st_cores, enum_triple_asym, enum_triple_sym,
};
use crate::modular::{coprime, mod_index, rem};
use crate::oracle::{
    all_removal_results, brute_st_cores, brute_stab_count, enum_partitions_up_to, motzkin, sset_from_parts,
    DEFAULT_PARTITION_CAP,
};
use crate::par::{self, Execution};
use crate::partition::Partition;
use crate::sample::{random_core, random_u, rng};
use crate::stats::{
    average_size, average_size_closed_form, size_from_a, size_from_c, stab_size, stab_size_sc,
    verify_cyclic_sum_identities,
};

/// Outcome of one check at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check: String,
    pub params: Vec<u64>,
    pub pass: bool,
    pub witness: Option<String>,
    pub compared: u64,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params.iter().join(",");
        if self.pass {
            write!(f, "PASS {} [{}] compared={}", self.check, params, self.compared)
        } else {
            write!(
                f,
                "FAIL {} [{}] compared={} witness: {}",
                self.check,
                params,
                self.compared,
                self.witness.as_deref().unwrap_or("")
            )
        }
    }
}

/// Scale and fixtures of a suite run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub s_max: u64,
    pub t_max: u64,
    pub n_max: u64,
    /// random draws per parameter point for the sampled checks
    pub samples: usize,
    /// replaces the stabilizer formula, for exercising failure reporting
    pub stab_override: Option<fn(&ZTuple) -> BigUint>,
    pub execution: Execution,
}

impl VerifyConfig {
    pub fn new(s_max: u64, t_max: u64, n_max: u64) -> Self {
        Self {
            s_max,
            t_max,
            n_max,
            samples: 500,
            stab_override: None,
            execution: Execution::default(),
        }
    }
}

struct Check {
    report: VerifyReport,
}

impl Check {
    fn new(name: &str, params: &[u64]) -> Self {
        Self {
            report: VerifyReport {
                check: name.to_string(),
                params: params.to_vec(),
                pass: true,
                witness: None,
                compared: 0,
            },
        }
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.report.compared += 1;
        if !ok && self.report.pass {
            self.report.pass = false;
            self.report.witness = Some(witness());
        }
    }

    fn done(self) -> VerifyReport {
        self.report
    }
}

struct Ctx {
    cfg: VerifyConfig,
    partitions: Vec<Partition>,
}

impl Ctx {
    fn up_to(&self, n: u64) -> impl Iterator<Item = &Partition> {
        let n = n.min(self.cfg.n_max);
        self.partitions.iter().filter(move |p| p.size() <= n)
    }

    fn moduli(&self) -> u64 {
        self.cfg.s_max.max(self.cfg.t_max)
    }

    fn pairs(&self) -> Vec<(u64, u64)> {
        (1..=self.cfg.s_max)
            .cartesian_product(1..=self.cfg.t_max)
            .filter(|&(s, t)| coprime(s, t))
            .collect()
    }

    fn seed(&self, tag: u64, s: u64, t: u64) -> u64 {
        0x5eed_0000 ^ (tag << 16) ^ (s << 8) ^ t
    }
}

type Job = fn(&Ctx) -> Vec<VerifyReport>;

const JOBS: &[Job] = &[
    conjugate_involution,
    hook_multiset_conjugation,
    diagram_core_has_no_hooks,
    removal_order_independence,
    beta_round_trip,
    hook_bijection,
    push_charge_conservation,
    charge_to_a_consistency,
    conjugate_charge_duality,
    core_commutes_with_conjugation,
    conjugate_sset,
    olsson_closure,
    faithful_invariant,
    sset_tset_interaction,
    a_z_round_trip,
    z_u_round_trip,
    shift_constant_integral,
    nonnegativity_equivalence,
    z_counts_sset_residues,
    self_conjugacy_transfer,
    counts_match_closed_form,
    cyclic_orbits,
    self_conjugate_subcollection,
    triple_enumerations_agree,
    enumerated_cores_pass_hook_checks,
    motzkin_column,
    average_theorems,
    average_symmetry,
    stabilizer_vs_permutations,
    size_formulas_agree,
    cyclic_sum_identities,
    parameterization_matches_oracle,
    diagram_core_matches_abacus,
];

/// Runs every check at the given scale, sorted by check name then parameters.
pub fn run_verify_suite(s_max: u64, t_max: u64, n_max: u64) -> Vec<VerifyReport> {
    run_verify_suite_with(&VerifyConfig::new(s_max, t_max, n_max))
}

pub fn run_verify_suite_with(cfg: &VerifyConfig) -> Vec<VerifyReport> {
    let n = cfg.n_max.min(DEFAULT_PARTITION_CAP);
    let ctx = Ctx {
        cfg: VerifyConfig { n_max: n, ..cfg.clone() },
        partitions: enum_partitions_up_to(n).expect("bounded by the cap"),
    };
    let mut reports: Vec<VerifyReport> = par::map(cfg.execution, JOBS.to_vec(), |job| job(&ctx))
        .into_iter()
        .flatten()
        .collect();
    reports.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
    reports
}

fn conjugate_involution(ctx: &Ctx) -> Vec<VerifyReport> {
    let mut c = Check::new("partition.conjugate_involution", &[ctx.cfg.n_max.min(20)]);
    for p in ctx.up_to(20) {
        c.expect(p.conjugate().conjugate() == *p, || format!("lambda = {p}"));
    }
    vec![c.done()]
}

fn hook_multiset_conjugation(ctx: &Ctx) -> Vec<VerifyReport> {
    let mut c = Check::new("partition.hook_multiset_conjugation", &[ctx.cfg.n_max.min(12)]);
    for p in ctx.up_to(12) {
        c.expect(p.hook_lengths() == p.conjugate().hook_lengths(), || format!("lambda = {p}"));
    }
    vec![c.done()]
}

fn diagram_core_has_no_hooks(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.cfg.t_max)
        .map(|t| {
            let mut c = Check::new("partition.diagram_core_has_no_t_hooks", &[t]);
            for p in ctx.up_to(14) {
                let core = p.t_core_by_diagram(t).expect("t >= 1");
                c.expect(core.avoids_hook_multiples(&[t]), || format!("lambda = {p}, core = {core}"));
            }
            c.done()
        })
        .collect()
}

fn removal_order_independence(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.cfg.t_max.min(5))
        .map(|t| {
            let mut c = Check::new("partition.removal_order_independence", &[t]);
            for p in ctx.up_to(12) {
                let ends = all_removal_results(p, t);
                c.expect(ends.len() == 1, || format!("lambda = {p} reaches {ends:?}"));
            }
            c.done()
        })
        .collect()
}

fn beta_round_trip(ctx: &Ctx) -> Vec<VerifyReport> {
    let mut c = Check::new("betaset.round_trip", &[ctx.cfg.n_max.min(20)]);
    for p in ctx.up_to(20) {
        let back = BetaSet::from_partition(p).to_partition();
        c.expect(back.as_ref() == Ok(p), || format!("lambda = {p}, got {back:?}"));
    }
    vec![c.done()]
}

fn hook_bijection(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.moduli().min(6))
        .map(|s| {
            let mut c = Check::new("betaset.hook_bijection", &[s]);
            for p in ctx.up_to(12) {
                let cells = p.hook_lengths().iter().filter(|&&h| h == s).count();
                let removable = BetaSet::from_partition(p).count_removable(s);
                c.expect(cells == removable, || format!("lambda = {p}: {cells} hooks vs {removable} beads"));
            }
            c.done()
        })
        .collect()
}

fn push_charge_conservation(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.moduli())
        .map(|s| {
            let mut c = Check::new("betaset.push_charge_conservation", &[s]);
            for p in ctx.up_to(14) {
                let b = BetaSet::from_partition(p);
                let pushed = b.s_push(s).expect("s >= 1");
                c.expect(pushed.is_s_core(s), || format!("push of {p} is not an {s}-core"));
                c.expect(pushed.charge(s) == b.charge(s), || format!("lambda = {p}"));
            }
            c.done()
        })
        .collect()
}

fn charge_to_a_consistency(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.moduli())
        .map(|s| {
            let mut c = Check::new("betaset.charge_a_consistency", &[s]);
            let mut check = |p: &Partition| {
                let b = BetaSet::from_partition(p);
                let a = b.a_coords(s).expect("s-core");
                let charge = b.charge(s).expect("s >= 1");
                let si = s as i64;
                let ok = (0..si).all(|i| a.get(i) == i - si * charge.get(-1 - i));
                c.expect(ok, || format!("lambda = {p}: a = {:?}, c = {:?}", a.as_slice(), charge.c));
            };
            for p in ctx.up_to(ctx.cfg.n_max).filter(|p| is_s_core(p, s)) {
                check(p);
            }
            let mut r = rng(ctx.seed(1, s, 0));
            for _ in 0..ctx.cfg.samples.min(100) {
                check(&random_core(&mut r, s, 4).to_partition());
            }
            c.done()
        })
        .collect()
}

fn conjugate_charge_duality(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.moduli())
        .map(|s| {
            let mut c = Check::new("betaset.conjugate_charge_duality", &[s]);
            for p in ctx.up_to(14) {
                let b = BetaSet::from_partition(p);
                let conj = b.conjugate();
                c.expect(conj == BetaSet::from_partition(&p.conjugate()), || {
                    format!("conjugate beta-set of {p} is not the beta-set of its conjugate")
                });
                let (before, after) = (b.charge(s).unwrap(), conj.charge(s).unwrap());
                let si = s as i64;
                let ok = (0..si).all(|i| after.get(i) == -before.get(-1 - i));
                c.expect(ok, || format!("lambda = {p}: {:?} vs {:?}", before.c, after.c));
            }
            c.done()
        })
        .collect()
}

fn core_commutes_with_conjugation(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.moduli().min(5))
        .map(|s| {
            let mut c = Check::new("betaset.core_commutes_with_conjugation", &[s]);
            for p in ctx.up_to(15) {
                let lhs = t_core(&p.conjugate(), s).unwrap();
                let rhs = t_core(p, s).unwrap().conjugate();
                c.expect(lhs == rhs, || format!("lambda = {p}: {lhs} vs {rhs}"));
            }
            c.done()
        })
        .collect()
}

fn conjugate_sset(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.moduli())
        .map(|s| {
            let mut c = Check::new("betaset.conjugate_sset", &[s]);
            let mut r = rng(ctx.seed(2, s, 0));
            let randoms: Vec<Partition> = (0..ctx.cfg.samples.min(100))
                .map(|_| random_core(&mut r, s, 4).to_partition())
                .collect();
            let listed = ctx.up_to(ctx.cfg.n_max).filter(|p| is_s_core(p, s));
            for p in listed.chain(randoms.iter()) {
                let a = a_coords(p, s).unwrap();
                let a_conj = a_coords(&p.conjugate(), s).unwrap();
                c.expect(a_conj == a.conjugate(), || format!("lambda = {p}"));
                c.expect(p.is_self_conjugate() == is_self_conjugate_a(&a), || {
                    format!("lambda = {p}: self-conjugacy and symmetric s-set disagree")
                });
            }
            c.done()
        })
        .collect()
}

fn olsson_closure(ctx: &Ctx) -> Vec<VerifyReport> {
    let m = ctx.moduli();
    (1..=m)
        .cartesian_product(1..=m)
        .map(|(s, t)| {
            let mut c = Check::new("betaset.olsson_closure", &[s, t]);
            let mut r = rng(ctx.seed(3, s, t));
            for _ in 0..ctx.cfg.samples.min(100) {
                let p = random_core(&mut r, s, 5).to_partition();
                let core = t_core(&p, t).unwrap();
                c.expect(is_s_core(&core, s), || format!("lambda = {p}, t-core {core}"));
            }
            c.done()
        })
        .collect()
}

fn faithful_invariant(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .filter(|&(s, t)| s <= 6 && t <= 6)
        .map(|(s, t)| {
            let mut c = Check::new("betaset.faithful_invariant", &[s, t]);
            let mut r = rng(ctx.seed(4, s, t));
            let sampled: Vec<(Vec<usize>, Partition)> = (0..60)
                .map(|_| {
                    let p = random_core(&mut r, s, 2).to_partition();
                    let mut residues = vec![0usize; t as usize];
                    for x in s_set(&p, s).unwrap() {
                        residues[mod_index(x, t)] += 1;
                    }
                    let core = t_core(&p, t).unwrap();
                    (residues, core)
                })
                .collect();
            for (x, y) in sampled.iter().tuple_combinations() {
                c.expect((x.0 == y.0) == (x.1 == y.1), || {
                    format!("residues {:?} vs {:?}, t-cores {} vs {}", x.0, y.0, x.1, y.1)
                });
            }
            c.done()
        })
        .collect()
}

fn sset_tset_interaction(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("betaset.sset_tset_interaction", &[s, t]);
            let mut r = rng(ctx.seed(5, s, t));
            let (si, ti) = (s as i64, t as i64);
            for _ in 0..ctx.cfg.samples.min(200) {
                let p = random_core(&mut r, s, 5).to_partition();
                let sset = s_set(&p, s).unwrap();
                let a = a_coords(&t_core(&p, t).unwrap(), t).unwrap();
                for j in 0..ti {
                    let count = sset.iter().filter(|&&x| rem(x - si - j, t) == 0).count() as i64;
                    let diff = a.get(j) - a.get(j + si) + si;
                    c.expect(diff % ti == 0 && diff / ti == count, || {
                        format!("lambda = {p}, j = {j}: count {count}, difference {diff}")
                    });
                }
            }
            c.done()
        })
        .collect()
}

fn a_z_round_trip(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("coords.a_z_round_trip", &[s, t]);
            let mut r = rng(ctx.seed(6, s, t));
            for _ in 0..ctx.cfg.samples {
                let a = random_core(&mut r, t, 5);
                let z = a_to_z(&a, s).unwrap();
                let back = z_to_a(&z);
                c.expect(back.as_ref() == Ok(&a), || format!("a = {:?}, z = {:?}", a.as_slice(), z.as_slice()));
            }
            c.done()
        })
        .collect()
}

fn z_u_round_trip(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("coords.z_u_round_trip", &[s, t]);
            let mut r = rng(ctx.seed(7, s, t));
            for _ in 0..ctx.cfg.samples {
                let u = random_u(&mut r, t, s, 5).unwrap();
                let z = u_to_z(u.as_slice(), t, s);
                let back = z.as_ref().map_err(Clone::clone).and_then(z_to_u);
                c.expect(back.as_ref() == Ok(&u), || format!("u = {:?}, z = {z:?}", u.as_slice()));
            }
            c.done()
        })
        .collect()
}

fn shift_constant_integral(ctx: &Ctx) -> Vec<VerifyReport> {
    let mut c = Check::new("coords.shift_constant_integral", &[ctx.cfg.s_max, ctx.cfg.t_max]);
    for (s, t) in ctx.pairs() {
        c.expect(((s + 1) * (t - 1)) % 2 == 0, || format!("(s,t) = ({s},{t})"));
        c.expect(2 * shift_constant(s, t) == ((s + 1) * (t - 1)) as i64, || format!("(s,t) = ({s},{t})"));
    }
    vec![c.done()]
}

fn nonnegativity_equivalence(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("coords.nonnegativity_equivalence", &[s, t]);
            let mut r = rng(ctx.seed(8, s, t));
            for _ in 0..ctx.cfg.samples {
                let a = random_core(&mut r, t, 2);
                let p = a.to_partition();
                let by_a = is_st_core_a(&a, s);
                let by_z = a_to_z(&a, s).unwrap().is_nonnegative();
                let by_hooks = p.avoids_hook_multiples(&[s]);
                c.expect(by_a == by_z && by_z == by_hooks, || {
                    format!("lambda = {p}: inequalities {by_a}, z >= 0 {by_z}, hooks {by_hooks}")
                });
            }
            c.done()
        })
        .collect()
}

fn z_counts_sset_residues(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("coords.z_counts_sset_residues", &[s, t]);
            let mut r = rng(ctx.seed(9, s, t));
            let (si, k) = (s as i64, shift_constant(s, t));
            for _ in 0..ctx.cfg.samples.min(200) {
                let p = random_core(&mut r, s, 5).to_partition();
                let sset = s_set(&p, s).unwrap();
                let z = a_to_z(&a_coords(&t_core(&p, t).unwrap(), t).unwrap(), s).unwrap();
                for j in 0..t as i64 {
                    let count = sset.iter().filter(|&&x| rem(x - si - (si * j + k), t) == 0).count() as i64;
                    c.expect(z.get(j) == count, || format!("lambda = {p}, j = {j}: z = {}, count {count}", z.get(j)));
                }
            }
            c.done()
        })
        .collect()
}

fn self_conjugacy_transfer(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("coords.self_conjugacy_transfer", &[s, t]);
            let mut r = rng(ctx.seed(10, s, t));
            let mut check = |a: &crate::betaset::ATuple| {
                let z = a_to_z(a, s).unwrap();
                let p = a.to_partition();
                let (by_a, by_z, by_p) = (is_self_conjugate_a(a), z.is_symmetric(), p.is_self_conjugate());
                c.expect(by_a == by_z && by_z == by_p, || {
                    format!("lambda = {p}: a {by_a}, z {by_z}, diagram {by_p}")
                });
            };
            for _ in 0..ctx.cfg.samples {
                check(&random_core(&mut r, t, 3));
                let u = random_u(&mut r, t, s, 3).unwrap();
                check(&u_to_z(u.as_slice(), t, s).unwrap().to_a());
            }
            c.done()
        })
        .collect()
}

fn counts_match_closed_form(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("enumerate.counts_match_closed_form", &[s, t]);
            let general = BigUint::from(enum_st_cores(s, t).unwrap().len());
            let expected = count_st(s, t).unwrap();
            c.expect(general == expected, || format!("{general} cores enumerated, formula {expected}"));
            let sc = BigUint::from(enum_sc_st_cores(s, t).unwrap().len());
            let expected = count_sc(s, t).unwrap();
            c.expect(sc == expected, || format!("{sc} self-conjugate cores enumerated, formula {expected}"));
            c.done()
        })
        .collect()
}

fn cyclic_orbits(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .filter(|&(s, t)| s + t <= 14)
        .map(|(s, t)| {
            let mut c = Check::new("enumerate.cyclic_orbit_representatives", &[s, t]);
            let n = t as usize;
            for x in weak_compositions(s, n) {
                let rotations: BTreeSet<Vec<i64>> = (0..n)
                    .map(|r| (0..n).map(|j| x[(r + j) % n]).collect())
                    .collect();
                let hits = rotations
                    .iter()
                    .filter(|y| ZTuple::new(s, y.to_vec()).is_ok())
                    .count();
                c.expect(rotations.len() == n && hits == 1, || {
                    format!("x = {x:?}: orbit size {}, {hits} representatives", rotations.len())
                });
            }
            c.done()
        })
        .collect()
}

fn weak_compositions(total: u64, parts: usize) -> Vec<Vec<i64>> {
    fn go(left: i64, parts: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 1 == parts {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            go(left - v, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total as i64, parts, &mut Vec::new(), &mut out);
    out
}

fn self_conjugate_subcollection(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("enumerate.self_conjugate_subcollection", &[s, t]);
            let sc: Vec<Partition> = enum_sc_st_cores(s, t).unwrap().into_iter().map(|r| r.partition).collect();
            let filtered: Vec<Partition> = enum_st_cores(s, t)
                .unwrap()
                .into_iter()
                .map(|r| r.partition)
                .filter(Partition::is_self_conjugate)
                .collect();
            let (a, b): (BTreeSet<_>, BTreeSet<_>) = (sc.iter().collect(), filtered.iter().collect());
            c.expect(sc.len() == a.len() && a == b, || {
                format!("u-enumeration gives {} cores, filtering gives {}", sc.len(), filtered.len())
            });
            c.done()
        })
        .collect()
}

fn triple_pairs(ctx: &Ctx) -> Vec<(u64, u64)> {
    (1..=ctx.cfg.t_max)
        .cartesian_product(1..=ctx.cfg.s_max)
        .filter(|&(m, d)| coprime(m, d))
        .collect()
}

fn triple_enumerations_agree(ctx: &Ctx) -> Vec<VerifyReport> {
    triple_pairs(ctx)
        .into_iter()
        .map(|(m, d)| {
            let mut c = Check::new("enumerate.triple_enumerations_agree", &[m, d]);
            let set = |v: Vec<crate::enumerate::CoreRecord>| -> BTreeSet<Partition> {
                v.into_iter().map(|r| r.partition).collect()
            };
            let sym = enum_triple_sym(m, d).unwrap();
            let asym = enum_triple_asym(m, d).unwrap();
            let expected = count_triple(m, d).unwrap();
            let (ns, na) = (sym.len(), asym.len());
            c.expect(BigUint::from(ns) == expected && BigUint::from(na) == expected, || {
                format!("symmetric {ns}, asymmetric {na}, formula {expected}")
            });
            let (a, b) = (set(sym), set(asym));
            c.expect(a.len() == ns && a == b, || "partition sets differ".to_string());
            c.done()
        })
        .collect()
}

fn enumerated_cores_pass_hook_checks(ctx: &Ctx) -> Vec<VerifyReport> {
    let mut out: Vec<VerifyReport> = ctx
        .pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("enumerate.hook_checks_st", &[s, t]);
            for r in enum_st_cores(s, t).unwrap() {
                c.expect(r.partition.avoids_hook_multiples(&[s, t]), || format!("lambda = {}", r.partition));
            }
            c.done()
        })
        .collect();
    out.extend(triple_pairs(ctx).into_iter().map(|(m, d)| {
        let mut c = Check::new("enumerate.hook_checks_triple", &[m, d]);
        let moduli = [m, m + d, m + 2 * d];
        for r in enum_triple_sym(m, d).unwrap().into_iter().chain(enum_triple_asym(m, d).unwrap()) {
            c.expect(r.partition.avoids_hook_multiples(&moduli), || format!("lambda = {}", r.partition));
        }
        c.done()
    }));
    out
}

fn motzkin_column(_: &Ctx) -> Vec<VerifyReport> {
    let mut c = Check::new("enumerate.motzkin_column", &[12]);
    for m in 1..=12u64 {
        let count = count_triple(m, 1).unwrap();
        let expected = motzkin(m as usize);
        c.expect(count == expected, || format!("m = {m}: {count} vs Motzkin {expected}"));
    }
    vec![c.done()]
}

fn average_theorems(ctx: &Ctx) -> Vec<VerifyReport> {
    let variants = [
        ("stats.unweighted_average", false, false),
        ("stats.unweighted_average_self_conjugate", false, true),
        ("stats.weighted_average", true, false),
        ("stats.weighted_average_self_conjugate", true, true),
    ];
    let mut out = Vec::new();
    for (s, t) in ctx.pairs() {
        for (name, weighted, sc) in variants {
            let mut c = Check::new(name, &[s, t]);
            let got = average_size(s, t, weighted, sc).unwrap();
            let expected = average_size_closed_form(s, t, weighted, sc);
            c.expect(got == expected, || format!("enumeration {got}, closed form {expected}"));
            out.push(c.done());
        }
    }
    out
}

fn average_symmetry(ctx: &Ctx) -> Vec<VerifyReport> {
    let mut c = Check::new("stats.average_symmetry", &[ctx.cfg.s_max, ctx.cfg.t_max]);
    for (s, t) in ctx.pairs() {
        for sc in [false, true] {
            let (x, y) = (average_size(s, t, false, sc).unwrap(), average_size(t, s, false, sc).unwrap());
            c.expect(x == y, || format!("({s},{t}) gives {x}, ({t},{s}) gives {y}"));
        }
    }
    let (x, y) = (average_size(2, 3, true, false).unwrap(), average_size(3, 2, true, false).unwrap());
    c.expect(x != y, || format!("weighted averages of (2,3) and (3,2) coincide at {x}"));
    vec![c.done()]
}

fn stabilizer_vs_permutations(ctx: &Ctx) -> Vec<VerifyReport> {
    let formula = ctx.cfg.stab_override.unwrap_or(|z| stab_size(z).expect("nonnegative z"));
    let mut out = Vec::new();
    for (s, t) in ctx.pairs().into_iter().filter(|&(s, t)| s + t <= 9) {
        let mut c = Check::new("stats.stabilizer_vs_permutations", &[s, t]);
        for r in enum_st_cores(s, t).unwrap() {
            let sset = sset_from_parts(&r.partition, s).expect("enumerated cores are s-cores");
            let brute = brute_stab_count(&sset, t, false, s).unwrap();
            let closed = formula(&r.z);
            c.expect(brute == closed, || {
                format!("lambda = {}, z = {:?}: permutations {brute}, formula {closed}", r.partition, r.z.as_slice())
            });
        }
        out.push(c.done());
        let mut c = Check::new("stats.stabilizer_vs_permutations_self_conjugate", &[s, t]);
        for r in enum_sc_st_cores(s, t).unwrap() {
            let sset = sset_from_parts(&r.partition, s).expect("enumerated cores are s-cores");
            let brute = brute_stab_count(&sset, t, true, s).unwrap();
            let closed = stab_size_sc(&z_to_u(&r.z).unwrap()).unwrap();
            c.expect(brute == closed, || {
                format!("lambda = {}: permutations {brute}, formula {closed}", r.partition)
            });
        }
        out.push(c.done());
    }
    out
}

fn size_formulas_agree(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("stats.size_formulas_agree", &[s, t]);
            for r in enum_st_cores(s, t).unwrap() {
                let (x, y, n) = (size_from_a(&r.a), size_from_c(&r.a.to_c()), r.partition.size());
                c.expect(x == n && y == n && r.size == n, || {
                    format!("lambda = {}: a gives {x}, c gives {y}", r.partition)
                });
            }
            c.done()
        })
        .collect()
}

fn cyclic_sum_identities(ctx: &Ctx) -> Vec<VerifyReport> {
    ctx.pairs()
        .into_iter()
        .map(|(s, t)| {
            let mut c = Check::new("stats.cyclic_sum_identities", &[s, t]);
            let report = verify_cyclic_sum_identities(s, t).unwrap();
            for id in &report.checks {
                c.expect(id.pass, || format!("{}: sum {} vs closed form {}", id.name, id.lhs, id.rhs));
            }
            c.done()
        })
        .collect()
}

const ORACLE_PAIRS: [(u64, u64); 5] = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)];

fn parameterization_matches_oracle(ctx: &Ctx) -> Vec<VerifyReport> {
    ORACLE_PAIRS
        .iter()
        .filter(|&&(s, t)| s <= ctx.cfg.s_max && t <= ctx.cfg.t_max)
        .map(|&(s, t)| oracle_equivalence(s, t))
        .collect()
}

/// Compares the coordinate enumeration with hook-filtered partitions up to
/// the largest enumerated size `M`, then confirms nothing appears in
/// `(M, M+s+t]`.
pub(crate) fn oracle_equivalence(s: u64, t: u64) -> VerifyReport {
    let mut c = Check::new("oracle.parameterization_equivalence", &[s, t]);
    let enumerated: BTreeSet<Partition> = enum_st_cores(s, t).unwrap().into_iter().map(|r| r.partition).collect();
    let m = enumerated.iter().map(Partition::size).max().unwrap_or(0);
    match brute_st_cores(&[s, t], m + s + t) {
        Ok(brute) => {
            let (low, high): (Vec<_>, Vec<_>) = brute.into_iter().partition(|p| p.size() <= m);
            let low: BTreeSet<Partition> = low.into_iter().collect();
            c.expect(low == enumerated, || {
                let extra = low.symmetric_difference(&enumerated).next().cloned().unwrap_or_default();
                format!("sets differ up to size {m}, e.g. at {extra}")
            });
            c.expect(high.is_empty(), || format!("core {} above the bound {m}", high[0]));
        }
        Err(e) => c.expect(false, || e.to_string()),
    }
    c.done()
}

fn diagram_core_matches_abacus(ctx: &Ctx) -> Vec<VerifyReport> {
    (1..=ctx.cfg.t_max.min(6))
        .map(|t| {
            let mut c = Check::new("oracle.diagram_vs_abacus_core", &[t]);
            for p in ctx.up_to(14) {
                let (x, y) = (p.t_core_by_diagram(t).unwrap(), t_core(p, t).unwrap());
                c.expect(x == y, || format!("lambda = {p}: diagram {x}, abacus {y}"));
            }
            c.done()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_scale_passes() {
        let reports = run_verify_suite(1, 1, 5);
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.pass, "{r}");
            assert!(r.witness.is_none());
        }
    }

    #[test]
    fn reports_are_sorted_and_deterministic() {
        let mut cfg = VerifyConfig::new(3, 4, 8);
        cfg.samples = 20;
        let first = run_verify_suite_with(&cfg);
        cfg.execution = Execution::Sequential;
        assert_eq!(first, run_verify_suite_with(&cfg));
        assert!(first.windows(2).all(|w| (&w[0].check, &w[0].params) <= (&w[1].check, &w[1].params)));
    }

    #[test]
    fn corrupted_stabilizer_formula_is_caught() {
        let mut cfg = VerifyConfig::new(3, 4, 6);
        cfg.samples = 10;
        cfg.stab_override = Some(|z| stab_size(z).unwrap() + 1u32);
        let reports = run_verify_suite_with(&cfg);
        let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
        assert!(!failed.is_empty());
        assert!(failed.iter().all(|r| r.check == "stats.stabilizer_vs_permutations"));
        assert!(failed.iter().all(|r| r.witness.is_some()));
    }

    #[test]
    fn report_json_shape() {
        let r = Check::new("x", &[2, 3]).done();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"x","params":[2,3],"pass":true,"witness":null,"compared":0}"#
        );
    }
}
