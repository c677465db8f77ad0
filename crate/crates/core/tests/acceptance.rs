use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use cores::enumerate::{count_triple, enum_sc_st_cores, enum_st_cores, enum_triple_asym, enum_triple_sym};
use cores::oracle::{brute_st_cores, run_verify_suite};
use cores::stats::{average_size, verify_cyclic_sum_identities};
use cores::{ExactRational, Partition};

type Outcome = Result<String, String>;

/// name, check, time budget in seconds
type Criterion = (&'static str, fn() -> Outcome, u64);

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn coprime_pairs(max_sum: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for s in 1..max_sum {
        for t in 1..=max_sum - s {
            if gcd(s, t) == 1 {
                out.push((s, t));
            }
        }
    }
    out
}

fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn frac(numer: i64, denom: i64) -> ExactRational {
    ExactRational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counting() -> Outcome {
    let pairs = coprime_pairs(18);
    for &(s, t) in &pairs {
        let general = enum_st_cores(s, t).map_err(|e| e.to_string())?.len();
        let expected = choose(s + t, t) / (s + t);
        ensure(BigUint::from(general) == expected, || format!("({s},{t}): {general} vs {expected}"))?;
        let sc = enum_sc_st_cores(s, t).map_err(|e| e.to_string())?.len();
        let expected = choose(s / 2 + t / 2, t / 2);
        ensure(BigUint::from(sc) == expected, || format!("({s},{t}) self-conjugate: {sc} vs {expected}"))?;
    }
    Ok(format!("{} coprime pairs", pairs.len()))
}

fn unweighted_averages() -> Outcome {
    let pairs = coprime_pairs(16);
    for &(s, t) in &pairs {
        let (si, ti) = (s as i64, t as i64);
        let expected = frac((si - 1) * (ti - 1) * (si + ti + 1), 24);
        for sc in [false, true] {
            let got = average_size(s, t, false, sc).map_err(|e| e.to_string())?;
            ensure(got == expected, || format!("({s},{t}) self-conjugate={sc}: {got} vs {expected}"))?;
        }
    }
    Ok(format!("{} coprime pairs, both families", pairs.len()))
}

fn weighted_averages() -> Outcome {
    let spots = [((2, 3), frac(1, 3)), ((3, 4), frac(5, 4))];
    for ((s, t), expected) in spots {
        let got = average_size(s, t, true, false).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("spot ({s},{t}): {got} vs {expected}"))?;
    }
    let pairs = coprime_pairs(16);
    for &(s, t) in &pairs {
        let (si, ti) = (s as i64, t as i64);
        let expected = frac((si - 1) * (ti * ti - 1), 24);
        let got = average_size(s, t, true, false).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("({s},{t}): {got} vs {expected}"))?;
    }
    Ok(format!("{} coprime pairs and 2 spot values", pairs.len()))
}

fn weighted_self_conjugate_averages() -> Outcome {
    let got = average_size(3, 2, true, true).map_err(|e| e.to_string())?;
    ensure(got == frac(1, 2), || format!("hand-checked case (3,2): {got}"))?;
    let pairs = coprime_pairs(16);
    let mut parities = BTreeSet::new();
    for &(s, t) in &pairs {
        let (si, ti) = (s as i64, t as i64);
        let expected = if t % 2 == 1 {
            frac((si - 1) * (ti * ti - 1), 24)
        } else {
            frac((si - 1) * (ti * ti + 2), 24)
        };
        let got = average_size(s, t, true, true).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("({s},{t}): {got} vs {expected}"))?;
        parities.insert(t % 2);
    }
    ensure(parities.len() == 2, || "both parities of t must be exercised".into())?;
    Ok(format!("{} coprime pairs, odd and even t", pairs.len()))
}

fn motzkin_by_recurrence(n: usize) -> Vec<BigUint> {
    let mut m = vec![BigUint::from(1u32), BigUint::from(1u32)];
    for i in 2..=n {
        let mut v = m[i - 1].clone();
        for k in 0..=i - 2 {
            v += &m[k] * &m[i - 2 - k];
        }
        m.push(v);
    }
    m
}

fn multinomial3(a: u64, b: u64, c: u64) -> BigUint {
    factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c))
}

fn triple_cores() -> Outcome {
    let motzkin = motzkin_by_recurrence(12);
    let pairs = coprime_pairs(12);
    for &(m, d) in &pairs {
        let total: BigUint = (0..=m / 2).map(|i| multinomial3(i, i + d, m - 2 * i)).sum();
        let expected = total / (m + d);
        let sym: BTreeSet<Partition> = enum_triple_sym(m, d).map_err(|e| e.to_string())?.into_iter().map(|r| r.partition).collect();
        let asym: Vec<Partition> = enum_triple_asym(m, d).map_err(|e| e.to_string())?.into_iter().map(|r| r.partition).collect();
        let n_asym = asym.len();
        let asym: BTreeSet<Partition> = asym.into_iter().collect();
        ensure(BigUint::from(sym.len()) == expected, || format!("({m},{d}) symmetric: {} vs {expected}", sym.len()))?;
        ensure(BigUint::from(n_asym) == expected, || format!("({m},{d}) asymmetric: {n_asym} vs {expected}"))?;
        ensure(sym == asym, || format!("({m},{d}): partition sets differ"))?;
        ensure(count_triple(m, d).map_err(|e| e.to_string())? == expected, || format!("({m},{d}): count_triple"))?;
        if d == 1 {
            ensure(expected == motzkin[m as usize], || format!("m = {m}: {expected} vs Motzkin {}", motzkin[m as usize]))?;
        }
    }
    Ok(format!("{} coprime (m,d) pairs", pairs.len()))
}

fn oracle_equivalence() -> Outcome {
    for (s, t) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)] {
        let enumerated: BTreeSet<Partition> = enum_st_cores(s, t).map_err(|e| e.to_string())?.into_iter().map(|r| r.partition).collect();
        let bound = enumerated.iter().map(Partition::size).max().unwrap_or(0);
        let brute = brute_st_cores(&[s, t], bound + s + t).map_err(|e| e.to_string())?;
        let (low, high): (Vec<_>, Vec<_>) = brute.into_iter().partition(|p| p.size() <= bound);
        let low: BTreeSet<Partition> = low.into_iter().collect();
        ensure(low == enumerated, || format!("({s},{t}): sets differ up to size {bound}"))?;
        ensure(high.is_empty(), || format!("({s},{t}): core {} above {bound}", high[0]))?;
    }
    Ok("5 pairs".into())
}

fn structural_propositions() -> Outcome {
    let reports = run_verify_suite(5, 6, 20);
    if let Some(bad) = reports.iter().find(|r| !r.pass) {
        return Err(bad.to_string());
    }
    let required = [
        "betaset.push_charge_conservation",
        "betaset.conjugate_charge_duality",
        "betaset.core_commutes_with_conjugation",
        "betaset.olsson_closure",
        "betaset.faithful_invariant",
        "betaset.sset_tset_interaction",
        "stats.stabilizer_vs_permutations",
        "stats.stabilizer_vs_permutations_self_conjugate",
    ];
    for name in required {
        ensure(reports.iter().any(|r| r.check == name && r.compared > 0), || format!("{name} did not run"))?;
    }
    Ok(format!("{} reports", reports.len()))
}

fn cyclic_sums() -> Outcome {
    let pairs = coprime_pairs(14);
    let mut families = BTreeSet::new();
    for &(s, t) in &pairs {
        let report = verify_cyclic_sum_identities(s, t).map_err(|e| e.to_string())?;
        let tt = BigRational::from_integer(BigInt::from(t));
        let int = |n: BigUint| BigRational::from_integer(BigInt::from(n));
        let pow = |e: u64| int(BigUint::from(t).pow(e as u32));
        let exp_quadratic = if s >= 2 {
            int(BigUint::from(s * (s - 1))) * pow(s - 2) / &tt
        } else {
            BigRational::from_integer(BigInt::from(0))
        };
        for check in &report.checks {
            let expected = match check.name.as_str() {
                "exponential constant" => pow(s) / &tt,
                "exponential linear" => int(BigUint::from(s)) * pow(s - 1) / &tt,
                n if n.starts_with("exponential quadratic") => exp_quadratic.clone(),
                "ordinary constant" => int(choose(s + t - 1, t - 1)) / &tt,
                "ordinary linear" => int(choose(s + t - 1, t)) / &tt,
                "ordinary square quadratic" => int(choose(s + t - 1, t + 1) * 2u32) / &tt,
                n if n.starts_with("ordinary mixed quadratic") => int(choose(s + t - 1, t + 1)) / &tt,
                other => return Err(format!("unexpected identity {other}")),
            };
            ensure(check.rhs.0 == expected, || format!("({s},{t}) {}: closed form {} vs {expected}", check.name, check.rhs))?;
            ensure(check.lhs == check.rhs, || format!("({s},{t}) {}: {} vs {}", check.name, check.lhs, check.rhs))?;
            let family = check.name.split(" (").next().unwrap_or_default().to_string();
            families.insert(family);
        }
    }
    ensure(families.len() == 7, || format!("expected 7 identity families, saw {families:?}"))?;
    Ok(format!("7 identities over {} coprime pairs", pairs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("counting", counting, 10),
        ("unweighted average size", unweighted_averages, 10),
        ("stabilizer-weighted average size", weighted_averages, 10),
        ("self-conjugate weighted average size", weighted_self_conjugate_averages, 10),
        ("(m, m+d, m+2d)-core counts", triple_cores, 30),
        ("oracle equivalence", oracle_equivalence, 60),
        ("structural propositions", structural_propositions, 60),
        ("cyclic-sum identities", cyclic_sums, 10),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over_budget = elapsed > Duration::from_secs(*budget);
        let line = match (&outcome, over_budget) {
            (Ok(detail), false) => format!("PASS criterion {} {name}: {detail}", i + 1),
            (Ok(detail), true) => format!("FAIL criterion {} {name}: {detail}, but over the {budget}s budget", i + 1),
            (Err(why), _) => format!("FAIL criterion {} {name}: {why}", i + 1),
        };
        if line.starts_with("FAIL") {
            failures += 1;
        }
        println!("{line} ({:.2}s)", elapsed.as_secs_f64());
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
