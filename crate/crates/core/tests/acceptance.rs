//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::Zero;

use sumrank_core::compositions::{all_profiles, count_uniform, count_upper_bound, enumerate_uniform};
use sumrank_core::intersections::{sumrank_intersection_exact, theorem3_aggregate, IntersectionQuery, RankScheme};
use sumrank_core::oracle::{count_intersection, count_sphere, els_pair_count_check};
use sumrank_core::qkit::{binomial, gaussian_binomial, num_matrices_rank, pow, q_krawtchouk};
use sumrank_core::report::{FormulaVariant, MatchStatus, Report};
use sumrank_core::verify::{default_grid, run};
use sumrank_core::volumes::{sphere_volume, sphere_volume_partition_sum, space_size, weight_distribution};
use sumrank_core::{Count, Params, SignedCount, Strategy};
use sumrank_core::oracle::Oracle;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> std::result::Result<Duration, String> {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))?;
    Ok(elapsed)
}

/// q in {2,3}, m, eta <= 3, ell <= 3.
fn small_grid() -> Vec<Params> {
    let mut out = Vec::new();
    for q in [2, 3] {
        for m in 1..=3 {
            for eta in 1..=3 {
                for ell in 1..=3 {
                    out.push(Params::new(q, m, eta, ell).unwrap());
                }
            }
        }
    }
    out
}

fn mass_conservation() -> Check {
    let start = Instant::now();
    let grid = small_grid();
    for p in &grid {
        let total: Count = (0..=p.max_weight()).map(|t| sphere_volume(p, t)).sum();
        ensure(total == space_size(p), || format!("{p:?}: sum {total} != q^mn"))?;
    }
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!("{} parameter sets, {t:?}", grid.len()))
}

fn reductions() -> Check {
    let mut cases = 0;
    for q in [2u64, 3, 4] {
        for m in 1..=4u32 {
            for eta in 1..=4u32 {
                let p = Params::new(q, m, eta, 1).unwrap();
                for t in 0..=p.mu() + 1 {
                    let nm = num_matrices_rank(eta.into(), m.into(), t.into(), q).unwrap();
                    ensure(sphere_volume(&p, t) == nm, || format!("rank reduction {p:?} t={t}"))?;
                    cases += 1;
                }
            }
            for ell in 1..=6u32 {
                let p = Params::new(q, m, 1, ell).unwrap();
                for t in 0..=ell {
                    let expect = binomial(ell.into(), t.into()) * num_traits::pow(pow(q, m.into()) - 1u32, t as usize);
                    ensure(sphere_volume(&p, t) == expect, || format!("Hamming reduction {p:?} t={t}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} radii"))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut checks = 0;
    for p in default_grid() {
        let w = p.max_weight();
        for t in 0..=w + 1 {
            let counted = count_sphere(&p, t).map_err(|e| e.to_string())?;
            ensure(counted == sphere_volume(&p, t), || format!("sphere {p:?} t={t}"))?;
            checks += 1;
        }
        for prof in all_profiles(p.ell(), p.mu()) {
            for u in 0..=w {
                for s in 0..=w {
                    let counted = count_intersection(&p, u, s, &prof).map_err(|e| e.to_string())?;
                    let q = IntersectionQuery::new(p, u, s, prof.clone()).map_err(|e| e.to_string())?;
                    let exact = sumrank_intersection_exact(&q).map_err(|e| e.to_string())?;
                    ensure(counted == exact, || format!("{p:?} u={u} s={s} {prof}: {exact} vs oracle {counted}"))?;
                    checks += 1;
                }
            }
        }
    }
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!("{checks} comparisons, {t:?}"))
}

fn j_well_formed() -> Check {
    let start = Instant::now();
    let mut cells = 0;
    for q in [2u64, 3] {
        for n in 1..=4u32 {
            for m in 1..=4u32 {
                let scheme = RankScheme::new(n, m, q).map_err(|e| e.to_string())?;
                let d = n.min(m);
                let space = pow(q, u64::from(n * m));
                for t in 0..=d {
                    let denom = SignedCount::from(&space * num_matrices_rank(n.into(), m.into(), t.into(), q).unwrap());
                    let mut mass = Count::zero();
                    for u in 0..=d {
                        for s in 0..=d {
                            let mut numerator = SignedCount::zero();
                            for i in 0..=u64::from(n) {
                                let k = |j: u32| q_krawtchouk(j.into(), i, n.into(), m.into(), q).unwrap();
                                numerator += SignedCount::from(num_matrices_rank(n.into(), m.into(), i, q).unwrap())
                                    * k(u) * k(s) * k(t);
                            }
                            let (quot, rem) = numerator.div_rem(&denom);
                            ensure(rem.is_zero(), || format!("q={q} n={n} m={m} u={u} s={s} t={t}: not divisible"))?;
                            ensure(quot >= SignedCount::zero(), || format!("q={q} n={n} m={m} u={u} s={s} t={t}: negative"))?;
                            let j = scheme.sphere_intersection(u, s, t).map_err(|e| e.to_string())?;
                            ensure(SignedCount::from(j.clone()) == quot, || format!("J({u},{s},{t},{n},{m}) clamp disagrees"))?;
                            if t == 0 {
                                let expect = if u == s { scheme.rank_count(u) } else { Count::zero() };
                                ensure(j == expect, || format!("J({u},{s},0,{n},{m}) != delta NM"))?;
                            }
                            mass += j;
                            cells += 1;
                        }
                    }
                    ensure(mass == space, || format!("q={q} n={n} m={m} t={t}: mass {mass}"))?;
                }
            }
        }
    }
    let t = within(Duration::from_secs(10), start)?;
    Ok(format!("{cells} values of J, {t:?}"))
}

fn theorem3_per_profile() -> Check {
    let mut checks = 0;
    for p in default_grid() {
        for prof in all_profiles(p.ell(), p.mu()) {
            let delta = prof.total();
            for gamma in 0..=delta {
                let agg = theorem3_aggregate(&p, gamma, &prof).map_err(|e| e.to_string())?;
                let q = IntersectionQuery::new(p, gamma, delta - gamma, prof.clone()).map_err(|e| e.to_string())?;
                let exact = sumrank_intersection_exact(&q).map_err(|e| e.to_string())?;
                let counted = count_intersection(&p, gamma, delta - gamma, &prof).map_err(|e| e.to_string())?;
                ensure(agg == exact && exact == counted, || {
                    format!("{p:?} gamma={gamma} {prof}: aggregate {agg}, exact {exact}, oracle {counted}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (gamma, profile) pairs"))
}

fn composition_identities() -> Check {
    let start = Instant::now();
    let mut cases = 0;
    for t in 0..=12 {
        for ell in 1..=6 {
            for mu in 0..=5 {
                let listed = Count::from(enumerate_uniform(t, ell, mu).count());
                let closed = count_uniform(t, ell, mu);
                ensure(listed == closed, || format!("t={t} ell={ell} mu={mu}: {listed} listed, {closed} closed form"))?;
                ensure(closed <= count_upper_bound(t, ell), || format!("t={t} ell={ell} mu={mu}: bound violated"))?;
                cases += 1;
            }
        }
    }
    let t = within(Duration::from_secs(1), start)?;
    Ok(format!("{cases} cases, {t:?}"))
}

fn els_pair_count() -> Check {
    let mut cases = 0;
    for q in [2u64, 3] {
        for k in 0..=3u32 {
            for a in 0..=k {
                let counted = els_pair_count_check(k, a, q, 4).map_err(|e| e.to_string())?;
                let g = u64::from(a);
                let expect = pow(q, g * (u64::from(k) - g)) * gaussian_binomial(k.into(), g, q).unwrap();
                ensure(counted == expect, || format!("q={q} k={k} a={a}: {counted} vs {expect}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn discrepancy_report() -> Check {
    let report = run(&default_grid(), Oracle::default(), Strategy::default(), "acceptance");
    let json = report.to_json();
    let parsed = Report::from_json(&json).map_err(|e| format!("report does not parse: {e}"))?;
    ensure(parsed.to_json() == json, || "report does not round-trip byte-identically".into())?;

    let raw: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["tool", "version", "timestamp", "records", "discrepancies", "summary"] {
        ensure(raw.get(key).is_some(), || format!("missing top-level key {key}"))?;
    }
    for rec in raw["records"].as_array().unwrap().iter().chain(raw["discrepancies"].as_array().unwrap()) {
        for key in ["params", "query", "formula_variant", "oracle_value", "match"] {
            ensure(rec.get(key).is_some(), || format!("record missing {key}: {rec}"))?;
        }
        ensure(rec["oracle_value"].is_string(), || format!("oracle value not a string: {rec}"))?;
        ensure(rec.get("value").is_some_and(|v| v.is_string()) || rec.get("error").is_some(), || {
            format!("record has neither value nor error: {rec}")
        })?;
    }

    // Every cell of the oracle grid carries all three literal forms, one
    // record per center profile.
    for p in default_grid() {
        let w = p.max_weight();
        let profiles = all_profiles(p.ell(), p.mu());
        let at = |t: u32| profiles.iter().filter(|pr| pr.total() == t).count();
        let mut expect1 = 0;
        for t in 0..=w {
            for u in 0..=w {
                for s in 0..=w {
                    if u + s >= t {
                        expect1 += at(t);
                    }
                }
            }
        }
        let expect2: usize = (1..=w).map(at).sum();
        let expect3: usize = (0..=w).map(|d| (d as usize + 1) * at(d)).sum();
        for (variant, expect) in [
            (FormulaVariant::Thm1Literal, expect1),
            (FormulaVariant::Thm2Literal, expect2),
            (FormulaVariant::Thm3Literal, expect3),
        ] {
            let got = parsed
                .discrepancies
                .iter()
                .filter(|r| r.params == Some(p) && r.formula_variant == variant)
                .filter(|r| r.matched != MatchStatus::NotRun && r.oracle_value.is_some())
                .count();
            ensure(got == expect, || format!("{p:?} {}: {got} records, expected {expect}", variant.tag()))?;
        }
    }
    let s = parsed.summary.clone().unwrap();
    ensure(s.required_failures == 0, || format!("{} required checks failed", s.required_failures))?;
    Ok(format!(
        "{} required checks pass; {} literal findings ({} mismatch the oracle)",
        s.required_checks, s.findings, s.finding_mismatches
    ))
}

fn performance() -> Check {
    let p = Params::new(2, 8, 8, 8).unwrap();
    let start = Instant::now();
    let dist = weight_distribution(&p);
    let t = within(Duration::from_secs(1), start)?;
    ensure(dist.iter().sum::<Count>() == space_size(&p), || "q=2 m=eta=ell=8 distribution does not sum to q^mn".into())?;
    for p in small_grid() {
        let dist = weight_distribution(&p);
        for t in 0..=p.max_weight() {
            ensure(dist[t as usize] == sphere_volume_partition_sum(&p, t), || format!("{p:?} t={t}: DP != partition sum"))?;
        }
    }
    Ok(format!("m=eta=ell=8 distribution in {t:?}; DP equals partition sum"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("1 mass conservation", mass_conservation),
        ("2 rank/Hamming reductions", reductions),
        ("3 oracle equivalence", oracle_equivalence),
        ("4 J well-formedness", j_well_formed),
        ("5 per-profile aggregate", theorem3_per_profile),
        ("6 composition identities", composition_identities),
        ("7 ELS pair count", els_pair_count),
        ("8 discrepancy report", discrepancy_report),
        ("9 weight distribution performance", performance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
