//! Formula-vs-oracle verification over a grid of small parameter sets.
//!
//! Required checks (any mismatch fails the run): sphere and ball volumes,
//! the exact profile-based intersection, the per-profile special cases and
//! the rank-one additivity count. The literal closed forms over scalar
//! distances are recorded as findings alongside the oracle value.

use std::collections::{BTreeMap, BTreeSet};

use crate::compositions::{all_profiles, RankProfile};
use crate::error::{Error, Result};
use crate::exec::{map_collect, Strategy};
use crate::intersections::{
    rank1_additive_pairs, sumrank_intersection_exact, theorem1_literal_with, theorem2_literal,
    theorem2_per_profile, theorem3_aggregate, theorem3_literal, IntersectionQuery,
};
use crate::oracle::{canonical_centers, DistanceHistogram, Oracle};
use crate::report::{
    FormulaVariant, MatchStatus, ProfileDependence, ProfileValue, Query, Record, Report,
    SkippedCell, Summary, Value,
};
use crate::volumes::{ball_volume, weight_distribution};
use crate::{Count, Params};

/// `q = 2` with `(m, eta, ell)` in `{(2,2,1), (2,2,2), (2,1,3)}`.
pub fn default_grid() -> Vec<Params> {
    [(2, 2, 1), (2, 2, 2), (2, 1, 3)]
        .into_iter()
        .map(|(m, eta, ell)| Params::new(2, m, eta, ell).expect("valid grid cell"))
        .collect()
}

/// Results for one grid cell.
#[derive(Debug, Clone, Default)]
pub struct CellOutcome {
    pub required: Vec<Record>,
    pub findings: Vec<Record>,
    pub profile_dependence: Vec<ProfileDependence>,
}

/// Runs every cell (sorted, deduplicated) and assembles the report.
pub fn run(grid: &[Params], oracle: Oracle, strategy: Strategy, timestamp: &str) -> Report {
    let cells: Vec<Params> = grid.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let outcomes = map_collect(strategy, &cells, |p| verify_cell(p, oracle, strategy));

    let mut report = Report::new(timestamp, None);
    let mut summary = Summary::default();
    for (p, outcome) in cells.iter().zip(outcomes) {
        match outcome {
            Ok(cell) => {
                summary.cells_run += 1;
                report.records.extend(cell.required);
                report.discrepancies.extend(cell.findings);
                report.profile_dependence.extend(cell.profile_dependence);
            }
            Err(err) => {
                summary.cells_skipped += 1;
                report.skipped.push(SkippedCell { params: *p, reason: err.to_string() });
            }
        }
    }
    summary.required_checks = report.records.len();
    summary.required_failures =
        report.records.iter().filter(|r| r.matched == MatchStatus::No).count();
    summary.findings = report.discrepancies.len();
    summary.finding_mismatches =
        report.discrepancies.iter().filter(|r| r.matched == MatchStatus::No).count();
    report.summary = Some(summary);
    report
}

/// Oracle histograms of one cell, keyed by center distance profile.
struct CellOracle {
    histograms: BTreeMap<RankProfile, DistanceHistogram>,
}

impl CellOracle {
    fn build(p: &Params, oracle: Oracle, strategy: Strategy) -> Result<Self> {
        oracle.admit(p)?;
        let profiles = all_profiles(p.ell(), p.mu());
        let histograms = map_collect(strategy, &profiles, |prof| {
            let centers = canonical_centers(p, prof)?;
            oracle.distance_histogram(p, &centers)
        })
        .into_iter()
        .zip(profiles)
        .map(|(h, prof)| h.map(|h| (prof, h)))
        .collect::<Result<_>>()?;
        Ok(CellOracle { histograms })
    }

    fn within(&self, profile: &RankProfile, u: u32, s: u32) -> Count {
        self.histograms[profile].within(u, s)
    }
}

fn compare(
    p: &Params,
    query: Query,
    variant: FormulaVariant,
    value: Result<Value>,
    oracle: &Count,
) -> Record {
    match value {
        Ok(v) => Record::compared(Some(*p), query, variant, v, oracle),
        Err(e) => Record::failed(Some(*p), query, variant, oracle, e.to_string()),
    }
}

/// All required checks and findings for one parameter set. Fails only when
/// the oracle refuses the cell.
pub fn verify_cell(p: &Params, oracle: Oracle, strategy: Strategy) -> Result<CellOutcome> {
    let cell = CellOracle::build(p, oracle, strategy)?;
    let w = p.max_weight();
    let profiles: Vec<RankProfile> = cell.histograms.keys().cloned().collect();
    let zero = RankProfile::zeros(p.ell() as usize);
    let mut out = CellOutcome::default();

    // Spheres and balls against the weight histogram around one center.
    let dist = weight_distribution(p);
    let marginal = cell.histograms[&zero].first_marginal();
    for t in 0..=w {
        let query = Query { t: Some(t), ..Query::default() };
        out.required.push(compare(
            p,
            query.clone(),
            FormulaVariant::Sphere,
            Ok(Value::count(&dist[t as usize])),
            &Count::from(marginal[t as usize]),
        ));
        out.required.push(compare(
            p,
            query,
            FormulaVariant::Ball,
            Ok(Value::count(&ball_volume(p, t))),
            &cell.within(&zero, t, w),
        ));
    }

    // Exact intersection for every radius pair and profile.
    let mut exact: BTreeMap<(u32, u32, RankProfile), Count> = BTreeMap::new();
    for prof in &profiles {
        for u in 0..=w {
            for s in 0..=w {
                let query = Query { u: Some(u), s: Some(s), profile: Some(prof.clone()), ..Query::default() };
                let value = IntersectionQuery::new(*p, u, s, prof.clone())
                    .and_then(|q| sumrank_intersection_exact(&q));
                if let Ok(v) = &value {
                    exact.insert((u, s, prof.clone()), v.clone());
                }
                out.required.push(compare(
                    p,
                    query,
                    FormulaVariant::Exact,
                    value.map(|v| Value::count(&v)),
                    &cell.within(prof, u, s),
                ));
            }
        }
    }

    // Per-profile special cases.
    for prof in &profiles {
        let delta = prof.total();
        for gamma in 0..=delta {
            let query = Query {
                gamma: Some(gamma),
                delta: Some(delta),
                profile: Some(prof.clone()),
                ..Query::default()
            };
            out.required.push(compare(
                p,
                query,
                FormulaVariant::Thm3Aggregate,
                theorem3_aggregate(p, gamma, prof).map(|v| Value::count(&v)),
                &cell.within(prof, gamma, delta - gamma),
            ));
        }
        if delta >= 1 {
            let query = Query { delta: Some(delta), profile: Some(prof.clone()), ..Query::default() };
            out.required.push(compare(
                p,
                query,
                FormulaVariant::Thm2Profile,
                theorem2_per_profile(p, prof).map(|v| Value::count(&v)),
                &cell.within(prof, delta, 1),
            ));
        }
    }

    // Rank-one additivity inside a single block.
    for r in 0..=p.mu() {
        let counted = oracle.additive_rank1_partners(p.eta(), p.m(), r, p.q())?;
        let query = Query { rank: Some(r), ..Query::default() };
        out.required.push(compare(
            p,
            query,
            FormulaVariant::Lemma8,
            rank1_additive_pairs(p.eta(), p.m(), r, p.q()).map(|v| Value::count(&v)),
            &counted,
        ));
    }

    // Findings: literal closed forms evaluated at the scalar distance,
    // compared against every center pair with that total distance.
    let by_total = |t: u32| profiles.iter().filter(move |pr| pr.total() == t);
    for t in 0..=w {
        for u in 0..=w {
            for s in 0..=w {
                if u + s < t {
                    continue;
                }
                let literal = theorem1_literal_with(p, u, s, t, strategy).map(|v| Value::count(&v));
                for prof in by_total(t) {
                    let query = Query {
                        t: Some(t),
                        u: Some(u),
                        s: Some(s),
                        profile: Some(prof.clone()),
                        ..Query::default()
                    };
                    out.findings.push(compare(
                        p,
                        query,
                        FormulaVariant::Thm1Literal,
                        clone_result(&literal),
                        &cell.within(prof, u, s),
                    ));
                }
            }
        }
    }
    for delta in 1..=w {
        let literal = theorem2_literal(p, delta).map(|v| Value::signed(&v));
        for prof in by_total(delta) {
            let query = Query { delta: Some(delta), profile: Some(prof.clone()), ..Query::default() };
            out.findings.push(compare(
                p,
                query,
                FormulaVariant::Thm2Literal,
                clone_result(&literal),
                &cell.within(prof, delta, 1),
            ));
        }
    }
    for delta in 0..=w {
        for gamma in 0..=delta {
            let literal = theorem3_literal(p, gamma, delta).map(|v| Value::count(&v));
            for prof in by_total(delta) {
                let query = Query {
                    gamma: Some(gamma),
                    delta: Some(delta),
                    profile: Some(prof.clone()),
                    ..Query::default()
                };
                out.findings.push(compare(
                    p,
                    query,
                    FormulaVariant::Thm3Literal,
                    clone_result(&literal),
                    &cell.within(prof, gamma, delta - gamma),
                ));
            }
        }
    }

    // Does the exact volume depend on more than the total distance?
    for t in 0..=w {
        for u in 0..=w {
            for s in 0..=w {
                let values: Vec<ProfileValue> = by_total(t)
                    .filter_map(|prof| {
                        exact.get(&(u, s, prof.clone())).map(|v| ProfileValue {
                            profile: prof.clone(),
                            value: v.to_string(),
                        })
                    })
                    .collect();
                let distinct: BTreeSet<&str> = values.iter().map(|v| v.value.as_str()).collect();
                if distinct.len() > 1 {
                    out.profile_dependence.push(ProfileDependence { params: *p, u, s, t, values });
                }
            }
        }
    }

    debug_assert!(out.required.iter().all(|r| r.oracle_value.is_some()));
    Ok(out)
}

fn clone_result(r: &Result<Value>) -> Result<Value> {
    match r {
        Ok(v) => Ok(v.clone()),
        Err(e) => Err(e.clone()),
    }
}

/// Grid notation: `default`, `none`, or comma-separated `q:m:eta:ell` cells.
pub fn parse_grid(spec: &str) -> Result<Vec<Params>> {
    match spec.trim() {
        "default" => Ok(default_grid()),
        "none" | "" => Ok(Vec::new()),
        list => list
            .split(',')
            .map(|cell| {
                let fields: Vec<&str> = cell.trim().split(':').collect();
                let [q, m, eta, ell] = fields.as_slice() else {
                    return Err(Error::invalid(format!(
                        "grid cell '{cell}' is not of the form q:m:eta:ell"
                    )));
                };
                let num = |s: &str| {
                    s.parse::<u32>()
                        .map_err(|_| Error::invalid(format!("'{s}' in grid cell '{cell}' is not a number")))
                };
                Params::new(u64::from(num(q)?), num(m)?, num(eta)?, num(ell)?)
            })
            .collect(),
    }
}
