//! Intersection volumes of two balls.
//!
//! In the rank metric (one block) the intersection numbers of the
//! bilinear-forms association scheme give the count exactly:
//!
//! `J(u, s, t) = sum_i NM(i) K_u(i) K_s(i) K_t(i) / (q^{mn} NM(t))`
//!
//! is the number of matrices at rank distance `u` from one center and `s`
//! from another center at rank distance `t`, and `I(u, s, t)` sums `J(i, j, t)`
//! over `i <= u`, `j <= s`.
//!
//! In the sum-rank metric the intersection depends on the per-block
//! distance profile of the two centers, not only on its total. The exact
//! count [`sumrank_intersection_exact`] takes that profile and multiplies
//! block-wise sphere intersections. The `*_literal` functions evaluate the
//! closed forms that sum over every composition of the scalar distance, for
//! comparison against the oracle; they are not expected to agree with it in
//! general.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::{enumerate_bounded, enumerate_uniform, RankProfile};
use crate::error::{Error, Result};
use crate::exec::{map_reduce, Strategy};
use crate::qkit::{check_q, gaussian_binomial, num_matrices_rank, pow, q_krawtchouk};
use crate::{Count, Params, SignedCount};

/// Cached tables of the bilinear-forms scheme on `m x n` matrices over `F_q`.
#[derive(Debug, Clone)]
pub struct RankScheme {
    n: u32,
    m: u32,
    q: u64,
    rank_counts: Vec<Count>,
    // krawtchouk[j][i] = K_j(i, n, m)
    krawtchouk: Vec<Vec<SignedCount>>,
    space: Count,
}

impl RankScheme {
    pub fn new(n: u32, m: u32, q: u64) -> Result<Self> {
        check_q(q)?;
        let (n64, m64) = (u64::from(n), u64::from(m));
        let rank_counts = (0..=n64)
            .map(|i| num_matrices_rank(n64, m64, i, q))
            .collect::<Result<Vec<_>>>()?;
        let krawtchouk = (0..=n64)
            .map(|j| (0..=n64).map(|i| q_krawtchouk(j, i, n64, m64, q)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(RankScheme { n, m, q, rank_counts, krawtchouk, space: pow(q, n64 * m64) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Largest rank, `min(m, n)`.
    pub fn max_rank(&self) -> u32 {
        self.n.min(self.m)
    }

    pub fn rank_count(&self, r: u32) -> Count {
        self.rank_counts.get(r as usize).cloned().unwrap_or_default()
    }

    fn check_distance(&self, t: u32) -> Result<()> {
        if t > self.max_rank() {
            return Err(Error::invalid(format!(
                "center distance {t} exceeds min(m, n) = {}",
                self.max_rank()
            )));
        }
        Ok(())
    }

    /// `J(u, s, t)`: matrices at rank distance exactly `u` and `s` from two
    /// centers at rank distance `t`.
    pub fn sphere_intersection(&self, u: u32, s: u32, t: u32) -> Result<Count> {
        self.check_distance(t)?;
        let d = self.max_rank();
        if u > d || s > d || u + s < t || u.abs_diff(s) > t {
            return Ok(Count::zero());
        }
        let (ku, ks, kt) = (
            &self.krawtchouk[u as usize],
            &self.krawtchouk[s as usize],
            &self.krawtchouk[t as usize],
        );
        let mut numerator = SignedCount::zero();
        for i in 0..=self.n as usize {
            let nm = &self.rank_counts[i];
            if nm.is_zero() {
                continue;
            }
            numerator += SignedCount::from(nm.clone()) * &ku[i] * &ks[i] * &kt[i];
        }
        let denominator = SignedCount::from(&self.space * &self.rank_counts[t as usize]);
        let (quot, rem) = numerator.div_rem(&denominator);
        if !rem.is_zero() {
            return Err(Error::Inconsistency(format!(
                "J({u},{s},{t},{},{}) over q={}: numerator not divisible by q^(mn) NM(t)",
                self.n, self.m, self.q
            )));
        }
        quot.to_biguint().ok_or_else(|| {
            Error::Inconsistency(format!(
                "J({u},{s},{t},{},{}) over q={} is negative",
                self.n, self.m, self.q
            ))
        })
    }

    /// `I(u, s, t) = sum_{i<=u} sum_{j<=s} J(i, j, t)`: matrices within rank
    /// distance `u` and `s` of two centers at rank distance `t`.
    pub fn ball_intersection(&self, u: u32, s: u32, t: u32) -> Result<Count> {
        self.check_distance(t)?;
        let d = self.max_rank();
        let mut acc = Count::zero();
        for i in 0..=u.min(d) {
            for j in 0..=s.min(d) {
                acc += self.sphere_intersection(i, j, t)?;
            }
        }
        Ok(acc)
    }

    /// `table[a][b] = J(a, b, t)` for `a, b <= max_rank`.
    pub fn sphere_intersection_table(&self, t: u32) -> Result<Vec<Vec<Count>>> {
        let d = self.max_rank();
        (0..=d)
            .map(|a| (0..=d).map(|b| self.sphere_intersection(a, b, t)).collect())
            .collect()
    }
}

/// `J(u, s, t, n, m)` over `F_q`. See [`RankScheme::sphere_intersection`].
pub fn rank_sphere_intersection_j(u: u32, s: u32, t: u32, n: u32, m: u32, q: u64) -> Result<Count> {
    RankScheme::new(n, m, q)?.sphere_intersection(u, s, t)
}

/// `I(u, s, t, n, m)` over `F_q`. See [`RankScheme::ball_intersection`].
///
/// The summand is `J(i, j, t)` over the running indices; a fixed `J(u, s, t)`
/// under the double sum would not count the ball intersection.
pub fn rank_ball_intersection_i(u: u32, s: u32, t: u32, n: u32, m: u32, q: u64) -> Result<Count> {
    RankScheme::new(n, m, q)?.ball_intersection(u, s, t)
}

/// Two balls of radii `u` and `s` whose centers differ block-wise by the
/// ranks in `profile`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionQuery {
    params: Params,
    u: u32,
    s: u32,
    profile: RankProfile,
}

impl IntersectionQuery {
    /// Radii beyond `ell*mu` are clamped to it (the ball is then the whole space).
    pub fn new(params: Params, u: u32, s: u32, profile: RankProfile) -> Result<Self> {
        check_profile(&params, &profile)?;
        let cap = params.max_weight();
        Ok(IntersectionQuery { params, u: u.min(cap), s: s.min(cap), profile })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn profile(&self) -> &RankProfile {
        &self.profile
    }
}

fn check_profile(p: &Params, profile: &RankProfile) -> Result<()> {
    if profile.len() != p.ell() as usize {
        return Err(Error::invalid(format!(
            "profile {profile} has {} parts but ell = {}",
            profile.len(),
            p.ell()
        )));
    }
    if profile.max_part() > p.mu() {
        return Err(Error::invalid(format!(
            "profile {profile} has a part above mu = {}",
            p.mu()
        )));
    }
    Ok(())
}

/// Exact `|B(x, u) ∩ B(y, s)|` for centers whose block-wise rank distances
/// are `query.profile()`.
///
/// Vectors split block-wise, so the count is the sum over per-block radii
/// `a, b` with `sum a <= u`, `sum b <= s` of `prod_i J(a_i, b_i, t_i, eta, m)`.
/// Evaluated as a truncated two-variable polynomial product over blocks.
pub fn sumrank_intersection_exact(query: &IntersectionQuery) -> Result<Count> {
    let p = query.params();
    let scheme = RankScheme::new(p.eta(), p.m(), p.q())?;
    let (u, s) = (query.u() as usize, query.s() as usize);
    let mut tables: Vec<Option<Vec<Vec<Count>>>> = vec![None; p.mu() as usize + 1];

    // poly[a][b]: number of partial vectors (over the blocks seen so far) at
    // distance a from x and b from y.
    let mut poly = vec![vec![Count::zero(); s + 1]; u + 1];
    poly[0][0] = Count::one();
    for &t in query.profile().parts() {
        if tables[t as usize].is_none() {
            tables[t as usize] = Some(scheme.sphere_intersection_table(t)?);
        }
        let table = tables[t as usize].as_ref().expect("filled above");
        let mut next = vec![vec![Count::zero(); s + 1]; u + 1];
        for (a0, row) in poly.iter().enumerate() {
            for (b0, acc) in row.iter().enumerate() {
                if acc.is_zero() {
                    continue;
                }
                for (da, trow) in table.iter().enumerate().take(u + 1 - a0) {
                    for (db, j) in trow.iter().enumerate().take(s + 1 - b0) {
                        if !j.is_zero() {
                            next[a0 + da][b0 + db] += acc * j;
                        }
                    }
                }
            }
        }
        poly = next;
    }
    Ok(poly.into_iter().flatten().sum())
}

/// The general closed form summed over every composition of `u`, `s` and
/// `t` into `ell` parts bounded by `mu`:
///
/// `sum_{u⃗} sum_{s⃗} sum_{t⃗} prod_i I(u_i, s_i, t_i, eta, m)`.
///
/// Requires `u + s >= t`.
pub fn theorem1_literal(p: &Params, u: u32, s: u32, t: u32) -> Result<Count> {
    theorem1_literal_with(p, u, s, t, Strategy::default())
}

pub fn theorem1_literal_with(p: &Params, u: u32, s: u32, t: u32, strategy: Strategy) -> Result<Count> {
    if u + s < t {
        return Err(Error::invalid(format!("needs u + s >= t (u={u}, s={s}, t={t})")));
    }
    let scheme = RankScheme::new(p.eta(), p.m(), p.q())?;
    let mu = p.mu();
    let side = mu as usize + 1;
    let mut ball = vec![Count::zero(); side * side * side];
    for a in 0..=mu {
        for b in 0..=mu {
            for c in 0..=mu {
                ball[(a as usize * side + b as usize) * side + c as usize] =
                    scheme.ball_intersection(a, b, c)?;
            }
        }
    }
    let us: Vec<RankProfile> = enumerate_uniform(u, p.ell(), mu).collect();
    let ss: Vec<RankProfile> = enumerate_uniform(s, p.ell(), mu).collect();
    let ts: Vec<RankProfile> = enumerate_uniform(t, p.ell(), mu).collect();
    let total = map_reduce(
        strategy,
        &us,
        Count::zero,
        |uv| {
            let mut acc = Count::zero();
            for sv in &ss {
                for tv in &ts {
                    let mut prod = Count::one();
                    for ((&a, &b), &c) in uv.parts().iter().zip(sv.parts()).zip(tv.parts()) {
                        prod *= &ball[(a as usize * side + b as usize) * side + c as usize];
                        if prod.is_zero() {
                            break;
                        }
                    }
                    acc += prod;
                }
            }
            acc
        },
        |a, b| a + b,
    );
    Ok(total)
}

/// Rank-one vectors `y` with `rk(x) + rk(y) = rk(x - y)` for a fixed `m x n`
/// matrix `x` of rank `r`: `(q^n - q^r)(q^m - q^r)/(q - 1)`.
pub fn rank1_additive_pairs(n: u32, m: u32, r: u32, q: u64) -> Result<Count> {
    check_q(q)?;
    if r > n.min(m) {
        return Err(Error::invalid(format!("rank {r} exceeds min(m, n) = {}", n.min(m))));
    }
    let qr = pow(q, r.into());
    let num = (pow(q, n.into()) - &qr) * (pow(q, m.into()) - &qr);
    exact_div(num, q - 1, "rank-one additive pair count")
}

fn exact_div(num: Count, den: u64, what: &str) -> Result<Count> {
    let (quot, rem) = num.div_rem(&Count::from(den));
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!("{what}: inexact division by {den}")));
    }
    Ok(quot)
}

/// `|B(x, delta) ∩ B(y, 1)|` for centers with block-wise distances `profile`
/// (`delta = sum profile`).
///
/// The intersection is the zero vector plus the weight-one sphere around `y`
/// minus the vectors pushed to distance `delta + 1`. A weight-one vector is
/// nonzero in a single block, so the sphere has
/// `ell (q^m - 1)(q^eta - 1)/(q - 1)` elements and block `i` loses
/// `(q^eta - q^{delta_i})(q^m - q^{delta_i})/(q - 1)` of them.
pub fn theorem2_per_profile(p: &Params, profile: &RankProfile) -> Result<Count> {
    check_profile(p, profile)?;
    if profile.total() == 0 {
        return Err(Error::invalid(
            "the centers coincide; the distance between them must be at least 1",
        ));
    }
    let q = p.q();
    let one = Count::one();
    let block_sphere = exact_div(
        (pow(q, p.m().into()) - &one) * (pow(q, p.eta().into()) - &one),
        q - 1,
        "weight-one sphere",
    )?;
    let mut value = one + block_sphere * p.ell();
    for &d in profile.parts() {
        value -= rank1_additive_pairs(p.eta(), p.m(), d, q)?;
    }
    Ok(value)
}

/// The printed special case `Vol(delta, 1, delta)`:
///
/// `1 + (q^m - 1)(q^n - 1)/(q - 1) - sum_{δ⃗} sum_i (q^eta - q^{δ_i})(q^m - q^{δ_i})/(q - 1)`
///
/// with the outer sum over all compositions of `delta`. Signed, because the
/// subtracted sum grows with the number of compositions.
pub fn theorem2_literal(p: &Params, delta: u32) -> Result<SignedCount> {
    if delta == 0 || delta > p.max_weight() {
        return Err(Error::invalid(format!(
            "delta must lie in 1..={} (got {delta})",
            p.max_weight()
        )));
    }
    let q = p.q();
    let one = Count::one();
    let rank_sphere = exact_div(
        (pow(q, p.m().into()) - &one) * (pow(q, p.n().into()) - &one),
        q - 1,
        "rank-one count",
    )?;
    let mu = p.mu();
    let per_rank = (0..=mu)
        .map(|d| rank1_additive_pairs(p.eta(), p.m(), d, q))
        .collect::<Result<Vec<_>>>()?;
    let subtracted: Count = enumerate_uniform(delta, p.ell(), mu)
        .flat_map(|profile| profile.into_parts())
        .map(|d| per_rank[d as usize].clone())
        .sum();
    Ok(SignedCount::from(one + rank_sphere) - SignedCount::from(subtracted))
}

fn midpoint_count(q: u64, gamma: u32, delta: u32) -> Result<Count> {
    let g = u64::from(gamma);
    let d = u64::from(delta);
    Ok(pow(q, g * (d - g)) * gaussian_binomial(d, g, q)?)
}

/// `prod_i q^{γ_i (δ_i - γ_i)} [δ_i choose γ_i]_q`: vectors `v` with block
/// ranks `γ⃗` and `rk(y_i - v_i) = δ_i - γ_i` in every block, for `x = 0` and
/// `y` of block ranks `δ⃗`.
pub fn theorem3_per_profile(p: &Params, gamma: &RankProfile, delta: &RankProfile) -> Result<Count> {
    check_profile(p, delta)?;
    check_profile(p, gamma)?;
    let mut acc = Count::one();
    for (i, (&g, &d)) in gamma.parts().iter().zip(delta.parts()).enumerate() {
        if g > d {
            return Err(Error::invalid(format!(
                "gamma exceeds delta in block {i} ({g} > {d})"
            )));
        }
        acc *= midpoint_count(p.q(), g, d)?;
    }
    Ok(acc)
}

/// `|B(x, γ) ∩ B(y, δ - γ)|` for centers with block-wise distances `delta`:
/// the per-profile count summed over `γ⃗` with `γ_i <= δ_i`, `sum γ_i = γ`.
pub fn theorem3_aggregate(p: &Params, gamma: u32, delta: &RankProfile) -> Result<Count> {
    check_profile(p, delta)?;
    if gamma > delta.total() {
        return Err(Error::invalid(format!(
            "gamma = {gamma} exceeds the center distance {}",
            delta.total()
        )));
    }
    enumerate_bounded(gamma, delta.parts())
        .map(|g| theorem3_per_profile(p, &g, delta))
        .sum()
}

/// The printed special case `Vol(γ, δ - γ, δ)`:
///
/// `sum_{δ⃗} sum_{γ⃗ <= δ⃗} sum_i q^{γ_i (δ_i - γ_i)} [δ_i choose γ_i]_q`
///
/// with a sum over blocks in the innermost position.
pub fn theorem3_literal(p: &Params, gamma: u32, delta: u32) -> Result<Count> {
    if gamma > delta {
        return Err(Error::invalid(format!("needs gamma <= delta (got {gamma} > {delta})")));
    }
    let mut acc = Count::zero();
    for dv in enumerate_uniform(delta, p.ell(), p.mu()) {
        for gv in enumerate_bounded(gamma, dv.parts()) {
            for (&g, &d) in gv.parts().iter().zip(dv.parts()) {
                acc += midpoint_count(p.q(), g, d)?;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    fn params(q: u64, m: u32, eta: u32, ell: u32) -> Params {
        Params::new(q, m, eta, ell).unwrap()
    }

    fn profile(parts: &[u32]) -> RankProfile {
        RankProfile::new(parts.to_vec())
    }

    #[test]
    fn j_examples() {
        assert_eq!(rank_sphere_intersection_j(1, 1, 2, 2, 2, 2).unwrap(), c(6));
        assert_eq!(rank_sphere_intersection_j(0, 2, 2, 2, 2, 2).unwrap(), c(1));
        assert_eq!(rank_sphere_intersection_j(1, 1, 0, 2, 2, 2).unwrap(), c(9));
        assert_eq!(rank_sphere_intersection_j(1, 2, 0, 2, 2, 2).unwrap(), c(0));
        assert!(rank_sphere_intersection_j(1, 1, 3, 2, 2, 2).is_err());
    }

    #[test]
    fn j_well_formed_on_grid() {
        for q in 2..=3 {
            for n in 1..=4 {
                for m in 1..=4 {
                    let scheme = RankScheme::new(n, m, q).unwrap();
                    let d = scheme.max_rank();
                    for t in 0..=d {
                        let mut mass = Count::zero();
                        for u in 0..=d {
                            for s in 0..=d {
                                let j = scheme.sphere_intersection(u, s, t).unwrap();
                                assert_eq!(j, scheme.sphere_intersection(s, u, t).unwrap());
                                if t == 0 {
                                    let expect =
                                        if u == s { scheme.rank_count(u) } else { Count::zero() };
                                    assert_eq!(j, expect);
                                }
                                mass += j;
                            }
                        }
                        assert_eq!(mass, pow(q, u64::from(n * m)));
                    }
                }
            }
        }
    }

    #[test]
    fn i_examples() {
        assert_eq!(rank_ball_intersection_i(0, 1, 2, 2, 2, 2).unwrap(), c(0));
        assert_eq!(rank_ball_intersection_i(2, 2, 1, 2, 2, 2).unwrap(), c(16));
        assert_eq!(rank_ball_intersection_i(3, 3, 2, 3, 2, 3).unwrap(), pow(3, 6));
        assert_eq!(rank_ball_intersection_i(1, 1, 1, 2, 2, 2).unwrap(), c(6));
    }

    #[test]
    fn exact_examples() {
        let p = params(2, 2, 2, 2);
        let q = |u, s, t: &[u32]| {
            sumrank_intersection_exact(&IntersectionQuery::new(p, u, s, profile(t)).unwrap())
                .unwrap()
        };
        assert_eq!(q(0, 4, &[1, 1]), c(1));
        assert_eq!(q(0, 9, &[1, 1]), c(1));
        assert_eq!(q(1, 0, &[2, 0]), c(0));
        assert_eq!(q(1, 1, &[2, 0]), c(6));
        assert_eq!(q(4, 4, &[2, 1]), c(256));
    }

    #[test]
    fn query_validation() {
        let p = params(2, 2, 2, 2);
        assert!(IntersectionQuery::new(p, 1, 1, profile(&[1])).is_err());
        assert!(IntersectionQuery::new(p, 1, 1, profile(&[3, 0])).is_err());
        let q = IntersectionQuery::new(p, 7, 1, profile(&[1, 0])).unwrap();
        assert_eq!(q.u(), 4);
    }

    #[test]
    fn theorem1_single_block_is_i() {
        let p = params(2, 2, 2, 1);
        assert_eq!(theorem1_literal(&p, 1, 1, 1).unwrap(), c(6));
        for u in 0..=2 {
            for s in 0..=2 {
                for t in 0..=(u + s).min(2) {
                    assert_eq!(
                        theorem1_literal(&p, u, s, t).unwrap(),
                        rank_ball_intersection_i(u, s, t, 2, 2, 2).unwrap()
                    );
                }
            }
        }
        assert!(theorem1_literal(&p, 0, 0, 1).is_err());
    }

    #[test]
    fn theorem1_strategies_agree() {
        let p = params(2, 3, 2, 3);
        for (u, s, t) in [(2, 3, 4), (4, 4, 2), (6, 1, 5)] {
            assert_eq!(
                theorem1_literal_with(&p, u, s, t, Strategy::Sequential).unwrap(),
                theorem1_literal_with(&p, u, s, t, Strategy::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn theorem2_examples() {
        let p = params(2, 2, 2, 1);
        assert_eq!(theorem2_per_profile(&p, &profile(&[1])).unwrap(), c(6));
        assert_eq!(theorem2_per_profile(&p, &profile(&[2])).unwrap(), c(10));
        assert!(theorem2_per_profile(&p, &profile(&[0])).is_err());
        assert_eq!(theorem2_literal(&p, 1).unwrap(), SignedCount::from(6));
        assert_eq!(theorem2_literal(&p, 2).unwrap(), SignedCount::from(10));
        assert!(theorem2_literal(&p, 0).is_err());
        assert!(theorem2_literal(&p, 3).is_err());
    }

    #[test]
    fn theorem2_literal_can_go_negative() {
        let p = params(2, 2, 2, 2);
        assert_eq!(theorem2_literal(&p, 2).unwrap(), SignedCount::from(20));
        let wide = params(2, 1, 1, 8);
        assert!(theorem2_literal(&wide, 4).unwrap() < SignedCount::zero());
    }

    #[test]
    fn theorem3_examples() {
        let p1 = params(2, 2, 2, 1);
        assert_eq!(theorem3_per_profile(&p1, &profile(&[0]), &profile(&[2])).unwrap(), c(1));
        assert_eq!(theorem3_per_profile(&p1, &profile(&[2]), &profile(&[2])).unwrap(), c(1));
        assert_eq!(theorem3_per_profile(&p1, &profile(&[1]), &profile(&[2])).unwrap(), c(6));
        assert!(theorem3_per_profile(&p1, &profile(&[2]), &profile(&[1])).is_err());

        let p2 = params(2, 2, 2, 2);
        let d = profile(&[1, 1]);
        assert_eq!(theorem3_aggregate(&p2, 0, &d).unwrap(), c(1));
        assert_eq!(theorem3_aggregate(&p2, 2, &d).unwrap(), c(1));
        assert_eq!(theorem3_aggregate(&p2, 1, &d).unwrap(), c(2));
        assert!(theorem3_aggregate(&p2, 3, &d).is_err());
    }

    #[test]
    fn theorem3_rank_metric_reduction() {
        for q in 2..=3 {
            let p = params(q, 3, 3, 1);
            for delta in 0..=3 {
                for gamma in 0..=delta {
                    let agg = theorem3_aggregate(&p, gamma, &profile(&[delta])).unwrap();
                    assert_eq!(agg, midpoint_count(q, gamma, delta).unwrap());
                    let exact = sumrank_intersection_exact(
                        &IntersectionQuery::new(p, gamma, delta - gamma, profile(&[delta])).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(agg, exact);
                }
            }
        }
    }

    #[test]
    fn lemma8_values() {
        assert_eq!(rank1_additive_pairs(2, 2, 1, 2).unwrap(), c(4));
        assert_eq!(rank1_additive_pairs(3, 2, 0, 3).unwrap(), c(13 * 8));
        assert_eq!(rank1_additive_pairs(3, 3, 3, 2).unwrap(), c(0));
        assert!(rank1_additive_pairs(2, 2, 3, 2).is_err());
    }
}
