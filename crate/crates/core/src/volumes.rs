//! Sphere and ball volumes in the sum-rank metric.
//!
//! The production path convolves the single-block rank distribution
//! `NM_q(eta, m, 0..=mu)` with itself `ell` times. The partition-sum form
//! (sum over rank profiles of per-block products) is kept as a reference.

use num_traits::{One, Zero};

use crate::compositions::enumerate_uniform;
use crate::qkit::{num_matrices_rank, pow};
use crate::{Count, Params};

/// Rank distribution of one `m x eta` block: entry `r` is `NM_q(eta, m, r)`.
pub fn block_rank_distribution(p: &Params) -> Vec<Count> {
    (0..=p.mu())
        .map(|r| {
            num_matrices_rank(p.eta().into(), p.m().into(), r.into(), p.q())
                .expect("q validated by Params")
        })
        .collect()
}

/// `q^{mn}`, the size of the whole space.
pub fn space_size(p: &Params) -> Count {
    pow(p.q(), u64::from(p.m()) * u64::from(p.n()))
}

/// Sphere volumes for every radius `0..=ell*mu`.
pub fn weight_distribution(p: &Params) -> Vec<Count> {
    let block = block_rank_distribution(p);
    let mut dist = vec![Count::one()];
    for _ in 0..p.ell() {
        dist = convolve(&dist, &block);
    }
    debug_assert_eq!(dist.len(), p.max_weight() as usize + 1);
    dist
}

fn convolve(a: &[Count], b: &[Count]) -> Vec<Count> {
    let mut out = vec![Count::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Number of vectors of sum-rank weight exactly `t`; zero for `t > ell*mu`.
pub fn sphere_volume(p: &Params, t: u32) -> Count {
    if t > p.max_weight() {
        return Count::zero();
    }
    weight_distribution(p).swap_remove(t as usize)
}

/// Number of vectors of sum-rank weight at most `t`. Radii at or beyond
/// `ell*mu` give the whole space.
pub fn ball_volume(p: &Params, t: u32) -> Count {
    if t >= p.max_weight() {
        return space_size(p);
    }
    weight_distribution(p).into_iter().take(t as usize + 1).sum()
}

/// Reference evaluation of the sphere volume as a sum over rank profiles
/// `t_1 + ... + t_ell = t` of `prod_i NM_q(eta, m, t_i)`.
pub fn sphere_volume_partition_sum(p: &Params, t: u32) -> Count {
    let block = block_rank_distribution(p);
    enumerate_uniform(t, p.ell(), p.mu())
        .map(|profile| {
            profile
                .parts()
                .iter()
                .map(|&r| &block[r as usize])
                .fold(Count::one(), |acc, x| acc * x)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkit::binomial;

    fn params(q: u64, m: u32, eta: u32, ell: u32) -> Params {
        Params::new(q, m, eta, ell).unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn sphere_examples() {
        assert_eq!(sphere_volume(&params(2, 2, 2, 1), 1), c(9));
        assert_eq!(sphere_volume(&params(3, 2, 3, 2), 0), c(1));
        assert_eq!(sphere_volume(&params(2, 2, 2, 2), 1), c(18));
        assert_eq!(sphere_volume(&params(2, 2, 2, 2), 5), c(0));
    }

    #[test]
    fn ball_examples() {
        assert_eq!(ball_volume(&params(2, 2, 2, 2), 4), c(256));
        assert_eq!(ball_volume(&params(2, 2, 2, 2), 40), c(256));
        assert_eq!(ball_volume(&params(3, 1, 2, 3), 0), c(1));
        assert_eq!(ball_volume(&params(2, 2, 2, 1), 1), c(10));
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(weight_distribution(&params(2, 2, 2, 1)), vec![c(1), c(9), c(6)]);
        let d = weight_distribution(&params(2, 2, 2, 2));
        assert_eq!(d[0], c(1));
        assert_eq!(d.iter().sum::<Count>(), c(256));
    }

    #[test]
    fn ball_is_prefix_sum_and_monotone() {
        let p = params(3, 2, 3, 3);
        let d = weight_distribution(&p);
        let mut running = Count::zero();
        let mut prev = Count::zero();
        for t in 0..=p.max_weight() + 2 {
            if let Some(x) = d.get(t as usize) {
                running += x;
            }
            let b = ball_volume(&p, t);
            assert_eq!(b, running);
            assert!(b >= prev);
            prev = b;
        }
    }

    #[test]
    fn hamming_reduction() {
        for q in 2..=3u64 {
            for m in 1..=3u32 {
                for ell in 1..=6u32 {
                    let p = params(q, m, 1, ell);
                    for t in 0..=ell {
                        let expect = binomial(ell.into(), t.into())
                            * num_traits::pow(c(q).pow(m) - c(1), t as usize);
                        assert_eq!(sphere_volume(&p, t), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn convolution_matches_partition_sum() {
        for q in 2..=3 {
            for m in 1..=3 {
                for eta in 1..=3 {
                    for ell in 1..=4 {
                        let p = params(q, m, eta, ell);
                        let d = weight_distribution(&p);
                        for t in 0..=p.max_weight() {
                            assert_eq!(d[t as usize], sphere_volume_partition_sum(&p, t));
                        }
                    }
                }
            }
        }
    }
}
