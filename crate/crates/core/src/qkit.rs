//! Exact q-analogue arithmetic.
//!
//! All functions are q-generic: `q` may be any integer `>= 2`, prime or
//! not. Nothing here rounds; intermediate divisions are checked to be
//! exact.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Count, SignedCount};

pub(crate) fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        Err(Error::invalid(format!("q must be at least 2, got {q}")))
    } else {
        Ok(())
    }
}

/// `q^e` as a big integer.
pub fn pow(q: u64, e: u64) -> Count {
    num_traits::pow(Count::from(q), e as usize)
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Gaussian binomial `[n choose k]_q`, the number of `k`-dimensional
/// subspaces of `F_q^n`.
///
/// Computed as the telescoping product `prod_{i=1..k} (q^{n-k+i}-1)/(q^i-1)`,
/// dividing after every multiplication. The partial product after step `i`
/// is `[n-k+i choose i]_q`, so every division is exact.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> Result<Count> {
    check_q(q)?;
    if k > n {
        return Ok(Count::zero());
    }
    let one = Count::one();
    let mut acc = Count::one();
    for i in 1..=k {
        acc *= pow(q, n - k + i) - &one;
        let den = pow(q, i) - &one;
        let (quot, rem) = acc.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::Inconsistency(format!(
                "inexact division in [{n} choose {k}]_{q} at step {i}"
            )));
        }
        acc = quot;
    }
    Ok(acc)
}

/// `NM_q(n, m, t)`: the number of `m x n` matrices over `F_q` of rank `t`.
///
/// Zero when `t > min(m, n)`.
pub fn num_matrices_rank(n: u64, m: u64, t: u64, q: u64) -> Result<Count> {
    check_q(q)?;
    if t > n.min(m) {
        return Ok(Count::zero());
    }
    let qm = pow(q, m);
    let mut acc = gaussian_binomial(n, t, q)?;
    for i in 0..t {
        acc *= &qm - pow(q, i);
    }
    Ok(acc)
}

/// q-Krawtchouk value `K_j(i, n, m)`:
///
/// `sum_{l=0..j} (-1)^{j-l} q^{lm + C(j-l, 2)} [n-l choose n-j]_q [n-i choose l]_q`
///
/// with `C(0, 2) = C(1, 2) = 0`. These are the eigenvalues of the
/// bilinear-forms scheme on `m x n` matrices; `K_j(0, n, m)` is the number of
/// rank-`j` matrices.
pub fn q_krawtchouk(j: u64, i: u64, n: u64, m: u64, q: u64) -> Result<SignedCount> {
    check_q(q)?;
    if i > n || j > n {
        return Err(Error::invalid(format!(
            "q-Krawtchouk needs i, j <= n (got i={i}, j={j}, n={n})"
        )));
    }
    let mut acc = SignedCount::zero();
    for l in 0..=j {
        let d = j - l;
        let choose2 = d * d.saturating_sub(1) / 2;
        let mut term = pow(q, l * m + choose2);
        term *= gaussian_binomial(n - l, n - j, q)?;
        term *= gaussian_binomial(n - i, l, q)?;
        let term = SignedCount::from(term);
        if d % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
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

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), c(10));
        assert_eq!(binomial(3, 0), c(1));
        assert_eq!(binomial(2, 3), c(0));
        assert_eq!(binomial(0, 0), c(1));
        assert_eq!(binomial(60, 30), c(118264581564861424));
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(2, 1, 2).unwrap(), c(3));
        assert_eq!(gaussian_binomial(7, 0, 5).unwrap(), c(1));
        // 35 two-dimensional subspaces of F_2^4, counted independently in
        // tests/oracle_cross.rs by listing reduced echelon forms.
        assert_eq!(gaussian_binomial(4, 2, 2).unwrap(), c(35));
        assert_eq!(gaussian_binomial(3, 4, 2).unwrap(), c(0));
        assert!(gaussian_binomial(3, 1, 1).is_err());
    }

    #[test]
    fn gaussian_binomial_is_symmetric() {
        for q in 2..=4 {
            for n in 0..=8 {
                for k in 0..=n {
                    assert_eq!(
                        gaussian_binomial(n, k, q).unwrap(),
                        gaussian_binomial(n, n - k, q).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn rank_counts() {
        assert_eq!(num_matrices_rank(2, 2, 0, 2).unwrap(), c(1));
        assert_eq!(num_matrices_rank(2, 2, 2, 2).unwrap(), c(6));
        assert_eq!(num_matrices_rank(2, 2, 1, 2).unwrap(), c(9));
        assert_eq!(num_matrices_rank(2, 3, 3, 2).unwrap(), c(0));
        assert!(num_matrices_rank(2, 2, 1, 0).is_err());
    }

    #[test]
    fn rank_counts_fill_the_matrix_space() {
        for q in 2..=3 {
            for n in 0..=4 {
                for m in 0..=4 {
                    let total: Count = (0..=n.min(m))
                        .map(|t| num_matrices_rank(n, m, t, q).unwrap())
                        .sum();
                    assert_eq!(total, pow(q, m * n), "q={q} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn krawtchouk_examples() {
        assert_eq!(q_krawtchouk(0, 1, 3, 2, 2).unwrap(), SignedCount::from(1));
        assert_eq!(q_krawtchouk(1, 0, 2, 2, 2).unwrap(), SignedCount::from(9));
        assert_eq!(q_krawtchouk(1, 2, 2, 2, 2).unwrap(), SignedCount::from(-3));
        assert!(q_krawtchouk(3, 0, 2, 2, 2).is_err());
    }

    #[test]
    fn krawtchouk_at_zero_counts_matrices() {
        for q in 2..=3 {
            for n in 0..=4 {
                for m in 1..=4 {
                    for j in 0..=n {
                        let k = q_krawtchouk(j, 0, n, m, q).unwrap();
                        let nm = SignedCount::from(num_matrices_rank(n, m, j, q).unwrap());
                        assert_eq!(k, nm, "q={q} n={n} m={m} j={j}");
                    }
                }
            }
        }
    }
}
