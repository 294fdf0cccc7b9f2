//! Brute-force ground truth over prime fields.
//!
//! A vector of `F_{q^m}^n` is represented as `ell` blocks, each an `m x eta`
//! matrix over `F_q`. The oracle walks the whole space with a mixed-radix
//! counter over block indices and reads block ranks from a precomputed
//! table. Work is bounded by a hard budget on `q^{mn}`.

use std::ops::Range;

use num_traits::Zero;

use crate::compositions::RankProfile;
use crate::error::{Error, Result};
use crate::exec::{map_reduce, split_range, Strategy};
use crate::{Count, Params};

/// Default cap on the number of enumerated vectors.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(q: u64) -> Result<()> {
    if !is_prime(q) || q > u64::from(u8::MAX) {
        return Err(Error::NotPrime(q));
    }
    Ok(())
}

/// Dense matrix over a prime field `F_q`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    q: u64,
    data: Vec<u8>,
}

impl FqMatrix {
    pub fn new(rows: usize, cols: usize, q: u64, data: Vec<u8>) -> Result<Self> {
        check_prime(q)?;
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&e| u64::from(e) >= q) {
            return Err(Error::invalid(format!("entry {bad} is not in F_{q}")));
        }
        Ok(FqMatrix { rows, cols, q, data })
    }

    pub fn zeros(rows: usize, cols: usize, q: u64) -> Result<Self> {
        FqMatrix::new(rows, cols, q, vec![0; rows * cols])
    }

    /// Ones at `(j, j)` for `j < rank`, zeros elsewhere.
    pub fn leading_diagonal(rows: usize, cols: usize, q: u64, rank: usize) -> Result<Self> {
        if rank > rows.min(cols) {
            return Err(Error::invalid(format!("rank {rank} does not fit a {rows}x{cols} matrix")));
        }
        let mut m = FqMatrix::zeros(rows, cols, q)?;
        for j in 0..rank {
            m.data[j * cols + j] = 1;
        }
        Ok(m)
    }

    fn from_index(rows: usize, cols: usize, q: u64, mut index: u64) -> Self {
        let mut data = vec![0u8; rows * cols];
        for e in data.iter_mut() {
            *e = (index % q) as u8;
            index /= q;
        }
        FqMatrix { rows, cols, q, data }
    }

    /// Mixed-radix index with the first entry as the least significant digit.
    fn index(&self) -> u64 {
        self.data.iter().rev().fold(0, |acc, &e| acc * self.q + u64::from(e))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut data = vec![0u8; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        FqMatrix { rows: self.cols, cols: self.rows, q: self.q, data }
    }

    pub fn sub(&self, other: &FqMatrix) -> Result<FqMatrix> {
        if (self.rows, self.cols, self.q) != (other.rows, other.cols, other.q) {
            return Err(Error::invalid("matrix shapes or fields differ"));
        }
        let q = self.q;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| ((u64::from(a) + q - u64::from(b)) % q) as u8)
            .collect();
        Ok(FqMatrix { rows: self.rows, cols: self.cols, q, data })
    }

    /// Rank by row reduction modulo `q`.
    pub fn rank(&self) -> usize {
        let q = self.q;
        let mut rows: Vec<Vec<u64>> = self
            .data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|r| r.iter().map(|&e| u64::from(e)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = mod_inverse(rows[rank][col], q);
            for e in rows[rank].iter_mut() {
                *e = *e * inv % q;
            }
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let factor = rows[r][col];
                    for c in col..self.cols {
                        rows[r][c] = (rows[r][c] + q * q - factor * rows[rank][c]) % q;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

fn mod_inverse(a: u64, q: u64) -> u64 {
    // q is prime: a^(q-2)
    let (mut base, mut exp, mut acc) = (a % q, q - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// Rank of a matrix over a prime field.
pub fn matrix_rank(mat: &FqMatrix) -> Result<usize> {
    check_prime(mat.q)?;
    Ok(mat.rank())
}

/// A vector of `F_{q^m}^n` as `ell` matrices of size `m x eta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockVector {
    blocks: Vec<FqMatrix>,
}

impl BlockVector {
    pub fn new(p: &Params, blocks: Vec<FqMatrix>) -> Result<Self> {
        check_prime(p.q())?;
        if blocks.len() != p.ell() as usize {
            return Err(Error::invalid(format!("expected {} blocks, got {}", p.ell(), blocks.len())));
        }
        for b in &blocks {
            if b.rows != p.m() as usize || b.cols != p.eta() as usize || b.q != p.q() {
                return Err(Error::invalid("block shape or field does not match the parameters"));
            }
        }
        Ok(BlockVector { blocks })
    }

    pub fn zero(p: &Params) -> Result<Self> {
        let block = FqMatrix::zeros(p.m() as usize, p.eta() as usize, p.q())?;
        Ok(BlockVector { blocks: vec![block; p.ell() as usize] })
    }

    pub fn blocks(&self) -> &[FqMatrix] {
        &self.blocks
    }

    pub fn sub(&self, other: &BlockVector) -> Result<BlockVector> {
        if self.blocks.len() != other.blocks.len() {
            return Err(Error::invalid("block counts differ"));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(BlockVector { blocks })
    }

    pub fn rank_profile(&self) -> RankProfile {
        RankProfile::new(self.blocks.iter().map(|b| b.rank() as u32).collect())
    }
}

/// Sum of block ranks.
pub fn sumrank_weight(v: &BlockVector) -> Result<u32> {
    v.blocks.iter().map(|b| matrix_rank(b).map(|r| r as u32)).sum()
}

/// Two centers with the block-wise ranks of `x - y` recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterPair {
    x: BlockVector,
    y: BlockVector,
    profile: RankProfile,
}

impl CenterPair {
    pub fn new(x: BlockVector, y: BlockVector) -> Result<Self> {
        let profile = x.sub(&y)?.rank_profile();
        Ok(CenterPair { x, y, profile })
    }

    pub fn x(&self) -> &BlockVector {
        &self.x
    }

    pub fn y(&self) -> &BlockVector {
        &self.y
    }

    pub fn profile(&self) -> &RankProfile {
        &self.profile
    }
}

/// `x = 0` and `y` with `profile[i]` leading diagonal ones in block `i`.
pub fn canonical_centers(p: &Params, profile: &RankProfile) -> Result<CenterPair> {
    check_prime(p.q())?;
    if profile.len() != p.ell() as usize || profile.max_part() > p.mu() {
        return Err(Error::invalid(format!(
            "profile {profile} is not admissible for ell = {}, mu = {}",
            p.ell(),
            p.mu()
        )));
    }
    let x = BlockVector::zero(p)?;
    let blocks = profile
        .parts()
        .iter()
        .map(|&r| FqMatrix::leading_diagonal(p.m() as usize, p.eta() as usize, p.q(), r as usize))
        .collect::<Result<_>>()?;
    let y = BlockVector { blocks };
    Ok(CenterPair { x, y, profile: profile.clone() })
}

/// Joint distribution of `(d(v, x), d(v, y))` over all `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceHistogram {
    max_weight: usize,
    counts: Vec<u64>,
}

impl DistanceHistogram {
    fn empty(max_weight: usize) -> Self {
        DistanceHistogram { max_weight, counts: vec![0; (max_weight + 1) * (max_weight + 1)] }
    }

    fn merge(mut self, other: DistanceHistogram) -> Self {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    /// Vectors at distance exactly `a` from `x` and `b` from `y`.
    pub fn get(&self, a: u32, b: u32) -> u64 {
        let (a, b) = (a as usize, b as usize);
        if a > self.max_weight || b > self.max_weight {
            return 0;
        }
        self.counts[a * (self.max_weight + 1) + b]
    }

    /// Vectors within distance `u` of `x` and `s` of `y`.
    pub fn within(&self, u: u32, s: u32) -> Count {
        let mut acc = Count::zero();
        for a in 0..=(u as usize).min(self.max_weight) {
            for b in 0..=(s as usize).min(self.max_weight) {
                acc += self.counts[a * (self.max_weight + 1) + b];
            }
        }
        acc
    }

    /// Marginal distribution of the distance to `x`.
    pub fn first_marginal(&self) -> Vec<u64> {
        self.counts.chunks(self.max_weight + 1).map(|row| row.iter().sum()).collect()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Rank of every matrix of one block shape, indexed by mixed-radix entries.
struct BlockTable {
    rows: usize,
    cols: usize,
    q: u64,
    ranks: Vec<u8>,
}

impl BlockTable {
    fn new(rows: usize, cols: usize, q: u64) -> Self {
        let size = q.pow((rows * cols) as u32);
        let ranks = (0..size)
            .map(|i| FqMatrix::from_index(rows, cols, q, i).rank() as u8)
            .collect();
        BlockTable { rows, cols, q, ranks }
    }

    fn size(&self) -> u64 {
        self.ranks.len() as u64
    }

    /// `out[v] = rank(v - center)` for every block value `v`.
    fn ranks_from(&self, center: &FqMatrix) -> Vec<u8> {
        (0..self.size())
            .map(|i| {
                let v = FqMatrix::from_index(self.rows, self.cols, self.q, i);
                let diff = v.sub(center).expect("same shape");
                self.ranks[diff.index() as usize]
            })
            .collect()
    }
}

/// Exhaustive counter with an enumeration budget.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    budget: u128,
    strategy: Strategy,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { budget: DEFAULT_BUDGET, strategy: Strategy::default() }
    }
}

impl Oracle {
    pub fn new(budget: u128) -> Self {
        Oracle { budget, ..Oracle::default() }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    /// Number of vectors the enumeration of `p` visits, if it fits the budget.
    pub fn admit(&self, p: &Params) -> Result<u64> {
        check_prime(p.q())?;
        let required = required_candidates(p.q(), u64::from(p.m()) * u64::from(p.n()));
        self.admit_count(required)
    }

    fn admit_count(&self, required: u128) -> Result<u64> {
        if required > self.budget || required > u128::from(u64::MAX) {
            return Err(Error::BudgetExceeded { required, budget: self.budget });
        }
        Ok(required as u64)
    }

    /// Joint distance histogram of all vectors against both centers.
    pub fn distance_histogram(&self, p: &Params, centers: &CenterPair) -> Result<DistanceHistogram> {
        let total = self.admit(p)?;
        let table = BlockTable::new(p.m() as usize, p.eta() as usize, p.q());
        let from_x: Vec<Vec<u8>> = centers.x.blocks.iter().map(|b| table.ranks_from(b)).collect();
        let from_y: Vec<Vec<u8>> = centers.y.blocks.iter().map(|b| table.ranks_from(b)).collect();
        let radix = table.size();
        let max_weight = p.max_weight() as usize;
        let chunks = split_range(total, self.strategy);
        let hist = map_reduce(
            self.strategy,
            &chunks,
            || DistanceHistogram::empty(max_weight),
            |range| histogram_chunk(range.clone(), radix, &from_x, &from_y, max_weight),
            DistanceHistogram::merge,
        );
        debug_assert_eq!(hist.total(), total);
        Ok(hist)
    }

    /// Number of vectors of sum-rank weight `t`.
    pub fn count_sphere(&self, p: &Params, t: u32) -> Result<Count> {
        Ok(self
            .weight_histogram(p)?
            .get(t as usize)
            .map_or_else(Count::zero, |&c| Count::from(c)))
    }

    /// Number of vectors of each sum-rank weight `0..=ell*mu`.
    pub fn weight_histogram(&self, p: &Params) -> Result<Vec<u64>> {
        let zero = canonical_centers(p, &RankProfile::zeros(p.ell() as usize))?;
        Ok(self.distance_histogram(p, &zero)?.first_marginal())
    }

    /// `|B(x, u) ∩ B(y, s)|` for the canonical centers of `profile`.
    pub fn count_intersection(&self, p: &Params, u: u32, s: u32, profile: &RankProfile) -> Result<Count> {
        let centers = canonical_centers(p, profile)?;
        Ok(self.distance_histogram(p, &centers)?.within(u, s))
    }

    /// Rank-one `m x n` matrices `y` with `rk(x - y) = rk(x) + 1` for the
    /// fixed `x` with `r` leading diagonal ones.
    pub fn additive_rank1_partners(&self, n: u32, m: u32, r: u32, q: u64) -> Result<Count> {
        check_prime(q)?;
        let (rows, cols) = (m as usize, n as usize);
        self.admit_count(required_candidates(q, u64::from(m) * u64::from(n)))?;
        let x = FqMatrix::leading_diagonal(rows, cols, q, r as usize)?;
        let table = BlockTable::new(rows, cols, q);
        let from_x = table.ranks_from(&x);
        let hits = table
            .ranks
            .iter()
            .zip(&from_x)
            .filter(|&(&ry, &rd)| ry == 1 && u32::from(rd) == r + 1)
            .count();
        Ok(Count::from(hits))
    }

    /// Ordered pairs `(A, B)` of subspaces of `V = F_q^k` (sitting inside
    /// `F_q^ambient`) with `dim A = a` and `A ⊕ B = V`, by listing subspaces.
    pub fn els_pair_count_check(&self, k: u32, a: u32, q: u64, ambient: u32) -> Result<Count> {
        check_prime(q)?;
        if ambient > 4 || k > ambient || a > k {
            return Err(Error::invalid(format!(
                "needs a <= k <= ambient <= 4 (a={a}, k={k}, ambient={ambient})"
            )));
        }
        let points = required_candidates(q, k.into());
        if points > 128 {
            return Err(Error::invalid(format!("F_{q}^{k} has more than 128 points")));
        }
        let left = subspaces(k, a, q);
        let right = subspaces(k, k - a, q);
        self.admit_count(left.len() as u128 * right.len() as u128)?;
        let pairs = left
            .iter()
            .flat_map(|&sa| right.iter().map(move |&sb| sa & sb))
            .filter(|&meet| meet == 1)
            .count();
        Ok(Count::from(pairs))
    }
}

fn required_candidates(q: u64, exponent: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exponent {
        acc = acc.saturating_mul(u128::from(q));
    }
    acc
}

fn histogram_chunk(
    range: Range<u64>,
    radix: u64,
    from_x: &[Vec<u8>],
    from_y: &[Vec<u8>],
    max_weight: usize,
) -> DistanceHistogram {
    let mut hist = DistanceHistogram::empty(max_weight);
    let ell = from_x.len();
    let mut digits = vec![0u64; ell];
    let mut rest = range.start;
    for d in digits.iter_mut() {
        *d = rest % radix;
        rest /= radix;
    }
    let stride = max_weight + 1;
    for _ in range {
        let mut wx = 0usize;
        let mut wy = 0usize;
        for (i, &d) in digits.iter().enumerate() {
            wx += from_x[i][d as usize] as usize;
            wy += from_y[i][d as usize] as usize;
        }
        hist.counts[wx * stride + wy] += 1;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < radix {
                break;
            }
            *d = 0;
        }
    }
    hist
}

/// All `dim`-dimensional subspaces of `F_q^k`, each as a bitmask over the
/// `q^k` points (point index = mixed-radix coordinates). Generated from
/// reduced row echelon forms, so every subspace appears once.
pub fn subspaces(k: u32, dim: u32, q: u64) -> Vec<u128> {
    let k = k as usize;
    let dim = dim as usize;
    let mut out = Vec::new();
    if dim > k {
        return out;
    }
    let mut pivots: Vec<usize> = (0..dim).collect();
    loop {
        // free positions: row i, columns after pivot i that are not pivots
        let free: Vec<(usize, usize)> = (0..dim)
            .flat_map(|i| {
                let pivots = &pivots;
                (pivots[i] + 1..k).filter(move |c| !pivots.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let combos = q.pow(free.len() as u32);
        for assignment in 0..combos {
            let mut rows = vec![vec![0u64; k]; dim];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            let mut a = assignment;
            for &(i, c) in &free {
                rows[i][c] = a % q;
                a /= q;
            }
            out.push(span_mask(&rows, k, q));
        }
        // next pivot combination
        let Some(i) = (0..dim).rev().find(|&i| pivots[i] < k - dim + i) else {
            break;
        };
        pivots[i] += 1;
        for j in i + 1..dim {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    out
}

fn span_mask(rows: &[Vec<u64>], k: usize, q: u64) -> u128 {
    let dim = rows.len();
    let mut mask = 0u128;
    for coeffs in 0..q.pow(dim as u32) {
        let mut c = coeffs;
        let mut v = vec![0u64; k];
        for row in rows {
            let a = c % q;
            c /= q;
            for (x, &r) in v.iter_mut().zip(row) {
                *x = (*x + a * r) % q;
            }
        }
        let idx = v.iter().rev().fold(0u64, |acc, &x| acc * q + x);
        mask |= 1u128 << idx;
    }
    mask
}

/// [`Oracle::count_sphere`] with the default budget.
pub fn count_sphere(p: &Params, t: u32) -> Result<Count> {
    Oracle::default().count_sphere(p, t)
}

/// [`Oracle::count_intersection`] with the default budget.
pub fn count_intersection(p: &Params, u: u32, s: u32, profile: &RankProfile) -> Result<Count> {
    Oracle::default().count_intersection(p, u, s, profile)
}

/// [`Oracle::els_pair_count_check`] with the default budget.
pub fn els_pair_count_check(k: u32, a: u32, q: u64, ambient: u32) -> Result<Count> {
    Oracle::default().els_pair_count_check(k, a, q, ambient)
}
