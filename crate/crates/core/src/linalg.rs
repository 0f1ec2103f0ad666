//! Sparse integer matrices and exact rank.
//!
//! Ranks over ℚ come from integer-preserving elimination: a sparse
//! semi-echelon basis with content normalization (in `i128`, restarted in
//! `BigInt` on overflow), or a dense Bareiss pass for small matrices. Ranks
//! modulo large primes are computed independently; since reduction mod p can
//! only lose rank, a mod-p rank above the exact one is an error and one below
//! is flagged.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Matrices with fewer nonzeros than this (and a modest dense footprint) use
/// the dense Bareiss path.
pub const DENSE_NNZ_LIMIT: usize = 2000;
const DENSE_CELL_LIMIT: usize = 250_000;

pub const DEFAULT_PRIMES: [u64; 2] = [1_000_003, 2_147_483_647];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    /// Sorted by `(col, row)`.
    entries: Vec<(u32, u32, i64)>,
}

impl SparseIntMatrix {
    /// Builds a matrix from `(row, col, value)` triples. Zero values are
    /// dropped; repeated positions are rejected.
    pub fn new(rows: usize, cols: usize, triples: Vec<(usize, usize, i64)>) -> Result<Self> {
        let mut entries: Vec<(u32, u32, i64)> = Vec::with_capacity(triples.len());
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::domain(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            if v != 0 {
                entries.push((c as u32, r as u32, v));
            }
        }
        entries.sort_unstable_by_key(|&(c, r, _)| (c, r));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
            return Err(Error::domain(format!(
                "duplicate entry at ({}, {})",
                w[0].1, w[0].0
            )));
        }
        Ok(SparseIntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseIntMatrix::new(n, n, (0..n).map(|i| (i, i, 1)).collect()).unwrap()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// `(row, col, value)` triples in column-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries
            .iter()
            .map(|&(c, r, v)| (r as usize, c as usize, v))
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries
            .binary_search_by_key(&(col as u32, row as u32), |&(c, r, _)| (c, r))
            .map(|i| self.entries[i].2)
            .unwrap_or(0)
    }

    /// Columns as sparse vectors sorted by row.
    pub fn columns(&self) -> Vec<Vec<(u32, i64)>> {
        let mut out = vec![Vec::new(); self.cols];
        for &(c, r, v) in &self.entries {
            out[c as usize].push((r, v));
        }
        out
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        SparseIntMatrix::new(
            self.cols,
            self.rows,
            self.triples().map(|(r, c, v)| (c, r, v)).collect(),
        )
        .unwrap()
    }

    pub fn mul(&self, other: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.cols != other.rows {
            return Err(Error::domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_col: Vec<Vec<(u32, i64)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triples() {
            by_col[c].push((r as u32, v));
        }
        let mut acc: HashMap<(usize, usize), i64> = HashMap::new();
        for (k, j, b) in other.triples() {
            for &(i, a) in &by_col[k] {
                *acc.entry((i as usize, j)).or_insert(0) += a * b;
            }
        }
        SparseIntMatrix::new(
            self.rows,
            other.cols,
            acc.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Keeps the rows where `keep[row]` holds, renumbered in order.
    pub fn select_rows(&self, keep: &[bool]) -> SparseIntMatrix {
        let mut new_id = vec![u32::MAX; self.rows];
        let mut count = 0;
        for (r, &k) in keep.iter().enumerate() {
            if k {
                new_id[r] = count;
                count += 1;
            }
        }
        SparseIntMatrix::new(
            count as usize,
            self.cols,
            self.triples()
                .filter(|&(r, _, _)| keep[r])
                .map(|(r, c, v)| (new_id[r] as usize, c, v))
                .collect(),
        )
        .unwrap()
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> SparseIntMatrix {
        let columns = self.columns();
        let triples = cols
            .iter()
            .enumerate()
            .flat_map(|(j, &c)| columns[c].iter().map(move |&(r, v)| (r as usize, j, v)))
            .collect();
        SparseIntMatrix::new(self.rows, cols.len(), triples).unwrap()
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.rows != other.rows {
            return Err(Error::domain("hstack of matrices with different row counts"));
        }
        let shift = self.cols;
        SparseIntMatrix::new(
            self.rows,
            self.cols + other.cols,
            self.triples()
                .chain(other.triples().map(|(r, c, v)| (r, c + shift, v)))
                .collect(),
        )
    }

    /// Coordinate text: `rows cols nnz` then `r c v` per line (0-based).
    pub fn to_coordinate_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.nnz());
        for (r, c, v) in self.triples() {
            out.push_str(&format!("{r} {c} {v}\n"));
        }
        out
    }

    pub fn parse_coordinate_text(text: &str) -> Result<SparseIntMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::domain("empty matrix file"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::domain(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols, nnz] = nums[..] else {
            return Err(Error::domain(format!("bad header {header:?}")));
        };
        let mut triples = Vec::with_capacity(nnz);
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts[..] {
                [r, c, v] => r.parse().ok().zip(c.parse().ok()).zip(v.parse().ok()),
                _ => None,
            };
            let ((r, c), v) =
                parsed.ok_or_else(|| Error::domain(format!("bad matrix line {line:?}")))?;
            triples.push((r, c, v));
        }
        if triples.len() != nnz {
            return Err(Error::domain(format!(
                "header announces {nnz} entries, found {}",
                triples.len()
            )));
        }
        SparseIntMatrix::new(rows, cols, triples)
    }
}

#[derive(Debug)]
struct Overflow;

/// Integer coefficients for fraction-free elimination.
trait Coeff: Clone + Debug + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn negated(&self) -> Self;
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Semi-echelon basis: every stored vector has a distinct leading index.
#[derive(Clone, Debug)]
struct Echelon<T> {
    pivots: HashMap<u32, Vec<(u32, T)>>,
}

impl<T: Coeff> Echelon<T> {
    fn new() -> Self {
        Echelon {
            pivots: HashMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn normalize(v: &mut [(u32, T)]) {
        let Some(first) = v.first() else { return };
        let mut g = first.1.gcd(&first.1);
        for (_, x) in v.iter().skip(1) {
            if g.is_unit() {
                break;
            }
            g = g.gcd(x);
        }
        if first.1.is_negative() {
            g = g.negated();
        }
        if !(g.is_unit() && !g.is_negative()) {
            for (_, x) in v.iter_mut() {
                *x = x.div_exact(&g);
            }
        }
    }

    /// Reduces `v` against the basis; the remainder is empty iff `v` lies in
    /// the span.
    fn reduce(&self, mut v: Vec<(u32, T)>) -> std::result::Result<Vec<(u32, T)>, Overflow> {
        while let Some((lead, _)) = v.first() {
            let Some(p) = self.pivots.get(lead) else { break };
            let (pa, va) = (p[0].1.clone(), v[0].1.clone());
            // pa * v - va * p, leading terms cancel
            let mut out = Vec::with_capacity(v.len() + p.len());
            let (mut i, mut j) = (1, 1);
            let zero = T::from_i64(0);
            while i < v.len() || j < p.len() {
                let (idx, val) = if j >= p.len() || (i < v.len() && v[i].0 < p[j].0) {
                    let r = T::cross(&pa, &v[i].1, &va, &zero).ok_or(Overflow)?;
                    i += 1;
                    (v[i - 1].0, r)
                } else if i >= v.len() || p[j].0 < v[i].0 {
                    let r = T::cross(&zero, &zero, &va, &p[j].1).ok_or(Overflow)?;
                    j += 1;
                    (p[j - 1].0, r)
                } else {
                    let r = T::cross(&pa, &v[i].1, &va, &p[j].1).ok_or(Overflow)?;
                    i += 1;
                    j += 1;
                    (v[i - 1].0, r)
                };
                if !val.is_nil() {
                    out.push((idx, val));
                }
            }
            Self::normalize(&mut out);
            v = out;
        }
        Ok(v)
    }

    fn insert(&mut self, v: Vec<(u32, T)>) -> std::result::Result<bool, Overflow> {
        let mut r = self.reduce(v)?;
        if r.is_empty() {
            return Ok(false);
        }
        Self::normalize(&mut r);
        self.pivots.insert(r[0].0, r);
        Ok(true)
    }
}

fn to_coeffs<T: Coeff>(v: &[(u32, i64)]) -> Vec<(u32, T)> {
    v.iter().map(|&(i, x)| (i, T::from_i64(x))).collect()
}

fn sparse_rank_in<T: Coeff>(columns: &[Vec<(u32, i64)>]) -> std::result::Result<usize, Overflow> {
    let mut ech = Echelon::<T>::new();
    for c in columns {
        ech.insert(to_coeffs(c))?;
    }
    Ok(ech.rank())
}

fn sparse_rank(m: &SparseIntMatrix) -> usize {
    let cols = m.columns();
    match sparse_rank_in::<i128>(&cols) {
        Ok(r) => r,
        Err(Overflow) => sparse_rank_in::<BigInt>(&cols).expect("BigInt cannot overflow"),
    }
}

/// Fraction-free Bareiss elimination with full pivoting on the smallest
/// nonzero magnitude.
fn dense_bareiss_rank(m: &SparseIntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = vec![vec![BigInt::zero(); cols]; rows];
    for (r, c, v) in m.triples() {
        a[r][c] = BigInt::from(v);
    }
    let mut prev = BigInt::one();
    let mut rank = 0;
    for step in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(step) {
            for (j, x) in row.iter().enumerate().skip(step) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(step, pi);
        for row in a.iter_mut() {
            row.swap(step, pj);
        }
        rank += 1;
        let pivot = a[step][step].clone();
        for i in step + 1..rows {
            for j in step + 1..cols {
                let v = (&pivot * &a[i][j] - &a[i][step] * &a[step][j]) / &prev;
                a[i][j] = v;
            }
            a[i][step] = BigInt::zero();
        }
        prev = pivot;
    }
    rank
}

/// Rank over ℚ.
pub fn exact_rank(m: &SparseIntMatrix) -> usize {
    if m.nnz() == 0 {
        return 0;
    }
    if m.nnz() < DENSE_NNZ_LIMIT && m.rows * m.cols <= DENSE_CELL_LIMIT {
        dense_bareiss_rank(m)
    } else {
        sparse_rank(m)
    }
}

/// Rank over ℚ through the sparse path regardless of size.
pub fn exact_rank_sparse(m: &SparseIntMatrix) -> usize {
    sparse_rank(m)
}

/// Rank over ℚ through the dense Bareiss path regardless of size.
pub fn exact_rank_dense(m: &SparseIntMatrix) -> usize {
    dense_bareiss_rank(m)
}

fn mod_p(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u128, p - 2, 1u128);
    let p128 = p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p128;
        }
        base = base * base % p128;
        exp >>= 1;
    }
    acc as u64
}

/// Rank over GF(p), `p` prime below 2^32.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    assert!(p > 2 && p < (1 << 32), "prime {p} out of supported range");
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for col in m.columns() {
        let mut v: Vec<(u32, u64)> = col
            .iter()
            .map(|&(i, x)| (i, mod_p(x, p)))
            .filter(|&(_, x)| x != 0)
            .collect();
        while let Some(&(lead, a)) = v.first() {
            let Some(piv) = pivots.get(&lead) else {
                let inv = inv_mod(a, p);
                for (_, x) in v.iter_mut() {
                    *x = *x * inv % p;
                }
                pivots.insert(lead, v);
                break;
            };
            // v - a * piv (piv has leading 1)
            let mut out = Vec::with_capacity(v.len() + piv.len());
            let (mut i, mut j) = (1, 1);
            while i < v.len() || j < piv.len() {
                let (idx, val) = if j >= piv.len() || (i < v.len() && v[i].0 < piv[j].0) {
                    i += 1;
                    (v[i - 1].0, v[i - 1].1)
                } else if i >= v.len() || piv[j].0 < v[i].0 {
                    j += 1;
                    (piv[j - 1].0, (p - a * piv[j - 1].1 % p) % p)
                } else {
                    let val = (v[i].1 + p - a * piv[j].1 % p) % p;
                    i += 1;
                    j += 1;
                    (v[i - 1].0, val)
                };
                if val != 0 {
                    out.push((idx, val));
                }
            }
            v = out;
        }
    }
    pivots.len()
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime at or above `start`.
pub fn next_prime(start: u64) -> u64 {
    (start..).find(|&p| is_prime(p)).unwrap()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    Exact,
    ModP,
    #[default]
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankOptions {
    pub method: RankMethod,
    pub primes: Vec<u64>,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            method: RankMethod::Both,
            primes: DEFAULT_PRIMES.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    pub exact: Option<usize>,
    pub mod_p: Vec<(u64, usize)>,
    pub disagreement: bool,
}

/// Rank with the requested cross-checks. The exact value wins whenever it
/// is computed.
pub fn rank_report(m: &SparseIntMatrix, opts: &RankOptions) -> Result<RankReport> {
    let exact = (opts.method != RankMethod::ModP).then(|| exact_rank(m));
    let mod_p: Vec<(u64, usize)> = if opts.method == RankMethod::Exact {
        Vec::new()
    } else {
        opts.primes.iter().map(|&p| (p, rank_mod_p(m, p))).collect()
    };
    if let Some(e) = exact {
        if let Some(&(p, r)) = mod_p.iter().find(|&&(_, r)| r > e) {
            return Err(Error::Consistency(format!(
                "rank mod {p} is {r}, above the rational rank {e}"
            )));
        }
    }
    let rank = exact.unwrap_or_else(|| mod_p.iter().map(|&(_, r)| r).max().unwrap_or(0));
    let disagreement = mod_p.iter().any(|&(_, r)| r != rank);
    Ok(RankReport {
        rank,
        exact,
        mod_p,
        disagreement,
    })
}

/// Column span of an integer matrix over ℚ, reusable for many membership
/// queries.
#[derive(Clone, Debug)]
pub struct ColumnSpan {
    echelon: Echelon<BigInt>,
}

impl ColumnSpan {
    pub fn new(m: &SparseIntMatrix) -> Self {
        let mut echelon = Echelon::<BigInt>::new();
        for c in m.columns() {
            echelon.insert(to_coeffs(&c)).expect("BigInt cannot overflow");
        }
        ColumnSpan { echelon }
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Whether the sparse row-indexed vector `v` lies in the span.
    pub fn contains(&self, v: &[(u32, BigInt)]) -> bool {
        let mut target: Vec<(u32, BigInt)> = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        target.sort_by_key(|(i, _)| *i);
        self.echelon.reduce(target).expect("BigInt cannot overflow").is_empty()
    }
}

/// Whether the integer vector `v` (sparse, row-indexed) lies in the column
/// span of `m` over ℚ.
pub fn in_column_span(m: &SparseIntMatrix, v: &[(u32, BigInt)]) -> bool {
    ColumnSpan::new(m).contains(v)
}

/// Small helper for reports that need an `i64` view of a big integer.
pub fn bigint_to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Oracle: Gauss-Jordan over exact rationals on a dense copy.
    fn rational_rank(m: &SparseIntMatrix) -> usize {
        let mut a = vec![vec![BigRational::zero(); m.cols()]; m.rows()];
        for (r, c, v) in m.triples() {
            a[r][c] = BigRational::from_integer(BigInt::from(v));
        }
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..m.rows()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for r in 0..m.rows() {
                if r != rank && !a[r][col].is_zero() {
                    let f = &a[r][col] / &pivot;
                    for c in col..m.cols() {
                        let sub = &f * &a[rank][c];
                        a[r][c] -= sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> SparseIntMatrix {
        let rows = rng.gen_range(1..=max_dim);
        let cols = rng.gen_range(1..=max_dim);
        let density = rng.gen_range(0.05..0.5);
        let mut t = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(density) {
                    t.push((r, c, if rng.gen_bool(0.5) { 1 } else { -1 }));
                }
            }
        }
        SparseIntMatrix::new(rows, cols, t).unwrap()
    }

    #[test]
    fn trivial_ranks() {
        assert_eq!(exact_rank(&SparseIntMatrix::identity(3)), 3);
        assert_eq!(exact_rank(&SparseIntMatrix::zeros(4, 5)), 0);
        assert_eq!(exact_rank(&SparseIntMatrix::zeros(0, 3)), 0);
        // triangle incidence: rank V - components = 2
        let tri = SparseIntMatrix::new(
            3,
            3,
            vec![(0, 0, -1), (1, 0, 1), (1, 1, -1), (2, 1, 1), (0, 2, -1), (2, 2, 1)],
        )
        .unwrap();
        assert_eq!(exact_rank(&tri), 2);
    }

    #[test]
    fn random_sparse_matrices_match_rational_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 40);
            let oracle = rational_rank(&m);
            assert_eq!(exact_rank_sparse(&m), oracle);
            assert_eq!(exact_rank_dense(&m), oracle);
            assert_eq!(rank_mod_p(&m, 1_000_003), oracle);
        }
    }

    #[test]
    fn mod_p_can_undercount() {
        // det = 6: full rank over Q, rank 1 mod 2 and mod 3
        let m = SparseIntMatrix::new(2, 2, vec![(0, 0, 2), (1, 1, 3)]).unwrap();
        assert_eq!(exact_rank(&m), 2);
        assert_eq!(rank_mod_p(&m, 3), 1);
        let rep = rank_report(
            &m,
            &RankOptions {
                method: RankMethod::Both,
                primes: vec![3, 1_000_003],
            },
        )
        .unwrap();
        assert_eq!(rep.rank, 2);
        assert!(rep.disagreement);
    }

    #[test]
    fn large_entries_fall_back_to_bigint() {
        // Powers of 2^40 overflow i128 products during elimination.
        let big = 1i64 << 40;
        let m = SparseIntMatrix::new(
            3,
            3,
            vec![
                (0, 0, big),
                (1, 0, big - 1),
                (0, 1, big - 3),
                (1, 1, big + 5),
                (2, 2, big + 7),
                (2, 0, 3),
            ],
        )
        .unwrap();
        assert_eq!(exact_rank_sparse(&m), rational_rank(&m));
    }

    #[test]
    fn duplicate_entries_rejected() {
        assert!(SparseIntMatrix::new(2, 2, vec![(0, 0, 1), (0, 0, 2)]).is_err());
    }

    #[test]
    fn coordinate_text_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_matrix(&mut rng, 8);
        let text = m.to_coordinate_text();
        assert_eq!(SparseIntMatrix::parse_coordinate_text(&text).unwrap(), m);
        assert!(SparseIntMatrix::parse_coordinate_text("2 2 1\n").is_err());
    }

    #[test]
    fn span_membership() {
        let m = SparseIntMatrix::new(3, 2, vec![(0, 0, 1), (1, 0, 1), (1, 1, 1), (2, 1, 2)]).unwrap();
        let inside = vec![(0, BigInt::from(2)), (1, BigInt::from(3)), (2, BigInt::from(2))];
        assert!(in_column_span(&m, &inside));
        let outside = vec![(0, BigInt::from(1))];
        assert!(!in_column_span(&m, &outside));
    }

    #[test]
    fn primes() {
        assert!(is_prime(1_000_003));
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(1_000_001));
        assert_eq!(next_prime(1_000_000), 1_000_003);
    }
}
