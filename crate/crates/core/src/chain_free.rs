//! r-chains without corners: runner counts of a single arc, the band
//! transfer matrix, the vector recursion and its growth constant.

use std::cmp::Ordering;
use std::ops::Index;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use crate::doubling::{binomial, catalan, motzkin};
use crate::error::{Error, Result};
use crate::numeric::ln_big;

/// Below this length vector updates run on one thread.
const PAR_THRESHOLD: usize = 512;

/// Nonnegative big-integer vector indexed by runner count. Entries past the
/// stored length are zero; equality ignores trailing zeros.
#[derive(Clone, Debug, Default, Eq)]
pub struct CountVector {
    entries: Vec<BigUint>,
}

static ZERO: BigUint = BigUint::ZERO;

impl CountVector {
    pub fn from_vec(entries: Vec<BigUint>) -> Self {
        CountVector { entries }
    }

    /// Indicator of index `i`.
    pub fn unit(i: usize) -> Self {
        let mut entries = vec![BigUint::zero(); i + 1];
        entries[i] = BigUint::one();
        CountVector { entries }
    }

    pub fn get(&self, i: usize) -> &BigUint {
        self.entries.get(i).unwrap_or(&ZERO)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// One past the last nonzero entry.
    pub fn support_bound(&self) -> usize {
        self.entries.iter().rposition(|v| !v.is_zero()).map_or(0, |p| p + 1)
    }

    pub fn sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    pub fn trimmed(&self) -> &[BigUint] {
        &self.entries[..self.support_bound()]
    }
}

impl PartialEq for CountVector {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Index<usize> for CountVector {
    type Output = BigUint;

    fn index(&self, i: usize) -> &BigUint {
        self.get(i)
    }
}

/// How the points of an arc that carry no runner may be matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArcVariant {
    /// Perfectly.
    Pm,
    /// Down-free.
    Dfm,
    /// Arbitrarily.
    Am,
}

/// Matchings of `m` arc points with no runners, for the given variant.
pub fn arc_factor(m: usize, variant: ArcVariant) -> BigUint {
    match variant {
        ArcVariant::Dfm => binomial(m as i64, (m / 2) as i64),
        ArcVariant::Pm if m % 2 == 0 => catalan(m / 2),
        ArcVariant::Pm => BigUint::zero(),
        ArcVariant::Am => motzkin(m),
    }
}

/// Variant matchings of a single arc of `r` points with `i` runners.
pub fn z1_variant(r: usize, i: usize, variant: ArcVariant) -> BigUint {
    if i > r {
        return BigUint::zero();
    }
    binomial(r as i64, i as i64) * arc_factor(r - i, variant)
}

/// Down-free matchings of a single arc of `r` points with `i` runners.
pub fn z1(r: usize, i: usize) -> BigUint {
    z1_variant(r, i, ArcVariant::Dfm)
}

pub fn z1_row(r: usize) -> Vec<BigUint> {
    (0..=r).map(|i| z1(r, i)).collect()
}

/// Entry `(i, j)` of the transfer matrix: sum of `z1_b` over
/// `|i-j| <= b <= min(r, i+j)` with `b ≡ i-j (mod 2)`.
fn band_entry(row: &[BigUint], i: usize, j: usize) -> BigUint {
    let r = row.len() - 1;
    let lo = i.abs_diff(j);
    let hi = r.min(i + j);
    if lo > hi {
        return BigUint::zero();
    }
    (lo..=hi).step_by(2).map(|b| &row[b]).sum()
}

/// Stabilized value on the diagonal `q = j - i`.
fn stable_entry(row: &[BigUint], q: usize) -> BigUint {
    let r = row.len() - 1;
    if q > r {
        return BigUint::zero();
    }
    (q..=r).step_by(2).map(|b| &row[b]).sum()
}

/// Dense `dim x dim` truncation of the transfer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandMatrix {
    r: usize,
    entries: Vec<Vec<BigUint>>,
}

impl BandMatrix {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.entries
    }

    /// Value of the diagonal `j - i = q` away from the top-left block.
    pub fn stable_diagonal(&self, q: isize) -> BigUint {
        stable_entry(&z1_row(self.r), q.unsigned_abs())
    }

    /// The matrix with its first `r` rows and columns removed.
    pub fn shifted(&self) -> BandMatrix {
        let r = self.r;
        BandMatrix {
            r,
            entries: self.entries[r..].iter().map(|row| row[r..].to_vec()).collect(),
        }
    }

    pub fn column_sum(&self, j: usize) -> BigUint {
        self.entries.iter().map(|row| &row[j]).sum()
    }

    /// Columns whose band lies fully inside the truncation.
    pub fn full_columns(&self) -> std::ops::Range<usize> {
        self.r.min(self.dim())..self.dim().saturating_sub(self.r)
    }
}

pub fn band_matrix(r: usize, dim: usize) -> Result<BandMatrix> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if dim < r + 1 {
        return Err(Error::InvalidArgument(format!("dimension {dim} is below r+1 = {}", r + 1)));
    }
    let row = z1_row(r);
    let entries = (0..dim)
        .map(|i| (0..dim).map(|j| band_entry(&row, i, j)).collect())
        .collect();
    Ok(BandMatrix { r, entries })
}

/// Transfer coefficients `a_{ij}` for `|i - j| <= r`, cached by the
/// difference `|i-j|` and the clipped sum `min(i+j, r)`.
struct Coefficients {
    r: usize,
    table: Vec<Vec<BigUint>>,
}

impl Coefficients {
    fn new(r: usize) -> Self {
        let row = z1_row(r);
        let table = (0..=r)
            .map(|d| (0..=r).map(|s| if s < d { BigUint::zero() } else { band_entry_clipped(&row, d, s) }).collect())
            .collect();
        Coefficients { r, table }
    }

    fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.table[i.abs_diff(j)][(i + j).min(self.r)]
    }
}

fn band_entry_clipped(row: &[BigUint], d: usize, s: usize) -> BigUint {
    (d..=s).step_by(2).map(|b| &row[b]).sum()
}

/// One application of the transfer matrix; the output is one band wider.
fn apply(coef: &Coefficients, v: &[BigUint]) -> Vec<BigUint> {
    let r = coef.r;
    let len = v.len() + r;
    let entry = |i: usize| -> BigUint {
        let lo = i.saturating_sub(r);
        let hi = (i + r).min(v.len().saturating_sub(1));
        let mut acc = BigUint::zero();
        for (j, vj) in v.iter().enumerate().take(hi + 1).skip(lo) {
            if !vj.is_zero() {
                acc += coef.get(i, j) * vj;
            }
        }
        acc
    };
    if len >= PAR_THRESHOLD {
        (0..len).into_par_iter().map(entry).collect()
    } else {
        (0..len).map(entry).collect()
    }
}

/// The sequence `v_0, v_1, ..., v_k` with `v_0 = e_0`.
pub fn iterate_all(r: usize, k: usize) -> Result<Vec<CountVector>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let coef = Coefficients::new(r);
    let mut v = vec![BigUint::one()];
    let mut out = vec![CountVector::from_vec(v.clone())];
    for _ in 0..k {
        v = apply(&coef, &v);
        out.push(CountVector::from_vec(v.clone()));
    }
    Ok(out)
}

/// `v_k`, whose entry `i` counts down-free matchings of the corner-free
/// r-chain with `k` arcs and `i` runners. Support is `0..=rk`.
pub fn iterate(r: usize, k: usize) -> Result<CountVector> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let coef = Coefficients::new(r);
    let mut v = vec![BigUint::one()];
    for _ in 0..k {
        v = apply(&coef, &v);
    }
    Ok(CountVector::from_vec(v))
}

/// `v_k[0]` for `k = 0..=kmax`, dropping entries that cannot return to index
/// zero within the remaining steps.
pub fn head_sequence(r: usize, kmax: usize) -> Result<Vec<BigUint>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let coef = Coefficients::new(r);
    let mut v = vec![BigUint::one()];
    let mut out = vec![BigUint::one()];
    for k in 1..=kmax {
        v = apply(&coef, &v);
        v.truncate(r * (kmax - k) + 1);
        out.push(v[0].clone());
    }
    Ok(out)
}

/// Stabilized column sum `sum_i (i+1) z1(r, i)`.
pub fn lambda_r(r: usize) -> BigUint {
    variant_row_sum(r, ArcVariant::Dfm)
}

pub fn variant_row_sum(r: usize, variant: ArcVariant) -> BigUint {
    (0..=r).map(|i| z1_variant(r, i, variant) * (i as u64 + 1)).sum()
}

/// `lambda_a^(1/a)` against `lambda_b^(1/b)`, exactly.
pub fn compare_root_growth(a: usize, b: usize) -> Ordering {
    let la: BigUint = Pow::pow(lambda_r(a), b as u32);
    let lb: BigUint = Pow::pow(lambda_r(b), a as u32);
    la.cmp(&lb)
}

pub fn root_growth(r: usize) -> f64 {
    (ln_big(&lambda_r(r)) / r as f64).exp()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BestR {
    pub r: usize,
    pub growth: f64,
    /// Exact check that `3 (r+1)^(1/r) < 3.0838` at `r = limit` and that
    /// `lambda_{r*}^(1/r*) > 3.0838`, which bounds every larger r.
    pub tail_certified: bool,
}

/// Largest `lambda_r^(1/r)` over `1..=limit`, with exact comparisons.
///
/// Beyond the limit, `lambda_r <= (r+1) 3^r` since the arc counts sum to at
/// most `3^r`, and `(r+1)^(1/r)` decreases, so one exact check at the limit
/// covers the whole tail.
pub fn best_r(limit: usize) -> Result<BestR> {
    if limit < 191 {
        return Err(Error::InvalidArgument(format!("limit must be at least 191, got {limit}")));
    }
    let mut best = 1;
    for r in 2..=limit {
        if compare_root_growth(r, best) == Ordering::Greater {
            best = r;
        }
    }
    let (num, den) = (BigUint::from(30838u32), BigUint::from(10000u32));
    let l = limit as u32;
    let tail: BigUint = Pow::pow(BigUint::from(3u32), l) * BigUint::from(limit + 1) * Pow::pow(den.clone(), l);
    let tail_ok = tail < Pow::pow(num.clone(), l);
    let b = best as u32;
    let head_ok = lambda_r(best) * Pow::pow(den, b) > Pow::pow(num, b);
    Ok(BestR {
        r: best,
        growth: root_growth(best),
        tail_certified: tail_ok && head_ok,
    })
}

/// Upper-left entry of `m^k`: walks from height 0 back to 0 in `k` steps,
/// weighted by the matrix entries.
pub fn excursion_count(m: &BandMatrix, k: usize) -> BigUint {
    let dim = m.dim();
    let mut u = vec![BigUint::zero(); dim];
    u[0] = BigUint::one();
    for _ in 0..k {
        u = (0..dim)
            .map(|i| {
                m.rows()[i]
                    .iter()
                    .zip(&u)
                    .filter(|(a, x)| !a.is_zero() && !x.is_zero())
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect();
    }
    u.swap_remove(0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BfConstant {
    pub tau: f64,
    pub c: f64,
}

/// Minimum over `u > 0` of `P(u) = sum_j w_j u^{b_j}`, attained where
/// `P'(u) = 0`. `P'` is increasing since every `b(b-1) >= 0`.
pub fn bf_constant(steps: &[(i64, f64)]) -> Result<BfConstant> {
    if steps.iter().any(|&(_, w)| !(w > 0.0)) {
        return Err(Error::InvalidArgument("step weights must be positive".into()));
    }
    if !steps.iter().any(|&(b, _)| b < 0) || !steps.iter().any(|&(b, _)| b > 0) {
        return Err(Error::InvalidArgument("steps must include both up and down jumps".into()));
    }
    let p = |u: f64| steps.iter().map(|&(b, w)| w * u.powi(b as i32)).sum::<f64>();
    let dp = |u: f64| steps.iter().map(|&(b, w)| w * b as f64 * u.powi(b as i32 - 1)).sum::<f64>();
    let (mut lo, mut hi) = (1.0f64, 1.0f64);
    while dp(lo) > 0.0 {
        lo /= 2.0;
    }
    while dp(hi) < 0.0 {
        hi *= 2.0;
    }
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if dp(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let tau = 0.5 * (lo + hi);
    Ok(BfConstant { tau, c: p(tau) })
}
