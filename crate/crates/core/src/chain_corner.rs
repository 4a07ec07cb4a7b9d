//! r-chains with corners: the coupled recursion for the vectors `C^k`
//! (last corner carries a runner) and `F^k` (it does not), and the band
//! coefficients read off from it.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::chain_free::CountVector;
use crate::doubling::binomial;
use crate::error::{Error, Result};
use crate::spectral::eigen;

/// Below this length the step runs on one thread.
const PAR_THRESHOLD: usize = 256;

/// Index of the corner group.
pub const C: usize = 0;
/// Index of the free group.
pub const F: usize = 1;

/// Arc coefficients indexed by `alpha = 0..r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerCoefficients {
    pub r: usize,
    pub z: Vec<BigUint>,
    pub i: Vec<BigUint>,
    pub w: Vec<BigUint>,
    pub u: Vec<BigUint>,
}

fn central(m: i64, k: i64) -> BigUint {
    binomial(m, k.div_euclid(2))
}

impl CornerCoefficients {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be positive".into()));
        }
        let r = r as i64;
        let make = |f: &dyn Fn(i64) -> BigUint| (0..r).map(|a| binomial(r - 1, a) * f(a)).collect();
        Ok(CornerCoefficients {
            r: r as usize,
            z: make(&|a| central(r - 1 - a, r - 1 - a)),
            i: make(&|a| central(r - 1 - a, r - 2 - a)),
            w: make(&|a| central(r - a, r - a)),
            u: make(&|a| central(r - a, r - 1 - a)),
        })
    }

    /// `I` as a difference of two central binomials.
    pub fn i_difference(&self, a: usize) -> BigInt {
        let r = self.r as i64;
        let a = a as i64;
        BigInt::from(binomial(r - 1, a)) * (BigInt::from(central(r - a, r - a)) - BigInt::from(central(r - 1 - a, r - 1 - a)))
    }

    /// `U` as a difference of two central binomials.
    pub fn u_difference(&self, a: usize) -> BigInt {
        let r = self.r as i64;
        let a = a as i64;
        BigInt::from(binomial(r - 1, a)) * (BigInt::from(central(r + 1 - a, r + 1 - a)) - BigInt::from(central(r - a, r - a)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoupledState {
    pub c: CountVector,
    pub f: CountVector,
    pub k: usize,
}

impl CoupledState {
    pub fn initial() -> Self {
        CoupledState {
            c: CountVector::unit(0),
            f: CountVector::unit(0),
            k: 0,
        }
    }
}

/// Sums over `alpha` with `|i-j| <= alpha <= min(r-1, i+j)` and
/// `alpha ≡ i-j (mod 2)`, cached by `|i-j|` and the clipped `i+j`.
struct PairSums {
    r: usize,
    sums: [Vec<Vec<BigUint>>; 4],
}

impl PairSums {
    fn new(co: &CornerCoefficients) -> Self {
        let r = co.r;
        let table = |v: &[BigUint]| -> Vec<Vec<BigUint>> {
            (0..r)
                .map(|d| {
                    (0..r)
                        .map(|s| if s < d { BigUint::zero() } else { (d..=s).step_by(2).map(|a| &v[a]).sum() })
                        .collect()
                })
                .collect()
        };
        PairSums {
            r,
            sums: [table(&co.z), table(&co.i), table(&co.w), table(&co.u)],
        }
    }

    fn get(&self, which: usize, i: usize, j: usize) -> Option<&BigUint> {
        let d = i.abs_diff(j);
        (d < self.r).then(|| &self.sums[which][d][(i + j).min(self.r - 1)])
    }
}

const PZ: usize = 0;
const PI: usize = 1;
const PW: usize = 2;
const PU: usize = 3;

fn at(v: &[BigUint], j: isize) -> Option<&BigUint> {
    if j < 0 {
        None
    } else {
        v.get(j as usize).filter(|x| !x.is_zero())
    }
}

/// One step of the coupled recursion on raw vectors; the output has length
/// `len`.
fn step_raw(co: &CornerCoefficients, ps: &PairSums, c: &[BigUint], f: &[BigUint], len: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let r = co.r as isize;
    let entry = |i: usize| -> (BigUint, BigUint) {
        let ii = i as isize;
        let mut cn = BigUint::zero();
        let mut fn_ = BigUint::zero();
        // the last arc starts a runner at its left corner
        for a in 0..=(r - 1).min(ii - 1) {
            if let Some(x) = at(c, ii - 1 - a) {
                cn += &co.z[a as usize] * x;
                fn_ += &co.w[a as usize] * x;
            }
        }
        // runners ending inside the last arc
        for a in 0..r {
            let j = ii + 1 + a;
            if let Some(x) = at(c, j) {
                fn_ += &co.i[a as usize] * x;
            }
            if let Some(x) = at(f, j) {
                fn_ += &co.z[a as usize] * x;
            }
        }
        // runners passing over the last arc in both directions
        let lo = (ii - r + 1).max(0);
        for j in lo..ii + r {
            let xc = at(c, j);
            let xf = at(f, j);
            if xc.is_none() && xf.is_none() {
                continue;
            }
            let ju = j as usize;
            if let Some(xf) = xf {
                if let Some(s) = ps.get(PZ, i, ju) {
                    cn += s * xf;
                }
                if let Some(s) = ps.get(PW, i, ju) {
                    fn_ += s * xf;
                }
            }
            if let Some(xc) = xc {
                if let Some(s) = ps.get(PI, i, ju) {
                    cn += s * xc;
                }
                if let Some(s) = ps.get(PU, i, ju) {
                    fn_ += s * xc;
                }
            }
        }
        (cn, fn_)
    };
    let out: Vec<(BigUint, BigUint)> = if len >= PAR_THRESHOLD {
        (0..len).into_par_iter().map(entry).collect()
    } else {
        (0..len).map(entry).collect()
    };
    out.into_iter().unzip()
}

/// `(C^k, F^k)` from `(C^{k-1}, F^{k-1})`. `F^k_0` counts down-free
/// matchings of the r-chain with `k` arcs.
pub fn coupled_step(s: &CoupledState, co: &CornerCoefficients) -> CoupledState {
    let ps = PairSums::new(co);
    let len = s.c.len().max(s.f.len()) + co.r;
    let (c, f) = step_raw(co, &ps, s.c.entries(), s.f.entries(), len);
    CoupledState {
        c: CountVector::from_vec(c),
        f: CountVector::from_vec(f),
        k: s.k + 1,
    }
}

/// States for `k = 0..=kmax`.
pub fn coupled_iterate(r: usize, kmax: usize) -> Result<Vec<CoupledState>> {
    let co = CornerCoefficients::new(r)?;
    let mut out = vec![CoupledState::initial()];
    for _ in 0..kmax {
        let next = coupled_step(out.last().expect("nonempty"), &co);
        out.push(next);
    }
    Ok(out)
}

/// `F^k_0` for `k = 0..=kmax`, dropping entries too far out to reach index 0
/// in the remaining steps (an index drops by at most `r` per step).
pub fn f0_sequence(r: usize, kmax: usize) -> Result<Vec<BigUint>> {
    let co = CornerCoefficients::new(r)?;
    let ps = PairSums::new(&co);
    let mut c = vec![BigUint::one()];
    let mut f = vec![BigUint::one()];
    let mut out = vec![BigUint::one()];
    for k in 1..=kmax {
        let len = (c.len() + r).min(r * (kmax - k) + 1);
        let (nc, nf) = step_raw(&co, &ps, &c, &f, len);
        out.push(nf[0].clone());
        c = nc;
        f = nf;
    }
    Ok(out)
}

/// Band coefficients of the stabilized coupled recursion
/// `X^k_i = sum_Y sum_beta a^{XY}_beta Y^{k-1}_{i+beta}`, groups `C` and `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoupledSystem {
    r: usize,
    /// `bands[x][y][beta + r]`.
    bands: [[Vec<BigInt>; 2]; 2],
    condensed: [[BigInt; 2]; 2],
    jumps: [[BigInt; 2]; 2],
}

impl CoupledSystem {
    /// Builds a system from explicit bands of length `2r+1`.
    pub fn from_bands(r: usize, bands: [[Vec<BigInt>; 2]; 2]) -> Result<Self> {
        if bands.iter().flatten().any(|b| b.len() != 2 * r + 1) {
            return Err(Error::InvalidArgument(format!("bands must have length {}", 2 * r + 1)));
        }
        let mut condensed: [[BigInt; 2]; 2] = Default::default();
        let mut jumps: [[BigInt; 2]; 2] = Default::default();
        for x in 0..2 {
            for y in 0..2 {
                let band = &bands[x][y];
                condensed[x][y] = band.iter().sum();
                jumps[x][y] = band
                    .iter()
                    .enumerate()
                    .map(|(k, v)| v * BigInt::from(k as i64 - r as i64))
                    .sum();
            }
        }
        Ok(CoupledSystem {
            r,
            bands,
            condensed,
            jumps,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `a^{xy}_beta`, zero outside `-r..=r`.
    pub fn band(&self, x: usize, y: usize, beta: isize) -> BigInt {
        let k = beta + self.r as isize;
        if k < 0 || k as usize > 2 * self.r {
            return BigInt::zero();
        }
        self.bands[x][y][k as usize].clone()
    }

    pub fn bands(&self) -> &[[Vec<BigInt>; 2]; 2] {
        &self.bands
    }

    /// Band sums; entry `[x][y]` is the total weight from group `y` into `x`.
    pub fn condensed(&self) -> &[[BigInt; 2]; 2] {
        &self.condensed
    }

    /// First moments `sum_beta beta a^{xy}_beta`.
    pub fn jumps(&self) -> &[[BigInt; 2]; 2] {
        &self.jumps
    }

    /// Entries at `beta ∈ {-1, 0, 1}` that are not positive, as
    /// `(x, y, beta)`.
    pub fn positivity_violations(&self) -> Vec<(usize, usize, isize)> {
        let mut out = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for beta in -1..=1 {
                    if !self.band(x, y, beta).is_positive() {
                        out.push((x, y, beta));
                    }
                }
            }
        }
        out
    }

    pub fn check_positivity(&self) -> Result<()> {
        let v = self.positivity_violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!(
                "band entries at beta in {{-1,0,1}} not positive for r = {}: {:?}",
                self.r, v
            )))
        }
    }
}

/// Response of one step to a unit vector at `i0` in group `src`.
fn unit_response(co: &CornerCoefficients, ps: &PairSums, src: usize, i0: usize, len: usize) -> [Vec<BigUint>; 2] {
    let mut e = vec![BigUint::zero(); len];
    e[i0] = BigUint::one();
    let z = vec![BigUint::zero(); len];
    let (c, f) = if src == C { step_raw(co, ps, &e, &z, len) } else { step_raw(co, ps, &z, &e, len) };
    [c, f]
}

/// Reads `a^{XY}_beta` off the recursion far from index 0, where the
/// coefficients no longer depend on the index.
pub fn extract_band(r: usize) -> Result<CoupledSystem> {
    let co = CornerCoefficients::new(r)?;
    let ps = PairSums::new(&co);
    let i0 = 3 * r;
    let len = 6 * r + 1;
    let mut bands: [[Vec<BigInt>; 2]; 2] = Default::default();
    for src in [C, F] {
        let resp = unit_response(&co, &ps, src, i0, len);
        for dst in [C, F] {
            let mut band = vec![BigInt::zero(); 2 * r + 1];
            for (i, v) in resp[dst].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let beta = i0 as isize - i as isize;
                if beta.unsigned_abs() > r {
                    return Err(Error::Consistency(format!("response at beta = {beta} outside the band")));
                }
                band[(beta + r as isize) as usize] = v.clone().into();
            }
            bands[dst][src] = band;
        }
    }
    CoupledSystem::from_bands(r, bands)
}

/// Whether probing at `i0` and `i0 + 1` gives the same bands.
pub fn is_shift_invariant(r: usize, i0: usize) -> Result<bool> {
    let co = CornerCoefficients::new(r)?;
    let ps = PairSums::new(&co);
    let len = i0 + 2 * r + 3;
    for src in [C, F] {
        let a = unit_response(&co, &ps, src, i0, len);
        let b = unit_response(&co, &ps, src, i0 + 1, len);
        for dst in [C, F] {
            for beta in -(r as isize)..=(r as isize) {
                let ia = i0 as isize - beta;
                if a[dst][ia as usize] != b[dst][(ia + 1) as usize] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CondensedRow {
    pub r: usize,
    pub condensed: [[BigInt; 2]; 2],
    /// Dominant eigenvalue to the power `1/r`.
    pub t_r: f64,
}

pub fn condensed_table(rmax: usize) -> Result<Vec<CondensedRow>> {
    (1..=rmax)
        .map(|r| {
            let sys = extract_band(r)?;
            let e = eigen(sys.condensed())?;
            Ok(CondensedRow {
                r,
                condensed: sys.condensed().clone(),
                t_r: e.m.to_f64().powf(1.0 / r as f64),
            })
        })
        .collect()
}
