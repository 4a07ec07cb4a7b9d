//! Spectral analysis of a two-group band system, exact in `Q(sqrt disc)`:
//! dominant eigen-data, rescaling to equal column sums, the shift constant
//! and a finitely supported sub-eigenvector certificate.
//!
//! The certificate consists of clipped parabolas
//! `xbar_i = max(pi_X (p - (i-s)^2), 0)` and
//! `ybar_i = max(pi_Y (p - (i-s+delta)^2), 0)` (zero for `i < 0`), with
//! `phi(xbar, ybar) >= (M - eps) (xbar, ybar)` componentwise.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chain_corner::CoupledSystem;
use crate::error::{Error, Result};
use crate::quad::QuadNumber;

type Q = QuadNumber;

/// Supports up to this size are materialized in certificate JSON.
pub const JSON_ENTRY_LIMIT: usize = 4096;
/// Largest support the exhaustive verifier accepts.
pub const EXHAUSTIVE_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq)]
pub struct EigenData {
    /// Dominant eigenvalue.
    pub m: Q,
    /// `(rho_X, rho_Y)`, summing to 1.
    pub left: [Q; 2],
    /// `(pi_X, pi_Y)`, summing to 1.
    pub right: [Q; 2],
}

fn q(v: &BigInt) -> Q {
    Q::from(v)
}

fn normalized(u: Q, v: Q) -> [Q; 2] {
    let s = &u + &v;
    [&u / &s, &v / &s]
}

/// Dominant eigenvalue and normalized eigenvectors of a positive 2x2
/// matrix. Entry `[x][y]` is the weight from group `y` into group `x`.
pub fn eigen(cond: &[[BigInt; 2]; 2]) -> Result<EigenData> {
    if cond.iter().flatten().any(|v| !v.is_positive()) {
        return Err(Error::Hypothesis(format!("condensed matrix {cond:?} is not positive")));
    }
    let [[a, b], [c, d]] = cond;
    let diff = a - d;
    let disc = &diff * &diff + BigInt::from(4) * b * c;
    let m = (q(a) + q(d) + Q::sqrt_of(disc)) / Q::from(2);
    let ma = &m - &q(a);
    let e = EigenData {
        right: normalized(q(b), ma.clone()),
        left: normalized(q(c), ma),
        m,
    };
    for x in 0..2 {
        let av: Q = (0..2).map(|y| q(&cond[x][y]) * &e.right[y]).sum();
        let la: Q = (0..2).map(|y| &e.left[y] * &q(&cond[y][x])).sum();
        if av != &e.m * &e.right[x] || la != &e.m * &e.left[x] {
            return Err(Error::Consistency("eigen-equations fail".into()));
        }
    }
    Ok(e)
}

/// `D = sum_{x,y} rho_x D^{xy} pi_y`.
pub fn weighted_total_jump(sys: &CoupledSystem, e: &EigenData) -> Q {
    let mut total = Q::zero();
    for x in 0..2 {
        for y in 0..2 {
            total = total + &e.left[x] * &q(&sys.jumps()[x][y]) * &e.right[y];
        }
    }
    total
}

/// Band system with coefficients `(rho_x / rho_y) a^{xy}`, whose column
/// sums all equal `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct RescaledSystem {
    pub r: usize,
    pub m: Q,
    /// `bands[x][y][beta + r]`.
    pub bands: [[Vec<Q>; 2]; 2],
    /// Right eigenvector of the rescaled condensed matrix, summing to 1.
    pub pi: [Q; 2],
    pub condensed: [[Q; 2]; 2],
    pub jumps: [[Q; 2]; 2],
}

impl RescaledSystem {
    pub fn band(&self, x: usize, y: usize, beta: isize) -> &Q {
        &self.bands[x][y][(beta + self.r as isize) as usize]
    }

    /// `sum_x Atilde^{xy}` for column `y`.
    pub fn column_sum(&self, y: usize) -> Q {
        &self.condensed[0][y] + &self.condensed[1][y]
    }

    /// Rescaled drift `sum_y pi_y sum_x Dtilde^{xy}`; zero exactly when
    /// the weighted total jump is.
    pub fn drift(&self) -> Q {
        (0..2)
            .map(|y| &self.pi[y] * &(&self.jumps[0][y] + &self.jumps[1][y]))
            .sum()
    }

    fn beta_range(&self) -> std::ops::RangeInclusive<isize> {
        -(self.r as isize)..=self.r as isize
    }
}

pub fn rescale(sys: &CoupledSystem, e: &EigenData) -> RescaledSystem {
    let r = sys.r();
    let mut bands: [[Vec<Q>; 2]; 2] = Default::default();
    let mut condensed: [[Q; 2]; 2] = Default::default();
    let mut jumps: [[Q; 2]; 2] = Default::default();
    for x in 0..2 {
        for y in 0..2 {
            let f = &e.left[x] / &e.left[y];
            bands[x][y] = sys.bands()[x][y].iter().map(|v| &f * &q(v)).collect();
            condensed[x][y] = &f * &q(&sys.condensed()[x][y]);
            jumps[x][y] = &f * &q(&sys.jumps()[x][y]);
        }
    }
    RescaledSystem {
        r,
        m: e.m.clone(),
        bands,
        pi: normalized(&e.left[0] * &e.right[0], &e.left[1] * &e.right[1]),
        condensed,
        jumps,
    }
}

/// Shift constant `delta` that removes the linear terms, from both the
/// corner and the free equation. Refuses systems with nonzero drift.
pub fn shift_delta(rs: &RescaledSystem) -> Result<Q> {
    if !rs.drift().is_zero() {
        return Err(Error::Hypothesis(format!("weighted total jump is nonzero for r = {}", rs.r)));
    }
    let (px, py) = (&rs.pi[0], &rs.pi[1]);
    let den1 = -(py * &rs.condensed[0][1]);
    let den2 = py * &(&rs.condensed[1][1] - &rs.m);
    if den1.is_zero() || den2.is_zero() {
        return Err(Error::Hypothesis("shift constant undefined".into()));
    }
    let d1 = (px * &rs.jumps[0][0] + py * &rs.jumps[0][1]) / den1;
    let d2 = -(px * &rs.jumps[1][0] + py * &rs.jumps[1][1]) / den2;
    if d1 != d2 {
        return Err(Error::Consistency(format!("shift forms disagree: {d1} vs {d2}")));
    }
    Ok(d1)
}

/// Unclipped parabolas `(hhat_X(i), hhat_Y(i))` with parameters `p`, `s`.
fn hhat(rs: &RescaledSystem, delta: &Q, p: &Q, s: &BigInt, i: i64) -> [Q; 2] {
    let t = q(&(BigInt::from(i) - s));
    let ty = &t + delta;
    [&rs.pi[0] * &(p - &t.square()), &rs.pi[1] * &(p - &ty.square())]
}

/// `M v_i - phi(v)_i` for a vector given by `v`, per group.
fn defect(rs: &RescaledSystem, i: i64, v: &dyn Fn(i64) -> [Q; 2], lhs_factor: &Q) -> [Q; 2] {
    let at = v(i);
    let mut out = [lhs_factor * &at[0], lhs_factor * &at[1]];
    for beta in rs.beta_range() {
        let w = v(i + beta as i64);
        for (x, o) in out.iter_mut().enumerate() {
            for (y, wy) in w.iter().enumerate() {
                let a = rs.band(x, y, beta);
                if !a.is_zero() && !wy.is_zero() {
                    *o = &*o - &(a * wy);
                }
            }
        }
    }
    out
}

/// `(Q_X, Q_Y)` at one point `(i, p, s)`.
pub fn q_values(rs: &RescaledSystem, delta: &Q, i: i64, p: &Q, s: &BigInt) -> [Q; 2] {
    defect(rs, i, &|j| hhat(rs, delta, p, s, j), &rs.m)
}

/// `(Q_X, Q_Y)`, checked to be the same on a grid of `(i, p, s)`.
pub fn qx_qy_constancy(rs: &RescaledSystem, delta: &Q) -> Result<[Q; 2]> {
    let r = rs.r as i64;
    let mut first: Option<[Q; 2]> = None;
    for i in [3 * r, 3 * r + 1, 5 * r] {
        for p in [10, 100] {
            for s in [0, 7] {
                let v = q_values(rs, delta, i, &Q::from(p), &BigInt::from(s));
                match &first {
                    None => first = Some(v),
                    Some(f) if *f != v => {
                        return Err(Error::Consistency(format!(
                            "Q differs at (i, p, s) = ({i}, {p}, {s}): {:?} vs {:?}",
                            v, f
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(first.expect("grid is nonempty"))
}

#[derive(Clone, Debug)]
pub struct SubEigenCertificate {
    pub r: usize,
    pub epsilon: BigRational,
    /// `p = root^2`.
    pub p: Q,
    pub root: Q,
    pub s: BigInt,
    pub delta: Q,
    pub pi: [Q; 2],
    /// Constants `(Q_X, Q_Y)` of the system.
    pub q: [Q; 2],
}

impl SubEigenCertificate {
    /// Unclipped value at index `i`.
    pub fn hhat(&self, i: i64) -> [Q; 2] {
        let t = q(&(BigInt::from(i) - &self.s));
        let ty = &t + &self.delta;
        [&self.pi[0] * &(&self.p - &t.square()), &self.pi[1] * &(&self.p - &ty.square())]
    }

    /// `(xbar_i, ybar_i)`.
    pub fn value(&self, i: i64) -> [Q; 2] {
        if i < 0 {
            return [Q::zero(), Q::zero()];
        }
        self.hhat(i).map(|v| if v.is_positive() { v } else { Q::zero() })
    }

    /// Half-open index ranges where `xbar` and `ybar` are positive.
    pub fn supports(&self) -> [(i64, i64); 2] {
        [Q::zero(), self.delta.clone()].map(|shift| {
            // hhat > 0 iff |i - s + shift| < root
            let centre = &q(&self.s) - &shift;
            let lo: BigInt = (&centre - &self.root).floor() + 1;
            let hi = (&centre + &self.root).ceil();
            let lo = lo.max(BigInt::zero());
            let to = |v: BigInt| v.to_i64().expect("index fits in i64");
            let (lo, hi) = (to(lo), to(hi));
            (lo, hi.max(lo))
        })
    }

    pub fn support_len(&self) -> usize {
        self.supports().iter().map(|(a, b)| (b - a) as usize).sum()
    }

    pub fn to_json(&self) -> Value {
        let [sx, sy] = self.supports();
        let mut v = json!({
            "r": self.r,
            "epsilon": self.epsilon.to_string(),
            "p": self.p.to_json(),
            "root": self.root.to_json(),
            "s": self.s.to_string(),
            "delta": self.delta.to_json(),
            "pi": [self.pi[0].to_json(), self.pi[1].to_json()],
            "q": [self.q[0].to_json(), self.q[1].to_json()],
            "support": {"x": [sx.0, sx.1], "y": [sy.0, sy.1]},
        });
        if self.support_len() <= JSON_ENTRY_LIMIT {
            let entries = |g: usize, (lo, hi): (i64, i64)| -> Vec<Value> {
                (lo..hi).map(|i| self.value(i)[g].to_json()).collect()
            };
            v["xbar"] = Value::Array(entries(0, sx));
            v["ybar"] = Value::Array(entries(1, sy));
        }
        v
    }
}

/// Fractional part of a field element.
fn frac(v: &Q) -> Q {
    v - &q(&v.floor())
}

/// Smallest root `v = n + o` of a value in `{i^2} ∪ {(i - delta)^2}` whose
/// gap to the next smaller value is at least `g`.
fn gap_root(delta: &Q, g: &Q) -> Q {
    let mut offsets = vec![Q::zero(), frac(delta), frac(&-delta)];
    offsets.sort();
    offsets.dedup();
    let k = offsets.len();
    let root = |n: &BigInt, j: usize| &q(n) + &offsets[j];
    let gap = |n: &BigInt, j: usize| -> Q {
        let v = root(n, j);
        let u = if j > 0 { root(n, j - 1) } else { root(&(n - 1), k - 1) };
        &(&v - &u) * &(&v + &u)
    };
    let mut best: Option<Q> = None;
    for j in 0..k {
        // n = 0 has no predecessor in the zero-offset class
        let mut lo = if j == 0 { BigInt::one() } else { BigInt::zero() };
        if gap(&lo, j) < *g {
            let mut hi = lo.clone() * 2 + 1;
            while gap(&hi, j) < *g {
                lo = hi.clone();
                hi = hi * 2;
            }
            // gap(lo) < g <= gap(hi)
            while &hi - &lo > BigInt::one() {
                let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
                if gap(&mid, j) < *g {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo = hi;
        }
        let v = root(&lo, j);
        if best.as_ref().map_or(true, |b| v < *b) {
            best = Some(v);
        }
    }
    best.expect("at least one offset")
}

fn check_epsilon(epsilon: &BigRational) -> Result<()> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {epsilon}")));
    }
    Ok(())
}

/// Certificate from the gap search: `p` is the smallest value above a gap of
/// at least `K / (eps min pi)`, `K = max(Q_X, Q_Y)`.
pub fn build_certificate(rs: &RescaledSystem, epsilon: &BigRational) -> Result<SubEigenCertificate> {
    check_epsilon(epsilon)?;
    let delta = shift_delta(rs)?;
    let qs = qx_qy_constancy(rs, &delta)?;
    let k = qs.iter().max().expect("two constants").clone();
    let min_pi = rs.pi.iter().min().expect("two entries");
    let g = if k.is_positive() { &k / &(&Q::from_rational(epsilon) * min_pi) } else { Q::zero() };
    let root = gap_root(&delta, &g);
    certificate_at(rs, epsilon, root, delta, qs)
}

/// Certificate with a prescribed `root = sqrt p`, bypassing the gap search.
pub fn build_certificate_at(rs: &RescaledSystem, epsilon: &BigRational, root: Q) -> Result<SubEigenCertificate> {
    check_epsilon(epsilon)?;
    let delta = shift_delta(rs)?;
    let qs = qx_qy_constancy(rs, &delta)?;
    certificate_at(rs, epsilon, root, delta, qs)
}

fn certificate_at(rs: &RescaledSystem, epsilon: &BigRational, root: Q, delta: Q, qs: [Q; 2]) -> Result<SubEigenCertificate> {
    if !root.is_positive() {
        return Err(Error::InvalidArgument(format!("root must be positive, got {root}")));
    }
    let s = (&root + &delta.abs()).ceil();
    Ok(SubEigenCertificate {
        r: rs.r,
        epsilon: epsilon.clone(),
        p: root.square(),
        root,
        s,
        delta,
        pi: rs.pi.clone(),
        q: qs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub holds: bool,
    /// Indices checked term by term.
    pub literal_checks: usize,
    /// First failing `(group, index)`, if any.
    pub failure: Option<(usize, i64)>,
    pub reason: Option<String>,
}

impl VerificationReport {
    fn rejected(reason: String) -> Self {
        VerificationReport {
            holds: false,
            literal_checks: 0,
            failure: None,
            reason: Some(reason),
        }
    }
}

/// Term-by-term check of `(M - eps) v_i <= phi(v)_i` at index `i`; returns
/// the failing group.
fn literal_check(rs: &RescaledSystem, cert: &SubEigenCertificate, i: i64) -> Option<usize> {
    let factor = &rs.m - &Q::from_rational(&cert.epsilon);
    let d = defect(rs, i, &|j| cert.value(j), &factor);
    d.iter().position(|v| v.is_positive())
}

fn structural_problems(rs: &RescaledSystem, cert: &SubEigenCertificate) -> Option<String> {
    if cert.r != rs.r {
        return Some(format!("certificate is for r = {}, system has r = {}", cert.r, rs.r));
    }
    if !cert.epsilon.is_positive() {
        return Some("epsilon must be positive".into());
    }
    if rs.bands.iter().flatten().flatten().any(|a| a.is_negative()) {
        return Some("negative band coefficient".into());
    }
    if cert.pi != rs.pi || cert.pi.iter().any(|v| !v.is_positive()) {
        return Some("eigenvector mismatch".into());
    }
    if cert.root.square() != cert.p {
        return Some("p is not root squared".into());
    }
    if cert.support_len() == 0 {
        return Some("certificate vectors are zero".into());
    }
    None
}

/// Exact verification of the sub-eigenvector inequality at every index.
///
/// Away from the clipped ends the unclipped right-hand side is
/// `M hhat_i - Q`, a quadratic in `i` checked at three points; clipping only
/// raises it, since coefficients are nonnegative and clipped values are
/// nonnegative. So an index `i >= r` inside the support holds whenever
/// `eps hhat_i >= Q`; the rest are checked term by term. `hhat` is concave,
/// so those form two runs at the ends of each support.
pub fn verify_certificate(rs: &RescaledSystem, cert: &SubEigenCertificate) -> VerificationReport {
    if let Some(reason) = structural_problems(rs, cert) {
        return VerificationReport::rejected(reason);
    }
    let r = rs.r as i64;
    let [sx, sy] = cert.supports();
    let hi = sx.1.max(sy.1);
    for i in [r, r + 1, hi.max(r + 2)] {
        if q_values(rs, &cert.delta, i, &cert.p, &cert.s) != cert.q {
            return VerificationReport::rejected(format!("quadratic identity fails at index {i}"));
        }
    }
    let eps = Q::from_rational(&cert.epsilon);
    let mut literal: Vec<i64> = (0..r).collect();
    for (g, (lo, hi)) in [sx, sy].into_iter().enumerate() {
        let safe = |i: i64| i >= r && &eps * &cert.hhat(i)[g] >= cert.q[g];
        let mut a = lo;
        while a < hi && !safe(a) {
            literal.push(a);
            a += 1;
        }
        let mut b = hi - 1;
        while b >= a && !safe(b) {
            literal.push(b);
            b -= 1;
        }
    }
    literal.sort_unstable();
    literal.dedup();
    let failures: Vec<(usize, i64)> = literal
        .par_iter()
        .filter_map(|&i| literal_check(rs, cert, i).map(|g| (g, i)))
        .collect();
    VerificationReport {
        holds: failures.is_empty(),
        literal_checks: literal.len(),
        failure: failures.into_iter().min_by_key(|&(_, i)| i),
        reason: None,
    }
}

/// Term-by-term check at every index that can carry a nonzero term.
pub fn verify_certificate_exhaustive(rs: &RescaledSystem, cert: &SubEigenCertificate) -> Result<VerificationReport> {
    if let Some(reason) = structural_problems(rs, cert) {
        return Ok(VerificationReport::rejected(reason));
    }
    let [sx, sy] = cert.supports();
    let hi = sx.1.max(sy.1) + rs.r as i64;
    if hi as usize > EXHAUSTIVE_LIMIT {
        return Err(Error::CapExceeded {
            size: hi as usize,
            cap: EXHAUSTIVE_LIMIT,
            what: "certificate indices",
        });
    }
    let failures: Vec<(usize, i64)> = (0..hi)
        .into_par_iter()
        .filter_map(|i| literal_check(rs, cert, i).map(|g| (g, i)))
        .collect();
    Ok(VerificationReport {
        holds: failures.is_empty(),
        literal_checks: hi as usize,
        failure: failures.into_iter().min_by_key(|&(_, i)| i),
        reason: None,
    })
}

/// Comparison helper for callers holding floats.
pub fn cmp_f64(v: &Q, x: f64) -> Ordering {
    let r = BigRational::from_float(x).expect("finite float");
    v.cmp(&Q::from_rational(&r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain_corner::extract_band;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn system(r: usize, bands: [[&[i64]; 2]; 2]) -> CoupledSystem {
        CoupledSystem::from_bands(r, bands.map(|row| row.map(ints))).unwrap()
    }

    fn rescaled(r: usize) -> RescaledSystem {
        let sys = extract_band(r).unwrap();
        let e = eigen(sys.condensed()).unwrap();
        rescale(&sys, &e)
    }

    #[test]
    fn eigen_examples() {
        let e = eigen(&[[1.into(), 1.into()], [2.into(), 2.into()]]).unwrap();
        assert_eq!(e.m, Q::from(3));
        assert_eq!(e.right, [Q::from_ratio(1, 3), Q::from_ratio(2, 3)]);
        let sys = extract_band(8).unwrap();
        let e = eigen(sys.condensed()).unwrap();
        let m = Q::new(8389.into(), 1.into(), 2.into(), 69945633.into());
        assert_eq!(e.m, m);
        assert!((e.m.to_f64() - 8376.175).abs() < 1e-3);
        let ratio = |v: &[Q; 2]| &v[1] / &v[0];
        let ma = &m - &Q::from(2885);
        assert_eq!(ratio(&e.left), &ma / &Q::from(6022));
        assert_eq!(ratio(&e.right), &ma / &Q::from(2619));
        assert!(eigen(&[[1.into(), 0.into()], [2.into(), 2.into()]]).is_err());
    }

    #[test]
    fn rescaled_column_sums_and_drift() {
        for r in [2, 8] {
            let rs = rescaled(r);
            assert_eq!(rs.column_sum(0), rs.m);
            assert_eq!(rs.column_sum(1), rs.m);
            assert!(rs.drift().is_zero());
            let sys = extract_band(r).unwrap();
            let e = eigen(sys.condensed()).unwrap();
            assert!(weighted_total_jump(&sys, &e).is_zero());
        }
    }

    #[test]
    fn delta_and_q_constants() {
        let rs = rescaled(2);
        let d = shift_delta(&rs).unwrap();
        assert!((d.to_f64() - 0.474546).abs() < 1e-6);
        let qs = qx_qy_constancy(&rs, &d).unwrap();
        let k = qs.iter().max().unwrap().to_f64();
        assert!((k - 8.7647).abs() < 1e-4, "K = {k}");
        let rs = rescaled(8);
        let d = shift_delta(&rs).unwrap();
        assert!((d.to_f64() - 0.476947).abs() < 1e-6);
        let qs = qx_qy_constancy(&rs, &d).unwrap();
        assert!((qs[0].to_f64() - 18086.03).abs() < 0.01);
        assert!((qs[1].to_f64() - 39731.60).abs() < 0.01);
    }

    #[test]
    fn symmetric_toy_has_zero_shift() {
        let w: &[i64] = &[1, 2, 1];
        let sys = system(1, [[w, w], [w, w]]);
        let e = eigen(sys.condensed()).unwrap();
        let rs = rescale(&sys, &e);
        let d = shift_delta(&rs).unwrap();
        assert!(d.is_zero());
        // both groups see the same walk, so Q is the curvature sum w_beta beta^2
        let qs = qx_qy_constancy(&rs, &d).unwrap();
        assert_eq!(qs, [Q::from(2), Q::from(2)]);
    }

    #[test]
    fn nonzero_jump_refused() {
        let sys = system(1, [[&[0, 1, 1], &[0, 1, 0]], [&[0, 1, 0], &[0, 1, 0]]]);
        let e = eigen(sys.condensed()).unwrap();
        assert!(weighted_total_jump(&sys, &e).is_positive());
        let rs = rescale(&sys, &e);
        assert!(matches!(shift_delta(&rs), Err(Error::Hypothesis(_))));
        assert!(build_certificate(&rs, &BigRational::new(1.into(), 10.into())).is_err());
    }

    #[test]
    fn r2_certificate_matches_exhaustive_check() {
        let rs = rescaled(2);
        let eps = BigRational::new(1.into(), 10.into());
        let cert = build_certificate(&rs, &eps).unwrap();
        assert!(verify_certificate(&rs, &cert).holds);
        assert!(verify_certificate_exhaustive(&rs, &cert).unwrap().holds);
        let big = build_certificate(&rs, &BigRational::from_integer(5.into())).unwrap();
        assert!(big.p <= cert.p);
    }

    #[test]
    fn tiny_root_fails() {
        let rs = rescaled(2);
        let eps = BigRational::new(1.into(), 10.into());
        let cert = build_certificate_at(&rs, &eps, Q::one()).unwrap();
        assert!(!verify_certificate(&rs, &cert).holds);
        assert!(!verify_certificate_exhaustive(&rs, &cert).unwrap().holds);
    }

    #[test]
    fn gap_search_without_shift() {
        // roots are the integers, gaps 2n - 1
        assert_eq!(gap_root(&Q::zero(), &Q::from(10)), Q::from(6));
        assert_eq!(gap_root(&Q::zero(), &Q::zero()), Q::from(1));
    }
}
