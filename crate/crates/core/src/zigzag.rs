//! Down-free matchings of zigzag chains: the three coupled convolution
//! recursions, the power series they generate, and the growth constant.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::ratio;
use crate::quad::QuadNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZigzagVariant {
    /// Down-free matchings.
    DownFree,
    /// All matchings.
    All,
}

/// `a_k`, `b_k`, `c_k` count matchings of the even zigzag chain with `2k+1`
/// points, the odd one with `2k+1` points, and the even one with `2k`
/// points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagTriple {
    pub variant: ZigzagVariant,
    pub a: Vec<BigUint>,
    pub b: Vec<BigUint>,
    pub c: Vec<BigUint>,
}

/// `sum_{i=0}^{m} x_i y_{m-i}`, zero for negative `m`.
fn conv(x: &[BigUint], y: &[BigUint], m: isize) -> BigUint {
    if m < 0 {
        return BigUint::zero();
    }
    let m = m as usize;
    (0..=m).map(|i| &x[i] * &y[m - i]).sum()
}

impl ZigzagTriple {
    pub fn empty(variant: ZigzagVariant) -> Self {
        ZigzagTriple {
            variant,
            a: Vec::new(),
            b: Vec::new(),
            c: Vec::new(),
        }
    }

    /// Indices `0..=kmax`.
    pub fn up_to(kmax: usize, variant: ZigzagVariant) -> Self {
        let mut t = Self::empty(variant);
        for _ in 0..=kmax {
            t = zz_extend(&t);
        }
        t
    }

    /// Number of filled indices.
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// Count for the zigzag chain with `n` points of the given parity. Even
    /// sizes do not depend on the parity.
    pub fn count(&self, n: usize, odd_parity: bool) -> Option<&BigUint> {
        if n % 2 == 0 {
            self.c.get(n / 2)
        } else if odd_parity {
            self.b.get(n / 2)
        } else {
            self.a.get(n / 2)
        }
    }
}

/// Appends the next index to each of the three sequences.
pub fn zz_extend(t: &ZigzagTriple) -> ZigzagTriple {
    let (a, b, c) = (&t.a, &t.b, &t.c);
    let k = t.len() as isize;
    let ck = if k == 0 {
        BigUint::one()
    } else {
        &a[k as usize - 1] + conv(c, c, k - 1) + conv(a, a, k - 2) + conv(c, c, k - 2)
    };
    let mut cc = c.clone();
    cc.push(ck.clone());
    let c = &cc;
    let prev_c = if k > 0 { c[k as usize - 1].clone() } else { BigUint::zero() };
    let mut ak = &ck
        + conv(b, c, k - 1)
        + conv(c, a, k - 1)
        + conv(b, c, k - 2) * 2u32
        + conv(c, a, k - 2)
        + conv(b, c, k - 3);
    // down-free matchings exclude c_{k-1} configurations that all matchings keep
    if t.variant == ZigzagVariant::DownFree {
        ak -= prev_c;
    }
    let bk = &ck + conv(c, b, k - 1) + conv(a, c, k - 1) + conv(c, b, k - 2);
    let mut out = t.clone();
    out.a.push(ak);
    out.b.push(bk);
    out.c = cc;
    out
}

type Series = Vec<BigRational>;

fn series_from_ints(v: &[i64], n: usize) -> Series {
    (0..n)
        .map(|i| BigRational::from_integer(BigInt::from(*v.get(i).unwrap_or(&0))))
        .collect()
}

fn mul_trunc(x: &[BigRational], y: &[BigRational], n: usize) -> Series {
    let mut out = vec![BigRational::zero(); n];
    for (i, xi) in x.iter().enumerate().take(n) {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate().take(n - i) {
            out[i + j] += xi * yj;
        }
    }
    out
}

fn add_scaled(acc: &mut Series, x: &[BigRational], k: i64) {
    let k = BigRational::from_integer(k.into());
    for (a, b) in acc.iter_mut().zip(x) {
        *a += b * &k;
    }
}

fn inverse(x: &[BigRational], n: usize) -> Result<Series> {
    if x[0].is_zero() {
        return Err(Error::Consistency("series has no constant term to invert".into()));
    }
    let mut out = vec![BigRational::zero(); n];
    out[0] = x[0].recip();
    for m in 1..n {
        let mut s = BigRational::zero();
        for i in 1..=m.min(x.len() - 1) {
            s += &x[i] * &out[m - i];
        }
        out[m] = -s * &out[0];
    }
    Ok(out)
}

/// Polynomial coefficients `q_0..q_4` in `x` of the quartic
/// `sum_j q_j(x) C^j = 0` satisfied by the series `C`.
fn quartic(n: usize) -> [Series; 5] {
    let p = |v: &[i64]| series_from_ints(v, n);
    let m = |x: &Series, y: &Series| mul_trunc(x, y, n);
    let x = p(&[0, 1]);
    let one_x = p(&[1, 1]);
    let tail = p(&[1, 1, 0, 1]);
    let x2 = m(&x, &x);
    let x3 = m(&x2, &x);
    let q0 = p(&[1]);
    let q1 = p(&[-1, -3, -5]);
    let q2 = m(&x, &p(&[5, 8, 8, 9]));
    let q3 = m(&m(&x2, &one_x), &tail).into_iter().map(|v| v * BigInt::from(-8)).collect();
    let q4 = m(&m(&m(&x3, &tail), &one_x), &one_x)
        .into_iter()
        .map(|v| v * BigInt::from(4))
        .collect();
    [q0, q1, q2, q3, q4]
}

fn eval_quartic(q: &[Series; 5], c: &[BigRational], n: usize) -> (Series, Series) {
    let mut f = vec![BigRational::zero(); n];
    let mut df = vec![BigRational::zero(); n];
    let mut pow = series_from_ints(&[1], n);
    for (j, qj) in q.iter().enumerate() {
        let term = mul_trunc(qj, &pow, n);
        add_scaled(&mut f, &term, 1);
        if j + 1 < q.len() {
            // derivative picks up (j+1) q_{j+1} C^j
            let dterm = mul_trunc(&q[j + 1], &pow, n);
            add_scaled(&mut df, &dterm, j as i64 + 1);
        }
        pow = mul_trunc(&pow, c, n);
    }
    (f, df)
}

/// Coefficients `0..=kmax` of the power series root of the quartic with
/// constant term 1, by Newton iteration on truncated series.
pub fn zz_closed_form_coeffs(kmax: usize) -> Result<Vec<BigUint>> {
    let n = kmax + 1;
    let q = quartic(n);
    let mut c = series_from_ints(&[1], n);
    let mut prec = 1;
    while prec < n {
        prec = (2 * prec).min(n);
        let (f, df) = eval_quartic(&q, &c, prec);
        let step = mul_trunc(&f, &inverse(&df, prec)?, prec);
        for (ci, si) in c.iter_mut().zip(step) {
            *ci -= si;
        }
    }
    c.into_iter()
        .enumerate()
        .map(|(k, v)| {
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Consistency(format!("coefficient {k} is {v}, not a natural number")));
            }
            Ok(v.to_integer().to_biguint().expect("nonnegative"))
        })
        .collect()
}

fn to_series(v: &[BigUint], n: usize) -> Series {
    (0..n)
        .map(|i| BigRational::from_integer(v.get(i).cloned().unwrap_or_default().into()))
        .collect()
}

/// The quartic evaluated at the truncated series `c`, to order `n`.
pub fn quartic_residual(c: &[BigUint], n: usize) -> Vec<BigRational> {
    let q = quartic(n);
    eval_quartic(&q, &to_series(c, n), n).0
}

/// Whether `A (1 - 2xC - 2x^2 C) = C (1 - x + 2x^2 C + 2x^3 C)` and
/// `B (1 - 2xC - 2x^2 C) = C (1 - 2x^2 C)` hold to order `n`.
pub fn series_relations_hold(t: &ZigzagTriple, n: usize) -> bool {
    let (a, b, c) = (to_series(&t.a, n), to_series(&t.b, n), to_series(&t.c, n));
    let m = |x: &Series, y: &Series| mul_trunc(x, y, n);
    let xc = m(&series_from_ints(&[0, 1], n), &c);
    let x2c = m(&series_from_ints(&[0, 0, 1], n), &c);
    let x3c = m(&series_from_ints(&[0, 0, 0, 1], n), &c);
    let mut lhs_factor = series_from_ints(&[1], n);
    add_scaled(&mut lhs_factor, &xc, -2);
    add_scaled(&mut lhs_factor, &x2c, -2);
    let mut ra = series_from_ints(&[1, -1], n);
    add_scaled(&mut ra, &x2c, 2);
    add_scaled(&mut ra, &x3c, 2);
    let mut rb = series_from_ints(&[1], n);
    add_scaled(&mut rb, &x2c, -2);
    m(&a, &lhs_factor) == m(&c, &ra) && m(&b, &lhs_factor) == m(&c, &rb)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthConstant {
    /// Exponential growth of `c_k` in `k`.
    pub exact: QuadNumber,
    pub value: f64,
    /// Growth per point, the square root of `value`.
    pub lambda: f64,
}

fn growth(n: i64) -> GrowthConstant {
    // (9 + sqrt n) / 2
    let exact = QuadNumber::new(9.into(), 1.into(), 2.into(), n.into());
    let value = exact.to_f64();
    GrowthConstant {
        exact,
        value,
        lambda: value.sqrt(),
    }
}

/// Reciprocal of the smallest root of `1 - 9x - 3x^2`.
pub fn zz_growth() -> GrowthConstant {
    growth(93)
}

/// Reciprocal of the smallest root of `1 - 9x - 6x^2`.
pub fn zz_am_growth() -> GrowthConstant {
    growth(105)
}

/// `c_{k+1} / c_k` as a float.
pub fn c_ratio(variant: ZigzagVariant, k: usize) -> f64 {
    let t = ZigzagTriple::up_to(k + 1, variant);
    ratio(&t.c[k + 1], &t.c[k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn first_terms() {
        let t = ZigzagTriple::up_to(6, ZigzagVariant::DownFree);
        assert_eq!(t.a, nums(&[1, 3, 21, 136, 938, 6784, 50881]));
        assert_eq!(t.b, nums(&[1, 4, 21, 133, 911, 6575, 49252]));
        assert_eq!(t.c, nums(&[1, 2, 9, 53, 351, 2473, 18216]));
        let am = ZigzagTriple::up_to(5, ZigzagVariant::All);
        assert_eq!(am.c, nums(&[1, 2, 10, 61, 416, 3026]));
        assert_eq!(am.a, nums(&[1, 4, 25, 164, 1160, 8638]));
        assert_eq!(am.b, nums(&[1, 4, 23, 151, 1070, 7984]));
    }

    #[test]
    fn c_never_exceeds_a() {
        let t = ZigzagTriple::up_to(40, ZigzagVariant::DownFree);
        assert!(t.c.iter().zip(&t.a).all(|(c, a)| c <= a));
    }

    #[test]
    fn closed_form_matches_recursion() {
        let t = ZigzagTriple::up_to(50, ZigzagVariant::DownFree);
        assert_eq!(zz_closed_form_coeffs(50).unwrap(), t.c);
        assert!(quartic_residual(&t.c, 51).iter().all(Zero::is_zero));
        assert!(series_relations_hold(&t, 31));
    }

    #[test]
    fn growth_constants() {
        let g = zz_growth();
        assert_eq!(g.exact, QuadNumber::new(9.into(), 1.into(), 2.into(), 93.into()));
        assert!((g.value - 9.3218).abs() < 5e-5);
        assert!((g.lambda - 3.0532).abs() < 5e-5);
        // 1/value solves 1 - 9x - 3x^2 = 0
        let x = g.exact.recip();
        let poly = QuadNumber::one() - QuadNumber::from_int(9) * &x - QuadNumber::from_int(3) * x.square();
        assert!(poly.is_zero());
        let am = zz_am_growth();
        assert!((am.lambda - 3.1022).abs() < 5e-5);
        let sing = QuadNumber::new((-9).into(), 1.into(), 12.into(), 105.into());
        let poly = QuadNumber::one() - QuadNumber::from_int(9) * &sing - QuadNumber::from_int(6) * sing.square();
        assert!(poly.is_zero());
        assert_eq!(sing.recip(), am.exact);
    }
}
