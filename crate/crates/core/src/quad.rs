//! Exact arithmetic in a real quadratic field `Q(sqrt d)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

/// The number `(a + b sqrt d) / c` with `c > 0`, `gcd(a, b, c) = 1` and `d`
/// square-free. Rationals have `b = 0`; their `d` is only a field tag.
#[derive(Clone, Debug)]
pub struct QuadNumber {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Trial division bound for extracting square factors of a radicand.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Splits `n > 0` into `(s, m)` with `n = s^2 m` and `m` free of square
/// factors below the trial limit. A leftover cofactor with no small prime
/// factors is folded in when it is itself a perfect square.
fn square_free_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut m = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && BigInt::from(p) * BigInt::from(p) <= rest {
        let bp = BigInt::from(p);
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        s *= bp.pow(e / 2);
        if e % 2 == 1 {
            m *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        s *= root;
    } else {
        m *= rest;
    }
    (s, m)
}

impl QuadNumber {
    /// `(a + b sqrt d) / c` for any positive `d` and nonzero `c`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        assert!(d.is_positive(), "radicand must be positive");
        assert!(!c.is_zero(), "zero denominator");
        let (s, m) = square_free_part(&d);
        let (a, b) = if m.is_one() { (a + b * s, BigInt::zero()) } else { (a, b * s) };
        Self::reduced(a, b, c, m)
    }

    fn reduced(mut a: BigInt, mut b: BigInt, mut c: BigInt, d: BigInt) -> Self {
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() && !g.is_zero() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        if a.is_zero() && b.is_zero() {
            c = BigInt::one();
        }
        QuadNumber { a, b, c, d }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::reduced(v.into(), BigInt::zero(), BigInt::one(), BigInt::one())
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::reduced(num.into(), BigInt::zero(), den.into(), BigInt::one())
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_ratio(q.numer().clone(), q.denom().clone())
    }

    /// `sqrt(n)` for `n >= 0`.
    pub fn sqrt_of(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        assert!(!n.is_negative(), "square root of a negative number");
        if n.is_zero() {
            return Self::zero();
        }
        Self::new(BigInt::zero(), BigInt::one(), BigInt::one(), n)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Square-free radicand; 1 for numbers built from rationals only.
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.a.clone(), self.c.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn field(&self, other: &Self) -> BigInt {
        if self.b.is_zero() {
            other.d.clone()
        } else if other.b.is_zero() || self.d == other.d {
            self.d.clone()
        } else {
            panic!("mixing Q(sqrt {}) with Q(sqrt {})", self.d, other.d)
        }
    }

    /// Sign of `a + b sqrt d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
            (Sign::Plus | Sign::NoSign, Sign::Plus | Sign::NoSign) => Ordering::Greater,
            (Sign::Minus | Sign::NoSign, Sign::Minus | Sign::NoSign) => Ordering::Less,
            _ => {
                // opposite signs: compare a^2 with b^2 d
                let mag = (&self.a * &self.a).cmp(&(&self.b * &self.b * &self.d));
                if sa == Sign::Plus {
                    mag
                } else {
                    mag.reverse()
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        Self::reduced(&self.c * &self.a, -(&self.c * &self.b), norm, self.d.clone())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        let n = &self.b * &self.b * &self.d;
        let s = n.sqrt();
        let top = if !self.b.is_negative() {
            &self.a + &s
        } else if &s * &s == n {
            &self.a - &s
        } else {
            &self.a - &s - 1
        };
        top.div_floor(&self.c)
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Rational approximation with absolute error below `2^-bits`.
    pub fn approx(&self, bits: u64) -> BigRational {
        let scale = BigInt::one() << bits;
        let scaled = self * &QuadNumber::from_int(scale.clone());
        BigRational::new(scaled.floor(), scale)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            return BigRational::new(self.a.clone(), self.c.clone()).to_f64().unwrap_or(f64::NAN);
        }
        self.approx(160).to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "c": self.c.to_string(),
            "d": self.d.to_string(),
        })
    }
}

impl PartialEq for QuadNumber {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadNumber {}

impl PartialOrd for QuadNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.c.is_one() {
                return write!(f, "{}", self.a);
            }
            return write!(f, "{}/{}", self.a, self.c);
        }
        write!(f, "({} + {}*sqrt({}))/{}", self.a, self.b, self.d, self.c)
    }
}

impl<'a> Add<&'a QuadNumber> for &'a QuadNumber {
    type Output = QuadNumber;

    fn add(self, o: &QuadNumber) -> QuadNumber {
        let d = self.field(o);
        QuadNumber::reduced(
            &self.a * &o.c + &o.a * &self.c,
            &self.b * &o.c + &o.b * &self.c,
            &self.c * &o.c,
            d,
        )
    }
}

impl<'a> Sub<&'a QuadNumber> for &'a QuadNumber {
    type Output = QuadNumber;

    fn sub(self, o: &QuadNumber) -> QuadNumber {
        let d = self.field(o);
        QuadNumber::reduced(
            &self.a * &o.c - &o.a * &self.c,
            &self.b * &o.c - &o.b * &self.c,
            &self.c * &o.c,
            d,
        )
    }
}

impl<'a> Mul<&'a QuadNumber> for &'a QuadNumber {
    type Output = QuadNumber;

    fn mul(self, o: &QuadNumber) -> QuadNumber {
        let d = self.field(o);
        QuadNumber::reduced(
            &self.a * &o.a + &self.b * &o.b * &d,
            &self.a * &o.b + &o.a * &self.b,
            &self.c * &o.c,
            d,
        )
    }
}

impl<'a> Div<&'a QuadNumber> for &'a QuadNumber {
    type Output = QuadNumber;

    fn div(self, o: &QuadNumber) -> QuadNumber {
        self * &o.recip()
    }
}

impl Neg for &QuadNumber {
    type Output = QuadNumber;

    fn neg(self) -> QuadNumber {
        QuadNumber {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QuadNumber> for QuadNumber {
            type Output = QuadNumber;
            fn $m(self, o: QuadNumber) -> QuadNumber { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a QuadNumber> for QuadNumber {
            type Output = QuadNumber;
            fn $m(self, o: &QuadNumber) -> QuadNumber { (&self).$m(o) }
        }
        impl<'a> $tr<QuadNumber> for &'a QuadNumber {
            type Output = QuadNumber;
            fn $m(self, o: QuadNumber) -> QuadNumber { self.$m(&o) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadNumber {
    type Output = QuadNumber;

    fn neg(self) -> QuadNumber {
        -&self
    }
}

impl Default for QuadNumber {
    fn default() -> Self {
        QuadNumber::zero()
    }
}

impl From<i64> for QuadNumber {
    fn from(v: i64) -> Self {
        QuadNumber::from_int(v)
    }
}

impl From<&BigInt> for QuadNumber {
    fn from(v: &BigInt) -> Self {
        QuadNumber::from_int(v.clone())
    }
}

impl std::iter::Sum for QuadNumber {
    fn sum<I: Iterator<Item = QuadNumber>>(iter: I) -> Self {
        iter.fold(QuadNumber::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadNumber {
        QuadNumber::new(a.into(), b.into(), c.into(), d.into())
    }

    #[test]
    fn canonical_form() {
        // sqrt(69945633) = 3 sqrt(7771737)
        let m = q(8389, 1, 2, 69945633);
        assert_eq!(m.d(), &BigInt::from(7771737));
        assert_eq!(m.b(), &BigInt::from(3));
        assert_eq!(q(3, 0, 1, 9), QuadNumber::from_int(3));
        assert_eq!(q(0, 1, 1, 9), QuadNumber::from_int(3));
        assert_eq!(q(2, 4, -6, 5), q(-1, -2, 3, 5));
        assert_eq!(square_free_part(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
        assert_eq!(square_free_part(&BigInt::from(12)), (BigInt::from(2), BigInt::from(3)));
        assert_eq!(square_free_part(&BigInt::from(1)), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn field_operations() {
        let s = QuadNumber::sqrt_of(2);
        assert_eq!(&s * &s, QuadNumber::from_int(2));
        let x = q(1, 1, 1, 2);
        let y = x.recip();
        assert_eq!(&x * &y, QuadNumber::one());
        assert_eq!(y, q(-1, 1, 1, 2));
        assert_eq!((&x - &x), QuadNumber::zero());
        assert_eq!(&x / &x, QuadNumber::one());
    }

    #[test]
    fn ordering_and_rounding() {
        let phi = q(1, 1, 2, 5);
        assert!(phi > QuadNumber::from_ratio(1618, 1000));
        assert!(phi < QuadNumber::from_ratio(1619, 1000));
        assert_eq!(phi.floor(), BigInt::from(1));
        assert_eq!(phi.ceil(), BigInt::from(2));
        let neg = q(1, -1, 2, 5);
        assert_eq!(neg.floor(), BigInt::from(-1));
        assert_eq!(neg.ceil(), BigInt::from(0));
        assert_eq!(QuadNumber::from_ratio(-7, 2).floor(), BigInt::from(-4));
        assert!((phi.to_f64() - 1.618033988749895).abs() < 1e-15);
        assert_eq!(q(3, -1, 1, 2).signum(), Ordering::Greater);
        assert_eq!(q(-3, 1, 1, 10).signum(), Ordering::Greater);
        assert_eq!(q(-3, 1, 1, 8).signum(), Ordering::Less);
    }

    #[test]
    fn cancellation_is_exact_in_float_conversion() {
        // 3 sqrt(2) - 4.242640687 is about 1.19e-10
        let x = &q(0, 3, 1, 2) - &QuadNumber::from_ratio(4242640687i64, 1000000000i64);
        let v = x.to_f64();
        assert!((v - 1.1936e-10).abs() < 1e-13, "{v}");
    }
}
