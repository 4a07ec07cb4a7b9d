//! Exact planar point sets and the constructions for chains, zigzag chains,
//! r-chains and double constructions.
//!
//! Coordinates are `BigRational`. Every constructor checks the order type it
//! claims to produce and returns [`Error::OrderType`] if the check fails.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Sets up to this size get an exhaustive triple scan; larger ones a windowed
/// scan plus a strided sample.
const EXHAUSTIVE_SCAN_LIMIT: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl RationalPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        RationalPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RationalPoint {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Cw,
    Ccw,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Cw => Orientation::Ccw,
            Orientation::Ccw => Orientation::Cw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn as_i8(self) -> i8 {
        match self {
            Orientation::Cw => -1,
            Orientation::Ccw => 1,
            Orientation::Collinear => 0,
        }
    }
}

/// Sign of the determinant of `(b - a, c - a)`.
pub fn orientation(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Orientation {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if det.is_positive() {
        Orientation::Ccw
    } else if det.is_negative() {
        Orientation::Cw
    } else {
        Orientation::Collinear
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Downward,
    Upward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Points sorted by strictly increasing x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<RationalPoint>,
    label: String,
}

impl PointSet {
    /// Sorts by x and rejects repeated x-coordinates. General position is
    /// checked separately by [`PointSet::check_general_position`].
    pub fn new(mut points: Vec<RationalPoint>, label: impl Into<String>) -> Result<Self> {
        points.sort_by(|a, b| a.x.cmp(&b.x));
        for w in points.windows(2) {
            if w[0].x == w[1].x {
                return Err(Error::InvalidArgument(format!(
                    "repeated x-coordinate {}",
                    w[0].x
                )));
            }
        }
        Ok(PointSet {
            points,
            label: label.into(),
        })
    }

    pub fn empty(label: impl Into<String>) -> Self {
        PointSet {
            points: Vec::new(),
            label: label.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn orientation(&self, i: usize, j: usize, k: usize) -> Orientation {
        orientation(&self.points[i], &self.points[j], &self.points[k])
    }

    pub fn orient_table(&self) -> OrientTable {
        OrientTable::new(self)
    }

    /// Orientations of all increasing index triples, in lexicographic order.
    pub fn signature(&self) -> Vec<Orientation> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    out.push(self.orientation(i, j, k));
                }
            }
        }
        out
    }

    pub fn check_general_position(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.orientation(i, j, k) == Orientation::Collinear {
                        return Err(Error::OrderType {
                            label: self.label.clone(),
                            detail: format!("points {i}, {j}, {k} are collinear"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Mirror image under `x -> -x`.
    pub fn mirrored(&self) -> PointSet {
        let pts = self
            .points
            .iter()
            .map(|p| RationalPoint::new(-p.x.clone(), p.y.clone()))
            .collect();
        PointSet::new(pts, format!("mirror({})", self.label)).expect("mirroring keeps x distinct")
    }

    /// Reflection across the line `y = 0`.
    pub fn reflected(&self) -> PointSet {
        PointSet {
            points: self
                .points
                .iter()
                .map(|p| RationalPoint::new(p.x.clone(), -p.y.clone()))
                .collect(),
            label: format!("reflect({})", self.label),
        }
    }

    pub fn translated(&self, dx: &BigRational, dy: &BigRational) -> PointSet {
        PointSet {
            points: self
                .points
                .iter()
                .map(|p| RationalPoint::new(&p.x + dx, &p.y + dy))
                .collect(),
            label: self.label.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let pts: Vec<Value> = self
            .points
            .iter()
            .map(|p| {
                Value::Array(vec![
                    int_to_json(p.x.numer()),
                    int_to_json(p.x.denom()),
                    int_to_json(p.y.numer()),
                    int_to_json(p.y.denom()),
                ])
            })
            .collect();
        json!({ "label": self.label, "points": pts })
    }

    /// Parses the `{"label", "points": [[xn,xd,yn,yd], ...]}` form. Integers
    /// may be JSON numbers or decimal strings.
    pub fn from_json(value: &Value) -> Result<PointSet> {
        let label = value
            .get("label")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing string field `label`".into()))?;
        let arr = value
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field `points`".into()))?;
        let mut pts = Vec::with_capacity(arr.len());
        for entry in arr {
            let q = entry
                .as_array()
                .filter(|q| q.len() == 4)
                .ok_or_else(|| Error::Parse(format!("point must be [xn,xd,yn,yd], got {entry}")))?;
            let ints = q.iter().map(json_to_int).collect::<Result<Vec<_>>>()?;
            if ints[1].is_zero() || ints[3].is_zero() {
                return Err(Error::Parse(format!("zero denominator in {entry}")));
            }
            pts.push(RationalPoint::new(
                BigRational::new(ints[0].clone(), ints[1].clone()),
                BigRational::new(ints[2].clone(), ints[3].clone()),
            ));
        }
        let ps = PointSet::new(pts, label)?;
        ps.check_general_position()?;
        Ok(ps)
    }
}

fn int_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => Value::from(small),
        None => Value::from(v.to_string()),
    }
}

fn json_to_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

/// Precomputed orientations for every ordered triple of a small point set.
#[derive(Clone, Debug)]
pub struct OrientTable {
    n: usize,
    data: Vec<i8>,
}

impl OrientTable {
    pub fn new(ps: &PointSet) -> Self {
        let n = ps.len();
        let mut data = vec![0i8; n * n * n];
        let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = ps.orientation(i, j, k).as_i8();
                    // even permutations keep the sign, odd ones flip it
                    data[idx(i, j, k)] = s;
                    data[idx(j, k, i)] = s;
                    data[idx(k, i, j)] = s;
                    data[idx(j, i, k)] = -s;
                    data[idx(i, k, j)] = -s;
                    data[idx(k, j, i)] = -s;
                }
            }
        }
        OrientTable { n, data }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// +1 for counterclockwise, -1 for clockwise, 0 for collinear or repeated.
    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> i8 {
        self.data[(a * self.n + b) * self.n + c]
    }

    /// Proper crossing of segments `ab` and `cd` with four distinct endpoints.
    #[inline]
    pub fn crosses(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        if a == c || a == d || b == c || b == d {
            return false;
        }
        self.get(a, b, c) != self.get(a, b, d) && self.get(c, d, a) != self.get(c, d, b)
    }
}

/// Runs `expected` against every triple (small sets) or a windowed sample
/// (large sets).
fn validate_order_type<F>(ps: &PointSet, expected: F) -> Result<()>
where
    F: Fn(usize, usize, usize) -> Orientation,
{
    let n = ps.len();
    let check = |i: usize, j: usize, k: usize| -> Result<()> {
        let want = expected(i, j, k);
        let got = ps.orientation(i, j, k);
        if want != got {
            return Err(Error::OrderType {
                label: ps.label.clone(),
                detail: format!("triple ({i},{j},{k}) is {got:?}, expected {want:?}"),
            });
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_SCAN_LIMIT {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    check(i, j, k)?;
                }
            }
        }
        return Ok(());
    }
    const WINDOW: usize = 12;
    for i in 0..n {
        for j in i + 1..(i + WINDOW).min(n) {
            for k in j + 1..(i + WINDOW).min(n) {
                check(i, j, k)?;
            }
        }
    }
    let stride = (n / 24).max(1);
    for i in (0..n).step_by(stride) {
        for j in (i + 1..n).step_by(stride) {
            for k in (j + 1..n).step_by(stride) {
                check(i, j, k)?;
            }
        }
    }
    Ok(())
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn big(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

fn direction_tag(direction: Direction) -> &'static str {
    match direction {
        Direction::Downward => "down",
        Direction::Upward => "up",
    }
}

/// `n` points on `y = x^2` (downward) or `y = -x^2` (upward), at `x = 0..n`.
pub fn make_chain(n: usize, direction: Direction) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("chain size must be positive".into()));
    }
    let pts = (0..n as i64)
        .map(|x| match direction {
            Direction::Downward => RationalPoint::from_ints(x, x * x),
            Direction::Upward => RationalPoint::from_ints(x, -x * x),
        })
        .collect();
    let ps = PointSet::new(pts, format!("SC_{n}({})", direction_tag(direction)))?;
    let want = match direction {
        Direction::Downward => Orientation::Ccw,
        Direction::Upward => Orientation::Cw,
    };
    validate_order_type(&ps, |_, _, _| want)?;
    Ok(ps)
}

/// Whether the 1-based point `i` of a zigzag chain of size `n` is lifted.
fn zigzag_lifted(i: usize, n: usize, parity: Parity) -> bool {
    let want = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    1 < i && i < n && i % 2 == want
}

/// Zigzag chain: a downward chain where every interior point of the chosen
/// parity is lifted just above the segment through its two neighbours.
///
/// Point `p_i` sits at `x = i-1`, `y = 2x^2`, plus 3 when lifted. The chord
/// through the neighbours passes 2 above the parabola, so a lifted point is 1
/// above it and only the triple `p_{i-1} p_i p_{i+1}` changes orientation.
pub fn make_zigzag(n: usize, parity: Parity, direction: Direction) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("zigzag size must be positive".into()));
    }
    let sign = match direction {
        Direction::Downward => 1,
        Direction::Upward => -1,
    };
    let pts = (1..=n)
        .map(|i| {
            let x = i as i64 - 1;
            let lift = if zigzag_lifted(i, n, parity) { 3 } else { 0 };
            RationalPoint::from_ints(x, sign * (2 * x * x + lift))
        })
        .collect();
    let tag = match parity {
        Parity::Even => "eSZZC",
        Parity::Odd => "oSZZC",
    };
    let ps = PointSet::new(pts, format!("{tag}_{n}({})", direction_tag(direction)))?;
    validate_order_type(&ps, |a, b, c| {
        let upward = b == a + 1 && c == b + 1 && zigzag_lifted(b + 1, n, parity);
        let o = if upward {
            Orientation::Cw
        } else {
            Orientation::Ccw
        };
        if direction == Direction::Upward {
            o.reversed()
        } else {
            o
        }
    })?;
    Ok(ps)
}

/// Abscissa and ordinate of position `x` on an r-chain with arcs of `r+1`
/// points: corners on a convex parabola, interior points bulging above the
/// chord of their arc.
fn rchain_point(r: i64, x: i64) -> RationalPoint {
    let t = x.rem_euclid(r);
    let y = BigInt::from(2 * r * r) * BigInt::from(x) * BigInt::from(x)
        + BigInt::from(2 * r * r + 1) * BigInt::from(t * (r - t));
    RationalPoint::new(int(x), big(&y))
}

/// r-chain with `k` arcs of `r+1` points each, consecutive arcs sharing a
/// corner (`rk+1` points). Without corners this is the corner-free set built
/// from arcs of `r+1` interior points (`rk` points).
///
/// Three points are in upward position exactly when they lie on one arc.
pub fn make_rchain(r: usize, k: usize, corners: bool) -> Result<PointSet> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidArgument("r-chain parameters must be positive".into()));
    }
    // arc length in x between consecutive corners
    let period = if corners { r } else { r + 1 } as i64;
    let xs: Vec<i64> = (0..=period * k as i64)
        .filter(|x| corners || x % period != 0)
        .collect();
    let pts = xs.iter().map(|&x| rchain_point(period, x)).collect();
    let label = if corners {
        format!("CH({r},{k})")
    } else {
        format!("CH*({r},{k})")
    };
    let ps = PointSet::new(pts, label)?;
    validate_order_type(&ps, |a, _, c| {
        let (xa, xc) = (xs[a], xs[c]);
        let same_arc = xc <= (xa.div_euclid(period) + 1) * period;
        if same_arc {
            Orientation::Cw
        } else {
            Orientation::Ccw
        }
    })?;
    Ok(ps)
}

/// Every point of `p` lies strictly above every line through two points of
/// `q`, and every point of `q` strictly below every line through two points
/// of `p`.
pub fn is_high_above(p: &PointSet, q: &PointSet) -> bool {
    let above_all = |upper: &PointSet, lower: &PointSet, want: Orientation| {
        let pts = lower.points();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for u in upper.points() {
                    if orientation(&pts[i], &pts[j], u) != want {
                        return false;
                    }
                }
            }
        }
        true
    };
    above_all(p, q, Orientation::Ccw) && above_all(q, p, Orientation::Cw)
}

/// Value at abscissa `x` of the line through `a` and `b`.
fn line_at(a: &RationalPoint, b: &RationalPoint, x: &BigRational) -> BigRational {
    &a.y + (&b.y - &a.y) * (x - &a.x) / (&b.x - &a.x)
}

/// Largest value over all lines through two points of `s` at the abscissae
/// `lo` and `hi`, or the smallest if `max` is false.
fn line_extreme(s: &PointSet, lo: &BigRational, hi: &BigRational, max: bool) -> Option<BigRational> {
    let pts = s.points();
    let mut best: Option<BigRational> = None;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for x in [lo, hi] {
                let v = line_at(&pts[i], &pts[j], x);
                let better = match &best {
                    None => true,
                    Some(b) => (v > *b) == max && v != *b,
                };
                if better {
                    best = Some(v);
                }
            }
        }
    }
    best
}

/// Vertical translate of `p` lying high above `q`.
///
/// A line through two points is extremal over the x-range of `p` and `q` at
/// one of its two ends, so it suffices to clear the chord values at the
/// bounding abscissae. The required shift is doubled and padded by one.
pub fn place_high_above(p: &PointSet, q: &PointSet) -> PointSet {
    if p.is_empty() || q.is_empty() {
        return p.clone();
    }
    let xs = p.points().iter().chain(q.points()).map(|pt| &pt.x);
    let lo = xs.clone().min().expect("nonempty").clone();
    let hi = xs.max().expect("nonempty").clone();
    let min_p = p.points().iter().map(|pt| &pt.y).min().expect("nonempty");
    let max_q = q.points().iter().map(|pt| &pt.y).max().expect("nonempty");
    let mut need: Option<BigRational> = None;
    if let Some(top) = line_extreme(q, &lo, &hi, true) {
        need = Some(top - min_p);
    }
    if let Some(bottom) = line_extreme(p, &lo, &hi, false) {
        let t = max_q - bottom;
        need = Some(match need {
            Some(n) if n >= t => n,
            _ => t,
        });
    }
    let shift = match need {
        Some(t) if !t.is_negative() => t * int(2) + BigRational::one(),
        _ => BigRational::zero(),
    };
    p.translated(&BigRational::zero(), &shift)
}

/// An upper set high above a lower set, with their x-sorted union.
#[derive(Clone, Debug)]
pub struct DoubleSet {
    upper: PointSet,
    lower: PointSet,
    union: PointSet,
    upper_pos: Vec<usize>,
    lower_pos: Vec<usize>,
}

impl DoubleSet {
    pub fn new(upper: PointSet, lower: PointSet) -> Result<Self> {
        if !is_high_above(&upper, &lower) {
            return Err(Error::InvalidArgument(format!(
                "{} is not high above {}",
                upper.label(),
                lower.label()
            )));
        }
        let mut all: Vec<(RationalPoint, bool, usize)> = upper
            .points()
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), true, i))
            .chain(lower.points().iter().enumerate().map(|(i, p)| (p.clone(), false, i)))
            .collect();
        all.sort_by(|a, b| a.0.x.cmp(&b.0.x));
        let mut upper_pos = vec![0; upper.len()];
        let mut lower_pos = vec![0; lower.len()];
        for (pos, (_, is_upper, i)) in all.iter().enumerate() {
            if *is_upper {
                upper_pos[*i] = pos;
            } else {
                lower_pos[*i] = pos;
            }
        }
        let label = format!("D[{} | {}]", upper.label(), lower.label());
        let union = PointSet::new(all.into_iter().map(|t| t.0).collect(), label)?;
        Ok(DoubleSet {
            upper,
            lower,
            union,
            upper_pos,
            lower_pos,
        })
    }

    pub fn upper(&self) -> &PointSet {
        &self.upper
    }

    pub fn lower(&self) -> &PointSet {
        &self.lower
    }

    pub fn union(&self) -> &PointSet {
        &self.union
    }

    /// Index in the union of each upper point.
    pub fn upper_positions(&self) -> &[usize] {
        &self.upper_pos
    }

    /// Index in the union of each lower point.
    pub fn lower_positions(&self) -> &[usize] {
        &self.lower_pos
    }

    pub fn is_upper(&self, union_index: usize) -> bool {
        self.upper_pos.binary_search(&union_index).is_ok()
    }
}

/// Double construction of total size `n`: the family member of size `n/2`
/// high above its reflection across `y = 0`. The lower copy is shifted right
/// by 1/2 so that all abscissae stay distinct.
pub fn make_double<F>(family: F, n: usize) -> Result<DoubleSet>
where
    F: Fn(usize) -> Result<PointSet>,
{
    if n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("double construction needs even n, got {n}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("double construction needs n >= 2".into()));
    }
    let base = family(n / 2)?;
    let half = BigRational::new(1.into(), 2.into());
    let lower = base
        .reflected()
        .translated(&half, &BigRational::zero())
        .with_label(format!("reflect({})", base.label()));
    let upper = place_high_above(&base, &lower);
    DoubleSet::new(upper, lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> RationalPoint {
        RationalPoint::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(2, 0)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Ccw);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 0)), Orientation::Cw);
    }

    #[test]
    fn chain_examples() {
        let c = make_chain(3, Direction::Downward).unwrap();
        assert_eq!(c.signature(), vec![Orientation::Ccw]);
        assert_eq!(make_chain(1, Direction::Downward).unwrap().len(), 1);
        let u = make_chain(5, Direction::Upward).unwrap();
        assert_eq!(u.orientation(0, 1, 2), Orientation::Cw);
        assert!(make_chain(0, Direction::Upward).is_err());
    }

    #[test]
    fn zigzag_upward_triples() {
        let z = make_zigzag(3, Parity::Even, Direction::Downward).unwrap();
        assert_eq!(z.signature(), vec![Orientation::Cw]);
        let z = make_zigzag(5, Parity::Even, Direction::Downward).unwrap();
        let mut upward = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                for k in j + 1..5 {
                    if z.orientation(i, j, k) == Orientation::Cw {
                        upward.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        assert_eq!(upward, vec![(1, 2, 3), (3, 4, 5)]);
    }

    #[test]
    fn zigzag_parities_mirror_for_even_size() {
        for n in (2..=20).step_by(2) {
            let e = make_zigzag(n, Parity::Even, Direction::Downward).unwrap();
            let o = make_zigzag(n, Parity::Odd, Direction::Downward).unwrap();
            // reflection and reversed point order both flip orientation
            assert_eq!(e.mirrored().signature(), o.signature(), "n = {n}");
        }
    }

    #[test]
    fn rchain_sizes() {
        assert_eq!(make_rchain(5, 6, true).unwrap().len(), 31);
        assert_eq!(make_rchain(4, 6, false).unwrap().len(), 24);
        let single = make_rchain(2, 1, true).unwrap();
        assert_eq!(single.signature(), vec![Orientation::Cw]);
    }

    #[test]
    fn rchain_large_windowed_check() {
        let ps = make_rchain(8, 12, true).unwrap();
        assert_eq!(ps.len(), 97);
    }

    #[test]
    fn high_above_basics() {
        let q = PointSet::new(vec![p(0, 0), p(1, 0)], "q").unwrap();
        let far = PointSet::new(vec![p(0, 100)], "p").unwrap();
        assert!(is_high_above(&far, &q));
        let c = make_chain(4, Direction::Downward).unwrap();
        assert!(!is_high_above(&c, &c));
        let lower = make_chain(4, Direction::Upward).unwrap().translated(&BigRational::new(1.into(), 2.into()), &BigRational::zero());
        let placed = place_high_above(&c, &lower);
        assert!(is_high_above(&placed, &lower));
        let again = place_high_above(&placed, &lower);
        assert!(is_high_above(&again, &lower));
    }

    #[test]
    fn translation_is_zero_when_already_high_above() {
        let q = PointSet::new(vec![p(0, 0), p(2, 1)], "q").unwrap();
        let far = PointSet::new(vec![p(1, 1000)], "p").unwrap();
        assert_eq!(place_high_above(&far, &q), far);
    }

    #[test]
    fn double_chain_and_zigzag() {
        let dc = make_double(|m| make_chain(m, Direction::Downward), 6).unwrap();
        assert_eq!(dc.union().len(), 6);
        assert!(is_high_above(dc.upper(), dc.lower()));
        dc.union().check_general_position().unwrap();
        let dz = make_double(|m| make_zigzag(m, Parity::Even, Direction::Downward), 10).unwrap();
        assert!(is_high_above(dz.upper(), dz.lower()));
        dz.union().check_general_position().unwrap();
        assert!(make_double(|m| make_chain(m, Direction::Downward), 7).is_err());
    }

    #[test]
    fn two_chain_is_even_zigzag() {
        for k in 1..=6 {
            let ch = make_rchain(2, k, true).unwrap();
            let zz = make_zigzag(2 * k + 1, Parity::Even, Direction::Downward).unwrap();
            assert_eq!(ch.signature(), zz.signature(), "k = {k}");
        }
    }

    #[test]
    fn json_round_trip() {
        let ps = make_double(|m| make_zigzag(m, Parity::Odd, Direction::Downward), 8).unwrap();
        let u = ps.union().clone();
        let back = PointSet::from_json(&u.to_json()).unwrap();
        assert_eq!(back, u);
        let huge = PointSet::new(
            vec![RationalPoint::new(
                BigRational::new(BigInt::from(3), BigInt::from(7)),
                big(&(BigInt::from(10).pow(30) + 1)),
            )],
            "big",
        )
        .unwrap();
        assert_eq!(PointSet::from_json(&huge.to_json()).unwrap(), huge);
    }

    #[test]
    fn json_rejects_zero_denominator() {
        let v = json!({"label": "x", "points": [[1, 0, 1, 1]]});
        assert!(PointSet::from_json(&v).is_err());
    }
}
