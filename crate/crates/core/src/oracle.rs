//! Brute-force enumeration of non-crossing matchings, with optional runner
//! marks, on arbitrary small point sets.
//!
//! Points are processed left to right. Each point that is not already the
//! right endpoint of an edge is left free, marked as a runner, or matched to
//! a later point. Edges are decided at their left endpoint, so when a point
//! is reached every edge spanning it is known and visibility can be decided
//! on the spot.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chain_free::CountVector;
use crate::error::{Error, Result};
use crate::geometry::{DoubleSet, OrientTable, PointSet};

/// Hard limit from the bitmask representation of point subsets.
const MAX_BITMASK_POINTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchingKind {
    All,
    Perfect,
    DownFree,
    UpFree,
    RhoDownFree,
}

/// What an unmatched, unmarked point must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FreeRule {
    Any,
    Forbidden,
    /// Downward vertical ray misses every edge.
    VisibleBelow,
    /// Upward vertical ray misses every edge.
    VisibleAbove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Policy {
    pub free: FreeRule,
    /// Allow runner marks on points visible from above.
    pub runners: bool,
}

impl Policy {
    /// Runners allowed, no free points: perfect matchings with runners.
    pub const RHO_PERFECT: Policy = Policy {
        free: FreeRule::Forbidden,
        runners: true,
    };
    /// Runners allowed, free points unrestricted.
    pub const RHO_ALL: Policy = Policy {
        free: FreeRule::Any,
        runners: true,
    };
}

impl From<MatchingKind> for Policy {
    fn from(kind: MatchingKind) -> Self {
        let (free, runners) = match kind {
            MatchingKind::All => (FreeRule::Any, false),
            MatchingKind::Perfect => (FreeRule::Forbidden, false),
            MatchingKind::DownFree => (FreeRule::VisibleBelow, false),
            MatchingKind::UpFree => (FreeRule::VisibleAbove, false),
            MatchingKind::RhoDownFree => (FreeRule::VisibleBelow, true),
        };
        Policy { free, runners }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_points: usize,
    pub max_points_rho: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_points: 18,
            max_points_rho: 16,
        }
    }
}

impl OracleConfig {
    fn check(&self, n: usize, policy: Policy) -> Result<()> {
        let (cap, what) = if policy.runners {
            (self.max_points_rho, "runner enumeration")
        } else {
            (self.max_points, "enumeration")
        };
        let cap = cap.min(MAX_BITMASK_POINTS);
        if n > cap {
            return Err(Error::CapExceeded { size: n, cap, what });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointStatus {
    Free,
    Runner,
    Matched,
}

/// A set of edges plus runner marks over `n` indexed points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RhoMatching {
    n: usize,
    edges: Vec<(usize, usize)>,
    runners: Vec<usize>,
}

impl RhoMatching {
    /// Normalizes edge orientation and ordering; rejects shared endpoints,
    /// out-of-range indices and matched runners. Crossings are checked by
    /// [`RhoMatching::validate`], which needs the geometry.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, runners: Vec<usize>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        let mut runners = runners;
        runners.sort_unstable();
        let mut used = vec![false; n];
        for &(a, b) in &edges {
            if a == b || b >= n {
                return Err(Error::InvalidMatching(format!("bad edge ({a},{b}) for {n} points")));
            }
            for v in [a, b] {
                if std::mem::replace(&mut used[v], true) {
                    return Err(Error::InvalidMatching(format!("point {v} is in two edges")));
                }
            }
        }
        for &v in &runners {
            if v >= n {
                return Err(Error::InvalidMatching(format!("runner {v} out of range")));
            }
            if std::mem::replace(&mut used[v], true) {
                return Err(Error::InvalidMatching(format!("runner {v} is matched or repeated")));
            }
        }
        Ok(RhoMatching { n, edges, runners })
    }

    pub fn empty(n: usize) -> Self {
        RhoMatching {
            n,
            edges: Vec::new(),
            runners: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn runners(&self) -> &[usize] {
        &self.runners
    }

    pub fn status(&self, v: usize) -> PointStatus {
        if self.runners.binary_search(&v).is_ok() {
            PointStatus::Runner
        } else if self.edges.iter().any(|&(a, b)| a == v || b == v) {
            PointStatus::Matched
        } else {
            PointStatus::Free
        }
    }

    pub fn free_points(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.status(v) == PointStatus::Free).collect()
    }

    fn spanning_sides(&self, table: &OrientTable, v: usize) -> (bool, bool) {
        let (mut below, mut above) = (false, false);
        for &(a, b) in &self.edges {
            if a < v && v < b {
                if table.get(a, b, v) > 0 {
                    below = true;
                } else {
                    above = true;
                }
            }
        }
        (below, above)
    }

    fn check_size(&self, ps: &PointSet) -> Result<()> {
        if ps.len() != self.n {
            return Err(Error::InvalidMatching(format!(
                "matching over {} points used with a set of {}",
                self.n,
                ps.len()
            )));
        }
        Ok(())
    }

    /// Non-crossing, and every runner is visible from above.
    pub fn validate(&self, ps: &PointSet) -> Result<()> {
        self.check_size(ps)?;
        let t = ps.orient_table();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[i + 1..] {
                if t.crosses(a, b, c, d) {
                    return Err(Error::InvalidMatching(format!("edges ({a},{b}) and ({c},{d}) cross")));
                }
            }
        }
        for &v in &self.runners {
            if self.spanning_sides(&t, v).1 {
                return Err(Error::InvalidMatching(format!("runner {v} is covered from above")));
            }
        }
        Ok(())
    }

    /// Every free point sees downward past all edges.
    pub fn is_down_free(&self, ps: &PointSet) -> bool {
        if self.check_size(ps).is_err() {
            return false;
        }
        let t = ps.orient_table();
        self.free_points().into_iter().all(|v| !self.spanning_sides(&t, v).0)
    }

    /// Every free point sees upward past all edges.
    pub fn is_up_free(&self, ps: &PointSet) -> bool {
        if self.check_size(ps).is_err() {
            return false;
        }
        let t = ps.orient_table();
        self.free_points().into_iter().all(|v| !self.spanning_sides(&t, v).1)
    }
}

/// Counts with breakdowns by number of free points and number of runners.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingCensus {
    pub total: BigUint,
    pub by_free: BTreeMap<usize, BigUint>,
    pub by_runners: BTreeMap<usize, BigUint>,
    /// By number of runners, restricted to matchings whose last point is a
    /// runner.
    pub by_runners_last_marked: BTreeMap<usize, BigUint>,
}

impl MatchingCensus {
    pub fn to_json(&self) -> Value {
        let map = |m: &BTreeMap<usize, BigUint>| -> Value {
            m.iter()
                .map(|(k, v)| (k.to_string(), Value::String(v.to_str_radix(10))))
                .collect::<serde_json::Map<_, _>>()
                .into()
        };
        json!({
            "total": self.total.to_str_radix(10),
            "by_free": map(&self.by_free),
            "by_runners": map(&self.by_runners),
        })
    }
}

/// Leaf counts indexed by (free, runners, last point is a runner).
#[derive(Clone)]
struct Tally {
    n: usize,
    counts: Vec<u64>,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally {
            n,
            counts: vec![0; (n + 1) * (n + 1) * 2],
        }
    }

    fn add(&mut self, free: usize, runners: usize, last: bool) {
        self.counts[(free * (self.n + 1) + runners) * 2 + last as usize] += 1;
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    fn into_census(self) -> MatchingCensus {
        let mut c = MatchingCensus::default();
        let n = self.n;
        for free in 0..=n {
            for runners in 0..=n {
                for last in [false, true] {
                    let v = self.counts[(free * (n + 1) + runners) * 2 + last as usize];
                    if v == 0 {
                        continue;
                    }
                    let v = BigUint::from(v);
                    c.total += &v;
                    *c.by_free.entry(free).or_default() += &v;
                    *c.by_runners.entry(runners).or_default() += &v;
                    if last {
                        *c.by_runners_last_marked.entry(runners).or_default() += &v;
                    }
                }
            }
        }
        c
    }
}

#[derive(Clone, Debug)]
struct State {
    p: usize,
    reserved: u64,
    runner_mask: u64,
    edges: Vec<(usize, usize)>,
    free: usize,
    runners: usize,
    last_runner: bool,
}

struct Search<'a> {
    n: usize,
    table: &'a OrientTable,
    policy: Policy,
    /// Row-major `n x n` mask of admissible edges; `None` admits every edge.
    allowed: Option<Vec<bool>>,
}

impl<'a> Search<'a> {
    fn root(&self, fixed: &[(usize, usize)]) -> State {
        let mut reserved = 0u64;
        for &(a, b) in fixed {
            reserved |= 1 << a | 1 << b;
        }
        State {
            p: 0,
            reserved,
            runner_mask: 0,
            edges: fixed.to_vec(),
            free: 0,
            runners: 0,
            last_runner: false,
        }
    }

    /// Whether some edge spanning `p` lies below it, and whether some lies above.
    fn sides(&self, st: &State, p: usize) -> (bool, bool) {
        let (mut below, mut above) = (false, false);
        for &(a, b) in &st.edges {
            if a < p && p < b {
                if self.table.get(a, b, p) > 0 {
                    below = true;
                } else {
                    above = true;
                }
            }
        }
        (below, above)
    }

    fn edge_ok(&self, st: &State, p: usize, q: usize) -> bool {
        if st.reserved >> q & 1 == 1 {
            return false;
        }
        if let Some(mask) = &self.allowed {
            if !mask[p * self.n + q] {
                return false;
            }
        }
        !st.edges.iter().any(|&(a, b)| self.table.crosses(p, q, a, b))
    }

    fn visit<F: FnMut(&State)>(&self, st: &mut State, leaf: &mut F) {
        let p = st.p;
        if p == self.n {
            leaf(st);
            return;
        }
        st.p += 1;
        if st.reserved >> p & 1 == 1 {
            self.visit(st, leaf);
            st.p -= 1;
            return;
        }
        let (below, above) = self.sides(st, p);
        let free_ok = match self.policy.free {
            FreeRule::Any => true,
            FreeRule::Forbidden => false,
            FreeRule::VisibleBelow => !below,
            FreeRule::VisibleAbove => !above,
        };
        if free_ok {
            st.free += 1;
            self.visit(st, leaf);
            st.free -= 1;
        }
        if self.policy.runners && !above {
            let saved = st.last_runner;
            st.runners += 1;
            st.runner_mask |= 1 << p;
            st.last_runner = p + 1 == self.n;
            self.visit(st, leaf);
            st.last_runner = saved;
            st.runner_mask &= !(1 << p);
            st.runners -= 1;
        }
        for q in p + 1..self.n {
            if !self.edge_ok(st, p, q) {
                continue;
            }
            st.edges.push((p, q));
            st.reserved |= 1 << q;
            self.visit(st, leaf);
            st.reserved &= !(1 << q);
            st.edges.pop();
        }
        st.p -= 1;
    }

    /// Frontier of partial states after deciding enough points to keep
    /// several threads busy.
    fn frontier(&self, root: State, target: usize) -> Vec<State> {
        let mut layer = vec![root];
        while layer.len() < target && layer.iter().any(|s| s.p < self.n) {
            let mut next = Vec::new();
            for st in layer {
                if st.p == self.n {
                    next.push(st);
                    continue;
                }
                self.children(st, &mut next);
            }
            layer = next;
        }
        layer
    }

    fn children(&self, st: State, out: &mut Vec<State>) {
        let p = st.p;
        if st.reserved >> p & 1 == 1 {
            out.push(State { p: p + 1, ..st });
            return;
        }
        let (below, above) = self.sides(&st, p);
        let free_ok = match self.policy.free {
            FreeRule::Any => true,
            FreeRule::Forbidden => false,
            FreeRule::VisibleBelow => !below,
            FreeRule::VisibleAbove => !above,
        };
        if free_ok {
            let mut c = st.clone();
            c.p += 1;
            c.free += 1;
            out.push(c);
        }
        if self.policy.runners && !above {
            let mut c = st.clone();
            c.p += 1;
            c.runners += 1;
            c.runner_mask |= 1 << p;
            c.last_runner = p + 1 == self.n;
            out.push(c);
        }
        for q in p + 1..self.n {
            if self.edge_ok(&st, p, q) {
                let mut c = st.clone();
                c.p += 1;
                c.edges.push((p, q));
                c.reserved |= 1 << q;
                out.push(c);
            }
        }
    }

    fn count(&self, root: State) -> Tally {
        let n = self.n;
        self.frontier(root, 256)
            .into_par_iter()
            .map(|mut st| {
                let mut t = Tally::new(n);
                self.visit(&mut st, &mut |s: &State| t.add(s.free, s.runners, s.last_runner));
                t
            })
            .reduce(|| Tally::new(n), Tally::merge)
    }
}

fn to_matching(n: usize, st: &State) -> RhoMatching {
    RhoMatching {
        n,
        edges: {
            let mut e = st.edges.clone();
            e.sort_unstable();
            e
        },
        runners: (0..n).filter(|&v| st.runner_mask >> v & 1 == 1).collect(),
    }
}

/// Exact census of the matchings of `ps` admitted by `kind`.
pub fn enumerate(ps: &PointSet, kind: MatchingKind, cfg: &OracleConfig) -> Result<MatchingCensus> {
    enumerate_with(ps, kind.into(), cfg)
}

pub fn enumerate_with(ps: &PointSet, policy: Policy, cfg: &OracleConfig) -> Result<MatchingCensus> {
    cfg.check(ps.len(), policy)?;
    let table = ps.orient_table();
    let search = Search {
        n: ps.len(),
        table: &table,
        policy,
        allowed: None,
    };
    Ok(search.count(search.root(&[])).into_census())
}

/// Calls `f` on every matching admitted by `policy`, in search order.
pub fn for_each_matching<F>(ps: &PointSet, policy: Policy, cfg: &OracleConfig, mut f: F) -> Result<()>
where
    F: FnMut(RhoMatching),
{
    cfg.check(ps.len(), policy)?;
    let table = ps.orient_table();
    let n = ps.len();
    let search = Search {
        n,
        table: &table,
        policy,
        allowed: None,
    };
    let mut root = search.root(&[]);
    search.visit(&mut root, &mut |s: &State| f(to_matching(n, s)));
    Ok(())
}

/// Down-free matchings with runners, counted by number of runners.
pub fn census_runners(ps: &PointSet, cfg: &OracleConfig) -> Result<CountVector> {
    let c = enumerate(ps, MatchingKind::RhoDownFree, cfg)?;
    Ok(by_runner_vector(&c.by_runners))
}

pub fn by_runner_vector(m: &BTreeMap<usize, BigUint>) -> CountVector {
    let len = m.keys().next_back().map_or(1, |k| k + 1);
    let mut v = vec![BigUint::ZERO; len];
    for (&k, x) in m {
        v[k] = x.clone();
    }
    CountVector::from_vec(v)
}

fn check_halves(ds: &DoubleSet, mp: &RhoMatching, mq: &RhoMatching) -> Result<()> {
    if mp.n() != ds.upper().len() || mq.n() != ds.lower().len() {
        return Err(Error::InvalidMatching("matching sizes do not fit the double set".into()));
    }
    if !mp.runners().is_empty() || !mq.runners().is_empty() {
        return Err(Error::InvalidMatching("completion needs runner-free matchings".into()));
    }
    mp.validate(ds.upper())?;
    mq.validate(ds.lower())
}

fn lift_edges(ds: &DoubleSet, mp: &RhoMatching, mq: &RhoMatching) -> Vec<(usize, usize)> {
    let up = ds.upper_positions();
    let lo = ds.lower_positions();
    let mut out: Vec<(usize, usize)> = mp
        .edges()
        .iter()
        .map(|&(a, b)| (up[a], up[b]))
        .chain(mq.edges().iter().map(|&(a, b)| (lo[a], lo[b])))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    out.sort_unstable();
    out
}

/// The unique completion of `mp ∪ mq` to a perfect matching of the union by
/// edges between the two halves, when `mp` is down-free and `mq` up-free.
///
/// Returns `Ok(None)` when no completion exists and an error when the free
/// counts differ.
pub fn complete_to_perfect(ds: &DoubleSet, mp: &RhoMatching, mq: &RhoMatching) -> Result<Option<RhoMatching>> {
    check_halves(ds, mp, mq)?;
    let fp = mp.free_points();
    let fq = mq.free_points();
    if fp.len() != fq.len() {
        return Err(Error::UnequalFreeCounts {
            upper: fp.len(),
            lower: fq.len(),
        });
    }
    if !mp.is_down_free(ds.upper()) || !mq.is_up_free(ds.lower()) {
        return Ok(None);
    }
    let up = ds.upper_positions();
    let lo = ds.lower_positions();
    let mut edges = lift_edges(ds, mp, mq);
    edges.extend(fp.iter().zip(&fq).map(|(&a, &b)| {
        let (a, b) = (up[a], lo[b]);
        (a.min(b), a.max(b))
    }));
    let m = RhoMatching::new(ds.union().len(), edges, Vec::new())?;
    m.validate(ds.union())
        .map_err(|e| Error::Consistency(format!("completion is not a valid matching: {e}")))?;
    Ok(Some(m))
}

/// Number of perfect matchings of the union that contain `mp ∪ mq` and whose
/// other edges all join the two halves.
pub fn count_perfect_extensions(ds: &DoubleSet, mp: &RhoMatching, mq: &RhoMatching) -> Result<BigUint> {
    check_halves(ds, mp, mq)?;
    let union = ds.union();
    let n = union.len();
    if n > MAX_BITMASK_POINTS {
        return Err(Error::CapExceeded {
            size: n,
            cap: MAX_BITMASK_POINTS,
            what: "extension search",
        });
    }
    let table = union.orient_table();
    let mut allowed = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            allowed[a * n + b] = ds.is_upper(a) != ds.is_upper(b);
        }
    }
    let search = Search {
        n,
        table: &table,
        policy: MatchingKind::Perfect.into(),
        allowed: Some(allowed),
    };
    let fixed = lift_edges(ds, mp, mq);
    let mut count = 0u64;
    let mut root = search.root(&fixed);
    search.visit(&mut root, &mut |_: &State| count += 1);
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{make_chain, make_double, make_rchain, make_zigzag, Direction, Parity};

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn total(ps: &PointSet, kind: MatchingKind) -> u64 {
        enumerate(ps, kind, &cfg()).unwrap().total.try_into().unwrap()
    }

    #[test]
    fn convex_examples() {
        let c4 = make_chain(4, Direction::Downward).unwrap();
        assert_eq!(total(&c4, MatchingKind::All), 9);
        let c6 = make_chain(6, Direction::Downward).unwrap();
        assert_eq!(total(&c6, MatchingKind::Perfect), 5);
    }

    #[test]
    fn upward_arc_of_five() {
        let arc = make_chain(5, Direction::Upward).unwrap();
        assert_eq!(total(&arc, MatchingKind::DownFree), 10);
        let v = census_runners(&arc, &cfg()).unwrap();
        let want: Vec<BigUint> = [10u32, 30, 30, 20, 5, 1].iter().map(|&x| x.into()).collect();
        assert_eq!(v, CountVector::from_vec(want));
    }

    #[test]
    fn empty_set_has_one_matching() {
        let ps = PointSet::empty("empty");
        let v = census_runners(&ps, &cfg()).unwrap();
        assert_eq!(v, CountVector::unit(0));
    }

    #[test]
    fn cap_is_enforced() {
        let big = make_chain(19, Direction::Downward).unwrap();
        assert!(matches!(
            enumerate(&big, MatchingKind::All, &cfg()),
            Err(Error::CapExceeded { .. })
        ));
        let rho = make_chain(17, Direction::Upward).unwrap();
        assert!(census_runners(&rho, &cfg()).is_err());
    }

    #[test]
    fn census_breakdowns_sum_to_total() {
        let ps = make_rchain(3, 2, true).unwrap();
        let c = enumerate(&ps, MatchingKind::RhoDownFree, &cfg()).unwrap();
        let s1: BigUint = c.by_free.values().sum();
        let s2: BigUint = c.by_runners.values().sum();
        assert_eq!(s1, c.total);
        assert_eq!(s2, c.total);
    }

    #[test]
    fn for_each_agrees_with_count() {
        let ps = make_rchain(2, 3, false).unwrap();
        let mut seen = 0u64;
        for_each_matching(&ps, MatchingKind::RhoDownFree.into(), &cfg(), |m| {
            m.validate(&ps).unwrap();
            assert!(m.is_down_free(&ps));
            seen += 1;
        })
        .unwrap();
        assert_eq!(seen, total(&ps, MatchingKind::RhoDownFree));
    }

    #[test]
    fn matching_constructor_rejects_bad_input() {
        assert!(RhoMatching::new(4, vec![(0, 1), (1, 2)], vec![]).is_err());
        assert!(RhoMatching::new(4, vec![(0, 1)], vec![1]).is_err());
        assert!(RhoMatching::new(4, vec![(0, 4)], vec![]).is_err());
        let m = RhoMatching::new(4, vec![(2, 0)], vec![3]).unwrap();
        assert_eq!(m.edges(), &[(0, 2)]);
        assert_eq!(m.status(1), PointStatus::Free);
        assert_eq!(m.status(3), PointStatus::Runner);
    }

    #[test]
    fn completion_of_empty_matchings() {
        let ds = make_double(|m| make_chain(m, Direction::Downward), 6).unwrap();
        let e = RhoMatching::empty(3);
        let m = complete_to_perfect(&ds, &e, &e).unwrap().unwrap();
        assert_eq!(m.edges().len(), 3);
        for &(a, b) in m.edges() {
            assert_ne!(ds.is_upper(a), ds.is_upper(b));
        }
        assert_eq!(count_perfect_extensions(&ds, &e, &e).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn completion_refuses_non_down_free() {
        // in eSZZC_4 the lifted point 1 lies above the edge (0,2)
        let ds = make_double(|m| make_zigzag(m, Parity::Even, Direction::Downward), 8).unwrap();
        let mp = RhoMatching::new(4, vec![(0, 2)], vec![]).unwrap();
        assert!(!mp.is_down_free(ds.upper()));
        let mq = RhoMatching::new(4, vec![(0, 1)], vec![]).unwrap();
        assert_eq!(complete_to_perfect(&ds, &mp, &mq).unwrap(), None);
        assert_eq!(count_perfect_extensions(&ds, &mp, &mq).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn completion_rejects_unequal_free_counts() {
        let ds = make_double(|m| make_chain(m, Direction::Downward), 8).unwrap();
        let mp = RhoMatching::new(4, vec![(0, 1)], vec![]).unwrap();
        let mq = RhoMatching::empty(4);
        assert!(matches!(
            complete_to_perfect(&ds, &mp, &mq),
            Err(Error::UnequalFreeCounts { upper: 2, lower: 4 })
        ));
    }
}
