use chainmatch::chain_free::{band_matrix, CountVector};
use chainmatch::doubling::{catalan, dc_pm, dc_pm_terms, motzkin, pm_of_double, FreePointProfile};
use chainmatch::geometry::{
    make_chain, make_double, make_rchain, make_zigzag, orientation, Direction, Parity, PointSet, RationalPoint,
};
use chainmatch::oracle::{
    census_runners, complete_to_perfect, count_perfect_extensions, enumerate, for_each_matching, MatchingKind,
    OracleConfig, RhoMatching,
};
use chainmatch::quad::QuadNumber;
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::sample::Index;

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn point_set() -> impl Strategy<Value = PointSet> {
    (1usize..=9)
        .prop_flat_map(|n| {
            (
                prop::collection::btree_set(-40i64..40, n),
                prop::collection::vec(-40i64..40, n),
            )
        })
        .prop_filter_map("general position", |(xs, ys)| {
            let pts = xs.into_iter().zip(ys).map(|(x, y)| RationalPoint::from_ints(x, y)).collect();
            let ps = PointSet::new(pts, "random").ok()?;
            ps.check_general_position().ok()?;
            Some(ps)
        })
}

fn count(ps: &PointSet, kind: MatchingKind) -> BigUint {
    enumerate(ps, kind, &cfg()).unwrap().total
}

fn matchings(ps: &PointSet, kind: MatchingKind) -> Vec<RhoMatching> {
    let mut out = Vec::new();
    for_each_matching(ps, kind.into(), &cfg(), |m| out.push(m)).unwrap();
    out
}

fn family(which: u8) -> impl Fn(usize) -> chainmatch::Result<PointSet> {
    move |m| match which {
        0 => make_chain(m, Direction::Downward),
        1 => make_zigzag(m, Parity::Even, Direction::Downward),
        2 => make_zigzag(m, Parity::Odd, Direction::Downward),
        _ => make_chain(m, Direction::Upward),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kinds_are_nested(ps in point_set()) {
        let pm = count(&ps, MatchingKind::Perfect);
        let df = count(&ps, MatchingKind::DownFree);
        let uf = count(&ps, MatchingKind::UpFree);
        let all = count(&ps, MatchingKind::All);
        prop_assert!(pm <= df && df <= all);
        prop_assert!(pm <= uf && uf <= all);
        prop_assert_eq!(count(&ps.reflected(), MatchingKind::DownFree), uf);
        prop_assert_eq!(count(&ps.mirrored(), MatchingKind::All), all);
    }

    #[test]
    fn runner_census_sums(ps in point_set()) {
        let c = enumerate(&ps, MatchingKind::RhoDownFree, &cfg()).unwrap();
        let by_runners: BigUint = c.by_runners.values().sum();
        prop_assert_eq!(&by_runners, &c.total);
        // no runners means plain down-free matchings
        let zero = c.by_runners.get(&0).cloned().unwrap_or_default();
        prop_assert_eq!(zero, count(&ps, MatchingKind::DownFree));
    }

    #[test]
    fn orientation_is_alternating(ps in point_set()) {
        let p = ps.points();
        prop_assume!(p.len() >= 3);
        prop_assert_eq!(orientation(&p[0], &p[1], &p[2]), orientation(&p[1], &p[2], &p[0]));
        prop_assert_eq!(orientation(&p[0], &p[1], &p[2]), orientation(&p[1], &p[0], &p[2]).reversed());
    }

    #[test]
    fn json_round_trip(ps in point_set()) {
        let back = PointSet::from_json(&ps.to_json()).unwrap();
        prop_assert_eq!(back.points(), ps.points());
    }

    #[test]
    fn convex_counts(n in 1usize..=14) {
        let ps = make_chain(n, Direction::Downward).unwrap();
        prop_assert_eq!(count(&ps, MatchingKind::All), motzkin(n));
        let want = if n % 2 == 0 { catalan(n / 2) } else { BigUint::zero() };
        prop_assert_eq!(count(&ps, MatchingKind::Perfect), want);
    }

    #[test]
    fn last_arc_split(r in 1usize..=6, k in 2usize..=6) {
        prop_assume!(r * k <= 12);
        // appending one arc acts on runner vectors through the band matrix
        let prev = census_runners(&make_rchain(r, k - 1, false).unwrap(), &cfg()).unwrap();
        let next = census_runners(&make_rchain(r, k, false).unwrap(), &cfg()).unwrap();
        let dim = r * k + 1;
        let a = band_matrix(r, dim).unwrap();
        let stepped: Vec<BigUint> = (0..dim)
            .map(|i| (0..prev.len()).map(|j| a.get(i, j) * prev.get(j)).sum())
            .collect();
        prop_assert_eq!(CountVector::from_vec(stepped), next);
    }

    #[test]
    fn unique_completion(which in 0u8..4, half in 1usize..=7, pick in any::<(Index, Index)>()) {
        let ds = make_double(family(which), 2 * half).unwrap();
        let ups = matchings(ds.upper(), MatchingKind::DownFree);
        let mp = pick.0.get(&ups);
        let free = mp.free_points().len();
        let lows: Vec<RhoMatching> = matchings(ds.lower(), MatchingKind::UpFree)
            .into_iter()
            .filter(|m| m.free_points().len() == free)
            .collect();
        prop_assume!(!lows.is_empty());
        let mq = pick.1.get(&lows);
        let done = complete_to_perfect(&ds, mp, mq).unwrap().expect("completion exists");
        prop_assert!(done.free_points().is_empty());
        prop_assert_eq!(count_perfect_extensions(&ds, mp, mq).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn doubling_bounds(which in 0u8..3, half in 1usize..=7) {
        let ds = make_double(family(which), 2 * half).unwrap();
        let c = enumerate(ds.upper(), MatchingKind::DownFree, &cfg()).unwrap();
        let prof = FreePointProfile::new((0..=half).map(|j| c.by_free.get(&j).cloned().unwrap_or_default()).collect());
        let pm = pm_of_double(&prof);
        let t = prof.total();
        prop_assert!(pm <= &t * &t);
        prop_assert!(&pm * BigUint::from(half + 1) >= &t * &t);
    }

    #[test]
    fn quad_field_identities(a in -50i64..50, b in -50i64..50, c in 1i64..20, e in -50i64..50, f in 1i64..50) {
        let d = 93;
        let x = QuadNumber::new(a.into(), b.into(), c.into(), d.into());
        let y = QuadNumber::new(e.into(), f.into(), 7.into(), d.into());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        let fx = x.to_f64();
        let fy = y.to_f64();
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x.cmp(&y), fx.partial_cmp(&fy).unwrap());
        }
        prop_assert!(QuadNumber::from_int(x.floor()) <= x && x < QuadNumber::from_int(x.floor() + 1));
    }
}

#[test]
fn double_chain_terms_sum() {
    for n in (2..=40).step_by(2) {
        let s: BigUint = dc_pm_terms(n).unwrap().into_iter().sum();
        assert_eq!(s, dc_pm(n).unwrap());
    }
}

#[test]
fn count_vectors_ignore_trailing_zeros() {
    let a = CountVector::from_vec(vec![1u32.into(), 2u32.into()]);
    let b = CountVector::from_vec(vec![1u32.into(), 2u32.into(), BigUint::zero()]);
    assert_eq!(a, b);
}
