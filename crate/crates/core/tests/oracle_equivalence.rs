//! Recursions against exhaustive enumeration on small instances.

use chainmatch::chain_corner::{coupled_iterate, f0_sequence};
use chainmatch::chain_free::{iterate, z1_variant, ArcVariant, CountVector};
use chainmatch::doubling::{dc_pm, pm_of_double, FreePointProfile};
use chainmatch::geometry::{make_chain, make_double, make_rchain, make_zigzag, Direction, Parity, PointSet};
use chainmatch::oracle::{census_runners, enumerate, enumerate_with, MatchingKind, OracleConfig, Policy};
use chainmatch::zigzag::{ZigzagTriple, ZigzagVariant};
use num_bigint::BigUint;

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn total(ps: &PointSet, kind: MatchingKind) -> BigUint {
    enumerate(ps, kind, &cfg()).unwrap().total
}

#[test]
fn zigzag_down_free_all_kinds() {
    let t = ZigzagTriple::up_to(8, ZigzagVariant::DownFree);
    for n in 1..=15 {
        for parity in [Parity::Even, Parity::Odd] {
            let ps = make_zigzag(n, parity, Direction::Downward).unwrap();
            let want = t.count(n, parity == Parity::Odd).unwrap();
            assert_eq!(&total(&ps, MatchingKind::DownFree), want, "{}", ps.label());
        }
    }
}

#[test]
fn zigzag_all_matchings() {
    let t = ZigzagTriple::up_to(7, ZigzagVariant::All);
    for n in 1..=14 {
        for parity in [Parity::Even, Parity::Odd] {
            let ps = make_zigzag(n, parity, Direction::Downward).unwrap();
            let want = t.count(n, parity == Parity::Odd).unwrap();
            assert_eq!(&total(&ps, MatchingKind::All), want, "{}", ps.label());
        }
    }
}

#[test]
fn corner_free_runner_vectors() {
    for r in 1..=14 {
        for k in 1..=14 / r {
            let ps = make_rchain(r, k, false).unwrap();
            let oracle = census_runners(&ps, &cfg()).unwrap();
            assert_eq!(oracle, iterate(r, k).unwrap(), "r = {r}, k = {k}");
        }
    }
}

#[test]
fn arc_variants_match_runner_policies() {
    for r in 1..=12 {
        let arc = make_chain(r, Direction::Upward).unwrap();
        for (variant, policy) in [
            (ArcVariant::Dfm, MatchingKind::RhoDownFree.into()),
            (ArcVariant::Pm, Policy::RHO_PERFECT),
            (ArcVariant::Am, Policy::RHO_ALL),
        ] {
            let c = enumerate_with(&arc, policy, &cfg()).unwrap();
            for i in 0..=r {
                let got = c.by_runners.get(&i).cloned().unwrap_or_default();
                assert_eq!(got, z1_variant(r, i, variant), "r = {r}, i = {i}, {variant:?}");
            }
        }
    }
}

/// Oracle split of a chain with corners by whether the last corner carries
/// a runner.
fn corner_split(ps: &PointSet) -> (CountVector, CountVector) {
    let c = enumerate(ps, MatchingKind::RhoDownFree, &cfg()).unwrap();
    let len = ps.len() + 1;
    let get = |m: &std::collections::BTreeMap<usize, BigUint>, i: usize| m.get(&i).cloned().unwrap_or_default();
    let cv = (0..len).map(|i| get(&c.by_runners_last_marked, i + 1)).collect();
    let fv = (0..len)
        .map(|i| get(&c.by_runners, i) - get(&c.by_runners_last_marked, i))
        .collect();
    (CountVector::from_vec(cv), CountVector::from_vec(fv))
}

#[test]
fn corner_split_and_head() {
    for r in 1..=13 {
        let kmax = 13 / r;
        let states = coupled_iterate(r, kmax).unwrap();
        let f0 = f0_sequence(r, kmax).unwrap();
        for k in 1..=kmax {
            let ps = make_rchain(r, k, true).unwrap();
            let (c, f) = corner_split(&ps);
            assert_eq!(c, states[k].c, "C, r = {r}, k = {k}");
            assert_eq!(f, states[k].f, "F, r = {r}, k = {k}");
            assert_eq!(f0[k], total(&ps, MatchingKind::DownFree), "r = {r}, k = {k}");
        }
    }
}

#[test]
fn double_chain_perfect_matchings() {
    for n in (2..=14).step_by(2) {
        let ds = make_double(|m| make_chain(m, Direction::Downward), n).unwrap();
        assert_eq!(total(ds.union(), MatchingKind::Perfect), dc_pm(n).unwrap(), "n = {n}");
    }
}

/// Down-free matchings of `ps` counted by number of free points.
fn profile(ps: &PointSet) -> FreePointProfile {
    let c = enumerate(ps, MatchingKind::DownFree, &cfg()).unwrap();
    FreePointProfile::new((0..=ps.len()).map(|j| c.by_free.get(&j).cloned().unwrap_or_default()).collect())
}

#[test]
fn doubling_identity() {
    for n in (2..=14).step_by(2) {
        let families: Vec<(&str, Box<dyn Fn(usize) -> _>)> = vec![
            ("chain", Box::new(|m| make_chain(m, Direction::Downward))),
            ("even zigzag", Box::new(|m| make_zigzag(m, Parity::Even, Direction::Downward))),
            ("odd zigzag", Box::new(|m| make_zigzag(m, Parity::Odd, Direction::Downward))),
        ];
        for (name, family) in families {
            let ds = make_double(&family, n).unwrap();
            let want = pm_of_double(&profile(ds.upper()));
            assert_eq!(total(ds.union(), MatchingKind::Perfect), want, "{name}, n = {n}");
        }
    }
}

#[test]
fn chain_profile_matches_oracle() {
    for m in 1..=12 {
        let ps = make_chain(m, Direction::Downward).unwrap();
        assert_eq!(profile(&ps), FreePointProfile::single_chain(m), "m = {m}");
    }
}
