use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};

use chainmatch::chain_corner::{condensed_table, coupled_iterate, extract_band, f0_sequence};
use chainmatch::chain_free::{best_r, head_sequence, iterate, lambda_r, root_growth, CountVector};
use chainmatch::doubling::dc_pm;
use chainmatch::geometry::{make_chain, make_double, make_rchain, make_zigzag, Direction, Parity, PointSet};
use chainmatch::oracle::{census_runners, enumerate, MatchingKind, OracleConfig};
use chainmatch::spectral::{build_certificate, eigen, rescale, verify_certificate, weighted_total_jump};
use chainmatch::zigzag::{zz_am_growth, zz_growth, GrowthConstant, ZigzagTriple, ZigzagVariant};

use crate::output::{Report, Table};
use crate::{
    CountArgs, DirectionArg, DoublePmArgs, FamilyArgs, FamilyKind, GrowthArgs, KindArg, ParityArg, RecurseArgs,
    SequenceFamily, SubeigArgs, TableArgs, VariantArg, VerifyArgs, VerifyFamily,
};

fn parity(p: ParityArg) -> Parity {
    match p {
        ParityArg::Even => Parity::Even,
        ParityArg::Odd => Parity::Odd,
    }
}

fn direction(d: DirectionArg) -> Direction {
    match d {
        DirectionArg::Down => Direction::Downward,
        DirectionArg::Up => Direction::Upward,
    }
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    v.ok_or_else(|| anyhow!("--{flag} is required for --family {family}"))
}

fn build_set(a: &FamilyArgs) -> Result<PointSet> {
    let family = a.family.ok_or_else(|| anyhow!("--family is required"))?;
    let ps = match family {
        FamilyKind::Chain => make_chain(need(a.n, "n", "chain")?, direction(a.direction))?,
        FamilyKind::Zigzag => make_zigzag(need(a.n, "n", "zigzag")?, parity(a.parity), direction(a.direction))?,
        FamilyKind::Rchain => make_rchain(need(a.r, "r", "rchain")?, need(a.k, "k", "rchain")?, a.corners)?,
        FamilyKind::DoubleChain => {
            let n = need(a.n, "n", "double-chain")?;
            make_double(|m| make_chain(m, Direction::Downward), n)?.union().clone()
        }
        FamilyKind::DoubleZigzag => {
            let n = need(a.n, "n", "double-zigzag")?;
            let p = parity(a.parity);
            make_double(|m| make_zigzag(m, p, Direction::Downward), n)?.union().clone()
        }
    };
    Ok(ps)
}

fn big(v: &BigUint) -> String {
    v.to_str_radix(10)
}

pub fn gen(a: &FamilyArgs) -> Result<Report> {
    let ps = build_set(a)?;
    let mut t = Table::new(&["x", "y"]);
    for p in ps.points() {
        t.push(vec![p.x.to_string(), p.y.to_string()]);
    }
    Ok(Report::json("gen", ps.to_json()).with_table(t))
}

pub fn count(a: &CountArgs, oracle: &OracleConfig) -> Result<Report> {
    let ps = match &a.input {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            PointSet::from_json(&v)?
        }
        None => build_set(&a.set)?,
    };
    let kind = match a.kind {
        KindArg::All => MatchingKind::All,
        KindArg::Perfect => MatchingKind::Perfect,
        KindArg::DownFree => MatchingKind::DownFree,
        KindArg::UpFree => MatchingKind::UpFree,
        KindArg::RhoDownFree => MatchingKind::RhoDownFree,
    };
    let census = enumerate(&ps, kind, oracle)?;
    let mut json = census.to_json();
    json["label"] = Value::from(ps.label());
    json["points"] = Value::from(ps.len());
    json["kind"] = Value::from(format!("{kind:?}"));
    let mut t = Table::new(&["key", "count"]);
    t.push(vec!["total".into(), big(&census.total)]);
    for (j, c) in &census.by_free {
        t.push(vec![format!("free={j}"), big(c)]);
    }
    for (i, c) in &census.by_runners {
        t.push(vec![format!("runners={i}"), big(c)]);
    }
    Ok(Report::json("count", json).with_table(t))
}

fn rows_json(header: &[String], rows: &[Vec<String>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                header
                    .iter()
                    .zip(r)
                    .map(|(h, v)| (h.clone(), Value::from(v.clone())))
                    .collect::<serde_json::Map<_, _>>()
                    .into()
            })
            .collect(),
    )
}

fn tabular(command: &'static str, extra: Value, t: Table) -> Report {
    let mut json = extra;
    json["rows"] = rows_json(&t.header, &t.rows);
    Report::tabular(command, json, t)
}

pub fn recurse(a: &RecurseArgs) -> Result<Report> {
    match a.family {
        SequenceFamily::Zigzag => {
            let variant = match a.variant {
                VariantArg::Dfm => ZigzagVariant::DownFree,
                VariantArg::Am => ZigzagVariant::All,
            };
            let z = ZigzagTriple::up_to(a.kmax, variant);
            let mut t = Table::new(&["k", "a_k", "b_k", "c_k"]);
            for k in 0..=a.kmax {
                t.push(vec![k.to_string(), big(&z.a[k]), big(&z.b[k]), big(&z.c[k])]);
            }
            Ok(tabular("recurse", json!({"family": "zigzag", "variant": format!("{variant:?}")}), t))
        }
        SequenceFamily::Rchain => {
            let r = need(a.r, "r", "rchain")?;
            let (seq, col) = if a.corners {
                (f0_sequence(r, a.kmax)?, "F_k_0")
            } else {
                (head_sequence(r, a.kmax)?, "v_k_0")
            };
            let mut t = Table::new(&["k", col]);
            for (k, v) in seq.iter().enumerate() {
                t.push(vec![k.to_string(), big(v)]);
            }
            Ok(tabular("recurse", json!({"family": "rchain", "r": r, "corners": a.corners}), t))
        }
    }
}

fn growth_json(g: &GrowthConstant) -> Value {
    json!({
        "exact": g.exact.to_json(),
        "value": format!("{:.9}", g.value),
        "lambda": format!("{:.9}", g.lambda),
    })
}

pub fn growth(a: &GrowthArgs) -> Result<Report> {
    let json = match (a.r, a.corners) {
        (None, false) => json!({
            "zigzag_down_free": growth_json(&zz_growth()),
            "zigzag_all": growth_json(&zz_am_growth()),
        }),
        (None, true) => bail!("--corners needs --r"),
        (Some(r), false) => {
            let best = best_r(191)?;
            json!({
                "r": r,
                "lambda_r": big(&lambda_r(r)),
                "growth": format!("{:.9}", root_growth(r)),
                "best_r": best.r,
                "best_growth": format!("{:.9}", best.growth),
                "tail_certified": best.tail_certified,
            })
        }
        (Some(r), true) => {
            let sys = extract_band(r)?;
            let e = eigen(sys.condensed())?;
            let c = sys.condensed();
            json!({
                "r": r,
                "condensed": [[c[0][0].to_string(), c[0][1].to_string()], [c[1][0].to_string(), c[1][1].to_string()]],
                "m": e.m.to_json(),
                "m_value": format!("{:.9}", e.m.to_f64()),
                "t_r": format!("{:.9}", e.m.to_f64().powf(1.0 / r as f64)),
                "weighted_total_jump_zero": weighted_total_jump(&sys, &e).is_zero(),
                "positivity_violations": sys.positivity_violations(),
            })
        }
    };
    Ok(Report::json("growth", json))
}

pub fn table(a: &TableArgs) -> Result<Report> {
    if a.max_r == 0 {
        bail!("--max-r must be positive");
    }
    if a.corners {
        let mut t = Table::new(&["r", "cc", "cf", "fc", "ff", "t_r"]);
        for row in condensed_table(a.max_r)? {
            let c = &row.condensed;
            t.push(vec![
                row.r.to_string(),
                c[0][0].to_string(),
                c[0][1].to_string(),
                c[1][0].to_string(),
                c[1][1].to_string(),
                format!("{:.4}", row.t_r),
            ]);
        }
        Ok(tabular("table", json!({"corners": true}), t))
    } else {
        let mut t = Table::new(&["r", "lambda_r", "growth"]);
        for r in 1..=a.max_r {
            t.push(vec![r.to_string(), big(&lambda_r(r)), format!("{:.4}", root_growth(r))]);
        }
        Ok(tabular("table", json!({"corners": false}), t))
    }
}

pub fn double_pm(a: &DoublePmArgs) -> Result<Report> {
    if a.max_n < 2 || a.max_n % 2 != 0 {
        bail!("--max-n must be even and at least 2, got {}", a.max_n);
    }
    let mut t = Table::new(&["n", "pm"]);
    for n in (2..=a.max_n).step_by(2) {
        t.push(vec![n.to_string(), big(&dc_pm(n)?)]);
    }
    Ok(tabular("double-pm", json!({}), t))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let q: BigRational = s.trim().parse().map_err(|_| anyhow!("bad rational {s:?}, expected N/D"))?;
    if !q.is_positive() {
        bail!("epsilon must be positive, got {s}");
    }
    Ok(q)
}

pub fn subeig(a: &SubeigArgs) -> Result<Report> {
    let eps = parse_rational(&a.epsilon)?;
    let sys = extract_band(a.r)?;
    let rs = rescale(&sys, &eigen(sys.condensed())?);
    let cert = build_certificate(&rs, &eps)?;
    let rep = verify_certificate(&rs, &cert);
    let json = json!({
        "certificate": cert.to_json(),
        "verified": rep.holds,
        "literal_checks": rep.literal_checks,
        "failure": rep.failure.map(|(g, i)| json!({"group": g, "index": i})),
        "reason": rep.reason,
    });
    let report = Report::json("subeig", json);
    Ok(if rep.holds {
        report
    } else {
        report.failed(format!("certificate for r = {} does not verify", a.r))
    })
}

struct Case {
    name: String,
    oracle: String,
    recursion: String,
}

fn vector(v: &CountVector) -> String {
    v.trimmed().iter().map(big).collect::<Vec<_>>().join(" ")
}

fn verify_cases(a: &VerifyArgs, oracle: &OracleConfig) -> Result<Vec<Case>> {
    let max = a.max_points;
    let mut cases = Vec::new();
    match a.family {
        VerifyFamily::Zigzag => {
            let t = ZigzagTriple::up_to(max / 2 + 1, ZigzagVariant::DownFree);
            for n in 1..=max {
                for p in [Parity::Even, Parity::Odd] {
                    let ps = make_zigzag(n, p, Direction::Downward)?;
                    cases.push(Case {
                        name: ps.label().to_string(),
                        oracle: big(&enumerate(&ps, MatchingKind::DownFree, oracle)?.total),
                        recursion: big(t.count(n, p == Parity::Odd).expect("long enough")),
                    });
                }
            }
        }
        VerifyFamily::Rchain => {
            for r in 1..=max {
                for k in 1..=max / r {
                    let ps = make_rchain(r, k, false)?;
                    cases.push(Case {
                        name: ps.label().to_string(),
                        oracle: vector(&census_runners(&ps, oracle)?),
                        recursion: vector(&iterate(r, k)?),
                    });
                }
            }
        }
        VerifyFamily::Corners => {
            for r in 1..max {
                let kmax = (max - 1) / r;
                if kmax == 0 {
                    continue;
                }
                let states = coupled_iterate(r, kmax)?;
                for (k, s) in states.iter().enumerate().skip(1) {
                    let ps = make_rchain(r, k, true)?;
                    let c = enumerate(&ps, MatchingKind::RhoDownFree, oracle)?;
                    let get = |m: &BTreeMap<usize, BigUint>, i: usize| m.get(&i).cloned().unwrap_or_default();
                    let len = ps.len() + 1;
                    let cv = CountVector::from_vec((0..len).map(|i| get(&c.by_runners_last_marked, i + 1)).collect());
                    let fv = CountVector::from_vec(
                        (0..len)
                            .map(|i| get(&c.by_runners, i) - get(&c.by_runners_last_marked, i))
                            .collect(),
                    );
                    cases.push(Case {
                        name: ps.label().to_string(),
                        oracle: format!("C: {} | F: {}", vector(&cv), vector(&fv)),
                        recursion: format!("C: {} | F: {}", vector(&s.c), vector(&s.f)),
                    });
                }
            }
        }
        VerifyFamily::DoubleChain => {
            for n in (2..=max).step_by(2) {
                let ds = make_double(|m| make_chain(m, Direction::Downward), n)?;
                cases.push(Case {
                    name: ds.union().label().to_string(),
                    oracle: big(&enumerate(ds.union(), MatchingKind::Perfect, oracle)?.total),
                    recursion: big(&dc_pm(n)?),
                });
            }
        }
    }
    Ok(cases)
}

pub fn verify(a: &VerifyArgs, oracle: &OracleConfig) -> Result<Report> {
    let start = Instant::now();
    let cases = verify_cases(a, oracle)?;
    let mut t = Table::new(&["case", "oracle", "recursion", "pass"]);
    let mut failures = 0;
    let list: Vec<Value> = cases
        .iter()
        .map(|c| {
            let pass = c.oracle == c.recursion;
            failures += usize::from(!pass);
            t.push(vec![c.name.replace(',', ";"), c.oracle.clone(), c.recursion.clone(), pass.to_string()]);
            json!({"case": c.name, "oracle": c.oracle, "recursion": c.recursion, "pass": pass})
        })
        .collect();
    let json = json!({
        "command": "verify",
        "inputs": {"family": format!("{:?}", a.family), "max_points": a.max_points},
        "cases": list,
        "all_pass": failures == 0,
    });
    eprintln!("verify: {} cases in {:.2}s", cases.len(), start.elapsed().as_secs_f64());
    let report = Report::json("verify", json).with_table(t);
    Ok(if failures == 0 {
        report
    } else {
        report.failed(format!("{failures} of {} cases differ", cases.len()))
    })
}
