//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bgg_core::arith::LaurentInt;
use bgg_core::bgg::{
    bgg_matrices, decompose_into_simples, ind_into_projectives, tensor_projectives, BggReport, SimpleData,
};
use bgg_core::group::{cyclic_group, symmetric_group};
use bgg_core::io;
use bgg_core::profile::verify_duality_identities;
use bgg_core::taft::{build_profile_and_table, explicit_matrices, simple_length, TaftParams, TaftSetup};
use bgg_core::{DoubleGroup, GradedChar, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn taft(n: u32) -> Result<TaftSetup, String> {
    build_profile_and_table(&TaftParams::new(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn taft_report(setup: &TaftSetup) -> Result<BggReport, String> {
    bgg_matrices(&setup.profile, &SimpleData::Graded(setup.table.clone())).map_err(|e| e.to_string())
}

fn fk3_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/fk3")
}

fn ac1() -> Outcome {
    let dg = DoubleGroup::new(symmetric_group(3)).map_err(|e| e.to_string())?;
    let labels: Vec<String> = dg.weights().iter().map(Weight::label).collect();
    ensure(labels == ["g0r0", "g0r1", "g0r2", "g1r0", "g1r1", "g2r0", "g2r1", "g2r2"], || {
        format!("labels {:?}", labels)
    })?;
    let aliases = io::load_aliases(&fk3_dir().join("aliases.json"), &dg).map_err(|e| e.to_string())?;
    let names: Vec<String> = dg.weights().iter().map(|&w| aliases.name(w)).collect();
    ensure(names == ["(e,+)", "(e,-)", "(e,ρ)", "(σ,+)", "(σ,-)", "(τ,0)", "(τ,1)", "(τ,2)"], || {
        format!("aliases {:?}", names)
    })?;
    let dims: Vec<u64> = dg.weights().iter().map(|&w| dg.dimension(w)).collect();
    ensure(dims == [1, 1, 2, 3, 3, 2, 2, 2], || format!("dimensions {:?}", dims))?;
    let total: u64 = dims.iter().map(|d| d * d).sum();
    ensure(total == 36, || format!("sum of squares {}", total))?;
    Ok("8 weights, dims (1,1,2,3,3,2,2,2), sum 36".into())
}

fn ac2() -> Outcome {
    let mut worst = Duration::ZERO;
    for n in 2..=5u32 {
        let start = Instant::now();
        let s = taft(n)?;
        let dg = &s.double;
        for &w in dg.weights() {
            let d = s.profile.verma_char(w).map_err(|e| e.to_string())?.dimension(dg);
            ensure(d == n as i64, || format!("n={}: dim M{:?} = {}", n, s.rs(w), d))?;
        }
        for l in 1..=n as i64 {
            for r in 1..=n as i64 {
                let w = s.weight(r, 1 - (r + l));
                let d = s.table.get(w).dimension(dg);
                ensure(d == l, || format!("n={}: dim L({},1-({}+{})) = {}", n, r, r, l, d))?;
            }
        }
        let took = start.elapsed();
        ensure(took < Duration::from_secs(5), || format!("n={} took {:?}", n, took))?;
        worst = worst.max(took);
    }
    Ok(format!("n=2..5, slowest {:.2?}", worst))
}

fn ac3() -> Outcome {
    for n in 2..=5u32 {
        let s = taft(n)?;
        let report = taft_report(&s)?;
        let n = n as i64;
        let expected: Vec<Weight> = (0..n).map(|r| s.weight(r, 1 - (r + n))).collect();
        for &w in s.double.weights() {
            let flagged = report.is_simple_projective(w);
            ensure(flagged == expected.contains(&w), || format!("n={}: weight {:?} flagged {}", n, s.rs(w), flagged))?;
        }
    }
    Ok("flags match (r, 1-(r+n)) for n=2..5".into())
}

fn ac4() -> Outcome {
    let mut checked = 0;
    for n in 2..=5u32 {
        let params = TaftParams::new(n).map_err(|e| e.to_string())?;
        let s = taft(n)?;
        let report = taft_report(&s)?;
        let dg = &s.double;
        let n = n as i64;
        let l_top = s.profile.n_top();
        for r in 0..n {
            for l in 1..n {
                let mu = s.weight(r, 1 - (r + l));
                ensure(simple_length(&params, s.rs(mu).0, s.rs(mu).1) as i64 == l, || {
                    format!("length of {:?}", s.rs(mu))
                })?;
                ensure(!report.is_simple_projective(mu), || format!("{:?} flagged simple projective", s.rs(mu)))?;
                let second = s.weight(r + l - n, 1 - ((r + l - n) + (n - l)));
                let ungraded: BTreeMap<Weight, i64> = dg
                    .weights()
                    .iter()
                    .map(|&x| (x, report.projective_verma(mu, x).eval_one()))
                    .filter(|&(_, m)| m != 0)
                    .collect();
                ensure(ungraded == BTreeMap::from([(mu, 1), (second, 1)]), || {
                    format!("n={}: [P{:?}] = {:?}", n, s.rs(mu), ungraded)
                })?;
                // lowest degree of L(mu) is 1 - l, so the second summand sits at l_mu + n_top = n - l
                let (_, l_mu) = s.table.lowest_data()[&mu];
                ensure(l_mu == 1 - l, || format!("l_mu = {}", l_mu))?;
                ensure(*report.projective_verma(mu, mu) == LaurentInt::one(), || "top summand shifted".into())?;
                ensure(*report.projective_verma(mu, second) == LaurentInt::t(l_mu + l_top), || {
                    format!("n={}: shift {} for P{:?}", n, report.projective_verma(mu, second), s.rs(mu))
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} non-simple Verma weights, second summand at t^(n-l)", checked))
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 2..=6u32 {
        let s = taft(n)?;
        for &w in s.double.weights() {
            for c in verify_duality_identities(&s.profile, w).map_err(|e| e.to_string())? {
                ensure(c.passed, || format!("n={}: {}", n, c.name))?;
                count += 1;
            }
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {:?}", took))?;
    Ok(format!("{} identities for n=2..6 in {:.2?}", count, took))
}

fn ac6() -> Outcome {
    for n in 2..=5u32 {
        let s = taft(n)?;
        let report = taft_report(&s)?;
        for &m in s.double.weights() {
            for &l in s.double.weights() {
                let p = report.projective_verma(m, l);
                let q = report.verma_simple(l, m);
                ensure(*p == q.bar(), || format!("n={}: graded entry ({:?},{:?})", n, s.rs(m), s.rs(l)))?;
                ensure(p.eval_one() == q.eval_one(), || format!("n={}: ungraded entry", n))?;
            }
        }
    }
    Ok("n=2..5, all entries".into())
}

fn ac7() -> Outcome {
    let dir = fk3_dir();
    let dg = io::load_double(&dir.join("group.json"), 10_000, None).map_err(|e| e.to_string())?;
    let aliases = io::load_aliases(&dir.join("aliases.json"), &dg).map_err(|e| e.to_string())?;
    let profile = io::load_profile(&dir.join("profile.json"), dg.clone(), &aliases).map_err(|e| e.to_string())?;
    let simples = io::load_simples(&dir.join("composition.json"), &profile, &aliases).map_err(|e| e.to_string())?;
    let report = bgg_matrices(&profile, &simples).map_err(|e| e.to_string())?;
    let w = |a: &str| aliases.resolve(&dg, a).unwrap();
    let expected = [
        ("(σ,-)", vec![("(σ,-)", 2), ("(e,+)", 1), ("(τ,0)", 1), ("(e,ρ)", 1)]),
        ("(e,+)", vec![("(e,+)", 2), ("(σ,-)", 2)]),
        ("(e,ρ)", vec![("(τ,0)", 1), ("(e,ρ)", 1), ("(σ,-)", 1)]),
    ];
    for (p, row) in expected {
        let want: BTreeMap<Weight, i64> = row.iter().map(|&(a, m)| (w(a), m)).collect();
        let got: BTreeMap<Weight, i64> = dg
            .weights()
            .iter()
            .map(|&x| (x, report.projective_verma(w(p), x).eval_one()))
            .filter(|&(_, m)| m != 0)
            .collect();
        ensure(got == want, || format!("P{}: {:?}", p, got))?;
    }
    let simple: Vec<String> =
        dg.weights().iter().filter(|&&x| report.is_simple_projective(x)).map(|&x| aliases.name(x)).collect();
    ensure(simple == ["(e,-)", "(σ,+)", "(τ,1)", "(τ,2)"], || format!("simple Vermas {:?}", simple))?;
    Ok("three projective lines and four simple Vermas".into())
}

fn ac8() -> Outcome {
    let s = taft(3)?;
    let simples = SimpleData::Graded(s.table.clone());
    let report = taft_report(&s)?;
    let dg = &s.double;
    for &mu in dg.weights() {
        let map = ind_into_projectives(&s.profile, &simples, &report, mu).map_err(|e| e.to_string())?;
        let mut sum = GradedChar::zero();
        for &l in dg.weights() {
            sum.add_laurent_multiple(&s.table.weight_poly(l, mu).bar(), report.projective_char(l));
        }
        let ind = s.profile.ind_char(mu).map_err(|e| e.to_string())?;
        ensure(sum == ind, || format!("Ind{:?}: projective sum differs", s.rs(mu)))?;
        let mut via_map = GradedChar::zero();
        for (l, p) in &map {
            via_map.add_laurent_multiple(p, report.projective_char(*l));
        }
        ensure(via_map == ind, || format!("Ind{:?}: engine expansion differs", s.rs(mu)))?;
        let want = s.profile.dimension().pow(2) * dg.dimension(mu) as i64;
        ensure(ind.dimension(dg) == want && want == 9, || format!("dim Ind{:?} = {}", s.rs(mu), ind.dimension(dg)))?;
    }
    Ok("9 weights, both expansions, dim 9".into())
}

fn ac9() -> Outcome {
    let s = taft(3)?;
    let report = taft_report(&s)?;
    let dg = &s.double;
    let mut pairs = 0;
    for &a in dg.weights() {
        for &b in dg.weights() {
            let map = tensor_projectives(&s.profile, &report, a, b).map_err(|e| e.to_string())?;
            let lhs = report.projective_char(a).dimension(dg) * report.projective_char(b).dimension(dg);
            let rhs: i64 = map.iter().map(|(&w, p)| p.eval_one() * 9 * dg.dimension(w) as i64).sum();
            ensure(lhs == rhs, || format!("P{:?}⊗P{:?}: {} vs {}", s.rs(a), s.rs(b), lhs, rhs))?;
            pairs += 1;
        }
    }
    let spot = tensor_projectives(&s.profile, &report, s.weight(2, 2), s.weight(2, 2)).map_err(|e| e.to_string())?;
    ensure(spot == BTreeMap::from([(s.weight(0, 0), LaurentInt::t(-2))]), || format!("spot value {:?}", spot))?;
    ensure(pairs == 81, || format!("{} pairs", pairs))?;
    Ok("81 pairs, P(2,2)⊗P(2,2) = t^-2 Ind(0,0)".into())
}

fn fusion_properties(dg: &DoubleGroup) -> Result<(), String> {
    let ws = dg.weights();
    let k = ws.len();
    let eps = dg.epsilon();
    let mut rows = BTreeMap::new();
    // dense structure constants: n[(a * k + b) * k + c] = N_{ab}^c
    let mut n = vec![0i64; k * k * k];
    for (i, &a) in ws.iter().enumerate() {
        for (j, &b) in ws.iter().enumerate() {
            let row = dg.fusion(a, b).map_err(|e| e.to_string())?;
            for (&c, &m) in &row {
                n[(i * k + j) * k + dg.index(c)] = m;
            }
            rows.insert((a, b), row);
        }
    }
    let at = |a: usize, b: usize, c: usize| n[(a * k + b) * k + c];
    for (i, &a) in ws.iter().enumerate() {
        ensure(rows[&(eps, a)] == BTreeMap::from([(a, 1)]), || format!("unit law fails at {}", a))?;
        let d = dg.dual_weight(a);
        ensure(dg.dual_weight(d) == a, || format!("dual of dual of {}", a))?;
        ensure(at(i, dg.index(d), dg.index(eps)) == 1, || format!("{} ⊗ {}* lacks ε", a, a))?;
        for (j, &b) in ws.iter().enumerate() {
            ensure(rows[&(a, b)] == rows[&(b, a)], || format!("{} ⊗ {} not commutative", a, b))?;
            ensure(rows[&(a, b)].values().all(|&m| m >= 0), || format!("negative constant in {} ⊗ {}", a, b))?;
            let dim: i64 = rows[&(a, b)].iter().map(|(&c, &m)| m * dg.dimension(c) as i64).sum();
            ensure(dim == (dg.dimension(a) * dg.dimension(b)) as i64, || format!("dimension of {} ⊗ {}", a, b))?;
            for c in 0..k {
                for y in 0..k {
                    let left: i64 = (0..k).map(|x| at(i, j, x) * at(x, c, y)).sum();
                    let right: i64 = (0..k).map(|x| at(j, c, x) * at(i, x, y)).sum();
                    ensure(left == right, || format!("associativity at ({}, {}, {}) -> {}", a, b, ws[c], ws[y]))?;
                }
            }
        }
    }
    Ok(())
}

fn ac10() -> Outcome {
    let start = Instant::now();
    let mut groups = vec![("S3".to_string(), symmetric_group(3))];
    for n in 1..=6 {
        groups.push((format!("C{}", n), cyclic_group(n)));
    }
    for (name, g) in groups {
        let dg = DoubleGroup::new(g).map_err(|e| e.to_string())?;
        fusion_properties(&dg).map_err(|e| format!("{}: {}", name, e))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {:?}", took))?;
    Ok(format!("S3 and C1..C6 in {:.2?}", took))
}

fn ac11() -> Outcome {
    let mut count = 0;
    for n in 2..=5u32 {
        let params = TaftParams::new(n).map_err(|e| e.to_string())?;
        let s = taft(n)?;
        for &w in s.double.weights() {
            let (r, t) = s.rs(w);
            let (_, oracle) = explicit_matrices(&params, r, t).map_err(|e| e.to_string())?;
            let from_matrices: BTreeMap<Weight, LaurentInt> = oracle
                .composition
                .iter()
                .map(|&((a, b), shift)| (s.weight(a as i64, b as i64), LaurentInt::t(shift)))
                .collect();
            let engine = decompose_into_simples(&s.profile.verma_char(w).map_err(|e| e.to_string())?, &s.table)
                .map_err(|e| e.to_string())?;
            ensure(engine == from_matrices, || {
                format!("n={}: M({},{}) oracle {:?} engine {:?}", n, r, t, from_matrices, engine)
            })?;
            count += 1;
        }
    }
    Ok(format!("{} Verma modules for n=2..5", count))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1", "D(S3) weight census", Some(Duration::from_secs(1)), ac1),
        ("AC2", "Taft Verma and simple dimensions", None, ac2),
        ("AC3", "simple iff projective classification", None, ac3),
        ("AC4", "Taft projective structure", None, ac4),
        ("AC5", "graded duality identities", Some(Duration::from_secs(30)), ac5),
        ("AC6", "graded BGG reciprocity", None, ac6),
        ("AC7", "FK3 projective characters", None, ac7),
        ("AC8", "induced module expansions", None, ac8),
        ("AC9", "tensor products of projectives", None, ac9),
        ("AC10", "fusion ring properties", Some(Duration::from_secs(60)), ac10),
        ("AC11", "matrix oracle versus decomposition engine", None, ac11),
    ];
    let mut failures = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took >= l => Err(format!("took {:.2?}, limit {:?}", took, l)),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {} {}: {} ({:.2?})", id, name, detail, took),
            Err(e) => {
                failures += 1;
                println!("[FAIL] {} {}: {} ({:.2?})", id, name, e, took);
            }
        }
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
