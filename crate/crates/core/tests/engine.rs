use std::collections::BTreeMap;
use std::sync::Arc;

use bgg_core::arith::LaurentInt;
use bgg_core::bgg::{bgg_matrices, decompose_into_simples, verify_report, SimpleData};
use bgg_core::group::{cyclic_group, symmetric_group};
use bgg_core::profile::{NicholsProfile, SimpleTable};
use bgg_core::taft::{build_profile_and_table, verify_taft, TaftParams};
use bgg_core::{DoubleGroup, Error, GradedChar, KElement, Weight};

fn invariant(e: Error) -> &'static str {
    match e {
        Error::Validation { invariant, .. } => invariant,
        other => panic!("expected a validation error, got {}", other),
    }
}

fn fk3_profile() -> NicholsProfile {
    let dg = Arc::new(DoubleGroup::new(symmetric_group(3)).unwrap());
    let k = |ws: &[(usize, usize)]| KElement::from_terms(ws.iter().map(|&(c, i)| (Weight::new(c, i), 1)));
    let comps = vec![k(&[(0, 0)]), k(&[(1, 1)]), k(&[(2, 1), (2, 2)]), k(&[(1, 1)]), k(&[(0, 0)])];
    NicholsProfile::new(dg, comps).unwrap()
}

#[test]
fn trivial_profile_gives_identity_matrices() {
    let dg = Arc::new(DoubleGroup::new(cyclic_group(2)).unwrap());
    let profile = NicholsProfile::trivial(dg.clone());
    let table = SimpleTable::new(&dg, dg.weights().iter().map(|&w| (w, GradedChar::single(w, 0))).collect()).unwrap();
    let report = bgg_matrices(&profile, &SimpleData::Graded(table.clone())).unwrap();
    let n = dg.weights().len();
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { LaurentInt::one() } else { LaurentInt::zero() };
            assert_eq!(report.verma_simple[i][j], want);
            assert_eq!(report.projective_verma[i][j], want);
            assert_eq!(report.cartan[i][j], want);
        }
    }
    assert!(report.simple_projective.iter().all(|&b| b));
    assert!(verify_report(&profile, &SimpleData::Graded(table), &report).unwrap().iter().all(|c| c.passed));
}

#[test]
fn taft_verma_and_socle() {
    for n in 2..=5u32 {
        let s = build_profile_and_table(&TaftParams::new(n).unwrap()).unwrap();
        let top = n as i64 - 1;
        for &w in s.double.weights() {
            let (r, t) = s.rs(w);
            let m = s.profile.verma_char(w).unwrap();
            assert_eq!(m.min_degree(), Some(-top));
            assert_eq!(m.component(-top), Some(&KElement::weight(s.weight(r as i64 + top, t as i64 + top))));
        }
    }
    let s = build_profile_and_table(&TaftParams::new(3).unwrap()).unwrap();
    let want = KElement::from_terms([(s.weight(0, 0), 1), (s.weight(1, 1), 1), (s.weight(2, 2), 1)]);
    assert_eq!(s.profile.verma_char(s.weight(0, 0)).unwrap().eval_ungraded(), want);
}

#[test]
fn taft_full_verification() {
    for (n, simple) in [(2u32, 2usize), (3, 3), (4, 4), (5, 5), (6, 6)] {
        let (_, summary) = verify_taft(n).unwrap();
        assert!(
            summary.all_passed(),
            "n = {}: {:?}",
            n,
            summary.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
        assert_eq!(summary.simple_projective, simple);
        if n == 3 {
            assert_eq!(summary.headline(), "all 9 weights verified; 3 simple projective Vermas");
        }
    }
}

#[test]
fn cartan_is_dt_d_and_collapse_agrees() {
    let s = build_profile_and_table(&TaftParams::new(4).unwrap()).unwrap();
    let graded = SimpleData::Graded(s.table.clone());
    let report = bgg_matrices(&s.profile, &graded).unwrap();
    let n = report.weights.len();
    let d: Vec<Vec<i64>> = report.verma_simple.iter().map(|r| r.iter().map(LaurentInt::eval_one).collect()).collect();
    for a in 0..n {
        for b in 0..n {
            let dtd: i64 = (0..n).map(|k| d[k][a] * d[k][b]).sum();
            assert_eq!(report.cartan[a][b].eval_one(), dtd);
        }
    }
    let flat = graded.collapse(&s.profile).unwrap();
    let ungraded = bgg_matrices(&s.profile, &flat).unwrap();
    assert!(!ungraded.graded);
    for a in 0..n {
        for b in 0..n {
            assert_eq!(ungraded.projective_verma[a][b], LaurentInt::constant(report.projective_verma[a][b].eval_one()));
        }
        assert_eq!(
            ungraded.projective_chars[a],
            GradedChar::from_component(0, report.projective_chars[a].eval_ungraded())
        );
    }
    assert_eq!(ungraded.simple_projective, report.simple_projective);
    assert!(verify_report(&s.profile, &flat, &ungraded).unwrap().iter().all(|c| c.passed));
}

#[test]
fn induced_dimension_on_s3_profile() {
    let p = fk3_profile();
    let dg = p.double_group().clone();
    assert_eq!(p.dimension(), 12);
    assert_eq!(p.lambda_v(), dg.epsilon());
    for &w in dg.weights() {
        let ind = p.ind_char(w).unwrap().eval_ungraded();
        assert_eq!(ind.dimension(&dg), 144 * dg.dimension(w) as i64);
    }
}

#[test]
fn profile_validation() {
    let dg = Arc::new(DoubleGroup::new(cyclic_group(3)).unwrap());
    let w = |c, i| KElement::weight(Weight::new(c, i));
    assert_eq!(invariant(NicholsProfile::new(dg.clone(), vec![]).unwrap_err()), "profile-nonempty");
    assert_eq!(invariant(NicholsProfile::new(dg.clone(), vec![w(1, 0)]).unwrap_err()), "component-0-is-epsilon");
    assert_eq!(
        invariant(NicholsProfile::new(dg.clone(), vec![w(0, 0), KElement::zero()]).unwrap_err()),
        "components-nonzero"
    );
    let neg = KElement::from_terms([(Weight::new(1, 1), -1)]);
    assert_eq!(
        invariant(NicholsProfile::new(dg.clone(), vec![w(0, 0), neg]).unwrap_err()),
        "nonnegative-multiplicities"
    );
    let two = KElement::from_terms([(Weight::new(1, 1), 1), (Weight::new(2, 2), 1)]);
    assert_eq!(
        invariant(NicholsProfile::new(dg.clone(), vec![w(0, 0), two]).unwrap_err()),
        "top-component-one-dimensional"
    );
    assert!(NicholsProfile::new(dg, vec![w(0, 0), w(1, 1)]).is_ok());
}

#[test]
fn simple_table_validation_and_residuals() {
    let s = build_profile_and_table(&TaftParams::new(3).unwrap()).unwrap();
    let dg = &s.double;
    let mut entries: BTreeMap<Weight, GradedChar> = s.table.entries().clone();
    entries.remove(&s.weight(0, 0));
    assert_eq!(invariant(SimpleTable::new(dg, entries.clone()).unwrap_err()), "table-covers-weights");
    entries.insert(s.weight(0, 0), GradedChar::single(s.weight(1, 1), 0));
    assert_eq!(invariant(SimpleTable::new(dg, entries).unwrap_err()), "leading-term");

    // a character with a lone lower-degree weight that no simple accounts for
    let mut bad = GradedChar::single(s.weight(0, 0), 0);
    bad.add_term(-1, s.weight(1, 1), -1);
    match decompose_into_simples(&bad, &s.table) {
        Err(Error::NotInSpan { residual, .. }) => assert!(!residual.is_zero()),
        other => panic!("expected NotInSpan, got {:?}", other.map(|m| m.len())),
    }
}
