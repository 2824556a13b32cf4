//! Decomposition into simple characters and the graded BGG reciprocity data.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::arith::{rat, LaurentInt, Rational};
use crate::error::{Error, Result};
use crate::fusion::{DoubleGroup, Weight};
use crate::graded::{GradedChar, KElement};
use crate::profile::{Check, NicholsProfile, SimpleTable, VermaComposition};

/// Weight → Laurent multiplicity.
pub type LaurentMap = BTreeMap<Weight, LaurentInt>;

/// Writes `χ = Σ_μ p_μ · ch L(μ)` by peeling off the top degree repeatedly.
pub fn decompose_into_simples(chi: &GradedChar, table: &SimpleTable) -> Result<LaurentMap> {
    let mut out = LaurentMap::new();
    let mut residual = chi.clone();
    let floor = chi.min_degree().unwrap_or(0);
    while let Some(d) = residual.max_degree() {
        if d < floor {
            return Err(Error::NotInSpan {
                detail: format!("residual extends below degree {}", floor),
                residual: Box::new(residual),
            });
        }
        let top = residual.component(d).unwrap().clone();
        for (w, m) in top.terms() {
            if m < 0 {
                return Err(Error::NotInSpan {
                    detail: format!("negative multiplicity {} of L({}) at degree {}", m, w, d),
                    residual: Box::new(residual),
                });
            }
            out.entry(w).or_default().add_term(d, m);
            let mut piece = GradedChar::zero();
            piece.add_laurent_multiple(&LaurentInt::monomial(d, m), table.get(w));
            residual.sub(&piece);
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// Simple-module data: graded characters, or ungraded `[M:L]` multiplicities.
#[derive(Clone, Debug)]
pub enum SimpleData {
    Graded(SimpleTable),
    Ungraded(UngradedSimples),
}

impl SimpleData {
    pub fn is_graded(&self) -> bool {
        matches!(self, SimpleData::Graded(_))
    }

    /// Forgets the grading: `[M(λ):L(μ)]` is the decomposition evaluated at `t = 1`.
    pub fn collapse(&self, profile: &NicholsProfile) -> Result<SimpleData> {
        let table = match self {
            SimpleData::Graded(t) => t,
            SimpleData::Ungraded(_) => return Ok(self.clone()),
        };
        let dg = profile.double_group();
        let mut rows = BTreeMap::new();
        for &l in dg.weights() {
            let dec = decompose_into_simples(&profile.verma_char(l)?, table)?;
            rows.insert(l, KElement::from_terms(dec.iter().map(|(&w, p)| (w, p.eval_one()))));
        }
        let comp = VermaComposition::new(dg, rows)?;
        Ok(SimpleData::Ungraded(UngradedSimples::new(profile, comp)?))
    }
}

/// `[M(λ):L(μ)]`, plus the ungraded simple characters when the data determine them.
#[derive(Clone, Debug)]
pub struct UngradedSimples {
    composition: VermaComposition,
    simple_chars: Option<BTreeMap<Weight, KElement>>,
}

impl UngradedSimples {
    /// Checks that `ch M(λ) = Σ_μ [M(λ):L(μ)] ch L(μ)` is solvable at `t = 1`.
    ///
    /// Equal rows of `[M:L]` force equal Verma characters. When the matrix is
    /// invertible the simple characters are recovered and must be genuine
    /// (nonnegative, integral, containing their own weight).
    pub fn new(profile: &NicholsProfile, composition: VermaComposition) -> Result<Self> {
        let dg = profile.double_group();
        let ws = dg.weights();
        let n = ws.len();
        let mut a: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
        let mut rhs: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
        for (i, &l) in ws.iter().enumerate() {
            for (j, &m) in ws.iter().enumerate() {
                a[i][j] = rat(composition.get(l, m));
            }
            let verma = profile.verma_char(l)?.eval_ungraded();
            for (j, &w) in ws.iter().enumerate() {
                rhs[i][j] = rat(verma.get(w));
            }
        }
        let sol = match solve_rational(a, rhs) {
            Solution::Inconsistent => {
                return Err(Error::validation(
                    "composition-consistent",
                    "no characters of simple modules reproduce the Verma characters with these [M:L] rows",
                ))
            }
            Solution::Underdetermined => return Ok(UngradedSimples { composition, simple_chars: None }),
            Solution::Unique(sol) => sol,
        };
        let mut simple_chars = BTreeMap::new();
        for (i, &l) in ws.iter().enumerate() {
            let mut k = KElement::zero();
            for (j, &w) in ws.iter().enumerate() {
                let v = &sol[i][j];
                if !v.is_integer() || v.is_negative() {
                    return Err(Error::validation(
                        "composition-consistent",
                        format!("[M:L] data force multiplicity {} of {} in L({})", v, w, l),
                    ));
                }
                k.add_term(w, i64::try_from(v.to_integer()).unwrap_or(i64::MAX));
            }
            if k.get(l) < 1 {
                return Err(Error::validation("composition-consistent", format!("L({}) does not contain {}", l, l)));
            }
            simple_chars.insert(l, k);
        }
        Ok(UngradedSimples { composition, simple_chars: Some(simple_chars) })
    }

    pub fn composition(&self) -> &VermaComposition {
        &self.composition
    }

    /// Whether `[M:L]` pins down every simple character.
    pub fn determines_simples(&self) -> bool {
        self.simple_chars.is_some()
    }

    pub fn simple_char(&self, w: Weight) -> Result<&KElement> {
        self.simple_chars.as_ref().map(|m| &m[&w]).ok_or_else(|| {
            Error::validation(
                "simple-characters-determined",
                "the [M:L] matrix is singular, so the characters of the simple modules are not determined",
            )
        })
    }
}

enum Solution {
    Unique(Vec<Vec<Rational>>),
    Underdetermined,
    Inconsistent,
}

/// Gauss–Jordan on `A X = B` over `Q`.
fn solve_rational(mut a: Vec<Vec<Rational>>, mut b: Vec<Vec<Rational>>) -> Solution {
    let n = a.len();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..n).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        b.swap(rank, p);
        let inv = a[rank][c].recip();
        for x in a[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for x in b[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..n {
                    let t = &f * &a[rank][k];
                    a[r][k] -= t;
                }
                for k in 0..b[r].len() {
                    let t = &f * &b[rank][k];
                    b[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    if b[rank..].iter().any(|row| row.iter().any(|x| !x.is_zero())) {
        Solution::Inconsistent
    } else if rank < n {
        Solution::Underdetermined
    } else {
        Solution::Unique(b)
    }
}

/// Everything graded BGG reciprocity says about a triangular setup.
///
/// Matrices are dense over Λ and indexed by weight position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BggReport {
    pub weights: Vec<Weight>,
    pub graded: bool,
    /// `[λ][μ] = p_{M(λ),L(μ)}`.
    pub verma_simple: Vec<Vec<LaurentInt>>,
    /// `[μ][λ] = p_{P(μ),M(λ)}`.
    pub projective_verma: Vec<Vec<LaurentInt>>,
    /// `[μ][λ] = p_{P(μ),W(λ)}`.
    pub projective_coverma: Vec<Vec<LaurentInt>>,
    pub projective_chars: Vec<GradedChar>,
    /// `[μ][ν] = p_{P(μ),L(ν)}`.
    pub cartan: Vec<Vec<LaurentInt>>,
    pub simple_projective: Vec<bool>,
}

impl BggReport {
    fn pos(&self, w: Weight) -> usize {
        self.weights.binary_search(&w).expect("weight belongs to the report")
    }

    pub fn verma_simple(&self, lambda: Weight, mu: Weight) -> &LaurentInt {
        &self.verma_simple[self.pos(lambda)][self.pos(mu)]
    }

    pub fn projective_verma(&self, mu: Weight, lambda: Weight) -> &LaurentInt {
        &self.projective_verma[self.pos(mu)][self.pos(lambda)]
    }

    pub fn projective_coverma(&self, mu: Weight, lambda: Weight) -> &LaurentInt {
        &self.projective_coverma[self.pos(mu)][self.pos(lambda)]
    }

    pub fn projective_char(&self, mu: Weight) -> &GradedChar {
        &self.projective_chars[self.pos(mu)]
    }

    pub fn cartan(&self, mu: Weight, nu: Weight) -> &LaurentInt {
        &self.cartan[self.pos(mu)][self.pos(nu)]
    }

    pub fn is_simple_projective(&self, lambda: Weight) -> bool {
        self.simple_projective[self.pos(lambda)]
    }
}

/// The two outcomes of the simplicity test on a Verma module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VermaKind {
    SimpleProjective,
    NonSimple,
}

pub fn classify_vermas(report: &BggReport) -> BTreeMap<Weight, VermaKind> {
    report
        .weights
        .iter()
        .zip(&report.simple_projective)
        .map(|(&w, &s)| (w, if s { VermaKind::SimpleProjective } else { VermaKind::NonSimple }))
        .collect()
}

fn verma_char_at(profile: &NicholsProfile, lambda: Weight, graded: bool) -> Result<GradedChar> {
    let ch = profile.verma_char(lambda)?;
    Ok(if graded { ch } else { GradedChar::from_component(0, ch.eval_ungraded()) })
}

fn coverma_char_at(profile: &NicholsProfile, lambda: Weight, graded: bool) -> Result<GradedChar> {
    let ch = profile.coverma_char(lambda)?;
    Ok(if graded { ch } else { GradedChar::from_component(0, ch.eval_ungraded()) })
}

pub fn bgg_matrices(profile: &NicholsProfile, simples: &SimpleData) -> Result<BggReport> {
    let dg = profile.double_group();
    let weights = dg.weights().to_vec();
    let n = weights.len();
    let graded = simples.is_graded();
    let n_top = profile.n_top();

    let mut verma_simple = vec![vec![LaurentInt::zero(); n]; n];
    for (i, &l) in weights.iter().enumerate() {
        match simples {
            SimpleData::Graded(table) => {
                let dec = decompose_into_simples(&profile.verma_char(l)?, table)?;
                for (w, p) in dec {
                    verma_simple[i][dg.index(w)] = p;
                }
            }
            SimpleData::Ungraded(u) => {
                for (j, &m) in weights.iter().enumerate() {
                    verma_simple[i][j] = LaurentInt::constant(u.composition().get(l, m));
                }
            }
        }
    }

    let projective_verma: Vec<Vec<LaurentInt>> =
        (0..n).map(|m| (0..n).map(|l| verma_simple[l][m].bar()).collect()).collect();

    let lov = profile.lambda_ov();
    let mut projective_coverma = vec![vec![LaurentInt::zero(); n]; n];
    for (li, &l) in weights.iter().enumerate() {
        let shifted = dg.index(profile.times_invertible(lov, l)?);
        for m in 0..n {
            let p = verma_simple[shifted][m].bar();
            projective_coverma[m][li] = if graded { p.shift(-n_top) } else { p };
        }
    }

    let vermas: Vec<GradedChar> = weights.iter().map(|&l| verma_char_at(profile, l, graded)).collect::<Result<_>>()?;
    let covermas: Vec<GradedChar> =
        weights.iter().map(|&l| coverma_char_at(profile, l, graded)).collect::<Result<_>>()?;
    let mut projective_chars = Vec::with_capacity(n);
    for m in 0..n {
        let mut ch = GradedChar::zero();
        let mut co = GradedChar::zero();
        for l in 0..n {
            ch.add_laurent_multiple(&projective_verma[m][l], &vermas[l]);
            co.add_laurent_multiple(&projective_coverma[m][l], &covermas[l]);
        }
        if ch != co {
            return Err(Error::Inconsistent(format!(
                "standard and co-standard filtrations of P({}) give different characters",
                weights[m]
            )));
        }
        projective_chars.push(ch);
    }

    let mut cartan = vec![vec![LaurentInt::zero(); n]; n];
    for m in 0..n {
        for v in 0..n {
            let mut acc = LaurentInt::zero();
            for row in &verma_simple {
                acc += &(&row[m].bar() * &row[v]);
            }
            cartan[m][v] = acc;
        }
    }
    if let SimpleData::Graded(table) = simples {
        for m in 0..n {
            let dec = decompose_into_simples(&projective_chars[m], table)?;
            for v in 0..n {
                let direct = dec.get(&weights[v]).cloned().unwrap_or_default();
                if direct != cartan[m][v] {
                    return Err(Error::Inconsistent(format!(
                        "Cartan entry ({}, {}) is {} by reciprocity but {} by decomposition",
                        weights[m], weights[v], cartan[m][v], direct
                    )));
                }
            }
        }
    }

    let simple_projective = (0..n)
        .map(|l| (0..n).all(|m| verma_simple[l][m] == if l == m { LaurentInt::one() } else { LaurentInt::zero() }))
        .collect();

    Ok(BggReport {
        weights,
        graded,
        verma_simple,
        projective_verma,
        projective_coverma,
        projective_chars,
        cartan,
        simple_projective,
    })
}

/// `Ind(μ) = Σ_λ bar(p_{L(λ),μ}) · P(λ)`, cross-checked against `ch Ind(μ)`.
pub fn ind_into_projectives(
    profile: &NicholsProfile,
    simples: &SimpleData,
    report: &BggReport,
    mu: Weight,
) -> Result<LaurentMap> {
    let dg = profile.double_group();
    dg.check_weight(mu)?;
    let mut out = LaurentMap::new();
    for &l in dg.weights() {
        let p = match simples {
            SimpleData::Graded(t) => t.weight_poly(l, mu).bar(),
            SimpleData::Ungraded(u) => LaurentInt::constant(u.simple_char(l)?.get(mu)),
        };
        if !p.is_zero() {
            out.insert(l, p);
        }
    }
    let mut total = GradedChar::zero();
    for (&l, p) in &out {
        total.add_laurent_multiple(p, report.projective_char(l));
    }
    let ind = profile.ind_char(mu)?;
    let ind = if report.graded { ind } else { GradedChar::from_component(0, ind.eval_ungraded()) };
    if total != ind {
        return Err(Error::Inconsistent(format!(
            "projective expansion of Ind({}) gives {} instead of {}",
            mu, total, ind
        )));
    }
    Ok(out)
}

/// `P(μ) ⊗ P(ν) = Σ_{λ,κ} p_{P(μ),W(λ)} p_{P(ν),M(κ)} Ind(λ·κ)` as a map
/// from weights to the Laurent multiplicity of the corresponding `Ind`.
pub fn tensor_projectives(profile: &NicholsProfile, report: &BggReport, mu: Weight, nu: Weight) -> Result<LaurentMap> {
    let dg = profile.double_group();
    dg.check_weight(mu)?;
    dg.check_weight(nu)?;
    let mut out = LaurentMap::new();
    for &l in &report.weights {
        let a = report.projective_coverma(mu, l);
        if a.is_zero() {
            continue;
        }
        for &k in &report.weights {
            let b = report.projective_verma(nu, k);
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (w, m) in dg.fusion(l, k)? {
                *out.entry(w).or_default() += &ab.scale(m);
            }
        }
    }
    out.retain(|_, p| !p.is_zero());

    let dim_p = |w: Weight| report.projective_char(w).dimension(dg);
    let ind_dim = profile.dimension() * profile.dimension();
    let lhs: i64 = out.iter().map(|(&w, p)| p.eval_one() * ind_dim * dg.dimension(w) as i64).sum();
    if lhs != dim_p(mu) * dim_p(nu) {
        return Err(Error::Inconsistent(format!(
            "dim P({})⊗P({}) = {} but the Ind expansion has dimension {}",
            mu,
            nu,
            dim_p(mu) * dim_p(nu),
            lhs
        )));
    }
    if report.graded {
        let prod = report.projective_char(mu).mul(report.projective_char(nu), dg)?;
        let mut sum = GradedChar::zero();
        for (&w, p) in &out {
            sum.add_laurent_multiple(p, &profile.ind_char(w)?);
        }
        if prod != sum {
            return Err(Error::Inconsistent(format!(
                "graded character of P({})⊗P({}) differs from its Ind expansion",
                mu, nu
            )));
        }
    }
    Ok(out)
}

/// Identity checks on a computed report.
///
/// Always: reassembly of Verma characters (graded data), graded and ungraded
/// reciprocity, symmetry of the ungraded Cartan matrix. With graded data also
/// the shift law for the top Verma summand of each projective and the
/// duality law relating `[M(λ):L(μ)]` and `[M((λ_V·λ)*):L(μ̄*)]`.
pub fn verify_report(profile: &NicholsProfile, simples: &SimpleData, report: &BggReport) -> Result<Vec<Check>> {
    let dg = profile.double_group();
    let ws = &report.weights;
    let n = ws.len();
    let mut checks = Vec::new();

    if let SimpleData::Graded(table) = simples {
        let reassembled = ws.iter().all(|&l| {
            let mut sum = GradedChar::zero();
            for &m in ws {
                sum.add_laurent_multiple(report.verma_simple(l, m), table.get(m));
            }
            profile.verma_char(l).map(|v| v == sum).unwrap_or(false)
        });
        checks.push(Check::new("Verma characters reassemble from simple characters", reassembled));
    }

    let graded_bgg = (0..n).all(|m| (0..n).all(|l| report.projective_verma[m][l] == report.verma_simple[l][m].bar()));
    checks.push(Check::new("p_{P(mu),M(lambda)} = bar p_{M(lambda),L(mu)}", graded_bgg));

    let ungraded_bgg = (0..n)
        .all(|m| (0..n).all(|l| report.projective_verma[m][l].eval_one() == report.verma_simple[l][m].eval_one()));
    checks.push(Check::new("[P(mu):M(lambda)] = [M(lambda):L(mu)] at t = 1", ungraded_bgg));

    let symmetric = (0..n).all(|a| (0..n).all(|b| report.cartan[a][b].eval_one() == report.cartan[b][a].eval_one()));
    checks.push(Check::new("ungraded Cartan matrix is symmetric", symmetric));

    if report.graded {
        let leading = (0..n).all(|m| {
            report.projective_verma[m][m].coeff(0) == 1
                && report.projective_verma[m].iter().all(|p| p.min_degree().is_none_or(|d| d >= 0))
        });
        checks.push(Check::new("p_{P(mu),M(mu)} has constant term 1 and all shifts are nonnegative", leading));
    } else {
        let head = (0..n).all(|m| report.projective_verma[m][m].eval_one() >= 1);
        checks.push(Check::new("[P(mu):M(mu)] >= 1", head));
    }

    if let SimpleData::Graded(table) = simples {
        let lov = profile.lambda_ov();
        let n_top = profile.n_top();
        let mut shift_ok = true;
        for &m in ws {
            let (bar, l) = table.lowest_data()[&m];
            let target = profile.times_invertible(lov, bar)?;
            let top = l + n_top;
            let row_max = ws.iter().filter_map(|&x| report.projective_verma(m, x).max_degree()).max();
            let hits = report.projective_verma(m, target).coeff(top) > 0;
            shift_ok &= hits && row_max == Some(top);
        }
        checks.push(Check::new("top Verma summand of P(mu) is M(lambda_oV·mu_bar) at shift l_mu + n_top", shift_ok));

        let mut dual_ok = true;
        for &l in ws {
            let lv_l = profile.times_invertible(profile.lambda_v(), l)?;
            let l2 = dg.dual_weight(lv_l);
            for &m in ws {
                let (bar, lm) = table.lowest_data()[&m];
                let m2 = dg.dual_weight(bar);
                let expected = report.verma_simple(l, m).bar().shift(-n_top - lm);
                dual_ok &= *report.verma_simple(l2, m2) == expected;
            }
        }
        checks.push(Check::new(
            "p_{M((lambda_V·lambda)*),L(mu_bar*)} = t^(-n_top-l_mu) bar p_{M(lambda),L(mu)}",
            dual_ok,
        ));

        let simple_dual = ws.iter().all(|&m| {
            let (bar, lm) = table.lowest_data()[&m];
            table.get(m).dual(dg) == table.get(dg.dual_weight(bar)).shift(-lm)
        });
        checks.push(Check::new("ch L(mu)* = t^(-l_mu) ch L(mu_bar*)", simple_dual));
    }
    Ok(checks)
}

/// The dimension of `ch` for each weight of the double, convenience for reports.
pub fn projective_dimensions(dg: &DoubleGroup, report: &BggReport) -> Vec<i64> {
    report.projective_chars.iter().map(|c| c.dimension(dg)).collect()
}
