//! Triangular data: the graded character of the Nichols algebra, Verma,
//! co-Verma and induced characters, and tables of simple characters.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::arith::LaurentInt;
use crate::error::{Error, Result};
use crate::fusion::{DoubleGroup, Weight};
use crate::graded::{GradedChar, KElement};

/// `ch B^j(V)` for `j = 0..=n_top`.
#[derive(Clone, Debug)]
pub struct NicholsProfile {
    dg: Arc<DoubleGroup>,
    components: Vec<KElement>,
    lambda_v: Weight,
}

impl NicholsProfile {
    pub fn new(dg: Arc<DoubleGroup>, components: Vec<KElement>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::validation("profile-nonempty", "a profile needs at least the degree-0 component"));
        }
        for (j, c) in components.iter().enumerate() {
            for (w, _) in c.terms() {
                dg.check_weight(w)?;
            }
            if c.is_zero() {
                return Err(Error::validation("components-nonzero", format!("component {} is zero", j)));
            }
            if !c.is_nonnegative() {
                return Err(Error::validation(
                    "nonnegative-multiplicities",
                    format!("component {} has a negative multiplicity: {}", j, c),
                ));
            }
        }
        if components[0] != KElement::weight(Weight::EPSILON) {
            return Err(Error::validation(
                "component-0-is-epsilon",
                format!("degree-0 component is {} instead of {}", components[0], Weight::EPSILON),
            ));
        }
        let top = components.last().unwrap();
        let lambda_v = match top.as_single_weight() {
            Some(w) if dg.dimension(w) == 1 => w,
            _ => {
                return Err(Error::validation(
                    "top-component-one-dimensional",
                    format!("top component {} is not a single one-dimensional weight", top),
                ))
            }
        };
        let prod = KElement::weight(lambda_v).mul(&KElement::weight(dg.dual_weight(lambda_v)), &dg)?;
        if prod != KElement::weight(Weight::EPSILON) {
            return Err(Error::validation("lambda-V-invertible", format!("{} times its dual is {}", lambda_v, prod)));
        }
        Ok(NicholsProfile { dg, components, lambda_v })
    }

    /// The profile of `B(V) = k`.
    pub fn trivial(dg: Arc<DoubleGroup>) -> Self {
        NicholsProfile { dg, components: vec![KElement::weight(Weight::EPSILON)], lambda_v: Weight::EPSILON }
    }

    pub fn double_group(&self) -> &Arc<DoubleGroup> {
        &self.dg
    }

    pub fn n_top(&self) -> i64 {
        self.components.len() as i64 - 1
    }

    pub fn components(&self) -> &[KElement] {
        &self.components
    }

    pub fn lambda_v(&self) -> Weight {
        self.lambda_v
    }

    pub fn lambda_ov(&self) -> Weight {
        self.dg.dual_weight(self.lambda_v)
    }

    pub fn dimension(&self) -> i64 {
        self.components.iter().map(|c| c.dimension(&self.dg)).sum()
    }

    /// `ch B(V)` with `B^j(V)` at degree `-j`.
    pub fn nichols_char(&self) -> GradedChar {
        let mut g = GradedChar::zero();
        for (j, c) in self.components.iter().enumerate() {
            g.add_component(-(j as i64), c);
        }
        g
    }

    /// The product `a · b` of a one-dimensional weight with any weight.
    pub fn times_invertible(&self, a: Weight, b: Weight) -> Result<Weight> {
        let row = self.dg.fusion(a, b)?;
        match row.iter().next() {
            Some((&w, &1)) if row.len() == 1 => Ok(w),
            _ => Err(Error::Inconsistent(format!("{} · {} is not a single weight", a, b))),
        }
    }

    pub fn verma_char(&self, lambda: Weight) -> Result<GradedChar> {
        self.dg.check_weight(lambda)?;
        let l = KElement::weight(lambda);
        let mut g = GradedChar::zero();
        for (j, c) in self.components.iter().enumerate() {
            g.add_component(-(j as i64), &c.mul(&l, &self.dg)?);
        }
        Ok(g)
    }

    pub fn coverma_char(&self, lambda: Weight) -> Result<GradedChar> {
        self.dg.check_weight(lambda)?;
        let l = KElement::weight(lambda);
        let mut g = GradedChar::zero();
        for (j, c) in self.components.iter().enumerate() {
            g.add_component(j as i64, &c.dual(&self.dg).mul(&l, &self.dg)?);
        }
        Ok(g)
    }

    /// `ch Ind(λ) = ch W(ε) · ch M(λ)`.
    pub fn ind_char(&self, lambda: Weight) -> Result<GradedChar> {
        self.coverma_char(Weight::EPSILON)?.mul(&self.verma_char(lambda)?, &self.dg)
    }
}

/// Outcome of one named identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed }
    }
}

/// The four expressions for the dual of a Verma character, plus the socle law.
pub fn verify_duality_identities(profile: &NicholsProfile, lambda: Weight) -> Result<Vec<Check>> {
    let dg = profile.double_group();
    let n = profile.n_top();
    let lv_l = profile.times_invertible(profile.lambda_v(), lambda)?;
    let e1 = profile.coverma_char(lv_l)?.dual(dg).shift(n);
    let e2 = profile.coverma_char(dg.dual_weight(lambda))?;
    let e3 = profile.verma_char(lambda)?.dual(dg);
    let e4 = profile.verma_char(dg.dual_weight(lv_l))?.shift(n);
    let verma = profile.verma_char(lambda)?;
    let soc = verma.min_degree() == Some(-n) && verma.component(-n) == Some(&KElement::weight(lv_l));
    Ok(vec![
        Check::new(format!("dual co-Verma of {}·{} equals co-Verma of the dual", profile.lambda_v(), lambda), e1 == e2),
        Check::new(format!("co-Verma of the dual of {} equals the dual Verma", lambda), e2 == e3),
        Check::new(
            format!("dual Verma of {} equals shifted Verma of ({}·{})*", lambda, profile.lambda_v(), lambda),
            e3 == e4,
        ),
        Check::new(format!("socle of M({}) is {} at degree {}", lambda, lv_l, -n), soc),
    ])
}

/// `λ ↦ (λ̄, l_λ)`.
pub type LowestData = BTreeMap<Weight, (Weight, i64)>;

/// Graded characters of the simple modules `L(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleTable {
    entries: BTreeMap<Weight, GradedChar>,
    lowest: LowestData,
}

impl SimpleTable {
    pub fn new(dg: &DoubleGroup, entries: BTreeMap<Weight, GradedChar>) -> Result<Self> {
        for &w in entries.keys() {
            dg.check_weight(w)?;
        }
        for &w in dg.weights() {
            if !entries.contains_key(&w) {
                return Err(Error::validation("table-covers-weights", format!("no simple character for {}", w)));
            }
        }
        let mut lowest = LowestData::new();
        for (&w, ch) in &entries {
            for (_, k) in ch.components() {
                for (x, _) in k.terms() {
                    dg.check_weight(x)?;
                }
            }
            if ch.max_degree() != Some(0) || ch.component(0) != Some(&KElement::weight(w)) {
                return Err(Error::validation(
                    "leading-term",
                    format!("ch L({}) must be {} at degree 0 plus lower terms, got {}", w, w, ch),
                ));
            }
            if !ch.is_nonnegative() {
                return Err(Error::validation("nonnegative-multiplicities", format!("ch L({}) = {}", w, ch)));
            }
            let l = ch.min_degree().unwrap();
            let bottom = ch.component(l).unwrap();
            let bar = bottom.as_single_weight().ok_or_else(|| {
                Error::validation(
                    "lowest-component-simple",
                    format!("lowest component of ch L({}) is {}, not a single weight", w, bottom),
                )
            })?;
            lowest.insert(w, (bar, l));
        }
        let mut seen = BTreeMap::new();
        for (&w, &(bar, _)) in &lowest {
            if let Some(prev) = seen.insert(bar, w) {
                return Err(Error::validation(
                    "lowest-weight-bijection",
                    format!("L({}) and L({}) share the lowest weight {}", prev, w, bar),
                ));
            }
        }
        Ok(SimpleTable { entries, lowest })
    }

    pub fn get(&self, w: Weight) -> &GradedChar {
        &self.entries[&w]
    }

    pub fn entries(&self) -> &BTreeMap<Weight, GradedChar> {
        &self.entries
    }

    pub fn lowest_data(&self) -> &LowestData {
        &self.lowest
    }

    /// `p_{L(λ),μ}`.
    pub fn weight_poly(&self, lambda: Weight, mu: Weight) -> LaurentInt {
        self.entries[&lambda].weight_poly(mu)
    }
}

pub fn lowest_data(table: &SimpleTable) -> &LowestData {
    table.lowest_data()
}

/// Ungraded composition multiplicities `[M(λ):L(μ)]`, for data known only at `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaComposition {
    rows: BTreeMap<Weight, KElement>,
}

impl VermaComposition {
    pub fn new(dg: &DoubleGroup, rows: BTreeMap<Weight, KElement>) -> Result<Self> {
        for (&w, row) in &rows {
            dg.check_weight(w)?;
            for (x, _) in row.terms() {
                dg.check_weight(x)?;
            }
            if !row.is_nonnegative() {
                return Err(Error::validation("nonnegative-multiplicities", format!("[M({}):L(-)] = {}", w, row)));
            }
            if row.get(w) < 1 {
                return Err(Error::validation("head-multiplicity", format!("L({}) does not occur in M({})", w, w)));
            }
        }
        for &w in dg.weights() {
            if !rows.contains_key(&w) {
                return Err(Error::validation("table-covers-weights", format!("no composition row for M({})", w)));
            }
        }
        Ok(VermaComposition { rows })
    }

    pub fn get(&self, lambda: Weight, mu: Weight) -> i64 {
        self.rows[&lambda].get(mu)
    }

    pub fn rows(&self) -> &BTreeMap<Weight, KElement> {
        &self.rows
    }
}
