//! The graded character ring `KΛ[t, t⁻¹]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::LaurentInt;
use crate::error::Result;
use crate::fusion::{DoubleGroup, Weight};

/// An integer combination of weights: an element of the Grothendieck ring `K`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KElement {
    terms: BTreeMap<Weight, i64>,
}

impl KElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn weight(w: Weight) -> Self {
        Self::from_terms([(w, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(terms: I) -> Self {
        let mut k = Self::zero();
        for (w, m) in terms {
            k.add_term(w, m);
        }
        k
    }

    pub fn add_term(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn get(&self, w: Weight) -> i64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(&w, &m)| (w, m))
    }

    pub fn add(&mut self, other: &KElement) {
        self.add_scaled(other, 1);
    }

    pub fn add_scaled(&mut self, other: &KElement, s: i64) {
        for (w, m) in other.terms() {
            self.add_term(w, m * s);
        }
    }

    pub fn scale(&self, s: i64) -> KElement {
        let mut out = KElement::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// The single weight of a one-term element with multiplicity one.
    pub fn as_single_weight(&self) -> Option<Weight> {
        match self.terms.iter().next() {
            Some((&w, &1)) if self.terms.len() == 1 => Some(w),
            _ => None,
        }
    }

    pub fn mul(&self, other: &KElement, dg: &DoubleGroup) -> Result<KElement> {
        let mut out = KElement::zero();
        for (a, ma) in self.terms() {
            for (b, mb) in other.terms() {
                for (c, n) in dg.fusion(a, b)? {
                    out.add_term(c, ma * mb * n);
                }
            }
        }
        Ok(out)
    }

    pub fn dual(&self, dg: &DoubleGroup) -> KElement {
        KElement::from_terms(self.terms().map(|(w, m)| (dg.dual_weight(w), m)))
    }

    pub fn dimension(&self, dg: &DoubleGroup) -> i64 {
        self.terms().map(|(w, m)| m * dg.dimension(w) as i64).sum()
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.terms().enumerate() {
            let sign = if m < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {} ", sign)?;
            } else if m < 0 {
                write!(f, "-")?;
            }
            if m.abs() != 1 {
                write!(f, "{} ", m.abs())?;
            }
            write!(f, "{}", w)?;
        }
        Ok(())
    }
}

/// A graded character: degree → [`KElement`], with no empty components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedChar {
    comps: BTreeMap<i64, KElement>,
}

impl GradedChar {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `w · t^deg`.
    pub fn single(w: Weight, deg: i64) -> Self {
        Self::from_component(deg, KElement::weight(w))
    }

    pub fn from_component(deg: i64, k: KElement) -> Self {
        let mut g = Self::zero();
        g.add_component(deg, &k);
        g
    }

    pub fn add_component(&mut self, deg: i64, k: &KElement) {
        self.add_component_scaled(deg, k, 1);
    }

    fn add_component_scaled(&mut self, deg: i64, k: &KElement, s: i64) {
        if k.is_zero() || s == 0 {
            return;
        }
        let c = self.comps.entry(deg).or_default();
        c.add_scaled(k, s);
        if c.is_zero() {
            self.comps.remove(&deg);
        }
    }

    pub fn add_term(&mut self, deg: i64, w: Weight, m: i64) {
        self.add_component(deg, &KElement::from_terms([(w, m)]));
    }

    pub fn component(&self, deg: i64) -> Option<&KElement> {
        self.comps.get(&deg)
    }

    pub fn components(&self) -> impl DoubleEndedIterator<Item = (i64, &KElement)> + '_ {
        self.comps.iter().map(|(&d, k)| (d, k))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.comps.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.comps.keys().next_back().copied()
    }

    pub fn add(&mut self, other: &GradedChar) {
        for (d, k) in other.components() {
            self.add_component(d, k);
        }
    }

    pub fn sub(&mut self, other: &GradedChar) {
        for (d, k) in other.components() {
            self.add_component_scaled(d, k, -1);
        }
    }

    /// Adds `p · other` for a Laurent polynomial `p`.
    pub fn add_laurent_multiple(&mut self, p: &LaurentInt, other: &GradedChar) {
        for (shift, c) in p.terms() {
            for (d, k) in other.components() {
                self.add_component_scaled(d + shift, k, c);
            }
        }
    }

    pub fn laurent_multiple(&self, p: &LaurentInt) -> GradedChar {
        let mut out = GradedChar::zero();
        out.add_laurent_multiple(p, self);
        out
    }

    /// `T_ℓ`: the component at degree `i` moves to `i + ℓ`.
    pub fn shift(&self, l: i64) -> GradedChar {
        GradedChar { comps: self.comps.iter().map(|(&d, k)| (d + l, k.clone())).collect() }
    }

    pub fn mul(&self, other: &GradedChar, dg: &DoubleGroup) -> Result<GradedChar> {
        let mut out = GradedChar::zero();
        for (d1, a) in self.components() {
            for (d2, b) in other.components() {
                out.add_component(d1 + d2, &a.mul(b, dg)?);
            }
        }
        Ok(out)
    }

    /// Dualizes weights and flips degrees: `N*(j) = N(-j)*`.
    pub fn dual(&self, dg: &DoubleGroup) -> GradedChar {
        GradedChar { comps: self.comps.iter().map(|(&d, k)| (-d, k.dual(dg))).collect() }
    }

    /// Sum of all components (`t = 1`).
    pub fn eval_ungraded(&self) -> KElement {
        let mut out = KElement::zero();
        for k in self.comps.values() {
            out.add(k);
        }
        out
    }

    /// Graded dimension as a Laurent polynomial.
    pub fn dimension_poly(&self, dg: &DoubleGroup) -> LaurentInt {
        LaurentInt::from_terms(self.components().map(|(d, k)| (d, k.dimension(dg))))
    }

    pub fn dimension(&self, dg: &DoubleGroup) -> i64 {
        self.eval_ungraded().dimension(dg)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.comps.values().all(KElement::is_nonnegative)
    }

    /// `p_{N,λ}`: the Laurent coefficient of a single weight.
    pub fn weight_poly(&self, w: Weight) -> LaurentInt {
        LaurentInt::from_terms(self.components().map(|(d, k)| (d, k.get(w))))
    }

    /// Weight-major view `λ ↦ p_{N,λ}`.
    pub fn weight_major(&self) -> BTreeMap<Weight, LaurentInt> {
        let mut out: BTreeMap<Weight, LaurentInt> = BTreeMap::new();
        for (d, k) in self.components() {
            for (w, m) in k.terms() {
                out.entry(w).or_default().add_term(d, m);
            }
        }
        out
    }

    pub fn from_weight_major(map: &BTreeMap<Weight, LaurentInt>) -> GradedChar {
        let mut out = GradedChar::zero();
        for (&w, p) in map {
            for (d, m) in p.terms() {
                out.add_term(d, w, m);
            }
        }
        out
    }
}

impl fmt::Display for GradedChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.components().rev().map(|(d, k)| format!("[{}]·t^{}", k, d)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn gc_mul(a: &GradedChar, b: &GradedChar, dg: &DoubleGroup) -> Result<GradedChar> {
    a.mul(b, dg)
}

pub fn gc_shift(a: &GradedChar, l: i64) -> GradedChar {
    a.shift(l)
}

pub fn gc_dual(a: &GradedChar, dg: &DoubleGroup) -> GradedChar {
    a.dual(dg)
}

pub fn gc_eval_ungraded(a: &GradedChar) -> KElement {
    a.eval_ungraded()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn s3() -> &'static DoubleGroup {
        static DG: OnceLock<DoubleGroup> = OnceLock::new();
        DG.get_or_init(|| DoubleGroup::new(symmetric_group(3)).unwrap())
    }

    fn arb_char() -> impl Strategy<Value = GradedChar> {
        let ws = s3().weights().to_vec();
        proptest::collection::vec((-3i64..3, prop::sample::select(ws), -2i64..3), 0..4).prop_map(|terms| {
            let mut g = GradedChar::zero();
            for (d, w, m) in terms {
                g.add_term(d, w, m);
            }
            g
        })
    }

    #[test]
    fn unit_and_abelian_product() {
        let dg = DoubleGroup::new(cyclic_group(3)).unwrap();
        let x = GradedChar::single(Weight::new(1, 2), -1);
        assert_eq!(GradedChar::single(Weight::EPSILON, 0).mul(&x, &dg).unwrap(), x);
        let a = GradedChar::single(Weight::new(1, 1), -1);
        let b = GradedChar::single(Weight::new(2, 2), -1);
        assert_eq!(a.mul(&b, &dg).unwrap(), GradedChar::single(Weight::new(0, 0), -2));
    }

    #[test]
    fn dual_examples() {
        let dg = DoubleGroup::new(cyclic_group(3)).unwrap();
        let e = GradedChar::single(Weight::EPSILON, 0);
        assert_eq!(e.dual(&dg), e);
        let x = GradedChar::single(Weight::new(1, 1), -1);
        assert_eq!(x.dual(&dg), GradedChar::single(Weight::new(2, 2), 1));
    }

    #[test]
    fn no_empty_components() {
        let mut g = GradedChar::single(Weight::EPSILON, 2);
        g.add_term(2, Weight::EPSILON, -1);
        assert!(g.is_zero());
        assert_eq!(g, GradedChar::zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_laws(a in arb_char(), b in arb_char(), c in arb_char()) {
            let dg = s3();
            let ab = a.mul(&b, dg).unwrap();
            prop_assert_eq!(&ab, &b.mul(&a, dg).unwrap());
            prop_assert_eq!(ab.mul(&c, dg).unwrap(), a.mul(&b.mul(&c, dg).unwrap(), dg).unwrap());
            prop_assert_eq!(ab.dimension(dg), a.dimension(dg) * b.dimension(dg));
            prop_assert_eq!(ab.dual(dg), a.dual(dg).mul(&b.dual(dg), dg).unwrap());
        }

        #[test]
        fn shift_and_dual(a in arb_char(), l in -4i64..4, m in -4i64..4) {
            let dg = s3();
            prop_assert_eq!(a.shift(0), a.clone());
            prop_assert_eq!(a.shift(l).shift(m), a.shift(l + m));
            prop_assert_eq!(a.shift(l).dual(dg), a.dual(dg).shift(-l));
            prop_assert_eq!(a.dual(dg).dual(dg), a.clone());
        }

        #[test]
        fn views_agree(a in arb_char(), b in arb_char()) {
            prop_assert_eq!(GradedChar::from_weight_major(&a.weight_major()), a.clone());
            let mut s = a.clone();
            s.add(&b);
            let mut ev = a.eval_ungraded();
            ev.add(&b.eval_ungraded());
            prop_assert_eq!(s.eval_ungraded(), ev);
        }
    }
}
