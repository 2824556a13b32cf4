//! Weights of the Drinfeld double `D(G)` and the fusion ring they span.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::arith::{Cyclotomic, RootSum};
use crate::error::{Error, Result};
use crate::group::{
    centralizer_of_index, character_table, conjugacy_classes, ConjugacyData, FiniteGroup, OrdinaryCharTable,
};

/// A simple `D(G)`-module: a conjugacy class of `G` together with an
/// irreducible character of the centralizer of its representative.
///
/// Ordered by class, then irrep, which is the canonical weight order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub class_id: usize,
    pub irrep_id: usize,
}

impl Weight {
    pub const EPSILON: Weight = Weight { class_id: 0, irrep_id: 0 };

    pub fn new(class_id: usize, irrep_id: usize) -> Self {
        Weight { class_id, irrep_id }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}r{}", self.class_id, self.irrep_id)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownWeight(s.to_string());
        let rest = s.strip_prefix('g').ok_or_else(bad)?;
        let (c, r) = rest.split_once('r').ok_or_else(bad)?;
        let class_id = c.parse().map_err(|_| bad())?;
        let irrep_id = r.parse().map_err(|_| bad())?;
        Ok(Weight { class_id, irrep_id })
    }
}

/// Fusion multiplicities `ν ↦ N_{λμ}^ν`.
pub type FusionRow = BTreeMap<Weight, i64>;

struct ClassData {
    centralizer: FiniteGroup,
    table: OrdinaryCharTable,
    /// `G`-element index → class of the centralizer, for elements of the centralizer.
    local_class: Vec<Option<usize>>,
}

/// `G` together with everything needed to evaluate characters of `D(G)`.
pub struct DoubleGroup {
    group: FiniteGroup,
    classes: ConjugacyData,
    class_data: Vec<ClassData>,
    weights: Vec<Weight>,
    /// `conjugator[g]` is the least `x` with `x · rep · x⁻¹ = g`.
    conjugator: Vec<usize>,
    duals: Vec<Weight>,
    fusion_cache: Mutex<HashMap<(Weight, Weight), FusionRow>>,
}

impl fmt::Debug for DoubleGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DoubleGroup").field("order", &self.group.order()).field("weights", &self.weights.len()).finish()
    }
}

impl DoubleGroup {
    pub fn new(group: FiniteGroup) -> Result<Self> {
        let tables = Self::centralizer_tables(&group)?;
        Self::with_tables(group, tables)
    }

    /// Character tables of the centralizers of all class representatives, in class order.
    pub fn centralizer_tables(group: &FiniteGroup) -> Result<Vec<OrdinaryCharTable>> {
        let classes = conjugacy_classes(group);
        classes.classes.iter().map(|c| character_table(&centralizer_of_index(group, c.representative))).collect()
    }

    /// Builds the double from precomputed centralizer tables (for example from a cache).
    pub fn with_tables(group: FiniteGroup, tables: Vec<OrdinaryCharTable>) -> Result<Self> {
        let classes = conjugacy_classes(&group);
        if tables.len() != classes.len() {
            return Err(Error::Inconsistent(format!(
                "{} centralizer tables supplied for {} classes",
                tables.len(),
                classes.len()
            )));
        }
        let mut class_data = Vec::with_capacity(classes.len());
        for (c, table) in classes.classes.iter().zip(tables) {
            let centralizer = table.group().clone();
            let rep = group.element(c.representative);
            let expected = (0..group.order()).filter(|&h| group.commute(h, c.representative)).count();
            if centralizer.order() != expected
                || centralizer.elements().iter().any(|p| group.index_of(p).is_none())
                || centralizer.index_of(rep).is_none()
            {
                return Err(Error::Inconsistent("centralizer table does not match the group".into()));
            }
            let tcls = table.classes();
            let mut local_class = vec![None; group.order()];
            for (i, p) in centralizer.elements().iter().enumerate() {
                local_class[group.index_of(p).unwrap()] = Some(tcls.class_of(i));
            }
            class_data.push(ClassData { centralizer, table, local_class });
        }

        let mut conjugator = vec![usize::MAX; group.order()];
        for c in &classes.classes {
            for x in 0..group.order() {
                let g = group.conjugate(x, c.representative);
                if conjugator[g] == usize::MAX {
                    conjugator[g] = x;
                }
            }
        }

        let weights = class_data
            .iter()
            .enumerate()
            .flat_map(|(c, d)| (0..d.table.num_irreps()).map(move |r| Weight::new(c, r)))
            .collect();

        let mut dg = DoubleGroup {
            group,
            classes,
            class_data,
            weights,
            conjugator,
            duals: Vec::new(),
            fusion_cache: Mutex::new(HashMap::new()),
        };
        dg.duals = dg.compute_duals()?;
        Ok(dg)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn exponent(&self) -> u32 {
        self.group.exponent()
    }

    /// Λ in canonical order; ε comes first.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn epsilon(&self) -> Weight {
        Weight::EPSILON
    }

    pub fn centralizer_table(&self, class_id: usize) -> &OrdinaryCharTable {
        &self.class_data[class_id].table
    }

    pub fn centralizer(&self, class_id: usize) -> &FiniteGroup {
        &self.class_data[class_id].centralizer
    }

    pub fn contains(&self, w: Weight) -> bool {
        w.class_id < self.class_data.len() && w.irrep_id < self.class_data[w.class_id].table.num_irreps()
    }

    pub fn check_weight(&self, w: Weight) -> Result<Weight> {
        if self.contains(w) {
            Ok(w)
        } else {
            Err(Error::UnknownWeight(w.label()))
        }
    }

    pub fn parse_weight(&self, label: &str) -> Result<Weight> {
        self.check_weight(label.parse()?)
    }

    /// `#O_a · dim ϱ`.
    pub fn dimension(&self, w: Weight) -> u64 {
        self.classes.classes[w.class_id].size() as u64 * self.class_data[w.class_id].table.degrees()[w.irrep_id]
    }

    /// The canonical element conjugating the class representative onto `g`.
    pub fn conjugator(&self, g: usize) -> usize {
        self.conjugator[g]
    }

    /// Character of the weight on the commuting pair `(g, h)`, as a formal root sum
    /// of order `exponent(G)`.
    pub fn pair_character_sum(&self, w: Weight, g: usize, h: usize) -> RootSum {
        let e = self.exponent();
        if self.classes.class_of(g) != w.class_id || !self.group.commute(g, h) {
            return RootSum::zero(e);
        }
        let x = self.conjugator[g];
        let y = self.group.mul(self.group.mul(self.group.inv(x), h), x);
        let data = &self.class_data[w.class_id];
        let local = data.local_class[y].expect("conjugated element lies in the centralizer");
        data.table.root_sum(w.irrep_id, local).embed(e)
    }

    pub fn pair_character(&self, w: Weight, g: usize, h: usize) -> Cyclotomic {
        self.pair_character_sum(w, g, h).reduce()
    }

    /// `N_{λμ}^ν` for all `ν`, memoized.
    pub fn fusion(&self, a: Weight, b: Weight) -> Result<FusionRow> {
        if let Some(row) = self.fusion_cache.lock().unwrap().get(&(a, b)) {
            return Ok(row.clone());
        }
        self.check_weight(a)?;
        self.check_weight(b)?;
        let mut row = FusionRow::new();
        for c in 0..self.classes.len() {
            for (r, m) in self.fusion_at_class(a, b, c)? {
                row.insert(Weight::new(c, r), m);
            }
        }
        self.fusion_cache.lock().unwrap().insert((a, b), row.clone());
        Ok(row)
    }

    /// Multiplicities of the weights `(c, ·)` in `a ⊗ b`.
    ///
    /// The tensor character on `(g, h)` is `Σ_{g₁g₂ = g} χ_a(g₁,h) χ_b(g₂,h)`;
    /// restricted to `g` the class representative it is a class function on
    /// the centralizer, decomposed there by the usual inner product.
    fn fusion_at_class(&self, a: Weight, b: Weight, c: usize) -> Result<Vec<(usize, i64)>> {
        let g = &self.group;
        let e = self.exponent();
        let rep = self.classes.classes[c].representative;
        let data = &self.class_data[c];
        let cent = &data.centralizer;
        let ccls = data.table.classes();

        let splits: Vec<(usize, usize)> = self.classes.classes[a.class_id]
            .members
            .iter()
            .map(|&g1| (g1, g.mul(g.inv(g1), rep)))
            .filter(|&(_, g2)| self.classes.class_of(g2) == b.class_id)
            .collect();
        if splits.is_empty() {
            return Ok(Vec::new());
        }

        // tensor character at the representatives of the centralizer's classes
        let mut tensor = Vec::with_capacity(ccls.len());
        for cl in &ccls.classes {
            let h = g.index_of(cent.element(cl.representative)).unwrap();
            let mut acc = RootSum::zero(e);
            for &(g1, g2) in &splits {
                if g.commute(g1, h) {
                    acc.add_product(&self.pair_character_sum(a, g1, h), &self.pair_character_sum(b, g2, h));
                }
            }
            tensor.push(acc);
        }

        let order = cent.order() as i64;
        let mut out = Vec::new();
        for r in 0..data.table.num_irreps() {
            let mut acc = RootSum::zero(e);
            for (k, cl) in ccls.classes.iter().enumerate() {
                let chi = data.table.root_sum(r, k).embed(e).conj();
                acc.add_product(&tensor[k].scale(cl.size() as i64), &chi);
            }
            let coords = acc.reduce_int();
            if coords.iter().skip(1).any(|&x| x != 0) {
                return Err(Error::Fusion(format!(
                    "irrational inner product for {} ⊗ {} at {}",
                    a,
                    b,
                    Weight::new(c, r)
                )));
            }
            let total = coords.first().copied().unwrap_or(0);
            if total % order != 0 || total < 0 {
                return Err(Error::Fusion(format!(
                    "multiplicity {}/{} of {} in {} ⊗ {} is not a nonnegative integer",
                    total,
                    order,
                    Weight::new(c, r),
                    a,
                    b
                )));
            }
            if total != 0 {
                out.push((r, total / order));
            }
        }
        Ok(out)
    }

    fn compute_duals(&self) -> Result<Vec<Weight>> {
        let mut duals = Vec::with_capacity(self.weights.len());
        for &w in &self.weights {
            let inv_class = self.classes.inverse_class[w.class_id];
            let irreps = self.class_data[inv_class].table.num_irreps();
            let mut found = Vec::new();
            for r in 0..irreps {
                let cand = Weight::new(inv_class, r);
                let eps: i64 = self.fusion_at_class(w, cand, 0)?.iter().filter(|(r, _)| *r == 0).map(|(_, m)| *m).sum();
                if eps == 1 {
                    found.push(cand);
                }
            }
            if found.len() != 1 {
                return Err(Error::Inconsistent(format!("{} has {} dual candidates", w, found.len())));
            }
            duals.push(found[0]);
        }
        Ok(duals)
    }

    pub fn dual_weight(&self, w: Weight) -> Weight {
        self.duals[self.index(w)]
    }

    /// Position of `w` in [`DoubleGroup::weights`].
    pub fn index(&self, w: Weight) -> usize {
        self.weights.binary_search(&w).expect("weight belongs to this double")
    }
}
