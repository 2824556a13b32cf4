//! Rank one: the quantum line over `C_n`. Builds the profile and simple
//! characters from the lowering coefficients and double-checks them against
//! explicit matrices for the Verma modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::arith::{Cyclotomic, LaurentInt};
use crate::bgg::{bgg_matrices, decompose_into_simples, verify_report, BggReport, SimpleData};
use crate::error::{Error, Result};
use crate::fusion::{DoubleGroup, Weight};
use crate::graded::{GradedChar, KElement};
use crate::group::cyclic_group;
use crate::profile::{verify_duality_identities, Check, NicholsProfile, SimpleTable};

/// `n` and `q = ζ_n`.
#[derive(Clone, Debug)]
pub struct TaftParams {
    n: u32,
    q: Cyclotomic,
}

impl TaftParams {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::validation("taft-order", format!("n = {} but the quantum line needs n ≥ 2", n)));
        }
        Ok(TaftParams { n, q: Cyclotomic::root_of_unity(n, 1) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> &Cyclotomic {
        &self.q
    }

    fn q_pow(&self, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.n, k)
    }

    fn residue(&self, k: i64) -> u32 {
        k.rem_euclid(self.n as i64) as u32
    }
}

/// `c_k = [k]_q (1 - q^{r+s+k-1})` for `k = 1..n-1`.
pub fn lowering_coeffs(params: &TaftParams, r: u32, s: u32) -> Vec<Cyclotomic> {
    let n = params.n;
    (1..n as i64)
        .map(|k| {
            let mut qint = Cyclotomic::zero(n);
            for i in 0..k {
                qint = &qint + &params.q_pow(i);
            }
            let factor = &Cyclotomic::one(n) - &params.q_pow(r as i64 + s as i64 + k - 1);
            &qint * &factor
        })
        .collect()
}

/// `dim L(r,s)`: the first `k ≥ 1` with `c_k = 0`, or `n`.
pub fn simple_length(params: &TaftParams, r: u32, s: u32) -> u32 {
    lowering_coeffs(params, r, s).iter().position(Cyclotomic::is_zero).map_or(params.n, |i| i as u32 + 1)
}

/// The double of `C_n` with the rank-one profile and simple table.
#[derive(Clone, Debug)]
pub struct TaftSetup {
    pub params: TaftParams,
    pub double: Arc<DoubleGroup>,
    pub profile: NicholsProfile,
    pub table: SimpleTable,
    weight_of: Vec<Vec<Weight>>,
    rs_of: BTreeMap<Weight, (u32, u32)>,
}

impl TaftSetup {
    /// The weight `(χ₁^r, χ₂^s)`: class of `g^r`, character with `g ↦ ζ_n^s`.
    pub fn weight(&self, r: i64, s: i64) -> Weight {
        self.weight_of[self.params.residue(r) as usize][self.params.residue(s) as usize]
    }

    pub fn rs(&self, w: Weight) -> (u32, u32) {
        self.rs_of[&w]
    }

    /// `"(r,s)"` aliases for every weight.
    pub fn aliases(&self) -> BTreeMap<Weight, String> {
        self.rs_of.iter().map(|(&w, &(r, s))| (w, format!("({},{})", r, s))).collect()
    }

    pub fn simple_char(&self, r: u32, s: u32) -> GradedChar {
        simple_char_in(&self.params, r, s, |a, b| self.weight(a, b))
    }
}

fn simple_char_in(params: &TaftParams, r: u32, s: u32, weight: impl Fn(i64, i64) -> Weight) -> GradedChar {
    let d = simple_length(params, r, s) as i64;
    let mut g = GradedChar::zero();
    for k in 0..d {
        g.add_term(-k, weight(r as i64 + k, s as i64 + k), 1);
    }
    g
}

pub fn simple_char(setup: &TaftSetup, r: u32, s: u32) -> GradedChar {
    setup.simple_char(r, s)
}

pub fn build_profile_and_table(params: &TaftParams) -> Result<TaftSetup> {
    let n = params.n;
    let dg = Arc::new(DoubleGroup::new(cyclic_group(n as usize))?);
    let generator = 1usize;
    let mut weight_of = vec![vec![Weight::EPSILON; n as usize]; n as usize];
    let mut rs_of = BTreeMap::new();
    for r in 0..n {
        let class_id = dg.classes().class_of(r as usize);
        let table = dg.centralizer_table(class_id);
        let cent = dg.centralizer(class_id);
        let local = table.classes().class_of(cent.index_of(dg.group().element(generator)).unwrap());
        for s in 0..n {
            let target = params.q_pow(s as i64);
            let irrep_id = (0..table.num_irreps())
                .find(|&i| *table.value(i, local) == target)
                .ok_or_else(|| Error::Oracle(format!("no character of C_{} sends the generator to ζ^{}", n, s)))?;
            let w = Weight::new(class_id, irrep_id);
            weight_of[r as usize][s as usize] = w;
            rs_of.insert(w, (r, s));
        }
    }
    let weight = |a: i64, b: i64| weight_of[params.residue(a) as usize][params.residue(b) as usize];
    let components = (0..n as i64).map(|j| KElement::weight(weight(j, j))).collect();
    let profile = NicholsProfile::new(dg.clone(), components)?;
    let mut entries = BTreeMap::new();
    for r in 0..n {
        for s in 0..n {
            entries.insert(weight(r as i64, s as i64), simple_char_in(params, r, s, weight));
        }
    }
    let table = SimpleTable::new(&dg, entries)?;
    Ok(TaftSetup { params: params.clone(), double: dg, profile, table, weight_of, rs_of })
}

type Matrix = Vec<Vec<Cyclotomic>>;

/// Explicit action of the generators on the basis `m_0, …, m_{n-1}` of `M(r,s)`.
#[derive(Clone, Debug)]
pub struct RankOneVerma {
    pub r: u32,
    pub s: u32,
    pub coeffs: Vec<Cyclotomic>,
    /// Group-likes, diagonal with `q^{r+k}` and `q^{s+k}` on `m_k`.
    pub k1: Matrix,
    pub k2: Matrix,
    /// Raising: `m_k ↦ c_k m_{k-1}`.
    pub raise: Matrix,
    /// Lowering: `m_k ↦ m_{k+1}`.
    pub lower: Matrix,
}

/// What the matrix computation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// Indices `k ≥ 1` with `m_k` annihilated by the raising operator.
    pub singular: Vec<usize>,
    /// `d`: the maximal submodule is spanned by `m_k`, `k ≥ d`.
    pub head_length: usize,
    /// Composition factors `((r', s'), shift)` from the top down.
    pub composition: Vec<((u32, u32), i64)>,
}

pub fn explicit_matrices(params: &TaftParams, r: u32, s: u32) -> Result<(RankOneVerma, OracleReport)> {
    let n = params.n as usize;
    let e = params.n;
    let coeffs = lowering_coeffs(params, r, s);
    let zero = || vec![vec![Cyclotomic::zero(e); n]; n];
    let (mut k1, mut k2, mut raise, mut lower) = (zero(), zero(), zero(), zero());
    for k in 0..n {
        k1[k][k] = params.q_pow(r as i64 + k as i64);
        k2[k][k] = params.q_pow(s as i64 + k as i64);
        if k + 1 < n {
            lower[k + 1][k] = Cyclotomic::one(e);
        }
        if k >= 1 {
            raise[k - 1][k] = coeffs[k - 1].clone();
        }
    }
    let verma = RankOneVerma { r, s, coeffs, k1, k2, raise, lower };
    let fail = |what: &str| Err(Error::Oracle(format!("M({},{}) with n = {}: {}", r, s, n, what)));

    // weights are diagonal and pairwise distinct
    if !is_diagonal(&verma.k1) || !is_diagonal(&verma.k2) {
        return fail("group-likes are not diagonal");
    }
    for a in 0..n {
        for b in a + 1..n {
            if verma.k1[a][a] == verma.k1[b][b] && verma.k2[a][a] == verma.k2[b][b] {
                return fail("two basis vectors share a weight");
            }
        }
    }
    if !is_zero_matrix(&mat_pow(&verma.raise, n, e)) || !is_zero_matrix(&mat_pow(&verma.lower, n, e)) {
        return fail("ladder operators are not nilpotent of order n");
    }
    // the ladder operators shift the group-like eigenvalues by q^{∓1}
    let q = params.q_pow(1);
    let qinv = params.q_pow(-1);
    for (kk, name) in [(&verma.k1, "first"), (&verma.k2, "second")] {
        let kinv = diag_inverse(kk)?;
        if mat_mul(&mat_mul(kk, &verma.lower, e), &kinv, e) != scale(&verma.lower, &q)
            || mat_mul(&mat_mul(kk, &verma.raise, e), &kinv, e) != scale(&verma.raise, &qinv)
        {
            return fail(&format!("{} group-like does not rescale the ladder operators", name));
        }
    }
    let comm = mat_sub(&mat_mul(&verma.raise, &verma.lower, e), &mat_mul(&verma.lower, &verma.raise, e));
    if !is_diagonal(&comm) {
        return fail("[raise, lower] is not diagonal");
    }

    // singular vectors from the kernel of the raising operator
    let kernel = nullspace(&verma.raise, e);
    let krank = kernel.len();
    let mut singular = Vec::new();
    for k in 1..n {
        let mut aug = kernel.clone();
        aug.push(unit(n, k, e));
        if rank(aug) == krank {
            singular.push(k);
        }
    }
    let head_length = singular.first().copied().unwrap_or(n);

    // maximal submodule: generated by m_d, and every m_j with j < d generates everything
    let gens = [&verma.raise, &verma.lower];
    for j in 0..n {
        let sub = generated_submodule(&gens, unit(n, j, e), e);
        let everything = sub.len() == n;
        if (j < head_length) != everything {
            return fail(&format!("m_{} generates a submodule of dimension {}", j, sub.len()));
        }
        if j == head_length {
            let expected: Vec<Vec<Cyclotomic>> = (head_length..n).map(|k| unit(n, k, e)).collect();
            if sub.len() != n - head_length || rank([sub, expected].concat()) != n - head_length {
                return fail("the maximal submodule is not spanned by the vectors below the first singular one");
            }
        }
    }

    // composition factors: segments between successive singular vectors
    let mut starts = vec![0usize];
    starts.extend(&singular);
    let mut composition = Vec::new();
    for (i, &a) in starts.iter().enumerate() {
        let end = starts.get(i + 1).copied().unwrap_or(n);
        let w = (params.residue(r as i64 + a as i64), params.residue(s as i64 + a as i64));
        if simple_length(params, w.0, w.1) as usize != end - a {
            return fail(&format!(
                "factor {:?} has length {} but L{:?} has dimension {}",
                w,
                end - a,
                w,
                simple_length(params, w.0, w.1)
            ));
        }
        composition.push((w, -(a as i64)));
    }
    Ok((verma, OracleReport { singular, head_length, composition }))
}

fn unit(n: usize, k: usize, e: u32) -> Vec<Cyclotomic> {
    (0..n).map(|i| if i == k { Cyclotomic::one(e) } else { Cyclotomic::zero(e) }).collect()
}

fn is_diagonal(m: &Matrix) -> bool {
    m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().all(|row| row.iter().all(Cyclotomic::is_zero))
}

fn diag_inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let e = m[0][0].order();
    let mut out = vec![vec![Cyclotomic::zero(e); n]; n];
    for i in 0..n {
        out[i][i] = m[i][i].inverse().ok_or_else(|| Error::Oracle("singular group-like".into()))?;
    }
    Ok(out)
}

fn scale(m: &Matrix, c: &Cyclotomic) -> Matrix {
    m.iter().map(|row| row.iter().map(|x| x * c).collect()).collect()
}

fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix, e: u32) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![Cyclotomic::zero(e); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn mat_pow(a: &Matrix, k: usize, e: u32) -> Matrix {
    let n = a.len();
    let mut out: Matrix = (0..n).map(|i| unit(n, i, e)).collect();
    for _ in 0..k {
        out = mat_mul(&out, a, e);
    }
    out
}

fn mat_vec(a: &Matrix, v: &[Cyclotomic], e: u32) -> Vec<Cyclotomic> {
    a.iter()
        .map(|row| {
            let mut acc = Cyclotomic::zero(e);
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

/// Row echelon form of the given rows, zero rows dropped.
fn echelon(mut rows: Vec<Vec<Cyclotomic>>) -> (Vec<Vec<Cyclotomic>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero cyclotomic is invertible");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

fn rank(rows: Vec<Vec<Cyclotomic>>) -> usize {
    echelon(rows).0.len()
}

fn nullspace(m: &Matrix, e: u32) -> Vec<Vec<Cyclotomic>> {
    let n = m.first().map_or(0, Vec::len);
    let (ech, pivots) = echelon(m.clone());
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Cyclotomic::zero(e); n];
            v[free] = Cyclotomic::one(e);
            for (row, &pc) in ech.iter().zip(&pivots) {
                v[pc] = -&row[free];
            }
            v
        })
        .collect()
}

/// Span of everything reachable from `v` under the given operators.
fn generated_submodule(ops: &[&Matrix], v: Vec<Cyclotomic>, e: u32) -> Vec<Vec<Cyclotomic>> {
    let mut basis: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut queue = vec![v];
    while let Some(x) = queue.pop() {
        let mut trial = basis.clone();
        trial.push(x.clone());
        if rank(trial) == basis.len() {
            continue;
        }
        basis.push(x.clone());
        for op in ops {
            queue.push(mat_vec(op, &x, e));
        }
    }
    basis
}

/// Result of the full rank-one verification.
#[derive(Clone, Debug)]
pub struct TaftSummary {
    pub n: u32,
    pub weights: usize,
    pub simple_projective: usize,
    pub checks: Vec<Check>,
    pub report: BggReport,
}

impl TaftSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn headline(&self) -> String {
        if self.all_passed() {
            format!("all {} weights verified; {} simple projective Vermas", self.weights, self.simple_projective)
        } else {
            let failed = self.checks.iter().filter(|c| !c.passed).count();
            format!("{} of {} checks failed", failed, self.checks.len())
        }
    }
}

/// Profile and table generation, duality identities, matrix oracle versus
/// decomposition engine, reciprocity, and the rank-one projective structure.
pub fn verify_taft(n: u32) -> Result<(TaftSetup, TaftSummary)> {
    let params = TaftParams::new(n)?;
    let setup = build_profile_and_table(&params)?;
    let dg = setup.double.clone();
    let simples = SimpleData::Graded(setup.table.clone());
    let report = bgg_matrices(&setup.profile, &simples)?;
    let mut checks = Vec::new();

    for &w in dg.weights() {
        let (r, s) = setup.rs(w);
        for c in verify_duality_identities(&setup.profile, w)? {
            checks.push(Check::new(format!("({},{}): {}", r, s, c.name), c.passed));
        }
        let (_, oracle) = explicit_matrices(&params, r, s)?;
        let engine = decompose_into_simples(&setup.profile.verma_char(w)?, &setup.table)?;
        let expected: BTreeMap<Weight, LaurentInt> = oracle
            .composition
            .iter()
            .map(|&((a, b), shift)| (setup.weight(a as i64, b as i64), LaurentInt::t(shift)))
            .collect();
        checks.push(Check::new(
            format!("({},{}): matrix composition series matches the decomposition", r, s),
            engine == expected,
        ));
        checks.push(Check::new(
            format!("({},{}): dim M = n", r, s),
            setup.profile.verma_char(w)?.dimension(&dg) == n as i64,
        ));
    }
    checks.extend(verify_report(&setup.profile, &simples, &report)?);

    let mut classification = true;
    let mut structure = true;
    for &w in dg.weights() {
        let (r, s) = setup.rs(w);
        let predicted_simple = (r + s) % n == 1 % n;
        classification &= report.is_simple_projective(w) == predicted_simple;
        let l = simple_length(&params, r, s) as i64;
        let mut expected: BTreeMap<Weight, LaurentInt> = BTreeMap::from([(w, LaurentInt::one())]);
        if l < n as i64 {
            expected.insert(setup.weight(r as i64 + l, s as i64 + l), LaurentInt::t(n as i64 - l));
        }
        let actual: BTreeMap<Weight, LaurentInt> = dg
            .weights()
            .iter()
            .map(|&x| (x, report.projective_verma(w, x).clone()))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        structure &= actual == expected;
    }
    checks.push(Check::new("simple projective Vermas are exactly those with r + s = 1 mod n", classification));
    checks.push(Check::new("P(r,s) = M(r,s) + t^(n-l) M(r+l,s+l) for non-simple Vermas", structure));

    let simple_projective = report.simple_projective.iter().filter(|&&b| b).count();
    let summary = TaftSummary { n, weights: dg.weights().len(), simple_projective, checks, report };
    Ok((setup, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_zeros() {
        let p = TaftParams::new(3).unwrap();
        let c = lowering_coeffs(&p, 0, 2);
        assert!(!c[0].is_zero() && c[1].is_zero());
        assert_eq!(simple_length(&p, 0, 2), 2);
        assert_eq!(simple_length(&p, 2, 2), 3);
        for n in 2..7u32 {
            let p = TaftParams::new(n).unwrap();
            for k in 1..n {
                for r in 0..n {
                    let s = (1 + 2 * n - k - r) % n;
                    assert!(lowering_coeffs(&p, r, s)[k as usize - 1].is_zero());
                }
            }
            let total: u32 =
                (0..n).flat_map(|r| (0..n).map(move |s| (r, s))).map(|(r, s)| simple_length(&p, r, s)).sum();
            assert_eq!(total, n * n * (n + 1) / 2);
        }
        assert!(TaftParams::new(1).is_err());
    }

    #[test]
    fn simple_characters() {
        let setup = build_profile_and_table(&TaftParams::new(3).unwrap()).unwrap();
        let mut expected = GradedChar::single(setup.weight(0, 2), 0);
        expected.add_term(-1, setup.weight(1, 0), 1);
        assert_eq!(setup.simple_char(0, 2), expected);
        assert_eq!(setup.table.lowest_data()[&setup.weight(0, 2)], (setup.weight(1, 0), -1));
        // l = 1: L(r, -r) is one-dimensional
        for r in 0..3 {
            assert_eq!(setup.simple_char(r, (3 - r) % 3), GradedChar::single(setup.weight(r as i64, -(r as i64)), 0));
        }
        assert_eq!(setup.profile.lambda_v(), setup.weight(2, 2));
        let lv = setup.profile.lambda_v();
        let prod = KElement::weight(lv).mul(&KElement::weight(setup.double.dual_weight(lv)), &setup.double).unwrap();
        assert_eq!(prod, KElement::weight(Weight::EPSILON));
    }

    #[test]
    fn n2_profile() {
        let setup = build_profile_and_table(&TaftParams::new(2).unwrap()).unwrap();
        assert_eq!(setup.profile.components().len(), 2);
        assert_eq!(setup.profile.lambda_v(), setup.weight(1, 1));
    }

    #[test]
    fn matrix_oracle_examples() {
        let p = TaftParams::new(3).unwrap();
        let (_, rep) = explicit_matrices(&p, 0, 2).unwrap();
        assert_eq!(rep.singular, vec![2]);
        assert_eq!(rep.composition, vec![((0, 2), 0), ((2, 1), -2)]);
        let (_, rep) = explicit_matrices(&p, 2, 2).unwrap();
        assert!(rep.singular.is_empty());
        assert_eq!(rep.composition, vec![((2, 2), 0)]);
    }

    #[test]
    fn full_verification_small() {
        for n in 2..5 {
            let (_, summary) = verify_taft(n).unwrap();
            let failed: Vec<_> = summary.checks.iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "n = {}: {:?}", n, failed);
            assert_eq!(summary.simple_projective, n as usize);
        }
        let (_, s3) = verify_taft(3).unwrap();
        assert_eq!(s3.headline(), "all 9 weights verified; 3 simple projective Vermas");
    }
}
