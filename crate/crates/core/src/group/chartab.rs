//! Dixon–Schneider: common eigenvectors of the class matrices over a prime
//! field, lifted to exact cyclotomic values.

use std::cmp::Ordering;

use super::{conjugacy_classes, ConjugacyData, FiniteGroup};
use crate::arith::{Cyclotomic, RootSum};
use crate::error::{Error, Result};

/// Irreducible characters of a finite group, one row per character and one
/// column per conjugacy class.
#[derive(Clone, Debug)]
pub struct OrdinaryCharTable {
    group: FiniteGroup,
    classes: ConjugacyData,
    rows: Vec<Vec<RootSum>>,
    values: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
}

impl OrdinaryCharTable {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn num_irreps(&self) -> usize {
        self.rows.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Values in the cyclotomic field of order `exponent(G)`.
    pub fn value(&self, irrep: usize, class: usize) -> &Cyclotomic {
        &self.values[irrep][class]
    }

    /// The same value as a formal sum of eigenvalues.
    pub fn root_sum(&self, irrep: usize, class: usize) -> &RootSum {
        &self.rows[irrep][class]
    }

    pub fn row(&self, irrep: usize) -> &[Cyclotomic] {
        &self.values[irrep]
    }
}

pub fn character_table(group: &FiniteGroup) -> Result<OrdinaryCharTable> {
    let classes = conjugacy_classes(group);
    let order = group.order() as u64;
    let e = group.exponent();
    let p = choose_prime(order, e as u64);
    let z = root_of_unity_mod(p, e as u64);
    let k = classes.len();

    let omegas = common_eigenvectors(group, &classes, p)?;
    if omegas.len() != k {
        return Err(Error::CharacterTable(format!("found {} characters for {} classes", omegas.len(), k)));
    }

    let sizes: Vec<u64> = classes.classes.iter().map(|c| c.size() as u64).collect();
    let powers = power_classes(group, &classes);
    let mut rows = Vec::with_capacity(k);
    for omega in &omegas {
        let mut s = 0u64;
        for j in 0..k {
            let jj = classes.inverse_class[j];
            s = add_mod(s, mul_mod(mul_mod(omega[j], omega[jj], p), inv_mod(sizes[j] % p, p), p), p);
        }
        let d2 = mul_mod(order % p, inv_mod(s, p), p);
        let d = (1..=isqrt(order))
            .find(|&d| (d * d) % p == d2)
            .ok_or_else(|| Error::CharacterTable("no admissible degree for an eigenvector".into()))?;
        let chi: Vec<u64> = (0..k).map(|j| mul_mod(mul_mod(d % p, omega[j], p), inv_mod(sizes[j] % p, p), p)).collect();
        let mut row = Vec::with_capacity(k);
        for c in 0..k {
            row.push(lift_value(&chi, &powers[c], d, e as u64, z, p)?);
        }
        rows.push((d, row));
    }

    let mut entries: Vec<(u64, Vec<RootSum>, Vec<Cyclotomic>)> = rows
        .into_iter()
        .map(|(d, row)| {
            let vals = row.iter().map(RootSum::reduce).collect();
            (d, row, vals)
        })
        .collect();
    entries.sort_by(|a, b| compare_rows((a.0, &a.2), (b.0, &b.2)));

    let table = OrdinaryCharTable {
        group: group.clone(),
        classes,
        degrees: entries.iter().map(|x| x.0).collect(),
        rows: entries.iter().map(|x| x.1.clone()).collect(),
        values: entries.into_iter().map(|x| x.2).collect(),
    };
    verify_table(&table)?;
    Ok(table)
}

/// Rebuilds a table from stored eigenvalue multiplicities, re-verifying it.
pub fn table_from_root_sums(group: &FiniteGroup, rows: Vec<Vec<RootSum>>) -> Result<OrdinaryCharTable> {
    let classes = conjugacy_classes(group);
    let e = group.exponent();
    if rows.len() != classes.len() || rows.iter().any(|r| r.len() != classes.len() || r.iter().any(|v| v.order() != e))
    {
        return Err(Error::CharacterTable("stored table has the wrong shape".into()));
    }
    let mut degrees = Vec::with_capacity(rows.len());
    for r in &rows {
        let d = r[0].multiplicities().iter().sum::<i64>();
        if d <= 0 || r[0].multiplicities()[0] != d {
            return Err(Error::CharacterTable("stored table has an invalid degree".into()));
        }
        degrees.push(d as u64);
    }
    let values = rows.iter().map(|r| r.iter().map(RootSum::reduce).collect()).collect();
    let table = OrdinaryCharTable { group: group.clone(), classes, rows, values, degrees };
    verify_table(&table)?;
    Ok(table)
}

/// Degree ascending, the trivial character first, then the rows' power-basis
/// coefficient vectors in descending lexicographic order.
fn compare_rows(a: (u64, &[Cyclotomic]), b: (u64, &[Cyclotomic])) -> Ordering {
    let trivial = |r: &[Cyclotomic]| r.iter().all(|v| v.as_integer() == Some(1));
    a.0.cmp(&b.0).then_with(|| trivial(b.1).cmp(&trivial(a.1))).then_with(|| {
        for (x, y) in a.1.iter().zip(b.1) {
            match y.cmp_coeffs(x) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

fn verify_table(t: &OrdinaryCharTable) -> Result<()> {
    let order = t.group.order() as i64;
    let e = t.group.exponent();
    let k = t.classes.len();
    let sum_sq: u64 = t.degrees.iter().map(|d| d * d).sum();
    if sum_sq != order as u64 {
        return Err(Error::CharacterTable(format!("sum of squared degrees {} differs from |G| = {}", sum_sq, order)));
    }
    for (i, d) in t.degrees.iter().enumerate() {
        if !(order as u64).is_multiple_of(*d) {
            return Err(Error::CharacterTable(format!("degree {} of character {} does not divide |G|", d, i)));
        }
    }
    let conj: Vec<Vec<RootSum>> = t.rows.iter().map(|r| r.iter().map(RootSum::conj).collect()).collect();
    for a in 0..k {
        for b in a..k {
            let mut acc = RootSum::zero(e);
            for c in 0..k {
                let size = t.classes.classes[c].size() as i64;
                acc.add_product(&t.rows[a][c].scale(size), &conj[b][c]);
            }
            let expected = if a == b { order } else { 0 };
            if !acc.value_eq(&RootSum::from_int(e, expected)) {
                return Err(Error::CharacterTable(format!("rows {} and {} fail orthogonality", a, b)));
            }
        }
    }
    Ok(())
}

/// For each class, the classes of `g^l` for `l = 0..ord(g)`.
fn power_classes(g: &FiniteGroup, cd: &ConjugacyData) -> Vec<Vec<usize>> {
    cd.classes
        .iter()
        .map(|c| {
            let x = c.representative;
            let mut out = vec![cd.class_of(g.identity())];
            let mut cur = x;
            while cur != g.identity() {
                out.push(cd.class_of(cur));
                cur = g.mul(cur, x);
            }
            out
        })
        .collect()
}

/// Recovers eigenvalue multiplicities of `ρ(g)` from the values on the powers of `g`.
fn lift_value(chi: &[u64], powers: &[usize], d: u64, e: u64, z: u64, p: u64) -> Result<RootSum> {
    let o = powers.len() as u64;
    let step = e / o;
    let inv_o = inv_mod(o % p, p);
    let zeta_inv = inv_mod(pow_mod(z, step, p), p);
    let mut out = RootSum::zero(e as u32);
    let mut total = 0u64;
    for s in 0..o {
        let base = pow_mod(zeta_inv, s, p);
        let mut acc = 0u64;
        let mut w = 1u64;
        for &c in powers {
            acc = add_mod(acc, mul_mod(chi[c], w, p), p);
            w = mul_mod(w, base, p);
        }
        let m = mul_mod(acc, inv_o, p);
        if m > d {
            return Err(Error::CharacterTable(format!("eigenvalue multiplicity {} exceeds degree {}", m, d)));
        }
        total += m;
        out.add_root((s * step) as i64, m as i64);
    }
    if total != d {
        return Err(Error::CharacterTable("eigenvalue multiplicities do not sum to the degree".into()));
    }
    Ok(out)
}

/// Splits `F_p^k` into common eigenspaces of all class matrices and returns
/// one normalized vector (first entry 1) per irreducible character.
fn common_eigenvectors(g: &FiniteGroup, cd: &ConjugacyData, p: u64) -> Result<Vec<Vec<u64>>> {
    let k = cd.len();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity_rows(k)];
    for j in 0..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = class_matrix(g, cd, j, p);
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(&a, &space, p)?);
        }
        spaces = next;
    }
    let mut out = Vec::with_capacity(k);
    for s in spaces {
        if s.len() != 1 {
            return Err(Error::CharacterTable("class matrices do not separate the characters".into()));
        }
        let v = s.into_iter().next().unwrap();
        if v[0] != 1 {
            return Err(Error::CharacterTable("eigenvector vanishes on the identity class".into()));
        }
        out.push(v);
    }
    Ok(out)
}

/// `a[i][k] = #{x ∈ C_j : x⁻¹ z_k ∈ C_i}` reduced mod `p`.
fn class_matrix(g: &FiniteGroup, cd: &ConjugacyData, j: usize, p: u64) -> Vec<Vec<u64>> {
    let k = cd.len();
    let mut a = vec![vec![0u64; k]; k];
    for (col, c) in cd.classes.iter().enumerate() {
        let z = c.representative;
        for &x in &cd.classes[j].members {
            let i = cd.class_of(g.mul(g.inv(x), z));
            a[i][col] += 1;
        }
    }
    for row in a.iter_mut() {
        for v in row.iter_mut() {
            *v %= p;
        }
    }
    a
}

/// Decomposes the span of `basis` (rows in reduced echelon form, invariant
/// under `a`) into eigenspaces of `a`.
fn split_space(a: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let m = basis.len();
    let pivots: Vec<usize> = basis.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    // restriction of a: r[b][c] is the b-th coordinate of a·w_c
    let mut r = vec![vec![0u64; m]; m];
    for (c, w) in basis.iter().enumerate() {
        let aw = mat_vec(a, w, p);
        for (b, &pv) in pivots.iter().enumerate() {
            r[b][c] = aw[pv];
        }
    }
    let poly = char_poly(&r, p);
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        if eval_poly(&poly, lambda, p) != 0 {
            continue;
        }
        let mut shifted = r.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = sub_mod(row[i], lambda, p);
        }
        let kernel = nullspace(&shifted, p);
        let vecs: Vec<Vec<u64>> = kernel
            .iter()
            .map(|c| {
                let mut v = vec![0u64; a.len()];
                for (coef, w) in c.iter().zip(basis) {
                    for (x, &y) in v.iter_mut().zip(w) {
                        *x = add_mod(*x, mul_mod(*coef, y, p), p);
                    }
                }
                v
            })
            .collect();
        let (ech, _) = rref(vecs, p);
        found += ech.len();
        out.push(ech);
        if found == m {
            break;
        }
    }
    if found != m {
        return Err(Error::CharacterTable("class matrix is not diagonalizable modulo the chosen prime".into()));
    }
    Ok(out)
}

fn identity_rows(k: usize) -> Vec<Vec<u64>> {
    (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect()
}

fn mat_vec(a: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    a.iter().map(|row| row.iter().zip(v).fold(0, |acc, (&x, &y)| add_mod(acc, mul_mod(x, y, p), p))).collect()
}

/// Reduced row echelon form; zero rows dropped. Returns the rows and pivot columns.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = sub_mod(*x, mul_mod(f, y, p), p);
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

/// Basis of `{c : m·c = 0}`.
fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.first().map_or(0, Vec::len);
    let (ech, pivots) = rref(m.to_vec(), p);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in ech.iter().zip(&pivots) {
            v[pc] = sub_mod(0, row[free], p);
        }
        out.push(v);
    }
    out
}

/// Characteristic polynomial (low degree first) via Hessenberg reduction.
fn char_poly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&i| h[i][c] != 0) else { continue };
        if piv != c + 1 {
            h.swap(piv, c + 1);
            for row in h.iter_mut() {
                row.swap(piv, c + 1);
            }
        }
        let inv = inv_mod(h[c + 1][c], p);
        for j in c + 2..n {
            let u = mul_mod(h[j][c], inv, p);
            if u == 0 {
                continue;
            }
            for col in 0..n {
                let t = mul_mod(u, h[c + 1][col], p);
                h[j][col] = sub_mod(h[j][col], t, p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[j], p);
                row[c + 1] = add_mod(row[c + 1], t, p);
            }
        }
    }
    // polys[m] is the characteristic polynomial of the leading m×m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = add_mod(next[i + 1], c, p);
            next[i] = sub_mod(next[i], mul_mod(h[m][m], c, p), p);
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            let coef = mul_mod(h[i][m], prod, p);
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√|G|`.
fn choose_prime(order: u64, e: u64) -> u64 {
    let mut p = e + 1;
    while !(is_prime(p) && p * p > 4 * order) {
        p += e;
    }
    p
}

fn root_of_unity_mod(p: u64, e: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let g = (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1);
    pow_mod(g, (p - 1) / e, p)
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}
