use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::{lcm_u64, rat, Rational};

/// Precomputed reduction data for `Q[x]/Φ_e`.
#[derive(Debug)]
struct CycloData {
    /// Monic `Φ_e`, low degree first.
    phi: Vec<i64>,
    /// `x^i mod Φ_e` for `i in 0..order`.
    powers: Vec<Vec<i64>>,
}

impl CycloData {
    fn degree(&self) -> usize {
        self.phi.len() - 1
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<CycloData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cyclo_data(order: u32) -> Arc<CycloData> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(d) = cache().lock().unwrap().get(&order) {
        return d.clone();
    }
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![0i64; deg];
    if deg > 0 {
        cur[0] = 1;
    }
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by x and reduce the overflow coefficient with the monic Φ
        let top = cur[deg - 1];
        for i in (1..deg).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..deg {
                cur[i] -= top * phi[i];
            }
        }
    }
    let data = Arc::new(CycloData { phi, powers });
    cache().lock().unwrap().insert(order, data.clone());
    data
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// An element of `Q(ζ_e)` in the power basis `1, ζ_e, …, ζ_e^{φ(e)-1}`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        let deg = cyclo_data(order).degree();
        Cyclotomic { order, coeffs: vec![Rational::zero(); deg] }
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, rat(n))
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// `ζ_e^k`.
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        let mut r = RootSum::zero(e);
        r.add_root(k, 1);
        r.reduce()
    }

    /// Builds from power-basis coefficients; the length must be `φ(order)`.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), cyclo_data(order).degree(), "coefficient vector length must be φ(e)");
        Cyclotomic { order, coeffs }
    }

    fn from_int_coeffs(order: u32, coeffs: &[i64]) -> Self {
        Cyclotomic { order, coeffs: coeffs.iter().map(|&c| rat(c)).collect() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if this lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value if this is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let q = self.as_rational()?;
        if q.is_integer() {
            i64::try_from(q.to_integer()).ok()
        } else {
            None
        }
    }

    /// Re-expresses the same number in `Q(ζ_target)`; `order` must divide `target`.
    pub fn embed(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.order), "cannot embed order {} into {}", self.order, target);
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let data = cyclo_data(target);
        let mut out = vec![Rational::zero(); data.degree()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &data.powers[(i * step) % target as usize];
            for (o, &v) in out.iter_mut().zip(p) {
                if v != 0 {
                    *o += c * rat(v);
                }
            }
        }
        Cyclotomic { order: target, coeffs: out }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = lcm_u64(a.order as u64, b.order as u64) as u32;
        (a.embed(l), b.embed(l))
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let data = cyclo_data(self.order);
        let e = self.order as usize;
        let mut out = vec![Rational::zero(); data.degree()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &data.powers[(e - i % e) % e];
            for (o, &v) in out.iter_mut().zip(p) {
                if v != 0 {
                    *o += c * rat(v);
                }
            }
        }
        Cyclotomic { order: self.order, coeffs: out }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let data = cyclo_data(self.order);
        let deg = data.degree();
        let e = self.order as usize;
        let mut raw = vec![Rational::zero(); 2 * deg];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out = vec![Rational::zero(); deg];
        for (k, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < deg {
                out[k] += c;
            } else {
                for (o, &v) in out.iter_mut().zip(&data.powers[k % e]) {
                    if v != 0 {
                        *o += &c * rat(v);
                    }
                }
            }
        }
        Cyclotomic { order: self.order, coeffs: out }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let deg = self.coeffs.len();
        // Solve (multiplication-by-self matrix) · w = e_0 over Q.
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(deg);
        for j in 0..deg {
            let basis = Self::root_of_unity(self.order, j as i64);
            cols.push(self.mul_same(&basis).coeffs);
        }
        let mut m: Vec<Vec<Rational>> = (0..deg)
            .map(|i| {
                let mut row: Vec<Rational> = (0..deg).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for c in 0..deg {
            let piv = (c..deg).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, piv);
            let inv = m[c][c].recip();
            for x in m[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..deg {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=deg {
                        let sub = &f * &m[c][k];
                        m[r][k] -= sub;
                    }
                }
            }
        }
        Some(Cyclotomic { order: self.order, coeffs: m.into_iter().map(|r| r[deg].clone()).collect() })
    }

    /// Lexicographic comparison of coefficient vectors after embedding
    /// into a common field.
    pub fn cmp_coeffs(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = Self::common(self, other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            return self.mul_same(rhs);
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        a.mul_same(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", abs)?,
                _ if abs.is_one() => write!(f, "z{}^{}", self.order, i)?,
                _ => write!(f, "{}*z{}^{}", abs, self.order, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A formal integer combination `Σ m_k ζ_e^k` held in `Z[x]/(x^e - 1)`.
///
/// Character values are sums of roots of unity, so inner loops stay in
/// integer arithmetic here and only [`RootSum::reduce`] to a canonical
/// [`Cyclotomic`] when a value has to be compared or reported.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSum {
    order: u32,
    mult: Vec<i64>,
}

impl RootSum {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        RootSum { order, mult: vec![0; order as usize] }
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        let mut r = Self::zero(order);
        r.mult[0] = n;
        r
    }

    pub fn from_multiplicities(order: u32, mult: Vec<i64>) -> Self {
        assert_eq!(mult.len(), order as usize);
        RootSum { order, mult }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.mult
    }

    pub fn add_root(&mut self, k: i64, m: i64) {
        let e = self.order as i64;
        self.mult[k.rem_euclid(e) as usize] += m;
    }

    pub fn is_formally_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn conj(&self) -> Self {
        let e = self.order as usize;
        let mut mult = vec![0; e];
        for (k, &m) in self.mult.iter().enumerate() {
            mult[(e - k) % e] = m;
        }
        RootSum { order: self.order, mult }
    }

    /// Re-expresses in `Z[x]/(x^target - 1)`; `order` must divide `target`.
    pub fn embed(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.order));
        let step = (target / self.order) as usize;
        let mut mult = vec![0; target as usize];
        for (k, &m) in self.mult.iter().enumerate() {
            mult[k * step] = m;
        }
        RootSum { order: target, mult }
    }

    pub fn add_assign(&mut self, other: &RootSum) {
        assert_eq!(self.order, other.order);
        for (a, b) in self.mult.iter_mut().zip(&other.mult) {
            *a += b;
        }
    }

    /// `self += a * b`.
    pub fn add_product(&mut self, a: &RootSum, b: &RootSum) {
        assert!(self.order == a.order && a.order == b.order);
        let e = self.order as usize;
        for (i, &x) in a.mult.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.mult.iter().enumerate() {
                if y != 0 {
                    let k = if i + j >= e { i + j - e } else { i + j };
                    self.mult[k] += x * y;
                }
            }
        }
    }

    pub fn scale(&self, k: i64) -> RootSum {
        RootSum { order: self.order, mult: self.mult.iter().map(|&m| m * k).collect() }
    }

    pub fn mul(&self, other: &RootSum) -> RootSum {
        let mut out = RootSum::zero(self.order);
        out.add_product(self, other);
        out
    }

    /// Integer power-basis coordinates modulo `Φ_e`.
    pub fn reduce_int(&self) -> Vec<i64> {
        let data = cyclo_data(self.order);
        let mut out = vec![0i64; data.degree()];
        for (k, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(&data.powers[k]) {
                *o += m * v;
            }
        }
        out
    }

    pub fn reduce(&self) -> Cyclotomic {
        Cyclotomic::from_int_coeffs(self.order, &self.reduce_int())
    }

    /// Value equality (not formal equality of multiplicities).
    pub fn value_eq(&self, other: &RootSum) -> bool {
        if self.order == other.order {
            return self.reduce_int() == other.reduce_int();
        }
        self.reduce() == other.reduce()
    }
}
