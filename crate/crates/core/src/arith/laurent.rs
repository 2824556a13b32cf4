use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Laurent polynomial in `Z[t, t⁻¹]`, stored sparsely as degree → nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentInt {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `c · t^deg`.
    pub fn monomial(deg: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(deg, c);
        p
    }

    /// `t^deg`.
    pub fn t(deg: i64) -> Self {
        Self::monomial(deg, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn add_term(&mut self, deg: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(deg).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&deg);
        }
    }

    pub fn coeff(&self, deg: i64) -> i64 {
        self.coeffs.get(&deg).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `p(t⁻¹, t)`.
    pub fn bar(&self) -> Self {
        LaurentInt { coeffs: self.coeffs.iter().map(|(&d, &c)| (-d, c)).collect() }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentInt { coeffs: self.coeffs.iter().map(|(&d, &c)| (d + k, c)).collect() }
    }

    pub fn scale(&self, s: i64) -> Self {
        if s == 0 {
            return Self::zero();
        }
        LaurentInt { coeffs: self.coeffs.iter().map(|(&d, &c)| (d, c * s)).collect() }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    /// Renders the key/value form used in report files: `{"-2": 1}`.
    pub fn to_degree_map(&self) -> BTreeMap<i64, i64> {
        self.coeffs.clone()
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&d, &c)) in self.coeffs.iter().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            }
            match (d, abs) {
                (0, a) => write!(f, "{}", a)?,
                (1, 1) => write!(f, "t")?,
                (1, a) => write!(f, "{} t", a)?,
                (d, 1) => write!(f, "t^{}", d)?,
                (d, a) => write!(f, "{} t^{}", a, d)?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        for (&d, &c) in &rhs.coeffs {
            self.add_term(d, c);
        }
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        for (&d, &c) in &rhs.coeffs {
            self.add_term(d, -c);
        }
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (&d1, &c1) in &self.coeffs {
            for (&d2, &c2) in &rhs.coeffs {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        self.scale(-1)
    }
}

impl Add for LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: LaurentInt) -> LaurentInt {
        &self + &rhs
    }
}

impl Sub for LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: LaurentInt) -> LaurentInt {
        &self - &rhs
    }
}

impl Mul for LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: LaurentInt) -> LaurentInt {
        &self * &rhs
    }
}

impl Serialize for LaurentInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.coeffs.len()))?;
        for (d, c) in &self.coeffs {
            m.serialize_entry(&d.to_string(), c)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, i64> = BTreeMap::deserialize(d)?;
        let mut p = LaurentInt::zero();
        for (k, c) in raw {
            let deg: i64 =
                k.trim().parse().map_err(|_| serde::de::Error::custom(format!("bad Laurent degree key {:?}", k)))?;
            p.add_term(deg, c);
        }
        Ok(p)
    }
}
