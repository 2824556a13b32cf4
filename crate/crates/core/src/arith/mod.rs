//! Exact number types: rationals, cyclotomic numbers and integer Laurent
//! polynomials. Nothing in here touches floating point.

mod cyclotomic;
mod laurent;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic, RootSum};
pub use laurent::LaurentInt;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integral [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `ζ_e^k`, reduced modulo `Φ_e`.
pub fn cyc_primitive_root(e: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(e, k)
}

/// Galois conjugation `ζ_e ↦ ζ_e^{-1}`.
pub fn cyc_conjugate(z: &Cyclotomic) -> Cyclotomic {
    z.conj()
}

/// `p(t, t⁻¹) ↦ p(t⁻¹, t)`.
pub fn laurent_bar(p: &LaurentInt) -> LaurentInt {
    p.bar()
}

/// Sum of all coefficients.
pub fn laurent_eval_one(p: &LaurentInt) -> i64 {
    p.eval_one()
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}
