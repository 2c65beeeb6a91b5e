//! Scalar arithmetic for the three coefficient rings: real numbers, complex
//! numbers, and quaternions.
//!
//! Each ring carries an involution (`conj`) with `conj(a * b) = conj(b) * conj(a)`
//! and a positive norm `a * conj(a) = |a|^2`. The kind is a static type
//! parameter inside the numeric kernels ([`Coeff`]); [`ScalarKind`] is the
//! runtime tag used at the model-file and CLI boundary.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Which coefficient ring a model computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Real,
    Complex,
    Quaternion,
}

impl ScalarKind {
    /// Number of real components per scalar (1, 2, or 4).
    pub fn components(self) -> usize {
        match self {
            ScalarKind::Real => 1,
            ScalarKind::Complex => 2,
            ScalarKind::Quaternion => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScalarKind::Real => "real",
            ScalarKind::Complex => "complex",
            ScalarKind::Quaternion => "quaternion",
        }
    }

    pub fn parse(s: &str) -> Option<ScalarKind> {
        match s {
            "real" => Some(ScalarKind::Real),
            "complex" => Some(ScalarKind::Complex),
            "quaternion" => Some(ScalarKind::Quaternion),
            _ => None,
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Complex number `re + im*i`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub const I: Complex = Complex { re: 0.0, im: 1.0 };
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, o: Complex) -> Complex {
        Complex::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, o: Complex) -> Complex {
        Complex::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, o: Complex) -> Complex {
        Complex::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

/// Quaternion `w + x*i + y*j + z*k` with `i^2 = j^2 = k^2 = ijk = -1`.
///
/// Multiplication is noncommutative; everything downstream (matrix products,
/// factorizations) is written to respect operand order.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    /// Cayley-Dickson split `q = a + b*j` with `a = w + x*i`, `b = y + z*i`.
    ///
    /// The `b` factor multiplies `j` on the left (`b*j`, not `j*b`); the
    /// complex adjoint embedding in the pseudoinverse module depends on this
    /// convention.
    pub fn to_complex_pair(self) -> (Complex, Complex) {
        (Complex::new(self.w, self.x), Complex::new(self.y, self.z))
    }

    /// Inverse of [`Quaternion::to_complex_pair`]: `a + b*j`.
    pub fn from_complex_pair(a: Complex, b: Complex) -> Quaternion {
        Quaternion::new(a.re, a.im, b.re, b.im)
    }

    /// The conjugation `q -> -eta * q * eta` for a unit imaginary `eta`.
    ///
    /// Fixes the real part and the `eta` axis, negates the other two
    /// imaginary axes. Used by the complementary covariances of proper
    /// quaternionic Gaussians.
    pub fn eta_conj(self, eta: QuaternionUnit) -> Quaternion {
        match eta {
            QuaternionUnit::I => Quaternion::new(self.w, self.x, -self.y, -self.z),
            QuaternionUnit::J => Quaternion::new(self.w, -self.x, self.y, -self.z),
            QuaternionUnit::K => Quaternion::new(self.w, -self.x, -self.y, self.z),
        }
    }
}

/// The three imaginary units of the quaternions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuaternionUnit {
    I,
    J,
    K,
}

impl QuaternionUnit {
    pub const ALL: [QuaternionUnit; 3] = [QuaternionUnit::I, QuaternionUnit::J, QuaternionUnit::K];

    pub fn symbol(self) -> char {
        match self {
            QuaternionUnit::I => 'i',
            QuaternionUnit::J => 'j',
            QuaternionUnit::K => 'k',
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Coefficient of a matrix: an element of an involutive division ring.
///
/// Implemented by `f64`, [`Complex`], and [`Quaternion`]. Generic numeric
/// kernels monomorphize per kind, so real-kind computations pay no dispatch
/// or storage overhead for the unused components.
pub trait Coeff:
    Copy
    + PartialEq
    + fmt::Debug
    + Default
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: f64) -> Self;
    /// Real components in `(w, x, y, z)` order; unused slots are zero.
    fn components(self) -> [f64; 4];
    /// Build from `(w, x, y, z)` components. Components outside the ring are
    /// the caller's responsibility (the model parser validates them).
    fn from_components(c: [f64; 4]) -> Self;
    fn conj(self) -> Self;
    /// `|a|^2 = a * conj(a)`, always a nonnegative real.
    fn norm_sqr(self) -> f64;
    /// Multiplication by a real, which is central in all three rings.
    fn scale(self, r: f64) -> Self;
    /// Multiplicative inverse `conj(a) / |a|^2`; `None` for zero.
    fn inv(self) -> Option<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            None
        } else {
            Some(self.conj().scale(1.0 / n))
        }
    }
    fn abs(self) -> f64 {
        self.norm_sqr().sqrt()
    }
    fn is_zero(self) -> bool {
        self == Self::zero()
    }
    /// The real part, i.e. the `w` component.
    fn real_part(self) -> f64 {
        self.components()[0]
    }
}

impl Coeff for f64 {
    const KIND: ScalarKind = ScalarKind::Real;

    fn zero() -> f64 {
        0.0
    }
    fn one() -> f64 {
        1.0
    }
    fn from_real(r: f64) -> f64 {
        r
    }
    fn components(self) -> [f64; 4] {
        [self, 0.0, 0.0, 0.0]
    }
    fn from_components(c: [f64; 4]) -> f64 {
        c[0]
    }
    fn conj(self) -> f64 {
        self
    }
    fn norm_sqr(self) -> f64 {
        self * self
    }
    fn scale(self, r: f64) -> f64 {
        self * r
    }
}

impl Coeff for Complex {
    const KIND: ScalarKind = ScalarKind::Complex;

    fn zero() -> Complex {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Complex {
        Complex::new(1.0, 0.0)
    }
    fn from_real(r: f64) -> Complex {
        Complex::new(r, 0.0)
    }
    fn components(self) -> [f64; 4] {
        [self.re, self.im, 0.0, 0.0]
    }
    fn from_components(c: [f64; 4]) -> Complex {
        Complex::new(c[0], c[1])
    }
    fn conj(self) -> Complex {
        Complex::new(self.re, -self.im)
    }
    fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
    fn scale(self, r: f64) -> Complex {
        Complex::new(self.re * r, self.im * r)
    }
}

impl Coeff for Quaternion {
    const KIND: ScalarKind = ScalarKind::Quaternion;

    fn zero() -> Quaternion {
        Quaternion::new(0.0, 0.0, 0.0, 0.0)
    }
    fn one() -> Quaternion {
        Quaternion::new(1.0, 0.0, 0.0, 0.0)
    }
    fn from_real(r: f64) -> Quaternion {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }
    fn components(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }
    fn from_components(c: [f64; 4]) -> Quaternion {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }
    fn conj(self) -> Quaternion {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }
    fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }
    fn scale(self, r: f64) -> Quaternion {
        Quaternion::new(self.w * r, self.x * r, self.y * r, self.z * r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    fn random_quat(seed: u64, i: u64) -> Quaternion {
        Quaternion::new(
            rng::uniform_sym(seed, 4 * i),
            rng::uniform_sym(seed, 4 * i + 1),
            rng::uniform_sym(seed, 4 * i + 2),
            rng::uniform_sym(seed, 4 * i + 3),
        )
    }

    #[test]
    fn quaternion_defining_relations() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * i, -Quaternion::one());
        assert_eq!(j * i, -k);
    }

    #[test]
    fn complex_conjugation() {
        let a = Complex::new(1.0, 2.0);
        assert_eq!(a.conj(), Complex::new(1.0, -2.0));
        assert_eq!((a * a.conj()).re, a.norm_sqr());
    }

    #[test]
    fn inverse_of_i_plus_j() {
        // |i+j|^2 = 2, so the inverse is (-i-j)/2.
        let q = Quaternion::I + Quaternion::J;
        let inv = q.inv().unwrap();
        assert_eq!(inv, Quaternion::new(0.0, -0.5, -0.5, 0.0));
        let prod = q * inv;
        assert!((prod - Quaternion::one()).abs() < 1e-15);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Quaternion::zero().inv().is_none());
        assert!(Complex::zero().inv().is_none());
        assert!(<f64 as Coeff>::inv(0.0).is_none());
    }

    #[test]
    fn involution_laws_random_quaternions() {
        for t in 0..100u64 {
            let q = random_quat(11, 2 * t);
            let r = random_quat(11, 2 * t + 1);
            assert_eq!(q.conj().conj(), q);
            // conj reverses products
            let lhs = (q * r).conj();
            let rhs = r.conj() * q.conj();
            assert!((lhs - rhs).abs() < 1e-14);
            // |qr| = |q||r| up to roundoff
            let qr = (q * r).abs();
            assert!((qr - q.abs() * r.abs()).abs() <= 1e-12 * (1.0 + qr));
        }
    }

    #[test]
    fn quaternion_commutator_witness() {
        let ij = Quaternion::I * Quaternion::J;
        let ji = Quaternion::J * Quaternion::I;
        assert_ne!(ij, ji);
    }

    #[test]
    fn complex_pair_split() {
        let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        let (a, b) = q.to_complex_pair();
        assert_eq!(a, Complex::new(1.0, 2.0));
        assert_eq!(b, Complex::new(3.0, 4.0));
        assert_eq!(Quaternion::from_complex_pair(a, b), q);

        let (a, b) = Quaternion::J.to_complex_pair();
        assert_eq!(a, Complex::zero());
        assert_eq!(b, Complex::one());
    }

    #[test]
    fn conjugate_splits_with_negated_j_part() {
        for t in 0..100u64 {
            let q = random_quat(13, t);
            let (a, b) = q.to_complex_pair();
            let (ca, cb) = q.conj().to_complex_pair();
            assert_eq!(ca, a.conj());
            assert_eq!(cb, -b);
            assert_eq!(Quaternion::from_complex_pair(a.conj(), -b), q.conj());
        }
    }

    #[test]
    fn eta_conjugation_axes() {
        let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        // -eta q eta computed directly
        for eta in QuaternionUnit::ALL {
            let unit = match eta {
                QuaternionUnit::I => Quaternion::I,
                QuaternionUnit::J => Quaternion::J,
                QuaternionUnit::K => Quaternion::K,
            };
            let direct = -(unit * q * unit);
            assert_eq!(q.eta_conj(eta), direct);
        }
    }
}
