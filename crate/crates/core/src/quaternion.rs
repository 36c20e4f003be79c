//! Unit quaternions as elements of SU(2).
//!
//! `w + xi + yj + zk` with `w² + x² + y² + z² = 1`. Every product is
//! renormalized so long words do not drift off the sphere.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

/// Below this length an imaginary part is treated as zero and the axis is absent.
pub const AXIS_EPS: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitQuaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A purely imaginary unit quaternion, i.e. a point of S² ⊂ ℝ³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImaginaryUnitVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// `q = cos(theta) + sin(theta)·axis`, with `theta ∈ [0, π]`.
///
/// The axis is `None` exactly when `q = ±1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub theta: f64,
    pub axis: Option<ImaginaryUnitVector>,
}

impl ImaginaryUnitVector {
    pub const I: Self = Self { x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Self = Self { x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Self = Self { x: 0.0, y: 0.0, z: 1.0 };

    /// Normalizes `(x, y, z)`; `None` for (near-)zero input.
    pub fn new(x: f64, y: f64, z: f64) -> Option<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if n < AXIS_EPS || !n.is_finite() {
            return None;
        }
        Some(Self { x: x / n, y: y / n, z: z / n })
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> [f64; 3] {
        [
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        ]
    }

    pub fn to_quaternion(self) -> UnitQuaternion {
        UnitQuaternion { w: 0.0, x: self.x, y: self.y, z: self.z }
    }

    pub fn norm_error(&self) -> f64 {
        (self.dot(self) - 1.0).abs()
    }
}

impl Neg for ImaginaryUnitVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self { x: -self.x, y: -self.y, z: -self.z }
    }
}

impl UnitQuaternion {
    pub const ONE: Self = Self { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const MINUS_ONE: Self = Self { w: -1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Self = Self { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Self = Self { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Self = Self { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    /// Projects `(w, x, y, z)` onto the unit sphere. Zero input maps to 1.
    pub fn normalized(w: f64, x: f64, y: f64, z: f64) -> Self {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Self::ONE;
        }
        Self { w: w / n, x: x / n, y: y / n, z: z / n }
    }

    /// `cos(theta) + sin(theta)·v`.
    pub fn exp(v: ImaginaryUnitVector, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { w: c, x: s * v.x, y: s * v.y, z: s * v.z }
    }

    /// Exponential of an arbitrary imaginary vector `(x, y, z)`; its length is the angle.
    pub fn exp_vec(x: f64, y: f64, z: f64) -> Self {
        let t = (x * x + y * y + z * z).sqrt();
        if t < 1e-300 {
            return Self::ONE;
        }
        let (s, c) = t.sin_cos();
        let k = s / t;
        Self { w: c, x: k * x, y: k * y, z: k * z }
    }

    pub fn axis_angle(&self) -> AxisAngle {
        let theta = self.w.clamp(-1.0, 1.0).acos();
        let axis = ImaginaryUnitVector::new(self.x, self.y, self.z);
        AxisAngle { theta, axis }
    }

    pub fn inverse(&self) -> Self {
        Self { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::normalized(a[0], a[1], a[2], a[3])
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Euclidean distance in ℝ⁴.
    pub fn distance(&self, other: &Self) -> f64 {
        let d = [self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]).sqrt()
    }

    /// Trace of the corresponding SU(2) matrix.
    pub fn trace(&self) -> f64 {
        2.0 * self.w
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: Self, b: Self) -> Self {
        a * b * a.inverse() * b.inverse()
    }

    /// `g · self · g⁻¹`.
    pub fn conjugated_by(&self, g: Self) -> Self {
        g * *self * g.inverse()
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut acc = Self::ONE;
        let mut b = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            e >>= 1;
        }
        acc
    }

    /// Product without renormalization.
    #[inline]
    pub(crate) fn mul_raw(a: &Self, b: &Self) -> Self {
        Self {
            w: a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            x: a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            y: a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            z: a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        }
    }
}

impl Mul for UnitQuaternion {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let p = Self::mul_raw(&self, &rhs);
        Self::normalized(p.w, p.x, p.y, p.z)
    }
}

impl Neg for UnitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17e}, {:.17e}, {:.17e}, {:.17e}]", self.w, self.x, self.y, self.z)
    }
}

/// A unit quaternion `r` with `r·a·r⁻¹ = b`.
pub fn rotation_taking(a: ImaginaryUnitVector, b: ImaginaryUnitVector) -> UnitQuaternion {
    let d = a.dot(&b);
    if d >= 0.0 {
        let c = a.cross(&b);
        UnitQuaternion::normalized(1.0 + d, c[0], c[1], c[2])
    } else {
        // Flip a to -a first so the half-way construction stays well conditioned.
        let flip = perpendicular(a).to_quaternion();
        rotation_taking(-a, b) * flip
    }
}

/// Some unit vector orthogonal to `v`.
pub fn perpendicular(v: ImaginaryUnitVector) -> ImaginaryUnitVector {
    let c = if v.x.abs() < 0.9 {
        v.cross(&ImaginaryUnitVector::I)
    } else {
        v.cross(&ImaginaryUnitVector::J)
    };
    ImaginaryUnitVector::new(c[0], c[1], c[2]).expect("cross product with a non-parallel axis")
}

/// Writes `z` as a commutator `[A, B]`.
///
/// Uses `e^{iθ} = [e^{iθ/2}, j]`, conjugated by a rotation taking `i` to the axis of `z`.
pub fn commutator_solve(z: UnitQuaternion) -> (UnitQuaternion, UnitQuaternion) {
    let AxisAngle { theta, axis } = z.axis_angle();
    match axis {
        None if z.w > 0.0 => (UnitQuaternion::ONE, UnitQuaternion::ONE),
        None => (UnitQuaternion::I, UnitQuaternion::J),
        Some(v) => {
            let a0 = UnitQuaternion::exp(ImaginaryUnitVector::I, theta / 2.0);
            let b0 = UnitQuaternion::J;
            let r = rotation_taking(ImaginaryUnitVector::I, v);
            (a0.conjugated_by(r), b0.conjugated_by(r))
        }
    }
}

/// Best-effort recognition of `theta / π` as a fraction with denominator at most `max_den`.
pub fn rational_angle(theta: f64, max_den: i64, tol: f64) -> Option<(i64, i64)> {
    let t = theta / PI;
    (1..=max_den).find_map(|q| {
        let p = (t * q as f64).round();
        ((t * q as f64 - p).abs() < tol * q as f64).then_some((p as i64, q))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: UnitQuaternion, b: UnitQuaternion, tol: f64) -> bool {
        a.distance(&b) < tol
    }

    #[test]
    fn basic_products() {
        use UnitQuaternion as Q;
        assert!(close(Q::I * Q::J, Q::K, 1e-15));
        assert!(close(Q::I * Q::I, Q::MINUS_ONE, 1e-15));
        assert!(close(Q::J * Q::K, Q::I, 1e-15));
        assert!(close(Q::commutator(Q::I, Q::J), Q::MINUS_ONE, 1e-15));
        let q = Q::normalized(0.3, -0.2, 0.9, 0.1);
        assert!(close(q * q.inverse(), Q::ONE, 1e-15));
    }

    #[test]
    fn exp_examples() {
        use UnitQuaternion as Q;
        assert!(close(Q::exp(ImaginaryUnitVector::I, 0.0), Q::ONE, 1e-15));
        assert!(close(Q::exp(ImaginaryUnitVector::J, PI), Q::MINUS_ONE, 1e-15));
        let q = Q::exp(ImaginaryUnitVector::I, PI / 3.0);
        assert!(close(q, Q { w: 0.5, x: 3f64.sqrt() / 2.0, y: 0.0, z: 0.0 }, 1e-15));
    }

    #[test]
    fn axis_angle_examples() {
        let aa = UnitQuaternion::MINUS_ONE.axis_angle();
        assert!((aa.theta - PI).abs() < 1e-15);
        assert!(aa.axis.is_none());
        let aa = UnitQuaternion::K.axis_angle();
        assert!((aa.theta - PI / 2.0).abs() < 1e-15);
        assert_eq!(aa.axis, Some(ImaginaryUnitVector::K));
        // clamping keeps slightly-off inputs finite
        let q = UnitQuaternion { w: 1.0 + 1e-16, x: 0.0, y: 0.0, z: 0.0 };
        assert_eq!(q.axis_angle().theta, 0.0);
    }

    #[test]
    fn commutator_special_values() {
        let (a, b) = commutator_solve(UnitQuaternion::ONE);
        assert_eq!((a, b), (UnitQuaternion::ONE, UnitQuaternion::ONE));
        let (a, b) = commutator_solve(UnitQuaternion::MINUS_ONE);
        assert_eq!((a, b), (UnitQuaternion::I, UnitQuaternion::J));
        let (a, b) = commutator_solve(UnitQuaternion::K);
        assert!(UnitQuaternion::commutator(a, b).distance(&UnitQuaternion::K) < 1e-10);
        let z = UnitQuaternion::exp(-ImaginaryUnitVector::I, 2.0);
        let (a, b) = commutator_solve(z);
        assert!(UnitQuaternion::commutator(a, b).distance(&z) < 1e-12);
    }

    #[test]
    fn rotation_handles_antipodes() {
        let r = rotation_taking(ImaginaryUnitVector::I, -ImaginaryUnitVector::I);
        let img = ImaginaryUnitVector::I.to_quaternion().conjugated_by(r);
        assert!(img.distance(&-UnitQuaternion::I) < 1e-14);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let q = UnitQuaternion::normalized(0.1, 0.7, -0.3, 0.2);
        let mut acc = UnitQuaternion::ONE;
        for _ in 0..7 {
            acc = acc * q;
        }
        assert!(q.pow(7).distance(&acc) < 1e-13);
        assert!((q.pow(-7) * acc).distance(&UnitQuaternion::ONE) < 1e-13);
    }

    #[test]
    fn recognizes_rational_angles() {
        assert_eq!(rational_angle(2.0 * PI / 3.0, 10_000, 1e-9), Some((2, 3)));
        assert_eq!(rational_angle(1.0, 100, 1e-12), None);
    }
}
