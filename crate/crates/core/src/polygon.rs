//! Angle triples in SU(2) and representations of polygon orbifold groups
//! `Δ(α₁,…,αₙ) = ⟨c₁,…,cₙ | cᵢ^{αᵢ} = 1, c₁⋯cₙ = 1⟩`.
//!
//! Three elements `e^{vᵢθᵢ}` with prescribed angles `θᵢ ∈ [0, π]` can be
//! chosen with product 1 iff `θ₁+θ₂ ≥ θ₃` (and its cyclic rotations) and
//! `θ₁+θ₂+θ₃ ≤ 2π`; the triple can be made non-commuting iff all four
//! inequalities are strict.

use std::f64::consts::PI;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Representation, Word};
use crate::quaternion::{ImaginaryUnitVector, UnitQuaternion};

/// Margin separating strict from non-strict inequalities for floating angles.
pub const STRICT_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTriple {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleStatus {
    NoRep,
    AbelianOnly,
    NonabelianExists,
}

impl AngleTriple {
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Result<Self> {
        let t = Self { theta1, theta2, theta3 };
        if t.as_array().iter().all(|a| (0.0..=PI).contains(a)) {
            Ok(t)
        } else {
            Err(Error::OutOfRange(format!("angles must lie in [0, π]: {t:?}")))
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.theta1, self.theta2, self.theta3]
    }

    /// Slack of the four inequalities; all nonnegative iff a triple exists.
    fn slacks(&self) -> [f64; 4] {
        let [a, b, c] = self.as_array();
        [a + b - c, b + c - a, c + a - b, 2.0 * PI - a - b - c]
    }
}

pub fn angle_triple_status(t: &AngleTriple) -> TripleStatus {
    let s = t.slacks();
    if s.iter().any(|&x| x < -STRICT_MARGIN) {
        TripleStatus::NoRep
    } else if s.iter().all(|&x| x > STRICT_MARGIN) {
        TripleStatus::NonabelianExists
    } else {
        TripleStatus::AbelianOnly
    }
}

/// Exact variant: each angle is given as a rational multiple of π.
pub fn angle_triple_status_rational(t: [Ratio<i64>; 3]) -> TripleStatus {
    let [a, b, c] = t;
    let two = Ratio::from_integer(2);
    let s = [a + b - c, b + c - a, c + a - b, two - a - b - c];
    if s.iter().any(|x| *x < Ratio::zero()) {
        TripleStatus::NoRep
    } else if s.iter().all(|x| *x > Ratio::zero()) {
        TripleStatus::NonabelianExists
    } else {
        TripleStatus::AbelianOnly
    }
}

/// Axes `v₁, v₂, v₃` with `e^{v₁θ₁}·e^{v₂θ₂}·e^{v₃θ₃} = 1`.
///
/// Gauge: `v₁ = i` and `v₂` in the `i`–`j` plane with nonnegative `j` component.
pub fn construct_triple(t: &AngleTriple) -> Result<[ImaginaryUnitVector; 3]> {
    if angle_triple_status(t) == TripleStatus::NoRep {
        return Err(Error::Inadmissible);
    }
    let [a, b, c] = t.as_array();
    let v1 = ImaginaryUnitVector::I;
    let denom = a.sin() * b.sin();
    let v2 = if denom.abs() < STRICT_MARGIN {
        ImaginaryUnitVector::J
    } else {
        let cos_phi = ((a.cos() * b.cos() - c.cos()) / denom).clamp(-1.0, 1.0);
        let sin_phi = (1.0 - cos_phi * cos_phi).max(0.0).sqrt();
        ImaginaryUnitVector { x: cos_phi, y: sin_phi, z: 0.0 }
    };
    let z = UnitQuaternion::exp(v1, a) * UnitQuaternion::exp(v2, b);
    let target = z.inverse();
    let v3 = match target.axis_angle().axis {
        Some(axis) if target.w.clamp(-1.0, 1.0).acos() > 0.0 => axis,
        // target = ±1 forces θ₃ ∈ {0, π}, where the axis is irrelevant
        _ => ImaginaryUnitVector::I,
    };
    Ok([v1, v2, v3])
}

/// Sorted signature `α₁ ≤ … ≤ αₙ` with `n ≥ 3` and every `αᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolygonSignature {
    alphas: Vec<u32>,
}

impl PolygonSignature {
    pub fn new(mut alphas: Vec<u32>) -> Result<Self> {
        if alphas.len() < 3 {
            return Err(Error::OutOfRange("polygon signature needs at least 3 entries".into()));
        }
        if alphas.iter().any(|&a| a < 2) {
            return Err(Error::OutOfRange("polygon signature entries must be at least 2".into()));
        }
        alphas.sort_unstable();
        Ok(Self { alphas })
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    /// `⟨c₁,…,cₙ | cᵢ^{αᵢ}, c₁⋯cₙ⟩`.
    pub fn presentation(&self) -> GroupPresentation {
        let n = self.alphas.len();
        let mut p = GroupPresentation::new((1..=n).map(|i| format!("c{i}")));
        for (i, &a) in self.alphas.iter().enumerate() {
            p.add_relator(Word::power(i, a as i64));
        }
        p.add_relator(Word::from_syllables((0..n).map(|i| (i, 1))));
        p
    }
}

/// True iff the signature is of the form `(2,…,2,p,q)`.
pub fn is_two_prefix_shape(alphas: &[u32]) -> bool {
    alphas.len() >= 2 && alphas[..alphas.len() - 2].iter().all(|&a| a == 2)
}

pub fn delta_has_nonabelian(sig: &PolygonSignature) -> bool {
    let a = sig.alphas();
    !(is_two_prefix_shape(a) || a == [3, 3, 3])
}

/// Explicit non-abelian representation of `Δ(sig)`, indexed like `sig.alphas()`.
pub fn delta_witness(sig: &PolygonSignature) -> Result<Representation> {
    if !delta_has_nonabelian(sig) {
        return Err(Error::NoWitness(sig.alphas.clone()));
    }
    let a = sig.alphas();
    let n = a.len();
    if n == 3 {
        return Ok(Representation::new(triangle_witness(a[0], a[1], a[2]).to_vec()));
    }
    let mut images = vec![UnitQuaternion::ONE; n];
    let tail = PolygonSignature { alphas: a[n - 3..].to_vec() };
    if delta_has_nonabelian(&tail) {
        let w = triangle_witness(a[n - 3], a[n - 2], a[n - 1]);
        images[n - 3..].copy_from_slice(&w);
    } else {
        // tail is (3,3,3); the entry before it is 2 or 3
        let w = match a[n - 4] {
            2 => delta_2333(),
            _ => delta_3333(),
        };
        images[n - 4..].copy_from_slice(&w);
    }
    Ok(Representation::new(images))
}

/// Triangle case with `3 ≤ α₁ ≤ α₂ ≤ α₃`, `α₃ ≥ 4`.
fn triangle_witness(a1: u32, a2: u32, a3: u32) -> [UnitQuaternion; 3] {
    let t1 = Ratio::new(2, a1 as i64);
    let t2 = Ratio::new(2, a2 as i64);
    let step = Ratio::new(2, a3 as i64);
    // smallest multiple of 2/α₃ strictly above θ₁ − θ₂
    let diff = t1 - t2;
    let m = (diff / step).floor() + Ratio::one();
    let t3 = m * step;
    triple_images([t1, t2, t3])
}

fn triple_images(angles: [Ratio<i64>; 3]) -> [UnitQuaternion; 3] {
    let f = |r: Ratio<i64>| *r.numer() as f64 / *r.denom() as f64 * PI;
    let t = AngleTriple { theta1: f(angles[0]), theta2: f(angles[1]), theta3: f(angles[2]) };
    let v = construct_triple(&t).expect("angles chosen inside the admissible region");
    [
        UnitQuaternion::exp(v[0], t.theta1),
        UnitQuaternion::exp(v[1], t.theta2),
        UnitQuaternion::exp(v[2], t.theta3),
    ]
}

/// Images of `Δ(α₁,α₂,α₃)` generators from angles given as multiples of π.
pub fn triple_from_rational_angles(angles: [Ratio<i64>; 3]) -> Result<[UnitQuaternion; 3]> {
    if angle_triple_status_rational(angles) == TripleStatus::NoRep {
        return Err(Error::Inadmissible);
    }
    Ok(triple_images(angles))
}

/// `(e^{2πi/3}, e^{2πj/3}, e^{−2πj/3}, e^{−2πi/3})`.
pub fn delta_3333() -> [UnitQuaternion; 4] {
    use ImaginaryUnitVector as V;
    let t = 2.0 * PI / 3.0;
    [
        UnitQuaternion::exp(V::I, t),
        UnitQuaternion::exp(V::J, t),
        UnitQuaternion::exp(-V::J, t),
        UnitQuaternion::exp(-V::I, t),
    ]
}

/// `c₁ ↦ −1`, `cᵢ ↦ cos(2π/3) + sin(2π/3)vᵢ` for explicit axes `v₂, v₃, v₄`.
pub fn delta_2333() -> [UnitQuaternion; 4] {
    let s3 = 3f64.sqrt();
    let v2 = ImaginaryUnitVector::I;
    let v3 = ImaginaryUnitVector { x: -1.0 / 3.0, y: 2.0 / 3.0, z: 2.0 / 3.0 };
    let v4 = ImaginaryUnitVector { x: -1.0 / 3.0, y: (-1.0 - s3) / 3.0, z: (-1.0 + s3) / 3.0 };
    let t = 2.0 * PI / 3.0;
    [
        UnitQuaternion::MINUS_ONE,
        UnitQuaternion::exp(v2, t),
        UnitQuaternion::exp(v3, t),
        UnitQuaternion::exp(v4, t),
    ]
}
