//! Sol manifolds: torus bundles over the circle with hyperbolic monodromy,
//! and unions of two twisted I-bundles over the Klein bottle.

use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{relator_residual, GroupPresentation, Representation, Word};
use crate::quaternion::{ImaginaryUnitVector, UnitQuaternion};

/// `[[a, b], [c, d]]` in SL(2,ℤ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monodromy {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Monodromy {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn transpose(&self) -> Self {
        Self { a: self.a, b: self.c, c: self.b, d: self.d }
    }

    /// `J A J⁻¹` with `J = diag(1, −1)`.
    pub fn flip(&self) -> Self {
        Self { a: self.a, b: -self.b, c: -self.c, d: self.d }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.trace().abs() > 2
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }
}

impl fmt::Display for Monodromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Gluing `[[m, n], [p, q]]` with `|mq − np| = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GluingMatrix {
    pub m: i64,
    pub n: i64,
    pub p: i64,
    pub q: i64,
}

impl GluingMatrix {
    pub fn new(m: i64, n: i64, p: i64, q: i64) -> Result<Self> {
        let det = m * q - n * p;
        if det.abs() != 1 {
            return Err(Error::InvalidGluing(det));
        }
        Ok(Self { m, n, p, q })
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m, self.n, self.p, self.q)
    }
}

/// True iff every entry of `2(φ + I)` is divisible by `τ + 2`.
pub fn sol_is_su2_abelian(phi: &Monodromy) -> Result<bool> {
    let tau = phi.trace();
    if tau.abs() <= 2 {
        return Err(Error::NotHyperbolic(tau));
    }
    let m = tau + 2;
    let entries = [phi.a + 1, phi.b, phi.c, phi.d + 1];
    Ok(entries.iter().all(|&e| (2 * e) % m == 0))
}

/// `⟨x, y, t | [x,y], t x t⁻¹ (x^a y^c)⁻¹, t y t⁻¹ (x^b y^d)⁻¹⟩`.
pub fn torus_bundle_presentation(phi: &Monodromy) -> GroupPresentation {
    let (x, y, t) = (0, 1, 2);
    GroupPresentation::new(["x", "y", "t"]).with_relators([
        Word::commutator(x, y),
        Word::from_syllables([(t, 1), (x, 1), (t, -1), (y, -phi.c), (x, -phi.a)]),
        Word::from_syllables([(t, 1), (y, 1), (t, -1), (y, -phi.d), (x, -phi.b)]),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaPair {
    pub theta1: f64,
    pub theta2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorusBundleRep {
    pub thetas: ThetaPair,
    /// Images of `x, y, t`.
    pub rep: Representation,
    pub nonabelian: bool,
    pub residual: f64,
}

fn multiple_of_pi(theta: f64) -> bool {
    let k = theta / PI;
    (k - k.round()).abs() < 1e-9
}

/// The two candidate representations `x ↦ e^{iθ₁}, y ↦ e^{iθ₂}, t ↦ j`.
pub fn torus_bundle_reps(phi: &Monodromy) -> Result<[TorusBundleRep; 2]> {
    let tau = phi.trace();
    if tau == -2 {
        return Err(Error::TraceMinusTwo);
    }
    let m = tau + 2;
    // e^{2πik/m} only depends on k mod m
    let angle = |k: i64| 2.0 * PI * k.rem_euclid(m.abs()) as f64 / m as f64;
    let pres = torus_bundle_presentation(phi);
    let build = |theta1: f64, theta2: f64| {
        let rep = Representation::new(vec![
            UnitQuaternion::exp(ImaginaryUnitVector::I, theta1),
            UnitQuaternion::exp(ImaginaryUnitVector::I, theta2),
            UnitQuaternion::J,
        ]);
        let residual = relator_residual(&pres, &rep).expect("three generators");
        TorusBundleRep {
            thetas: ThetaPair { theta1, theta2 },
            rep,
            nonabelian: !(multiple_of_pi(theta1) && multiple_of_pi(theta2)),
            residual,
        }
    };
    Ok([
        build(angle(phi.d + 1), angle(-phi.b)),
        build(angle(-phi.c), angle(phi.a + 1)),
    ])
}

/// `π₁` of the union of two twisted I-bundles glued by `glue`, with
/// generators `a₁, b₁, a₂, b₂`.
pub fn nun_presentation(glue: &GluingMatrix) -> GroupPresentation {
    let (a1, b1, a2, b2) = (0, 1, 2, 3);
    GroupPresentation::new(["a1", "b1", "a2", "b2"]).with_relators([
        Word::from_syllables([(b1, 1), (a1, 1), (b1, -1), (a1, 1)]),
        Word::from_syllables([(b2, 1), (a2, 1), (b2, -1), (a2, 1)]),
        Word::from_syllables([(a2, -1), (a1, glue.m), (b1, 2 * glue.n)]),
        Word::from_syllables([(b2, -2), (a1, glue.p), (b1, 2 * glue.q)]),
    ])
}

/// Surjection onto the quaternion group: `b₁ ↦ i`, `b₂ ↦ j`,
/// `a₁ ↦ (−1)^{q−1}`, `a₂ ↦ a₁^m (−1)^n`.
pub fn nun_q8_rep(glue: &GluingMatrix) -> Representation {
    let sign = |e: i64| if e.is_even() { UnitQuaternion::ONE } else { UnitQuaternion::MINUS_ONE };
    let a1 = sign(glue.q - 1);
    let a2 = a1.pow(glue.m) * sign(glue.n);
    Representation::new(vec![a1, UnitQuaternion::I, a2, UnitQuaternion::J])
}
