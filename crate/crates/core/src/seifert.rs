//! Seifert fibered spaces: invariants, homology, geometry, and the
//! SU(2)-abelian classifier with explicit non-abelian witnesses.

use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Representation, Word};
use crate::homology::{abelianization, AbelianGroup};
use crate::polygon::{
    construct_triple, delta_has_nonabelian, delta_witness, is_two_prefix_shape, AngleTriple,
    PolygonSignature,
};
use crate::quaternion::{commutator_solve, rotation_taking, ImaginaryUnitVector, UnitQuaternion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseSurface {
    /// Genus `g ≥ 0`; `S²` is genus 0 and `T²` genus 1.
    OrientableGenus(u32),
    /// Connected sum of `g ≥ 1` projective planes; `RP²` is genus 1.
    NonorientableGenus(u32),
}

impl BaseSurface {
    pub const S2: Self = Self::OrientableGenus(0);
    pub const T2: Self = Self::OrientableGenus(1);
    pub const RP2: Self = Self::NonorientableGenus(1);

    pub fn euler_char(&self) -> i64 {
        match *self {
            Self::OrientableGenus(g) => 2 - 2 * g as i64,
            Self::NonorientableGenus(g) => 2 - g as i64,
        }
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::OrientableGenus(0) => write!(f, "S2"),
            Self::OrientableGenus(1) => write!(f, "T2"),
            Self::NonorientableGenus(1) => write!(f, "RP2"),
            Self::OrientableGenus(g) => write!(f, "O{g}"),
            Self::NonorientableGenus(g) => write!(f, "N{g}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertInvariants {
    pub base: BaseSurface,
    /// Pairs `(α, β)` with `α ≥ 1` and `gcd(α, β) = 1`.
    pub pairs: Vec<(i64, i64)>,
}

impl SeifertInvariants {
    pub fn new(base: BaseSurface, pairs: Vec<(i64, i64)>) -> Result<Self> {
        if base == BaseSurface::NonorientableGenus(0) {
            return Err(Error::InvalidSeifert("nonorientable genus must be at least 1".into()));
        }
        for &(a, b) in &pairs {
            if a < 1 {
                return Err(Error::InvalidSeifert(format!("α must be at least 1 in {a}/{b}")));
            }
            if a.gcd(&b) != 1 {
                return Err(Error::InvalidSeifert(format!("{a}/{b} is not coprime")));
            }
        }
        Ok(Self { base, pairs })
    }

    pub fn s2(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(BaseSurface::S2, pairs.to_vec())
    }

    pub fn alphas(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.0).collect()
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sfs({}", self.base)?;
        for (k, (a, b)) in self.pairs.iter().enumerate() {
            write!(f, "{}{a}/{b}", if k == 0 { "; " } else { ", " })?;
        }
        write!(f, ")")
    }
}

/// Absorbs every `(1, k)` pair into the first pair with `α ≥ 2`, then sorts by `(α, β)`.
///
/// Without any `α ≥ 2` pair the result is `[(1, K)]`, or no pairs when `K = 0`.
pub fn normalize(s: &SeifertInvariants) -> SeifertInvariants {
    let k: i64 = s.pairs.iter().filter(|p| p.0 == 1).map(|p| p.1).sum();
    let mut pairs: Vec<(i64, i64)> = s.pairs.iter().copied().filter(|p| p.0 >= 2).collect();
    pairs.sort_unstable();
    match pairs.first_mut() {
        Some(first) => first.1 += k * first.0,
        None if k != 0 => pairs.push((1, k)),
        None => {}
    }
    pairs.sort_unstable();
    SeifertInvariants { base: s.base, pairs }
}

/// Standard presentation of `π₁`.
///
/// Orientable genus `g`: generators `a₁,b₁,…,a_g,b_g,c₁,…,cₙ,h`.
/// Nonorientable genus `g`: generators `a₁,…,a_g,c₁,…,cₙ,h`.
pub fn pi1_presentation(s: &SeifertInvariants) -> GroupPresentation {
    let n = s.pairs.len();
    let mut names = Vec::new();
    let (handles, orientable) = match s.base {
        BaseSurface::OrientableGenus(g) => (g as usize, true),
        BaseSurface::NonorientableGenus(g) => (g as usize, false),
    };
    let single = handles == 1;
    for i in 1..=handles {
        let suffix = if single { String::new() } else { i.to_string() };
        names.push(format!("a{suffix}"));
        if orientable {
            names.push(format!("b{suffix}"));
        }
    }
    let handle_gens = names.len();
    let c0 = handle_gens;
    if n == 1 {
        names.push("c".to_string());
    } else {
        names.extend((1..=n).map(|i| format!("c{i}")));
    }
    let h = names.len();
    names.push("h".to_string());

    let mut p = GroupPresentation::new(names);
    if orientable {
        for g in 0..handle_gens {
            p.add_relator(Word::commutator(h, g));
        }
    } else {
        for g in 0..handle_gens {
            p.add_relator(Word::from_syllables([(g, -1), (h, 1), (g, 1), (h, 1)]));
        }
    }
    for i in 0..n {
        p.add_relator(Word::commutator(h, c0 + i));
    }
    for (i, &(a, b)) in s.pairs.iter().enumerate() {
        p.add_relator(Word::from_syllables([(c0 + i, a), (h, b)]));
    }
    let mut product = Word::from_syllables((0..n).map(|i| (c0 + i, 1)));
    if orientable {
        for k in 0..handles {
            product.append(&Word::commutator(2 * k, 2 * k + 1));
        }
    } else {
        for k in 0..handles {
            product.push(k, 2);
        }
    }
    if !product.is_empty() {
        p.add_relator(product);
    }
    p
}

pub fn h1(s: &SeifertInvariants) -> AbelianGroup {
    abelianization(&pi1_presentation(s))
}

/// `e = −Σ βᵢ/αᵢ`.
pub fn euler_number(s: &SeifertInvariants) -> Ratio<i64> {
    -s.pairs.iter().map(|&(a, b)| Ratio::new(b, a)).sum::<Ratio<i64>>()
}

/// `χ(base) − Σ (1 − 1/αᵢ)`.
pub fn orbifold_euler_char(s: &SeifertInvariants) -> Ratio<i64> {
    let one = Ratio::from_integer(1);
    Ratio::from_integer(s.base.euler_char())
        - s.pairs.iter().map(|&(a, _)| one - Ratio::new(1, a)).sum::<Ratio<i64>>()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeometryTag {
    Spherical,
    S2xR,
    Euclidean,
    Nil,
    H2xR,
    #[serde(rename = "SL2R-tilde")]
    Sl2rTilde,
}

impl fmt::Display for GeometryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Spherical => "Spherical",
            Self::S2xR => "S2xR",
            Self::Euclidean => "Euclidean",
            Self::Nil => "Nil",
            Self::H2xR => "H2xR",
            Self::Sl2rTilde => "SL2R-tilde",
        };
        f.write_str(s)
    }
}

pub fn geometry(s: &SeifertInvariants) -> GeometryTag {
    use std::cmp::Ordering::*;
    let chi = orbifold_euler_char(s);
    let e_zero = euler_number(s).is_zero();
    match (chi.cmp(&Ratio::zero()), e_zero) {
        (Greater, false) => GeometryTag::Spherical,
        (Greater, true) => GeometryTag::S2xR,
        (Equal, false) => GeometryTag::Nil,
        (Equal, true) => GeometryTag::Euclidean,
        (Less, true) => GeometryTag::H2xR,
        (Less, false) => GeometryTag::Sl2rTilde,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Certificate {
    CyclicPi1,
    RP3ConnectSumRP3,
    Base244,
    Base333EvenH1,
    CircleBundleT2Even,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of [`is_su2_abelian`].
///
/// The witness is a representation of `pi1_presentation(&invariants)`,
/// where `invariants` is the normalized input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub abelian: bool,
    pub certificate: Option<Certificate>,
    pub witness: Option<Representation>,
    pub invariants: SeifertInvariants,
}

/// Certificate for an SU(2)-abelian manifold, `None` otherwise.
pub fn abelian_certificate(s: &SeifertInvariants) -> Option<Certificate> {
    let s = normalize(s);
    let alphas = s.alphas();
    match s.base {
        BaseSurface::OrientableGenus(0) => match alphas.as_slice() {
            a if a.len() <= 2 => Some(Certificate::CyclicPi1),
            [2, 4, 4] => Some(Certificate::Base244),
            [3, 3, 3] => {
                let sum: i64 = s.pairs.iter().map(|p| p.1).sum();
                sum.is_even().then_some(Certificate::Base333EvenH1)
            }
            _ => None,
        },
        BaseSurface::OrientableGenus(1) => match s.pairs.as_slice() {
            [] => Some(Certificate::CircleBundleT2Even),
            [(1, b)] if b.is_even() => Some(Certificate::CircleBundleT2Even),
            _ => None,
        },
        BaseSurface::NonorientableGenus(1) => match s.pairs.as_slice() {
            [] => Some(Certificate::RP3ConnectSumRP3),
            [(_, b)] if b.abs() == 1 => Some(Certificate::CyclicPi1),
            _ => None,
        },
        _ => None,
    }
}

pub fn is_su2_abelian(s: &SeifertInvariants) -> ClassificationVerdict {
    let invariants = normalize(s);
    match abelian_certificate(&invariants) {
        Some(c) => {
            ClassificationVerdict { abelian: true, certificate: Some(c), witness: None, invariants }
        }
        None => {
            let witness = build_witness(&invariants);
            ClassificationVerdict { abelian: false, certificate: None, witness: Some(witness), invariants }
        }
    }
}

/// Non-abelian representation of `pi1_presentation(&normalize(s))`.
pub fn nonabelian_witness(s: &SeifertInvariants) -> Result<Representation> {
    let s = normalize(s);
    if abelian_certificate(&s).is_some() {
        return Err(Error::IsAbelian);
    }
    Ok(build_witness(&s))
}

/// Requires `s` normalized and not SU(2)-abelian.
fn build_witness(s: &SeifertInvariants) -> Representation {
    match s.base {
        BaseSurface::OrientableGenus(0) => s2_witness(&s.pairs),
        BaseSurface::OrientableGenus(1) => t2_witness(&s.pairs),
        BaseSurface::NonorientableGenus(1) => rp2_witness(&s.pairs),
        BaseSurface::OrientableGenus(g) => {
            let mut images = vec![UnitQuaternion::ONE; 2 * g as usize + s.pairs.len() + 1];
            images[..4].copy_from_slice(&[
                UnitQuaternion::I,
                UnitQuaternion::J,
                UnitQuaternion::I,
                UnitQuaternion::J,
            ]);
            Representation::new(images)
        }
        BaseSurface::NonorientableGenus(g) => {
            let mut images = vec![UnitQuaternion::ONE; g as usize + s.pairs.len() + 1];
            images[0] = UnitQuaternion::I;
            images[1] = UnitQuaternion::J;
            Representation::new(images)
        }
    }
}

/// Images `c₁,…,cₙ,h` for sorted pairs over `S²` with `n ≥ 3`, all `αᵢ ≥ 2`.
fn s2_witness(pairs: &[(i64, i64)]) -> Representation {
    let alphas: Vec<u32> = pairs.iter().map(|p| p.0 as u32).collect();
    let sig = PolygonSignature::new(alphas.clone()).expect("normalized signature");
    if delta_has_nonabelian(&sig) {
        let mut images = delta_witness(&sig).expect("predicate checked").images;
        images.push(UnitQuaternion::ONE);
        return Representation::new(images);
    }
    let mut images = if pairs.len() == 3 && alphas[0] == 2 {
        let angles = [
            PI / 2.0,
            half_turn_angle(pairs[1].0, pairs[1].1),
            half_turn_angle(pairs[2].0, pairs[2].1),
        ];
        triple_with_angles(angles)
    } else if pairs.len() == 3 {
        // (3,3,3) with Σβ odd
        let angle = |b: i64| if b.is_odd() { PI / 3.0 } else { 2.0 * PI / 3.0 };
        triple_with_angles([angle(pairs[0].1), angle(pairs[1].1), angle(pairs[2].1)])
    } else if alphas == [2, 2, 4, 4] {
        vec![
            UnitQuaternion::I,
            -UnitQuaternion::I,
            UnitQuaternion::exp(ImaginaryUnitVector::J, PI / 4.0),
            UnitQuaternion::exp(-ImaginaryUnitVector::J, PI / 4.0),
        ]
    } else {
        debug_assert!(is_two_prefix_shape(&alphas) && alphas[1] == 2);
        let sub = s2_witness(&pairs[1..]);
        let first = sub.images[0];
        let axis = first.axis_angle().axis.expect("image of order 4");
        let sub = sub.conjugated_by(rotation_taking(axis, ImaginaryUnitVector::I));
        let mut images = vec![UnitQuaternion::J, UnitQuaternion::K];
        images.extend_from_slice(&sub.images[1..pairs.len() - 1]);
        images
    };
    images.push(UnitQuaternion::MINUS_ONE);
    Representation::new(images)
}

/// Angle `θ ∈ [0, π]` with `θα ≡ βπ (mod 2π)`, as close to `π/2` as the parity allows.
fn half_turn_angle(alpha: i64, beta: i64) -> f64 {
    let m = (alpha + 1) / 2 - 1;
    let k = if (m - beta).is_even() { m } else { m + 1 };
    k as f64 * PI / alpha as f64
}

fn triple_with_angles(angles: [f64; 3]) -> Vec<UnitQuaternion> {
    let t = AngleTriple { theta1: angles[0], theta2: angles[1], theta3: angles[2] };
    let v = construct_triple(&t).expect("angles satisfy the strict inequalities");
    (0..3).map(|i| UnitQuaternion::exp(v[i], angles[i])).collect()
}

/// `c_j ↦ exp(v_j β_j π / α_j)` with `v₁ = i` and `v_j = j` afterwards.
fn fiber_images(pairs: &[(i64, i64)]) -> Vec<UnitQuaternion> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| {
            let v = if k == 0 { ImaginaryUnitVector::I } else { ImaginaryUnitVector::J };
            UnitQuaternion::exp(v, b as f64 * PI / a as f64)
        })
        .collect()
}

/// Images `a, b, c₁,…,cₙ, h` over `T²`.
fn t2_witness(pairs: &[(i64, i64)]) -> Representation {
    let cs = fiber_images(pairs);
    let product = cs.iter().fold(UnitQuaternion::ONE, |acc, &c| acc * c);
    let (a, b) = commutator_solve(product.inverse());
    let mut images = vec![a, b];
    images.extend(cs);
    images.push(UnitQuaternion::MINUS_ONE);
    Representation::new(images)
}

/// Images `a, c₁,…,cₙ, h` over `RP²`.
fn rp2_witness(pairs: &[(i64, i64)]) -> Representation {
    if let [(alpha, beta)] = *pairs {
        let h = UnitQuaternion::exp(ImaginaryUnitVector::I, alpha as f64 * PI / beta as f64);
        return Representation::new(vec![UnitQuaternion::J, UnitQuaternion::MINUS_ONE, h]);
    }
    let cs = fiber_images(pairs);
    let target = cs.iter().fold(UnitQuaternion::ONE, |acc, &c| acc * c).inverse();
    let aa = target.axis_angle();
    let a = UnitQuaternion::exp(aa.axis.unwrap_or(ImaginaryUnitVector::I), aa.theta / 2.0);
    let mut images = vec![a];
    images.extend(cs);
    images.push(UnitQuaternion::MINUS_ONE);
    Representation::new(images)
}
