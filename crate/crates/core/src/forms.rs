//! Indefinite binary quadratic forms and SL(2,ℤ) conjugacy of hyperbolic matrices.
//!
//! A matrix `[[a, b], [c, d]]` corresponds to the form `bx² + (d−a)xy − cy²`;
//! conjugacy classes of trace `τ` match equivalence classes of forms of
//! discriminant `τ² − 4`, primitive or not.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sol::Monodromy;

/// `ax² + bxy + cy²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BinaryQuadraticForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BinaryQuadraticForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn content(&self) -> i64 {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    /// `Q(px + qy, rx + sy)`.
    pub fn transform(&self, [[p, q], [r, s]]: [[i64; 2]; 2]) -> Self {
        let Self { a, b, c } = *self;
        Self {
            a: a * p * p + b * p * r + c * r * r,
            b: 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            c: a * q * q + b * q * s + c * s * s,
        }
    }

    fn scaled(&self, k: i64) -> Self {
        Self { a: self.a * k, b: self.b * k, c: self.c * k }
    }

    /// `0 < b < √D` and `√D − b < 2|a| < √D + b`.
    pub fn is_reduced(&self) -> bool {
        let s = self.discriminant().sqrt();
        let a2 = 2 * self.a.abs();
        // for non-square D: x < √D ⇔ x ≤ s, and x > √D ⇔ x ≥ s + 1
        self.b > 0 && self.b <= s && a2 + self.b > s && a2 - self.b <= s
    }
}

impl fmt::Display for BinaryQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

fn check_discriminant(d: i64) -> Result<()> {
    let s = if d > 0 { d.sqrt() } else { 0 };
    if d <= 0 || s * s == d || !(d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1) {
        return Err(Error::BadDiscriminant(d));
    }
    Ok(())
}

/// `(b, d − a, −c)`.
pub fn form_of_matrix(m: &Monodromy) -> BinaryQuadraticForm {
    BinaryQuadraticForm::new(m.b, m.d - m.a, -m.c)
}

/// Inverse of [`form_of_matrix`] for matrices of trace `tau`.
pub fn matrix_of_form(q: &BinaryQuadraticForm, tau: i64) -> Result<Monodromy> {
    if q.discriminant() != tau * tau - 4 {
        return Err(Error::DiscriminantMismatch(q.discriminant(), tau * tau - 4));
    }
    Monodromy::new((tau - q.b) / 2, q.a, -q.c, (tau + q.b) / 2)
}

/// One reduction step `(a, b, c) ↦ (c, r, (r² − D)/4c)` on a primitive form.
fn rho(q: &BinaryQuadraticForm, s: i64) -> BinaryQuadraticForm {
    let d = q.discriminant();
    let c = q.c;
    let m = 2 * c.abs();
    let base = (-q.b).rem_euclid(m);
    let r = if c.abs() > s {
        // −|c| < r ≤ |c|
        if base > c.abs() { base - m } else { base }
    } else {
        // largest r ≡ −b (mod 2|c|) with r ≤ s
        s - (s - base).rem_euclid(m)
    };
    BinaryQuadraticForm::new(c, r, (r * r - d) / (4 * c))
}

fn primitive_cycle(q: &BinaryQuadraticForm) -> Vec<BinaryQuadraticForm> {
    let s = q.discriminant().sqrt();
    let mut f = *q;
    let mut guard = 0;
    while !f.is_reduced() {
        f = rho(&f, s);
        guard += 1;
        assert!(guard < 10_000, "reduction did not terminate for {q}");
    }
    let start = f;
    let mut cycle = vec![start];
    loop {
        f = rho(&f, s);
        if f == start {
            break;
        }
        cycle.push(f);
    }
    let k = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(k);
    cycle
}

/// The cycle of reduced forms equivalent to `q`, starting from its
/// lexicographically least member.
pub fn reduce_form_cycle(q: &BinaryQuadraticForm) -> Result<Vec<BinaryQuadraticForm>> {
    let d = q.discriminant();
    let s = if d > 0 { d.sqrt() } else { 0 };
    if d <= 0 || s * s == d {
        return Err(Error::BadDiscriminant(d));
    }
    let g = q.content();
    let prim = BinaryQuadraticForm::new(q.a / g, q.b / g, q.c / g);
    Ok(primitive_cycle(&prim).iter().map(|f| f.scaled(g)).collect())
}

pub fn forms_equivalent(q1: &BinaryQuadraticForm, q2: &BinaryQuadraticForm) -> Result<bool> {
    let (d1, d2) = (q1.discriminant(), q2.discriminant());
    if d1 != d2 {
        return Err(Error::DiscriminantMismatch(d1, d2));
    }
    Ok(reduce_form_cycle(q1)? == reduce_form_cycle(q2)?)
}

/// All reduced forms of discriminant `d`, primitive or not.
pub fn reduced_forms(d: i64) -> Result<Vec<BinaryQuadraticForm>> {
    check_discriminant(d)?;
    let s = d.sqrt();
    let mut out = Vec::new();
    for b in (1..=s).filter(|b| (b - d).is_even()) {
        let ac = (b * b - d) / 4;
        for a in 1..=(s + b) / 2 {
            if ac % a != 0 {
                continue;
            }
            for sa in [a, -a] {
                let f = BinaryQuadraticForm::new(sa, b, ac / sa);
                if f.is_reduced() {
                    out.push(f);
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// One cycle per equivalence class of forms of discriminant `d`.
pub fn form_classes(d: i64) -> Result<Vec<Vec<BinaryQuadraticForm>>> {
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for f in reduced_forms(d)? {
        if seen.contains(&f) {
            continue;
        }
        let cycle = reduce_form_cycle(&f)?;
        seen.extend(cycle.iter().copied());
        classes.push(cycle);
    }
    Ok(classes)
}

/// Number of equivalence classes of forms of discriminant `d`, counting imprimitive forms.
pub fn class_number(d: i64) -> Result<usize> {
    Ok(form_classes(d)?.len())
}

pub const A_NEG3: Monodromy = Monodromy { a: -3, b: -1, c: 1, d: 0 };
pub const A_NEG4: Monodromy = Monodromy { a: -3, b: 1, c: 2, d: -1 };
pub const A_NEG6: Monodromy = Monodromy { a: -3, b: 4, c: 2, d: -3 };

/// The standard matrices of trace −3, −4 (with its transpose) and −6.
pub fn named_monodromies() -> [(&'static str, Monodromy); 4] {
    [("A_-3", A_NEG3), ("A_-4", A_NEG4), ("A_-4^T", A_NEG4.transpose()), ("A_-6", A_NEG6)]
}

/// One matrix per SL(2,ℤ) conjugacy class of trace `tau`.
pub fn sl2_trace_classes(tau: i64) -> Result<Vec<Monodromy>> {
    if tau.abs() <= 2 {
        return Err(Error::NotHyperbolic(tau));
    }
    form_classes(tau * tau - 4)?
        .iter()
        .map(|cycle| matrix_of_form(&cycle[0], tau))
        .collect()
}

fn check_pair(a: &Monodromy, b: &Monodromy) -> Result<()> {
    if a.trace() != b.trace() {
        return Err(Error::TraceMismatch(a.trace(), b.trace()));
    }
    if !a.is_hyperbolic() {
        return Err(Error::NotHyperbolic(a.trace()));
    }
    Ok(())
}

pub fn conjugate_sl2(a: &Monodromy, b: &Monodromy) -> Result<bool> {
    check_pair(a, b)?;
    forms_equivalent(&form_of_matrix(a), &form_of_matrix(b))
}

pub fn conjugate_gl2(a: &Monodromy, b: &Monodromy) -> Result<bool> {
    Ok(conjugate_sl2(a, b)? || conjugate_sl2(&a.flip(), b)?)
}
