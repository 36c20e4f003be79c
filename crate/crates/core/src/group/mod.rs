//! Finitely presented groups, words, and SU(2) representations.

mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::UnitQuaternion;

pub use parse::parse_presentation;

/// A word as a sequence of `(generator index, nonzero exponent)` syllables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    /// A single syllable `g^e`.
    pub fn power(g: usize, e: i64) -> Self {
        let mut w = Self::new();
        w.push(g, e);
        w
    }

    pub fn generator(g: usize) -> Self {
        Self::power(g, 1)
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: usize, b: usize) -> Self {
        let mut w = Self::generator(a);
        w.push(b, 1);
        w.push(a, -1);
        w.push(b, -1);
        w
    }

    pub fn from_syllables(syllables: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Self::new();
        for (g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    /// Appends `g^e`, merging with a trailing syllable on the same generator.
    pub fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((last, k)) if *last == g => {
                *k += e;
                if *k == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn append(&mut self, other: &Word) {
        for &(g, e) in &other.syllables {
            self.push(g, e);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> Word {
        Word::from_syllables(self.syllables.iter().rev().map(|&(g, e)| (g, -e)))
    }

    /// `self` repeated `k` times; negative `k` repeats the inverse.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::new();
        for _ in 0..k.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letters as `(generator, inverted)` pairs, left to right.
    pub fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e < 0), e.unsigned_abs() as usize))
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new<S: Into<String>>(generators: impl IntoIterator<Item = S>) -> Self {
        Self {
            generators: generators.into_iter().map(Into::into).collect(),
            relators: Vec::new(),
        }
    }

    pub fn with_relators(mut self, relators: impl IntoIterator<Item = Word>) -> Self {
        self.relators.extend(relators);
        self
    }

    pub fn add_relator(&mut self, w: Word) {
        self.relators.push(w);
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for &(g, e) in r.syllables() {
                    row[g] += e;
                }
                row
            })
            .collect()
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.syllables()
            .iter()
            .map(|&(g, e)| match e {
                1 => self.generators[g].clone(),
                _ => format!("{}^{}", self.generators[g], e),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

/// An assignment of a unit quaternion to each generator, in generator order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Representation {
    pub images: Vec<UnitQuaternion>,
}

impl Representation {
    pub fn new(images: Vec<UnitQuaternion>) -> Self {
        Self { images }
    }

    pub fn trivial(n: usize) -> Self {
        Self { images: vec![UnitQuaternion::ONE; n] }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Conjugates every image by `g`.
    pub fn conjugated_by(&self, g: UnitQuaternion) -> Self {
        Self { images: self.images.iter().map(|q| q.conjugated_by(g)).collect() }
    }
}

/// Left-to-right product of the images along `word`.
pub fn eval_word(rep: &Representation, word: &Word) -> Result<UnitQuaternion> {
    let mut acc = UnitQuaternion::ONE;
    for &(g, e) in word.syllables() {
        let q = rep
            .images
            .get(g)
            .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?;
        acc = acc * q.pow(e);
    }
    Ok(acc)
}

/// Largest distance `‖ρ(r) − 1‖` over all relators; 0 with no relators.
pub fn relator_residual(pres: &GroupPresentation, rep: &Representation) -> Result<f64> {
    if rep.len() != pres.rank() {
        return Err(Error::ArityMismatch { expected: pres.rank(), got: rep.len() });
    }
    pres.relators.iter().try_fold(0.0f64, |m, r| {
        let v = eval_word(rep, r)?;
        Ok(m.max(v.distance(&UnitQuaternion::ONE)))
    })
}

/// Largest `‖[ρ(g), ρ(h)] − 1‖` over generator pairs.
pub fn max_commutator(rep: &Representation) -> f64 {
    let mut worst = 0.0f64;
    for (a, qa) in rep.images.iter().enumerate() {
        for qb in &rep.images[a + 1..] {
            worst = worst.max(UnitQuaternion::commutator(*qa, *qb).distance(&UnitQuaternion::ONE));
        }
    }
    worst
}

pub fn is_abelian_rep(rep: &Representation, tol: f64) -> bool {
    max_commutator(rep) <= tol
}
