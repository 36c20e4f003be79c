//! Continued fractions, lens spaces, splices of torus knot exteriors, and
//! the lens-space filling tables of the `M_g` family.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `a₁ + 1/(a₂ + 1/(… + 1/a_k))`, evaluated right to left.
pub fn cfrac_eval(coeffs: &[i64]) -> Result<Ratio<i64>> {
    let (&last, rest) = coeffs
        .split_last()
        .ok_or_else(|| Error::OutOfRange("empty continued fraction".into()))?;
    let mut x = Ratio::from_integer(last);
    for &a in rest.iter().rev() {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        x = Ratio::from_integer(a) + x.recip();
    }
    Ok(x)
}

/// Expansion with every coefficient after the first positive.
pub fn cfrac_of(x: Ratio<i64>) -> Vec<i64> {
    let mut out = Vec::new();
    let mut x = x;
    loop {
        let a = x.floor();
        out.push(a.to_integer());
        let frac = x - a;
        if frac.is_zero() {
            return out;
        }
        x = frac.recip();
    }
}

/// Parses `[a1, a2, …]` (brackets optional).
pub fn parse_cfrac(text: &str) -> Result<Vec<i64>> {
    let t = text.trim();
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t);
    let mut out = Vec::new();
    let mut pos = t.len() - t.trim_start_matches('[').len();
    for part in inner.split(',') {
        let v = part.trim();
        let value = v
            .parse()
            .map_err(|_| Error::parse(pos, format!("expected integer, found `{v}`")))?;
        out.push(value);
        pos += part.len() + 1;
    }
    Ok(out)
}

/// `L(p, q)` with `q` reduced into `[0, p)`; `L(1, 0)` is S³ and `L(0, 1)` is S¹×S².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    pub p: i64,
    pub q: i64,
}

impl LensSpace {
    /// Accepts any coprime `(p, q)`; `L(−p, q)` is stored as `L(p, −q)`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::OutOfRange(format!("L({p},{q}) needs gcd(p, q) = 1")));
        }
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        Ok(match p {
            0 => Self { p: 0, q: 1 },
            _ => Self { p, q: q.rem_euclid(p) },
        })
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

fn mod_inverse(q: i64, p: i64) -> Option<i64> {
    let e = q.extended_gcd(&p);
    (e.gcd == 1).then(|| e.x.rem_euclid(p))
}

/// `p₁ = p₂` and `q₂ ≡ ±q₁^{±1} (mod p)`.
pub fn lens_homeo(l1: &LensSpace, l2: &LensSpace) -> bool {
    if l1.p != l2.p {
        return false;
    }
    let p = l1.p;
    if p <= 1 {
        return true;
    }
    let inv = mod_inverse(l1.q, p).expect("coprime by construction");
    [l1.q, inv].iter().any(|&c| (l2.q - c).rem_euclid(p) == 0 || (l2.q + c).rem_euclid(p) == 0)
}

/// The graph manifold `Y(T_{a,b}, T_{c,d})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpliceDescriptor {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SpliceDescriptor {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let torus_knot = |x: i64, y: i64| x.abs() >= 2 && y.abs() >= 2 && x.gcd(&y) == 1;
        if !(torus_knot(a, b) && torus_knot(c, d)) {
            return Err(Error::InvalidSplice(a, b, c, d));
        }
        Ok(Self { a, b, c, d })
    }
}

impl fmt::Display for SpliceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y(T({},{}), T({},{}))", self.a, self.b, self.c, self.d)
    }
}

/// Order of the cyclic group `H₁`: `|abcd − 1|`.
pub fn splice_h1(s: &SpliceDescriptor) -> i64 {
    (s.a * s.b * s.c * s.d - 1).abs()
}

/// A lens-space filling together with the continued fraction describing its slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensFilling {
    pub lens: LensSpace,
    pub cfrac: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingTable {
    pub g: i64,
    pub r_t: SpliceDescriptor,
    pub r_2: LensFilling,
    pub r_11: LensFilling,
    pub r_13: LensFilling,
}

impl FillingTable {
    /// Named consistency checks between the table entries and their formulas.
    pub fn cross_checks(&self) -> Vec<(String, bool)> {
        let g = self.g;
        let mut checks = Vec::new();
        for (name, f) in [("r_2", &self.r_2), ("r_11", &self.r_11), ("r_13", &self.r_13)] {
            let ok = cfrac_eval(&f.cfrac).is_ok_and(|x| lens_matches(&f.lens, x));
            checks.push((format!("{name}: {:?} evaluates to {}", f.cfrac, f.lens), ok));
        }
        let order = 12 * (2 * g + 1) - 1;
        checks.push((format!("r_T: |H1| = 12(2g+1) - 1 = {order}"), splice_h1(&self.r_t) == order));
        let ps = [self.r_2.lens.p, self.r_11.lens.p, self.r_13.lens.p];
        checks.push((
            "lens orders pairwise distinct".to_string(),
            ps[0] != ps[1] && ps[0] != ps[2] && ps[1] != ps[2],
        ));
        checks
    }
}

fn lens_matches(l: &LensSpace, x: Ratio<i64>) -> bool {
    LensSpace::new(*x.numer(), *x.denom()).is_ok_and(|m| m == *l)
}

fn filling(cfrac: Vec<i64>) -> LensFilling {
    let x = cfrac_eval(&cfrac).expect("table fractions have nonzero tails");
    let lens = LensSpace::new(*x.numer(), *x.denom()).expect("reduced fraction");
    LensFilling { lens, cfrac }
}

/// The four SU(2)-cyclic fillings of `M_g`, `g ≥ 1`.
pub fn mg_fillings(g: i64) -> Result<FillingTable> {
    if g < 1 {
        return Err(Error::OutOfRange(format!("g must be at least 1, got {g}")));
    }
    Ok(FillingTable {
        g,
        r_t: SpliceDescriptor::new(2, 3, 2, 2 * g + 1)?,
        r_2: filling(vec![g + 2, 2]),
        r_11: filling(vec![g + 1, -2, 1, 2, -2, -1]),
        r_13: filling(vec![g, 1, 1, 1, 1, 2]),
    })
}

/// Conjectural lens fillings `L(2g−3,2)`, `L(11g+8,11)`, `L(13g+5,13)` of
/// `M_{−g−1}` (up to orientation), with the graph manifold `Y(T_{2,3}, T_{2,−(2g+1)})`.
pub fn mg_negative_unverified(g: i64) -> Result<(SpliceDescriptor, [LensSpace; 3])> {
    if g < 1 {
        return Err(Error::OutOfRange(format!("g must be at least 1, got {g}")));
    }
    Ok((
        SpliceDescriptor::new(2, 3, 2, -(2 * g + 1))?,
        [
            LensSpace::new(2 * g - 3, 2)?,
            LensSpace::new(11 * g + 8, 11)?,
            LensSpace::new(13 * g + 5, 13)?,
        ],
    ))
}

/// `{ |n·ab + 1| : 0 < |n| ≤ nmax }`.
pub fn torus_knot_lens_orders(a: i64, b: i64, nmax: i64) -> Result<BTreeSet<i64>> {
    if a.abs() < 2 || b.abs() < 2 || a.gcd(&b) != 1 {
        return Err(Error::InvalidTorusKnot(a, b));
    }
    Ok((-nmax..=nmax).filter(|&n| n != 0).map(|n| (n * a * b + 1).abs()).collect())
}

/// Coprime `2 ≤ a < b ≤ bound` with `ab` dividing `11g+3±1` and `13g+8±1`.
pub fn torus_surgery_11_13(g: i64, bound: i64) -> BTreeSet<(i64, i64)> {
    let divides_one = |m: i64, x: i64| (x - 1) % m == 0 || (x + 1) % m == 0;
    let mut out = BTreeSet::new();
    for a in 2..=bound {
        for b in a + 1..=bound {
            let m = a * b;
            if a.gcd(&b) == 1 && divides_one(m, 11 * g + 3) && divides_one(m, 13 * g + 8) {
                out.insert((a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens(p: i64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cfrac_eval(&[3, 2]), Ok(Ratio::new(7, 2)));
        assert_eq!(cfrac_eval(&[2, -2, 1, 2, -2, -1]), Ok(Ratio::new(14, 11)));
        assert_eq!(cfrac_eval(&[5]), Ok(Ratio::from_integer(5)));
        assert_eq!(cfrac_eval(&[1, 0]), Err(Error::DivisionByZero));
        assert_eq!(cfrac_eval(&[1, 1, -1]), Err(Error::DivisionByZero));
        assert!(cfrac_eval(&[]).is_err());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(cfrac_of(Ratio::new(7, 2)), vec![3, 2]);
        assert_eq!(cfrac_of(Ratio::new(21, 13)), vec![1, 1, 1, 1, 1, 2]);
        assert_eq!(cfrac_of(Ratio::from_integer(5)), vec![5]);
        assert_eq!(cfrac_of(Ratio::new(-7, 2)), vec![-4, 2]);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_cfrac("[3,2]"), Ok(vec![3, 2]));
        assert_eq!(parse_cfrac(" [2, -2, 1] "), Ok(vec![2, -2, 1]));
        assert_eq!(parse_cfrac("5"), Ok(vec![5]));
        assert!(parse_cfrac("[3,x]").unwrap_err().is_parse_error());
    }

    #[test]
    fn lens_examples() {
        assert!(lens_homeo(&lens(7, 2), &lens(7, 4)));
        assert!(!lens_homeo(&lens(5, 1), &lens(5, 2)));
        assert!(lens_homeo(&lens(11, 3), &lens(11, 3)));
        assert!(lens_homeo(&lens(7, 2), &lens(7, 5)));
        assert_eq!(lens(1, 5), LensSpace { p: 1, q: 0 });
        assert_eq!(lens(0, -1), LensSpace { p: 0, q: 1 });
        assert_eq!(lens(-1, 2), LensSpace { p: 1, q: 0 });
        assert!(LensSpace::new(4, 2).is_err());
    }

    #[test]
    fn splice_examples() {
        assert_eq!(splice_h1(&SpliceDescriptor::new(2, 3, 2, 3).unwrap()), 35);
        assert_eq!(splice_h1(&SpliceDescriptor::new(2, 3, -2, 3).unwrap()), 37);
        assert_eq!(SpliceDescriptor::new(1, 1, 2, 3), Err(Error::InvalidSplice(1, 1, 2, 3)));
        assert!(SpliceDescriptor::new(2, 4, 2, 3).is_err());
    }

    #[test]
    fn filling_tables() {
        let t = mg_fillings(1).unwrap();
        assert_eq!(t.r_2.lens, lens(7, 2));
        assert_eq!(t.r_11.lens, lens(14, 11));
        assert_eq!(t.r_13.lens, lens(21, 13));
        assert_eq!(t.r_t, SpliceDescriptor::new(2, 3, 2, 3).unwrap());
        assert!(t.cross_checks().iter().all(|c| c.1), "{:?}", t.cross_checks());

        let t = mg_fillings(2).unwrap();
        assert_eq!([t.r_2.lens, t.r_11.lens, t.r_13.lens], [lens(9, 2), lens(25, 11), lens(34, 13)]);
        assert_eq!(t.r_t, SpliceDescriptor::new(2, 3, 2, 5).unwrap());
        assert!(mg_fillings(0).is_err());
    }

    #[test]
    fn negative_family() {
        let (y, l) = mg_negative_unverified(1).unwrap();
        assert_eq!(splice_h1(&y), 37);
        assert_eq!(l[0], lens(1, 0));
        assert_eq!(l[1], lens(19, 11));
        assert_eq!(l[2], lens(18, 13));
    }

    #[test]
    fn torus_knot_orders() {
        assert_eq!(torus_knot_lens_orders(3, 17, 2).unwrap(), BTreeSet::from([50, 52, 101, 103]));
        assert_eq!(torus_knot_lens_orders(2, 3, 1).unwrap(), BTreeSet::from([5, 7]));
        assert_eq!(torus_knot_lens_orders(1, 5, 1), Err(Error::InvalidTorusKnot(1, 5)));
    }

    #[test]
    fn torus_surgery_examples() {
        let allowed = BTreeSet::from([(3, 17)]);
        assert!(torus_surgery_11_13(1, 20).is_subset(&allowed));
        assert!(torus_surgery_11_13(5, 20).is_subset(&allowed));
        assert!(torus_surgery_11_13(1, 2).is_empty());
    }
}
