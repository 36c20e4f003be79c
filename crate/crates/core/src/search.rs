//! Random-restart numeric search for SU(2) representations of a finitely
//! presented group.
//!
//! Each restart starts from Haar-random generator images and runs a
//! Levenberg–Marquardt iteration on `f(ρ) = Σ ‖ρ(r) − 1‖²`. Steps live in the
//! tangent space: every image is updated as `g ← g·exp(δ)`.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector, Matrix3, SymmetricEigen, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::group::{is_abelian_rep, max_commutator, relator_residual, GroupPresentation, Representation};
use crate::quaternion::{ImaginaryUnitVector, UnitQuaternion};

pub const COMMUTATOR_TOL: f64 = 1e-6;
pub const DEDUP_RESOLUTION: f64 = 1e-4;
pub const MAX_ITERS: usize = 2000;
/// Converged points with commutators below this are tested against the
/// nearest abelian configuration.
pub const SNAP_RADIUS: f64 = 1e-2;

const BASIS: [UnitQuaternion; 3] = [UnitQuaternion::I, UnitQuaternion::J, UnitQuaternion::K];
const POLISH_STEPS: usize = 8;
const STALL_WINDOW: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepClass {
    Abelian,
    Nonabelian,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoundRep {
    pub rep: Representation,
    pub residual: f64,
    pub class: RepClass,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub found: Vec<FoundRep>,
    pub restarts_used: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl SearchReport {
    pub fn nonabelian(&self) -> impl Iterator<Item = &FoundRep> {
        self.found.iter().filter(|f| f.class == RepClass::Nonabelian)
    }

    pub fn has_nonabelian(&self) -> bool {
        self.nonabelian().next().is_some()
    }

    /// A negative outcome is only ever a statement about this search.
    pub fn caveat(&self) -> Option<String> {
        (!self.has_nonabelian()).then(|| {
            format!("no non-abelian representation found after {} restarts", self.restarts_used)
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub restarts: usize,
    pub seed: u64,
    pub tol: f64,
    /// Stop after the first batch of restarts that contains a non-abelian point.
    pub stop_at_nonabelian: bool,
    pub max_iters: usize,
}

impl SearchOptions {
    pub fn new(restarts: usize, seed: u64, tol: f64) -> Self {
        Self { restarts, seed, tol, stop_at_nonabelian: false, max_iters: MAX_ITERS }
    }

    pub fn stop_early(mut self) -> Self {
        self.stop_at_nonabelian = true;
        self
    }
}

/// Relators expanded into letters `(generator, inverted)`.
struct Problem {
    rank: usize,
    relators: Vec<Vec<(usize, bool)>>,
}

impl Problem {
    fn new(pres: &GroupPresentation) -> Self {
        Self { rank: pres.rank(), relators: pres.relators.iter().map(|r| r.letters().collect()).collect() }
    }

    fn objective(&self, images: &[UnitQuaternion]) -> f64 {
        self.relators.iter().map(|r| sq_dist_one(&self.eval(images, r))).sum()
    }

    fn eval(&self, images: &[UnitQuaternion], letters: &[(usize, bool)]) -> UnitQuaternion {
        letters.iter().fold(UnitQuaternion::ONE, |acc, &(g, inv)| {
            UnitQuaternion::mul_raw(&acc, &letter(images, g, inv))
        })
    }

    /// Residual vector (4 per relator) and its Jacobian with respect to the
    /// tangent coordinates (3 per generator).
    fn linearize(&self, images: &[UnitQuaternion]) -> (DVector<f64>, DMatrix<f64>) {
        let rows = 4 * self.relators.len();
        let mut res = DVector::zeros(rows);
        let mut jac = DMatrix::zeros(rows, 3 * self.rank);
        let mut prefix = Vec::new();
        let mut suffix = Vec::new();
        for (ri, letters) in self.relators.iter().enumerate() {
            let m = letters.len();
            prefix.clear();
            prefix.push(UnitQuaternion::ONE);
            for &(g, inv) in letters {
                let last = *prefix.last().unwrap();
                prefix.push(UnitQuaternion::mul_raw(&last, &letter(images, g, inv)));
            }
            suffix.clear();
            suffix.resize(m + 1, UnitQuaternion::ONE);
            for p in (0..m).rev() {
                let (g, inv) = letters[p];
                suffix[p] = UnitQuaternion::mul_raw(&letter(images, g, inv), &suffix[p + 1]);
            }
            let w = prefix[m].as_array();
            for c in 0..4 {
                res[4 * ri + c] = w[c] - if c == 0 { 1.0 } else { 0.0 };
            }
            for (p, &(g, inv)) in letters.iter().enumerate() {
                for (a, u) in BASIS.iter().enumerate() {
                    // d/dδ of (g·exp(δ)) is g·u, of (g·exp(δ))⁻¹ is −u·g⁻¹
                    let d = if inv {
                        let t = UnitQuaternion::mul_raw(&prefix[p], u);
                        let t = UnitQuaternion::mul_raw(&t, &suffix[p]);
                        [-t.w, -t.x, -t.y, -t.z]
                    } else {
                        let t = UnitQuaternion::mul_raw(&prefix[p + 1], u);
                        UnitQuaternion::mul_raw(&t, &suffix[p + 1]).as_array()
                    };
                    for c in 0..4 {
                        jac[(4 * ri + c, 3 * g + a)] += d[c];
                    }
                }
            }
        }
        (res, jac)
    }
}

fn letter(images: &[UnitQuaternion], g: usize, inv: bool) -> UnitQuaternion {
    if inv {
        images[g].inverse()
    } else {
        images[g]
    }
}

fn sq_dist_one(q: &UnitQuaternion) -> f64 {
    let d = q.w - 1.0;
    d * d + q.x * q.x + q.y * q.y + q.z * q.z
}

fn step(images: &[UnitQuaternion], delta: &DVector<f64>) -> Vec<UnitQuaternion> {
    images
        .iter()
        .enumerate()
        .map(|(k, g)| *g * UnitQuaternion::exp_vec(delta[3 * k], delta[3 * k + 1], delta[3 * k + 2]))
        .collect()
}

/// Local minimization; returns the final images and objective value.
fn minimize(problem: &Problem, start: Vec<UnitQuaternion>, tol: f64, max_iters: usize) -> (Vec<UnitQuaternion>, f64) {
    let tol2 = tol * tol;
    let mut images = start;
    let mut f = problem.objective(&images);
    let mut lambda = 1e-3;
    let mut polish: Option<usize> = None;
    let mut history = Vec::with_capacity(max_iters.min(256));
    for _ in 0..max_iters {
        if f < tol2 && polish.is_none() {
            polish = Some(POLISH_STEPS);
        }
        match polish {
            Some(0) => break,
            Some(ref mut n) => *n -= 1,
            None => {}
        }
        if f == 0.0 || problem.relators.is_empty() {
            break;
        }
        let (res, jac) = problem.linearize(&images);
        let grad = jac.tr_mul(&res);
        if grad.norm() < 1e-300 {
            break;
        }
        let normal = jac.tr_mul(&jac);
        let mut accepted = false;
        for _ in 0..30 {
            let mut a = normal.clone();
            for i in 0..a.nrows() {
                a[(i, i)] += lambda;
            }
            let Some(chol) = a.cholesky() else {
                lambda *= 4.0;
                continue;
            };
            let delta = -chol.solve(&grad);
            let trial = step(&images, &delta);
            let ft = problem.objective(&trial);
            if ft < f {
                images = trial;
                f = ft;
                lambda = (lambda / 3.0).max(1e-15);
                accepted = true;
                break;
            }
            lambda *= 4.0;
        }
        if !accepted {
            break;
        }
        history.push(f);
        if polish.is_none() && history.len() > STALL_WINDOW {
            let old = history[history.len() - 1 - STALL_WINDOW];
            if f > 0.999 * old {
                break;
            }
        }
    }
    (images, f)
}

fn haar(rng: &mut ChaCha8Rng) -> UnitQuaternion {
    let mut c = [0.0f64; 4];
    for x in &mut c {
        *x = rng.sample(StandardNormal);
    }
    UnitQuaternion::from_array(c)
}

/// RNG for restart `index`; independent of the order restarts are executed in.
fn restart_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn run_restart(problem: &Problem, pres: &GroupPresentation, opts: &SearchOptions, index: usize) -> Option<FoundRep> {
    let mut rng = restart_rng(opts.seed, index);
    let start = (0..problem.rank).map(|_| haar(&mut rng)).collect();
    let (images, f) = minimize(problem, start, opts.tol, opts.max_iters);
    if f >= opts.tol * opts.tol {
        return None;
    }
    let mut rep = Representation::new(images);
    let mut residual = relator_residual(pres, &rep).ok()?;
    if max_commutator(&rep) < SNAP_RADIUS {
        if let Some(snapped) = snap_abelian(pres, &rep) {
            let r = relator_residual(pres, &snapped).ok()?;
            if r <= opts.tol {
                rep = snapped;
                residual = r;
            }
        }
    }
    (residual <= opts.tol).then(|| classify(rep, residual))
}

/// Nearest abelian configuration: images projected onto a common axis, then
/// angles corrected so every relator's exponent sum vanishes mod 2π.
///
/// Near a degenerate zero of `f` the descent stalls at points whose
/// commutators are far above round-off; this recovers the abelian zero.
fn snap_abelian(pres: &GroupPresentation, rep: &Representation) -> Option<Representation> {
    let mut scatter = Matrix3::zeros();
    for q in &rep.images {
        let v = Vector3::new(q.x, q.y, q.z);
        scatter += v * v.transpose();
    }
    let eig = SymmetricEigen::new(scatter);
    let (k, _) = eig.eigenvalues.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1))?;
    let v = eig.eigenvectors.column(k).into_owned();
    let axis = ImaginaryUnitVector::new(v[0], v[1], v[2])?;
    let mut theta = DVector::from_iterator(
        rep.len(),
        rep.images.iter().map(|q| (q.x * axis.x + q.y * axis.y + q.z * axis.z).atan2(q.w)),
    );
    let rows = pres.exponent_matrix();
    if !rows.is_empty() {
        let e = DMatrix::from_fn(rows.len(), rep.len(), |i, j| rows[i][j] as f64);
        let pinv = e.clone().pseudo_inverse(1e-10).ok()?;
        for _ in 0..4 {
            let wrapped = (&e * &theta).map(|phi| phi - TAU * (phi / TAU).round());
            if wrapped.amax() < 1e-15 {
                break;
            }
            theta -= &pinv * wrapped;
        }
    }
    Some(Representation::new(theta.iter().map(|&t| UnitQuaternion::exp(axis, t)).collect()))
}

fn classify(rep: Representation, residual: f64) -> FoundRep {
    let class = if is_abelian_rep(&rep, COMMUTATOR_TOL) { RepClass::Abelian } else { RepClass::Nonabelian };
    FoundRep { rep, residual, class }
}

/// Traces of generators, pairwise products and pairwise commutators.
pub fn trace_coordinates(rep: &Representation) -> Vec<f64> {
    let g = &rep.images;
    let mut out: Vec<f64> = g.iter().map(UnitQuaternion::trace).collect();
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            out.push((g[a] * g[b]).trace());
            out.push(UnitQuaternion::commutator(g[a], g[b]).trace());
        }
    }
    out
}

fn dedup(mut found: Vec<FoundRep>) -> Vec<FoundRep> {
    let mut keyed: Vec<(Vec<f64>, FoundRep)> =
        found.drain(..).map(|f| (trace_coordinates(&f.rep), f)).collect();
    keyed.sort_by(|x, y| x.1.residual.total_cmp(&y.1.residual).then_with(|| cmp_vec(&x.0, &y.0)));
    let mut kept: Vec<(Vec<f64>, FoundRep)> = Vec::new();
    for (t, f) in keyed {
        let dup = kept.iter().any(|(s, _)| s.iter().zip(&t).all(|(a, b)| (a - b).abs() < DEDUP_RESOLUTION));
        if !dup {
            kept.push((t, f));
        }
    }
    kept.into_iter().map(|(_, f)| f).collect()
}

fn cmp_vec(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

#[cfg(feature = "parallel")]
fn run_batch(problem: &Problem, pres: &GroupPresentation, opts: &SearchOptions, range: std::ops::Range<usize>) -> Vec<FoundRep> {
    use rayon::prelude::*;
    let found: Vec<Option<FoundRep>> =
        range.into_par_iter().map(|i| run_restart(problem, pres, opts, i)).collect();
    found.into_iter().flatten().collect()
}

#[cfg(not(feature = "parallel"))]
fn run_batch(problem: &Problem, pres: &GroupPresentation, opts: &SearchOptions, range: std::ops::Range<usize>) -> Vec<FoundRep> {
    range.filter_map(|i| run_restart(problem, pres, opts, i)).collect()
}

const BATCH: usize = 16;

pub fn search_with(pres: &GroupPresentation, opts: &SearchOptions) -> SearchReport {
    let problem = Problem::new(pres);
    let mut found = Vec::new();
    let mut done = 0;
    while done < opts.restarts {
        let end = if opts.stop_at_nonabelian { (done + BATCH).min(opts.restarts) } else { opts.restarts };
        let batch = run_batch(&problem, pres, opts, done..end);
        let hit = batch.iter().any(|f| f.class == RepClass::Nonabelian);
        found.extend(batch);
        done = end;
        if opts.stop_at_nonabelian && hit {
            break;
        }
    }
    SearchReport { found: dedup(found), restarts_used: done, seed: opts.seed, tolerance: opts.tol }
}

pub fn search(pres: &GroupPresentation, restarts: usize, seed: u64, tol: f64) -> SearchReport {
    search_with(pres, &SearchOptions::new(restarts, seed, tol))
}

/// Local minimization from `rep`. The result may still have residual above
/// `tol` if the start lies in the basin of a non-zero local minimum.
pub fn refine(pres: &GroupPresentation, rep: &Representation, tol: f64) -> Representation {
    let problem = Problem::new(pres);
    let (images, _) = minimize(&problem, rep.images.clone(), tol, MAX_ITERS);
    Representation::new(images)
}

/// `Σ ‖ρ(r) − 1‖²` over all relators.
pub fn objective(pres: &GroupPresentation, rep: &Representation) -> f64 {
    Problem::new(pres).objective(&rep.images)
}

/// Gradient of [`objective`] in the tangent coordinates `g ← g·exp(δ)`, one
/// 3-vector per generator.
pub fn tangent_gradient(pres: &GroupPresentation, rep: &Representation) -> Vec<[f64; 3]> {
    let (res, jac) = Problem::new(pres).linearize(&rep.images);
    let g = jac.tr_mul(&res) * 2.0;
    (0..rep.len()).map(|k| [g[3 * k], g[3 * k + 1], g[3 * k + 2]]).collect()
}
