mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use su2abelian::group::{is_abelian_rep, parse_presentation, relator_residual, GroupPresentation, Representation};
use su2abelian::homology::{abelianization, AbelianGroup};
use su2abelian::polygon::{delta_2333, PolygonSignature};
use su2abelian::quaternion::UnitQuaternion;
use su2abelian::search::{
    objective, refine, search, search_with, tangent_gradient, RepClass, SearchOptions, COMMUTATOR_TOL,
};
use su2abelian::seifert::{self, pi1_presentation, BaseSurface, SeifertInvariants};

use common::*;

fn haar(rng: &mut ChaCha8Rng, n: usize) -> Representation {
    Representation::new(
        (0..n)
            .map(|_| {
                let c: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
                UnitQuaternion::from_array(c)
            })
            .collect(),
    )
}

fn test_presentations() -> Vec<GroupPresentation> {
    vec![
        parse_presentation(M016).unwrap(),
        parse_presentation(M118).unwrap(),
        fibonacci(8),
        PolygonSignature::new(vec![2, 3, 3, 3]).unwrap().presentation(),
        pi1_presentation(&SeifertInvariants::s2(&[(2, 1), (3, -1), (5, 2)]).unwrap()),
    ]
}

#[test]
fn gradient_matches_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let h = 1e-6;
    for pres in test_presentations() {
        for _ in 0..100 {
            let rep = haar(&mut rng, pres.rank());
            let analytic = tangent_gradient(&pres, &rep);
            let mut num = Vec::new();
            for k in 0..rep.len() {
                let mut g = [0.0; 3];
                for (a, slot) in g.iter_mut().enumerate() {
                    let shifted = |s: f64| {
                        let mut d = [0.0; 3];
                        d[a] = s;
                        let mut r = rep.clone();
                        r.images[k] = r.images[k] * UnitQuaternion::exp_vec(d[0], d[1], d[2]);
                        objective(&pres, &r)
                    };
                    *slot = (shifted(h) - shifted(-h)) / (2.0 * h);
                }
                num.push(g);
            }
            let diff: f64 = analytic.iter().flatten().zip(num.iter().flatten()).map(|(x, y)| (x - y).powi(2)).sum();
            let scale: f64 = num.iter().flatten().map(|y| y * y).sum();
            assert!(diff.sqrt() <= 1e-5 * scale.sqrt().max(1e-8), "{pres}: {}", diff.sqrt() / scale.sqrt());
        }
    }
}

#[test]
fn reports_are_sound_and_consistent() {
    for pres in test_presentations() {
        let report = search(&pres, 40, 5, 1e-9);
        for f in &report.found {
            let r = relator_residual(&pres, &f.rep).unwrap();
            assert!(r <= 1e-9, "{pres}: residual {r}");
            assert_eq!(f.class == RepClass::Abelian, is_abelian_rep(&f.rep, COMMUTATOR_TOL));
        }
        assert_eq!(report.restarts_used, 40);
        assert_eq!(report.seed, 5);
    }
}

#[test]
fn deterministic_across_calls() {
    let pres = PolygonSignature::new(vec![3, 3, 4]).unwrap().presentation();
    let a = search(&pres, 30, 9, 1e-9);
    let b = search(&pres, 30, 9, 1e-9);
    assert_eq!(a, b);
    let c = search_with(&pres, &SearchOptions::new(30, 9, 1e-9).stop_early());
    let d = search_with(&pres, &SearchOptions::new(30, 9, 1e-9).stop_early());
    assert_eq!(c, d);
    assert!(c.has_nonabelian());
}

#[test]
fn negative_outcomes_carry_caveat() {
    let report = search(&parse_presentation(M016).unwrap(), 200, 7, 1e-9);
    assert!(!report.has_nonabelian());
    assert_eq!(report.caveat().as_deref(), Some("no non-abelian representation found after 200 restarts"));
}

#[test]
fn refine_recovers_perturbed_witness() {
    let pres = PolygonSignature::new(vec![2, 3, 3, 3]).unwrap().presentation();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let exact = Representation::new(delta_2333().to_vec());
    for _ in 0..10 {
        let noisy = Representation::new(
            exact
                .images
                .iter()
                .map(|q| {
                    let d: [f64; 3] = std::array::from_fn(|_| 1e-3 * rng.sample::<f64, _>(StandardNormal));
                    *q * UnitQuaternion::exp_vec(d[0], d[1], d[2])
                })
                .collect(),
        );
        let out = refine(&pres, &noisy, 1e-12);
        assert!(relator_residual(&pres, &out).unwrap() < 1e-12);
        assert!(!is_abelian_rep(&out, COMMUTATOR_TOL));
    }
    let same = refine(&pres, &exact, 1e-12);
    for (a, b) in same.images.iter().zip(&exact.images) {
        assert!(a.distance(b) < 1e-14);
    }
}

#[test]
fn refine_reports_critical_point_honestly() {
    // a = i is a critical point of 2 − 2cos 2θ with value 4
    let pres = parse_presentation("<a | a^2>").unwrap();
    let start = Representation::new(vec![UnitQuaternion::I]);
    let out = refine(&pres, &start, 1e-9);
    assert!(out.images[0].distance(&UnitQuaternion::I) < 1e-14);
    assert!((relator_residual(&pres, &out).unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn abelianization_matches_seifert_h1() {
    let small = pairs(1..=5, 3);
    for base in [BaseSurface::S2, BaseSurface::RP2, BaseSurface::T2, BaseSurface::NonorientableGenus(2)] {
        for n in 0..=3 {
            for ps in multisets(&small, n) {
                let s = SeifertInvariants::new(base, ps).unwrap();
                assert_eq!(abelianization(&pi1_presentation(&s)), seifert::h1(&s), "{s}");
            }
        }
    }
}

#[test]
fn abelianization_examples() {
    assert_eq!(abelianization(&fibonacci(8)), AbelianGroup { rank: 0, torsion: vec![3, 15] });
    assert_eq!(abelianization(&parse_presentation("<a | a^5>").unwrap()), AbelianGroup::cyclic(5));
    assert_eq!(abelianization(&parse_presentation(M016).unwrap()), AbelianGroup::cyclic(37));
}
