mod common;

use su2abelian::forms::{
    class_number, conjugate_gl2, conjugate_sl2, form_classes, form_of_matrix, forms_equivalent, matrix_of_form,
    reduce_form_cycle, sl2_trace_classes, BinaryQuadraticForm,
};
use su2abelian::sol::Monodromy;

use common::sl2_box;

/// `P` with entries in `[−bound, bound]`, `det P = det`, `P A = B P`.
fn bounded_conjugator(a: &Monodromy, b: &Monodromy, det: i64, bound: i64) -> Option<[i64; 4]> {
    let ([a11, a12], [a21, a22]) = (a.rows()[0], a.rows()[1]);
    let ([b11, b12], [b21, b22]) = (b.rows()[0], b.rows()[1]);
    assert!(b12 != 0, "hyperbolic matrices are not triangular");
    for p in -bound..=bound {
        for q in -bound..=bound {
            // first row of P A = B P determines r and s
            let rn = p * a11 + q * a21 - b11 * p;
            let sn = p * a12 + q * a22 - b11 * q;
            if rn % b12 != 0 || sn % b12 != 0 {
                continue;
            }
            let (r, s) = (rn / b12, sn / b12);
            if r.abs() > bound || s.abs() > bound || p * s - q * r != det {
                continue;
            }
            let second_row_ok = r * a11 + s * a21 == b21 * p + b22 * r && r * a12 + s * a22 == b21 * q + b22 * s;
            if second_row_ok {
                return Some([p, q, r, s]);
            }
        }
    }
    None
}

fn matrices_with_trace(tau: i64, r: i64) -> Vec<Monodromy> {
    sl2_box(r)
        .into_iter()
        .filter(|m| m[0] + m[3] == tau)
        .map(|[a, b, c, d]| Monodromy::new(a, b, c, d).unwrap())
        .collect()
}

#[test]
fn class_representatives_agree_with_conjugator_search() {
    for tau in [-7, -6, -5, -4, -3, 3, 4, 5, 6] {
        let reps = sl2_trace_classes(tau).unwrap();
        for m in matrices_with_trace(tau, 5) {
            let hits: Vec<usize> = (0..reps.len()).filter(|&i| conjugate_sl2(&m, &reps[i]).unwrap()).collect();
            assert_eq!(hits.len(), 1, "{m} (trace {tau}) matched classes {hits:?}");
            assert!(bounded_conjugator(&m, &reps[hits[0]], 1, 50).is_some(), "{m} ~ {}", reps[hits[0]]);
            for (i, other) in reps.iter().enumerate() {
                if i != hits[0] {
                    assert!(bounded_conjugator(&m, other, 1, 50).is_none());
                }
            }
        }
    }
}

#[test]
fn class_counts_from_matrix_enumeration() {
    // group box matrices into classes with the direct search only
    for tau in [-6, -5, -4, -3, 3, 4, 5, 6] {
        let ms = matrices_with_trace(tau, 6);
        let mut classes: Vec<Monodromy> = Vec::new();
        for m in &ms {
            if !classes.iter().any(|c| bounded_conjugator(m, c, 1, 50).is_some()) {
                classes.push(*m);
            }
        }
        assert_eq!(classes.len(), sl2_trace_classes(tau).unwrap().len(), "trace {tau}");
        assert_eq!(classes.len(), class_number(tau * tau - 4).unwrap());
    }
}

#[test]
fn gl_conjugacy_agrees_with_search() {
    for tau in [-4, -5, 5, 6] {
        let ms = matrices_with_trace(tau, 4);
        for a in &ms {
            for b in &ms {
                let direct = bounded_conjugator(a, b, 1, 50).is_some() || bounded_conjugator(a, b, -1, 50).is_some();
                assert_eq!(conjugate_gl2(a, b).unwrap(), direct, "{a} vs {b}");
            }
        }
    }
}

#[test]
fn a4_certificate() {
    let a = Monodromy::new(-3, 1, 2, -1).unwrap();
    assert_eq!(bounded_conjugator(&a, &a.transpose(), 1, 50), None);
    let m = bounded_conjugator(&a, &a.transpose(), -1, 50).expect("GL conjugator");
    assert_eq!(m[0] * m[3] - m[1] * m[2], -1);
    assert!(!conjugate_sl2(&a, &a.transpose()).unwrap());
    assert!(conjugate_gl2(&a, &a.transpose()).unwrap());
}

#[test]
fn matrix_form_roundtrip() {
    for [a, b, c, d] in sl2_box(6) {
        let m = Monodromy::new(a, b, c, d).unwrap();
        if !m.is_hyperbolic() {
            continue;
        }
        let q = form_of_matrix(&m);
        assert_eq!(q.discriminant(), m.trace() * m.trace() - 4);
        assert_eq!(matrix_of_form(&q, m.trace()).unwrap(), m);
    }
}

#[test]
fn cycles_are_invariant_under_sl2() {
    let q = BinaryQuadraticForm::new(1, 3, -2);
    let cycle = reduce_form_cycle(&q).unwrap();
    for t in [[[1, 1], [0, 1]], [[2, 1], [1, 1]], [[0, -1], [1, 0]], [[3, 2], [4, 3]]] {
        let moved = q.transform(t);
        assert_eq!(reduce_form_cycle(&moved).unwrap(), cycle);
        assert!(forms_equivalent(&q, &moved).unwrap());
    }
}

#[test]
fn class_numbers_of_small_discriminants() {
    assert_eq!(class_number(5).unwrap(), 1);
    assert_eq!(class_number(8).unwrap(), 1);
    assert_eq!(class_number(12).unwrap(), 2);
    for d in [5, 8, 12, 13, 17, 21, 24, 28, 32, 45, 60] {
        assert_eq!(form_classes(d).unwrap().len(), class_number(d).unwrap());
    }
}
