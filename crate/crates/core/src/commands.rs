//! Report-producing entry points shared by the command line and the browser demo.

use crate::dehn::{
    cfrac_eval, cfrac_of, lens_homeo, mg_fillings, mg_negative_unverified, parse_cfrac, splice_h1, LensSpace,
    SpliceDescriptor,
};
use crate::error::{Error, Result};
use crate::forms::{conjugate_sl2, form_classes, named_monodromies, sl2_trace_classes};
use crate::group::{is_abelian_rep, parse_presentation, relator_residual, Representation};
use crate::homology::{abelianization, AbelianGroup};
use crate::manifold::{parse_manifold, ManifoldDescription};
use crate::quaternion::UnitQuaternion;
use crate::report::{Report, WITNESS_TOL};
use crate::search::{search_with, SearchOptions, COMMUTATOR_TOL};
use crate::seifert::{self, euler_number, geometry, is_su2_abelian, orbifold_euler_char, pi1_presentation};
use crate::sol::{Monodromy, nun_presentation, nun_q8_rep, sol_is_su2_abelian, torus_bundle_presentation, torus_bundle_reps};

fn h1_of(m: &ManifoldDescription) -> AbelianGroup {
    match m {
        ManifoldDescription::Seifert(s) => seifert::h1(s),
        ManifoldDescription::TorusBundle(phi) => abelianization(&torus_bundle_presentation(phi)),
        ManifoldDescription::TwistedUnion(g) => abelianization(&nun_presentation(g)),
    }
}

fn geometry_of(m: &ManifoldDescription) -> String {
    match m {
        ManifoldDescription::Seifert(s) => geometry(&seifert::normalize(s)).to_string(),
        _ => "Sol".to_string(),
    }
}

pub fn classify(input: &str) -> Result<Report> {
    let m = parse_manifold(input)?;
    let report = match &m {
        ManifoldDescription::Seifert(s) => {
            let v = is_su2_abelian(s);
            let mut r = Report::new(if v.abelian { "abelian" } else { "nonabelian" })
                .extra("invariants", v.invariants.to_string())
                .extra("euler_number", euler_number(&v.invariants).to_string())
                .extra("orbifold_euler_char", orbifold_euler_char(&v.invariants).to_string());
            if let Some(c) = v.certificate {
                r = r.certificate(c);
            }
            if let Some(w) = &v.witness {
                r = r.witness(&pi1_presentation(&v.invariants), w)?;
            }
            r
        }
        ManifoldDescription::TorusBundle(phi) => {
            if sol_is_su2_abelian(phi)? {
                Report::new("abelian").certificate("SolDivisibility")
            } else {
                let reps = torus_bundle_reps(phi)?;
                let hit = reps
                    .iter()
                    .find(|r| r.nonabelian)
                    .ok_or_else(|| Error::OutOfRange(format!("no closed-form witness for {phi}")))?;
                Report::new("nonabelian")
                    .witness(&torus_bundle_presentation(phi), &hit.rep)?
                    .extra("thetas", vec![hit.thetas.theta1, hit.thetas.theta2])
            }
            .extra("trace", phi.trace())
        }
        ManifoldDescription::TwistedUnion(g) => {
            Report::new("nonabelian").certificate("Q8Surjection").witness(&nun_presentation(g), &nun_q8_rep(g))?
        }
    };
    Ok(report.extra("h1", h1_of(&m).to_string()).extra("geometry", geometry_of(&m)))
}

pub fn h1(input: &str) -> Result<Report> {
    let m = parse_manifold(input)?;
    let g = h1_of(&m);
    Ok(Report::new(g.to_string())
        .extra("rank", g.rank as u64)
        .extra("torsion", g.torsion.clone())
        .extra("manifold", m.to_string()))
}

pub fn geometry_cmd(input: &str) -> Result<Report> {
    let m = parse_manifold(input)?;
    let mut r = Report::new(geometry_of(&m)).extra("manifold", m.to_string());
    if let ManifoldDescription::Seifert(s) = &m {
        let s = seifert::normalize(s);
        r = r
            .extra("euler_number", euler_number(&s).to_string())
            .extra("orbifold_euler_char", orbifold_euler_char(&s).to_string());
    }
    Ok(r)
}

pub fn search(presentation: &str, restarts: usize, seed: u64, tol: f64) -> Result<Report> {
    if restarts == 0 || !(tol > 0.0) {
        return Err(Error::OutOfRange("need restarts >= 1 and tol > 0".into()));
    }
    let pres = parse_presentation(presentation)?;
    let report = search_with(&pres, &SearchOptions::new(restarts, seed, tol));
    let nonabelian: Vec<_> = report.nonabelian().collect();
    let mut r = match nonabelian.first() {
        Some(best) => {
            let r = Report::new("nonabelian-found");
            if best.residual < WITNESS_TOL {
                r.witness(&pres, &best.rep)?
            } else {
                r.residual(best.residual)
            }
        }
        None => Report::new(format!("none-found-after-{}", report.restarts_used)),
    };
    if let Some(c) = report.caveat() {
        r = r.extra("caveat", c);
    }
    Ok(r.extra("seed", seed)
        .extra("restarts", report.restarts_used)
        .extra("tolerance", tol)
        .extra("points_found", report.found.len())
        .extra("nonabelian_points", nonabelian.len())
        .extra("abelianization", abelianization(&pres).to_string()))
}

pub fn forms_disc(d: i64) -> Result<Report> {
    let classes = form_classes(d)?;
    let cycles: Vec<String> = classes
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" -> "))
        .collect();
    Ok(Report::new(format!("{} classes", classes.len()))
        .extra("discriminant", d)
        .extra("class_number", classes.len())
        .extra("cycles", cycles))
}

pub fn forms_trace(tau: i64) -> Result<Report> {
    let mut reps: Vec<(String, Monodromy)> = sl2_trace_classes(tau)?.into_iter().map(|m| (m.to_string(), m)).collect();
    for (name, named) in named_monodromies() {
        if named.trace() != tau {
            continue;
        }
        for slot in reps.iter_mut() {
            if conjugate_sl2(&slot.1, &named)? {
                *slot = (format!("{name} = {named}"), named);
            }
        }
    }
    Ok(Report::new(format!("{} classes", reps.len()))
        .extra("trace", tau)
        .extra("class_count", reps.len())
        .extra("representatives", reps.into_iter().map(|r| r.0).collect::<Vec<_>>()))
}

pub fn mg(g: i64, unverified: bool) -> Result<Report> {
    let t = mg_fillings(g)?;
    let checks = t.cross_checks();
    let all_ok = checks.iter().all(|c| c.1);
    let mut r = Report::new(if all_ok { "cross-checks-passed" } else { "cross-check-failed" })
        .extra("g", g)
        .extra("r_T", format!("{} |H1| = {}", t.r_t, splice_h1(&t.r_t)))
        .extra("r_2", t.r_2.lens.to_string())
        .extra("r_11", t.r_11.lens.to_string())
        .extra("r_13", t.r_13.lens.to_string())
        .extra(
            "checks",
            checks.iter().map(|(name, ok)| format!("{} {name}", if *ok { "ok" } else { "FAILED" })).collect::<Vec<_>>(),
        );
    if unverified {
        let (y, lens) = mg_negative_unverified(g)?;
        r = r
            .extra("unverified_note", "conjectural fillings of M_{-g-1}, up to orientation")
            .extra("unverified_r_T", format!("{y} |H1| = {}", splice_h1(&y)))
            .extra("unverified_lens", lens.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    Ok(r)
}

pub fn cfrac(text: &str) -> Result<Report> {
    let coeffs = parse_cfrac(text)?;
    let x = cfrac_eval(&coeffs)?;
    Ok(Report::new(x.to_string()).extra("canonical", cfrac_of(x)))
}

pub fn lens_eq(p1: i64, q1: i64, p2: i64, q2: i64) -> Result<Report> {
    let (l1, l2) = (LensSpace::new(p1, q1)?, LensSpace::new(p2, q2)?);
    let same = lens_homeo(&l1, &l2);
    Ok(Report::new(if same { "homeomorphic" } else { "not-homeomorphic" })
        .extra("first", l1.to_string())
        .extra("second", l2.to_string()))
}

pub fn splice(a: i64, b: i64, c: i64, d: i64) -> Result<Report> {
    let s = SpliceDescriptor::new(a, b, c, d)?;
    Ok(Report::new(format!("Z/{}", splice_h1(&s))).extra("order", splice_h1(&s)).extra("splice", s.to_string()))
}

/// Parses images written as `w,x,y,z; w,x,y,z; …`, one per generator.
pub fn parse_images(text: &str) -> Result<Representation> {
    let mut images = Vec::new();
    let mut pos = 0;
    for chunk in text.split(';') {
        let parts: Vec<&str> = chunk.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::parse(pos, format!("expected four components, found {}", parts.len())));
        }
        let mut c = [0.0; 4];
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| Error::parse(pos, format!("expected number, found `{p}`")))?;
        }
        if c.iter().all(|x| *x == 0.0) {
            return Err(Error::parse(pos, "zero quaternion"));
        }
        images.push(UnitQuaternion::from_array(c));
        pos += chunk.len() + 1;
    }
    Ok(Representation::new(images))
}

pub fn verify_rep(presentation: &str, images: &str) -> Result<Report> {
    let pres = parse_presentation(presentation)?;
    let rep = parse_images(images)?;
    let residual = relator_residual(&pres, &rep)?;
    let abelian = is_abelian_rep(&rep, COMMUTATOR_TOL);
    let r = if residual < WITNESS_TOL {
        Report::new(if abelian { "abelian" } else { "nonabelian" }).witness(&pres, &rep)?
    } else {
        Report::new("not-a-representation").residual(residual)
    };
    Ok(r.extra("max_commutator", crate::group::max_commutator(&rep)))
}
