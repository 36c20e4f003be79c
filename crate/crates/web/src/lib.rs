//! Browser bindings. Every export returns a JSON string; failures come back as `{"error", "kind"}`.

use serde_json::json;
use wasm_bindgen::prelude::*;

use su2abelian::commands;
use su2abelian::polygon::{angle_triple_status, construct_triple, AngleTriple};
use su2abelian::quaternion::UnitQuaternion;
use su2abelian::report::Report;
use su2abelian::Error;

/// Browsers get one thread and a short budget.
pub const MAX_RESTARTS: usize = 2000;

fn error_json(e: &Error) -> String {
    let kind = if e.is_parse_error() { "parse" } else { "precondition" };
    json!({ "error": e.to_string(), "kind": kind }).to_string()
}

fn report_json(r: su2abelian::Result<Report>) -> String {
    match r {
        Ok(report) => report.to_json(),
        Err(e) => error_json(&e),
    }
}

/// Status of the angle triple (radians) and, when one exists, unit axes realising it.
#[wasm_bindgen]
pub fn triangle(theta1: f64, theta2: f64, theta3: f64) -> String {
    let t = match AngleTriple::new(theta1, theta2, theta3) {
        Ok(t) => t,
        Err(e) => return error_json(&e),
    };
    let status = angle_triple_status(&t);
    let [a, b, c] = t.as_array();
    let slacks = [a + b - c, b + c - a, c + a - b, 2.0 * std::f64::consts::PI - a - b - c];
    let mut out = json!({ "status": format!("{status:?}"), "slacks": slacks });
    if let Ok(axes) = construct_triple(&t) {
        let q: Vec<UnitQuaternion> = axes.iter().zip(t.as_array()).map(|(v, th)| UnitQuaternion::exp(*v, th)).collect();
        out["axes"] = json!(axes.iter().map(|v| [v.x, v.y, v.z]).collect::<Vec<_>>());
        out["images"] = json!(q.iter().map(|x| x.as_array()).collect::<Vec<_>>());
        out["product_error"] = json!((q[0] * q[1] * q[2]).distance(&UnitQuaternion::ONE));
    }
    out.to_string()
}

#[wasm_bindgen]
pub fn classify(manifold: &str) -> String {
    report_json(commands::classify(manifold))
}

#[wasm_bindgen]
pub fn search(presentation: &str, restarts: u32, seed: u32) -> String {
    let restarts = (restarts as usize).min(MAX_RESTARTS);
    report_json(commands::search(presentation, restarts, u64::from(seed), 1e-9))
}
