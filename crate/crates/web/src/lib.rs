//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export takes and returns JSON strings. The `*_json` functions do
//! the work and are plain Rust, so they run under native tests as well.

use serde::Deserialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use projinv_core::imaging::{pullback_field, AnalyticField, GaussianBump, ScalarField};
use projinv_core::invariants::{evaluate, generating_set, solve_weight_system, Signature};
use projinv_core::scalar::{parse_rational, rational_to_string};
use projinv_core::verification::relative_residual;
use projinv_core::{Configuration, GradientSample, Homography};

#[derive(Deserialize)]
struct Point {
    x: f64,
    y: f64,
    p: f64,
    q: f64,
}

#[derive(Deserialize)]
struct Bump {
    amplitude: f64,
    cx: f64,
    cy: f64,
    width: f64,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| format!("bad {what}: {e}"))
}

fn homography(text: &str) -> Result<Homography<f64>, String> {
    let m: [[f64; 3]; 3] = parse(text, "matrix")?;
    Homography::new(m).map_err(|e| e.to_string())
}

fn signature_rows(sig: &Signature<f64>) -> Vec<Value> {
    sig.entries()
        .iter()
        .map(|(d, v)| json!({"name": d.to_string(), "value": v}))
        .collect()
}

/// Generators of a configuration before and after a homography, with the
/// per-generator relative deviation.
pub fn transform_signature_json(points: &str, matrix: &str) -> Result<String, String> {
    let pts: Vec<Point> = parse(points, "points")?;
    let c = Configuration::new(
        pts.iter()
            .map(|p| GradientSample::new(p.x, p.y, p.p, p.q))
            .collect(),
    )
    .map_err(|e| e.to_string())?;
    let violations = c.genericity_violations();
    if !violations.is_empty() {
        return Err(violations.join("; "));
    }
    let h = homography(matrix)?;
    let tc = h.transform_config(&c).map_err(|e| e.to_string())?;
    let set = generating_set(c.len()).map_err(|e| e.to_string())?;
    let before = evaluate(&c, &set).map_err(|e| e.to_string())?;
    let after = evaluate(&tc, &set).map_err(|e| e.to_string())?;
    let worst = before
        .values()
        .zip(after.values())
        .map(|(a, b)| relative_residual(*a, *b))
        .fold(0.0, f64::max);
    let moved: Vec<Value> = tc
        .samples()
        .iter()
        .map(|s| json!({"x": s.x, "y": s.y, "p": s.p, "q": s.q}))
        .collect();
    Ok(json!({
        "before": signature_rows(&before),
        "after": signature_rows(&after),
        "transformed": moved,
        "max_relative_deviation": worst,
    })
    .to_string())
}

/// RGBA pixels of a Gaussian mixture pulled back by a homography, over
/// the square `[-extent, extent]²` with `y` pointing up. Positive values
/// are drawn warm, negative values cool, and points sent to infinity black.
pub fn render_pullback_rgba(
    bumps: &str,
    matrix: &str,
    width: usize,
    height: usize,
    extent: f64,
) -> Result<Vec<u8>, String> {
    let raw: Vec<Bump> = parse(bumps, "bumps")?;
    let scale = raw.iter().map(|b| b.amplitude.abs()).sum::<f64>().max(1e-12);
    let field = AnalyticField::new(
        raw.iter()
            .map(|b| GaussianBump {
                amplitude: b.amplitude,
                cx: b.cx,
                cy: b.cy,
                width: b.width,
            })
            .collect(),
    )
    .map_err(|e| e.to_string())?;
    let pulled = pullback_field(&homography(matrix)?, field);
    let mut out = Vec::with_capacity(width * height * 4);
    for j in 0..height {
        for i in 0..width {
            let x = extent * (2.0 * (i as f64 + 0.5) / width as f64 - 1.0);
            let y = extent * (1.0 - 2.0 * (j as f64 + 0.5) / height as f64);
            let rgba = match pulled.value(x, y) {
                Ok(v) => {
                    let t = (v / scale).clamp(-1.0, 1.0);
                    let hi = (255.0 * t.abs()).round() as u8;
                    if t >= 0.0 {
                        [255, 255 - hi / 2, 255 - hi, 255]
                    } else {
                        [255 - hi, 255 - hi / 2, 255, 255]
                    }
                }
                Err(_) => [0, 0, 0, 255],
            };
            out.extend_from_slice(&rgba);
        }
    }
    Ok(out)
}

/// Exponents solving the weight system for `n` points and weight `omega`.
pub fn solve_weights_json(n: usize, omega: &str) -> Result<String, String> {
    let omega = parse_rational(omega).map_err(|e| e.to_string())?;
    let sol = solve_weight_system(n, &omega).map_err(|e| e.to_string())?;
    let exponents: serde_json::Map<String, Value> = sol
        .exponents
        .iter()
        .map(|(s, m)| (s.key(), json!(rational_to_string(m))))
        .collect();
    Ok(json!({
        "n": n,
        "omega": rational_to_string(&omega),
        "exponents": exponents,
        "integral": sol.integral,
        "verified": sol.satisfies_system(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn transform_signature(points: &str, matrix: &str) -> Result<String, JsError> {
    transform_signature_json(points, matrix).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn render_pullback(
    bumps: &str,
    matrix: &str,
    width: usize,
    height: usize,
    extent: f64,
) -> Result<Vec<u8>, JsError> {
    render_pullback_rgba(bumps, matrix, width, height, extent).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve_weights(n: usize, omega: &str) -> Result<String, JsError> {
    solve_weights_json(n, omega).map_err(|e| JsError::new(&e))
}
