//! Browser bindings: three operations for the static page in `www/`.
//!
//! Each export is a thin wrapper over a plain function returning JSON, so the
//! logic is testable off the browser.

use num_complex::Complex64;
use qhe_cyclic::hierarchy::{
    basis_index, blok_wen_sequence, decompose_positive, decompose_standard, FillingFactor,
};
use qhe_cyclic::ladder::{build_ladder, solve_ladder_magnitudes};
use qhe_cyclic::wavefn::{laughlin_eval, PlaneConfig};
use qhe_cyclic::{cyclicity_check, PrimitiveRoot, Representation, DEFAULT_TOLERANCE};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Solved ladder magnitudes plus the relation and cyclicity reports.
/// A non-finite `base` picks the default.
pub fn ladder_report(p: i64, k: i64, base: f64) -> Result<String, String> {
    let q = PrimitiveRoot::new(p, k).map_err(|e| e.to_string())?;
    let sol = solve_ladder_magnitudes(&q, base.is_finite().then_some(base)).map_err(|e| e.to_string())?;
    let rep = build_ladder(&q, &sol, None).map_err(|e| e.to_string())?;
    let relations = rep.verify(DEFAULT_TOLERANCE).map_err(|e| e.to_string())?;
    let doc = json!({
        "p": q.p(),
        "k": q.k(),
        "base": sol.base,
        "infimum_base": sol.infimum_base,
        "magnitudes": sol.magnitudes,
        "relations": relations,
        "cyclicity": cyclicity_check(&rep),
    });
    Ok(doc.to_string())
}

/// Both continued fractions of `P/Q`, the Blok–Wen weights and the basis address.
pub fn filling_report(nu: &str) -> Result<String, String> {
    let nu: FillingFactor = nu.trim().parse().map_err(|e: qhe_cyclic::Error| e.to_string())?;
    let standard = decompose_standard(&nu).map_err(|e| e.to_string())?;
    let positive = decompose_positive(&nu).map_err(|e| e.to_string())?;
    let seq = blok_wen_sequence(&positive).map_err(|e| e.to_string())?;
    let address = basis_index(&nu, None).ok();
    let doc = json!({
        "nu": nu,
        "standard": standard,
        "positive": positive,
        "thetas": seq.thetas,
        "qs": seq.qs,
        "index": address,
    });
    Ok(doc.to_string())
}

/// `|ψ|²` of the two-electron Laughlin state over a `size × size` grid
/// spanning `[−extent, extent]²` for electron 1, electron 2 held at `z2`.
/// Row-major, first row at `y = +extent`.
pub fn laughlin_density(m: u32, z2_re: f64, z2_im: f64, size: usize, extent: f64) -> Result<Vec<f64>, String> {
    if size < 2 {
        return Err("grid needs at least 2 points per side".into());
    }
    let z2 = Complex64::new(z2_re, z2_im);
    let step = 2.0 * extent / (size - 1) as f64;
    let mut out = Vec::with_capacity(size * size);
    for row in 0..size {
        for col in 0..size {
            let z1 = Complex64::new(-extent + col as f64 * step, extent - row as f64 * step);
            let psi = laughlin_eval(m, &PlaneConfig(vec![z1, z2])).map_err(|e| e.to_string())?;
            out.push(psi.norm_sqr());
        }
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn ladder(p: i32, k: i32, base: f64) -> Result<String, JsValue> {
    ladder_report(p.into(), k.into(), base).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn filling(nu: &str) -> Result<String, JsValue> {
    filling_report(nu).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn laughlin_grid(m: u32, z2_re: f64, z2_im: f64, size: usize, extent: f64) -> Result<Vec<f64>, JsValue> {
    laughlin_density(m, z2_re, z2_im, size, extent).map_err(|e| JsValue::from_str(&e))
}
