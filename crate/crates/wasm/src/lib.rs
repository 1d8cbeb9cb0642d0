//! JavaScript bindings for the browser demo in `www/`.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js_err(msg: String) -> JsValue {
    JsValue::from_str(&msg)
}

/// SVG of a region; `dots = 0` draws no dots.
#[wasm_bindgen(js_name = renderRegion)]
pub fn render_region(alpha: &str, k: usize, n: usize, region: &str, dots: usize, diagonal: bool) -> Result<String, JsValue> {
    let p = demo::parse_case(alpha, k, n).map_err(js_err)?;
    demo::region_svg(&p, region, (dots > 0).then_some(dots), diagonal).map_err(js_err)
}

/// JSON `{"sigma", "pairing", "svg"}` for arm index `i`.
#[wasm_bindgen(js_name = dyckPath)]
pub fn dyck_path(alpha: &str, k: usize, n: usize, i: usize) -> Result<String, JsValue> {
    let p = demo::parse_case(alpha, k, n).map_err(js_err)?;
    demo::dyck_json(&p, i).map_err(js_err)
}

/// JSON verdict and full report for one identity: `"1"`, `"2"`, `"3"` or `"proj"`.
#[wasm_bindgen(js_name = verifyCase)]
pub fn verify_case(alpha: &str, k: usize, n: usize, theorem: &str) -> Result<String, JsValue> {
    let p = demo::parse_case(alpha, k, n).map_err(js_err)?;
    demo::verify_json(&p, theorem).map_err(js_err)
}
