//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Every export returns a JSON string: a report envelope on success or an
//! error object. Nothing here builds a `JsValue`, so the same functions run
//! natively under `cargo test`.

use serde_json::json;
use wasm_bindgen::prelude::*;

use orbitres::cones::movable_chambers;
use orbitres::lie::Parabolic;
use orbitres::oracle::Caps;
use orbitres::orbits::OrbitLabel;
use orbitres::report::{self, Envelope, ErrorReport};
use orbitres::Result;

fn respond(r: Result<String>) -> String {
    r.unwrap_or_else(|e| serde_json::to_string_pretty(&ErrorReport::new(&e)).expect("errors serialize"))
}

/// Full classification of an orbit label such as `A5:3,2,1` or `G2:dim8`.
#[wasm_bindgen]
pub fn classify(orbit: &str, seed: u32) -> String {
    respond((|| {
        let o = OrbitLabel::parse(orbit)?;
        Ok(report::classify(&o, u64::from(seed), &Caps::default())?.to_json())
    })())
}

/// Chamber graph of the movable cone: one node per polarization, one edge
/// per wall.
#[wasm_bindgen]
pub fn chambers(orbit: &str) -> String {
    respond((|| {
        let o = OrbitLabel::parse(orbit)?;
        let cc = movable_chambers(&o)?;
        Ok(Envelope::new("chambers", &o.to_string(), None, cc).to_json())
    })())
}

/// Whether `P(T*(G/P))` is a twistor space for a marked diagram such as
/// `C3:{1}`.
#[wasm_bindgen]
pub fn twistor(parabolic: &str) -> String {
    respond((|| {
        let p = Parabolic::parse(parabolic)?;
        Ok(Envelope::new("twistor", &p.to_string(), None, report::twistor(&p)?).to_json())
    })())
}

/// Library and table versions, for the page footer.
#[wasm_bindgen]
pub fn versions() -> String {
    json!({
        "artifact_version": report::ARTIFACT_VERSION,
        "table_version": orbitres::resolutions::table_version(),
    })
    .to_string()
}
