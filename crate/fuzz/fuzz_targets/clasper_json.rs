#![no_main]

use libfuzzer_sys::fuzz_target;
use linkinv::catalog::catalog;
use linkinv::constructions::{clasper_surgery, TreeClasper};

fuzz_target!(|text: &str| {
    let Ok(c) = TreeClasper::from_json(text) else { return };
    // Bad leaves or oversized trees must surface as errors, never panics.
    let base = catalog("unlink-3").unwrap();
    let _ = clasper_surgery(&base, &c, 64);
});
