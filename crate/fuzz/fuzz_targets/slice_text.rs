#![no_main]

use libfuzzer_sys::fuzz_target;
use linkinv::diagram::SliceWord;

fuzz_target!(|text: &str| {
    let Ok(w) = SliceWord::parse(text) else { return };
    // Printing and reparsing must be lossless.
    assert_eq!(SliceWord::parse(&w.to_string()).unwrap(), w);
    let _ = w.trace();
});
