#![no_main]

use libfuzzer_sys::fuzz_target;
use linkinv::magnus::MilnorIndex;

fuzz_target!(|text: &str| {
    let Ok(idx) = MilnorIndex::parse(text) else { return };
    assert_eq!(MilnorIndex::parse(&idx.to_string()).unwrap(), idx);
    if idx.len() <= 8 {
        let _ = idx.check(3);
        for r in idx.reductions() {
            assert!(r.len() < idx.len());
        }
    }
});
