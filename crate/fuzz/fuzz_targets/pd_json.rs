#![no_main]

use libfuzzer_sys::fuzz_target;
use linkinv::diagram::PdCode;

fuzz_target!(|text: &str| {
    if let Ok(pd) = PdCode::from_json(text) {
        let again = PdCode::from_json(&pd.to_json().to_string()).unwrap();
        assert_eq!(again, pd);
    }
});
