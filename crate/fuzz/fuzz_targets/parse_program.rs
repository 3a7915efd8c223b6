#![no_main]

use foursp::syntax::{classify_dialect, parse_program};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = parse_program(text) {
        let printed = p.to_string();
        let again = parse_program(&printed).expect("printed program parses");
        assert_eq!(again, p);
        let _ = classify_dialect(&p);
    }
});
