#![no_main]

use foursp::syntax::{parse_literal, parse_literal_set, parse_literal_sets};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse_literal(text);
    let _ = parse_literal_set(text);
    let _ = parse_literal_sets(text);
});
