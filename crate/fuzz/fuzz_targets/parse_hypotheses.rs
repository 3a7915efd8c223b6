#![no_main]

use foursp::syntax::{parse_hypotheses, parse_program};
use libfuzzer_sys::fuzz_target;

const PROGRAM: &str = "p :- not q.\nq :- not p.\nr :- not -s, p.\n";

// First line is the program, the rest is the hypothesis file.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let (prog, hyps) = match text.split_once('\n') {
        Some((head, rest)) if !head.trim().is_empty() => (head, rest),
        _ => (PROGRAM, text),
    };
    if let Ok(p) = parse_program(prog) {
        if p.is_ground() {
            let _ = parse_hypotheses(hyps, &p);
        }
    }
});
