#![no_main]

use foursp::syntax::{ground, parse_program};
use libfuzzer_sys::fuzz_target;

const MAX_INSTANCES: u64 = 100_000;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = parse_program(text) else {
        return;
    };
    let consts = p.constants().len().max(1) as u64;
    let instances = p.rules.iter().try_fold(0u64, |acc, r| {
        let n = consts.checked_pow(r.variables().len() as u32)?;
        acc.checked_add(n).filter(|&s| s <= MAX_INSTANCES)
    });
    if instances.is_none() {
        return;
    }
    if let Ok(g) = ground(&p) {
        assert!(g.is_ground());
        assert!(g.len() as u64 <= instances.unwrap().max(p.len() as u64));
    }
});
