#![no_main]

use libfuzzer_sys::fuzz_target;
use polyjacobi::{poly_parse, RingSpec};

const VARS: [&str; 3] = ["x", "y", "z"];

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // first line picks the ring, the rest is the polynomial
    let (ring, body) = text.split_once('\n').unwrap_or(("int", text));
    let Ok(spec) = ring.parse::<RingSpec>() else {
        return;
    };
    if let Ok(p) = poly_parse(body, &VARS, &spec) {
        let printed = p.to_string();
        let back = poly_parse(&printed, &VARS, &spec).expect("printed form parses");
        assert_eq!(back, p);
    }
});
