#![no_main]

use libfuzzer_sys::fuzz_target;
use polyjacobi::RingSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = text.parse::<RingSpec>() {
        let back: RingSpec = spec.to_string().parse().expect("printed spec parses");
        assert_eq!(back, spec);
    }
});
