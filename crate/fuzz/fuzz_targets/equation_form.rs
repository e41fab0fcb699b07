#![no_main]

use libfuzzer_sys::fuzz_target;
use polyjacobi::EquationForm;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(form) = text.parse::<EquationForm>() {
        assert_eq!(form.as_str().parse::<EquationForm>().unwrap(), form);
    }
});
