use std::fs;
use std::path::PathBuf;

use polyjacobi::{poly_parse, EquationForm, RingSpec};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn poly_parse_seeds_roundtrip() {
    let vars = ["x", "y", "z"];
    let mut parsed = 0;
    for seed in seeds("poly_parse") {
        let (ring, body) = seed.split_once('\n').unwrap();
        let spec: RingSpec = ring.parse().unwrap();
        if let Ok(p) = poly_parse(body, &vars, &spec) {
            assert_eq!(poly_parse(&p.to_string(), &vars, &spec).unwrap(), p);
            parsed += 1;
        }
    }
    assert!(parsed >= 4);
}

#[test]
fn ring_spec_seeds_roundtrip() {
    for seed in seeds("ring_spec") {
        if let Ok(spec) = seed.parse::<RingSpec>() {
            assert_eq!(spec.to_string().parse::<RingSpec>().unwrap(), spec);
        }
    }
}

#[test]
fn equation_form_seeds_roundtrip() {
    for seed in seeds("equation_form") {
        if let Ok(form) = seed.parse::<EquationForm>() {
            assert_eq!(form.as_str().parse::<EquationForm>().unwrap(), form);
        }
    }
}
