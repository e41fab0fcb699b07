use proptest::prelude::*;

use polyjacobi::jacobi::{defect, diagonal_composition, satisfies, EquationForm, BIVARIATE, TRIVARIATE};
use polyjacobi::numtheory::in_s_m;
use polyjacobi::oracle::{self, EnumSpace};
use polyjacobi::poly::{Monomial, MultiPoly};
use polyjacobi::rings::{RingElement, RingSpec};

fn field_points(spec: &RingSpec) -> Vec<[RingElement; 3]> {
    let p = spec.characteristic() as i64;
    let mut pts = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                pts.push([spec.from_i64(a), spec.from_i64(b), spec.from_i64(c)]);
            }
        }
    }
    pts
}

#[test]
fn fermat_at_s1_exponents() {
    for p in [2u64, 3, 5, 7] {
        let spec = RingSpec::prime_field(p).unwrap();
        for m in 1..=400u64 {
            if in_s_m(m, p, 1).unwrap() {
                for a in 0..p as i64 {
                    let x = spec.from_i64(a);
                    assert_eq!(x.pow(m), x, "a={a}, m={m}, p={p}");
                }
            }
        }
    }
}

#[test]
fn formal_solutions_vanish_pointwise() {
    for (p, deg) in [(2u64, 2u32), (3, 1), (5, 1)] {
        let space = EnumSpace::prime_field(p, deg).unwrap();
        let points = field_points(&space.spec);
        for form in EquationForm::ALL {
            let report = oracle::enumerate_solutions(&space, form).unwrap();
            for sol in &report.solutions {
                let d = defect(sol, form).unwrap();
                for pt in &points {
                    assert!(d.evaluate(pt).unwrap().is_zero(), "{sol} {form} at {pt:?}");
                }
            }
        }
    }
}

#[test]
fn pointwise_vanishing_is_weaker_than_formal() {
    // over F_2, x^2 and x induce the same function, so some candidates have
    // a nonzero defect that vanishes at every point
    let space = EnumSpace::prime_field(2, 2).unwrap();
    let points = field_points(&space.spec);
    let mut pointwise_only = 0;
    for i in 0..space.candidates {
        let p = space.candidate(i);
        let d = defect(&p, EquationForm::J1).unwrap();
        if !d.is_zero() && points.iter().all(|pt| d.evaluate(pt).unwrap().is_zero()) {
            pointwise_only += 1;
        }
    }
    assert!(pointwise_only > 0);
}

#[test]
fn j5_solutions_satisfy_the_diagonal_identity() {
    for (p, deg) in [(2u64, 2u32), (3, 1)] {
        let space = EnumSpace::prime_field(p, deg).unwrap();
        for sol in oracle::enumerate_solutions(&space, EquationForm::J5).unwrap().solutions {
            assert!(diagonal_composition(&sol).unwrap().is_zero());
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let space = EnumSpace::integers(2, 1).unwrap();
    for form in EquationForm::ALL {
        let a = serde_json::to_string(&oracle::enumerate_solutions_with(&space, form, true).unwrap()).unwrap();
        let b = serde_json::to_string(&oracle::enumerate_solutions_with(&space, form, false).unwrap()).unwrap();
        let c = serde_json::to_string(&oracle::enumerate_solutions(&space, form).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}

#[test]
fn agreement_flags_hold_for_every_form() {
    for space in [
        EnumSpace::prime_field(2, 1).unwrap(),
        EnumSpace::prime_field(3, 1).unwrap(),
        EnumSpace::integers(3, 1).unwrap(),
    ] {
        for form in EquationForm::ALL {
            let r = oracle::enumerate_solutions(&space, form).unwrap();
            assert!(r.agreement, "{form} over {}", space.spec);
            assert!(oracle::degree_bound_report(&r));
        }
    }
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    let spec = RingSpec::Integers;
    prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..5).prop_map(move |terms| {
        MultiPoly::from_terms(
            &spec,
            &BIVARIATE,
            terms
                .into_iter()
                .map(|(i, j, c)| (Monomial::new([i, j]), spec.from_i64(c))),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Setting y = x in the J5 defect leaves P(P(x,x),z).
    #[test]
    fn j5_defect_on_the_diagonal(p in small_poly()) {
        let d = defect(&p, EquationForm::J5)?;
        let x = MultiPoly::var(p.spec(), &TRIVARIATE, "x")?;
        let on_diag = d.substitute(&[("y", &x)], &TRIVARIATE)?;
        prop_assert_eq!(on_diag, diagonal_composition(&p)?);
    }

    /// The classifier and the defect agree on arbitrary integer polynomials.
    #[test]
    fn classify_matches_satisfaction(p in small_poly()) {
        let verdict = polyjacobi::classify(&p)?;
        prop_assert_eq!(verdict.is_solution(), satisfies(&p, EquationForm::J1)?);
    }
}
