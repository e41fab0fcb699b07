//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails.
//!
//! Run with `cargo test -p polyjacobi --test acceptance -- --nocapture`.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use polyjacobi::classify::{make_family, system_check, FamilyParams};
use polyjacobi::jacobi::{defect, satisfies, swap, EquationForm, BIVARIATE};
use polyjacobi::numtheory::{
    binom_mod_p, cor2a_check, cor2a_check_parts, cor2b_check, in_s_m, is_s1_by_divisibility,
};
use polyjacobi::oracle::{self, EnumSpace};
use polyjacobi::poly::{poly_parse, Monomial, MultiPoly};
use polyjacobi::rings::RingSpec;

type Outcome = Result<String, String>;
type Criterion = Box<dyn FnOnce(&mut Scans) -> Outcome>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, format!("{what} took {t:?}, limit {limit:?}"))
}

fn set_of(polys: &[MultiPoly]) -> Vec<String> {
    let mut v: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

/// Spaces enumerated for J1, keyed by a label.
fn j1_spaces() -> Vec<(&'static str, EnumSpace)> {
    vec![
        ("F2 deg<=2", EnumSpace::prime_field(2, 2).unwrap()),
        ("F3 deg<=2", EnumSpace::prime_field(3, 2).unwrap()),
        ("F5 deg<=1", EnumSpace::prime_field(5, 1).unwrap()),
        ("Z[-4,4] deg<=1", EnumSpace::integers(4, 1).unwrap()),
    ]
}

/// Solution lists shared between criteria so each space/form pair is
/// scanned once.
#[derive(Default)]
struct Scans {
    solutions: HashMap<(&'static str, EquationForm), Vec<MultiPoly>>,
    degree_ok: HashMap<&'static str, bool>,
}

impl Scans {
    fn get(&mut self, label: &'static str, space: &EnumSpace, form: EquationForm) -> Vec<MultiPoly> {
        self.solutions
            .entry((label, form))
            .or_insert_with(|| {
                oracle::enumerate_solutions(space, form)
                    .expect("space within budget")
                    .solutions
            })
            .clone()
    }
}

fn ac1_golden_example() -> Outcome {
    let start = Instant::now();
    let spec: RingSpec = "zp:3[t]".parse().unwrap();
    let t = spec.generator().unwrap();
    let one = spec.one();
    let t2 = t.mul(&t).unwrap();
    let a = one.sub(&t2).unwrap();
    let b = one.add(&t).unwrap().mul(&a).unwrap();
    let d = t
        .mul(&one.add(&t).unwrap())
        .unwrap()
        .mul(&one.sub(&t).unwrap().sub(&t2).unwrap())
        .unwrap();
    let p = MultiPoly::from_terms(
        &spec,
        &BIVARIATE,
        [
            (Monomial::new([1, 1]), a.clone()),
            (Monomial::new([1, 0]), b.clone()),
            (Monomial::new([0, 1]), b.clone()),
            (Monomial::new([0, 0]), d.clone()),
        ],
    )
    .unwrap();
    let parsed = poly_parse(
        "(1+2*t^2)*x*y + ((1+t)*(1+2*t^2))*x + ((1+t)*(1+2*t^2))*y + (t*(1+t)*(1+2*t+2*t^2))",
        &BIVARIATE,
        &spec,
    )
    .unwrap();
    check(parsed == p, "reduced-coefficient text differs from the example")?;
    check(defect(&p, EquationForm::J1).unwrap().is_zero(), "J1 defect is nonzero")?;
    let ad = a.mul(&d).unwrap();
    let b2_b = b.mul(&b).unwrap().sub(&b).unwrap();
    check(ad == b2_b, format!("AD = {ad} but B^2 - B = {b2_b}"))?;
    let fam = make_family(&FamilyParams::Char3Product { a, b, d }, &spec).unwrap();
    check(fam == p, "family constructor disagrees")?;
    within(start, Duration::from_secs(1), "golden example")?;
    Ok(format!("defect 0, AD = B^2 - B = {ad}"))
}

fn ac2_main_theorem(scans: &mut Scans) -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (label, space) in j1_spaces() {
        let report = oracle::enumerate_solutions(&space, EquationForm::J1).unwrap();
        let members = oracle::family_members(&space).unwrap();
        check(
            oracle::same_set(&report.solutions, &members),
            format!("{label}: scan {:?} vs families {:?}", set_of(&report.solutions), set_of(&members)),
        )?;
        check(report.agreement, format!("{label}: classify disagreement"))?;
        check(
            oracle::cross_check_families(&space).unwrap(),
            format!("{label}: cross_check_families is false"),
        )?;
        if label.starts_with('Z') {
            check(
                set_of(&report.solutions) == ["-2*x + 4*y", "0"],
                format!("{label}: expected {{0, -2*x + 4*y}}, got {:?}", set_of(&report.solutions)),
            )?;
        }
        notes.push(format!("{label}: {}/{}", report.solutions.len(), space.candidates));
        scans.degree_ok.insert(label, oracle::degree_bound_report(&report));
        scans.solutions.insert((label, EquationForm::J1), report.solutions);
    }
    within(start, Duration::from_secs(60), "main theorem scans")?;
    Ok(notes.join(", "))
}

fn ac3_degree_bound(scans: &mut Scans) -> Outcome {
    let mut notes = Vec::new();
    for (label, _) in j1_spaces() {
        let ok = *scans.degree_ok.get(label).ok_or(format!("{label} not scanned"))?;
        check(ok, format!("{label}: a solution has degree > 1 in some variable"))?;
        notes.push(label);
    }
    Ok(format!("all solutions degree <= 1 per variable ({})", notes.join(", ")))
}

fn ac4_appendix_b(scans: &mut Scans) -> Outcome {
    let start = Instant::now();
    for (label, space) in [
        ("F2 deg<=2", EnumSpace::prime_field(2, 2).unwrap()),
        ("F3 deg<=2", EnumSpace::prime_field(3, 2).unwrap()),
    ] {
        for form in [EquationForm::J5, EquationForm::J6] {
            let sols = scans.get(label, &space, form);
            check(
                set_of(&sols) == ["0"],
                format!("{label} {form}: expected {{0}}, got {:?}", set_of(&sols)),
            )?;
        }
    }
    within(start, Duration::from_secs(60), "J5/J6 scans")?;
    Ok("J5 and J6 solution sets are {0} over F2, F3 at degree <= 2".into())
}

fn ac5_swap_dualities(scans: &mut Scans) -> Outcome {
    for (label, space) in j1_spaces() {
        let j1 = scans.get(label, &space, EquationForm::J1);
        let j2 = scans.get(label, &space, EquationForm::J2);
        let j5 = scans.get(label, &space, EquationForm::J5);
        let j6 = scans.get(label, &space, EquationForm::J6);
        let swapped = |v: &[MultiPoly]| v.iter().map(|p| swap(p).unwrap()).collect::<Vec<_>>();
        check(
            set_of(&j2) == set_of(&swapped(&j1)),
            format!("{label}: J2 {:?} vs swap(J1) {:?}", set_of(&j2), set_of(&swapped(&j1))),
        )?;
        check(
            set_of(&j6) == set_of(&swapped(&j5)),
            format!("{label}: J6 {:?} vs swap(J5) {:?}", set_of(&j6), set_of(&swapped(&j5))),
        )?;
    }
    Ok("J2 = swap(J1), J6 = swap(J5) on all four spaces".into())
}

/// Rows of Pascal's triangle up to `n_max`, exact.
fn pascal(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigUint::from(1u32); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

fn exact_binom_mod(rows: &[Vec<BigUint>], n: usize, m: usize, p: u64) -> u64 {
    if m > n {
        return 0;
    }
    (&rows[n][m] % BigUint::from(p)).to_u64().unwrap()
}

fn ac6_lucas() -> Outcome {
    let start = Instant::now();
    let rows = pascal(200);
    let mut comparisons = 0u64;
    let mut mismatches = Vec::new();
    for p in [2u64, 3, 5, 7] {
        for n in 0..=200usize {
            for m in 0..=200usize {
                comparisons += 1;
                let lucas = binom_mod_p(n as u64, m as u64, p).unwrap();
                let exact = exact_binom_mod(&rows, n, m, p);
                if lucas != exact {
                    mismatches.push((n, m, p));
                }
            }
        }
    }
    check(mismatches.is_empty(), format!("mismatches: {:?}", &mismatches[..mismatches.len().min(5)]))?;
    check(comparisons > 160_000, format!("only {comparisons} comparisons"))?;
    within(start, Duration::from_secs(5), "Lucas comparison")?;
    Ok(format!("{comparisons} comparisons, 0 mismatches"))
}

fn ac7_corollary1() -> Outcome {
    let mut mismatches = 0;
    let mut members = 0;
    for p in [2u64, 3, 5] {
        let spec = RingSpec::prime_field(p).unwrap();
        let sum = poly_parse("x + y", &BIVARIATE, &spec).unwrap();
        let mut power = sum.clone();
        for n in 2..=256u64 {
            power = power.mul(&sum).unwrap();
            let digit = in_s_m(n, p, 1).unwrap();
            let divis = is_s1_by_divisibility(n, p).unwrap();
            let rhs = poly_parse(&format!("x^{n} + y^{n}"), &BIVARIATE, &spec).unwrap();
            let formal = power == rhs;
            members += u32::from(digit);
            if !(digit == divis && divis == formal) {
                mismatches += 1;
            }
        }
    }
    check(mismatches == 0, format!("{mismatches} mismatches"))?;
    Ok(format!("765 values of (n, p), {members} in s_1, 0 mismatches"))
}

fn ac8_corollary2() -> Outcome {
    let mut checked = 0;
    for p in [3u64, 5] {
        for n in 2..=256u64 {
            if in_s_m(n, p, 2).unwrap() {
                let r = cor2a_check(n, p).unwrap();
                check(r.holds(), format!("cor2a fails at n={n}, p={p}: {r:?}"))?;
                checked += 1;
            }
        }
    }
    // p = 2: the digit split always has distinct parts
    for n in 2..=256u64 {
        if in_s_m(n, 2, 2).unwrap() {
            let r = cor2a_check(n, 2).unwrap();
            check(r.n1 != r.n2, format!("equal parts at n={n}, p=2"))?;
            check(r.holds(), format!("cor2a fails at n={n}, p=2: {r:?}"))?;
            checked += 1;
        }
    }
    check(cor2a_check_parts(1, 1, 2).unwrap().holds(), "explicit split 1+1 over p=2")?;
    let mut implications = 0;
    for p in [2u64, 3, 5, 7] {
        for n in 2..=200u64 {
            check(cor2b_check(n, p).unwrap(), format!("cor2b fails at n={n}, p={p}"))?;
            implications += 1;
        }
    }
    Ok(format!("{checked} members of s_2 checked, {implications} implications hold"))
}

fn ac9_system() -> Outcome {
    let mut total = 0;
    let mut spaces: Vec<(RingSpec, Vec<i64>)> = [2i64, 3, 5]
        .iter()
        .map(|&p| (RingSpec::prime_field(p as u64).unwrap(), (0..p).collect()))
        .collect();
    spaces.push((RingSpec::Integers, (-4..=4).collect()));
    for (spec, vals) in spaces {
        for &a in &vals {
            for &b in &vals {
                for &c in &vals {
                    for &d in &vals {
                        let e = |n| spec.from_i64(n);
                        let res = system_check(&e(a), &e(b), &e(c), &e(d), &spec).unwrap();
                        let p = MultiPoly::from_terms(
                            &spec,
                            &BIVARIATE,
                            [
                                (Monomial::new([1, 1]), e(a)),
                                (Monomial::new([1, 0]), e(b)),
                                (Monomial::new([0, 1]), e(c)),
                                (Monomial::new([0, 0]), e(d)),
                            ],
                        )
                        .unwrap();
                        let sat = satisfies(&p, EquationForm::J1).unwrap();
                        check(
                            res.all_zero() == sat,
                            format!("{spec}: (A,B,C,D)=({a},{b},{c},{d}) residuals {} vs J1 {sat}", res.all_zero()),
                        )?;
                        total += 1;
                    }
                }
            }
        }
    }
    check(total == 16 + 81 + 625 + 6561, format!("{total} tuples"))?;
    Ok(format!("{total} tuples, exact equivalence"))
}

fn ac10_constants() -> Outcome {
    let mut notes = Vec::new();
    let mut cases: Vec<(RingSpec, Vec<i64>)> = [2u64, 3, 5, 7]
        .iter()
        .map(|&p| (RingSpec::prime_field(p).unwrap(), (0..p as i64).collect()))
        .collect();
    cases.push((RingSpec::Integers, (-4..=4).collect()));
    cases.push((RingSpec::extension(3, "t").unwrap(), (0..3).collect()));
    cases.push((RingSpec::extension(5, "t").unwrap(), (0..5).collect()));
    for (spec, vals) in cases {
        let mut count = 0;
        for c in vals {
            let p = MultiPoly::constant(&spec, &BIVARIATE, spec.from_i64(c)).unwrap();
            let three_c_zero = spec.from_i64(c).scale(3).is_zero();
            let sat = defect(&p, EquationForm::J1).unwrap().is_zero();
            check(sat == three_c_zero, format!("{spec}: c={c} satisfies={sat}, 3c=0 is {three_c_zero}"))?;
            count += u32::from(sat);
        }
        notes.push(format!("{spec}: {count}"));
    }
    // non-constant elements of F_3[t] are constants of R[x, y] too
    let spec = RingSpec::extension(3, "t").unwrap();
    let c = spec.from_coeffs(&[1, 2, 0, 1]).unwrap();
    let p = MultiPoly::constant(&spec, &BIVARIATE, c).unwrap();
    check(satisfies(&p, EquationForm::J1).unwrap(), "1+2t+t^3 should solve J1 over F_3[t]")?;
    Ok(format!("constant solutions per ring: {}", notes.join(", ")))
}

#[test]
fn acceptance() {
    let mut scans = Scans::default();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("AC1 golden example over F3[t]", Box::new(|_| ac1_golden_example())),
        ("AC2 scan equals solution families", Box::new(ac2_main_theorem)),
        ("AC3 degree at most one per variable", Box::new(ac3_degree_bound)),
        ("AC4 J5/J6 have only the zero solution", Box::new(ac4_appendix_b)),
        ("AC5 swap dualities J2/J1 and J6/J5", Box::new(ac5_swap_dualities)),
        ("AC6 Lucas vs exact binomials", Box::new(|_| ac6_lucas())),
        ("AC7 s_1 criteria and (x+y)^n", Box::new(|_| ac7_corollary1())),
        ("AC8 s_2 binomial pattern and implication", Box::new(|_| ac8_corollary2())),
        ("AC9 residual system vs J1", Box::new(|_| ac9_system())),
        ("AC10 constant solutions iff 3c = 0", Box::new(|_| ac10_constants())),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run(&mut scans) {
            Ok(detail) => println!("PASS {name} ({:.2?}): {detail}", start.elapsed()),
            Err(why) => {
                println!("FAIL {name} ({:.2?}): {why}", start.elapsed());
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn pascal_oracle_sanity() {
    let rows = pascal(10);
    assert_eq!(rows[10][3], BigUint::from(120u32));
    assert_eq!(rows[6][3], BigUint::from(20u32));
    assert!(!rows[200 % 11][0].is_zero());
    assert_eq!(exact_binom_mod(&rows, 5, 2, 3), 1);
    assert_eq!(exact_binom_mod(&rows, 3, 5, 3), 0);
}
