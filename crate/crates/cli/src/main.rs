use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyjacobi::classify::{families_for, FamilyParams};
use polyjacobi::jacobi::{defect, BIVARIATE};
use polyjacobi::numtheory;
use polyjacobi::oracle::{self, EnumSpace, DEFAULT_BUDGET};
use polyjacobi::{
    classify, constant_solutions, make_family, poly_parse, ClassificationResult, EquationForm,
    Error, MultiPoly, RingElement, RingSpec,
};

#[derive(Parser)]
#[command(name = "polyjacobi", version, about = "Bivariate polynomial solutions of Jacobi's identity")]
struct Cli {
    /// Output format (classify and enumerate default to json, the rest to human)
    #[arg(long, global = true, value_enum)]
    output: Option<Output>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a polynomial in x, y satisfies an equation form
    Verify {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "j1")]
        form: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Place a polynomial in its solution family or print a witness
    Classify {
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Exhaustively scan bounded polynomials for solutions
    Enumerate {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        max_deg: u32,
        #[arg(long, default_value = "j1")]
        form: String,
        #[arg(long, default_value_t = 1)]
        coeff_bound: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Scan on a single thread
        #[arg(long)]
        sequential: bool,
    },
    /// C(n, m) mod p by Lucas' theorem, with the digitwise factors
    Lucas { n: u64, m: u64, p: u64 },
    /// List the solution families for a ring's characteristic
    Families {
        #[arg(long)]
        ring: String,
    },
    /// Build a family polynomial from its parameters, e.g. --param B=-2 --param C=4
    Make {
        #[arg(long)]
        ring: String,
        #[arg(long, value_parser = ["LinearBC", "Char3Product", "Char3Affine"])]
        family: String,
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Scan the base-p binomial corollaries up to a bound
    Corollaries {
        #[arg(long, default_value_t = 256)]
        max_n: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u64>,
    },
}

/// Exit status plus whatever is printed on stdout.
struct Outcome {
    code: u8,
    json: Value,
    human: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default_json = matches!(cli.command, Command::Classify { .. } | Command::Enumerate { .. });
    let json_mode = match cli.output {
        Some(o) => o == Output::Json,
        None => default_json,
    };
    match run(cli.command) {
        Ok(out) => {
            if json_mode {
                println!("{}", out.json);
            } else {
                print!("{}", out.human);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Verify { ring, form, poly } => verify(&ring, &form, &poly),
        Command::Classify { ring, poly } => classify_cmd(&ring, &poly),
        Command::Enumerate {
            ring,
            max_deg,
            form,
            coeff_bound,
            budget,
            sequential,
        } => enumerate(&ring, max_deg, &form, coeff_bound, budget, sequential),
        Command::Lucas { n, m, p } => lucas(n, m, p),
        Command::Families { ring } => families(&ring),
        Command::Make {
            ring,
            family,
            params,
        } => make(&ring, &family, &params),
        Command::Corollaries { max_n, primes } => corollaries(max_n, &primes),
    }
}

fn parse_bivariate(ring: &str, poly: &str) -> Result<(RingSpec, MultiPoly), Error> {
    let spec: RingSpec = ring.parse()?;
    let p = poly_parse(poly, &BIVARIATE, &spec)?;
    Ok((spec, p))
}

fn verify(ring: &str, form: &str, poly: &str) -> Result<Outcome, Error> {
    let form: EquationForm = form.parse()?;
    let (spec, p) = parse_bivariate(ring, poly)?;
    let d = defect(&p, form)?;
    let witness = d.least_term().map(|(m, c)| d.format_term(m, c));
    let code = u8::from(witness.is_some());
    let human = match &witness {
        None => format!("satisfied: {p} solves {form} over {spec}\n"),
        Some(w) => format!("violated: {p} does not solve {form} over {spec}\nwitness: {w}\n"),
    };
    let json = json!({
        "verdict": if witness.is_none() { "satisfied" } else { "violated" },
        "ring": spec.to_string(),
        "form": form,
        "polynomial": p.to_string(),
        "witness": witness,
    });
    Ok(Outcome { code, json, human })
}

fn params_json(params: &FamilyParams) -> Value {
    params
        .params()
        .into_iter()
        .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn classify_cmd(ring: &str, poly: &str) -> Result<Outcome, Error> {
    let (spec, p) = parse_bivariate(ring, poly)?;
    let result = classify(&p)?;
    let (code, json, human) = match &result {
        ClassificationResult::Solution(params) => (
            0,
            json!({
                "verdict": "solution",
                "ring": spec.to_string(),
                "polynomial": p.to_string(),
                "family": params.name(),
                "params": params_json(params),
                "witness": Value::Null,
            }),
            format!("solution: {p}\nfamily: {params}\n"),
        ),
        ClassificationResult::NotJacobi {
            witness_monomial,
            witness_coeff,
        } => {
            let d = defect(&p, EquationForm::J1)?;
            let term = d.format_term(witness_monomial, witness_coeff);
            (
                1,
                json!({
                    "verdict": "not_jacobi",
                    "ring": spec.to_string(),
                    "polynomial": p.to_string(),
                    "family": Value::Null,
                    "params": Value::Null,
                    "witness": term,
                }),
                format!("not a solution: {p}\nwitness: {term}\n"),
            )
        }
    };
    Ok(Outcome { code, json, human })
}

fn enumerate(
    ring: &str,
    max_deg: u32,
    form: &str,
    coeff_bound: u64,
    budget: u64,
    sequential: bool,
) -> Result<Outcome, Error> {
    let form: EquationForm = form.parse()?;
    let spec: RingSpec = ring.parse()?;
    let space = EnumSpace::new(spec.clone(), max_deg, coeff_bound, budget)?;
    let start = Instant::now();
    let report = oracle::enumerate_solutions_with(&space, form, !sequential)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let degree_bound = oracle::degree_bound_report(&report);
    let solutions: Vec<String> = report.solutions.iter().map(|p| p.to_string()).collect();
    let code = u8::from(!report.agreement);
    let mut human = format!(
        "{form} over {spec}, degree <= {max_deg} per variable: {} candidates, {} solutions\n",
        space.candidates,
        solutions.len()
    );
    for s in &solutions {
        human.push_str(&format!("  {s}\n"));
    }
    human.push_str(&format!(
        "agreement with predicted set ({}): {}\ndegree at most one in each variable: {degree_bound}\n",
        report.predicted, report.agreement
    ));
    let json = json!({
        "form": form,
        "ring": spec.to_string(),
        "max_deg": max_deg,
        "coeff_bound": space.coeff_bound,
        "candidates": space.candidates,
        "solutions": solutions,
        "predicted": report.predicted,
        "agreement": report.agreement,
        "degree_bound": degree_bound,
        "max_solution_degrees": [report.max_solution_degrees.0, report.max_solution_degrees.1],
        "elapsed_ms": elapsed_ms,
    });
    Ok(Outcome { code, json, human })
}

fn lucas(n: u64, m: u64, p: u64) -> Result<Outcome, Error> {
    let b = numtheory::lucas_breakdown(n, m, p)?;
    let factors: Vec<String> = b
        .factors
        .iter()
        .map(|f| format!("C({},{})", f.n_digit, f.m_digit))
        .collect();
    let residues: Vec<String> = b.factors.iter().map(|f| f.residue.to_string()).collect();
    let human = format!(
        "C({n},{m}) mod {p} = {}\n{} = {} (mod {p})\n",
        b.residue,
        if factors.is_empty() { "1".to_string() } else { factors.join(" * ") },
        if residues.is_empty() { "1".to_string() } else { residues.join(" * ") },
    );
    let json = serde_json::to_value(&b).expect("serialisable report");
    Ok(Outcome { code: 0, json, human })
}

fn families(ring: &str) -> Result<Outcome, Error> {
    let spec: RingSpec = ring.parse()?;
    let list = families_for(&spec);
    let constants = constant_solutions(&spec);
    let mut human = format!("characteristic {}:\n", spec.characteristic());
    for f in &list {
        human.push_str(&format!("  {}: P(x,y) = {}  where {}\n", f.family, f.shape, f.condition));
    }
    human.push_str(match constants {
        polyjacobi::ConstantSolutions::AllConstants => "constant solutions: every constant\n",
        polyjacobi::ConstantSolutions::OnlyZero => "constant solutions: 0 only\n",
    });
    let json = json!({
        "ring": spec.to_string(),
        "characteristic": spec.characteristic(),
        "families": list,
        "constant_solutions": constants,
    });
    Ok(Outcome { code: 0, json, human })
}

fn parse_element(spec: &RingSpec, text: &str) -> Result<RingElement, Error> {
    let c = poly_parse(text, &[], spec)?;
    Ok(c.least_term().map_or_else(|| spec.zero(), |(_, c)| c.clone()))
}

fn make(ring: &str, family: &str, params: &[String]) -> Result<Outcome, Error> {
    let spec: RingSpec = ring.parse()?;
    let get = |name: &str| -> Result<RingElement, Error> {
        for kv in params {
            if let Some((k, v)) = kv.split_once('=') {
                if k.trim() == name {
                    return parse_element(&spec, v);
                }
            } else {
                return Err(Error::InvalidArgument(format!("expected NAME=VALUE, got `{kv}`")));
            }
        }
        Err(Error::InvalidArgument(format!("missing --param {name}=...")))
    };
    let fp = match family {
        "LinearBC" => FamilyParams::LinearBC { b: get("B")?, c: get("C")? },
        "Char3Product" => FamilyParams::Char3Product { a: get("A")?, b: get("B")?, d: get("D")? },
        _ => FamilyParams::Char3Affine { b: get("B")?, c: get("C")?, d: get("D")? },
    };
    match make_family(&fp, &spec) {
        Ok(p) => Ok(Outcome {
            code: 0,
            json: json!({ "family": fp.name(), "params": params_json(&fp), "polynomial": p.to_string() }),
            human: format!("{p}\n"),
        }),
        Err(e @ (Error::ConditionViolated(_) | Error::CharMismatch(_))) => Ok(Outcome {
            code: 1,
            json: json!({ "family": fp.name(), "params": params_json(&fp), "error": e.to_string() }),
            human: format!("{e}\n"),
        }),
        Err(e) => Err(e),
    }
}

fn corollaries(max_n: u64, primes: &[u64]) -> Result<Outcome, Error> {
    let mut rows = Vec::new();
    let mut human = String::new();
    let mut all_ok = true;
    for &p in primes {
        let scan = numtheory::scan_corollaries(max_n, p)?;
        all_ok &= scan.mismatches() == 0;
        human.push_str(&format!(
            "p = {p}, 1 < n <= {max_n}: s_1 criterion mismatches {}, s_2 pattern failures {} of {}, implication failures {}\n",
            scan.s1_mismatches, scan.s2_failures, scan.s2_checked, scan.implication_failures
        ));
        rows.push(serde_json::to_value(&scan).expect("serialisable scan"));
    }
    Ok(Outcome {
        code: u8::from(!all_ok),
        json: json!({ "max_n": max_n, "scans": rows, "ok": all_ok }),
        human,
    })
}
