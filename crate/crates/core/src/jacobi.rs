//! The Jacobi defect of a bivariate polynomial and its variants.
//!
//! For `P ∈ R[x, y]` each equation form expands to a polynomial in
//! `R[x, y, z]`; `P` satisfies the form exactly when that polynomial is
//! zero as a formal polynomial.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::rings::RingElement;

pub const BIVARIATE: [&str; 2] = ["x", "y"];
pub const TRIVARIATE: [&str; 3] = ["x", "y", "z"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EquationForm {
    /// `P(P(x,y),z) + P(P(y,z),x) + P(P(z,x),y)`
    J1,
    /// `P(x,P(y,z)) + P(y,P(z,x)) + P(z,P(x,y))`
    J2,
    /// `P(P(x,y),z) + P(y,P(x,z)) - P(x,P(y,z))`
    J5,
    /// `P(x,P(y,z)) + P(P(x,z),y) - P(P(x,y),z)`
    J6,
}

impl EquationForm {
    pub const ALL: [EquationForm; 4] = [
        EquationForm::J1,
        EquationForm::J2,
        EquationForm::J5,
        EquationForm::J6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EquationForm::J1 => "j1",
            EquationForm::J2 => "j2",
            EquationForm::J5 => "j5",
            EquationForm::J6 => "j6",
        }
    }

    /// The expression whose vanishing the form asks for.
    pub fn expression(self) -> &'static str {
        match self {
            EquationForm::J1 => "P(P(x,y),z) + P(P(y,z),x) + P(P(z,x),y)",
            EquationForm::J2 => "P(x,P(y,z)) + P(y,P(z,x)) + P(z,P(x,y))",
            EquationForm::J5 => "P(P(x,y),z) + P(y,P(x,z)) - P(x,P(y,z))",
            EquationForm::J6 => "P(x,P(y,z)) + P(P(x,z),y) - P(P(x,y),z)",
        }
    }
}

impl fmt::Display for EquationForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EquationForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "j1" => Ok(EquationForm::J1),
            "j2" => Ok(EquationForm::J2),
            "j5" => Ok(EquationForm::J5),
            "j6" => Ok(EquationForm::J6),
            _ => Err(Error::InvalidArgument(format!(
                "unknown equation form `{s}` (expected j1, j2, j5 or j6)"
            ))),
        }
    }
}

pub(crate) fn require_bivariate(p: &MultiPoly) -> Result<()> {
    if p.vars().len() == 2 && p.vars()[0] == "x" && p.vars()[1] == "y" {
        Ok(())
    } else {
        Err(Error::WrongArity(p.vars().join(", ")))
    }
}

/// `P(y, x)`.
pub fn swap(p: &MultiPoly) -> Result<MultiPoly> {
    require_bivariate(p)?;
    let terms = p
        .terms()
        .map(|(m, c)| {
            let e = m.exponents();
            (Monomial::new([e[1], e[0]]), c.clone())
        })
        .collect::<Vec<_>>();
    MultiPoly::from_terms(p.spec(), &BIVARIATE, terms)
}

/// Evaluates compositions `P(a, b)` with `a, b ∈ R[x, y, z]`.
struct Composer<'a> {
    p: &'a MultiPoly,
    x: MultiPoly,
    y: MultiPoly,
    z: MultiPoly,
}

impl<'a> Composer<'a> {
    fn new(p: &'a MultiPoly) -> Self {
        let var = |v| MultiPoly::var(p.spec(), &TRIVARIATE, v).expect("fixed variable list");
        Composer {
            p,
            x: var("x"),
            y: var("y"),
            z: var("z"),
        }
    }

    fn apply(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        self.p.compose(&[a.clone(), b.clone()])
    }
}

/// The trivariate defect of `p` for the given equation form.
pub fn defect(p: &MultiPoly, form: EquationForm) -> Result<MultiPoly> {
    require_bivariate(p)?;
    let c = Composer::new(p);
    let (x, y, z) = (&c.x, &c.y, &c.z);
    let out = match form {
        EquationForm::J1 => {
            let mut d = c.apply(&c.apply(x, y), z);
            d.add_assign_same(&c.apply(&c.apply(y, z), x));
            d.add_assign_same(&c.apply(&c.apply(z, x), y));
            d
        }
        EquationForm::J2 => {
            let mut d = c.apply(x, &c.apply(y, z));
            d.add_assign_same(&c.apply(y, &c.apply(z, x)));
            d.add_assign_same(&c.apply(z, &c.apply(x, y)));
            d
        }
        EquationForm::J5 => {
            let mut d = c.apply(&c.apply(x, y), z);
            d.add_assign_same(&c.apply(y, &c.apply(x, z)));
            d.add_assign_same(&c.apply(x, &c.apply(y, z)).neg());
            d
        }
        EquationForm::J6 => {
            let mut d = c.apply(x, &c.apply(y, z));
            d.add_assign_same(&c.apply(&c.apply(x, z), y));
            d.add_assign_same(&c.apply(&c.apply(x, y), z).neg());
            d
        }
    };
    Ok(out)
}

/// Formal satisfaction: the defect is the zero polynomial.
pub fn satisfies(p: &MultiPoly, form: EquationForm) -> Result<bool> {
    Ok(defect(p, form)?.is_zero())
}

/// The graded-lex least nonzero term of the defect, if any.
pub fn witness(p: &MultiPoly, form: EquationForm) -> Result<Option<(Monomial, RingElement)>> {
    let d = defect(p, form)?;
    Ok(d.least_term().map(|(m, c)| (m.clone(), c.clone())))
}

/// `P(P(x, x), z)` over `(x, y, z)`. Vanishes for every solution of J5.
pub fn diagonal_composition(p: &MultiPoly) -> Result<MultiPoly> {
    require_bivariate(p)?;
    let c = Composer::new(p);
    Ok(c.apply(&c.apply(&c.x, &c.x), &c.z))
}
