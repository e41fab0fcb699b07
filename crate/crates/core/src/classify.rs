//! The solution families of Jacobi's identity and a decision procedure that
//! places a bivariate polynomial in one of them or refutes it with a
//! witness term of its defect.
//!
//! Over characteristic `!= 3` the solutions are exactly `Bx + Cy` with
//! `B² + BC + C = 0`. Over characteristic 3 they are `Axy + B(x+y) + D`
//! with `AD = B² - B`, and `Bx + Cy + D` with `B² + BC + C = 0`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobi::{defect, require_bivariate, EquationForm, BIVARIATE};
use crate::poly::{Monomial, MultiPoly};
use crate::rings::{RingElement, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    /// `Bx + Cy`, `B² + BC + C = 0`.
    LinearBC { b: RingElement, c: RingElement },
    /// `Axy + B(x + y) + D`, `AD = B² - B`, characteristic 3.
    Char3Product {
        a: RingElement,
        b: RingElement,
        d: RingElement,
    },
    /// `Bx + Cy + D`, `B² + BC + C = 0`, characteristic 3.
    Char3Affine {
        b: RingElement,
        c: RingElement,
        d: RingElement,
    },
}

impl FamilyParams {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyParams::LinearBC { .. } => "LinearBC",
            FamilyParams::Char3Product { .. } => "Char3Product",
            FamilyParams::Char3Affine { .. } => "Char3Affine",
        }
    }

    /// Named parameters in declaration order.
    pub fn params(&self) -> Vec<(&'static str, &RingElement)> {
        match self {
            FamilyParams::LinearBC { b, c } => vec![("B", b), ("C", c)],
            FamilyParams::Char3Product { a, b, d } => vec![("A", a), ("B", b), ("D", d)],
            FamilyParams::Char3Affine { b, c, d } => vec![("B", b), ("C", c), ("D", d)],
        }
    }

    fn requires_char3(&self) -> bool {
        !matches!(self, FamilyParams::LinearBC { .. })
    }

    /// Residual of the family's defining equation; zero iff it holds.
    pub fn condition_residual(&self) -> RingElement {
        match self {
            FamilyParams::LinearBC { b, c } | FamilyParams::Char3Affine { b, c, .. } => {
                linear_condition(b, c)
            }
            FamilyParams::Char3Product { a, b, d } => {
                // AD - (B² - B)
                a.mul_same(d).add_same(&b.mul_same(b).neg()).add_same(b)
            }
        }
    }

    pub fn condition_text(&self) -> &'static str {
        match self {
            FamilyParams::LinearBC { .. } | FamilyParams::Char3Affine { .. } => "B^2 + B*C + C = 0",
            FamilyParams::Char3Product { .. } => "A*D = B^2 - B",
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.name())?;
        for (i, (k, v)) in self.params().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, "}}")
    }
}

/// `B² + BC + C`.
fn linear_condition(b: &RingElement, c: &RingElement) -> RingElement {
    b.mul_same(b).add_same(&b.mul_same(c)).add_same(c)
}

fn bivariate_term(ex: u32, ey: u32, c: &RingElement) -> (Monomial, RingElement) {
    (Monomial::new([ex, ey]), c.clone())
}

/// Builds the family polynomial after validating the parameters.
pub fn make_family(params: &FamilyParams, spec: &RingSpec) -> Result<MultiPoly> {
    for (_, v) in params.params() {
        if v.spec() != spec {
            return Err(Error::SpecMismatch {
                left: spec.to_string(),
                right: v.spec().to_string(),
            });
        }
    }
    if params.requires_char3() && spec.characteristic() != 3 {
        return Err(Error::CharMismatch(spec.characteristic()));
    }
    let residual = params.condition_residual();
    if !residual.is_zero() {
        return Err(Error::ConditionViolated(format!(
            "{} fails for {params} (residual {residual})",
            params.condition_text()
        )));
    }
    Ok(family_polynomial(params, spec))
}

fn family_polynomial(params: &FamilyParams, spec: &RingSpec) -> MultiPoly {
    let terms = match params {
        FamilyParams::LinearBC { b, c } => {
            vec![bivariate_term(1, 0, b), bivariate_term(0, 1, c)]
        }
        FamilyParams::Char3Product { a, b, d } => vec![
            bivariate_term(1, 1, a),
            bivariate_term(1, 0, b),
            bivariate_term(0, 1, b),
            bivariate_term(0, 0, d),
        ],
        FamilyParams::Char3Affine { b, c, d } => vec![
            bivariate_term(1, 0, b),
            bivariate_term(0, 1, c),
            bivariate_term(0, 0, d),
        ],
    };
    MultiPoly::from_terms(spec, &BIVARIATE, terms).expect("validated parameters")
}

/// The four residuals of `Axy + Bx + Cy + D` that vanish exactly when it
/// satisfies Jacobi's identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemResiduals {
    /// `3A²`
    pub three_a_squared: RingElement,
    /// `3D(B + 1)`
    pub three_d_b_plus_one: RingElement,
    /// `A(2B + C)`
    pub a_two_b_plus_c: RingElement,
    /// `B² + BC + C + AD`
    pub quadratic: RingElement,
}

impl SystemResiduals {
    pub fn all_zero(&self) -> bool {
        self.as_array().iter().all(|r| r.is_zero())
    }

    pub fn as_array(&self) -> [&RingElement; 4] {
        [
            &self.three_a_squared,
            &self.three_d_b_plus_one,
            &self.a_two_b_plus_c,
            &self.quadratic,
        ]
    }
}

pub fn system_check(
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    d: &RingElement,
    spec: &RingSpec,
) -> Result<SystemResiduals> {
    for v in [a, b, c, d] {
        if v.spec() != spec {
            return Err(Error::SpecMismatch {
                left: spec.to_string(),
                right: v.spec().to_string(),
            });
        }
    }
    let one = spec.one();
    Ok(SystemResiduals {
        three_a_squared: a.mul_same(a).scale(3),
        three_d_b_plus_one: d.mul_same(&b.add_same(&one)).scale(3),
        a_two_b_plus_c: a.mul_same(&b.scale(2).add_same(c)),
        quadratic: linear_condition(b, c).add_same(&a.mul_same(d)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassificationResult {
    Solution(FamilyParams),
    NotJacobi {
        witness_monomial: Monomial,
        witness_coeff: RingElement,
    },
}

impl ClassificationResult {
    pub fn is_solution(&self) -> bool {
        matches!(self, ClassificationResult::Solution(_))
    }
}

/// Places `p` in its solution family, or returns the graded-lex least
/// nonzero term of its J1 defect.
///
/// Where the characteristic-3 families overlap (`A = 0`, `B = C`), the
/// result is `Char3Affine`.
pub fn classify(p: &MultiPoly) -> Result<ClassificationResult> {
    require_bivariate(p)?;
    let spec = p.spec();
    if p.deg_in_index(0) <= 1 && p.deg_in_index(1) <= 1 {
        let a = p.coeff_of(&[1, 1])?;
        let b = p.coeff_of(&[1, 0])?;
        let c = p.coeff_of(&[0, 1])?;
        let d = p.coeff_of(&[0, 0])?;
        if system_check(&a, &b, &c, &d, spec)?.all_zero() {
            let params = if spec.characteristic() == 3 {
                if a.is_zero() {
                    FamilyParams::Char3Affine { b, c, d }
                } else {
                    FamilyParams::Char3Product { a, b, d }
                }
            } else if a.is_zero() && d.is_zero() {
                FamilyParams::LinearBC { b, c }
            } else {
                return Err(Error::Unclassified(p.to_string()));
            };
            let rebuilt = make_family(&params, spec)?;
            if &rebuilt != p || !defect(p, EquationForm::J1)?.is_zero() {
                return Err(Error::Unclassified(p.to_string()));
            }
            return Ok(ClassificationResult::Solution(params));
        }
    }
    let d = defect(p, EquationForm::J1)?;
    match d.least_term() {
        Some((m, c)) => Ok(ClassificationResult::NotJacobi {
            witness_monomial: m.clone(),
            witness_coeff: c.clone(),
        }),
        None => Err(Error::Unclassified(p.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantSolutions {
    /// Every constant solves the identity (characteristic 3).
    AllConstants,
    /// Only the zero constant does.
    OnlyZero,
}

/// Constant solutions `c` satisfy `3c = 0`.
pub fn constant_solutions(spec: &RingSpec) -> ConstantSolutions {
    if spec.characteristic() == 3 {
        ConstantSolutions::AllConstants
    } else {
        ConstantSolutions::OnlyZero
    }
}

/// A family shape as listed for a given characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyShape {
    pub family: &'static str,
    pub shape: &'static str,
    pub condition: &'static str,
}

pub fn families_for(spec: &RingSpec) -> Vec<FamilyShape> {
    if spec.characteristic() == 3 {
        vec![
            FamilyShape {
                family: "Char3Product",
                shape: "A*x*y + B*(x + y) + D",
                condition: "A*D = B^2 - B",
            },
            FamilyShape {
                family: "Char3Affine",
                shape: "B*x + C*y + D",
                condition: "B^2 + B*C + C = 0",
            },
        ]
    } else {
        vec![FamilyShape {
            family: "LinearBC",
            shape: "B*x + C*y",
            condition: "B^2 + B*C + C = 0",
        }]
    }
}
