//! Exhaustive enumeration of bounded bivariate polynomials.
//!
//! Every candidate in an [`EnumSpace`] is tested symbolically through its
//! defect; the resulting solution sets are compared with the sets the
//! family constructors predict. Nothing here evaluates polynomials at
//! points: over a finite field distinct polynomials can induce the same
//! function.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, make_family, FamilyParams};
use crate::error::{Error, Result};
use crate::jacobi::{defect, swap, EquationForm, BIVARIATE};
use crate::poly::{Monomial, MultiPoly};
use crate::rings::{RingElement, RingSpec};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Polynomials in `x, y` with degree at most `max_deg_per_var` in each
/// variable and coefficients drawn from a finite set: all residues of
/// `F_p`, or the integers in `[-coeff_bound, coeff_bound]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumSpace {
    pub spec: RingSpec,
    pub max_deg_per_var: u32,
    pub coeff_bound: u64,
    #[serde(skip)]
    monomials: Vec<Monomial>,
    #[serde(skip)]
    elements: Vec<RingElement>,
    pub candidates: u64,
}

impl EnumSpace {
    /// `coeff_bound` is ignored for prime fields.
    pub fn new(spec: RingSpec, max_deg_per_var: u32, coeff_bound: u64, budget: u64) -> Result<Self> {
        let elements: Vec<RingElement> = match &spec {
            RingSpec::PrimeField(p) => (0..p.get() as i64).map(|r| spec.from_i64(r)).collect(),
            RingSpec::Integers => {
                if coeff_bound == 0 {
                    return Err(Error::InvalidArgument("coefficient bound must be positive".into()));
                }
                let b = i64::try_from(coeff_bound)
                    .map_err(|_| Error::InvalidArgument("coefficient bound too large".into()))?;
                (-b..=b).map(|n| spec.from_i64(n)).collect()
            }
            RingSpec::Extension { .. } => {
                return Err(Error::UnsupportedSpec(format!(
                    "{spec} has infinitely many coefficients"
                )))
            }
        };
        let side = max_deg_per_var as usize + 1;
        let nmono = side
            .checked_mul(side)
            .ok_or_else(|| Error::InvalidArgument("degree too large".into()))?;
        let count = BigUint::from(elements.len()).pow(nmono as u32);
        let candidates = match u64::try_from(&count) {
            Ok(c) if c <= budget => c,
            _ => {
                return Err(Error::BudgetExceeded {
                    count: count.to_string(),
                    budget,
                })
            }
        };
        let mut monomials: Vec<Monomial> = (0..=max_deg_per_var)
            .flat_map(|i| (0..=max_deg_per_var).map(move |j| Monomial::new([i, j])))
            .collect();
        monomials.sort();
        Ok(EnumSpace {
            spec,
            max_deg_per_var,
            coeff_bound: if matches!(elements.first().map(RingElement::spec), Some(RingSpec::Integers)) {
                coeff_bound
            } else {
                0
            },
            monomials,
            elements,
            candidates,
        })
    }

    pub fn prime_field(p: u64, max_deg_per_var: u32) -> Result<Self> {
        Self::new(RingSpec::prime_field(p)?, max_deg_per_var, 0, DEFAULT_BUDGET)
    }

    pub fn integers(coeff_bound: u64, max_deg_per_var: u32) -> Result<Self> {
        Self::new(RingSpec::Integers, max_deg_per_var, coeff_bound, DEFAULT_BUDGET)
    }

    /// Coefficient values in enumeration order.
    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }

    /// Candidate `index`: its base-`q` digits, least significant first,
    /// choose the coefficients of the monomials in ascending graded-lex
    /// order (`q` = number of coefficient values).
    pub fn candidate(&self, mut index: u64) -> MultiPoly {
        let q = self.elements.len() as u64;
        let mut terms = Vec::with_capacity(self.monomials.len());
        for m in &self.monomials {
            let digit = (index % q) as usize;
            index /= q;
            terms.push((m.clone(), self.elements[digit].clone()));
        }
        MultiPoly::from_terms(&self.spec, &BIVARIATE, terms).expect("space is well formed")
    }

    /// Whether `p` is one of the candidates.
    pub fn contains(&self, p: &MultiPoly) -> bool {
        let k = i64::from(self.max_deg_per_var);
        p.spec() == &self.spec
            && p.vars() == BIVARIATE
            && p.deg_in_index(0) <= k
            && p.deg_in_index(1) <= k
            && p.terms().all(|(_, c)| self.elements.contains(c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumReport {
    pub form: EquationForm,
    pub space: EnumSpace,
    /// Solutions in candidate order.
    pub solutions: Vec<MultiPoly>,
    /// Size of the predicted solution set inside the space.
    pub predicted: usize,
    /// The enumerated set equals the predicted one (and, for J1, every
    /// solution classifies into a family).
    pub agreement: bool,
    /// Largest `(deg_x, deg_y)` over the solutions, `-1` when none.
    pub max_solution_degrees: (i64, i64),
}

pub fn enumerate_solutions(space: &EnumSpace, form: EquationForm) -> Result<EnumReport> {
    enumerate_solutions_with(space, form, true)
}

/// As [`enumerate_solutions`]; `parallel = false` scans on the calling
/// thread. Both produce identical reports.
pub fn enumerate_solutions_with(
    space: &EnumSpace,
    form: EquationForm,
    parallel: bool,
) -> Result<EnumReport> {
    let solutions = scan(space, form, parallel)?;
    let predicted = predicted_solutions(space, form)?;
    let found: HashSet<&MultiPoly> = solutions.iter().collect();
    let mut agreement = found.len() == predicted.len() && predicted.iter().all(|p| found.contains(p));
    if form == EquationForm::J1 && agreement {
        for s in &solutions {
            if !classify(s)?.is_solution() {
                agreement = false;
                break;
            }
        }
    }
    let max_solution_degrees = solutions.iter().fold((-1, -1), |(dx, dy), s| {
        (dx.max(s.deg_in_index(0)), dy.max(s.deg_in_index(1)))
    });
    Ok(EnumReport {
        form,
        space: space.clone(),
        solutions,
        predicted: predicted.len(),
        agreement,
        max_solution_degrees,
    })
}

fn scan(space: &EnumSpace, form: EquationForm, parallel: bool) -> Result<Vec<MultiPoly>> {
    let check = |i: u64| -> Result<Option<MultiPoly>> {
        let p = space.candidate(i);
        Ok(defect(&p, form)?.is_zero().then_some(p))
    };
    let hits: Vec<Option<MultiPoly>> = if parallel {
        (0..space.candidates)
            .into_par_iter()
            .map(check)
            .filter(|r| !matches!(r, Ok(None)))
            .collect::<Result<_>>()?
    } else {
        (0..space.candidates)
            .map(check)
            .filter(|r| !matches!(r, Ok(None)))
            .collect::<Result<_>>()?
    };
    Ok(hits.into_iter().flatten().collect())
}

/// Every polynomial inside `space` produced by a valid family
/// parameterisation, without duplicates.
pub fn family_members(space: &EnumSpace) -> Result<Vec<MultiPoly>> {
    let spec = &space.spec;
    let e = space.elements();
    let mut params = Vec::new();
    if spec.characteristic() == 3 {
        for x in e {
            for y in e {
                for w in e {
                    params.push(FamilyParams::Char3Product {
                        a: x.clone(),
                        b: y.clone(),
                        d: w.clone(),
                    });
                    params.push(FamilyParams::Char3Affine {
                        b: x.clone(),
                        c: y.clone(),
                        d: w.clone(),
                    });
                }
            }
        }
    } else {
        for b in e {
            for c in e {
                params.push(FamilyParams::LinearBC {
                    b: b.clone(),
                    c: c.clone(),
                });
            }
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for fp in params {
        match make_family(&fp, spec) {
            Ok(p) => {
                if space.contains(&p) && seen.insert(p.clone()) {
                    out.push(p);
                }
            }
            Err(Error::ConditionViolated(_)) => {}
            Err(err) => return Err(err),
        }
    }
    Ok(out)
}

/// The solution set each form should have inside `space`: the family
/// members for J1, their swaps for J2, and only zero for J5 and J6.
pub fn predicted_solutions(space: &EnumSpace, form: EquationForm) -> Result<Vec<MultiPoly>> {
    match form {
        EquationForm::J1 => family_members(space),
        EquationForm::J2 => family_members(space)?
            .iter()
            .map(swap)
            .filter(|r| r.as_ref().map_or(true, |p| space.contains(p)))
            .collect(),
        EquationForm::J5 | EquationForm::J6 => {
            Ok(vec![MultiPoly::zero(&space.spec, &BIVARIATE)?])
        }
    }
}

/// Every solution has degree at most one in each variable.
pub fn degree_bound_report(report: &EnumReport) -> bool {
    report
        .solutions
        .iter()
        .all(|s| s.deg_in_index(0) <= 1 && s.deg_in_index(1) <= 1)
}

/// Compares the enumerated J1 solutions with the family members, as sets.
pub fn cross_check_families(space: &EnumSpace) -> Result<bool> {
    let solutions = scan(space, EquationForm::J1, true)?;
    let members = family_members(space)?;
    Ok(same_set(&solutions, &members))
}

pub fn same_set(a: &[MultiPoly], b: &[MultiPoly]) -> bool {
    let sa: HashSet<&MultiPoly> = a.iter().collect();
    let sb: HashSet<&MultiPoly> = b.iter().collect();
    sa == sb
}
