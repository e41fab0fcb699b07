//! Sparse multivariate polynomials with exact coefficients.

mod monomial;
mod parse;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use monomial::Monomial;
pub use parse::poly_parse;

use crate::error::{Error, Result};
use crate::rings::{is_identifier, RingElement, RingSpec};

/// A polynomial over `spec` in the ordered indeterminates `vars`.
///
/// Canonical by construction: no stored coefficient is zero, and terms are
/// kept in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    spec: RingSpec,
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, RingElement>,
}

fn check_vars(vars: &[&str], spec: &RingSpec) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        if !is_identifier(v) || vars[..i].contains(v) || spec.extension_var() == Some(*v) {
            return Err(Error::BadVariable(v.to_string()));
        }
    }
    Ok(())
}

impl MultiPoly {
    pub fn zero(spec: &RingSpec, vars: &[&str]) -> Result<Self> {
        check_vars(vars, spec)?;
        Ok(MultiPoly {
            spec: spec.clone(),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        })
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms(
        spec: &RingSpec,
        vars: &[&str],
        terms: impl IntoIterator<Item = (Monomial, RingElement)>,
    ) -> Result<Self> {
        let mut p = Self::zero(spec, vars)?;
        for (m, c) in terms {
            if m.len() != vars.len() {
                return Err(Error::MonomialLength {
                    expected: vars.len(),
                    got: m.len(),
                });
            }
            if c.spec() != spec {
                return Err(Error::SpecMismatch {
                    left: spec.to_string(),
                    right: c.spec().to_string(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn constant(spec: &RingSpec, vars: &[&str], c: RingElement) -> Result<Self> {
        Self::from_terms(spec, vars, [(Monomial::one(vars.len()), c)])
    }

    /// The polynomial consisting of the single indeterminate `name`.
    pub fn var(spec: &RingSpec, vars: &[&str], name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Self::from_terms(spec, vars, [(Monomial::unit(vars.len(), i), spec.one())])
    }

    fn empty_like(&self) -> Self {
        MultiPoly {
            spec: self.spec.clone(),
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn constant_like(&self, c: RingElement) -> Self {
        let mut p = self.empty_like();
        p.add_term(Monomial::one(self.vars.len()), c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: RingElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_same(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RingElement)> + '_ {
        self.terms.iter()
    }

    /// The graded-lex least term, if any.
    pub fn least_term(&self) -> Option<(&Monomial, &RingElement)> {
        self.terms.iter().next()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &RingElement)> {
        self.terms.iter().next_back()
    }

    fn compatible(&self, other: &MultiPoly) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: other.spec.to_string(),
            });
        }
        if self.vars != other.vars {
            return Err(Error::VarListMismatch {
                left: self.vars.join(", "),
                right: other.vars.join(", "),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.compatible(other)?;
        Ok(self.add_same(other))
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.compatible(other)?;
        Ok(self.add_same(&other.neg()))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.compatible(other)?;
        Ok(self.mul_same(other))
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            spec: self.spec.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub(crate) fn add_same(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_same(other);
        out
    }

    pub(crate) fn add_assign_same(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub(crate) fn mul_same(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.empty_like();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul_same(c2));
            }
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RingElement) -> Result<MultiPoly> {
        if c.spec() != &self.spec {
            return Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: c.spec().to_string(),
            });
        }
        let mut out = self.empty_like();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul_same(c));
        }
        Ok(out)
    }

    /// `self^n` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut n: u64) -> MultiPoly {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            if let Ok(k) = u32::try_from(n) {
                let mut out = self.empty_like();
                out.add_term(m.pow(k), c.pow(n));
                return out;
            }
        }
        let mut acc = self.constant_like(self.spec.one());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_same(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_same(&base);
            }
        }
        acc
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.terms
            .keys()
            .next_back()
            .map_or(-1, |m| i64::from(m.total_degree()))
    }

    /// Degree in one indeterminate; `-1` for the zero polynomial.
    pub fn deg_in_var(&self, name: &str) -> Result<i64> {
        let i = self.var_index(name)?;
        Ok(self.deg_in_index(i))
    }

    pub fn deg_in_index(&self, i: usize) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.exponents()[i]))
            .max()
            .unwrap_or(-1)
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> MultiPoly {
        MultiPoly {
            spec: self.spec.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `m`, or zero when `m` is not a monomial of `self`.
    pub fn coeff(&self, m: &Monomial) -> Result<RingElement> {
        if m.len() != self.vars.len() {
            return Err(Error::MonomialLength {
                expected: self.vars.len(),
                got: m.len(),
            });
        }
        Ok(self.terms.get(m).cloned().unwrap_or_else(|| self.spec.zero()))
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &[u32]) -> Result<RingElement> {
        self.coeff(&Monomial::new(exps.iter().copied()))
    }

    /// Simultaneous substitution `v -> bindings[v]`, expanded over the
    /// variable list `target`. Variables of `self` without a binding are
    /// mapped to the same-named variable of `target`.
    pub fn substitute(&self, bindings: &[(&str, &MultiPoly)], target: &[&str]) -> Result<MultiPoly> {
        check_vars(target, &self.spec)?;
        for (name, q) in bindings {
            self.var_index(name)?;
            if q.spec != self.spec {
                return Err(Error::SpecMismatch {
                    left: self.spec.to_string(),
                    right: q.spec.to_string(),
                });
            }
            if q.vars.len() != target.len() || q.vars.iter().zip(target).any(|(a, b)| a != b) {
                return Err(Error::VarListMismatch {
                    left: q.vars.join(", "),
                    right: target.join(", "),
                });
            }
        }
        let images = self
            .vars
            .iter()
            .map(|v| match bindings.iter().find(|(name, _)| *name == v.as_str()) {
                Some((_, q)) => Ok((*q).clone()),
                None => MultiPoly::var(&self.spec, target, v),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.compose(&images))
    }

    /// Substitutes `images[i]` for `vars[i]`. All images share a spec and
    /// variable list, which becomes that of the result.
    pub(crate) fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        debug_assert_eq!(images.len(), self.vars.len());
        let result_like = images
            .first()
            .map(MultiPoly::empty_like)
            .unwrap_or_else(|| self.empty_like());
        let one = result_like.constant_like(self.spec.one());

        // powers[i][e] = images[i]^e, built by repeated multiplication
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|_| vec![one.clone()]).collect();
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("nonempty").mul_same(&images[i]);
                    powers[i].push(next);
                }
            }
        }

        let mut out = result_like;
        for (m, c) in &self.terms {
            let mut term = out.constant_like(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul_same(&powers[i][e as usize]);
                }
            }
            out.add_assign_same(&term);
        }
        out
    }

    /// Evaluates at a point (one ring element per variable).
    pub fn evaluate(&self, point: &[RingElement]) -> Result<RingElement> {
        if point.len() != self.vars.len() {
            return Err(Error::MonomialLength {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        if let Some(bad) = point.iter().find(|a| a.spec() != &self.spec) {
            return Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: bad.spec().to_string(),
            });
        }
        let mut acc = self.spec.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (a, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = t.mul_same(&a.pow(u64::from(e)));
                }
            }
            acc.add_assign_same(&t);
        }
        Ok(acc)
    }

    /// Reinterprets the polynomial over a different variable list by
    /// renaming variables position by position.
    pub fn with_vars(&self, vars: &[&str]) -> Result<MultiPoly> {
        if vars.len() != self.vars.len() {
            return Err(Error::VarListMismatch {
                left: self.vars.join(", "),
                right: vars.join(", "),
            });
        }
        check_vars(vars, &self.spec)?;
        Ok(MultiPoly {
            spec: self.spec.clone(),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: self.terms.clone(),
        })
    }

    /// Formats one term the way the canonical printer does, without a
    /// leading `+`.
    pub fn format_term(&self, m: &Monomial, c: &RingElement) -> String {
        let mut s = String::new();
        write_term(&mut s, &self.vars, m, c, true).expect("writing to a String");
        s
    }
}

fn write_monomial(f: &mut impl fmt::Write, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (v, &e) in vars.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

fn write_term(
    f: &mut impl fmt::Write,
    vars: &[String],
    m: &Monomial,
    c: &RingElement,
    leading: bool,
) -> fmt::Result {
    let negative = c.is_negative();
    let abs = if negative { c.neg() } else { c.clone() };
    match (leading, negative) {
        (true, true) => f.write_char('-')?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let coeff = if abs.is_constant() {
        abs.to_string()
    } else {
        format!("({abs})")
    };
    if m.is_one() {
        f.write_str(&coeff)
    } else {
        if !abs.is_one() {
            write!(f, "{coeff}*")?;
        }
        write_monomial(f, vars, m)
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms in descending graded-lex order, `*` between
    /// factors, `^` for powers, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, &self.vars, m, c, i == 0)?;
        }
        Ok(())
    }
}

/// Free-function forms matching the operation names used elsewhere.
pub fn poly_add(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.add(q)
}

pub fn poly_mul(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.mul(q)
}

pub fn poly_neg(p: &MultiPoly) -> MultiPoly {
    p.neg()
}

pub fn poly_pow(p: &MultiPoly, n: u64) -> MultiPoly {
    p.pow(n)
}
