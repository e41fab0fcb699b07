use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector over the owning polynomial's variable list.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors compared left to right (the first variable is the most
/// significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        let exps: SmallVec<[u32; 4]> = exps.into_iter().collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    /// The monomial `vars[index]`.
    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * n).collect(),
            degree: self.degree * n,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
