//! Base-`p` digits, Lucas' theorem and the digit-sum sets `s_m(p)`.
//!
//! `s_m(p)` is the set of positive integers whose base-`p` digits sum to
//! `m`, i.e. the integers that are a sum of exactly `m` powers of `p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::Prime;

/// Base-`p` expansion of `n`, least significant digit first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasePDigits {
    pub n: u64,
    pub p: u64,
    pub digits: Vec<u64>,
}

impl BasePDigits {
    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// Digit `i`, zero beyond the most significant one.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }
}

fn digits_of(mut n: u64, p: u64) -> Vec<u64> {
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(n % p);
        n /= p;
    }
    digits
}

pub fn base_p_digits(n: u64, p: u64) -> Result<BasePDigits> {
    let p = Prime::new(p)?.get();
    Ok(BasePDigits {
        n,
        p,
        digits: digits_of(n, p),
    })
}

/// `n ∈ s_m(p)`.
pub fn in_s_m(n: u64, p: u64, m: u64) -> Result<bool> {
    Ok(n > 0 && base_p_digits(n, p)?.digit_sum() == m)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// `C(a, b) mod p` for digits `a, b < p`, zero when `a < b`.
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = (num as u128 * ((a - i) % p) as u128 % p as u128) as u64;
        den = (den as u128 * ((i + 1) % p) as u128 % p as u128) as u64;
    }
    // den is a product of integers in [1, p), hence invertible
    (num as u128 * pow_mod(den, p - 2, p) as u128 % p as u128) as u64
}

/// One factor `C(n_i, m_i)` of Lucas' product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LucasFactor {
    pub position: usize,
    pub n_digit: u64,
    pub m_digit: u64,
    pub residue: u64,
}

/// `C(n, m) mod p` together with the digitwise factors it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LucasBreakdown {
    pub n: u64,
    pub m: u64,
    pub p: u64,
    pub factors: Vec<LucasFactor>,
    pub residue: u64,
}

pub fn lucas_breakdown(n: u64, m: u64, p: u64) -> Result<LucasBreakdown> {
    let p = Prime::new(p)?.get();
    let nd = digits_of(n, p);
    let md = digits_of(m, p);
    let len = nd.len().max(md.len());
    let factors: Vec<LucasFactor> = (0..len)
        .map(|i| {
            let a = nd.get(i).copied().unwrap_or(0);
            let b = md.get(i).copied().unwrap_or(0);
            LucasFactor {
                position: i,
                n_digit: a,
                m_digit: b,
                residue: small_binom_mod(a, b, p),
            }
        })
        .collect();
    let residue = factors
        .iter()
        .fold(1 % p, |acc, f| (acc as u128 * f.residue as u128 % p as u128) as u64);
    Ok(LucasBreakdown {
        n,
        m,
        p,
        factors,
        residue,
    })
}

/// `C(n, m) mod p` by Lucas' theorem.
pub fn binom_mod_p(n: u64, m: u64, p: u64) -> Result<u64> {
    Ok(lucas_breakdown(n, m, p)?.residue)
}

/// Whether `p` divides every `C(n, m)` with `0 < m < n`.
pub fn is_s1_by_divisibility(n: u64, p: u64) -> Result<bool> {
    if n <= 1 {
        return Err(Error::InvalidArgument(format!("expected n > 1, got {n}")));
    }
    Prime::new(p)?;
    for m in 1..n {
        if binom_mod_p(n, m, p)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits `n ∈ s_2(p)` into `n1 + n2` with `n1 >= n2`, both in `s_1(p)`.
pub fn s2_decomposition(n: u64, p: u64) -> Result<(u64, u64)> {
    let d = base_p_digits(n, p)?;
    if d.digit_sum() != 2 {
        return Err(Error::NotInS2 { n, p });
    }
    let mut parts = Vec::with_capacity(2);
    let mut power = 1u64;
    for &digit in &d.digits {
        for _ in 0..digit {
            parts.push(power);
        }
        power = power.saturating_mul(p);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok((parts[0], parts[1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor2aReport {
    pub n: u64,
    pub p: u64,
    pub n1: u64,
    pub n2: u64,
    /// `p | C(n, m)` for every `m` in `1..n` other than `n1`, `n2`.
    pub interior_divisible: bool,
    /// `C(n, n1) mod p`.
    pub edge_residue: u64,
    /// `C(n, n2) mod p`.
    pub edge_residue_n2: u64,
    /// `(1 + [n1 == n2]) mod p`.
    pub expected_edge: u64,
}

impl Cor2aReport {
    pub fn holds(&self) -> bool {
        self.interior_divisible
            && self.edge_residue == self.expected_edge
            && self.edge_residue_n2 == self.expected_edge
    }
}

/// Checks the binomial pattern of `n ∈ s_2(p)` using the digit-derived
/// split. Over `p = 2` a split with equal parts cannot arise, since
/// `2^k + 2^k` has digit sum 1.
pub fn cor2a_check(n: u64, p: u64) -> Result<Cor2aReport> {
    let (n1, n2) = s2_decomposition(n, p)?;
    cor2a_report(n, n1, n2, p)
}

/// Same as [`cor2a_check`] for an explicit split `n = n1 + n2` with
/// `n1, n2 ∈ s_1(p)`. Equal parts are accepted for every `p`.
pub fn cor2a_check_parts(n1: u64, n2: u64, p: u64) -> Result<Cor2aReport> {
    for part in [n1, n2] {
        if !in_s_m(part, p, 1)? {
            return Err(Error::NotInS1 { n: part, p });
        }
    }
    let (n1, n2) = (n1.max(n2), n1.min(n2));
    cor2a_report(n1 + n2, n1, n2, p)
}

fn cor2a_report(n: u64, n1: u64, n2: u64, p: u64) -> Result<Cor2aReport> {
    let mut interior_divisible = true;
    for m in 1..n {
        if m != n1 && m != n2 && binom_mod_p(n, m, p)? != 0 {
            interior_divisible = false;
            break;
        }
    }
    Ok(Cor2aReport {
        n,
        p,
        n1,
        n2,
        interior_divisible,
        edge_residue: binom_mod_p(n, n1, p)?,
        edge_residue_n2: binom_mod_p(n, n2, p)?,
        expected_edge: (1 + u64::from(n1 == n2)) % p,
    })
}

/// Evaluates the implication "p divides C(n,m)·C(m,l) for all
/// 0 < l < m < n  ⟹  n ∈ s_1(p) ∪ s_2(p)". Returns `true` whenever the
/// implication holds (including vacuously).
pub fn cor2b_check(n: u64, p: u64) -> Result<bool> {
    if n <= 1 {
        return Err(Error::InvalidArgument(format!("expected n > 1, got {n}")));
    }
    Prime::new(p)?;
    let mut hypothesis = true;
    'scan: for m in 2..n {
        if binom_mod_p(n, m, p)? == 0 {
            continue;
        }
        for l in 1..m {
            if binom_mod_p(m, l, p)? != 0 {
                hypothesis = false;
                break 'scan;
            }
        }
    }
    if !hypothesis {
        return Ok(true);
    }
    let s = base_p_digits(n, p)?.digit_sum();
    Ok(s == 1 || s == 2)
}

/// Counts of failures when scanning the corollaries for `1 < n <= max_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorollaryScan {
    pub p: u64,
    pub max_n: u64,
    /// `n` where the divisibility criterion and `n ∈ s_1(p)` disagree.
    pub s1_mismatches: u64,
    pub s2_checked: u64,
    /// `n ∈ s_2(p)` whose binomial pattern does not hold.
    pub s2_failures: u64,
    /// `n` where [`cor2b_check`] returned false.
    pub implication_failures: u64,
}

impl CorollaryScan {
    pub fn mismatches(&self) -> u64 {
        self.s1_mismatches + self.s2_failures + self.implication_failures
    }
}

pub fn scan_corollaries(max_n: u64, p: u64) -> Result<CorollaryScan> {
    Prime::new(p)?;
    let mut scan = CorollaryScan {
        p,
        max_n,
        ..Default::default()
    };
    for n in 2..=max_n {
        if is_s1_by_divisibility(n, p)? != in_s_m(n, p, 1)? {
            scan.s1_mismatches += 1;
        }
        if in_s_m(n, p, 2)? {
            scan.s2_checked += 1;
            if !cor2a_check(n, p)?.holds() {
                scan.s2_failures += 1;
            }
        }
        if !cor2b_check(n, p)? {
            scan.implication_failures += 1;
        }
    }
    Ok(scan)
}
