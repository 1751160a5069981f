//! Polynomials over GF(2) as machine-word bitmasks, with irreducibility and
//! primitivity tests.
//!
//! Bit `i` of the mask is the coefficient of `x^i`; degree 63 is plenty for
//! desk scale. Irreducibility is decided by gcds with `x^(2^d) - x` for
//! `d <= k/2`; primitivity additionally checks the multiplicative order of
//! `x` via the prime factors of `2^k - 1`. Factoring uses trial division
//! with a budget, and an exhausted budget is an explicit error, never a
//! silent `false`.

use std::fmt;

use crate::error::{Error, Result};

/// Trial divisors tried when factoring `2^k - 1`. Every degree used by the
/// run-minimal family (k <= 22, and well beyond) factors instantly.
const FACTOR_BUDGET: u64 = 1 << 22;

/// A non-zero polynomial over GF(2), encoded as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Poly(pub u64);

impl F2Poly {
    pub const ONE: F2Poly = F2Poly(1);
    pub const X: F2Poly = F2Poly(2);

    /// The trinomial `x^k + x + 1`.
    pub fn trinomial(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::DegreeTooSmall { op: "trinomial", k });
        }
        Ok(F2Poly((1 << k) | 0b11))
    }

    pub fn degree(self) -> u32 {
        63 - self.0.leading_zeros()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Coefficient of `x^i`.
    pub fn coeff(self, i: u32) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    /// Tap mask for the induced recurrence: the low `k` coefficients.
    pub fn taps(self) -> u64 {
        self.0 & !(1 << self.degree())
    }

    /// The reciprocal `x^k C(1/x)`: coefficients reversed. Requires a
    /// non-zero constant term so the degree is preserved.
    pub fn reciprocal(self) -> Result<Self> {
        if !self.coeff(0) {
            return Err(Error::ConstantTermZero);
        }
        let k = self.degree();
        let mut out = 0u64;
        for i in 0..=k {
            if self.coeff(i) {
                out |= 1 << (k - i);
            }
        }
        Ok(F2Poly(out))
    }

    /// Parse caret notation (`x^4+x+1`, `x`, `1`) or a hex bitmask (`0x13`).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let invalid = || Error::InvalidAlphabet(format!("cannot parse polynomial '{text}'"));
        if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
            let bits = u64::from_str_radix(hex, 16).map_err(|_| invalid())?;
            if bits == 0 {
                return Err(Error::ZeroModulus);
            }
            return Ok(F2Poly(bits));
        }
        let mut bits = 0u64;
        for term in text.split('+') {
            let term = term.trim();
            let bit = if term == "1" {
                0
            } else if term == "x" {
                1
            } else if let Some(exp) = term.strip_prefix("x^") {
                exp.trim().parse::<u32>().map_err(|_| invalid())?
            } else {
                return Err(invalid());
            };
            if bit > 63 {
                return Err(invalid());
            }
            bits ^= 1 << bit;
        }
        if bits == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(F2Poly(bits))
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..=self.degree()).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Carry-less product, full width.
fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= (a as u128) << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn reduce(mut v: u128, m: F2Poly) -> F2Poly {
    let dm = m.degree();
    while v >> dm != 0 {
        let dv = 127 - v.leading_zeros();
        v ^= (m.0 as u128) << (dv - dm);
    }
    F2Poly(v as u64)
}

/// `(a * b) mod m` over GF(2).
pub fn poly_mul_mod(a: F2Poly, b: F2Poly, m: F2Poly) -> Result<F2Poly> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(reduce(clmul(a.0, b.0), m))
}

/// `base^exp mod m` by square and multiply.
pub fn poly_pow_mod(base: F2Poly, exp: u64, m: F2Poly) -> Result<F2Poly> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let mut acc = reduce(1, m);
    let mut sq = reduce(base.0 as u128, m);
    let mut exp = exp;
    while exp != 0 {
        if exp & 1 == 1 {
            acc = reduce(clmul(acc.0, sq.0), m);
        }
        sq = reduce(clmul(sq.0, sq.0), m);
        exp >>= 1;
    }
    Ok(acc)
}

pub fn poly_gcd(a: F2Poly, b: F2Poly) -> F2Poly {
    let (mut a, mut b) = (a.0, b.0);
    while b != 0 {
        let r = reduce(a as u128, F2Poly(b)).0;
        a = b;
        b = r;
    }
    F2Poly(a)
}

/// `x^(2^e) mod m` by repeated squaring of `x`.
fn frobenius(e: u32, m: F2Poly) -> F2Poly {
    let mut v = reduce(F2Poly::X.0 as u128, m);
    for _ in 0..e {
        v = reduce(clmul(v.0, v.0), m);
    }
    v
}

/// True iff `c` has no non-trivial factor over GF(2).
///
/// `x^(2^d) - x` is the product of all irreducibles of degree dividing `d`,
/// so a reducible `c` of degree `k` shares a factor with one of them for
/// some `d <= k/2`.
pub fn is_irreducible(c: F2Poly) -> bool {
    let k = c.degree();
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let probe = F2Poly(frobenius(d, c).0 ^ F2Poly::X.0);
        let g = poly_gcd(c, probe);
        if g != F2Poly::ONE {
            return false;
        }
    }
    true
}

/// Prime factors of `n` by trial division; `Err` carries the unfactored
/// cofactor if the budget runs out.
fn prime_factors(mut n: u64) -> std::result::Result<Vec<u64>, u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= n / d {
        if d > FACTOR_BUDGET {
            return Err(n);
        }
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    Ok(out)
}

/// True iff `c` is irreducible and `x` generates the full multiplicative
/// group of `GF(2)[x]/(c)`, i.e. has order `2^k - 1`.
pub fn is_primitive(c: F2Poly) -> Result<bool> {
    let k = c.degree();
    if k < 2 {
        return Err(Error::DegreeTooSmall { op: "is_primitive", k });
    }
    if !is_irreducible(c) {
        return Ok(false);
    }
    let order = (1u64 << k) - 1;
    let primes = prime_factors(order).map_err(|cofactor| Error::PrimitivityUndecided {
        poly: c.to_string(),
        cofactor,
    })?;
    debug_assert_eq!(poly_pow_mod(F2Poly::X, order, c)?, F2Poly::ONE);
    for p in primes {
        if poly_pow_mod(F2Poly::X, order / p, c)? == F2Poly::ONE {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degrees `k in [2..=k_max]` for which `x^k + x + 1` is primitive.
pub fn primitive_trinomial_degrees(k_max: u32) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        if is_primitive(F2Poly::trinomial(k)?)? {
            out.push(k);
        }
    }
    Ok(out)
}

/// Trial-division irreducibility used as an oracle in tests: try every
/// possible factor of degree at most `k/2`.
#[cfg(test)]
pub(crate) fn is_irreducible_by_trial_division(c: F2Poly) -> bool {
    let k = c.degree();
    if k == 0 {
        return false;
    }
    for d in 1..=k / 2 {
        for bits in (1u64 << d)..(1u64 << (d + 1)) {
            if reduce(c.0 as u128, F2Poly(bits)).is_zero() {
                return false;
            }
        }
    }
    true
}
