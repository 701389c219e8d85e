//! Dense univariate polynomials with exact coefficients.
//!
//! [`RatPoly`] is the workhorse (coefficients in Q, constant term first,
//! trailing zeros stripped, the zero polynomial has an empty coefficient
//! vector and degree `None`). [`IntPoly`] carries integer polynomials where
//! integrality matters: primitive parts in the gcd/Sturm machinery and the
//! factors of the zeta closed form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_to_string, Rat};

/// Polynomial over Q, coefficients indexed by degree.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::new(vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        RatPoly::new(coeffs)
    }

    pub fn x() -> Self {
        RatPoly::monomial(Rat::one(), 1)
    }

    /// Convenience constructor from small integers, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<RatPoly> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = lead.recip();
        Ok(self.scale(&inv))
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dlead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let ddeg = divisor.degree().unwrap_or(0);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let rdeg = rem.len() - 1;
            let factor = rem.last().expect("nonempty") / dlead;
            if !factor.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let idx = rdeg - ddeg + i;
                    rem[idx] = &rem[idx] - &factor * dc;
                }
                quot[rdeg - ddeg] = factor;
            }
            rem.pop();
        }
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// Division that must be exact; remainder is an internal error.
    pub fn exact_div(&self, divisor: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::internal("inexact polynomial division"));
        }
        Ok(q)
    }

    /// `x^n mod m` by binary exponentiation; `m` must have degree >= 1.
    pub fn x_pow_mod(n: u64, m: &RatPoly) -> Result<RatPoly> {
        if m.degree().unwrap_or(0) < 1 {
            return Err(Error::ConstantPolynomial);
        }
        let mut result = RatPoly::one();
        let mut base = RatPoly::x().div_rem(m)?.1;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).div_rem(m)?.1;
            }
            base = (&base * &base).div_rem(m)?.1;
            e >>= 1;
        }
        Ok(result)
    }

    /// Reversed coefficients, monic-normalized: roots map to reciprocals.
    ///
    /// Requires a nonzero constant term so the root map is invertible.
    pub fn reverse(&self) -> Result<RatPoly> {
        if self.is_zero() || self.coeff(0).is_zero() {
            return Err(Error::RootAtZero);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        RatPoly::new(coeffs).monic()
    }

    /// Clears denominators and content with a positive rational factor, so
    /// every sign is preserved. Zero maps to zero.
    pub fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        IntPoly::new(ints).primitive_part()
    }

    /// Exact integer image, if every coefficient is an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.denom().is_one()) {
            Some(IntPoly::new(
                self.coeffs.iter().map(|c| c.numer().clone()).collect(),
            ))
        } else {
            None
        }
    }

    /// Human form in descending powers, e.g. `x^4 - 2x^3 - 2x + 1`.
    pub fn display(&self, var: &str) -> String {
        display_terms(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, rat_to_string(c))),
            var,
        )
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self.display("x"))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

fn display_terms<I: Iterator<Item = (usize, String)>>(terms: I, var: &str) -> String {
    let mut out = String::new();
    for (deg, coeff) in terms {
        let neg = coeff.starts_with('-');
        let mag = if neg { coeff[1..].to_string() } else { coeff };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag == "1";
        match deg {
            0 => out.push_str(&mag),
            _ => {
                if !unit {
                    out.push_str(&mag);
                }
                out.push_str(var);
                if deg > 1 {
                    out.push_str(&format!("^{deg}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::ops::Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        RatPoly::new(out)
    }
}

/// Monic gcd over Q.
///
/// Intermediate remainders are rescaled to primitive integer polynomials
/// (positive factors only) to keep coefficients small.
pub fn poly_gcd(p: &RatPoly, q: &RatPoly) -> Result<RatPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    let mut a = p.to_primitive_int().to_rat_poly();
    let mut b = q.to_primitive_int().to_rat_poly();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r.to_primitive_int().to_rat_poly();
    }
    a.monic()
}

/// Yun squarefree decomposition: pairwise-coprime squarefree monic factors
/// with multiplicities, whose weighted product is `p` up to a constant.
pub fn squarefree_decompose(p: &RatPoly) -> Result<Vec<(RatPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let f = p.monic()?;
    let df = f.derivative();
    let g = poly_gcd(&f, &df)?;
    let mut w = f.exact_div(&g)?;
    let mut z = &df.exact_div(&g)? - &w.derivative();
    let mut out = Vec::new();
    let mut mult = 1usize;
    loop {
        if z.is_zero() {
            if w.degree().unwrap_or(0) > 0 {
                out.push((w, mult));
            }
            break;
        }
        let factor = poly_gcd(&w, &z)?;
        if factor.degree().unwrap_or(0) > 0 {
            out.push((factor.clone(), mult));
        }
        w = w.exact_div(&factor)?;
        z = &z.exact_div(&factor)? - &w.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors of `p`, monic.
pub fn squarefree_part(p: &RatPoly) -> Result<RatPoly> {
    let mut out = RatPoly::one();
    for (factor, _) in squarefree_decompose(p)? {
        out = &out * &factor;
    }
    Ok(out)
}

/// Polynomial over Z, coefficients indexed by degree.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Content divided out; signs are untouched.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn to_rat_poly(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Human form in ascending powers, e.g. `1 - 3z + z^2`.
    pub fn display_ascending(&self, var: &str) -> String {
        display_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.to_string())),
            var,
        )
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.to_rat_poly().display("x"))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rat_poly().display("x"))
    }
}
