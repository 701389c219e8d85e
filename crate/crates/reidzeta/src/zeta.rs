//! The Reidemeister zeta function `exp(sum_n R(phi^n) z^n / n)`, exactly.
//!
//! Two independent routes:
//!
//! - [`zeta_series`] computes the truncated power series straight from the
//!   Reidemeister numbers of the iterates;
//! - [`zeta_closed_form`] assembles the rational closed form out of
//!   exterior powers: with `M` the automorphism matrix,
//!   `R_phi(z) = [ prod_k det(I - e2 z L^k M)^((-1)^(k+1)) ]^(e1)`, where
//!   `e2 = (-1)^q` compensates real eigenvalues below -1 (their factor in
//!   `det(I - M^n)` alternates with `n`) and `e1 = (-1)^(p+q)` fixes the
//!   constant sign from real eigenvalues outside `[-1, 1]`.
//!
//! [`verify_zeta`] expands the closed form back into a series and demands
//! coefficient-by-coefficient agreement with the direct series.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::nilpotent::{reidemeister_sequence, Automorphism, Reidemeister};
use crate::poly::{poly_gcd, IntPoly, RatPoly};
use crate::rat::{rat_to_string, Rat};
use crate::spectral;

/// Truncated zeta series `c_0 + c_1 z + ... + c_N z^N`, with `c_0 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaSeries {
    pub coefficients: Vec<Rat>,
}

impl Serialize for ZetaSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coefficients.iter().map(rat_to_string).collect();
        strings.serialize(serializer)
    }
}

/// Factors with multiplicities, one side of a displayed fraction.
pub type FactorSide = Vec<(IntPoly, u32)>;

/// One factor `det(I - w L^k M)` of the closed form, as a polynomial in
/// the (possibly negated) argument, with its exponent `(-1)^(k+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaFactor {
    /// Constant term 1.
    pub poly: IntPoly,
    /// +1 or -1.
    pub exponent: i8,
}

/// Exact rational form of the zeta function as a signed product of integer
/// polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaForm {
    pub factors: Vec<ZetaFactor>,
    /// When set, the argument inside the factors is `-z` instead of `z`.
    pub sign_flip: bool,
    /// +1 or -1, applied to the whole product.
    pub outer_exponent: i8,
}

impl Serialize for ZetaForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct FactorDoc {
            poly: Vec<String>,
            exponent: i8,
        }
        let mut s = serializer.serialize_struct("ZetaForm", 3)?;
        s.serialize_field("outer_exponent", &self.outer_exponent)?;
        s.serialize_field("sign_flip", &self.sign_flip)?;
        let factors: Vec<FactorDoc> = self
            .factors
            .iter()
            .map(|f| FactorDoc {
                poly: f.poly.coeffs().iter().map(|c| c.to_string()).collect(),
                exponent: f.exponent,
            })
            .collect();
        s.serialize_field("factors", &factors)?;
        s.end()
    }
}

/// Requires a tame automorphism; reports the offending power otherwise.
fn require_tame(phi: &Automorphism<'_>) -> Result<spectral::SpectralReport> {
    let poly = phi.matrix().char_poly()?;
    let report = spectral::classify(&poly)?;
    if let Some(n) = report.min_infinite_power {
        return Err(Error::NotTame(n));
    }
    Ok(report)
}

/// Exact truncation of `exp(sum R(phi^n) z^n / n)` to order `n_terms`.
pub fn zeta_series(phi: &Automorphism<'_>, n_terms: u64) -> Result<ZetaSeries> {
    require_tame(phi)?;
    let rs = reidemeister_sequence(phi, n_terms)?;
    let mut numbers = Vec::with_capacity(rs.len());
    for (idx, r) in rs.iter().enumerate() {
        match r {
            Reidemeister::Finite(v) => numbers.push(v.clone()),
            Reidemeister::Infinite => return Err(Error::NotTame(idx as u64 + 1)),
        }
    }
    // m c_m = sum_{j=1..m} R(phi^j) c_{m-j}
    let mut coefficients = vec![Rat::one()];
    for m in 1..=n_terms as usize {
        let mut acc = Rat::zero();
        for j in 1..=m {
            acc += &numbers[j - 1] * &coefficients[m - j];
        }
        coefficients.push(acc / Rat::from_integer(BigInt::from(m)));
    }
    Ok(ZetaSeries { coefficients })
}

/// Closed rational form via exterior powers; needs a tame, integer-like
/// automorphism.
pub fn zeta_closed_form(phi: &Automorphism<'_>) -> Result<ZetaForm> {
    let report = require_tame(phi)?;
    if !report.integer_like {
        return Err(Error::NotIntegerLike);
    }
    let sign_flip = report.q_count % 2 == 1;
    let outer_exponent: i8 = if (report.p_count + report.q_count) % 2 == 1 {
        -1
    } else {
        1
    };
    let m = phi.matrix();
    let dim = m.rows();
    let mut factors = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let ext = m.exterior_power(k)?;
        let char_poly = ext.char_poly()?;
        // det(I - w N) is char_poly(N) with the coefficients reversed
        let size = ext.rows();
        let coeffs: Vec<Rat> = (0..=size).map(|i| char_poly.coeff(size - i)).collect();
        if !coeffs.first().is_some_and(|c| c.is_one()) {
            return Err(Error::internal("zeta factor without constant term 1"));
        }
        let int = RatPoly::new(coeffs)
            .to_int_poly()
            .ok_or_else(|| Error::internal("zeta factor is not an integer polynomial"))?;
        factors.push(ZetaFactor {
            poly: int,
            exponent: if k % 2 == 1 { 1 } else { -1 },
        });
    }
    Ok(ZetaForm {
        factors,
        sign_flip,
        outer_exponent,
    })
}

/// Truncated product of two coefficient slices, result length `n + 1`.
fn mul_series(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] = &out[i + j] + ai * bj;
        }
    }
    out
}

/// Inverse of a series with constant term 1.
fn invert_series(a: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n + 1];
    out[0] = Rat::one();
    for m in 1..=n {
        let mut acc = Rat::zero();
        for j in 1..=m {
            let aj = a.get(j).cloned().unwrap_or_else(Rat::zero);
            acc += &aj * &out[m - j];
        }
        out[m] = -acc;
    }
    out
}

/// Negates odd coefficients: `p(z) -> p(-z)`.
fn negate_argument(p: &IntPoly) -> IntPoly {
    IntPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect(),
    )
}

/// Normalizes an integer divisor of a constant-term-1 polynomial so that
/// its own constant term is +1.
fn with_unit_constant(p: IntPoly) -> IntPoly {
    if p.coeff(0) < BigInt::zero() {
        IntPoly::new(p.coeffs().iter().map(|c| -c).collect())
    } else {
        p
    }
}

impl ZetaForm {
    /// Formal expansion to order `n_terms`: each factor truncated as a
    /// series, exponent -1 through power-series inversion.
    pub fn series(&self, n_terms: u64) -> ZetaSeries {
        let n = n_terms as usize;
        let mut acc = vec![Rat::zero(); n + 1];
        acc[0] = Rat::one();
        for factor in &self.factors {
            let poly = if self.sign_flip {
                negate_argument(&factor.poly)
            } else {
                factor.poly.clone()
            };
            let mut f: Vec<Rat> = (0..=n).map(|i| Rat::from_integer(poly.coeff(i))).collect();
            if factor.exponent < 0 {
                f = invert_series(&f, n);
            }
            acc = mul_series(&acc, &f, n);
        }
        if self.outer_exponent < 0 {
            acc = invert_series(&acc, n);
        }
        ZetaSeries { coefficients: acc }
    }

    /// Factored numerator and denominator in `z`, after substituting the
    /// sign and applying the outer exponent: equal factors are grouped and
    /// common polynomial factors across the fraction bar are cancelled.
    /// An empty side reads as 1.
    pub fn simplified(&self) -> (FactorSide, FactorSide) {
        let mut num: FactorSide = Vec::new();
        let mut den: FactorSide = Vec::new();
        for factor in &self.factors {
            let in_z = if self.sign_flip {
                negate_argument(&factor.poly)
            } else {
                factor.poly.clone()
            };
            if in_z.degree().unwrap_or(0) == 0 {
                continue;
            }
            let exp = i32::from(factor.exponent) * i32::from(self.outer_exponent);
            let side = if exp > 0 { &mut num } else { &mut den };
            merge_factor(side, in_z, 1);
        }
        cancel_common(&mut num, &mut den);
        (num, den)
    }

    /// Human form like `(1-z)^2 / (1-3z+z^2)`.
    pub fn display(&self) -> String {
        let (num, den) = self.simplified();
        let render = |side: &[(IntPoly, u32)]| -> String {
            if side.is_empty() {
                return "1".to_string();
            }
            side.iter()
                .map(|(p, count)| {
                    let base = format!("({})", p.display_ascending("z"));
                    if *count > 1 {
                        format!("{base}^{count}")
                    } else {
                        base
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let num_str = render(&num);
        if den.is_empty() {
            num_str
        } else {
            format!("{num_str} / {}", render(&den))
        }
    }
}

fn merge_factor(side: &mut FactorSide, poly: IntPoly, count: u32) {
    if count == 0 || poly.degree().unwrap_or(0) == 0 {
        return;
    }
    match side.iter_mut().find(|(p, _)| *p == poly) {
        Some((_, c)) => *c += count,
        None => side.push((poly, count)),
    }
}

/// Repeatedly extracts a common polynomial factor of one numerator entry
/// and one denominator entry; each round strictly reduces total degree.
fn cancel_common(num: &mut FactorSide, den: &mut FactorSide) {
    'restart: loop {
        for ni in 0..num.len() {
            for di in 0..den.len() {
                let g = match poly_gcd(&num[ni].0.to_rat_poly(), &den[di].0.to_rat_poly()) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                if g.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let gz = with_unit_constant(g.to_primitive_int());
                let gq = gz.to_rat_poly();
                let num_co = num[ni]
                    .0
                    .to_rat_poly()
                    .exact_div(&gq)
                    .ok()
                    .and_then(|p| p.to_int_poly());
                let den_co = den[di]
                    .0
                    .to_rat_poly()
                    .exact_div(&gq)
                    .ok()
                    .and_then(|p| p.to_int_poly());
                let (Some(num_co), Some(den_co)) = (num_co, den_co) else {
                    continue;
                };
                let (_, a) = num.remove(ni);
                let (_, b) = den.remove(di);
                let c = a.min(b);
                merge_factor(num, num_co, a);
                merge_factor(num, gz.clone(), a - c);
                merge_factor(den, den_co, b);
                merge_factor(den, gz, b - c);
                continue 'restart;
            }
        }
        return;
    }
}

/// Expands the closed form and compares against the series from the
/// Reidemeister numbers, coefficient by coefficient.
pub fn verify_zeta(phi: &Automorphism<'_>, n_terms: u64) -> Result<()> {
    let series = zeta_series(phi, n_terms)?;
    let form = zeta_closed_form(phi)?;
    let expanded = form.series(n_terms);
    for (idx, (a, b)) in series
        .coefficients
        .iter()
        .zip(&expanded.coefficients)
        .enumerate()
    {
        if a != b {
            return Err(Error::ZetaMismatch {
                index: idx,
                series: rat_to_string(a),
                closed: rat_to_string(b),
            });
        }
    }
    Ok(())
}

impl fmt::Display for ZetaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}
