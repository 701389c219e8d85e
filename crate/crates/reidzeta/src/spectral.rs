//! Spectral classification of a monic characteristic polynomial.
//!
//! The trichotomy for an automorphism of a torsion-free finitely generated
//! nilpotent group, read off the characteristic polynomial of its action on
//! the rational Mal'cev Lie algebra:
//!
//! - eigenvalue 1 means the Reidemeister number is infinite;
//! - a root-of-unity eigenvalue means some iterate has eigenvalue 1, so the
//!   automorphism is not tame, and the least witnessing power is reported;
//! - no root of unity but some eigenvalue of absolute value 1 gives a tame
//!   automorphism that is not Anosov;
//! - an empty unit circle makes it Anosov.
//!
//! Everything runs over Q. Unit-circle roots are located by pairing each
//! squarefree factor with its reversal, descending by `x + 1/x = y`, and
//! Sturm-counting the image polynomial on `(-2, 2)`.

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, squarefree_decompose, squarefree_part, RatPoly};
use crate::rat::{rat_int, rat_to_string, Rat};
use crate::sturm::{sturm_count, Bound};

/// Full verdict for one automorphism (equivalently one monic char poly).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    /// The monic characteristic polynomial that was classified.
    pub poly: RatPoly,
    /// `R(phi)` finite, i.e. 1 is not an eigenvalue.
    pub reidemeister_finite: bool,
    /// All iterates have finite Reidemeister number.
    pub tame: bool,
    /// No eigenvalue of absolute value 1.
    pub anosov: bool,
    /// Integer coefficients with constant term +-1.
    pub integer_like: bool,
    /// Least `n >= 1` with `R(phi^n)` infinite, absent when tame.
    pub min_infinite_power: Option<u64>,
    /// Conjugate pairs of non-real eigenvalues of modulus 1, with multiplicity.
    pub unit_circle_pairs: usize,
    /// Real eigenvalues above 1, with multiplicity.
    pub p_count: usize,
    /// Real eigenvalues below -1, with multiplicity.
    pub q_count: usize,
}

impl Serialize for SpectralReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SpectralReport", 9)?;
        let coeffs: Vec<String> = self.poly.coeffs().iter().map(rat_to_string).collect();
        s.serialize_field("poly", &coeffs)?;
        s.serialize_field("reidemeister_finite", &self.reidemeister_finite)?;
        s.serialize_field("tame", &self.tame)?;
        s.serialize_field("anosov", &self.anosov)?;
        s.serialize_field("integer_like", &self.integer_like)?;
        s.serialize_field("min_infinite_power", &self.min_infinite_power)?;
        s.serialize_field("unit_circle_pairs", &self.unit_circle_pairs)?;
        s.serialize_field("p_count", &self.p_count)?;
        s.serialize_field("q_count", &self.q_count)?;
        s.end()
    }
}

/// `p(1) = 0`, i.e. the automorphism has infinite Reidemeister number.
pub fn has_eigenvalue_one(p: &RatPoly) -> bool {
    p.eval(&Rat::one()).is_zero()
}

/// Integer coefficients and constant term +-1 (eigenvalues are algebraic
/// units). Assumes `p` monic.
pub fn is_integer_like(p: &RatPoly) -> bool {
    if !p.coeffs().iter().all(|c| c.denom().is_one()) {
        return false;
    }
    let c0 = p.coeff(0);
    c0 == Rat::one() || c0 == -Rat::one()
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut phi = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            phi -= phi / d;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Least `n >= 1` such that `gcd(p, x^n - 1)` is nonconstant, i.e. the
/// smallest order among root-of-unity eigenvalues; `None` when no
/// eigenvalue is a root of unity.
///
/// A degree-`d` polynomial can only contain roots of unity whose order `n`
/// has `phi(n) <= d`, and `phi(n) >= sqrt(n/2)` bounds the scan by
/// `2d^2 + 1`. Divisibility is tested through `x^n mod p`, never by
/// factoring. Roots of unity are closed under inversion, so they live in
/// the self-reciprocal part `gcd(p, reverse p)`; the scan runs there,
/// which is usually a much smaller polynomial (often constant, settling
/// the question immediately).
pub fn root_of_unity_order(p: &RatPoly) -> Result<Option<u64>> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.degree().filter(|&d| d >= 1).is_none() {
        return Err(Error::ConstantPolynomial);
    }
    // powers of x contribute no roots of unity; strip them so the
    // reversal below is defined
    let mut stripped = p.clone();
    let x = RatPoly::x();
    while !stripped.is_zero() && stripped.coeff(0).is_zero() {
        stripped = stripped.exact_div(&x)?;
    }
    if stripped.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let host = poly_gcd(&stripped, &stripped.reverse()?)?;
    let d = host.degree().unwrap_or(0) as u64;
    if d == 0 {
        return Ok(None);
    }
    for n in 1..=2 * d * d + 1 {
        if euler_phi(n) > d {
            continue;
        }
        let xn = RatPoly::x_pow_mod(n, &host)?;
        let reduced = &xn - &RatPoly::one();
        let g = poly_gcd(&host, &reduced)?;
        if g.degree().unwrap_or(0) >= 1 {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Count of conjugate pairs of non-real modulus-1 roots, with multiplicity.
///
/// Per squarefree factor `f`: roots on the unit circle are closed under
/// inversion, so they live in `g = gcd(f, reverse f)`. After stripping
/// roots at exactly +-1, `g` is self-reciprocal of even degree and descends
/// along `x + 1/x = y` to a polynomial whose roots in `(-2, 2)` are exactly
/// the non-real unit-circle pairs.
pub fn unit_circle_pair_count(p: &RatPoly) -> Result<usize> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::RootAtZero);
    }
    let mut pairs = 0usize;
    for (factor, mult) in squarefree_decompose(p)? {
        let reversed = factor.reverse()?;
        let mut g = poly_gcd(&factor, &reversed)?;
        g = strip_roots_at_units(&g)?;
        let deg = g.degree().unwrap_or(0);
        if deg == 0 {
            continue;
        }
        // inversion-closed roots away from 0 and +-1 pair up into
        // quadratics x^2 - (l + 1/l) x + 1, so g must be a literal
        // coefficient palindrome of even degree
        let palindrome = (0..=deg).all(|i| g.coeff(i) == g.coeff(deg - i));
        if deg % 2 != 0 || !palindrome {
            return Err(Error::internal(
                "unit-circle factor is not self-reciprocal of even degree",
            ));
        }
        let q = chebyshev_descend(&g);
        let q = squarefree_part(&q)?;
        let in_band = sturm_count(&q, &Bound::Finite(rat_int(-2)), &Bound::Finite(rat_int(2)))?;
        pairs += mult * in_band;
    }
    Ok(pairs)
}

fn strip_roots_at_units(g: &RatPoly) -> Result<RatPoly> {
    let mut g = g.clone();
    for root in [1i64, -1] {
        let linear = RatPoly::from_ints(&[-root, 1]);
        while !g.is_zero() && g.eval(&rat_int(root)).is_zero() {
            g = g.exact_div(&linear)?;
        }
    }
    Ok(g)
}

/// For self-reciprocal `g` of degree `2m`, the polynomial `q` with
/// `g(x) = x^m q(x + 1/x)`, via `x^j + x^-j = C_j(y)`, `C_0 = 2`,
/// `C_1 = y`, `C_j = y C_{j-1} - C_{j-2}`.
fn chebyshev_descend(g: &RatPoly) -> RatPoly {
    let two_m = g.degree().unwrap_or(0);
    let m = two_m / 2;
    let mut c_prev = RatPoly::constant(rat_int(2));
    let mut c_cur = RatPoly::x();
    let mut q = RatPoly::constant(g.coeff(m));
    for j in 1..=m {
        let c_j = if j == 1 {
            c_cur.clone()
        } else {
            let next = &(&RatPoly::x() * &c_cur) - &c_prev;
            c_prev = std::mem::replace(&mut c_cur, next);
            c_cur.clone()
        };
        q = &q + &c_j.scale(&g.coeff(m + j));
    }
    q
}

/// Real roots strictly above 1 and strictly below -1, with multiplicity.
pub fn count_real_outside(p: &RatPoly) -> Result<(usize, usize)> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut above = 0usize;
    let mut below = 0usize;
    for (factor, mult) in squarefree_decompose(p)? {
        let f = strip_roots_at_units(&factor)?;
        if f.degree().unwrap_or(0) == 0 {
            continue;
        }
        above += mult * sturm_count(&f, &Bound::Finite(rat_int(1)), &Bound::PosInf)?;
        below += mult * sturm_count(&f, &Bound::NegInf, &Bound::Finite(rat_int(-1)))?;
    }
    Ok((above, below))
}

/// Classify a monic characteristic polynomial of degree >= 1 with
/// nonvanishing constant term.
pub fn classify(p: &RatPoly) -> Result<SpectralReport> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.degree().filter(|&d| d >= 1).is_none() {
        return Err(Error::ConstantPolynomial);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::RootAtZero);
    }
    let min_infinite_power = root_of_unity_order(p)?;
    let tame = min_infinite_power.is_none();
    let reidemeister_finite = !has_eigenvalue_one(p);
    let unit_circle_pairs = unit_circle_pair_count(p)?;
    let root_at_one = p.eval(&Rat::one()).is_zero();
    let root_at_minus_one = p.eval(&-Rat::one()).is_zero();
    let anosov = tame && unit_circle_pairs == 0 && !root_at_one && !root_at_minus_one;
    let (p_count, q_count) = count_real_outside(p)?;
    let report = SpectralReport {
        poly: p.clone(),
        reidemeister_finite,
        tame,
        anosov,
        integer_like: is_integer_like(p),
        min_infinite_power,
        unit_circle_pairs,
        p_count,
        q_count,
    };
    // the implication chain and the power/finiteness bridges must hold
    let consistent = (!report.anosov || report.tame)
        && (!report.tame || report.reidemeister_finite)
        && (report.tame == report.min_infinite_power.is_none())
        && (report.reidemeister_finite == (report.min_infinite_power != Some(1)));
    if !consistent {
        return Err(Error::internal("inconsistent spectral report"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_ints(coeffs)
    }

    /// x^4 - 2x^3 - 2x + 1: two real roots off the unit circle and one
    /// pair of modulus-1 roots that are not roots of unity.
    fn quartic_unit() -> RatPoly {
        p(&[1, -2, 0, -2, 1])
    }

    #[test]
    fn eigenvalue_one_detection() {
        assert!(!has_eigenvalue_one(&p(&[1, -3, 1])));
        let with_one = &p(&[-1, 1]) * &p(&[-2, 1]);
        assert!(has_eigenvalue_one(&with_one));
        assert!(!has_eigenvalue_one(&quartic_unit())); // p(1) = -2
    }

    #[test]
    fn euler_phi_small_values() {
        let expect = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e, "phi({})", i + 1);
        }
    }

    #[test]
    fn root_of_unity_orders() {
        // Phi_6 = x^2 - x + 1
        assert_eq!(root_of_unity_order(&p(&[1, -1, 1])).unwrap(), Some(6));
        // modulus-1 roots that are not roots of unity
        assert_eq!(root_of_unity_order(&quartic_unit()).unwrap(), None);
        // x + 1
        assert_eq!(root_of_unity_order(&p(&[1, 1])).unwrap(), Some(2));
        // x - 1
        assert_eq!(root_of_unity_order(&p(&[-1, 1])).unwrap(), Some(1));
        // mixed: (x^2 - x + 1)(x^2 - 3x + 1) still reports order 6
        let mixed = &p(&[1, -1, 1]) * &p(&[1, -3, 1]);
        assert_eq!(root_of_unity_order(&mixed).unwrap(), Some(6));
        // Phi_4 beats Phi_6 when both divide
        let both = &p(&[1, 0, 1]) * &p(&[1, -1, 1]);
        assert_eq!(root_of_unity_order(&both).unwrap(), Some(4));
        assert!(root_of_unity_order(&p(&[1])).is_err());
    }

    #[test]
    fn unit_circle_pairs_examples() {
        assert_eq!(unit_circle_pair_count(&quartic_unit()).unwrap(), 1);
        assert_eq!(unit_circle_pair_count(&p(&[1, -3, 1])).unwrap(), 0);
        assert_eq!(unit_circle_pair_count(&p(&[1, -1, 1])).unwrap(), 1);
        // multiplicity: (x^2 - x + 1)^2 has two pairs
        let sq = &p(&[1, -1, 1]) * &p(&[1, -1, 1]);
        assert_eq!(unit_circle_pair_count(&sq).unwrap(), 2);
        // roots at +-1 are excluded here
        let pm = &p(&[-1, 1]) * &p(&[1, 1]);
        assert_eq!(unit_circle_pair_count(&pm).unwrap(), 0);
        assert!(unit_circle_pair_count(&p(&[0, 1])).is_err());
    }

    #[test]
    fn real_roots_outside_unit_interval() {
        assert_eq!(count_real_outside(&p(&[1, -3, 1])).unwrap(), (1, 0));
        let sq = &p(&[1, -3, 1]) * &p(&[1, -3, 1]);
        assert_eq!(count_real_outside(&sq).unwrap(), (2, 0));
        assert_eq!(count_real_outside(&p(&[2, 1])).unwrap(), (0, 1));
        // roots at exactly +-1 do not count
        let pm = &p(&[-1, 1]) * &p(&[1, 1]);
        assert_eq!(count_real_outside(&pm).unwrap(), (0, 0));
    }

    #[test]
    fn integer_like_checks() {
        assert!(is_integer_like(&p(&[1, -3, 1])));
        assert!(!is_integer_like(&p(&[2, -3, 1])));
        let half = RatPoly::new(vec![Rat::one(), crate::rat::rat(-3, 2), Rat::one()]);
        assert!(!is_integer_like(&half));
    }

    #[test]
    fn classify_quartic_unit_tame_not_anosov() {
        let report = classify(&quartic_unit()).unwrap();
        assert!(report.tame);
        assert!(!report.anosov);
        assert!(report.reidemeister_finite);
        assert!(report.integer_like);
        assert_eq!(report.min_infinite_power, None);
        assert_eq!(report.unit_circle_pairs, 1);
        assert_eq!(report.p_count, 1);
        assert_eq!(report.q_count, 0);
    }

    #[test]
    fn classify_double_cat_map_anosov() {
        // doubled cat map: char poly (x^2 - 3x + 1)^2
        let b = &p(&[1, -3, 1]) * &p(&[1, -3, 1]);
        let report = classify(&b).unwrap();
        assert!(report.tame);
        assert!(report.anosov);
        assert_eq!(report.unit_circle_pairs, 0);
        assert_eq!(report.p_count, 2);
    }

    #[test]
    fn classify_explicit_eigenvalue_one() {
        let f = &p(&[-1, 1]) * &p(&[1, -3, 1]);
        let report = classify(&f).unwrap();
        assert!(!report.reidemeister_finite);
        assert!(!report.tame);
        assert_eq!(report.min_infinite_power, Some(1));
    }

    #[test]
    fn classify_rejects_bad_inputs() {
        assert!(classify(&p(&[3])).is_err());
        assert!(classify(&p(&[0, 1])).is_err());
        assert!(classify(&p(&[1, 2])).is_err()); // not monic? (2x + 1) -> leading 2
    }

    #[test]
    fn min_power_recheck_by_definition() {
        // when present, gcd(p, x^n - 1) is nonconstant at n and constant below
        for poly in [p(&[1, -1, 1]), p(&[1, 1]), &p(&[1, 0, 1]) * &p(&[1, -3, 1])] {
            if let Some(n) = root_of_unity_order(&poly).unwrap() {
                for m in 1..n {
                    let xm = RatPoly::x_pow_mod(m, &poly).unwrap();
                    let g = poly_gcd(&poly, &(&xm - &RatPoly::one())).unwrap();
                    assert_eq!(g.degree(), Some(0), "premature hit at {m}");
                }
                let xn = RatPoly::x_pow_mod(n, &poly).unwrap();
                let g = poly_gcd(&poly, &(&xn - &RatPoly::one())).unwrap();
                assert!(g.degree().unwrap_or(0) >= 1);
            }
        }
    }

    #[test]
    fn degree_accounting_sums_up() {
        // built from known factors: (x^2-x+1) Phi_6, (x-1), (x+2), (x^2-3x+1)
        let f = &(&p(&[1, -1, 1]) * &p(&[-1, 1])) * &(&p(&[2, 1]) * &p(&[1, -3, 1]));
        let deg = f.degree().unwrap();
        let ucp = unit_circle_pair_count(&f).unwrap();
        let (pc, qc) = count_real_outside(&f).unwrap();
        let at_one = usize::from(f.eval(&Rat::one()).is_zero());
        let at_minus_one = usize::from(f.eval(&-Rat::one()).is_zero());
        // remaining roots: real in (-1,1) and non-real pairs off the circle
        let in_band = 1; // root of x^2-3x+1 at about 0.38
        let off_circle_pairs = 0;
        assert_eq!(
            2 * ucp + at_one + at_minus_one + pc + qc + in_band + 2 * off_circle_pairs,
            deg
        );
    }

    #[test]
    fn report_serializes_with_exact_keys() {
        let report = classify(&quartic_unit()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            "{\"poly\":[\"1\",\"-2\",\"0\",\"-2\",\"1\"],\"reidemeister_finite\":true,\
             \"tame\":true,\"anosov\":false,\"integer_like\":true,\
             \"min_infinite_power\":null,\"unit_circle_pairs\":1,\"p_count\":1,\"q_count\":0}"
        );
    }
}
