//! Sturm sequences: exact counting of distinct real roots in an interval.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};
use crate::rat::Rat;

/// Interval endpoint; infinities evaluate through leading-coefficient signs.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl Bound {
    pub fn finite(r: Rat) -> Bound {
        Bound::Finite(r)
    }

    fn is_below(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => false,
        }
    }
}

/// Number of distinct real roots of squarefree `p` in the open interval
/// `(lo, hi)`.
///
/// Finite endpoints must not be roots; divide such roots out first. The
/// chain is computed over Q and every remainder is rescaled to a primitive
/// integer polynomial by a positive factor, which keeps coefficients small
/// without touching signs.
pub fn sturm_count(p: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.is_below(hi) {
        return Err(Error::EmptyInterval);
    }
    for b in [lo, hi] {
        if let Bound::Finite(x) = b {
            if p.eval(x).is_zero() {
                return Err(Error::RootAtEndpoint);
            }
        }
    }
    let chain = sturm_chain(p)?;
    let v_lo = variations(&chain, lo);
    let v_hi = variations(&chain, hi);
    v_lo.checked_sub(v_hi)
        .ok_or_else(|| Error::internal("sign variations increased along the interval"))
}

/// The canonical chain `p, p', -rem(...)`; rejects non-squarefree input,
/// detected by a nonconstant final element.
fn sturm_chain(p: &RatPoly) -> Result<Vec<IntPoly>> {
    let mut chain = vec![p.to_primitive_int()];
    let dp = p.derivative();
    if !dp.is_zero() {
        chain.push(dp.to_primitive_int());
    }
    loop {
        let m = chain.len();
        if m < 2 || chain[m - 1].is_zero() {
            break;
        }
        let a = chain[m - 2].to_rat_poly();
        let b = chain[m - 1].to_rat_poly();
        let (_, r) = a.div_rem(&b)?;
        if r.is_zero() {
            break;
        }
        let neg = -&r;
        chain.push(neg.to_primitive_int());
    }
    let last = chain.last().expect("nonempty chain");
    if last.degree().unwrap_or(0) > 0 {
        return Err(Error::NotSquarefree);
    }
    Ok(chain)
}

fn sign_at(p: &IntPoly, b: &Bound) -> i8 {
    let Some(lead) = p.leading() else { return 0 };
    let lead_sign = if lead.is_positive() { 1 } else { -1 };
    match b {
        Bound::PosInf => lead_sign,
        Bound::NegInf => {
            if p.degree().unwrap_or(0).is_multiple_of(2) {
                lead_sign
            } else {
                -lead_sign
            }
        }
        Bound::Finite(x) => {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
    }
}

fn variations(chain: &[IntPoly], b: &Bound) -> usize {
    let mut count = 0;
    let mut prev: i8 = 0;
    for p in chain {
        let s = sign_at(p, b);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}
