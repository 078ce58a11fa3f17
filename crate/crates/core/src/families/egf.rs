//! Closed-form exponential generating functions, expanded exactly.
//!
//! Several denominators have constant term `1 - x`; [`EgfSeries::quotient`]
//! divides that factor out of numerator and denominator before inverting.

use crate::error::Result;
use crate::exactpoly::{EgfSeries, IntPoly};

fn p(cs: &[i64]) -> IntPoly {
    IntPoly::from_slice(cs)
}

fn e(c: &[i64], order: usize) -> EgfSeries {
    EgfSeries::exp_scaled(&p(c), order)
}

fn times(c: &[i64], s: &EgfSeries) -> EgfSeries {
    s.scale_poly(&p(c).to_rat())
}

/// `e^{2xt} - x e^{2t}`.
fn type_b_denominator(order: usize) -> Result<EgfSeries> {
    e(&[0, 2], order).sub(&times(&[0, 1], &e(&[2], order)))
}

/// `(e^t - e^{xt}) / (e^{xt} - x e^t)`: the Eulerian polynomials `A_n`, `n >= 1`.
pub fn eulerian_a(order: usize) -> Result<EgfSeries> {
    let num = e(&[1], order).sub(&e(&[0, 1], order))?;
    let den = e(&[0, 1], order).sub(&times(&[0, 1], &e(&[1], order)))?;
    EgfSeries::quotient(&num, &den)
}

/// `(1 - x) / (e^{xt} - x e^t)`: the derangement polynomials `d_n`.
pub fn derangement_a(order: usize) -> Result<EgfSeries> {
    let num = times(&[1, -1], &EgfSeries::identity(order));
    let den = e(&[0, 1], order).sub(&times(&[0, 1], &e(&[1], order)))?;
    EgfSeries::quotient(&num, &den)
}

/// `(1 - x) e^{xt} / (e^{2xt} - x e^{2t})`: `d^B_n`.
pub fn derangement_b(order: usize) -> Result<EgfSeries> {
    let num = times(&[1, -1], &e(&[0, 1], order));
    EgfSeries::quotient(&num, &type_b_denominator(order)?)
}

/// `(e^{xt} - x e^t) / (e^{2xt} - x e^{2t})`: `f⁺_n`.
pub fn f_plus(order: usize) -> Result<EgfSeries> {
    let num = e(&[0, 1], order).sub(&times(&[0, 1], &e(&[1], order)))?;
    EgfSeries::quotient(&num, &type_b_denominator(order)?)
}

/// `x (e^t - e^{xt}) / (e^{2xt} - x e^{2t})`: `f⁻_n`.
pub fn f_minus(order: usize) -> Result<EgfSeries> {
    let num = times(&[0, 1], &e(&[1], order).sub(&e(&[0, 1], order))?);
    EgfSeries::quotient(&num, &type_b_denominator(order)?)
}

/// `e^t (e^{xt} - x e^t) / (e^{2xt} - x e^{2t})`: `B⁺_n`.
pub fn b_plus(order: usize) -> Result<EgfSeries> {
    let num = e(&[1, 1], order).sub(&times(&[0, 1], &e(&[2], order)))?;
    EgfSeries::quotient(&num, &type_b_denominator(order)?)
}

/// `x e^t (e^t - e^{xt}) / (e^{2xt} - x e^{2t})`: `B⁻_n`.
pub fn b_minus(order: usize) -> Result<EgfSeries> {
    let num = times(&[0, 1], &e(&[2], order).sub(&e(&[1, 1], order))?);
    EgfSeries::quotient(&num, &type_b_denominator(order)?)
}

/// `𝔇(t) (1 + x 𝔞(t)) / (1 - x 𝔞(t)^2)` where `𝔞` is the Eulerian series
/// with its constant term removed.
pub fn derangement_b_composite(order: usize) -> Result<EgfSeries> {
    let a = eulerian_a(order)?;
    let one = EgfSeries::identity(order);
    let xa = times(&[0, 1], &a);
    let num = derangement_a(order)?.mul(&one.add(&xa)?)?;
    let den = one.sub(&xa.mul(&a)?)?;
    num.mul(&den.inverse()?)
}

/// Reads entry `n` as an integer polynomial.
pub fn coefficient(series: &EgfSeries, n: usize) -> Result<IntPoly> {
    series.int_coeff(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_and_derangements() {
        let a = eulerian_a(4).unwrap();
        assert_eq!(a.int_coeff(0).unwrap(), IntPoly::zero());
        assert_eq!(a.int_coeff(4).unwrap(), p(&[1, 11, 11, 1]));
        let d = derangement_a(4).unwrap();
        assert_eq!(d.int_coeff(4).unwrap(), p(&[0, 1, 7, 1]));
    }

    #[test]
    fn type_b_series() {
        assert_eq!(derangement_b(3).unwrap().int_coeff(3).unwrap(), p(&[0, 8, 20, 1]));
        assert_eq!(f_plus(4).unwrap().int_coeff(4).unwrap(), p(&[0, 15, 87, 15]));
        assert_eq!(f_minus(3).unwrap().int_coeff(3).unwrap(), p(&[0, 1, 13, 1]));
        assert_eq!(b_plus(3).unwrap().int_coeff(3).unwrap(), p(&[1, 16, 7]));
        assert_eq!(b_minus(3).unwrap().int_coeff(3).unwrap(), p(&[0, 7, 16, 1]));
        assert_eq!(derangement_b_composite(4).unwrap(), derangement_b(4).unwrap());
    }
}
