//! Families as generating functions over exhaustive enumeration.

use crate::error::Result;
use crate::exactpoly::IntPoly;
use crate::signedperm::{bn_distribution, sn_distribution, Half};

pub fn eulerian_a_by_des(n: usize) -> Result<IntPoly> {
    sn_distribution(n, |p| Some(p.des()))
}

pub fn eulerian_a_by_exc(n: usize) -> Result<IntPoly> {
    sn_distribution(n, |p| Some(p.exc()))
}

pub fn derangement_a_by_exc(n: usize) -> Result<IntPoly> {
    sn_distribution(n, |p| p.is_derangement().then(|| p.exc()))
}

pub fn eulerian_b_by_des(n: usize, allow_large: bool) -> Result<IntPoly> {
    bn_distribution(n, allow_large, |w| Some(w.des_b()))
}

pub fn eulerian_b_by_exc(n: usize, allow_large: bool) -> Result<IntPoly> {
    bn_distribution(n, allow_large, |w| Some(w.exc_b()))
}

/// `des_B` over `B⁺_n` or `B⁻_n`; `B⁺_0` is the empty permutation.
pub fn half_eulerian_by_des(n: usize, half: Half, allow_large: bool) -> Result<IntPoly> {
    if n == 0 {
        return Ok(match half {
            Half::Plus => IntPoly::one(),
            Half::Minus => IntPoly::zero(),
        });
    }
    bn_distribution(n, allow_large, |w| (w.half().ok() == Some(half)).then(|| w.des_b()))
}

pub fn derangement_b_by_exc(n: usize, allow_large: bool) -> Result<IntPoly> {
    bn_distribution(n, allow_large, |w| w.is_derangement().then(|| w.exc_b()))
}

pub fn derangement_b_by_iexc(n: usize, allow_large: bool) -> Result<IntPoly> {
    bn_distribution(n, allow_large, |w| w.is_derangement().then(|| w.iexc_b()))
}

/// `exc_B` over `D^B_n ∩ B*_n` (`inside = true`) or its complement in `D^B_n`, for `n >= 1`.
pub fn derangement_b_restricted(n: usize, inside: bool, allow_large: bool) -> Result<IntPoly> {
    bn_distribution(n, allow_large, |w| {
        (w.is_derangement() && w.in_bstar().ok() == Some(inside)).then(|| w.exc_b())
    })
}
