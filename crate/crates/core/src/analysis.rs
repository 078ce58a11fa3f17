//! Shape of coefficient sequences: symmetry, unimodality, log-concavity,
//! gamma vectors, real-rootedness by Sturm sequences, and a Toeplitz minor probe.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{decimal, IntPoly, RatPoly};

/// `p_i = p_{n-i}` for all `i`; the zero polynomial is symmetric for every `n`.
pub fn is_symmetric(p: &IntPoly, n: usize) -> bool {
    match p.degree() {
        None => true,
        Some(d) if d > n => false,
        Some(_) => p.reverse(n).is_ok_and(|r| &r == p),
    }
}

/// The `n` with `p_i = p_{n-i}`, if `p` is symmetric at all.
pub fn symmetry_degree(p: &IntPoly) -> Option<usize> {
    let n = p.valuation()? + p.degree()?;
    is_symmetric(p, n).then_some(n)
}

/// Unimodality and the set of peak indices `j` with
/// `p_0 <= ... <= p_j >= ... >= p_d`. The zero polynomial counts as the constant `0`.
pub fn unimodal_peaks(p: &IntPoly) -> (bool, BTreeSet<usize>) {
    let a = p.coeffs();
    if a.is_empty() {
        return (true, BTreeSet::from([0]));
    }
    let d = a.len() - 1;
    let peaks: BTreeSet<usize> = (0..=d)
        .filter(|&j| a[..=j].windows(2).all(|w| w[0] <= w[1]) && a[j..].windows(2).all(|w| w[0] >= w[1]))
        .collect();
    (!peaks.is_empty(), peaks)
}

pub fn is_log_concave(p: &IntPoly) -> bool {
    p.coeffs().windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// A zero coefficient strictly between two nonzero ones.
pub fn has_internal_zeros(p: &IntPoly) -> bool {
    let Some(lo) = p.valuation() else {
        return false;
    };
    p.coeffs()[lo..].iter().any(Zero::is_zero)
}

/// Coefficients of `p = Σ γ_i x^i (1+x)^{n-2i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaVector {
    pub n: usize,
    #[serde(serialize_with = "decimal::many")]
    pub gammas: Vec<BigInt>,
}

impl GammaVector {
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.gammas.clone())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    pub fn reconstruct(&self) -> IntPoly {
        let one_plus_x = IntPoly::from_slice(&[1, 1]);
        self.gammas
            .iter()
            .enumerate()
            .map(|(i, g)| one_plus_x.pow((self.n - 2 * i) as u32).shift(i).scale(g))
            .sum()
    }
}

/// Solves for the gamma vector of a polynomial symmetric about `n/2`.
pub fn gamma_extract(p: &IntPoly, n: usize) -> Result<GammaVector> {
    if !is_symmetric(p, n) {
        return Err(Error::NotSymmetric { n });
    }
    let mut gammas: Vec<BigInt> = Vec::with_capacity(n / 2 + 1);
    for j in 0..=n / 2 {
        let mut g = p.coeff(j);
        for (i, gi) in gammas.iter().enumerate() {
            g -= gi * binomial(BigInt::from(n - 2 * i), BigInt::from(j - i));
        }
        gammas.push(g);
    }
    while gammas.last().is_some_and(Zero::is_zero) {
        gammas.pop();
    }
    let gv = GammaVector { n, gammas };
    if &gv.reconstruct() != p {
        return Err(Error::NotSymmetric { n });
    }
    Ok(gv)
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let nz: Vec<i8> = signs.filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign_of(r: &num_rational::BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots, counted by a Sturm sequence.
pub fn sturm_distinct_real_roots(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq: Vec<RatPoly> = vec![p.to_rat(), p.to_rat().derivative()];
    while let Some(last) = seq.last().filter(|q| !q.is_zero()) {
        let prev = &seq[seq.len() - 2];
        let (_, r) = prev.div_rem(last)?;
        seq.push(-r);
    }
    seq.pop();
    let at_pos = seq.iter().map(|q| sign_of(q.leading().expect("nonzero")));
    let at_neg = seq.iter().map(|q| {
        let s = sign_of(q.leading().expect("nonzero"));
        if q.degree().expect("nonzero") % 2 == 1 {
            -s
        } else {
            s
        }
    });
    Ok(sign_changes(at_neg) - sign_changes(at_pos))
}

/// Square-free part `p / gcd(p, p')`.
pub fn square_free_part(p: &IntPoly) -> Result<RatPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = p.to_rat();
    let g = r.gcd(&r.derivative());
    r.div_exact(&g)
}

/// Whether every root of `p` is real, counting multiplicity.
pub fn sturm_real_rooted(p: &IntPoly) -> Result<bool> {
    let q = square_free_part(p)?;
    let deg = q.degree().expect("nonzero");
    // scale to integers so the Sturm routine can take an IntPoly
    let den = q
        .coeffs()
        .iter()
        .fold(BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let qi = IntPoly::new(q.coeffs().iter().map(|c| (c * &den).to_integer()).collect());
    Ok(sturm_distinct_real_roots(&qi)? == deg)
}

fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let k = m.len();
    if k == 0 {
        return BigInt::from(1);
    }
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for c in 0..k - 1 {
        if m[c][c].is_zero() {
            match (c + 1..k).find(|&r| !m[r][c].is_zero()) {
                Some(r) => {
                    m.swap(c, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in c + 1..k {
            for j in c + 1..k {
                m[i][j] = (&m[i][j] * &m[c][c] - &m[i][c] * &m[c][j]) / &prev;
            }
        }
        prev = m[c][c].clone();
    }
    sign * &m[k - 1][k - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub const TOEPLITZ_MAX_ORDER: usize = 6;

/// A negative minor of the Toeplitz matrix `(a_{i-j})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeMinor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(serialize_with = "decimal::one")]
    pub det: BigInt,
}

/// Searches minors of size at most `order` of `(a_{i-j})` over a window of size
/// `deg + order`. A necessary-condition probe for real-rootedness, not a proof.
pub fn toeplitz_negative_minor(p: &IntPoly, order: usize) -> Result<Option<NegativeMinor>> {
    if order > TOEPLITZ_MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "order {order} exceeds {TOEPLITZ_MAX_ORDER}"
        )));
    }
    if let Some(i) = p.coeffs().iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient {
            index: i,
            value: p.coeff(i),
        });
    }
    let size = p.degree().unwrap_or(0) + order;
    let entry = |i: usize, j: usize| if i >= j { p.coeff(i - j) } else { BigInt::zero() };
    for k in 1..=order {
        let subsets = combinations(size, k);
        for rows in &subsets {
            for cols in &subsets {
                let m: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| entry(i, j)).collect())
                    .collect();
                let det = det_bareiss(m);
                if det.is_negative() {
                    return Ok(Some(NegativeMinor {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        det,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn toeplitz_minor_check(p: &IntPoly, order: usize) -> Result<bool> {
    Ok(toeplitz_negative_minor(p, order)?.is_none())
}

/// Summary of every shape property of one polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub poly: IntPoly,
    pub symmetric: bool,
    /// Twice the center of symmetry.
    pub symmetry_degree: Option<usize>,
    pub center: Option<String>,
    pub unimodal: bool,
    pub peaks: BTreeSet<usize>,
    pub log_concave: bool,
    pub internal_zeros: bool,
    pub nonnegative: bool,
    pub gamma: Option<GammaVector>,
    pub gamma_nonnegative: Option<bool>,
    pub real_rooted: Option<bool>,
}

impl ShapeReport {
    /// Real-rooted with nonnegative coefficients forces log-concavity,
    /// unimodality and no internal zeros.
    pub fn is_consistent(&self) -> bool {
        if self.real_rooted == Some(true) && self.nonnegative {
            self.log_concave && self.unimodal && !self.internal_zeros
        } else {
            true
        }
    }
}

/// Shape of `p`; `symmetry` pins the degree used for gamma extraction, otherwise it is detected.
pub fn shape_report(p: &IntPoly, symmetry: Option<usize>) -> ShapeReport {
    let sym_n = match symmetry {
        Some(n) => is_symmetric(p, n).then_some(n),
        None => symmetry_degree(p),
    };
    let center = sym_n.map(|n| {
        if n % 2 == 0 {
            (n / 2).to_string()
        } else {
            format!("{n}/2")
        }
    });
    let gamma = sym_n.and_then(|n| gamma_extract(p, n).ok());
    let (unimodal, peaks) = unimodal_peaks(p);
    ShapeReport {
        poly: p.clone(),
        symmetric: sym_n.is_some() || p.is_zero(),
        symmetry_degree: sym_n,
        center,
        unimodal,
        peaks,
        log_concave: is_log_concave(p),
        internal_zeros: has_internal_zeros(p),
        nonnegative: p.is_nonnegative(),
        gamma_nonnegative: gamma.as_ref().map(GammaVector::is_nonnegative),
        gamma,
        real_rooted: sturm_real_rooted(p).ok(),
    }
}
