//! Closed-form, recursive and summation paths to the families.
//!
//! Tables are returned for `0..=max_n`.

use num_bigint::BigInt;
use num_integer::{binomial, multinomial};

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

fn p(cs: &[i64]) -> IntPoly {
    IntPoly::from_slice(cs)
}

/// `A_0..A_max` from the Eulerian triangle
/// `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`, with `A_0 = 1`.
pub fn eulerian_triangle(max_n: usize) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::one()];
    for n in 1..=max_n {
        let prev = &out[n - 1];
        let row: Vec<BigInt> = (0..n)
            .map(|k| {
                let stay = prev.coeff(k) * big(k + 1);
                let up = if k >= 1 {
                    prev.coeff(k - 1) * big(n - k)
                } else {
                    BigInt::from(0)
                };
                stay + up
            })
            .collect();
        out.push(IntPoly::new(row));
    }
    out
}

/// `Σ_k (-1)^{n-k} C(n,k) seq[k]`.
pub fn alternating_binomial_sum(n: usize, seq: &[IntPoly]) -> IntPoly {
    (0..=n)
        .map(|k| {
            let c = binomial(big(n), big(k));
            let c = if (n - k).is_multiple_of(2) { c } else { -c };
            seq[k].scale(&c)
        })
        .sum()
}

/// `d_0..d_max` by the alternating sum over `A_k`.
pub fn derangement_a_table(max_n: usize) -> Vec<IntPoly> {
    let a = eulerian_triangle(max_n);
    (0..=max_n).map(|n| alternating_binomial_sum(n, &a)).collect()
}

/// Which values of `k` contribute to a composition sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    All,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, k: usize) -> bool {
        match self {
            Parity::All => true,
            Parity::Even => k.is_multiple_of(2),
            Parity::Odd => k % 2 == 1,
        }
    }
}

/// `Σ multinomial(n; r_0,...,r_k) x^{weight(k)} head[r_0] tail[r_1]...tail[r_k]`
/// over `r_0 >= 0`, `r_1..r_k >= 1` summing to `n`, restricted by `parity`.
/// `tail[0]` is never read: parts of the tail are positive.
pub fn composition_sum(
    n: usize,
    head: &[IntPoly],
    tail: &[IntPoly],
    parity: Parity,
    weight: impl Fn(usize) -> usize,
) -> IntPoly {
    let mut total = IntPoly::zero();
    let mut parts: Vec<usize> = Vec::new();
    for (r0, h) in head.iter().enumerate().take(n + 1) {
        walk(n - r0, &mut parts, tail, h, &mut |parts, prod| {
            let k = parts.len();
            if !parity.admits(k) {
                return;
            }
            let mut all = vec![r0];
            all.extend_from_slice(parts);
            let m: BigInt = multinomial(&all.iter().map(|&r| big(r)).collect::<Vec<_>>());
            total = &total + &prod.shift(weight(k)).scale(&m);
        });
    }
    total
}

fn walk(
    remaining: usize,
    parts: &mut Vec<usize>,
    tail: &[IntPoly],
    prod: &IntPoly,
    emit: &mut dyn FnMut(&[usize], &IntPoly),
) {
    if remaining == 0 {
        emit(parts, prod);
        return;
    }
    for r in 1..=remaining {
        parts.push(r);
        walk(remaining - r, parts, tail, &(prod * &tail[r]), emit);
        parts.pop();
    }
}

/// `d^B_n = Σ multinomial · x^{⌊(k+1)/2⌋} d_{r_0} A_{r_1} ... A_{r_k}`.
pub fn main_formula(n: usize) -> IntPoly {
    composition_sum(n, &derangement_a_table(n), &eulerian_triangle(n), Parity::All, |k| {
        k.div_ceil(2)
    })
}

/// The even-`k` part, weighted by `x^{k/2}`.
pub fn f_plus_multinomial(n: usize) -> IntPoly {
    composition_sum(n, &derangement_a_table(n), &eulerian_triangle(n), Parity::Even, |k| {
        k / 2
    })
}

/// The odd-`k` part, weighted by `x^{(k+1)/2}`.
pub fn f_minus_multinomial(n: usize) -> IntPoly {
    composition_sum(n, &derangement_a_table(n), &eulerian_triangle(n), Parity::Odd, |k| {
        k.div_ceil(2)
    })
}

/// `ξ⁺_n` from `ξ_r` and `γ_r`; `ξ_0 = 1`, `γ_0` unused.
pub fn xi_plus_multinomial(n: usize, xi: &[IntPoly], gamma: &[IntPoly]) -> IntPoly {
    composition_sum(n, xi, gamma, Parity::Even, |k| k / 2)
}

pub fn xi_minus_multinomial(n: usize, xi: &[IntPoly], gamma: &[IntPoly]) -> IntPoly {
    composition_sum(n, xi, gamma, Parity::Odd, |k| k.div_ceil(2))
}

/// `B⁺_n = E_2((1+x)^n A_n)` for `n >= 1`, and `B⁺_0 = 1`.
pub fn b_plus_e2(n: usize, a_n: &IntPoly) -> Result<IntPoly> {
    if n == 0 {
        return Ok(IntPoly::one());
    }
    (&p(&[1, 1]).pow(n as u32) * a_n).er_operator(2)
}

/// `B⁻_n = x^n B⁺_n(1/x)` for `n >= 1`, and `B⁻_0 = 0`.
pub fn b_minus_reversal(n: usize, b_plus: &IntPoly) -> Result<IntPoly> {
    if n == 0 {
        return Ok(IntPoly::zero());
    }
    b_plus.reverse(n)
}

/// `B⁺_0..B⁺_max` by the E₂ formula.
pub fn b_plus_table(max_n: usize) -> Result<Vec<IntPoly>> {
    let a = eulerian_triangle(max_n);
    (0..=max_n).map(|n| b_plus_e2(n, &a[n])).collect()
}

pub fn b_minus_table(max_n: usize) -> Result<Vec<IntPoly>> {
    let bp = b_plus_table(max_n)?;
    (0..=max_n).map(|n| b_minus_reversal(n, &bp[n])).collect()
}

/// `B_n = B⁺_n + B⁻_n` from the E₂ formula and reversal.
pub fn b_table(max_n: usize) -> Result<Vec<IntPoly>> {
    let bp = b_plus_table(max_n)?;
    let bm = b_minus_table(max_n)?;
    Ok(bp.iter().zip(&bm).map(|(a, b)| a + b).collect())
}

/// `B⁺_n = 2(n-1)x B⁺_{n-1} + 2x(1-x) B⁺'_{n-1} + B_{n-1}`, where
/// `B_{n-1}` is `B⁺_{n-1}` plus its reversal.
pub fn b_plus_recurrence_table(max_n: usize) -> Result<Vec<IntPoly>> {
    let mut bp = vec![IntPoly::one()];
    let two_x_one_minus_x = p(&[0, 2, -2]);
    for n in 1..=max_n {
        let prev = &bp[n - 1];
        let b_prev = if n == 1 {
            IntPoly::one()
        } else {
            prev + &prev.reverse(n - 1)?
        };
        let next = prev.shift(1).scale(&big(2 * (n - 1))) + &two_x_one_minus_x * &prev.derivative() + b_prev;
        bp.push(next);
    }
    Ok(bp)
}

/// `B⁺_n = (1-x)^n Σ_i ((2i+1)^n - (2i)^n) x^i`, read off through `x^n`.
pub fn b_plus_series_identity(n: usize) -> IntPoly {
    if n == 0 {
        return IntPoly::one();
    }
    let series: IntPoly = (0..=n as u32)
        .map(|i| BigInt::from(2 * i + 1).pow(n as u32) - BigInt::from(2 * i).pow(n as u32))
        .collect();
    (&p(&[1, -1]).pow(n as u32) * &series).truncate(n)
}

/// `f⁺_0..f⁺_max` by
/// `f⁺_n = (2(n-1)x-1) f⁺_{n-1} + 2x(1-x) f⁺'_{n-1} + 2(n-1)x f⁺_{n-2} + d^B_{n-1}`.
pub fn f_plus_recurrence_table(max_n: usize, d_b: &[IntPoly]) -> Vec<IntPoly> {
    let mut f = vec![IntPoly::one()];
    let two_x_one_minus_x = p(&[0, 2, -2]);
    for n in 1..=max_n {
        let m = big(n - 1);
        let lead = IntPoly::new(vec![BigInt::from(-1), &m * 2]);
        let mut next = &lead * &f[n - 1] + &two_x_one_minus_x * &f[n - 1].derivative() + &d_b[n - 1];
        if n >= 2 {
            next = next + f[n - 2].shift(1).scale(&(&m * 2));
        }
        f.push(next);
    }
    f
}

/// Splits `p` into `(p⁺, p⁻)` with `p⁺` symmetric about `n/2` and `p⁻` about `(n+1)/2`.
pub fn symmetric_decompose(p: &IntPoly, n: usize) -> Result<(IntPoly, IntPoly)> {
    if p.degree().is_some_and(|d| d > n + 1) {
        return Err(Error::NoDecomposition { n });
    }
    let c = |i: usize| p.coeff(i);
    let mut b = vec![c(n + 1)];
    for i in 0..=n {
        let next = &b[i] + c(n - i) - c(i);
        b.push(next);
    }
    let minus = IntPoly::new(b);
    let plus = p - &minus;
    let ok = crate::analysis::is_symmetric(&plus, n) && crate::analysis::is_symmetric(&minus, n + 1);
    if !ok {
        return Err(Error::NoDecomposition { n });
    }
    Ok((plus, minus))
}

/// Checks the coefficient recurrences
/// `a⁺_{n,k} = (2k-1)a⁺_{n-1,k} + 2(n-k)a⁺_{n-1,k-1} + 2(n-1)a⁺_{n-2,k-1} + d^B_{n-1,k}`
/// and its `a⁻` analogue with `d^B_{n-1,k-1}`, for `n >= 2`, `k >= 1`.
pub fn coeff_recurrence_holds(n: usize, k: usize, f_plus: &[IntPoly], f_minus: &[IntPoly], d_b: &[IntPoly]) -> bool {
    if n < 2 || k < 1 {
        return false;
    }
    let two_k_minus_one = BigInt::from(2 * k as i64 - 1);
    let two_n_minus_k = BigInt::from(2 * (n as i64 - k as i64));
    let two_n_minus_one = big(2 * (n - 1));
    let rhs = |f: &[IntPoly], extra: BigInt| {
        &two_k_minus_one * f[n - 1].coeff(k)
            + &two_n_minus_k * f[n - 1].coeff(k - 1)
            + &two_n_minus_one * f[n - 2].coeff(k - 1)
            + extra
    };
    f_plus[n].coeff(k) == rhs(f_plus, d_b[n - 1].coeff(k))
        && f_minus[n].coeff(k) == rhs(f_minus, d_b[n - 1].coeff(k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_rows() {
        let a = eulerian_triangle(4);
        assert_eq!(a[0], p(&[1]));
        assert_eq!(a[3], p(&[1, 4, 1]));
        assert_eq!(a[4], p(&[1, 11, 11, 1]));
    }

    #[test]
    fn derangement_rows() {
        let d = derangement_a_table(4);
        assert_eq!(d[0], p(&[1]));
        assert_eq!(d[1], IntPoly::zero());
        assert_eq!(d[2], p(&[0, 1]));
        assert_eq!(d[3], p(&[0, 1, 1]));
        assert_eq!(d[4], p(&[0, 1, 7, 1]));
    }

    #[test]
    fn main_formula_small() {
        assert_eq!(main_formula(1), p(&[0, 1]));
        assert_eq!(main_formula(2), p(&[0, 4, 1]));
        assert_eq!(main_formula(3), p(&[0, 8, 20, 1]));
    }

    #[test]
    fn decomposition_example() {
        let (a, b) = symmetric_decompose(&p(&[0, 8, 20, 1]), 3).unwrap();
        assert_eq!(a, p(&[0, 7, 7]));
        assert_eq!(b, p(&[0, 1, 13, 1]));
        assert_eq!(
            symmetric_decompose(&p(&[0, 0, 0, 0, 0, 1]), 3),
            Err(Error::NoDecomposition { n: 3 })
        );
    }

    #[test]
    fn half_eulerian_paths_agree() {
        let rec = b_plus_recurrence_table(8).unwrap();
        let e2 = b_plus_table(8).unwrap();
        assert_eq!(rec, e2);
        for (n, want) in e2.iter().enumerate() {
            assert_eq!(&b_plus_series_identity(n), want, "n = {n}");
        }
        assert_eq!(e2[3], p(&[1, 16, 7]));
    }
}
