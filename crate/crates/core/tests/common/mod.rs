//! Independent oracles: brute-force enumeration written from the definitions,
//! schoolbook `i128` polynomial arithmetic, and Hermite's real-root count.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use bderange::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type P = Vec<i128>;

pub fn trim(mut p: P) -> P {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn ip(p: &[i128]) -> IntPoly {
    p.iter().copied().collect()
}

pub fn add(a: &[i128], b: &[i128]) -> P {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0))
            .collect(),
    )
}

pub fn sub(a: &[i128], b: &[i128]) -> P {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&0) - b.get(i).unwrap_or(&0))
            .collect(),
    )
}

pub fn mul(a: &[i128], b: &[i128]) -> P {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

pub fn scale(a: &[i128], c: i128) -> P {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn pow(a: &[i128], k: usize) -> P {
    (0..k).fold(vec![1], |acc, _| mul(&acc, a))
}

/// `x^m p(1/x)`, assuming `deg p <= m`.
pub fn reverse(p: &[i128], m: usize) -> P {
    assert!(p.len() <= m + 1);
    trim((0..=m).map(|i| *p.get(m - i).unwrap_or(&0)).collect())
}

pub fn e_r(p: &[i128], r: usize) -> P {
    trim(p.iter().step_by(r).copied().collect())
}

pub fn binom(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

pub fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

/// Every permutation of `1..=n` as a one-line word.
pub fn perms(n: usize) -> Vec<Vec<i32>> {
    fn go(rest: &mut Vec<i32>, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n as i32).collect(), &mut Vec::new(), &mut out);
    out
}

/// Every signed permutation of `[n]` as its entry list.
pub fn signed_perms(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for p in perms(n) {
        for mask in 0u32..1 << n {
            out.push(
                p.iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect(),
            );
        }
    }
    out
}

/// A signed permutation read as `w(a_i) = e[i-1]`, where `a_i` is the element
/// of the ground set `{e}` with absolute value `i`.
pub struct Signed1<'a> {
    pub e: &'a [i32],
    pub a: Vec<i32>,
}

impl<'a> Signed1<'a> {
    pub fn new(e: &'a [i32]) -> Self {
        let mut a = vec![0; e.len()];
        for &v in e {
            a[v.unsigned_abs() as usize - 1] = v;
        }
        Signed1 { e, a }
    }

    pub fn w(&self, x: i32) -> i32 {
        self.e[x.unsigned_abs() as usize - 1]
    }

    pub fn w_inv(&self, y: i32) -> i32 {
        *self.a.iter().find(|&&x| self.w(x) == y).expect("in ground set")
    }

    pub fn exc_b(&self) -> usize {
        self.a
            .iter()
            .filter(|&&x| self.w(x) > x || (x < 0 && self.w(x) == x))
            .count()
    }

    pub fn iexc_b(&self) -> usize {
        self.a
            .iter()
            .filter(|&&x| self.w(x) < x || (x < 0 && self.w(x) == x))
            .count()
    }

    pub fn des_b(&self) -> usize {
        let mut prev = 0;
        let mut d = 0;
        for &v in self.e {
            d += usize::from(prev > v);
            prev = v;
        }
        d
    }

    pub fn is_derangement(&self) -> bool {
        !self.a.iter().any(|&x| x > 0 && self.w(x) == x)
    }

    pub fn min(&self) -> i32 {
        *self.a.iter().min().expect("nonempty")
    }
}

/// Distributions over `B_n` gathered in one pass.
#[derive(Clone, Debug, Default)]
pub struct BnData {
    pub des_b: P,
    pub exc_b: P,
    pub d_exc: P,
    pub d_iexc: P,
    pub f_plus: P,
    pub f_minus: P,
    pub b_plus: P,
    pub b_minus: P,
    pub derangements: usize,
}

fn bump(p: &mut P, k: usize) {
    if p.len() <= k {
        p.resize(k + 1, 0);
    }
    p[k] += 1;
}

pub fn bn_data(n: usize) -> BnData {
    static CACHE: OnceLock<Mutex<HashMap<usize, BnData>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().unwrap().get(&n) {
        return d.clone();
    }
    let mut d = BnData::default();
    for e in signed_perms(n) {
        let s = Signed1::new(&e);
        let (des, exc) = (s.des_b(), s.exc_b());
        bump(&mut d.des_b, des);
        bump(&mut d.exc_b, exc);
        if n >= 1 {
            if *e.last().unwrap() > 0 {
                bump(&mut d.b_plus, des);
            } else {
                bump(&mut d.b_minus, des);
            }
        }
        if s.is_derangement() {
            d.derangements += 1;
            bump(&mut d.d_exc, exc);
            bump(&mut d.d_iexc, s.iexc_b());
            if n >= 1 {
                if s.w(s.min()) > 0 {
                    bump(&mut d.f_plus, exc);
                } else {
                    bump(&mut d.f_minus, exc);
                }
            }
        }
    }
    if n == 0 {
        d.b_plus = vec![1];
        d.f_plus = vec![1];
    }
    cache.lock().unwrap().insert(n, d.clone());
    d
}

/// `Σ x^{exc}` over derangements of `[n]`.
pub fn derangement_a(n: usize) -> P {
    let mut p = P::new();
    for w in perms(n) {
        if w.iter().enumerate().all(|(i, &v)| v != i as i32 + 1) {
            bump(&mut p, w.iter().enumerate().filter(|(i, &v)| v > *i as i32 + 1).count());
        }
    }
    trim(p)
}

/// Eulerian numbers by `A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1)`, with `A_0 = 1`.
pub fn eulerian(n: usize) -> P {
    let mut row = vec![1i128];
    for m in 1..=n {
        let mut next = vec![0i128; m];
        for k in 0..m {
            let stay = if k < row.len() { (k as i128 + 1) * row[k] } else { 0 };
            let up = if k >= 1 && k - 1 < row.len() {
                (m - k) as i128 * row[k - 1]
            } else {
                0
            };
            next[k] = stay + up;
        }
        row = next;
    }
    row
}

/// Type-B Eulerian numbers by `B(n,k) = (2k+1)B(n-1,k) + (2n-2k+1)B(n-1,k-1)`.
pub fn eulerian_b(n: usize) -> P {
    let mut row = vec![1i128];
    for m in 1..=n {
        let next = (0..=m)
            .map(|k| {
                let stay = row.get(k).map_or(0, |v| (2 * k as i128 + 1) * v);
                let up = if k >= 1 {
                    row.get(k - 1).map_or(0, |v| (2 * (m - k) as i128 + 1) * v)
                } else {
                    0
                };
                stay + up
            })
            .collect();
        row = next;
    }
    row
}

/// `B⁺_n` from `(1-x)^n Σ ((2i+1)^n - (2i)^n) x^i`.
pub fn b_plus_series(n: usize) -> P {
    if n == 0 {
        return vec![1];
    }
    let s: P = (0..=n)
        .map(|i| (2 * i as i128 + 1).pow(n as u32) - (2 * i as i128).pow(n as u32))
        .collect();
    let full = mul(&pow(&[1, -1], n), &s);
    trim(full.into_iter().take(n + 1).collect())
}

pub fn b_minus_oracle(n: usize) -> P {
    sub(&eulerian_b(n), &b_plus_series(n))
}

/// `Σ_k (-1)^{n-k} C(n,k) seq(k)`.
pub fn alternating(n: usize, seq: impl Fn(usize) -> P) -> P {
    (0..=n).fold(P::new(), |acc, k| {
        let c = binom(n, k) * if (n - k).is_multiple_of(2) { 1 } else { -1 };
        add(&acc, &scale(&seq(k), c))
    })
}

/// Every peak index of a unimodal coefficient sequence, or `None` if not unimodal.
pub fn peaks(p: &[i128]) -> Option<Vec<usize>> {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return Some(vec![0]);
    }
    let max = *p.iter().max().unwrap();
    let first = p.iter().position(|&c| c == max).unwrap();
    let last = p.iter().rposition(|&c| c == max).unwrap();
    let up = p[..=first].windows(2).all(|w| w[0] <= w[1]);
    let flat = p[first..=last].iter().all(|&c| c == max);
    let down = p[last..].windows(2).all(|w| w[0] >= w[1]);
    (up && flat && down).then(|| (first..=last).collect())
}

pub fn is_symmetric(p: &[i128], m: usize) -> bool {
    p.len() <= m + 1 && trim(p.to_vec()) == reverse(p, m)
}

fn rat(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Hermite: `p` has only real roots iff the Hankel matrix of its Newton power
/// sums is positive semidefinite. The negative eigenvalues are counted by
/// Descartes' rule on `χ(-λ)`, exact because `χ` has only real roots.
pub fn hermite_real_rooted(p: &IntPoly) -> bool {
    let Some(d) = p.degree() else {
        return true;
    };
    if d == 0 {
        return true;
    }
    let lead = rat(&p.coeff(d));
    let c: Vec<BigRational> = (0..=d).map(|i| rat(&p.coeff(d - i)) / &lead).collect();
    let mut s: Vec<BigRational> = vec![BigRational::from_integer(BigInt::from(d))];
    for k in 1..=2 * d - 2 {
        let mut acc = BigRational::zero();
        for i in 1..=k.min(d) {
            if i == k {
                acc += BigRational::from_integer(BigInt::from(k)) * &c[k];
            } else {
                acc += &c[i] * &s[k - i];
            }
        }
        s.push(-acc);
    }
    let h: Vec<Vec<BigRational>> = (0..d).map(|i| (0..d).map(|j| s[i + j].clone()).collect()).collect();
    let chi = char_poly(&h);
    let signed: Vec<BigRational> = chi
        .iter()
        .enumerate()
        .map(|(k, v)| if k % 2 == 0 { v.clone() } else { -v.clone() })
        .collect();
    sign_changes(&signed) == 0
}

/// Characteristic polynomial `det(λI - A)` by Faddeev–LeVerrier, low degree first.
pub fn char_poly(a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let ident = |v: &BigRational| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { v.clone() } else { BigRational::zero() })
                    .collect()
            })
            .collect()
    };
    let matmul = |x: &[Vec<BigRational>], y: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &x[i][k] * &y[k][j]))
                    .collect()
            })
            .collect()
    };
    let mut m = ident(&BigRational::zero());
    for k in 1..=n {
        let am = matmul(a, &m);
        m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        &am[i][j]
                            + if i == j {
                                coeffs[n - k + 1].clone()
                            } else {
                                BigRational::zero()
                            }
                    })
                    .collect()
            })
            .collect();
        let amk = matmul(a, &m);
        let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + &amk[i][i]);
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

pub fn sign_changes(v: &[BigRational]) -> usize {
    let signs: Vec<bool> = v.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
