//! Exact univariate polynomials over big integers and rationals, plus truncated
//! exponential generating series whose coefficients are polynomials in `x`.
//!
//! The zero polynomial is the empty coefficient vector and has no degree.
//! Coefficient vectors never carry trailing zeros.

use std::fmt;
use std::io::{Read, Write};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Polynomial in `x` with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    /// Builds a polynomial from anything convertible to `BigInt`, lowest degree first.
    pub fn from_slice<T: Clone + Into<BigInt>>(cs: &[T]) -> Self {
        Self::new(cs.iter().cloned().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Keeps only the coefficients of degree at most `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// `x^m p(1/x)`; requires `m >= deg p`.
    pub fn reverse(&self, m: usize) -> Result<Self> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(d) if d > m => Err(Error::DegreeExceeded { degree: d, bound: m }),
            Some(_) => {
                let mut v = vec![BigInt::zero(); m + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    v[m - i] = c.clone();
                }
                Ok(Self::new(v))
            }
        }
    }

    /// The operator `E_r`: keeps the coefficients at multiples of `r`, reindexed by `i / r`.
    pub fn er_operator(&self, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroStride);
        }
        Ok(Self::new(self.coeffs.iter().step_by(r).cloned().collect()))
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact division; fails when `divisor` does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let q = self.to_rat().div_exact(&divisor.to_rat())?;
        q.to_int_poly()
            .ok_or_else(|| Error::InexactDivision(format!("{self} / {divisor} is not integral")))
    }

    /// Writes `degree,coefficient` rows with a header line.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wr = csv::Writer::from_writer(w);
        let io = |e: csv::Error| Error::Parse(e.to_string());
        wr.write_record(["degree", "coefficient"]).map_err(io)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            wr.write_record([i.to_string(), c.to_string()]).map_err(io)?;
        }
        wr.flush().map_err(|e| Error::Parse(e.to_string()))
    }

    /// Reads the format produced by [`IntPoly::write_csv`]; missing degrees are zero.
    pub fn read_csv<R: Read>(r: R) -> Result<IntPoly> {
        let mut rd = csv::Reader::from_reader(r);
        let mut v: Vec<BigInt> = Vec::new();
        for rec in rd.records() {
            let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
            let (Some(d), Some(c)) = (rec.get(0), rec.get(1)) else {
                return Err(Error::Parse("expected two columns".into()));
            };
            let d: usize = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {d:?}")))?;
            let c: BigInt = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            if v.len() <= d {
                v.resize(d + 1, BigInt::zero());
            }
            v[d] = c;
        }
        Ok(IntPoly::new(v))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show = i == 0 || !a.is_one();
            if show {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            var: "x".into(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        if r.var != "x" {
            return Err(serde::de::Error::custom(format!("unsupported variable {:?}", r.var)));
        }
        let cs = r
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(cs))
    }
}

/// Serde helpers that write big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Serialize, Serializer};

    pub fn one<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        v.to_string().serialize(s)
    }

    pub fn many<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }
}

impl<T: Into<BigInt>> FromIterator<T> for IntPoly {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        IntPoly::new(iter.into_iter().map(Into::into).collect())
    }
}

fn add_vecs<T: Clone + Zero>(a: &[T], b: &[T], sub: impl Fn(&T, &T) -> T, neg: impl Fn(&T) -> T) -> Vec<T> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => neg(y),
            (None, None) => T::zero(),
        })
        .collect()
}

fn mul_vecs<T: Clone + Zero>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x * y;
        }
    }
    out
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl<'a> Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                &self + o
            }
        }
        impl<'a> Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                &self - o
            }
        }
        impl<'a> Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                &self * o
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold(<$t>::zero(), |a, b| &a + &b)
            }
        }
    };
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        IntPoly::new(add_vecs(&self.coeffs, &o.coeffs, |a, b| a + b, Clone::clone))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        IntPoly::new(add_vecs(&self.coeffs, &o.coeffs, |a, b| a - b, |b| -b))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        IntPoly::new(mul_vecs(&self.coeffs, &o.coeffs))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_ops!(IntPoly);

pub fn add(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p + q
}

pub fn mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p * q
}

pub fn reverse(p: &IntPoly, m: usize) -> Result<IntPoly> {
    p.reverse(m)
}

pub fn er_operator(p: &IntPoly, r: usize) -> Result<IntPoly> {
    p.er_operator(r)
}

/// Power series `p(x) / (1 - x)^n` truncated after `x^order`.
pub fn series_div_one_minus_x_pow(p: &IntPoly, n: usize, order: usize) -> RatPoly {
    let mut v: Vec<BigInt> = (0..=order).map(|i| p.coeff(i)).collect();
    for _ in 0..n {
        for i in 1..v.len() {
            let prev = v[i - 1].clone();
            v[i] += prev;
        }
    }
    IntPoly::new(v).to_rat()
}

/// Polynomial in `x` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Returns the constant value when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.is_integral()
            .then(|| IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }

    /// Long division returning `(quotient, remainder)`.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let Some(dd) = d.degree() else {
            return Err(Error::InexactDivision("division by the zero polynomial".into()));
        };
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let idx = top - dd + j;
                    rem[idx] = &rem[idx] - &c * dc;
                }
                quo[top - dd] = c;
            }
            rem.pop();
            trim(&mut rem);
        }
        Ok((RatPoly::new(quo), RatPoly::new(rem)))
    }

    pub fn div_exact(&self, d: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("nonzero remainder dividing by {d}")));
        }
        Ok(q)
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let c = if c.is_integer() {
                    c.to_string()
                } else {
                    format!("({c})")
                };
                match i {
                    0 => c,
                    1 => format!("{c}x"),
                    _ => format!("{c}x^{i}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        RatPoly::new(add_vecs(&self.coeffs, &o.coeffs, |a, b| a + b, Clone::clone))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        RatPoly::new(add_vecs(&self.coeffs, &o.coeffs, |a, b| a - b, |b| -b))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        RatPoly::new(mul_vecs(&self.coeffs, &o.coeffs))
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_ops!(RatPoly);

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rat()
    }
}

/// Truncated exponential generating series `sum_n c_n(x) t^n / n!`.
///
/// Entry `n` stores `c_n`, i.e. `n!` times the ordinary coefficient of `t^n`,
/// so products are binomial convolutions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EgfSeries {
    coeffs: Vec<RatPoly>,
}

impl EgfSeries {
    /// `coeffs` must have length `order + 1`.
    pub fn new(order: usize, coeffs: Vec<RatPoly>) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::OrderMismatch {
                left: order,
                right: coeffs.len().saturating_sub(1),
            });
        }
        Ok(EgfSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> RatPoly) -> Self {
        EgfSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn from_int_fn(order: usize, mut f: impl FnMut(usize) -> IntPoly) -> Self {
        Self::from_fn(order, |n| f(n).to_rat())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| RatPoly::zero())
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { RatPoly::one() } else { RatPoly::zero() })
    }

    /// `exp(c t)` for a polynomial `c` in `x`.
    pub fn exp_scaled(c: &IntPoly, order: usize) -> Self {
        let mut cur = IntPoly::one();
        let mut v = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            v.push(cur.to_rat());
            cur = &cur * c;
        }
        EgfSeries { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&RatPoly> {
        self.coeffs.get(n)
    }

    /// Entry `n` as an integer polynomial.
    pub fn int_coeff(&self, n: usize) -> Result<IntPoly> {
        let c = self
            .coeff(n)
            .ok_or_else(|| Error::InvalidArgument(format!("coefficient {n} beyond order {}", self.order())))?;
        c.to_int_poly()
            .ok_or_else(|| Error::InexactDivision(format!("series coefficient {n} is not integral: {c}")))
    }

    fn check_order(&self, o: &EgfSeries) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: o.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &EgfSeries) -> Result<EgfSeries> {
        self.check_order(o)?;
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &EgfSeries) -> Result<EgfSeries> {
        self.check_order(o)?;
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Multiplies every entry by a polynomial in `x`.
    pub fn scale_poly(&self, p: &RatPoly) -> EgfSeries {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|a| a * p).collect(),
        }
    }

    /// Divides every entry by `p`, failing unless each division is exact.
    pub fn div_exact_poly(&self, p: &RatPoly) -> Result<EgfSeries> {
        Ok(EgfSeries {
            coeffs: self.coeffs.iter().map(|a| a.div_exact(p)).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, o: &EgfSeries) -> Result<EgfSeries> {
        egf_mul(self, o)
    }

    pub fn inverse(&self) -> Result<EgfSeries> {
        egf_inverse(self)
    }

    /// `num / den`. When the constant term of `den` is a nonconstant polynomial
    /// it is first divided out of both series exactly.
    pub fn quotient(num: &EgfSeries, den: &EgfSeries) -> Result<EgfSeries> {
        num.check_order(den)?;
        let c0 = den.coeffs[0].clone();
        if c0.as_constant().is_some() {
            return egf_mul(num, &egf_inverse(den)?);
        }
        let num = num.div_exact_poly(&c0)?;
        let den = den.div_exact_poly(&c0)?;
        egf_mul(&num, &egf_inverse(&den)?)
    }
}

fn binom(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Binomial convolution `c_n = sum_k C(n,k) a_k b_{n-k}`.
pub fn egf_mul(a: &EgfSeries, b: &EgfSeries) -> Result<EgfSeries> {
    a.check_order(b)?;
    Ok(EgfSeries::from_fn(a.order(), |n| {
        (0..=n)
            .map(|k| (&a.coeffs[k] * &b.coeffs[n - k]).scale(&binom(n, k)))
            .sum()
    }))
}

/// Multiplicative inverse; the constant term must be a nonzero rational constant.
pub fn egf_inverse(a: &EgfSeries) -> Result<EgfSeries> {
    let c = a.coeffs[0]
        .as_constant()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::NotInvertible(format!("constant term {} is not a nonzero rational", a.coeffs[0])))?;
    let inv = c.recip();
    let mut b: Vec<RatPoly> = vec![RatPoly::constant(inv.clone())];
    for n in 1..=a.order() {
        let s: RatPoly = (1..=n).map(|k| (&a.coeffs[k] * &b[n - k]).scale(&binom(n, k))).sum();
        b.push(s.scale(&-inv.clone()));
    }
    Ok(EgfSeries { coeffs: b })
}
