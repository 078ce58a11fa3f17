//! Permutations of ordered finite sets, signed permutations, their statistics,
//! cycle forms, and guarded exhaustive enumeration.
//!
//! A signed permutation of size `n` is a bijection `w: S -> S` where `S`
//! contains exactly one of `i, -i` for each `i` in `[n]`. It is stored in
//! signed one-line form: `entries[i-1] = w(a_i)` where `a_i` is the element of
//! `S` with absolute value `i`. The set of entries equals `S`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

pub const SN_GUARD: usize = 12;
pub const BN_GUARD: usize = 10;

/// Which element opens each cycle and how cycles are ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleConvention {
    /// Each cycle opens with its largest element; cycles by increasing largest element.
    TypeA,
    /// Each cycle opens with its smallest element; cycles by decreasing smallest element.
    TypeB,
}

/// A permutation written as disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleForm(pub Vec<Vec<i32>>);

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<i32>] {
        &self.0
    }

    /// The word obtained by erasing parentheses.
    pub fn word(&self) -> Vec<i32> {
        self.0.iter().flatten().copied().collect()
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// `key` ranks elements; smaller key means earlier in the chosen order.
fn cycle_form_by(
    elems: &[i32],
    image: impl Fn(i32) -> i32,
    key: impl Fn(i32) -> i64,
    conv: CycleConvention,
) -> CycleForm {
    let mut seen: BTreeSet<i32> = BTreeSet::new();
    let mut cycles = Vec::new();
    for &s in elems {
        if seen.contains(&s) {
            continue;
        }
        let mut c = vec![s];
        seen.insert(s);
        let mut cur = image(s);
        while cur != s {
            seen.insert(cur);
            c.push(cur);
            cur = image(cur);
        }
        let lead = match conv {
            CycleConvention::TypeA => c.iter().enumerate().max_by_key(|(_, &v)| key(v)),
            CycleConvention::TypeB => c.iter().enumerate().min_by_key(|(_, &v)| key(v)),
        }
        .map(|(i, _)| i)
        .unwrap_or(0);
        c.rotate_left(lead);
        cycles.push(c);
    }
    match conv {
        CycleConvention::TypeA => cycles.sort_by_key(|c| key(c[0])),
        CycleConvention::TypeB => cycles.sort_by_key(|c| std::cmp::Reverse(key(c[0]))),
    }
    CycleForm(cycles)
}

/// A permutation of a finite totally ordered ground set.
///
/// `ground` lists the elements in increasing order `a_1 < ... < a_n`;
/// `values[i]` is the image of `ground[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    ground: Vec<i32>,
    values: Vec<i32>,
}

impl Permutation {
    pub fn new(ground: Vec<i32>, values: Vec<i32>) -> Result<Self> {
        let g: BTreeSet<i32> = ground.iter().copied().collect();
        if g.len() != ground.len() {
            return Err(Error::InvalidPermutation(format!(
                "repeated ground element in {ground:?}"
            )));
        }
        let v: BTreeSet<i32> = values.iter().copied().collect();
        if v != g || values.len() != ground.len() {
            return Err(Error::InvalidPermutation(format!(
                "{values:?} is not a rearrangement of {ground:?}"
            )));
        }
        Ok(Permutation { ground, values })
    }

    /// One-line notation over the ground set of its values in natural order.
    pub fn from_word(word: Vec<i32>) -> Result<Self> {
        let mut ground = word.clone();
        ground.sort_unstable();
        Self::new(ground, word)
    }

    /// One-line notation of a permutation of `[n]`.
    pub fn from_one_line(values: Vec<i32>) -> Result<Self> {
        let ground = (1..=values.len() as i32).collect();
        Self::new(ground, values)
    }

    pub fn identity(n: usize) -> Self {
        let g: Vec<i32> = (1..=n as i32).collect();
        Permutation {
            ground: g.clone(),
            values: g,
        }
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn ground(&self) -> &[i32] {
        &self.ground
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    fn rank(&self, a: i32) -> usize {
        self.ground.iter().position(|&g| g == a).expect("element of ground set")
    }

    pub fn apply(&self, a: i32) -> Option<i32> {
        self.ground.iter().position(|&g| g == a).map(|i| self.values[i])
    }

    pub fn exc(&self) -> usize {
        (0..self.len()).filter(|&i| self.rank(self.values[i]) > i).count()
    }

    pub fn iexc(&self) -> usize {
        (0..self.len()).filter(|&i| self.rank(self.values[i]) < i).count()
    }

    pub fn des(&self) -> usize {
        self.values
            .windows(2)
            .filter(|w| self.rank(w[0]) > self.rank(w[1]))
            .count()
    }

    pub fn asc(&self) -> usize {
        self.values
            .windows(2)
            .filter(|w| self.rank(w[0]) < self.rank(w[1]))
            .count()
    }

    pub fn fixed_points(&self) -> usize {
        self.ground.iter().zip(&self.values).filter(|(a, b)| a == b).count()
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_points() == 0
    }

    pub fn cycle_form(&self, conv: CycleConvention) -> CycleForm {
        cycle_form_by(
            &self.ground,
            |a| self.apply(a).expect("closed"),
            |a| self.rank(a) as i64,
            conv,
        )
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{}", vs.join(","))
    }
}

/// `B⁺_n` or `B⁻_n`, by the sign of the last entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Half {
    Plus,
    Minus,
}

/// A signed permutation in signed one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    entries: Vec<i32>,
    ground: Vec<i32>,
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(v)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Vec<i32> {
        w.entries
    }
}

impl SignedPermutation {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        let mut ground = vec![0i32; n];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a > n || ground[a - 1] != 0 {
                return Err(Error::InvalidSignedPermutation(format!(
                    "absolute values of {entries:?} are not a permutation of [{n}]"
                )));
            }
            ground[a - 1] = e;
        }
        Ok(SignedPermutation { entries, ground })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((1..=n as i32).collect()).expect("identity is valid")
    }

    /// Builds `w` from disjoint cycles covering a set `S` with one of `±i` for each `i`.
    pub fn from_cycles(cycles: &[Vec<i32>]) -> Result<Self> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut entries = vec![0i32; n];
        for c in cycles {
            for (j, &a) in c.iter().enumerate() {
                let i = a.unsigned_abs() as usize;
                if i == 0 || i > n || entries[i - 1] != 0 {
                    return Err(Error::InvalidSignedPermutation(format!("bad cycles {cycles:?}")));
                }
                entries[i - 1] = c[(j + 1) % c.len()];
            }
        }
        let w = Self::new(entries)?;
        for c in cycles {
            if c.iter().any(|&a| w.ground[a.unsigned_abs() as usize - 1] != a) {
                return Err(Error::InvalidSignedPermutation(format!("bad cycles {cycles:?}")));
            }
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// The ground set `S` as `a_1, ..., a_n`.
    pub fn ground(&self) -> &[i32] {
        &self.ground
    }

    pub fn apply(&self, a: i32) -> Option<i32> {
        let i = a.unsigned_abs() as usize;
        (i >= 1 && i <= self.n() && self.ground[i - 1] == a).then(|| self.entries[i - 1])
    }

    fn pairs(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.ground.iter().copied().zip(self.entries.iter().copied())
    }

    /// Type-B descent set: `i` in `{0..n-1}` with `w(a_i) > w(a_{i+1})`, `w(a_0) = 0`.
    pub fn des_b_set(&self) -> BTreeSet<usize> {
        std::iter::once(0)
            .chain(self.entries.iter().copied())
            .collect::<Vec<_>>()
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i)
            .collect()
    }

    pub fn des_b(&self) -> usize {
        let mut prev = 0;
        let mut d = 0;
        for &e in &self.entries {
            if prev > e {
                d += 1;
            }
            prev = e;
        }
        d
    }

    pub fn asc_b(&self) -> usize {
        self.n() - self.des_b()
    }

    pub fn negative_fixed_points(&self) -> usize {
        self.pairs().filter(|&(a, b)| a < 0 && a == b).count()
    }

    pub fn positive_fixed_points(&self) -> Vec<i32> {
        self.pairs().filter(|&(a, b)| a > 0 && a == b).map(|(a, _)| a).collect()
    }

    pub fn exc_b(&self) -> usize {
        self.pairs().filter(|&(a, b)| b > a).count() + self.negative_fixed_points()
    }

    pub fn iexc_b(&self) -> usize {
        self.pairs().filter(|&(a, b)| b < a).count() + self.negative_fixed_points()
    }

    pub fn is_derangement(&self) -> bool {
        self.pairs().all(|(a, b)| a < 0 || a != b)
    }

    pub fn half(&self) -> Result<Half> {
        match self.entries.last() {
            None => Err(Error::InvalidArgument(
                "the empty signed permutation has no half".into(),
            )),
            Some(&e) if e > 0 => Ok(Half::Plus),
            Some(_) => Ok(Half::Minus),
        }
    }

    /// Smallest element `m_w` of the ground set.
    pub fn min_element(&self) -> Option<i32> {
        self.ground.iter().copied().min()
    }

    /// Whether `w(m_w) > 0`.
    pub fn in_bstar(&self) -> Result<bool> {
        let m = self
            .min_element()
            .ok_or_else(|| Error::InvalidArgument("the empty signed permutation has no minimum".into()))?;
        Ok(self.apply(m).expect("m in S") > 0)
    }

    /// `-w`, the map `a -> -w(-a)` on `-S`.
    pub fn negate(&self) -> Self {
        Self::new(self.entries.iter().map(|e| -e).collect()).expect("negation is valid")
    }

    pub fn invert(&self) -> Self {
        let mut inv = vec![0i32; self.n()];
        for (a, b) in self.pairs() {
            inv[b.unsigned_abs() as usize - 1] = a;
        }
        Self::new(inv).expect("inverse is valid")
    }

    pub fn cycle_form(&self, conv: CycleConvention) -> CycleForm {
        cycle_form_by(&self.ground, |a| self.apply(a).expect("closed"), |a| a as i64, conv)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "{}", vs.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Accepts `3,-1,2` or a JSON integer array `[3,-1,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let v: Vec<i32> = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::new(v);
        }
        if t.is_empty() {
            return Self::new(Vec::new());
        }
        let v = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(v)
    }
}

/// Rearranges `v` into the next permutation in lexicographic order.
fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("pivot exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Permutations of `[n]` in lexicographic order.
#[derive(Clone, Debug)]
pub struct SnIter {
    cur: Option<Vec<i32>>,
}

impl SnIter {
    pub fn unguarded(n: usize) -> Self {
        SnIter {
            cur: Some((1..=n as i32).collect()),
        }
    }
}

impl Iterator for SnIter {
    type Item = Permutation;
    fn next(&mut self) -> Option<Permutation> {
        let cur = self.cur.take()?;
        let mut nxt = cur.clone();
        if next_permutation(&mut nxt) {
            self.cur = Some(nxt);
        }
        let n = cur.len() as i32;
        Some(Permutation {
            ground: (1..=n).collect(),
            values: cur,
        })
    }
}

pub fn enumerate_sn(n: usize) -> Result<SnIter> {
    if n > SN_GUARD {
        return Err(Error::GuardExceeded { n, limit: SN_GUARD });
    }
    Ok(SnIter::unguarded(n))
}

/// Applies a sign pattern to a one-line word; bit `n-1-i` of `mask` negates position `i`.
fn signed_word(word: &[i32], mask: u64) -> Vec<i32> {
    let n = word.len();
    word.iter()
        .enumerate()
        .map(|(i, &v)| if mask >> (n - 1 - i) & 1 == 1 { -v } else { v })
        .collect()
}

/// Signed permutations of size `n`: sign patterns in the outer loop, value
/// permutations in the inner loop, both lexicographic with `+` before `-`.
#[derive(Clone, Debug)]
pub struct BnIter {
    n: usize,
    mask: u64,
    inner: SnIter,
}

impl BnIter {
    pub fn unguarded(n: usize) -> Self {
        BnIter {
            n,
            mask: 0,
            inner: SnIter::unguarded(n),
        }
    }
}

impl Iterator for BnIter {
    type Item = SignedPermutation;
    fn next(&mut self) -> Option<SignedPermutation> {
        loop {
            if self.mask >= 1u64 << self.n {
                return None;
            }
            match self.inner.next() {
                Some(p) => {
                    return Some(SignedPermutation::new(signed_word(&p.values, self.mask)).expect("valid"));
                }
                None => {
                    self.mask += 1;
                    self.inner = SnIter::unguarded(self.n);
                }
            }
        }
    }
}

pub fn enumerate_bn(n: usize) -> Result<BnIter> {
    if n > BN_GUARD {
        return Err(Error::GuardExceeded { n, limit: BN_GUARD });
    }
    Ok(BnIter::unguarded(n))
}

fn histogram_to_poly(h: &[u64]) -> IntPoly {
    h.iter().copied().collect()
}

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn bump(h: &mut Vec<u64>, k: usize) {
    if h.len() <= k {
        h.resize(k + 1, 0);
    }
    h[k] += 1;
}

/// `sum x^{stat(w)}` over permutations of `[n]` where `stat` returns `Some`.
pub fn sn_distribution<F>(n: usize, stat: F) -> Result<IntPoly>
where
    F: Fn(&Permutation) -> Option<usize>,
{
    let mut h = Vec::new();
    for p in enumerate_sn(n)? {
        if let Some(k) = stat(&p) {
            bump(&mut h, k);
        }
    }
    Ok(histogram_to_poly(&h))
}

/// `sum x^{stat(w)}` over `B_n` where `stat` returns `Some`, split across sign
/// patterns in parallel. Respects the `B_n` guard unless `allow_large`.
pub fn bn_distribution<F>(n: usize, allow_large: bool, stat: F) -> Result<IntPoly>
where
    F: Fn(&SignedPermutation) -> Option<usize> + Sync,
{
    if n > BN_GUARD && !allow_large {
        return Err(Error::GuardExceeded { n, limit: BN_GUARD });
    }
    let h = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let mut h = Vec::new();
            for p in SnIter::unguarded(n) {
                let w = SignedPermutation::new(signed_word(&p.values, mask)).expect("valid");
                if let Some(k) = stat(&w) {
                    bump(&mut h, k);
                }
            }
            h
        })
        .reduce(Vec::new, add_hist);
    Ok(histogram_to_poly(&h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_cycle_form() {
        let cyc = vec![vec![3, 7], vec![1, 4], vec![-5, 9, -2], vec![-8, -6]];
        let v = SignedPermutation::from_cycles(&cyc).unwrap();
        assert_eq!(v.entries(), &[4, -5, 7, 1, 9, -8, 3, -6, -2]);
        let f = v.cycle_form(CycleConvention::TypeB);
        assert_eq!(f.to_string(), "(3 7)(1 4)(-5 9 -2)(-8 -6)");
        assert_eq!(v.iexc_b(), 5);
        assert!(v.is_derangement());
    }

    #[test]
    fn statistics_small() {
        let v = w("3,-1,2");
        assert_eq!(v.des_b(), 1);
        assert_eq!(v.des_b_set(), BTreeSet::from([1]));
        assert_eq!(v.half().unwrap(), Half::Plus);
        assert_eq!(v.ground(), &[-1, 2, 3]);
        assert_eq!(v.exc_b(), 1);
        assert!(v.is_derangement());
        let id = SignedPermutation::identity(3);
        assert_eq!(id.exc_b(), 0);
        assert!(!id.is_derangement());
        let neg = id.negate();
        assert_eq!(neg.exc_b(), 3);
        assert_eq!(neg.iexc_b(), 3);
        assert!(neg.is_derangement());
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(
            "1,1".parse::<SignedPermutation>(),
            Err(Error::InvalidSignedPermutation(_))
        ));
        assert!(matches!("1,x".parse::<SignedPermutation>(), Err(Error::Parse(_))));
        assert!(matches!(
            "0".parse::<SignedPermutation>(),
            Err(Error::InvalidSignedPermutation(_))
        ));
        assert_eq!("[2,-1]".parse::<SignedPermutation>().unwrap().entries(), &[2, -1]);
    }

    #[test]
    fn guards() {
        assert_eq!(enumerate_bn(11).unwrap_err(), Error::GuardExceeded { n: 11, limit: 10 });
        assert_eq!(enumerate_sn(13).unwrap_err(), Error::GuardExceeded { n: 13, limit: 12 });
    }

    #[test]
    fn enumeration_order_and_counts() {
        let all: Vec<_> = enumerate_bn(2).unwrap().map(|w| w.entries().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2],
                vec![2, 1],
                vec![1, -2],
                vec![2, -1],
                vec![-1, 2],
                vec![-2, 1],
                vec![-1, -2],
                vec![-2, -1]
            ]
        );
        assert_eq!(enumerate_bn(4).unwrap().count(), 384);
        assert_eq!(enumerate_sn(5).unwrap().count(), 120);
        assert_eq!(enumerate_bn(0).unwrap().count(), 1);
    }

    #[test]
    fn inverse_and_negation_are_involutions() {
        for v in enumerate_bn(3).unwrap() {
            assert_eq!(v.invert().invert(), v);
            assert_eq!(v.negate().negate(), v);
            assert_eq!(v.asc_b(), v.negate().des_b());
        }
    }

    #[test]
    fn type_a_cycle_form() {
        let p = Permutation::from_one_line(vec![4, 1, 7, 3, 5, 2, 6]).unwrap();
        let f = p.cycle_form(CycleConvention::TypeA);
        assert_eq!(f.0, vec![vec![5], vec![7, 6, 2, 1, 4, 3]]);
        assert_eq!(p.des(), 3);
        assert_eq!(p.exc(), 2);
    }

    #[test]
    fn parallel_distribution_matches_serial() {
        let par = bn_distribution(4, false, |w| Some(w.des_b())).unwrap();
        let mut h = vec![0u64; 5];
        for v in enumerate_bn(4).unwrap() {
            h[v.des_b()] += 1;
        }
        assert_eq!(par, h.into_iter().collect());
    }
}
