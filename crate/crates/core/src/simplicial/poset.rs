//! Finite posets, order complexes, face posets, the cubical barycentric
//! poset, the signed-subset poset `P_n`, and flag vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use super::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// A finite poset given by its elements and the strict order relation.
#[derive(Clone, Debug)]
pub struct Poset<T> {
    elements: Vec<T>,
    less: Vec<Vec<bool>>,
    above: Vec<Vec<usize>>,
}

impl<T> Poset<T> {
    /// Builds from a non-strict comparison; fails when it is not antisymmetric.
    pub fn new(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let n = elements.len();
        let mut less = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(&elements[i], &elements[j]) {
                    if leq(&elements[j], &elements[i]) {
                        return Err(Error::InvalidArgument(format!(
                            "elements {i} and {j} are mutually below"
                        )));
                    }
                    less[i][j] = true;
                }
            }
        }
        let above = (0..n).map(|i| (0..n).filter(|&j| less[i][j]).collect()).collect();
        Ok(Poset { elements, less, above })
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less[i][j] || self.less[j][i]
    }

    /// Transitivity check, cubic in the size.
    pub fn is_transitive(&self) -> bool {
        (0..self.len()).all(|i| {
            self.above[i]
                .iter()
                .all(|&j| self.above[j].iter().all(|&k| self.less[i][k]))
        })
    }

    /// Every nonempty chain, as increasing index lists.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        for i in 0..self.len() {
            cur.push(i);
            self.extend_chains(&mut cur, &mut out);
            cur.pop();
        }
        out
    }

    fn extend_chains(&self, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        let last = *cur.last().expect("nonempty");
        for &j in &self.above[last] {
            cur.push(j);
            self.extend_chains(cur, out);
            cur.pop();
        }
    }

    /// Flag vectors with respect to a rank function taking values in `1..=n`.
    pub fn flag_vectors(&self, n: usize, rank: impl Fn(&T) -> usize) -> Result<FlagVectors> {
        if n > 20 {
            return Err(Error::InvalidArgument("rank too large for flag vectors".into()));
        }
        let ranks: Vec<usize> = self.elements.iter().map(&rank).collect();
        if let Some(&r) = ranks.iter().find(|&&r| r == 0 || r > n) {
            return Err(Error::InvalidArgument(format!("rank {r} outside 1..={n}")));
        }
        let mut alpha = BTreeMap::new();
        for s in 0u32..1 << n {
            let levels: Vec<usize> = (1..=n).filter(|r| s >> (r - 1) & 1 == 1).collect();
            let mut cnt: Vec<i64> = ranks.iter().map(|&r| i64::from(levels.first() == Some(&r))).collect();
            for w in levels.windows(2) {
                let next: Vec<i64> = (0..self.len())
                    .map(|j| {
                        if ranks[j] != w[1] {
                            return 0;
                        }
                        (0..self.len())
                            .filter(|&i| ranks[i] == w[0] && self.comparable(i, j))
                            .map(|i| cnt[i])
                            .sum()
                    })
                    .collect();
                cnt = next;
            }
            let a = if levels.is_empty() { 1 } else { cnt.iter().sum() };
            alpha.insert(s, a);
        }
        let beta = alpha
            .keys()
            .map(|&s| {
                let b: i64 = alpha
                    .iter()
                    .filter(|(&t, _)| t & !s == 0)
                    .map(|(&t, &a)| if (s & !t).count_ones() % 2 == 0 { a } else { -a })
                    .sum();
                (s, b)
            })
            .collect();
        Ok(FlagVectors { n, alpha, beta })
    }
}

/// Flag f- and h-vectors indexed by rank subsets as bitmasks (bit `r-1` for rank `r`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagVectors {
    pub n: usize,
    pub alpha: BTreeMap<u32, i64>,
    pub beta: BTreeMap<u32, i64>,
}

/// Chains of `p` as a simplicial complex on its elements.
pub fn order_complex<T: Clone>(p: &Poset<T>) -> SimplicialComplex<T> {
    let faces = p
        .chains()
        .into_iter()
        .map(|c| Face::new(c.into_iter().map(|i| i as u32)));
    SimplicialComplex::from_closed(p.elements.clone(), faces)
}

/// Nonempty faces of `c` ordered by inclusion.
pub fn face_poset<L: Clone>(c: &SimplicialComplex<L>) -> Poset<Face> {
    Poset::new(c.faces().to_vec(), |a, b| a.is_subset(b)).expect("inclusion is a partial order")
}

/// Intervals `[F, G]` of the face poset of `c`, ordered by inclusion of intervals.
pub fn cubical_barycentric_poset<L: Clone>(c: &SimplicialComplex<L>) -> Poset<(Face, Face)> {
    let faces = c.faces();
    let mut intervals = Vec::new();
    for g in faces {
        for f in faces {
            if f.is_subset(g) {
                intervals.push((f.clone(), g.clone()));
            }
        }
    }
    intervals.sort_by(|a, b| (a.1.len(), &a.1, a.0.len(), &a.0).cmp(&(b.1.len(), &b.1, b.0.len(), &b.0)));
    Poset::new(intervals, |(f, g), (f2, g2)| f2.is_subset(f) && g.is_subset(g2)).expect("interval order")
}

/// A subset of `{±1, ..., ±n}` with at most one of `i, -i`, as bitmasks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedSubset {
    pub pos: u32,
    pub neg: u32,
}

impl SignedSubset {
    pub fn len(self) -> usize {
        (self.pos | self.neg).count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.pos | self.neg == 0
    }

    pub fn is_subset(self, o: SignedSubset) -> bool {
        self.pos & !o.pos == 0 && self.neg & !o.neg == 0
    }
}

impl fmt::Debug for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<i32> = Vec::new();
        for i in 0..32 {
            if self.pos >> i & 1 == 1 {
                v.push(i + 1);
            }
            if self.neg >> i & 1 == 1 {
                v.push(-(i + 1));
            }
        }
        write!(f, "{v:?}")
    }
}

/// `P_n`: signed subsets with at least one positive element, ordered by reverse inclusion.
pub fn signed_subset_poset(n: usize) -> Result<Poset<SignedSubset>> {
    if n > 10 {
        return Err(Error::GuardExceeded { n, limit: 10 });
    }
    let full = (1u32 << n) - 1;
    let mut els = Vec::new();
    for support in 1..=full {
        let mut neg = support;
        loop {
            let s = SignedSubset {
                pos: support & !neg,
                neg,
            };
            if s.pos != 0 {
                els.push(s);
            }
            if neg == 0 {
                break;
            }
            neg = (neg - 1) & support;
        }
    }
    els.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    Poset::new(els, |a, b| b.is_subset(*a))
}

/// Map from element to index.
pub fn element_index<T: Clone + Eq + Hash>(p: &Poset<T>) -> std::collections::HashMap<T, usize> {
    p.elements().iter().cloned().enumerate().map(|(i, e)| (e, i)).collect()
}
