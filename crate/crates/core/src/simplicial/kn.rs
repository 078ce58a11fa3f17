//! The simplex `2^[n]`, its barycentric subdivision, and the cubical
//! barycentric subdivision `K_n` seen over both of them.
//!
//! Subsets of `[n]` are bitmasks with bit `i-1` for element `i`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::poset::{cubical_barycentric_poset, face_poset, order_complex};
use super::{Face, SimplicialComplex, Subdivision};
use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;
use crate::families::formulas::{derangement_a_table, eulerian_triangle};

pub const KN_GUARD: usize = 6;

/// The simplex on `[n]`, vertex `i-1` labelled `i`.
pub fn simplex(n: usize) -> Result<SimplicialComplex<u32>> {
    SimplicialComplex::simplex((1..=n as u32).collect())
}

/// `sd(Δ)`: vertices are the nonempty faces of `Δ` (labelled by their vertex
/// labels), faces are chains; a chain is carried by its largest face.
pub fn barycentric_subdivision<L: Clone + Ord>(c: &SimplicialComplex<L>) -> Result<Subdivision<Vec<L>, L>> {
    let fp = face_poset(c);
    let oc = order_complex(&fp);
    let faces_of_c: Vec<Face> = fp.elements().to_vec();
    let labelled = SimplicialComplex::from_closed(
        faces_of_c
            .iter()
            .map(|f| {
                let mut l = c.face_labels(f);
                l.sort();
                l
            })
            .collect(),
        oc.faces().iter().cloned(),
    );
    Subdivision::new(c.clone(), labelled, |chain| {
        chain
            .vertices()
            .iter()
            .map(|&v| &faces_of_c[v as usize])
            .max_by_key(|f| f.len())
            .expect("nonempty chain")
            .clone()
    })
}

/// An interval `[lo, hi]` of nonempty subsets of `[n]`, as bitmasks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

fn mask_elements(m: u32) -> Vec<u32> {
    (0..32).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect()
}

fn fmt_set(m: u32) -> String {
    mask_elements(m)
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("")
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", fmt_set(self.lo), fmt_set(self.hi))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `K_n` with its two carrier maps and the barycentric subdivision in between.
#[derive(Clone, Debug)]
pub struct KComplex {
    pub n: usize,
    /// `sd(2^[n])` over `2^[n]`.
    pub sd: Subdivision<Vec<u32>, u32>,
    /// `K_n` over `2^[n]`: a chain is carried by the top of its largest interval.
    pub over_simplex: Subdivision<Interval, u32>,
    /// `K_n` over `sd(2^[n])`: a chain is carried by the chain of all its endpoints.
    pub over_sd: Subdivision<Interval, Vec<u32>>,
}

fn face_mask(f: &Face) -> u32 {
    f.vertices().iter().fold(0, |m, &v| m | 1 << v)
}

/// Builds `K_n`; `n` is limited by [`KN_GUARD`] unless `allow_large`.
pub fn k_n(n: usize, allow_large: bool) -> Result<KComplex> {
    if n == 0 {
        return Err(Error::InvalidArgument("K_n needs n >= 1".into()));
    }
    if n > KN_GUARD && !allow_large {
        return Err(Error::GuardExceeded { n, limit: KN_GUARD });
    }
    let base = simplex(n)?;
    let sd = barycentric_subdivision(&base)?;
    let poset = cubical_barycentric_poset(&base);
    let intervals: Vec<Interval> = poset
        .elements()
        .iter()
        .map(|(f, g)| Interval {
            lo: face_mask(f),
            hi: face_mask(g),
        })
        .collect();
    let chains = order_complex(&poset);
    let kc = SimplicialComplex::from_closed(intervals.clone(), chains.faces().iter().cloned());

    let to_simplex_face = |m: u32| Face::new((0..n as u32).filter(|i| m >> i & 1 == 1));
    let over_simplex = Subdivision::new(base.clone(), kc.clone(), |chain| {
        let top = chain
            .vertices()
            .iter()
            .map(|&v| intervals[v as usize])
            .max_by_key(|iv| (iv.hi.count_ones(), std::cmp::Reverse(iv.lo.count_ones())))
            .expect("nonempty chain");
        to_simplex_face(top.hi)
    })?;

    let sd_vertex: HashMap<u32, u32> = sd
        .complex()
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.iter().fold(0u32, |m, &e| m | 1 << (e - 1)), i as u32))
        .collect();
    let over_sd = Subdivision::new(sd.complex().clone(), kc, |chain| {
        Face::new(chain.vertices().iter().flat_map(|&v| {
            let iv = intervals[v as usize];
            [sd_vertex[&iv.lo], sd_vertex[&iv.hi]]
        }))
    })?;
    Ok(KComplex {
        n,
        sd,
        over_simplex,
        over_sd,
    })
}

impl KComplex {
    pub fn complex(&self) -> &SimplicialComplex<Interval> {
        self.over_simplex.complex()
    }

    /// A face of `sd(2^[n])` given as a chain of subsets (bitmasks).
    pub fn sd_face(&self, chain: &[u32]) -> Option<Face> {
        let labels: Vec<Vec<u32>> = chain.iter().map(|&m| mask_elements(m)).collect();
        self.sd.complex().face_from_labels(labels.iter())
    }
}

/// Gap sizes `(r_0; r_1, ..., r_k)` of a chain `S_1 ⊂ ... ⊂ S_k` of nonempty
/// subsets of `[n]`: `r_i = |S_i \ S_{i-1}|` and `r_0 = n - |S_k|`.
pub fn chain_gaps(n: usize, chain: &[u32]) -> Result<(usize, Vec<usize>)> {
    let mut sorted = chain.to_vec();
    sorted.sort_by_key(|m| m.count_ones());
    let full = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut prev = 0u32;
    let mut gaps = Vec::with_capacity(sorted.len());
    for &m in &sorted {
        if m == prev || m & !full != 0 || prev & !m != 0 {
            return Err(Error::InvalidArgument(format!(
                "{} is not a chain of nonempty subsets of [{n}]",
                fmt_chain(chain)
            )));
        }
        gaps.push((m & !prev).count_ones() as usize);
        prev = m;
    }
    Ok((n - prev.count_ones() as usize, gaps))
}

fn fmt_chain(chain: &[u32]) -> String {
    chain.iter().map(|&m| fmt_set(m)).collect::<Vec<_>>().join("<")
}

/// `d_{r_0} A_{r_1} ... A_{r_k}` for the chain with the given gaps.
pub fn sd_relative_local_h_formula(n: usize, chain: &[u32]) -> Result<IntPoly> {
    let (r0, gaps) = chain_gaps(n, chain)?;
    let a = eulerian_triangle(n);
    let d = derangement_a_table(n);
    Ok(gaps.iter().fold(d[r0].clone(), |acc, &r| &acc * &a[r]))
}

impl<L: Clone> SimplicialComplex<L> {
    /// Relabels every vertex; the map must be injective on the labels present.
    pub fn relabel<K: Clone>(&self, f: impl Fn(&L) -> K) -> SimplicialComplex<K> {
        SimplicialComplex::from_closed(self.labels().iter().map(f).collect(), self.faces().iter().cloned())
    }
}
