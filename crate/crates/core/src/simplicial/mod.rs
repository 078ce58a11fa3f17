//! Abstract simplicial complexes, topological subdivisions with explicit
//! carrier maps, local and relative local h-polynomials, finite posets with
//! their order complexes, and the cubical barycentric subdivision `K_n`.

pub mod kn;
pub mod poset;
pub mod subdivision;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

pub use kn::{
    barycentric_subdivision, chain_gaps, k_n, sd_relative_local_h_formula, simplex, Interval, KComplex, KN_GUARD,
};
pub use poset::{
    cubical_barycentric_poset, face_poset, order_complex, signed_subset_poset, FlagVectors, Poset, SignedSubset,
};
pub use subdivision::{decomposition_formula_check, decomposition_formula_sides, edgewise_h, Subdivision};

/// A set of vertex indices, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(vs: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = vs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(&other.0).copied())
    }

    /// Every nonempty subset.
    pub fn nonempty_subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.0.len();
        (1u64..1 << k).map(move |m| Face((0..k).filter(|i| m >> i & 1 == 1).map(|i| self.0[i]).collect()))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `h(x) = Σ_i f_{i-1} x^i (1-x)^{d-i}` where `counts[i] = f_{i-1}` and `d = counts.len() - 1`.
pub fn h_from_face_counts(counts: &[usize]) -> IntPoly {
    let d = counts.len().saturating_sub(1);
    (0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::from(0), |acc, i| {
                let term = binomial(BigInt::from(d - i), BigInt::from(k - i)) * BigInt::from(counts[i]);
                if (k - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// A finite simplicial complex on labelled vertices `0..labels.len()`.
///
/// The empty face is implicit; `faces` holds every nonempty face.
#[derive(Clone)]
pub struct SimplicialComplex<L> {
    labels: Vec<L>,
    faces: Vec<Face>,
    index: HashMap<Face, usize>,
}

impl<L: fmt::Debug> fmt::Debug for SimplicialComplex<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.labels.len())
            .field("faces", &self.faces.len())
            .finish()
    }
}

impl<L: Clone> SimplicialComplex<L> {
    fn from_closed(labels: Vec<L>, faces: impl IntoIterator<Item = Face>) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let index = faces.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        SimplicialComplex { labels, faces, index }
    }

    /// Downward closure of `facets`.
    pub fn from_facets(labels: Vec<L>, facets: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut all: HashSet<Face> = HashSet::new();
        for f in facets {
            if f.vertices().iter().any(|&v| v as usize >= labels.len()) {
                return Err(Error::InvalidArgument(format!("facet {f:?} uses an unknown vertex")));
            }
            if f.len() > 24 {
                return Err(Error::InvalidArgument("facet too large to close".into()));
            }
            all.extend(f.nonempty_subsets());
        }
        Ok(Self::from_closed(labels, all))
    }

    /// The full simplex on the given vertices.
    pub fn simplex(labels: Vec<L>) -> Result<Self> {
        let all = Face::new(0..labels.len() as u32);
        Self::from_facets(labels, [all])
    }

    /// Keeps the faces in `keep` (which must be closed under subsets) and
    /// renumbers the vertices that remain.
    fn reindexed(&self, keep: impl IntoIterator<Item = Face>) -> Self {
        let keep: Vec<Face> = keep.into_iter().collect();
        let mut used: Vec<u32> = keep.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        let new_id: HashMap<u32, u32> = used.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let labels = used.iter().map(|&v| self.labels[v as usize].clone()).collect();
        let faces = keep
            .into_iter()
            .map(|f| Face::new(f.vertices().iter().map(|v| new_id[v])));
        Self::from_closed(labels, faces)
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &L {
        &self.labels[v as usize]
    }

    pub fn face_labels(&self, f: &Face) -> Vec<L> {
        f.vertices().iter().map(|&v| self.labels[v as usize].clone()).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Every nonempty face, by size then lexicographically.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_index(&self, f: &Face) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &Face) -> bool {
        f.is_empty() || self.index.contains_key(f)
    }

    /// `d = dim + 1`, the size of the largest face; zero for `{∅}`.
    pub fn rank(&self) -> usize {
        self.faces.last().map_or(0, Face::len)
    }

    pub fn facets(&self) -> Vec<Face> {
        let mut maximal: HashSet<&Face> = self.faces.iter().collect();
        for f in &self.faces {
            if f.len() > 1 {
                for v in f.vertices() {
                    maximal.remove(&f.difference(&Face(vec![*v])));
                }
            }
        }
        let mut out: Vec<Face> = maximal.into_iter().cloned().collect();
        out.sort();
        out
    }

    pub fn is_pure(&self) -> bool {
        let d = self.rank();
        self.facets().iter().all(|f| f.len() == d)
    }

    /// `counts[i]` is the number of faces with `i` vertices, `counts[0] = 1`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut c = vec![0usize; self.rank() + 1];
        c[0] = 1;
        for f in &self.faces {
            c[f.len()] += 1;
        }
        c
    }

    pub fn h_polynomial(&self) -> IntPoly {
        h_from_face_counts(&self.face_counts())
    }

    /// `{G ∖ F : F ⊆ G}`.
    pub fn link(&self, f: &Face) -> Result<Self> {
        if !self.contains(f) {
            return Err(Error::FaceNotPresent(format!("{f:?}")));
        }
        let keep: Vec<Face> = self
            .faces
            .iter()
            .filter(|g| f.is_subset(g))
            .map(|g| g.difference(f))
            .collect();
        Ok(self.reindexed(keep))
    }

    /// Faces whose vertices all satisfy `keep`.
    pub fn induced(&self, keep: impl Fn(u32) -> bool) -> Self {
        let faces: Vec<Face> = self
            .faces
            .iter()
            .filter(|g| g.vertices().iter().all(|&v| keep(v)))
            .cloned()
            .collect();
        self.reindexed(faces)
    }
}

impl<L: Clone + Eq + Hash> SimplicialComplex<L> {
    pub fn vertex_of(&self, label: &L) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn face_from_labels<'a>(&self, labels: impl IntoIterator<Item = &'a L>) -> Option<Face>
    where
        L: 'a,
    {
        let lookup: HashMap<&L, u32> = self.labels.iter().enumerate().map(|(i, l)| (l, i as u32)).collect();
        labels
            .into_iter()
            .map(|l| lookup.get(l).copied())
            .collect::<Option<Vec<_>>>()
            .map(Face::new)
    }

    /// `{F ∪ G}` over faces of both; the vertex labels must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let mine: HashSet<&L> = self.labels.iter().collect();
        if other.labels.iter().any(|l| mine.contains(l)) {
            return Err(Error::InvalidArgument("join needs disjoint vertex labels".into()));
        }
        let off = self.labels.len() as u32;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let shift = |g: &Face| Face::new(g.vertices().iter().map(|v| v + off));
        let mut faces: Vec<Face> = self.faces.clone();
        faces.extend(other.faces.iter().map(shift));
        for f in &self.faces {
            for g in &other.faces {
                faces.push(f.union(&shift(g)));
            }
        }
        Ok(Self::from_closed(labels, faces))
    }

    /// `h(c1 * c2) = h(c1) h(c2)`.
    pub fn join_h_check(&self, other: &Self) -> Result<bool> {
        Ok(self.join(other)?.h_polynomial() == &self.h_polynomial() * &other.h_polynomial())
    }

    /// Same labels and the same faces up to the label-preserving identification.
    pub fn same_as(&self, other: &Self) -> bool {
        if self.labels.len() != other.labels.len() || self.faces.len() != other.faces.len() {
            return false;
        }
        let Some(map) = self
            .labels
            .iter()
            .map(|l| other.vertex_of(l))
            .collect::<Option<Vec<u32>>>()
        else {
            return false;
        };
        self.faces
            .iter()
            .all(|f| other.contains(&Face::new(f.vertices().iter().map(|&v| map[v as usize]))))
    }
}
