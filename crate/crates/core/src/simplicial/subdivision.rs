//! Topological subdivisions with explicit carriers, and their local and
//! relative local h-polynomials.

use std::collections::HashMap;
use std::hash::Hash;

use super::{h_from_face_counts, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

/// A complex `Γ` subdividing `target`, with `carrier[i]` the carrier of `Γ.faces()[i]`.
#[derive(Clone, Debug)]
pub struct Subdivision<L, M> {
    target: SimplicialComplex<M>,
    complex: SimplicialComplex<L>,
    carrier: Vec<Face>,
}

fn sign(exp: usize) -> i64 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl<L: Clone, M: Clone> Subdivision<L, M> {
    /// Computes carriers with `carrier_of` and validates them: every carrier is a
    /// nonempty face of the target, carriers are monotone, and each restriction
    /// `Γ_F` has dimension `dim F`.
    pub fn new(
        target: SimplicialComplex<M>,
        complex: SimplicialComplex<L>,
        carrier_of: impl Fn(&Face) -> Face,
    ) -> Result<Self> {
        let carrier: Vec<Face> = complex.faces().iter().map(carrier_of).collect();
        for (g, c) in complex.faces().iter().zip(&carrier) {
            if c.is_empty() || !target.contains(c) {
                return Err(Error::InvalidSubdivision(format!(
                    "carrier {c:?} of {g:?} is not a face of the target"
                )));
            }
        }
        let s = Subdivision {
            target,
            complex,
            carrier,
        };
        s.check_monotone()?;
        s.check_restriction_ranks()?;
        Ok(s)
    }

    fn check_monotone(&self) -> Result<()> {
        for (i, g) in self.complex.faces().iter().enumerate() {
            if g.len() < 2 {
                continue;
            }
            for &v in g.vertices() {
                let sub = g.difference(&Face::new([v]));
                let j = self.complex.face_index(&sub).expect("closed complex");
                if !self.carrier[j].is_subset(&self.carrier[i]) {
                    return Err(Error::InvalidSubdivision(format!(
                        "carrier of {sub:?} is not inside carrier of {g:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_restriction_ranks(&self) -> Result<()> {
        let mut by_carrier: HashMap<&Face, usize> = HashMap::new();
        for (g, c) in self.complex.faces().iter().zip(&self.carrier) {
            let e = by_carrier.entry(c).or_default();
            *e = (*e).max(g.len());
        }
        for f in self.target.faces() {
            let r = by_carrier
                .iter()
                .filter(|(c, _)| c.is_subset(f))
                .map(|(_, &s)| s)
                .max()
                .unwrap_or(0);
            if r != f.len() {
                return Err(Error::InvalidSubdivision(format!(
                    "restriction to {f:?} has rank {r}, expected {}",
                    f.len()
                )));
            }
        }
        Ok(())
    }

    pub fn target(&self) -> &SimplicialComplex<M> {
        &self.target
    }

    pub fn complex(&self) -> &SimplicialComplex<L> {
        &self.complex
    }

    /// Carrier of a face of the subdividing complex; `∅` maps to `∅`.
    pub fn carrier(&self, g: &Face) -> Option<Face> {
        if g.is_empty() {
            return Some(Face::empty());
        }
        self.complex.face_index(g).map(|i| self.carrier[i].clone())
    }

    fn require_target_face(&self, f: &Face) -> Result<()> {
        if self.target.contains(f) {
            Ok(())
        } else {
            Err(Error::FaceNotPresent(format!("{f:?} in the target")))
        }
    }

    /// `Γ_F`, the faces whose carrier lies in `F`.
    pub fn restriction(&self, f: &Face) -> Result<SimplicialComplex<L>> {
        self.require_target_face(f)?;
        let keep = self
            .complex
            .faces()
            .iter()
            .zip(&self.carrier)
            .filter(|(_, c)| c.is_subset(f))
            .map(|(g, _)| g.clone());
        Ok(self.complex.reindexed(keep))
    }

    /// `Γ_F` as a subdivision of the simplex `2^F`.
    pub fn restrict(&self, f: &Face) -> Result<Subdivision<L, M>> {
        self.require_target_face(f)?;
        let target = self.target.induced(|v| f.contains(v));
        let old_to_new: HashMap<u32, u32> = f.vertices().iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let keep: Vec<(Face, Face)> = self
            .complex
            .faces()
            .iter()
            .zip(&self.carrier)
            .filter(|(_, c)| c.is_subset(f))
            .map(|(g, c)| (g.clone(), Face::new(c.vertices().iter().map(|v| old_to_new[v]))))
            .collect();
        let mut used: Vec<u32> = keep.iter().flat_map(|(g, _)| g.vertices().iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        let new_id: HashMap<u32, u32> = used.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let labels = used.iter().map(|&v| self.complex.label(v).clone()).collect();
        let pairs: HashMap<Face, Face> = keep
            .into_iter()
            .map(|(g, c)| (Face::new(g.vertices().iter().map(|v| new_id[v])), c))
            .collect();
        let complex = SimplicialComplex::from_closed(labels, pairs.keys().cloned());
        let carrier = complex.faces().iter().map(|g| pairs[g].clone()).collect();
        Ok(Subdivision {
            target,
            complex,
            carrier,
        })
    }

    fn target_is_simplex(&self) -> bool {
        let v = self.target.vertex_count();
        v < 63 && self.target.faces().len() == (1usize << v) - 1
    }

    fn carrier_masks(&self) -> Vec<u64> {
        self.carrier
            .iter()
            .map(|c| c.vertices().iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }

    /// `ℓ_V(Γ) = Σ_{F ⊆ V} (-1)^{d-|F|} h(Γ_F)`; the target must be a simplex.
    pub fn local_h(&self) -> Result<IntPoly> {
        if !self.target_is_simplex() {
            return Err(Error::NotASimplex);
        }
        let d = self.target.vertex_count();
        if d > 24 {
            return Err(Error::InvalidArgument(format!("{d} target vertices is too many")));
        }
        let masks = self.carrier_masks();
        let mut total = IntPoly::zero();
        for f in 0u64..1 << d {
            let size = f.count_ones() as usize;
            let mut counts = vec![0usize; size + 1];
            counts[0] = 1;
            for (g, &m) in self.complex.faces().iter().zip(&masks) {
                if m & !f == 0 {
                    counts[g.len()] += 1;
                }
            }
            total = total + h_from_face_counts(&counts).scale(&sign(d - size).into());
        }
        Ok(total)
    }

    /// `ℓ_V(Γ, E) = Σ_{σ(E) ⊆ F ⊆ V} (-1)^{d-|F|} h(link_{Γ_F}(E))`; the target must be a simplex.
    pub fn relative_local_h(&self, e: &Face) -> Result<IntPoly> {
        if !self.target_is_simplex() {
            return Err(Error::NotASimplex);
        }
        let ce = self
            .carrier(e)
            .ok_or_else(|| Error::FaceNotPresent(format!("{e:?} in the subdivision")))?;
        let d = self.target.vertex_count();
        let ce_mask = ce.vertices().iter().fold(0u64, |m, &v| m | 1 << v);
        let masks = self.carrier_masks();
        let star: Vec<(usize, u64)> = self
            .complex
            .faces()
            .iter()
            .zip(&masks)
            .filter(|(g, _)| e.is_subset(g) && g.len() > e.len())
            .map(|(g, &m)| (g.len() - e.len(), m))
            .collect();
        let full = (1u64 << d) - 1;
        let free = full & !ce_mask;
        let mut total = IntPoly::zero();
        let mut sub = free;
        loop {
            let f = ce_mask | sub;
            let size = f.count_ones() as usize;
            let mut counts = vec![1usize];
            for &(k, m) in &star {
                if m & !f == 0 {
                    if counts.len() <= k {
                        counts.resize(k + 1, 0);
                    }
                    counts[k] += 1;
                }
            }
            total = total + h_from_face_counts(&counts).scale(&sign(d - size).into());
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        Ok(total)
    }

    /// Checks `h(Δ') = Σ_{F ∈ Δ} ℓ_F(Δ'_F) h(link_Δ F)`, the sum including `F = ∅`.
    pub fn h_formula_sides(&self) -> Result<(IntPoly, IntPoly)> {
        if !self.target.is_pure() {
            return Err(Error::NotPure);
        }
        let lhs = self.complex.h_polynomial();
        let mut rhs = self.target.h_polynomial();
        for f in self.target.faces() {
            let local = self.restrict(f)?.local_h()?;
            rhs = rhs + &local * &self.target.link(f)?.h_polynomial();
        }
        Ok((lhs, rhs))
    }

    pub fn h_formula_check(&self) -> Result<bool> {
        let (l, r) = self.h_formula_sides()?;
        Ok(l == r)
    }
}

impl<L: Clone, M: Clone + Eq + Hash> Subdivision<L, M> {
    /// Composes `self` (over `Γ`) with `outer` (`Γ` over `Δ`) into a subdivision of `Δ`.
    pub fn compose<N: Clone>(&self, outer: &Subdivision<M, N>) -> Result<Subdivision<L, N>> {
        if !self.target.same_as(&outer.complex) {
            return Err(Error::NotComposable(
                "inner target differs from the outer subdividing complex".into(),
            ));
        }
        let map: Vec<u32> = self
            .target
            .labels()
            .iter()
            .map(|l| outer.complex.vertex_of(l).expect("same labels"))
            .collect();
        let carrier = self
            .carrier
            .iter()
            .map(|c| {
                let c2 = Face::new(c.vertices().iter().map(|&v| map[v as usize]));
                outer.carrier(&c2).expect("face of outer complex")
            })
            .collect();
        Ok(Subdivision {
            target: outer.target.clone(),
            complex: self.complex.clone(),
            carrier,
        })
    }
}

/// Both sides of `ℓ_V(Γ') = Σ_{E ∈ Γ} ℓ_E(Γ'_E) ℓ_V(Γ, E)` for `Γ'` subdividing `Γ`
/// and `Γ` subdividing the simplex `2^V`.
pub fn decomposition_formula_sides<L, M, N>(
    gamma: &Subdivision<M, N>,
    gamma_prime: &Subdivision<L, M>,
) -> Result<(IntPoly, IntPoly)>
where
    L: Clone,
    M: Clone + Eq + Hash,
    N: Clone,
{
    let lhs = gamma_prime.compose(gamma)?.local_h()?;
    let mut rhs = gamma.relative_local_h(&Face::empty())?;
    for e in gamma.complex().faces() {
        let map: Vec<u32> = gamma
            .complex()
            .labels()
            .iter()
            .map(|l| gamma_prime.target().vertex_of(l).expect("same labels"))
            .collect();
        let e2 = Face::new(e.vertices().iter().map(|&v| map[v as usize]));
        let inner = gamma_prime.restrict(&e2)?.local_h()?;
        rhs = rhs + &inner * &gamma.relative_local_h(e)?;
    }
    Ok((lhs, rhs))
}

pub fn decomposition_formula_check<L, M, N>(gamma: &Subdivision<M, N>, gamma_prime: &Subdivision<L, M>) -> Result<bool>
where
    L: Clone,
    M: Clone + Eq + Hash,
    N: Clone,
{
    let (l, r) = decomposition_formula_sides(gamma, gamma_prime)?;
    Ok(l == r)
}

/// h-polynomial of the `r`-fold edgewise subdivision: `E_r((1 + x + ... + x^{r-1})^d h)`.
pub fn edgewise_h(h: &IntPoly, d: usize, r: usize) -> Result<IntPoly> {
    if r == 0 {
        return Err(Error::ZeroStride);
    }
    let block = IntPoly::from_slice(&vec![1i64; r]);
    (&block.pow(d as u32) * h).er_operator(r)
}
