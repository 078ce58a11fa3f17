//! The map `φ` from type-B derangements to permutation sequences, its inverse,
//! and the inverse-excedance ledger it transports.
//!
//! Write `w` in type-B standard cycle form. The leading cycles whose smallest
//! element is positive form a derangement `σ₀` of a set of positive integers.
//! The remaining cycles, read as one word `u`, split into maximal runs of equal
//! sign `u_1 u_2 ... u_k` with `u_1` negative. Each run becomes a permutation
//! `σ_i` of the absolute values it contains, in one-line notation.

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::signedperm::{CycleConvention, Permutation, SignedPermutation};

/// `(σ₀, σ₁, ..., σ_k)` on disjoint sets whose union is `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationSeq {
    sigma0: Permutation,
    blocks: Vec<Permutation>,
}

impl PermutationSeq {
    /// Validates that the ground sets partition `[n]`, `σ₀` is a derangement,
    /// every block is nonempty, and every ground set is positive.
    pub fn new(sigma0: Permutation, blocks: Vec<Permutation>) -> Result<Self> {
        if !sigma0.is_derangement() {
            return Err(Error::MalformedSequence("sigma0 has a fixed point".into()));
        }
        if blocks.iter().any(Permutation::is_empty) {
            return Err(Error::MalformedSequence("empty block".into()));
        }
        let mut all = BTreeSet::new();
        let mut total = 0usize;
        for p in std::iter::once(&sigma0).chain(&blocks) {
            for &a in p.ground() {
                if a <= 0 {
                    return Err(Error::MalformedSequence(format!("nonpositive element {a}")));
                }
                all.insert(a);
                total += 1;
            }
        }
        if all.len() != total {
            return Err(Error::MalformedSequence("ground sets are not disjoint".into()));
        }
        if all.iter().copied().ne(1..=total as i32) {
            return Err(Error::MalformedSequence(format!("ground sets do not cover [{total}]")));
        }
        Ok(PermutationSeq { sigma0, blocks })
    }

    /// Builds from a derangement of its values and the block words.
    pub fn from_words(sigma0_ground: Vec<i32>, sigma0_values: Vec<i32>, words: Vec<Vec<i32>>) -> Result<Self> {
        let s0 = Permutation::new(sigma0_ground, sigma0_values).map_err(|e| Error::MalformedSequence(e.to_string()))?;
        let blocks = words
            .into_iter()
            .map(|w| Permutation::from_word(w).map_err(|e| Error::MalformedSequence(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(s0, blocks)
    }

    pub fn sigma0(&self) -> &Permutation {
        &self.sigma0
    }

    pub fn blocks(&self) -> &[Permutation] {
        &self.blocks
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.sigma0.len() + self.blocks.iter().map(Permutation::len).sum::<usize>()
    }
}

#[derive(Serialize, Deserialize)]
struct Sigma0Repr {
    ground: Vec<i32>,
    values: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct SeqRepr {
    sigma0: Sigma0Repr,
    blocks: Vec<Vec<i32>>,
}

impl Serialize for PermutationSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeqRepr {
            sigma0: Sigma0Repr {
                ground: self.sigma0.ground().to_vec(),
                values: self.sigma0.values().to_vec(),
            },
            blocks: self.blocks.iter().map(|b| b.values().to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PermutationSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SeqRepr::deserialize(d)?;
        PermutationSeq::from_words(r.sigma0.ground, r.sigma0.values, r.blocks).map_err(serde::de::Error::custom)
    }
}

/// Splits a word into maximal runs of equal sign.
fn sign_runs(u: &[i32]) -> Vec<Vec<i32>> {
    let mut runs: Vec<Vec<i32>> = Vec::new();
    for &a in u {
        match runs.last_mut() {
            Some(r) if (r[0] > 0) == (a > 0) => r.push(a),
            _ => runs.push(vec![a]),
        }
    }
    runs
}

pub fn phi(w: &SignedPermutation) -> Result<PermutationSeq> {
    if let Some(&a) = w.positive_fixed_points().first() {
        return Err(Error::PositiveFixedPoint(a));
    }
    let form = w.cycle_form(CycleConvention::TypeB);
    let (pos, rest): (Vec<_>, Vec<_>) = form.cycles().iter().partition(|c| c[0] > 0);
    let mut ground: Vec<i32> = pos.iter().flat_map(|c| c.iter().copied()).collect();
    ground.sort_unstable();
    let values = ground.iter().map(|&a| w.apply(a).expect("in S")).collect();
    let sigma0 = Permutation::new(ground, values)?;
    let u: Vec<i32> = rest.iter().flat_map(|c| c.iter().copied()).collect();
    let blocks = sign_runs(&u)
        .into_iter()
        .map(|r| Permutation::from_word(r.iter().map(|a| a.abs()).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermutationSeq::new(sigma0, blocks)
}

pub fn phi_inverse(c: &PermutationSeq) -> Result<SignedPermutation> {
    let mut cycles: Vec<Vec<i32>> = c.sigma0.cycle_form(CycleConvention::TypeA).cycles().to_vec();
    let u: Vec<i32> = c
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            b.values().iter().map(move |&a| sign * a).collect::<Vec<_>>()
        })
        .collect();
    // cycles of u open at its left-to-right minima
    let mut cur_min = i32::MAX;
    for a in u {
        if a < cur_min {
            cur_min = a;
            cycles.push(vec![a]);
        } else {
            cycles.last_mut().expect("u opens with a minimum").push(a);
        }
    }
    SignedPermutation::from_cycles(&cycles)
}

/// One block's contribution to the inverse-excedance identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockStat {
    pub index: usize,
    pub word: Vec<i32>,
    pub des: usize,
    pub asc: usize,
    /// `asc` for odd `index`, `des` for even.
    pub counted: usize,
}

/// Both sides of `iexc_B(w) = iexc(σ₀) + Σ f(σ_i) + ⌊(k+1)/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatisticLedger {
    pub iexc_b: usize,
    pub iexc_sigma0: usize,
    pub blocks: Vec<BlockStat>,
    pub floor_term: usize,
    pub rhs: usize,
}

impl StatisticLedger {
    pub fn holds(&self) -> bool {
        self.iexc_b == self.rhs
    }
}

pub fn statistic_ledger(w: &SignedPermutation) -> Result<StatisticLedger> {
    let c = phi(w)?;
    let blocks: Vec<BlockStat> = c
        .blocks
        .iter()
        .enumerate()
        .map(|(i0, b)| {
            let index = i0 + 1;
            let (des, asc) = (b.des(), b.asc());
            BlockStat {
                index,
                word: b.values().to_vec(),
                des,
                asc,
                counted: if index % 2 == 1 { asc } else { des },
            }
        })
        .collect();
    let iexc_sigma0 = c.sigma0.iexc();
    let floor_term = c.k().div_ceil(2);
    let rhs = iexc_sigma0 + blocks.iter().map(|b| b.counted).sum::<usize>() + floor_term;
    Ok(StatisticLedger {
        iexc_b: w.iexc_b(),
        iexc_sigma0,
        blocks,
        floor_term,
        rhs,
    })
}

pub fn statistic_identity_check(w: &SignedPermutation) -> Result<bool> {
    Ok(statistic_ledger(w)?.holds())
}

/// Whether the last element of the type-B standard cycle form is positive.
pub fn last_cycle_element_positive(w: &SignedPermutation) -> bool {
    w.cycle_form(CycleConvention::TypeB)
        .word()
        .last()
        .is_some_and(|&a| a > 0)
}
