//! Catalan pairs: the five axioms, the recursive composition/decomposition,
//! and exact enumeration.
//!
//! A pair `(S, R)` of binary relations on a common ground set is a Catalan
//! pair when
//!
//! - `S` is a strict order (**ord S**),
//! - `R` is a strict order (**ord R**),
//! - `S̄ ∪ R̄` covers every off-diagonal pair (**tot**),
//! - `S̄ ∩ R̄ = ∅` (**inters**),
//! - `S∘R ⊆ R` (**comp**),
//!
//! where `θ̄ = θ ∪ θ⁻¹`. Equivalently: for distinct `x, y` exactly one of
//! `xSy`, `xRy`, `ySx`, `yRx` holds, plus the composition law.

use crate::relcore::{pairs_isomorphic, BinaryRelation, RelationError};
use num_bigint::BigUint;
use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Cap on `enumerate`: sizes past this blow up memory, not correctness.
pub const ENUMERATION_ENVELOPE: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error("relations do not form a Catalan pair")]
    InvalidPair(Box<AxiomReport>),
    #[error("cannot decompose the empty pair")]
    EmptyPair,
    #[error("axioms ord S, ord R, tot, inters must hold before checking comp*")]
    PreconditionViolated,
}

/// Outcome of checking one axiom: a flag plus the lexicographically first
/// violating tuple when the axiom fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomStatus {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl AxiomStatus {
    fn ok() -> Self {
        AxiomStatus {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: Vec<usize>) -> Self {
        AxiomStatus {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Per-axiom evaluation of a candidate pair. Witness tuples: `[x]` for a
/// reflexive point, `[x,y,z]` for a transitivity or composition failure,
/// `[x,y]` for a totality or disjointness failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub valid: bool,
    #[serde(rename = "ordS")]
    pub ord_s: AxiomStatus,
    #[serde(rename = "ordR")]
    pub ord_r: AxiomStatus,
    pub tot: AxiomStatus,
    pub inters: AxiomStatus,
    pub comp: AxiomStatus,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.valid
    }
}

/// First reflexive point or transitivity failure of a strict-order candidate.
pub(crate) fn strict_order_status(a: &BinaryRelation) -> AxiomStatus {
    let n = a.n();
    for x in 0..n {
        if a.contains(x, x) {
            return AxiomStatus::fail(vec![x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !a.contains(x, y) {
                continue;
            }
            for z in 0..n {
                if a.contains(y, z) && !a.contains(x, z) {
                    return AxiomStatus::fail(vec![x, y, z]);
                }
            }
        }
    }
    AxiomStatus::ok()
}

pub(crate) fn tot_status(s: &BinaryRelation, r: &BinaryRelation) -> AxiomStatus {
    let n = s.n();
    for x in 0..n {
        for y in (x + 1)..n {
            let covered =
                s.contains(x, y) || s.contains(y, x) || r.contains(x, y) || r.contains(y, x);
            if !covered {
                return AxiomStatus::fail(vec![x, y]);
            }
        }
    }
    AxiomStatus::ok()
}

pub(crate) fn inters_status(s: &BinaryRelation, r: &BinaryRelation) -> AxiomStatus {
    let n = s.n();
    for x in 0..n {
        for y in (x + 1)..n {
            let in_s = s.contains(x, y) || s.contains(y, x);
            let in_r = r.contains(x, y) || r.contains(y, x);
            if in_s && in_r {
                return AxiomStatus::fail(vec![x, y]);
            }
        }
    }
    AxiomStatus::ok()
}

pub(crate) fn comp_status(s: &BinaryRelation, r: &BinaryRelation) -> AxiomStatus {
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            if !s.contains(x, y) {
                continue;
            }
            for z in 0..n {
                if r.contains(y, z) && !r.contains(x, z) {
                    return AxiomStatus::fail(vec![x, y, z]);
                }
            }
        }
    }
    AxiomStatus::ok()
}

/// Evaluates all five axioms independently; the pair is Catalan iff all hold.
pub fn verify(s: &BinaryRelation, r: &BinaryRelation) -> Result<AxiomReport, RelationError> {
    if s.n() != r.n() {
        return Err(RelationError::DimensionMismatch {
            left: s.n(),
            right: r.n(),
        });
    }
    let ord_s = strict_order_status(s);
    let ord_r = strict_order_status(r);
    let tot = tot_status(s, r);
    let inters = inters_status(s, r);
    let comp = comp_status(s, r);
    let valid = ord_s.holds && ord_r.holds && tot.holds && inters.holds && comp.holds;
    Ok(AxiomReport {
        valid,
        ord_s,
        ord_r,
        tot,
        inters,
        comp,
    })
}

/// The reformulated composition axiom `S̄∘R ⊆ R ∪ S⁻¹` (comp*). Requires the
/// first four axioms; under them comp* is equivalent to comp.
pub fn check_comp_star(s: &BinaryRelation, r: &BinaryRelation) -> Result<bool, PairError> {
    let report = verify(s, r)?;
    if !(report.ord_s.holds && report.ord_r.holds && report.tot.holds && report.inters.holds) {
        return Err(PairError::PreconditionViolated);
    }
    let lhs = s.symmetrize().compose(r)?;
    let rhs = r.union(&s.inverse())?;
    Ok(lhs.is_subset_of(&rhs))
}

/// A validated Catalan pair. Values are immutable; every operation is pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanPair {
    s: BinaryRelation,
    r: BinaryRelation,
}

impl CatalanPair {
    /// Builds a pair after checking all axioms.
    pub fn new(s: BinaryRelation, r: BinaryRelation) -> Result<Self, PairError> {
        let report = verify(&s, &r)?;
        if !report.valid {
            return Err(PairError::InvalidPair(Box::new(report)));
        }
        // Implied by ord S, still asserted: no two-element S-cycles.
        assert!(s
            .intersect(&s.inverse())
            .expect("same ground set")
            .is_empty());
        Ok(CatalanPair { s, r })
    }

    pub(crate) fn from_parts_unchecked(s: BinaryRelation, r: BinaryRelation) -> Self {
        debug_assert!(verify(&s, &r).map(|rep| rep.valid).unwrap_or(false));
        CatalanPair { s, r }
    }

    /// The unique pair of size 0.
    pub fn empty() -> Self {
        CatalanPair {
            s: BinaryRelation::empty(0),
            r: BinaryRelation::empty(0),
        }
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn s(&self) -> &BinaryRelation {
        &self.s
    }

    pub fn r(&self) -> &BinaryRelation {
        &self.r
    }

    /// Composition: the result lives on `0..n+m+1` with `self` on `0..n-1`,
    /// the new pivot at `n`, and `other` shifted to `n+1..n+m`.
    ///
    /// With `X = 0..n-1`, `z = n`, `Y = n+1..n+m`:
    /// `S″ = S ∪ S′ ∪ (X×{z})` and `R″ = R ∪ R′ ∪ ((X∪{z})×Y)`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n();
        let m = other.n();
        let total = n + m + 1;
        let z = n;
        let mut s = BinaryRelation::empty(total);
        let mut r = BinaryRelation::empty(total);
        for (x, y) in self.s.pairs() {
            s.insert(x, y);
        }
        for (x, y) in self.r.pairs() {
            r.insert(x, y);
        }
        for (x, y) in other.s.pairs() {
            s.insert(x + n + 1, y + n + 1);
        }
        for (x, y) in other.r.pairs() {
            r.insert(x + n + 1, y + n + 1);
        }
        for x in 0..n {
            s.insert(x, z);
        }
        for y in (n + 1)..total {
            r.insert(z, y);
            for x in 0..n {
                r.insert(x, y);
            }
        }
        Self::from_parts_unchecked(s, r)
    }

    /// Inverse of [`compose`](Self::compose): splits at the unique pivot (the
    /// S-maximal element that is R-minimal among the S-maximal ones) into the
    /// pairs induced on `{x : x S x₀}` and `{x : x₀ R x}`.
    pub fn decompose(&self) -> Result<(Self, Self), PairError> {
        let n = self.n();
        if n == 0 {
            return Err(PairError::EmptyPair);
        }
        let maximal: Vec<usize> = (0..n).filter(|&x| self.s.row(x) == 0).collect();
        let pivots: Vec<usize> = maximal
            .iter()
            .copied()
            .filter(|&m| maximal.iter().all(|&m2| m2 == m || !self.r.contains(m2, m)))
            .collect();
        assert_eq!(pivots.len(), 1, "a valid pair has exactly one pivot");
        let x0 = pivots[0];
        let left: Vec<usize> = (0..n).filter(|&x| self.s.contains(x, x0)).collect();
        let right: Vec<usize> = (0..n).filter(|&y| self.r.contains(x0, y)).collect();
        debug_assert_eq!(left.len() + right.len() + 1, n);
        let alpha = self.restrict(&left)?;
        let beta = self.restrict(&right)?;
        Ok((alpha, beta))
    }

    /// The pair induced on a subset of the ground set (hereditary by the
    /// restriction-closure property).
    pub fn restrict(&self, subset: &[usize]) -> Result<Self, PairError> {
        let s = self.s.restrict(subset)?;
        let r = self.r.restrict(subset)?;
        Ok(Self::from_parts_unchecked(s, r))
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self, PairError> {
        let s = self.s.relabel(perm)?;
        let r = self.r.relabel(perm)?;
        Ok(Self::from_parts_unchecked(s, r))
    }

    /// Position of each element in the total order `T = R ∪ S⁻¹`.
    ///
    /// `T` linearly orders any pair satisfying tot and inters with transitive
    /// components; under the matching reading it is the left-endpoint order of
    /// the arches.
    pub fn t_ranks(&self) -> Vec<usize> {
        t_ranks_of(&self.s, &self.r)
    }

    /// Relabels so that the ground-set order agrees with `T = R ∪ S⁻¹`. This
    /// is the labeling every position-based codec produces.
    pub fn canonicalize(&self) -> Self {
        self.relabel(&self.t_ranks())
            .expect("ranks form a permutation")
    }

    pub fn is_isomorphic_to(&self, other: &Self) -> Result<Option<Vec<usize>>, RelationError> {
        pairs_isomorphic((&self.s, &self.r), (&other.s, &other.r))
    }
}

/// Ranks in the total order `T = R ∪ S⁻¹` for raw relations (also valid for
/// factorial pairs, where `T` is still total).
pub(crate) fn t_ranks_of(s: &BinaryRelation, r: &BinaryRelation) -> Vec<usize> {
    let n = s.n();
    let mut ranks = vec![0usize; n];
    for x in 0..n {
        let mut below = 0;
        for y in 0..n {
            if y != x && (r.contains(y, x) || s.contains(x, y)) {
                below += 1;
            }
        }
        ranks[x] = below;
    }
    let mut seen = vec![false; n];
    for &p in &ranks {
        assert!(!seen[p], "T = R ∪ S⁻¹ must be a total order");
        seen[p] = true;
    }
    ranks
}

impl Serialize for CatalanPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s_pairs: Vec<[usize; 2]> = self.s.pairs().iter().map(|&(x, y)| [x, y]).collect();
        let r_pairs: Vec<[usize; 2]> = self.r.pairs().iter().map(|&(x, y)| [x, y]).collect();
        let mut st = serializer.serialize_struct("CatalanPair", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("S", &s_pairs)?;
        st.serialize_field("R", &r_pairs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CatalanPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            #[serde(rename = "S")]
            s: Vec<[usize; 2]>,
            #[serde(rename = "R")]
            r: Vec<[usize; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let s_pairs: Vec<(usize, usize)> = raw.s.iter().map(|&[x, y]| (x, y)).collect();
        let r_pairs: Vec<(usize, usize)> = raw.r.iter().map(|&[x, y]| (x, y)).collect();
        let s = BinaryRelation::from_pairs(raw.n, &s_pairs).map_err(D::Error::custom)?;
        let r = BinaryRelation::from_pairs(raw.n, &r_pairs).map_err(D::Error::custom)?;
        CatalanPair::new(s, r).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// All Catalan pairs of size `n`, one canonical labeled representative per
/// isomorphism class, in deterministic `(k, alpha, beta)` recursive order.
/// Uniqueness of the decomposition guarantees the absence of duplicates.
pub fn enumerate(n: usize) -> Vec<CatalanPair> {
    assert!(
        n <= ENUMERATION_ENVELOPE,
        "enumeration envelope is n <= {ENUMERATION_ENVELOPE}"
    );
    let mut table: Vec<Vec<CatalanPair>> = vec![vec![CatalanPair::empty()]];
    for size in 1..=n {
        let mut level = Vec::new();
        for k in 0..size {
            for alpha_idx in 0..table[k].len() {
                for beta_idx in 0..table[size - 1 - k].len() {
                    let composed = table[k][alpha_idx].compose(&table[size - 1 - k][beta_idx]);
                    level.push(composed);
                }
            }
        }
        table.push(level);
    }
    table.swap_remove(n)
}

/// The n-th Catalan number via the convolution recurrence, exact arithmetic.
pub fn count(n: usize) -> BigUint {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::from(1u32));
    for m in 1..=n {
        let mut total = BigUint::from(0u32);
        for k in 0..m {
            total += &table[k] * &table[m - 1 - k];
        }
        table.push(total);
    }
    table.swap_remove(n)
}
