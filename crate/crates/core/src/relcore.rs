//! Finite binary relations over a ground set `{0, .., n-1}`, stored as an
//! `n×n` bit matrix (one `u64` word per row).
//!
//! Ground sets are always `0..n-1`; composition follows the convention
//! `x (a∘b) z` iff there is a `y` with `x a y` and `y b z` (left factor
//! applied first).

use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Largest representable ground set. One machine word per matrix row.
pub const MAX_GROUND_SET: usize = 64;

/// Largest ground set accepted by the isomorphism search.
pub const ISO_ENVELOPE: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("ground sets differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("index {index} out of range for ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("relabeling map is not a bijection on 0..{n}")]
    NotABijection { n: usize },
    #[error("isomorphism search supports n <= {max}, got {n}")]
    IsoEnvelope { n: usize, max: usize },
}

/// A binary relation on `{0, .., n-1}`. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryRelation {
    n: usize,
    rows: Vec<u64>,
}

fn row_mask(n: usize) -> u64 {
    if n == MAX_GROUND_SET {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BinaryRelation {
    /// The empty relation on `n` elements.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GROUND_SET, "ground set too large: {n}");
        BinaryRelation {
            n,
            rows: vec![0; n],
        }
    }

    /// The diagonal `{(x,x)}` on `n` elements.
    pub fn diagonal(n: usize) -> Self {
        let mut rel = Self::empty(n);
        for x in 0..n {
            rel.rows[x] |= 1 << x;
        }
        rel
    }

    /// All off-diagonal pairs on `n` elements.
    pub fn full_off_diagonal(n: usize) -> Self {
        let mut rel = Self::empty(n);
        for x in 0..n {
            rel.rows[x] = row_mask(n) & !(1 << x);
        }
        rel
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, RelationError> {
        let mut rel = Self::empty(n);
        for &(x, y) in pairs {
            if x >= n {
                return Err(RelationError::IndexOutOfRange { index: x, n });
            }
            if y >= n {
                return Err(RelationError::IndexOutOfRange { index: y, n });
            }
            rel.rows[x] |= 1 << y;
        }
        Ok(rel)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub(crate) fn insert(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.n && y < self.n);
        self.rows[x] |= 1 << y;
    }

    /// Out-neighborhood of `x` as a bit mask.
    pub fn row(&self, x: usize) -> u64 {
        self.rows[x]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Number of related pairs.
    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All related pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len());
        for x in 0..self.n {
            let mut bits = self.rows[x];
            while bits != 0 {
                let y = bits.trailing_zeros() as usize;
                out.push((x, y));
                bits &= bits - 1;
            }
        }
        out
    }

    fn check_same_n(&self, other: &Self) -> Result<(), RelationError> {
        if self.n != other.n {
            return Err(RelationError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Relational composition: `x (a∘b) z` iff `∃y: x a y` and `y b z`.
    pub fn compose(&self, other: &Self) -> Result<Self, RelationError> {
        self.check_same_n(other)?;
        let mut out = Self::empty(self.n);
        for x in 0..self.n {
            let mut mids = self.rows[x];
            while mids != 0 {
                let y = mids.trailing_zeros() as usize;
                out.rows[x] |= other.rows[y];
                mids &= mids - 1;
            }
        }
        Ok(out)
    }

    /// The h-fold composition `a ∘ a ∘ … ∘ a` (h ≥ 1 factors).
    pub fn compose_power(&self, h: u32) -> Self {
        assert!(h >= 1, "compose_power needs at least one factor");
        let mut out = self.clone();
        for _ in 1..h {
            out = out.compose(self).expect("same ground set");
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::empty(self.n);
        for (x, y) in self.pairs() {
            out.rows[y] |= 1 << x;
        }
        out
    }

    /// The symmetrization `a ∪ a⁻¹`.
    pub fn symmetrize(&self) -> Self {
        self.union(&self.inverse()).expect("same ground set")
    }

    pub fn union(&self, other: &Self) -> Result<Self, RelationError> {
        self.check_same_n(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a | b)
            .collect();
        Ok(BinaryRelation { n: self.n, rows })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, RelationError> {
        self.check_same_n(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a & b)
            .collect();
        Ok(BinaryRelation { n: self.n, rows })
    }

    /// Set difference `a ∖ b`.
    pub fn difference(&self, other: &Self) -> Result<Self, RelationError> {
        self.check_same_n(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a & !b)
            .collect();
        Ok(BinaryRelation { n: self.n, rows })
    }

    /// Membership-wise containment. Panics on mismatched ground sets.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "ground sets differ");
        self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "ground sets differ");
        self.rows.iter().zip(&other.rows).all(|(a, b)| a & b == 0)
    }

    /// Smallest transitive superset (bit-parallel Warshall).
    pub fn transitive_closure(&self) -> Self {
        let mut rows = self.rows.clone();
        for y in 0..self.n {
            let reach_y = rows[y];
            for x in 0..self.n {
                if rows[x] >> y & 1 == 1 {
                    rows[x] |= reach_y;
                }
            }
        }
        BinaryRelation { n: self.n, rows }
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|x| !self.contains(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self)
            .expect("same ground set")
            .is_subset_of(self)
    }

    /// Irreflexive and transitive.
    pub fn is_strict_order(&self) -> bool {
        self.is_irreflexive() && self.is_transitive()
    }

    /// No two-element cycle off the diagonal.
    pub fn is_antisymmetric_off_diagonal(&self) -> bool {
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if self.contains(x, y) && self.contains(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// The relation induced on `subset`, reindexed in increasing order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self, RelationError> {
        let mut elems: Vec<usize> = subset.to_vec();
        for &x in &elems {
            if x >= self.n {
                return Err(RelationError::IndexOutOfRange {
                    index: x,
                    n: self.n,
                });
            }
        }
        elems.sort_unstable();
        elems.dedup();
        let mut out = Self::empty(elems.len());
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if self.contains(x, y) {
                    out.rows[i] |= 1 << j;
                }
            }
        }
        Ok(out)
    }

    /// Pushforward along a permutation: `(x,y) ∈ a` iff
    /// `(perm(x), perm(y)) ∈ result`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, RelationError> {
        if perm.len() != self.n {
            return Err(RelationError::NotABijection { n: self.n });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(RelationError::NotABijection { n: self.n });
            }
            seen[p] = true;
        }
        let mut out = Self::empty(self.n);
        for (x, y) in self.pairs() {
            out.rows[perm[x]] |= 1 << perm[y];
        }
        Ok(out)
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryRelation(n={}, {:?})", self.n, self.pairs())
    }
}

impl Serialize for BinaryRelation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.pairs().iter().map(|&(x, y)| [x, y]).collect();
        let mut st = serializer.serialize_struct("BinaryRelation", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("pairs", &pairs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for BinaryRelation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            pairs: Vec<[usize; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.n > MAX_GROUND_SET {
            return Err(D::Error::custom(format!("ground set too large: {}", raw.n)));
        }
        let pairs: Vec<(usize, usize)> = raw.pairs.iter().map(|&[x, y]| (x, y)).collect();
        BinaryRelation::from_pairs(raw.n, &pairs).map_err(D::Error::custom)
    }
}

/// Vertex invariant used to prune the isomorphism search.
fn degree_profile(s: &BinaryRelation, r: &BinaryRelation, x: usize) -> [u32; 4] {
    let si = s.inverse();
    let ri = r.inverse();
    [
        s.row(x).count_ones(),
        si.row(x).count_ones(),
        r.row(x).count_ones(),
        ri.row(x).count_ones(),
    ]
}

/// Searches for a bijection `ξ` with `x S₁ y ⇔ ξ(x) S₂ ξ(y)` and
/// `x R₁ y ⇔ ξ(x) R₂ ξ(y)`. Returns a witnessing bijection when one exists.
pub fn pairs_isomorphic(
    first: (&BinaryRelation, &BinaryRelation),
    second: (&BinaryRelation, &BinaryRelation),
) -> Result<Option<Vec<usize>>, RelationError> {
    let (s1, r1) = first;
    let (s2, r2) = second;
    s1.check_same_n(r1)?;
    s2.check_same_n(r2)?;
    s1.check_same_n(s2)?;
    let n = s1.n();
    if n > ISO_ENVELOPE {
        return Err(RelationError::IsoEnvelope {
            n,
            max: ISO_ENVELOPE,
        });
    }

    let prof1: Vec<[u32; 4]> = (0..n).map(|x| degree_profile(s1, r1, x)).collect();
    let prof2: Vec<[u32; 4]> = (0..n).map(|x| degree_profile(s2, r2, x)).collect();
    let mut sorted1 = prof1.clone();
    let mut sorted2 = prof2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return Ok(None);
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn backtrack(
        depth: usize,
        n: usize,
        s1: &BinaryRelation,
        r1: &BinaryRelation,
        s2: &BinaryRelation,
        r2: &BinaryRelation,
        prof1: &[[u32; 4]],
        prof2: &[[u32; 4]],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == n {
            return true;
        }
        for candidate in 0..n {
            if used[candidate] || prof1[depth] != prof2[candidate] {
                continue;
            }
            let consistent = (0..depth).all(|earlier| {
                s1.contains(depth, earlier) == s2.contains(candidate, image[earlier])
                    && s1.contains(earlier, depth) == s2.contains(image[earlier], candidate)
                    && r1.contains(depth, earlier) == r2.contains(candidate, image[earlier])
                    && r1.contains(earlier, depth) == r2.contains(image[earlier], candidate)
            });
            if !consistent {
                continue;
            }
            image[depth] = candidate;
            used[candidate] = true;
            if backtrack(depth + 1, n, s1, r1, s2, r2, prof1, prof2, image, used) {
                return true;
            }
            used[candidate] = false;
            image[depth] = usize::MAX;
        }
        false
    }

    if backtrack(0, n, s1, r1, s2, r2, &prof1, &prof2, &mut image, &mut used) {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> BinaryRelation {
        BinaryRelation::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn compose_empty_annihilates() {
        let empty = BinaryRelation::empty(3);
        let any = rel(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(empty.compose(&any).unwrap().is_empty());
        assert!(any.compose(&empty).unwrap().is_empty());
    }

    #[test]
    fn compose_single_chain_link() {
        let a = rel(3, &[(0, 1)]);
        let b = rel(3, &[(1, 2)]);
        assert_eq!(a.compose(&b).unwrap().pairs(), vec![(0, 2)]);
    }

    #[test]
    fn compose_size_mismatch() {
        let a = BinaryRelation::empty(2);
        let b = BinaryRelation::empty(3);
        assert_eq!(
            a.compose(&b),
            Err(RelationError::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inverse_symmetrize_diagonal() {
        assert_eq!(rel(2, &[(0, 1)]).inverse().pairs(), vec![(1, 0)]);
        assert_eq!(rel(2, &[(0, 1)]).symmetrize().pairs(), vec![(0, 1), (1, 0)]);
        assert_eq!(BinaryRelation::diagonal(2).pairs(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn transitive_closure_chain() {
        let a = rel(3, &[(0, 1), (1, 2)]);
        assert_eq!(a.transitive_closure().pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(BinaryRelation::empty(4).transitive_closure().is_empty());
    }

    /// Closure of the down-link set of the partition {{1,3},{2}} of {1,2,3}:
    /// only element 2 (index 1) links downward, to index 0. Expected closure
    /// computed by an independent path-enumeration oracle.
    #[test]
    fn transitive_closure_partition_links() {
        let links = rel(3, &[(1, 0)]);
        let closed = links.transitive_closure();

        // Oracle: (x,y) is in the closure iff a directed path x -> y exists.
        let mut expected = BinaryRelation::empty(3);
        for x in 0..3 {
            let mut stack = vec![x];
            let mut seen = [false; 3];
            while let Some(u) = stack.pop() {
                for v in 0..3 {
                    if links.contains(u, v) && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            for (v, flag) in seen.iter().enumerate() {
                if *flag {
                    expected.insert(x, v);
                }
            }
        }
        assert_eq!(closed, expected);
        assert_eq!(closed.pairs(), vec![(1, 0)]);
    }

    #[test]
    fn strict_order_checks() {
        assert!(BinaryRelation::empty(3).is_strict_order());
        assert!(!rel(1, &[(0, 0)]).is_strict_order());
        assert!(!rel(3, &[(0, 1), (1, 2)]).is_strict_order());
        assert!(rel(3, &[(0, 1), (1, 2), (0, 2)]).is_strict_order());
    }

    #[test]
    fn restrict_examples() {
        let chain = rel(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(chain.restrict(&[0, 2]).unwrap().pairs(), vec![(0, 1)]);
        assert_eq!(chain.restrict(&[0, 1, 2]).unwrap(), chain);
        assert_eq!(
            chain.restrict(&[3]),
            Err(RelationError::IndexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn relabel_examples() {
        let a = rel(2, &[(0, 1)]);
        assert_eq!(a.relabel(&[0, 1]).unwrap(), a);
        assert_eq!(a.relabel(&[1, 0]).unwrap().pairs(), vec![(1, 0)]);
        assert_eq!(
            a.relabel(&[0, 0]),
            Err(RelationError::NotABijection { n: 2 })
        );
    }

    #[test]
    fn isomorphism_identity_and_relabel() {
        let s = rel(3, &[(0, 1)]);
        let r = rel(3, &[(0, 2), (1, 2)]);
        let id = pairs_isomorphic((&s, &r), (&s, &r)).unwrap().unwrap();
        assert_eq!(id, vec![0, 1, 2]);

        let sigma = [2, 0, 1];
        let s2 = s.relabel(&sigma).unwrap();
        let r2 = r.relabel(&sigma).unwrap();
        let xi = pairs_isomorphic((&s, &r), (&s2, &r2)).unwrap().unwrap();
        for (x, y) in s.pairs() {
            assert!(s2.contains(xi[x], xi[y]));
        }
        for (x, y) in r.pairs() {
            assert!(r2.contains(xi[x], xi[y]));
        }
    }

    /// Two non-isomorphic size-3 pairs: R a 3-chain with S empty, versus S a
    /// 3-chain with R empty. Their S-outdegree multisets differ.
    #[test]
    fn isomorphism_rejects_different_outdegrees() {
        let chain = rel(3, &[(0, 1), (1, 2), (0, 2)]);
        let empty = BinaryRelation::empty(3);
        assert_eq!(
            pairs_isomorphic((&empty, &chain), (&chain, &empty)).unwrap(),
            None
        );
    }

    #[test]
    fn json_round_trip_is_sorted() {
        let a = rel(3, &[(2, 0), (0, 1)]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":3,"pairs":[[0,1],[2,0]]}"#);
        let back: BinaryRelation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    fn arb_relation(max_n: usize) -> impl Strategy<Value = BinaryRelation> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<u64>(), n).prop_map(move |raw| {
                let mut rel = BinaryRelation::empty(n);
                for (x, bits) in raw.into_iter().enumerate() {
                    rel.rows[x] = bits & row_mask(n);
                }
                rel
            })
        })
    }

    proptest! {
        #[test]
        fn symmetrize_is_union_with_inverse(a in arb_relation(6)) {
            prop_assert_eq!(a.symmetrize(), a.union(&a.inverse()).unwrap());
        }

        #[test]
        fn closure_is_idempotent_and_extensive(a in arb_relation(6)) {
            let c = a.transitive_closure();
            prop_assert!(a.is_subset_of(&c));
            prop_assert_eq!(c.transitive_closure(), c.clone());
            prop_assert!(c.is_transitive());
        }

        #[test]
        fn relabel_round_trips_through_the_inverse_map(a in arb_relation(6), seed in any::<u64>()) {
            let n = a.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let mut inverse = vec![0usize; n];
            for (x, &p) in perm.iter().enumerate() {
                inverse[p] = x;
            }
            let there = a.relabel(&perm).unwrap();
            prop_assert_eq!(there.relabel(&inverse).unwrap(), a);
        }

        #[test]
        fn strict_order_is_relabel_invariant(a in arb_relation(6), seed in any::<u64>()) {
            let n = a.n();
            let mut perm: Vec<usize> = (0..n).collect();
            // cheap deterministic shuffle
            let mut state = seed | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let b = a.relabel(&perm).unwrap();
            prop_assert_eq!(a.is_strict_order(), b.is_strict_order());
        }

        #[test]
        fn compose_is_associative(
            a in arb_relation(6),
            raw_b in proptest::collection::vec(any::<u64>(), 6),
            raw_c in proptest::collection::vec(any::<u64>(), 6),
        ) {
            let n = a.n();
            let mut b = BinaryRelation::empty(n);
            let mut c = BinaryRelation::empty(n);
            for x in 0..n {
                b.rows[x] = raw_b[x] & row_mask(n);
                c.rows[x] = raw_c[x] & row_mask(n);
            }
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
