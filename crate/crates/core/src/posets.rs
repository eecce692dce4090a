//! Order-theoretic analysis of the two components of a Catalan pair: the
//! similarity classes of `R`, reconstruction of `S` from `R`, detection of
//! the forbidden subposets (2+2 and the fence Z4), classification of the
//! `R`-poset (connected / lattice / distributive lattice), and the rooted
//! forest carried by `S`.

use crate::encodings::{pair_to_dyck, pair_to_matching, tree_to_pair, PlaneTree, Step};
use crate::pairs::{verify, CatalanPair};
use crate::relcore::BinaryRelation;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not a strict order")]
    NotAStrictOrder,
    #[error("forbidden subposet {:?} on {:?}", witness.kind, witness.elements)]
    Forbidden { witness: ForbiddenWitness },
    #[error("the Hasse diagram is not a forest: element {element} has several upper covers")]
    NotAForestPoset { element: usize },
}

// ---------------------------------------------------------------------------
// Similarity classes
// ---------------------------------------------------------------------------

/// The partition of the ground set by `x ∼ y` iff `z R̄ x ⇔ z R̄ y` for all
/// `z`: elements with identical comparability neighborhoods. Classes are
/// listed by smallest member, members ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimClasses {
    classes: Vec<Vec<usize>>,
}

impl SimClasses {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> &[usize] {
        self.classes
            .iter()
            .find(|c| c.contains(&x))
            .expect("every element belongs to a class")
    }
}

pub fn sim_classes(r: &BinaryRelation) -> Result<SimClasses, PosetError> {
    if !r.is_strict_order() {
        return Err(PosetError::NotAStrictOrder);
    }
    let sym = r.symmetrize();
    let n = r.n();
    let mut reps: Vec<u64> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let neighborhood = sym.row(x);
        match reps.iter().position(|&m| m == neighborhood) {
            Some(i) => classes[i].push(x),
            None => {
                reps.push(neighborhood);
                classes.push(vec![x]);
            }
        }
    }
    Ok(SimClasses { classes })
}

// ---------------------------------------------------------------------------
// Forbidden subposets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForbiddenKind {
    /// Disjoint union of two 2-chains.
    TwoPlusTwo,
    /// Fence of order 4: covers a<b, c<b, c<d.
    Z4,
}

/// A four-element induced subposet matching one of the two patterns exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub elements: [usize; 4],
    #[serde(rename = "relationPattern")]
    pub relation_pattern: Vec<(usize, usize)>,
}

/// Scans all 4-subsets in lexicographic order; a strict order carries some
/// Catalan pair iff no witness is found.
pub fn find_forbidden(r: &BinaryRelation) -> Result<Option<ForbiddenWitness>, PosetError> {
    if !r.is_strict_order() {
        return Err(PosetError::NotAStrictOrder);
    }
    let n = r.n();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for l in (k + 1)..n {
                    let quad = [i, j, k, l];
                    if let Some(witness) = classify_quad(r, quad) {
                        return Ok(Some(witness));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn classify_quad(r: &BinaryRelation, quad: [usize; 4]) -> Option<ForbiddenWitness> {
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(6);
    for a in 0..4 {
        for b in 0..4 {
            if a != b && r.contains(quad[a], quad[b]) {
                edges.push((quad[a], quad[b]));
            }
        }
    }
    match edges.len() {
        2 => {
            let (a, b) = edges[0];
            let (c, d) = edges[1];
            if a != c && a != d && b != c && b != d {
                Some(ForbiddenWitness {
                    kind: ForbiddenKind::TwoPlusTwo,
                    elements: quad,
                    relation_pattern: edges,
                })
            } else {
                None
            }
        }
        3 => {
            let mut out = [0u8; 4];
            let mut inc = [0u8; 4];
            for &(a, b) in &edges {
                out[quad.iter().position(|&q| q == a).unwrap()] += 1;
                inc[quad.iter().position(|&q| q == b).unwrap()] += 1;
            }
            let mut degrees: Vec<u8> = (0..4).map(|v| out[v] + inc[v]).collect();
            degrees.sort_unstable();
            // Degrees 1,1,2,2 with three comparabilities: an induced fence.
            // Transitivity rules out any other orientation of the path.
            if degrees == [1, 1, 2, 2] {
                debug_assert!(
                    (0..4).all(|v| out[v] == 0 || inc[v] == 0),
                    "a transitively closed path must alternate"
                );
                Some(ForbiddenWitness {
                    kind: ForbiddenKind::Z4,
                    elements: quad,
                    relation_pattern: edges,
                })
            } else {
                None
            }
        }
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Reconstruction of S from R
// ---------------------------------------------------------------------------

/// Builds the unique first component for a (2+2, Z4)-free strict order:
/// inside a similarity class, ground-set index order; across classes, the
/// direction pointed to by the witness neighborhoods. Returns the forbidden
/// witness instead when the poset carries no pair.
pub fn reconstruct_s(r: &BinaryRelation) -> Result<BinaryRelation, PosetError> {
    if let Some(witness) = find_forbidden(r)? {
        return Err(PosetError::Forbidden { witness });
    }
    let n = r.n();
    let sym = r.symmetrize();
    let mut s = BinaryRelation::empty(n);
    for x in 0..n {
        for y in (x + 1)..n {
            if sym.contains(x, y) {
                continue;
            }
            let nx = sym.row(x);
            let ny = sym.row(y);
            if nx == ny {
                // Same class: lower index goes below.
                s.insert(x, y);
            } else {
                let x_only = nx & !ny;
                let y_only = ny & !nx;
                assert!(
                    (x_only == 0) != (y_only == 0),
                    "forbidden-free posets leave exactly one direction"
                );
                if x_only != 0 {
                    s.insert(x, y);
                } else {
                    s.insert(y, x);
                }
            }
        }
    }
    let report = verify(&s, r).expect("same ground set");
    assert!(report.valid, "reconstruction must yield a Catalan pair");
    Ok(s)
}

// ---------------------------------------------------------------------------
// Classification of the R-poset
// ---------------------------------------------------------------------------

/// Connectivity of the comparability graph of `R`; sizes 0 and 1 count as
/// connected, matching the counting convention c0 = c1 = 1.
pub fn r_is_connected(pair: &CatalanPair) -> bool {
    let n = pair.n();
    if n <= 1 {
        return true;
    }
    let sym = pair.r().symmetrize();
    let mut seen = 1u64;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        let mut fresh = sym.row(x) & !seen;
        seen |= fresh;
        while fresh != 0 {
            frontier.push(fresh.trailing_zeros() as usize);
            fresh &= fresh - 1;
        }
    }
    seen.count_ones() as usize == n
}

/// Matching criterion for connectivity: the first and last positions are not
/// matched to each other, i.e. no single arch spans the whole diagram.
pub fn r_is_connected_by_matching(pair: &CatalanPair) -> bool {
    let n = pair.n();
    if n <= 1 {
        return true;
    }
    let m = pair_to_matching(pair);
    m.arches()[0] != (1, 2 * n)
}

fn le(r: &BinaryRelation, x: usize, y: usize) -> bool {
    x == y || r.contains(x, y)
}

/// Least upper bound in the R-poset, when it exists.
fn join(r: &BinaryRelation, x: usize, y: usize) -> Option<usize> {
    let n = r.n();
    let uppers: Vec<usize> = (0..n).filter(|&z| le(r, x, z) && le(r, y, z)).collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&z| le(r, u, z)))
}

/// Greatest lower bound in the R-poset, when it exists.
fn meet(r: &BinaryRelation, x: usize, y: usize) -> Option<usize> {
    let n = r.n();
    let lowers: Vec<usize> = (0..n).filter(|&z| le(r, z, x) && le(r, z, y)).collect();
    lowers
        .iter()
        .copied()
        .find(|&u| lowers.iter().all(|&z| le(r, z, u)))
}

/// Direct order-theoretic evaluator: every two elements have a least upper
/// and a greatest lower bound.
pub fn r_is_lattice(pair: &CatalanPair) -> bool {
    let r = pair.r();
    let n = pair.n();
    for x in 0..n {
        for y in (x + 1)..n {
            if join(r, x, y).is_none() || meet(r, x, y).is_none() {
                return false;
            }
        }
    }
    true
}

/// Path evaluator: the associated Dyck path starts and ends with a peak and
/// avoids the factor DDUU.
pub fn r_is_lattice_by_path(pair: &CatalanPair) -> bool {
    let path = pair_to_dyck(pair);
    let steps = path.steps();
    if steps.is_empty() {
        return true;
    }
    let m = steps.len();
    let starts_with_peak = steps[0] == Step::Up && steps[1] == Step::Down;
    let ends_with_peak = steps[m - 2] == Step::Up && steps[m - 1] == Step::Down;
    let ddu_free = !steps
        .windows(4)
        .any(|w| w == [Step::Down, Step::Down, Step::Up, Step::Up]);
    starts_with_peak && ends_with_peak && ddu_free
}

/// Splits a Dyck path at its returns to the axis.
fn primitive_factors(steps: &[Step]) -> Vec<&[Step]> {
    let mut factors = Vec::new();
    let mut height = 0i64;
    let mut start = 0usize;
    for (i, step) in steps.iter().enumerate() {
        height += if *step == Step::Up { 1 } else { -1 };
        if height == 0 {
            factors.push(&steps[start..=i]);
            start = i + 1;
        }
    }
    factors
}

/// Order-theoretic distributivity: a lattice with no sublattice isomorphic to
/// the diamond M3 or the pentagon N5 (exhaustive 5-subset scan, with ambient
/// meets and joins required to stay inside the subset).
pub fn r_is_distributive(pair: &CatalanPair) -> bool {
    if !r_is_lattice(pair) {
        return false;
    }
    let r = pair.r();
    let n = pair.n();
    let choose5 = |f: &mut dyn FnMut([usize; 5]) -> bool| -> bool {
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        for e in (d + 1)..n {
                            if f([a, b, c, d, e]) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    };
    let mut has_bad = |subset: [usize; 5]| -> bool {
        let bottom = subset
            .iter()
            .copied()
            .find(|&o| subset.iter().all(|&z| le(r, o, z)));
        let top = subset
            .iter()
            .copied()
            .find(|&t| subset.iter().all(|&z| le(r, z, t)));
        let (Some(o), Some(t)) = (bottom, top) else {
            return false;
        };
        let mids: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&z| z != o && z != t)
            .collect();
        let comparable: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|&&(i, j)| le(r, mids[i], mids[j]) || le(r, mids[j], mids[i]))
            .copied()
            .collect();
        match comparable.len() {
            0 => {
                // Diamond: three pairwise incomparable middles whose ambient
                // joins and meets are the subset's top and bottom.
                [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| {
                    join(r, mids[i], mids[j]) == Some(t) && meet(r, mids[i], mids[j]) == Some(o)
                })
            }
            1 => {
                // Pentagon: one comparable middle pair (the chain side), the
                // third middle incomparable to both.
                let (i, j) = comparable[0];
                let y = mids[3 - i - j];
                join(r, mids[i], y) == Some(t)
                    && meet(r, mids[i], y) == Some(o)
                    && join(r, mids[j], y) == Some(t)
                    && meet(r, mids[j], y) == Some(o)
            }
            _ => false,
        }
    };
    !choose5(&mut has_bad)
}

/// Path evaluator for distributivity: height at most 2, every height-2
/// factor is exactly UUDD, no two height-2 factors adjacent, and the path
/// starts and ends with a peak (the lattice boundary conditions).
pub fn r_is_distributive_by_path(pair: &CatalanPair) -> bool {
    let path = pair_to_dyck(pair);
    let steps = path.steps();
    if steps.is_empty() {
        return true;
    }
    let factors = primitive_factors(steps);
    let peak = [Step::Up, Step::Down];
    let double = [Step::Up, Step::Up, Step::Down, Step::Down];
    let shape_ok = factors.iter().all(|f| *f == peak || *f == double);
    if !shape_ok {
        return false;
    }
    let first_last_peaks =
        factors.first().copied() == Some(&peak[..]) && factors.last().copied() == Some(&peak[..]);
    let no_adjacent_doubles = !factors.windows(2).any(|w| w[0] == double && w[1] == double);
    first_last_peaks && no_adjacent_doubles
}

/// Structural evaluator: the poset is an ordinal sum of single points and
/// two-element antichains in which every antichain block is strictly between
/// point blocks.
pub fn r_is_distributive_structural(pair: &CatalanPair) -> bool {
    let n = pair.n();
    if n == 0 {
        return true;
    }
    let r = pair.r();
    // Elements in the order of T = R ∪ S⁻¹; every ordinal cut is a prefix.
    let mut order: Vec<usize> = (0..n).collect();
    let ranks = pair.t_ranks();
    order.sort_by_key(|&x| ranks[x]);

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for (i, &x) in order.iter().enumerate() {
        current.push(x);
        let is_cut = order[(i + 1)..]
            .iter()
            .all(|&b| current.iter().all(|&a| r.contains(a, b)));
        if is_cut {
            blocks.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        return false;
    }
    let ok_shapes = blocks.iter().all(|b| b.len() <= 2);
    if !ok_shapes {
        return false;
    }
    let is_antichain = |b: &Vec<usize>| b.len() == 2;
    if blocks.first().map(is_antichain) == Some(true)
        || blocks.last().map(is_antichain) == Some(true)
    {
        return false;
    }
    !blocks
        .windows(2)
        .any(|w| is_antichain(&w[0]) && is_antichain(&w[1]))
}

// ---------------------------------------------------------------------------
// The forest carried by S
// ---------------------------------------------------------------------------

/// Hasse diagram of the S-poset: a forest of rooted trees whose roots are the
/// S-maximal elements; `xSy` iff `y` is a proper ancestor of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SForest {
    parents: Vec<Option<usize>>,
    roots: Vec<usize>,
}

impl SForest {
    pub fn parents(&self) -> &[Option<usize>] {
        &self.parents
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn children(&self, x: usize) -> Vec<usize> {
        (0..self.parents.len())
            .filter(|&c| self.parents[c] == Some(x))
            .collect()
    }
}

fn upper_covers(s: &BinaryRelation, x: usize) -> Vec<usize> {
    let n = s.n();
    (0..n)
        .filter(|&y| s.contains(x, y) && !(0..n).any(|w| s.contains(x, w) && s.contains(w, y)))
        .collect()
}

/// Never fails on a valid pair: the single-upper-cover property is an
/// invariant of the axioms.
pub fn s_forest(pair: &CatalanPair) -> SForest {
    forest_of_relation(pair.s()).expect("the S-poset of a Catalan pair is a forest")
}

fn forest_of_relation(s: &BinaryRelation) -> Result<SForest, PosetError> {
    if !s.is_strict_order() {
        return Err(PosetError::NotAStrictOrder);
    }
    let n = s.n();
    let mut parents = vec![None; n];
    for x in 0..n {
        let covers = upper_covers(s, x);
        if covers.len() > 1 {
            return Err(PosetError::NotAForestPoset { element: x });
        }
        parents[x] = covers.first().copied();
    }
    let roots = (0..n).filter(|&x| s.row(x) == 0).collect();
    Ok(SForest { parents, roots })
}

/// Canonical code of the unlabeled rooted tree obtained by joining a fresh
/// super-root to every component root: subtree codes are sorted recursively,
/// so two S-posets are isomorphic iff their codes coincide.
pub fn s_tree_canonical(forest: &SForest) -> String {
    fn code(forest: &SForest, x: usize) -> String {
        let mut parts: Vec<String> = forest
            .children(x)
            .into_iter()
            .map(|c| code(forest, c))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    let mut parts: Vec<String> = forest.roots.iter().map(|&r| code(forest, r)).collect();
    parts.sort();
    format!("({})", parts.concat())
}

pub fn s_tree_code(pair: &CatalanPair) -> String {
    s_tree_canonical(&s_forest(pair))
}

// ---------------------------------------------------------------------------
// All pairs sharing a first component
// ---------------------------------------------------------------------------

/// Every second component compatible with `s`, one pair per plane embedding
/// of the unlabeled forest. The input must be a forest-shaped strict order.
pub fn pairs_with_s(s: &BinaryRelation) -> Result<Vec<CatalanPair>, PosetError> {
    let forest = forest_of_relation(s)?;

    fn unlabeled_code(forest: &SForest, x: usize) -> String {
        let mut parts: Vec<String> = forest
            .children(x)
            .into_iter()
            .map(|c| unlabeled_code(forest, c))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }

    /// All distinct plane trees over the child list `kids`.
    fn embeddings_of_children(forest: &SForest, kids: &[usize]) -> Vec<PlaneTree> {
        // Group children by unlabeled shape; same-shape children share one
        // embedding list.
        let mut classes: Vec<(String, usize, Vec<PlaneTree>)> = Vec::new();
        for &k in kids {
            let code = unlabeled_code(forest, k);
            match classes.iter_mut().find(|(c, _, _)| *c == code) {
                Some(entry) => entry.1 += 1,
                None => {
                    let child_embeddings = embeddings_of_children(forest, &forest.children(k));
                    classes.push((code, 1, child_embeddings));
                }
            }
        }
        classes.sort_by(|a, b| a.0.cmp(&b.0));

        // Distinct arrangements of the class multiset, lexicographic.
        let mut arrangements: Vec<Vec<usize>> = Vec::new();
        let mut counts: Vec<usize> = classes.iter().map(|(_, m, _)| *m).collect();
        fn fill(
            counts: &mut Vec<usize>,
            prefix: &mut Vec<usize>,
            total: usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if prefix.len() == total {
                out.push(prefix.clone());
                return;
            }
            for i in 0..counts.len() {
                if counts[i] > 0 {
                    counts[i] -= 1;
                    prefix.push(i);
                    fill(counts, prefix, total, out);
                    prefix.pop();
                    counts[i] += 1;
                }
            }
        }
        fill(&mut counts, &mut Vec::new(), kids.len(), &mut arrangements);

        let mut result = Vec::new();
        for arrangement in arrangements {
            // Odometer over the embedding choice of each slot.
            let sizes: Vec<usize> = arrangement.iter().map(|&c| classes[c].2.len()).collect();
            let mut choice = vec![0usize; arrangement.len()];
            loop {
                let children: Vec<PlaneTree> = arrangement
                    .iter()
                    .zip(&choice)
                    .map(|(&class, &pick)| classes[class].2[pick].clone())
                    .collect();
                result.push(PlaneTree { children });
                let mut slot = arrangement.len();
                loop {
                    if slot == 0 {
                        break;
                    }
                    slot -= 1;
                    choice[slot] += 1;
                    if choice[slot] < sizes[slot] {
                        break;
                    }
                    choice[slot] = 0;
                    if slot == 0 {
                        break;
                    }
                }
                if choice.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }
        result
    }

    let plane_forests = embeddings_of_children(&forest, forest.roots());
    Ok(plane_forests.iter().map(tree_to_pair).collect())
}
