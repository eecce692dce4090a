//! Bidirectional codecs between Catalan pairs and five classical Catalan
//! families: perfect noncrossing matchings, Dyck paths, permutations (via
//! inversions), plane trees, and noncrossing partitions.
//!
//! Every decoder produces the canonical labeling in which the ground-set
//! order agrees with the left-endpoint order of the arches (the total order
//! `T = R ∪ S⁻¹`). Round trips are exact on canonically labeled pairs and
//! reach an isomorphic pair otherwise.

use crate::pairs::{comp_status, t_ranks_of, CatalanPair};
use crate::relcore::BinaryRelation;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EncodingError {
    #[error("arches ({},{}) and ({},{}) cross", first.0, first.1, second.0, second.1)]
    CrossingArches {
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("not a perfect matching: {0}")]
    MalformedMatching(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("not a permutation of 1..n: {0}")]
    InvalidPermutation(String),
    #[error("malformed tree text: {0}")]
    InvalidTree(String),
    #[error("not a partition of 1..n: {0}")]
    MalformedPartition(String),
    #[error("blocks cross on {a} < {b} < {c} < {d}")]
    CrossingPartition {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },
    #[error("composition axiom fails on ({x},{y},{z}): the permutation has no Catalan pair")]
    NotCatalan { x: usize, y: usize, z: usize },
}

// ---------------------------------------------------------------------------
// Carriers
// ---------------------------------------------------------------------------

/// A perfect noncrossing matching of `{1, .., 2n}` drawn as arches. Arches
/// are stored sorted by left endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchMatching {
    arches: Vec<(usize, usize)>,
}

impl ArchMatching {
    pub fn new(mut arches: Vec<(usize, usize)>) -> Result<Self, EncodingError> {
        let n = arches.len();
        let mut owner = vec![usize::MAX; 2 * n + 1];
        for (idx, &(l, r)) in arches.iter().enumerate() {
            if l >= r {
                return Err(EncodingError::MalformedMatching(format!(
                    "arch ({l},{r}) has its left endpoint on the right"
                )));
            }
            for p in [l, r] {
                if p == 0 || p > 2 * n {
                    return Err(EncodingError::MalformedMatching(format!(
                        "position {p} outside 1..{}",
                        2 * n
                    )));
                }
                if owner[p] != usize::MAX {
                    return Err(EncodingError::MalformedMatching(format!(
                        "position {p} used twice"
                    )));
                }
                owner[p] = idx;
            }
        }
        // Stack scan: the arch closing at each right endpoint must be the one
        // most recently opened.
        let mut open: Vec<usize> = Vec::new();
        for p in 1..=(2 * n) {
            let idx = owner[p];
            if arches[idx].0 == p {
                open.push(idx);
            } else {
                let top = open.pop().expect("every close has an open");
                if top != idx {
                    return Err(EncodingError::CrossingArches {
                        first: arches[top.min(idx)],
                        second: arches[top.max(idx)],
                    });
                }
            }
        }
        arches.sort_unstable();
        Ok(ArchMatching { arches })
    }

    fn from_sorted_unchecked(arches: Vec<(usize, usize)>) -> Self {
        debug_assert!(ArchMatching::new(arches.clone()).is_ok());
        ArchMatching { arches }
    }

    pub fn n(&self) -> usize {
        self.arches.len()
    }

    /// Arches sorted by left endpoint.
    pub fn arches(&self) -> &[(usize, usize)] {
        &self.arches
    }
}

impl fmt::Display for ArchMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, r)) in self.arches.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({l},{r})")?;
        }
        Ok(())
    }
}

impl FromStr for ArchMatching {
    type Err = EncodingError;

    fn from_str(text: &str) -> Result<Self, EncodingError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return ArchMatching::new(Vec::new());
        }
        let mut arches = Vec::new();
        let mut rest = trimmed;
        loop {
            let stripped = rest.strip_prefix('(').ok_or_else(|| {
                EncodingError::MalformedMatching(format!("expected '(' in {rest:?}"))
            })?;
            let close = stripped
                .find(')')
                .ok_or_else(|| EncodingError::MalformedMatching("missing ')'".into()))?;
            let body = &stripped[..close];
            let (l_text, r_text) = body.split_once(',').ok_or_else(|| {
                EncodingError::MalformedMatching(format!("expected 'l,r' in {body:?}"))
            })?;
            let l: usize = l_text
                .trim()
                .parse()
                .map_err(|_| EncodingError::MalformedMatching(format!("bad number {l_text:?}")))?;
            let r: usize = r_text
                .trim()
                .parse()
                .map_err(|_| EncodingError::MalformedMatching(format!("bad number {r_text:?}")))?;
            arches.push((l, r));
            rest = &stripped[close + 1..];
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix(',').ok_or_else(|| {
                EncodingError::MalformedMatching(format!("expected ',' in {rest:?}"))
            })?;
        }
        ArchMatching::new(arches)
    }
}

/// Up/down steps of a Dyck path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
}

/// A balanced path over U/D whose prefixes never dip below the axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, EncodingError> {
        let mut height: i64 = 0;
        for (i, step) in steps.iter().enumerate() {
            height += if matches!(step, Step::Up) { 1 } else { -1 };
            if height < 0 {
                return Err(EncodingError::InvalidPath(format!(
                    "prefix of length {} dips below the axis",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(EncodingError::InvalidPath("path is not balanced".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(if matches!(step, Step::Up) { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = EncodingError;

    fn from_str(text: &str) -> Result<Self, EncodingError> {
        let mut steps = Vec::with_capacity(text.len());
        for ch in text.trim().chars() {
            match ch {
                'U' | 'u' => steps.push(Step::Up),
                'D' | 'd' => steps.push(Step::Down),
                other => {
                    return Err(EncodingError::InvalidPath(format!(
                        "unexpected character {other:?}"
                    )))
                }
            }
        }
        DyckPath::new(steps)
    }
}

/// A permutation of `1..n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, EncodingError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(EncodingError::InvalidPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// One-line values, 1-based.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `positions()[v-1]` is the 1-based position of value `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            pos[v - 1] = i + 1;
        }
        pos
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spaced = self.values.len() > 9;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 && spaced {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = EncodingError;

    fn from_str(text: &str) -> Result<Self, EncodingError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Permutation::new(Vec::new());
        }
        let values: Vec<usize> = if trimmed.contains(char::is_whitespace) {
            trimmed
                .split_whitespace()
                .map(|w| {
                    w.parse()
                        .map_err(|_| EncodingError::InvalidPermutation(format!("bad entry {w:?}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        EncodingError::InvalidPermutation(format!("bad digit {c:?}"))
                    })
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

/// A rooted plane tree: the children sequence is ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree {
            children: Vec::new(),
        }
    }

    /// Number of nodes excluding the root.
    pub fn size(&self) -> usize {
        self.children.iter().map(|c| c.size() + 1).sum()
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for child in &self.children {
            write!(f, "({child})")?;
        }
        Ok(())
    }
}

impl FromStr for PlaneTree {
    type Err = EncodingError;

    fn from_str(text: &str) -> Result<Self, EncodingError> {
        let trimmed = text.trim();
        let mut stack: Vec<PlaneTree> = vec![PlaneTree::leaf()];
        for ch in trimmed.chars() {
            match ch {
                '(' => stack.push(PlaneTree::leaf()),
                ')' => {
                    let done = stack.pop().unwrap();
                    let parent = stack
                        .last_mut()
                        .ok_or_else(|| EncodingError::InvalidTree("unmatched ')'".into()))?;
                    parent.children.push(done);
                }
                other => {
                    return Err(EncodingError::InvalidTree(format!(
                        "unexpected character {other:?}"
                    )))
                }
            }
        }
        if stack.len() != 1 {
            return Err(EncodingError::InvalidTree("unmatched '('".into()));
        }
        Ok(stack.pop().unwrap())
    }
}

/// A noncrossing set partition of `{1, .., n}`. Blocks are stored with
/// ascending elements, sorted by smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NcPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self, EncodingError> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(EncodingError::MalformedPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n || seen[x] {
                    return Err(EncodingError::MalformedPartition(format!(
                        "element {x} repeated or outside 1..{n}"
                    )));
                }
                seen[x] = true;
            }
        }
        blocks.sort_unstable();
        let block_of = {
            let mut owner = vec![0usize; n + 1];
            for (i, block) in blocks.iter().enumerate() {
                for &x in block {
                    owner[x] = i;
                }
            }
            owner
        };
        for a in 1..=n {
            for b in (a + 1)..=n {
                for c in (b + 1)..=n {
                    for d in (c + 1)..=n {
                        if block_of[a] == block_of[c]
                            && block_of[b] == block_of[d]
                            && block_of[a] != block_of[b]
                        {
                            return Err(EncodingError::CrossingPartition { a, b, c, d });
                        }
                    }
                }
            }
        }
        Ok(NcPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl FromStr for NcPartition {
    type Err = EncodingError;

    fn from_str(text: &str) -> Result<Self, EncodingError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return NcPartition::new(Vec::new());
        }
        let mut blocks = Vec::new();
        let mut rest = trimmed;
        loop {
            let stripped = rest.strip_prefix('{').ok_or_else(|| {
                EncodingError::MalformedPartition(format!("expected '{{' in {rest:?}"))
            })?;
            let close = stripped
                .find('}')
                .ok_or_else(|| EncodingError::MalformedPartition("missing '}'".into()))?;
            let body = &stripped[..close];
            let block: Vec<usize> = body
                .split(',')
                .filter(|part| !part.trim().is_empty())
                .map(|part| {
                    part.trim().parse().map_err(|_| {
                        EncodingError::MalformedPartition(format!("bad number {part:?}"))
                    })
                })
                .collect::<Result<_, _>>()?;
            blocks.push(block);
            rest = &stripped[close + 1..];
            if rest.is_empty() {
                break;
            }
        }
        NcPartition::new(blocks)
    }
}

// ---------------------------------------------------------------------------
// Matchings and Dyck paths
// ---------------------------------------------------------------------------

/// Reads a pair off a matching: with arches indexed by increasing left
/// endpoint, `xSy` iff arch `x` is included in arch `y`, and `xRy` iff arch
/// `x` lies entirely to the left of arch `y`.
pub fn matching_to_pair(m: &ArchMatching) -> CatalanPair {
    let n = m.n();
    let arches = m.arches();
    let mut s = BinaryRelation::empty(n);
    let mut r = BinaryRelation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let (lx, rx) = arches[x];
            let (ly, ry) = arches[y];
            if ly < lx && rx < ry {
                s.insert(x, y);
            } else if rx < ly {
                r.insert(x, y);
            }
        }
    }
    CatalanPair::from_parts_unchecked(s, r)
}

/// Inverse of [`matching_to_pair`] via the recursive decomposition: the pivot
/// arch wraps the matching of the left part, the right part is appended.
pub fn pair_to_matching(pair: &CatalanPair) -> ArchMatching {
    fn build(pair: &CatalanPair, offset: usize, out: &mut Vec<(usize, usize)>) {
        if pair.n() == 0 {
            return;
        }
        let (alpha, beta) = pair.decompose().expect("nonempty");
        let left = offset + 1;
        let right = offset + 2 * alpha.n() + 2;
        out.push((left, right));
        build(&alpha, left, out);
        build(&beta, right, out);
    }
    let mut arches = Vec::with_capacity(pair.n());
    build(pair, 0, &mut arches);
    arches.sort_unstable();
    ArchMatching::from_sorted_unchecked(arches)
}

/// Left endpoints become up steps, right endpoints down steps.
pub fn matching_to_dyck(m: &ArchMatching) -> DyckPath {
    let n = m.n();
    let mut is_left = vec![false; 2 * n + 1];
    for &(l, _) in m.arches() {
        is_left[l] = true;
    }
    let steps = (1..=(2 * n))
        .map(|p| if is_left[p] { Step::Up } else { Step::Down })
        .collect();
    DyckPath::new(steps).expect("matchings encode balanced paths")
}

/// Pairs each down step with the matching up step (stack discipline).
pub fn dyck_to_matching(path: &DyckPath) -> ArchMatching {
    let mut open = Vec::new();
    let mut arches = Vec::with_capacity(path.semilength());
    for (i, step) in path.steps().iter().enumerate() {
        match step {
            Step::Up => open.push(i + 1),
            Step::Down => {
                let l = open.pop().expect("validated path");
                arches.push((l, i + 1));
            }
        }
    }
    arches.sort_unstable();
    ArchMatching::from_sorted_unchecked(arches)
}

/// Reads the pair straight off the tunnels of a Dyck path: tunnels indexed by
/// their left step, `xSy` iff tunnel `x` lies above tunnel `y`, `xRy` iff
/// tunnel `x` is completely to the left of tunnel `y`.
pub fn dyck_tunnels(path: &DyckPath) -> CatalanPair {
    // A tunnel spans the step interval of its matched up/down pair; lying
    // above is strict containment of spans, left-of is span disjointness.
    let mut open = Vec::new();
    let mut spans: Vec<(usize, usize)> = Vec::with_capacity(path.semilength());
    for (i, step) in path.steps().iter().enumerate() {
        match step {
            Step::Up => open.push(i + 1),
            Step::Down => {
                let l = open.pop().expect("validated path");
                spans.push((l, i + 1));
            }
        }
    }
    spans.sort_unstable();
    let n = spans.len();
    let mut s = BinaryRelation::empty(n);
    let mut r = BinaryRelation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let (lx, rx) = spans[x];
            let (ly, ry) = spans[y];
            if ly < lx && rx < ry {
                s.insert(x, y);
            } else if rx < ly {
                r.insert(x, y);
            }
        }
    }
    CatalanPair::from_parts_unchecked(s, r)
}

/// First-return factorization: up, the left part, down, then the right part.
pub fn pair_to_dyck(pair: &CatalanPair) -> DyckPath {
    fn build(pair: &CatalanPair, out: &mut Vec<Step>) {
        if pair.n() == 0 {
            return;
        }
        let (alpha, beta) = pair.decompose().expect("nonempty");
        out.push(Step::Up);
        build(&alpha, out);
        out.push(Step::Down);
        build(&beta, out);
    }
    let mut steps = Vec::with_capacity(2 * pair.n());
    build(pair, &mut steps);
    DyckPath::new(steps).expect("decomposition emits balanced paths")
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// Inversion relations of a permutation on the value set, 0-based: for values
/// `i < j`, `iSj` when `j` precedes `i` in one-line order (an inversion) and
/// `iRj` when `i` precedes `j` (a noninversion). Axioms ord S, ord R, tot and
/// inters hold for every permutation; only comp can fail.
pub fn perm_to_relations(pi: &Permutation) -> (BinaryRelation, BinaryRelation) {
    let n = pi.n();
    let pos = pi.positions();
    let mut s = BinaryRelation::empty(n);
    let mut r = BinaryRelation::empty(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            if pos[j - 1] < pos[i - 1] {
                s.insert(i - 1, j - 1);
            } else {
                r.insert(i - 1, j - 1);
            }
        }
    }
    (s, r)
}

/// Forward direction of the permutation codec; rejects permutations whose
/// inversion relations fail the composition axiom.
pub fn perm_to_pair(pi: &Permutation) -> Result<CatalanPair, EncodingError> {
    let (s, r) = perm_to_relations(pi);
    let comp = comp_status(&s, &r);
    match comp.witness {
        None => Ok(CatalanPair::from_parts_unchecked(s, r)),
        Some(w) => Err(EncodingError::NotCatalan {
            x: w[0],
            y: w[1],
            z: w[2],
        }),
    }
}

/// Reconstructs the unique permutation from relations satisfying ord S,
/// ord R, tot and inters: positions follow `T = R ∪ S⁻¹`, values follow
/// `V = S ∪ R`.
pub fn relations_to_perm(s: &BinaryRelation, r: &BinaryRelation) -> Permutation {
    let n = s.n();
    let t_ranks = t_ranks_of(s, r);
    let mut v_ranks = vec![0usize; n];
    for x in 0..n {
        let mut below = 0;
        for y in 0..n {
            if y != x && (s.contains(y, x) || r.contains(y, x)) {
                below += 1;
            }
        }
        v_ranks[x] = below;
    }
    let mut one_line = vec![0usize; n];
    for x in 0..n {
        one_line[t_ranks[x]] = v_ranks[x] + 1;
    }
    Permutation::new(one_line).expect("V = S ∪ R must be a total order")
}

pub fn pair_to_perm(pair: &CatalanPair) -> Permutation {
    relations_to_perm(pair.s(), pair.r())
}

// ---------------------------------------------------------------------------
// Plane trees
// ---------------------------------------------------------------------------

/// Non-root nodes are the elements (in preorder): `xSy` iff `y` is a proper
/// ancestor of `x` (the root excluded), `xRy` iff the subtree of `x` is
/// entirely to the left of the subtree of `y`.
pub fn tree_to_pair(tree: &PlaneTree) -> CatalanPair {
    let n = tree.size();
    let mut s = BinaryRelation::empty(n);
    let mut spans: Vec<(usize, usize)> = vec![(0, 0); n];

    fn walk(
        node: &PlaneTree,
        next: &mut usize,
        ancestors: &mut Vec<usize>,
        s: &mut BinaryRelation,
        spans: &mut [(usize, usize)],
    ) {
        for child in &node.children {
            let id = *next;
            *next += 1;
            for &a in ancestors.iter() {
                s.insert(id, a);
            }
            ancestors.push(id);
            walk(child, next, ancestors, s, spans);
            ancestors.pop();
            spans[id] = (id, *next - 1);
        }
    }

    let mut next = 0usize;
    walk(tree, &mut next, &mut Vec::new(), &mut s, &mut spans);

    let mut r = BinaryRelation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && spans[x].1 < spans[y].0 {
                r.insert(x, y);
            }
        }
    }
    CatalanPair::from_parts_unchecked(s, r)
}

pub fn pair_to_tree(pair: &CatalanPair) -> PlaneTree {
    let word = pair_to_dyck(pair).to_string();
    let parens: String = word
        .chars()
        .map(|c| if c == 'U' { '(' } else { ')' })
        .collect();
    parens.parse().expect("Dyck words parse as trees")
}

// ---------------------------------------------------------------------------
// Noncrossing partitions
// ---------------------------------------------------------------------------

/// Down-link construction: every element of a block points to the element
/// just below the block's minimum; `S` is the transitive closure of those
/// links and `R` relates the remaining index-increasing pairs.
pub fn partition_to_pair(p: &NcPartition) -> CatalanPair {
    let n = p.n();
    let mut links = BinaryRelation::empty(n);
    for block in p.blocks() {
        let m = block[0];
        if m > 1 {
            for &x in block {
                links.insert(x - 1, m - 2);
            }
        }
    }
    let s = links.transitive_closure();
    let mut r = BinaryRelation::empty(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if !s.contains(j, i) {
                r.insert(i, j);
            }
        }
    }
    CatalanPair::from_parts_unchecked(s, r)
}

/// Inverse: in canonical labels the down-link of `x` is its largest
/// S-successor, so blocks are recovered by grouping on it; elements with no
/// successor form the block of the first position.
pub fn pair_to_partition(pair: &CatalanPair) -> NcPartition {
    let canonical = pair.canonicalize();
    let s = canonical.s();
    let n = canonical.n();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for x in 0..n {
        let row = s.row(x);
        if row == 0 {
            groups[0].push(x + 1);
        } else {
            let target = 63 - row.leading_zeros() as usize;
            groups[target + 1].push(x + 1);
        }
    }
    let blocks: Vec<Vec<usize>> = groups.into_iter().filter(|b| !b.is_empty()).collect();
    NcPartition::new(blocks).expect("canonical Catalan pairs decode to noncrossing partitions")
}
