//! Relaxations of the Catalan-pair axioms.
//!
//! Dropping the composition axiom yields factorial pairs (in bijection with
//! permutations); weakening it to `Sʰ∘Rᵏ ⊆ R` yields the comp(h,k) families
//! with pattern-avoidance descriptions; dropping irreflexivity of `S` yields
//! the unrestricted family and, with extra axioms on the reflexive points,
//! the Grand-Dyck and Schröder families carried by two-coloured matchings.

use crate::encodings::{perm_to_relations, relations_to_perm, EncodingError, Permutation, Step};
use crate::pairs::{
    comp_status, inters_status, strict_order_status, tot_status, AxiomStatus, CatalanPair,
};
use crate::relcore::{BinaryRelation, RelationError};
use num_bigint::BigUint;
use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exhaustive permutation scans stay comfortable up to 10! candidates.
pub const AVOIDER_ENVELOPE: usize = 10;
/// Axiom-level brute force over the n! permutation representations.
pub const COMP_HK_ENVELOPE: usize = 6;
/// Decorated / path-based enumerations.
pub const GENERALIZED_ENUM_ENVELOPE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneralError {
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Encoding(#[from] EncodingError),
    #[error("relations do not satisfy the {profile} axioms")]
    InvalidPair {
        profile: Profile,
        report: Box<GeneralizedReport>,
    },
    #[error("operation defined for profile {expected}, value has {found}")]
    WrongProfile {
        expected: &'static str,
        found: Profile,
    },
    #[error("envelope exceeded: n = {n} > {max}")]
    Envelope { n: usize, max: usize },
    #[error("empty pattern set")]
    EmptyPatternSet,
}

/// Axiom profile of a generalized pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Factorial,
    CompHK { h: u32, k: u32 },
    Unrestricted,
    GrandDyck,
    Schroder,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Profile::Factorial => write!(f, "factorial"),
            Profile::CompHK { h, k } => write!(f, "comp-hk:{h},{k}"),
            Profile::Unrestricted => write!(f, "unrestricted"),
            Profile::GrandDyck => write!(f, "grand-dyck"),
            Profile::Schroder => write!(f, "schroder"),
        }
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        match text {
            "factorial" => Ok(Profile::Factorial),
            "unrestricted" => Ok(Profile::Unrestricted),
            "grand-dyck" => Ok(Profile::GrandDyck),
            "schroder" => Ok(Profile::Schroder),
            other => {
                if let Some(args) = other.strip_prefix("comp-hk:") {
                    let (h, k) = args
                        .split_once(',')
                        .ok_or_else(|| format!("expected comp-hk:H,K, got {other:?}"))?;
                    let h: u32 = h
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad h in {other:?}"))?;
                    let k: u32 = k
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad k in {other:?}"))?;
                    if h == 0 || k == 0 {
                        return Err("comp-hk needs h, k >= 1".into());
                    }
                    Ok(Profile::CompHK { h, k })
                } else {
                    Err(format!("unknown profile {other:?}"))
                }
            }
        }
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Profile {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// One named axiom check with an optional first violating witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn from_status(name: &'static str, status: AxiomStatus) -> Self {
        AxiomCheck {
            name,
            holds: status.holds,
            witness: status.witness,
        }
    }
}

/// Profile-dependent axiom evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralizedReport {
    pub profile: Profile,
    pub valid: bool,
    pub checks: Vec<AxiomCheck>,
}

fn transitive_status(a: &BinaryRelation) -> AxiomStatus {
    let n = a.n();
    for x in 0..n {
        for y in 0..n {
            if !a.contains(x, y) {
                continue;
            }
            for z in 0..n {
                if a.contains(y, z) && !a.contains(x, z) {
                    return AxiomStatus {
                        holds: false,
                        witness: Some(vec![x, y, z]),
                    };
                }
            }
        }
    }
    AxiomStatus {
        holds: true,
        witness: None,
    }
}

fn antisymmetric_status(a: &BinaryRelation) -> AxiomStatus {
    let n = a.n();
    for x in 0..n {
        for y in (x + 1)..n {
            if a.contains(x, y) && a.contains(y, x) {
                return AxiomStatus {
                    holds: false,
                    witness: Some(vec![x, y]),
                };
            }
        }
    }
    AxiomStatus {
        holds: true,
        witness: None,
    }
}

fn choose_status(s: &BinaryRelation) -> AxiomStatus {
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            if x != y && s.contains(x, y) && s.contains(x, x) != s.contains(y, y) {
                return AxiomStatus {
                    holds: false,
                    witness: Some(vec![x, y]),
                };
            }
        }
    }
    AxiomStatus {
        holds: true,
        witness: None,
    }
}

fn min_status(s: &BinaryRelation) -> AxiomStatus {
    let n = s.n();
    for x in 0..n {
        if s.contains(x, x) && (0..n).any(|t| t != x && s.contains(t, x)) {
            return AxiomStatus {
                holds: false,
                witness: Some(vec![x]),
            };
        }
    }
    AxiomStatus {
        holds: true,
        witness: None,
    }
}

fn comp_hk_status(s: &BinaryRelation, r: &BinaryRelation, h: u32, k: u32) -> AxiomStatus {
    let lhs = s
        .compose_power(h)
        .compose(&r.compose_power(k))
        .expect("same ground set");
    for (x, z) in lhs.pairs() {
        if !r.contains(x, z) {
            return AxiomStatus {
                holds: false,
                witness: Some(vec![x, z]),
            };
        }
    }
    AxiomStatus {
        holds: true,
        witness: None,
    }
}

/// Profile-dependent axiom evaluation; tot and inters take symmetrizations
/// off the diagonal, so reflexive S-points never interfere with them.
pub fn verify_generalized(
    s: &BinaryRelation,
    r: &BinaryRelation,
    profile: Profile,
) -> Result<GeneralizedReport, RelationError> {
    if s.n() != r.n() {
        return Err(RelationError::DimensionMismatch {
            left: s.n(),
            right: r.n(),
        });
    }
    let mut checks = vec![AxiomCheck::from_status("ordR", strict_order_status(r))];
    match profile {
        Profile::Factorial => {
            checks.insert(0, AxiomCheck::from_status("ordS", strict_order_status(s)));
        }
        Profile::CompHK { h, k } => {
            checks.insert(0, AxiomCheck::from_status("ordS", strict_order_status(s)));
            checks.push(AxiomCheck::from_status(
                "compHK",
                comp_hk_status(s, r, h, k),
            ));
        }
        Profile::Unrestricted | Profile::GrandDyck | Profile::Schroder => {
            checks.insert(
                0,
                AxiomCheck::from_status("sAntisym", antisymmetric_status(s)),
            );
            checks.insert(0, AxiomCheck::from_status("sTrans", transitive_status(s)));
            checks.push(AxiomCheck::from_status("comp", comp_status(s, r)));
            if profile == Profile::GrandDyck {
                checks.push(AxiomCheck::from_status("choose", choose_status(s)));
            }
            if profile == Profile::Schroder {
                checks.push(AxiomCheck::from_status("min", min_status(s)));
            }
        }
    }
    checks.push(AxiomCheck::from_status("tot", tot_status(s, r)));
    checks.push(AxiomCheck::from_status("inters", inters_status(s, r)));
    let valid = checks.iter().all(|c| c.holds);
    Ok(GeneralizedReport {
        profile,
        valid,
        checks,
    })
}

/// A validated generalized pair: `(S, R)` plus its axiom profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedPair {
    s: BinaryRelation,
    r: BinaryRelation,
    profile: Profile,
}

impl GeneralizedPair {
    pub fn new(
        s: BinaryRelation,
        r: BinaryRelation,
        profile: Profile,
    ) -> Result<Self, GeneralError> {
        let report = verify_generalized(&s, &r, profile)?;
        if !report.valid {
            return Err(GeneralError::InvalidPair {
                profile,
                report: Box::new(report),
            });
        }
        Ok(GeneralizedPair { s, r, profile })
    }

    fn from_parts_unchecked(s: BinaryRelation, r: BinaryRelation, profile: Profile) -> Self {
        debug_assert!(verify_generalized(&s, &r, profile)
            .map(|rep| rep.valid)
            .unwrap_or(false));
        GeneralizedPair { s, r, profile }
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

    pub fn profile(&self) -> Profile {
        self.profile
    }

    /// The reflexive points of S, as a relation.
    pub fn s_diagonal(&self) -> BinaryRelation {
        self.s
            .intersect(&BinaryRelation::diagonal(self.n()))
            .expect("same ground set")
    }
}

impl Serialize for GeneralizedPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s_pairs: Vec<[usize; 2]> = self.s.pairs().iter().map(|&(x, y)| [x, y]).collect();
        let r_pairs: Vec<[usize; 2]> = self.r.pairs().iter().map(|&(x, y)| [x, y]).collect();
        let mut st = serializer.serialize_struct("GeneralizedPair", 4)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("S", &s_pairs)?;
        st.serialize_field("R", &r_pairs)?;
        st.serialize_field("profile", &self.profile)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GeneralizedPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            #[serde(rename = "S")]
            s: Vec<[usize; 2]>,
            #[serde(rename = "R")]
            r: Vec<[usize; 2]>,
            profile: Profile,
        }
        let raw = Raw::deserialize(deserializer)?;
        let s_pairs: Vec<(usize, usize)> = raw.s.iter().map(|&[x, y]| (x, y)).collect();
        let r_pairs: Vec<(usize, usize)> = raw.r.iter().map(|&[x, y]| (x, y)).collect();
        let s = BinaryRelation::from_pairs(raw.n, &s_pairs).map_err(D::Error::custom)?;
        let r = BinaryRelation::from_pairs(raw.n, &r_pairs).map_err(D::Error::custom)?;
        GeneralizedPair::new(s, r, raw.profile).map_err(|e| D::Error::custom(e.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Factorial pairs and permutations
// ---------------------------------------------------------------------------

/// The inversion construction applied to any permutation. Always valid.
pub fn factorial_from_perm(pi: &Permutation) -> GeneralizedPair {
    let (s, r) = perm_to_relations(pi);
    GeneralizedPair::from_parts_unchecked(s, r, Profile::Factorial)
}

/// Permutation representation of a factorial or comp(h,k) pair.
pub fn factorial_to_perm(pair: &GeneralizedPair) -> Result<Permutation, GeneralError> {
    match pair.profile() {
        Profile::Factorial | Profile::CompHK { .. } => Ok(relations_to_perm(pair.s(), pair.r())),
        found => Err(GeneralError::WrongProfile {
            expected: "factorial",
            found,
        }),
    }
}

fn permutations_lex(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut values: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn fill(n: usize, values: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if values.len() == n {
            out.push(Permutation::new(values.clone()).expect("constructed as a permutation"));
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                values.push(v);
                fill(n, values, used, out);
                values.pop();
                used[v] = false;
            }
        }
    }
    fill(n, &mut values, &mut used, &mut out);
    out
}

/// All factorial pairs of size `n`, in lexicographic permutation order.
pub fn enumerate_factorial(n: usize) -> Result<Vec<GeneralizedPair>, GeneralError> {
    if n > COMP_HK_ENVELOPE {
        return Err(GeneralError::Envelope {
            n,
            max: COMP_HK_ENVELOPE,
        });
    }
    Ok(permutations_lex(n)
        .iter()
        .map(factorial_from_perm)
        .collect())
}

// ---------------------------------------------------------------------------
// Pattern containment and avoidance
// ---------------------------------------------------------------------------

/// True iff some subsequence of `pi` is order-isomorphic to `nu`.
pub fn contains_pattern(pi: &Permutation, nu: &Permutation) -> bool {
    let haystack = pi.values();
    let needle = nu.values();
    let m = needle.len();
    if m > haystack.len() {
        return false;
    }
    if m == 0 {
        return true;
    }

    fn extend(haystack: &[usize], needle: &[usize], chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == needle.len() {
            return true;
        }
        let start = chosen.last().map_or(0, |&p| p + 1);
        for pos in start..haystack.len() {
            if haystack.len() - pos < needle.len() - depth {
                break;
            }
            // The candidate must sit in the same relative order with every
            // value already chosen.
            let consistent = (0..depth).all(|earlier| {
                (haystack[chosen[earlier]] < haystack[pos]) == (needle[earlier] < needle[depth])
            });
            if consistent {
                chosen.push(pos);
                if extend(haystack, needle, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    extend(haystack, needle, &mut Vec::new())
}

/// A nonempty set of forbidden patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Permutation>) -> Result<Self, GeneralError> {
        if patterns.is_empty() {
            return Err(GeneralError::EmptyPatternSet);
        }
        Ok(PatternSet { patterns })
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn avoided_by(&self, pi: &Permutation) -> bool {
        self.patterns.iter().all(|nu| !contains_pattern(pi, nu))
    }

    /// Image under reverse-complement, the symmetry used when a convention
    /// mismatch is suspected.
    pub fn reverse_complement(&self) -> Self {
        let patterns = self.patterns.iter().map(reverse_complement).collect();
        PatternSet { patterns }
    }
}

pub fn reverse_complement(pi: &Permutation) -> Permutation {
    let n = pi.n();
    let values: Vec<usize> = pi.values().iter().rev().map(|&v| n + 1 - v).collect();
    Permutation::new(values).expect("symmetry of a permutation")
}

/// Patterns for the `comp(h,1)` family: the decreasing word of length h+2
/// with each of 2..h+1 moved to the rightmost position.
pub fn pattern_set_h1(h: u32) -> PatternSet {
    assert!(h >= 1);
    let len = h as usize + 2;
    let mut patterns = Vec::new();
    for moved in 2..=(h as usize + 1) {
        let mut word: Vec<usize> = (1..=len).rev().filter(|&v| v != moved).collect();
        word.push(moved);
        patterns.push(Permutation::new(word).expect("constructed as a permutation"));
    }
    PatternSet::new(patterns).expect("h >= 1 gives at least one pattern")
}

/// Pattern for the `comp(1,k)` family: `(k+2) 1 2 ⋯ k (k+1)`.
pub fn pattern_set_1k(k: u32) -> PatternSet {
    assert!(k >= 1);
    let len = k as usize + 2;
    let mut word = vec![len];
    word.extend(1..=(k as usize + 1));
    PatternSet::new(vec![
        Permutation::new(word).expect("constructed as a permutation")
    ])
    .expect("nonempty")
}

/// Number of permutations of S_n avoiding every pattern, by exhaustive scan.
pub fn count_avoiders(n: usize, patterns: &PatternSet) -> Result<u64, GeneralError> {
    if n > AVOIDER_ENVELOPE {
        return Err(GeneralError::Envelope {
            n,
            max: AVOIDER_ENVELOPE,
        });
    }
    Ok(permutations_lex(n)
        .iter()
        .filter(|pi| patterns.avoided_by(pi))
        .count() as u64)
}

/// `|F_{h,k}(n)|` by axiom-level brute force over the n! permutation
/// representations.
pub fn count_comp_hk(n: usize, h: u32, k: u32) -> Result<u64, GeneralError> {
    if n > COMP_HK_ENVELOPE {
        return Err(GeneralError::Envelope {
            n,
            max: COMP_HK_ENVELOPE,
        });
    }
    let mut count = 0u64;
    for pi in permutations_lex(n) {
        let (s, r) = perm_to_relations(&pi);
        if comp_hk_status(&s, &r, h, k).holds {
            count += 1;
        }
    }
    Ok(count)
}

/// Which convention made an axiom-count and an avoider-count agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternConvention {
    Literal,
    ReverseComplement,
}

/// Comparison of an axiom-level count with a pattern-avoidance count: when
/// the literal pattern set disagrees, the reverse-complement image is tried
/// and both counts are reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoiderAgreement {
    pub axiom_count: u64,
    pub literal_avoiders: u64,
    pub reverse_complement_avoiders: Option<u64>,
    pub matched: Option<PatternConvention>,
}

pub fn comp_hk_avoider_agreement(
    n: usize,
    h: u32,
    k: u32,
    patterns: &PatternSet,
) -> Result<AvoiderAgreement, GeneralError> {
    let axiom_count = count_comp_hk(n, h, k)?;
    let literal = count_avoiders(n, patterns)?;
    if literal == axiom_count {
        return Ok(AvoiderAgreement {
            axiom_count,
            literal_avoiders: literal,
            reverse_complement_avoiders: None,
            matched: Some(PatternConvention::Literal),
        });
    }
    let flipped = count_avoiders(n, &patterns.reverse_complement())?;
    let matched = (flipped == axiom_count).then_some(PatternConvention::ReverseComplement);
    Ok(AvoiderAgreement {
        axiom_count,
        literal_avoiders: literal,
        reverse_complement_avoiders: Some(flipped),
        matched,
    })
}

// ---------------------------------------------------------------------------
// Unrestricted pairs
// ---------------------------------------------------------------------------

/// `2ⁿ Cₙ`: every Catalan pair decorated with every set of reflexive points.
pub fn count_unrestricted(n: usize) -> BigUint {
    crate::pairs::count(n) * BigUint::from(2u32).pow(n as u32)
}

/// Decorates each enumerated Catalan pair with every diagonal subset, mask
/// ascending.
pub fn enumerate_unrestricted(n: usize) -> Result<Vec<GeneralizedPair>, GeneralError> {
    if n > GENERALIZED_ENUM_ENVELOPE {
        return Err(GeneralError::Envelope {
            n,
            max: GENERALIZED_ENUM_ENVELOPE,
        });
    }
    let mut out = Vec::new();
    for pair in crate::pairs::enumerate(n) {
        for mask in 0u64..(1 << n) {
            let mut s = pair.s().clone();
            for x in 0..n {
                if mask >> x & 1 == 1 {
                    s = s
                        .union(&BinaryRelation::from_pairs(n, &[(x, x)]).expect("in range"))
                        .expect("same ground set");
                }
            }
            out.push(GeneralizedPair::from_parts_unchecked(
                s,
                pair.r().clone(),
                Profile::Unrestricted,
            ));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Two-coloured matchings and the path codecs
// ---------------------------------------------------------------------------

/// A perfect noncrossing matching with a solid/dotted flag per arch. Arches
/// are sorted by left endpoint. Carrier for the Grand-Dyck and Schröder
/// codecs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColouredMatching {
    arches: Vec<(usize, usize)>,
    dotted: Vec<bool>,
}

impl TwoColouredMatching {
    pub fn new(arches: Vec<(usize, usize)>, dotted: Vec<bool>) -> Result<Self, GeneralError> {
        if arches.len() != dotted.len() {
            return Err(GeneralError::Encoding(EncodingError::MalformedMatching(
                "one colour flag per arch".into(),
            )));
        }
        let mut indexed: Vec<((usize, usize), bool)> = arches.into_iter().zip(dotted).collect();
        indexed.sort_unstable();
        let sorted_arches: Vec<(usize, usize)> = indexed.iter().map(|&(a, _)| a).collect();
        crate::encodings::ArchMatching::new(sorted_arches.clone())?;
        let dotted = indexed.iter().map(|&(_, d)| d).collect();
        Ok(TwoColouredMatching {
            arches: sorted_arches,
            dotted,
        })
    }

    pub fn n(&self) -> usize {
        self.arches.len()
    }

    pub fn arches(&self) -> &[(usize, usize)] {
        &self.arches
    }

    pub fn dotted(&self) -> &[bool] {
        &self.dotted
    }

    /// Inclusion plus reflexive points for dotted arches, and left-of.
    fn to_relations(&self) -> (BinaryRelation, BinaryRelation) {
        let n = self.n();
        let mut s = BinaryRelation::empty(n);
        let mut r = BinaryRelation::empty(n);
        for x in 0..n {
            if self.dotted[x] {
                s.insert(x, x);
            }
            for y in 0..n {
                if x == y {
                    continue;
                }
                let (lx, rx) = self.arches[x];
                let (ly, ry) = self.arches[y];
                if ly < lx && rx < ry {
                    s.insert(x, y);
                } else if rx < ly {
                    r.insert(x, y);
                }
            }
        }
        (s, r)
    }
}

/// A balanced walk over U/D, allowed below the axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrandDyckPath {
    steps: Vec<Step>,
}

impl GrandDyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, GeneralError> {
        let balance: i64 = steps
            .iter()
            .map(|s| if *s == Step::Up { 1 } else { -1 })
            .sum();
        if balance != 0 {
            return Err(GeneralError::Encoding(EncodingError::InvalidPath(
                "walk is not balanced".into(),
            )));
        }
        Ok(GrandDyckPath { steps })
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl fmt::Display for GrandDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(if *step == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for GrandDyckPath {
    type Err = GeneralError;

    fn from_str(text: &str) -> Result<Self, GeneralError> {
        let mut steps = Vec::with_capacity(text.len());
        for ch in text.trim().chars() {
            match ch {
                'U' | 'u' => steps.push(Step::Up),
                'D' | 'd' => steps.push(Step::Down),
                other => {
                    return Err(GeneralError::Encoding(EncodingError::InvalidPath(format!(
                        "unexpected character {other:?}"
                    ))))
                }
            }
        }
        GrandDyckPath::new(steps)
    }
}

/// Decodes a balanced walk: each maximal excursion above the axis becomes a
/// system of solid arches, each excursion below becomes the reflected system
/// with every arch dotted.
pub fn granddyck_to_matching(path: &GrandDyckPath) -> TwoColouredMatching {
    let mut arches = Vec::with_capacity(path.semilength());
    let mut dotted = Vec::with_capacity(path.semilength());
    let mut open: Vec<usize> = Vec::new();
    let mut height = 0i64;
    for (i, step) in path.steps().iter().enumerate() {
        let pos = i + 1;
        let up = *step == Step::Up;
        // Sign of the excursion this step belongs to.
        let positive = if height == 0 { up } else { height > 0 };
        let opens = up == positive;
        if opens {
            open.push(pos);
        } else {
            let l = open.pop().expect("balanced within an excursion");
            arches.push((l, pos));
            dotted.push(!positive);
        }
        height += if up { 1 } else { -1 };
    }
    TwoColouredMatching::new(arches, dotted).expect("excursions nest properly")
}

pub fn granddyck_to_pair(path: &GrandDyckPath) -> GeneralizedPair {
    let (s, r) = granddyck_to_matching(path).to_relations();
    GeneralizedPair::from_parts_unchecked(s, r, Profile::GrandDyck)
}

/// Arch system of the underlying Catalan pair (reflexive points stripped),
/// with the colour flags carried alongside.
fn pair_to_two_coloured(pair: &GeneralizedPair) -> TwoColouredMatching {
    let n = pair.n();
    let base_s = pair
        .s()
        .difference(&BinaryRelation::diagonal(n))
        .expect("same ground set");
    let base = CatalanPair::new(base_s, pair.r().clone())
        .expect("stripping reflexive points leaves a Catalan pair");
    let arches = crate::encodings::pair_to_matching(&base);
    let ranks = base.t_ranks();
    let mut dotted = vec![false; n];
    for x in 0..n {
        dotted[ranks[x]] = pair.s().contains(x, x);
    }
    TwoColouredMatching::new(arches.arches().to_vec(), dotted).expect("valid matching")
}

pub fn pair_to_granddyck(pair: &GeneralizedPair) -> Result<GrandDyckPath, GeneralError> {
    if pair.profile() != Profile::GrandDyck {
        return Err(GeneralError::WrongProfile {
            expected: "grand-dyck",
            found: pair.profile(),
        });
    }
    let m = pair_to_two_coloured(pair);
    let n = m.n();
    let mut role = vec![(false, false); 2 * n + 1]; // (is_left, dotted)
    for (i, &(l, r)) in m.arches().iter().enumerate() {
        role[l] = (true, m.dotted()[i]);
        role[r] = (false, m.dotted()[i]);
    }
    let steps = (1..=(2 * n))
        .map(|p| {
            let (is_left, dotted) = role[p];
            if is_left != dotted {
                Step::Up
            } else {
                Step::Down
            }
        })
        .collect();
    GrandDyckPath::new(steps)
}

/// All Grand-Dyck walks of semilength n, lexicographic with U before D.
pub fn enumerate_granddyck(n: usize) -> Result<Vec<GeneralizedPair>, GeneralError> {
    if n > GENERALIZED_ENUM_ENVELOPE {
        return Err(GeneralError::Envelope {
            n,
            max: GENERALIZED_ENUM_ENVELOPE,
        });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    fn fill(remaining: usize, balance: i64, steps: &mut Vec<Step>, out: &mut Vec<GeneralizedPair>) {
        if remaining == 0 {
            if balance == 0 {
                let path = GrandDyckPath::new(steps.clone()).expect("balanced");
                out.push(granddyck_to_pair(&path));
            }
            return;
        }
        if balance < remaining as i64 {
            steps.push(Step::Up);
            fill(remaining - 1, balance + 1, steps, out);
            steps.pop();
        }
        if -balance < remaining as i64 {
            steps.push(Step::Down);
            fill(remaining - 1, balance - 1, steps, out);
            steps.pop();
        }
    }
    fill(2 * n, 0, &mut steps, &mut out);
    Ok(out)
}

pub fn central_binomial(n: usize) -> BigUint {
    let mut value = BigUint::from(1u32);
    for i in 0..n {
        value = value * BigUint::from((n + i + 1) as u64) / BigUint::from((i + 1) as u64);
    }
    value
}

// ---------------------------------------------------------------------------
// Schröder pairs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchroderStep {
    Up,
    Down,
    /// Horizontal step of length two.
    Flat,
}

/// A path over U/D/H from the axis back to the axis, weakly above it; H
/// occupies two positions so a path of semilength n covers 2n points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchroderPath {
    steps: Vec<SchroderStep>,
}

impl SchroderPath {
    pub fn new(steps: Vec<SchroderStep>) -> Result<Self, GeneralError> {
        let mut height = 0i64;
        for step in &steps {
            match step {
                SchroderStep::Up => height += 1,
                SchroderStep::Down => height -= 1,
                SchroderStep::Flat => {}
            }
            if height < 0 {
                return Err(GeneralError::Encoding(EncodingError::InvalidPath(
                    "path dips below the axis".into(),
                )));
            }
        }
        if height != 0 {
            return Err(GeneralError::Encoding(EncodingError::InvalidPath(
                "path is not balanced".into(),
            )));
        }
        Ok(SchroderPath { steps })
    }

    pub fn semilength(&self) -> usize {
        self.steps
            .iter()
            .map(|s| {
                if matches!(s, SchroderStep::Flat) {
                    2
                } else {
                    1
                }
            })
            .sum::<usize>()
            / 2
    }

    pub fn steps(&self) -> &[SchroderStep] {
        &self.steps
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                SchroderStep::Up => "U",
                SchroderStep::Down => "D",
                SchroderStep::Flat => "H",
            })?;
        }
        Ok(())
    }
}

impl FromStr for SchroderPath {
    type Err = GeneralError;

    fn from_str(text: &str) -> Result<Self, GeneralError> {
        let mut steps = Vec::with_capacity(text.len());
        for ch in text.trim().chars() {
            match ch {
                'U' | 'u' => steps.push(SchroderStep::Up),
                'D' | 'd' => steps.push(SchroderStep::Down),
                'H' | 'h' => steps.push(SchroderStep::Flat),
                other => {
                    return Err(GeneralError::Encoding(EncodingError::InvalidPath(format!(
                        "unexpected character {other:?}"
                    ))))
                }
            }
        }
        SchroderPath::new(steps)
    }
}

/// H steps become dotted childless arches, U/D pairs solid arches.
pub fn schroder_to_matching(path: &SchroderPath) -> TwoColouredMatching {
    let mut arches = Vec::new();
    let mut dotted = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let mut pos = 1usize;
    for step in path.steps() {
        match step {
            SchroderStep::Up => {
                open.push(pos);
                pos += 1;
            }
            SchroderStep::Down => {
                let l = open.pop().expect("validated path");
                arches.push((l, pos));
                dotted.push(false);
                pos += 1;
            }
            SchroderStep::Flat => {
                arches.push((pos, pos + 1));
                dotted.push(true);
                pos += 2;
            }
        }
    }
    TwoColouredMatching::new(arches, dotted).expect("stack discipline nests")
}

pub fn schroder_to_pair(path: &SchroderPath) -> GeneralizedPair {
    let (s, r) = schroder_to_matching(path).to_relations();
    GeneralizedPair::from_parts_unchecked(s, r, Profile::Schroder)
}

pub fn pair_to_schroder(pair: &GeneralizedPair) -> Result<SchroderPath, GeneralError> {
    if pair.profile() != Profile::Schroder {
        return Err(GeneralError::WrongProfile {
            expected: "schroder",
            found: pair.profile(),
        });
    }
    let m = pair_to_two_coloured(pair);
    let n = m.n();
    #[derive(Clone, Copy)]
    enum Role {
        SolidLeft,
        SolidRight,
        DottedLeft,
    }
    let mut role = vec![Role::SolidRight; 2 * n + 1];
    for (i, &(l, r)) in m.arches().iter().enumerate() {
        if m.dotted()[i] {
            assert_eq!(r, l + 1, "dotted arches of a Schröder pair are childless");
            role[l] = Role::DottedLeft;
        } else {
            role[l] = Role::SolidLeft;
            role[r] = Role::SolidRight;
        }
    }
    let mut steps = Vec::new();
    let mut p = 1usize;
    while p <= 2 * n {
        match role[p] {
            Role::SolidLeft => {
                steps.push(SchroderStep::Up);
                p += 1;
            }
            Role::SolidRight => {
                steps.push(SchroderStep::Down);
                p += 1;
            }
            Role::DottedLeft => {
                steps.push(SchroderStep::Flat);
                p += 2;
            }
        }
    }
    SchroderPath::new(steps)
}

/// All Schröder paths of semilength n (step order U, D, H at each point).
pub fn enumerate_schroder(n: usize) -> Result<Vec<GeneralizedPair>, GeneralError> {
    if n > GENERALIZED_ENUM_ENVELOPE {
        return Err(GeneralError::Envelope {
            n,
            max: GENERALIZED_ENUM_ENVELOPE,
        });
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    fn fill(
        remaining: usize,
        height: i64,
        steps: &mut Vec<SchroderStep>,
        out: &mut Vec<GeneralizedPair>,
    ) {
        if remaining == 0 {
            if height == 0 {
                let path = SchroderPath::new(steps.clone()).expect("balanced");
                out.push(schroder_to_pair(&path));
            }
            return;
        }
        if height < remaining as i64 {
            steps.push(SchroderStep::Up);
            fill(remaining - 1, height + 1, steps, out);
            steps.pop();
        }
        if height > 0 {
            steps.push(SchroderStep::Down);
            fill(remaining - 1, height - 1, steps, out);
            steps.pop();
        }
        if remaining >= 2 && height <= remaining as i64 - 2 {
            steps.push(SchroderStep::Flat);
            fill(remaining - 2, height, steps, out);
            steps.pop();
        }
    }
    fill(2 * n, 0, &mut steps, &mut out);
    Ok(out)
}

/// Large Schröder numbers: r(0)=1, r(n+1) = r(n) + Σ r(k)·r(n−k).
pub fn schroder_number(n: usize) -> BigUint {
    let mut table: Vec<BigUint> = vec![BigUint::from(1u32)];
    for m in 0..n {
        let mut next = table[m].clone();
        for k in 0..=m {
            next += &table[k] * &table[m - k];
        }
        table.push(next);
    }
    table.swap_remove(n)
}

// ---------------------------------------------------------------------------
// Equational reformulations
// ---------------------------------------------------------------------------

/// Cross-checks the pointwise axioms against their equational forms:
/// the choose axiom against `𝒟(S)∘S = S∘𝒟(S)`, the min axiom against
/// `S∘𝒟(S) = 𝒟(S)`, and the one-sided containment `S∘𝒟(S) ⊆ 𝒟(S)∘S`
/// whenever min holds.
pub fn check_axiom_reformulations(pair: &GeneralizedPair) -> bool {
    let s = pair.s();
    let d = pair.s_diagonal();
    let ds = d.compose(s).expect("same ground set");
    let sd = s.compose(&d).expect("same ground set");

    let choose_pointwise = choose_status(s).holds;
    let commutes = ds == sd;

    let min_pointwise = min_status(s).holds;
    let collapses = sd == d;

    let containment_ok = !min_pointwise || sd.is_subset_of(&ds);

    choose_pointwise == commutes && min_pointwise == collapses && containment_ok
}
