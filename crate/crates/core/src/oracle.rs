//! Independent brute-force ground truth.
//!
//! Candidates are generated from scratch — one of four states per unordered
//! pair, so totality and disjointness hold structurally — and filtered by the
//! remaining axioms, with isomorphism deduplication by minimal serialized
//! form over all relabelings. Nothing here goes through the recursive
//! composition, so agreement with the enumerator is a real check.

use crate::general::Profile;
use crate::relcore::BinaryRelation;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// The pair-state scan is 4^(n(n-1)/2) candidates.
pub const CATALAN_ORACLE_ENVELOPE: usize = 5;
/// Strict-order scan: 3^(n(n-1)/2) candidates.
pub const POSET_ORACLE_ENVELOPE: usize = 5;
/// Diagonal decorations double the state space per element.
pub const GENERALIZED_ORACLE_ENVELOPE: usize = 4;
/// comp(h,k) runs over the n! permutation representations.
pub const COMP_HK_ORACLE_ENVELOPE: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle envelope exceeded: n = {n} > {max}")]
    Envelope { n: usize, max: usize },
}

/// Outcome of one oracle run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub profile: String,
    #[serde(rename = "labeledCount")]
    pub labeled_count: u64,
    #[serde(rename = "isoClassCount")]
    pub iso_class_count: u64,
    #[serde(rename = "perAxiomRejections")]
    pub per_axiom_rejections: BTreeMap<String, u64>,
}

fn permutations_zero_based(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn fill(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                fill(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    fill(n, &mut current, &mut used, &mut out);
    out
}

fn rows_transitive(rows: &[u64]) -> bool {
    for x in 0..rows.len() {
        let mut mids = rows[x];
        while mids != 0 {
            let y = mids.trailing_zeros() as usize;
            if rows[y] & !rows[x] != 0 {
                return false;
            }
            mids &= mids - 1;
        }
    }
    true
}

/// `S∘R ⊆ R` on raw rows.
fn rows_comp(s: &[u64], r: &[u64]) -> bool {
    for x in 0..s.len() {
        let mut mids = s[x];
        while mids != 0 {
            let y = mids.trailing_zeros() as usize;
            if r[y] & !r[x] != 0 {
                return false;
            }
            mids &= mids - 1;
        }
    }
    true
}

fn relation_from_rows(n: usize, rows: &[u64]) -> BinaryRelation {
    let mut pairs = Vec::new();
    for x in 0..n {
        let mut bits = rows[x];
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            pairs.push((x, y));
            bits &= bits - 1;
        }
    }
    BinaryRelation::from_pairs(n, &pairs).expect("rows are in range")
}

/// Minimal relabeled form, the canonical representative of an iso class.
fn canonical_form(
    s: &BinaryRelation,
    r: &BinaryRelation,
    perms: &[Vec<usize>],
) -> (BinaryRelation, BinaryRelation) {
    perms
        .iter()
        .map(|p| {
            (
                s.relabel(p).expect("bijection"),
                r.relabel(p).expect("bijection"),
            )
        })
        .min()
        .expect("at least the identity")
}

fn automorphism_count(s: &BinaryRelation, r: &BinaryRelation, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .filter(|p| {
            s.relabel(p).expect("bijection") == *s && r.relabel(p).expect("bijection") == *r
        })
        .count() as u64
}

/// Cross-checks labeled and isomorphism-level counting: the labeled count
/// must equal the orbit sizes n!/|Aut| summed over classes.
fn assert_orbit_consistency(
    labeled: u64,
    classes: &[(BinaryRelation, BinaryRelation)],
    perms: &[Vec<usize>],
) {
    let total: u64 = classes
        .iter()
        .map(|(s, r)| perms.len() as u64 / automorphism_count(s, r, perms))
        .sum();
    assert_eq!(
        total, labeled,
        "orbit sizes must add up to the labeled count"
    );
}

/// Enumerates every pair-state assignment (for each unordered pair one of
/// `xSy`, `ySx`, `xRy`, `yRx`), filters the transitivity and composition
/// axioms, and deduplicates up to isomorphism.
pub fn oracle_catalan(n: usize) -> Result<OracleReport, OracleError> {
    if n > CATALAN_ORACLE_ENVELOPE {
        return Err(OracleError::Envelope {
            n,
            max: CATALAN_ORACLE_ENVELOPE,
        });
    }
    let pair_slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let digits = pair_slots.len();
    let total: u64 = 4u64.pow(digits as u32);

    let mut rejections: BTreeMap<String, u64> = BTreeMap::new();
    for key in ["ordS", "ordR", "comp"] {
        rejections.insert(key.to_string(), 0);
    }
    let mut labeled = 0u64;
    let mut survivors: Vec<(BinaryRelation, BinaryRelation)> = Vec::new();

    for candidate in 0..total {
        let mut s_rows = [0u64; CATALAN_ORACLE_ENVELOPE];
        let mut r_rows = [0u64; CATALAN_ORACLE_ENVELOPE];
        let mut code = candidate;
        for &(i, j) in &pair_slots {
            match code & 3 {
                0 => s_rows[i] |= 1 << j,
                1 => s_rows[j] |= 1 << i,
                2 => r_rows[i] |= 1 << j,
                _ => r_rows[j] |= 1 << i,
            }
            code >>= 2;
        }
        let s_rows = &s_rows[..n];
        let r_rows = &r_rows[..n];
        if !rows_transitive(s_rows) {
            *rejections.get_mut("ordS").unwrap() += 1;
            continue;
        }
        if !rows_transitive(r_rows) {
            *rejections.get_mut("ordR").unwrap() += 1;
            continue;
        }
        if !rows_comp(s_rows, r_rows) {
            *rejections.get_mut("comp").unwrap() += 1;
            continue;
        }
        labeled += 1;
        survivors.push((relation_from_rows(n, s_rows), relation_from_rows(n, r_rows)));
    }

    let perms = permutations_zero_based(n);
    let mut classes: Vec<(BinaryRelation, BinaryRelation)> = survivors
        .iter()
        .map(|(s, r)| canonical_form(s, r, &perms))
        .collect();
    classes.sort();
    classes.dedup();
    assert_orbit_consistency(labeled, &classes, &perms);

    Ok(OracleReport {
        n,
        profile: "catalan".into(),
        labeled_count: labeled,
        iso_class_count: classes.len() as u64,
        per_axiom_rejections: rejections,
    })
}

/// All strict-order isomorphism classes on `n` elements, canonical forms in
/// sorted order.
pub fn oracle_posets(n: usize) -> Result<Vec<BinaryRelation>, OracleError> {
    if n > POSET_ORACLE_ENVELOPE {
        return Err(OracleError::Envelope {
            n,
            max: POSET_ORACLE_ENVELOPE,
        });
    }
    let pair_slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let digits = pair_slots.len();
    let total: u64 = 3u64.pow(digits as u32);
    let perms = permutations_zero_based(n);

    let mut classes: Vec<BinaryRelation> = Vec::new();
    for candidate in 0..total {
        let mut rows = [0u64; POSET_ORACLE_ENVELOPE];
        let mut code = candidate;
        for &(i, j) in &pair_slots {
            match code % 3 {
                0 => {}
                1 => rows[i] |= 1 << j,
                _ => rows[j] |= 1 << i,
            }
            code /= 3;
        }
        let rows = &rows[..n];
        if !rows_transitive(rows) {
            continue;
        }
        let relation = relation_from_rows(n, rows);
        let canonical = perms
            .iter()
            .map(|p| relation.relabel(p).expect("bijection"))
            .min()
            .expect("identity exists");
        classes.push(canonical);
    }
    classes.sort();
    classes.dedup();
    Ok(classes)
}

/// Report-shaped wrapper around [`oracle_posets`].
pub fn oracle_posets_report(n: usize) -> Result<OracleReport, OracleError> {
    let classes = oracle_posets(n)?;
    let pair_slots = n * n.saturating_sub(1) / 2;
    let total: u64 = 3u64.pow(pair_slots as u32);
    // Recount labeled orders for the report.
    let perms = permutations_zero_based(n);
    let labeled: u64 = classes
        .iter()
        .map(|r| {
            perms.len() as u64
                / perms
                    .iter()
                    .filter(|p| r.relabel(p).expect("bijection") == *r)
                    .count() as u64
        })
        .sum();
    let mut rejections = BTreeMap::new();
    rejections.insert("transitivity".to_string(), total - labeled);
    Ok(OracleReport {
        n,
        profile: "posets".into(),
        labeled_count: labeled,
        iso_class_count: classes.len() as u64,
        per_axiom_rejections: rejections,
    })
}

/// Brute-force scan for the generalized profiles. Factorial pairs run over
/// raw pair states (the axioms filtered from scratch), unrestricted,
/// Grand-Dyck and Schröder pairs over pair states times diagonal masks, and
/// comp(h,k) pairs over the n! permutation representations.
pub fn oracle_generalized(n: usize, profile: Profile) -> Result<OracleReport, OracleError> {
    match profile {
        Profile::Factorial => oracle_factorial_states(n),
        Profile::CompHK { .. } => oracle_via_permutations(n, profile),
        Profile::Unrestricted | Profile::GrandDyck | Profile::Schroder => {
            oracle_with_diagonal(n, profile)
        }
    }
}

/// Axiom-level count of factorial pairs: one of four states per unordered
/// pair, transitivity of both components as the only filters. The class
/// count must come out as n!.
fn oracle_factorial_states(n: usize) -> Result<OracleReport, OracleError> {
    if n > CATALAN_ORACLE_ENVELOPE {
        return Err(OracleError::Envelope {
            n,
            max: CATALAN_ORACLE_ENVELOPE,
        });
    }
    let pair_slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let total: u64 = 4u64.pow(pair_slots.len() as u32);

    let mut rejections: BTreeMap<String, u64> = BTreeMap::new();
    for key in ["ordS", "ordR"] {
        rejections.insert(key.to_string(), 0);
    }
    let mut labeled = 0u64;
    let mut survivors: Vec<(BinaryRelation, BinaryRelation)> = Vec::new();
    for candidate in 0..total {
        let mut s_rows = [0u64; CATALAN_ORACLE_ENVELOPE];
        let mut r_rows = [0u64; CATALAN_ORACLE_ENVELOPE];
        let mut code = candidate;
        for &(i, j) in &pair_slots {
            match code & 3 {
                0 => s_rows[i] |= 1 << j,
                1 => s_rows[j] |= 1 << i,
                2 => r_rows[i] |= 1 << j,
                _ => r_rows[j] |= 1 << i,
            }
            code >>= 2;
        }
        let s_rows = &s_rows[..n];
        let r_rows = &r_rows[..n];
        if !rows_transitive(s_rows) {
            *rejections.get_mut("ordS").unwrap() += 1;
            continue;
        }
        if !rows_transitive(r_rows) {
            *rejections.get_mut("ordR").unwrap() += 1;
            continue;
        }
        labeled += 1;
        survivors.push((relation_from_rows(n, s_rows), relation_from_rows(n, r_rows)));
    }

    let perms = permutations_zero_based(n);
    let mut classes: Vec<(BinaryRelation, BinaryRelation)> = survivors
        .iter()
        .map(|(s, r)| canonical_form(s, r, &perms))
        .collect();
    classes.sort();
    classes.dedup();
    assert_orbit_consistency(labeled, &classes, &perms);

    Ok(OracleReport {
        n,
        profile: "factorial".into(),
        labeled_count: labeled,
        iso_class_count: classes.len() as u64,
        per_axiom_rejections: rejections,
    })
}

fn oracle_via_permutations(n: usize, profile: Profile) -> Result<OracleReport, OracleError> {
    if n > COMP_HK_ORACLE_ENVELOPE {
        return Err(OracleError::Envelope {
            n,
            max: COMP_HK_ORACLE_ENVELOPE,
        });
    }
    let mut rejections = BTreeMap::new();
    rejections.insert("compHK".to_string(), 0u64);
    let mut iso = 0u64;
    // Generate one-line words directly; each permutation is one iso class.
    let words = permutations_zero_based(n);
    for word in &words {
        let mut s_rows = vec![0u64; n];
        let mut r_rows = vec![0u64; n];
        let mut pos = vec![0usize; n];
        for (p, &v) in word.iter().enumerate() {
            pos[v] = p;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if pos[j] < pos[i] {
                    s_rows[i] |= 1 << j;
                } else {
                    r_rows[i] |= 1 << j;
                }
            }
        }
        let Profile::CompHK { h, k } = profile else {
            unreachable!("only comp(h,k) runs on the permutation route");
        };
        let s = relation_from_rows(n, &s_rows);
        let r = relation_from_rows(n, &r_rows);
        let lhs = s
            .compose_power(h)
            .compose(&r.compose_power(k))
            .expect("same ground set");
        let passes = lhs.is_subset_of(&r);
        if passes {
            iso += 1;
        } else {
            *rejections.get_mut("compHK").unwrap() += 1;
        }
    }
    let factorial: u64 = (1..=n as u64).product::<u64>().max(1);
    Ok(OracleReport {
        n,
        profile: profile.to_string(),
        // Permutation pairs are rigid, so each class has n! labelings.
        labeled_count: iso * factorial,
        iso_class_count: iso,
        per_axiom_rejections: rejections,
    })
}

fn oracle_with_diagonal(n: usize, profile: Profile) -> Result<OracleReport, OracleError> {
    if n > GENERALIZED_ORACLE_ENVELOPE {
        return Err(OracleError::Envelope {
            n,
            max: GENERALIZED_ORACLE_ENVELOPE,
        });
    }
    let pair_slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let digits = pair_slots.len();
    let total: u64 = 4u64.pow(digits as u32);
    let diagonal_masks: u64 = 1 << n;

    let extra_axiom = match profile {
        Profile::GrandDyck => Some("choose"),
        Profile::Schroder => Some("min"),
        _ => None,
    };
    let mut rejections: BTreeMap<String, u64> = BTreeMap::new();
    for key in ["sTrans", "ordR", "comp"] {
        rejections.insert(key.to_string(), 0);
    }
    if let Some(name) = extra_axiom {
        rejections.insert(name.to_string(), 0);
    }

    let mut labeled = 0u64;
    let mut survivors: Vec<(BinaryRelation, BinaryRelation)> = Vec::new();
    for candidate in 0..total {
        let mut base_s = [0u64; GENERALIZED_ORACLE_ENVELOPE];
        let mut r_rows = [0u64; GENERALIZED_ORACLE_ENVELOPE];
        let mut code = candidate;
        for &(i, j) in &pair_slots {
            match code & 3 {
                0 => base_s[i] |= 1 << j,
                1 => base_s[j] |= 1 << i,
                2 => r_rows[i] |= 1 << j,
                _ => r_rows[j] |= 1 << i,
            }
            code >>= 2;
        }
        for mask in 0..diagonal_masks {
            let mut s_rows = [0u64; GENERALIZED_ORACLE_ENVELOPE];
            s_rows[..n].copy_from_slice(&base_s[..n]);
            for x in 0..n {
                if mask >> x & 1 == 1 {
                    s_rows[x] |= 1 << x;
                }
            }
            let s_rows = &s_rows[..n];
            let r_rows = &r_rows[..n];
            if !rows_transitive(s_rows) {
                *rejections.get_mut("sTrans").unwrap() += 1;
                continue;
            }
            if !rows_transitive(r_rows) {
                *rejections.get_mut("ordR").unwrap() += 1;
                continue;
            }
            if !rows_comp(s_rows, r_rows) {
                *rejections.get_mut("comp").unwrap() += 1;
                continue;
            }
            let extra_ok = match profile {
                Profile::GrandDyck => (0..n).all(|x| {
                    (0..n).all(|y| {
                        x == y
                            || s_rows[x] >> y & 1 == 0
                            || (s_rows[x] >> x & 1) == (s_rows[y] >> y & 1)
                    })
                }),
                Profile::Schroder => (0..n).all(|x| {
                    s_rows[x] >> x & 1 == 0 || (0..n).all(|t| t == x || s_rows[t] >> x & 1 == 0)
                }),
                _ => true,
            };
            if !extra_ok {
                *rejections
                    .get_mut(extra_axiom.expect("profile has one"))
                    .unwrap() += 1;
                continue;
            }
            labeled += 1;
            survivors.push((relation_from_rows(n, s_rows), relation_from_rows(n, r_rows)));
        }
    }

    let perms = permutations_zero_based(n);
    let mut classes: Vec<(BinaryRelation, BinaryRelation)> = survivors
        .iter()
        .map(|(s, r)| canonical_form(s, r, &perms))
        .collect();
    classes.sort();
    classes.dedup();
    assert_orbit_consistency(labeled, &classes, &perms);

    Ok(OracleReport {
        n,
        profile: profile.to_string(),
        labeled_count: labeled,
        iso_class_count: classes.len() as u64,
        per_axiom_rejections: rejections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::find_forbidden;

    #[test]
    fn catalan_oracle_small_counts() {
        let expected = [1u64, 1, 2, 5, 14];
        for (n, &want) in expected.iter().enumerate() {
            let report = oracle_catalan(n).unwrap();
            assert_eq!(report.iso_class_count, want, "iso classes at n={n}");
        }
        assert!(oracle_catalan(6).is_err());
    }

    #[test]
    fn catalan_oracle_is_deterministic() {
        let a = oracle_catalan(4).unwrap();
        let b = oracle_catalan(4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn poset_oracle_counts() {
        assert_eq!(oracle_posets(2).unwrap().len(), 2);
        assert_eq!(oracle_posets(3).unwrap().len(), 5);
        assert_eq!(oracle_posets(4).unwrap().len(), 16);
        assert_eq!(oracle_posets(5).unwrap().len(), 63);
    }

    /// The forbidden-free classes are counted by Catalan numbers.
    #[test]
    fn forbidden_free_poset_counts() {
        let catalan = [1usize, 1, 2, 5, 14, 42];
        for (n, &want) in catalan.iter().enumerate() {
            let free = oracle_posets(n)
                .unwrap()
                .iter()
                .filter(|r| find_forbidden(r).unwrap().is_none())
                .count();
            assert_eq!(free, want, "forbidden-free classes at n={n}");
        }
        assert_eq!(oracle_posets(4).unwrap().len() - 14, 2);
    }

    /// The independent scans agree with the path/decoration enumerators.
    #[test]
    fn generalized_oracle_matches_enumerations() {
        use crate::general::{enumerate_granddyck, enumerate_schroder, enumerate_unrestricted};
        for n in 0..=3 {
            assert_eq!(
                oracle_generalized(n, Profile::Unrestricted)
                    .unwrap()
                    .iso_class_count as usize,
                enumerate_unrestricted(n).unwrap().len()
            );
            assert_eq!(
                oracle_generalized(n, Profile::GrandDyck)
                    .unwrap()
                    .iso_class_count as usize,
                enumerate_granddyck(n).unwrap().len()
            );
            assert_eq!(
                oracle_generalized(n, Profile::Schroder)
                    .unwrap()
                    .iso_class_count as usize,
                enumerate_schroder(n).unwrap().len()
            );
        }
    }

    #[test]
    fn generalized_oracle_counts() {
        let unrestricted = oracle_generalized(3, Profile::Unrestricted).unwrap();
        assert_eq!(unrestricted.iso_class_count, 40);

        let grand = oracle_generalized(2, Profile::GrandDyck).unwrap();
        assert_eq!(grand.iso_class_count, 6);

        let schroder = oracle_generalized(2, Profile::Schroder).unwrap();
        assert_eq!(schroder.iso_class_count, 6);
    }

    /// Axiom-level factorial counts come out as n! without going through
    /// the permutation representation.
    #[test]
    fn factorial_oracle_counts_by_state_scan() {
        for n in 0..=4usize {
            let report = oracle_generalized(n, Profile::Factorial).unwrap();
            let factorial: u64 = (1..=n as u64).product::<u64>().max(1);
            assert_eq!(report.iso_class_count, factorial, "classes at n={n}");
            assert_eq!(
                report.labeled_count,
                factorial * factorial,
                "labelings at n={n}"
            );
        }
    }

    #[test]
    fn comp_hk_oracle_matches_catalan() {
        for n in 0..=5 {
            let report = oracle_generalized(n, Profile::CompHK { h: 1, k: 1 }).unwrap();
            assert_eq!(
                report.iso_class_count,
                oracle_catalan(n).unwrap().iso_class_count
            );
        }
    }
}
