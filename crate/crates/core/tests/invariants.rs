//! Cross-module invariants exercised through the public API.

use catalan_pairs::encodings::{
    matching_to_dyck, pair_to_matching, pair_to_perm, pair_to_tree, perm_to_pair, Permutation,
};
use catalan_pairs::general::{enumerate_factorial, verify_generalized, Profile};
use catalan_pairs::pairs::{enumerate, CatalanPair};

/// The comp-passing factorial pairs are exactly the Catalan pairs, class by
/// class, not merely in equal number.
#[test]
fn comp_passing_factorial_pairs_are_the_catalan_classes() {
    for n in 0..=5usize {
        let mut from_perms: Vec<CatalanPair> = enumerate_factorial(n)
            .unwrap()
            .iter()
            .filter(|gp| {
                verify_generalized(gp.s(), gp.r(), Profile::CompHK { h: 1, k: 1 })
                    .unwrap()
                    .valid
            })
            .map(|gp| {
                CatalanPair::new(gp.s().clone(), gp.r().clone())
                    .expect("comp-passing factorial pairs are Catalan")
                    .canonicalize()
            })
            .collect();
        from_perms.sort();
        from_perms.dedup();

        let mut from_enumeration: Vec<CatalanPair> =
            enumerate(n).iter().map(CatalanPair::canonicalize).collect();
        from_enumeration.sort();

        assert_eq!(from_perms, from_enumeration, "class sets differ at n={n}");
    }
}

/// Composing codecs gives bijections between the carrier families: over a
/// full enumeration every composite is injective, so each family shows the
/// Catalan number of distinct objects.
#[test]
fn composed_codecs_are_bijections() {
    for n in 0..=6usize {
        let all = enumerate(n);
        let expected = all.len();

        let mut matchings: Vec<String> = all
            .iter()
            .map(|p| pair_to_matching(p).to_string())
            .collect();
        matchings.sort();
        matchings.dedup();
        assert_eq!(matchings.len(), expected, "matchings at n={n}");

        let mut words: Vec<String> = all
            .iter()
            .map(|p| matching_to_dyck(&pair_to_matching(p)).to_string())
            .collect();
        words.sort();
        words.dedup();
        assert_eq!(words.len(), expected, "paths at n={n}");

        let mut perms: Vec<String> = all.iter().map(|p| pair_to_perm(p).to_string()).collect();
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), expected, "permutations at n={n}");

        let mut trees: Vec<String> = all.iter().map(|p| pair_to_tree(p).to_string()).collect();
        trees.sort();
        trees.dedup();
        assert_eq!(trees.len(), expected, "trees at n={n}");

        // The matching-to-permutation composite reads the permutation off
        // the arch diagram: value order along left endpoints.
        for pair in &all {
            let pi = pair_to_perm(pair);
            let rebuilt = perm_to_pair(&pi).unwrap();
            assert_eq!(pair_to_matching(&rebuilt), pair_to_matching(pair));
        }
    }
}

/// Permutation text for every enumerated pair parses back to itself.
#[test]
fn permutation_text_round_trips_over_enumeration() {
    for n in 0..=6usize {
        for pair in enumerate(n) {
            let pi = pair_to_perm(&pair);
            let reparsed: Permutation = pi.to_string().parse().unwrap();
            assert_eq!(reparsed, pi);
        }
    }
}
