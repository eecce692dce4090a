//! Acceptance suite: every criterion pinned at its stated envelope and
//! tolerance, one test per criterion (criterion 5 is split into its three
//! clauses). Each test prints a `criterion N ...: PASS/FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them all.

use catalan_pairs::encodings::{
    dyck_tunnels, matching_to_pair, pair_to_dyck, pair_to_matching, pair_to_partition,
    pair_to_perm, pair_to_tree, partition_to_pair, perm_to_pair, tree_to_pair,
};
use catalan_pairs::general::{
    check_axiom_reformulations, count_avoiders, count_comp_hk, enumerate_factorial,
    enumerate_granddyck, enumerate_schroder, enumerate_unrestricted, pattern_set_h1, Profile,
};
use catalan_pairs::oracle::{oracle_catalan, oracle_posets};
use catalan_pairs::pairs::{self, check_comp_star, verify, CatalanPair};
use catalan_pairs::posets::{
    find_forbidden, r_is_connected, r_is_distributive, r_is_distributive_by_path,
    r_is_distributive_structural, r_is_lattice, r_is_lattice_by_path, reconstruct_s, s_forest,
    s_tree_code, sim_classes, ForbiddenKind, PosetError,
};
use catalan_pairs::relcore::BinaryRelation;
use num_bigint::BigUint;
use std::process::Command;
use std::time::Instant;

const CATALAN: [u64; 13] = [
    1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
];

#[test]
fn criterion_1_catalan_counts() {
    let start = Instant::now();
    for (n, &want) in CATALAN.iter().enumerate() {
        assert_eq!(
            pairs::enumerate(n).len() as u64,
            want,
            "enumerate length at n={n}"
        );
        assert_eq!(pairs::count(n), BigUint::from(want), "count at n={n}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "criterion 1 must finish in under 60 s, took {elapsed:?}"
    );
    println!("criterion 1 (catalan counts, n=0..12): PASS in {elapsed:.2?}");
}

#[test]
fn criterion_2_oracle_agreement() {
    let start = Instant::now();
    for n in 0..=5usize {
        let report = oracle_catalan(n).expect("within the oracle envelope");
        assert_eq!(
            report.iso_class_count, CATALAN[n],
            "oracle iso classes at n={n}"
        );
        assert_eq!(
            report.iso_class_count as usize,
            pairs::enumerate(n).len(),
            "oracle vs recursive enumeration at n={n}"
        );
        if n == 5 {
            assert_eq!(report.iso_class_count, 42);
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "criterion 2 must finish in under 120 s, took {elapsed:?}"
    );
    println!("criterion 2 (oracle agreement, n<=5): PASS in {elapsed:.2?}");
}

#[test]
fn criterion_3_codec_round_trips() {
    let mut failures = 0usize;
    let mut checked = 0usize;
    for n in 0..=8usize {
        for pair in pairs::enumerate(n) {
            let canonical = pair.canonicalize();

            let via_matching = matching_to_pair(&pair_to_matching(&pair));
            failures += usize::from(via_matching.is_isomorphic_to(&pair).unwrap().is_none());
            failures += usize::from(matching_to_pair(&pair_to_matching(&canonical)) != canonical);

            let via_dyck = dyck_tunnels(&pair_to_dyck(&pair));
            failures += usize::from(via_dyck.is_isomorphic_to(&pair).unwrap().is_none());
            failures += usize::from(dyck_tunnels(&pair_to_dyck(&canonical)) != canonical);

            let pi = pair_to_perm(&pair);
            let via_perm = perm_to_pair(&pi).expect("pairs encode to comp-passing permutations");
            failures += usize::from(via_perm.is_isomorphic_to(&pair).unwrap().is_none());
            failures += usize::from(pair_to_perm(&via_perm) != pi);
            failures += usize::from(perm_to_pair(&pair_to_perm(&via_perm)).unwrap() != via_perm);

            let via_tree = tree_to_pair(&pair_to_tree(&pair));
            failures += usize::from(via_tree.is_isomorphic_to(&pair).unwrap().is_none());
            failures += usize::from(tree_to_pair(&pair_to_tree(&canonical)) != canonical);

            let via_partition = partition_to_pair(&pair_to_partition(&pair));
            failures += usize::from(via_partition.is_isomorphic_to(&pair).unwrap().is_none());
            failures += usize::from(partition_to_pair(&pair_to_partition(&canonical)) != canonical);

            checked += 1;
        }
    }
    assert_eq!(failures, 0, "codec round-trip failures");
    println!("criterion 3 (five codecs round-trip, n<=8, {checked} pairs): PASS");
}

#[test]
fn criterion_4_uniqueness_and_forbidden_characterization() {
    for n in 0..=7usize {
        for pair in pairs::enumerate(n) {
            let s = reconstruct_s(pair.r()).expect("enumerated posets are forbidden-free");
            let rebuilt = CatalanPair::new(s, pair.r().clone()).expect("reconstruction verifies");
            assert!(
                rebuilt.is_isomorphic_to(&pair).unwrap().is_some(),
                "reconstruction must land in the same class at n={n}"
            );
        }
    }

    let classes = oracle_posets(4).expect("within the poset envelope");
    assert_eq!(classes.len(), 16, "poset classes on 4 elements");
    let mut free = 0usize;
    let mut rejected = Vec::new();
    for poset in &classes {
        match find_forbidden(poset).unwrap() {
            None => free += 1,
            Some(_) => rejected.push(poset.clone()),
        }
    }
    assert_eq!(free, 14, "forbidden-free classes on 4 elements");
    assert_eq!(rejected.len(), 2);
    for poset in &rejected {
        let err = reconstruct_s(poset).unwrap_err();
        let PosetError::Forbidden { witness } = err else {
            panic!("rejection must carry a witness");
        };
        // Each rejected class is one of the two patterns itself, so the
        // witness spans all four elements and reproduces its comparabilities.
        assert_eq!(witness.elements, [0, 1, 2, 3]);
        assert_eq!(witness.relation_pattern, poset.pairs());
        let expected_kind = if poset.len() == 2 {
            ForbiddenKind::TwoPlusTwo
        } else {
            ForbiddenKind::Z4
        };
        assert_eq!(witness.kind, expected_kind);
    }
    println!("criterion 4 (uniqueness n<=7; 14 of 16 posets forbidden-free): PASS");
}

#[test]
fn criterion_5a_connected_counts() {
    let expected: [u64; 9] = [1, 3, 9, 28, 90, 297, 1001, 3432, 11934];
    for (offset, &want) in expected.iter().enumerate() {
        let n = offset + 2;
        let got = pairs::enumerate(n)
            .iter()
            .filter(|p| r_is_connected(p))
            .count() as u64;
        assert_eq!(got, want, "connected count at n={n}");
        assert_eq!(
            got,
            CATALAN[n] - CATALAN[n - 1],
            "shifted-difference formula at n={n}"
        );
    }
    println!("criterion 5a (connected counts = C(n)-C(n-1), 2<=n<=10): PASS");
}

/// The distributive-count clause pins counts to the recurrence
/// d(n) = d(n-1) + d(n-3) seeded d(0)=d(1)=d(2)=1. The classifier is
/// validated three independent ways (order-theoretic sublattice scan, Dyck
/// path criterion, ordinal-sum structural form), and all three agree on
/// every pair; the counts they produce are the claimed sequence shifted by
/// one position. The claimed seeding would require two distributive
/// lattices on 3 elements, but the 3-chain is the only lattice there, so
/// this clause cannot hold as stated. It is asserted faithfully and left
/// red rather than weakened.
#[test]
fn criterion_5b_distributive_counts() {
    let mut actual = Vec::new();
    for n in 0..=12usize {
        let all = pairs::enumerate(n);
        if n <= 8 {
            for pair in &all {
                let flag = r_is_distributive(pair);
                assert_eq!(
                    flag,
                    r_is_distributive_by_path(pair),
                    "path evaluator at n={n}"
                );
                assert_eq!(
                    flag,
                    r_is_distributive_structural(pair),
                    "structural evaluator at n={n}"
                );
            }
        }
        actual.push(all.iter().filter(|p| r_is_distributive(p)).count() as u64);
    }
    let mut claimed: Vec<u64> = vec![1, 1, 1];
    for n in 3..=12 {
        claimed.push(claimed[n - 1] + claimed[n - 3]);
    }
    if actual == claimed {
        println!("criterion 5b (distributive counts vs recurrence, n<=12): PASS");
    } else {
        println!(
            "criterion 5b (distributive counts vs recurrence, n<=12): FAIL — \
             verified counts {actual:?} are the claimed {claimed:?} shifted by one; \
             at n=3 the 3-chain is the only distributive lattice (three independent \
             evaluators agree on every pair)"
        );
    }
    assert_eq!(
        actual, claimed,
        "distributive counts do not satisfy the claimed seeding; see the printed analysis"
    );
}

#[test]
fn criterion_5c_lattice_evaluators_agree() {
    // Third route: count peak-bounded DDUU-free Dyck words directly.
    fn path_route_count(n: usize) -> usize {
        let mut words = Vec::new();
        fn gen(remaining: usize, height: i64, word: &mut String, out: &mut Vec<String>) {
            if remaining == 0 {
                if height == 0 {
                    out.push(word.clone());
                }
                return;
            }
            if height < remaining as i64 {
                word.push('U');
                gen(remaining - 1, height + 1, word, out);
                word.pop();
            }
            if height > 0 {
                word.push('D');
                gen(remaining - 1, height - 1, word, out);
                word.pop();
            }
        }
        gen(2 * n, 0, &mut String::new(), &mut words);
        words
            .iter()
            .filter(|w| {
                w.is_empty() || (w.starts_with("UD") && w.ends_with("UD") && !w.contains("DDUU"))
            })
            .count()
    }

    for n in 0..=8usize {
        let mut count = 0usize;
        for pair in pairs::enumerate(n) {
            let structural = r_is_lattice(&pair);
            assert_eq!(
                structural,
                r_is_lattice_by_path(&pair),
                "lattice evaluators disagree at n={n}"
            );
            count += usize::from(structural);
        }
        assert_eq!(
            count,
            path_route_count(n),
            "path-route lattice count at n={n}"
        );
    }
    println!("criterion 5c (lattice evaluators agree, n<=8): PASS");
}

#[test]
fn criterion_6_s_forest_theory() {
    for n in 0..=8usize {
        for pair in pairs::enumerate(n) {
            // Construction panics if any element has two upper covers.
            let forest = s_forest(&pair);
            assert_eq!(forest.parents().len(), n);
        }
    }

    let expected_codes: [usize; 7] = [1, 1, 2, 4, 9, 20, 48];
    for (n, &want) in expected_codes.iter().enumerate() {
        let mut codes: Vec<String> = pairs::enumerate(n).iter().map(s_tree_code).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), want, "distinct S-tree codes at n={n}");
    }

    for n in 0..=6usize {
        let all = pairs::enumerate(n);
        let mut reps: Vec<(String, CatalanPair)> = Vec::new();
        for pair in &all {
            let code = s_tree_code(pair);
            if !reps.iter().any(|(c, _)| *c == code) {
                reps.push((code, pair.clone()));
            }
        }
        let total: usize = reps
            .iter()
            .map(|(_, rep)| {
                catalan_pairs::posets::pairs_with_s(rep.s())
                    .expect("S-posets of valid pairs are forests")
                    .len()
            })
            .sum();
        assert_eq!(total, all.len(), "sum over S-codes at n={n}");
    }
    println!("criterion 6 (S-forests n<=8; codes 1,1,2,4,9,20,48; partition by S): PASS");
}

#[test]
fn criterion_7_generalizations() {
    let start = Instant::now();
    for n in 0..=6usize {
        let factorial: u64 = (1..=n as u64).product::<u64>().max(1);
        let all = enumerate_factorial(n).unwrap();
        assert_eq!(all.len() as u64, factorial, "factorial pairs at n={n}");
        for gp in &all {
            let report =
                catalan_pairs::general::verify_generalized(gp.s(), gp.r(), Profile::Factorial)
                    .unwrap();
            assert!(report.valid, "factorial axioms at n={n}");
        }
    }
    // Same counts from the raw axiom-level state scan, no codec involved.
    for n in 0..=4usize {
        let factorial: u64 = (1..=n as u64).product::<u64>().max(1);
        let report = catalan_pairs::oracle::oracle_generalized(n, Profile::Factorial).unwrap();
        assert_eq!(
            report.iso_class_count, factorial,
            "state-scan factorial at n={n}"
        );
    }

    let schroder_values: [u64; 6] = [1, 2, 6, 22, 90, 394];
    let h2 = pattern_set_h1(2);
    for (offset, &want) in schroder_values.iter().enumerate() {
        let n = offset + 1;
        let axiom = count_comp_hk(n, 2, 1).unwrap();
        assert_eq!(axiom, want, "comp(2,1) count at n={n}");
        assert_eq!(
            axiom,
            count_avoiders(n, &h2).unwrap(),
            "avoider agreement at n={n}"
        );
    }

    let triple = pattern_set_h1(3);
    let triple_values: [u64; 7] = [1, 2, 6, 24, 117, 652, 3988];
    for (offset, &want) in triple_values.iter().enumerate() {
        let n = offset + 1;
        assert_eq!(
            count_avoiders(n, &triple).unwrap(),
            want,
            "triple avoiders at n={n}"
        );
    }

    for n in 0..=4usize {
        let unrestricted = enumerate_unrestricted(n).unwrap().len() as u64;
        assert_eq!(unrestricted, CATALAN[n] << n, "unrestricted at n={n}");

        let grand = enumerate_granddyck(n).unwrap().len() as u64;
        let binomial: u64 = (0..n as u64).fold(1, |acc, i| acc * (n as u64 + i + 1) / (i + 1));
        assert_eq!(grand, binomial, "grand-dyck at n={n}");

        let schroder = enumerate_schroder(n).unwrap().len() as u64;
        assert_eq!(schroder, [1, 2, 6, 22, 90][n], "schroder at n={n}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "criterion 7 must finish in under 300 s"
    );
    println!("criterion 7 (generalizations): PASS in {elapsed:.2?}");
}

#[test]
fn criterion_8_property_suites() {
    let mut results: Vec<(&str, bool)> = Vec::new();

    // S∘R⁻¹ ⊆ R⁻¹, R∘S ⊆ R∪S, and S∘R̄ ⊆ R̄ on every pair up to size 6.
    let mut first_properties = true;
    for n in 0..=6usize {
        for pair in pairs::enumerate(n) {
            let (s, r) = (pair.s(), pair.r());
            let r_inv = r.inverse();
            first_properties &= s.compose(&r_inv).unwrap().is_subset_of(&r_inv);
            first_properties &= r.compose(s).unwrap().is_subset_of(&r.union(s).unwrap());
            let r_sym = r.symmetrize();
            first_properties &= s.compose(&r_sym).unwrap().is_subset_of(&r_sym);
        }
    }
    results.push(("composition properties (n<=6)", first_properties));

    // comp* is equivalent to comp across all factorial pairs (where the
    // first four axioms hold by construction), sizes up to 5, and holds
    // outright on every enumerated Catalan pair up to size 6.
    let mut comp_star_equiv = true;
    for n in 0..=5usize {
        for gp in enumerate_factorial(n).unwrap() {
            let report = verify(gp.s(), gp.r()).unwrap();
            let star = check_comp_star(gp.s(), gp.r()).unwrap();
            comp_star_equiv &= report.comp.holds == star;
        }
    }
    for n in 0..=6usize {
        for pair in pairs::enumerate(n) {
            comp_star_equiv &= check_comp_star(pair.s(), pair.r()).unwrap();
        }
    }
    results.push((
        "comp* equivalence (factorial n<=5, catalan n<=6)",
        comp_star_equiv,
    ));

    // Similarity classes on all strict orders with up to 5 elements:
    // classmates are incomparable, the symmetric-neighborhood definition
    // matches the directed one, and relatedness is class-level.
    let mut sim_posets = true;
    for n in 0..=5usize {
        for poset in oracle_posets(n).unwrap() {
            let classes = sim_classes(&poset).unwrap();
            for class in classes.classes() {
                for &x in class {
                    for &y in class {
                        if x != y {
                            sim_posets &= !poset.contains(x, y);
                            sim_posets &= (0..n).all(|z| {
                                poset.contains(z, x) == poset.contains(z, y)
                                    && poset.contains(x, z) == poset.contains(y, z)
                            });
                        }
                    }
                }
            }
            // Relatedness between two classes is all-or-nothing.
            for a in classes.classes() {
                for b in classes.classes() {
                    if a == b {
                        continue;
                    }
                    let any = a.iter().any(|&x| b.iter().any(|&y| poset.contains(x, y)));
                    if any {
                        sim_posets &= a.iter().all(|&x| b.iter().all(|&y| poset.contains(x, y)));
                    }
                }
            }
        }
    }
    results.push(("similarity classes on strict orders (n<=5)", sim_posets));

    // On Catalan pairs up to size 6: S restricts to a total order on every
    // class, and S-related non-classmates have a comparability witness.
    let mut sim_pairs = true;
    for n in 0..=6usize {
        for pair in pairs::enumerate(n) {
            let classes = sim_classes(pair.r()).unwrap();
            let r_sym = pair.r().symmetrize();
            for class in classes.classes() {
                for &x in class {
                    for &y in class {
                        if x != y {
                            sim_pairs &= pair.s().contains(x, y) || pair.s().contains(y, x);
                        }
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if !pair.s().contains(x, y) {
                        continue;
                    }
                    let classmates = classes.class_of(x).contains(&y);
                    if !classmates {
                        sim_pairs &=
                            (0..n).any(|a| r_sym.contains(a, x) && pair.s().contains(a, y));
                    }
                }
            }
        }
    }
    results.push(("similarity classes vs S on pairs (n<=6)", sim_pairs));

    // Principal S-ideals of distinct maximal elements are disjoint, n<=6.
    let mut disjoint_ideals = true;
    for n in 0..=6usize {
        for pair in pairs::enumerate(n) {
            let maximal: Vec<usize> = (0..n).filter(|&x| pair.s().row(x) == 0).collect();
            for &x in &maximal {
                for &y in &maximal {
                    if x != y {
                        disjoint_ideals &=
                            (0..n).all(|t| !(pair.s().contains(t, x) && pair.s().contains(t, y)));
                    }
                }
            }
        }
    }
    results.push((
        "disjoint principal ideals at S-maxima (n<=6)",
        disjoint_ideals,
    ));

    // Monotone nesting of the comp(h,k) families as permutation sets, n<=5.
    let mut nesting = true;
    for n in 0..=5usize {
        for gp in enumerate_factorial(n).unwrap() {
            let mut passes = [[false; 4]; 4];
            for (hi, h) in (1..=3u32).enumerate() {
                for (ki, k) in (1..=3u32).enumerate() {
                    let report = catalan_pairs::general::verify_generalized(
                        gp.s(),
                        gp.r(),
                        Profile::CompHK { h, k },
                    )
                    .unwrap();
                    passes[hi][ki] = report.valid;
                }
            }
            for hi in 0..3 {
                for ki in 0..3 {
                    if hi + 1 < 3 {
                        nesting &= !passes[hi][ki] || passes[hi + 1][ki];
                    }
                    if ki + 1 < 3 {
                        nesting &= !passes[hi][ki] || passes[hi][ki + 1];
                    }
                }
            }
        }
    }
    results.push(("monotone nesting of comp(h,k) (n<=5)", nesting));

    // Equational reformulations of choose and min on every enumerated
    // unrestricted, Grand-Dyck and Schröder pair, n<=4.
    let mut reformulations = true;
    for n in 0..=4usize {
        for gp in enumerate_unrestricted(n).unwrap() {
            reformulations &= check_axiom_reformulations(&gp);
        }
        for gp in enumerate_granddyck(n).unwrap() {
            reformulations &= check_axiom_reformulations(&gp);
        }
        for gp in enumerate_schroder(n).unwrap() {
            reformulations &= check_axiom_reformulations(&gp);
        }
    }
    results.push((
        "choose/min equational reformulations (n<=4)",
        reformulations,
    ));

    // Restriction closure: every induced subpair verifies, n<=7.
    let mut hereditary = true;
    for n in 0..=7usize {
        for pair in pairs::enumerate(n) {
            for mask in 0u32..(1 << n) {
                let subset: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
                let s = pair.s().restrict(&subset).unwrap();
                let r = pair.r().restrict(&subset).unwrap();
                hereditary &= verify(&s, &r).unwrap().valid;
            }
        }
    }
    results.push(("restriction closure (n<=7)", hereditary));

    // Comparability edges of S and R partition the off-diagonal pairs, n<=6.
    let mut partition_edges = true;
    for n in 0..=6usize {
        for pair in pairs::enumerate(n) {
            let s_sym = pair.s().symmetrize();
            let r_sym = pair.r().symmetrize();
            partition_edges &= s_sym.intersect(&r_sym).unwrap().is_empty();
            partition_edges &= s_sym.union(&r_sym).unwrap() == BinaryRelation::full_off_diagonal(n);
        }
    }
    results.push((
        "comparability graphs partition K(X) (n<=6)",
        partition_edges,
    ));

    let mut all_ok = true;
    for (name, ok) in &results {
        all_ok &= ok;
        println!(
            "criterion 8 [{}]: {}",
            name,
            if *ok { "PASS" } else { "FAIL" }
        );
    }
    assert!(all_ok, "property suite violations; see printed lines");
    println!("criterion 8 (property suites): PASS");
}

#[test]
fn criterion_9_sequences_check_and_determinism() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_catalan"))
            .args(["sequences", "--check"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0), "sequences --check must pass");
    assert_eq!(
        first.stdout, second.stdout,
        "repeated runs must be byte-identical"
    );
    assert!(!first.stdout.is_empty());

    let enumerate = |n: &str| {
        Command::new(env!("CARGO_BIN_EXE_catalan"))
            .args(["enumerate", "--n", n, "--format", "json"])
            .output()
            .expect("binary runs")
    };
    assert_eq!(enumerate("6").stdout, enumerate("6").stdout);
    println!("criterion 9 (sequences --check, byte-identical reruns): PASS");
}
