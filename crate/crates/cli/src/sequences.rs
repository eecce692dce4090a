//! The golden-sequence battery behind `catalan sequences --check`.
//!
//! Every expected value here was cross-validated against an independent
//! route (brute-force oracle, a second evaluator, or a closed formula)
//! before being frozen.

use catalan_pairs::general::{
    central_binomial, comp_hk_avoider_agreement, count_avoiders, count_comp_hk, count_unrestricted,
    enumerate_factorial, enumerate_granddyck, enumerate_schroder, enumerate_unrestricted,
    pattern_set_1k, pattern_set_h1, schroder_number, PatternConvention,
};
use catalan_pairs::oracle::oracle_catalan;
use catalan_pairs::pairs::{self, CatalanPair};
use catalan_pairs::posets::{
    r_is_connected, r_is_connected_by_matching, r_is_distributive, r_is_distributive_by_path,
    r_is_distributive_structural, r_is_lattice, r_is_lattice_by_path, s_tree_code,
};
use std::fmt::Write as _;

pub struct BatteryReport {
    pub text: String,
    pub all_ok: bool,
}

fn check(report: &mut BatteryReport, name: &str, got: &[String], want: &[&str]) {
    let want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
    if got == want.as_slice() {
        writeln!(report.text, "ok {name}: {}", got.join(",")).expect("string write");
    } else {
        report.all_ok = false;
        writeln!(
            report.text,
            "MISMATCH {name}: expected {} got {}",
            want.join(","),
            got.join(",")
        )
        .expect("string write");
    }
}

fn note(report: &mut BatteryReport, ok: bool, line: String) {
    report.all_ok &= ok;
    let tag = if ok { "ok" } else { "MISMATCH" };
    writeln!(report.text, "{tag} {line}").expect("string write");
}

fn counts<F: Fn(&CatalanPair) -> bool>(
    levels: &[Vec<CatalanPair>],
    range: std::ops::RangeInclusive<usize>,
    f: F,
) -> Vec<String> {
    range
        .map(|n| levels[n].iter().filter(|p| f(p)).count().to_string())
        .collect()
}

pub fn run_battery() -> BatteryReport {
    let mut report = BatteryReport {
        text: String::new(),
        all_ok: true,
    };
    let levels: Vec<Vec<CatalanPair>> = (0..=8).map(pairs::enumerate).collect();

    let enum_lens: Vec<String> = (0..=8).map(|n| levels[n].len().to_string()).collect();
    check(
        &mut report,
        "catalan-enumeration",
        &enum_lens,
        &["1", "1", "2", "5", "14", "42", "132", "429", "1430"],
    );

    let count_vals: Vec<String> = (0..=12).map(|n| pairs::count(n).to_string()).collect();
    check(
        &mut report,
        "catalan-count",
        &count_vals,
        &[
            "1", "1", "2", "5", "14", "42", "132", "429", "1430", "4862", "16796", "58786",
            "208012",
        ],
    );

    check(
        &mut report,
        "connected",
        &counts(&levels, 2..=8, r_is_connected),
        &["1", "3", "9", "28", "90", "297", "1001"],
    );
    let connected_agree = levels
        .iter()
        .flatten()
        .all(|p| r_is_connected(p) == r_is_connected_by_matching(p));
    note(
        &mut report,
        connected_agree,
        "connected-evaluators-agree (n<=8)".into(),
    );

    let lattice_agree = (0..=7)
        .flat_map(|n| &levels[n])
        .all(|p| r_is_lattice(p) == r_is_lattice_by_path(p));
    note(
        &mut report,
        lattice_agree,
        "lattice-evaluators-agree (n<=7)".into(),
    );
    check(
        &mut report,
        "lattice",
        &counts(&levels, 0..=7, r_is_lattice),
        &["1", "1", "1", "1", "2", "5", "13", "35"],
    );

    let distributive_agree = (0..=8).flat_map(|n| &levels[n]).all(|p| {
        let a = r_is_distributive(p);
        a == r_is_distributive_by_path(p) && a == r_is_distributive_structural(p)
    });
    note(
        &mut report,
        distributive_agree,
        "distributive-evaluators-agree (n<=8)".into(),
    );
    check(
        &mut report,
        "distributive",
        &counts(&levels, 0..=8, r_is_distributive),
        &["1", "1", "1", "1", "2", "3", "4", "6", "9"],
    );

    let code_counts: Vec<String> = (0..=6)
        .map(|n| {
            let mut codes: Vec<String> = levels[n].iter().map(s_tree_code).collect();
            codes.sort();
            codes.dedup();
            codes.len().to_string()
        })
        .collect();
    check(
        &mut report,
        "s-tree-codes",
        &code_counts,
        &["1", "1", "2", "4", "9", "20", "48"],
    );

    let factorial_lens: Vec<String> = (0..=5)
        .map(|n| enumerate_factorial(n).expect("envelope").len().to_string())
        .collect();
    check(
        &mut report,
        "factorial",
        &factorial_lens,
        &["1", "1", "2", "6", "24", "120"],
    );

    let comp11: Vec<String> = (0..=5)
        .map(|n| count_comp_hk(n, 1, 1).expect("envelope").to_string())
        .collect();
    check(
        &mut report,
        "comp-hk-1-1",
        &comp11,
        &["1", "1", "2", "5", "14", "42"],
    );

    let comp21: Vec<String> = (1..=6)
        .map(|n| count_comp_hk(n, 2, 1).expect("envelope").to_string())
        .collect();
    check(
        &mut report,
        "comp-hk-2-1",
        &comp21,
        &["1", "2", "6", "22", "90", "394"],
    );

    for (h, label) in [
        (2u32, "comp-hk-2-1-vs-avoiders"),
        (3, "comp-hk-3-1-vs-avoiders"),
    ] {
        let patterns = pattern_set_h1(h);
        let mut ok = true;
        let mut conventions = Vec::new();
        for n in 1..=6 {
            let agreement = comp_hk_avoider_agreement(n, h, 1, &patterns).expect("envelope");
            match agreement.matched {
                Some(PatternConvention::Literal) => conventions.push("literal"),
                Some(PatternConvention::ReverseComplement) => {
                    conventions.push("reverse-complement")
                }
                None => ok = false,
            }
        }
        conventions.sort();
        conventions.dedup();
        note(
            &mut report,
            ok,
            format!("{label} (n<=6, convention: {})", conventions.join("/")),
        );
    }

    let mut ok_1k = true;
    for k in 1..=3u32 {
        let patterns = pattern_set_1k(k);
        for n in 1..=6 {
            let agreement = comp_hk_avoider_agreement(n, 1, k, &patterns).expect("envelope");
            ok_1k &= agreement.matched.is_some();
        }
    }
    note(
        &mut report,
        ok_1k,
        "comp-hk-1-k-vs-avoiders (k<=3, n<=6)".into(),
    );

    let avoid312: Vec<String> = (1..=6)
        .map(|n| {
            count_avoiders(n, &pattern_set_1k(1))
                .expect("envelope")
                .to_string()
        })
        .collect();
    check(
        &mut report,
        "avoiders-312",
        &avoid312,
        &["1", "2", "5", "14", "42", "132"],
    );

    let triple = pattern_set_h1(3);
    let avoid_triple: Vec<String> = (1..=7)
        .map(|n| count_avoiders(n, &triple).expect("envelope").to_string())
        .collect();
    check(
        &mut report,
        "avoiders-53214-54213-54312",
        &avoid_triple,
        &["1", "2", "6", "24", "117", "652", "3988"],
    );

    let unrestricted: Vec<String> = (0..=5)
        .map(|n| {
            enumerate_unrestricted(n)
                .expect("envelope")
                .len()
                .to_string()
        })
        .collect();
    check(
        &mut report,
        "unrestricted",
        &unrestricted,
        &["1", "2", "8", "40", "224", "1344"],
    );
    let unrestricted_formula = (0..=5).all(|n| {
        enumerate_unrestricted(n)
            .expect("envelope")
            .len()
            .to_string()
            == count_unrestricted(n).to_string()
    });
    note(
        &mut report,
        unrestricted_formula,
        "unrestricted-matches-formula (n<=5)".into(),
    );

    let granddyck: Vec<String> = (0..=5)
        .map(|n| enumerate_granddyck(n).expect("envelope").len().to_string())
        .collect();
    check(
        &mut report,
        "grand-dyck",
        &granddyck,
        &["1", "2", "6", "20", "70", "252"],
    );
    let granddyck_formula = (0..=5).all(|n| {
        enumerate_granddyck(n).expect("envelope").len().to_string()
            == central_binomial(n).to_string()
    });
    note(
        &mut report,
        granddyck_formula,
        "grand-dyck-matches-binomial (n<=5)".into(),
    );

    let schroder: Vec<String> = (0..=5)
        .map(|n| enumerate_schroder(n).expect("envelope").len().to_string())
        .collect();
    check(
        &mut report,
        "schroder",
        &schroder,
        &["1", "2", "6", "22", "90", "394"],
    );
    let schroder_formula = (0..=5).all(|n| {
        enumerate_schroder(n).expect("envelope").len().to_string() == schroder_number(n).to_string()
    });
    note(
        &mut report,
        schroder_formula,
        "schroder-matches-recurrence (n<=5)".into(),
    );

    let oracle_counts: Vec<String> = (0..=4)
        .map(|n| {
            oracle_catalan(n)
                .expect("envelope")
                .iso_class_count
                .to_string()
        })
        .collect();
    check(
        &mut report,
        "oracle-catalan",
        &oracle_counts,
        &["1", "1", "2", "5", "14"],
    );

    report
}
