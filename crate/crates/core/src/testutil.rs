//! Shared fixtures for unit tests.

use crate::pairs::CatalanPair;
use crate::relcore::BinaryRelation;

pub(crate) fn rel(n: usize, pairs: &[(usize, usize)]) -> BinaryRelation {
    BinaryRelation::from_pairs(n, pairs).unwrap()
}

/// The worked seven-element example: a matching of seven arches a..g mapped
/// to indices 0..6 in first-appearance order. Its matching is
/// [(1,4),(2,3),(5,6),(7,14),(8,11),(9,10),(12,13)] and its Dyck word is
/// UUDDUDUUUDDUDD.
pub(crate) fn seven_arch_pair() -> CatalanPair {
    let s = rel(7, &[(1, 0), (5, 4), (5, 3), (4, 3), (6, 3)]);
    let r = rel(
        7,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (4, 6),
            (5, 6),
        ],
    );
    CatalanPair::new(s, r).unwrap()
}

/// A nine-element second component whose similarity classes are {0,1} and
/// {4,5}: the reconstruction worked example, with elements x1..x9 mapped to
/// 0..8.
pub(crate) fn nine_element_poset() -> BinaryRelation {
    rel(
        9,
        &[
            (0, 2),
            (0, 4),
            (0, 5),
            (0, 6),
            (0, 7),
            (1, 2),
            (1, 4),
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 5),
            (3, 6),
            (3, 7),
            (6, 7),
        ],
    )
}
