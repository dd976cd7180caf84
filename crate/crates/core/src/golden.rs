//! Reference sequences, indexed from `n = 0` (the empty poset counts once).
//!
//! All values here are reproduced by the oracle for `n <= 7`; entries past
//! that come from the formula engines.

use crate::oracle::{CountKind, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenSequence {
    pub name: &'static str,
    pub family: Option<Family>,
    pub kind: CountKind,
    /// OEIS entry and index shift, when the sequence is catalogued.
    pub oeis: Option<&'static str>,
    pub values: &'static [u64],
}

pub const GOLDEN: &[GoldenSequence] = &[
    GoldenSequence {
        name: "all posets, labeled",
        family: Some(Family::AllPosets),
        kind: CountKind::Labeled,
        oeis: Some("A001035"),
        values: &[1, 1, 3, 19, 219, 4231, 130023, 6129859],
    },
    GoldenSequence {
        name: "all posets, unlabeled",
        family: Some(Family::AllPosets),
        kind: CountKind::Unlabeled,
        oeis: Some("A000112"),
        values: &[1, 1, 2, 5, 16, 63, 318, 2045],
    },
    GoldenSequence {
        name: "graded posets, labeled",
        family: Some(Family::Graded),
        kind: CountKind::Labeled,
        oeis: None,
        values: &[1, 1, 3, 13, 111, 1381, 25623, 678133],
    },
    GoldenSequence {
        name: "graded semiorders, unlabeled",
        family: Some(Family::GradedSemiorder),
        kind: CountKind::Unlabeled,
        oeis: Some("A055588(n-1)"),
        values: &[1, 1, 2, 4, 9, 22, 56, 145],
    },
    GoldenSequence {
        name: "graded semiorders, labeled",
        family: Some(Family::GradedSemiorder),
        kind: CountKind::Labeled,
        oeis: None,
        values: &[1, 1, 3, 13, 99, 1021, 12723],
    },
    GoldenSequence {
        name: "graded semiorder seeds, unlabeled",
        family: Some(Family::GradedSemiorder),
        kind: CountKind::SeedsUnlabeled,
        oeis: Some("A000045(n-1), n >= 2"),
        values: &[1, 1, 1, 1, 2, 3, 5, 8],
    },
    GoldenSequence {
        name: "graded semiorder seeds, labeled",
        family: Some(Family::GradedSemiorder),
        kind: CountKind::SeedsLabeled,
        oeis: None,
        values: &[1, 1, 2, 6, 48, 360],
    },
    GoldenSequence {
        name: "graded interval orders, labeled",
        family: Some(Family::GradedInterval),
        kind: CountKind::Labeled,
        oeis: None,
        values: &[1, 1, 3, 13, 99, 1021, 13443],
    },
    GoldenSequence {
        name: "graded interval orders, unlabeled",
        family: Some(Family::GradedInterval),
        kind: CountKind::Unlabeled,
        oeis: None,
        values: &[1, 1, 2, 4, 9, 22, 57, 155, 442],
    },
    GoldenSequence {
        name: "graded interval order seeds, unlabeled",
        family: Some(Family::GradedInterval),
        kind: CountKind::SeedsUnlabeled,
        oeis: None,
        values: &[1, 1, 1, 1, 2, 3, 6, 12, 28, 69],
    },
    GoldenSequence {
        name: "interval orders, labeled",
        family: Some(Family::IntervalOrder),
        kind: CountKind::Labeled,
        oeis: Some("A079144"),
        values: &[1, 1, 3, 19, 207, 3451, 81663, 2602699],
    },
    GoldenSequence {
        name: "interval orders, unlabeled",
        family: Some(Family::IntervalOrder),
        kind: CountKind::Unlabeled,
        oeis: Some("A022493"),
        values: &[1, 1, 2, 5, 15, 53, 217, 1014],
    },
    GoldenSequence {
        name: "interval order seeds, unlabeled",
        family: Some(Family::IntervalOrder),
        kind: CountKind::SeedsUnlabeled,
        oeis: Some("A138265"),
        values: &[1, 1, 1, 2, 5, 16, 61, 271],
    },
    GoldenSequence {
        name: "semiorders, unlabeled",
        family: Some(Family::Semiorder),
        kind: CountKind::Unlabeled,
        oeis: Some("A000108"),
        values: &[1, 1, 2, 5, 14, 42, 132, 429],
    },
    GoldenSequence {
        name: "semiorders, labeled",
        family: Some(Family::Semiorder),
        kind: CountKind::Labeled,
        oeis: Some("A006531"),
        values: &[1, 1, 3, 19, 183, 2371, 38703, 763099],
    },
    GoldenSequence {
        name: "semiorder seeds, labeled",
        family: Some(Family::Semiorder),
        kind: CountKind::SeedsLabeled,
        oeis: Some("A001006(n-1) * n!"),
        values: &[1, 1, 2, 12, 96, 1080, 15120, 257040],
    },
    GoldenSequence {
        name: "ordered set partitions (labeled sprouts of chains)",
        family: None,
        kind: CountKind::Labeled,
        oeis: Some("A000670"),
        values: &[1, 1, 3, 13, 75, 541, 4683, 47293],
    },
    GoldenSequence {
        name: "compositions (unlabeled sprouts of chains)",
        family: None,
        kind: CountKind::Unlabeled,
        oeis: Some("A011782"),
        values: &[1, 1, 2, 4, 8, 16, 32, 64],
    },
];

pub fn find(family: Family, kind: CountKind) -> Option<&'static GoldenSequence> {
    GOLDEN.iter().find(|g| g.family == Some(family) && g.kind == kind)
}
