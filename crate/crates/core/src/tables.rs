//! Reproduction of the reference tables for the `(3,5)` cable of the unknot:
//! correction terms of `L(15,1)`, `L(5,3)`, `L(3,5)` and the projections
//! `phi1`, `phi2` with `V_i(T_{3,5})`, for labels `0..=6`.

use crate::exactnum::Rational;
use crate::lens::d_lens;
use crate::spinc::{phi1_at, phi2_at, CableParams};
use crate::vseq::v_torus;

pub const LABELS: std::ops::RangeInclusive<u64> = 0..=6;

/// Published correction terms, one row per lens space.
pub const REFERENCE_D: [((u64, u64), [&str; 7]); 3] = [
    (
        (15, 1),
        ["7/2", "77/30", "53/30", "11/10", "17/30", "1/6", "-1/10"],
    ),
    ((5, 3), ["2/5", "0", "2/5", "-2/5", "-2/5", "2/5", "2/5"]),
    ((3, 5), ["1/6", "1/6", "-1/2", "1/6", "1/6", "-1/2", "1/6"]),
];

/// Published projection and V rows.
pub const REFERENCE_PHI1: [u64; 7] = [1, 2, 3, 4, 0, 1, 2];
pub const REFERENCE_PHI2: [u64; 7] = [2, 0, 1, 2, 0, 1, 2];
pub const REFERENCE_V: [u64; 7] = [2, 1, 1, 1, 0, 0, 0];

/// The one published entry this library does not reproduce:
/// `d(L(5,3), 6)` is listed as 2/5, but label 6 is label 1 and `d(L(5,3), 1) = 0`.
pub const KNOWN_DEVIATION: ((u64, u64), u64) = ((5, 3), 6);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCell {
    pub label: u64,
    pub computed: Rational,
    pub reference: Rational,
    pub known_deviation: bool,
}

impl DCell {
    pub fn matches(&self) -> bool {
        self.computed == self.reference
    }

    /// Matches, or is the documented deviation with the value it should have.
    pub fn accepted(&self) -> bool {
        if self.known_deviation {
            self.computed.is_zero()
        } else {
            self.matches()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DRow {
    pub p: u64,
    pub q: u64,
    pub cells: Vec<DCell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntRow {
    pub name: &'static str,
    pub computed: Vec<u64>,
    pub reference: Vec<u64>,
}

impl IntRow {
    pub fn matches(&self) -> bool {
        self.computed == self.reference
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TablesReport {
    pub correction_terms: Vec<DRow>,
    pub projections: Vec<IntRow>,
    /// Human-readable justification for the deviation.
    pub notes: Vec<String>,
}

impl TablesReport {
    pub fn all_accepted(&self) -> bool {
        self.correction_terms
            .iter()
            .flat_map(|r| &r.cells)
            .all(DCell::accepted)
            && self.projections.iter().all(IntRow::matches)
    }

    pub fn deviations(&self) -> impl Iterator<Item = (&DRow, &DCell)> {
        self.correction_terms
            .iter()
            .flat_map(|r| r.cells.iter().map(move |c| (r, c)))
            .filter(|(_, c)| !c.matches())
    }
}

pub fn run_tables() -> TablesReport {
    let correction_terms = REFERENCE_D
        .iter()
        .map(|&((p, q), row)| DRow {
            p,
            q,
            cells: LABELS
                .map(|i| DCell {
                    label: i,
                    computed: d_lens(p, q, i as i64).expect("coprime"),
                    reference: row[i as usize].parse().expect("fixture"),
                    known_deviation: KNOWN_DEVIATION == ((p, q), i),
                })
                .collect(),
        })
        .collect();

    let c = CableParams::new(3, 5).expect("coprime");
    let v = v_torus(3, 5).expect("T(3,5)");
    let projections = vec![
        IntRow {
            name: "phi1",
            computed: LABELS.map(|i| phi1_at(&c, i as i64)).collect(),
            reference: REFERENCE_PHI1.to_vec(),
        },
        IntRow {
            name: "phi2",
            computed: LABELS.map(|i| phi2_at(&c, i as i64)).collect(),
            reference: REFERENCE_PHI2.to_vec(),
        },
        IntRow {
            name: "V",
            computed: LABELS.map(|i| v.get(i)).collect(),
            reference: REFERENCE_V.to_vec(),
        },
    ];

    TablesReport {
        correction_terms,
        projections,
        notes: deviation_notes(&c),
    }
}

/// Cross-checks for the `d(L(5,3), 6)` entry, through the splitting
/// `d(L(15,1), i) - 2 V_i = d(L(5,3), phi1(i)) + d(L(3,5), phi2(i))`.
fn deviation_notes(c: &CableParams) -> Vec<String> {
    let d = |p, q, i: u64| d_lens(p, q, i as i64).expect("coprime");
    let at4 = (d(15, 1, 4), d(5, 3, phi1_at(c, 4)), d(3, 5, phi2_at(c, 4)));
    let at5 = (d(15, 1, 5), d(3, 5, phi2_at(c, 5)));
    let solved = &at5.0 - &at5.1;
    vec![
        format!(
            "i = 4: d(L(15,1),4) = {} = {} + {} fixes the labeling (phi1 = phi2 = 0, V_4 = 0)",
            at4.0, at4.1, at4.2
        ),
        format!(
            "label 6 of L(5,3) is label 1; at i = 5 (phi1 = phi2 = 1, V_5 = 0) the splitting gives \
             d(L(5,3),1) = d(L(15,1),5) - d(L(3,5),1) = {} - {} = {}",
            at5.0, at5.1, solved
        ),
        format!(
            "so d(L(5,3),6) = {}, not the listed 2/5; conjugation fixes label 1 (5+3-1-1 = 6 = 1 mod 5)",
            d(5, 3, 6)
        ),
    ]
}
