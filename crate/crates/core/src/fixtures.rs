//! Reference values: the published incidence tables for q = 2, 3, 4,
//! orbit sizes and union patterns, group orders, subgroup counts, and the
//! closed-form orbit sizes for larger q.
//!
//! Cells are keyed by (row label, column label). Column lists carry the
//! orbit sizes so the tables can be checked for internal consistency.

use std::collections::BTreeMap;

use crate::cubic::LineType;
use crate::group::GroupKind;
use crate::orbit::{ObjectKind, PairKind, ReferenceLine, SubscriptRule};

#[derive(Debug, Clone, Copy)]
pub struct Row {
    pub label: &'static str,
    pub size: usize,
    pub t: &'static [u32],
    pub b: &'static [u32],
}

#[derive(Debug, Clone, Copy)]
pub struct TableFixture {
    pub id: &'static str,
    pub q: usize,
    pub pair: PairKind,
    pub group: GroupKind,
    pub cols: &'static [(&'static str, usize)],
    pub rows: &'static [Row],
}

impl TableFixture {
    /// `(row, col) -> (t, b)` for every cell, zero cells included.
    pub fn cells(&self) -> BTreeMap<(&'static str, &'static str), (u32, u32)> {
        let mut out = BTreeMap::new();
        for r in self.rows {
            for (j, &(c, _)) in self.cols.iter().enumerate() {
                out.insert((r.label, c), (r.t[j], r.b[j]));
            }
        }
        out
    }
}

macro_rules! row {
    ($l:expr, $n:expr, [$($t:expr),*], [$($b:expr),*]) => {
        Row { label: $l, size: $n, t: &[$($t),*], b: &[$($b),*] }
    };
}

use GroupKind::{Critical, Full};
use PairKind::{LinePlane, LinePoint, PlanePoint};

const Q2_POINTS: &[(&str, usize)] = &[("C", 3), ("3_Gamma", 1), ("1_Gamma", 3), ("T", 6), ("0_Gamma", 2)];
const Q2_POINTS_FULL: &[(&str, usize)] = &[("C", 3), ("3_Gamma", 1), ("1_Gamma", 3), ("T,0_Gamma", 8)];
const Q2_PLANES: &[(&str, usize)] = &[("2_C", 6), ("3_C", 1), ("0_C", 2), ("Gamma", 3), ("1bar_C", 3)];
const Q2_PLANES_FULL: &[(&str, usize)] = &[("2_C", 6), ("3_C", 1), ("0_C", 2), ("Gamma,1bar_C", 6)];

const Q3_POINTS: &[(&str, usize)] = &[("RC", 12), ("C", 4), ("TO", 8), ("4_Gamma", 4), ("IC", 12)];
const Q3_POINTS_FULL: &[(&str, usize)] = &[("RC", 12), ("C", 4), ("TO", 8), ("4_Gamma,IC", 16)];
const Q3_PLANES: &[(&str, usize)] = &[("2_C", 12), ("3_C", 4), ("0_C", 8), ("Gamma", 4), ("1bar_C", 12)];
const Q3_PLANES_FULL: &[(&str, usize)] = &[("2_C", 12), ("3_C", 4), ("0_C", 8), ("Gamma,1bar_C", 16)];

const Q4_POINTS: &[(&str, usize)] = &[("C", 5), ("T", 20), ("3_Gamma", 10), ("1_Gamma", 30), ("0_Gamma", 20)];
const Q4_PLANES: &[(&str, usize)] = &[("Gamma", 5), ("2_C", 20), ("3_C", 10), ("1bar_C", 30), ("0_C", 20)];

static TABLES: &[TableFixture] = &[
    TableFixture {
        id: "q2-plane-point-critical",
        q: 2,
        pair: PlanePoint,
        group: Critical,
        cols: Q2_POINTS,
        rows: &[
            row!("2_C", 6, [2, 0, 1, 3, 1], [4, 0, 2, 3, 3]),
            row!("3_C", 1, [3, 1, 3, 0, 0], [1, 1, 1, 0, 0]),
            row!("0_C", 2, [0, 0, 3, 3, 1], [0, 0, 2, 1, 1]),
            row!("Gamma", 3, [1, 1, 1, 4, 0], [1, 3, 1, 2, 0]),
            row!("1bar_C", 3, [1, 1, 1, 2, 2], [1, 3, 1, 1, 3]),
        ],
    },
    TableFixture {
        id: "q2-plane-point-full",
        q: 2,
        pair: PlanePoint,
        group: Full,
        cols: Q2_POINTS_FULL,
        rows: &[
            row!("2_C", 6, [2, 0, 1, 4], [4, 0, 2, 3]),
            row!("3_C", 1, [3, 1, 3, 0], [1, 1, 1, 0]),
            row!("0_C", 2, [0, 0, 3, 4], [0, 0, 2, 1]),
            row!("Gamma,1bar_C", 6, [1, 1, 1, 4], [2, 6, 2, 3]),
        ],
    },
    TableFixture {
        id: "q2-line-point-critical",
        q: 2,
        pair: LinePoint,
        group: Critical,
        cols: Q2_POINTS,
        rows: &[
            row!("RC", 3, [2, 0, 1, 0, 0], [2, 0, 1, 0, 0]),
            row!("IA", 1, [0, 0, 3, 0, 0], [0, 0, 1, 0, 0]),
            row!("UGamma_2", 3, [1, 1, 1, 0, 0], [1, 3, 1, 0, 0]),
            row!("RA", 3, [0, 1, 0, 2, 0], [0, 3, 0, 1, 0]),
            row!("IC", 1, [0, 1, 0, 0, 2], [0, 1, 0, 0, 1]),
            row!("T", 3, [1, 0, 0, 2, 0], [1, 0, 0, 1, 0]),
            row!("UGamma_1", 3, [1, 0, 0, 2, 0], [1, 0, 0, 1, 0]),
            row!("UnGamma", 6, [1, 0, 0, 1, 1], [2, 0, 0, 1, 3]),
            row!("EGamma", 6, [0, 0, 1, 2, 0], [0, 0, 2, 2, 0]),
            row!("EnGamma", 6, [0, 0, 1, 1, 1], [0, 0, 2, 1, 3]),
        ],
    },
    TableFixture {
        id: "q2-line-point-full",
        q: 2,
        pair: LinePoint,
        group: Full,
        cols: Q2_POINTS_FULL,
        rows: &[
            row!("RC", 3, [2, 0, 1, 0], [2, 0, 1, 0]),
            row!("IA", 1, [0, 0, 3, 0], [0, 0, 1, 0]),
            row!("UGamma_2", 3, [1, 1, 1, 0], [1, 3, 1, 0]),
            row!("RA,IC", 4, [0, 1, 0, 2], [0, 4, 0, 1]),
            row!("T,UGamma_1,UnGamma", 12, [1, 0, 0, 2], [4, 0, 0, 3]),
            row!("EGamma,EnGamma", 12, [0, 0, 1, 2], [0, 0, 4, 3]),
        ],
    },
    TableFixture {
        id: "q2-line-plane-critical",
        q: 2,
        pair: LinePlane,
        group: Critical,
        cols: Q2_PLANES,
        rows: &[
            row!("RC", 3, [2, 1, 0, 0, 0], [1, 3, 0, 0, 0]),
            row!("IA", 1, [0, 1, 2, 0, 0], [0, 1, 1, 0, 0]),
            row!("UGamma_2", 3, [0, 1, 0, 1, 1], [0, 3, 0, 1, 1]),
            row!("RA", 3, [0, 0, 0, 2, 1], [0, 0, 0, 2, 1]),
            row!("IC", 1, [0, 0, 0, 0, 3], [0, 0, 0, 0, 1]),
            row!("T", 3, [2, 0, 0, 1, 0], [1, 0, 0, 1, 0]),
            row!("UGamma_1", 3, [2, 0, 0, 1, 0], [1, 0, 0, 1, 0]),
            row!("UnGamma", 6, [2, 0, 0, 0, 1], [2, 0, 0, 0, 2]),
            row!("EGamma", 6, [1, 0, 1, 1, 0], [1, 0, 3, 2, 0]),
            row!("EnGamma", 6, [1, 0, 1, 0, 1], [1, 0, 3, 0, 2]),
        ],
    },
    TableFixture {
        id: "q2-line-plane-full",
        q: 2,
        pair: LinePlane,
        group: Full,
        cols: Q2_PLANES_FULL,
        rows: &[
            row!("RC", 3, [2, 1, 0, 0], [1, 3, 0, 0]),
            row!("IA", 1, [0, 1, 2, 0], [0, 1, 1, 0]),
            row!("UGamma_2", 3, [0, 1, 0, 2], [0, 3, 0, 1]),
            row!("RA,IC", 4, [0, 0, 0, 3], [0, 0, 0, 2]),
            row!("T,UGamma_1,UnGamma", 12, [2, 0, 0, 1], [4, 0, 0, 2]),
            row!("EGamma,EnGamma", 12, [1, 0, 1, 1], [2, 0, 6, 2]),
        ],
    },
    TableFixture {
        id: "q3-plane-point-critical",
        q: 3,
        pair: PlanePoint,
        group: Critical,
        cols: Q3_POINTS,
        rows: &[
            row!("2_C", 12, [3, 2, 4, 1, 3], [3, 6, 6, 3, 3]),
            row!("3_C", 4, [6, 3, 0, 1, 3], [2, 3, 0, 1, 1]),
            row!("0_C", 8, [6, 0, 3, 1, 3], [4, 0, 3, 2, 2]),
            row!("Gamma", 4, [3, 1, 2, 4, 3], [1, 1, 1, 4, 1]),
            row!("1bar_C", 12, [3, 1, 2, 1, 6], [3, 3, 3, 3, 6]),
        ],
    },
    TableFixture {
        id: "q3-plane-point-full",
        q: 3,
        pair: PlanePoint,
        group: Full,
        cols: Q3_POINTS_FULL,
        rows: &[
            row!("2_C", 12, [3, 2, 4, 4], [3, 6, 6, 3]),
            row!("3_C", 4, [6, 3, 0, 4], [2, 3, 0, 1]),
            row!("0_C", 8, [6, 0, 3, 4], [4, 0, 3, 2]),
            row!("Gamma,1bar_C", 16, [3, 1, 2, 7], [4, 4, 4, 7]),
        ],
    },
    TableFixture {
        id: "q3-line-point-critical",
        q: 3,
        pair: LinePoint,
        group: Critical,
        cols: Q3_POINTS,
        rows: &[
            row!("RC", 6, [2, 2, 0, 0, 0], [1, 3, 0, 0, 0]),
            row!("EnGamma_2", 12, [2, 0, 2, 0, 0], [2, 0, 3, 0, 0]),
            row!("T", 4, [0, 1, 2, 1, 0], [0, 1, 1, 1, 0]),
            row!("UnGamma_2", 12, [0, 1, 2, 0, 1], [0, 3, 3, 0, 1]),
            row!("IC", 3, [0, 0, 0, 0, 4], [0, 0, 0, 0, 1]),
            row!("A", 1, [0, 0, 0, 4, 0], [0, 0, 0, 1, 0]),
            row!("EA_2", 4, [0, 0, 0, 1, 3], [0, 0, 0, 1, 1]),
            row!("UGamma", 12, [1, 1, 0, 1, 1], [1, 3, 0, 3, 1]),
            row!("UnGamma_1", 12, [1, 1, 0, 0, 2], [1, 3, 0, 0, 2]),
            row!("EA_1", 24, [1, 0, 1, 1, 1], [2, 0, 3, 6, 2]),
            row!("EnGamma_1", 24, [1, 0, 1, 0, 2], [2, 0, 3, 0, 4]),
            row!("EA_3", 4, [3, 0, 0, 1, 0], [1, 0, 0, 1, 0]),
            row!("EnGamma_3", 12, [3, 0, 0, 0, 1], [3, 0, 0, 0, 1]),
        ],
    },
    TableFixture {
        id: "q3-line-point-full",
        q: 3,
        pair: LinePoint,
        group: Full,
        cols: Q3_POINTS_FULL,
        rows: &[
            row!("RC", 6, [2, 2, 0, 0], [1, 3, 0, 0]),
            row!("EnGamma_2", 12, [2, 0, 2, 0], [2, 0, 3, 0]),
            row!("T,UnGamma_2", 16, [0, 1, 2, 1], [0, 4, 4, 1]),
            row!("IC,A,EA_2", 8, [0, 0, 0, 4], [0, 0, 0, 2]),
            row!("UGamma,UnGamma_1", 24, [1, 1, 0, 2], [2, 6, 0, 3]),
            row!("EA_1,EnGamma_1", 48, [1, 0, 1, 2], [4, 0, 6, 6]),
            row!("EA_3,EnGamma_3", 16, [3, 0, 0, 1], [4, 0, 0, 1]),
        ],
    },
    TableFixture {
        id: "q3-line-plane-critical",
        q: 3,
        pair: LinePlane,
        group: Critical,
        cols: Q3_PLANES,
        rows: &[
            row!("RC", 6, [2, 2, 0, 0, 0], [1, 3, 0, 0, 0]),
            row!("EnGamma_2", 12, [2, 0, 2, 0, 0], [2, 0, 3, 0, 0]),
            row!("T", 4, [3, 0, 0, 1, 0], [1, 0, 0, 1, 0]),
            row!("UnGamma_2", 12, [3, 0, 0, 0, 1], [3, 0, 0, 0, 1]),
            row!("IC", 3, [0, 0, 0, 0, 4], [0, 0, 0, 0, 1]),
            row!("A", 1, [0, 0, 0, 4, 0], [0, 0, 0, 1, 0]),
            row!("EA_2", 4, [0, 0, 0, 1, 3], [0, 0, 0, 1, 1]),
            row!("UGamma", 12, [1, 1, 0, 1, 1], [1, 3, 0, 3, 1]),
            row!("UnGamma_1", 12, [1, 1, 0, 0, 2], [1, 3, 0, 0, 2]),
            row!("EA_1", 24, [1, 0, 1, 1, 1], [2, 0, 3, 6, 2]),
            row!("EnGamma_1", 24, [1, 0, 1, 0, 2], [2, 0, 3, 0, 4]),
            row!("EA_3", 4, [0, 1, 2, 1, 0], [0, 1, 1, 1, 0]),
            row!("EnGamma_3", 12, [0, 1, 2, 0, 1], [0, 3, 3, 0, 1]),
        ],
    },
    TableFixture {
        id: "q3-line-plane-full",
        q: 3,
        pair: LinePlane,
        group: Full,
        cols: Q3_PLANES_FULL,
        rows: &[
            row!("RC", 6, [2, 2, 0, 0], [1, 3, 0, 0]),
            row!("EnGamma_2", 12, [2, 0, 2, 0], [2, 0, 3, 0]),
            row!("T,UnGamma_2", 16, [3, 0, 0, 1], [4, 0, 0, 1]),
            row!("IC,A,EA_2", 8, [0, 0, 0, 4], [0, 0, 0, 2]),
            row!("UGamma,UnGamma_1", 24, [1, 1, 0, 2], [2, 6, 0, 3]),
            row!("EA_1,EnGamma_1", 48, [1, 0, 1, 2], [4, 0, 6, 6]),
            row!("EA_3,EnGamma_3", 16, [0, 1, 2, 1], [0, 4, 4, 1]),
        ],
    },
    TableFixture {
        id: "q4-plane-point-critical",
        q: 4,
        pair: PlanePoint,
        group: Critical,
        cols: Q4_POINTS,
        rows: Q4_PLANE_POINT_ROWS,
    },
    TableFixture {
        id: "q4-plane-point-full",
        q: 4,
        pair: PlanePoint,
        group: Full,
        cols: Q4_POINTS,
        rows: Q4_PLANE_POINT_ROWS,
    },
    TableFixture {
        id: "q4-line-point-critical",
        q: 4,
        pair: LinePoint,
        group: Critical,
        cols: Q4_POINTS,
        rows: &[
            row!("RC", 10, [2, 0, 1, 0, 2], [4, 0, 1, 0, 1]),
            row!("RA", 10, [0, 2, 3, 0, 0], [0, 1, 3, 0, 0]),
            row!("UGamma_2", 15, [1, 0, 2, 2, 0], [3, 0, 3, 1, 0]),
            row!("UnGamma", 60, [1, 1, 0, 2, 1], [12, 3, 0, 4, 3]),
            row!("EGamma", 60, [0, 2, 1, 2, 0], [0, 6, 6, 4, 0]),
            row!("EnGamma_1", 20, [0, 1, 1, 0, 3], [0, 1, 2, 0, 3]),
            row!("EnGamma_4", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("EnGamma_5", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("T", 5, [1, 4, 0, 0, 0], [1, 1, 0, 0, 0]),
            row!("UGamma_1", 5, [1, 4, 0, 0, 0], [1, 1, 0, 0, 0]),
            row!("IC", 6, [0, 0, 0, 5, 0], [0, 0, 0, 1, 0]),
            row!("IA", 6, [0, 0, 0, 5, 0], [0, 0, 0, 1, 0]),
            row!("EnGamma_2", 20, [0, 1, 0, 3, 1], [0, 1, 0, 2, 1]),
            row!("EnGamma_3", 20, [0, 1, 0, 3, 1], [0, 1, 0, 2, 1]),
            row!("EnGamma_6", 30, [0, 2, 0, 1, 2], [0, 3, 0, 1, 3]),
            row!("EnGamma_7", 30, [0, 2, 0, 1, 2], [0, 3, 0, 1, 3]),
        ],
    },
    TableFixture {
        id: "q4-line-point-full",
        q: 4,
        pair: LinePoint,
        group: Full,
        cols: Q4_POINTS,
        rows: &[
            row!("RC", 10, [2, 0, 1, 0, 2], [4, 0, 1, 0, 1]),
            row!("RA", 10, [0, 2, 3, 0, 0], [0, 1, 3, 0, 0]),
            row!("UGamma_2", 15, [1, 0, 2, 2, 0], [3, 0, 3, 1, 0]),
            row!("UnGamma", 60, [1, 1, 0, 2, 1], [12, 3, 0, 4, 3]),
            row!("EGamma", 60, [0, 2, 1, 2, 0], [0, 6, 6, 4, 0]),
            row!("EnGamma_1", 20, [0, 1, 1, 0, 3], [0, 1, 2, 0, 3]),
            row!("EnGamma_4", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("EnGamma_5", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("T,UGamma_1", 10, [1, 4, 0, 0, 0], [2, 2, 0, 0, 0]),
            row!("IC,IA", 12, [0, 0, 0, 5, 0], [0, 0, 0, 2, 0]),
            row!("EnGamma_2,EnGamma_3", 40, [0, 1, 0, 3, 1], [0, 2, 0, 4, 2]),
            row!("EnGamma_6,EnGamma_7", 60, [0, 2, 0, 1, 2], [0, 6, 0, 2, 6]),
        ],
    },
    TableFixture {
        id: "q4-line-plane-critical",
        q: 4,
        pair: LinePlane,
        group: Critical,
        cols: Q4_PLANES,
        rows: &[
            row!("RC", 10, [0, 2, 3, 0, 0], [0, 1, 3, 0, 0]),
            row!("RA", 10, [2, 0, 1, 0, 2], [4, 0, 1, 0, 1]),
            row!("UGamma_2", 15, [1, 0, 2, 2, 0], [3, 0, 3, 1, 0]),
            row!("UnGamma", 60, [0, 2, 1, 2, 0], [0, 6, 6, 4, 0]),
            row!("EGamma", 60, [1, 1, 0, 2, 1], [12, 3, 0, 4, 3]),
            row!("EnGamma_1", 20, [0, 1, 1, 0, 3], [0, 1, 2, 0, 3]),
            row!("EnGamma_4", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("EnGamma_5", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("T", 5, [1, 4, 0, 0, 0], [1, 1, 0, 0, 0]),
            row!("UGamma_1", 5, [1, 4, 0, 0, 0], [1, 1, 0, 0, 0]),
            row!("IC", 6, [0, 0, 0, 5, 0], [0, 0, 0, 1, 0]),
            row!("IA", 6, [0, 0, 0, 5, 0], [0, 0, 0, 1, 0]),
            row!("EnGamma_2", 20, [0, 1, 0, 3, 1], [0, 1, 0, 2, 1]),
            row!("EnGamma_3", 20, [0, 1, 0, 3, 1], [0, 1, 0, 2, 1]),
            row!("EnGamma_6", 30, [0, 2, 0, 1, 2], [0, 3, 0, 1, 3]),
            row!("EnGamma_7", 30, [0, 2, 0, 1, 2], [0, 3, 0, 1, 3]),
        ],
    },
    TableFixture {
        id: "q4-line-plane-full",
        q: 4,
        pair: LinePlane,
        group: Full,
        cols: Q4_PLANES,
        rows: &[
            row!("RC", 10, [0, 2, 3, 0, 0], [0, 1, 3, 0, 0]),
            row!("RA", 10, [2, 0, 1, 0, 2], [4, 0, 1, 0, 1]),
            row!("UGamma_2", 15, [1, 0, 2, 2, 0], [3, 0, 3, 1, 0]),
            row!("UnGamma", 60, [0, 2, 1, 2, 0], [0, 6, 6, 4, 0]),
            row!("EGamma", 60, [1, 1, 0, 2, 1], [12, 3, 0, 4, 3]),
            row!("EnGamma_1", 20, [0, 1, 1, 0, 3], [0, 1, 2, 0, 3]),
            row!("EnGamma_4", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("EnGamma_5", 30, [0, 0, 1, 2, 2], [0, 0, 3, 2, 3]),
            row!("T,UGamma_1", 10, [1, 4, 0, 0, 0], [2, 2, 0, 0, 0]),
            row!("IC,IA", 12, [0, 0, 0, 5, 0], [0, 0, 0, 2, 0]),
            row!("EnGamma_2,EnGamma_3", 40, [0, 1, 0, 3, 1], [0, 2, 0, 4, 2]),
            row!("EnGamma_6,EnGamma_7", 60, [0, 2, 0, 1, 2], [0, 6, 0, 2, 6]),
        ],
    },
];

const Q4_PLANE_POINT_ROWS: &[Row] = &[
    row!("Gamma", 5, [1, 8, 6, 6, 0], [1, 2, 3, 1, 0]),
    row!("2_C", 20, [2, 7, 1, 6, 5], [8, 7, 2, 4, 5]),
    row!("3_C", 10, [3, 2, 4, 6, 6], [6, 1, 4, 2, 3]),
    row!("1bar_C", 30, [1, 4, 2, 10, 4], [6, 6, 6, 10, 6]),
    row!("0_C", 20, [0, 5, 3, 6, 7], [0, 5, 6, 4, 7]),
];

/// All reference tables, critical and full part of each.
pub fn tables() -> &'static [TableFixture] {
    TABLES
}

pub fn table(q: usize, pair: PairKind, group: GroupKind) -> Option<&'static TableFixture> {
    TABLES.iter().find(|t| t.q == q && t.pair == pair && t.group == group)
}

pub fn has_tables(q: usize) -> bool {
    matches!(q, 2..=4)
}

/// Expected orbit labels and sizes in display order.
pub fn expected_orbits(q: usize, kind: ObjectKind, group: GroupKind) -> Option<Vec<(String, usize)>> {
    let own = |xs: &[(&str, usize)]| xs.iter().map(|&(l, n)| (l.to_string(), n)).collect::<Vec<_>>();
    if !has_tables(q) {
        return match group {
            GroupKind::Critical if kind != ObjectKind::Lines || line_sizes_known(q) => {
                Some(closed_form_orbits(q, kind))
            }
            GroupKind::Critical => None,
            _ => None,
        };
    }
    let lists: &[(&str, usize)] = match (q, kind, group) {
        (2, ObjectKind::Planes, Critical) => &[("Gamma", 3), ("2_C", 6), ("3_C", 1), ("1bar_C", 3), ("0_C", 2)],
        (2, ObjectKind::Planes, Full) => &[("Gamma,1bar_C", 6), ("2_C", 6), ("3_C", 1), ("0_C", 2)],
        (2, ObjectKind::Points, Critical) => &[("C", 3), ("T", 6), ("3_Gamma", 1), ("1_Gamma", 3), ("0_Gamma", 2)],
        (2, ObjectKind::Points, Full) => &[("C", 3), ("T,0_Gamma", 8), ("3_Gamma", 1), ("1_Gamma", 3)],
        (2, ObjectKind::Lines, Critical) => &[
            ("RC", 3),
            ("RA", 3),
            ("T", 3),
            ("IC", 1),
            ("IA", 1),
            ("UGamma_1", 3),
            ("UGamma_2", 3),
            ("UnGamma", 6),
            ("EGamma", 6),
            ("EnGamma", 6),
        ],
        (2, ObjectKind::Lines, Full) => &[
            ("RC", 3),
            ("IA", 1),
            ("UGamma_2", 3),
            ("RA,IC", 4),
            ("T,UGamma_1,UnGamma", 12),
            ("EGamma,EnGamma", 12),
        ],
        (3, ObjectKind::Planes, Critical) => &[("Gamma", 4), ("2_C", 12), ("3_C", 4), ("1bar_C", 12), ("0_C", 8)],
        (3, ObjectKind::Planes, Full) => &[("Gamma,1bar_C", 16), ("2_C", 12), ("3_C", 4), ("0_C", 8)],
        (3, ObjectKind::Points, Critical) => &[("C", 4), ("4_Gamma", 4), ("TO", 8), ("RC", 12), ("IC", 12)],
        (3, ObjectKind::Points, Full) => &[("C", 4), ("4_Gamma,IC", 16), ("TO", 8), ("RC", 12)],
        (3, ObjectKind::Lines, Critical) => &[
            ("RC", 6),
            ("T", 4),
            ("IC", 3),
            ("UGamma", 12),
            ("UnGamma_1", 12),
            ("UnGamma_2", 12),
            ("A", 1),
            ("EA_1", 24),
            ("EA_2", 4),
            ("EA_3", 4),
            ("EnGamma_1", 24),
            ("EnGamma_2", 12),
            ("EnGamma_3", 12),
        ],
        (3, ObjectKind::Lines, Full) => &[
            ("RC", 6),
            ("EnGamma_2", 12),
            ("T,UnGamma_2", 16),
            ("IC,A,EA_2", 8),
            ("UGamma,UnGamma_1", 24),
            ("EA_1,EnGamma_1", 48),
            ("EA_3,EnGamma_3", 16),
        ],
        (4, ObjectKind::Planes, _) => &[("Gamma", 5), ("2_C", 20), ("3_C", 10), ("1bar_C", 30), ("0_C", 20)],
        (4, ObjectKind::Points, _) => &[("C", 5), ("T", 20), ("3_Gamma", 10), ("1_Gamma", 30), ("0_Gamma", 20)],
        (4, ObjectKind::Lines, Critical) => &[
            ("RC", 10),
            ("RA", 10),
            ("T", 5),
            ("IC", 6),
            ("IA", 6),
            ("UGamma_1", 5),
            ("UGamma_2", 15),
            ("UnGamma", 60),
            ("EGamma", 60),
            ("EnGamma_1", 20),
            ("EnGamma_2", 20),
            ("EnGamma_3", 20),
            ("EnGamma_4", 30),
            ("EnGamma_5", 30),
            ("EnGamma_6", 30),
            ("EnGamma_7", 30),
        ],
        (4, ObjectKind::Lines, Full) => &[
            ("RC", 10),
            ("RA", 10),
            ("UGamma_2", 15),
            ("UnGamma", 60),
            ("EGamma", 60),
            ("EnGamma_1", 20),
            ("EnGamma_4", 30),
            ("EnGamma_5", 30),
            ("T,UGamma_1", 10),
            ("IC,IA", 12),
            ("EnGamma_2,EnGamma_3", 40),
            ("EnGamma_6,EnGamma_7", 60),
        ],
        _ => return None,
    };
    Some(own(lists))
}

/// Full orbits as unions of critical orbits, by display index (1-based).
pub fn expected_merges(q: usize, kind: ObjectKind) -> Option<Vec<Vec<usize>>> {
    let m: &[&[usize]] = match (q, kind) {
        (2 | 3, ObjectKind::Planes) => &[&[1, 4], &[2], &[3], &[5]],
        (2, ObjectKind::Points) => &[&[1], &[2, 5], &[3], &[4]],
        (3, ObjectKind::Points) => &[&[1], &[2, 5], &[3], &[4]],
        (2, ObjectKind::Lines) => &[&[1], &[5], &[7], &[2, 4], &[3, 6, 8], &[9, 10]],
        (3, ObjectKind::Lines) => &[&[1], &[12], &[2, 6], &[3, 7, 9], &[4, 5], &[8, 11], &[10, 13]],
        (4, ObjectKind::Planes | ObjectKind::Points) => &[&[1], &[2], &[3], &[4], &[5]],
        (4, ObjectKind::Lines) => &[
            &[1],
            &[2],
            &[7],
            &[8],
            &[9],
            &[10],
            &[13],
            &[14],
            &[3, 6],
            &[4, 5],
            &[11, 12],
            &[15, 16],
        ],
        _ => return None,
    };
    Some(m.iter().map(|x| x.to_vec()).collect())
}

pub fn expected_group_order(q: usize, kind: GroupKind) -> Option<usize> {
    match kind {
        GroupKind::Critical => Some(q * q * q - q),
        GroupKind::Full => match q {
            2 => Some(48),
            3 => Some(192),
            4 => Some(120),
            _ => None,
        },
        GroupKind::Subgroup => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusFixture {
    pub subgroups: usize,
    /// Conjugacy class sizes, largest first.
    pub class_sizes: Vec<usize>,
    pub critical: usize,
}

pub fn expected_census(q: usize) -> Option<CensusFixture> {
    let (subgroups, class_sizes) = match q {
        2 => (8, vec![4, 4]),
        3 => (24, vec![8, 8, 4, 4]),
        4 => (1, vec![1]),
        _ => return None,
    };
    Some(CensusFixture { subgroups, class_sizes, critical: 1 })
}

fn xi_of(q: usize) -> i64 {
    match q % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Line-orbit sizes have closed forms for q = 2^n >= 8 and q = 3^n >= 9.
pub fn line_sizes_known(q: usize) -> bool {
    let mut n = q;
    while n.is_multiple_of(3) {
        n /= 3;
    }
    (q.is_power_of_two() && q >= 8) || (n == 1 && q >= 9)
}

/// Number of line orbits under the critical group for q >= 5.
pub fn line_orbit_count(q: usize) -> usize {
    (2 * q as i64 + 7 + xi_of(q)) as usize
}

/// Orbit sizes under the critical group from the closed formulas valid
/// for q >= 5. Line sizes assume [`line_sizes_known`].
pub fn closed_form_orbits(q: usize, kind: ObjectKind) -> Vec<(String, usize)> {
    let c = q * q * q - q;
    let xi = xi_of(q);
    let v = |xs: Vec<(&str, usize)>| xs.into_iter().map(|(l, n)| (l.to_string(), n)).collect::<Vec<_>>();
    match kind {
        ObjectKind::Planes => v(vec![
            ("Gamma", q + 1),
            ("2_C", q * q + q),
            ("3_C", c / 6),
            ("1bar_C", c / 2),
            ("0_C", c / 3),
        ]),
        ObjectKind::Points if xi != 0 => v(vec![
            ("C", q + 1),
            ("T", q * q + q),
            ("3_Gamma", c / 6),
            ("1_Gamma", c / 2),
            ("0_Gamma", c / 3),
        ]),
        ObjectKind::Points => {
            let mut out = v(vec![("C", q + 1)]);
            out.push((format!("{}_Gamma", q + 1), q + 1));
            out.extend(v(vec![("TO", q * q - 1), ("RC", c / 2), ("IC", c / 2)]));
            out
        }
        ObjectKind::Lines => closed_form_line_orbits(q),
    }
}

fn closed_form_line_orbits(q: usize) -> Vec<(String, usize)> {
    let c = q * q * q - q;
    let xi = xi_of(q);
    let mut out: Vec<(String, usize)> = Vec::new();
    let mut push = |l: String, n: usize| out.push((l, n));
    if xi != 0 {
        push("RC".into(), (q * q + q) / 2);
        push("RA".into(), (q * q + q) / 2);
        push("T".into(), q + 1);
        push("IC".into(), (q * q - q) / 2);
        push("IA".into(), (q * q - q) / 2);
        push("UGamma_1".into(), q + 1);
        push("UGamma_2".into(), q * q - 1);
        push("UnGamma".into(), c);
        push("EGamma".into(), c);
        let k_max = (2 + xi) as usize;
        for k in 1..=k_max {
            push(format!("EnGamma_{k}"), c / k_max);
        }
        for j in 1..=2 * q - 4 {
            push(format!("EnGamma_{}", k_max + j), c / 2);
        }
    } else {
        push("RC".into(), (q * q + q) / 2);
        push("T".into(), q + 1);
        push("IC".into(), (q * q - q) / 2);
        push("UGamma".into(), q * q + q);
        push("UnGamma_1".into(), c / 2);
        push("UnGamma_2".into(), c / 2);
        push("A".into(), 1);
        push("EA_1".into(), c);
        push("EA_2".into(), (q * q - 1) / 2);
        push("EA_3".into(), (q * q - 1) / 2);
        let mut k = 0;
        for _ in 0..q / 3 {
            k += 1;
            push(format!("EnGamma_{k}"), c);
        }
        for _ in 0..q - 1 {
            k += 1;
            push(format!("EnGamma_{k}"), c / 2);
        }
        for _ in 0..(2 * q - 6) / 3 {
            k += 1;
            push(format!("EnGamma_{k}"), c / 4);
        }
    }
    out
}

/// Sizes of the line classes (unions of orbits of one type).
pub fn line_class_sizes(q: usize) -> Vec<(LineType, usize)> {
    use LineType::*;
    let c = q * q * q - q;
    let mut v = vec![
        (RC, (q * q + q) / 2),
        (T, q + 1),
        (IC, (q * q - q) / 2),
        (UGamma, q * q + q),
        (UnGamma, c),
        (EnGamma, (q * q - q) * (q * q - 1)),
    ];
    if xi_of(q) != 0 {
        v.extend([(RA, (q * q + q) / 2), (IA, (q * q - q) / 2), (EGamma, c)]);
    } else {
        v.extend([(A, 1), (EA, (q + 1) * (q * q - 1))]);
    }
    v
}

/// How split line types get their subscripts for a given q.
pub fn subscript_rule(q: usize) -> SubscriptRule {
    if has_tables(q) {
        return SubscriptRule::Reference(reference_lines(q));
    }
    if !line_sizes_known(q) {
        return SubscriptRule::Order;
    }
    let mut sizes: BTreeMap<LineType, Vec<usize>> = BTreeMap::new();
    for (label, n) in closed_form_line_orbits(q) {
        if let Some(t) = crate::orbit::line_type_of_label(&label) {
            sizes.entry(t).or_default().push(n);
        }
    }
    SubscriptRule::Sizes(sizes)
}

fn reference_lines(q: usize) -> Vec<ReferenceLine> {
    let lp = table(q, LinePoint, Critical).expect("line-point table");
    let lpl = table(q, LinePlane, Critical).expect("line-plane table");
    lp.rows
        .iter()
        .map(|r| {
            let profile = |t: &TableFixture, row: &Row| -> BTreeMap<String, u32> {
                t.cols
                    .iter()
                    .zip(row.t)
                    .filter(|(_, &v)| v > 0)
                    .map(|(&(c, _), &v)| (c.to_string(), v))
                    .collect()
            };
            let other = lpl.rows.iter().find(|x| x.label == r.label).expect("row in both tables");
            ReferenceLine {
                label: r.label.to_string(),
                size: r.size,
                point_profile: profile(lp, r),
                plane_profile: profile(lpl, other),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(q: usize) -> usize {
        q * q * q + q * q + q + 1
    }

    fn beta(q: usize) -> usize {
        (q * q + 1) * (q * q + q + 1)
    }

    #[test]
    fn eighteen_table_parts() {
        assert_eq!(tables().len(), 18);
        for q in 2..=4 {
            for pair in PairKind::ALL {
                for g in [Critical, Full] {
                    assert!(table(q, pair, g).is_some());
                }
            }
        }
    }

    #[test]
    fn tables_are_internally_consistent() {
        for t in tables() {
            let q = t.q as u32;
            let rows_total: usize = t.rows.iter().map(|r| r.size).sum();
            let cols_total: usize = t.cols.iter().map(|c| c.1).sum();
            let n_rows = if t.pair == PlanePoint { theta(t.q) } else { beta(t.q) };
            let n_cols = theta(t.q);
            assert_eq!(rows_total, n_rows, "{}", t.id);
            assert_eq!(cols_total, n_cols, "{}", t.id);
            let row_sum = if t.pair == PlanePoint { q * q + q + 1 } else { q + 1 };
            for r in t.rows {
                assert_eq!(r.t.len(), t.cols.len());
                assert_eq!(r.t.iter().sum::<u32>(), row_sum, "{} {}", t.id, r.label);
                for (j, &(_, n)) in t.cols.iter().enumerate() {
                    assert_eq!(r.t[j] as usize * r.size, r.b[j] as usize * n, "{} {}", t.id, r.label);
                }
            }
            for j in 0..t.cols.len() {
                let s: u32 = t.rows.iter().map(|r| r.b[j]).sum();
                assert_eq!(s, q * q + q + 1, "{} column {}", t.id, t.cols[j].0);
            }
        }
    }

    #[test]
    fn orbit_lists_match_tables() {
        for q in 2..=4 {
            for g in [Critical, Full] {
                let lines = expected_orbits(q, ObjectKind::Lines, g).unwrap();
                let t = table(q, LinePoint, g).unwrap();
                let mut a: Vec<(String, usize)> = t.rows.iter().map(|r| (r.label.to_string(), r.size)).collect();
                let mut b = lines.clone();
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn merges_cover_critical_orbits() {
        for q in 2..=4 {
            for kind in [ObjectKind::Planes, ObjectKind::Points, ObjectKind::Lines] {
                let crit = expected_orbits(q, kind, Critical).unwrap();
                let full = expected_orbits(q, kind, Full).unwrap();
                let merges = expected_merges(q, kind).unwrap();
                assert_eq!(merges.len(), full.len());
                for (m, (label, size)) in merges.iter().zip(&full) {
                    let joined: Vec<&str> = m.iter().map(|&i| crit[i - 1].0.as_str()).collect();
                    assert_eq!(&joined.join(","), label);
                    assert_eq!(m.iter().map(|&i| crit[i - 1].1).sum::<usize>(), *size);
                }
            }
        }
    }

    #[test]
    fn closed_forms_sum_to_totals() {
        for q in [5, 7, 8, 9] {
            for kind in [ObjectKind::Planes, ObjectKind::Points] {
                let s: usize = closed_form_orbits(q, kind).iter().map(|x| x.1).sum();
                assert_eq!(s, theta(q));
            }
            let s: usize = line_class_sizes(q).iter().map(|x| x.1).sum();
            assert_eq!(s, beta(q));
        }
        for q in [8, 9, 27, 32] {
            let lines = closed_form_orbits(q, ObjectKind::Lines);
            assert_eq!(lines.iter().map(|x| x.1).sum::<usize>(), beta(q));
            assert_eq!(lines.len(), line_orbit_count(q));
        }
        assert_eq!(line_orbit_count(5), 16);
        assert_eq!(line_orbit_count(8), 22);
        assert_eq!(line_orbit_count(9), 25);
        assert!(!line_sizes_known(5) && !line_sizes_known(4) && !line_sizes_known(3));
        assert!(line_sizes_known(8) && line_sizes_known(9));
    }

    #[test]
    fn reference_profiles_exist_for_split_types() {
        let SubscriptRule::Reference(rows) = subscript_rule(4) else { panic!() };
        assert_eq!(rows.len(), 16);
        let r = rows.iter().find(|r| r.label == "EnGamma_1").unwrap();
        assert_eq!(r.size, 20);
        assert_eq!(r.point_profile.values().sum::<u32>(), 5);
    }
}
