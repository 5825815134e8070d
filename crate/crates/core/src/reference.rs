//! Published per-class values for the 28 four-qubit hypergraph classes.
//!
//! Rows 1–11 are the rank-4 classes (table "I", structure table "II"), rows
//! 12–28 the rank-3 classes (tables "III" and "IV"). Entropy columns use
//! symbolic constants; see [`entropy_constant`].

use crate::geoment::{Partition, Reality};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub no: u8,
    pub m: u32,
    /// `E_g` as printed, 4 decimals.
    pub ge: f64,
    /// 2|2 cuts 12|34, 13|24, 14|23.
    pub be2: [char; 3],
    /// 1|3 cuts 1|234 .. 4|123.
    pub be1: [char; 4],
    /// Degeneracy column: how the closest product state factors coincide.
    pub pattern: &'static str,
    pub reality: Reality,
}

impl ReferenceRow {
    pub fn rank(&self) -> u32 {
        if self.no <= 11 {
            4
        } else {
            3
        }
    }

    /// `"I"` for rank 4, `"III"` for rank 3.
    pub fn table(&self) -> &'static str {
        if self.rank() == 4 {
            "I"
        } else {
            "III"
        }
    }

    pub fn partition(&self) -> Partition {
        Partition::from_label(self.pattern).expect("reference patterns are valid labels")
    }

    pub fn be2_values(&self) -> [f64; 3] {
        self.be2.map(entropy_constant)
    }

    pub fn be1_values(&self) -> [f64; 4] {
        self.be1.map(entropy_constant)
    }
}

/// Value in bits of a symbolic entropy entry.
pub fn entropy_constant(symbol: char) -> f64 {
    match symbol {
        'a' => 0.6561,
        'b' => 1.2624,
        'c' => 1.6773,
        'd' => 0.5436,
        'e' => 0.9544,
        'r' => 0.8113,
        's' => 1.5,
        't' => 1.2238,
        'u' => 1.6009,
        '0' => 0.0,
        '1' => 1.0,
        other => panic!("unknown entropy symbol {other:?}"),
    }
}

const R: Reality = Reality::Real;
const C: Reality = Reality::Complex;

const fn row(
    no: u8,
    m: u32,
    ge: f64,
    be2: [char; 3],
    be1: [char; 4],
    pattern: &'static str,
    reality: Reality,
) -> ReferenceRow {
    ReferenceRow { no, m, ge, be2, be1, pattern, reality }
}

pub const REFERENCE_ROWS: [ReferenceRow; 28] = [
    row(1, 1, 0.3043, ['a', 'a', 'a'], ['d', 'd', 'd', 'd'], "4", R),
    row(2, 6, 0.8157, ['a', 'b', 'b'], ['e', 'e', 'd', 'd'], "2,2", R),
    row(3, 3, 1.4891, ['a', 'c', 'c'], ['e', 'e', 'e', 'e'], "2,2", R),
    row(4, 12, 0.8954, ['b', 'b', 'b'], ['e', 'e', 'd', 'e'], "1,2,1", R),
    row(5, 12, 1.5261, ['b', 'c', 'c'], ['e', 'e', 'e', 'e'], "1,1,1,1", R),
    row(6, 4, 0.8916, ['b', 'b', 'b'], ['e', 'e', 'e', 'e'], "2,2", R),
    row(7, 4, 1.1360, ['b', 'b', 'b'], ['e', 'e', 'd', 'e'], "2,2", C),
    row(8, 3, 1.1732, ['c', 'b', 'c'], ['e', 'e', 'e', 'e'], "4", R),
    row(9, 12, 1.4316, ['b', 'c', 'c'], ['e', 'e', 'e', 'e'], "1,2,1", R),
    row(10, 6, 1.1165, ['c', 'b', 'c'], ['e', 'e', 'e', 'e'], "2,2", R),
    row(11, 1, 1.1726, ['b', 'b', 'b'], ['e', 'e', 'e', 'e'], "4", C),
    row(12, 4, 0.5647, ['r', 'r', 'r'], ['r', 'r', 'r', '0'], "1,3", R),
    row(13, 12, 1.5417, ['s', 's', 's'], ['1', 'r', '1', '1'], "1,2,1", R),
    row(14, 12, 1.0, ['s', 's', 'r'], ['1', 'r', 'r', '1'], "1,3", R),
    row(15, 4, 1.5261, ['s', 's', 's'], ['1', '1', '1', '1'], "1,3", R),
    row(16, 6, 0.6115, ['r', 't', 't'], ['r', 'r', 'r', 'r'], "2,2", R),
    row(17, 6, 1.2284, ['r', 'u', 'u'], ['1', '1', 'r', 'r'], "2,2", C),
    row(18, 12, 1.0, ['s', 't', 't'], ['r', 'r', 'r', '1'], "1,3", R),
    row(19, 12, 1.4150, ['s', 'u', 'u'], ['1', '1', 'r', '1'], "1,2,1", R),
    row(20, 6, 1.4569, ['s', 't', 't'], ['r', 'r', '1', '1'], "1,2,1", R),
    row(21, 6, 1.4569, ['s', 'u', 'u'], ['1', '1', '1', '1'], "2,2", R),
    row(22, 4, 1.0, ['t', 't', 't'], ['1', 'r', 'r', 'r'], "1,3", R),
    row(23, 12, 0.6781, ['t', 't', 't'], ['r', 'r', 'r', 'r'], "1,3", R),
    row(24, 12, 1.3173, ['u', 'u', 't'], ['1', '1', '1', 'r'], "1,2,1", R),
    row(25, 4, 1.4150, ['u', 'u', 't'], ['r', '1', '1', 'r'], "1,2,1", R),
    row(26, 1, 1.2230, ['t', 't', 't'], ['1', '1', '1', '1'], "4", R),
    row(27, 6, 1.2767, ['t', 'u', 'u'], ['r', 'r', '1', '1'], "2,2", R),
    row(28, 1, 0.8301, ['t', 't', 't'], ['r', 'r', 'r', 'r'], "4", R),
];

pub fn reference_row(no: u8) -> Option<&'static ReferenceRow> {
    REFERENCE_ROWS.iter().find(|r| r.no == no)
}

/// Distinct 2|2 and 1|3 entropy constants of the rank-4 rows.
pub const RANK4_BE2_CONSTANTS: [f64; 3] = [0.6561, 1.2624, 1.6773];
pub const RANK4_BE1_CONSTANTS: [f64; 2] = [0.5436, 0.9544];
/// Same for the rank-3 rows.
pub const RANK3_BE2_CONSTANTS: [f64; 4] = [0.8113, 1.5, 1.2238, 1.6009];
pub const RANK3_BE1_CONSTANTS: [f64; 3] = [0.0, 0.8113, 1.0];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicities_sum_to_standard_counts() {
        let sum = |rank| REFERENCE_ROWS.iter().filter(|r| r.rank() == rank).map(|r| r.m).sum::<u32>();
        assert_eq!(sum(4), 64);
        assert_eq!(sum(3), 120);
    }

    #[test]
    fn rows_are_numbered_in_order() {
        for (k, r) in REFERENCE_ROWS.iter().enumerate() {
            assert_eq!(r.no as usize, k + 1);
            r.partition();
            r.be1_values();
        }
    }
}
