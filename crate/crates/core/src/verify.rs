//! Exhaustive structural checks over all `2^15` codes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::hypercore::{HypergraphCode, Vertex, NUM_CODES};
use crate::orbits::{generator_images, rank_census, OrbitTable};
use crate::statevec::{build_state, neighborhood_equivalence_check, verify_stabilizers, CHECK_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Code -> sign function -> code over every code.
    Roundtrip,
    /// `K_v|H> = |H>` and `[K_u, K_v] = 0` over every code.
    Stabilizer,
    /// `prod_{N(v)} U |H> = X_v |H>` over every code and vertex.
    Neighborhood,
    /// Hypergraph-level X/Z moves agree with Pauli action on the state up to sign.
    Transforms,
    /// Every generator maps each orbit into itself.
    Closure,
    /// Rank totals 16384 / 15360 / 1024.
    Census,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Roundtrip, Suite::Stabilizer, Suite::Neighborhood, Suite::Transforms, Suite::Closure, Suite::Census];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Stabilizer => "stabilizer",
            Suite::Neighborhood => "neighborhood",
            Suite::Transforms => "transforms",
            Suite::Closure => "closure",
            Suite::Census => "census",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.suite.name(), self.detail)
    }
}

fn first_failure(check: impl Fn(HypergraphCode) -> bool + Sync) -> Option<HypergraphCode> {
    (0..NUM_CODES as u32).into_par_iter().map(|c| HypergraphCode::new(c).expect("in range")).find_first(|&h| !check(h))
}

fn sweep(suite: Suite, what: &str, check: impl Fn(HypergraphCode) -> bool + Sync) -> SuiteResult {
    match first_failure(check) {
        None => SuiteResult { suite, passed: true, detail: format!("{what} hold for all {NUM_CODES} codes") },
        Some(h) => SuiteResult { suite, passed: false, detail: format!("{what} fail for code {} ({h})", h.raw()) },
    }
}

fn transforms_consistent(h: HypergraphCode) -> bool {
    let state = build_state(h);
    Vertex::ALL.iter().all(|&v| {
        build_state(h.apply_x(v)).equals_up_to_sign(&state.apply_x(v), CHECK_TOL)
            && build_state(h.apply_z(v)).equals_up_to_sign(&state.apply_z(v), CHECK_TOL)
    })
}

pub fn run_suite(suite: Suite, table: &OrbitTable) -> SuiteResult {
    match suite {
        Suite::Roundtrip => {
            sweep(suite, "sign-function round trips", |h| HypergraphCode::from_signs(h.signs()) == Ok(h))
        }
        Suite::Stabilizer => sweep(suite, "stabilizer equations and commutation", verify_stabilizers),
        Suite::Neighborhood => sweep(suite, "neighborhood-product identities", |h| {
            Vertex::ALL.iter().all(|&v| neighborhood_equivalence_check(h, v))
        }),
        Suite::Transforms => sweep(suite, "X/Z edge-set moves", transforms_consistent),
        Suite::Closure => {
            sweep(suite, "orbit closures", |h| generator_images(h).all(|g| table.class_of(g) == table.class_of(h)))
        }
        Suite::Census => match rank_census(table) {
            Ok(c) => {
                let passed = (c.rank4(), c.rank3(), c.graphs(), c.total()) == (16384, 15360, 1024, NUM_CODES as u32);
                SuiteResult {
                    suite,
                    passed,
                    detail: format!(
                        "rank 4: {}, rank 3: {}, rank <= 2: {}, total codes {} partitioned into {} orbits",
                        c.rank4(),
                        c.rank3(),
                        c.graphs(),
                        c.total(),
                        table.len()
                    ),
                }
            }
            Err(e) => SuiteResult { suite, passed: false, detail: e.to_string() },
        },
    }
}

pub fn run_suites(suites: &[Suite], table: &OrbitTable) -> Vec<SuiteResult> {
    suites.iter().map(|&s| run_suite(s, table)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn census_passes_and_sample_transforms_agree() {
        let t = crate::orbits::enumerate_orbits();
        assert!(run_suite(Suite::Census, &t).passed);
        assert!(transforms_consistent("1234,12,3".parse().unwrap()));
    }
}
