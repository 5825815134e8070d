use std::sync::OnceLock;

use hypergraph4::geoment::{
    ascend, geometric_entanglement, overlap_trace, random_product_state, Partition, SolverPolicy, StartKind,
};
use hypergraph4::hypercore::{HypergraphCode, Permutation, Vertex};
use hypergraph4::orbits::{all_moves, enumerate_orbits, OrbitTable};
use hypergraph4::statevec::{build_state, entropy, entropy_profile, reduced_density, CHECK_TOL};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn table() -> &'static OrbitTable {
    static TABLE: OnceLock<OrbitTable> = OnceLock::new();
    TABLE.get_or_init(enumerate_orbits)
}

fn code() -> impl Strategy<Value = HypergraphCode> {
    (0u32..1 << 15).prop_map(|c| HypergraphCode::new(c).unwrap())
}

fn vertex() -> impl Strategy<Value = Vertex> {
    (1u8..=4).prop_map(|v| Vertex::new(v).unwrap())
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..24).prop_map(|k| Permutation::all()[k])
}

fn sorted(v: &[f64]) -> Vec<f64> {
    let mut v = v.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #[test]
    fn pauli_moves_are_involutions(h in code(), v in vertex()) {
        prop_assert_eq!(h.apply_x(v).apply_x(v), h);
        prop_assert_eq!(h.apply_z(v).apply_z(v), h);
    }

    #[test]
    fn x_moves_commute(h in code(), v in vertex(), w in vertex()) {
        prop_assert_eq!(h.apply_x(v).apply_x(w), h.apply_x(w).apply_x(v));
    }

    #[test]
    fn x_and_z_anticommute_up_to_sign(h in code(), v in vertex()) {
        // Z_v X_v = -X_v Z_v, and codes forget the global sign.
        prop_assert_eq!(h.apply_x(v).apply_z(v), h.apply_z(v).apply_x(v));
    }

    #[test]
    fn permutations_act_as_a_group(h in code(), p in permutation(), q in permutation()) {
        prop_assert_eq!(h.permute(&p).permute(&q), h.permute(&q.after(&p)));
        prop_assert_eq!(h.permute(&p).permute(&p.inverse()), h);
        prop_assert_eq!(h.permute(&p).rank(), h.rank());
    }

    #[test]
    fn sign_function_round_trips(h in code()) {
        prop_assert_eq!(HypergraphCode::from_signs(h.signs()), Ok(h));
        prop_assert!(!h.signs().get(0));
    }

    #[test]
    fn z_flips_amplitudes_with_vertex_set(h in code(), v in vertex()) {
        let before = build_state(h);
        let after = build_state(h.apply_z(v));
        for mu in 0..16 {
            let factor = if mu & v.bit() as usize != 0 { -1.0 } else { 1.0 };
            prop_assert!((after.amps[mu] - factor * before.amps[mu]).abs() < CHECK_TOL);
        }
    }

    #[test]
    fn x_move_matches_pauli_up_to_sign(h in code(), v in vertex()) {
        prop_assert!(build_state(h.apply_x(v)).equals_up_to_sign(&build_state(h).apply_x(v), CHECK_TOL));
    }

    #[test]
    fn display_parses_back(h in code()) {
        prop_assert_eq!(h.to_string().parse::<HypergraphCode>(), Ok(h));
    }

    #[test]
    fn standard_form_stays_in_orbit(h in code()) {
        let s = h.standardize().unwrap();
        prop_assert!(s.is_standard());
        prop_assert_eq!(table().class_of(s), table().class_of(h));
    }

    #[test]
    fn moves_preserve_orbit(h in code()) {
        let id = table().class_of(h);
        for g in all_moves(h) {
            prop_assert_eq!(table().class_of(g), id);
        }
    }

    #[test]
    fn complementary_cuts_have_equal_entropy(h in code()) {
        let s = build_state(h);
        for v in 0..4u8 {
            let one = entropy(&reduced_density(&s, 1 << v).unwrap());
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&one));
        }
        let p = entropy_profile(h);
        let direct = entropy(&reduced_density(&s, 0b1100).unwrap());
        prop_assert!((p.be2[0] - direct).abs() < 1e-9);
        for x in p.be2 {
            prop_assert!((-1e-12..=2.0 + 1e-12).contains(&x));
        }
    }

    #[test]
    fn entropies_are_local_invariants(h in code(), v in vertex(), p in permutation()) {
        let base = entropy_profile(h);
        for g in [h.apply_x(v), h.apply_z(v)] {
            let q = entropy_profile(g);
            for (a, b) in base.be1.iter().zip(&q.be1).chain(base.be2.iter().zip(&q.be2)) {
                prop_assert!((a - b).abs() < 1e-9);
            }
        }
        let q = entropy_profile(h.permute(&p));
        for (a, b) in sorted(&base.be1).iter().zip(sorted(&q.be1)) {
            prop_assert!((a - b).abs() < 1e-9);
        }
        for (a, b) in sorted(&base.be2).iter().zip(sorted(&q.be2)) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn ascent_never_decreases_overlap(h in code(), seed in any::<u64>()) {
        let s = build_state(h);
        let start = random_product_state(&mut ChaCha8Rng::seed_from_u64(seed), StartKind::Complex);
        let trace = overlap_trace(&s, start, 40);
        for w in trace.windows(2) {
            prop_assert!(w[1] >= w[0] - 1e-13);
        }
        let out = ascend(&s, start, 1e-12, 5000);
        prop_assert!(out.overlap <= 1.0 + 1e-12);
        prop_assert!(out.overlap >= trace[0] - 1e-13);
    }

    #[test]
    fn real_starts_stay_real(h in code(), seed in any::<u64>()) {
        let s = build_state(h);
        let start = random_product_state(&mut ChaCha8Rng::seed_from_u64(seed), StartKind::Real);
        let out = ascend(&s, start, 1e-12, 2000);
        prop_assert!(out.state.qubits.iter().flatten().all(|c| c.im == 0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ge_is_invariant_under_local_moves(h in code(), v in vertex(), p in permutation()) {
        let policy = SolverPolicy::default();
        let base = geometric_entanglement(h, &policy).unwrap().eg;
        for g in [h.apply_x(v), h.apply_z(v), h.permute(&p)] {
            let other = geometric_entanglement(g, &policy).unwrap().eg;
            prop_assert!((base - other).abs() < 1e-6, "{h} -> {g}: {base} vs {other}");
        }
    }
}

#[test]
fn partition_labels_round_trip() {
    for p in [Partition::Four, Partition::OneThree, Partition::TwoTwo, Partition::OneTwoOne, Partition::Distinct] {
        assert_eq!(Partition::from_label(p.label()), Some(p));
    }
}

#[test]
fn orbit_sizes_divide_group_order() {
    for r in table().records() {
        assert_eq!(hypergraph4::orbits::GROUP_ORDER % r.size, 0, "orbit {} of size {}", r.id, r.size);
    }
}
