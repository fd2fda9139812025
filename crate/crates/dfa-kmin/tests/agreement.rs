use dfa_core::{equivalent, minimise, state_meta, Dfa, Ext, Mode};
use dfa_kmin::{
    all_k_sweep, count_symdiff, hyper_minimise, k_minimise, k_minimise_naive, k_similar, minimal_form,
    similarity_bound, sizes_for_all_k, Bound, KSimilarity,
};
use dfa_oracle::gen::{random_dfa, Shape};
use dfa_oracle::{bf_in_level, bf_k_similar, bf_symdiff, greedy_max_dissimilar, window_k_similar, DEFAULT_BUDGET};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus(seed: u64, count: usize, max_states: usize) -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut shape = Shape::new(rng.gen_range(1..=max_states), rng.gen_range(1..=3));
            shape.density = rng.gen_range(0.4..=1.0);
            random_dfa(&mut rng, shape)
        })
        .collect()
}

#[test]
fn four_way_size_agreement() {
    for d in corpus(11, 200, 8) {
        let m = minimal_form(&d);
        let sizes = sizes_for_all_k(&d);
        let n = m.num_states();
        assert_eq!(sizes.len(), 2 * n + 1);
        assert_eq!(sizes[0], n);
        assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
        for (k, &size) in sizes.iter().enumerate() {
            let fast = k_minimise(&d, k);
            let naive = k_minimise_naive(&d, k);
            let greedy = greedy_max_dissimilar(&m, k);
            assert_eq!(
                (fast.num_states(), naive.num_states(), greedy.len()),
                (size, size, size),
                "k = {k} on\n{}",
                dfa_core::serialize_dfa(&d)
            );
        }
    }
}

#[test]
fn outputs_are_k_similar_and_k_minimal() {
    for d in corpus(12, 150, 8) {
        let n = minimal_form(&d).num_states();
        for k in 0..=2 * n {
            for out in [k_minimise(&d, k), k_minimise_naive(&d, k)] {
                assert!(similarity_bound(&d, &out) <= Ext::Fin(k));
                assert!(window_k_similar(&d, &out, k));
                // Re-measured in the output, all states are pairwise dissimilar.
                let trimmed = dfa_core::trim(&out, false);
                let sim = KSimilarity::new(&trimmed).unwrap();
                for q in 0..trimmed.num_states() {
                    for p in q + 1..trimmed.num_states() {
                        assert!(!sim.similar(q, p, k), "k = {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn similarity_matches_definition() {
    for d in corpus(13, 150, 7) {
        let m = minimal_form(&d);
        let n = m.num_states();
        for q in 0..n {
            assert_eq!(Some(state_meta(&m).unwrap().in_level[q]), bf_in_level(&m, q));
            for p in 0..n {
                for k in 0..=2 * n {
                    assert_eq!(k_similar(&m, q, p, k).unwrap(), bf_k_similar(&m, q, p, k));
                }
            }
        }
    }
}

#[test]
fn sweep_matches_every_phase() {
    for d in corpus(14, 150, 8) {
        let sizes = sizes_for_all_k(&d);
        let mut sweep = all_k_sweep(&d);
        assert_eq!(sweep.snapshot(), minimise(&d, if d.is_total() { Mode::Total } else { Mode::Partial }));
        loop {
            let k = sweep.k();
            assert_eq!(sweep.num_states(), sizes[k]);
            assert_eq!(sweep.snapshot(), k_minimise(&d, k));
            if !sweep.advance() {
                break;
            }
        }
        assert_eq!(sweep.snapshot(), hyper_minimise(&d));
    }
}

#[test]
fn hyper_minimisation() {
    for d in corpus(15, 150, 8) {
        let h = hyper_minimise(&d);
        assert!(count_symdiff(&d, &h, Bound::Auto).unwrap().finite);
        assert_eq!(hyper_minimise(&h).num_states(), h.num_states());
        assert!(h.num_states() <= minimal_form(&d).num_states());
    }
}

#[test]
fn symdiff_counts_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..150 {
        let (na, nb) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let a = random_dfa(&mut rng, Shape::new(na, 2));
        let b = random_dfa(&mut rng, Shape::new(nb, 2));
        if a.num_states() * b.num_states() > 50 {
            continue;
        }
        let max_len = rng.gen_range(0..=10);
        let words = bf_symdiff(&a, &b, max_len, DEFAULT_BUDGET).unwrap();
        let s = count_symdiff(&a, &b, Bound::MaxLen(max_len)).unwrap();
        assert_eq!(s.count, BigUint::from(words.words.len()));
        assert_eq!(s.max_error_len, words.words.last().map(Vec::len));
        if let Ok(all) = count_symdiff(&a, &b, Bound::Auto) {
            assert!(all.count >= s.count);
            assert_eq!(similarity_bound(&a, &b), all.max_error_len.map_or(Ext::Fin(0), |l| Ext::Fin(l + 1)));
        }
        assert_eq!(equivalent(&a, &b), similarity_bound(&a, &b) == Ext::Fin(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn fast_and_naive_agree(seed in any::<u64>(), n in 1usize..=8, k in 0usize..=16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_dfa(&mut rng, Shape::new(n, 2));
        let fast = k_minimise(&d, k);
        let naive = k_minimise_naive(&d, k);
        prop_assert_eq!(fast.num_states(), naive.num_states());
        prop_assert!(similarity_bound(&fast, &naive) <= Ext::Fin(k));
    }
}
