mod common;

use common::{build, connected_networks};
use proptest::prelude::*;
use semnet::{
    best_response_round, cost, generate_network, rank_nodes, run_game, verify_nash, ActivationState, GameParams,
    Strategy,
};

fn state(values: &[f64]) -> ActivationState {
    ActivationState::from_held(values.to_vec())
}

/// Budget-normalised start over `n` nodes from raw positive weights.
fn start(raw: &[f64], budget: f64) -> ActivationState {
    let total: f64 = raw.iter().sum();
    state(&raw.iter().map(|r| r / total * budget).collect::<Vec<_>>())
}

fn spow(x: f64, e: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.signum() * x.abs().powf(e)
    }
}

proptest! {
    #[test]
    fn cost_is_a_metric(
        a in proptest::collection::vec(0.0..100.0f64, 5),
        b in proptest::collection::vec(0.0..100.0f64, 5),
        c in proptest::collection::vec(0.0..100.0f64, 5),
    ) {
        let (a, b, c) = (state(&a), state(&b), state(&c));
        let ab = cost(&a, &b).unwrap();
        prop_assert_eq!(cost(&a, &a).unwrap(), 0.0);
        prop_assert!(ab >= 0.0);
        prop_assert_eq!(ab, cost(&b, &a).unwrap());
        prop_assert!(ab <= cost(&a, &c).unwrap() + cost(&c, &b).unwrap() + 1e-9);
    }

    /// Two linked nodes: enumerate all four profiles by hand and check the
    /// round plays the greatest equilibrium among them.
    #[test]
    fn two_node_round_matches_enumeration(w in 0.05..=1.0f64, lo in 1.0..50.0f64, delta in 0.0..0.9f64) {
        let budget = 100.0;
        let net = build(2, &[(0, 1, w)]);
        let cur = [budget - lo, lo];
        let params = GameParams { delta, screen_threshold: Some(0.0), ..GameParams::new(budget) };
        let round = best_response_round(&net, &state(&cur), &params).unwrap();

        // Only the poorer node is pulled up.
        let pulled = (cur[1] + cur[0] * w * (1.0 - delta)) / (1.0 + w * (1.0 - delta));
        let change = [0.0, (pulled - cur[1]) / budget];
        let n = 2.0;
        let accepts = |p: [bool; 2]| -> [f64; 2] {
            let mut u = [0.0; 2];
            for i in 0..2 {
                if p[i] {
                    let others = if p[1 - i] { change[1 - i].powi(2) } else { 0.0 };
                    let mc = ((others + change[i].powi(2)) / n).sqrt() - (others / n).sqrt();
                    u[i] = spow(change[1 - i], 1.0 - delta) - mc;
                }
            }
            u
        };
        let mut equilibria = Vec::new();
        for p in [[true, true], [true, false], [false, true], [false, false]] {
            let here = accepts(p);
            let stable = (0..2).all(|i| {
                let mut q = p;
                q[i] = !q[i];
                here[i] >= accepts(q)[i]
            });
            if stable {
                equilibria.push(p);
            }
        }
        let played: Vec<bool> = round.profile.iter().map(|s| *s == Some(Strategy::Accept)).collect();
        let played = [played[0], played[1]];
        prop_assert!(equilibria.contains(&played), "{:?} not in {:?}", played, equilibria);
        for e in &equilibria {
            prop_assert!(!(e[0] && !played[0]) && !(e[1] && !played[1]) || e == &played,
                "{:?} is not the greatest of {:?}", played, equilibria);
        }
    }

    #[test]
    fn energy_is_conserved(
        (n, edges) in connected_networks(7),
        raw in proptest::collection::vec(0.1..10.0f64, 7),
        delta in 0.0..0.9f64,
    ) {
        let net = build(n, &edges);
        let params = GameParams { delta, ..GameParams::new(100.0) };
        let out = run_game(&net, &start(&raw[..n], 100.0), &params).unwrap();
        prop_assert!((out.final_state.total() - 100.0).abs() < 1e-9);
        for r in &out.history {
            prop_assert!((r.held.iter().sum::<f64>() - 100.0).abs() < 1e-9);
            prop_assert!(r.held.iter().all(|&h| h >= 0.0));
        }
        prop_assert!(verify_nash(&net, &out, &params));
    }

    #[test]
    fn screened_nodes_sit_out(
        (n, edges) in connected_networks(7),
        raw in proptest::collection::vec(0.1..10.0f64, 7),
        threshold in 0.0..30.0f64,
    ) {
        let net = build(n, &edges);
        let params = GameParams { screen_threshold: Some(threshold), ..GameParams::new(100.0) };
        let s = start(&raw[..n], 100.0);
        let round = best_response_round(&net, &s, &params).unwrap();
        prop_assert!((round.state.total() - 100.0).abs() < 1e-9);
        let mut keep_ratio = None;
        for i in 0..n {
            let below = s.held[i] < threshold;
            prop_assert_eq!(round.profile[i].is_none(), below);
            if round.profile[i] != Some(Strategy::Accept) {
                // Untouched apart from the common rescale.
                let ratio = round.state.held[i] / s.held[i];
                match keep_ratio {
                    None => keep_ratio = Some(ratio),
                    Some(k) => prop_assert!((ratio - k).abs() < 1e-9),
                }
            }
        }
    }

    #[test]
    fn deterministic(seed in 0u64..50) {
        let net = generate_network(12, 0.3, seed).unwrap();
        let raw: Vec<f64> = (0..12).map(|i| 1.0 + ((i * 7 + seed as usize) % 5) as f64).collect();
        let params = GameParams::default();
        let a = run_game(&net, &start(&raw, 100.0), &params).unwrap();
        let b = run_game(&net, &start(&raw, 100.0), &params).unwrap();
        prop_assert_eq!(a.final_state, b.final_state);
        prop_assert_eq!(a.strategies, b.strategies);
        prop_assert_eq!(a.round_costs, b.round_costs);
    }

    #[test]
    fn rank_matches_sort_oracle(values in proptest::collection::vec(prop::sample::select(vec![0.0, 1.0, 2.5, 7.0, 9.0]), 1..9), k in 0usize..10) {
        let n = values.len();
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 0.5)).collect();
        let net = build(n.max(2), &edges);
        let mut held = values.clone();
        held.resize(n.max(2), 0.0);
        let got = rank_nodes(&net, &state(&held), k);
        // Selection oracle: repeatedly take the lowest id among the maxima.
        let mut left: Vec<usize> = (0..held.len()).collect();
        let mut want = Vec::new();
        while want.len() < k && !left.is_empty() {
            let best = left.iter().copied().fold(left[0], |b, i| if held[i] > held[b] { i } else { b });
            want.push((best as u32, held[best]));
            left.retain(|&i| i != best);
        }
        let got: Vec<(u32, f64)> = got.into_iter().map(|(id, h)| (id.0, h)).collect();
        prop_assert_eq!(got, want);
    }

    /// After convergence one more round cannot reorder nodes whose gap is
    /// wider than any single value can move.
    #[test]
    fn ranking_settles(seed in 0u64..40) {
        let net = generate_network(15, 0.2, seed).unwrap();
        let raw: Vec<f64> = (0..15).map(|i| 1.0 + ((i * 11 + seed as usize * 3) % 13) as f64).collect();
        let params = GameParams::default();
        let out = run_game(&net, &start(&raw, 100.0), &params).unwrap();
        prop_assume!(out.converged);
        let next = best_response_round(&net, &out.final_state, &params).unwrap().state;
        let c = cost(&out.final_state, &next).unwrap();
        let reach = c * (net.len() as f64).sqrt();
        let before = rank_nodes(&net, &out.final_state, net.len());
        let held = &next.held;
        for pair in before.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a.1 - b.1 > 2.0 * reach {
                let (ia, ib) = (net.index_of(a.0).unwrap(), net.index_of(b.0).unwrap());
                prop_assert!(held[ia] > held[ib]);
            }
        }
    }
}
