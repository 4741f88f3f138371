mod common;

use common::{build, connected_networks};
use proptest::prelude::*;
use semnet::{run_cobweb, run_spread, run_traditional, CobwebParams, NodeId, SpreadParams};

/// Independent replay: second-order recurrence per node, greedy hand-out.
fn replay(nodes: &[(f64, f64)], p: &CobwebParams, budget: f64, iters: usize) -> Vec<Vec<(f64, f64)>> {
    let mut prev: Vec<f64> = nodes.iter().map(|n| n.0).collect();
    let mut cur = prev.clone();
    let mut out = Vec::new();
    for _ in 0..iters {
        let mut left = budget;
        let mut row = Vec::new();
        for k in 0..nodes.len() {
            let demand = p.demand_intercept - p.demand_slope * cur[k];
            let supply = p.supply_intercept + p.supply_slope * prev[k];
            let next = nodes[k].1 + p.r * (demand - supply);
            let take = next.max(0.0).min(left);
            left -= take;
            prev[k] = cur[k];
            cur[k] = next;
            row.push((next, take));
        }
        out.push(row);
    }
    out
}

#[test]
fn five_node_replay() {
    let nodes = [(12.0, 20.0), (30.0, 20.0), (5.0, 15.0), (22.0, 25.0), (9.0, 20.0)];
    let p = CobwebParams {
        max_iters: 12,
        tol: 1e-12,
        ..CobwebParams::centered(0.4, 1.0, 0.5, 20.0)
    };
    let got = run_cobweb(&nodes, &p, 90.0).unwrap();
    let want = replay(&nodes, &p, 90.0, got.iters);
    for row in &got.trace {
        let (o, take) = want[row.iter - 1][row.node];
        assert!((row.o - o).abs() < 1e-12, "iter {} node {}", row.iter, row.node);
        assert!((row.allocated - take).abs() < 1e-12);
    }
    let last = want.last().unwrap();
    for (k, a) in got.allocations.iter().enumerate() {
        assert!((a - last[k].1).abs() < 1e-12);
    }
    assert!(got.allocations.iter().sum::<f64>() <= 90.0 + 1e-9);
}

proptest! {
    /// `|r| (b + e) < 1` bounds both characteristic roots inside the unit
    /// circle, so a lone node always settles.
    #[test]
    fn stable_settings_converge(
        r in 0.01..1.0f64,
        d in 0.0..2.0f64,
        s in 0.0..2.0f64,
        o in 0.0..60.0f64,
    ) {
        prop_assume!(r * (d + s) < 0.95);
        let p = CobwebParams { max_iters: 20_000, tol: 1e-9, ..CobwebParams::centered(r, d, s, 20.0) };
        let out = run_cobweb(&[(o, 20.0)], &p, 1e6).unwrap();
        prop_assert!(out.converged);
    }

    #[test]
    fn traditional_is_plain_spreading((n, edges) in connected_networks(7), delta in 0.0..=1.0f64) {
        let net = build(n, &edges);
        let p = SpreadParams { delta, ..SpreadParams::default() };
        let src = [(NodeId(0), 60.0), (NodeId((n - 1) as u32), 40.0)];
        prop_assert_eq!(run_traditional(&net, &src, &p).unwrap(), run_spread(&net, &src, &p).unwrap());
    }
}
