mod common;

use common::{build, networks};
use proptest::prelude::*;
use semnet::{load_network, save_network, NodeId, SemanticNetwork};

#[test]
fn neighbor_weight_sum_matches_edge_scan() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
    let mut edges = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            if rng.random_bool(0.5) {
                edges.push((a, b, rng.random::<f64>()));
            }
        }
    }
    let net = build(6, &edges);
    for x in 0..6 {
        let mut oracle = 0.0;
        for &(a, b, w) in &edges {
            if a == x || b == x {
                oracle += w;
            }
        }
        let got = net.neighbor_weight_sum(NodeId(x as u32)).unwrap();
        assert!((got - oracle).abs() < 1e-12, "node {x}: {got} vs {oracle}");
    }
}

#[test]
fn file_examples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("net.json");
    std::fs::write(
        &path,
        r#"{"nodes":[{"id":1,"label":"a"},{"id":2,"label":"b"}],"edges":[{"a":1,"b":2,"w":0.5}]}"#,
    )
    .unwrap();
    let net = load_network(&path).unwrap();
    assert_eq!(net.len(), 2);
    assert_eq!(net.neighbors(0), &[(1, 0.5)]);
    assert_eq!(net.neighbors(1), &[(0, 0.5)]);

    std::fs::write(
        &path,
        r#"{"nodes":[{"id":1,"label":"a"},{"id":2,"label":"b"}],"edges":[{"a":1,"b":2,"w":1.5}]}"#,
    )
    .unwrap();
    assert!(matches!(
        load_network(&path),
        Err(semnet::Error::WeightOutOfRange { .. })
    ));

    std::fs::write(
        &path,
        r#"{"nodes":[{"id":1,"label":"a"}],"edges":[{"a":1,"b":9,"w":0.5}]}"#,
    )
    .unwrap();
    assert!(matches!(
        load_network(&path),
        Err(semnet::Error::DanglingEndpoint { .. })
    ));

    assert!(matches!(
        load_network(dir.path().join("missing.json")),
        Err(semnet::Error::Io { .. })
    ));
}

proptest! {
    #[test]
    fn handshake_identity((n, edges) in networks(8)) {
        let net = build(n, &edges);
        let per_node: f64 = (0..n).map(|i| net.neighbor_weight_sum(NodeId(i as u32)).unwrap()).sum();
        prop_assert!((per_node - 2.0 * net.total_weight_sum()).abs() < 1e-9);
    }

    #[test]
    fn json_round_trip((n, edges) in networks(8)) {
        let net = build(n, &edges);
        let again = SemanticNetwork::from_json_str(&net.to_json_string()).unwrap();
        prop_assert_eq!(&net, &again);
    }

    #[test]
    fn file_round_trip((n, edges) in networks(6)) {
        let net = build(n, &edges);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("n.json");
        save_network(&net, &path).unwrap();
        prop_assert_eq!(load_network(&path).unwrap(), net);
    }

    #[test]
    fn adjacency_is_symmetric((n, edges) in networks(8)) {
        let net = build(n, &edges);
        for i in 0..n {
            for &(j, w) in net.neighbors(i) {
                prop_assert!(net.neighbors(j).contains(&(i, w)));
            }
        }
    }
}
