use dqi_maxcut::graph::{components, cyclomatic, fundamental_cycles, generate, girth, spanning_forest, GeneratorSpec};
use dqi_maxcut::parity::{injectivity_radius, parity_map};
use dqi_maxcut::{EdgeVector, Extent, Graph};
use proptest::prelude::*;

/// Shortest simple cycle by extending paths from their smallest vertex.
fn brute_girth(g: &Graph) -> Extent {
    let n = g.n();
    let mut best = usize::MAX;
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, on: &mut [bool], best: &mut usize) {
        let last = *path.last().unwrap();
        for inc in g.adjacency(last) {
            let w = inc.neighbor;
            if w == start && path.len() >= 3 {
                *best = (*best).min(path.len());
            } else if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                extend(g, start, path, on, best);
                path.pop();
                on[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        extend(g, s, &mut vec![s], &mut on, &mut best);
    }
    if best == usize::MAX {
        Extent::Infinite
    } else {
        Extent::Finite(best)
    }
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8, any::<u64>(), 0usize..=20).prop_map(|(n, seed, extra)| {
        let max = n * (n - 1) / 2;
        let m = (n - 1 + extra).min(max);
        generate(&GeneratorSpec::RandomConnected { n, m, seed: Some(seed) }).unwrap()
    })
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a.edges().iter().copied().chain(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(a.n() + b.n(), edges.collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn girth_matches_cycle_enumeration(g in random_graph()) {
        let found = girth(&g);
        prop_assert_eq!(found.value, brute_girth(&g));
        if let Some(w) = &found.witness {
            prop_assert_eq!(Extent::Finite(w.len()), found.value);
            for i in 0..w.len() {
                prop_assert!(g.has_edge(w[i], w[(i + 1) % w.len()]));
            }
        }
    }

    #[test]
    fn cycle_rank_and_fundamental_cycles(a in random_graph(), b in random_graph()) {
        let g = disjoint_union(&a, &b);
        let forest = spanning_forest(&g);
        let mu = cyclomatic(&g);
        prop_assert_eq!(mu, g.m() + components(&g).len() - g.n());
        prop_assert_eq!(mu, forest.non_tree_edges.len());
        let cycles = fundamental_cycles(&g, &forest);
        prop_assert_eq!(cycles.len(), mu);
        for c in &cycles {
            prop_assert!(parity_map(&g, c).is_zero());
            prop_assert!(!c.is_zero());
        }
    }

    #[test]
    fn parity_map_is_linear(g in random_graph(), x in any::<u64>(), y in any::<u64>()) {
        let m = g.m();
        let keep = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let a = EdgeVector::from_u64(m, x & keep);
        let b = EdgeVector::from_u64(m, y & keep);
        let sum = &a ^ &b;
        prop_assert_eq!(parity_map(&g, &sum), &parity_map(&g, &a) ^ &parity_map(&g, &b));
    }

    #[test]
    fn images_are_even_on_every_component(a in random_graph(), b in random_graph(), x in any::<u64>()) {
        let g = disjoint_union(&a, &b);
        let beta = EdgeVector::from_u64(g.m(), x & ((1u64 << g.m().min(63)) - 1));
        let alpha = parity_map(&g, &beta);
        for comp in components(&g) {
            prop_assert_eq!(comp.iter().filter(|&&v| alpha.get(v)).count() % 2, 0);
        }
    }

    #[test]
    fn random_generators_are_deterministic(n in 2usize..40, r in 0usize..5, seed in any::<u64>()) {
        let spec = GeneratorSpec::TreePlusChords { n, chords: r.min((n - 1) * (n - 2) / 2), seed: Some(seed) };
        let a = generate(&spec).unwrap();
        let b = generate(&spec.to_string().parse().unwrap()).unwrap();
        prop_assert_eq!(a.edges(), b.edges());
    }
}

#[test]
fn injectivity_radius_follows_girth() {
    let cases = [
        (GeneratorSpec::Cycle(3), Extent::Finite(1)),
        (GeneratorSpec::Cycle(8), Extent::Finite(3)),
        (GeneratorSpec::Petersen, Extent::Finite(2)),
        (GeneratorSpec::Path(5), Extent::Infinite),
    ];
    for (spec, want) in cases {
        assert_eq!(injectivity_radius(&generate(&spec).unwrap()), want, "{spec}");
    }
}
