mod common;

use starcolor::instances::{
    all_maximal_outerpaths, k6, lemma1_graph, random_maximal_outerplanar, random_outerpath, random_outerplanar,
};
use starcolor::Graph;

use common::outerplanar_by_apex;

#[test]
fn seeds_reproduce() {
    for seed in 0..20 {
        assert_eq!(random_outerplanar(14, seed), random_outerplanar(14, seed));
        assert_eq!(random_outerpath(30, seed, true), random_outerpath(30, seed, true));
    }
    assert_ne!(random_outerplanar(14, 1), random_outerplanar(14, 2));
}

#[test]
fn outerplanar_generator_output() {
    for seed in 0..200 {
        let n = 3 + seed as usize % 20;
        let g = random_outerplanar(n, seed);
        assert_eq!(g.vertex_count(), n);
        assert!(g.is_connected());
        assert!(outerplanar_by_apex(&g));
    }
}

#[test]
fn maximal_outerplanar_generator_output() {
    for seed in 0..100 {
        let n = 3 + seed as usize % 20;
        let g = random_maximal_outerplanar(n, seed);
        assert_eq!(g.edge_count(), 2 * n - 3);
        assert!(outerplanar_by_apex(&g));
        // adding any missing edge breaks outerplanarity
        if let Some((a, b)) = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| !g.has_edge(a, b))
        {
            assert!(!outerplanar_by_apex(&g.extended(0, [(a, b)]).unwrap()));
        }
    }
}

#[test]
fn outerpath_generator_output() {
    for seed in 0..200 {
        let n = 4 + seed as usize % 40;
        let maximal = seed % 2 == 0;
        let g = random_outerpath(n, seed, maximal);
        assert!(g.is_biconnected());
        assert!(outerplanar_by_apex(&g));
        if maximal {
            assert_eq!(g.edge_count(), 2 * n - 3);
            // a triangulated polygon has a path dual iff it has exactly two ears
            assert_eq!((0..n).filter(|&v| g.degree(v) == 2).count(), 2);
        }
    }
}

#[test]
fn path_dual_triangulation_counts() {
    // n * 2^(n-5) for n >= 5
    for n in 5..=9 {
        let all = all_maximal_outerpaths(n);
        assert_eq!(all.len(), n << (n - 5));
        for g in &all {
            assert_eq!((0..n).filter(|&v| g.degree(v) == 2).count(), 2);
        }
    }
}

#[test]
fn named_graphs() {
    let g = lemma1_graph();
    assert_eq!((g.vertex_count(), g.edge_count()), (17, 29));
    assert!(outerplanar_by_apex(&g));
    assert_eq!(k6(), Graph::complete(6));
    assert!(!outerplanar_by_apex(&k6()));
}
