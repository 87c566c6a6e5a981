mod common;

use rand::Rng;
use starcolor::reductions::gadgets::{CLAUSE_U, GRID, U1, U2, V};
use starcolor::reductions::*;
use starcolor::{decide, enumerate_colorings, DiameterBound, Graph, SolveBudget, SolveOutcome};

use common::{all_colorings, all_graphs, is_valid_coloring, random_graph, rng, three_colorable};

/// Every formula with 1..=3 variables and one or two clauses, up to the
/// order of literals within a clause and of the clauses themselves.
fn small_formulas() -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for n in 1..=3i64 {
        let lits: Vec<i64> = (1..=n).flat_map(|v| [v, -v]).collect();
        let mut clauses = Vec::new();
        for a in 0..lits.len() {
            for b in a..lits.len() {
                for c in b..lits.len() {
                    clauses.push([lits[a], lits[b], lits[c]]);
                }
            }
        }
        for i in 0..clauses.len() {
            out.push(CnfFormula::new(n as usize, vec![clauses[i]]).unwrap());
            for j in i..clauses.len() {
                out.push(CnfFormula::new(n as usize, vec![clauses[i], clauses[j]]).unwrap());
            }
        }
    }
    out
}

fn random_formula(n: usize, m: usize, r: &mut impl Rng) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            [0; 3].map(|_| {
                let v = r.gen_range(1..=n as i64);
                if r.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

#[test]
fn variable_gadget_forces_alternation() {
    let g = variable_gadget();
    let valid: Vec<Vec<u32>> = all_colorings(6, 2).filter(|c| is_valid_coloring(&g, c, 2, 2)).collect();
    assert!(!valid.is_empty());
    for c in valid {
        assert_ne!(c[U1], c[U2]);
        assert!(V.windows(2).all(|w| c[w[0]] != c[w[1]]));
    }
}

#[test]
fn k6_pairing() {
    let g = Graph::complete(6);
    let valid: Vec<Vec<u32>> = all_colorings(6, 3).filter(|c| is_valid_coloring(&g, c, 3, 2)).collect();
    // 6!/(2!^3) ordered pair partitions
    assert_eq!(valid.len(), 90);
    for c in all_colorings(6, 3) {
        let paired = (0..6).all(|v| (0..6).filter(|&w| w != v && c[w] == c[v]).count() == 1);
        assert_eq!(paired, is_valid_coloring(&g, &c, 3, 2));
    }
    assert_eq!(enumerate_colorings(&g, 3, DiameterBound::Two).unwrap().len(), 90);
}

#[test]
fn clause_gadget_is_never_monochromatic() {
    let g = trianglefree_clause_gadget();
    let mut valid = 0;
    for c in all_colorings(7, 2).filter(|c| is_valid_coloring(&g, c, 2, 2)) {
        let (a, b, d) = (c[CLAUSE_U], c[GRID[0][0]], c[GRID[1][2]]);
        assert!(!(a == b && b == d));
        valid += 1;
    }
    assert!(valid > 0);
}

#[test]
fn naesat_equivalence_on_small_formulas() {
    let formulas = small_formulas();
    assert!(formulas.len() > 1500);
    for f in formulas {
        let art = naesat_to_2star(&f);
        assert!(art.graph.max_degree() <= 5);
        let out = decide(&art.graph, 2, DiameterBound::Two, SolveBudget::default()).unwrap();
        assert_ne!(out, SolveOutcome::Unknown);
        assert_eq!(out.is_colorable(), f.nae_solve().is_some(), "{}", f.to_dimacs());
        if let Some(c) = out.certificate() {
            let a = coloring_to_assignment(&art, c).unwrap();
            assert!(f.is_nae_satisfied(&a));
        }
    }
}

#[test]
fn forward_soundness_on_larger_formulas() {
    let mut r = rng(41);
    let mut done = 0;
    while done < 100 {
        let n = r.gen_range(3..=12);
        let f = random_formula(n, r.gen_range(1..=3 * n), &mut r);
        let Some(a) = f.nae_solve() else { continue };
        let art = naesat_to_2star(&f);
        assert!(art.graph.max_degree() <= 5);
        let c = assignment_to_coloring(&art, &f, &a).unwrap();
        assert!(is_valid_coloring(&art.graph, c.as_slice(), 2, 2));
        assert_eq!(coloring_to_assignment(&art, &c).unwrap(), a);
        done += 1;
    }
}

#[test]
fn many_occurrences_fit_the_degree_budget() {
    // every literal of x1 occurs in many clauses
    let clauses: Vec<[i64; 3]> = (0..9)
        .map(|i| if i % 3 == 0 { [1, 1, -1] } else { [1, 2, -2] })
        .collect();
    let f = CnfFormula::new(2, clauses).unwrap();
    let art = naesat_to_2star(&f);
    assert!(art.graph.max_degree() <= 5);
    let a = f.nae_solve().unwrap();
    let c = assignment_to_coloring(&art, &f, &a).unwrap();
    assert!(is_valid_coloring(&art.graph, c.as_slice(), 2, 2));
}

#[test]
fn three_coloring_equivalence() {
    let mut graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    let mut r = rng(42);
    while graphs.len() < 400 {
        graphs.push(random_graph(5, &mut r));
    }
    graphs.extend([Graph::complete(3), Graph::cycle(5), Graph::complete(4)]);
    for g in graphs.into_iter().filter(|g| g.max_degree() <= 4) {
        let art = threecolor_to_3star2(&g).unwrap();
        assert!(art.graph.max_degree() <= 9);
        let out = decide(&art.graph, 3, DiameterBound::Two, SolveBudget::default()).unwrap();
        assert_ne!(out, SolveOutcome::Unknown);
        assert_eq!(out.is_colorable(), three_colorable(&g), "{}", g.to_edge_list());
        if let Some(c) = out.certificate() {
            let back = coloring_to_three_coloring(&art, c).unwrap();
            assert!(g.edges().all(|(a, b)| back[a] != back[b]));
        }
    }
}

#[test]
fn three_coloring_forward_direction() {
    let mut r = rng(43);
    for _ in 0..50 {
        let n = r.gen_range(1..=12);
        let g = random_graph(n, &mut r);
        if g.max_degree() > 4 {
            continue;
        }
        let proper = common::all_colorings(n, 3).find(|c| g.edges().all(|(a, b)| c[a] != c[b]));
        if let Some(p) = proper {
            let art = threecolor_to_3star2(&g).unwrap();
            let c = three_coloring_to_coloring(&art, &p).unwrap();
            assert!(is_valid_coloring(&art.graph, c.as_slice(), 3, 2));
        }
    }
}

#[test]
fn map_text_lists_every_gadget() {
    let f = CnfFormula::new(2, vec![[1, 2, -1]]).unwrap();
    let art = naesat_to_2star(&f);
    let text = art.to_map_text();
    assert!(text.lines().any(|l| l.starts_with("variable 1 spine")));
    assert!(text.lines().any(|l| l.starts_with("variable 2 odd")));
    assert_eq!(text.lines().filter(|l| l.starts_with("clause")).count(), 1);
    let h = threecolor_to_3star2(&Graph::path(2)).unwrap();
    assert_eq!(
        h.to_map_text().lines().filter(|l| l.starts_with("attachment")).count(),
        2
    );
}
