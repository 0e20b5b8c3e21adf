//! Exhaustive sweeps over small universes, each checked against an
//! independent computation.

use std::collections::{BTreeMap, BTreeSet};

use rcgraph::insertion::{insert, insert_word, inverse_insert};
use rcgraph::lr::{classical_lr, lr_coefficients, pieri_expansion};
use rcgraph::perm::class_permutations;
use rcgraph::rcgraph::{class_rcgraphs, word_permutation};
use rcgraph::tableau::{
    enumerate_ssyt, enumerate_ssyt_up_to, knuth_class, knuth_neighbors, rectify,
};
use rcgraph::{Partition, Permutation, Polynomial, RcGraph, Tableau};

fn words(n: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n).map(move |k| {
                    let mut w = w.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn rectify_is_constant_on_knuth_classes() {
    for n in 1..=3 {
        for len in 0..=5 {
            for v in words(n, len) {
                let y = rectify(&v, n as i64).unwrap();
                for u in knuth_neighbors(&v) {
                    assert_eq!(rectify(&u, n as i64).unwrap(), y, "{v:?} ~ {u:?}");
                }
            }
        }
    }
}

#[test]
fn distinct_tableaux_have_disjoint_knuth_classes() {
    for n in 1..=3 {
        let tableaux = enumerate_ssyt_up_to(6, n);
        let mut owner: BTreeMap<Vec<u32>, Tableau> = BTreeMap::new();
        for y in &tableaux {
            let class = knuth_class(&y.reading_word(), 8).unwrap();
            for v in class {
                assert_eq!(rectify(&v, n).unwrap(), *y);
                if let Some(prev) = owner.insert(v.clone(), y.clone()) {
                    panic!("{v:?} is equivalent to both {prev:?} and {y:?}");
                }
            }
        }
    }
}

#[test]
fn traces_match_crossing_counts_and_reading_words() {
    for w in class_permutations(3, -2, 5) {
        for r in RcGraph::enumerate(&w).unwrap() {
            assert_eq!(r.trace().length(), r.len());
            let word = r.reading_word();
            let product = word_permutation(&word, 3).unwrap();
            assert_eq!(product, w);
            assert_eq!(product.length(), word.len());
        }
    }
}

#[test]
fn ladder_moves_preserve_trace_and_lower_the_monomial() {
    for w in class_permutations(3, -2, 5) {
        for r in RcGraph::enumerate(&w).unwrap() {
            for (moved, mv) in r.ladder_moves() {
                assert_eq!(moved.trace(), w, "{r} by {mv:?}");
                assert_eq!(moved.len(), r.len());
                assert!(moved.monomial() < r.monomial());
            }
        }
    }
}

#[test]
fn window_enlargement_does_not_change_labels() {
    for r in class_rcgraphs(3, -2, 4) {
        let small = r.auto_labels().unwrap();
        let mut window = small.window();
        window.col_low -= 3;
        let large = r.labels(window).unwrap();
        let w0 = small.window();
        for col in w0.col_low..=r.n() {
            for row in w0.row_low..=r.n() {
                assert_eq!(small.from_west(col, row), large.from_west(col, row));
                assert_eq!(small.from_south(col, row), large.from_south(col, row));
            }
        }
    }
}

#[test]
fn tableau_graphs() {
    for n in 1..=3 {
        let mut seen = BTreeSet::new();
        for y in enumerate_ssyt_up_to(5, n) {
            let r = RcGraph::of_tableau(&y, n).unwrap();
            assert!(seen.insert(r.clone()), "of_tableau not injective at {y:?}");
            assert_eq!(r.tableau_of().unwrap(), y);
            assert_eq!(r.monomial(), y.weight());
            assert_eq!(r.trace(), Permutation::of_partition(&y.shape(), n).unwrap());
        }
    }
}

#[test]
fn partition_permutations_have_one_ascent_at_zero() {
    for n in 1..=3 {
        for mu in Partition::all_up_to(6) {
            if mu.len() as i64 > n {
                continue;
            }
            let w = Permutation::of_partition(&mu, n).unwrap();
            assert!(w.is_in_class());
            assert_eq!(w.length(), mu.size() as usize);
            for i in (w.low() + 1)..=n {
                assert_eq!(w.apply(i) < w.apply(i - 1), i == 1, "{mu} at {i}");
            }
        }
    }
}

#[test]
fn insertion_changes_the_permutation_by_one_transposition() {
    for r in class_rcgraphs(3, -2, 4) {
        let w = r.trace();
        for k in 1..=3 {
            let (out, t) = insert(&r, k).unwrap();
            assert!(t.final_c > 0 && t.final_d <= 0);
            let u = out.trace();
            assert_eq!(u, w.right_transposition(t.final_c, t.final_d));
            assert_eq!(u.length(), w.length() + 1);
            assert!(u.is_in_class());
            assert!(out.crossings().iter().all(|c| c.row >= 1));
        }
    }
}

#[test]
fn inverse_then_insert_is_identity() {
    let mut round_trips = 0;
    for r in class_rcgraphs(3, -2, 4) {
        let w = r.trace();
        for c in 1..=3 {
            for d in -4..=0 {
                let v = w.right_transposition(c, d);
                if v.length() + 1 != w.length() || !v.is_in_class() {
                    continue;
                }
                let Ok((before, k)) = inverse_insert(&r, c, d) else {
                    continue;
                };
                let (again, t) = insert(&before, k).unwrap();
                assert_eq!(again, r);
                assert_eq!((t.final_c, t.final_d), (c, d));
                round_trips += 1;
            }
        }
    }
    assert!(round_trips > 100, "only {round_trips} round trips");
}

#[test]
fn insert_word_factors_through_rectification() {
    for r in class_rcgraphs(3, -2, 2) {
        for len in 0..=4 {
            for v in words(3, len) {
                let y = rectify(&v, 3).unwrap();
                let lhs = insert_word(&r, &v).unwrap();
                assert_eq!(
                    lhs,
                    rcgraph::insert_tableau(&r, &y).unwrap(),
                    "{r} <- {v:?}"
                );
            }
        }
    }
}

#[test]
fn separated_insertions_touch_disjoint_crossings() {
    for r in class_rcgraphs(3, -2, 4) {
        for x in 1..=3u32 {
            for y in x + 1..=3 {
                for z in y..=3 {
                    let (r1, _) = insert(&r, y).unwrap();
                    let (r2, tx) = insert(&r1, x).unwrap();
                    let (_, tz) = insert(&r2, z).unwrap();
                    assert!(
                        tx.touched().is_disjoint(&tz.touched()),
                        "{r} <- {y}{x}{z}: {:?} / {:?}",
                        tx.steps,
                        tz.steps
                    );
                }
            }
        }
    }
}

#[test]
fn schur_products_reproduce_classical_lr_numbers() {
    for n in 1..=3i64 {
        for lambda in Partition::all_up_to(6) {
            for mu in Partition::all_up_to(6 - lambda.size()) {
                if lambda.len() as i64 > n || mu.len() as i64 > n {
                    continue;
                }
                let w = Permutation::of_partition(&lambda, n).unwrap();
                let lr = lr_coefficients(&w, &mu, n).unwrap();
                let mut expected = BTreeMap::new();
                for nu in Partition::all_of_size(lambda.size() + mu.size()) {
                    if nu.len() as i64 > n {
                        continue;
                    }
                    let c = classical_lr(&lambda, &mu, &nu, n).unwrap();
                    if c > 0 {
                        expected.insert(Permutation::of_partition(&nu, n).unwrap(), c);
                    }
                }
                assert_eq!(lr.coefficients, expected, "{lambda} * {mu}, n = {n}");
            }
        }
    }
}

#[test]
fn pieri_rule_matches_insertion_counts_for_longer_rows() {
    for w in class_permutations(2, -2, 4) {
        for m in 0..=4 {
            let lr = lr_coefficients(&w, &Partition::row(m), 2).unwrap();
            assert_eq!(pieri_expansion(&w, m as usize, 2).unwrap(), lr.coefficients);
        }
    }
}

#[test]
fn top_monomial_is_the_leading_schubert_term() {
    for w in class_permutations(3, -2, 5) {
        let top = RcGraph::top(&w).unwrap();
        let s = Polynomial::schubert(&w, 3).unwrap();
        let (e, c) = s.leading_term().unwrap();
        assert_eq!(*e, top.monomial());
        assert_eq!(*c, 1);
    }
}

#[test]
fn tableau_enumeration_counts() {
    // Schur polynomial evaluated at all ones
    let mu = Partition::new(vec![2, 1]).unwrap();
    assert_eq!(enumerate_ssyt(&mu, 3).len(), 8);
    assert_eq!(enumerate_ssyt(&Partition::row(3), 2).len(), 4);
    assert_eq!(
        enumerate_ssyt(&Partition::new(vec![1, 1, 1, 1]).unwrap(), 3).len(),
        0
    );
}
