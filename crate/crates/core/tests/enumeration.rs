mod common;

use bckalg::{
    axioms, direct_product, enumerate_wajsberg, factorizations, find_isomorphism,
    lukasiewicz_chain, pi, poset_isomorphic, wajsberg_to_bck, Element, FiniteAlgebra,
};
use common::{example, factorizations_oracle, isomorphic_brute, poset_isomorphic_brute};

fn factor_lists(n: usize) -> Vec<Vec<usize>> {
    factorizations(n)
        .unwrap()
        .iter()
        .map(|f| f.factors().to_vec())
        .collect()
}

#[test]
fn factorizations_of_small_orders() {
    assert_eq!(factor_lists(4), vec![vec![4], vec![2, 2]]);
    assert_eq!(factor_lists(7), vec![vec![7]]);
    assert_eq!(
        factor_lists(12),
        vec![vec![12], vec![2, 6], vec![3, 4], vec![2, 2, 3]]
    );
    assert!(factorizations(1).unwrap().is_empty());
    assert!(factorizations(0).is_err());
}

#[test]
fn factorizations_agree_with_brute_force() {
    for n in 2..=64 {
        let ours: std::collections::BTreeSet<Vec<usize>> = factor_lists(n).into_iter().collect();
        assert_eq!(ours, factorizations_oracle(n), "n = {n}");
        assert_eq!(pi(n).unwrap(), ours.len());
    }
    let expected = [
        (4, 2),
        (6, 2),
        (8, 3),
        (9, 2),
        (12, 4),
        (16, 5),
        (24, 7),
        (36, 9),
    ];
    for (n, p) in expected {
        assert_eq!(pi(n).unwrap(), p, "pi_{n}");
    }
}

/// `e_i∘e_j` from the real-valued Łukasiewicz implication on `{k/(n−1)}`,
/// with values kept as numerators over the common denominator `n−1`.
fn rational_chain_entry(n: usize, i: usize, j: usize) -> usize {
    let d = (n - 1) as i64;
    let (x, y) = (i as i64, j as i64);
    (d - x + y).min(d) as usize
}

#[test]
fn chain_matches_real_valued_implication() {
    for n in 2..=12 {
        let c = lukasiewicz_chain(n).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    c.op(Element(i), Element(j)).0,
                    rational_chain_entry(n, i, j)
                );
            }
        }
        assert!(axioms::check_wajsberg(&c).passed(), "chain({n})");
    }
}

#[test]
fn chain_reproduces_printed_chains() {
    for (n, k) in [(4, 1), (6, 3), (8, 6)] {
        let printed = example(k).wajsberg;
        let chain = lukasiewicz_chain(n).unwrap();
        assert_eq!(
            chain.table().diff(printed.table()),
            Some(vec![]),
            "chain({n})"
        );
    }
}

#[test]
fn product_examples() {
    let c2 = lukasiewicz_chain(2).unwrap();
    let c3 = lukasiewicz_chain(3).unwrap();
    let single = direct_product(std::slice::from_ref(&c3)).unwrap();
    assert!(find_isomorphism(&single, &c3).is_some());

    let square = direct_product(&[c2.clone(), c2.clone()]).unwrap();
    assert!(axioms::check_wajsberg(&square).passed());
    assert!(find_isomorphism(&square, &example(2).wajsberg).is_some());

    let six = direct_product(&[c2, c3]).unwrap();
    for k in [4, 5] {
        assert!(
            find_isomorphism(&six, &example(k).wajsberg).is_some(),
            "example {k}"
        );
    }
    assert!(direct_product(&[]).is_err());
}

#[test]
fn enumeration_counts_and_shapes() {
    let four = enumerate_wajsberg(4).unwrap();
    assert_eq!(four.len(), 2);
    assert_eq!(four[0].factorization.label(), "4");
    assert_eq!(four[1].factorization.label(), "2x2");
    assert_eq!(enumerate_wajsberg(5).unwrap().len(), 1);
    let eight = enumerate_wajsberg(8).unwrap();
    assert_eq!(eight.len(), 3);
    for e in &eight {
        assert_eq!(e.algebra.order(), 8);
        assert!(axioms::check_wajsberg(&e.algebra).passed());
    }
}

#[test]
fn enumerated_algebras_are_pairwise_poset_distinct() {
    for n in 2..=9 {
        let algs = enumerate_wajsberg(n).unwrap();
        for (i, a) in algs.iter().enumerate() {
            for b in &algs[i + 1..] {
                assert!(!poset_isomorphic(&a.algebra, &b.algebra), "n = {n}");
            }
        }
    }
}

#[test]
fn isomorphism_search_examples() {
    let b1 = example(1).bck;
    let chain_image = wajsberg_to_bck(&lukasiewicz_chain(4).unwrap()).unwrap();
    let f = find_isomorphism(&b1, &chain_image).expect("the 4-chain");
    assert!(axioms::check_morphism(&f, &b1, &chain_image).passed());
    assert!(find_isomorphism(&b1, &example(2).bck).is_none());
    let id = find_isomorphism(&b1, &b1).unwrap();
    assert!(axioms::check_morphism(&id, &b1, &b1).passed());

    let b2 = example(2).bck;
    let c2 = lukasiewicz_chain(2).unwrap();
    let square = wajsberg_to_bck(&direct_product(&[c2.clone(), c2]).unwrap()).unwrap();
    assert!(find_isomorphism(&b2, &square).is_some());
}

#[test]
fn isomorphism_agrees_with_permutation_oracle() {
    let mut algs: Vec<FiniteAlgebra> = Vec::new();
    for k in 1..=5 {
        algs.push(example(k).bck);
    }
    for n in 2..=6 {
        for e in enumerate_wajsberg(n).unwrap() {
            algs.push(wajsberg_to_bck(&e.algebra).unwrap());
        }
    }
    for a in &algs {
        for b in &algs {
            let found = find_isomorphism(a, b);
            assert_eq!(found.is_some(), isomorphic_brute(a, b));
            if let Some(f) = found {
                assert!(axioms::check_morphism(&f, a, b).passed());
            }
            assert_eq!(poset_isomorphic(a, b), poset_isomorphic_brute(a, b));
        }
    }
}

#[test]
fn poset_comparison_examples() {
    let chain_image = wajsberg_to_bck(&lukasiewicz_chain(4).unwrap()).unwrap();
    assert!(poset_isomorphic(&chain_image, &example(1).bck));
    assert!(!poset_isomorphic(&example(1).bck, &example(2).bck));
}
