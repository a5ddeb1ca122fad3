#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use bckalg::golden::{load_example, ExamplePair};
use bckalg::{Element, FiniteAlgebra};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn example(k: usize) -> ExamplePair {
    load_example(&fixtures_dir(), &format!("ex3_{k}")).expect("fixture loads")
}

pub fn all_examples() -> Vec<(usize, ExamplePair)> {
    (1..=7).map(|k| (k, example(k))).collect()
}

pub fn el(alg: &FiniteAlgebra, name: &str) -> Element {
    alg.element(name)
        .unwrap_or_else(|| panic!("no element {name}"))
}

/// Sets of names in one-letter notation: "OA OAB" -> {{O,A},{O,A,B}}.
pub fn letter_sets(compact: &str) -> BTreeSet<BTreeSet<String>> {
    compact
        .split_whitespace()
        .map(|w| w.chars().map(String::from).collect())
        .collect()
}

/// Unordered factorizations by brute force: every ordered factorization
/// into factors >= 2 is generated by trial division over all divisors,
/// then sorted and deduplicated.
pub fn factorizations_oracle(n: usize) -> BTreeSet<Vec<usize>> {
    fn ordered(n: usize, out: &mut BTreeSet<Vec<usize>>, prefix: &mut Vec<usize>) {
        if n == 1 {
            if !prefix.is_empty() {
                let mut f = prefix.clone();
                f.sort_unstable();
                out.insert(f);
            }
            return;
        }
        for d in 2..=n {
            if n.is_multiple_of(d) {
                prefix.push(d);
                ordered(n / d, out, prefix);
                prefix.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    ordered(n, &mut out, &mut Vec::new());
    out
}

/// All permutations of 0..n (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Whether some bijection preserves the main operation and the zero.
pub fn isomorphic_brute(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    permutations(n).into_iter().any(|p| {
        p[a.zero().0] == b.zero().0
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    p[a.op(Element(x), Element(y)).0] == b.op(Element(p[x]), Element(p[y])).0
                })
            })
    })
}

/// Whether some bijection is an order isomorphism of the natural orders.
pub fn poset_isomorphic_brute(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let (oa, ob) = (a.natural_order(), b.natural_order());
    let n = a.order();
    permutations(n).into_iter().any(|p| {
        (0..n).all(|x| {
            (0..n).all(|y| oa.leq(Element(x), Element(y)) == ob.leq(Element(p[x]), Element(p[y])))
        })
    })
}

/// Subsets (as member lists) passing `pred`, by raw powerset scan.
pub fn powerset_scan(n: usize, mut pred: impl FnMut(&[usize]) -> bool) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if pred(&s) {
            out.insert(s);
        }
    }
    out
}

/// Raw BCK law evaluation on a row-major table with zero 0.
pub fn is_bck_raw(n: usize, t: &[usize]) -> bool {
    let op = |x: usize, y: usize| t[x * n + y];
    for x in 0..n {
        if op(x, x) != 0 || op(0, x) != 0 {
            return false;
        }
        for y in 0..n {
            if op(op(x, op(x, y)), y) != 0 || (x != y && op(x, y) == 0 && op(y, x) == 0) {
                return false;
            }
            for z in 0..n {
                if op(op(op(x, y), op(x, z)), op(z, y)) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Every BCK table on {0..n-1} with zero 0, by exhaustive search over the
/// cells not fixed by `x∗x = 0` and `0∗x = 0`.
pub fn all_bck_tables(n: usize) -> Vec<Vec<usize>> {
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    let total = n.pow(free.len() as u32);
    let mut t = vec![0; n * n];
    for code in 0..total {
        let mut c = code;
        for &(x, y) in &free {
            t[x * n + y] = c % n;
            c /= n;
        }
        if is_bck_raw(n, &t) {
            out.push(t.clone());
        }
    }
    out
}

pub fn rows(n: usize, t: &[usize]) -> Vec<Vec<usize>> {
    t.chunks(n).map(<[usize]>::to_vec).collect()
}
