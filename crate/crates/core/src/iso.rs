//! Backtracking isomorphism search for small algebras and their orders.
//!
//! Candidates for each element are restricted to elements of the other
//! structure with the same invariant profile, then assignments are extended
//! one element at a time and checked against every already-mapped pair.

use crate::algebra::{Element, FiniteAlgebra, OrderRelation};

/// Relabeling-invariant fingerprint of one element of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Profile {
    is_zero: bool,
    is_unit: bool,
    idempotent: bool,
    square_is_zero: bool,
    /// `#{y : x op y = θ}`
    out_degree: usize,
    /// `#{y : y op x = θ}`
    in_degree: usize,
    /// `#{(a, b) : a op b = x}`
    hits: usize,
    /// Sorted multiplicities of the values in row `x`.
    row_shape: Vec<usize>,
    /// Sorted multiplicities of the values in column `x`.
    col_shape: Vec<usize>,
}

fn shape(values: impl Iterator<Item = Element>, n: usize) -> Vec<usize> {
    let mut counts = vec![0; n];
    for v in values {
        counts[v.0] += 1;
    }
    counts.retain(|&c| c > 0);
    counts.sort_unstable();
    counts
}

fn profiles(alg: &FiniteAlgebra) -> Vec<Profile> {
    let n = alg.order();
    let zero = alg.zero();
    let mut hits = vec![0; n];
    for x in alg.elements() {
        for y in alg.elements() {
            hits[alg.op(x, y).0] += 1;
        }
    }
    alg.elements()
        .map(|x| Profile {
            is_zero: x == zero,
            is_unit: alg.unit() == Some(x),
            idempotent: alg.op(x, x) == x,
            square_is_zero: alg.op(x, x) == zero,
            out_degree: alg.elements().filter(|&y| alg.op(x, y) == zero).count(),
            in_degree: alg.elements().filter(|&y| alg.op(y, x) == zero).count(),
            hits: hits[x.0],
            row_shape: shape(alg.elements().map(|y| alg.op(x, y)), n),
            col_shape: shape(alg.elements().map(|y| alg.op(y, x)), n),
        })
        .collect()
}

struct AlgebraSearch<'a> {
    a: &'a FiniteAlgebra,
    b: &'a FiniteAlgebra,
    pa: Vec<Profile>,
    pb: Vec<Profile>,
    forward: Vec<Option<Element>>,
    backward: Vec<Option<Element>>,
    assigned: Vec<Element>,
}

impl AlgebraSearch<'_> {
    /// Whether the image `t` can still be taken by the source element `r`.
    fn compatible(&self, r: Element, t: Element) -> bool {
        match (self.forward[r.0], self.backward[t.0]) {
            (Some(fr), _) => fr == t,
            (None, Some(_)) => false,
            (None, None) => self.pa[r.0] == self.pb[t.0],
        }
    }

    fn consistent(&self, x: Element) -> bool {
        let f = |e: Element| self.forward[e.0].expect("assigned");
        for &u in &self.assigned {
            for (l, r) in [(x, u), (u, x)] {
                let target = self.b.op(f(l), f(r));
                if !self.compatible(self.a.op(l, r), target) {
                    return false;
                }
            }
        }
        if let (Some(ca), Some(cb)) = (self.a.complement_map(), self.b.complement_map()) {
            if !self.compatible(ca[x.0], cb[f(x).0]) {
                return false;
            }
        }
        true
    }

    fn solve(&mut self, next: usize) -> bool {
        let n = self.a.order();
        if next == n {
            return true;
        }
        let x = Element(next);
        for y in 0..n {
            let y = Element(y);
            if self.backward[y.0].is_some() || self.pa[x.0] != self.pb[y.0] {
                continue;
            }
            self.forward[x.0] = Some(y);
            self.backward[y.0] = Some(x);
            self.assigned.push(x);
            if self.consistent(x) && self.solve(next + 1) {
                return true;
            }
            self.assigned.pop();
            self.forward[x.0] = None;
            self.backward[y.0] = None;
        }
        false
    }
}

/// A bijection `f` (indexed by elements of `a`) with `f(θ) = θ`,
/// `f(1) = 1` where designated, `f(x op y) = f(x) op f(y)` and, when both
/// carry one, `f(x̄) = f(x)‾`. `None` when the algebras differ in kind or
/// order, or no such map exists.
pub fn find_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Element>> {
    if a.kind() != b.kind() || a.order() != b.order() || a.unit().is_some() != b.unit().is_some() {
        return None;
    }
    let (pa, pb) = (profiles(a), profiles(b));
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let n = a.order();
    let mut search = AlgebraSearch {
        a,
        b,
        pa,
        pb,
        forward: vec![None; n],
        backward: vec![None; n],
        assigned: Vec::with_capacity(n),
    };
    search.solve(0).then(|| {
        search
            .forward
            .into_iter()
            .map(|e| e.expect("complete"))
            .collect()
    })
}

fn order_profile(order: &OrderRelation, x: Element) -> (usize, usize) {
    order.degrees(x)
}

fn order_search(
    a: &OrderRelation,
    b: &OrderRelation,
    next: usize,
    forward: &mut Vec<Option<Element>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.order();
    if next == n {
        return true;
    }
    let x = Element(next);
    let px = order_profile(a, x);
    for y in (0..n).map(Element) {
        if used[y.0] || order_profile(b, y) != px {
            continue;
        }
        let ok = (0..next).map(Element).all(|u| {
            let fu = forward[u.0].expect("assigned");
            a.leq(x, u) == b.leq(y, fu) && a.leq(u, x) == b.leq(fu, y)
        }) && a.leq(x, x) == b.leq(y, y);
        if !ok {
            continue;
        }
        forward[x.0] = Some(y);
        used[y.0] = true;
        if order_search(a, b, next + 1, forward, used) {
            return true;
        }
        forward[x.0] = None;
        used[y.0] = false;
    }
    false
}

/// An order isomorphism between two relations, if one exists.
pub fn order_isomorphism(a: &OrderRelation, b: &OrderRelation) -> Option<Vec<Element>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let mut da: Vec<_> = (0..n).map(|x| order_profile(a, Element(x))).collect();
    let mut db: Vec<_> = (0..n).map(|x| order_profile(b, Element(x))).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut forward = vec![None; n];
    let mut used = vec![false; n];
    order_search(a, b, 0, &mut forward, &mut used)
        .then(|| forward.into_iter().map(|e| e.expect("complete")).collect())
}

/// Whether the natural orders of `a` and `b` are isomorphic as posets. The
/// algebras may be of different kinds.
pub fn poset_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    order_isomorphism(&a.natural_order(), &b.natural_order()).is_some()
}
