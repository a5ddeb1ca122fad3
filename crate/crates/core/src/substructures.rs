//! Subalgebras and ideals of finite BCK algebras.
//!
//! Both families are the fixed points of a closure operator on subsets
//! (closure under `∗` for subalgebras, under the ideal rule for ideals), so
//! they are enumerated by growing closed sets one generator at a time
//! starting from `{θ}`. Every closed set is reached, and each is closed
//! once, which keeps the work proportional to the size of the output.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::algebra::{Element, FiniteAlgebra};

/// Largest carrier the bitset representation supports.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubstructureError {
    #[error("substructure enumeration supports at most {MAX_ORDER} elements, got {0}")]
    TooLarge(usize),
    #[error("element {element} is outside a carrier of order {order}")]
    OutOfRange { element: usize, order: usize },
}

/// A subset of a host carrier of at most [`MAX_ORDER`] elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
}

impl Subset {
    pub const EMPTY: Subset = Subset { bits: 0 };

    pub fn from_elements(elements: impl IntoIterator<Item = Element>) -> Self {
        let mut s = Subset::EMPTY;
        for e in elements {
            s.insert(e);
        }
        s
    }

    /// Subset of `alg` given by element names; `None` if a name is unknown.
    pub fn from_names<'a>(
        alg: &FiniteAlgebra,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Option<Self> {
        names
            .into_iter()
            .map(|n| alg.element(n))
            .collect::<Option<Vec<_>>>()
            .map(Subset::from_elements)
    }

    pub fn full(order: usize) -> Self {
        Subset {
            bits: if order >= 64 {
                u64::MAX
            } else {
                (1u64 << order) - 1
            },
        }
    }

    #[inline]
    pub fn contains(self, e: Element) -> bool {
        e.0 < 64 && self.bits >> e.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: Element) {
        assert!(e.0 < MAX_ORDER, "element {e} does not fit in a subset");
        self.bits |= 1 << e.0;
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn members(self) -> impl Iterator<Item = Element> {
        let bits = self.bits;
        (0..64).filter(move |i| bits >> i & 1 == 1).map(Element)
    }

    /// Ordering key: size first, then member indices lexicographically.
    fn sort_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.members().map(Element::index).collect())
    }

    /// `{O,A,B}` using the host's element names.
    pub fn display(self, alg: &FiniteAlgebra) -> String {
        alg.format_set(self.members())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.members().map(Element::index))
            .finish()
    }
}

fn check_size(alg: &FiniteAlgebra) -> Result<(), SubstructureError> {
    if alg.order() > MAX_ORDER {
        Err(SubstructureError::TooLarge(alg.order()))
    } else {
        Ok(())
    }
}

/// Whether `s` is closed under `∗`. Closure forces `θ ∈ s` for nonempty
/// `s` in a BCK algebra, since `x∗x = θ`.
pub fn is_subalgebra(alg: &FiniteAlgebra, s: Subset) -> bool {
    !s.is_empty()
        && s.members().all(|x| x.0 < alg.order())
        && s.members()
            .all(|x| s.members().all(|y| s.contains(alg.op(x, y))))
}

/// Whether `θ ∈ s` and `x∗y ∈ s ∧ y ∈ s ⇒ x ∈ s` for all `x, y`.
pub fn is_ideal(alg: &FiniteAlgebra, s: Subset) -> bool {
    s.contains(alg.zero())
        && s.members().all(|x| x.0 < alg.order())
        && alg
            .elements()
            .filter(|&x| !s.contains(x))
            .all(|x| s.members().all(|y| !s.contains(alg.op(x, y))))
}

fn subalgebra_closure(alg: &FiniteAlgebra, mut s: Subset) -> Subset {
    loop {
        let mut grown = s;
        for x in s.members() {
            for y in s.members() {
                grown.insert(alg.op(x, y));
            }
        }
        if grown == s {
            return s;
        }
        s = grown;
    }
}

fn ideal_closure(alg: &FiniteAlgebra, mut s: Subset) -> Subset {
    s.insert(alg.zero());
    loop {
        let grown = alg
            .elements()
            .filter(|&x| !s.contains(x) && s.members().any(|y| s.contains(alg.op(x, y))))
            .fold(s, |mut acc, x| {
                acc.insert(x);
                acc
            });
        if grown == s {
            return s;
        }
        s = grown;
    }
}

fn closed_sets(alg: &FiniteAlgebra, close: impl Fn(Subset) -> Subset) -> Vec<Subset> {
    let start = close(Subset::from_elements([alg.zero()]));
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for g in alg.elements().filter(|&g| !s.contains(g)) {
            let mut seed = s;
            seed.insert(g);
            let next = close(seed);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort_by_cached_key(|s| s.sort_key());
    out
}

/// Drops `{θ}` and the whole carrier.
fn proper(alg: &FiniteAlgebra, sets: Vec<Subset>) -> Vec<Subset> {
    let full = Subset::full(alg.order());
    sets.into_iter()
        .filter(|s| s.len() > 1 && *s != full)
        .collect()
}

/// All subalgebras, ordered by size then members. With `proper_only`, the
/// singleton `{θ}` and the full carrier are left out.
pub fn subalgebras(
    alg: &FiniteAlgebra,
    proper_only: bool,
) -> Result<Vec<Subset>, SubstructureError> {
    check_size(alg)?;
    let all = closed_sets(alg, |s| subalgebra_closure(alg, s));
    Ok(if proper_only { proper(alg, all) } else { all })
}

/// All ideals, ordered by size then members. With `proper_only`, `{θ}` and
/// the full carrier are left out.
pub fn ideals(alg: &FiniteAlgebra, proper_only: bool) -> Result<Vec<Subset>, SubstructureError> {
    check_size(alg)?;
    let all = closed_sets(alg, |s| ideal_closure(alg, s));
    Ok(if proper_only { proper(alg, all) } else { all })
}

/// Whether `s` is a down-set of the derived order: `y ≤ x ∈ s ⇒ y ∈ s`.
pub fn is_downward_closed(alg: &FiniteAlgebra, s: Subset) -> bool {
    let zero = alg.zero();
    s.members().all(|x| {
        alg.elements()
            .all(|y| alg.op(y, x) != zero || s.contains(y))
    })
}

/// The table of `alg` restricted to `s`, as a standalone BCK algebra with
/// the host's names. `None` if `s` is not a subalgebra.
pub fn restrict(alg: &FiniteAlgebra, s: Subset) -> Option<FiniteAlgebra> {
    if !is_subalgebra(alg, s) || !s.contains(alg.zero()) {
        return None;
    }
    let members: Vec<Element> = s.members().collect();
    let local = |e: Element| Element(members.iter().position(|&m| m == e).expect("closed"));
    let table = crate::algebra::CayleyTable::from_fn(members.len(), |x, y| {
        local(alg.op(members[x.0], members[y.0]))
    });
    let names = members.iter().map(|&m| alg.name(m).to_string()).collect();
    crate::algebra::FiniteAlgebra::new(
        crate::algebra::AlgebraKind::Bck,
        names,
        table,
        crate::algebra::Constants {
            zero: Some(local(alg.zero())),
            unit: None,
        },
        None,
    )
    .ok()
}

/// Names of each subset, as sets, for order-insensitive comparisons.
pub fn name_sets(alg: &FiniteAlgebra, sets: &[Subset]) -> BTreeSet<BTreeSet<String>> {
    sets.iter()
        .map(|s| s.members().map(|e| alg.name(e).to_string()).collect())
        .collect()
}
