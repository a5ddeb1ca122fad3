//! Carrier representation for finite algebras.
//!
//! Every algebra kind handled by this crate (BCK, Wajsberg, MV) is stored the
//! same way: dense element indices `0..n`, presentation-only names, one binary
//! operation as a [`CayleyTable`], and the designated constants of its
//! signature. Axioms are never checked here; see [`crate::axioms`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An element of a finite carrier, identified by its dense index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub usize);

impl Element {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for Element {
    fn from(index: usize) -> Self {
        Element(index)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which signature the main table of a [`FiniteAlgebra`] belongs to.
///
/// * `Bck`: the table is `∗`, with `θ` designated.
/// * `Wajsberg`: the table is the implication `∘`, with `1` designated.
/// * `Mv`: the table is `⊕`, with `θ` designated and `′` given explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Bck,
    Wajsberg,
    Mv,
}

impl AlgebraKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraKind::Bck => "bck",
            AlgebraKind::Wajsberg => "wajsberg",
            AlgebraKind::Mv => "mv",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bck" => Ok(AlgebraKind::Bck),
            "wajsberg" => Ok(AlgebraKind::Wajsberg),
            "mv" => Ok(AlgebraKind::Mv),
            other => Err(AlgebraError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown algebra kind `{0}` (expected bck, wajsberg or mv)")]
    UnknownKind(String),
    #[error("an algebra needs at least one element")]
    Empty,
    #[error("table has {entries} entries, expected {order}x{order}")]
    TableShape { order: usize, entries: usize },
    #[error("{names} element names for a table of order {order}")]
    DimensionMismatch { names: usize, order: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}`")]
    InvalidName(String),
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("designated constant `{constant}` is {value}, outside 0..{order}")]
    ConstantOutOfRange {
        constant: &'static str,
        value: usize,
        order: usize,
    },
    #[error("{kind} algebra requires the constant `{constant}`")]
    MissingConstant {
        kind: AlgebraKind,
        constant: &'static str,
    },
    #[error("{kind} algebra requires a complement row")]
    MissingComplement { kind: AlgebraKind },
    #[error("complement row has {len} entries, expected {order}")]
    ComplementLength { len: usize, order: usize },
    #[error("complement of {element} is {value}, outside 0..{order}")]
    ComplementOutOfRange {
        element: usize,
        value: usize,
        order: usize,
    },
    #[error("declared `{constant}` is {declared} but the table determines {derived}")]
    ConstantMismatch {
        constant: &'static str,
        declared: usize,
        derived: usize,
    },
    #[error("the zero cannot be derived: no unique z with z∘y = 1 for all y")]
    UnderivableZero,
    #[error("declared `one` ({0}) is not an upper bound of the order")]
    UnitNotTop(usize),
    #[error("explicit complement of {element} is {explicit}, derived complement is {derived}")]
    ComplementMismatch {
        element: usize,
        explicit: usize,
        derived: usize,
    },
    #[error("operation needs a {expected} algebra, got {found}")]
    WrongKind {
        expected: AlgebraKind,
        found: AlgebraKind,
    },
    #[error("{0} has no complement: the algebra is unbounded and carries no complement row")]
    NoComplement(Element),
}

/// An `n × n` operation table; row is the left operand, column the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<Element>,
}

impl CayleyTable {
    /// Builds a table from row-major entries, checking shape and closure.
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::Empty);
        }
        if entries.len() != order * order {
            return Err(AlgebraError::TableShape {
                order,
                entries: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|e| e.0 >= order) {
            return Err(AlgebraError::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: entries[pos].0,
                order,
            });
        }
        Ok(CayleyTable { order, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(AlgebraError::TableShape {
                    order,
                    entries: order * row.len(),
                });
            }
            entries.extend(row.iter().copied().map(Element));
        }
        Self::new(order, entries)
    }

    /// Tabulates `op` over all pairs. `op` must return indices below `order`.
    pub fn from_fn(order: usize, mut op: impl FnMut(Element, Element) -> Element) -> Self {
        assert!(order > 0, "a table needs at least one element");
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = op(Element(x), Element(y));
                assert!(v.0 < order, "operation left the carrier: {v} >= {order}");
                entries.push(v);
            }
        }
        CayleyTable { order, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.entries[x.0 * self.order + y.0]
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.entries[x.0 * self.order..(x.0 + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> + '_ {
        self.entries.chunks(self.order)
    }

    /// Cells where `self` and `other` differ, as `(row, col, self, other)`.
    /// Tables of different order differ everywhere; this returns `None` then.
    pub fn diff(&self, other: &CayleyTable) -> Option<Vec<(Element, Element, Element, Element)>> {
        if self.order != other.order {
            return None;
        }
        let mut out = Vec::new();
        for x in 0..self.order {
            for y in 0..self.order {
                let (a, b) = (
                    self.get(Element(x), Element(y)),
                    other.get(Element(x), Element(y)),
                );
                if a != b {
                    out.push((Element(x), Element(y), a, b));
                }
            }
        }
        Some(out)
    }
}

/// Designated constants supplied at construction. Which ones are required
/// depends on the [`AlgebraKind`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constants {
    pub zero: Option<Element>,
    pub unit: Option<Element>,
}

/// A validated finite algebra of one of the supported kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    kind: AlgebraKind,
    names: Vec<String>,
    table: CayleyTable,
    zero: Element,
    unit: Option<Element>,
    /// Complement row as supplied by the caller, kept for rendering.
    explicit_complement: Option<Vec<Element>>,
    /// Complement in effect: explicit, or derived from the table.
    complement: Option<Vec<Element>>,
}

/// The order relation `x ≤ y ⇔ x∗y = θ`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRelation {
    order: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    pub fn from_fn(order: usize, mut leq: impl FnMut(Element, Element) -> bool) -> Self {
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                cells.push(leq(Element(x), Element(y)));
            }
        }
        OrderRelation { order, leq: cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.leq[x.0 * self.order + y.0]
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.order).all(|x| self.leq(Element(x), Element(x)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs()
            .all(|(x, y)| x == y || !(self.leq(x, y) && self.leq(y, x)))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs().all(|(x, y)| {
            !self.leq(x, y)
                || (0..self.order).all(|z| !self.leq(y, Element(z)) || self.leq(x, Element(z)))
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    pub fn is_total(&self) -> bool {
        self.pairs().all(|(x, y)| self.leq(x, y) || self.leq(y, x))
    }

    /// The greatest element, if one exists.
    pub fn top(&self) -> Option<Element> {
        (0..self.order)
            .map(Element)
            .find(|&t| (0..self.order).all(|x| self.leq(Element(x), t)))
    }

    /// Number of elements strictly above and strictly below `x`.
    pub fn degrees(&self, x: Element) -> (usize, usize) {
        let above = (0..self.order)
            .filter(|&y| y != x.0 && self.leq(x, Element(y)))
            .count();
        let below = (0..self.order)
            .filter(|&y| y != x.0 && self.leq(Element(y), x))
            .count();
        (above, below)
    }

    fn pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        let n = self.order;
        (0..n).flat_map(move |x| (0..n).map(move |y| (Element(x), Element(y))))
    }
}

impl FiniteAlgebra {
    /// Validates and assembles an algebra. Checks shape, closure, name
    /// uniqueness and the consistency of designated constants; performs no
    /// axiom checking.
    ///
    /// Per kind:
    /// * BCK needs `zero`. A declared `unit` must be an upper bound. An
    ///   explicit complement must agree with `1∗x` whenever a bound exists.
    /// * Wajsberg needs `unit`. The zero is the complement of `1` when a
    ///   complement row is given, otherwise the unique `z` with `z∘y = 1` for
    ///   all `y`. An explicit complement must agree with `x∘θ`.
    /// * MV needs `zero` and a complement row; `1 := θ′`.
    pub fn new(
        kind: AlgebraKind,
        names: Vec<String>,
        table: CayleyTable,
        constants: Constants,
        complement: Option<Vec<Element>>,
    ) -> Result<Self, AlgebraError> {
        let n = table.order();
        if names.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                names: names.len(),
                order: n,
            });
        }
        let mut seen = HashSet::with_capacity(n);
        for name in &names {
            if name.is_empty() || name.chars().any(char::is_whitespace) || name.starts_with('#') {
                return Err(AlgebraError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(AlgebraError::DuplicateName(name.clone()));
            }
        }
        for (constant, value) in [("zero", constants.zero), ("one", constants.unit)] {
            if let Some(v) = value {
                if v.0 >= n {
                    return Err(AlgebraError::ConstantOutOfRange {
                        constant,
                        value: v.0,
                        order: n,
                    });
                }
            }
        }
        if let Some(c) = &complement {
            if c.len() != n {
                return Err(AlgebraError::ComplementLength {
                    len: c.len(),
                    order: n,
                });
            }
            if let Some(i) = c.iter().position(|v| v.0 >= n) {
                return Err(AlgebraError::ComplementOutOfRange {
                    element: i,
                    value: c[i].0,
                    order: n,
                });
            }
        }

        let (zero, unit, effective) = match kind {
            AlgebraKind::Bck => {
                let zero = constants.zero.ok_or(AlgebraError::MissingConstant {
                    kind,
                    constant: "zero",
                })?;
                let is_top = |t: Element| (0..n).all(|x| table.get(Element(x), t) == zero);
                if let Some(u) = constants.unit {
                    if !is_top(u) {
                        return Err(AlgebraError::UnitNotTop(u.0));
                    }
                }
                let bound = constants
                    .unit
                    .or_else(|| (0..n).map(Element).find(|&t| is_top(t)));
                let derived = bound.map(|one| {
                    (0..n)
                        .map(|x| table.get(one, Element(x)))
                        .collect::<Vec<_>>()
                });
                let effective = reconcile(complement.as_deref(), derived)?;
                (zero, constants.unit, effective)
            }
            AlgebraKind::Wajsberg => {
                let unit = constants.unit.ok_or(AlgebraError::MissingConstant {
                    kind,
                    constant: "one",
                })?;
                let derived_zero = match &complement {
                    Some(c) => c[unit.0],
                    None => {
                        let mut candidates = (0..n)
                            .map(Element)
                            .filter(|&z| (0..n).all(|y| table.get(z, Element(y)) == unit));
                        match (candidates.next(), candidates.next()) {
                            (Some(z), None) => z,
                            _ => constants.zero.ok_or(AlgebraError::UnderivableZero)?,
                        }
                    }
                };
                if let Some(z) = constants.zero {
                    if z != derived_zero {
                        return Err(AlgebraError::ConstantMismatch {
                            constant: "zero",
                            declared: z.0,
                            derived: derived_zero.0,
                        });
                    }
                }
                let derived = (0..n)
                    .map(|x| table.get(Element(x), derived_zero))
                    .collect();
                let effective = reconcile(complement.as_deref(), Some(derived))?;
                (derived_zero, Some(unit), effective)
            }
            AlgebraKind::Mv => {
                let zero = constants.zero.ok_or(AlgebraError::MissingConstant {
                    kind,
                    constant: "zero",
                })?;
                let c = complement
                    .as_ref()
                    .ok_or(AlgebraError::MissingComplement { kind })?;
                let unit = c[zero.0];
                if let Some(u) = constants.unit {
                    if u != unit {
                        return Err(AlgebraError::ConstantMismatch {
                            constant: "one",
                            declared: u.0,
                            derived: unit.0,
                        });
                    }
                }
                (zero, Some(unit), Some(c.clone()))
            }
        };

        Ok(FiniteAlgebra {
            kind,
            names,
            table,
            zero,
            unit,
            explicit_complement: complement,
            complement: effective,
        })
    }

    /// The one-element BCK algebra `{θ}`.
    pub fn trivial() -> Self {
        let table = CayleyTable::from_fn(1, |_, _| Element(0));
        FiniteAlgebra::new(
            AlgebraKind::Bck,
            vec!["0".to_string()],
            table,
            Constants {
                zero: Some(Element(0)),
                unit: None,
            },
            None,
        )
        .expect("trivial algebra is well formed")
    }

    /// BCK algebra with default names `0..n` from a row-major table.
    pub fn bck_from_rows(rows: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let table = CayleyTable::from_rows(rows)?;
        let names = default_names(table.order());
        FiniteAlgebra::new(
            AlgebraKind::Bck,
            names,
            table,
            Constants {
                zero: Some(Element(0)),
                unit: None,
            },
            None,
        )
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.order()).map(Element)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Element) -> &str {
        &self.names[x.0]
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name).map(Element)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table.get(x, y)
    }

    /// `θ`: designated for BCK and MV, derived for Wajsberg.
    pub fn zero(&self) -> Element {
        self.zero
    }

    /// `1`: designated for Wajsberg, `θ′` for MV, and the declared bound
    /// (if any) for BCK. See [`FiniteAlgebra::bound_element`] for the
    /// table-derived bound.
    pub fn unit(&self) -> Option<Element> {
        self.unit
    }

    /// The complement row exactly as it was supplied at construction.
    pub fn explicit_complement(&self) -> Option<&[Element]> {
        self.explicit_complement.as_deref()
    }

    /// The complement map in effect, explicit or derived.
    pub fn complement_map(&self) -> Option<&[Element]> {
        self.complement.as_deref()
    }

    /// The derived order `x ≤ y ⇔ x∗y = θ` of a BCK algebra.
    pub fn derived_order(&self) -> Result<OrderRelation, AlgebraError> {
        self.expect_kind(AlgebraKind::Bck)?;
        Ok(OrderRelation::from_fn(self.order(), |x, y| {
            self.op(x, y) == self.zero
        }))
    }

    /// The natural order for any kind: `x∗y = θ` (BCK), `x∘y = 1`
    /// (Wajsberg), `x′⊕y = 1` (MV).
    pub fn natural_order(&self) -> OrderRelation {
        match self.kind {
            AlgebraKind::Bck => {
                OrderRelation::from_fn(self.order(), |x, y| self.op(x, y) == self.zero)
            }
            AlgebraKind::Wajsberg => {
                let one = self.unit.expect("wajsberg algebras carry a unit");
                OrderRelation::from_fn(self.order(), |x, y| self.op(x, y) == one)
            }
            AlgebraKind::Mv => {
                let one = self.unit.expect("mv algebras carry a unit");
                let neg = self
                    .complement
                    .as_ref()
                    .expect("mv algebras carry a complement");
                OrderRelation::from_fn(self.order(), |x, y| self.op(neg[x.0], y) == one)
            }
        }
    }

    /// The element `1` with `x ≤ 1` for every `x`, if the BCK algebra is
    /// bounded. Unique by antisymmetry.
    pub fn bound_element(&self) -> Result<Option<Element>, AlgebraError> {
        self.expect_kind(AlgebraKind::Bck)?;
        Ok(self
            .elements()
            .find(|&t| self.elements().all(|x| self.op(x, t) == self.zero)))
    }

    /// `x̄`: `1∗x` for a bounded BCK algebra, the stored or derived
    /// complement otherwise.
    pub fn complement_of(&self, x: Element) -> Result<Element, AlgebraError> {
        self.complement
            .as_ref()
            .map(|c| c[x.0])
            .ok_or(AlgebraError::NoComplement(x))
    }

    /// Elements with `x̄̄ = x`.
    pub fn involutions(&self) -> Result<Vec<Element>, AlgebraError> {
        let mut out = Vec::new();
        for x in self.elements() {
            if self.complement_of(self.complement_of(x)?)? == x {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Same carrier and constants, different table and kind. Used by the
    /// converters, which keep indices and names unchanged.
    pub(crate) fn with_table(
        &self,
        kind: AlgebraKind,
        table: CayleyTable,
        constants: Constants,
        complement: Option<Vec<Element>>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        FiniteAlgebra::new(kind, self.names.clone(), table, constants, complement)
    }

    /// The same algebra under new element names.
    pub fn with_names(&self, names: Vec<String>) -> Result<FiniteAlgebra, AlgebraError> {
        FiniteAlgebra::new(
            self.kind,
            names,
            self.table.clone(),
            Constants {
                zero: Some(self.zero),
                unit: self.unit,
            },
            self.explicit_complement.clone(),
        )
    }

    pub(crate) fn expect_kind(&self, expected: AlgebraKind) -> Result<(), AlgebraError> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(AlgebraError::WrongKind {
                expected,
                found: self.kind,
            })
        }
    }

    /// Renders a set of elements as `{a,b,c}` using element names.
    pub fn format_set(&self, members: impl IntoIterator<Item = Element>) -> String {
        let names: Vec<&str> = members.into_iter().map(|e| self.name(e)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// `"0"`, `"1"`, … as element names.
pub fn default_names(order: usize) -> Vec<String> {
    (0..order).map(|i| i.to_string()).collect()
}

fn reconcile(
    explicit: Option<&[Element]>,
    derived: Option<Vec<Element>>,
) -> Result<Option<Vec<Element>>, AlgebraError> {
    match (explicit, derived) {
        (Some(e), Some(d)) => {
            if let Some(i) = (0..e.len()).find(|&i| e[i] != d[i]) {
                return Err(AlgebraError::ComplementMismatch {
                    element: i,
                    explicit: e[i].0,
                    derived: d[i].0,
                });
            }
            Ok(Some(d))
        }
        (Some(e), None) => Ok(Some(e.to_vec())),
        (None, d) => Ok(d),
    }
}
