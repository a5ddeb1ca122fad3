//! Constructions between algebras: the Iseki extension and the translations
//! among bounded commutative BCK, MV and Wajsberg algebras.
//!
//! Converters keep the carrier (indices and names) and only replace the
//! table, kind and constants, so a roundtrip is literal table equality.
//! Every converter validates its input first and refuses invalid tables.

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraKind, CayleyTable, Constants, Element, FiniteAlgebra};
use crate::axioms::{self, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("input fails the {} check ({} axiom(s) violated)", .0.checked, .0.failures.len())]
    InvalidInput(VerificationReport),
    #[error("the BCK algebra has no greatest element")]
    Unbounded,
    #[error("cannot convert {from} to {to}")]
    Unsupported { from: AlgebraKind, to: AlgebraKind },
}

/// The tables `⊙` and `⊖` derived from an MV algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedMvOps {
    /// `x⊙y = (x′⊕y′)′`
    pub odot: CayleyTable,
    /// `x⊖y = x⊙y′`
    pub ominus: CayleyTable,
}

fn require(report: VerificationReport) -> Result<(), TransformError> {
    if report.passed() {
        Ok(())
    } else {
        Err(TransformError::InvalidInput(report))
    }
}

fn fresh_name(alg: &FiniteAlgebra) -> String {
    let mut name = "1".to_string();
    while alg.element(&name).is_some() {
        name.push('\'');
    }
    name
}

/// Adjoins a fresh top element `1` (index `n`) to a BCK algebra:
///
/// ```text
/// x∘y = x∗y  for x, y in X
/// x∘1 = θ    for x in X
/// 1∘y = 1    for y in X
/// 1∘1 = θ
/// ```
pub fn iseki_extension(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, TransformError> {
    alg.expect_kind(AlgebraKind::Bck)?;
    let n = alg.order();
    let top = Element(n);
    let zero = alg.zero();
    let table = CayleyTable::from_fn(n + 1, |x, y| match (x == top, y == top) {
        (false, false) => alg.op(x, y),
        (false, true) => zero,
        (true, false) => top,
        (true, true) => zero,
    });
    let mut names = alg.names().to_vec();
    names.push(fresh_name(alg));
    Ok(FiniteAlgebra::new(
        AlgebraKind::Bck,
        names,
        table,
        Constants {
            zero: Some(zero),
            unit: Some(top),
        },
        None,
    )?)
}

fn bounded_commutative(alg: &FiniteAlgebra) -> Result<Element, TransformError> {
    alg.expect_kind(AlgebraKind::Bck)?;
    require(axioms::check_bck(alg))?;
    require(axioms::is_commutative(alg))?;
    alg.bound_element()?.ok_or(TransformError::Unbounded)
}

/// Bounded commutative BCK to MV: `x′ = 1∗x`, `x⊕y = 1∗((1∗x)∗y)`.
pub fn bck_to_mv(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, TransformError> {
    let one = bounded_commutative(alg)?;
    let neg = |x: Element| alg.op(one, x);
    let table = CayleyTable::from_fn(alg.order(), |x, y| neg(alg.op(neg(x), y)));
    let complement = alg.elements().map(neg).collect();
    Ok(alg.with_table(
        AlgebraKind::Mv,
        table,
        Constants {
            zero: Some(alg.zero()),
            unit: Some(one),
        },
        Some(complement),
    )?)
}

fn valid_mv(alg: &FiniteAlgebra) -> Result<&[Element], TransformError> {
    alg.expect_kind(AlgebraKind::Mv)?;
    require(axioms::check_mv(alg))?;
    Ok(alg
        .complement_map()
        .expect("check_mv guarantees a complement"))
}

/// MV to bounded commutative BCK: `x∗y = x⊖y = (x′⊕y)′`, bounded by `θ′`.
pub fn mv_to_bck(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, TransformError> {
    let neg = valid_mv(alg)?;
    let table = CayleyTable::from_fn(alg.order(), |x, y| neg[alg.op(neg[x.0], y).0]);
    Ok(alg.with_table(
        AlgebraKind::Bck,
        table,
        Constants {
            zero: Some(alg.zero()),
            unit: Some(neg[alg.zero().0]),
        },
        None,
    )?)
}

/// `⊙` and `⊖` of a valid MV algebra.
pub fn derive_mv_ops(alg: &FiniteAlgebra) -> Result<DerivedMvOps, TransformError> {
    let neg = valid_mv(alg)?;
    let odot = CayleyTable::from_fn(alg.order(), |x, y| neg[alg.op(neg[x.0], neg[y.0]).0]);
    let ominus = CayleyTable::from_fn(alg.order(), |x, y| odot.get(x, neg[y.0]));
    Ok(DerivedMvOps { odot, ominus })
}

fn valid_wajsberg(alg: &FiniteAlgebra) -> Result<&[Element], TransformError> {
    alg.expect_kind(AlgebraKind::Wajsberg)?;
    require(axioms::check_wajsberg(alg))?;
    Ok(alg
        .complement_map()
        .expect("wajsberg algebras always carry a complement"))
}

/// Wajsberg to MV: `x⊕y = x̄∘y`, with `θ = 1̄`.
pub fn wajsberg_to_mv(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, TransformError> {
    let bar = valid_wajsberg(alg)?;
    let table = CayleyTable::from_fn(alg.order(), |x, y| alg.op(bar[x.0], y));
    Ok(alg.with_table(
        AlgebraKind::Mv,
        table,
        Constants {
            zero: Some(alg.zero()),
            unit: alg.unit(),
        },
        Some(bar.to_vec()),
    )?)
}

/// MV to Wajsberg: `x∘y = x′⊕y`, with `1 = θ′`.
pub fn mv_to_wajsberg(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, TransformError> {
    let neg = valid_mv(alg)?;
    let table = CayleyTable::from_fn(alg.order(), |x, y| alg.op(neg[x.0], y));
    Ok(alg.with_table(
        AlgebraKind::Wajsberg,
        table,
        Constants {
            zero: Some(alg.zero()),
            unit: Some(neg[alg.zero().0]),
        },
        Some(neg.to_vec()),
    )?)
}

/// `x∗y = (x∘y)‾` over a Wajsberg table, without validating the axioms.
/// The bar is the algebra's complement map.
pub fn bck_table_from_implication(alg: &FiniteAlgebra) -> CayleyTable {
    let bar = |e: Element| {
        alg.complement_of(e)
            .unwrap_or_else(|_| alg.op(e, alg.zero()))
    };
    CayleyTable::from_fn(alg.order(), |x, y| bar(alg.op(x, y)))
}

/// Wajsberg to bounded commutative BCK: `x∗y = (x∘y)‾`.
pub fn wajsberg_to_bck(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, TransformError> {
    valid_wajsberg(alg)?;
    let table = bck_table_from_implication(alg);
    Ok(alg.with_table(
        AlgebraKind::Bck,
        table,
        Constants {
            zero: Some(alg.zero()),
            unit: alg.unit(),
        },
        None,
    )?)
}

/// Dispatches to the converter for `alg.kind() → to`. Converting to the
/// same kind returns a clone.
pub fn convert(alg: &FiniteAlgebra, to: AlgebraKind) -> Result<FiniteAlgebra, TransformError> {
    use AlgebraKind::*;
    match (alg.kind(), to) {
        (a, b) if a == b => Ok(alg.clone()),
        (Bck, Mv) => bck_to_mv(alg),
        (Bck, Wajsberg) => mv_to_wajsberg(&bck_to_mv(alg)?),
        (Mv, Bck) => mv_to_bck(alg),
        (Mv, Wajsberg) => mv_to_wajsberg(alg),
        (Wajsberg, Mv) => wajsberg_to_mv(alg),
        (Wajsberg, Bck) => wajsberg_to_bck(alg),
        (from, to) => Err(TransformError::Unsupported { from, to }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{Axiom, CheckKind};

    fn chain2() -> FiniteAlgebra {
        FiniteAlgebra::bck_from_rows(&[vec![0, 0], vec![1, 0]]).unwrap()
    }

    #[test]
    fn iseki_of_trivial_is_two_chain() {
        let ext = iseki_extension(&FiniteAlgebra::trivial()).unwrap();
        assert_eq!(ext.table(), chain2().table());
        assert_eq!(ext.unit(), Some(Element(1)));
    }

    #[test]
    fn iseki_of_two_chain_loses_commutativity() {
        let ext = iseki_extension(&chain2()).unwrap();
        assert_eq!(ext.order(), 3);
        let (a, one) = (Element(1), Element(2));
        assert_eq!(ext.op(one, a), one);
        assert_eq!(ext.op(a, one), Element(0));
        assert!(axioms::check_bck(&ext).passed());
        let r = axioms::is_commutative(&ext);
        assert_eq!(r.failure(Axiom::Commutative).unwrap().witness, vec![a, one]);
        assert_eq!(ext.name(one), "1'");
    }

    #[test]
    fn fresh_name_avoids_collisions() {
        let ext = iseki_extension(&iseki_extension(&FiniteAlgebra::trivial()).unwrap()).unwrap();
        assert_eq!(ext.names(), &["0", "1", "1'"]);
    }

    #[test]
    fn boolean_two_element_roundtrips() {
        let mv = bck_to_mv(&chain2()).unwrap();
        assert!(axioms::check_mv(&mv).passed());
        // θ⊕θ = θ
        assert_eq!(mv.op(Element(0), Element(0)), Element(0));
        assert_eq!(mv_to_bck(&mv).unwrap().table(), chain2().table());
        let w = mv_to_wajsberg(&mv).unwrap();
        assert!(axioms::check_wajsberg(&w).passed());
        assert_eq!(wajsberg_to_mv(&w).unwrap().table(), mv.table());
        assert_eq!(wajsberg_to_bck(&w).unwrap().table(), chain2().table());
    }

    #[test]
    fn converters_fail_closed() {
        let unbounded =
            FiniteAlgebra::bck_from_rows(&[vec![0, 0, 0], vec![1, 0, 1], vec![2, 2, 0]]).unwrap();
        assert_eq!(
            bck_to_mv(&unbounded).unwrap_err(),
            TransformError::Unbounded
        );
        let ext = iseki_extension(&chain2()).unwrap();
        assert!(
            matches!(bck_to_mv(&ext), Err(TransformError::InvalidInput(r)) if r.checked == CheckKind::Commutative)
        );
        assert!(matches!(
            wajsberg_to_mv(&chain2()),
            Err(TransformError::Algebra(AlgebraError::WrongKind { .. }))
        ));
    }
}
