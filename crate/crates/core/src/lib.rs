//! Finite BCK-, MV- and Wajsberg algebras represented as Cayley tables.
//!
//! The crate checks axiom systems exhaustively, translates between bounded
//! commutative BCK algebras, MV algebras and Wajsberg algebras, builds Iseki
//! extensions, enumerates Wajsberg algebras of a given order as products of
//! Łukasiewicz chains, searches for isomorphisms, and lists subalgebras and
//! ideals.

pub mod algebra;
pub mod axioms;
pub mod enumerate;
pub mod format;
pub mod golden;
pub mod iso;
pub mod substructures;
pub mod transforms;

pub use algebra::{
    AlgebraError, AlgebraKind, CayleyTable, Constants, Element, FiniteAlgebra, OrderRelation,
};
pub use axioms::{
    check_bci, check_bck, check_morphism, check_mv, check_wajsberg, is_commutative, is_implicative,
    is_positive_implicative, Axiom, CheckKind, Failure, VerificationReport,
};
pub use enumerate::{
    direct_product, enumerate_wajsberg, factorizations, lukasiewicz_chain, pi, EnumerateError,
    Enumerated, Factorization,
};
pub use format::{parse_algebra, render_algebra, AlgebraDocument, FormatError};
pub use iso::{find_isomorphism, order_isomorphism, poset_isomorphic};
pub use substructures::{ideals, is_ideal, is_subalgebra, subalgebras, Subset, SubstructureError};
pub use transforms::{
    bck_to_mv, convert, derive_mv_ops, iseki_extension, mv_to_bck, mv_to_wajsberg, wajsberg_to_bck,
    wajsberg_to_mv, DerivedMvOps, TransformError,
};
