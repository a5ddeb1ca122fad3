//! Enumeration of finite Wajsberg algebras of a given order.
//!
//! For every unordered factorization `n = r₁⋯r_t` (factors ≥ 2, order of
//! factors ignored) one algebra is produced: the direct product of the
//! Łukasiewicz chains of sizes `r₁, …, r_t`. The number of such algebras is
//! `π_n`, the number of unordered factorizations of `n`.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraKind, CayleyTable, Constants, Element, FiniteAlgebra};
use crate::axioms::{self, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },
    #[error("direct product of no factors")]
    EmptyProduct,
    #[error("product factor {index} fails the wajsberg check")]
    InvalidFactor {
        index: usize,
        report: VerificationReport,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A multiset of factors `≥ 2` with product `n`, stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    n: usize,
    factors: Vec<usize>,
}

impl Factorization {
    /// Builds a factorization from factors in any order.
    pub fn new(mut factors: Vec<usize>) -> Option<Self> {
        if factors.is_empty() || factors.iter().any(|&f| f < 2) {
            return None;
        }
        factors.sort_unstable();
        let n = factors
            .iter()
            .try_fold(1usize, |acc, &f| acc.checked_mul(f))?;
        Some(Factorization { n, factors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// `2x2x3`-style label, used in file names.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(usize::to_string).collect();
        parts.join("x")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All unordered factorizations of `n`, the singleton `{n}` included.
/// Sorted by number of factors, then lexicographically. Empty for `n = 1`.
pub fn factorizations(n: usize) -> Result<Vec<Factorization>, EnumerateError> {
    if n < 1 {
        return Err(EnumerateError::OrderTooSmall { min: 1, got: n });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    if n >= 2 {
        extend(n, 2, &mut prefix, &mut out);
    }
    out.sort_by(|a, b| {
        a.factors
            .len()
            .cmp(&b.factors.len())
            .then_with(|| a.factors.cmp(&b.factors))
    });
    Ok(out)
}

/// Factorizations of `rest` into non-decreasing factors `≥ min`.
fn extend(rest: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Factorization>) {
    let mut f = min;
    while f * f <= rest {
        if rest.is_multiple_of(f) {
            prefix.push(f);
            extend(rest / f, f, prefix, out);
            prefix.pop();
        }
        f += 1;
    }
    let mut factors = prefix.clone();
    factors.push(rest);
    out.push(Factorization {
        n: factors.iter().product(),
        factors,
    });
}

/// `π_n`.
pub fn pi(n: usize) -> Result<usize, EnumerateError> {
    factorizations(n).map(|f| f.len())
}

/// The Łukasiewicz chain `e₀ < … < e_{n−1}` as a Wajsberg algebra:
/// `e_i∘e_j = e_{min(n−1, n−1−i+j)}`, complement `e_i ↦ e_{n−1−i}`.
pub fn lukasiewicz_chain(n: usize) -> Result<FiniteAlgebra, EnumerateError> {
    if n < 2 {
        return Err(EnumerateError::OrderTooSmall { min: 2, got: n });
    }
    let top = n - 1;
    let table = CayleyTable::from_fn(n, |x, y| Element((top - x.0 + y.0).min(top)));
    let complement = (0..n).map(|i| Element(top - i)).collect();
    Ok(FiniteAlgebra::new(
        AlgebraKind::Wajsberg,
        crate::algebra::default_names(n),
        table,
        Constants {
            zero: Some(Element(0)),
            unit: Some(Element(top)),
        },
        Some(complement),
    )?)
}

/// Componentwise product of Wajsberg algebras. Elements are tuples indexed
/// in lexicographic order (first factor most significant); names join the
/// component names with `.`.
pub fn direct_product(parts: &[FiniteAlgebra]) -> Result<FiniteAlgebra, EnumerateError> {
    if parts.is_empty() {
        return Err(EnumerateError::EmptyProduct);
    }
    for (index, part) in parts.iter().enumerate() {
        part.expect_kind(AlgebraKind::Wajsberg)?;
        let report = axioms::check_wajsberg(part);
        if !report.passed() {
            return Err(EnumerateError::InvalidFactor { index, report });
        }
    }
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    let sizes: Vec<usize> = parts.iter().map(FiniteAlgebra::order).collect();
    let n: usize = sizes.iter().product();
    let decode = |mut i: usize| -> Vec<usize> {
        let mut digits = vec![0; sizes.len()];
        for (d, &s) in digits.iter_mut().zip(&sizes).rev() {
            *d = i % s;
            i /= s;
        }
        digits
    };
    let encode = |digits: &[usize]| {
        digits
            .iter()
            .zip(&sizes)
            .fold(0, |acc, (&d, &s)| acc * s + d)
    };
    let tuples: Vec<Vec<usize>> = (0..n).map(decode).collect();

    let table = CayleyTable::from_fn(n, |x, y| {
        let digits: Vec<usize> = parts
            .iter()
            .zip(tuples[x.0].iter().zip(&tuples[y.0]))
            .map(|(p, (&a, &b))| p.op(Element(a), Element(b)).0)
            .collect();
        Element(encode(&digits))
    });
    let lift = |pick: &dyn Fn(&FiniteAlgebra) -> Element| {
        let digits: Vec<usize> = parts.iter().map(|p| pick(p).0).collect();
        Element(encode(&digits))
    };
    let unit = lift(&|p| p.unit().expect("wajsberg unit"));
    let zero = lift(&|p| p.zero());
    let complement = tuples
        .iter()
        .map(|t| {
            let digits: Vec<usize> = parts
                .iter()
                .zip(t)
                .map(|(p, &d)| p.complement_map().expect("wajsberg complement")[d].0)
                .collect();
            Element(encode(&digits))
        })
        .collect();
    let names = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = parts
                .iter()
                .zip(t)
                .map(|(p, &d)| p.name(Element(d)))
                .collect();
            parts.join(".")
        })
        .collect();
    Ok(FiniteAlgebra::new(
        AlgebraKind::Wajsberg,
        names,
        table,
        Constants {
            zero: Some(zero),
            unit: Some(unit),
        },
        Some(complement),
    )?)
}

/// One generated algebra together with the factorization it came from.
#[derive(Clone, Debug)]
pub struct Enumerated {
    pub factorization: Factorization,
    pub algebra: FiniteAlgebra,
}

/// One Wajsberg algebra of order `n` per factorization of `n`.
pub fn enumerate_wajsberg(n: usize) -> Result<Vec<Enumerated>, EnumerateError> {
    if n < 2 {
        return Err(EnumerateError::OrderTooSmall { min: 2, got: n });
    }
    factorizations(n)?
        .into_iter()
        .map(|factorization| {
            let chains = factorization
                .factors()
                .iter()
                .map(|&r| lukasiewicz_chain(r))
                .collect::<Result<Vec<_>, _>>()?;
            let algebra = direct_product(&chains)?;
            Ok(Enumerated {
                factorization,
                algebra,
            })
        })
        .collect()
}
