//! Exhaustive axiom checking over Cayley tables.
//!
//! Each check loops over every tuple of elements in lexicographic order and
//! records the first counterexample per axiom. All failing axioms are
//! reported, not just the first one. Witnesses can be replayed with
//! [`Axiom::holds`], so a report certifies itself.

use std::fmt;

use crate::algebra::{Element, FiniteAlgebra};

/// A single quantified law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `((x∗y)∗(x∗z))∗(z∗y) = θ`
    Bci1,
    /// `(x∗(x∗y))∗y = θ`
    Bci2,
    /// `x∗x = θ`
    Bci3,
    /// `x∗y = θ ∧ y∗x = θ ⇒ x = y`
    Bci4,
    /// `θ∗x = θ`
    Bck5,
    /// `x∗(x∗y) = y∗(y∗x)`
    Commutative,
    /// `x∗(y∗x) = x`
    Implicative,
    /// `(x∗y)∗z = (x∗z)∗(y∗z)`
    PositiveImplicative,
    /// The algebra carries a complement map.
    MvComplement,
    /// `(x⊕y)⊕z = x⊕(y⊕z)`
    MvAssociative,
    /// `x⊕y = y⊕x`
    MvCommutative,
    /// `x⊕θ = x`
    MvIdentity,
    /// `(x′)′ = x`
    MvDoubleNegation,
    /// `x⊕θ′ = θ′`
    MvAbsorbing,
    /// `(x′⊕y)′⊕y = (y′⊕x)′⊕x`
    MvLukasiewicz,
    /// `1∘x = x`
    WajsbergUnit,
    /// `(x∘y)∘((y∘z)∘(x∘z)) = 1`
    WajsbergTransitivity,
    /// `(x∘y)∘y = (y∘x)∘x`
    WajsbergSymmetry,
    /// `(x̄∘ȳ)∘(y∘x) = 1`
    WajsbergContraposition,
    /// `f` maps every source element into the target carrier.
    MorphismTotal,
    /// `f(x∗y) = f(x)∘f(y)`
    Homomorphism,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::Bci1 => "bci-1",
            Axiom::Bci2 => "bci-2",
            Axiom::Bci3 => "bci-3",
            Axiom::Bci4 => "bci-4",
            Axiom::Bck5 => "bck-5",
            Axiom::Commutative => "commutative",
            Axiom::Implicative => "implicative",
            Axiom::PositiveImplicative => "positive-implicative",
            Axiom::MvComplement => "mv-complement",
            Axiom::MvAssociative => "mv-associative",
            Axiom::MvCommutative => "mv-commutative",
            Axiom::MvIdentity => "mv-identity",
            Axiom::MvDoubleNegation => "mv-double-negation",
            Axiom::MvAbsorbing => "mv-absorbing",
            Axiom::MvLukasiewicz => "mv-lukasiewicz",
            Axiom::WajsbergUnit => "wajsberg-1",
            Axiom::WajsbergTransitivity => "wajsberg-2",
            Axiom::WajsbergSymmetry => "wajsberg-3",
            Axiom::WajsbergContraposition => "wajsberg-4",
            Axiom::MorphismTotal => "morphism-total",
            Axiom::Homomorphism => "homomorphism",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::Bci1 => "((x*y)*(x*z))*(z*y) = 0",
            Axiom::Bci2 => "(x*(x*y))*y = 0",
            Axiom::Bci3 => "x*x = 0",
            Axiom::Bci4 => "x*y = 0 and y*x = 0 imply x = y",
            Axiom::Bck5 => "0*x = 0",
            Axiom::Commutative => "x*(x*y) = y*(y*x)",
            Axiom::Implicative => "x*(y*x) = x",
            Axiom::PositiveImplicative => "(x*y)*z = (x*z)*(y*z)",
            Axiom::MvComplement => "complement map present",
            Axiom::MvAssociative => "(x+y)+z = x+(y+z)",
            Axiom::MvCommutative => "x+y = y+x",
            Axiom::MvIdentity => "x+0 = x",
            Axiom::MvDoubleNegation => "x'' = x",
            Axiom::MvAbsorbing => "x+0' = 0'",
            Axiom::MvLukasiewicz => "(x'+y)'+y = (y'+x)'+x",
            Axiom::WajsbergUnit => "1>x = x",
            Axiom::WajsbergTransitivity => "(x>y)>((y>z)>(x>z)) = 1",
            Axiom::WajsbergSymmetry => "(x>y)>y = (y>x)>x",
            Axiom::WajsbergContraposition => "(~x>~y)>(y>x) = 1",
            Axiom::MorphismTotal => "f(x) is defined",
            Axiom::Homomorphism => "f(x*y) = f(x)*f(y)",
        }
    }

    /// Number of universally quantified variables.
    pub fn arity(self) -> usize {
        match self {
            Axiom::MvComplement => 0,
            Axiom::Bci3
            | Axiom::Bck5
            | Axiom::MvIdentity
            | Axiom::MvDoubleNegation
            | Axiom::MvAbsorbing
            | Axiom::WajsbergUnit
            | Axiom::MorphismTotal => 1,
            Axiom::Bci2
            | Axiom::Bci4
            | Axiom::Commutative
            | Axiom::Implicative
            | Axiom::MvCommutative
            | Axiom::MvLukasiewicz
            | Axiom::WajsbergSymmetry
            | Axiom::WajsbergContraposition
            | Axiom::Homomorphism => 2,
            Axiom::Bci1
            | Axiom::PositiveImplicative
            | Axiom::MvAssociative
            | Axiom::WajsbergTransitivity => 3,
        }
    }

    /// Evaluates the law at one instantiation. Returns `None` for the
    /// morphism laws, which need a map and a second algebra; replay those
    /// with [`morphism_holds`].
    ///
    /// BCK laws read the table as `∗` with the algebra's zero, MV laws as
    /// `⊕`, Wajsberg laws as `∘` with the algebra's unit.
    pub fn holds(self, alg: &FiniteAlgebra, w: &[Element]) -> Option<bool> {
        let op = |a: Element, b: Element| alg.op(a, b);
        let zero = alg.zero();
        let one = alg.unit();
        let neg = alg.complement_map();
        // Wajsberg bar: stored complement, falling back to x∘θ.
        let bar = |a: Element| neg.map_or_else(|| op(a, zero), |c| c[a.0]);
        let at = |i: usize| w[i];
        let ok = match self {
            Axiom::Bci1 => {
                let (x, y, z) = (at(0), at(1), at(2));
                op(op(op(x, y), op(x, z)), op(z, y)) == zero
            }
            Axiom::Bci2 => {
                let (x, y) = (at(0), at(1));
                op(op(x, op(x, y)), y) == zero
            }
            Axiom::Bci3 => op(at(0), at(0)) == zero,
            Axiom::Bci4 => {
                let (x, y) = (at(0), at(1));
                !(op(x, y) == zero && op(y, x) == zero) || x == y
            }
            Axiom::Bck5 => op(zero, at(0)) == zero,
            Axiom::Commutative => {
                let (x, y) = (at(0), at(1));
                op(x, op(x, y)) == op(y, op(y, x))
            }
            Axiom::Implicative => {
                let (x, y) = (at(0), at(1));
                op(x, op(y, x)) == x
            }
            Axiom::PositiveImplicative => {
                let (x, y, z) = (at(0), at(1), at(2));
                op(op(x, y), z) == op(op(x, z), op(y, z))
            }
            Axiom::MvComplement => neg.is_some(),
            Axiom::MvAssociative => {
                let (x, y, z) = (at(0), at(1), at(2));
                op(op(x, y), z) == op(x, op(y, z))
            }
            Axiom::MvCommutative => op(at(0), at(1)) == op(at(1), at(0)),
            Axiom::MvIdentity => op(at(0), zero) == at(0),
            Axiom::MvDoubleNegation => match neg {
                Some(c) => c[c[at(0).0].0] == at(0),
                None => false,
            },
            Axiom::MvAbsorbing => match neg {
                Some(c) => op(at(0), c[zero.0]) == c[zero.0],
                None => false,
            },
            Axiom::MvLukasiewicz => match neg {
                Some(c) => {
                    let (x, y) = (at(0), at(1));
                    let lhs = op(c[op(c[x.0], y).0], y);
                    let rhs = op(c[op(c[y.0], x).0], x);
                    lhs == rhs
                }
                None => false,
            },
            Axiom::WajsbergUnit => one.is_some_and(|u| op(u, at(0)) == at(0)),
            Axiom::WajsbergTransitivity => {
                let (x, y, z) = (at(0), at(1), at(2));
                one.is_some_and(|u| op(op(x, y), op(op(y, z), op(x, z))) == u)
            }
            Axiom::WajsbergSymmetry => {
                let (x, y) = (at(0), at(1));
                op(op(x, y), y) == op(op(y, x), x)
            }
            Axiom::WajsbergContraposition => {
                let (x, y) = (at(0), at(1));
                one.is_some_and(|u| op(op(bar(x), bar(y)), op(y, x)) == u)
            }
            Axiom::MorphismTotal | Axiom::Homomorphism => return None,
        };
        Some(ok)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Which check produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Bci,
    Bck,
    Commutative,
    Implicative,
    PositiveImplicative,
    Mv,
    Wajsberg,
    Morphism,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Bci => "bci",
            CheckKind::Bck => "bck",
            CheckKind::Commutative => "commutative",
            CheckKind::Implicative => "implicative",
            CheckKind::PositiveImplicative => "positive-implicative",
            CheckKind::Mv => "mv",
            CheckKind::Wajsberg => "wajsberg",
            CheckKind::Morphism => "morphism",
        }
    }

    /// The laws this check evaluates, in report order.
    pub fn axioms(self) -> &'static [Axiom] {
        use Axiom::*;
        match self {
            CheckKind::Bci => &[Bci1, Bci2, Bci3, Bci4],
            CheckKind::Bck => &[Bci1, Bci2, Bci3, Bci4, Bck5],
            CheckKind::Commutative => &[Commutative],
            CheckKind::Implicative => &[Implicative],
            CheckKind::PositiveImplicative => &[PositiveImplicative],
            CheckKind::Mv => &[
                MvComplement,
                MvAssociative,
                MvCommutative,
                MvIdentity,
                MvDoubleNegation,
                MvAbsorbing,
                MvLukasiewicz,
            ],
            CheckKind::Wajsberg => &[
                WajsbergUnit,
                WajsbergTransitivity,
                WajsbergSymmetry,
                WajsbergContraposition,
            ],
            CheckKind::Morphism => &[MorphismTotal, Homomorphism],
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first counterexample found for one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub axiom: Axiom,
    pub witness: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checked: CheckKind,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&Failure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.failures.iter().map(|f| f.axiom).collect()
    }

    /// One line per failure, witnesses spelled with the algebra's names.
    pub fn describe(&self, alg: &FiniteAlgebra) -> String {
        if self.passed() {
            return format!("{}: PASS\n", self.checked);
        }
        let mut out = format!("{}: FAIL\n", self.checked);
        for f in &self.failures {
            let names: Vec<&str> = f
                .witness
                .iter()
                .map(|&e| if e.0 < alg.order() { alg.name(e) } else { "?" })
                .collect();
            out.push_str(&format!(
                "  {} [{}] fails at ({})\n",
                f.axiom,
                f.axiom.statement(),
                names.join(", ")
            ));
        }
        out
    }
}

/// Lexicographically first tuple (first coordinate slowest) where `holds`
/// is false.
pub(crate) fn first_counterexample(
    order: usize,
    arity: usize,
    mut holds: impl FnMut(&[Element]) -> bool,
) -> Option<Vec<Element>> {
    let mut w = vec![Element(0); arity];
    loop {
        if !holds(&w) {
            return Some(w);
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            w[i].0 += 1;
            if w[i].0 < order {
                break;
            }
            w[i].0 = 0;
        }
    }
}

fn run(alg: &FiniteAlgebra, checked: CheckKind) -> VerificationReport {
    let mut failures = Vec::new();
    for &axiom in checked.axioms() {
        let witness = first_counterexample(alg.order(), axiom.arity(), |w| {
            axiom.holds(alg, w).expect("single-algebra law")
        });
        if let Some(witness) = witness {
            failures.push(Failure { axiom, witness });
        }
        // Without a complement the remaining MV laws are meaningless.
        if axiom == Axiom::MvComplement && !failures.is_empty() {
            break;
        }
    }
    VerificationReport { checked, failures }
}

/// BCI axioms 1–4, reading the table as `∗` and the zero as `θ`.
pub fn check_bci(alg: &FiniteAlgebra) -> VerificationReport {
    run(alg, CheckKind::Bci)
}

/// BCI axioms plus `θ∗x = θ`.
pub fn check_bck(alg: &FiniteAlgebra) -> VerificationReport {
    run(alg, CheckKind::Bck)
}

pub fn is_commutative(alg: &FiniteAlgebra) -> VerificationReport {
    run(alg, CheckKind::Commutative)
}

pub fn is_implicative(alg: &FiniteAlgebra) -> VerificationReport {
    run(alg, CheckKind::Implicative)
}

pub fn is_positive_implicative(alg: &FiniteAlgebra) -> VerificationReport {
    run(alg, CheckKind::PositiveImplicative)
}

/// Abelian monoid laws for `⊕` with unit `θ`, plus the three MV laws.
pub fn check_mv(alg: &FiniteAlgebra) -> VerificationReport {
    run(alg, CheckKind::Mv)
}

/// The four Wajsberg laws, reading the table as `∘`.
pub fn check_wajsberg(alg: &FiniteAlgebra) -> VerificationReport {
    run(alg, CheckKind::Wajsberg)
}

/// Whether `f(x∗y) = f(x)∘f(y)` at `(x, y)`, where `∗` and `∘` are the
/// source and target tables.
pub fn morphism_holds(
    f: &[Element],
    source: &FiniteAlgebra,
    target: &FiniteAlgebra,
    x: Element,
    y: Element,
) -> bool {
    let image = |e: Element| f.get(e.0).copied().filter(|v| v.0 < target.order());
    match (image(x), image(y), image(source.op(x, y))) {
        (Some(fx), Some(fy), Some(fxy)) => fxy == target.op(fx, fy),
        _ => false,
    }
}

/// Checks that `f` (indexed by source element) is a homomorphism of the
/// main operations. Bijective passing maps are isomorphisms.
pub fn check_morphism(
    f: &[Element],
    source: &FiniteAlgebra,
    target: &FiniteAlgebra,
) -> VerificationReport {
    let mut failures = Vec::new();
    let defined = |x: usize| f.get(x).is_some_and(|v| v.0 < target.order());
    if let Some(x) = (0..source.order()).find(|&x| !defined(x)) {
        failures.push(Failure {
            axiom: Axiom::MorphismTotal,
            witness: vec![Element(x)],
        });
    } else if let Some(witness) = first_counterexample(source.order(), 2, |w| {
        morphism_holds(f, source, target, w[0], w[1])
    }) {
        failures.push(Failure {
            axiom: Axiom::Homomorphism,
            witness,
        });
    }
    VerificationReport {
        checked: CheckKind::Morphism,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> FiniteAlgebra {
        FiniteAlgebra::bck_from_rows(&[vec![0, 0], vec![1, 0]]).unwrap()
    }

    #[test]
    fn odometer_is_lexicographic() {
        let mut seen = Vec::new();
        let r = first_counterexample(2, 3, |w| {
            seen.push(w.to_vec());
            true
        });
        assert!(r.is_none());
        assert_eq!(seen.len(), 8);
        assert_eq!(seen[1], vec![Element(0), Element(0), Element(1)]);
        assert_eq!(seen[4], vec![Element(1), Element(0), Element(0)]);
    }

    #[test]
    fn two_chain_is_bci_bck_and_positive_implicative() {
        let c = chain2();
        assert!(check_bci(&c).passed());
        assert!(check_bck(&c).passed());
        assert!(is_positive_implicative(&c).passed());
        assert!(is_commutative(&c).passed());
        assert!(is_implicative(&c).passed());
    }

    #[test]
    fn trivial_algebra_passes_everything_bck() {
        let t = FiniteAlgebra::trivial();
        for r in [
            check_bck(&t),
            is_commutative(&t),
            is_implicative(&t),
            is_positive_implicative(&t),
        ] {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn diagonal_violation_reports_axiom_3() {
        let alg = FiniteAlgebra::bck_from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let r = check_bci(&alg);
        let f = r.failure(Axiom::Bci3).unwrap();
        assert_eq!(f.witness, vec![Element(1)]);
    }

    #[test]
    fn zero_row_violation_reports_axiom_5() {
        let alg = FiniteAlgebra::bck_from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let r = check_bck(&alg);
        assert_eq!(r.failure(Axiom::Bck5).unwrap().witness, vec![Element(1)]);
        assert!(!r.passed());
    }

    #[test]
    fn missing_complement_short_circuits_mv() {
        let alg = chain2();
        // Reading an unbounded-looking table as MV: chain2 is bounded, so a
        // complement exists; use the trivial-free 3-element unbounded one.
        let unbounded =
            FiniteAlgebra::bck_from_rows(&[vec![0, 0, 0], vec![1, 0, 1], vec![2, 2, 0]]).unwrap();
        let r = check_mv(&unbounded);
        assert_eq!(r.failed_axioms(), vec![Axiom::MvComplement]);
        assert!(check_mv(&alg).failure(Axiom::MvComplement).is_none());
    }

    #[test]
    fn morphism_checks_totality_first() {
        let c = chain2();
        let r = check_morphism(&[Element(0)], &c, &c);
        assert_eq!(r.failed_axioms(), vec![Axiom::MorphismTotal]);
        assert!(check_morphism(&[Element(0), Element(1)], &c, &c).passed());
        // Collapsing everything onto θ is a morphism into any BCK algebra.
        assert!(check_morphism(&[Element(0), Element(0)], &c, &c).passed());
        // Swapping θ and a is not.
        let swap = check_morphism(&[Element(1), Element(0)], &c, &c);
        assert_eq!(
            swap.failure(Axiom::Homomorphism).unwrap().witness,
            vec![Element(0), Element(0)]
        );
    }
}
