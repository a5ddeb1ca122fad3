//! Golden checks over the corpus of published example tables.
//!
//! Each example `ex3_k` is a pair of fixtures: the implication table `∘ₖ`
//! of a Wajsberg algebra (`ex3_k_wajsberg.alg`) and the printed table `∗ₖ`
//! of its associated bounded commutative BCK algebra (`ex3_k_bck.alg`).
//! Fixtures hold the tables exactly as printed. This module recomputes
//! everything derivable from them and reports agreement line by line;
//! printed cells that disagree with the recomputation are listed with
//! their coordinates instead of being corrected.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::FiniteAlgebra;
use crate::axioms::{self, VerificationReport};
use crate::enumerate::{direct_product, lukasiewicz_chain};
use crate::format::{parse_algebra, FormatError};
use crate::iso::find_isomorphism;
use crate::substructures::{self, Subset};
use crate::transforms;

/// What the published example states about one algebra.
#[derive(Clone, Copy, Debug)]
pub struct PrintedExample {
    pub id: &'static str,
    /// Chain sizes whose product the algebra is expected to be.
    pub factors: &'static [usize],
    /// Printed proper subalgebras, space separated, one letter per element.
    pub subalgebras: &'static str,
    /// Printed proper ideals, same notation.
    pub ideals: &'static str,
}

pub const PRINTED: [PrintedExample; 7] = [
    PrintedExample {
        id: "ex3_1",
        factors: &[4],
        subalgebras: "OA OB OE OAB",
        ideals: "",
    },
    PrintedExample {
        id: "ex3_2",
        factors: &[2, 2],
        subalgebras: "OA OB OE OAB",
        ideals: "OA OB",
    },
    PrintedExample {
        id: "ex3_3",
        factors: &[6],
        subalgebras: "OA OB OC OD OE OAB OBD OABC OABCD",
        ideals: "",
    },
    PrintedExample {
        id: "ex3_4",
        factors: &[2, 3],
        subalgebras: "OA OB OC OD OE OAB OABC OABCD OAC OACD",
        ideals: "OAB OC",
    },
    PrintedExample {
        id: "ex3_5",
        factors: &[2, 3],
        subalgebras: "OA OB OC OD OE OBC OCD OABC OABCD",
        ideals: "OCD OB",
    },
    PrintedExample {
        id: "ex3_6",
        factors: &[8],
        subalgebras: "OX OY OZ OT OU OV OE OXY OXYZ OXYZT OXYZTU OXYZTUV",
        ideals: "",
    },
    PrintedExample {
        id: "ex3_7",
        factors: &[2, 4],
        subalgebras: "OX OY OZ OT OU OV OE OXY OXYZ OTY OTYV OXYZT OXYZTU OXYZTUV",
        ideals: "OYTV OX",
    },
];

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
}

/// `∘ₖ` and printed `∗ₖ` of one example.
#[derive(Clone, Debug)]
pub struct ExamplePair {
    pub wajsberg: FiniteAlgebra,
    pub bck: FiniteAlgebra,
}

pub fn load_fixture(path: &Path) -> Result<FiniteAlgebra, GoldenError> {
    let text = fs::read_to_string(path).map_err(|source| GoldenError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_algebra(&text).map_err(|source| GoldenError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_example(dir: &Path, id: &str) -> Result<ExamplePair, GoldenError> {
    Ok(ExamplePair {
        wajsberg: load_fixture(&dir.join(format!("{id}_wajsberg.alg")))?,
        bck: load_fixture(&dir.join(format!("{id}_bck.alg")))?,
    })
}

/// Parses the compact one-letter-per-element notation into subsets.
pub fn printed_sets(alg: &FiniteAlgebra, compact: &str) -> Option<Vec<Subset>> {
    compact
        .split_whitespace()
        .map(|word| {
            let names: Vec<String> = word.chars().map(String::from).collect();
            Subset::from_names(alg, names.iter().map(String::as_str))
        })
        .collect()
}

/// Printed `∗` cells that differ from `(x∘y)‾`, as
/// `(row, col, printed, recomputed)` names.
pub fn mismatched_cells(pair: &ExamplePair) -> Vec<(String, String, String, String)> {
    let recomputed = transforms::bck_table_from_implication(&pair.wajsberg);
    let alg = &pair.bck;
    pair.bck
        .table()
        .diff(&recomputed)
        .unwrap_or_default()
        .into_iter()
        .map(|(x, y, printed, derived)| {
            (
                alg.name(x).to_string(),
                alg.name(y).to_string(),
                alg.name(printed).to_string(),
                alg.name(derived).to_string(),
            )
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A discrepancy in the printed material that does not invalidate the
    /// tool's own computation (for instance an incomplete printed list).
    Note,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Note => "NOTE",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub example: String,
    pub check: &'static str,
    pub status: Status,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoldenReport {
    pub lines: Vec<CheckLine>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }

    pub fn line(&self, example: &str, check: &str) -> Option<&CheckLine> {
        self.lines
            .iter()
            .find(|l| l.example == example && l.check == check)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!("{} {:<24} {}\n", l.example, l.check, l.status));
            for d in &l.details {
                out.push_str(&format!("    {d}\n"));
            }
        }
        let count = |s: Status| self.lines.iter().filter(|l| l.status == s).count();
        out.push_str(&format!(
            "summary: {} pass, {} note, {} fail\n",
            count(Status::Pass),
            count(Status::Note),
            count(Status::Fail)
        ));
        out
    }
}

struct Recorder<'a> {
    example: &'a str,
    lines: &'a mut Vec<CheckLine>,
}

impl Recorder<'_> {
    fn push(&mut self, check: &'static str, status: Status, details: Vec<String>) {
        self.lines.push(CheckLine {
            example: self.example.to_string(),
            check,
            status,
            details,
        });
    }

    fn report(&mut self, check: &'static str, alg: &FiniteAlgebra, reports: &[VerificationReport]) {
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed())
            .flat_map(|r| {
                r.describe(alg)
                    .lines()
                    .map(str::to_string)
                    .collect::<Vec<_>>()
            })
            .collect();
        let status = if failed.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(check, status, failed);
    }

    fn flag(&mut self, check: &'static str, ok: bool, details: Vec<String>) {
        self.push(check, if ok { Status::Pass } else { Status::Fail }, details);
    }
}

fn names_of(alg: &FiniteAlgebra, sets: &[Subset]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| s.display(alg)).collect();
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(" ")
    }
}

fn compare_lists(
    rec: &mut Recorder<'_>,
    check: &'static str,
    alg: &FiniteAlgebra,
    computed: &[Subset],
    printed: &[Subset],
) {
    let c: BTreeSet<_> = computed
        .iter()
        .map(|s| s.members().collect::<Vec<_>>())
        .collect();
    let p: BTreeSet<_> = printed
        .iter()
        .map(|s| s.members().collect::<Vec<_>>())
        .collect();
    let missing: Vec<Subset> = printed
        .iter()
        .filter(|s| !c.contains(&s.members().collect::<Vec<_>>()))
        .copied()
        .collect();
    let extra: Vec<Subset> = computed
        .iter()
        .filter(|s| !p.contains(&s.members().collect::<Vec<_>>()))
        .copied()
        .collect();
    let mut details = vec![format!("computed: {}", names_of(alg, computed))];
    let status = if !missing.is_empty() {
        details.push(format!(
            "printed but not found: {}",
            names_of(alg, &missing)
        ));
        Status::Fail
    } else if !extra.is_empty() {
        details.push(format!("found but not printed: {}", names_of(alg, &extra)));
        Status::Note
    } else {
        Status::Pass
    };
    rec.push(check, status, details);
}

fn check_example(ex: &PrintedExample, pair: &ExamplePair, lines: &mut Vec<CheckLine>) {
    let mut rec = Recorder {
        example: ex.id,
        lines,
    };
    let (w, b) = (&pair.wajsberg, &pair.bck);

    let waj = axioms::check_wajsberg(w);
    let w_valid = waj.passed();
    rec.report("wajsberg-axioms", w, &[waj]);

    let mismatches = mismatched_cells(pair);
    let details = mismatches
        .iter()
        .map(|(x, y, p, r)| format!("cell ({x},{y}): printed {p}, recomputed {r}"))
        .collect();
    rec.flag("bck-from-implication", mismatches.is_empty(), details);

    let bck_reports = [axioms::check_bck(b), axioms::is_commutative(b)];
    let b_valid = bck_reports.iter().all(VerificationReport::passed);
    rec.report("bck-axioms", b, &bck_reports);
    let bound = b.bound_element().ok().flatten();
    rec.flag(
        "bounded",
        bound.is_some(),
        bound
            .map(|e| vec![format!("top = {}", b.name(e))])
            .unwrap_or_default(),
    );

    if ex.factors.len() == 1 {
        let chain = lukasiewicz_chain(ex.factors[0]).expect("chain sizes are >= 2");
        let diff = chain.table().diff(w.table()).unwrap_or_default();
        let details = diff
            .iter()
            .map(|(x, y, c, p)| {
                format!(
                    "cell ({},{}): chain {}, printed {}",
                    w.name(*x),
                    w.name(*y),
                    w.name(*c),
                    w.name(*p)
                )
            })
            .collect();
        rec.flag("chain-reconstruction", diff.is_empty(), details);
    }

    let chains: Vec<FiniteAlgebra> = ex
        .factors
        .iter()
        .map(|&r| lukasiewicz_chain(r).expect("chain sizes are >= 2"))
        .collect();
    let product = direct_product(&chains).expect("chains are wajsberg algebras");
    let label: Vec<String> = ex.factors.iter().map(usize::to_string).collect();
    let label = format!("chain product {}", label.join("x"));
    let mapping = |src: &FiniteAlgebra, dst: &FiniteAlgebra, f: &[crate::algebra::Element]| {
        let pairs: Vec<String> = src
            .elements()
            .map(|x| format!("{}->{}", src.name(x), dst.name(f[x.0])))
            .collect();
        pairs.join(" ")
    };
    match find_isomorphism(w, &product) {
        Some(f) => rec.push(
            "wajsberg-isomorphism",
            Status::Pass,
            vec![format!("{label}: {}", mapping(w, &product, &f))],
        ),
        None => rec.push(
            "wajsberg-isomorphism",
            Status::Fail,
            vec![format!("not isomorphic to {label}")],
        ),
    }
    let product_bck = transforms::wajsberg_to_bck(&product).expect("products are valid");
    match find_isomorphism(b, &product_bck) {
        Some(f) => rec.push(
            "bck-isomorphism",
            Status::Pass,
            vec![format!("{label}: {}", mapping(b, &product_bck, &f))],
        ),
        None => rec.push(
            "bck-isomorphism",
            Status::Fail,
            vec![format!("not isomorphic to {label}")],
        ),
    }

    let subs = substructures::subalgebras(b, true).expect("fixtures are small");
    let ideals = substructures::ideals(b, true).expect("fixtures are small");
    let printed_subs = printed_sets(b, ex.subalgebras).expect("printed names are declared");
    let printed_ideals = printed_sets(b, ex.ideals).expect("printed names are declared");
    compare_lists(&mut rec, "subalgebras", b, &subs, &printed_subs);
    compare_lists(&mut rec, "ideals", b, &ideals, &printed_ideals);

    // Structural properties of the printed BCK table.
    let all_subs = substructures::subalgebras(b, false).expect("fixtures are small");
    let bad_subs: Vec<String> = all_subs
        .iter()
        .filter(|s| {
            !substructures::restrict(b, **s).is_some_and(|r| axioms::check_bck(&r).passed())
        })
        .map(|s| s.display(b))
        .collect();
    rec.flag("subalgebras-are-bck", bad_subs.is_empty(), bad_subs);
    let has_codim_one = all_subs.iter().any(|s| s.len() + 1 == b.order());
    rec.push(
        "subalgebra-of-order-n-1",
        if has_codim_one {
            Status::Pass
        } else {
            Status::Note
        },
        Vec::new(),
    );
    let all_ideals = substructures::ideals(b, false).expect("fixtures are small");
    let not_down: Vec<String> = all_ideals
        .iter()
        .filter(|s| !substructures::is_downward_closed(b, **s))
        .map(|s| s.display(b))
        .collect();
    rec.flag("ideals-downward-closed", not_down.is_empty(), not_down);
    let missing_closed: Vec<String> = all_ideals
        .iter()
        .filter(|s| substructures::is_subalgebra(b, **s) && !all_subs.contains(s))
        .map(|s| s.display(b))
        .collect();
    rec.flag(
        "closed-ideals-listed",
        missing_closed.is_empty(),
        missing_closed,
    );

    // Translations, only meaningful on valid inputs.
    if w_valid {
        let mv = transforms::wajsberg_to_mv(w).expect("validated");
        let back = transforms::mv_to_wajsberg(&mv).expect("image is a valid mv algebra");
        let via_mv = transforms::mv_to_bck(&mv).expect("image is a valid mv algebra");
        let direct = transforms::wajsberg_to_bck(w).expect("validated");
        let mv_again = transforms::wajsberg_to_mv(&back).expect("image is valid");
        let ok = back.table() == w.table()
            && mv_again.table() == mv.table()
            && via_mv.table() == direct.table();
        rec.flag("wajsberg-mv-roundtrip", ok, Vec::new());
    } else {
        rec.push(
            "wajsberg-mv-roundtrip",
            Status::Note,
            vec!["skipped: wajsberg table invalid".into()],
        );
    }
    if b_valid && bound.is_some() {
        let mv = transforms::bck_to_mv(b).expect("validated");
        let back = transforms::mv_to_bck(&mv).expect("image is a valid mv algebra");
        let ominus = transforms::derive_mv_ops(&mv)
            .expect("image is valid")
            .ominus;
        let ok = back.table() == b.table() && &ominus == b.table();
        rec.flag("bck-mv-roundtrip", ok, Vec::new());
        let involutive = b
            .involutions()
            .map(|v| v.len() == b.order())
            .unwrap_or(false);
        rec.flag("complement-involutive", involutive, Vec::new());
    } else {
        rec.push(
            "bck-mv-roundtrip",
            Status::Note,
            vec!["skipped: printed bck table invalid".into()],
        );
    }
}

/// Runs every golden check against the fixtures in `dir`.
pub fn check_corpus(dir: &Path) -> Result<GoldenReport, GoldenError> {
    let mut lines = Vec::new();
    for ex in &PRINTED {
        let pair = load_example(dir, ex.id)?;
        check_example(ex, &pair, &mut lines);
    }
    Ok(GoldenReport { lines })
}
