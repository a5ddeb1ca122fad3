//! `bckalg`: verify, convert, extend, enumerate and compare finite algebras
//! stored in the line-oriented `.alg` format.
//!
//! Exit codes: 0 pass, 1 semantic failure, 2 usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bckalg::golden;
use bckalg::{
    axioms, enumerate_wajsberg, find_isomorphism, iseki_extension, iso, parse_algebra,
    render_algebra, substructures, transforms, AlgebraKind, FiniteAlgebra,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bckalg",
    version,
    about = "Finite BCK, MV and Wajsberg algebra toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bck,
    Wajsberg,
    Mv,
}

impl From<Kind> for AlgebraKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Bck => AlgebraKind::Bck,
            Kind::Wajsberg => AlgebraKind::Wajsberg,
            Kind::Mv => AlgebraKind::Mv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Wajsberg,
    Bck,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of the given kind, plus optional identities.
    Verify {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        implicative: bool,
        #[arg(long)]
        positive_implicative: bool,
        file: PathBuf,
    },
    /// Translate between bounded commutative BCK, MV and Wajsberg algebras.
    Convert {
        /// Expected kind of the input; defaults to the kind in the file.
        #[arg(long, value_enum)]
        from: Option<Kind>,
        #[arg(long, value_enum)]
        to: Kind,
        file: PathBuf,
    },
    /// Adjoin a fresh top element.
    Iseki { file: PathBuf },
    /// Generate one algebra per unordered factorization of the order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "wajsberg")]
        kind: EnumKind,
        /// Directory to write one `.alg` file per algebra into.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List proper subalgebras and/or ideals (both when neither flag is given).
    Sub {
        #[arg(long)]
        subalgebras: bool,
        #[arg(long)]
        ideals: bool,
        /// Also list {θ} and the whole carrier.
        #[arg(long)]
        all: bool,
        file: PathBuf,
    },
    /// Search for an isomorphism between two algebras.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Compare only the natural orders as posets.
        #[arg(long)]
        poset: bool,
    },
    /// Run the golden checks over a directory of example fixtures.
    CheckPaper { fixtures: PathBuf },
}

enum Failure {
    /// Semantic failure; output already printed.
    Semantic,
    Input(String),
}

type Outcome = Result<(), Failure>;

fn input<E: std::fmt::Display>(context: impl std::fmt::Display) -> impl FnOnce(E) -> Failure {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn load(path: &Path) -> Result<FiniteAlgebra, Failure> {
    let text = fs::read_to_string(path).map_err(input(path.display()))?;
    parse_algebra(&text).map_err(input(path.display()))
}

fn semantic(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Semantic)
    }
}

fn verify(
    kind: Kind,
    commutative: bool,
    implicative: bool,
    positive: bool,
    file: &Path,
) -> Outcome {
    let alg = load(file)?;
    let kind = AlgebraKind::from(kind);
    if alg.kind() != kind {
        return Err(Failure::Input(format!(
            "{}: file holds a {} algebra, not {kind}",
            file.display(),
            alg.kind()
        )));
    }
    let mut reports = vec![match kind {
        AlgebraKind::Bck => axioms::check_bck(&alg),
        AlgebraKind::Wajsberg => axioms::check_wajsberg(&alg),
        AlgebraKind::Mv => axioms::check_mv(&alg),
    }];
    if kind != AlgebraKind::Bck && (commutative || implicative || positive) {
        return Err(Failure::Input(
            "--commutative, --implicative and --positive-implicative apply to bck algebras".into(),
        ));
    }
    if commutative {
        reports.push(axioms::is_commutative(&alg));
    }
    if implicative {
        reports.push(axioms::is_implicative(&alg));
    }
    if positive {
        reports.push(axioms::is_positive_implicative(&alg));
    }
    for r in &reports {
        print!("{}", r.describe(&alg));
    }
    semantic(reports.iter().all(|r| r.passed()))
}

fn transform_failure(e: transforms::TransformError) -> Failure {
    eprintln!("error: {e}");
    if let transforms::TransformError::InvalidInput(_) = e {
        Failure::Semantic
    } else {
        Failure::Input(e.to_string())
    }
}

fn convert(from: Option<Kind>, to: Kind, file: &Path) -> Outcome {
    let alg = load(file)?;
    if let Some(from) = from {
        let from = AlgebraKind::from(from);
        if alg.kind() != from {
            return Err(Failure::Input(format!(
                "{}: file holds a {} algebra, not {from}",
                file.display(),
                alg.kind()
            )));
        }
    }
    match transforms::convert(&alg, to.into()) {
        Ok(out) => {
            print!("{}", render_algebra(&out));
            Ok(())
        }
        Err(e) => {
            if let transforms::TransformError::InvalidInput(report) = &e {
                print!("{}", report.describe(&alg));
            }
            Err(transform_failure(e))
        }
    }
}

fn iseki(file: &Path) -> Outcome {
    let alg = load(file)?;
    let ext = iseki_extension(&alg).map_err(transform_failure)?;
    print!("{}", render_algebra(&ext));
    Ok(())
}

fn enumerate(order: usize, kind: EnumKind, out: Option<&Path>) -> Outcome {
    let algebras = enumerate_wajsberg(order).map_err(input("enumerate"))?;
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(input(dir.display()))?;
    }
    println!("pi_{order} = {}", algebras.len());
    for e in &algebras {
        let (prefix, alg) = match kind {
            EnumKind::Wajsberg => ("w", e.algebra.clone()),
            EnumKind::Bck => (
                "b",
                transforms::wajsberg_to_bck(&e.algebra).map_err(transform_failure)?,
            ),
        };
        let name = format!("{prefix}{order}_{}.alg", e.factorization.label());
        match out {
            Some(dir) => {
                let path = dir.join(&name);
                fs::write(&path, render_algebra(&alg)).map_err(input(path.display()))?;
                println!("{}", path.display());
            }
            None => {
                println!("# {name}");
                print!("{}", render_algebra(&alg));
            }
        }
    }
    Ok(())
}

fn sub(list_subalgebras: bool, list_ideals: bool, all: bool, file: &Path) -> Outcome {
    let alg = load(file)?;
    let (list_subalgebras, list_ideals) = if list_subalgebras || list_ideals {
        (list_subalgebras, list_ideals)
    } else {
        (true, true)
    };
    let label = if all { "" } else { "proper " };
    let show = |heading: &str, sets: Vec<substructures::Subset>| {
        println!("{label}{heading} ({}):", sets.len());
        for s in sets {
            println!("  {}", s.display(&alg));
        }
    };
    if list_subalgebras {
        show(
            "subalgebras",
            substructures::subalgebras(&alg, !all).map_err(input(file.display()))?,
        );
    }
    if list_ideals {
        show(
            "ideals",
            substructures::ideals(&alg, !all).map_err(input(file.display()))?,
        );
    }
    Ok(())
}

fn isomorphism(a: &Path, b: &Path, poset: bool) -> Outcome {
    let (alg_a, alg_b) = (load(a)?, load(b)?);
    let mapping = if poset {
        iso::order_isomorphism(&alg_a.natural_order(), &alg_b.natural_order())
    } else {
        find_isomorphism(&alg_a, &alg_b)
    };
    match mapping {
        Some(f) => {
            for x in alg_a.elements() {
                println!("{} -> {}", alg_a.name(x), alg_b.name(f[x.index()]));
            }
            Ok(())
        }
        None => {
            println!("non-isomorphic");
            Err(Failure::Semantic)
        }
    }
}

fn check_paper(dir: &Path) -> Outcome {
    let report = golden::check_corpus(dir).map_err(|e| Failure::Input(e.to_string()))?;
    print!("{}", report.render());
    semantic(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify {
            kind,
            commutative,
            implicative,
            positive_implicative,
            file,
        } => verify(
            *kind,
            *commutative,
            *implicative,
            *positive_implicative,
            file,
        ),
        Command::Convert { from, to, file } => convert(*from, *to, file),
        Command::Iseki { file } => iseki(file),
        Command::Enumerate { order, kind, out } => enumerate(*order, *kind, out.as_deref()),
        Command::Sub {
            subalgebras,
            ideals,
            all,
            file,
        } => sub(*subalgebras, *ideals, *all, file),
        Command::Iso { a, b, poset } => isomorphism(a, b, *poset),
        Command::CheckPaper { fixtures } => check_paper(fixtures),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Semantic) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
