//! Reading input documents, writing outputs, and the exit-code taxonomy.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use hopfstab::exactlin::Subspace;
use hopfstab::format::{Document, Object};
use hopfstab::hopf::HopfData;
use hopfstab::modcom::{ComodAlg, ModAlg, ModuleRep};
use hopfstab::report::Report;
use hopfstab::Error;

#[derive(Debug)]
pub enum Failure {
    /// Bad invocation or unreadable file: exit 1.
    Usage(String),
    /// Malformed or inconsistent input data: exit 2.
    Parse(String),
    /// A check did not pass: exit 3.
    Check,
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Check => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Parse(m) => f.write_str(m),
            Failure::Check => f.write_str("a check did not pass"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Axiom(_) => {
                eprintln!("error: {e}");
                Failure::Check
            }
            other => Failure::Parse(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutFormat {
    Text,
    Structured,
}

pub struct Loaded<T> {
    pub value: T,
    pub doc: Document,
}

pub fn load(path: &Path) -> CliResult<Document> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn wrong_kind(path: &Path, want: &str, doc: &Document) -> Failure {
    Failure::Parse(format!("{}: expected a {want} document, found {}", path.display(), doc.object.kind()))
}

macro_rules! loader {
    ($name:ident, $variant:ident, $ty:ty, $kind:literal) => {
        pub fn $name(path: &Path) -> CliResult<Loaded<$ty>> {
            let doc = load(path)?;
            match &doc.object {
                Object::$variant(v) => Ok(Loaded { value: v.clone(), doc }),
                _ => Err(wrong_kind(path, $kind, &doc)),
            }
        }
    };
}

loader!(load_hopf, Hopf, HopfData, "hopf");
loader!(load_comodalg, ComodAlg, ComodAlg, "comodalg");
loader!(load_modalg, ModAlg, ModAlg, "modalg");
loader!(load_module, Module, ModuleRep, "module");
loader!(load_subspace, Subspace, Subspace, "subspace");

/// Stops with exit 3 after printing the report when an input fails its axioms.
pub fn require(what: &str, report: Report) -> CliResult<()> {
    if report.passed() {
        return Ok(());
    }
    eprintln!("error: {what} fails its axioms");
    eprintln!("{report}");
    Err(Failure::Check)
}

fn write_text(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Writes a derived object, recording the hashes of its inputs.
pub fn emit_object(object: Object, inputs: &[&Document], out: Option<&PathBuf>) -> CliResult<()> {
    let doc = Document::with_inputs(object, inputs);
    write_text(out, &doc.emit())?;
    if let Some(p) = out {
        println!("wrote {} to {}", doc.object.kind(), p.display());
    }
    Ok(())
}

/// Writes reports; fails with exit 3 unless every verdict is pass.
pub fn emit_reports(reports: Vec<Report>, inputs: &[&Document], format: OutFormat, out: Option<&PathBuf>) -> CliResult<()> {
    let all_pass = reports.iter().all(Report::passed);
    let text = match format {
        OutFormat::Structured => Document::with_inputs(Object::Reports(reports), inputs).emit(),
        OutFormat::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&r.to_string());
                s.push('\n');
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            s.push_str(&format!("{passed}/{} passed\n", reports.len()));
            s
        }
    };
    write_text(out, &text)?;
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
