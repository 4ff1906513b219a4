//! `hopfstab`: build, transform and check finite-dimensional Hopf algebras stored as
//! canonical documents.

mod io;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfstab::catalog;
use hopfstab::exactlin::{Field, Scalar, Subspace};
use hopfstab::format::{Document, Object};
use hopfstab::hopf::Variant;
use hopfstab::modcom::{
    h_indecomposable, h_simplicity, opposite_correspondence, smash_product, ComodAlg, DecompositionStatus, IdealSide,
    ModAlg, ModuleRep, Side, SimplicityStatus,
};
use hopfstab::report::Report;
use hopfstab::yanzhu::{dim_formula_check, dual_stab_space, duality_check, heisenberg_check, stab_space};
use hopfstab::zoo::{self, Cocycle, GroupTable, HopfInclusion};

use io::{emit_object, emit_reports, require, CliResult, Failure, OutFormat};

#[derive(Parser)]
#[command(name = "hopfstab", version, about = "Exact computations with finite-dimensional Hopf algebras")]
struct Cli {
    /// Report layout: readable text or a canonical report document.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutFormat,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct StabArgs {
    #[arg(long)]
    comodalg: PathBuf,
    /// The module U.
    #[arg(long)]
    module: PathBuf,
    /// The module W; defaults to U.
    #[arg(long)]
    module2: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and run the axiom checks for its kind.
    Validate {
        file: PathBuf,
        /// Documents the file claims to be derived from, in order.
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
    },
    /// The dual Hopf algebra.
    Dual {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// H^op, H^cop or H^bop.
    Variant {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long, value_parser = ["op", "cop", "bop"])]
        which: String,
    },
    /// The stabilizer St_K(U, W) of a left comodule algebra.
    Stab(StabArgs),
    /// The mirrored stabilizer St_S(V, Y) of a right comodule algebra.
    DualStab(StabArgs),
    /// The dimension formula for St_K(U, W).
    Dims(StabArgs),
    /// Double-commutant duality for a right comodule algebra and a module.
    DualityCheck {
        #[arg(long)]
        comodalg: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// Decide whether a comodule algebra is H-simple.
    Hsimple {
        #[arg(long)]
        comodalg: PathBuf,
        #[arg(long, default_value = "two-sided", value_parser = ["left", "right", "two-sided"])]
        side: String,
    },
    /// Split a comodule algebra into two H-ideals if possible.
    Decompose {
        #[arg(long)]
        comodalg: PathBuf,
    },
    /// The smash product R^op # H^cop of a left module algebra.
    Smash {
        #[arg(long)]
        modalg: PathBuf,
    },
    /// The Heisenberg double and its isomorphisms.
    HeisenbergCheck {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// St_K(𝕜) against the dual of the quotient coalgebra for a coideal subalgebra.
    CoidealCheck {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
    },
    /// The stabilizer of a twisted group algebra against the induced algebra.
    GroupCheck {
        /// cyclic:N, symmetric:N or klein.
        #[arg(long)]
        group: String,
        /// Comma-separated element indices.
        #[arg(long)]
        subgroup: String,
        #[arg(long, default_value = "trivial", value_parser = ["trivial", "klein-sign"])]
        cocycle: String,
        #[arg(long)]
        module: PathBuf,
    },
    /// The canonical map, its relations and the stabilizer comparison for H' = H.
    GaloisCheck {
        #[arg(long, required_unless_present = "sign_graded")]
        hopf: Option<PathBuf>,
        /// Defaults to the regular comodule algebra.
        #[arg(long)]
        comodalg: Option<PathBuf>,
        #[arg(long)]
        module: PathBuf,
        /// Use 𝕜S₃ graded by the sign over 𝕜{e, (01)} instead of --hopf.
        #[arg(long)]
        sign_graded: bool,
    },
    /// Run the built-in catalog of checks.
    Catalog {
        /// Only this criterion.
        #[arg(long)]
        criterion: Option<u8>,
        /// Worker threads; overrides HOPFSTAB_WORKERS.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Constructors for the example families.
    #[command(subcommand)]
    Zoo(Zoo),
}

#[derive(Subcommand)]
enum Zoo {
    /// The group algebra.
    Group {
        group: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Functions on a group.
    DualGroup {
        group: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// The four-dimensional Sweedler algebra over Q.
    Sweedler,
    /// The Taft algebra of dimension n² over F_p with root of unity zeta.
    Taft {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        zeta: i64,
    },
    /// H as a comodule algebra over itself.
    Regular {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// The ground field as a comodule algebra.
    Ground {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long, default_value = "left", value_parser = ["left", "right"])]
        side: String,
    },
    /// A left coideal subalgebra spanned by a subspace.
    Coideal {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
    },
    /// A twisted group algebra of a subgroup.
    Twisted {
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long, default_value = "trivial", value_parser = ["trivial", "klein-sign"])]
        cocycle: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// H* as a left H-module algebra through ⇀.
    DualHit {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// End(V) as a left H-module algebra.
    Endomorphisms {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// K^op as a left H*-module algebra.
    Opposite {
        #[arg(long)]
        comodalg: PathBuf,
    },
    /// A one-dimensional module from scalar values on the basis.
    Character {
        /// Comma-separated canonical scalars.
        #[arg(long)]
        values: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value = "left", value_parser = ["left", "right"])]
        side: String,
    },
    /// The counit as a one-dimensional module of H.
    Counit {
        #[arg(long)]
        hopf: PathBuf,
    },
    /// The reflection representation of S_n.
    StandardRep {
        n: usize,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// The two-dimensional simple module of the sign-twisted Klein group algebra.
    KleinModule {
        #[arg(long, default_value = "F5")]
        field: String,
    },
    /// A coordinate subspace.
    Subspace {
        #[arg(long)]
        ambient: usize,
        /// Comma-separated coordinate indices.
        #[arg(long)]
        coords: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

fn field(name: &str) -> CliResult<Field> {
    Field::from_name(name).map_err(|e| Failure::Usage(e.to_string()))
}

fn side(name: &str) -> Side {
    Side::parse(name).expect("restricted by clap")
}

fn indices(list: &str) -> CliResult<Vec<usize>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Failure::Usage(format!("not an index: {s:?}"))))
        .collect()
}

fn group(spec: &str) -> CliResult<GroupTable> {
    let bad = || Failure::Usage(format!("unknown group {spec:?}; use cyclic:N, symmetric:N or klein"));
    if spec == "klein" {
        return Ok(GroupTable::cyclic(2).product(&GroupTable::cyclic(2)));
    }
    let (family, n) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    match family {
        "cyclic" if n >= 1 => Ok(GroupTable::cyclic(n)),
        "symmetric" if (1..=5).contains(&n) => Ok(GroupTable::symmetric(n)),
        _ => Err(bad()),
    }
}

fn cocycle(name: &str, f: Field, order: usize) -> CliResult<Cocycle> {
    match name {
        "klein-sign" if order == 4 => Ok(zoo::klein_sign_cocycle(f)),
        "klein-sign" => Err(Failure::Usage("the klein-sign cocycle lives on a subgroup of order 4".into())),
        _ => Ok(Cocycle::trivial(f, order)),
    }
}

fn print_witness(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .basis_vectors()
        .map(|v| format!("[{}]", v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("span{{{}}}", rows.join(", "))
}

/// Loads `--comodalg`, `--module` and `--module2`, checking all three.
fn stab_inputs(a: &StabArgs) -> CliResult<(io::Loaded<ComodAlg>, io::Loaded<ModuleRep>, io::Loaded<ModuleRep>)> {
    let k = io::load_comodalg(&a.comodalg)?;
    require("the comodule algebra", k.value.check())?;
    let u = io::load_module(&a.module)?;
    require("--module", u.value.check(&k.value.alg))?;
    let w = match &a.module2 {
        Some(p) => io::load_module(p)?,
        None => io::load_module(&a.module)?,
    };
    require("--module2", w.value.check(&k.value.alg))?;
    Ok((k, u, w))
}

fn validate(file: &Path, inputs: &[PathBuf], format: OutFormat, out: Option<&PathBuf>) -> CliResult<()> {
    let doc = io::load(file)?;
    if !inputs.is_empty() {
        let docs = inputs.iter().map(|p| io::load(p)).collect::<CliResult<Vec<_>>>()?;
        let refs: Vec<&Document> = docs.iter().collect();
        doc.verify_provenance(&refs).map_err(|e| Failure::Parse(format!("{}: {e}", file.display())))?;
    }
    let report = match &doc.object {
        Object::Hopf(h) => h.check(),
        Object::ComodAlg(k) => k.check(),
        Object::ModAlg(r) => r.check(),
        Object::Module(m) => {
            let mut r = Report::new("module-document", "well-formed action matrices");
            r.fact("algebra_dim", m.algebra_dim());
            r.fact("dim", m.dim());
            r
        }
        Object::Subspace(s) => {
            let mut r = Report::new("subspace-document", "canonical basis");
            r.fact("ambient", s.ambient_dim());
            r.fact("dim", s.dim());
            r
        }
        Object::Stabilizer(st) => {
            let mut r = Report::new("stabilizer-document", "a stabilizer space");
            r.fact("dim", st.dim());
            r.absorb(&st.hopf.check());
            if st.is_endomorphic() {
                r.absorb(&st.comodule_algebra()?.check());
            }
            r
        }
        Object::Reports(rs) => {
            let mut r = Report::new("report-document", "stored verdicts");
            r.fact("reports", rs.len());
            for inner in rs.iter().filter(|x| !x.passed()) {
                r.fail(format!("{} is {}", inner.check, inner.verdict));
            }
            r
        }
    };
    emit_reports(vec![report], &[&doc], format, out)
}

fn run(cli: Cli) -> CliResult<()> {
    let out = cli.out.as_ref();
    let format = cli.format;
    match cli.command {
        Command::Validate { file, inputs } => validate(&file, &inputs, format, out),
        Command::Dual { hopf } => {
            let h = io::load_hopf(&hopf)?;
            require("the Hopf algebra", h.value.check())?;
            emit_object(Object::Hopf(h.value.dual()), &[&h.doc], out)
        }
        Command::Variant { hopf, which } => {
            let h = io::load_hopf(&hopf)?;
            require("the Hopf algebra", h.value.check())?;
            let v = Variant::parse(&which).expect("restricted by clap");
            emit_object(Object::Hopf(h.value.variant(v)), &[&h.doc], out)
        }
        Command::Stab(a) => {
            let (k, u, w) = stab_inputs(&a)?;
            let st = stab_space(&k.value, &u.value, &w.value)?;
            emit_object(Object::Stabilizer(st), &[&k.doc, &u.doc, &w.doc], out)
        }
        Command::DualStab(a) => {
            let (s, v, y) = stab_inputs(&a)?;
            let st = dual_stab_space(&s.value, &v.value, &y.value)?;
            emit_object(Object::Stabilizer(st), &[&s.doc, &v.doc, &y.doc], out)
        }
        Command::Dims(a) => {
            let (k, u, w) = stab_inputs(&a)?;
            let r = dim_formula_check(&k.value, &u.value, &w.value)?;
            emit_reports(vec![r], &[&k.doc, &u.doc, &w.doc], format, out)
        }
        Command::DualityCheck { comodalg, module } => {
            let s = io::load_comodalg(&comodalg)?;
            require("the comodule algebra", s.value.check())?;
            let w = io::load_module(&module)?;
            require("--module", w.value.check(&s.value.alg))?;
            let r = duality_check(&s.value, &w.value)?;
            emit_reports(vec![r], &[&s.doc, &w.doc], format, out)
        }
        Command::Hsimple { comodalg, side } => {
            let k = io::load_comodalg(&comodalg)?;
            require("the comodule algebra", k.value.check())?;
            let ideal_side = IdealSide::parse(&side).expect("restricted by clap");
            let v = h_simplicity(&k.value, ideal_side);
            let mut r = Report::new("h-simplicity", format!("{side} H-ideals"));
            r.fact("status", v.status.as_str());
            r.fact("reason", &v.reason);
            if let Some(wit) = &v.witness {
                r.fact("witness_ideal", print_witness(wit));
            }
            if v.status == SimplicityStatus::Undecided {
                r.undecided(v.reason.clone());
            }
            emit_reports(vec![r], &[&k.doc], format, out)
        }
        Command::Decompose { comodalg } => {
            let k = io::load_comodalg(&comodalg)?;
            require("the comodule algebra", k.value.check())?;
            let v = h_indecomposable(&k.value);
            let mut r = Report::new("h-decomposition", "K = I ⊕ J with H-ideals I, J");
            r.fact("status", v.status.as_str());
            r.fact("reason", &v.reason);
            if let Some((i, j)) = &v.split {
                r.fact("ideal_i", print_witness(i));
                r.fact("ideal_j", print_witness(j));
            }
            if v.status == DecompositionStatus::Undecided {
                r.undecided(v.reason.clone());
            }
            emit_reports(vec![r], &[&k.doc], format, out)
        }
        Command::Smash { modalg } => {
            let r = io::load_modalg(&modalg)?;
            require("the module algebra", r.value.check())?;
            emit_object(Object::ComodAlg(smash_product(&r.value)?), &[&r.doc], out)
        }
        Command::HeisenbergCheck { hopf } => {
            let h = io::load_hopf(&hopf)?;
            require("the Hopf algebra", h.value.check())?;
            emit_reports(vec![heisenberg_check(&h.value)?], &[&h.doc], format, out)
        }
        Command::CoidealCheck { hopf, subspace } => {
            let h = io::load_hopf(&hopf)?;
            require("the Hopf algebra", h.value.check())?;
            let s = io::load_subspace(&subspace)?;
            let r = zoo::coideal_subalgebra_check(&h.value, &s.value)?;
            emit_reports(vec![r], &[&h.doc, &s.doc], format, out)
        }
        Command::GroupCheck { group: g, subgroup, cocycle: c, module } => {
            let g = group(&g)?;
            let sub = indices(&subgroup)?;
            let v = io::load_module(&module)?;
            let sigma = cocycle(&c, v.value.field(), sub.len())?;
            let r = zoo::group_stab_iso_check(&g, &sub, &sigma, &v.value)?;
            emit_reports(vec![r], &[&v.doc], format, out)
        }
        Command::GaloisCheck { hopf, comodalg, module, sign_graded } => {
            let w = io::load_module(&module)?;
            let mut docs = Vec::new();
            let (inclusion, k) = if sign_graded {
                zoo::sign_graded_extension()
            } else {
                let h = io::load_hopf(hopf.as_ref().expect("required by clap"))?;
                require("the Hopf algebra", h.value.check())?;
                let k = match &comodalg {
                    Some(p) => {
                        let k = io::load_comodalg(p)?;
                        require("the comodule algebra", k.value.check())?;
                        docs.push(k.doc);
                        k.value
                    }
                    None => ComodAlg::regular(&h.value),
                };
                docs.insert(0, h.doc);
                (HopfInclusion::identity(&h.value), k)
            };
            require("--module", w.value.check(&k.alg))?;
            docs.push(w.doc);
            let gd = zoo::galois_build(&inclusion, &k)?;
            let mut reports = Vec::new();
            if gd.is_galois() {
                reports.push(zoo::galois_relations(&gd));
            }
            reports.push(zoo::galois_check(&gd, &w.value)?);
            let refs: Vec<&Document> = docs.iter().collect();
            emit_reports(reports, &refs, format, out)
        }
        Command::Catalog { criterion, workers } => {
            let cases: Vec<_> = catalog::cases().into_iter().filter(|c| criterion.is_none_or(|n| c.criterion == n)).collect();
            if cases.is_empty() {
                return Err(Failure::Usage("no catalog cases for that criterion".into()));
            }
            let reports = catalog::run(&cases, workers.or_else(catalog::workers_from_env));
            emit_reports(reports, &[], format, out)
        }
        Command::Zoo(z) => zoo_command(z, out),
    }
}

fn zoo_command(z: Zoo, out: Option<&PathBuf>) -> CliResult<()> {
    match z {
        Zoo::Group { group: g, field: f } => {
            emit_object(Object::Hopf(zoo::group_algebra_over(&group(&g)?, field(&f)?)), &[], out)
        }
        Zoo::DualGroup { group: g, field: f } => {
            emit_object(Object::Hopf(zoo::dual_group_algebra(&group(&g)?, field(&f)?)), &[], out)
        }
        Zoo::Sweedler => emit_object(Object::Hopf(zoo::sweedler()), &[], out),
        Zoo::Taft { n, p, zeta } => emit_object(Object::Hopf(zoo::taft(n, p, zeta)?), &[], out),
        Zoo::Regular { hopf } => {
            let h = io::load_hopf(&hopf)?;
            emit_object(Object::ComodAlg(ComodAlg::regular(&h.value)), &[&h.doc], out)
        }
        Zoo::Ground { hopf, side: s } => {
            let h = io::load_hopf(&hopf)?;
            emit_object(Object::ComodAlg(ComodAlg::ground(&h.value, side(&s))), &[&h.doc], out)
        }
        Zoo::Coideal { hopf, subspace } => {
            let h = io::load_hopf(&hopf)?;
            let s = io::load_subspace(&subspace)?;
            let k = zoo::coideal_subalgebra(&h.value, &s.value)?;
            emit_object(Object::ComodAlg(k), &[&h.doc, &s.doc], out)
        }
        Zoo::Twisted { group: g, subgroup, cocycle: c, field: f } => {
            let g = group(&g)?;
            let sub = indices(&subgroup)?;
            let sigma = cocycle(&c, field(&f)?, sub.len())?;
            emit_object(Object::ComodAlg(zoo::twisted_group_algebra(&g, &sub, &sigma)?), &[], out)
        }
        Zoo::DualHit { hopf } => {
            let h = io::load_hopf(&hopf)?;
            emit_object(Object::ModAlg(ModAlg::dual_hit(&h.value)), &[&h.doc], out)
        }
        Zoo::Endomorphisms { hopf, module } => {
            let h = io::load_hopf(&hopf)?;
            let v = io::load_module(&module)?;
            require("--module", v.value.check(h.value.alg()))?;
            emit_object(Object::ModAlg(ModAlg::endomorphisms(&h.value, &v.value)?), &[&h.doc, &v.doc], out)
        }
        Zoo::Opposite { comodalg } => {
            let k = io::load_comodalg(&comodalg)?;
            emit_object(Object::ModAlg(opposite_correspondence(&k.value)?), &[&k.doc], out)
        }
        Zoo::Character { values, field: f, side: s } => {
            let f = field(&f)?;
            let vals = values
                .split(',')
                .map(|t| f.parse_scalar(t.trim()).map_err(Failure::Usage))
                .collect::<CliResult<Vec<_>>>()?;
            emit_object(Object::Module(ModuleRep::character(f, side(&s), &vals)), &[], out)
        }
        Zoo::Counit { hopf } => {
            let h = io::load_hopf(&hopf)?;
            let m = ModuleRep::character(h.value.field(), Side::Left, h.value.counit());
            emit_object(Object::Module(m), &[&h.doc], out)
        }
        Zoo::StandardRep { n, field: f } => {
            if !(2..=5).contains(&n) {
                return Err(Failure::Usage("standard-rep takes 2 ≤ n ≤ 5".into()));
            }
            emit_object(Object::Module(zoo::standard_rep(n, field(&f)?)), &[], out)
        }
        Zoo::KleinModule { field: f } => emit_object(Object::Module(zoo::klein_simple_module(field(&f)?)), &[], out),
        Zoo::Subspace { ambient, coords, field: f } => {
            let idx = indices(&coords)?;
            if let Some(&bad) = idx.iter().find(|&&i| i >= ambient) {
                return Err(Failure::Usage(format!("coordinate {bad} is outside 0..{ambient}")));
            }
            emit_object(Object::Subspace(Subspace::coordinate(field(&f)?, ambient, idx)), &[], out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !matches!(f, Failure::Check) {
                eprintln!("error: {f}");
            }
            ExitCode::from(f.code())
        }
    }
}
