//! The built-in example catalog and the runner that checks every structural claim on it.
//!
//! Each case belongs to one numbered criterion and yields one report named
//! `c{criterion}/{case}/{check}`. Reports come back in catalog order whatever the
//! number of workers.

use rayon::prelude::*;

use crate::error::Result;
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::format::{Document, Object};
use crate::hopf::identities::verify_core_identities;
use crate::hopf::{AlgebraData, HopfData};
use crate::modcom::{smash_product, ComodAlg, ModAlg, ModuleRep, Side};
use crate::report::Report;
use crate::yanzhu::{
    dim_formula_check, dual_factorization_check, duality_check, faithfulness_check, heisenberg_check,
    hopf_module_checks, stab_coinvariants_check, stab_space, stabmodhopf_check, tensor_dual_object_check,
};
use crate::zoo::{
    self, coideal_subalgebra, coideal_subalgebra_check, galois_build, galois_check, galois_relations,
    group_stab_iso_check, klein_sign_cocycle, klein_simple_module, sign_graded_extension, standard_rep,
    twisted_group_algebra, Cocycle, GroupTable, HopfInclusion,
};

/// Environment variable holding the worker count; `1` runs sequentially.
pub const WORKERS_ENV: &str = "HOPFSTAB_WORKERS";

type Maker<T> = fn() -> T;

type Job = Box<dyn Fn() -> Result<Report> + Send + Sync>;

pub struct Case {
    pub criterion: u8,
    pub name: String,
    job: Job,
}

impl Case {
    fn new(criterion: u8, name: impl Into<String>, job: impl Fn() -> Result<Report> + Send + Sync + 'static) -> Case {
        Case { criterion, name: name.into(), job: Box::new(job) }
    }

    /// Runs the case; an error becomes a failing report carrying the message.
    pub fn run(&self) -> Report {
        let mut r = match (self.job)() {
            Ok(r) => r,
            Err(e) => {
                let mut r = Report::new("error", "case raised an error");
                r.fail(e.to_string());
                r
            }
        };
        r.check = format!("c{}/{}/{}", self.criterion, self.name, r.check);
        r
    }
}

fn z2_z2() -> GroupTable {
    GroupTable::cyclic(2).product(&GroupTable::cyclic(2))
}

fn f5() -> Field {
    Field::prime(5).expect("prime")
}

fn f7() -> Field {
    Field::prime(7).expect("prime")
}

/// The catalog Hopf algebras by name.
pub fn hopf_algebras() -> Vec<(&'static str, HopfData)> {
    let q = Field::Rationals;
    let z2 = GroupTable::cyclic(2);
    let k4 = z2_z2();
    let s3 = GroupTable::symmetric(3);
    vec![
        ("kZ2", zoo::group_algebra(&z2)),
        ("kZ2-dual", zoo::dual_group_algebra(&z2, q)),
        ("kZ2xZ2", zoo::group_algebra(&k4)),
        ("kZ2xZ2-dual", zoo::dual_group_algebra(&k4, q)),
        ("kS3", zoo::group_algebra(&s3)),
        ("kS3-dual", zoo::dual_group_algebra(&s3, q)),
        ("H4", zoo::sweedler()),
        ("T9-F7", zoo::taft(3, 7, 2).expect("2 has order 3 mod 7")),
        ("kZ2xZ2-F5", zoo::group_algebra_over(&k4, f5())),
    ]
}

/// A comodule algebra with a pair of modules `U`, `W` on which the stabilizer
/// theorems are exercised.
pub struct StabCase {
    pub name: &'static str,
    pub k: ComodAlg,
    pub u: ModuleRep,
    pub w: ModuleRep,
}

fn character(f: Field, values: &[i64]) -> ModuleRep {
    let v: Vec<Scalar> = values.iter().map(|&x| f.from_i64(x)).collect();
    ModuleRep::character(f, Side::Left, &v)
}

fn sweedler_coideal() -> ComodAlg {
    let h = zoo::sweedler();
    coideal_subalgebra(&h, &Subspace::coordinate(h.field(), 4, [0, 1])).expect("span{1,x} is a coideal subalgebra")
}

fn taft_coideal() -> ComodAlg {
    let h = zoo::taft(3, 7, 2).expect("taft");
    coideal_subalgebra(&h, &Subspace::coordinate(h.field(), 9, [0, 1, 2])).expect("span{1,x,x²} is a coideal subalgebra")
}

/// ℤ₃ = {e, (012), (021)} inside S₃ over 𝔽₇.
fn z3_in_s3() -> ComodAlg {
    twisted_group_algebra(&GroupTable::symmetric(3), &[0, 3, 4], &Cocycle::trivial(f7(), 3)).expect("subgroup")
}

fn twisted_klein() -> ComodAlg {
    twisted_group_algebra(&z2_z2(), &[0, 1, 2, 3], &klein_sign_cocycle(f5())).expect("cocycle")
}

/// Certified H-simple comodule algebras with module pairs, including one pair of
/// non-isomorphic simples.
pub fn stab_cases() -> Vec<StabCase> {
    let q = Field::Rationals;
    let s3 = GroupTable::symmetric(3);
    let z2 = twisted_group_algebra(&s3, &[0, 2], &Cocycle::trivial(q, 2)).expect("subgroup");
    let s3_reg = ComodAlg::regular(&zoo::group_algebra(&s3));
    let f = f7();
    vec![
        StabCase { name: "kZ2-in-kS3-trivial", k: z2, u: character(q, &[1, 1]), w: character(q, &[1, 1]) },
        StabCase { name: "H4-coideal-counit", k: sweedler_coideal(), u: character(q, &[1, 0]), w: character(q, &[1, 0]) },
        StabCase { name: "T9-coideal-counit", k: taft_coideal(), u: character(f, &[1, 0, 0]), w: character(f, &[1, 0, 0]) },
        StabCase { name: "twisted-klein-F5", k: twisted_klein(), u: klein_simple_module(f5()), w: klein_simple_module(f5()) },
        StabCase { name: "kZ3-in-kS3-omega", k: z3_in_s3(), u: character(f, &[1, 2, 4]), w: character(f, &[1, 2, 4]) },
        StabCase { name: "kS3-regular-standard", k: s3_reg, u: standard_rep(3, q), w: standard_rep(3, q) },
        StabCase { name: "kZ3-in-kS3-trivial-vs-omega", k: z3_in_s3(), u: character(f, &[1, 1, 1]), w: character(f, &[1, 2, 4]) },
    ]
}

/// 𝕜 × 𝕜 with the trivial coaction of H₄: decomposable, hence not faithful on a factor.
fn split_algebra() -> (ComodAlg, ModuleRep) {
    let h = zoo::sweedler();
    let f = h.field();
    let alg = AlgebraData::from_products(f, 2, vec![f.one(), f.one()], |i, j| {
        let mut v = vec![f.zero(); 2];
        if i == j {
            v[i] = f.one();
        }
        v
    })
    .expect("F × F");
    (ComodAlg::trivial(&h, alg, Side::Left), character(f, &[1, 0]))
}

/// Passes when `inner` did not pass and `detected` holds on it.
fn expect_negative(check: &str, topic: &str, inner: &Report, detected: bool, what: &str) -> Report {
    let mut r = Report::new(check, topic);
    for (k, v) in &inner.facts {
        r.fact(k.clone(), v);
    }
    r.fact("inner_verdict", inner.verdict.as_str());
    r.expect(!inner.passed() && detected, || format!("{what} was not detected"));
    r
}

fn round_trip(doc: &Document) -> Report {
    let mut r = Report::new("round-trip", "parse(emit(x)) re-emits the same bytes");
    let text = doc.emit();
    match Document::parse(&text) {
        Ok(back) => {
            r.expect(back == *doc, || "parsed object differs".into());
            r.expect(back.emit() == text, || "re-emitted text differs".into());
        }
        Err(e) => r.fail(e.to_string()),
    }
    r.fact("bytes", text.len());
    r
}

fn axiom_cases(out: &mut Vec<Case>) {
    for (name, h) in hopf_algebras() {
        out.push(Case::new(1, name, move || Ok(h.check())));
    }
    let comod: Vec<(&str, Maker<ComodAlg>)> = vec![
        ("H4-coideal", sweedler_coideal),
        ("T9-coideal", taft_coideal),
        ("kZ3-in-kS3", z3_in_s3),
        ("twisted-klein-F5", twisted_klein),
    ];
    for (name, make) in comod {
        out.push(Case::new(1, name, move || Ok(make().check())));
    }
    out.push(Case::new(1, "smash-ground-H4", || {
        let h = zoo::sweedler();
        let r = ModAlg::trivial(&h, AlgebraData::ground(h.field()), Side::Left);
        Ok(smash_with_dims(&r, 4, 1))
    }));
    out.push(Case::new(1, "smash-dual-hit-kZ2", || {
        let r = ModAlg::dual_hit(&zoo::group_algebra(&GroupTable::cyclic(2)));
        Ok(smash_with_dims(&r, 4, 2))
    }));
    out.push(Case::new(1, "smash-end-standard-kS3", || {
        let h = zoo::group_algebra(&GroupTable::symmetric(3));
        let r = ModAlg::endomorphisms(&h, &standard_rep(3, h.field()))?;
        Ok(smash_with_dims(&r, 24, 4))
    }));
}

/// Axioms of `R` and of `R^op # H^cop`, with its dimension and coinvariant dimension.
fn smash_with_dims(r: &ModAlg, dim: usize, coinv: usize) -> Report {
    let mut rep = Report::new("smash-product", "R^op # H^cop is a comodule algebra");
    rep.absorb(&r.check());
    match smash_product(r) {
        Ok(k) => {
            rep.absorb(&k.check());
            let c = k.coinvariants().dim();
            rep.fact("dim", k.dim());
            rep.fact("dim_coinvariants", c);
            rep.expect(k.dim() == dim, || format!("dimension {} instead of {dim}", k.dim()));
            rep.expect(c == coinv, || format!("coinvariants of dimension {c} instead of {coinv}"));
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

fn identity_cases(out: &mut Vec<Case>) {
    for (name, h) in hopf_algebras() {
        let h2 = h.clone();
        let h3 = h.clone();
        out.push(Case::new(2, name, move || Ok(verify_core_identities(&h))));
        out.push(Case::new(2, name, move || hopf_module_checks(&h2)));
        out.push(Case::new(2, name, move || {
            let w = ModuleRep::character(h3.field(), Side::Left, h3.counit());
            tensor_dual_object_check(&ComodAlg::regular(&h3), &w)
        }));
    }
    for c in stab_cases().into_iter().take(4) {
        out.push(Case::new(2, c.name, move || tensor_dual_object_check(&c.k, &c.w)));
    }
}

fn stab_criteria(out: &mut Vec<Case>) {
    type Check = fn(&ComodAlg, &ModuleRep, &ModuleRep) -> Result<Report>;
    let per_criterion: [(u8, Check); 3] = [(3, dim_formula_check), (4, stabmodhopf_check), (8, stab_coinvariants_check)];
    for (criterion, check) in per_criterion {
        for c in stab_cases() {
            out.push(Case::new(criterion, c.name, move || check(&c.k, &c.u, &c.w)));
        }
    }
    for c in stab_cases() {
        out.push(Case::new(9, c.name, move || faithfulness_check(&c.k, &c.w)));
    }
    out.push(Case::new(9, "split-algebra-trivial-coaction", || {
        let (k, w) = split_algebra();
        let inner = faithfulness_check(&k, &w)?;
        let nonzero = inner.get_fact("kernel_dim").is_some_and(|d| d != "0");
        Ok(expect_negative("kernel-witness", "a decomposable K is not faithful", &inner, nonzero, "a nonzero kernel"))
    }));
}

fn heisenberg_cases(out: &mut Vec<Case>) {
    for (name, h) in hopf_algebras() {
        out.push(Case::new(5, name, move || heisenberg_check(&h)));
    }
}

fn duality_cases(out: &mut Vec<Case>) {
    let picks = ["H4-coideal-counit", "kZ3-in-kS3-omega", "T9-coideal-counit"];
    for c in stab_cases().into_iter().filter(|c| picks.contains(&c.name)) {
        let name = c.name;
        out.push(Case::new(6, name, move || {
            let st = stab_space(&c.k, &c.w, &c.w)?;
            let s = st.comodule_algebra()?;
            let w = st.natural_module()?;
            let mut r = duality_check(&s, &w)?;
            r.absorb(&dual_factorization_check(&s, &w, &w)?);
            Ok(r)
        }));
    }
}

fn example_cases(out: &mut Vec<Case>) {
    out.push(Case::new(7, "S3-over-Z3-omega-F7", || {
        group_stab_iso_check(&GroupTable::symmetric(3), &[0, 3, 4], &Cocycle::trivial(f7(), 3), &character(f7(), &[1, 2, 4]))
    }));
    out.push(Case::new(7, "S3-over-S3-trivial", || {
        let q = Field::Rationals;
        let all: Vec<usize> = (0..6).collect();
        group_stab_iso_check(&GroupTable::symmetric(3), &all, &Cocycle::trivial(q, 6), &character(q, &[1; 6]))
    }));
    out.push(Case::new(7, "twisted-klein-F5", || {
        group_stab_iso_check(&z2_z2(), &[0, 1, 2, 3], &klein_sign_cocycle(f5()), &klein_simple_module(f5()))
    }));
    let coideals: Vec<(&str, Maker<HopfData>, Vec<usize>)> = vec![
        ("H4-span-1-x", zoo::sweedler, vec![0, 1]),
        ("H4-whole", zoo::sweedler, vec![0, 1, 2, 3]),
        ("T9-span-1-x-x2", || zoo::taft(3, 7, 2).expect("taft"), vec![0, 1, 2]),
    ];
    for (name, make, coords) in coideals {
        out.push(Case::new(7, name, move || {
            let h = make();
            coideal_subalgebra_check(&h, &Subspace::coordinate(h.field(), h.dim(), coords.iter().copied()))
        }));
    }
    out.push(Case::new(7, "galois-regular-kS3", || {
        let h = zoo::group_algebra(&GroupTable::symmetric(3));
        let gd = galois_build(&HopfInclusion::identity(&h), &ComodAlg::regular(&h))?;
        let mut r = galois_relations(&gd);
        r.absorb(&galois_check(&gd, &standard_rep(3, h.field()))?);
        Ok(r)
    }));
    out.push(Case::new(7, "galois-regular-H4", || {
        let h = zoo::sweedler();
        let gd = galois_build(&HopfInclusion::identity(&h), &ComodAlg::regular(&h))?;
        let mut r = galois_relations(&gd);
        r.absorb(&galois_check(&gd, &ModuleRep::character(h.field(), Side::Left, h.counit()))?);
        Ok(r)
    }));
    out.push(Case::new(7, "galois-sign-graded-kS3", || {
        let (inc, k) = sign_graded_extension();
        let gd = galois_build(&inc, &k)?;
        let mut r = galois_relations(&gd);
        r.absorb(&galois_check(&gd, &standard_rep(3, k.field()))?);
        Ok(r)
    }));
    out.push(Case::new(7, "galois-ground-kZ2", || {
        let h = zoo::group_algebra(&GroupTable::cyclic(2));
        let f = h.field();
        let gd = galois_build(&HopfInclusion::identity(&h), &ComodAlg::ground(&h, Side::Left))?;
        let inner = galois_check(&gd, &ModuleRep::new(f, 1, Side::Left, vec![Matrix::identity(f, 1)])?)?;
        let deficit = !gd.is_galois();
        Ok(expect_negative("not-galois", "β is singular for the ground algebra", &inner, deficit, "the rank deficit"))
    }));
}

fn format_cases(out: &mut Vec<Case>) {
    for (name, h) in hopf_algebras() {
        out.push(Case::new(10, name, move || Ok(round_trip(&Document::new(Object::Hopf(h.clone()))))));
    }
    out.push(Case::new(10, "stabilizer-kZ2-in-kS3", || {
        let c = stab_cases().remove(0);
        let st = stab_space(&c.k, &c.u, &c.w)?;
        let kdoc = Document::new(Object::ComodAlg(c.k.clone()));
        let mut r = round_trip(&kdoc);
        r.absorb(&round_trip(&Document::with_inputs(Object::Stabilizer(st), &[&kdoc])));
        Ok(r)
    }));
}

/// Every catalog case in criterion order.
pub fn cases() -> Vec<Case> {
    let mut out = Vec::new();
    axiom_cases(&mut out);
    identity_cases(&mut out);
    stab_criteria(&mut out);
    heisenberg_cases(&mut out);
    duality_cases(&mut out);
    example_cases(&mut out);
    format_cases(&mut out);
    out.sort_by_key(|c| c.criterion);
    out
}

/// Worker count from [`WORKERS_ENV`], if set to a positive integer.
pub fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Runs the cases, in parallel unless `workers == Some(1)`; output order is input order.
pub fn run(cases: &[Case], workers: Option<usize>) -> Vec<Report> {
    match workers {
        Some(1) => cases.iter().map(Case::run).collect(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| cases.par_iter().map(Case::run).collect()),
            Err(_) => cases.iter().map(Case::run).collect(),
        },
        None => cases.par_iter().map(Case::run).collect(),
    }
}

/// The whole catalog with the worker count taken from the environment.
pub fn run_catalog() -> Vec<Report> {
    run(&cases(), workers_from_env())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_criterion_has_cases_in_order() {
        let crit: Vec<u8> = cases().iter().map(|c| c.criterion).collect();
        assert!(crit.windows(2).all(|w| w[0] <= w[1]));
        for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10] {
            assert!(crit.contains(&n), "criterion {n} has no cases");
        }
    }

    #[test]
    fn errors_become_failing_reports() {
        let c = Case::new(1, "broken", || Err(crate::Error::invalid("boom")));
        let r = c.run();
        assert!(!r.passed());
        assert_eq!(r.check, "c1/broken/error");
        assert!(r.witnesses[0].contains("boom"));
    }
}
