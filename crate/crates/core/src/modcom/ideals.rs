//! H-ideals of comodule algebras, H-simplicity and H-decomposability.
//!
//! A left (right, two-sided) H-ideal is a left (right, two-sided) ideal that is
//! also a subcomodule. These are exactly the subspaces invariant under the
//! multiplication operators of the chosen side together with the coaction
//! operators `A_b`, so all questions reduce to invariant subspaces of the
//! operator algebra `B` they generate inside `End(K)`.

use crate::exactlin::operators::{commutant, generated_algebra, operators};
use crate::exactlin::{minimal_polynomial, Field, Matrix, Poly, Scalar, SpanBuilder, Subspace};
use crate::modcom::ComodAlg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

impl IdealSide {
    pub const ALL: [IdealSide; 3] = [IdealSide::Left, IdealSide::Right, IdealSide::TwoSided];

    pub fn as_str(self) -> &'static str {
        match self {
            IdealSide::Left => "left",
            IdealSide::Right => "right",
            IdealSide::TwoSided => "two-sided",
        }
    }

    pub fn parse(s: &str) -> Option<IdealSide> {
        IdealSide::ALL.into_iter().find(|x| x.as_str() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimplicityStatus {
    Simple,
    NotSimple,
    Undecided,
}

impl SimplicityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SimplicityStatus::Simple => "simple",
            SimplicityStatus::NotSimple => "not-simple",
            SimplicityStatus::Undecided => "undecided",
        }
    }
}

/// `NotSimple` always carries a proper nonzero H-ideal as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub status: SimplicityStatus,
    pub witness: Option<Subspace>,
    /// Which criterion settled the verdict.
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionStatus {
    Indecomposable,
    Decomposable,
    Undecided,
}

impl DecompositionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DecompositionStatus::Indecomposable => "indecomposable",
            DecompositionStatus::Decomposable => "decomposable",
            DecompositionStatus::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionVerdict {
    pub status: DecompositionStatus,
    /// Two-sided H-ideals `I, J` with `K = I ⊕ J`.
    pub split: Option<(Subspace, Subspace)>,
    /// Projection onto `I` along `J`, a commutant idempotent.
    pub idempotent: Option<Matrix>,
    pub reason: String,
}

/// Multiplication operators of the given side followed by the coaction operators.
pub fn ideal_operators(k: &ComodAlg, side: IdealSide) -> Vec<Matrix> {
    let n = k.dim();
    let mut ops = Vec::new();
    if matches!(side, IdealSide::Left | IdealSide::TwoSided) {
        ops.extend((0..n).map(|i| k.alg.left_mult(i)));
    }
    if matches!(side, IdealSide::Right | IdealSide::TwoSided) {
        ops.extend((0..n).map(|i| k.alg.right_mult(i)));
    }
    ops.extend(k.coact.operators());
    ops
}

fn invariant_under(s: &Subspace, ops: &[Matrix]) -> bool {
    ops.iter().all(|a| s.basis_vectors().all(|v| s.contains(&a.apply(v))))
}

pub fn is_h_ideal(k: &ComodAlg, s: &Subspace, side: IdealSide) -> bool {
    s.ambient_dim() == k.dim() && invariant_under(s, &ideal_operators(k, side))
}

/// Smallest subspace containing `seed` and invariant under `ops`.
pub fn spin(seed: &Subspace, ops: &[Matrix]) -> Subspace {
    let mut span = SpanBuilder::from_subspace(seed);
    let mut queue: Vec<Vec<Scalar>> = seed.basis_vectors().map(<[Scalar]>::to_vec).collect();
    while let Some(v) = queue.pop() {
        if span.is_full() {
            break;
        }
        for a in ops {
            let w = a.apply(&v);
            if span.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    span.finish()
}

/// The H-ideal of the given side generated by `seed`.
pub fn h_ideal_closure(k: &ComodAlg, seed: &Subspace, side: IdealSide) -> Subspace {
    spin(seed, &ideal_operators(k, side))
}

/// Radical of the trace form `(x, y) ↦ tr(xy)` on a span of operators.
/// Equals the Jacobson radical in characteristic zero or above the operator size.
fn trace_radical(field: Field, n: usize, basis: &[Matrix]) -> Vec<Matrix> {
    let m = basis.len();
    let gram = Matrix::from_fn(field, m, m, |i, j| (&basis[i] * &basis[j]).trace());
    gram.kernel()
        .basis_vectors()
        .map(|c| {
            let mut x = Matrix::zeros(field, n, n);
            for (ci, b) in c.iter().zip(basis) {
                x.add_scaled(ci, b);
            }
            x
        })
        .collect()
}

fn trace_form_applies(field: Field, n: usize) -> bool {
    match field {
        Field::Rationals => true,
        Field::Prime(p) => p > n as u64,
    }
}

/// Tries `c` and `c − λ` for the field roots `λ` of the minimal polynomial of `c`;
/// returns a singular nonzero operator if one is found.
fn singular_shift(c: &Matrix) -> Option<Matrix> {
    if c.is_zero() {
        return None;
    }
    if c.rank() < c.rows() {
        return Some(c.clone());
    }
    let mu = minimal_polynomial(c);
    for lambda in mu.roots().unwrap_or_default() {
        let shifted = c.sub(&Matrix::identity(c.field(), c.rows()).scale(&lambda));
        if !shifted.is_zero() {
            return Some(shifted);
        }
    }
    None
}

fn is_scalar_span(s: &Subspace, n: usize) -> bool {
    s.dim() == 1 && {
        let id = Matrix::identity(s.field(), n);
        s.contains(id.data())
    }
}

/// Decides whether `k` has no proper nonzero H-ideal of the given side.
pub fn h_simplicity(k: &ComodAlg, side: IdealSide) -> SimplicityVerdict {
    let field = k.field();
    let n = k.dim();
    let ops = ideal_operators(k, side);
    let not_simple = |w: Subspace, reason: &str| SimplicityVerdict {
        status: SimplicityStatus::NotSimple,
        witness: Some(w),
        reason: reason.to_string(),
    };
    if n == 1 {
        return SimplicityVerdict {
            status: SimplicityStatus::Simple,
            witness: None,
            reason: "one-dimensional".into(),
        };
    }
    let b_space = generated_algebra(field, n, &ops);
    if b_space.dim() == n * n {
        return SimplicityVerdict {
            status: SimplicityStatus::Simple,
            witness: None,
            reason: "operators generate all of End(K)".into(),
        };
    }
    let b_basis = operators(&b_space, n);
    let semisimple_known = trace_form_applies(field, n);
    if semisimple_known {
        let rad = trace_radical(field, n, &b_basis);
        if !rad.is_empty() {
            let images = rad.iter().flat_map(|r| (0..n).map(move |j| r.column(j)));
            let w = Subspace::from_vectors(field, n, images.collect::<Vec<_>>());
            return not_simple(w, "radical of the operator algebra");
        }
    }
    let comm = commutant(field, n, &ops);
    let comm_ops = operators(&comm, n);
    let mut candidates: Vec<Matrix> = comm_ops.clone();
    for i in 0..comm_ops.len() {
        for j in i + 1..comm_ops.len() {
            candidates.push(comm_ops[i].add(&comm_ops[j]));
        }
    }
    for c in &candidates {
        if let Some(s) = singular_shift(c) {
            return not_simple(s.image(), "singular commutant element");
        }
    }
    if semisimple_known && is_scalar_span(&comm, n) {
        return SimplicityVerdict {
            status: SimplicityStatus::Simple,
            witness: None,
            reason: "semisimple operator algebra with scalar commutant".into(),
        };
    }
    if let Field::Prime(p) = field {
        if (p as f64).powi(n as i32) <= 1e6 {
            return exhaustive(k, &ops, p);
        }
    }
    SimplicityVerdict {
        status: SimplicityStatus::Undecided,
        witness: None,
        reason: "commutant is a proper division algebra candidate".into(),
    }
}

fn exhaustive(k: &ComodAlg, ops: &[Matrix], p: u64) -> SimplicityVerdict {
    let field = k.field();
    let n = k.dim();
    let total = p.pow(n as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            v.push(field.from_i64((c % p) as i64));
            c /= p;
        }
        // One representative per line: first nonzero coordinate equal to one.
        if !v.iter().find(|x| !x.is_zero()).is_some_and(Scalar::is_one) {
            continue;
        }
        let s = spin(&Subspace::from_vectors(field, n, [v]), ops);
        if !s.is_full() {
            return SimplicityVerdict {
                status: SimplicityStatus::NotSimple,
                witness: Some(s),
                reason: "exhaustive search over lines".into(),
            };
        }
    }
    SimplicityVerdict {
        status: SimplicityStatus::Simple,
        witness: None,
        reason: "exhaustive search over lines".into(),
    }
}

/// Splits `c` by a root `λ` of its minimal polynomial, returning the commutant
/// idempotent projecting onto the generalized `λ`-eigenspace when it is proper.
fn split_by_root(c: &Matrix) -> Option<Matrix> {
    let field = c.field();
    let mu = minimal_polynomial(c);
    for lambda in mu.roots()? {
        let mut f = Poly::constant(field, field.one());
        let mut g = mu.clone();
        let lin = Poly::linear(field, &lambda);
        loop {
            let (q, r) = g.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            g = q;
            f = f.mul(&lin);
        }
        if g.degree() == Some(0) {
            continue;
        }
        // s·f + t·g = 1, so t·g(c) is the identity on ker f(c) and zero on ker g(c).
        let (_, t, _) = f.bezout(&g);
        return Some(t.mul(&g).eval_matrix(c));
    }
    None
}

/// Looks for a decomposition `K = I ⊕ J` into two-sided H-ideals.
pub fn h_indecomposable(k: &ComodAlg) -> DecompositionVerdict {
    let field = k.field();
    let n = k.dim();
    let verdict = |status, reason: &str| DecompositionVerdict {
        status,
        split: None,
        idempotent: None,
        reason: reason.to_string(),
    };
    let simple = h_simplicity(k, IdealSide::TwoSided);
    if simple.status == SimplicityStatus::Simple {
        return verdict(DecompositionStatus::Indecomposable, "two-sided H-simple");
    }
    let ops = ideal_operators(k, IdealSide::TwoSided);
    let comm = commutant(field, n, &ops);
    let comm_ops = operators(&comm, n);
    if trace_form_applies(field, n) {
        let rad = trace_radical(field, n, &comm_ops);
        if comm.dim() - rad.len() == 1 {
            return verdict(DecompositionStatus::Indecomposable, "local commutant");
        }
    }
    for c in &comm_ops {
        if let Some(e) = split_by_root(c) {
            let i = e.image();
            let j = e.kernel();
            let ok = (&e * &e) == e
                && !i.is_zero()
                && !j.is_zero()
                && i.intersect(&j).map(|x| x.is_zero()).unwrap_or(false)
                && i.sum(&j).map(|x| x.is_full()).unwrap_or(false)
                && is_h_ideal(k, &i, IdealSide::TwoSided)
                && is_h_ideal(k, &j, IdealSide::TwoSided);
            if ok {
                return DecompositionVerdict {
                    status: DecompositionStatus::Decomposable,
                    split: Some((i, j)),
                    idempotent: Some(e),
                    reason: "idempotent from a split minimal polynomial".into(),
                };
            }
        }
    }
    verdict(DecompositionStatus::Undecided, "no splitting idempotent found")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::AlgebraData;
    use crate::modcom::Side;
    use crate::zoo;

    fn kxk(h: &crate::hopf::HopfData) -> ComodAlg {
        let f = h.field();
        let alg = AlgebraData::from_products(f, 2, vec![f.one(), f.one()], |i, j| {
            let mut v = vec![f.zero(); 2];
            if i == j {
                v[i] = f.one();
            }
            v
        })
        .unwrap();
        ComodAlg::trivial(h, alg, Side::Left)
    }

    #[test]
    fn closure_basics() {
        let h = zoo::sweedler();
        let k = ComodAlg::regular(&h);
        let f = h.field();
        let zero = Subspace::zero(f, 4);
        assert_eq!(h_ideal_closure(&k, &zero, IdealSide::Left), zero);
        let one = Subspace::from_vectors(f, 4, [h.unit()]);
        assert!(h_ideal_closure(&k, &one, IdealSide::Left).is_full());
    }

    #[test]
    fn product_of_fields_is_not_simple() {
        let h = zoo::sweedler();
        let k = kxk(&h);
        for side in IdealSide::ALL {
            let v = h_simplicity(&k, side);
            assert_eq!(v.status, SimplicityStatus::NotSimple);
            let w = v.witness.unwrap();
            assert!(is_h_ideal(&k, &w, side));
        }
        let v = h_simplicity(&k, IdealSide::TwoSided);
        assert_eq!(v.witness.unwrap(), Subspace::coordinate(h.field(), 2, [0]));
        let d = h_indecomposable(&k);
        assert_eq!(d.status, DecompositionStatus::Decomposable);
        let (i, j) = d.split.unwrap();
        assert_eq!(i.dim() + j.dim(), 2);
    }

    #[test]
    fn regular_comodule_algebra_is_simple() {
        for h in [zoo::sweedler(), zoo::group_algebra(&zoo::GroupTable::symmetric(3))] {
            let k = ComodAlg::regular(&h);
            for side in IdealSide::ALL {
                assert_eq!(h_simplicity(&k, side).status, SimplicityStatus::Simple, "{side:?}");
            }
        }
    }

    #[test]
    fn group_algebra_over_f5_is_h_indecomposable() {
        let h = zoo::group_algebra_over(&zoo::GroupTable::cyclic(2), Field::Prime(5));
        let k = ComodAlg::regular(&h);
        assert_eq!(h_indecomposable(&k).status, DecompositionStatus::Indecomposable);
        // As a plain algebra with trivial coaction it splits.
        let plain = ComodAlg::trivial(&h, h.alg().clone(), Side::Left);
        assert_eq!(h_indecomposable(&plain).status, DecompositionStatus::Decomposable);
    }

    #[test]
    fn closure_is_extensive_monotone_idempotent() {
        let h = zoo::sweedler();
        let k = kxk(&h);
        let f = h.field();
        let a = Subspace::coordinate(f, 2, [1]);
        let c = h_ideal_closure(&k, &a, IdealSide::Left);
        assert!(a.is_subspace_of(&c).unwrap());
        assert_eq!(h_ideal_closure(&k, &c, IdealSide::Left), c);
        let bigger = Subspace::full(f, 2);
        assert!(c.is_subspace_of(&h_ideal_closure(&k, &bigger, IdealSide::Left)).unwrap());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::zoo;

    fn algebras() -> Vec<ComodAlg> {
        vec![
            ComodAlg::regular(&zoo::sweedler()),
            zoo::twisted_group_algebra(&zoo::GroupTable::symmetric(3), &[0, 3, 4], &zoo::Cocycle::trivial(Field::Rationals, 3))
                .unwrap(),
            ComodAlg::trivial(&zoo::sweedler(), crate::hopf::AlgebraData::matrix_algebra(Field::Rationals, 2), crate::modcom::Side::Left),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn closure_is_extensive_idempotent_and_monotone(
            which in 0usize..3,
            side in prop_oneof![Just(IdealSide::Left), Just(IdealSide::Right), Just(IdealSide::TwoSided)],
            a in proptest::collection::vec(-2i64..3, 4),
            b in proptest::collection::vec(-2i64..3, 4),
        ) {
            let k = &algebras()[which];
            let f = k.field();
            let d = k.dim();
            let va: Vec<Scalar> = a.iter().take(d).map(|&x| f.from_i64(x)).collect();
            let vb: Vec<Scalar> = b.iter().take(d).map(|&x| f.from_i64(x)).collect();
            let small = Subspace::from_vectors(f, d, [va.clone()]);
            let big = Subspace::from_vectors(f, d, [va, vb]);
            let c_small = h_ideal_closure(k, &small, side);
            let c_big = h_ideal_closure(k, &big, side);
            prop_assert!(small.is_subspace_of(&c_small).unwrap());
            prop_assert_eq!(&h_ideal_closure(k, &c_small, side), &c_small);
            prop_assert!(c_small.is_subspace_of(&c_big).unwrap());
            prop_assert!(is_h_ideal(k, &c_big, side));
        }
    }
}
