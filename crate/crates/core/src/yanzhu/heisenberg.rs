//! The Heisenberg double `ℋ(H*)` on `H* ⊗ H` and its two regular pictures.
//!
//! Basis `e^a ⊗ e_b` at index `a * dim H + b`, product
//! `(α ⊗ h)(α' ⊗ h') = α (h₁ ⇀ α') ⊗ h₂ h'`. Operators on `H` and `H*` are vectorized
//! row-major.

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::hopf::tensor::{axpy, outer};
use crate::hopf::{harpoon, AlgebraData, HarpoonKind, HarpoonSide, HopfData};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergData {
    pub hopf: HopfData,
    pub alg: AlgebraData,
    /// Column `x` is `Ψ₁(x)` with `Ψ₁(α ⊗ h)(t) = α ⇁ (h t)`.
    pub psi1: Matrix,
    /// Column `x` is `Ψ₂(x)` with `Ψ₂(α ⊗ h)(β) = α (h ⇀ β)`.
    pub psi2: Matrix,
    /// `Ψ = Ψ₂ Ψ₁⁻¹ : End(H) → End(H*)`.
    pub psi: Matrix,
}

fn vec_of(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

fn span_of(field: crate::exactlin::Field, n: usize, ops: &[Matrix]) -> Subspace {
    Subspace::from_vectors(field, n * n, ops.iter().map(vec_of))
}

pub fn heisenberg(h: &HopfData) -> Result<HeisenbergData> {
    let n = h.dim();
    let f = h.field();
    let dual = h.dual();
    let hit = harpoon(h, HarpoonKind::HitLeft, HarpoonSide::OnDual).matrices;
    let twisted_base = harpoon(h, HarpoonKind::TwistedLeft, HarpoonSide::OnBase).matrices;
    let unit = outer(h.counit(), h.unit());
    let alg = AlgebraData::from_products(f, n * n, unit, |x, y| {
        let (a, b) = (x / n, x % n);
        let (c, d) = (y / n, y % n);
        let mut out = vec![f.zero(); n * n];
        for (p, q, coef) in h.comult().slab_nonzeros(b) {
            let moved = hit[p].column(c);
            let left = dual.alg().product(&crate::hopf::tensor::unit_vector(f, n, a), &moved);
            axpy(&mut out, coef, &outer(&left, h.alg().basis_product(q, d)));
        }
        out
    })?;
    let psi1_ops: Vec<Matrix> = (0..n * n).map(|x| &twisted_base[x / n] * &h.alg().left_mult(x % n)).collect();
    let psi2_ops: Vec<Matrix> = (0..n * n).map(|x| &dual.alg().left_mult(x / n) * &hit[x % n]).collect();
    let cols = |ops: &[Matrix]| Matrix::from_columns(f, n * n, &ops.iter().map(vec_of).collect::<Vec<_>>());
    let psi1 = cols(&psi1_ops);
    let psi2 = cols(&psi2_ops);
    let inv = psi1.inverse().map_err(|_| Error::invalid("Ψ₁ is not bijective"))?;
    let psi = &psi2 * &inv;
    Ok(HeisenbergData { hopf: h.clone(), alg, psi1, psi2, psi })
}

impl HeisenbergData {
    /// `Ψ` applied to an operator on `H`.
    pub fn apply_psi(&self, op: &Matrix) -> Matrix {
        let n = self.hopf.dim();
        Matrix::from_vec(self.hopf.field(), n, n, self.psi.apply(op.data())).expect("square operator")
    }

    /// `Ψ⁻¹` applied to an operator on `H*`.
    pub fn apply_psi_inverse(&self, op: &Matrix) -> Result<Matrix> {
        let n = self.hopf.dim();
        let v = self.psi.solve(op.data())?.ok_or(Error::Singular)?;
        Matrix::from_vec(self.hopf.field(), n, n, v)
    }
}

fn check_algebra_map(r: &mut Report, name: &str, alg: &AlgebraData, map: &Matrix, n: usize) {
    let f = alg.field();
    let dim = alg.dim();
    let op = |v: &[Scalar]| Matrix::from_vec(f, n, n, map.apply(v)).expect("square");
    let ops: Vec<Matrix> = (0..dim).map(|x| Matrix::from_vec(f, n, n, map.column(x)).expect("square")).collect();
    r.expect(op(alg.unit()).is_identity(), || format!("{name} is not unital"));
    for x in 0..dim {
        for y in 0..dim {
            let lhs = op(alg.basis_product(x, y));
            if !r.expect(lhs == &ops[x] * &ops[y], || format!("{name} not multiplicative at ({x},{y})")) {
                return;
            }
        }
    }
    let rank = map.rank();
    r.expect(rank == dim, || format!("{name} has rank {rank} < {dim}"));
}

/// `Ψ₁`, `Ψ₂` are bijective algebra maps, the four image identities hold and the
/// center of `ℋ(H*)` is the scalars.
pub fn heisenberg_check(h: &HopfData) -> Result<Report> {
    let mut r = Report::new("heisenberg", "Heisenberg double and the isomorphisms Ψ₁, Ψ₂, Ψ");
    let hd = heisenberg(h)?;
    let n = h.dim();
    let f = h.field();
    r.absorb(&hd.alg.check());
    check_algebra_map(&mut r, "Ψ₁", &hd.alg, &hd.psi1, n);
    check_algebra_map(&mut r, "Ψ₂", &hd.alg, &hd.psi2, n);
    let dual = h.dual();
    let twisted_base = harpoon(h, HarpoonKind::TwistedLeft, HarpoonSide::OnBase).matrices;
    let twisted_dual = harpoon(h, HarpoonKind::TwistedLeft, HarpoonSide::OnDual).matrices;
    let hit_dual = harpoon(h, HarpoonKind::HitLeft, HarpoonSide::OnDual).matrices;
    let hit_base = harpoon(h, HarpoonKind::HitLeft, HarpoonSide::OnBase).matrices;
    for (a, tb) in twisted_base.iter().enumerate() {
        r.expect(hd.apply_psi(tb) == dual.alg().left_mult(a), || format!("Ψ(α ⇁ ·) ≠ L_α at α = e^{a}"));
    }
    let image = |ops: &[Matrix]| span_of(f, n, &ops.iter().map(|m| hd.apply_psi(m)).collect::<Vec<_>>());
    let left_h: Vec<Matrix> = (0..n).map(|b| h.alg().left_mult(b)).collect();
    let right_h: Vec<Matrix> = (0..n).map(|b| h.alg().right_mult(b)).collect();
    let right_dual: Vec<Matrix> = (0..n).map(|a| dual.alg().right_mult(a)).collect();
    r.expect(image(&left_h) == span_of(f, n, &hit_dual), || "Ψ(L(H)) ≠ (H ⇀ ·)".into());
    r.expect(image(&hit_base) == span_of(f, n, &right_dual), || "Ψ(H* ⇀ ·) ≠ R(H*)".into());
    r.expect(image(&right_h) == span_of(f, n, &twisted_dual), || "Ψ(R(H)) ≠ (H ⇁ ·)".into());
    let center = hd.alg.center().dim();
    r.fact("center_dim", center);
    r.expect(center == 1, || format!("center has dimension {center}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{self, GroupTable};

    #[test]
    fn psi1_sends_unit_to_identity() {
        let h = zoo::sweedler();
        let hd = heisenberg(&h).unwrap();
        let one = Matrix::from_vec(h.field(), 4, 4, hd.psi1.apply(hd.alg.unit())).unwrap();
        assert!(one.is_identity());
    }

    #[test]
    fn checks_pass_on_small_examples() {
        for h in [zoo::group_algebra(&GroupTable::cyclic(2)), zoo::sweedler(), zoo::sweedler().dual()] {
            let r = heisenberg_check(&h).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn z2_double_over_f3_is_a_matrix_algebra() {
        let f3 = crate::exactlin::Field::prime(3).unwrap();
        let h = zoo::group_algebra_over(&GroupTable::cyclic(2), f3);
        let hd = heisenberg(&h).unwrap();
        assert_eq!(hd.alg.center().dim(), 1);
        assert!(!hd.alg.is_commutative());
    }
}
