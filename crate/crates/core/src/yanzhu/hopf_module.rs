//! Hopf-module structures on `End(H*)` and `End(H)`.
//!
//! On `End(H*)`: `(α·f)(β) = f(β α₂) S⁻¹(α₁)` and `(f·h)(β) = f(h ⇀ β)`.
//! On `End(H)`: `(f·h)(t) = S(h₁) f(h₂ t)` and `(f·α)(t) = f(α ⇀ t)`.
//! Operators are vectorized row-major, so `vec(A f B) = (A ⊗ Bᵀ) vec(f)`.

use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::hopf::{harpoon, HarpoonKind, HarpoonSide, HopfData};
use crate::modcom::{ModuleRep, Side};
use crate::report::Report;

/// Left `H*`-action on `End(H*)`, one operator on the vectorized space per `e^a`.
pub fn dual_end_left_action(h: &HopfData) -> Vec<Matrix> {
    let n = h.dim();
    let f = h.field();
    let dual = h.dual();
    // S*⁻¹(e^p) = Σ_i S⁻¹[p][i] e^i.
    let right_sinv: Vec<Matrix> = (0..n).map(|p| dual.alg().right_mult_by(h.antipode_inv().row(p))).collect();
    let right_t: Vec<Matrix> = (0..n).map(|q| dual.alg().right_mult(q).transpose()).collect();
    (0..n)
        .map(|a| {
            let mut m = Matrix::zeros(f, n * n, n * n);
            // Δ*(e^a) = Σ m[p][q][a] e^p ⊗ e^q.
            for p in 0..n {
                for q in 0..n {
                    let c = h.mult().get(p, q, a);
                    if !c.is_zero() {
                        m.add_scaled(c, &right_sinv[p].kron(&right_t[q]));
                    }
                }
            }
            m
        })
        .collect()
}

/// Right `H`-action `f ↦ f ∘ (h ⇀)` on `End(H*)`.
pub fn dual_end_right_action(h: &HopfData) -> Vec<Matrix> {
    let id = Matrix::identity(h.field(), h.dim());
    harpoon(h, HarpoonKind::HitLeft, HarpoonSide::OnDual).matrices.iter().map(|m| id.kron(&m.transpose())).collect()
}

/// Right `H`-action `f ↦ Σ L_{S(h₁)} f L_{h₂}` on `End(H)`.
pub fn base_end_h_action(h: &HopfData) -> Vec<Matrix> {
    let n = h.dim();
    let f = h.field();
    let left_s: Vec<Matrix> = (0..n).map(|p| h.alg().left_mult_by(&h.antipode().column(p))).collect();
    let left_t: Vec<Matrix> = (0..n).map(|q| h.alg().left_mult(q).transpose()).collect();
    (0..n)
        .map(|b| {
            let mut m = Matrix::zeros(f, n * n, n * n);
            for (p, q, c) in h.comult().slab_nonzeros(b) {
                m.add_scaled(c, &left_s[p].kron(&left_t[q]));
            }
            m
        })
        .collect()
}

/// Right `H*`-action `f ↦ f ∘ (α ⇀)` on `End(H)`.
pub fn base_end_dual_action(h: &HopfData) -> Vec<Matrix> {
    let id = Matrix::identity(h.field(), h.dim());
    harpoon(h, HarpoonKind::HitLeft, HarpoonSide::OnBase).matrices.iter().map(|m| id.kron(&m.transpose())).collect()
}

fn combine(f: crate::exactlin::Field, size: usize, coefs: &[Scalar], ops: &[Matrix]) -> Matrix {
    let mut m = Matrix::zeros(f, size, size);
    for (c, op) in coefs.iter().zip(ops) {
        if !c.is_zero() {
            m.add_scaled(c, op);
        }
    }
    m
}

/// `{x : A_i x = c_i x for all i}`.
fn eigen_common(f: crate::exactlin::Field, size: usize, ops: &[Matrix], scalars: &[Scalar]) -> Subspace {
    let blocks: Vec<Matrix> =
        ops.iter().zip(scalars).map(|(a, c)| a.sub(&Matrix::identity(f, size).scale(c))).collect();
    Matrix::vstack(f, size, &blocks).kernel()
}

pub fn hopf_module_checks(h: &HopfData) -> crate::Result<Report> {
    let mut r = Report::new("hopf-modules", "Hopf-module structures on End(H*) and End(H)");
    let n = h.dim();
    let f = h.field();
    let size = n * n;
    let dual = h.dual();
    let hit_base = harpoon(h, HarpoonKind::HitLeft, HarpoonSide::OnBase).matrices;
    let hit_right_dual = harpoon(h, HarpoonKind::HitRight, HarpoonSide::OnDual).matrices;

    // End(H*): module axioms, then α·(f·h) = (α₁·f)·(α₂ ⇀ h).
    let left = dual_end_left_action(h);
    let right = dual_end_right_action(h);
    // A left action of H* composes as ρ(αβ) = ρ(α)ρ(β); a right action of H as ρ(ht) = ρ(t)ρ(h).
    r.absorb(&ModuleRep::new(f, size, Side::Left, left.clone())?.check(dual.alg()));
    r.absorb(&ModuleRep::new(f, size, Side::Right, right.clone())?.check(h.alg()));
    'a: for a in 0..n {
        for b in 0..n {
            let lhs = &left[a] * &right[b];
            let mut rhs = Matrix::zeros(f, size, size);
            for p in 0..n {
                for q in 0..n {
                    let c = h.mult().get(p, q, a);
                    if c.is_zero() {
                        continue;
                    }
                    let moved = hit_base[q].column(b);
                    rhs.add_scaled(c, &(&combine(f, size, &moved, &right) * &left[p]));
                }
            }
            if !r.expect(lhs == rhs, || format!("End(H*) Hopf-module compatibility at (α,h)=({a},{b})")) {
                break 'a;
            }
        }
    }
    let coinv = eigen_common(f, size, &left, h.unit());
    let l_dual = Subspace::from_vectors(f, size, (0..n).map(|a| dual.alg().left_mult(a).data().to_vec()));
    r.fact("end_dual_coinvariants_dim", coinv.dim());
    r.expect(coinv == l_dual, || "coinvariants of End(H*) differ from L(H*)".into());
    r.expect(coinv.dim() * n == size, || "End(H*) is not coinvariants ⊗ H by dimension".into());

    // End(H): (f·α)·h = (f·h₁)·(α ↼ h₂).
    let h_act = base_end_h_action(h);
    let d_act = base_end_dual_action(h);
    r.absorb(&ModuleRep::new(f, size, Side::Right, h_act.clone())?.check(h.alg()));
    r.absorb(&ModuleRep::new(f, size, Side::Right, d_act.clone())?.check(dual.alg()));
    'b: for a in 0..n {
        for b in 0..n {
            let lhs = &h_act[b] * &d_act[a];
            let mut rhs = Matrix::zeros(f, size, size);
            for (p, q, c) in h.comult().slab_nonzeros(b) {
                let moved = hit_right_dual[q].column(a);
                rhs.add_scaled(c, &(&combine(f, size, &moved, &d_act) * &h_act[p]));
            }
            if !r.expect(lhs == rhs, || format!("End(H) Hopf-module compatibility at (α,h)=({a},{b})")) {
                break 'b;
            }
        }
    }
    let coinv_h = eigen_common(f, size, &h_act, h.counit());
    let r_h = Subspace::from_vectors(f, size, (0..n).map(|b| h.alg().right_mult(b).data().to_vec()));
    r.fact("end_base_coinvariants_dim", coinv_h.dim());
    r.expect(coinv_h == r_h, || "coinvariants of End(H) differ from R(H)".into());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{self, GroupTable};

    #[test]
    fn small_cases_pass() {
        for h in [zoo::group_algebra(&GroupTable::cyclic(2)), zoo::sweedler(), zoo::group_algebra(&GroupTable::symmetric(3))] {
            let r = hopf_module_checks(&h).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.get_fact("end_dual_coinvariants_dim"), Some(h.dim().to_string().as_str()));
        }
    }
}
