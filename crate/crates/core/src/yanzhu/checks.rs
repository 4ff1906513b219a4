//! Verifiers for the structural statements about `St_K(U, W)`.

use crate::error::Result;
use crate::exactlin::{Matrix, Subspace};
use crate::hopf::{harpoon, HarpoonKind, HarpoonSide};
use crate::modcom::ideals::{h_simplicity, IdealSide, SimplicityStatus};
use crate::modcom::{ComodAlg, ComoduleStr, ModuleRep, Side};
use crate::report::Report;
use crate::yanzhu::stab::{check_left_modules, unit};
use crate::yanzhu::{dual_tensor_rep, ell_matrix, hom_k, hom_k_dual_tensor, stab_space};

/// Records the two-sided simplicity verdict (and the one-sided ones as facts);
/// returns whether `K` is certified two-sided H-simple.
fn certify_simple(r: &mut Report, k: &ComodAlg) -> bool {
    let mut simple = false;
    for side in IdealSide::ALL {
        let v = h_simplicity(k, side);
        r.fact(format!("h_simple_{}", side.as_str()), v.status.as_str());
        if side == IdealSide::TwoSided {
            simple = v.status == SimplicityStatus::Simple;
        }
    }
    simple
}

/// `St_K(U, W)^{co H*} ≅ Hom_K(U, W)` through `φ(α ⊗ f) = ⟨α, 1⟩ f` and `ψ(f) = ε ⊗ f`.
pub fn stab_coinvariants_check(k: &ComodAlg, u: &ModuleRep, w: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("stabilizer-coinvariants", "coinvariants of St_K(U, W) are Hom_K(U, W)");
    let st = stab_space(k, u, w)?;
    let h = &k.hopf;
    let f = h.field();
    let (du, dw) = (u.dim(), w.dim());
    let amb = st.ambient_dim();
    // Coinvariants for the H*-coaction are the invariants of the H-action ⇀ on the first leg.
    let blocks: Vec<Matrix> = st
        .ambient_action()
        .iter()
        .zip(h.counit())
        .map(|(a, e)| a.sub(&Matrix::identity(f, amb).scale(e)))
        .collect();
    let invariants = Matrix::vstack(f, amb, &blocks).kernel();
    let coinv = invariants.intersect(&st.space)?;
    let hom = hom_k(k.dim(), u, w);
    let phi = Matrix::from_fn(f, dw * du, amb, |row, col| {
        let a = col / (dw * du);
        if col % (dw * du) == row {
            h.unit()[a].clone()
        } else {
            f.zero()
        }
    });
    let psi = Matrix::from_fn(f, amb, dw * du, |row, col| {
        if row % (dw * du) == col {
            h.counit()[row / (dw * du)].clone()
        } else {
            f.zero()
        }
    });
    r.fact("dim_coinvariants", coinv.dim());
    r.fact("dim_hom_k", hom.dim());
    r.expect(hom.image_under(&psi) == coinv, || "ψ(Hom_K(U, W)) differs from the coinvariants".into());
    r.expect(coinv.image_under(&phi) == hom, || "φ(coinvariants) differs from Hom_K(U, W)".into());
    r.expect((&phi * &psi).is_identity(), || "φψ is not the identity".into());
    for (i, x) in coinv.basis_vectors().enumerate() {
        let back = psi.apply(&phi.apply(x));
        if !r.expect(back == x, || format!("ψφ moves coinvariant basis element {i}")) {
            break;
        }
    }
    Ok(r)
}

/// Kernel of `ρ: K → End(H* ⊗ W)`, `ρ(k)(α ⊗ w) = k₋₁ ⇁ α ⊗ k₀·w`; it must vanish when
/// `K` is H-simple.
pub fn faithfulness_check(k: &ComodAlg, w: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("faithfulness", "K acts faithfully on H* ⊗ W when H-simple");
    let ops = dual_tensor_rep(k, w)?;
    let f = k.field();
    let columns: Vec<Vec<_>> = ops.iter().map(|m| m.data().to_vec()).collect();
    let size = ops.first().map_or(0, |m| m.rows() * m.cols());
    let kernel = Matrix::from_columns(f, size, &columns).kernel();
    r.fact("kernel_dim", kernel.dim());
    let simple = certify_simple(&mut r, k);
    if !kernel.is_zero() {
        let witness = format!("kernel element {:?}", kernel.basis_vectors().next().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()));
        if simple {
            r.fail(witness);
        } else {
            r.hypothesis_unmet(witness);
        }
    } else if !simple {
        r.hypothesis_unmet("K is not certified H-simple");
    }
    Ok(r)
}

/// `dim K · dim St_K(U, W) = dim U · dim W · dim H`, and `dim K` divides the right side.
pub fn dim_formula_check(k: &ComodAlg, u: &ModuleRep, w: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("dimension-formula", "dim K · dim St_K(U, W) = dim U · dim W · dim H");
    let st = stab_space(k, u, w)?;
    let lhs = k.dim() * st.dim();
    let rhs = u.dim() * w.dim() * k.hopf.dim();
    r.fact("dim_st", st.dim());
    r.fact("lhs", lhs);
    r.fact("rhs", rhs);
    let simple = certify_simple(&mut r, k);
    let holds = lhs == rhs && rhs.is_multiple_of(k.dim());
    if simple {
        r.expect(lhs == rhs, || format!("{lhs} ≠ {rhs}"));
        r.expect(rhs.is_multiple_of(k.dim()), || format!("{} does not divide {rhs}", k.dim()));
    } else {
        r.hypothesis_unmet(if holds { "K is not certified H-simple" } else { "K is not certified H-simple; formula fails" });
    }
    Ok(r)
}

/// The left `H`-coaction on `H* ⊗ W` with `⟨β, α₋₁⟩ α₀ = α S²(β)` is coassociative,
/// counital and `K`-linear.
pub fn tensor_dual_object_check(k: &ComodAlg, w: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("tensor-dual-object", "H* ⊗ W is a relative (K, H)-module");
    check_left_modules(k, &[w])?;
    let h = &k.hopf;
    let f = h.field();
    let n = h.dim();
    let dw = w.dim();
    let big = n * dw;
    let dual = h.dual();
    let s2 = h.antipode_power(2);
    let id_w = Matrix::identity(f, dw);
    // S*²(e^b) has coordinates (S²)[b][·].
    let ops: Vec<Matrix> = (0..n).map(|b| dual.alg().right_mult_by(s2.row(b)).kron(&id_w)).collect();
    let coaction = ComoduleStr::from_operators(Side::Left, &ops);
    r.absorb(&coaction.check(h));
    let rho = dual_tensor_rep(k, w)?;
    let delta = coaction.coaction();
    for x in 0..k.dim() {
        let lhs = delta * &rho[x];
        let lam = k.coact.coact(&unit(f, k.dim(), x));
        let mut diag = Matrix::zeros(f, n * big, n * big);
        for hh in 0..n {
            for x2 in 0..k.dim() {
                let c = &lam[hh * k.dim() + x2];
                if !c.is_zero() {
                    diag.add_scaled(c, &h.alg().left_mult(hh).kron(&rho[x2]));
                }
            }
        }
        let rhs = &diag * delta;
        if !r.expect(lhs == rhs, || format!("coaction is not K-linear at basis element {x}")) {
            break;
        }
    }
    Ok(r)
}

/// `Hom_K(H* ⊗ U, H* ⊗ W)` computed directly is a Hopf submodule of `End(H*) ⊗ Hom(U, W)`,
/// its coinvariants are `𝓛(St_K(U, W))`, its dimension is `dim St · dim H`, and it equals
/// `St ∘ (L̲(H) ⊗ id)`.
pub fn stabmodhopf_check(k: &ComodAlg, u: &ModuleRep, w: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("stabilizer-hopf-module", "Hom_K(H*⊗U, H*⊗W) ≅ St_K(U, W) ⊗ H");
    let h = &k.hopf;
    let f = h.field();
    let (n, du, dw) = (h.dim(), u.dim(), w.dim());
    let (rows, cols) = (n * dw, n * du);
    let hom = hom_k_dual_tensor(k, u, w)?;
    let st = stab_space(k, u, w)?;
    r.fact("dim_hom", hom.dim());
    r.fact("dim_st", st.dim());
    let as_op = |v: &[crate::exactlin::Scalar]| Matrix::from_vec(f, rows, cols, v.to_vec()).expect("shape");
    // The End(H*) actions, extended by the identity on Hom(U, W), act by composition.
    let dual = h.dual();
    let right_sinv: Vec<Matrix> = (0..n).map(|p| dual.alg().right_mult_by(h.antipode_inv().row(p))).collect();
    let right: Vec<Matrix> = (0..n).map(|q| dual.alg().right_mult(q)).collect();
    let hit = harpoon(h, HarpoonKind::HitLeft, HarpoonSide::OnDual).matrices;
    let id_u = Matrix::identity(f, du);
    let id_w = Matrix::identity(f, dw);
    let left_act = |a: usize, m: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(f, rows, cols);
        for p in 0..n {
            for q in 0..n {
                let c = h.mult().get(p, q, a);
                if !c.is_zero() {
                    let t = &(&right_sinv[p].kron(&id_w) * m) * &right[q].kron(&id_u);
                    out.add_scaled(c, &t);
                }
            }
        }
        out
    };
    let right_act = |b: usize, m: &Matrix| -> Matrix { m * &hit[b].kron(&id_u) };
    let basis: Vec<Matrix> = hom.basis_vectors().map(as_op).collect();
    'stable: for (i, m) in basis.iter().enumerate() {
        for a in 0..n {
            if !r.expect(hom.contains(left_act(a, m).data()), || format!("H*-action leaves Hom_K at ({a},{i})")) {
                break 'stable;
            }
            if !r.expect(hom.contains(right_act(a, m).data()), || format!("H-action leaves Hom_K at ({a},{i})")) {
                break 'stable;
            }
        }
    }
    // Coinvariants inside Hom_K: Σ c_i (α·F_i − ⟨α, 1⟩ F_i) = 0 for all α.
    let dim = hom.dim();
    let mut blocks = Vec::with_capacity(n);
    for a in 0..n {
        let columns: Vec<Vec<_>> = basis
            .iter()
            .map(|m| {
                let v = left_act(a, m).sub(&m.scale(&h.unit()[a]));
                hom.coordinates(v.data()).unwrap_or_else(|| vec![f.zero(); dim])
            })
            .collect();
        blocks.push(Matrix::from_columns(f, dim, &columns));
    }
    let coefficients = if dim == 0 { Subspace::zero(f, 0) } else { Matrix::vstack(f, dim, &blocks).kernel() };
    let coinv = Subspace::from_vectors(f, rows * cols, coefficients.basis_vectors().map(|c| hom.combine(c)));
    let ell = ell_matrix(h, du, dw);
    let image = st.space.image_under(&ell);
    r.fact("dim_coinvariants", coinv.dim());
    r.expect(coinv == image, || "coinvariants of Hom_K differ from 𝓛(St)".into());
    r.expect(hom.dim() == st.dim() * n, || format!("dim Hom_K = {} but dim St · dim H = {}", hom.dim(), st.dim() * n));
    let id_u = &id_u;
    let hit = &hit;
    let composed = Subspace::from_vectors(
        f,
        rows * cols,
        st.space.basis_vectors().flat_map(|x| {
            let l = as_op(&ell.apply(x));
            hit.iter().map(move |hm| (&l * &hm.kron(id_u)).into_data()).collect::<Vec<_>>()
        }),
    );
    r.expect(composed == hom, || "Hom_K differs from St ∘ (L̲(H) ⊗ id)".into());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::hopf::AlgebraData;
    use crate::zoo::{self, GroupTable};

    fn sweedler_coideal() -> (ComodAlg, ModuleRep) {
        let h = zoo::sweedler();
        let f = h.field();
        let k = zoo::coideal_subalgebra(&h, &Subspace::coordinate(f, 4, [0, 1])).unwrap();
        (k, ModuleRep::character(f, Side::Left, &[f.one(), f.zero()]))
    }

    #[test]
    fn sweedler_coideal_passes_everything() {
        let (k, eps) = sweedler_coideal();
        for r in [
            stab_coinvariants_check(&k, &eps, &eps).unwrap(),
            faithfulness_check(&k, &eps).unwrap(),
            dim_formula_check(&k, &eps, &eps).unwrap(),
            tensor_dual_object_check(&k, &eps).unwrap(),
            stabmodhopf_check(&k, &eps, &eps).unwrap(),
        ] {
            assert!(r.passed(), "{r}");
        }
        let r = stabmodhopf_check(&k, &eps, &eps).unwrap();
        assert_eq!(r.get_fact("dim_hom"), Some("8"));
    }

    #[test]
    fn group_case_hom_has_dimension_eighteen() {
        let g = GroupTable::symmetric(3);
        let k = zoo::twisted_group_algebra(&g, &[0, 1], &zoo::Cocycle::trivial(Field::Rationals, 2)).unwrap();
        let f = k.field();
        let triv = ModuleRep::character(f, Side::Left, &[f.one(), f.one()]);
        let r = stabmodhopf_check(&k, &triv, &triv).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_hom"), Some("18"));
    }

    #[test]
    fn split_algebra_with_trivial_coaction_is_not_faithful() {
        let h = zoo::sweedler();
        let f = h.field();
        // F × F with idempotent basis.
        let alg = AlgebraData::from_products(f, 2, vec![f.one(), f.one()], |i, j| {
            let mut v = vec![f.zero(); 2];
            if i == j {
                v[i] = f.one();
            }
            v
        })
        .unwrap();
        let k = ComodAlg::trivial(&h, alg, Side::Left);
        let first = ModuleRep::character(f, Side::Left, &[f.one(), f.zero()]);
        let r = faithfulness_check(&k, &first).unwrap();
        assert_eq!(r.get_fact("kernel_dim"), Some("1"));
        assert!(!r.passed());
    }

    #[test]
    fn non_isomorphic_simples_have_no_coinvariants() {
        let f7 = Field::prime(7).unwrap();
        let g = GroupTable::symmetric(3);
        // Z₃ = {e, (012), (021)} is elements 0, 3, 4 in lexicographic order.
        let k = zoo::twisted_group_algebra(&g, &[0, 3, 4], &zoo::Cocycle::trivial(f7, 3)).unwrap();
        let triv = ModuleRep::character(f7, Side::Left, &[f7.one(), f7.one(), f7.one()]);
        let omega = ModuleRep::character(f7, Side::Left, &[f7.one(), f7.from_i64(2), f7.from_i64(4)]);
        let r = stab_coinvariants_check(&k, &triv, &omega).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_hom_k"), Some("0"));
        assert_eq!(r.get_fact("dim_coinvariants"), Some("0"));
    }
}
