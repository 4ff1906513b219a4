//! Standard identities between the harpoon actions, checked on basis tuples.
//!
//! By multilinearity each identity holds in general once it holds for basis
//! elements, so every check below is exhaustive over the basis.

use rayon::prelude::*;

use crate::exactlin::{Matrix, Scalar};
use crate::hopf::harpoon::{HarpoonSide, Harpoons};
use crate::hopf::tensor::{axpy, unit_vector};
use crate::hopf::HopfData;
use crate::report::Report;

/// `(h ⇁ β) α = (h ↼ S⁻²(α₁)) ⇁ (β α₂)` for `h ∈ H`, `α, β ∈ H*`.
pub fn check_twisted_product(h: &HopfData) -> Report {
    let mut r = Report::new("twisted-product-identity", "(h⇁β)α = (h↼S⁻²(α₁))⇁(βα₂)");
    let n = h.dim();
    let f = h.field();
    let d = h.dual();
    let on_dual = Harpoons::new(h, HarpoonSide::OnDual);
    let on_base = Harpoons::new(h, HarpoonSide::OnBase);
    // Antipode of H* squared inverse, applied to dual basis vectors.
    let s2inv = d.antipode_power(-2);
    // For each (b, p): the operator of (e_b ↼ S*⁻²(e^p)) ⇁ · on H*.
    let twisted: Vec<Vec<Matrix>> = (0..n)
        .map(|b| {
            (0..n)
                .map(|p| {
                    let g = s2inv.column(p);
                    let hb = on_base.hit_right.apply(&g, &unit_vector(f, n, b));
                    on_dual.twisted_left.of(&hb)
                })
                .collect()
        })
        .collect();
    let failures: Vec<String> = (0..n)
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut out = Vec::new();
            for j in 0..n {
                let hb_beta = on_dual.twisted_left.matrices[b].column(j);
                for a in 0..n {
                    let lhs = d.product(&hb_beta, &unit_vector(f, n, a));
                    let mut rhs = vec![f.zero(); n];
                    for (p, q, c) in d.comult().slab_nonzeros(a) {
                        let beta_q = d.alg().basis_product(j, q);
                        let w = twisted[b][p].apply(beta_q);
                        axpy(&mut rhs, c, &w);
                    }
                    if lhs != rhs {
                        out.push(format!("(h,β,α)=({b},{j},{a})"));
                    }
                }
            }
            out
        })
        .collect();
    for w in failures {
        r.fail(w);
    }
    r
}

/// `(h t) ⇂ α = (h ⇂ α₂)(t ⇂ α₁)` for `h, t ∈ H`, `α ∈ H*`.
pub fn check_twisted_right_antimultiplicative(h: &HopfData) -> Report {
    let mut r = Report::new("twisted-right-identity", "(ht)⇂α = (h⇂α₂)(t⇂α₁)");
    let n = h.dim();
    let f = h.field();
    let d = h.dual();
    let tr = Harpoons::new(h, HarpoonSide::OnBase).twisted_right;
    for x in 0..n {
        for t in 0..n {
            for a in 0..n {
                let lhs = tr.matrices[a].apply(h.alg().basis_product(x, t));
                let mut rhs = vec![f.zero(); n];
                for (p, q, c) in d.comult().slab_nonzeros(a) {
                    let hx = tr.matrices[q].column(x);
                    let ht = tr.matrices[p].column(t);
                    axpy(&mut rhs, c, &h.product(&hx, &ht));
                }
                r.expect(lhs == rhs, || format!("(h,t,α)=({x},{t},{a})"));
            }
        }
    }
    r
}

/// `h (α ⇁ u) = (h₁ ⇀ α) ⇁ (h₂ u)` for `h, u ∈ H`, `α ∈ H*`.
pub fn check_heisenberg_auxiliary(h: &HopfData) -> Report {
    let mut r = Report::new("heisenberg-auxiliary-identity", "h(α⇁u) = (h₁⇀α)⇁(h₂u)");
    let n = h.dim();
    let f = h.field();
    let on_dual = Harpoons::new(h, HarpoonSide::OnDual);
    let on_base = Harpoons::new(h, HarpoonSide::OnBase);
    for x in 0..n {
        for a in 0..n {
            for u in 0..n {
                let lhs = h.product(&unit_vector(f, n, x), &on_base.twisted_left.matrices[a].column(u));
                let mut rhs = vec![f.zero(); n];
                for (p, q, c) in h.comult().slab_nonzeros(x) {
                    let gamma = on_dual.hit_left.matrices[p].column(a);
                    let w = on_base.twisted_left.apply(&gamma, h.alg().basis_product(q, u));
                    axpy(&mut rhs, c, &w);
                }
                r.expect(lhs == rhs, || format!("(h,α,u)=({x},{a},{u})"));
            }
        }
    }
    r
}

/// With respect to `⇀`, `H*` is a left `H`-module algebra.
pub fn check_hit_module_algebra(h: &HopfData) -> Report {
    let mut r = Report::new("hit-module-algebra", "H* is an H-module algebra under ⇀");
    let n = h.dim();
    let f = h.field();
    let d = h.dual();
    let hit = Harpoons::new(h, HarpoonSide::OnDual).hit_left;
    for x in 0..n {
        for a in 0..n {
            for b in 0..n {
                let lhs = hit.matrices[x].apply(d.alg().basis_product(a, b));
                let mut rhs = vec![f.zero(); n];
                for (p, q, c) in h.comult().slab_nonzeros(x) {
                    let pa = hit.matrices[p].column(a);
                    let qb = hit.matrices[q].column(b);
                    axpy(&mut rhs, c, &d.product(&pa, &qb));
                }
                r.expect(lhs == rhs, || format!("(h,α,β)=({x},{a},{b})"));
            }
        }
        let e: Vec<Scalar> = d.unit().iter().map(|u| u * &h.counit()[x]).collect();
        r.expect(hit.matrices[x].apply(d.unit()) == e, || format!("unit at h={x}"));
    }
    r
}

/// All core identities, one report with a sub-entry per identity.
pub fn verify_core_identities(h: &HopfData) -> Report {
    let mut r = Report::new("core-identities", "harpoon identities on all basis tuples");
    for sub in [
        check_twisted_product(h),
        check_twisted_right_antimultiplicative(h),
        check_heisenberg_auxiliary(h),
        check_hit_module_algebra(h),
    ] {
        r.absorb(&sub);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn core_identities_hold_on_small_examples() {
        for h in [
            zoo::group_algebra(&zoo::GroupTable::cyclic(2)),
            zoo::sweedler(),
            zoo::taft(3, 7, 2).unwrap(),
        ] {
            let r = verify_core_identities(&h);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn identities_detect_a_wrong_antipode_inverse() {
        // Using S in place of S⁻¹ breaks the twisted-product identity on H₄, where S² ≠ id.
        let h4 = zoo::sweedler();
        let wrong = h4.cop().cop().with_antipode(h4.antipode_inv().clone()).unwrap();
        assert!(!check_twisted_product(&wrong).passed());
    }
}
