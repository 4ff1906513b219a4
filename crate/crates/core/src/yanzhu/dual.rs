//! The mirrored stabilizer `St_S(V, Y) ⊆ Hom(V, Y) ⊗ H` of modules over a right
//! `H*`-comodule algebra `S`.
//!
//! `S` is given as a right comodule algebra over `G = H*`; the coaction lands in
//! `S ⊗ H*` and `H` is recovered as `G*`. `S` acts on `V ⊗ H` by
//! `s·(v ⊗ h) = s₀·v ⊗ s₁ ⇁ h`, and the stabilizer consists of those `Σ f_i ⊗ h_i`
//! whose right-multiplication operator `v ⊗ t ↦ Σ f_i(v) ⊗ t h_i` is `S`-linear.

use crate::error::{Error, Result};
use crate::exactlin::operators::{equations_kernel, intertwiners};
use crate::exactlin::{Matrix, SpanBuilder, Subspace};
use crate::hopf::{harpoon, HarpoonKind, HarpoonSide, HopfData};
use crate::modcom::{ComodAlg, ModuleRep, Side};
use crate::report::Report;
use crate::yanzhu::stab::{check_left_modules, coaction_actions};
use crate::yanzhu::{Chirality, StabSpace};

fn check_right(s: &ComodAlg) -> Result<()> {
    if s.side() != Side::Right {
        return Err(Error::invalid("expected a right comodule algebra"));
    }
    Ok(())
}

/// `ρ(s)` on `W ⊗ H` (index `w * dim H + h`), one matrix per basis element of `S`.
pub fn tensor_h_rep(s: &ComodAlg, w: &ModuleRep) -> Result<Vec<Matrix>> {
    check_right(s)?;
    check_left_modules(s, &[w])?;
    let f = s.field();
    let n = s.hopf.dim();
    let twisted = harpoon(&s.hopf, HarpoonKind::TwistedLeft, HarpoonSide::OnDual).matrices;
    Ok(coaction_actions(s, w)
        .iter()
        .map(|qx| {
            let mut m = Matrix::zeros(f, w.dim() * n, w.dim() * n);
            for (a, tl) in qx.iter().zip(&twisted) {
                if !a.is_zero() {
                    m.add_scaled(&f.one(), &a.kron(tl));
                }
            }
            m
        })
        .collect())
}

/// `Hom_S(V ⊗ H, Y ⊗ H)`, vectorized row-major, as an intertwiner space.
pub fn hom_s_tensor_h(s: &ComodAlg, v: &ModuleRep, y: &ModuleRep) -> Result<Subspace> {
    let rv = tensor_h_rep(s, v)?;
    let ry = tensor_h_rep(s, y)?;
    let n = s.hopf.dim();
    let pairs: Vec<(&Matrix, &Matrix)> = rv.iter().zip(&ry).collect();
    Ok(intertwiners(s.field(), v.dim() * n, y.dim() * n, &pairs))
}

/// The map `𝓡(f ⊗ h)(v ⊗ t) = f(v) ⊗ t h` into vectorized `Hom(V ⊗ H, Y ⊗ H)`.
pub fn r_matrix(h: &HopfData, dv: usize, dy: usize) -> Matrix {
    let n = h.dim();
    let f = h.field();
    let mut m = Matrix::zeros(f, (dy * n) * (dv * n), dy * dv * n);
    // 𝓡(E_{y,v} ⊗ e_h)[(y, r)][(v, t)] = m[t][h][r].
    for (t, hh, r, coef) in h.mult().nonzeros() {
        for y in 0..dy {
            for v in 0..dv {
                let row = (y * n + r) * (dv * n) + v * n + t;
                m.set(row, (y * dv + v) * n + hh, coef.clone());
            }
        }
    }
    m
}

/// `St_S(V, Y)`, the kernel of one system with rows ordered by `(s, v, t, y, r)`.
pub fn dual_stab_space(s: &ComodAlg, v: &ModuleRep, y: &ModuleRep) -> Result<StabSpace> {
    check_right(s)?;
    check_left_modules(s, &[v, y])?;
    let g = &s.hopf;
    let h = g.dual();
    let f = g.field();
    let (n, ds, dv, dy) = (g.dim(), s.dim(), v.dim(), y.dim());
    let unknowns = dy * dv * n;
    let idx = |yy: usize, vv: usize, hh: usize| (yy * dv + vv) * n + hh;
    let twisted = harpoon(g, HarpoonKind::TwistedLeft, HarpoonSide::OnDual).matrices;
    let mult = h.mult();
    // left[g][t][h] = (e^g ⇁ e_t) e_h and right[g][t][h] = e^g ⇁ (e_t e_h), as vectors in H.
    let mut left = vec![vec![vec![Vec::new(); n]; n]; n];
    let mut right = vec![vec![vec![Vec::new(); n]; n]; n];
    for gg in 0..n {
        for t in 0..n {
            let moved = twisted[gg].column(t);
            for hh in 0..n {
                left[gg][t][hh] = h.product(&moved, &crate::yanzhu::stab::unit(f, n, hh));
                right[gg][t][hh] = twisted[gg].apply(mult.fiber(t, hh));
            }
        }
    }
    let qv = coaction_actions(s, v);
    let qy = coaction_actions(s, y);
    let mut eqs = SpanBuilder::new(f, unknowns);
    'outer: for x in 0..ds {
        for vv in 0..dv {
            for t in 0..n {
                for y2 in 0..dy {
                    for r in 0..n {
                        if eqs.is_full() {
                            break 'outer;
                        }
                        let mut row = vec![f.zero(); unknowns];
                        for gg in 0..n {
                            let av = &qv[x][gg];
                            let ay = &qy[x][gg];
                            for hh in 0..n {
                                let l = &left[gg][t][hh][r];
                                if !l.is_zero() {
                                    for v2 in 0..dv {
                                        let c = av.get(v2, vv);
                                        if !c.is_zero() {
                                            row[idx(y2, v2, hh)].add_product(l, c);
                                        }
                                    }
                                }
                                let rr = &right[gg][t][hh][r];
                                if !rr.is_zero() {
                                    for y1 in 0..dy {
                                        let c = ay.get(y2, y1);
                                        if !c.is_zero() {
                                            row[idx(y1, vv, hh)].sub_product(rr, c);
                                        }
                                    }
                                }
                            }
                        }
                        eqs.insert(row);
                    }
                }
            }
        }
    }
    StabSpace::new(h, Chirality::InTensorH, dv, dy, equations_kernel(f, unknowns, eqs))
}

/// Factorization of the directly computed `Hom_S(V ⊗ H, Y ⊗ H)` over the stabilizer:
/// `𝓡(St)` is inside it and `dim Hom_S = dim St · dim H*`.
pub fn dual_factorization_check(s: &ComodAlg, v: &ModuleRep, y: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("dual-stabilizer-factorization", "Hom_S(V⊗H, Y⊗H) ≅ St_S(V, Y) ⊗ H*");
    let st = dual_stab_space(s, v, y)?;
    let hom = hom_s_tensor_h(s, v, y)?;
    let image = st.space.image_under(&r_matrix(&st.hopf, v.dim(), y.dim()));
    let n = s.hopf.dim();
    r.fact("dim_st", st.dim());
    r.fact("dim_hom", hom.dim());
    r.expect(image.is_subspace_of(&hom)?, || "𝓡(St) is not S-linear".into());
    r.expect(hom.dim() == st.dim() * n, || format!("dim Hom_S = {} but dim St · dim H* = {}", hom.dim(), st.dim() * n));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yanzhu::stab_space;
    use crate::zoo;

    #[test]
    fn ground_algebra_gives_full_tensor() {
        let h = zoo::sweedler();
        let g = h.dual();
        let s = ComodAlg::ground(&g, Side::Right);
        let f = h.field();
        let v = ModuleRep::new(f, 2, Side::Left, vec![Matrix::identity(f, 2)]).unwrap();
        let st = dual_stab_space(&s, &v, &v).unwrap();
        assert!(st.space.is_full());
        assert_eq!(st.hopf, h);
        assert!(st.comodule_algebra().unwrap().check().passed());
    }

    #[test]
    fn agrees_with_preimage_of_direct_hom() {
        let h = zoo::sweedler();
        let k = zoo::coideal_subalgebra(&h, &Subspace::coordinate(h.field(), 4, [0, 1])).unwrap();
        let f = h.field();
        let eps = ModuleRep::character(f, Side::Left, &[f.one(), f.zero()]);
        let st = stab_space(&k, &eps, &eps).unwrap();
        let s = st.comodule_algebra().unwrap();
        let w = st.natural_module().unwrap();
        let dual = dual_stab_space(&s, &w, &w).unwrap();
        let hom = hom_s_tensor_h(&s, &w, &w).unwrap();
        let oracle = hom.preimage_under(&r_matrix(&dual.hopf, 1, 1));
        assert_eq!(dual.space, oracle);
        assert_eq!(dual.dim(), 2);
        let rep = dual_factorization_check(&s, &w, &w).unwrap();
        assert!(rep.passed(), "{rep}");
        let back = dual.comodule_algebra().unwrap();
        assert!(back.check().passed());
        assert_eq!(back.side(), Side::Left);
    }
}
