//! Double-commutant duality for the mirrored stabilizer, and the correspondence
//! `K ↦ St` between comodule algebras over `H` and over `H*`.

use crate::error::{Error, Result};
use crate::exactlin::operators::{commutant, operators};
use crate::exactlin::{Matrix, Subspace};
use crate::modcom::ideals::{h_simplicity, IdealSide, SimplicityStatus};
use crate::modcom::{opposite_correspondence, ComodAlg, ModuleRep, Side};
use crate::report::Report;
use crate::yanzhu::{dual_stab_space, ell_matrix, heisenberg, stab_space, tensor_h_rep, HeisenbergData, StabSpace};

/// `Υ = (id ⊗ Ψ⁻¹) ∘ τ : End(H* ⊗ W) → End(W ⊗ H)` on a row-major operator.
pub fn upsilon(hd: &HeisenbergData, dw: usize, op: &Matrix) -> Result<Matrix> {
    let n = hd.hopf.dim();
    let f = hd.hopf.field();
    let mut out = Matrix::zeros(f, dw * n, dw * n);
    for w in 0..dw {
        for u in 0..dw {
            let block = Matrix::from_fn(f, n, n, |a, b| op.get(a * dw + w, b * dw + u).clone());
            let moved = hd.apply_psi_inverse(&block)?;
            for r in 0..n {
                for s in 0..n {
                    out.set(w * n + r, u * n + s, moved.get(r, s).clone());
                }
            }
        }
    }
    Ok(out)
}

/// For a right `H*`-comodule algebra `S` and a left `S`-module `W`, with
/// `T = St_{St_S(W)}(W)`: `Υ(𝓛(T)) = ρ(S)''` inside `End(W ⊗ H)`, and `ρ(S)'' = ρ(S)`
/// when `S` is H-simple.
pub fn duality_check(s: &ComodAlg, w: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("double-commutant", "Υ(𝓛(St_{St_S(W)}(W))) = ρ(S)''");
    if s.side() != Side::Right {
        return Err(Error::invalid("duality takes a right comodule algebra"));
    }
    let f = s.field();
    let dw = w.dim();
    let rho = tensor_h_rep(s, w)?;
    let big = dw * s.hopf.dim();
    let image = Subspace::from_vectors(f, big * big, rho.iter().map(|m| m.data().to_vec()));
    let first = commutant(f, big, &rho);
    let second = commutant(f, big, &operators(&first, big));
    let st = dual_stab_space(s, w, w)?;
    let k2 = st.comodule_algebra()?;
    let wmod = st.natural_module()?;
    let t = stab_space(&k2, &wmod, &wmod)?;
    let hd = heisenberg(&st.hopf)?;
    let ell = ell_matrix(&st.hopf, dw, dw);
    let n = st.hopf.dim();
    let mut moved = Vec::with_capacity(t.dim());
    for x in t.space.basis_vectors() {
        let op = Matrix::from_vec(f, n * dw, n * dw, ell.apply(x))?;
        moved.push(upsilon(&hd, dw, &op)?.into_data());
    }
    let upsilon_t = Subspace::from_vectors(f, big * big, moved);
    r.fact("dim_rho", image.dim());
    r.fact("dim_commutant", first.dim());
    r.fact("dim_bicommutant", second.dim());
    r.fact("dim_st", st.dim());
    r.fact("dim_t", t.dim());
    r.expect(upsilon_t == second, || {
        format!("Υ(𝓛(T)) has dimension {} but ρ(S)'' has dimension {}", upsilon_t.dim(), second.dim())
    });
    if image != second {
        let status = h_simplicity(s, IdealSide::TwoSided).status;
        r.fact("h_simple_two-sided", status.as_str());
        let witness = format!("ρ(S) has dimension {} but ρ(S)'' has dimension {}", image.dim(), second.dim());
        if status == SimplicityStatus::Simple {
            r.fail(witness);
        } else {
            r.hypothesis_unmet(witness);
        }
    }
    Ok(r)
}

/// `K ↦ St_{K^op}(V) ⊆ End(V) ⊗ H*`: a left `H`-comodule algebra and a right `K`-module `V`
/// (a left `K^op`-module) give a left `H*`-comodule algebra.
pub fn correspondence_map(k: &ComodAlg, v: &ModuleRep) -> Result<StabSpace> {
    let s = opposite_correspondence(k)?.to_dual_comodule_algebra();
    let v = match v.side() {
        Side::Left => v.clone(),
        Side::Right => ModuleRep::new(v.field(), v.dim(), Side::Left, v.action().to_vec())?,
    };
    dual_stab_space(&s, &v, &v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn sweedler_coideal_duality() {
        let h = zoo::sweedler();
        let f = h.field();
        let k = zoo::coideal_subalgebra(&h, &Subspace::coordinate(f, 4, [0, 1])).unwrap();
        let eps = ModuleRep::character(f, Side::Left, &[f.one(), f.zero()]);
        let st = stab_space(&k, &eps, &eps).unwrap();
        let s = st.comodule_algebra().unwrap();
        let w = st.natural_module().unwrap();
        let r = duality_check(&s, &w).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_rho"), Some("2"));
        assert_eq!(r.get_fact("dim_bicommutant"), Some("2"));
        assert_eq!(r.get_fact("dim_t"), Some("2"));
    }

    #[test]
    fn ground_duality_is_the_dual_regular_picture() {
        let g = zoo::sweedler().dual();
        let s = ComodAlg::ground(&g, Side::Right);
        let f = g.field();
        let w = ModuleRep::new(f, 1, Side::Left, vec![Matrix::identity(f, 1)]).unwrap();
        let r = duality_check(&s, &w).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn correspondence_dimensions() {
        let h = zoo::sweedler();
        let f = h.field();
        let reg = ComodAlg::regular(&h);
        let counit = ModuleRep::character(f, Side::Right, h.counit());
        assert_eq!(correspondence_map(&reg, &counit).unwrap().dim(), 1);
        let ground = ComodAlg::ground(&h, Side::Left);
        let one = ModuleRep::new(f, 1, Side::Right, vec![Matrix::identity(f, 1)]).unwrap();
        assert_eq!(correspondence_map(&ground, &one).unwrap().dim(), 4);
        let k = zoo::coideal_subalgebra(&h, &Subspace::coordinate(f, 4, [0, 1])).unwrap();
        let eps = ModuleRep::character(f, Side::Right, &[f.one(), f.zero()]);
        let once = correspondence_map(&k, &eps).unwrap();
        assert_eq!(once.dim(), 2);
        let k2 = once.comodule_algebra().unwrap();
        assert!(k2.check().passed());
        // The augmentation of the result is a character.
        let chi: Vec<_> = once.space.basis_vectors().map(|x| once.collapse(x).get(0, 0).clone()).collect();
        let twice = correspondence_map(&k2, &ModuleRep::character(f, Side::Right, &chi)).unwrap();
        assert_eq!(twice.dim(), 2);
    }
}
