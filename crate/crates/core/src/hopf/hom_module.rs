//! `Hom(X, Y)` as a module over a Hopf algebra.
//!
//! A map `T: X → Y` is vectorized row-major as a `dim Y × dim X` matrix.

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::hopf::HopfData;
use crate::modcom::{ModuleRep, Side};

/// For left modules: `(h·T)(x) = h₁·T(S(h₂)·x)`.
/// For right modules: `(T·h)(w) = T(w·S⁻¹(h₂))·h₁`.
pub fn hom_module_structure(h: &HopfData, x: &ModuleRep, y: &ModuleRep, side: Side) -> Result<ModuleRep> {
    if x.side() != side || y.side() != side {
        return Err(Error::invalid(format!(
            "{} Hom structure requested for {} and {} modules",
            side.as_str(),
            x.side().as_str(),
            y.side().as_str()
        )));
    }
    let n = h.dim();
    let f = h.field();
    let dim = x.dim() * y.dim();
    let twist = match side {
        Side::Left => h.antipode(),
        Side::Right => h.antipode_inv(),
    };
    let mut action = Vec::with_capacity(n);
    for b in 0..n {
        let mut m = Matrix::zeros(f, dim, dim);
        for (p, q, c) in h.comult().slab_nonzeros(b) {
            // vec(A T B) = (A ⊗ Bᵀ) vec(T) for row-major vectorization.
            let a = y.action()[p].clone();
            let bmat = x.act(&twist.column(q));
            m.add_scaled(c, &a.kron(&bmat.transpose()));
        }
        action.push(m);
    }
    ModuleRep::new(f, dim, side, action)
}

/// Invariants `{T : h·T = ε(h) T}` of a Hom module.
pub fn invariants(h: &HopfData, m: &ModuleRep) -> Subspace {
    let f = h.field();
    let d = m.dim();
    let blocks: Vec<Matrix> = (0..h.dim())
        .map(|b| m.action()[b].sub(&Matrix::identity(f, d).scale(&h.counit()[b])))
        .collect();
    Matrix::vstack(f, d, &blocks).kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::operators::intertwiners;
    use crate::zoo;

    #[test]
    fn trivial_modules_give_counit_action() {
        let h = zoo::sweedler();
        let t = ModuleRep::trivial(&h, Side::Left);
        let hom = hom_module_structure(&h, &t, &t, Side::Left).unwrap();
        for b in 0..4 {
            assert_eq!(hom.action()[b], Matrix::identity(h.field(), 1).scale(&h.counit()[b]));
        }
    }

    #[test]
    fn regular_hom_is_a_module_on_both_sides() {
        let h = zoo::group_algebra(&zoo::GroupTable::cyclic(2));
        for side in [Side::Left, Side::Right] {
            let reg = ModuleRep::regular(h.alg(), side);
            let hom = hom_module_structure(&h, &reg, &reg, side).unwrap();
            assert!(hom.check(h.alg()).passed());
        }
        let h4 = zoo::sweedler();
        for side in [Side::Left, Side::Right] {
            let reg = ModuleRep::regular(h4.alg(), side);
            let hom = hom_module_structure(&h4, &reg, &reg, side).unwrap();
            assert!(hom.check(h4.alg()).passed());
        }
    }

    /// Invariants of `End(X)` are exactly the module maps, computed independently as a commutant.
    #[test]
    fn invariants_are_module_maps_for_s3() {
        let h = zoo::group_algebra(&zoo::GroupTable::symmetric(3));
        let reg = ModuleRep::regular(h.alg(), Side::Left);
        let hom = hom_module_structure(&h, &reg, &reg, Side::Left).unwrap();
        let pairs: Vec<_> = reg.action().iter().map(|a| (a, a)).collect();
        let maps = intertwiners(h.field(), 6, 6, &pairs);
        assert_eq!(invariants(&h, &hom), maps);
        assert_eq!(maps.dim(), 6);
    }

    #[test]
    fn side_mismatch_is_an_error() {
        let h = zoo::sweedler();
        let l = ModuleRep::regular(h.alg(), Side::Left);
        assert!(hom_module_structure(&h, &l, &l, Side::Right).is_err());
    }
}
