//! Smash products and the opposite-algebra correspondence.

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::hopf::tensor::{axpy, outer};
use crate::hopf::AlgebraData;
use crate::modcom::{ComodAlg, ComoduleStr, ModAlg, ModuleRep, Side};

/// For a left `H`-module algebra `R`, the left `H`-comodule algebra
/// `R^op # H^cop` on `r_a # h_b` (index `a * dim H + b`) with
/// `(r # h)(r' # t) = (h₂·r') r # h₁ t` and `λ(r # h) = h₁ ⊗ (r # h₂)`.
pub fn smash_product(r: &ModAlg) -> Result<ComodAlg> {
    if r.side() != Side::Left {
        return Err(Error::invalid("smash product needs a left module algebra"));
    }
    let h = &r.hopf;
    let f = h.field();
    let n = h.dim();
    let d = r.dim();
    let dim = d * n;
    let acts = r.act.action();
    let alg = AlgebraData::from_products(f, dim, outer(r.alg.unit(), h.unit()), |x, y| {
        let (a, b) = (x / n, x % n);
        let (c, e) = (y / n, y % n);
        let mut out = vec![f.zero(); dim];
        for (p, q, coef) in h.comult().slab_nonzeros(b) {
            let moved = acts[q].column(c);
            let rr = r.alg.product(&moved, &crate::hopf::tensor::unit_vector(f, d, a));
            let hh = h.alg().basis_product(p, e);
            axpy(&mut out, coef, &outer(&rr, hh));
        }
        out
    })?;
    let coaction = Matrix::from_fn(f, n * dim, dim, |row, x| {
        // Row (p, (a', q)), column (a, b): [a' = a] d[b][p][q].
        let (p, rest) = (row / dim, row % dim);
        let (a2, q) = (rest / n, rest % n);
        let (a, b) = (x / n, x % n);
        if a2 == a {
            h.comult().get(b, p, q).clone()
        } else {
            f.zero()
        }
    });
    ComodAlg::checked(h.clone(), alg, ComoduleStr::new(Side::Left, n, dim, coaction)?)
}

/// `K^op` as a left `H*`-module algebra via `α·x = ⟨α, S⁻¹(x₋₁)⟩ x₀`.
pub fn opposite_correspondence(k: &ComodAlg) -> Result<ModAlg> {
    if k.side() != Side::Left {
        return Err(Error::invalid("expected a left comodule algebra"));
    }
    let h = &k.hopf;
    let n = h.dim();
    let d = k.dim();
    let f = h.field();
    let coact = k.coact.operators();
    let sinv = h.antipode_inv();
    let action: Vec<Matrix> = (0..n)
        .map(|b| {
            let mut m = Matrix::zeros(f, d, d);
            for (hh, a) in coact.iter().enumerate() {
                let c: &Scalar = sinv.get(b, hh);
                m.add_scaled(c, a);
            }
            m
        })
        .collect();
    let dual = h.dual();
    let act = ModuleRep::new(f, d, Side::Left, action)?;
    ModAlg::new(dual, k.alg.opposite(), act)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn smash_with_ground_algebra_has_dimension_of_h() {
        let h = zoo::sweedler();
        let r = ModAlg::trivial(&h, AlgebraData::ground(h.field()), Side::Left);
        let k = smash_product(&r).unwrap();
        assert_eq!(k.dim(), 4);
        assert_eq!(k.alg, h.cop().alg().clone());
        assert_eq!(k.coinvariants().dim(), 1);
    }

    #[test]
    fn smash_of_dual_with_hit_action() {
        let h = zoo::group_algebra(&zoo::GroupTable::cyclic(2));
        let k = smash_product(&ModAlg::dual_hit(&h)).unwrap();
        assert_eq!(k.dim(), 4);
        assert_eq!(k.coinvariants().dim(), 2);
        let h4 = zoo::sweedler();
        let k4 = smash_product(&ModAlg::dual_hit(&h4)).unwrap();
        assert_eq!(k4.dim(), 16);
        assert_eq!(k4.coinvariants().dim(), 4);
    }

    #[test]
    fn opposite_correspondence_examples() {
        let h = zoo::sweedler();
        let g = opposite_correspondence(&ComodAlg::ground(&h, Side::Left)).unwrap();
        assert!(g.check().passed());
        assert_eq!(g, ModAlg::trivial(&h.dual(), AlgebraData::ground(h.field()), Side::Left));
        let reg = opposite_correspondence(&ComodAlg::regular(&h)).unwrap();
        assert!(reg.check().passed());
        assert_eq!(reg.alg, h.op().alg().clone());
        // α·h = ⟨α, S⁻¹(h₁)⟩ h₂ is the ⇁ action of H* on H.
        let tl = crate::hopf::harpoon(&h, crate::hopf::HarpoonKind::TwistedLeft, crate::hopf::HarpoonSide::OnBase);
        assert_eq!(reg.act.action(), tl.matrices.as_slice());
    }
}
