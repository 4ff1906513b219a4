//! Left coideal subalgebras `K ⊆ H`, i.e. subalgebras with `Δ(K) ⊆ H ⊗ K`.

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::hopf::{AlgebraData, HopfData};
use crate::modcom::{ComodAlg, ComoduleStr, ModuleRep, Side};
use crate::report::Report;
use crate::yanzhu::stab_space;

/// `K` as a left `H`-comodule algebra on the canonical basis of `k`.
pub fn coideal_subalgebra(h: &HopfData, k: &Subspace) -> Result<ComodAlg> {
    let n = h.dim();
    if k.ambient_dim() != n {
        return Err(Error::AmbientMismatch(k.ambient_dim(), n));
    }
    let f = h.field();
    let d = k.dim();
    let basis: Vec<Vec<Scalar>> = k.basis_vectors().map(<[Scalar]>::to_vec).collect();
    let unit = k.coordinates(h.unit()).ok_or_else(|| Error::invalid("the unit is not in K"))?;
    let mut products = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            let p = h.product(&basis[i], &basis[j]);
            products[i * d + j] = k
                .coordinates(&p)
                .ok_or_else(|| Error::invalid(format!("K is not closed under products of basis elements {i}, {j}")))?;
        }
    }
    let alg = AlgebraData::from_products(f, d, unit, |i, j| products[i * d + j].clone())?;
    let mut coaction = Matrix::zeros(f, n * d, d);
    for (i, b) in basis.iter().enumerate() {
        let delta = h.coproduct(b);
        for p in 0..n {
            let slice = &delta[p * n..(p + 1) * n];
            let coords = k
                .coordinates(slice)
                .ok_or_else(|| Error::invalid(format!("Δ of basis element {i} leaves H ⊗ K")))?;
            for (x, c) in coords.into_iter().enumerate() {
                coaction.set(p * d + x, i, c);
            }
        }
    }
    ComodAlg::checked(h.clone(), alg, ComoduleStr::new(Side::Left, n, d, coaction)?)
}

/// `K̄ = H / S⁻¹(K⁺)H` and `St_K(𝕜) = π*(K̄*)` inside `H*`, with the same product.
pub fn coideal_subalgebra_check(h: &HopfData, k: &Subspace) -> Result<Report> {
    let mut r = Report::new("coideal-quotient", "St_K(𝕜) ≅ K̄* for a left coideal subalgebra K");
    let kc = coideal_subalgebra(h, k)?;
    let f = h.field();
    let n = h.dim();
    let basis: Vec<Vec<Scalar>> = k.basis_vectors().map(<[Scalar]>::to_vec).collect();
    let eps: Vec<Scalar> = basis.iter().map(|b| h.counit_of(b)).collect();
    // K⁺ is spanned by b − ε(b)1.
    let plus: Vec<Vec<Scalar>> = basis
        .iter()
        .zip(&eps)
        .map(|(b, e)| b.iter().zip(h.unit()).map(|(x, u)| x.clone() - e.clone() * u.clone()).collect())
        .collect();
    let sinv = h.antipode_inv();
    let ideal = Subspace::from_vectors(
        f,
        n,
        plus.iter().flat_map(|p| {
            let s = sinv.apply(p);
            (0..n).map(move |t| h.alg().left_mult_by(&s).column(t))
        }),
    );
    let (proj, _) = ideal.quotient_maps();
    r.fact("dim_k", k.dim());
    r.fact("dim_k_bar", proj.rows());
    // π* is the transpose of the projection, so π*(K̄*) is the annihilator of the ideal.
    let pulled = Subspace::full(f, proj.rows()).image_under(&proj.transpose());
    r.expect(pulled == ideal.annihilator(), || "π*(K̄*) is not the annihilator of S⁻¹(K⁺)H".into());
    let triv = ModuleRep::character(f, Side::Left, &eps);
    let st = stab_space(&kc, &triv, &triv)?;
    r.fact("dim_st", st.dim());
    r.expect(st.space == pulled, || format!("St_K(𝕜) has dimension {} but π*(K̄*) has {}", st.dim(), pulled.dim()));
    let dual = h.dual();
    let vectors: Vec<&[Scalar]> = pulled.basis_vectors().collect();
    'closed: for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate() {
            let prod = dual.product(a, b);
            if !r.expect(pulled.contains(&prod), || format!("π*(K̄*) not closed at ({i},{j})")) {
                break 'closed;
            }
            if !r.expect(st.ambient_product(a, b) == prod, || format!("products differ at ({i},{j})")) {
                break 'closed;
            }
        }
    }
    r.expect(pulled.contains(dual.unit()), || "π*(K̄*) does not contain ε".into());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn sweedler_span_one_x() {
        let h = zoo::sweedler();
        let k = coideal_subalgebra(&h, &Subspace::coordinate(h.field(), 4, [0, 1])).unwrap();
        assert_eq!(k.dim(), 2);
        assert_eq!(k.coinvariants().dim(), 1);
    }

    #[test]
    fn span_one_g_is_a_coideal_and_one_gx_is_not() {
        let h = zoo::sweedler();
        assert!(coideal_subalgebra(&h, &Subspace::coordinate(h.field(), 4, [0, 2])).is_ok());
        // Δ(gx) = gx ⊗ g + 1 ⊗ gx has g in the right leg.
        let bad = Subspace::coordinate(h.field(), 4, [0, 3]);
        assert!(coideal_subalgebra(&h, &bad).is_err());
        assert!(coideal_subalgebra_check(&h, &bad).is_err());
    }

    #[test]
    fn quotient_identifications() {
        let h = zoo::sweedler();
        let f = h.field();
        let r = coideal_subalgebra_check(&h, &Subspace::coordinate(f, 4, [0, 1])).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_k_bar"), Some("2"));
        let r = coideal_subalgebra_check(&h, &Subspace::full(f, 4)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_k_bar"), Some("1"));
        let t = zoo::taft(3, 7, 2).unwrap();
        let r = coideal_subalgebra_check(&t, &Subspace::coordinate(t.field(), 9, [0, 1, 2])).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_k_bar"), Some("3"));
    }
}
