//! `St_{F_σ F}(V) ≅ F G ⊗_{F F} End(V)` through the explicit maps `θ` and `ψ`.
//!
//! The quotient is coordinatized by left coset representatives `x_i` (smallest index
//! first): `x̄_i ⊗ T` sits at `i * (dim V)² + vec(T)`. Since `g f ⊗ T = g ⊗ f·T`, the
//! product is `(x̄_i ⊗ T)(x̄_j ⊗ U) = δ_ij x̄_i ⊗ TU`.

use crate::error::Result;
use crate::exactlin::{Matrix, Subspace};
use crate::hopf::tensor::unit_vector;
use crate::modcom::ModuleRep;
use crate::report::Report;
use crate::yanzhu::stab_space;
use crate::zoo::{twisted_group_algebra, Cocycle, GroupTable};

/// Position of `g` as `x_i f`: returns `(i, position of f in sub)`.
fn split(g: &GroupTable, reps: &[usize], sub: &[usize], x: usize) -> (usize, usize) {
    for (i, &r) in reps.iter().enumerate() {
        let f = g.mul(g.inv(r), x);
        if let Some(p) = sub.iter().position(|&s| s == f) {
            return (i, p);
        }
    }
    unreachable!("coset representatives cover the group")
}

pub fn group_stab_iso_check(g: &GroupTable, sub: &[usize], sigma: &Cocycle, v: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("group-stabilizer", "St_{F_σ F}(V) ≅ F G ⊗_{F F} End(V)");
    let k = twisted_group_algebra(g, sub, sigma)?;
    let st = stab_space(&k, v, v)?;
    let f = k.field();
    let dv = v.dim();
    let d2 = dv * dv;
    let n = g.order();
    let reps = g.left_coset_reps(sub);
    let q = reps.len() * d2;
    let u: Vec<Matrix> = v.action().to_vec();
    let u_inv: Vec<Matrix> = u.iter().map(Matrix::inverse).collect::<Result<_>>()?;
    // f·T = u_f T u_f⁻¹ on vectorized T.
    let conj: Vec<Matrix> = u.iter().zip(&u_inv).map(|(a, b)| a.kron(&b.transpose())).collect();
    let amb = st.ambient_dim();
    // θ(x̄_i ⊗ T) = Σ_f δ_{f x_i⁻¹} ⊗ f·T.
    let mut theta = Matrix::zeros(f, amb, q);
    for (i, &x) in reps.iter().enumerate() {
        for (p, &ff) in sub.iter().enumerate() {
            let a = g.mul(ff, g.inv(x));
            for row in 0..d2 {
                for col in 0..d2 {
                    let c = conj[p].get(row, col);
                    if !c.is_zero() {
                        theta.set(a * d2 + row, i * d2 + col, c.clone());
                    }
                }
            }
        }
    }
    // ψ(δ_a ⊗ T) = Σ_i δ_a(x_i⁻¹) x̄_i ⊗ T.
    let mut psi = Matrix::zeros(f, q, amb);
    for (i, &x) in reps.iter().enumerate() {
        let a = g.inv(x);
        for e in 0..d2 {
            psi.set(i * d2 + e, a * d2 + e, f.one());
        }
    }
    r.fact("dim_st", st.dim());
    r.fact("index", reps.len());
    r.expect(st.dim() == reps.len() * d2, || format!("dim St = {} but [G:F]·(dim V)² = {q}", st.dim()));
    r.expect(Subspace::full(f, q).image_under(&theta) == st.space, || "θ does not map onto St".into());
    r.expect((&psi * &theta).is_identity(), || "ψθ is not the identity".into());
    for (i, x) in st.space.basis_vectors().enumerate() {
        if !r.expect(theta.apply(&psi.apply(x)) == x, || format!("θψ moves stabilizer basis element {i}")) {
            break;
        }
    }
    let unit_v = Matrix::identity(f, dv);
    let mut one = vec![f.zero(); q];
    for i in 0..reps.len() {
        one[i * d2..(i + 1) * d2].clone_from_slice(unit_v.data());
    }
    r.expect(theta.apply(&one) == st.ambient_unit(), || "θ is not unital".into());
    let quot_product = |a: usize, b: usize| -> Vec<_> {
        let mut out = vec![f.zero(); q];
        let (i, j) = (a / d2, b / d2);
        if i == j {
            let ma = Matrix::from_vec(f, dv, dv, unit_vector(f, d2, a % d2)).expect("square");
            let mb = Matrix::from_vec(f, dv, dv, unit_vector(f, d2, b % d2)).expect("square");
            out[i * d2..(i + 1) * d2].clone_from_slice((&ma * &mb).data());
        }
        out
    };
    'mult: for a in 0..q {
        let ta = theta.column(a);
        for b in 0..q {
            let lhs = theta.apply(&quot_product(a, b));
            if !r.expect(lhs == st.ambient_product(&ta, &theta.column(b)), || format!("θ not multiplicative at ({a},{b})")) {
                break 'mult;
            }
        }
    }
    // h ⇀ θ(ḡ ⊗ T) = θ((hg)‾ ⊗ T): G permutes the cosets.
    let action = st.ambient_action();
    'act: for hh in 0..n {
        for (i, &x) in reps.iter().enumerate() {
            let (j, p) = split(g, &reps, sub, g.mul(hh, x));
            for e in 0..d2 {
                let mut moved = vec![f.zero(); q];
                let col = conj[p].column(e);
                moved[j * d2..(j + 1) * d2].clone_from_slice(&col);
                let lhs = action[hh].apply(&theta.column(i * d2 + e));
                if !r.expect(lhs == theta.apply(&moved), || format!("θ is not G-linear at (h, i) = ({hh},{i})")) {
                    break 'act;
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::modcom::Side;
    use crate::zoo::{klein_sign_cocycle, klein_simple_module};

    #[test]
    fn s3_over_z3_with_a_nontrivial_character() {
        let f7 = Field::prime(7).unwrap();
        let g = GroupTable::symmetric(3);
        let omega = ModuleRep::character(f7, Side::Left, &[f7.one(), f7.from_i64(2), f7.from_i64(4)]);
        let r = group_stab_iso_check(&g, &[0, 3, 4], &Cocycle::trivial(f7, 3), &omega).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_st"), Some("2"));
    }

    #[test]
    fn whole_group_with_trivial_module() {
        let g = GroupTable::symmetric(3);
        let all: Vec<usize> = (0..6).collect();
        let q = Field::Rationals;
        let triv = ModuleRep::character(q, Side::Left, &vec![q.one(); 6]);
        let r = group_stab_iso_check(&g, &all, &Cocycle::trivial(q, 6), &triv).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_st"), Some("1"));
    }

    #[test]
    fn twisted_klein_group_with_its_simple_module() {
        let f5 = Field::prime(5).unwrap();
        let g = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
        let sigma = klein_sign_cocycle(f5);
        let v = klein_simple_module(f5);
        let r = group_stab_iso_check(&g, &[0, 1, 2, 3], &sigma, &v).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_st"), Some("4"));
    }
}
