//! Twisted group algebras `F_σ F ⊆ F G` as left comodule algebras over `F G`.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::hopf::tensor::unit_vector;
use crate::hopf::AlgebraData;
use crate::modcom::{ComodAlg, ComoduleStr, ModuleRep, Side};
use crate::zoo::{group_algebra_over, GroupTable};

/// Values `σ(a, b)` of a 2-cocycle on a group of the given order, stored at `a * order + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cocycle {
    field: Field,
    order: usize,
    values: Vec<Scalar>,
}

impl Cocycle {
    pub fn new(field: Field, order: usize, values: Vec<Scalar>) -> Result<Cocycle> {
        if values.len() != order * order {
            return Err(Error::shape(format!("cocycle needs {} values, got {}", order * order, values.len())));
        }
        if let Some(v) = values.iter().find(|v| v.field() != field) {
            return Err(Error::FieldMismatch(field, v.field()));
        }
        Ok(Cocycle { field, order, values })
    }

    pub fn trivial(field: Field, order: usize) -> Cocycle {
        Cocycle { field, order, values: vec![field.one(); order * order] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, a: usize, b: usize) -> &Scalar {
        &self.values[a * self.order + b]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Nonzero values, normalization `σ(1, g) = σ(g, 1) = 1` and the cocycle identity
    /// `σ(g, h) σ(gh, k) = σ(h, k) σ(g, hk)`, all on the table `f`.
    pub fn validate(&self, f: &GroupTable) -> Result<()> {
        if f.order() != self.order {
            return Err(Error::shape("cocycle and group have different orders"));
        }
        if let Some(i) = self.values.iter().position(Scalar::is_zero) {
            return Err(Error::invalid(format!("cocycle vanishes at {:?}", (i / self.order, i % self.order))));
        }
        let e = f.identity();
        for g in 0..self.order {
            if !self.get(e, g).is_one() || !self.get(g, e).is_one() {
                return Err(Error::invalid(format!("cocycle is not normalized at {g}")));
            }
        }
        for g in 0..self.order {
            for h in 0..self.order {
                for k in 0..self.order {
                    let lhs = self.get(g, h) * self.get(f.mul(g, h), k);
                    let rhs = self.get(h, k) * self.get(g, f.mul(h, k));
                    if lhs != rhs {
                        return Err(Error::invalid(format!("cocycle identity fails at (g,h,k)=({g},{h},{k})")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `F_σ F` on `u_f` (in the order of `sub`) with `u_a u_b = σ(a, b) u_{ab}` and
/// `λ(u_f) = f ⊗ u_f`, over `F G`.
pub fn twisted_group_algebra(g: &GroupTable, sub: &[usize], sigma: &Cocycle) -> Result<ComodAlg> {
    let field = sigma.field();
    let f = g.subgroup(sub)?;
    sigma.validate(&f)?;
    let k = f.order();
    let h = group_algebra_over(g, field);
    let alg = AlgebraData::from_products(field, k, unit_vector(field, k, f.identity()), |a, b| {
        let mut v = vec![field.zero(); k];
        v[f.mul(a, b)] = sigma.get(a, b).clone();
        v
    })?;
    let n = g.order();
    let coaction = Matrix::from_fn(field, n * k, k, |row, x| {
        if row / k == sub[x] && row % k == x {
            field.one()
        } else {
            field.zero()
        }
    });
    ComodAlg::checked(h, alg, ComoduleStr::new(Side::Left, n, k, coaction)?)
}

/// `σ((i₁, j₁), (i₂, j₂)) = (−1)^{j₁ i₂}` on `Z₂ × Z₂`, the standard class with
/// `F_σ(Z₂ × Z₂) ≅ M₂`.
pub fn klein_sign_cocycle(field: Field) -> Cocycle {
    let values = (0..16)
        .map(|x| {
            let (a, b) = (x / 4, x % 4);
            if (a % 2) * (b / 2) == 1 {
                -field.one()
            } else {
                field.one()
            }
        })
        .collect();
    Cocycle { field, order: 4, values }
}

/// The two-dimensional simple module of `F_σ(Z₂ × Z₂)` for [`klein_sign_cocycle`]:
/// `u_1`, `u_2` act by anticommuting involutions and `u_3` by their rescaled product.
pub fn klein_simple_module(field: Field) -> ModuleRep {
    let g = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
    let sigma = klein_sign_cocycle(field);
    let a = Matrix::from_i64(field, 2, 2, &[0, 1, 1, 0]);
    let b = Matrix::from_i64(field, 2, 2, &[1, 0, 0, -1]);
    let c = (&a * &b).scale(&sigma.get(1, 2).inv().expect("cocycle values are nonzero"));
    debug_assert_eq!(g.mul(1, 2), 3);
    let ops = vec![Matrix::identity(field, 2), a, b, c];
    let k = twisted_group_algebra(&g, &[0, 1, 2, 3], &sigma).expect("klein cocycle");
    ModuleRep::checked(&k.alg, 2, Side::Left, ops).expect("simple module")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cocycle_gives_group_algebra() {
        let s3 = GroupTable::symmetric(3);
        let sub = [0, 1];
        let k = twisted_group_algebra(&s3, &sub, &Cocycle::trivial(Field::Rationals, 2)).unwrap();
        let z2 = crate::zoo::group_algebra(&GroupTable::cyclic(2));
        assert_eq!(&k.alg, z2.alg());
    }

    #[test]
    fn klein_twist_is_central_simple() {
        let f5 = Field::prime(5).unwrap();
        let v4 = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
        let k = twisted_group_algebra(&v4, &[0, 1, 2, 3], &klein_sign_cocycle(f5)).unwrap();
        assert_eq!(k.alg.center().dim(), 1);
        assert!(!k.alg.is_commutative());
    }

    #[test]
    fn broken_cocycle_names_a_triple() {
        let f5 = Field::prime(5).unwrap();
        let z4 = GroupTable::cyclic(4);
        let mut values = vec![f5.one(); 16];
        values[4 + 2] = f5.from_i64(2);
        let err = twisted_group_algebra(&z4, &[0, 1, 2, 3], &Cocycle::new(f5, 4, values).unwrap()).unwrap_err();
        assert!(err.to_string().contains("(g,h,k)"), "{err}");
    }
}
