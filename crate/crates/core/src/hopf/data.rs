//! Hopf algebras by structure constants.

use crate::error::{same_field, Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::hopf::algebra::{AlgebraData, CoalgebraData};
use crate::hopf::tensor::{axpy, outer, unit_vector, Tensor3};
use crate::report::Report;

/// A Hopf algebra on a fixed basis. The antipode matrix acts on column
/// vectors, `S e_j = Σ_i S[i][j] e_i`; its inverse is computed once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfData {
    alg: AlgebraData,
    coalg: CoalgebraData,
    antipode: Matrix,
    antipode_inv: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Op,
    Cop,
    Bop,
}

impl Variant {
    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "op" => Some(Variant::Op),
            "cop" => Some(Variant::Cop),
            "bop" => Some(Variant::Bop),
            _ => None,
        }
    }
}

impl HopfData {
    /// Assembles the data and inverts the antipode. Axioms are checked separately by [`HopfData::check`].
    pub fn new(alg: AlgebraData, coalg: CoalgebraData, antipode: Matrix) -> Result<HopfData> {
        same_field(alg.field(), coalg.field())?;
        same_field(alg.field(), antipode.field())?;
        let n = alg.dim();
        if coalg.dim() != n {
            return Err(Error::shape(format!("algebra of dimension {n} with coalgebra of dimension {}", coalg.dim())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::shape(format!(
                "antipode of shape {}x{} on a {n}-dimensional space",
                antipode.rows(),
                antipode.cols()
            )));
        }
        let antipode_inv = antipode.inverse()?;
        Ok(HopfData { alg, coalg, antipode, antipode_inv })
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.alg.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn alg(&self) -> &AlgebraData {
        &self.alg
    }

    pub fn coalg(&self) -> &CoalgebraData {
        &self.coalg
    }

    #[inline]
    pub fn mult(&self) -> &Tensor3 {
        self.alg.mult()
    }

    #[inline]
    pub fn comult(&self) -> &Tensor3 {
        self.coalg.comult()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.alg.unit()
    }

    pub fn counit(&self) -> &[Scalar] {
        self.coalg.counit()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.alg.product(a, b)
    }

    /// Dual Hopf algebra on the dual basis `e^i`.
    pub fn dual(&self) -> HopfData {
        let alg = AlgebraData::new(self.comult().permuted([1, 2, 0]), self.counit().to_vec())
            .expect("dual shapes");
        let coalg = CoalgebraData::new(self.mult().permuted([2, 0, 1]), self.unit().to_vec())
            .expect("dual shapes");
        HopfData {
            alg,
            coalg,
            antipode: self.antipode.transpose(),
            antipode_inv: self.antipode_inv.transpose(),
        }
    }

    /// `H^op`, `H^cop` or `H^bop`. The antipode of the first two is `S⁻¹`.
    pub fn variant(&self, which: Variant) -> HopfData {
        let (alg, coalg, swap) = match which {
            Variant::Op => (self.alg.opposite(), self.coalg.clone(), true),
            Variant::Cop => (self.alg.clone(), self.coalg.co_opposite(), true),
            Variant::Bop => (self.alg.opposite(), self.coalg.co_opposite(), false),
        };
        let (antipode, antipode_inv) = if swap {
            (self.antipode_inv.clone(), self.antipode.clone())
        } else {
            (self.antipode.clone(), self.antipode_inv.clone())
        };
        HopfData { alg, coalg, antipode, antipode_inv }
    }

    pub fn op(&self) -> HopfData {
        self.variant(Variant::Op)
    }

    pub fn cop(&self) -> HopfData {
        self.variant(Variant::Cop)
    }

    /// Δ applied to `a`, flattened as `j * n + k`.
    pub fn coproduct(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.coalg.coproduct(a)
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        self.coalg.counit_of(a)
    }

    /// Product of two elements of `H ⊗ H` (flattened), in the tensor-square algebra.
    pub fn product2(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                let p = outer(self.alg.basis_product(a / n, b / n), self.alg.basis_product(a % n, b % n));
                axpy(&mut out, &c, &p);
            }
        }
        out
    }

    /// Full axiom check: algebra, coalgebra, bialgebra compatibility, antipode.
    pub fn check(&self) -> Report {
        let mut r = Report::new("hopf-axioms", "Hopf algebra axioms");
        r.absorb(&self.alg.check());
        r.absorb(&self.coalg.check());
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.coproduct(self.alg.basis_product(i, j));
                let rhs = self.product2(self.coalg.basis_coproduct(i), self.coalg.basis_coproduct(j));
                r.expect(lhs == rhs, || format!("comultiplicativity at (i,j)=({i},{j})"));
                let e = self.counit_of(self.alg.basis_product(i, j));
                r.expect(e == &self.counit()[i] * &self.counit()[j], || {
                    format!("counit multiplicativity at (i,j)=({i},{j})")
                });
            }
        }
        r.expect(self.coproduct(self.unit()) == outer(self.unit(), self.unit()), || "comultiplication of unit".into());
        r.expect(self.counit_of(self.unit()).is_one(), || "counit of unit".into());
        for i in 0..n {
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for (j, k, c) in self.comult().slab_nonzeros(i) {
                let sj = self.antipode.column(j);
                let sk = self.antipode.column(k);
                axpy(&mut left, c, &self.product(&sj, &unit_vector(f, n, k)));
                axpy(&mut right, c, &self.product(&unit_vector(f, n, j), &sk));
            }
            let expected: Vec<Scalar> = self.unit().iter().map(|u| u * &self.counit()[i]).collect();
            r.expect(left == expected, || format!("antipode axiom m(S⊗id)Δ at i={i}"));
            r.expect(right == expected, || format!("antipode axiom m(id⊗S)Δ at i={i}"));
        }
        r.expect((&self.antipode_inv * &self.antipode).is_identity(), || "antipode inverse".into());
        r
    }

    /// Matrix of `S^k` for any integer `k`.
    pub fn antipode_power(&self, k: i32) -> Matrix {
        let base = if k >= 0 { &self.antipode } else { &self.antipode_inv };
        base.pow(k.unsigned_abs())
    }

    /// Replaces the antipode without checking it; used to build deliberately broken inputs.
    pub fn with_antipode(&self, antipode: Matrix) -> Result<HopfData> {
        HopfData::new(self.alg.clone(), self.coalg.clone(), antipode)
    }

    /// `⟨α, h⟩` for `α ∈ H*` and `h ∈ H` in dual coordinates.
    pub fn pair(alpha: &[Scalar], h: &[Scalar]) -> Scalar {
        crate::hopf::tensor::dot(alpha, h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn dual_is_an_involution() {
        for h in [zoo::sweedler(), zoo::group_algebra(&zoo::GroupTable::symmetric(3))] {
            assert!(h.dual().check().passed());
            assert_eq!(h.dual().dual(), h);
        }
    }

    #[test]
    fn dual_of_group_algebra_is_commutative_function_algebra() {
        let g = zoo::GroupTable::symmetric(3);
        let d = zoo::group_algebra(&g).dual();
        assert!(d.alg().is_commutative());
        // δ_a δ_b = [a = b] δ_a.
        for a in 0..6 {
            for b in 0..6 {
                let expect = if a == b { unit_vector(d.field(), 6, a) } else { vec![d.field().zero(); 6] };
                assert_eq!(d.alg().basis_product(a, b), expect.as_slice());
            }
        }
    }

    #[test]
    fn variants() {
        let g = zoo::group_algebra(&zoo::GroupTable::cyclic(2));
        assert_eq!(g.op(), g);
        assert_eq!(g.cop(), g);
        let h4 = zoo::sweedler();
        for v in [Variant::Op, Variant::Cop, Variant::Bop] {
            assert!(h4.variant(v).check().passed(), "{v:?}");
        }
        assert_eq!(h4.op().op(), h4);
        let bop = h4.variant(Variant::Bop);
        assert_eq!(bop.antipode(), h4.antipode());
        assert_eq!(h4.op().cop(), bop);
        assert_ne!(h4.op().antipode(), h4.antipode());
    }

    #[test]
    fn identity_antipode_is_rejected() {
        let h4 = zoo::sweedler();
        let bad = h4.with_antipode(Matrix::identity(h4.field(), 4)).unwrap();
        let r = bad.check();
        assert!(!r.passed());
        assert!(r.witnesses.iter().any(|w| w.contains("antipode axiom")));
    }
}
