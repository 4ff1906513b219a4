//! Algebras and coalgebras given by structure constants on a fixed basis.

use crate::error::{same_field, Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::hopf::tensor::{axpy, outer, unit_vector, Tensor3};
use crate::report::Report;

/// `e_i · e_j = Σ_k mult[i][j][k] e_k` with unit vector `unit`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraData {
    mult: Tensor3,
    unit: Vec<Scalar>,
}

impl AlgebraData {
    pub fn new(mult: Tensor3, unit: Vec<Scalar>) -> Result<AlgebraData> {
        let [a, b, c] = mult.shape();
        if a != b || b != c || unit.len() != a {
            return Err(Error::shape(format!(
                "multiplication of shape {:?} with unit of length {}",
                mult.shape(),
                unit.len()
            )));
        }
        for s in &unit {
            same_field(mult.field(), s.field())?;
        }
        Ok(AlgebraData { mult, unit })
    }

    /// Algebra with a product given on basis pairs.
    pub fn from_products(
        field: Field,
        dim: usize,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<AlgebraData> {
        let mut mult = Tensor3::zeros(field, [dim, dim, dim]);
        for i in 0..dim {
            for j in 0..dim {
                for (k, v) in product(i, j).into_iter().enumerate() {
                    mult.set(i, j, k, v);
                }
            }
        }
        AlgebraData::new(mult, unit)
    }

    /// The one-dimensional algebra `F`.
    pub fn ground(field: Field) -> AlgebraData {
        AlgebraData {
            mult: Tensor3::from_fn(field, [1, 1, 1], |_, _, _| field.one()),
            unit: vec![field.one()],
        }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.mult.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// `e_i · e_j` as a coordinate vector.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        self.mult.fiber(i, j)
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                axpy(&mut out, &c, self.basis_product(i, j));
            }
        }
        out
    }

    /// Matrix of `b ↦ e_i · b`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field(), n, n, |k, j| self.mult.get(i, j, k).clone())
    }

    /// Matrix of `b ↦ b · e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field(), n, n, |k, j| self.mult.get(j, i, k).clone())
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.left_mult(i));
            }
        }
        m
    }

    pub fn right_mult_by(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.right_mult(i));
            }
        }
        m
    }

    pub fn opposite(&self) -> AlgebraData {
        AlgebraData { mult: self.mult.permuted([1, 0, 2]), unit: self.unit.clone() }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Center, as a subspace of the algebra.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            // Coefficient of e_i in (e_i e_j − e_j e_i), as the equation on unknown x.
            for k in 0..n {
                rows.push((0..n).map(|i| self.mult.get(i, j, k) - self.mult.get(j, i, k)).collect::<Vec<_>>());
            }
        }
        Matrix::from_rows(f, n, &rows).expect("square rows").kernel()
    }

    /// Tensor product algebra; basis `e_a ⊗ f_b` at `a * other.dim() + b`.
    pub fn tensor(&self, other: &AlgebraData) -> AlgebraData {
        let (n, m) = (self.dim(), other.dim());
        let f = self.field();
        let unit = outer(&self.unit, &other.unit);
        AlgebraData::from_products(f, n * m, unit, |x, y| {
            outer(self.basis_product(x / m, y / m), other.basis_product(x % m, y % m))
        })
        .expect("consistent shapes")
    }

    /// The algebra `End(F^n)` on matrix units `E_{ij}` at `i * n + j`.
    pub fn matrix_algebra(field: Field, n: usize) -> AlgebraData {
        let mut unit = vec![field.zero(); n * n];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        AlgebraData::from_products(field, n * n, unit, |x, y| {
            let (i, j) = (x / n, x % n);
            let (k, l) = (y / n, y % n);
            if j == k {
                unit_vector(field, n * n, i * n + l)
            } else {
                vec![field.zero(); n * n]
            }
        })
        .expect("consistent shapes")
    }

    /// Associativity and two-sided unit, with failing basis indices as witnesses.
    pub fn check(&self) -> Report {
        let mut r = Report::new("algebra-axioms", "associative unital algebra");
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let lhs = self.product(&ij, &unit_vector(self.field(), n, k));
                    let rhs = self.product(&unit_vector(self.field(), n, i), self.basis_product(j, k));
                    r.expect(lhs == rhs, || format!("associativity at (i,j,k)=({i},{j},{k})"));
                }
            }
        }
        for i in 0..n {
            let e = unit_vector(self.field(), n, i);
            r.expect(self.product(&self.unit, &e) == e, || format!("left unit at i={i}"));
            r.expect(self.product(&e, &self.unit) == e, || format!("right unit at i={i}"));
        }
        r
    }
}

/// `Δ e_i = Σ comult[i][j][k] e_j ⊗ e_k` with counit covector `counit`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoalgebraData {
    comult: Tensor3,
    counit: Vec<Scalar>,
}

impl CoalgebraData {
    pub fn new(comult: Tensor3, counit: Vec<Scalar>) -> Result<CoalgebraData> {
        let [a, b, c] = comult.shape();
        if a != b || b != c || counit.len() != a {
            return Err(Error::shape(format!(
                "comultiplication of shape {:?} with counit of length {}",
                comult.shape(),
                counit.len()
            )));
        }
        for s in &counit {
            same_field(comult.field(), s.field())?;
        }
        Ok(CoalgebraData { comult, counit })
    }

    pub fn from_coproducts(
        field: Field,
        dim: usize,
        counit: Vec<Scalar>,
        mut coproduct: impl FnMut(usize) -> Vec<Scalar>,
    ) -> Result<CoalgebraData> {
        let mut comult = Tensor3::zeros(field, [dim, dim, dim]);
        for i in 0..dim {
            for (o, v) in coproduct(i).into_iter().enumerate() {
                comult.set(i, o / dim, o % dim, v);
            }
        }
        CoalgebraData::new(comult, counit)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.comult.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `Δ e_i` flattened as `j * n + k`.
    #[inline]
    pub fn basis_coproduct(&self, i: usize) -> &[Scalar] {
        self.comult.slab(i)
    }

    pub fn coproduct(&self, a: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (i, x) in a.iter().enumerate() {
            axpy(&mut out, x, self.basis_coproduct(i));
        }
        out
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        crate::hopf::tensor::dot(&self.counit, a)
    }

    pub fn co_opposite(&self) -> CoalgebraData {
        CoalgebraData { comult: self.comult.permuted([0, 2, 1]), counit: self.counit.clone() }
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult == self.comult.permuted([0, 2, 1])
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("coalgebra-axioms", "coassociative counital coalgebra");
        let n = self.dim();
        let f = self.field();
        for i in 0..n {
            // (Δ⊗id)Δ and (id⊗Δ)Δ as vectors indexed (a*n + b)*n + c.
            let mut left = vec![f.zero(); n * n * n];
            let mut right = vec![f.zero(); n * n * n];
            for (j, k, c) in self.comult.slab_nonzeros(i) {
                for (a, b, d) in self.comult.slab_nonzeros(j) {
                    left[(a * n + b) * n + k].add_product(c, d);
                }
                for (a, b, d) in self.comult.slab_nonzeros(k) {
                    right[(j * n + a) * n + b].add_product(c, d);
                }
            }
            r.expect(left == right, || format!("coassociativity at i={i}"));
            let mut l = vec![f.zero(); n];
            let mut rr = vec![f.zero(); n];
            for (j, k, c) in self.comult.slab_nonzeros(i) {
                l[k].add_product(&self.counit[j], c);
                rr[j].add_product(&self.counit[k], c);
            }
            let e = unit_vector(f, n, i);
            r.expect(l == e, || format!("left counit at i={i}"));
            r.expect(rr == e, || format!("right counit at i={i}"));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_associative_with_scalar_center() {
        let q = Field::Rationals;
        let a = AlgebraData::matrix_algebra(q, 2);
        assert!(a.check().passed());
        assert_eq!(a.center(), Subspace::from_vectors(q, 4, [a.unit()]));
        assert!(!a.is_commutative());
        assert!(a.opposite().check().passed());
    }

    #[test]
    fn broken_unit_is_reported() {
        let q = Field::Rationals;
        let a = AlgebraData::matrix_algebra(q, 2);
        let bad = AlgebraData::new(a.mult().clone(), unit_vector(q, 4, 0)).unwrap();
        let r = bad.check();
        assert!(!r.passed());
        assert!(r.witnesses.iter().any(|w| w.contains("unit")));
    }
}
