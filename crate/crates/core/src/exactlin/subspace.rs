//! Subspaces of `F^n` in canonical form.
//!
//! A [`Subspace`] stores the nonzero rows of its reduced row echelon basis.
//! Two subspaces are equal exactly when their stored bases are identical, so
//! the derived `PartialEq` is the mathematical equality.

use crate::error::{same_field, Error, Result};
use crate::exactlin::matrix::rref_in_place;
use crate::exactlin::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of `vectors`, each of length `ambient`.
    pub fn from_vectors<I, V>(field: Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let mut data = Vec::new();
        let mut rows = 0;
        for v in vectors {
            let v = v.as_ref();
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
            data.extend(v.iter().cloned());
            rows += 1;
        }
        Subspace::from_row_data(field, ambient, rows, data)
    }

    fn from_row_data(field: Field, ambient: usize, rows: usize, mut data: Vec<Scalar>) -> Subspace {
        let pivots = rref_in_place(rows, ambient, &mut data);
        data.truncate(pivots.len() * ambient);
        let basis = Matrix::from_vec(field, pivots.len(), ambient, data).expect("entries share one field");
        Subspace { ambient, basis, pivots }
    }

    /// The span of the standard basis vectors with the given indices.
    pub fn coordinate(field: Field, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Subspace {
        let mut b = SpanBuilder::new(field, ambient);
        for i in indices {
            let mut v = vec![field.zero(); ambient];
            v[i] = field.one();
            b.insert(v);
        }
        b.finish()
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.basis.field()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis rows in reduced row echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        same_field(self.field(), other.field())?;
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Coordinates of `v` with respect to the stored basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    x.sub_product(c, b);
                }
            }
        }
        rest.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// The linear combination `Σ c_r · basis_r`.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate count");
        let mut v = vec![self.field().zero(); self.ambient];
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    x.add_product(c, b);
                }
            }
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.dim() <= other.dim() && self.basis_vectors().all(|v| other.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut data = self.basis.data().to_vec();
        data.extend(other.basis.data().iter().cloned());
        Ok(Subspace::from_row_data(self.field(), self.ambient, self.dim() + other.dim(), data))
    }

    /// Orthogonal complement for the standard bilinear pairing.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Image of this subspace under `m` (a map out of the ambient space).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map domain does not match ambient dimension");
        Subspace::from_vectors(m.field(), m.rows(), self.basis_vectors().map(|v| m.apply(v)))
    }

    /// `{v : m·v ∈ self}` for a map `m` into the ambient space.
    pub fn preimage_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient, "map codomain does not match ambient dimension");
        let (proj, _) = self.quotient_maps();
        (&proj * m).kernel()
    }

    /// Projection onto `F^n / self` and a section of it.
    ///
    /// The quotient is coordinatized by the non-pivot columns of the basis, so
    /// the section sends each quotient coordinate to the matching standard
    /// basis vector.
    pub fn quotient_maps(&self) -> (Matrix, Matrix) {
        let field = self.field();
        let mut pivot_row = vec![None; self.ambient];
        for (r, &p) in self.pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&c| pivot_row[c].is_none()).collect();
        let mut proj = Matrix::zeros(field, free.len(), self.ambient);
        let mut section = Matrix::zeros(field, self.ambient, free.len());
        for (q, &c) in free.iter().enumerate() {
            proj.set(q, c, field.one());
            section.set(c, q, field.one());
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            for (q, &c) in free.iter().enumerate() {
                let e = self.basis.get(r, c);
                if !e.is_zero() {
                    proj.set(q, p, -e);
                }
            }
        }
        (proj, section)
    }
}

/// Projection and section for the quotient of `F^ambient_dim` by `u`.
pub fn quotient(ambient_dim: usize, u: &Subspace) -> Result<(Matrix, Matrix)> {
    if u.ambient_dim() != ambient_dim {
        return Err(Error::NotContained);
    }
    Ok(u.quotient_maps())
}

/// Incrementally grown span, kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: Field, ambient: usize) -> SpanBuilder {
        SpanBuilder { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace) -> SpanBuilder {
        SpanBuilder {
            field: s.field(),
            ambient: s.ambient,
            rows: s.basis_vectors().map(<[Scalar]>::to_vec).collect(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    x.sub_product(&c, b);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in &mut self.rows {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in row.iter_mut().zip(&v).skip(p) {
                if !b.is_zero() {
                    x.sub_product(&c, b);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn finish(self) -> Subspace {
        let rows = self.rows.len();
        let data: Vec<Scalar> = self.rows.into_iter().flatten().collect();
        Subspace {
            ambient: self.ambient,
            basis: Matrix::from_vec(self.field, rows, self.ambient, data).expect("consistent rows"),
            pivots: self.pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn vecs(field: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
    }

    #[test]
    fn intersect_and_sum_of_lines() {
        let e1 = Subspace::from_vectors(q(), 2, vecs(q(), &[&[1, 0]]));
        let e2 = Subspace::from_vectors(q(), 2, vecs(q(), &[&[0, 1]]));
        let diag = Subspace::from_vectors(q(), 2, vecs(q(), &[&[1, 1]]));
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.sum(&diag).unwrap(), Subspace::full(q(), 2));
        assert!(matches!(e1.sum(&Subspace::zero(q(), 3)), Err(Error::AmbientMismatch(2, 3))));
    }

    #[test]
    fn quotient_examples() {
        let (p, _) = quotient(3, &Subspace::zero(q(), 3)).unwrap();
        assert!(p.is_identity());
        let (p, s) = quotient(3, &Subspace::full(q(), 3)).unwrap();
        assert_eq!((p.rows(), s.cols()), (0, 0));
        let u = Subspace::from_vectors(q(), 3, vecs(q(), &[&[1, 1, 0]]));
        let (p, s) = quotient(3, &u).unwrap();
        assert_eq!(p.rank(), 2);
        assert!(p.apply(&vecs(q(), &[&[1, 1, 0]])[0]).iter().all(Scalar::is_zero));
        assert!((&p * &s).is_identity());
        assert_eq!(p.kernel(), u);
        assert!(quotient(4, &u).is_err());
    }

    #[test]
    fn span_builder_matches_batch_rref() {
        let f = Field::Prime(5);
        let vs = vecs(f, &[&[0, 2, 1, 3], &[1, 1, 0, 0], &[1, 3, 1, 3], &[4, 0, 2, 2]]);
        let mut b = SpanBuilder::new(f, 4);
        for v in &vs {
            b.insert(v.clone());
        }
        assert_eq!(b.finish(), Subspace::from_vectors(f, 4, &vs));
    }

    #[test]
    fn preimage_of_line() {
        let m = Matrix::from_i64(q(), 2, 2, &[1, 0, 0, 0]);
        let line = Subspace::from_vectors(q(), 2, vecs(q(), &[&[0, 1]]));
        assert_eq!(line.preimage_under(&m), Subspace::coordinate(q(), 2, [1]));
    }

    /// All vectors of `F_2^n`, as an exhaustive oracle for subspace membership.
    fn all_f2_vectors(n: usize) -> Vec<Vec<Scalar>> {
        let f = Field::Prime(2);
        (0..1u32 << n)
            .map(|bits| (0..n).map(|i| f.from_i64(((bits >> i) & 1) as i64)).collect())
            .collect()
    }

    #[test]
    fn modular_dimension_identity_exhaustive_over_f2_4() {
        let f = Field::Prime(2);
        let all = all_f2_vectors(4);
        // Pairs of subspaces spanned by two vectors each, over a sample of the lattice.
        for a in (0..16).step_by(3) {
            for b in (1..16).step_by(5) {
                for c in (0..16).step_by(7) {
                    for d in (2..16).step_by(4) {
                        let u = Subspace::from_vectors(f, 4, [&all[a], &all[b]]);
                        let w = Subspace::from_vectors(f, 4, [&all[c], &all[d]]);
                        let cap = u.intersect(&w).unwrap();
                        let cup = u.sum(&w).unwrap();
                        assert_eq!(u.dim() + w.dim(), cap.dim() + cup.dim());
                        for v in &all {
                            assert_eq!(cap.contains(v), u.contains(v) && w.contains(v));
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    const N: usize = 5;

    fn vectors(f: Field) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, N), 0..5)
            .prop_map(move |vs| vs.into_iter().map(|v| v.into_iter().map(|x| f.from_i64(x)).collect()).collect())
    }

    proptest! {
        #[test]
        fn sum_and_intersection_dimensions(a in vectors(Field::Rationals), b in vectors(Field::Rationals)) {
            let f = Field::Rationals;
            let u = Subspace::from_vectors(f, N, a);
            let w = Subspace::from_vectors(f, N, b);
            let s = u.sum(&w).unwrap();
            let i = u.intersect(&w).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(i.is_subspace_of(&u).unwrap() && u.is_subspace_of(&s).unwrap());
            prop_assert_eq!(u.annihilator().dim(), N - u.dim());
        }

        #[test]
        fn canonical_basis_ignores_the_spanning_set(a in vectors(Field::prime(5).unwrap()), c in 1i64..5) {
            let f = Field::prime(5).unwrap();
            let u = Subspace::from_vectors(f, N, a.clone());
            // Reverse, rescale and add a redundant combination.
            let scale = f.from_i64(c);
            let mut b: Vec<Vec<Scalar>> = a.iter().rev().map(|v| v.iter().map(|x| x * &scale).collect()).collect();
            if a.len() >= 2 {
                b.push(a[0].iter().zip(&a[1]).map(|(x, y)| x + y).collect());
            }
            prop_assert_eq!(Subspace::from_vectors(f, N, b), u);
        }
    }
}
