//! Spaces of operators: intertwiners, commutants and generated algebras.
//!
//! Operators on `F^n` are vectorized row-major, entry `(i, j)` at `i * n + j`.

use crate::exactlin::{Field, Matrix, Scalar, SpanBuilder, Subspace};

/// `{X : W <- U | X·a_u = a_w·X for every pair}`, vectorized row-major as a
/// `dim_w × dim_u` matrix.
pub fn intertwiners(field: Field, dim_u: usize, dim_w: usize, pairs: &[(&Matrix, &Matrix)]) -> Subspace {
    let unknowns = dim_w * dim_u;
    let mut eqs = SpanBuilder::new(field, unknowns);
    for (au, aw) in pairs {
        for w in 0..dim_w {
            for u2 in 0..dim_u {
                if eqs.is_full() {
                    break;
                }
                let mut row = vec![field.zero(); unknowns];
                for u in 0..dim_u {
                    let a = au.get(u, u2);
                    if !a.is_zero() {
                        row[w * dim_u + u] += a;
                    }
                }
                for w2 in 0..dim_w {
                    let b = aw.get(w, w2);
                    if !b.is_zero() {
                        row[w2 * dim_u + u2] -= b;
                    }
                }
                eqs.insert(row);
            }
        }
    }
    equations_kernel(field, unknowns, eqs)
}

/// Kernel of the linear system whose (reduced) equations are held by `eqs`.
pub fn equations_kernel(field: Field, unknowns: usize, eqs: SpanBuilder) -> Subspace {
    let s = eqs.finish();
    if s.is_zero() {
        return Subspace::full(field, unknowns);
    }
    s.basis().kernel()
}

/// Matrices commuting with every generator.
pub fn commutant(field: Field, n: usize, gens: &[Matrix]) -> Subspace {
    let pairs: Vec<(&Matrix, &Matrix)> = gens.iter().map(|g| (g, g)).collect();
    intertwiners(field, n, n, &pairs)
}

pub fn to_operator(field: Field, n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_vec(field, n, n, v.to_vec()).expect("vectorized operator")
}

/// Unital subalgebra of `End(F^n)` generated by `gens`, as a subspace of `F^{n²}`.
pub fn generated_algebra(field: Field, n: usize, gens: &[Matrix]) -> Subspace {
    let mut span = SpanBuilder::new(field, n * n);
    let id = Matrix::identity(field, n);
    span.insert(id.data().to_vec());
    let mut found = vec![id];
    let mut next = 0;
    while next < found.len() && !span.is_full() {
        let b = found[next].clone();
        next += 1;
        for g in gens {
            let p = &b * g;
            if span.insert(p.data().to_vec()) {
                found.push(p);
            }
        }
    }
    span.finish()
}

/// Operators in the span, as matrices.
pub fn operators(s: &Subspace, n: usize) -> Vec<Matrix> {
    s.basis_vectors().map(|v| to_operator(s.field(), n, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutant_of_diagonal_is_diagonal() {
        let q = Field::Rationals;
        let d = Matrix::from_i64(q, 2, 2, &[1, 0, 0, 2]);
        let c = commutant(q, 2, &[d]);
        assert_eq!(c, Subspace::coordinate(q, 4, [0, 3]));
    }

    #[test]
    fn generated_algebra_of_nilpotent_shift() {
        let q = Field::Rationals;
        let n = Matrix::from_i64(q, 3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
        let a = generated_algebra(q, 3, std::slice::from_ref(&n));
        assert_eq!(a.dim(), 3);
        // A single nilpotent Jordan block has commutant equal to the algebra it generates.
        assert_eq!(commutant(q, 3, &[n]), a);
    }

    #[test]
    fn intertwiners_between_distinct_characters_vanish() {
        let f = Field::Prime(7);
        let a = Matrix::from_i64(f, 1, 1, &[2]);
        let b = Matrix::from_i64(f, 1, 1, &[4]);
        assert!(intertwiners(f, 1, 1, &[(&a, &b)]).is_zero());
        assert_eq!(intertwiners(f, 1, 1, &[(&a, &a)]).dim(), 1);
    }
}
