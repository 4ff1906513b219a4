//! Finite groups by multiplication table, and their group algebras.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::modcom::{ModuleRep, Side};
use crate::hopf::{AlgebraData, CoalgebraData, HopfData};
use crate::hopf::tensor::{outer, unit_vector};

/// A finite group on elements `0..order`, with `mul[a * order + b] = ab`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates a multiplication table: associativity, identity, inverses.
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<GroupTable> {
        if order == 0 || mul.len() != order * order || mul.iter().any(|&x| x >= order) {
            return Err(Error::invalid("malformed group table"));
        }
        let m = |a: usize, b: usize| mul[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::invalid(format!("group table not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::invalid("group table has no identity"))?;
        let mut inv = Vec::with_capacity(order);
        for a in 0..order {
            let b = (0..order)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::invalid(format!("element {a} has no inverse")))?;
            inv.push(b);
        }
        Ok(GroupTable { order, mul, inv, identity })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let mul = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        GroupTable::from_table(n, mul).expect("cyclic group")
    }

    /// Direct product; `(a, b)` is element `a * other.order + b`.
    pub fn product(&self, other: &GroupTable) -> GroupTable {
        let (n, m) = (self.order, other.order);
        let mut mul = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                mul.push(self.mul(x / m, y / m) * m + other.mul(x % m, y % m));
            }
        }
        GroupTable::from_table(n * m, mul).expect("direct product")
    }

    /// `S_n` on permutations of `0..n` in lexicographic order (identity first),
    /// composed as functions: `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> GroupTable {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let k = perms.len();
        let mut mul = Vec::with_capacity(k * k);
        for s in &perms {
            for t in &perms {
                let st: Vec<usize> = (0..n).map(|x| s[t[x]]).collect();
                mul.push(index(&st));
            }
        }
        GroupTable::from_table(k, mul).expect("symmetric group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        elems.contains(&self.identity)
            && elems.iter().all(|&a| {
                elems.contains(&self.inv(a)) && elems.iter().all(|&b| elems.contains(&self.mul(a, b)))
            })
    }

    /// The subgroup on `elems` as a group in its own right, elements renumbered in the given order.
    pub fn subgroup(&self, elems: &[usize]) -> Result<GroupTable> {
        if !self.is_subgroup(elems) {
            return Err(Error::invalid(format!("{elems:?} is not a subgroup")));
        }
        let k = elems.len();
        let pos = |x: usize| elems.iter().position(|&e| e == x).unwrap();
        let mul = (0..k * k).map(|x| pos(self.mul(elems[x / k], elems[x % k]))).collect();
        GroupTable::from_table(k, mul)
    }

    /// Representatives `x_i` of the left cosets `x_i F`, smallest index first.
    pub fn left_coset_reps(&self, f: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            reps.push(g);
            for &x in f {
                seen[self.mul(g, x)] = true;
            }
        }
        reps
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// The group algebra over the rationals.
pub fn group_algebra(g: &GroupTable) -> HopfData {
    group_algebra_over(g, Field::Rationals)
}

/// `F G` with `Δ g = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra_over(g: &GroupTable, field: Field) -> HopfData {
    let n = g.order();
    let alg = AlgebraData::from_products(field, n, unit_vector(field, n, g.identity()), |a, b| {
        unit_vector(field, n, g.mul(a, b))
    })
    .expect("group algebra");
    let coalg = CoalgebraData::from_coproducts(field, n, vec![field.one(); n], |a| {
        let e = unit_vector(field, n, a);
        outer(&e, &e)
    })
    .expect("group coalgebra");
    let s = Matrix::from_fn(field, n, n, |i, j| if i == g.inv(j) { field.one() } else { field.zero() });
    HopfData::new(alg, coalg, s).expect("group antipode is invertible")
}

/// Functions on `G` with the dual basis of point masses.
pub fn dual_group_algebra(g: &GroupTable, field: Field) -> HopfData {
    group_algebra_over(g, field).dual()
}

/// The reflection representation of `S_n` (as numbered by [`GroupTable::symmetric`]) on
/// `{x : Σ x_i = 0}`, with basis `e_i − e_{n-1}` for `i < n − 1`.
pub fn standard_rep(n: usize, field: Field) -> ModuleRep {
    let perms = permutations(n);
    let d = n - 1;
    let action = perms
        .iter()
        .map(|p| {
            // σ(e_i − e_{n-1}) = e_{σ(i)} − e_{σ(n-1)}, read off in the first n − 1 coordinates.
            let columns: Vec<Vec<Scalar>> = (0..d)
                .map(|i| {
                    let mut v = vec![field.zero(); n];
                    v[p[i]] += &field.one();
                    v[p[d]] -= &field.one();
                    v.truncate(d);
                    v
                })
                .collect();
            Matrix::from_columns(field, d, &columns)
        })
        .collect();
    let g = group_algebra_over(&GroupTable::symmetric(n), field);
    ModuleRep::checked(g.alg(), d, Side::Left, action).expect("reflection representation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_noncommutative_and_cocommutative() {
        let h = group_algebra(&GroupTable::symmetric(3));
        assert!(h.check().passed());
        assert_eq!(h.dim(), 6);
        assert!(!h.alg().is_commutative());
        assert!(h.coalg().is_cocommutative());
    }

    #[test]
    fn z2_antipode_is_identity() {
        let h = group_algebra(&GroupTable::cyclic(2));
        assert!(h.check().passed());
        assert!(h.antipode().is_identity());
    }

    #[test]
    fn klein_dual_is_commutative_and_cocommutative() {
        let k = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
        let d = dual_group_algebra(&k, Field::Rationals);
        assert!(d.check().passed());
        assert_eq!(d.dim(), 4);
        assert!(d.alg().is_commutative() && d.coalg().is_cocommutative());
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(GroupTable::from_table(2, vec![0, 1, 1, 1]).is_err());
        assert!(GroupTable::from_table(2, vec![0, 1, 1]).is_err());
    }

    #[test]
    fn coset_reps_of_z2_in_s3() {
        let s3 = GroupTable::symmetric(3);
        // Elements: 0 = id, 1 = (12) as [0,2,1], 2 = (01) as [1,0,2], ...
        let f = [0, 2];
        assert!(s3.is_subgroup(&f));
        let reps = s3.left_coset_reps(&f);
        assert_eq!(reps.len(), 3);
        assert_eq!(reps[0], 0);
    }
}
