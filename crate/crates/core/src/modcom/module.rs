//! Modules over algebras given by structure constants.

use crate::error::{same_field, Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::hopf::{AlgebraData, HopfData};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "left" => Some(Side::Left),
            "right" => Some(Side::Right),
            _ => None,
        }
    }
}

/// A module given by the operators `ρ(e_i)` of the basis elements.
///
/// For a right module, `ρ(e_i)` is the matrix of `v ↦ v·e_i`, so
/// `ρ(ab) = ρ(b)ρ(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleRep {
    field: Field,
    dim: usize,
    side: Side,
    action: Vec<Matrix>,
}

impl ModuleRep {
    /// Wraps action matrices without checking the module axioms.
    pub fn new(field: Field, dim: usize, side: Side, action: Vec<Matrix>) -> Result<ModuleRep> {
        for m in &action {
            same_field(field, m.field())?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::shape(format!(
                    "action matrix of shape {}x{} on a {dim}-dimensional module",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(ModuleRep { field, dim, side, action })
    }

    /// Wraps action matrices and verifies the module axioms over `alg`.
    pub fn checked(alg: &AlgebraData, dim: usize, side: Side, action: Vec<Matrix>) -> Result<ModuleRep> {
        let m = ModuleRep::new(alg.field(), dim, side, action)?;
        let r = m.check(alg);
        if !r.passed() {
            return Err(Error::Axiom(r.witnesses.join("; ")));
        }
        Ok(m)
    }

    /// `F` with the action of an algebra character.
    pub fn character(field: Field, side: Side, values: &[Scalar]) -> ModuleRep {
        let action = values.iter().map(|v| Matrix::from_vec(field, 1, 1, vec![v.clone()]).unwrap()).collect();
        ModuleRep { field, dim: 1, side, action }
    }

    /// The trivial module of a Hopf algebra, acting through the counit.
    pub fn trivial(h: &HopfData, side: Side) -> ModuleRep {
        ModuleRep::character(h.field(), side, h.counit())
    }

    /// The left or right regular representation.
    pub fn regular(alg: &AlgebraData, side: Side) -> ModuleRep {
        let n = alg.dim();
        let action = (0..n)
            .map(|i| match side {
                Side::Left => alg.left_mult(i),
                Side::Right => alg.right_mult(i),
            })
            .collect();
        ModuleRep { field: alg.field(), dim: n, side, action }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    /// Operator of an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m.add_scaled(c, a);
            }
        }
        m
    }

    pub fn check(&self, alg: &AlgebraData) -> Report {
        let mut r = Report::new("module-axioms", format!("{} module", self.side.as_str()));
        if alg.field() != self.field {
            r.fail(format!("field {} vs {}", alg.field(), self.field));
            return r;
        }
        if self.action.len() != alg.dim() {
            r.fail(format!("{} action matrices for an algebra of dimension {}", self.action.len(), alg.dim()));
            return r;
        }
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.act(alg.basis_product(i, j));
                let rhs = match self.side {
                    Side::Left => &self.action[i] * &self.action[j],
                    Side::Right => &self.action[j] * &self.action[i],
                };
                r.expect(lhs == rhs, || format!("module axiom at (i,j)=({i},{j})"));
            }
        }
        r.expect(self.act(alg.unit()).is_identity(), || "unit does not act as identity".into());
        r
    }

    /// Direct sum; the first summand's coordinates come first.
    pub fn direct_sum(&self, other: &ModuleRep) -> ModuleRep {
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                Matrix::from_fn(self.field, d, d, |i, j| {
                    if i < self.dim && j < self.dim {
                        a.get(i, j).clone()
                    } else if i >= self.dim && j >= self.dim {
                        b.get(i - self.dim, j - self.dim).clone()
                    } else {
                        self.field.zero()
                    }
                })
            })
            .collect();
        ModuleRep { field: self.field, dim: d, side: self.side, action }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn regular_representations_are_modules() {
        let h = zoo::sweedler();
        for side in [Side::Left, Side::Right] {
            assert!(ModuleRep::regular(h.alg(), side).check(h.alg()).passed());
        }
        assert!(ModuleRep::trivial(&h, Side::Left).check(h.alg()).passed());
    }

    #[test]
    fn wrong_side_is_detected() {
        let h = zoo::sweedler();
        let left = ModuleRep::regular(h.alg(), Side::Left);
        let as_right = ModuleRep::new(h.field(), 4, Side::Right, left.action().to_vec()).unwrap();
        assert!(!as_right.check(h.alg()).passed());
    }
}
