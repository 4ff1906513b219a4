//! The four harpoon actions between `H` and `H*`.
//!
//! For `h, t ∈ H` and `α ∈ H*`:
//! `⟨h ⇀ α, t⟩ = ⟨α, t h⟩`, `⟨α ↼ h, t⟩ = ⟨α, h t⟩`,
//! `⟨h ⇁ α, t⟩ = ⟨α, S⁻¹(h) t⟩`, `⟨α ⇂ h, t⟩ = ⟨α, t S⁻¹(h)⟩`.
//! The same symbols denote the actions of `H*` on `H = H**`, obtained from the
//! dual Hopf algebra.

use crate::exactlin::{Matrix, Scalar};
use crate::hopf::HopfData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HarpoonKind {
    /// `⇀`, a left action.
    HitLeft,
    /// `↼`, a right action.
    HitRight,
    /// `⇁`, a left action twisted by the inverse antipode.
    TwistedLeft,
    /// `⇂`, a right action twisted by the inverse antipode.
    TwistedRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HarpoonSide {
    /// `H` acting on `H*`.
    OnDual,
    /// `H*` acting on `H`.
    OnBase,
}

impl HarpoonKind {
    pub const ALL: [HarpoonKind; 4] =
        [HarpoonKind::HitLeft, HarpoonKind::HitRight, HarpoonKind::TwistedLeft, HarpoonKind::TwistedRight];

    pub fn is_left(self) -> bool {
        matches!(self, HarpoonKind::HitLeft | HarpoonKind::TwistedLeft)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            HarpoonKind::HitLeft => "⇀",
            HarpoonKind::HitRight => "↼",
            HarpoonKind::TwistedLeft => "⇁",
            HarpoonKind::TwistedRight => "⇂",
        }
    }
}

/// One matrix per acting basis element, acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionOperator {
    pub kind: HarpoonKind,
    pub side: HarpoonSide,
    pub matrices: Vec<Matrix>,
}

impl ActionOperator {
    /// Operator of an arbitrary acting element.
    pub fn of(&self, x: &[Scalar]) -> Matrix {
        let n = self.matrices[0].rows();
        let mut m = Matrix::zeros(self.matrices[0].field(), n, n);
        for (c, a) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                m.add_scaled(c, a);
            }
        }
        m
    }

    pub fn apply(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.matrices[0].field().zero(); v.len()];
        for (c, a) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                let w = a.apply(v);
                crate::hopf::tensor::axpy(&mut out, c, &w);
            }
        }
        out
    }
}

pub fn harpoon(h: &HopfData, kind: HarpoonKind, side: HarpoonSide) -> ActionOperator {
    match side {
        HarpoonSide::OnDual => ActionOperator { kind, side, matrices: on_dual(h, kind) },
        HarpoonSide::OnBase => ActionOperator { kind, side, matrices: on_dual(&h.dual(), kind) },
    }
}

fn on_dual(h: &HopfData, kind: HarpoonKind) -> Vec<Matrix> {
    let n = h.dim();
    let f = h.field();
    let m = h.mult();
    let sinv = h.antipode_inv();
    (0..n)
        .map(|b| match kind {
            HarpoonKind::HitLeft => Matrix::from_fn(f, n, n, |i, j| m.get(i, b, j).clone()),
            HarpoonKind::HitRight => Matrix::from_fn(f, n, n, |i, j| m.get(b, i, j).clone()),
            HarpoonKind::TwistedLeft => Matrix::from_fn(f, n, n, |i, j| {
                let mut s = f.zero();
                for c in 0..n {
                    s.add_product(sinv.get(c, b), m.get(c, i, j));
                }
                s
            }),
            HarpoonKind::TwistedRight => Matrix::from_fn(f, n, n, |i, j| {
                let mut s = f.zero();
                for c in 0..n {
                    s.add_product(sinv.get(c, b), m.get(i, c, j));
                }
                s
            }),
        })
        .collect()
}

/// All four harpoons on one side, in [`HarpoonKind::ALL`] order.
#[derive(Clone, Debug)]
pub struct Harpoons {
    pub hit_left: ActionOperator,
    pub hit_right: ActionOperator,
    pub twisted_left: ActionOperator,
    pub twisted_right: ActionOperator,
}

impl Harpoons {
    pub fn new(h: &HopfData, side: HarpoonSide) -> Harpoons {
        Harpoons {
            hit_left: harpoon(h, HarpoonKind::HitLeft, side),
            hit_right: harpoon(h, HarpoonKind::HitRight, side),
            twisted_left: harpoon(h, HarpoonKind::TwistedLeft, side),
            twisted_right: harpoon(h, HarpoonKind::TwistedRight, side),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::tensor::{dot, unit_vector};
    use crate::zoo;

    /// `⟨g ⇀ α, b⟩ = ⟨α, b g⟩` on all basis pairs, evaluated through the pairing.
    #[test]
    fn hit_left_is_transpose_of_right_multiplication() {
        let h = zoo::group_algebra(&zoo::GroupTable::cyclic(2));
        let op = harpoon(&h, HarpoonKind::HitLeft, HarpoonSide::OnDual);
        let f = h.field();
        for g in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    let alpha = unit_vector(f, 2, a);
                    let lhs = dot(&op.matrices[g].apply(&alpha), &unit_vector(f, 2, b));
                    let rhs = dot(&alpha, h.alg().basis_product(b, g));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn unit_acts_trivially() {
        let h = zoo::sweedler();
        for side in [HarpoonSide::OnDual, HarpoonSide::OnBase] {
            for kind in HarpoonKind::ALL {
                let one = match side {
                    HarpoonSide::OnDual => h.unit().to_vec(),
                    HarpoonSide::OnBase => h.counit().to_vec(),
                };
                assert!(harpoon(&h, kind, side).of(&one).is_identity(), "{kind:?} {side:?}");
            }
        }
    }

    /// `α ⇁ h = ⟨α, S⁻¹(h₁)⟩ h₂` expanded from the coproduct, against the matrices.
    #[test]
    fn twisted_left_on_base_matches_sweedler_expansion() {
        let h = zoo::sweedler();
        let n = h.dim();
        let f = h.field();
        let op = harpoon(&h, HarpoonKind::TwistedLeft, HarpoonSide::OnBase);
        for a in 0..n {
            for t in 0..n {
                let mut expect = vec![f.zero(); n];
                for (p, q, c) in h.comult().slab_nonzeros(t) {
                    let s = h.antipode_inv().column(p);
                    let w = &s[a] * c;
                    expect[q] += &w;
                }
                assert_eq!(op.matrices[a].apply(&unit_vector(f, n, t)), expect);
            }
        }
    }

    #[test]
    fn left_actions_are_module_structures() {
        let h = zoo::sweedler();
        let n = h.dim();
        for kind in [HarpoonKind::HitLeft, HarpoonKind::TwistedLeft] {
            let op = harpoon(&h, kind, HarpoonSide::OnDual);
            for a in 0..n {
                for b in 0..n {
                    let ab = op.of(h.alg().basis_product(a, b));
                    assert_eq!(ab, &op.matrices[a] * &op.matrices[b], "{kind:?}");
                }
            }
        }
        for kind in [HarpoonKind::HitRight, HarpoonKind::TwistedRight] {
            let op = harpoon(&h, kind, HarpoonSide::OnDual);
            for a in 0..n {
                for b in 0..n {
                    // α·(ab) = (α·a)·b
                    let ab = op.of(h.alg().basis_product(a, b));
                    assert_eq!(ab, &op.matrices[b] * &op.matrices[a], "{kind:?}");
                }
            }
        }
    }
}
