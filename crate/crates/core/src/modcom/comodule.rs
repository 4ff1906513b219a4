//! Comodules, comodule algebras, module algebras and the dictionary between them.

use crate::error::{same_field, Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};
use crate::hopf::tensor::{axpy, outer};
use crate::hopf::{AlgebraData, HopfData};
use crate::modcom::{ModuleRep, Side};
use crate::report::Report;

/// A coaction stored as a matrix from `M` to `H ⊗ M` (left, row `h * dim + m`)
/// or to `M ⊗ H` (right, row `m * dim H + h`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComoduleStr {
    side: Side,
    hopf_dim: usize,
    dim: usize,
    coaction: Matrix,
}

impl ComoduleStr {
    pub fn new(side: Side, hopf_dim: usize, dim: usize, coaction: Matrix) -> Result<ComoduleStr> {
        if coaction.rows() != hopf_dim * dim || coaction.cols() != dim {
            return Err(Error::shape(format!(
                "coaction of shape {}x{} for a {dim}-dimensional comodule over a {hopf_dim}-dimensional coalgebra",
                coaction.rows(),
                coaction.cols()
            )));
        }
        Ok(ComoduleStr { side, hopf_dim, dim, coaction })
    }

    /// Builds the coaction from the operators `A_b = ⟨e^b, m₋₁⟩ m₀` (left) or `m₀ ⟨e^b, m₁⟩` (right).
    pub fn from_operators(side: Side, ops: &[Matrix]) -> ComoduleStr {
        let n = ops.len();
        let d = ops[0].rows();
        let f = ops[0].field();
        let coaction = Matrix::from_fn(f, n * d, d, |row, x| match side {
            Side::Left => ops[row / d].get(row % d, x).clone(),
            Side::Right => ops[row % n].get(row / n, x).clone(),
        });
        ComoduleStr { side, hopf_dim: n, dim: d, coaction }
    }

    /// The trivial coaction `m ↦ 1 ⊗ m`.
    pub fn trivial(h: &HopfData, side: Side, dim: usize) -> ComoduleStr {
        let f = h.field();
        let ops: Vec<Matrix> = (0..h.dim()).map(|b| Matrix::identity(f, dim).scale(&h.unit()[b])).collect();
        ComoduleStr::from_operators(side, &ops)
    }

    #[inline]
    pub fn side(&self) -> Side {
        self.side
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn hopf_dim(&self) -> usize {
        self.hopf_dim
    }

    pub fn field(&self) -> Field {
        self.coaction.field()
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    /// `A_b`, the coaction followed by evaluation of the `H` leg at `e^b`.
    pub fn operator(&self, b: usize) -> Matrix {
        let d = self.dim;
        let n = self.hopf_dim;
        Matrix::from_fn(self.field(), d, d, |x2, x| match self.side {
            Side::Left => self.coaction.get(b * d + x2, x).clone(),
            Side::Right => self.coaction.get(x2 * n + b, x).clone(),
        })
    }

    pub fn operators(&self) -> Vec<Matrix> {
        (0..self.hopf_dim).map(|b| self.operator(b)).collect()
    }

    pub fn coact(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.coaction.apply(v)
    }

    /// Coassociativity and counit over `h`.
    pub fn check(&self, h: &HopfData) -> Report {
        let mut r = Report::new("comodule-axioms", format!("{} comodule", self.side.as_str()));
        if h.dim() != self.hopf_dim || h.field() != self.field() {
            r.fail("comodule is over a different coalgebra");
            return r;
        }
        let n = self.hopf_dim;
        let ops = self.operators();
        // With A_b as above, coassociativity reads A_q A_p = Σ_b d[b][p][q] A_b (left)
        // and A_p A_q = Σ_b d[b][p][q] A_b (right).
        for p in 0..n {
            for q in 0..n {
                let mut lhs = Matrix::zeros(self.field(), self.dim, self.dim);
                for b in 0..n {
                    let c = h.comult().get(b, p, q);
                    if !c.is_zero() {
                        lhs.add_scaled(c, &ops[b]);
                    }
                }
                let rhs = match self.side {
                    Side::Left => &ops[q] * &ops[p],
                    Side::Right => &ops[p] * &ops[q],
                };
                r.expect(lhs == rhs, || format!("coassociativity at (p,q)=({p},{q})"));
            }
        }
        let mut counit = Matrix::zeros(self.field(), self.dim, self.dim);
        for (b, e) in h.counit().iter().enumerate() {
            if !e.is_zero() {
                counit.add_scaled(e, &ops[b]);
            }
        }
        r.expect(counit.is_identity(), || "counit axiom".into());
        r
    }

    /// `{m : λ(m) = 1 ⊗ m}` (or `m ⊗ 1`).
    pub fn coinvariants(&self, h: &HopfData) -> Subspace {
        let f = self.field();
        let d = self.dim;
        let blocks: Vec<Matrix> = self
            .operators()
            .iter()
            .enumerate()
            .map(|(b, a)| a.sub(&Matrix::identity(f, d).scale(&h.unit()[b])))
            .collect();
        Matrix::vstack(f, d, &blocks).kernel()
    }

    /// The corresponding module over the dual: left comodules become right
    /// `H*`-modules and vice versa, with `ρ(e^b) = A_b`.
    pub fn to_dual_module(&self) -> ModuleRep {
        let side = match self.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        ModuleRep::new(self.field(), self.dim, side, self.operators()).expect("square operators")
    }

    /// Inverse of [`ComoduleStr::to_dual_module`]: a module over `H` as a comodule over `H*`.
    pub fn from_dual_module(m: &ModuleRep) -> ComoduleStr {
        let side = match m.side() {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        ComoduleStr::from_operators(side, m.action())
    }

    /// Whether `s` is a subcomodule.
    pub fn is_subcomodule(&self, s: &Subspace) -> bool {
        self.operators().iter().all(|a| s.basis_vectors().all(|v| s.contains(&a.apply(v))))
    }
}

/// An algebra with a coaction of `hopf` that is an algebra map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComodAlg {
    pub hopf: HopfData,
    pub alg: AlgebraData,
    pub coact: ComoduleStr,
}

impl ComodAlg {
    pub fn new(hopf: HopfData, alg: AlgebraData, coact: ComoduleStr) -> Result<ComodAlg> {
        same_field(hopf.field(), alg.field())?;
        same_field(hopf.field(), coact.field())?;
        if coact.dim() != alg.dim() || coact.hopf_dim() != hopf.dim() {
            return Err(Error::shape("coaction does not match algebra and Hopf algebra dimensions"));
        }
        Ok(ComodAlg { hopf, alg, coact })
    }

    /// Builds and checks; fails with the first violated axiom.
    pub fn checked(hopf: HopfData, alg: AlgebraData, coact: ComoduleStr) -> Result<ComodAlg> {
        let k = ComodAlg::new(hopf, alg, coact)?;
        let r = k.check();
        if !r.passed() {
            return Err(Error::Axiom(r.witnesses.join("; ")));
        }
        Ok(k)
    }

    pub fn side(&self) -> Side {
        self.coact.side()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    /// `H` as a left comodule algebra over itself via `Δ`.
    pub fn regular(h: &HopfData) -> ComodAlg {
        let d = h.dim();
        let coaction = Matrix::from_fn(h.field(), d * d, d, |row, x| h.comult().get(x, row / d, row % d).clone());
        ComodAlg {
            hopf: h.clone(),
            alg: h.alg().clone(),
            coact: ComoduleStr::new(Side::Left, d, d, coaction).expect("shape"),
        }
    }

    /// `F` with the coaction `1 ↦ 1 ⊗ 1`.
    pub fn ground(h: &HopfData, side: Side) -> ComodAlg {
        ComodAlg {
            hopf: h.clone(),
            alg: AlgebraData::ground(h.field()),
            coact: ComoduleStr::trivial(h, side, 1),
        }
    }

    /// Any algebra with the trivial coaction.
    pub fn trivial(h: &HopfData, alg: AlgebraData, side: Side) -> ComodAlg {
        let d = alg.dim();
        ComodAlg { hopf: h.clone(), coact: ComoduleStr::trivial(h, side, d), alg }
    }

    /// Multiplicativity, unitality, coassociativity and counit.
    pub fn check(&self) -> Report {
        let mut r = Report::new("comodule-algebra-axioms", "coaction and counit are algebra maps");
        r.absorb(&self.alg.check());
        r.absorb(&self.coact.check(&self.hopf));
        let n = self.hopf.dim();
        let d = self.dim();
        let f = self.field();
        // λ(x)λ(y) in H ⊗ K (or K ⊗ H), both flattened like the coaction rows.
        let tensor_product = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec![f.zero(); n * d];
            for (a, xa) in x.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for (b, yb) in y.iter().enumerate() {
                    if yb.is_zero() {
                        continue;
                    }
                    let c = xa * yb;
                    let p = match self.side() {
                        Side::Left => outer(
                            self.hopf.alg().basis_product(a / d, b / d),
                            self.alg.basis_product(a % d, b % d),
                        ),
                        Side::Right => outer(
                            self.alg.basis_product(a / n, b / n),
                            self.hopf.alg().basis_product(a % n, b % n),
                        ),
                    };
                    axpy(&mut out, &c, &p);
                }
            }
            out
        };
        let columns: Vec<Vec<Scalar>> = (0..d).map(|x| self.coact.coaction().column(x)).collect();
        for x in 0..d {
            for y in 0..d {
                let lhs = self.coact.coact(self.alg.basis_product(x, y));
                let rhs = tensor_product(&columns[x], &columns[y]);
                r.expect(lhs == rhs, || format!("coaction multiplicativity at (x,y)=({x},{y})"));
            }
        }
        let one = match self.side() {
            Side::Left => outer(self.hopf.unit(), self.alg.unit()),
            Side::Right => outer(self.alg.unit(), self.hopf.unit()),
        };
        r.expect(self.coact.coact(self.alg.unit()) == one, || "coaction of unit".into());
        r
    }

    /// The dictionary: a left `H`-comodule algebra is a right `H*`-module algebra, and so on.
    pub fn to_dual_module_algebra(&self) -> ModAlg {
        ModAlg { hopf: self.hopf.dual(), alg: self.alg.clone(), act: self.coact.to_dual_module() }
    }

    pub fn coinvariants(&self) -> Subspace {
        self.coact.coinvariants(&self.hopf)
    }
}

/// An algebra with an action of `hopf` satisfying `h·(ab) = (h₁·a)(h₂·b)`
/// (left) or `(ab)·h = (a·h₁)(b·h₂)` (right), and `h·1 = ε(h)1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModAlg {
    pub hopf: HopfData,
    pub alg: AlgebraData,
    pub act: ModuleRep,
}

impl ModAlg {
    pub fn new(hopf: HopfData, alg: AlgebraData, act: ModuleRep) -> Result<ModAlg> {
        same_field(hopf.field(), alg.field())?;
        same_field(hopf.field(), act.field())?;
        if act.dim() != alg.dim() || act.algebra_dim() != hopf.dim() {
            return Err(Error::shape("action does not match algebra and Hopf algebra dimensions"));
        }
        Ok(ModAlg { hopf, alg, act })
    }

    pub fn checked(hopf: HopfData, alg: AlgebraData, act: ModuleRep) -> Result<ModAlg> {
        let m = ModAlg::new(hopf, alg, act)?;
        let r = m.check();
        if !r.passed() {
            return Err(Error::Axiom(r.witnesses.join("; ")));
        }
        Ok(m)
    }

    pub fn side(&self) -> Side {
        self.act.side()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    /// `H*` as a left `H`-module algebra via `⇀`.
    pub fn dual_hit(h: &HopfData) -> ModAlg {
        let hit = crate::hopf::harpoon(h, crate::hopf::HarpoonKind::HitLeft, crate::hopf::HarpoonSide::OnDual);
        let d = h.dual();
        ModAlg {
            hopf: h.clone(),
            alg: d.alg().clone(),
            act: ModuleRep::new(h.field(), h.dim(), Side::Left, hit.matrices).expect("shape"),
        }
    }

    /// `End(V)` for a left `H`-module `V`, acting by `(h·T) = h₁ T S(h₂)`.
    pub fn endomorphisms(h: &HopfData, v: &ModuleRep) -> Result<ModAlg> {
        let act = crate::hopf::hom_module::hom_module_structure(h, v, v, Side::Left)?;
        Ok(ModAlg { hopf: h.clone(), alg: AlgebraData::matrix_algebra(h.field(), v.dim()), act })
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("module-algebra-axioms", format!("{} module algebra", self.side().as_str()));
        r.absorb(&self.alg.check());
        r.absorb(&self.act.check(self.hopf.alg()));
        let n = self.hopf.dim();
        let d = self.dim();
        let f = self.field();
        let acts = self.act.action();
        for x in 0..n {
            for a in 0..d {
                for b in 0..d {
                    let lhs = acts[x].apply(self.alg.basis_product(a, b));
                    let mut rhs = vec![f.zero(); d];
                    for (p, q, c) in self.hopf.comult().slab_nonzeros(x) {
                        let pa = acts[p].column(a);
                        let qb = acts[q].column(b);
                        axpy(&mut rhs, c, &self.alg.product(&pa, &qb));
                    }
                    r.expect(lhs == rhs, || format!("module algebra axiom at (h,a,b)=({x},{a},{b})"));
                }
            }
            let e: Vec<Scalar> = self.alg.unit().iter().map(|u| u * &self.hopf.counit()[x]).collect();
            r.expect(acts[x].apply(self.alg.unit()) == e, || format!("action on unit at h={x}"));
        }
        r
    }

    /// The dictionary: a left `H`-module algebra is a right `H*`-comodule algebra and so on.
    pub fn to_dual_comodule_algebra(&self) -> ComodAlg {
        ComodAlg {
            hopf: self.hopf.dual(),
            alg: self.alg.clone(),
            coact: ComoduleStr::from_dual_module(&self.act),
        }
    }

    /// The module algebra with the trivial action `h·a = ε(h)a`.
    pub fn trivial(h: &HopfData, alg: AlgebraData, side: Side) -> ModAlg {
        let d = alg.dim();
        let action = (0..h.dim()).map(|b| Matrix::identity(h.field(), d).scale(&h.counit()[b])).collect();
        ModAlg { hopf: h.clone(), act: ModuleRep::new(h.field(), d, side, action).expect("shape"), alg }
    }
}

/// A module algebra over `H` as a comodule algebra over `H*`; see
/// [`ComodAlg::to_dual_module_algebra`] for the reverse direction.
pub fn module_comodule_dictionary(x: &ModAlg) -> ComodAlg {
    x.to_dual_comodule_algebra()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn regular_and_ground_comodule_algebras() {
        for h in [zoo::sweedler(), zoo::group_algebra(&zoo::GroupTable::symmetric(3))] {
            let k = ComodAlg::regular(&h);
            assert!(k.check().passed());
            assert_eq!(k.coinvariants(), Subspace::from_vectors(h.field(), h.dim(), [h.unit()]));
            let g = ComodAlg::ground(&h, Side::Left);
            assert!(g.check().passed());
            assert_eq!(g.coinvariants().dim(), 1);
        }
    }

    #[test]
    fn trivial_coaction_has_everything_coinvariant() {
        let h = zoo::sweedler();
        let k = ComodAlg::trivial(&h, AlgebraData::matrix_algebra(h.field(), 2), Side::Left);
        assert!(k.check().passed());
        assert!(k.coinvariants().is_full());
    }

    #[test]
    fn dictionary_round_trips_bit_exactly() {
        let h = zoo::sweedler();
        let hit = ModAlg::dual_hit(&h);
        assert!(hit.check().passed());
        let c = hit.to_dual_comodule_algebra();
        assert_eq!(c.side(), Side::Right);
        assert!(c.check().passed());
        let back = c.to_dual_module_algebra();
        assert_eq!(back, hit);
        let k = ComodAlg::regular(&h);
        let m = k.to_dual_module_algebra();
        assert!(m.check().passed());
        assert_eq!(m.to_dual_comodule_algebra(), k);
    }

    #[test]
    fn trivial_action_gives_trivial_coaction() {
        let h = zoo::group_algebra(&zoo::GroupTable::cyclic(2));
        let m = ModAlg::trivial(&h, AlgebraData::ground(h.field()), Side::Left);
        let c = m.to_dual_comodule_algebra();
        assert_eq!(c.coact, ComoduleStr::trivial(&h.dual(), Side::Right, 1));
    }

    #[test]
    fn broken_coaction_is_reported() {
        let h = zoo::sweedler();
        let k = ComodAlg::regular(&h);
        let mut ops = k.coact.operators();
        ops.swap(0, 1);
        let bad = ComodAlg::new(h, k.alg.clone(), ComoduleStr::from_operators(Side::Left, &ops)).unwrap();
        assert!(!bad.check().passed());
    }
}
