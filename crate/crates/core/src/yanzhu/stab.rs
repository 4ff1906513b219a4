//! Yan-Zhu stabilizers and their algebra and comodule structures.
//!
//! For a left `H`-comodule algebra `K` and left `K`-modules `U`, `W`, an element
//! `Σ_a e^a ⊗ X_a` of `H* ⊗ Hom(U, W)` is stored at index `(a * dim W + w) * dim U + u`
//! (the coefficient of `X_a[w][u]`). It lies in `St_K(U, W)` iff for all basis `t ∈ H`,
//! `k ∈ K`, `u ∈ U`:
//!
//! `Σ_a ⟨e^a, t⟩ X_a(k·u) = Σ_a ⟨e^a, S⁻¹(k₋₁) t⟩ k₀·X_a(u)`.
//!
//! The mirrored stabilizer inside `Hom(V, Y) ⊗ H` (index `(y * dim V + v) * dim H + h`)
//! is built in [`super::dual`] and shares the [`StabSpace`] type.

use std::sync::OnceLock;

use crate::error::{same_field, Error, Result};
use crate::exactlin::operators::{equations_kernel, intertwiners};
use crate::exactlin::{Matrix, Scalar, SpanBuilder, Subspace};
use crate::hopf::tensor::axpy;
use crate::hopf::{harpoon, AlgebraData, HarpoonKind, HarpoonSide, HopfData};
use crate::modcom::{ComodAlg, ModAlg, ModuleRep, Side};

/// Where the stabilizer lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    /// Inside `H* ⊗ Hom(U, W)`, for a left `H`-comodule algebra.
    InDualTensor,
    /// Inside `Hom(V, Y) ⊗ H`, for a right `H*`-comodule algebra.
    InTensorH,
}

impl Chirality {
    pub fn as_str(self) -> &'static str {
        match self {
            Chirality::InDualTensor => "dual-tensor",
            Chirality::InTensorH => "tensor-h",
        }
    }

    pub fn parse(s: &str) -> Option<Chirality> {
        [Chirality::InDualTensor, Chirality::InTensorH].into_iter().find(|c| c.as_str() == s)
    }
}

/// A stabilizer as a canonical subspace of its ambient tensor space.
///
/// `hopf` is the `H` of the ambient space in both chiralities. `dim_u`/`dim_w` are the
/// source and target module dimensions (`V` and `Y` for [`Chirality::InTensorH`]).
#[derive(Clone, Debug)]
pub struct StabSpace {
    pub hopf: HopfData,
    pub chirality: Chirality,
    pub dim_u: usize,
    pub dim_w: usize,
    pub space: Subspace,
    algebra: OnceLock<AlgebraData>,
}

impl PartialEq for StabSpace {
    fn eq(&self, other: &StabSpace) -> bool {
        self.hopf == other.hopf
            && self.chirality == other.chirality
            && self.dim_u == other.dim_u
            && self.dim_w == other.dim_w
            && self.space == other.space
    }
}

impl Eq for StabSpace {}

impl StabSpace {
    pub fn new(hopf: HopfData, chirality: Chirality, dim_u: usize, dim_w: usize, space: Subspace) -> Result<StabSpace> {
        same_field(hopf.field(), space.field())?;
        let ambient = hopf.dim() * dim_u * dim_w;
        if space.ambient_dim() != ambient {
            return Err(Error::AmbientMismatch(space.ambient_dim(), ambient));
        }
        Ok(StabSpace { hopf, chirality, dim_u, dim_w, space, algebra: OnceLock::new() })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn is_endomorphic(&self) -> bool {
        self.dim_u == self.dim_w
    }

    /// The `Hom` component attached to the basis element `a` of the `H*` (or `H`) leg.
    pub fn component(&self, x: &[Scalar], a: usize) -> Matrix {
        let (du, dw, n) = (self.dim_u, self.dim_w, self.hopf.dim());
        let f = self.hopf.field();
        match self.chirality {
            Chirality::InDualTensor => Matrix::from_fn(f, dw, du, |w, u| x[(a * dw + w) * du + u].clone()),
            Chirality::InTensorH => Matrix::from_fn(f, dw, du, |y, v| x[(y * du + v) * n + a].clone()),
        }
    }

    /// Product in the ambient algebra: `(α ⊗ f)(β ⊗ g) = αβ ⊗ fg` in `H* ⊗ End(W)`,
    /// `(f ⊗ h)(g ⊗ t) = fg ⊗ th` in `End(V) ⊗ H`.
    pub fn ambient_product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim_w;
        let n = self.hopf.dim();
        let f = self.hopf.field();
        let mut out = vec![f.zero(); self.ambient_dim()];
        match self.chirality {
            Chirality::InDualTensor => {
                // e^a e^b = Σ_c d[c][a][b] e^c.
                let comult = self.hopf.comult();
                for (c, a, b, coef) in comult.nonzeros() {
                    let xa = self.component(x, a);
                    let yb = self.component(y, b);
                    if xa.is_zero() || yb.is_zero() {
                        continue;
                    }
                    let p = &xa * &yb;
                    axpy(&mut out[c * d * d..(c + 1) * d * d], coef, p.data());
                }
            }
            Chirality::InTensorH => {
                let mult = self.hopf.mult();
                for h in 0..n {
                    let xh = self.component(x, h);
                    if xh.is_zero() {
                        continue;
                    }
                    for t in 0..n {
                        let yt = self.component(y, t);
                        if yt.is_zero() {
                            continue;
                        }
                        let p = &xh * &yt;
                        for (r, coef) in mult.fiber(t, h).iter().enumerate() {
                            if coef.is_zero() {
                                continue;
                            }
                            for (i, v) in p.data().iter().enumerate() {
                                if !v.is_zero() {
                                    out[i * n + r].add_product(coef, v);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `ε ⊗ id` (resp. `id ⊗ 1`).
    pub fn ambient_unit(&self) -> Vec<Scalar> {
        let d = self.dim_w;
        let n = self.hopf.dim();
        let f = self.hopf.field();
        let mut out = vec![f.zero(); self.ambient_dim()];
        for a in 0..n {
            let c = match self.chirality {
                Chirality::InDualTensor => &self.hopf.counit()[a],
                Chirality::InTensorH => &self.hopf.unit()[a],
            };
            if c.is_zero() {
                continue;
            }
            for w in 0..d {
                match self.chirality {
                    Chirality::InDualTensor => out[(a * d + w) * d + w] = c.clone(),
                    Chirality::InTensorH => out[(w * d + w) * n + a] = c.clone(),
                }
            }
        }
        out
    }

    /// Matrix of an ambient operator preserving the stabilizer, in stabilizer coordinates.
    pub fn restrict(&self, op: &Matrix) -> Result<Matrix> {
        let f = self.hopf.field();
        let mut columns = Vec::with_capacity(self.dim());
        for (i, b) in self.space.basis_vectors().enumerate() {
            let image = op.apply(b);
            let c = self
                .space
                .coordinates(&image)
                .ok_or_else(|| Error::invalid(format!("operator does not preserve the stabilizer at basis element {i}")))?;
            columns.push(c);
        }
        Ok(Matrix::from_columns(f, self.dim(), &columns))
    }

    /// Structure constants of the composition product on the canonical basis.
    pub fn algebra(&self) -> Result<AlgebraData> {
        if let Some(a) = self.algebra.get() {
            return Ok(a.clone());
        }
        if !self.is_endomorphic() {
            return Err(Error::invalid("the stabilizer of two different modules is not an algebra"));
        }
        let f = self.hopf.field();
        let basis: Vec<&[Scalar]> = self.space.basis_vectors().collect();
        let unit = self
            .space
            .coordinates(&self.ambient_unit())
            .ok_or_else(|| Error::invalid("the unit is not in the stabilizer"))?;
        let mut failure = None;
        let alg = AlgebraData::from_products(f, basis.len(), unit, |i, j| {
            let p = self.ambient_product(basis[i], basis[j]);
            self.space.coordinates(&p).unwrap_or_else(|| {
                failure.get_or_insert((i, j));
                vec![f.zero(); basis.len()]
            })
        })?;
        if let Some((i, j)) = failure {
            return Err(Error::invalid(format!("product of basis elements {i}, {j} leaves the stabilizer")));
        }
        let _ = self.algebra.set(alg.clone());
        Ok(alg)
    }

    /// The ambient operators of the Hopf action: `h·(α ⊗ f) = (h ⇀ α) ⊗ f` on `H* ⊗ Hom`
    /// (one per basis element of `H`), or `(f ⊗ h)·α = f ⊗ (h ⇂ α)` on `Hom ⊗ H`
    /// (one per basis element of `H*`).
    pub fn ambient_action(&self) -> Vec<Matrix> {
        let f = self.hopf.field();
        let rest = Matrix::identity(f, self.dim_u * self.dim_w);
        match self.chirality {
            Chirality::InDualTensor => harpoon(&self.hopf, HarpoonKind::HitLeft, HarpoonSide::OnDual)
                .matrices
                .iter()
                .map(|m| m.kron(&rest))
                .collect(),
            Chirality::InTensorH => harpoon(&self.hopf, HarpoonKind::TwistedRight, HarpoonSide::OnBase)
                .matrices
                .iter()
                .map(|m| rest.kron(m))
                .collect(),
        }
    }

    /// The stabilizer as a module algebra: left over `H` for [`Chirality::InDualTensor`],
    /// right over `H*` for [`Chirality::InTensorH`]. Both axioms are checked.
    pub fn module_algebra(&self) -> Result<ModAlg> {
        let alg = self.algebra()?;
        let action = self.ambient_action().iter().map(|op| self.restrict(op)).collect::<Result<Vec<_>>>()?;
        let (hopf, side) = match self.chirality {
            Chirality::InDualTensor => (self.hopf.clone(), Side::Left),
            Chirality::InTensorH => (self.hopf.dual(), Side::Right),
        };
        let act = ModuleRep::new(hopf.field(), self.dim(), side, action)?;
        ModAlg::checked(hopf, alg, act)
    }

    /// The comodule algebra obtained from [`StabSpace::module_algebra`] by the dictionary:
    /// a right `H*`-comodule algebra, resp. a left `H`-comodule algebra.
    pub fn comodule_algebra(&self) -> Result<ComodAlg> {
        let c = self.module_algebra()?.to_dual_comodule_algebra();
        let r = c.check();
        if !r.passed() {
            return Err(Error::Axiom(r.witnesses.join("; ")));
        }
        Ok(c)
    }

    /// `W` as a left module over the stabilizer through `ε ⊗ id` (resp. `id ⊗ ε`).
    pub fn natural_module(&self) -> Result<ModuleRep> {
        let alg = self.algebra()?;
        let action = self.space.basis_vectors().map(|x| self.collapse(x)).collect();
        ModuleRep::checked(&alg, self.dim_w, Side::Left, action)
    }

    /// `Σ_a ⟨e^a, 1⟩ X_a`, resp. `Σ_h ε(h) X_h`.
    pub fn collapse(&self, x: &[Scalar]) -> Matrix {
        let f = self.hopf.field();
        let weights = match self.chirality {
            Chirality::InDualTensor => self.hopf.unit(),
            Chirality::InTensorH => self.hopf.counit(),
        };
        let mut m = Matrix::zeros(f, self.dim_w, self.dim_u);
        for (a, c) in weights.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.component(x, a));
            }
        }
        m
    }
}

pub(crate) fn check_left_modules(k: &ComodAlg, mods: &[&ModuleRep]) -> Result<()> {
    for m in mods {
        same_field(k.field(), m.field())?;
        if m.side() != Side::Left {
            return Err(Error::invalid("stabilizers take left modules"));
        }
        if m.algebra_dim() != k.dim() {
            return Err(Error::shape(format!(
                "module over a {}-dimensional algebra, expected {}",
                m.algebra_dim(),
                k.dim()
            )));
        }
    }
    Ok(())
}

/// `Q[x][b] = ρ(A_b(e_x))`: the module action of the coaction components.
pub(crate) fn coaction_actions(k: &ComodAlg, m: &ModuleRep) -> Vec<Vec<Matrix>> {
    let ops = k.coact.operators();
    (0..k.dim())
        .map(|x| ops.iter().map(|a| m.act(&a.column(x))).collect())
        .collect()
}

/// `St_K(U, W)`, the kernel of one system with rows ordered by `(t, k, u, w)`.
pub fn stab_space(k: &ComodAlg, u: &ModuleRep, w: &ModuleRep) -> Result<StabSpace> {
    if k.side() != Side::Left {
        return Err(Error::invalid("stab_space needs a left comodule algebra"));
    }
    check_left_modules(k, &[u, w])?;
    let h = &k.hopf;
    let f = h.field();
    let (n, dk, du, dw) = (h.dim(), k.dim(), u.dim(), w.dim());
    let unknowns = n * dw * du;
    let idx = |a: usize, ww: usize, uu: usize| (a * dw + ww) * du + uu;
    // ⟨e^a, S⁻¹(e_h) e_t⟩ is entry (t, a) of the ⇁ matrix of e_h.
    let twisted = harpoon(h, HarpoonKind::TwistedLeft, HarpoonSide::OnDual).matrices;
    let q = coaction_actions(k, w);
    let mut eqs = SpanBuilder::new(f, unknowns);
    'outer: for t in 0..n {
        for x in 0..dk {
            let rho_u = u.act(&unit(f, dk, x));
            // M_a = Σ_h ⟨e^a, S⁻¹(e_h) e_t⟩ ρ_W(A_h(e_x)).
            let blocks: Vec<Matrix> = (0..n)
                .map(|a| {
                    let mut m = Matrix::zeros(f, dw, dw);
                    for (hh, tl) in twisted.iter().enumerate() {
                        let c = tl.get(t, a);
                        if !c.is_zero() {
                            m.add_scaled(c, &q[x][hh]);
                        }
                    }
                    m
                })
                .collect();
            for uu in 0..du {
                for w2 in 0..dw {
                    if eqs.is_full() {
                        break 'outer;
                    }
                    let mut row = vec![f.zero(); unknowns];
                    for u2 in 0..du {
                        let c = rho_u.get(u2, uu);
                        if !c.is_zero() {
                            row[idx(t, w2, u2)] += c;
                        }
                    }
                    for (a, m) in blocks.iter().enumerate() {
                        for w1 in 0..dw {
                            let c = m.get(w2, w1);
                            if !c.is_zero() {
                                row[idx(a, w1, uu)] -= c;
                            }
                        }
                    }
                    eqs.insert(row);
                }
            }
        }
    }
    StabSpace::new(h.clone(), Chirality::InDualTensor, du, dw, equations_kernel(f, unknowns, eqs))
}

pub(crate) fn unit(f: crate::exactlin::Field, n: usize, i: usize) -> Vec<Scalar> {
    crate::hopf::tensor::unit_vector(f, n, i)
}

/// `ρ(k)(β ⊗ w) = k₋₁ ⇁ β ⊗ k₀·w` on `H* ⊗ W` (index `a * dim W + w`), one matrix per basis element of `K`.
pub fn dual_tensor_rep(k: &ComodAlg, w: &ModuleRep) -> Result<Vec<Matrix>> {
    if k.side() != Side::Left {
        return Err(Error::invalid("expected a left comodule algebra"));
    }
    check_left_modules(k, &[w])?;
    let f = k.field();
    let twisted = harpoon(&k.hopf, HarpoonKind::TwistedLeft, HarpoonSide::OnDual).matrices;
    let q = coaction_actions(k, w);
    let n = k.hopf.dim();
    Ok(q.iter()
        .map(|qx| {
            let mut m = Matrix::zeros(f, n * w.dim(), n * w.dim());
            for (tl, a) in twisted.iter().zip(qx) {
                if !a.is_zero() {
                    m.add_scaled(&f.one(), &tl.kron(a));
                }
            }
            m
        })
        .collect())
}

/// `Hom_K(H* ⊗ U, H* ⊗ W)`, vectorized row-major, computed directly as an intertwiner space.
pub fn hom_k_dual_tensor(k: &ComodAlg, u: &ModuleRep, w: &ModuleRep) -> Result<Subspace> {
    let ru = dual_tensor_rep(k, u)?;
    let rw = dual_tensor_rep(k, w)?;
    let n = k.hopf.dim();
    let pairs: Vec<(&Matrix, &Matrix)> = ru.iter().zip(&rw).collect();
    Ok(intertwiners(k.field(), n * u.dim(), n * w.dim(), &pairs))
}

/// The map `𝓛(α ⊗ f)(β ⊗ u) = αβ ⊗ f(u)` from `H* ⊗ Hom(U, W)` into vectorized
/// `Hom(H* ⊗ U, H* ⊗ W)`.
pub fn ell_matrix(h: &HopfData, du: usize, dw: usize) -> Matrix {
    let n = h.dim();
    let f = h.field();
    let cols = n * dw * du;
    let rows = (n * dw) * (n * du);
    let mut m = Matrix::zeros(f, rows, cols);
    // 𝓛(e^c ⊗ E_{w,u})[(a, w)][(b, u)] = d[a][c][b].
    for (a, c, b, coef) in h.comult().nonzeros() {
        for w in 0..dw {
            for u in 0..du {
                let row = (a * dw + w) * (n * du) + b * du + u;
                m.set(row, (c * dw + w) * du + u, coef.clone());
            }
        }
    }
    m
}

/// Hom over the base algebra alone: `Hom_K(U, W)` as `dim W × dim U` matrices.
pub fn hom_k(k_dim: usize, u: &ModuleRep, w: &ModuleRep) -> Subspace {
    let f = u.field();
    let gu: Vec<Matrix> = (0..k_dim).map(|x| u.act(&unit(f, k_dim, x))).collect();
    let gw: Vec<Matrix> = (0..k_dim).map(|x| w.act(&unit(f, k_dim, x))).collect();
    let pairs: Vec<(&Matrix, &Matrix)> = gu.iter().zip(&gw).collect();
    intertwiners(f, u.dim(), w.dim(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::zoo::{self, GroupTable};

    /// Independent route: the preimage under 𝓛 of `Hom_K(H* ⊗ U, H* ⊗ W)`, with the
    /// `K`-action on `H* ⊗ W` assembled from scratch.
    fn oracle(k: &ComodAlg, u: &ModuleRep, w: &ModuleRep) -> Subspace {
        let h = &k.hopf;
        let n = h.dim();
        let f = h.field();
        let sinv = h.antipode_inv();
        let rep = |m: &ModuleRep| -> Vec<Matrix> {
            let d = m.dim();
            (0..k.dim())
                .map(|x| {
                    let lam = k.coact.coact(&unit(f, k.dim(), x));
                    Matrix::from_fn(f, n * d, n * d, |row, col| {
                        let (a, w2) = (row / d, row % d);
                        let (b, w1) = (col / d, col % d);
                        // (e_h ⇁ e^b)(e_a) = ⟨e^b, S⁻¹(e_h) e_a⟩.
                        let mut s = f.zero();
                        for hh in 0..n {
                            let mut pairing = f.zero();
                            for c in 0..n {
                                pairing.add_product(sinv.get(c, hh), h.mult().get(c, a, b));
                            }
                            if pairing.is_zero() {
                                continue;
                            }
                            for x2 in 0..k.dim() {
                                let l = &lam[hh * k.dim() + x2];
                                if !l.is_zero() {
                                    let act = m.act(&unit(f, k.dim(), x2));
                                    s += &(&(&pairing * l) * act.get(w2, w1));
                                }
                            }
                        }
                        s
                    })
                })
                .collect()
        };
        let ru = rep(u);
        let rw = rep(w);
        let pairs: Vec<(&Matrix, &Matrix)> = ru.iter().zip(&rw).collect();
        let hom = intertwiners(f, n * u.dim(), n * w.dim(), &pairs);
        hom.preimage_under(&ell_matrix(h, u.dim(), w.dim()))
    }

    fn group_case() -> ComodAlg {
        zoo::twisted_group_algebra(&GroupTable::symmetric(3), &[0, 1], &zoo::Cocycle::trivial(Field::Rationals, 2))
            .unwrap()
    }

    fn sweedler_coideal() -> ComodAlg {
        let h = zoo::sweedler();
        zoo::coideal_subalgebra(&h, &Subspace::coordinate(h.field(), 4, [0, 1])).unwrap()
    }

    #[test]
    fn ground_algebra_gives_full_ambient() {
        let h = zoo::sweedler();
        let k = ComodAlg::ground(&h, Side::Left);
        let f = h.field();
        let w = ModuleRep::new(f, 2, Side::Left, vec![Matrix::identity(f, 2)]).unwrap();
        let st = stab_space(&k, &w, &w).unwrap();
        assert_eq!(st.dim(), 4 * 4);
        assert!(st.space.is_full());
    }

    #[test]
    fn group_case_has_dimension_three() {
        let k = group_case();
        let triv = ModuleRep::character(k.field(), Side::Left, &[k.field().one(), k.field().one()]);
        let st = stab_space(&k, &triv, &triv).unwrap();
        assert_eq!(st.dim(), 3);
        assert_eq!(st.space, oracle(&k, &triv, &triv));
    }

    #[test]
    fn sweedler_coideal_agrees_with_oracle_and_substitution() {
        let k = sweedler_coideal();
        let f = k.field();
        // ε(1) = 1, ε(x) = 0.
        let eps = ModuleRep::character(f, Side::Left, &[f.one(), f.zero()]);
        let st = stab_space(&k, &eps, &eps).unwrap();
        assert_eq!(st.dim(), 2);
        assert_eq!(st.space, oracle(&k, &eps, &eps));
        let alg = st.algebra().unwrap();
        assert!(alg.check().passed());
        assert!(st.comodule_algebra().is_ok());
    }

    #[test]
    fn regular_comodule_algebra_with_two_dimensional_module() {
        let h = zoo::group_algebra(&GroupTable::symmetric(3));
        let k = ComodAlg::regular(&h);
        let w = zoo::standard_rep(3, h.field());
        let st = stab_space(&k, &w, &w).unwrap();
        assert_eq!(st.dim(), 4);
        assert_eq!(st.space, oracle(&k, &w, &w));
        let m = st.natural_module().unwrap();
        assert!(m.check(&st.algebra().unwrap()).passed());
    }
}
