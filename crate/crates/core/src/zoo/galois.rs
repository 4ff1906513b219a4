//! Hopf-Galois extensions `K ⊇ R = K^{co H'}` for a Hopf subalgebra `H' ⊆ H`, and the
//! description of `St_K(W)` as the convolution algebra `Hom_{H'}(H, End_R(W))`.
//!
//! `K ⊗ K` has `x ⊗ y` at `x * dim K + y`; `K ⊗_R K` is its quotient by
//! `span{xr ⊗ y − x ⊗ ry}`. Elements of `K ⊗_R K` are handled through representatives
//! and compared after projecting.

use crate::error::{Error, Result};
use crate::exactlin::operators::{commutant, operators};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::hopf::tensor::unit_vector;
use crate::hopf::{HarpoonKind, HarpoonSide, HopfData};
use crate::modcom::{ComodAlg, ComoduleStr, ModuleRep, Side};
use crate::report::Report;
use crate::yanzhu::stab_space;
use crate::zoo::{group_algebra, GroupTable};

/// A Hopf subalgebra `H' ⊆ H`, given by the injective Hopf map `ι: H' → H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfInclusion {
    pub big: HopfData,
    pub sub: HopfData,
    /// `dim H × dim H'`, column `t` is `ι(e_t)`.
    pub map: Matrix,
}

impl HopfInclusion {
    pub fn new(big: HopfData, sub: HopfData, map: Matrix) -> Result<HopfInclusion> {
        let inc = HopfInclusion { big, sub, map };
        let r = inc.check();
        if !r.passed() {
            return Err(Error::Axiom(r.to_string()));
        }
        Ok(inc)
    }

    pub fn identity(h: &HopfData) -> HopfInclusion {
        HopfInclusion { big: h.clone(), sub: h.clone(), map: Matrix::identity(h.field(), h.dim()) }
    }

    /// `ι` is injective and commutes with every structure map.
    pub fn check(&self) -> Report {
        let mut r = Report::new("hopf-inclusion", "H' → H is an injective Hopf map");
        let (big, sub, map) = (&self.big, &self.sub, &self.map);
        let m = sub.dim();
        r.expect(map.rank() == m, || "ι is not injective".into());
        r.expect(map.apply(sub.unit()) == big.unit(), || "ι(1) ≠ 1".into());
        let pair = map.kron(map);
        for s in 0..m {
            let es = map.column(s);
            r.expect(big.counit_of(&es) == sub.counit()[s], || format!("ε ∘ ι ≠ ε at {s}"));
            r.expect(big.coproduct(&es) == pair.apply(sub.coalg().basis_coproduct(s)), || format!("Δ ∘ ι ≠ (ι⊗ι) ∘ Δ at {s}"));
            r.expect(big.antipode().apply(&es) == map.apply(&sub.antipode().column(s)), || format!("S ∘ ι ≠ ι ∘ S at {s}"));
            for t in 0..m {
                let lhs = big.product(&es, &map.column(t));
                if !r.expect(lhs == map.apply(sub.alg().basis_product(s, t)), || format!("ι not multiplicative at ({s},{t})")) {
                    return r;
                }
            }
        }
        r
    }
}

/// The canonical map of `K` and, when it is bijective, its inverse and the translation map.
#[derive(Clone, Debug)]
pub struct GaloisData {
    pub inclusion: HopfInclusion,
    /// `K` over `H'`.
    pub k: ComodAlg,
    /// `R = K^{co H'}`.
    pub coinvariants: Subspace,
    /// `K ⊗ K → K ⊗_R K` and a section.
    pub proj: Matrix,
    pub section: Matrix,
    /// `β: K ⊗_R K → H' ⊗ K`, rows `t * dim K + x`.
    pub beta: Matrix,
    pub beta_inverse: Option<Matrix>,
}

impl GaloisData {
    pub fn is_galois(&self) -> bool {
        self.beta_inverse.is_some()
    }

    /// A representative in `K ⊗ K` of `t^{[1]} ⊗ t^{[2]} = β⁻¹(t ⊗ 1)`.
    pub fn translation(&self, t: &[Scalar]) -> Option<Vec<Scalar>> {
        let inv = self.beta_inverse.as_ref()?;
        let d = self.k.dim();
        let f = self.k.field();
        let mut rhs = vec![f.zero(); t.len() * d];
        for (s, c) in t.iter().enumerate() {
            for (x, u) in self.k.alg.unit().iter().enumerate() {
                rhs[s * d + x] = c * u;
            }
        }
        Some(self.section.apply(&inv.apply(&rhs)))
    }

    /// `K` as a left `H`-comodule algebra through `ι`.
    pub fn over_big(&self) -> Result<ComodAlg> {
        let d = self.k.dim();
        let f = self.k.field();
        let coaction = &self.inclusion.map.kron(&Matrix::identity(f, d)) * self.k.coact.coaction();
        let big = &self.inclusion.big;
        ComodAlg::checked(big.clone(), self.k.alg.clone(), ComoduleStr::new(Side::Left, big.dim(), d, coaction)?)
    }
}

/// `span{xr ⊗ y − x ⊗ ry}` inside `K ⊗ K`.
fn balanced_relations(k: &ComodAlg, r: &Subspace) -> Subspace {
    let d = k.dim();
    let f = k.field();
    let mut vs = Vec::new();
    for rv in r.basis_vectors() {
        let right = k.alg.right_mult_by(rv);
        let left = k.alg.left_mult_by(rv);
        let op = right.kron(&Matrix::identity(f, d)).sub(&Matrix::identity(f, d).kron(&left));
        vs.extend((0..d * d).map(|c| op.column(c)));
    }
    Subspace::from_vectors(f, d * d, vs)
}

pub fn galois_build(inclusion: &HopfInclusion, k: &ComodAlg) -> Result<GaloisData> {
    if k.side() != Side::Left || k.hopf != inclusion.sub {
        return Err(Error::invalid("K must be a left comodule algebra over the subalgebra H'"));
    }
    let f = k.field();
    let d = k.dim();
    let m = inclusion.sub.dim();
    let coinvariants = k.coinvariants();
    let (proj, section) = balanced_relations(k, &coinvariants).quotient_maps();
    let lam = k.coact.coaction();
    // β(x ⊗ y) = x₋₁ ⊗ x₀ y on K ⊗ K.
    let mut full = Matrix::zeros(f, m * d, d * d);
    for x in 0..d {
        for y in 0..d {
            for t in 0..m {
                for x0 in 0..d {
                    let c = lam.get(t * d + x0, x);
                    if c.is_zero() {
                        continue;
                    }
                    for (z, p) in k.alg.basis_product(x0, y).iter().enumerate() {
                        if !p.is_zero() {
                            full.entry_mut(t * d + z, x * d + y).add_product(c, p);
                        }
                    }
                }
            }
        }
    }
    let beta = &full * &section;
    let beta_inverse = if beta.is_square() { beta.inverse().ok() } else { None };
    Ok(GaloisData { inclusion: inclusion.clone(), k: k.clone(), coinvariants, proj, section, beta, beta_inverse })
}

/// `Σ T[x,y] U[z,w] (x z) ⊗ (w y)`.
fn interleave(k: &ComodAlg, t: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
    let d = k.dim();
    let f = k.field();
    let mut out = vec![f.zero(); d * d];
    for (i, a) in t.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in u.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let left = k.alg.basis_product(i / d, j / d);
            let right = k.alg.basis_product(j % d, i % d);
            let c = a * b;
            for (p, lp) in left.iter().enumerate().filter(|(_, l)| !l.is_zero()) {
                for (q, rq) in right.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                    out[p * d + q].add_product(&c, &(lp * rq));
                }
            }
        }
    }
    out
}

/// The Schneider relations (g1)–(g7) for the translation map, on all basis tuples.
pub fn galois_relations(gd: &GaloisData) -> Report {
    let mut r = Report::new("galois-relations", "relations (g1)–(g7) of the translation map");
    let Some(_) = gd.beta_inverse else {
        r.fail("the canonical map is not bijective");
        return r;
    };
    let k = &gd.k;
    let h = &gd.inclusion.sub;
    let f = k.field();
    let d = k.dim();
    let m = h.dim();
    let id = Matrix::identity(f, d);
    let tau: Vec<Vec<Scalar>> = (0..m).map(|t| gd.translation(&unit_vector(f, m, t)).expect("galois")).collect();
    let tau_of = |v: &[Scalar]| gd.translation(v).expect("galois");
    let same = |a: &[Scalar], b: &[Scalar]| gd.proj.apply(a) == gd.proj.apply(b);
    let one = k.alg.unit();
    let lam = k.coact.operators();

    for (i, rv) in gd.coinvariants.basis_vectors().enumerate() {
        let left = k.alg.left_mult_by(rv).kron(&id);
        let right = id.kron(&k.alg.right_mult_by(rv));
        for (t, tt) in tau.iter().enumerate() {
            r.expect(same(&left.apply(tt), &right.apply(tt)), || format!("(g1) fails at r_{i}, t = {t}"));
        }
    }
    'g2: for t in 0..m {
        for s in 0..m {
            let lhs = tau_of(h.alg().basis_product(t, s));
            if !r.expect(same(&lhs, &interleave(k, &tau[t], &tau[s])), || format!("(g2) fails at ({t},{s})")) {
                break 'g2;
            }
        }
    }
    let mu = Matrix::from_fn(f, d, d * d, |z, c| k.alg.basis_product(c / d, c % d)[z].clone());
    for (t, tt) in tau.iter().enumerate() {
        let expect: Vec<Scalar> = one.iter().map(|u| u * &h.counit()[t]).collect();
        r.expect(mu.apply(tt) == expect, || format!("(g3) fails at {t}"));
    }
    // (g4) in K ⊗_R K ⊗_R K.
    let mut rel3 = Vec::new();
    for rv in gd.coinvariants.basis_vectors() {
        let (lr, rr) = (k.alg.left_mult_by(rv), k.alg.right_mult_by(rv));
        let a = rr.kron(&id).kron(&id).sub(&id.kron(&lr).kron(&id));
        let b = id.kron(&rr).kron(&id).sub(&id.kron(&id).kron(&lr));
        rel3.extend((0..d * d * d).flat_map(|c| [a.column(c), b.column(c)]));
    }
    let (proj3, _) = Subspace::from_vectors(f, d * d * d, rel3).quotient_maps();
    for t in 0..m {
        let mut lhs = vec![f.zero(); d * d * d];
        for (c, v) in tau[t].iter().enumerate() {
            for (y, u) in one.iter().enumerate() {
                lhs[((c / d) * d + y) * d + c % d].add_product(v, u);
            }
        }
        let mut rhs = vec![f.zero(); d * d * d];
        for (p, q, coef) in h.comult().slab_nonzeros(t) {
            for (i, a) in tau[p].iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (j, b) in tau[q].iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                    let c = &(coef * a) * b;
                    for (y, py) in k.alg.basis_product(i % d, j / d).iter().enumerate() {
                        if !py.is_zero() {
                            rhs[((i / d) * d + y) * d + j % d].add_product(&c, py);
                        }
                    }
                }
            }
        }
        r.expect(proj3.apply(&lhs) == proj3.apply(&rhs), || format!("(g4) fails at {t}"));
    }
    let sinv = h.antipode_inv();
    for x in 0..d {
        let kx = unit_vector(f, d, x);
        let mut g5 = vec![f.zero(); d * d];
        let mut g6 = vec![f.zero(); d * d];
        for t in 0..m {
            let coef = lam[t].column(x);
            for (x0, c) in coef.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let a = id.kron(&k.alg.right_mult(x0)).apply(&tau[t]);
                let b = k.alg.left_mult(x0).kron(&id).apply(&tau_of(&sinv.column(t)));
                for (i, (ai, bi)) in a.iter().zip(&b).enumerate() {
                    g5[i].add_product(c, ai);
                    g6[i].add_product(c, bi);
                }
            }
        }
        let k_one: Vec<Scalar> = (0..d * d).map(|i| &kx[i / d] * &one[i % d]).collect();
        let one_k: Vec<Scalar> = (0..d * d).map(|i| &one[i / d] * &kx[i % d]).collect();
        r.expect(same(&g5, &k_one), || format!("(g5) fails at {x}"));
        r.expect(same(&g6, &one_k), || format!("(g6) fails at {x}"));
    }
    // (g7) in H' ⊗ (K ⊗_R K), compared leg by leg.
    let dd = gd.proj.rows();
    for t in 0..m {
        let mut lhs = vec![f.zero(); m * dd];
        for (p, q, coef) in h.comult().slab_nonzeros(t) {
            for (i, v) in gd.proj.apply(&tau[p]).iter().enumerate() {
                lhs[q * dd + i].add_product(coef, v);
            }
        }
        let mut rep = vec![f.zero(); m * d * d];
        for (i, a) in tau[t].iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            let (x, y) = (i / d, i % d);
            for s in 0..m {
                for (y0, c) in lam[s].column(y).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let ac = a * c;
                    for (u, sv) in sinv.column(s).iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        rep[u * d * d + x * d + y0].add_product(&ac, sv);
                    }
                }
            }
        }
        let rhs: Vec<Scalar> = (0..m).flat_map(|u| gd.proj.apply(&rep[u * d * d..(u + 1) * d * d])).collect();
        r.expect(lhs == rhs, || format!("(g7) fails at {t}"));
    }
    r
}

/// `(t·T) = Σ t^{[1]} T t^{[2]}` on vectorized `End(W)`.
fn end_action(gd: &GaloisData, w: &ModuleRep, t: &[Scalar]) -> Matrix {
    let f = w.field();
    let d = gd.k.dim();
    let dw = w.dim();
    let mut out = Matrix::zeros(f, dw * dw, dw * dw);
    for (i, c) in gd.translation(t).expect("galois").iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let a = w.act(&unit_vector(f, d, i / d));
        let b = w.act(&unit_vector(f, d, i % d));
        out.add_scaled(c, &a.kron(&b.transpose()));
    }
    out
}

/// `End_R(W)` as an `H'`-module with invariants `End_K(W)`, and
/// `St_K(W) = Hom_{H'}(H, End_R(W))` through `φ` and `ψ`.
pub fn galois_check(gd: &GaloisData, w: &ModuleRep) -> Result<Report> {
    let mut r = Report::new("galois-stabilizer", "St_K(W) ≅ Hom_{H'}(H, End_R(W)) for a Hopf-Galois extension");
    let (rank, size) = (gd.beta.rank(), gd.inclusion.sub.dim() * gd.k.dim());
    r.fact("beta_rank", rank);
    r.fact("beta_target_dim", size);
    r.fact("beta_source_dim", gd.beta.cols());
    if !gd.is_galois() {
        r.fail(format!("not Galois: the canonical map has rank {rank}, deficit {}", size.max(gd.beta.cols()) - rank));
        return Ok(r);
    }
    r.absorb(&gd.inclusion.check());
    r.absorb(&galois_relations(gd));
    let k = &gd.k;
    let f = k.field();
    let big = &gd.inclusion.big;
    let sub = &gd.inclusion.sub;
    let (n, m, dw) = (big.dim(), sub.dim(), w.dim());
    let e2 = dw * dw;
    let rho_r: Vec<Matrix> = gd.coinvariants.basis_vectors().map(|v| w.act(v)).collect();
    let end_r = commutant(f, dw, &rho_r);
    let end_k = commutant(f, dw, w.action());
    let act: Vec<Matrix> = (0..m).map(|t| end_action(gd, w, &unit_vector(f, m, t))).collect();
    // The action on End_R(W): stability, module axiom, invariants.
    let basis = operators(&end_r, dw);
    'stable: for (t, a) in act.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            if !r.expect(end_r.contains(&a.apply(b.data())), || format!("t_{t}·T_{i} leaves End_R(W)")) {
                break 'stable;
            }
        }
    }
    'axiom: for t in 0..m {
        for s in 0..m {
            let ts = end_action(gd, w, sub.alg().basis_product(t, s));
            for (i, b) in basis.iter().enumerate() {
                let lhs = ts.apply(b.data());
                if !r.expect(lhs == act[t].apply(&act[s].apply(b.data())), || format!("not an action at ({t},{s}) on T_{i}")) {
                    break 'axiom;
                }
            }
        }
    }
    let blocks: Vec<Matrix> = act
        .iter()
        .zip(sub.counit())
        .map(|(a, e)| a.sub(&Matrix::identity(f, e2).scale(e)))
        .collect();
    let invariants = Matrix::vstack(f, e2, &blocks).kernel().intersect(&end_r)?;
    r.fact("dim_end_r", end_r.dim());
    r.fact("dim_end_k", end_k.dim());
    r.expect(invariants == end_k, || "End_R(W)^{H'} ≠ End_K(W)".into());

    // Hom_{H'}(H, End_R(W)) inside Hom(H, End(W)), T at (h * dim W + w) * dim W + u.
    let amb = n * e2;
    let mut eqs = Vec::new();
    let not_r: Vec<Matrix> = rho_r
        .iter()
        .map(|a| a.kron(&Matrix::identity(f, dw)).sub(&Matrix::identity(f, dw).kron(&a.transpose())))
        .collect();
    for hh in 0..n {
        for op in &not_r {
            let mut block = Matrix::zeros(f, e2, amb);
            for i in 0..e2 {
                for j in 0..e2 {
                    block.set(i, hh * e2 + j, op.get(i, j).clone());
                }
            }
            eqs.push(block);
        }
        for t in 0..m {
            let moved = big.product(&gd.inclusion.map.column(t), &unit_vector(f, n, hh));
            let mut block = Matrix::zeros(f, e2, amb);
            for (c, coef) in moved.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for i in 0..e2 {
                    block.set(i, c * e2 + i, coef.clone());
                }
            }
            for i in 0..e2 {
                for j in 0..e2 {
                    block.entry_mut(i, hh * e2 + j).sub_product(&f.one(), act[t].get(i, j));
                }
            }
            eqs.push(block);
        }
    }
    let hom = Matrix::vstack(f, amb, &eqs).kernel();
    let st = stab_space(&gd.over_big()?, w, w)?;
    // φ(α ⊗ f)(h) = ⟨α, h⟩ f and ψ(T) = Σ_j β_j ⊗ T(x_j) for the dual bases.
    let phi = Matrix::from_fn(f, amb, amb, |row, col| {
        if row % e2 == col % e2 {
            HopfData::pair(&unit_vector(f, n, col / e2), &unit_vector(f, n, row / e2))
        } else {
            f.zero()
        }
    });
    let psi = Matrix::from_fn(f, amb, amb, |row, col| {
        if row % e2 == col % e2 {
            unit_vector(f, n, col / e2)[row / e2].clone()
        } else {
            f.zero()
        }
    });
    r.fact("dim_st", st.dim());
    r.fact("dim_hom", hom.dim());
    r.expect(st.space.image_under(&phi) == hom, || "φ(St_K(W)) ≠ Hom_{H'}(H, End_R(W))".into());
    r.expect(hom.image_under(&psi) == st.space, || "ψ(Hom_{H'}(H, End_R(W))) ≠ St_K(W)".into());
    for (i, x) in st.space.basis_vectors().enumerate() {
        r.expect(psi.apply(&phi.apply(x)) == x, || format!("ψφ moves basis element {i}"));
    }
    for (i, x) in hom.basis_vectors().enumerate() {
        r.expect(phi.apply(&psi.apply(x)) == x, || format!("φψ moves basis element {i}"));
    }
    // Convolution (TU)(h) = T(h₁) U(h₂) with unit ε.
    let conv = |t: &[Scalar], u: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![f.zero(); amb];
        for hh in 0..n {
            for (p, q, c) in big.comult().slab_nonzeros(hh) {
                let tp = Matrix::from_vec(f, dw, dw, t[p * e2..(p + 1) * e2].to_vec()).expect("square");
                let uq = Matrix::from_vec(f, dw, dw, u[q * e2..(q + 1) * e2].to_vec()).expect("square");
                for (i, v) in (&tp * &uq).data().iter().enumerate() {
                    out[hh * e2 + i].add_product(c, v);
                }
            }
        }
        out
    };
    let unit: Vec<Scalar> = (0..amb)
        .map(|i| if (i % e2) / dw == i % dw { big.counit()[i / e2].clone() } else { f.zero() })
        .collect();
    r.expect(phi.apply(&st.ambient_unit()) == unit, || "φ is not unital".into());
    let sb: Vec<&[Scalar]> = st.space.basis_vectors().collect();
    'mult: for (i, x) in sb.iter().enumerate() {
        for (j, y) in sb.iter().enumerate() {
            let lhs = phi.apply(&st.ambient_product(x, y));
            if !r.expect(lhs == conv(&phi.apply(x), &phi.apply(y)), || format!("φ not multiplicative at ({i},{j})")) {
                break 'mult;
            }
        }
    }
    // (h·T)(x) = T(x h) against h ⇀ on the H* leg.
    let hit = crate::hopf::harpoon(big, HarpoonKind::HitLeft, HarpoonSide::OnDual).matrices;
    'colin: for hh in 0..n {
        let shift = Matrix::from_fn(f, amb, amb, |row, col| {
            if row % e2 == col % e2 {
                big.mult().get(row / e2, hh, col / e2).clone()
            } else {
                f.zero()
            }
        });
        let on_st = hit[hh].kron(&Matrix::identity(f, e2));
        for (i, x) in sb.iter().enumerate() {
            let lhs = phi.apply(&on_st.apply(x));
            if !r.expect(lhs == shift.apply(&phi.apply(x)), || format!("φ not H-linear at ({hh},{i})")) {
                break 'colin;
            }
        }
    }
    Ok(r)
}

/// `K = F S₃` graded by the sign over `H' = F{e, (0 1)} ⊆ H = F S₃`: `λ(g) = s(g) ⊗ g`
/// with `s(g) = e` for even and `(0 1)` for odd `g`. Then `R = F A₃`.
pub fn sign_graded_extension() -> (HopfInclusion, ComodAlg) {
    let g = GroupTable::symmetric(3);
    // (0 1) is the permutation [1, 0, 2], index 2 in lexicographic order.
    let sub_elems = [0, 2];
    let big = group_algebra(&g);
    let sub = group_algebra(&g.subgroup(&sub_elems).expect("subgroup"));
    let f = big.field();
    let map = Matrix::from_fn(f, 6, 2, |x, t| if sub_elems[t] == x { f.one() } else { f.zero() });
    let inclusion = HopfInclusion::new(big.clone(), sub.clone(), map).expect("hopf subalgebra");
    let odd = [1, 2, 5];
    let coaction = Matrix::from_fn(f, 2 * 6, 6, |row, x| {
        let t = usize::from(odd.contains(&x));
        if row == t * 6 + x {
            f.one()
        } else {
            f.zero()
        }
    });
    let k = ComodAlg::checked(sub, big.alg().clone(), ComoduleStr::new(Side::Left, 2, 6, coaction).expect("shape"))
        .expect("graded group algebra");
    (inclusion, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcom::ModuleRep;
    use crate::zoo::{self, standard_rep};

    #[test]
    fn regular_extension_of_s3() {
        let h = group_algebra(&GroupTable::symmetric(3));
        let gd = galois_build(&HopfInclusion::identity(&h), &ComodAlg::regular(&h)).unwrap();
        assert!(gd.is_galois());
        assert_eq!(gd.coinvariants.dim(), 1);
        let r = galois_check(&gd, &standard_rep(3, h.field())).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_st"), Some("4"));
    }

    #[test]
    fn regular_extension_of_sweedler() {
        let h = zoo::sweedler();
        let gd = galois_build(&HopfInclusion::identity(&h), &ComodAlg::regular(&h)).unwrap();
        let f = h.field();
        let w = ModuleRep::character(f, Side::Left, h.counit());
        let r = galois_check(&gd, &w).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get_fact("dim_st"), Some("1"));
    }

    #[test]
    fn sign_grading_is_a_proper_extension() {
        let (inc, k) = sign_graded_extension();
        let gd = galois_build(&inc, &k).unwrap();
        assert!(gd.is_galois());
        // Even permutations: e, (012), (021).
        assert_eq!(gd.coinvariants, Subspace::coordinate(k.field(), 6, [0, 3, 4]));
        let r = galois_check(&gd, &standard_rep(3, k.field())).unwrap();
        assert!(r.passed(), "{r}");
        // H is free of rank 3 over H' and End_{F A₃}(W) is a quadratic field over Q.
        assert_eq!(r.get_fact("dim_end_r"), Some("2"));
        assert_eq!(r.get_fact("dim_st"), Some("6"));
    }

    #[test]
    fn ground_algebra_is_not_galois() {
        let h = group_algebra(&GroupTable::cyclic(2));
        let gd = galois_build(&HopfInclusion::identity(&h), &ComodAlg::ground(&h, Side::Left)).unwrap();
        assert!(!gd.is_galois());
        let f = h.field();
        let r = galois_check(&gd, &ModuleRep::new(f, 1, Side::Left, vec![Matrix::identity(f, 1)]).unwrap()).unwrap();
        assert!(!r.passed());
        assert_eq!(r.get_fact("beta_rank"), Some("1"));
    }
}
