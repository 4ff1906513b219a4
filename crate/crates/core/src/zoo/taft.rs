//! Taft algebras `T_n(ζ)` and the Sweedler algebra `H₄ = T_2(−1)`.
//!
//! Basis `g^i x^j` at index `i * n + j`, with `g^n = 1`, `x^n = 0`,
//! `x g = ζ g x`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::hopf::tensor::{outer, unit_vector};
use crate::hopf::{AlgebraData, CoalgebraData, HopfData};

/// Taft algebra of dimension `n²` over `F_p` with `ζ` of exact order `n`.
pub fn taft(n: usize, p: u64, zeta: i64) -> Result<HopfData> {
    let field = Field::prime(p)?;
    taft_over(field, n, &field.from_i64(zeta))
}

/// The four-dimensional Sweedler algebra over the rationals.
pub fn sweedler() -> HopfData {
    let q = Field::Rationals;
    taft_over(q, 2, &q.from_i64(-1)).expect("sweedler algebra")
}

pub fn taft_over(field: Field, n: usize, zeta: &Scalar) -> Result<HopfData> {
    if n < 2 {
        return Err(Error::invalid("Taft algebras need n ≥ 2"));
    }
    let order = (1..=n).find(|&k| zeta.pow(k as u64).is_one());
    if order != Some(n) {
        return Err(Error::invalid(format!("{zeta} does not have multiplicative order {n}")));
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let alg = AlgebraData::from_products(field, dim, unit_vector(field, dim, 0), |x, y| {
        let (a, b) = (x / n, x % n);
        let (c, d) = (y / n, y % n);
        let mut v = vec![field.zero(); dim];
        if b + d < n {
            v[idx((a + c) % n, b + d)] = zeta.pow((b * c) as u64);
        }
        v
    })?;
    let prod2 = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim * dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let p = outer(alg.basis_product(i / dim, j / dim), alg.basis_product(i % dim, j % dim));
                for (o, v) in out.iter_mut().zip(p) {
                    if !v.is_zero() {
                        o.add_product(&c, &v);
                    }
                }
            }
        }
        out
    };
    let one = unit_vector(field, dim, 0);
    let g = unit_vector(field, dim, idx(1, 0));
    let x = unit_vector(field, dim, idx(0, 1));
    let delta_g = outer(&g, &g);
    let mut delta_x = outer(&x, &one);
    for (o, v) in delta_x.iter_mut().zip(outer(&g, &x)) {
        *o += &v;
    }
    let mut coproducts = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            let mut acc = outer(&one, &one);
            for _ in 0..i {
                acc = prod2(&acc, &delta_g);
            }
            for _ in 0..j {
                acc = prod2(&acc, &delta_x);
            }
            coproducts.push(acc);
        }
    }
    let counit: Vec<Scalar> = (0..dim).map(|k| if k % n == 0 { field.one() } else { field.zero() }).collect();
    let coalg = CoalgebraData::from_coproducts(field, dim, counit, |k| coproducts[k].clone())?;
    // S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^{n-1}, S(x) = -g^{n-1} x.
    let s_g = unit_vector(field, dim, idx(n - 1, 0));
    let s_x: Vec<Scalar> = unit_vector(field, dim, idx(n - 1, 1)).iter().map(|v| -v).collect();
    let mut columns = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            let mut acc = one.clone();
            for _ in 0..j {
                acc = alg.product(&acc, &s_x);
            }
            for _ in 0..i {
                acc = alg.product(&acc, &s_g);
            }
            columns.push(acc);
        }
    }
    let antipode = Matrix::from_columns(field, dim, &columns);
    let h = HopfData::new(alg, coalg, antipode)?;
    let report = h.check();
    if !report.passed() {
        return Err(Error::Axiom(report.witnesses.join("; ")));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_passes_and_has_antipode_of_order_four() {
        let h = sweedler();
        assert_eq!(h.dim(), 4);
        assert!(h.check().passed());
        let s = h.antipode();
        assert!(!s.pow(2).is_identity());
        assert!(s.pow(4).is_identity());
    }

    #[test]
    fn taft_nine_over_f7() {
        let h = taft(3, 7, 2).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(h.check().passed());
        assert!(!h.antipode().pow(2).is_identity());
        assert!(h.antipode().pow(12).is_identity());
    }

    #[test]
    fn bad_roots_rejected() {
        assert!(taft(3, 7, 1).is_err());
        // 6 has order 2 in F_7.
        assert!(taft(3, 7, 6).is_err());
    }
}
