//! Univariate polynomials, used for minimal polynomials and idempotent splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactlin::{Field, Matrix, Scalar, SpanBuilder};

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn constant(field: Field, c: Scalar) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `x - a`.
    pub fn linear(field: Field, a: &Scalar) -> Poly {
        Poly::new(field, vec![-a, field.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero lead");
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            acc.add_scaled(c, &Matrix::identity(self.field, n));
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, Vec::new());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_product(a, b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &inv;
            for (j, b) in d.coeffs.iter().enumerate() {
                rem[k + j].sub_product(&c, b);
            }
            quo[k] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quo), Poly::new(self.field, rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Bezout coefficients `(s, t)` with `s·self + t·other = gcd(self, other)` (monic).
    pub fn bezout(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let zero = Poly::new(f, Vec::new());
        let one = Poly::constant(f, f.one());
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let inv = Poly::constant(f, r0.lead().expect("gcd of zero polynomials").inv().unwrap());
        (s0.mul(&inv), t0.mul(&inv), r0.mul(&inv))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Roots lying in the ground field, without multiplicity, in increasing order
    /// of their canonical representation. `None` means the search was not attempted
    /// because the coefficients are too large for the rational root test.
    pub fn roots(&self) -> Option<Vec<Scalar>> {
        if self.is_zero() {
            return None;
        }
        match self.field {
            Field::Prime(p) => {
                if p > 1_000_000 {
                    return None;
                }
                Some(
                    (0..p as i64)
                        .map(|a| self.field.from_i64(a))
                        .filter(|a| self.eval(a).is_zero())
                        .collect(),
                )
            }
            Field::Rationals => rational_roots(self),
        }
    }
}

/// Minimal polynomial of a square matrix, by linear dependence of its powers.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    let field = m.field();
    let n = m.rows();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(field, n)];
    let mut span = SpanBuilder::new(field, n * n);
    span.insert(powers[0].data().to_vec());
    loop {
        let next = &powers[powers.len() - 1] * m;
        if !span.insert(next.data().to_vec()) {
            let columns: Vec<Vec<Scalar>> = powers.iter().map(|p| p.data().to_vec()).collect();
            let a = Matrix::from_columns(field, n * n, &columns);
            let x = a.solve(next.data()).expect("shapes agree").expect("dependent power");
            let mut coeffs: Vec<Scalar> = x.iter().map(|c| -c).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        powers.push(next);
    }
}

const MAX_ROOT_CANDIDATE: u64 = 1_000_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > MAX_ROOT_CANDIDATE * MAX_ROOT_CANDIDATE {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > MAX_ROOT_CANDIDATE {
            return None;
        }
    }
    Some(out)
}

fn rational_roots(p: &Poly) -> Option<Vec<Scalar>> {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.as_rational().expect("rational coefficient").denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Field::Rationals.zero());
    }
    let a0 = &ints[low];
    let an = ints.last().unwrap();
    let nums = divisors(a0)?;
    let dens = divisors(an)?;
    for n in &nums {
        for d in &dens {
            for sign in [1, -1] {
                let r = BigRational::new(n * sign, d.clone());
                let s = Scalar::Rat(r);
                if p.eval(&s).is_zero() && !roots.contains(&s) {
                    roots.push(s);
                }
            }
        }
    }
    roots.sort_by(|a, b| a.as_rational().cmp(&b.as_rational()));
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: Field, c: &[i64]) -> Poly {
        Poly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let q = Field::Rationals;
        let m = Matrix::from_i64(q, 2, 2, &[1, 0, 0, 0]);
        assert_eq!(minimal_polynomial(&m), poly(q, &[0, -1, 1]));
        assert!(minimal_polynomial(&m).eval_matrix(&m).is_zero());
    }

    #[test]
    fn rational_roots_found() {
        let q = Field::Rationals;
        // (2x - 1)(x + 3)(x^2 + 1)
        let p = poly(q, &[-1, 2]).mul(&poly(q, &[3, 1])).mul(&poly(q, &[1, 0, 1]));
        let roots = p.roots().unwrap();
        assert_eq!(roots, vec![q.from_i64(-3), q.fraction(1, 2).unwrap()]);
    }

    #[test]
    fn bezout_identity() {
        let f = Field::Prime(7);
        let a = poly(f, &[1, 1]);
        let b = poly(f, &[2, 0, 1]);
        let (s, t, g) = a.bezout(&b);
        assert_eq!(s.mul(&a).sub(&t.mul(&b).mul(&poly(f, &[-1]))), g);
        assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn squarefree_detection() {
        let q = Field::Rationals;
        assert!(poly(q, &[-1, 0, 1]).is_squarefree());
        assert!(!poly(q, &[1, 2, 1]).is_squarefree());
    }
}
