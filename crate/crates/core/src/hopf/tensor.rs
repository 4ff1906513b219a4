use crate::error::{same_field, Error, Result};
use crate::exactlin::{Field, Scalar};

/// Dense rank-3 tensor; entry `(i, j, k)` lives at `(i * s1 + j) * s2 + k`, so
/// the slice over the last index is contiguous.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    shape: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, shape: [usize; 3]) -> Tensor3 {
        Tensor3 { field, shape, data: vec![field.zero(); shape[0] * shape[1] * shape[2]] }
    }

    pub fn from_fn(field: Field, shape: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Tensor3 {
        let mut data = Vec::with_capacity(shape[0] * shape[1] * shape[2]);
        for i in 0..shape[0] {
            for j in 0..shape[1] {
                for k in 0..shape[2] {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { field, shape, data }
    }

    pub fn from_vec(field: Field, shape: [usize; 3], data: Vec<Scalar>) -> Result<Tensor3> {
        if data.len() != shape[0] * shape[1] * shape[2] {
            return Err(Error::shape(format!("{} entries for tensor of shape {shape:?}", data.len())));
        }
        for s in &data {
            same_field(field, s.field())?;
        }
        Ok(Tensor3 { field, shape, data })
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn shape(&self) -> [usize; 3] {
        self.shape
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.shape[1] + j) * self.shape[2] + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    #[inline]
    pub fn entry_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        let o = self.offset(i, j, k);
        &mut self.data[o]
    }

    /// The vector `t[i][j][·]`.
    #[inline]
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j, 0);
        &self.data[o..o + self.shape[2]]
    }

    /// The block `t[i][·][·]`, row-major.
    #[inline]
    pub fn slab(&self, i: usize) -> &[Scalar] {
        let n = self.shape[1] * self.shape[2];
        &self.data[i * n..(i + 1) * n]
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    /// Nonzero entries of `t[i][·][·]` as `(j, k, value)`.
    pub fn slab_nonzeros(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let s2 = self.shape[2];
        self.slab(i)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| (o / s2, o % s2, v))
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let [_, s1, s2] = self.shape;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| (o / (s1 * s2), (o / s2) % s1, o % s2, v))
    }

    /// Permutes the indices; `perm[x]` names the input axis that becomes output axis `x`.
    pub fn permuted(&self, perm: [usize; 3]) -> Tensor3 {
        let shape = [self.shape[perm[0]], self.shape[perm[1]], self.shape[perm[2]]];
        Tensor3::from_fn(self.field, shape, |a, b, c| {
            let mut idx = [0; 3];
            idx[perm[0]] = a;
            idx[perm[1]] = b;
            idx[perm[2]] = c;
            self.get(idx[0], idx[1], idx[2]).clone()
        })
    }
}

/// `v ⊗ w` flattened row-major.
pub fn outer(v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(v.len() * w.len());
    for a in v {
        for b in w {
            out.push(a * b);
        }
    }
    out
}

/// `acc += c · v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            a.add_product(c, b);
        }
    }
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Standard pairing `Σ a_i b_i`.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = a.first().map(|x| x.field().zero()).unwrap_or_else(|| Field::Rationals.zero());
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s.add_product(x, y);
        }
    }
    s
}

/// Index of the first nonzero entry, for witness reporting.
pub fn first_nonzero(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_swaps_axes() {
        let q = Field::Rationals;
        let t = Tensor3::from_fn(q, [2, 3, 4], |i, j, k| q.from_i64((100 * i + 10 * j + k) as i64));
        let p = t.permuted([1, 0, 2]);
        assert_eq!(p.shape(), [3, 2, 4]);
        assert_eq!(p.get(2, 1, 3), t.get(1, 2, 3));
        assert_eq!(p.permuted([1, 0, 2]), t);
        let nz: Vec<_> = t.nonzeros().filter(|&(i, j, k, _)| (i, j, k) == (1, 2, 3)).collect();
        assert_eq!(nz.len(), 1);
        assert_eq!(nz[0].3, t.get(1, 2, 3));
    }
}
