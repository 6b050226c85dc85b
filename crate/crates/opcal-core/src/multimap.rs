//! Multilinear maps on a based space, stored as dense coefficient tensors,
//! and the sparse structure-constant tables they are built from.
//!
//! The linearization order is fixed once and used identically everywhere in
//! the crate (so that coboundary matrices of different modules agree
//! bit-for-bit): a map `f : A^⊗n → A` of arity `n` on a `d`-dimensional
//! space stores coefficient `f[j; i_1, …, i_n]` at flat position
//! `j·d^n + Σ_k i_k·d^(n−k)` — output index most significant, then inputs
//! left to right.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Dense arity-`n` multilinear map on a `d`-dimensional based space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMap {
    arity: usize,
    dim: usize,
    coeffs: Vec<Rat>,
}

impl MultiMap {
    pub fn new(arity: usize, dim: usize, coeffs: Vec<Rat>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let expected = dim.pow(arity as u32 + 1);
        if coeffs.len() != expected {
            return Err(Error::BadCoefficientCount {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self { arity, dim, coeffs })
    }

    pub fn zero(arity: usize, dim: usize) -> Self {
        Self {
            arity,
            dim,
            coeffs: vec![Rat::zero(); dim.pow(arity as u32 + 1)],
        }
    }

    /// The identity map of arity 1.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(1, dim);
        for j in 0..dim {
            m.coeffs[j * dim + j] = Rat::one();
        }
        m
    }

    /// Arity-1 map from a `d × d` matrix acting on coordinate columns:
    /// entry `(i, j)` is the `i`-th coordinate of the image of basis
    /// element `j`.
    pub fn from_matrix(dim: usize, rows: &[Vec<Rat>]) -> Result<Self> {
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadCoefficientCount {
                expected: dim * dim,
                got: rows.iter().map(Vec::len).sum(),
            });
        }
        let mut m = Self::zero(1, dim);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.coeffs[i * dim + j] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Flat position of `f[out; inputs]`.
    pub fn index(&self, out: usize, inputs: &[usize]) -> usize {
        debug_assert_eq!(inputs.len(), self.arity);
        let mut idx = out;
        for &i in inputs {
            idx = idx * self.dim + i;
        }
        idx
    }

    pub fn get(&self, out: usize, inputs: &[usize]) -> &Rat {
        &self.coeffs[self.index(out, inputs)]
    }

    pub fn set(&mut self, out: usize, inputs: &[usize], value: Rat) {
        let idx = self.index(out, inputs);
        self.coeffs[idx] = value;
    }

    pub fn add_to(&mut self, out: usize, inputs: &[usize], value: &Rat) {
        if value.is_zero() {
            return;
        }
        let idx = self.index(out, inputs);
        self.coeffs[idx] += value;
    }

    /// Deterministic linearization of the coefficient tensor.
    pub fn flatten(&self) -> Vec<Rat> {
        self.coeffs.clone()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn unflatten(arity: usize, dim: usize, coeffs: Vec<Rat>) -> Result<Self> {
        Self::new(arity, dim, coeffs)
    }

    /// The value column at a basis multi-index: coordinates of
    /// `f(e_{i_1}, …, e_{i_n})`.
    pub fn evaluate(&self, inputs: &[usize]) -> Result<Vec<Rat>> {
        if inputs.len() != self.arity {
            return Err(Error::WrongArity {
                expected: self.arity,
                got: inputs.len(),
            });
        }
        if let Some(&bad) = inputs.iter().find(|&&i| i >= self.dim) {
            return Err(Error::LeafOutOfRange {
                index: bad,
                max: self.dim - 1,
            });
        }
        Ok((0..self.dim).map(|j| self.get(j, inputs).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            arity: self.arity,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        Self {
            arity: self.arity,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        Self {
            arity: self.arity,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Iterates over all multi-indices of the given length with entries below
/// `dim`, in the flatten order (last position fastest).
pub fn multi_indices(len: usize, dim: usize) -> MultiIndices {
    MultiIndices {
        current: vec![0; len],
        dim,
        done: dim == 0 && len > 0,
        fresh: true,
    }
}

pub struct MultiIndices {
    current: Vec<usize>,
    dim: usize,
    done: bool,
    fresh: bool,
}

impl Iterator for MultiIndices {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current.clone());
        }
        for pos in (0..self.current.len()).rev() {
            self.current[pos] += 1;
            if self.current[pos] < self.dim {
                return Some(self.current.clone());
            }
            self.current[pos] = 0;
        }
        self.done = true;
        None
    }
}

/// A finite-dimensional based algebra candidate: a dimension, distinct
/// basis labels, and a sparse table of structure constants for one
/// bilinear product. Nothing here requires the product to be associative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    dimension: usize,
    basis: Vec<String>,
    /// `structure[a][b]` lists `(c, coeff)` pairs of `e_a · e_b = Σ coeff·e_c`.
    structure: Vec<Vec<Vec<(usize, Rat)>>>,
}

impl AlgebraSpec {
    pub fn new(basis: Vec<String>) -> Result<Self> {
        let dimension = basis.len();
        if dimension == 0 {
            return Err(Error::MalformedSpec("empty basis".into()));
        }
        for (i, a) in basis.iter().enumerate() {
            if basis[..i].contains(a) {
                let mut msg = String::from("duplicate basis label ");
                msg.push_str(a);
                return Err(Error::MalformedSpec(msg));
            }
        }
        Ok(Self {
            dimension,
            basis,
            structure: vec![vec![Vec::new(); dimension]; dimension],
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.basis.iter().position(|b| b == label).ok_or_else(|| {
            let mut msg = String::from("unknown basis label ");
            msg.push_str(label);
            Error::MalformedSpec(msg)
        })
    }

    /// Adds `coeff·e_c` to the product `e_a · e_b`, all by index.
    pub fn add_product_term(&mut self, a: usize, b: usize, c: usize, coeff: Rat) -> Result<()> {
        let d = self.dimension;
        if a >= d || b >= d || c >= d {
            return Err(Error::MalformedSpec("basis index out of range".into()));
        }
        let cell = &mut self.structure[a][b];
        if let Some(entry) = cell.iter_mut().find(|(idx, _)| *idx == c) {
            entry.1 += coeff;
        } else {
            cell.push((c, coeff));
        }
        Ok(())
    }

    /// Adds a product term by labels: `l1 · l2 += coeff · l3`.
    pub fn add_product_term_by_label(
        &mut self,
        l1: &str,
        l2: &str,
        l3: &str,
        coeff: Rat,
    ) -> Result<()> {
        let (a, b, c) = (
            self.label_index(l1)?,
            self.label_index(l2)?,
            self.label_index(l3)?,
        );
        self.add_product_term(a, b, c, coeff)
    }

    /// Densifies the structure table into the arity-2 product map.
    pub fn product_map(&self) -> MultiMap {
        let mut pi = MultiMap::zero(2, self.dimension);
        for a in 0..self.dimension {
            for b in 0..self.dimension {
                for (c, coeff) in &self.structure[a][b] {
                    pi.add_to(*c, &[a, b], coeff);
                }
            }
        }
        pi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// Dual numbers `k[x]/(x²)`: e·e = e, e·x = x·e = x, x·x = 0.
    pub fn dual_numbers() -> AlgebraSpec {
        let mut spec = AlgebraSpec::new(vec!["e".into(), "x".into()]).unwrap();
        spec.add_product_term_by_label("e", "e", "e", rat(1))
            .unwrap();
        spec.add_product_term_by_label("e", "x", "x", rat(1))
            .unwrap();
        spec.add_product_term_by_label("x", "e", "x", rat(1))
            .unwrap();
        spec
    }

    #[test]
    fn flatten_order_matches_formula() {
        let m = MultiMap::identity(2);
        assert_eq!(m.flatten(), vec![rat(1), rat(0), rat(0), rat(1)]);
        let z = MultiMap::zero(2, 2);
        assert_eq!(z.flatten().len(), 8);
        assert!(z.flatten().iter().all(Rat::is_zero));
    }

    #[test]
    fn dual_number_product_has_three_ones() {
        let pi = dual_numbers().product_map();
        let ones = pi.flatten().iter().filter(|c| **c == rat(1)).count();
        let zeros = pi.flatten().iter().filter(|c| c.is_zero()).count();
        assert_eq!(ones, 3);
        assert_eq!(zeros, 5);
    }

    #[test]
    fn evaluate_reads_columns() {
        let id = MultiMap::identity(2);
        assert_eq!(id.evaluate(&[0]).unwrap(), vec![rat(1), rat(0)]);
        let pi = dual_numbers().product_map();
        // x·e = x
        assert_eq!(pi.evaluate(&[1, 0]).unwrap(), vec![rat(0), rat(1)]);
        assert!(pi.evaluate(&[2, 0]).is_err());
        assert!(pi.evaluate(&[0]).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(AlgebraSpec::new(vec![]).is_err());
        assert!(AlgebraSpec::new(vec!["e".into(), "e".into()]).is_err());
        let mut spec = AlgebraSpec::new(vec!["e".into()]).unwrap();
        assert!(spec.add_product_term(0, 0, 1, rat(1)).is_err());
        assert!(spec
            .add_product_term_by_label("e", "y", "e", rat(1))
            .is_err());
    }

    #[test]
    fn flatten_is_a_linear_bijection() {
        use crate::rational::ratio;
        let pi = dual_numbers().product_map();
        let id_like = {
            let mut m = MultiMap::zero(2, 2);
            m.set(0, &[0, 1], rat(3));
            m.set(1, &[1, 1], ratio(-1, 2));
            m
        };
        let (a, b) = (ratio(2, 3), rat(-5));
        let combo = pi.scale(&a).add(&id_like.scale(&b));
        let lhs = combo.flatten();
        let rhs: Vec<Rat> = pi
            .flatten()
            .iter()
            .zip(id_like.flatten())
            .map(|(p, q)| p * &a + q * &b)
            .collect();
        assert_eq!(lhs, rhs);
        assert_eq!(MultiMap::unflatten(2, 2, combo.flatten()).unwrap(), combo);
    }

    #[test]
    fn multi_index_iteration() {
        let all: Vec<_> = multi_indices(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(multi_indices(0, 3).count(), 1);
        assert_eq!(multi_indices(3, 2).count(), 8);
    }
}
