//! The operad interface: arity-graded coefficient spaces, partial
//! compositions, and the unit, together with the [`Element`] type every
//! bracket and differential in the crate operates on.
//!
//! Four realizations are provided, all driving the same generic calculus:
//!
//! * [`Operad::Endo`] — multilinear maps on a `d`-dimensional based space;
//! * [`Operad::Dendriform`] — the colored operad on `C_n = {[1],…,[n]}`
//!   whose multiplications are dendriform structures;
//! * [`Operad::Hom`] — the `α`-twisted operad whose spaces are the
//!   `α`-equivariant subspaces and whose multiplications are
//!   Hom-associative products;
//! * [`Operad::Tree`] — `Q_n = Hom(k[Y_n], P_n)` over planar binary trees,
//!   with compositions through the leaf-restriction maps.
//!
//! An element stores only its arity and its coefficient vector in the
//! instance basis; each bracket applies its own degree convention on top.
//! Elements are immutable and all operations are pure.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::dendriform;
use crate::endo;
use crate::error::{Error, Result};
use crate::hom::HomOperad;
use crate::matrix::RatMatrix;
use crate::multimap::MultiMap;
use crate::rational::Rat;
use crate::tree::catalan;
use crate::treeop;

/// One concrete realization of the partial-composition interface.
#[derive(Debug, PartialEq)]
pub enum Operad {
    /// End_A for a `dim`-dimensional based space A.
    Endo { dim: usize },
    /// The colored dendriform operad over a `dim`-dimensional space.
    Dendriform { dim: usize },
    /// The `α`-twisted operad; spaces are kernel subspaces, see [`HomOperad`].
    Hom(HomOperad),
    /// The tree operad Q over an underlying instance.
    Tree(TreeOperad),
}

#[derive(Debug)]
pub struct TreeOperad {
    pub inner: Arc<Operad>,
    /// Precomputed restriction index pairs per `(m, i, n)`: entry `t` holds
    /// the `Y_m` and `Y_n` indices of the two restrictions of the `t`-th
    /// tree of `Y_{m+n−1}`. Compositions beyond the precomputed arities
    /// fall back to computing the restrictions on the fly.
    pub(crate) tables: alloc::collections::BTreeMap<(usize, usize, usize), Vec<(usize, usize)>>,
}

impl PartialEq for TreeOperad {
    fn eq(&self, other: &Self) -> bool {
        // The tables are derived data; identity is the underlying instance.
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Operad {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Operad::Endo { .. } => "endomorphism",
            Operad::Dendriform { .. } => "dendriform",
            Operad::Hom(_) => "hom",
            Operad::Tree(_) => "tree",
        }
    }

    /// Dimension of the arity-`n` coefficient space.
    pub fn dim(&self, arity: usize) -> Result<usize> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        match self {
            Operad::Endo { dim } => Ok(dim.pow(arity as u32 + 1)),
            Operad::Dendriform { dim } => Ok(arity * dim.pow(arity as u32 + 1)),
            Operad::Hom(h) => h.subspace_dim(arity),
            Operad::Tree(t) => Ok(catalan(arity) * t.inner.dim(arity)?),
        }
    }

    /// Coefficients of the identity element `𝟙 ∈ P_1`.
    pub fn unit_coeffs(&self) -> Vec<Rat> {
        match self {
            Operad::Endo { dim } => MultiMap::identity(*dim).flatten(),
            Operad::Dendriform { dim } => MultiMap::identity(*dim).flatten(),
            Operad::Hom(h) => h.unit_coords().to_vec(),
            Operad::Tree(t) => t.inner.unit_coeffs(),
        }
    }

    pub(crate) fn compose(
        &self,
        f: &[Rat],
        m: usize,
        i: usize,
        g: &[Rat],
        n: usize,
    ) -> Result<Vec<Rat>> {
        match self {
            Operad::Endo { dim } => Ok(endo::endo_compose(*dim, f, m, i, g, n)),
            Operad::Dendriform { dim } => Ok(dendriform::dendriform_compose(*dim, f, m, i, g, n)),
            Operad::Hom(h) => h.compose(f, m, i, g, n),
            Operad::Tree(t) => treeop::tree_compose(t, f, m, i, g, n),
        }
    }
}

/// Whether two handles denote the same instance: pointer identity first,
/// structural equality as a fallback.
pub fn same_instance(a: &Arc<Operad>, b: &Arc<Operad>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A homogeneous element of one operad instance: an arity `n ≥ 1` and a
/// coefficient vector in the instance basis of `P_n`.
#[derive(Debug, Clone)]
pub struct Element {
    op: Arc<Operad>,
    arity: usize,
    coeffs: Vec<Rat>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && same_instance(&self.op, &other.op)
            && self.coeffs == other.coeffs
    }
}

impl Element {
    pub fn new(op: &Arc<Operad>, arity: usize, coeffs: Vec<Rat>) -> Result<Self> {
        let expected = op.dim(arity)?;
        if coeffs.len() != expected {
            return Err(Error::BadCoefficientCount {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self {
            op: Arc::clone(op),
            arity,
            coeffs,
        })
    }

    pub fn zero(op: &Arc<Operad>, arity: usize) -> Result<Self> {
        let dim = op.dim(arity)?;
        Ok(Self {
            op: Arc::clone(op),
            arity,
            coeffs: vec![Rat::zero(); dim],
        })
    }

    /// The identity element `𝟙 ∈ P_1`.
    pub fn unit(op: &Arc<Operad>) -> Self {
        Self {
            op: Arc::clone(op),
            arity: 1,
            coeffs: op.unit_coeffs(),
        }
    }

    pub fn operad(&self) -> &Arc<Operad> {
        &self.op
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn same_instance(&self, other: &Element) -> bool {
        same_instance(&self.op, &other.op)
    }

    /// Coefficient vector as a one-column matrix, for coboundary assembly.
    pub fn as_column(&self) -> RatMatrix {
        RatMatrix::new(self.coeffs.len(), 1, self.coeffs.clone())
            .expect("column shape is consistent by construction")
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            op: Arc::clone(&self.op),
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            op: Arc::clone(&self.op),
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|v| -v).collect(),
        }
    }

    /// `self` negated when `negate` holds; used for `(−1)^k` prefactors.
    pub fn neg_if(self, negate: bool) -> Self {
        if negate {
            self.neg()
        } else {
            self
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        assert!(
            self.arity == other.arity && self.same_instance(other),
            "element addition requires equal arity and instance"
        );
        Self {
            op: Arc::clone(&self.op),
            arity: self.arity,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    /// Raw partial composition `self ∘_i g`; argument checks live in
    /// [`crate::ops::partial_compose`].
    pub(crate) fn compose_unchecked(&self, i: usize, g: &Element) -> Result<Element> {
        let coeffs = self
            .op
            .compose(&self.coeffs, self.arity, i, &g.coeffs, g.arity)?;
        Element::new(&self.op, self.arity + g.arity - 1, coeffs)
    }

    /// The basis element with a single unit coefficient at `index`.
    pub fn basis_element(op: &Arc<Operad>, arity: usize, index: usize) -> Result<Self> {
        let mut e = Self::zero(op, arity)?;
        if index >= e.coeffs.len() {
            return Err(Error::BadCoefficientCount {
                expected: e.coeffs.len(),
                got: index,
            });
        }
        e.coeffs[index] = Rat::one();
        Ok(e)
    }
}

impl core::ops::Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs)
    }
}

impl core::ops::Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs)
    }
}

impl core::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}
