//! Assembly of the induced cochain complexes into matrices over `ℚ` and
//! computation of cohomology dimensions.
//!
//! Every coboundary family in the crate fits the same mold: a degree-`n`
//! linear map `P_n → P_{n+1}` (or `Q_n → Q_{n+1}` for the averaging
//! complex). The matrix of that map in the flatten bases is assembled
//! column by column from basis cochains; consecutive matrices are checked
//! to compose to zero before any dimension is reported — a failure there
//! is an implementation bug, never user error.
//!
//! Dimensions follow rank–nullity: `dim H^1 = ker(M_1)` and
//! `dim H^n = ker(M_n) − rank(M_{n−1})`. Only dimensions are reported;
//! representatives would be basis-dependent.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::operad::{Element, Operad};
use crate::operators::{classify, OperatorKind};
use crate::ops::{
    d_phi, d_trivial, d_weighted, delta_pi, delta_rep, preserves_multiplication, Multiplication,
    Representation,
};
use crate::rational::Rat;
use crate::treeop::{build_tree_operad, constant_lift};
use crate::{brackets, treeop};

/// Which coboundary family the handle drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    /// `δ_π` on `P_•`.
    Hochschild,
    /// `δ_{π;π^l,π^r}` with coefficients in a representation.
    Representation,
    /// `D_φ` of a multiplication-preserving map.
    Preserving,
    /// `d_N = [N, −]_FN` of a Nijenhuis element.
    Nijenhuis,
    /// `d_R = −(d_λ + [R, −]_D)` of a Rota–Baxter element.
    RotaBaxter,
    /// `d_r = −⟦r̃, −⟧_D` of an averaging element, on tree cochains.
    Averaging,
    /// `D`, the trivial-representation coboundary.
    TrivialRep,
}

impl ComplexKind {
    pub fn name(&self) -> &'static str {
        match self {
            ComplexKind::Hochschild => "hochschild",
            ComplexKind::Representation => "representation",
            ComplexKind::Preserving => "preserving",
            ComplexKind::Nijenhuis => "nijenhuis",
            ComplexKind::RotaBaxter => "rota-baxter",
            ComplexKind::Averaging => "averaging",
            ComplexKind::TrivialRep => "trivial-rep",
        }
    }
}

/// Matrix of an arbitrary degree-raising operator `P_n → P_{n+k}` in the
/// flatten bases; shared by the chain-map commutation checks.
pub fn operator_matrix(
    space: &Arc<Operad>,
    n: usize,
    apply: impl Fn(&Element) -> Result<Element>,
) -> Result<RatMatrix> {
    let cols = space.dim(n)?;
    let mut columns = Vec::with_capacity(cols);
    let mut rows = 0;
    for c in 0..cols {
        let image = apply(&Element::basis_element(space, n, c)?)?;
        rows = image.coeffs().len();
        columns.push(image.into_coeffs());
    }
    RatMatrix::from_columns(rows, &columns)
}

/// A validated cochain complex: the coboundary family, its parameters,
/// and the degree range to assemble.
pub struct ComplexHandle {
    kind: ComplexKind,
    pi: Multiplication,
    rep: Option<Representation>,
    operator: Option<Element>,
    weight: Option<Rat>,
    degree_max: usize,
    space: Arc<Operad>,
}

impl ComplexHandle {
    pub fn hochschild(pi: Multiplication, degree_max: usize) -> Result<Self> {
        let space = pi.element().operad().clone();
        Self::build(
            ComplexKind::Hochschild,
            pi,
            None,
            None,
            None,
            degree_max,
            space,
        )
    }

    pub fn representation(
        pi: Multiplication,
        rep: Representation,
        degree_max: usize,
    ) -> Result<Self> {
        let space = pi.element().operad().clone();
        Self::build(
            ComplexKind::Representation,
            pi,
            Some(rep),
            None,
            None,
            degree_max,
            space,
        )
    }

    pub fn preserving(pi: Multiplication, phi: Element, degree_max: usize) -> Result<Self> {
        if !preserves_multiplication(&pi, &phi)? {
            return Err(Error::NotPreserving);
        }
        let space = pi.element().operad().clone();
        Self::build(
            ComplexKind::Preserving,
            pi,
            None,
            Some(phi),
            None,
            degree_max,
            space,
        )
    }

    pub fn nijenhuis(pi: Multiplication, n: Element, degree_max: usize) -> Result<Self> {
        if !classify(&pi, &n, OperatorKind::Nijenhuis, None)?.holds {
            return Err(Error::NotOperator { kind: "nijenhuis" });
        }
        let space = pi.element().operad().clone();
        Self::build(
            ComplexKind::Nijenhuis,
            pi,
            None,
            Some(n),
            None,
            degree_max,
            space,
        )
    }

    pub fn rota_baxter(
        pi: Multiplication,
        r: Element,
        weight: Rat,
        degree_max: usize,
    ) -> Result<Self> {
        if !classify(&pi, &r, OperatorKind::RotaBaxter, Some(&weight))?.holds {
            return Err(Error::NotOperator {
                kind: "rota-baxter",
            });
        }
        let space = pi.element().operad().clone();
        Self::build(
            ComplexKind::RotaBaxter,
            pi,
            None,
            Some(r),
            Some(weight),
            degree_max,
            space,
        )
    }

    pub fn averaging(pi: Multiplication, r: Element, degree_max: usize) -> Result<Self> {
        if !classify(&pi, &r, OperatorKind::Averaging, None)?.holds {
            return Err(Error::NotOperator { kind: "averaging" });
        }
        let space = build_tree_operad(pi.element().operad());
        Self::build(
            ComplexKind::Averaging,
            pi,
            None,
            Some(r),
            None,
            degree_max,
            space,
        )
    }

    pub fn trivial_rep(pi: Multiplication, degree_max: usize) -> Result<Self> {
        let space = pi.element().operad().clone();
        Self::build(
            ComplexKind::TrivialRep,
            pi,
            None,
            None,
            None,
            degree_max,
            space,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        kind: ComplexKind,
        pi: Multiplication,
        rep: Option<Representation>,
        operator: Option<Element>,
        weight: Option<Rat>,
        degree_max: usize,
        space: Arc<Operad>,
    ) -> Result<Self> {
        if degree_max < 2 {
            return Err(Error::DegreeOutOfRange {
                degree: degree_max,
                max: usize::MAX,
            });
        }
        Ok(Self {
            kind,
            pi,
            rep,
            operator,
            weight,
            degree_max,
            space,
        })
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn degree_max(&self) -> usize {
        self.degree_max
    }

    pub fn space(&self) -> &Arc<Operad> {
        &self.space
    }

    /// The degree-`n` coboundary applied to one cochain.
    pub fn apply(&self, f: &Element) -> Result<Element> {
        match self.kind {
            ComplexKind::Hochschild => delta_pi(&self.pi, f),
            ComplexKind::Representation => {
                delta_rep(&self.pi, self.rep.as_ref().expect("validated"), f)
            }
            ComplexKind::Preserving => {
                d_phi(&self.pi, self.operator.as_ref().expect("validated"), f)
            }
            ComplexKind::Nijenhuis => {
                brackets::fn_bracket(&self.pi, self.operator.as_ref().expect("validated"), f)
            }
            ComplexKind::RotaBaxter => {
                let lambda = self.weight.as_ref().expect("validated");
                let d = d_weighted(&self.pi, lambda, f)?;
                Ok(d.add(&brackets::derived_bracket(
                    &self.pi,
                    self.operator.as_ref().expect("validated"),
                    f,
                )?)
                .neg())
            }
            ComplexKind::Averaging => {
                let r = self.operator.as_ref().expect("validated");
                let lifted = constant_lift(&self.space, r)?;
                Ok(treeop::avg_derived_bracket(&self.pi, &lifted, f)?.neg())
            }
            ComplexKind::TrivialRep => d_trivial(&self.pi, f),
        }
    }

    /// Matrix of the degree-`n` coboundary in the flatten bases:
    /// `dim P_{n+1}` rows by `dim P_n` columns.
    pub fn coboundary_matrix(&self, n: usize) -> Result<RatMatrix> {
        if n < 1 || n > self.degree_max {
            return Err(Error::DegreeOutOfRange {
                degree: n,
                max: self.degree_max,
            });
        }
        let cols = self.space.dim(n)?;
        let rows = self.space.dim(n + 1)?;
        let mut columns = Vec::with_capacity(cols);
        for c in 0..cols {
            let basis = Element::basis_element(&self.space, n, c)?;
            columns.push(self.apply(&basis)?.into_coeffs());
        }
        RatMatrix::from_columns(rows, &columns)
    }

    /// Cohomology dimensions for degrees `1..=degree_max − 1`, asserting
    /// square-zero of every consecutive pair of matrices first.
    pub fn cohomology_dims(&self) -> Result<Vec<usize>> {
        let matrices: Vec<RatMatrix> = (1..=self.degree_max)
            .map(|n| self.coboundary_matrix(n))
            .collect::<Result<_>>()?;
        for pair in matrices.windows(2) {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(Error::ComplexBroken);
            }
        }
        let mut dims = Vec::with_capacity(self.degree_max - 1);
        for n in 1..self.degree_max {
            let kernel = matrices[n - 1].kernel_dim();
            let image = if n > 1 { matrices[n - 2].rank() } else { 0 };
            dims.push(kernel - image);
        }
        Ok(dims)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::build_endomorphism_operad;
    use crate::multimap::AlgebraSpec;
    use crate::rational::rat;
    use alloc::vec;

    fn field() -> AlgebraSpec {
        let mut s = AlgebraSpec::new(vec!["e".into()]).unwrap();
        s.add_product_term_by_label("e", "e", "e", rat(1)).unwrap();
        s
    }

    #[test]
    fn hochschild_on_the_field_vanishes() {
        let (_, pi_el) = build_endomorphism_operad(&field());
        let pi = Multiplication::new(pi_el).unwrap();
        let h = ComplexHandle::hochschild(pi, 4).unwrap();
        // Degree 1: the 1x1 matrix [1] (δf(e,e) = c·e for f(e) = c·e).
        let m1 = h.coboundary_matrix(1).unwrap();
        assert_eq!((m1.rows(), m1.cols()), (1, 1));
        assert_eq!(*m1.at(0, 0), rat(1));
        // Degree 2: the alternating sum cancels.
        let m2 = h.coboundary_matrix(2).unwrap();
        assert!(m2.is_zero());
        assert_eq!(h.cohomology_dims().unwrap(), vec![0, 0, 0]);
        assert!(h.coboundary_matrix(5).is_err());
        assert!(h.coboundary_matrix(0).is_err());
    }

    #[test]
    fn trivial_rep_complex_on_the_field() {
        let (op, pi_el) = build_endomorphism_operad(&field());
        let pi = Multiplication::new(pi_el.clone()).unwrap();
        let h = ComplexHandle::trivial_rep(pi.clone(), 4).unwrap();
        // D(𝟙) = −π: the degree-1 matrix sends the unit column to −π.
        let m1 = h.coboundary_matrix(1).unwrap();
        assert_eq!(*m1.at(0, 0), rat(-1));
        // Dims agree with the rank-nullity oracle on the same matrices.
        let dims = h.cohomology_dims().unwrap();
        let m: Vec<_> = (1..=4).map(|n| h.coboundary_matrix(n).unwrap()).collect();
        let expect: Vec<usize> = (1..4)
            .map(|n| m[n - 1].kernel_dim() - if n > 1 { m[n - 2].rank() } else { 0 })
            .collect();
        assert_eq!(dims, expect);
        let _ = op;
    }

    #[test]
    fn nijenhuis_complex_with_unit() {
        let (op, pi_el) = build_endomorphism_operad(&field());
        let pi = Multiplication::new(pi_el).unwrap();
        let h = ComplexHandle::nijenhuis(pi, Element::unit(&op), 4).unwrap();
        // Square-zero holds and dims are finite numbers.
        let dims = h.cohomology_dims().unwrap();
        assert_eq!(dims.len(), 3);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let (op, pi_el) = build_endomorphism_operad(&field());
        let pi = Multiplication::new(pi_el).unwrap();
        // 2𝟙 is Nijenhuis/averaging but does not preserve; reject the
        // kinds whose identities genuinely fail.
        let two = Element::unit(&op).scale(&rat(2));
        assert!(ComplexHandle::preserving(pi.clone(), two.clone(), 4).is_err());
        assert!(ComplexHandle::rota_baxter(pi.clone(), two, rat(0), 4).is_err());
        assert!(ComplexHandle::hochschild(pi, 1).is_err());
    }
}
