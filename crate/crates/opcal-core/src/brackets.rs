//! The semidirect-product bracket, the Frölicher–Nijenhuis bracket and the
//! derived bracket, with the embeddings and chain maps that tie them to
//! the Gerstenhaber–Voronov algebra.
//!
//! Both brackets are computed from their definitional sums; the
//! cancellation forms (`[f, δ_πg]_GV + (−1)^m δ_π(ι_fg)` and the
//! `θ`-homomorphism identity) are exercised as test oracles, not used as
//! implementations.

use crate::error::{Error, Result};
use crate::operad::Element;
use crate::ops::{contraction, cup_bracket, delta_pi, gv_bracket, theta, Multiplication};
use crate::rational::parity;

/// An element of the semidirect product `P_{•+1} ⊕ P_•`: an `upper` part of
/// arity `m+1` and a `lower` part of arity `m`, both of degree `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SemidirectPair {
    upper: Element,
    lower: Element,
}

impl SemidirectPair {
    pub fn new(upper: Element, lower: Element) -> Result<Self> {
        if upper.arity() != lower.arity() + 1 {
            return Err(Error::WrongArity {
                expected: lower.arity() + 1,
                got: upper.arity(),
            });
        }
        if !upper.same_instance(&lower) {
            return Err(Error::InstanceMismatch);
        }
        Ok(Self { upper, lower })
    }

    pub fn degree(&self) -> usize {
        self.lower.arity()
    }

    pub fn upper(&self) -> &Element {
        &self.upper
    }

    pub fn lower(&self) -> &Element {
        &self.lower
    }
}

/// `[(f,φ),(g,ψ)]_⋉ = ([f,g]_GV, [φ,ψ]_π + ι_fψ − (−1)^{mn} ι_gφ)`.
pub fn semidirect_bracket(
    pi: &Multiplication,
    a: &SemidirectPair,
    b: &SemidirectPair,
) -> Result<SemidirectPair> {
    if !a.upper.same_instance(&b.upper) {
        return Err(Error::InstanceMismatch);
    }
    let (m, n) = (a.degree(), b.degree());
    let upper = gv_bracket(&a.upper, &b.upper)?;
    let mut lower = cup_bracket(pi, &a.lower, &b.lower)?;
    lower = lower.add(&contraction(&b.lower, &a.upper)?);
    lower = lower.sub(&contraction(&a.lower, &b.upper)?.neg_if(parity(m * n)));
    SemidirectPair::new(upper, lower)
}

/// Frölicher–Nijenhuis bracket
/// `[f,g]_FN = [f,g]_π + (−1)^m ι_{δ_πf} g − (−1)^{(m+1)n} ι_{δ_πg} f`.
pub fn fn_bracket(pi: &Multiplication, f: &Element, g: &Element) -> Result<Element> {
    if !f.same_instance(g) {
        return Err(Error::InstanceMismatch);
    }
    let (m, n) = (f.arity(), g.arity());
    let mut acc = cup_bracket(pi, f, g)?;
    acc = acc.add(&contraction(g, &delta_pi(pi, f)?)?.neg_if(parity(m)));
    acc = acc.sub(&contraction(f, &delta_pi(pi, g)?)?.neg_if(parity((m + 1) * n)));
    Ok(acc)
}

/// Derived bracket `[f,g]_D = [f,g]_π + ι_{θf} g − (−1)^{mn} ι_{θg} f`.
pub fn derived_bracket(pi: &Multiplication, f: &Element, g: &Element) -> Result<Element> {
    if !f.same_instance(g) {
        return Err(Error::InstanceMismatch);
    }
    let (m, n) = (f.arity(), g.arity());
    let mut acc = cup_bracket(pi, f, g)?;
    acc = acc.add(&contraction(g, &theta(pi, f)?)?);
    acc = acc.sub(&contraction(f, &theta(pi, g)?)?.neg_if(parity(m * n)));
    Ok(acc)
}

/// `Θ(f) = ((−1)^m δ_πf, f)`; a graded Lie algebra homomorphism from the
/// FN algebra into the semidirect product.
pub fn theta_embedding(pi: &Multiplication, f: &Element) -> Result<SemidirectPair> {
    let upper = delta_pi(pi, f)?.neg_if(parity(f.arity()));
    SemidirectPair::new(upper, f.clone())
}

/// `Φ(f) = (θf, f)`; a graded Lie algebra homomorphism from the derived
/// algebra into the semidirect product.
pub fn phi_embedding(pi: &Multiplication, f: &Element) -> Result<SemidirectPair> {
    SemidirectPair::new(theta(pi, f)?, f.clone())
}

/// `Ψ_n(f) = (−1)^{n+1} δ_π(f)`: intertwines `d_N` with `δ_{π_N}`.
pub fn psi_map(pi: &Multiplication, f: &Element) -> Result<Element> {
    Ok(delta_pi(pi, f)?.neg_if(parity(f.arity() + 1)))
}

/// `Υ_n(f) = (−1)^n θ(f)`: intertwines `d_R` with `δ_{π_R}` at weight 0.
pub fn upsilon_map(pi: &Multiplication, f: &Element) -> Result<Element> {
    Ok(theta(pi, f)?.neg_if(parity(f.arity())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::build_endomorphism_operad;
    use crate::multimap::AlgebraSpec;
    use crate::operad::Element;
    use crate::ops::partial_compose;
    use crate::rational::rat;
    use alloc::vec;

    fn dual_numbers() -> AlgebraSpec {
        let mut s = AlgebraSpec::new(vec!["e".into(), "x".into()]).unwrap();
        s.add_product_term_by_label("e", "e", "e", rat(1)).unwrap();
        s.add_product_term_by_label("e", "x", "x", rat(1)).unwrap();
        s.add_product_term_by_label("x", "e", "x", rat(1)).unwrap();
        s
    }

    fn setup() -> (alloc::sync::Arc<crate::operad::Operad>, Multiplication) {
        let (op, pi_el) = build_endomorphism_operad(&dual_numbers());
        let pi = Multiplication::new(pi_el).unwrap();
        (op, pi)
    }

    #[test]
    fn semidirect_subalgebra_and_ideal() {
        let (op, pi) = setup();
        let f = pi.element().clone();
        let g = partial_compose(&f, 1, &f).unwrap();
        let zero1 = Element::zero(&op, 1).unwrap();
        let zero2 = Element::zero(&op, 2).unwrap();
        // (f, 0) pairs close under the GV bracket.
        let a = SemidirectPair::new(f.clone(), zero1.clone()).unwrap();
        let b = SemidirectPair::new(g.clone(), zero2.clone()).unwrap();
        let ab = semidirect_bracket(&pi, &a, &b).unwrap();
        assert_eq!(ab.upper(), &gv_bracket(&f, &g).unwrap());
        assert!(ab.lower().is_zero());
        // (0, φ) pairs restrict to the cup bracket.
        let phi = Element::unit(&op);
        let psi = f.clone();
        let c = SemidirectPair::new(Element::zero(&op, 2).unwrap(), phi.clone()).unwrap();
        let d = SemidirectPair::new(Element::zero(&op, 3).unwrap(), psi.clone()).unwrap();
        let cd = semidirect_bracket(&pi, &c, &d).unwrap();
        assert!(cd.upper().is_zero());
        assert_eq!(cd.lower(), &cup_bracket(&pi, &phi, &psi).unwrap());
    }

    #[test]
    fn semidirect_pi_against_ideal_is_minus_d() {
        // [(π,0),(0,ψ)] = (0, ι_πψ) = (0, −D(ψ)).
        let (op, pi) = setup();
        let psi = Element::unit(&op);
        let a = SemidirectPair::new(pi.element().clone(), Element::zero(&op, 1).unwrap()).unwrap();
        let b = SemidirectPair::new(Element::zero(&op, 2).unwrap(), psi.clone()).unwrap();
        let ab = semidirect_bracket(&pi, &a, &b).unwrap();
        assert!(ab.upper().is_zero());
        assert_eq!(ab.lower(), &crate::ops::d_trivial(&pi, &psi).unwrap().neg());
    }

    #[test]
    fn unit_is_nijenhuis_and_rb_expansions() {
        let (op, pi) = setup();
        let unit = Element::unit(&op);
        assert!(fn_bracket(&pi, &unit, &unit).unwrap().is_zero());

        // [N,N]_FN = 2((π∘_2N)∘_1N − N∘_1(π∘_1N + π∘_2N − N∘_1π)).
        let n = Element::new(&op, 1, vec![rat(0), rat(2), rat(-1), rat(3)]).unwrap();
        let p = pi.element();
        let lhs = fn_bracket(&pi, &n, &n).unwrap();
        let inner = partial_compose(p, 1, &n)
            .unwrap()
            .add(&partial_compose(p, 2, &n).unwrap())
            .sub(&partial_compose(&n, 1, p).unwrap());
        let rhs = partial_compose(&partial_compose(p, 2, &n).unwrap(), 1, &n)
            .unwrap()
            .sub(&partial_compose(&n, 1, &inner).unwrap())
            .scale(&rat(2));
        assert_eq!(lhs, rhs);

        // [R,R]_D = 2((π∘_2R)∘_1R − R∘_1(π∘_1R + π∘_2R)).
        let r = n;
        let lhs = derived_bracket(&pi, &r, &r).unwrap();
        let sum = partial_compose(p, 1, &r)
            .unwrap()
            .add(&partial_compose(p, 2, &r).unwrap());
        let rhs = partial_compose(&partial_compose(p, 2, &r).unwrap(), 1, &r)
            .unwrap()
            .sub(&partial_compose(&r, 1, &sum).unwrap())
            .scale(&rat(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn known_operators_vanish() {
        let (op, pi) = setup();
        // N = diag(0,1) is Nijenhuis on the dual numbers.
        let n = Element::new(&op, 1, vec![rat(0), rat(0), rat(0), rat(1)]).unwrap();
        assert!(fn_bracket(&pi, &n, &n).unwrap().is_zero());
        // R(e) = x, R(x) = 0 is weight-0 Rota-Baxter.
        let r = Element::new(&op, 1, vec![rat(0), rat(0), rat(1), rat(0)]).unwrap();
        assert!(derived_bracket(&pi, &r, &r).unwrap().is_zero());
        let zero2 = Element::zero(&op, 2).unwrap();
        assert!(derived_bracket(&pi, &zero2, pi.element())
            .unwrap()
            .is_zero());
    }
}
