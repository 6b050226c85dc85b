//! The generic calculus of a nonsymmetric operad with multiplication:
//! partial compositions, the contraction operator, the
//! Gerstenhaber–Voronov bracket, the differentials `δ_π`, `δ_{π;π^l,π^r}`,
//! `D`, `d_λ` and `D_φ`, and the cup structures.
//!
//! Everything here is parametric over the operad instance; nothing assumes
//! `End_A`. Degree conventions: the GV bracket grades an arity-`(m+1)`
//! element in degree `m`, while the cup bracket and everything derived
//! from it grade by arity.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::operad::Element;
use crate::rational::{parity, Rat};

/// `f ∘_i g` with full argument validation.
pub fn partial_compose(f: &Element, i: usize, g: &Element) -> Result<Element> {
    if !f.same_instance(g) {
        return Err(Error::InstanceMismatch);
    }
    if i < 1 || i > f.arity() {
        return Err(Error::IndexOutOfRange {
            index: i,
            arity: f.arity(),
        });
    }
    f.compose_unchecked(i, g)
}

/// The contraction operator `ι_g f = Σ_{i=1}^m (−1)^{(i−1)(n−1)} f ∘_i g`
/// (insert `g` into every slot of `f`, with alternating weights).
pub fn contraction(f: &Element, g: &Element) -> Result<Element> {
    if !f.same_instance(g) {
        return Err(Error::InstanceMismatch);
    }
    let (m, n) = (f.arity(), g.arity());
    let mut acc = Element::zero(f.operad(), m + n - 1)?;
    for i in 1..=m {
        let term = partial_compose(f, i, g)?;
        acc = acc.add(&term.neg_if(parity((i - 1) * (n - 1))));
    }
    Ok(acc)
}

/// Gerstenhaber–Voronov bracket `[f,g] = ι_f g − (−1)^{mn} ι_g f`, where
/// `f` has GV degree `m = arity − 1` and `g` has degree `n = arity − 1`.
pub fn gv_bracket(f: &Element, g: &Element) -> Result<Element> {
    let (m, n) = (f.arity() - 1, g.arity() - 1);
    let left = contraction(g, f)?;
    let right = contraction(f, g)?;
    Ok(left.sub(&right.neg_if(parity(m * n))))
}

/// Whether `π ∘_1 π = π ∘_2 π` holds exactly.
pub fn is_multiplication(pi: &Element) -> Result<bool> {
    if pi.arity() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: pi.arity(),
        });
    }
    let left = partial_compose(pi, 1, pi)?;
    let right = partial_compose(pi, 2, pi)?;
    Ok(left == right)
}

/// A validated multiplication: an arity-2 element with
/// `π ∘_1 π = π ∘_2 π`, equivalently a Maurer–Cartan element for the GV
/// bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct Multiplication {
    pi: Element,
}

impl Multiplication {
    pub fn new(pi: Element) -> Result<Self> {
        if is_multiplication(&pi)? {
            Ok(Self { pi })
        } else {
            Err(Error::NotAMultiplication)
        }
    }

    pub fn element(&self) -> &Element {
        &self.pi
    }
}

/// `δ_π f = −[π, f]_GV`, the coboundary of the multiplication.
pub fn delta_pi(pi: &Multiplication, f: &Element) -> Result<Element> {
    Ok(gv_bracket(&pi.pi, f)?.neg())
}

/// A pair `(π^l, π^r)` satisfying the representation identities of a
/// multiplication `π`:
/// `π^l∘_1π = π^l∘_2π^l`, `π^r∘_1π^l = π^l∘_2π^r`, `π^r∘_1π^r = π^r∘_2π`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pil: Element,
    pir: Element,
}

impl Representation {
    pub fn new(pi: &Multiplication, pil: Element, pir: Element) -> Result<Self> {
        if pil.arity() != 2 || pir.arity() != 2 {
            return Err(Error::WrongArity {
                expected: 2,
                got: if pil.arity() != 2 {
                    pil.arity()
                } else {
                    pir.arity()
                },
            });
        }
        let p = &pi.pi;
        let ok = partial_compose(&pil, 1, p)? == partial_compose(&pil, 2, &pil)?
            && partial_compose(&pir, 1, &pil)? == partial_compose(&pil, 2, &pir)?
            && partial_compose(&pir, 1, &pir)? == partial_compose(&pir, 2, p)?;
        if ok {
            Ok(Self { pil, pir })
        } else {
            Err(Error::InvalidRepresentation)
        }
    }

    /// The adjoint representation `(π, π)`.
    pub fn adjoint(pi: &Multiplication) -> Self {
        Self {
            pil: pi.pi.clone(),
            pir: pi.pi.clone(),
        }
    }

    /// The trivial representation `(0, 0)`.
    pub fn trivial(pi: &Multiplication) -> Self {
        let zero = Element::zero(pi.pi.operad(), 2).expect("arity 2 exists");
        Self {
            pil: zero.clone(),
            pir: zero,
        }
    }

    pub fn left(&self) -> &Element {
        &self.pil
    }

    pub fn right(&self) -> &Element {
        &self.pir
    }
}

/// Coboundary with coefficients in a representation:
/// `δ(f) = (−1)^{n+1} π^r∘_1 f + π^l∘_2 f + Σ_i (−1)^i f∘_i π`.
pub fn delta_rep(pi: &Multiplication, rep: &Representation, f: &Element) -> Result<Element> {
    let n = f.arity();
    let mut acc = partial_compose(&rep.pir, 1, f)?.neg_if(parity(n + 1));
    acc = acc.add(&partial_compose(&rep.pil, 2, f)?);
    for i in 1..=n {
        let term = partial_compose(f, i, &pi.pi)?;
        acc = acc.add(&term.neg_if(parity(i)));
    }
    Ok(acc)
}

/// Cup product `f ∪_π g = (π ∘_2 g) ∘_1 f`.
pub fn cup_product(pi: &Multiplication, f: &Element, g: &Element) -> Result<Element> {
    partial_compose(&partial_compose(&pi.pi, 2, g)?, 1, f)
}

/// Cup bracket `[f,g]_π = f∪g − (−1)^{mn} g∪f` with degrees `m, n` the
/// arities.
pub fn cup_bracket(pi: &Multiplication, f: &Element, g: &Element) -> Result<Element> {
    let left = cup_product(pi, f, g)?;
    let right = cup_product(pi, g, f)?;
    Ok(left.sub(&right.neg_if(parity(f.arity() * g.arity()))))
}

/// `θ(f) = −ι_f π = −π∘_1 f + (−1)^n π∘_2 f`.
pub fn theta(pi: &Multiplication, f: &Element) -> Result<Element> {
    Ok(contraction(&pi.pi, f)?.neg())
}

/// `d_λ(f) = −λ ι_π f`; at `λ = 1` this is the differential `D` of the
/// trivial-representation complex.
pub fn d_weighted(pi: &Multiplication, lambda: &Rat, f: &Element) -> Result<Element> {
    if lambda.is_zero() {
        return Element::zero(f.operad(), f.arity() + 1);
    }
    Ok(contraction(f, &pi.pi)?.scale(lambda).neg())
}

/// `D(f) = −ι_π f`.
pub fn d_trivial(pi: &Multiplication, f: &Element) -> Result<Element> {
    Ok(contraction(f, &pi.pi)?.neg())
}

/// The defect `φ∘_1π − (π∘_2φ)∘_1φ` of the multiplication-preserving
/// identity; zero exactly when `φ` preserves `π`.
pub fn preserving_defect(pi: &Multiplication, phi: &Element) -> Result<Element> {
    if phi.arity() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            got: phi.arity(),
        });
    }
    let lhs = partial_compose(phi, 1, &pi.pi)?;
    let rhs = partial_compose(&partial_compose(&pi.pi, 2, phi)?, 1, phi)?;
    Ok(lhs.sub(&rhs))
}

/// True when `φ ∘_1 π = (π ∘_2 φ) ∘_1 φ`. The Maurer–Cartan
/// characterization `D(φ) + ½[φ,φ]_π = 0` is computed as well and the two
/// routes are required to agree.
pub fn preserves_multiplication(pi: &Multiplication, phi: &Element) -> Result<bool> {
    let defect = preserving_defect(pi, phi)?;
    let mc = mc_defect_preserving(pi, phi)?;
    debug_assert_eq!(defect.is_zero(), mc.is_zero());
    Ok(defect.is_zero() && mc.is_zero())
}

/// `D(φ) + ½[φ,φ]_π`, the Maurer–Cartan expression for preserving maps.
pub fn mc_defect_preserving(pi: &Multiplication, phi: &Element) -> Result<Element> {
    if phi.arity() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            got: phi.arity(),
        });
    }
    let d = d_trivial(pi, phi)?;
    let half = Rat::new(1.into(), 2.into());
    Ok(d.add(&cup_bracket(pi, phi, phi)?.scale(&half)))
}

/// `D_φ(f) = D(f) + [φ, f]_π` for a map `φ` preserving `π`.
pub fn d_phi(pi: &Multiplication, phi: &Element, f: &Element) -> Result<Element> {
    if !preserves_multiplication(pi, phi)? {
        return Err(Error::NotPreserving);
    }
    Ok(d_trivial(pi, f)?.add(&cup_bracket(pi, phi, f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::{build_endomorphism_operad, multimap_from_element};
    use crate::multimap::AlgebraSpec;
    use crate::operad::Element;
    use crate::rational::rat;
    use alloc::vec;

    fn dual_numbers() -> AlgebraSpec {
        let mut s = AlgebraSpec::new(vec!["e".into(), "x".into()]).unwrap();
        s.add_product_term_by_label("e", "e", "e", rat(1)).unwrap();
        s.add_product_term_by_label("e", "x", "x", rat(1)).unwrap();
        s.add_product_term_by_label("x", "e", "x", rat(1)).unwrap();
        s
    }

    fn field() -> AlgebraSpec {
        let mut s = AlgebraSpec::new(vec!["e".into()]).unwrap();
        s.add_product_term_by_label("e", "e", "e", rat(1)).unwrap();
        s
    }

    #[test]
    fn unit_axioms() {
        let (op, pi) = build_endomorphism_operad(&dual_numbers());
        let unit = Element::unit(&op);
        assert_eq!(partial_compose(&pi, 1, &unit).unwrap(), pi);
        assert_eq!(partial_compose(&pi, 2, &unit).unwrap(), pi);
        assert_eq!(partial_compose(&unit, 1, &pi).unwrap(), pi);
        assert!(partial_compose(&pi, 3, &unit).is_err());
        assert!(partial_compose(&pi, 0, &unit).is_err());
    }

    #[test]
    fn instance_mismatch_is_rejected() {
        let (_, pi1) = build_endomorphism_operad(&dual_numbers());
        let (_, pi2) = build_endomorphism_operad(&field());
        assert_eq!(
            partial_compose(&pi1, 1, &pi2).unwrap_err(),
            Error::InstanceMismatch
        );
        // Two builds of the same algebra are the same instance structurally.
        let (_, pi3) = build_endomorphism_operad(&dual_numbers());
        assert!(partial_compose(&pi1, 1, &pi3).is_ok());
    }

    #[test]
    fn contraction_with_unit() {
        let (op, pi) = build_endomorphism_operad(&dual_numbers());
        let unit = Element::unit(&op);
        let f = partial_compose(&pi, 1, &pi).unwrap(); // arity 3
                                                       // ι_𝟙 f = 3f: inserted arity 1 kills all signs.
        assert_eq!(contraction(&f, &unit).unwrap(), f.scale(&rat(3)));
        // ι_π 𝟙 = 𝟙 ∘_1 π = π.
        assert_eq!(contraction(&unit, &pi).unwrap(), pi);
        // ι_𝟙 π = π∘_1𝟙 + π∘_2𝟙 = 2π.
        assert_eq!(contraction(&pi, &unit).unwrap(), pi.scale(&rat(2)));
    }

    #[test]
    fn multiplication_checks() {
        let (op, pi) = build_endomorphism_operad(&dual_numbers());
        assert!(is_multiplication(&pi).unwrap());
        assert!(is_multiplication(&Element::zero(&op, 2).unwrap()).unwrap());
        // [π,π]_GV = 2(π∘_1π − π∘_2π) = 0 for a multiplication.
        assert!(gv_bracket(&pi, &pi).unwrap().is_zero());
        assert!(is_multiplication(&Element::unit(&op)).is_err());
    }

    #[test]
    fn delta_pi_of_unit_is_pi() {
        // δ_π(𝟙) = −ι_π𝟙 + ι_𝟙π = −π + 2π = π, the Hochschild convention.
        let (op, pi_el) = build_endomorphism_operad(&dual_numbers());
        let pi = Multiplication::new(pi_el.clone()).unwrap();
        let unit = Element::unit(&op);
        assert_eq!(delta_pi(&pi, &unit).unwrap(), pi_el);
        // δ_π(π) = −[π,π]_GV = 0.
        assert!(delta_pi(&pi, &pi_el).unwrap().is_zero());
    }

    #[test]
    fn delta_pi_is_hochschild_on_field() {
        let (op, pi_el) = build_endomorphism_operad(&field());
        let pi = Multiplication::new(pi_el).unwrap();
        let f = Element::new(&op, 1, vec![rat(5)]).unwrap();
        let df = delta_pi(&pi, &f).unwrap();
        let mm = multimap_from_element(&df).unwrap();
        // a·f(b) − f(ab) + f(a)·b = (5 − 5 + 5)·e = 5e at (e,e).
        assert_eq!(*mm.get(0, &[0, 0]), rat(5));
    }

    #[test]
    fn trivial_representation_gives_d() {
        let (op, pi_el) = build_endomorphism_operad(&dual_numbers());
        let pi = Multiplication::new(pi_el).unwrap();
        let trivial = Representation::trivial(&pi);
        let adjoint = Representation::adjoint(&pi);
        let f = partial_compose(pi.element(), 2, pi.element()).unwrap();
        let _ = &op;
        assert_eq!(
            delta_rep(&pi, &trivial, &f).unwrap(),
            d_trivial(&pi, &f).unwrap()
        );
        assert_eq!(
            delta_rep(&pi, &adjoint, &f).unwrap(),
            delta_pi(&pi, &f).unwrap()
        );
    }

    #[test]
    fn representation_validation() {
        let (op, pi_el) = build_endomorphism_operad(&dual_numbers());
        let pi = Multiplication::new(pi_el.clone()).unwrap();
        assert!(Representation::new(&pi, pi_el.clone(), pi_el.clone()).is_ok());
        let zero = Element::zero(&op, 2).unwrap();
        assert!(Representation::new(&pi, zero.clone(), zero).is_ok());
        // (π, 0) is the left-regular module with trivial right action.
        assert!(Representation::new(&pi, pi_el.clone(), Element::zero(&op, 2).unwrap()).is_ok());
        // (2π, 2π) fails π^l∘_1π = π^l∘_2π^l (2 ≠ 4 on the scaling).
        let double = pi_el.scale(&rat(2));
        let bad = Representation::new(&pi, double.clone(), double);
        assert_eq!(bad.unwrap_err(), Error::InvalidRepresentation);
    }

    #[test]
    fn cup_structures() {
        let (op, pi_el) = build_endomorphism_operad(&field());
        let pi = Multiplication::new(pi_el.clone()).unwrap();
        let unit = Element::unit(&op);
        // 𝟙 ∪ 𝟙 = π; odd arity self-brackets double: [𝟙,𝟙]_π = 2π.
        assert_eq!(cup_product(&pi, &unit, &unit).unwrap(), pi_el);
        assert_eq!(
            cup_bracket(&pi, &unit, &unit).unwrap(),
            pi_el.scale(&rat(2))
        );
        // On the field, arity-1 f, g cup to (e,e) ↦ ab·e.
        let f = Element::new(&op, 1, vec![rat(3)]).unwrap();
        let g = Element::new(&op, 1, vec![rat(4)]).unwrap();
        let fg = cup_product(&pi, &f, &g).unwrap();
        assert_eq!(fg.coeffs()[0], rat(12));
        // Both arguments have odd degree, so the cup terms add:
        // [f,g]_π = f∪g + g∪f = 2ab·π.
        assert_eq!(cup_bracket(&pi, &f, &g).unwrap(), pi_el.scale(&rat(24)));
        let zero = Element::zero(&op, 2).unwrap();
        assert!(cup_product(&pi, &f, &zero).unwrap().is_zero());
    }

    #[test]
    fn theta_and_weighted_differential() {
        let (op, pi_el) = build_endomorphism_operad(&dual_numbers());
        let pi = Multiplication::new(pi_el.clone()).unwrap();
        let unit = Element::unit(&op);
        // θ(𝟙) = −π∘_1𝟙 − π∘_2𝟙 = −2π.
        assert_eq!(theta(&pi, &unit).unwrap(), pi_el.scale(&rat(-2)));
        assert!(theta(&pi, &Element::zero(&op, 2).unwrap())
            .unwrap()
            .is_zero());
        // d_λ(𝟙) = −λ(𝟙∘_1π) = −λπ.
        assert_eq!(
            d_weighted(&pi, &rat(3), &unit).unwrap(),
            pi_el.scale(&rat(-3))
        );
        assert!(d_weighted(&pi, &rat(0), &pi_el).unwrap().is_zero());
        // D(𝟙) = −π.
        assert_eq!(d_trivial(&pi, &unit).unwrap(), pi_el.neg());
    }

    #[test]
    fn preserving_maps() {
        let (op, pi_el) = build_endomorphism_operad(&dual_numbers());
        let pi = Multiplication::new(pi_el.clone()).unwrap();
        let unit = Element::unit(&op);
        assert!(preserves_multiplication(&pi, &unit).unwrap());
        let zero1 = Element::zero(&op, 1).unwrap();
        assert!(preserves_multiplication(&pi, &zero1).unwrap());
        // φ(e) = e, φ(x) = 0 is an algebra endomorphism of the dual numbers.
        let phi = Element::new(&op, 1, vec![rat(1), rat(0), rat(0), rat(0)]).unwrap();
        assert!(preserves_multiplication(&pi, &phi).unwrap());
        // φ(e) = x, φ(x) = 0 is not: φ(e·e) = x ≠ 0 = φ(e)·φ(e).
        let bad = Element::new(&op, 1, vec![rat(0), rat(0), rat(1), rat(0)]).unwrap();
        assert!(!preserves_multiplication(&pi, &bad).unwrap());
        assert_eq!(d_phi(&pi, &bad, &unit).unwrap_err(), Error::NotPreserving);
        // D_0 = D; D_𝟙 = δ_π, so D_𝟙(𝟙) = D(𝟙) + [𝟙,𝟙]_π = −π + 2π = π.
        assert_eq!(
            d_phi(&pi, &zero1, &unit).unwrap(),
            d_trivial(&pi, &unit).unwrap()
        );
        assert_eq!(d_phi(&pi, &unit, &unit).unwrap(), pi_el);
        assert_eq!(
            d_phi(&pi, &unit, &unit).unwrap(),
            crate::ops::delta_pi(&pi, &unit).unwrap()
        );
    }
}
