//! Classification of arity-1 elements against a multiplication, and the
//! structures they induce.
//!
//! Each operator kind is defined by an exact identity in the operad:
//!
//! * Nijenhuis: `(π∘_2N)∘_1N = N∘_1(π∘_1N + π∘_2N − N∘_1π)`;
//! * Rota–Baxter of weight `λ`: `(π∘_2R)∘_1R = R∘_1(π∘_1R + π∘_2R + λπ)`;
//! * averaging: `(π∘_2r)∘_1r = r∘_1(π∘_1r) = r∘_1(π∘_2r)`;
//! * multiplication preserving: `φ∘_1π = (π∘_2φ)∘_1φ`.
//!
//! [`classify`] reports the exact residual of the defining identity; it
//! validates and never mutates. The induced multiplications,
//! representations and towers are built by separate operations that
//! re-validate their input and assert the structure theorems they rely on.

use alloc::vec;
use alloc::vec::Vec;

use crate::brackets::{derived_bracket, fn_bracket};
use crate::error::{Error, Result};
use crate::operad::Element;
use crate::ops::{
    d_phi, d_weighted, delta_pi, is_multiplication, partial_compose, preserving_defect,
    Multiplication, Representation,
};
use crate::rational::{ratio, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Nijenhuis,
    RotaBaxter,
    Averaging,
    Preserving,
}

impl OperatorKind {
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::Nijenhuis => "nijenhuis",
            OperatorKind::RotaBaxter => "rota-baxter",
            OperatorKind::Averaging => "averaging",
            OperatorKind::Preserving => "preserving",
        }
    }
}

/// The outcome of [`classify`]: the exact residuals of the defining
/// identity (two of them for averaging, one otherwise) and whether they
/// all vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorVerdict {
    pub kind: OperatorKind,
    pub holds: bool,
    pub defects: Vec<Element>,
    pub weight: Option<Rat>,
}

fn require_arity_1(t: &Element) -> Result<()> {
    if t.arity() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            got: t.arity(),
        });
    }
    Ok(())
}

/// `(π∘_2T)∘_1T`, the left side shared by all three operator identities.
fn lhs_product(pi: &Multiplication, t: &Element) -> Result<Element> {
    partial_compose(&partial_compose(pi.element(), 2, t)?, 1, t)
}

/// Residual of the Nijenhuis identity.
pub fn nijenhuis_defect(pi: &Multiplication, n: &Element) -> Result<Element> {
    require_arity_1(n)?;
    let p = pi.element();
    let inner = partial_compose(p, 1, n)?
        .add(&partial_compose(p, 2, n)?)
        .sub(&partial_compose(n, 1, p)?);
    Ok(lhs_product(pi, n)?.sub(&partial_compose(n, 1, &inner)?))
}

/// Residual of the Rota–Baxter identity at weight `λ`.
pub fn rota_baxter_defect(pi: &Multiplication, r: &Element, lambda: &Rat) -> Result<Element> {
    require_arity_1(r)?;
    let p = pi.element();
    let inner = partial_compose(p, 1, r)?
        .add(&partial_compose(p, 2, r)?)
        .add(&p.scale(lambda));
    Ok(lhs_product(pi, r)?.sub(&partial_compose(r, 1, &inner)?))
}

/// Residuals of the two averaging equalities, in order
/// (`… = r∘_1(π∘_1r)`, `… = r∘_1(π∘_2r)`).
pub fn averaging_defects(pi: &Multiplication, r: &Element) -> Result<(Element, Element)> {
    require_arity_1(r)?;
    let p = pi.element();
    let lhs = lhs_product(pi, r)?;
    let first = lhs.sub(&partial_compose(r, 1, &partial_compose(p, 1, r)?)?);
    let second = lhs.sub(&partial_compose(r, 1, &partial_compose(p, 2, r)?)?);
    Ok((first, second))
}

/// Classifies `t` against the defining identity of `kind`. The weight is
/// required exactly for Rota–Baxter.
pub fn classify(
    pi: &Multiplication,
    t: &Element,
    kind: OperatorKind,
    weight: Option<&Rat>,
) -> Result<OperatorVerdict> {
    require_arity_1(t)?;
    if kind == OperatorKind::RotaBaxter && weight.is_none() {
        return Err(Error::MissingWeight);
    }
    if kind != OperatorKind::RotaBaxter && weight.is_some() {
        return Err(Error::MalformedSpec(
            "weight applies only to rota-baxter".into(),
        ));
    }
    let defects = match kind {
        OperatorKind::Nijenhuis => vec![nijenhuis_defect(pi, t)?],
        OperatorKind::RotaBaxter => vec![rota_baxter_defect(pi, t, weight.expect("checked"))?],
        OperatorKind::Averaging => {
            let (a, b) = averaging_defects(pi, t)?;
            vec![a, b]
        }
        OperatorKind::Preserving => vec![preserving_defect(pi, t)?],
    };
    Ok(OperatorVerdict {
        kind,
        holds: defects.iter().all(Element::is_zero),
        defects,
        weight: weight.cloned(),
    })
}

/// Maurer–Cartan expression for the kinds living on `P_•` itself:
/// `½[N,N]_FN`, `d_λ(R) + ½[R,R]_D`, or `D(φ) + ½[φ,φ]_π`. The averaging
/// expression lives on tree cochains, see [`crate::treeop::mc_defect_averaging`].
pub fn mc_defect(
    pi: &Multiplication,
    t: &Element,
    kind: OperatorKind,
    weight: Option<&Rat>,
) -> Result<Element> {
    require_arity_1(t)?;
    let half = ratio(1, 2);
    match kind {
        OperatorKind::Nijenhuis => Ok(fn_bracket(pi, t, t)?.scale(&half)),
        OperatorKind::RotaBaxter => {
            let lambda = weight.ok_or(Error::MissingWeight)?;
            let d = d_weighted(pi, lambda, t)?;
            Ok(d.add(&derived_bracket(pi, t, t)?.scale(&half)))
        }
        OperatorKind::Preserving => crate::ops::mc_defect_preserving(pi, t),
        OperatorKind::Averaging => Err(Error::MalformedSpec(
            "averaging Maurer-Cartan expression lives on tree cochains".into(),
        )),
    }
}

/// `−λ𝟙 − R`; Rota–Baxter of weight `λ` whenever `R` is.
pub fn rb_complement(r: &Element, lambda: &Rat) -> Result<Element> {
    require_arity_1(r)?;
    let unit = Element::unit(r.operad());
    Ok(unit.scale(&-lambda.clone()).sub(r))
}

/// `π_N = π∘_1N + π∘_2N − N∘_1π`, for a Nijenhuis element a multiplication
/// equal to `δ_π(N)`; `N` is then a map from `π_N` to `π`.
pub fn nijenhuis_deformation(pi: &Multiplication, n: &Element) -> Result<Element> {
    if !classify(pi, n, OperatorKind::Nijenhuis, None)?.holds {
        return Err(Error::NotOperator { kind: "nijenhuis" });
    }
    let p = pi.element();
    let pi_n = partial_compose(p, 1, n)?
        .add(&partial_compose(p, 2, n)?)
        .sub(&partial_compose(n, 1, p)?);
    if pi_n != delta_pi(pi, n)? {
        return Err(Error::TheoremViolated("pi_N = delta_pi(N)"));
    }
    if !is_multiplication(&pi_n)? {
        return Err(Error::TheoremViolated("pi_N is a multiplication"));
    }
    if partial_compose(n, 1, &pi_n)? != lhs_product(pi, n)? {
        return Err(Error::TheoremViolated("N maps pi_N to pi"));
    }
    Ok(pi_n)
}

/// The deformed multiplication attached to an arbitrary arity-1 element;
/// no Nijenhuis validation, used inside the tower checks.
fn deform(pi_el: &Element, n: &Element) -> Result<Element> {
    Ok(partial_compose(pi_el, 1, n)?
        .add(&partial_compose(pi_el, 2, n)?)
        .sub(&partial_compose(n, 1, pi_el)?))
}

/// The hierarchy `(N^k, π_{N^k})` for `k = 0..=kmax`, with `N^0 = 𝟙`.
///
/// Asserts the tower theorem along the way, for all `0 ≤ k, l ≤ kmax`:
/// every `N^k` is Nijenhuis for `π` and for every `π_{N^l}`, the
/// deformations compose as `(π_{N^l})_{N^k} = π_{N^{k+l}}`, pairwise sums
/// `N^k + N^l` stay Nijenhuis, and
/// `(π_{N^l}∘_2N^k)∘_1N^k = N^k∘_1π_{N^{k+l}}`.
pub fn nijenhuis_tower(
    pi: &Multiplication,
    n: &Element,
    kmax: usize,
) -> Result<Vec<(Element, Element)>> {
    if !classify(pi, n, OperatorKind::Nijenhuis, None)?.holds {
        return Err(Error::NotOperator { kind: "nijenhuis" });
    }
    let p = pi.element();
    let mut powers = vec![Element::unit(n.operad())];
    for k in 1..=2 * kmax {
        let prev = &powers[k - 1];
        powers.push(partial_compose(n, 1, prev)?);
    }
    let deformed: Vec<Element> = powers
        .iter()
        .map(|nk| deform(p, nk))
        .collect::<Result<_>>()?;

    for k in 0..=kmax {
        let nk = &powers[k];
        if !classify(pi, nk, OperatorKind::Nijenhuis, None)?.holds {
            return Err(Error::TheoremViolated("N^k is Nijenhuis for pi"));
        }
        for l in 0..=kmax {
            let pi_l = Multiplication::new(deformed[l].clone())
                .map_err(|_| Error::TheoremViolated("pi_{N^l} is a multiplication"))?;
            if !classify(&pi_l, nk, OperatorKind::Nijenhuis, None)?.holds {
                return Err(Error::TheoremViolated("N^k is Nijenhuis for pi_{N^l}"));
            }
            if deform(&deformed[l], nk)? != deformed[k + l] {
                return Err(Error::TheoremViolated("(pi_{N^l})_{N^k} = pi_{N^{k+l}}"));
            }
            let sum = nk.add(&powers[l]);
            if !classify(pi, &sum, OperatorKind::Nijenhuis, None)?.holds {
                return Err(Error::TheoremViolated("N^k + N^l is Nijenhuis for pi"));
            }
            let lhs = partial_compose(&partial_compose(&deformed[l], 2, nk)?, 1, nk)?;
            if lhs != partial_compose(nk, 1, &deformed[k + l])? {
                return Err(Error::TheoremViolated(
                    "(pi_{N^l} o_2 N^k) o_1 N^k = N^k o_1 pi_{N^{k+l}}",
                ));
            }
        }
    }
    Ok(powers.into_iter().zip(deformed).take(kmax + 1).collect())
}

/// `π_R = π∘_1R + π∘_2R + λπ` together with its representation
/// `(π^l, π^r) = (π∘_1R − R∘_1π, π∘_2R − R∘_1π)`; also asserts that `R` is
/// a map from `π_R` to `π`.
pub fn rb_deformations(
    pi: &Multiplication,
    r: &Element,
    lambda: &Rat,
) -> Result<(Multiplication, Representation)> {
    if !classify(pi, r, OperatorKind::RotaBaxter, Some(lambda))?.holds {
        return Err(Error::NotOperator {
            kind: "rota-baxter",
        });
    }
    let p = pi.element();
    let r1 = partial_compose(p, 1, r)?;
    let r2 = partial_compose(p, 2, r)?;
    let rp = partial_compose(r, 1, p)?;
    let pi_r_el = r1.add(&r2).add(&p.scale(lambda));
    let pi_r = Multiplication::new(pi_r_el)
        .map_err(|_| Error::TheoremViolated("pi_R is a multiplication"))?;
    let rep = Representation::new(&pi_r, r1.sub(&rp), r2.sub(&rp))
        .map_err(|_| Error::TheoremViolated("(pi^l, pi^r) represents pi_R"))?;
    if partial_compose(r, 1, pi_r.element())? != lhs_product(pi, r)? {
        return Err(Error::TheoremViolated("R maps pi_R to pi"));
    }
    Ok((pi_r, rep))
}

/// The split pair `π_r^⊣ = π∘_2r` and `π_r^⊢ = π∘_1r` of an averaging
/// element, both multiplications, with the three compatibilities of the
/// diassociative-style relations asserted.
pub fn averaging_deformations(
    pi: &Multiplication,
    r: &Element,
) -> Result<(Multiplication, Multiplication)> {
    if !classify(pi, r, OperatorKind::Averaging, None)?.holds {
        return Err(Error::NotOperator { kind: "averaging" });
    }
    let p = pi.element();
    let dashv = partial_compose(p, 2, r)?;
    let vdash = partial_compose(p, 1, r)?;
    let left = Multiplication::new(dashv.clone())
        .map_err(|_| Error::TheoremViolated("pi_r^dashv is a multiplication"))?;
    let right = Multiplication::new(vdash.clone())
        .map_err(|_| Error::TheoremViolated("pi_r^vdash is a multiplication"))?;
    let ok = partial_compose(&dashv, 2, &dashv)? == partial_compose(&dashv, 2, &vdash)?
        && partial_compose(&dashv, 1, &vdash)? == partial_compose(&vdash, 2, &dashv)?
        && partial_compose(&vdash, 1, &vdash)? == partial_compose(&vdash, 1, &dashv)?;
    if !ok {
        return Err(Error::TheoremViolated("averaging split compatibilities"));
    }
    Ok((left, right))
}

/// The coboundary attached to an operator: `d_N = [N, −]_FN`,
/// `d_R = −(d_λ + [R, −]_D)`, or `D_φ` for preserving maps. The averaging
/// coboundary acts on tree cochains, see [`crate::treeop::d_r_avg`].
pub fn operator_coboundary(
    pi: &Multiplication,
    t: &Element,
    kind: OperatorKind,
    weight: Option<&Rat>,
    f: &Element,
) -> Result<Element> {
    match kind {
        OperatorKind::Nijenhuis => {
            if !classify(pi, t, kind, None)?.holds {
                return Err(Error::NotOperator { kind: "nijenhuis" });
            }
            fn_bracket(pi, t, f)
        }
        OperatorKind::RotaBaxter => {
            let lambda = weight.ok_or(Error::MissingWeight)?;
            if !classify(pi, t, kind, Some(lambda))?.holds {
                return Err(Error::NotOperator {
                    kind: "rota-baxter",
                });
            }
            let d = d_weighted(pi, lambda, f)?;
            Ok(d.add(&derived_bracket(pi, t, f)?).neg())
        }
        OperatorKind::Preserving => d_phi(pi, t, f),
        OperatorKind::Averaging => Err(Error::MalformedSpec(
            "averaging coboundary acts on tree cochains".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::build_endomorphism_operad;
    use crate::multimap::AlgebraSpec;
    use crate::operad::{Element, Operad};
    use crate::ops::delta_rep;
    use crate::rational::rat;
    use alloc::sync::Arc;
    use num_traits::Zero;

    fn dual_numbers() -> AlgebraSpec {
        let mut s = AlgebraSpec::new(vec!["e".into(), "x".into()]).unwrap();
        s.add_product_term_by_label("e", "e", "e", rat(1)).unwrap();
        s.add_product_term_by_label("e", "x", "x", rat(1)).unwrap();
        s.add_product_term_by_label("x", "e", "x", rat(1)).unwrap();
        s
    }

    fn setup() -> (Arc<Operad>, Multiplication) {
        let (op, pi_el) = build_endomorphism_operad(&dual_numbers());
        (op, Multiplication::new(pi_el).unwrap())
    }

    fn el(op: &Arc<Operad>, coeffs: [i64; 4]) -> Element {
        Element::new(op, 1, coeffs.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn classify_known_positives() {
        let (op, pi) = setup();
        let unit = Element::unit(&op);
        assert!(
            classify(&pi, &unit, OperatorKind::Nijenhuis, None)
                .unwrap()
                .holds
        );
        // -λ𝟙 is Rota-Baxter of weight λ.
        for lam in [rat(0), rat(1), rat(-1)] {
            let r = unit.scale(&-lam.clone());
            assert!(
                classify(&pi, &r, OperatorKind::RotaBaxter, Some(&lam))
                    .unwrap()
                    .holds
            );
        }
        // T(e) = x, T(x) = 0 is simultaneously averaging and RB(0).
        let t = el(&op, [0, 0, 1, 0]);
        assert!(
            classify(&pi, &t, OperatorKind::Averaging, None)
                .unwrap()
                .holds
        );
        assert!(
            classify(&pi, &t, OperatorKind::RotaBaxter, Some(&rat(0)))
                .unwrap()
                .holds
        );
        // N = diag(0,1) is Nijenhuis.
        let n = el(&op, [0, 0, 0, 1]);
        assert!(
            classify(&pi, &n, OperatorKind::Nijenhuis, None)
                .unwrap()
                .holds
        );
        // A generic element is none of these; the defect is reported.
        let bad = el(&op, [1, 2, 1, 1]);
        let verdict = classify(&pi, &bad, OperatorKind::Nijenhuis, None).unwrap();
        assert!(!verdict.holds);
        assert!(!verdict.defects[0].is_zero());
    }

    #[test]
    fn classify_argument_checks() {
        let (op, pi) = setup();
        let unit = Element::unit(&op);
        assert_eq!(
            classify(&pi, &unit, OperatorKind::RotaBaxter, None).unwrap_err(),
            Error::MissingWeight
        );
        assert!(classify(&pi, &unit, OperatorKind::Nijenhuis, Some(&rat(1))).is_err());
        let two = pi.element().clone();
        assert!(matches!(
            classify(&pi, &two, OperatorKind::Nijenhuis, None),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn complement_is_involutive_and_rb() {
        let (op, pi) = setup();
        let lam = rat(1);
        let zero1 = Element::zero(&op, 1).unwrap();
        let c = rb_complement(&zero1, &lam).unwrap();
        assert_eq!(c, Element::unit(&op).scale(&rat(-1)));
        assert!(
            classify(&pi, &c, OperatorKind::RotaBaxter, Some(&lam))
                .unwrap()
                .holds
        );
        let r = el(&op, [0, 0, 1, 0]);
        let cc = rb_complement(&rb_complement(&r, &lam).unwrap(), &lam).unwrap();
        assert_eq!(cc, r);
        // Weight 0: the negation of a weight-0 element stays weight 0.
        let neg = rb_complement(&r, &rat(0)).unwrap();
        assert_eq!(neg, r.neg());
        assert!(
            classify(&pi, &neg, OperatorKind::RotaBaxter, Some(&rat(0)))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn tower_for_unit_and_projector() {
        let (op, pi) = setup();
        let unit = Element::unit(&op);
        let tower = nijenhuis_tower(&pi, &unit, 3).unwrap();
        for (nk, pik) in &tower {
            assert_eq!(nk, &unit);
            assert_eq!(pik, pi.element());
        }
        // N = 0: N^0 = 𝟙, N^k = 0 and pi_{N^k} = 0 for k >= 1.
        let zero1 = Element::zero(&op, 1).unwrap();
        let tower = nijenhuis_tower(&pi, &zero1, 2).unwrap();
        assert_eq!(tower[0].0, unit);
        assert_eq!(tower[0].1, *pi.element());
        for (nk, pik) in &tower[1..] {
            assert!(nk.is_zero());
            assert!(pik.is_zero());
        }
        // N = diag(0,1): idempotent, the tower stabilizes.
        let n = el(&op, [0, 0, 0, 1]);
        let tower = nijenhuis_tower(&pi, &n, 4).unwrap();
        assert_eq!(tower[1].0, n);
        assert_eq!(tower[2].0, n);
        // pi_N(e,e) = N(e)·e + e·N(e) − N(e·e) = 0.
        let pi_n = &tower[1].1;
        let mm = crate::endo::multimap_from_element(pi_n).unwrap();
        assert!(mm.evaluate(&[0, 0]).unwrap().iter().all(Rat::is_zero));
        // The remaining pairs vanish the same way: N(a)b + aN(b) − N(ab) = 0.
        assert!(mm.evaluate(&[0, 1]).unwrap().iter().all(Rat::is_zero));
        assert!(mm.evaluate(&[1, 0]).unwrap().iter().all(Rat::is_zero));
        assert!(mm.evaluate(&[1, 1]).unwrap().iter().all(Rat::is_zero));

        let bad = el(&op, [1, 2, 1, 1]);
        assert!(matches!(
            nijenhuis_tower(&pi, &bad, 2),
            Err(Error::NotOperator { .. })
        ));
    }

    #[test]
    fn nijenhuis_deformation_examples() {
        let (op, pi) = setup();
        let unit = Element::unit(&op);
        assert_eq!(nijenhuis_deformation(&pi, &unit).unwrap(), *pi.element());
        let c_unit = unit.scale(&rat(3));
        assert_eq!(
            nijenhuis_deformation(&pi, &c_unit).unwrap(),
            pi.element().scale(&rat(3))
        );
    }

    #[test]
    fn rb_deformation_examples() {
        let (op, pi) = setup();
        // R = 0, λ = 1: pi_R = π and the representation is trivial.
        let zero1 = Element::zero(&op, 1).unwrap();
        let (pi_r, rep) = rb_deformations(&pi, &zero1, &rat(1)).unwrap();
        assert_eq!(pi_r.element(), pi.element());
        assert!(rep.left().is_zero() && rep.right().is_zero());
        // R = -λ𝟙: pi_R = -λπ.
        let lam = rat(2);
        let r = Element::unit(&op).scale(&rat(-2));
        let (pi_r, _) = rb_deformations(&pi, &r, &lam).unwrap();
        assert_eq!(pi_r.element(), &pi.element().scale(&rat(-2)));
        // A2 with R(e)=x, λ=0: pi_R(e,e) = x·e + e·x = 2x.
        let r = el(&op, [0, 0, 1, 0]);
        let (pi_r, rep) = rb_deformations(&pi, &r, &rat(0)).unwrap();
        let mm = crate::endo::multimap_from_element(pi_r.element()).unwrap();
        assert_eq!(mm.evaluate(&[0, 0]).unwrap(), vec![rat(0), rat(2)]);
        // d_R = -delta_{pi_R; pi^l, pi^r} on a sample cochain.
        let f = Element::unit(&op);
        let route_a =
            operator_coboundary(&pi, &r, OperatorKind::RotaBaxter, Some(&rat(0)), &f).unwrap();
        let route_b = delta_rep(&pi_r, &rep, &f).unwrap().neg();
        assert_eq!(route_a, route_b);
        assert!(matches!(
            rb_deformations(&pi, &el(&op, [1, 1, 1, 1]), &rat(0)),
            Err(Error::NotOperator { .. })
        ));
    }

    #[test]
    fn averaging_split() {
        let (op, pi) = setup();
        let r = el(&op, [0, 0, 1, 0]);
        let (left, right) = averaging_deformations(&pi, &r).unwrap();
        // ⊣ = π∘_2r sends (a,b) to a·r(b); on (e,e) that is e·x = x.
        let mm = crate::endo::multimap_from_element(left.element()).unwrap();
        assert_eq!(mm.evaluate(&[0, 0]).unwrap(), vec![rat(0), rat(1)]);
        let mm = crate::endo::multimap_from_element(right.element()).unwrap();
        assert_eq!(mm.evaluate(&[0, 0]).unwrap(), vec![rat(0), rat(1)]);
        // Scalar multiples of 𝟙 are averaging; their splits are c·π.
        let two_unit = Element::unit(&op).scale(&rat(2));
        let (l2, r2) = averaging_deformations(&pi, &two_unit).unwrap();
        assert_eq!(l2.element(), &pi.element().scale(&rat(2)));
        assert_eq!(r2.element(), &pi.element().scale(&rat(2)));
        assert!(matches!(
            averaging_deformations(&pi, &el(&op, [1, 2, 1, 1])),
            Err(Error::NotOperator { .. })
        ));
    }

    #[test]
    fn coboundaries_square_to_zero_on_samples() {
        let (op, pi) = setup();
        let n = el(&op, [0, 0, 0, 1]);
        let f = Element::unit(&op);
        let df = operator_coboundary(&pi, &n, OperatorKind::Nijenhuis, None, &f).unwrap();
        let ddf = operator_coboundary(&pi, &n, OperatorKind::Nijenhuis, None, &df).unwrap();
        assert!(ddf.is_zero());
        // R = 0 at λ = 0 gives the zero coboundary.
        let zero1 = Element::zero(&op, 1).unwrap();
        let d =
            operator_coboundary(&pi, &zero1, OperatorKind::RotaBaxter, Some(&rat(0)), &f).unwrap();
        assert!(d.is_zero());
    }
}
