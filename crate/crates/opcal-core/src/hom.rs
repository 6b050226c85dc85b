//! The operad twisted by an arity-1 element `α`.
//!
//! The arity-`n` space is the `α`-equivariant subspace
//! `P_n^α = { f | α∘_1 f = (⋯(f∘_nα)⋯)∘_1α }`, computed once per arity as
//! the exact kernel of the membership condition. Partial composition
//! inserts `α^{n−1}` into every slot of `f` except slot `i`, which
//! receives `g`. Elements carry coordinates in the kernel basis;
//! non-members are rejected at construction rather than projected, since
//! projection would be basis-dependent.
//!
//! A multiplication of this instance is an element `ϖ` with
//! `(ϖ∘_2α)∘_1ϖ = (ϖ∘_2ϖ)∘_1α` (Hom-associativity); membership of `ϖ`
//! itself is the multiplicativity condition `α∘_1ϖ = (ϖ∘_2α)∘_1α`.
//!
//! The `*_explicit` functions evaluate the closed-form Hom-associative
//! formulas with their `α`-power insertions directly, independent of the
//! composition engine.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::endo::{
    add_scaled, basis_vector, endo_compose, eval_on_vectors, is_zero_vec, mul_vectors,
};
use crate::error::{Error, Result};
use crate::matrix::{KernelBasis, RatMatrix};
use crate::multimap::{multi_indices, MultiMap};
use crate::operad::{Element, Operad};
use crate::rational::{parity, Rat};

/// The α-twisted instance: underlying dimension, the twist and its
/// composition powers, and one kernel basis per supported arity.
#[derive(Debug)]
pub struct HomOperad {
    dim: usize,
    alpha: MultiMap,
    alpha_pows: Vec<MultiMap>,
    bases: Vec<KernelBasis>,
    unit_coords: Vec<Rat>,
}

impl PartialEq for HomOperad {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.alpha == other.alpha && self.bases.len() == other.bases.len()
    }
}

impl HomOperad {
    pub fn dim_underlying(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &MultiMap {
        &self.alpha
    }

    pub fn max_arity(&self) -> usize {
        self.bases.len()
    }

    pub fn subspace_dim(&self, arity: usize) -> Result<usize> {
        self.basis(arity).map(KernelBasis::len)
    }

    fn basis(&self, arity: usize) -> Result<&KernelBasis> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        self.bases.get(arity - 1).ok_or(Error::ArityUnsupported {
            arity,
            max: self.bases.len(),
        })
    }

    pub(crate) fn unit_coords(&self) -> &[Rat] {
        &self.unit_coords
    }

    /// Expands subspace coordinates to the full tensor.
    pub fn expand(&self, arity: usize, coords: &[Rat]) -> Result<MultiMap> {
        let basis = self.basis(arity)?;
        MultiMap::new(arity, self.dim, basis.expand(coords))
    }

    /// Coordinates of a full tensor, or an error if it fails membership.
    pub fn project(&self, mm: &MultiMap) -> Result<Vec<Rat>> {
        self.basis(mm.arity())?
            .project(mm.coeffs())
            .ok_or(Error::AlphaNotCompatible)
    }

    /// Residual of the membership condition
    /// `α∘_1 f − (⋯(f∘_nα)⋯)∘_1α` on a full tensor.
    pub fn membership_defect(&self, mm: &MultiMap) -> MultiMap {
        let n = mm.arity();
        let lhs = endo_compose(self.dim, self.alpha.coeffs(), 1, 1, mm.coeffs(), n);
        let mut rhs = mm.coeffs().to_vec();
        for slot in (1..=n).rev() {
            rhs = endo_compose(self.dim, &rhs, n, slot, self.alpha.coeffs(), 1);
        }
        let coeffs = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
        MultiMap::new(n, self.dim, coeffs).expect("tensor dimensions agree")
    }

    pub(crate) fn compose(
        &self,
        f: &[Rat],
        m: usize,
        i: usize,
        g: &[Rat],
        n: usize,
    ) -> Result<Vec<Rat>> {
        let out_arity = m + n - 1;
        let out_basis = self.basis(out_arity)?;
        let f_full = self.basis(m)?.expand(f);
        let g_full = self.basis(n)?.expand(g);
        let alpha_pow = self.alpha_pows[n - 1].coeffs();
        // Insert α^{n−1} in slots m..i+1, then g at slot i, then the rest.
        let mut h = f_full;
        for slot in (i + 1..=m).rev() {
            h = endo_compose(self.dim, &h, m, slot, alpha_pow, 1);
        }
        h = endo_compose(self.dim, &h, m, i, &g_full, n);
        for slot in (1..i).rev() {
            h = endo_compose(self.dim, &h, out_arity, slot, alpha_pow, 1);
        }
        // The subspaces are closed under twisted composition.
        out_basis.project(&h).ok_or(Error::AlphaNotCompatible)
    }
}

/// Builds the α-twisted instance with subspace bases for arities
/// `1..=max_arity`.
pub fn build_hom_operad(alpha: &MultiMap, max_arity: usize) -> Result<Arc<Operad>> {
    if alpha.arity() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            got: alpha.arity(),
        });
    }
    if max_arity == 0 {
        return Err(Error::ZeroArity);
    }
    let d = alpha.dim();
    let mut alpha_pows = vec![MultiMap::identity(d)];
    for k in 1..max_arity.max(2) {
        let next = endo_compose(d, alpha.coeffs(), 1, 1, alpha_pows[k - 1].coeffs(), 1);
        alpha_pows.push(MultiMap::new(1, d, next).expect("matrix power shape"));
    }
    let mut bases = Vec::with_capacity(max_arity);
    for arity in 1..=max_arity {
        let full = d.pow(arity as u32 + 1);
        let mut columns = Vec::with_capacity(full);
        for idx in 0..full {
            let mut unit = vec![Rat::zero(); full];
            unit[idx] = Rat::one();
            let basis_mm = MultiMap::new(arity, d, unit).expect("unit tensor shape");
            let lhs = endo_compose(d, alpha.coeffs(), 1, 1, basis_mm.coeffs(), arity);
            let mut rhs = basis_mm.coeffs().to_vec();
            for slot in (1..=arity).rev() {
                rhs = endo_compose(d, &rhs, arity, slot, alpha.coeffs(), 1);
            }
            columns.push(lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect());
        }
        let constraint = RatMatrix::from_columns(full, &columns)?;
        bases.push(constraint.kernel_basis());
    }
    let identity = MultiMap::identity(d);
    let unit_coords = bases[0]
        .project(identity.coeffs())
        .expect("the identity map is always alpha-equivariant");
    Ok(Arc::new(Operad::Hom(HomOperad {
        dim: d,
        alpha: alpha.clone(),
        alpha_pows,
        bases,
        unit_coords,
    })))
}

/// Wraps a full tensor as an element of the twisted instance, rejecting
/// non-members.
pub fn hom_element_from_full(op: &Arc<Operad>, mm: &MultiMap) -> Result<Element> {
    let h = match &**op {
        Operad::Hom(h) => h,
        _ => return Err(Error::InstanceMismatch),
    };
    Element::new(op, mm.arity(), h.project(mm)?)
}

/// The full tensor behind a twisted-instance element.
pub fn hom_element_to_full(el: &Element) -> Result<MultiMap> {
    let h = match &**el.operad() {
        Operad::Hom(h) => h,
        _ => return Err(Error::InstanceMismatch),
    };
    h.expand(el.arity(), el.coeffs())
}

fn apply_matrix(mat: &MultiMap, v: &[Rat]) -> Vec<Rat> {
    eval_on_vectors(mat, core::slice::from_ref(&v.to_vec()))
}

fn alpha_power(alpha: &MultiMap, k: usize) -> MultiMap {
    let d = alpha.dim();
    let mut acc = MultiMap::identity(d);
    for _ in 0..k {
        let next = endo_compose(d, alpha.coeffs(), 1, 1, acc.coeffs(), 1);
        acc = MultiMap::new(1, d, next).expect("matrix power shape");
    }
    acc
}

/// Builds from a rule on basis inputs, shared by the explicit formulas.
fn from_rule(arity: usize, dim: usize, mut rule: impl FnMut(&[usize]) -> Vec<Rat>) -> MultiMap {
    let mut out = MultiMap::zero(arity, dim);
    for a in multi_indices(arity, dim) {
        for (j, v) in rule(&a).into_iter().enumerate() {
            if !v.is_zero() {
                out.add_to(j, &a, &v);
            }
        }
    }
    out
}

/// Explicit Hom coboundary
/// `δ_ϖf(a⃗) = α^{m−1}(a_1)·f(a_2,…) + (−1)^{m+1} f(…,a_m)·α^{m−1}(a_{m+1})
///  + Σ_i (−1)^i f(αa_1,…, a_i·a_{i+1}, …, αa_{m+1})`.
pub fn hom_delta_explicit(pi: &MultiMap, alpha: &MultiMap, f: &MultiMap) -> MultiMap {
    let d = pi.dim();
    let m = f.arity();
    let am1 = alpha_power(alpha, m - 1);
    from_rule(m + 1, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let head = f.evaluate(&a[1..]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &apply_matrix(&am1, &basis_vector(d, a[0])), &head),
            false,
        );
        let tail = f.evaluate(&a[..m]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &tail, &apply_matrix(&am1, &basis_vector(d, a[m]))),
            parity(m + 1),
        );
        for i in 1..=m {
            let merged = pi.evaluate(&[a[i - 1], a[i]]).expect("basis inputs");
            if is_zero_vec(&merged) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(m);
            for &idx in &a[..i - 1] {
                args.push(apply_matrix(alpha, &basis_vector(d, idx)));
            }
            args.push(merged);
            for &idx in &a[i + 1..] {
                args.push(apply_matrix(alpha, &basis_vector(d, idx)));
            }
            add_scaled(&mut acc, &eval_on_vectors(f, &args), parity(i));
        }
        acc
    })
}

/// Explicit Hom `θ`:
/// `θf(a⃗) = −f(a_1,…,a_m)·α^{m−1}(a_{m+1}) + (−1)^m α^{m−1}(a_1)·f(a_2,…)`.
pub fn hom_theta_explicit(pi: &MultiMap, alpha: &MultiMap, f: &MultiMap) -> MultiMap {
    let d = pi.dim();
    let m = f.arity();
    let am1 = alpha_power(alpha, m - 1);
    from_rule(m + 1, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let head = f.evaluate(&a[..m]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &head, &apply_matrix(&am1, &basis_vector(d, a[m]))),
            true,
        );
        let tail = f.evaluate(&a[1..]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &apply_matrix(&am1, &basis_vector(d, a[0])), &tail),
            parity(m),
        );
        acc
    })
}

/// Explicit Hom `d_λ`:
/// `λ Σ_i (−1)^i f(αa_1, …, a_i·a_{i+1}, …, αa_{m+1})`.
pub fn hom_d_lambda_explicit(
    pi: &MultiMap,
    alpha: &MultiMap,
    lambda: &Rat,
    f: &MultiMap,
) -> MultiMap {
    let d = pi.dim();
    let m = f.arity();
    from_rule(m + 1, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        for i in 1..=m {
            let merged = pi.evaluate(&[a[i - 1], a[i]]).expect("basis inputs");
            if is_zero_vec(&merged) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(m);
            for &idx in &a[..i - 1] {
                args.push(apply_matrix(alpha, &basis_vector(d, idx)));
            }
            args.push(merged);
            for &idx in &a[i + 1..] {
                args.push(apply_matrix(alpha, &basis_vector(d, idx)));
            }
            add_scaled(&mut acc, &eval_on_vectors(f, &args), parity(i));
        }
        for v in acc.iter_mut() {
            *v *= lambda;
        }
        acc
    })
}

/// Explicit Hom Frölicher–Nijenhuis bracket with `α^{n−1}/α^{m−1}` on the
/// cup terms and `α^m/α^n` on the untouched slots of the insertion sums.
pub fn hom_fn_bracket_explicit(
    pi: &MultiMap,
    alpha: &MultiMap,
    f: &MultiMap,
    g: &MultiMap,
) -> MultiMap {
    let d = pi.dim();
    let (m, n) = (f.arity(), g.arity());
    let delta_f = hom_delta_explicit(pi, alpha, f);
    let delta_g = hom_delta_explicit(pi, alpha, g);
    let an1 = alpha_power(alpha, n - 1);
    let am1 = alpha_power(alpha, m - 1);
    let am = alpha_power(alpha, m);
    let an = alpha_power(alpha, n);
    from_rule(m + n, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let fv = apply_matrix(&an1, &f.evaluate(&a[..m]).expect("basis inputs"));
        let gv = apply_matrix(&am1, &g.evaluate(&a[m..]).expect("basis inputs"));
        add_scaled(&mut acc, &mul_vectors(pi, &fv, &gv), false);
        let gv2 = apply_matrix(&am1, &g.evaluate(&a[..n]).expect("basis inputs"));
        let fv2 = apply_matrix(&an1, &f.evaluate(&a[n..]).expect("basis inputs"));
        add_scaled(&mut acc, &mul_vectors(pi, &gv2, &fv2), !parity(m * n));
        for i in 1..=n {
            let window = delta_f.evaluate(&a[i - 1..i + m]).expect("basis inputs");
            if is_zero_vec(&window) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(n);
            for &idx in &a[..i - 1] {
                args.push(apply_matrix(&am, &basis_vector(d, idx)));
            }
            args.push(window);
            for &idx in &a[i + m..] {
                args.push(apply_matrix(&am, &basis_vector(d, idx)));
            }
            add_scaled(
                &mut acc,
                &eval_on_vectors(g, &args),
                parity(m + (i - 1) * m),
            );
        }
        for i in 1..=m {
            let window = delta_g.evaluate(&a[i - 1..i + n]).expect("basis inputs");
            if is_zero_vec(&window) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(m);
            for &idx in &a[..i - 1] {
                args.push(apply_matrix(&an, &basis_vector(d, idx)));
            }
            args.push(window);
            for &idx in &a[i + n..] {
                args.push(apply_matrix(&an, &basis_vector(d, idx)));
            }
            add_scaled(
                &mut acc,
                &eval_on_vectors(f, &args),
                !parity((m + 1) * n + (i - 1) * n),
            );
        }
        acc
    })
}

/// Explicit Hom derived bracket: like the FN form but inserting `θ`
/// windows with plain signs.
pub fn hom_derived_bracket_explicit(
    pi: &MultiMap,
    alpha: &MultiMap,
    f: &MultiMap,
    g: &MultiMap,
) -> MultiMap {
    let d = pi.dim();
    let (m, n) = (f.arity(), g.arity());
    let theta_f = hom_theta_explicit(pi, alpha, f);
    let theta_g = hom_theta_explicit(pi, alpha, g);
    let an1 = alpha_power(alpha, n - 1);
    let am1 = alpha_power(alpha, m - 1);
    let am = alpha_power(alpha, m);
    let an = alpha_power(alpha, n);
    from_rule(m + n, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let fv = apply_matrix(&an1, &f.evaluate(&a[..m]).expect("basis inputs"));
        let gv = apply_matrix(&am1, &g.evaluate(&a[m..]).expect("basis inputs"));
        add_scaled(&mut acc, &mul_vectors(pi, &fv, &gv), false);
        let gv2 = apply_matrix(&am1, &g.evaluate(&a[..n]).expect("basis inputs"));
        let fv2 = apply_matrix(&an1, &f.evaluate(&a[n..]).expect("basis inputs"));
        add_scaled(&mut acc, &mul_vectors(pi, &gv2, &fv2), !parity(m * n));
        for i in 1..=n {
            let window = theta_f.evaluate(&a[i - 1..i + m]).expect("basis inputs");
            if is_zero_vec(&window) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(n);
            for &idx in &a[..i - 1] {
                args.push(apply_matrix(&am, &basis_vector(d, idx)));
            }
            args.push(window);
            for &idx in &a[i + m..] {
                args.push(apply_matrix(&am, &basis_vector(d, idx)));
            }
            add_scaled(&mut acc, &eval_on_vectors(g, &args), parity((i - 1) * m));
        }
        for i in 1..=m {
            let window = theta_g.evaluate(&a[i - 1..i + n]).expect("basis inputs");
            if is_zero_vec(&window) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(m);
            for &idx in &a[..i - 1] {
                args.push(apply_matrix(&an, &basis_vector(d, idx)));
            }
            args.push(window);
            for &idx in &a[i + n..] {
                args.push(apply_matrix(&an, &basis_vector(d, idx)));
            }
            add_scaled(
                &mut acc,
                &eval_on_vectors(f, &args),
                !parity(m * n + (i - 1) * n),
            );
        }
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;
    use crate::rational::rat;

    fn dual_product() -> MultiMap {
        let mut pi = MultiMap::zero(2, 2);
        pi.set(0, &[0, 0], rat(1));
        pi.set(1, &[0, 1], rat(1));
        pi.set(1, &[1, 0], rat(1));
        pi
    }

    /// α(e) = e, α(x) = 0.
    fn projector_alpha() -> MultiMap {
        let mut a = MultiMap::zero(1, 2);
        a.set(0, &[0], rat(1));
        a
    }

    #[test]
    fn identity_twist_recovers_full_spaces() {
        let alpha = MultiMap::identity(2);
        let op = build_hom_operad(&alpha, 4).unwrap();
        for arity in 1..=4usize {
            assert_eq!(op.dim(arity).unwrap(), 2usize.pow(arity as u32 + 1));
        }
        assert!(op.dim(5).is_err());
        // Composition matches the untwisted engine.
        let pi = hom_element_from_full(&op, &dual_product()).unwrap();
        let pp = ops::partial_compose(&pi, 1, &pi).unwrap();
        let full = hom_element_to_full(&pp).unwrap();
        let plain = endo_compose(2, dual_product().coeffs(), 2, 1, dual_product().coeffs(), 2);
        assert_eq!(full.coeffs(), &plain[..]);
        assert!(ops::is_multiplication(&pi).unwrap());
    }

    #[test]
    fn zero_twist_kills_output() {
        // α = 0: membership forces α∘_1 f = 0 = f with α in every slot,
        // which holds for every f, so P^0_n is the full space.
        let alpha = MultiMap::zero(1, 2);
        let op = build_hom_operad(&alpha, 3).unwrap();
        assert_eq!(op.dim(1).unwrap(), 4);
        assert_eq!(op.dim(2).unwrap(), 8);
    }

    #[test]
    fn projector_twist_on_dual_numbers() {
        let alpha = projector_alpha();
        let op = build_hom_operad(&alpha, 4).unwrap();
        // The dual-number product is multiplicative over this α (so it is
        // a member), but it is not Hom-associative:
        // (e·e)·α(x) = 0 while α(e)·(e·x) = x.
        let pi = hom_element_from_full(&op, &dual_product()).unwrap();
        assert!(!ops::is_multiplication(&pi).unwrap());
        // Its Yau twist a∗b = α(a·b), here e∗e = e and all else zero, is a
        // Hom-multiplication.
        let mut twist = MultiMap::zero(2, 2);
        twist.set(0, &[0, 0], rat(1));
        let vpi = hom_element_from_full(&op, &twist).unwrap();
        assert!(ops::is_multiplication(&vpi).unwrap());
        // x ⊗ x ↦ e is not equivariant: α(f(x,x)) = e but f(αx, αx) = 0.
        let mut bad = MultiMap::zero(2, 2);
        bad.set(0, &[1, 1], rat(1));
        assert_eq!(
            hom_element_from_full(&op, &bad).unwrap_err(),
            Error::AlphaNotCompatible
        );
        // Membership defect of that tensor is nonzero, and of π is zero.
        let h = match &*op {
            Operad::Hom(h) => h,
            _ => unreachable!(),
        };
        assert!(!h.membership_defect(&bad).is_zero());
        assert!(h.membership_defect(&dual_product()).is_zero());
    }

    #[test]
    fn unit_axiom_holds_in_twisted_instance() {
        let alpha = projector_alpha();
        let op = build_hom_operad(&alpha, 4).unwrap();
        let unit = Element::unit(&op);
        let pi = hom_element_from_full(&op, &dual_product()).unwrap();
        assert_eq!(ops::partial_compose(&pi, 1, &unit).unwrap(), pi);
        assert_eq!(ops::partial_compose(&pi, 2, &unit).unwrap(), pi);
        assert_eq!(ops::partial_compose(&unit, 1, &pi).unwrap(), pi);
    }
}
