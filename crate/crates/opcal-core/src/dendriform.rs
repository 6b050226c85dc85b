//! The colored operad whose multiplications are dendriform algebras.
//!
//! Spaces are `P_n = Hom(k[C_n] ⊗ A^⊗n, A)` with colors
//! `C_n = {[1],…,[n]}`. An arity-2 element encodes the pair `(≺, ≻)` via
//! `a ≺ b = π([1]; a, b)` and `a ≻ b = π([2]; a, b)`, and `π∘_1π = π∘_2π`
//! is exactly the three dendriform axioms. Partial composition follows the
//! three-case color rule: colors inside the inserted window select a color
//! of `g`, colors outside feed `g` the sum `[1]+⋯+[n]` of all its colors.
//!
//! Coefficient layout: a colored map stores one dense tensor per color,
//! color-major, each block in the crate-wide flatten order, so
//! `dim(P_n) = n·d^(n+1)`.
//!
//! The `*_explicit` functions at the bottom evaluate the closed-form
//! case-formulas for the cup product, `θ` and `d_λ` directly; they bypass
//! the composition engine and act as its oracle.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::endo::{
    add_scaled, basis_vector, endo_compose, eval_on_vectors, is_zero_vec, mul_vectors,
};
use crate::error::{Error, Result};
use crate::multimap::{multi_indices, MultiMap};
use crate::operad::{Element, Operad};
use crate::rational::{parity, Rat};

/// Colored analogue of a dense multilinear map: one tensor per color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredMultiMap {
    arity: usize,
    dim: usize,
    coeffs: Vec<Rat>,
}

impl ColoredMultiMap {
    pub fn new(arity: usize, dim: usize, coeffs: Vec<Rat>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let expected = arity * dim.pow(arity as u32 + 1);
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
            coeffs: vec![Rat::zero(); arity * dim.pow(arity as u32 + 1)],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn block_len(&self) -> usize {
        self.dim.pow(self.arity as u32 + 1)
    }

    /// The tensor of one color (1-based).
    pub fn color_block(&self, color: usize) -> MultiMap {
        let b = self.block_len();
        MultiMap::new(
            self.arity,
            self.dim,
            self.coeffs[(color - 1) * b..color * b].to_vec(),
        )
        .expect("block has the tensor dimension")
    }

    pub fn set_color_block(&mut self, color: usize, block: &MultiMap) {
        let b = self.block_len();
        self.coeffs[(color - 1) * b..color * b].clone_from_slice(block.coeffs());
    }

    /// Sum of all color blocks: the value on the formal color `[1]+⋯+[n]`.
    pub fn color_sum(&self) -> MultiMap {
        let mut acc = self.color_block(1);
        for c in 2..=self.arity {
            acc = acc.add(&self.color_block(c));
        }
        acc
    }
}

/// Builds the colored instance over a `d`-dimensional space.
pub fn build_dendriform_operad(d: usize) -> Arc<Operad> {
    Arc::new(Operad::Dendriform { dim: d })
}

/// Packages a pair of structure tables `(≺, ≻)` as the arity-2 colored
/// element with `π([1];·,·) = ≺` and `π([2];·,·) = ≻`.
pub fn dendriform_pair_element(
    op: &Arc<Operad>,
    left: &MultiMap,
    right: &MultiMap,
) -> Result<Element> {
    let d = match **op {
        Operad::Dendriform { dim } => dim,
        _ => return Err(Error::InstanceMismatch),
    };
    if left.arity() != 2 || right.arity() != 2 || left.dim() != d || right.dim() != d {
        return Err(Error::InstanceMismatch);
    }
    let mut cm = ColoredMultiMap::zero(2, d);
    cm.set_color_block(1, left);
    cm.set_color_block(2, right);
    Element::new(op, 2, cm.coeffs.clone())
}

pub fn colored_from_element(el: &Element) -> Result<ColoredMultiMap> {
    match **el.operad() {
        Operad::Dendriform { dim } => ColoredMultiMap::new(el.arity(), dim, el.coeffs().to_vec()),
        _ => Err(Error::InstanceMismatch),
    }
}

pub fn element_from_colored(op: &Arc<Operad>, cm: &ColoredMultiMap) -> Result<Element> {
    match **op {
        Operad::Dendriform { dim } if dim == cm.dim => {
            Element::new(op, cm.arity, cm.coeffs.clone())
        }
        _ => Err(Error::InstanceMismatch),
    }
}

/// Partial composition of colored maps: per result color `r`, the color
/// rule picks the outer color of `f` and either one color of `g` (inside
/// the window) or the sum of all of them (outside), then substitutes as
/// in `End_A`.
pub(crate) fn dendriform_compose(
    d: usize,
    f: &[Rat],
    m: usize,
    i: usize,
    g: &[Rat],
    n: usize,
) -> Vec<Rat> {
    let arity_out = m + n - 1;
    let fb = d.pow(m as u32 + 1);
    let gb = d.pow(n as u32 + 1);
    let ob = d.pow(arity_out as u32 + 1);
    let f_block = |c: usize| &f[(c - 1) * fb..c * fb];
    let g_block = |c: usize| &g[(c - 1) * gb..c * gb];
    let mut g_sum = vec![Rat::zero(); gb];
    for c in 1..=n {
        for (acc, v) in g_sum.iter_mut().zip(g_block(c)) {
            *acc += v;
        }
    }
    let mut out = vec![Rat::zero(); arity_out * ob];
    for r in 1..=arity_out {
        let (fc, gpart): (usize, &[Rat]) = if r < i {
            (r, &g_sum)
        } else if r < i + n {
            (i, g_block(r - i + 1))
        } else {
            (r - n + 1, &g_sum)
        };
        let block = endo_compose(d, f_block(fc), m, i, gpart, n);
        out[(r - 1) * ob..r * ob].clone_from_slice(&block);
    }
    out
}

/// Whether `(≺, ≻)` satisfies the three dendriform axioms, checked
/// directly on basis triples — the independent route against
/// `is_multiplication` on the colored instance.
pub fn dendriform_axioms_hold(left: &MultiMap, right: &MultiMap) -> bool {
    let d = left.dim();
    let both = left.add(right);
    for a in 0..d {
        for b in 0..d {
            let ea = basis_vector(d, a);
            let a_prec_b = left.evaluate(&[a, b]).expect("basis pair");
            let a_succ_b = right.evaluate(&[a, b]).expect("basis pair");
            for c in 0..d {
                let ec = basis_vector(d, c);
                let b_prec_c = left.evaluate(&[b, c]).expect("basis pair");
                let b_succ_c = right.evaluate(&[b, c]).expect("basis pair");
                let b_both_c = both.evaluate(&[b, c]).expect("basis pair");
                // (a≺b)≺c = a≺(b≺c + b≻c)
                if mul_vectors(left, &a_prec_b, &ec) != mul_vectors(left, &ea, &b_both_c) {
                    return false;
                }
                // (a≻b)≺c = a≻(b≺c)
                if mul_vectors(left, &a_succ_b, &ec) != mul_vectors(right, &ea, &b_prec_c) {
                    return false;
                }
                // (a≺b + a≻b)≻c = a≻(b≻c)
                let a_both_b = a_prec_b
                    .iter()
                    .zip(&a_succ_b)
                    .map(|(u, v)| u + v)
                    .collect::<Vec<_>>();
                if mul_vectors(right, &a_both_b, &ec) != mul_vectors(right, &ea, &b_succ_c) {
                    return false;
                }
            }
        }
    }
    true
}

fn colored_from_rule(
    arity: usize,
    dim: usize,
    mut rule: impl FnMut(usize, &[usize]) -> Vec<Rat>,
) -> ColoredMultiMap {
    let mut out = ColoredMultiMap::zero(arity, dim);
    for color in 1..=arity {
        let mut block = MultiMap::zero(arity, dim);
        for a in multi_indices(arity, dim) {
            let col = rule(color, &a);
            for (j, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    block.add_to(j, &a, &v);
                }
            }
        }
        out.set_color_block(color, &block);
    }
    out
}

/// Explicit dendriform cup product:
/// `(f∪g)([r];…) = f([r];…) ≺ g([1]+⋯+[n];…)` for `r ≤ m`, and
/// `f([1]+⋯+[m];…) ≻ g([r−m];…)` for `r > m`.
pub fn cup_explicit(
    left: &MultiMap,
    right: &MultiMap,
    f: &ColoredMultiMap,
    g: &ColoredMultiMap,
) -> ColoredMultiMap {
    let (m, n) = (f.arity(), g.arity());
    let d = f.dim();
    let f_sum = f.color_sum();
    let g_sum = g.color_sum();
    colored_from_rule(m + n, d, |r, a| {
        if r <= m {
            let fv = f.color_block(r).evaluate(&a[..m]).expect("basis inputs");
            let gv = g_sum.evaluate(&a[m..]).expect("basis inputs");
            mul_vectors(left, &fv, &gv)
        } else {
            let fv = f_sum.evaluate(&a[..m]).expect("basis inputs");
            let gv = g
                .color_block(r - m)
                .evaluate(&a[m..])
                .expect("basis inputs");
            mul_vectors(right, &fv, &gv)
        }
    })
}

/// Explicit dendriform `θ`, by the three-case formula on the output color.
pub fn theta_explicit(left: &MultiMap, right: &MultiMap, f: &ColoredMultiMap) -> ColoredMultiMap {
    let m = f.arity();
    let d = f.dim();
    let f_sum = f.color_sum();
    colored_from_rule(m + 1, d, |s, a| {
        let mut acc = vec![Rat::zero(); d];
        let last = basis_vector(d, a[m]);
        let first = basis_vector(d, a[0]);
        if s == 1 {
            let head = f.color_block(1).evaluate(&a[..m]).expect("basis inputs");
            add_scaled(&mut acc, &mul_vectors(left, &head, &last), true);
            let tail = f_sum.evaluate(&a[1..]).expect("basis inputs");
            add_scaled(&mut acc, &mul_vectors(left, &first, &tail), parity(m));
        } else if s <= m {
            let head = f.color_block(s).evaluate(&a[..m]).expect("basis inputs");
            add_scaled(&mut acc, &mul_vectors(left, &head, &last), true);
            let tail = f
                .color_block(s - 1)
                .evaluate(&a[1..])
                .expect("basis inputs");
            add_scaled(&mut acc, &mul_vectors(right, &first, &tail), parity(m));
        } else {
            let head = f_sum.evaluate(&a[..m]).expect("basis inputs");
            add_scaled(&mut acc, &mul_vectors(right, &head, &last), true);
            let tail = f.color_block(m).evaluate(&a[1..]).expect("basis inputs");
            add_scaled(&mut acc, &mul_vectors(right, &first, &tail), parity(m));
        }
        acc
    })
}

/// Explicit dendriform `d_λ`, by the three-sum formula on the output color.
pub fn d_lambda_explicit(
    left: &MultiMap,
    right: &MultiMap,
    lambda: &Rat,
    f: &ColoredMultiMap,
) -> ColoredMultiMap {
    let m = f.arity();
    let d = f.dim();
    let both = left.add(right);
    colored_from_rule(m + 1, d, |s, a| {
        let mut acc = vec![Rat::zero(); d];
        let mut insert = |block: &MultiMap, i: usize, merged: Vec<Rat>| {
            if is_zero_vec(&merged) {
                return;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(m);
            for &idx in &a[..i - 1] {
                args.push(basis_vector(d, idx));
            }
            args.push(merged);
            for &idx in &a[i + 1..] {
                args.push(basis_vector(d, idx));
            }
            add_scaled(&mut acc, &eval_on_vectors(block, &args), parity(i));
        };
        for i in 1..=m {
            if i + 2 <= s {
                // color [s−1], merged argument a_i ≺ a_{i+1} + a_i ≻ a_{i+1}
                let merged = both.evaluate(&[a[i - 1], a[i]]).expect("basis inputs");
                insert(&f.color_block(s - 1), i, merged);
            } else if i + 1 == s || i == s {
                // color [i], merged by π([s−i+1]; a_i, a_{i+1})
                let table = if s - i + 1 == 1 { left } else { right };
                let merged = table.evaluate(&[a[i - 1], a[i]]).expect("basis inputs");
                insert(&f.color_block(i), i, merged);
            } else {
                // i ≥ s+1: color [s]
                let merged = both.evaluate(&[a[i - 1], a[i]]).expect("basis inputs");
                insert(&f.color_block(s), i, merged);
            }
        }
        for v in acc.iter_mut() {
            *v *= lambda;
        }
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;
    use crate::rational::{rat, ratio};

    fn table(d: usize, entries: &[(usize, usize, usize, Rat)]) -> MultiMap {
        let mut t = MultiMap::zero(2, d);
        for (a, b, c, v) in entries {
            t.add_to(*c, &[*a, *b], v);
        }
        t
    }

    #[test]
    fn unit_and_dimensions() {
        let op = build_dendriform_operad(2);
        assert_eq!(op.dim(1).unwrap(), 4);
        assert_eq!(op.dim(2).unwrap(), 16);
        assert_eq!(op.dim(3).unwrap(), 48);
        let unit = Element::unit(&op);
        let pi = dendriform_pair_element(
            &op,
            &table(2, &[(0, 0, 0, rat(1))]),
            &table(2, &[(0, 1, 1, rat(1))]),
        )
        .unwrap();
        assert_eq!(ops::partial_compose(&pi, 1, &unit).unwrap(), pi);
        assert_eq!(ops::partial_compose(&pi, 2, &unit).unwrap(), pi);
        assert_eq!(ops::partial_compose(&unit, 1, &pi).unwrap(), pi);
    }

    #[test]
    fn one_dimensional_multiplications() {
        let op = build_dendriform_operad(1);
        // ≺ = ≻ = 0 is dendriform.
        let zero = MultiMap::zero(2, 1);
        let pi = dendriform_pair_element(&op, &zero, &zero).unwrap();
        assert!(ops::is_multiplication(&pi).unwrap());
        assert!(dendriform_axioms_hold(&zero, &zero));
        // e≺e = e, e≻e = 0 is dendriform (one-sided shift).
        let prec = table(1, &[(0, 0, 0, rat(1))]);
        let pi = dendriform_pair_element(&op, &prec, &zero).unwrap();
        assert!(ops::is_multiplication(&pi).unwrap());
        assert!(dendriform_axioms_hold(&prec, &zero));
        // e≺e = ½e = e≻e fails: (a≺b)≺c = ¼ but a≺(b≺c + b≻c) = ½.
        let half = table(1, &[(0, 0, 0, ratio(1, 2))]);
        let pi = dendriform_pair_element(&op, &half, &half).unwrap();
        assert!(!ops::is_multiplication(&pi).unwrap());
        assert!(!dendriform_axioms_hold(&half, &half));
    }

    #[test]
    fn axioms_match_is_multiplication_on_random_tables() {
        let op = build_dendriform_operad(2);
        let mut rng = crate::rng::SeededRng::named(3, "dendriform-mult");
        let mut seen_false = false;
        for _ in 0..40 {
            let mut left = MultiMap::zero(2, 2);
            let mut right = MultiMap::zero(2, 2);
            for j in 0..2 {
                for a in 0..2 {
                    for b in 0..2 {
                        left.set(j, &[a, b], rng.coeff());
                        right.set(j, &[a, b], rng.coeff());
                    }
                }
            }
            let pi = dendriform_pair_element(&op, &left, &right).unwrap();
            let generic = ops::is_multiplication(&pi).unwrap();
            let direct = dendriform_axioms_hold(&left, &right);
            assert_eq!(generic, direct);
            seen_false |= !generic;
        }
        assert!(seen_false);
    }
}
