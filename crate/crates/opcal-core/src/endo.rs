//! The endomorphism operad `End_A` of a finite-dimensional based algebra,
//! and the explicit associative-algebra formulas used as an independent
//! cross-check of the generic operad calculus.
//!
//! The generic route computes everything through partial compositions on
//! dense tensors. The `*_explicit` functions below instead evaluate the
//! classical formulas (Hochschild coboundary, cup product, the maps `θ`
//! and `d_λ`, the Frölicher–Nijenhuis and derived brackets) term by term on
//! basis inputs; they never call the composition engine, which is what
//! makes the agreement tests meaningful.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multimap::{multi_indices, AlgebraSpec, MultiMap};
use crate::operad::{Element, Operad};
use crate::rational::{parity, Rat};

/// Partial composition in `End_A`: substitute `g` into input slot `i` of
/// `f`. Coefficient vectors use the crate-wide flatten order.
pub(crate) fn endo_compose(
    d: usize,
    f: &[Rat],
    m: usize,
    i: usize,
    g: &[Rat],
    n: usize,
) -> Vec<Rat> {
    let dp = |k: usize| d.pow(k as u32);
    let pre = dp(i - 1);
    let mid = dp(n);
    let suf = dp(m - i);
    let mut out = vec![Rat::zero(); dp(m + n)];
    for j in 0..d {
        for p in 0..pre {
            for q in 0..mid {
                for t in 0..d {
                    let gv = &g[t * mid + q];
                    if gv.is_zero() {
                        continue;
                    }
                    let f_base = ((j * pre + p) * d + t) * suf;
                    let o_base = ((j * pre + p) * mid + q) * suf;
                    for s in 0..suf {
                        let fv = &f[f_base + s];
                        if fv.is_zero() {
                            continue;
                        }
                        out[o_base + s] += fv * gv;
                    }
                }
            }
        }
    }
    out
}

/// Builds `End_A` from an algebra description and packages its product
/// table as an arity-2 element. Associativity is not required here, so
/// candidate non-multiplications can be classified too.
pub fn build_endomorphism_operad(spec: &AlgebraSpec) -> (Arc<Operad>, Element) {
    let op = Arc::new(Operad::Endo {
        dim: spec.dimension(),
    });
    let pi = Element::new(&op, 2, spec.product_map().flatten())
        .expect("product tensor has the arity-2 dimension");
    (op, pi)
}

/// Repackages a dense multilinear map as an element of an `End_A` instance.
pub fn element_from_multimap(op: &Arc<Operad>, mm: &MultiMap) -> Result<Element> {
    match **op {
        Operad::Endo { dim } if dim == mm.dim() => Element::new(op, mm.arity(), mm.flatten()),
        _ => Err(Error::InstanceMismatch),
    }
}

/// The dense tensor behind an `End_A` element.
pub fn multimap_from_element(el: &Element) -> Result<MultiMap> {
    match **el.operad() {
        Operad::Endo { dim } => MultiMap::new(el.arity(), dim, el.coeffs().to_vec()),
        _ => Err(Error::InstanceMismatch),
    }
}

/// Product of two value columns under the structure constants of `pi`.
pub(crate) fn mul_vectors(pi: &MultiMap, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
    let d = pi.dim();
    let mut out = vec![Rat::zero(); d];
    for (s, us) in u.iter().enumerate() {
        if us.is_zero() {
            continue;
        }
        for (t, vt) in v.iter().enumerate() {
            if vt.is_zero() {
                continue;
            }
            let c = us * vt;
            for (j, o) in out.iter_mut().enumerate() {
                let p = pi.get(j, &[s, t]);
                if !p.is_zero() {
                    *o += &c * p;
                }
            }
        }
    }
    out
}

pub(crate) fn basis_vector(d: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); d];
    v[i] = Rat::one();
    v
}

/// Evaluates `f` on arguments that are value columns rather than basis
/// indices, by multilinearity.
pub(crate) fn eval_on_vectors(f: &MultiMap, args: &[Vec<Rat>]) -> Vec<Rat> {
    let d = f.dim();
    let mut out = vec![Rat::zero(); d];
    let mut idx = vec![0usize; f.arity()];
    loop {
        let mut weight = Rat::one();
        let mut zero = false;
        for (k, &i) in idx.iter().enumerate() {
            let c = &args[k][i];
            if c.is_zero() {
                zero = true;
                break;
            }
            weight *= c;
        }
        if !zero {
            for (j, o) in out.iter_mut().enumerate() {
                let c = f.get(j, &idx);
                if !c.is_zero() {
                    *o += &weight * c;
                }
            }
        }
        let mut pos = f.arity();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < d {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub(crate) fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub(crate) fn add_scaled(acc: &mut [Rat], v: &[Rat], negate: bool) {
    for (a, b) in acc.iter_mut().zip(v) {
        if negate {
            *a -= b;
        } else {
            *a += b;
        }
    }
}

/// True when the product table is associative:
/// `(e_a·e_b)·e_c = e_a·(e_b·e_c)` for all basis triples.
pub fn is_associative(pi: &MultiMap) -> bool {
    let d = pi.dim();
    for a in 0..d {
        for b in 0..d {
            let ab = pi.evaluate(&[a, b]).expect("valid basis pair");
            for c in 0..d {
                let bc = pi.evaluate(&[b, c]).expect("valid basis pair");
                let left = mul_vectors(pi, &ab, &basis_vector(d, c));
                let right = mul_vectors(pi, &basis_vector(d, a), &bc);
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Builds an arity-`(m+1)` map from a rule producing its value column on
/// every basis multi-index.
pub(crate) fn from_rule(
    arity: usize,
    dim: usize,
    mut rule: impl FnMut(&[usize]) -> Vec<Rat>,
) -> MultiMap {
    let mut out = MultiMap::zero(arity, dim);
    for a in multi_indices(arity, dim) {
        let col = rule(&a);
        for (j, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                out.add_to(j, &a, &v);
            }
        }
    }
    out
}

/// The classical Hochschild coboundary
/// `δf(a_1,…,a_{m+1}) = a_1·f(a_2,…) + (−1)^{m+1} f(…,a_m)·a_{m+1}
///  + Σ_i (−1)^i f(…, a_i·a_{i+1}, …)`.
///
/// Requires an associative product; used as the oracle for the generic
/// `δ_π`.
pub fn hochschild_delta_explicit(pi: &MultiMap, f: &MultiMap) -> Result<MultiMap> {
    if !is_associative(pi) {
        return Err(Error::NotAMultiplication);
    }
    let d = pi.dim();
    let m = f.arity();
    Ok(from_rule(m + 1, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let head = f.evaluate(&a[1..]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &basis_vector(d, a[0]), &head),
            false,
        );
        let tail = f.evaluate(&a[..m]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &tail, &basis_vector(d, a[m])),
            parity(m + 1),
        );
        for i in 1..=m {
            let merged = pi.evaluate(&[a[i - 1], a[i]]).expect("basis inputs");
            if is_zero_vec(&merged) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(m);
            for (k, &idx) in a.iter().enumerate().take(i - 1) {
                let _ = k;
                args.push(basis_vector(d, idx));
            }
            args.push(merged);
            for &idx in &a[i + 1..] {
                args.push(basis_vector(d, idx));
            }
            add_scaled(&mut acc, &eval_on_vectors(f, &args), parity(i));
        }
        acc
    }))
}

/// The classical cup product `(f ∪ g)(a_1,…,a_{m+n}) = f(a_1,…,a_m)·g(a_{m+1},…,a_{m+n})`.
pub fn cup_explicit(pi: &MultiMap, f: &MultiMap, g: &MultiMap) -> MultiMap {
    let d = pi.dim();
    let (m, n) = (f.arity(), g.arity());
    from_rule(m + n, d, |a| {
        let fv = f.evaluate(&a[..m]).expect("basis inputs");
        let gv = g.evaluate(&a[m..]).expect("basis inputs");
        mul_vectors(pi, &fv, &gv)
    })
}

/// `θf(a_1,…,a_{m+1}) = −f(a_1,…,a_m)·a_{m+1} + (−1)^m a_1·f(a_2,…,a_{m+1})`.
pub fn theta_explicit(pi: &MultiMap, f: &MultiMap) -> MultiMap {
    let d = pi.dim();
    let m = f.arity();
    from_rule(m + 1, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let head = f.evaluate(&a[..m]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &head, &basis_vector(d, a[m])),
            true,
        );
        let tail = f.evaluate(&a[1..]).expect("basis inputs");
        add_scaled(
            &mut acc,
            &mul_vectors(pi, &basis_vector(d, a[0]), &tail),
            parity(m),
        );
        acc
    })
}

/// `d_λf(a_1,…,a_{m+1}) = λ Σ_i (−1)^i f(a_1,…, a_i·a_{i+1}, …, a_{m+1})`.
pub fn d_lambda_explicit(pi: &MultiMap, lambda: &Rat, f: &MultiMap) -> MultiMap {
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
                args.push(basis_vector(d, idx));
            }
            args.push(merged);
            for &idx in &a[i + 1..] {
                args.push(basis_vector(d, idx));
            }
            add_scaled(&mut acc, &eval_on_vectors(f, &args), parity(i));
        }
        acc.iter_mut().for_each(|v| *v *= lambda);
        acc
    })
}

/// The explicit Frölicher–Nijenhuis bracket on an associative algebra:
/// cup terms plus signed insertions of the Hochschild coboundaries.
pub fn fn_bracket_explicit(pi: &MultiMap, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let d = pi.dim();
    let (m, n) = (f.arity(), g.arity());
    let delta_f = hochschild_delta_explicit(pi, f)?;
    let delta_g = hochschild_delta_explicit(pi, g)?;
    Ok(from_rule(m + n, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let fv = f.evaluate(&a[..m]).expect("basis inputs");
        let gv = g.evaluate(&a[m..]).expect("basis inputs");
        add_scaled(&mut acc, &mul_vectors(pi, &fv, &gv), false);
        let gv2 = g.evaluate(&a[..n]).expect("basis inputs");
        let fv2 = f.evaluate(&a[n..]).expect("basis inputs");
        add_scaled(&mut acc, &mul_vectors(pi, &gv2, &fv2), !parity(m * n));
        for i in 1..=n {
            let window = delta_f.evaluate(&a[i - 1..i + m]).expect("basis inputs");
            if is_zero_vec(&window) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(n);
            for &idx in &a[..i - 1] {
                args.push(basis_vector(d, idx));
            }
            args.push(window);
            for &idx in &a[i + m..] {
                args.push(basis_vector(d, idx));
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
                args.push(basis_vector(d, idx));
            }
            args.push(window);
            for &idx in &a[i + n..] {
                args.push(basis_vector(d, idx));
            }
            add_scaled(
                &mut acc,
                &eval_on_vectors(f, &args),
                !parity((m + 1) * n + (i - 1) * n),
            );
        }
        acc
    }))
}

/// The explicit derived bracket on an associative algebra: cup terms plus
/// signed insertions of `f(…)·a + (−1)^{m−1} a·f(…)` windows.
pub fn derived_bracket_explicit(pi: &MultiMap, f: &MultiMap, g: &MultiMap) -> MultiMap {
    let d = pi.dim();
    let (m, n) = (f.arity(), g.arity());
    // window_f[t; a_i..a_{i+m}] = f(a_i..a_{i+m−1})·a_{i+m} + (−1)^{m−1} a_i·f(a_{i+1}..a_{i+m})
    let window = |h: &MultiMap, k: usize, a: &[usize]| -> Vec<Rat> {
        let mut w = vec![Rat::zero(); d];
        let head = h.evaluate(&a[..k]).expect("basis inputs");
        add_scaled(
            &mut w,
            &mul_vectors(pi, &head, &basis_vector(d, a[k])),
            false,
        );
        let tail = h.evaluate(&a[1..]).expect("basis inputs");
        add_scaled(
            &mut w,
            &mul_vectors(pi, &basis_vector(d, a[0]), &tail),
            parity(k + 1),
        );
        w
    };
    from_rule(m + n, d, |a| {
        let mut acc = vec![Rat::zero(); d];
        let fv = f.evaluate(&a[..m]).expect("basis inputs");
        let gv = g.evaluate(&a[m..]).expect("basis inputs");
        add_scaled(&mut acc, &mul_vectors(pi, &fv, &gv), false);
        let gv2 = g.evaluate(&a[..n]).expect("basis inputs");
        let fv2 = f.evaluate(&a[n..]).expect("basis inputs");
        add_scaled(&mut acc, &mul_vectors(pi, &gv2, &fv2), !parity(m * n));
        for i in 1..=n {
            let w = window(f, m, &a[i - 1..i + m]);
            if is_zero_vec(&w) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(n);
            for &idx in &a[..i - 1] {
                args.push(basis_vector(d, idx));
            }
            args.push(w);
            for &idx in &a[i + m..] {
                args.push(basis_vector(d, idx));
            }
            add_scaled(&mut acc, &eval_on_vectors(g, &args), !parity((i - 1) * m));
        }
        for i in 1..=m {
            let w = window(g, n, &a[i - 1..i + n]);
            if is_zero_vec(&w) {
                continue;
            }
            let mut args: Vec<Vec<Rat>> = Vec::with_capacity(m);
            for &idx in &a[..i - 1] {
                args.push(basis_vector(d, idx));
            }
            args.push(w);
            for &idx in &a[i + n..] {
                args.push(basis_vector(d, idx));
            }
            add_scaled(
                &mut acc,
                &eval_on_vectors(f, &args),
                parity(m * n + (i - 1) * n),
            );
        }
        acc
    })
}
