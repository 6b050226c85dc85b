//! The tree operad `Q_n = Hom(k[Y_n], P_n)` over an underlying instance,
//! the case-defined map `θ^Q`, the averaging derived bracket `⟦ , ⟧_D`,
//! and the coboundary `d_r` of an averaging element.
//!
//! A `Q`-element stores one `P_n` payload per tree of `Y_n`, blocks in the
//! canonical tree order. Composition evaluates
//! `(F ∘^Q_i G)(T) = F(R_0^{m;i,n}(T)) ∘_i G(R_i^{m;i,n}(T))`.
//!
//! `θ^Q` is defined by two cases — the outer restriction being the right
//! comb (root's left subtree a single leaf) or the left comb (root's
//! right subtree a single leaf). The cases are mutually exclusive; on
//! trees where neither applies the value is extended by zero, the minimal
//! linear extension. At `m = 1`, the only arity the Maurer–Cartan
//! computation uses, the two cases are exhaustive.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::operad::{same_instance, Element, Operad, TreeOperad};
use crate::operators::{averaging_defects, classify, OperatorKind};
use crate::ops::{contraction, cup_bracket, partial_compose, Multiplication};
use crate::rational::{parity, ratio, Rat};
use crate::tree::{enumerate_trees, restriction, PlanarBinaryTree, Restriction};

/// Index pairs of the two restrictions of every tree in `Y_{m+n−1}`.
pub(crate) fn restriction_table(m: usize, i: usize, n: usize) -> Result<Vec<(usize, usize)>> {
    let trees_out = enumerate_trees(m + n - 1);
    let index_m: BTreeMap<PlanarBinaryTree, usize> = enumerate_trees(m)
        .into_iter()
        .enumerate()
        .map(|(idx, t)| (t, idx))
        .collect();
    let index_n: BTreeMap<PlanarBinaryTree, usize> = enumerate_trees(n)
        .into_iter()
        .enumerate()
        .map(|(idx, t)| (t, idx))
        .collect();
    let mut table = Vec::with_capacity(trees_out.len());
    for t in &trees_out {
        let outer_tree = restriction(t, m, i, n, Restriction::Outer)?;
        let inner_tree = restriction(t, m, i, n, Restriction::Inner)?;
        let oi = index_m[&outer_tree];
        let ii = index_n[&inner_tree];
        table.push((oi, ii));
    }
    Ok(table)
}

/// Partial composition in `Q` on raw block vectors.
pub(crate) fn tree_compose(
    q: &TreeOperad,
    f: &[Rat],
    m: usize,
    i: usize,
    g: &[Rat],
    n: usize,
) -> Result<Vec<Rat>> {
    let inner = &q.inner;
    let computed;
    let table = match q.tables.get(&(m, i, n)) {
        Some(t) => t,
        None => {
            computed = restriction_table(m, i, n)?;
            &computed
        }
    };
    let bm = inner.dim(m)?;
    let bn = inner.dim(n)?;
    let bo = inner.dim(m + n - 1)?;
    let mut out = Vec::with_capacity(table.len() * bo);
    for &(oi, ii) in table {
        let block = inner.compose(
            &f[oi * bm..(oi + 1) * bm],
            m,
            i,
            &g[ii * bn..(ii + 1) * bn],
            n,
        )?;
        out.extend(block);
    }
    Ok(out)
}

/// Builds `Q` over the given instance, with restriction tables
/// precomputed for compositions landing in arities up to 7.
pub fn build_tree_operad(inner: &Arc<Operad>) -> Arc<Operad> {
    build_tree_operad_with_cap(inner, 7)
}

/// Builds `Q` with restriction tables up to the given result arity;
/// compositions beyond the cap still work, recomputing restrictions per
/// call.
pub fn build_tree_operad_with_cap(inner: &Arc<Operad>, cap: usize) -> Arc<Operad> {
    let mut tables = BTreeMap::new();
    for arity in 1..=cap {
        for m in 1..=arity {
            let n = arity + 1 - m;
            for i in 1..=m {
                let table = restriction_table(m, i, n).expect("restrictions exist for valid slots");
                tables.insert((m, i, n), table);
            }
        }
    }
    Arc::new(Operad::Tree(TreeOperad {
        inner: Arc::clone(inner),
        tables,
    }))
}

fn tree_instance(q: &Arc<Operad>) -> Result<&TreeOperad> {
    match &**q {
        Operad::Tree(t) => Ok(t),
        _ => Err(Error::InstanceMismatch),
    }
}

/// The lift sending every tree of `Y_n` to the same payload; `r ↦ r̃` at
/// arity 1, `π ↦ π^Q` at arity 2.
pub fn constant_lift(q: &Arc<Operad>, payload: &Element) -> Result<Element> {
    let t = tree_instance(q)?;
    if !same_instance(payload.operad(), &t.inner) {
        return Err(Error::InstanceMismatch);
    }
    let copies = crate::tree::catalan(payload.arity());
    let mut coeffs = Vec::with_capacity(copies * payload.coeffs().len());
    for _ in 0..copies {
        coeffs.extend_from_slice(payload.coeffs());
    }
    Element::new(q, payload.arity(), coeffs)
}

/// Builds a `Q`-element from one payload per tree, in canonical order.
pub fn from_table(q: &Arc<Operad>, arity: usize, table: &[Element]) -> Result<Element> {
    let t = tree_instance(q)?;
    if table.len() != crate::tree::catalan(arity) {
        return Err(Error::BadCoefficientCount {
            expected: crate::tree::catalan(arity),
            got: table.len(),
        });
    }
    let mut coeffs = Vec::new();
    for e in table {
        if e.arity() != arity {
            return Err(Error::WrongArity {
                expected: arity,
                got: e.arity(),
            });
        }
        if !same_instance(e.operad(), &t.inner) {
            return Err(Error::InstanceMismatch);
        }
        coeffs.extend_from_slice(e.coeffs());
    }
    Element::new(q, arity, coeffs)
}

/// The payload of `F` at one tree.
pub fn tree_component(f: &Element, tree: &PlanarBinaryTree) -> Result<Element> {
    let t = tree_instance(f.operad())?;
    let n = f.arity();
    if tree.weight() != n {
        return Err(Error::TreeArityMismatch {
            expected: n,
            got: tree.weight(),
        });
    }
    let block = t.inner.dim(n)?;
    let idx = crate::tree::tree_index(tree);
    Element::new(
        &t.inner,
        n,
        f.coeffs()[idx * block..(idx + 1) * block].to_vec(),
    )
}

/// The multiplication `π^Q` sending both `Y_2` trees to `π`.
pub fn lift_multiplication(q: &Arc<Operad>, pi: &Multiplication) -> Result<Multiplication> {
    Multiplication::new(constant_lift(q, pi.element())?)
}

/// `θ^Q F`, the case-defined analogue of `θ` on tree cochains.
pub fn theta_q(pi: &Multiplication, f: &Element) -> Result<Element> {
    let q = f.operad().clone();
    let t = tree_instance(&q)?;
    if !same_instance(pi.element().operad(), &t.inner) {
        return Err(Error::InstanceMismatch);
    }
    let m = f.arity();
    let p = pi.element();
    let right_comb = PlanarBinaryTree::right_comb(2);
    let left_comb = PlanarBinaryTree::left_comb(2);
    let index_m: BTreeMap<PlanarBinaryTree, usize> = enumerate_trees(m)
        .into_iter()
        .enumerate()
        .map(|(idx, tr)| (tr, idx))
        .collect();
    let block = t.inner.dim(m)?;
    let payload_at = |idx: usize| -> Result<Element> {
        Element::new(
            &t.inner,
            m,
            f.coeffs()[idx * block..(idx + 1) * block].to_vec(),
        )
    };
    let mut table = Vec::new();
    for tree in enumerate_trees(m + 1) {
        if restriction(&tree, 2, 2, m, Restriction::Outer)? == right_comb {
            let rest = restriction(&tree, 2, 2, m, Restriction::Inner)?;
            let payload = payload_at(index_m[&rest])?;
            table.push(partial_compose(p, 2, &payload)?.neg_if(parity(m)));
        } else if restriction(&tree, 2, 1, m, Restriction::Outer)? == left_comb {
            let rest = restriction(&tree, 2, 1, m, Restriction::Inner)?;
            let payload = payload_at(index_m[&rest])?;
            table.push(partial_compose(p, 1, &payload)?.neg());
        } else {
            table.push(Element::zero(&t.inner, m + 1)?);
        }
    }
    from_table(&q, m + 1, &table)
}

/// The averaging derived bracket
/// `⟦F,G⟧_D = [F,G]_{π^Q} + ι_{θ^QF} G − (−1)^{mn} ι_{θ^QG} F`.
pub fn avg_derived_bracket(pi: &Multiplication, f: &Element, g: &Element) -> Result<Element> {
    if !f.same_instance(g) {
        return Err(Error::InstanceMismatch);
    }
    let q = f.operad().clone();
    let pi_q = lift_multiplication(&q, pi)?;
    let (m, n) = (f.arity(), g.arity());
    let mut acc = cup_bracket(&pi_q, f, g)?;
    acc = acc.add(&contraction(g, &theta_q(pi, f)?)?);
    acc = acc.sub(&contraction(f, &theta_q(pi, g)?)?.neg_if(parity(m * n)));
    Ok(acc)
}

/// Maurer–Cartan expression `½⟦r̃, r̃⟧_D` of an arity-1 element of the
/// underlying instance; zero exactly when `r` is averaging.
pub fn mc_defect_averaging(pi: &Multiplication, r: &Element) -> Result<Element> {
    if r.arity() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            got: r.arity(),
        });
    }
    let q = build_tree_operad_with_cap(r.operad(), 3);
    let lifted = constant_lift(&q, r)?;
    Ok(avg_derived_bracket(pi, &lifted, &lifted)?.scale(&ratio(1, 2)))
}

/// `d_r(F) = −⟦r̃, F⟧_D` for an averaging element `r`.
pub fn d_r_avg(pi: &Multiplication, r: &Element, f: &Element) -> Result<Element> {
    if !classify(pi, r, OperatorKind::Averaging, None)?.holds {
        return Err(Error::NotOperator { kind: "averaging" });
    }
    let q = f.operad().clone();
    let _ = tree_instance(&q)?;
    let lifted = constant_lift(&q, r)?;
    Ok(avg_derived_bracket(pi, &lifted, f)?.neg())
}

/// The two residuals of the averaging identity in the order matching the
/// two `Y_2` combs: `⟦r̃,r̃⟧_D` equals twice (lhs − r∘_1(π∘_2r)) on the
/// right comb and twice (lhs − r∘_1(π∘_1r)) on the left comb.
pub fn averaging_pair_oracle(pi: &Multiplication, r: &Element) -> Result<(Element, Element)> {
    let (first, second) = averaging_defects(pi, r)?;
    // averaging_defects returns (lhs − r∘_1(π∘_1r), lhs − r∘_1(π∘_2r)).
    Ok((second, first))
}
