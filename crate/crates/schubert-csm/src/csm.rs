//! CSM classes of Schubert cells and varieties, their equivariant
//! versions, push-forwards to G/P, and the layered sweep driver used by
//! the verification commands.
//!
//! The cell class is generated by the recursion
//! `csm(X(w)) = T_k(csm(X(w s_k)))` for a right descent k, starting from
//! the point class: applying T along a reduced word of w, first letter
//! first. Sweeps exploit exactly this recursion, computing each layer of
//! the group from the previous one with a single operator application per
//! element.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::coeff::{Coeff, SparsePoly};
use crate::error::Result;
use crate::rootsys::RootSystem;
use crate::schubop::ClassVector;
use crate::weyl::{bruhat_leq, enumerate, ParabolicSubset, WeylElement};

/// CSM class of the Schubert cell X(w) in the Schubert basis, computed
/// along the canonical reduced word of w. The coefficient of [X(w)] and
/// of [X(id)] is always 1.
pub fn csm_cell(rs: &Arc<RootSystem>, w: &WeylElement) -> ClassVector<i64> {
    let mut class = ClassVector::point_class(rs);
    for &k in &w.reduced_word(rs).0 {
        class = class.t_op(k);
    }
    class
}

/// Equivariant CSM class of the Schubert cell X(w); coefficients are
/// integer polynomials in the simple roots, specializing at 0 to the
/// non-equivariant coefficients.
pub fn csm_cell_equiv(rs: &Arc<RootSystem>, w: &WeylElement) -> ClassVector<SparsePoly> {
    let mut class = ClassVector::point_class(rs).to_equivariant();
    for &k in &w.reduced_word(rs).0 {
        class = class.t_op_equiv(k);
    }
    class
}

/// CSM class of the Schubert variety X(w): the sum of the cell classes
/// over the Bruhat interval {v <= w}. Cell classes are shared through the
/// same parent recursion used by the sweeps.
pub fn csm_variety(rs: &Arc<RootSystem>, w: &WeylElement) -> ClassVector<i64> {
    let mut cells: HashMap<WeylElement, ClassVector<i64>> = HashMap::new();
    cells.insert(WeylElement::identity(rs), ClassVector::point_class(rs));
    let mut total = ClassVector::point_class(rs);
    let interval = enumerate(rs, Some(w.length()))
        .expect("length-bounded enumeration is uncapped")
        .filter(|v| bruhat_leq(rs, v, w));
    for v in interval {
        if v.is_identity() {
            continue;
        }
        let k = (1..=rs.rank())
            .find(|&k| v.is_right_descent(k))
            .expect("non-identity element has a descent");
        let parent = v.right_mul_simple(rs, k);
        // v s_k < v <= w, so the parent is already in the table.
        let cell = cells[&parent].t_op(k);
        total = total.add(&cell);
        cells.insert(v, cell);
    }
    total
}

/// Push-forward along G/B -> G/P: a term [X(w)] survives exactly when w
/// is the minimal-length representative of its coset w W_P.
pub fn pushforward_gp<R: Coeff>(
    gamma: &ClassVector<R>,
    p: &ParabolicSubset,
) -> ClassVector<R> {
    let rs = gamma.root_system();
    let mut out = ClassVector::zero(rs);
    for (w, c) in gamma.terms() {
        let rep = w.min_coset_rep(rs, p);
        if rep.length() == w.length() {
            out.add_term(rep, c.clone());
        }
    }
    out
}

/// True iff the codimension-1 graded piece of csm_cell(w) equals
/// c_1(L_rho) . [X(w)], i.e. each coefficient there is <rho, beta^vee>.
pub fn codim1_check(rs: &Arc<RootSystem>, w: &WeylElement) -> bool {
    codim1_check_with(rs, w, &csm_cell(rs, w))
}

/// Same check, reusing an already-computed cell class.
pub fn codim1_check_with(
    rs: &Arc<RootSystem>,
    w: &WeylElement,
    cell: &ClassVector<i64>,
) -> bool {
    if w.length() == 0 {
        return true;
    }
    let piece = cell.graded_piece(w.length() - 1);
    let expected = ClassVector::schubert_class(rs, w).chevalley_mul(&rs.rho());
    piece == expected
}

/// Drive a callback over every cell class with ell(w) <= max_length (or
/// the whole group), layer by layer: each layer's classes derive from the
/// previous layer with one T application, in parallel, and results are
/// returned in the deterministic (length, canonical word) sweep order.
pub fn sweep_cells<T, F>(
    rs: &Arc<RootSystem>,
    max_length: Option<u32>,
    f: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&WeylElement, &ClassVector<i64>) -> T + Sync,
{
    sweep_generic(
        rs,
        max_length,
        ClassVector::point_class(rs),
        |class, k| class.t_op(k),
        f,
    )
}

/// Equivariant version of `sweep_cells`.
pub fn sweep_cells_equiv<T, F>(
    rs: &Arc<RootSystem>,
    max_length: Option<u32>,
    f: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&WeylElement, &ClassVector<SparsePoly>) -> T + Sync,
{
    sweep_generic(
        rs,
        max_length,
        ClassVector::point_class(rs).to_equivariant(),
        |class, k| class.t_op_equiv(k),
        f,
    )
}

fn sweep_generic<R, T, A, F>(
    rs: &Arc<RootSystem>,
    max_length: Option<u32>,
    point: ClassVector<R>,
    apply: A,
    f: F,
) -> Result<Vec<T>>
where
    R: Coeff,
    T: Send,
    A: Fn(&ClassVector<R>, usize) -> ClassVector<R> + Sync,
    F: Fn(&WeylElement, &ClassVector<R>) -> T + Sync,
{
    let mut results = Vec::new();
    let mut layer_elems: Vec<WeylElement> = Vec::new();
    let mut prev: HashMap<WeylElement, ClassVector<R>> = HashMap::new();

    let flush_layer = |elems: &[WeylElement],
                           prev: &HashMap<WeylElement, ClassVector<R>>,
                           results: &mut Vec<T>|
     -> HashMap<WeylElement, ClassVector<R>> {
        let computed: Vec<(WeylElement, ClassVector<R>)> = elems
            .par_iter()
            .map(|w| {
                let class = if w.is_identity() {
                    point.clone()
                } else {
                    let k = (1..=rs.rank())
                        .find(|&k| w.is_right_descent(k))
                        .expect("non-identity element has a descent");
                    let parent = w.right_mul_simple(rs, k);
                    apply(&prev[&parent], k)
                };
                (w.clone(), class)
            })
            .collect();
        let mut next = HashMap::with_capacity(computed.len());
        for (w, class) in computed {
            results.push(f(&w, &class));
            next.insert(w, class);
        }
        next
    };

    let mut current_length = 0;
    for w in enumerate(rs, max_length)? {
        if w.length() != current_length {
            prev = flush_layer(&layer_elems, &prev, &mut results);
            layer_elems.clear();
            current_length = w.length();
        }
        layer_elems.push(w);
    }
    if !layer_elems.is_empty() {
        flush_layer(&layer_elems, &prev, &mut results);
    }
    Ok(results)
}
