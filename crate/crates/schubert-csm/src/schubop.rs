//! Class vectors in the Schubert basis and the operator algebra acting on
//! them: the BGG operator, the right Weyl action, Chevalley multiplication,
//! the Demazure-Lusztig-type operators T_k = d_k - s_k and their
//! equivariant version.
//!
//! Every operator acts basis-element-wise and is extended linearly; results
//! stay in normalized sparse form (no stored zero coefficients), so the
//! involution and anticommutation identities are exact term comparisons.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coeff::{Coeff, SparsePoly};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylElement, Word};

/// A finitely supported association from Weyl elements to coefficients in
/// R: an element of H_*(G/B) (or its equivariant version) written in the
/// Schubert basis. The Schubert class [X(w)] is the unit vector at w.
#[derive(Debug, Clone)]
pub struct ClassVector<R: Coeff> {
    rs: Arc<RootSystem>,
    terms: HashMap<WeylElement, R>,
}

impl<R: Coeff> PartialEq for ClassVector<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rs.lie_type() == other.rs.lie_type()
            && self.rs.rank() == other.rs.rank()
            && self.terms == other.terms
    }
}
impl<R: Coeff> Eq for ClassVector<R> {}

impl<R: Coeff> ClassVector<R> {
    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        ClassVector {
            rs: Arc::clone(rs),
            terms: HashMap::new(),
        }
    }

    /// The Schubert class [X(w)].
    pub fn schubert_class(rs: &Arc<RootSystem>, w: &WeylElement) -> Self {
        let mut cv = Self::zero(rs);
        cv.terms.insert(w.clone(), R::one());
        cv
    }

    /// [pt] = [X(id)].
    pub fn point_class(rs: &Arc<RootSystem>) -> Self {
        Self::schubert_class(rs, &WeylElement::identity(rs))
    }

    pub fn from_terms(rs: &Arc<RootSystem>, terms: impl IntoIterator<Item = (WeylElement, R)>) -> Self {
        let mut cv = Self::zero(rs);
        for (w, c) in terms {
            cv.add_term(w, c);
        }
        cv
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &WeylElement) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &R)> {
        self.terms.iter()
    }

    /// Accumulate a term, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, w: WeylElement, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.negated());
        }
        out
    }

    pub fn negated(&self) -> Self {
        ClassVector {
            rs: Arc::clone(&self.rs),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.negated()))
                .collect(),
        }
    }

    pub fn scaled(&self, v: i64) -> Self {
        if v == 0 {
            return Self::zero(&self.rs);
        }
        ClassVector {
            rs: Arc::clone(&self.rs),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.scaled(v)))
                .collect(),
        }
    }

    /// Terms sorted by length, then canonical reduced word.
    pub fn sorted_terms(&self) -> Vec<(WeylElement, R)> {
        let mut decorated: Vec<(Word, WeylElement, R)> = self
            .terms
            .iter()
            .map(|(w, c)| (w.reduced_word(&self.rs), w.clone(), c.clone()))
            .collect();
        decorated.sort_by(|a, b| {
            a.0 .0
                .len()
                .cmp(&b.0 .0.len())
                .then_with(|| a.0 .0.cmp(&b.0 .0))
        });
        decorated.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    /// The sub-vector of terms indexed by elements of the given length.
    pub fn graded_piece(&self, length: u32) -> Self {
        ClassVector {
            rs: Arc::clone(&self.rs),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.length() == length)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The BGG operator d_k: [X(w)] -> [X(w s_k)] when the length goes up,
    /// 0 otherwise. The same rule in both coefficient rings.
    pub fn bgg_delta(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            if !w.is_right_descent(k) {
                out.add_term(w.right_mul_simple(&self.rs, k), c.clone());
            }
        }
        out
    }
}

/// True iff w(beta_b) is a negative root, for every positive root index b.
fn neg_flags(rs: &RootSystem, w: &WeylElement) -> Vec<bool> {
    let r = rs.rank();
    let act = w.action_matrix();
    rs.roots_i8()
        .iter()
        .map(|beta| {
            for i in 0..r {
                let mut acc = 0i64;
                for (j, &bj) in beta.iter().enumerate() {
                    if bj != 0 {
                        acc += i64::from(bj) * i64::from(act[j * r + i]);
                    }
                }
                if acc != 0 {
                    return acc < 0;
                }
            }
            unreachable!("the image of a root is never zero")
        })
        .collect()
}

/// ell(v s_beta) == ell(v) - 1, where `neg` holds the signs of v on the
/// positive roots: count positive roots sent negative by v s_beta through
/// the precomputed reflection table.
fn length_down_one(rs: &RootSystem, neg: &[bool], len_v: u32, b: usize) -> bool {
    if len_v == 0 {
        return false;
    }
    let target = len_v - 1;
    let mut count = 0u32;
    for &t in rs.refl_table(b) {
        let (idx, flip) = if t > 0 {
            ((t - 1) as usize, false)
        } else {
            ((-t - 1) as usize, true)
        };
        if neg[idx] ^ flip {
            count += 1;
            if count > target {
                return false;
            }
        }
    }
    count == target
}

/// Adds `sum <alpha_k, beta^vee> c [X(v s_beta)]` over positive beta
/// distinct from alpha_k with ell(v s_beta) = ell(v) - 1. This is the
/// correction sum shared by the right Weyl action and the T operators
/// (with v = w s_k, so the condition reads ell(w) = ell(w s_k s_beta)).
fn correction_sum<R: Coeff>(
    out: &mut ClassVector<R>,
    rs: &RootSystem,
    v: &WeylElement,
    k: usize,
    c: &R,
    sign: i64,
) {
    let alpha_idx = rs
        .positive_root_index(rs.simple_root(k).coords())
        .expect("simple root is positive");
    let neg = neg_flags(rs, v);
    let new_len = v.length() - 1;
    for b in 0..rs.num_positive_roots() {
        if b == alpha_idx {
            continue;
        }
        let pair = rs.simple_pairing(k, b);
        if pair == 0 || !neg[b] {
            continue;
        }
        if !length_down_one(rs, &neg, v.length(), b) {
            continue;
        }
        out.add_term(v.mul_by_reflection(rs, b, new_len), c.scaled(pair * sign));
    }
}

impl ClassVector<i64> {
    /// The right Weyl action of s_k on Schubert classes:
    /// `[X(w)]` if the length drops, otherwise
    /// `-[X(w)] - sum <alpha_k, beta^vee> [X(w s_k s_beta)]`.
    ///
    /// Non-equivariant only: the equivariant right action carries extra
    /// terms and all equivariant computation goes through `t_op_equiv`.
    pub fn weyl_sk(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            if w.is_right_descent(k) {
                out.add_term(w.clone(), *c);
            } else {
                out.add_term(w.clone(), c.negated());
                let v = w.right_mul_simple(&self.rs, k);
                correction_sum(&mut out, &self.rs, &v, k, c, -1);
            }
        }
        out
    }

    /// The Chevalley formula: c_1(L_lambda) . [X(w)] =
    /// `sum <lambda, beta^vee> [X(w s_beta)]` over positive beta with
    /// ell(w s_beta) = ell(w) - 1.
    pub fn chevalley_mul(&self, lambda: &Weight) -> Self {
        let rs = &self.rs;
        let pairings: Vec<i64> = rs
            .positive_coroots()
            .iter()
            .map(|co| rs.pairing_unchecked(lambda.coords(), co.coords()))
            .collect();
        let mut out = Self::zero(rs);
        for (w, c) in &self.terms {
            if w.length() == 0 {
                continue;
            }
            let neg = neg_flags(rs, w);
            let new_len = w.length() - 1;
            for (b, &pair) in pairings.iter().enumerate() {
                if pair == 0 || !neg[b] {
                    continue;
                }
                if !length_down_one(rs, &neg, w.length(), b) {
                    continue;
                }
                out.add_term(w.mul_by_reflection(rs, b, new_len), c.scaled(pair));
            }
        }
        out
    }

    /// The operator T_k = d_k - s_k on Schubert classes:
    /// `-[X(w)]` if the length drops, otherwise
    /// `[X(w s_k)] + [X(w)] + sum <alpha_k, beta^vee> [X(w s_k s_beta)]`.
    pub fn t_op(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.rs);
        for (w, c) in &self.terms {
            if w.is_right_descent(k) {
                out.add_term(w.clone(), c.negated());
            } else {
                let v = w.right_mul_simple(&self.rs, k);
                out.add_term(w.clone(), *c);
                out.add_term(v.clone(), *c);
                correction_sum(&mut out, &self.rs, &v, k, c, 1);
            }
        }
        out
    }

    /// T_w for a word in the simple reflections, as the operator product
    /// T_{i1} ... T_{ik} (the rightmost factor acts first). The result
    /// depends only on the group element the word represents.
    pub fn t_word(&self, word: &[usize]) -> Self {
        let mut acc = self.clone();
        for &k in word.iter().rev() {
            acc = acc.t_op(k);
        }
        acc
    }

    /// Embed into the equivariant theory with constant coefficients.
    pub fn to_equivariant(&self) -> ClassVector<SparsePoly> {
        ClassVector {
            rs: Arc::clone(&self.rs),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), SparsePoly::constant(*c)))
                .collect(),
        }
    }
}

impl ClassVector<SparsePoly> {
    /// The equivariant operator T_k^T on Schubert classes:
    /// `-[X(w)]` if the length drops, otherwise
    /// `(1 + w(alpha_k))[X(w s_k)] + [X(w)] + sum <alpha_k, beta^vee>
    /// [X(w s_k s_beta)]`, with w(alpha_k) expanded in the simple roots.
    pub fn t_op_equiv(&self, k: usize) -> Self {
        let rs = &self.rs;
        let alpha_k = rs.simple_root(k);
        let mut out = Self::zero(rs);
        for (w, c) in &self.terms {
            if w.is_right_descent(k) {
                out.add_term(w.clone(), c.negated());
            } else {
                let v = w.right_mul_simple(rs, k);
                let w_alpha = w.apply_to_root(&alpha_k);
                let factor = &SparsePoly::one() + &SparsePoly::from_root_coords(w_alpha.coords());
                out.add_term(w.clone(), c.clone());
                out.add_term(v.clone(), c * &factor);
                correction_sum(&mut out, rs, &v, k, c, 1);
            }
        }
        out
    }

    /// Coefficient-wise evaluation at a1 = ... = ar = 0; recovers the
    /// non-equivariant class.
    pub fn constant_terms(&self) -> ClassVector<i64> {
        let mut out = ClassVector::zero(&self.rs);
        for (w, c) in &self.terms {
            let ct = c.constant_term();
            let v = i64::try_from(&ct).expect("constant term exceeds i64");
            out.add_term(w.clone(), v);
        }
        out
    }
}
