//! Weyl group elements, words, Bruhat order, enumeration and parabolic
//! quotients.
//!
//! An element is represented by its integer matrix action on simple-root
//! coordinates (column j = image of alpha_j), together with its cached
//! length. The matrix, flattened, is the identity key: equality, hashing
//! and ordering all go through it, uniformly across types.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootsys::{LieType, Root, RootSystem};

/// Cap on full Weyl-group enumeration; bound the length to go past it.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// A Weyl group element: its action on simple-root coordinates
/// (column-major, column j = coordinates of w(alpha_{j+1})) and its length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    length: u32,
    rank: u8,
    action: Arc<[i8]>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len {}, {:?})", self.length, &self.action[..])
    }
}

/// A word in the simple reflections, letters 1..=rank.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Word(Vec::new()));
        }
        let mut letters = Vec::new();
        for tok in s.split(',') {
            let k: usize = tok.trim().parse().map_err(|_| Error::ParseElement {
                input: s.to_string(),
                reason: format!("`{tok}` is not a simple-reflection index"),
            })?;
            letters.push(k);
        }
        Ok(Word(letters))
    }
}

/// A subset of the simple-reflection indices 1..=rank, defining W_P.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParabolicSubset(pub BTreeSet<usize>);

impl ParabolicSubset {
    pub fn new(rs: &RootSystem, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for k in indices {
            if k == 0 || k > rs.rank() {
                return Err(Error::InvalidParabolic {
                    index: k,
                    rank: rs.rank(),
                });
            }
            set.insert(k);
        }
        Ok(ParabolicSubset(set))
    }

    pub fn empty() -> Self {
        ParabolicSubset(BTreeSet::new())
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.contains(&k)
    }
}

impl WeylElement {
    /// The identity element.
    pub fn identity(rs: &RootSystem) -> WeylElement {
        let r = rs.rank();
        let mut m = vec![0i8; r * r];
        for j in 0..r {
            m[j * r + j] = 1;
        }
        WeylElement {
            length: 0,
            rank: r as u8,
            action: m.into(),
        }
    }

    /// The simple reflection s_k, 1-based.
    pub fn simple(rs: &RootSystem, k: usize) -> WeylElement {
        Self::identity(rs).right_mul_simple(rs, k)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Flattened action matrix (column-major over simple-root coordinates).
    pub fn action_matrix(&self) -> &[i8] {
        &self.action
    }

    pub(crate) fn action_key(&self) -> Arc<[i8]> {
        Arc::clone(&self.action)
    }

    /// Coordinates of w(alpha_k), 1-based k: column k of the action matrix.
    pub fn image_of_simple(&self, k: usize) -> &[i8] {
        let r = self.rank as usize;
        &self.action[(k - 1) * r..k * r]
    }

    /// Image of a root under the action, in simple-root coordinates.
    pub fn apply_to_root(&self, beta: &Root) -> Root {
        let r = self.rank as usize;
        let mut out = vec![0i64; r];
        for (j, &bj) in beta.coords().iter().enumerate() {
            if bj != 0 {
                let column = &self.action[j * r..(j + 1) * r];
                for (o, &a) in out.iter_mut().zip(column) {
                    *o += bj * i64::from(a);
                }
            }
        }
        Root(out)
    }

    /// True iff ell(w s_k) < ell(w), i.e. w(alpha_k) is a negative root.
    pub fn is_right_descent(&self, k: usize) -> bool {
        self.image_of_simple(k).iter().all(|&c| c <= 0)
    }

    /// w * s_k with the length updated in O(rank^2).
    pub fn right_mul_simple(&self, rs: &RootSystem, k: usize) -> WeylElement {
        let r = self.rank as usize;
        let descent = self.is_right_descent(k);
        let mut m: Vec<i8> = self.action.to_vec();
        // Column j of w*S_k is col_j - a_{k,j} col_k; column k flips sign.
        let col_k: Vec<i8> = self.image_of_simple(k).to_vec();
        for j in 0..r {
            let a = rs.cartan_entry(k, j + 1);
            if a != 0 {
                for i in 0..r {
                    let v = i64::from(m[j * r + i]) - a * i64::from(col_k[i]);
                    m[j * r + i] = i8::try_from(v).expect("action entry exceeds i8");
                }
            }
        }
        WeylElement {
            length: if descent { self.length - 1 } else { self.length + 1 },
            rank: self.rank,
            action: m.into(),
        }
    }

    /// self * s_beta for the b-th positive root, with the length supplied
    /// by the caller (operators always know it from the length condition).
    pub(crate) fn mul_by_reflection(
        &self,
        rs: &RootSystem,
        b: usize,
        new_length: u32,
    ) -> WeylElement {
        let r = self.rank as usize;
        let refl = rs.reflection_mat(b);
        let mut m = vec![0i8; r * r];
        for j in 0..r {
            for i in 0..r {
                let mut acc = 0i64;
                for t in 0..r {
                    acc += i64::from(self.action[t * r + i]) * i64::from(refl[j * r + t]);
                }
                m[j * r + i] = i8::try_from(acc).expect("action entry exceeds i8");
            }
        }
        WeylElement {
            length: new_length,
            rank: self.rank,
            action: m.into(),
        }
    }

    /// General product u*v; the length is recomputed as an inversion count.
    pub fn multiply(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let r = rs.rank();
        let mut m = vec![0i8; r * r];
        for j in 0..r {
            for i in 0..r {
                let mut acc = 0i64;
                for t in 0..r {
                    acc += i64::from(u.action[t * r + i]) * i64::from(v.action[j * r + t]);
                }
                m[j * r + i] = i8::try_from(acc).expect("action entry exceeds i8");
            }
        }
        let mut elem = WeylElement {
            length: 0,
            rank: r as u8,
            action: m.into(),
        };
        elem.length = elem.count_inversions(rs);
        elem
    }

    /// Number of positive roots sent negative.
    fn count_inversions(&self, rs: &RootSystem) -> u32 {
        let r = self.rank as usize;
        let mut count = 0;
        for beta in rs.roots_i8() {
            // Sign of w(beta): the first nonzero coordinate decides.
            let mut neg = false;
            for i in 0..r {
                let mut acc = 0i64;
                for (j, &bj) in beta.iter().enumerate() {
                    if bj != 0 {
                        acc += i64::from(bj) * i64::from(self.action[j * r + i]);
                    }
                }
                if acc != 0 {
                    neg = acc < 0;
                    break;
                }
            }
            count += u32::from(neg);
        }
        count
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let mut word = self.reduced_word(rs).0;
        word.reverse();
        Self::from_word(rs, &word).expect("reversed reduced word is valid")
    }

    /// Product s_{i1} ... s_{ik} for a (not necessarily reduced) word.
    pub fn from_word(rs: &RootSystem, letters: &[usize]) -> Result<WeylElement> {
        let mut w = Self::identity(rs);
        for &k in letters {
            if k == 0 || k > rs.rank() {
                return Err(Error::ParseElement {
                    input: Word(letters.to_vec()).to_string(),
                    reason: format!("letter {k} out of range 1..={}", rs.rank()),
                });
            }
            w = w.right_mul_simple(rs, k);
        }
        Ok(w)
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Word {
        let mut w = self.clone();
        let mut stripped = Vec::with_capacity(self.length as usize);
        while !w.is_identity() {
            let k = (1..=rs.rank())
                .find(|&k| w.is_right_descent(k))
                .expect("non-identity element has a right descent");
            stripped.push(k);
            w = w.right_mul_simple(rs, k);
        }
        stripped.reverse();
        Word(stripped)
    }

    /// Simple reflections occurring in any reduced word of w.
    pub fn support(&self, rs: &RootSystem) -> BTreeSet<usize> {
        self.reduced_word(rs).0.into_iter().collect()
    }

    /// Minimal-length representative of the coset w W_P: strip descents
    /// inside P until none remain.
    pub fn min_coset_rep(&self, rs: &RootSystem, p: &ParabolicSubset) -> WeylElement {
        let mut w = self.clone();
        loop {
            match p.0.iter().find(|&&k| w.is_right_descent(k)) {
                Some(&k) => w = w.right_mul_simple(rs, k),
                None => return w,
            }
        }
    }

    /// One-line permutation encoding, type A only: W(A_{n-1}) = S_n.
    pub fn to_permutation(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        if rs.lie_type() != LieType::A {
            return Err(Error::PermutationUnsupported {
                lie_type: rs.lie_type().letter(),
            });
        }
        let n = rs.rank() + 1;
        let mut p: Vec<usize> = (1..=n).collect();
        for &k in &self.reduced_word(rs).0 {
            p.swap(k - 1, k);
        }
        Ok(p)
    }

    /// Inverse of `to_permutation`: right multiplication by s_i swaps the
    /// one-line entries at positions i, i+1.
    pub fn from_permutation(rs: &RootSystem, p: &[usize]) -> Result<WeylElement> {
        if rs.lie_type() != LieType::A {
            return Err(Error::PermutationUnsupported {
                lie_type: rs.lie_type().letter(),
            });
        }
        let n = rs.rank() + 1;
        let input = || {
            p.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("")
        };
        let mut seen = vec![false; n + 1];
        if p.len() != n {
            return Err(Error::ParseElement {
                input: input(),
                reason: format!("expected a permutation of 1..={n}"),
            });
        }
        for &v in p {
            if v == 0 || v > n || seen[v] {
                return Err(Error::ParseElement {
                    input: input(),
                    reason: format!("not a permutation of 1..={n}"),
                });
            }
            seen[v] = true;
        }
        // Sort back to the identity with adjacent swaps; the reversed swap
        // sequence is a reduced word for p.
        let mut work = p.to_vec();
        let mut swaps = Vec::new();
        loop {
            let mut done = true;
            for i in 0..n - 1 {
                if work[i] > work[i + 1] {
                    work.swap(i, i + 1);
                    swaps.push(i + 1);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        swaps.reverse();
        let w = Self::from_word(rs, &swaps)?;
        debug_assert_eq!(w.length as usize, swaps.len());
        Ok(w)
    }
}

/// Bruhat order via the standard descent recursion, memoized per root
/// system. Results are deterministic regardless of cache state.
pub fn bruhat_leq(rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    const CACHE_CAP: usize = 1 << 22;
    if u.length > w.length {
        return false;
    }
    if u.is_identity() {
        return true;
    }
    if u == w {
        return true;
    }
    let key = (u.action_key(), w.action_key());
    if let Some(hit) = rs.bruhat_cache.get(&key) {
        return *hit;
    }
    let k = (1..=rs.rank())
        .find(|&k| w.is_right_descent(k))
        .expect("w has positive length here");
    let ws = w.right_mul_simple(rs, k);
    let result = if u.is_right_descent(k) {
        bruhat_leq(rs, &u.right_mul_simple(rs, k), &ws)
    } else {
        bruhat_leq(rs, u, &ws)
    };
    if rs.bruhat_cache.len() >= CACHE_CAP {
        rs.bruhat_cache.clear();
    }
    rs.bruhat_cache.insert(key, result);
    result
}

/// The longest element w_0.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(k) = (1..=rs.rank()).find(|&k| !w.is_right_descent(k)) {
        w = w.right_mul_simple(rs, k);
    }
    assert_eq!(w.length() as usize, rs.num_positive_roots());
    w
}

/// Breadth-first enumeration by length, each element exactly once, layers
/// sorted by canonical reduced word. Refuses a full enumeration when the
/// group order exceeds `cap` and no maximum length is given.
pub struct Enumerate<'a> {
    rs: &'a RootSystem,
    layer: Vec<WeylElement>,
    pos: usize,
    current_length: u32,
    max_length: Option<u32>,
}

impl<'a> Enumerate<'a> {
    fn advance_layer(&mut self) {
        if let Some(max) = self.max_length {
            if self.current_length >= max {
                self.layer = Vec::new();
                self.pos = 0;
                return;
            }
        }
        let mut seen: HashSet<WeylElement> = HashSet::new();
        for w in &self.layer {
            for k in 1..=self.rs.rank() {
                if !w.is_right_descent(k) {
                    seen.insert(w.right_mul_simple(self.rs, k));
                }
            }
        }
        let mut next: Vec<(Word, WeylElement)> = seen
            .into_iter()
            .map(|w| (w.reduced_word(self.rs), w))
            .collect();
        next.sort_by(|a, b| a.0 .0.cmp(&b.0 .0));
        self.layer = next.into_iter().map(|(_, w)| w).collect();
        self.pos = 0;
        self.current_length += 1;
    }
}

impl<'a> Iterator for Enumerate<'a> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        loop {
            if self.pos < self.layer.len() {
                let w = self.layer[self.pos].clone();
                self.pos += 1;
                return Some(w);
            }
            if self.layer.is_empty() {
                return None;
            }
            self.advance_layer();
        }
    }
}

pub fn enumerate(rs: &RootSystem, max_length: Option<u32>) -> Result<Enumerate<'_>> {
    enumerate_capped(rs, max_length, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_capped(
    rs: &RootSystem,
    max_length: Option<u32>,
    cap: u64,
) -> Result<Enumerate<'_>> {
    if max_length.is_none() && rs.weyl_order() > u128::from(cap) {
        return Err(Error::EnumerationCap {
            order: rs.weyl_order(),
            cap,
        });
    }
    Ok(Enumerate {
        rs,
        layer: vec![WeylElement::identity(rs)],
        pos: 0,
        current_length: 0,
        max_length,
    })
}

/// Parse an element given either as a comma-separated word ("1,2,1") or,
/// in type A, as a one-line permutation ("4312").
pub fn parse_element(rs: &RootSystem, input: &str) -> Result<WeylElement> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::ParseElement {
            input: input.to_string(),
            reason: "empty element".to_string(),
        });
    }
    if s.contains(',') || s.len() == 1 {
        let word = Word::from_str(s)?;
        WeylElement::from_word(rs, &word.0)
    } else {
        parse_permutation(rs, s)
    }
}

/// Parse a one-line permutation written as digits ("4312"), type A only.
pub fn parse_permutation(rs: &RootSystem, s: &str) -> Result<WeylElement> {
    let n = rs.rank() + 1;
    if n > 9 {
        return Err(Error::ParseElement {
            input: s.to_string(),
            reason: "digit form is ambiguous for rank >= 9; use a comma-separated word".to_string(),
        });
    }
    let mut values = Vec::with_capacity(s.len());
    for ch in s.trim().chars() {
        let d = ch.to_digit(10).ok_or_else(|| Error::ParseElement {
            input: s.to_string(),
            reason: format!("`{ch}` is not a digit"),
        })?;
        values.push(d as usize);
    }
    WeylElement::from_permutation(rs, &values)
}

pub fn permutation_string(p: &[usize]) -> String {
    p.iter().map(|v| v.to_string()).collect()
}
