//! Cartan data of the simple root systems and the root/coroot/weight
//! arithmetic everything else is built on.
//!
//! Coordinates are fixed once and for all: roots live in simple-root
//! coordinates, coroots in simple-coroot coordinates, weights in
//! fundamental-weight coordinates. With these choices every pairing is an
//! integer dot product after an explicit change of basis; no symmetrizer
//! denominators appear anywhere. Simple roots are numbered 1..=rank in the
//! Bourbaki convention.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use dashmap::DashMap;

use crate::error::{Error, Result};

pub(crate) type BruhatCache = DashMap<(Arc<[i8]>, Arc<[i8]>), bool>;

/// The seven families of simple Lie types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieType {
    pub fn letter(self) -> char {
        match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
            LieType::E => 'E',
            LieType::F => 'F',
            LieType::G => 'G',
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            "E" | "e" => Ok(LieType::E),
            "F" | "f" => Ok(LieType::F),
            "G" | "g" => Ok(LieType::G),
            other => Err(Error::UnknownLieType(other.to_string())),
        }
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<i64>);

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root(pub Vec<i64>);

/// A coroot in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coroot(pub Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Positive means every coordinate is >= 0 (and some is nonzero).
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c != 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c != 0)
    }
}

impl Coroot {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

/// Cartan datum of a simple root system, with the positive roots and their
/// coroots generated once at construction and every derived table the
/// operators need. Immutable after `build`; safe to share across threads.
pub struct RootSystem {
    lie_type: LieType,
    rank: usize,
    /// Row-major; `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<i64>,
    positive_roots: Vec<Root>,
    positive_coroots: Vec<Coroot>,

    // Internal tables, all indexed by the position of a root in
    // `positive_roots` (height-then-lex order).
    roots_i8: Vec<Box<[i8]>>,
    root_index: HashMap<Vec<i64>, usize>,
    /// Column-major matrix of s_beta acting on simple-root coordinates.
    reflection_mats: Vec<Box<[i8]>>,
    /// `refl_table[b][g] = +-(index+1)` of s_{beta_b}(gamma_g) in the root list.
    refl_table: Vec<Vec<i32>>,
    /// `simple_pairing[k][b] = <alpha_{k+1}, beta_b^vee>`.
    simple_pairing: Vec<Vec<i64>>,
    /// Memo for Bruhat comparisons, keyed by the two action matrices.
    pub(crate) bruhat_cache: BruhatCache,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}{})", self.lie_type, self.rank)
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.lie_type == other.lie_type && self.rank == other.rank
    }
}
impl Eq for RootSystem {}

/// Number of positive roots for each valid (type, rank).
fn positive_root_count(lie_type: LieType, rank: usize) -> usize {
    match lie_type {
        LieType::A => rank * (rank + 1) / 2,
        LieType::B | LieType::C => rank * rank,
        LieType::D => rank * (rank - 1),
        LieType::E => match rank {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
        LieType::F => 24,
        LieType::G => 6,
    }
}

fn cartan_matrix(lie_type: LieType, rank: usize) -> Result<Vec<i64>> {
    let valid = match lie_type {
        LieType::A => rank >= 1,
        LieType::B => rank >= 2,
        LieType::C => rank >= 3,
        LieType::D => rank >= 4,
        LieType::E => (6..=8).contains(&rank),
        LieType::F => rank == 4,
        LieType::G => rank == 2,
    };
    if !valid {
        let ranges = match lie_type {
            LieType::A => ">= 1",
            LieType::B => ">= 2",
            LieType::C => ">= 3",
            LieType::D => ">= 4",
            LieType::E => "6, 7, 8",
            LieType::F => "4",
            LieType::G => "2",
        };
        return Err(Error::InvalidRank {
            lie_type: lie_type.letter(),
            rank,
            valid: ranges,
        });
    }

    let r = rank;
    let mut a = vec![0i64; r * r];
    let mut set = |i: usize, j: usize, v: i64| a[i * r + j] = v;
    for i in 0..r {
        set(i, i, 2);
    }
    // Bonds of the Dynkin diagram as (i, j, a_ij, a_ji), 0-indexed.
    let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i * r + j] = aij;
        a[j * r + i] = aji;
    };
    match lie_type {
        LieType::A => {
            for i in 0..r - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        LieType::B => {
            // alpha_r is the short root: <alpha_{r-1}, alpha_r^vee> = -2.
            for i in 0..r - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(r - 2, r - 1, -1, -2);
        }
        LieType::C => {
            // alpha_r is the long root: <alpha_r, alpha_{r-1}^vee> = -2.
            for i in 0..r - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(r - 2, r - 1, -2, -1);
        }
        LieType::D => {
            for i in 0..r - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(r - 3, r - 1, -1, -1);
        }
        LieType::E => {
            // Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4.
            bond(0, 2, -1, -1);
            for i in 2..r - 1 {
                bond(i, i + 1, -1, -1);
            }
            bond(1, 3, -1, -1);
        }
        LieType::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);
            bond(2, 3, -1, -1);
        }
        LieType::G => {
            // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
            bond(0, 1, -3, -1);
        }
    }
    Ok(a)
}

impl RootSystem {
    /// Build the root system of a simple type, generating the positive
    /// roots (with coroots) by closure of the simple roots under the
    /// simple reflections, ordered by height then lexicographically.
    pub fn build(lie_type: LieType, rank: usize) -> Result<Arc<RootSystem>> {
        let cartan = cartan_matrix(lie_type, rank)?;
        let r = rank;
        let at = |i: usize, j: usize| cartan[i * r + j];

        // Closure under simple reflections, tracking (root, coroot) pairs.
        let mut roots: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..r {
            let mut root = vec![0i64; r];
            root[i] = 1;
            let coroot = root.clone();
            seen.insert(root.clone(), roots.len());
            roots.push((root, coroot));
        }
        let mut head = 0;
        while head < roots.len() {
            let (root, coroot) = roots[head].clone();
            head += 1;
            for k in 0..r {
                // s_k on root coordinates and on coroot coordinates.
                let mut rt = root.clone();
                let pair_root: i64 = (0..r).map(|j| at(k, j) * root[j]).sum();
                rt[k] -= pair_root;
                if rt.iter().all(|&c| c >= 0) && !seen.contains_key(&rt) {
                    let mut ct = coroot.clone();
                    let pair_co: i64 = (0..r).map(|j| at(j, k) * coroot[j]).sum();
                    ct[k] -= pair_co;
                    seen.insert(rt.clone(), roots.len());
                    roots.push((rt, ct));
                }
            }
        }

        // Height, then lexicographic with alpha_1 most significant, so the
        // simple roots come out as alpha_1, ..., alpha_r.
        roots.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });

        let expected = positive_root_count(lie_type, rank);
        assert_eq!(
            roots.len(),
            expected,
            "positive-root closure for {lie_type}{rank} produced {} roots, expected {expected}",
            roots.len()
        );

        let positive_roots: Vec<Root> = roots.iter().map(|(rt, _)| Root(rt.clone())).collect();
        let positive_coroots: Vec<Coroot> = roots.iter().map(|(_, ct)| Coroot(ct.clone())).collect();

        let mut root_index = HashMap::new();
        let mut roots_i8 = Vec::with_capacity(roots.len());
        for (idx, root) in positive_roots.iter().enumerate() {
            root_index.insert(root.0.clone(), idx);
            let packed: Vec<i8> = root
                .0
                .iter()
                .map(|&c| i8::try_from(c).expect("root coordinate exceeds i8"))
                .collect();
            roots_i8.push(packed.into_boxed_slice());
        }

        // <beta, beta^vee> = 2 for every generated pair.
        for (rt, ct) in &roots {
            let mut pairing = 0i64;
            for (i, &ci) in ct.iter().enumerate() {
                for (j, &rj) in rt.iter().enumerate() {
                    pairing += ci * at(i, j) * rj;
                }
            }
            assert_eq!(pairing, 2, "coroot duality violated in {lie_type}{rank}");
        }

        // Reflection matrices (column-major on simple-root coordinates):
        // s_beta(alpha_j) = alpha_j - <alpha_j, beta^vee> beta.
        let mut reflection_mats = Vec::with_capacity(roots.len());
        for (rt, ct) in &roots {
            let mut mat = vec![0i8; r * r];
            for j in 0..r {
                let pair: i64 = (0..r).map(|i| ct[i] * at(i, j)).sum();
                for i in 0..r {
                    let v = (if i == j { 1 } else { 0 }) - pair * rt[i];
                    mat[j * r + i] = i8::try_from(v).expect("reflection entry exceeds i8");
                }
            }
            reflection_mats.push(mat.into_boxed_slice());
        }

        // Action of each reflection on the set of positive roots.
        let mut refl_table = Vec::with_capacity(roots.len());
        for mat in &reflection_mats {
            let mut row = Vec::with_capacity(roots.len());
            for g in &roots_i8 {
                let mut img = vec![0i64; r];
                for (j, &gj) in g.iter().enumerate() {
                    if gj != 0 {
                        for i in 0..r {
                            img[i] += i64::from(gj) * i64::from(mat[j * r + i]);
                        }
                    }
                }
                let signed = if img.iter().all(|&c| c >= 0) {
                    let idx = root_index[&img];
                    (idx as i32) + 1
                } else {
                    let neg: Vec<i64> = img.iter().map(|&c| -c).collect();
                    let idx = root_index[&neg];
                    -((idx as i32) + 1)
                };
                row.push(signed);
            }
            refl_table.push(row);
        }

        // <alpha_k, beta^vee> for every simple k and positive beta.
        let mut simple_pairing = Vec::with_capacity(r);
        for k in 0..r {
            let mut row = Vec::with_capacity(roots.len());
            for (_, ct) in &roots {
                let pair: i64 = (0..r).map(|i| ct[i] * at(i, k)).sum();
                row.push(pair);
            }
            simple_pairing.push(row);
        }

        Ok(Arc::new(RootSystem {
            lie_type,
            rank,
            cartan,
            positive_roots,
            positive_coroots,
            roots_i8,
            root_index,
            reflection_mats,
            refl_table,
            simple_pairing,
            bruhat_cache: DashMap::new(),
        }))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `<alpha_j, alpha_i^vee>`, both indices 1-based.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[(i - 1) * self.rank + (j - 1)]
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Coroot] {
        &self.positive_coroots
    }

    /// The k-th simple root (1-based) as a unit coordinate vector.
    pub fn simple_root(&self, k: usize) -> Root {
        let mut coords = vec![0i64; self.rank];
        coords[k - 1] = 1;
        Root(coords)
    }

    /// The evaluation pairing `<lambda, c>`; an integer dot product in the
    /// chosen coordinates.
    pub fn pairing(&self, lambda: &Weight, c: &Coroot) -> Result<i64> {
        if lambda.0.len() != self.rank || c.0.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: if lambda.0.len() != self.rank {
                    lambda.0.len()
                } else {
                    c.0.len()
                },
            });
        }
        Ok(self.pairing_unchecked(&lambda.0, &c.0))
    }

    pub(crate) fn pairing_unchecked(&self, lambda: &[i64], coroot: &[i64]) -> i64 {
        lambda.iter().zip(coroot).map(|(l, c)| l * c).sum()
    }

    /// Change of basis from simple-root to fundamental-weight coordinates:
    /// column j of the Cartan matrix expresses alpha_j.
    pub fn root_to_weight(&self, beta: &Root) -> Weight {
        let r = self.rank;
        let mut w = vec![0i64; r];
        for (i, wi) in w.iter_mut().enumerate() {
            *wi = (0..r).map(|j| self.cartan[i * r + j] * beta.0[j]).sum();
        }
        Weight(w)
    }

    /// The sum of the fundamental weights: the all-ones vector.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// s_k acting on a weight (1-based k):
    /// s_k(lambda) = lambda - <lambda, alpha_k^vee> alpha_k.
    pub fn reflect_weight(&self, k: usize, lambda: &Weight) -> Weight {
        let ki = k - 1;
        let pair = lambda.0[ki];
        let mut out = lambda.0.clone();
        for (i, o) in out.iter_mut().enumerate() {
            *o -= pair * self.cartan[i * self.rank + ki];
        }
        Weight(out)
    }

    /// s_k acting on a root in simple-root coordinates (1-based k).
    pub fn reflect_root(&self, k: usize, beta: &Root) -> Root {
        let ki = k - 1;
        let mut out = beta.0.clone();
        let pair: i64 = (0..self.rank)
            .map(|j| self.cartan[ki * self.rank + j] * beta.0[j])
            .sum();
        out[ki] -= pair;
        Root(out)
    }

    /// s_k acting on a coroot in simple-coroot coordinates (1-based k):
    /// the transpose-Cartan action.
    pub fn reflect_coroot(&self, k: usize, c: &Coroot) -> Coroot {
        let ki = k - 1;
        let mut out = c.0.clone();
        let pair: i64 = (0..self.rank)
            .map(|j| self.cartan[j * self.rank + ki] * c.0[j])
            .sum();
        out[ki] -= pair;
        Coroot(out)
    }

    /// Index of a positive root given its coordinates, if it is one.
    pub fn positive_root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self.lie_type {
            LieType::A => fact(self.rank + 1),
            LieType::B | LieType::C => (1u128 << self.rank) * fact(self.rank),
            LieType::D => (1u128 << (self.rank - 1)) * fact(self.rank),
            LieType::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => unreachable!(),
            },
            LieType::F => 1152,
            LieType::G => 12,
        }
    }

    pub(crate) fn roots_i8(&self) -> &[Box<[i8]>] {
        &self.roots_i8
    }

    pub(crate) fn reflection_mat(&self, b: usize) -> &[i8] {
        &self.reflection_mats[b]
    }

    pub(crate) fn refl_table(&self, b: usize) -> &[i32] {
        &self.refl_table[b]
    }

    /// `<alpha_k, beta_b^vee>` with 1-based k and root-list index b.
    pub(crate) fn simple_pairing(&self, k: usize, b: usize) -> i64 {
        self.simple_pairing[k - 1][b]
    }
}
