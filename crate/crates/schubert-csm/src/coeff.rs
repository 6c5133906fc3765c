//! The two coefficient rings: checked 64-bit integers (non-equivariant)
//! and sparse multivariate polynomials over the integers in the
//! simple-root variables a1..ar (equivariant).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

/// Ring operations a class-vector coefficient must support.
///
/// `i64` is the overflow-checked fast path for the non-equivariant ring;
/// `SparsePoly` carries arbitrary-precision coefficients.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn negated(&self) -> Self;
    fn from_int(v: i64) -> Self;
    /// `self * v`, exact.
    fn scaled(&self, v: i64) -> Self;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.checked_add(*rhs).expect("i64 coefficient overflow");
    }

    fn negated(&self) -> Self {
        self.checked_neg().expect("i64 coefficient overflow")
    }

    fn from_int(v: i64) -> Self {
        v
    }

    fn scaled(&self, v: i64) -> Self {
        self.checked_mul(v).expect("i64 coefficient overflow")
    }
}

/// A monomial: exponents of a1, a2, ... with trailing zeros trimmed, so a
/// monomial is independent of the ambient rank. Ordered graded-lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn constant() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut v = exps.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Exponent vector padded to `rank` entries.
    pub fn padded(&self, rank: usize) -> Vec<u16> {
        let mut v = self.0.clone();
        v.resize(rank.max(v.len()), 0);
        v
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(
                self.exponent(i)
                    .checked_add(other.exponent(i))
                    .expect("monomial exponent overflow"),
            );
        }
        Monomial(v)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Graded lex with a1 > a2 > ...: within a degree, a higher power
        // of an earlier variable sorts first.
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                match other.exponent(i).cmp(&self.exponent(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

/// Sparse polynomial over the integers in the simple-root variables,
/// normalized: no explicit zero coefficients, monomials in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(v: i64) -> Self {
        let mut terms = BTreeMap::new();
        if v != 0 {
            terms.insert(Monomial::constant(), BigInt::from(v));
        }
        SparsePoly { terms }
    }

    /// The variable a_k (1-based).
    pub fn var(k: usize) -> Self {
        assert!(k >= 1, "variables are 1-based");
        let mut exps = vec![0u16; k];
        exps[k - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::from_exponents(&exps), BigInt::from(1));
        SparsePoly { terms }
    }

    /// The degree-1 polynomial `sum_i coords[i] * a_{i+1}`; how a root in
    /// simple-root coordinates enters the equivariant coefficient ring.
    pub fn from_root_coords(coords: &[i64]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                let mut exps = vec![0u16; i + 1];
                exps[i] = 1;
                terms.insert(Monomial::from_exponents(&exps), BigInt::from(c));
            }
        }
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Evaluation at a1 = ... = ar = 0.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::constant())
    }

    /// True iff the polynomial is nonzero and every stored coefficient is
    /// strictly positive.
    pub fn is_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.sign() == num_bigint::Sign::Plus)
    }

    /// Maximal monomial degree; -1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.degree()))
            .max()
            .unwrap_or(-1)
    }

    pub fn scale(&self, v: i64) -> Self {
        if v == 0 {
            return Self::zero();
        }
        let big = BigInt::from(v);
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * &big))
                .collect(),
        }
    }

    fn add_ref(&self, other: &SparsePoly) -> SparsePoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_default();
            *entry += c;
            if entry.sign() == num_bigint::Sign::NoSign {
                terms.remove(m);
            }
        }
        SparsePoly { terms }
    }

    fn mul_ref(&self, other: &SparsePoly) -> SparsePoly {
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = terms.entry(m.clone()).or_default();
                *entry += c1 * c2;
                if entry.sign() == num_bigint::Sign::NoSign {
                    terms.remove(&m);
                }
            }
        }
        SparsePoly { terms }
    }

    /// Human-readable form, e.g. `1 + 2*a1 + a1*a2`.
    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let abs = c.magnitude().to_string();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.degree() == 0 {
                factors.push(abs);
            }
            for (vi, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("a{}", vi + 1));
                } else if e > 1 {
                    factors.push(format!("a{}^{}", vi + 1, e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.add_ref(rhs)
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.add_ref(&rhs.negated())
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        Coeff::negated(self)
    }
}

impl Coeff for SparsePoly {
    fn zero() -> Self {
        SparsePoly::zero()
    }

    fn one() -> Self {
        SparsePoly::one()
    }

    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn negated(&self) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn from_int(v: i64) -> Self {
        SparsePoly::constant(v)
    }

    fn scaled(&self, v: i64) -> Self {
        self.scale(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: i64) -> SparsePoly {
        SparsePoly::constant(v)
    }

    fn a(k: usize) -> SparsePoly {
        SparsePoly::var(k)
    }

    #[test]
    fn one_plus_a1_times_one_plus_a2() {
        let lhs = &(&p(1) + &a(1)) * &(&p(1) + &a(2));
        let expected = &(&(&p(1) + &a(1)) + &a(2)) + &(&a(1) * &a(2));
        assert_eq!(lhs, expected);
        assert_eq!(lhs.num_terms(), 4);
        assert_eq!(lhs.text(), "1 + a1 + a2 + a1*a2");
    }

    #[test]
    fn additive_inverse() {
        let q = &(&p(3) + &(&a(1) * &a(1))) - &a(2);
        assert!((&q + &Coeff::negated(&q)).is_zero());
    }

    #[test]
    fn a2_equivariant_leading_product() {
        // (1+a1)(1+a2)(1+a1+a2): 8 monomials including a1^2*a2 and a1*a2^2.
        let f = &(&(&p(1) + &a(1)) * &(&p(1) + &a(2))) * &(&(&p(1) + &a(1)) + &a(2));
        assert_eq!(f.num_terms(), 8);
        let m112 = Monomial::from_exponents(&[2, 1]);
        let m122 = Monomial::from_exponents(&[1, 2]);
        assert_eq!(f.coefficient(&m112), BigInt::from(1));
        assert_eq!(f.coefficient(&m122), BigInt::from(1));
        assert_eq!(f.coefficient(&Monomial::from_exponents(&[1, 1])), BigInt::from(3));
        assert_eq!(f.constant_term(), BigInt::from(1));
        assert!(f.is_positive());
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!((&p(1) + &a(1)).constant_term(), BigInt::from(1));
        assert_eq!((&a(1) * &a(2)).constant_term(), BigInt::from(0));
    }

    #[test]
    fn positivity_examples() {
        assert!((&p(1) + &a(1)).is_positive());
        assert!(!(&p(1) - &a(1)).is_positive());
        assert!(!SparsePoly::zero().is_positive());
    }

    #[test]
    fn degrees() {
        assert_eq!(p(7).total_degree(), 0);
        assert_eq!((&p(1) + &(&a(1) * &a(2))).total_degree(), 2);
        assert_eq!(SparsePoly::zero().total_degree(), -1);
    }

    #[test]
    fn text_rendering() {
        assert_eq!(SparsePoly::zero().text(), "0");
        assert_eq!(p(-3).text(), "-3");
        assert_eq!((&p(1) - &(&p(2) * &a(1))).text(), "1 - 2*a1");
        let sq = &a(1) * &(&a(1) * &a(2));
        assert_eq!(sq.text(), "a1^2*a2");
    }

    #[test]
    fn graded_lex_order() {
        let f = &(&p(1) + &a(2)) + &(&a(1) * &a(1));
        let mons: Vec<u32> = f.terms().map(|(m, _)| m.degree()).collect();
        assert_eq!(mons, vec![0, 1, 2]);
        // Within a degree, a1 sorts before a2.
        let g = &a(1) + &a(2);
        let keys: Vec<Vec<u16>> = g.terms().map(|(m, _)| m.padded(2)).collect();
        assert_eq!(keys, vec![vec![1, 0], vec![0, 1]]);
        let sq = &(&a(1) * &a(1)) + &(&(&a(1) * &a(2)) + &(&a(2) * &a(2)));
        let keys: Vec<Vec<u16>> = sq.terms().map(|(m, _)| m.padded(2)).collect();
        assert_eq!(keys, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    fn arb_poly() -> impl Strategy<Value = SparsePoly> {
        proptest::collection::vec(((0u16..3, 0u16..3, 0u16..2), -4i64..5), 0..6).prop_map(|terms| {
            let mut poly = SparsePoly::zero();
            for ((e1, e2, e3), c) in terms {
                let mono = SparsePoly {
                    terms: [(Monomial::from_exponents(&[e1, e2, e3]), BigInt::from(1))]
                        .into_iter()
                        .collect(),
                };
                poly = &poly + &mono.scale(c);
            }
            poly
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn constant_term_is_ring_hom(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!((&f * &g).constant_term(), f.constant_term() * g.constant_term());
            prop_assert_eq!((&f + &g).constant_term(), f.constant_term() + g.constant_term());
        }

        #[test]
        fn positive_cone_closed(f in arb_poly(), g in arb_poly()) {
            if f.is_positive() && g.is_positive() {
                prop_assert!((&f + &g).is_positive());
                prop_assert!((&f * &g).is_positive());
            }
        }
    }
}
