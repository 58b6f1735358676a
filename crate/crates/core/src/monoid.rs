//! Finite pointed commutative monoids given by their Cayley tables.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::bitset::{ElemSet, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("monoid must have at least one element")]
    Empty,
    #[error("monoid has {size} elements, cap is {cap}")]
    SizeOverflow { size: usize, cap: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("index {value} out of range for a monoid of size {size}")]
    IndexOutOfRange { value: usize, size: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("identity and zero coincide in a monoid with {0} elements")]
    IdentityIsZero(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("not commutative: {0}*{1} != {1}*{0}")]
    NotCommutative(usize, usize),
    #[error("declared identity fails on element {0}")]
    BadIdentity(usize),
    #[error("declared zero fails on element {0}")]
    BadZero(usize),
}

/// Identity of a Cayley table, used to refuse mixing ideals of different
/// monoids. Labels do not contribute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidId(u64);

/// A validated finite pointed commutative monoid.
///
/// Elements are the dense indices `0..size()`; labels only matter for
/// presentation.
#[derive(Clone)]
pub struct FiniteMonoid {
    labels: Vec<String>,
    table: Vec<u8>,
    identity: usize,
    zero: usize,
    principal: Vec<ElemSet>,
    id: MonoidId,
}

impl FiniteMonoid {
    /// Validates a raw table with default labels `0..n`.
    pub fn validate(
        raw_table: &[Vec<usize>],
        identity: usize,
        zero: usize,
    ) -> Result<Self, MonoidError> {
        let labels = (0..raw_table.len()).map(|i| i.to_string()).collect();
        Self::new(labels, raw_table, identity, zero)
    }

    /// Validates a labelled table. Errors name the first violated axiom
    /// together with a witness.
    pub fn new(
        labels: Vec<String>,
        raw_table: &[Vec<usize>],
        identity: usize,
        zero: usize,
    ) -> Result<Self, MonoidError> {
        let n = raw_table.len();
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(MonoidError::SizeOverflow {
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        if labels.len() != n {
            return Err(MonoidError::LabelCount {
                expected: n,
                got: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(MonoidError::DuplicateLabel(label.clone()));
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in raw_table.iter().enumerate() {
            if entries.len() != n {
                return Err(MonoidError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for &value in entries {
                if value >= n {
                    return Err(MonoidError::IndexOutOfRange { value, size: n });
                }
                table.push(value as u8);
            }
        }
        for &value in &[identity, zero] {
            if value >= n {
                return Err(MonoidError::IndexOutOfRange { value, size: n });
            }
        }
        if n > 1 && identity == zero {
            return Err(MonoidError::IdentityIsZero(n));
        }

        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for a in 0..n {
            if at(identity, a) != a || at(a, identity) != a {
                return Err(MonoidError::BadIdentity(a));
            }
        }
        for a in 0..n {
            if at(zero, a) != zero || at(a, zero) != zero {
                return Err(MonoidError::BadZero(a));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if at(a, b) != at(b, a) {
                    return Err(MonoidError::NotCommutative(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(MonoidError::NotAssociative(a, b, c));
                    }
                }
            }
        }

        let principal = (0..n)
            .map(|a| (0..n).map(|m| at(a, m)).collect::<ElemSet>())
            .collect();
        let mut hasher = DefaultHasher::new();
        (n, identity, zero, &table).hash(&mut hasher);
        Ok(FiniteMonoid {
            labels,
            table,
            identity,
            zero,
            principal,
            id: MonoidId(hasher.finish()),
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn id(&self) -> MonoidId {
        self.id
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b] as usize
    }

    /// Row `a` of the table, as indices.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.size();
        self.table[a * n..(a + 1) * n].iter().map(|&v| v as usize)
    }

    /// The whole carrier as a set.
    #[inline]
    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    /// `aM`, which is also the principal ideal generated by `a` because the
    /// monoid has an identity.
    #[inline]
    pub fn principal(&self, a: usize) -> ElemSet {
        self.principal[a]
    }

    /// The set product `ST`.
    pub fn mul_sets(&self, s: ElemSet, t: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for a in s {
            for b in t {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// Positive powers `a, a^2, ..` up to the first repeat. The sequence is
    /// eventually periodic, so this lists every positive power of `a`.
    pub fn powers(&self, a: usize) -> ElemSet {
        let mut seen = ElemSet::EMPTY;
        let mut x = a;
        while !seen.contains(x) {
            seen.insert(x);
            x = self.mul(x, a);
        }
        seen
    }

    /// Invertible elements.
    pub fn units(&self) -> ElemSet {
        (0..self.size())
            .filter(|&a| self.row(a).any(|v| v == self.identity))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    /// Raw table as rows of indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size()).map(|a| self.row(a).collect()).collect()
    }

    /// Same table with fresh labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self, MonoidError> {
        Self::new(labels, &self.rows(), self.identity, self.zero)
    }

    /// The multiplicative monoid of integers modulo `n`.
    pub fn zn_mul(n: usize) -> Result<Self, MonoidError> {
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| a * b % n).collect())
            .collect();
        let identity = if n == 1 { 0 } else { 1 };
        Self::validate(&rows, identity, 0)
    }

    /// `{1, a, .., a^k = 0}` with `a^i a^j = a^min(i+j, k)`. Index `i` is `a^i`.
    pub fn chain(k: usize) -> Result<Self, MonoidError> {
        if k == 0 {
            // a^0 = a^k: the one-element monoid
            return Self::new(vec!["0".into()], &[vec![0]], 0, 0);
        }
        let rows: Vec<Vec<usize>> = (0..=k)
            .map(|i| (0..=k).map(|j| (i + j).min(k)).collect())
            .collect();
        let labels = (0..=k)
            .map(|i| match i {
                0 => "1".to_string(),
                _ if i == k => "0".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            })
            .collect();
        Self::new(labels, &rows, 0, k)
    }

    /// Componentwise product; element `(x, y)` has index `x * |other| + y`
    /// and label `"x|y"`.
    pub fn direct_product(&self, other: &FiniteMonoid, cap: usize) -> Result<Self, MonoidError> {
        let (n1, n2) = (self.size(), other.size());
        let size = n1 * n2;
        let cap = cap.min(MAX_ELEMENTS);
        if size > cap {
            return Err(MonoidError::SizeOverflow { size, cap });
        }
        let rows: Vec<Vec<usize>> = (0..size)
            .map(|p| {
                (0..size)
                    .map(|q| self.mul(p / n2, q / n2) * n2 + other.mul(p % n2, q % n2))
                    .collect()
            })
            .collect();
        let labels = (0..size)
            .map(|p| format!("{}|{}", self.label(p / n2), other.label(p % n2)))
            .collect();
        Self::new(
            labels,
            &rows,
            self.identity * n2 + other.identity,
            self.zero * n2 + other.zero,
        )
    }
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.identity == other.identity
            && self.zero == other.zero
            && self.table == other.table
            && self.labels == other.labels
    }
}

impl Eq for FiniteMonoid {}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("size", &self.size())
            .field("identity", &self.identity)
            .field("zero", &self.zero)
            .field("rows", &self.rows())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_rows(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|a| (0..n).map(|b| a * b % n).collect())
            .collect()
    }

    #[test]
    fn trivial_monoid_is_valid() {
        let m = FiniteMonoid::validate(&[vec![0]], 0, 0).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.units(), ElemSet::singleton(0));
    }

    #[test]
    fn z6_validates() {
        let m = FiniteMonoid::validate(&zn_rows(6), 1, 0).unwrap();
        assert_eq!(m, FiniteMonoid::zn_mul(6).unwrap());
    }

    #[test]
    fn perturbed_z6_is_rejected() {
        let mut rows = zn_rows(6);
        rows[2][3] = 1;
        let err = FiniteMonoid::validate(&rows, 1, 0).unwrap_err();
        assert!(matches!(
            err,
            MonoidError::NotAssociative(..) | MonoidError::NotCommutative(..)
        ));
        // symmetric perturbation keeps commutativity, so associativity must break
        rows[3][2] = 1;
        let err = FiniteMonoid::validate(&rows, 1, 0).unwrap_err();
        assert!(matches!(err, MonoidError::NotAssociative(..)), "{err:?}");
    }

    #[test]
    fn structural_errors() {
        assert_eq!(FiniteMonoid::validate(&[], 0, 0), Err(MonoidError::Empty));
        assert!(matches!(
            FiniteMonoid::validate(&[vec![0, 0], vec![0]], 1, 0),
            Err(MonoidError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteMonoid::validate(&[vec![0, 2], vec![0, 1]], 1, 0),
            Err(MonoidError::IndexOutOfRange { value: 2, .. })
        ));
        assert_eq!(
            FiniteMonoid::validate(&zn_rows(3), 0, 0),
            Err(MonoidError::IdentityIsZero(3))
        );
        assert_eq!(
            FiniteMonoid::validate(&zn_rows(3), 2, 0),
            Err(MonoidError::BadIdentity(1))
        );
        assert_eq!(
            FiniteMonoid::validate(&zn_rows(3), 1, 2),
            Err(MonoidError::BadZero(0))
        );
        assert!(matches!(
            FiniteMonoid::new(vec!["a".into(), "a".into()], &zn_rows(2), 1, 0),
            Err(MonoidError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn zn_units() {
        assert_eq!(FiniteMonoid::zn_mul(1).unwrap().size(), 1);
        assert_eq!(
            FiniteMonoid::zn_mul(6).unwrap().units().to_vec(),
            vec![1, 5]
        );
        assert_eq!(
            FiniteMonoid::zn_mul(7).unwrap().units().to_vec(),
            vec![1, 2, 3, 4, 5, 6]
        );
        assert!(matches!(
            FiniteMonoid::zn_mul(65),
            Err(MonoidError::SizeOverflow { size: 65, .. })
        ));
    }

    #[test]
    fn chain_shape() {
        let c1 = FiniteMonoid::chain(1).unwrap();
        assert_eq!(c1.size(), 2);
        assert_eq!((c1.identity(), c1.zero()), (0, 1));
        let c3 = FiniteMonoid::chain(3).unwrap();
        assert_eq!(c3.units(), ElemSet::singleton(0));
        assert_eq!(c3.mul(1, 2), 3);
        assert_eq!(c3.label(2), "a^2");
        assert_eq!(c3.powers(1).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn product_with_trivial_is_same_table() {
        let t = FiniteMonoid::zn_mul(1).unwrap();
        let m = FiniteMonoid::zn_mul(6).unwrap();
        let p = t.direct_product(&m, 64).unwrap();
        assert_eq!(p.rows(), m.rows());
        assert_eq!(p.label(4), "0|4");
        assert!(matches!(
            m.direct_product(&m, 30),
            Err(MonoidError::SizeOverflow { size: 36, cap: 30 })
        ));
    }

    #[test]
    fn powers_cycle() {
        let m = FiniteMonoid::zn_mul(6).unwrap();
        assert_eq!(m.powers(2).to_vec(), vec![2, 4]);
        assert_eq!(m.powers(5).to_vec(), vec![1, 5]);
        assert_eq!(m.pow(2, 3), 2);
    }
}
