//! Ideal calculus: generation, products, colon ideals, radicals and the
//! enumeration of the full ideal lattice.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::monoid::{FiniteMonoid, MonoidId};

/// Default cap on the number of ideals an enumeration may produce.
pub const DEFAULT_MAX_IDEALS: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("divisor set is empty")]
    EmptyDivisorSet,
    #[error("an ideal must be nonempty")]
    EmptyIdeal,
    #[error("element {0} is not in the monoid")]
    OutOfRange(usize),
    #[error("not an ideal: {element} is a member but {element}*{multiplier} = {product} is not")]
    NotAnIdeal {
        element: usize,
        multiplier: usize,
        product: usize,
    },
    #[error("ideals belong to different monoids")]
    MonoidMismatch,
    #[error("ideal lattice exceeds {cap} ideals")]
    LatticeTooLarge { cap: usize },
}

/// An ideal of a particular monoid: a nonempty member set closed under
/// multiplication by arbitrary elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: ElemSet,
    monoid: MonoidId,
}

impl Ideal {
    /// Checks nonemptiness and absorption.
    pub fn new(m: &FiniteMonoid, members: ElemSet) -> Result<Self, IdealError> {
        if members.is_empty() {
            return Err(IdealError::EmptyIdeal);
        }
        if let Some(bad) = (members - m.elements()).first() {
            return Err(IdealError::OutOfRange(bad));
        }
        for element in members {
            for multiplier in 0..m.size() {
                let product = m.mul(element, multiplier);
                if !members.contains(product) {
                    return Err(IdealError::NotAnIdeal {
                        element,
                        multiplier,
                        product,
                    });
                }
            }
        }
        Ok(Ideal {
            members,
            monoid: m.id(),
        })
    }

    pub fn from_elements(
        m: &FiniteMonoid,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Self, IdealError> {
        let mut set = ElemSet::EMPTY;
        for e in elements {
            if e >= m.size() {
                return Err(IdealError::OutOfRange(e));
            }
            set.insert(e);
        }
        Self::new(m, set)
    }

    /// Caller guarantees `members` is an ideal of `m`.
    pub(crate) fn trusted(m: &FiniteMonoid, members: ElemSet) -> Self {
        debug_assert!(Self::new(m, members).is_ok(), "{members} is not an ideal");
        Ideal {
            members,
            monoid: m.id(),
        }
    }

    /// The whole monoid.
    pub fn whole(m: &FiniteMonoid) -> Self {
        Ideal {
            members: m.elements(),
            monoid: m.id(),
        }
    }

    /// `{0}`, the least ideal.
    pub fn zero(m: &FiniteMonoid) -> Self {
        Ideal {
            members: ElemSet::singleton(m.zero()),
            monoid: m.id(),
        }
    }

    #[inline]
    pub fn members(&self) -> ElemSet {
        self.members
    }

    #[inline]
    pub fn monoid_id(&self) -> MonoidId {
        self.monoid
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    #[inline]
    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(other.members)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn belongs_to(&self, m: &FiniteMonoid) -> bool {
        self.monoid == m.id()
    }

    fn check(&self, m: &FiniteMonoid) -> Result<(), IdealError> {
        if self.belongs_to(m) {
            Ok(())
        } else {
            Err(IdealError::MonoidMismatch)
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.members)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Ideal", 1)?;
        s.serialize_field("members", &self.members.to_vec())?;
        s.end()
    }
}

/// `S ∪ SM`, the smallest ideal containing `s`.
pub fn generate(m: &FiniteMonoid, s: ElemSet) -> Result<Ideal, IdealError> {
    if s.is_empty() {
        return Err(IdealError::EmptyGeneratorSet);
    }
    if let Some(bad) = (s - m.elements()).first() {
        return Err(IdealError::OutOfRange(bad));
    }
    let members = s.iter().fold(ElemSet::EMPTY, |acc, a| acc | m.principal(a));
    Ok(Ideal::trusted(m, members))
}

/// Principal ideal `⟨a⟩`.
pub fn principal(m: &FiniteMonoid, a: usize) -> Ideal {
    Ideal::trusted(m, m.principal(a))
}

/// `IJ = { ij }`.
pub fn product(m: &FiniteMonoid, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    i.check(m)?;
    j.check(m)?;
    let members = m.mul_sets(i.members, j.members);
    debug_assert!(members.is_subset(i.members & j.members));
    Ok(Ideal::trusted(m, members))
}

pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    if i.monoid != j.monoid {
        return Err(IdealError::MonoidMismatch);
    }
    // both contain zero, so the meet is nonempty
    Ok(Ideal {
        members: i.members & j.members,
        monoid: i.monoid,
    })
}

pub fn union(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    if i.monoid != j.monoid {
        return Err(IdealError::MonoidMismatch);
    }
    Ok(Ideal {
        members: i.members | j.members,
        monoid: i.monoid,
    })
}

/// `(I : S) = { a | aS ⊆ I }`.
pub fn colon(m: &FiniteMonoid, i: &Ideal, s: ElemSet) -> Result<Ideal, IdealError> {
    i.check(m)?;
    if s.is_empty() {
        return Err(IdealError::EmptyDivisorSet);
    }
    if let Some(bad) = (s - m.elements()).first() {
        return Err(IdealError::OutOfRange(bad));
    }
    let members = (0..m.size())
        .filter(|&a| s.iter().all(|b| i.members.contains(m.mul(a, b))))
        .collect();
    Ok(Ideal::trusted(m, members))
}

/// `(I : J)` for an ideal `J`.
pub fn colon_ideal(m: &FiniteMonoid, i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    j.check(m)?;
    colon(m, i, j.members)
}

/// `√I`: elements with some positive power in `I`.
pub fn radical(m: &FiniteMonoid, i: &Ideal) -> Result<Ideal, IdealError> {
    i.check(m)?;
    let members = (0..m.size())
        .filter(|&a| !m.powers(a).is_disjoint(i.members))
        .collect();
    Ok(Ideal::trusted(m, members))
}

/// All ideals of a monoid in canonical order (cardinality, then member list).
#[derive(Clone)]
pub struct IdealLattice {
    monoid: MonoidId,
    size: usize,
    ideals: Vec<Ideal>,
    index: HashMap<ElemSet, usize>,
}

impl IdealLattice {
    fn from_sets(m: &FiniteMonoid, mut sets: Vec<ElemSet>) -> Self {
        sets.sort_by(|a, b| a.canonical_cmp(*b));
        sets.dedup();
        let ideals: Vec<Ideal> = sets.into_iter().map(|s| Ideal::trusted(m, s)).collect();
        let index = ideals
            .iter()
            .enumerate()
            .map(|(k, i)| (i.members, k))
            .collect();
        IdealLattice {
            monoid: m.id(),
            size: m.size(),
            ideals,
            index,
        }
    }

    pub fn monoid_id(&self) -> MonoidId {
        self.monoid
    }

    pub fn belongs_to(&self, m: &FiniteMonoid) -> bool {
        self.monoid == m.id()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ideal> {
        self.ideals.iter()
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Position of a member set in canonical order, if it is an ideal.
    pub fn position(&self, members: ElemSet) -> Option<usize> {
        self.index.get(&members).copied()
    }

    pub fn contains(&self, members: ElemSet) -> bool {
        self.index.contains_key(&members)
    }

    pub fn get(&self, members: ElemSet) -> Option<Ideal> {
        self.position(members).map(|k| self.ideals[k])
    }

    /// The least ideal `{0}`.
    pub fn bottom(&self) -> Ideal {
        self.ideals[0]
    }

    /// The whole monoid.
    pub fn top(&self) -> Ideal {
        *self.ideals.last().expect("lattice is never empty")
    }

    pub fn proper(&self) -> impl Iterator<Item = &Ideal> + '_ {
        let full = ElemSet::full(self.size);
        self.ideals.iter().filter(move |i| i.members != full)
    }

    /// Ideals containing `i`.
    pub fn above<'a>(&'a self, i: &'a Ideal) -> impl Iterator<Item = &'a Ideal> + 'a {
        self.ideals.iter().filter(move |j| i.is_subset(j))
    }

    pub fn is_chain(&self) -> bool {
        self.ideals.windows(2).all(|w| w[0].is_subset(&w[1]))
    }
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.ideals.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a IdealLattice {
    type Item = &'a Ideal;
    type IntoIter = std::slice::Iter<'a, Ideal>;

    fn into_iter(self) -> Self::IntoIter {
        self.ideals.iter()
    }
}

/// Enumerates every ideal as a union of principal ideals.
///
/// Starting from the distinct principal ideals, each discovered ideal is
/// joined with every principal ideal until no new set appears. Every
/// nonempty union of principals is reached by adding one principal at a
/// time, so the closure is complete.
pub fn enumerate_ideals(m: &FiniteMonoid, max_ideals: usize) -> Result<IdealLattice, IdealError> {
    let mut principals: Vec<ElemSet> = (0..m.size()).map(|a| m.principal(a)).collect();
    principals.sort_by(|a, b| a.canonical_cmp(*b));
    principals.dedup();

    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut queue: Vec<ElemSet> = Vec::new();
    for &p in &principals {
        if seen.insert(p) {
            queue.push(p);
        }
    }
    while let Some(current) = queue.pop() {
        for &p in &principals {
            if p.is_subset(current) {
                continue;
            }
            let next = current | p;
            if seen.insert(next) {
                if seen.len() > max_ideals {
                    return Err(IdealError::LatticeTooLarge { cap: max_ideals });
                }
                queue.push(next);
            }
        }
    }
    if seen.len() > max_ideals {
        return Err(IdealError::LatticeTooLarge { cap: max_ideals });
    }
    Ok(IdealLattice::from_sets(m, seen.into_iter().collect()))
}

/// Checks `A ∩ (B ∪ C) = (A ∩ B) ∪ (A ∩ C)` over all triples; returns the
/// first violating triple of lattice positions.
pub fn is_distributive(lattice: &IdealLattice) -> Result<(), (usize, usize, usize)> {
    let sets: Vec<ElemSet> = lattice.iter().map(|i| i.members).collect();
    for (a, &x) in sets.iter().enumerate() {
        for (b, &y) in sets.iter().enumerate() {
            for (c, &z) in sets.iter().enumerate() {
                let join = y | z;
                if !lattice.contains(join) || !lattice.contains(x & y) {
                    return Err((a, b, c));
                }
                if x & join != (x & y) | (x & z) {
                    return Err((a, b, c));
                }
            }
        }
    }
    Ok(())
}
