//! Irreducible and primary decompositions of ideals.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::classify;
use crate::ideal::{Ideal, IdealLattice};
use crate::monoid::FiniteMonoid;

/// Default cap on search nodes visited by [`check_uniqueness`].
pub const DEFAULT_ANTICHAIN_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("element {0} lies in the ideal")]
    ElementInIdeal(usize),
    #[error("antichain search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: u64 },
    #[error("ideal or lattice belongs to a different monoid")]
    MonoidMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    Irreducible,
    Primary,
    IrreduciblePrimary,
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionKind::Irreducible => "irreducible",
            DecompositionKind::Primary => "primary",
            DecompositionKind::IrreduciblePrimary => "irreducible-primary",
        })
    }
}

impl Serialize for DecompositionKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A family of ideals whose intersection is `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub target: Ideal,
    pub components: Vec<Ideal>,
    pub kind: DecompositionKind,
    pub minimal: bool,
}

impl DecompositionReport {
    /// Intersection of the components; the empty family gives the whole monoid.
    pub fn intersection(&self, m: &FiniteMonoid) -> ElemSet {
        intersection(m, &self.components)
    }

    pub fn is_exact(&self, m: &FiniteMonoid) -> bool {
        self.intersection(m) == self.target.members()
    }

    /// No component contains the intersection of the others.
    pub fn is_irredundant(&self, m: &FiniteMonoid) -> bool {
        is_irredundant(m, &self.components)
    }
}

fn intersection(m: &FiniteMonoid, family: &[Ideal]) -> ElemSet {
    family.iter().fold(m.elements(), |acc, i| acc & i.members())
}

fn is_irredundant(m: &FiniteMonoid, family: &[Ideal]) -> bool {
    (0..family.len()).all(|k| {
        let rest = family
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(m.elements(), |acc, (_, i)| acc & i.members());
        !rest.is_subset(family[k].members())
    })
}

fn check(m: &FiniteMonoid, i: &Ideal, lattice: &IdealLattice) -> Result<(), DecompositionError> {
    if i.belongs_to(m) && lattice.belongs_to(m) {
        Ok(())
    } else {
        Err(DecompositionError::MonoidMismatch)
    }
}

/// All irreducible ideals containing `i` (the whole monoid included).
/// Their intersection is `i`.
pub fn irreducible_hull(
    m: &FiniteMonoid,
    i: &Ideal,
    lattice: &IdealLattice,
) -> Result<DecompositionReport, DecompositionError> {
    check(m, i, lattice)?;
    let components: Vec<Ideal> = lattice
        .above(i)
        .filter(|j| classify::is_irreducible(j, lattice))
        .copied()
        .collect();
    Ok(DecompositionReport {
        target: *i,
        minimal: components.len() <= 1 || is_irredundant(m, &components),
        components,
        kind: DecompositionKind::Irreducible,
    })
}

/// The largest ideal containing `i` and avoiding `x`. Ties, should the
/// lattice ever have several maximal candidates, go to the canonically first.
pub fn maximal_avoiding(
    m: &FiniteMonoid,
    i: &Ideal,
    x: usize,
    lattice: &IdealLattice,
) -> Result<Ideal, DecompositionError> {
    check(m, i, lattice)?;
    if i.contains(x) {
        return Err(DecompositionError::ElementInIdeal(x));
    }
    let candidates: Vec<&Ideal> = lattice.above(i).filter(|j| !j.contains(x)).collect();
    let maximal = candidates
        .iter()
        .find(|j| !candidates.iter().any(|k| k != *j && j.is_subset(k)))
        .expect("i itself avoids x");
    Ok(**maximal)
}

/// Drops, in canonical order and until nothing changes, any component that
/// contains the intersection of the others. A single component is kept.
fn minimize(m: &FiniteMonoid, mut components: Vec<Ideal>) -> Vec<Ideal> {
    components.sort_by(|a, b| a.members().canonical_cmp(b.members()));
    components.dedup();
    'outer: loop {
        if components.len() <= 1 {
            return components;
        }
        for k in 0..components.len() {
            let rest = components
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .fold(m.elements(), |acc, (_, c)| acc & c.members());
            if rest.is_subset(components[k].members()) {
                components.remove(k);
                continue 'outer;
            }
        }
        return components;
    }
}

/// A minimal family of irreducible ideals meeting in `i`, built from the
/// ideals maximal among those containing `i` and avoiding one `x ∉ i`.
/// The whole monoid decomposes as itself.
pub fn irreducible_decomposition(
    m: &FiniteMonoid,
    i: &Ideal,
    lattice: &IdealLattice,
) -> Result<DecompositionReport, DecompositionError> {
    check(m, i, lattice)?;
    let outside = m.elements() - i.members();
    let mut components = Vec::with_capacity(outside.len());
    for x in outside {
        components.push(maximal_avoiding(m, i, x, lattice)?);
    }
    if components.is_empty() {
        components.push(*i);
    }
    let components = minimize(m, components);
    let all_primary = components.iter().all(|c| classify::is_primary(m, c));
    Ok(DecompositionReport {
        target: *i,
        components,
        kind: if all_primary {
            DecompositionKind::IrreduciblePrimary
        } else {
            DecompositionKind::Irreducible
        },
        minimal: true,
    })
}

/// A minimal family of primary ideals meeting in `i`. The irreducible
/// components are primary in a finite monoid; any that are not are dropped
/// before re-minimizing. The whole monoid gets the empty family.
pub fn primary_decomposition(
    m: &FiniteMonoid,
    i: &Ideal,
    lattice: &IdealLattice,
) -> Result<DecompositionReport, DecompositionError> {
    let irr = irreducible_decomposition(m, i, lattice)?;
    if !classify::is_proper(m, i) {
        return Ok(DecompositionReport {
            target: *i,
            components: Vec::new(),
            kind: DecompositionKind::Primary,
            minimal: true,
        });
    }
    let primary: Vec<Ideal> = irr
        .components
        .into_iter()
        .filter(|c| classify::is_primary(m, c))
        .collect();
    let components = minimize(m, primary);
    Ok(DecompositionReport {
        target: *i,
        minimal: is_irredundant(m, &components),
        components,
        kind: DecompositionKind::Primary,
    })
}

/// All irredundant families of primary ideals meeting exactly in `i`.
///
/// Depth-first over candidates in canonical order. A candidate is skipped
/// when it already contains the running intersection (it would be
/// redundant) or when even the intersection of every remaining candidate
/// cannot reach `i`. Each visited node spends one unit of `budget`.
pub fn minimal_primary_decompositions(
    m: &FiniteMonoid,
    i: &Ideal,
    lattice: &IdealLattice,
    budget: u64,
) -> Result<Vec<Vec<Ideal>>, DecompositionError> {
    search_primary_decompositions(m, i, lattice, budget).map(|(found, _)| found)
}

fn search_primary_decompositions(
    m: &FiniteMonoid,
    i: &Ideal,
    lattice: &IdealLattice,
    budget: u64,
) -> Result<(Vec<Vec<Ideal>>, u64), DecompositionError> {
    check(m, i, lattice)?;
    if !classify::is_proper(m, i) {
        return Ok((vec![Vec::new()], 1));
    }
    let candidates: Vec<Ideal> = lattice
        .above(i)
        .filter(|p| classify::is_primary(m, p))
        .copied()
        .collect();
    // suffix[k] = intersection of candidates[k..]
    let mut suffix = vec![m.elements(); candidates.len() + 1];
    for k in (0..candidates.len()).rev() {
        suffix[k] = suffix[k + 1] & candidates[k].members();
    }

    struct Search<'s> {
        m: &'s FiniteMonoid,
        target: ElemSet,
        candidates: &'s [Ideal],
        suffix: &'s [ElemSet],
        spent: u64,
        budget: u64,
        chosen: Vec<Ideal>,
        found: Vec<Vec<Ideal>>,
    }

    impl Search<'_> {
        fn go(&mut self, start: usize, current: ElemSet) -> Result<(), DecompositionError> {
            self.spent += 1;
            if self.spent > self.budget {
                return Err(DecompositionError::SearchBudgetExceeded {
                    budget: self.budget,
                });
            }
            if current == self.target {
                if is_irredundant(self.m, &self.chosen) {
                    self.found.push(self.chosen.clone());
                }
                return Ok(());
            }
            for k in start..self.candidates.len() {
                if (current & self.suffix[k]) != self.target {
                    // suffixes only grow with k
                    break;
                }
                let c = self.candidates[k];
                if current.is_subset(c.members()) {
                    continue;
                }
                if self.chosen.iter().any(|p| c.is_subset(p)) {
                    continue;
                }
                self.chosen.push(c);
                self.go(k + 1, current & c.members())?;
                self.chosen.pop();
            }
            Ok(())
        }
    }

    let mut search = Search {
        m,
        target: i.members(),
        candidates: &candidates,
        suffix: &suffix,
        spent: 0,
        budget,
        chosen: Vec::new(),
        found: Vec::new(),
    };
    search.go(0, m.elements())?;
    Ok((search.found, search.spent))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessCase {
    pub ideal: Ideal,
    pub decompositions: Vec<Vec<Ideal>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    /// Whether every primary ideal of the monoid is irreducible.
    pub hypothesis: bool,
    pub cases: Vec<UniquenessCase>,
    /// Ideals with other than exactly one minimal primary decomposition
    /// while the hypothesis holds.
    pub violations: Vec<Ideal>,
    /// Ideals with several minimal decompositions when the hypothesis fails.
    pub non_unique: Vec<Ideal>,
}

impl UniquenessReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates every minimal primary decomposition of every ideal. The budget
/// applies to the whole monoid.
pub fn check_uniqueness(
    m: &FiniteMonoid,
    lattice: &IdealLattice,
    budget: u64,
) -> Result<UniquenessReport, DecompositionError> {
    let hypothesis = lattice
        .iter()
        .all(|p| !classify::is_primary(m, p) || classify::is_irreducible(p, lattice));
    let mut remaining = budget;
    let mut cases = Vec::with_capacity(lattice.len());
    let mut violations = Vec::new();
    let mut non_unique = Vec::new();
    for i in lattice.iter() {
        let (found, spent) = search_primary_decompositions(m, i, lattice, remaining)
            .map_err(|_| DecompositionError::SearchBudgetExceeded { budget })?;
        remaining -= spent;
        if hypothesis && found.len() != 1 {
            violations.push(*i);
        }
        if !hypothesis && found.len() > 1 {
            non_unique.push(*i);
        }
        cases.push(UniquenessCase {
            ideal: *i,
            decompositions: found,
        });
    }
    Ok(UniquenessReport {
        hypothesis,
        cases,
        violations,
        non_unique,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_ideals, principal, DEFAULT_MAX_IDEALS};

    fn setup(m: FiniteMonoid) -> (FiniteMonoid, IdealLattice) {
        let lat = enumerate_ideals(&m, DEFAULT_MAX_IDEALS).unwrap();
        (m, lat)
    }

    fn lists(family: &[Ideal]) -> Vec<Vec<usize>> {
        family.iter().map(|i| i.to_vec()).collect()
    }

    #[test]
    fn hull_of_zero_in_z6() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let r = irreducible_hull(&m, &Ideal::zero(&m), &lat).unwrap();
        assert_eq!(
            lists(&r.components),
            vec![
                vec![0, 3],
                vec![0, 2, 4],
                vec![0, 2, 3, 4],
                vec![0, 1, 2, 3, 4, 5]
            ]
        );
        assert!(r.is_exact(&m));
        assert!(!r.minimal);
        let three = principal(&m, 3);
        let r = irreducible_hull(&m, &three, &lat).unwrap();
        assert!(r.components.contains(&three));
        assert!(r.is_exact(&m));
    }

    #[test]
    fn maximal_avoiding_examples() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let zero = Ideal::zero(&m);
        assert_eq!(
            maximal_avoiding(&m, &zero, 3, &lat).unwrap().to_vec(),
            vec![0, 2, 4]
        );
        assert_eq!(
            maximal_avoiding(&m, &zero, 2, &lat).unwrap().to_vec(),
            vec![0, 3]
        );
        let mx = classify::maximal_ideal(&m).unwrap();
        assert_eq!(maximal_avoiding(&m, &mx, 5, &lat).unwrap(), mx);
        assert_eq!(
            maximal_avoiding(&m, &zero, 0, &lat),
            Err(DecompositionError::ElementInIdeal(0))
        );
    }

    #[test]
    fn irreducible_decompositions() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let r = irreducible_decomposition(&m, &Ideal::zero(&m), &lat).unwrap();
        assert_eq!(lists(&r.components), vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(r.kind, DecompositionKind::IrreduciblePrimary);
        assert!(r.is_exact(&m) && r.is_irredundant(&m));

        let three = principal(&m, 3);
        assert_eq!(
            irreducible_decomposition(&m, &three, &lat)
                .unwrap()
                .components,
            vec![three]
        );
        let whole = Ideal::whole(&m);
        let r = irreducible_decomposition(&m, &whole, &lat).unwrap();
        assert_eq!(r.components, vec![whole]);
        assert_eq!(r.kind, DecompositionKind::Irreducible);

        let (c, lat) = setup(FiniteMonoid::chain(4).unwrap());
        for i in lat.iter() {
            assert_eq!(
                irreducible_decomposition(&c, i, &lat).unwrap().components,
                vec![*i]
            );
        }
    }

    #[test]
    fn primary_decompositions() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let r = primary_decomposition(&m, &Ideal::zero(&m), &lat).unwrap();
        assert_eq!(lists(&r.components), vec![vec![0, 3], vec![0, 2, 4]]);
        assert!(r.components.iter().all(|c| classify::is_primary(&m, c)));
        let p = principal(&m, 2);
        assert_eq!(
            primary_decomposition(&m, &p, &lat).unwrap().components,
            vec![p]
        );
        let r = primary_decomposition(&m, &Ideal::whole(&m), &lat).unwrap();
        assert!(r.components.is_empty() && r.is_exact(&m));

        let (c, lat) = setup(FiniteMonoid::chain(3).unwrap());
        let zero = Ideal::zero(&c);
        assert_eq!(
            primary_decomposition(&c, &zero, &lat).unwrap().components,
            vec![zero]
        );
    }

    #[test]
    fn uniqueness_in_z6_and_chains() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let r = check_uniqueness(&m, &lat, DEFAULT_ANTICHAIN_BUDGET).unwrap();
        assert!(r.hypothesis && r.holds());
        let zero_case = &r.cases[0];
        assert_eq!(zero_case.decompositions.len(), 1);
        assert_eq!(
            lists(&zero_case.decompositions[0]),
            vec![vec![0, 3], vec![0, 2, 4]]
        );

        for k in 1..=6 {
            let (c, lat) = setup(FiniteMonoid::chain(k).unwrap());
            let r = check_uniqueness(&c, &lat, DEFAULT_ANTICHAIN_BUDGET).unwrap();
            assert!(r.hypothesis && r.holds());
            for case in r.cases.iter().filter(|c2| c2.ideal.len() < k + 1) {
                assert_eq!(case.decompositions, vec![vec![case.ideal]]);
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(12).unwrap());
        assert_eq!(
            check_uniqueness(&m, &lat, 3),
            Err(DecompositionError::SearchBudgetExceeded { budget: 3 })
        );
    }
}
