//! Decision procedures for the ideal classes: prime, semiprime, primary,
//! maximal, irreducible and strongly irreducible.
//!
//! Predicates whose definition quantifies over ideals take the enumerated
//! lattice; the elementwise variants only need the Cayley table.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::ideal::{self, Ideal, IdealLattice};
use crate::monoid::FiniteMonoid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the trivial monoid has no proper ideal")]
    NoProperIdeal,
    #[error("ideal {0} is not proper")]
    NotProper(Ideal),
}

pub fn is_proper(m: &FiniteMonoid, i: &Ideal) -> bool {
    i.members() != m.elements()
}

/// `xy ∈ P ⇒ x ∈ P or y ∈ P`, i.e. the complement is multiplicatively closed.
pub fn is_prime(m: &FiniteMonoid, p: &Ideal) -> bool {
    if !is_proper(m, p) {
        return false;
    }
    let outside = m.elements() - p.members();
    outside
        .iter()
        .all(|x| outside.iter().all(|y| !p.contains(m.mul(x, y))))
}

/// Prime via ideals: `IJ ⊆ P ⇒ I ⊆ P or J ⊆ P` over the whole lattice.
pub fn is_prime_by_ideals(m: &FiniteMonoid, p: &Ideal, lattice: &IdealLattice) -> bool {
    is_proper(m, p)
        && lattice.iter().all(|i| {
            lattice.iter().all(|j| {
                !m.mul_sets(i.members(), j.members()).is_subset(p.members())
                    || i.is_subset(p)
                    || j.is_subset(p)
            })
        })
}

/// `√I = I`.
pub fn is_semiprime(m: &FiniteMonoid, i: &Ideal) -> bool {
    ideal::radical(m, i).map(|r| r == *i).unwrap_or(false)
}

/// Semiprime via ideals: `J² ⊆ I ⇒ J ⊆ I` over the whole lattice.
pub fn is_semiprime_by_squares(m: &FiniteMonoid, i: &Ideal, lattice: &IdealLattice) -> bool {
    lattice
        .iter()
        .all(|j| !m.mul_sets(j.members(), j.members()).is_subset(i.members()) || j.is_subset(i))
}

/// `xy ∈ I ⇒ x ∈ I or y ∈ √I`, for proper `I`.
pub fn is_primary(m: &FiniteMonoid, i: &Ideal) -> bool {
    if !is_proper(m, i) {
        return false;
    }
    let rad = match ideal::radical(m, i) {
        Ok(r) => r.members(),
        Err(_) => return false,
    };
    (0..m.size()).all(|x| {
        i.contains(x) || (0..m.size()).all(|y| !i.contains(m.mul(x, y)) || rad.contains(y))
    })
}

/// The unique maximal ideal: the non-units.
pub fn maximal_ideal(m: &FiniteMonoid) -> Result<Ideal, ClassifyError> {
    let non_units = m.elements() - m.units();
    if non_units.is_empty() {
        return Err(ClassifyError::NoProperIdeal);
    }
    Ok(Ideal::trusted(m, non_units))
}

pub fn is_maximal(m: &FiniteMonoid, i: &Ideal) -> bool {
    maximal_ideal(m).map(|mx| mx == *i).unwrap_or(false)
}

/// Maximality checked directly on the lattice: proper, and no proper ideal
/// lies strictly above it.
pub fn is_maximal_in_lattice(m: &FiniteMonoid, i: &Ideal, lattice: &IdealLattice) -> bool {
    is_proper(m, i) && lattice.proper().all(|j| !i.is_subset(j) || j == i)
}

/// No two ideals different from `I` meet in `I`. The whole monoid counts as
/// irreducible.
pub fn is_irreducible(i: &Ideal, lattice: &IdealLattice) -> bool {
    let above: Vec<ElemSet> = lattice
        .above(i)
        .filter(|j| *j != i)
        .map(|j| j.members())
        .collect();
    // only ideals strictly above I can meet in I
    above
        .iter()
        .enumerate()
        .all(|(k, &j)| above[k + 1..].iter().all(|&l| j & l != i.members()))
}

/// `J ∩ K ⊆ I ⇒ J ⊆ I or K ⊆ I` for all ideals `J`, `K`.
pub fn is_strongly_irreducible(i: &Ideal, lattice: &IdealLattice) -> bool {
    let outside: Vec<ElemSet> = lattice
        .iter()
        .filter(|j| !j.is_subset(i))
        .map(|j| j.members())
        .collect();
    outside.iter().enumerate().all(|(k, &j)| {
        outside[k..]
            .iter()
            .all(|&l| !(j & l).is_subset(i.members()))
    })
}

/// `⟨m⟩ ∩ ⟨m'⟩ ⊆ I ⇒ m ∈ I or m' ∈ I` for all elements; no lattice needed.
pub fn elementwise_irreducible(m: &FiniteMonoid, i: &Ideal) -> bool {
    let outside = m.elements() - i.members();
    outside.iter().all(|a| {
        outside
            .iter()
            .filter(|&b| b >= a)
            .all(|b| !(m.principal(a) & m.principal(b)).is_subset(i.members()))
    })
}

/// Every minimal irreducible ideal containing `j`, in canonical order.
pub fn minimal_irreducibles_over(
    m: &FiniteMonoid,
    j: &Ideal,
    lattice: &IdealLattice,
) -> Result<Vec<Ideal>, ClassifyError> {
    if !is_proper(m, j) {
        return Err(ClassifyError::NotProper(*j));
    }
    let candidates: Vec<Ideal> = lattice
        .above(j)
        .filter(|i| is_irreducible(i, lattice))
        .copied()
        .collect();
    Ok(candidates
        .iter()
        .filter(|i| {
            !candidates
                .iter()
                .any(|other| other != *i && other.is_subset(i))
        })
        .copied()
        .collect())
}

/// The canonically first minimal irreducible ideal over a proper `j`.
pub fn minimal_irreducible_over(
    m: &FiniteMonoid,
    j: &Ideal,
    lattice: &IdealLattice,
) -> Result<Ideal, ClassifyError> {
    minimal_irreducibles_over(m, j, lattice).map(|all| {
        *all.first()
            .expect("the maximal ideal is irreducible and contains every proper ideal")
    })
}

pub fn all_ideals_comparable(lattice: &IdealLattice) -> bool {
    lattice.is_chain()
}

pub fn every_proper_ideal_irreducible(m: &FiniteMonoid, lattice: &IdealLattice) -> bool {
    lattice
        .proper()
        .all(|i| is_proper(m, i) && is_irreducible(i, lattice))
}

/// Per-ideal classification record as emitted in JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub members: Vec<usize>,
    pub proper: bool,
    pub prime: bool,
    pub semiprime: bool,
    pub primary: bool,
    pub maximal: bool,
    pub irreducible: bool,
    pub strongly_irreducible: bool,
    pub radical: Ideal,
}

pub fn classify(m: &FiniteMonoid, i: &Ideal, lattice: &IdealLattice) -> Classification {
    Classification {
        members: i.to_vec(),
        proper: is_proper(m, i),
        prime: is_prime(m, i),
        semiprime: is_semiprime(m, i),
        primary: is_primary(m, i),
        maximal: is_maximal(m, i),
        irreducible: is_irreducible(i, lattice),
        strongly_irreducible: is_strongly_irreducible(i, lattice),
        radical: ideal::radical(m, i).expect("ideal of this monoid"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_ideals, principal, DEFAULT_MAX_IDEALS};

    fn setup(m: FiniteMonoid) -> (FiniteMonoid, IdealLattice) {
        let lat = enumerate_ideals(&m, DEFAULT_MAX_IDEALS).unwrap();
        (m, lat)
    }

    fn ideal(m: &FiniteMonoid, xs: &[usize]) -> Ideal {
        Ideal::from_elements(m, xs.iter().copied()).unwrap()
    }

    #[test]
    fn properness() {
        let m = FiniteMonoid::zn_mul(6).unwrap();
        assert!(!is_proper(&m, &Ideal::whole(&m)));
        assert!(is_proper(&m, &Ideal::zero(&m)));
        assert!(is_proper(&m, &ideal(&m, &[0, 2, 3, 4])));
    }

    #[test]
    fn primes_in_z6_and_chains() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        for xs in [&[0, 3][..], &[0, 2, 4]] {
            let p = ideal(&m, xs);
            assert!(is_prime(&m, &p));
            assert!(is_prime_by_ideals(&m, &p, &lat));
            assert!(is_semiprime(&m, &p));
            assert!(is_primary(&m, &p));
        }
        assert!(!is_prime(&m, &Ideal::zero(&m)));
        assert!(!is_prime(&m, &Ideal::whole(&m)));
        for k in 2..=5 {
            let c = FiniteMonoid::chain(k).unwrap();
            assert!(!is_prime(&c, &Ideal::zero(&c)));
        }
    }

    #[test]
    fn semiprime_and_primary() {
        let m = FiniteMonoid::zn_mul(6).unwrap();
        assert!(is_semiprime(&m, &Ideal::zero(&m)));
        assert!(!is_primary(&m, &Ideal::zero(&m)));
        let c2 = FiniteMonoid::chain(2).unwrap();
        assert!(!is_semiprime(&c2, &Ideal::zero(&c2)));
        for k in 1..=5 {
            let c = FiniteMonoid::chain(k).unwrap();
            assert!(is_primary(&c, &Ideal::zero(&c)));
        }
    }

    #[test]
    fn maximal_ideals() {
        let c = FiniteMonoid::chain(4).unwrap();
        assert_eq!(maximal_ideal(&c).unwrap().to_vec(), vec![1, 2, 3, 4]);
        let m = FiniteMonoid::zn_mul(6).unwrap();
        assert_eq!(maximal_ideal(&m).unwrap().to_vec(), vec![0, 2, 3, 4]);
        let z7 = FiniteMonoid::zn_mul(7).unwrap();
        assert_eq!(maximal_ideal(&z7).unwrap().to_vec(), vec![0]);
        let t = FiniteMonoid::zn_mul(1).unwrap();
        assert_eq!(maximal_ideal(&t), Err(ClassifyError::NoProperIdeal));
        assert!(!is_maximal(&t, &Ideal::whole(&t)));
    }

    #[test]
    fn irreducibility_in_z6() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let whole = Ideal::whole(&m);
        let zero = Ideal::zero(&m);
        let three = principal(&m, 3);
        let two = principal(&m, 2);
        assert!(is_irreducible(&whole, &lat));
        assert!(elementwise_irreducible(&m, &whole));
        assert!(!is_irreducible(&zero, &lat));
        assert!(!is_strongly_irreducible(&zero, &lat));
        assert!(!elementwise_irreducible(&m, &zero));
        assert!(is_irreducible(&three, &lat));
        assert!(elementwise_irreducible(&m, &three));
        assert!(is_strongly_irreducible(&two, &lat));
        assert!(is_strongly_irreducible(&maximal_ideal(&m).unwrap(), &lat));
    }

    #[test]
    fn minimal_irreducible_examples() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let three = principal(&m, 3);
        assert_eq!(minimal_irreducible_over(&m, &three, &lat).unwrap(), three);
        assert_eq!(
            minimal_irreducible_over(&m, &Ideal::zero(&m), &lat)
                .unwrap()
                .to_vec(),
            vec![0, 3]
        );
        let all = minimal_irreducibles_over(&m, &Ideal::zero(&m), &lat).unwrap();
        let all: Vec<Vec<usize>> = all.iter().map(|i| i.to_vec()).collect();
        assert_eq!(all, vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(
            minimal_irreducible_over(&m, &Ideal::whole(&m), &lat),
            Err(ClassifyError::NotProper(Ideal::whole(&m)))
        );

        let (c, lat) = setup(FiniteMonoid::chain(4).unwrap());
        assert_eq!(
            minimal_irreducible_over(&c, &Ideal::zero(&c), &lat).unwrap(),
            Ideal::zero(&c)
        );
    }

    #[test]
    fn comparability() {
        for k in 1..=5 {
            let (c, lat) = setup(FiniteMonoid::chain(k).unwrap());
            assert!(all_ideals_comparable(&lat));
            assert!(every_proper_ideal_irreducible(&c, &lat));
        }
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        assert!(!all_ideals_comparable(&lat));
        assert!(!every_proper_ideal_irreducible(&m, &lat));
        let (_, lat) = setup(FiniteMonoid::zn_mul(1).unwrap());
        assert!(all_ideals_comparable(&lat));
    }

    #[test]
    fn classification_record() {
        let (m, lat) = setup(FiniteMonoid::zn_mul(6).unwrap());
        let c = classify(&m, &principal(&m, 3), &lat);
        assert!(c.proper && c.prime && c.semiprime && c.primary && c.irreducible);
        assert!(!c.maximal);
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["radical"]["members"], serde_json::json!([0, 3]));
    }
}
