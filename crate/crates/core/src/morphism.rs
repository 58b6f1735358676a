//! Homomorphisms, kernels, and contraction/extension of ideals.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::classify;
use crate::ideal::{self, Ideal, IdealLattice};
use crate::monoid::FiniteMonoid;

/// Carrier size up to which [`enumerate_homomorphisms`] is used by sweeps.
pub const HOM_SWEEP_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map has {got} images, source has {expected} elements")]
    LengthMismatch { expected: usize, got: usize },
    #[error("image {image} of element {element} is not in the target")]
    ImageOutOfRange { element: usize, image: usize },
    #[error("identity is not mapped to identity")]
    IdentityNotPreserved,
    #[error("not multiplicative at ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("ideal does not belong to the source monoid")]
    SourceMismatch,
    #[error("ideal does not belong to the target monoid")]
    TargetMismatch,
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("inverse image is empty (the map does not send 0 into the ideal)")]
    EmptyContraction,
    #[error("lattice does not belong to the expected monoid")]
    LatticeMismatch,
}

/// A validated monoid homomorphism. `φ(0) = 0` is not required; see
/// [`Homomorphism::is_pointed`].
#[derive(Debug, Clone)]
pub struct Homomorphism<'a> {
    source: &'a FiniteMonoid,
    target: &'a FiniteMonoid,
    map: Vec<usize>,
}

impl<'a> Homomorphism<'a> {
    pub fn new(
        source: &'a FiniteMonoid,
        target: &'a FiniteMonoid,
        map: Vec<usize>,
    ) -> Result<Self, MorphismError> {
        if map.len() != source.size() {
            return Err(MorphismError::LengthMismatch {
                expected: source.size(),
                got: map.len(),
            });
        }
        if let Some((element, &image)) = map.iter().enumerate().find(|(_, &v)| v >= target.size()) {
            return Err(MorphismError::ImageOutOfRange { element, image });
        }
        if map[source.identity()] != target.identity() {
            return Err(MorphismError::IdentityNotPreserved);
        }
        for a in 0..source.size() {
            for b in a..source.size() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(MorphismError::NotMultiplicative(a, b));
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(m: &'a FiniteMonoid) -> Self {
        Homomorphism {
            source: m,
            target: m,
            map: (0..m.size()).collect(),
        }
    }

    pub fn source(&self) -> &'a FiniteMonoid {
        self.source
    }

    pub fn target(&self) -> &'a FiniteMonoid {
        self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|a| self.map[a]).collect()
    }

    /// Whether `φ(0) = 0`.
    pub fn is_pointed(&self) -> bool {
        self.map[self.source.zero()] == self.target.zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.elements()) == self.target.elements()
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.source.elements()).len() == self.source.size()
    }
}

/// `J^c = φ⁻¹(J)`.
pub fn contract(phi: &Homomorphism<'_>, j: &Ideal) -> Result<Ideal, MorphismError> {
    if !j.belongs_to(phi.target) {
        return Err(MorphismError::TargetMismatch);
    }
    let members: ElemSet = (0..phi.source.size())
        .filter(|&a| j.contains(phi.apply(a)))
        .collect();
    // empty only when φ(0) ∉ J, which needs a non-pointed φ
    if members.is_empty() {
        return Err(MorphismError::EmptyContraction);
    }
    Ok(Ideal::trusted(phi.source, members))
}

/// `I^e = ⟨φ(I)⟩`.
pub fn extend(phi: &Homomorphism<'_>, i: &Ideal) -> Result<Ideal, MorphismError> {
    if !i.belongs_to(phi.source) {
        return Err(MorphismError::SourceMismatch);
    }
    Ok(ideal::generate(phi.target, phi.image(i.members())).expect("image of a nonempty set"))
}

/// The kernel congruence `{(a, b) | φ(a) = φ(b)}`, stored as one related
/// set per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelCongruence {
    related: Vec<ElemSet>,
}

impl KernelCongruence {
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.related[a].contains(b)
    }

    pub fn class_of(&self, a: usize) -> ElemSet {
        self.related[a]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.related
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |b| (a, b)))
    }

    /// Elements related to something other than themselves.
    pub fn support(&self) -> ElemSet {
        self.related
            .iter()
            .enumerate()
            .filter(|(_, row)| row.len() > 1)
            .map(|(a, _)| a)
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.support().is_empty()
    }

    /// Reflexive, symmetric, transitive and compatible with multiplication.
    pub fn is_congruence(&self, m: &FiniteMonoid) -> bool {
        let n = self.related.len();
        (0..n).all(|a| self.related[a].contains(a))
            && self.pairs().all(|(a, b)| self.contains(b, a))
            && self
                .pairs()
                .all(|(a, b)| self.related[b].is_subset(self.related[a]))
            && self
                .pairs()
                .all(|(a, b)| (0..n).all(|x| self.contains(m.mul(a, x), m.mul(b, x))))
    }
}

pub fn kernel(phi: &Homomorphism<'_>) -> KernelCongruence {
    let n = phi.source.size();
    let related = (0..n)
        .map(|a| (0..n).filter(|&b| phi.apply(a) == phi.apply(b)).collect())
        .collect();
    KernelCongruence { related }
}

pub const KERNEL_CONDITION_INTERPRETATION: &str = "for every element x outside the support of \
ker(phi), every kernel pair lies in the Rees congruence of <x> (both entries equal or both in <x>)";

/// Kernel hypothesis under the Rees-congruence reading: for each `x` that is
/// related to nothing but itself, every nontrivial kernel pair has both
/// entries in `⟨x⟩`.
pub fn kernel_condition_rees(phi: &Homomorphism<'_>, ker: &KernelCongruence) -> bool {
    let support = ker.support();
    let free = phi.source.elements() - support;
    free.iter().all(|x| {
        let px = phi.source.principal(x);
        ker.pairs()
            .all(|(a, b)| a == b || (px.contains(a) && px.contains(b)))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseImageCase {
    pub ideal: Ideal,
    pub contraction: Ideal,
    pub contraction_irreducible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseImageReport {
    pub kernel_condition_rees: bool,
    pub interpretation: &'static str,
    /// One entry per irreducible ideal of the target.
    pub cases: Vec<InverseImageCase>,
    /// Cases where the hypothesis holds yet the contraction is reducible.
    pub violations: Vec<InverseImageCase>,
    /// Reducible contractions when the hypothesis fails; informational.
    pub counterexamples: Vec<InverseImageCase>,
}

impl InverseImageReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For each irreducible `J` of the target, tests whether `J^c` is irreducible
/// in the source, and splits failures by whether the kernel hypothesis holds.
pub fn check_inverse_image_irreducible(
    phi: &Homomorphism<'_>,
    lattice_src: &IdealLattice,
    lattice_tgt: &IdealLattice,
) -> Result<InverseImageReport, MorphismError> {
    if !lattice_src.belongs_to(phi.source) || !lattice_tgt.belongs_to(phi.target) {
        return Err(MorphismError::LatticeMismatch);
    }
    if !phi.is_surjective() {
        return Err(MorphismError::NotSurjective);
    }
    let hypothesis = kernel_condition_rees(phi, &kernel(phi));
    let mut cases = Vec::new();
    for j in lattice_tgt
        .iter()
        .filter(|j| classify::is_irreducible(j, lattice_tgt))
    {
        let contraction = contract(phi, j)?;
        cases.push(InverseImageCase {
            ideal: *j,
            contraction,
            contraction_irreducible: classify::is_irreducible(&contraction, lattice_src),
        });
    }
    let failures = cases.iter().filter(|c| !c.contraction_irreducible).cloned();
    let (violations, counterexamples) = if hypothesis {
        (failures.collect(), Vec::new())
    } else {
        (Vec::new(), failures.collect())
    };
    Ok(InverseImageReport {
        kernel_condition_rees: hypothesis,
        interpretation: KERNEL_CONDITION_INTERPRETATION,
        cases,
        violations,
        counterexamples,
    })
}

/// All homomorphisms `source → target`, by backtracking over images in
/// element order. Exponential; intended for small carriers.
pub fn enumerate_homomorphisms<'a>(
    source: &'a FiniteMonoid,
    target: &'a FiniteMonoid,
) -> Vec<Homomorphism<'a>> {
    const UNSET: usize = usize::MAX;
    let n = source.size();
    let mut map = vec![UNSET; n];
    map[source.identity()] = target.identity();
    let mut out = Vec::new();

    fn consistent(source: &FiniteMonoid, target: &FiniteMonoid, map: &[usize], a: usize) -> bool {
        // pairs involving the newly assigned element a
        (0..source.size()).all(|b| {
            if map[b] == UNSET {
                return true;
            }
            let ab = map[source.mul(a, b)];
            ab == UNSET || ab == target.mul(map[a], map[b])
        }) && (0..source.size()).all(|b| {
            // a appears as a product of assigned elements
            (0..source.size()).all(|c| {
                map[b] == UNSET
                    || map[c] == UNSET
                    || source.mul(b, c) != a
                    || map[a] == target.mul(map[b], map[c])
            })
        })
    }

    fn go<'a>(
        source: &'a FiniteMonoid,
        target: &'a FiniteMonoid,
        map: &mut Vec<usize>,
        next: usize,
        out: &mut Vec<Homomorphism<'a>>,
    ) {
        if next == source.size() {
            out.push(Homomorphism {
                source,
                target,
                map: map.clone(),
            });
            return;
        }
        if map[next] != UNSET {
            if consistent(source, target, map, next) {
                go(source, target, map, next + 1, out);
            }
            return;
        }
        for image in 0..target.size() {
            map[next] = image;
            if consistent(source, target, map, next) {
                go(source, target, map, next + 1, out);
            }
        }
        map[next] = UNSET;
    }

    go(source, target, &mut map, 0, &mut out);
    debug_assert!(out
        .iter()
        .all(|h| Homomorphism::new(source, target, h.map.clone()).is_ok()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_ideals, principal, DEFAULT_MAX_IDEALS};

    fn mod3() -> (FiniteMonoid, FiniteMonoid) {
        (
            FiniteMonoid::zn_mul(6).unwrap(),
            FiniteMonoid::zn_mul(3).unwrap(),
        )
    }

    #[test]
    fn validation() {
        let (z6, z3) = mod3();
        assert!(Homomorphism::new(&z6, &z3, (0..6).map(|a| a % 3).collect()).is_ok());
        assert_eq!(
            Homomorphism::new(&z6, &z3, vec![0; 5]).unwrap_err(),
            MorphismError::LengthMismatch {
                expected: 6,
                got: 5
            }
        );
        assert_eq!(
            Homomorphism::new(&z6, &z3, vec![0; 6]).unwrap_err(),
            MorphismError::IdentityNotPreserved
        );
        assert!(matches!(
            Homomorphism::new(&z6, &z3, vec![0, 1, 1, 1, 1, 1]).unwrap_err(),
            MorphismError::NotMultiplicative(..)
        ));
        // constant-to-identity satisfies both homomorphism conditions
        assert!(Homomorphism::new(&z6, &z3, vec![1; 6]).is_ok());
        let t = FiniteMonoid::zn_mul(1).unwrap();
        assert!(Homomorphism::new(&z6, &t, vec![0; 6]).is_ok());
    }

    #[test]
    fn constant_map_is_a_hom_but_not_pointed() {
        let (z6, z3) = mod3();
        let phi = Homomorphism::new(&z6, &z3, vec![1; 6]).unwrap();
        assert!(!phi.is_pointed());
        assert!(!phi.is_surjective());
        assert_eq!(
            contract(&phi, &Ideal::zero(&z3)),
            Err(MorphismError::EmptyContraction)
        );
    }

    #[test]
    fn contraction_and_extension() {
        let (z6, z3) = mod3();
        let phi = Homomorphism::new(&z6, &z3, (0..6).map(|a| a % 3).collect()).unwrap();
        assert!(phi.is_pointed());
        assert_eq!(
            contract(&phi, &Ideal::zero(&z3)).unwrap().to_vec(),
            vec![0, 3]
        );
        assert_eq!(
            contract(&phi, &Ideal::whole(&z3)).unwrap(),
            Ideal::whole(&z6)
        );
        assert_eq!(extend(&phi, &principal(&z6, 2)).unwrap(), Ideal::whole(&z3));
        assert_eq!(extend(&phi, &Ideal::zero(&z6)).unwrap(), Ideal::zero(&z3));
        assert_eq!(
            contract(&phi, &Ideal::zero(&z6)),
            Err(MorphismError::TargetMismatch)
        );
        assert_eq!(
            extend(&phi, &Ideal::zero(&z3)),
            Err(MorphismError::SourceMismatch)
        );

        let id = Homomorphism::identity(&z6);
        let i = principal(&z6, 3);
        assert_eq!(contract(&id, &i).unwrap(), i);
        assert_eq!(extend(&id, &i).unwrap(), i);
    }

    #[test]
    fn kernels() {
        let (z6, z3) = mod3();
        let phi = Homomorphism::new(&z6, &z3, (0..6).map(|a| a % 3).collect()).unwrap();
        let ker = kernel(&phi);
        assert!(ker.is_congruence(&z6));
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(ker.contains(a, b), a % 3 == b % 3);
            }
        }
        let id = kernel(&Homomorphism::identity(&z6));
        assert!(id.is_diagonal());
        assert_eq!(id.pairs().count(), 6);
    }

    #[test]
    fn inverse_image_mod3() {
        let (z6, z3) = mod3();
        let phi = Homomorphism::new(&z6, &z3, (0..6).map(|a| a % 3).collect()).unwrap();
        let l6 = enumerate_ideals(&z6, DEFAULT_MAX_IDEALS).unwrap();
        let l3 = enumerate_ideals(&z3, DEFAULT_MAX_IDEALS).unwrap();
        let report = check_inverse_image_irreducible(&phi, &l6, &l3).unwrap();
        let zero_case = report
            .cases
            .iter()
            .find(|c| c.ideal == Ideal::zero(&z3))
            .unwrap();
        assert_eq!(zero_case.contraction.to_vec(), vec![0, 3]);
        assert!(zero_case.contraction_irreducible);
        assert!(report.holds());

        let not_onto = Homomorphism::new(&z6, &z3, vec![1; 6]).unwrap();
        assert_eq!(
            check_inverse_image_irreducible(&not_onto, &l6, &l3).unwrap_err(),
            MorphismError::NotSurjective
        );
    }

    #[test]
    fn hom_enumeration_matches_brute_force() {
        let pairs = [
            (
                FiniteMonoid::zn_mul(4).unwrap(),
                FiniteMonoid::chain(2).unwrap(),
            ),
            (
                FiniteMonoid::zn_mul(6).unwrap(),
                FiniteMonoid::zn_mul(3).unwrap(),
            ),
            (
                FiniteMonoid::chain(3).unwrap(),
                FiniteMonoid::zn_mul(4).unwrap(),
            ),
        ];
        for (s, t) in &pairs {
            let fast: Vec<Vec<usize>> = enumerate_homomorphisms(s, t)
                .iter()
                .map(|h| h.map().to_vec())
                .collect();
            let mut slow = Vec::new();
            let total = t.size().pow(s.size() as u32);
            for code in 0..total {
                let map: Vec<usize> = (0..s.size())
                    .map(|k| code / t.size().pow(k as u32) % t.size())
                    .collect();
                if Homomorphism::new(s, t, map.clone()).is_ok() {
                    slow.push(map);
                }
            }
            slow.sort();
            let mut fast_sorted = fast.clone();
            fast_sorted.sort();
            assert_eq!(fast_sorted, slow);
        }
    }
}
