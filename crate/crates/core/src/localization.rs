//! Localization `M_S` at a multiplicatively closed set, and the ideal
//! correspondences between `M` and `M_S`.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::classify;
use crate::ideal::{self, enumerate_ideals, Ideal, IdealError, IdealLattice};
use crate::monoid::{FiniteMonoid, MonoidError, MonoidId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("multiplicative set must contain the identity")]
    MissingIdentity,
    #[error("multiplicative set is not closed: {0}*{1} is missing")]
    NotClosed(usize, usize),
    #[error("element {0} is not in the monoid")]
    OutOfRange(usize),
    #[error("multiplicative set belongs to a different monoid")]
    MonoidMismatch,
    #[error("the correspondence requires 0 not in S")]
    ZeroInS,
    #[error("ideal does not belong to the base monoid")]
    BaseMismatch,
    #[error("ideal does not belong to the localized monoid")]
    QuotientMismatch,
    #[error("class multiplication is not well defined at {0:?} * {1:?}")]
    IllDefined((usize, usize), (usize, usize)),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// A subset containing 1 and closed under the operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiplicativeSet {
    monoid: MonoidId,
    members: ElemSet,
}

impl MultiplicativeSet {
    pub fn new(m: &FiniteMonoid, members: ElemSet) -> Result<Self, LocalizationError> {
        if let Some(bad) = (members - m.elements()).first() {
            return Err(LocalizationError::OutOfRange(bad));
        }
        if !members.contains(m.identity()) {
            return Err(LocalizationError::MissingIdentity);
        }
        for a in members {
            for b in members {
                if !members.contains(m.mul(a, b)) {
                    return Err(LocalizationError::NotClosed(a, b));
                }
            }
        }
        Ok(MultiplicativeSet {
            monoid: m.id(),
            members,
        })
    }

    /// The submonoid generated by `gens`.
    pub fn generated_by(m: &FiniteMonoid, gens: ElemSet) -> Result<Self, LocalizationError> {
        if let Some(bad) = (gens - m.elements()).first() {
            return Err(LocalizationError::OutOfRange(bad));
        }
        let mut members = gens | ElemSet::singleton(m.identity());
        loop {
            let next = members | m.mul_sets(members, members);
            if next == members {
                break;
            }
            members = next;
        }
        Ok(MultiplicativeSet {
            monoid: m.id(),
            members,
        })
    }

    /// `M ∖ P` for a prime `P`; also the units when `P` is the maximal ideal.
    pub fn complement_of(m: &FiniteMonoid, p: &Ideal) -> Result<Self, LocalizationError> {
        Self::new(m, m.elements() - p.members())
    }

    pub fn units(m: &FiniteMonoid) -> Self {
        MultiplicativeSet {
            monoid: m.id(),
            members: m.units(),
        }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

/// Every multiplicatively closed set, optionally only those avoiding 0,
/// ordered by member bitstring. Exhaustive over subsets; small monoids only.
pub fn enumerate_multiplicative_sets(m: &FiniteMonoid, avoid_zero: bool) -> Vec<MultiplicativeSet> {
    let n = m.size();
    assert!(
        n <= crate::oracle::BRUTE_FORCE_LIMIT,
        "subset scan over {n} elements"
    );
    let free: Vec<usize> = (0..n)
        .filter(|&a| a != m.identity() && !(avoid_zero && a == m.zero()))
        .collect();
    let mut out: Vec<MultiplicativeSet> = (0u64..1 << free.len())
        .filter_map(|code| {
            let mut s = ElemSet::singleton(m.identity());
            for (k, &a) in free.iter().enumerate() {
                if code >> k & 1 == 1 {
                    s.insert(a);
                }
            }
            MultiplicativeSet::new(m, s).ok()
        })
        .collect();
    out.sort_by_key(|s| s.members.bits());
    out
}

/// The local monoid `M_S` together with the maps relating it to `M`.
#[derive(Debug, Clone)]
pub struct LocalizedMonoid<'a> {
    base: &'a FiniteMonoid,
    sset: MultiplicativeSet,
    quotient: FiniteMonoid,
    denominators: Vec<usize>,
    class_of: Vec<usize>,
    to_fraction: Vec<usize>,
    representatives: Vec<(usize, usize)>,
    degenerate: bool,
}

impl<'a> LocalizedMonoid<'a> {
    pub fn base(&self) -> &'a FiniteMonoid {
        self.base
    }

    pub fn sset(&self) -> &MultiplicativeSet {
        &self.sset
    }

    pub fn quotient(&self) -> &FiniteMonoid {
        &self.quotient
    }

    /// Class of the fraction `m/s`; `None` if `s ∉ S`.
    pub fn class_of(&self, m: usize, s: usize) -> Option<usize> {
        let k = self.denominators.iter().position(|&d| d == s)?;
        Some(self.class_of[m * self.denominators.len() + k])
    }

    /// Class of `m/1`.
    pub fn to_fraction(&self, m: usize) -> usize {
        self.to_fraction[m]
    }

    /// Lexicographically least `(m, s)` of each class, by class index.
    pub fn representatives(&self) -> &[(usize, usize)] {
        &self.representatives
    }

    /// Set when `0 ∈ S`, which collapses `M_S` to one element.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Builds `M_S`: fractions `m/s` with `m/s = m'/s'` iff `(ms')u = (m's)u` for
/// some `u ∈ S`, multiplied as `(m/s)(m'/s') = (mm')/(ss')`.
pub fn localize<'a>(
    m: &'a FiniteMonoid,
    s: &MultiplicativeSet,
) -> Result<LocalizedMonoid<'a>, LocalizationError> {
    if s.monoid != m.id() {
        return Err(LocalizationError::MonoidMismatch);
    }
    let dens = s.members.to_vec();
    let d = dens.len();
    let n = m.size();
    let related = |(a, sa): (usize, usize), (b, sb): (usize, usize)| {
        let left = m.mul(a, sb);
        let right = m.mul(b, sa);
        dens.iter().any(|&u| m.mul(left, u) == m.mul(right, u))
    };

    // each pair is compared with the least pair of every class found so far;
    // all matching classes merge into the oldest
    let slots = n * d;
    let pair = |slot: usize| (slot / d, dens[slot % d]);
    let mut parent: Vec<usize> = (0..slots).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut roots: Vec<usize> = Vec::new();
    for slot in 0..slots {
        let matches: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&r| related(pair(slot), pair(r)))
            .collect();
        match matches.split_first() {
            None => roots.push(slot),
            Some((&keep, rest)) => {
                parent[slot] = keep;
                for &r in rest {
                    parent[r] = keep;
                }
                roots.retain(|r| !rest.contains(r));
            }
        }
    }

    // roots are the least slot of each class, and slots are ordered as (m, s)
    let mut root_of: Vec<usize> = (0..slots).map(|x| find(&mut parent, x)).collect();
    let mut class_roots: Vec<usize> = root_of.clone();
    class_roots.sort_unstable();
    class_roots.dedup();
    let class_of: Vec<usize> = root_of
        .iter_mut()
        .map(|r| class_roots.binary_search(r).expect("root listed"))
        .collect();
    let representatives: Vec<(usize, usize)> = class_roots.iter().map(|&r| pair(r)).collect();
    let one = dens.iter().position(|&x| x == m.identity()).expect("1 ∈ S");
    let slot_of = |a: usize, sa: usize| a * d + dens.binary_search(&sa).expect("S is closed");

    let k = representatives.len();
    let mut rows = vec![vec![0usize; k]; k];
    for (x, &(a, sa)) in representatives.iter().enumerate() {
        for (y, &(b, sb)) in representatives.iter().enumerate() {
            rows[x][y] = class_of[slot_of(m.mul(a, b), m.mul(sa, sb))];
        }
    }
    // well-definedness on every pair of fractions, not just representatives
    for p in 0..slots {
        for q in p..slots {
            let (a, sa) = pair(p);
            let (b, sb) = pair(q);
            if class_of[slot_of(m.mul(a, b), m.mul(sa, sb))] != rows[class_of[p]][class_of[q]] {
                return Err(LocalizationError::IllDefined((a, sa), (b, sb)));
            }
        }
    }

    let labels = representatives
        .iter()
        .map(|&(a, sa)| {
            if sa == m.identity() {
                m.label(a).to_string()
            } else {
                format!("{}/{}", m.label(a), m.label(sa))
            }
        })
        .collect();
    let identity = class_of[m.identity() * d + one];
    let zero = class_of[m.zero() * d + one];
    let quotient = FiniteMonoid::new(labels, &rows, identity, zero)?;
    let to_fraction = (0..n).map(|a| class_of[a * d + one]).collect();
    Ok(LocalizedMonoid {
        base: m,
        sset: *s,
        quotient,
        denominators: dens.clone(),
        class_of,
        to_fraction,
        representatives,
        degenerate: s.members.contains(m.zero()),
    })
}

/// `I_S = ⟨ m/1 | m ∈ I ⟩`.
pub fn extend_to_local(loc: &LocalizedMonoid<'_>, i: &Ideal) -> Result<Ideal, LocalizationError> {
    if !i.belongs_to(loc.base) {
        return Err(LocalizationError::BaseMismatch);
    }
    let image: ElemSet = i.members().iter().map(|a| loc.to_fraction[a]).collect();
    Ok(ideal::generate(&loc.quotient, image)?)
}

/// `J^c = { m | m/1 ∈ J }`.
pub fn contract_from_local(
    loc: &LocalizedMonoid<'_>,
    j: &Ideal,
) -> Result<Ideal, LocalizationError> {
    if !j.belongs_to(&loc.quotient) {
        return Err(LocalizationError::QuotientMismatch);
    }
    let members: ElemSet = (0..loc.base.size())
        .filter(|&a| j.contains(loc.to_fraction[a]))
        .collect();
    // 0/1 is the zero of M_S, so 0 is always a member
    Ok(Ideal::new(loc.base, members)?)
}

/// Whether `(I_S)^c = I`, i.e. `I` is a contraction of an ideal of `M_S`.
pub fn is_contracted(loc: &LocalizedMonoid<'_>, i: &Ideal) -> Result<bool, LocalizationError> {
    Ok(contract_from_local(loc, &extend_to_local(loc, i)?)? == *i)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondencePair {
    pub base: Ideal,
    pub local: Ideal,
}

/// Proper ideals of `M_S` against ideals of `M` inside `M ∖ S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealCorrespondenceReport {
    pub local_proper: Vec<Ideal>,
    pub base_avoiding: Vec<Ideal>,
    /// Ideals inside `M ∖ S` that are contractions; these are matched one to one.
    pub base_contracted: Vec<Ideal>,
    pub matching: Vec<CorrespondencePair>,
    pub violations: Vec<String>,
}

impl IdealCorrespondenceReport {
    pub fn is_bijection(&self) -> bool {
        self.violations.is_empty()
    }
}

fn lattices(
    loc: &LocalizedMonoid<'_>,
    max_ideals: usize,
) -> Result<(IdealLattice, IdealLattice), LocalizationError> {
    if loc.sset.members.contains(loc.base.zero()) {
        return Err(LocalizationError::ZeroInS);
    }
    Ok((
        enumerate_ideals(loc.base, max_ideals)?,
        enumerate_ideals(&loc.quotient, max_ideals)?,
    ))
}

/// Checks that extension sends every ideal inside `M ∖ S` to a proper ideal,
/// that every proper ideal of `M_S` is the extension of its contraction, and
/// that extension and contraction are inverse bijections between the proper
/// ideals of `M_S` and the contracted ideals inside `M ∖ S`.
pub fn check_ideal_correspondence(
    loc: &LocalizedMonoid<'_>,
    max_ideals: usize,
) -> Result<IdealCorrespondenceReport, LocalizationError> {
    let (base_lat, local_lat) = lattices(loc, max_ideals)?;
    let q = &loc.quotient;
    let s = loc.sset.members;
    let mut violations = Vec::new();

    let local_proper: Vec<Ideal> = local_lat.proper().copied().collect();
    let base_avoiding: Vec<Ideal> = base_lat
        .iter()
        .filter(|i| i.members().is_disjoint(s))
        .copied()
        .collect();
    let mut base_contracted = Vec::new();
    for i in &base_avoiding {
        let ext = extend_to_local(loc, i)?;
        if !classify::is_proper(q, &ext) {
            violations.push(format!("extension of {i} is not proper"));
        }
        if contract_from_local(loc, &ext)? == *i {
            base_contracted.push(*i);
        }
    }

    let mut matching = Vec::new();
    for j in &local_proper {
        let c = contract_from_local(loc, j)?;
        if !c.members().is_disjoint(s) {
            violations.push(format!("contraction {c} of {j} meets S"));
        }
        if extend_to_local(loc, &c)? != *j {
            violations.push(format!("{j} is not the extension of its contraction {c}"));
        }
        if !base_contracted.contains(&c) {
            violations.push(format!(
                "contraction {c} of {j} is not a contracted ideal avoiding S"
            ));
        }
        matching.push(CorrespondencePair { base: c, local: *j });
    }
    for i in &base_contracted {
        let ext = extend_to_local(loc, i)?;
        if !matching.iter().any(|p| p.base == *i && p.local == ext) {
            violations.push(format!("contracted ideal {i} is not matched"));
        }
    }
    if matching.len() != base_contracted.len() {
        violations.push(format!(
            "{} proper ideals of M_S against {} contracted ideals",
            matching.len(),
            base_contracted.len()
        ));
    }
    matching.sort_by(|a, b| a.base.members().canonical_cmp(b.base.members()));
    Ok(IdealCorrespondenceReport {
        local_proper,
        base_avoiding,
        base_contracted,
        matching,
        violations,
    })
}

/// Proper strongly irreducible ideals of `M_S` against irreducible contracted
/// ideals of `M` avoiding `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleCorrespondenceReport {
    pub local_irreducible: Vec<Ideal>,
    pub base_irreducible: Vec<Ideal>,
    pub matching: Vec<CorrespondencePair>,
    pub violations: Vec<String>,
}

impl IrreducibleCorrespondenceReport {
    pub fn is_bijection(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_irreducible_correspondence(
    loc: &LocalizedMonoid<'_>,
    max_ideals: usize,
) -> Result<IrreducibleCorrespondenceReport, LocalizationError> {
    let (base_lat, local_lat) = lattices(loc, max_ideals)?;
    let q = &loc.quotient;
    let s = loc.sset.members;
    let mut violations = Vec::new();

    let local_irreducible: Vec<Ideal> = local_lat
        .proper()
        .filter(|j| classify::is_strongly_irreducible(j, &local_lat))
        .copied()
        .collect();
    let mut matching = Vec::new();
    for j in &local_irreducible {
        let c = contract_from_local(loc, j)?;
        if !classify::is_irreducible(&c, &base_lat) {
            violations.push(format!("contraction {c} of {j} is reducible"));
        }
        if !is_contracted(loc, &c)? {
            violations.push(format!("contraction {c} of {j} is not contraction-closed"));
        }
        if !c.members().is_disjoint(s) {
            violations.push(format!("contraction {c} of {j} meets S"));
        }
        if extend_to_local(loc, &c)? != *j {
            violations.push(format!("extension of {c} does not return {j}"));
        }
        matching.push(CorrespondencePair { base: c, local: *j });
    }

    let mut base_irreducible = Vec::new();
    for i in base_lat.iter() {
        if !i.members().is_disjoint(s)
            || !classify::is_irreducible(i, &base_lat)
            || !is_contracted(loc, i)?
        {
            continue;
        }
        base_irreducible.push(*i);
        let ext = extend_to_local(loc, i)?;
        if !classify::is_proper(q, &ext) || !classify::is_strongly_irreducible(&ext, &local_lat) {
            violations.push(format!(
                "extension {ext} of {i} is not proper strongly irreducible"
            ));
        }
        if contract_from_local(loc, &ext)? != *i {
            violations.push(format!("contraction of {ext} does not return {i}"));
        }
    }
    if base_irreducible.len() != local_irreducible.len() {
        violations.push(format!(
            "{} irreducible ideals of M against {} of M_S",
            base_irreducible.len(),
            local_irreducible.len()
        ));
    }
    matching.sort_by(|a, b| a.base.members().canonical_cmp(b.base.members()));
    Ok(IrreducibleCorrespondenceReport {
        local_irreducible,
        base_irreducible,
        matching,
        violations,
    })
}

/// For irreducible primary `I` with `I ∩ S = ∅`, checks that `I_S` is proper,
/// strongly irreducible and primary. Returns the failures.
pub fn check_primary_extension(
    loc: &LocalizedMonoid<'_>,
    max_ideals: usize,
) -> Result<Vec<String>, LocalizationError> {
    let (base_lat, local_lat) = lattices(loc, max_ideals)?;
    let q = &loc.quotient;
    let mut failures = Vec::new();
    for i in base_lat.iter() {
        if !i.members().is_disjoint(loc.sset.members)
            || !classify::is_irreducible(i, &base_lat)
            || !classify::is_primary(loc.base, i)
        {
            continue;
        }
        let ext = extend_to_local(loc, i)?;
        if !classify::is_strongly_irreducible(&ext, &local_lat)
            || !classify::is_proper(q, &ext)
            || !classify::is_primary(q, &ext)
        {
            failures.push(format!("extension {ext} of {i}"));
        }
    }
    Ok(failures)
}

fn every_primary_irreducible(
    m: &FiniteMonoid,
    max_ideals: usize,
) -> Result<bool, LocalizationError> {
    let lat = enumerate_ideals(m, max_ideals)?;
    Ok(lat
        .iter()
        .all(|i| !classify::is_primary(m, i) || classify::is_irreducible(i, &lat)))
}

/// The three statements "every primary ideal of `M_𝔪` is irreducible",
/// "every primary ideal of `M` is irreducible" and "every primary ideal of
/// `M_P` is irreducible for each prime `P`".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimaryLocalReport {
    pub at_maximal: bool,
    pub global: bool,
    pub at_every_prime: bool,
    pub primes_checked: usize,
}

impl PrimaryLocalReport {
    pub fn equivalent(&self) -> bool {
        self.at_maximal == self.global && self.global == self.at_every_prime
    }
}

pub fn check_primary_local_equivalence(
    m: &FiniteMonoid,
    max_ideals: usize,
) -> Result<PrimaryLocalReport, LocalizationError> {
    let global = every_primary_irreducible(m, max_ideals)?;
    let at_maximal = match classify::maximal_ideal(m) {
        Ok(mx) => {
            let s = MultiplicativeSet::complement_of(m, &mx)?;
            every_primary_irreducible(localize(m, &s)?.quotient(), max_ideals)?
        }
        // no maximal ideal, nothing to localize at
        Err(_) => true,
    };
    let lat = enumerate_ideals(m, max_ideals)?;
    let mut at_every_prime = true;
    let mut primes_checked = 0;
    for p in lat.iter().filter(|p| classify::is_prime(m, p)) {
        primes_checked += 1;
        let s = MultiplicativeSet::complement_of(m, p)?;
        if !every_primary_irreducible(localize(m, &s)?.quotient(), max_ideals)? {
            at_every_prime = false;
        }
    }
    Ok(PrimaryLocalReport {
        at_maximal,
        global,
        at_every_prime,
        primes_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{principal, DEFAULT_MAX_IDEALS};
    use crate::oracle::find_isomorphism;

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    fn z6_at_124() -> (FiniteMonoid, MultiplicativeSet) {
        let m = FiniteMonoid::zn_mul(6).unwrap();
        let s = MultiplicativeSet::new(&m, set(&[1, 2, 4])).unwrap();
        (m, s)
    }

    #[test]
    fn multiplicative_set_validation() {
        let m = FiniteMonoid::zn_mul(6).unwrap();
        assert_eq!(
            MultiplicativeSet::new(&m, set(&[2, 4])),
            Err(LocalizationError::MissingIdentity)
        );
        assert_eq!(
            MultiplicativeSet::new(&m, set(&[1, 2])),
            Err(LocalizationError::NotClosed(2, 2))
        );
        let g = MultiplicativeSet::generated_by(&m, set(&[2])).unwrap();
        assert_eq!(g.members().to_vec(), vec![1, 2, 4]);
    }

    #[test]
    fn trivial_denominators_give_the_same_monoid() {
        let m = FiniteMonoid::chain(3).unwrap();
        let s = MultiplicativeSet::new(&m, set(&[0])).unwrap();
        let loc = localize(&m, &s).unwrap();
        assert_eq!(loc.quotient().rows(), m.rows());
        assert!(!loc.is_degenerate());
    }

    #[test]
    fn unit_denominators_give_an_isomorphic_monoid() {
        for n in 2..=12 {
            let m = FiniteMonoid::zn_mul(n).unwrap();
            let loc = localize(&m, &MultiplicativeSet::units(&m)).unwrap();
            assert!(
                find_isomorphism(loc.quotient(), &m).is_some(),
                "zn_mul({n})"
            );
        }
    }

    #[test]
    fn z6_at_powers_of_two() {
        let (m, s) = z6_at_124();
        let loc = localize(&m, &s).unwrap();
        // 3·2 = 0 kills 3, and 2 becomes a unit: M_S ≅ Z3
        assert_eq!(loc.quotient().size(), 3);
        assert!(find_isomorphism(loc.quotient(), &FiniteMonoid::zn_mul(3).unwrap()).is_some());
        assert_eq!(loc.to_fraction(3), loc.to_fraction(0));
        assert_eq!(loc.class_of(4, 2), Some(loc.to_fraction(2)));
        assert_eq!(loc.class_of(2, 2), Some(loc.to_fraction(1)));
        assert_eq!(loc.class_of(1, 3), None);
        assert_eq!(loc.representatives()[0], (0, 1));

        let q = loc.quotient();
        let three = principal(&m, 3);
        let ext = extend_to_local(&loc, &three).unwrap();
        assert_eq!(ext, classify::maximal_ideal(q).unwrap());
        assert_eq!(ext.members(), ElemSet::singleton(loc.to_fraction(3)));
        assert_eq!(
            contract_from_local(&loc, &ext).unwrap().to_vec(),
            vec![0, 3]
        );
        assert_eq!(
            contract_from_local(&loc, &Ideal::zero(q)).unwrap().to_vec(),
            vec![0, 3]
        );
        assert_eq!(
            extend_to_local(&loc, &principal(&m, 2)).unwrap(),
            Ideal::whole(q)
        );
        assert_eq!(
            extend_to_local(&loc, &Ideal::whole(&m)).unwrap(),
            Ideal::whole(q)
        );
        assert_eq!(
            contract_from_local(&loc, &Ideal::whole(q)).unwrap(),
            Ideal::whole(&m)
        );
        assert_eq!(
            extend_to_local(&loc, &Ideal::zero(q)),
            Err(LocalizationError::BaseMismatch)
        );
    }

    #[test]
    fn z6_correspondences() {
        let (m, s) = z6_at_124();
        let loc = localize(&m, &s).unwrap();
        let report = check_ideal_correspondence(&loc, DEFAULT_MAX_IDEALS).unwrap();
        assert!(report.is_bijection(), "{:?}", report.violations);
        let avoiding: Vec<Vec<usize>> = report.base_avoiding.iter().map(|i| i.to_vec()).collect();
        assert_eq!(avoiding, vec![vec![0], vec![0, 3]]);
        let contracted: Vec<Vec<usize>> =
            report.base_contracted.iter().map(|i| i.to_vec()).collect();
        assert_eq!(contracted, vec![vec![0, 3]]);
        assert_eq!(report.local_proper.len(), 1);

        let irr = check_irreducible_correspondence(&loc, DEFAULT_MAX_IDEALS).unwrap();
        assert!(irr.is_bijection(), "{:?}", irr.violations);
        assert_eq!(irr.base_irreducible.len(), 1);
        assert_eq!(irr.base_irreducible[0].to_vec(), vec![0, 3]);
        assert_eq!(irr.local_irreducible.len(), 1);
    }

    #[test]
    fn identity_set_correspondence_is_identity() {
        let m = FiniteMonoid::chain(3).unwrap();
        let s = MultiplicativeSet::new(&m, set(&[0])).unwrap();
        let loc = localize(&m, &s).unwrap();
        let report = check_ideal_correspondence(&loc, DEFAULT_MAX_IDEALS).unwrap();
        assert!(report.is_bijection());
        assert_eq!(report.matching.len(), 3);
        assert!(report
            .matching
            .iter()
            .all(|p| p.base.members() == p.local.members()));
        let irr = check_irreducible_correspondence(&loc, DEFAULT_MAX_IDEALS).unwrap();
        assert!(irr.is_bijection());
        assert_eq!(irr.matching.len(), 3);
    }

    #[test]
    fn zero_in_s_is_degenerate() {
        let m = FiniteMonoid::zn_mul(6).unwrap();
        let s = MultiplicativeSet::generated_by(&m, set(&[0])).unwrap();
        let loc = localize(&m, &s).unwrap();
        assert!(loc.is_degenerate());
        assert_eq!(loc.quotient().size(), 1);
        assert_eq!(
            check_ideal_correspondence(&loc, DEFAULT_MAX_IDEALS).unwrap_err(),
            LocalizationError::ZeroInS
        );
        assert_eq!(
            check_irreducible_correspondence(&loc, DEFAULT_MAX_IDEALS).unwrap_err(),
            LocalizationError::ZeroInS
        );
    }

    #[test]
    fn relation_is_already_transitive() {
        // the class construction compares against one member per class
        for m in [
            FiniteMonoid::zn_mul(8).unwrap(),
            FiniteMonoid::zn_mul(12).unwrap(),
            FiniteMonoid::chain(2)
                .unwrap()
                .direct_product(&FiniteMonoid::zn_mul(4).unwrap(), 64)
                .unwrap(),
        ] {
            for s in enumerate_multiplicative_sets(&m, false) {
                let loc = localize(&m, &s).unwrap();
                let dens = s.members().to_vec();
                for a in 0..m.size() {
                    for &sa in &dens {
                        for b in 0..m.size() {
                            for &sb in &dens {
                                let rel = dens
                                    .iter()
                                    .any(|&u| m.mul(m.mul(a, sb), u) == m.mul(m.mul(b, sa), u));
                                assert_eq!(rel, loc.class_of(a, sa) == loc.class_of(b, sb));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn primary_local_equivalence_examples() {
        for k in 1..=5 {
            let c = FiniteMonoid::chain(k).unwrap();
            let r = check_primary_local_equivalence(&c, DEFAULT_MAX_IDEALS).unwrap();
            assert!(r.at_maximal && r.global && r.at_every_prime, "chain({k})");
        }
        let z6 = FiniteMonoid::zn_mul(6).unwrap();
        let r = check_primary_local_equivalence(&z6, DEFAULT_MAX_IDEALS).unwrap();
        assert!(r.global && r.equivalent());
        assert_eq!(r.primes_checked, 3);
        let t = FiniteMonoid::zn_mul(1).unwrap();
        let r = check_primary_local_equivalence(&t, DEFAULT_MAX_IDEALS).unwrap();
        assert!(r.equivalent());
    }
}
