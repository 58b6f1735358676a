//! The theorem suite: every structural property of the ideal theory,
//! evaluated exhaustively on each monoid of a corpus.
//!
//! Each property yields one result line per monoid. Properties marked as
//! asserted fail the run when violated; the others only collect evidence.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::ElemSet;
use crate::classify;
use crate::corpus::{Family, NamedMonoid};
use crate::decomposition;
use crate::ideal::{self, enumerate_ideals, Ideal, IdealError, IdealLattice};
use crate::localization::{self, enumerate_multiplicative_sets, localize, MultiplicativeSet};
use crate::monoid::FiniteMonoid;
use crate::morphism::{self, enumerate_homomorphisms, Homomorphism, HOM_SWEEP_LIMIT};
use crate::oracle;
use crate::Limits;

pub const SCHEMA_VERSION: u32 = 1;
/// Largest carrier checked against the subset-scan oracle.
pub const ORACLE_LIMIT: usize = 12;
/// Largest carrier for which every multiplicative set is swept.
pub const EXHAUSTIVE_SET_LIMIT: usize = 12;
/// Number of random generator draws for larger carriers.
pub const SAMPLED_SET_DRAWS: usize = 32;
const MAX_SAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("corpus is empty")]
    EmptyCorpus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

type Check = fn(&Ctx<'_>, &mut Tally);

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    /// Violations fail the run.
    pub asserted: bool,
    check: Check,
}

pub static THEOREMS: &[Theorem] = &[
    Theorem { id: "ideal-enumeration-oracle", statement: "union-closure enumeration equals the subset scan (n <= 12)", asserted: true, check: enumeration_oracle },
    Theorem { id: "lattice-distributive", statement: "ideals form a distributive lattice closed under union and intersection", asserted: true, check: lattice_distributive },
    Theorem { id: "product-within-intersection", statement: "IJ is contained in the intersection of I and J", asserted: true, check: product_within_intersection },
    Theorem { id: "principal-product", statement: "<i><j> = <ij>", asserted: true, check: principal_product },
    Theorem { id: "maximal-is-nonunits", statement: "the unique maximal ideal is the set of non-units", asserted: true, check: maximal_is_nonunits },
    Theorem { id: "prime-ideal-criterion", statement: "P prime iff IJ in P forces I in P or J in P", asserted: true, check: prime_ideal_criterion },
    Theorem { id: "semiprime-square-criterion", statement: "I semiprime iff J^2 in I forces J in I", asserted: true, check: semiprime_square_criterion },
    Theorem { id: "radical-closure", statement: "I is inside its radical and the radical is idempotent", asserted: true, check: radical_closure },
    Theorem { id: "colon-basics", statement: "I is inside (I:S) and (I:S) shrinks as S grows", asserted: true, check: colon_basics },
    Theorem { id: "irreducible-equivalence", statement: "irreducible = strongly irreducible = elementwise criterion", asserted: true, check: irreducible_equivalence },
    Theorem { id: "comparable-iff-all-irreducible", statement: "ideals form a chain iff every proper ideal is irreducible", asserted: true, check: comparable_iff_all_irreducible },
    Theorem { id: "prime-strongly-irreducible", statement: "every prime ideal is strongly irreducible", asserted: true, check: prime_strongly_irreducible },
    Theorem { id: "prime-iff-semiprime-and-irreducible", statement: "a proper ideal is prime iff semiprime and irreducible", asserted: true, check: prime_iff_semiprime_and_irreducible },
    Theorem { id: "maximal-strongly-irreducible", statement: "the maximal ideal is strongly irreducible", asserted: true, check: maximal_strongly_irreducible },
    Theorem { id: "minimal-irreducible-over", statement: "every proper ideal lies under a minimal irreducible ideal", asserted: true, check: minimal_irreducible_over },
    Theorem { id: "colon-irreducible", statement: "(I:J) is irreducible for irreducible I and any ideal J", asserted: true, check: colon_irreducible },
    Theorem { id: "colon-corollary", statement: "iterated, product, sum and intersection colon forms agree and stay irreducible", asserted: true, check: colon_corollary },
    Theorem { id: "contraction-properties", statement: "kernels are congruences; contraction respects meets, primes and properness", asserted: true, check: contraction_properties },
    Theorem { id: "inverse-image-irreducible", statement: "under the kernel condition, contractions of irreducible ideals are irreducible", asserted: true, check: inverse_image_irreducible },
    Theorem { id: "localization-structure", statement: "M_S is no larger than M, and extension/contraction compose as expected", asserted: true, check: localization_structure },
    Theorem { id: "localization-ideal-correspondence", statement: "proper ideals of M_S match the contracted ideals inside M minus S", asserted: true, check: localization_ideal_correspondence },
    Theorem { id: "localization-irreducible-correspondence", statement: "proper strongly irreducible ideals of M_S match contracted irreducible ideals avoiding S", asserted: true, check: localization_irreducible_correspondence },
    Theorem { id: "localization-primary-extension", statement: "irreducible primary ideals avoiding S extend to strongly irreducible primary ideals", asserted: true, check: localization_primary_extension },
    Theorem { id: "primary-local-equivalence", statement: "primary-implies-irreducible holds at M_m, at M, and at every M_P together", asserted: true, check: primary_local_equivalence },
    Theorem { id: "irreducible-representation", statement: "every ideal is the intersection of the irreducible ideals above it", asserted: true, check: irreducible_representation },
    Theorem { id: "maximal-avoiding-irreducible", statement: "an ideal maximal among those avoiding x is irreducible", asserted: true, check: maximal_avoiding_irreducible },
    Theorem { id: "irreducible-decomposition-sound", statement: "irreducible decompositions are exact, minimal, and have irreducible primary components", asserted: true, check: irreducible_decomposition_sound },
    Theorem { id: "irreducible-is-primary", statement: "every proper irreducible ideal is primary", asserted: true, check: irreducible_is_primary },
    Theorem { id: "primary-decomposition-unique", statement: "when every primary ideal is irreducible, minimal primary decompositions are unique", asserted: true, check: primary_decomposition_unique },
    Theorem { id: "prime-residue-ideals-irreducible", statement: "in zn, ideals generated by sets of prime residues are irreducible", asserted: false, check: prime_residue_ideals },
];

pub fn theorem(id: &str) -> Option<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremResult {
    pub theorem: &'static str,
    pub monoid: String,
    pub status: Status,
    pub checked: usize,
    pub violations: usize,
    pub samples: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub seed: u64,
    pub results: Vec<TheoremResult>,
    pub passed: usize,
    pub failed: usize,
    pub info: usize,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = write!(
                out,
                "{} {:<40} {:<14} checked={}",
                r.status.tag(),
                r.theorem,
                r.monoid,
                r.checked
            );
            if r.violations > 0 {
                let _ = write!(out, " violations={}", r.violations);
            }
            out.push('\n');
            for s in &r.samples {
                let _ = writeln!(out, "     ! {s}");
            }
            for n in &r.notes {
                let _ = writeln!(out, "     - {n}");
            }
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} info",
            self.passed, self.failed, self.info
        );
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub limits: Limits,
    pub theorem: Option<String>,
    pub seed: u64,
}

/// A user-supplied homomorphism between two monoids.
#[derive(Debug, Clone)]
pub struct UserHom {
    pub name: String,
    pub source: NamedMonoid,
    pub target: NamedMonoid,
    pub map: Vec<usize>,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    violations: usize,
    samples: Vec<String>,
    notes: Vec<String>,
    skipped: bool,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, message: String) {
        self.violations += 1;
        if self.samples.len() < MAX_SAMPLES {
            self.samples.push(message);
        }
    }

    fn note(&mut self, message: String) {
        self.notes.push(message);
    }

    fn skip(&mut self, reason: &str) {
        self.skipped = true;
        self.notes.push(format!("skipped: {reason}"));
    }

    /// Records a library error as a violation.
    fn attempt<T, E: std::fmt::Display>(&mut self, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("error: {e}"));
                None
            }
        }
    }

    fn finish(self, theorem: &Theorem, monoid: String) -> TheoremResult {
        let status = if self.violations > 0 {
            if theorem.asserted {
                Status::Fail
            } else {
                Status::Info
            }
        } else if self.skipped {
            Status::Info
        } else {
            Status::Pass
        };
        TheoremResult {
            theorem: theorem.id,
            monoid,
            status,
            checked: self.checked,
            violations: self.violations,
            samples: self.samples,
            notes: self.notes,
        }
    }
}

struct Prepared<'a> {
    named: &'a NamedMonoid,
    lattice: Result<IdealLattice, IdealError>,
}

struct Ctx<'a> {
    named: &'a NamedMonoid,
    m: &'a FiniteMonoid,
    lattice: &'a IdealLattice,
    irreducible: Vec<bool>,
    corpus: &'a [Prepared<'a>],
    config: &'a SuiteConfig,
}

impl Ctx<'_> {
    fn ideals(&self) -> &[Ideal] {
        self.lattice.ideals()
    }

    fn irreducibles(&self) -> impl Iterator<Item = &Ideal> + '_ {
        self.ideals()
            .iter()
            .zip(&self.irreducible)
            .filter(|(_, &irr)| irr)
            .map(|(i, _)| i)
    }

    fn is_irreducible(&self, i: &Ideal) -> bool {
        self.lattice
            .position(i.members())
            .map(|k| self.irreducible[k])
            .unwrap_or(false)
    }

    fn multiplicative_sets(&self) -> Vec<MultiplicativeSet> {
        let m = self.m;
        if m.size() <= EXHAUSTIVE_SET_LIMIT {
            return enumerate_multiplicative_sets(m, true);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        let mut sets = vec![MultiplicativeSet::units(m)];
        for p in self.ideals().iter().filter(|p| classify::is_prime(m, p)) {
            if let Ok(s) = MultiplicativeSet::complement_of(m, p) {
                sets.push(s);
            }
        }
        for _ in 0..SAMPLED_SET_DRAWS {
            let gens: ElemSet = (0..m.size())
                .filter(|&a| a != m.zero() && rng.gen_ratio(1, 8))
                .collect();
            if let Ok(s) = MultiplicativeSet::generated_by(m, gens) {
                if !s.contains(m.zero()) {
                    sets.push(s);
                }
            }
        }
        sets.sort_by_key(|s| s.members().bits());
        sets.dedup();
        sets
    }
}

/// Runs the selected properties over the corpus in a fixed order: theorem
/// by theorem, monoid by monoid, then user homomorphisms.
pub fn run_theorem_suite(
    corpus: &[NamedMonoid],
    homs: &[UserHom],
    config: &SuiteConfig,
) -> Result<SuiteReport, SuiteError> {
    if corpus.is_empty() {
        return Err(SuiteError::EmptyCorpus);
    }
    let selected: Vec<&Theorem> = match &config.theorem {
        Some(id) => vec![theorem(id).ok_or_else(|| SuiteError::UnknownTheorem(id.clone()))?],
        None => THEOREMS.iter().collect(),
    };
    let prepared: Vec<Prepared<'_>> = corpus
        .iter()
        .map(|named| Prepared {
            named,
            lattice: enumerate_ideals(&named.monoid, config.limits.max_ideals),
        })
        .collect();
    let contexts: Vec<Result<Ctx<'_>, &IdealError>> = prepared
        .iter()
        .map(|p| {
            p.lattice.as_ref().map(|lattice| Ctx {
                named: p.named,
                m: &p.named.monoid,
                lattice,
                irreducible: lattice
                    .iter()
                    .map(|i| classify::is_irreducible(i, lattice))
                    .collect(),
                corpus: &prepared,
                config,
            })
        })
        .collect();

    let mut results = Vec::new();
    for t in selected {
        for (p, ctx) in prepared.iter().zip(&contexts) {
            let mut tally = Tally::default();
            match ctx {
                Ok(ctx) => (t.check)(ctx, &mut tally),
                Err(e) => tally.fail(format!("ideal enumeration failed: {e}")),
            }
            results.push(tally.finish(t, p.named.name.clone()));
        }
        if t.id == "inverse-image-irreducible" || t.id == "contraction-properties" {
            for h in homs {
                let mut tally = Tally::default();
                check_user_hom(t.id, h, config, &mut tally);
                results.push(tally.finish(t, h.name.clone()));
            }
        }
    }
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    Ok(SuiteReport {
        schema: SCHEMA_VERSION,
        seed: config.seed,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        info: count(Status::Info),
        results,
    })
}

fn enumeration_oracle(ctx: &Ctx<'_>, t: &mut Tally) {
    if ctx.m.size() > ORACLE_LIMIT {
        return t.skip("carrier larger than the oracle limit");
    }
    let fast: Vec<ElemSet> = ctx.ideals().iter().map(|i| i.members()).collect();
    let slow = oracle::brute_force_ideals(ctx.m);
    t.check(fast == slow, || {
        format!(
            "enumeration found {} ideals, subset scan {}",
            fast.len(),
            slow.len()
        )
    });
}

fn lattice_distributive(ctx: &Ctx<'_>, t: &mut Tally) {
    let lat = ctx.lattice;
    t.check(lat.contains(ElemSet::singleton(ctx.m.zero())), || {
        "{0} missing".into()
    });
    t.check(lat.contains(ctx.m.elements()), || "M missing".into());
    let r = ideal::is_distributive(lat);
    t.check(r.is_ok(), || format!("violating triple {:?}", r.err()));
}

fn product_within_intersection(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.ideals() {
        for j in ctx.ideals() {
            let Some(p) = t.attempt(ideal::product(ctx.m, i, j)) else {
                continue;
            };
            t.check(p.members().is_subset(i.members() & j.members()), || {
                format!("{i}{j} = {p}")
            });
        }
    }
}

fn principal_product(ctx: &Ctx<'_>, t: &mut Tally) {
    let m = ctx.m;
    for a in 0..m.size() {
        for b in a..m.size() {
            let lhs = ideal::product(m, &ideal::principal(m, a), &ideal::principal(m, b));
            let rhs = ideal::principal(m, m.mul(a, b));
            t.check(lhs.as_ref() == Ok(&rhs), || {
                format!("<{a}><{b}> != <{a}{b}>")
            });
        }
    }
}

fn maximal_is_nonunits(ctx: &Ctx<'_>, t: &mut Tally) {
    let m = ctx.m;
    let units = m.units();
    t.check(units.contains(m.identity()), || {
        "identity is not a unit".into()
    });
    t.check(m.mul_sets(units, units).is_subset(units), || {
        "units not closed".into()
    });
    let nonunits = m.elements() - units;
    if m.is_trivial() {
        t.check(classify::maximal_ideal(m).is_err(), || {
            "trivial monoid has a maximal ideal".into()
        });
        return;
    }
    t.check(ctx.lattice.contains(nonunits), || {
        "non-units are not an ideal".into()
    });
    for i in ctx.ideals() {
        let by_lattice = classify::is_maximal_in_lattice(m, i, ctx.lattice);
        t.check(by_lattice == (i.members() == nonunits), || {
            format!("{i}: lattice-maximal {by_lattice}, non-units {nonunits}")
        });
        t.check(classify::is_maximal(m, i) == by_lattice, || {
            format!("{i}: is_maximal disagrees")
        });
    }
}

fn prime_ideal_criterion(ctx: &Ctx<'_>, t: &mut Tally) {
    for p in ctx.ideals() {
        let a = classify::is_prime(ctx.m, p);
        let b = classify::is_prime_by_ideals(ctx.m, p, ctx.lattice);
        t.check(a == b, || format!("{p}: elementwise {a}, ideal-pair {b}"));
    }
}

fn semiprime_square_criterion(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.ideals() {
        let a = classify::is_semiprime(ctx.m, i);
        let b = classify::is_semiprime_by_squares(ctx.m, i, ctx.lattice);
        t.check(a == b, || format!("{i}: radical {a}, square criterion {b}"));
    }
}

fn radical_closure(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.ideals() {
        let Some(r) = t.attempt(ideal::radical(ctx.m, i)) else {
            continue;
        };
        t.check(i.is_subset(&r), || {
            format!("{i} not inside its radical {r}")
        });
        let rr = ideal::radical(ctx.m, &r);
        t.check(rr == Ok(r), || format!("radical of {i} is not idempotent"));
    }
}

fn colon_basics(ctx: &Ctx<'_>, t: &mut Tally) {
    let m = ctx.m;
    let divisors: Vec<ElemSet> = (0..m.size())
        .map(ElemSet::singleton)
        .chain(ctx.ideals().iter().map(|i| i.members()))
        .collect();
    for i in ctx.ideals() {
        let colons: Vec<Option<Ideal>> = divisors
            .iter()
            .map(|&s| t.attempt(ideal::colon(m, i, s)))
            .collect();
        for (s, c) in divisors.iter().zip(&colons) {
            if let Some(c) = c {
                t.check(i.is_subset(c), || format!("{i} not inside ({i}:{s})"));
            }
        }
        for (s, cs) in divisors.iter().zip(&colons) {
            for (u, cu) in divisors.iter().zip(&colons) {
                if let (Some(cs), Some(cu)) = (cs, cu) {
                    if s.is_subset(*u) {
                        t.check(cu.is_subset(cs), || {
                            format!("({i}:{u}) not inside ({i}:{s})")
                        });
                    }
                }
            }
        }
    }
}

fn irreducible_equivalence(ctx: &Ctx<'_>, t: &mut Tally) {
    for (i, &irr) in ctx.ideals().iter().zip(&ctx.irreducible) {
        let strong = classify::is_strongly_irreducible(i, ctx.lattice);
        let elem = classify::elementwise_irreducible(ctx.m, i);
        t.check(irr == strong && strong == elem, || {
            format!("{i}: irreducible {irr}, strongly {strong}, elementwise {elem}")
        });
    }
}

fn comparable_iff_all_irreducible(ctx: &Ctx<'_>, t: &mut Tally) {
    let chain = classify::all_ideals_comparable(ctx.lattice);
    // pairwise comparability, independent of the lattice order
    let pairwise = ctx.ideals().iter().all(|a| {
        ctx.ideals()
            .iter()
            .all(|b| a.is_subset(b) || b.is_subset(a))
    });
    let all_irr = classify::every_proper_ideal_irreducible(ctx.m, ctx.lattice);
    t.check(chain == pairwise, || {
        format!("chain check {chain}, pairwise {pairwise}")
    });
    t.check(chain == all_irr, || {
        format!("comparable {chain}, all proper irreducible {all_irr}")
    });
}

fn prime_strongly_irreducible(ctx: &Ctx<'_>, t: &mut Tally) {
    for p in ctx.ideals().iter().filter(|p| classify::is_prime(ctx.m, p)) {
        t.check(classify::is_strongly_irreducible(p, ctx.lattice), || {
            format!("prime {p} is not strongly irreducible")
        });
    }
}

fn prime_iff_semiprime_and_irreducible(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.lattice.proper() {
        let prime = classify::is_prime(ctx.m, i);
        let semi = classify::is_semiprime(ctx.m, i);
        let irr = ctx.is_irreducible(i);
        t.check(prime == (semi && irr), || {
            format!("{i}: prime {prime}, semiprime {semi}, irreducible {irr}")
        });
    }
}

fn maximal_strongly_irreducible(ctx: &Ctx<'_>, t: &mut Tally) {
    match classify::maximal_ideal(ctx.m) {
        Ok(mx) => t.check(classify::is_strongly_irreducible(&mx, ctx.lattice), || {
            format!("maximal ideal {mx} is not strongly irreducible")
        }),
        Err(_) => t.skip("trivial monoid has no maximal ideal"),
    }
}

fn minimal_irreducible_over(ctx: &Ctx<'_>, t: &mut Tally) {
    for j in ctx.lattice.proper() {
        let Some(i) = t.attempt(classify::minimal_irreducible_over(ctx.m, j, ctx.lattice)) else {
            continue;
        };
        t.check(j.is_subset(&i) && ctx.is_irreducible(&i), || {
            format!("{i} over {j}")
        });
        let smaller = ctx
            .irreducibles()
            .any(|k| j.is_subset(k) && k.is_subset(&i) && *k != i);
        t.check(!smaller, || format!("{i} over {j} is not minimal"));
    }
}

fn colon_irreducible(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.irreducibles() {
        for j in ctx.ideals() {
            let Some(c) = t.attempt(ideal::colon_ideal(ctx.m, i, j)) else {
                continue;
            };
            t.check(ctx.is_irreducible(&c), || {
                format!("({i}:{j}) = {c} is reducible")
            });
        }
    }
}

fn colon_corollary(ctx: &Ctx<'_>, t: &mut Tally) {
    let m = ctx.m;
    let colon = |i: &Ideal, j: &Ideal| ideal::colon_ideal(m, i, j).expect("same monoid");
    let irreducibles: Vec<Ideal> = ctx.irreducibles().copied().collect();
    for i in &irreducibles {
        for j in ctx.ideals() {
            let ij = colon(i, j);
            for k in ctx.ideals() {
                let a = colon(&ij, k);
                let b = colon(i, &ideal::product(m, j, k).expect("same monoid"));
                let c = colon(&colon(i, k), j);
                t.check(a == b && b == c, || {
                    format!("(({i}:{j}):{k}) = {a}, ({i}:{j}{k}) = {b}, (({i}:{k}):{j}) = {c}")
                });
                t.check(ctx.is_irreducible(&a), || {
                    format!("(({i}:{j}):{k}) = {a} is reducible")
                });
                let sum = ideal::union(j, k).expect("same monoid");
                let by_sum = colon(i, &sum);
                let meet = ideal::intersect(&ij, &colon(i, k)).expect("same monoid");
                t.check(by_sum == meet, || {
                    format!("({i}:{j}+{k}) = {by_sum} but meet of colons is {meet}")
                });
                t.check(ctx.is_irreducible(&by_sum), || {
                    format!("({i}:{j}+{k}) = {by_sum} is reducible")
                });
            }
        }
    }
    // intersections of several irreducible ideals: the identity holds, but
    // irreducibility of the result is only recorded
    let mut reducible_meets = 0usize;
    let mut meets = 0usize;
    for (x, i1) in irreducibles.iter().enumerate() {
        for i2 in &irreducibles[x + 1..] {
            let both = ideal::intersect(i1, i2).expect("same monoid");
            for j in ctx.ideals() {
                let lhs = colon(&both, j);
                let rhs = ideal::intersect(&colon(i1, j), &colon(i2, j)).expect("same monoid");
                t.check(lhs == rhs, || {
                    format!("({i1} meet {i2} : {j}) = {lhs} but meet of colons is {rhs}")
                });
                meets += 1;
                if !ctx.is_irreducible(&lhs) {
                    reducible_meets += 1;
                }
            }
        }
    }
    if reducible_meets > 0 {
        t.note(format!(
            "{reducible_meets} of {meets} colons of a meet of two irreducible ideals are reducible"
        ));
    }
}

fn hom_targets<'a>(
    ctx: &'a Ctx<'a>,
) -> impl Iterator<Item = (&'a NamedMonoid, &'a IdealLattice)> + 'a {
    let n = ctx.m.size();
    ctx.corpus.iter().filter_map(move |p| {
        let size = p.named.monoid.size();
        match &p.lattice {
            Ok(lat) if size <= HOM_SWEEP_LIMIT && size <= n => Some((p.named, lat)),
            _ => None,
        }
    })
}

fn contraction_checks(phi: &Homomorphism<'_>, lat_tgt: &IdealLattice, t: &mut Tally) {
    let (src, tgt) = (phi.source(), phi.target());
    let ker = morphism::kernel(phi);
    t.check(ker.is_congruence(src), || {
        format!("kernel of {:?} is not a congruence", phi.map())
    });
    let preimage = |j: &Ideal| -> ElemSet {
        (0..src.size())
            .filter(|&a| j.contains(phi.apply(a)))
            .collect()
    };
    let surjective = phi.is_surjective();
    for j in lat_tgt.iter() {
        for k in lat_tgt.iter() {
            let meet = ideal::intersect(j, k).expect("same monoid");
            t.check(preimage(&meet) == preimage(j) & preimage(k), || {
                format!("{:?}: contraction does not respect {j} meet {k}", phi.map())
            });
        }
        let Ok(c) = morphism::contract(phi, j) else {
            continue;
        };
        if classify::is_prime(tgt, j) {
            t.check(classify::is_prime(src, &c), || {
                format!("{:?}: contraction {c} of prime {j} is not prime", phi.map())
            });
        }
        if surjective && classify::is_proper(tgt, j) {
            t.check(classify::is_proper(src, &c), || {
                format!("{:?}: contraction of proper {j} is M", phi.map())
            });
        }
        let e = morphism::extend(phi, &c).expect("ideal of the source");
        t.check(e.is_subset(j), || {
            format!("{:?}: extension of {c} leaves {j}", phi.map())
        });
        if surjective {
            t.check(e == *j, || {
                format!("{:?}: extension of contraction of {j} is {e}", phi.map())
            });
        }
    }
}

fn contraction_properties(ctx: &Ctx<'_>, t: &mut Tally) {
    if ctx.m.size() > HOM_SWEEP_LIMIT {
        return t.skip("homomorphism sweep limited to small carriers");
    }
    let mut homs = 0usize;
    for (target, lat_tgt) in hom_targets(ctx) {
        for phi in enumerate_homomorphisms(ctx.m, &target.monoid) {
            homs += 1;
            contraction_checks(&phi, lat_tgt, t);
        }
    }
    t.note(format!("{homs} homomorphisms into corpus monoids"));
}

fn inverse_image_checks(
    phi: &Homomorphism<'_>,
    lat_src: &IdealLattice,
    lat_tgt: &IdealLattice,
    t: &mut Tally,
    counterexamples: &mut usize,
    with_hypothesis: &mut usize,
) {
    let Some(report) = t.attempt(morphism::check_inverse_image_irreducible(
        phi, lat_src, lat_tgt,
    )) else {
        return;
    };
    if report.kernel_condition_rees {
        *with_hypothesis += 1;
    }
    for case in &report.cases {
        if report.kernel_condition_rees {
            t.check(case.contraction_irreducible, || {
                format!(
                    "{:?}: {} irreducible, contraction {} reducible",
                    phi.map(),
                    case.ideal,
                    case.contraction
                )
            });
        }
    }
    *counterexamples += report.counterexamples.len();
}

fn inverse_image_irreducible(ctx: &Ctx<'_>, t: &mut Tally) {
    if ctx.m.size() > HOM_SWEEP_LIMIT {
        return t.skip("homomorphism sweep limited to small carriers");
    }
    let (mut surjective, mut with_hypothesis, mut counterexamples) = (0usize, 0usize, 0usize);
    for (target, lat_tgt) in hom_targets(ctx) {
        for phi in enumerate_homomorphisms(ctx.m, &target.monoid) {
            if !phi.is_surjective() {
                continue;
            }
            surjective += 1;
            inverse_image_checks(
                &phi,
                ctx.lattice,
                lat_tgt,
                t,
                &mut counterexamples,
                &mut with_hypothesis,
            );
        }
    }
    t.note(format!(
        "{surjective} surjective homomorphisms, {with_hypothesis} satisfy the kernel condition"
    ));
    if counterexamples > 0 {
        t.note(format!(
            "{counterexamples} reducible contractions of irreducible ideals where the kernel condition fails"
        ));
    }
}

fn check_user_hom(theorem: &str, h: &UserHom, config: &SuiteConfig, t: &mut Tally) {
    let Some(phi) = t.attempt(Homomorphism::new(
        &h.source.monoid,
        &h.target.monoid,
        h.map.clone(),
    )) else {
        return;
    };
    let Some(lat_src) = t.attempt(enumerate_ideals(&h.source.monoid, config.limits.max_ideals))
    else {
        return;
    };
    let Some(lat_tgt) = t.attempt(enumerate_ideals(&h.target.monoid, config.limits.max_ideals))
    else {
        return;
    };
    if theorem == "contraction-properties" {
        contraction_checks(&phi, &lat_tgt, t);
        return;
    }
    if !phi.is_surjective() {
        return t.skip("homomorphism is not surjective");
    }
    let (mut counterexamples, mut with_hypothesis) = (0, 0);
    inverse_image_checks(
        &phi,
        &lat_src,
        &lat_tgt,
        t,
        &mut counterexamples,
        &mut with_hypothesis,
    );
    t.note(format!(
        "kernel condition {}",
        if with_hypothesis > 0 {
            "holds"
        } else {
            "fails"
        }
    ));
    if counterexamples > 0 {
        t.note(format!(
            "{counterexamples} reducible contractions without the kernel condition"
        ));
    }
}

fn localization_structure(ctx: &Ctx<'_>, t: &mut Tally) {
    let m = ctx.m;
    let units = m.units();
    let sets = ctx.multiplicative_sets();
    for s in &sets {
        let Some(loc) = t.attempt(localize(m, s)) else {
            continue;
        };
        let q = loc.quotient();
        t.check(q.size() <= m.size(), || {
            format!("|M_S| = {} for S = {}", q.size(), s.members())
        });
        if s.members().is_subset(units) {
            t.check(q.size() == m.size(), || {
                format!("S = {} of units shrinks M", s.members())
            });
        }
        for i in ctx
            .ideals()
            .iter()
            .filter(|i| i.members().is_disjoint(s.members()))
        {
            let back = localization::extend_to_local(&loc, i)
                .and_then(|e| localization::contract_from_local(&loc, &e));
            t.check(back.map(|b| i.is_subset(&b)).unwrap_or(false), || {
                format!(
                    "S = {}: contraction of extension of {i} misses part of it",
                    s.members()
                )
            });
        }
        let Some(qlat) = t.attempt(enumerate_ideals(q, ctx.config.limits.max_ideals)) else {
            continue;
        };
        for j in qlat.proper() {
            let round = localization::contract_from_local(&loc, j)
                .and_then(|c| localization::extend_to_local(&loc, &c));
            t.check(round.as_ref() == Ok(j), || {
                format!(
                    "S = {}: {j} is not the extension of its contraction",
                    s.members()
                )
            });
        }
    }
    t.note(format!("{} multiplicative sets", sets.len()));
}

fn localization_ideal_correspondence(ctx: &Ctx<'_>, t: &mut Tally) {
    let sets = ctx.multiplicative_sets();
    let mut uncontracted = 0usize;
    for s in &sets {
        let Some(loc) = t.attempt(localize(ctx.m, s)) else {
            continue;
        };
        let Some(r) = t.attempt(localization::check_ideal_correspondence(
            &loc,
            ctx.config.limits.max_ideals,
        )) else {
            continue;
        };
        t.check(r.is_bijection(), || {
            format!("S = {}: {}", s.members(), r.violations.join("; "))
        });
        if r.base_avoiding.len() != r.base_contracted.len() {
            uncontracted += 1;
        }
    }
    t.note(format!("{} multiplicative sets avoiding 0", sets.len()));
    if uncontracted > 0 {
        t.note(format!(
            "{uncontracted} sets where some ideal inside M minus S is not a contraction"
        ));
    }
}

fn localization_irreducible_correspondence(ctx: &Ctx<'_>, t: &mut Tally) {
    let sets = ctx.multiplicative_sets();
    for s in &sets {
        let Some(loc) = t.attempt(localize(ctx.m, s)) else {
            continue;
        };
        let Some(r) = t.attempt(localization::check_irreducible_correspondence(
            &loc,
            ctx.config.limits.max_ideals,
        )) else {
            continue;
        };
        t.check(r.is_bijection(), || {
            format!("S = {}: {}", s.members(), r.violations.join("; "))
        });
    }
    t.note(format!("{} multiplicative sets avoiding 0", sets.len()));
}

fn localization_primary_extension(ctx: &Ctx<'_>, t: &mut Tally) {
    for s in &ctx.multiplicative_sets() {
        let Some(loc) = t.attempt(localize(ctx.m, s)) else {
            continue;
        };
        let Some(failures) = t.attempt(localization::check_primary_extension(
            &loc,
            ctx.config.limits.max_ideals,
        )) else {
            continue;
        };
        t.check(failures.is_empty(), || {
            format!("S = {}: {}", s.members(), failures.join("; "))
        });
    }
}

fn primary_local_equivalence(ctx: &Ctx<'_>, t: &mut Tally) {
    let Some(r) = t.attempt(localization::check_primary_local_equivalence(
        ctx.m,
        ctx.config.limits.max_ideals,
    )) else {
        return;
    };
    t.check(r.equivalent(), || {
        format!(
            "at M_m {}, at M {}, at every M_P {}",
            r.at_maximal, r.global, r.at_every_prime
        )
    });
    t.note(format!(
        "all three statements {} ({} primes)",
        if r.global { "true" } else { "false" },
        r.primes_checked
    ));
}

fn irreducible_representation(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.ideals() {
        let Some(r) = t.attempt(decomposition::irreducible_hull(ctx.m, i, ctx.lattice)) else {
            continue;
        };
        t.check(r.is_exact(ctx.m), || {
            format!("hull of {i} meets in {}", r.intersection(ctx.m))
        });
    }
}

fn maximal_avoiding_irreducible(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.ideals() {
        for x in ctx.m.elements() - i.members() {
            let Some(j) = t.attempt(decomposition::maximal_avoiding(ctx.m, i, x, ctx.lattice))
            else {
                continue;
            };
            t.check(
                i.is_subset(&j) && !j.contains(x) && ctx.is_irreducible(&j),
                || format!("maximal ideal over {i} avoiding {x} is {j}"),
            );
        }
    }
}

fn irreducible_decomposition_sound(ctx: &Ctx<'_>, t: &mut Tally) {
    let m = ctx.m;
    for i in ctx.ideals() {
        let Some(r) = t.attempt(decomposition::irreducible_decomposition(m, i, ctx.lattice)) else {
            continue;
        };
        t.check(r.is_exact(m), || {
            format!("decomposition of {i} meets in {}", r.intersection(m))
        });
        t.check(r.components.len() == 1 || r.is_irredundant(m), || {
            format!("decomposition of {i} is redundant")
        });
        if classify::is_proper(m, i) {
            for c in &r.components {
                t.check(ctx.is_irreducible(c) && classify::is_primary(m, c), || {
                    format!("component {c} of {i} is not irreducible and primary")
                });
            }
        } else {
            t.check(r.components == vec![*i], || {
                "M does not decompose as itself".into()
            });
        }
    }
}

fn irreducible_is_primary(ctx: &Ctx<'_>, t: &mut Tally) {
    for i in ctx.irreducibles().filter(|i| classify::is_proper(ctx.m, i)) {
        t.check(classify::is_primary(ctx.m, i), || {
            format!("irreducible {i} is not primary")
        });
    }
}

fn primary_decomposition_unique(ctx: &Ctx<'_>, t: &mut Tally) {
    let m = ctx.m;
    let Some(r) = t.attempt(decomposition::check_uniqueness(
        m,
        ctx.lattice,
        ctx.config.limits.antichain_budget,
    )) else {
        return;
    };
    for case in &r.cases {
        let Some(ours) = t.attempt(decomposition::primary_decomposition(
            m,
            &case.ideal,
            ctx.lattice,
        )) else {
            continue;
        };
        t.check(case.decompositions.contains(&ours.components), || {
            format!(
                "computed decomposition of {} missing from the search",
                case.ideal
            )
        });
        if r.hypothesis {
            t.check(case.decompositions.len() == 1, || {
                format!(
                    "{} has {} minimal primary decompositions",
                    case.ideal,
                    case.decompositions.len()
                )
            });
        }
    }
    if r.hypothesis {
        t.note("every primary ideal is irreducible".into());
    } else {
        t.note(format!(
            "hypothesis fails; {} ideals have several minimal primary decompositions",
            r.non_unique.len()
        ));
    }
}

fn is_prime_number(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn prime_residue_ideals(ctx: &Ctx<'_>, t: &mut Tally) {
    let n = match ctx.named.family {
        Some(Family::Zn(n)) => n,
        _ => return t.skip("only defined for zn"),
    };
    let primes: Vec<usize> = (2..n).filter(|&p| is_prime_number(p)).collect();
    for code in 1u64..1 << primes.len() {
        let gens: ElemSet = primes
            .iter()
            .enumerate()
            .filter(|(k, _)| code >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let Some(i) = t.attempt(ideal::generate(ctx.m, gens)) else {
            continue;
        };
        t.check(ctx.is_irreducible(&i), || {
            format!("<{gens}> = {i} is reducible")
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::default_corpus;

    #[test]
    fn theorem_ids_are_unique() {
        let mut ids: Vec<&str> = THEOREMS.iter().map(|t| t.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), THEOREMS.len());
    }

    #[test]
    fn filter_selects_one_theorem() {
        let corpus: Vec<NamedMonoid> = default_corpus().into_iter().take(3).collect();
        let config = SuiteConfig {
            theorem: Some("prime-iff-semiprime-and-irreducible".into()),
            ..SuiteConfig::default()
        };
        let r = run_theorem_suite(&corpus, &[], &config).unwrap();
        assert_eq!(r.results.len(), 3);
        assert!(r
            .results
            .iter()
            .all(|x| x.theorem == "prime-iff-semiprime-and-irreducible"));
        let bad = SuiteConfig {
            theorem: Some("nope".into()),
            ..SuiteConfig::default()
        };
        assert_eq!(
            run_theorem_suite(&corpus, &[], &bad).unwrap_err(),
            SuiteError::UnknownTheorem("nope".into())
        );
        assert_eq!(
            run_theorem_suite(&[], &[], &config).unwrap_err(),
            SuiteError::EmptyCorpus
        );
    }
}
