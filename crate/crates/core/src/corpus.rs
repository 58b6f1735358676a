//! Named monoids and the fixed default corpus.

use std::fmt;

use crate::monoid::{FiniteMonoid, MonoidError};
use crate::MAX_ELEMENTS;

/// How a corpus member was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Zn(usize),
    Chain(usize),
    Product(Box<Family>, Box<Family>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Zn(n) => write!(f, "zn{n}"),
            Family::Chain(k) => write!(f, "chain{k}"),
            Family::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl Family {
    pub fn build(&self) -> Result<FiniteMonoid, MonoidError> {
        match self {
            Family::Zn(n) => FiniteMonoid::zn_mul(*n),
            Family::Chain(k) => FiniteMonoid::chain(*k),
            Family::Product(a, b) => a.build()?.direct_product(&b.build()?, MAX_ELEMENTS),
        }
    }
}

#[derive(Debug, Clone)]
pub struct NamedMonoid {
    pub name: String,
    /// `None` for monoids read from files.
    pub family: Option<Family>,
    pub monoid: FiniteMonoid,
}

impl NamedMonoid {
    pub fn generated(family: Family) -> Result<Self, MonoidError> {
        Ok(NamedMonoid {
            name: family.to_string(),
            monoid: family.build()?,
            family: Some(family),
        })
    }

    pub fn from_file(path: &str, monoid: FiniteMonoid) -> Self {
        NamedMonoid {
            name: path.to_string(),
            family: None,
            monoid,
        }
    }
}

/// `zn_mul(n)` for `n = 2..=12`, `chain(k)` for `k = 1..=6`,
/// `zn_mul(2) × zn_mul(3)` and `zn_mul(4) × chain(2)`.
pub fn default_corpus() -> Vec<NamedMonoid> {
    let mut families: Vec<Family> = (2..=12).map(Family::Zn).collect();
    families.extend((1..=6).map(Family::Chain));
    families.push(Family::Product(
        Box::new(Family::Zn(2)),
        Box::new(Family::Zn(3)),
    ));
    families.push(Family::Product(
        Box::new(Family::Zn(4)),
        Box::new(Family::Chain(2)),
    ));
    families
        .into_iter()
        .map(|f| NamedMonoid::generated(f).expect("default corpus members are valid"))
        .collect()
}
