//! Definition-level reference computations over plain `u64` masks. Nothing
//! here calls into the library beyond reading the multiplication table.

#![allow(dead_code)]

use monoid_ideals::corpus::{default_corpus, NamedMonoid};
use monoid_ideals::FiniteMonoid;

pub struct Naive<'a> {
    pub m: &'a FiniteMonoid,
    pub n: usize,
    pub ideals: Vec<u64>,
}

pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&k| mask >> k & 1 == 1)
}

impl<'a> Naive<'a> {
    pub fn new(m: &'a FiniteMonoid) -> Self {
        let n = m.size();
        assert!(n <= 16);
        let full = (1u64 << n) - 1;
        let mut ideals = Vec::new();
        for s in 1..=full {
            if bits(s).all(|a| (0..n).all(|b| s >> m.mul(a, b) & 1 == 1)) {
                ideals.push(s);
            }
        }
        Naive { m, n, ideals }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn has(&self, s: u64, a: usize) -> bool {
        s >> a & 1 == 1
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.m.mul(a, b)
    }

    pub fn product(&self, i: u64, j: u64) -> u64 {
        let mut out = 0;
        for a in bits(i) {
            for b in bits(j) {
                out |= 1 << self.mul(a, b);
            }
        }
        // the ideal generated by the pairwise products
        let mut closed = 0;
        for p in bits(out) {
            for x in 0..self.n {
                closed |= 1 << self.mul(p, x);
            }
        }
        closed
    }

    pub fn principal(&self, a: usize) -> u64 {
        (0..self.n).fold(0, |acc, x| acc | 1 << self.mul(a, x))
    }

    pub fn colon(&self, i: u64, s: u64) -> u64 {
        (0..self.n)
            .filter(|&x| bits(s).all(|y| self.has(i, self.mul(x, y))))
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn units(&self) -> u64 {
        let e = self.m.identity();
        (0..self.n)
            .filter(|&a| (0..self.n).any(|b| self.mul(a, b) == e))
            .fold(0, |acc, a| acc | 1 << a)
    }

    /// Not the meet of two strictly larger ideals.
    pub fn irreducible(&self, i: u64) -> bool {
        let above: Vec<u64> = self
            .ideals
            .iter()
            .copied()
            .filter(|&j| j != i && j & i == i)
            .collect();
        !above.iter().any(|&a| above.iter().any(|&b| a & b == i))
    }

    pub fn proper(&self, i: u64) -> bool {
        i != self.full()
    }

    pub fn prime(&self, p: u64) -> bool {
        self.proper(p)
            && (0..self.n).all(|a| {
                (0..self.n)
                    .all(|b| !self.has(p, self.mul(a, b)) || self.has(p, a) || self.has(p, b))
            })
    }

    pub fn semiprime(&self, i: u64) -> bool {
        (0..self.n).all(|a| !self.has(i, self.mul(a, a)) || self.has(i, a))
    }

    fn some_power_in(&self, i: u64, b: usize) -> bool {
        let mut x = b;
        for _ in 0..=self.n {
            if self.has(i, x) {
                return true;
            }
            x = self.mul(x, b);
        }
        false
    }

    pub fn primary(&self, i: u64) -> bool {
        self.proper(i)
            && (0..self.n).all(|a| {
                (0..self.n).all(|b| {
                    !self.has(i, self.mul(a, b)) || self.has(i, a) || self.some_power_in(i, b)
                })
            })
    }

    /// Multiplicatively closed subsets containing the identity and not zero.
    pub fn multiplicative_sets(&self) -> Vec<u64> {
        let (e, z) = (self.m.identity(), self.m.zero());
        (1..=self.full())
            .filter(|&s| self.has(s, e) && !self.has(s, z))
            .filter(|&s| bits(s).all(|a| bits(s).all(|b| self.has(s, self.mul(a, b)))))
            .collect()
    }
}

pub fn corpus() -> Vec<NamedMonoid> {
    default_corpus()
}
