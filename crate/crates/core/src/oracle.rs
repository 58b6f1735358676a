//! Reference procedures that share no code path with the production
//! algorithms. They are exponential and only meant for small monoids.

use crate::bitset::ElemSet;
use crate::monoid::FiniteMonoid;

/// Largest carrier the subset scan accepts.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Every subset of the carrier that is nonempty and absorbing, in canonical
/// order. Panics above [`BRUTE_FORCE_LIMIT`] elements.
pub fn brute_force_ideals(m: &FiniteMonoid) -> Vec<ElemSet> {
    let n = m.size();
    assert!(n <= BRUTE_FORCE_LIMIT, "subset scan over {n} elements");
    let mut out: Vec<ElemSet> = (1u64..1 << n)
        .map(ElemSet::from_bits)
        .filter(|&s| s.iter().all(|a| (0..n).all(|b| s.contains(m.mul(a, b)))))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(*b));
    out
}

/// Searches for a bijection `f` with `f(ab) = f(a)f(b)` and `f(1) = 1`.
pub fn find_isomorphism(a: &FiniteMonoid, b: &FiniteMonoid) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    if a.zero() != a.identity() {
        map[a.zero()] = b.zero();
        used[b.zero()] = true;
    }
    fn consistent(a: &FiniteMonoid, b: &FiniteMonoid, map: &[usize]) -> bool {
        let n = a.size();
        for x in 0..n {
            if map[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                if map[y] == usize::MAX {
                    continue;
                }
                let xy = map[a.mul(x, y)];
                if xy != usize::MAX && xy != b.mul(map[x], map[y]) {
                    return false;
                }
            }
        }
        true
    }
    fn extend(
        a: &FiniteMonoid,
        b: &FiniteMonoid,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        let n = a.size();
        if next == n {
            return consistent(a, b, map);
        }
        if map[next] != usize::MAX {
            return extend(a, b, map, used, next + 1);
        }
        for target in 0..n {
            if used[target] {
                continue;
            }
            map[next] = target;
            used[target] = true;
            if consistent(a, b, map) && extend(a, b, map, used, next + 1) {
                return true;
            }
            map[next] = usize::MAX;
            used[target] = false;
        }
        false
    }
    if !consistent(a, b, &map) {
        return None;
    }
    extend(a, b, &mut map, &mut used, 0).then_some(map)
}
