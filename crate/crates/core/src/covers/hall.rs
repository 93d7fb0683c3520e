//! Hall bases of free nilpotent Lie algebras and their structure constants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Field, Scalar};

/// Default cap on the number of basis words of a free nilpotent algebra.
pub const DEFAULT_RESOURCE_LIMIT: usize = 5000;
pub const RESOURCE_LIMIT_VAR: &str = "LIECAP_RESOURCE_LIMIT";

/// The basis-word cap, read from `LIECAP_RESOURCE_LIMIT` when set.
pub fn resource_limit() -> usize {
    std::env::var(RESOURCE_LIMIT_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_RESOURCE_LIMIT)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HallTree {
    Generator(usize),
    /// `[u, v]`, by position of `u` and `v` in the Hall sequence.
    Bracket(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HallWord {
    pub tree: HallTree,
    pub degree: usize,
    /// Position in the canonical order.
    pub rank: usize,
}

/// Witt's count of degree-`k` basic commutators on `d` generators.
pub fn witt_dimension(d: usize, k: usize) -> u128 {
    let mut total: i128 = 0;
    for m in 1..=k {
        if k.is_multiple_of(m) {
            let mu = mobius(m);
            if mu != 0 {
                let p = (d as i128).checked_pow((k / m) as u32).unwrap_or(i128::MAX / 4);
                total += mu as i128 * p;
            }
        }
    }
    (total / k as i128) as u128
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn free_nilpotent_dim(d: usize, c: usize) -> u128 {
    (1..=c).map(|k| witt_dimension(d, k)).fold(0u128, |a, b| a.saturating_add(b))
}

/// Hall words of degree `≤ c` on `d` generators, checked against
/// [`resource_limit`].
pub fn hall_basis(d: usize, c: usize) -> Result<Vec<HallWord>> {
    hall_basis_with_limit(d, c, resource_limit())
}

/// Words are ordered by degree, then lexicographically by `(u, v)`;
/// `w = [u, v]` is admitted when `u > v` and, for `u = [a, b]`, `b ≤ v`.
pub fn hall_basis_with_limit(d: usize, c: usize, limit: usize) -> Result<Vec<HallWord>> {
    let needed = free_nilpotent_dim(d, c);
    if needed > limit as u128 {
        return Err(Error::ResourceLimit { needed: needed.min(usize::MAX as u128) as usize, limit });
    }
    let mut words: Vec<HallWord> =
        (0..d).map(|g| HallWord { tree: HallTree::Generator(g), degree: 1, rank: g }).collect();
    let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(); c + 1];
    if c >= 1 {
        by_degree[1] = (0..d).collect();
    }
    for k in 2..=c {
        let mut fresh = Vec::new();
        for a in 1..k {
            for &u in &by_degree[a] {
                for &v in &by_degree[k - a] {
                    if u <= v {
                        continue;
                    }
                    if let HallTree::Bracket(_, b) = words[u].tree {
                        if b > v {
                            continue;
                        }
                    }
                    fresh.push((u, v));
                }
            }
        }
        fresh.sort_unstable();
        for (u, v) in fresh {
            let rank = words.len();
            by_degree[k].push(rank);
            words.push(HallWord { tree: HallTree::Bracket(u, v), degree: k, rank });
        }
    }
    Ok(words)
}

/// Integer combination of Hall words.
type Combination = Vec<(usize, i64)>;

struct Rewriter<'a> {
    words: &'a [HallWord],
    lookup: HashMap<(usize, usize), usize>,
    memo: HashMap<(usize, usize), Combination>,
    class: usize,
}

impl<'a> Rewriter<'a> {
    fn new(words: &'a [HallWord], class: usize) -> Self {
        let lookup = words
            .iter()
            .filter_map(|w| match w.tree {
                HallTree::Bracket(u, v) => Some(((u, v), w.rank)),
                HallTree::Generator(_) => None,
            })
            .collect();
        Rewriter { words, lookup, memo: HashMap::new(), class }
    }

    fn bracket(&mut self, a: usize, b: usize) -> Combination {
        if a == b || self.words[a].degree + self.words[b].degree > self.class {
            return Vec::new();
        }
        if a < b {
            return self.bracket(b, a).into_iter().map(|(w, c)| (w, -c)).collect();
        }
        if let Some(hit) = self.memo.get(&(a, b)) {
            return hit.clone();
        }
        let result = match self.words[a].tree {
            HallTree::Bracket(a1, a2) if a2 > b => {
                // [[a1, a2], b] = [[a1, b], a2] + [a1, [a2, b]]
                let left = self.bracket(a1, b);
                let right = self.bracket(a2, b);
                let mut acc = Vec::new();
                for (w, c) in left {
                    add_scaled(&mut acc, &self.bracket(w, a2), c);
                }
                for (w, c) in right {
                    add_scaled(&mut acc, &self.bracket(a1, w), c);
                }
                acc
            }
            _ => vec![(self.lookup[&(a, b)], 1)],
        };
        self.memo.insert((a, b), result.clone());
        result
    }
}

fn add_scaled(acc: &mut Combination, terms: &Combination, scale: i64) {
    for &(w, c) in terms {
        let delta = c.checked_mul(scale).expect("structure constant overflow");
        match acc.iter_mut().find(|(x, _)| *x == w) {
            Some(slot) => slot.1 += delta,
            None => acc.push((w, delta)),
        }
    }
    acc.retain(|&(_, c)| c != 0);
}

/// The free nilpotent Lie algebra `F(d, c)` on its Hall basis.
#[derive(Debug, Clone)]
pub struct FreeNilpotent {
    pub generators: usize,
    pub class: usize,
    pub words: Vec<HallWord>,
    pub algebra: LieAlgebra,
}

impl FreeNilpotent {
    /// Bracket notation of a basis word, e.g. `[[x2,x1],x1]`.
    pub fn word_string(&self, w: usize) -> String {
        word_string(&self.words, w)
    }

    /// Positions of the words of degree at least 2, i.e. a basis of `F²`.
    pub fn derived_words(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().filter(|w| w.degree >= 2).map(|w| w.rank)
    }
}

pub fn word_string(words: &[HallWord], w: usize) -> String {
    match words[w].tree {
        HallTree::Generator(g) => format!("x{}", g + 1),
        HallTree::Bracket(u, v) => format!("[{},{}]", word_string(words, u), word_string(words, v)),
    }
}

pub fn free_nilpotent(d: usize, c: usize, field: Field) -> Result<FreeNilpotent> {
    free_nilpotent_with_limit(d, c, field, resource_limit())
}

pub fn free_nilpotent_with_limit(d: usize, c: usize, field: Field, limit: usize) -> Result<FreeNilpotent> {
    let words = hall_basis_with_limit(d, c, limit)?;
    let n = words.len();
    let mut rw = Rewriter::new(&words, c);
    let mut brackets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let comb = rw.bracket(a, b);
            if comb.is_empty() {
                continue;
            }
            let mut v: Vec<Scalar> = field.zero_vec(n);
            for (w, coeff) in comb {
                v[w] = field.from_int(coeff);
            }
            brackets.push(((a, b), v));
        }
    }
    let labels = (0..n).map(|w| word_string(&words, w)).collect();
    let algebra = LieAlgebra::new(field, labels, brackets)?;
    Ok(FreeNilpotent { generators: d, class: c, words, algebra })
}
