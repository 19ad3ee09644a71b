//! Matchings of the complete bipartite graph `K_{n, n+α}` and their
//! correspondence with α-Laguerre configurations.
//!
//! Top vertices are `1..=n`, bottom vertices `1'..=(n+α)'`; an edge is stored
//! as `(a, b)` for the edge `{a, b'}`. Reading each edge as `a ↦ b` turns a matching
//! into a partial injection whose paths and cycles carry the configuration.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combstat::{enumerate_configs, ColoredPermutation, LaguerreConfig, ListFamily, Word};
use crate::error::{Error, Result};
use crate::laguerre::Alpha;
use crate::mpoly::{MPoly, Monomial, Var};
use crate::qnum::{binomial, factorial};

/// A set of disjoint edges of `K_{top, bottom}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    top: u32,
    bottom: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl Matching {
    pub fn new(top: u32, bottom: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        let tops = edges.iter().map(|e| e.0).unique().count();
        let bottoms = edges.iter().map(|e| e.1).unique().count();
        if tops != edges.len() || bottoms != edges.len() {
            return Err(Error::InvalidStructure("edges share a vertex".into()));
        }
        if let Some(&(a, b)) = edges
            .iter()
            .find(|(a, b)| *a == 0 || *a > top || *b == 0 || *b > bottom)
        {
            return Err(Error::InvalidStructure(format!(
                "edge ({a}, {b}') lies outside K_{{{top},{bottom}}}"
            )));
        }
        Ok(Matching { top, bottom, edges })
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Edges `(a, b)` for consecutive letters `a b` of `w` with `a <= n`.
fn consecutive_edges(w: &[u32], n: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
    w.iter()
        .copied()
        .tuple_windows()
        .filter(move |&(a, _)| a <= n)
}

/// The matching attached to a configuration.
///
/// For `α >= 0` the edges are `{a, σ_0(a)'}`, consecutive letters of
/// `σ̂_1 (n+1) σ̂_2 (n+2) ⋯ σ̂_α (n+α)`, and consecutive letters of each list.
///
/// For `α = -1` there is no bottom vertex `n'`, so the list containing `n`,
/// written `u n v`, is handled separately: `u` is read as the one-line
/// notation of a permutation of its letters and contributes that
/// permutation's edges, and `n v_1 v_2 ⋯` contributes consecutive edges.
pub fn config_to_matching(c: &LaguerreConfig) -> Matching {
    let n = c.n();
    let alpha = c.sigma().alpha().get();
    let bottom = (i64::from(n) + alpha).max(0) as u32;
    let mut edges = Vec::new();
    let hats = c.sigma().hats();
    if let Some(first) = hats.first() {
        let sorted = first.letters().iter().copied().sorted();
        edges.extend(sorted.zip(first.letters().iter().copied()));
        let mut word = Vec::new();
        for (i, hat) in hats.iter().enumerate().skip(1) {
            word.extend(hat.letters());
            word.push(n + i as u32);
        }
        edges.extend(consecutive_edges(&word, n));
    }
    for list in c.lambda().lists() {
        let letters = list.letters();
        match letters.iter().position(|&a| a == n) {
            Some(pos) if alpha < 0 => {
                let head = &letters[..pos];
                edges.extend(head.iter().copied().sorted().zip(head.iter().copied()));
                edges.extend(consecutive_edges(&letters[pos..], n));
            }
            _ => edges.extend(consecutive_edges(letters, n)),
        }
    }
    Matching::new(n, bottom, edges).expect("configurations give matchings")
}

/// Inverse of [`config_to_matching`].
pub fn matching_to_config(m: &Matching, alpha: Alpha) -> Result<LaguerreConfig> {
    let n = m.top;
    if i64::from(m.bottom) != (i64::from(n) + alpha.get()).max(0) {
        return Err(Error::InvalidStructure(format!(
            "K_{{{n},{}}} does not match alpha = {alpha}",
            m.bottom
        )));
    }
    let next: BTreeMap<u32, u32> = m.edges.iter().copied().collect();
    let has_pred: BTreeSet<u32> = m.edges.iter().map(|e| e.1).collect();

    let mut seen = BTreeSet::new();
    let mut paths = Vec::new();
    for start in 1..=n {
        if has_pred.contains(&start) {
            continue;
        }
        let mut path = vec![start];
        let mut cur = start;
        while let Some(&b) = next.get(&cur) {
            path.push(b);
            cur = b;
        }
        seen.extend(path.iter().copied());
        paths.push(path);
    }
    let mut cycles = Vec::new();
    for start in 1..=n {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let mut cur = next[&start];
        while cur != start {
            seen.insert(cur);
            cycle.push(cur);
            cur = next[&cur];
        }
        cycles.push(cycle);
    }

    let mut hats: Vec<Vec<u32>> = vec![Vec::new(); (alpha.get() + 1) as usize];
    let mut lists = Vec::new();
    if alpha.get() >= 0 {
        // Cycles form σ_0. Paths ending at a bottom vertex n+i give σ̂_i.
        let sigma0 = ColoredPermutation::from_cycles(
            Alpha::ZERO,
            &cycles.iter().map(|c| (c.clone(), 0)).collect_vec(),
        )?;
        hats[0] = sigma0.hats()[0].letters().to_vec();
        for mut path in paths {
            let last = *path.last().expect("paths are non-empty");
            if last > n {
                path.pop();
                hats[(last - n) as usize] = path;
            } else {
                lists.push(path);
            }
        }
        // Bottom vertices n+i with no partner mark an empty σ̂_i; nothing to do.
    } else {
        let mut u = Vec::new();
        if !cycles.is_empty() {
            let perm = ColoredPermutation::from_cycles(
                Alpha::ZERO,
                &cycles.iter().map(|c| (c.clone(), 0)).collect_vec(),
            )?;
            u = perm.hats()[0].letters().to_vec();
        }
        for path in paths {
            if path[0] == n {
                let mut list = u.clone();
                list.extend(path);
                lists.push(list);
            } else {
                lists.push(path);
            }
        }
        if !u.is_empty() && !lists.iter().any(|l| l.contains(&n)) {
            return Err(Error::InvalidStructure(
                "cycles without a list through n".into(),
            ));
        }
    }
    lists.sort_by_key(|l| l.iter().copied().min());
    let hats = hats
        .into_iter()
        .map(Word::new)
        .collect::<Result<Vec<_>>>()?;
    let lists = lists
        .into_iter()
        .map(Word::new)
        .collect::<Result<Vec<_>>>()?;
    let sigma = if alpha.get() >= 0 {
        ColoredPermutation::from_hats(hats)?
    } else {
        ColoredPermutation::empty(alpha)
    };
    LaguerreConfig::new(n, sigma, ListFamily::new(lists)?)
}

/// Number of `k`-edge matchings of `K_{n,m}`: `C(n,k) C(m,k) k!`.
pub fn matching_count(n: u32, m: u32, k: u32) -> BigInt {
    binomial(n.into(), k.into()) * binomial(m.into(), k.into()) * factorial(k)
}

/// Checks that [`config_to_matching`] sends the configurations on `[n]` with
/// `k` lists bijectively onto the `(n-k)`-edge matchings of `K_{n,n+α}`, with
/// [`matching_to_config`] as inverse.
pub fn matching_bijection_check(n: u32, k: u32, alpha: Alpha) -> bool {
    if k > n {
        return false;
    }
    let m = (i64::from(n) + alpha.get()).max(0) as u32;
    let mut image = HashSet::new();
    for c in enumerate_configs(n, k as usize, alpha) {
        let matching = config_to_matching(&c);
        let inverted = matching_to_config(&matching, alpha).ok();
        if matching.len() as u32 != n - k
            || inverted.as_ref() != Some(&c)
            || !image.insert(matching)
        {
            return false;
        }
    }
    BigInt::from(image.len()) == matching_count(n, m, n - k)
}

/// Checks that the matching polynomial of `K_{n,n+α}` equals
/// `x^α L^{(α)}_n(x²)` for the classical monic Laguerre polynomial
/// `L_n(x) = Σ_k (-1)^{n-k} (n!/k!) C(n+α, n-k) x^k`. Both sides are
/// multiplied by `x` so that `α = -1` stays polynomial.
pub fn matching_identity_check(n: u32, alpha: Alpha) -> bool {
    let a = alpha.get();
    let m = (i64::from(n) + a).max(0) as u32;
    let x_pow = |e: i64| Monomial::var(Var::X, u32::try_from(e).expect("non-negative exponent"));
    let mut lhs = MPoly::zero();
    for k in 0..=n.min(m) {
        let count = matching_count(n, m, k);
        let signed = if k % 2 == 1 { -count } else { count };
        lhs.add_term(x_pow(2 * i64::from(n) + a + 1 - 2 * i64::from(k)), signed);
    }
    let mut rhs = MPoly::zero();
    for k in 0..=n {
        let choose = if k == n {
            BigInt::one()
        } else {
            binomial(i64::from(n) + a, i64::from(n - k))
        };
        let coeff = factorial(n) / factorial(k) * choose;
        let signed = if (n - k) % 2 == 1 { -coeff } else { coeff };
        rhs.add_term(x_pow(2 * i64::from(k) + a + 1), signed);
    }
    lhs == rhs
}

/// Cycles of a partial injection given as a map.
fn count_cycles(f: &BTreeMap<u32, u32>) -> u32 {
    let mut on_cycle = BTreeSet::new();
    let mut cycles = 0;
    for &start in f.keys() {
        if on_cycle.contains(&start) {
            continue;
        }
        let mut walk = vec![start];
        let mut cur = start;
        while let Some(&next) = f.get(&cur) {
            if next == start {
                on_cycle.extend(walk.iter().copied());
                cycles += 1;
                break;
            }
            if walk.len() > f.len() {
                break;
            }
            walk.push(next);
            cur = next;
        }
    }
    cycles
}

/// Checks `Σ_{(A,f)} (α+1)^{cyc(f)} = (n!/k!) C(n+α, n-k)`, where `f` ranges
/// over injections from an `(n-k)`-subset `A` of `[n]` into `[n]`.
pub fn foata_strehl_check(n: u32, k: u32, alpha: Alpha) -> bool {
    let base = BigInt::from(alpha.get() + 1);
    let size = (n - k) as usize;
    let mut total = BigInt::zero();
    for domain in (1..=n).combinations(size) {
        for images in (1..=n).permutations(size) {
            let f: BTreeMap<u32, u32> = domain.iter().copied().zip(images).collect();
            total += num_traits::pow(base.clone(), count_cycles(&f) as usize);
        }
    }
    let choose = if k == n {
        BigInt::one()
    } else {
        binomial(i64::from(n) + alpha.get(), i64::from(n - k))
    };
    total == factorial(n) / factorial(k) * choose
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_config() -> LaguerreConfig {
        let sigma = ColoredPermutation::from_cycles(
            Alpha::new(1).unwrap(),
            &[
                (vec![7, 4], 0),
                (vec![15], 0),
                (vec![13, 5, 2], 1),
                (vec![14], 1),
            ],
        )
        .unwrap();
        let word = |v: &[u32]| Word::new(v.to_vec()).unwrap();
        let lambda = ListFamily::new(vec![
            word(&[1, 3]),
            word(&[12, 6, 11]),
            word(&[10, 8]),
            word(&[9]),
        ])
        .unwrap();
        LaguerreConfig::new(15, sigma, lambda).unwrap()
    }

    #[test]
    fn worked_matching() {
        let m = config_to_matching(&example_config());
        let expect: BTreeSet<(u32, u32)> = [
            (1, 3),
            (2, 5),
            (4, 7),
            (5, 14),
            (6, 11),
            (7, 4),
            (10, 8),
            (12, 6),
            (13, 2),
            (15, 15),
            (14, 16),
        ]
        .into_iter()
        .collect();
        assert_eq!(m.edges(), &expect);
        assert_eq!(
            matching_to_config(&m, Alpha::new(1).unwrap()).unwrap(),
            example_config()
        );
    }

    #[test]
    fn singletons_give_empty_matching() {
        for n in 1..=4 {
            for c in enumerate_configs(n, n as usize, Alpha::MINUS_ONE) {
                assert!(config_to_matching(&c).is_empty());
            }
        }
    }

    #[test]
    fn bijection_onto_matchings() {
        for a in [-1, 0, 1] {
            for n in 0..=5u32 {
                for k in 0..=n {
                    assert!(
                        matching_bijection_check(n, k, Alpha::new(a).unwrap()),
                        "n={n} k={k} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(matching_count(4, 7, 0), BigInt::from(1));
        assert_eq!(matching_count(2, 3, 2), BigInt::from(6));
    }

    #[test]
    fn matching_polynomial_identity() {
        for a in -1..=3 {
            for n in 0..=8 {
                assert!(
                    matching_identity_check(n, Alpha::new(a).unwrap()),
                    "n={n} a={a}"
                );
            }
        }
    }

    #[test]
    fn foata_strehl() {
        for a in [-1, 0, 1, 2] {
            for n in 0..=6 {
                for k in 0..=n {
                    assert!(
                        foata_strehl_check(n, k, Alpha::new(a).unwrap()),
                        "n={n} k={k} a={a}"
                    );
                }
            }
        }
    }
}
