//! α-Laguerre configurations: a colored permutation on one part of `[n]`
//! together with `k` strict lists covering the other part.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::laguerre::{coeff_l, Alpha};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::qnum::{q_binomial, q_factorial};

use super::{inv, Word};

/// A permutation whose cycles carry colors `0..=α`.
///
/// It is stored as the words `σ̂_0, ..., σ̂_α`, where `σ̂_i` is the one-line
/// notation of the color-`i` sub-permutation over its sorted support: the
/// `j`-th letter is the image of the `j`-th smallest element. Any arrangement
/// of a set is a valid `σ̂_i`, so this form is convenient to enumerate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    hats: Vec<Word>,
}

impl ColoredPermutation {
    /// The empty colored permutation with `α + 1` colors.
    pub fn empty(alpha: Alpha) -> Self {
        ColoredPermutation {
            hats: vec![Word::default(); (alpha.get() + 1) as usize],
        }
    }

    /// Builds from the one-line words `σ̂_0, ..., σ̂_α`.
    pub fn from_hats(hats: Vec<Word>) -> Result<Self> {
        Word::new(
            hats.iter()
                .flat_map(|w| w.letters().iter().copied())
                .collect(),
        )?;
        if hats.iter().flat_map(Word::letters).any(|&a| a == 0) {
            return Err(Error::InvalidStructure("letters must be positive".into()));
        }
        Ok(ColoredPermutation { hats })
    }

    /// Builds from cycles `(c_1 c_2 ... c_r)` meaning `c_1 → c_2 → ... → c_1`,
    /// each with a color in `0..=α`.
    pub fn from_cycles(alpha: Alpha, cycles: &[(Vec<u32>, u32)]) -> Result<Self> {
        let colors = (alpha.get() + 1) as usize;
        let mut maps: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new(); colors];
        for (cycle, color) in cycles {
            let slot = maps.get_mut(*color as usize).ok_or_else(|| {
                Error::InvalidStructure(format!("color {color} exceeds alpha = {alpha}"))
            })?;
            if cycle.is_empty() {
                return Err(Error::InvalidStructure("empty cycle".into()));
            }
            for (i, &a) in cycle.iter().enumerate() {
                slot.insert(a, cycle[(i + 1) % cycle.len()]);
            }
        }
        let hats = maps
            .into_iter()
            .map(|m| Word::from_vec_unchecked(m.into_values().collect()))
            .collect();
        let out = ColoredPermutation::from_hats(hats)?;
        if out.size() != cycles.iter().map(|(c, _)| c.len()).sum::<usize>() {
            return Err(Error::InvalidStructure("cycles are not disjoint".into()));
        }
        Ok(out)
    }

    pub fn alpha(&self) -> Alpha {
        Alpha::new(self.hats.len() as i64 - 1).expect("at least -1")
    }

    pub fn hats(&self) -> &[Word] {
        &self.hats
    }

    pub fn hat(&self, color: u32) -> Option<&Word> {
        self.hats.get(color as usize)
    }

    /// Number of points moved or fixed.
    pub fn size(&self) -> usize {
        self.hats.iter().map(Word::len).sum()
    }

    pub fn support(&self) -> Vec<u32> {
        self.hats
            .iter()
            .flat_map(|w| w.letters().iter().copied())
            .sorted()
            .collect()
    }

    /// The map `a ↦ (σ(a), color)`.
    pub fn mapping(&self) -> BTreeMap<u32, (u32, u32)> {
        let mut out = BTreeMap::new();
        for (color, hat) in self.hats.iter().enumerate() {
            let sorted = hat.letters().iter().copied().sorted();
            for (a, &b) in sorted.zip(hat.letters()) {
                out.insert(a, (b, color as u32));
            }
        }
        out
    }

    /// Cycles with their colors, each written from its maximum and listed by
    /// increasing maximum.
    pub fn cycles(&self) -> Vec<(Vec<u32>, u32)> {
        let map = self.mapping();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &start in map.keys().rev() {
            if seen.contains(&start) {
                continue;
            }
            let color = map[&start].1;
            let mut cycle = vec![start];
            seen.insert(start);
            let mut cur = map[&start].0;
            while cur != start {
                seen.insert(cur);
                cycle.push(cur);
                cur = map[&cur].0;
            }
            let top = cycle.iter().position_max().expect("nonempty");
            cycle.rotate_left(top);
            out.push((cycle, color));
        }
        out.sort_by_key(|(c, _)| c[0]);
        out
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cycles()
            .iter()
            .map(|(c, color)| format!("({})_{color}", c.iter().join(" ")))
            .collect();
        f.write_str(&parts.join(""))
    }
}

/// Non-empty, pairwise disjoint strict lists ordered by their minima.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ListFamily {
    lists: Vec<Word>,
}

impl ListFamily {
    pub fn new(lists: Vec<Word>) -> Result<Self> {
        if lists.iter().any(Word::is_empty) {
            return Err(Error::InvalidStructure("lists must be non-empty".into()));
        }
        Word::new(
            lists
                .iter()
                .flat_map(|w| w.letters().iter().copied())
                .collect(),
        )?;
        if !lists
            .windows(2)
            .all(|w| w[0].min_letter() < w[1].min_letter())
        {
            return Err(Error::InvalidStructure(
                "lists must be ordered by their minima".into(),
            ));
        }
        Ok(ListFamily { lists })
    }

    pub fn lists(&self) -> &[Word] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// Sum of `rl` over the lists.
    pub fn rl(&self) -> usize {
        self.lists
            .iter()
            .map(|w| w.rl().expect("lists are non-empty"))
            .sum()
    }

    pub fn concat(&self) -> Vec<u32> {
        self.lists
            .iter()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }
}

/// A pair `(σ, λ)` whose supports partition `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaguerreConfig {
    n: u32,
    sigma: ColoredPermutation,
    lambda: ListFamily,
}

impl LaguerreConfig {
    pub fn new(n: u32, sigma: ColoredPermutation, lambda: ListFamily) -> Result<Self> {
        let mut all = sigma.support();
        all.extend(lambda.concat());
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidStructure(format!(
                "supports do not partition [{n}]"
            )));
        }
        Ok(LaguerreConfig { n, sigma, lambda })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.lambda.len()
    }

    pub fn sigma(&self) -> &ColoredPermutation {
        &self.sigma
    }

    pub fn lambda(&self) -> &ListFamily {
        &self.lambda
    }
}

/// The concatenations `σ̲ = σ̂_0 ⋯ σ̂_α`, `σ̲̲ = 0^{|σ̂_0|} 1 0^{|σ̂_1|} ⋯ 1 0^{|σ̂_α|}`
/// and `λ̲ = λ_1 ⋯ λ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigWords {
    pub sigma_word: Vec<u32>,
    pub binary_word: Vec<u8>,
    pub lambda_word: Vec<u32>,
}

pub fn config_words(c: &LaguerreConfig) -> ConfigWords {
    let hats = c.sigma.hats();
    let sigma_word = hats
        .iter()
        .flat_map(|w| w.letters().iter().copied())
        .collect();
    let mut binary_word = Vec::new();
    for (i, hat) in hats.iter().enumerate() {
        if i > 0 {
            binary_word.push(1);
        }
        binary_word.extend(std::iter::repeat_n(0u8, hat.len()));
    }
    ConfigWords {
        sigma_word,
        binary_word,
        lambda_word: c.lambda.concat(),
    }
}

/// The monomial `y^{|σ̲| + rl(λ)} q^{inv(σ̲·λ̲) - rl(λ) + inv(σ̲̲)}`.
pub fn config_weight(c: &LaguerreConfig) -> MPoly {
    let words = config_words(c);
    let rl = c.lambda.rl();
    let mut joined = words.sigma_word.clone();
    joined.extend(&words.lambda_word);
    let q_exp = inv(&joined) - rl + inv(&words.binary_word);
    let y_exp = words.sigma_word.len() + rl;
    MPoly::term(
        Monomial::var(Var::Y, y_exp as u32).with_exp(Var::Q, q_exp as u32),
        1,
    )
}

/// Every colored permutation with support `support`, ordered by `σ̲` and
/// then by block sizes.
pub fn colored_permutations(support: &[u32], alpha: Alpha) -> Vec<ColoredPermutation> {
    let colors = (alpha.get() + 1) as usize;
    if colors == 0 {
        return if support.is_empty() {
            vec![ColoredPermutation { hats: Vec::new() }]
        } else {
            Vec::new()
        };
    }
    let m = support.len();
    let sizes = compositions(m, colors);
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    for arrangement in sorted.iter().copied().permutations(m) {
        for parts in &sizes {
            let mut rest = arrangement.as_slice();
            let hats = parts
                .iter()
                .map(|&len| {
                    let (head, tail) = rest.split_at(len);
                    rest = tail;
                    Word::from_vec_unchecked(head.to_vec())
                })
                .collect();
            out.push(ColoredPermutation { hats });
        }
    }
    out
}

/// Weak compositions of `total` into `parts` parts, in lex order.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Set partitions of the sorted slice into exactly `k` blocks, blocks ordered
/// by their minima.
fn set_partitions(set: &[u32], k: usize) -> Vec<Vec<Vec<u32>>> {
    fn go(set: &[u32], k: usize, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&first, rest)) = set.split_first() else {
            if blocks.len() == k {
                out.push(blocks.clone());
            }
            return;
        };
        if blocks.len() + set.len() < k {
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(first);
            go(rest, k, blocks, out);
            blocks[i].pop();
        }
        if blocks.len() < k {
            blocks.push(vec![first]);
            go(rest, k, blocks, out);
            blocks.pop();
        }
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    go(&sorted, k, &mut Vec::new(), &mut out);
    out
}

/// Every family of `k` strict lists covering `set`.
pub fn list_families(set: &[u32], k: usize) -> Vec<ListFamily> {
    let mut out = Vec::new();
    for blocks in set_partitions(set, k) {
        let arrangements = blocks
            .iter()
            .map(|b| b.iter().copied().permutations(b.len()).collect::<Vec<_>>())
            .multi_cartesian_product();
        if blocks.is_empty() {
            out.push(ListFamily::default());
            continue;
        }
        for lists in arrangements {
            let lists = lists.into_iter().map(Word::from_vec_unchecked).collect();
            out.push(ListFamily { lists });
        }
    }
    out
}

/// All α-Laguerre configurations on `[n]` with `k` lists.
///
/// Supports of `σ` are visited by size and then lexicographically; within a
/// support, colored permutations come first in the outer loop.
pub fn enumerate_configs(n: u32, k: usize, alpha: Alpha) -> impl Iterator<Item = LaguerreConfig> {
    let ground: Vec<u32> = (1..=n).collect();
    let max_sigma = if alpha.get() < 0 { 0 } else { n as usize };
    (0..=max_sigma)
        .flat_map(move |m| {
            ground
                .clone()
                .into_iter()
                .combinations(m)
                .collect::<Vec<_>>()
        })
        .flat_map(move |support| {
            let rest: Vec<u32> = (1..=n).filter(|a| !support.contains(a)).collect();
            let families = list_families(&rest, k);
            let perms = if families.is_empty() {
                Vec::new()
            } else {
                colored_permutations(&support, alpha)
            };
            perms
                .into_iter()
                .cartesian_product(families)
                .map(move |(sigma, lambda)| LaguerreConfig { n, sigma, lambda })
        })
}

/// Checks `Σ q^{inv(σ̲) + inv(σ̲̲)} = n!_q [n+α, α]_q` over colored
/// permutations of `[n]`.
pub fn lemma1_check(n: u32, alpha: u32) -> bool {
    let ground: Vec<u32> = (1..=n).collect();
    let alpha = Alpha::new(alpha.into()).expect("non-negative");
    let lhs: MPoly = colored_permutations(&ground, alpha)
        .into_iter()
        .map(|sigma| {
            let c = LaguerreConfig {
                n,
                sigma,
                lambda: ListFamily::default(),
            };
            let w = config_words(&c);
            MPoly::var_pow(Var::Q, (inv(&w.sigma_word) + inv(&w.binary_word)) as u32)
        })
        .sum();
    let rhs = &q_factorial(n) * &q_binomial(i64::from(n) + alpha.get(), alpha.get());
    lhs == rhs
}

/// Checks `Σ y^{rl(λ)} q^{inv(λ̲) - rl(λ)} = ℓ^{(-1)}_{n,k}(y;q)` over
/// families of `k` lists covering `[n]`.
pub fn lemma2_check(n: u32, k: usize) -> bool {
    let ground: Vec<u32> = (1..=n).collect();
    let lhs: MPoly = list_families(&ground, k)
        .iter()
        .map(|lambda| {
            let rl = lambda.rl();
            let q_exp = inv(&lambda.concat()) - rl;
            MPoly::term(
                Monomial::var(Var::Y, rl as u32).with_exp(Var::Q, q_exp as u32),
                1,
            )
        })
        .sum();
    lhs == coeff_l(n, k as u32, Alpha::MINUS_ONE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{binomial, factorial};
    use num_bigint::BigInt;

    fn word(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    pub(crate) fn example_config() -> LaguerreConfig {
        let alpha = Alpha::new(1).unwrap();
        let sigma = ColoredPermutation::from_cycles(
            alpha,
            &[
                (vec![15], 0),
                (vec![7, 4], 0),
                (vec![14], 1),
                (vec![13, 5, 2], 1),
            ],
        )
        .unwrap();
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
    fn example_words_and_weight() {
        let c = example_config();
        let w = config_words(&c);
        assert_eq!(w.sigma_word, vec![7, 4, 15, 13, 2, 5, 14]);
        assert_eq!(w.binary_word, vec![0, 0, 0, 1, 0, 0, 0, 0]);
        assert_eq!(w.lambda_word, vec![1, 3, 12, 6, 11, 10, 8, 9]);
        assert_eq!(c.lambda().rl(), 3);
        assert_eq!(inv(&w.binary_word), 4);
        let expect = MPoly::term(Monomial::var(Var::Y, 10).with_exp(Var::Q, 53), 1);
        assert_eq!(config_weight(&c), expect);
    }

    #[test]
    fn cycles_round_trip() {
        let c = example_config();
        assert_eq!(
            c.sigma().cycles(),
            vec![
                (vec![7, 4], 0),
                (vec![13, 5, 2], 1),
                (vec![14], 1),
                (vec![15], 0)
            ]
        );
        assert_eq!(c.sigma().mapping()[&13], (5, 1));
        let again =
            ColoredPermutation::from_cycles(c.sigma().alpha(), &c.sigma().cycles()).unwrap();
        assert_eq!(&again, c.sigma());
    }

    #[test]
    fn small_configurations() {
        let empty: Vec<_> = enumerate_configs(0, 0, Alpha::MINUS_ONE).collect();
        assert_eq!(empty.len(), 1);
        assert_eq!(config_weight(&empty[0]), MPoly::one());
        let words = config_words(&empty[0]);
        assert!(words.sigma_word.is_empty() && words.binary_word.is_empty());

        let single = ColoredPermutation::from_cycles(Alpha::ZERO, &[(vec![3], 0)]).unwrap();
        let lambda = ListFamily::new(vec![word(&[1]), word(&[2])]).unwrap();
        let c = LaguerreConfig::new(3, single, lambda).unwrap();
        let w = config_words(&c);
        assert_eq!((w.sigma_word, w.binary_word), (vec![3], vec![0]));

        let one: Vec<_> = enumerate_configs(1, 1, Alpha::ZERO).collect();
        assert_eq!(one.len(), 1);
        assert_eq!(config_weight(&one[0]), MPoly::one());
    }

    #[test]
    fn invalid_structures_are_rejected() {
        assert!(ListFamily::new(vec![word(&[3]), word(&[1, 2])]).is_err());
        assert!(ListFamily::new(vec![word(&[1]), word(&[1, 2])]).is_err());
        assert!(ColoredPermutation::from_cycles(Alpha::ZERO, &[(vec![1], 1)]).is_err());
        assert!(
            ColoredPermutation::from_cycles(Alpha::ZERO, &[(vec![1, 2], 0), (vec![2], 0)]).is_err()
        );
        let sigma = ColoredPermutation::empty(Alpha::ZERO);
        assert!(LaguerreConfig::new(2, sigma, ListFamily::new(vec![word(&[1])]).unwrap()).is_err());
    }

    #[test]
    fn lah_counts() {
        for n in 1..=6u32 {
            for k in 1..=n {
                let count = enumerate_configs(n, k as usize, Alpha::MINUS_ONE).count();
                let expect =
                    factorial(n) / factorial(k) * binomial(i64::from(n) - 1, i64::from(k) - 1);
                assert_eq!(BigInt::from(count), expect);
            }
        }
    }

    #[test]
    fn weights_sum_to_coefficients() {
        for a in [-1, 0, 1, 2] {
            let alpha = Alpha::new(a).unwrap();
            for n in 0..=5u32 {
                for k in 0..=n {
                    let total: MPoly = enumerate_configs(n, k as usize, alpha)
                        .map(|c| config_weight(&c))
                        .sum();
                    assert_eq!(total, coeff_l(n, k, alpha), "n={n} k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn lemmas() {
        assert!(lemma1_check(0, 0));
        assert!(lemma1_check(1, 1));
        for n in 0..=5 {
            for a in 0..=2 {
                assert!(lemma1_check(n, a), "n={n} a={a}");
            }
        }
        for n in 1..=6 {
            for k in 1..=n as usize {
                assert!(lemma2_check(n, k), "n={n} k={k}");
            }
        }
    }
}
