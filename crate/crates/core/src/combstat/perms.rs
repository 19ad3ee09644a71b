//! Permutations of `[n]` and the statistics wex, rec and cros.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Monomial, Var};

/// A bijection of `[n]` in one-line notation, `images[i-1] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[(v - 1) as usize], true) {
                return Err(Error::InvalidStructure(format!(
                    "not a permutation of [{n}]: {images:?}"
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: u32) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: u32) -> u32 {
        self.0[(i - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().join(" "))
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: u32) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n as usize).map(Permutation)
}

/// Weak excedances, records and crossings of a permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PermStats {
    pub wex: u32,
    pub rec: u32,
    pub cros: u32,
}

impl PermStats {
    /// `β^{rec} y^{wex} q^{cros}`.
    pub fn weight(&self) -> MPoly {
        let m = Monomial::var(Var::Y, self.wex)
            .with_exp(Var::Q, self.cros)
            .with_exp(Var::Beta, self.rec);
        MPoly::term(m, 1)
    }
}

pub fn perm_stats(sigma: &Permutation) -> PermStats {
    let s = sigma.images();
    let n = s.len();
    let wex = (0..n).filter(|&i| s[i] as usize > i).count() as u32;
    let mut rec = 0;
    let mut best = 0;
    for &v in s {
        if v > best {
            rec += 1;
            best = v;
        }
    }
    let mut cros = 0;
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            let (si, sj) = (sigma.apply(i), sigma.apply(j));
            let upper = i < j && j <= si && si < sj;
            let lower = sj < si && si < j && j < i;
            if upper || lower {
                cros += 1;
            }
        }
    }
    PermStats { wex, rec, cros }
}

/// `Σ_{σ ∈ S_n} β^{rec(σ)} y^{wex(σ)} q^{cros(σ)}`.
pub fn moments_bruteforce(n: u32) -> MPoly {
    permutations(n).map(|p| perm_stats(&p).weight()).sum()
}
