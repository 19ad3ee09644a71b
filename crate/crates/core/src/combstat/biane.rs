//! Laguerre histories and Biane's bijection with permutations.
//!
//! A permutation `σ` of `[n]` is read as a bipartite graph with an edge from
//! top vertex `i` to bottom vertex `σ(i)'`. Vertices are scanned in the order
//! `1, 1', 2, 2', ...`; each vertex either opens an edge (up step) or closes
//! one whose other end was scanned earlier (down step). A down step records
//! the position of that earlier end among the currently open vertices of its
//! row, counted from the right.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

use super::perms::{PermStats, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck word `s` of length `2n` with labels `ξ`: `ξ_i = 1` on up steps and
/// `1 <= ξ_i <= ⌈h_i/2⌉` on down steps, where `h_i` is the height before step `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaguerreHistory {
    steps: Vec<Step>,
    xi: Vec<u32>,
}

impl LaguerreHistory {
    pub fn new(steps: Vec<Step>, xi: Vec<u32>) -> Result<Self> {
        let h = LaguerreHistory { steps, xi };
        h.validate()?;
        Ok(h)
    }

    /// Parses `"uu du ud"`-style step strings (spaces ignored).
    pub fn parse(steps: &str, xi: Vec<u32>) -> Result<Self> {
        let steps = steps
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'u' => Ok(Step::Up),
                'd' => Ok(Step::Down),
                other => Err(Error::InvalidHistory(format!("unexpected step '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LaguerreHistory::new(steps, xi)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidHistory(msg));
        if self.steps.len() != self.xi.len() {
            return bad("steps and labels differ in length".into());
        }
        if self.steps.len() % 2 == 1 {
            return bad("odd length".into());
        }
        let mut h = 0u32;
        for (i, (&s, &x)) in self.steps.iter().zip(&self.xi).enumerate() {
            match s {
                Step::Up if x != 1 => return bad(format!("label {x} on up step {}", i + 1)),
                Step::Up => h += 1,
                Step::Down if h == 0 => return bad(format!("step {} goes below zero", i + 1)),
                Step::Down if x == 0 || x > h.div_ceil(2) => {
                    return bad(format!("label {x} out of range at step {}", i + 1))
                }
                Step::Down => h -= 1,
            }
        }
        if h != 0 {
            return bad("does not return to zero".into());
        }
        Ok(())
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn xi(&self) -> &[u32] {
        &self.xi
    }

    /// Half the length.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    /// Heights before each step.
    pub fn heights(&self) -> Vec<u32> {
        let mut h = 0;
        self.steps
            .iter()
            .map(|s| {
                let before = h;
                match s {
                    Step::Up => h += 1,
                    Step::Down => h -= 1,
                }
                before
            })
            .collect()
    }
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: String = self
            .steps
            .chunks(2)
            .map(|pair| {
                pair.iter()
                    .map(|s| if *s == Step::Up { 'u' } else { 'd' })
                    .collect::<String>()
            })
            .join(" ");
        write!(f, "{word} ; {}", self.xi.iter().join(","))
    }
}

/// Position of `v` in the sorted list `open`, counted from the right (1-based).
fn rank_from_right(open: &[u32], v: u32) -> u32 {
    let pos = open.iter().position(|&o| o == v).expect("vertex is open");
    (open.len() - pos) as u32
}

/// Removes and returns the entry at right-to-left rank `rank`.
fn take_from_right(open: &mut Vec<u32>, rank: u32) -> u32 {
    open.remove(open.len() - rank as usize)
}

pub fn biane_phi(sigma: &Permutation) -> LaguerreHistory {
    let n = sigma.len() as u32;
    let inverse = sigma.inverse();
    let mut tops: Vec<u32> = Vec::new();
    let mut bottoms: Vec<u32> = Vec::new();
    let mut steps = Vec::with_capacity(2 * n as usize);
    let mut xi = Vec::with_capacity(2 * n as usize);
    for i in 1..=n {
        let image = sigma.apply(i);
        if image < i {
            xi.push(rank_from_right(&bottoms, image));
            bottoms.retain(|&b| b != image);
            steps.push(Step::Down);
        } else {
            tops.push(i);
            steps.push(Step::Up);
            xi.push(1);
        }
        let pre = inverse.apply(i);
        if pre <= i {
            xi.push(rank_from_right(&tops, pre));
            tops.retain(|&t| t != pre);
            steps.push(Step::Down);
        } else {
            bottoms.push(i);
            steps.push(Step::Up);
            xi.push(1);
        }
    }
    LaguerreHistory { steps, xi }
}

pub fn biane_inverse(h: &LaguerreHistory) -> Result<Permutation> {
    h.validate()?;
    let n = h.n();
    let mut images = vec![0u32; n];
    let mut tops: Vec<u32> = Vec::new();
    let mut bottoms: Vec<u32> = Vec::new();
    for i in 1..=n as u32 {
        let idx = 2 * (i as usize - 1);
        match h.steps[idx] {
            Step::Up => tops.push(i),
            Step::Down => {
                let rank = h.xi[idx];
                if rank as usize > bottoms.len() {
                    return Err(Error::InvalidHistory(format!(
                        "no bottom vertex at rank {rank}"
                    )));
                }
                images[i as usize - 1] = take_from_right(&mut bottoms, rank);
            }
        }
        match h.steps[idx + 1] {
            Step::Up => bottoms.push(i),
            Step::Down => {
                let rank = h.xi[idx + 1];
                if rank as usize > tops.len() {
                    return Err(Error::InvalidHistory(format!(
                        "no top vertex at rank {rank}"
                    )));
                }
                let j = take_from_right(&mut tops, rank);
                images[j as usize - 1] = i;
            }
        }
    }
    Permutation::new(images)
}

/// `(wex, rec, cros)` read from a history: down steps at even positions,
/// those of them with the maximal label, and the total label excess.
pub fn history_stats(h: &LaguerreHistory) -> PermStats {
    let heights = h.heights();
    let mut stats = PermStats::default();
    for (i, (&s, &x)) in h.steps.iter().zip(&h.xi).enumerate() {
        if s != Step::Down {
            continue;
        }
        stats.cros += x - 1;
        if i % 2 == 1 {
            stats.wex += 1;
            if x == heights[i].div_ceil(2) {
                stats.rec += 1;
            }
        }
    }
    stats
}

/// Every Laguerre history of length `2n`.
pub fn enumerate_histories(n: u32) -> Vec<LaguerreHistory> {
    fn go(
        len: usize,
        steps: &mut Vec<Step>,
        xi: &mut Vec<u32>,
        h: u32,
        out: &mut Vec<LaguerreHistory>,
    ) {
        let left = len - steps.len();
        if left == 0 {
            out.push(LaguerreHistory {
                steps: steps.clone(),
                xi: xi.clone(),
            });
            return;
        }
        if (h as usize) < left {
            steps.push(Step::Up);
            xi.push(1);
            go(len, steps, xi, h + 1, out);
            steps.pop();
            xi.pop();
        }
        if h > 0 {
            for label in 1..=h.div_ceil(2) {
                steps.push(Step::Down);
                xi.push(label);
                go(len, steps, xi, h - 1, out);
                steps.pop();
                xi.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(
        2 * n as usize,
        &mut Vec::new(),
        &mut Vec::new(),
        0,
        &mut out,
    );
    out
}
