//! Rook placements on Ferrers and colored boards, and the translation of
//! Laguerre configurations into colored rook configurations.
//!
//! Cells are `(row, column)` with rows counted from the top and columns from
//! the left, both starting at 1.

mod matching;

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::combstat::{config_weight, ColoredPermutation, LaguerreConfig, ListFamily, Word};
use crate::error::{Error, Result};
use crate::laguerre::{coeff_l, Alpha};
use crate::mpoly::{MPoly, Monomial, Var};

pub use matching::{
    config_to_matching, foata_strehl_check, matching_bijection_check, matching_count,
    matching_identity_check, matching_to_config, Matching,
};

/// A Ferrers board given by column heights `μ_1 >= μ_2 >= ...`; columns are
/// bottom-justified in a grid of height `μ_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersBoard {
    heights: Vec<u32>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        if heights.contains(&0) || heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidStructure(format!(
                "not a partition: {heights:?}"
            )));
        }
        Ok(FerrersBoard { heights })
    }

    /// The `n × n` square.
    pub fn square(n: u32) -> Self {
        FerrersBoard {
            heights: vec![n; n as usize],
        }
    }

    fn grid_height(&self) -> u32 {
        self.heights.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, (row, col): (u32, u32)) -> bool {
        match self.heights.get((col as usize).wrapping_sub(1)) {
            Some(&h) => row >= 1 && row <= self.grid_height() && row > self.grid_height() - h,
            None => false,
        }
    }

    pub fn num_cells(&self) -> u32 {
        self.heights.iter().sum()
    }
}

/// Rooks no two of which share a row or a column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RookPlacement {
    cells: BTreeSet<(u32, u32)>,
}

impl RookPlacement {
    pub fn new(cells: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        let rows = cells.iter().map(|c| c.0).unique().count();
        let cols = cells.iter().map(|c| c.1).unique().count();
        if rows != cells.len() || cols != cells.len() {
            return Err(Error::InvalidStructure("rooks attack each other".into()));
        }
        Ok(RookPlacement { cells })
    }

    /// Rook in column `j` sits in row `rows[j-1]`.
    pub fn from_column_rows(rows: &[u32]) -> Result<Self> {
        RookPlacement::new(rows.iter().enumerate().map(|(j, &r)| (r, j as u32 + 1)))
    }

    pub fn cells(&self) -> &BTreeSet<(u32, u32)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Cells of the board left after every rook crosses out its own cell, the
/// cells below it in its column and the cells to its right in its row.
pub fn inv_rook(board: &FerrersBoard, placement: &RookPlacement) -> Result<u32> {
    if let Some(&(row, col)) = placement.cells.iter().find(|c| !board.contains(**c)) {
        return Err(Error::CellOutsideBoard { row, col });
    }
    let mut count = 0;
    for (j, &h) in board.heights.iter().enumerate() {
        let col = j as u32 + 1;
        for row in board.grid_height() - h + 1..=board.grid_height() {
            let crossed = placement
                .cells
                .iter()
                .any(|&(r, c)| (c == col && row >= r) || (r == row && col >= c));
            if !crossed {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// An `n × n` board whose columns are split, left to right, into color blocks
/// of widths `m_0, ..., m_α` followed by list blocks of widths `n_1, ..., n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredBoard {
    n: u32,
    colors: Vec<u32>,
    blocks: Vec<u32>,
}

impl ColoredBoard {
    pub fn new(n: u32, colors: Vec<u32>, blocks: Vec<u32>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::InvalidStructure(
                "list blocks must be non-empty".into(),
            ));
        }
        if colors.iter().chain(&blocks).sum::<u32>() != n {
            return Err(Error::InvalidStructure(format!(
                "block widths do not add up to {n}"
            )));
        }
        Ok(ColoredBoard { n, colors, blocks })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> Alpha {
        Alpha::new(self.colors.len() as i64 - 1).expect("at least -1")
    }

    pub fn color_widths(&self) -> &[u32] {
        &self.colors
    }

    pub fn block_widths(&self) -> &[u32] {
        &self.blocks
    }

    /// Number of colored columns, `Σ m_i`.
    pub fn cw(&self) -> u32 {
        self.colors.iter().sum()
    }

    /// `Σ i · m_i`.
    pub fn cd(&self) -> u32 {
        self.colors
            .iter()
            .enumerate()
            .map(|(i, &m)| i as u32 * m)
            .sum()
    }

    /// Column ranges (0-based, half-open) of the list blocks.
    fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = self.cw() as usize;
        self.blocks
            .iter()
            .map(|&w| {
                let r = start..start + w as usize;
                start += w as usize;
                r
            })
            .collect()
    }
}

/// A colored board with `n` rooks, one per row and column, such that the
/// topmost rooks of successive list blocks move strictly downwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredRookConfig {
    board: ColoredBoard,
    rows: Vec<u32>,
}

impl ColoredRookConfig {
    /// `rows[j-1]` is the row of the rook in column `j`.
    pub fn new(board: ColoredBoard, rows: Vec<u32>) -> Result<Self> {
        let mut sorted = rows.clone();
        sorted.sort_unstable();
        if sorted != (1..=board.n).collect::<Vec<_>>() {
            return Err(Error::InvalidStructure(
                "rooks must fill every row and column".into(),
            ));
        }
        let r = ColoredRookConfig { board, rows };
        if !r.blocks_ordered() {
            return Err(Error::InvalidStructure(
                "list blocks must have increasing minimum rows".into(),
            ));
        }
        Ok(r)
    }

    fn blocks_ordered(&self) -> bool {
        self.board
            .block_ranges()
            .iter()
            .map(|r| self.rows[r.clone()].iter().min().copied())
            .tuple_windows()
            .all(|(a, b)| a < b)
    }

    pub fn board(&self) -> &ColoredBoard {
        &self.board
    }

    pub fn column_rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn placement(&self) -> RookPlacement {
        RookPlacement::from_column_rows(&self.rows).expect("rows form a permutation")
    }

    /// Per list block, the rooks to the right of the block's lowest rook.
    pub fn ind(&self) -> u32 {
        self.board
            .block_ranges()
            .into_iter()
            .map(|r| {
                let rows = &self.rows[r];
                let lowest = rows.iter().position_max().expect("blocks are non-empty");
                (rows.len() - 1 - lowest) as u32
            })
            .sum()
    }
}

/// `(cw, cd, inv, ind)` of a colored rook configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RookStats {
    pub cw: u32,
    pub cd: u32,
    pub inv: u32,
    pub ind: u32,
}

impl RookStats {
    /// `y^{cw + ind} q^{inv + cd - ind}`.
    pub fn weight(&self) -> MPoly {
        let m = Monomial::var(Var::Y, self.cw + self.ind)
            .with_exp(Var::Q, self.inv + self.cd - self.ind);
        MPoly::term(m, 1)
    }
}

pub fn stats_rook(r: &ColoredRookConfig) -> RookStats {
    let inv = inv_rook(&FerrersBoard::square(r.board.n), &r.placement())
        .expect("rooks lie on the square");
    RookStats {
        cw: r.board.cw(),
        cd: r.board.cd(),
        inv,
        ind: r.ind(),
    }
}

/// Reads `σ̂_0 ⋯ σ̂_α λ_1 ⋯ λ_k` as the rows of the rooks in columns `1..n`.
pub fn phi_config_to_rook(c: &LaguerreConfig) -> ColoredRookConfig {
    let colors = c.sigma().hats().iter().map(|w| w.len() as u32).collect();
    let blocks = c.lambda().lists().iter().map(|w| w.len() as u32).collect();
    let board = ColoredBoard {
        n: c.n(),
        colors,
        blocks,
    };
    let rows = c
        .sigma()
        .hats()
        .iter()
        .chain(c.lambda().lists())
        .flat_map(|w| w.letters().iter().copied())
        .collect();
    ColoredRookConfig { board, rows }
}

/// Splits the rook rows back into `σ̂_i` and `λ_j` words.
pub fn rook_to_config(r: &ColoredRookConfig) -> Result<LaguerreConfig> {
    let mut rest = r.rows.as_slice();
    let mut take = |w: u32| {
        let (head, tail) = rest.split_at(w as usize);
        rest = tail;
        Word::new(head.to_vec())
    };
    let hats = r
        .board
        .colors
        .iter()
        .map(|&w| take(w))
        .collect::<Result<Vec<_>>>()?;
    let lists = r
        .board
        .blocks
        .iter()
        .map(|&w| take(w))
        .collect::<Result<Vec<_>>>()?;
    LaguerreConfig::new(
        r.board.n,
        ColoredPermutation::from_hats(hats)?,
        ListFamily::new(lists)?,
    )
}

/// Weak compositions of `total` into `parts` parts (`parts = 0` allows only 0).
fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    (0..=total)
        .flat_map(|first| {
            weak_compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Every colored board with `n` columns, `α + 1` colors and `k` list blocks.
pub fn colored_boards(n: u32, k: usize, alpha: Alpha) -> Vec<ColoredBoard> {
    let colors = (alpha.get() + 1) as usize;
    let mut out = Vec::new();
    for list_total in k as u32..=n {
        // n_j >= 1: distribute the excess over k blocks.
        let Some(excess) = list_total.checked_sub(k as u32) else {
            continue;
        };
        for shifted in weak_compositions(excess, k) {
            let blocks: Vec<u32> = shifted.iter().map(|w| w + 1).collect();
            for color_widths in weak_compositions(n - list_total, colors) {
                out.push(ColoredBoard {
                    n,
                    colors: color_widths,
                    blocks: blocks.clone(),
                });
            }
        }
    }
    out
}

/// Every colored rook configuration with the given parameters, built
/// directly from boards and permutations of rows.
pub fn enumerate_rook_configs(n: u32, k: usize, alpha: Alpha) -> Vec<ColoredRookConfig> {
    let boards = colored_boards(n, k, alpha);
    let mut out = Vec::new();
    for rows in (1..=n).permutations(n as usize) {
        for board in &boards {
            let r = ColoredRookConfig {
                board: board.clone(),
                rows: rows.clone(),
            };
            if r.blocks_ordered() {
                out.push(r);
            }
        }
    }
    out
}

/// Checks `ℓ^{(α)}_{n,k} = Σ y^{cw+ind} q^{inv+cd-ind}` over colored rook
/// configurations.
pub fn theorem_rook_check(n: u32, k: usize, alpha: Alpha) -> bool {
    let total: MPoly = enumerate_rook_configs(n, k, alpha)
        .iter()
        .map(|r| stats_rook(r).weight())
        .sum();
    total == coeff_l(n, k as u32, alpha)
}

/// Checks that the rook weight of the image equals the configuration weight.
pub fn rook_transport_holds(c: &LaguerreConfig) -> bool {
    stats_rook(&phi_config_to_rook(c)).weight() == config_weight(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combstat::enumerate_configs;

    fn example_config() -> LaguerreConfig {
        let alpha = Alpha::new(1).unwrap();
        let sigma = ColoredPermutation::from_cycles(
            alpha,
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
    fn ferrers_example() {
        let board = FerrersBoard::new(vec![4, 4, 3, 3, 1]).unwrap();
        assert_eq!(board.num_cells(), 15);
        let drawn = RookPlacement::new([(1, 1), (3, 2), (2, 3)]).unwrap();
        assert_eq!(inv_rook(&board, &drawn), Ok(3));
        let listed = RookPlacement::new([(1, 1), (2, 3), (4, 2)]).unwrap();
        assert_eq!(inv_rook(&board, &listed), Ok(3));
    }

    #[test]
    fn ferrers_edge_cases() {
        let board = FerrersBoard::new(vec![2, 1]).unwrap();
        assert_eq!(inv_rook(&board, &RookPlacement::default()), Ok(3));
        // column 2 has height 1, so row 1 of it is missing
        let outside = RookPlacement::new([(1, 2)]).unwrap();
        assert_eq!(
            inv_rook(&board, &outside),
            Err(Error::CellOutsideBoard { row: 1, col: 2 })
        );
        assert!(FerrersBoard::new(vec![1, 2]).is_err());
        assert!(RookPlacement::new([(1, 1), (1, 2)]).is_err());
    }

    #[test]
    fn square_inversions_match_words() {
        for n in 0..=5 {
            for rows in (1..=n).permutations(n as usize) {
                let placement = RookPlacement::from_column_rows(&rows).unwrap();
                let inv = inv_rook(&FerrersBoard::square(n), &placement).unwrap();
                assert_eq!(inv as usize, crate::combstat::inv(&rows));
            }
        }
        let diagonal = RookPlacement::from_column_rows(&[4, 3, 2, 1]).unwrap();
        assert_eq!(inv_rook(&FerrersBoard::square(4), &diagonal), Ok(6));
    }

    #[test]
    fn worked_rook_example() {
        let r = phi_config_to_rook(&example_config());
        assert_eq!(r.board().color_widths(), &[3, 4]);
        assert_eq!(r.board().block_widths(), &[2, 3, 2, 1]);
        assert_eq!(
            r.column_rows(),
            &[7, 4, 15, 13, 2, 5, 14, 1, 3, 12, 6, 11, 10, 8, 9]
        );
        // cw counts all seven colored columns; a value of 1 would contradict
        // the y^10 weight of the same configuration.
        assert_eq!(
            stats_rook(&r),
            RookStats {
                cw: 7,
                cd: 4,
                inv: 52,
                ind: 3
            }
        );
        assert!(rook_transport_holds(&example_config()));
        assert_eq!(rook_to_config(&r).unwrap(), example_config());
    }

    #[test]
    fn trivial_boards() {
        let empty = enumerate_configs(0, 0, Alpha::new(2).unwrap())
            .next()
            .unwrap();
        assert_eq!(
            stats_rook(&phi_config_to_rook(&empty)),
            RookStats::default()
        );
        let board = ColoredBoard::new(3, vec![], vec![3]).unwrap();
        assert_eq!((board.cw(), board.cd()), (0, 0));
        assert!(ColoredBoard::new(3, vec![1], vec![1]).is_err());
        assert!(ColoredRookConfig::new(
            ColoredBoard::new(2, vec![], vec![1, 1]).unwrap(),
            vec![2, 1]
        )
        .is_err());
    }

    #[test]
    fn round_trip_and_transport() {
        for a in [-1, 0, 1] {
            let alpha = Alpha::new(a).unwrap();
            for n in 0..=5 {
                for k in 0..=n as usize {
                    let mut images = std::collections::HashSet::new();
                    for c in enumerate_configs(n, k, alpha) {
                        let r = phi_config_to_rook(&c);
                        assert!(ColoredRookConfig::new(
                            r.board().clone(),
                            r.column_rows().to_vec()
                        )
                        .is_ok());
                        assert_eq!(rook_to_config(&r).unwrap(), c);
                        assert!(rook_transport_holds(&c));
                        images.insert(r);
                    }
                    assert_eq!(images.len(), enumerate_rook_configs(n, k, alpha).len());
                }
            }
        }
    }

    #[test]
    fn rook_sums_equal_coefficients() {
        assert!(theorem_rook_check(0, 0, Alpha::ZERO));
        assert!(theorem_rook_check(2, 1, Alpha::ZERO));
        for a in [-1, 0, 1] {
            for n in 0..=5 {
                for k in 0..=n as usize {
                    assert!(
                        theorem_rook_check(n, k, Alpha::new(a).unwrap()),
                        "n={n} k={k} a={a}"
                    );
                }
            }
        }
    }
}
