//! Young-diagram arithmetic: cells, hooks, rim hooks, covers.
//!
//! Partitions are weakly decreasing sequences of positive integers, stored as
//! part sequences so that row access is O(1). Cells are 1-indexed with row 1
//! at the top (English convention), so "north" means row - 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits;

/// An integer partition. The empty sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A 1-indexed coordinate in a Young diagram.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    pub fn north(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    pub fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn west(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn northwest(self) -> Option<Cell> {
        (self.row > 1 && self.col > 1).then(|| Cell::new(self.row - 1, self.col - 1))
    }

    /// Content `col - row`; constant along diagonals, increases by one per
    /// step along a border strip from foot to hand.
    fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A removable border strip, stored foot to hand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RimHook {
    cells: Vec<Cell>,
}

impl RimHook {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// The southwest-most cell: neither its west nor south neighbour is in the strip.
    pub fn foot(&self) -> Cell {
        self.cells[0]
    }

    /// The northeast-most cell: neither its north nor east neighbour is in the strip.
    pub fn hand(&self) -> Cell {
        *self.cells.last().expect("rim hooks are nonempty")
    }
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing
    /// or contain zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.last().is_none_or(|&p| p >= 1);
        if !decreasing || !positive {
            return Err(Error::MalformedPartition);
        }
        Ok(Partition { parts })
    }

    /// Internal constructor for parts already known to be valid.
    pub(crate) fn from_valid(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p >= 1));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(n)`; the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(arm + 1, 1^leg)`.
    pub fn hook_shape(arm: usize, leg: usize) -> Self {
        let mut parts = vec![1; leg + 1];
        parts[0] = arm + 1;
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-indexed); 0 beyond the diagram.
    pub fn row_len(&self, r: usize) -> usize {
        if r >= 1 && r <= self.parts.len() {
            self.parts[r - 1]
        } else {
            0
        }
    }

    /// Length of column `c` (1-indexed): the number of rows with at least `c` cells.
    pub fn col_len(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row_len(c.row)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row_len(1);
        let parts = (1..=cols).map(|c| self.col_len(c)).collect();
        Partition::from_valid(parts)
    }

    /// Iterates over all cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |c| Cell::new(i + 1, c)))
    }

    /// Arm + leg + 1 for a cell of the diagram.
    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if !self.contains_cell(c) {
            return Err(Error::CellNotInDiagram(c));
        }
        let arm = self.row_len(c.row) - c.col;
        let leg = self.col_len(c.col) - c.row;
        Ok(arm + leg + 1)
    }

    /// All hook lengths, one per cell, sorted in decreasing order.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let mut hooks: Vec<usize> = self
            .cells()
            .map(|c| self.hook_length(c).expect("cell comes from the diagram"))
            .collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// Corner cells whose deletion leaves a partition, by ascending row.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.parts.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    /// Positions whose addition leaves a partition, by ascending row.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        for r in 1..=self.parts.len() {
            if r == 1 || self.row_len(r - 1) > self.row_len(r) {
                out.push(Cell::new(r, self.row_len(r) + 1));
            }
        }
        out.push(Cell::new(self.parts.len() + 1, 1));
        out
    }

    /// The partitions covered by `self`, in `removable_cells` order.
    pub fn down_set(&self) -> Vec<Partition> {
        self.removable_cells()
            .into_iter()
            .map(|c| {
                let mut parts = self.parts.clone();
                parts[c.row - 1] -= 1;
                if parts[c.row - 1] == 0 {
                    parts.pop();
                }
                Partition::from_valid(parts)
            })
            .collect()
    }

    /// The partitions covering `self`, in `addable_cells` order.
    pub fn up_set(&self) -> Vec<Partition> {
        self.addable_cells()
            .into_iter()
            .map(|c| {
                let mut parts = self.parts.clone();
                if c.row > parts.len() {
                    parts.push(1);
                } else {
                    parts[c.row - 1] += 1;
                }
                Partition::from_valid(parts)
            })
            .collect()
    }

    /// True iff the shape is `(n1 + 1, 1^n2)`. The empty partition is not a hook.
    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// Single row or single column, i.e. exactly one standard tableau.
    pub fn is_one_dimensional(&self) -> bool {
        self.parts.len() <= 1 || self.parts.iter().all(|&p| p == 1)
    }

    /// The border strip associated with cell `c`: the rim cells weakly
    /// southeast of `c`, i.e. `{(r, k) in diagram : r >= c.row, k >= c.col,
    /// (r+1, k+1) not in diagram}`. Its length equals the hook length of `c`
    /// and removing it leaves a partition.
    pub fn rim_hook_at(&self, c: Cell) -> Result<RimHook> {
        if !self.contains_cell(c) {
            return Err(Error::CellNotInDiagram(c));
        }
        let mut cells: Vec<Cell> = self
            .cells()
            .filter(|&x| {
                x.row >= c.row && x.col >= c.col && !self.contains_cell(Cell::new(x.row + 1, x.col + 1))
            })
            .collect();
        cells.sort_by_key(|x| x.content());
        debug_assert_eq!(cells.len(), self.hook_length(c)?);
        Ok(RimHook { cells })
    }

    /// All removable border strips of exactly `h` cells, in row-major order
    /// of their defining cell.
    pub fn rim_hooks_of_length(&self, h: usize) -> Vec<RimHook> {
        self.cells()
            .filter(|&c| self.hook_length(c) == Ok(h))
            .map(|c| self.rim_hook_at(c).expect("cell comes from the diagram"))
            .collect()
    }

    /// Removes a border strip, returning the smaller partition.
    pub fn remove_rim_hook(&self, rim: &RimHook) -> Result<Partition> {
        let mut parts = self.parts.clone();
        for c in rim.cells() {
            if !self.contains_cell(*c) {
                return Err(Error::CellNotInDiagram(*c));
            }
            parts[c.row - 1] -= 1;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).map_err(|_| {
            Error::Precondition("removing the given cells does not leave a partition".into())
        })
    }

    /// True iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&small, &big)| small <= big)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    let cap = limits::size_cap();
    if n > cap {
        return Err(Error::LimitExceeded { requested: n, cap });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn gen_partitions(n: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_valid(prefix.clone()));
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        prefix.push(part);
        gen_partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for Partition {
    /// Bracketed text form used by the CLI and JSON output: `[3,2,1]`, `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::ParsePartition(s.to_string()))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}
