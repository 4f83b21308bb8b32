//! Sparse row echelon forms over `F_p`.
//!
//! Rows are sorted `(column, value)` lists. Reduction uses a dense scratch
//! vector together with a min-heap of touched columns, so each reduction
//! costs time proportional to the fill it creates rather than to the width.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::field::PrimeField;

pub type SparseRow = Vec<(u32, u32)>;

/// Row echelon form: every stored row starts with its pivot, normalized to 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<u32>,
    scratch: Vec<u32>,
    queued: Vec<bool>,
}

const NONE: u32 = u32::MAX;

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NONE; ncols],
            scratch: vec![0; ncols],
            queued: vec![false; ncols],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn has_pivot(&self, col: u32) -> bool {
        self.pivot_row[col as usize] != NONE
    }

    /// Row with the given pivot column, if any.
    pub fn row_with_pivot(&self, col: u32) -> Option<&SparseRow> {
        match self.pivot_row[col as usize] {
            NONE => None,
            i => Some(&self.rows[i as usize]),
        }
    }

    /// Reduces `row` against the stored rows.
    ///
    /// With `full = false` reduction stops at the first column that has no
    /// pivot, which is enough to decide membership and to extend the echelon
    /// form. With `full = true` every pivot column is cleared.
    pub fn reduce(&mut self, row: &[(u32, u32)], full: bool) -> SparseRow {
        let f = self.field;
        let mut heap: BinaryHeap<Reverse<u32>> = BinaryHeap::with_capacity(row.len() * 2);
        for &(c, v) in row {
            let s = &mut self.scratch[c as usize];
            *s = f.add(*s, v);
            if !self.queued[c as usize] {
                self.queued[c as usize] = true;
                heap.push(Reverse(c));
            }
        }
        let mut out = SparseRow::new();
        let mut reducing = true;
        while let Some(Reverse(c)) = heap.pop() {
            let ci = c as usize;
            self.queued[ci] = false;
            let v = std::mem::take(&mut self.scratch[ci]);
            if v == 0 {
                continue;
            }
            let pr = self.pivot_row[ci];
            if reducing && pr != NONE {
                let factor = f.neg(v);
                let prow = &self.rows[pr as usize];
                for &(cc, w) in &prow[1..] {
                    let s = &mut self.scratch[cc as usize];
                    *s = f.add(*s, f.mul(factor, w));
                    if !self.queued[cc as usize] {
                        self.queued[cc as usize] = true;
                        heap.push(Reverse(cc));
                    }
                }
            } else {
                out.push((c, v));
                if !full {
                    reducing = false;
                }
            }
        }
        out
    }

    /// Same result as `reduce(row, true)` without touching the scratch
    /// buffers, for shared access.
    pub fn reduce_shared(&self, row: &[(u32, u32)]) -> SparseRow {
        let f = self.field;
        let mut acc: BTreeMap<u32, u32> = row.iter().copied().collect();
        let mut out = SparseRow::new();
        while let Some((c, v)) = acc.pop_first() {
            if v == 0 {
                continue;
            }
            match self.pivot_row[c as usize] {
                NONE => out.push((c, v)),
                pr => {
                    let factor = f.neg(v);
                    for &(cc, w) in &self.rows[pr as usize][1..] {
                        let e = acc.entry(cc).or_insert(0);
                        *e = f.add(*e, f.mul(factor, w));
                    }
                }
            }
        }
        out
    }

    /// Inserts a row; returns its pivot column when the rank grows.
    pub fn insert(&mut self, row: &[(u32, u32)]) -> Option<u32> {
        let mut r = self.reduce(row, false);
        if r.is_empty() {
            return None;
        }
        let inv = self.field.inv(r[0].1);
        for e in r.iter_mut() {
            e.1 = self.field.mul(e.1, inv);
        }
        let pivot = r[0].0;
        self.pivot_row[pivot as usize] = self.rows.len() as u32;
        self.rows.push(r);
        Some(pivot)
    }

    /// True iff `row` lies in the row space.
    pub fn contains(&mut self, row: &[(u32, u32)]) -> bool {
        self.reduce(row, false).is_empty()
    }

    /// Back-substitutes so every pivot column is zero outside its own row,
    /// then sorts rows by pivot.
    pub fn into_reduced(mut self) -> Echelon {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| Reverse(self.rows[i][0].0));
        // rows with larger pivots are finished first, so each tail reduction
        // only meets rows that are already reduced
        for i in order {
            let row = std::mem::take(&mut self.rows[i]);
            let pivot = row[0];
            let tail = self.reduce(&row[1..], true);
            let mut r = Vec::with_capacity(tail.len() + 1);
            r.push(pivot);
            r.extend(tail);
            self.rows[i] = r;
        }
        self.rows.sort_by_key(|r| r[0].0);
        for (i, r) in self.rows.iter().enumerate() {
            self.pivot_row[r[0].0 as usize] = i as u32;
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(row: &SparseRow, n: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        for &(c, x) in row {
            v[c as usize] = x;
        }
        v
    }

    #[test]
    fn rank_and_membership() {
        let f = PrimeField::new(7).unwrap();
        let mut e = Echelon::new(f, 4);
        assert_eq!(e.insert(&[(0, 1), (1, 2)]), Some(0));
        assert_eq!(e.insert(&[(0, 2), (1, 4)]), None);
        assert_eq!(e.insert(&[(1, 1), (3, 1)]), Some(1));
        assert!(e.contains(&[(0, 1), (1, 3), (3, 1)]));
        assert!(!e.contains(&[(2, 1)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn reduced_form_clears_pivot_columns() {
        let f = PrimeField::new(11).unwrap();
        let mut e = Echelon::new(f, 3);
        e.insert(&[(0, 1), (1, 1), (2, 1)]);
        e.insert(&[(1, 1), (2, 3)]);
        let e = e.into_reduced();
        assert_eq!(dense(&e.rows()[0], 3), vec![1, 0, f.neg(2)]);
        assert_eq!(dense(&e.rows()[1], 3), vec![0, 1, 3]);
    }

    #[test]
    fn full_reduction_leaves_only_free_columns() {
        let f = PrimeField::new(13).unwrap();
        let mut e = Echelon::new(f, 4);
        e.insert(&[(1, 1), (3, 5)]);
        let r = e.reduce(&[(0, 2), (1, 3), (2, 1)], true);
        assert_eq!(r, vec![(0, 2), (2, 1), (3, f.neg(15 % 13))]);
    }
}
