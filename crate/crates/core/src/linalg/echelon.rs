//! Incremental sparse row echelon form.
//!
//! Rows are inserted one at a time and reduced against the rows already
//! present; a row that survives becomes a new pivot row, normalized so its
//! leading entry is 1. The pivot of a row is always its first nonzero column.
//! Reduced row echelon form is unique, so kernels and solutions read off it
//! do not depend on the order rows were inserted.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::field::Field;

/// A sparse vector: strictly increasing column indices, no stored zeros.
pub type SparseRow<E> = Vec<(usize, E)>;

pub struct Echelon<K: Field> {
    field: K,
    ncols: usize,
    /// Pivot rows; the first entry of each is `(pivot, 1)`.
    rows: Vec<SparseRow<K::Elem>>,
    pivot_of_col: Vec<Option<usize>>,
    scratch: Scratch<K::Elem>,
    reduced: bool,
}

struct Scratch<E> {
    values: Vec<Option<E>>,
    queued: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl<K: Field> Echelon<K> {
    pub fn new(field: K, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_of_col: vec![None; ncols],
            scratch: Scratch {
                values: vec![None; ncols],
                queued: vec![false; ncols],
                heap: BinaryHeap::new(),
            },
            reduced: true,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&c| self.pivot_of_col[c].is_some())
            .collect()
    }

    fn load(&mut self, row: &[(usize, K::Elem)]) {
        let s = &mut self.scratch;
        for (c, v) in row {
            if self.field.is_zero(v) {
                continue;
            }
            match &mut s.values[*c] {
                Some(old) => self.field.add_assign(old, v),
                slot @ None => *slot = Some(v.clone()),
            }
            if !s.queued[*c] {
                s.queued[*c] = true;
                s.heap.push(Reverse(*c));
            }
        }
    }

    /// `scratch -= factor * row`, skipping `row`'s leading entry (which the
    /// caller has already cancelled).
    fn axpy_tail(&mut self, factor: &K::Elem, row_index: usize) {
        let f = &self.field;
        let s = &mut self.scratch;
        let neg = f.neg(factor);
        for (c, v) in self.rows[row_index].iter().skip(1) {
            match &mut s.values[*c] {
                Some(old) => f.mul_add_assign(old, &neg, v),
                slot @ None => *slot = Some(f.mul(&neg, v)),
            }
            if !s.queued[*c] {
                s.queued[*c] = true;
                s.heap.push(Reverse(*c));
            }
        }
    }

    /// Drains the scratch buffer into a sparse row (ascending columns).
    fn drain(&mut self) -> SparseRow<K::Elem> {
        let s = &mut self.scratch;
        let mut out = Vec::with_capacity(s.heap.len());
        while let Some(Reverse(c)) = s.heap.pop() {
            s.queued[c] = false;
            if let Some(v) = s.values[c].take() {
                if !self.field.is_zero(&v) {
                    out.push((c, v));
                }
            }
        }
        out
    }

    /// Reduces `row` against the current pivot rows; returns the remainder.
    pub fn reduce(&mut self, row: &[(usize, K::Elem)]) -> SparseRow<K::Elem> {
        self.load(row);
        let mut leading: Option<(usize, K::Elem)> = None;
        while let Some(&Reverse(c)) = self.scratch.heap.peek() {
            let v = match &self.scratch.values[c] {
                Some(v) if !self.field.is_zero(v) => v.clone(),
                _ => {
                    self.scratch.heap.pop();
                    self.scratch.queued[c] = false;
                    self.scratch.values[c] = None;
                    continue;
                }
            };
            match self.pivot_of_col[c] {
                Some(r) => {
                    self.scratch.heap.pop();
                    self.scratch.queued[c] = false;
                    self.scratch.values[c] = None;
                    self.axpy_tail(&v, r);
                }
                None => {
                    leading = Some((c, v));
                    break;
                }
            }
        }
        match leading {
            // Columns after the leading one may still hit pivots; those are
            // left in place (echelon, not reduced). `reduced_form` clears them.
            Some(_) => self.drain(),
            None => Vec::new(),
        }
    }

    /// Inserts a row; returns the new pivot column, or `None` if the row was
    /// dependent on the rows already present.
    pub fn insert(&mut self, row: &[(usize, K::Elem)]) -> Option<usize> {
        let mut rem = self.reduce(row);
        if rem.is_empty() {
            return None;
        }
        let pivot = rem[0].0;
        let inv = self.field.inv(&rem[0].1).expect("nonzero leading entry");
        if !self.field.is_one(&inv) {
            for (_, v) in rem.iter_mut() {
                *v = self.field.mul(v, &inv);
            }
        }
        self.pivot_of_col[pivot] = Some(self.rows.len());
        self.rows.push(rem);
        self.reduced = false;
        Some(pivot)
    }

    /// Brings the stored rows to reduced row echelon form.
    pub fn reduce_fully(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| Reverse(self.rows[r].first().map(|e| e.0)));
        // Highest pivots first, so every row used for elimination is
        // already fully reduced.
        for r in order {
            let needs = self.rows[r]
                .iter()
                .skip(1)
                .any(|(c, _)| self.pivot_of_col[*c].is_some());
            if !needs {
                continue;
            }
            let row = std::mem::take(&mut self.rows[r]);
            let (pivot, one) = row[0].clone();
            self.load(&row[1..]);
            let mut kept = vec![(pivot, one)];
            while let Some(Reverse(c)) = self.scratch.heap.pop() {
                self.scratch.queued[c] = false;
                let v = match self.scratch.values[c].take() {
                    Some(v) if !self.field.is_zero(&v) => v,
                    _ => continue,
                };
                match self.pivot_of_col[c] {
                    Some(pr) => self.axpy_tail(&v, pr),
                    None => kept.push((c, v)),
                }
            }
            self.rows[r] = kept;
        }
        self.reduced = true;
    }

    /// Rows of the reduced row echelon form, sorted by pivot column.
    pub fn rref_rows(&mut self) -> Vec<&SparseRow<K::Elem>> {
        self.reduce_fully();
        (0..self.ncols)
            .filter_map(|c| self.pivot_of_col[c].map(|r| &self.rows[r]))
            .collect()
    }

    /// Canonical basis of the null space of the inserted rows: one vector per
    /// free column `f` (ascending), with a 1 at `f` and zeros at the other
    /// free columns.
    pub fn kernel_basis(&mut self) -> Vec<Vec<K::Elem>> {
        self.reduce_fully();
        let free: Vec<usize> = (0..self.ncols)
            .filter(|&c| self.pivot_of_col[c].is_none())
            .collect();
        let mut slot = vec![usize::MAX; self.ncols];
        let mut basis: Vec<Vec<K::Elem>> = Vec::with_capacity(free.len());
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
            let mut v = vec![self.field.zero(); self.ncols];
            v[f] = self.field.one();
            basis.push(v);
        }
        for row in &self.rows {
            let pivot = row[0].0;
            for (c, val) in row.iter().skip(1) {
                basis[slot[*c]][pivot] = self.field.neg(val);
            }
        }
        basis
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&mut self, row: &[(usize, K::Elem)]) -> bool {
        self.reduce(row).is_empty()
    }
}

pub fn to_sparse<K: Field>(field: &K, dense: &[K::Elem]) -> SparseRow<K::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !field.is_zero(v))
        .map(|(c, v)| (c, v.clone()))
        .collect()
}
