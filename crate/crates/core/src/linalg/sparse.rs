use std::collections::BTreeMap;

use super::Limits;
use crate::coeff::{FieldSpec, Scalar};
use crate::error::Result;

type SparseVec<K> = BTreeMap<K, Scalar>;

/// Incremental column elimination for matrices given column by column as
/// sparse vectors with arbitrary ordered row keys.
///
/// Each pushed column is reduced against the previously retained pivot
/// columns while its expression in terms of the original columns is
/// tracked. A column that reduces to zero yields the kernel vector with a 1
/// in its own position, zeros at every other dependent column and support
/// otherwise on earlier independent columns. That vector is unique, so it
/// coincides with the canonical RREF kernel vector of the assembled matrix.
#[derive(Debug)]
pub struct ColumnReducer<K: Ord + Clone> {
    field: FieldSpec,
    limits: Limits,
    entries: usize,
    ncols: usize,
    pivot_of: BTreeMap<K, usize>,
    // reduced column (leading entry 1) and its combination of original columns
    pivots: Vec<(SparseVec<K>, SparseVec<usize>)>,
    kernel: Vec<SparseVec<usize>>,
}

impl<K: Ord + Clone> ColumnReducer<K> {
    pub fn new(field: FieldSpec, limits: Limits) -> Self {
        ColumnReducer {
            field,
            limits,
            entries: 0,
            ncols: 0,
            pivot_of: BTreeMap::new(),
            pivots: Vec::new(),
            kernel: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Appends a column. Returns the kernel combination (sparse, keyed by
    /// column index) when the column depends on the earlier ones.
    pub fn push(&mut self, column: SparseVec<K>) -> Result<Option<&SparseVec<usize>>> {
        self.entries += column.len();
        self.limits.check(self.entries)?;
        let index = self.ncols;
        self.ncols += 1;

        let mut v = column;
        v.retain(|_, c| !c.is_zero());
        let mut comb = SparseVec::new();
        comb.insert(index, self.field.one());

        while let Some((lead, c)) = v.last_key_value() {
            match self.pivot_of.get(lead) {
                Some(&p) => {
                    let factor = -c;
                    let (pv, pc) = &self.pivots[p];
                    axpy(&mut v, &factor, pv);
                    axpy(&mut comb, &factor, pc);
                }
                None => {
                    let lead = lead.clone();
                    let inv = c.inv().expect("nonzero leading entry");
                    scale(&mut v, &inv);
                    scale(&mut comb, &inv);
                    self.pivot_of.insert(lead, self.pivots.len());
                    self.pivots.push((v, comb));
                    return Ok(None);
                }
            }
        }
        self.kernel.push(comb);
        Ok(self.kernel.last())
    }

    /// Canonical kernel basis as dense vectors over all columns pushed so
    /// far, ordered by their dependent column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        self.kernel
            .iter()
            .map(|comb| {
                let mut v = vec![self.field.zero(); self.ncols];
                for (&j, c) in comb {
                    v[j] = c.clone();
                }
                v
            })
            .collect()
    }
}

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, factor: &Scalar, source: &SparseVec<K>) {
    for (k, c) in source {
        let delta = factor * c;
        match target.get_mut(k) {
            Some(t) => {
                *t = &*t + &delta;
                if t.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(k.clone(), delta);
            }
        }
    }
}

fn scale<K: Ord>(v: &mut SparseVec<K>, factor: &Scalar) {
    for c in v.values_mut() {
        *c = &*c * factor;
    }
}
