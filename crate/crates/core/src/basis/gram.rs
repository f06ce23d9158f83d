use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::construct::Basis;
use super::id::BasisId;
use crate::ball::{inner_product, PiRational};
use crate::error::Result;
use crate::scalar::rational_to_string;

/// Pairwise inner products over an ordered list of ids.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub ids: Vec<BasisId>,
    pub entries: Vec<Vec<PiRational>>,
}

impl GramMatrix {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> &PiRational {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Off-diagonal pairs with a nonzero inner product, `i < j`.
    pub fn off_diagonal_nonzero(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                if !self.entries[i][j].is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal_nonzero().is_empty()
    }

    pub fn diagonal_positive(&self) -> bool {
        (0..self.len()).all(|i| self.entries[i][i].is_positive())
    }
}

impl Serialize for GramMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| rational_to_string(&e.coeff)).collect())
            .collect();
        let mut st = s.serialize_struct("GramMatrix", 2)?;
        st.serialize_field("ids", &self.ids)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl Basis {
    /// The Gram matrix of `ids`; entries are computed in parallel.
    pub fn gram(&self, ids: &[BasisId]) -> Result<GramMatrix> {
        let elements = ids.iter().map(|&id| self.element(id)).collect::<Result<Vec<_>>>()?;
        let pairs: Vec<(usize, usize)> = (0..ids.len()).flat_map(|i| (i..ids.len()).map(move |j| (i, j))).collect();
        let values: Vec<PiRational> =
            pairs.par_iter().map(|&(i, j)| inner_product(&elements[i], &elements[j])).collect();
        let mut entries = vec![vec![PiRational::zero(); ids.len()]; ids.len()];
        for ((i, j), v) in pairs.into_iter().zip(values) {
            entries[j][i] = v.clone();
            entries[i][j] = v;
        }
        Ok(GramMatrix { ids: ids.to_vec(), entries })
    }

    /// Inner products between every element of `left` and every element of `right`.
    pub fn cross_gram(&self, left: &[BasisId], right: &[BasisId]) -> Result<Vec<Vec<PiRational>>> {
        let a = left.iter().map(|&id| self.element(id)).collect::<Result<Vec<_>>>()?;
        let b = right.iter().map(|&id| self.element(id)).collect::<Result<Vec<_>>>()?;
        Ok(a.par_iter().map(|f| b.iter().map(|g| inner_product(f, g)).collect()).collect())
    }
}
