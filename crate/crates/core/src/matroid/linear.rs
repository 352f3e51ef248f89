//! Column matroids over small prime fields.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A matrix over GF(q) stored column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRep {
    q: u32,
    rows: usize,
    columns: Vec<Vec<u32>>,
}

pub const SUPPORTED_FIELDS: [u32; 4] = [2, 3, 5, 7];

impl LinearRep {
    pub fn new(q: u32, columns: Vec<Vec<u32>>) -> Result<LinearRep> {
        if !SUPPORTED_FIELDS.contains(&q) {
            return Err(Error::domain(format!(
                "field order {q} not supported (use one of 2, 3, 5, 7)"
            )));
        }
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::domain("columns have different lengths"));
        }
        let columns = columns
            .into_iter()
            .map(|c| c.into_iter().map(|x| x % q).collect())
            .collect();
        Ok(LinearRep { q, rows, columns })
    }

    pub fn field(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Rank of the selected columns by Gaussian elimination mod q.
    pub fn rank(&self, x: Subset) -> usize {
        let q = self.q;
        let mut m: Vec<Vec<u32>> = x.iter().map(|i| self.columns[i].clone()).collect();
        // m is a list of vectors; eliminate row by row
        let mut rank = 0;
        for row in 0..self.rows {
            let Some(p) = (rank..m.len()).find(|&j| m[j][row] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let inv = inverse(m[rank][row], q);
            for v in m[rank].iter_mut() {
                *v = *v * inv % q;
            }
            let pivot = m[rank].clone();
            for (j, col) in m.iter_mut().enumerate() {
                if j != rank && col[row] != 0 {
                    let f = col[row];
                    for (c, &pv) in col.iter_mut().zip(&pivot) {
                        *c = (*c + q * q - f * pv % q) % q;
                    }
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}

fn inverse(a: u32, q: u32) -> u32 {
    (1..q).find(|&b| a * b % q == 1).expect("nonzero element of a prime field")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_plane_rank() {
        // columns 1..7 in binary
        let cols = (1u32..8).map(|v| vec![v & 1, (v >> 1) & 1, (v >> 2) & 1]).collect();
        let f = LinearRep::new(2, cols).unwrap();
        assert_eq!(f.rank(Subset::full(7)), 3);
        // 1 + 2 = 3 over GF(2)
        assert_eq!(f.rank(Subset::from_indices([0, 1, 2])), 2);
        assert_eq!(f.rank(Subset::from_indices([0, 1, 3])), 3);
    }

    #[test]
    fn gf3_dependency() {
        let f = LinearRep::new(3, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(f.rank(Subset::from_indices([2, 3])), 2);
        assert_eq!(f.rank(Subset::full(4)), 2);
        assert!(LinearRep::new(4, vec![]).is_err());
    }
}
