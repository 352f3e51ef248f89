use crate::error::Result;
use crate::limits::{self, Limits};
use crate::subset::Subset;

use super::Matroid;

/// Ranks of all `2^n` subsets, indexed by bitmask.
#[derive(Debug, Clone)]
pub struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn new(m: &Matroid) -> Result<RankTable> {
        let n = m.len();
        limits::check("rank table ground set", n, Limits::get().subset_scan)?;
        let mut ranks = vec![0u8; 1 << n];
        for x in 1..(1u32 << n) {
            ranks[x as usize] = m.r(Subset(x)) as u8;
        }
        Ok(RankTable { n, ranks })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rank(&self, x: Subset) -> usize {
        self.ranks[x.0 as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.ranks[self.ranks.len() - 1] as usize
    }

    pub fn lambda(&self, x: Subset) -> usize {
        let full = Subset::full(self.n);
        self.rank(x) + self.rank(full - x) - self.full_rank()
    }

    /// `λ` of every subset, indexed by bitmask.
    pub fn lambdas(&self) -> Vec<u8> {
        let full = Subset::full(self.n).0;
        let r = self.full_rank() as u8;
        (0..=full)
            .map(|x| self.ranks[x as usize] + self.ranks[(full & !x) as usize] - r)
            .collect()
    }
}
