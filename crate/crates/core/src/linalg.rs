//! Linear systems over GF(2) with at most 32 unknowns.

use crate::word::Word;

/// Solution set `offset + span(basis)` of a linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpace {
    pub offset: Word,
    pub basis: Vec<Word>,
}

impl AffineSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Every point of the space, in Gray-code order.
    pub fn points(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(1 << self.basis.len());
        let mut cur = self.offset;
        out.push(cur);
        for step in 1u64..1 << self.basis.len() {
            cur ^= self.basis[step.trailing_zeros() as usize];
            out.push(cur);
        }
        out
    }
}

/// Rank of a set of row vectors.
pub fn rank(rows: &[u32]) -> usize {
    let mut rows = rows.to_vec();
    let mut r = 0;
    for col in 0..32 {
        let Some(p) = (r..rows.len()).find(|&k| rows[k] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r];
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
        r += 1;
    }
    r
}

/// Solves `rows[k] · x = rhs[k]` over `ncols` unknowns; `None` when inconsistent.
pub fn solve(rows: &[u32], rhs: &[bool], ncols: usize) -> Option<AffineSpace> {
    assert_eq!(rows.len(), rhs.len());
    assert!(ncols <= 32);
    // augmented rows: coefficients in the low 32 bits, right-hand side in bit 32
    let mut aug: Vec<u64> = rows
        .iter()
        .zip(rhs)
        .map(|(&r, &b)| r as u64 | (b as u64) << 32)
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..aug.len()).find(|&k| aug[k] >> col & 1 == 1) else {
            continue;
        };
        aug.swap(r, p);
        let pivot = aug[r];
        for (k, row) in aug.iter_mut().enumerate() {
            if k != r && *row >> col & 1 == 1 {
                *row ^= pivot;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if aug[r..].iter().any(|&row| row >> 32 & 1 == 1) {
        return None;
    }
    let mut offset = 0u32;
    for (k, &col) in pivots.iter().enumerate() {
        if aug[k] >> 32 & 1 == 1 {
            offset |= 1 << col;
        }
    }
    let basis = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = 1u32 << free;
            for (k, &col) in pivots.iter().enumerate() {
                if aug[k] >> free & 1 == 1 {
                    v |= 1 << col;
                }
            }
            Word(v)
        })
        .collect();
    Some(AffineSpace {
        offset: Word(offset),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn satisfies(rows: &[u32], rhs: &[bool], x: u32) -> bool {
        rows.iter()
            .zip(rhs)
            .all(|(&r, &b)| ((r & x).count_ones() & 1 == 1) == b)
    }

    #[test]
    fn solution_set_matches_enumeration() {
        let rows = [0b1111_0000u32, 0b1100_1100, 0b1010_1010, 0b1111_1111];
        for rhs_bits in 0..16u32 {
            let rhs: Vec<bool> = (0..4).map(|k| rhs_bits >> k & 1 == 1).collect();
            let brute: Vec<u32> = (0..256).filter(|&x| satisfies(&rows, &rhs, x)).collect();
            let mut got: Vec<u32> = solve(&rows, &rhs, 8)
                .map(|s| s.points().into_iter().map(|w| w.0).collect())
                .unwrap_or_default();
            got.sort_unstable();
            assert_eq!(got, brute);
        }
    }

    #[test]
    fn inconsistent_system() {
        assert!(solve(&[0b11, 0b11], &[false, true], 2).is_none());
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&[0b11, 0b01, 0b10]), 2);
        assert_eq!(rank(&[]), 0);
    }
}
