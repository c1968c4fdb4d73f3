//! Product codes `D = ∪_l C_l × C_π(l)` over a partition `{C_l}` of the odd-weight words.
//!
//! A product word is `(X, Y)` with `X` in coordinates `0..n` and `Y` in `n..2n`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codes::{is_extended_perfect, SWEEP_MAX_LEN};
use crate::components::{component_labels, Adjacency};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::{check_coord, Code, Word};

/// A permutation of the class indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(map: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if v >= map.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Permutation(format!("{map:?} is not a bijection")));
            }
        }
        Ok(Perm(map))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn reversal(n: usize) -> Perm {
        Perm((0..n).rev().collect())
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Perm {
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(rng);
        Perm(map)
    }

    /// One draw from a ChaCha8 stream seeded by `seed`.
    pub fn seeded(n: usize, seed: u64) -> Perm {
        Perm::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Parses images of `0..n` separated by whitespace, or `identity` / `reversal` of length 8.
    pub fn parse(s: &str) -> Result<Perm> {
        match s.trim() {
            "identity" => return Ok(Perm::identity(8)),
            "reversal" => return Ok(Perm::reversal(8)),
            _ => {}
        }
        let map = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Permutation(format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::new(map)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Perm(inv)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Identity, reversal, then `samples` permutations drawn from a ChaCha8 stream seeded by `seed`.
pub fn perm_sample(n: usize, samples: usize, seed: u64) -> Vec<Perm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Perm::identity(n), Perm::reversal(n)];
    out.extend((0..samples).map(|_| Perm::random(n, &mut rng)));
    out
}

/// All `n!` permutations in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Perm(cur.clone())];
    loop {
        let Some(k) = (0..n.saturating_sub(1))
            .rev()
            .find(|&k| cur[k] < cur[k + 1])
        else {
            return out;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).expect("exists");
        cur.swap(k, l);
        cur[k + 1..].reverse();
        out.push(Perm(cur.clone()));
    }
}

#[derive(Debug, Clone)]
pub struct ProductCode<'p> {
    partition: &'p Partition,
    perm: Perm,
    code: Code,
}

impl<'p> ProductCode<'p> {
    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn partition(&self) -> &'p Partition {
        self.partition
    }

    /// Length of each half.
    pub fn half(&self) -> usize {
        self.partition.n()
    }

    /// The class `l` with `w ∈ C_l × C_π(l)`.
    pub fn block_of(&self, w: Word) -> Option<usize> {
        let (x, y) = w.halves(self.half());
        let l = self.partition.class_of(x)?;
        (self.partition.class_of(y) == Some(self.perm.apply(l))).then_some(l)
    }
}

/// Builds `∪_l C_l × C_π(l)` and checks size, block structure and extended perfectness.
pub fn product_code(partition: &Partition, perm: Perm) -> Result<ProductCode<'_>> {
    let n = partition.n();
    if perm.len() != n {
        return Err(Error::Permutation(format!(
            "permutation has {} entries, partition has {n} classes",
            perm.len()
        )));
    }
    if 2 * n > SWEEP_MAX_LEN {
        return Err(Error::Length(2 * n, SWEEP_MAX_LEN));
    }
    let mut words = Vec::new();
    for l in 0..n {
        let right = partition.class(perm.apply(l));
        for x in partition.class(l).iter() {
            words.extend(right.iter().map(|y| Word::concat(x, y, n)));
        }
    }
    let code = Code::new(2 * n, words, format!("D[{perm}]"))?;
    let pc = ProductCode {
        partition,
        perm,
        code,
    };
    let class_size = partition.class(0).size();
    if pc.code.size() != n * class_size * class_size {
        return Err(Error::Invariant(format!(
            "product has {} words, expected {}",
            pc.code.size(),
            n * class_size * class_size
        )));
    }
    if let Some(w) = pc.code.iter().find(|&w| pc.block_of(w).is_none()) {
        return Err(Error::Invariant(format!(
            "{} lies in no block",
            w.to_bin(2 * n)
        )));
    }
    if !is_extended_perfect(&pc.code)? {
        return Err(Error::Invariant(
            "product code is not extended perfect".into(),
        ));
    }
    Ok(pc)
}

/// Codewords at distance 4 from `x` that differ from it in both `i` and `j`.
pub fn n_ij(code: &Code, x: Word, i: usize, j: usize) -> Result<Vec<Word>> {
    let n = code.length();
    check_coord(i, n)?;
    check_coord(j, n)?;
    if i == j {
        return Err(Error::SameCoordinates);
    }
    if !code.contains(x) {
        return Err(Error::NotMember(x.to_bin(n)));
    }
    Ok(Adjacency::Pair(i, j).neighbors(code, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WordSampling {
    Exhaustive,
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodSummary {
    pub words: usize,
    pub pairs: usize,
    pub comparisons: usize,
    /// Distinct sizes seen for the same-block part.
    pub same_block_sizes: Vec<usize>,
    /// Distinct sizes seen for the cross-block part.
    pub cross_sizes: Vec<usize>,
    pub containment_checks: usize,
}

/// Neighbours of `x` inside a code of the partition, by direct scan.
fn scan_pair_neighbors(code: &Code, x: Word, i: usize, j: usize) -> Vec<Word> {
    code.iter()
        .filter(|&z| z.distance(x) == 4 && z.bit(i) != x.bit(i) && z.bit(j) != x.bit(j))
        .collect()
}

/// Checks, for every homogeneous pair `(i, j)` and each sampled `(X, Y) ∈ C_k × C_π(k)`,
///
/// `N_ij(D, (X,Y)) = N_ij(C_k, X) × {Y} ∪ {(X + e_i + e_j, Z) : Z ∈ C_π(l), d(Z, Y) = 2}`
///
/// where `X + e_i + e_j ∈ C_l`, plus the mirrored law for pairs in the right half (halves
/// swapped, `π` replaced by its inverse). Also checks that the `(i, j)`-component of `X` in
/// its class, times `{Y}`, stays inside the component of `(X, Y)` in `D`.
pub fn verify_neighborhood_formula(
    pc: &ProductCode<'_>,
    sampling: WordSampling,
) -> Result<NeighborhoodSummary> {
    let n = pc.half();
    let p = pc.partition();
    let code = pc.code();
    let inverse = pc.perm().inverse();
    let samples: Vec<Word> = match sampling {
        WordSampling::Exhaustive => code.words().to_vec(),
        WordSampling::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| code.words()[rng.gen_range(0..code.size())])
                .collect()
        }
    };
    let mut pairs = Vec::new();
    for base in [0, n] {
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((base + i, base + j));
            }
        }
    }
    let mut same_sizes = std::collections::BTreeSet::new();
    let mut cross_sizes = std::collections::BTreeSet::new();
    let mut comparisons = 0;
    let mut containment_checks = 0;
    for &(i, j) in &pairs {
        let right = i >= n;
        let (ci, cj) = if right { (i - n, j - n) } else { (i, j) };
        let shift = Word::from_support([ci, cj]);
        let d_labels = component_labels(code, Adjacency::Pair(i, j))?;
        let class_labels: Vec<Vec<u32>> = p
            .classes()
            .iter()
            .map(|c| component_labels(c, Adjacency::Pair(ci, cj)))
            .collect::<Result<_>>()?;
        for &w in &samples {
            let (x, y) = w.halves(n);
            // `own` is the half containing (i, j), `other` the untouched half
            let (own, other) = if right { (y, x) } else { (x, y) };
            let join = |own_part: Word, other_part: Word| {
                if right {
                    Word::concat(other_part, own_part, n)
                } else {
                    Word::concat(own_part, other_part, n)
                }
            };
            let k = p
                .class_of(own)
                .ok_or_else(|| Error::NotMember(own.to_bin(n)))?;
            let l = p
                .class_of(own ^ shift)
                .ok_or_else(|| Error::NotMember((own ^ shift).to_bin(n)))?;
            let partner = if right {
                inverse.apply(l)
            } else {
                pc.perm().apply(l)
            };
            let same: Vec<Word> = scan_pair_neighbors(p.class(k), own, ci, cj)
                .into_iter()
                .map(|z| join(z, other))
                .collect();
            let cross: Vec<Word> = p
                .class(partner)
                .iter()
                .filter(|z| z.distance(other) == 2)
                .map(|z| join(own ^ shift, z))
                .collect();
            same_sizes.insert(same.len());
            cross_sizes.insert(cross.len());
            let mut rhs: Vec<Word> = same.iter().chain(&cross).copied().collect();
            rhs.sort_unstable();
            let lhs = n_ij(code, w, i, j)?;
            comparisons += 1;
            if lhs != rhs || cross.len() != n / 2 || rhs.len() != same.len() + n / 2 {
                return Err(Error::violation(
                    format!("N_{i},{j}(D, w) splits into same-block and cross-block neighbours"),
                    format!(
                        "w={} lhs=[{}] rhs=[{}]",
                        w.to_bin(2 * n),
                        lhs.iter()
                            .map(|v| v.to_bin(2 * n))
                            .collect::<Vec<_>>()
                            .join(" "),
                        rhs.iter()
                            .map(|v| v.to_bin(2 * n))
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                ));
            }
            let class = p.class(k);
            let own_idx = class.index_of(own).expect("member");
            let w_label = d_labels[code.index_of(w).expect("member")];
            for (t, z) in class.iter().enumerate() {
                if class_labels[k][t] != class_labels[k][own_idx] {
                    continue;
                }
                containment_checks += 1;
                let lifted = join(z, other);
                if d_labels[code.index_of(lifted).expect("product member")] != w_label {
                    return Err(Error::violation(
                        format!("the ({ci},{cj})-component in the block lifts into the ({i},{j})-component of D"),
                        format!("w={} z={}", w.to_bin(2 * n), lifted.to_bin(2 * n)),
                    ));
                }
            }
        }
    }
    Ok(NeighborhoodSummary {
        words: samples.len(),
        pairs: pairs.len(),
        comparisons,
        same_block_sizes: same_sizes.into_iter().collect(),
        cross_sizes: cross_sizes.into_iter().collect(),
        containment_checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::min_distance;
    use crate::gf::make_field;
    use crate::partition::krotov_partition;

    #[test]
    fn perm_validation() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3, 1]).is_err());
        let p = Perm::parse("2 0 1").unwrap();
        assert_eq!(p.inverse().as_slice(), &[1, 2, 0]);
        assert_eq!(p.to_string(), "2 0 1");
        assert!(Perm::parse("2 x 1").is_err());
    }

    #[test]
    fn sample_is_reproducible() {
        let a = perm_sample(8, 5, 1);
        assert_eq!(a, perm_sample(8, 5, 1));
        assert_eq!(a[0], Perm::identity(8));
        assert_eq!(a[1], Perm::reversal(8));
        assert_eq!(a.len(), 7);
    }

    #[test]
    fn all_perms_count() {
        let perms = all_perms(5);
        assert_eq!(perms.len(), 120);
        let set: std::collections::HashSet<_> = perms.iter().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn identity_product() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let pc = product_code(&p, Perm::identity(8)).unwrap();
        assert_eq!(pc.code().size(), 2048);
        assert_eq!(pc.code().length(), 16);
        assert!(pc.code().iter().all(|w| w.weight() % 2 == 0));
        assert_eq!(min_distance(pc.code()).unwrap(), 4);
        let mut blocks = [0usize; 8];
        for w in pc.code().iter() {
            blocks[pc.block_of(w).unwrap()] += 1;
        }
        assert_eq!(blocks, [256; 8]);
        assert!(matches!(
            product_code(&p, Perm::identity(7)),
            Err(Error::Permutation(_))
        ));
    }

    #[test]
    fn neighborhoods_are_symmetric() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let pc = product_code(&p, Perm::reversal(8)).unwrap();
        let code = pc.code();
        for &x in code.words().iter().step_by(97) {
            for z in n_ij(code, x, 1, 5).unwrap() {
                assert_ne!(z, x);
                assert!(n_ij(code, z, 1, 5).unwrap().contains(&x));
            }
        }
        assert!(matches!(
            n_ij(code, Word(1), 1, 5),
            Err(Error::NotMember(_))
        ));
        assert!(matches!(
            n_ij(code, code.words()[0], 3, 3),
            Err(Error::SameCoordinates)
        ));
    }

    #[test]
    fn neighborhood_formula_sampled() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let pc = product_code(&p, perm_sample(8, 1, 9).pop().unwrap()).unwrap();
        let s =
            verify_neighborhood_formula(&pc, WordSampling::Random { count: 20, seed: 3 }).unwrap();
        assert_eq!(s.pairs, 56);
        assert_eq!(s.same_block_sizes, vec![3]);
        assert_eq!(s.cross_sizes, vec![4]);
    }
}
