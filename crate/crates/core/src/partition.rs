//! The partition of odd-weight words into the codes `H_a = H_a^1`, one per field element,
//! and the structure of pairs of its classes at length 8.
//!
//! Classes are indexed by coordinate index: class `c` belongs to the field element at
//! coordinate `c`, so the class index and the coordinate `α^c` coincide.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::codes::{cosets, extended_hamming, intersect, sumset};
use crate::components::{component_labels, component_of, Adjacency};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::word::{Code, Word};

const UNASSIGNED: u8 = u8::MAX;

#[derive(Debug, Clone)]
pub struct Partition {
    field: Field,
    classes: Vec<Code>,
    even_classes: Vec<Code>,
    class_of: Vec<u8>,
}

/// Counts describing how far the family of classes is from a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCensus {
    pub classes: usize,
    pub class_sizes: Vec<usize>,
    pub odd_words: usize,
    pub covered: usize,
    /// Odd words lying in more than one class.
    pub overlapping: usize,
    /// Words of even weight found in some class.
    pub even_in_classes: usize,
    /// `size -> number of unordered pairs` for pairwise even-class intersections.
    pub intersection_sizes: BTreeMap<usize, usize>,
    pub expected_intersection: usize,
}

/// Builds `H_a^1` and `H_a^0` for every field element without checking the partition laws.
pub fn build_partition(field: &Field) -> Result<Partition> {
    let n = field.order();
    let mut classes = Vec::with_capacity(n);
    let mut even_classes = Vec::with_capacity(n);
    for c in 0..n {
        let a = field.element_at(c);
        classes.push(extended_hamming(field, a, 1)?);
        even_classes.push(extended_hamming(field, a, 0)?);
    }
    let mut class_of = vec![UNASSIGNED; 1 << n];
    for (c, code) in classes.iter().enumerate() {
        for w in code.iter() {
            let slot = &mut class_of[w.0 as usize];
            if *slot == UNASSIGNED {
                *slot = c as u8;
            }
        }
    }
    Ok(Partition {
        field: field.clone(),
        classes,
        even_classes,
        class_of,
    })
}

/// Builds the partition and checks that it really is one.
pub fn krotov_partition(field: &Field) -> Result<Partition> {
    let p = build_partition(field)?;
    p.validate()?;
    Ok(p)
}

impl Partition {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Word length `n = 2^m`, also the number of classes.
    pub fn n(&self) -> usize {
        self.field.order()
    }

    pub fn classes(&self) -> &[Code] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &Code {
        &self.classes[c]
    }

    pub fn even_class(&self, c: usize) -> &Code {
        &self.even_classes[c]
    }

    /// Index of the (first) class containing `w`.
    pub fn class_of(&self, w: Word) -> Option<usize> {
        match self.class_of.get(w.0 as usize) {
            Some(&c) if c != UNASSIGNED => Some(c as usize),
            _ => None,
        }
    }

    pub fn census(&self) -> PartitionCensus {
        let n = self.n();
        let m = self.field.m() as usize;
        let mut hits = vec![0u8; 1 << n];
        let mut even_in_classes = 0;
        for code in &self.classes {
            for w in code.iter() {
                hits[w.0 as usize] += 1;
                if w.weight() % 2 == 0 {
                    even_in_classes += 1;
                }
            }
        }
        let mut intersection_sizes = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                let size = self.even_classes[a]
                    .iter()
                    .filter(|&w| self.even_classes[b].contains(w))
                    .count();
                *intersection_sizes.entry(size).or_insert(0) += 1;
            }
        }
        PartitionCensus {
            classes: self.classes.len(),
            class_sizes: self.classes.iter().map(Code::size).collect(),
            odd_words: 1 << (n - 1),
            covered: hits.iter().filter(|&&h| h > 0).count(),
            overlapping: hits.iter().filter(|&&h| h > 1).count(),
            even_in_classes,
            intersection_sizes,
            expected_intersection: 1 << (n - 2 * m),
        }
    }

    pub fn validate(&self) -> Result<PartitionCensus> {
        let census = self.census();
        let n = self.n();
        let m = self.field.m() as usize;
        let class_size = 1usize << (n - m - 1);
        let mut problems = Vec::new();
        if census.classes != n {
            problems.push(format!("{} classes, expected {n}", census.classes));
        }
        if census.class_sizes.iter().any(|&s| s != class_size) {
            problems.push(format!(
                "class sizes {:?}, expected {class_size}",
                census.class_sizes
            ));
        }
        if census.even_in_classes > 0 {
            problems.push(format!(
                "{} even-weight words in classes",
                census.even_in_classes
            ));
        }
        if census.overlapping > 0 {
            problems.push(format!(
                "{} words in more than one class",
                census.overlapping
            ));
        }
        if census.covered != census.odd_words {
            problems.push(format!(
                "{} of {} odd words covered",
                census.covered, census.odd_words
            ));
        }
        if census
            .intersection_sizes
            .keys()
            .any(|&s| s != census.expected_intersection)
        {
            problems.push(format!(
                "even-class intersections {:?}, expected all {}",
                census.intersection_sizes, census.expected_intersection
            ));
        }
        if problems.is_empty() {
            Ok(census)
        } else {
            Err(Error::Invariant(format!(
                "m={}: {}",
                m,
                problems.join("; ")
            )))
        }
    }

    fn pair(&self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        for c in [i, j] {
            if c >= n {
                return Err(Error::Coordinate { coord: c, len: n });
            }
        }
        if i == j {
            Err(Error::SameCoordinates)
        } else {
            Ok(())
        }
    }

    fn require_length_8(&self) -> Result<()> {
        if self.field.m() == 3 {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "this check is specific to length 8, partition has length {}",
                self.n()
            )))
        }
    }
}

/// The two weight-4 words of `H̄_i ∩ H̄_j` at length 8 and the coordinate split they induce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiSplit {
    pub i: usize,
    pub j: usize,
    /// Support of `x0`; contains `i`.
    pub pi0: Vec<usize>,
    /// Support of `x1`; contains `j`.
    pub pi1: Vec<usize>,
    pub x0: Word,
    pub x1: Word,
}

fn list(words: impl IntoIterator<Item = Word>, n: usize) -> String {
    words
        .into_iter()
        .map(|w| w.to_bin(n))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn pi_split(p: &Partition, i: usize, j: usize) -> Result<PiSplit> {
    p.require_length_8()?;
    p.pair(i, j)?;
    let n = p.n();
    let inter = intersect(p.even_class(i), p.even_class(j))?;
    let quads: Vec<Word> = inter.iter().filter(|w| w.weight() == 4).collect();
    if inter.size() != 4
        || !inter.contains(Word::ZERO)
        || !inter.contains(Word::ones(n))
        || quads.len() != 2
    {
        return Err(Error::violation(
            format!("H̄{i} ∩ H̄{j} is {{0, 1, x0, x1}} with two weight-4 words"),
            list(inter.iter(), n),
        ));
    }
    if let Some(&bad) = quads.iter().find(|w| w.bit(i) && w.bit(j)) {
        return Err(Error::violation(
            format!("no weight-4 word of H̄{i} ∩ H̄{j} has ones at both {i} and {j}"),
            bad.to_bin(n),
        ));
    }
    let (x0, x1) = if quads[0].bit(i) {
        (quads[0], quads[1])
    } else {
        (quads[1], quads[0])
    };
    if x0 ^ x1 != Word::ones(n) || !x1.bit(j) {
        return Err(Error::violation(
            format!("the weight-4 words split the coordinates with {i} and {j} apart"),
            list([x0, x1], n),
        ));
    }
    Ok(PiSplit {
        i,
        j,
        pi0: x0.support().collect(),
        pi1: x1.support().collect(),
        x0,
        x1,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SumsetLeaders {
    pub split: PiSplit,
    /// Ascending by value.
    pub leaders: Vec<Word>,
}

/// Cosets of `H_i + H_j` by `H̄_i ∩ H̄_j`: each has exactly one weight-2 word, which is its
/// leader, and the leaders are exactly `{e_r + e_s : r ∈ Π0, s ∈ Π1}`.
pub fn verify_sumset_leaders(p: &Partition, i: usize, j: usize) -> Result<SumsetLeaders> {
    let split = pi_split(p, i, j)?;
    let n = p.n();
    let sub = intersect(p.even_class(i), p.even_class(j))?;
    let table = cosets(&sumset(p.class(i), p.class(j))?, &sub)?;
    if table.cosets.len() != 16 {
        return Err(Error::violation(
            format!("H{i} + H{j} splits into 16 cosets"),
            format!("{} cosets", table.cosets.len()),
        ));
    }
    for coset in &table.cosets {
        let twos: Vec<Word> = coset.words_of_weight(2).collect();
        if twos.len() != 1 || coset.leader != twos[0] {
            return Err(Error::violation(
                "every coset has a unique weight-2 word and it is the leader",
                list(coset.members.iter().copied(), n),
            ));
        }
    }
    let mut leaders = table.leaders();
    leaders.sort_unstable();
    let mut expected: Vec<Word> = split
        .pi0
        .iter()
        .flat_map(|&r| split.pi1.iter().map(move |&s| Word::from_support([r, s])))
        .collect();
    expected.sort_unstable();
    if leaders != expected {
        return Err(Error::violation(
            "coset leaders are the pair sums e_r + e_s with r in Π0, s in Π1",
            list(leaders.iter().copied(), n),
        ));
    }
    Ok(SumsetLeaders { split, leaders })
}

/// Every coset of `H̄_i` by `H̄_i ∩ H̄_j` has a representative of weight at most 4 inside
/// the `(i, j)`-component of zero in `H̄_i`. Returns one representative per coset.
pub fn verify_component_representatives(p: &Partition, i: usize, j: usize) -> Result<Vec<Word>> {
    p.require_length_8()?;
    p.pair(i, j)?;
    let n = p.n();
    let even = p.even_class(i);
    let sub = intersect(even, p.even_class(j))?;
    let table = cosets(even, &sub)?;
    let comp = component_of(even, Word::ZERO, Adjacency::Pair(i, j))?;
    let mut reps = Vec::with_capacity(table.cosets.len());
    for coset in &table.cosets {
        let inside: Vec<Word> = coset
            .members
            .iter()
            .copied()
            .filter(|&w| w.weight() <= 4 && comp.contains(w))
            .collect();
        let Some(&rep) = inside.iter().min_by_key(|w| w.leader_key()) else {
            return Err(Error::violation(
                format!("coset has a weight <= 4 representative in the ({i},{j})-component of 0"),
                list(coset.members.iter().copied(), n),
            ));
        };
        let through_both = inside
            .iter()
            .filter(|w| w.weight() == 4 && w.bit(i) && w.bit(j))
            .count();
        if through_both > 1 {
            return Err(Error::violation(
                format!("a coset holds at most one such weight-4 word through {i} and {j}"),
                list(inside, n),
            ));
        }
        reps.push(rep);
    }
    if reps.first() != Some(&Word::ZERO) {
        return Err(Error::violation(
            "the subcode itself is represented by 0",
            list(reps, n),
        ));
    }
    Ok(reps)
}

/// Distance-2 graph between two classes.
#[derive(Debug, Clone)]
pub struct CrossGraph {
    pub k: usize,
    pub l: usize,
    /// Words of class `k` first, then words of class `l`.
    pub vertices: Vec<Word>,
    pub split: usize,
    pub adjacency: Vec<Vec<usize>>,
}

impl CrossGraph {
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.vertices.len()
    }

    /// Every edge joins the two classes and the classes share no vertex.
    pub fn is_bipartite_between_classes(&self) -> bool {
        let (left, right) = self.vertices.split_at(self.split);
        left.iter().all(|w| !right.contains(w))
            && self
                .adjacency
                .iter()
                .enumerate()
                .all(|(v, nbrs)| nbrs.iter().all(|&u| (v < self.split) != (u < self.split)))
    }
}

pub fn cross_graph(p: &Partition, k: usize, l: usize) -> Result<CrossGraph> {
    p.pair(k, l)?;
    let vertices: Vec<Word> = p.class(k).iter().chain(p.class(l).iter()).collect();
    let split = p.class(k).size();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for a in 0..split {
        for b in split..vertices.len() {
            if vertices[a].distance(vertices[b]) == 2 {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
    }
    Ok(CrossGraph {
        k,
        l,
        vertices,
        split,
        adjacency,
    })
}

/// For `X ≠ X'` in `H_k`, at distance 4 and in one `(r, s)`-component, the translates by
/// `e_r + e_s` land in different classes. Returns the number of pairs checked.
pub fn verify_translated_classes(p: &Partition, k: usize, r: usize, s: usize) -> Result<usize> {
    p.require_length_8()?;
    p.pair(r, s)?;
    if k >= p.n() {
        return Err(Error::Coordinate {
            coord: k,
            len: p.n(),
        });
    }
    let n = p.n();
    let code = p.class(k);
    let labels = component_labels(code, Adjacency::Pair(r, s))?;
    let shift = Word::from_support([r, s]);
    let words = code.words();
    let mut checked = 0;
    for a in 0..words.len() {
        for b in a + 1..words.len() {
            if words[a].distance(words[b]) != 4 || labels[a] != labels[b] {
                continue;
            }
            checked += 1;
            let (ca, cb) = (p.class_of(words[a] ^ shift), p.class_of(words[b] ^ shift));
            if ca.is_none() || ca == cb {
                return Err(Error::violation(
                    format!("translates by e_{r} + e_{s} of a component pair of H{k} lie in different classes"),
                    list([words[a], words[b]], n),
                ));
            }
        }
    }
    Ok(checked)
}
