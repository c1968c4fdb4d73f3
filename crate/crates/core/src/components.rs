//! Components of codes under `ij`-adjacency (extended codes: distance 4, both `i` and `j`
//! flipped) and `i`-adjacency (perfect codes: distance 3, `i` flipped), with switching.

use std::collections::{BTreeMap, VecDeque};

use bitvec::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{
    covering_radius, distance_map, hamming_code, is_extended_perfect, is_perfect, SWEEP_MAX_LEN,
};
use crate::error::{Error, Result};
use crate::gf::make_field;
use crate::partition::Partition;
use crate::product::{product_code, Perm};
use crate::word::{check_coord, check_len, Code, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Adjacency {
    /// Distance 4, differing in both coordinates.
    Pair(usize, usize),
    /// Distance 3, differing in the coordinate.
    Single(usize),
}

impl Adjacency {
    fn validate(self, n: usize) -> Result<()> {
        match self {
            Adjacency::Pair(i, j) => {
                check_coord(i, n)?;
                check_coord(j, n)?;
                if i == j {
                    return Err(Error::SameCoordinates);
                }
            }
            Adjacency::Single(i) => check_coord(i, n)?,
        }
        Ok(())
    }

    /// The word switching a component is translated by.
    pub fn shift(self) -> Word {
        match self {
            Adjacency::Pair(i, j) => Word::from_support([i, j]),
            Adjacency::Single(i) => Word::unit(i),
        }
    }

    fn fixed(self, c: usize) -> bool {
        match self {
            Adjacency::Pair(i, j) => c == i || c == j,
            Adjacency::Single(i) => c == i,
        }
    }

    fn for_each_candidate(self, x: Word, n: usize, mut f: impl FnMut(Word)) {
        let base = x ^ self.shift();
        for a in (0..n).filter(|&a| !self.fixed(a)) {
            let once = base.flip(a);
            for b in (a + 1..n).filter(|&b| !self.fixed(b)) {
                f(once.flip(b));
            }
        }
    }

    /// Codewords adjacent to `x`, ascending.
    pub fn neighbors(self, code: &Code, x: Word) -> Vec<Word> {
        let mut out = Vec::new();
        self.for_each_candidate(x, code.length(), |z| {
            if code.contains(z) {
                out.push(z);
            }
        });
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub adjacency: Adjacency,
    pub seed: Word,
    /// Ascending.
    pub words: Vec<Word>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: Word) -> bool {
        self.words.binary_search(&w).is_ok()
    }
}

/// BFS closure of `seed` under `adjacency`.
pub fn component_of(code: &Code, seed: Word, adjacency: Adjacency) -> Result<Component> {
    let n = code.length();
    adjacency.validate(n)?;
    if !code.contains(seed) {
        return Err(Error::NotMember(seed.to_bin(n)));
    }
    let mut seen = bitvec![0; code.size()];
    let mut queue = VecDeque::from([seed]);
    seen.set(code.index_of(seed).expect("member"), true);
    let mut words = vec![seed];
    while let Some(x) = queue.pop_front() {
        adjacency.for_each_candidate(x, n, |z| {
            if let Some(k) = code.contains(z).then(|| code.index_of(z)).flatten() {
                if !seen[k] {
                    seen.set(k, true);
                    words.push(z);
                    queue.push_back(z);
                }
            }
        });
    }
    words.sort_unstable();
    Ok(Component {
        adjacency,
        seed,
        words,
    })
}

/// The `ij`-component `R_ij(code, seed)`.
pub fn component(code: &Code, seed: Word, i: usize, j: usize) -> Result<Component> {
    component_of(code, seed, Adjacency::Pair(i, j))
}

/// The `i`-component of `seed` in a perfect code.
pub fn i_component(code: &Code, seed: Word, i: usize) -> Result<Component> {
    component_of(code, seed, Adjacency::Single(i))
}

/// Component label of every codeword (indexed like `code.words()`), numbered in order of
/// the smallest word of each component.
pub fn component_labels(code: &Code, adjacency: Adjacency) -> Result<Vec<u32>> {
    let n = code.length();
    adjacency.validate(n)?;
    let mut labels = vec![u32::MAX; code.size()];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for start in 0..code.size() {
        if labels[start] != u32::MAX {
            continue;
        }
        labels[start] = next;
        queue.push_back(code.words()[start]);
        while let Some(x) = queue.pop_front() {
            adjacency.for_each_candidate(x, n, |z| {
                if code.contains(z) {
                    let k = code.index_of(z).expect("member");
                    if labels[k] == u32::MAX {
                        labels[k] = next;
                        queue.push_back(z);
                    }
                }
            });
        }
        next += 1;
    }
    Ok(labels)
}

fn label_sizes(labels: &[u32]) -> Vec<usize> {
    let count = labels.iter().max().map_or(0, |&m| m as usize + 1);
    let mut sizes = vec![0; count];
    for &l in labels {
        sizes[l as usize] += 1;
    }
    sizes
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub adjacency: Adjacency,
    /// Descending.
    pub sizes: Vec<usize>,
    pub total: usize,
}

pub fn census_with(code: &Code, adjacency: Adjacency) -> Result<Census> {
    let mut sizes = label_sizes(&component_labels(code, adjacency)?);
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Census {
        adjacency,
        sizes,
        total: code.size(),
    })
}

pub fn census(code: &Code, i: usize, j: usize) -> Result<Census> {
    census_with(code, Adjacency::Pair(i, j))
}

/// `(C \ K) ∪ (K + shift)` where `K` is a component of `C`.
pub fn switch(code: &Code, k: &Component) -> Result<Code> {
    let n = code.length();
    let Some(&first) = k.words.first() else {
        return Err(Error::NotComponent("empty".into()));
    };
    if !code.contains(first) {
        return Err(Error::NotComponent(first.to_bin(n)));
    }
    let closure = component_of(code, first, k.adjacency)?;
    if closure.words != k.words {
        return Err(Error::NotComponent(format!(
            "closure of {} has {} words, given {}",
            first.to_bin(n),
            closure.size(),
            k.size()
        )));
    }
    Ok(switch_unchecked(code, &k.words, k.adjacency.shift()))
}

fn switch_unchecked(code: &Code, k: &[Word], shift: Word) -> Code {
    let words = code
        .iter()
        .filter(|w| k.binary_search(w).is_err())
        .chain(k.iter().map(|&w| w ^ shift));
    Code::new(code.length(), words, format!("{}~", code.label())).expect("same length")
}

/// Radius-1 cover of a set, as a bitmap over `F_2^n`.
fn ball_cover(set: impl IntoIterator<Item = Word>, n: usize) -> BitVec {
    let mut cover = bitvec![0; 1 << n];
    for w in set {
        cover.set(w.0 as usize, true);
        for a in 0..n {
            cover.set(w.flip(a).0 as usize, true);
        }
    }
    cover
}

/// `true` iff `K` and `K + e_i` cover the same vectors with radius-1 balls.
pub fn is_i_component(k: &[Word], i: usize, n: usize) -> Result<bool> {
    check_len(n)?;
    if n > SWEEP_MAX_LEN {
        return Err(Error::Length(n, SWEEP_MAX_LEN));
    }
    check_coord(i, n)?;
    if k.is_empty() {
        return Err(Error::Empty);
    }
    let e = Word::unit(i);
    Ok(ball_cover(k.iter().copied(), n) == ball_cover(k.iter().map(|&w| w ^ e), n))
}

/// `{(x, |x| mod 2, x)}` for `x` of length `(n − 1) / 2`; the parity sits at coordinate `(n − 1) / 2`.
pub fn minimal_component(n: usize) -> Result<Vec<Word>> {
    if n.is_multiple_of(2) || !(3..=15).contains(&n) {
        return Err(Error::InadmissibleLength {
            len: n,
            form: "odd length 3..=15",
        });
    }
    let h = (n - 1) / 2;
    Ok((0u32..1 << h)
        .map(|x| Word(x | (x.count_ones() & 1) << h | x << (h + 1)))
        .collect())
}

/// The translate of [`minimal_component`] by `(0…0, 0, 1…1)`: every word has weight
/// `(n − 1) / 2` or `(n + 1) / 2`.
pub fn balanced_minimal_component(n: usize) -> Result<Vec<Word>> {
    let words = minimal_component(n)?;
    let h = (n - 1) / 2;
    let shift = Word(crate::word::mask(h) << (h + 1));
    Ok(words.into_iter().map(|w| w ^ shift).collect())
}

pub(crate) fn is_i_even(w: Word, i: usize) -> bool {
    (w.weight() + w.bit(i) as u32).is_multiple_of(2)
}

/// `(I, I')`: the `i`-even words (odd weight through `i`, or even weight avoiding `i`) and the rest.
pub fn i_even_split(code: &Code, i: usize) -> Result<(Code, Code)> {
    let n = code.length();
    check_coord(i, n)?;
    let (even, odd): (Vec<Word>, Vec<Word>) = code.iter().partition(|&w| is_i_even(w, i));
    Ok((
        Code::new(n, even, format!("I{i}"))?,
        Code::new(n, odd, format!("I'{i}"))?,
    ))
}

pub(crate) fn require_perfect(code: &Code) -> Result<()> {
    if code.length() > SWEEP_MAX_LEN {
        return Err(Error::Length(code.length(), SWEEP_MAX_LEN));
    }
    if is_perfect(code)? {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{} is not a perfect code",
            code.label()
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusSummary {
    pub i: usize,
    pub rho_even: u32,
    pub rho_odd: u32,
    pub shell: usize,
}

/// `ρ(I) = ρ(I') = 3` and `{y : d(y, I) = 3} = I' ∪ (I' + e_i)`.
pub fn verify_i_even_radius(code: &Code, i: usize) -> Result<RadiusSummary> {
    require_perfect(code)?;
    let n = code.length();
    let (even, odd) = i_even_split(code, i)?;
    let rho_even = covering_radius(even.words(), n)?;
    let rho_odd = covering_radius(odd.words(), n)?;
    if rho_even != 3 || rho_odd != 3 {
        return Err(Error::violation(
            format!("both i-even and i-odd halves have covering radius 3 (i={i})"),
            format!("rho(I)={rho_even} rho(I')={rho_odd}"),
        ));
    }
    let dist = distance_map(even.words(), n)?;
    let e = Word::unit(i);
    let mut expected = bitvec![0; 1 << n];
    for w in odd.iter() {
        expected.set(w.0 as usize, true);
        expected.set((w ^ e).0 as usize, true);
    }
    let mut shell = 0;
    for y in 0..1u32 << n {
        let at3 = dist[y as usize] == 3;
        shell += at3 as usize;
        if at3 != expected[y as usize] {
            return Err(Error::violation(
                format!("vectors at distance 3 from I are exactly I' and I' + e_{i}"),
                Word(y).to_bin(n),
            ));
        }
    }
    Ok(RadiusSummary {
        i,
        rho_even,
        rho_odd,
        shell,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionSummary {
    pub i: usize,
    /// Completions found by exhaustive search; `None` when the search is out of budget.
    pub completions: Option<usize>,
    pub odd_half_is_i_component: bool,
}

/// Largest candidate pool for the exhaustive completion search.
const COMPLETION_POOL_MAX: usize = 24;

/// Both `I ∪ I'` and `I ∪ (I' + e_i)` are perfect; at small length, an exhaustive search
/// over all vectors at distance ≥ 3 from `I` finds exactly these two completions.
pub fn verify_completions(code: &Code, i: usize) -> Result<CompletionSummary> {
    require_perfect(code)?;
    let n = code.length();
    let (even, odd) = i_even_split(code, i)?;
    let shifted = odd.translate(Word::unit(i));
    let union = |a: &Code, b: &Code| Code::new(n, a.iter().chain(b.iter()), "completion");
    for (name, half) in [("I'", &odd), ("I' + e_i", &shifted)] {
        if !is_perfect(&union(&even, half)?)? {
            return Err(Error::violation(
                format!("I together with {name} is a perfect code (i={i})"),
                half.label().to_string(),
            ));
        }
    }
    let odd_half_is_i_component = is_i_component(odd.words(), i, n)?;
    let dist = distance_map(even.words(), n)?;
    let pool: Vec<Word> = (0..1u32 << n)
        .filter(|&y| dist[y as usize] >= 3)
        .map(Word)
        .collect();
    if pool.len() > COMPLETION_POOL_MAX {
        return Ok(CompletionSummary {
            i,
            completions: None,
            odd_half_is_i_component,
        });
    }
    let target = code.size() - even.size();
    let mut found = packings(&pool, target, usize::MAX);
    let mut expected = [odd.words().to_vec(), shifted.words().to_vec()];
    expected.sort();
    found.sort();
    if found != expected {
        return Err(Error::violation(
            format!("I has exactly two completions, I' and I' + e_{i}"),
            format!("{} completions found", found.len()),
        ));
    }
    Ok(CompletionSummary {
        i,
        completions: Some(found.len()),
        odd_half_is_i_component,
    })
}

/// Up to `limit` subsets of `pool` of size `target` with pairwise distance ≥ 3.
pub(crate) fn packings(pool: &[Word], target: usize, limit: usize) -> Vec<Vec<Word>> {
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(target);
    extend_packing(pool, 0, target, limit, &mut chosen, &mut found);
    found
}

fn extend_packing(
    pool: &[Word],
    from: usize,
    target: usize,
    limit: usize,
    chosen: &mut Vec<Word>,
    found: &mut Vec<Vec<Word>>,
) {
    if found.len() >= limit {
        return;
    }
    if chosen.len() == target {
        let mut set = chosen.clone();
        set.sort_unstable();
        found.push(set);
        return;
    }
    if pool.len() - from < target - chosen.len() {
        return;
    }
    for k in from..pool.len() {
        let c = pool[k];
        if chosen.iter().all(|&w| w.distance(c) >= 3) {
            chosen.push(c);
            extend_packing(pool, k + 1, target, limit, chosen, found);
            chosen.pop();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoComponentSummary {
    pub perms: usize,
    pub homogeneous_pairs: usize,
    pub switches: usize,
    /// Report-only: component size profile (e.g. "1024+1024") over non-homogeneous pairs.
    pub mixed_pair_profiles: BTreeMap<String, usize>,
}

fn profile(sizes: &[usize]) -> String {
    let mut s = sizes.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s.iter().map(usize::to_string).collect::<Vec<_>>().join("+")
}

/// For every permutation: every homogeneous pair of the product code splits it into two
/// components of half its size, and switching either one gives an extended perfect code.
/// Homogeneous pairs, switches and mixed-pair profiles of one permutation.
type PermTally = (usize, usize, BTreeMap<String, usize>);

pub fn verify_two_maximal_components(p: &Partition, perms: &[Perm]) -> Result<TwoComponentSummary> {
    let n = p.n();
    let per_perm: Vec<Result<PermTally>> = perms
        .par_iter()
        .map(|perm| {
            let pc = product_code(p, perm.clone())?;
            let code = pc.code();
            let half = code.size() / 2;
            let (mut pairs, mut switches) = (0, 0);
            let mut mixed = BTreeMap::new();
            for i in 0..2 * n {
                for j in i + 1..2 * n {
                    let adjacency = Adjacency::Pair(i, j);
                    let labels = component_labels(code, adjacency)?;
                    let sizes = label_sizes(&labels);
                    if (i < n) != (j < n) {
                        *mixed.entry(profile(&sizes)).or_insert(0) += 1;
                        continue;
                    }
                    pairs += 1;
                    if sizes != [half, half] {
                        return Err(Error::violation(
                            format!("two components of size {half} for pair ({i},{j})"),
                            format!("perm [{perm}] sizes {}", profile(&sizes)),
                        ));
                    }
                    for c in 0..2u32 {
                        let k: Vec<Word> = code
                            .iter()
                            .zip(&labels)
                            .filter(|(_, &l)| l == c)
                            .map(|(w, _)| w)
                            .collect();
                        switches += 1;
                        if !is_extended_perfect(&switch_unchecked(code, &k, adjacency.shift()))? {
                            return Err(Error::violation(
                                format!("switching a ({i},{j})-component keeps the code extended perfect"),
                                format!("perm [{perm}] component {c}"),
                            ));
                        }
                    }
                }
            }
            Ok((pairs, switches, mixed))
        })
        .collect();
    let mut summary = TwoComponentSummary {
        perms: perms.len(),
        homogeneous_pairs: 0,
        switches: 0,
        mixed_pair_profiles: BTreeMap::new(),
    };
    for r in per_perm {
        let (pairs, switches, mixed) = r?;
        summary.homogeneous_pairs += pairs;
        summary.switches += switches;
        for (k, v) in mixed {
            *summary.mixed_pair_profiles.entry(k).or_insert(0) += v;
        }
    }
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rho3Exploration {
    pub n: usize,
    pub steps: usize,
    pub seed: u64,
    pub components_examined: usize,
    /// `"size/rho" -> count`.
    pub profiles: BTreeMap<String, usize>,
    /// Components with covering radius 3 that are smaller than half the code.
    pub nonmaximal_rho3: Vec<String>,
}

/// Random walk over perfect codes by `i`-switching, starting at the Hamming code, recording
/// the size and covering radius of every `i`-component met. Reports, never asserts.
pub fn explore_rho3(n: usize, steps: usize, seed: u64) -> Result<Rho3Exploration> {
    let m = match n {
        7 => 3,
        15 => 4,
        _ => {
            return Err(Error::InadmissibleLength {
                len: n,
                form: "7 or 15",
            })
        }
    };
    let mut code = hamming_code(&make_field(m)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Rho3Exploration {
        n,
        steps,
        seed,
        components_examined: 0,
        profiles: BTreeMap::new(),
        nonmaximal_rho3: Vec::new(),
    };
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let adjacency = Adjacency::Single(i);
        let labels = component_labels(&code, adjacency)?;
        let sizes = label_sizes(&labels);
        let members = |c: u32| -> Vec<Word> {
            code.iter()
                .zip(&labels)
                .filter(|(_, &l)| l == c)
                .map(|(w, _)| w)
                .collect()
        };
        for (c, &size) in sizes.iter().enumerate() {
            let words = members(c as u32);
            let rho = covering_radius(&words, n)?;
            out.components_examined += 1;
            *out.profiles.entry(format!("{size}/{rho}")).or_insert(0) += 1;
            if rho == 3 && size < code.size() / 2 && out.nonmaximal_rho3.len() < 8 {
                out.nonmaximal_rho3
                    .push(format!("i={i} size={size} seed={}", words[0].to_bin(n)));
            }
        }
        let pick = rng.gen_range(0..sizes.len()) as u32;
        let switched = switch_unchecked(&code, &members(pick), adjacency.shift());
        if !is_perfect(&switched)? {
            return Err(Error::Invariant(
                "switching an i-component broke perfectness".into(),
            ));
        }
        code = switched;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::hamming_code;
    use crate::partition::krotov_partition;
    use crate::product::perm_sample;

    fn ham(m: u32) -> Code {
        hamming_code(&make_field(m).unwrap()).unwrap()
    }

    #[test]
    fn length_8_classes_split_in_halves() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        for c in p.classes() {
            for i in 0..8 {
                for j in i + 1..8 {
                    assert_eq!(census(c, i, j).unwrap().sizes, vec![8, 8]);
                }
            }
        }
    }

    #[test]
    fn component_contains_seed_and_rejects_strangers() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let c = p.class(2);
        let seed = c.words()[5];
        let comp = component(c, seed, 0, 3).unwrap();
        assert!(comp.contains(seed));
        assert_eq!(comp.size(), 8);
        assert!(matches!(
            component(c, Word::ZERO, 0, 3),
            Err(Error::NotMember(_))
        ));
        assert!(matches!(
            component(c, seed, 3, 3),
            Err(Error::SameCoordinates)
        ));
    }

    #[test]
    fn labels_do_not_depend_on_seed_order() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let code = crate::product::product_code(&p, Perm::reversal(8)).unwrap();
        let code = code.code();
        let labels = component_labels(code, Adjacency::Pair(2, 11)).unwrap();
        for &seed in code.words().iter().rev().step_by(301) {
            let comp = component(code, seed, 2, 11).unwrap();
            let label = labels[code.index_of(seed).unwrap()];
            let by_label: Vec<Word> = code
                .iter()
                .zip(&labels)
                .filter(|(_, &l)| l == label)
                .map(|(w, _)| w)
                .collect();
            assert_eq!(comp.words, by_label);
        }
    }

    #[test]
    fn switching_laws() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let pc = crate::product::product_code(&p, Perm::identity(8)).unwrap();
        let code = pc.code();
        let k = component(code, code.words()[0], 1, 6).unwrap();
        assert_eq!(k.size(), 1024);
        let switched = switch(code, &k).unwrap();
        assert!(is_extended_perfect(&switched).unwrap());
        let back_component = Component {
            words: k
                .words
                .iter()
                .map(|&w| w ^ k.adjacency.shift())
                .collect::<Vec<_>>(),
            ..k.clone()
        };
        let mut back_component = back_component;
        back_component.words.sort_unstable();
        assert_eq!(switch(&switched, &back_component).unwrap(), *code);
        let other_seed = code.iter().find(|&w| !k.contains(w)).unwrap();
        let other = component(code, other_seed, 1, 6).unwrap();
        let both = switch(
            &switched,
            &Component {
                seed: other_seed,
                ..other.clone()
            },
        );
        // after switching k, the other half is still a component of the switched code
        assert_eq!(both.unwrap(), code.translate(Word::from_support([1, 6])));
        let partial = Component {
            words: k.words[..10].to_vec(),
            ..k
        };
        assert!(matches!(
            switch(code, &partial),
            Err(Error::NotComponent(_))
        ));
    }

    #[test]
    fn i_component_test() {
        let h7 = ham(3);
        for i in 0..7 {
            assert!(is_i_component(h7.words(), i, 7).unwrap());
        }
        assert!(!is_i_component(&[h7.words()[3]], 2, 7).unwrap());
        assert!(matches!(is_i_component(&[], 0, 7), Err(Error::Empty)));
    }

    #[test]
    fn minimal_components() {
        let k7 = minimal_component(7).unwrap();
        assert_eq!(k7.len(), 8);
        assert!(k7.iter().all(|w| [0, 3, 4, 7].contains(&w.weight())));
        assert!(k7.contains(&Word::ZERO));
        assert!(is_i_component(&k7, 3, 7).unwrap());
        assert_eq!(minimal_component(15).unwrap().len(), 128);
        assert!(minimal_component(8).is_err());
        for n in [7, 15] {
            let h = (n - 1) / 2;
            let b = balanced_minimal_component(n).unwrap();
            assert!(b
                .iter()
                .all(|w| [h as u32, h as u32 + 1].contains(&w.weight())));
            assert!(is_i_component(&b, h, n).unwrap());
        }
        assert!(balanced_minimal_component(8).is_err());
    }

    #[test]
    fn i_even_halves() {
        let h7 = ham(3);
        for i in 0..7 {
            let (even, odd) = i_even_split(&h7, i).unwrap();
            assert_eq!((even.size(), odd.size()), (8, 8));
            assert!(even.contains(Word::ZERO));
            let switched =
                Code::new(7, even.iter().chain(odd.iter().map(|w| w.flip(i))), "").unwrap();
            assert!(is_perfect(&switched).unwrap());
            // no i-adjacent pair crosses the split
            for x in even.iter() {
                assert!(Adjacency::Single(i)
                    .neighbors(&h7, x)
                    .iter()
                    .all(|&y| even.contains(y)));
            }
        }
    }

    #[test]
    fn i_even_split_brute_force() {
        let h7 = ham(3);
        for i in 0..7 {
            let (even, _) = i_even_split(&h7, i).unwrap();
            let brute: Vec<Word> = h7
                .iter()
                .filter(|w| (w.weight() % 2 == 1 && w.bit(i)) || (w.weight() % 2 == 0 && !w.bit(i)))
                .collect();
            assert_eq!(even.words(), &brute[..]);
        }
    }

    #[test]
    fn radius_and_completions_at_7() {
        let h7 = ham(3);
        for i in 0..7 {
            let r = verify_i_even_radius(&h7, i).unwrap();
            assert_eq!(r.shell, 16);
            let c = verify_completions(&h7, i).unwrap();
            assert_eq!(c.completions, Some(2));
        }
    }

    #[test]
    fn rejects_non_perfect_input() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let c = crate::codes::puncture(p.even_class(0), 0).unwrap();
        let broken = Code::new(7, c.iter().skip(1), "").unwrap();
        assert!(matches!(
            verify_i_even_radius(&broken, 0),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn two_components_small_sample() {
        let p = krotov_partition(&make_field(3).unwrap()).unwrap();
        let s = verify_two_maximal_components(&p, &perm_sample(8, 1, 5)).unwrap();
        assert_eq!(s.homogeneous_pairs, 3 * 56);
        assert_eq!(s.switches, 2 * 3 * 56);
        assert_eq!(s.mixed_pair_profiles.values().sum::<usize>(), 3 * 64);
    }

    #[test]
    fn rho3_walk_is_reproducible() {
        let a = explore_rho3(7, 5, 11).unwrap();
        assert_eq!(a, explore_rho3(7, 5, 11).unwrap());
        assert!(a.components_examined > 0);
    }
}
