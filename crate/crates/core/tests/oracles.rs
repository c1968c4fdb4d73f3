//! Library results against independent recomputations.

use std::collections::{BTreeSet, HashSet};

use percode_core::codes::{covering_radius, extended_bch, is_perfect, min_distance};
use percode_core::coloring::{check_coloring, verify_perfect_coloring, Coloring};
use percode_core::components::{
    census_with, i_even_split, is_i_component, verify_completions, Adjacency,
};
use percode_core::partition::krotov_partition;
use percode_core::product::{n_ij, perm_sample, product_code, Perm};
use percode_core::{make_field, Code, Elem, Word};

/// Hamming(7) from the check matrix whose columns are 1..=7 in binary.
fn hamming7_by_columns() -> Code {
    let words = (0u32..128).filter(|&v| {
        let syndrome = (0..7)
            .filter(|&i| v >> i & 1 == 1)
            .fold(0, |s, i| s ^ (i + 1));
        syndrome == 0
    });
    Code::new(7, words.map(Word), "columns").unwrap()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Component sizes by union-find over all codeword pairs.
fn union_find_sizes(code: &Code, i: usize, j: usize) -> Vec<usize> {
    let words = code.words();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    for a in 0..words.len() {
        for b in a + 1..words.len() {
            let d = words[a] ^ words[b];
            if d.weight() == 4 && d.bit(i) && d.bit(j) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut sizes = vec![0; words.len()];
    for a in 0..words.len() {
        let r = find(&mut parent, a);
        sizes[r] += 1;
    }
    let mut sizes: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

#[test]
fn census_matches_union_find() {
    let p = krotov_partition(&make_field(3).unwrap()).unwrap();
    let perm = perm_sample(8, 1, 3).pop().unwrap();
    let pc = product_code(&p, perm).unwrap();
    for (i, j) in [(0, 1), (9, 14), (3, 12), (7, 8)] {
        let census = census_with(pc.code(), Adjacency::Pair(i, j)).unwrap();
        assert_eq!(
            census.sizes,
            union_find_sizes(pc.code(), i, j),
            "pair ({i},{j})"
        );
    }
}

#[test]
fn product_membership_by_check_equations() {
    let f = make_field(3).unwrap();
    let p = krotov_partition(&f).unwrap();
    let perm = Perm::parse("3 0 6 1 7 2 5 4").unwrap();
    let pc = product_code(&p, perm.clone()).unwrap();
    let coords = f.coordinate_order();
    // the class of an odd word: the unique point a with Σ (x + a)^3 = 0
    let class = |w: Word| -> Option<usize> {
        if w.weight().is_multiple_of(2) {
            return None;
        }
        let hits: Vec<usize> = (0..8)
            .filter(|&c| {
                let a = coords[c];
                f.sum(w.support().map(|i| f.cube(f.add(coords[i], a)))) == Elem::ZERO
            })
            .collect();
        assert_eq!(hits.len(), 1, "{}", w.to_bin(8));
        Some(hits[0])
    };
    let mut count = 0;
    for v in 0u32..1 << 16 {
        let (x, y) = Word(v).halves(8);
        let member = match (class(x), class(y)) {
            (Some(l), Some(r)) => perm.apply(l) == r,
            _ => false,
        };
        assert_eq!(
            member,
            pc.code().contains(Word(v)),
            "{}",
            Word(v).to_bin(16)
        );
        count += member as usize;
    }
    assert_eq!(count, 2048);
}

#[test]
fn n_ij_matches_scan() {
    let p = krotov_partition(&make_field(3).unwrap()).unwrap();
    let pc = product_code(&p, Perm::reversal(8)).unwrap();
    let code = pc.code();
    for &x in code.words().iter().step_by(97) {
        for (i, j) in [(0, 5), (10, 13), (2, 9)] {
            let scan: Vec<Word> = code
                .iter()
                .filter(|&z| z.distance(x) == 4 && z.bit(i) != x.bit(i) && z.bit(j) != x.bit(j))
                .collect();
            assert_eq!(n_ij(code, x, i, j).unwrap(), scan);
        }
    }
}

#[test]
fn covering_radius_by_nearest_codeword() {
    let h = hamming7_by_columns();
    assert!(is_perfect(&h).unwrap());
    for i in 0..7 {
        let (even, odd) = i_even_split(&h, i).unwrap();
        for half in [&even, &odd] {
            let brute = (0u32..128)
                .map(|y| half.iter().map(|c| c.distance(Word(y))).min().unwrap())
                .max()
                .unwrap();
            assert_eq!(covering_radius(half.words(), 7).unwrap(), brute);
            assert_eq!(brute, 3);
        }
    }
}

fn ball_set(set: &[Word], n: usize) -> HashSet<u32> {
    set.iter()
        .flat_map(|w| std::iter::once(w.0).chain((0..n).map(move |a| w.0 ^ 1 << a)))
        .collect()
}

#[test]
fn i_component_by_explicit_balls() {
    let h = hamming7_by_columns();
    let words = h.words();
    for mask in [0b1u32, 0b11, 0b1010_1010_1010_1010, 0xffff, 0x00ff, 0x0f0f] {
        let subset: Vec<Word> = (0..16)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| words[k])
            .collect();
        for i in 0..7 {
            let shifted: Vec<Word> = subset.iter().map(|&w| w.flip(i)).collect();
            let expected = ball_set(&subset, 7) == ball_set(&shifted, 7);
            assert_eq!(
                is_i_component(&subset, i, 7).unwrap(),
                expected,
                "mask {mask:#x} i {i}"
            );
        }
    }
}

/// The six colors of a perfect code straight from their definitions.
fn six_colors(code: &Code, i: usize) -> Vec<u8> {
    let n = code.length();
    let even: BTreeSet<u32> = code
        .iter()
        .filter(|w| (w.weight() % 2 == 1) == w.bit(i))
        .map(|w| w.0)
        .collect();
    let odd: BTreeSet<u32> = code
        .iter()
        .map(|w| w.0)
        .filter(|v| !even.contains(v))
        .collect();
    let e = 1u32 << i;
    let near = |set: &BTreeSet<u32>, y: u32| {
        (0..n).any(|a| {
            let z = y ^ 1 << a;
            set.contains(&z) || set.contains(&(z ^ e))
        })
    };
    (0..1u32 << n)
        .map(|y| {
            if even.contains(&y) {
                0
            } else if even.contains(&(y ^ e)) {
                1
            } else if odd.contains(&(y ^ e)) {
                4
            } else if odd.contains(&y) {
                5
            } else if near(&even, y) {
                2
            } else {
                assert!(near(&odd, y));
                3
            }
        })
        .collect()
}

#[test]
fn six_coloring_from_definitions() {
    let h = hamming7_by_columns();
    for i in 0..7 {
        let names = ["I", "I+e_i", "I_1", "I'_1", "I'+e_i", "I'"]
            .map(String::from)
            .to_vec();
        let coloring = Coloring::new(7, six_colors(&h, i), names).unwrap();
        let by_hand = verify_perfect_coloring(&coloring).unwrap();
        let library = check_coloring(&h, i, 6).unwrap();
        assert_eq!(by_hand, library.matrix);
        assert!(library.matches);
    }
}

#[test]
fn completions_of_another_hamming_code() {
    let h = hamming7_by_columns();
    for i in 0..7 {
        assert_eq!(verify_completions(&h, i).unwrap().completions, Some(2));
    }
}

#[test]
fn extended_bch_distance_at_16() {
    let bch = extended_bch(&make_field(4).unwrap()).unwrap();
    assert_eq!(bch.size(), 128);
    assert_eq!(min_distance(&bch).unwrap(), 6);
}
