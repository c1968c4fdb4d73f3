//! Binary codes defined by check sums over GF(2^m), plus the distance, covering and coset
//! machinery used by every verifier.
//!
//! A word of length `n = 2^m` is read as a subset `X` of the field through the coordinate
//! order of [`Field::coordinate_order`]. A check either fixes `|X| mod 2` or requires
//! `Σ_{x∈X} f(x) = t` for some map `f`; the latter expands into `m` binary rows.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg;
use crate::word::{check_coord, check_len, mask, Code, Word};

/// Longest word any builder or full-space sweep will handle.
pub const SWEEP_MAX_LEN: usize = 20;
/// Largest `m` for explicit field-indexed codes (2^16 subsets).
pub const ENUMERATION_MAX_DEGREE: u32 = 4;

enum Check<'f> {
    Count(u8),
    Sum(Box<dyn Fn(Elem) -> Elem + 'f>, Elem),
}

/// A conjunction of check equations on subsets of a field.
pub struct CheckSet<'f> {
    field: &'f Field,
    checks: Vec<Check<'f>>,
}

impl<'f> CheckSet<'f> {
    pub fn new(field: &'f Field) -> Self {
        CheckSet {
            field,
            checks: Vec::new(),
        }
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    /// `Σ_{x∈X} 1 = p`.
    pub fn count(mut self, p: u8) -> Result<Self> {
        if p > 1 {
            return Err(Error::Parity(p));
        }
        self.checks.push(Check::Count(p));
        Ok(self)
    }

    /// `Σ_{x∈X} f(x) = target`.
    pub fn sum(mut self, f: impl Fn(Elem) -> Elem + 'f, target: Elem) -> Self {
        self.checks.push(Check::Sum(Box::new(f), target));
        self
    }

    /// Evaluates the checks directly on a support set.
    pub fn is_satisfied(&self, support: &[Elem]) -> bool {
        self.checks.iter().all(|c| match c {
            Check::Count(p) => support.len() % 2 == *p as usize,
            Check::Sum(f, t) => self.field.sum(support.iter().map(|&x| f(x))) == *t,
        })
    }

    /// Binary check matrix rows and right-hand sides, one column per coordinate.
    pub fn rows(&self) -> (Vec<u32>, Vec<bool>) {
        let n = self.field.order();
        let coords = self.field.coordinate_order();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for c in &self.checks {
            match c {
                Check::Count(p) => {
                    rows.push(mask(n));
                    rhs.push(*p == 1);
                }
                Check::Sum(f, t) => {
                    let images: Vec<u16> = coords.iter().map(|&x| f(x).bits()).collect();
                    for b in 0..self.field.m() {
                        let row = images
                            .iter()
                            .enumerate()
                            .filter(|(_, v)| *v >> b & 1 == 1)
                            .fold(0u32, |acc, (i, _)| acc | 1 << i);
                        rows.push(row);
                        rhs.push(t.bits() >> b & 1 == 1);
                    }
                }
            }
        }
        (rows, rhs)
    }
}

fn check_degree(field: &Field) -> Result<()> {
    if field.m() > ENUMERATION_MAX_DEGREE {
        Err(Error::Unsupported(format!(
            "explicit codes need m <= {ENUMERATION_MAX_DEGREE}, got {}",
            field.m()
        )))
    } else {
        Ok(())
    }
}

/// Solves the check system by Gaussian elimination and lists the solution set.
pub fn kernel_code(checks: &CheckSet<'_>, label: impl Into<String>) -> Result<Code> {
    let field = checks.field();
    check_degree(field)?;
    let (rows, rhs) = checks.rows();
    let words = linalg::solve(&rows, &rhs, field.order())
        .map(|s| s.points())
        .unwrap_or_default();
    Code::new(field.order(), words, label)
}

/// Enumerates every subset of the field and keeps those accepted by `accept`.
/// Test oracle; refuses `m > 4`.
pub fn brute_force_code(
    field: &Field,
    accept: impl Fn(&[Elem]) -> bool,
    label: impl Into<String>,
) -> Result<Code> {
    check_degree(field)?;
    let n = field.order();
    let coords = field.coordinate_order();
    let mut support = Vec::with_capacity(n);
    let mut words = Vec::new();
    for bits in 0u32..1 << n {
        support.clear();
        support.extend(Word(bits).support().map(|i| coords[i]));
        if accept(&support) {
            words.push(Word(bits));
        }
    }
    Code::new(n, words, label)
}

/// Checks of `H_a^p`: `|X| ≡ p` and `Σ (x + a)^3 = 0`.
pub fn hamming_checks(field: &Field, a: Elem, p: u8) -> Result<CheckSet<'_>> {
    Ok(CheckSet::new(field)
        .count(p)?
        .sum(move |x| field.cube(field.add(x, a)), Elem::ZERO))
}

pub fn hamming_label(field: &Field, a: Elem, p: u8) -> String {
    format!("H[{}]^{p}", field.power_label(a))
}

/// `H_a^p`: the extended Hamming code (`p = 0`) attached to the point `a`, or its odd coset.
pub fn extended_hamming(field: &Field, a: Elem, p: u8) -> Result<Code> {
    let checks = hamming_checks(field, a, p)?;
    kernel_code(&checks, hamming_label(field, a, p))
}

/// The code cut out by `|X|` even and `Σ x = 0`.
pub fn extended_cyclic_hamming(field: &Field) -> Result<Code> {
    let checks = CheckSet::new(field).count(0)?.sum(|x| x, Elem::ZERO);
    kernel_code(&checks, "Hbar")
}

/// The extended double-error-correcting BCH code: `|X|` even, `Σ x = 0`, `Σ x^3 = 0`.
pub fn extended_bch(field: &Field) -> Result<Code> {
    let checks = CheckSet::new(field)
        .count(0)?
        .sum(|x| x, Elem::ZERO)
        .sum(|x| field.cube(x), Elem::ZERO);
    kernel_code(&checks, "BCH")
}

pub fn intersect(a: &Code, b: &Code) -> Result<Code> {
    if a.length() != b.length() {
        return Err(Error::LengthMismatch(a.length(), b.length()));
    }
    Code::new(
        a.length(),
        a.iter().filter(|&w| b.contains(w)),
        format!("{}&{}", a.label(), b.label()),
    )
}

/// `{a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &Code, b: &Code) -> Result<Code> {
    if a.length() != b.length() {
        return Err(Error::LengthMismatch(a.length(), b.length()));
    }
    Code::new(
        a.length(),
        a.iter().flat_map(|x| b.iter().map(move |y| x ^ y)),
        format!("{}+{}", a.label(), b.label()),
    )
}

/// Minimum pairwise Hamming distance, by exhaustive pair scan.
pub fn min_distance(code: &Code) -> Result<u32> {
    let words = code.words();
    if words.len() < 2 {
        return Err(Error::TooFewWords);
    }
    let mut best = u32::MAX;
    for (k, &x) in words.iter().enumerate() {
        for &y in &words[k + 1..] {
            best = best.min(x.distance(y));
        }
    }
    Ok(best)
}

/// Calls `visit` on every word at distance `1..=radius` from `center`.
pub(crate) fn for_each_in_ball(
    center: Word,
    n: usize,
    radius: u32,
    visit: &mut impl FnMut(Word) -> bool,
) -> bool {
    fn rec(
        w: Word,
        from: usize,
        left: u32,
        n: usize,
        visit: &mut impl FnMut(Word) -> bool,
    ) -> bool {
        for i in from..n {
            let next = w.flip(i);
            if !visit(next) {
                return false;
            }
            if left > 1 && !rec(next, i + 1, left - 1, n, visit) {
                return false;
            }
        }
        true
    }
    radius == 0 || rec(center, 0, radius, n, visit)
}

/// `true` iff all distinct codewords are at distance at least `d`.
///
/// Uses a ball scan around each codeword when the code has a membership bitmap, which is
/// much cheaper than the pair scan for the 2048-word codes of length 16.
pub fn min_distance_at_least(code: &Code, d: u32) -> bool {
    if code.size() < 2 || d <= 1 {
        return true;
    }
    if code.length() <= SWEEP_MAX_LEN {
        code.iter()
            .all(|w| for_each_in_ball(w, code.length(), d - 1, &mut |v| !code.contains(v)))
    } else {
        min_distance(code).map_or(true, |md| md >= d)
    }
}

/// Distance from every vector of `F_2^n` to the nearest element of `set`.
pub fn distance_map(set: &[Word], n: usize) -> Result<Vec<u8>> {
    check_len(n)?;
    if n > SWEEP_MAX_LEN {
        return Err(Error::Length(n, SWEEP_MAX_LEN));
    }
    if set.is_empty() {
        return Err(Error::Empty);
    }
    let mut dist = vec![u8::MAX; 1 << n];
    let mut queue = VecDeque::with_capacity(1 << n);
    for &w in set {
        if w.0 & !mask(n) != 0 {
            return Err(Error::WordOutOfRange { word: w.0, len: n });
        }
        if dist[w.0 as usize] != 0 {
            dist[w.0 as usize] = 0;
            queue.push_back(w.0);
        }
    }
    while let Some(v) = queue.pop_front() {
        let next = dist[v as usize] + 1;
        for i in 0..n {
            let u = (v ^ 1 << i) as usize;
            if dist[u] == u8::MAX {
                dist[u] = next;
                queue.push_back(u as u32);
            }
        }
    }
    Ok(dist)
}

/// `max_y min_{c∈set} d(y, c)` over all `y ∈ F_2^n`.
pub fn covering_radius(set: &[Word], n: usize) -> Result<u32> {
    Ok(distance_map(set, n)?.into_iter().max().unwrap_or(0) as u32)
}

/// `Some(r)` when `n = 2^r − 1`.
fn perfect_exponent(n: usize) -> Option<u32> {
    (n + 1).is_power_of_two().then(|| (n + 1).trailing_zeros())
}

/// Perfect single-error-correcting code: distance ≥ 3 and `|C| = 2^n / (n + 1)`.
pub fn is_perfect(code: &Code) -> Result<bool> {
    let n = code.length();
    let r = perfect_exponent(n).ok_or(Error::InadmissibleLength {
        len: n,
        form: "2^r - 1",
    })?;
    let expected = 1usize << (n - r as usize);
    Ok(code.size() == expected && min_distance_at_least(code, 3))
}

fn no_pair_at_distance_2(code: &Code) -> bool {
    let n = code.length();
    code.iter()
        .all(|w| (0..n).all(|a| (a + 1..n).all(|b| !code.contains(w.flip(a).flip(b)))))
}

/// Extended perfect code: even weights, distance ≥ 4 and `|C| = 2^(n − log2 n − 1)`.
pub fn is_extended_perfect(code: &Code) -> Result<bool> {
    let n = code.length();
    if !n.is_power_of_two() || n < 2 {
        return Err(Error::InadmissibleLength {
            len: n,
            form: "2^r",
        });
    }
    let r = n.trailing_zeros() as usize;
    let expected = 1usize << (n - r - 1);
    if code.size() != expected || code.iter().any(|w| w.weight() % 2 == 1) {
        return Ok(false);
    }
    // between even words, distance below 4 means distance 2
    Ok(if n <= SWEEP_MAX_LEN {
        no_pair_at_distance_2(code)
    } else {
        min_distance_at_least(code, 4)
    })
}

/// Deletes coordinate `i` from every word.
pub fn puncture(code: &Code, i: usize) -> Result<Code> {
    let n = code.length();
    check_coord(i, n)?;
    if n < 2 {
        return Err(Error::Length(n, n));
    }
    let low = mask(i);
    let words = code.iter().map(|w| Word(w.0 & low | (w.0 >> (i + 1)) << i));
    Code::new(n - 1, words, format!("{}/p{i}", code.label()))
}

/// Inserts an overall parity bit at coordinate `i`; inverse of [`puncture`] on even-weight codes.
pub fn extend_parity(code: &Code, i: usize) -> Result<Code> {
    let n = code.length();
    check_coord(i, n + 1)?;
    check_len(n + 1)?;
    let low = mask(i);
    let words = code.iter().map(|w| {
        let parity = w.weight() & 1;
        Word(w.0 & low | parity << i | (w.0 & !low) << 1)
    });
    Code::new(n + 1, words, format!("{}/x{i}", code.label()))
}

/// Hamming code of length `2^m − 1`: the extended cyclic Hamming code punctured at coordinate 0.
pub fn hamming_code(field: &Field) -> Result<Code> {
    let ext = extended_cyclic_hamming(field)?;
    Ok(puncture(&ext, 0)?.with_label(format!("Ham({})", field.order() - 1)))
}

/// One coset of a linear code, with its minimum-weight leader.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    pub leader: Word,
    /// Sorted ascending.
    pub members: Vec<Word>,
}

impl Coset {
    pub fn words_of_weight(&self, w: u32) -> impl Iterator<Item = Word> + '_ {
        self.members
            .iter()
            .copied()
            .filter(move |m| m.weight() == w)
    }
}

#[derive(Debug, Clone)]
pub struct CosetTable {
    pub subcode: Code,
    /// Ordered by leader (weight, then value).
    pub cosets: Vec<Coset>,
}

impl CosetTable {
    pub fn leaders(&self) -> Vec<Word> {
        self.cosets.iter().map(|c| c.leader).collect()
    }
}

/// `true` iff `code` contains zero and is closed under addition.
pub fn is_linear(code: &Code) -> bool {
    code.contains(Word::ZERO)
        && code
            .words()
            .iter()
            .enumerate()
            .all(|(k, &x)| code.words()[k + 1..].iter().all(|&y| code.contains(x ^ y)))
}

/// Splits `ambient` into cosets of the linear `subcode`.
pub fn cosets(ambient: &Code, subcode: &Code) -> Result<CosetTable> {
    let n = ambient.length();
    if subcode.length() != n {
        return Err(Error::LengthMismatch(n, subcode.length()));
    }
    if !is_linear(subcode) {
        return Err(Error::NotLinear(subcode.label().to_string()));
    }
    let mut seen = std::collections::HashSet::with_capacity(ambient.size());
    let mut out = Vec::new();
    for a in ambient.iter() {
        if seen.contains(&a) {
            continue;
        }
        let mut members = Vec::with_capacity(subcode.size());
        for s in subcode.iter() {
            let w = a ^ s;
            if !ambient.contains(w) {
                return Err(Error::NotCosetClosed(w.to_bin(n)));
            }
            seen.insert(w);
            members.push(w);
        }
        members.sort_unstable();
        let leader = *members
            .iter()
            .min_by_key(|w| w.leader_key())
            .expect("nonempty");
        out.push(Coset { leader, members });
    }
    out.sort_by_key(|c| c.leader.leader_key());
    Ok(CosetTable {
        subcode: subcode.clone(),
        cosets: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn all_points(f: &Field) -> Vec<Elem> {
        f.coordinate_order()
    }

    #[test]
    fn hamming_m3_sizes_and_distance() {
        let f = make_field(3).unwrap();
        for a in all_points(&f) {
            for p in 0..2 {
                let c = extended_hamming(&f, a, p).unwrap();
                assert_eq!(c.size(), 16);
                assert_eq!(min_distance(&c).unwrap(), 4);
                assert!(c.iter().all(|w| w.weight() % 2 == p as u32));
            }
            let even = extended_hamming(&f, a, 0).unwrap();
            assert!(even.contains(Word::ZERO));
            assert!(even.contains(Word::ones(8)));
        }
    }

    #[test]
    fn cube_checks_degenerate_for_even_m() {
        // x -> x^3 is 3-to-1 on GF(16)^*, so H_a^0 has the right size but contains
        // weight-2 words e_x + e_y with (x + a)^3 = (y + a)^3.
        let f = make_field(4).unwrap();
        for a in all_points(&f) {
            let c = extended_hamming(&f, a, 0).unwrap();
            assert_eq!(c.size(), 2048);
            assert_eq!(min_distance(&c).unwrap(), 2);
            assert!(!is_extended_perfect(&c).unwrap());
        }
        // odd m: the cube map is a bijection and every H_a^0 is extended perfect
        let f3 = make_field(3).unwrap();
        for a in all_points(&f3) {
            assert!(is_extended_perfect(&extended_hamming(&f3, a, 0).unwrap()).unwrap());
        }
    }

    #[test]
    fn parity_must_be_binary() {
        let f = make_field(3).unwrap();
        assert!(matches!(
            extended_hamming(&f, Elem::ZERO, 2),
            Err(Error::Parity(2))
        ));
    }

    #[test]
    fn check_matrix_rank_is_m_plus_one() {
        for m in [3, 4] {
            let f = make_field(m).unwrap();
            for a in all_points(&f) {
                let (rows, _) = hamming_checks(&f, a, 0).unwrap().rows();
                assert_eq!(linalg::rank(&rows), m as usize + 1);
            }
        }
    }

    #[test]
    fn contradictory_checks_give_empty_code() {
        let f = make_field(3).unwrap();
        let both = CheckSet::new(&f).count(0).unwrap().count(1).unwrap();
        assert!(kernel_code(&both, "").unwrap().is_empty());
        assert!(brute_force_code(&f, |s| both.is_satisfied(s), "")
            .unwrap()
            .is_empty());
    }

    #[test]
    fn brute_force_refuses_large_fields() {
        let f = make_field(5).unwrap();
        assert!(brute_force_code(&f, |_| true, "").is_err());
    }

    #[test]
    fn cyclic_hamming_and_bch() {
        let f3 = make_field(3).unwrap();
        let h = extended_cyclic_hamming(&f3).unwrap();
        assert_eq!(h.size(), 16);
        assert!(h.contains(Word::ZERO) && h.contains(Word::ones(8)));
        let bch3 = extended_bch(&f3).unwrap();
        assert_eq!(bch3.words(), &[Word::ZERO, Word::ones(8)]);
        let bch4 = extended_bch(&make_field(4).unwrap()).unwrap();
        assert_eq!(bch4.size(), 128);
        assert!(bch4.contains(Word::ZERO));
    }

    #[test]
    fn intersections() {
        let f = make_field(3).unwrap();
        let a = extended_hamming(&f, f.alpha_pow(1), 0).unwrap();
        let b = extended_hamming(&f, f.alpha_pow(4), 0).unwrap();
        assert_eq!(intersect(&a, &a).unwrap(), a);
        assert_eq!(intersect(&a, &b).unwrap().size(), 4);
        let short = Code::new(7, [Word::ZERO], "").unwrap();
        assert!(matches!(
            intersect(&a, &short),
            Err(Error::LengthMismatch(8, 7))
        ));
    }

    #[test]
    fn min_distance_edge_cases() {
        let rep = Code::new(8, [Word::ZERO, Word::ones(8)], "").unwrap();
        assert_eq!(min_distance(&rep).unwrap(), 8);
        let single = Code::new(8, [Word::ZERO], "").unwrap();
        assert!(matches!(min_distance(&single), Err(Error::TooFewWords)));
        assert!(min_distance_at_least(&rep, 8) && !min_distance_at_least(&rep, 9));
    }

    #[test]
    fn covering_radius_basics() {
        let full: Vec<Word> = (0..16).map(Word).collect();
        assert_eq!(covering_radius(&full, 4).unwrap(), 0);
        let ham = hamming_code(&make_field(3).unwrap()).unwrap();
        assert_eq!(covering_radius(ham.words(), 7).unwrap(), 1);
        assert!(matches!(covering_radius(&[], 4), Err(Error::Empty)));
    }

    #[test]
    fn covering_radius_matches_brute_force() {
        let sets: [&[u32]; 3] = [&[0], &[0, 0b1111111], &[3, 0b1010100, 0b0110001]];
        for s in sets {
            let words: Vec<Word> = s.iter().map(|&b| Word(b)).collect();
            let brute = (0..128u32)
                .map(|y| words.iter().map(|w| w.distance(Word(y))).min().unwrap())
                .max()
                .unwrap();
            assert_eq!(covering_radius(&words, 7).unwrap(), brute);
        }
    }

    #[test]
    fn perfectness() {
        let f3 = make_field(3).unwrap();
        let ham7 = hamming_code(&f3).unwrap();
        assert!(is_perfect(&ham7).unwrap());
        let ext4 = extended_cyclic_hamming(&make_field(4).unwrap()).unwrap();
        assert_eq!(ext4.size(), 2048);
        assert!(is_extended_perfect(&ext4).unwrap());
        assert!(is_perfect(&hamming_code(&make_field(4).unwrap()).unwrap()).unwrap());
        let ext3 = extended_hamming(&f3, Elem::ONE, 0).unwrap();
        let fewer = Code::new(8, ext3.iter().skip(1), "").unwrap();
        assert!(!is_extended_perfect(&fewer).unwrap());
        assert!(is_perfect(&ext3).is_err());
        assert!(is_extended_perfect(&ham7).is_err());
    }

    #[test]
    fn puncture_and_extend() {
        let f = make_field(3).unwrap();
        let ext = extended_hamming(&f, f.alpha_pow(2), 0).unwrap();
        for i in 0..8 {
            let p = puncture(&ext, i).unwrap();
            assert_eq!(p.size(), ext.size());
            assert!(is_perfect(&p).unwrap());
            assert_eq!(extend_parity(&p, i).unwrap(), ext);
        }
        assert!(matches!(puncture(&ext, 8), Err(Error::Coordinate { .. })));
    }

    #[test]
    fn cosets_of_even_intersection() {
        let f = make_field(3).unwrap();
        let hi = extended_hamming(&f, f.alpha_pow(0), 0).unwrap();
        let hj = extended_hamming(&f, f.alpha_pow(3), 0).unwrap();
        let sub = intersect(&hi, &hj).unwrap();
        let table = cosets(&hi, &sub).unwrap();
        assert_eq!(table.cosets.len(), 4);
        assert!(table.cosets.iter().all(|c| c.members.len() == 4));
        assert_eq!(table.cosets[0].leader, Word::ZERO);
    }

    #[test]
    fn coset_preconditions() {
        let f = make_field(3).unwrap();
        let odd = extended_hamming(&f, Elem::ZERO, 1).unwrap();
        let even = extended_hamming(&f, Elem::ZERO, 0).unwrap();
        assert!(matches!(cosets(&even, &odd), Err(Error::NotLinear(_))));
        let partial = Code::new(8, even.iter().take(3), "").unwrap();
        assert!(matches!(
            cosets(&partial, &even),
            Err(Error::NotCosetClosed(_))
        ));
    }
}
