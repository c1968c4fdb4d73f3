//! Perfect colorings (equitable partitions) of the binary hypercube built from the
//! i-even / i-odd halves of a perfect code.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::codes::SWEEP_MAX_LEN;
use crate::components::{i_even_split, is_i_even, packings, require_perfect};
use crate::error::{Error, Result};
use crate::word::{check_len, Code, Word};

pub const SIX_COLOR_NAMES: [&str; 6] = ["I", "I+e_i", "I_1", "I'_1", "I'+e_i", "I'"];
pub const FOUR_COLOR_NAMES: [&str; 4] = ["I|I+e_i", "I_1", "I'_1", "I'|I'+e_i"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    n: usize,
    colors: Vec<u8>,
    names: Vec<String>,
}

impl Coloring {
    /// Every vertex of `F_2^n` gets a color below `names.len()`, and every color is used.
    pub fn new(n: usize, colors: Vec<u8>, names: Vec<String>) -> Result<Coloring> {
        check_len(n)?;
        if n > SWEEP_MAX_LEN {
            return Err(Error::Length(n, SWEEP_MAX_LEN));
        }
        if colors.len() != 1 << n {
            return Err(Error::Invariant(format!(
                "{} vertices colored, expected {}",
                colors.len(),
                1 << n
            )));
        }
        let c = Coloring { n, colors, names };
        if let Some(bad) = c.colors.iter().position(|&k| k as usize >= c.names.len()) {
            return Err(Error::Invariant(format!(
                "vertex {} has color {}",
                Word(bad as u32).to_bin(n),
                c.colors[bad]
            )));
        }
        if let Some(empty) = c.sizes().iter().position(|&s| s == 0) {
            return Err(Error::Invariant(format!(
                "color {} is empty",
                c.names[empty]
            )));
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn color_of(&self, w: Word) -> usize {
        self.colors[w.0 as usize] as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.names.len()];
        for &k in &self.colors {
            sizes[k as usize] += 1;
        }
        sizes
    }

    pub fn class(&self, color: usize) -> Vec<Word> {
        (0..self.colors.len() as u32)
            .filter(|&v| self.colors[v as usize] as usize == color)
            .map(Word)
            .collect()
    }

    /// Merges colors through `map` (old color -> new color).
    pub fn quotient(&self, map: &[u8], names: Vec<String>) -> Result<Coloring> {
        Coloring::new(
            self.n,
            self.colors.iter().map(|&k| map[k as usize]).collect(),
            names,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ParamMatrix(pub Vec<Vec<u32>>);

impl ParamMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.0.iter().map(|r| r.iter().sum()).collect()
    }
}

impl fmt::Display for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

/// Order: `I, I + e_i, I_1, I'_1, I' + e_i, I'`.
pub fn expected_six_matrix(n: usize) -> ParamMatrix {
    let (a, b) = (n as u32 - 1, n as u32 - 3);
    ParamMatrix(vec![
        vec![0, 1, a, 0, 0, 0],
        vec![1, 0, a, 0, 0, 0],
        vec![1, 1, 1, b, 0, 0],
        vec![0, 0, b, 1, 1, 1],
        vec![0, 0, 0, a, 0, 1],
        vec![0, 0, 0, a, 1, 0],
    ])
}

/// Order: `I ∪ (I + e_i), I_1, I'_1, I' ∪ (I' + e_i)`.
pub fn expected_four_matrix(n: usize) -> ParamMatrix {
    let (a, b) = (n as u32 - 1, n as u32 - 3);
    ParamMatrix(vec![
        vec![1, a, 0, 0],
        vec![2, 1, b, 0],
        vec![0, b, 1, 2],
        vec![0, 0, a, 1],
    ])
}

const UNSET: u8 = u8::MAX;

fn six_from_sets(n: usize, even: &[Word], odd: &[Word], shift: Word) -> Result<Coloring> {
    let mut colors = vec![UNSET; 1 << n];
    let put = |w: Word, c: u8, colors: &mut Vec<u8>| -> Result<()> {
        let slot = &mut colors[w.0 as usize];
        if *slot != UNSET && *slot != c {
            return Err(Error::violation(
                "the six color classes are disjoint",
                format!(
                    "{} in {} and {}",
                    w.to_bin(n),
                    SIX_COLOR_NAMES[*slot as usize],
                    SIX_COLOR_NAMES[c as usize]
                ),
            ));
        }
        *slot = c;
        Ok(())
    };
    for &w in even {
        put(w, 0, &mut colors)?;
        put(w ^ shift, 1, &mut colors)?;
    }
    for &w in odd {
        put(w, 5, &mut colors)?;
        put(w ^ shift, 4, &mut colors)?;
    }
    let core = colors.clone();
    for v in 0..1u32 << n {
        let c = core[v as usize];
        if c == UNSET {
            continue;
        }
        let ring = if c <= 1 { 2 } else { 3 };
        for a in 0..n {
            let u = Word(v).flip(a);
            if core[u.0 as usize] == UNSET {
                put(u, ring, &mut colors)?;
            }
        }
    }
    if let Some(gap) = colors.iter().position(|&c| c == UNSET) {
        return Err(Error::violation(
            "the six color classes cover the hypercube",
            Word(gap as u32).to_bin(n),
        ));
    }
    Coloring::new(
        n,
        colors,
        SIX_COLOR_NAMES.iter().map(|s| s.to_string()).collect(),
    )
}

/// Colors `I, I + e_i, I_1, I'_1, I' + e_i, I'` of a perfect code.
pub fn build_six_coloring(code: &Code, i: usize) -> Result<Coloring> {
    require_perfect(code)?;
    let (even, odd) = i_even_split(code, i)?;
    six_from_sets(code.length(), even.words(), odd.words(), Word::unit(i))
}

/// Colors `I ∪ (I + e_i), I_1, I'_1, I' ∪ (I' + e_i)`.
pub fn build_four_coloring(code: &Code, i: usize) -> Result<Coloring> {
    build_six_coloring(code, i)?.quotient(
        &[0, 0, 1, 2, 3, 3],
        FOUR_COLOR_NAMES.iter().map(|s| s.to_string()).collect(),
    )
}

/// Even weight / odd weight.
pub fn parity_coloring(n: usize) -> Result<Coloring> {
    check_len(n)?;
    if n > SWEEP_MAX_LEN {
        return Err(Error::Length(n, SWEEP_MAX_LEN));
    }
    let colors = (0..1u32 << n).map(|v| (v.count_ones() & 1) as u8).collect();
    Coloring::new(n, colors, vec!["even".into(), "odd".into()])
}

fn profile(c: &Coloring, v: u32) -> Vec<u32> {
    let mut row = vec![0; c.color_count()];
    for a in 0..c.n {
        row[c.colors[(v ^ 1 << a) as usize] as usize] += 1;
    }
    row
}

/// The parameter matrix, or the first vertex whose neighbor profile differs from the
/// profile of the first vertex of its color.
pub fn verify_perfect_coloring(c: &Coloring) -> Result<ParamMatrix> {
    let t = c.color_count();
    let mut rows: Vec<Option<Vec<u32>>> = vec![None; t];
    for v in 0..1u32 << c.n {
        let color = c.colors[v as usize] as usize;
        let row = profile(c, v);
        match &rows[color] {
            None => rows[color] = Some(row),
            Some(expected) if *expected != row => {
                return Err(Error::violation(
                    format!(
                        "every vertex of color {} has the same neighbor profile",
                        c.names[color]
                    ),
                    format!(
                        "{} has {:?}, expected {:?}",
                        Word(v).to_bin(c.n),
                        row,
                        expected
                    ),
                ));
            }
            Some(_) => {}
        }
    }
    let m = ParamMatrix(
        rows.into_iter()
            .map(|r| r.expect("colors are nonempty"))
            .collect(),
    );
    let sizes = c.sizes();
    for a in 0..t {
        if m.0[a].iter().sum::<u32>() as usize != c.n {
            return Err(Error::Invariant(format!(
                "row {} does not sum to {}",
                c.names[a], c.n
            )));
        }
        for b in 0..t {
            if sizes[a] as u64 * m.0[a][b] as u64 != sizes[b] as u64 * m.0[b][a] as u64 {
                return Err(Error::Invariant(format!(
                    "edge count between {} and {} is not symmetric",
                    c.names[a], c.names[b]
                )));
            }
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringCheck {
    pub n: usize,
    pub i: usize,
    pub names: Vec<String>,
    pub sizes: Vec<usize>,
    pub matrix: ParamMatrix,
    pub expected: ParamMatrix,
    pub matches: bool,
}

/// Builds the six- or four-coloring and compares its matrix with the expected table.
pub fn check_coloring(code: &Code, i: usize, colors: usize) -> Result<ColoringCheck> {
    let n = code.length();
    let (coloring, expected) = match colors {
        6 => (build_six_coloring(code, i)?, expected_six_matrix(n)),
        4 => (build_four_coloring(code, i)?, expected_four_matrix(n)),
        _ => return Err(Error::Unsupported(format!("{colors} colors (4 or 6)"))),
    };
    let matrix = verify_perfect_coloring(&coloring)?;
    Ok(ColoringCheck {
        n,
        i,
        names: coloring.names().to_vec(),
        sizes: coloring.sizes(),
        matches: matrix == expected,
        matrix,
        expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConverseSearch {
    pub n: usize,
    pub budget: u64,
    pub nodes: u64,
    pub exhausted: bool,
    pub millis: u64,
    /// Six-colorings with the expected matrix found.
    pub colorings: usize,
    /// ... whose first color is the i-even half of some perfect code for some i.
    pub i_even_first_color: usize,
    /// ... whose first color is instead the i-odd half of some perfect code.
    pub i_odd_first_color: usize,
    /// ... whose partner directions (`I + e_d` per vertex) are all equal.
    pub uniform_direction: usize,
    /// First colors with no such i, as binary words.
    pub open_witnesses: Vec<Vec<String>>,
}

const FREE: u8 = 0;
const FIRST: u8 = 1;
const PARTNER: u8 = 2;
const EXCLUDED: u8 = 3;

struct ConverseState {
    n: usize,
    target: usize,
    role: Vec<u8>,
    cnt_first: Vec<u8>,
    cnt_partner: Vec<u8>,
    pairs: Vec<(Word, Word)>,
    nodes: u64,
    budget: u64,
    out: ConverseSearch,
}

impl ConverseState {
    fn neighbors(&self, w: Word) -> impl Iterator<Item = Word> {
        let n = self.n;
        (0..n).map(move |a| w.flip(a))
    }

    /// Places `s` in the first color and `t` as its partner; `false` (and no change) if a
    /// neighbor count would break the first two rows of the matrix.
    fn place(&mut self, s: Word, t: Word) -> bool {
        if self.role[s.0 as usize] != FREE || self.role[t.0 as usize] != FREE {
            return false;
        }
        if self.cnt_first[s.0 as usize] != 0 || self.cnt_partner[s.0 as usize] != 0 {
            return false;
        }
        if self.cnt_first[t.0 as usize] != 0 || self.cnt_partner[t.0 as usize] != 0 {
            return false;
        }
        for v in self.neighbors(s).filter(|&v| v != t) {
            if self.cnt_first[v.0 as usize] != 0
                || matches!(self.role[v.0 as usize], FIRST | PARTNER)
            {
                return false;
            }
        }
        for v in self.neighbors(t).filter(|&v| v != s) {
            if self.cnt_partner[v.0 as usize] != 0
                || matches!(self.role[v.0 as usize], FIRST | PARTNER)
            {
                return false;
            }
        }
        self.role[s.0 as usize] = FIRST;
        self.role[t.0 as usize] = PARTNER;
        for v in self.neighbors(s).collect::<Vec<_>>() {
            self.cnt_first[v.0 as usize] += 1;
        }
        for v in self.neighbors(t).collect::<Vec<_>>() {
            self.cnt_partner[v.0 as usize] += 1;
        }
        self.pairs.push((s, t));
        true
    }

    fn unplace(&mut self) {
        let (s, t) = self.pairs.pop().expect("placed pair");
        self.role[s.0 as usize] = FREE;
        self.role[t.0 as usize] = FREE;
        for v in self.neighbors(s).collect::<Vec<_>>() {
            self.cnt_first[v.0 as usize] -= 1;
        }
        for v in self.neighbors(t).collect::<Vec<_>>() {
            self.cnt_partner[v.0 as usize] -= 1;
        }
    }

    fn deficit(&self) -> Option<Word> {
        (0..self.role.len())
            .find(|&v| {
                !matches!(self.role[v], FIRST | PARTNER) && self.cnt_first[v] != self.cnt_partner[v]
            })
            .map(|v| Word(v as u32))
    }

    fn try_pair(&mut self, s: Word, t: Word) {
        if self.place(s, t) {
            self.search();
            self.unplace();
        }
    }

    fn search(&mut self) {
        if self.nodes >= self.budget {
            self.out.exhausted = false;
            return;
        }
        self.nodes += 1;
        let n = self.n;
        if let Some(v) = self.deficit() {
            if self.pairs.len() == self.target {
                return;
            }
            // v needs one more neighbor in the color it lacks
            let need_partner = self.cnt_first[v.0 as usize] > self.cnt_partner[v.0 as usize];
            for a in 0..n {
                let u = v.flip(a);
                for b in (0..n).filter(|&b| b != a) {
                    let w = u.flip(b);
                    if need_partner {
                        self.try_pair(w, u);
                    } else {
                        self.try_pair(u, w);
                    }
                }
            }
            return;
        }
        if self.pairs.len() == self.target {
            self.evaluate();
            return;
        }
        let Some(u) = (0..self.role.len())
            .find(|&v| self.role[v] == FREE && self.cnt_first[v] == 0 && self.cnt_partner[v] == 0)
            .map(|v| Word(v as u32))
        else {
            return;
        };
        for d in 0..n {
            self.try_pair(u, u.flip(d));
            self.try_pair(u.flip(d), u);
        }
        self.role[u.0 as usize] = EXCLUDED;
        self.search();
        self.role[u.0 as usize] = FREE;
    }

    fn evaluate(&mut self) {
        let n = self.n;
        let mut colors = vec![UNSET; 1 << n];
        for &(s, t) in &self.pairs {
            colors[s.0 as usize] = 0;
            colors[t.0 as usize] = 1;
        }
        for (c, &hits) in colors.iter_mut().zip(&self.cnt_first) {
            if *c == UNSET && hits == 1 {
                *c = 2;
            }
        }
        for v in 0..1u32 << n {
            if colors[v as usize] == UNSET && (0..n).any(|a| colors[(v ^ 1 << a) as usize] == 2) {
                colors[v as usize] = 3;
            }
        }
        let rest: Vec<Word> = (0..1u32 << n)
            .filter(|&v| colors[v as usize] == UNSET)
            .map(Word)
            .collect();
        // the rest must pair up along single edges; each edge gets one vertex of each last color
        let mut edges = Vec::new();
        for &w in &rest {
            let mates: Vec<Word> = (0..n)
                .map(|a| w.flip(a))
                .filter(|u| rest.contains(u))
                .collect();
            if mates.len() != 1 {
                return;
            }
            if w < mates[0] {
                edges.push((w, mates[0]));
            }
        }
        if edges.len() >= 20 {
            return;
        }
        let expected = expected_six_matrix(n);
        let names: Vec<String> = SIX_COLOR_NAMES.iter().map(|s| s.to_string()).collect();
        for orient in 0u32..1 << edges.len() {
            for (k, &(a, b)) in edges.iter().enumerate() {
                let flip = orient >> k & 1 == 1;
                colors[a.0 as usize] = if flip { 5 } else { 4 };
                colors[b.0 as usize] = if flip { 4 } else { 5 };
            }
            let Ok(c) = Coloring::new(n, colors.clone(), names.clone()) else {
                continue;
            };
            if verify_perfect_coloring(&c).is_ok_and(|m| m == expected) {
                self.record();
                return;
            }
        }
    }

    fn record(&mut self) {
        let n = self.n;
        self.out.colorings += 1;
        let first: Vec<Word> = self.pairs.iter().map(|p| p.0).collect();
        let dirs: Vec<Word> = self.pairs.iter().map(|&(s, t)| s ^ t).collect();
        if dirs.iter().all(|&d| d == dirs[0]) {
            self.out.uniform_direction += 1;
        }
        let size = (1usize << n) / (n + 1);
        let half_of = |even: bool| {
            (0..n).any(|i| {
                first.iter().all(|&w| is_i_even(w, i) == even) && {
                    let pool: Vec<Word> = (0..1u32 << n)
                        .map(Word)
                        .filter(|&y| {
                            is_i_even(y, i) != even && first.iter().all(|&w| w.distance(y) >= 3)
                        })
                        .collect();
                    !packings(&pool, size - first.len(), 1).is_empty()
                }
            })
        };
        if half_of(true) {
            self.out.i_even_first_color += 1;
        } else if half_of(false) {
            self.out.i_odd_first_color += 1;
        } else if self.out.open_witnesses.len() < 16 {
            let mut sorted = first;
            sorted.sort_unstable();
            self.out
                .open_witnesses
                .push(sorted.iter().map(|w| w.to_bin(n)).collect());
        }
    }
}

/// Budgeted depth-first search for six-colorings of `F_2^7` with the expected matrix,
/// recording whether the first color is an i-even half of a perfect code. Reports only.
pub fn search_coloring_converse(n: usize, budget: u64) -> Result<ConverseSearch> {
    if n != 7 {
        return Err(Error::Unsupported(format!(
            "converse search at length {n} (only 7)"
        )));
    }
    let start = Instant::now();
    let mut state = ConverseState {
        n,
        target: (1 << n) / (2 * (n + 1)),
        role: vec![FREE; 1 << n],
        cnt_first: vec![0; 1 << n],
        cnt_partner: vec![0; 1 << n],
        pairs: Vec::new(),
        nodes: 0,
        budget,
        out: ConverseSearch {
            n,
            budget,
            nodes: 0,
            exhausted: true,
            millis: 0,
            colorings: 0,
            i_even_first_color: 0,
            i_odd_first_color: 0,
            uniform_direction: 0,
            open_witnesses: Vec::new(),
        },
    };
    state.search();
    let mut out = state.out;
    out.nodes = state.nodes;
    out.millis = start.elapsed().as_millis() as u64;
    Ok(out)
}
