//! Fixed-width binary words and explicit codes.
//!
//! Bit `i` of a [`Word`] is coordinate `i`. The text form writes coordinate 0 first.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use bitvec::prelude::*;

use crate::error::{Error, Result};

/// Longest supported word.
pub const MAX_LEN: usize = 32;

/// Codes up to this length keep a membership bitmap over the whole space.
const BITMAP_LEN: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize)]
#[serde(transparent)]
pub struct Word(pub u32);

impl Word {
    pub const ZERO: Word = Word(0);

    pub fn unit(i: usize) -> Word {
        Word(1 << i)
    }

    /// The all-ones word of length `n`.
    pub fn ones(n: usize) -> Word {
        Word(mask(n))
    }

    pub fn from_support(support: impl IntoIterator<Item = usize>) -> Word {
        Word(support.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn bit(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn flip(self, i: usize) -> Word {
        Word(self.0 ^ 1 << i)
    }

    pub fn distance(self, other: Word) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    pub fn support(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Ordering key for coset leaders: weight first, then integer value.
    pub fn leader_key(self) -> (u32, u32) {
        (self.weight(), self.0)
    }

    /// `(left, right)` as one word of length `2 * half`.
    pub fn concat(left: Word, right: Word, half: usize) -> Word {
        Word(left.0 | right.0 << half)
    }

    pub fn halves(self, half: usize) -> (Word, Word) {
        (Word(self.0 & mask(half)), Word(self.0 >> half))
    }

    pub fn to_bin(self, n: usize) -> String {
        (0..n)
            .map(|i| if self.bit(i) { '1' } else { '0' })
            .collect()
    }

    /// Parses the text form; the length is the string length.
    pub fn parse_bin(s: &str) -> Result<(Word, usize)> {
        let n = s.chars().count();
        if n > MAX_LEN {
            return Err(Error::Length(n, MAX_LEN));
        }
        let mut w = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w |= 1 << i,
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("non-binary character {other:?}"),
                    })
                }
            }
        }
        Ok((Word(w), n))
    }
}

impl BitXor for Word {
    type Output = Word;

    fn bitxor(self, rhs: Word) -> Word {
        Word(self.0 ^ rhs.0)
    }
}

impl BitXorAssign for Word {
    fn bitxor_assign(&mut self, rhs: Word) {
        self.0 ^= rhs.0;
    }
}

pub(crate) fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn check_len(n: usize) -> Result<()> {
    if n == 0 || n > MAX_LEN {
        Err(Error::Length(n, MAX_LEN))
    } else {
        Ok(())
    }
}

pub(crate) fn check_coord(i: usize, n: usize) -> Result<()> {
    if i < n {
        Ok(())
    } else {
        Err(Error::Coordinate { coord: i, len: n })
    }
}

/// An explicit set of words of a common length.
#[derive(Clone)]
pub struct Code {
    len: usize,
    words: Vec<Word>,
    label: String,
    bitmap: Option<BitVec>,
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Code")
            .field("len", &self.len)
            .field("size", &self.words.len())
            .field("label", &self.label)
            .finish()
    }
}

impl PartialEq for Code {
    /// Set equality; labels are provenance only.
    fn eq(&self, other: &Code) -> bool {
        self.len == other.len && self.words == other.words
    }
}

impl Eq for Code {}

impl Code {
    pub fn new(
        len: usize,
        words: impl IntoIterator<Item = Word>,
        label: impl Into<String>,
    ) -> Result<Code> {
        check_len(len)?;
        let mut words: Vec<Word> = words.into_iter().collect();
        if let Some(bad) = words.iter().find(|w| w.0 & !mask(len) != 0) {
            return Err(Error::WordOutOfRange { word: bad.0, len });
        }
        words.sort_unstable();
        words.dedup();
        let bitmap = (len <= BITMAP_LEN).then(|| {
            let mut bm = bitvec![0; 1 << len];
            for w in &words {
                bm.set(w.0 as usize, true);
            }
            bm
        });
        Ok(Code {
            len,
            words,
            label: label.into(),
            bitmap,
        })
    }

    pub fn length(&self) -> usize {
        self.len
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Sorted ascending by integer value.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = Word> + '_ {
        self.words.iter().copied()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Code {
        self.label = label.into();
        self
    }

    pub fn contains(&self, w: Word) -> bool {
        match &self.bitmap {
            Some(bm) => (w.0 as usize) < bm.len() && bm[w.0 as usize],
            None => self.words.binary_search(&w).is_ok(),
        }
    }

    pub fn index_of(&self, w: Word) -> Option<usize> {
        self.words.binary_search(&w).ok()
    }

    /// `spectrum[k]` = number of words of weight `k`.
    pub fn weight_spectrum(&self) -> Vec<usize> {
        let mut spec = vec![0; self.len + 1];
        for w in &self.words {
            spec[w.weight() as usize] += 1;
        }
        spec
    }

    pub fn translate(&self, v: Word) -> Code {
        Code::new(
            self.len,
            self.iter().map(|w| w ^ v),
            format!("{}+v", self.label),
        )
        .expect("translation preserves length")
    }

    pub fn is_subset_of(&self, other: &Code) -> bool {
        self.len == other.len && self.iter().all(|w| other.contains(w))
    }
}
