//! Arithmetic in GF(2^m) and the mapping between field elements and code coordinates.
//!
//! Coordinates are numbered by increasing powers of the primitive element:
//! index 0 is the field zero, index `t + 1` is `α^t`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest extension degree accepted by [`make_field`].
pub const DEFAULT_MAX_DEGREE: u32 = 6;

/// Primitive polynomials, bit `k` is the coefficient of `x^k`.
const PRIMITIVE_POLYS: [(u32, u32); 15] = [
    (2, 0b111),
    (3, 0b1011),
    (4, 0b1_0011),
    (5, 0b10_0101),
    (6, 0b100_0011),
    (7, 0x83),
    (8, 0x11d),
    (9, 0x211),
    (10, 0x409),
    (11, 0x805),
    (12, 0x1053),
    (13, 0x201b),
    (14, 0x4443),
    (15, 0x8003),
    (16, 0x1100b),
];

/// A field element in polynomial-basis form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A code coordinate together with the field element that labels it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Coord {
    pub index: usize,
    pub element: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    m: u32,
    poly: u32,
    /// `antilog[k] = α^k`, `k < 2^m - 1`.
    antilog: Vec<Elem>,
    /// `log[a] = k` with `α^k = a`; entry 0 is unused.
    log: Vec<u32>,
}

/// Builds GF(2^m) with the fixed primitive polynomial for `m`, capped at [`DEFAULT_MAX_DEGREE`].
pub fn make_field(m: u32) -> Result<Field> {
    Field::with_cap(m, DEFAULT_MAX_DEGREE)
}

impl Field {
    pub fn with_cap(m: u32, cap: u32) -> Result<Field> {
        let max = cap.min(16);
        if !(2..=max).contains(&m) {
            return Err(Error::FieldDegree { m, min: 2, max });
        }
        let poly = PRIMITIVE_POLYS
            .iter()
            .find(|(deg, _)| *deg == m)
            .map(|&(_, p)| p)
            .expect("table covers 2..=16");
        Field::from_poly(m, poly)
    }

    /// Builds the field from an explicit defining polynomial, rejecting non-primitive ones.
    pub fn from_poly(m: u32, poly: u32) -> Result<Field> {
        if !(2..=16).contains(&m) || poly >> m != 1 {
            return Err(Error::NotPrimitive { m, poly });
        }
        let order = 1usize << m;
        let mut antilog = Vec::with_capacity(order - 1);
        let mut log = vec![u32::MAX; order];
        let mut x: u32 = 1;
        for k in 0..order - 1 {
            if log[x as usize] != u32::MAX {
                return Err(Error::NotPrimitive { m, poly });
            }
            log[x as usize] = k as u32;
            antilog.push(Elem(x as u16));
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= poly;
            }
        }
        if x != 1 {
            return Err(Error::NotPrimitive { m, poly });
        }
        Ok(Field {
            m,
            poly,
            antilog,
            log,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Number of field elements, equal to the code length `n = 2^m`.
    pub fn order(&self) -> usize {
        1 << self.m
    }

    /// Multiplicative order of α.
    pub fn cycle(&self) -> u32 {
        (self.order() - 1) as u32
    }

    pub fn antilog_table(&self) -> &[Elem] {
        &self.antilog
    }

    pub fn element(&self, bits: u32) -> Result<Elem> {
        if (bits as usize) < self.order() {
            Ok(Elem(bits as u16))
        } else {
            Err(Error::ForeignElement(bits, self.m))
        }
    }

    pub fn alpha_pow(&self, k: u64) -> Elem {
        self.antilog[(k % self.cycle() as u64) as usize]
    }

    /// Discrete log base α; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(a.0 ^ b.0)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match (self.log(a), self.log(b)) {
            (Some(x), Some(y)) => self.alpha_pow(x as u64 + y as u64),
            _ => Elem::ZERO,
        }
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        match self.log(a) {
            None => Elem::ZERO,
            Some(x) => self.alpha_pow(x as u64 * (k % self.cycle() as u64)),
        }
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.pow(a, 2)
    }

    pub fn cube(&self, a: Elem) -> Elem {
        self.pow(a, 3)
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        self.log(a)
            .map(|x| self.alpha_pow((self.cycle() - x) as u64))
    }

    /// Sum of an iterator of elements.
    pub fn sum(&self, it: impl IntoIterator<Item = Elem>) -> Elem {
        Elem(it.into_iter().fold(0, |acc, e| acc ^ e.0))
    }

    /// `[0, α^0, α^1, …, α^(2^m − 2)]`; position `i` is coordinate `i` of every word.
    pub fn coordinate_order(&self) -> Vec<Elem> {
        std::iter::once(Elem::ZERO)
            .chain(self.antilog.iter().copied())
            .collect()
    }

    pub fn coords(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.order()).map(|index| Coord {
            index,
            element: self.element_at(index),
        })
    }

    pub fn element_at(&self, index: usize) -> Elem {
        if index == 0 {
            Elem::ZERO
        } else {
            self.antilog[index - 1]
        }
    }

    pub fn coord_of(&self, a: Elem) -> usize {
        self.log(a).map_or(0, |k| k as usize + 1)
    }

    /// `"0"` for zero, otherwise `"a^k"`.
    pub fn power_label(&self, a: Elem) -> String {
        match self.log(a) {
            None => "0".to_string(),
            Some(k) => format!("a^{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(f: &Field) -> Vec<Elem> {
        f.coordinate_order()
    }

    #[test]
    fn antilog_sequence_m3() {
        let f = make_field(3).unwrap();
        let seq: Vec<u16> = f.antilog_table().iter().map(|e| e.bits()).collect();
        assert_eq!(seq, vec![1, 2, 4, 3, 6, 7, 5]);
        assert_eq!(f.alpha_pow(7), Elem::ONE);
    }

    #[test]
    fn antilog_sequence_by_repeated_multiplication() {
        // independent route: shift-and-reduce multiplication by x
        for (m, poly) in [(3u32, 0b1011u32), (4, 0b10011)] {
            let f = make_field(m).unwrap();
            let mut x = 1u32;
            for k in 0..f.cycle() {
                assert_eq!(f.alpha_pow(k as u64).bits() as u32, x);
                x <<= 1;
                if x >> m & 1 == 1 {
                    x ^= poly;
                }
            }
            assert_eq!(x, 1);
        }
    }

    #[test]
    fn cardinality_m4() {
        let f = make_field(4).unwrap();
        assert_eq!(f.order(), 16);
        assert_eq!(f.antilog_table().len(), 15);
        assert!(f.antilog_table().iter().all(|e| !e.is_zero()));
    }

    #[test]
    fn degree_bounds() {
        assert!(matches!(make_field(1), Err(Error::FieldDegree { .. })));
        assert!(matches!(make_field(7), Err(Error::FieldDegree { .. })));
        assert!(Field::with_cap(8, 8).is_ok());
        assert!(matches!(
            Field::from_poly(4, 0b11111),
            Err(Error::NotPrimitive { .. })
        ));
    }

    #[test]
    fn small_ops() {
        let f = make_field(3).unwrap();
        assert_eq!(f.mul(f.alpha_pow(2), f.alpha_pow(5)), Elem::ONE);
        assert_eq!(f.cube(Elem::ZERO), Elem::ZERO);
        assert_eq!(f.pow(Elem::ZERO, 0), Elem::ONE);
        for a in all(&f) {
            assert_eq!(f.add(a, a), Elem::ZERO);
        }
    }

    #[test]
    fn coordinate_order_layout() {
        let f3 = make_field(3).unwrap();
        let order = f3.coordinate_order();
        assert_eq!(order.len(), 8);
        assert_eq!(&order[..3], &[Elem::ZERO, Elem::ONE, f3.alpha_pow(1)]);
        assert_eq!(f3.coord_of(f3.alpha_pow(6)), 7);
        let f4 = make_field(4).unwrap();
        assert_eq!(f4.coordinate_order().len(), 16);
        assert_eq!(f4.element_at(1), Elem::ONE);
        for c in f4.coords() {
            assert_eq!(f4.coord_of(c.element), c.index);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for m in [3, 4] {
            let f = make_field(m).unwrap();
            let els = all(&f);
            for &a in &els {
                if let Some(inv) = f.inv(a) {
                    assert_eq!(f.mul(a, inv), Elem::ONE);
                }
                assert_eq!(f.mul(f.cube(a), a), f.pow(a, 4));
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let s = f.add(a, b);
                    assert_eq!(f.square(s), f.add(f.square(a), f.square(b)));
                    if let (Some(x), Some(y)) = (f.log(a), f.log(b)) {
                        assert_eq!(f.log(f.mul(a, b)), Some((x + y) % f.cycle()));
                    }
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn element_and_cube_sums_vanish() {
        for m in 3..=6 {
            let f = make_field(m).unwrap();
            let els = all(&f);
            assert_eq!(f.sum(els.iter().copied()), Elem::ZERO);
            assert_eq!(f.sum(els.iter().map(|&x| f.cube(x))), Elem::ZERO);
        }
        // in GF(4) every nonzero cube is 1, so the cube sum is 1 + 1 + 1
        let f = make_field(2).unwrap();
        assert_eq!(f.sum(all(&f).iter().copied()), Elem::ZERO);
        assert_eq!(f.sum(all(&f).iter().map(|&x| f.cube(x))), Elem::ONE);
    }
}
