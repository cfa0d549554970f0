use std::fmt;

use crate::error::{Error, Result};

/// Polynomial in λ with GF(2) coefficients. Word `k`, bit `b` holds the
/// coefficient of λ^(64k + b). Trailing zero words are never stored, so the
/// zero polynomial has no words and derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The monomial λ^d.
    pub fn monomial(d: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(d, true);
        p
    }

    /// Coefficients of λ^0, λ^1, ... packed into one word.
    pub fn from_u64(bits: u64) -> Self {
        let mut p = Self { words: vec![bits] };
        p.normalize();
        p
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.set_coeff(e, !p.coeff(e));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        let k = i / 64;
        if k >= self.words.len() {
            if !value {
                return;
            }
            self.words.resize(k + 1, 0);
        }
        if value {
            self.words[k] |= 1 << (i % 64);
        } else {
            self.words[k] &= !(1 << (i % 64));
        }
        self.normalize();
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, &w) in self.words.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                out.push(k * 64 + rest.trailing_zeros() as usize);
                rest &= rest - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(&short.words) {
            *a ^= b;
        }
        let mut p = Poly2 { words };
        p.normalize();
        p
    }

    /// Multiplication by λ^s.
    pub fn shl(&self, s: usize) -> Poly2 {
        if self.is_zero() {
            return Poly2::zero();
        }
        let (word_shift, bit_shift) = (s / 64, s % 64);
        let mut words = vec![0u64; self.words.len() + word_shift + 1];
        for (k, &w) in self.words.iter().enumerate() {
            words[k + word_shift] ^= w << bit_shift;
            if bit_shift != 0 {
                words[k + word_shift + 1] ^= w >> (64 - bit_shift);
            }
        }
        let mut p = Poly2 { words };
        p.normalize();
        p
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut acc = Poly2::zero();
        for e in other.exponents() {
            acc = acc.add(&self.shl(e));
        }
        acc
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly2) -> Result<(Poly2, Poly2)> {
        let Some(dd) = d.degree() else {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        };
        let mut q = Poly2::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let s = rd - dd;
            q.set_coeff(s, true);
            r = r.add(&d.shl(s));
        }
        Ok((q, r))
    }

    pub fn rem(&self, d: &Poly2) -> Result<Poly2> {
        Ok(self.div_rem(d)?.1)
    }

    /// Greatest common divisor by Euclid's algorithm. Every nonzero
    /// polynomial over GF(2) is already monic, so no normalisation step is
    /// needed.
    pub fn gcd(&self, other: &Poly2) -> Result<Poly2> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomials);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// The substitution λ ↦ 1 + λ, evaluated by Horner's rule.
    pub fn shift_by_one(&self) -> Poly2 {
        let mut acc = Poly2::zero();
        let Some(deg) = self.degree() else {
            return acc;
        };
        for i in (0..=deg).rev() {
            // acc·(1 + λ)
            acc = acc.add(&acc.shl(1));
            if self.coeff(i) {
                acc = acc.add(&Poly2::one());
            }
        }
        acc
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

/// The binary Chebyshev polynomial: `p_0 = 1`, `p_1 = λ`,
/// `p_m = λ·p_{m-1} + p_{m-2}` with coefficients reduced mod 2.
pub fn chebyshev2(m: usize) -> Poly2 {
    let mut prev = Poly2::one();
    if m == 0 {
        return prev;
    }
    let mut cur = Poly2::monomial(1);
    for _ in 2..=m {
        let next = cur.shl(1).add(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "λ".to_string(),
                _ => format!("λ^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> Poly2 {
        Poly2::from_exponents(exps)
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Poly2::zero().degree(), None);
        assert_eq!(Poly2::one().degree(), Some(0));
        assert_eq!(Poly2::monomial(130).degree(), Some(130));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[1]).gcd(&p(&[0, 1])).unwrap(), Poly2::one());
        // λ²+1 = (λ+1)² over GF(2)
        assert_eq!(p(&[0, 1]).mul(&p(&[0, 1])), p(&[0, 2]));
        assert_eq!(p(&[0, 2]).gcd(&p(&[0, 1])).unwrap(), p(&[0, 1]));
        let q = p(&[0, 3, 4]);
        assert_eq!(q.gcd(&q).unwrap(), q);
        assert_eq!(Poly2::zero().gcd(&q).unwrap(), q);
        assert_eq!(Poly2::zero().gcd(&Poly2::zero()), Err(Error::ZeroPolynomials));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Poly2::one().shift_by_one(), Poly2::one());
        assert_eq!(p(&[1]).shift_by_one(), p(&[0, 1]));
        assert_eq!(p(&[0, 2]).shift_by_one(), p(&[2]));
        assert_eq!(Poly2::zero().shift_by_one(), Poly2::zero());
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev2(0), Poly2::one());
        assert_eq!(chebyshev2(1), p(&[1]));
        assert_eq!(chebyshev2(2), p(&[0, 2]));
        // λ·(λ²+1) + λ = λ³
        assert_eq!(chebyshev2(3), p(&[3]));
    }

    #[test]
    fn chebyshev_degree_is_index() {
        for m in 0..=64 {
            assert_eq!(chebyshev2(m).degree(), Some(m));
        }
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[0, 5, 9, 70]);
        let d = p(&[1, 3, 4]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert!(r.degree().unwrap_or(0) < 4);
        assert_eq!(q.mul(&d).add(&r), a);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 1, 3]).to_string(), "λ^3 + λ + 1");
        assert_eq!(Poly2::zero().to_string(), "0");
    }
}
