//! Noncommuting power series in `X_1..X_n` with integer coefficients,
//! truncated above total degree `q`.
//!
//! Storage is dense: every word of length `<= q` has a slot, words of equal
//! length ordered lexicographically. Products cost `O(q n^q)` multiplications.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact ring coefficients. Fixed-width types report overflow instead of wrapping.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + CheckedAdd + CheckedSub + CheckedMul + Send + Sync
{
    fn to_bigint(&self) -> BigInt;
}

impl Coefficient for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coefficient for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<C = BigInt> {
    n: usize,
    q: usize,
    coeffs: Vec<C>,
}

fn pow(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

/// First slot of words of length `len`.
fn offset(n: usize, len: usize) -> usize {
    (0..len).map(|l| pow(n, l)).sum()
}

fn add_into<C: Coefficient>(slot: &mut C, v: &C) -> Result<()> {
    *slot = slot.checked_add(v).ok_or(Error::Overflow)?;
    Ok(())
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(n: usize, q: usize) -> Self {
        TruncatedSeries {
            n,
            q,
            coeffs: vec![C::zero(); offset(n, q + 1)],
        }
    }

    pub fn one(n: usize, q: usize) -> Self {
        let mut s = Self::zero(n, q);
        s.coeffs[0] = C::one();
        s
    }

    /// `1 + X_i` (0-based variable), the image of the `i`-th meridian.
    pub fn generator(n: usize, q: usize, i: usize) -> Self {
        let mut s = Self::one(n, q);
        if q >= 1 {
            s.coeffs[1 + i] = C::one();
        }
        s
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn degree_cap(&self) -> usize {
        self.q
    }

    fn index(&self, word: &[usize]) -> Option<usize> {
        if word.len() > self.q || word.iter().any(|&l| l >= self.n) {
            return None;
        }
        let v = word.iter().fold(0usize, |acc, &l| acc * self.n + l);
        Some(offset(self.n, word.len()) + v)
    }

    /// Coefficient of a word of 0-based letters; zero beyond the cap.
    pub fn coeff(&self, word: &[usize]) -> C {
        self.index(word).map(|i| self.coeffs[i].clone()).unwrap_or_else(C::zero)
    }

    pub fn set(&mut self, word: &[usize], c: C) -> Result<()> {
        let i = self
            .index(word)
            .ok_or_else(|| Error::SeriesMismatch(format!("word {word:?} outside n={} q={}", self.n, self.q)))?;
        self.coeffs[i] = c;
        Ok(())
    }

    pub fn constant(&self) -> &C {
        &self.coeffs[0]
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.q != other.q {
            return Err(Error::SeriesMismatch(format!(
                "(n={}, q={}) vs (n={}, q={})",
                self.n, self.q, other.n, other.q
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            add_into(a, b)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.checked_sub(b).ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    fn scale(&self, c: &C) -> Result<Self> {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = a.checked_mul(c).ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    /// Concatenation product, dropping words longer than the cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let (n, q) = (self.n, self.q);
        let mut out = Self::zero(n, q);
        for la in 0..=q {
            let (oa, na) = (offset(n, la), pow(n, la));
            for lb in 0..=(q - la) {
                let (ob, nb) = (offset(n, lb), pow(n, lb));
                let oc = offset(n, la + lb);
                for a in 0..na {
                    let ca = &self.coeffs[oa + a];
                    if ca.is_zero() {
                        continue;
                    }
                    let base = oc + a * nb;
                    for b in 0..nb {
                        let cb = &other.coeffs[ob + b];
                        if cb.is_zero() {
                            continue;
                        }
                        let p = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                        add_into(&mut out.coeffs[base + b], &p)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Inverse of a series with constant term `±1`, by the geometric series
    /// `c (1 + y + y^2 + ... + y^q)` with `y = 1 - c s`.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.coeffs[0].clone();
        let minus_one = C::zero().checked_sub(&C::one()).ok_or(Error::Overflow)?;
        if c != C::one() && c != minus_one {
            return Err(Error::NotUnit(c.to_string()));
        }
        let one = Self::one(self.n, self.q);
        let y = one.sub(&self.scale(&c)?)?;
        // Horner: 1 + y(1 + y(1 + ...))
        let mut acc = one.clone();
        for _ in 0..self.q {
            acc = one.add(&y.mul(&acc)?)?;
        }
        acc.scale(&c)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = Self::one(self.n, self.q);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// Nonzero terms, ordered by word length then lexicographically.
    pub fn terms(&self) -> Vec<(Vec<usize>, C)> {
        let mut out = Vec::new();
        for len in 0..=self.q {
            let o = offset(self.n, len);
            for v in 0..pow(self.n, len) {
                let c = &self.coeffs[o + v];
                if c.is_zero() {
                    continue;
                }
                let mut word = vec![0; len];
                let mut x = v;
                for slot in word.iter_mut().rev() {
                    *slot = x % self.n;
                    x /= self.n;
                }
                out.push((word, c.clone()));
            }
        }
        out
    }

    pub fn to_big(&self) -> TruncatedSeries<BigInt> {
        TruncatedSeries {
            n: self.n,
            q: self.q,
            coeffs: self.coeffs.iter().map(|c| c.to_bigint()).collect(),
        }
    }
}

impl TruncatedSeries<BigInt> {
    /// Narrows to `i64` when every coefficient fits.
    pub fn to_small(&self) -> Option<TruncatedSeries<i64>> {
        let coeffs = self.coeffs.iter().map(|c| c.to_i64()).collect::<Option<Vec<_>>>()?;
        Some(TruncatedSeries {
            n: self.n,
            q: self.q,
            coeffs,
        })
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

/// `word:coeff` pairs with 1-based letters, sorted lexicographically as
/// strings; the empty word prints as `e`.
impl<C: Coefficient> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "." } else { "" };
        let mut items: Vec<(String, String)> = self
            .terms()
            .into_iter()
            .map(|(w, c)| {
                let key = if w.is_empty() {
                    "e".to_string()
                } else {
                    w.iter().map(|l| (l + 1).to_string()).collect::<Vec<_>>().join(sep)
                };
                (key, c.to_string())
            })
            .collect();
        items.sort();
        let parts: Vec<String> = items.into_iter().map(|(k, c)| format!("{k}:{c}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}
