//! Fixed-length bit vectors over GF(2).
//!
//! Bit `i` lives in word `i / 64` at position `i % 64`. The hex form reads
//! like an unsigned integer whose least significant bit is index 0, padded to
//! `ceil(len / 4)` digits.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(len);
        for i in indices {
            if i >= len {
                return Err(Error::InvalidArgument(format!(
                    "bit index {i} out of range for length {len}"
                )));
            }
            v.toggle(i);
        }
        Ok(v)
    }

    /// Low `len` bits of `mask`; `len` must not exceed 64.
    pub fn from_u64(len: usize, mask: u64) -> Self {
        assert!(len <= WORD);
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
            v.words[0] = mask & keep;
        }
        v
    }

    /// The vector as a `u64` mask, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        if self.len > WORD {
            return None;
        }
        Some(self.words.first().copied().unwrap_or(0))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// Hamming weight.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4).max(1);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let bit = d * 4;
            let word = self.words.get(bit / WORD).copied().unwrap_or(0);
            let nibble = (word >> (bit % WORD)) & 0xf;
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }

    /// Parses the hex form; an optional `0x` prefix is accepted and set bits
    /// beyond `len` are rejected.
    pub fn from_hex(len: usize, hex: &str) -> Result<Self> {
        let s = hex.trim();
        let s = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .unwrap_or(s);
        if s.is_empty() {
            return Err(Error::InvalidArgument("empty hex string".into()));
        }
        let mut v = Self::zeros(len);
        for (d, c) in s.chars().rev().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::InvalidArgument(format!("invalid hex digit {c:?}")))?;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let i = d * 4 + b;
                    if i >= len {
                        return Err(Error::InvalidArgument(format!(
                            "hex value sets bit {i} beyond length {len}"
                        )));
                    }
                    v.set(i, true);
                }
            }
        }
        Ok(v)
    }

    fn check_len(&self, other: &Self) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        self.check_len(rhs);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[{}](", self.len)?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}
