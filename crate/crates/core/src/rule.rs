//! One-dimensional cellular automata given by explicit local-rule tables.
//!
//! A [`RuleTable`] over the alphabet `{0, .., q-1}` has the memory set
//! `[-left, right]`. Its table is indexed by the window read as a base-`q`
//! integer, leftmost cell most significant. For binary radius-1 rules this
//! makes the table entry at index `i` equal to bit `i` of the Wolfram number.
//!
//! Composition follows the left-to-right convention: `compose(a, b)` applies
//! `a` first and then `b`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::config::{check_alphabet, PeriodicConfig};
use crate::error::{Error, Result};

/// Largest supported table, in entries.
pub const MAX_TABLE_LEN: usize = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuleTable {
    q: usize,
    left: usize,
    right: usize,
    table: Vec<u8>,
}

/// Number of words of length `width` over `q` symbols, if within the cap.
pub(crate) fn word_count(q: usize, width: usize) -> Result<usize> {
    let mut n: usize = 1;
    for _ in 0..width {
        n = n.checked_mul(q).filter(|&n| n <= MAX_TABLE_LEN).ok_or(Error::TableTooLarge { q, width })?;
    }
    Ok(n)
}

/// Writes the base-`q` digits of `index` into `buf`, most significant first.
#[inline]
pub(crate) fn decode_word(mut index: usize, q: usize, buf: &mut [u8]) {
    for slot in buf.iter_mut().rev() {
        *slot = (index % q) as u8;
        index /= q;
    }
}

#[inline]
pub(crate) fn encode_word(word: &[u8], q: usize) -> usize {
    word.iter().fold(0, |acc, &d| acc * q + d as usize)
}

impl RuleTable {
    pub fn new(q: usize, left: usize, right: usize, table: Vec<u8>) -> Result<Self> {
        check_alphabet(q)?;
        let expected = word_count(q, left + right + 1)?;
        if table.len() != expected {
            return Err(Error::TableLength { expected, actual: table.len() });
        }
        if let Some(&bad) = table.iter().find(|&&s| s as usize >= q) {
            return Err(Error::SymbolOutOfRange { symbol: bad as u32, q });
        }
        Ok(Self { q, left, right, table })
    }

    /// Builds a table by evaluating `local` on every window.
    pub fn from_fn(q: usize, left: usize, right: usize, mut local: impl FnMut(&[u8]) -> u8) -> Result<Self> {
        check_alphabet(q)?;
        let width = left + right + 1;
        let len = word_count(q, width)?;
        let mut buf = vec![0u8; width];
        let mut table = Vec::with_capacity(len);
        for index in 0..len {
            decode_word(index, q, &mut buf);
            let out = local(&buf);
            if out as usize >= q {
                return Err(Error::SymbolOutOfRange { symbol: out as u32, q });
            }
            table.push(out);
        }
        Ok(Self { q, left, right, table })
    }

    /// The elementary rule with the given Wolfram number.
    pub fn from_wolfram(number: u32) -> Result<Self> {
        if number > 255 {
            return Err(Error::RuleOutOfRange(number));
        }
        let table = (0..8).map(|i| ((number >> i) & 1) as u8).collect();
        Ok(Self { q: 2, left: 1, right: 1, table })
    }

    /// The Wolfram number, if this is a binary rule whose minimal memory set
    /// fits inside `[-1, 1]`.
    pub fn wolfram_number(&self) -> Option<u8> {
        if self.q != 2 {
            return None;
        }
        let m = self.minimal_memory();
        if m.left > 1 || m.right > 1 {
            return None;
        }
        let padded = m.padded(1, 1).ok()?;
        Some(padded.table.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (b << i)))
    }

    /// Identity rule with memory set `{0}`.
    pub fn identity(q: usize) -> Result<Self> {
        Self::from_fn(q, 0, 0, |w| w[0])
    }

    pub fn alphabet_size(&self) -> usize {
        self.q
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    /// Window length `left + right + 1`.
    pub fn width(&self) -> usize {
        self.left + self.right + 1
    }

    /// Table entries in ascending window order.
    pub fn table(&self) -> &[u8] {
        &self.table
    }

    #[inline]
    pub fn output(&self, index: usize) -> u8 {
        self.table[index]
    }

    /// Evaluates the local rule on a window of length [`width`](Self::width).
    #[inline]
    pub fn lookup(&self, window: &[u8]) -> u8 {
        debug_assert_eq!(window.len(), self.width());
        self.table[encode_word(window, self.q)]
    }

    fn check_same_alphabet(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::AlphabetMismatch { left: self.q, right: other.q });
        }
        Ok(())
    }

    /// The same CA on the larger window `[-left, right]`.
    pub fn padded(&self, left: usize, right: usize) -> Result<Self> {
        if left < self.left || right < self.right {
            return Err(Error::InvalidArgument(format!(
                "cannot pad [-{}, {}] to [-{left}, {right}]",
                self.left, self.right
            )));
        }
        if left == self.left && right == self.right {
            return Ok(self.clone());
        }
        let offset = left - self.left;
        let width = self.width();
        Self::from_fn(self.q, left, right, |w| self.lookup(&w[offset..offset + width]))
    }

    /// Applies the CA to a periodic configuration; the stored period is kept.
    pub fn apply_periodic(&self, x: &PeriodicConfig) -> Result<PeriodicConfig> {
        if x.alphabet_size() != self.q {
            return Err(Error::AlphabetMismatch { left: self.q, right: x.alphabet_size() });
        }
        let cells = x.cells();
        let p = cells.len();
        let width = self.width();
        let mut window = vec![0u8; width];
        let out = (0..p)
            .map(|i| {
                for (j, slot) in window.iter_mut().enumerate() {
                    // position i - left + j, taken mod p
                    let pos = (i + j + p * (self.left / p + 1) - self.left) % p;
                    *slot = cells[pos];
                }
                self.lookup(&window)
            })
            .collect();
        Ok(PeriodicConfig::from_cells_unchecked(self.q, out))
    }

    /// `a` then `b`, on the window `[-(l_a + l_b), r_a + r_b]`.
    pub fn compose(&self, then: &Self) -> Result<Self> {
        self.check_same_alphabet(then)?;
        let left = self.left + then.left;
        let right = self.right + then.right;
        let inner_width = self.width();
        let mid_width = then.width();
        let mut mid = vec![0u8; mid_width];
        Self::from_fn(self.q, left, right, |w| {
            for (j, slot) in mid.iter_mut().enumerate() {
                *slot = self.lookup(&w[j..j + inner_width]);
            }
            then.lookup(&mid)
        })
    }

    /// Drops outer coordinates the output does not depend on.
    pub fn minimal_memory(&self) -> Self {
        let q = self.q;
        let mut cur = self.clone();
        while cur.left > 0 {
            let block = cur.table.len() / q;
            let dummy = (0..block).all(|rest| (1..q).all(|d| cur.table[d * block + rest] == cur.table[rest]));
            if !dummy {
                break;
            }
            cur.table.truncate(block);
            cur.left -= 1;
        }
        while cur.right > 0 {
            let block = cur.table.len() / q;
            let dummy = (0..block).all(|rest| (1..q).all(|d| cur.table[rest * q + d] == cur.table[rest * q]));
            if !dummy {
                break;
            }
            cur.table = (0..block).map(|rest| cur.table[rest * q]).collect();
            cur.right -= 1;
        }
        cur
    }

    /// Equality as maps on `A^Z`.
    pub fn rules_equal(&self, other: &Self) -> Result<bool> {
        self.check_same_alphabet(other)?;
        let left = self.left.max(other.left);
        let right = self.right.max(other.right);
        Ok(self.padded(left, right)?.table == other.padded(left, right)?.table)
    }

    /// The mirrored rule: reflect, apply, reflect back.
    pub fn mirror(&self) -> Self {
        let width = self.width();
        let mut rev = vec![0u8; width];
        Self::from_fn(self.q, self.right, self.left, |w| {
            for (slot, &c) in rev.iter_mut().zip(w.iter().rev()) {
                *slot = c;
            }
            self.lookup(&rev)
        })
        .expect("mirror keeps the table size")
    }

    /// Complement first, then this rule. Binary only.
    pub fn complement_left(&self) -> Result<Self> {
        if self.q != 2 {
            return Err(Error::NotBinary(self.q));
        }
        // complementing every cell of the window flips every bit of the index
        let mask = self.table.len() - 1;
        let table = (0..self.table.len()).map(|i| self.table[i ^ mask]).collect();
        Ok(Self { table, ..self.clone() })
    }

    /// This rule, then complement. Binary only.
    pub fn complement_right(&self) -> Result<Self> {
        if self.q != 2 {
            return Err(Error::NotBinary(self.q));
        }
        let table = self.table.iter().map(|&b| 1 - b).collect();
        Ok(Self { table, ..self.clone() })
    }

    /// Outputs concatenated in descending input order as one base-`q` number.
    fn packed_value(&self) -> BigUint {
        let q = BigUint::from(self.q);
        self.table.iter().rev().fold(BigUint::from(0u32), |acc, &d| acc * &q + BigUint::from(d))
    }

    fn hex_width(q: usize, entries: usize) -> usize {
        let max = BigUint::from(q).pow(entries as u32) - 1u32;
        (max.bits() as usize).div_ceil(4).max(1)
    }
}

impl fmt::Display for RuleTable {
    /// `eca:<n>` for binary tables on exactly `[-1, 1]`, otherwise
    /// `table:q=<q>,l=<l>,r=<r>,hex=<digits>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 2 && self.left == 1 && self.right == 1 {
            let n = self.table.iter().enumerate().fold(0u32, |acc, (i, &b)| acc | ((b as u32) << i));
            return write!(f, "eca:{n}");
        }
        let width = Self::hex_width(self.q, self.table.len());
        write!(
            f,
            "table:q={},l={},r={},hex={:0>width$}",
            self.q,
            self.left,
            self.right,
            self.packed_value().to_str_radix(16),
        )
    }
}

impl FromStr for RuleTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(num) = s.strip_prefix("eca:") {
            let n: u32 = num.parse().map_err(|_| Error::Parse(format!("invalid elementary rule number {num:?}")))?;
            return Self::from_wolfram(n);
        }
        let body = s.strip_prefix("table:").ok_or_else(|| Error::Parse(format!("unknown rule literal {s:?}")))?;
        let fields: Vec<&str> = body.split(',').collect();
        let [q, l, r, hex] = fields[..] else {
            return Err(Error::Parse(format!("expected q=,l=,r=,hex= in {s:?}")));
        };
        let field = |part: &str, key: &str| -> Result<String> {
            part.strip_prefix(key)
                .map(str::to_owned)
                .ok_or_else(|| Error::Parse(format!("expected field {key:?} in {s:?}")))
        };
        let num = |v: String| -> Result<usize> {
            v.parse().map_err(|_| Error::Parse(format!("invalid number {v:?} in {s:?}")))
        };
        let q = num(field(q, "q=")?)?;
        let left = num(field(l, "l=")?)?;
        let right = num(field(r, "r=")?)?;
        let hex = field(hex, "hex=")?;
        check_alphabet(q)?;
        let entries = word_count(q, left + right + 1)?;
        let expected_width = Self::hex_width(q, entries);
        if hex.len() != expected_width || !hex.bytes().all(|b| matches!(b, b'0'..=b'9' | b'a'..=b'f')) {
            return Err(Error::Parse(format!("hex must be {expected_width} lowercase hex digits, got {hex:?}")));
        }
        let mut value =
            BigUint::parse_bytes(hex.as_bytes(), 16).ok_or_else(|| Error::Parse(format!("invalid hex {hex:?}")))?;
        let qb = BigUint::from(q);
        if value >= qb.pow(entries as u32) {
            return Err(Error::Parse(format!("hex value too large for {entries} base-{q} outputs")));
        }
        let mut table = Vec::with_capacity(entries);
        for _ in 0..entries {
            let digit = &value % &qb;
            table.push(digit.to_u32_digits().first().copied().unwrap_or(0) as u8);
            value /= &qb;
        }
        Self::new(q, left, right, table)
    }
}
