use std::fmt;

use crate::error::{Error, Result};

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A spatially periodic configuration of `Z`, stored as one period of cells.
///
/// The stored period is kept as given; use [`least_period`](Self::least_period)
/// for the reduced one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicConfig {
    q: usize,
    cells: Vec<u8>,
}

impl PeriodicConfig {
    pub fn new(q: usize, cells: Vec<u8>) -> Result<Self> {
        check_alphabet(q)?;
        if cells.is_empty() {
            return Err(Error::EmptyConfig);
        }
        if let Some(&bad) = cells.iter().find(|&&c| c as usize >= q) {
            return Err(Error::SymbolOutOfRange { symbol: bad as u32, q });
        }
        Ok(Self { q, cells })
    }

    pub fn constant(q: usize, symbol: u8) -> Result<Self> {
        Self::new(q, vec![symbol])
    }

    /// Parses cells written as digits (`0-9`, then `a-z`), e.g. `"0110"`.
    pub fn parse(q: usize, text: &str) -> Result<Self> {
        let cells = text
            .bytes()
            .map(|b| {
                DIGITS
                    .iter()
                    .position(|&d| d == b.to_ascii_lowercase())
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("invalid cell symbol {:?}", b as char)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, cells)
    }

    pub(crate) fn from_cells_unchecked(q: usize, cells: Vec<u8>) -> Self {
        debug_assert!(!cells.is_empty() && cells.iter().all(|&c| (c as usize) < q));
        Self { q, cells }
    }

    pub fn alphabet_size(&self) -> usize {
        self.q
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// The stored period `p`.
    pub fn period(&self) -> usize {
        self.cells.len()
    }

    /// Cell at an arbitrary integer position.
    pub fn at(&self, i: i64) -> u8 {
        let p = self.cells.len() as i64;
        self.cells[i.rem_euclid(p) as usize]
    }

    pub fn least_period(&self) -> usize {
        crate::symbolic::least_period(self)
    }

    /// The same configuration stored with its least period.
    pub fn reduced(&self) -> Self {
        let d = self.least_period();
        Self::from_cells_unchecked(self.q, self.cells[..d].to_vec())
    }

    /// The same configuration stored with period `k * p`.
    pub fn repeated(&self, k: usize) -> Self {
        let cells = self.cells.iter().copied().cycle().take(k * self.cells.len()).collect();
        Self::from_cells_unchecked(self.q, cells)
    }

    /// Stores this configuration with the stored period `p`, which must be a
    /// multiple of the least period.
    pub fn with_period(&self, p: usize) -> Result<Self> {
        let least = self.least_period();
        if p == 0 || !p.is_multiple_of(least) {
            return Err(Error::PeriodMismatch { period: p, least });
        }
        let cells = (0..p).map(|i| self.cells[i % self.cells.len()]).collect();
        Ok(Self::from_cells_unchecked(self.q, cells))
    }

    /// Spatial reflection through the origin (up to a shift).
    pub fn reversed(&self) -> Self {
        let mut cells = self.cells.clone();
        cells.reverse();
        Self::from_cells_unchecked(self.q, cells)
    }

    /// Bitwise complement; binary alphabets only.
    pub fn complemented(&self) -> Result<Self> {
        if self.q != 2 {
            return Err(Error::NotBinary(self.q));
        }
        Ok(Self::from_cells_unchecked(self.q, self.cells.iter().map(|c| 1 - c).collect()))
    }

    pub fn is_constant(&self) -> bool {
        self.cells.iter().all(|&c| c == self.cells[0])
    }
}

impl fmt::Display for PeriodicConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.cells {
            match DIGITS.get(c as usize) {
                Some(&d) => write!(f, "{}", d as char)?,
                None => write!(f, "[{c}]")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn check_alphabet(q: usize) -> Result<()> {
    if (2..=256).contains(&q) {
        Ok(())
    } else {
        Err(Error::InvalidAlphabet(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let x = PeriodicConfig::parse(2, "0110").unwrap();
        assert_eq!(x.cells(), &[0, 1, 1, 0]);
        assert_eq!(x.to_string(), "0110");
        assert!(PeriodicConfig::parse(2, "012").is_err());
        assert_eq!(PeriodicConfig::parse(2, ""), Err(Error::EmptyConfig));
    }

    #[test]
    fn period_manipulation() {
        let x = PeriodicConfig::parse(2, "010101").unwrap();
        assert_eq!(x.period(), 6);
        assert_eq!(x.reduced().to_string(), "01");
        assert_eq!(x.reduced().with_period(4).unwrap().to_string(), "0101");
        assert!(x.with_period(3).is_err());
        assert_eq!(x.at(-1), 1);
        assert_eq!(x.at(7), 1);
    }

    #[test]
    fn complement_requires_binary() {
        let x = PeriodicConfig::parse(3, "012").unwrap();
        assert_eq!(x.complemented(), Err(Error::NotBinary(3)));
        let y = PeriodicConfig::parse(2, "001").unwrap();
        assert_eq!(y.complemented().unwrap().to_string(), "110");
    }
}
