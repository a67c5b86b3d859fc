//! Preimages of periodic configurations under 1D cellular automata.
//!
//! Membership of a periodic configuration `x` (period `p`) in the image of a
//! rule with memory set `[-l, r]` is decided on a finite graph whose nodes are
//! pairs `(i mod p, u)`, `u` a word of length `l + r`. The node `(i, u)`
//! stands for a preimage `y` with `u = y[i-l ..= i+r-1]`. An edge labelled `s`
//! extends `u` by `s = y[i+r]`; it exists iff the rule maps the window
//! `u s = y[i-l ..= i+r]` to `x[i]`, and it leads to `(i+1, (u s)[1..])`.
//! Bi-infinite paths are exactly the preimages, so a preimage exists iff the
//! graph has a cycle.

use std::collections::VecDeque;

use crate::config::PeriodicConfig;
use crate::error::{Error, Result};
use crate::rule::{decode_word, word_count, RuleTable};

/// Largest candidate set `periodic_preimages` will screen.
pub const MAX_PREIMAGE_CANDIDATES: usize = 1 << 24;

/// Smallest `d` dividing the stored period such that the cells are `d`-periodic.
pub fn least_period(x: &PeriodicConfig) -> usize {
    let cells = x.cells();
    let p = cells.len();
    (1..=p).filter(|d| p.is_multiple_of(*d)).find(|&d| (d..p).all(|i| cells[i] == cells[i - d])).unwrap_or(p)
}

fn check_alphabet(rule: &RuleTable, x: &PeriodicConfig) -> Result<()> {
    if rule.alphabet_size() != x.alphabet_size() {
        return Err(Error::AlphabetMismatch { left: rule.alphabet_size(), right: x.alphabet_size() });
    }
    Ok(())
}

/// The preimage graph of a periodic configuration.
#[derive(Clone, Debug)]
pub struct PreimageGraph {
    period: usize,
    overlaps: usize,
    // CSR adjacency
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl PreimageGraph {
    pub fn new(rule: &RuleTable, x: &PeriodicConfig) -> Result<Self> {
        check_alphabet(rule, x)?;
        let q = rule.alphabet_size();
        let overlap_len = rule.left() + rule.right();
        let overlaps = word_count(q, overlap_len)?;
        let period = x.period();
        let nodes = period
            .checked_mul(overlaps)
            .filter(|&n| n <= crate::rule::MAX_TABLE_LEN)
            .ok_or(Error::TableTooLarge { q, width: overlap_len })?;
        let mut offsets = Vec::with_capacity(nodes + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for i in 0..period {
            let next = (i + 1) % period;
            let want = x.cells()[i];
            for u in 0..overlaps {
                for s in 0..q {
                    let window = u * q + s;
                    if rule.output(window) == want {
                        targets.push(next * overlaps + window % overlaps);
                    }
                }
                offsets.push(targets.len());
            }
        }
        Ok(Self { period, overlaps, offsets, targets })
    }

    pub fn node_count(&self) -> usize {
        self.period * self.overlaps
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    /// `(position residue, overlap word index)` of a node id.
    pub fn node(&self, id: usize) -> (usize, usize) {
        (id / self.overlaps, id % self.overlaps)
    }

    pub fn successors(&self, id: usize) -> &[usize] {
        &self.targets[self.offsets[id]..self.offsets[id + 1]]
    }

    /// Repeatedly removes nodes without incoming or outgoing edges; the
    /// graph has a cycle iff something survives.
    pub fn has_cycle(&self) -> bool {
        let n = self.node_count();
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, out) in outdeg.iter_mut().enumerate() {
            for &w in self.successors(v) {
                indeg[w] += 1;
                *out += 1;
                preds[w].push(v);
            }
        }
        let mut removed = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
        let mut alive = n;
        while let Some(v) = queue.pop_front() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            alive -= 1;
            for &w in self.successors(v) {
                if !removed[w] {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        queue.push_back(w);
                    }
                }
            }
            for &u in &preds[v] {
                if !removed[u] {
                    outdeg[u] -= 1;
                    if outdeg[u] == 0 {
                        queue.push_back(u);
                    }
                }
            }
        }
        alive > 0
    }
}

/// Whether some configuration of `A^Z` maps onto `x`.
pub fn has_preimage(rule: &RuleTable, x: &PeriodicConfig) -> Result<bool> {
    Ok(PreimageGraph::new(rule, x)?.has_cycle())
}

/// All `p`-periodic `y` with `rule(y) = x`, in lexicographic order of their
/// stored cells.
pub fn periodic_preimages(rule: &RuleTable, x: &PeriodicConfig, p: usize) -> Result<Vec<PeriodicConfig>> {
    check_alphabet(rule, x)?;
    let target = x.with_period(p)?;
    let q = rule.alphabet_size();
    let candidates = word_count(q, p).ok().filter(|&c| c <= MAX_PREIMAGE_CANDIDATES).ok_or_else(|| {
        Error::CapExceeded { what: format!("{q}^{p} periodic candidates"), cap: MAX_PREIMAGE_CANDIDATES as u64 }
    })?;
    let mut cells = vec![0u8; p];
    let mut found = Vec::new();
    for index in 0..candidates {
        decode_word(index, q, &mut cells);
        let y = PeriodicConfig::from_cells_unchecked(q, cells.clone());
        if rule.apply_periodic(&y)? == target {
            found.push(y);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eca(n: u32) -> RuleTable {
        RuleTable::from_wolfram(n).unwrap()
    }

    fn cfg(s: &str) -> PeriodicConfig {
        PeriodicConfig::parse(2, s).unwrap()
    }

    #[test]
    fn least_period_examples() {
        assert_eq!(least_period(&cfg("0101")), 2);
        assert_eq!(least_period(&cfg("1")), 1);
        assert_eq!(least_period(&cfg("011011")), 3);
        assert_eq!(least_period(&cfg("0110")), 4);
    }

    #[test]
    fn has_preimage_examples() {
        assert!(has_preimage(&eca(110), &cfg("1")).unwrap());
        assert!(has_preimage(&eca(204), &cfg("0010111")).unwrap());
        assert!(!has_preimage(&eca(0), &cfg("1")).unwrap());
        assert!(has_preimage(&eca(0), &cfg("0")).unwrap());
        assert!(has_preimage(&eca(0), &PeriodicConfig::parse(3, "1").unwrap()).is_err());
    }

    #[test]
    fn graph_shape() {
        let g = PreimageGraph::new(&eca(110), &cfg("011")).unwrap();
        assert_eq!(g.node_count(), 12);
        for v in 0..g.node_count() {
            for &w in g.successors(v) {
                assert_eq!(g.node(w).0, (g.node(v).0 + 1) % 3);
            }
        }
        // every window contributes exactly one edge for exactly one target bit
        let total = PreimageGraph::new(&eca(110), &cfg("0")).unwrap().edge_count()
            + PreimageGraph::new(&eca(110), &cfg("1")).unwrap().edge_count();
        assert_eq!(total, 8);
    }

    #[test]
    fn periodic_preimage_examples() {
        assert!(periodic_preimages(&eca(110), &cfg("1"), 1).unwrap().is_empty());
        assert_eq!(periodic_preimages(&eca(110), &cfg("1"), 2).unwrap(), vec![cfg("01"), cfg("10")]);
        assert_eq!(periodic_preimages(&eca(204), &cfg("01"), 2).unwrap(), vec![cfg("01")]);
        assert!(matches!(periodic_preimages(&eca(204), &cfg("01"), 3), Err(Error::PeriodMismatch { .. })));
        assert!(periodic_preimages(&eca(204), &cfg("01"), 30).is_err());
    }

    #[test]
    fn zero_width_overlap() {
        // radius-0 rule: graph has p nodes
        let c = eca(51).minimal_memory();
        let g = PreimageGraph::new(&c, &cfg("01")).unwrap();
        assert_eq!(g.node_count(), 2);
        assert!(g.has_cycle());
        let zero = RuleTable::new(2, 0, 0, vec![0, 0]).unwrap();
        assert!(!has_preimage(&zero, &cfg("01")).unwrap());
    }
}
