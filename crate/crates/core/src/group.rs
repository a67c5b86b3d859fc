//! Finite groups as Cayley tables, their subgroups and conjugacy classes of
//! subgroups.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Groups must have at most this many elements (subgroups are bitmasks).
pub const MAX_GROUP_ORDER: usize = 64;

/// A finite group on the elements `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table given row by row: `table[a * n + b] = a b`.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self> {
        let name = name.into();
        if order == 0 || order > MAX_GROUP_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} outside 1..={MAX_GROUP_ORDER}")));
        }
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!("expected {} entries, got {}", order * order, table.len())));
        }
        if let Some(&bad) = table.iter().find(|&&e| e >= order) {
            return Err(Error::InvalidGroup(format!("entry {bad} out of range")));
        }
        let m = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| m(a, b) == identity && m(b, a) == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { name, order, mul: table, identity, inverse })
    }

    /// `Z_n` with `a b = a + b mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n * n).map(|i| (i / n + i % n) % n.max(1)).collect();
        Self::from_table(format!("Z{n}"), n, table)
    }

    /// A group given by permutations of `0..k`, composed left to right.
    fn from_permutations(name: &str, perms: &[Vec<usize>]) -> Result<Self> {
        let n = perms.len();
        let index = |p: &[usize]| perms.iter().position(|q| q == p);
        let mut table = Vec::with_capacity(n * n);
        for a in perms {
            for b in perms {
                let ab: Vec<usize> = a.iter().map(|&i| b[i]).collect();
                table.push(index(&ab).ok_or_else(|| Error::InvalidGroup("permutations not closed".into()))?);
            }
        }
        Self::from_table(name, n, table)
    }

    /// The symmetric group on three points.
    pub fn symmetric3() -> Self {
        let perms = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1], vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        Self::from_permutations("S3", &perms).expect("S3 is a group")
    }

    /// Symmetries of the square, acting on its vertices `0..4`.
    pub fn dihedral4() -> Self {
        let rot = |k: usize| (0..4).map(|i| (i + k) % 4).collect::<Vec<_>>();
        let refl = |k: usize| (0..4).map(|i| (k + 4 - i) % 4).collect::<Vec<_>>();
        let perms: Vec<Vec<usize>> = (0..4).map(rot).chain((0..4).map(refl)).collect();
        Self::from_permutations("D4", &perms).expect("D4 is a group")
    }

    pub fn klein4() -> Self {
        let table = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
        Self::from_table("K4", 4, table).expect("K4 is a group")
    }

    /// Parses `n` followed by the `n x n` Cayley table, whitespace separated.
    pub fn parse_cayley(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut nums = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("invalid Cayley table entry {t:?}"))));
        let n = nums.next().ok_or_else(|| Error::Parse("empty Cayley table".into()))??;
        let table = nums.collect::<Result<Vec<_>>>()?;
        Self::from_table(name, n, table)
    }

    /// Parses `zn:<n>`, `s3`, `d4`, `klein4`, or `cayley:<file>`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        if let Some(n) = spec.strip_prefix("zn:") {
            let n = n.parse().map_err(|_| Error::Parse(format!("invalid group order {n:?}")))?;
            return Self::cyclic(n);
        }
        if let Some(path) = spec.strip_prefix("cayley:") {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            return Self::parse_cayley(path, &text);
        }
        match spec {
            "s3" => Ok(Self::symmetric3()),
            "d4" => Ok(Self::dihedral4()),
            "klein4" => Ok(Self::klein4()),
            _ => Err(Error::Parse(format!("unknown group {spec:?}"))),
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn full(&self) -> Subgroup {
        Subgroup::from_elements(0..self.order)
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_elements([self.identity])
    }

    /// Smallest subgroup containing `set`.
    pub fn closure(&self, set: Subgroup) -> Subgroup {
        let mut cur = set.0 | (1u64 << self.identity);
        loop {
            let elems: Vec<usize> = Subgroup(cur).elements().collect();
            let mut next = cur;
            for &a in &elems {
                for &b in &elems {
                    next |= 1 << self.mul(a, b);
                }
            }
            if next == cur {
                return Subgroup(cur);
            }
            cur = next;
        }
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, h: Subgroup, g: usize) -> Subgroup {
        Subgroup::from_elements(h.elements().map(|x| self.mul(self.mul(self.inv(g), x), g)))
    }

    /// `{g : g H g^-1 = H}`.
    pub fn normalizer(&self, h: Subgroup) -> Subgroup {
        Subgroup::from_elements((0..self.order).filter(|&g| self.conjugate(h, self.inv(g)) == h))
    }

    /// Every subgroup, grown from the trivial one by adjoining one element
    /// at a time. Sorted by order, then elements.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        let mut frontier = vec![self.trivial()];
        found.insert(self.trivial());
        while let Some(h) = frontier.pop() {
            for g in 0..self.order {
                if !h.contains(g) {
                    let k = self.closure(h.with(g));
                    if found.insert(k) {
                        frontier.push(k);
                    }
                }
            }
        }
        let mut all: Vec<Subgroup> = found.into_iter().collect();
        all.sort_by_key(|h| (h.order(), h.elements().collect::<Vec<_>>()));
        all
    }

    /// Conjugacy classes of subgroups, ordered by the order of their members.
    pub fn subgroup_classes(&self) -> Vec<SubgroupClass> {
        let mut classes: Vec<SubgroupClass> = Vec::new();
        for h in self.subgroups() {
            if classes.iter().any(|c| c.members.contains(&h)) {
                continue;
            }
            let members: BTreeSet<Subgroup> = (0..self.order).map(|g| self.conjugate(h, g)).collect();
            let mut members: Vec<Subgroup> = members.into_iter().collect();
            members.sort_by_key(|m| m.elements().collect::<Vec<_>>());
            classes.push(SubgroupClass { representative: h, members, normalizer_order: self.normalizer(h).order() });
        }
        classes
    }

    /// Index of the class containing `h` in [`subgroup_classes`](Self::subgroup_classes).
    pub fn class_index(classes: &[SubgroupClass], h: Subgroup) -> Option<usize> {
        classes.iter().position(|c| c.members.contains(&h))
    }
}

/// A subset of group elements, as a bitmask.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(u64);

impl Subgroup {
    pub fn from_elements(elems: impl IntoIterator<Item = usize>) -> Self {
        Subgroup(elems.into_iter().fold(0, |m, e| m | (1u64 << e)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, g: usize) -> bool {
        self.0 >> g & 1 == 1
    }

    fn with(self, g: usize) -> Self {
        Subgroup(self.0 | (1 << g))
    }

    pub fn order(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 >> i & 1 == 1)
    }

    pub fn is_subgroup_of(self, other: Subgroup) -> bool {
        self.0 & !other.0 == 0
    }
}

/// A conjugacy class `[H]` of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
    pub normalizer_order: usize,
}

impl SubgroupClass {
    /// `|N_G(H) / H|`.
    pub fn weyl_order(&self) -> usize {
        self.normalizer_order / self.representative.order()
    }
}
