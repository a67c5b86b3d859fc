//! Cellular automata over a finite group `G` and finite alphabet `A`.
//!
//! With both finite, the CA on `A^G` are exactly the maps commuting with the
//! right shift action `(h)(x.g) = (h g^-1)x`. Configurations are indexed
//! lexicographically (value at element 0 most significant), and an
//! [`EquivariantMap`] stores the image index of every configuration.
//!
//! A CA is regular iff every configuration in its image has a preimage with
//! the same stabilizer; [`weak_inverse_finite`] builds an explicit weak
//! inverse in that case. The maps preserving every stabilizer form a regular
//! submonoid `R`, counted by [`submonoid_r_size`].

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, SubgroupClass};
use crate::rule::{decode_word, encode_word, word_count};

/// Default cap on `q^|G|` for exhaustive enumeration of maps.
pub const DEFAULT_CONFIG_CAP: usize = 16;

/// Largest number of maps an enumeration will materialize.
pub const MAX_ENUMERATED_MAPS: u64 = 1 << 22;

/// Largest configuration space handled at all.
pub const MAX_CONFIGS: usize = 1 << 22;

/// A configuration `x: G -> A`, entry `g` holding `(g)x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupConfig {
    pub values: Vec<u8>,
}

impl GroupConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .bytes()
            .map(|b| match b {
                b'0'..=b'9' => Ok(b - b'0'),
                _ => Err(Error::Parse(format!("invalid symbol {:?}", b as char))),
            })
            .collect::<Result<_>>()?;
        Ok(Self { values })
    }
}

impl std::fmt::Display for GroupConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for v in &self.values {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `x . g`.
pub fn act(group: &FiniteGroup, x: &GroupConfig, g: usize) -> GroupConfig {
    let gi = group.inv(g);
    GroupConfig { values: (0..group.order()).map(|h| x.values[group.mul(h, gi)]).collect() }
}

/// `G_x = {g : x.g = x}`.
pub fn stabilizer(group: &FiniteGroup, x: &GroupConfig) -> Subgroup {
    Subgroup::from_elements((0..group.order()).filter(|&g| act(group, x, g) == *x))
}

/// The orbit `xG`, sorted.
pub fn orbit(group: &FiniteGroup, x: &GroupConfig) -> Vec<GroupConfig> {
    let mut out: Vec<GroupConfig> = (0..group.order()).map(|g| act(group, x, g)).collect();
    out.sort();
    out.dedup();
    out
}

/// The configuration space `A^G` with its action precomputed.
#[derive(Clone, Debug)]
pub struct ConfigSpace {
    group: FiniteGroup,
    q: usize,
    count: usize,
    // action[x * n + g] = index of x.g
    action: Vec<u32>,
    stabilizers: Vec<Subgroup>,
    classes: Vec<SubgroupClass>,
}

impl ConfigSpace {
    pub fn new(group: &FiniteGroup, q: usize) -> Result<Self> {
        if !(2..=10).contains(&q) {
            return Err(Error::InvalidAlphabet(q));
        }
        let n = group.order();
        let count = word_count(q, n)
            .ok()
            .filter(|&c| c <= MAX_CONFIGS)
            .ok_or_else(|| Error::CapExceeded { what: format!("{q}^{n} configurations"), cap: MAX_CONFIGS as u64 })?;
        let mut action = vec![0u32; count * n];
        let mut stabilizers = Vec::with_capacity(count);
        let mut x = vec![0u8; n];
        let mut y = vec![0u8; n];
        for idx in 0..count {
            decode_word(idx, q, &mut x);
            let mut stab = 0u64;
            for g in 0..n {
                let gi = group.inv(g);
                for (h, slot) in y.iter_mut().enumerate() {
                    *slot = x[group.mul(h, gi)];
                }
                let img = encode_word(&y, q);
                action[idx * n + g] = img as u32;
                if img == idx {
                    stab |= 1 << g;
                }
            }
            stabilizers.push(Subgroup::from_elements((0..n).filter(|&g| stab >> g & 1 == 1)));
        }
        Ok(Self { group: group.clone(), q, count, action, stabilizers, classes: group.subgroup_classes() })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn alphabet_size(&self) -> usize {
        self.q
    }

    /// `q^|G|`.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn config(&self, idx: usize) -> GroupConfig {
        let mut values = vec![0u8; self.group.order()];
        decode_word(idx, self.q, &mut values);
        GroupConfig { values }
    }

    pub fn index(&self, x: &GroupConfig) -> Result<usize> {
        if x.values.len() != self.group.order() {
            return Err(Error::InvalidArgument(format!(
                "configuration has {} entries, group has order {}",
                x.values.len(),
                self.group.order()
            )));
        }
        if let Some(&bad) = x.values.iter().find(|&&v| v as usize >= self.q) {
            return Err(Error::SymbolOutOfRange { symbol: bad as u32, q: self.q });
        }
        Ok(encode_word(&x.values, self.q))
    }

    #[inline]
    pub fn act(&self, x: usize, g: usize) -> usize {
        self.action[x * self.group.order() + g] as usize
    }

    #[inline]
    pub fn stabilizer(&self, x: usize) -> Subgroup {
        self.stabilizers[x]
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.group.order()).map(|g| self.act(x, g)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Smallest configuration of every orbit, ascending.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        (0..self.count).filter(|&x| (0..self.group.order()).all(|g| self.act(x, g) >= x)).collect()
    }

    pub fn subgroup_classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    /// Index of the class `[G_x]`.
    pub fn box_of(&self, x: usize) -> usize {
        FiniteGroup::class_index(&self.classes, self.stabilizers[x]).expect("stabilizers are subgroups")
    }
}

/// Whether some CA maps `x` to `y`: `G_x <= G_y`.
pub fn exists_ca_mapping(space: &ConfigSpace, x: usize, y: usize) -> bool {
    space.stabilizer(x).is_subgroup_of(space.stabilizer(y))
}

/// Whether some invertible CA maps `x` to `y`: `G_x = G_y`.
pub fn exists_ica_mapping(space: &ConfigSpace, x: usize, y: usize) -> bool {
    space.stabilizer(x) == space.stabilizer(y)
}

/// One box `B_[H]` of configurations whose stabilizer is conjugate to `H`.
#[derive(Clone, Debug)]
pub struct BoxEntry {
    pub class: SubgroupClass,
    pub configs: Vec<usize>,
    pub orbit_size: usize,
    /// Number of orbits in the box.
    pub orbit_count: usize,
}

#[derive(Clone, Debug)]
pub struct BoxDecomposition {
    /// In the order of the subgroup classes.
    pub boxes: Vec<BoxEntry>,
}

pub fn boxes(space: &ConfigSpace) -> BoxDecomposition {
    let n = space.group().order();
    let mut boxes: Vec<BoxEntry> = space
        .subgroup_classes()
        .iter()
        .map(|c| BoxEntry {
            class: c.clone(),
            configs: Vec::new(),
            orbit_size: n / c.representative.order(),
            orbit_count: 0,
        })
        .collect();
    for x in 0..space.len() {
        boxes[space.box_of(x)].configs.push(x);
    }
    for b in &mut boxes {
        b.orbit_count = b.configs.len() / b.orbit_size;
    }
    BoxDecomposition { boxes }
}

/// A `G`-equivariant self-map of `A^G`, stored as a full table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivariantMap {
    images: Vec<u32>,
}

impl EquivariantMap {
    /// Validates equivariance exhaustively.
    pub fn new(space: &ConfigSpace, images: Vec<usize>) -> Result<Self> {
        if images.len() != space.len() {
            return Err(Error::InvalidArgument(format!("expected {} images, got {}", space.len(), images.len())));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= space.len()) {
            return Err(Error::InvalidArgument(format!("image index {bad} out of range")));
        }
        for x in 0..space.len() {
            for g in 0..space.group().order() {
                if images[space.act(x, g)] != space.act(images[x], g) {
                    return Err(Error::NotEquivariant(format!(
                        "({}.{g}) maps to {}, but ({}).{g} = {}",
                        space.config(x),
                        space.config(images[space.act(x, g)]),
                        space.config(images[x]),
                        space.config(space.act(images[x], g)),
                    )));
                }
            }
        }
        Ok(Self { images: images.into_iter().map(|y| y as u32).collect() })
    }

    pub fn identity(space: &ConfigSpace) -> Self {
        Self { images: (0..space.len() as u32).collect() }
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&y| y as usize)
    }

    /// `self` then `then`.
    pub fn compose(&self, then: &Self) -> Self {
        Self { images: self.images.iter().map(|&y| then.images[y as usize]).collect() }
    }

    pub fn preserves_stabilizers(&self, space: &ConfigSpace) -> bool {
        (0..space.len()).all(|x| space.stabilizer(x) == space.stabilizer(self.image(x)))
    }

    fn image_set(&self, len: usize) -> Vec<bool> {
        let mut in_image = vec![false; len];
        for y in self.images() {
            in_image[y] = true;
        }
        in_image
    }
}

/// A configuration in the image of `tau` with no preimage of equal
/// stabilizer, if one exists (smallest such).
pub fn finite_nonregularity_witness(space: &ConfigSpace, tau: &EquivariantMap) -> Option<usize> {
    let mut matched = vec![false; space.len()];
    for x in 0..space.len() {
        let y = tau.image(x);
        if space.stabilizer(x) == space.stabilizer(y) {
            matched[y] = true;
        }
    }
    let in_image = tau.image_set(space.len());
    (0..space.len()).find(|&y| in_image[y] && !matched[y])
}

pub fn is_regular_finite(space: &ConfigSpace, tau: &EquivariantMap) -> bool {
    finite_nonregularity_witness(space, tau).is_none()
}

/// An explicit weak inverse: on every image orbit `y_i G`, send `y_i . g` to
/// `y'_i . g` where `y'_i` is a preimage of `y_i` with the same stabilizer;
/// fix everything outside the image. `y_i` is the smallest configuration of
/// its orbit and `y'_i` the smallest eligible preimage.
pub fn weak_inverse_finite(space: &ConfigSpace, tau: &EquivariantMap) -> Result<EquivariantMap> {
    if let Some(w) = finite_nonregularity_witness(space, tau) {
        return Err(Error::NotRegular { witness: space.config(w).to_string() });
    }
    let len = space.len();
    let in_image = tau.image_set(len);
    let mut chosen: Vec<Option<usize>> = vec![None; len];
    for x in 0..len {
        let y = tau.image(x);
        if chosen[y].is_none() && space.stabilizer(x) == space.stabilizer(y) {
            chosen[y] = Some(x);
        }
    }
    let mut phi: Vec<usize> = (0..len).collect();
    let mut done = vec![false; len];
    for y in 0..len {
        if !in_image[y] || done[y] {
            continue;
        }
        let pre = chosen[y].expect("regular maps have matching preimages");
        for g in 0..space.group().order() {
            let yg = space.act(y, g);
            phi[yg] = space.act(pre, g);
            done[yg] = true;
        }
    }
    let phi = EquivariantMap::new(space, phi)?;
    if tau.compose(&phi).compose(tau) != *tau {
        return Err(Error::Unsound("constructed map is not a weak inverse".into()));
    }
    Ok(phi)
}

fn check_cap(space: &ConfigSpace, cap: usize) -> Result<()> {
    if space.len() > cap {
        return Err(Error::CapExceeded { what: format!("{} configurations", space.len()), cap: cap as u64 });
    }
    Ok(())
}

/// Candidate images of each orbit representative.
fn image_choices(space: &ConfigSpace, allowed: impl Fn(Subgroup, Subgroup) -> bool) -> Vec<(usize, Vec<usize>)> {
    space
        .orbit_representatives()
        .into_iter()
        .map(|x| {
            let sx = space.stabilizer(x);
            (x, (0..space.len()).filter(|&y| allowed(sx, space.stabilizer(y))).collect())
        })
        .collect()
}

fn count_choices(choices: &[(usize, Vec<usize>)]) -> BigUint {
    choices.iter().map(|(_, c)| BigUint::from(c.len())).product()
}

fn enumerate_choices(space: &ConfigSpace, choices: &[(usize, Vec<usize>)]) -> Result<Vec<EquivariantMap>> {
    let total = count_choices(choices);
    if total > BigUint::from(MAX_ENUMERATED_MAPS) {
        return Err(Error::CapExceeded { what: format!("{total} maps"), cap: MAX_ENUMERATED_MAPS });
    }
    let n = space.group().order();
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut images = vec![0u32; space.len()];
        for ((x, cands), &k) in choices.iter().zip(&pick) {
            let y = cands[k];
            for g in 0..n {
                images[space.act(*x, g)] = space.act(y, g) as u32;
            }
        }
        out.push(EquivariantMap { images });
        // odometer, last orbit fastest
        let mut i = choices.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].1.len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// `|CA(G; A)|`: each orbit representative `x` may go to any `y` with
/// `G_x <= G_y`.
pub fn count_ca(space: &ConfigSpace) -> BigUint {
    count_choices(&image_choices(space, |sx, sy| sx.is_subgroup_of(sy)))
}

/// Every CA on `A^G`; requires `q^|G| <= cap`.
pub fn enumerate_ca(space: &ConfigSpace, cap: usize) -> Result<Vec<EquivariantMap>> {
    check_cap(space, cap)?;
    enumerate_choices(space, &image_choices(space, |sx, sy| sx.is_subgroup_of(sy)))
}

/// `|R|` counted orbit by orbit: each representative may go to any
/// configuration with exactly its stabilizer.
pub fn count_r_by_orbits(space: &ConfigSpace) -> BigUint {
    count_choices(&image_choices(space, |sx, sy| sx == sy))
}

/// Every stabilizer-preserving CA; requires `q^|G| <= cap`.
pub fn enumerate_r(space: &ConfigSpace, cap: usize) -> Result<Vec<EquivariantMap>> {
    check_cap(space, cap)?;
    enumerate_choices(space, &image_choices(space, |sx, sy| sx == sy))
}

/// `|R| = prod over [H] of |N_G(H)/H|^a * a^a`, `a` the number of orbits in
/// the box of `[H]`.
pub fn submonoid_r_size(space: &ConfigSpace) -> BigUint {
    boxes(space)
        .boxes
        .iter()
        .map(|b| {
            let a = b.orbit_count as u32;
            BigUint::from(b.class.weyl_order()).pow(a) * BigUint::from(a).pow(a)
        })
        .product()
}
