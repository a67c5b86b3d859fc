//! Regularity of one-dimensional CA, with emphasis on the 256 elementary rules.
//!
//! A rule `t` is regular when some CA `s` satisfies `t s t = t` (a weak
//! inverse). Regularity is certified by exhibiting such an `s` and checking
//! the identity by exact table composition. Non-regularity is certified by a
//! periodic configuration `x` in the image of `t` none of whose preimages has
//! the same least period: any CA can only enlarge stabilizers, so no weak
//! inverse could send `x` back to a preimage.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::config::PeriodicConfig;
use crate::error::{Error, Result};
use crate::rule::{decode_word, encode_word, word_count, RuleTable};
use crate::symbolic::{has_preimage, least_period, periodic_preimages};

/// Outcome of a regularity analysis for one rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `sigma` is a weak inverse; `generalized` records whether it is also a
    /// generalized inverse.
    Regular { sigma: RuleTable, generalized: bool },
    /// `witness` (stored with its least period) is in the image, but has no
    /// preimage of the same least period.
    NonRegular { witness: PeriodicConfig },
    /// Neither search succeeded within its bounds.
    Undecided { searched_radius: usize, searched_period: usize },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Regular,
    NonRegular,
    Undecided,
}

impl Status {
    /// Short label used in tables: `R`, `NR` or `-`.
    pub fn label(self) -> &'static str {
        match self {
            Status::Regular => "R",
            Status::NonRegular => "NR",
            Status::Undecided => "-",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Certificate {
    pub fn status(&self) -> Status {
        match self {
            Certificate::Regular { .. } => Status::Regular,
            Certificate::NonRegular { .. } => Status::NonRegular,
            Certificate::Undecided { .. } => Status::Undecided,
        }
    }

    pub fn witness_period(&self) -> Option<usize> {
        match self {
            Certificate::NonRegular { witness } => Some(least_period(witness)),
            _ => None,
        }
    }

    /// Re-checks the certificate against `tau` from scratch. Undecided
    /// certificates carry no claim and always verify.
    pub fn verify(&self, tau: &RuleTable) -> Result<bool> {
        match self {
            Certificate::Regular { sigma, generalized } => {
                let weak = check_weak_inverse(tau, sigma)?;
                let gen = weak && check_generalized_inverse(tau, sigma)?;
                Ok(weak && gen == *generalized)
            }
            Certificate::NonRegular { witness } => is_nonregularity_witness(tau, witness),
            Certificate::Undecided { .. } => Ok(true),
        }
    }
}

/// `tau sigma tau = tau`, checked exactly.
pub fn check_weak_inverse(tau: &RuleTable, sigma: &RuleTable) -> Result<bool> {
    tau.compose(sigma)?.compose(tau)?.rules_equal(tau)
}

/// `tau sigma tau = tau` and `sigma tau sigma = sigma`.
pub fn check_generalized_inverse(tau: &RuleTable, sigma: &RuleTable) -> Result<bool> {
    Ok(check_weak_inverse(tau, sigma)? && check_weak_inverse(sigma, tau)?)
}

/// Builds the generalized inverse `b tau b'` from two weak inverses.
pub fn weak_to_generalized(tau: &RuleTable, b: &RuleTable, b_prime: &RuleTable) -> Result<RuleTable> {
    if !check_weak_inverse(tau, b)? || !check_weak_inverse(tau, b_prime)? {
        return Err(Error::Precondition("both arguments must be weak inverses of tau".into()));
    }
    let g = b.compose(tau)?.compose(b_prime)?;
    debug_assert!(check_generalized_inverse(tau, &g)?);
    Ok(g)
}

/// Whether `x` satisfies the non-regularity criterion for `tau`.
pub fn is_nonregularity_witness(tau: &RuleTable, x: &PeriodicConfig) -> Result<bool> {
    if !has_preimage(tau, x)? {
        return Ok(false);
    }
    let d = least_period(x);
    Ok(periodic_preimages(tau, x, d)?.iter().all(|y| least_period(y) != d))
}

/// Search constraints for `tau sigma tau = tau` with `sigma` of a fixed radius.
///
/// Every outer window of `tau sigma tau` touches `width(tau)` entries of
/// `sigma` and fixes the value `tau` must produce from them. Constraints are
/// deduplicated and bucketed by the largest entry they touch, which is the
/// moment they become checkable when entries are assigned in ascending order.
struct InverseSearch<'a> {
    tau: &'a RuleTable,
    q: usize,
    entries: usize,
    // (touched sigma entries, required tau output), bucketed by max entry
    checks: Vec<Vec<(Vec<usize>, u8)>>,
}

impl<'a> InverseSearch<'a> {
    fn new(tau: &'a RuleTable, radius: usize) -> Result<Option<Self>> {
        let q = tau.alphabet_size();
        let (l, r) = (tau.left(), tau.right());
        let sigma_width = 2 * radius + 1;
        let entries = word_count(q, sigma_width)?;
        let tau_width = tau.width();
        let outer_width = 2 * (l + r) + sigma_width;
        let outer = word_count(q, outer_width)?;
        let mid_width = outer_width - (l + r);
        let mut w = vec![0u8; outer_width];
        let mut mid = vec![0u8; mid_width];
        let mut constraints: BTreeSet<(Vec<usize>, u8)> = BTreeSet::new();
        for index in 0..outer {
            decode_word(index, q, &mut w);
            for (j, slot) in mid.iter_mut().enumerate() {
                *slot = tau.lookup(&w[j..j + tau_width]);
            }
            let touched: Vec<usize> = (0..tau_width).map(|j| encode_word(&mid[j..j + sigma_width], q)).collect();
            let centre = l + radius;
            let want = tau.lookup(&w[centre..centre + tau_width]);
            constraints.insert((touched, want));
        }
        // the same touched tuple with two different targets is unsatisfiable
        let mut prev: Option<&(Vec<usize>, u8)> = None;
        for c in &constraints {
            if let Some(p) = prev {
                if p.0 == c.0 {
                    return Ok(None);
                }
            }
            prev = Some(c);
        }
        let mut checks = vec![Vec::new(); entries];
        for (touched, want) in constraints {
            let max = *touched.iter().max().expect("tau has a non-empty window");
            checks[max].push((touched, want));
        }
        Ok(Some(Self { tau, q, entries, checks }))
    }

    fn consistent(&self, sigma: &[u8], entry: usize) -> bool {
        self.checks[entry].iter().all(|(touched, want)| {
            let idx = touched.iter().fold(0, |acc, &e| acc * self.q + sigma[e] as usize);
            self.tau.output(idx) == *want
        })
    }

    /// Depth-first search from `sigma[..depth]`, trying symbols in ascending
    /// order; returns the first complete assignment.
    fn extend(&self, sigma: &mut Vec<u8>) -> bool {
        let depth = sigma.len();
        if depth == self.entries {
            return true;
        }
        for s in 0..self.q as u8 {
            sigma.push(s);
            if self.consistent(sigma, depth) && self.extend(sigma) {
                return true;
            }
            sigma.pop();
        }
        false
    }

    /// All consistent prefixes of length `depth`, in search order.
    fn prefixes(&self, depth: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for d in 0..depth.min(self.entries) {
            let mut next = Vec::new();
            for prefix in out {
                for s in 0..self.q as u8 {
                    let mut p = prefix.clone();
                    p.push(s);
                    if self.consistent(&p, d) {
                        next.push(p);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn run(&self) -> Option<Vec<u8>> {
        // fan out over a few leading entries; the first prefix in search
        // order with a solution wins, which keeps the result deterministic
        let split = if self.entries > 16 { 8 } else { 0 };
        self.prefixes(split).into_par_iter().find_map_first(
            |mut prefix| {
                if self.extend(&mut prefix) {
                    Some(prefix)
                } else {
                    None
                }
            },
        )
    }
}

/// First weak inverse of radius exactly `radius` in search order, if any.
pub fn search_weak_inverse_at_radius(tau: &RuleTable, radius: usize) -> Result<Option<RuleTable>> {
    let Some(search) = InverseSearch::new(tau, radius)? else {
        return Ok(None);
    };
    match search.run() {
        Some(table) => {
            let sigma = RuleTable::new(tau.alphabet_size(), radius, radius, table)?;
            if !check_weak_inverse(tau, &sigma)? {
                return Err(Error::Unsound(format!("search returned {sigma} which is not a weak inverse")));
            }
            Ok(Some(sigma))
        }
        None => Ok(None),
    }
}

/// Searches weak inverses with symmetric windows of radius 1, then 2, up to
/// `max_radius`.
pub fn search_weak_inverse(tau: &RuleTable, max_radius: usize) -> Result<Certificate> {
    if !(1..=2).contains(&max_radius) {
        return Err(Error::UnsupportedRadius(max_radius));
    }
    for radius in 1..=max_radius {
        if let Some(sigma) = search_weak_inverse_at_radius(tau, radius)? {
            let generalized = check_generalized_inverse(tau, &sigma)?;
            return Ok(Certificate::Regular { sigma, generalized });
        }
    }
    Ok(Certificate::Undecided { searched_radius: max_radius, searched_period: 0 })
}

/// Aperiodic words of length `d` that are lexicographically least among their
/// rotations, in lexicographic order.
pub fn lyndon_words(q: usize, d: usize) -> Result<Vec<PeriodicConfig>> {
    let count = word_count(q, d)?;
    let mut word = vec![0u8; d];
    let mut out = Vec::new();
    for index in 0..count {
        decode_word(index, q, &mut word);
        let least = (1..d).all(|k| {
            let rotated = word[k..].iter().chain(&word[..k]);
            rotated.cmp(word.iter()) == std::cmp::Ordering::Greater
        });
        if least {
            out.push(PeriodicConfig::new(q, word.clone())?);
        }
    }
    Ok(out)
}

/// Looks for a non-regularity witness among configurations of least period
/// `1..=max_period`, one per rotation class.
pub fn nonregularity_witness(tau: &RuleTable, max_period: usize) -> Result<Certificate> {
    if max_period == 0 {
        return Err(Error::InvalidArgument("max_period must be at least 1".into()));
    }
    for d in 1..=max_period {
        for x in lyndon_words(tau.alphabet_size(), d)? {
            if is_nonregularity_witness(tau, &x)? {
                return Ok(Certificate::NonRegular { witness: x });
            }
        }
    }
    Ok(Certificate::Undecided { searched_radius: 0, searched_period: max_period })
}

/// One of the eight symmetries generated by mirroring and composing with the
/// complement rule on either side: the image of `t` is
/// `[complement] . t* . [complement]`, reading left to right.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    pub mirror: bool,
    pub complement_before: bool,
    pub complement_after: bool,
}

impl Symmetry {
    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0..8u8).map(|bits| Symmetry {
            mirror: bits & 4 != 0,
            complement_before: bits & 2 != 0,
            complement_after: bits & 1 != 0,
        })
    }

    pub fn apply(self, tau: &RuleTable) -> Result<RuleTable> {
        let mut t = if self.mirror { tau.mirror() } else { tau.clone() };
        if self.complement_before {
            t = t.complement_left()?;
        }
        if self.complement_after {
            t = t.complement_right()?;
        }
        Ok(t)
    }

    /// Moves a certificate for `tau` to one for `self.apply(tau)`.
    ///
    /// With `t' = c t* c'` a weak inverse is `c' s* c` and a witness `x`
    /// becomes the reflected configuration, complemented when `c'` is present.
    pub fn transport(self, cert: &Certificate) -> Result<Certificate> {
        Ok(match cert {
            Certificate::Regular { sigma, generalized } => {
                let mut s = if self.mirror { sigma.mirror() } else { sigma.clone() };
                if self.complement_after {
                    s = s.complement_left()?;
                }
                if self.complement_before {
                    s = s.complement_right()?;
                }
                Certificate::Regular { sigma: s, generalized: *generalized }
            }
            Certificate::NonRegular { witness } => {
                let mut x = if self.mirror { witness.reversed() } else { witness.clone() };
                if self.complement_after {
                    x = x.complemented()?;
                }
                Certificate::NonRegular { witness: x }
            }
            other => other.clone(),
        })
    }
}

/// An orbit of elementary rules under the eight symmetries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub representative: u8,
    /// Sorted, without duplicates.
    pub members: Vec<u8>,
}

impl EquivalenceClass {
    pub fn contains(&self, rule: u8) -> bool {
        self.members.binary_search(&rule).is_ok()
    }
}

/// The symmetry taking `from` to `to`, if they are equivalent.
pub fn symmetry_between(from: u8, to: u8) -> Option<Symmetry> {
    let tau = RuleTable::from_wolfram(from as u32).ok()?;
    Symmetry::all().find(|s| s.apply(&tau).ok().and_then(|t| t.wolfram_number()) == Some(to))
}

pub fn equivalence_class(rule: u8) -> EquivalenceClass {
    let tau = RuleTable::from_wolfram(rule as u32).expect("u8 is in range");
    let members: BTreeSet<u8> = Symmetry::all()
        .map(|s| s.apply(&tau).ok().and_then(|t| t.wolfram_number()).expect("symmetries preserve elementary rules"))
        .collect();
    let members: Vec<u8> = members.into_iter().collect();
    EquivalenceClass { representative: members[0], members }
}

/// All classes, ordered by representative.
pub fn all_classes() -> Vec<EquivalenceClass> {
    let mut seen = [false; 256];
    let mut out = Vec::new();
    for rule in 0..=255u8 {
        if !seen[rule as usize] {
            let class = equivalence_class(rule);
            for &m in &class.members {
                seen[m as usize] = true;
            }
            out.push(class);
        }
    }
    out
}

/// Search bounds for classification.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_radius: usize,
    pub max_period: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_radius: 1, max_period: 3 }
    }
}

/// Runs both searches on one rule and combines them.
pub fn analyze(tau: &RuleTable, bounds: Bounds) -> Result<Certificate> {
    let regular = search_weak_inverse(tau, bounds.max_radius)?;
    let nonregular = nonregularity_witness(tau, bounds.max_period)?;
    match (&regular, &nonregular) {
        (Certificate::Regular { .. }, Certificate::NonRegular { .. }) => {
            Err(Error::Unsound(format!("{tau} received both a weak inverse and a non-regularity witness")))
        }
        (Certificate::Regular { .. }, _) => Ok(regular),
        (_, Certificate::NonRegular { .. }) => Ok(nonregular),
        _ => Ok(Certificate::Undecided { searched_radius: bounds.max_radius, searched_period: bounds.max_period }),
    }
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub class: EquivalenceClass,
    pub certificate: Certificate,
}

impl ClassReport {
    pub fn status(&self) -> Status {
        self.certificate.status()
    }
}

#[derive(Clone, Debug)]
pub struct RuleReport {
    pub rule: u8,
    pub class_rep: u8,
    pub certificate: Certificate,
}

/// Classification of all 256 elementary rules.
#[derive(Clone, Debug)]
pub struct ElementaryReport {
    pub bounds: Bounds,
    /// Ordered by representative.
    pub classes: Vec<ClassReport>,
    /// Indexed by rule number.
    pub rules: Vec<RuleReport>,
}

impl ElementaryReport {
    pub fn class_count(&self, status: Status) -> usize {
        self.classes.iter().filter(|c| c.status() == status).count()
    }

    pub fn rule_count(&self, status: Status) -> usize {
        self.rules.iter().filter(|r| r.certificate.status() == status).count()
    }

    pub fn class_of(&self, rule: u8) -> &ClassReport {
        let rep = self.rules[rule as usize].class_rep;
        self.classes.iter().find(|c| c.class.representative == rep).expect("every rep has a class")
    }
}

fn classify_class(class: EquivalenceClass, bounds: Bounds) -> Result<(ClassReport, Vec<RuleReport>)> {
    let rep = class.representative;
    let tau = RuleTable::from_wolfram(rep as u32)?;
    let certificate = analyze(&tau, bounds)?;
    if !certificate.verify(&tau)? {
        return Err(Error::Unsound(format!("certificate for rule {rep} does not verify")));
    }
    // independent run on another member must agree
    let other = *class.members.last().expect("classes are non-empty");
    let other_status = analyze(&RuleTable::from_wolfram(other as u32)?, bounds)?.status();
    if other_status != certificate.status() {
        return Err(Error::Unsound(format!(
            "rules {rep} and {other} are equivalent but got {} and {}",
            certificate.status(),
            other_status
        )));
    }
    let mut rules = Vec::with_capacity(class.members.len());
    for &member in &class.members {
        let sym = symmetry_between(rep, member).expect("member of the class");
        let cert = sym.transport(&certificate)?;
        let member_tau = RuleTable::from_wolfram(member as u32)?;
        if !cert.verify(&member_tau)? {
            return Err(Error::Unsound(format!("transported certificate for rule {member} does not verify")));
        }
        rules.push(RuleReport { rule: member, class_rep: rep, certificate: cert });
    }
    Ok((ClassReport { class, certificate }, rules))
}

/// Classifies every elementary rule within the given bounds.
pub fn classify_elementary(bounds: Bounds) -> Result<ElementaryReport> {
    let results: Vec<(ClassReport, Vec<RuleReport>)> =
        all_classes().into_par_iter().map(|c| classify_class(c, bounds)).collect::<Result<_>>()?;
    let mut classes = Vec::with_capacity(results.len());
    let mut rules: Vec<Option<RuleReport>> = vec![None; 256];
    for (class, members) in results {
        for m in members {
            let slot = &mut rules[m.rule as usize];
            if slot.is_some() {
                return Err(Error::Unsound(format!("rule {} appears in two classes", m.rule)));
            }
            *slot = Some(m);
        }
        classes.push(class);
    }
    classes.sort_by_key(|c| c.class.representative);
    let rules = rules
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| Error::Unsound(format!("rule {i} not covered by any class"))))
        .collect::<Result<_>>()?;
    Ok(ElementaryReport { bounds, classes, rules })
}

/// The non-regular CA built from two regular-looking pieces over `Z` with the
/// alphabet `{0, .., q-1}`.
#[derive(Clone, Debug)]
pub struct CounterexampleBundle {
    /// Keeps the centre when the three cells agree, otherwise writes 0.
    pub tau1: RuleTable,
    /// Writes 1 on `000`, otherwise keeps the centre.
    pub tau2: RuleTable,
    /// `tau2` then `tau1`.
    pub tau: RuleTable,
    pub certificate: Certificate,
}

pub fn counterexample_maps(q: usize) -> Result<(RuleTable, RuleTable, RuleTable)> {
    let tau1 = RuleTable::from_fn(q, 1, 1, |w| if w[0] == w[1] && w[1] == w[2] { w[1] } else { 0 })?;
    let tau2 = RuleTable::from_fn(q, 1, 1, |w| if w == [0, 0, 0] { 1 } else { w[1] })?;
    let tau = tau2.compose(&tau1)?;
    Ok((tau1, tau2, tau))
}

/// The binary instance, certified through the constant configurations alone:
/// `0` is in the image but only `0 -> 1` and `k -> k` happen on constants.
pub fn counterexample() -> Result<CounterexampleBundle> {
    let (tau1, tau2, tau) = counterexample_maps(2)?;
    let zero = PeriodicConfig::constant(2, 0)?;
    let certificate = Certificate::NonRegular { witness: zero };
    if !certificate.verify(&tau)? {
        return Err(Error::Unsound("the constant 0 does not witness non-regularity".into()));
    }
    Ok(CounterexampleBundle { tau1, tau2, tau, certificate })
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
    fn weak_inverse_examples() {
        assert!(check_weak_inverse(&eca(128), &eca(254)).unwrap());
        assert!(check_weak_inverse(&eca(0), &eca(0)).unwrap());
        assert!((0..256).all(|s| !check_weak_inverse(&eca(110), &eca(s)).unwrap()));
        assert!(check_weak_inverse(&eca(1), &RuleTable::identity(3).unwrap()).is_err());
    }

    #[test]
    fn generalized_inverse_examples() {
        assert!(check_generalized_inverse(&eca(128), &eca(254)).unwrap());
        assert!(check_generalized_inverse(&eca(204), &eca(204)).unwrap());
        assert!(check_weak_inverse(&eca(0), &eca(51)).unwrap());
        assert!(!check_generalized_inverse(&eca(0), &eca(51)).unwrap());
        assert_eq!(eca(51).compose(&eca(0)).unwrap().compose(&eca(51)).unwrap().wolfram_number(), Some(255));
    }

    #[test]
    fn weak_to_generalized_examples() {
        let g = weak_to_generalized(&eca(128), &eca(254), &eca(254)).unwrap();
        assert_eq!(g.wolfram_number(), Some(254));
        let id = weak_to_generalized(&eca(204), &eca(204), &eca(204)).unwrap();
        assert_eq!(id.wolfram_number(), Some(204));
        let g0 = weak_to_generalized(&eca(0), &eca(51), &eca(51)).unwrap();
        assert_eq!(g0.wolfram_number(), Some(255));
        assert!(check_generalized_inverse(&eca(0), &g0).unwrap());
        assert!(weak_to_generalized(&eca(110), &eca(0), &eca(0)).is_err());
    }

    #[test]
    fn search_examples() {
        match search_weak_inverse(&eca(2), 1).unwrap() {
            Certificate::Regular { sigma, .. } => assert_eq!(sigma.wolfram_number(), Some(16)),
            other => panic!("{other:?}"),
        }
        match search_weak_inverse(&eca(0), 1).unwrap() {
            Certificate::Regular { sigma, generalized } => {
                assert_eq!(sigma, eca(0));
                assert!(generalized);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            search_weak_inverse(&eca(30), 1).unwrap(),
            Certificate::Undecided { searched_radius: 1, searched_period: 0 }
        );
        assert_eq!(search_weak_inverse(&eca(30), 3), Err(Error::UnsupportedRadius(3)));
        assert_eq!(search_weak_inverse(&eca(30), 0), Err(Error::UnsupportedRadius(0)));
    }

    #[test]
    fn search_is_first_in_order() {
        // brute force over all 256 radius-1 tables in the same order
        for n in [2u32, 4, 10, 13, 43, 128, 192] {
            let tau = eca(n);
            let first = (0..256u32)
                .map(|s| {
                    let t: Vec<u8> = (0..8).map(|i| ((s >> i) & 1) as u8).collect();
                    RuleTable::new(2, 1, 1, t).unwrap()
                })
                .filter(|s| check_weak_inverse(&tau, s).unwrap())
                .min_by(|a, b| a.table().cmp(b.table()))
                .unwrap();
            assert_eq!(search_weak_inverse_at_radius(&tau, 1).unwrap(), Some(first), "rule {n}");
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(nonregularity_witness(&eca(110), 1).unwrap(), Certificate::NonRegular { witness: cfg("1") });
        // the constant 1 (reached from 0011) already witnesses rule 90
        let c90 = nonregularity_witness(&eca(90), 2).unwrap();
        assert_eq!(c90, Certificate::NonRegular { witness: cfg("1") });
        assert!(is_nonregularity_witness(&eca(90), &cfg("10")).unwrap());
        let c105 = nonregularity_witness(&eca(105), 3).unwrap();
        assert_eq!(c105.witness_period(), Some(3));
        assert_eq!(
            nonregularity_witness(&eca(204), 3).unwrap(),
            Certificate::Undecided { searched_radius: 0, searched_period: 3 }
        );
        assert!(nonregularity_witness(&eca(204), 0).is_err());
    }

    #[test]
    fn lyndon_words_small() {
        let words: Vec<String> = lyndon_words(2, 3).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["001", "011"]);
        assert_eq!(lyndon_words(2, 4).unwrap().len(), 3);
        assert_eq!(lyndon_words(3, 2).unwrap().len(), 3);
    }

    #[test]
    fn class_examples() {
        let c = equivalence_class(110);
        assert_eq!(c.representative, 62);
        assert_eq!(c.members, vec![62, 110, 118, 124, 131, 137, 145, 193]);
        assert_eq!(equivalence_class(204).members, vec![51, 204]);
        assert_eq!(equivalence_class(0).members, vec![0, 255]);
        assert_eq!(all_classes().len(), 48);
    }

    #[test]
    fn transport_round_trip() {
        let cert = search_weak_inverse(&eca(2), 1).unwrap();
        for s in Symmetry::all() {
            let t = s.apply(&eca(2)).unwrap();
            assert!(s.transport(&cert).unwrap().verify(&t).unwrap(), "{s:?}");
        }
        let cert = nonregularity_witness(&eca(105), 3).unwrap();
        for s in Symmetry::all() {
            let t = s.apply(&eca(105)).unwrap();
            assert!(s.transport(&cert).unwrap().verify(&t).unwrap(), "{s:?}");
        }
    }

    #[test]
    fn counterexample_bundle() {
        let b = counterexample().unwrap();
        assert_eq!(b.tau1.wolfram_number(), Some(128));
        assert_eq!(b.tau2.wolfram_number(), Some(205));
        assert_eq!(b.tau.apply_periodic(&cfg("0")).unwrap(), cfg("1"));
        assert_eq!(b.tau.apply_periodic(&cfg("1")).unwrap(), cfg("1"));
        assert_eq!(b.tau.apply_periodic(&cfg("01")).unwrap(), cfg("00"));
        assert_eq!(nonregularity_witness(&b.tau, 1).unwrap(), Certificate::NonRegular { witness: cfg("0") });
        let (_, _, t3) = counterexample_maps(3).unwrap();
        let zero = PeriodicConfig::constant(3, 0).unwrap();
        assert!(is_nonregularity_witness(&t3, &zero).unwrap());
    }
}
