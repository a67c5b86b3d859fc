//! Linear CA over `Z_n` with alphabet `F_p`: the ring `F_p[x]/(x^n - 1)`.
//!
//! Writing `n = m p^v` with `p` not dividing `m`, `x^n - 1 = (x^m - 1)^(p^v)`
//! and `x^m - 1` is squarefree, so every irreducible factor of `x^n - 1`
//! occurs with multiplicity `p^v`. By the Chinese remainder theorem the ring
//! splits into local components `F_p[x]/(f_i^{m_i})`, in each of which an
//! element is a unit, nilpotent, or both zero and nilpotent. It is regular
//! iff every component is a unit or zero, which gives the count
//! `prod ((p^d_i - 1) p^(d_i (m_i - 1)) + 1)`.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{berlekamp, check_prime, Poly};

/// Default cap on `p^n` for [`LinearRing::brute_force_count`].
pub const DEFAULT_ELEMENT_CAP: u64 = 1 << 16;

/// Largest `n` accepted.
pub const MAX_LENGTH: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Monic and irreducible.
    pub poly: Poly,
    pub multiplicity: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub p: u64,
    /// Sorted by degree, then coefficients.
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(self.p).expect("validated prime"), |acc, f| &acc * &f.poly.pow(f.multiplicity as u64))
    }

    /// `(d_i, m_i)` pairs.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        self.factors.iter().map(|f| (f.degree, f.multiplicity)).collect()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({})", fac.poly)?;
            if fac.multiplicity > 1 {
                write!(f, "^{}", fac.multiplicity)?;
            }
        }
        Ok(())
    }
}

fn check_params(n: usize, p: u64) -> Result<()> {
    check_prime(p)?;
    if n == 0 || n > MAX_LENGTH {
        return Err(Error::InvalidArgument(format!("n must be in 1..={MAX_LENGTH}, got {n}")));
    }
    Ok(())
}

/// `n = m p^v` with `p` not dividing `m`.
pub fn split_characteristic(n: usize, p: u64) -> (usize, usize) {
    let (mut m, mut pv) = (n, 1);
    while (m as u64).is_multiple_of(p) {
        m /= p as usize;
        pv *= p as usize;
    }
    (m, pv)
}

/// The cyclotomic cosets `{s, sp, sp^2, ...}` of `p` modulo `m`, each sorted,
/// ordered by smallest element. Requires `p` coprime to `m`.
pub fn cyclotomic_cosets(m: usize, p: u64) -> Vec<Vec<usize>> {
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for s in 0..m {
        if seen[s] {
            continue;
        }
        let mut coset = Vec::new();
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            coset.push(t);
            t = (t as u64 * p % m as u64) as usize;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    out
}

pub fn factor_xn_minus_1(n: usize, p: u64) -> Result<Factorization> {
    check_params(n, p)?;
    let (m, pv) = split_characteristic(n, p);
    let base = Poly::x_pow_minus_one(p, m)?;
    let factors: Vec<Factor> = berlekamp(&base)
        .into_iter()
        .map(|poly| {
            let degree = poly.degree().expect("factors are nonconstant");
            Factor { poly, multiplicity: pv, degree }
        })
        .collect();
    let mut degrees: Vec<usize> = factors.iter().map(|f| f.degree).collect();
    let mut expected: Vec<usize> = cyclotomic_cosets(m, p).iter().map(Vec::len).collect();
    degrees.sort_unstable();
    expected.sort_unstable();
    let fact = Factorization { n, p, factors };
    if degrees != expected || fact.product() != Poly::x_pow_minus_one(p, n)? {
        return Err(Error::Unsound(format!("factorization of x^{n} - 1 over F_{p} failed its checks")));
    }
    Ok(fact)
}

/// `prod ((q^d - 1) q^(d (m - 1)) + 1)` over `(d, m)` pairs.
pub fn regular_count_formula(q: u64, shape: &[(usize, usize)]) -> BigUint {
    let q = BigUint::from(q);
    shape
        .iter()
        .map(|&(d, m)| {
            let qd = q.pow(d as u32);
            (&qd - 1u32) * q.pow((d * (m - 1)) as u32) + 1u32
        })
        .product()
}

/// Number of regular elements of `F_p[x]/(x^n - 1)`.
pub fn count_regulars(n: usize, p: u64) -> Result<BigUint> {
    Ok(regular_count_formula(p, &factor_xn_minus_1(n, p)?.shape()))
}

/// An element of `F_p[x]/(x^n - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub n: usize,
    /// Degree below `n`.
    pub residue: Poly,
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.residue.fmt(f)
    }
}

/// The ring `F_p[x]/(x^n - 1)` with its factorization and CRT idempotents.
#[derive(Clone, Debug)]
pub struct LinearRing {
    n: usize,
    p: u64,
    modulus: Poly,
    factorization: Factorization,
    // per factor: (f_i^{m_i}, idempotent e_i)
    components: Vec<(Poly, Poly)>,
}

impl LinearRing {
    pub fn new(n: usize, p: u64) -> Result<Self> {
        let factorization = factor_xn_minus_1(n, p)?;
        let modulus = Poly::x_pow_minus_one(p, n)?;
        let components = factorization
            .factors
            .iter()
            .map(|f| {
                let local = f.poly.pow(f.multiplicity as u64);
                let cofactor = modulus.div_rem(&local).0;
                let inv = cofactor.inverse_mod(&local).expect("coprime components");
                (local, (&cofactor * &inv).rem(&modulus))
            })
            .collect();
        Ok(Self { n, p, modulus, factorization, components })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn element(&self, poly: &Poly) -> Result<RingElement> {
        if poly.characteristic() != self.p {
            return Err(Error::InvalidArgument(format!(
                "polynomial over F_{}, ring over F_{}",
                poly.characteristic(),
                self.p
            )));
        }
        Ok(RingElement { n: self.n, residue: poly.rem(&self.modulus) })
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<RingElement> {
        self.element(&Poly::new(self.p, coeffs.to_vec())?)
    }

    pub fn parse_csv(&self, text: &str) -> Result<RingElement> {
        self.element(&Poly::parse_csv(self.p, text)?)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement { n: self.n, residue: (&a.residue * &b.residue).rem(&self.modulus) }
    }

    /// Nilpotent iff every irreducible factor divides `a`; zero counts.
    pub fn is_nilpotent(&self, a: &RingElement) -> bool {
        self.factorization.factors.iter().all(|f| f.poly.divides(&a.residue))
    }

    /// A generalized inverse `b` (`aba = a`, `bab = b`) if `a` is regular.
    /// Each CRT component of `b` is the inverse of that of `a`, or zero where
    /// `a` vanishes.
    pub fn is_regular_element(&self, a: &RingElement) -> Result<Option<RingElement>> {
        let mut b = Poly::zero(self.p)?;
        for ((local, idempotent), f) in self.components.iter().zip(&self.factorization.factors) {
            let component = a.residue.rem(local);
            if component.is_zero() {
                continue;
            }
            if f.poly.divides(&component) {
                return Ok(None);
            }
            let inv = component.inverse_mod(local).expect("coprime to the factor");
            b = &b + &(&inv * idempotent);
        }
        let b = self.element(&b)?;
        if self.mul(&self.mul(a, &b), a) != *a || self.mul(&self.mul(&b, a), &b) != b {
            return Err(Error::Unsound(format!("{b} is not a generalized inverse of {a}")));
        }
        Ok(Some(b))
    }

    /// Counts regular elements by direct search: `a` is regular iff
    /// `a^2 b = a` for some `b`. Requires `p^n <= cap`.
    pub fn brute_force_count(&self, cap: u64) -> Result<u64> {
        let size = (self.p as u128).checked_pow(self.n as u32).filter(|&s| s <= cap as u128);
        let size = size
            .ok_or_else(|| Error::CapExceeded { what: format!("{}^{} ring elements", self.p, self.n), cap })?
            as u64;
        let (n, p) = (self.n, self.p);
        let decode = |mut idx: u64, out: &mut [u64]| {
            for c in out.iter_mut() {
                *c = idx % p;
                idx /= p;
            }
        };
        let count = (0..size)
            .into_par_iter()
            .filter(|&ai| {
                let mut a = vec![0u64; n];
                decode(ai, &mut a);
                let a2 = cyclic_mul(&a, &a, p);
                let mut b = vec![0u64; n];
                (0..size).any(|bi| {
                    decode(bi, &mut b);
                    cyclic_mul(&a2, &b, p) == a
                })
            })
            .count();
        Ok(count as u64)
    }
}

fn cyclic_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0u64; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let k = (i + j) % n;
            out[k] = (out[k] + x * y) % p;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[u64]) -> Poly {
        Poly::new(p, c.to_vec()).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = factor_xn_minus_1(4, 2).unwrap();
        assert_eq!(f.shape(), vec![(1, 4)]);
        assert_eq!(f.factors[0].poly, poly(2, &[1, 1]));
        let f = factor_xn_minus_1(3, 2).unwrap();
        assert_eq!(
            f.factors.iter().map(|f| f.poly.clone()).collect::<Vec<_>>(),
            vec![poly(2, &[1, 1]), poly(2, &[1, 1, 1])]
        );
        assert_eq!(factor_xn_minus_1(6, 2).unwrap().shape(), vec![(1, 2), (2, 2)]);
        let f = factor_xn_minus_1(3, 3).unwrap();
        assert_eq!(f.shape(), vec![(1, 3)]);
        assert_eq!(f.factors[0].poly, poly(3, &[2, 1]));
        assert_eq!(f.to_string(), "(x + 2)^3");
        assert!(factor_xn_minus_1(4, 6).is_err());
        assert!(factor_xn_minus_1(0, 2).is_err());
    }

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_cosets(7, 2), vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(cyclotomic_cosets(1, 5), vec![vec![0]]);
        assert_eq!(split_characteristic(12, 2), (3, 4));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_regulars(2, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(count_regulars(4, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(count_regulars(3, 2).unwrap(), BigUint::from(8u32));
        assert_eq!(count_regulars(6, 2).unwrap(), BigUint::from(39u32));
        assert_eq!(count_regulars(3, 3).unwrap(), BigUint::from(19u32));
        assert_eq!(regular_count_formula(2, &[(1, 1), (2, 1)]), BigUint::from(8u32));
    }

    #[test]
    fn element_examples() {
        let r = LinearRing::new(2, 2).unwrap();
        let s = r.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(r.is_regular_element(&s).unwrap(), None);
        assert!(r.is_nilpotent(&s));
        let x = r.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(r.is_regular_element(&x).unwrap(), Some(x.clone()));
        assert!(!r.is_nilpotent(&x));
        let zero = r.from_coeffs(&[]).unwrap();
        assert_eq!(r.is_regular_element(&zero).unwrap(), Some(zero.clone()));
        assert!(r.is_nilpotent(&zero));
        let r3 = LinearRing::new(3, 2).unwrap();
        assert!(!r3.is_nilpotent(&r3.from_coeffs(&[1, 1]).unwrap()));
        assert!(r3.is_regular_element(&r3.from_coeffs(&[1, 1]).unwrap()).unwrap().is_some());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(LinearRing::new(2, 2).unwrap().brute_force_count(DEFAULT_ELEMENT_CAP).unwrap(), 3);
        assert_eq!(LinearRing::new(3, 3).unwrap().brute_force_count(DEFAULT_ELEMENT_CAP).unwrap(), 19);
        assert!(LinearRing::new(17, 2).unwrap().brute_force_count(DEFAULT_ELEMENT_CAP).is_err());
    }
}
