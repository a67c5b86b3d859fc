//! Polynomials over a prime field `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest prime accepted; keeps every product of two coefficients in `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p > MAX_PRIME || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A polynomial over `F_p`, coefficients lowest degree first with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Reduces the coefficients mod `p`.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_prime(p)?;
        Ok(Self::from_reduced(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    fn from_reduced(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, Vec::new())
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::new(p, vec![1])
    }

    /// `c * x^k`.
    pub fn monomial(p: u64, c: u64, k: usize) -> Result<Self> {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(p, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(p: u64, n: usize) -> Result<Self> {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = p - 1;
        coeffs[n] = 1;
        Self::new(p, coeffs)
    }

    /// Comma-separated coefficients, lowest degree first: `1,0,1` is `1 + x^2`.
    pub fn parse_csv(p: u64, text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| Error::Parse(format!("coefficient {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, coeffs)
    }

    pub fn to_csv(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different fields");
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        Self::from_reduced(self.p, self.coeffs.iter().map(|&a| a * c % self.p).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.same_field(divisor);
        let p = self.p;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::from_reduced(p, Vec::new()), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * lead_inv % p;
            quot[k] = c;
            if c != 0 {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = (rem[k + j] + p - c * b % p) % p;
                }
            }
        }
        rem.truncate(dd);
        (Self::from_reduced(p, quot), Self::from_reduced(p, rem))
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        self.div_rem(modulus).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let zero = Self::from_reduced(p, Vec::new());
        let one = Self::from_reduced(p, vec![1]);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (quot, r) = r0.div_rem(&r1);
            let s = &s0 - &(&quot * &s1);
            let t = &t0 - &(&quot * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = inv_mod(r0.leading(), p);
        (r0.scale(c), s0.scale(c), t0.scale(c))
    }

    /// Inverse modulo `modulus`, if `self` is a unit there.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(modulus).ext_gcd(modulus);
        g.is_one().then(|| s.rem(modulus))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::from_reduced(self.p, vec![1]);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut acc = Self::from_reduced(self.p, vec![1]).rem(modulus);
        let mut base = self.rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (&acc * &base).rem(modulus);
            }
            exp >>= 1;
            if exp > 0 {
                base = (&base * &base).rem(modulus);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::from_reduced(p, self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| (k as u64 % p) * c % p).collect())
    }

    /// Ben-Or: `f` of degree `d` is irreducible iff `gcd(f, x^(p^i) - x) = 1`
    /// for every `i <= d/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        let x = Self::from_reduced(self.p, vec![0, 1]);
        let mut xp = x.clone();
        for _ in 0..d / 2 {
            xp = xp.pow_mod(self.p, self);
            if !self.gcd(&(&xp - &x)).is_one() {
                return false;
            }
        }
        true
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.same_field(rhs);
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_reduced(p, (0..n).map(|k| (self.coeff(k) + rhs.coeff(k)) % p).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let p = self.p;
        Poly::from_reduced(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.same_field(rhs);
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return Poly::from_reduced(p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Poly::from_reduced(p, out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, k) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{k}")?,
                (_, 1) => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Null space of a matrix over `F_p`, one basis vector per free column.
pub(crate) fn null_space(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                let pivot = rows[r].clone();
                for (v, &pv) in rows[k].iter_mut().zip(&pivot) {
                    *v = (*v + p - f * pv % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[i][free]) % p;
            }
            v
        })
        .collect()
}

/// Berlekamp's algorithm: the monic irreducible factors of a monic,
/// squarefree `f`, sorted.
pub(crate) fn berlekamp(f: &Poly) -> Vec<Poly> {
    let p = f.p;
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return if n == 1 { vec![f.monic()] } else { Vec::new() };
    }
    // row i: x^(i p) mod f
    let xp = Poly::from_reduced(p, vec![0, 1]).pow_mod(p, f);
    let mut row = Poly::from_reduced(p, vec![1]);
    let mut q = Vec::with_capacity(n);
    for _ in 0..n {
        q.push((0..n).map(|j| row.coeff(j)).collect::<Vec<_>>());
        row = (&row * &xp).rem(f);
    }
    // h^p = h mod f  <=>  v (Q - I) = 0, so solve (Q - I)^T v = 0
    let system: Vec<Vec<u64>> =
        (0..n).map(|j| (0..n).map(|i| (q[i][j] + if i == j { p - 1 } else { 0 }) % p).collect()).collect();
    let basis = null_space(system, n, p);
    let target = basis.len();
    let mut factors = vec![f.monic()];
    for v in &basis {
        if factors.len() == target {
            break;
        }
        let h = Poly::from_reduced(p, v.clone());
        if h.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for g in factors {
            let mut pending = vec![g];
            for c in 0..p {
                let shifted = &h - &Poly::from_reduced(p, vec![c]);
                let mut split = Vec::new();
                for g in pending {
                    let d = g.gcd(&shifted);
                    if d.degree().unwrap_or(0) > 0 && d.degree() < g.degree() {
                        split.push(g.div_rem(&d).0.monic());
                        split.push(d);
                    } else {
                        split.push(g);
                    }
                }
                pending = split;
            }
            next.extend(pending);
        }
        factors = next;
    }
    factors.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[u64]) -> Poly {
        Poly::new(p, c.to_vec()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(poly(2, &[1, 0, 1]).gcd(&poly(2, &[1, 1])), poly(2, &[1, 1]));
        let x = poly(2, &[0, 1]);
        assert_eq!((&x * &x).rem(&Poly::x_pow_minus_one(2, 2).unwrap()), poly(2, &[1]));
        assert!((&poly(2, &[1, 1]) + &poly(2, &[1, 1])).is_zero());
        assert_eq!(poly(3, &[2, 0, 1]).to_string(), "x^2 + 2");
        assert_eq!(poly(5, &[0, 3, 0, 1]).to_string(), "x^3 + 3x");
        assert!(Poly::new(4, vec![1]).is_err());
        assert!(Poly::new(1, vec![1]).is_err());
    }

    #[test]
    fn div_rem_and_ext_gcd() {
        let a = poly(5, &[3, 1, 4, 1, 2]);
        let b = poly(5, &[2, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn csv_roundtrip() {
        let f = Poly::parse_csv(3, "1, 0, 2, 0").unwrap();
        assert_eq!(f, poly(3, &[1, 0, 2]));
        assert_eq!(f.to_csv(), "1,0,2");
        assert_eq!(Poly::zero(3).unwrap().to_csv(), "0");
        assert!(Poly::parse_csv(3, "1,x").is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(poly(2, &[1, 1, 1]).is_irreducible());
        assert!(!poly(2, &[1, 0, 1]).is_irreducible());
        assert!(poly(2, &[1, 1, 0, 1]).is_irreducible());
        assert!(!poly(3, &[2, 0, 1]).is_irreducible());
        assert!(poly(3, &[1, 0, 1]).is_irreducible());
        assert!(!poly(2, &[1]).is_irreducible());
    }

    #[test]
    fn berlekamp_splits() {
        // x^7 - 1 over F_2 = (x + 1)(x^3 + x + 1)(x^3 + x^2 + 1)
        let f = Poly::x_pow_minus_one(2, 7).unwrap();
        let fs = berlekamp(&f);
        assert_eq!(fs, vec![poly(2, &[1, 1]), poly(2, &[1, 0, 1, 1]), poly(2, &[1, 1, 0, 1])]);
        let prod = fs.iter().fold(Poly::one(2).unwrap(), |acc, g| &acc * g);
        assert_eq!(prod, f);
    }
}
