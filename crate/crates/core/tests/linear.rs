use num_bigint::BigUint;
use proptest::prelude::*;
use vnreg::linear::{count_regulars, cyclotomic_cosets, factor_xn_minus_1, LinearRing, DEFAULT_ELEMENT_CAP};
use vnreg::poly::Poly;

const MATRIX: [(usize, u64); 7] = [(2, 2), (4, 2), (6, 2), (8, 2), (3, 3), (6, 3), (5, 5)];

fn all_elements(ring: &LinearRing) -> Vec<Vec<u64>> {
    let (n, p) = (ring.length(), ring.characteristic());
    (0..p.pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let c = i % p;
                    i /= p;
                    c
                })
                .collect()
        })
        .collect()
}

// no monic divisor of degree 1..=d/2, by trial division over all candidates
fn oracle_irreducible(f: &Poly) -> bool {
    let p = f.characteristic();
    let d = f.degree().unwrap();
    (1..=d / 2).all(|k| {
        (0..p.pow(k as u32)).all(|mut i| {
            let mut coeffs: Vec<u64> = (0..k)
                .map(|_| {
                    let c = i % p;
                    i /= p;
                    c
                })
                .collect();
            coeffs.push(1);
            !f.rem(&Poly::new(p, coeffs).unwrap()).is_zero()
        })
    })
}

#[test]
fn formula_matches_brute_force() {
    for (n, p) in MATRIX {
        let ring = LinearRing::new(n, p).unwrap();
        assert_eq!(
            count_regulars(n, p).unwrap(),
            BigUint::from(ring.brute_force_count(DEFAULT_ELEMENT_CAP).unwrap()),
            "n = {n}, p = {p}"
        );
    }
}

#[test]
fn coprime_length_makes_everything_regular() {
    for (n, p) in [(3usize, 2u64), (5, 2), (2, 3), (4, 3), (7, 2), (4, 5)] {
        assert_eq!(count_regulars(n, p).unwrap(), BigUint::from(p).pow(n as u32));
        let ring = LinearRing::new(n, p).unwrap();
        for a in all_elements(&ring) {
            assert!(ring.is_regular_element(&ring.from_coeffs(&a).unwrap()).unwrap().is_some());
        }
    }
}

#[test]
fn regular_elements_and_inverses() {
    for (n, p) in [(2usize, 2u64), (4, 2), (6, 2), (3, 3), (6, 3), (5, 5)] {
        let ring = LinearRing::new(n, p).unwrap();
        let elems: Vec<_> = all_elements(&ring).iter().map(|a| ring.from_coeffs(a).unwrap()).collect();
        let mut count = 0u64;
        for a in &elems {
            let brute = elems.iter().any(|b| ring.mul(&ring.mul(a, b), a) == *a);
            match ring.is_regular_element(a).unwrap() {
                Some(b) => {
                    assert!(brute);
                    assert_eq!(ring.mul(&ring.mul(a, &b), a), *a);
                    assert_eq!(ring.mul(&ring.mul(&b, a), &b), b);
                    count += 1;
                }
                None => assert!(!brute, "{a}"),
            }
            // nonzero nilpotents are never regular
            if ring.is_nilpotent(a) && !a.residue.is_zero() {
                assert!(ring.is_regular_element(a).unwrap().is_none());
            }
            // nilpotency agrees with some power vanishing
            let mut power = a.clone();
            let mut vanishes = power.residue.is_zero();
            for _ in 0..n {
                power = ring.mul(&power, a);
                vanishes |= power.residue.is_zero();
            }
            assert_eq!(ring.is_nilpotent(a), vanishes, "{a}");
        }
        assert_eq!(BigUint::from(count), count_regulars(n, p).unwrap());
    }
}

#[test]
fn factorizations_are_sound() {
    for p in [2u64, 3, 5, 7] {
        for n in 1..=24usize {
            let f = factor_xn_minus_1(n, p).unwrap();
            assert_eq!(f.product(), Poly::x_pow_minus_one(p, n).unwrap());
            let mut seen = Vec::new();
            for fac in &f.factors {
                assert_eq!(fac.poly, fac.poly.monic());
                assert!(fac.poly.is_irreducible());
                if fac.degree <= 6 {
                    assert!(oracle_irreducible(&fac.poly), "{}", fac.poly);
                }
                assert!(!seen.contains(&fac.poly));
                seen.push(fac.poly.clone());
            }
            let mut m = n;
            while (m as u64).is_multiple_of(p) {
                m /= p as usize;
            }
            assert_eq!(f.factors.len(), cyclotomic_cosets(m, p).len());
        }
    }
}

#[test]
fn factorization_examples() {
    let p2 = |c: &[u64]| Poly::new(2, c.to_vec()).unwrap();
    let f = factor_xn_minus_1(4, 2).unwrap();
    assert_eq!(f.factors.len(), 1);
    assert_eq!((f.factors[0].poly.clone(), f.factors[0].multiplicity), (p2(&[1, 1]), 4));
    let f = factor_xn_minus_1(3, 2).unwrap();
    assert_eq!(f.factors.iter().map(|x| x.poly.clone()).collect::<Vec<_>>(), vec![p2(&[1, 1]), p2(&[1, 1, 1])]);
    let f = factor_xn_minus_1(6, 2).unwrap();
    assert_eq!(
        f.factors.iter().map(|x| (x.poly.clone(), x.multiplicity)).collect::<Vec<_>>(),
        vec![(p2(&[1, 1]), 2), (p2(&[1, 1, 1]), 2)]
    );
}

#[test]
fn element_examples() {
    let r = LinearRing::new(2, 2).unwrap();
    assert!(r.is_regular_element(&r.parse_csv("1,1").unwrap()).unwrap().is_none());
    assert!(r.is_nilpotent(&r.parse_csv("1,1").unwrap()));
    let x = r.parse_csv("0,1").unwrap();
    assert_eq!(r.is_regular_element(&x).unwrap(), Some(x));
    let r3 = LinearRing::new(3, 2).unwrap();
    assert!(!r3.is_nilpotent(&r3.parse_csv("1,1").unwrap()));
    assert!(LinearRing::new(3, 4).is_err());
}

fn poly_strategy(p: u64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..p, 0..8).prop_map(move |c| Poly::new(p, c).unwrap())
}

proptest! {
    #[test]
    fn ring_laws(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_and_gcd(a in poly_strategy(5), b in poly_strategy(5)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert_eq!(g.leading(), 1);
        let (g2, s, t) = a.ext_gcd(&b);
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g2.clone());
        prop_assert_eq!(g2, g);
    }

    #[test]
    fn pow_mod_agrees_with_pow(a in poly_strategy(2), e in 0u64..20) {
        let m = Poly::x_pow_minus_one(2, 6).unwrap();
        prop_assert_eq!(a.pow_mod(e, &m), a.pow(e).rem(&m));
    }
}
