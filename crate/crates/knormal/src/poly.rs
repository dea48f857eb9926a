//! Dense univariate polynomials over a generic field context.
//!
//! A polynomial is a `Vec` of coefficients in ascending order with no trailing
//! zeros; the zero polynomial is the empty vector. All functions return
//! normalized vectors and accept denormalized input.

use crate::error::{Error, Result};
use crate::fields::Field;

pub fn normalize<F: Field>(f: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
    while v.last().map_or(false, |c| f.is_zero(c)) {
        v.pop();
    }
    v
}

/// None for the zero polynomial.
pub fn degree<E>(v: &[E]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub fn one<F: Field>(f: &F) -> Vec<F::Elem> {
    vec![f.one()]
}

pub fn x<F: Field>(f: &F) -> Vec<F::Elem> {
    vec![f.zero(), f.one()]
}

/// x^n - 1.
pub fn xn_minus_1<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
    assert!(n >= 1);
    let mut v = vec![f.zero(); n + 1];
    v[0] = f.neg(&f.one());
    v[n] = f.one();
    v
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    normalize(f, v)
}

pub fn neg<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.neg(x)).collect()
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    add(f, a, &neg(f, b))
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let a = normalize(f, a.to_vec());
    let b = normalize(f, b.to_vec());
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(x, y);
            v[i + j] = f.add(&v[i + j], &t);
        }
    }
    normalize(f, v)
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    normalize(f, a.iter().map(|x| f.mul(c, x)).collect())
}

/// Quotient and remainder; `DivisionByZero` if b = 0.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<(Vec<F::Elem>, Vec<F::Elem>)> {
    let b = normalize(f, b.to_vec());
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let mut r = normalize(f, a.to_vec());
    if r.len() < b.len() {
        return Ok((vec![], r));
    }
    let lead_inv = f.inv(b.last().unwrap())?;
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let t = f.mul(r.last().unwrap(), &lead_inv);
        q[shift] = t.clone();
        for (j, bc) in b.iter().enumerate() {
            let s = f.mul(&t, bc);
            r[shift + j] = f.sub(&r[shift + j], &s);
        }
        r = normalize(f, r);
    }
    Ok((normalize(f, q), r))
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    Ok(divrem(f, a, b)?.1)
}

/// Quotient of an exact division; `Internal` if the remainder is nonzero.
pub fn div_exact<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let (q, r) = divrem(f, a, b)?;
    if !r.is_empty() {
        return Err(Error::Internal("inexact polynomial division".into()));
    }
    Ok(q)
}

/// Scale to leading coefficient 1; the zero polynomial maps to itself.
pub fn make_monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let a = normalize(f, a.to_vec());
    match a.last() {
        None => a,
        Some(c) if *c == f.one() => a,
        Some(c) => {
            let inv = f.inv(c).expect("leading coefficient is nonzero");
            scale(f, &inv, &a)
        }
    }
}

/// Monic gcd; `GcdOfZeros` if both arguments are zero.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let mut a = normalize(f, a.to_vec());
    let mut b = normalize(f, b.to_vec());
    if a.is_empty() && b.is_empty() {
        return Err(Error::GcdOfZeros);
    }
    while !b.is_empty() {
        let r = rem(f, &a, &b)?;
        a = b;
        b = r;
    }
    Ok(make_monic(f, &a))
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g and g monic.
pub fn egcd<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<(Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>)> {
    let mut r0 = normalize(f, a.to_vec());
    let mut r1 = normalize(f, b.to_vec());
    if r0.is_empty() && r1.is_empty() {
        return Err(Error::GcdOfZeros);
    }
    let (mut s0, mut s1) = (one(f), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), one(f));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1)?;
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    // scale all three so the gcd is monic
    let c = r0.last().expect("gcd of nonzero inputs is nonzero").clone();
    let inv = f.inv(&c)?;
    Ok((scale(f, &inv, &r0), scale(f, &inv, &s0), scale(f, &inv, &t0)))
}

/// Horner evaluation.
pub fn eval<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.mul(&acc, x);
        acc = f.add(&acc, c);
    }
    acc
}

/// base^e mod m by repeated squaring; m must have degree >= 1.
pub fn powmod<F: Field>(f: &F, base: &[F::Elem], mut e: u128, m: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let mut b = rem(f, base, m)?;
    let mut acc = rem(f, &one(f), m)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m)?;
        }
        b = rem(f, &mul(f, &b, &b), m)?;
        e >>= 1;
    }
    Ok(acc)
}

/// Rabin's irreducibility test over the coefficient field.
///
/// v of degree d is irreducible iff x^(r^d) = x mod v and, for every prime
/// l | d, gcd(x^(r^(d/l)) - x, v) = 1, where r = |F|.
pub fn is_irreducible<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    let v = make_monic(f, v);
    let d = match degree(&v) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(d) => d,
    };
    let r = f.order();
    let checkpoints: Vec<usize> = crate::arith::distinct_prime_factors(d as u64)
        .iter()
        .map(|&l| d / l as usize)
        .collect();
    let xp = x(f);
    let mut h = xp.clone();
    for k in 1..=d {
        h = powmod(f, &h, r, &v).expect("modulus has degree >= 1");
        if checkpoints.contains(&k) {
            let g = gcd(f, &sub(f, &h, &xp), &v).expect("v is nonzero");
            if degree(&g) != Some(0) {
                return false;
            }
        }
    }
    h == rem(f, &xp, &v).expect("modulus has degree >= 1")
}

/// The monic irreducible of degree d whose non-leading coefficients, read as
/// base-|F| digits of an integer (constant term least significant), are
/// minimal. Deterministic, so default moduli are reproducible.
pub fn smallest_irreducible<F: Field>(f: &F, d: usize) -> Vec<F::Elem> {
    assert!(d >= 1);
    let r = f.order();
    let mut value: u128 = 0;
    loop {
        let mut v = Vec::with_capacity(d + 1);
        let mut rem = value;
        for _ in 0..d {
            v.push(f.element(rem % r));
            rem /= r;
        }
        assert!(rem == 0, "no irreducible of degree {d} found");
        v.push(f.one());
        if is_irreducible(f, &v) {
            return v;
        }
        value += 1;
    }
}

/// Chinese remainder lift: the unique poly of degree < sum of moduli degrees
/// matching every (residue, modulus) pair. Moduli must be pairwise coprime.
pub fn crt<F: Field>(f: &F, parts: &[(Vec<F::Elem>, Vec<F::Elem>)]) -> Result<Vec<F::Elem>> {
    assert!(!parts.is_empty());
    for (i, (_, mi)) in parts.iter().enumerate() {
        for (_, mj) in parts.iter().skip(i + 1) {
            if degree(&gcd(f, mi, mj)?) != Some(0) {
                return Err(Error::NonCoprimeModuli);
            }
        }
    }
    let mut acc_r = rem(f, &parts[0].0, &parts[0].1)?;
    let mut acc_m = make_monic(f, &parts[0].1);
    for (ri, mi) in parts.iter().skip(1) {
        // x = acc_r + acc_m * t with t = (ri - acc_r) / acc_m mod mi
        let (_, inv, _) = egcd(f, &acc_m, mi)?;
        let diff = sub(f, &rem(f, ri, mi)?, &rem(f, &acc_r, mi)?);
        let t = rem(f, &mul(f, &diff, &inv), mi)?;
        acc_r = add(f, &acc_r, &mul(f, &acc_m, &t));
        acc_m = mul(f, &acc_m, mi);
    }
    rem(f, &acc_r, &acc_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::PrimeField;
    use proptest::prelude::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn division_over_f2() {
        let f = f2();
        // x^3 + x + 1 = (x + 1)(x^2 + x) + 1
        let (q, r) = divrem(&f, &[1, 1, 0, 1], &[1, 1]).unwrap();
        assert_eq!(q, vec![0, 1, 1]);
        assert_eq!(r, vec![1]);
        assert!(divrem(&f, &[1, 1], &[]).is_err());
        let (q, r) = divrem(&f, &[1], &[1, 1]).unwrap();
        assert!(q.is_empty());
        assert_eq!(r, vec![1]);
    }

    #[test]
    fn gcd_over_f2() {
        let f = f2();
        // x^2 + 1 = (x + 1)^2 over F_2
        assert_eq!(gcd(&f, &[1, 0, 1], &[1, 1]).unwrap(), vec![1, 1]);
        assert_eq!(gcd(&f, &[], &[1, 1]).unwrap(), vec![1, 1]);
        assert_eq!(gcd(&f, &[], &[]), Err(Error::GcdOfZeros));
    }

    #[test]
    fn monic_gcd_over_f5() {
        let f = PrimeField::new(5).unwrap();
        // gcd(2x + 2, 3x + 3) = x + 1
        assert_eq!(gcd(&f, &[2, 2], &[3, 3]).unwrap(), vec![1, 1]);
    }

    #[test]
    fn frobenius_fixed_points() {
        let f = f2();
        // x^(2^3) = x mod m exactly because m = x^3 + x + 1 is irreducible
        let m = vec![1, 1, 0, 1];
        assert_eq!(powmod(&f, &x(&f), 8, &m).unwrap(), x(&f));
    }

    #[test]
    fn irreducibility() {
        let f = f2();
        assert!(is_irreducible(&f, &[1, 1, 0, 1])); // x^3+x+1
        assert!(is_irreducible(&f, &[1, 1, 1])); // x^2+x+1
        assert!(!is_irreducible(&f, &[1, 0, 0, 1])); // x^3+1
        assert!(!is_irreducible(&f, &[1, 0, 1])); // (x+1)^2
        assert!(!is_irreducible(&f, &[1])); // constants
        assert!(is_irreducible(&f, &[0, 1])); // x
        let f3 = PrimeField::new(3).unwrap();
        assert!(is_irreducible(&f3, &[1, 0, 1])); // x^2+1, -1 is a non-residue
        assert!(!is_irreducible(&f3, &[1, 0, 0, 0, 1])); // x^4+1
    }

    #[test]
    fn smallest_irreducibles_are_the_classical_ones() {
        let f = f2();
        assert_eq!(smallest_irreducible(&f, 1), vec![0, 1]);
        assert_eq!(smallest_irreducible(&f, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(&f, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(&f, 4), vec![1, 1, 0, 0, 1]);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(smallest_irreducible(&f3, 4), vec![2, 1, 0, 0, 1]);
    }

    #[test]
    fn crt_round_trip() {
        let f = f2();
        let parts = vec![
            (vec![1], vec![1, 1]),          // 1 mod x+1
            (vec![0, 1], vec![1, 1, 1]),    // x mod x^2+x+1
            (vec![1, 1], vec![1, 1, 0, 1]), // x+1 mod x^3+x+1
        ];
        let lifted = crt(&f, &parts).unwrap();
        assert!(degree(&lifted) < Some(6));
        for (r, m) in &parts {
            assert_eq!(rem(&f, &lifted, m).unwrap(), *r);
        }
        let bad = vec![(vec![1], vec![1, 1]), (vec![0], vec![1, 0, 1])];
        assert_eq!(crt(&f, &bad), Err(Error::NonCoprimeModuli));
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in proptest::collection::vec(0u64..5, 0..9),
                               b in proptest::collection::vec(0u64..5, 1..6)) {
            let f = PrimeField::new(5).unwrap();
            let b = normalize(&f, b);
            prop_assume!(!b.is_empty());
            let a = normalize(&f, a);
            let (q, r) = divrem(&f, &a, &b).unwrap();
            let back = add(&f, &mul(&f, &q, &b), &r);
            prop_assert_eq!(back, a);
            prop_assert!(r.len() < b.len());
        }

        #[test]
        fn bezout_identity(a in proptest::collection::vec(0u64..3, 0..8),
                           b in proptest::collection::vec(0u64..3, 0..8)) {
            let f = PrimeField::new(3).unwrap();
            let a = normalize(&f, a);
            let b = normalize(&f, b);
            prop_assume!(!a.is_empty() || !b.is_empty());
            let (g, s, t) = egcd(&f, &a, &b).unwrap();
            let lhs = add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b));
            prop_assert_eq!(&lhs, &g);
            prop_assert_eq!(&g, &gcd(&f, &a, &b).unwrap());
            if !a.is_empty() {
                prop_assert!(rem(&f, &a, &g).unwrap().is_empty());
            }
            if !b.is_empty() {
                prop_assert!(rem(&f, &b, &g).unwrap().is_empty());
            }
        }
    }
}
