//! Finite-field arithmetic contexts.
//!
//! A field is represented by a context object owning its modulus; elements are
//! plain coefficient vectors (ascending powers) that only make sense relative
//! to their context. `PrimeField` is Z_p; `Extension<F>` is F[y]/(modulus) for
//! any base context F, so towers are built by nesting.
//!
//! Enumeration order is fixed once and for all: the element of index i has the
//! base-|F| digits of i as coordinates, least significant digit first. Index 0
//! is 0 and index 1 is 1 in every field.

use std::fmt::Debug;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};

/// Arithmetic context for a finite field.
pub trait Field {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `DivisionByZero` on 0.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn characteristic(&self) -> u64;
    /// Number of elements.
    fn order(&self) -> u128;
    /// Element with the given enumeration index (0 <= index < order).
    fn element(&self, index: u128) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u128;
    /// k mod p embedded as a field element.
    fn int_embed(&self, k: i64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// True iff a has multiplicative order exactly t.
pub fn has_exact_order<F: Field>(f: &F, a: &F::Elem, t: u64) -> bool {
    if f.is_zero(a) {
        return false;
    }
    if f.pow(a, t as u128) != f.one() {
        return false;
    }
    arith::distinct_prime_factors(t)
        .iter()
        .all(|&l| f.pow(a, (t / l) as u128) != f.one())
}

/// Z_p for prime p. Elements are u64 in [0, p).
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, (self.p - 2) as u128))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> u128 {
        self.p as u128
    }

    fn element(&self, index: u128) -> u64 {
        debug_assert!(index < self.order());
        index as u64
    }

    fn index_of(&self, a: &u64) -> u128 {
        *a as u128
    }

    fn int_embed(&self, k: i64) -> u64 {
        let p = self.p as i64;
        (((k % p) + p) % p) as u64
    }
}

/// F[y]/(modulus) over a base context F. Elements are coefficient vectors of
/// fixed length deg(modulus), ascending powers of the residue of y.
#[derive(Debug, Clone)]
pub struct Extension<F: Field> {
    base: Arc<F>,
    modulus: Vec<F::Elem>,
}

impl<F: Field> Extension<F> {
    /// Callers must pass a monic irreducible modulus of degree >= 1;
    /// validation happens at the tower-building layer.
    pub(crate) fn new(base: Arc<F>, modulus: Vec<F::Elem>) -> Self {
        assert!(modulus.len() >= 2, "modulus must have degree >= 1");
        assert!(
            *modulus.last().unwrap() == base.one(),
            "modulus must be monic"
        );
        Extension { base, modulus }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn base(&self) -> &Arc<F> {
        &self.base
    }

    pub fn modulus(&self) -> &[F::Elem] {
        &self.modulus
    }

    /// Constant embedding of a base-field element.
    pub fn embed_base(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = c.clone();
        v
    }

    /// Inverse of `embed_base`: Some(c) iff all higher coordinates vanish.
    pub fn descend(&self, a: &Vec<F::Elem>) -> Option<F::Elem> {
        if a[1..].iter().all(|c| self.base.is_zero(c)) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    /// The residue class of y, i.e. the adjoined root of the modulus.
    pub fn gen(&self) -> Vec<F::Elem> {
        let d = self.degree();
        let mut v = vec![self.base.zero(); d];
        if d == 1 {
            // F[y]/(y + c): y is congruent to the constant -c.
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = self.base.one();
        }
        v
    }

    /// Reduce an ascending coefficient vector (any length) mod the modulus and
    /// pad to fixed width.
    fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let d = self.degree();
        let b = &*self.base;
        let mut i = v.len();
        while i > d {
            i -= 1;
            if b.is_zero(&v[i]) {
                continue;
            }
            let t = v[i].clone();
            v[i] = b.zero();
            // y^i = y^(i-d) * (y^d mod modulus); a single top-down pass
            // suffices because substitution only feeds lower positions
            for j in 0..d {
                let s = b.mul(&t, &self.modulus[j]);
                v[i - d + j] = b.sub(&v[i - d + j], &s);
            }
        }
        v.truncate(d);
        while v.len() < d {
            v.push(b.zero());
        }
        v
    }
}

impl<F: Field> Field for Extension<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.degree()]
    }

    fn one(&self) -> Self::Elem {
        self.embed_base(&self.base.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.is_zero(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let d = self.degree();
        let bs = &*self.base;
        let mut prod = vec![bs.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if bs.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = bs.mul(x, y);
                prod[i + j] = bs.add(&prod[i + j], &t);
            }
        }
        self.reduce(prod)
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // a^(|F|-2); exact and plenty fast at the sizes this crate targets
        Ok(self.pow(a, self.order() - 2))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn order(&self) -> u128 {
        let b = self.base.order();
        let mut acc: u128 = 1;
        for _ in 0..self.degree() {
            acc = acc.checked_mul(b).expect("field order overflows u128");
        }
        acc
    }

    fn element(&self, index: u128) -> Self::Elem {
        debug_assert!(index < self.order());
        let b = self.base.order();
        let mut rem = index;
        (0..self.degree())
            .map(|_| {
                let digit = rem % b;
                rem /= b;
                self.base.element(digit)
            })
            .collect()
    }

    fn index_of(&self, a: &Self::Elem) -> u128 {
        let b = self.base.order();
        let mut acc: u128 = 0;
        for c in a.iter().rev() {
            acc = acc * b + self.base.index_of(c);
        }
        acc
    }

    fn int_embed(&self, k: i64) -> Self::Elem {
        self.embed_base(&self.base.int_embed(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Extension<PrimeField> {
        let f2 = Arc::new(PrimeField::new(2).unwrap());
        // y^2 + y + 1
        Extension::new(f2, vec![1, 1, 1])
    }

    #[test]
    fn prime_field_basics() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(&3, &4), 2);
        assert_eq!(f5.mul(&3, &4), 2);
        assert_eq!(f5.neg(&2), 3);
        assert_eq!(f5.inv(&3).unwrap(), 2);
        assert_eq!(f5.inv(&0), Err(Error::DivisionByZero));
        assert_eq!(f5.int_embed(-11), 4);
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn extension_arithmetic() {
        let f4 = f4();
        let u = f4.gen();
        // u^2 = u + 1, u^3 = 1
        assert_eq!(f4.mul(&u, &u), vec![1, 1]);
        assert_eq!(f4.pow(&u, 3), f4.one());
        assert_eq!(f4.inv(&u).unwrap(), vec![1, 1]);
        assert!(f4.inv(&f4.zero()).is_err());
        assert_eq!(f4.order(), 4);
    }

    #[test]
    fn enumeration_round_trip() {
        let f4 = f4();
        for i in 0..4u128 {
            assert_eq!(f4.index_of(&f4.element(i)), i);
        }
        assert_eq!(f4.element(0), f4.zero());
        assert_eq!(f4.element(1), f4.one());
    }

    #[test]
    fn exact_orders() {
        let f4 = f4();
        let u = f4.gen();
        assert!(has_exact_order(&f4, &u, 3));
        assert!(!has_exact_order(&f4, &u, 1));
        assert!(!has_exact_order(&f4, &f4.one(), 3));
        assert!(!has_exact_order(&f4, &f4.zero(), 1));
    }

    #[test]
    fn degree_one_extension_collapses() {
        // F_3[y]/(y) is F_3 with the generator equal to 0
        let f3 = Arc::new(PrimeField::new(3).unwrap());
        let f = Extension::new(f3, vec![0, 1]);
        assert_eq!(f.gen(), vec![0]);
        assert_eq!(f.mul(&vec![2], &vec![2]), vec![1]);
        assert_eq!(f.order(), 3);
    }
}
