//! Small integer utilities: primality, factoring, multiplicative orders,
//! cyclotomic cosets.
//!
//! Everything here is desk-scale (trial division is plenty).

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of n, ascending. Empty for n <= 1.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of a modulo n. Requires gcd(a, n) = 1.
pub fn mul_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let a = a % n;
    debug_assert_eq!(gcd(a, n), 1, "mul_order needs gcd(a, n) = 1");
    let mut t = a;
    let mut ord = 1u64;
    while t != 1 {
        t = t * a % n;
        ord += 1;
        debug_assert!(ord <= n, "order search ran away");
    }
    ord
}

/// Smallest generator of Z_n^x for prime n.
pub fn smallest_primitive_root(n: u64) -> u64 {
    debug_assert!(is_prime(n));
    if n == 2 {
        return 1;
    }
    let target = n - 1;
    let primes = distinct_prime_factors(target);
    'outer: for g in 2..n {
        for &l in &primes {
            if pow_mod(g, target / l, n) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("Z_n^x is cyclic for prime n");
}

pub fn pow_mod(base: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = (base % n) as u128;
    let n = n as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc as u64
}

/// q-classes (cyclotomic cosets) of Z_n under multiplication by q, each
/// sorted ascending, in canonical order: {0} first, then by smallest
/// representative. Requires gcd(n, q) = 1 so multiplication by q permutes Z_n.
pub fn q_class_partition(n: u64, q: u64) -> Result<Vec<Vec<u64>>> {
    if n == 1 {
        return Ok(vec![vec![0]]);
    }
    if gcd(q % n, n) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let mut seen = vec![false; n as usize];
    seen[0] = true;
    let mut classes = vec![vec![0u64]];
    for a in 1..n {
        if seen[a as usize] {
            continue;
        }
        let mut class = Vec::new();
        let mut cur = a;
        loop {
            class.push(cur);
            seen[cur as usize] = true;
            cur = (cur as u128 * q as u128 % n as u128) as u64;
            if cur == a {
                break;
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(classes)
}

/// Write n = p^t * n' with p not dividing n'; returns (t, n').
pub fn split_p_part(mut n: u64, p: u64) -> (u32, u64) {
    let mut t = 0u32;
    while n % p == 0 {
        n /= p;
        t += 1;
    }
    (t, n)
}
