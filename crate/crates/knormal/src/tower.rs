//! The field tower F_p ⊂ F_q = F_{p^m} ⊂ F_Q = F_{q^n}.
//!
//! `FieldTower` owns every arithmetic context the rest of the crate needs:
//! the prime field, the middle field F_q, the top field F_Q represented
//! relative to F_q, and the Frobenius x ↦ x^q as a coordinate operation.
//! Moduli default to the smallest monic irreducible in a fixed enumeration
//! order, so reports are reproducible; both can be overridden.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fields::{has_exact_order, Extension, Field, PrimeField};
use crate::linalg;
use crate::poly;

pub type FqField = Extension<PrimeField>;
pub type FQField = Extension<FqField>;
pub type FqElem = Vec<u64>;
pub type FQElem = Vec<FqElem>;

/// Largest supported field order; keeps every index in u64 territory.
const MAX_ORDER: u128 = 1 << 63;

#[derive(Debug, Clone)]
pub struct FieldTower {
    p: u64,
    m: usize,
    n: usize,
    q: u64,
    big_q: u128,
    fp: Arc<PrimeField>,
    fq: Arc<FqField>,
    fqn: Arc<FQField>,
    /// z^q where z generates F_Q over F_q; Frobenius is Horner evaluation
    /// at this point because the F_q coordinates are Frobenius-fixed.
    frob_base: FQElem,
}

impl FieldTower {
    pub fn new(
        p: u64,
        m: usize,
        n: usize,
        modulus_q: Option<Vec<u64>>,
        modulus_big: Option<Vec<FqElem>>,
    ) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::DegreeMismatch(
                "extension degrees m and n must be >= 1".into(),
            ));
        }
        let fp = Arc::new(PrimeField::new(p)?);
        let q = (p as u128)
            .checked_pow(m as u32)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::FieldTooLarge(format!("q = {p}^{m} exceeds 2^63")))? as u64;
        let big_q = (q as u128)
            .checked_pow(n as u32)
            .filter(|&v| v <= MAX_ORDER)
            .ok_or_else(|| Error::FieldTooLarge(format!("Q = {q}^{n} exceeds 2^63")))?;

        let modq = match modulus_q {
            Some(v) => {
                validate_modulus(&*fp, &v, m, "modulus_q")?;
                v
            }
            None => poly::smallest_irreducible(&*fp, m),
        };
        let fq = Arc::new(Extension::new(fp.clone(), modq));

        let modbig = match modulus_big {
            Some(v) => {
                for c in &v {
                    if c.len() != m {
                        return Err(Error::DegreeMismatch(format!(
                            "modulus_Q coefficient {c:?} is not an F_q element of length {m}"
                        )));
                    }
                }
                validate_modulus(&*fq, &v, n, "modulus_Q")?;
                v
            }
            None => poly::smallest_irreducible(&*fq, n),
        };
        let fqn = Arc::new(Extension::new(fq.clone(), modbig));

        let frob_base = fqn.pow(&fqn.gen(), q as u128);
        Ok(FieldTower {
            p,
            m,
            n,
            q,
            big_q,
            fp,
            fq,
            fqn,
            frob_base,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn big_q(&self) -> u128 {
        self.big_q
    }

    pub fn fp(&self) -> &Arc<PrimeField> {
        &self.fp
    }

    pub fn fq(&self) -> &Arc<FqField> {
        &self.fq
    }

    pub fn fqn(&self) -> &Arc<FQField> {
        &self.fqn
    }

    pub fn modulus_q(&self) -> &[u64] {
        self.fq.modulus()
    }

    pub fn modulus_big(&self) -> &[FqElem] {
        self.fqn.modulus()
    }

    /// α^(q^i); i is taken mod n since the Galois group has order n.
    pub fn frobenius(&self, a: &FQElem, i: usize) -> FQElem {
        let mut v = a.clone();
        for _ in 0..(i % self.n) {
            v = self.frobenius_once(&v);
        }
        v
    }

    fn frobenius_once(&self, a: &FQElem) -> FQElem {
        // σ(Σ c_j z^j) = Σ c_j (z^q)^j because c_j^q = c_j for c_j ∈ F_q
        let mut acc = self.fqn.zero();
        for c in a.iter().rev() {
            acc = self.fqn.mul(&acc, &self.frob_base);
            acc = self.fqn.add(&acc, &self.embed_fq(c));
        }
        acc
    }

    /// [α, α^q, …, α^(q^(n−1))].
    pub fn conjugates(&self, a: &FQElem) -> Vec<FQElem> {
        let mut out = Vec::with_capacity(self.n);
        out.push(a.clone());
        for i in 1..self.n {
            let next = self.frobenius_once(&out[i - 1]);
            out.push(next);
        }
        out
    }

    /// Tr(α) = Σ_i α^(q^i), coerced into F_q.
    pub fn trace(&self, a: &FQElem) -> Result<FqElem> {
        let mut acc = self.fqn.zero();
        let mut conj = a.clone();
        for i in 0..self.n {
            acc = self.fqn.add(&acc, &conj);
            if i + 1 < self.n {
                conj = self.frobenius_once(&conj);
            }
        }
        self.fqn.descend(&acc).ok_or_else(|| {
            Error::CoercionFailure("trace landed outside F_q".into())
        })
    }

    /// Tr^n_d(α) = Σ_l α^(q^(dl)), an element of F_{q^d} kept in F_Q form.
    pub fn trace_to_subfield(&self, a: &FQElem, d: usize) -> Result<FQElem> {
        if d == 0 || self.n % d != 0 {
            return Err(Error::DNotDividingN { d, n: self.n });
        }
        let mut acc = self.fqn.zero();
        let mut conj = a.clone();
        for l in 0..self.n / d {
            acc = self.fqn.add(&acc, &conj);
            if l + 1 < self.n / d {
                conj = self.frobenius(&conj, d);
            }
        }
        debug_assert_eq!(self.frobenius(&acc, d), acc, "subfield trace not q^d-fixed");
        Ok(acc)
    }

    /// dim_{F_q} span{α, α^q, …}; equals n − k for a k-normal α.
    pub fn conjugate_span_rank(&self, a: &FQElem) -> Result<usize> {
        if self.fqn.is_zero(a) {
            return Err(Error::ZeroElement);
        }
        Ok(linalg::rank(&*self.fq, &self.conjugates(a)))
    }

    pub fn embed_fq(&self, c: &FqElem) -> FQElem {
        self.fqn.embed_base(c)
    }

    /// Some(c) iff α lies in F_q.
    pub fn descend(&self, a: &FQElem) -> Option<FqElem> {
        self.fqn.descend(a)
    }

    /// Scalar multiplication by an F_q element, coordinatewise.
    pub fn scale(&self, c: &FqElem, a: &FQElem) -> FQElem {
        a.iter().map(|x| self.fq.mul(c, x)).collect()
    }

    pub fn int_fq(&self, k: i64) -> FqElem {
        self.fq.int_embed(k)
    }

    /// Smallest-index generator of F_q^×.
    pub fn primitive_fq(&self) -> FqElem {
        first_with_order(&*self.fq, self.q - 1)
    }

    /// Smallest-index generator of F_Q^×.
    pub fn primitive_fqn(&self) -> FQElem {
        first_with_order(&*self.fqn, (self.big_q - 1) as u64)
    }

    /// Parse "c0,c1,...,c{n-1}" (coordinates bracketed when m > 1), or the
    /// sugar "g"/"g^k" for powers of the smallest primitive element.
    pub fn parse_element(&self, s: &str) -> Result<FQElem> {
        let s = s.trim();
        if s == "g" {
            return Ok(self.primitive_fqn());
        }
        if let Some(exp) = s.strip_prefix("g^") {
            let k: u128 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            return Ok(self.fqn.pow(&self.primitive_fqn(), k));
        }
        let v = parse_coeff_list(s, self.p, self.m)?;
        if v.len() != self.n {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                self.n,
                v.len()
            )));
        }
        Ok(v)
    }

    pub fn format_element(&self, a: &FQElem) -> String {
        format_coeff_list(a, self.m)
    }
}

fn validate_modulus<F: Field>(f: &F, v: &[F::Elem], d: usize, what: &str) -> Result<()> {
    if v.len() != d + 1 || *v.last().unwrap() != f.one() {
        return Err(Error::DegreeMismatch(format!(
            "{what} must be monic of degree {d}"
        )));
    }
    if !poly::is_irreducible(f, v) {
        return Err(Error::ReducibleModulus(format!("{what} = {v:?}")));
    }
    Ok(())
}

fn first_with_order<F: Field>(f: &F, t: u64) -> F::Elem {
    let mut idx = 1u128;
    loop {
        let a = f.element(idx);
        if has_exact_order(f, &a, t) {
            return a;
        }
        idx += 1;
        assert!(idx < f.order(), "multiplicative group has a generator");
    }
}

/// Parse a comma-separated coefficient list over F_q; each coefficient is a
/// bare integer in [0,p) when m = 1 and a bracketed list "[b0,...]" otherwise.
pub fn parse_coeff_list(s: &str, p: u64, m: usize) -> Result<Vec<FqElem>> {
    split_top_level(s)?
        .iter()
        .map(|part| parse_coeff(part, p, m))
        .collect()
}

fn parse_coeff(part: &str, p: u64, m: usize) -> Result<FqElem> {
    let part = part.trim();
    if let Some(inner) = part.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unclosed bracket in {part:?}")))?;
        let coords: Vec<u64> = inner
            .split(',')
            .map(|t| parse_residue(t, p))
            .collect::<Result<_>>()?;
        if coords.len() != m {
            return Err(Error::Parse(format!(
                "coefficient {part:?} must have {m} coordinates"
            )));
        }
        Ok(coords)
    } else if m == 1 {
        Ok(vec![parse_residue(part, p)?])
    } else {
        Err(Error::Parse(format!(
            "coefficient {part:?} must be bracketed when m > 1"
        )))
    }
}

fn parse_residue(t: &str, p: u64) -> Result<u64> {
    let v: u64 = t
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {t:?}")))?;
    if v >= p {
        return Err(Error::Parse(format!("coefficient {v} out of range [0,{p})")));
    }
    Ok(v)
}

/// Split on commas that are not inside brackets.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {s:?}")))?;
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

pub fn format_coeff_list(coeffs: &[FqElem], m: usize) -> String {
    coeffs
        .iter()
        .map(|c| {
            if m == 1 {
                c[0].to_string()
            } else {
                format!(
                    "[{}]",
                    c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                )
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}
