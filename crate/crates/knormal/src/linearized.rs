//! Linearized (q-) polynomials and minimal q-polynomials.
//!
//! A q-polynomial L(x) = Σ a_i x^(q^i) with a_i ∈ F_q is an F_q-linear map on
//! every extension of F_q. The map φ: Σ a_i x^i ↦ Σ a_i x^(q^i) is a ring
//! isomorphism from F_q[x] onto the q-polynomials under (+, ⊗), where ⊗ is
//! functional composition: because the coefficients are Frobenius-fixed,
//! composition is plain convolution of q-coefficients. Divisibility L ∥ K in
//! the composition ring therefore mirrors ordinary divisibility under φ⁻¹.
//!
//! The minimal q-polynomial M_α of α ∈ F_Q^× is the monic q-polynomial of
//! least q-degree with M_α(α) = 0; it is φ(m_α) for a unique monic divisor
//! m_α of x^n − 1, and α is k-normal exactly for k = n − deg m_α.

use crate::error::{Error, Result};
use crate::factor::FactorizationXn1;
use crate::fields::Field;
use crate::poly;
use crate::tower::{FQElem, FieldTower, FqElem};

/// Σ q_coeffs[i] · x^(q^i); ascending, no trailing zeros, empty = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    pub q_coeffs: Vec<FqElem>,
}

impl LinearizedPoly {
    /// q-degree; None for the zero q-polynomial.
    pub fn q_degree(&self) -> Option<usize> {
        poly::degree(&self.q_coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.q_coeffs.is_empty()
    }
}

/// φ: Σ a_i x^i ↦ Σ a_i x^(q^i).
pub fn phi(tower: &FieldTower, f: &[FqElem]) -> LinearizedPoly {
    LinearizedPoly {
        q_coeffs: poly::normalize(&**tower.fq(), f.to_vec()),
    }
}

/// φ⁻¹: read the q-coefficients back as an ordinary polynomial.
pub fn phi_inverse(l: &LinearizedPoly) -> Vec<FqElem> {
    l.q_coeffs.clone()
}

pub fn add(tower: &FieldTower, a: &LinearizedPoly, b: &LinearizedPoly) -> LinearizedPoly {
    LinearizedPoly {
        q_coeffs: poly::add(&**tower.fq(), &a.q_coeffs, &b.q_coeffs),
    }
}

/// Composition product A ⊗ B = A ∘ B. With F_q coefficients the q-twist
/// b_j ↦ b_j^(q^i) is the identity, so this is convolution; the mathematical
/// content — (A ⊗ B)(α) = A(B(α)) — is enforced by the evaluation tests.
pub fn compose(tower: &FieldTower, a: &LinearizedPoly, b: &LinearizedPoly) -> LinearizedPoly {
    LinearizedPoly {
        q_coeffs: poly::mul(&**tower.fq(), &a.q_coeffs, &b.q_coeffs),
    }
}

/// L(α) = Σ a_i α^(q^i).
pub fn evaluate(tower: &FieldTower, l: &LinearizedPoly, alpha: &FQElem) -> FQElem {
    let fqn = tower.fqn();
    let mut acc = fqn.zero();
    let mut conj = alpha.clone();
    for (i, c) in l.q_coeffs.iter().enumerate() {
        if i > 0 {
            conj = tower.frobenius(&conj, 1);
        }
        acc = fqn.add(&acc, &tower.scale(c, &conj));
    }
    acc
}

/// L(α) given the precomputed conjugate cycle [α, α^q, …, α^(q^(n−1))];
/// avoids recomputing Frobenius orbits in exhaustive sweeps.
pub fn evaluate_with_conjugates(
    tower: &FieldTower,
    l: &LinearizedPoly,
    conjugates: &[FQElem],
) -> FQElem {
    let fqn = tower.fqn();
    let n = tower.n();
    let mut acc = fqn.zero();
    for (i, c) in l.q_coeffs.iter().enumerate() {
        acc = fqn.add(&acc, &tower.scale(c, &conjugates[i % n]));
    }
    acc
}

/// A ∥ B: does A divide B in the composition ring? `ZeroDivisor` if A = 0.
pub fn divides(tower: &FieldTower, a: &LinearizedPoly, b: &LinearizedPoly) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(poly::rem(&**tower.fq(), &b.q_coeffs, &a.q_coeffs)?.is_empty())
}

/// All monic divisors of x^n − 1 (repeated factors allowed when p | n),
/// sorted by degree with a fixed coefficient-order tie-break.
pub fn xn1_divisors(tower: &FieldTower, fzn: &FactorizationXn1) -> Vec<Vec<FqElem>> {
    let fq = &**tower.fq();
    let mut divisors = vec![poly::one(fq)];
    for factor in &fzn.factors {
        let mut next = Vec::with_capacity(divisors.len() * (factor.multiplicity + 1));
        for d in &divisors {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..factor.multiplicity {
                cur = poly::mul(fq, &cur, &factor.poly);
                next.push(cur.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by_key(|d| (d.len(), coeff_value_key(tower, d)));
    divisors
}

/// Non-leading coefficients as base-q digits (constant term least
/// significant): same deterministic order used for default moduli.
fn coeff_value_key(tower: &FieldTower, d: &[FqElem]) -> u128 {
    let fq = &**tower.fq();
    let q = tower.q() as u128;
    let mut acc = 0u128;
    for c in d.iter().rev().skip(1) {
        acc = acc * q + fq.index_of(c);
    }
    acc
}

/// The monic divisor m_α of x^n − 1 of least degree with φ(m_α)(α) = 0,
/// together with M_α = φ(m_α). Lemma-2 minimality — dropping any irreducible
/// factor loses the annihilation — is re-verified on the result.
pub fn minimal_q_poly(
    tower: &FieldTower,
    fzn: &FactorizationXn1,
    alpha: &FQElem,
) -> Result<(Vec<FqElem>, LinearizedPoly)> {
    if tower.fqn().is_zero(alpha) {
        return Err(Error::ZeroElement);
    }
    let fq = &**tower.fq();
    let conjugates = tower.conjugates(alpha);
    let m_alpha = xn1_divisors(tower, fzn)
        .into_iter()
        .skip(1) // the trivial divisor 1 maps to φ(1) = x, nonzero at α ≠ 0
        .find(|d| {
            let l = phi(tower, d);
            let v = evaluate_with_conjugates(tower, &l, &conjugates);
            tower.fqn().is_zero(&v)
        })
        .ok_or(Error::NoAnnihilator)?;
    for factor in &fzn.factors {
        if poly::rem(fq, &m_alpha, &factor.poly)?.is_empty() {
            let reduced = poly::div_exact(fq, &m_alpha, &factor.poly)?;
            let v = evaluate_with_conjugates(tower, &phi(tower, &reduced), &conjugates);
            if tower.fqn().is_zero(&v) {
                return Err(Error::Internal(
                    "minimal q-polynomial is not minimal: a proper divisor annihilates".into(),
                ));
            }
        }
    }
    let l = phi(tower, &m_alpha);
    Ok((m_alpha, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_xn_minus_1;

    fn f8() -> FieldTower {
        FieldTower::new(2, 1, 3, None, None).unwrap()
    }

    #[test]
    fn evaluation_in_f8() {
        let tw = f8();
        let t = tw.parse_element("0,1,0").unwrap();
        // φ(x^2 + x + 1)(t) = t^4 + t^2 + t = Tr(t) = 0
        let l = phi(&tw, &[vec![1], vec![1], vec![1]]);
        assert!(tw.fqn().is_zero(&evaluate(&tw, &l, &t)));
        // φ(x + 1)(t) = t^2 + t ≠ 0
        let l2 = phi(&tw, &[vec![1], vec![1]]);
        assert_eq!(evaluate(&tw, &l2, &t), tw.parse_element("0,1,1").unwrap());
    }

    #[test]
    fn compose_matches_functional_composition() {
        let tw = f8();
        let l = phi(&tw, &[vec![1], vec![0], vec![1]]);
        let k = phi(&tw, &[vec![0], vec![1], vec![1]]);
        let lk = compose(&tw, &l, &k);
        for i in 0..8 {
            let a = tw.fqn().element(i);
            let inner = evaluate(&tw, &k, &a);
            assert_eq!(evaluate(&tw, &lk, &a), evaluate(&tw, &l, &inner));
        }
    }

    #[test]
    fn divisibility_mirrors_phi_inverse() {
        let tw = f8();
        let x3_1 = phi(&tw, &[vec![1], vec![0], vec![0], vec![1]]);
        let x_1 = phi(&tw, &[vec![1], vec![1]]);
        let sq = phi(&tw, &[vec![1], vec![0], vec![1]]); // (x+1)^2
        assert!(divides(&tw, &x_1, &x3_1).unwrap());
        assert!(!divides(&tw, &sq, &x3_1).unwrap());
        let zero = LinearizedPoly { q_coeffs: vec![] };
        assert_eq!(divides(&tw, &zero, &x3_1), Err(Error::ZeroDivisor));
    }

    #[test]
    fn divisor_enumeration_is_degree_sorted() {
        let tw = f8();
        let fzn = factor_xn_minus_1(&tw).unwrap();
        let divs = xn1_divisors(&tw, &fzn);
        assert_eq!(divs.len(), 4);
        let degrees: Vec<_> = divs.iter().map(|d| d.len() - 1).collect();
        assert_eq!(degrees, vec![0, 1, 2, 3]);
    }

    #[test]
    fn minimal_q_polys_in_f8() {
        let tw = f8();
        let fzn = factor_xn_minus_1(&tw).unwrap();
        let t = tw.parse_element("0,1,0").unwrap();
        let (m, big_m) = minimal_q_poly(&tw, &fzn, &t).unwrap();
        assert_eq!(m, vec![vec![1], vec![1], vec![1]]); // x^2 + x + 1
        assert_eq!(big_m.q_coeffs, vec![vec![1], vec![1], vec![1]]);

        let one = tw.fqn().one();
        let (m1, _) = minimal_q_poly(&tw, &fzn, &one).unwrap();
        assert_eq!(m1, vec![vec![1], vec![1]]); // x + 1

        let t1 = tw.parse_element("1,1,0").unwrap();
        let (m2, _) = minimal_q_poly(&tw, &fzn, &t1).unwrap();
        assert_eq!(m2, vec![vec![1], vec![0], vec![0], vec![1]]); // x^3 - 1

        assert_eq!(
            minimal_q_poly(&tw, &fzn, &tw.fqn().zero()).map(|_| ()),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn minimal_q_poly_with_p_dividing_n() {
        // F_16/F_2 and α in the F_4 subfield but outside F_2: the annihilator
        // is (x+1)^2 = x^2 + 1 because α^(q^2) = α while α^q ≠ α
        let tw = FieldTower::new(2, 1, 4, None, None).unwrap();
        let fzn = factor_xn_minus_1(&tw).unwrap();
        let omega = tw.parse_element("0,1,1,0").unwrap(); // z^2 + z, order 3
        assert_eq!(tw.frobenius(&omega, 2), omega);
        assert_ne!(tw.frobenius(&omega, 1), omega);
        let (m, _) = minimal_q_poly(&tw, &fzn, &omega).unwrap();
        assert_eq!(m, vec![vec![1], vec![0], vec![1]]);
    }
}
