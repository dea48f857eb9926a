//! Factorization of x^n − 1 over F_q by the cyclotomic-coset route.
//!
//! Write n = n′·p^t with p ∤ n′. Then x^n − 1 = (x^(n′) − 1)^(p^t), and
//! x^(n′) − 1 splits over F_{q^w}, w = ord_(n′)(q), as Π_a (x − ζ^a) for a
//! fixed primitive n′-th root of unity ζ. Grouping the roots by the q-classes
//! of Z_(n′) yields exactly the monic irreducible factors over F_q: the
//! polynomial with root set {ζ^a : a ∈ A_i} has Frobenius-stable roots, so
//! its coefficients descend to F_q.
//!
//! This route is used instead of a general factorization algorithm because
//! the downstream idempotent and Gauss-period machinery needs the root
//! labeling (which coset belongs to which factor), not just the factors.

use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::fields::{has_exact_order, Extension, Field};
use crate::poly;
use crate::tower::{FQElem, FQField, FieldTower, FqElem};

/// One irreducible factor of x^n − 1 over F_q, tagged with its q-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xn1Factor {
    /// Monic irreducible over F_q, ascending coefficients.
    pub poly: Vec<FqElem>,
    /// p^t; 1 exactly when gcd(n, p) = 1.
    pub multiplicity: usize,
    /// Smallest element of the q-class this factor belongs to.
    pub class_rep: u64,
    /// The full q-class in Z_(n′), ascending.
    pub class: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct FactorizationXn1 {
    pub n: usize,
    /// n = n′ · p^t with gcd(n′, p) = 1.
    pub n_prime: u64,
    pub t: u32,
    /// q-classes of Z_(n′) in canonical order ({0} first, then by smallest
    /// representative); factors[i] belongs to partition[i].
    pub partition: Vec<Vec<u64>>,
    pub factors: Vec<Xn1Factor>,
    /// Splitting field F_{q^w} of x^(n′) − 1.
    pub aux: Arc<FQField>,
    pub w: usize,
    /// The fixed primitive n′-th root of unity all labels refer to.
    pub zeta: FQElem,
}

impl FactorizationXn1 {
    /// ζ^a for a ∈ Z_(n′), in the auxiliary field.
    pub fn zeta_pow(&self, a: u64) -> FQElem {
        self.aux.pow(&self.zeta, a as u128)
    }

    /// Number of distinct irreducible factors.
    pub fn s(&self) -> usize {
        self.factors.len()
    }

    /// x^n − 1 itself, over F_q.
    pub fn xn_minus_1(&self, tower: &FieldTower) -> Vec<FqElem> {
        poly::xn_minus_1(&**tower.fq(), self.n)
    }
}

pub fn factor_xn_minus_1(tower: &FieldTower) -> Result<FactorizationXn1> {
    let n = tower.n() as u64;
    let q = tower.q();
    let fq = tower.fq();
    let (t, n_prime) = arith::split_p_part(n, tower.p());
    let partition = arith::q_class_partition(n_prime, q)?;
    let w = arith::mul_order(q, n_prime) as usize;

    let aux_order = (q as u128)
        .checked_pow(w as u32)
        .filter(|&v| v <= 1 << 63)
        .ok_or_else(|| {
            Error::FieldTooLarge(format!("splitting field F_({q}^{w}) exceeds 2^63"))
        })?;
    let aux = Arc::new(Extension::new(
        fq.clone(),
        poly::smallest_irreducible(&**fq, w),
    ));
    let zeta = find_zeta(&aux, aux_order, n_prime);

    let multiplicity = (tower.p() as usize).pow(t);
    let mut factors = Vec::with_capacity(partition.len());
    for class in &partition {
        let mut prod = poly::one(&*aux);
        for &a in class {
            let root = aux.pow(&zeta, a as u128);
            prod = poly::mul(&*aux, &prod, &[aux.neg(&root), aux.one()]);
        }
        let poly_q: Vec<FqElem> = prod
            .iter()
            .map(|c| {
                aux.descend(c).ok_or_else(|| {
                    Error::InternalDescentFailure(format!(
                        "coefficient of the class {class:?} factor is not in F_q"
                    ))
                })
            })
            .collect::<Result<_>>()?;
        debug_assert!(poly::is_irreducible(&**fq, &poly_q));
        factors.push(Xn1Factor {
            poly: poly_q,
            multiplicity,
            class_rep: class[0],
            class: class.clone(),
        });
    }

    // Π p_i^(p^t) must reproduce x^n − 1 exactly.
    let mut prod = poly::one(&**fq);
    for f in &factors {
        for _ in 0..f.multiplicity {
            prod = poly::mul(&**fq, &prod, &f.poly);
        }
    }
    if prod != poly::xn_minus_1(&**fq, n as usize) {
        return Err(Error::Internal(
            "factor product does not reproduce x^n - 1".into(),
        ));
    }

    Ok(FactorizationXn1 {
        n: n as usize,
        n_prime,
        t,
        partition,
        factors,
        aux,
        w,
        zeta,
    })
}

/// First element in enumeration order whose (q^w − 1)/n′ power has exact
/// order n′; deterministic so factor and period labels are reproducible.
fn find_zeta(aux: &FQField, aux_order: u128, n_prime: u64) -> FQElem {
    let exp = (aux_order - 1) / n_prime as u128;
    let mut idx = 1u128;
    loop {
        let z = aux.pow(&aux.element(idx), exp);
        if has_exact_order(aux, &z, n_prime) {
            return z;
        }
        idx += 1;
        assert!(idx < aux_order, "F_(q^w)^x contains an n'-th root of unity");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::FieldTower;

    #[test]
    fn f2_n3() {
        let tw = FieldTower::new(2, 1, 3, None, None).unwrap();
        let f = factor_xn_minus_1(&tw).unwrap();
        assert_eq!(f.n_prime, 3);
        assert_eq!(f.t, 0);
        assert_eq!(f.s(), 2);
        assert_eq!(f.factors[0].poly, vec![vec![1], vec![1]]); // x + 1
        assert_eq!(f.factors[1].poly, vec![vec![1], vec![1], vec![1]]); // x^2+x+1
        assert_eq!(f.factors[1].class, vec![1, 2]);
        assert!(f.factors.iter().all(|x| x.multiplicity == 1));
    }

    #[test]
    fn f2_n7_matches_the_classical_factor_pair() {
        let tw = FieldTower::new(2, 1, 7, None, None).unwrap();
        let f = factor_xn_minus_1(&tw).unwrap();
        assert_eq!(f.w, 3);
        let polys: Vec<_> = f.factors.iter().map(|x| x.poly.clone()).collect();
        assert_eq!(
            polys,
            vec![
                vec![vec![1], vec![1]],                          // x + 1
                vec![vec![1], vec![1], vec![0], vec![1]],        // x^3 + x + 1
                vec![vec![1], vec![0], vec![1], vec![1]],        // x^3 + x^2 + 1
            ]
        );
        assert_eq!(f.factors[1].class, vec![1, 2, 4]);
        assert_eq!(f.factors[2].class, vec![3, 5, 6]);
        // zeta is the generator of F_8 = F_2[u]/(u^3 + u + 1): its minimal
        // polynomial is the class-{1,2,4} factor
        assert_eq!(f.zeta, vec![vec![0], vec![1], vec![0]]);
    }

    #[test]
    fn p_dividing_n_powers_up() {
        let tw = FieldTower::new(2, 1, 4, None, None).unwrap();
        let f = factor_xn_minus_1(&tw).unwrap();
        assert_eq!((f.t, f.n_prime), (2, 1));
        assert_eq!(f.s(), 1);
        assert_eq!(f.factors[0].poly, vec![vec![1], vec![1]]);
        assert_eq!(f.factors[0].multiplicity, 4);

        let tw6 = FieldTower::new(2, 1, 6, None, None).unwrap();
        let f6 = factor_xn_minus_1(&tw6).unwrap();
        assert_eq!((f6.t, f6.n_prime), (1, 3));
        assert_eq!(f6.s(), 2);
        assert!(f6.factors.iter().all(|x| x.multiplicity == 2));
    }

    #[test]
    fn aux_field_and_zeta_for_3_13() {
        let tw = FieldTower::new(3, 1, 13, None, None).unwrap();
        let f = factor_xn_minus_1(&tw).unwrap();
        assert_eq!(f.w, 3);
        // smallest irreducible cubic over F_3 is y^3 + 2y + 1
        assert_eq!(f.aux.modulus(), &[vec![1], vec![2], vec![0], vec![1]]);
        // first index whose 2nd power has order 13 is y itself: zeta = y^2
        assert_eq!(f.zeta, vec![vec![0], vec![0], vec![1]]);
        assert_eq!(f.s(), 5);
        assert!(f.factors.iter().all(|x| x.poly.len() == 4 || x.class_rep == 0));
    }

    #[test]
    fn n_prime_one_short_circuit() {
        // n = 2 = p: x^2 - 1 = (x - 1)^2 over F_2
        let tw = FieldTower::new(2, 1, 2, None, None).unwrap();
        let f = factor_xn_minus_1(&tw).unwrap();
        assert_eq!(f.n_prime, 1);
        assert_eq!(f.partition, vec![vec![0]]);
        assert_eq!(f.s(), 1);
        assert_eq!(f.factors[0].multiplicity, 2);
        assert_eq!(f.zeta, f.aux.one());
    }
}
