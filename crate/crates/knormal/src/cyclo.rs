//! Orthogonal idempotents of F_q[x]/(x^n − 1) and Gauss periods.
//!
//! When gcd(n, p) = 1 the algebra A = F_q[x]/(x^n − 1) is semisimple and has
//! a unique system of orthogonal idempotents e_1, …, e_s, one per irreducible
//! factor, with e_i ≡ δ_ij (mod p_j). Two constructions are provided:
//!
//! * `idempotents_crt` solves the defining congruences directly;
//! * `idempotents_matrix` expands each e_i over the class-sum polynomials
//!   ε_i(x) = Σ_{a ∈ A_i} x^a — idempotents have q-class-constant
//!   coefficients — and solves the evaluation system at the points ζ^(a_j),
//!   whose matrix M = (ε_i(ζ^(a_j))) is always invertible.
//!
//! For prime n the evaluations ε_λ(ζ^(g^j)) are Gauss periods; `gauss_periods`
//! computes them with a primitive-root labeling C_λ = g^λ⟨q⟩ so the shifted
//! index identities they satisfy can be used by the fast classifiers.

use crate::arith;
use crate::error::{Error, Result};
use crate::factor::FactorizationXn1;
use crate::fields::Field;
use crate::linalg;
use crate::linearized::{self, LinearizedPoly};
use crate::poly;
use crate::tower::{FQElem, FieldTower, FqElem};

/// The orthogonal idempotents e_i (coefficient form, deg < n) together with
/// their linearized counterparts E_i = φ(e_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSystem {
    pub e_polys: Vec<Vec<FqElem>>,
    pub linearized: Vec<LinearizedPoly>,
}

fn require_coprime(tower: &FieldTower, fzn: &FactorizationXn1) -> Result<()> {
    if fzn.t > 0 {
        return Err(Error::PDividesN {
            p: tower.p(),
            n: tower.n(),
        });
    }
    Ok(())
}

fn build_system(tower: &FieldTower, e_polys: Vec<Vec<FqElem>>) -> IdempotentSystem {
    let linearized = e_polys.iter().map(|e| linearized::phi(tower, e)).collect();
    IdempotentSystem { e_polys, linearized }
}

/// Solve e_i ≡ δ_ij (mod p_j) by the Chinese remainder theorem.
pub fn idempotents_crt(tower: &FieldTower, fzn: &FactorizationXn1) -> Result<IdempotentSystem> {
    require_coprime(tower, fzn)?;
    let fq = &**tower.fq();
    let mut e_polys = Vec::with_capacity(fzn.s());
    for i in 0..fzn.s() {
        let parts: Vec<_> = fzn
            .factors
            .iter()
            .enumerate()
            .map(|(j, f)| {
                let residue = if i == j { poly::one(fq) } else { Vec::new() };
                (residue, f.poly.clone())
            })
            .collect();
        e_polys.push(poly::crt(fq, &parts)?);
    }
    Ok(build_system(tower, e_polys))
}

/// ε_i(x) = Σ_{a ∈ A_i} x^a for the canonical q-class partition.
pub fn class_sum_polys(tower: &FieldTower, fzn: &FactorizationXn1) -> Vec<Vec<FqElem>> {
    let fq = &**tower.fq();
    fzn.partition
        .iter()
        .map(|class| {
            let mut v = vec![fq.zero(); fzn.n];
            for &a in class {
                v[a as usize] = fq.one();
            }
            poly::normalize(fq, v)
        })
        .collect()
}

/// Expand the idempotents over the class-sum basis by inverting
/// M = (ε_i(ζ^(a_j))); returns the system and det(M) (never zero).
pub fn idempotents_matrix(
    tower: &FieldTower,
    fzn: &FactorizationXn1,
) -> Result<(IdempotentSystem, FqElem)> {
    require_coprime(tower, fzn)?;
    let fq = &**tower.fq();
    let aux = &*fzn.aux;
    let eps = class_sum_polys(tower, fzn);
    let s = fzn.s();
    let points: Vec<FQElem> = fzn
        .factors
        .iter()
        .map(|f| fzn.zeta_pow(f.class_rep))
        .collect();
    let mut m = vec![vec![fq.zero(); s]; s];
    for i in 0..s {
        let lifted: Vec<FQElem> = eps[i].iter().map(|c| aux.embed_base(c)).collect();
        for j in 0..s {
            let val = poly::eval(aux, &lifted, &points[j]);
            m[i][j] = aux.descend(&val).ok_or_else(|| {
                Error::InternalDescentFailure(format!(
                    "class-sum evaluation ({i},{j}) is not in F_q"
                ))
            })?;
        }
    }
    let (inv, det) = linalg::invert(fq, &m)?;
    // e_j(ζ^(a_l)) = δ_jl within span{ε_i} pins down e_j = Σ_i inv[j][i] ε_i
    let mut e_polys = Vec::with_capacity(s);
    for row in &inv {
        let mut acc = Vec::new();
        for (i, c) in row.iter().enumerate() {
            acc = poly::add(fq, &acc, &poly::scale(fq, c, &eps[i]));
        }
        e_polys.push(acc);
    }
    Ok((build_system(tower, e_polys), det))
}

/// Gauss periods of order e for prime n with the primitive-root labeling:
/// C_λ = g^λ⟨q⟩ and ε_λ = Σ_{a ∈ C_λ} ζ^a ∈ F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussPeriodData {
    pub n: u64,
    /// f = ord_n(q); every nontrivial factor of x^n − 1 has this degree.
    pub f: u64,
    /// e = (n − 1)/f, the number of cosets (and of Gauss periods).
    pub e: u64,
    /// Smallest primitive root mod n.
    pub g: u64,
    /// c with −1 ∈ C_c: 0 for even f, e/2 for odd f.
    pub shift_c: u64,
    /// cosets[λ] = C_λ, ascending.
    pub cosets: Vec<Vec<u64>>,
    /// periods[λ] = ε_λ.
    pub periods: Vec<FqElem>,
    /// Index of the canonical factor whose root classes are C_λ.
    pub factor_idx: Vec<usize>,
}

pub fn gauss_periods(tower: &FieldTower, fzn: &FactorizationXn1) -> Result<GaussPeriodData> {
    let n = tower.n() as u64;
    if fzn.t > 0 {
        return Err(Error::PDividesN {
            p: tower.p(),
            n: tower.n(),
        });
    }
    if !arith::is_prime(n) {
        return Err(Error::NNotPrime(n));
    }
    let f = fzn.w as u64;
    let e = (n - 1) / f;
    let g = arith::smallest_primitive_root(n);
    let shift_c = if f % 2 == 0 { 0 } else { e / 2 };

    let aux = &*fzn.aux;
    let mut cosets = Vec::with_capacity(e as usize);
    let mut periods = Vec::with_capacity(e as usize);
    let mut factor_idx = Vec::with_capacity(e as usize);
    for lambda in 0..e {
        let lead = arith::pow_mod(g, lambda, n);
        let mut coset: Vec<u64> = (0..f)
            .map(|i| (lead as u128 * arith::pow_mod(tower.q(), i, n) as u128 % n as u128) as u64)
            .collect();
        coset.sort_unstable();
        let mut sum = aux.zero();
        for &a in &coset {
            sum = aux.add(&sum, &fzn.zeta_pow(a));
        }
        let period = aux.descend(&sum).ok_or_else(|| {
            Error::InternalDescentFailure(format!("Gauss period {lambda} is not in F_q"))
        })?;
        let idx = fzn
            .partition
            .iter()
            .position(|class| *class == coset)
            .ok_or_else(|| Error::Internal(format!("coset C_{lambda} not in the partition")))?;
        cosets.push(coset);
        periods.push(period);
        factor_idx.push(idx);
    }
    Ok(GaussPeriodData {
        n,
        f,
        e,
        g,
        shift_c,
        cosets,
        periods,
        factor_idx,
    })
}

/// The e = 2 quantities: B = Σ_{r ∈ D′} ζ^r, C = Σ_{r ∈ D} ζ^r (D = ⟨q⟩
/// the squares, D′ the non-squares), the F_q-valued quadratic Gauss sum
/// √n* := B − C with (B − C)² = n* = (−1/n)·n, and the two α-dependent sums
/// the fast classifier compares against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticData {
    pub b: FqElem,
    pub c: FqElem,
    pub n_star: FqElem,
    pub sqrt_n_star: FqElem,
    /// δ = Σ_{r=1}^{n−1} (r/n) α^(q^r).
    pub delta: FQElem,
    /// ε = Σ_{r ∈ D} α^(q^r).
    pub epsilon: FQElem,
}

pub fn quadratic_data(
    tower: &FieldTower,
    gauss: &GaussPeriodData,
    alpha: &FQElem,
) -> Result<QuadraticData> {
    if gauss.e != 2 {
        return Err(Error::OrderMismatch {
            found: gauss.f,
            expected: (gauss.n - 1) / 2,
        });
    }
    let fq = &**tower.fq();
    let fqn = tower.fqn();
    let c = gauss.periods[0].clone();
    let b = gauss.periods[1].clone();
    let n_star_int = if ((gauss.n - 1) / 2) % 2 == 0 {
        gauss.n as i64
    } else {
        -(gauss.n as i64)
    };
    let n_star = tower.int_fq(n_star_int);
    let sqrt_n_star = fq.sub(&b, &c);
    if fq.mul(&sqrt_n_star, &sqrt_n_star) != n_star {
        return Err(Error::Internal("(B - C)^2 != n*".into()));
    }
    let conj = tower.conjugates(alpha);
    let mut epsilon = fqn.zero();
    let mut delta = fqn.zero();
    for &r in &gauss.cosets[0] {
        epsilon = fqn.add(&epsilon, &conj[r as usize]);
        delta = fqn.add(&delta, &conj[r as usize]);
    }
    for &r in &gauss.cosets[1] {
        delta = fqn.sub(&delta, &conj[r as usize]);
    }
    Ok(QuadraticData {
        b,
        c,
        n_star,
        sqrt_n_star,
        delta,
        epsilon,
    })
}
