//! Named self-checks for a configured tower.
//!
//! Each check verifies one structural identity the classifiers rest on —
//! factorization, Frobenius/trace behavior, the φ ring isomorphism, the
//! idempotent system, Gauss-period identities, and cross-method agreement.
//! Checks that do not apply to the configured field (wrong characteristic,
//! composite n, …) are reported as skipped rather than silently dropped.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclo;
use crate::error::{Error, Result};
use crate::fields::{has_exact_order, Field};
use crate::linearized;
use crate::normality::{Classifier, Method};
use crate::poly;
use crate::tower::{format_coeff_list, FQElem, FieldTower, FqElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub p: u64,
    pub m: usize,
    pub n: usize,
    pub q: u64,
    #[serde(rename = "Q")]
    pub big_q: u64,
    pub exhaustive: bool,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn push<F: FnOnce() -> Result<String>>(checks: &mut Vec<CheckResult>, name: &str, body: F) {
    let result = match body() {
        Ok(detail) => CheckResult {
            name: name.to_string(),
            status: CheckStatus::Pass,
            detail,
        },
        Err(e) => CheckResult {
            name: name.to_string(),
            status: CheckStatus::Fail,
            detail: e.to_string(),
        },
    };
    checks.push(result);
}

fn skip(checks: &mut Vec<CheckResult>, name: &str, why: &str) {
    checks.push(CheckResult {
        name: name.to_string(),
        status: CheckStatus::Skipped,
        detail: why.to_string(),
    });
}

fn fail(msg: String) -> Error {
    Error::Internal(msg)
}

/// Run every applicable check. `exhaustive` widens the element sweeps to
/// the whole of F_Q^× (bounded at 2^13 elements; larger fields fall back
/// to a larger sample).
pub fn run(tower: &FieldTower, exhaustive: bool, seed: u64) -> Result<VerifyReport> {
    let cl = Classifier::new(tower)?;
    let fq = &**tower.fq();
    let fqn = tower.fqn();
    let n = tower.n();
    let q = tower.q();
    let total = tower.big_q() - 1;
    let coprime = cl.fzn.t == 0;

    // Element sample shared by the per-element checks.
    let full_limit: u128 = if exhaustive { 1 << 13 } else { 1 << 9 };
    let full_sweep = total <= full_limit;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphas: Vec<FQElem> = if full_sweep {
        (1..=total).map(|i| fqn.element(i)).collect()
    } else {
        let count = if exhaustive {
            256
        } else if total > 1 << 24 {
            20
        } else {
            48
        };
        (0..count)
            .map(|_| fqn.element(rng.gen_range(1..=total)))
            .collect()
    };
    let sweep_note = if full_sweep {
        format!("all {total} nonzero elements")
    } else {
        format!("{} sampled elements (seed {seed})", alphas.len())
    };

    // The gcd- and divisor-lattice-based checks cost far more per element
    // on big fields, so they run on a truncated sample there.
    let heavy_cap = if total > 1 << 24 {
        6
    } else if total > 1 << 16 {
        16
    } else {
        alphas.len()
    };
    let heavy: &[FQElem] = &alphas[..alphas.len().min(heavy_cap)];
    let heavy_note = if heavy.len() == alphas.len() {
        sweep_note.clone()
    } else {
        format!("{} sampled elements (seed {seed})", heavy.len())
    };

    let mut checks = Vec::new();

    push(&mut checks, "factor_product_reconstructs", || {
        let mut prod = poly::one(fq);
        for f in &cl.fzn.factors {
            for _ in 0..f.multiplicity {
                prod = poly::mul(fq, &prod, &f.poly);
            }
        }
        if prod != poly::xn_minus_1(fq, n) {
            return Err(fail("product of factors is not x^n - 1".into()));
        }
        Ok(format!(
            "{} distinct factors, multiplicity {}",
            cl.fzn.s(),
            cl.fzn.factors.first().map_or(0, |f| f.multiplicity)
        ))
    });

    push(&mut checks, "factors_irreducible", || {
        for (i, f) in cl.fzn.factors.iter().enumerate() {
            if !poly::is_irreducible(fq, &f.poly) {
                return Err(fail(format!("factor {i} is reducible")));
            }
        }
        Ok(format!(
            "degrees {:?}",
            cl.fzn
                .factors
                .iter()
                .map(|f| f.poly.len() - 1)
                .collect::<Vec<_>>()
        ))
    });

    push(&mut checks, "partition_is_canonical", || {
        let n_prime = cl.fzn.n_prime;
        let mut seen = vec![false; n_prime as usize];
        let mut last_min = None;
        for (ci, class) in cl.fzn.partition.iter().enumerate() {
            if class.is_empty() || class.windows(2).any(|w| w[0] >= w[1]) {
                return Err(fail(format!("class {ci} is not strictly ascending")));
            }
            for &a in class {
                if a >= n_prime || seen[a as usize] {
                    return Err(fail(format!("residue {a} repeated or out of range")));
                }
                seen[a as usize] = true;
                if n_prime > 1 && !class.contains(&(a * (q % n_prime) % n_prime)) {
                    return Err(fail(format!("class {ci} is not closed under multiplication by q")));
                }
            }
            if ci == 0 && class != &[0] {
                return Err(fail("first class is not {0}".into()));
            }
            if ci > 0 {
                if let Some(prev) = last_min {
                    if class[0] <= prev {
                        return Err(fail("classes are not ordered by smallest representative".into()));
                    }
                }
                last_min = Some(class[0]);
            }
        }
        if !seen.iter().all(|&b| b) {
            return Err(fail("classes do not cover Z_n'".into()));
        }
        Ok(format!("{} classes over Z_{}", cl.fzn.partition.len(), n_prime))
    });

    push(&mut checks, "zeta_has_exact_order", || {
        if cl.fzn.n_prime == 1 {
            return Ok("n' = 1, ζ = 1".into());
        }
        if !has_exact_order(&*cl.fzn.aux, &cl.fzn.zeta, cl.fzn.n_prime) {
            return Err(fail(format!("ζ does not have order {}", cl.fzn.n_prime)));
        }
        Ok(format!("ord(ζ) = {} in the degree-{} auxiliary field", cl.fzn.n_prime, cl.fzn.w))
    });

    push(&mut checks, "frobenius_is_field_automorphism", || {
        for (i, a) in alphas.iter().enumerate() {
            let b = &alphas[(i * 7 + 3) % alphas.len()];
            let lhs_add = tower.frobenius(&fqn.add(a, b), 1);
            let rhs_add = fqn.add(&tower.frobenius(a, 1), &tower.frobenius(b, 1));
            if lhs_add != rhs_add {
                return Err(fail(format!("σ(a+b) ≠ σa+σb at sample {i}")));
            }
            let lhs_mul = tower.frobenius(&fqn.mul(a, b), 1);
            let rhs_mul = fqn.mul(&tower.frobenius(a, 1), &tower.frobenius(b, 1));
            if lhs_mul != rhs_mul {
                return Err(fail(format!("σ(ab) ≠ σ(a)σ(b) at sample {i}")));
            }
            let mut iter = a.clone();
            for _ in 0..n {
                iter = tower.frobenius(&iter, 1);
            }
            if &iter != a {
                return Err(fail(format!("σ^n is not the identity at sample {i}")));
            }
        }
        Ok(sweep_note.clone())
    });

    push(&mut checks, "trace_lands_in_base_field", || {
        for (i, a) in alphas.iter().enumerate() {
            let t1 = tower.trace(a)?;
            let t2 = tower.trace(&tower.frobenius(a, 1))?;
            if t1 != t2 {
                return Err(fail(format!("trace is not Frobenius-invariant at sample {i}")));
            }
        }
        Ok(sweep_note.clone())
    });

    push(&mut checks, "phi_is_ring_isomorphism", || {
        let pairs = alphas.len().min(if total > 1 << 24 { 12 } else { 48 });
        for i in 0..pairs {
            let a = random_fq_poly(tower, &mut rng, n);
            let b = random_fq_poly(tower, &mut rng, n);
            let pa = linearized::phi(tower, &a);
            let pb = linearized::phi(tower, &b);
            let sum = linearized::add(tower, &pa, &pb);
            if sum.q_coeffs != poly::add(fq, &a, &b) {
                return Err(fail(format!("φ(a+b) ≠ φ(a)+φ(b) at pair {i}")));
            }
            let comp = linearized::compose(tower, &pa, &pb);
            if comp.q_coeffs != poly::mul(fq, &a, &b) {
                return Err(fail(format!("φ(ab) ≠ φ(a)⊗φ(b) at pair {i}")));
            }
            let alpha = &alphas[i % alphas.len()];
            let lhs = linearized::evaluate(tower, &comp, alpha);
            let rhs = linearized::evaluate(tower, &pa, &linearized::evaluate(tower, &pb, alpha));
            if lhs != rhs {
                return Err(fail(format!("(φ(a)⊗φ(b))(α) ≠ φ(a)(φ(b)(α)) at pair {i}")));
            }
        }
        Ok(format!("{pairs} random coefficient-polynomial pairs"))
    });

    push(&mut checks, "minimal_q_poly_contract", || {
        let xn1 = cl.fzn.xn_minus_1(tower);
        for (i, a) in heavy.iter().enumerate() {
            let (m_alpha, big) = linearized::minimal_q_poly(tower, &cl.fzn, a)?;
            if !poly::rem(fq, &xn1, &m_alpha)?.is_empty() {
                return Err(fail(format!("m_α does not divide x^n - 1 at sample {i}")));
            }
            if !fqn.is_zero(&linearized::evaluate(tower, &big, a)) {
                return Err(fail(format!("M_α(α) ≠ 0 at sample {i}")));
            }
            for f in &cl.fzn.factors {
                if poly::rem(fq, &m_alpha, &f.poly)?.is_empty() {
                    let reduced = poly::div_exact(fq, &m_alpha, &f.poly)?;
                    let v = linearized::evaluate(tower, &linearized::phi(tower, &reduced), a);
                    if fqn.is_zero(&v) {
                        return Err(fail(format!("m_α is not minimal at sample {i}")));
                    }
                }
            }
        }
        Ok(heavy_note.clone())
    });

    push(&mut checks, "conjugate_rank_equals_n_minus_k", || {
        for (i, a) in heavy.iter().enumerate() {
            let k = cl.via_gcd(a)?.k;
            let rank = tower.conjugate_span_rank(a)?;
            if k != n - rank {
                return Err(fail(format!(
                    "k = {k} but conjugate rank = {rank} at sample {i}"
                )));
            }
        }
        Ok(heavy_note.clone())
    });

    push(&mut checks, "method_agreement", || {
        for (i, a) in heavy.iter().enumerate() {
            let gcd = cl.via_gcd(a)?;
            let search = cl.via_divisor_search(a)?;
            if gcd.k != search.k || gcd.m_alpha_coeffs != search.m_alpha_coeffs {
                return Err(fail(format!("gcd and divisor search disagree at sample {i}")));
            }
            if coprime {
                let mi = cl.via_mi(a)?;
                let idem = cl.via_idempotents(a)?;
                if mi.k != gcd.k
                    || idem.k != gcd.k
                    || mi.m_alpha_coeffs != gcd.m_alpha_coeffs
                    || idem.m_alpha_coeffs != gcd.m_alpha_coeffs
                    || mi.delta != idem.delta
                {
                    return Err(fail(format!("criteria disagree at sample {i}")));
                }
            } else {
                let qdeg = linearized::phi(tower, &search.m_alpha_coeffs)
                    .q_degree()
                    .unwrap_or(0);
                if gcd.k != n - qdeg {
                    return Err(fail(format!("k ≠ n − q-deg M_α at sample {i}")));
                }
            }
        }
        Ok(heavy_note.clone())
    });

    if coprime {
        let sys = cl.idem.as_ref().expect("coprime tower has idempotents");
        let modulus = cl.fzn.xn_minus_1(tower);

        push(&mut checks, "idempotents_orthogonal", || {
            let s = sys.e_polys.len();
            for i in 0..s {
                for j in 0..s {
                    let prod = poly::rem(
                        fq,
                        &poly::mul(fq, &sys.e_polys[i], &sys.e_polys[j]),
                        &modulus,
                    )?;
                    let expect = if i == j {
                        sys.e_polys[i].clone()
                    } else {
                        Vec::new()
                    };
                    if prod != expect {
                        return Err(fail(format!("e_{i}·e_{j} ≢ δ·e_{i} mod x^n - 1")));
                    }
                }
            }
            Ok(format!("{s}×{s} products"))
        });

        push(&mut checks, "idempotents_sum_to_one", || {
            let mut sum = Vec::new();
            for e in &sys.e_polys {
                sum = poly::add(fq, &sum, e);
            }
            if poly::rem(fq, &sum, &modulus)? != poly::one(fq) {
                return Err(fail("Σ e_i ≠ 1 mod x^n - 1".into()));
            }
            Ok(format!("{} idempotents", sys.e_polys.len()))
        });

        push(&mut checks, "idempotent_constructions_agree", || {
            let (mat, det) = cyclo::idempotents_matrix(tower, &cl.fzn)?;
            if &mat != sys {
                return Err(fail("evaluation-matrix idempotents differ from CRT idempotents".into()));
            }
            if fq.is_zero(&det) {
                return Err(fail("det M = 0".into()));
            }
            Ok(format!("det M = {}", format_coeff_list(std::slice::from_ref(&det), tower.m())))
        });

        push(&mut checks, "idempotent_resolution_of_identity", || {
            for (i, a) in alphas.iter().enumerate() {
                let conj = tower.conjugates(a);
                let mut sum = fqn.zero();
                for l in &sys.linearized {
                    sum = fqn.add(&sum, &linearized::evaluate_with_conjugates(tower, l, &conj));
                }
                if &sum != a {
                    return Err(fail(format!("Σ E_i(α) ≠ α at sample {i}")));
                }
            }
            Ok(sweep_note.clone())
        });

        push(&mut checks, "one_normal_matches_k1", || {
            for (i, a) in alphas.iter().enumerate() {
                let onr = cl.one_normal(a)?;
                let k = cl.classify(a, Method::Auto)?.k;
                if onr.is_1_normal != (k == 1) {
                    return Err(fail(format!("1-normal test disagrees with k at sample {i}")));
                }
            }
            Ok(sweep_note.clone())
        });
    } else {
        for name in [
            "idempotents_orthogonal",
            "idempotents_sum_to_one",
            "idempotent_constructions_agree",
            "idempotent_resolution_of_identity",
            "one_normal_matches_k1",
        ] {
            skip(&mut checks, name, "requires gcd(n, p) = 1");
        }
    }

    match &cl.gauss {
        Some(gauss) => {
            push(&mut checks, "gauss_period_sum", || {
                let mut sum = fq.zero();
                for e in &gauss.periods {
                    sum = fq.add(&sum, e);
                }
                if sum != tower.int_fq(-1) {
                    return Err(fail("Σ ε_λ ≠ −1".into()));
                }
                Ok(format!("e = {} periods", gauss.e))
            });

            push(&mut checks, "gauss_period_product_identity", || {
                let e = gauss.e as usize;
                for j in 0..e {
                    let mut sum = fq.zero();
                    for lambda in 0..e {
                        sum = fq.add(
                            &sum,
                            &fq.mul(&gauss.periods[lambda], &gauss.periods[(lambda + j) % e]),
                        );
                    }
                    let expected = if j as u64 == gauss.shift_c {
                        tower.int_fq((gauss.n - gauss.f) as i64)
                    } else {
                        tower.int_fq(-(gauss.f as i64))
                    };
                    if sum != expected {
                        return Err(fail(format!("Σ ε_λ ε_(λ+{j}) has the wrong value")));
                    }
                }
                Ok(format!("all {e} shifts, −1 in coset {}", gauss.shift_c))
            });

            push(&mut checks, "special_matches_general", || {
                for (i, a) in alphas.iter().enumerate() {
                    let fast = cl.classify_special(a)?;
                    let general = cl.via_idempotents(a)?;
                    if fast.k != general.k
                        || fast.delta != general.delta
                        || fast.m_alpha_coeffs != general.m_alpha_coeffs
                    {
                        return Err(fail(format!(
                            "{} disagrees with idempotent criterion at sample {i}",
                            fast.method
                        )));
                    }
                }
                Ok(format!("fast path on {sweep_note}"))
            });

            if gauss.e == 2 {
                push(&mut checks, "quadratic_period_identities", || {
                    let b = &gauss.periods[1];
                    let c = &gauss.periods[0];
                    if fq.add(b, c) != tower.int_fq(-1) {
                        return Err(fail("B + C ≠ −1".into()));
                    }
                    let diff = fq.sub(b, c);
                    let n_star = if ((gauss.n - 1) / 2) % 2 == 0 {
                        tower.int_fq(gauss.n as i64)
                    } else {
                        tower.int_fq(-(gauss.n as i64))
                    };
                    if fq.mul(&diff, &diff) != n_star {
                        return Err(fail("(B − C)² ≠ n*".into()));
                    }
                    if tower.p() == 2 {
                        let set_01 = gauss.n % 8 == 1 || gauss.n % 8 == 7;
                        let zero = fq.zero();
                        let one = fq.one();
                        let in_01 = (b == &zero || b == &one) && (c == &zero || c == &one);
                        if set_01 != in_01 {
                            return Err(fail(format!("{{B, C}} inconsistent with n ≡ {} (mod 8)", gauss.n % 8)));
                        }
                        if !set_01 {
                            // both periods must be the roots ω, ω+1 of x² + x + 1
                            let w = fq.add(&fq.mul(b, b), &fq.add(b, &one));
                            if !fq.is_zero(&w) {
                                return Err(fail("B is not a primitive cube root structure ω".into()));
                            }
                        }
                    }
                    Ok(format!("n* = (−1)^((n−1)/2)·n, n = {}", gauss.n))
                });
            } else {
                skip(&mut checks, "quadratic_period_identities", "requires ord_n(q) = (n − 1)/2");
            }

            let one_count = gauss
                .periods
                .iter()
                .filter(|e| **e == fq.one())
                .count();
            let premise = (q == 2 || q == 4)
                && gauss.periods.iter().all(|e| **e == fq.one() || fq.is_zero(e))
                && one_count == 1;
            if premise {
                push(&mut checks, "circulant_period_orthogonality", || {
                    let e = gauss.e as usize;
                    for j in 0..e {
                        let mut sum = fq.zero();
                        for i in 0..e {
                            sum = fq.add(&sum, &fq.mul(&gauss.periods[i], &gauss.periods[(i + j) % e]));
                        }
                        let expect = if j == 0 { fq.one() } else { fq.zero() };
                        if sum != expect {
                            return Err(fail(format!("circulant row product wrong at shift {j}")));
                        }
                    }
                    Ok(format!("period vector is a shifted unit vector of length {}", gauss.e))
                });
            } else {
                skip(
                    &mut checks,
                    "circulant_period_orthogonality",
                    "period vector is not a 0/1 unit vector over F_2 or F_4",
                );
            }
        }
        None => {
            for name in [
                "gauss_period_sum",
                "gauss_period_product_identity",
                "special_matches_general",
                "quadratic_period_identities",
                "circulant_period_orthogonality",
            ] {
                skip(&mut checks, name, "requires prime n with gcd(n, p) = 1");
            }
        }
    }

    if total <= 1 << 16 {
        push(&mut checks, "histogram_total", || {
            let h = cl.histogram(1 << 16, 8, seed)?;
            let sum: u64 = h.counts.values().sum();
            if sum != h.total || h.total as u128 != total {
                return Err(fail(format!("histogram counts sum to {sum}, expected {total}")));
            }
            Ok(format!("{:?}", h.counts))
        });
    } else {
        skip(&mut checks, "histogram_total", "field too large for an exhaustive sweep");
    }

    let passed = checks.iter().filter(|c| c.status == CheckStatus::Pass).count();
    let failed = checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
    let skipped = checks.iter().filter(|c| c.status == CheckStatus::Skipped).count();
    Ok(VerifyReport {
        p: tower.p(),
        m: tower.m(),
        n,
        q,
        big_q: tower.big_q() as u64,
        exhaustive,
        seed,
        checks,
        passed,
        failed,
        skipped,
    })
}

fn random_fq_poly(tower: &FieldTower, rng: &mut ChaCha8Rng, max_deg: usize) -> Vec<FqElem> {
    let fq = &**tower.fq();
    let len = rng.gen_range(1..=max_deg + 1);
    let coeffs: Vec<FqElem> = (0..len)
        .map(|_| fq.element(rng.gen_range(0..tower.q()) as u128))
        .collect();
    poly::normalize(fq, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::FieldTower;

    fn report(p: u64, m: usize, n: usize, exhaustive: bool) -> VerifyReport {
        let tw = FieldTower::new(p, m, n, None, None).unwrap();
        run(&tw, exhaustive, 1).unwrap()
    }

    #[test]
    fn all_checks_pass_on_f128() {
        let r = report(2, 1, 7, true);
        assert!(r.all_passed(), "{:#?}", r.checks);
        assert_eq!(r.skipped, 0, "{:#?}", r.checks);
    }

    #[test]
    fn all_checks_pass_on_f8_and_f64() {
        for (p, m, n) in [(2, 1, 3), (2, 2, 3)] {
            let r = report(p, m, n, true);
            assert!(r.all_passed(), "({p},{m},{n}): {:#?}", r.checks);
        }
    }

    #[test]
    fn p_dividing_n_skips_idempotent_checks() {
        let r = report(2, 1, 4, true);
        assert!(r.all_passed(), "{:#?}", r.checks);
        assert!(r.skipped >= 5);
        let names: Vec<_> = r
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Skipped)
            .map(|c| c.name.as_str())
            .collect();
        assert!(names.contains(&"idempotents_orthogonal"));
        assert!(names.contains(&"gauss_period_sum"));
    }

    #[test]
    fn composite_coprime_n_runs_idempotents_but_not_gauss() {
        let r = report(2, 1, 9, false);
        assert!(r.all_passed(), "{:#?}", r.checks);
        let by_name = |name: &str| r.checks.iter().find(|c| c.name == name).unwrap().status;
        assert_eq!(by_name("idempotents_orthogonal"), CheckStatus::Pass);
        assert_eq!(by_name("gauss_period_sum"), CheckStatus::Skipped);
        assert_eq!(by_name("one_normal_matches_k1"), CheckStatus::Pass);
    }

    #[test]
    fn circulant_check_runs_exactly_when_premise_holds() {
        let r7 = report(2, 1, 7, false);
        let c7 = r7.checks.iter().find(|c| c.name == "circulant_period_orthogonality").unwrap();
        assert_eq!(c7.status, CheckStatus::Pass);

        let r31 = report(2, 1, 31, false);
        let c31 = r31.checks.iter().find(|c| c.name == "circulant_period_orthogonality").unwrap();
        assert_eq!(c31.status, CheckStatus::Skipped, "(2,31) periods have three ones");
        assert!(r31.all_passed(), "{:#?}", r31.checks);

        // q = 4, n = 13 ≡ 5 (mod 8): the periods are ω and ω + 1, so the
        // 0/1 premise fails before the count is even consulted.
        let r13 = report(2, 2, 13, false);
        let c13 = r13.checks.iter().find(|c| c.name == "circulant_period_orthogonality").unwrap();
        assert_eq!(c13.status, CheckStatus::Skipped);
        let quad = r13.checks.iter().find(|c| c.name == "quadratic_period_identities").unwrap();
        assert_eq!(quad.status, CheckStatus::Pass);
        assert!(r13.all_passed(), "{:#?}", r13.checks);
    }

    #[test]
    fn quadratic_identities_on_odd_q() {
        let r = report(3, 1, 11, false);
        assert!(r.all_passed(), "{:#?}", r.checks);
        let c = r.checks.iter().find(|c| c.name == "quadratic_period_identities").unwrap();
        assert_eq!(c.status, CheckStatus::Pass);
    }
}
