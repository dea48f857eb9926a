//! k-normality classifiers and whole-field histograms.
//!
//! An element α ∈ F_Q^× (Q = q^n) is k-normal when its conjugates span an
//! F_q-subspace of dimension n − k; equivalently
//!
//!   k = deg gcd(g_α(x), x^n − 1) = n − deg m_α,
//!
//! where g_α(x) = Σ_{i=0}^{n−1} α^(q^i) x^(n−1−i) and M_α = φ(m_α) is the
//! minimal q-polynomial of α. When gcd(n, p) = 1 and x^n − 1 = p_1 ⋯ p_s
//! (distinct irreducibles), the set
//!
//!   Δ(α) = {i : E_i(α) ≠ 0} = {i : M_i(α) ≠ 0},
//!
//! with E_i = φ(e_i) the orthogonal-idempotent q-polynomials and
//! M_i = φ((x^n − 1)/p_i), determines m_α = Π_{i∈Δ} p_i and
//! k = n − Σ_{i∈Δ} deg p_i. For prime n there are closed-form fast paths
//! driven by the trace and the order-e Gauss periods; all of them are
//! cross-checked against the general criteria in the test suite.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arith;
use crate::cyclo::{self, GaussPeriodData, IdempotentSystem};
use crate::error::{Error, Result};
use crate::factor::{factor_xn_minus_1, FactorizationXn1};
use crate::fields::{has_exact_order, Field};
use crate::linearized::{self, LinearizedPoly};
use crate::poly;
use crate::tower::{format_coeff_list, FQElem, FieldTower, FqElem};

/// Default cap on Q − 1 for exhaustive histogram sweeps.
pub const DEFAULT_HISTOGRAM_CAP: u64 = 1 << 20;

/// Default number of elements cross-checked against the gcd oracle.
pub const DEFAULT_ORACLE_SAMPLE: usize = 32;

/// Classification strategies. `Auto` resolves to `Idempotent` when
/// gcd(n, p) = 1 and to `Lemma2General` (annihilator search over the
/// divisors of x^n − 1) otherwise; `Special` dispatches among the prime-n
/// fast paths by ord_n(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    Gcd,
    Mi,
    Idempotent,
    Special,
    ThmS2,
    ThmQuadratic,
    ThmGauss,
    Lemma2General,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Gcd => "gcd",
            Method::Mi => "Mi",
            Method::Idempotent => "idempotent",
            Method::Special => "special",
            Method::ThmS2 => "thm_s2",
            Method::ThmQuadratic => "thm_quadratic",
            Method::ThmGauss => "thm_gauss",
            Method::Lemma2General => "lemma2_general",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "auto" => Ok(Method::Auto),
            "gcd" => Ok(Method::Gcd),
            "mi" => Ok(Method::Mi),
            "idempotent" => Ok(Method::Idempotent),
            "special" => Ok(Method::Special),
            "thm_s2" => Ok(Method::ThmS2),
            "thm_quadratic" => Ok(Method::ThmQuadratic),
            "thm_gauss" => Ok(Method::ThmGauss),
            "lemma2_general" | "lemma2" => Ok(Method::Lemma2General),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

/// Outcome of classifying a single element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalityReport {
    pub k: usize,
    /// 0-based indices into the canonical factor list; `None` when p | n
    /// (factor multiplicities make an index set insufficient).
    pub delta: Option<Vec<usize>>,
    pub m_alpha_coeffs: Vec<FqElem>,
    #[serde(rename = "M_alpha_q_coeffs")]
    pub big_m_q_coeffs: Vec<FqElem>,
    pub method: String,
    pub witnesses: Map<String, Value>,
}

/// Result of the dedicated 1-normality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneNormalReport {
    pub is_1_normal: bool,
    /// d = gcd(n, q − 1), the number of linear factors of x^n − 1.
    pub d: u64,
    /// The unique vanishing λ ∈ [1, d], when exactly one exists.
    pub lambda_zero: Option<usize>,
    pub lambda_zeros: Vec<usize>,
    /// L_λ(α) for λ = 1, …, d.
    pub l_values: Vec<FQElem>,
    /// E_i(α) ≠ 0 for every factor of degree ≥ 2.
    pub high_degree_nonvanishing: bool,
}

/// Exhaustive per-k counts over F_Q^×.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HistogramReport {
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
    pub method: String,
    pub seed: u64,
    pub oracle_sample_indices: Vec<u64>,
    pub oracle_checked: usize,
}

/// g_α(x) = Σ_{i=0}^{n−1} α^(q^i) x^(n−1−i) ∈ F_Q[x].
pub fn g_alpha(tower: &FieldTower, alpha: &FQElem) -> Vec<FQElem> {
    let n = tower.n();
    let mut g = vec![tower.fqn().zero(); n];
    for (i, c) in tower.conjugates(alpha).into_iter().enumerate() {
        g[n - 1 - i] = c;
    }
    poly::normalize(&**tower.fqn(), g)
}

/// Shared state for classifying many elements of one tower: the
/// factorization of x^n − 1, the idempotent and quotient q-polynomials
/// (when gcd(n, p) = 1), and the Gauss-period data (when n is prime).
pub struct Classifier<'a> {
    tower: &'a FieldTower,
    pub fzn: FactorizationXn1,
    pub idem: Option<IdempotentSystem>,
    pub mi_polys: Option<Vec<LinearizedPoly>>,
    pub gauss: Option<GaussPeriodData>,
}

impl<'a> Classifier<'a> {
    pub fn new(tower: &'a FieldTower) -> Result<Self> {
        let fzn = factor_xn_minus_1(tower)?;
        let coprime = fzn.t == 0;
        let (idem, mi_polys) = if coprime {
            let sys = cyclo::idempotents_crt(tower, &fzn)?;
            let fq = &**tower.fq();
            let xn1 = fzn.xn_minus_1(tower);
            let mut mi = Vec::with_capacity(fzn.s());
            for f in &fzn.factors {
                let quotient = poly::div_exact(fq, &xn1, &f.poly)?;
                mi.push(linearized::phi(tower, &quotient));
            }
            (Some(sys), Some(mi))
        } else {
            (None, None)
        };
        let gauss = if coprime && arith::is_prime(tower.n() as u64) {
            Some(cyclo::gauss_periods(tower, &fzn)?)
        } else {
            None
        };
        Ok(Classifier {
            tower,
            fzn,
            idem,
            mi_polys,
            gauss,
        })
    }

    pub fn tower(&self) -> &FieldTower {
        self.tower
    }

    fn require_nonzero(&self, alpha: &FQElem) -> Result<()> {
        if self.tower.fqn().is_zero(alpha) {
            return Err(Error::ZeroElement);
        }
        Ok(())
    }

    fn coprime_or_err(&self) -> Result<()> {
        if self.fzn.t > 0 {
            return Err(Error::PDividesN {
                p: self.tower.p(),
                n: self.tower.n(),
            });
        }
        Ok(())
    }

    fn gauss_data(&self) -> Result<&GaussPeriodData> {
        self.coprime_or_err()?;
        self.gauss
            .as_ref()
            .ok_or(Error::NNotPrime(self.tower.n() as u64))
    }

    fn fmt_fq(&self, c: &FqElem) -> String {
        format_coeff_list(std::slice::from_ref(c), self.tower.m())
    }

    /// Dispatch on `method`; see [`Method`] for the resolution rules.
    pub fn classify(&self, alpha: &FQElem, method: Method) -> Result<NormalityReport> {
        match method {
            Method::Auto => {
                if self.fzn.t == 0 {
                    self.via_idempotents(alpha)
                } else {
                    self.via_divisor_search(alpha)
                }
            }
            Method::Gcd => self.via_gcd(alpha),
            Method::Mi => self.via_mi(alpha),
            Method::Idempotent => self.via_idempotents(alpha),
            Method::Special => self.classify_special(alpha),
            Method::ThmS2 => {
                let g = self.gauss_data()?;
                if g.f != g.n - 1 {
                    return Err(Error::OrderMismatch {
                        found: g.f,
                        expected: g.n - 1,
                    });
                }
                self.via_thm_s2(alpha)
            }
            Method::ThmQuadratic => {
                let g = self.gauss_data()?;
                if g.e != 2 {
                    return Err(Error::OrderMismatch {
                        found: g.f,
                        expected: (g.n - 1) / 2,
                    });
                }
                self.via_thm_quadratic(alpha)
            }
            Method::ThmGauss => self.via_thm_gauss(alpha),
            Method::Lemma2General => self.via_divisor_search(alpha),
        }
    }

    /// Prime-n fast path chosen by f = ord_n(q): the trace trichotomy when
    /// f = n − 1, the quadratic-period criterion when f = (n − 1)/2, and
    /// the general Gauss-period criterion otherwise.
    pub fn classify_special(&self, alpha: &FQElem) -> Result<NormalityReport> {
        let g = self.gauss_data()?;
        if g.f == g.n - 1 {
            self.via_thm_s2(alpha)
        } else if g.e == 2 {
            self.via_thm_quadratic(alpha)
        } else {
            self.via_thm_gauss(alpha)
        }
    }

    /// Reference oracle: k = deg gcd(g_α, x^n − 1) over F_Q[x]; m_α comes
    /// from the independent annihilator search and must agree.
    pub fn via_gcd(&self, alpha: &FQElem) -> Result<NormalityReport> {
        self.require_nonzero(alpha)?;
        let fqn = &**self.tower.fqn();
        let n = self.tower.n();
        let g = g_alpha(self.tower, alpha);
        let xn1 = poly::xn_minus_1(fqn, n);
        let gcd = poly::gcd(fqn, &g, &xn1)?;
        let k = poly::degree(&gcd).ok_or_else(|| Error::Internal("zero gcd".into()))?;
        let (m_alpha, _) = linearized::minimal_q_poly(self.tower, &self.fzn, alpha)?;
        let deg = poly::degree(&m_alpha).unwrap_or(0);
        if n - deg != k {
            return Err(Error::Internal(format!(
                "gcd degree {k} disagrees with annihilator degree {deg}"
            )));
        }
        let delta = if self.fzn.t == 0 {
            Some(self.divisibility_delta(&m_alpha)?)
        } else {
            None
        };
        let mut w = Map::new();
        w.insert("gcd_degree".into(), json!(k));
        self.finish_report(alpha, m_alpha, delta, Method::Gcd, w)
    }

    /// Δ(α) = {i : M_i(α) ≠ 0} with M_i = φ((x^n − 1)/p_i).
    pub fn via_mi(&self, alpha: &FQElem) -> Result<NormalityReport> {
        self.require_nonzero(alpha)?;
        self.coprime_or_err()?;
        let mi = self.mi_polys.as_ref().expect("coprime tower has quotient polynomials");
        let fqn = self.tower.fqn();
        let conj = self.tower.conjugates(alpha);
        let mut delta = Vec::new();
        let mut evals = Vec::with_capacity(mi.len());
        for (i, l) in mi.iter().enumerate() {
            let v = linearized::evaluate_with_conjugates(self.tower, l, &conj);
            if !fqn.is_zero(&v) {
                delta.push(i);
            }
            evals.push(Value::String(self.tower.format_element(&v)));
        }
        let mut w = Map::new();
        w.insert("quotient_evals".into(), Value::Array(evals));
        self.finish_delta(alpha, delta, Method::Mi, w)
    }

    /// Δ(α) = {i : E_i(α) ≠ 0} over the orthogonal idempotents.
    pub fn via_idempotents(&self, alpha: &FQElem) -> Result<NormalityReport> {
        self.require_nonzero(alpha)?;
        self.coprime_or_err()?;
        let sys = self.idem.as_ref().expect("coprime tower has idempotents");
        let fqn = self.tower.fqn();
        let conj = self.tower.conjugates(alpha);
        let mut delta = Vec::new();
        let mut evals = Vec::with_capacity(sys.linearized.len());
        for (i, l) in sys.linearized.iter().enumerate() {
            let v = linearized::evaluate_with_conjugates(self.tower, l, &conj);
            if !fqn.is_zero(&v) {
                delta.push(i);
            }
            evals.push(Value::String(self.tower.format_element(&v)));
        }
        let mut w = Map::new();
        w.insert("idempotent_evals".into(), Value::Array(evals));
        self.finish_delta(alpha, delta, Method::Idempotent, w)
    }

    /// First annihilator in the sorted divisor lattice of x^n − 1 (works
    /// for p | n as well).
    pub fn via_divisor_search(&self, alpha: &FQElem) -> Result<NormalityReport> {
        self.require_nonzero(alpha)?;
        let (m_alpha, _) = linearized::minimal_q_poly(self.tower, &self.fzn, alpha)?;
        let delta = if self.fzn.t == 0 {
            Some(self.divisibility_delta(&m_alpha)?)
        } else {
            None
        };
        let mut w = Map::new();
        w.insert(
            "num_divisors".into(),
            json!(linearized::xn1_divisors(self.tower, &self.fzn).len()),
        );
        self.finish_report(alpha, m_alpha, delta, Method::Lemma2General, w)
    }

    /// f = n − 1 trichotomy: α ∈ F_q^× ⟹ m_α = x − 1 (k = n − 1);
    /// otherwise Tr(α) ≠ 0 ⟹ m_α = x^n − 1 (k = 0) and
    /// Tr(α) = 0 ⟹ m_α = (x^n − 1)/(x − 1) (k = 1).
    fn via_thm_s2(&self, alpha: &FQElem) -> Result<NormalityReport> {
        self.require_nonzero(alpha)?;
        let gauss = self.gauss_data()?;
        let fq = &**self.tower.fq();
        let in_base = self.tower.descend(alpha).is_some();
        let tr = self.tower.trace(alpha)?;
        let big_idx = gauss.factor_idx[0];
        let delta = if in_base {
            if fq.is_zero(&tr) {
                return Err(Error::Internal(
                    "base-field element with zero trace in a coprime tower".into(),
                ));
            }
            vec![0]
        } else if !fq.is_zero(&tr) {
            vec![0, big_idx]
        } else {
            vec![big_idx]
        };
        let mut w = Map::new();
        w.insert("trace".into(), Value::String(self.fmt_fq(&tr)));
        w.insert("in_base_field".into(), json!(in_base));
        self.finish_delta(alpha, delta, Method::ThmS2, w)
    }

    /// e = 2 closed form. With C = Σ_{r∈D} ζ^r, B = Σ_{r∈D′} ζ^r,
    /// √n* = B − C, δ = Σ_r (r/n) α^(q^r) and ε = Σ_{r∈D} α^(q^r):
    /// for odd q the D-factor idempotent vanishes iff
    /// nα − Tr(α) − μ√n*·δ = 0 (μ = +1 for even f, −1 for odd f), and for
    /// even q iff ε = (f mod 2)·Tr(α) + B(Tr(α) + α); the D′-factor swaps
    /// the sign of μ (resp. replaces B by C = B + 1).
    fn via_thm_quadratic(&self, alpha: &FQElem) -> Result<NormalityReport> {
        self.require_nonzero(alpha)?;
        let gauss = self.gauss_data()?;
        let qd = cyclo::quadratic_data(self.tower, gauss, alpha)?;
        let fq = &**self.tower.fq();
        let fqn = self.tower.fqn();
        let tr = self.tower.trace(alpha)?;
        let tr_emb = self.tower.embed_fq(&tr);
        let (d_zero, dp_zero) = if self.tower.p() == 2 {
            let f_bit = gauss.f % 2;
            let tr_plus_alpha = fqn.add(&tr_emb, alpha);
            let base = self.tower.scale(&self.tower.int_fq(f_bit as i64), &tr_emb);
            let v_d = fqn.add(&base, &self.tower.scale(&qd.b, &tr_plus_alpha));
            let v_dp = fqn.add(&base, &self.tower.scale(&qd.c, &tr_plus_alpha));
            (
                fqn.is_zero(&fqn.sub(&qd.epsilon, &v_d)),
                fqn.is_zero(&fqn.sub(&qd.epsilon, &v_dp)),
            )
        } else {
            let n_alpha = self.tower.scale(&self.tower.int_fq(self.tower.n() as i64), alpha);
            let base = fqn.sub(&n_alpha, &tr_emb);
            let term = self.tower.scale(&qd.sqrt_n_star, &qd.delta);
            let mu_term = if gauss.f % 2 == 0 { term } else { fqn.neg(&term) };
            (
                fqn.is_zero(&fqn.sub(&base, &mu_term)),
                fqn.is_zero(&fqn.add(&base, &mu_term)),
            )
        };
        let mut delta = Vec::new();
        if !fq.is_zero(&tr) {
            delta.push(0);
        }
        if !d_zero {
            delta.push(gauss.factor_idx[0]);
        }
        if !dp_zero {
            delta.push(gauss.factor_idx[1]);
        }
        let mut w = Map::new();
        w.insert("trace".into(), Value::String(self.fmt_fq(&tr)));
        w.insert("delta_sum".into(), Value::String(self.tower.format_element(&qd.delta)));
        w.insert("epsilon_sum".into(), Value::String(self.tower.format_element(&qd.epsilon)));
        w.insert("B".into(), Value::String(self.fmt_fq(&qd.b)));
        w.insert("C".into(), Value::String(self.fmt_fq(&qd.c)));
        w.insert("sqrt_n_star".into(), Value::String(self.fmt_fq(&qd.sqrt_n_star)));
        self.finish_delta(alpha, delta, Method::ThmQuadratic, w)
    }

    /// General prime-n criterion via Gauss periods: with
    /// T_λ = Σ_{a∈C_λ} α^(q^a) and w_i = Σ_λ ε_{λ+i+c} T_λ, the coset-λ
    /// factor survives in m_α iff w_λ ≠ −f·α, and x − 1 survives iff
    /// Tr(α) ≠ 0.
    fn via_thm_gauss(&self, alpha: &FQElem) -> Result<NormalityReport> {
        self.require_nonzero(alpha)?;
        let gauss = self.gauss_data()?;
        let fq = &**self.tower.fq();
        let fqn = self.tower.fqn();
        let conj = self.tower.conjugates(alpha);
        let tr = self.tower.trace(alpha)?;
        let e = gauss.e as usize;
        let c = gauss.shift_c as usize;
        let t_sums: Vec<FQElem> = gauss
            .cosets
            .iter()
            .map(|coset| {
                let mut s = fqn.zero();
                for &a in coset {
                    s = fqn.add(&s, &conj[a as usize]);
                }
                s
            })
            .collect();
        let neg_f_alpha = self
            .tower
            .scale(&self.tower.int_fq(-(gauss.f as i64)), alpha);
        let mut s_set = Vec::new();
        let mut w_strs = Vec::with_capacity(e);
        for i in 0..e {
            let mut w_i = fqn.zero();
            for (lambda, t) in t_sums.iter().enumerate() {
                w_i = fqn.add(&w_i, &self.tower.scale(&gauss.periods[(lambda + i + c) % e], t));
            }
            if w_i != neg_f_alpha {
                s_set.push(i);
            }
            w_strs.push(Value::String(self.tower.format_element(&w_i)));
        }
        let mut delta: Vec<usize> = s_set.iter().map(|&i| gauss.factor_idx[i]).collect();
        if !fq.is_zero(&tr) {
            delta.push(0);
        }
        let mut w = Map::new();
        w.insert("trace".into(), Value::String(self.fmt_fq(&tr)));
        w.insert("s_set".into(), json!(s_set));
        w.insert("w_values".into(), Value::Array(w_strs));
        self.finish_delta(alpha, delta, Method::ThmGauss, w)
    }

    /// Evaluates L_λ(α) = Σ_{r=0}^{d−1} β^((λ−1)(−1−r)) (Tr^n_d(α))^(q^r)
    /// for λ = 1, …, d = gcd(n, q − 1) — the quotient criteria of the d
    /// linear factors x − β^(λ−1) — and decides 1-normality: exactly one
    /// vanishing L_λ plus nonvanishing idempotents at every factor of
    /// degree ≥ 2.
    pub fn one_normal(&self, alpha: &FQElem) -> Result<OneNormalReport> {
        self.require_nonzero(alpha)?;
        let n = self.tower.n() as u64;
        let q = self.tower.q();
        if self.fzn.t > 0 {
            return Err(Error::NotCoprime { n, q });
        }
        let fq = &**self.tower.fq();
        let fqn = self.tower.fqn();
        let d = arith::gcd(n, q - 1);
        let gamma = self.tower.primitive_fq();
        let beta = fq.pow(&gamma, ((q - 1) / d) as u128);
        if !has_exact_order(fq, &beta, d) {
            return Err(Error::Internal(
                "generator of the n-th roots of unity in F_q has wrong order".into(),
            ));
        }
        let linear = self
            .fzn
            .factors
            .iter()
            .filter(|f| f.class.len() == 1)
            .count() as u64;
        if linear != d {
            return Err(Error::Internal(format!(
                "expected {d} linear factors of x^n - 1, found {linear}"
            )));
        }
        let tau = self.tower.trace_to_subfield(alpha, d as usize)?;
        let mut l_values = Vec::with_capacity(d as usize);
        for lambda in 1..=d {
            let mut acc = fqn.zero();
            for r in 0..d {
                // β^((λ−1)(−1−r)) with −1−r ≡ d−1−r (mod d)
                let exp = ((lambda - 1) as u128 * (d - 1 - r) as u128) % d as u128;
                let coeff = fq.pow(&beta, exp);
                acc = fqn.add(
                    &acc,
                    &self.tower.scale(&coeff, &self.tower.frobenius(&tau, r as usize)),
                );
            }
            l_values.push(acc);
        }
        let lambda_zeros: Vec<usize> = l_values
            .iter()
            .enumerate()
            .filter(|(_, v)| fqn.is_zero(v))
            .map(|(i, _)| i + 1)
            .collect();
        let sys = self.idem.as_ref().expect("coprime tower has idempotents");
        let conj = self.tower.conjugates(alpha);
        let high_degree_nonvanishing = self
            .fzn
            .factors
            .iter()
            .zip(&sys.linearized)
            .filter(|(f, _)| f.class.len() >= 2)
            .all(|(_, l)| {
                !fqn.is_zero(&linearized::evaluate_with_conjugates(self.tower, l, &conj))
            });
        let is_1_normal = lambda_zeros.len() == 1 && high_degree_nonvanishing;
        Ok(OneNormalReport {
            is_1_normal,
            d,
            lambda_zero: if lambda_zeros.len() == 1 {
                Some(lambda_zeros[0])
            } else {
                None
            },
            lambda_zeros,
            l_values,
            high_degree_nonvanishing,
        })
    }

    /// Classify every α ∈ F_Q^× and count per k; a seeded sample is
    /// cross-checked against the gcd oracle (a mismatch is an internal
    /// error, never a report field).
    pub fn histogram(&self, cap: u64, oracle_sample: usize, seed: u64) -> Result<HistogramReport> {
        let total_wide = self.tower.big_q() - 1;
        if total_wide > cap as u128 {
            return Err(Error::FieldTooLarge(format!(
                "histogram sweep of {total_wide} elements exceeds the cap {cap}"
            )));
        }
        let total = total_wide as u64;
        let fqn = self.tower.fqn();
        let method = if self.fzn.t == 0 {
            Method::Idempotent
        } else {
            Method::Lemma2General
        };
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for idx in 1..=total {
            let alpha = fqn.element(idx as u128);
            let report = self.classify(&alpha, method)?;
            *counts.entry(report.k).or_insert(0) += 1;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let want = oracle_sample.min(total as usize);
        let mut indices = BTreeSet::new();
        while indices.len() < want {
            indices.insert(rng.gen_range(1..=total));
        }
        for &idx in &indices {
            let alpha = fqn.element(idx as u128);
            let expect = self.classify(&alpha, method)?.k;
            let got = self.via_gcd(&alpha)?.k;
            if got != expect {
                return Err(Error::Internal(format!(
                    "histogram oracle mismatch at element index {idx}: {expect} vs {got}"
                )));
            }
        }
        Ok(HistogramReport {
            counts,
            total,
            method: method.tag().to_string(),
            seed,
            oracle_sample_indices: indices.into_iter().collect(),
            oracle_checked: want,
        })
    }

    fn divisibility_delta(&self, m_alpha: &[FqElem]) -> Result<Vec<usize>> {
        let fq = &**self.tower.fq();
        let mut delta = Vec::new();
        for (i, f) in self.fzn.factors.iter().enumerate() {
            if poly::rem(fq, m_alpha, &f.poly)?.is_empty() {
                delta.push(i);
            }
        }
        Ok(delta)
    }

    fn finish_delta(
        &self,
        alpha: &FQElem,
        mut delta: Vec<usize>,
        method: Method,
        witnesses: Map<String, Value>,
    ) -> Result<NormalityReport> {
        delta.sort_unstable();
        delta.dedup();
        if delta.is_empty() {
            return Err(Error::Internal(
                "no surviving factor for a nonzero element".into(),
            ));
        }
        let fq = &**self.tower.fq();
        let mut m = poly::one(fq);
        for &i in &delta {
            m = poly::mul(fq, &m, &self.fzn.factors[i].poly);
        }
        self.finish_report(alpha, m, Some(delta), method, witnesses)
    }

    fn finish_report(
        &self,
        alpha: &FQElem,
        m_alpha: Vec<FqElem>,
        delta: Option<Vec<usize>>,
        method: Method,
        witnesses: Map<String, Value>,
    ) -> Result<NormalityReport> {
        let n = self.tower.n();
        let deg = poly::degree(&m_alpha)
            .ok_or_else(|| Error::Internal("zero annihilator polynomial".into()))?;
        if deg == 0 || deg > n {
            return Err(Error::Internal(format!(
                "annihilator degree {deg} out of range for n = {n}"
            )));
        }
        let big = linearized::phi(self.tower, &m_alpha);
        if !self
            .tower
            .fqn()
            .is_zero(&linearized::evaluate(self.tower, &big, alpha))
        {
            return Err(Error::Internal(
                "computed q-polynomial does not annihilate the element".into(),
            ));
        }
        Ok(NormalityReport {
            k: n - deg,
            delta,
            m_alpha_coeffs: m_alpha,
            big_m_q_coeffs: big.q_coeffs,
            method: method.tag().to_string(),
            witnesses,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(p: u64, m: usize, n: usize) -> FieldTower {
        FieldTower::new(p, m, n, None, None).unwrap()
    }

    type Core = (usize, Option<Vec<usize>>, Vec<FqElem>, Vec<FqElem>);

    fn core(r: &NormalityReport) -> Core {
        (
            r.k,
            r.delta.clone(),
            r.m_alpha_coeffs.clone(),
            r.big_m_q_coeffs.clone(),
        )
    }

    #[test]
    fn all_methods_agree_on_f8() {
        let tw = tower(2, 1, 3);
        let cl = Classifier::new(&tw).unwrap();
        let fqn = tw.fqn();
        for idx in 1..tw.big_q() {
            let alpha = fqn.element(idx);
            let gcd = cl.via_gcd(&alpha).unwrap();
            let mi = cl.via_mi(&alpha).unwrap();
            let idem = cl.via_idempotents(&alpha).unwrap();
            let search = cl.via_divisor_search(&alpha).unwrap();
            let special = cl.classify_special(&alpha).unwrap();
            assert_eq!(core(&gcd), core(&mi));
            assert_eq!(core(&gcd), core(&idem));
            assert_eq!(core(&gcd), core(&search));
            assert_eq!(core(&gcd), core(&special));
            let rank = tw.conjugate_span_rank(&alpha).unwrap();
            assert_eq!(gcd.k, 3 - rank);
        }
        let t = tw.parse_element("0,1,0").unwrap();
        let one = tw.parse_element("1,0,0").unwrap();
        let t1 = tw.parse_element("1,1,0").unwrap();
        let rt = cl.via_idempotents(&t).unwrap();
        assert_eq!(rt.k, 1);
        assert_eq!(rt.delta, Some(vec![1]));
        assert_eq!(rt.m_alpha_coeffs, vec![vec![1], vec![1], vec![1]]);
        assert_eq!(rt.big_m_q_coeffs, vec![vec![1], vec![1], vec![1]]);
        let r1 = cl.via_idempotents(&one).unwrap();
        assert_eq!(r1.k, 2);
        assert_eq!(r1.delta, Some(vec![0]));
        assert_eq!(r1.m_alpha_coeffs, vec![vec![1], vec![1]]);
        let r2 = cl.via_idempotents(&t1).unwrap();
        assert_eq!(r2.k, 0);
        assert_eq!(r2.delta, Some(vec![0, 1]));
        assert_eq!(r2.m_alpha_coeffs, vec![vec![1], vec![0], vec![0], vec![1]]);
    }

    #[test]
    fn s2_trichotomy_matches_idempotents_on_f32() {
        let tw = tower(2, 1, 5);
        let cl = Classifier::new(&tw).unwrap();
        assert_eq!(cl.gauss.as_ref().unwrap().f, 4);
        let fqn = tw.fqn();
        let mut seen_k = BTreeSet::new();
        for idx in 1..tw.big_q() {
            let alpha = fqn.element(idx);
            let fast = cl.classify(&alpha, Method::ThmS2).unwrap();
            let general = cl.via_idempotents(&alpha).unwrap();
            assert_eq!(core(&fast), core(&general));
            seen_k.insert(fast.k);
        }
        assert_eq!(seen_k.into_iter().collect::<Vec<_>>(), vec![0, 1, 4]);
        let one = fqn.element(1);
        assert_eq!(cl.classify(&one, Method::ThmS2).unwrap().k, 4);
    }

    #[test]
    fn quadratic_matches_idempotents_on_f128() {
        let tw = tower(2, 1, 7);
        let cl = Classifier::new(&tw).unwrap();
        let fqn = tw.fqn();
        for idx in 1..tw.big_q() {
            let alpha = fqn.element(idx);
            let fast = cl.classify(&alpha, Method::ThmQuadratic).unwrap();
            let general = cl.via_idempotents(&alpha).unwrap();
            assert_eq!(core(&fast), core(&general), "element index {idx}");
        }
        // spec-level landmarks: 1 is 6-normal with m = x − 1
        let one = fqn.element(1);
        let r = cl.classify_special(&one).unwrap();
        assert_eq!((r.k, r.method.as_str()), (6, "thm_quadratic"));
        assert_eq!(r.m_alpha_coeffs, vec![vec![1], vec![1]]);
    }

    #[test]
    fn quadratic_sampled_odd_q_even_f() {
        // q = 9, n = 5: f = 2 even, so the quadratic sign μ = +1
        let tw = tower(3, 2, 5);
        let cl = Classifier::new(&tw).unwrap();
        assert_eq!(cl.gauss.as_ref().unwrap().e, 2);
        let fqn = tw.fqn();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..800 {
            let idx = rng.gen_range(1..tw.big_q());
            let alpha = fqn.element(idx);
            let fast = cl.classify(&alpha, Method::ThmQuadratic).unwrap();
            let general = cl.via_idempotents(&alpha).unwrap();
            assert_eq!(core(&fast), core(&general), "element index {idx}");
        }
        for c in 1..9u128 {
            let alpha = tw.embed_fq(&tw.fq().element(c));
            let r = cl.classify(&alpha, Method::ThmQuadratic).unwrap();
            assert_eq!(r.k, 4);
            assert_eq!(r.m_alpha_coeffs, cl.fzn.factors[0].poly);
        }
    }

    #[test]
    fn quadratic_sampled_odd_q_odd_f() {
        // q = 3, n = 11: f = 5 odd, so the quadratic sign μ = −1
        let tw = tower(3, 1, 11);
        let cl = Classifier::new(&tw).unwrap();
        assert_eq!((cl.gauss.as_ref().unwrap().e, cl.gauss.as_ref().unwrap().f), (2, 5));
        let fqn = tw.fqn();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let idx = rng.gen_range(1..tw.big_q());
            let alpha = fqn.element(idx);
            let fast = cl.classify(&alpha, Method::ThmQuadratic).unwrap();
            let general = cl.via_idempotents(&alpha).unwrap();
            assert_eq!(core(&fast), core(&general), "element index {idx}");
        }
    }

    #[test]
    fn gauss_criterion_on_f3_13() {
        let tw = tower(3, 1, 13);
        let cl = Classifier::new(&tw).unwrap();
        let fqn = tw.fqn();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let idx = rng.gen_range(1..tw.big_q());
            let alpha = fqn.element(idx);
            let fast = cl.classify(&alpha, Method::ThmGauss).unwrap();
            let general = cl.via_idempotents(&alpha).unwrap();
            assert_eq!(core(&fast), core(&general), "element index {idx}");
        }
        for c in [1u128, 2] {
            let alpha = tw.embed_fq(&tw.fq().element(c));
            let r = cl.classify(&alpha, Method::ThmGauss).unwrap();
            assert_eq!(r.k, 12);
            assert_eq!(r.delta, Some(vec![0]));
        }
    }

    #[test]
    fn gauss_criterion_on_f2_31() {
        let tw = tower(2, 1, 31);
        let cl = Classifier::new(&tw).unwrap();
        // the coset order and the smallest-representative factor order differ here
        assert_eq!(cl.gauss.as_ref().unwrap().factor_idx, vec![1, 2, 3, 6, 4, 5]);
        let fqn = tw.fqn();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..48 {
            let idx = rng.gen_range(1..tw.big_q());
            let alpha = fqn.element(idx);
            let fast = cl.classify(&alpha, Method::ThmGauss).unwrap();
            let general = cl.via_idempotents(&alpha).unwrap();
            assert_eq!(core(&fast), core(&general), "element index {idx}");
        }
    }

    #[test]
    fn one_normal_matches_k_eq_1() {
        for (p, m, n) in [(2, 1, 3), (2, 2, 3), (2, 1, 5)] {
            let tw = tower(p, m, n);
            let cl = Classifier::new(&tw).unwrap();
            let fqn = tw.fqn();
            for idx in 1..tw.big_q() {
                let alpha = fqn.element(idx);
                let onr = cl.one_normal(&alpha).unwrap();
                let k = cl.classify(&alpha, Method::Auto).unwrap().k;
                assert_eq!(onr.is_1_normal, k == 1, "({p},{m},{n}) index {idx}");
            }
        }
    }

    #[test]
    fn one_normal_with_several_linear_factors() {
        // q = 5, n = 8: d = gcd(8, 4) = 4 linear factors x − β^λ
        let tw = tower(5, 1, 8);
        let cl = Classifier::new(&tw).unwrap();
        let fqn = tw.fqn();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut ones = 0u32;
        for _ in 0..400 {
            let idx = rng.gen_range(1..tw.big_q());
            let alpha = fqn.element(idx);
            let onr = cl.one_normal(&alpha).unwrap();
            assert_eq!(onr.d, 4);
            let k = cl.classify(&alpha, Method::Auto).unwrap().k;
            assert_eq!(onr.is_1_normal, k == 1, "element index {idx}");
            ones += onr.is_1_normal as u32;
        }
        assert!(ones > 0, "sample should contain at least one 1-normal element");
    }

    #[test]
    fn histograms_for_f8_and_f16() {
        let tw8 = tower(2, 1, 3);
        let cl8 = Classifier::new(&tw8).unwrap();
        let h8 = cl8.histogram(DEFAULT_HISTOGRAM_CAP, 7, 42).unwrap();
        assert_eq!(h8.counts, BTreeMap::from([(0, 3), (1, 3), (2, 1)]));
        assert_eq!((h8.total, h8.method.as_str()), (7, "idempotent"));

        let tw16 = tower(2, 1, 4);
        let cl16 = Classifier::new(&tw16).unwrap();
        let h16 = cl16.histogram(DEFAULT_HISTOGRAM_CAP, 15, 42).unwrap();
        assert_eq!(h16.counts, BTreeMap::from([(0, 8), (1, 4), (2, 2), (3, 1)]));
        assert_eq!((h16.total, h16.method.as_str()), (15, "lemma2_general"));
        assert_eq!(h16.oracle_checked, 15);
    }

    #[test]
    fn p_dividing_n_reports_have_no_delta() {
        let tw = tower(2, 1, 4);
        let cl = Classifier::new(&tw).unwrap();
        let alpha = tw.parse_element("0,1,0,0").unwrap();
        let r = cl.classify(&alpha, Method::Auto).unwrap();
        assert_eq!(r.method, "lemma2_general");
        assert_eq!(r.delta, None);
        let g = cl.via_gcd(&alpha).unwrap();
        assert_eq!(g.k, r.k);
    }

    #[test]
    fn method_parsing_and_preconditions() {
        for m in [
            Method::Auto,
            Method::Gcd,
            Method::Mi,
            Method::Idempotent,
            Method::Special,
            Method::ThmS2,
            Method::ThmQuadratic,
            Method::ThmGauss,
            Method::Lemma2General,
        ] {
            assert_eq!(Method::from_str(m.tag()).unwrap(), m);
        }
        assert_eq!(Method::from_str("thm-gauss").unwrap(), Method::ThmGauss);
        assert!(Method::from_str("newton").is_err());

        let tw4 = tower(2, 1, 4);
        let cl4 = Classifier::new(&tw4).unwrap();
        let a4 = tw4.parse_element("0,1,0,0").unwrap();
        assert_eq!(
            cl4.via_mi(&a4).map(|_| ()),
            Err(Error::PDividesN { p: 2, n: 4 })
        );
        assert_eq!(
            cl4.one_normal(&a4).map(|_| ()),
            Err(Error::NotCoprime { n: 4, q: 2 })
        );

        let tw32 = tower(2, 1, 5);
        let cl32 = Classifier::new(&tw32).unwrap();
        let a32 = tw32.parse_element("0,1,0,0,0").unwrap();
        assert_eq!(
            cl32.classify(&a32, Method::ThmQuadratic).map(|_| ()),
            Err(Error::OrderMismatch { found: 4, expected: 2 })
        );

        let tw512 = tower(2, 1, 9);
        let cl512 = Classifier::new(&tw512).unwrap();
        let a512 = tw512.parse_element("0,1,0,0,0,0,0,0,0").unwrap();
        assert_eq!(
            cl512.classify_special(&a512).map(|_| ()),
            Err(Error::NNotPrime(9))
        );

        let zero = tw32.fqn().zero();
        assert_eq!(cl32.via_gcd(&zero).map(|_| ()), Err(Error::ZeroElement));
        assert!(matches!(
            cl32.histogram(4, 1, 0),
            Err(Error::FieldTooLarge(_))
        ));
    }
}
