//! Command-line front end for the `knormal` library.
//!
//! Every command works on a tower F_p ⊂ F_q = F_{p^m} ⊂ F_Q = F_{q^n}
//! given as `--field p,m,n`, optionally with explicit tower moduli. Output
//! is deterministic JSON (sorted keys) or a plain-text rendering.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 violated mathematical
//! precondition, 3 internal invariant failure.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use knormal::cyclo;
use knormal::factor::{factor_xn_minus_1, FactorizationXn1};
use knormal::fields::Field;
use knormal::normality::{Classifier, Method, DEFAULT_HISTOGRAM_CAP, DEFAULT_ORACLE_SAMPLE};
use knormal::tower::{format_coeff_list, parse_coeff_list, FQElem, FieldTower};
use knormal::verify;
use knormal::{Error, ErrorKind, Result};

#[derive(Parser)]
#[command(name = "knormal", version, about = "normality k and minimal q-polynomials over finite fields")]
struct Cli {
    /// Field tower "p,m,n": base F_p, middle F_q = F_{p^m}, top F_Q = F_{q^n}
    #[arg(long, global = true, value_name = "p,m,n")]
    field: Option<String>,

    /// Modulus of F_q over F_p: m+1 ascending coefficients "c0,c1,...,cm"
    #[arg(long, global = true, value_name = "coeffs")]
    modq: Option<String>,

    /// Modulus of F_Q over F_q: n+1 ascending coefficients in element syntax
    #[arg(long = "modQ", global = true, value_name = "coeffs")]
    mod_big: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for every sampled computation (histogram oracle, verify)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdemMethod {
    Crt,
    Matrix,
}

#[derive(Subcommand)]
enum Cmd {
    /// Field summary: sizes, moduli, factor structure, applicable methods
    Info,
    /// Factor x^n - 1 over F_q, with the q-class attached to each factor
    Factor,
    /// Primitive orthogonal idempotents of F_q[x]/(x^n - 1)
    Idempotents {
        #[arg(long, value_enum, default_value_t = IdemMethod::Crt)]
        method: IdemMethod,
    },
    /// Normality k, factor set delta and minimal q-polynomial of one element
    Classify {
        /// Element of F_Q: ascending coefficients, or "g^k" for a power of
        /// a primitive element
        #[arg(long)]
        element: String,
        /// auto | gcd | Mi | idempotent | special | thm_s2 | thm_quadratic |
        /// thm_gauss | lemma2_general
        #[arg(long, default_value = "auto")]
        method: String,
        /// Re-derive the result with the gcd criterion and fail on mismatch
        #[arg(long)]
        check_oracle: bool,
    },
    /// Count elements of each normality k over all of F_Q^x
    Histogram {
        /// Refuse fields with more than this many elements
        #[arg(long)]
        cap: Option<u64>,
        /// How many elements get cross-checked against the gcd criterion
        #[arg(long)]
        oracle_sample: Option<usize>,
    },
    /// Gauss periods of the prime n: cosets, periods, quadratic data
    GaussPeriods,
    /// Run the library's self-checks against this field
    Verify {
        /// Sweep all of F_Q^x where feasible instead of sampling
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Serialize)]
struct InfoReport {
    p: u64,
    m: usize,
    n: usize,
    q: u64,
    #[serde(rename = "Q")]
    big_q: u64,
    modulus_q: Vec<u64>,
    #[serde(rename = "modulus_Q")]
    modulus_big: Vec<Vec<u64>>,
    n_prime: u64,
    t: u32,
    s: usize,
    partition: Vec<Vec<u64>>,
    factor_degrees: Vec<usize>,
    factor_multiplicities: Vec<usize>,
    ord: u64,
    d: u64,
    methods: Vec<String>,
    special_methods: Vec<String>,
}

#[derive(Serialize)]
struct FactorReport {
    n: usize,
    n_prime: u64,
    t: u32,
    partition: Vec<Vec<u64>>,
    factors: Vec<FactorEntry>,
}

#[derive(Serialize)]
struct FactorEntry {
    coeffs: Vec<Vec<u64>>,
    multiplicity: usize,
    class_rep: u64,
    class: Vec<u64>,
}

#[derive(Serialize)]
struct IdemEntry {
    e_coeffs: Vec<Vec<u64>>,
    #[serde(rename = "E_q_coeffs")]
    big_e_q_coeffs: Vec<Vec<u64>>,
}

#[derive(Serialize)]
struct GaussReport {
    e: u64,
    f: u64,
    g: u64,
    periods: Vec<Vec<u64>>,
    c: u64,
    #[serde(rename = "B")]
    b: Option<Vec<u64>>,
    #[serde(rename = "C")]
    big_c: Option<Vec<u64>>,
    n_star: Option<Vec<u64>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let code = if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                0
            } else {
                1
            };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Usage => 1,
                ErrorKind::Precondition => 2,
                ErrorKind::Invariant => 3,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8)> {
    let tower = build_tower(cli)?;
    let out = match &cli.cmd {
        Cmd::Info => {
            let fzn = factor_xn_minus_1(&tower)?;
            let report = info_report(&tower, &fzn);
            match cli.format {
                Format::Json => to_json(&report)?,
                Format::Text => info_text(&report),
            }
        }
        Cmd::Factor => {
            let fzn = factor_xn_minus_1(&tower)?;
            let report = FactorReport {
                n: tower.n(),
                n_prime: fzn.n_prime,
                t: fzn.t,
                partition: fzn.partition.clone(),
                factors: fzn
                    .factors
                    .iter()
                    .map(|f| FactorEntry {
                        coeffs: f.poly.clone(),
                        multiplicity: f.multiplicity,
                        class_rep: f.class_rep,
                        class: f.class.clone(),
                    })
                    .collect(),
            };
            match cli.format {
                Format::Json => to_json(&report)?,
                Format::Text => factor_text(&tower, &report),
            }
        }
        Cmd::Idempotents { method } => {
            let fzn = factor_xn_minus_1(&tower)?;
            let sys = match method {
                IdemMethod::Crt => cyclo::idempotents_crt(&tower, &fzn)?,
                IdemMethod::Matrix => cyclo::idempotents_matrix(&tower, &fzn)?.0,
            };
            let entries: Vec<IdemEntry> = sys
                .e_polys
                .iter()
                .zip(&sys.linearized)
                .map(|(e, l)| IdemEntry {
                    e_coeffs: e.clone(),
                    big_e_q_coeffs: l.q_coeffs.clone(),
                })
                .collect();
            match cli.format {
                Format::Json => to_json(&entries)?,
                Format::Text => idempotents_text(&tower, &entries),
            }
        }
        Cmd::Classify {
            element,
            method,
            check_oracle,
        } => {
            let alpha = parse_element_arg(&tower, element)?;
            let method: Method = method.parse()?;
            let cl = Classifier::new(&tower)?;
            let mut report = cl.classify(&alpha, method)?;
            if *check_oracle {
                let oracle = cl.via_gcd(&alpha)?;
                if oracle.k != report.k || oracle.m_alpha_coeffs != report.m_alpha_coeffs {
                    return Err(Error::Internal(format!(
                        "gcd oracle disagrees: k = {} vs {}",
                        oracle.k, report.k
                    )));
                }
                report
                    .witnesses
                    .insert("oracle_checked".into(), Value::Bool(true));
            }
            match cli.format {
                Format::Json => to_json(&report)?,
                Format::Text => classify_text(&tower, &report),
            }
        }
        Cmd::Histogram { cap, oracle_sample } => {
            let cl = Classifier::new(&tower)?;
            let report = cl.histogram(
                cap.unwrap_or(DEFAULT_HISTOGRAM_CAP),
                oracle_sample.unwrap_or(DEFAULT_ORACLE_SAMPLE),
                cli.seed,
            )?;
            match cli.format {
                Format::Json => to_json(&report)?,
                Format::Text => histogram_text(&report),
            }
        }
        Cmd::GaussPeriods => {
            let fzn = factor_xn_minus_1(&tower)?;
            let gauss = cyclo::gauss_periods(&tower, &fzn)?;
            let (b, big_c, n_star) = if gauss.e == 2 {
                let n = gauss.n as i64;
                let n_star = if ((n - 1) / 2) % 2 == 0 {
                    tower.int_fq(n)
                } else {
                    tower.int_fq(-n)
                };
                (
                    Some(gauss.periods[1].clone()),
                    Some(gauss.periods[0].clone()),
                    Some(n_star),
                )
            } else {
                (None, None, None)
            };
            let report = GaussReport {
                e: gauss.e,
                f: gauss.f,
                g: gauss.g,
                periods: gauss.periods.clone(),
                c: gauss.shift_c,
                b,
                big_c,
                n_star,
            };
            match cli.format {
                Format::Json => to_json(&report)?,
                Format::Text => gauss_text(&tower, &report),
            }
        }
        Cmd::Verify { exhaustive } => {
            let report = verify::run(&tower, *exhaustive, cli.seed)?;
            let out = match cli.format {
                Format::Json => to_json(&report)?,
                Format::Text => verify_text(&report),
            };
            let code = if report.all_passed() { 0 } else { 3 };
            return Ok((out, code));
        }
    };
    Ok((out, 0))
}

fn build_tower(cli: &Cli) -> Result<FieldTower> {
    let spec = cli
        .field
        .as_deref()
        .ok_or_else(|| Error::Parse("--field p,m,n is required".into()))?;
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "--field expects three comma-separated integers, got {spec:?}"
        )));
    }
    let p: u64 = parse_int(parts[0], "p")?;
    let m: usize = parse_int(parts[1], "m")? as usize;
    let n: usize = parse_int(parts[2], "n")? as usize;

    let modq = match &cli.modq {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|c| parse_int(c.trim(), "--modq coefficient"))
                .collect::<Result<Vec<u64>>>()?,
        ),
    };
    let mod_big = match &cli.mod_big {
        None => None,
        Some(s) => Some(parse_coeff_list(s, p, m)?),
    };
    FieldTower::new(p, m, n, modq, mod_big)
}

fn parse_int(s: &str, what: &str) -> Result<u64> {
    s.parse()
        .map_err(|_| Error::Parse(format!("invalid {what}: {s:?}")))
}

fn parse_element_arg(tower: &FieldTower, s: &str) -> Result<FQElem> {
    let s = s.trim();
    if s == "g" {
        return Ok(tower.primitive_fqn());
    }
    if let Some(exp) = s.strip_prefix("g^") {
        let k: u128 = exp
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid generator power {exp:?}")))?;
        return Ok(tower.fqn().pow(&tower.primitive_fqn(), k));
    }
    tower.parse_element(s)
}

/// Serialize through `serde_json::Value` so keys come out sorted; parsing
/// the output and re-serializing it is then byte-identical.
fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Internal(e.to_string()))?;
    let s = serde_json::to_string_pretty(&v).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(s + "\n")
}

fn info_report(tower: &FieldTower, fzn: &FactorizationXn1) -> InfoReport {
    let n = tower.n() as u64;
    let q = tower.q();
    let coprime = fzn.t == 0;
    let ord = fzn.w as u64;

    let mut methods = vec!["gcd".to_string()];
    if coprime {
        methods.push("Mi".into());
        methods.push("idempotent".into());
    }
    methods.push("lemma2_general".into());

    let mut special = Vec::new();
    if coprime && is_prime(n) {
        if ord == n - 1 {
            special.push("thm_s2".to_string());
        }
        if (n - 1) / ord == 2 {
            special.push("thm_quadratic".to_string());
        }
        special.push("thm_gauss".to_string());
    }

    InfoReport {
        p: tower.p(),
        m: tower.m(),
        n: tower.n(),
        q,
        big_q: tower.big_q() as u64,
        modulus_q: tower.modulus_q().to_vec(),
        modulus_big: tower.modulus_big().to_vec(),
        n_prime: fzn.n_prime,
        t: fzn.t,
        s: fzn.s(),
        partition: fzn.partition.clone(),
        factor_degrees: fzn.factors.iter().map(|f| f.poly.len() - 1).collect(),
        factor_multiplicities: fzn.factors.iter().map(|f| f.multiplicity).collect(),
        ord,
        d: gcd(n, q - 1),
        methods,
        special_methods: special,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn fmt_ints(v: &[u64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn fmt_class(v: &[u64]) -> String {
    format!("{{{}}}", fmt_ints(v))
}

fn info_text(r: &InfoReport) -> String {
    let mut out = String::new();
    out += &format!(
        "F_Q/F_q with p = {}, m = {}, n = {} (q = {}, Q = {})\n",
        r.p, r.m, r.n, r.q, r.big_q
    );
    out += &format!("modulus of F_q over F_p: {}\n", fmt_ints(&r.modulus_q));
    out += &format!(
        "modulus of F_Q over F_q: {}\n",
        format_coeff_list(&r.modulus_big, r.m)
    );
    out += &format!("n = n' * p^t with n' = {}, t = {}\n", r.n_prime, r.t);
    out += &format!(
        "q-class partition of Z_{}: {}\n",
        r.n_prime,
        r.partition.iter().map(|c| fmt_class(c)).collect::<Vec<_>>().join(" ")
    );
    out += &format!(
        "x^n - 1 has s = {} distinct irreducible factors, degrees {:?}, multiplicities {:?}\n",
        r.s, r.factor_degrees, r.factor_multiplicities
    );
    out += &format!("ord of q modulo n' = {}, d = gcd(n, q - 1) = {}\n", r.ord, r.d);
    out += &format!("methods: {}\n", r.methods.join(", "));
    if !r.special_methods.is_empty() {
        out += &format!("special fast paths: {}\n", r.special_methods.join(", "));
    }
    out
}

fn factor_text(tower: &FieldTower, r: &FactorReport) -> String {
    let mut out = format!(
        "x^{} - 1 over F_{} (n' = {}, t = {})\n",
        r.n,
        tower.q(),
        r.n_prime,
        r.t
    );
    for (i, f) in r.factors.iter().enumerate() {
        out += &format!(
            "p_{} = {}  class {} multiplicity {}\n",
            i,
            format_coeff_list(&f.coeffs, tower.m()),
            fmt_class(&f.class),
            f.multiplicity
        );
    }
    out
}

fn idempotents_text(tower: &FieldTower, entries: &[IdemEntry]) -> String {
    let mut out = String::new();
    for (i, e) in entries.iter().enumerate() {
        out += &format!("e_{} = {}\n", i, format_coeff_list(&e.e_coeffs, tower.m()));
        out += &format!(
            "E_{} q-coefficients = {}\n",
            i,
            format_coeff_list(&e.big_e_q_coeffs, tower.m())
        );
    }
    out
}

fn classify_text(tower: &FieldTower, r: &knormal::NormalityReport) -> String {
    let mut out = format!("k = {}\n", r.k);
    match &r.delta {
        Some(d) => out += &format!("delta (factor indices) = {d:?}\n"),
        None => out += "delta = n/a (p divides n)\n",
    }
    out += &format!(
        "m_alpha coefficients = {}\n",
        format_coeff_list(&r.m_alpha_coeffs, tower.m())
    );
    out += &format!(
        "M_alpha q-coefficients = {}\n",
        format_coeff_list(&r.big_m_q_coeffs, tower.m())
    );
    out += &format!("method = {}\n", r.method);
    for (k, v) in &r.witnesses {
        out += &format!("witness {k} = {v}\n");
    }
    out
}

fn histogram_text(r: &knormal::HistogramReport) -> String {
    let mut out = String::new();
    for (k, count) in &r.counts {
        out += &format!("k = {k}: {count}\n");
    }
    out += &format!(
        "total {} (method {}, seed {}, {} oracle-checked)\n",
        r.total, r.method, r.seed, r.oracle_checked
    );
    out
}

fn gauss_text(tower: &FieldTower, r: &GaussReport) -> String {
    let m = tower.m();
    let one = |x: &Vec<u64>| format_coeff_list(std::slice::from_ref(x), m);
    let mut out = format!("e = {}, f = {}, generator g = {}, shift c = {}\n", r.e, r.f, r.g, r.c);
    for (i, eps) in r.periods.iter().enumerate() {
        out += &format!("epsilon_{} = {}\n", i, one(eps));
    }
    if let (Some(b), Some(c), Some(ns)) = (&r.b, &r.big_c, &r.n_star) {
        out += &format!("B = {}, C = {}, n* = {}\n", one(b), one(c), one(ns));
    }
    out
}

fn verify_text(r: &knormal::VerifyReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let tag = match c.status {
            knormal::CheckStatus::Pass => "PASS",
            knormal::CheckStatus::Fail => "FAIL",
            knormal::CheckStatus::Skipped => "SKIP",
        };
        out += &format!("{tag} {} — {}\n", c.name, c.detail);
    }
    out += &format!(
        "{} passed, {} failed, {} skipped\n",
        r.passed, r.failed, r.skipped
    );
    out
}
