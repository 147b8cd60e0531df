//! Command-line front end. Results go to stdout as JSON; diagnostics go to stderr.
//!
//! Exit codes: 0 on success, 2 on malformed input or a violated precondition,
//! 3 when two evaluation routes disagree or a consistency check fails.

use std::ffi::OsString;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::counting::{
    count_quadric_brute, count_quadric_closed_general, count_quadric_prime, markoff_coeffs, markoff_count_brute,
    markoff_count_closed, singular_binary_count, CountError,
};
use crate::exactnum::Cyclotomic;
use crate::gauss::{brute_gauss, closed_gauss, discriminant_sum, milgram_extended, Branch, GaussSpec};
use crate::hecke::{
    hecke_cyclotomic, hecke_cyclotomic_brute, hecke_quadratic, hecke_quadratic_brute, hecke_quadratic_explicit,
    CycHeckeSpec, QuadHeckeSpec,
};
use crate::qform::{an_matrix, hyperbolic_plane, parse_matrix, parse_rational_vec, zero_vec, EvenSymMatrix};
use crate::subsum::{
    duality_coprime_rhs, duality_divides_rhs, gauss_subsum_brute, hyperplane_subsum_closed, orthogonal_complement,
    poisson_subsum_rhs, SubgroupModC,
};
use crate::verify::{run_suite, SUITES};
use crate::weil::{
    theta_transform_residual, weil_closed_coprime, weil_closed_divides, weil_shintani, weil_via_word, Mp2Element,
    WeilContext,
};

#[derive(Parser, Debug)]
#[command(name = "qgauss", version, about = "Exact quadratic Gauss sums and related evaluators")]
struct Cli {
    /// Worker threads for parallel enumeration (0 uses the rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gauss sum by direct enumeration.
    Gauss(GaussArgs),
    /// Gauss sum by the closed formulas.
    GaussClosed(GaussClosedArgs),
    /// Discriminant-group sum against the extended Milgram value.
    Milgram(MilgramArgs),
    /// Gauss sum over a subgroup, or over a hyperplane given by `--hyperplane`.
    Subsum(SubsumArgs),
    /// Both sides of a duality identity.
    DualityCheck(DualityArgs),
    /// Weil representation matrix of an element of Mp2(Z).
    Weil(WeilArgs),
    /// Points on an affine quadric modulo c.
    Count(CountArgs),
    /// Points on a Markoff-type surface modulo p.
    Markoff(MarkoffArgs),
    /// Hecke Gauss sums.
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Numerical check of the theta transformation law.
    ThetaCheck(ThetaArgs),
    /// Seeded oracle-equivalence suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct MatrixArg {
    /// Gram matrix: a file path, inline JSON rows, `A<n>`, or `U`.
    #[arg(long)]
    matrix: String,
}

#[derive(Args, Debug)]
struct GaussArgs {
    #[command(flatten)]
    m: MatrixArg,
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long)]
    c: i64,
    /// Comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Comma-separated summation ranges.
    #[arg(long)]
    t: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Brute,
    Closed,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BranchArg {
    Auto,
    Coprime,
    Divides,
}

#[derive(Args, Debug)]
struct GaussClosedArgs {
    #[command(flatten)]
    g: GaussArgs,
    #[arg(long, value_enum, default_value_t = BranchArg::Auto)]
    branch: BranchArg,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
}

#[derive(Args, Debug)]
struct MilgramArgs {
    #[command(flatten)]
    m: MatrixArg,
    #[arg(long, allow_hyphen_values = true)]
    c: i64,
}

#[derive(Args, Debug)]
struct SubsumArgs {
    #[command(flatten)]
    m: MatrixArg,
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long)]
    c: i64,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    /// Subgroup as JSON `{"c": c, "gens": [[...], ...]}`.
    #[arg(long, conflicts_with = "hyperplane")]
    subgroup: Option<String>,
    /// Integer vector `h`; sums over `{v : h·v ≡ 0 mod c}`.
    #[arg(long, allow_hyphen_values = true)]
    hyperplane: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DualityRoute {
    Auto,
    Coprime,
    Divides,
    Poisson,
}

#[derive(Args, Debug)]
struct DualityArgs {
    #[command(flatten)]
    m: MatrixArg,
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long)]
    c: i64,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long)]
    subgroup: String,
    #[arg(long, value_enum, default_value_t = DualityRoute::Auto)]
    route: DualityRoute,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum WeilRoute {
    Shintani,
    Word,
    Coprime,
    Divides,
    All,
}

#[derive(Args, Debug)]
struct WeilArgs {
    #[command(flatten)]
    m: MatrixArg,
    /// Matrix entries `a,b,c,d`.
    #[arg(long = "element", allow_hyphen_values = true)]
    element: String,
    /// Sign of the square-root branch, 1 or -1.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    eps: i8,
    #[arg(long, value_enum, default_value_t = WeilRoute::Shintani)]
    route: WeilRoute,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CountMethod {
    Brute,
    Closed,
    Prime,
    /// Binary form modulo an odd prime dividing its determinant.
    Singular,
    Both,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    m: MatrixArg,
    /// Linear term, comma-separated integers (default zero).
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    /// Right-hand side.
    #[arg(long = "m", allow_hyphen_values = true, default_value_t = 0)]
    rhs: i64,
    #[arg(long)]
    c: u64,
    #[arg(long, value_enum, default_value_t = CountMethod::Brute)]
    method: CountMethod,
}

#[derive(Args, Debug)]
struct MarkoffArgs {
    /// `a11,a22,a33,a12,a13,a23,d`.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    #[arg(long)]
    p: u64,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
}

#[derive(Subcommand, Debug)]
enum HeckeCommand {
    /// Over Q(√d) with ω = (v0 + v1 √d) / c1.
    Quad {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        v0: i64,
        #[arg(long, allow_hyphen_values = true)]
        v1: i64,
        #[arg(long)]
        c1: i64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Over Q(ζ_p) with ω = c1⁻¹ Σ v_k ζ_p^k.
    Cyc {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        c1: i64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Largest number of terms any enumeration may visit.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
    },
}

#[derive(Args, Debug)]
struct ThetaArgs {
    #[command(flatten)]
    m: MatrixArg,
    #[arg(long = "element", allow_hyphen_values = true)]
    element: String,
    /// Component index in the discriminant group.
    #[arg(long, default_value_t = 0)]
    component: usize,
    /// `re,im`
    #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
    tau: String,
    /// `re,im` pairs separated by `;` (default zero).
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, default_value_t = 25)]
    radius: i64,
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Comma-separated suite names (default: all).
    #[arg(long)]
    suite: Option<String>,
}

/// A failure with its exit code.
#[derive(Debug)]
enum Failure {
    Input { code: &'static str, detail: String },
    Fault { code: &'static str, detail: String, body: Value },
}

fn input(code: &'static str, e: impl std::fmt::Display) -> Failure {
    Failure::Input { code, detail: e.to_string() }
}

fn fault(code: &'static str, detail: impl Into<String>, body: Value) -> Failure {
    Failure::Fault { code, detail: detail.into(), body }
}

type Res = Result<Value, Failure>;

fn cyc(v: &Cyclotomic) -> Value {
    let mut j = v.to_json();
    j["pretty"] = json!(v.pretty());
    j
}

fn load_matrix(spec: &str) -> Result<EvenSymMatrix, Failure> {
    let s = spec.trim();
    if Path::new(s).is_file() {
        let text = std::fs::read_to_string(s).map_err(|e| input("io", e))?;
        return parse_matrix(&text).map_err(|e| input("matrix", e));
    }
    if s == "U" {
        return Ok(hyperbolic_plane());
    }
    if let Some(n) = s.strip_prefix('A').and_then(|k| k.parse::<usize>().ok()) {
        if n >= 1 {
            return Ok(an_matrix(n));
        }
    }
    parse_matrix(s).map_err(|e| input("matrix", e))
}

fn rational_vec(s: &Option<String>, n: usize) -> Result<Vec<crate::exactnum::Rational>, Failure> {
    match s {
        None => Ok(zero_vec(n)),
        Some(t) => {
            let v = parse_rational_vec(t).map_err(|e| input("vector", e))?;
            if v.len() != n {
                return Err(input("vector", format!("expected {n} entries, found {}", v.len())));
            }
            Ok(v)
        }
    }
}

fn int_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| input("integer-list", format!("bad entry {t:?}"))))
        .collect()
}

fn element(s: &str, eps: i8) -> Result<Mp2Element, Failure> {
    let v: Vec<i64> = int_list(s)?;
    if v.len() != 4 {
        return Err(input("element", "expected a,b,c,d"));
    }
    Mp2Element::new(v[0], v[1], v[2], v[3], eps).map_err(|e| input("element", e))
}

fn complex(s: &str) -> Result<Complex64, Failure> {
    let v: Vec<f64> = int_list(s)?;
    if v.len() != 2 {
        return Err(input("complex", "expected re,im"));
    }
    Ok(Complex64::new(v[0], v[1]))
}

fn gauss_spec(a: &GaussArgs) -> Result<GaussSpec, Failure> {
    let g = load_matrix(&a.m.matrix)?;
    let n = g.dim();
    let mut spec = GaussSpec::new(&g, a.a, a.c).map_err(|e| input("gauss", e))?;
    spec = spec.with_w(rational_vec(&a.w, n)?).map_err(|e| input("gauss", e))?;
    spec = spec.with_x(rational_vec(&a.x, n)?).map_err(|e| input("gauss", e))?;
    if let Some(t) = &a.t {
        spec = spec.with_t(int_list(t)?).map_err(|e| input("gauss", e))?;
    }
    Ok(spec)
}

/// Compares two exact values and turns a mismatch into a fault.
fn agree(first: &str, x: &Cyclotomic, second: &str, y: &Cyclotomic) -> Res {
    let body = json!({ first: cyc(x), second: cyc(y), "agree": x == y });
    if x == y {
        Ok(body)
    } else {
        Err(fault("disagreement", format!("{first} and {second} differ"), body))
    }
}

fn cmd_gauss(a: &GaussArgs) -> Res {
    let spec = gauss_spec(a)?;
    Ok(json!({ "value": cyc(&brute_gauss(&spec)) }))
}

fn cmd_gauss_closed(a: &GaussClosedArgs) -> Res {
    let spec = gauss_spec(&a.g)?;
    let branch = match a.branch {
        BranchArg::Auto => Branch::Auto,
        BranchArg::Coprime => Branch::Coprime,
        BranchArg::Divides => Branch::Divides,
    };
    let closed = || closed_gauss(&spec, branch).map_err(|e| input("gauss", e));
    match a.method {
        Method::Closed => Ok(json!({ "value": cyc(&closed()?) })),
        Method::Brute => Ok(json!({ "value": cyc(&brute_gauss(&spec)) })),
        Method::Both => agree("closed", &closed()?, "brute", &brute_gauss(&spec)),
    }
}

fn cmd_milgram(a: &MilgramArgs) -> Res {
    let g = load_matrix(&a.m.matrix)?;
    let closed = milgram_extended(&g, a.c).map_err(|e| input("milgram", e))?;
    agree("closed", &closed, "enumerated", &discriminant_sum(&g, a.c))
}

fn subgroup(s: &str, n: usize) -> Result<SubgroupModC, Failure> {
    let v: Value = serde_json::from_str(s).map_err(|e| input("subgroup", e))?;
    SubgroupModC::from_json(&v, n).map_err(|e| input("subgroup", e))
}

fn cmd_subsum(a: &SubsumArgs) -> Res {
    let g = load_matrix(&a.m.matrix)?;
    let n = g.dim();
    let w = rational_vec(&a.w, n)?;
    let (h, hyper) = match (&a.subgroup, &a.hyperplane) {
        (Some(s), None) => (subgroup(s, n)?, None),
        (None, Some(hs)) => {
            let hv: Vec<i64> = int_list(hs)?;
            if hv.len() != n || a.c < 1 {
                return Err(input("hyperplane", "h must have one entry per coordinate and c must be positive"));
            }
            let line = SubgroupModC::generate(a.c as u64, n, &[hv.clone()]).map_err(|e| input("subgroup", e))?;
            (orthogonal_complement(&line).map_err(|e| input("subgroup", e))?, Some(hv))
        }
        _ => return Err(input("usage", "give exactly one of --subgroup and --hyperplane")),
    };
    if h.modulus() != a.c as u64 {
        return Err(input("subgroup", "subgroup modulus differs from --c"));
    }
    let brute = || gauss_subsum_brute(&g, a.a, a.c, &w, &h).map_err(|e| input("subsum", e));
    match (a.method, hyper) {
        (Method::Brute, _) => Ok(json!({ "value": cyc(&brute()?), "order": h.order() })),
        (_, None) => Err(input("usage", "closed subsums need --hyperplane")),
        (m, Some(hv)) => {
            let out = hyperplane_subsum_closed(&g, a.a, a.c, &w, &hv).map_err(|e| input("subsum", e))?;
            let mut body = if m == Method::Both {
                agree("closed", &out.value, "brute", &brute()?)?
            } else {
                json!({ "value": cyc(&out.value) })
            };
            body["route"] = json!(format!("{:?}", out.route));
            Ok(body)
        }
    }
}

fn cmd_duality(a: &DualityArgs) -> Res {
    let g = load_matrix(&a.m.matrix)?;
    let n = g.dim();
    let w = rational_vec(&a.w, n)?;
    let h = subgroup(&a.subgroup, n)?;
    let level = g.level();
    let route = match a.route {
        DualityRoute::Auto if num_integer::Integer::gcd(&level, &a.c) == 1 => DualityRoute::Coprime,
        DualityRoute::Auto if a.c % level == 0 && g.is_positive_definite() => DualityRoute::Divides,
        DualityRoute::Auto => DualityRoute::Poisson,
        r => r,
    };
    let lhs = gauss_subsum_brute(&g, a.a, a.c, &w, &h).map_err(|e| input("subsum", e))?;
    let rhs = match route {
        DualityRoute::Coprime => duality_coprime_rhs(&g, a.a, a.c, &w, &h),
        DualityRoute::Divides => duality_divides_rhs(&g, a.a, a.c, &w, &h),
        _ => poisson_subsum_rhs(&g, a.a, a.c, &w, &h),
    }
    .map_err(|e| input("subsum", e))?;
    let mut body = agree("lhs", &lhs, "rhs", &rhs)?;
    body["route"] = json!(format!("{route:?}").to_lowercase());
    body["equal"] = body["agree"].clone();
    Ok(body)
}

fn cmd_weil(a: &WeilArgs) -> Res {
    let g = load_matrix(&a.m.matrix)?;
    let el = element(&a.element, a.eps)?;
    let ctx = WeilContext::new(&g).map_err(|e| input("weil", e))?;
    let eval = |r: WeilRoute| {
        match r {
            WeilRoute::Word => weil_via_word(&ctx, &el),
            WeilRoute::Coprime => weil_closed_coprime(&ctx, &el),
            WeilRoute::Divides => weil_closed_divides(&ctx, &el),
            _ => weil_shintani(&ctx, &el),
        }
        .map_err(|e| input("weil", e))
    };
    if a.route != WeilRoute::All {
        let m = eval(a.route)?;
        return Ok(json!({ "matrix": m.to_json(&ctx.disc), "route": format!("{:?}", a.route).to_lowercase() }));
    }
    let reference = eval(WeilRoute::Word)?;
    let mut routes = serde_json::Map::new();
    let mut all = true;
    for r in [WeilRoute::Shintani, WeilRoute::Coprime, WeilRoute::Divides] {
        if let Ok(m) = eval(r) {
            let same = m == reference;
            all &= same;
            routes.insert(format!("{r:?}").to_lowercase(), json!(same));
        }
    }
    let body = json!({ "matrix": reference.to_json(&ctx.disc), "agrees_with_word": routes });
    if all {
        Ok(body)
    } else {
        Err(fault("disagreement", "Weil routes differ", body))
    }
}

fn count_err(e: CountError) -> Failure {
    match e {
        CountError::NonInteger(_) => fault("non-integer", e.to_string(), Value::Null),
        _ => input("count", e),
    }
}

fn cmd_count(a: &CountArgs) -> Res {
    let g = load_matrix(&a.m.matrix)?;
    let v: Vec<i64> = match &a.v {
        Some(s) => int_list(s)?,
        None => vec![0; g.dim()],
    };
    if v.len() != g.dim() {
        return Err(input("vector", "v must have one entry per coordinate"));
    }
    let brute = || count_quadric_brute(&g, &v, a.rhs, a.c).map_err(count_err);
    match a.method {
        CountMethod::Brute => Ok(json!({ "count": brute()?.to_string() })),
        CountMethod::Closed => {
            Ok(json!({ "count": count_quadric_closed_general(&g, &v, a.rhs, a.c).map_err(count_err)?.to_string() }))
        }
        CountMethod::Singular => {
            if g.dim() != 2 {
                return Err(input("count", "the singular binary count needs a 2x2 matrix"));
            }
            let s = singular_binary_count(g.entry(0, 0) / 2, g.entry(0, 1), g.entry(1, 1) / 2, [v[0], v[1]], a.rhs, a.c)
                .map_err(count_err)?;
            Ok(json!({ "count": s.to_string() }))
        }
        CountMethod::Prime => {
            Ok(json!({ "count": count_quadric_prime(&g, &v, a.rhs, a.c).map_err(count_err)?.to_string() }))
        }
        CountMethod::Both => {
            let b = brute()?;
            let closed = if crate::arith::is_prime(a.c) && g.det_i64() % a.c as i64 != 0 {
                count_quadric_prime(&g, &v, a.rhs, a.c)
            } else {
                count_quadric_closed_general(&g, &v, a.rhs, a.c)
            }
            .map_err(count_err)?;
            let body = json!({ "brute": b.to_string(), "closed": closed.to_string(), "agree": closed == b.into() });
            if body["agree"] == json!(true) {
                Ok(body)
            } else {
                Err(fault("disagreement", "closed and brute counts differ", body))
            }
        }
    }
}

fn cmd_markoff(a: &MarkoffArgs) -> Res {
    let t: Vec<i64> = int_list(&a.coeffs)?;
    let arr: [i64; 7] = t.try_into().map_err(|_| input("coeffs", "expected seven integers"))?;
    let co = markoff_coeffs(arr);
    let brute = || markoff_count_brute(&co, a.p).map_err(|e| input("markoff", e));
    let closed = || markoff_count_closed(&co, a.p).map_err(|e| input("markoff", e));
    match a.method {
        Method::Brute => Ok(json!({ "brute": brute()? })),
        Method::Closed => {
            let (v, case) = closed()?;
            Ok(json!({ "closed": v, "case": case as u8 }))
        }
        Method::Both => {
            let b = brute()?;
            let (v, case) = closed()?;
            let body = json!({ "brute": b, "closed": v, "case": case as u8 });
            if b as i64 == v {
                Ok(body)
            } else {
                Err(fault("disagreement", "closed and brute counts differ", body))
            }
        }
    }
}

fn cmd_hecke(h: &HeckeCommand) -> Res {
    match h {
        HeckeCommand::Quad { d, v0, v1, c1, method } => {
            let spec = QuadHeckeSpec::new(*d, *v0, *v1, *c1).map_err(|e| input("hecke", e))?;
            let closed = hecke_quadratic(&spec).map_err(|e| input("hecke", e))?;
            let mut body = match method {
                Method::Closed => json!({ "value": cyc(&closed.value) }),
                Method::Brute => {
                    json!({ "value": cyc(&hecke_quadratic_brute(&spec, 1 << 26).map_err(|e| input("hecke", e))?) })
                }
                Method::Both => {
                    let b = hecke_quadratic_brute(&spec, 1 << 26).map_err(|e| input("hecke", e))?;
                    agree("closed", &closed.value, "brute", &b)?
                }
            };
            body["route"] = json!(format!("{:?}", closed.route).to_lowercase());
            if let Ok(x) = hecke_quadratic_explicit(&spec) {
                body["explicit"] = json!(x.to_string());
                if Cyclotomic::from_rational(&x) != closed.value {
                    return Err(fault("disagreement", "explicit value differs from the matrix sum", body));
                }
            }
            Ok(body)
        }
        HeckeCommand::Cyc { p, v, c1, method, budget } => {
            let spec = CycHeckeSpec::new(*p, int_list(v)?, *c1).map_err(|e| input("hecke", e))?;
            let brute = || hecke_cyclotomic_brute(&spec, *budget).map_err(|e| input("hecke", e));
            let closed = || hecke_cyclotomic(&spec, *budget).map_err(|e| input("hecke", e));
            let mut body = match method {
                Method::Closed => {
                    let h = closed()?;
                    json!({ "value": cyc(&h.value), "route": format!("{:?}", h.route).to_lowercase() })
                }
                Method::Brute => json!({ "value": cyc(&brute()?) }),
                Method::Both => agree("closed", &closed()?.value, "brute", &brute()?)?,
            };
            body["a1"] = json!(spec.a1);
            body["norm"] = json!(spec.norm.to_string());
            body["det"] = json!(spec.g.det().to_string());
            Ok(body)
        }
    }
}

fn cmd_theta(a: &ThetaArgs) -> Res {
    let g = load_matrix(&a.m.matrix)?;
    let ctx = WeilContext::new(&g).map_err(|e| input("weil", e))?;
    let el = element(&a.element, 1)?;
    let tau = complex(&a.tau)?;
    let z: Vec<Complex64> = match &a.z {
        None => vec![Complex64::new(0.0, 0.0); g.dim()],
        Some(s) => s.split(';').map(complex).collect::<Result<_, _>>()?,
    };
    if z.len() != g.dim() {
        return Err(input("theta", "z must have one entry per coordinate"));
    }
    if a.component >= ctx.size() {
        return Err(input("theta", "component index out of range"));
    }
    let r = theta_transform_residual(&ctx, a.component, el.matrix(), tau, &z, a.radius)
        .map_err(|e| input("theta", e))?;
    let body = json!({
        "lhs": [r.lhs.re, r.lhs.im], "rhs": [r.rhs.re, r.rhs.im],
        "residual": r.residual, "tolerance": a.tolerance, "pass": r.residual < a.tolerance,
    });
    if r.residual < a.tolerance {
        Ok(body)
    } else {
        Err(fault("tolerance", "residual exceeds tolerance", body))
    }
}

fn cmd_verify(a: &VerifyArgs) -> Res {
    let names: Vec<String> = match &a.suite {
        None => SUITES.iter().map(|s| s.to_string()).collect(),
        Some(s) => s.split(',').map(|t| t.trim().to_string()).collect(),
    };
    let mut reports = Vec::new();
    let mut all = true;
    for name in &names {
        let r = run_suite(name, a.seed)
            .ok_or_else(|| input("suite", format!("unknown suite {name:?}; known: {}", SUITES.join(", "))))?;
        all &= r.ok();
        reports.push(r.to_json());
    }
    let body = json!({ "seed": a.seed, "suites": reports, "all_passed": all });
    if all {
        Ok(body)
    } else {
        Err(fault("disagreement", "some verification cases failed", body))
    }
}

fn dispatch(cmd: &Command) -> Res {
    match cmd {
        Command::Gauss(a) => cmd_gauss(a),
        Command::GaussClosed(a) => cmd_gauss_closed(a),
        Command::Milgram(a) => cmd_milgram(a),
        Command::Subsum(a) => cmd_subsum(a),
        Command::DualityCheck(a) => cmd_duality(a),
        Command::Weil(a) => cmd_weil(a),
        Command::Count(a) => cmd_count(a),
        Command::Markoff(a) => cmd_markoff(a),
        Command::Hecke(h) => cmd_hecke(h),
        Command::ThetaCheck(a) => cmd_theta(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// Writes the JSON document to stdout. A closed pipe is not an error.
fn emit(v: &Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(v).expect("serialisable");
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

/// Runs the command line and returns the process exit code.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprintln!("{e}");
            emit(&json!({ "error": "usage", "detail": e.kind().to_string() }));
            return 2;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            emit(&json!({ "error": "threads", "detail": e.to_string() }));
            return 2;
        }
    };
    match pool.install(|| dispatch(&cli.command)) {
        Ok(v) => {
            emit(&v);
            0
        }
        Err(Failure::Input { code, detail }) => {
            eprintln!("error: {detail}");
            emit(&json!({ "error": code, "detail": detail }));
            2
        }
        Err(Failure::Fault { code, detail, body }) => {
            eprintln!("internal fault: {detail}");
            emit(&json!({ "error": code, "detail": detail, "result": body }));
            3
        }
    }
}
