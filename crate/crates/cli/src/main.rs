//! Command-line driver: parses jobs from a file or stdin, runs one of the
//! analysis operations on each, and prints json (one object per line) or
//! text blocks in input order.

mod parser;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use serde_json::json;

use freepoly::cyclotomic::{rat, Rat};
use freepoly::invariants::semigroup_representation;
use freepoly::report::{analyze_poly, analyze_root, Analysis};
use freepoly::series::{FracSeries, Precision};
use freepoly::ypoly::SeriesPoly;
use freepoly::{blowup, free_certificate, prepare_shear, qo_root_expand};

use parser::{parse_job, parse_precision, split_jobs, Body, ConeChoice, Job};

#[derive(ClapParser)]
#[command(
    name = "freepoly",
    version,
    about = "invariants of free polynomials over fractional power series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// read jobs from FILE instead of stdin
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// order-weight bound for root expansions, as P or P/Q
    #[arg(long, global = true)]
    precision: Option<String>,

    /// which cone the exponents live in
    #[arg(long, global = true, value_enum, default_value_t = ConeFlag::Orthant)]
    cone: ConeFlag,

    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// worker threads for batch input
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand, Clone, Copy, PartialEq)]
enum Command {
    /// compute the full invariant report for a polynomial or a root series
    Analyze,
    /// shear the variables so the discriminant gains a dominant corner
    Prepare,
    /// apply the standard blowup substitution to a prepared polynomial
    Blowup,
    /// expand one root of a quasi-ordinary polynomial
    RootExpand,
    /// print semigroup generators and decide membership queries
    Semigroup,
    /// characteristic approximate root for a divisor of the degree
    ApproxRoot {
        /// divisor of the degree selecting the root
        #[arg(long)]
        divisor: i64,
    },
    /// report whether the polynomial is free (irreducible with one orbit)
    CertifyFree,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Prepare => "prepare",
            Command::Blowup => "blowup",
            Command::RootExpand => "root-expand",
            Command::Semigroup => "semigroup",
            Command::ApproxRoot { .. } => "approx-root",
            Command::CertifyFree => "certify-free",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum ConeFlag {
    Orthant,
    Blowup,
    Custom,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Format {
    Json,
    Text,
}

enum JobError {
    /// malformed input: exit 2
    Parse(String),
    /// well-formed input outside the math domain: exit 1
    Math(String),
}

impl JobError {
    fn code(&self) -> u8 {
        match self {
            JobError::Parse(_) => 2,
            JobError::Math(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            JobError::Parse(m) | JobError::Math(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let text = match read_input(&cli.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let flag_precision = match cli.precision.as_deref().map(parse_precision).transpose() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: --precision: {}", e);
            return ExitCode::from(2);
        }
    };
    let jobs = split_jobs(&text);
    if jobs.is_empty() {
        eprintln!("error: no input");
        return ExitCode::from(2);
    }

    let opts = RunOpts {
        command: cli.command,
        cone: cli.cone,
        format: cli.format,
        flag_precision,
    };
    let results = run_all(&jobs, &opts, cli.jobs.max(1));

    let mut code = 0u8;
    let batch = jobs.len() > 1;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (i, res) in results.into_iter().enumerate() {
        match res {
            Ok(block) => {
                let sep = if opts.format == Format::Text && i > 0 {
                    "---\n"
                } else {
                    ""
                };
                if let Err(e) = write!(out, "{}{}\n", sep, block) {
                    if e.kind() == std::io::ErrorKind::BrokenPipe {
                        return ExitCode::from(code);
                    }
                    eprintln!("error: cannot write output: {}", e);
                    return ExitCode::from(1);
                }
            }
            Err(e) => {
                if batch {
                    eprintln!("error (job {}): {}", i + 1, e.message());
                } else {
                    eprintln!("error: {}", e.message());
                }
                code = code.max(e.code());
            }
        }
    }
    ExitCode::from(code)
}

struct RunOpts {
    command: Command,
    cone: ConeFlag,
    format: Format,
    flag_precision: Option<Rat>,
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {}", p.display(), e))
        }
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {}", e))?;
            Ok(buf)
        }
    }
}

fn run_all(jobs: &[String], opts: &RunOpts, workers: usize) -> Vec<Result<String, JobError>> {
    let workers = workers.min(jobs.len());
    if workers <= 1 {
        return jobs.iter().map(|j| run_job(j, opts)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<String, JobError>>>> =
        Mutex::new((0..jobs.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() {
                    return;
                }
                let res = run_job(&jobs[i], opts);
                slots.lock().unwrap()[i] = Some(res);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every job slot is filled"))
        .collect()
}

fn run_job(text: &str, opts: &RunOpts) -> Result<String, JobError> {
    let default_cone = match opts.cone {
        ConeFlag::Orthant | ConeFlag::Custom => ConeChoice::Orthant,
        ConeFlag::Blowup => ConeChoice::Blowup,
    };
    let job = parse_job(text, &default_cone).map_err(JobError::Parse)?;
    if opts.cone == ConeFlag::Custom && !job.had_cone_directive {
        return Err(JobError::Parse(
            "--cone custom requires a `cone:` directive in every job".to_string(),
        ));
    }
    let bound = job
        .precision
        .clone()
        .or_else(|| opts.flag_precision.clone())
        .unwrap_or_else(|| default_bound(&job.body));
    match opts.command {
        Command::Analyze => {
            let a = match &job.body {
                Body::Poly(f) => analyze_poly(f, &bound),
                Body::Root(s) => analyze_root(s),
            }
            .map_err(math)?;
            Ok(render_analysis(&a, opts.format))
        }
        Command::Prepare => {
            let f = require_poly(&job, opts.command)?;
            let prep = prepare_shear(f).map_err(math)?;
            Ok(match opts.format {
                Format::Json => json!({
                    "t": prep.t,
                    "lowest_degree": prep.lowest_degree,
                    "epsilon": prep.epsilon.to_string(),
                    "sheared": prep.sheared.to_string(),
                })
                .to_string(),
                Format::Text => format!(
                    "t: {}\nlowest degree: {}\nepsilon: {}\nsheared: {}",
                    prep.t, prep.lowest_degree, prep.epsilon, prep.sheared
                ),
            })
        }
        Command::Blowup => {
            let f = require_poly(&job, opts.command)?;
            let blown = blowup(f).map_err(math)?;
            Ok(match opts.format {
                Format::Json => json!({ "blown": blown.to_string() }).to_string(),
                Format::Text => format!("blown: {}", blown),
            })
        }
        Command::RootExpand => {
            let f = require_poly(&job, opts.command)?;
            let root = qo_root_expand(f, &bound).map_err(math)?;
            Ok(match opts.format {
                Format::Json => json!({
                    "root": root.to_string(),
                    "precision": precision_str(root.precision()),
                })
                .to_string(),
                Format::Text => format!(
                    "root: {}\nprecision: {}",
                    root,
                    precision_str(root.precision())
                ),
            })
        }
        Command::Semigroup => {
            let a = match &job.body {
                Body::Poly(f) => analyze_poly(f, &bound),
                Body::Root(s) => analyze_root(s),
            }
            .map_err(math)?;
            render_semigroup(&a, &job, opts.format)
        }
        Command::ApproxRoot { divisor } => {
            let f = require_poly(&job, opts.command)?;
            let g = f.approximate_root(divisor).map_err(math)?;
            Ok(match opts.format {
                Format::Json => json!({
                    "divisor": divisor,
                    "approximate_root": g.to_string(),
                })
                .to_string(),
                Format::Text => format!("approximate root: {}", g),
            })
        }
        Command::CertifyFree => {
            let f = require_poly(&job, opts.command)?;
            let cert = free_certificate(f, &bound).map_err(math)?;
            let factors: Vec<String> = cert.factors.iter().map(|g| g.to_string()).collect();
            Ok(match opts.format {
                Format::Json => json!({
                    "free": cert.free,
                    "conjugate_count": cert.conjugate_count,
                    "residual_ok": cert.residual_ok,
                    "minpoly_ok": cert.minpoly_ok,
                    "factors": factors,
                })
                .to_string(),
                Format::Text => {
                    let mut out = format!(
                        "free: {}\nconjugate count: {}\nresidual check: {}\nminimal polynomial check: {}",
                        cert.free, cert.conjugate_count, cert.residual_ok, cert.minpoly_ok
                    );
                    for (i, g) in factors.iter().enumerate() {
                        out.push_str(&format!("\nfactor {}: {}", i + 1, g));
                    }
                    out
                }
            })
        }
    }
}

fn math(e: freepoly::Error) -> JobError {
    JobError::Math(e.to_string())
}

fn require_poly<'a>(job: &'a Job, command: Command) -> Result<&'a SeriesPoly, JobError> {
    match &job.body {
        Body::Poly(f) => Ok(f),
        Body::Root(_) => Err(JobError::Parse(format!(
            "{} needs a polynomial input, not a series literal",
            command.name()
        ))),
    }
}

/// Bound used when neither the job nor the flags give one: four times the
/// largest exponent weight in the input, plus a margin for small inputs.
fn default_bound(body: &Body) -> Rat {
    let series: Vec<&FracSeries> = match body {
        Body::Poly(f) => f.coeffs().iter().collect(),
        Body::Root(s) => vec![s],
    };
    let mut max = rat(0, 1);
    for s in &series {
        let order = &s.ctx().order;
        let den = s.denom();
        for (key, _) in s.terms() {
            let w = order.weight_frac(key, den);
            if w > max {
                max = w;
            }
        }
    }
    (max + rat(1, 1)) * rat(4, 1)
}

fn precision_str(p: &Precision) -> String {
    match p {
        Precision::Exact => "exact".to_string(),
        Precision::Below(w) => format!("below {}", w),
    }
}

fn vecs(list: &[Vec<i64>]) -> String {
    list.iter()
        .map(|v| {
            format!(
                "({})",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn frac_vecs(list: &[Vec<String>]) -> String {
    list.iter()
        .map(|v| format!("({})", v.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_analysis(a: &Analysis, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&a.report).expect("report serializes");
            let obj = v.as_object_mut().expect("report is an object");
            obj.insert("root".to_string(), json!(a.root.to_string()));
            obj.insert(
                "root_precision".to_string(),
                json!(precision_str(a.root.precision())),
            );
            obj.insert("minimal".to_string(), json!(a.minimal.to_string()));
            v.to_string()
        }
        Format::Text => {
            let r = &a.report;
            let mut out = String::new();
            out.push_str(&format!("n: {}\n", r.n));
            out.push_str(&format!("e: {}\n", r.e));
            out.push_str(&format!("h: {}\n", r.h));
            out.push_str(&format!("cone: {}\n", vecs(&r.cone)));
            out.push_str(&format!(
                "order: weight ({}), tiebreak {}\n",
                r.order
                    .weight
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                r.order.tiebreak
            ));
            out.push_str(&format!(
                "characteristic exponents: {}\n",
                frac_vecs(&r.characteristic_exponents)
            ));
            out.push_str(&format!(
                "D: {}\n",
                r.d_cap
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            out.push_str(&format!(
                "d: {}\n",
                r.d.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            out.push_str(&format!(
                "e-seq: {}\n",
                r.e_seq
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            out.push_str(&format!("r: {}\n", vecs(&r.r)));
            out.push_str(&format!("generators: {}\n", vecs(&r.generators)));
            out.push_str(&format!(
                "pseudo-root orders: {}\n",
                frac_vecs(&r.pseudo_root_orders)
            ));
            out.push_str(&format!(
                "approx-root orders: {}\n",
                frac_vecs(&r.approx_root_orders)
            ));
            for c in &r.checks {
                out.push_str(&format!(
                    "check {}: {} ({})\n",
                    c.name,
                    if c.pass { "pass" } else { "fail" },
                    c.witness
                ));
            }
            out.push_str(&format!("root: {}\n", a.root));
            out.push_str(&format!(
                "root precision: {}\n",
                precision_str(a.root.precision())
            ));
            out.push_str(&format!("minimal: {}", a.minimal));
            out
        }
    }
}

fn render_semigroup(a: &Analysis, job: &Job, format: Format) -> Result<String, JobError> {
    let cone = &a.root.ctx().cone;
    let dim = a.pack.dim;
    let gens = a.pack.generators();
    let mut members = Vec::new();
    for v in &job.members {
        if v.len() != dim {
            return Err(JobError::Parse(format!(
                "member ({}) has {} coordinates but the semigroup lives in dimension {}",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                v.len(),
                dim
            )));
        }
        members.push((v.clone(), semigroup_representation(&a.pack, cone, v)));
    }
    Ok(match format {
        Format::Json => {
            let member_objs: Vec<serde_json::Value> = members
                .iter()
                .map(|(v, rep)| match rep {
                    Some(d) => json!({
                        "v": v,
                        "member": true,
                        "base": d.base,
                        "beta": d.beta,
                    }),
                    None => json!({ "v": v, "member": false }),
                })
                .collect();
            json!({
                "n": a.pack.n,
                "generators": gens,
                "members": member_objs,
            })
            .to_string()
        }
        Format::Text => {
            let mut out = format!("n: {}\ngenerators: {}", a.pack.n, vecs(&gens));
            for (v, rep) in &members {
                let vtxt = format!(
                    "({})",
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                match rep {
                    Some(d) => out.push_str(&format!(
                        "\nmember {}: yes, base ({}) beta [{}]",
                        vtxt,
                        d.base
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        d.beta
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    )),
                    None => out.push_str(&format!("\nmember {}: no", vtxt)),
                }
            }
            out
        }
    })
}
