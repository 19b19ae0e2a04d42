//! `dgal`: exact jet-space calculus and tensor-product Galois theory from
//! the command line. Exit codes: 0 pass, 1 assertion failure, 2 usage or
//! input error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dgal_core::dist::{
    all_brackets_zero, bar_extend_distribution, commutant_search, commutes, is_invariant,
    is_involutive_frobenius, is_tensor_constant, CommutantAnsatz, Involutivity,
};
use dgal_core::fieldops::{
    algebroid_bracket, bracket_vf, flat, prolong_vertical, sharp, spencer, Base, JetSection,
    VectorField,
};
use dgal_core::fileio;
use dgal_core::galois::{
    cubic_discriminant, factor_ext, fmt_poly, generating_invariant_check, split_tensor,
    verify_group, El, FieldH, FiniteRationalGroup, Poly, RatMap,
};
use dgal_core::jets::{normalize_name, parse_jet_expr, total_derivative, JetContext, JetVar};
use dgal_core::mpoly::Var;
use dgal_core::ratfunc::RatFunc;
use dgal_core::scenarios::{list_scenarios, run_property_suites, run_scenario};

#[derive(Parser)]
#[command(name = "dgal", version, about = "exact jet-space differential algebra")]
struct Cli {
    /// Output format for reports and results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Scenario registry: reproducible worked examples.
    Scenario {
        #[command(subcommand)]
        action: ScenarioCmd,
    },
    /// Randomized identity suites with a deterministic seed.
    Props {
        #[arg(long)]
        trials: u32,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Evaluate an expression to canonical form, optionally applying a
    /// formal derivative.
    Eval {
        #[arg(long)]
        expr: String,
        /// Direction for one application of the formal derivative d_i.
        #[arg(long)]
        dx: Option<usize>,
    },
    /// Prolong a field or section to jet order q.
    Prolong {
        #[arg(long)]
        file: String,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum)]
        kind: ProlongKind,
    },
    /// Bracket of two sections (algebroid) or two vector fields.
    Bracket {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        order: Option<u32>,
    },
    /// Spencer image of a section of order q+1.
    Spencer {
        #[arg(long)]
        file: String,
    },
    /// Distribution analysis.
    Dist {
        #[command(subcommand)]
        action: DistCmd,
    },
    /// Field-theoretic computations.
    Galois {
        #[command(subcommand)]
        action: GaloisCmd,
    },
}

#[derive(Subcommand)]
enum ScenarioCmd {
    /// List every registered scenario.
    List,
    /// Run one scenario and print its report.
    Run {
        id: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProlongKind {
    /// Vertical field with coefficients in the order-0 target variables.
    Vertical,
    /// Horizontal field with coefficients in the source variables.
    Horizontal,
    /// Section over the target (sharp).
    Sharp,
    /// Section over the source (flat).
    Flat,
}

#[derive(Subcommand)]
enum DistCmd {
    /// Generic rank and nonzero-minor certificate.
    Rank {
        #[arg(long)]
        dist: String,
    },
    /// Frobenius involutivity over the fraction field.
    Involutive {
        #[arg(long)]
        dist: String,
    },
    /// All pairwise brackets of two distributions.
    Commute {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Degree-bounded commutant basis.
    Commutant {
        #[arg(long)]
        dist: String,
        /// Comma-separated derivative support variables.
        #[arg(long)]
        support: String,
        /// Comma-separated coefficient variables.
        #[arg(long, default_value = "")]
        coeffs: String,
        #[arg(long, default_value_t = 1)]
        degree: u32,
    },
    /// Is the expression a differential invariant?
    Invariant {
        #[arg(long)]
        dist: String,
        #[arg(long)]
        expr: String,
    },
    /// Is the expression a constant of the doubled universe?
    TensorConst {
        #[arg(long)]
        dist: String,
        #[arg(long)]
        expr: String,
        /// Relation file with directed rewritings.
        #[arg(long)]
        relations: Option<String>,
        /// Bar-extend the distribution before checking.
        #[arg(long)]
        extend: bool,
    },
}

#[derive(Subcommand)]
enum GaloisCmd {
    /// Factor a polynomial over Q or over an extension.
    Factor {
        /// Coefficients, lowest degree first, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Extension descriptor file (JSON); the rationals if absent.
        #[arg(long)]
        field: Option<String>,
    },
    /// Split the tensor square of a simple extension of Q.
    Split {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, default_value = "eta")]
        gen: String,
    },
    /// Verify a finite rational group and optionally a generating invariant.
    Group {
        #[arg(long)]
        file: String,
        /// Numerator coefficients of the invariant, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        phi_num: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        phi_den: Option<String>,
    },
    /// Cubic discriminant from the three symmetric functions.
    Disc {
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
        #[arg(long, allow_hyphen_values = true)]
        w3: String,
    },
}

fn fail2(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn parse_vars(list: &str) -> Result<Vec<Var>, String> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| normalize_name(s.trim()).map(|n| Var::new(&n)))
        .collect()
}

fn poly_from_arg(list: &str, field: &FieldH) -> Result<Poly<El>, String> {
    let coeffs: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
    poly_from_list(&coeffs, field)
}

fn poly_from_list(coeffs: &[String], field: &FieldH) -> Result<Poly<El>, String> {
    let values = coeffs
        .iter()
        .map(|s| fileio::parse_rat_coeff(s).map(|r| field.from_rat(r)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok(Poly::new(values))
}

fn load_distribution(path: &str) -> Result<dgal_core::dist::Distribution, String> {
    read_file(path).and_then(|t| fileio::parse_distribution(&t).map_err(|e| e.to_string()))
}

fn section_or_field(path: &str) -> Result<Result<JetSection, VectorField>, String> {
    let text = read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if value.get("components").is_some() {
        fileio::parse_section(&text)
            .map(Ok)
            .map_err(|e| e.to_string())
    } else if value.get("coefficients").is_some() {
        fileio::parse_vector_field(&text)
            .map(Err)
            .map_err(|e| e.to_string())
    } else {
        Err(format!("{path}: neither a section nor a vector field"))
    }
}

fn context_of_expr(f: &RatFunc, dir: usize) -> JetContext {
    let mut n = dir;
    let mut m = 1;
    let mut q = 0;
    for v in f.vars() {
        if let Some(jv) = JetVar::from_var(&v) {
            match &jv {
                JetVar::Source { comp } => n = n.max(*comp),
                JetVar::SourceJet { comp, mu, .. } => {
                    m = m.max(*comp);
                    n = n.max(mu.max_dir().unwrap_or(1));
                    q = q.max(mu.order());
                }
                _ => {}
            }
        }
    }
    JetContext::new(n, m, q + 1)
}

/// Horizontal field `xi^i(x) d_i`: the prolongation is flat of its
/// holonomic section.
fn horizontal_prolong(f: &VectorField, order: u32) -> Result<VectorField, String> {
    let mut ctx = f.ctx;
    ctx.q = order;
    let mut comps = vec![RatFunc::zero(); ctx.n];
    for (v, c) in f.coeffs() {
        match JetVar::from_var(v) {
            Some(JetVar::Source { comp }) => comps[comp - 1] = c.clone(),
            _ => {
                return Err(format!(
                    "horizontal prolongation expects source coefficients, found {}",
                    v.name()
                ))
            }
        }
    }
    let section =
        JetSection::holonomic(Base::Source, order, ctx, &comps).map_err(|e| e.to_string())?;
    flat(&section, order).map_err(|e| e.to_string())
}

fn print_section(s: &JetSection) {
    let mut any = false;
    for ((k, mu), v) in s.components() {
        if !v.is_zero() {
            println!("({k}, {}) = {v}", mu.dirs());
            any = true;
        }
    }
    if !any {
        println!("0");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Scenario { action } => match action {
            ScenarioCmd::List => {
                if json {
                    let rows: Vec<serde_json::Value> = list_scenarios()
                        .into_iter()
                        .map(|(id, anchor, summary)| {
                            serde_json::json!({"id": id, "anchor": anchor, "summary": summary})
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                } else {
                    for (id, anchor, summary) in list_scenarios() {
                        println!("{id:26} {anchor:14} {summary}");
                    }
                }
                ExitCode::SUCCESS
            }
            ScenarioCmd::Run { id, json: json_flag } => match run_scenario(&id) {
                Ok(report) => {
                    if json || json_flag {
                        println!("{}", report.to_json());
                    } else {
                        println!("{report}");
                    }
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail2(e),
            },
        },
        Command::Props { trials, seed } => {
            if trials == 0 {
                return fail2("trials must be at least 1");
            }
            let report = run_property_suites(seed.unwrap_or(cli.seed), trials);
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Eval { expr, dx } => {
            let f = match parse_jet_expr(&expr) {
                Ok(f) => f,
                Err(e) => return fail2(e),
            };
            let out = match dx {
                None => f,
                Some(dir) => {
                    let ctx = context_of_expr(&f, dir);
                    match total_derivative(&f, dir, &ctx) {
                        Ok(d) => d,
                        Err(e) => return fail2(e),
                    }
                }
            };
            if json {
                println!("{}", serde_json::json!({ "result": out.to_string() }));
            } else {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Command::Prolong { file, order, kind } => {
            let text = match read_file(&file) {
                Ok(t) => t,
                Err(e) => return fail2(e),
            };
            let result = match kind {
                ProlongKind::Vertical => match fileio::parse_vector_field(&text) {
                    Ok(f) => {
                        let mut ctx = f.ctx;
                        ctx.q = order;
                        prolong_vertical(&f, order, &ctx).map_err(|e| e.to_string())
                    }
                    Err(e) => Err(e.to_string()),
                },
                ProlongKind::Horizontal => match fileio::parse_vector_field(&text) {
                    Ok(f) => horizontal_prolong(&f, order),
                    Err(e) => Err(e.to_string()),
                },
                ProlongKind::Sharp => match fileio::parse_section(&text) {
                    Ok(s) => sharp(&s, order).map_err(|e| e.to_string()),
                    Err(e) => Err(e.to_string()),
                },
                ProlongKind::Flat => match fileio::parse_section(&text) {
                    Ok(s) => flat(&s, order).map_err(|e| e.to_string()),
                    Err(e) => Err(e.to_string()),
                },
            };
            match result {
                Ok(field) => {
                    if json {
                        println!("{}", fileio::vector_field_to_json(&field));
                    } else {
                        println!("{field}");
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail2(e),
            }
        }
        Command::Bracket { a, b, order } => {
            let _ = order;
            let pa = match section_or_field(&a) {
                Ok(p) => p,
                Err(e) => return fail2(e),
            };
            let pb = match section_or_field(&b) {
                Ok(p) => p,
                Err(e) => return fail2(e),
            };
            match (pa, pb) {
                (Ok(sa), Ok(sb)) => match algebroid_bracket(&sa, &sb, None) {
                    Ok(out) => {
                        if json {
                            println!("{}", fileio::section_to_json(&out));
                        } else {
                            print_section(&out);
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => fail2(e),
                },
                (Err(fa), Err(fb)) => {
                    let out = bracket_vf(&fa, &fb);
                    if json {
                        println!("{}", fileio::vector_field_to_json(&out));
                    } else {
                        println!("{out}");
                    }
                    ExitCode::SUCCESS
                }
                _ => fail2("bracket needs two sections or two vector fields"),
            }
        }
        Command::Spencer { file } => {
            let text = match read_file(&file) {
                Ok(t) => t,
                Err(e) => return fail2(e),
            };
            match fileio::parse_section(&text) {
                Ok(s) => {
                    let image = spencer(&s);
                    if json {
                        let entries: BTreeMap<String, String> = image
                            .entries
                            .iter()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|((k, mu, i), v)| (format!("{k}|{}|{i}", mu.dirs()), v.to_string()))
                            .collect();
                        println!(
                            "{}",
                            serde_json::json!({ "order": image.q, "entries": entries })
                        );
                    } else {
                        let mut any = false;
                        for ((k, mu, i), v) in &image.entries {
                            if !v.is_zero() {
                                println!("({k}, {}; {i}) = {v}", mu.dirs());
                                any = true;
                            }
                        }
                        if !any {
                            println!("0 (holonomic section)");
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail2(e),
            }
        }
        Command::Dist { action } => run_dist(action, json),
        Command::Galois { action } => run_galois(action, json),
    }
}

fn run_dist(action: DistCmd, json: bool) -> ExitCode {
    match action {
        DistCmd::Rank { dist } => {
            let d = match load_distribution(&dist) {
                Ok(d) => d,
                Err(e) => return fail2(e),
            };
            let (rank, cert) = d.rank();
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "rank": rank,
                        "certificate": cert.as_ref().map(|c| c.to_string()),
                    })
                );
            } else {
                match cert {
                    Some(c) => println!("rank {rank}, certificate {c}"),
                    None => println!("rank 0"),
                }
            }
            ExitCode::SUCCESS
        }
        DistCmd::Involutive { dist } => {
            let d = match load_distribution(&dist) {
                Ok(d) => d,
                Err(e) => return fail2(e),
            };
            match is_involutive_frobenius(&d) {
                Involutivity::Involutive => {
                    if json {
                        println!("{}", serde_json::json!({ "involutive": true }));
                    } else {
                        println!("involutive");
                    }
                    ExitCode::SUCCESS
                }
                Involutivity::NotInvolutive { pair, bracket } => {
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "involutive": false,
                                "pair": [pair.0, pair.1],
                                "bracket": bracket.to_string(),
                            })
                        );
                    } else {
                        println!("not involutive: [gen{}, gen{}] = {bracket}", pair.0, pair.1);
                    }
                    ExitCode::from(1)
                }
            }
        }
        DistCmd::Commute { a, b } => {
            let da = match load_distribution(&a) {
                Ok(d) => d,
                Err(e) => return fail2(e),
            };
            let db = match load_distribution(&b) {
                Ok(d) => d,
                Err(e) => return fail2(e),
            };
            let res = commutes(&da, &db);
            let ok = all_brackets_zero(&res);
            if json {
                let residuals: Vec<serde_json::Value> = res
                    .iter()
                    .filter(|(_, f)| !f.is_zero())
                    .map(|((i, j), f)| {
                        serde_json::json!({"pair": [i, j], "bracket": f.to_string()})
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({ "commute": ok, "residuals": residuals })
                );
            } else if ok {
                println!("all {} brackets vanish", res.len());
            } else {
                for ((i, j), f) in res.iter().filter(|(_, f)| !f.is_zero()) {
                    println!("[a{i}, b{j}] = {f}");
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        DistCmd::Commutant {
            dist,
            support,
            coeffs,
            degree,
        } => {
            let d = match load_distribution(&dist) {
                Ok(d) => d,
                Err(e) => return fail2(e),
            };
            let support = match parse_vars(&support) {
                Ok(v) => v,
                Err(e) => return fail2(e),
            };
            let coeff_vars = match parse_vars(&coeffs) {
                Ok(v) => v,
                Err(e) => return fail2(e),
            };
            let ansatz = match CommutantAnsatz::new(support, coeff_vars, degree) {
                Ok(a) => a,
                Err(e) => return fail2(e),
            };
            match commutant_search(&d, &ansatz) {
                Ok(basis) => {
                    if json {
                        let fields: Vec<String> = basis.iter().map(|f| f.to_string()).collect();
                        println!("{}", serde_json::json!({ "basis": fields }));
                    } else if basis.is_empty() {
                        println!("empty basis (ansatz too small)");
                    } else {
                        for f in &basis {
                            println!("{f}");
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail2(e),
            }
        }
        DistCmd::Invariant { dist, expr } => {
            let d = match load_distribution(&dist) {
                Ok(d) => d,
                Err(e) => return fail2(e),
            };
            let phi = match parse_jet_expr(&expr) {
                Ok(f) => f,
                Err(e) => return fail2(e),
            };
            let (ok, residuals) = is_invariant(&d, &phi);
            if json {
                let res: Vec<String> = residuals.iter().map(|r| r.to_string()).collect();
                println!("{}", serde_json::json!({ "invariant": ok, "residuals": res }));
            } else if ok {
                println!("invariant");
            } else {
                for (i, r) in residuals.iter().enumerate() {
                    if !r.is_zero() {
                        println!("gen{i}(phi) = {r}");
                    }
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        DistCmd::TensorConst {
            dist,
            expr,
            relations,
            extend,
        } => {
            let d = match load_distribution(&dist) {
                Ok(d) => d,
                Err(e) => return fail2(e),
            };
            let d = if extend {
                match bar_extend_distribution(&d) {
                    Ok(x) => x,
                    Err(e) => return fail2(e),
                }
            } else {
                d
            };
            let rels = match relations {
                None => Vec::new(),
                Some(path) => match read_file(&path)
                    .and_then(|t| fileio::parse_relations(&t).map_err(|e| e.to_string()))
                {
                    Ok(r) => r,
                    Err(e) => return fail2(e),
                },
            };
            let f = match parse_jet_expr(&expr) {
                Ok(f) => f,
                Err(e) => return fail2(e),
            };
            match is_tensor_constant(&f, &d, &rels) {
                Ok(r) => {
                    if json {
                        let res: Vec<String> = r.residuals.iter().map(|x| x.to_string()).collect();
                        println!(
                            "{}",
                            serde_json::json!({ "constant": r.constant, "residuals": res })
                        );
                    } else if r.constant {
                        println!("constant");
                    } else {
                        for (i, x) in r.residuals.iter().enumerate() {
                            if !x.is_zero() {
                                println!("gen{i}(e) = {x}");
                            }
                        }
                    }
                    if r.constant {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail2(e),
            }
        }
    }
}

fn run_galois(action: GaloisCmd, json: bool) -> ExitCode {
    match action {
        GaloisCmd::Factor { coeffs, field } => {
            let k = match field {
                None => FieldH::Q,
                Some(path) => {
                    let text = match read_file(&path) {
                        Ok(t) => t,
                        Err(e) => return fail2(e),
                    };
                    match serde_json::from_str::<fileio::ExtensionFile>(&text)
                        .map_err(|e| e.to_string())
                        .and_then(|f| fileio::build_extension(&f).map_err(|e| e.to_string()))
                    {
                        Ok(f) => f,
                        Err(e) => return fail2(e),
                    }
                }
            };
            let p = match poly_from_arg(&coeffs, &k) {
                Ok(p) => p,
                Err(e) => return fail2(e),
            };
            match factor_ext(&p, &k) {
                Ok(fac) => {
                    if json {
                        let factors: Vec<serde_json::Value> = fac
                            .factors
                            .iter()
                            .map(|(f, m)| {
                                serde_json::json!({
                                    "factor": fmt_poly(f, "y"),
                                    "multiplicity": m,
                                })
                            })
                            .collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "constant": fac.constant.to_string(),
                                "factors": factors,
                            })
                        );
                    } else {
                        println!("constant: {}", fac.constant);
                        for (f, m) in &fac.factors {
                            if *m == 1 {
                                println!("{}", fmt_poly(f, "y"));
                            } else {
                                println!("({})^{m}", fmt_poly(f, "y"));
                            }
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail2(e),
            }
        }
        GaloisCmd::Split { coeffs, gen } => {
            let p = match poly_from_arg(&coeffs, &FieldH::Q) {
                Ok(p) => p,
                Err(e) => return fail2(e),
            };
            match split_tensor(&FieldH::Q, &p, &gen) {
                Ok(split) => {
                    if json {
                        let factors: Vec<String> =
                            split.factors.iter().map(|f| fmt_poly(f, "ybar")).collect();
                        let isos: Vec<String> = split
                            .isolated_isomorphisms
                            .iter()
                            .map(|e| e.to_string())
                            .collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "galois": split.all_linear(),
                                "factors": factors,
                                "isolated_isomorphisms": isos,
                            })
                        );
                    } else {
                        for f in &split.factors {
                            println!("{}", fmt_poly(f, "ybar"));
                        }
                        for (i, im) in split.isolated_isomorphisms.iter().enumerate() {
                            println!("sigma_{}: {gen} -> {im}", i + 1);
                        }
                        println!(
                            "{}",
                            if split.all_linear() {
                                "galois extension"
                            } else {
                                "not a galois extension"
                            }
                        );
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail2(e),
            }
        }
        GaloisCmd::Group {
            file,
            phi_num,
            phi_den,
        } => {
            let text = match read_file(&file) {
                Ok(t) => t,
                Err(e) => return fail2(e),
            };
            #[derive(serde::Deserialize)]
            struct GroupFile {
                #[serde(default)]
                field: Option<fileio::ExtensionFile>,
                elements: Vec<MapFile>,
            }
            #[derive(serde::Deserialize)]
            struct MapFile {
                num: Vec<String>,
                #[serde(default)]
                den: Option<Vec<String>>,
            }
            let parsed: GroupFile = match serde_json::from_str(&text) {
                Ok(g) => g,
                Err(e) => return fail2(e),
            };
            let field = match &parsed.field {
                None => FieldH::Q,
                Some(ext) => match fileio::build_extension(ext) {
                    Ok(f) => f,
                    Err(e) => return fail2(e),
                },
            };
            let mut elements = Vec::new();
            for m in &parsed.elements {
                let num = match poly_from_list(&m.num, &field) {
                    Ok(p) => p,
                    Err(e) => return fail2(e),
                };
                let den = match &m.den {
                    None => Poly::constant(field.one()),
                    Some(d) => match poly_from_list(d, &field) {
                        Ok(p) => p,
                        Err(e) => return fail2(e),
                    },
                };
                match RatMap::new(&field, num, den) {
                    Ok(r) => elements.push(r),
                    Err(e) => return fail2(e),
                }
            }
            let group = FiniteRationalGroup {
                field: field.clone(),
                elements,
            };
            let report = match verify_group(&group) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            let invariant = match (phi_num, phi_den) {
                (Some(n), d) => {
                    let num = match poly_from_arg(&n, &field) {
                        Ok(p) => p,
                        Err(e) => return fail2(e),
                    };
                    let den = match d {
                        None => Poly::constant(field.one()),
                        Some(dv) => match poly_from_arg(&dv, &field) {
                            Ok(p) => p,
                            Err(e) => return fail2(e),
                        },
                    };
                    let phi = match RatMap::new(&field, num, den) {
                        Ok(p) => p,
                        Err(e) => return fail2(e),
                    };
                    match generating_invariant_check(&group, &phi) {
                        Ok(r) => Some(r),
                        Err(e) => return fail2(e),
                    }
                }
                _ => None,
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "order": report.order,
                        "identity": report.identity_index,
                        "table": report.table,
                        "generating_invariant": invariant.as_ref().map(|r| r.passes()),
                    })
                );
            } else {
                println!("group of order {}", report.order);
                for row in &report.table {
                    println!(
                        "{}",
                        row.iter()
                            .map(|k| k.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
                if let Some(r) = &invariant {
                    println!(
                        "generating invariant: {}",
                        if r.passes() { "pass" } else { "fail" }
                    );
                }
            }
            if invariant.map(|r| r.passes()).unwrap_or(true) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        GaloisCmd::Disc { w1, w2, w3 } => {
            let parse = |s: &str| fileio::parse_rat_coeff(s).map_err(|e| e.to_string());
            let (a, b, c) = match (parse(&w1), parse(&w2), parse(&w3)) {
                (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return fail2(e),
            };
            let d = cubic_discriminant(&a, &b, &c);
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "discriminant": dgal_core::rat::fmt_rat(&d) })
                );
            } else {
                println!("{}", dgal_core::rat::fmt_rat(&d));
            }
            ExitCode::SUCCESS
        }
    }
}
