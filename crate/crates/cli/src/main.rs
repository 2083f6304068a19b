//! `cliffpair`: command line front end for exact Clifford pair computations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliffpair_core::charkit::{character_table, Character, ConjClasses};
use cliffpair_core::cliffordpairs::{
    base_field_check, center_algebra, conjugate_pair, corestrict_pair, cyclic_reduction, field_json, identity_pair,
    induce_pair, pair_on_kernel, product_pair, restrict_pair, semi_invariance, CliffordPair, GaloisActionMap,
};
use cliffpair_core::cohomology::{h2_cyclic, schur_multiplier};
use cliffpair_core::corpus::{self, parse_group, parse_hom};
use cliffpair_core::cyclofield::{Cyclotomic, FieldSpec};
use cliffpair_core::groupkit::{Group, Hom};
use cliffpair_core::grpalg::{idempotent_e, idempotent_e_f};
use cliffpair_core::verify;

#[derive(Parser)]
#[command(name = "cliffpair", version, about = "Exact computations with Clifford pairs of finite groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Character table of a group.
    Chartab { group: String },
    /// Central idempotents e_θ, and e_{θ,F} when a field is given.
    Idempotents {
        group: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Clifford pair operations.
    #[command(subcommand)]
    Pair(PairCmd),
    /// H²(G, Z/m) with trivial action.
    H2 {
        group: String,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Schur multiplier H²(G, C*).
    Multiplier { group: String },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

#[derive(Args, Clone)]
struct PairArgs {
    /// A pair report written by another `pair` command.
    #[arg(long, conflicts_with_all = ["kappa", "theta"])]
    pair: Option<String>,
    /// The surjection κ: Ĝ → G (file or corpus name).
    #[arg(long, required_unless_present = "pair")]
    kappa: Option<String>,
    /// θ on ker κ: `faithful`, `trivial`, a row index of the kernel's table,
    /// or a JSON file `{"values": [..]}` of class values.
    #[arg(long, required_unless_present = "pair")]
    theta: Option<String>,
}

#[derive(Args, Clone)]
struct FieldArg {
    /// Base field: Q, Q(zetaN), Q(sqrt2), Q(sqrt5), Q(i), or JSON
    /// `{"conductor": n, "stabilizer": [..]}`.
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Subcommand)]
enum PairCmd {
    /// Validate a pair and report its basic data.
    Check {
        #[command(flatten)]
        p: PairArgs,
        #[command(flatten)]
        f: FieldArg,
    },
    /// Center algebra data (F(θ), r, stabilizer, action).
    Center {
        #[command(flatten)]
        p: PairArgs,
        #[command(flatten)]
        f: FieldArg,
    },
    /// The conjugate pair (θ̄, κ).
    Conj {
        #[command(flatten)]
        p: PairArgs,
        #[command(flatten)]
        f: FieldArg,
    },
    /// Product of two pairs over the same target.
    Product {
        #[command(flatten)]
        p: PairArgs,
        /// Second pair: report file.
        #[arg(long)]
        pair2: Option<String>,
        #[arg(long, required_unless_present = "pair2")]
        kappa2: Option<String>,
        #[arg(long, required_unless_present = "pair2")]
        theta2: Option<String>,
        #[command(flatten)]
        f: FieldArg,
    },
    /// The pair realizing a Galois action β: G → Gal(E/F).
    Identity {
        /// The group G.
        #[arg(long)]
        group: String,
        /// The field E.
        #[arg(long)]
        ext: String,
        /// Exponents k with β(g) = σ_k, one per element of G.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Vec<i64>,
        /// Order n of the root of unity ε with E ⊆ Q(ε).
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        f: FieldArg,
    },
    /// Replace an abelian kernel by a cyclic one.
    ReduceCyclic {
        #[command(flatten)]
        p: PairArgs,
        #[command(flatten)]
        f: FieldArg,
    },
    /// Pull a pair back along ε: H → G.
    Restrict {
        #[command(flatten)]
        p: PairArgs,
        #[arg(long)]
        eps: String,
        #[command(flatten)]
        f: FieldArg,
    },
    /// Induce a pair over H to G along an injection H → G.
    Induce {
        #[command(flatten)]
        p: PairArgs,
        #[arg(long)]
        into: String,
        #[command(flatten)]
        f: FieldArg,
    },
    /// Corestrict a pair over H to G along an injection H → G.
    Corestrict {
        #[command(flatten)]
        p: PairArgs,
        #[arg(long)]
        into: String,
        /// The field E of the action β.
        #[arg(long)]
        ext: String,
        /// Exponents of β, one per element of G.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Vec<i64>,
        #[command(flatten)]
        f: FieldArg,
    },
    /// Check whether enlarging the base field from F to K keeps the pair's data.
    Fieldcheck {
        #[command(flatten)]
        p: PairArgs,
        #[command(flatten)]
        f: FieldArg,
        /// The larger field K.
        #[arg(long)]
        ext: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] cliffpair_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Core(e) if e.is_input_error() => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

// ---------------------------------------------------------------------------
// Input resolution
// ---------------------------------------------------------------------------

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

/// A file path if it exists, otherwise a corpus name looked up in
/// `$CLIFFPAIR_CORPUS` and then in the bundled corpus.
fn source(arg: &str) -> CliResult<(String, Option<PathBuf>)> {
    let p = Path::new(arg);
    if p.is_file() {
        return Ok((read(p)?, p.parent().map(Path::to_path_buf)));
    }
    let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
    if let Ok(dir) = std::env::var("CLIFFPAIR_CORPUS") {
        let q = Path::new(&dir).join(format!("{stem}.json"));
        if q.is_file() {
            return Ok((read(&q)?, Some(PathBuf::from(dir))));
        }
    }
    corpus::builtin_source(stem)
        .map(|s| (s.to_string(), None))
        .ok_or_else(|| CliError::Input(format!("no file or corpus entry named {arg:?}")))
}

fn load_group(arg: &str) -> CliResult<Arc<Group>> {
    Ok(Arc::new(parse_group(&source(arg)?.0)?))
}

fn load_hom(arg: &str) -> CliResult<Hom> {
    let (text, dir) = source(arg)?;
    let resolve = |name: &str| -> cliffpair_core::Result<Arc<Group>> {
        if let Some(d) = &dir {
            let q = d.join(format!("{name}.json"));
            if let Ok(t) = std::fs::read_to_string(&q) {
                return Ok(Arc::new(parse_group(&t)?));
            }
        }
        match source(name) {
            Ok((t, _)) => Ok(Arc::new(parse_group(&t)?)),
            Err(e) => Err(cliffpair_core::Error::InvalidGroup(e.to_string())),
        }
    };
    Ok(parse_hom(&text, &resolve)?)
}

fn parse_field(s: &str) -> CliResult<FieldSpec> {
    if s.trim_start().starts_with('{') {
        return serde_json::from_str(s).map_err(|e| CliError::Input(format!("bad field {s:?}: {e}")));
    }
    FieldSpec::parse_shorthand(s).map_err(|e| CliError::Input(e.to_string()))
}

fn pick_theta(n: &Arc<Group>, spec: &str) -> cliffpair_core::Result<Character> {
    use cliffpair_core::Error;
    let t = character_table(n)?;
    let irr = t.irreducibles();
    match spec {
        "trivial" => Ok(irr[0].clone()),
        "faithful" => irr
            .iter()
            .find(|c| c.kernel().len() == 1)
            .cloned()
            .ok_or_else(|| Error::Reducible("the kernel has no faithful irreducible character".into())),
        s => {
            if let Ok(i) = s.parse::<usize>() {
                return irr
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidGroup(format!("theta index {i} out of range 0..{}", irr.len())));
            }
            let text = std::fs::read_to_string(s).map_err(|e| Error::InvalidGroup(format!("cannot read theta {s:?}: {e}")))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::InvalidGroup(format!("bad theta file: {e}")))?;
            let vals: Vec<Cyclotomic> = serde_json::from_value(v.get("values").cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::InvalidGroup(format!("bad theta values: {e}")))?;
            Character::new(ConjClasses::new(n), vals)
        }
    }
}

fn load_pair_file(arg: &str) -> CliResult<CliffordPair> {
    let text = read(Path::new(arg))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("bad pair file: {e}")))?;
    let inner = v.get("pair").unwrap_or(&v);
    Ok(CliffordPair::from_json(inner)?)
}

fn load_pair(pair: &Option<String>, kappa: &Option<String>, theta: &Option<String>) -> CliResult<CliffordPair> {
    if let Some(p) = pair {
        return load_pair_file(p);
    }
    let (Some(k), Some(t)) = (kappa, theta) else {
        return Err(CliError::Input("give --pair, or both --kappa and --theta".into()));
    };
    let kappa = load_hom(k)?;
    Ok(pair_on_kernel(&kappa, |n| pick_theta(n, t))?)
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn pair_report(pair: &CliffordPair, f: &FieldSpec) -> CliResult<Value> {
    let center = center_algebra(pair, f)?;
    Ok(json!({
        "order": pair.cover().order(),
        "kernel_order": pair.kernel().order(),
        "center": center.to_json(),
        "pair": pair.to_json(f),
    }))
}

/// The JSON report, whether every check passed, and a custom text rendering.
fn run(cli: &Cli) -> CliResult<(Value, bool, Option<String>)> {
    let ok = |v: Value| Ok((v, true, None));
    match &cli.cmd {
        Cmd::Chartab { group } => ok(serde_json::to_value(character_table(&load_group(group)?)?).unwrap()),
        Cmd::Idempotents { group, field } => {
            let g = load_group(group)?;
            let f = field.as_deref().map(parse_field).transpose()?;
            let t = character_table(&g)?;
            let mut out = Vec::new();
            for (i, chi) in t.irreducibles().iter().enumerate() {
                let mut entry = json!({
                    "index": i,
                    "degree": chi.degree(),
                    "e": idempotent_e(chi)?,
                });
                if let Some(f) = &f {
                    entry["field_of_values"] = field_json(&chi.field_of_values(f));
                    entry["e_F"] = serde_json::to_value(idempotent_e_f(chi, f)?).unwrap();
                }
                out.push(entry);
            }
            ok(json!({ "order": g.order(), "idempotents": out }))
        }
        Cmd::H2 { group, modulus } => ok(serde_json::to_value(h2_cyclic(&*load_group(group)?, *modulus)?).unwrap()),
        Cmd::Multiplier { group } => ok(serde_json::to_value(schur_multiplier(&*load_group(group)?)?).unwrap()),
        Cmd::Verify { suite } => {
            let reports = verify::run(suite).map_err(|e| CliError::Input(e.to_string()))?;
            let passed = reports.iter().all(verify::SuiteReport::passed);
            let text = reports.iter().map(verify::SuiteReport::render_text).collect();
            Ok((serde_json::to_value(&reports).unwrap(), passed, Some(text)))
        }
        Cmd::Pair(p) => ok(run_pair(p)?),
    }
}

fn run_pair(cmd: &PairCmd) -> CliResult<Value> {
    let out = match cmd {
        PairCmd::Check { p, f } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            let f = parse_field(&f.field)?;
            let alpha = semi_invariance(&pair, &f)?;
            json!({
                "valid": true,
                "order": pair.cover().order(),
                "target_order": pair.target().order(),
                "kernel_order": pair.kernel().order(),
                "theta_degree": pair.theta().degree(),
                "field_of_values": field_json(&pair.theta().field_of_values(&f)),
                "semi_invariant": alpha.is_some(),
                "action": alpha.map(|a| serde_json::to_value(a).unwrap()),
            })
        }
        PairCmd::Center { p, f } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            center_algebra(&pair, &parse_field(&f.field)?)?.to_json()
        }
        PairCmd::Conj { p, f } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            pair_report(&conjugate_pair(&pair), &parse_field(&f.field)?)?
        }
        PairCmd::Product { p, pair2, kappa2, theta2, f } => {
            let a = load_pair(&p.pair, &p.kappa, &p.theta)?;
            let b = load_pair(pair2, kappa2, theta2)?;
            let f = parse_field(&f.field)?;
            pair_report(&product_pair(&a, &b, &f)?, &f)?
        }
        PairCmd::Identity { group, ext, beta, n, f } => {
            let g = load_group(group)?;
            let f = parse_field(&f.field)?;
            let e = parse_field(ext)?;
            let beta = GaloisActionMap::from_exponents(&g, &e, &f, beta)?;
            let ip = identity_pair(&beta, *n)?;
            let mut v = pair_report(&ip.pair, &f)?;
            v["module_dimension"] = json!(ip.module.dim());
            v
        }
        PairCmd::ReduceCyclic { p, f } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            let f = parse_field(&f.field)?;
            pair_report(&cyclic_reduction(&pair, &f)?, &f)?
        }
        PairCmd::Restrict { p, eps, f } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            let f = parse_field(&f.field)?;
            let (res, info) = restrict_pair(&pair, &load_hom(eps)?, &f)?;
            let mut v = pair_report(&res, &f)?;
            v["restriction"] = serde_json::to_value(info).unwrap();
            v
        }
        PairCmd::Induce { p, into, f } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            let f = parse_field(&f.field)?;
            pair_report(&induce_pair(&pair, &load_hom(into)?, &f)?, &f)?
        }
        PairCmd::Corestrict { p, into, ext, beta, f } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            let f = parse_field(&f.field)?;
            let h_in = load_hom(into)?;
            let beta = GaloisActionMap::from_exponents(h_in.dst(), &parse_field(ext)?, &f, beta)?;
            let cr = corestrict_pair(&pair, &h_in, &beta, &f)?;
            let mut v = pair_report(&cr.pair, &f)?;
            v["components"] = json!(cr.components.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>());
            v["components_in_orbit"] = json!(cr.in_orbit);
            v
        }
        PairCmd::Fieldcheck { p, f, ext } => {
            let pair = load_pair(&p.pair, &p.kappa, &p.theta)?;
            let report = base_field_check(&pair, &parse_field(&f.field)?, &parse_field(ext)?)?;
            serde_json::to_value(report).unwrap()
        }
    };
    Ok(out)
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Object(o) if o.contains_key("conductor") && o.contains_key("coeffs") => {
            serde_json::from_value::<Cyclotomic>(v.clone()).ok().map(|c| c.to_string())
        }
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}- [{i}]\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn chartab_text(v: &Value) -> String {
    let mut out = String::new();
    let classes = v["classes"].as_array().cloned().unwrap_or_default();
    out.push_str(&format!("order {}\n", v["order"]));
    let heads: Vec<String> = classes
        .iter()
        .map(|c| format!("{}[{}]", c["label"].as_str().unwrap_or("?"), c["size"]))
        .collect();
    out.push_str(&format!("classes: {}\n", heads.join(" | ")));
    for (i, row) in v["rows"].as_array().cloned().unwrap_or_default().iter().enumerate() {
        let vals: Vec<String> = row["values"].as_array().map(|r| r.iter().filter_map(scalar).collect()).unwrap_or_default();
        out.push_str(&format!("chi{i}: {}\n", vals.join(" | ")));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((v, passed, custom)) => {
            let text = match (cli.format, &cli.cmd) {
                (Format::Json, _) => serde_json::to_string_pretty(&v).unwrap() + "\n",
                (Format::Text, _) if custom.is_some() => custom.unwrap(),
                (Format::Text, Cmd::Chartab { .. }) => chartab_text(&v),
                (Format::Text, _) => {
                    let mut s = String::new();
                    render(&v, 0, &mut s);
                    s
                }
            };
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
