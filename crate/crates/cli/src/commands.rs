//! Argument definitions and handlers for each subcommand.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use gzeta_core::determinant::{
    charpoly_cycle, charpoly_exact, forest_count_bruteforce, forest_count_cycle, regdet,
    regdet_series,
};
use gzeta_core::graph::spectral_moment;
use gzeta_core::ihara::{compare_ihara_functional, ihara_zeta_finite, regularized_ihara};
use gzeta_core::spectral::heat_function;
use gzeta_core::zeta::{
    check_functional_z2, continuation_terms_needed, lattice_rho_coeff, residue_lattice,
    zeta_finite_transitive, zeta_lattice_continuation, zeta_mellin, zeta_z_closed,
    DEFAULT_NODES, DEFAULT_T_MAX,
};
use gzeta_core::{ComplexValue, Error, GraphModel};

use crate::output::{Format, OutputRecord, Value};
use crate::range::{parse_int_range, parse_real_range};
use crate::spec::GraphSpec;
use crate::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "gzeta", version, about = "Spectral zeta functions and determinants of graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads for independent evaluations (default: logical cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral zeta function ζ_G(s).
    Zeta(ZetaArgs),
    /// Heat function H_t at the root.
    Heat(HeatArgs),
    /// Coefficients of det(xI + Δ), constant term first.
    Charpoly(CharpolyArgs),
    /// Rooted spanning forest counts of the n-cycle.
    Forests(ForestArgs),
    /// Regularized determinant det*(x + Δ) or its expansion at infinity.
    Regdet(RegdetArgs),
    /// Ihara zeta function, plain or regularized.
    Ihara(IharaArgs),
    /// Residues of the ℤᵈ zeta function.
    Residue(ResidueArgs),
    /// Exact check of the ℤ² residue and zeta-value identity.
    Funceq(FunceqArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaMode {
    /// exact at non-positive integers, closed form for ℤ and finite graphs,
    /// continuation for ℤᵈ with d >= 2
    Auto,
    Exact,
    Closed,
    Mellin,
    Continuation,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[arg(long)]
    pub graph: String,
    /// Real part of s: a value or start:stop:step.
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// Imaginary part of s, shared by every point.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s_im: f64,
    #[arg(long, value_enum, default_value_t = ZetaMode::Auto)]
    pub mode: ZetaMode,
    /// Mellin: upper end of the time integral.
    #[arg(long, default_value_t = DEFAULT_T_MAX)]
    pub t_max: f64,
    /// Mellin: quadrature nodes.
    #[arg(long, default_value_t = DEFAULT_NODES)]
    pub nodes: usize,
    /// Continuation: strip bound M (Re s < M); default floor(Re s) + 1.
    #[arg(long)]
    pub m: Option<usize>,
    /// Continuation: moment terms N; default is the smallest N meeting the
    /// 1e-10 truncation bound.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct HeatArgs {
    #[arg(long)]
    pub graph: String,
    /// start:stop:step or a single time.
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CharpolyArgs {
    /// Closed form for the n-cycle.
    #[arg(long)]
    pub cycle: Option<usize>,
    /// Exact recurrence for any finite graph.
    #[arg(long)]
    pub graph: Option<String>,
}

#[derive(Debug, Args)]
pub struct ForestArgs {
    #[arg(long)]
    pub n: usize,
    /// Number of trees, a value or a:b; default every k in 1..=n.
    #[arg(long)]
    pub k: Option<String>,
    /// Also count by enumerating edge subsets and report agreement.
    #[arg(long)]
    pub brute: bool,
}

#[derive(Debug, Args)]
pub struct RegdetArgs {
    #[arg(long)]
    pub graph: String,
    /// start:stop:step or a single x > 0.
    #[arg(long, required_unless_present = "series", conflicts_with = "series")]
    pub x: Option<String>,
    /// Number of moments K in the Laurent expansion.
    #[arg(long)]
    pub series: Option<usize>,
}

#[derive(Debug, Args)]
pub struct IharaArgs {
    #[arg(long)]
    pub graph: String,
    /// Real part of u: a value or start:stop:step.
    #[arg(long, allow_hyphen_values = true)]
    pub u: String,
    /// Imaginary part of u (plain Ihara zeta only).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub u_im: f64,
    /// Regularized zeta (y_u det*(x_u + Δ))^{-1}, real u only.
    #[arg(long)]
    pub regularized: bool,
    /// Compare both sides of the functional equation u -> 1/((d-1)u).
    #[arg(long, conflicts_with = "regularized")]
    pub functional: bool,
}

#[derive(Debug, Args)]
pub struct ResidueArgs {
    #[arg(long)]
    pub d: usize,
    /// A value or a:b.
    #[arg(long)]
    pub k: String,
}

#[derive(Debug, Args)]
pub struct FunceqArgs {
    #[arg(long)]
    pub kmax: usize,
}

pub fn run(cli: &Cli) -> CliResult<OutputRecord> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::usage("--jobs must be at least 1"));
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::usage(format!("thread pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Zeta(a) => cmd_zeta(a),
        Command::Heat(a) => cmd_heat(a),
        Command::Charpoly(a) => cmd_charpoly(a),
        Command::Forests(a) => cmd_forests(a),
        Command::Regdet(a) => cmd_regdet(a),
        Command::Ihara(a) => cmd_ihara(a),
        Command::Residue(a) => cmd_residue(a),
        Command::Funceq(a) => cmd_funceq(a),
    })
}

/// Evaluates `f` on every input in parallel; rows keep the input order and
/// the first error (in input order) wins.
fn par_rows<T: Sync, F>(inputs: &[T], f: F) -> CliResult<Vec<Vec<Value>>>
where
    F: Fn(&T) -> CliResult<Vec<Value>> + Sync + Send,
{
    inputs.par_iter().map(f).collect::<Vec<_>>().into_iter().collect()
}

fn model_of(spec: &str) -> CliResult<GraphModel> {
    GraphSpec::parse(spec)?.to_model()
}

fn nonpositive_integer(s: ComplexValue) -> Option<usize> {
    (s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0).then(|| (-s.re) as usize)
}

fn mode_name(mode: ZetaMode) -> &'static str {
    match mode {
        ZetaMode::Auto => "auto",
        ZetaMode::Exact => "exact",
        ZetaMode::Closed => "closed",
        ZetaMode::Mellin => "mellin",
        ZetaMode::Continuation => "continuation",
    }
}

fn resolve_mode(model: &GraphModel, s: ComplexValue, requested: ZetaMode) -> CliResult<ZetaMode> {
    let mode = match requested {
        ZetaMode::Auto if nonpositive_integer(s).is_some() => ZetaMode::Exact,
        ZetaMode::Auto => match model {
            GraphModel::Lattice(d) if *d >= 2 => ZetaMode::Continuation,
            _ => ZetaMode::Closed,
        },
        other => other,
    };
    let compatible = match mode {
        ZetaMode::Exact => nonpositive_integer(s).is_some(),
        ZetaMode::Closed => !matches!(model, GraphModel::Lattice(d) if *d != 1),
        ZetaMode::Mellin | ZetaMode::Continuation => matches!(model, GraphModel::Lattice(_)),
        ZetaMode::Auto => unreachable!(),
    };
    if !compatible {
        let why = match mode {
            ZetaMode::Exact => format!("exact mode needs s to be a non-positive integer, got {s}"),
            ZetaMode::Closed => "closed mode needs zd:1 or a finite graph".into(),
            _ => format!("{} mode needs a lattice zd:<d>", mode_name(mode)),
        };
        return Err(CliError::usage(why));
    }
    Ok(mode)
}

fn cmd_zeta(a: &ZetaArgs) -> CliResult<OutputRecord> {
    let model = model_of(&a.graph)?;
    let points: Vec<ComplexValue> = parse_real_range(&a.s)?
        .into_iter()
        .map(|re| ComplexValue::new(re, a.s_im))
        .collect();
    // reject incompatible modes before any work
    let modes = points
        .iter()
        .map(|&s| resolve_mode(&model, s, a.mode))
        .collect::<CliResult<Vec<_>>>()?;
    let jobs: Vec<(ComplexValue, ZetaMode)> = points.into_iter().zip(modes).collect();
    let mut out = OutputRecord::new(&["s_re", "s_im", "re", "im", "mode", "note"]);
    out.rows = par_rows(&jobs, |&(s, mode)| {
        let head = [Value::Real(s.re), Value::Real(s.im)];
        let tail = [Value::text(mode_name(mode))];
        if mode == ZetaMode::Exact {
            let k = nonpositive_integer(s).expect("checked above");
            let v = spectral_moment(&model, k)?;
            return Ok(row(head, [Value::exact(v), Value::exact(0)], tail, ""));
        }
        let value = match mode {
            ZetaMode::Closed => match &model {
                GraphModel::Lattice(_) => zeta_z_closed(s),
                finite => zeta_finite_transitive(finite, s).map(|z| z.value),
            },
            ZetaMode::Mellin => zeta_mellin(&model, s, a.t_max, a.nodes),
            ZetaMode::Continuation => {
                let GraphModel::Lattice(d) = model else { unreachable!() };
                let m = a.m.unwrap_or_else(|| (s.re.floor() + 1.0).max(1.0) as usize);
                let n = a.n.unwrap_or_else(|| continuation_terms_needed(d, s));
                zeta_lattice_continuation(d, s, m, n)
            }
            ZetaMode::Auto | ZetaMode::Exact => unreachable!(),
        };
        match value {
            Ok(z) => Ok(row(head, [Value::Real(z.re), Value::Real(z.im)], tail, "")),
            Err(Error::Pole { location }) => Ok(row(
                head,
                [Value::Empty, Value::Empty],
                tail,
                &format!("pole at {}", crate::output::format_real(location)),
            )),
            Err(e) => Err(e.into()),
        }
    })?;
    Ok(out)
}

fn row<const A: usize, const B: usize, const C: usize>(
    a: [Value; A],
    b: [Value; B],
    c: [Value; C],
    note: &str,
) -> Vec<Value> {
    let mut v: Vec<Value> = a.into_iter().chain(b).chain(c).collect();
    v.push(if note.is_empty() { Value::Empty } else { Value::text(note) });
    v
}

fn cmd_heat(a: &HeatArgs) -> CliResult<OutputRecord> {
    let model = model_of(&a.graph)?;
    let times = parse_real_range(&a.t)?;
    if let Some(t) = times.iter().find(|&&t| t < 0.0) {
        return Err(CliError::usage(format!("heat needs t >= 0, got {t}")));
    }
    let mut out = OutputRecord::new(&["t", "heat"]);
    out.rows = par_rows(&times, |&t| {
        Ok(vec![Value::Real(t), Value::Real(heat_function(&model, t)?)])
    })?;
    Ok(out)
}

fn cmd_charpoly(a: &CharpolyArgs) -> CliResult<OutputRecord> {
    let poly = match (&a.cycle, &a.graph) {
        (Some(n), _) => charpoly_cycle(*n)?,
        (None, Some(spec)) => charpoly_exact(&model_of(spec)?)?,
        (None, None) => return Err(CliError::usage("give --cycle or --graph")),
    };
    let mut out = OutputRecord::new(&["power", "coefficient"]);
    for (i, c) in poly.coefficients.iter().enumerate() {
        out.push(vec![Value::exact(i), Value::exact(c)]);
    }
    Ok(out)
}

fn cmd_forests(a: &ForestArgs) -> CliResult<OutputRecord> {
    let ks = match &a.k {
        Some(k) => parse_int_range(k)?,
        None => (1..=a.n).collect(),
    };
    let schema: &[&str] = if a.brute {
        &["n", "k", "count", "brute", "match"]
    } else {
        &["n", "k", "count"]
    };
    let mut out = OutputRecord::new(schema);
    let cycle = if a.brute {
        Some(gzeta_core::graph::build_cycle(a.n)?)
    } else {
        None
    };
    out.rows = par_rows(&ks, |&k| {
        let count = forest_count_cycle(a.n, k)?;
        let mut r = vec![Value::exact(a.n), Value::exact(k), Value::exact(&count)];
        if let Some(model) = &cycle {
            let brute = forest_count_bruteforce(model, k)?;
            r.push(Value::Bool(brute == count));
            r.insert(3, Value::exact(brute));
        }
        Ok(r)
    })?;
    Ok(out)
}

fn cmd_regdet(a: &RegdetArgs) -> CliResult<OutputRecord> {
    let model = model_of(&a.graph)?;
    if let Some(k) = a.series {
        let series = regdet_series(&model, k)?;
        let mut out = OutputRecord::new(&["degree", "coefficient"]);
        for (deg, c) in series.terms() {
            out.push(vec![Value::exact(deg), Value::exact(c)]);
        }
        return Ok(out);
    }
    let xs = parse_real_range(a.x.as_deref().expect("clap group"))?;
    let mut out = OutputRecord::new(&["x", "regdet"]);
    out.rows = par_rows(&xs, |&x| Ok(vec![Value::Real(x), Value::Real(regdet(&model, x)?)]))?;
    Ok(out)
}

fn cmd_ihara(a: &IharaArgs) -> CliResult<OutputRecord> {
    let model = model_of(&a.graph)?;
    let us = parse_real_range(&a.u)?;
    if (a.regularized || a.functional) && a.u_im != 0.0 {
        return Err(CliError::usage("the regularized Ihara zeta takes real u only"));
    }
    if a.functional {
        let mut out = OutputRecord::new(&["u", "reflected_u", "lhs", "rhs", "holds"]);
        out.rows = par_rows(&us, |&u| {
            let c = compare_ihara_functional(&model, u)?;
            Ok(vec![
                Value::Real(u),
                Value::Real(c.reflected_u),
                Value::Real(c.lhs),
                Value::Real(c.rhs),
                Value::Bool(c.holds),
            ])
        })?;
        return Ok(out);
    }
    if a.regularized {
        let mut out = OutputRecord::new(&["u", "x_u", "y_u", "value"]);
        out.rows = par_rows(&us, |&u| {
            let r = regularized_ihara(&model, u)?;
            Ok(vec![Value::Real(u), Value::Real(r.x_u), Value::Real(r.y_u), Value::Real(r.value)])
        })?;
        return Ok(out);
    }
    let mut out = OutputRecord::new(&["u_re", "u_im", "re", "im", "note"]);
    out.rows = par_rows(&us, |&re| {
        let u = ComplexValue::new(re, a.u_im);
        let head = [Value::Real(u.re), Value::Real(u.im)];
        match ihara_zeta_finite(&model, u) {
            Ok(p) => Ok(row(head, [Value::Real(p.value.re), Value::Real(p.value.im)], [], "")),
            Err(Error::Pole { .. }) => Ok(row(head, [Value::Empty, Value::Empty], [], "pole")),
            Err(e) => Err(e.into()),
        }
    })?;
    Ok(out)
}

fn cmd_residue(a: &ResidueArgs) -> CliResult<OutputRecord> {
    if a.d == 0 {
        return Err(CliError::usage("--d must be at least 1"));
    }
    let ks = parse_int_range(&a.k)?;
    let mut out = OutputRecord::new(&[
        "d", "k", "pole", "residue", "rho", "rho_rational", "pi_power", "core",
    ]);
    out.rows = par_rows(&ks, |&k| {
        let res = residue_lattice(a.d, k);
        let rho = lattice_rho_coeff(a.d, k);
        Ok(vec![
            Value::exact(a.d),
            Value::exact(k),
            Value::Real(res.pole),
            Value::Real(res.value),
            Value::Real(rho.value),
            Value::exact(&rho.rational),
            Value::exact(rho.pi_power),
            Value::exact(&res.core),
        ])
    })?;
    Ok(out)
}

fn cmd_funceq(a: &FunceqArgs) -> CliResult<OutputRecord> {
    let ks: Vec<usize> = (0..=a.kmax).collect();
    let mut out = OutputRecord::new(&["k", "residue_side", "zeta_side", "holds"]);
    out.rows = par_rows(&ks, |&k| {
        let f = check_functional_z2(k);
        Ok(vec![
            Value::exact(k),
            Value::exact(&f.residue_side),
            Value::exact(&f.zeta_side),
            Value::Bool(f.holds),
        ])
    })?;
    Ok(out)
}
