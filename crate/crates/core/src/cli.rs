//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::abelian;
use crate::closedforms::{self, Which};
use crate::ideals;
use crate::polynomial::Polynomial;
use crate::poset::{self, format as poset_format, upper_ideal_lattice, Poset};
use crate::rootsystem::{Family, RootSystem, RootSystemType};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}

fn runtime(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "covpoly",
    version,
    about = "Covering polynomials of finite posets, root posets and their ideal lattices",
    after_help = "Simple roots are numbered as in Bourbaki: E_n has the chain 1-3-4-...-n \
                  with 2 attached to 4; B_n has alpha_n short; C_n has alpha_n long; \
                  F4 has alpha_1, alpha_2 long; G2 has alpha_1 short."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print covering polynomials of a root poset, an ideal poset or a poset file.
    Polynomial(PolynomialArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List the ideals of AD, AD0 or Ab, one record per ideal.
    Enumerate(EnumerateArgs),
    /// Print the tables and diagnostic values.
    Report(ReportArgs),
    /// Write a root poset or an ideal poset in the poset file format.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    PositiveRoots,
    Ad,
    Ad0,
    Ab,
    Custom,
}

impl Object {
    fn name(self) -> &'static str {
        match self {
            Object::PositiveRoots => "positive-roots",
            Object::Ad => "ad",
            Object::Ad0 => "ad0",
            Object::Ab => "ab",
            Object::Custom => "custom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    Upper,
    Lower,
    Deviation,
    All,
}

impl WhichArg {
    fn selected(self) -> Vec<Which> {
        match self {
            WhichArg::Upper => vec![Which::Upper],
            WhichArg::Lower => vec![Which::Lower],
            WhichArg::Deviation => vec![Which::Deviation],
            WhichArg::All => vec![Which::Upper, Which::Lower, Which::Deviation],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn parse_type(s: &str) -> Result<RootSystemType, String> {
    s.parse()
        .map_err(|e: crate::rootsystem::RootSystemError| e.to_string())
}

#[derive(Debug, Args)]
pub struct PolynomialArgs {
    /// Root system type such as A5, BC3 or E8.
    #[arg(long = "type", value_parser = parse_type, required_unless_present = "poset", conflicts_with = "poset")]
    pub root_type: Option<RootSystemType>,
    /// Poset file in the exchange format.
    #[arg(long)]
    pub poset: Option<PathBuf>,
    /// Defaults to positive-roots with --type and custom with --poset.
    #[arg(long, value_enum)]
    pub object: Option<Object>,
    #[arg(long, value_enum, default_value = "all")]
    pub which: WhichArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of table1, table2, table3, identities, conjectures.
    pub suite: Suite,
    #[arg(long, default_value_t = 8)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long = "type", value_parser = parse_type)]
    pub root_type: RootSystemType,
    #[arg(long, value_enum)]
    pub object: Object,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Maximum number of ideals to enumerate.
    #[arg(long, default_value_t = poset::DEFAULT_IDEAL_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value_t = 8)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Also print the extrapolated E9 upper polynomial.
    #[arg(long)]
    pub speculative: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long = "type", value_parser = parse_type)]
    pub root_type: RootSystemType,
    #[arg(long, value_enum, default_value = "positive-roots")]
    pub object: Object,
    #[arg(long, default_value_t = poset::DEFAULT_IDEAL_BUDGET)]
    pub budget: usize,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Clap errors are printed by clap itself.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Polynomial(args) => cmd_polynomial(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Enumerate(args) => cmd_enumerate(args, out),
        Command::Report(args) => cmd_report(args, out),
        Command::Export(args) => cmd_export(args, out),
    }
}

fn build(ty: RootSystemType) -> Result<RootSystem, CliError> {
    RootSystem::build(ty).map_err(|e| CliError::Usage(e.to_string()))
}

/// Upper and lower covering polynomials of the requested object.
pub fn covering_pair(
    rs: &RootSystem,
    object: Object,
) -> Result<(Polynomial, Polynomial), CliError> {
    match object {
        Object::PositiveRoots => {
            let p = rs.root_poset();
            Ok((p.upper_covering_polynomial(), p.lower_covering_polynomial()))
        }
        Object::Ad => {
            let p = ideals::ad_polynomial(rs);
            Ok((p.clone(), p))
        }
        Object::Ad0 => {
            let p = ideals::ad0_polynomial(rs).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok((p.clone(), p))
        }
        Object::Ab => {
            let report = abelian::enumerate_minuscule(rs).map_err(|e| match e {
                abelian::AbelianError::NotReduced(_) => CliError::Usage(e.to_string()),
                other => runtime(other),
            })?;
            let (up, low, _) = abelian::ab_covering_polynomials(&report).map_err(runtime)?;
            Ok((up, low))
        }
        Object::Custom => Err(CliError::Usage("object `custom` needs --poset".into())),
    }
}

fn type_latex(ty: &RootSystemType) -> String {
    format!("{}_{{{}}}", ty.family, ty.rank)
}

fn cmd_polynomial(args: &PolynomialArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (name, latex_name, object, up, low) = match (&args.root_type, &args.poset) {
        (Some(ty), _) => {
            let object = args.object.unwrap_or(Object::PositiveRoots);
            let rs = build(*ty)?;
            let (up, low) = covering_pair(&rs, object)?;
            (ty.to_string(), type_latex(ty), object, up, low)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let ground = poset_format::parse(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let object = args.object.unwrap_or(Object::Custom);
            let (up, low) = match object {
                Object::Custom => (
                    ground.upper_covering_polynomial(),
                    ground.lower_covering_polynomial(),
                ),
                Object::Ad => {
                    let p = ground.antichain_polynomial();
                    (p.clone(), p)
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "object `{}` needs --type",
                        other.name()
                    )))
                }
            };
            let name = path.display().to_string();
            (name.clone(), name, object, up, low)
        }
        (None, None) => {
            return Err(CliError::Usage(
                "one of --type or --poset is required".into(),
            ))
        }
    };
    let deviation = (&up - &low)
        .divide_by_q_minus_one_squared()
        .map_err(|e| runtime(format!("covering polynomials disagree at 1: {e}")))?;
    let pick = |w: Which| match w {
        Which::Upper => &up,
        Which::Lower => &low,
        Which::Deviation => &deviation,
    };
    let selected = args.which.selected();

    match args.format {
        Format::Json => {
            let mut record = serde_json::Map::new();
            record.insert("type".into(), json!(name));
            record.insert("object".into(), json!(object.name()));
            for w in &selected {
                record.insert(w.to_string(), json!(pick(*w).coeffs()));
            }
            writeln!(out, "{}", serde_json::Value::Object(record))?;
        }
        Format::Latex => {
            let cells: Vec<String> = selected
                .iter()
                .map(|w| format!("${}$", pick(*w).to_latex()))
                .collect();
            writeln!(out, "${latex_name}$ & {} \\\\", cells.join(" & "))?;
        }
        Format::Text => {
            writeln!(out, "{name} {}", object.name())?;
            for w in &selected {
                let p = pick(*w);
                writeln!(
                    out,
                    "{:<10} {p}    (at 1: {}, derivative at 1: {})",
                    format!("{w}:"),
                    p.evaluate(1),
                    p.derivative_at_one()
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = verify::run(args.suite, args.max_rank);
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report).map_err(runtime)?)?,
        _ => {
            for c in &report.checks {
                let tag = match (c.passed, c.report_only) {
                    (true, false) => "PASS",
                    (false, false) => "FAIL",
                    (true, true) => "NOTE ok",
                    (false, true) => "NOTE miss",
                };
                writeln!(out, "{tag:<9} {}: {}", c.name, c.detail)?;
            }
            let failed = report.failures().count();
            writeln!(
                out,
                "{}: {} checks, {} failed",
                args.suite,
                report.checks.len(),
                failed
            )?;
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn root_coords(
    rs: &RootSystem,
    offset: usize,
    members: impl Iterator<Item = usize>,
) -> Vec<Vec<i64>> {
    members
        .map(|x| rs.roots()[x + offset].coords.clone())
        .collect()
}

fn render_roots(roots: &[Vec<i64>]) -> String {
    let parts: Vec<String> = roots
        .iter()
        .map(|c| crate::rootsystem::Root { coords: c.clone() }.label())
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rs = build(args.root_type)?;
    match args.object {
        Object::Ad | Object::Ad0 => {
            let (ground, offset) = if args.object == Object::Ad {
                (rs.root_poset().clone(), 0)
            } else {
                if rs.rank() < 2 {
                    return Err(CliError::Usage(format!(
                        "{} has no non-simple roots",
                        rs.root_type()
                    )));
                }
                (rs.without_simples(), rs.rank())
            };
            let lattice = upper_ideal_lattice(&ground, args.budget).map_err(runtime)?;
            for (i, ideal) in lattice.ideals().iter().enumerate() {
                let roots = root_coords(&rs, offset, ideal.iter());
                let (kappa, iota) = (lattice.kappa()[i], lattice.iota()[i]);
                match args.format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({"index": i, "roots": roots, "kappa": kappa, "iota": iota})
                    )?,
                    _ => writeln!(
                        out,
                        "{i}\t{}\tkappa={kappa}\tiota={iota}",
                        render_roots(&roots)
                    )?,
                }
            }
        }
        Object::Ab => {
            let report =
                abelian::enumerate_minuscule(&rs).map_err(|e| CliError::Usage(e.to_string()))?;
            let stats = report.poset.covering_stats();
            for (i, state) in report.states.iter().enumerate() {
                let roots = root_coords(&rs, 0, state.ideal.iter());
                let tau = report.tau[i].map(|t| rs.roots()[t].coords.clone());
                let (kappa, iota) = (stats.kappa[i], stats.iota[i]);
                match args.format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({
                            "index": i,
                            "roots": roots,
                            "kappa": kappa,
                            "iota": iota,
                            "shift": state.shift,
                            "tau": tau,
                            "word": state.word,
                        })
                    )?,
                    _ => {
                        let tau = tau
                            .map(|c| crate::rootsystem::Root { coords: c }.label())
                            .unwrap_or_else(|| "-".into());
                        let word: Vec<String> = state.word.iter().map(|j| j.to_string()).collect();
                        writeln!(
                            out,
                            "{i}\t{}\tkappa={kappa}\tiota={iota}\tshift={:?}\ttau={tau}\tword=[{}]",
                            render_roots(&roots),
                            state.shift,
                            word.join(" ")
                        )?
                    }
                }
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "enumerate supports ad, ad0 and ab, not {}",
                other.name()
            )))
        }
    }
    Ok(EXIT_OK)
}

fn table_row(
    format: Format,
    ty: &RootSystemType,
    cells: &[Polynomial],
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Latex => {
            let cells: Vec<String> = cells
                .iter()
                .map(|p| format!("${}$", p.to_latex()))
                .collect();
            writeln!(out, "${}$ & {} \\\\", type_latex(ty), cells.join(" & "))?;
        }
        _ => {
            let cells: Vec<String> = cells.iter().map(|p| p.to_string()).collect();
            writeln!(out, "{:<5} {}", ty.to_string(), cells.join("  |  "))?;
        }
    }
    Ok(())
}

/// Columns are `(plain, latex)` header pairs.
fn table_open(
    format: Format,
    title: &str,
    columns: &[(&str, &str)],
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Latex => {
            writeln!(out, "% {title}")?;
            writeln!(out, "\\begin{{tabular}}{{l{}}}", "l".repeat(columns.len()))?;
            let heads: Vec<&str> = columns.iter().map(|c| c.1).collect();
            writeln!(out, "$\\Delta$ & {} \\\\ \\hline", heads.join(" & "))?;
        }
        _ => {
            writeln!(out, "{title}")?;
            let heads: Vec<&str> = columns.iter().map(|c| c.0).collect();
            writeln!(out, "type  {}", heads.join("  |  "))?;
        }
    }
    Ok(())
}

fn table_close(format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    if format == Format::Latex {
        writeln!(out, "\\end{{tabular}}")?;
    }
    writeln!(out)?;
    Ok(())
}

fn cmd_report(args: &ReportArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = if args.format == Format::Json {
        Format::Text
    } else {
        args.format
    };
    let comment = if format == Format::Latex { "% " } else { "" };
    let reduced = RootSystemType::all_reduced(args.max_rank);

    table_open(
        format,
        "Covering polynomials of positive roots",
        &[("upper", "$K^{up}$"), ("lower", "$K^{low}$")],
        out,
    )?;
    for ty in verify::table1_types(args.max_rank) {
        let rs = build(ty)?;
        let p = rs.root_poset();
        table_row(
            format,
            &ty,
            &[p.upper_covering_polynomial(), p.lower_covering_polynomial()],
            out,
        )?;
    }
    table_close(format, out)?;

    table_open(
        format,
        "Strictly positive ad-nilpotent ideals",
        &[("ideals by generators", "$K_{AD_0}$")],
        out,
    )?;
    for &ty in &reduced {
        if ty.rank >= 2 {
            let rs = build(ty)?;
            table_row(
                format,
                &ty,
                &[ideals::ad0_polynomial(&rs).map_err(runtime)?],
                out,
            )?;
        }
    }
    table_close(format, out)?;

    table_open(
        format,
        "Abelian ideals",
        &[
            ("upper", "$K^{up}$"),
            ("lower", "$K^{low}$"),
            ("deviation", "$\\mathcal D$"),
        ],
        out,
    )?;
    let mut deltas = Vec::new();
    for &ty in &reduced {
        let rs = build(ty)?;
        let report = abelian::enumerate_minuscule(&rs).map_err(runtime)?;
        let (up, low, dev) = abelian::ab_covering_polynomials(&report).map_err(runtime)?;
        deltas.push(format!("{ty}={}", -dev.evaluate(1)));
        table_row(format, &ty, &[up, low, dev], out)?;
    }
    table_close(format, out)?;

    writeln!(out, "{comment}Values at q = -1 (upper, lower)")?;
    for &ty in &reduced {
        let rs = build(ty)?;
        let values: Vec<String> = closedforms::q_minus_one_report(&rs)
            .iter()
            .map(|v| format!("{} ({}, {})", v.object, v.upper, v.lower))
            .collect();
        writeln!(out, "{comment}{ty}: {}", values.join("; "))?;
    }
    writeln!(out)?;

    writeln!(out, "{comment}-Delta_Ab(1)")?;
    writeln!(out, "{comment}{}", deltas.join(" "))?;
    writeln!(out)?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let search = closedforms::truncation_conjecture_search(&mut rng, 200, 8);
    writeln!(
        out,
        "{comment}Truncated ideal lattices: {} posets, {} truncations, {} with a positive deviation coefficient",
        search.posets_checked,
        search.truncations_checked,
        search.witnesses.len()
    )?;
    for n in 4..=args.max_rank.min(7) {
        let rs = build(RootSystemType {
            family: Family::D,
            rank: n,
        })?;
        let got = ideals::ad0_polynomial(&rs).map_err(runtime)?;
        let formula = ideals::ad0_dn_conjecture(n as i64)
            .map(|p| p.to_string())
            .unwrap_or_else(|e| e.to_string());
        writeln!(
            out,
            "{comment}D{n} AD0: enumerated {got}; formula {formula}"
        )?;
    }
    if args.speculative {
        writeln!(
            out,
            "{comment}E9 (extrapolated upper Ab polynomial, no known meaning): {}",
            closedforms::speculative_e9_upper()
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_export(args: &ExportArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rs = build(args.root_type)?;
    let exported: Poset = match args.object {
        Object::PositiveRoots => rs.root_poset().clone(),
        Object::Ad => upper_ideal_lattice(rs.root_poset(), args.budget)
            .map_err(runtime)?
            .to_poset(),
        Object::Ad0 => {
            if rs.rank() < 2 {
                return Err(CliError::Usage(format!(
                    "{} has no non-simple roots",
                    rs.root_type()
                )));
            }
            upper_ideal_lattice(&rs.without_simples(), args.budget)
                .map_err(runtime)?
                .to_poset()
        }
        Object::Ab => {
            abelian::enumerate_minuscule(&rs)
                .map_err(|e| CliError::Usage(e.to_string()))?
                .poset
        }
        Object::Custom => return Err(CliError::Usage("export needs a root system object".into())),
    };
    out.write_all(poset_format::write(&exported).as_bytes())?;
    Ok(EXIT_OK)
}
