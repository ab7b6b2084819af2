//! Command-line front end.
//!
//! Exit codes: 0 when everything holds, 1 when an identity or check is
//! violated, 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::mpsc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactnum::Spin;
use crate::identities::{
    be_check, check_instance, grid_instances, orthogonality_check, pachner_14_check, pachner_23_check, BEInstance,
    BeForm, ExactCheckResult, GridKind, GridRecord, GridSummary,
};
use crate::projective::{
    build_desargues, build_quadrangle, cross_section, cross_section_planes, isomorphic, plane_dual,
    space_dual_desargues_with_tips, DotMode, IncidenceStructure, SimplicialComplex4,
};
use crate::spinnet::{
    network_amplitude, regularized_enumeration, transfer_labeling, DesarguesSpinLabeling, LabelingFile, Symbol,
    SymbolSpins,
};
use crate::symmetry::{canonicalize_quadruple, classical_orbit, regularization_bounds, running_range, symmetry_orbit};
use crate::wigner::{sixj_value, SixJ, SixJCache};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `--max-twice` accepted by grid verification unless raised.
pub const DEFAULT_CEILING: u32 = 6;

#[derive(Debug, Parser)]
#[command(name = "spinnet", version, about = "Exact 6j symbols, their identities and the Desargues spin network")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Read spin arguments as twice-values (`3` means 3/2).
    #[arg(long, global = true)]
    pub twice: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact value of {a b x; c d y}.
    Sixj {
        #[arg(num_args = 6, value_names = ["A", "B", "X", "C", "D", "Y"])]
        spins: Vec<String>,
    },
    /// All symbols related to {a b x; c d y} by the 144 symmetries.
    Orbit {
        #[arg(num_args = 6, value_names = ["A", "B", "X", "C", "D", "Y"])]
        spins: Vec<String>,
        /// Only the 24 tetrahedral symmetries.
        #[arg(long)]
        classical: bool,
    },
    /// Orthogonality for one (a b c d y y') or a whole grid.
    VerifyOrth {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(value_names = ["A", "B", "C", "D", "Y", "Y_PRIME"])]
        spins: Vec<String>,
    },
    /// Biedenharn-Elliott identity for one (a b c d e f p q r) or a whole grid.
    VerifyBe {
        #[command(flatten)]
        grid: GridArgs,
        /// Drop the (2x+1) weight from the sum.
        #[arg(long)]
        literal_paper_form: bool,
        #[arg(value_names = ["A", "B", "C", "D", "E", "F", "P", "Q", "R"])]
        spins: Vec<String>,
    },
    /// Pachner 2-3 or 1-4 move for one (a b c d e f p q r) or a whole grid.
    VerifyPachner {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long = "move", value_enum, default_value_t = PachnerMove::TwoThree)]
        pachner_move: PachnerMove,
        /// The primed spin of the 1-4 move; defaults to p.
        #[arg(long)]
        p_prime: Option<String>,
        #[arg(value_names = ["A", "B", "C", "D", "E", "F", "P", "Q", "R"])]
        spins: Vec<String>,
    },
    /// The Desargues (10_3) configuration.
    BuildDesargues {
        #[arg(long)]
        clique: bool,
    },
    /// The 4-simplex dual in space to the Desargues configuration.
    SpaceDual {
        #[command(flatten)]
        tips: TipArgs,
    },
    /// The cross section of the space dual 4-simplex.
    CrossSection {
        #[command(flatten)]
        tips: TipArgs,
        #[arg(long)]
        clique: bool,
    },
    /// Check a labeling file on the configuration and on the 4-simplex.
    Label { file: PathBuf },
    /// The five-symbol amplitude of a labeling file.
    Amplitude { file: PathBuf },
    /// Canonical form, running range and regularization bounds of a
    /// reference quadrangle (a b c d).
    Regularize {
        #[arg(num_args = 4, value_names = ["A", "B", "C", "D"])]
        spins: Vec<String>,
        /// Fix e, f, p, q, r (as `e=1,f=1,p=1,q=1,r=1`) and enumerate x.
        #[arg(long)]
        others: Option<String>,
    },
    /// Write one of the fixed structures as JSON or DOT.
    Export {
        #[arg(value_enum)]
        target: ExportTarget,
        #[arg(long)]
        clique: bool,
        #[command(flatten)]
        tips: TipArgs,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Check every valid instance up to --max-twice.
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 2)]
    pub max_twice: u32,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    pub ceiling: u32,
    /// Emit records in grid order instead of completion order.
    #[arg(long)]
    pub sorted: bool,
}

#[derive(Debug, Args)]
pub struct TipArgs {
    /// The two quadrangles used as tips of the dual trihedra.
    #[arg(long, num_args = 2, value_names = ["I", "J"], default_values_t = [1u8, 5u8])]
    pub tips: Vec<u8>,
}

impl TipArgs {
    fn pair(&self) -> (u8, u8) {
        (self.tips[0], self.tips[1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PachnerMove {
    #[value(name = "2-3")]
    TwoThree,
    #[value(name = "1-4")]
    OneFour,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportTarget {
    Quadrangle,
    Quadrilateral,
    Desargues,
    SpaceDual,
    CrossSection,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Usage errors go to `err`.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &config.output {
        Some(path) => fs::File::create(path)
            .map_err(Error::from)
            .and_then(|mut f| run_to(&config, &mut f)),
        None => run_to(&config, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs a parsed command, writing its output to `out`.
pub fn run_to(config: &CliConfig, out: &mut dyn Write) -> Result<i32> {
    let ctx = Ctx { twice: config.twice, format: config.format };
    match &config.command {
        Command::Sixj { spins } => ctx.sixj(spins, out),
        Command::Orbit { spins, classical } => ctx.orbit(spins, *classical, out),
        Command::VerifyOrth { grid, spins } => ctx.verify_orth(grid, spins, out),
        Command::VerifyBe { grid, literal_paper_form, spins } => {
            let form = if *literal_paper_form { BeForm::LiteralPaper } else { BeForm::Standard };
            ctx.verify_be(grid, form, spins, out)
        }
        Command::VerifyPachner { grid, pachner_move, p_prime, spins } => {
            ctx.verify_pachner(grid, *pachner_move, p_prime.as_deref(), spins, out)
        }
        Command::BuildDesargues { clique } => ctx.structure(&build_desargues(), *clique, out),
        Command::SpaceDual { tips } => ctx.space_dual(tips.pair(), out),
        Command::CrossSection { tips, clique } => ctx.cross_section(tips.pair(), *clique, out),
        Command::Label { file } => ctx.label(file, out),
        Command::Amplitude { file } => ctx.amplitude(file, out),
        Command::Regularize { spins, others } => ctx.regularize(spins, others.as_deref(), out),
        Command::Export { target, clique, tips } => ctx.export(*target, *clique, tips.pair(), out),
    }
}

/// Checks every valid instance of `which` with twice-spins up to `max_twice`,
/// handing each record to `sink`. Records arrive in grid order when `sorted`
/// and in completion order otherwise; the summary is the same either way.
pub fn verify_grid(
    max_twice: u32,
    which: GridKind,
    ceiling: u32,
    sorted: bool,
    sink: &mut dyn FnMut(&GridRecord) -> Result<()>,
) -> Result<GridSummary> {
    if max_twice > ceiling {
        return Err(Error::CeilingExceeded { requested: max_twice, ceiling });
    }
    let instances = grid_instances(which, max_twice);
    let mut summary = GridSummary::default();
    if sorted {
        let records = instances
            .par_iter()
            .map_init(SixJCache::new, |cache, inst| check_instance(which, inst, cache))
            .collect::<Result<Vec<_>>>()?;
        for r in &records {
            summary.add(r);
            sink(r)?;
        }
        return Ok(summary);
    }
    let (tx, rx) = mpsc::channel::<Result<GridRecord>>();
    std::thread::scope(|scope| {
        scope.spawn(move || {
            instances.par_iter().for_each_init(
                || (SixJCache::new(), tx.clone()),
                |(cache, tx), inst| {
                    let _ = tx.send(check_instance(which, inst, cache));
                },
            );
        });
        for record in rx {
            let record = record?;
            summary.add(&record);
            sink(&record)?;
        }
        Ok(summary)
    })
}

struct Ctx {
    twice: bool,
    format: Format,
}

fn write_line(out: &mut dyn Write, line: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", line.as_ref())?;
    Ok(())
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<()> {
    write_line(out, serde_json::to_string(value).expect("value serializes"))
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse { what: "arguments", input: msg.into() }
}

fn read_labeling(file: &PathBuf) -> Result<SymbolSpins> {
    let text = fs::read_to_string(file)?;
    let parsed: LabelingFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse { what: "labeling file", input: e.to_string() })?;
    Ok(parsed.symbol_spins)
}

impl Ctx {
    fn spins<const N: usize>(&self, raw: &[String]) -> Result<[Spin; N]> {
        if raw.len() != N {
            return Err(usage(format!("expected {N} spins, got {}", raw.len())));
        }
        let parsed = raw.iter().map(|s| Spin::parse_with_mode(s, self.twice)).collect::<Result<Vec<_>>>()?;
        Ok(parsed.try_into().expect("length checked"))
    }

    fn symbol(&self, raw: &[String]) -> Result<SixJ> {
        let [a, b, x, c, d, y] = self.spins::<6>(raw)?;
        Ok(SixJ::new(a, b, x, c, d, y))
    }

    fn sixj(&self, raw: &[String], out: &mut dyn Write) -> Result<i32> {
        let s = self.symbol(raw)?;
        let value = sixj_value(&s)?;
        match self.format {
            Format::Json => json_line(out, &json!({ "symbol": s.to_string(), "value": value }))?,
            _ => write_line(out, value.to_string())?,
        }
        Ok(EXIT_OK)
    }

    fn orbit(&self, raw: &[String], classical: bool, out: &mut dyn Write) -> Result<i32> {
        let s = self.symbol(raw)?;
        let orbit = if classical { classical_orbit(&s) } else { symmetry_orbit(&s) };
        let names: Vec<String> = orbit.iter().map(ToString::to_string).collect();
        match self.format {
            Format::Json => json_line(out, &json!({ "symbol": s.to_string(), "size": names.len(), "orbit": names }))?,
            _ => {
                write_line(out, format!("orbit of {s}: {} symbols", names.len()))?;
                for n in names {
                    write_line(out, n)?;
                }
            }
        }
        Ok(EXIT_OK)
    }

    fn single(&self, res: &ExactCheckResult, instance: serde_json::Value, out: &mut dyn Write) -> Result<i32> {
        match self.format {
            Format::Json => json_line(
                out,
                &GridRecord {
                    instance,
                    lhs: res.lhs.clone(),
                    rhs: res.rhs.clone(),
                    equal: res.equal,
                    form: res.form.clone(),
                },
            )?,
            _ => {
                write_line(out, format!("lhs = {}", res.lhs))?;
                write_line(out, format!("rhs = {}", res.rhs))?;
                write_line(out, if res.equal { "holds" } else { "violated" })?;
            }
        }
        Ok(if res.equal { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn grid(&self, grid: &GridArgs, which: GridKind, out: &mut dyn Write) -> Result<i32> {
        let json = self.format == Format::Json;
        let summary = verify_grid(grid.max_twice, which, grid.ceiling, grid.sorted, &mut |r| {
            if json {
                json_line(out, r)?;
            }
            Ok(())
        })?;
        if json {
            json_line(out, &json!({ "summary": summary }))?;
        } else {
            write_line(out, summary.to_string())?;
        }
        Ok(if summary.failures == 0 { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn nine(&self, raw: &[String]) -> Result<BEInstance> {
        let [a, b, c, d, e, f, p, q, r] = self.spins::<9>(raw)?;
        Ok(BEInstance { a, b, c, d, e, f, p, q, r })
    }

    fn check_grid_or_single(&self, grid: &GridArgs, raw: &[String]) -> Result<()> {
        if grid.all && !raw.is_empty() {
            return Err(usage("--all takes no spin arguments"));
        }
        Ok(())
    }

    fn verify_orth(&self, grid: &GridArgs, raw: &[String], out: &mut dyn Write) -> Result<i32> {
        self.check_grid_or_single(grid, raw)?;
        if grid.all {
            return self.grid(grid, GridKind::Orthogonality, out);
        }
        let [a, b, c, d, y, y_prime] = self.spins::<6>(raw)?;
        let res = orthogonality_check(a, b, c, d, y, y_prime);
        let instance = json!({ "a": a, "b": b, "c": c, "d": d, "y": y, "y_prime": y_prime });
        self.single(&res, instance, out)
    }

    fn verify_be(&self, grid: &GridArgs, form: BeForm, raw: &[String], out: &mut dyn Write) -> Result<i32> {
        self.check_grid_or_single(grid, raw)?;
        if grid.all {
            return self.grid(grid, GridKind::BiedenharnElliott(form), out);
        }
        let inst = self.nine(raw)?;
        let res = be_check(&inst, form)?;
        self.single(&res, serde_json::to_value(inst).expect("instance serializes"), out)
    }

    fn verify_pachner(
        &self,
        grid: &GridArgs,
        mv: PachnerMove,
        p_prime: Option<&str>,
        raw: &[String],
        out: &mut dyn Write,
    ) -> Result<i32> {
        self.check_grid_or_single(grid, raw)?;
        if grid.all {
            if p_prime.is_some() {
                return Err(usage("--p-prime ranges over all admissible values with --all"));
            }
            let which = match mv {
                PachnerMove::TwoThree => GridKind::Pachner23,
                PachnerMove::OneFour => GridKind::Pachner14,
            };
            return self.grid(grid, which, out);
        }
        let inst = self.nine(raw)?;
        let mut instance = serde_json::to_value(inst).expect("instance serializes");
        let res = match mv {
            PachnerMove::TwoThree => pachner_23_check(&inst)?,
            PachnerMove::OneFour => {
                let pp = p_prime.map(|s| Spin::parse_with_mode(s, self.twice)).transpose()?.unwrap_or(inst.p);
                instance["p_prime"] = serde_json::to_value(pp).expect("spin serializes");
                pachner_14_check(&inst, pp)?
            }
        };
        self.single(&res, instance, out)
    }

    fn structure(&self, s: &IncidenceStructure, clique: bool, out: &mut dyn Write) -> Result<i32> {
        match self.format {
            Format::Json => write_line(out, s.to_json())?,
            Format::Dot => write!(out, "{}", s.to_dot(dot_mode(clique)))?,
            Format::Text => write!(out, "{}", structure_text(s))?,
        }
        Ok(EXIT_OK)
    }

    fn complex(&self, c: &SimplicialComplex4, out: &mut dyn Write) -> Result<()> {
        match self.format {
            Format::Json => write_line(out, c.to_json())?,
            Format::Dot => write!(out, "{}", complex_dot(c))?,
            Format::Text => write!(out, "{}", complex_text(c))?,
        }
        Ok(())
    }

    fn space_dual(&self, tips: (u8, u8), out: &mut dyn Write) -> Result<i32> {
        let c = space_dual_desargues_with_tips(&build_desargues(), tips)?;
        self.complex(&c, out)?;
        Ok(EXIT_OK)
    }

    fn cross_section(&self, tips: (u8, u8), clique: bool, out: &mut dyn Write) -> Result<i32> {
        let d = build_desargues();
        let c = space_dual_desargues_with_tips(&d, tips)?;
        let section = cross_section(&c);
        let same = isomorphic(&section, &d);
        if self.format == Format::Text {
            write!(out, "{}", structure_text(&section))?;
            for plane in cross_section_planes(&c) {
                let lines: Vec<&str> = plane.lines.iter().filter_map(|&l| section.line_label(l)).collect();
                write_line(out, format!("plane T{}: {}", plane.index, lines.join(" ")))?;
            }
            write_line(out, format!("isomorphic to Desargues: {same}"))?;
        } else {
            self.structure(&section, clique, out)?;
        }
        Ok(if same { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn label(&self, file: &PathBuf, out: &mut dyn Write) -> Result<i32> {
        let spins = read_labeling(file)?;
        let labeling = DesarguesSpinLabeling::assign(&spins)?;
        let point_failures = labeling.point_failures();
        let complex = space_dual_desargues_with_tips(labeling.structure(), (1, 5))?;
        let (triangle_failures, tetrahedra) = match transfer_labeling(&labeling, &complex) {
            Ok(s) => (Vec::new(), s.tetrahedral_sixj().map(|t| t.to_string()).to_vec()),
            Err(Error::TriadViolation(f)) => (f, Vec::new()),
            Err(e) => return Err(e),
        };
        let quadrangles: Vec<String> = labeling.quadrangle_sixj().iter().map(ToString::to_string).collect();
        let valid = point_failures.is_empty() && triangle_failures.is_empty();
        match self.format {
            Format::Json => json_line(
                out,
                &json!({
                    "valid": valid,
                    "point_failures": point_failures,
                    "triangle_failures": triangle_failures,
                    "quadrangles": quadrangles,
                    "tetrahedra": tetrahedra,
                }),
            )?,
            _ => {
                write_line(out, if valid { "valid" } else { "invalid" })?;
                for f in point_failures.iter().chain(&triangle_failures) {
                    let [x, y, z] = f.spins;
                    write_line(out, format!("triad fails at {}: ({x}, {y}, {z})", f.location))?;
                }
                for (i, q) in quadrangles.iter().enumerate() {
                    write_line(out, format!("Q{} {q}", i + 1))?;
                }
                for (i, t) in tetrahedra.iter().enumerate() {
                    write_line(out, format!("T{} {t}", i + 1))?;
                }
            }
        }
        Ok(if valid { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn amplitude(&self, file: &PathBuf, out: &mut dyn Write) -> Result<i32> {
        let labeling = DesarguesSpinLabeling::assign(&read_labeling(file)?)?;
        let amplitude = network_amplitude(&labeling)?;
        for (i, s) in labeling.quadrangle_sixj().iter().enumerate() {
            let value = sixj_value(s)?;
            match self.format {
                Format::Json => json_line(out, &json!({ "quadrangle": i + 1, "symbol": s.to_string(), "value": value }))?,
                _ => write_line(out, format!("Q{} {s} = {value}", i + 1))?,
            }
        }
        match self.format {
            Format::Json => json_line(out, &json!({ "amplitude": amplitude }))?,
            _ => write_line(out, format!("amplitude = {amplitude}"))?,
        }
        Ok(EXIT_OK)
    }

    fn regularize(&self, raw: &[String], others: Option<&str>, out: &mut dyn Write) -> Result<i32> {
        let [a, b, c, d] = self.spins::<4>(raw)?;
        let q = canonicalize_quadruple(a, b, c, d)?;
        let range = running_range(&q);
        let report = regularization_bounds(&q);
        let enumeration = others
            .map(|list| self.parse_others(list).and_then(|o| regularized_enumeration(&q, &o)))
            .transpose()?;
        match self.format {
            Format::Json => {
                let entries: Option<Vec<_>> = enumeration
                    .as_ref()
                    .map(|e| e.iter().map(|(x, amp)| json!({ "x": x, "amplitude": amp })).collect());
                json_line(
                    out,
                    &json!({ "canonical": q, "running_range": range, "report": report, "enumeration": entries }),
                )?
            }
            _ => {
                write_line(out, format!("canonical a={} b={} c={} d={} s={}", q.a, q.b, q.c, q.d, q.s))?;
                write_line(out, format!("x range {}..{}", range.x_min, range.x_max))?;
                write_line(out, format!("y range {}..{}", range.y_min, range.y_max))?;
                write_line(out, format!("s <= d + (b - a): {}", report.rsym3_holds))?;
                match (report.max_r, report.kappa_twice, report.rsym5_holds) {
                    (Some(r), Some(k), Some(ok)) => {
                        write_line(out, format!("max r = {r}, 2 kappa = {k}"))?;
                        write_line(out, format!("r <= (2 x_min + 1) + (2 y_min + 1): {ok}"))?;
                    }
                    _ => write_line(out, "no r >= 3")?,
                }
                for (x, amp) in enumeration.iter().flatten() {
                    write_line(out, format!("x = {x}: {amp}"))?;
                }
            }
        }
        Ok(if report.rsym3_holds { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn parse_others(&self, list: &str) -> Result<SymbolSpins> {
        list.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|pair| {
                let (name, value) = pair.split_once('=').ok_or_else(|| usage(format!("expected name=spin, got {pair:?}")))?;
                Ok((name.parse::<Symbol>()?, Spin::parse_with_mode(value.trim(), self.twice)?))
            })
            .collect()
    }

    fn export(&self, target: ExportTarget, clique: bool, tips: (u8, u8), out: &mut dyn Write) -> Result<i32> {
        let ctx = Ctx { format: if self.format == Format::Text { Format::Dot } else { self.format }, ..*self };
        match target {
            ExportTarget::Quadrangle => ctx.structure(&build_quadrangle(), clique, out),
            ExportTarget::Quadrilateral => ctx.structure(&plane_dual(&build_quadrangle()), clique, out),
            ExportTarget::Desargues => ctx.structure(&build_desargues(), clique, out),
            ExportTarget::SpaceDual => {
                ctx.complex(&space_dual_desargues_with_tips(&build_desargues(), tips)?, out)?;
                Ok(EXIT_OK)
            }
            ExportTarget::CrossSection => {
                let c = space_dual_desargues_with_tips(&build_desargues(), tips)?;
                ctx.structure(&cross_section(&c), clique, out)
            }
        }
    }
}

fn dot_mode(clique: bool) -> DotMode {
    if clique {
        DotMode::Clique
    } else {
        DotMode::Bipartite
    }
}

fn structure_text(s: &IncidenceStructure) -> String {
    let mut out = String::new();
    match s.signature() {
        Some(sig) => {
            let _ = writeln!(out, "configuration {sig}");
        }
        None => {
            let _ = writeln!(out, "{} points, {} lines", s.points().len(), s.lines().len());
        }
    }
    for &p in s.points() {
        let name = s.point_label(p).map_or_else(|| p.to_string(), str::to_owned);
        let lines: Vec<String> = s
            .lines_through(p)
            .iter()
            .map(|&l| s.line_label(l).map_or_else(|| l.to_string(), str::to_owned))
            .collect();
        let _ = writeln!(out, "point {name}: {}", lines.join(" "));
    }
    out
}

fn complex_text(c: &SimplicialComplex4) -> String {
    let mut out = String::new();
    let [v, e, t, k] = c.f_vector();
    let _ = writeln!(out, "f-vector ({v}, {e}, {t}, {k})");
    for vertex in &c.vertices {
        let _ = writeln!(out, "vertex {} {}", vertex.color, vertex.tag);
    }
    for tri in &c.triangles {
        let edges: Vec<&str> = tri.edges.iter().map(|&e| c.edges[e].tag.as_str()).collect();
        let _ = writeln!(out, "triangle {}: {}", tri.tag, edges.join(" "));
    }
    for (i, tet) in c.tetrahedra.iter().enumerate() {
        let faces: Vec<&str> = tet.triangles.iter().map(|&f| c.triangles[f].tag.as_str()).collect();
        let verts: Vec<String> = c.tetrahedron_vertices(i).iter().map(|&v| c.vertices[v].color.to_string()).collect();
        let _ = writeln!(out, "tetrahedron T{} on {}: {}", tet.index, verts.join(""), faces.join(" "));
    }
    out
}

fn complex_dot(c: &SimplicialComplex4) -> String {
    let mut out = String::from("graph simplex {\n");
    for (i, v) in c.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{}\"];", v.tag);
    }
    for e in &c.edges {
        let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.vertices[0], e.vertices[1], e.tag);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("spinnet").chain(args.iter().copied());
        let code = main_with_args(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sixj_command() {
        assert_eq!(run(&["sixj", "1", "1", "1", "1", "1", "1"]), (0, "1/6*sqrt(1/1)\n".into(), String::new()));
        let (code, out, _) = run(&["--twice", "sixj", "2", "2", "2", "2", "2", "2"]);
        assert_eq!((code, out.as_str()), (0, "1/6*sqrt(1/1)\n"));
        let (code, out, _) = run(&["sixj", "2", "2", "2", "1", "1", "1", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"symbol\":\"{2 2 2; 1 1 1}\",\"value\":\"1/30*sqrt(21/1)\"}\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["sixj", "1", "1"]).0, EXIT_USAGE);
        assert_eq!(run(&["sixj", "1", "1", "1", "1", "1", "x"]).0, EXIT_USAGE);
        assert_eq!(run(&["sixj", "1", "1", "1", "1", "1", "-1"]).0, EXIT_USAGE);
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = run(&["verify-orth", "--all", "--max-twice", "7"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("ceiling"), "{err}");
    }

    #[test]
    fn verify_commands() {
        let (code, out, _) = run(&["verify-be", "--all", "--max-twice", "2"]);
        assert_eq!(code, 0);
        assert!(out.ends_with(" instances, 0 failures\n"), "{out}");
        let (code, out, _) = run(&["verify-be", "--all", "--max-twice", "0", "--format", "json", "--sorted"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        assert!(out.lines().last().unwrap().contains("\"instances\":1"));
        let (code, _, _) = run(&["verify-be", "1", "1", "1", "1", "1", "1", "1", "1", "1", "--literal-paper-form"]);
        assert_eq!(code, EXIT_VIOLATION);
        let (code, out, _) = run(&["verify-orth", "1", "1", "1", "1", "1", "1"]);
        assert_eq!((code, out.as_str()), (0, "lhs = 1/3*sqrt(1/1)\nrhs = 1/3*sqrt(1/1)\nholds\n"));
        assert_eq!(run(&["verify-pachner", "--move", "1-4", "--p-prime", "0", "1", "1", "1", "1", "1", "1", "1", "1", "1"]).0, 0);
        assert_eq!(run(&["verify-pachner", "--all", "--max-twice", "1"]).0, 0);
    }

    #[test]
    fn unsorted_and_sorted_agree_on_summary() {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let s1 = verify_grid(2, GridKind::Orthogonality, DEFAULT_CEILING, true, &mut |r| {
            a.push(serde_json::to_string(r).unwrap());
            Ok(())
        })
        .unwrap();
        let s2 = verify_grid(2, GridKind::Orthogonality, DEFAULT_CEILING, false, &mut |r| {
            b.push(serde_json::to_string(r).unwrap());
            Ok(())
        })
        .unwrap();
        assert_eq!(s1, s2);
        b.sort();
        let mut a_sorted = a.clone();
        a_sorted.sort();
        assert_eq!(a_sorted, b);
        assert!(matches!(
            verify_grid(8, GridKind::Orthogonality, DEFAULT_CEILING, true, &mut |_| Ok(())),
            Err(Error::CeilingExceeded { requested: 8, ceiling: 6 })
        ));
    }

    #[test]
    fn structure_commands_round_trip() {
        let (code, out, _) = run(&["build-desargues", "--format", "json"]);
        assert_eq!(code, 0);
        let s: IncidenceStructure = serde_json::from_str(&out).unwrap();
        assert_eq!(s, build_desargues());
        let (code, out, _) = run(&["cross-section", "--tips", "2", "4"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("configuration (10_3)\n"));
        assert!(out.ends_with("isomorphic to Desargues: true\n"));
        let (code, out, _) = run(&["space-dual"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("f-vector (5, 10, 10, 5)\n"));
        let (code, out, _) = run(&["export", "quadrangle", "--clique"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("graph configuration {"));
    }

    #[test]
    fn deterministic_output() {
        for args in [&["build-desargues", "--format", "dot"][..], &["space-dual", "--format", "json"], &["orbit", "1", "1", "1", "1", "1", "1"]] {
            assert_eq!(run(args), run(args));
        }
    }

    #[test]
    fn labeling_commands() {
        let dir = std::env::temp_dir().join(format!("spinnet-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let ones = dir.join("ones.json");
        let names = ["a", "b", "c", "d", "e", "f", "p", "q", "r", "x"];
        let body: Vec<String> = names.iter().map(|n| format!("\"{n}\":\"1\"")).collect();
        fs::write(&ones, format!("{{\"symbol_spins\":{{{}}}}}", body.join(","))).unwrap();
        let path = ones.to_str().unwrap();
        let (code, out, _) = run(&["amplitude", path]);
        assert_eq!(code, 0);
        assert!(out.ends_with("amplitude = 1/7776*sqrt(1/1)\n"), "{out}");
        let (code, out, _) = run(&["label", path, "--format", "json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"valid\":true"), "{out}");

        let bad = dir.join("bad.json");
        let body: Vec<String> = names.iter().map(|n| format!("\"{n}\":\"{}\"", if *n == "a" { 1 } else { 0 })).collect();
        fs::write(&bad, format!("{{\"symbol_spins\":{{{}}}}}", body.join(","))).unwrap();
        let (code, out, _) = run(&["label", bad.to_str().unwrap()]);
        assert_eq!(code, EXIT_VIOLATION);
        assert!(out.contains("triad fails at (13)"));
        assert_eq!(run(&["amplitude", bad.to_str().unwrap()]).0, EXIT_USAGE);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn regularize_command() {
        let (code, out, _) = run(&["regularize", "1", "2", "2", "3", "--others", "e=1,f=1,p=2,q=2,r=1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("x range 1..3"));
        let (code, _, _) = run(&["regularize", "1", "1", "1", "1"]);
        assert_eq!(code, EXIT_VIOLATION);
    }
}
