//! Command line surface: argument types and the dispatcher.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use syzygy::gaction::{glue, skew, GlueError};
use syzygy::geom::{arc_quiver, diag_quiver};
use syzygy::oracle::{FieldChoice, Fp, Rat};
use syzygy::quiver::Quiver;

use crate::report::{self, invalid, usage, CliError, ConfigOverride, Model};
use crate::{dot, render, suite};

/// Default bound on path length when building algebra bases; hitting it
/// means the quotient looks infinite dimensional.
pub const DEFAULT_PATH_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::A => Model::A,
            ModelArg::D => Model::D,
        }
    }
}

/// Combinatorial models of syzygy categories over dimer tree algebras
/// and their order-two skew group algebras.
#[derive(Debug, Parser)]
#[command(name = "syz", version, disable_help_subcommand = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Coefficient field: rational, prime, or prime:<p>.
    #[arg(long, global = true, value_name = "FIELD")]
    pub field: Option<String>,
    /// Bound on path length when building algebra bases.
    #[arg(long, global = true, value_name = "LEN")]
    pub path_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the dimer tree conditions and report every violation.
    Validate { file: PathBuf },
    /// Boundary arrow weights and the model size they add up to.
    Weight {
        file: PathBuf,
        /// Model: A for the polygon, D for the punctured polygon.
        #[arg(long = "type", value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// Distinguished arrow when the file holds the one-sided quiver.
        #[arg(long)]
        arrow: Option<String>,
    },
    /// Double a quiver along a boundary arrow.
    Glue {
        file: PathBuf,
        /// Boundary arrow to glue along.
        #[arg(long)]
        arrow: String,
    },
    /// Find the order-two symmetry and the arrow it fixes.
    DetectSigma { file: PathBuf },
    /// Split a quiver along a boundary arrow into its skew form.
    Skew {
        file: PathBuf,
        /// Boundary arrow to split along.
        #[arg(long)]
        arrow: String,
    },
    /// Lay out the polygon or punctured polygon model of a quiver.
    Polygon {
        file: PathBuf,
        #[arg(long = "type", value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// JSON file assigning one curve per vertex.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
    },
    /// The stable translation quiver of the model.
    Arquiver {
        /// Quiver file to read the size parameter from.
        file: Option<PathBuf>,
        #[arg(long = "type", value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// Size parameter, instead of reading it from a file.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Walk the periodic projective resolution from a starting curve.
    Resolve {
        file: PathBuf,
        #[arg(long = "type", value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// Starting curve, written like "(5,1)" or "(3,3)+".
        #[arg(long)]
        start: String,
        /// Number of resolution steps to print.
        #[arg(long)]
        steps: usize,
        /// JSON file assigning one curve per vertex.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
    },
    /// Crossing numbers between two curves, in both directions.
    Crossings {
        first: String,
        second: String,
        #[arg(long = "type", value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// Size parameter of the model.
        #[arg(long)]
        n: Option<u32>,
        /// Quiver file to read the size parameter from.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Stable hom dimension between two curves, counted on the mesh.
    Hom {
        source: String,
        target: String,
        #[arg(long = "type", value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// Size parameter of the model.
        #[arg(long)]
        n: Option<u32>,
        /// Quiver file to read the size parameter from.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Cross checks against the finite dimensional algebra oracle.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Bundled fixture quivers and their verification suite.
    Fixtures {
        #[command(subcommand)]
        command: FixturesCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Resolve every radical with the oracle and compare against the model.
    Verify {
        file: PathBuf,
        #[arg(long = "type", value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// Number of resolution steps to compare (default twice the size).
        #[arg(long)]
        steps: Option<usize>,
        /// JSON file assigning one curve per vertex.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesCommand {
    /// Run the verification suite over every bundled fixture.
    Run,
    /// List the bundled fixtures.
    List,
    /// Write the bundled fixtures and reference configurations to a directory.
    Export {
        /// Target directory.
        #[arg(long, default_value = "fixtures")]
        dir: PathBuf,
    },
}

struct Ctx {
    format: Format,
    out: Option<PathBuf>,
    field: FieldChoice,
    path_cap: usize,
}

impl Ctx {
    fn emit(&self, contents: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => fs::write(path, contents)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{contents}");
                Ok(())
            }
        }
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value)
            .map_err(|e| invalid(format!("serialization failed: {e}")))?;
        text.push('\n');
        self.emit(&text)
    }

    fn text_or_json<T: Serialize>(
        &self,
        what: &str,
        value: &T,
        text: impl FnOnce() -> String,
    ) -> Result<(), CliError> {
        match self.format {
            Format::Text => self.emit(&text()),
            Format::Json => self.emit_json(value),
            _ => Err(usage(format!("{what} supports --format text or json"))),
        }
    }

    fn field_name(&self) -> String {
        match self.field {
            FieldChoice::Rational => "rational".into(),
            FieldChoice::Prime(p) => format!("prime:{p}"),
        }
    }
}

fn read_quiver(path: &Path) -> Result<Quiver, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Quiver::parse(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn glue_err(e: GlueError) -> CliError {
    match &e {
        GlueError::NoSuchArrow(_) => usage(e.to_string()),
        _ => invalid(e.to_string()),
    }
}

fn load_config(path: Option<&Path>) -> Result<Option<ConfigOverride>, CliError> {
    path.map(suite::load_override).transpose()
}

fn size_from(
    n: Option<u32>,
    file: Option<&Path>,
    model: Model,
) -> Result<u32, CliError> {
    match (n, file) {
        (Some(n), None) => Ok(n),
        (None, Some(f)) => report::model_size(&read_quiver(f)?, model),
        (Some(_), Some(_)) => Err(usage("give --n or --file, not both")),
        (None, None) => Err(usage("give --n or --file to fix the model size")),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let field = match &cli.field {
        Some(s) => FieldChoice::parse(s).map_err(|e| usage(e.to_string()))?,
        None => FieldChoice::from_env().map_err(|e| usage(e.to_string()))?,
    };
    field.install().map_err(|e| usage(e.to_string()))?;
    let ctx = Ctx {
        format: cli.format,
        out: cli.out,
        field,
        path_cap: cli.path_cap.unwrap_or(DEFAULT_PATH_CAP),
    };
    match cli.command {
        Command::Validate { file } => {
            let q = read_quiver(&file)?;
            let rep = report::validate_report(&q);
            ctx.text_or_json("validate", &rep, || report::validate_text(&q))?;
            if rep.dimer_tree {
                Ok(())
            } else {
                Err(invalid(format!("{} is not a dimer tree", q.name)))
            }
        }
        Command::Weight { file, model, arrow } => {
            let q = read_quiver(&file)?;
            let rep = report::weight_report(&q, model.into(), arrow.as_deref())?;
            ctx.text_or_json("weight", &rep, || report::weight_text(&rep))
        }
        Command::Glue { file, arrow } => {
            let q = read_quiver(&file)?;
            let glued = glue(&q, &arrow).map_err(glue_err)?;
            match ctx.format {
                Format::Text => ctx.emit(&glued.quiver.to_text()),
                Format::Json => {
                    let mut text = glued.quiver.to_json();
                    text.push('\n');
                    ctx.emit(&text)
                }
                _ => Err(usage("glue supports --format text or json")),
            }
        }
        Command::DetectSigma { file } => {
            let q = read_quiver(&file)?;
            let rep = report::sigma_report(&q);
            ctx.text_or_json("detect-sigma", &rep, || report::sigma_text(&rep))?;
            if rep.found == 1 {
                Ok(())
            } else {
                Err(invalid(format!(
                    "expected exactly one involution, found {}",
                    rep.found
                )))
            }
        }
        Command::Skew { file, arrow } => {
            let q = read_quiver(&file)?;
            let skewed = skew(&q, &arrow).map_err(glue_err)?;
            match ctx.format {
                Format::Text => ctx.emit(&skewed.quiver.to_text()),
                Format::Json => {
                    let mut text = skewed.quiver.to_json();
                    text.push('\n');
                    ctx.emit(&text)
                }
                _ => Err(usage("skew supports --format text or json")),
            }
        }
        Command::Polygon { file, model, config } => {
            let q = read_quiver(&file)?;
            let model: Model = model.into();
            let n = report::model_size(&q, model)?;
            let ov = load_config(config.as_deref())?;
            match model {
                Model::A => {
                    let (rep, cfg) = report::polygon_report_a(&q, n, ov.as_ref())?;
                    match ctx.format {
                        Format::Text => ctx.emit(&report::polygon_text(&rep)),
                        Format::Json => ctx.emit_json(&rep),
                        Format::Svg => ctx.emit(&render::polygon_a(&q, &cfg)),
                        Format::Dot => Err(usage("polygon supports text, json, or svg")),
                    }
                }
                Model::D => {
                    let (rep, cfg) = report::polygon_report_d(&q, n, ov.as_ref())?;
                    match ctx.format {
                        Format::Text => ctx.emit(&report::polygon_text(&rep)),
                        Format::Json => ctx.emit_json(&rep),
                        Format::Svg => ctx.emit(&render::polygon_d(&q, &cfg)),
                        Format::Dot => Err(usage("polygon supports text, json, or svg")),
                    }
                }
            }
        }
        Command::Arquiver { file, model, n } => {
            let model: Model = model.into();
            let n = size_from(n, file.as_deref(), model)?;
            let rep = report::arquiver_report(model, n)?;
            match ctx.format {
                Format::Text => ctx.emit(&report::arquiver_text(&rep)),
                Format::Json => ctx.emit_json(&rep),
                Format::Dot => {
                    let graph = match model {
                        Model::A => dot::translation_quiver(
                            &format!("A{n}"),
                            &diag_quiver(n),
                            |d| d.tau(),
                        ),
                        Model::D => dot::translation_quiver(
                            &format!("D{n}"),
                            &arc_quiver(n),
                            |a| a.tau(),
                        ),
                    };
                    ctx.emit(&graph)
                }
                Format::Svg => Err(usage("arquiver supports text, json, or dot")),
            }
        }
        Command::Resolve {
            file,
            model,
            start,
            steps,
            config,
        } => {
            let q = read_quiver(&file)?;
            let model: Model = model.into();
            let n = report::model_size(&q, model)?;
            let ov = load_config(config.as_deref())?;
            let rep = match model {
                Model::A => report::resolve_report_a(&q, n, &start, steps, ov.as_ref())?,
                Model::D => report::resolve_report_d(&q, n, &start, steps, ov.as_ref())?,
            };
            ctx.text_or_json("resolve", &rep, || report::resolve_text(&rep))
        }
        Command::Crossings {
            first,
            second,
            model,
            n,
            file,
        } => {
            let model: Model = model.into();
            let n = size_from(n, file.as_deref(), model)?;
            let rep = report::crossings_report(model, n, &first, &second)?;
            ctx.text_or_json("crossings", &rep, || report::crossings_text(&rep))
        }
        Command::Hom {
            source,
            target,
            model,
            n,
            file,
        } => {
            let model: Model = model.into();
            let n = size_from(n, file.as_deref(), model)?;
            let rep = report::hom_report(model, n, &source, &target)?;
            ctx.text_or_json("hom", &rep, || report::hom_text(&rep))
        }
        Command::Oracle {
            command:
                OracleCommand::Verify {
                    file,
                    model,
                    steps,
                    config,
                },
        } => {
            let q = read_quiver(&file)?;
            let model: Model = model.into();
            let ov = load_config(config.as_deref())?;
            let field_name = ctx.field_name();
            let rep = match ctx.field {
                FieldChoice::Rational => report::oracle_report::<Rat>(
                    &q,
                    model,
                    steps,
                    ov.as_ref(),
                    &field_name,
                    ctx.path_cap,
                )?,
                FieldChoice::Prime(_) => report::oracle_report::<Fp>(
                    &q,
                    model,
                    steps,
                    ov.as_ref(),
                    &field_name,
                    ctx.path_cap,
                )?,
            };
            ctx.text_or_json("oracle verify", &rep, || report::oracle_text(&rep))?;
            if rep.pass {
                Ok(())
            } else {
                Err(invalid("oracle verification failed"))
            }
        }
        Command::Fixtures { command } => match command {
            FixturesCommand::Run => {
                if ctx.format != Format::Text {
                    return Err(usage("fixtures run emits text only"));
                }
                let suite = match ctx.field {
                    FieldChoice::Rational => suite::run::<Rat>(ctx.path_cap),
                    FieldChoice::Prime(_) => suite::run::<Fp>(ctx.path_cap),
                };
                ctx.emit(&suite.render())?;
                if suite.all_passed() {
                    Ok(())
                } else {
                    Err(invalid("fixture suite failed"))
                }
            }
            FixturesCommand::List => {
                if ctx.format != Format::Text {
                    return Err(usage("fixtures list emits text only"));
                }
                ctx.emit(&suite::list_text())
            }
            FixturesCommand::Export { dir } => {
                if ctx.format != Format::Text {
                    return Err(usage("fixtures export emits text only"));
                }
                let files = suite::export(&dir)?;
                ctx.emit(&format!(
                    "wrote {} files to {}\n",
                    files.len(),
                    dir.display()
                ))
            }
        },
    }
}
