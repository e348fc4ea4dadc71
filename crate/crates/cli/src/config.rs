//! Command-line arguments and the validated run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtwist::freealgebra::{Params, DEFAULT_SEED};
use qtwist::rootsystem::{Family, RSType};
use qtwist::scalars::BigRational;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "qtwist", version, about = "Exact R-matrices and identity suites for two-parameter quantum groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the finite R̂ or the Baxterized R̂(z).
    Rmatrix {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Emit R̂(z) instead of R̂.
        #[arg(long)]
        spectral: bool,
        /// Value of z in numeric mode with --spectral.
        #[arg(long)]
        z: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run an identity suite; exit status 1 if any identity fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Series truncation order for crossing-affine.
        #[arg(long, default_value_t = qtwist::affine::DEFAULT_AFFINE_ORDER)]
        order: usize,
        /// Height cutoff for the pairing and theta suites.
        #[arg(long = "max-height", visible_alias = "height")]
        max_height: Option<usize>,
        /// Seed for the randomized bracket instances of the twist suite.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of randomized bracket instances in the twist suite.
        #[arg(long, default_value_t = 200)]
        instances: usize,
        /// Compare R̂ for this configuration against a JSON or CSV matrix file.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Leave timings out of the report.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// PBW root-vector table in convex order.
    Pbw {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long = "max-height")]
        max_height: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Pairing constants from the recursion, optionally against the coproduct oracle.
    Pairing {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Also evaluate the pairing of the root vectors directly.
        #[arg(long)]
        oracle: bool,
        #[arg(long = "max-height")]
        max_height: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Components of the truncated quasi-R-matrix Θ.
    Theta {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Height cutoff; defaults to the cutoff needed on V ⊗ V.
        #[arg(long = "max-height", visible_alias = "height")]
        height: Option<usize>,
        /// Rebuild R̂ from Θ on V ⊗ V and compare with the closed form.
        #[arg(long)]
        check_against_rmatrix: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lyndon words and costandard splits of the positive roots.
    Lyndon {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
pub struct TargetArgs {
    /// Cartan type.
    #[arg(long = "type", value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long, value_enum, default_value_t = ParamMode::Two)]
    pub params: ParamMode,
    /// Value of r in numeric mode, e.g. 4 or 9/4.
    #[arg(long)]
    pub r: Option<String>,
    /// Value of s in numeric mode.
    #[arg(long)]
    pub s: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMode {
    One,
    Two,
    Numeric,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Braid,
    Ybe,
    YbeAffine,
    Crossing,
    CrossingAffine,
    Relations,
    Intertwiner,
    Twist,
    Pairing,
    Theta,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

/// Validated type, parameter mode and numeric values.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub rstype: RSType,
    pub mode: ParamMode,
    pub numeric: Option<(BigRational, BigRational)>,
}

impl RunConfig {
    pub fn new(target: &TargetArgs, params: &ParamArgs) -> Result<Self, CliError> {
        let rstype = RSType::new(target.family, target.rank).map_err(|e| CliError::Usage(e.to_string()))?;
        let numeric = match params.params {
            ParamMode::Numeric => {
                let (Some(r), Some(s)) = (&params.r, &params.s) else {
                    return Err(CliError::Usage("--params numeric needs --r and --s".into()));
                };
                Some((parse_rational("r", r)?, parse_rational("s", s)?))
            }
            _ if params.r.is_some() || params.s.is_some() => {
                return Err(CliError::Usage("--r and --s apply only to --params numeric".into()));
            }
            _ => None,
        };
        Ok(RunConfig { rstype, mode: params.params, numeric })
    }

    /// The symbolic mode behind the configuration; numeric mode evaluates the two-parameter objects.
    pub fn symbolic(&self) -> Params {
        match self.mode {
            ParamMode::One => Params::OneParam,
            ParamMode::Two | ParamMode::Numeric => Params::TwoParam,
        }
    }

    /// The symbolic mode, rejecting numeric mode.
    pub fn require_symbolic(&self) -> Result<Params, CliError> {
        if self.mode == ParamMode::Numeric {
            return Err(CliError::Usage("identity suites run over the rational-function field; use --params one or two".into()));
        }
        Ok(self.symbolic())
    }

    pub fn mode_name(&self) -> &'static str {
        match self.mode {
            ParamMode::One => "one",
            ParamMode::Two => "two",
            ParamMode::Numeric => "numeric",
        }
    }
}

pub fn parse_rational(name: &str, s: &str) -> Result<BigRational, CliError> {
    s.trim().parse::<BigRational>().map_err(|_| CliError::Usage(format!("--{name}: not a rational number: {s}")))
}
