//! Run configuration: defaults, environment, config file, CLI flags.
//!
//! Precedence (highest wins): CLI flags > config file > environment
//! (`LOFREE_CAP` overrides the default cap) > built-in defaults. The config
//! file is a flat `key = value` text format; unknown keys are rejected.

use std::fmt;
use std::path::PathBuf;

use lofree::Flavor;

use crate::exit;

/// Output format for emitted tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Table,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format, CliError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "table" => Ok(Format::Table),
            other => Err(CliError::usage(format!(
                "unknown format {other:?} (expected csv, json, or table)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Table => "table",
        }
    }
}

/// Which subcommand is being run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Count,
    Oracle,
    Spectral,
    Asympt,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Count => "count",
            Command::Oracle => "oracle",
            Command::Spectral => "spectral",
            Command::Asympt => "asympt",
            Command::Report => "report",
        }
    }
}

/// Fully resolved configuration for one command invocation. Identical
/// `RunConfig` values produce byte-identical outputs.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub flavor: Option<Flavor>,
    /// Inclusive lattice-size range; a single `--n` yields `n..=n`.
    pub n_range: Option<(u16, u16)>,
    /// Inclusive radius range; a single `--mu` yields `mu..=mu`.
    pub mu_range: Option<(u64, u64)>,
    pub m_max: Option<u64>,
    pub include_m0: bool,
    pub tol: f64,
    pub cap: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    /// Report only: run the reduced small-instance suite.
    pub quick: bool,
    /// Report only: rebuild the bundle a second time and verify byte
    /// equality before writing.
    pub self_check: bool,
}

impl RunConfig {
    /// Built-in defaults for a command, before environment, config file,
    /// and flags are applied.
    pub fn defaults(command: Command) -> RunConfig {
        RunConfig {
            command,
            flavor: None,
            n_range: None,
            mu_range: None,
            m_max: None,
            include_m0: true,
            tol: 1e-12,
            cap: 10_000_000,
            format: Format::Csv,
            out: None,
            seed: 42,
            quick: false,
            self_check: false,
        }
    }

    /// Apply the `LOFREE_CAP` environment variable (a default-cap
    /// override, still below config file and flags in precedence).
    pub fn apply_env(&mut self, cap_var: Option<&str>) -> Result<(), CliError> {
        if let Some(raw) = cap_var {
            let cap: usize = raw.trim().parse().map_err(|_| {
                CliError::usage(format!("LOFREE_CAP must be a nonnegative integer, got {raw:?}"))
            })?;
            self.cap = cap;
        }
        Ok(())
    }

    /// Apply one `key = value` pair from a config file. Unknown keys are
    /// rejected.
    pub fn apply_key_value(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let v = value.trim();
        match key.trim() {
            "flavor" => self.flavor = Some(parse_flavor(v)?),
            "n" => self.n_range = Some(single_range(parse_num::<u16>("n", v)?)),
            "n-range" => self.n_range = Some(parse_range_u16("n-range", v)?),
            "mu" => self.mu_range = Some(single_range(parse_num::<u64>("mu", v)?)),
            "mu-range" => self.mu_range = Some(parse_range_u64("mu-range", v)?),
            "m-max" => self.m_max = Some(parse_num::<u64>("m-max", v)?),
            "include-m0" => self.include_m0 = parse_bool("include-m0", v)?,
            "tol" => {
                let tol: f64 = v
                    .parse()
                    .map_err(|_| CliError::usage(format!("tol must be a float, got {v:?}")))?;
                if tol.is_nan() || tol <= 0.0 {
                    return Err(CliError::usage(format!("tol must be positive, got {v}")));
                }
                self.tol = tol;
            }
            "cap" => self.cap = parse_num::<usize>("cap", v)?,
            "format" => self.format = Format::parse(v)?,
            "out" => self.out = Some(PathBuf::from(v)),
            "seed" => self.seed = parse_num::<u64>("seed", v)?,
            "quick" => self.quick = parse_bool("quick", v)?,
            "self-check" => self.self_check = parse_bool("self-check", v)?,
            other => {
                return Err(CliError::usage(format!(
                    "unknown config key {other:?} (known keys: flavor, n, n-range, mu, mu-range, \
                     m-max, include-m0, tol, cap, format, out, seed, quick, self-check)"
                )))
            }
        }
        Ok(())
    }

    /// Apply a whole config file: one `key = value` per line, `#` comments
    /// and blank lines ignored.
    pub fn apply_config_text(&mut self, text: &str) -> Result<(), CliError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::usage(format!(
                    "config line {} is not `key = value`: {line:?}",
                    lineno + 1
                ))
            })?;
            self.apply_key_value(key, value)?;
        }
        Ok(())
    }

    /// The flavor, or a usage error naming the flag.
    pub fn require_flavor(&self) -> Result<Flavor, CliError> {
        self.flavor
            .ok_or_else(|| CliError::usage("this command needs --flavor {lf1,lf2,free1,free2}"))
    }

    /// The n-range, or a usage error naming the flags.
    pub fn require_n(&self) -> Result<(u16, u16), CliError> {
        self.n_range
            .ok_or_else(|| CliError::usage("this command needs --n N or --n-range A:B"))
    }

    /// The mu-range, or a usage error naming the flags.
    pub fn require_mu(&self) -> Result<(u64, u64), CliError> {
        self.mu_range
            .ok_or_else(|| CliError::usage("this command needs --mu M or --mu-range A:B"))
    }
}

pub fn parse_flavor(s: &str) -> Result<Flavor, CliError> {
    Flavor::parse(s).map_err(CliError::from)
}

fn single_range<T: Copy>(v: T) -> (T, T) {
    (v, v)
}

fn parse_num<T: std::str::FromStr>(what: &str, v: &str) -> Result<T, CliError> {
    v.trim()
        .parse()
        .map_err(|_| CliError::usage(format!("{what} must be a nonnegative integer, got {v:?}")))
}

fn parse_bool(what: &str, v: &str) -> Result<bool, CliError> {
    match v.trim().to_ascii_lowercase().as_str() {
        "true" | "1" | "yes" | "on" => Ok(true),
        "false" | "0" | "no" | "off" => Ok(false),
        other => Err(CliError::usage(format!(
            "{what} must be a boolean, got {other:?}"
        ))),
    }
}

/// Parse an inclusive `a:b` range with `a <= b`.
pub fn parse_range_u16(what: &str, v: &str) -> Result<(u16, u16), CliError> {
    let (a, b) = split_range(what, v)?;
    let lo = parse_num::<u16>(what, a)?;
    let hi = parse_num::<u16>(what, b)?;
    check_order(what, lo as u64, hi as u64)?;
    Ok((lo, hi))
}

/// Parse an inclusive `a:b` range with `a <= b`.
pub fn parse_range_u64(what: &str, v: &str) -> Result<(u64, u64), CliError> {
    let (a, b) = split_range(what, v)?;
    let lo = parse_num::<u64>(what, a)?;
    let hi = parse_num::<u64>(what, b)?;
    check_order(what, lo, hi)?;
    Ok((lo, hi))
}

fn split_range<'a>(what: &str, v: &'a str) -> Result<(&'a str, &'a str), CliError> {
    v.trim()
        .split_once(':')
        .ok_or_else(|| CliError::usage(format!("{what} must look like A:B, got {v:?}")))
}

fn check_order(what: &str, lo: u64, hi: u64) -> Result<(), CliError> {
    if lo > hi {
        return Err(CliError::usage(format!(
            "{what} must be nonempty (A <= B), got {lo}:{hi}"
        )));
    }
    Ok(())
}

/// Error type carrying the exit-code contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad flags, bad config file, unusable parameters, I/O trouble: exit 2.
    Usage(String),
    /// An oracle comparison or acceptance assertion failed: exit 1.
    Mismatch(String),
    /// A walk or table hit the configured resource cap: exit 3.
    CapAbort(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }

    pub fn mismatch(msg: impl Into<String>) -> CliError {
        CliError::Mismatch(msg.into())
    }

    pub fn cap(msg: impl Into<String>) -> CliError {
        CliError::CapAbort(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Mismatch(_) => exit::MISMATCH,
            CliError::CapAbort(_) => exit::CAP,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Mismatch(m) => write!(f, "mismatch: {m}"),
            CliError::CapAbort(m) => write!(f, "cap exceeded: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<lofree::Error> for CliError {
    fn from(e: lofree::Error) -> CliError {
        match e {
            lofree::Error::CapExceeded { stored, cap } => CliError::cap(format!(
                "stored {stored} elements against a cap of {cap}; raise --cap or LOFREE_CAP"
            )),
            other => CliError::usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::usage(format!("I/O error: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> RunConfig {
        RunConfig::defaults(Command::Count)
    }

    #[test]
    fn defaults_are_sane() {
        let c = base();
        assert!(c.include_m0);
        assert_eq!(c.seed, 42);
        assert_eq!(c.cap, 10_000_000);
        assert_eq!(c.format, Format::Csv);
        assert!(c.flavor.is_none());
    }

    #[test]
    fn env_cap_overrides_default_but_not_file() {
        let mut c = base();
        c.apply_env(Some("5000")).unwrap();
        assert_eq!(c.cap, 5000);
        c.apply_config_text("cap = 777\n").unwrap();
        assert_eq!(c.cap, 777);
        assert!(c.apply_env(Some("nonsense")).is_err());
    }

    #[test]
    fn config_file_round_trip() {
        let mut c = base();
        c.apply_config_text(
            "# sample run\nflavor = lf2\nn-range = 2:4\nmu = 3\ninclude-m0 = false\n\
             tol = 1e-9\nformat = json\nseed = 7\nout = /tmp/x.csv\n",
        )
        .unwrap();
        assert_eq!(c.flavor, Some(Flavor::Lf2));
        assert_eq!(c.n_range, Some((2, 4)));
        assert_eq!(c.mu_range, Some((3, 3)));
        assert!(!c.include_m0);
        assert_eq!(c.tol, 1e-9);
        assert_eq!(c.format, Format::Json);
        assert_eq!(c.seed, 7);
        assert_eq!(c.out, Some(PathBuf::from("/tmp/x.csv")));
    }

    #[test]
    fn unknown_keys_rejected() {
        let mut c = base();
        let err = c.apply_config_text("colour = blue\n").unwrap_err();
        assert_eq!(err.exit_code(), exit::USAGE);
        assert!(err.to_string().contains("unknown config key"));
    }

    #[test]
    fn malformed_lines_rejected() {
        let mut c = base();
        assert!(c.apply_config_text("flavor lf1\n").is_err());
        assert!(c.apply_config_text("n = -3\n").is_err());
        assert!(c.apply_config_text("tol = 0\n").is_err());
        assert!(c.apply_config_text("mu-range = 5:2\n").is_err());
        assert!(c.apply_config_text("n-range = 2\n").is_err());
        assert!(c.apply_config_text("include-m0 = maybe\n").is_err());
    }

    #[test]
    fn ranges_parse_inclusively() {
        assert_eq!(parse_range_u16("n-range", "2:4").unwrap(), (2, 4));
        assert_eq!(parse_range_u64("mu-range", "7:7").unwrap(), (7, 7));
        assert!(parse_range_u64("mu-range", "8:7").is_err());
    }

    #[test]
    fn format_names_round_trip() {
        for f in [Format::Csv, Format::Json, Format::Table] {
            assert_eq!(Format::parse(f.name()).unwrap(), f);
        }
        assert!(Format::parse("xml").is_err());
    }

    #[test]
    fn error_exit_codes_follow_contract() {
        assert_eq!(CliError::usage("x").exit_code(), 2);
        assert_eq!(CliError::mismatch("x").exit_code(), 1);
        assert_eq!(CliError::cap("x").exit_code(), 3);
        let from_cap: CliError = lofree::Error::CapExceeded { stored: 9, cap: 5 }.into();
        assert_eq!(from_cap.exit_code(), 3);
        let from_param: CliError =
            lofree::Error::InvalidParameter("bad".into()).into();
        assert_eq!(from_param.exit_code(), 2);
    }
}
