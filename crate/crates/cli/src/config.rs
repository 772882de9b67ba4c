//! Settings resolved from flags, `EDV_*` environment variables, a
//! `key=value` file and built-in defaults, in that order.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Format as ValueEnum>::from_str(s.trim(), true).map_err(|_| format!("unknown format '{s}'"))
    }
}

pub const DEFAULT_CAP: usize = 16;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub enumeration_cap: usize,
    pub float_tolerance: f64,
    pub workers: usize,
    pub output_format: Format,
}

/// Values that may each come from a different source.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Partial {
    pub cap: Option<usize>,
    pub tolerance: Option<f64>,
    pub workers: Option<usize>,
    pub format: Option<Format>,
}

impl Partial {
    /// Fills unset fields from `lower`.
    pub fn or(self, lower: Partial) -> Partial {
        Partial {
            cap: self.cap.or(lower.cap),
            tolerance: self.tolerance.or(lower.tolerance),
            workers: self.workers.or(lower.workers),
            format: self.format.or(lower.format),
        }
    }

    pub fn parse_file_text(text: &str, origin: &str) -> Result<Partial, CliError> {
        let mut p = Partial::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| CliError::Config(format!("{origin}:{}: {msg}", i + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key=value".into()))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "cap" | "enumeration_cap" => p.cap = Some(value.parse().map_err(|_| bad(format!("bad cap '{value}'")))?),
                "tolerance" | "float_tolerance" => {
                    p.tolerance = Some(value.parse().map_err(|_| bad(format!("bad tolerance '{value}'")))?)
                }
                "workers" => p.workers = Some(value.parse().map_err(|_| bad(format!("bad workers '{value}'")))?),
                "format" | "output_format" => p.format = Some(value.parse().map_err(bad)?),
                other => return Err(bad(format!("unknown key '{other}'"))),
            }
        }
        Ok(p)
    }

    pub fn from_file(path: &Path) -> Result<Partial, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Partial::parse_file_text(&text, &path.display().to_string())
    }

    pub fn resolve(self) -> Result<CliConfig, CliError> {
        let workers = self
            .workers
            .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
        let config = CliConfig {
            enumeration_cap: self.cap.unwrap_or(DEFAULT_CAP),
            float_tolerance: self.tolerance.unwrap_or(DEFAULT_TOLERANCE),
            workers,
            output_format: self.format.unwrap_or(Format::Text),
        };
        if config.enumeration_cap < 4 {
            return Err(CliError::Config(format!("cap must be at least 4, got {}", config.enumeration_cap)));
        }
        if config.workers == 0 {
            return Err(CliError::Config("workers must be at least 1".into()));
        }
        if !(config.float_tolerance > 0.0 && config.float_tolerance.is_finite()) {
            return Err(CliError::Config(format!("tolerance must be positive, got {}", config.float_tolerance)));
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = Partial::default().resolve().unwrap();
        assert_eq!(c.enumeration_cap, 16);
        assert_eq!(c.float_tolerance, 1e-9);
        assert_eq!(c.output_format, Format::Text);
        assert!(c.workers >= 1);
    }

    #[test]
    fn higher_source_wins() {
        let flags = Partial { cap: Some(10), ..Partial::default() };
        let file = Partial::parse_file_text("cap = 12\nformat=json # comment\n", "f").unwrap();
        let c = flags.or(file).resolve().unwrap();
        assert_eq!(c.enumeration_cap, 10);
        assert_eq!(c.output_format, Format::Json);
    }

    #[test]
    fn file_errors_name_the_line() {
        let e = Partial::parse_file_text("cap=8\nspeed=3\n", "edv.conf").unwrap_err();
        assert!(e.to_string().contains("edv.conf:2"), "{e}");
        assert!(Partial::parse_file_text("cap 8", "f").is_err());
    }

    #[test]
    fn invariants_are_enforced() {
        assert!(Partial { cap: Some(3), ..Partial::default() }.resolve().is_err());
        assert!(Partial { workers: Some(0), ..Partial::default() }.resolve().is_err());
        assert!(Partial { tolerance: Some(0.0), ..Partial::default() }.resolve().is_err());
    }
}
