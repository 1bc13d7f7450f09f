//! Config-file loading and flag/file/default resolution.
//!
//! The file format is flat `key=value` text, one entry per line, `#` for
//! comments; keys are the long flag names. Flags always take precedence
//! over file entries, which take precedence over built-in defaults.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

/// Errors mapped onto the documented exit codes: usage problems exit 2,
/// I/O problems exit 1, failed verification exits 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    ChecksFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::ChecksFailed(_) => 1,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Io(msg) => write!(f, "error: {msg}"),
            CliError::ChecksFailed(n) => write!(f, "error: {n} verification check(s) failed"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Parsed config file entries (empty when no file was given).
#[derive(Debug, Default)]
pub struct Settings {
    map: BTreeMap<String, String>,
}

impl Settings {
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        let mut map = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config file {} line {}: expected key=value, got {line:?}",
                    path.display(),
                    lineno + 1
                )));
            };
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { map })
    }

    fn get<T: FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        match self.map.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                CliError::Usage(format!("invalid value {raw:?} for {key} in config file"))
            }),
        }
    }

    /// flag > file > default.
    pub fn resolve<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> CliResult<T> {
        if let Some(v) = flag {
            return Ok(v);
        }
        Ok(self.get(key)?.unwrap_or(default))
    }

    /// flag > file > None.
    pub fn resolve_opt<T: FromStr>(&self, flag: Option<T>, key: &str) -> CliResult<Option<T>> {
        if let Some(v) = flag {
            return Ok(Some(v));
        }
        self.get(key)
    }

    /// Seed precedence: flag > file > TOMO_SEED > 0.
    pub fn resolve_seed(&self, flag: Option<u64>) -> CliResult<u64> {
        if let Some(v) = flag {
            return Ok(v);
        }
        if let Some(v) = self.get::<u64>("seed")? {
            return Ok(v);
        }
        match std::env::var("TOMO_SEED") {
            Ok(raw) => raw.parse::<u64>().map_err(|_| {
                CliError::Usage(format!("invalid value {raw:?} for TOMO_SEED"))
            }),
            Err(_) => Ok(0),
        }
    }
}

/// Range validations that name the offending flag, per the exit-code
/// contract (invalid numeric ranges exit 2).
pub fn require_dim(dim: usize, flag: &str) -> CliResult<usize> {
    if dim < 2 {
        return Err(CliError::Usage(format!(
            "{flag} must be at least 2, got {dim}"
        )));
    }
    Ok(dim)
}

pub fn require_dim_at_most(dim: usize, max: usize, flag: &str) -> CliResult<usize> {
    if dim > max {
        return Err(CliError::Usage(format!(
            "{flag} must be at most {max}, got {dim}"
        )));
    }
    Ok(dim)
}

pub fn require_positive(value: f64, flag: &str) -> CliResult<f64> {
    if !(value > 0.0 && value.is_finite()) {
        return Err(CliError::Usage(format!(
            "{flag} must be positive and finite, got {value}"
        )));
    }
    Ok(value)
}

pub fn require_nonnegative(value: f64, flag: &str) -> CliResult<f64> {
    if !(value >= 0.0 && value.is_finite()) {
        return Err(CliError::Usage(format!(
            "{flag} must be nonnegative and finite, got {value}"
        )));
    }
    Ok(value)
}

pub fn require_finite(value: f64, flag: &str) -> CliResult<f64> {
    if !value.is_finite() {
        return Err(CliError::Usage(format!(
            "{flag} must be finite, got {value}"
        )));
    }
    Ok(value)
}

pub fn require_at_least_u64(value: u64, min: u64, flag: &str) -> CliResult<u64> {
    if value < min {
        return Err(CliError::Usage(format!(
            "{flag} must be at least {min}, got {value}"
        )));
    }
    Ok(value)
}

pub fn require_at_least_usize(value: usize, min: usize, flag: &str) -> CliResult<usize> {
    if value < min {
        return Err(CliError::Usage(format!(
            "{flag} must be at least {min}, got {value}"
        )));
    }
    Ok(value)
}

/// Parse a comma-separated dimension list like `2,3,4,5`.
pub fn parse_dims(raw: &str, flag: &str) -> CliResult<Vec<usize>> {
    let mut dims = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let n: usize = part.parse().map_err(|_| {
            CliError::Usage(format!("{flag} must be comma-separated integers, got {part:?}"))
        })?;
        require_dim(n, flag)?;
        dims.push(n);
    }
    if dims.is_empty() {
        return Err(CliError::Usage(format!("{flag} must name at least one dimension")));
    }
    Ok(dims)
}
