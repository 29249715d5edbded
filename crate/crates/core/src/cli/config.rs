use std::collections::BTreeMap;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::model::{PhysicalParams, SystemKind};

use super::args::{Format, GlobalArgs, SystemArg, SystemArgs};
use super::CliError;

/// Tolerances the CLI understands, with their defaults.
pub const TOLERANCES: &[(&str, f64)] = &[
    ("kummer", 1e-14),
    ("root", 1e-12),
    ("shoot", 1e-10),
    ("decay", 1e-12),
];

const KEYS: &[&str] = &[
    "hbar", "mass", "format", "out", "system", "alpha", "omega", "M", "n", "E0", "E", "g", "g0",
    "gamma", "phi", "branch", "ladder", "closed", "grid", "spacing", "r0",
];

/// Contents of a `--config` file.
///
/// One `key = value` pair per line; blank lines and lines starting with `#`
/// are skipped. Keys are the long flag names (`M`, `E0`, `alpha`, …);
/// tolerances use `tol.NAME`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", lineno + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            let known = KEYS.contains(&k)
                || k.strip_prefix("tol.").is_some_and(|n| TOLERANCES.iter().any(|(t, _)| *t == n));
            if !known {
                return Err(CliError::Usage(format!("config line {}: unknown key `{k}`", lineno + 1)));
            }
            values.insert(k.to_string(), v.to_string());
        }
        Ok(Self { values })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// The flag value if given, else the parsed file value.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => s
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("config value for `{key}` is not valid: {s}"))),
        }
    }

    pub fn flag(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        if flag {
            return Ok(true);
        }
        match self.raw(key) {
            None => Ok(false),
            Some("true") => Ok(true),
            Some("false") => Ok(false),
            Some(s) => Err(CliError::Usage(format!("`{key}` must be true or false, got {s}"))),
        }
    }

    pub fn pick_enum<T: clap::ValueEnum>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.raw(key) {
            None => Ok(None),
            Some(s) => T::from_str(s, true)
                .map(Some)
                .map_err(|_| CliError::Usage(format!("config value for `{key}` is not valid: {s}"))),
        }
    }
}

/// Settings shared by every command after merging flags over the config file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub units: PhysicalParams<f64>,
    pub system: SystemKind<f64>,
    pub m: f64,
    pub n_range: RangeInclusive<i64>,
    pub e0: Option<f64>,
    pub tolerances: BTreeMap<String, f64>,
    pub output_format: Format,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn tol(&self, name: &str) -> f64 {
        self.tolerances[name]
    }
}

pub(crate) fn units(global: &GlobalArgs, file: &ConfigFile) -> Result<PhysicalParams<f64>, CliError> {
    let hbar = file.pick(global.hbar, "hbar")?.unwrap_or(1.0);
    let mass = file.pick(global.mass, "mass")?.unwrap_or(1.0);
    PhysicalParams::new(mass, hbar).map_err(|e| CliError::Usage(e.to_string()))
}

pub(crate) fn tolerances(global: &GlobalArgs, file: &ConfigFile) -> Result<BTreeMap<String, f64>, CliError> {
    let mut out: BTreeMap<String, f64> = TOLERANCES.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let parse = |name: &str, value: &str| -> Result<(String, f64), CliError> {
        if !TOLERANCES.iter().any(|(t, _)| *t == name) {
            let names: Vec<&str> = TOLERANCES.iter().map(|(t, _)| *t).collect();
            return Err(CliError::Usage(format!("unknown tolerance `{name}` (known: {})", names.join(", "))));
        }
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("tolerance `{name}` is not a number: {value}")))?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(CliError::Usage(format!("tolerance `{name}` must be positive")));
        }
        Ok((name.to_string(), v))
    };
    for (k, v) in &file.values {
        if let Some(name) = k.strip_prefix("tol.") {
            let (k, v) = parse(name, v)?;
            out.insert(k, v);
        }
    }
    for item in &global.tol {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--tol expects NAME=VALUE, got {item}")))?;
        let (k, v) = parse(name.trim(), value)?;
        out.insert(k, v);
    }
    Ok(out)
}

pub(crate) fn system(args: &SystemArgs, file: &ConfigFile) -> Result<SystemKind<f64>, CliError> {
    let which = file
        .pick_enum(args.system, "system")?
        .ok_or_else(|| CliError::Usage("--system is required (free, oscillator or coulomb)".into()))?;
    let bad = |e: crate::Error| CliError::Usage(e.to_string());
    Ok(match which {
        SystemArg::Free => SystemKind::Free,
        SystemArg::Oscillator => {
            SystemKind::oscillator(file.pick(args.omega, "omega")?.unwrap_or(1.0)).map_err(bad)?
        }
        SystemArg::Coulomb => SystemKind::coulomb(file.pick(args.alpha, "alpha")?.unwrap_or(1.0)).map_err(bad)?,
    })
}

/// `A..B` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, CliError> {
    let bad = || CliError::Usage(format!("level range must look like A..B, got `{s}`"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let a: i64 = a.parse().map_err(|_| bad())?;
    let b: i64 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

pub(crate) fn build(
    global: &GlobalArgs,
    file: &ConfigFile,
    args: &SystemArgs,
    n: Option<String>,
    e0: Option<f64>,
) -> Result<RunConfig, CliError> {
    let n_range = match file.pick(n, "n")? {
        Some(s) => parse_range(&s)?,
        None => 0..=3,
    };
    let m = file.pick(args.m, "M")?.unwrap_or(0.0);
    if !m.is_finite() {
        return Err(CliError::Usage("M must be finite".into()));
    }
    Ok(RunConfig {
        units: units(global, file)?,
        system: system(args, file)?,
        m,
        n_range,
        e0: file.pick(e0, "E0")?,
        tolerances: tolerances(global, file)?,
        output_format: file.pick_enum(global.format, "format")?.unwrap_or(Format::Json),
        output_path: file.pick(global.out.clone(), "out")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_grammar() {
        let f = ConfigFile::parse("# units\nhbar = 2\n\nM=1.5\ntol.root = 1e-9\n").unwrap();
        assert_eq!(f.pick::<f64>(None, "hbar").unwrap(), Some(2.0));
        assert_eq!(f.pick(Some(3.0), "hbar").unwrap(), Some(3.0));
        assert_eq!(f.pick::<f64>(None, "M").unwrap(), Some(1.5));
        assert!(ConfigFile::parse("bogus = 1").is_err());
        assert!(ConfigFile::parse("tol.bogus = 1").is_err());
        assert!(ConfigFile::parse("hbar 1").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..3").unwrap(), 0..=3);
        assert_eq!(parse_range("-2..2").unwrap(), -2..=2);
        assert_eq!(parse_range("-2..=-1").unwrap(), -2..=-1);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
