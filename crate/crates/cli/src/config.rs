//! Run configuration: a flat `key = value` file with dotted section keys.
//!
//! ```text
//! # comment
//! channel.h = 1.0
//! model = nse
//! forcing.knots = "0:-1,1:-3"
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use chanflow_core::spectral::DEFAULT_MODES;
use chanflow_core::{ChannelConfig, Error as CoreError, ForcingSignal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Nse,
    Alpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub n: usize,
    pub dt: f64,
    pub t0: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub channel: ChannelConfig,
    pub model: Model,
    pub forcing: ForcingSignal,
    pub output_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub samples: usize,
    pub times: Vec<f64>,
    /// Evaluation time for `profile`.
    pub time: f64,
    pub truncation: usize,
    pub oracle: Option<OracleConfig>,
}

/// A configuration problem, tagged with the key it concerns.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    fn new(field: &str, message: impl Into<String>) -> Self {
        Self {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.field, self.message)
        }
    }
}

impl std::error::Error for ConfigError {}

const KEYS: &[&str] = &[
    "channel.h",
    "channel.nu",
    "channel.alpha",
    "channel.pi1",
    "channel.pi2",
    "model",
    "forcing.tail",
    "forcing.knots",
    "forcing.bound",
    "output.path",
    "output.format",
    "eval.samples",
    "eval.times",
    "eval.time",
    "truncation",
    "oracle.n",
    "oracle.dt",
    "oracle.t0",
];

fn unquote(v: &str) -> &str {
    let v = v.trim();
    for q in ['"', '\''] {
        if v.len() >= 2 && v.starts_with(q) && v.ends_with(q) {
            return &v[1..v.len() - 1];
        }
    }
    v
}

fn strip_comment(line: &str) -> &str {
    let mut quote = None;
    for (i, c) in line.char_indices() {
        match (quote, c) {
            (None, '"' | '\'') => quote = Some(c),
            (Some(q), c) if c == q => quote = None,
            (None, '#') => return &line[..i],
            _ => {}
        }
    }
    line
}

fn parse_pairs(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut map = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError::new("", format!("line {}: expected `key = value`", no + 1)));
        };
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(ConfigError::new(key, "unknown key"));
        }
        if map.insert(key.to_string(), unquote(value).to_string()).is_some() {
            return Err(ConfigError::new(key, "duplicate key"));
        }
    }
    Ok(map)
}

fn number(map: &BTreeMap<String, String>, key: &str) -> Result<Option<f64>, ConfigError> {
    map.get(key)
        .map(|v| {
            let x: f64 = v
                .parse()
                .map_err(|_| ConfigError::new(key, format!("`{v}` is not a number")))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(ConfigError::new(key, "must be finite"))
            }
        })
        .transpose()
}

fn count(map: &BTreeMap<String, String>, key: &str) -> Result<Option<usize>, ConfigError> {
    map.get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| ConfigError::new(key, format!("`{v}` is not a non-negative integer")))
        })
        .transpose()
}

fn number_list(key: &str, v: &str) -> Result<Vec<f64>, ConfigError> {
    v.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let x: f64 = s
                .trim()
                .parse()
                .map_err(|_| ConfigError::new(key, format!("`{}` is not a number", s.trim())))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(ConfigError::new(key, "values must be finite"))
            }
        })
        .collect()
}

fn knots(v: &str) -> Result<Vec<(f64, f64)>, ConfigError> {
    const KEY: &str = "forcing.knots";
    v.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (t, x) = pair
                .split_once(':')
                .ok_or_else(|| ConfigError::new(KEY, format!("`{}` is not `time:value`", pair.trim())))?;
            let p = number_list(KEY, &format!("{t},{x}"))?;
            if p.len() != 2 {
                return Err(ConfigError::new(KEY, format!("`{}` is not `time:value`", pair.trim())));
            }
            Ok((p[0], p[1]))
        })
        .collect()
}

fn core_error(e: CoreError) -> ConfigError {
    let field = match &e {
        CoreError::NonPositiveParameter(name) | CoreError::NegativeParameter(name) => {
            format!("channel.{name}")
        }
        CoreError::NonFinite(name) => (*name).to_string(),
        CoreError::KnotOrder(_) | CoreError::ForcingDiscontinuity { .. } => "forcing.knots".into(),
        CoreError::ClassPViolation { .. } => "forcing.bound".into(),
        _ => String::new(),
    };
    ConfigError {
        field,
        message: e.to_string(),
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let map = parse_pairs(text)?;
        let d = ChannelConfig::default();
        let channel = ChannelConfig {
            h: number(&map, "channel.h")?.unwrap_or(d.h),
            nu: number(&map, "channel.nu")?.unwrap_or(d.nu),
            alpha: number(&map, "channel.alpha")?.unwrap_or(d.alpha),
            pi1: number(&map, "channel.pi1")?.unwrap_or(d.pi1),
            pi2: number(&map, "channel.pi2")?.unwrap_or(d.pi2),
        }
        .validate()
        .map_err(core_error)?;

        let model = match map.get("model").map(String::as_str) {
            None | Some("nse") => Model::Nse,
            Some("alpha") => Model::Alpha,
            Some(other) => {
                return Err(ConfigError::new("model", format!("`{other}` is not one of nse, alpha")))
            }
        };
        if model == Model::Alpha && channel.alpha <= 0.0 {
            return Err(ConfigError::new("channel.alpha", "alpha must be > 0 for model=alpha"));
        }

        let knot_list = map.get("forcing.knots").map(|v| knots(v)).transpose()?.unwrap_or_default();
        let tail = match (number(&map, "forcing.tail")?, knot_list.first()) {
            (Some(t), _) => t,
            (None, Some(&(_, v))) => v,
            (None, None) => return Err(ConfigError::new("forcing.tail", "missing (or give forcing.knots)")),
        };
        let mut forcing = ForcingSignal::new(tail, knot_list).map_err(core_error)?;
        if let Some(bound) = number(&map, "forcing.bound")? {
            forcing = forcing.with_class_p_bound(bound).map_err(core_error)?;
        }

        let output_format = match map.get("output.format").map(String::as_str) {
            None | Some("csv") => OutputFormat::Csv,
            Some("json") => OutputFormat::Json,
            Some(other) => {
                return Err(ConfigError::new("output.format", format!("`{other}` is not one of csv, json")))
            }
        };
        let output_path = map.get("output.path").filter(|p| !p.is_empty()).map(PathBuf::from);

        let samples = count(&map, "eval.samples")?.unwrap_or(201);
        if samples < 2 {
            return Err(ConfigError::new("eval.samples", "need at least 2 samples"));
        }
        let times = map
            .get("eval.times")
            .map(|v| number_list("eval.times", v))
            .transpose()?
            .unwrap_or_default();
        let time = number(&map, "eval.time")?.unwrap_or(0.0);
        let truncation = count(&map, "truncation")?.unwrap_or(DEFAULT_MODES);
        if truncation == 0 {
            return Err(ConfigError::new("truncation", "must be >= 1"));
        }

        let oracle = match (count(&map, "oracle.n")?, number(&map, "oracle.dt")?) {
            (None, None) => {
                if map.contains_key("oracle.t0") {
                    return Err(ConfigError::new("oracle.t0", "needs oracle.n and oracle.dt"));
                }
                None
            }
            (Some(n), Some(dt)) => {
                if n < 3 {
                    return Err(ConfigError::new("oracle.n", "must be >= 3"));
                }
                if dt <= 0.0 {
                    return Err(ConfigError::new("oracle.dt", "must be > 0"));
                }
                Some(OracleConfig {
                    n,
                    dt,
                    t0: number(&map, "oracle.t0")?,
                })
            }
            (Some(_), None) => return Err(ConfigError::new("oracle.dt", "missing (oracle.n is set)")),
            (None, Some(_)) => return Err(ConfigError::new("oracle.n", "missing (oracle.dt is set)")),
        };

        Ok(Self {
            channel,
            model,
            forcing,
            output_path,
            output_format,
            samples,
            times,
            time,
            truncation,
            oracle,
        })
    }
}
