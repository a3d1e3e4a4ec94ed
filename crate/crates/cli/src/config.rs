//! Verification configuration: JSON config file, flag overrides, and
//! environment defaults (flag > file > env > built-in).

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

pub const MAX_COSETS_ENV: &str = "FOURFOLD_MAX_COSETS";

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Order,
    Abelianization,
    Betti,
    Form,
    Sw,
    ProofWords,
}

pub const ALL_CHECKS: [Check; 6] = [
    Check::Order,
    Check::Abelianization,
    Check::Betti,
    Check::Form,
    Check::Sw,
    Check::ProofWords,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Resolved verification run configuration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationConfig {
    pub n_range: (u64, u64),
    pub p_range: (u64, u64),
    pub max_cosets: usize,
    pub checks: Vec<Check>,
    pub format: OutputFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub emit_gap: Option<String>,
    #[serde(default)]
    pub allow_inconclusive: bool,
}

/// The config file: every field optional, flags override.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub n_range: Option<(u64, u64)>,
    pub p_range: Option<(u64, u64)>,
    pub max_cosets: Option<usize>,
    pub checks: Option<Vec<Check>>,
    pub format: Option<OutputFormat>,
    pub emit_gap: Option<String>,
    pub allow_inconclusive: Option<bool>,
}

/// Parses a range flag: either `a..b` (inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<(u64, u64)> {
    let text = text.trim();
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u64 = lo.trim().parse().context("range start")?;
        let hi: u64 = hi.trim().parse().context("range end")?;
        if hi < lo {
            bail!("empty range {text:?}");
        }
        Ok((lo, hi))
    } else {
        let v: u64 = text.parse().with_context(|| format!("range {text:?}"))?;
        Ok((v, v))
    }
}

pub struct Overrides {
    pub n: Option<(u64, u64)>,
    pub p: Option<(u64, u64)>,
    pub max_cosets: Option<usize>,
    pub checks: Vec<Check>,
    pub format: Option<OutputFormat>,
    pub emit_gap: Option<String>,
    pub allow_inconclusive: bool,
}

pub fn resolve(file: Option<ConfigFile>, flags: Overrides) -> Result<VerificationConfig> {
    let file = file.unwrap_or_default();
    let env_max = std::env::var(MAX_COSETS_ENV)
        .ok()
        .map(|v| {
            v.parse::<usize>()
                .with_context(|| format!("{MAX_COSETS_ENV}={v:?}"))
        })
        .transpose()?;
    let checks = if !flags.checks.is_empty() {
        let mut checks = flags.checks;
        checks.sort();
        checks.dedup();
        checks
    } else if let Some(checks) = file.checks {
        let mut checks = checks;
        checks.sort();
        checks.dedup();
        checks
    } else {
        ALL_CHECKS.to_vec()
    };
    let config = VerificationConfig {
        n_range: flags.n.or(file.n_range).unwrap_or((1, 5)),
        p_range: flags.p.or(file.p_range).unwrap_or((1, 6)),
        max_cosets: flags
            .max_cosets
            .or(file.max_cosets)
            .or(env_max)
            .unwrap_or(fourfold_core::coset::DEFAULT_MAX_COSETS),
        checks,
        format: flags.format.or(file.format).unwrap_or(OutputFormat::Text),
        emit_gap: flags.emit_gap.or(file.emit_gap),
        allow_inconclusive: flags.allow_inconclusive || file.allow_inconclusive.unwrap_or(false),
    };
    if config.checks.is_empty() {
        bail!("the checks set must not be empty");
    }
    if config.max_cosets < 1 {
        bail!("max_cosets must be at least 1");
    }
    if config.n_range.1 < config.n_range.0 || config.p_range.1 < config.p_range.0 {
        bail!("empty parameter range");
    }
    if config.n_range.0 < 1 {
        bail!("n must be at least 1");
    }
    Ok(config)
}
