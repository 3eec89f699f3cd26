use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::error::ServiceError;

/// Verbosity of the per-exchange log output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LogLevel {
    Error,
    #[default]
    Info,
    Debug,
}

impl LogLevel {
    pub fn as_str(&self) -> &'static str {
        match self {
            LogLevel::Error => "error",
            LogLevel::Info => "info",
            LogLevel::Debug => "debug",
        }
    }
}

impl FromStr for LogLevel {
    type Err = ServiceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "error" => Ok(LogLevel::Error),
            "info" => Ok(LogLevel::Info),
            "debug" => Ok(LogLevel::Debug),
            other => Err(ServiceError::Config(format!(
                "log level must be error, info or debug, got {other:?}"
            ))),
        }
    }
}

/// Provider configuration: where to listen, which fixture to load, optional
/// TLS material (certificate and key must come together) and logging.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ServiceConfig {
    #[serde(default = "default_listen")]
    pub listen_address: String,
    pub fixture_path: PathBuf,
    #[serde(default)]
    pub tls_certificate_path: Option<PathBuf>,
    #[serde(default)]
    pub tls_key_path: Option<PathBuf>,
    #[serde(default)]
    pub default_language_override: Option<String>,
    #[serde(default)]
    pub log_level: LogLevel,
}

fn default_listen() -> String {
    "127.0.0.1:8080".to_string()
}

impl ServiceConfig {
    pub fn new(listen_address: impl Into<String>, fixture_path: impl Into<PathBuf>) -> Self {
        ServiceConfig {
            listen_address: listen_address.into(),
            fixture_path: fixture_path.into(),
            tls_certificate_path: None,
            tls_key_path: None,
            default_language_override: None,
            log_level: LogLevel::default(),
        }
    }

    /// Reads a TOML config file and applies environment overrides.
    pub fn from_file(path: &Path) -> Result<Self, ServiceError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            ServiceError::Config(format!("cannot read config {}: {e}", path.display()))
        })?;
        let mut config: ServiceConfig = toml::from_str(&text)
            .map_err(|e| ServiceError::Config(format!("invalid config: {e}")))?;
        config.apply_env_overrides()?;
        config.validate()?;
        Ok(config)
    }

    /// `RSP_LISTEN`, `RSP_FIXTURE` and `RSP_LOG_LEVEL` take precedence over
    /// the file values.
    pub fn apply_env_overrides(&mut self) -> Result<(), ServiceError> {
        if let Ok(listen) = std::env::var("RSP_LISTEN") {
            self.listen_address = listen;
        }
        if let Ok(fixture) = std::env::var("RSP_FIXTURE") {
            self.fixture_path = PathBuf::from(fixture);
        }
        if let Ok(level) = std::env::var("RSP_LOG_LEVEL") {
            self.log_level = level.parse()?;
        }
        Ok(())
    }

    pub fn tls_enabled(&self) -> bool {
        self.tls_certificate_path.is_some()
    }

    pub fn validate(&self) -> Result<(), ServiceError> {
        if self.tls_certificate_path.is_some() != self.tls_key_path.is_some() {
            return Err(ServiceError::Config(
                "TLS certificate and key must be configured together".into(),
            ));
        }
        Ok(())
    }
}
