use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rsp",
    version,
    about = "Relational Schema Protocol provider, client and conformance tool"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a provider from a fixture file.
    Serve {
        /// TOML config file; flags below override its values.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Fixture file with schema, rows, users and grants.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// host:port to listen on.
        #[arg(long)]
        listen: Option<String>,
        /// TLS certificate in PEM format (requires --tls-key).
        #[arg(long)]
        tls_cert: Option<PathBuf>,
        /// TLS private key in PEM format (requires --tls-cert).
        #[arg(long)]
        tls_key: Option<PathBuf>,
        /// Override the fixture's default localization language.
        #[arg(long)]
        lang: Option<String>,
        /// Log verbosity: error, info or debug.
        #[arg(long)]
        log_level: Option<String>,
    },
    /// List the tables the user may read.
    Headers {
        #[command(flatten)]
        conn: ConnArgs,
    },
    /// Read a table: filtered, ordered and paginated.
    Read {
        #[command(flatten)]
        conn: ConnArgs,
        #[arg(long)]
        table: String,
        /// Filter expression, e.g. "Age >= 30 AND Name LIKE 'A%'".
        #[arg(long)]
        filter: Option<String>,
        /// Order expression, e.g. "Age DESC, Name".
        #[arg(long)]
        order: Option<String>,
        /// Rows to skip.
        #[arg(long, default_value_t = 0)]
        skip: u64,
        /// Rows to return; 0 means all remaining.
        #[arg(long, default_value_t = 0)]
        take: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Insert, update or delete one row.
    Submit {
        #[command(flatten)]
        conn: ConnArgs,
        #[arg(long)]
        table: String,
        #[arg(long, value_enum)]
        op: Op,
        /// Column assignments: `Col=value`, or `Col:=null` for null.
        #[arg(value_name = "COL=VALUE", required = true)]
        set: Vec<String>,
    },
    /// Replay a frozen request/response corpus against an endpoint.
    Conformance {
        /// Provider base URL.
        #[arg(long)]
        url: String,
        /// Corpus directory (one subdirectory per case).
        #[arg(long)]
        corpus: PathBuf,
        /// Evolution mode: require only matching status and a decodable
        /// body, for replays against an evolved schema.
        #[arg(long)]
        evolution: bool,
    },
}

#[derive(Debug, Args)]
pub struct ConnArgs {
    /// Provider base URL, e.g. http://127.0.0.1:8080.
    #[arg(long)]
    pub url: String,
    #[arg(long)]
    pub user: String,
    /// Password; prefer the RSP_PASSWORD environment variable.
    #[arg(long, env = "RSP_PASSWORD", hide_env_values = true)]
    pub password: String,
    /// Localization language for titles.
    #[arg(long)]
    pub lang: Option<String>,
    /// Accept self-signed provider certificates (desk testing only).
    #[arg(long)]
    pub insecure: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Insert,
    Update,
    Delete,
}

impl Op {
    pub fn code(self) -> i64 {
        match self {
            Op::Insert => 1,
            Op::Update => 2,
            Op::Delete => 3,
        }
    }
}
