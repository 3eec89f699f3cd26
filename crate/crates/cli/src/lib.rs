//! The `rsp` command-line tool: serve a provider from a fixture, explore
//! and edit tables over the protocol, and run the conformance corpus.
//!
//! Exit codes: 0 success, 1 usage or local configuration error, 2 remote
//! or protocol error, 3 conformance failures.

pub mod args;
pub mod conformance;
pub mod pairs;
pub mod render;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

use rsp_client::{Client, ClientConfig, ClientError};
use rsp_service::ServiceConfig;

use crate::args::{Cli, Command, ConnArgs, Format, Op};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REMOTE: i32 = 2;
pub const EXIT_CONFORMANCE: i32 = 3;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(error) => {
            let informational = matches!(
                error.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = error.print();
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.exit_code
        }
    }
}

struct Failure {
    exit_code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        exit_code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<ClientError> for Failure {
    fn from(error: ClientError) -> Self {
        Failure {
            exit_code: EXIT_REMOTE,
            message: error.to_string(),
        }
    }
}

fn connect(conn: &ConnArgs) -> Result<Client, Failure> {
    let mut config = ClientConfig::new(&conn.url, &conn.user, &conn.password);
    config.language = conn.lang.clone();
    config.accept_invalid_certs = conn.insecure;
    Client::new(config).map_err(|e| usage(e.to_string()))
}

#[allow(clippy::too_many_arguments)]
fn execute(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Serve {
            config,
            fixture,
            listen,
            tls_cert,
            tls_key,
            lang,
            log_level,
        } => {
            let mut service_config = match (&config, &fixture) {
                (Some(path), _) => {
                    ServiceConfig::from_file(path).map_err(|e| usage(e.to_string()))?
                }
                (None, Some(fixture)) => ServiceConfig::new("127.0.0.1:8080", fixture),
                (None, None) => return Err(usage("either --config or --fixture is required")),
            };
            if let Some(fixture) = fixture {
                service_config.fixture_path = fixture;
            }
            if let Some(listen) = listen {
                service_config.listen_address = listen;
            }
            if let Some(cert) = tls_cert {
                service_config.tls_certificate_path = Some(cert);
            }
            if let Some(key) = tls_key {
                service_config.tls_key_path = Some(key);
            }
            if let Some(lang) = lang {
                service_config.default_language_override = Some(lang);
            }
            if let Some(level) = log_level {
                service_config.log_level = level.parse().map_err(|e: rsp_service::ServiceError| {
                    usage(e.to_string())
                })?;
            }
            if config.is_none() {
                service_config
                    .apply_env_overrides()
                    .map_err(|e| usage(e.to_string()))?;
            }
            service_config.validate().map_err(|e| usage(e.to_string()))?;

            init_logging(service_config.log_level);
            let handle =
                rsp_service::serve(&service_config).map_err(|e| usage(e.to_string()))?;
            println!("listening on {}", handle.local_addr());
            loop {
                std::thread::sleep(std::time::Duration::from_secs(3600));
            }
        }
        Command::Headers { conn } => {
            let headers = connect(&conn)?.fetch_headers()?;
            print!("{}", render::render_headers(&headers));
            Ok(EXIT_OK)
        }
        Command::Read {
            conn,
            table,
            filter,
            order,
            skip,
            take,
            format,
        } => {
            let message = connect(&conn)?.fetch_table(
                &table,
                skip,
                take,
                filter.as_deref(),
                order.as_deref(),
            )?;
            let rendered = render::render_table_message(&message, format);
            if format == Format::Json {
                println!("{rendered}");
            } else {
                print!("{rendered}");
            }
            Ok(EXIT_OK)
        }
        Command::Submit {
            conn,
            table,
            op,
            set,
        } => {
            let (names, data) = pairs::submit_from_pairs(&set).map_err(usage)?;
            let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let response = connect(&conn)?.submit(&table, op.code(), &name_refs, &data)?;
            match (op, response.identity) {
                (Op::Insert, Some(identity)) => println!("inserted row {identity}"),
                _ => println!("ok"),
            }
            Ok(EXIT_OK)
        }
        Command::Conformance {
            url,
            corpus,
            evolution,
        } => {
            let report =
                conformance::run_conformance(&url, &corpus, evolution).map_err(usage)?;
            print!("{}", report.render());
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_CONFORMANCE
            })
        }
    }
}

fn init_logging(level: rsp_service::LogLevel) {
    let max = match level {
        rsp_service::LogLevel::Error => tracing_subscriber::filter::LevelFilter::ERROR,
        rsp_service::LogLevel::Info => tracing_subscriber::filter::LevelFilter::INFO,
        rsp_service::LogLevel::Debug => tracing_subscriber::filter::LevelFilter::DEBUG,
    };
    let _ = tracing_subscriber::fmt()
        .with_max_level(max)
        .with_writer(std::io::stderr)
        .try_init();
}
