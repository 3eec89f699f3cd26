use std::net::SocketAddr;
use std::sync::{Arc, RwLock};
use std::time::Duration;

use axum_server::tls_rustls::RustlsConfig;
use axum_server::Handle;

use rsp_engine::load_fixture_file;

use crate::app::build_router;
use crate::config::ServiceConfig;
use crate::error::ServiceError;

/// A running provider. Dropping the handle shuts the listener down; call
/// [`ServiceHandle::shutdown`] for a graceful stop that waits for in-flight
/// requests.
pub struct ServiceHandle {
    addr: SocketAddr,
    handle: Handle,
    thread: Option<std::thread::JoinHandle<()>>,
}

impl ServiceHandle {
    /// The actual bound address (useful with port 0).
    pub fn local_addr(&self) -> SocketAddr {
        self.addr
    }

    /// Graceful shutdown: stops accepting, lets in-flight requests finish,
    /// then joins the server thread.
    pub fn shutdown(mut self) {
        self.handle
            .graceful_shutdown(Some(Duration::from_secs(10)));
        if let Some(thread) = self.thread.take() {
            let _ = thread.join();
        }
    }
}

impl Drop for ServiceHandle {
    fn drop(&mut self) {
        self.handle.shutdown();
        if let Some(thread) = self.thread.take() {
            let _ = thread.join();
        }
    }
}

/// Loads the fixture, binds the listener and starts serving on a background
/// thread. Every startup failure — unreadable fixture, busy port, bad TLS
/// material — surfaces here, before a handle is returned.
pub fn serve(config: &ServiceConfig) -> Result<ServiceHandle, ServiceError> {
    config.validate()?;

    let mut state =
        load_fixture_file(&config.fixture_path).map_err(|e| ServiceError::Fixture(e.0))?;
    if let Some(language) = &config.default_language_override {
        state.default_language = language.clone();
    }

    let listener = std::net::TcpListener::bind(&config.listen_address).map_err(|e| {
        ServiceError::Startup(format!("cannot bind {}: {e}", config.listen_address))
    })?;
    listener
        .set_nonblocking(true)
        .map_err(|e| ServiceError::Startup(e.to_string()))?;
    let addr = listener
        .local_addr()
        .map_err(|e| ServiceError::Startup(e.to_string()))?;

    let runtime = tokio::runtime::Builder::new_multi_thread()
        .worker_threads(2)
        .enable_all()
        .build()
        .map_err(|e| ServiceError::Startup(e.to_string()))?;

    let tls = match (&config.tls_certificate_path, &config.tls_key_path) {
        (Some(cert), Some(key)) => {
            let _ = rustls::crypto::ring::default_provider().install_default();
            let tls = runtime
                .block_on(RustlsConfig::from_pem_file(cert, key))
                .map_err(|e| ServiceError::Startup(format!("bad TLS material: {e}")))?;
            Some(tls)
        }
        _ => {
            tracing::warn!(
                "serving plaintext HTTP on {addr}; HTTPS is strongly recommended for production"
            );
            None
        }
    };

    let app = build_router(Arc::new(RwLock::new(state)));
    let handle = Handle::new();
    let server_handle = handle.clone();
    let thread = std::thread::spawn(move || {
        runtime.block_on(async move {
            let service = app.into_make_service();
            let result = match tls {
                Some(tls) => {
                    axum_server::from_tcp_rustls(listener, tls)
                        .handle(server_handle)
                        .serve(service)
                        .await
                }
                None => {
                    axum_server::from_tcp(listener)
                        .handle(server_handle)
                        .serve(service)
                        .await
                }
            };
            if let Err(e) = result {
                tracing::error!("server stopped: {e}");
            }
        });
    });

    tracing::info!(%addr, tls = config.tls_enabled(), "provider listening");
    Ok(ServiceHandle {
        addr,
        handle,
        thread: Some(thread),
    })
}
