//! HTTP front end for interactive placement sessions.
//!
//! Routes:
//! `POST /sessions`, `GET /sessions/{id}`, `POST /sessions/{id}/adapt`,
//! `GET /sessions/{id}/front`, `POST /sessions/{id}/select`,
//! `GET /sessions/{id}/events` (server-sent events).

mod error;
pub mod payload;
mod routes;
mod state;

use std::net::SocketAddr;
use std::path::PathBuf;

pub use error::{ApiError, ErrorBody};
pub use routes::router;
pub use state::AppState;

use paretoplace_core::selection::SessionStore;

/// Router over a session store in `data_dir`.
pub fn app(data_dir: impl Into<PathBuf>) -> paretoplace_core::Result<axum::Router> {
    Ok(router(AppState::new(SessionStore::open(data_dir)?)))
}

/// Binds `addr` and serves until ctrl-c.
pub async fn serve(addr: SocketAddr, data_dir: impl Into<PathBuf>) -> std::io::Result<()> {
    let app = app(data_dir).map_err(std::io::Error::other)?;
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, app)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
