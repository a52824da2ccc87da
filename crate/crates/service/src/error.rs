use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use paretoplace_core::Error as CoreError;
use serde::Serialize;

/// Wire format of every error response.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorBody {
    pub code: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub current_round: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum ApiError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("malformed request body: {0}")]
    BadBody(String),

    #[error("session {0} is already running an adaptation round")]
    Busy(String),

    #[error("background task failed: {0}")]
    Task(String),
}

impl ApiError {
    pub fn status_and_body(&self) -> (StatusCode, ErrorBody) {
        let message = self.to_string();
        let body = |code, field: Option<String>, current_round| ErrorBody {
            code,
            message: message.clone(),
            field,
            current_round,
        };
        match self {
            ApiError::BadBody(_) => (StatusCode::UNPROCESSABLE_ENTITY, body("validation", None, None)),
            ApiError::Busy(_) => (StatusCode::CONFLICT, body("busy", None, None)),
            ApiError::Task(_) => (StatusCode::INTERNAL_SERVER_ERROR, body("internal", None, None)),
            ApiError::Core(e) => match e {
                CoreError::Validation { field, .. } => {
                    (StatusCode::UNPROCESSABLE_ENTITY, body("validation", Some(field.clone()), None))
                }
                CoreError::Json(_) | CoreError::OutOfBounds { .. } => {
                    (StatusCode::UNPROCESSABLE_ENTITY, body("validation", None, None))
                }
                CoreError::Infeasible(_) => (StatusCode::UNPROCESSABLE_ENTITY, body("infeasible", None, None)),
                CoreError::SessionNotFound(_) => (StatusCode::NOT_FOUND, body("not_found", None, None)),
                CoreError::StaleSelection { current_round, .. } => {
                    (StatusCode::CONFLICT, body("stale_selection", None, Some(*current_round)))
                }
                CoreError::NoOpenRound => (StatusCode::CONFLICT, body("no_round", None, Some(0))),
                _ => (StatusCode::INTERNAL_SERVER_ERROR, body("internal", None, None)),
            },
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let (status, body) = self.status_and_body();
        (status, Json(body)).into_response()
    }
}
