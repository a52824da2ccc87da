use std::convert::Infallible;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::sse::{Event, KeepAlive, Sse};
use axum::response::IntoResponse;
use axum::routing::{get, post};
use axum::{Json, Router};
use futures::stream::{self, Stream};
use paretoplace_core::selection::RoundOverrides;
use paretoplace_core::Session;
use serde::de::DeserializeOwned;
use tokio::sync::broadcast::error::RecvError;

use crate::error::ApiError;
use crate::payload::{
    AdaptResponse, CreateSessionRequest, FrontResponse, SelectRequest, SelectResponse, SessionEvent,
    SessionView,
};
use crate::state::AppState;

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/adapt", post(adapt))
        .route("/sessions/{id}/front", get(front))
        .route("/sessions/{id}/select", post(select))
        .route("/sessions/{id}/events", get(events))
        .with_state(state)
}

/// Parses a JSON body; an empty body means the type's default.
fn parse_body<T: DeserializeOwned + Default>(body: &Bytes) -> Result<T, ApiError> {
    if body.iter().all(u8::is_ascii_whitespace) {
        return Ok(T::default());
    }
    serde_json::from_slice(body).map_err(|e| ApiError::BadBody(e.to_string()))
}

async fn create_session(
    State(state): State<AppState>,
    body: Bytes,
) -> Result<impl IntoResponse, ApiError> {
    let req: CreateSessionRequest = parse_body(&body)?;
    let id = uuid::Uuid::new_v4().simple().to_string();
    let session = Session::new(id, req.pose, req.config)?;
    let view = SessionView::from(&session);
    state.insert(session)?;
    Ok((StatusCode::CREATED, Json(view)))
}

async fn get_session(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    let slot = state.slot(&id)?;
    let view = SessionView::from(&*slot.lock());
    Ok(Json(view))
}

async fn adapt(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<AdaptResponse>, ApiError> {
    let overrides: RoundOverrides = parse_body(&body)?;
    let slot = state.slot(&id)?;
    let _guard = slot.begin_round(&id)?;
    let pending = slot.lock().prepare_round(&overrides)?;
    let number = pending.number;

    let worker = slot.clone();
    let round = tokio::task::spawn_blocking(move || {
        pending.run(|p| {
            worker.emit(SessionEvent::Progress {
                round: number,
                generation: p.generation,
                generations: p.generations,
                rank0_size: p.rank0_size,
            })
        })
    })
    .await
    .map_err(|e| ApiError::Task(e.to_string()))??;

    let response = {
        let mut session = slot.lock();
        session.push_round(round)?;
        state.store().save(&session)?;
        let latest = session.latest_round().expect("round just pushed");
        AdaptResponse::new(&session.problem.objectives, latest)
    };
    slot.emit(SessionEvent::Round { round: number });
    Ok(Json(response))
}

async fn front(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<FrontResponse>, ApiError> {
    let slot = state.slot(&id)?;
    let response = FrontResponse::new(&slot.lock());
    Ok(Json(response))
}

async fn select(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SelectResponse>, ApiError> {
    let req: SelectRequest =
        serde_json::from_slice(&body).map_err(|e| ApiError::BadBody(e.to_string()))?;
    let slot = state.slot(&id)?;
    // Constraints added now would not apply to the round being computed.
    let _guard = slot.begin_round(&id)?;
    let response = {
        let mut session = slot.lock();
        let constraints = session.apply_selection(&req.candidate_id)?.to_vec();
        state.store().save(&session)?;
        SelectResponse {
            round: session.current_round_number(),
            selection: req.candidate_id.clone(),
            constraints,
        }
    };
    slot.emit(SessionEvent::Selection {
        round: response.round,
        candidate_id: req.candidate_id,
    });
    Ok(Json(response))
}

async fn events(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Sse<impl Stream<Item = Result<Event, Infallible>>>, ApiError> {
    let rx = state.slot(&id)?.subscribe();
    let stream = stream::unfold(rx, |mut rx| async move {
        loop {
            match rx.recv().await {
                Ok(event) => {
                    let sse = Event::default()
                        .event(event.name())
                        .json_data(&event)
                        .expect("events serialize");
                    return Some((Ok(sse), rx));
                }
                // A slow subscriber only misses progress ticks.
                Err(RecvError::Lagged(_)) => continue,
                Err(RecvError::Closed) => return None,
            }
        }
    });
    Ok(Sse::new(stream).keep_alive(KeepAlive::default()))
}
