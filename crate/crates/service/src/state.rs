use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex, MutexGuard};

use paretoplace_core::selection::SessionStore;
use paretoplace_core::Session;
use tokio::sync::broadcast;

use crate::error::ApiError;
use crate::payload::SessionEvent;

const EVENT_CAPACITY: usize = 256;

/// One live session: the session itself, the in-flight flag and its event
/// channel.
pub struct Slot {
    session: Mutex<Session>,
    busy: AtomicBool,
    events: broadcast::Sender<SessionEvent>,
}

impl Slot {
    fn new(session: Session) -> Self {
        let (events, _) = broadcast::channel(EVENT_CAPACITY);
        Self {
            session: Mutex::new(session),
            busy: AtomicBool::new(false),
            events,
        }
    }

    pub fn lock(&self) -> MutexGuard<'_, Session> {
        // A panic while holding the lock leaves a consistent session: every
        // mutation is a single push or bounds update.
        self.session.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn subscribe(&self) -> broadcast::Receiver<SessionEvent> {
        self.events.subscribe()
    }

    pub fn emit(&self, event: SessionEvent) {
        // No subscribers is fine.
        let _ = self.events.send(event);
    }

    /// Marks the session busy until the guard drops; `Busy` if it already is.
    pub fn begin_round(self: &Arc<Self>, id: &str) -> Result<RoundGuard, ApiError> {
        if self.busy.swap(true, Ordering::AcqRel) {
            return Err(ApiError::Busy(id.to_owned()));
        }
        Ok(RoundGuard(Arc::clone(self)))
    }
}

pub struct RoundGuard(Arc<Slot>);

impl Drop for RoundGuard {
    fn drop(&mut self) {
        self.0.busy.store(false, Ordering::Release);
    }
}

/// Shared state behind the router.
#[derive(Clone)]
pub struct AppState {
    inner: Arc<Inner>,
}

struct Inner {
    store: SessionStore,
    slots: Mutex<HashMap<String, Arc<Slot>>>,
}

impl AppState {
    pub fn new(store: SessionStore) -> Self {
        Self {
            inner: Arc::new(Inner {
                store,
                slots: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn store(&self) -> &SessionStore {
        &self.inner.store
    }

    fn slots(&self) -> MutexGuard<'_, HashMap<String, Arc<Slot>>> {
        self.inner.slots.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// Persists a new session and registers it.
    pub fn insert(&self, session: Session) -> Result<Arc<Slot>, ApiError> {
        self.store().save(&session)?;
        let id = session.id.clone();
        let slot = Arc::new(Slot::new(session));
        self.slots().insert(id, Arc::clone(&slot));
        Ok(slot)
    }

    /// Live slot for `id`, loading it from disk on first access.
    pub fn slot(&self, id: &str) -> Result<Arc<Slot>, ApiError> {
        if let Some(slot) = self.slots().get(id) {
            return Ok(Arc::clone(slot));
        }
        let session = self.store().load(id)?;
        let mut slots = self.slots();
        // Another request may have loaded it meanwhile.
        let slot = slots
            .entry(id.to_owned())
            .or_insert_with(|| Arc::new(Slot::new(session)));
        Ok(Arc::clone(slot))
    }
}
