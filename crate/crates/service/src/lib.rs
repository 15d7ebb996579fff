//! Stateless local HTTP front end over the analysis crates.
//!
//! Endpoints: `/analyze`, `/osg`, `/mopt`, `/scan`, `/health`. Every
//! response is a pure function of its query string.

mod analysis;

use std::net::SocketAddr;

use axum::extract::rejection::QueryRejection;
use axum::extract::Query;
use axum::http::{HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use psp_core::{Basis, Error};
use psp_formulas::{maximal_set, mopt, osg0, osg1, OsgRow};
use psp_search::{best_osg, scan_osg1_cover, Guard};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tower_http::cors::{AllowOrigin, CorsLayer};

pub use analysis::{analyze, Analysis};

pub const DEFAULT_PORT: u16 = 7311;
pub const MAX_A3: i64 = 100_000;
pub const MAX_N: i64 = 10_000;
/// `/scan` has one row per `k`, so it shares the `n` cap.
pub const MAX_S: i64 = MAX_N;

#[derive(Debug)]
pub struct ApiError(StatusCode, String);

impl ApiError {
    fn bad(msg: impl Into<String>) -> Self {
        ApiError(StatusCode::BAD_REQUEST, msg.into())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({ "error": self.1 }))).into_response()
    }
}

impl From<QueryRejection> for ApiError {
    fn from(r: QueryRejection) -> Self {
        ApiError::bad(r.body_text())
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidBasis { .. } => StatusCode::UNPROCESSABLE_ENTITY,
            Error::Range { .. } | Error::Rejected(_) => StatusCode::UNPROCESSABLE_ENTITY,
            Error::Overflow(_) => StatusCode::PAYLOAD_TOO_LARGE,
            Error::Inconsistent(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError(code, e.to_string())
    }
}

type ApiResult<T> = std::result::Result<Json<T>, ApiError>;

fn positive(name: &str, v: i64) -> Result<i64, ApiError> {
    if v < 1 {
        return Err(ApiError::bad(format!("{name} must be a positive integer, got {v}")));
    }
    Ok(v)
}

fn cap(name: &str, v: i64, max: i64) -> Result<i64, ApiError> {
    if v > max {
        return Err(ApiError(StatusCode::PAYLOAD_TOO_LARGE, format!("{name} = {v} exceeds the limit {max}")));
    }
    Ok(v)
}

#[derive(Debug, Deserialize)]
pub struct AnalyzeParams {
    pub a2: i64,
    pub a3: i64,
    pub n: i64,
    pub s: Option<i64>,
    pub from: Option<i64>,
    pub to: Option<i64>,
}

async fn get_analyze(q: Result<Query<AnalyzeParams>, QueryRejection>) -> ApiResult<Analysis> {
    let Query(q) = q?;
    let (a2, a3, n) = (positive("a2", q.a2)?, positive("a3", q.a3)?, positive("n", q.n)?);
    let basis = Basis::new(a2, a3)?;
    cap("a3", a3, MAX_A3)?;
    cap("n", n, MAX_N)?;
    let s = q.s.map(|s| positive("s", s).and_then(|s| cap("s", s, MAX_S))).transpose()?;
    let window = match (q.from, q.to) {
        (None, None) => None,
        (f, t) => {
            let (f, t) = (f.unwrap_or(0), t.unwrap_or(2 * a3));
            if t - f > 4 * MAX_A3 {
                return Err(ApiError(StatusCode::PAYLOAD_TOO_LARGE, format!("window {f}..{t} too wide")));
            }
            Some((f, t))
        }
    };
    Ok(Json(analyze(&basis, n, s, window)?))
}

#[derive(Debug, Deserialize)]
pub struct OsgParams {
    pub n: i64,
    pub p: i64,
}

#[derive(Debug, Serialize)]
struct OsgResponse {
    n: i64,
    p: i64,
    a2: i64,
    a3: i64,
    y: i64,
    /// Every generator of that length, the first repeated above.
    ties: Vec<OsgRow>,
}

async fn get_osg(q: Result<Query<OsgParams>, QueryRejection>) -> ApiResult<OsgResponse> {
    let Query(q) = q?;
    let n = positive("n", q.n)?;
    if q.p < 0 {
        return Err(ApiError::bad(format!("p must be non-negative, got {}", q.p)));
    }
    let ties = match q.p {
        0 => osg0(cap("n", n, MAX_N)?)?,
        1 => vec![osg1(cap("n", n, MAX_N)?)?],
        p => {
            // no closed form: exhaustive search, desk-scale only
            let n = cap("n", n, Guard::default().n_max)?;
            let best = best_osg(n, p)?.ok_or_else(|| ApiError(StatusCode::NOT_FOUND, format!("no SG({n},{p})")))?;
            best.bases.iter().map(|&(b, y)| OsgRow { n, a2: b.a2, a3: b.a3, y }).collect()
        }
    };
    let first = ties[0];
    Ok(Json(OsgResponse { n, p: q.p, a2: first.a2, a3: first.a3, y: first.y, ties }))
}

#[derive(Debug, Deserialize)]
pub struct SParams {
    pub s: i64,
}

async fn get_mopt(q: Result<Query<SParams>, QueryRejection>) -> ApiResult<Value> {
    let Query(q) = q?;
    let s = cap("s", positive("s", q.s)?, MAX_S)?;
    if s < 18 {
        return Err(ApiError(StatusCode::RANGE_NOT_SATISFIABLE, format!("s = {s}: closed forms hold for s >= 18")));
    }
    let row = mopt(s)?;
    let set = maximal_set(s)?;
    let mut v = serde_json::to_value(row).map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    v["basis"] = json!(set.basis());
    Ok(Json(v))
}

async fn get_scan(q: Result<Query<SParams>, QueryRejection>) -> ApiResult<psp_search::Scan> {
    let Query(q) = q?;
    let s = cap("s", positive("s", q.s)?, MAX_S)?;
    Ok(Json(scan_osg1_cover(s, None)?))
}

async fn get_health() -> Json<Value> {
    Json(json!({ "status": "ok" }))
}

fn is_local_origin(origin: &HeaderValue) -> bool {
    let Ok(o) = origin.to_str() else { return false };
    let host = o.split_once("://").map_or(o, |(_, h)| h);
    let host = host.rsplit_once(':').map_or(host, |(h, port)| if port.chars().all(|c| c.is_ascii_digit()) { h } else { host });
    matches!(host, "localhost" | "127.0.0.1" | "[::1]")
}

pub fn router() -> Router {
    let cors = CorsLayer::new().allow_origin(AllowOrigin::predicate(|o, _| is_local_origin(o)));
    Router::new()
        .route("/analyze", get(get_analyze))
        .route("/osg", get(get_osg))
        .route("/mopt", get(get_mopt))
        .route("/scan", get(get_scan))
        .route("/health", get(get_health))
        .layer(cors)
}

/// Serve on `127.0.0.1:port` until the process is stopped.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router()).await
}
