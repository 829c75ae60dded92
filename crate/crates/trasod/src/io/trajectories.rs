//! Trajectory CSV input and output.
//!
//! The format is one sample per row, `tid,x,y,t`, grouped by trajectory id in
//! first-appearance order. Timestamps accept integer epoch seconds, fractional
//! epoch seconds (truncated), or ISO-8601 date-times with an optional zone
//! offset. In WGS84 mode x is longitude and y is latitude; the whole dataset
//! is projected around its centroid before any distances are measured.

use std::collections::HashMap;
use std::path::Path;

use crate::model::{Trajectory, TrajectoryPoint};
use crate::timefacets::{days_from_civil, days_in_month};

use super::{CrsMode, LocalProjection, ReadError, WriteError};

pub const TRAJECTORY_HEADER: [&str; 4] = ["tid", "x", "y", "t"];

/// A parsed trajectory file, with the projection used if coordinates came in
/// as degrees.
#[derive(Debug, Clone)]
pub struct TrajectoryFile {
    pub trajectories: Vec<Trajectory>,
    pub projection: Option<LocalProjection>,
}

struct RawRow {
    tid: String,
    x: f64,
    y: f64,
    t: i64,
    line: u64,
}

/// Reads a trajectory CSV. Trajectories keep the order in which their ids
/// first appear; points keep row order and must strictly increase in time.
pub fn read_trajectories(path: &Path, crs: CrsMode) -> Result<TrajectoryFile, ReadError> {
    let display = path.display().to_string();
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .from_path(path)
        .map_err(|source| ReadError::Csv {
            path: display.clone(),
            source,
        })?;

    let headers = reader.headers().map_err(|source| ReadError::Csv {
        path: display.clone(),
        source,
    })?;
    let found: Vec<&str> = headers.iter().map(str::trim).collect();
    if found != TRAJECTORY_HEADER {
        return Err(ReadError::Header {
            path: display,
            expected: TRAJECTORY_HEADER.join(","),
            found: found.join(","),
        });
    }

    let mut rows: Vec<RawRow> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|source| ReadError::Csv {
            path: display.clone(),
            source,
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let row_err = |message: String| ReadError::Row {
            path: display.clone(),
            line,
            message,
        };
        if record.len() != 4 {
            return Err(row_err(format!(
                "expected 4 fields, found {}",
                record.len()
            )));
        }
        let tid = record[0].trim().to_string();
        if tid.is_empty() {
            return Err(row_err("empty trajectory id".into()));
        }
        let x = parse_coord(record[1].trim())
            .ok_or_else(|| row_err(format!("bad x value '{}'", record[1].trim())))?;
        let y = parse_coord(record[2].trim())
            .ok_or_else(|| row_err(format!("bad y value '{}'", record[2].trim())))?;
        let t = parse_timestamp(record[3].trim())
            .ok_or_else(|| row_err(format!("bad timestamp '{}'", record[3].trim())))?;
        if t < 0 {
            return Err(row_err("timestamp is before 1970".into()));
        }
        if crs == CrsMode::Wgs84Local && !(-180.0..=180.0).contains(&x) {
            return Err(row_err(format!("longitude {x} out of range")));
        }
        if crs == CrsMode::Wgs84Local && !(-90.0..=90.0).contains(&y) {
            return Err(row_err(format!("latitude {y} out of range")));
        }
        rows.push(RawRow { tid, x, y, t, line });
    }
    if rows.is_empty() {
        return Err(ReadError::Empty { path: display });
    }

    let projection = match crs {
        CrsMode::Planar => None,
        CrsMode::Wgs84Local => {
            let n = rows.len() as f64;
            let lon0 = rows.iter().map(|r| r.x).sum::<f64>() / n;
            let lat0 = rows.iter().map(|r| r.y).sum::<f64>() / n;
            Some(LocalProjection::new(lon0, lat0))
        }
    };

    // Group rows by tid, keeping first-appearance order.
    let mut order: Vec<String> = Vec::new();
    let mut grouped: HashMap<String, Vec<(TrajectoryPoint, u64)>> = HashMap::new();
    for row in rows {
        let (x, y) = match &projection {
            Some(p) => p.forward(row.x, row.y),
            None => (row.x, row.y),
        };
        let entry = grouped.entry(row.tid.clone()).or_insert_with(|| {
            order.push(row.tid.clone());
            Vec::new()
        });
        if let Some((prev, _)) = entry.last() {
            if row.t <= prev.t {
                return Err(ReadError::Row {
                    path: display,
                    line: row.line,
                    message: format!("timestamp does not increase within trajectory {}", row.tid),
                });
            }
        }
        entry.push((TrajectoryPoint::new(x, y, row.t), row.line));
    }

    let mut trajectories = Vec::with_capacity(order.len());
    for tid in order {
        let rows = grouped.remove(&tid).expect("tid was grouped");
        let first_line = rows[0].1;
        let points: Vec<TrajectoryPoint> = rows.into_iter().map(|(p, _)| p).collect();
        let trajectory = Trajectory::new(&tid, points).map_err(|source| ReadError::Trajectory {
            path: display.clone(),
            line: first_line,
            source,
        })?;
        trajectories.push(trajectory);
    }

    Ok(TrajectoryFile {
        trajectories,
        projection,
    })
}

/// Writes trajectories in the same CSV layout `read_trajectories` accepts,
/// with epoch-second timestamps.
pub fn write_trajectories(path: &Path, trajectories: &[Trajectory]) -> Result<(), WriteError> {
    let display = path.display().to_string();
    let mut writer = csv::Writer::from_path(path).map_err(|source| WriteError::Csv {
        path: display.clone(),
        source,
    })?;
    let mut emit = |fields: &[String]| -> Result<(), WriteError> {
        writer
            .write_record(fields)
            .map_err(|source| WriteError::Csv {
                path: display.clone(),
                source,
            })
    };
    emit(&TRAJECTORY_HEADER.map(String::from))?;
    for trajectory in trajectories {
        for p in trajectory.points() {
            emit(&[
                trajectory.tid().to_string(),
                p.x.to_string(),
                p.y.to_string(),
                p.t.to_string(),
            ])?;
        }
    }
    writer.flush().map_err(|source| WriteError::Io {
        path: display,
        source,
    })
}

fn parse_coord(s: &str) -> Option<f64> {
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Epoch seconds from an integer, a fractional number (truncated), or an
/// ISO-8601 date-time.
fn parse_timestamp(s: &str) -> Option<i64> {
    if let Ok(v) = s.parse::<i64>() {
        return Some(v);
    }
    if let Ok(v) = s.parse::<f64>() {
        return v.is_finite().then_some(v.trunc() as i64);
    }
    parse_iso8601(s)
}

/// `YYYY-MM-DD[T ]HH:MM:SS[.frac][Z|+HH:MM|-HH:MM]`, fraction truncated.
fn parse_iso8601(s: &str) -> Option<i64> {
    if !s.is_ascii() || s.len() < 19 {
        return None;
    }
    let b = s.as_bytes();
    if b[4] != b'-' || b[7] != b'-' || (b[10] != b'T' && b[10] != b' ') {
        return None;
    }
    if b[13] != b':' || b[16] != b':' {
        return None;
    }
    let year: i64 = s[0..4].parse().ok()?;
    let month: u32 = s[5..7].parse().ok()?;
    let day: u32 = s[8..10].parse().ok()?;
    let hour: i64 = s[11..13].parse().ok()?;
    let minute: i64 = s[14..16].parse().ok()?;
    let second: i64 = s[17..19].parse().ok()?;
    if !(1..=12).contains(&month) || day < 1 || day > days_in_month(year, month) {
        return None;
    }
    if hour > 23 || minute > 59 || second > 59 {
        return None;
    }
    let mut rest = &s[19..];
    if let Some(frac) = rest.strip_prefix('.') {
        let digits = frac.bytes().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return None;
        }
        rest = &frac[digits..];
    }
    let offset_s: i64 = match rest {
        "" | "Z" => 0,
        _ => {
            let sign = match rest.as_bytes()[0] {
                b'+' => 1,
                b'-' => -1,
                _ => return None,
            };
            let body = &rest[1..];
            if body.len() != 5 || body.as_bytes()[2] != b':' {
                return None;
            }
            let oh: i64 = body[0..2].parse().ok()?;
            let om: i64 = body[3..5].parse().ok()?;
            if oh > 23 || om > 59 {
                return None;
            }
            sign * (oh * 3600 + om * 60)
        }
    };
    let days = days_from_civil(year, month, day);
    Some(days * 86_400 + hour * 3600 + minute * 60 + second - offset_s)
}
