//! The outlier report CSV.
//!
//! One row per outlier, already sorted by the report builder. Distances and
//! averages are rounded to centimetres; raw values stay available through
//! the library API.

use std::path::Path;

use crate::model::OutlierReport;

use super::WriteError;

pub const REPORT_HEADER: [&str; 16] = [
    "cid",
    "tid",
    "from",
    "to",
    "kind",
    "semantic",
    "day_of_week",
    "period",
    "month",
    "duration_s",
    "length_m",
    "sync_standard_count",
    "avg_std_duration_s",
    "avg_std_length_m",
    "stop_count",
    "stop_total_s",
];

/// Writes the report rows in the given order.
pub fn write_report_csv(path: &Path, reports: &[OutlierReport]) -> Result<(), WriteError> {
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
    emit(&REPORT_HEADER.map(String::from))?;
    for r in reports {
        let stop_total: i64 = r.stops.iter().map(|s| s.duration).sum();
        emit(&[
            r.cid.to_string(),
            r.tid.clone(),
            r.start_region.clone(),
            r.end_region.clone(),
            r.kind.label().to_string(),
            r.semantic.label().to_string(),
            r.facets.day_of_week.label().to_string(),
            r.facets.period_of_day.label().to_string(),
            r.facets.month.label().to_string(),
            r.duration_s.to_string(),
            format!("{:.2}", r.length_m),
            r.sync_standard_count.to_string(),
            format!("{:.2}", r.avg_std_duration_s),
            format!("{:.2}", r.avg_std_length_m),
            r.stops.len().to_string(),
            stop_total.to_string(),
        ])?;
    }
    writer.flush().map_err(|source| WriteError::Io {
        path: display,
        source,
    })
}
