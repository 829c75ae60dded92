//! GeoJSON export of regions and classified candidates.
//!
//! Produces one FeatureCollection: region polygons first, then every
//! candidate as a LineString tagged with its role. Candidates in groups
//! without a standard keep the neutral role "candidate". When a projection
//! is supplied, planar metres are converted back to degrees on the way out.

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use serde_json::{json, Value};

use crate::classify::GroupResult;
use crate::model::Region;

use super::{LocalProjection, WriteError};

/// Writes regions and classified candidates as a GeoJSON FeatureCollection.
pub fn write_geojson(
    path: &Path,
    results: &[GroupResult],
    regions: &[Region],
    projection: Option<&LocalProjection>,
) -> Result<(), WriteError> {
    let display = path.display().to_string();
    let mut features: Vec<Value> = Vec::new();

    for region in regions {
        let mut ring: Vec<Value> = region
            .ring()
            .iter()
            .map(|&(x, y)| coord(x, y, projection))
            .collect();
        if let Some(first) = ring.first().cloned() {
            ring.push(first);
        }
        features.push(json!({
            "type": "Feature",
            "geometry": {"type": "Polygon", "coordinates": [ring]},
            "properties": {
                "role": "region",
                "rid": region.rid(),
                "name": region.name(),
            },
        }));
    }

    for result in results {
        for candidate in &result.group.candidates {
            let verdict = result.outliers.iter().find(|v| v.cid == candidate.cid());
            let (role, kind, semantic) = if result.standards.is_empty() {
                ("candidate", None, None)
            } else if result.standards.contains(&candidate.cid()) {
                ("standard", None, None)
            } else {
                let v = verdict.expect("non-standard candidate has a verdict");
                (
                    "outlier",
                    Some(v.classification.kind.label()),
                    Some(v.classification.semantic.label()),
                )
            };
            let coords: Vec<Value> = candidate
                .points()
                .iter()
                .map(|p| coord(p.x, p.y, projection))
                .collect();
            features.push(json!({
                "type": "Feature",
                "geometry": {"type": "LineString", "coordinates": coords},
                "properties": {
                    "role": role,
                    "cid": candidate.cid(),
                    "tid": candidate.tid(),
                    "from": candidate.start_region(),
                    "to": candidate.end_region(),
                    "kind": kind,
                    "semantic": semantic,
                },
            }));
        }
    }

    let collection = json!({"type": "FeatureCollection", "features": features});
    let file = File::create(path).map_err(|source| WriteError::Io {
        path: display.clone(),
        source,
    })?;
    serde_json::to_writer_pretty(BufWriter::new(file), &collection).map_err(|source| {
        WriteError::Json {
            path: display,
            source,
        }
    })
}

fn coord(x: f64, y: f64, projection: Option<&LocalProjection>) -> Value {
    let (a, b) = match projection {
        Some(p) => p.inverse(x, y),
        None => (x, y),
    };
    json!([a, b])
}
