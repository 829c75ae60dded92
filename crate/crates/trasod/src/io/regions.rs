//! Region CSV input and output.
//!
//! One region per row, `rid,name,wkt`, where the wkt column holds a POLYGON
//! with a single closed ring. Holes and multipolygons are not supported;
//! rings are validated for simplicity when the region is built.

use std::collections::HashSet;
use std::path::Path;

use crate::model::Region;

use super::{LocalProjection, ReadError, WriteError};

pub const REGION_HEADER: [&str; 3] = ["rid", "name", "wkt"];

/// Reads a region CSV. Region ids must be unique; an empty file simply
/// yields no regions.
pub fn read_regions(path: &Path) -> Result<Vec<Region>, ReadError> {
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
    if found != REGION_HEADER {
        return Err(ReadError::Header {
            path: display,
            expected: REGION_HEADER.join(","),
            found: found.join(","),
        });
    }

    let mut regions = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for record in reader.records() {
        let record = record.map_err(|source| ReadError::Csv {
            path: display.clone(),
            source,
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 3 {
            return Err(ReadError::Row {
                path: display,
                line,
                message: format!("expected 3 fields, found {}", record.len()),
            });
        }
        let rid = record[0].trim().to_string();
        if rid.is_empty() {
            return Err(ReadError::Row {
                path: display,
                line,
                message: "empty region id".into(),
            });
        }
        if !seen.insert(rid.clone()) {
            return Err(ReadError::DuplicateRegion {
                path: display,
                line,
                rid,
            });
        }
        let name = record[1].trim().to_string();
        let ring = parse_wkt_polygon(record[2].trim()).map_err(|message| ReadError::Row {
            path: display.clone(),
            line,
            message,
        })?;
        let region = Region::new(rid, name, ring).map_err(|source| ReadError::Region {
            path: display.clone(),
            line,
            source,
        })?;
        regions.push(region);
    }
    Ok(regions)
}

/// Writes regions in the same CSV layout `read_regions` accepts.
pub fn write_regions(path: &Path, regions: &[Region]) -> Result<(), WriteError> {
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
    emit(&REGION_HEADER.map(String::from))?;
    for region in regions {
        emit(&[
            region.rid().to_string(),
            region.name().to_string(),
            wkt_polygon(region.ring()),
        ])?;
    }
    writer.flush().map_err(|source| WriteError::Io {
        path: display,
        source,
    })
}

/// Rebuilds each region with its ring projected into local metres. Used when
/// regions are given in degrees alongside WGS84 trajectories.
pub fn project_regions(
    regions: &[Region],
    projection: &LocalProjection,
) -> Result<Vec<Region>, crate::model::RegionError> {
    regions
        .iter()
        .map(|r| {
            let ring = r
                .ring()
                .iter()
                .map(|&(lon, lat)| projection.forward(lon, lat))
                .collect();
            Region::new(r.rid(), r.name(), ring)
        })
        .collect()
}

/// Serializes a ring as WKT, repeating the first vertex to close it.
pub fn wkt_polygon(ring: &[(f64, f64)]) -> String {
    let mut vertices: Vec<String> = ring.iter().map(|(x, y)| format!("{x} {y}")).collect();
    if let Some(first) = vertices.first().cloned() {
        vertices.push(first);
    }
    format!("POLYGON (({}))", vertices.join(", "))
}

/// Parses `POLYGON ((x y, x y, ...))` with exactly one ring, which must be
/// explicitly closed. Returns the ring with the closing vertex still present;
/// region construction drops it.
pub fn parse_wkt_polygon(s: &str) -> Result<Vec<(f64, f64)>, String> {
    let trimmed = s.trim();
    let keyword_len = "POLYGON".len();
    if trimmed.len() < keyword_len || !trimmed[..keyword_len].eq_ignore_ascii_case("POLYGON") {
        return Err(format!("expected a POLYGON, got '{s}'"));
    }
    let body = trimmed[keyword_len..].trim();
    let inner = body
        .strip_prefix("((")
        .and_then(|b| b.strip_suffix("))"))
        .ok_or_else(|| "expected '((' and '))' around the ring".to_string())?;
    if inner.contains('(') || inner.contains(')') {
        return Err("only a single ring without holes is supported".into());
    }
    let mut ring = Vec::new();
    for pair in inner.split(',') {
        let mut nums = pair.split_whitespace();
        let x: f64 = nums
            .next()
            .ok_or_else(|| format!("empty vertex in '{}'", inner))?
            .parse()
            .map_err(|_| format!("bad vertex '{}'", pair.trim()))?;
        let y: f64 = nums
            .next()
            .ok_or_else(|| format!("vertex '{}' is missing y", pair.trim()))?
            .parse()
            .map_err(|_| format!("bad vertex '{}'", pair.trim()))?;
        if nums.next().is_some() {
            return Err(format!("vertex '{}' has more than two values", pair.trim()));
        }
        if !x.is_finite() || !y.is_finite() {
            return Err(format!("non-finite vertex '{}'", pair.trim()));
        }
        ring.push((x, y));
    }
    if ring.len() < 4 {
        return Err("a closed ring needs at least 4 vertices".into());
    }
    if ring.first() != ring.last() {
        return Err("ring is not closed: first and last vertex differ".into());
    }
    Ok(ring)
}
