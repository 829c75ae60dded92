//! Reading and writing the on-disk formats.
//!
//! Trajectories and regions come in as CSV, results go out as a CSV report
//! and optionally as GeoJSON. Coordinates are either already planar metres or
//! WGS84 degrees projected onto a local tangent plane around the dataset's
//! centroid; the projection is inverted again when writing GeoJSON.

pub mod geojson;
pub mod regions;
pub mod report;
pub mod trajectories;

use thiserror::Error;

use crate::model::{ModelError, RegionError};

/// How input coordinates are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrsMode {
    /// x and y are planar metres, used as-is.
    Planar,
    /// x is longitude and y is latitude in degrees; points are projected to
    /// metres on an equirectangular plane around the dataset centroid.
    Wgs84Local,
}

const EARTH_RADIUS_M: f64 = 6_371_000.0;

/// Equirectangular projection about a fixed origin. Accurate to well under a
/// metre over the city-scale extents this tool works with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalProjection {
    lon0: f64,
    lat0: f64,
    /// Metres per degree of latitude.
    k: f64,
}

impl LocalProjection {
    pub fn new(lon0: f64, lat0: f64) -> Self {
        Self {
            lon0,
            lat0,
            k: std::f64::consts::PI / 180.0 * EARTH_RADIUS_M,
        }
    }

    /// Degrees to local metres.
    pub fn forward(&self, lon: f64, lat: f64) -> (f64, f64) {
        let x = (lon - self.lon0) * self.k * self.lat0.to_radians().cos();
        let y = (lat - self.lat0) * self.k;
        (x, y)
    }

    /// Local metres back to degrees.
    pub fn inverse(&self, x: f64, y: f64) -> (f64, f64) {
        let lon = self.lon0 + x / (self.k * self.lat0.to_radians().cos());
        let lat = self.lat0 + y / self.k;
        (lon, lat)
    }
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv { path: String, source: csv::Error },
    #[error("{path}: expected header '{expected}', found '{found}'")]
    Header {
        path: String,
        expected: String,
        found: String,
    },
    #[error("{path} line {line}: {message}")]
    Row {
        path: String,
        line: u64,
        message: String,
    },
    #[error("{path}: no data rows")]
    Empty { path: String },
    #[error("{path} line {line}: duplicate region id {rid}")]
    DuplicateRegion {
        path: String,
        line: u64,
        rid: String,
    },
    #[error("{path} line {line}: {source}")]
    Trajectory {
        path: String,
        line: u64,
        source: ModelError,
    },
    #[error("{path} line {line}: {source}")]
    Region {
        path: String,
        line: u64,
        source: RegionError,
    },
}

#[derive(Debug, Error)]
pub enum WriteError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv { path: String, source: csv::Error },
    #[error("{path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
}
