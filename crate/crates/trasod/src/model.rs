//! Core domain types shared by every stage of the pipeline.

use std::fmt;

use thiserror::Error;

use crate::geometry;
use crate::stops::Stop;
use crate::timefacets::TimeFacets;

/// A timestamped planar position. Coordinates are meters in a local frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub x: f64,
    pub y: f64,
    /// Seconds since the Unix epoch, UTC. Sub-second input is truncated on ingestion.
    pub t: i64,
}

impl TrajectoryPoint {
    pub fn new(x: f64, y: f64, t: i64) -> Self {
        Self { x, y, t }
    }
}

/// One moving object's recording: a time-ordered sequence of points.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    tid: String,
    points: Vec<TrajectoryPoint>,
}

impl Trajectory {
    /// Builds a trajectory, rejecting empty point lists, non-finite coordinates,
    /// negative timestamps, and timestamps that fail to strictly increase.
    pub fn new(tid: impl Into<String>, points: Vec<TrajectoryPoint>) -> Result<Self, ModelError> {
        let tid = tid.into();
        if points.is_empty() {
            return Err(ModelError::EmptyTrajectory { tid });
        }
        for (index, p) in points.iter().enumerate() {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(ModelError::NonFiniteCoordinate { tid, index });
            }
            if p.t < 0 {
                return Err(ModelError::NegativeTimestamp { tid, index });
            }
            if index > 0 && p.t <= points[index - 1].t {
                return Err(ModelError::NonMonotonicTimestamps { tid, index });
            }
        }
        Ok(Self { tid, points })
    }

    pub fn tid(&self) -> &str {
        &self.tid
    }

    pub fn points(&self) -> &[TrajectoryPoint] {
        &self.points
    }
}

/// A region of interest: a simple polygon, stored as an unclosed ring.
///
/// Containment is boundary-inclusive. The ring is validated on construction:
/// at least three distinct vertices, no zero-length edges, no self-intersection.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    rid: String,
    name: String,
    ring: Vec<(f64, f64)>,
    bbox: geometry::Bbox,
}

impl Region {
    /// Builds a region from a vertex ring. A closing vertex equal to the first
    /// is accepted and dropped.
    pub fn new(
        rid: impl Into<String>,
        name: impl Into<String>,
        mut ring: Vec<(f64, f64)>,
    ) -> Result<Self, RegionError> {
        let rid = rid.into();
        let name = name.into();
        if ring.len() >= 2 && ring.first() == ring.last() {
            ring.pop();
        }
        if ring.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(RegionError::NonFiniteVertex { rid });
        }
        let mut distinct: Vec<(f64, f64)> = Vec::new();
        for v in &ring {
            if !distinct.contains(v) {
                distinct.push(*v);
            }
        }
        if distinct.len() < 3 {
            return Err(RegionError::TooFewVertices { rid });
        }
        let n = ring.len();
        for i in 0..n {
            if ring[i] == ring[(i + 1) % n] {
                return Err(RegionError::ZeroLengthEdge { rid });
            }
        }
        if !geometry::ring_is_simple(&ring) {
            return Err(RegionError::SelfIntersecting { rid });
        }
        let bbox = geometry::Bbox::of_ring(&ring);
        Ok(Self {
            rid,
            name,
            ring,
            bbox,
        })
    }

    pub fn rid(&self) -> &str {
        &self.rid
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The boundary ring, unclosed.
    pub fn ring(&self) -> &[(f64, f64)] {
        &self.ring
    }

    pub fn bbox(&self) -> geometry::Bbox {
        self.bbox
    }

    pub fn contains(&self, p: &TrajectoryPoint) -> bool {
        geometry::point_in_region(p, self)
    }
}

/// A minimal subtrajectory traveling from one region to another: exactly one
/// point inside the start region (its first), exactly one inside the end
/// region (its last), and no interior point inside either.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    cid: u64,
    tid: String,
    start_region: String,
    end_region: String,
    first_index: usize,
    points: Vec<TrajectoryPoint>,
}

impl Candidate {
    /// Builds a candidate from an already-extracted point run. `first_index`
    /// is the position of `points[0]` in the source trajectory; the last index
    /// follows from the length. Requires at least two points with strictly
    /// increasing timestamps.
    pub fn new(
        cid: u64,
        tid: impl Into<String>,
        start_region: impl Into<String>,
        end_region: impl Into<String>,
        first_index: usize,
        points: Vec<TrajectoryPoint>,
    ) -> Result<Self, ModelError> {
        if points.len() < 2 {
            return Err(ModelError::CandidateTooShort);
        }
        if points.windows(2).any(|w| w[1].t <= w[0].t) {
            return Err(ModelError::CandidateTimeOrder);
        }
        Ok(Self {
            cid,
            tid: tid.into(),
            start_region: start_region.into(),
            end_region: end_region.into(),
            first_index,
            points,
        })
    }

    pub fn cid(&self) -> u64 {
        self.cid
    }

    pub fn tid(&self) -> &str {
        &self.tid
    }

    pub fn start_region(&self) -> &str {
        &self.start_region
    }

    pub fn end_region(&self) -> &str {
        &self.end_region
    }

    /// Index of the first point in the source trajectory.
    pub fn first_index(&self) -> usize {
        self.first_index
    }

    /// Index of the last point in the source trajectory.
    pub fn last_index(&self) -> usize {
        self.first_index + self.points.len() - 1
    }

    pub fn points(&self) -> &[TrajectoryPoint] {
        &self.points
    }

    /// Travel time in seconds; positive because timestamps strictly increase.
    pub fn duration(&self) -> i64 {
        self.points[self.points.len() - 1].t - self.points[0].t
    }

    /// Timestamp of the first point, used for synchronization checks.
    pub fn departure(&self) -> i64 {
        self.points[0].t
    }
}

/// All candidates traveling the same ordered region pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateGroup {
    pub start_region: String,
    pub end_region: String,
    pub candidates: Vec<Candidate>,
}

/// Mining parameters. Distances are meters, durations seconds, speeds m/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    /// Neighborhood radius between candidate points.
    pub max_dist: f64,
    /// Minimum number of neighboring candidates required at every point.
    pub min_sup: usize,
    /// Maximum departure-time difference for a standard to count as synchronized.
    pub time_tolerance: i64,
    /// Speed at or below which a segment counts as stopped.
    pub max_stop_speed: f64,
    /// Minimum span a slow run must last to count as a stop.
    pub min_stop_duration: i64,
}

pub const DEFAULT_MAX_STOP_SPEED: f64 = 1.0;
pub const DEFAULT_MIN_STOP_DURATION: i64 = 300;

impl Params {
    pub fn validate(&self) -> Result<(), ParamError> {
        if !self.max_dist.is_finite() || self.max_dist <= 0.0 {
            return Err(ParamError::MaxDist);
        }
        if self.time_tolerance < 0 {
            return Err(ParamError::TimeTolerance);
        }
        if !self.max_stop_speed.is_finite() || self.max_stop_speed <= 0.0 {
            return Err(ParamError::MaxStopSpeed);
        }
        if self.min_stop_duration <= 0 {
            return Err(ParamError::MinStopDuration);
        }
        Ok(())
    }
}

/// How a candidate relates to its group's standard path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Standard,
    SpatialOutlier,
    SpatioTemporalOutlier,
}

impl Kind {
    pub fn label(&self) -> &'static str {
        match self {
            Kind::Standard => "standard",
            Kind::SpatialOutlier => "spatial",
            Kind::SpatioTemporalOutlier => "spatio-temporal",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Why an outlier deviates: faster than the standards, slower with a detected
/// stop, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantic {
    Avoidance,
    Stop,
    Plain,
}

impl Semantic {
    pub fn label(&self) -> &'static str {
        match self {
            Semantic::Avoidance => "avoidance",
            Semantic::Stop => "stop",
            Semantic::Plain => "plain",
        }
    }
}

impl fmt::Display for Semantic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Verdict for one outlier candidate. `semantic` qualifies outlier kinds only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub semantic: Semantic,
}

/// Everything reported about one outlier.
#[derive(Debug, Clone, PartialEq)]
pub struct OutlierReport {
    pub cid: u64,
    pub tid: String,
    pub start_region: String,
    pub end_region: String,
    pub kind: Kind,
    pub semantic: Semantic,
    pub facets: TimeFacets,
    pub duration_s: i64,
    pub length_m: f64,
    /// Standards departing within the time tolerance of this outlier.
    pub sync_standard_count: usize,
    /// Mean duration over the comparison standards (synchronized ones for a
    /// spatio-temporal outlier, the whole group's otherwise).
    pub avg_std_duration_s: f64,
    pub avg_std_length_m: f64,
    pub stops: Vec<Stop>,
}

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("trajectory {tid} has no points")]
    EmptyTrajectory { tid: String },
    #[error("trajectory {tid}: timestamp at point {index} does not increase")]
    NonMonotonicTimestamps { tid: String, index: usize },
    #[error("trajectory {tid}: non-finite coordinate at point {index}")]
    NonFiniteCoordinate { tid: String, index: usize },
    #[error("trajectory {tid}: negative timestamp at point {index}")]
    NegativeTimestamp { tid: String, index: usize },
    #[error("a candidate needs at least two points")]
    CandidateTooShort,
    #[error("candidate timestamps must strictly increase")]
    CandidateTimeOrder,
}

#[derive(Debug, Error, PartialEq)]
pub enum RegionError {
    #[error("region {rid}: ring needs at least 3 distinct vertices")]
    TooFewVertices { rid: String },
    #[error("region {rid}: ring has a zero-length edge")]
    ZeroLengthEdge { rid: String },
    #[error("region {rid}: ring is self-intersecting")]
    SelfIntersecting { rid: String },
    #[error("region {rid}: non-finite vertex")]
    NonFiniteVertex { rid: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("max-dist must be positive and finite")]
    MaxDist,
    #[error("time-tolerance must be non-negative")]
    TimeTolerance,
    #[error("max-stop-speed must be positive and finite")]
    MaxStopSpeed,
    #[error("min-stop-duration must be positive")]
    MinStopDuration,
}
