//! Mining standard paths and semantic outliers from moving-object
//! trajectories.
//!
//! Given a set of trajectories and a set of regions of interest, this crate
//! extracts the minimal subtrajectories traveling between each ordered pair
//! of disjoint regions, finds the well-supported "standard" ways of making
//! each trip, and reports the candidates that deviate from them. Outliers are
//! split into purely spatial ones and spatio-temporal ones (those departing
//! close in time to a standard), then tagged with a behavioral reading:
//! avoidance when faster than comparable standards, stop when slower with a
//! detected stationary episode, plain otherwise. Each reported outlier also
//! carries its travel time, path length, detected stops, and the weekday,
//! day period, and month of its departure.
//!
//! [`pipeline::run`] is the one-call entry point; the submodules expose every
//! stage separately:
//!
//! - [`model`]: trajectories, regions, candidates, parameters, reports.
//! - [`extract`]: region pair enumeration and candidate extraction.
//! - [`grid`]: the uniform grid index answering neighborhood queries.
//! - [`classify`]: standards, outlier kinds, and semantic tags.
//! - [`stops`]: stationary episode detection within a candidate.
//! - [`timefacets`]: calendar facets of departure times.
//! - [`geometry`]: planar primitives shared by the stages.
//! - [`io`]: CSV and GeoJSON input/output plus the local projection.
//! - [`synth`]: synthetic corridor datasets with known ground truth.

pub mod classify;
pub mod extract;
pub mod geometry;
pub mod grid;
pub mod io;
pub mod model;
pub mod pipeline;
pub mod stops;
pub mod synth;
pub mod timefacets;

pub use model::{
    Candidate, CandidateGroup, Classification, Kind, OutlierReport, Params, Region, Semantic,
    Trajectory, TrajectoryPoint,
};
pub use pipeline::{run, PipelineError, PipelineRun};
