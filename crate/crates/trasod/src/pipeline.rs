//! The full mining pipeline: extract candidates per region pair, classify
//! each group, and assemble the sorted outlier report.
//!
//! Groups are independent, so they are classified in parallel on a dedicated
//! thread pool. Candidate ids, group order, and report order are all fixed by
//! the input alone; the thread count never changes the output.

use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{build_reports, classify_group, GroupResult};
use crate::extract::{enumerate_region_pairs, group_candidates};
use crate::model::{OutlierReport, ParamError, Params, Region, Trajectory};

/// Everything one pipeline invocation produced.
#[derive(Debug, Clone)]
pub struct PipelineRun {
    /// Region pairs set aside because their polygons touch or overlap.
    pub skipped_pairs: Vec<(String, String)>,
    /// One classified result per group that had at least one candidate,
    /// in region pair order.
    pub results: Vec<GroupResult>,
    /// Outlier rows sorted by (start region, end region, cid).
    pub reports: Vec<OutlierReport>,
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("could not build the worker pool: {0}")]
    ThreadPool(String),
}

/// Runs the pipeline. `threads` sets the worker pool size; zero means one
/// worker per available core.
pub fn run(
    trajectories: &[Trajectory],
    regions: &[Region],
    params: &Params,
    threads: usize,
) -> Result<PipelineRun, PipelineError> {
    params.validate()?;
    let skipped_pairs = enumerate_region_pairs(regions).skipped;
    let groups = group_candidates(trajectories, regions);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| PipelineError::ThreadPool(e.to_string()))?;
    let results: Vec<GroupResult> = pool.install(|| {
        groups
            .into_par_iter()
            .map(|group| classify_group(group, params))
            .collect()
    });

    let reports = build_reports(&results, params);
    Ok(PipelineRun {
        skipped_pairs,
        results,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{generate, SynthSpec};

    fn spec() -> SynthSpec {
        SynthSpec {
            seed: 21,
            region_gap: 2000.0,
            corridor_width: 20.0,
            n_standards: 8,
            n_outliers: 3,
            detour_offset: 200.0,
            intended_max_dist: 50.0,
            sampling_interval: 10,
            departure_spread: 600,
            planted_stops: vec![(2, 480)],
        }
    }

    fn params() -> Params {
        Params {
            max_dist: 50.0,
            min_sup: 3,
            time_tolerance: 1800,
            max_stop_speed: 1.0,
            min_stop_duration: 300,
        }
    }

    #[test]
    fn thread_count_does_not_change_the_output() {
        let data = generate(&spec()).unwrap();
        let single = run(&data.trajectories, &data.regions, &params(), 1).unwrap();
        let eight = run(&data.trajectories, &data.regions, &params(), 8).unwrap();
        let auto = run(&data.trajectories, &data.regions, &params(), 0).unwrap();
        assert_eq!(single.reports, eight.reports);
        assert_eq!(single.reports, auto.reports);
        assert_eq!(single.results.len(), eight.results.len());
        for (a, b) in single.results.iter().zip(&eight.results) {
            assert_eq!(a.standards, b.standards);
            assert_eq!(a.outliers, b.outliers);
        }
    }

    #[test]
    fn end_to_end_on_a_planted_corridor() {
        let data = generate(&spec()).unwrap();
        let run = run(&data.trajectories, &data.regions, &params(), 0).unwrap();
        assert!(run.skipped_pairs.is_empty());
        assert_eq!(run.results.len(), 1);
        assert_eq!(run.results[0].standards.len(), 8);
        assert_eq!(run.reports.len(), 3);
        let stop_rows: Vec<_> = run
            .reports
            .iter()
            .filter(|r| r.semantic == crate::model::Semantic::Stop)
            .collect();
        assert_eq!(stop_rows.len(), 1);
        assert_eq!(stop_rows[0].tid, "out-02");
        assert_eq!(stop_rows[0].stops.len(), 1);
        assert_eq!(stop_rows[0].stops[0].duration, 480);
    }

    #[test]
    fn invalid_params_are_rejected_up_front() {
        let data = generate(&spec()).unwrap();
        let bad = Params {
            max_dist: -1.0,
            ..params()
        };
        assert!(matches!(
            run(&data.trajectories, &data.regions, &bad, 1),
            Err(PipelineError::Params(_))
        ));
    }
}
