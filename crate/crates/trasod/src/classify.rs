//! Splitting a candidate group into its standard path and semantic outliers.
//!
//! A candidate is standard when every one of its points has at least
//! `min_sup` other candidates within `max_dist`. The rest are potential
//! outliers; they become reported outliers only if the group has at least one
//! standard to deviate from. An outlier whose departure lies within
//! `time_tolerance` of some standard's is promoted to spatio-temporal, and
//! its comparison set narrows to those synchronized standards. Semantics then
//! compare durations: faster than the comparison average means avoidance,
//! slower with a detected stop means stop, anything else stays plain.

use std::collections::{BTreeMap, BTreeSet};

use crate::geometry::path_length;
use crate::grid::GridIndex;
use crate::model::{
    Candidate, CandidateGroup, Classification, Kind, OutlierReport, Params, Semantic,
};
use crate::stops::{detect_stops, Stop};
use crate::timefacets::enrich;

/// One outlier's verdict within its group.
#[derive(Debug, Clone, PartialEq)]
pub struct OutlierVerdict {
    pub cid: u64,
    pub classification: Classification,
    /// Standards whose departure lies within the time tolerance.
    pub sync_standards: BTreeSet<u64>,
}

/// A fully classified candidate group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupResult {
    pub group: CandidateGroup,
    pub standards: BTreeSet<u64>,
    /// Verdicts in cid order. Empty whenever `standards` is empty.
    pub outliers: Vec<OutlierVerdict>,
}

/// Cids of the group's standard candidates, computed through the grid index.
pub fn find_standards(group: &CandidateGroup, max_dist: f64, min_sup: usize) -> BTreeSet<u64> {
    let index = GridIndex::build(group, max_dist);
    group
        .candidates
        .iter()
        .filter(|c| {
            c.points()
                .iter()
                .all(|p| index.has_min_neighbors(p, c.cid(), min_sup))
        })
        .map(|c| c.cid())
        .collect()
}

/// Same contract as [`find_standards`], but scanning the group linearly
/// instead of through the grid. Kept as the unindexed baseline.
pub fn find_standards_brute_force(
    group: &CandidateGroup,
    max_dist: f64,
    min_sup: usize,
) -> BTreeSet<u64> {
    let r_sq = max_dist * max_dist;
    let has_support = |p: &crate::model::TrajectoryPoint, self_cid: u64| -> bool {
        if min_sup == 0 {
            return true;
        }
        let mut found = 0usize;
        for other in &group.candidates {
            if other.cid() == self_cid {
                continue;
            }
            if other
                .points()
                .iter()
                .any(|q| crate::geometry::dist_sq(p, q) <= r_sq)
            {
                found += 1;
                if found >= min_sup {
                    return true;
                }
            }
        }
        false
    };
    group
        .candidates
        .iter()
        .filter(|c| c.points().iter().all(|p| has_support(p, c.cid())))
        .map(|c| c.cid())
        .collect()
}

/// Standards departing within `time_tolerance` seconds of the outlier.
pub fn synchronized_standards(
    outlier: &Candidate,
    standards: &[&Candidate],
    time_tolerance: i64,
) -> BTreeSet<u64> {
    standards
        .iter()
        .filter(|s| (s.departure() - outlier.departure()).abs() <= time_tolerance)
        .map(|s| s.cid())
        .collect()
}

/// Semantic tag for an outlier, judged against its comparison standards.
/// `comparison` must be non-empty.
pub fn semantic_classify(
    outlier: &Candidate,
    comparison: &[&Candidate],
    stops: &[Stop],
) -> Semantic {
    let avg = mean_duration(comparison);
    let duration = outlier.duration() as f64;
    if duration < avg {
        Semantic::Avoidance
    } else if duration > avg && !stops.is_empty() {
        Semantic::Stop
    } else {
        Semantic::Plain
    }
}

fn mean_duration(candidates: &[&Candidate]) -> f64 {
    let sum: i64 = candidates.iter().map(|c| c.duration()).sum();
    sum as f64 / candidates.len() as f64
}

fn mean_length(candidates: &[&Candidate]) -> f64 {
    let sum: f64 = candidates.iter().map(|c| path_length(c.points())).sum();
    sum / candidates.len() as f64
}

/// Classifies one group: finds its standards, then judges every remaining
/// candidate. Without any standard the group reports no outliers at all.
pub fn classify_group(group: CandidateGroup, params: &Params) -> GroupResult {
    let standards = find_standards(&group, params.max_dist, params.min_sup);
    let mut outliers = Vec::new();
    if !standards.is_empty() {
        let standard_refs: Vec<&Candidate> = group
            .candidates
            .iter()
            .filter(|c| standards.contains(&c.cid()))
            .collect();
        for candidate in &group.candidates {
            if standards.contains(&candidate.cid()) {
                continue;
            }
            let sync = synchronized_standards(candidate, &standard_refs, params.time_tolerance);
            let kind = if sync.is_empty() {
                Kind::SpatialOutlier
            } else {
                Kind::SpatioTemporalOutlier
            };
            let comparison: Vec<&Candidate> = if sync.is_empty() {
                standard_refs.clone()
            } else {
                standard_refs
                    .iter()
                    .copied()
                    .filter(|s| sync.contains(&s.cid()))
                    .collect()
            };
            let stops = detect_stops(candidate, params.max_stop_speed, params.min_stop_duration);
            let semantic = semantic_classify(candidate, &comparison, &stops);
            outliers.push(OutlierVerdict {
                cid: candidate.cid(),
                classification: Classification { kind, semantic },
                sync_standards: sync,
            });
        }
    }
    GroupResult {
        group,
        standards,
        outliers,
    }
}

/// Builds one report per outlier, ordered by (start region, end region, cid).
pub fn build_reports(results: &[GroupResult], params: &Params) -> Vec<OutlierReport> {
    let mut reports = Vec::new();
    for result in results {
        let by_cid: BTreeMap<u64, &Candidate> = result
            .group
            .candidates
            .iter()
            .map(|c| (c.cid(), c))
            .collect();
        let standard_refs: Vec<&Candidate> = result
            .group
            .candidates
            .iter()
            .filter(|c| result.standards.contains(&c.cid()))
            .collect();
        for verdict in &result.outliers {
            let candidate = by_cid[&verdict.cid];
            let comparison: Vec<&Candidate> = if verdict.sync_standards.is_empty() {
                standard_refs.clone()
            } else {
                standard_refs
                    .iter()
                    .copied()
                    .filter(|s| verdict.sync_standards.contains(&s.cid()))
                    .collect()
            };
            let stops = detect_stops(candidate, params.max_stop_speed, params.min_stop_duration);
            reports.push(OutlierReport {
                cid: candidate.cid(),
                tid: candidate.tid().to_string(),
                start_region: candidate.start_region().to_string(),
                end_region: candidate.end_region().to_string(),
                kind: verdict.classification.kind,
                semantic: verdict.classification.semantic,
                facets: enrich(candidate.departure()),
                duration_s: candidate.duration(),
                length_m: path_length(candidate.points()),
                sync_standard_count: verdict.sync_standards.len(),
                avg_std_duration_s: mean_duration(&comparison),
                avg_std_length_m: mean_length(&comparison),
                stops,
            });
        }
    }
    reports.sort_by(|a, b| {
        (&a.start_region, &a.end_region, a.cid).cmp(&(&b.start_region, &b.end_region, b.cid))
    });
    reports
}
