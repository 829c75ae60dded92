//! Candidate extraction: the minimal subtrajectories traveling between each
//! ordered pair of regions.
//!
//! A forward scan keeps the most recent point seen inside the start region;
//! the first point inside the end region after that closes a candidate. The
//! resulting slice touches the start region only at its first point and the
//! end region only at its last, and visits to third regions in between do not
//! disqualify it.

use crate::geometry;
use crate::model::{Candidate, CandidateGroup, Region, Trajectory, TrajectoryPoint};

/// Ordered region pairs eligible for mining, plus the overlapping pairs that
/// were set aside. Pairs follow region input order; each overlapping pair is
/// reported once.
#[derive(Debug, Clone, PartialEq)]
pub struct PairEnumeration {
    pub pairs: Vec<(String, String)>,
    pub skipped: Vec<(String, String)>,
}

/// Enumerates all ordered pairs of distinct regions, excluding pairs whose
/// polygons touch or overlap.
pub fn enumerate_region_pairs(regions: &[Region]) -> PairEnumeration {
    let n = regions.len();
    let mut intersects = vec![false; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            if geometry::regions_intersect(&regions[i], &regions[j]) {
                intersects[i * n + j] = true;
                intersects[j * n + i] = true;
            }
        }
    }
    let mut pairs = Vec::new();
    let mut skipped = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if intersects[i * n + j] {
                if i < j {
                    skipped.push((regions[i].rid().to_string(), regions[j].rid().to_string()));
                }
                continue;
            }
            pairs.push((regions[i].rid().to_string(), regions[j].rid().to_string()));
        }
    }
    PairEnumeration { pairs, skipped }
}

/// Index spans of the minimal start-to-end traversals within a point sequence.
fn scan_traversals(
    points: &[TrajectoryPoint],
    start: &Region,
    end: &Region,
) -> Vec<(usize, usize)> {
    let mut spans = Vec::new();
    let mut last_start: Option<usize> = None;
    for (idx, p) in points.iter().enumerate() {
        if last_start.is_some() && end.contains(p) {
            spans.push((last_start.take().unwrap(), idx));
        }
        if start.contains(p) {
            // Overwrites: only the last point inside the start region opens a candidate.
            last_start = Some(idx);
        }
    }
    spans
}

/// Extracts this trajectory's candidates from `start` to `end`. The two
/// regions must be disjoint. Candidate ids are local to the call, numbered in
/// traversal order.
pub fn find_candidates(trajectory: &Trajectory, start: &Region, end: &Region) -> Vec<Candidate> {
    scan_traversals(trajectory.points(), start, end)
        .into_iter()
        .enumerate()
        .map(|(k, (first, last))| {
            Candidate::new(
                k as u64,
                trajectory.tid(),
                start.rid(),
                end.rid(),
                first,
                trajectory.points()[first..=last].to_vec(),
            )
            .expect("scan yields at least two strictly ordered points")
        })
        .collect()
}

/// Runs extraction across every eligible region pair and groups the result.
///
/// Candidate ids are global and assigned by (trajectory input order, first
/// point index, last point index, pair order), so they do not depend on any
/// processing schedule. Pairs that produced no candidate get no group; groups
/// follow pair enumeration order and hold their candidates in cid order.
pub fn group_candidates(trajectories: &[Trajectory], regions: &[Region]) -> Vec<CandidateGroup> {
    let enumeration = enumerate_region_pairs(regions);
    let by_rid = |rid: &str| {
        regions
            .iter()
            .find(|r| r.rid() == rid)
            .expect("pair enumeration uses region ids from the input")
    };

    // (trajectory index, first, last, pair index)
    let mut raw: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (pair_idx, (start_rid, end_rid)) in enumeration.pairs.iter().enumerate() {
        let start = by_rid(start_rid);
        let end = by_rid(end_rid);
        for (traj_idx, trajectory) in trajectories.iter().enumerate() {
            for (first, last) in scan_traversals(trajectory.points(), start, end) {
                raw.push((traj_idx, first, last, pair_idx));
            }
        }
    }
    raw.sort_unstable();

    let mut per_pair: Vec<Vec<Candidate>> = vec![Vec::new(); enumeration.pairs.len()];
    for (cid, &(traj_idx, first, last, pair_idx)) in raw.iter().enumerate() {
        let trajectory = &trajectories[traj_idx];
        let (start_rid, end_rid) = &enumeration.pairs[pair_idx];
        let candidate = Candidate::new(
            cid as u64,
            trajectory.tid(),
            start_rid.clone(),
            end_rid.clone(),
            first,
            trajectory.points()[first..=last].to_vec(),
        )
        .expect("scan yields at least two strictly ordered points");
        per_pair[pair_idx].push(candidate);
    }

    enumeration
        .pairs
        .into_iter()
        .zip(per_pair)
        .filter(|(_, candidates)| !candidates.is_empty())
        .map(|((start_region, end_region), candidates)| CandidateGroup {
            start_region,
            end_region,
            candidates,
        })
        .collect()
}
