//! Uniform grid over one candidate group's points.
//!
//! The cell size equals the query radius, so every point within `max_dist` of
//! a query point lies in the 3x3 block of cells around it. The index is built
//! once per group and never mutated. A candidate is its own point's peer
//! nowhere: neighborhoods never include the queried candidate itself.

use std::collections::{BTreeSet, HashMap};

use crate::geometry::dist_sq;
use crate::model::{Candidate, CandidateGroup, TrajectoryPoint};

#[derive(Debug)]
pub struct GridIndex<'g> {
    group: &'g CandidateGroup,
    max_dist: f64,
    // Cell -> (candidate slot in the group, point index within the candidate).
    cells: HashMap<(i64, i64), Vec<(u32, u32)>>,
}

impl<'g> GridIndex<'g> {
    /// Indexes every point of every candidate in the group. `max_dist` must be
    /// positive and finite.
    pub fn build(group: &'g CandidateGroup, max_dist: f64) -> Self {
        assert!(
            max_dist.is_finite() && max_dist > 0.0,
            "max_dist must be positive"
        );
        assert!(group.candidates.len() <= u32::MAX as usize);
        let mut cells: HashMap<(i64, i64), Vec<(u32, u32)>> = HashMap::new();
        for (slot, candidate) in group.candidates.iter().enumerate() {
            for (pidx, p) in candidate.points().iter().enumerate() {
                cells
                    .entry(cell_of(p.x, p.y, max_dist))
                    .or_default()
                    .push((slot as u32, pidx as u32));
            }
        }
        Self {
            group,
            max_dist,
            cells,
        }
    }

    /// The cell edge length, identical to the query radius.
    pub fn cell_size(&self) -> f64 {
        self.max_dist
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Total number of indexed (candidate, point) entries.
    pub fn indexed_points(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    /// Cids of the other candidates owning at least one point within
    /// `max_dist` of `p`. The candidate identified by `self_cid` never counts.
    pub fn neighborhood(&self, p: &TrajectoryPoint, self_cid: u64) -> BTreeSet<u64> {
        let mut found = BTreeSet::new();
        let r_sq = self.max_dist * self.max_dist;
        let (cx, cy) = cell_of(p.x, p.y, self.max_dist);
        for dy in -1..=1 {
            for dx in -1..=1 {
                let Some(entries) = self.cells.get(&(cx + dx, cy + dy)) else {
                    continue;
                };
                for &(slot, pidx) in entries {
                    let candidate = &self.group.candidates[slot as usize];
                    let cid = candidate.cid();
                    if cid == self_cid || found.contains(&cid) {
                        continue;
                    }
                    let q = candidate.points()[pidx as usize];
                    if dist_sq(p, &q) <= r_sq {
                        found.insert(cid);
                    }
                }
            }
        }
        found
    }

    /// Whether at least `min_sup` distinct other candidates come within
    /// `max_dist` of `p`. Stops counting as soon as the bar is met.
    pub fn has_min_neighbors(&self, p: &TrajectoryPoint, self_cid: u64, min_sup: usize) -> bool {
        if min_sup == 0 {
            return true;
        }
        let mut found = BTreeSet::new();
        let r_sq = self.max_dist * self.max_dist;
        let (cx, cy) = cell_of(p.x, p.y, self.max_dist);
        for dy in -1..=1 {
            for dx in -1..=1 {
                let Some(entries) = self.cells.get(&(cx + dx, cy + dy)) else {
                    continue;
                };
                for &(slot, pidx) in entries {
                    let candidate = &self.group.candidates[slot as usize];
                    let cid = candidate.cid();
                    if cid == self_cid || found.contains(&cid) {
                        continue;
                    }
                    let q = candidate.points()[pidx as usize];
                    if dist_sq(p, &q) <= r_sq {
                        found.insert(cid);
                        if found.len() >= min_sup {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// The smallest neighborhood size over all of the candidate's points.
    pub fn min_neighborhood_size(&self, candidate: &Candidate) -> usize {
        candidate
            .points()
            .iter()
            .map(|p| self.neighborhood(p, candidate.cid()).len())
            .min()
            .unwrap_or(0)
    }
}

fn cell_of(x: f64, y: f64, cell_size: f64) -> (i64, i64) {
    (
        (x / cell_size).floor() as i64,
        (y / cell_size).floor() as i64,
    )
}

/// Reference neighborhood: scans every point of every other candidate in the
/// group. Grid queries must return exactly this set.
pub fn neighborhood_brute_force(
    p: &TrajectoryPoint,
    self_cid: u64,
    group: &CandidateGroup,
    max_dist: f64,
) -> BTreeSet<u64> {
    let r_sq = max_dist * max_dist;
    group
        .candidates
        .iter()
        .filter(|c| c.cid() != self_cid)
        .filter(|c| c.points().iter().any(|q| dist_sq(p, q) <= r_sq))
        .map(|c| c.cid())
        .collect()
}

/// Smallest brute-force neighborhood size over the candidate's points.
pub fn min_neighborhood_size_brute_force(
    candidate: &Candidate,
    group: &CandidateGroup,
    max_dist: f64,
) -> usize {
    candidate
        .points()
        .iter()
        .map(|p| neighborhood_brute_force(p, candidate.cid(), group, max_dist).len())
        .min()
        .unwrap_or(0)
}
