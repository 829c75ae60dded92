//! Stop detection within a candidate: maximal runs of slow segments that last
//! long enough.
//!
//! A segment is slow when its average speed is at or below `max_stop_speed`.
//! A maximal run of consecutive slow segments becomes a stop if it spans at
//! least `min_stop_duration` seconds. Stops are reported in point order and
//! never overlap.

use crate::geometry::dist;
use crate::model::Candidate;

/// A detected stop. Indices address the candidate's own point list.
#[derive(Debug, Clone, PartialEq)]
pub struct Stop {
    /// First point of the slow run.
    pub start_index: usize,
    /// Last point of the slow run; strictly greater than `start_index`.
    pub end_index: usize,
    /// Seconds between the first and last point of the run.
    pub duration: i64,
    /// Mean position over the run's points.
    pub centroid: (f64, f64),
}

/// Finds every stop in the candidate under the given speed and duration bounds.
pub fn detect_stops(
    candidate: &Candidate,
    max_stop_speed: f64,
    min_stop_duration: i64,
) -> Vec<Stop> {
    let points = candidate.points();
    let slow = |i: usize| -> bool {
        let dt = (points[i + 1].t - points[i].t) as f64;
        dist(&points[i], &points[i + 1]) / dt <= max_stop_speed
    };

    let mut stops = Vec::new();
    let mut run_start: Option<usize> = None;
    for i in 0..points.len() - 1 {
        if slow(i) {
            run_start.get_or_insert(i);
            continue;
        }
        if let Some(first) = run_start.take() {
            push_if_long_enough(points, first, i, min_stop_duration, &mut stops);
        }
    }
    if let Some(first) = run_start {
        push_if_long_enough(
            points,
            first,
            points.len() - 1,
            min_stop_duration,
            &mut stops,
        );
    }
    stops
}

fn push_if_long_enough(
    points: &[crate::model::TrajectoryPoint],
    first: usize,
    last: usize,
    min_stop_duration: i64,
    stops: &mut Vec<Stop>,
) {
    let duration = points[last].t - points[first].t;
    if duration < min_stop_duration {
        return;
    }
    let n = (last - first + 1) as f64;
    let cx = points[first..=last].iter().map(|p| p.x).sum::<f64>() / n;
    let cy = points[first..=last].iter().map(|p| p.y).sum::<f64>() / n;
    stops.push(Stop {
        start_index: first,
        end_index: last,
        duration,
        centroid: (cx, cy),
    });
}
