//! Synthetic corridor datasets with known ground truth.
//!
//! The generator lays two rectangular regions on the x axis and routes every
//! trajectory from the left one to the right one at a constant 10 m/s.
//! Standard trajectories keep a per-trajectory lateral offset drawn inside
//! the corridor width. Outlier trajectories additionally climb a tent-shaped
//! detour between the regions; detour magnitudes grow and alternate sides so
//! the flat top of every tent stays isolated from everything else. The
//! requested geometry is validated up front so that, at the intended query
//! radius, the corridor trajectories are exactly the standards and the
//! detours are exactly the outliers for any support threshold between 1 and
//! `n_standards - 1`.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{Region, Trajectory, TrajectoryPoint};

/// Travel speed along the x axis, metres per second.
pub const CRUISE_SPEED: f64 = 10.0;

/// Departure timestamps start here (2012-11-06 07:40:00 UTC).
pub const BASE_T: i64 = 1_352_187_600;

/// Parameters for one synthetic dataset.
#[derive(Debug, Clone)]
pub struct SynthSpec {
    pub seed: u64,
    /// Distance between the right edge of the start region and the left edge
    /// of the end region, metres.
    pub region_gap: f64,
    /// Lateral spread of the corridor; offsets are drawn from +-width/2.
    pub corridor_width: f64,
    pub n_standards: usize,
    pub n_outliers: usize,
    /// Base magnitude of the first detour; later detours double every two.
    pub detour_offset: f64,
    /// The query radius the ground truth is guaranteed for.
    pub intended_max_dist: f64,
    /// Seconds between consecutive samples.
    pub sampling_interval: i64,
    /// Departures are drawn uniformly from BASE_T..=BASE_T+spread.
    pub departure_spread: i64,
    /// (outlier index, stop duration floor in seconds). Each listed outlier
    /// pauses on its detour's flat top; the pause is rounded up to a whole
    /// number of sampling intervals.
    pub planted_stops: Vec<(usize, i64)>,
}

/// Ground truth for one generated trajectory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthLabel {
    pub standard: bool,
    /// Realized pause length in seconds, if one was planted.
    pub planted_stop: Option<i64>,
}

/// A generated dataset: trajectories, the two regions, and per-tid labels.
#[derive(Debug, Clone)]
pub struct SynthDataset {
    pub trajectories: Vec<Trajectory>,
    pub regions: Vec<Region>,
    pub labels: BTreeMap<String, SynthLabel>,
}

#[derive(Debug, Error, PartialEq)]
pub enum SynthError {
    #[error("region gap must be at least 50 m, got {0}")]
    GapTooSmall(f64),
    #[error("sampling interval must be at least 1 s, got {0}")]
    IntervalTooSmall(i64),
    #[error("sample step {step} m must not exceed 180 m or a tenth of the gap")]
    StepTooCoarse { step: f64 },
    #[error(
        "intended max dist {max_dist} plus half a step {half_step} exceeds \
         the detour plateau margin {margin}"
    )]
    PlateauMarginTooTight {
        max_dist: f64,
        half_step: f64,
        margin: f64,
    },
    #[error(
        "detour offset {offset} must exceed corridor width {width} plus \
         intended max dist {max_dist}"
    )]
    SeparationTooTight {
        offset: f64,
        width: f64,
        max_dist: f64,
    },
    #[error("corridor width {width} must not exceed intended max dist {max_dist}")]
    CorridorWiderThanRadius { width: f64, max_dist: f64 },
    #[error("corridor width must be non-negative and finite, got {0}")]
    BadCorridorWidth(f64),
    #[error("intended max dist must be positive and finite, got {0}")]
    BadMaxDist(f64),
    #[error("departure spread must be non-negative, got {0}")]
    BadDepartureSpread(i64),
    #[error("planted stop index {0} is out of range for {1} outliers")]
    StopIndexOutOfRange(usize, usize),
    #[error("planted stop index {0} listed twice")]
    DuplicateStopIndex(usize),
    #[error("planted stop duration must be at least 1 s, got {0}")]
    BadStopDuration(i64),
}

/// Generates the dataset described by `spec`.
pub fn generate(spec: &SynthSpec) -> Result<SynthDataset, SynthError> {
    validate(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let gap = spec.region_gap;
    let half_width = spec.corridor_width / 2.0;
    let step = CRUISE_SPEED * spec.sampling_interval as f64;
    // Last sample index: first x at or past the end region's interior.
    let k_end = ((gap + 20.0) / step).ceil() as usize;

    let mut trajectories = Vec::new();
    let mut labels = BTreeMap::new();

    let draw = |rng: &mut ChaCha8Rng| -> (f64, i64) {
        let u = rng.gen_range(-half_width..=half_width);
        let depart = BASE_T + rng.gen_range(0..=spec.departure_spread);
        (u, depart)
    };

    for i in 0..spec.n_standards {
        let (u, depart) = draw(&mut rng);
        let points = (0..=k_end)
            .map(|k| {
                TrajectoryPoint::new(
                    -10.0 + k as f64 * step,
                    u,
                    depart + k as i64 * spec.sampling_interval,
                )
            })
            .collect();
        let tid = format!("std-{i:02}");
        trajectories.push(Trajectory::new(&tid, points).expect("generated points are valid"));
        labels.insert(
            tid,
            SynthLabel {
                standard: true,
                planted_stop: None,
            },
        );
    }

    for j in 0..spec.n_outliers {
        let (u, depart) = draw(&mut rng);
        let side = if j % 2 == 0 { 1.0 } else { -1.0 };
        let magnitude = spec.detour_offset * f64::powi(2.0, (j / 2) as i32);
        let stop = spec
            .planted_stops
            .iter()
            .find(|(idx, _)| *idx == j)
            .map(|&(_, dur)| dur);

        let mut points: Vec<TrajectoryPoint> = Vec::new();
        let mut shift = 0i64;
        let mut realized_stop = None;
        let pause_at = pause_index(gap, step, k_end);
        for k in 0..=k_end {
            let x = -10.0 + k as f64 * step;
            let y = u + side * magnitude * tent(x, gap);
            let t = depart + k as i64 * spec.sampling_interval + shift;
            points.push(TrajectoryPoint::new(x, y, t));
            if k == pause_at {
                if let Some(dur) = stop {
                    let reps = (dur + spec.sampling_interval - 1) / spec.sampling_interval;
                    for r in 1..=reps {
                        points.push(TrajectoryPoint::new(x, y, t + r * spec.sampling_interval));
                    }
                    shift = reps * spec.sampling_interval;
                    realized_stop = Some(shift);
                }
            }
        }
        let tid = format!("out-{j:02}");
        trajectories.push(Trajectory::new(&tid, points).expect("generated points are valid"));
        labels.insert(
            tid,
            SynthLabel {
                standard: false,
                planted_stop: realized_stop,
            },
        );
    }

    let h = f64::max(150.0, spec.corridor_width);
    let start = Region::new(
        "A",
        "origin",
        vec![(-200.0, -h), (0.0, -h), (0.0, h), (-200.0, h)],
    )
    .expect("start region ring is simple");
    let end = Region::new(
        "B",
        "destination",
        vec![(gap, -h), (gap + 200.0, -h), (gap + 200.0, h), (gap, h)],
    )
    .expect("end region ring is simple");

    Ok(SynthDataset {
        trajectories,
        regions: vec![start, end],
        labels,
    })
}

/// Tent profile over the corridor: 0 outside [0.2g, 0.8g], 1 on the plateau
/// [0.45g, 0.55g], linear in between.
fn tent(x: f64, gap: f64) -> f64 {
    let s = x / gap;
    if s <= 0.2 || s >= 0.8 {
        0.0
    } else if s < 0.45 {
        (s - 0.2) / 0.25
    } else if s <= 0.55 {
        1.0
    } else {
        (0.8 - s) / 0.25
    }
}

/// Sample index closest to the plateau midpoint x = gap/2.
fn pause_index(gap: f64, step: f64, k_end: usize) -> usize {
    let ideal = (gap / 2.0 + 10.0) / step;
    (ideal.round() as usize).min(k_end)
}

fn validate(spec: &SynthSpec) -> Result<(), SynthError> {
    if !(spec.region_gap.is_finite() && spec.region_gap >= 50.0) {
        return Err(SynthError::GapTooSmall(spec.region_gap));
    }
    if spec.sampling_interval < 1 {
        return Err(SynthError::IntervalTooSmall(spec.sampling_interval));
    }
    if !(spec.corridor_width.is_finite() && spec.corridor_width >= 0.0) {
        return Err(SynthError::BadCorridorWidth(spec.corridor_width));
    }
    if !(spec.intended_max_dist.is_finite() && spec.intended_max_dist > 0.0) {
        return Err(SynthError::BadMaxDist(spec.intended_max_dist));
    }
    let step = CRUISE_SPEED * spec.sampling_interval as f64;
    if step > 180.0 || step > 0.1 * spec.region_gap {
        return Err(SynthError::StepTooCoarse { step });
    }
    let margin = 0.05 * spec.region_gap;
    if spec.intended_max_dist + step / 2.0 > margin {
        return Err(SynthError::PlateauMarginTooTight {
            max_dist: spec.intended_max_dist,
            half_step: step / 2.0,
            margin,
        });
    }
    if spec.detour_offset <= spec.corridor_width + spec.intended_max_dist {
        return Err(SynthError::SeparationTooTight {
            offset: spec.detour_offset,
            width: spec.corridor_width,
            max_dist: spec.intended_max_dist,
        });
    }
    if spec.corridor_width > spec.intended_max_dist {
        return Err(SynthError::CorridorWiderThanRadius {
            width: spec.corridor_width,
            max_dist: spec.intended_max_dist,
        });
    }
    if spec.departure_spread < 0 {
        return Err(SynthError::BadDepartureSpread(spec.departure_spread));
    }
    let mut seen = Vec::new();
    for &(idx, dur) in &spec.planted_stops {
        if idx >= spec.n_outliers {
            return Err(SynthError::StopIndexOutOfRange(idx, spec.n_outliers));
        }
        if seen.contains(&idx) {
            return Err(SynthError::DuplicateStopIndex(idx));
        }
        if dur < 1 {
            return Err(SynthError::BadStopDuration(dur));
        }
        seen.push(idx);
    }
    Ok(())
}
