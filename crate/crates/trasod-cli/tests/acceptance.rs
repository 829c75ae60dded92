//! Acceptance checks for the whole miner, one test per criterion. Each test
//! prints a single PASS line (visible with `--nocapture`) after its
//! assertions hold; a failed assertion fails the test instead.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trasod::classify::{classify_group, find_standards, find_standards_brute_force};
use trasod::extract::group_candidates;
use trasod::grid::{neighborhood_brute_force, GridIndex};
use trasod::io::regions::write_regions;
use trasod::io::trajectories::write_trajectories;
use trasod::model::{
    Candidate, CandidateGroup, Kind, Params, Region, Semantic, Trajectory, TrajectoryPoint,
};
use trasod::pipeline;
use trasod::stops::detect_stops;
use trasod::synth::{generate, SynthSpec};
use trasod::timefacets::{enrich, DayOfWeek, Month, PeriodOfDay};

fn random_group(rng: &mut ChaCha8Rng) -> CandidateGroup {
    let n = rng.gen_range(2..=20);
    let mut candidates = Vec::new();
    for cid in 0..n {
        let len = rng.gen_range(2..=50);
        let mut x: f64 = rng.gen_range(-300.0..300.0);
        let mut y: f64 = rng.gen_range(-300.0..300.0);
        let depart = rng.gen_range(0..=5_000i64);
        let mut points = Vec::new();
        for k in 0..len {
            points.push(TrajectoryPoint::new(x, y, depart + k as i64 * 10));
            x += rng.gen_range(-60.0..60.0);
            y += rng.gen_range(-60.0..60.0);
        }
        candidates
            .push(Candidate::new(cid as u64, format!("t{cid}"), "A", "B", 0, points).unwrap());
    }
    CandidateGroup {
        start_region: "A".into(),
        end_region: "B".into(),
        candidates,
    }
}

/// Criterion 1: the grid index answers every point-neighborhood query with
/// exactly the same set as the quadratic scan.
#[test]
fn criterion_1_grid_matches_brute_force_neighborhoods() {
    let started = Instant::now();
    let mut groups = 0usize;
    let mut queries = 0usize;
    for seed in 0..120u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let group = random_group(&mut rng);
        let max_dist = rng.gen_range(5.0..150.0);
        let index = GridIndex::build(&group, max_dist);
        for candidate in &group.candidates {
            for p in candidate.points() {
                let fast = index.neighborhood(p, candidate.cid());
                let slow = neighborhood_brute_force(p, candidate.cid(), &group, max_dist);
                assert_eq!(fast, slow, "seed {seed}, cid {}", candidate.cid());
                queries += 1;
            }
        }
        groups += 1;
    }
    let elapsed = started.elapsed();
    assert!(groups >= 100);
    assert!(
        elapsed < Duration::from_secs(30),
        "took {elapsed:?}, budget is 30 s"
    );
    println!(
        "acceptance criterion 1: PASS - grid equals brute force on {queries} \
         queries across {groups} random groups in {elapsed:?}"
    );
}

/// Criterion 2: in the classic three-path layout, the middle path is the one
/// standard and the two diverging paths are spatial outliers.
#[test]
fn criterion_2_three_path_layout_classifies_exactly() {
    // Two squares bracketing a 100 m corridor; three trajectories cross it.
    // c2 runs straight along y=0; c1 dives to -50 late, c3 climbs to +50
    // early. Lanes sit 5 m apart, so with a 10 m radius each dive is isolated
    // while every on-corridor point keeps a neighbor.
    let region = |rid: &str, x0: f64| {
        Region::new(
            rid,
            rid.to_string(),
            vec![
                (x0, -60.0),
                (x0 + 50.0, -60.0),
                (x0 + 50.0, 60.0),
                (x0, 60.0),
            ],
        )
        .unwrap()
    };
    let regions = vec![region("A", -60.0), region("B", 110.0)];
    let shape = |tid: &str, base: f64, dive: std::ops::RangeInclusive<f64>, far: f64, t0: i64| {
        let mut points = vec![TrajectoryPoint::new(-30.0, base, t0)];
        for k in 0..=10 {
            let x = k as f64 * 10.0;
            let y = if dive.contains(&x) { far } else { base };
            points.push(TrajectoryPoint::new(x, y, t0 + 10 + k * 10));
        }
        points.push(TrajectoryPoint::new(130.0, base, t0 + 130));
        Trajectory::new(tid, points).unwrap()
    };
    let trajectories = vec![
        shape("c1", -5.0, 60.0..=80.0, -50.0, 0),
        shape("c2", 0.0, f64::NAN..=f64::NAN, 0.0, 10_000),
        shape("c3", 5.0, 20.0..=40.0, 50.0, 20_000),
    ];
    let params = Params {
        max_dist: 10.0,
        min_sup: 1,
        time_tolerance: 60,
        max_stop_speed: 1.0,
        min_stop_duration: 300,
    };
    let run = pipeline::run(&trajectories, &regions, &params, 1).unwrap();
    assert_eq!(run.results.len(), 1);
    let result = &run.results[0];
    assert_eq!(result.group.candidates.len(), 3);
    let cid_of = |tid: &str| {
        result
            .group
            .candidates
            .iter()
            .find(|c| c.tid() == tid)
            .unwrap()
            .cid()
    };
    assert_eq!(result.standards, BTreeSet::from([cid_of("c2")]));
    assert_eq!(result.outliers.len(), 2);
    for verdict in &result.outliers {
        assert_eq!(verdict.classification.kind, Kind::SpatialOutlier);
    }
    let outlier_cids: BTreeSet<u64> = result.outliers.iter().map(|v| v.cid).collect();
    assert_eq!(outlier_cids, BTreeSet::from([cid_of("c1"), cid_of("c3")]));
    println!(
        "acceptance criterion 2: PASS - c2 is the sole standard, c1 and c3 \
         are spatial outliers"
    );
}

/// Criterion 3: standards and outliers always partition the candidate set,
/// and no standard means no outliers.
#[test]
fn criterion_3_partition_holds_everywhere() {
    let mut instances = 0usize;
    let mut empty_standard_cases = 0usize;
    let mut check = |group: CandidateGroup, params: &Params| {
        let all: BTreeSet<u64> = group.candidates.iter().map(|c| c.cid()).collect();
        let result = classify_group(group, params);
        let outliers: BTreeSet<u64> = result.outliers.iter().map(|v| v.cid).collect();
        assert!(result.standards.is_disjoint(&outliers));
        if result.standards.is_empty() {
            assert!(outliers.is_empty(), "outliers without any standard");
            empty_standard_cases += 1;
        } else {
            let union: BTreeSet<u64> = result.standards.union(&outliers).copied().collect();
            assert_eq!(union, all, "classification must cover the group");
        }
        instances += 1;
    };

    // Random walks at several parameter combinations.
    for seed in 0..60u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1_000 + seed);
        let group = random_group(&mut rng);
        for (max_dist, min_sup) in [(15.0, 1), (60.0, 2), (120.0, 5)] {
            check(
                group.clone(),
                &Params {
                    max_dist,
                    min_sup,
                    time_tolerance: 600,
                    max_stop_speed: 1.0,
                    min_stop_duration: 300,
                },
            );
        }
    }

    // Synthetic corridors, including one with no standards at all.
    for (n_standards, n_outliers, min_sup) in [(10, 2, 4), (6, 3, 5), (0, 4, 1), (2, 0, 1)] {
        let spec = SynthSpec {
            seed: 77,
            region_gap: 2000.0,
            corridor_width: 20.0,
            n_standards,
            n_outliers,
            detour_offset: 200.0,
            intended_max_dist: 50.0,
            sampling_interval: 10,
            departure_spread: 600,
            planted_stops: Vec::new(),
        };
        let data = generate(&spec).unwrap();
        let groups = group_candidates(&data.trajectories, &data.regions);
        for group in groups {
            check(
                group,
                &Params {
                    max_dist: 50.0,
                    min_sup,
                    time_tolerance: 1800,
                    max_stop_speed: 1.0,
                    min_stop_duration: 300,
                },
            );
        }
    }

    assert!(
        empty_standard_cases > 0,
        "the no-standard branch must be hit"
    );
    println!(
        "acceptance criterion 3: PASS - partition held on {instances} instances \
         ({empty_standard_cases} with an empty standard set)"
    );
}

/// Criterion 4: tightening minSup only removes standards, widening maxDist
/// only adds them, and candidate extraction ignores both knobs.
#[test]
fn criterion_4_monotonicity_sweeps() {
    // Fifteen straight, x-aligned lanes. Aligned samples make the minimum
    // distance between two candidates exactly their lane gap, so the
    // standard set at (maxDist, minSup) is the set of lanes with at least
    // minSup others within maxDist: a tight cluster, a mid trio, a loose
    // trio, and a far pair that only ever connects at the widest radius.
    let lanes: [u32; 15] = [
        0, 5, 10, 15, 20, 25, 30, 60, 70, 80, 140, 165, 190, 250, 255,
    ];
    let regions = vec![
        Region::new(
            "A",
            "A",
            vec![
                (-60.0, -20.0),
                (-10.0, -20.0),
                (-10.0, 280.0),
                (-60.0, 280.0),
            ],
        )
        .unwrap(),
        Region::new(
            "B",
            "B",
            vec![
                (1010.0, -20.0),
                (1060.0, -20.0),
                (1060.0, 280.0),
                (1010.0, 280.0),
            ],
        )
        .unwrap(),
    ];
    let trajectories: Vec<Trajectory> = lanes
        .iter()
        .enumerate()
        .map(|(i, &lane)| {
            let t0 = i as i64 * 10_000;
            let y = lane as f64;
            let mut points = vec![TrajectoryPoint::new(-30.0, y, t0)];
            for k in 0..=20 {
                points.push(TrajectoryPoint::new(k as f64 * 50.0, y, t0 + 10 + k * 10));
            }
            points.push(TrajectoryPoint::new(1030.0, y, t0 + 230));
            Trajectory::new(format!("lane-{lane:03}"), points).unwrap()
        })
        .collect();

    let run_at = |max_dist: f64, min_sup: usize| {
        let params = Params {
            max_dist,
            min_sup,
            time_tolerance: 1800,
            max_stop_speed: 1.0,
            min_stop_duration: 300,
        };
        let run = pipeline::run(&trajectories, &regions, &params, 0).unwrap();
        assert_eq!(run.results.len(), 1);
        let result = &run.results[0];
        let standards: BTreeSet<u32> = result
            .group
            .candidates
            .iter()
            .filter(|c| result.standards.contains(&c.cid()))
            .map(|c| c.tid().strip_prefix("lane-").unwrap().parse().unwrap())
            .collect();
        (result.group.candidates.len(), standards)
    };
    let lane_set = |picks: &[u32]| picks.iter().copied().collect::<BTreeSet<u32>>();
    let cluster = [0, 5, 10, 15, 20, 25, 30];

    let (n_a, sup2) = run_at(50.0, 2);
    let (n_b, sup4) = run_at(50.0, 4);
    let (n_c, sup6) = run_at(50.0, 6);
    assert!(
        sup6.is_subset(&sup4),
        "minSup 6 kept a standard minSup 4 lost"
    );
    assert!(
        sup4.is_subset(&sup2),
        "minSup 4 kept a standard minSup 2 lost"
    );
    assert_eq!(
        sup2,
        lane_set(&[&cluster[..], &[60, 70, 80, 140, 165, 190]].concat())
    );
    assert_eq!(sup4, lane_set(&[&cluster[..], &[60, 70]].concat()));
    assert_eq!(sup6, lane_set(&[&cluster[..], &[60]].concat()));

    let (n_d, dist20) = run_at(20.0, 2);
    let (n_e, dist50) = run_at(50.0, 2);
    let (n_f, dist80) = run_at(80.0, 2);
    assert!(
        dist20.is_subset(&dist50),
        "maxDist 20 found extra standards"
    );
    assert!(
        dist50.is_subset(&dist80),
        "maxDist 50 found extra standards"
    );
    assert_eq!(dist20, lane_set(&[&cluster[..], &[60, 70, 80]].concat()));
    assert_eq!(dist50, sup2);
    assert_eq!(dist80, lane_set(&lanes));

    let counts = [n_a, n_b, n_c, n_d, n_e, n_f];
    assert!(
        counts.iter().all(|&n| n == lanes.len()),
        "candidate counts varied across runs: {counts:?}"
    );
    println!(
        "acceptance criterion 4: PASS - standards {} > {} > {} across minSup \
         2/4/6 and {} < {} < {} across maxDist 20/50/80, candidates fixed at {}",
        sup2.len(),
        sup4.len(),
        sup6.len(),
        dist20.len(),
        dist50.len(),
        dist80.len(),
        counts[0]
    );
}

/// Criterion 5: the planted corridor comes back exactly: 10 standards, 2
/// spatio-temporal outliers, the paused one tagged as a stop outlier.
#[test]
fn criterion_5_planted_outliers_recovered() {
    let started = Instant::now();
    let spec = SynthSpec {
        seed: 2026,
        region_gap: 2000.0,
        corridor_width: 20.0,
        n_standards: 10,
        n_outliers: 2,
        detour_offset: 200.0,
        intended_max_dist: 50.0,
        sampling_interval: 10,
        departure_spread: 600,
        planted_stops: vec![(0, 600)],
    };
    let data = generate(&spec).unwrap();
    let params = Params {
        max_dist: 50.0,
        min_sup: 4,
        time_tolerance: 1800,
        max_stop_speed: 1.0,
        min_stop_duration: 300,
    };
    let run = pipeline::run(&data.trajectories, &data.regions, &params, 0).unwrap();
    assert_eq!(run.results.len(), 1);
    let result = &run.results[0];
    assert_eq!(result.group.candidates.len(), 12);
    assert_eq!(result.standards.len(), 10);
    let standard_tids: BTreeSet<&str> = result
        .group
        .candidates
        .iter()
        .filter(|c| result.standards.contains(&c.cid()))
        .map(|c| c.tid())
        .collect();
    assert!(standard_tids.iter().all(|tid| tid.starts_with("std-")));

    assert_eq!(run.reports.len(), 2);
    for report in &run.reports {
        // departureSpread 600 <= timeTolerance 1800: all synchronized.
        assert_eq!(report.kind, Kind::SpatioTemporalOutlier);
        let expected = if report.tid == "out-00" {
            Semantic::Stop
        } else {
            Semantic::Plain
        };
        assert_eq!(report.semantic, expected, "tid {}", report.tid);
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "took {elapsed:?}, budget is 5 s"
    );
    println!(
        "acceptance criterion 5: PASS - 10 standards and 2 spatio-temporal \
         outliers recovered, stop outlier tagged, in {elapsed:?}"
    );
}

/// Criterion 6: a planted 690 s pause is reported as one stop within one
/// sampling interval of its true length, and constant-speed traces produce
/// no stops at all.
#[test]
fn criterion_6_stop_detector_accuracy() {
    let interval = 10i64;
    let spec = SynthSpec {
        seed: 31,
        region_gap: 2000.0,
        corridor_width: 20.0,
        n_standards: 6,
        n_outliers: 1,
        detour_offset: 200.0,
        intended_max_dist: 50.0,
        sampling_interval: interval,
        departure_spread: 600,
        planted_stops: vec![(0, 690)],
    };
    let data = generate(&spec).unwrap();
    let params = Params {
        max_dist: 50.0,
        min_sup: 3,
        time_tolerance: 1800,
        max_stop_speed: 1.0,
        min_stop_duration: 300,
    };
    let run = pipeline::run(&data.trajectories, &data.regions, &params, 0).unwrap();
    assert_eq!(run.reports.len(), 1);
    let report = &run.reports[0];
    assert_eq!(report.stops.len(), 1, "exactly one stop");
    let measured = report.stops[0].duration;
    assert!(
        (measured - 690).abs() <= interval,
        "measured {measured} s, planted 690 s, tolerance one interval"
    );

    // Constant-speed candidates must never report a stop.
    let mut clean = 0usize;
    for candidate in &run.results[0].group.candidates {
        if candidate.tid().starts_with("std-") {
            let stops = detect_stops(candidate, params.max_stop_speed, params.min_stop_duration);
            assert!(stops.is_empty(), "false stop on {}", candidate.tid());
            clean += 1;
        }
    }
    assert_eq!(clean, 6);
    println!(
        "acceptance criterion 6: PASS - planted 690 s pause measured as \
         {measured} s, zero false stops on {clean} constant-speed traces"
    );
}

/// Criterion 7: calendar facets agree with an independent civil-calendar
/// implementation on 1,000 random instants, and every period boundary maps
/// to the right period.
#[test]
fn criterion_7_temporal_enrichment_matches_oracle() {
    use chrono::{Datelike, TimeZone, Timelike, Utc};

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1_000 {
        // Anywhere between 1970 and 2100.
        let t = rng.gen_range(0..4_102_444_800i64);
        let facets = enrich(t);
        let oracle = Utc.timestamp_opt(t, 0).unwrap();
        let expected_dow = match oracle.weekday() {
            chrono::Weekday::Mon => DayOfWeek::Monday,
            chrono::Weekday::Tue => DayOfWeek::Tuesday,
            chrono::Weekday::Wed => DayOfWeek::Wednesday,
            chrono::Weekday::Thu => DayOfWeek::Thursday,
            chrono::Weekday::Fri => DayOfWeek::Friday,
            chrono::Weekday::Sat => DayOfWeek::Saturday,
            chrono::Weekday::Sun => DayOfWeek::Sunday,
        };
        assert_eq!(facets.day_of_week, expected_dow, "t = {t}");
        assert_eq!(facets.month as u32 + 1, oracle.month(), "t = {t}");
        let expected_period = match oracle.hour() {
            0..=5 => PeriodOfDay::Night,
            6..=11 => PeriodOfDay::Morning,
            12..=17 => PeriodOfDay::Afternoon,
            _ => PeriodOfDay::Evening,
        };
        assert_eq!(facets.period_of_day, expected_period, "t = {t}");
    }

    // All eight period edges on 2012-11-06 (midnight epoch 1352160000).
    let midnight = 1_352_160_000i64;
    let edges = [
        (0, PeriodOfDay::Night),
        (6 * 3600 - 1, PeriodOfDay::Night),
        (6 * 3600, PeriodOfDay::Morning),
        (12 * 3600 - 1, PeriodOfDay::Morning),
        (12 * 3600, PeriodOfDay::Afternoon),
        (18 * 3600 - 1, PeriodOfDay::Afternoon),
        (18 * 3600, PeriodOfDay::Evening),
        (24 * 3600 - 1, PeriodOfDay::Evening),
    ];
    for (offset, expected) in edges {
        let facets = enrich(midnight + offset);
        assert_eq!(facets.period_of_day, expected, "offset {offset}");
        assert_eq!(facets.day_of_week, DayOfWeek::Tuesday);
        assert_eq!(facets.month, Month::November);
    }
    println!(
        "acceptance criterion 7: PASS - 1000 random instants agree with the \
         chrono oracle and all 8 period edges map correctly"
    );
}

/// Criterion 8: the CLI produces byte-identical reports regardless of the
/// worker thread count.
#[test]
fn criterion_8_cli_reports_are_deterministic_across_threads() {
    let spec = SynthSpec {
        seed: 404,
        region_gap: 2000.0,
        corridor_width: 20.0,
        n_standards: 10,
        n_outliers: 3,
        detour_offset: 200.0,
        intended_max_dist: 50.0,
        sampling_interval: 10,
        departure_spread: 600,
        planted_stops: vec![(1, 480)],
    };
    let data = generate(&spec).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let traj = dir.path().join("trajectories.csv");
    let regions = dir.path().join("regions.csv");
    write_trajectories(&traj, &data.trajectories).unwrap();
    write_regions(&regions, &data.regions).unwrap();

    let run_with = |threads: &str, report: &Path, geojson: &Path| {
        let output = Command::new(env!("CARGO_BIN_EXE_trasod"))
            .args(["--trajectories", traj.to_str().unwrap()])
            .args(["--regions", regions.to_str().unwrap()])
            .args([
                "--max-dist",
                "50",
                "--min-sup",
                "4",
                "--time-tolerance",
                "1800",
            ])
            .args(["--threads", threads])
            .args(["--out", report.to_str().unwrap()])
            .args(["--geojson", geojson.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(
            output.status.success(),
            "stderr: {}",
            String::from_utf8_lossy(&output.stderr)
        );
    };
    let report_one = dir.path().join("report-one.csv");
    let report_eight = dir.path().join("report-eight.csv");
    let geo_one = dir.path().join("one.geojson");
    let geo_eight = dir.path().join("eight.geojson");
    run_with("1", &report_one, &geo_one);
    run_with("8", &report_eight, &geo_eight);

    let bytes_one = std::fs::read(&report_one).unwrap();
    let bytes_eight = std::fs::read(&report_eight).unwrap();
    assert!(!bytes_one.is_empty());
    assert_eq!(bytes_one, bytes_eight, "report bytes differ across threads");
    assert_eq!(
        std::fs::read(&geo_one).unwrap(),
        std::fs::read(&geo_eight).unwrap(),
        "geojson bytes differ across threads"
    );
    println!(
        "acceptance criterion 8: PASS - --threads 1 and --threads 8 wrote \
         byte-identical outputs ({} report bytes)",
        bytes_one.len()
    );
}

/// Criterion 9: 500 trajectories x 400 points across 4 regions finish well
/// inside the time budget, and the grid index beats the quadratic scan by
/// at least 5x on the same groups.
#[test]
fn criterion_9_performance_budget_and_speedup() {
    // Four regions in a row; every trajectory sweeps through all four in
    // one pass, on one of 40 lanes spaced 5 m apart.
    let region = |rid: &str, x0: f64| {
        Region::new(
            rid,
            rid.to_string(),
            vec![
                (x0, -10.0),
                (x0 + 200.0, -10.0),
                (x0 + 200.0, 210.0),
                (x0, 210.0),
            ],
        )
        .unwrap()
    };
    let regions = vec![
        region("R1", 0.0),
        region("R2", 1200.0),
        region("R3", 2400.0),
        region("R4", 3600.0),
    ];
    let n_trajectories = 500usize;
    let points_each = 400usize;
    let step = 3600.0 / (points_each as f64 - 1.0);
    let trajectories: Vec<Trajectory> = (0..n_trajectories)
        .map(|i| {
            let lane = (i % 40) as f64 * 5.0;
            let points: Vec<TrajectoryPoint> = (0..points_each)
                .map(|k| {
                    TrajectoryPoint::new(
                        100.0 + k as f64 * step,
                        lane,
                        (i * 50_000 + k * 10) as i64,
                    )
                })
                .collect();
            Trajectory::new(format!("t{i:03}"), points).unwrap()
        })
        .collect();
    let params = Params {
        max_dist: 12.0,
        min_sup: 4,
        time_tolerance: 600,
        max_stop_speed: 1.0,
        min_stop_duration: 300,
    };

    let pipeline_started = Instant::now();
    let run = pipeline::run(&trajectories, &regions, &params, 0).unwrap();
    let pipeline_elapsed = pipeline_started.elapsed();
    assert_eq!(run.results.len(), 6, "six ordered disjoint pairs have flow");
    let total_candidates: usize = run.results.iter().map(|r| r.group.candidates.len()).sum();
    assert_eq!(total_candidates, 6 * n_trajectories);
    assert!(
        pipeline_elapsed < Duration::from_secs(60),
        "pipeline took {pipeline_elapsed:?}, budget is 60 s"
    );

    // Same standard computation, indexed vs quadratic, timed sequentially.
    let grid_started = Instant::now();
    let grid_standards: Vec<BTreeSet<u64>> = run
        .results
        .iter()
        .map(|r| find_standards(&r.group, params.max_dist, params.min_sup))
        .collect();
    let grid_elapsed = grid_started.elapsed();

    let brute_started = Instant::now();
    let brute_standards: Vec<BTreeSet<u64>> = run
        .results
        .iter()
        .map(|r| find_standards_brute_force(&r.group, params.max_dist, params.min_sup))
        .collect();
    let brute_elapsed = brute_started.elapsed();

    assert_eq!(grid_standards, brute_standards, "the two routes disagree");
    let speedup = brute_elapsed.as_secs_f64() / grid_elapsed.as_secs_f64();
    assert!(
        speedup >= 5.0,
        "grid {grid_elapsed:?} vs brute {brute_elapsed:?}: only {speedup:.1}x"
    );
    println!(
        "acceptance criterion 9: PASS - pipeline on 500x400 points over 4 \
         regions in {pipeline_elapsed:?}; grid {grid_elapsed:?} vs brute \
         {brute_elapsed:?} ({speedup:.1}x)"
    );
}
