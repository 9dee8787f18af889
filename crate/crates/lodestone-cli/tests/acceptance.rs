//! Acceptance gate: one test per shipping criterion, each ending in a single
//! PASS line (run with `--nocapture` to see them; a failure aborts the test
//! with the offending values). Expected numbers come from closed-form
//! geometry or an inline linear scan, never from the code under test.

use std::f64::consts::TAU;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lodestone::{
    analytic_escape, escape_path, is_connected, is_isomorphic, monte_carlo_escape,
    nearest_linear, partition_corpus, resample_uniqueness, Curve, Isolation, MagnetizedCurve,
    PointLocation, Vector,
};
use lodestone_cli::{escape_row, render_svg, run_bench, Scene};

fn scan_dist(p: [f64; 2], q: [f64; 2]) -> f64 {
    let dx = p[0] - q[0];
    let dy = p[1] - q[1];
    (dx * dx + dy * dy).sqrt()
}

fn star_polygon(rng: &mut ChaCha8Rng) -> Curve {
    let n = rng.random_range(5..=50);
    let cx = rng.random_range(-5.0..5.0);
    let cy = rng.random_range(-5.0..5.0);
    let mut pts = Vec::with_capacity(n);
    for k in 0..n {
        let ang = TAU * (k as f64 + 0.1 + 0.8 * rng.random::<f64>()) / n as f64;
        let r = rng.random_range(0.3..3.0);
        pts.push([cx + r * ang.cos(), cy + r * ang.sin()]);
    }
    Curve::polygon(pts).unwrap()
}

fn random_curve(rng: &mut ChaCha8Rng) -> Curve {
    if rng.random::<f64>() < 0.4 {
        let cx = rng.random_range(-5.0..5.0);
        let cy = rng.random_range(-5.0..5.0);
        let r = rng.random_range(0.2..4.0);
        Curve::circle([cx, cy], r).unwrap()
    } else {
        star_polygon(rng)
    }
}

fn interior_point(curve: &Curve, rng: &mut ChaCha8Rng) -> Vector {
    let (lo, hi) = curve.bounding_box();
    loop {
        let v = Vector::xy(rng.random_range(lo[0]..hi[0]), rng.random_range(lo[1]..hi[1]));
        if curve.point_location(&v).unwrap() == PointLocation::Interior {
            return v;
        }
    }
}

fn scenes_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenes")
}

#[test]
fn criterion_1_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for case in 0..1000 {
        let curve = random_curve(&mut rng);
        let count = rng.random_range(50..=500);
        let mc = MagnetizedCurve::new(curve, count, rng.random::<f64>()).unwrap();
        let hiker = interior_point(mc.curve(), &mut rng);
        let plan = escape_path(&mc, &hiker).unwrap();
        let (_, want) = nearest_linear(mc.magnets().positions(), [hiker[0], hiker[1]]);
        assert_eq!(plan.length, want, "case {case}: escape length != linear-scan minimum");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "1000 scenes took {elapsed:?}, budget is 10 s");
    println!("ACCEPTANCE 1 (oracle equivalence, 1000 scenes, {elapsed:?}): PASS");
}

#[test]
fn criterion_2_analytic_convergence() {
    let curve = Curve::circle([0.0, 0.0], 1.0).unwrap();
    let hiker = Vector::xy(0.5 * 1.0f64.cos(), 0.5 * 1.0f64.sin());
    let report = lodestone::convergence_study(&curve, &hiker, &[90, 360, 3600]).unwrap();
    assert_eq!(report.analytic, analytic_escape(&curve, &hiker).unwrap().length);
    assert!(
        (report.measures[2] - 0.5).abs() <= 1e-6,
        "count 3600 length {} misses 0.5 by more than 1e-6",
        report.measures[2]
    );
    assert!(
        report.errors[0] > report.errors[1] && report.errors[1] > report.errors[2],
        "errors must strictly decrease, got {:?}",
        report.errors
    );
    println!("ACCEPTANCE 2 (analytic convergence, errors {:?}): PASS", report.errors);
}

#[test]
fn criterion_3_isolation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 1000 {
        attempts += 1;
        assert!(attempts < 5000, "too many tied draws; scene generator is degenerate");
        let curve = random_curve(&mut rng);
        let mc = MagnetizedCurve::new(curve, rng.random_range(40..=400), rng.random::<f64>()).unwrap();
        let v = interior_point(mc.curve(), &mut rng);
        let m = mc.magnetize(&v, false).unwrap();
        if m.ties.len() != 1 {
            continue;
        }
        // Open ball of radius `measure`: nothing else may be strictly closer.
        let q = [v[0], v[1]];
        for (i, p) in mc.magnets().positions().iter().enumerate() {
            if i != m.chosen_id {
                assert!(
                    scan_dist(*p, q) >= m.measure,
                    "magnet {i} invades the isolation ball (scene {attempts})"
                );
            }
        }
        assert!(matches!(mc.verify_isolation(&v, mc.tie_eps()).unwrap(), Isolation::StrictlyIsolated));
        checked += 1;
    }

    // Symmetric centers report their full tie sets.
    let circle = Curve::circle([3.0, 2.0], 1.0).unwrap();
    let mc = MagnetizedCurve::new(circle, 360, 0.0).unwrap();
    let m = mc.magnetize(&Vector::xy(3.0, 2.0), false).unwrap();
    assert_eq!(m.ties.len(), 360, "circle center must tie with every magnet");

    let square = Curve::polygon(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
    let mc = MagnetizedCurve::new(square, 400, 0.0).unwrap();
    let m = mc.magnetize(&Vector::xy(0.5, 0.5), false).unwrap();
    assert_eq!(m.ties, vec![50, 150, 250, 350], "square center ties at the four side midpoints");
    match mc.verify_isolation(&Vector::xy(0.5, 0.5), mc.tie_eps()).unwrap() {
        Isolation::TiedIsolation(ties) => assert_eq!(ties.len(), 4),
        other => panic!("expected a 4-way tie, got {other:?}"),
    }
    println!("ACCEPTANCE 3 (isolation, 1000 scenes + symmetric ties): PASS");
}

#[test]
fn criterion_4_dilate_stability_under_resampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let bound = TAU / 360.0;
    for case in 0..100 {
        let radius = rng.random_range(0.5..3.0);
        let curve = Curve::circle([0.0, 0.0], radius).unwrap();
        let d = rng.random_range(0.05..0.95) * radius;
        let theta = rng.random_range(0.0..TAU);
        let v = Vector::xy(d * theta.cos(), d * theta.sin());
        let report = resample_uniqueness(&curve, &v, 360, 720).unwrap();
        assert!(
            report.angular_dev <= bound,
            "case {case}: directions drifted {} rad (> {bound})",
            report.angular_dev
        );
        assert!(report.dilate_lambda > 0.0, "case {case}: choices flipped sides");
    }
    println!("ACCEPTANCE 4 (resampling direction stability, 100 points): PASS");
}

#[test]
fn criterion_5_partition() {
    let count = 360;
    let tol = TAU / count as f64;
    let build = |curve: Curve| MagnetizedCurve::new(curve, count, 0.0).unwrap();

    // The stated corpus: two concentric circles and one translated circle.
    let corpus = vec![
        build(Curve::circle([0.0, 0.0], 1.0).unwrap()),
        build(Curve::circle([0.0, 0.0], 2.0).unwrap()),
        build(Curve::circle([10.0, 0.0], 1.0).unwrap()),
    ];
    let partition = partition_corpus(&corpus, tol).unwrap();
    assert_eq!(partition.classes, vec![vec![0, 1], vec![2]], "expected exactly 2 classes");

    // Invariance under all 6 corpus orders.
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for perm in perms {
        let shuffled: Vec<MagnetizedCurve> = perm.iter().map(|&i| corpus[i].clone()).collect();
        let p = partition_corpus(&shuffled, tol).unwrap();
        let mut mapped: Vec<Vec<usize>> = p
            .classes
            .iter()
            .map(|class| {
                let mut c: Vec<usize> = class.iter().map(|&m| perm[m]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        mapped.sort();
        assert_eq!(mapped, vec![vec![0, 1], vec![2]], "order {perm:?} changed the partition");
    }

    // Reflexivity and symmetry across a 20-curve corpus.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut wide: Vec<MagnetizedCurve> = vec![
        build(Curve::circle([0.0, 0.0], 0.5).unwrap()),
        build(Curve::circle([0.0, 0.0], 1.0).unwrap()),
        build(Curve::circle([0.0, 0.0], 3.7).unwrap()),
        build(Curve::polygon(vec![[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]).unwrap()),
        build(Curve::polygon(vec![[-2.5, -2.5], [2.5, -2.5], [2.5, 2.5], [-2.5, 2.5]]).unwrap()),
        build(Curve::circle([10.0, 0.0], 1.0).unwrap()),
    ];
    while wide.len() < 20 {
        let cx = rng.random_range(-4.0..4.0);
        let cy = rng.random_range(-4.0..4.0);
        let r = rng.random_range(0.3..2.5);
        wide.push(build(Curve::circle([cx, cy], r).unwrap()));
    }
    for (i, a) in wide.iter().enumerate() {
        assert!(is_isomorphic(a, a, tol).unwrap(), "curve {i} must match itself");
    }
    for i in 0..wide.len() {
        for j in (i + 1)..wide.len() {
            assert_eq!(
                is_isomorphic(&wide[i], &wide[j], tol).unwrap(),
                is_isomorphic(&wide[j], &wide[i], tol).unwrap(),
                "symmetry broken on ({i}, {j})"
            );
        }
    }

    // Transitivity, exhaustively over the dilate families.
    let families = vec![
        build(Curve::circle([0.0, 0.0], 0.5).unwrap()),
        build(Curve::circle([0.0, 0.0], 1.0).unwrap()),
        build(Curve::circle([0.0, 0.0], 2.0).unwrap()),
        build(Curve::polygon(vec![[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]).unwrap()),
        build(Curve::polygon(vec![[-3.0, -3.0], [3.0, -3.0], [3.0, 3.0], [-3.0, 3.0]]).unwrap()),
        build(Curve::circle([10.0, 0.0], 1.0).unwrap()),
    ];
    let n = families.len();
    let mut iso = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            iso[i][j] = is_isomorphic(&families[i], &families[j], tol).unwrap();
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if iso[i][j] && iso[j][k] {
                    assert!(iso[i][k], "transitivity broken on ({i}, {j}, {k})");
                }
            }
        }
    }
    // And a sanity pin: a connection witness exists inside a family.
    assert!(is_connected(&families[0], &families[1], tol).unwrap().is_some());
    println!("ACCEPTANCE 5 (partition: 2 classes, permutation-stable, equivalence axioms): PASS");
}

#[test]
fn criterion_6_monte_carlo_disk() {
    let curve = Curve::circle([0.0, 0.0], 1.0).unwrap();
    let mc = MagnetizedCurve::new(curve, 360, 0.0).unwrap();
    let stats = monte_carlo_escape(&mc, 100_000, 42).unwrap();
    assert!(
        (stats.mean_length - 1.0 / 3.0).abs() <= 0.01,
        "disk mean escape {} misses 1/3 by more than 0.01",
        stats.mean_length
    );
    let again = monte_carlo_escape(&mc, 100_000, 42).unwrap();
    assert_eq!(stats, again, "same seed must reproduce bitwise");
    println!("ACCEPTANCE 6 (Monte Carlo disk, mean {}): PASS", stats.mean_length);
}

#[test]
fn criterion_7_index_performance() {
    let started = Instant::now();
    let report = run_bench(100_000, 10_000, 0).unwrap();
    let elapsed = started.elapsed();
    assert!(
        report.speedup >= 5.0,
        "index speedup {} is below the 5x gate (index {} ns, scan {} ns)",
        report.speedup,
        report.index_median_ns,
        report.scan_median_ns
    );
    assert!(elapsed.as_secs_f64() < 60.0, "bench took {elapsed:?}, budget is 60 s");
    println!(
        "ACCEPTANCE 7 (performance, speedup {:.1}x in {elapsed:?}): PASS",
        report.speedup
    );
}

#[test]
fn criterion_8_golden_files() {
    let dir = scenes_dir();
    let cases = [
        ("circle", include_str!("golden/circle.csv"), include_str!("golden/circle.svg")),
        ("square", include_str!("golden/square.csv"), include_str!("golden/square.svg")),
    ];
    for (name, golden_csv, golden_svg) in cases {
        let scene = Scene::load(&dir.join(format!("{name}.json"))).unwrap();
        let mc = scene.magnetized(true).unwrap();
        let plan = escape_path(&mc, scene.hiker().unwrap()).unwrap();

        let row = format!("{}\n", escape_row(&plan));
        assert_eq!(row, golden_csv, "{name}: CSV row drifted from the golden file");

        let svg = render_svg(&mc, Some(&plan));
        let svg_again = render_svg(&mc, Some(&plan));
        assert_eq!(svg, svg_again, "{name}: rendering is not run-stable");
        assert_eq!(svg, golden_svg, "{name}: SVG drifted from the golden file");

        // Structural spot checks on the rendered scene.
        assert_eq!(svg.matches("class=\"boundary\"").count(), 1);
        assert_eq!(svg.matches("class=\"escape\"").count(), 1);
        assert_eq!(svg.matches("class=\"hiker\"").count(), 1);
        assert!(svg.matches("class=\"magnet\"").count() <= lodestone_cli::MAX_MAGNET_MARKS);
    }
    println!("ACCEPTANCE 8 (golden CSV/SVG byte-stable): PASS");
}
