//! Acceptance suite. Runs without the libtest harness and prints one line per
//! criterion; exits nonzero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;

use common::{check_pipeline, random_ac_drawing, random_obstruction_instance};
use fap::acgraph::{ac_upper_bound, bounds_table, AcCase, BoundValue, Variant};
use fap::angles::{partition_noncrossing, segments_cross, select_noncrossing, SegmentSet};
use fap::construct::{collinear_construction, grid_construction, large_angle_construction, CollinearStyle};
use fap::kernel::{angle_at_bend, bend_point_on_arc};
use fap::solve::{arc_blocking_threshold, enumerate_candidates, max_plane_graph, Family};
use fap::validate::{check_triangle_obstruction, find_lenses, validate_drawing, Mode, Obstruction};
use fap::{AngleSpec, Drawing, Point, Segment, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn line(n: usize) -> Vec<Point> {
    (0..n).map(|i| Point::new(i as f64, 0.0)).collect()
}

fn mode_of(multi: bool) -> Mode {
    if multi {
        Mode::Multigraph
    } else {
        Mode::Simple
    }
}

/// Edge counts on `n` collinear points: (arc simple, arc multi, bend simple, bend multi).
fn collinear_counts(n: usize, alpha: AngleSpec) -> [usize; 4] {
    let bend = [3 * n - 6, 4 * n - 6];
    if alpha.cmp_frac_pi(1, 2).is_ge() {
        [3 * n - 6, 4 * n - 6, bend[0], bend[1]]
    } else {
        [2 * n - 3, 2 * n - 2, bend[0], bend[1]]
    }
}

fn collinear_exactness() -> Outcome {
    let styles =
        [CollinearStyle::ArcSimple, CollinearStyle::ArcMulti, CollinearStyle::BendSimple, CollinearStyle::BendMulti];
    let mut checked = 0;
    for n in 3..=8 {
        for alpha in [AngleSpec::frac_pi(1, 4), AngleSpec::frac_pi(1, 2), AngleSpec::frac_pi(2, 3)] {
            let want = collinear_counts(n, alpha);
            for (style, want) in styles.into_iter().zip(want) {
                let d = collinear_construction(n, alpha, style).map_err(|e| format!("n={n} {alpha} {style:?}: {e}"))?;
                ensure(d.edges.len() == want, || {
                    format!("n={n} {alpha} {style:?}: {} edges, want {want}", d.edges.len())
                })?;
                let r = validate_drawing(&d, mode_of(style.is_multi()));
                ensure(r.valid, || format!("n={n} {alpha} {style:?}: invalid"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} constructions with exact edge counts, all valid"))
}

/// Largest valid subset of the candidate arcs, by brute force over all subsets.
fn enumerate_max(points: &[Point], alpha: AngleSpec, mode: Mode) -> usize {
    let cands = enumerate_candidates(points, alpha, Family::Arc, 1).candidates;
    let mut best = 0;
    for mask in 0u32..1 << cands.len() {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let edges = (0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
        let d = Drawing::new(alpha, points.to_vec(), edges).unwrap();
        if validate_drawing(&d, mode).valid {
            best = size;
        }
    }
    best
}

fn solver_formula_agreement() -> Outcome {
    let mut checked = 0;
    for n in 3..=5 {
        for alpha in
            [AngleSpec::frac_pi(1, 4), AngleSpec::frac_pi(1, 3), AngleSpec::frac_pi(1, 2), AngleSpec::frac_pi(2, 3)]
        {
            let want = collinear_counts(n, alpha);
            for (multi, want) in [(false, want[0]), (true, want[1])] {
                let mode = mode_of(multi);
                let got = max_plane_graph(&line(n), alpha, Family::Arc, mode, 1).map_err(|e| e.to_string())?;
                ensure(got.count == want, || format!("n={n} {alpha} {mode:?}: solver {} want {want}", got.count))?;
                ensure(validate_drawing(&got.witness, mode).valid, || format!("n={n} {alpha}: witness invalid"))?;
                if n <= 4 {
                    let brute = enumerate_max(&line(n), alpha, mode);
                    ensure(brute == got.count, || format!("n={n} {alpha} {mode:?}: enumeration {brute}"))?;
                }
                checked += 1;
            }
        }
    }
    let q = AngleSpec::frac_pi(1, 4);
    let s = max_plane_graph(&line(4), q, Family::Arc, Mode::Simple, 1).map_err(|e| e.to_string())?.count;
    let m = max_plane_graph(&line(4), q, Family::Arc, Mode::Multigraph, 1).map_err(|e| e.to_string())?.count;
    ensure((s, m) == (5, 6), || format!("n=4 π/4: ({s}, {m}) want (5, 6)"))?;
    Ok(format!("{checked} solver runs match the formulas; n=4 π/4 gives 5 and 6"))
}

fn inscribed_angle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let a = Point::new(rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0));
        let c = Point::new(rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0));
        let alpha = rng.gen_range(0.01..PI - 0.01);
        let side = if rng.gen() { Side::Left } else { Side::Right };
        let t = rng.gen_range(0.001..0.999);
        let b = bend_point_on_arc(a, c, side, alpha, t).map_err(|e| e.to_string())?;
        let got = angle_at_bend(a, b, c).map_err(|e| e.to_string())?;
        worst = worst.max((got - alpha).abs());
    }
    ensure(worst <= 1e-9, || format!("max error {worst:e}"))?;
    Ok(format!("10000 samples, max error {worst:.1e}"))
}

fn obstruction_and_grid() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for alpha in [AngleSpec::frac_pi(1, 2), AngleSpec::frac_pi(2, 3)] {
        let mut checked = 0;
        while checked < 10_000 {
            let Some((tri, bends)) = random_obstruction_instance(&mut rng, alpha) else { continue };
            let r = check_triangle_obstruction(alpha, tri, bends).map_err(|e| e.to_string())?;
            ensure(r != Obstruction::Feasible, || format!("{alpha}: feasible triangle {tri:?} {bends:?}"))?;
            checked += 1;
        }
    }
    let d = grid_construction(3, AngleSpec::frac_pi(3, 4)).map_err(|e| e.to_string())?;
    ensure(d.edges.len() == 18, || format!("grid has {} edges", d.edges.len()))?;
    ensure(validate_drawing(&d, Mode::Multigraph).valid, || "grid invalid".into())?;
    let lenses = find_lenses(&d).map_err(|e| e.to_string())?;
    let empty = lenses.lenses.iter().filter(|l| l.empty).count();
    ensure(empty == 9, || format!("grid has {empty} empty lenses"))?;
    Ok("2×10000 triangles never feasible; grid m=3 has 18 edges, 9 empty lenses".into())
}

fn pentagram() -> SegmentSet {
    let v: Vec<Point> = (0..5).map(|i| Point::from_angle(PI / 2.0 + 2.0 * PI * i as f64 / 5.0)).collect();
    let segments = (0..5).map(|i| Segment::new(v[i], v[(i + 2) % 5])).collect();
    SegmentSet { segments, vertices: v }
}

fn noncrossing(set: &SegmentSet, idx: &[usize]) -> bool {
    idx.iter()
        .enumerate()
        .all(|(k, &i)| idx[k + 1..].iter().all(|&j| !segments_cross(&set.segments[i], &set.segments[j], &set.vertices)))
}

/// Random axis-parallel segments.
fn orthogonal_set(rng: &mut ChaCha8Rng, m: usize) -> SegmentSet {
    let segments = (0..m)
        .map(|_| {
            let (x, y) = (rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0));
            let len = rng.gen_range(1.0..6.0);
            if rng.gen() {
                Segment::new(Point::new(x, y), Point::new(x + len, y))
            } else {
                Segment::new(Point::new(x, y), Point::new(x, y + len))
            }
        })
        .collect();
    SegmentSet { segments, vertices: Vec::new() }
}

fn segment_selection() -> Outcome {
    let a = AngleSpec::frac_pi(2, 5);
    let s = pentagram();
    let sel = select_noncrossing(&s, a).map_err(|e| e.to_string())?;
    ensure(sel.len() >= 2 && noncrossing(&s, &sel), || format!("C5 selection {sel:?}"))?;
    let parts = partition_noncrossing(&s, a).map_err(|e| e.to_string())?;
    ensure(parts.len() == 3, || format!("C5 partition has {} classes", parts.len()))?;
    ensure(parts.iter().all(|p| noncrossing(&s, p)), || "C5 class crosses".into())?;
    ensure(parts.iter().map(Vec::len).sum::<usize>() == 5, || "C5 partition does not cover".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let half = AngleSpec::frac_pi(1, 2);
    for _ in 0..200 {
        let m = rng.gen_range(2..30);
        let set = orthogonal_set(&mut rng, m);
        let sel = select_noncrossing(&set, half).map_err(|e| e.to_string())?;
        ensure(2 * sel.len() >= m, || format!("kept {} of {m}", sel.len()))?;
        ensure(noncrossing(&set, &sel), || "π/2 selection crosses".into())?;
        let parts = partition_noncrossing(&set, half).map_err(|e| e.to_string())?;
        ensure(parts.len() <= 2 && parts.iter().all(|p| noncrossing(&set, p)), || "π/2 partition".into())?;
    }
    Ok(format!("C5 keeps {} of 5 in 3 classes; 200 orthogonal sets keep at least half", sel.len()))
}

fn bound_calculators() -> Outcome {
    let irr = AngleSpec::irrational(1.2).unwrap();
    let cases = [
        (Variant::TheoremAc, AngleSpec::frac_pi(1, 3), AcCase::I, 174),
        (Variant::TheoremAc, AngleSpec::frac_pi(1, 5), AcCase::Ii, 151),
        (Variant::TheoremAc, AngleSpec::frac_pi(2, 5), AcCase::Iii, 134),
        (Variant::TheoremAc, irr, AcCase::Iv, 130),
        (Variant::LemmaAc, AngleSpec::frac_pi(1, 3), AcCase::Ii, 102),
    ];
    for (variant, alpha, case, want) in cases {
        let b = ac_upper_bound(10, alpha, variant).map_err(|e| e.to_string())?;
        ensure(b.floor == want && b.case == case, || format!("{variant:?} {alpha}: {} ({:?})", b.floor, b.case))?;
    }
    let t = bounds_table(10, AngleSpec::frac_pi(1, 2));
    let exact = |q: &str| t.row(q).map(|r| (r.lower.clone(), r.upper.clone()));
    ensure(exact("M_b") == Some((BoundValue::Exact(24), BoundValue::Exact(24))), || format!("M_b {:?}", exact("M_b")))?;
    ensure(exact("M_a_multi") == Some((BoundValue::Exact(34), BoundValue::Exact(34))), || {
        format!("M_a_multi {:?}", exact("M_a_multi"))
    })?;
    Ok("174, 151, 134, 130, 102; M_b = 24, M_a_multi = 34".into())
}

fn red_graph_pipeline() -> Outcome {
    let angles = [
        AngleSpec::frac_pi(1, 3),
        AngleSpec::frac_pi(1, 4),
        AngleSpec::frac_pi(1, 5),
        AngleSpec::frac_pi(2, 5),
        AngleSpec::frac_pi(1, 2),
        AngleSpec::irrational(1.0).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut instances, mut tier1, mut overlaps) = (0, 0, 0);
    for alpha in angles {
        for n in [6, 8, 10, 12] {
            let d = random_ac_drawing(&mut rng, n, alpha, 200);
            let out = check_pipeline(&d).map_err(|e| format!("{alpha} n={n}: {e}"))?;
            instances += 1;
            tier1 += usize::from(out.tier1);
            overlaps += usize::from(out.overlaps);
        }
    }
    ensure(instances >= 20, || format!("only {instances} instances"))?;
    Ok(format!("{instances} instances ({tier1} with first-tier edges, {overlaps} needing perturbation)"))
}

fn angle_regimes() -> Outcome {
    let tri = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 3f64.sqrt() / 2.0)];
    let d = large_angle_construction(&tri, AngleSpec::frac_pi(5, 6), true).map_err(|e| e.to_string())?;
    ensure(d.edges.len() == 6, || format!("equilateral gives {} edges", d.edges.len()))?;
    ensure(validate_drawing(&d, Mode::Multigraph).valid, || "equilateral drawing invalid".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pts: Vec<Point> = (0..5).map(|_| Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0))).collect();
    let star = arc_blocking_threshold(&pts).map_err(|e| e.to_string())?;
    let half = AngleSpec::irrational(star / 2.0).map_err(|e| e.to_string())?;
    let s = max_plane_graph(&pts, half, Family::Arc, Mode::Simple, 1).map_err(|e| e.to_string())?.count;
    let m = max_plane_graph(&pts, half, Family::Arc, Mode::Multigraph, 1).map_err(|e| e.to_string())?.count;
    ensure((s, m) == (1, 2), || format!("at α*/2 = {:.4}: ({s}, {m}) want (1, 2)", star / 2.0))?;
    Ok(format!("equilateral 5π/6 gives 6 arcs; α* = {star:.4}, solver gives 1 and 2 at α*/2"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("collinear exactness", collinear_exactness),
        ("solver-formula agreement", solver_formula_agreement),
        ("inscribed angle", inscribed_angle),
        ("triangle obstruction and grid", obstruction_and_grid),
        ("segment selection", segment_selection),
        ("bound calculators", bound_calculators),
        ("red-graph pipeline", red_graph_pipeline),
        ("large and small angle regimes", angle_regimes),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
