//! Grid-level properties: line coordinates, conservativeness of the active
//! lists and monotonicity under refinement.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semidual_core::*;

/// World segment whose carrier line has coordinates `(s, b)` in `branch`,
/// relative to the box centre.
fn segment_from_rep(bbox: &BoundingBox2, branch: Branch, s: f64, b: f64) -> Segment2 {
    let c = bbox.center;
    let (p, q) = match branch {
        Branch::KQ => (Point2::new(-1.0, b - s), Point2::new(1.0, b + s)),
        Branch::MP => (Point2::new(b - s, -1.0), Point2::new(b + s, 1.0)),
    };
    let r = 4.0 * bbox.h;
    let (p, q) = (p * r, q * r);
    let shift = |v: Point2| Point2::new(v.x + c.x, v.y + c.y);
    Segment2::new(shift(p), shift(q)).unwrap()
}

proptest! {
    #[test]
    fn semidual_round_trip(x0 in -1e3f64..1e3, y0 in -1e3f64..1e3, x1 in -1e3f64..1e3, y1 in -1e3f64..1e3) {
        prop_assume!((x0, y0) != (x1, y1));
        let (p, q) = (Point2::new(x0, y0), Point2::new(x1, y1));
        let r = to_semidual(p, q).unwrap();
        prop_assert!(r.slope.abs() <= 1.0);
        for v in [p, q] {
            let (d, c) = r.branch.frame(v);
            prop_assert!((c - (r.slope * d + r.intercept)).abs() <= 1e-9 * (1.0 + c.abs() + d.abs()));
        }
        let expect = if (y1 - y0).abs() <= (x1 - x0).abs() { Branch::KQ } else { Branch::MP };
        prop_assert_eq!(r.branch, expect);
    }

    #[test]
    fn lines_through_the_box_stay_in_range(seed in any::<u64>(), a in 0.0f64..1.0, b in 0.0f64..1.0, angle in 0.0f64..6.3) {
        let poly = gen_convex_polygon(8, seed, 3.0);
        let bbox = *poly.bbox();
        // any point of the box, any direction
        let p = Point2::new(bbox.center.x + (2.0 * a - 1.0) * bbox.half_x, bbox.center.y + (2.0 * b - 1.0) * bbox.half_y);
        let q = p + Point2::new(angle.cos(), angle.sin());
        let r = to_semidual(bbox.to_local(p), bbox.to_local(q)).unwrap();
        prop_assert!(r.intercept.abs() <= bbox.h * (1.0 + 1e-12));
    }
}

#[test]
fn square_ael_sample_is_conservative() {
    let clipper = build_clipper_2d(fixtures::unit_square(), Subdivision::uniform(4)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let branch = if rng.gen() { Branch::KQ } else { Branch::MP };
        let g = clipper.grid(branch).frame();
        let (i, j) = (rng.gen_range(0..g.n_intercept), rng.gen_range(0..g.n_slope));
        let r = g.cell_rect(i, j);
        let s = rng.gen_range(r.slope_lo..=r.slope_hi);
        let b = rng.gen_range(r.intercept_lo..=r.intercept_hi);
        let seg = segment_from_rep(clipper.bbox(), branch, s, b);
        clipper.clip_audited(&seg, &mut OpCounter::new()).unwrap();
    }
}

#[test]
fn planar_refinement_is_monotone() {
    for seed in 0..6 {
        let p = gen_convex_polygon(5 + seed as usize, seed, 2.0);
        let coarse = build_clipper_2d(p.clone(), Subdivision::new(7, 9, 5, 11)).unwrap();
        let fine = build_clipper_2d(p, Subdivision::new(14, 18, 10, 22)).unwrap();
        for branch in Branch::ALL {
            let (g, h) = (coarse.grid(branch), fine.grid(branch));
            let f = h.frame();
            for i in 0..f.n_intercept {
                for j in 0..f.n_slope {
                    let parent = g.ael(i / 2, j / 2);
                    assert!(h.ael(i, j).iter().all(|e| parent.contains(e)), "seed {seed} {branch:?} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn spatial_refinement_is_monotone() {
    let p = gen_convex_polyhedron(60, 4, 1.0).unwrap();
    let coarse = build_clipper_3d(p.clone(), Subdivision::new(3, 5, 4, 6)).unwrap();
    let fine = build_clipper_3d(p, Subdivision::new(6, 10, 8, 12)).unwrap();
    for n in 1..=6 {
        let (g, h) = (coarse.grid_by_number(n).unwrap(), fine.grid_by_number(n).unwrap());
        for i in 0..h.frame().n_intercept {
            for j in 0..h.frame().n_slope {
                assert!(h.bitmap(i, j).is_subset_of(&g.bitmap(i / 2, j / 2)));
            }
        }
    }
}

#[test]
fn spatial_candidates_are_conservative() {
    let p = gen_convex_polyhedron(100, 8, 1.0).unwrap();
    let clipper = build_clipper_3d(p.clone(), Subdivision::uniform(6)).unwrap();
    for s in gen_segments_3d(&p, 2000, 0.7, 3) {
        clipper.clip_audited(&s, &mut OpCounter::new()).unwrap();
    }
}

#[test]
fn stats_cover_every_cell() {
    let p = gen_convex_polygon(10, 1, 1.0);
    let c = build_clipper_2d(p, Subdivision::adequate(10)).unwrap();
    let st = c.ael_statistics();
    assert_eq!(st.kq.cells, 10 * 100);
    assert_eq!(st.kq.histogram.iter().sum::<u64>(), 1000);
    assert!(st.prep_ops.total() > 0);
}
