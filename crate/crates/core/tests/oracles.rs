mod common;

use common::*;
use horton::analysis::{
    count_empty_triangles, is_horton, largest_empty_hole, largest_empty_hole_exhaustive, same_labeled_order_type,
    TriangleTable,
};
use horton::construct::{classic_horton, small_horton};
use horton::{orientation, Drawing, Point};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn empty_triangles_on_horton_sets() {
    for k in 0..=5 {
        for s in [small_horton(k).unwrap(), classic_horton(k).unwrap()] {
            assert_eq!(count_empty_triangles(&s), naive_empty_triangles(&s), "k={k}");
        }
    }
}

#[test]
fn empty_triangles_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..50 {
        let n = rng.gen_range(3..=32);
        let range = if case % 2 == 0 { 20 } else { 1_000_000 };
        let s = random_general_position(&mut rng, n, range);
        assert_eq!(count_empty_triangles(&s), naive_empty_triangles(&s), "case {case}");
    }
}

#[test]
fn empty_triangles_with_collinear_points() {
    let s = Drawing::from_coords([(0, 0), (1, 0), (2, 0), (1, 1), (1, -1), (3, 2), (0, 2)]);
    assert_eq!(count_empty_triangles(&s), naive_empty_triangles(&s));
}

#[test]
fn triangle_table_matches_per_triple() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = random_general_position(&mut rng, 14, 50);
    let table = TriangleTable::new(&s);
    let p = s.points();
    for i in 0..14 {
        for j in 0..14 {
            for k in 0..14 {
                if i == j || j == k || i == k {
                    continue;
                }
                let occupied = (0..14).filter(|r| ![i, j, k].contains(r)).any(|r| {
                    let (s1, s2, s3) =
                        (side(&p[i], &p[j], &p[r]), side(&p[j], &p[k], &p[r]), side(&p[k], &p[i], &p[r]));
                    s1 == s2 && s2 == s3
                });
                assert_eq!(table.is_empty_triangle(i, j, k), !occupied);
            }
        }
    }
}

#[test]
fn horton_check_matches_definition() {
    for k in 0..=6 {
        let s = small_horton(k).unwrap();
        assert!(naive_is_horton(s.points()));
        assert!(is_horton(&s).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut disagreements = 0;
    let mut horton_seen = 0;
    for _ in 0..300 {
        // Jitter P^3 so that some perturbations stay Horton and some do not.
        let base = small_horton(3).unwrap();
        let s = Drawing::new(
            base.iter()
                .map(|p| Point::new(&p.x * 4 + rng.gen_range(-1..=1), &p.y * 2 + rng.gen_range(-3..=3)))
                .collect(),
        );
        if !in_general_position(s.points()) {
            continue;
        }
        let expect = naive_is_horton(s.points());
        horton_seen += usize::from(expect);
        match is_horton(&s) {
            Ok(got) => disagreements += usize::from(got != expect),
            Err(_) => assert!(!expect),
        }
    }
    assert_eq!(disagreements, 0);
    assert!(horton_seen > 0);
}

#[test]
fn holes_match_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..40 {
        let n = rng.gen_range(3..=12);
        let s = random_general_position(&mut rng, n, 30);
        let expect = subset_max_hole(&s);
        assert_eq!(largest_empty_hole(&s).unwrap().max_hole, expect, "case {case}");
        assert_eq!(largest_empty_hole_exhaustive(&s).unwrap(), expect, "case {case}");
    }
    for k in 2..=3 {
        let s = small_horton(k).unwrap();
        assert_eq!(largest_empty_hole(&s).unwrap().max_hole, subset_max_hole(&s));
    }
}

#[test]
fn hole_witness_is_an_empty_convex_polygon() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let s = random_general_position(&mut rng, 20, 100);
        let r = largest_empty_hole(&s).unwrap();
        assert_eq!(r.witness.len(), r.max_hole);
        let w: Vec<Point> = r.witness.iter().map(|&i| s[i].clone()).collect();
        let h = w.len();
        // Consistently oriented and strictly convex.
        let turn = side(&w[0], &w[1], &w[2]);
        for e in 0..h {
            assert_eq!(side(&w[e], &w[(e + 1) % h], &w[(e + 2) % h]), turn);
        }
        for (i, p) in s.iter().enumerate() {
            if !r.witness.contains(&i) {
                assert!((0..h).any(|e| side(&w[e], &w[(e + 1) % h], p) != turn));
            }
        }
    }
}

#[test]
fn orientation_matches_rational_determinant_on_big_coordinates() {
    let mut rng = ChaCha8Rng::seed_from_u64(256);
    for _ in 0..2000 {
        let bits = rng.gen_range(1..=300);
        let mut pt = || Point::new(random_bigint(&mut rng, bits), random_bigint(&mut rng, bits));
        let (p, q, r) = (pt(), pt(), pt());
        assert_eq!(orientation(&p, &q, &r).sign(), rational_side(&p, &q, &r));
    }
    // Collinear triples on a big line.
    let big = BigInt::from(1) << 200u32;
    let p = Point::new(0, 0);
    let q = Point::new(big.clone(), &big * 3 + 1);
    let r = Point::new(&big * 2, (&big * 3 + 1) * 2);
    assert_eq!(orientation(&p, &q, &r).sign(), 0);
    assert_eq!(rational_side(&p, &q, &r), 0);
}

proptest! {
    #[test]
    fn orientation_matches_rational_determinant(
        a in any::<(i64, i64)>(), b in any::<(i64, i64)>(), c in any::<(i64, i64)>(),
    ) {
        let (p, q, r) = (Point::new(a.0, a.1), Point::new(b.0, b.1), Point::new(c.0, c.1));
        prop_assert_eq!(orientation(&p, &q, &r).sign(), rational_side(&p, &q, &r));
    }

    #[test]
    fn vertical_shears_keep_the_order_type(k in 1u32..=5, c in -50i64..=50, d in 1i64..=7, dy in -1000i64..1000) {
        let s = small_horton(k).unwrap();
        // (x, y) -> (x, c x + d y + dy): x-order is unchanged and det = d > 0.
        let t = s.linear_map([[1, 0], [c, d]]).translate(&0.into(), &dy.into());
        prop_assert!(same_labeled_order_type(&s, &t).unwrap());
        prop_assert!(is_horton(&t).unwrap());
    }

    #[test]
    fn stretching_x_keeps_the_order_type(k in 1u32..=5, a in 1i64..=9, b in 0i64..=3) {
        let s = small_horton(k).unwrap();
        // y-shear by b keeps x-order only when it is small against x-gaps,
        // so shear along y and then scale x by a.
        let t = s.linear_map([[a, 0], [b, 1]]);
        prop_assert!(same_labeled_order_type(&s, &t).unwrap());
    }

    #[test]
    fn mirror_flips_every_orientation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_general_position(&mut rng, 8, 40);
        let m = s.linear_map([[-1, 0], [0, 1]]);
        let p = s.points();
        let q = m.points();
        for i in 0..8 { for j in i + 1..8 { for k in j + 1..8 {
            prop_assert_eq!(orientation(&p[i], &p[j], &p[k]).reversed(), orientation(&q[i], &q[j], &q[k]));
        }}}
    }
}
