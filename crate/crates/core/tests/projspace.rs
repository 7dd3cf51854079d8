use std::collections::HashSet;

use proptest::prelude::*;
use surfacecodes::gf::Field;
use surfacecodes::projspace::*;

fn count_zeros(f: &HomogeneousPoly) -> usize {
    // independent oracle: scan every nonzero vector of GF(q)^4, divide by q-1
    let q = f.field().order() as usize;
    let mut n = 0;
    for code in 1..q.pow(4) {
        let x: Vec<u16> = (0..4).map(|i| ((code / q.pow(i)) % q) as u16).collect();
        if f.eval(&x) == 0 {
            n += 1;
        }
    }
    n / (q - 1)
}

#[test]
fn point_and_line_counts() {
    let f4 = Field::of_order(4).unwrap();
    let f8 = Field::of_order(8).unwrap();
    let f9 = Field::of_order(9).unwrap();
    assert_eq!(enumerate_points(&f4, 2).len(), 21);
    assert_eq!(enumerate_points(&f8, 3).len(), 585);
    assert_eq!(enumerate_points(&f9, 3).len(), 820);
    let l4 = enumerate_lines(&f4);
    assert_eq!(l4.len(), 357);
    assert!(l4.iter().all(|l| l.points().len() == 5));
    assert_eq!(l4.iter().collect::<HashSet<_>>().len(), 357);
    let l9 = enumerate_lines(&f9);
    assert_eq!(l9.len(), 7462);
    assert!(l9.iter().all(|l| l.points().len() == 10));
}

#[test]
fn point_index_matches_enumeration() {
    for q in [2, 3, 4, 5] {
        let f = Field::of_order(q).unwrap();
        for r in [2, 3] {
            let pts = enumerate_points(&f, r);
            assert_eq!(pts.len(), point_count(q, r));
            for (i, p) in pts.iter().enumerate() {
                assert_eq!(p.index(q), i);
            }
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn quadric_presets() {
    let f4 = Field::of_order(4).unwrap();
    let hyp = Surface::hyperbolic_quadric(&f4);
    assert_eq!(hyp.points().len(), 25);
    assert_eq!(count_zeros(hyp.equation().unwrap()), 25);
    assert_eq!(hyp.lines().len(), 10);
    let f8 = Field::of_order(8).unwrap();
    let ell = Surface::elliptic_quadric(&f8);
    assert_eq!(ell.points().len(), 65);
    assert_eq!(count_zeros(ell.equation().unwrap()), 65);
    assert!(ell.lines().is_empty());
}

#[test]
fn lines_agree_with_exhaustive_line_scan() {
    let f4 = Field::of_order(4).unwrap();
    let hyp = Surface::hyperbolic_quadric(&f4);
    let eq = hyp.equation().unwrap();
    let mut all = enumerate_lines(&f4);
    all.reverse();
    let mut scanned: Vec<_> = all.into_iter().filter(|l| l.points().iter().all(|p| eq.eval(p.coords()) == 0)).collect();
    scanned.sort_by(|a, b| a.points().cmp(b.points()));
    let mut cached = hyp.lines().to_vec();
    cached.sort_by(|a, b| a.points().cmp(b.points()));
    assert_eq!(scanned, cached);
}

#[test]
fn tangent_sections_and_charts() {
    for q in [4, 8, 9, 16] {
        let f = Field::of_order(q).unwrap();
        let qq = q as usize;
        for (s, on_plane) in [(Surface::elliptic_quadric(&f), 1), (Surface::hyperbolic_quadric(&f), 2 * qq + 1)] {
            let p = s.default_chart_point().unwrap();
            let h = s.tangent_plane_section(&p).unwrap();
            assert_eq!(h.eval(p.coords()), 0);
            let on = s.points_on(&h).unwrap();
            let chart = s.affine_chart(&h).unwrap();
            assert_eq!(on.len(), on_plane);
            assert_eq!(chart.len(), qq * qq);
            assert_eq!(on.len() + chart.len(), s.points().len());
        }
    }
    let f4 = Field::of_order(4).unwrap();
    let plane = Surface::projective_plane(&f4);
    let line = HomogeneousPoly::linear_form(&f4, &[1, 0, 0]);
    assert_eq!(plane.affine_chart(&line).unwrap().len(), 16);
}

#[test]
fn smoothness() {
    let f4 = Field::of_order(4).unwrap();
    assert!(Surface::hyperbolic_quadric(&f4).smoothness_check(2).unwrap().passed());
    let cone = HomogeneousPoly::new(
        &f4,
        4,
        2,
        vec![Term { exps: vec![1, 1, 0, 0], coeff: 1 }, Term { exps: vec![0, 0, 2, 0], coeff: 1 }],
    )
    .unwrap();
    let cone = Surface::from_equation(cone).unwrap();
    assert_eq!(cone.kind(), SurfaceKind::Custom);
    let rep = cone.smoothness_check(2).unwrap();
    let w = rep.singular.unwrap();
    assert_eq!((w.ext_degree, w.coords.as_slice(), w.exact), (1, &[0, 0, 0, 1][..], true));
    assert!(cone.tangent_plane_section(&ProjectivePoint::new(&f4, &[0, 0, 0, 1]).unwrap()).is_err());

    let fermat = HomogeneousPoly::new(
        &f4,
        4,
        3,
        (0..4)
            .map(|i| {
                let mut e = vec![0; 4];
                e[i] = 3;
                Term { exps: e, coeff: 1 }
            })
            .collect(),
    )
    .unwrap();
    let s = Surface::from_equation(fermat).unwrap();
    let rep = s.smoothness_check(2).unwrap();
    assert!(rep.passed() && rep.partial);
}

#[test]
fn singular_point_off_the_base_field_is_found() {
    // (X0^2 + X0 X1 + X1^2) X3 + X2^3 + X3^3 over GF(2) is singular only at a
    // conjugate pair of GF(4)-points with X2 = X3 = 0
    let f2 = Field::of_order(2).unwrap();
    let eq = HomogeneousPoly::new(
        &f2,
        4,
        3,
        vec![
            Term { exps: vec![2, 0, 0, 1], coeff: 1 },
            Term { exps: vec![1, 1, 0, 1], coeff: 1 },
            Term { exps: vec![0, 2, 0, 1], coeff: 1 },
            Term { exps: vec![0, 0, 3, 0], coeff: 1 },
            Term { exps: vec![0, 0, 0, 3], coeff: 1 },
        ],
    )
    .unwrap();
    let s = Surface::from_equation(eq).unwrap();
    assert!(s.smoothness_check(1).unwrap().passed());
    let w = s.smoothness_check(2).unwrap().singular.unwrap();
    assert_eq!(w.ext_degree, 2);
    assert!(w.exact);
    assert_eq!(&w.coords[2..], &[0, 0]);
}

#[test]
fn cubic_search() {
    let f9 = Field::of_order(9).unwrap();
    let rep = find_cubic_no_lines(&f9, 5000, 1, CubicFamily::EmptyPlane).unwrap();
    let s = &rep.surface;
    assert_eq!(s.kind(), SurfaceKind::CubicNoLines);
    assert_eq!(s.points().len(), 100);
    assert!(s.lines().is_empty());
    let plane = rep.empty_plane.unwrap();
    assert_eq!(s.affine_chart(&plane).unwrap().len(), 100);
    let again = Surface::from_text(&s.to_text()).unwrap();
    assert!(again.lines().is_empty());
    assert_eq!(again.to_text(), s.to_text());
    // deterministic per seed
    let rep2 = find_cubic_no_lines(&f9, 5000, 1, CubicFamily::EmptyPlane).unwrap();
    assert_eq!(rep2.surface.to_text(), s.to_text());

    let f2 = Field::of_order(2).unwrap();
    match find_cubic_no_lines(&f2, 50, 3, CubicFamily::Generic) {
        Ok(r) => assert!(r.surface.lines().is_empty()),
        Err(e) => assert_eq!(e, surfacecodes::Error::NotFound(50)),
    }
}

#[test]
fn norm_form_has_no_rational_zero() {
    for q in [4, 8, 9] {
        let f = Field::of_order(q).unwrap();
        let n = norm_form(&f).unwrap();
        let zeros = enumerate_points(&f, 2)
            .iter()
            .filter(|p| {
                let c = p.coords();
                n.eval(&[0, c[0], c[1], c[2]]) == 0
            })
            .count();
        assert_eq!(zeros, 0);
    }
}

#[test]
fn surface_file_round_trip() {
    let text = "q=3^2\nvars=4\n1 1 0 0 1\n8 0 1 1 0\n";
    let s = Surface::from_text(text).unwrap();
    assert_eq!(s.kind(), SurfaceKind::HyperbolicQuadric);
    assert_eq!(s.to_text(), text);
    let p2 = Surface::from_text("# plane\nq=2^2\nvars=3\n").unwrap();
    assert_eq!(p2.kind(), SurfaceKind::ProjectivePlane);
    assert!(Surface::from_text("q=6^1\nvars=4\n").is_err());
    assert!(Surface::from_text("q=2^2\nvars=4\n1 1 1\n").is_err());
}

proptest! {
    #[test]
    fn canonical_form_is_scale_invariant(v in prop::collection::vec(0u16..9, 4), s in 1u16..9) {
        let f = Field::of_order(9).unwrap();
        prop_assume!(v.iter().any(|&c| c != 0));
        let w: Vec<u16> = v.iter().map(|&c| f.mul(c, s)).collect();
        prop_assert_eq!(ProjectivePoint::new(&f, &v).unwrap(), ProjectivePoint::new(&f, &w).unwrap());
    }

    #[test]
    fn chart_partitions_points(a in prop::collection::vec(0u16..8, 4)) {
        prop_assume!(a.iter().any(|&c| c != 0));
        let f = Field::of_order(8).unwrap();
        let s = Surface::elliptic_quadric(&f);
        let h = HomogeneousPoly::linear_form(&f, &a);
        prop_assert_eq!(s.points_on(&h).unwrap().len() + s.affine_chart(&h).unwrap().len(), 65);
    }
}
