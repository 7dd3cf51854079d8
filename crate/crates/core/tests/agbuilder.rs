use surfacecodes::agbuilder::*;
use surfacecodes::code::*;
use surfacecodes::gf::Field;
use surfacecodes::linalg::Matrix;
use surfacecodes::projspace::*;

#[test]
fn monomial_basis_sizes() {
    let f = Field::of_order(4).unwrap();
    let b = monomial_basis(&f, 2, 1);
    assert_eq!(b.iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["X0", "X1", "X2"]);
    assert_eq!(monomial_basis(&f, 3, 2).len(), 10);
    assert_eq!(monomial_basis(&f, 3, 5).len(), 56);
}

#[test]
fn rm_codes() {
    let f4 = Field::of_order(4).unwrap();
    let c = rm_code(&f4, 1).unwrap();
    assert_eq!((c.length(), c.dimension()), (16, 3));
    // oracle: rank of the explicit 3 x 16 matrix of 1, x, y
    let mut rows = vec![vec![], vec![], vec![]];
    for x in 0..4u16 {
        for y in 0..4u16 {
            rows[0].push(1);
            rows[1].push(x);
            rows[2].push(y);
        }
    }
    assert_eq!(Matrix::from_rows(&f4, &rows).unwrap().rank(), 3);
    let d = min_distance_exhaustive(&c, &ExhaustiveOptions::default()).unwrap();
    assert_eq!(d.value, Some(12));
    let dual = c.dual();
    assert_eq!(dual.dimension(), 13);
    assert_eq!(min_distance_isd(&dual, &IsdOptions::default()).unwrap().value, Some(3));
    assert!(rm_code(&f4, 6).is_err());

    let f8 = Field::of_order(8).unwrap();
    let spec = EvaluationCodeSpec::new(&Surface::projective_plane(&f8), 6, ChartChoice::Linear(vec![1, 0, 0])).unwrap();
    let dual = build_functional_code(&spec).unwrap().dual();
    let perms = chart_translations(&spec).unwrap();
    let r = min_distance_isd(&dual, &IsdOptions { automorphisms: perms, ..Default::default() }).unwrap();
    assert_eq!((r.value, r.certainty), (Some(8), Certainty::Exact));
}

#[test]
fn rm_duality() {
    for q in [4, 5] {
        let f = Field::of_order(q).unwrap();
        for m in 0..=2 * q - 3 {
            let dual = rm_code(&f, m).unwrap().dual();
            let other = rm_code(&f, 2 * q - 3 - m).unwrap();
            assert!(dual.generator().row_space_equal(other.generator()).unwrap(), "q={q} m={m}");
        }
    }
}

#[test]
fn quadric_and_cubic_dimensions() {
    let f8 = Field::of_order(8).unwrap();
    let spec = EvaluationCodeSpec::preset(&Surface::elliptic_quadric(&f8), 3).unwrap();
    let c = build_functional_code(&spec).unwrap();
    assert_eq!((c.length(), c.dimension(), c.dual().dimension()), (64, 16, 48));
    let f4 = Field::of_order(4).unwrap();
    let spec = EvaluationCodeSpec::preset(&Surface::hyperbolic_quadric(&f4), 2).unwrap();
    assert_eq!(build_functional_code(&spec).unwrap().dual().dimension(), 7);
    let spec = EvaluationCodeSpec::preset(&Surface::elliptic_quadric(&f4), 1).unwrap();
    assert_eq!(build_functional_code(&spec).unwrap().dual().dimension(), 12);
    let spec = EvaluationCodeSpec::preset(&Surface::elliptic_quadric(&f4), 0).unwrap();
    let rep = build_functional_code(&spec).unwrap();
    assert_eq!(rep.dimension(), 1);
    assert_eq!(rep.generator().row(0), &[1; 16][..]);
    assert!(EvaluationCodeSpec::preset(&Surface::elliptic_quadric(&f4), 3).is_err());

    let f9 = Field::of_order(9).unwrap();
    let found = find_cubic_no_lines(&f9, 5000, 1, CubicFamily::EmptyPlane).unwrap();
    let spec = EvaluationCodeSpec::preset(&found.surface, 4).unwrap();
    let c = build_functional_code(&spec).unwrap();
    assert_eq!((c.length(), c.dimension(), c.dual().dimension()), (100, 31, 69));
}

#[test]
fn secant_chart_keeps_dimension() {
    // X0 + X3 = 0 cuts a conic, so the chart has q^2 + q points
    let f4 = Field::of_order(4).unwrap();
    let s = Surface::hyperbolic_quadric(&f4);
    let spec = EvaluationCodeSpec::new(&s, 2, ChartChoice::Linear(vec![1, 0, 0, 1])).unwrap();
    assert_eq!(spec.length(), 20);
    assert_eq!(build_functional_code(&spec).unwrap().dimension(), 9);
}

#[test]
fn translations_are_automorphisms() {
    for q in [4, 8, 9] {
        let f = Field::of_order(q).unwrap();
        for s in [Surface::elliptic_quadric(&f), Surface::hyperbolic_quadric(&f), Surface::projective_plane(&f)] {
            let spec = EvaluationCodeSpec::preset(&s, 2).unwrap();
            let c = build_functional_code(&spec).unwrap();
            let perms = chart_translations(&spec).unwrap();
            assert_eq!(perms.len(), 2 * f.degree() as usize);
            assert!(perms.iter().all(|p| c.is_automorphism(p)));
            assert!(LinearCode::generates_transitive_group(c.length(), &perms));
        }
    }
}

#[test]
fn line_witnesses() {
    for (q, m, want) in [(4, 2, 4), (8, 5, 7), (8, 1, 3)] {
        let f = Field::of_order(q).unwrap();
        let s = Surface::hyperbolic_quadric(&f);
        let spec = EvaluationCodeSpec::preset(&s, m).unwrap();
        let code = build_functional_code(&spec).unwrap();
        let line = s.lines().iter().find(|l| l.points().iter().filter(|p| spec.position(p).is_some()).count() == q as usize).unwrap();
        let w = line_dual_witness(&spec, line).unwrap();
        assert_eq!(weight(&w), want);
        assert!(code.dual().contains(&w));
    }
    let f4 = Field::of_order(4).unwrap();
    let s = Surface::hyperbolic_quadric(&f4);
    let spec = EvaluationCodeSpec::preset(&s, 2).unwrap();
    // the two lines through the tangency point lie in the removed section
    let p = s.default_chart_point().unwrap();
    let inside = s.lines().iter().find(|l| l.contains(&p)).unwrap();
    assert!(line_dual_witness(&spec, inside).is_err());
}

#[test]
fn puncturing_to_a_line_gives_reed_solomon() {
    let f = Field::of_order(8).unwrap();
    let s = Surface::hyperbolic_quadric(&f);
    for m in 1..=6 {
        let spec = EvaluationCodeSpec::preset(&s, m).unwrap();
        let code = build_functional_code(&spec).unwrap();
        let line = s.lines().iter().find(|l| l.points().iter().filter(|p| spec.position(p).is_some()).count() == 8).unwrap();
        let pts: Vec<&ProjectivePoint> = line.points().iter().filter(|p| spec.position(p).is_some()).collect();
        let pos: Vec<usize> = pts.iter().map(|p| spec.position(p).unwrap()).collect();
        let rs = code.restrict(&pos).unwrap();
        assert_eq!(rs.dimension(), m as usize + 1);
        // Vandermonde on the affine parameter t of A + tB
        let a = &spec.points()[pos[0]];
        let b: Vec<u16> = spec.points()[pos[1]].iter().zip(a).map(|(&x, &y)| f.sub(x, y)).collect();
        let ts: Vec<u16> = pos
            .iter()
            .map(|&i| {
                let v = &spec.points()[i];
                let j = b.iter().position(|&c| c != 0).unwrap();
                f.div(f.sub(v[j], a[j]), b[j]).unwrap()
            })
            .collect();
        let vander: Vec<Vec<u16>> = (0..=m as u64).map(|e| ts.iter().map(|&t| f.pow(t, e)).collect()).collect();
        assert!(rs.generator().row_space_equal(&Matrix::from_rows(&f, &vander).unwrap()).unwrap());
    }
}
