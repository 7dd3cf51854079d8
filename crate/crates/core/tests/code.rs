use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surfacecodes::code::*;
use surfacecodes::gf::{Field, FieldRef};
use surfacecodes::linalg::Matrix;

fn random_matrix(f: &FieldRef, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    let q = f.order() as u16;
    let data = (0..rows * cols).map(|_| rng.gen_range(0..q)).collect();
    Matrix::new(f, rows, cols, data).unwrap()
}

fn repetition(f: &FieldRef, n: usize) -> LinearCode {
    LinearCode::from_generator(&Matrix::new(f, 1, n, vec![1; n]).unwrap()).unwrap()
}

fn check_witness(code: &LinearCode, r: &DistanceResult) {
    if let Some(w) = &r.witness {
        assert!(code.contains(w));
        assert_eq!(weight(w), r.upper().unwrap());
        assert!(w.iter().any(|&x| x != 0));
    }
}

#[test]
fn repetition_code() {
    let f = Field::of_order(4).unwrap();
    let c = repetition(&f, 7);
    assert_eq!((c.length(), c.dimension()), (7, 1));
    let e = min_distance_exhaustive(&c, &ExhaustiveOptions::default()).unwrap();
    assert_eq!((e.value, e.certainty), (Some(7), Certainty::Exact));
    let i = min_distance_isd(&c, &IsdOptions::default()).unwrap();
    assert_eq!((i.value, i.certainty), (Some(7), Certainty::Exact));
    let r = min_weight_random(&c, &RandomOptions::default()).unwrap();
    assert_eq!((r.value, r.certainty), (Some(7), Certainty::UpperBoundOnly));
    let d = c.dual();
    assert_eq!(d.dimension(), 6);
    assert_eq!(min_distance_isd(&d, &IsdOptions::default()).unwrap().value, Some(2));
    let p = c.puncture(&[3]).unwrap();
    assert_eq!((p.length(), p.dimension()), (6, 1));
    assert_eq!(min_distance_exhaustive(&p, &ExhaustiveOptions::default()).unwrap().value, Some(6));
    assert_eq!(c.puncture(&[]).unwrap(), c);
    assert!(c.puncture(&(0..7).collect::<Vec<_>>()).is_err());
    assert!(c.puncture(&[9]).is_err());
}

#[test]
fn rank_deficient_and_zero_inputs() {
    let f = Field::of_order(3).unwrap();
    let rows = vec![
        vec![1, 0, 2, 1, 0, 1],
        vec![0, 1, 1, 0, 2, 2],
        vec![1, 1, 0, 1, 2, 0],
        vec![2, 0, 1, 2, 0, 2],
    ];
    let c = LinearCode::from_generator(&Matrix::from_rows(&f, &rows).unwrap()).unwrap();
    assert_eq!(c.dimension(), 2);
    assert!(LinearCode::from_generator(&Matrix::zeros(&f, 2, 5)).is_err());
    let full = LinearCode::from_generator(&Matrix::identity(&f, 4)).unwrap();
    let zero = full.dual();
    assert_eq!(zero.dimension(), 0);
    assert_eq!(min_distance_isd(&zero, &IsdOptions::default()).unwrap().value, None);
    assert_eq!(min_distance_isd(&full, &IsdOptions::default()).unwrap().value, Some(1));
}

#[test]
fn double_dual_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..20 {
        let f = Field::of_order([2, 3, 4, 5, 8, 9][i % 6]).unwrap();
        let (k, n) = (rng.gen_range(1..6), rng.gen_range(6..14));
        let m = random_matrix(&f, k, n, &mut rng);
        let Ok(c) = LinearCode::from_generator(&m) else { continue };
        let d = c.dual();
        assert_eq!(d.dimension(), n - c.dimension());
        assert!(c.generator().mul_transpose(d.generator()).unwrap().is_zero());
        assert_eq!(d.dual(), c);
    }
}

#[test]
fn isd_agrees_with_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 40 {
        let f = Field::of_order([2, 3, 4][checked % 3]).unwrap();
        let n = rng.gen_range(4..=20);
        let k = rng.gen_range(1..=n.min(10));
        let Ok(c) = LinearCode::from_generator(&random_matrix(&f, k, n, &mut rng)) else { continue };
        let e = min_distance_exhaustive(&c, &ExhaustiveOptions::default()).unwrap();
        let i = min_distance_isd(&c, &IsdOptions { seed: checked as u64, ..Default::default() }).unwrap();
        assert_eq!(e.value, i.value, "{c:?}");
        assert!(i.is_exact());
        assert!(i.value.unwrap() <= c.length() - c.dimension() + 1);
        check_witness(&c, &e);
        check_witness(&c, &i);
        let r = min_weight_random(&c, &RandomOptions { budget: 20, seed: 3, p: 2 }).unwrap();
        assert!(r.value >= e.value);
        check_witness(&c, &r);
        checked += 1;
    }
}

#[test]
fn workers_do_not_change_results() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let f = Field::of_order(8).unwrap();
    let c = LinearCode::from_generator(&random_matrix(&f, 6, 24, &mut rng)).unwrap();
    let a = min_distance_isd(&c, &IsdOptions::default()).unwrap();
    let b = min_distance_isd(&c, &IsdOptions { workers: 3, ..Default::default() }).unwrap();
    assert_eq!((a.value, &a.witness, a.enumerated), (b.value, &b.witness, b.enumerated));
    let a = min_distance_exhaustive(&c, &ExhaustiveOptions::default()).unwrap();
    let b = min_distance_exhaustive(&c, &ExhaustiveOptions { workers: 2, ..Default::default() }).unwrap();
    assert_eq!((a.value, &a.witness, a.enumerated), (b.value, &b.witness, b.enumerated));
}

#[test]
fn budgets() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = Field::of_order(4).unwrap();
    let c = LinearCode::from_generator(&random_matrix(&f, 10, 20, &mut rng)).unwrap();
    let err = min_distance_exhaustive(&c, &ExhaustiveOptions { budget: 1000, workers: 1 }).unwrap_err();
    assert!(matches!(err, surfacecodes::Error::BudgetExceeded { .. }));
    let exact = min_distance_isd(&c, &IsdOptions::default()).unwrap();
    let cut = min_distance_isd(&c, &IsdOptions { budget: 50, ..Default::default() }).unwrap();
    match cut.certainty {
        Certainty::Interval { lo, hi } => assert!(lo <= exact.value.unwrap() && exact.value.unwrap() <= hi),
        Certainty::LowerBoundOnly => assert!(cut.value <= exact.value),
        other => assert_eq!(other, Certainty::Exact),
    }
    let json = cut.to_json();
    assert!(json.contains("\"schema\":1"));
}

#[test]
fn random_bound_is_monotone_in_budget() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f = Field::of_order(8).unwrap();
    let c = LinearCode::from_generator(&random_matrix(&f, 8, 30, &mut rng)).unwrap();
    let mut last = usize::MAX;
    for budget in [1, 2, 5, 10, 40] {
        let r = min_weight_random(&c, &RandomOptions { budget, seed: 4, p: 2 }).unwrap();
        assert!(r.value.unwrap() <= last);
        last = r.value.unwrap();
    }
}

#[test]
fn automorphism_checks() {
    let f = Field::of_order(2).unwrap();
    // cyclic [7,4] Hamming code
    let g = Matrix::from_rows(
        &f,
        &[
            vec![1, 1, 0, 1, 0, 0, 0],
            vec![0, 1, 1, 0, 1, 0, 0],
            vec![0, 0, 1, 1, 0, 1, 0],
            vec![0, 0, 0, 1, 1, 0, 1],
        ],
    )
    .unwrap();
    let c = LinearCode::from_generator(&g).unwrap();
    let shift: Vec<usize> = (0..7).map(|i| (i + 1) % 7).collect();
    assert!(c.is_automorphism(&shift));
    assert!(!c.is_automorphism(&[1, 0, 2, 3, 4, 5, 6]));
    assert!(LinearCode::generates_transitive_group(7, std::slice::from_ref(&shift)));
    let r = min_distance_isd(&c, &IsdOptions { automorphisms: vec![shift], ..Default::default() }).unwrap();
    assert_eq!((r.value, r.certainty), (Some(3), Certainty::Exact));
    let bad = min_distance_isd(&c, &IsdOptions { automorphisms: vec![vec![1, 0, 2, 3, 4, 5, 6]], ..Default::default() });
    assert!(bad.is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn generator_times_parity_is_zero(seed in any::<u64>(), qi in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Field::of_order([2, 4, 7, 9][qi]).unwrap();
        let m = random_matrix(&f, 4, 11, &mut rng);
        if let Ok(c) = LinearCode::from_generator(&m) {
            prop_assert!(c.generator().mul_transpose(c.parity_check()).unwrap().is_zero());
            prop_assert_eq!(c.parity_check().rows(), 11 - c.dimension());
        }
    }
}
