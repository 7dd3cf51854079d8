//! Plane codes: the dual of the degree-m code is the degree-(2q-3-m) code,
//! and the translations of the affine plane make exact distances cheap.
use surfacecodes::agbuilder::{build_functional_code, chart_translations, rm_code, EvaluationCodeSpec};
use surfacecodes::code::{min_distance_isd, IsdOptions};
use surfacecodes::gf::Field;
use surfacecodes::projspace::Surface;

pub fn main() {
    let q = 5;
    let f = Field::of_order(q).unwrap();
    let plane = Surface::projective_plane(&f);
    for m in 1..=2 * q - 3 {
        let spec = EvaluationCodeSpec::preset(&plane, m).unwrap();
        let dual = build_functional_code(&spec).unwrap().dual();
        let same = dual.generator().row_space_equal(rm_code(&f, 2 * q - 3 - m).unwrap().generator()).unwrap();
        let opts = IsdOptions { automorphisms: chart_translations(&spec).unwrap(), ..Default::default() };
        let d = min_distance_isd(&dual, &opts).unwrap();
        println!("m={m}: dual [{}, {}] d={:?} ({:?}), equals degree {} code: {same}", dual.length(), dual.dimension(), d.value, d.certainty, 2 * q - 3 - m);
    }
}
