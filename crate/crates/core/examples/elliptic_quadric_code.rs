//! The [64, 28] dual code on the elliptic quadric over GF(8): a bound of 24
//! from the point counts, and a codeword of weight 24.
use surfacecodes::agbuilder::{build_functional_code, chart_translations, EvaluationCodeSpec};
use surfacecodes::code::{min_distance_isd, weight, IsdOptions};
use surfacecodes::gf::Field;
use surfacecodes::picard::{bound_improved, PicardLattice};
use surfacecodes::projspace::Surface;

pub fn main() {
    let f = Field::of_order(8).unwrap();
    let s = Surface::elliptic_quadric(&f);
    let spec = EvaluationCodeSpec::preset(&s, 5).unwrap();
    let dual = build_functional_code(&spec).unwrap().dual();
    let bound = bound_improved(&PicardLattice::quadric(), 8, 5, None, None).unwrap();
    let opts = IsdOptions {
        target: Some(bound.bound as usize),
        automorphisms: chart_translations(&spec).unwrap(),
        ..Default::default()
    };
    let r = min_distance_isd(&dual, &opts).unwrap();
    let w = r.witness.as_ref().unwrap();
    assert!(dual.contains(w));
    println!("[{}, {}] dual code, bound {}, witness weight {} after {} messages", dual.length(), dual.dimension(), bound.bound, weight(w), r.enumerated);
}
