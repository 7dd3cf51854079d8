//! The three distance engines on the same code.
use surfacecodes::agbuilder::{build_functional_code, EvaluationCodeSpec};
use surfacecodes::code::*;
use surfacecodes::gf::Field;
use surfacecodes::projspace::Surface;

pub fn main() {
    let f = Field::of_order(4).unwrap();
    let spec = EvaluationCodeSpec::preset(&Surface::elliptic_quadric(&f), 2).unwrap();
    let dual = build_functional_code(&spec).unwrap().dual();
    let ex = min_distance_exhaustive(&dual, &ExhaustiveOptions::default()).unwrap();
    let isd = min_distance_isd(&dual, &IsdOptions::default()).unwrap();
    let rnd = min_weight_random(&dual, &RandomOptions::default()).unwrap();
    for (name, r) in [("exhaustive", ex), ("isd", isd), ("random", rnd)] {
        println!("{name:>10}: {:?} {:?}, {} messages", r.value, r.certainty, r.enumerated);
    }
}
