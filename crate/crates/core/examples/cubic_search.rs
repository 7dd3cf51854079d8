//! A smooth cubic over GF(9) with 100 points and no rational line, and the
//! bounds for its codes.
use surfacecodes::agbuilder::{build_functional_code, EvaluationCodeSpec};
use surfacecodes::gf::Field;
use surfacecodes::picard::{bound_basic, bound_improved};
use surfacecodes::projspace::{find_cubic_no_lines, CubicFamily};

pub fn main() {
    let f = Field::of_order(9).unwrap();
    let found = find_cubic_no_lines(&f, 10_000, 7, CubicFamily::EmptyPlane).unwrap();
    let s = &found.surface;
    println!("after {} attempts: {}", found.attempts, s.equation().unwrap());
    println!("{} points, {} lines, empty plane {}", s.points().len(), s.lines().len(), found.empty_plane.as_ref().unwrap());
    let lat = s.picard().unwrap();
    for m in [2, 3, 4, 6] {
        let code = build_functional_code(&EvaluationCodeSpec::preset(s, m).unwrap()).unwrap();
        let b = bound_basic(lat, 9, m, None).unwrap().bound;
        let i = bound_improved(lat, 9, m, None, None).unwrap().bound;
        println!("m={m}: dual [{}, {}], bound {b}, improved {i}", code.length(), code.length() - code.dimension());
    }
}
