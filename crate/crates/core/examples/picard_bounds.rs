//! Lower bounds for the dual distance on the elliptic quadric over GF(16).
use surfacecodes::picard::{bound_basic, bound_improved, PicardLattice};

pub fn main() {
    let lat = PicardLattice::quadric();
    for m in 8..=10 {
        let basic = bound_basic(&lat, 16, m, None).unwrap();
        let improved = bound_improved(&lat, 16, m, None, None).unwrap();
        let kept: Vec<_> = improved.classes.iter().filter(|c| c.in_e == Some(true)).map(|c| c.class.as_str()).collect();
        println!("m={m}: basic {}, improved {} from {{{}}}", basic.bound, improved.bound, kept.join(", "));
    }
    println!("{}", bound_improved(&lat, 8, 5, None, None).unwrap().to_json());
}
