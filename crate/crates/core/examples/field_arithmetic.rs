//! Table-driven arithmetic in GF(9) and the tower GF(9) ⊂ GF(9^3).
use surfacecodes::gf::Field;

pub fn main() {
    let f = Field::of_order(9).unwrap();
    println!("GF({}) = GF({}^{}), modulus {:?}", f.order(), f.characteristic(), f.degree(), f.modulus());
    let g = f.generator();
    let powers: Vec<_> = (0..8).map(|i| f.pow(g, i)).collect();
    println!("powers of the generator {g}: {powers:?}");
    for a in f.elements().skip(1) {
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }
    let ext = f.extension(3).unwrap();
    let embed = f.embed_into(&ext).unwrap();
    println!("GF(9) sits in GF({}) as {:?}", ext.order(), embed);
}
