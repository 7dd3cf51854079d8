//! Bound tables for the quadrics as CSV.
use surfacecodes::tables::{reproduce, to_csv, DistanceMode, ReproduceOptions, Table};

pub fn main() {
    let opts = ReproduceOptions { distances: DistanceMode::Witness, ..Default::default() };
    for t in [Table::Q4Quadrics, Table::Q8Quadrics] {
        println!("# {}", t.name());
        print!("{}", to_csv(&reproduce(t, &opts).unwrap()));
    }
}
