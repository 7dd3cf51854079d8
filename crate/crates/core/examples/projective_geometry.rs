//! Points, lines and affine charts of the plane and the two quadrics.
use surfacecodes::gf::Field;
use surfacecodes::projspace::{enumerate_lines, point_count, Surface};

pub fn main() {
    for q in [4u32, 8] {
        let f = Field::of_order(q).unwrap();
        println!("q = {q}: |P^3| = {}, lines of P^3 = {}", point_count(q, 3), enumerate_lines(&f).len());
        for s in [Surface::hyperbolic_quadric(&f), Surface::elliptic_quadric(&f)] {
            let p = s.default_chart_point().unwrap();
            let h = s.tangent_plane_section(&p).unwrap();
            let chart = s.affine_chart(&h).unwrap();
            println!(
                "  {:<18} {:>3} points, {:>2} lines, tangent plane at {p} is {h}, chart size {}",
                s.kind().name(),
                s.points().len(),
                s.lines().len(),
                chart.len()
            );
        }
    }
}
