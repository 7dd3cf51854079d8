// Runs every example once so they cannot rot.

macro_rules! run_examples {
    ($($name:ident => $path:literal),* $(,)?) => {
        $(
            #[allow(dead_code)]
            #[path = $path]
            mod $name;

            #[test]
            fn $name() {
                $name::main();
            }
        )*
    };
}

run_examples!(
    field_arithmetic => "../examples/field_arithmetic.rs",
    projective_geometry => "../examples/projective_geometry.rs",
    reed_muller_duality => "../examples/reed_muller_duality.rs",
    elliptic_quadric_code => "../examples/elliptic_quadric_code.rs",
    picard_bounds => "../examples/picard_bounds.rs",
    cubic_search => "../examples/cubic_search.rs",
    distance_engines => "../examples/distance_engines.rs",
    parameter_tables => "../examples/parameter_tables.rs",
);
