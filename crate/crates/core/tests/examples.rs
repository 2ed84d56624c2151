macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(colorability, "colorability.rs");
example!(unique_coloring, "unique_coloring.rs");
example!(decomposition, "decomposition.rs");
example!(nu_basis, "nu_basis.rs");
example!(ideal_ops, "ideal_ops.rs");
example!(oracle_dimacs, "oracle_dimacs.rs");
example!(groebner_basics, "groebner_basics.rs");
