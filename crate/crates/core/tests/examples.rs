macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run().expect("example runs");
        }
    };
}

example!(binomials);
example!(lattice_paths);
example!(facets_and_shelling);
example!(hilbert_series);
example!(classical_determinantal);
example!(oracles);
example!(invariants_report);
