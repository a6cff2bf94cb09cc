macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect("example should run");
        }
    };
}

example!(borromean, "borromean.rs", borromean_runs);
example!(basis_identity, "basis_identity.rs", basis_identity_runs);
example!(surface_ops, "surface_ops.rs", surface_ops_run);
example!(eta_maps, "eta_maps.rs", eta_maps_run);
example!(milnor_bing, "milnor_bing.rs", milnor_bing_runs);
example!(group_ring_counterexample, "group_ring_counterexample.rs", group_ring_counterexample_runs);
example!(int1_five_component, "int1_five_component.rs", int1_five_component_runs);
example!(int2_quadratic, "int2_quadratic.rs", int2_quadratic_runs);
