macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(solve_file, "solve_file.rs", solve_file_runs);
example!(worked_trace, "worked_trace.rs", worked_trace_runs);
example!(
    incremental_engine,
    "incremental_engine.rs",
    incremental_engine_runs
);
example!(operators, "operators.rs", operators_runs);
example!(custom_delta, "custom_delta.rs", custom_delta_runs);
example!(scaling, "scaling.rs", scaling_runs);
example!(cross_check, "cross_check.rs", cross_check_runs);
example!(generators, "generators.rs", generators_runs);
