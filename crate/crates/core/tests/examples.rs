macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(field_arithmetic, "field_arithmetic.rs", field_arithmetic_runs);
example!(l_polynomial, "l_polynomial.rs", l_polynomial_runs);
example!(places, "places.rs", places_runs);
example!(hole_count, "hole_count.rs", hole_count_runs);
example!(hole_sizes, "hole_sizes.rs", hole_sizes_runs);
example!(oracle_crosscheck, "oracle_crosscheck.rs", oracle_crosscheck_runs);
example!(asymptotic_sweep, "asymptotic_sweep.rs", asymptotic_sweep_runs);
example!(analysis_report, "analysis_report.rs", analysis_report_runs);
