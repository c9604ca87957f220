mod wreath_strata {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/wreath_strata.rs"));
}

#[test]
fn wreath_strata_runs() {
    wreath_strata::run_example().expect("wreath_strata example should run");
}

mod enriques_index {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/enriques_index.rs"));
}

#[test]
fn enriques_index_runs() {
    enriques_index::run_example().expect("enriques_index example should run");
}

mod hypersurface_semigroup {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/hypersurface_semigroup.rs"
    ));
}

#[test]
fn hypersurface_semigroup_runs() {
    hypersurface_semigroup::run_example().expect("hypersurface_semigroup example should run");
}

mod equivariance {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/equivariance.rs"));
}

#[test]
fn equivariance_runs() {
    equivariance::run_example().expect("equivariance example should run");
}

mod jprime_oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/jprime_oracle.rs"));
}

#[test]
fn jprime_oracle_runs() {
    jprime_oracle::run_example().expect("jprime_oracle example should run");
}

mod pullback_table {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pullback_table.rs"));
}

#[test]
fn pullback_table_runs() {
    pullback_table::run_example().expect("pullback_table example should run");
}

mod norm_map {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/norm_map.rs"));
}

#[test]
fn norm_map_runs() {
    norm_map::run_example().expect("norm_map example should run");
}

mod witness_family {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/witness_family.rs"));
}

#[test]
fn witness_family_runs() {
    witness_family::run_example().expect("witness_family example should run");
}

mod json_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/json_report.rs"));
}

#[test]
fn json_report_runs() {
    json_report::run_example().expect("json_report example should run");
}
