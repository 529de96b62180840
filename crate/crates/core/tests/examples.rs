#[allow(dead_code)]
mod monoid_tables_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/monoid_tables.rs"));
}

#[test]
fn monoid_tables_example_runs() {
    monoid_tables_example::run_example().expect("monoid_tables example should run");
}

#[allow(dead_code)]
mod crossed_structures_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/crossed_structures.rs"));
}

#[test]
fn crossed_structures_example_runs() {
    crossed_structures_example::run_example().expect("crossed_structures example should run");
}

#[allow(dead_code)]
mod internal_category_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/internal_category.rs"));
}

#[test]
fn internal_category_example_runs() {
    internal_category_example::run_example().expect("internal_category example should run");
}

#[allow(dead_code)]
mod weak_morphisms_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/weak_morphisms.rs"));
}

#[test]
fn weak_morphisms_example_runs() {
    weak_morphisms_example::run_example().expect("weak_morphisms example should run");
}

#[allow(dead_code)]
mod quadratic_family_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quadratic_family.rs"));
}

#[test]
fn quadratic_family_example_runs() {
    quadratic_family_example::run_example().expect("quadratic_family example should run");
}

#[allow(dead_code)]
mod enumeration_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/enumeration.rs"));
}

#[test]
fn enumeration_example_runs() {
    enumeration_example::run_example().expect("enumeration example should run");
}

#[allow(dead_code)]
mod text_format_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/text_format.rs"));
}

#[test]
fn text_format_example_runs() {
    text_format_example::run_example().expect("text_format example should run");
}
