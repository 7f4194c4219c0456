use vcsharp_core::verify::{run_suite, suite_names};

fn run(name: &str) {
    let r = run_suite(name, 42).unwrap();
    assert!(r.cases > 0, "{name} ran no cases");
    assert_eq!(r.failures, 0, "{name}: {:?}", r.failed);
}

#[test]
fn all_suites_are_listed() {
    assert_eq!(suite_names().len(), 11);
    assert!(run_suite("nope", 1).is_err());
}

macro_rules! suite_tests {
    ($($name:ident),*) => { $( #[test] fn $name() { run(stringify!($name)); } )* };
}

suite_tests!(
    distributivity,
    product_components,
    tree_identities,
    cancellation,
    rooted_extraction,
    rooted_cancellation,
    chain_factorization,
    ef,
    class_c,
    fmd,
    classifier_golden
);
