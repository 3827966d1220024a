use wzb_core::paperlib::run_criteria;

#[test]
fn acceptance_criteria() {
    let criteria = run_criteria(30, 50);
    for c in &criteria {
        println!("{c}");
        for d in &c.details {
            println!("    {d}");
        }
    }
    let failed: Vec<u32> = criteria.iter().filter(|c| !c.passed).map(|c| c.number).collect();
    assert_eq!(criteria.len(), 10);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
