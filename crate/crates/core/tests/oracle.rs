mod common;

#[test]
fn key_dedup_matches_pairwise_dedup_up_to_order_three() {
    for (label, bad) in common::small_order_disagreements() {
        assert_eq!(bad, 0, "{label}");
    }
}

#[test]
fn key_dedup_matches_pairwise_dedup_on_random_order_four_pairs() {
    let items = common::random_order_four_pairs(500, common::SEED);
    assert_eq!(items.len(), 500);
    assert_eq!(common::dedup_disagreements(&items), 0);
}
