use zchelp_core::sl2data::{brute_force_classes, class_table, cyclic_frame};

#[test]
fn class_table_matches_enumeration() {
    for q in [3u64, 5, 7, 9, 11, 13] {
        let table = class_table(q).unwrap();
        let brute = brute_force_classes(q).unwrap();
        assert_eq!(brute.group_order, q * q * q - q);
        assert_eq!(table.signature(), brute.classes, "q = {q}");
        assert_eq!(table.classes.len() as u64, q + 4);
    }
    assert_eq!(brute_force_classes(9).unwrap().field_polynomial.as_deref(), Some("X^2+1"));
}

#[test]
fn frame_labels_have_the_right_orders() {
    for (q, n) in [(7u64, 8u64), (7, 6), (11, 12), (23, 24), (19, 20), (13, 12), (9, 10), (9, 8), (31, 32)] {
        let frame = cyclic_frame(q, n).unwrap();
        let table = class_table(q).unwrap();
        for &x in &frame.reps {
            let c = table.get(frame.label(x as i64)).unwrap();
            assert_eq!(c.order, n / num_integer::gcd(x, n), "q = {q}, n = {n}, x = {x}");
        }
    }
}

#[test]
fn class_json_schema() {
    let v: serde_json::Value = serde_json::to_value(class_table(3).unwrap()).unwrap();
    assert_eq!(v["q"], 3);
    assert_eq!(v["classes"][0], serde_json::json!({"label": "1", "order": 1, "size": 1}));
}
