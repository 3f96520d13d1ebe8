#![no_main]
use leibniz_core::format::{algebra_to_json, parse_algebra_json, AlgebraFile};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 4096 {
        return;
    }
    // Validation is O(dim⁵) on dense tables; large files are a cost, not a bug.
    let Ok(file) = serde_json::from_str::<AlgebraFile>(text) else { return };
    if file.dim > 12 {
        return;
    }
    let _ = file.to_unvalidated();
    let Ok(a) = parse_algebra_json(text) else { return };
    let canonical = algebra_to_json(&a);
    let b = parse_algebra_json(&canonical).expect("canonical output loads");
    assert_eq!(a, b);
    assert_eq!(algebra_to_json(&b), canonical);
    let _ = a.leibniz_kernel();
});
