#![no_main]
use leibniz_core::exactmath::Scalar;
use libfuzzer_sys::fuzz_target;

#[path = "common.rs"]
mod common;

fuzz_target!(|data: &[u8]| {
    let Some((field, text)) = common::split(data) else { return };
    if text.len() > 256 {
        return;
    }
    if let Ok(x) = Scalar::parse(field, text) {
        assert_eq!(x.field(), field);
        // Display output parses back to the same value.
        let back = Scalar::parse(field, &x.to_string()).expect("display output parses");
        assert_eq!(back, x);
        if let Some(inv) = x.inv() {
            assert!((&x * &inv).is_one());
        }
    }
});
