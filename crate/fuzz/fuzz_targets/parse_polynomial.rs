#![no_main]
use leibniz_core::exactmath::{poly_irreducible, Irreducibility, Polynomial};
use libfuzzer_sys::fuzz_target;

#[path = "common.rs"]
mod common;

fuzz_target!(|data: &[u8]| {
    let Some((field, text)) = common::split(data) else { return };
    if text.len() > 256 {
        return;
    }
    let Ok(p) = Polynomial::parse(field, text) else { return };
    let back = Polynomial::parse(field, &p.to_string()).expect("display output parses");
    assert_eq!(back, p);
    // Keep the characteristic-zero search cheap.
    let small = p.degree().is_some_and(|d| d >= 1 && (d <= 3 || (field.is_finite() && d <= 8)));
    if small {
        if let Ok(Irreducibility::Reducible { factor }) = poly_irreducible(&p) {
            assert!(p.rem(&factor).is_zero());
        }
    }
});
