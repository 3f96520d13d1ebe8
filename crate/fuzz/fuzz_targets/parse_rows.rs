#![no_main]
use leibniz_core::exactmath::Subspace;
use leibniz_core::format::{format_row, parse_rows};
use libfuzzer_sys::fuzz_target;

#[path = "common.rs"]
mod common;

fuzz_target!(|data: &[u8]| {
    let Some((&dim, rest)) = data.split_first() else { return };
    let dim = usize::from(dim % 6) + 1;
    let Some((field, text)) = common::split(rest) else { return };
    if text.len() > 512 {
        return;
    }
    let Ok(rows) = parse_rows(field, dim, text) else { return };
    let joined: Vec<String> = rows.iter().map(|r| format_row(r)).collect();
    assert_eq!(parse_rows(field, dim, &joined.join(";")).expect("formatted rows parse"), rows);
    let s = Subspace::span(field, dim, &rows).expect("rows have the right shape");
    assert!(s.dim() <= rows.len().min(dim));
    assert!(rows.iter().all(|r| s.contains(r)));
});
