#![no_main]
use leibniz_core::classify::MinNonCertificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 8192 {
        return;
    }
    if let Ok(cert) = MinNonCertificate::from_json(text) {
        let again = MinNonCertificate::from_json(&cert.to_json()).expect("serialized certificate parses");
        assert_eq!(again, cert);
    }
});
