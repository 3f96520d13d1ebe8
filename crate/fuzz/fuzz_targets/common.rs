use leibniz_core::exactmath::FieldDescriptor;

/// First byte picks the field, the rest is the text.
pub fn split(data: &[u8]) -> Option<(FieldDescriptor, &str)> {
    let (&tag, rest) = data.split_first()?;
    let field = match tag % 5 {
        0 => FieldDescriptor::Rationals,
        1 => FieldDescriptor::GaussianRationals,
        2 => FieldDescriptor::prime_field(2).ok()?,
        3 => FieldDescriptor::prime_field(7).ok()?,
        _ => FieldDescriptor::prime_field(2_147_483_647).ok()?,
    };
    Some((field, std::str::from_utf8(rest).ok()?))
}
