//! Shared CSV helpers.

use jones_one::roots::{Classification, Root};
use std::io::Write;

pub const ROOT_HEADER: [&str; 8] = [
    "name",
    "re",
    "im",
    "multiplicity",
    "residual",
    "on_unit_circle",
    "rou_order",
    "excluded_minus_one",
];

/// Shortest round-trip form, with `-0` written as `0`.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        x.to_string()
    }
}

pub fn root_record(name: &str, root: &Root, class: &Classification) -> [String; 8] {
    [
        name.to_string(),
        num(root.z.re),
        num(root.z.im),
        root.multiplicity.to_string(),
        num(root.residual),
        class.on_unit_circle.to_string(),
        class.rou_order.map(|d| d.to_string()).unwrap_or_default(),
        class.excluded_minus_one.to_string(),
    ]
}

pub fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_zero_is_normalised() {
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(0.5), "0.5");
        assert_eq!(num(-1e-20), "-0.00000000000000000001");
    }
}
