//! Example codes and superregular matrices shipped with the crate.

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::superregular::Toeplitz;

/// `(name, code description)` for every file in `fixtures/`.
pub const CODES: &[(&str, &str)] = &[
    ("e4_1", include_str!("../../../fixtures/e4_1.code")),
    ("e4_2", include_str!("../../../fixtures/e4_2.code")),
    ("e4_3", include_str!("../../../fixtures/e4_3.code")),
    ("e4_4", include_str!("../../../fixtures/e4_4.code")),
    ("e4_5", include_str!("../../../fixtures/e4_5.code")),
    ("e4_6", include_str!("../../../fixtures/e4_6.code")),
    ("e4_7", include_str!("../../../fixtures/e4_7.code")),
    ("e4_8", include_str!("../../../fixtures/e4_8.code")),
    ("mds1_gf8", include_str!("../../../fixtures/mds1_gf8.code")),
    ("mds1_gf32", include_str!("../../../fixtures/mds1_gf32.code")),
    ("mds2_gf64", include_str!("../../../fixtures/mds2_gf64.code")),
    ("mds3_gf16", include_str!("../../../fixtures/mds3_gf16.code")),
    ("mds4_gf11", include_str!("../../../fixtures/mds4_gf11.code")),
    ("mdsdual_gf16", include_str!("../../../fixtures/mdsdual_gf16.code")),
    ("dual_b_gf64", include_str!("../../../fixtures/dual_b_gf64.code")),
    ("dual_c1_gf16", include_str!("../../../fixtures/dual_c1_gf16.code")),
    ("dual_c2_gf16", include_str!("../../../fixtures/dual_c2_gf16.code")),
];

pub fn code(name: &str) -> Result<CodeSpec> {
    let (_, text) = CODES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::BadParams(format!("unknown fixture {name:?}")))?;
    CodeSpec::parse(text)
}

/// Strongly MDS rate `(n-1)/n` codes used for decoder runs.
pub const DECODER_CODES: &[&str] = &["mds1_gf8", "mds1_gf32", "mds2_gf64", "mds3_gf16", "e4_3"];

/// First column given as exponents of the field generator.
fn from_exponents(field: Field, exps: &[i64]) -> Toeplitz {
    let col = exps.iter().map(|&e| field.exp(e)).collect();
    Toeplitz::new(field, col).expect("fixture entries lie in the field")
}

fn literal(p: u32, col: &[u32]) -> Toeplitz {
    Toeplitz::from_values(Field::prime(p).expect("prime"), col).expect("fixture entries lie in the field")
}

/// The published superregular lower-triangular Toeplitz matrices, by name.
pub fn superregular_matrices() -> Vec<(&'static str, Toeplitz)> {
    vec![
        ("gf2_2x2", literal(2, &[1, 1])),
        ("gf3_3x3", literal(3, &[1, 1, 2])),
        ("gf5_4x4", literal(5, &[1, 1, 2, 1])),
        ("gf7_5x5", literal(7, &[1, 2, 1, 6, 4])),
        ("gf11_6x6", literal(11, &[1, 2, 1, 1, 3, 4])),
        ("gf17_7x7", literal(17, &[1, 7, 13, 2, 1, 4, 14])),
        ("gf4_3x3", from_exponents(Field::gf4(), &[0, 1, 0])),
        ("gf8_5x5", from_exponents(Field::gf8(), &[0, 1, 3, 1, 0])),
        ("gf16_6x6", from_exponents(Field::gf16(), &[0, 1, 5, 5, 1, 0])),
        ("gf32_7x7", from_exponents(Field::gf32(), &[0, 1, 6, 9, 6, 1, 0])),
        ("gf64_8x8", from_exponents(Field::gf64(), &[0, 1, 9, 33, 33, 9, 1, 0])),
    ]
}

pub fn superregular(name: &str) -> Result<Toeplitz> {
    superregular_matrices()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| t)
        .ok_or_else(|| Error::BadParams(format!("unknown matrix {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        for (name, _) in CODES {
            code(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(code("nope").is_err());
        assert_eq!(superregular_matrices().len(), 11);
    }
}
