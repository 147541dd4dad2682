//! Resource guards for Gröbner-style completions.  Parametric runs can blow
//! up; exceeding a limit raises [`crate::Error::ResourceLimit`] instead of
//! looping.

/// Configurable bounds for basis completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of basis elements kept at any time.
    pub max_basis: usize,
    /// Maximum number of critical pairs processed.
    pub max_pairs: usize,
    /// Maximum total degree of any intermediate polynomial.
    pub max_degree: u32,
    /// Maximum size (term count) of any single coefficient in parametric
    /// runs; exceeded means the computation is blowing up.
    pub max_coeff_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 512, max_pairs: 100_000, max_degree: 64, max_coeff_terms: 20_000 }
    }
}

impl Limits {
    pub fn strict(max_basis: usize, max_pairs: usize, max_degree: u32) -> Limits {
        Limits { max_basis, max_pairs, max_degree, ..Limits::default() }
    }
}
