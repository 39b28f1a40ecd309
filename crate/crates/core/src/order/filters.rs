//! Necessary conditions for `r_alpha >=_s r_beta` on equitable ribbons.

use serde::Serialize;

use crate::composition::Composition;
use crate::equitable::{profile, quasi_profile, short_ends};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterVerdict {
    MayCompare,
    CannotBeGreater,
}

/// Both ribbons must have the same numbers of rows of length `a` and `a + 1`.
fn same_family(alpha: &Composition, beta: &Composition, a: usize) -> Result<()> {
    let pa = profile(alpha, a)?;
    let pb = profile(beta, a)?;
    if (pa.long_rows(), pa.short_rows()) != (pb.long_rows(), pb.short_rows()) {
        return Err(Error::InvalidParameter(format!(
            "{alpha} and {beta} do not have the same row multiset over {{{a}, {}}}",
            a + 1
        )));
    }
    Ok(())
}

/// A larger ribbon has at least as many short end rows.
pub fn filter_short_ends(
    alpha: &Composition,
    beta: &Composition,
    a: usize,
) -> Result<FilterVerdict> {
    same_family(alpha, beta, a)?;
    Ok(if short_ends(alpha, a)? < short_ends(beta, a)? {
        FilterVerdict::CannotBeGreater
    } else {
        FilterVerdict::MayCompare
    })
}

/// A larger ribbon has a lexicographically smaller or equal quasi-profile.
pub fn filter_quasi_profile(
    alpha: &Composition,
    beta: &Composition,
    a: usize,
) -> Result<FilterVerdict> {
    same_family(alpha, beta, a)?;
    Ok(if quasi_profile(alpha, a)? > quasi_profile(beta, a)? {
        FilterVerdict::CannotBeGreater
    } else {
        FilterVerdict::MayCompare
    })
}

/// `CannotBeGreater` if either filter rules the relation out.
pub fn combined_filter(alpha: &Composition, beta: &Composition, a: usize) -> Result<FilterVerdict> {
    if filter_short_ends(alpha, beta, a)? == FilterVerdict::CannotBeGreater {
        return Ok(FilterVerdict::CannotBeGreater);
    }
    filter_quasi_profile(alpha, beta, a)
}
