//! Binomial coefficients with negative tops, pair-placement counts and
//! Jensen's convolution identity.

/// `x(x-1)...(x-k+1)/k!`, for any integer `x`.
pub fn binomial_generalized(x: i64, k: u32) -> i128 {
    // Each prefix product divided by its factorial is itself a generalized
    // binomial, hence an integer, so the running division is exact.
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (x as i128 - i) / (i + 1);
    }
    acc
}

/// Zero for negative `x`, otherwise the usual binomial coefficient.
pub fn binomial_clamped(x: i64, k: u32) -> i128 {
    if x < 0 {
        0
    } else {
        binomial_generalized(x, k)
    }
}

/// Ways to choose `k` disjoint pairs of adjacent positions from a string of
/// length `x`: `C(x - k, k)`, clamped.
pub fn count_disjoint_pairs(x: usize, k: usize) -> u64 {
    binomial_clamped(x as i64 - k as i64, k as u32) as u64
}

/// Both sides of the `z = -1` specialisation of Jensen's identity:
/// `sum_u C(x-u, u) C(y-(v-u), v-u) = sum_u C(x+y-v-u, v-u) (-1)^u`,
/// with generalized binomials.
pub fn jensen_sides(x: i64, y: i64, v: u32) -> (i128, i128) {
    let v64 = v as i64;
    let lhs = (0..=v64)
        .map(|u| {
            binomial_generalized(x - u, u as u32)
                * binomial_generalized(y - (v64 - u), (v64 - u) as u32)
        })
        .sum();
    let rhs = (0..=v64)
        .map(|u| {
            let sign = if u % 2 == 0 { 1 } else { -1 };
            binomial_generalized(x + y - v64 - u, (v64 - u) as u32) * sign
        })
        .sum();
    (lhs, rhs)
}

pub fn jensen_check(x: i64, y: i64, v: u32) -> bool {
    let (lhs, rhs) = jensen_sides(x, y, v);
    lhs == rhs
}
