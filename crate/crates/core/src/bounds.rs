//! Exact integer evaluation of the floor/ceiling/root/log expressions in the
//! color bounds. Floating point is only used to get a starting guess; every
//! answer is confirmed with big-integer comparisons.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// ⌈(4Δ²)^{1/(δ−1)}⌉: the palette size for the randomized recolorings.
/// Requires δ ≥ 2.
pub fn palette_size(min_degree: usize, max_degree: usize) -> Result<u64> {
    if min_degree < 2 {
        return Err(Error::input(format!(
            "palette size needs minimum degree >= 2, got {min_degree}"
        )));
    }
    let target = BigUint::from(4u32) * BigUint::from(max_degree) * BigUint::from(max_degree);
    Ok(ceil_root(&target, (min_degree - 1) as u32))
}

/// Smallest `x >= 1` with `x^k >= target`.
fn ceil_root(target: &BigUint, k: u32) -> u64 {
    let guess = target_f64(target).powf(1.0 / k as f64).ceil().max(1.0) as u64;
    let holds = |x: u64| BigUint::from(x).pow(k) >= *target;
    let mut x = guess.max(1);
    while x > 1 && holds(x - 1) {
        x -= 1;
    }
    while !holds(x) {
        x += 1;
    }
    x
}

fn target_f64(x: &BigUint) -> f64 {
    x.to_string().parse().unwrap_or(f64::MAX)
}

/// ⌊log₂ α⌋ for α ≥ 1.
pub fn floor_log2(alpha: usize) -> usize {
    assert!(alpha >= 1, "log of zero");
    (usize::BITS - 1 - alpha.leading_zeros()) as usize
}

/// ⌊log_ρ α⌋ with ρ = 2Δ/(2Δ−δ), i.e. the largest `j` such that
/// `(2Δ)^j <= α·(2Δ−δ)^j`. Requires α ≥ 1 and 1 ≤ δ ≤ Δ.
pub fn floor_log_ratio(alpha: usize, min_degree: usize, max_degree: usize) -> Result<usize> {
    if alpha == 0 || min_degree == 0 || min_degree > max_degree {
        return Err(Error::input(format!(
            "log ratio undefined for alpha={alpha}, delta={min_degree}, Delta={max_degree}"
        )));
    }
    let num = 2 * max_degree as u64;
    let den = num - min_degree as u64;
    let holds = |j: u32| {
        BigUint::from(num).pow(j) <= BigUint::from(alpha) * BigUint::from(den).pow(j)
    };
    let ratio = num as f64 / den as f64;
    let mut j = ((alpha as f64).ln() / ratio.ln()).floor().max(0.0) as u32;
    while j > 0 && !holds(j) {
        j -= 1;
    }
    while holds(j + 1) {
        j += 1;
    }
    Ok(j as usize)
}

pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Whether Δ ≤ 2^{(δ−3)/2}, checked as Δ² ≤ 2^{δ−3}. Only meaningful for
/// δ ≥ 3; smaller δ never qualifies.
pub fn small_spread(min_degree: usize, max_degree: usize) -> bool {
    if min_degree < 3 {
        return false;
    }
    BigUint::from(max_degree).pow(2) <= BigUint::from(1u32) << (min_degree - 3)
}

/// For δ > 4, whether Δ/δ ≥ δ^{3/(δ−4)}, checked as Δ^{δ−4} ≥ δ^{δ−1}.
/// `None` when δ ≤ 4.
pub fn wide_degree_case(min_degree: usize, max_degree: usize) -> Option<bool> {
    (min_degree > 4).then(|| {
        let lhs = BigUint::from(max_degree).pow((min_degree - 4) as u32);
        let rhs = BigUint::from(min_degree).pow((min_degree - 1) as u32);
        lhs >= rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent check of the palette size by linear scan in u128.
    fn palette_by_scan(delta: u32, big: u128) -> u64 {
        (1u64..)
            .find(|&x| (x as u128).checked_pow(delta - 1).is_none_or(|p| p >= 4 * big * big))
            .unwrap()
    }

    #[test]
    fn palette_sizes() {
        assert_eq!(palette_size(2, 2).unwrap(), 16);
        assert_eq!(palette_size(3, 3).unwrap(), 6);
        assert_eq!(palette_size(4, 4).unwrap(), 4);
        assert!(palette_size(1, 3).is_err());
        for d in 2..12u32 {
            for big in d as u128..40 {
                assert_eq!(palette_size(d as usize, big as usize).unwrap(), palette_by_scan(d, big));
            }
        }
    }

    #[test]
    fn log_terms() {
        assert_eq!(floor_log2(1), 0);
        assert_eq!(floor_log2(3), 1);
        assert_eq!(floor_log2(4), 2);
        // regular graphs: ratio 2
        assert_eq!(floor_log_ratio(3, 2, 2).unwrap(), 1);
        assert_eq!(floor_log_ratio(4, 3, 3).unwrap(), 2);
        for alpha in 1..200 {
            assert_eq!(floor_log_ratio(alpha, 5, 5).unwrap(), floor_log2(alpha));
        }
        // ratio 4/3: (4/3)^2 = 1.77 <= 2 < (4/3)^3
        assert_eq!(floor_log_ratio(2, 1, 2).unwrap(), 2);
        // huge spread stays exact
        let j = floor_log_ratio(10_000, 2, 10_000).unwrap();
        let r = 20_000f64 / 19_998f64;
        assert!(r.powi(j as i32) <= 10_000.0 && r.powi(j as i32 + 1) > 10_000.0 - 1e-6);
        assert!(floor_log_ratio(0, 2, 2).is_err());
    }

    #[test]
    fn hypothesis_checks() {
        assert!(!small_spread(2, 2));
        // δ = 9: 2^3 = 8 → Δ ≤ 2.83
        assert!(small_spread(13, 13));
        assert!(!small_spread(9, 9));
        assert_eq!(wide_degree_case(4, 100), None);
        assert_eq!(wide_degree_case(5, 5), Some(false));
        // δ=5: Δ ≥ 5^4 = 625
        assert_eq!(wide_degree_case(5, 625), Some(true));
        assert_eq!(wide_degree_case(5, 624), Some(false));
    }
}
