//! Float diagnostics for huge integers.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Natural logarithm of a positive big integer.
pub fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top = (v >> shift).to_f64().expect("64-bit prefix fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `a / b` as a float, without overflowing on huge operands.
pub fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    (ln_big(a) - ln_big(b)).exp()
}
