//! Suspension bookkeeping. Every sign produced by moving `s` or `s^{-1}`
//! past other symbols is computed here.
//!
//! `s` has degree 1 and `s^{-1}` is its dual, so `s^{-1}s = 1` while
//! `s s^{-1} = −1` when read as a pairing, and `s^{-n}s^n = (−1)^{n(n−1)/2}`.

use super::scalar::sgn;

/// Sign of applying `f_1 ⊗ … ⊗ f_n` to `y_1 ⊗ … ⊗ y_n` under the Koszul rule:
/// `(−1)^{Σ_i |f_i|(|y_1|+…+|y_{i−1}|)}`.
pub fn tensor_apply_sign(map_degrees: &[i64], elem_degrees: &[i64]) -> i64 {
    assert_eq!(map_degrees.len(), elem_degrees.len());
    let mut e = 0i64;
    let mut acc = 0i64;
    for i in 0..map_degrees.len() {
        e += map_degrees[i] * acc;
        acc += elem_degrees[i];
    }
    sgn(e)
}

/// Pairing of a tensor of functionals with a tensor of elements:
/// `(f_1⊗…⊗f_n)(x_1⊗…⊗x_n) = ±Π f_i(x_i)`; returns the sign.
pub fn pairing_sign(func_degrees: &[i64], elem_degrees: &[i64]) -> i64 {
    tensor_apply_sign(func_degrees, elem_degrees)
}

/// `s^{-n}s^n`: the pairing of `(s^{-1})^{⊗n}` with `s^{⊗n}`.
pub fn dual_power_sign(n: usize) -> i64 {
    pairing_sign(&vec![-1; n], &vec![1; n])
}

/// Contracting `s^{-1}` against `s` (functional on the left).
pub fn contract_inv_s() -> i64 {
    pairing_sign(&[-1], &[1])
}

/// Contracting `s s^{-1}`: the functional must first move past `s`.
pub fn contract_s_inv() -> i64 {
    sgn(1 * -1) * contract_inv_s()
}

/// `(s^{-1})^{⊗n}(s x_1 ⊗ … ⊗ s x_n) = ± x_1 ⊗ … ⊗ x_n`; returns the sign.
pub fn desuspend_tensor_sign(x_degrees: &[i64]) -> i64 {
    let sx: Vec<i64> = x_degrees.iter().map(|d| d + 1).collect();
    tensor_apply_sign(&vec![-1; x_degrees.len()], &sx)
}

/// `s^{⊗n}(x_1 ⊗ … ⊗ x_n) = ± s x_1 ⊗ … ⊗ s x_n`; returns the sign.
pub fn suspend_tensor_sign(x_degrees: &[i64]) -> i64 {
    tensor_apply_sign(&vec![1; x_degrees.len()], x_degrees)
}

/// Degree of `s^k x`.
pub fn shifted_degree(d: i64, k: i64) -> i64 {
    d + k
}
