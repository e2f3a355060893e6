//! Shared numeric helpers: positive-base powers, exp-of-log-sum evaluation,
//! and bracketed bisection.
//!
//! Power-law exponents like `6/n` reach 60 at `n = 0.1`, so naive products of
//! `powf` calls overflow or underflow long before the quantities they combine
//! into do. Every multi-factor power expression in the solvers is therefore
//! accumulated as a sum of logs and exponentiated once.

/// `x^p` for `x >= 0`, with the power-law conventions used throughout:
/// `0^p = 0` for `p > 0` and `0^0 = 1`.
///
/// Negative bases are a caller bug; the solvers only ever raise positive
/// lengths, coefficients, and indices.
pub(crate) fn pow_pos(x: f64, p: f64) -> f64 {
    debug_assert!(x >= 0.0, "pow_pos called with negative base {x}");
    if x == 0.0 {
        if p > 0.0 {
            0.0
        } else if p == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        x.powf(p)
    }
}

/// `exp(sum of terms)` where each term is `coeff * ln(base)`.
///
/// Keeps every intermediate in log space so factors like `c21^(3/n)` (which
/// underflows raw f64 near `n = 0.1`) combine safely with the `k^(1+9/n)`
/// factor that offsets it.
pub(crate) fn exp_log_sum(terms: &[(f64, f64)]) -> f64 {
    log_sum(terms).exp()
}

/// Sum of `coeff * ln(base)` terms; the log-domain value behind [`exp_log_sum`].
pub(crate) fn log_sum(terms: &[(f64, f64)]) -> f64 {
    terms.iter().map(|&(coeff, base)| coeff * base.ln()).sum()
}

/// Bracketed bisection for a root of `f` on `[lo, hi]`.
///
/// Requires `f(lo)` and `f(hi)` to have opposite signs (zero endpoints are
/// returned directly). Runs until the bracket width drops below `tol` or
/// `max_iter` halvings, whichever comes first, and returns the midpoint.
pub(crate) fn bisect<F>(mut lo: f64, mut hi: f64, f: F, tol: f64, max_iter: usize) -> f64
where
    F: Fn(f64) -> f64,
{
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    debug_assert!(
        flo.signum() != fhi.signum(),
        "bisect requires a sign change: f({lo}) = {flo}, f({hi}) = {fhi}"
    );

    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= tol {
            return mid;
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return mid;
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_pos_zero_base() {
        assert_eq!(pow_pos(0.0, 2.5), 0.0);
        assert_eq!(pow_pos(0.0, 0.0), 1.0);
        assert_eq!(pow_pos(0.0, -1.0), f64::INFINITY);
    }

    #[test]
    fn exp_log_sum_matches_direct_product_in_safe_range() {
        let direct = 3.0f64.powf(2.5) * 0.7f64.powf(-1.25);
        let via_logs = exp_log_sum(&[(2.5, 3.0), (-1.25, 0.7)]);
        assert!((direct - via_logs).abs() / direct < 1e-14);
    }

    #[test]
    fn exp_log_sum_survives_extreme_factor_cancellation() {
        // 1e-300^2 * 1e300^2 = 1: raw products underflow to zero first.
        let v = exp_log_sum(&[(2.0, 1e-300), (2.0, 1e300)]);
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn bisect_finds_sixth_root() {
        let root = bisect(1.0, 4.0, |k| k.powi(6) - 64.0, 1e-14, 200);
        assert!((root - 2.0).abs() < 1e-12);
    }
}
