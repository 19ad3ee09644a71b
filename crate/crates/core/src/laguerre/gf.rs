//! The exponential-type generating function
//!
//! ```text
//! Σ_n L^{(α)}_n(x;y|q) t^n / n!_q
//!   = (t;q)_∞ (y t q^{α+1};q)_∞ / ∏_k [1 - ((1-q)x + y + 1) t q^k + y t² q^{2k}],
//! ```
//!
//! expanded as a formal series modulo `(t^T, q^Q)`.

use crate::mpoly::{MPoly, Monomial, TruncationPolicy, Var};
use crate::qnum::{q_factorial, q_int_i64};

use super::{laguerre_signless_family, Alpha};

fn t_q(t_exp: u32, q_exp: u32) -> Monomial {
    Monomial::var(Var::T, t_exp).with_exp(Var::Q, q_exp)
}

/// The product side, truncated modulo `(t^{t_max}, q^{q_max})`.
///
/// Factors whose `q`-prefactor reaches `q_max` are congruent to 1 and are
/// skipped. Every denominator factor with `k < q_max` is kept, including
/// `k = 0` which carries no power of `q` on `t`.
pub fn gf_truncated(alpha: Alpha, t_max: u32, q_max: u32) -> MPoly {
    let policy = TruncationPolicy::qt(q_max, t_max);
    let offset = (alpha.get() + 1) as u32;
    let y = MPoly::var(Var::Y);

    let mut numerator = MPoly::one();
    for i in 0..q_max {
        numerator = numerator.mul_trunc(&(MPoly::one() - MPoly::term(t_q(1, i), 1)), policy);
        if offset + i < q_max {
            let factor = MPoly::one() - y.shift(&t_q(1, offset + i));
            numerator = numerator.mul_trunc(&factor, policy);
        }
    }

    let linear =
        &(&(MPoly::one() - MPoly::var(Var::Q)) * &MPoly::var(Var::X)) + &(&y + &MPoly::one());
    let mut denominator = MPoly::one();
    for k in 0..q_max {
        let factor = MPoly::one() - linear.shift(&t_q(1, k)) + y.shift(&t_q(2, 2 * k));
        denominator = denominator.mul_trunc(&factor.truncate(policy), policy);
    }
    let inverse = denominator
        .series_inverse(policy)
        .expect("denominator has constant term 1 and every tail term carries t");
    numerator.mul_trunc(&inverse, policy)
}

/// `Σ_{n<t_max} L_n · (n!_q)^{-1} · t^n` modulo `q^{q_max}`, built from the
/// recurrence.
pub fn gf_from_polynomials(alpha: Alpha, t_max: u32, q_max: u32) -> MPoly {
    if t_max == 0 {
        return MPoly::zero();
    }
    let policy = TruncationPolicy::qt(q_max, t_max);
    laguerre_signless_family(t_max - 1, alpha)
        .iter()
        .enumerate()
        .map(|(n, p)| {
            let inv = q_factorial(n as u32)
                .series_inverse(policy)
                .expect("n!_q is a unit");
            p.mul_trunc(&inv, policy)
                .shift(&Monomial::var(Var::T, n as u32))
                .truncate(policy)
        })
        .sum()
}

/// The numerators `∏_{k=1}^n [α+k]_q · y^n` for `n < t_max`; the `t^n`
/// coefficient of the `x = 0` generating function is this divided by `n!_q`.
pub fn zero_gf_closed_form(alpha: Alpha, t_max: u32) -> Vec<MPoly> {
    let mut out = Vec::with_capacity(t_max as usize);
    let mut acc = MPoly::one();
    for n in 0..t_max {
        if n > 0 {
            acc = &(&acc * &q_int_i64(alpha.get() + i64::from(n))) * &MPoly::var(Var::Y);
        }
        out.push(acc.clone());
    }
    out
}

/// The `x = 0` series assembled from [`zero_gf_closed_form`].
fn zero_gf_series(alpha: Alpha, t_max: u32, q_max: u32) -> MPoly {
    let policy = TruncationPolicy::qt(q_max, t_max);
    zero_gf_closed_form(alpha, t_max)
        .iter()
        .enumerate()
        .map(|(n, num)| {
            let inv = q_factorial(n as u32)
                .series_inverse(policy)
                .expect("n!_q is a unit");
            num.mul_trunc(&inv, policy)
                .shift(&Monomial::var(Var::T, n as u32))
                .truncate(policy)
        })
        .sum()
}

/// Checks `L^{(α)}(x;y;t|q) = L^{(α)}(0;y;t|q) · L^{(-1)}(x;y;t|q)` modulo
/// `(t^{t_max}, q^{q_max})`. The left side and the second factor are product
/// expansions; the first factor comes from the closed form of its
/// coefficients.
pub fn gf_factorization_check(alpha: Alpha, t_max: u32, q_max: u32) -> bool {
    let policy = TruncationPolicy::qt(q_max, t_max);
    let lhs = gf_truncated(alpha, t_max, q_max);
    let rhs = zero_gf_series(alpha, t_max, q_max)
        .mul_trunc(&gf_truncated(Alpha::MINUS_ONE, t_max, q_max), policy);
    lhs == rhs
}
