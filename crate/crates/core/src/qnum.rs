//! q-integers, q-factorials, q-binomial and q-multinomial coefficients,
//! finite q-Pochhammer symbols and shifted factorials.
//!
//! Everything returned here is an exact polynomial. The q-binomials come from
//! the q-Pascal recurrence, so membership in `ℕ[q]` holds by construction and
//! no polynomial division is ever needed.

use std::sync::{OnceLock, RwLock};

use crate::mpoly::{MPoly, Monomial, Var};

/// `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int(n: u32) -> MPoly {
    MPoly::from_terms((0..n).map(|i| (Monomial::var(Var::Q, i), 1)))
}

/// `[n]_q` for a signed argument that callers know to be non-negative,
/// e.g. `[α + j]_q` with `α = -1`.
pub(crate) fn q_int_i64(n: i64) -> MPoly {
    q_int(u32::try_from(n).expect("q-integer argument must be non-negative"))
}

/// `n!_q = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> MPoly {
    (1..=n).map(q_int).product()
}

/// `[n]_q [n-1]_q ... [k+1]_q = n!_q / k!_q` for `k <= n`.
pub fn q_falling_ratio(n: u32, k: u32) -> MPoly {
    (k + 1..=n).map(q_int).product()
}

fn pascal() -> &'static RwLock<Vec<Vec<MPoly>>> {
    static TRIANGLE: OnceLock<RwLock<Vec<Vec<MPoly>>>> = OnceLock::new();
    TRIANGLE.get_or_init(|| RwLock::new(vec![vec![MPoly::one()]]))
}

/// The q-binomial coefficient; zero whenever `k < 0`, `n < 0` or `k > n`.
pub fn q_binomial(n: i64, k: i64) -> MPoly {
    if n < 0 || k < 0 || k > n {
        return MPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = pascal().read().expect("q-binomial table poisoned");
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = pascal().write().expect("q-binomial table poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("table starts with row 0");
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(MPoly::one());
        for j in 1..m {
            // [m j] = [m-1 j-1] + q^j [m-1 j]
            let shifted = prev[j].shift(&Monomial::var(Var::Q, j as u32));
            row.push(&prev[j - 1] + &shifted);
        }
        row.push(MPoly::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// `(Σ parts)!_q / ∏ parts_i!_q`, as a product of q-binomials of partial sums.
pub fn q_multinomial(parts: &[u32]) -> MPoly {
    let mut total: i64 = 0;
    let mut out = MPoly::one();
    for &p in parts {
        total += i64::from(p);
        out = &out * &q_binomial(total, i64::from(p));
    }
    out
}

/// Like [`q_multinomial`], but zero if any part is negative.
pub fn q_multinomial_signed(parts: &[i64]) -> MPoly {
    if parts.iter().any(|&p| p < 0) {
        return MPoly::zero();
    }
    let parts: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
    q_multinomial(&parts)
}

/// `(a; q)_n = ∏_{i<n} (1 - a q^i)`.
pub fn q_pochhammer(a: &MPoly, n: u32) -> MPoly {
    (0..n)
        .map(|i| MPoly::one() - a.shift(&Monomial::var(Var::Q, i)))
        .product()
}

/// `(x0)_n = x0 (x0 + 1) ... (x0 + n - 1)`.
pub fn rising_factorial(x0: &MPoly, n: u32) -> MPoly {
    (0..n)
        .map(|i| x0 + &MPoly::constant(i64::from(i)))
        .product()
}

/// `C(n, k)` as a big integer; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> num_bigint::BigInt {
    use num_traits::{One, Zero};
    if n < 0 || k < 0 || k > n {
        return num_bigint::BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> num_bigint::BigInt {
    (1..=n).map(num_bigint::BigInt::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }
    fn c(k: i64) -> MPoly {
        MPoly::constant(k)
    }
    fn qpow(e: u32) -> MPoly {
        MPoly::var_pow(Var::Q, e)
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), c(1));
        assert_eq!(q_int(3), c(1) + q() + qpow(2));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), c(1));
        assert_eq!(q_factorial(2), c(1) + q());
        assert_eq!(q_factorial(3), c(1) + c(2) * q() + c(2) * qpow(2) + qpow(3));
    }

    #[test]
    fn q_binomial_examples() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), c(1));
        }
        // inversions of 0011-type words: 0,1,2,2,3,4
        assert_eq!(
            q_binomial(4, 2),
            c(1) + q() + c(2) * qpow(2) + qpow(3) + qpow(4)
        );
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(-1, -1).is_zero());
    }

    #[test]
    fn q_binomial_counts_inversions_of_binary_words() {
        for n in 0..=8u32 {
            for k in 0..=n {
                let mut expect = MPoly::zero();
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() != k {
                        continue;
                    }
                    let word: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
                    let inv = crate::combstat::inv(&word) as u32;
                    expect += &qpow(inv);
                }
                assert_eq!(q_binomial(n.into(), k.into()), expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_multinomial_examples() {
        assert_eq!(q_multinomial(&[5]), c(1));
        assert_eq!(q_multinomial(&[1, 1]), c(1) + q());
        assert_eq!(q_multinomial(&[1, 1, 1]), q_factorial(3));
        assert!(q_multinomial_signed(&[2, -1, 3]).is_zero());
    }

    #[test]
    fn q_pochhammer_examples() {
        let t = MPoly::var(Var::T);
        assert_eq!(q_pochhammer(&t, 0), c(1));
        assert_eq!(q_pochhammer(&t, 1), c(1) - t.clone());
        assert_eq!(q_pochhammer(&t, 2), (c(1) - t.clone()) * (c(1) - &t * &q()));
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&MPoly::var(Var::X), 0), c(1));
        assert_eq!(rising_factorial(&c(3), 2), c(12));
        assert_eq!(rising_factorial(&c(1), 2), c(2));
    }

    #[test]
    fn integer_helpers() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn q_binomial_at_one_and_symmetry() {
        for n in 0..=12i64 {
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert_eq!(b.specialize(&[(Var::Q, 1)]).constant_term(), binomial(n, k));
                assert_eq!(b, q_binomial(n, n - k));
                assert!(b.is_nonnegative());
                let f = &(&b * &q_factorial(k as u32)) * &q_factorial((n - k) as u32);
                assert_eq!(f, q_factorial(n as u32));
            }
        }
    }

    #[test]
    fn q_binomial_table_is_safe_across_threads() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || q_binomial(10 + i, 3 + i / 2)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let i = i as i64;
            assert_eq!(h.join().unwrap(), q_binomial(10 + i, 3 + i / 2));
        }
    }
}
