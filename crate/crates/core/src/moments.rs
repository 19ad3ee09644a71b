//! Moments of the (q,y)-Laguerre polynomials from weighted lattice paths, the
//! moment functional, orthogonality and linearization coefficients.
//!
//! Two independent engines produce the moments: a Motzkin-path transfer over
//! the three-term recurrence coefficients, and a Dyck-path transfer over the
//! Stieltjes coefficients `γ_{2k} = [k]_q`, `γ_{2k+1} = y([k]_q + β q^k)`,
//! which specialize to each other at `β = [α+1]_q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combstat::moments_bruteforce;
use crate::error::{Error, Result};
use crate::laguerre::{laguerre_family, recurrence_b, recurrence_lambda, Alpha};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::qnum::{factorial, q_binomial, q_factorial, q_int, q_int_i64, q_multinomial_signed};

/// Jacobi coefficients: `b[n]` on the diagonal, `lam[n]` below it (`lam[0]`
/// is unused and zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JCoeffs {
    pub b: Vec<MPoly>,
    pub lam: Vec<MPoly>,
}

impl JCoeffs {
    /// `b_n = y[n+α+1]_q + [n]_q`, `λ_n = y[n]_q[n+α]_q` for `n <= n_max`.
    pub fn laguerre(n_max: u32, alpha: Alpha) -> Self {
        JCoeffs {
            b: (0..=n_max).map(|n| recurrence_b(n, alpha)).collect(),
            lam: (0..=n_max).map(|n| recurrence_lambda(n, alpha)).collect(),
        }
    }
}

/// Stieltjes coefficients `γ_1, γ_2, ...`, stored with a zero at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCoeffs {
    pub gamma: Vec<MPoly>,
}

impl SCoeffs {
    fn build(n_max: u32, beta: &MPoly) -> Self {
        let y = MPoly::var(Var::Y);
        let mut gamma = vec![MPoly::zero()];
        for h in 1..=2 * n_max {
            let k = h / 2;
            let g = if h % 2 == 0 {
                q_int(k)
            } else {
                &y * &(q_int(k) + beta.shift(&Monomial::var(Var::Q, k)))
            };
            gamma.push(g);
        }
        SCoeffs { gamma }
    }

    /// Coefficients for paths of semilength up to `n_max` with `β` kept as a variable.
    pub fn laguerre_symbolic(n_max: u32) -> Self {
        SCoeffs::build(n_max, &MPoly::var(Var::Beta))
    }

    /// Coefficients with `β = [α+1]_q`.
    pub fn laguerre(n_max: u32, alpha: Alpha) -> Self {
        SCoeffs::build(n_max, &q_int_i64(alpha.get() + 1))
    }
}

/// Moments `μ_0, ..., μ_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentTable {
    mu: Vec<MPoly>,
}

impl MomentTable {
    pub fn get(&self, n: usize) -> Option<&MPoly> {
        self.mu.get(n)
    }

    pub fn as_slice(&self) -> &[MPoly] {
        &self.mu
    }

    /// Largest available index.
    pub fn max_index(&self) -> usize {
        self.mu.len() - 1
    }

    /// Replaces `β` by `[α+1]_q`.
    pub fn specialize_beta(&self, alpha: Alpha) -> MomentTable {
        let beta = q_int_i64(alpha.get() + 1);
        let mu = self
            .mu
            .iter()
            .map(|m| {
                m.substitute(Var::Beta, &beta)
                    .expect("[α+1]_q does not mention β")
            })
            .collect();
        MomentTable { mu }
    }
}

/// Weighted Motzkin paths: up steps weigh 1, a level step at height `h`
/// weighs `b_h`, a down step from `h+1` weighs `λ_{h+1}`.
pub fn moments_jfrac(n_max: u32, coeffs: &JCoeffs) -> MomentTable {
    let n_max = n_max as usize;
    assert!(
        coeffs.b.len() >= n_max && coeffs.lam.len() > n_max,
        "coefficients too short"
    );
    let mut v = vec![MPoly::zero(); n_max + 2];
    v[0] = MPoly::one();
    let mut mu = vec![MPoly::one()];
    for step in 1..=n_max {
        // Heights above n_max - step can no longer return to zero in time.
        let top = step.min(n_max - step);
        let mut next = vec![MPoly::zero(); n_max + 2];
        for (h, slot) in next.iter_mut().enumerate().take(top + 1) {
            let mut acc = MPoly::zero();
            if h > 0 {
                acc += &v[h - 1];
            }
            if !v[h].is_zero() {
                acc += &(&coeffs.b[h] * &v[h]);
            }
            if !v[h + 1].is_zero() {
                acc += &(&coeffs.lam[h + 1] * &v[h + 1]);
            }
            *slot = acc;
        }
        v = next;
        mu.push(v[0].clone());
    }
    MomentTable { mu }
}

/// Weighted Dyck paths of semilength up to `n_max`: a down step from height
/// `h` weighs `γ_h`.
pub fn moments_sfrac(n_max: u32, coeffs: &SCoeffs) -> MomentTable {
    let len = 2 * n_max as usize;
    assert!(coeffs.gamma.len() > len, "coefficients too short");
    let mut v = vec![MPoly::zero(); len + 2];
    v[0] = MPoly::one();
    let mut mu = vec![MPoly::one()];
    for step in 1..=len {
        let top = step.min(len - step);
        let mut next = vec![MPoly::zero(); len + 2];
        for (h, slot) in next.iter_mut().enumerate().take(top + 1) {
            let mut acc = MPoly::zero();
            if h > 0 {
                acc += &v[h - 1];
            }
            if !v[h + 1].is_zero() {
                acc += &(&coeffs.gamma[h + 1] * &v[h + 1]);
            }
            *slot = acc;
        }
        v = next;
        if step % 2 == 0 {
            mu.push(v[0].clone());
        }
    }
    MomentTable { mu }
}

/// `μ_0, ..., μ_N` for parameter `α`.
pub fn laguerre_moments(n_max: u32, alpha: Alpha) -> MomentTable {
    moments_jfrac(n_max, &JCoeffs::laguerre(n_max, alpha))
}

/// The moment functional extended linearly: `Σ_k [x^k]p · μ_k`.
pub fn functional_l(p: &MPoly, table: &MomentTable) -> Result<MPoly> {
    let degree = p.degree_in(Var::X);
    if degree as usize > table.max_index() {
        return Err(Error::DegreeTooHigh {
            degree,
            available: table.mu.len(),
        });
    }
    Ok((0..=degree)
        .map(|k| &p.coeff_in_var(Var::X, k) * &table.mu[k as usize])
        .sum())
}

/// Checks `L(L_n L_m) = y^n n!_q ∏_{j=1}^n [α+j]_q δ_{nm}` for the signed
/// polynomials.
pub fn orthogonality_check(n: u32, m: u32, alpha: u32) -> bool {
    let alpha = Alpha::new(alpha.into()).expect("non-negative");
    let family = laguerre_family(n.max(m), alpha);
    let table = laguerre_moments(n + m, alpha);
    let lhs = functional_l(&(&family[n as usize] * &family[m as usize]), &table)
        .expect("moments cover n + m");
    lhs == orthogonality_norm(n, m, alpha)
}

/// The right side `y^n n!_q ∏_{j=1}^n [α+j]_q δ_{nm}`.
pub fn orthogonality_norm(n: u32, m: u32, alpha: Alpha) -> MPoly {
    if n != m {
        return MPoly::zero();
    }
    let product: MPoly = (1..=n)
        .map(|j| q_int_i64(alpha.get() + i64::from(j)))
        .product();
    (&q_factorial(n) * &product).shift(&Monomial::var(Var::Y, n))
}

/// Closed form of `L(L_{n1} L_{n2} L_{n3})`:
///
/// ```text
/// n1!_q n2!_q n3!_q Σ_s y^s [s; N-2s, s-n3, s-n2, s-n1]_q [α+s, s]_q
///     Σ_k [N-2s, k]_q y^k q^{C(k+1,2) + C(N-2s-k,2) + kα}
/// ```
///
/// with `N = n1 + n2 + n3`; terms with a negative multinomial part vanish.
pub fn linearization_formula(n1: u32, n2: u32, n3: u32, alpha: u32) -> MPoly {
    let total = i64::from(n1 + n2 + n3);
    let a = i64::from(alpha);
    let low = n1.max(n2).max(n3);
    let high = (n1 + n2 + n3) / 2;
    let mut sum = MPoly::zero();
    for s in low..=high {
        let s = i64::from(s);
        let free = total - 2 * s;
        let parts = [
            free,
            s - i64::from(n3),
            s - i64::from(n2),
            s - i64::from(n1),
        ];
        let multinomial = q_multinomial_signed(&parts);
        if multinomial.is_zero() {
            continue;
        }
        let inner: MPoly = (0..=free)
            .map(|k| {
                let q_exp = k * (k + 1) / 2 + (free - k) * (free - k - 1) / 2 + k * a;
                let m = Monomial::var(Var::Y, k as u32).with_exp(Var::Q, q_exp as u32);
                q_binomial(free, k).shift(&m)
            })
            .sum();
        let term = &(&multinomial * &q_binomial(a + s, s)) * &inner;
        sum += &term.shift(&Monomial::var(Var::Y, s as u32));
    }
    let prefactor = &(&q_factorial(n1) * &q_factorial(n2)) * &q_factorial(n3);
    &prefactor * &sum
}

/// `L(L_{n1} L_{n2} L_{n3})` computed from the moments.
pub fn linearization_via_moments(n1: u32, n2: u32, n3: u32, alpha: u32) -> MPoly {
    let alpha = Alpha::new(alpha.into()).expect("non-negative");
    let family = laguerre_family(n1.max(n2).max(n3), alpha);
    let product = &(&family[n1 as usize] * &family[n2 as usize]) * &family[n3 as usize];
    let table = laguerre_moments(n1 + n2 + n3, alpha);
    functional_l(&product, &table).expect("moments cover the product degree")
}

/// The classical coefficient
/// `Σ_s n1! n2! n3! 2^{N-2s} (α+1)_s / ((s-n1)! (s-n2)! (s-n3)! (N-2s)!)`.
pub fn classical_linearization(n1: u32, n2: u32, n3: u32, alpha: u32) -> BigInt {
    let total = n1 + n2 + n3;
    let numerator = factorial(n1) * factorial(n2) * factorial(n3);
    let mut sum = BigRational::zero();
    for s in n1.max(n2).max(n3)..=total / 2 {
        let rising: BigInt = (1..=s).map(|j| BigInt::from(alpha + j)).product();
        let num = &numerator * (BigInt::from(1) << (total - 2 * s)) * rising;
        let den =
            factorial(s - n1) * factorial(s - n2) * factorial(s - n3) * factorial(total - 2 * s);
        sum += BigRational::new(num, den);
    }
    assert!(
        sum.is_integer(),
        "classical linearization coefficient is an integer"
    );
    sum.to_integer()
}

/// Checks that both engines agree after `β = [α+1]_q`, up to `μ_{n_max}`.
pub fn contraction_check(n_max: u32, alpha: Alpha) -> bool {
    let j = moments_jfrac(n_max, &JCoeffs::laguerre(n_max, alpha));
    let s = moments_sfrac(n_max, &SCoeffs::laguerre(n_max, alpha));
    j == s
}

/// Checks `Σ_σ β^{rec} y^{wex} q^{cros} = μ_n` with `β` symbolic.
pub fn permutation_moments_check(n: u32) -> bool {
    let table = moments_sfrac(n, &SCoeffs::laguerre_symbolic(n));
    table.mu[n as usize] == moments_bruteforce(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(var: Var) -> MPoly {
        MPoly::var(var)
    }
    fn al(a: i64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    #[test]
    fn low_moments_at_alpha_zero() {
        let y = v(Var::Y);
        let q = v(Var::Q);
        let table = laguerre_moments(3, al(0));
        assert_eq!(table.as_slice()[0], MPoly::one());
        assert_eq!(table.as_slice()[1], y.clone());
        assert_eq!(table.as_slice()[2], &y * &y + y.clone());
        let mu3 = &(&y * &y) * &y + &(&(MPoly::constant(3) + q) * &y) * &y + y.clone();
        assert_eq!(table.as_slice()[3], mu3);
    }

    #[test]
    fn first_moment_is_y_times_alpha_plus_one() {
        for a in 0..4 {
            let table = laguerre_moments(1, al(a));
            assert_eq!(table.as_slice()[1], &v(Var::Y) * &q_int_i64(a + 1));
        }
    }

    #[test]
    fn symbolic_dyck_moments() {
        let table = moments_sfrac(2, &SCoeffs::laguerre_symbolic(2));
        let (y, b) = (v(Var::Y), v(Var::Beta));
        assert_eq!(table.as_slice()[0], MPoly::one());
        assert_eq!(table.as_slice()[2], &y * &b + &(&y * &y) * &(&b * &b));
    }

    #[test]
    fn engines_agree() {
        for a in 0..=2 {
            assert!(contraction_check(8, al(a)), "alpha={a}");
        }
    }

    #[test]
    fn permutations_give_moments() {
        for n in 0..=6 {
            assert!(permutation_moments_check(n), "n={n}");
        }
    }

    #[test]
    fn functional_examples() {
        let table = laguerre_moments(2, al(1));
        assert_eq!(functional_l(&MPoly::one(), &table).unwrap(), MPoly::one());
        assert_eq!(
            functional_l(&v(Var::X), &table).unwrap(),
            &v(Var::Y) * &q_int(2)
        );
        let l1 = laguerre_family(1, al(1)).pop().unwrap();
        let expect = &v(Var::Y) * &q_int(2);
        assert_eq!(functional_l(&(&l1 * &l1), &table).unwrap(), expect);
        let cube = v(Var::X).pow(3, Default::default());
        assert_eq!(
            functional_l(&cube, &table),
            Err(Error::DegreeTooHigh {
                degree: 3,
                available: 3
            })
        );
    }

    #[test]
    fn orthogonality() {
        assert!(orthogonality_check(0, 0, 0));
        assert!(orthogonality_check(2, 1, 0));
        let q = v(Var::Q);
        let expect = (v(Var::Y) * v(Var::Y))
            * (MPoly::one() + q.clone())
            * (MPoly::one() + q.clone())
            * (MPoly::one() + q.clone() + q.clone() * q);
        assert_eq!(orthogonality_norm(2, 2, al(1)), expect);
        for a in 0..=2 {
            for n in 0..=5 {
                for m in 0..=5 {
                    assert!(orthogonality_check(n, m, a), "n={n} m={m} a={a}");
                }
            }
        }
    }

    #[test]
    fn functional_kills_lower_degrees() {
        for a in 0..=2 {
            let family = laguerre_family(5, al(a));
            let table = laguerre_moments(10, al(a));
            for n in 0..=5u32 {
                for m in 0..n {
                    let p = &MPoly::var_pow(Var::X, m) * &family[n as usize];
                    assert!(functional_l(&p, &table).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn linearization_examples() {
        let y = v(Var::Y);
        let q = v(Var::Q);
        assert_eq!(linearization_formula(0, 0, 0, 0), MPoly::one());
        assert_eq!(linearization_formula(1, 1, 0, 0), y.clone());
        assert_eq!(linearization_formula(1, 1, 1, 0), &y + &(&q * &(&y * &y)));
        assert_eq!(
            linearization_via_moments(1, 1, 1, 0).specialize(&[(Var::Y, 1), (Var::Q, 1)]),
            MPoly::constant(2)
        );
        assert_eq!(classical_linearization(0, 0, 0, 3), BigInt::from(1));
        assert_eq!(classical_linearization(1, 1, 1, 0), BigInt::from(2));
    }

    #[test]
    fn linearization_oracle_values() {
        // expanded with an independent computer algebra system
        let poly = |coeffs: &[i64], y_exp: u32, q_shift: u32| {
            MPoly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| {
                (
                    Monomial::var(Var::Y, y_exp).with_exp(Var::Q, q_shift + i as u32),
                    c,
                )
            }))
        };
        assert_eq!(
            linearization_formula(2, 1, 1, 1),
            poly(&[1, 3, 4, 3, 1], 2, 0)
        );
        let expect = poly(&[1, 6, 18, 36, 52, 55, 42, 22, 7, 1], 3, 0)
            + poly(&[1, 4, 7, 7, 4, 1], 2, 1)
            + poly(&[1, 4, 7, 7, 4, 1], 4, 5);
        assert_eq!(linearization_formula(2, 2, 2, 1), expect);
        assert_eq!(classical_linearization(2, 2, 2, 1), BigInt::from(288));
        assert_eq!(classical_linearization(2, 2, 2, 0), BigInt::from(80));
    }

    #[test]
    fn linearization_routes_agree() {
        for a in 0..=2 {
            for n1 in 0..=3 {
                for n2 in 0..=3 {
                    for n3 in 0..=3 {
                        let formula = linearization_formula(n1, n2, n3, a);
                        assert_eq!(
                            formula,
                            linearization_via_moments(n1, n2, n3, a),
                            "{n1} {n2} {n3} a={a}"
                        );
                        let at_one = formula
                            .specialize(&[(Var::Y, 1), (Var::Q, 1)])
                            .constant_term();
                        assert_eq!(at_one, classical_linearization(n1, n2, n3, a));
                        assert!(formula.is_nonnegative());
                    }
                }
            }
        }
    }
}
