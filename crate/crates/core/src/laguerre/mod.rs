//! (q,y)-Laguerre polynomials.
//!
//! The signed polynomials `L^{(α)}_n(x;y;q)` satisfy the three-term recurrence
//!
//! ```text
//! L_{n+1} = (x - (y[n+α+1]_q + [n]_q)) L_n - y[n]_q[n+α]_q L_{n-1},
//! L_0 = 1, L_{-1} = 0,
//! ```
//!
//! and the signless polynomials are `(-1)^n L_n(-x;y;q) = Σ_k ℓ_{n,k}(y;q) x^k`.
//! They are computed here by the recurrence, by the explicit summation
//! formula (see [`laguerre_explicit`]) and, in [`gf`], by expanding the
//! infinite-product generating function modulo `(t^T, q^Q)`.

pub mod asc;
pub mod gf;

use std::fmt;

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::qnum::{q_binomial, q_factorial, q_falling_ratio, q_int, q_int_i64};

pub use asc::{
    asc_explicit_eval, asc_family, asc_rec, asc_rec_eval, random_asc_points,
    random_rescaling_samples, rescaling_check, AscPoint, RescalingSample,
};
pub use gf::{gf_factorization_check, gf_from_polynomials, gf_truncated, zero_gf_closed_form};

/// The integral parameter `α ∈ {-1, 0, 1, ...}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alpha(i64);

impl Alpha {
    pub const MINUS_ONE: Alpha = Alpha(-1);
    pub const ZERO: Alpha = Alpha(0);

    pub fn new(value: i64) -> Result<Self> {
        if value < -1 {
            return Err(Error::InvalidAlpha(value));
        }
        Ok(Alpha(value))
    }

    #[inline]
    pub fn get(self) -> i64 {
        self.0
    }

    /// `α` as a non-negative integer, for the orthogonal (α ≥ 0) regime.
    pub fn non_negative(self) -> Result<u32> {
        u32::try_from(self.0)
            .map_err(|_| Error::InvalidRange(format!("alpha must be >= 0, got {}", self.0)))
    }
}

impl TryFrom<i64> for Alpha {
    type Error = Error;
    fn try_from(value: i64) -> Result<Self> {
        Alpha::new(value)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A (q,y)-Laguerre polynomial together with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagPoly {
    pub n: u32,
    pub alpha: Alpha,
    pub signless: bool,
    pub poly: MPoly,
}

impl LagPoly {
    /// Coefficient of `x^k`, a polynomial in `y` and `q`.
    pub fn coeff(&self, k: u32) -> MPoly {
        self.poly.coeff_in_var(Var::X, k)
    }

    pub fn into_signless(self) -> LagPoly {
        if self.signless {
            return self;
        }
        LagPoly {
            poly: flip_sign(&self.poly, self.n),
            signless: true,
            ..self
        }
    }
}

/// Diagonal recurrence coefficient `b_m = y[m+α+1]_q + [m]_q`.
pub fn recurrence_b(m: u32, alpha: Alpha) -> MPoly {
    let y = MPoly::var(Var::Y);
    &y * &q_int_i64(i64::from(m) + alpha.get() + 1) + q_int(m)
}

/// Off-diagonal recurrence coefficient `λ_m = y[m]_q[m+α]_q` (zero for `m = 0`).
pub fn recurrence_lambda(m: u32, alpha: Alpha) -> MPoly {
    if m == 0 {
        return MPoly::zero();
    }
    let y = MPoly::var(Var::Y);
    &(&y * &q_int(m)) * &q_int_i64(i64::from(m) + alpha.get())
}

/// The signed polynomials `L_0, ..., L_{n_max}` from the recurrence.
pub fn laguerre_family(n_max: u32, alpha: Alpha) -> Vec<MPoly> {
    let x = MPoly::var(Var::X);
    let mut family = Vec::with_capacity(n_max as usize + 1);
    family.push(MPoly::one());
    let mut prev = MPoly::zero();
    for m in 0..n_max {
        let cur = family.last().expect("nonempty").clone();
        let next = &(&x - &recurrence_b(m, alpha)) * &cur - &recurrence_lambda(m, alpha) * &prev;
        prev = cur;
        family.push(next);
    }
    family
}

/// `(-1)^n p(-x)`: multiplies the `x^k` coefficient by `(-1)^{n-k}`.
pub(crate) fn flip_sign(p: &MPoly, n: u32) -> MPoly {
    p.map_coefficients(|m, c| {
        if (n + m.exp(Var::X)) % 2 == 1 {
            -c
        } else {
            c.clone()
        }
    })
}

/// Signed `L^{(α)}_n(x;y;q)` from the three-term recurrence.
pub fn laguerre_rec(n: u32, alpha: Alpha) -> LagPoly {
    let poly = laguerre_family(n, alpha)
        .pop()
        .expect("family holds n + 1 entries");
    LagPoly {
        n,
        alpha,
        signless: false,
        poly,
    }
}

/// Signless `L^{(α)}_n(x;y|q) = (-1)^n L^{(α)}_n(-x;y;q)`.
pub fn laguerre_signless(n: u32, alpha: Alpha) -> LagPoly {
    laguerre_rec(n, alpha).into_signless()
}

/// Signless polynomials `L_0, ..., L_{n_max}`.
pub fn laguerre_signless_family(n_max: u32, alpha: Alpha) -> Vec<MPoly> {
    laguerre_family(n_max, alpha)
        .iter()
        .enumerate()
        .map(|(n, p)| flip_sign(p, n as u32))
        .collect()
}

/// `ℓ^{(α)}_{n,k}(y;q)`, the coefficient of `x^k` in the signless polynomial.
pub fn coeff_l(n: u32, k: u32, alpha: Alpha) -> MPoly {
    laguerre_signless(n, alpha).coeff(k)
}

/// Signless `L^{(α)}_n(x;y|q)` from the explicit summation
///
/// ```text
/// Σ_k (n!_q / k!_q) [n+α, k+α]_q q^{k(k-n)} y^{n-k} ∏_{j<k} (x + (1 - y q^{-j}) [j]_q).
/// ```
///
/// Writing each factor as `q^{-j}(q^j x + (q^j - y)[j]_q)`, the `k`-th summand
/// carries `q^{-d_k}` with `d_k = k(n-k) + k(k-1)/2`. These negative powers
/// only cancel across summands, so every summand is multiplied by
/// `q^{S - d_k}` with `S = max_k d_k`, the sum is formed in `ℤ[x,y,q]`, and
/// `q^S` is divided out at the end. A leftover term of `q`-degree below `S`
/// is reported as [`Error::NegativeExponentResidue`].
pub fn laguerre_explicit(n: u32, alpha: Alpha) -> Result<LagPoly> {
    if n == 0 {
        // The k = 0 summand would read [α, α]_q, which the out-of-range
        // convention sets to 0 when α = -1.
        return Ok(LagPoly {
            n,
            alpha,
            signless: true,
            poly: MPoly::one(),
        });
    }
    let a = alpha.get();
    let x = MPoly::var(Var::X);
    let y = MPoly::var(Var::Y);
    let deficit = |k: u32| k * (n - k) + k * k.saturating_sub(1) / 2;
    let shift = (0..=n).map(deficit).max().unwrap_or(0);

    let mut total = MPoly::zero();
    let mut product = MPoly::one();
    for k in 0..=n {
        if k > 0 {
            let j = k - 1;
            let qj = MPoly::var_pow(Var::Q, j);
            product = &product * &(&(&qj * &x) + &(&(&qj - &y) * &q_int(j)));
        }
        let binom = q_binomial(i64::from(n) + a, i64::from(k) + a);
        if binom.is_zero() {
            continue;
        }
        let scalar = &q_falling_ratio(n, k) * &binom;
        let prefactor = Monomial::new([0, n - k, shift - deficit(k), 0, 0, 0, 0]);
        total += &(&scalar * &product).shift(&prefactor);
    }
    let poly = total
        .div_var_pow(Var::Q, shift)
        .ok_or(Error::NegativeExponentResidue(shift))?;
    Ok(LagPoly {
        n,
        alpha,
        signless: true,
        poly,
    })
}

/// `[k+1]_y = 1 + y + ... + y^k`.
fn y_int(k: u32) -> MPoly {
    MPoly::from_terms((0..=k).map(|i| (Monomial::var(Var::Y, i), 1)))
}

/// Checks `L_{n+1}^{(-1)} = x Σ_k [n,k]_q k!_q [k+1]_y L_{n-k}^{(-1)}` for the
/// signless `α = -1` polynomials. This is the coefficientwise form of the
/// q-difference equation `D_q L^{(-1)} = x/((1-t)(1-yt)) · L^{(-1)}` for the
/// generating function.
pub fn prop_g_check(n: u32) -> bool {
    let family = laguerre_signless_family(n + 1, Alpha::MINUS_ONE);
    let x = MPoly::var(Var::X);
    let rhs: MPoly = (0..=n)
        .map(|k| {
            let scalar = &(&q_binomial(n.into(), k.into()) * &q_factorial(k)) * &y_int(k);
            &scalar * &family[(n - k) as usize]
        })
        .sum();
    family[(n + 1) as usize] == &x * &rhs
}

/// Checks the connection formula
///
/// ```text
/// L^{(α)}_n = Σ_k [n,k]_q ∏_{j<k} [α-β+j]_q (y q^{β+1})^k L^{(β)}_{n-k}
/// ```
///
/// between signless families, for `-1 <= β <= α`.
pub fn connection_check(n: u32, alpha: Alpha, beta: i64) -> Result<bool> {
    if beta < -1 || beta > alpha.get() {
        return Err(Error::InvalidRange(format!(
            "connection formula needs -1 <= beta <= alpha, got beta={beta}, alpha={alpha}"
        )));
    }
    let beta_alpha = Alpha::new(beta)?;
    let lower = laguerre_signless_family(n, beta_alpha);
    let target = laguerre_signless(n, alpha).poly;
    let gap = alpha.get() - beta;
    let mut rhs = MPoly::zero();
    let mut rising = MPoly::one();
    for k in 0..=n {
        if k > 0 {
            rising = &rising * &q_int_i64(gap + i64::from(k) - 1);
        }
        if rising.is_zero() {
            break;
        }
        let weight = Monomial::new([0, k, k * (beta + 1) as u32, 0, 0, 0, 0]);
        let term = &(&q_binomial(n.into(), k.into()) * &rising) * &lower[(n - k) as usize];
        rhs += &term.shift(&weight);
    }
    Ok(rhs == target)
}
