//! Al-Salam–Chihara polynomials `Q_n(x;a,b|q)` and the rescaling that turns
//! them into the signless (q,y)-Laguerre polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Monomial, Rat, Var};

use super::{laguerre_signless, Alpha};

/// `Q_0, ..., Q_{n_max}` as polynomials in `x, a, b, q`.
pub fn asc_family(n_max: u32) -> Vec<MPoly> {
    let two_x = MPoly::term(Monomial::var(Var::X, 1), 2);
    let a_plus_b = MPoly::var(Var::A) + MPoly::var(Var::B);
    let ab = MPoly::term(Monomial::var(Var::A, 1).with_exp(Var::B, 1), 1);
    let mut family = vec![MPoly::one()];
    let mut prev = MPoly::zero();
    for m in 0..n_max {
        let cur = family.last().expect("nonempty").clone();
        let qm = Monomial::var(Var::Q, m);
        let mut next = &(&two_x - &a_plus_b.shift(&qm)) * &cur;
        if m > 0 {
            let left = MPoly::one() - MPoly::term(qm, 1);
            let right = MPoly::one() - ab.shift(&Monomial::var(Var::Q, m - 1));
            next -= &(&(&left * &right) * &prev);
        }
        prev = cur;
        family.push(next);
    }
    family
}

/// `Q_n(x;a,b|q)` from the three-term recurrence.
pub fn asc_rec(n: u32) -> MPoly {
    asc_family(n).pop().expect("family holds n + 1 entries")
}

/// `Q_n` at a rational point, by running the recurrence on numbers.
pub fn asc_rec_eval(n: u32, x: &Rat, a: &Rat, b: &Rat, q: &Rat) -> Rat {
    let two = Rat::from_integer(BigInt::from(2));
    let (mut prev, mut cur) = (Rat::zero(), Rat::one());
    let mut qm = Rat::one();
    for m in 0..n {
        let mut next = (&two * x - (a + b) * &qm) * &cur;
        if m > 0 {
            let qm1 = &qm / q;
            next -= (Rat::one() - &qm) * (Rat::one() - a * b * qm1) * &prev;
        }
        prev = cur;
        cur = next;
        qm *= q;
    }
    cur
}

/// `(z; q)_k` for rational `z` and `q`.
fn poch(z: &Rat, q: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut zq = z.clone();
    for _ in 0..k {
        acc *= Rat::one() - &zq;
        zq *= q;
    }
    acc
}

fn singular(what: &str) -> Error {
    Error::SingularEvaluationPoint(what.to_string())
}

/// `Q_n` at `x = (u + 1/u)/2` from the terminating basic hypergeometric sum
///
/// ```text
/// (ab;q)_n / a^n · Σ_k (q^{-n};q)_k (au;q)_k (a/u;q)_k / ((ab;q)_k (q;q)_k) · q^k.
/// ```
pub fn asc_explicit_eval(n: u32, u: &Rat, a: &Rat, b: &Rat, q: &Rat) -> Result<Rat> {
    if u.is_zero() {
        return Err(singular("u = 0"));
    }
    if a.is_zero() {
        return Err(singular("a = 0"));
    }
    if q.is_zero() {
        return Err(singular("q = 0"));
    }
    let ab = a * b;
    if (1..=n).any(|k| poch(q, q, k).is_zero()) {
        return Err(singular("(q;q)_k vanishes"));
    }
    if (1..=n).any(|k| poch(&ab, q, k).is_zero()) {
        return Err(singular("(ab;q)_k vanishes"));
    }
    let q_inv_n = num_traits::pow(q.recip(), n as usize);
    let (au, a_over_u) = (a * u, a / u);
    let mut sum = Rat::zero();
    let mut qk = Rat::one();
    for k in 0..=n {
        let num = poch(&q_inv_n, q, k) * poch(&au, q, k) * poch(&a_over_u, q, k);
        let den = poch(&ab, q, k) * poch(q, q, k);
        sum += num / den * &qk;
        qk *= q;
    }
    Ok(poch(&ab, q, n) / num_traits::pow(a.clone(), n as usize) * sum)
}

/// One evaluation point `(u, a, b, q)` for the Al-Salam–Chihara formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscPoint {
    pub u: Rat,
    pub a: Rat,
    pub b: Rat,
    pub q: Rat,
}

impl AscPoint {
    /// `x = (u + 1/u)/2`.
    pub fn x(&self) -> Rat {
        (&self.u + self.u.recip()) / Rat::from_integer(BigInt::from(2))
    }

    pub fn assignment(&self) -> HashMap<Var, Rat> {
        HashMap::from([
            (Var::X, self.x()),
            (Var::A, self.a.clone()),
            (Var::B, self.b.clone()),
            (Var::Q, self.q.clone()),
        ])
    }
}

/// One sample `(s, q, x)` for the rescaling identity, with `y = s²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RescalingSample {
    pub s: Rat,
    pub q: Rat,
    pub x: Rat,
}

fn random_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rat::new(BigInt::from(num), BigInt::from(den))
}

fn is_unit_magnitude(q: &Rat) -> bool {
    let one = Rat::one();
    *q == one || *q == -one
}

/// `count` distinct random points at which [`asc_explicit_eval`] is defined
/// for every degree up to `n`.
pub fn random_asc_points(seed: u64, n: u32, count: usize) -> Vec<AscPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<AscPoint> = Vec::with_capacity(count);
    while out.len() < count {
        let p = AscPoint {
            u: random_rat(&mut rng, 12),
            a: random_rat(&mut rng, 12),
            b: random_rat(&mut rng, 12),
            q: random_rat(&mut rng, 12),
        };
        let ab = &p.a * &p.b;
        let bad = p.u.is_zero()
            || p.a.is_zero()
            || p.q.is_zero()
            || is_unit_magnitude(&p.q)
            || (1..=n).any(|k| poch(&ab, &p.q, k).is_zero())
            || out.contains(&p);
        if !bad {
            out.push(p);
        }
    }
    out
}

/// `count` distinct random samples with `s ≠ 0` and `q ∉ {0, 1, -1}`.
pub fn random_rescaling_samples(seed: u64, count: usize) -> Vec<RescalingSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<RescalingSample> = Vec::with_capacity(count);
    while out.len() < count {
        let sample = RescalingSample {
            s: random_rat(&mut rng, 40),
            q: random_rat(&mut rng, 40),
            x: random_rat(&mut rng, 40),
        };
        if sample.s.is_zero()
            || sample.q.is_zero()
            || is_unit_magnitude(&sample.q)
            || out.contains(&sample)
        {
            continue;
        }
        out.push(sample);
    }
    out
}

/// Checks, at each sample, that
///
/// ```text
/// L^{(α)}_n(x; s² | q) = (s/(1-q))^n · Q_n(((1-q)x + s² + 1)/(2s); 1/s, s q^{α+1} | q).
/// ```
///
/// Writing `y = s²` keeps every square root rational. The left side is the
/// recurrence polynomial evaluated symbolically; the right side runs the
/// Al-Salam–Chihara recurrence on numbers.
///
/// This is a randomized certificate, not a proof. After multiplying out
/// `(1-q)^n`, `s^n` and the powers of `s` from `a = 1/s`, the difference of
/// the two sides is a polynomial in `(s, q, x)` whose total degree grows like
/// `n(n + α)`. A nonzero polynomial of total degree `D` vanishes at a
/// uniformly random point of a grid of side `M` with probability at most
/// `D / M`, so each sample independently bounds the chance of a false pass,
/// and the samples drawn by [`random_rescaling_samples`] use a grid with
/// `M` in the thousands.
pub fn rescaling_check(n: u32, alpha: Alpha, samples: &[RescalingSample]) -> Result<bool> {
    let signless = laguerre_signless(n, alpha).poly;
    let two = Rat::from_integer(BigInt::from(2));
    for RescalingSample { s, q, x } in samples {
        if s.is_zero() {
            return Err(singular("s = 0"));
        }
        if q.is_zero() || q.is_one() {
            return Err(singular("q must avoid 0 and 1"));
        }
        let y = s * s;
        let lhs = signless.eval_rat(&HashMap::from([
            (Var::X, x.clone()),
            (Var::Y, y.clone()),
            (Var::Q, q.clone()),
        ]))?;
        let one_minus_q = Rat::one() - q;
        let arg = ((&one_minus_q * x) + &y + Rat::one()) / (&two * s);
        let a = s.recip();
        let b = s * num_traits::pow(q.clone(), (alpha.get() + 1) as usize);
        let scale = num_traits::pow(s / &one_minus_q, n as usize);
        let rhs = scale * asc_rec_eval(n, &arg, &a, &b, q);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
