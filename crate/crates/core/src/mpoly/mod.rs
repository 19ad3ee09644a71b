//! Exact sparse multivariate polynomials over the integers.
//!
//! Every polynomial lives in the fixed ring `ℤ[x, y, q, β, t, a, b]`. Exponent
//! vectors are dense length-7 arrays, and terms are kept in a `BTreeMap` keyed
//! by [`Monomial`], whose ordering is graded lexicographic in the variable
//! order above. Zero coefficients are never stored, so the zero polynomial is
//! the empty map and structural equality is mathematical equality.
//!
//! Arithmetic can optionally run under a [`TruncationPolicy`], which drops
//! every monomial whose `q`- or `t`-exponent reaches a bound. This turns the
//! ring into `ℤ[x, y, β, a, b][q, t] / (q^Q, t^T)` and makes formal power
//! series such as infinite `q`-Pochhammer products computable.

mod render;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use render::Format;

use crate::error::{Error, Result};

/// Number of variables in the fixed ring.
pub const NVARS: usize = 7;

/// Exact rational numbers used as evaluation points.
pub type Rat = BigRational;

/// A variable of the fixed polynomial ring, in ring order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Q = 2,
    Beta = 3,
    T = 4,
    A = 5,
    B = 6,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Q, Var::Beta, Var::T, Var::A, Var::B];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// ASCII name used by the plain renderer and the CLI.
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Q => "q",
            Var::Beta => "beta",
            Var::T => "t",
            Var::A => "a",
            Var::B => "b",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::Beta => "\\beta",
            v => v.name(),
        }
    }

    /// Parses `x`, `y`, `q`, `beta` (or `β`), `t`, `a`, `b`.
    pub fn from_name(name: &str) -> Option<Var> {
        Some(match name {
            "x" => Var::X,
            "y" => Var::Y,
            "q" => Var::Q,
            "beta" | "β" => Var::Beta,
            "t" => Var::T,
            "a" => Var::A,
            "b" => Var::B,
            _ => return None,
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A power product `x^e0 y^e1 q^e2 β^e3 t^e4 a^e5 b^e6`.
///
/// Ordered graded-lexicographically: first by total degree, then
/// lexicographically on the exponent vector in ring order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(exps: [u32; NVARS]) -> Self {
        Monomial(exps)
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial(exps)
    }

    #[inline]
    pub fn exps(&self) -> &[u32; NVARS] {
        &self.0
    }

    #[inline]
    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: u32) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    fn times(&self, other: &Monomial) -> Monomial {
        let mut exps = self.0;
        for (e, o) in exps.iter_mut().zip(other.0.iter()) {
            *e += *o;
        }
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Optional `q`- and `t`-degree bounds applied eagerly after every operation.
///
/// A bound `Some(d)` drops every monomial whose exponent is `>= d`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct TruncationPolicy {
    pub max_q_degree: Option<u32>,
    pub max_t_degree: Option<u32>,
}

impl TruncationPolicy {
    pub const NONE: TruncationPolicy = TruncationPolicy {
        max_q_degree: None,
        max_t_degree: None,
    };

    pub fn q(max_q_degree: u32) -> Self {
        TruncationPolicy {
            max_q_degree: Some(max_q_degree),
            max_t_degree: None,
        }
    }

    pub fn t(max_t_degree: u32) -> Self {
        TruncationPolicy {
            max_q_degree: None,
            max_t_degree: Some(max_t_degree),
        }
    }

    pub fn qt(max_q_degree: u32, max_t_degree: u32) -> Self {
        TruncationPolicy {
            max_q_degree: Some(max_q_degree),
            max_t_degree: Some(max_t_degree),
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.max_q_degree.is_some() || self.max_t_degree.is_some()
    }

    #[inline]
    pub fn keeps(&self, m: &Monomial) -> bool {
        self.max_q_degree.is_none_or(|d| m.exp(Var::Q) < d)
            && self.max_t_degree.is_none_or(|d| m.exp(Var::T) < d)
    }

    /// True when some power of `m` is eventually dropped by this policy.
    fn shrinks(&self, m: &Monomial) -> bool {
        (self.max_q_degree.is_some() && m.exp(Var::Q) > 0)
            || (self.max_t_degree.is_some() && m.exp(Var::T) > 0)
    }
}

/// A polynomial in `ℤ[x, y, q, β, t, a, b]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), 1)
    }

    /// `v^e`.
    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::term(Monomial::var(v, e), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = MPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::ONE)
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Highest exponent of `v` among the terms (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Lowest exponent of `v` among the terms, `None` for zero.
    pub fn min_degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Drops the monomials rejected by `policy`.
    pub fn truncate(mut self, policy: TruncationPolicy) -> Self {
        if policy.is_bounded() {
            self.terms.retain(|m, _| policy.keeps(m));
        }
        self
    }

    pub fn add_trunc(&self, other: &MPoly, policy: TruncationPolicy) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            if policy.keeps(m) {
                out.add_term(*m, c.clone());
            }
        }
        out.truncate(policy)
    }

    pub fn mul_trunc(&self, other: &MPoly, policy: TruncationPolicy) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.times(m2);
                if !policy.keeps(&m) {
                    continue;
                }
                *acc.entry(m).or_default() += c1 * c2;
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, e: u32, policy: TruncationPolicy) -> MPoly {
        let mut result = MPoly::one().truncate(policy);
        let mut base = self.clone().truncate(policy);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_trunc(&base, policy);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_trunc(&base, policy);
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    /// Multiplies by the monomial `m`.
    pub fn shift(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.times(m), c.clone()))
                .collect(),
        }
    }

    /// Divides by `v^e`, or returns `None` if some term has a smaller
    /// exponent of `v`.
    pub fn div_var_pow(&self, v: Var, e: u32) -> Option<MPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let have = m.exp(v);
            if have < e {
                return None;
            }
            terms.insert(m.with_exp(v, have - e), c.clone());
        }
        Some(MPoly { terms })
    }

    /// The polynomial multiplying `v^k`, with `v` removed.
    pub fn coeff_in_var(&self, v: Var, k: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Replaces every occurrence of `v` by `value` and expands.
    pub fn substitute(&self, v: Var, value: &MPoly) -> Result<MPoly> {
        if value.mentions(v) {
            return Err(Error::SubstitutionCycle(v));
        }
        let top = self.degree_in(v);
        let mut out = MPoly::zero();
        let mut power = MPoly::one();
        for e in 0..=top {
            if e > 0 {
                power = &power * value;
            }
            let part = self.coeff_in_var(v, e);
            if !part.is_zero() {
                out += &(&part * &power);
            }
        }
        Ok(out)
    }

    /// Substitutes several variables at once by integer constants.
    pub fn specialize(&self, values: &[(Var, i64)]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = *m;
            for &(v, val) in values {
                let e = mono.exp(v);
                if e > 0 {
                    coeff *= num_traits::pow(BigInt::from(val), e as usize);
                    mono = mono.with_exp(v, 0);
                }
            }
            out.add_term(mono, coeff);
        }
        out
    }

    /// Exact rational value under `assignment`, which must cover every
    /// variable that occurs.
    pub fn eval_rat(&self, assignment: &HashMap<Var, Rat>) -> Result<Rat> {
        let mut powers: HashMap<(Var, u32), Rat> = HashMap::new();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = Rat::from_integer(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let base = assignment.get(&v).ok_or(Error::MissingVariable(v))?;
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| num_traits::pow(base.clone(), e as usize));
                term *= &*p;
            }
            total += term;
        }
        Ok(total)
    }

    /// True iff every stored coefficient is positive.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Inverse of `self` as a formal series truncated by `policy`.
    ///
    /// The constant term must be 1, and every other monomial must carry a
    /// positive power of a bounded variable so that the geometric series
    /// terminates.
    pub fn series_inverse(&self, policy: TruncationPolicy) -> Result<MPoly> {
        if !policy.is_bounded() {
            return Err(Error::NoTruncation);
        }
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::NotAUnit(c0.to_string()));
        }
        // self = 1 - tail, so self^{-1} = 1 + tail + tail^2 + ...
        let tail = (MPoly::one() - self).truncate(policy);
        if let Some((m, _)) = tail.terms.iter().find(|(m, _)| !policy.shrinks(m)) {
            return Err(Error::NonTruncatingInverse(MPoly::term(*m, 1).to_string()));
        }
        let one = MPoly::one().truncate(policy);
        let mut inv = one.clone();
        loop {
            let next = one.add_trunc(&tail.mul_trunc(&inv, policy), policy);
            if next == inv {
                return Ok(inv);
            }
            inv = next;
        }
    }

    /// Applies `f` to every coefficient, keeping the nonzero results.
    pub fn map_coefficients(&self, f: impl Fn(&Monomial, &BigInt) -> BigInt) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f(m, c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

/// `p + r` under `policy`.
pub fn add(p: &MPoly, r: &MPoly, policy: TruncationPolicy) -> MPoly {
    p.add_trunc(r, policy)
}

/// `p · r` under `policy`.
pub fn mul(p: &MPoly, r: &MPoly, policy: TruncationPolicy) -> MPoly {
    p.mul_trunc(r, policy)
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl MulAssign<&MPoly> for MPoly {
    fn mul_assign(&mut self, rhs: &MPoly) {
        *self = self.mul_trunc(rhs, TruncationPolicy::NONE);
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_trunc(rhs, TruncationPolicy::NONE)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> Self {
        let mut acc = MPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> Self {
        let mut acc = MPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
