use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use qylag::combstat::{
    biane_inverse, biane_phi, config_weight, config_words, enumerate_configs, history_stats, inv,
    perm_stats, Permutation,
};
use qylag::laguerre::{coeff_l, laguerre_rec, laguerre_signless};
use qylag::moments::{functional_l, laguerre_moments};
use qylag::qnum::{binomial, factorial, q_binomial, q_factorial, q_int, q_multinomial};
use qylag::rookmatch::{phi_config_to_rook, rook_to_config, stats_rook};
use qylag::{Alpha, MPoly, Monomial, Rat, TruncationPolicy, Var};

const SMALL_VARS: [Var; 3] = [Var::X, Var::Y, Var::Q];

fn small_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(([0u32..=3, 0u32..=3, 0u32..=3], -9i64..=9), 0..6).prop_map(|terms| {
        MPoly::from_terms(terms.into_iter().map(|([ex, ey, eq], c)| {
            let m = Monomial::var(Var::X, ex)
                .with_exp(Var::Y, ey)
                .with_exp(Var::Q, eq);
            (m, c)
        }))
    })
}

fn rational() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn assignment() -> impl Strategy<Value = HashMap<Var, Rat>> {
    prop::array::uniform3(rational()).prop_map(|vals| SMALL_VARS.into_iter().zip(vals).collect())
}

fn alpha_in(lo: i64, hi: i64) -> impl Strategy<Value = Alpha> {
    (lo..=hi).prop_map(|a| Alpha::new(a).unwrap())
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::new(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in small_poly(), r in small_poly(), s in small_poly()) {
        prop_assert_eq!(&(&p + &r) + &s, &p + &(&r + &s));
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
        prop_assert_eq!(&p * &r, &r * &p);
        prop_assert_eq!(&(&p - &p), &MPoly::zero());
    }

    #[test]
    fn evaluation_is_multiplicative(p in small_poly(), r in small_poly(), a in assignment()) {
        let lhs = (&p * &r).eval_rat(&a).unwrap();
        prop_assert_eq!(lhs, p.eval_rat(&a).unwrap() * r.eval_rat(&a).unwrap());
    }

    #[test]
    fn integer_substitution_matches_evaluation(p in small_poly(), vals in prop::array::uniform3(-5i64..=5)) {
        let mut numeric = p.clone();
        let mut a = HashMap::new();
        for (v, c) in SMALL_VARS.into_iter().zip(vals) {
            numeric = numeric.substitute(v, &MPoly::constant(c)).unwrap();
            a.insert(v, Rat::from_integer(c.into()));
        }
        prop_assert_eq!(Rat::from_integer(numeric.constant_term()), p.eval_rat(&a).unwrap());
        prop_assert!(numeric.len() <= 1);
    }

    #[test]
    fn series_inverse_is_inverse(tail in small_poly(), q_max in 1u32..6) {
        // force a unit: drop the constant term of the tail and add 1
        let tail = tail.map_coefficients(|m, c| if m.is_one() { BigInt::from(0) } else { c.clone() });
        let tail = tail.shift(&Monomial::var(Var::Q, 1));
        let unit = MPoly::one() + tail;
        let policy = TruncationPolicy::q(q_max);
        let inverse = unit.series_inverse(policy).unwrap();
        prop_assert_eq!(unit.mul_trunc(&inverse, policy), MPoly::one());
    }

    #[test]
    fn json_round_trip(p in small_poly()) {
        prop_assert_eq!(MPoly::from_json_terms(&p.to_json_terms()), Some(p));
    }

    #[test]
    fn q_binomial_facts(n in 0u32..=12, k_frac in 0.0f64..=1.0) {
        let k = (f64::from(n) * k_frac).round() as u32;
        let qb = q_binomial(n.into(), k.into());
        prop_assert_eq!(qb.specialize(&[(Var::Q, 1)]).constant_term(), binomial(n.into(), k.into()));
        prop_assert_eq!(&qb, &q_binomial(n.into(), (n - k).into()));
        prop_assert_eq!(&(&qb * &q_factorial(k)) * &q_factorial(n - k), q_factorial(n));
        prop_assert!(qb.iter().all(|(_, c)| *c > BigInt::from(0)));
    }

    #[test]
    fn q_multinomial_facts(parts in prop::array::uniform4(0u32..=4)) {
        let m = q_multinomial(&parts);
        let denominator: MPoly = parts.iter().map(|&p| q_factorial(p)).product();
        prop_assert_eq!(&m * &denominator, q_factorial(parts.iter().sum()));
        prop_assert!(m.iter().all(|(_, c)| *c > BigInt::from(0)));
    }

    #[test]
    fn coefficients_are_nonnegative_and_classical(n in 0u32..=8, k_frac in 0.0f64..=1.0, alpha in alpha_in(-1, 3)) {
        let k = (f64::from(n) * k_frac).round() as u32;
        let c = coeff_l(n, k, alpha);
        prop_assert!(c.is_nonnegative());
        let choose = if k == n { BigInt::one() } else { binomial(i64::from(n) + alpha.get(), i64::from(n - k)) };
        let classical = factorial(n) / factorial(k) * choose;
        prop_assert_eq!(c.specialize(&[(Var::Y, 1), (Var::Q, 1)]).constant_term(), classical);
    }

    #[test]
    fn monic_with_product_constant_term(n in 0u32..=7, alpha in alpha_in(0, 3)) {
        let p = laguerre_rec(n, alpha).poly;
        prop_assert_eq!(p.degree_in(Var::X), n);
        prop_assert_eq!(p.coeff_in_var(Var::X, n), MPoly::one());
        let a = alpha.get() as u32;
        let product: MPoly = (1..=n).map(|j| q_int(a + j)).product();
        let mut expect = product.shift(&Monomial::var(Var::Y, n));
        if n % 2 == 1 {
            expect = -expect;
        }
        prop_assert_eq!(p.coeff_in_var(Var::X, 0), expect);
        prop_assert!(laguerre_signless(n, alpha).poly.coeff_in_var(Var::X, 0).is_nonnegative());
    }

    #[test]
    fn functional_kills_lower_powers(n in 1u32..=5, m_frac in 0.0f64..1.0, alpha in alpha_in(0, 2)) {
        let m = (f64::from(n) * m_frac).floor() as u32;
        let table = laguerre_moments(n + m, alpha);
        let product = laguerre_rec(n, alpha).poly.shift(&Monomial::var(Var::X, m));
        prop_assert_eq!(functional_l(&product, &table).unwrap(), MPoly::zero());
    }

    #[test]
    fn history_round_trip(sigma in permutation(9)) {
        let h = biane_phi(&sigma);
        prop_assert_eq!(biane_inverse(&h).unwrap(), sigma.clone());
        prop_assert_eq!(history_stats(&h), perm_stats(&sigma));
    }

    #[test]
    fn rook_image_carries_the_weight(n in 0u32..=5, k_frac in 0.0f64..=1.0, alpha in alpha_in(-1, 1), pick in any::<prop::sample::Index>()) {
        let k = (f64::from(n) * k_frac).round() as usize;
        let configs: Vec<_> = enumerate_configs(n, k, alpha).collect();
        prop_assume!(!configs.is_empty());
        let c = &configs[pick.index(configs.len())];
        let rook = phi_config_to_rook(c);
        let stats = stats_rook(&rook);
        let w = config_words(c);
        let rl = c.lambda().rl() as u32;
        let joined: Vec<u32> = w.sigma_word.iter().chain(&w.lambda_word).copied().collect();
        prop_assert_eq!(stats.cw + stats.ind, w.sigma_word.len() as u32 + rl);
        prop_assert_eq!(stats.inv + stats.cd - stats.ind, inv(&joined) as u32 - rl + inv(&w.binary_word) as u32);
        prop_assert_eq!(stats.weight(), config_weight(c));
        prop_assert_eq!(&rook_to_config(&rook).unwrap(), c);
    }
}
