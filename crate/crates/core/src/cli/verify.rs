//! Named identity checks swept over parameter tuples.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::combstat::{
    biane_inverse, biane_phi, config_weight, enumerate_configs, enumerate_histories, history_stats,
    lemma1_check, lemma2_check, moments_bruteforce, perm_stats, permutations, LaguerreHistory,
    Permutation,
};
use crate::laguerre::{
    asc_explicit_eval, asc_family, coeff_l, connection_check, gf_factorization_check,
    gf_from_polynomials, gf_truncated, laguerre_explicit, laguerre_family, laguerre_signless,
    prop_g_check, random_asc_points, random_rescaling_samples, rescaling_check, Alpha,
};
use crate::moments::{
    classical_linearization, contraction_check, functional_l, laguerre_moments,
    linearization_formula, linearization_via_moments, moments_sfrac, orthogonality_norm, SCoeffs,
};
use crate::mpoly::{MPoly, Var};
use crate::qnum::factorial;
use crate::rookmatch::{
    enumerate_rook_configs, foata_strehl_check, matching_bijection_check, matching_identity_check,
    rook_transport_holds, stats_rook,
};

/// Env var capping the verification thread pool.
pub const THREADS_ENV: &str = "QYLAG_THREADS";

/// An identity that `verify` knows how to sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    TheoremKey,
    Lemma1,
    Lemma2,
    Moments,
    Contraction,
    Orthogonality,
    Linearization,
    Rook,
    Matching,
    FoataStrehl,
    Connection,
    PropG,
    Gf,
    Rescaling,
    Biane,
}

impl Identity {
    pub const ALL: [Identity; 15] = [
        Identity::TheoremKey,
        Identity::Lemma1,
        Identity::Lemma2,
        Identity::Moments,
        Identity::Contraction,
        Identity::Orthogonality,
        Identity::Linearization,
        Identity::Rook,
        Identity::Matching,
        Identity::FoataStrehl,
        Identity::Connection,
        Identity::PropG,
        Identity::Gf,
        Identity::Rescaling,
        Identity::Biane,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::TheoremKey => "theorem-key",
            Identity::Lemma1 => "lemma-1",
            Identity::Lemma2 => "lemma-2",
            Identity::Moments => "moments",
            Identity::Contraction => "contraction",
            Identity::Orthogonality => "orthogonality",
            Identity::Linearization => "linearization",
            Identity::Rook => "rook",
            Identity::Matching => "matching",
            Identity::FoataStrehl => "foata-strehl",
            Identity::Connection => "connection",
            Identity::PropG => "prop-g",
            Identity::Gf => "gf",
            Identity::Rescaling => "rescaling",
            Identity::Biane => "biane",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown identity '{0}'")]
pub struct UnknownIdentity(pub String);

impl FromStr for Identity {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Result of checking one identity at one parameter tuple. A failing report
/// always carries a witness.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: Identity,
    pub parameters: Vec<(String, String)>,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn parameter_text(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// One line of text; elapsed time is appended only when `timing` is set
    /// so that default output is reproducible byte for byte.
    pub fn to_line(&self, timing: bool) -> String {
        let mut line = format!(
            "{} {} {}",
            self.status.to_string().to_uppercase(),
            self.identity,
            self.parameter_text()
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!(" witness: {w}"));
        }
        if timing {
            line.push_str(&format!(" ({} ms)", self.elapsed.as_millis()));
        }
        line
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let params: Map<String, Value> = self
            .parameters
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let mut v = json!({
            "identity": self.identity.name(),
            "parameters": params,
            "status": self.status.to_string(),
            "witness": self.witness,
        });
        if timing {
            v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }
}

/// Witness text on failure.
pub type Outcome = Result<(), String>;

/// One parameter tuple of one identity, ready to run.
pub struct Case {
    pub identity: Identity,
    pub parameters: Vec<(String, String)>,
    check: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Case {
    fn new(
        identity: Identity,
        parameters: &[(&str, String)],
        check: impl Fn() -> Outcome + Send + Sync + 'static,
    ) -> Self {
        let parameters = parameters
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        Case {
            identity,
            parameters,
            check: Box::new(check),
        }
    }

    pub fn run(&self) -> VerificationReport {
        let start = Instant::now();
        let outcome = (self.check)();
        let elapsed = start.elapsed();
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        VerificationReport {
            identity: self.identity,
            parameters: self.parameters.clone(),
            status,
            witness,
            elapsed,
        }
    }
}

/// Sweep settings. `n_max` replaces every size ceiling of the chosen
/// identity; without it the defaults below are used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: Option<u32>,
    pub seed: u64,
}

impl VerifyOptions {
    fn ceiling(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }
}

fn al(a: i64) -> Alpha {
    Alpha::new(a).expect("alpha ranges start at -1")
}

fn expect_equal(lhs: &MPoly, rhs: &MPoly) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("difference {}", lhs - rhs))
    }
}

fn expect(holds: bool, what: &str) -> Outcome {
    if holds {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn p(name: &str, value: impl ToString) -> (&str, String) {
    (name, value.to_string())
}

fn seed_for(seed: u64, n: u32, a: i64) -> u64 {
    seed.wrapping_mul(1_000_003)
        .wrapping_add(100 * (a + 2) as u64 + u64::from(n))
}

/// The parameter tuples of `identity`, in report order.
pub fn cases(identity: Identity, opts: &VerifyOptions) -> Vec<Case> {
    let id = identity;
    let mut out = Vec::new();
    match identity {
        Identity::TheoremKey => {
            for a in -1..=2 {
                for n in 0..=opts.ceiling(6) {
                    for k in 0..=n {
                        out.push(Case::new(
                            id,
                            &[p("n", n), p("k", k), p("alpha", a)],
                            move || {
                                let sum: MPoly = enumerate_configs(n, k as usize, al(a))
                                    .map(|c| config_weight(&c))
                                    .sum();
                                expect_equal(&sum, &coeff_l(n, k, al(a)))
                            },
                        ));
                    }
                }
            }
        }
        Identity::Lemma1 => {
            for a in 0..=2u32 {
                for n in 0..=opts.ceiling(5) {
                    out.push(Case::new(id, &[p("n", n), p("alpha", a)], move || {
                        expect(lemma1_check(n, a), "colored permutation sum differs")
                    }));
                }
            }
        }
        Identity::Lemma2 => {
            for n in 0..=opts.ceiling(6) {
                for k in 0..=n {
                    out.push(Case::new(id, &[p("n", n), p("k", k)], move || {
                        expect(lemma2_check(n, k as usize), "list family sum differs")
                    }));
                }
            }
        }
        Identity::Moments => {
            for n in 0..=opts.ceiling(7) {
                out.push(Case::new(id, &[p("n", n)], move || {
                    let table = moments_sfrac(n, &SCoeffs::laguerre_symbolic(n));
                    expect_equal(&moments_bruteforce(n), &table.as_slice()[n as usize])
                }));
            }
        }
        Identity::Contraction => {
            let n_max = opts.ceiling(8);
            for a in 0..=2 {
                out.push(Case::new(id, &[p("N", n_max), p("alpha", a)], move || {
                    expect(
                        contraction_check(n_max, al(a)),
                        "J-fraction and S-fraction moments differ",
                    )
                }));
            }
        }
        Identity::Orthogonality => {
            let top = opts.ceiling(5);
            for a in 0..=2 {
                for n in 0..=top {
                    for m in 0..=top {
                        out.push(Case::new(
                            id,
                            &[p("n", n), p("m", m), p("alpha", a)],
                            move || {
                                let family = laguerre_family(n.max(m), al(a));
                                let table = laguerre_moments(n + m, al(a));
                                let product = &family[n as usize] * &family[m as usize];
                                let lhs =
                                    functional_l(&product, &table).map_err(|e| e.to_string())?;
                                expect_equal(&lhs, &orthogonality_norm(n, m, al(a)))
                            },
                        ));
                    }
                }
            }
        }
        Identity::Linearization => {
            let top = opts.ceiling(3);
            for a in 0..=2u32 {
                for n1 in 0..=top {
                    for n2 in 0..=top {
                        for n3 in 0..=top {
                            let params = [p("n1", n1), p("n2", n2), p("n3", n3), p("alpha", a)];
                            out.push(Case::new(id, &params, move || {
                                linearization_case(n1, n2, n3, a, true)
                            }));
                        }
                    }
                }
            }
            let top = opts.ceiling(4);
            for a in 0..=3u32 {
                for n1 in 0..=top {
                    for n2 in n1..=top {
                        for n3 in n2..=top {
                            let params = [
                                p("n1", n1),
                                p("n2", n2),
                                p("n3", n3),
                                p("alpha", a),
                                p("route", "formula"),
                            ];
                            out.push(Case::new(id, &params, move || {
                                linearization_case(n1, n2, n3, a, false)
                            }));
                        }
                    }
                }
            }
        }
        Identity::Rook => {
            for a in -1..=1 {
                for n in 0..=opts.ceiling(5) {
                    for k in 0..=n {
                        out.push(Case::new(
                            id,
                            &[p("n", n), p("k", k), p("alpha", a)],
                            move || {
                                let rooks = enumerate_rook_configs(n, k as usize, al(a));
                                let sum: MPoly = rooks.iter().map(|r| stats_rook(r).weight()).sum();
                                expect_equal(&sum, &coeff_l(n, k, al(a)))?;
                                match enumerate_configs(n, k as usize, al(a))
                                    .find(|c| !rook_transport_holds(c))
                                {
                                    None => Ok(()),
                                    Some(c) => Err(format!("weight not transported for {:?}", c)),
                                }
                            },
                        ));
                    }
                }
            }
        }
        Identity::Matching => {
            for a in -1..=1 {
                for n in 0..=opts.ceiling(5) {
                    for k in 0..=n {
                        let params = [p("n", n), p("k", k), p("alpha", a), p("part", "bijection")];
                        out.push(Case::new(id, &params, move || {
                            expect(
                                matching_bijection_check(n, k, al(a)),
                                "not a bijection onto matchings",
                            )
                        }));
                    }
                }
            }
            for a in -1..=3 {
                for n in 0..=opts.ceiling(8) {
                    out.push(Case::new(
                        id,
                        &[p("n", n), p("alpha", a), p("part", "polynomial")],
                        move || {
                            expect(
                                matching_identity_check(n, al(a)),
                                "matching polynomial differs",
                            )
                        },
                    ));
                }
            }
        }
        Identity::FoataStrehl => {
            for a in -1..=2 {
                for n in 0..=opts.ceiling(6) {
                    for k in 0..=n {
                        out.push(Case::new(
                            id,
                            &[p("n", n), p("k", k), p("alpha", a)],
                            move || {
                                expect(
                                    foata_strehl_check(n, k, al(a)),
                                    "weighted injection count differs",
                                )
                            },
                        ));
                    }
                }
            }
        }
        Identity::Connection => {
            for a in 0..=2 {
                for b in -1..=a {
                    for n in 0..=opts.ceiling(6) {
                        out.push(Case::new(
                            id,
                            &[p("n", n), p("alpha", a), p("beta", b)],
                            move || {
                                let holds =
                                    connection_check(n, al(a), b).map_err(|e| e.to_string())?;
                                expect(holds, "connection sum differs")
                            },
                        ));
                    }
                }
            }
        }
        Identity::PropG => {
            for n in 0..=opts.ceiling(6) {
                out.push(Case::new(id, &[p("n", n)], move || {
                    expect(prop_g_check(n), "recurrence differs")
                }));
            }
        }
        Identity::Gf => {
            for a in -1..=2 {
                for n in 0..=opts.ceiling(7) {
                    out.push(Case::new(
                        id,
                        &[p("n", n), p("alpha", a), p("part", "explicit")],
                        move || {
                            let explicit =
                                laguerre_explicit(n, al(a)).map_err(|e| e.to_string())?;
                            expect_equal(&explicit.poly, &laguerre_signless(n, al(a)).poly)
                        },
                    ));
                }
            }
            // series are compared modulo (t^{n_max+1}, q^8)
            let t_max = opts.ceiling(5) + 1;
            let q_max = 8;
            for a in -1..=2 {
                let params = [p("mod_t", t_max), p("mod_q", q_max), p("alpha", a)];
                let mut extraction = params.to_vec();
                extraction.push(p("part", "extraction"));
                out.push(Case::new(id, &extraction, move || {
                    expect_equal(
                        &gf_truncated(al(a), t_max, q_max),
                        &gf_from_polynomials(al(a), t_max, q_max),
                    )
                }));
                let mut factor = params.to_vec();
                factor.push(p("part", "factorization"));
                out.push(Case::new(id, &factor, move || {
                    expect(
                        gf_factorization_check(al(a), t_max, q_max),
                        "product over alpha = 0 differs",
                    )
                }));
            }
        }
        Identity::Rescaling => {
            let seed = opts.seed;
            let top = opts.ceiling(6);
            for a in 0..=2 {
                for n in 0..=top {
                    let s = seed_for(seed, n, a);
                    out.push(Case::new(
                        id,
                        &[p("n", n), p("alpha", a), p("samples", 10), p("seed", s)],
                        move || {
                            let samples = random_rescaling_samples(s, 10);
                            expect(
                                rescaling_check(n, al(a), &samples).map_err(|e| e.to_string())?,
                                "values differ",
                            )
                        },
                    ));
                }
            }
            for n in 0..=top {
                let s = seed_for(seed, n, -2);
                out.push(Case::new(
                    id,
                    &[p("n", n), p("points", 20), p("seed", s), p("part", "askey")],
                    move || {
                        let family = asc_family(n);
                        for pt in random_asc_points(s, n, 20) {
                            let explicit = asc_explicit_eval(n, &pt.u, &pt.a, &pt.b, &pt.q)
                                .map_err(|e| e.to_string())?;
                            let rec = family[n as usize]
                                .eval_rat(&pt.assignment())
                                .map_err(|e| e.to_string())?;
                            if explicit != rec {
                                return Err(format!(
                                    "explicit {explicit} vs recurrence {rec} at {pt:?}"
                                ));
                            }
                        }
                        Ok(())
                    },
                ));
            }
        }
        Identity::Biane => {
            out.push(Case::new(
                id,
                &[p("sigma", "4 1 2 7 9 6 5 8 3")],
                biane_example,
            ));
            for n in 0..=opts.ceiling(6) {
                out.push(Case::new(id, &[p("n", n)], move || biane_sweep(n)));
            }
        }
    }
    out
}

fn linearization_case(n1: u32, n2: u32, n3: u32, a: u32, dual_route: bool) -> Outcome {
    let formula = linearization_formula(n1, n2, n3, a);
    if dual_route {
        expect_equal(&formula, &linearization_via_moments(n1, n2, n3, a))?;
    }
    expect(formula.is_nonnegative(), "negative coefficient")?;
    let at_one = formula.specialize(&[(Var::Y, 1), (Var::Q, 1)]);
    let classical = classical_linearization(n1, n2, n3, a);
    if at_one != MPoly::constant(classical.clone()) {
        return Err(format!(
            "y = q = 1 gives {at_one}, classical value {classical}"
        ));
    }
    Ok(())
}

fn biane_example() -> Outcome {
    let sigma = Permutation::new(vec![4, 1, 2, 7, 9, 6, 5, 8, 3]).map_err(|e| e.to_string())?;
    let xi = vec![1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1];
    let expected =
        LaguerreHistory::parse("uu du du ud uu ud dd ud dd", xi).map_err(|e| e.to_string())?;
    let h = biane_phi(&sigma);
    if h != expected {
        return Err(format!("image {h}"));
    }
    expect(
        biane_inverse(&h).ok().as_ref() == Some(&sigma),
        "inverse does not recover sigma",
    )
}

fn biane_sweep(n: u32) -> Outcome {
    let mut images = HashSet::new();
    for sigma in permutations(n) {
        let h = biane_phi(&sigma);
        if biane_inverse(&h).ok().as_ref() != Some(&sigma) {
            return Err(format!("round trip fails at {sigma}"));
        }
        if history_stats(&h) != perm_stats(&sigma) {
            return Err(format!("statistics not transported at {sigma}"));
        }
        images.insert(h);
    }
    let all = enumerate_histories(n);
    if num_bigint::BigInt::from(all.len()) != factorial(n) {
        return Err(format!("{} histories of length {n}", all.len()));
    }
    expect(
        all.into_iter().collect::<HashSet<_>>() == images,
        "image is not the set of all histories",
    )
}

/// The `QYLAG_THREADS` cap, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

/// Runs `cases` on at most `threads` workers; reports keep the input order.
pub fn run_cases(cases: &[Case], threads: Option<usize>) -> Vec<VerificationReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| cases.par_iter().map(Case::run).collect()),
        Err(_) => cases.iter().map(Case::run).collect(),
    }
}

/// Every report for `identity` under `opts`, threads capped by the env var.
pub fn verify(identity: Identity, opts: &VerifyOptions) -> Vec<VerificationReport> {
    run_cases(&cases(identity, opts), threads_from_env())
}
