//! Library side of the `qylag` command line: renderers for the computing
//! subcommands and the verification registry.

mod verify;

use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::laguerre::{coeff_l, laguerre_rec, laguerre_signless, Alpha};
use crate::moments::{
    laguerre_moments, linearization_formula, linearization_via_moments, moments_sfrac, SCoeffs,
};
use crate::mpoly::{Format, MPoly};

pub use verify::{
    run_cases, threads_from_env, verify, Case, Identity, Status, UnknownIdentity,
    VerificationReport, VerifyOptions,
};

fn meta(entries: &[(&str, Value)]) -> Map<String, Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn render_with_meta(p: &MPoly, format: Format, entries: &[(&str, Value)]) -> String {
    match format {
        Format::Json => p.to_json_document(meta(entries)).to_string(),
        other => p.render(other),
    }
}

/// `L_n^{(α)}` (or its signless form) rendered in `format`.
pub fn cmd_poly(n: u32, alpha: Alpha, signless: bool, format: Format) -> String {
    let p = if signless {
        laguerre_signless(n, alpha)
    } else {
        laguerre_rec(n, alpha)
    };
    let entries = [
        ("command", json!("poly")),
        ("n", json!(n)),
        ("alpha", json!(alpha.get())),
        ("signless", json!(signless)),
    ];
    render_with_meta(&p.poly, format, &entries)
}

/// The signless coefficient `ℓ^{(α)}_{n,k}` rendered in `format`.
pub fn cmd_coeff(n: u32, k: u32, alpha: Alpha, format: Format) -> String {
    let entries = [
        ("command", json!("coeff")),
        ("n", json!(n)),
        ("k", json!(k)),
        ("alpha", json!(alpha.get())),
    ];
    render_with_meta(&coeff_l(n, k, alpha), format, &entries)
}

/// `μ_0, ..., μ_N`, one per line, with `β = [α+1]_q` unless `symbolic_beta`.
pub fn cmd_moments(
    n_max: u32,
    alpha: Alpha,
    symbolic_beta: bool,
    format: Format,
) -> Result<String> {
    let table = if symbolic_beta {
        moments_sfrac(n_max, &SCoeffs::laguerre_symbolic(n_max))
    } else {
        alpha.non_negative()?;
        laguerre_moments(n_max, alpha)
    };
    let mu = table.as_slice();
    Ok(match format {
        Format::Json => {
            let mut m = meta(&[("command", json!("moments")), ("N", json!(n_max))]);
            let alpha_value = if symbolic_beta {
                Value::Null
            } else {
                json!(alpha.get())
            };
            m.insert("alpha".into(), alpha_value);
            m.insert("symbolic_beta".into(), json!(symbolic_beta));
            let moments: Vec<Value> = mu.iter().map(MPoly::to_json_terms).collect();
            json!({ "meta": Value::Object(m), "moments": moments }).to_string()
        }
        Format::Latex => mu
            .iter()
            .enumerate()
            .map(|(i, p)| format!("\\mu_{{{i}}} = {}", p.to_latex()))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Plain => mu
            .iter()
            .enumerate()
            .map(|(i, p)| format!("mu_{i} = {}", p.to_plain()))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

/// Outcome of the `linearize` subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearization {
    pub rendered: String,
    /// `Some(agrees)` when the moment route was run as a cross-check.
    pub checked: Option<bool>,
}

/// `L(L_{n1} L_{n2} L_{n3})` from the closed form, optionally compared with
/// the value obtained from the moments.
pub fn cmd_linearize(
    n: [u32; 3],
    alpha: Alpha,
    check: bool,
    format: Format,
) -> Result<Linearization> {
    let a = alpha.non_negative()?;
    let value = linearization_formula(n[0], n[1], n[2], a);
    let checked = check.then(|| linearization_via_moments(n[0], n[1], n[2], a) == value);
    let entries = [
        ("command", json!("linearize")),
        ("n", json!(n)),
        ("alpha", json!(a)),
    ];
    Ok(Linearization {
        rendered: render_with_meta(&value, format, &entries),
        checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al(a: i64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    #[test]
    fn poly_examples() {
        assert_eq!(cmd_poly(1, al(0), false, Format::Plain), "x - y");
        assert_eq!(cmd_poly(0, al(5), false, Format::Plain), "1");
        let json: Value = serde_json::from_str(&cmd_poly(2, al(0), true, Format::Json)).unwrap();
        assert_eq!(json["meta"]["signless"], json!(true));
        let p = MPoly::from_json_terms(&json["poly"]).unwrap();
        assert_eq!(p, laguerre_signless(2, al(0)).poly);
    }

    #[test]
    fn moments_examples() {
        assert_eq!(
            cmd_moments(2, al(0), true, Format::Plain).unwrap(),
            "mu_0 = 1\nmu_1 = y*beta\nmu_2 = y^2*beta^2 + y*beta"
        );
        assert_eq!(
            cmd_moments(0, al(0), false, Format::Plain).unwrap(),
            "mu_0 = 1"
        );
        assert!(cmd_moments(2, Alpha::MINUS_ONE, false, Format::Plain).is_err());
    }

    #[test]
    fn linearize_examples() {
        let one = cmd_linearize([0, 0, 0], al(0), false, Format::Plain).unwrap();
        assert_eq!(
            one,
            Linearization {
                rendered: "1".into(),
                checked: None
            }
        );
        assert_eq!(
            cmd_linearize([1, 1, 0], al(0), false, Format::Plain)
                .unwrap()
                .rendered,
            "y"
        );
        assert_eq!(
            cmd_linearize([2, 2, 2], al(1), true, Format::Plain)
                .unwrap()
                .checked,
            Some(true)
        );
    }
}
