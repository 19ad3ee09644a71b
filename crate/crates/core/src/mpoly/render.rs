//! Canonical text, LaTeX and JSON renderings. Terms always appear in
//! descending graded-lex order, so every rendering is deterministic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use super::{MPoly, Monomial, Var};

/// Output format shared by the CLI and the C ABI.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format '{other}' (expected plain, latex or json)"
            )),
        }
    }
}

fn write_signed_terms(
    p: &MPoly,
    out: &mut String,
    monomial: impl Fn(&Monomial) -> String,
    coeff_sep: &str,
) {
    if p.is_zero() {
        out.push('0');
        return;
    }
    for (i, (m, c)) in p.iter().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&abs.to_string());
            continue;
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push_str(coeff_sep);
        }
        out.push_str(&monomial(m));
    }
}

fn plain_monomial(m: &Monomial) -> String {
    Var::ALL
        .iter()
        .filter(|v| m.exp(**v) > 0)
        .map(|&v| match m.exp(v) {
            1 => v.name().to_string(),
            e => format!("{}^{}", v.name(), e),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn latex_monomial(m: &Monomial) -> String {
    Var::ALL
        .iter()
        .filter(|v| m.exp(**v) > 0)
        .map(|&v| match m.exp(v) {
            1 => v.latex().to_string(),
            e => format!("{}^{{{}}}", v.latex(), e),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl MPoly {
    /// Plain text such as `x^2 + 2*x*y - 3`.
    pub fn to_plain(&self) -> String {
        let mut s = String::new();
        write_signed_terms(self, &mut s, plain_monomial, "*");
        s
    }

    /// Inline LaTeX such as `x^{2} + 2 x y - 3`.
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        write_signed_terms(self, &mut s, latex_monomial, " ");
        s
    }

    /// The term list `[{"coeff": "...", "exps": [7 ints]}, ...]`.
    pub fn to_json_terms(&self) -> Value {
        Value::Array(
            self.iter()
                .rev()
                .map(|(m, c)| json!({ "coeff": c.to_string(), "exps": m.exps().to_vec() }))
                .collect(),
        )
    }

    /// The document `{"meta": {...}, "poly": [...]}`.
    pub fn to_json_document(&self, meta: Map<String, Value>) -> Value {
        json!({ "meta": Value::Object(meta), "poly": self.to_json_terms() })
    }

    /// Parses the term list produced by [`MPoly::to_json_terms`].
    pub fn from_json_terms(value: &Value) -> Option<MPoly> {
        let mut p = MPoly::zero();
        for rec in value.as_array()? {
            let coeff: BigInt = rec.get("coeff")?.as_str()?.parse().ok()?;
            let exps = rec.get("exps")?.as_array()?;
            if exps.len() != super::NVARS {
                return None;
            }
            let mut e = [0u32; super::NVARS];
            for (slot, v) in e.iter_mut().zip(exps) {
                *slot = u32::try_from(v.as_u64()?).ok()?;
            }
            p.add_term(Monomial::new(e), coeff);
        }
        Some(p)
    }

    /// Renders in `format`; JSON output carries an empty `meta` object.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.to_plain(),
            Format::Latex => self.to_latex(),
            Format::Json => self.to_json_document(Map::new()).to_string(),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(var: Var) -> MPoly {
        MPoly::var(var)
    }

    #[test]
    fn plain_rendering() {
        assert_eq!(MPoly::zero().to_plain(), "0");
        assert_eq!((v(Var::X) - v(Var::Y)).to_plain(), "x - y");
        let p = MPoly::constant(2) * v(Var::Y) + v(Var::Q) * v(Var::Y) + MPoly::one();
        assert_eq!(p.to_plain(), "y*q + 2*y + 1");
        assert_eq!(
            (-v(Var::Beta)).pow(3, Default::default()).to_plain(),
            "-beta^3"
        );
    }

    #[test]
    fn latex_rendering() {
        let p = v(Var::Beta) * v(Var::Y) * v(Var::Y) - MPoly::constant(3) * v(Var::Q);
        assert_eq!(p.to_latex(), "y^{2} \\beta - 3 q");
    }

    #[test]
    fn json_rendering_round_trips() {
        let p = MPoly::constant(-12) * v(Var::X) * v(Var::T) + MPoly::constant(7);
        let terms = p.to_json_terms();
        assert_eq!(
            terms.to_string(),
            r#"[{"coeff":"-12","exps":[1,0,0,0,1,0,0]},{"coeff":"7","exps":[0,0,0,0,0,0,0]}]"#
        );
        assert_eq!(MPoly::from_json_terms(&terms), Some(p));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<Format>(), Ok(Format::Json));
        assert!("xml".parse::<Format>().is_err());
    }
}
