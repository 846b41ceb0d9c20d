use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{parse_rational, CorrFn, DiffExponent, PolyR, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
    }
}

fn latex_poly(p: &PolyR) -> String {
    let parts: Vec<String> = p
        .terms()
        .map(|(k, c)| match k {
            0 => latex_rational(c),
            1 if c.is_one() => "r".to_string(),
            1 => format!("{} r", latex_rational(c)),
            _ if c.is_one() => format!("r^{{{k}}}"),
            _ => format!("{} r^{{{k}}}", latex_rational(c)),
        })
        .collect();
    parts.join(" + ")
}

impl CorrFn {
    /// Deterministic rendering; slots are printed 1-based.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Latex => self.render_latex(),
            Format::Json => self.to_json().to_string(),
        }
    }

    fn render_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .terms()
            .map(|(d, c)| {
                let mut s = if d.is_one() && c.coeffs().len() == 1 {
                    c.to_string()
                } else {
                    format!("({c})")
                };
                for &(i, j, e) in d.triples() {
                    s.push_str(&format!(" * (z{}-z{})^-{}", i + 1, j + 1, e));
                }
                s
            })
            .collect();
        terms.join(" + ")
    }

    fn render_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .terms()
            .map(|(d, c)| {
                let num = format!("\\left({}\\right)", latex_poly(c));
                if d.is_one() {
                    return num;
                }
                let den: Vec<String> = d
                    .triples()
                    .iter()
                    .map(|&(i, j, e)| format!("(z_{{{}}}-z_{{{}}})^{{{}}}", i + 1, j + 1, e))
                    .collect();
                format!("\\frac{{{num}}}{{{}}}", den.join(""))
            })
            .collect();
        terms.join(" + ")
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(d, c)| {
                let den: Vec<Value> = d
                    .triples()
                    .iter()
                    .map(|&(i, j, e)| json!([i + 1, j + 1, e]))
                    .collect();
                let coef: Vec<Value> = c
                    .terms()
                    .map(|(k, q)| json!([q.to_string(), k]))
                    .collect();
                json!({ "den": den, "coef": coef })
            })
            .collect();
        json!({ "n": self.n(), "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<CorrFn> {
        let bad = |what: &str| Error::Parse(format!("correlation JSON: {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let mut f = CorrFn::zero(n);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let mut triples = Vec::new();
            for p in t["den"].as_array().ok_or_else(|| bad("missing den"))? {
                let get = |k: usize| p.get(k).and_then(Value::as_u64).ok_or_else(|| bad("den entry"));
                let (i, j, e) = (get(0)? as usize, get(1)? as usize, get(2)? as u32);
                if i == 0 || i >= j || j > n {
                    return Err(bad("den pair"));
                }
                triples.push((i - 1, j - 1, e));
            }
            let mut coeffs = Vec::new();
            for c in t["coef"].as_array().ok_or_else(|| bad("missing coef"))? {
                let q = parse_rational(c.get(0).and_then(Value::as_str).ok_or_else(|| bad("coef"))?)?;
                let k = c.get(1).and_then(Value::as_u64).ok_or_else(|| bad("coef degree"))?;
                coeffs.push(PolyR::monomial(q, k as usize));
            }
            let coef = coeffs.iter().fold(PolyR::zero(), |acc, p| &acc + p);
            f.add_term(DiffExponent::from_triples(triples), coef);
        }
        Ok(f)
    }
}

impl fmt::Display for CorrFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    fn sample() -> CorrFn {
        CorrFn::term(
            2,
            DiffExponent::from_triples([(0, 1, 4)]),
            PolyR::monomial(frac(1, 2), 1),
        )
    }

    #[test]
    fn text_grammar() {
        assert_eq!(sample().render(Format::Text), "(1/2*r) * (z1-z2)^-4");
        assert_eq!(CorrFn::zero(3).render(Format::Text), "0");
        assert_eq!(CorrFn::one(0).render(Format::Text), "1");
        let f = CorrFn::term(
            3,
            DiffExponent::from_triples([(0, 2, 2), (0, 1, 2)]),
            PolyR::from_coeffs(vec![rat(1), frac(-1, 3)]),
        );
        assert_eq!(
            f.render(Format::Text),
            "(1 + -1/3*r) * (z1-z2)^-2 * (z1-z3)^-2"
        );
    }

    #[test]
    fn json_schema_and_roundtrip() {
        let j = sample().to_json();
        assert_eq!(
            j.to_string(),
            r#"{"n":2,"terms":[{"coef":[["1/2",1]],"den":[[1,2,4]]}]}"#
        );
        assert_eq!(CorrFn::from_json(&j).unwrap(), sample());
    }

    #[test]
    fn latex() {
        assert_eq!(
            sample().render(Format::Latex),
            "\\frac{\\left(\\frac{1}{2} r\\right)}{(z_{1}-z_{2})^{4}}"
        );
        assert!("xml".parse::<Format>().is_err());
    }
}
