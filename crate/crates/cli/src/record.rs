//! Machine-readable result records.
//!
//! Integers are carried as decimal strings. Powers of `q` are stored in units of
//! `1/6` (`q_times_6`); every result this tool emits has `q_times_6` divisible
//! by 6.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Context};
use detcount::{BigInt, LaurentPoly, Monomial};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub mu: u32,
    pub u: u32,
    pub q_times_6: i32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ResultValue {
    Integer(String),
    Polynomial(Vec<Term>),
    Sequence(Vec<String>),
    /// Named fields, e.g. the pieces of a growth estimate.
    Fields(BTreeMap<String, String>),
    Table(Vec<BTreeMap<String, String>>),
    Empty,
}

impl ResultValue {
    pub fn integer(v: &BigInt) -> Self {
        ResultValue::Integer(v.to_string())
    }

    pub fn polynomial(p: &LaurentPoly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| Term { mu: m.mu, u: m.u, q_times_6: m.s, coeff: c.to_string() })
            .collect();
        ResultValue::Polynomial(terms)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Ok,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
}

impl CrossCheck {
    pub fn compare<T: PartialEq + std::fmt::Display>(name: &str, got: &T, want: &T) -> Self {
        let (status, details) = if got == want {
            (CheckStatus::Ok, format!("{got}"))
        } else {
            (CheckStatus::Mismatch, format!("{got} != {want}"))
        };
        CrossCheck { name: name.into(), status, details }
    }

    pub fn skipped(name: &str, details: impl Into<String>) -> Self {
        CrossCheck { name: name.into(), status: CheckStatus::Skipped, details: details.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: ResultValue,
    pub cross_checks: Vec<CrossCheck>,
    pub timing_us: u64,
}

fn check_decimal(s: &str, what: &str) -> anyhow::Result<()> {
    s.parse::<BigInt>()
        .with_context(|| format!("{what}: {s:?} is not a decimal integer"))?;
    Ok(())
}

impl OutputRecord {
    pub fn failed(&self) -> bool {
        self.cross_checks.iter().any(|c| c.status == CheckStatus::Mismatch)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    /// Parses one record and checks the string-encoded integers and the
    /// term order.
    pub fn from_json(s: &str) -> anyhow::Result<Self> {
        let rec: OutputRecord = serde_json::from_str(s).context("malformed output record")?;
        match &rec.result {
            ResultValue::Integer(v) => check_decimal(v, "result")?,
            ResultValue::Sequence(vs) => {
                for v in vs {
                    check_decimal(v, "sequence entry")?;
                }
            }
            ResultValue::Polynomial(terms) => {
                for t in terms {
                    check_decimal(&t.coeff, "coefficient")?;
                }
                let key = |t: &Term| (t.mu, t.u, t.q_times_6);
                if terms.windows(2).any(|w| key(&w[0]) >= key(&w[1])) {
                    bail!("polynomial terms are not strictly sorted by (mu, u, q_times_6)");
                }
            }
            _ => {}
        }
        Ok(rec)
    }

    /// Newline-delimited records; blank lines are ignored.
    pub fn from_json_lines(s: &str) -> anyhow::Result<Vec<Self>> {
        s.lines()
            .filter(|l| !l.trim().is_empty())
            .map(OutputRecord::from_json)
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        let _ = writeln!(out, "{} {}", self.command, params.join(" "));
        match &self.result {
            ResultValue::Integer(v) => {
                let _ = writeln!(out, "  result: {v}");
            }
            ResultValue::Polynomial(terms) => {
                let _ = writeln!(out, "  result: {}", terms_to_poly(terms));
            }
            ResultValue::Sequence(vs) => {
                let _ = writeln!(out, "  result: {}", vs.join(", "));
            }
            ResultValue::Fields(fields) => {
                for (k, v) in fields {
                    let _ = writeln!(out, "  {k}: {v}");
                }
            }
            ResultValue::Table(rows) => {
                for row in rows {
                    let cells: Vec<String> = row.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(out, "  {}", cells.join(" "));
                }
            }
            ResultValue::Empty => {}
        }
        for c in &self.cross_checks {
            let status = match c.status {
                CheckStatus::Ok => "ok",
                CheckStatus::Mismatch => "MISMATCH",
                CheckStatus::Skipped => "skipped",
            };
            let _ = writeln!(out, "  check {}: {status} ({})", c.name, c.details);
        }
        let _ = writeln!(out, "  time: {} us", self.timing_us);
        out
    }
}

/// Reassembles a polynomial for display; unparsable coefficients become 0.
pub fn terms_to_poly(terms: &[Term]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|t| {
        (Monomial::new(t.mu, t.u, t.q_times_6), t.coeff.parse::<BigInt>().unwrap_or_default())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> OutputRecord {
        let p: LaurentPoly = "1 + 18*mu + mu^2".parse().unwrap();
        OutputRecord {
            command: "hexagon".into(),
            parameters: [("a".to_string(), Value::from(2))].into_iter().collect(),
            result: ResultValue::polynomial(&p),
            cross_checks: vec![CrossCheck::compare("product", &20, &20)],
            timing_us: 17,
        }
    }

    #[test]
    fn json_shape() {
        let v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["result"]["kind"], "polynomial");
        assert_eq!(v["result"]["value"][1]["mu"], 1);
        assert_eq!(v["result"]["value"][1]["coeff"], "18");
        assert_eq!(v["cross_checks"][0]["status"], "ok");
        let big = ResultValue::integer(&"123456789012345678901234567890".parse().unwrap());
        assert_eq!(serde_json::to_string(&big).unwrap(), r#"{"kind":"integer","value":"123456789012345678901234567890"}"#);
    }

    #[test]
    fn validation() {
        assert!(OutputRecord::from_json("{}").is_err());
        let mut r = sample();
        r.result = ResultValue::Integer("12a".into());
        assert!(OutputRecord::from_json(&r.to_json()).is_err());
        let mut r = sample();
        if let ResultValue::Polynomial(t) = &mut r.result {
            t.reverse();
        }
        assert!(OutputRecord::from_json(&r.to_json()).is_err());
        let lines = format!("{}\n\n{}\n", sample().to_json(), sample().to_json());
        assert_eq!(OutputRecord::from_json_lines(&lines).unwrap().len(), 2);
    }

    #[test]
    fn text_rendering() {
        let text = sample().to_text();
        assert!(text.starts_with("hexagon a=2\n"));
        assert!(text.contains("result: 1 + 18*mu + mu^2"));
        assert!(text.contains("check product: ok (20)"));
        assert!(!sample().failed());
    }

    fn record() -> impl Strategy<Value = OutputRecord> {
        let poly = prop::collection::btree_map((0u32..4, 0u32..4, -30i32..30), -1000i64..1000, 0..6).prop_map(|m| {
            ResultValue::Polynomial(
                m.into_iter()
                    .filter(|(_, c)| *c != 0)
                    .map(|((mu, u, s), c)| Term { mu, u, q_times_6: 6 * s, coeff: c.to_string() })
                    .collect(),
            )
        });
        let result = prop_oneof![
            "-?[1-9][0-9]{0,40}".prop_map(ResultValue::Integer),
            poly,
            prop::collection::vec("[0-9]{1,20}", 0..5).prop_map(ResultValue::Sequence),
            prop::collection::btree_map("[a-z_]{1,8}", ".{0,12}", 0..4).prop_map(ResultValue::Fields),
            Just(ResultValue::Empty),
        ];
        let params = prop::collection::btree_map(
            "[a-z]{1,6}",
            prop_oneof![any::<i64>().prop_map(Value::from), ".{0,10}".prop_map(Value::from)],
            0..5,
        );
        let check = ("[a-z-]{1,12}", 0..3u8, ".{0,20}").prop_map(|(name, s, details)| CrossCheck {
            name,
            status: [CheckStatus::Ok, CheckStatus::Mismatch, CheckStatus::Skipped][s as usize],
            details,
        });
        ("[a-z -]{1,20}", params, result, prop::collection::vec(check, 0..4), any::<u64>()).prop_map(
            |(command, parameters, result, cross_checks, timing_us)| OutputRecord {
                command,
                parameters,
                result,
                cross_checks,
                timing_us,
            },
        )
    }

    proptest! {
        #[test]
        fn serialization_round_trip(r in record()) {
            let back = OutputRecord::from_json(&r.to_json()).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
