use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::Result;
use detcount::asymptotics::{
    asm_growth_ratio, conjecture_ratio, count_p_r, four_arch_middle, kappa, table1_reference, Source,
};
use detcount::fpl::{fpl_halfturn, fpl_hv, fpl_nested3, fpl_nested4, fpl_nested5, fpl_vertical};
use detcount::oracles::{
    asm_number, count_nonintersecting_families, enumerate_cspp, enumerate_plane_partitions, lgv_matrix, parse_points,
    selfconjugate_schur_sum, signed_family_sum, Constraint, PathProblem, SchurWeight,
};
use detcount::qcounts::{q_cspp, q_half_hexagon, q_macmahon, q_macmahon_product, q_mu_hexagon, q_poincare};
use detcount::tiling::{
    glued_lozenge_poly, glued_lozenge_total, half_hexagon_closed_form, half_hexagon_fixed_frobenius,
    half_hexagon_poly, hexagon_broken_poly, hexagon_chopped_poly, hexagon_hole_poly, hexagon_winding_poly,
    macmahon_product, parallel_det, poincare_polynomial, schur_dimension, schur_dimension_h,
};
use detcount::exact::det;
use detcount::{BigInt, FrobeniusCoords, LaurentPoly, Partition};
use serde_json::Value;

use crate::args::{AsymCommand, Command, FplCommand, Global, OracleCommand, QCommand, SequenceKind};
use crate::record::{CrossCheck, OutputRecord, ResultValue};
use crate::verify;
use crate::Usage;

pub(crate) struct Builder {
    command: String,
    parameters: BTreeMap<String, Value>,
    checks: Vec<CrossCheck>,
    start: Instant,
}

impl Builder {
    pub(crate) fn new(command: &str) -> Self {
        Builder { command: command.into(), parameters: BTreeMap::new(), checks: Vec::new(), start: Instant::now() }
    }

    pub(crate) fn param(&mut self, k: &str, v: impl Into<Value>) -> &mut Self {
        self.parameters.insert(k.into(), v.into());
        self
    }

    pub(crate) fn check(&mut self, c: CrossCheck) -> &mut Self {
        self.checks.push(c);
        self
    }

    pub(crate) fn finish(self, result: ResultValue) -> OutputRecord {
        OutputRecord {
            command: self.command,
            parameters: self.parameters,
            result,
            cross_checks: self.checks,
            timing_us: self.start.elapsed().as_micros() as u64,
        }
    }
}

fn need(v: Option<usize>, flag: char, cmd: &str) -> Result<usize> {
    v.ok_or_else(|| Usage(format!("{cmd} needs -{flag}")).into())
}

/// Polynomial when `--mu` is given, otherwise its value at `mu = 1`.
fn mu_result(g: &Global, p: &LaurentPoly) -> ResultValue {
    if g.mu {
        ResultValue::polynomial(p)
    } else {
        ResultValue::integer(&p.eval_all_one())
    }
}

fn sizes(g: &Global, cmd: &str, flags: &str, b: &mut Builder) -> Result<Vec<usize>> {
    flags
        .chars()
        .map(|f| {
            let v = match f {
                'a' => g.a,
                'b' => g.b,
                'c' => g.c,
                'd' => g.d,
                'e' => g.e,
                'm' => g.m,
                'p' => g.p,
                'q' => g.q,
                _ => unreachable!("known size flag"),
            };
            let v = need(v, f, cmd)?;
            b.param(&f.to_string(), v as u64);
            Ok(v)
        })
        .collect()
}

pub fn execute(cmd: &Command, g: &Global) -> Result<Vec<OutputRecord>> {
    let rec = match cmd {
        Command::Hexagon => {
            let mut b = Builder::new("hexagon");
            let s = sizes(g, "hexagon", "abc", &mut b)?;
            let poly = hexagon_winding_poly(s[0], s[1], s[2])?;
            let total = poly.eval_all_one();
            b.param("mu", g.mu);
            b.check(CrossCheck::compare("product-formula", &total, &macmahon_product(s[0], s[1], s[2])));
            b.check(CrossCheck::compare("parallel-lines-det", &total, &parallel_det(s[0], s[1], s[2])));
            b.finish(mu_result(g, &poly))
        }
        Command::GluedLozenge => {
            let mut b = Builder::new("glued-lozenge");
            let a = sizes(g, "glued-lozenge", "a", &mut b)?[0];
            let poly = glued_lozenge_poly(a)?;
            b.param("mu", g.mu);
            b.check(CrossCheck::compare("product-formula", &poly.eval_all_one(), &glued_lozenge_total(a)));
            b.finish(mu_result(g, &poly))
        }
        Command::HalfHexagon => {
            let mut b = Builder::new("half-hexagon");
            let a = sizes(g, "half-hexagon", "a", &mut b)?[0];
            let poly = half_hexagon_poly(a)?;
            b.param("mu", g.mu);
            b.check(CrossCheck::compare("closed-form", &poly.eval_all_one(), &half_hexagon_closed_form(a)));
            b.finish(mu_result(g, &poly))
        }
        Command::SchurDim(args) => {
            let mut b = Builder::new("schur-dim");
            let a = sizes(g, "schur-dim", "a", &mut b)?[0];
            let (y, fc) = match (&args.partition, &args.frobenius) {
                (Some(p), _) => (p.parse::<Partition>()?, None),
                (None, Some(f)) => {
                    let fc: FrobeniusCoords = f.parse()?;
                    (fc.to_partition(), Some(fc))
                }
                (None, None) => return Err(Usage("schur-dim needs --partition or --frobenius".into()).into()),
            };
            b.param("partition", y.to_string());
            let dim = schur_dimension(&y, a)?;
            b.check(CrossCheck::compare("jacobi-trudi-h", &dim, &schur_dimension_h(&y, a)?));
            b.check(CrossCheck::compare("hook-content", &dim, &detcount::oracles::hook_content_dimension(&y, a)));
            if let Some(fc) = fc {
                if y.is_self_conjugate() {
                    let tilings = half_hexagon_fixed_frobenius(&fc, a)?;
                    b.check(CrossCheck::compare("half-hexagon-minor", &tilings, &dim));
                }
            }
            b.finish(ResultValue::integer(&dim))
        }
        Command::Poincare => {
            let mut b = Builder::new("poincare");
            let a = sizes(g, "poincare", "a", &mut b)?[0];
            let poly = poincare_polynomial(a)?;
            b.check(CrossCheck::compare("value-at-one", &poly.eval_all_one(), &half_hexagon_closed_form(a)));
            let schur = selfconjugate_schur_sum(a, SchurWeight::Unit, g.budget)?;
            b.check(CrossCheck::compare("schur-sum", &poly, &schur));
            b.finish(ResultValue::polynomial(&poly))
        }
        Command::HexHole => {
            let mut b = Builder::new("hex-hole");
            let s = sizes(g, "hex-hole", "abcm", &mut b)?;
            let poly = hexagon_hole_poly(s[0], s[1], s[2], s[3])?;
            if s[3] == 0 {
                b.check(CrossCheck::compare("no-hole", &poly, &hexagon_winding_poly(s[0], s[1], s[2])?));
            }
            b.param("mu", g.mu);
            b.finish(mu_result(g, &poly))
        }
        Command::HexChopped => {
            let mut b = Builder::new("hex-chopped");
            let s = sizes(g, "hex-chopped", "abcmpq", &mut b)?;
            let poly = hexagon_chopped_poly(s[0], s[1], s[2], s[3], s[4], s[5])?;
            b.param("mu", g.mu);
            b.finish(mu_result(g, &poly))
        }
        Command::HexBroken(x) => {
            let mut b = Builder::new("hex-broken");
            for (k, v) in [("a1", x.a1), ("a2", x.a2), ("b1", x.b1), ("b2", x.b2), ("c1", x.c1), ("c2", x.c2)] {
                b.param(k, v as u64);
            }
            let poly = hexagon_broken_poly(x.a1, x.a2, x.b1, x.b2, x.c1, x.c2)?;
            if x.a2 == 0 && x.b2 == 0 && x.c2 == 0 {
                b.check(CrossCheck::compare("unbroken", &poly, &hexagon_winding_poly(x.a1, x.b1, x.c1)?));
            }
            b.param("mu", g.mu);
            b.finish(mu_result(g, &poly))
        }
        Command::Fpl(f) => fpl(f, g)?,
        Command::Q(q) => qcmd(q, g)?,
        Command::Oracle(o) => oracle(o, g)?,
        Command::Asym(a) => asym(a, g)?,
        Command::Sequence(s) => sequence(s.which, s.max)?,
        Command::Verify(v) => verify::run(v.suite, g)?,
    };
    Ok(vec![rec])
}

fn fpl(f: &FplCommand, g: &Global) -> Result<OutputRecord> {
    let rec = match f {
        FplCommand::Nested3 => {
            let mut b = Builder::new("fpl nested3");
            let s = sizes(g, "fpl nested3", "abc", &mut b)?;
            let n = fpl_nested3(s[0], s[1], s[2]);
            b.check(CrossCheck::compare("four-bundle-d0", &n, &fpl_nested4(s[0], s[1], s[2], 0)?));
            b.finish(ResultValue::integer(&n))
        }
        FplCommand::Nested4 => {
            let mut b = Builder::new("fpl nested4");
            let s = sizes(g, "fpl nested4", "abcd", &mut b)?;
            let n = fpl_nested4(s[0], s[1], s[2], s[3])?;
            b.check(CrossCheck::compare("five-bundle-e0", &n, &fpl_nested5(s[0], s[1], 0, s[2], s[3])?));
            b.finish(ResultValue::integer(&n))
        }
        FplCommand::Nested5 => {
            let mut b = Builder::new("fpl nested5");
            let s = sizes(g, "fpl nested5", "abecd", &mut b)?;
            let n = fpl_nested5(s[0], s[1], s[2], s[3], s[4])?;
            b.check(CrossCheck::compare("rotation", &n, &fpl_nested5(s[3], s[4], s[2], s[0], s[1])?));
            b.finish(ResultValue::integer(&n))
        }
        FplCommand::Ht => {
            let mut b = Builder::new("fpl ht");
            let s = sizes(g, "fpl ht", "abe", &mut b)?;
            let n = fpl_halfturn(s[0], s[1], s[2])?;
            if s[2] == 0 {
                let p = glued_lozenge_poly(s[0] + s[1])?;
                b.check(CrossCheck::compare("glued-lozenge", &LaurentPoly::constant(n.clone()), &p.mu_coeff(s[1] as u32)));
            }
            b.finish(ResultValue::integer(&n))
        }
        FplCommand::Vs => {
            let mut b = Builder::new("fpl vs");
            let s = sizes(g, "fpl vs", "abe", &mut b)?;
            b.finish(ResultValue::integer(&fpl_vertical(s[0], s[1], s[2])?))
        }
        FplCommand::Hvs => {
            let mut b = Builder::new("fpl hvs");
            let s = sizes(g, "fpl hvs", "ae", &mut b)?;
            b.finish(ResultValue::integer(&fpl_hv(s[0], s[1])?))
        }
    };
    Ok(rec)
}

/// Boxes up to this volume are also enumerated directly.
const ORACLE_VOLUME: usize = 18;

fn qcmd(q: &QCommand, g: &Global) -> Result<OutputRecord> {
    let rec = match q {
        QCommand::Macmahon => {
            let mut b = Builder::new("q macmahon");
            let s = sizes(g, "q macmahon", "abc", &mut b)?;
            let p = q_macmahon(s[0], s[1], s[2])?;
            b.check(CrossCheck::compare("q-product", &p, &q_macmahon_product(s[0], s[1], s[2])?));
            if s[0] * s[1] * s[2] <= ORACLE_VOLUME {
                let pp = enumerate_plane_partitions(s[0], s[1], s[2], g.budget)?;
                b.check(CrossCheck::compare("enumeration", &p, &pp));
            } else {
                b.check(CrossCheck::skipped("enumeration", format!("volume above {ORACLE_VOLUME}")));
            }
            b.finish(ResultValue::polynomial(&p))
        }
        QCommand::Hexagon => {
            let mut b = Builder::new("q hexagon");
            let s = sizes(g, "q hexagon", "abc", &mut b)?;
            let p = q_mu_hexagon(s[0], s[1], s[2])?;
            b.check(CrossCheck::compare("q-one", &p.subs_q_one(), &hexagon_winding_poly(s[0], s[1], s[2])?));
            b.finish(ResultValue::polynomial(&p))
        }
        QCommand::Cspp => {
            let mut b = Builder::new("q cspp");
            let a = sizes(g, "q cspp", "a", &mut b)?[0];
            let p = q_cspp(a)?;
            b.check(CrossCheck::compare("q-one", &p.subs_q_one(), &glued_lozenge_poly(a)?));
            b.finish(ResultValue::polynomial(&p))
        }
        QCommand::HalfHexagon => {
            let mut b = Builder::new("q half-hexagon");
            let a = sizes(g, "q half-hexagon", "a", &mut b)?[0];
            let p = q_half_hexagon(a)?;
            b.check(CrossCheck::compare("q-one", &p.subs_q_one(), &half_hexagon_poly(a)?));
            b.finish(ResultValue::polynomial(&p))
        }
        QCommand::Poincare => {
            let mut b = Builder::new("q poincare");
            let a = sizes(g, "q poincare", "a", &mut b)?[0];
            let p = q_poincare(a)?;
            let twisted = selfconjugate_schur_sum(a, SchurWeight::PrincipalTwisted, g.budget)?;
            b.check(CrossCheck::compare("twisted-schur-sum", &p, &twisted));
            b.finish(ResultValue::polynomial(&p))
        }
    };
    Ok(rec)
}

fn oracle(o: &OracleCommand, g: &Global) -> Result<OutputRecord> {
    let rec = match o {
        OracleCommand::Paths(args) => {
            let mut b = Builder::new("oracle paths");
            b.param("starts", args.starts.clone())
                .param("ends", args.ends.clone())
                .param("constraint", args.constraint.clone());
            let constraint: Constraint = args.constraint.parse()?;
            let problem = PathProblem::new(parse_points(&args.starts)?, parse_points(&args.ends)?, constraint)?;
            let families = count_nonintersecting_families(&problem, g.budget)?;
            let lgv = det(&lgv_matrix(&problem, g.budget)?)?;
            let signed = signed_family_sum(&problem, g.budget)?;
            b.check(CrossCheck::compare("lgv-signed-sum", &lgv, &signed));
            if families == lgv {
                b.check(CrossCheck::compare("lgv-det", &families, &lgv));
            } else {
                b.check(CrossCheck::skipped(
                    "lgv-det",
                    format!("det {lgv} differs from the count: other pairings contribute"),
                ));
            }
            b.finish(ResultValue::integer(&families))
        }
        OracleCommand::Pp => {
            let mut b = Builder::new("oracle pp");
            let s = sizes(g, "oracle pp", "abc", &mut b)?;
            let p = enumerate_plane_partitions(s[0], s[1], s[2], g.budget)?;
            b.check(CrossCheck::compare("q-determinant", &p, &q_macmahon(s[0], s[1], s[2])?));
            b.finish(ResultValue::polynomial(&p))
        }
        OracleCommand::Cspp => {
            let mut b = Builder::new("oracle cspp");
            let a = sizes(g, "oracle cspp", "a", &mut b)?[0];
            let n = enumerate_cspp(a, g.budget)?;
            b.check(CrossCheck::compare("product-formula", &n, &glued_lozenge_total(a)));
            b.finish(ResultValue::integer(&n))
        }
        OracleCommand::SchurSum => {
            let mut b = Builder::new("oracle schur-sum");
            let a = sizes(g, "oracle schur-sum", "a", &mut b)?[0];
            let p = selfconjugate_schur_sum(a, SchurWeight::Unit, g.budget)?;
            b.check(CrossCheck::compare("poincare", &p, &poincare_polynomial(a)?));
            b.finish(ResultValue::polynomial(&p))
        }
    };
    Ok(rec)
}

pub(crate) fn table_rows(max_p: usize, max_r: usize, b: &mut Builder) -> Result<Vec<BTreeMap<String, String>>> {
    let mut rows = Vec::new();
    for e in table1_reference().into_iter().filter(|e| e.p <= max_p && e.r <= max_r) {
        let source = match e.source {
            Source::Computed => "computed",
            Source::DataOnly => "data-only",
        };
        let name = format!("p{}-r{}", e.p, e.r);
        match e.source {
            Source::Computed => {
                b.check(CrossCheck::compare(&name, &count_p_r(e.p, e.r)?, &e.value));
            }
            Source::DataOnly => {
                b.check(CrossCheck::skipped(&name, "reference data only"));
            }
        }
        rows.push(
            [
                ("p".to_string(), e.p.to_string()),
                ("r".to_string(), e.r.to_string()),
                ("value".to_string(), e.value.to_string()),
                ("source".to_string(), source.to_string()),
            ]
            .into_iter()
            .collect(),
        );
    }
    Ok(rows)
}

fn asym(a: &AsymCommand, g: &Global) -> Result<OutputRecord> {
    let rec = match *a {
        AsymCommand::Table1 { max_p, max_r } => {
            let mut b = Builder::new("asym table1");
            b.param("max_p", max_p as u64).param("max_r", max_r as u64);
            let rows = table_rows(max_p, max_r, &mut b)?;
            b.finish(ResultValue::Table(rows))
        }
        AsymCommand::Ratio { r } => {
            let mut b = Builder::new("asym ratio");
            let p = sizes(g, "asym ratio", "p", &mut b)?[0];
            b.param("r", r as u64).param("precision", g.precision);
            let est = conjecture_ratio(p, r, g.precision)?;
            let mut fields = BTreeMap::new();
            fields.insert("count".to_string(), est.count.to_string());
            fields.insert("log_count".to_string(), est.log_count.to_string());
            fields.insert("kappa".to_string(), kappa(g.precision).to_string());
            fields.insert("alpha".to_string(), est.alpha.to_string());
            if let Some(k) = &est.kappa_ratio {
                fields.insert("kappa_ratio".to_string(), k.to_string());
            }
            if r == 1 {
                fields.insert("asm_ratio".to_string(), asm_growth_ratio(p - 1, g.precision)?.to_string());
            }
            b.check(CrossCheck::skipped("trend", "estimates only; no limit is asserted"));
            b.finish(ResultValue::Fields(fields))
        }
        AsymCommand::FourArch { r } => {
            let mut b = Builder::new("asym four-arch");
            b.param("r", r as u64);
            if r == 0 {
                return Err(Usage("four-arch needs r >= 1".into()).into());
            }
            let mid = four_arch_middle(r)?;
            b.check(CrossCheck::compare("four-bundle-det", &mid, &fpl_nested4(r, r, r, r)?));
            b.finish(ResultValue::integer(&mid))
        }
    };
    Ok(rec)
}

fn sequence(which: SequenceKind, max: usize) -> Result<OutputRecord> {
    let name = match which {
        SequenceKind::Tilglu => "tilglu",
        SequenceKind::Tilhalf => "tilhalf",
        SequenceKind::Asm => "asm",
    };
    let mut b = Builder::new(&format!("sequence {name}"));
    b.param("max", max as u64);
    let mut values: Vec<BigInt> = Vec::with_capacity(max);
    for a in 1..=max {
        let v = match which {
            SequenceKind::Tilglu => {
                let v = glued_lozenge_poly(a)?.eval_all_one();
                b.check(CrossCheck::compare(&format!("product-{a}"), &v, &glued_lozenge_total(a)));
                v
            }
            SequenceKind::Tilhalf => {
                let v = half_hexagon_poly(a)?.eval_all_one();
                b.check(CrossCheck::compare(&format!("closed-form-{a}"), &v, &half_hexagon_closed_form(a)));
                v
            }
            SequenceKind::Asm => asm_number(a),
        };
        values.push(v);
    }
    Ok(b.finish(ResultValue::Sequence(values.iter().map(ToString::to_string).collect())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::Format;

    fn global() -> Global {
        Global {
            format: Format::Json,
            out: None,
            budget: 1_000_000,
            precision: 20,
            a: None,
            b: None,
            c: None,
            d: None,
            e: None,
            m: None,
            p: None,
            q: None,
            mu: false,
        }
    }

    #[test]
    fn missing_size_is_a_usage_error() {
        let err = execute(&Command::Hexagon, &global()).unwrap_err();
        assert!(err.downcast_ref::<Usage>().is_some());
    }

    #[test]
    fn table_rows_carry_their_source() {
        let mut b = Builder::new("t");
        let rows = table_rows(5, 3, &mut b).unwrap();
        assert_eq!(rows.len(), 12);
        let p5r2 = rows.iter().find(|r| r["p"] == "5" && r["r"] == "2").unwrap();
        assert_eq!(p5r2["source"], "data-only");
        assert_eq!(p5r2["value"], "5100260");
        let rec = b.finish(ResultValue::Empty);
        assert!(!rec.failed());
    }

    #[test]
    fn sequences() {
        let rec = sequence(SequenceKind::Asm, 5).unwrap();
        assert_eq!(rec.result, ResultValue::Sequence(["1", "2", "7", "42", "429"].map(String::from).to_vec()));
    }
}
