//! Fixed cross-check suites, each reported as one record.

use anyhow::Result;
use detcount::exact::{det, det_one_plus_mu};
use detcount::oracles::{
    count_nonintersecting_families, enumerate_cspp, enumerate_plane_partitions, lgv_matrix, Constraint, PathProblem,
    Point,
};
use detcount::qcounts::{q_half_hexagon, q_macmahon, q_macmahon_product, q_poincare};
use detcount::tiling::{glued_lozenge_total, hexagon_winding_poly, macmahon_product, parallel_det};
use detcount::transfer::{h, p, t, t_ceiling, w, w_ceiling, z};
use detcount::{IntMatrix, LaurentPoly};

use crate::args::{Global, Suite};
use crate::commands::{table_rows, Builder};
use crate::record::{CrossCheck, OutputRecord, ResultValue};

fn lgv(b: &mut Builder, budget: u64) -> Result<()> {
    let pt = Point::new;
    let mut problems: Vec<(String, PathProblem)> = Vec::new();
    for (a, bb, c) in [(2, 2, 2), (3, 2, 1), (2, 3, 2), (3, 3, 2)] {
        problems.push((format!("hexagon-{a}{bb}{c}"), PathProblem::hexagon(a, bb, c)));
    }
    let starts = vec![pt(2, 0), pt(4, 0), pt(5, 0)];
    let ends = vec![pt(0, 1), pt(0, 3), pt(0, 4)];
    for (name, constraint) in [
        ("free", Constraint::None),
        ("wall", Constraint::Wall),
        ("ceiling", Constraint::Ceiling(5)),
        ("broken", Constraint::BrokenCeiling(vec![pt(1, 5), pt(3, 7)])),
    ] {
        problems.push((name.to_string(), PathProblem::new(starts.clone(), ends.clone(), constraint)?));
    }
    for (name, problem) in problems {
        let fam = count_nonintersecting_families(&problem, budget)?;
        let d = det(&lgv_matrix(&problem, budget)?)?;
        b.check(CrossCheck::compare(&format!("lgv-{name}"), &fam, &d));
    }
    Ok(())
}

fn identities(b: &mut Builder) -> Result<()> {
    let mut decomposition = true;
    let mut conjugacy = true;
    for a in 0..=4 {
        for bb in 0..=4 {
            for c in 0..=4 {
                let right = IntMatrix::product(&[&w(bb, a).transpose(), &p(bb), &t(bb, c), &p(c), &w(c, a)])?;
                let zz = z(bb, a).mul(&z(c, a).transpose())?;
                decomposition &= h(bb, c, a) == right.add(&zz)?;
                let conj = det(&zz.to_poly().add(&right.to_poly().scale(&LaurentPoly::mu()))?)?;
                conjugacy &= conj == hexagon_winding_poly(a, bb, c)?;
                let total = macmahon_product(a, bb, c);
                b.check(CrossCheck::compare(&format!("macmahon-{a}{bb}{c}"), &parallel_det(a, bb, c), &total));
            }
        }
    }
    b.check(CrossCheck::compare("parallel-decomposition", &decomposition, &true));
    b.check(CrossCheck::compare("winding-conjugacy", &conjugacy, &true));
    let corner = (0..=8).all(|a| (0..=8).all(|bb| {
        let k = a.min(bb);
        w(a, k).mul(&w(bb, k).transpose()).map(|f| f == t(a, bb)).unwrap_or(false)
    }));
    b.check(CrossCheck::compare("corner-factorization", &corner, &true));
    let mut ceiling = true;
    for m in 0..=8usize {
        for c in [m.div_ceil(2), m / 2 + 1] {
            for a in 0..=m.min(6) {
                for bb in 0..=m.min(6) {
                    ceiling &= t_ceiling(m, a, bb) == w_ceiling(m, a, c).mul(&w_ceiling(m, bb, c).transpose())?;
                }
            }
        }
    }
    b.check(CrossCheck::compare("ceiling-factorization", &ceiling, &true));
    for n in 1..=4 {
        let d = det_one_plus_mu(&t(n, n))?.eval_all_one();
        b.check(CrossCheck::compare(&format!("glued-lozenge-{n}"), &d, &glued_lozenge_total(n)));
    }
    Ok(())
}

fn q_suite(b: &mut Builder, budget: u64) -> Result<()> {
    for (a, bb, c) in [(1, 1, 1), (2, 2, 2), (3, 2, 1), (3, 3, 2), (1, 2, 9)] {
        let d = q_macmahon(a, bb, c)?;
        b.check(CrossCheck::compare(&format!("q-product-{a}{bb}{c}"), &d, &q_macmahon_product(a, bb, c)?));
        let pp = enumerate_plane_partitions(a, bb, c, budget)?;
        b.check(CrossCheck::compare(&format!("q-enumeration-{a}{bb}{c}"), &d, &pp));
    }
    let fig: LaurentPoly = "1 + mu*q + mu*q^3 + mu*q^5 + mu*q^7 + mu^2*q^8".parse()?;
    b.check(CrossCheck::compare("q-half-hexagon-2", &q_half_hexagon(2)?, &fig));
    let p3: LaurentPoly = "1 + u + u*q + u*q^2 + u^3*q^2 + 2*u^3*q^3 + 2*u^3*q^4 + 2*u^3*q^5 + u^3*q^6 \
        + u^4*q^3 + u^4*q^4 + 2*u^4*q^5 + u^4*q^6 + u^4*q^7 + u^5*q^5 + u^5*q^6 + 2*u^5*q^7 + u^5*q^8 + u^5*q^9 \
        + u^6*q^6 + 2*u^6*q^7 + 2*u^6*q^8 + 2*u^6*q^9 + u^6*q^10 + u^8*q^10 + u^8*q^11 + u^8*q^12 + u^9*q^12"
        .parse()?;
    b.check(CrossCheck::compare("q-poincare-3", &q_poincare(3)?, &p3));
    for n in 1..=3 {
        let cspp = enumerate_cspp(n, budget)?;
        b.check(CrossCheck::compare(&format!("cspp-{n}"), &cspp, &glued_lozenge_total(n)));
    }
    Ok(())
}

pub fn run(suite: Suite, g: &Global) -> Result<OutputRecord> {
    let name = match suite {
        Suite::Lgv => "lgv",
        Suite::Identities => "identities",
        Suite::Q => "q",
        Suite::Table1 => "table1",
        Suite::All => "all",
    };
    let mut b = Builder::new("verify");
    b.param("suite", name);
    if matches!(suite, Suite::Lgv | Suite::All) {
        lgv(&mut b, g.budget)?;
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        identities(&mut b)?;
    }
    if matches!(suite, Suite::Q | Suite::All) {
        q_suite(&mut b, g.budget)?;
    }
    if matches!(suite, Suite::Table1 | Suite::All) {
        table_rows(8, 4, &mut b)?;
    }
    Ok(b.finish(ResultValue::Empty))
}
